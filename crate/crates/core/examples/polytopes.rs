// Vertex lists, dimensions and vertex counts of the three polytopes.

use boole::instance::parse_family;
use boole::polytope::{
    affine_dim, correlation_vertices, union_vertices, venn_vertices, vertex_count_formula,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let family = parse_family(include_str!("../fixtures/family_complete2.json"))?;
    let tau = venn_vertices(&family);
    print!("{}", tau.dump());
    println!("dim tau = {}", affine_dim(&tau)?);

    for text in [
        include_str!("../fixtures/family_pair.json"),
        include_str!("../fixtures/family_nested.json"),
        include_str!("../fixtures/family_complete2.json"),
    ] {
        let family = parse_family(text)?;
        let rho = correlation_vertices(&family);
        let sigma = union_vertices(&family);
        let counts = vertex_count_formula(&family);
        assert_eq!(
            (rho.vertices.len(), sigma.vertices.len()),
            (counts.rho, counts.sigma)
        );
        println!(
            "{:?}: rho {} vertices (dim {}), sigma {} vertices (dim {})",
            rho.coord_labels,
            counts.rho,
            affine_dim(&rho)?,
            counts.sigma,
            affine_dim(&sigma)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
