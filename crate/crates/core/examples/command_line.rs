// Driving the command line in-process.

use boole::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/c5.json");
    let result = run(["boole", "reduce-color", fixture, "--check"]);
    print!("{}", result.stdout);
    assert_eq!(result.exit_code, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
