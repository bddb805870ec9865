//! Graph constructions relating union bounds to colouring and cliques.
//!
//! * [`color_gadget`] turns a graph into an instance whose minimum union
//!   probability is `χ_f(G) / n`.
//! * [`max_union_via_dual`] builds the instance with `b_{u} = 1/n`,
//!   `b_{u,v} = w_{uv}` on edges and `0` on non-edges; its maximum union
//!   probability is `1 − clique_lp(G, w)` whenever every weight is at most
//!   `1/n²`.
//! * [`phi_membership`] and [`has_k_clique`] test the clique polyhedron
//!   `{y : Σ_{e ⊆ T} y_e ≤ |T| − 1 for every clique T}` directly by listing
//!   cliques; the constant vector `2/(k−1)` lies outside it exactly when the
//!   graph has a clique on `k` vertices.
//!
//! Independent sets and cliques are listed exhaustively, so graphs are capped
//! at [`GRAPH_LIMIT`] vertices.

use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::hailperin::union_bounds;
use crate::instance::{BooleInstance, SetFamily, SubsetMask};
use crate::numerics::{lp_solve, parse_rat, LinearProgram, LpOutcome, Rat, Relation, Sense};
use crate::{Error, Result};

/// Largest vertex count for clique and independent-set enumeration.
pub const GRAPH_LIMIT: usize = 12;

/// Simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted pairs `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    /// Bit `v − 1` of `adjacency[u − 1]` is set when `{u, v}` is an edge.
    adjacency: Vec<u32>,
}

impl Graph {
    /// Edges may be given in any order and orientation; they are stored
    /// sorted.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 32 {
            return Err(Error::GuardExceeded {
                what: "vertex count",
                actual: n,
                limit: 32,
            });
        }
        let mut sorted = Vec::with_capacity(edges.len());
        let mut adjacency = vec![0u32; n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if adjacency[u - 1] & (1 << (v - 1)) != 0 {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u - 1] |= 1 << (v - 1);
            adjacency[v - 1] |= 1 << (u - 1);
            sorted.push((u, v));
        }
        sorted.sort_unstable();
        Ok(Graph {
            n,
            edges: sorted,
            adjacency,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).expect("complete graph")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        Graph::new(n, &edges).expect("path graph")
    }

    /// Cycle `1 – 2 – … – n – 1`, for `n ≥ 3`.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((1, n));
        Graph::new(n, &edges).expect("cycle graph")
    }

    /// Petersen graph: outer 5-cycle `1..5`, inner pentagram `6..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((1 + i, 1 + (i + 1) % 5));
            edges.push((6 + i, 6 + (i + 2) % 5));
            edges.push((1 + i, 6 + i));
        }
        Graph::new(10, &edges).expect("Petersen graph")
    }

    /// The graph whose edges are the set bits of `code`, taken over the pairs
    /// `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_edge_code(n: usize, code: u64) -> Self {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Graph::new(n, &edges).expect("edge code graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && u >= 1
            && u <= self.n
            && v >= 1
            && v <= self.n
            && self.adjacency[u - 1] & (1 << (v - 1)) != 0
    }

    pub fn edge_mask(&self, edge: (usize, usize)) -> SubsetMask {
        SubsetMask::singleton(edge.0).union(SubsetMask::singleton(edge.1))
    }

    /// Whether no edge has both ends in `set`.
    pub fn is_independent(&self, set: SubsetMask) -> bool {
        set.elements()
            .iter()
            .all(|&u| self.adjacency[u - 1] & set.bits() == 0)
    }

    /// Whether every pair of vertices in `set` is joined by an edge.
    pub fn is_clique(&self, set: SubsetMask) -> bool {
        set.elements()
            .iter()
            .all(|&u| set.bits() & !(1 << (u - 1)) & !self.adjacency[u - 1] == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0u32;
            for u in SubsetMask::from_bits(frontier).elements() {
                next |= self.adjacency[u - 1];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == SubsetMask::full(self.n).bits()
    }

    fn guard(&self) -> Result<()> {
        if self.n > GRAPH_LIMIT {
            return Err(Error::GuardExceeded {
                what: "vertex count",
                actual: self.n,
                limit: GRAPH_LIMIT,
            });
        }
        Ok(())
    }

    /// Every nonempty clique, including single vertices and non-maximal ones,
    /// in the order produced by growing cliques with larger vertices.
    pub fn cliques(&self) -> Result<Vec<SubsetMask>> {
        self.guard()?;
        let mut out = Vec::new();
        for v in 1..=self.n {
            let later = !((1u32 << v) - 1);
            self.extend_clique(
                SubsetMask::singleton(v),
                self.adjacency[v - 1] & later,
                &mut out,
            );
        }
        Ok(out)
    }

    /// Records `clique`, then every extension by vertices in `candidates`
    /// (all adjacent to the whole clique and larger than its maximum).
    fn extend_clique(&self, clique: SubsetMask, candidates: u32, out: &mut Vec<SubsetMask>) {
        out.push(clique);
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            let later = !((1u32 << v) - 1);
            self.extend_clique(
                clique.union(SubsetMask::singleton(v)),
                candidates & self.adjacency[v - 1] & later,
                out,
            );
        }
    }

    /// Every nonempty independent set, in mask order.
    pub fn independent_sets(&self) -> Result<Vec<SubsetMask>> {
        self.guard()?;
        Ok(SubsetMask::all(self.n)
            .filter(|s| !s.is_empty() && self.is_independent(*s))
            .collect())
    }

    /// Clique number by checking every vertex subset.
    pub fn clique_number_brute_force(&self) -> Result<usize> {
        self.guard()?;
        Ok(SubsetMask::all(self.n)
            .filter(|s| self.is_clique(*s))
            .map(SubsetMask::len)
            .max()
            .unwrap_or(0))
    }
}

/// A graph with a nonnegative rational weight per edge, in edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<Rat>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<Rat>) -> Result<Self> {
        if weights.len() != graph.edges.len() {
            return Err(Error::LengthMismatch {
                expected: graph.edges.len(),
                actual: weights.len(),
            });
        }
        for (&(u, v), w) in graph.edges.iter().zip(&weights) {
            if w.is_negative() {
                return Err(Error::WeightOutOfRange {
                    u,
                    v,
                    weight: w.to_string(),
                    max: "inf".to_string(),
                });
            }
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Weights as `(edge, weight)` pairs; edges need not be pre-sorted.
    pub fn from_pairs(n: usize, weighted: &[((usize, usize), Rat)]) -> Result<Self> {
        let edges: Vec<_> = weighted.iter().map(|(e, _)| *e).collect();
        let graph = Graph::new(n, &edges)?;
        let weights = graph
            .edges
            .iter()
            .map(|&(u, v)| {
                weighted
                    .iter()
                    .find(|((a, b), _)| (*a.min(b), *a.max(b)) == (u, v))
                    .map(|(_, w)| w.clone())
                    .expect("edge came from the list")
            })
            .collect();
        WeightedGraph::new(graph, weights)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }
}

/// The colouring instance: `F` = singletons then edges, `b_{u} = 1/n`,
/// `b_{u,v} = 0` on edges. Uniform mass on the singleton atoms realizes it.
pub fn color_gadget(graph: &Graph) -> BooleInstance {
    let n = graph.n();
    let third = Rat::new(1.into(), (n as i64).into());
    let mut members: Vec<SubsetMask> = (1..=n).map(SubsetMask::singleton).collect();
    members.extend(graph.edges().iter().map(|&e| graph.edge_mask(e)));
    let mut probs = vec![third; n];
    probs.extend(std::iter::repeat_n(Rat::zero(), graph.edges().len()));
    let family = SetFamily::new(n, members).expect("gadget family is valid");
    BooleInstance::new(family, probs).expect("gadget probabilities are valid")
}

/// `χ_f(G)`: minimum `Σ_I y_I` over nonempty independent sets `I`, subject to
/// `Σ_{I ∋ u} y_I ≥ 1` for every vertex and `y ≥ 0`.
pub fn fractional_chromatic(graph: &Graph) -> Result<Rat> {
    let sets = graph.independent_sets()?;
    let mut lp = LinearProgram::new(sets.len()).with_objective(vec![Rat::one(); sets.len()]);
    for u in 1..=graph.n() {
        let row = sets
            .iter()
            .map(|s| {
                if s.contains(u) {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        lp.add_row(row, Relation::Ge, Rat::one());
    }
    match lp_solve(&lp, Sense::Minimize) {
        LpOutcome::Optimal { value, .. } => Ok(value),
        other => unreachable!("covering program is feasible and bounded: {other:?}"),
    }
}

/// The clique program: maximize `Σ_e w_e y_e` over free `y` subject to
/// `Σ_{e ⊆ T} y_e ≤ |T| − 1` for every clique `T`.
pub fn clique_lp(weighted: &WeightedGraph) -> Result<Rat> {
    let graph = weighted.graph();
    let cliques = graph.cliques()?;
    let edges = graph.edges();
    let mut lp = LinearProgram::new(edges.len()).with_objective(weighted.weights().to_vec());
    lp.set_all_free();
    for t in cliques {
        let row = edges
            .iter()
            .map(|&e| {
                if graph.edge_mask(e).is_subset_of(t) {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        lp.add_row(
            row,
            Relation::Le,
            Rat::from_integer((t.len() as i64 - 1).into()),
        );
    }
    match lp_solve(&lp, Sense::Maximize) {
        LpOutcome::Optimal { value, .. } => Ok(value),
        other => unreachable!("edge cliques bound every variable: {other:?}"),
    }
}

/// The instance queried by [`max_union_via_dual`]: `F` = singletons then all
/// pairs in lexicographic order, `b_{u} = 1/n`, `b_{u,v} = w_{uv}` on edges and
/// `0` on non-edges. Weights must lie in `[0, 1/n²]`.
pub fn dual_chain_instance(weighted: &WeightedGraph) -> Result<BooleInstance> {
    let graph = weighted.graph();
    let n = graph.n();
    if n < 2 {
        return Err(Error::GraphTooSmall("two vertices"));
    }
    if graph.edges().is_empty() {
        return Err(Error::GraphTooSmall("one edge"));
    }
    let cap = Rat::new(1.into(), ((n * n) as i64).into());
    for (&(u, v), w) in graph.edges().iter().zip(weighted.weights()) {
        if w.is_negative() || *w > cap {
            return Err(Error::WeightOutOfRange {
                u,
                v,
                weight: w.to_string(),
                max: cap.to_string(),
            });
        }
    }
    let mut members: Vec<SubsetMask> = (1..=n).map(SubsetMask::singleton).collect();
    let mut probs = vec![Rat::new(1.into(), (n as i64).into()); n];
    for u in 1..=n {
        for v in u + 1..=n {
            members.push(SubsetMask::singleton(u).union(SubsetMask::singleton(v)));
            let w = graph
                .edges()
                .iter()
                .position(|&e| e == (u, v))
                .map_or_else(Rat::zero, |i| weighted.weights()[i].clone());
            probs.push(w);
        }
    }
    BooleInstance::new(SetFamily::new(n, members)?, probs)
}

/// Maximum union probability of [`dual_chain_instance`].
pub fn max_union_via_dual(weighted: &WeightedGraph) -> Result<Rat> {
    let inst = dual_chain_instance(weighted)?;
    Ok(union_bounds(&inst)?.interval.hi)
}

/// Whether `y` (one value per edge, in edge order) satisfies every clique
/// constraint `Σ_{e ⊆ T} y_e ≤ |T| − 1`.
pub fn phi_membership(graph: &Graph, y: &[Rat]) -> Result<bool> {
    if y.len() != graph.edges().len() {
        return Err(Error::LengthMismatch {
            expected: graph.edges().len(),
            actual: y.len(),
        });
    }
    for t in graph.cliques()? {
        let load: Rat = graph
            .edges()
            .iter()
            .zip(y)
            .filter(|(&e, _)| graph.edge_mask(e).is_subset_of(t))
            .map(|(_, v)| v)
            .sum();
        if load > Rat::from_integer((t.len() as i64 - 1).into()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides `ω(G) ≥ k` by testing the constant vector `2/(k−1)` against the
/// clique polyhedron.
///
/// On a clique `T` the constant vector loads `|T|(|T|−1)/(k−1)`, which exceeds
/// `|T| − 1` exactly when `|T| ≥ k`, so a violated constraint means some
/// clique has at least `k` vertices.
pub fn has_k_clique(graph: &Graph, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidCliqueSize(k));
    }
    let kappa = Rat::new(2.into(), ((k - 1) as i64).into());
    let y = vec![kappa; graph.edges().len()];
    Ok(!phi_membership(graph, &y)?)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    w: Option<Vec<String>>,
}

/// Reads `{ "n": 5, "edges": [[1, 2], …] }`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    Graph::new(doc.n, &doc.edges)
}

/// Reads a graph document with a `"w"` list of `"p/q"` weights parallel to
/// `"edges"`.
pub fn parse_weighted_graph(text: &str) -> Result<WeightedGraph> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    let w = doc
        .w
        .ok_or_else(|| Error::MalformedDocument("missing \"w\" weight list".to_string()))?;
    if w.len() != doc.edges.len() {
        return Err(Error::MalformedDocument(format!(
            "{} weights for {} edges",
            w.len(),
            doc.edges.len()
        )));
    }
    let weighted = doc
        .edges
        .iter()
        .zip(&w)
        .map(|(&e, text)| Ok((e, parse_rat(text)?)))
        .collect::<Result<Vec<_>>>()?;
    WeightedGraph::from_pairs(doc.n, &weighted)
}
