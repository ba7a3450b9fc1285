//! Exact homomorphism machinery: endomorphism search, cores, clique number,
//! colourability, and core certification from invariants.

mod certify;
mod clique;
mod coloring;
mod search;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{set_bit, Graph};
use search::HomSearch;

pub use certify::{
    certify_core_by_invariants, nine_vertex_catalog, CatalogEntry, Elimination, NineVertexCatalog,
};
pub use clique::maximum_clique;
pub use coloring::{chromatic_number, find_colouring, has_proper_colouring};

/// Search nodes allowed for each colouring used only to prune searches.
const COLOURING_BUDGET: u64 = 1_000_000;

/// Default cap on the number of vertices for exact searches.
pub const DEFAULT_SEARCH_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_vertices: usize,
    /// The graph is known to be vertex-transitive (every Cayley graph is).
    /// Then a single deleted vertex decides whether a shrinking
    /// endomorphism exists.
    pub vertex_transitive: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_vertices: DEFAULT_SEARCH_CAP,
            vertex_transitive: false,
        }
    }
}

impl SearchOptions {
    pub fn transitive(max_vertices: usize) -> Self {
        SearchOptions {
            max_vertices,
            vertex_transitive: true,
        }
    }

    fn check(&self, g: &Graph, what: &'static str) -> Result<()> {
        if g.order() > self.max_vertices {
            Err(Error::ResourceLimit {
                what,
                size: g.order() as u64,
                cap: self.max_vertices as u64,
            })
        } else {
            Ok(())
        }
    }
}

/// A total map between vertex index sets.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexMap {
    images: Vec<usize>,
}

impl VertexMap {
    pub fn new(images: Vec<usize>) -> Self {
        VertexMap { images }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            images: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, target: usize) -> Self {
        VertexMap {
            images: vec![target; n],
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, u: usize) -> usize {
        self.images[u]
    }

    /// `self ∘ other`, i.e. `u ↦ self(other(u))`.
    pub fn compose(&self, other: &VertexMap) -> VertexMap {
        VertexMap {
            images: other.images.iter().map(|&u| self.images[u]).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.images.iter().all(|&a| seen.insert(a))
    }

    /// Sorted distinct images.
    pub fn image(&self) -> Vec<usize> {
        let mut out = self.images.clone();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Debug for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexMap{:?}", self.images)
    }
}

/// True iff `f` sends every edge of `x` to an edge of `y`.
pub fn is_homomorphism(f: &VertexMap, x: &Graph, y: &Graph) -> Result<bool> {
    if f.len() != x.order() {
        return Err(Error::MapSizeMismatch {
            expected: x.order(),
            found: f.len(),
        });
    }
    if let Some(&bad) = f.images.iter().find(|&&a| a >= y.order()) {
        return Err(Error::InvalidArgument(format!(
            "image {bad} is not a vertex of the target (order {})",
            y.order()
        )));
    }
    Ok(x.edges().all(|(u, v)| y.has_edge(f.apply(u), f.apply(v))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndoConstraint {
    NonInjective,
    ImageStrictlySmaller,
    Any,
}

/// Outcome of an endomorphism search together with its node count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoSearch {
    pub map: Option<VertexMap>,
    pub nodes: u64,
}

pub fn search_endomorphism(
    x: &Graph,
    constraint: EndoConstraint,
    opts: &SearchOptions,
) -> Result<EndoSearch> {
    opts.check(x, "endomorphism search")?;
    let n = x.order();
    let w = x.words();
    let full_row = |skip: Option<usize>| {
        let mut row = vec![0u64; w];
        for a in 0..n {
            if Some(a) != skip {
                set_bit(&mut row, a);
            }
        }
        row
    };
    match constraint {
        EndoConstraint::Any => {
            let domains = full_row(None).repeat(n);
            let mut search = HomSearch::new(x, x);
            let map = search.run(&domains).map(VertexMap::new);
            Ok(EndoSearch {
                map,
                nodes: search.nodes,
            })
        }
        // for finite graphs the two constraints coincide: a map is
        // non-injective iff it misses some vertex
        EndoConstraint::NonInjective | EndoConstraint::ImageStrictlySmaller => {
            let omega = maximum_clique(x).len();
            // χ(X) ≥ chi, from non-colourability proofs that fit the budget
            let mut chi = omega;
            while chi < n && coloring::colourable_within(x, chi, COLOURING_BUDGET) == Some(false) {
                chi += 1;
            }
            let targets: Vec<usize> = if opts.vertex_transitive {
                (0..n.min(1)).collect()
            } else {
                (0..n).collect()
            };
            let mut nodes = 0;
            for v in targets {
                let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                // X -> X - v needs ω(X - v) ≥ ω(X) and χ(X - v) ≥ χ(X)
                let minus = x.induced(&rest);
                if maximum_clique(&minus).len() < omega
                    || coloring::colourable_within(&minus, chi - 1, COLOURING_BUDGET) == Some(true)
                {
                    continue;
                }
                let domains = full_row(Some(v)).repeat(n);
                let mut search = HomSearch::new(x, x);
                let found = search.run(&domains);
                nodes += search.nodes;
                if let Some(images) = found {
                    return Ok(EndoSearch {
                        map: Some(VertexMap::new(images)),
                        nodes,
                    });
                }
            }
            Ok(EndoSearch { map: None, nodes })
        }
    }
}

/// An endomorphism of `x` meeting `constraint`, or `None` after exhausting
/// the search.
pub fn find_endomorphism(
    x: &Graph,
    constraint: EndoConstraint,
    opts: &SearchOptions,
) -> Result<Option<VertexMap>> {
    Ok(search_endomorphism(x, constraint, opts)?.map)
}

/// `f^k` for the least `k ≥ 1` with `f^k ∘ f^k = f^k`.
pub fn idempotent_power(f: &VertexMap) -> VertexMap {
    let mut power = f.clone();
    loop {
        if power.is_idempotent() {
            return power;
        }
        power = power.compose(f);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoreKind {
    /// The core is a complete graph.
    Complete,
    /// The graph is its own core.
    #[serde(rename = "self")]
    SelfCore,
    /// A proper, non-complete retract.
    General,
}

impl fmt::Display for CoreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoreKind::Complete => "complete",
            CoreKind::SelfCore => "self",
            CoreKind::General => "general",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    /// No image-shrinking endomorphism of the core exists; `folds` retractions
    /// led to it and `nodes` search nodes were spent in total.
    Exhaustion { folds: usize, nodes: u64 },
    /// The core is the complete graph on these vertices.
    Clique {
        vertices: Vec<usize>,
        folds: usize,
        nodes: u64,
    },
    /// Every proper candidate core order was ruled out by invariants.
    InvariantChain {
        order: usize,
        clique_number: usize,
        eliminated: Vec<Elimination>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreCertificate {
    pub vertices: Vec<usize>,
    pub retraction: VertexMap,
    pub kind: CoreKind,
    pub evidence: Evidence,
}

impl CoreCertificate {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_complete(&self) -> bool {
        self.kind == CoreKind::Complete
    }

    /// The core as a graph, relabelled to `0..order`.
    pub fn core_graph(&self, parent: &Graph) -> Graph {
        parent.induced(&self.vertices)
    }
}

/// A retraction of `x` onto a maximum clique, which exists iff `χ = ω`.
fn clique_retraction(x: &Graph) -> (Option<VertexMap>, u64) {
    let n = x.order();
    let clique = maximum_clique(x);
    let w = x.words();
    let mut onto = vec![0u64; w];
    for &q in &clique {
        set_bit(&mut onto, q);
    }
    let mut domains = onto.repeat(n);
    for &q in &clique {
        let row = &mut domains[q * w..(q + 1) * w];
        row.fill(0);
        set_bit(row, q);
    }
    let mut search = HomSearch::new(x, x);
    let map = search.run(&domains).map(VertexMap::new);
    (map, search.nodes)
}

/// The core of `x`, by repeated folding: find an endomorphism with smaller
/// image, take its idempotent power (a retraction onto that image), restrict
/// to the image and repeat. The composed retraction maps `x` onto the core.
pub fn compute_core(x: &Graph, opts: &SearchOptions) -> Result<CoreCertificate> {
    opts.check(x, "core computation")?;
    let n = x.order();
    let mut current: Vec<usize> = (0..n).collect();
    let mut retraction = VertexMap::identity(n);
    let mut folds = 0;
    let mut nodes = 0;
    // only the first round may rely on vertex-transitivity
    let mut round_opts = *opts;
    loop {
        let sub = x.induced(&current);
        if sub.is_complete() {
            break;
        }
        let (onto_clique, clique_nodes) = clique_retraction(&sub);
        nodes += clique_nodes;
        let r = match onto_clique {
            Some(r) => r,
            None => {
                let search =
                    search_endomorphism(&sub, EndoConstraint::ImageStrictlySmaller, &round_opts)?;
                round_opts.vertex_transitive = false;
                nodes += search.nodes;
                let Some(f) = search.map else { break };
                idempotent_power(&f)
            }
        };
        // r acts on positions within `current`
        let mut position = vec![usize::MAX; n];
        for (t, &u) in current.iter().enumerate() {
            position[u] = t;
        }
        let images = retraction
            .images
            .iter()
            .map(|&u| current[r.apply(position[u])])
            .collect();
        retraction = VertexMap::new(images);
        current = r.image().into_iter().map(|t| current[t]).collect();
        folds += 1;
    }
    let core = x.induced(&current);
    let (kind, evidence) = if core.is_complete() {
        (
            CoreKind::Complete,
            Evidence::Clique {
                vertices: current.clone(),
                folds,
                nodes,
            },
        )
    } else if folds == 0 {
        (CoreKind::SelfCore, Evidence::Exhaustion { folds, nodes })
    } else {
        (CoreKind::General, Evidence::Exhaustion { folds, nodes })
    };
    Ok(CoreCertificate {
        vertices: current,
        retraction,
        kind,
        evidence,
    })
}

/// True iff every endomorphism of `x` is an automorphism.
pub fn is_core(x: &Graph, opts: &SearchOptions) -> Result<bool> {
    if x.is_complete() {
        opts.check(x, "core test")?;
        return Ok(true);
    }
    Ok(find_endomorphism(x, EndoConstraint::NonInjective, opts)?.is_none())
}

pub fn clique_number(x: &Graph, opts: &SearchOptions) -> Result<usize> {
    opts.check(x, "clique number")?;
    Ok(maximum_clique(x).len())
}

pub fn has_proper_coloring(x: &Graph, k: usize, opts: &SearchOptions) -> Result<bool> {
    opts.check(x, "colouring search")?;
    Ok(has_proper_colouring(x, k))
}
