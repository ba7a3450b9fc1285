//! Core certification from invariants alone, for vertex-transitive graphs.
//!
//! The core of a vertex-transitive graph is vertex-transitive and its order
//! divides the order of the graph. Each proper divisor `m` therefore gives two
//! candidates: the complete graph `K_m` and a non-complete vertex-transitive
//! graph on `m` vertices. A candidate is ruled out when it is incompatible
//! with the clique number or with a lower bound on the chromatic number.

use std::sync::OnceLock;

use serde::Serialize;

use super::{
    clique::maximum_clique, coloring::chromatic_number, coloring::has_proper_colouring,
    CoreCertificate, CoreKind, Evidence, SearchOptions, VertexMap,
};
use crate::cayley::{CayleyGraph, ConnectionSet};
use crate::error::Result;
use crate::gfp::FieldSpec;
use crate::graph::Graph;

/// Why one candidate core was ruled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Elimination {
    pub order: usize,
    pub complete: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub description: String,
    pub chromatic_number: usize,
}

/// Chromatic numbers of the non-complete vertex-transitive graphs on nine
/// vertices. Every such graph is a Cayley graph on `Z_3^2` or `Z_9`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NineVertexCatalog {
    pub entries: Vec<CatalogEntry>,
    pub max_chromatic_number: usize,
}

fn build_catalog() -> NineVertexCatalog {
    let mut entries = Vec::new();
    let field = FieldSpec::new(3, 2).expect("3 is prime");
    let lines = field.projective_points();
    for mask in 0u32..1 << lines.len() {
        let chosen: Vec<_> = (0..lines.len())
            .filter(|&t| mask >> t & 1 == 1)
            .map(|t| lines[t].clone())
            .collect();
        let set = ConnectionSet::projective(field, &chosen).expect("distinct lines");
        let g = CayleyGraph::new(set).materialize(9).expect("nine vertices");
        if !g.is_complete() {
            let names: Vec<String> = chosen.iter().map(|v| v.to_string()).collect();
            entries.push(CatalogEntry {
                description: format!("Z_3^2 lines [{}]", names.join(" ")),
                chromatic_number: chromatic_number(&g),
            });
        }
    }
    for mask in 0u32..1 << 4 {
        let jumps: Vec<usize> = (1..=4).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
        let g = Graph::circulant(9, &jumps);
        if !g.is_complete() {
            entries.push(CatalogEntry {
                description: format!("Z_9 jumps {jumps:?}"),
                chromatic_number: chromatic_number(&g),
            });
        }
    }
    let max_chromatic_number = entries
        .iter()
        .map(|e| e.chromatic_number)
        .max()
        .unwrap_or(0);
    NineVertexCatalog {
        entries,
        max_chromatic_number,
    }
}

pub fn nine_vertex_catalog() -> &'static NineVertexCatalog {
    static CATALOG: OnceLock<NineVertexCatalog> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Largest chromatic number of a non-complete vertex-transitive graph on `m`
/// vertices, or a valid upper bound for it.
fn noncomplete_chromatic_bound(m: usize) -> usize {
    if m == 9 {
        nine_vertex_catalog().max_chromatic_number
    } else {
        m.saturating_sub(1)
    }
}

/// Certifies that the vertex-transitive graph `x` is its own core when every
/// smaller candidate core is ruled out; `None` when some candidate survives.
/// The caller is responsible for `x` being vertex-transitive.
pub fn certify_core_by_invariants(
    x: &Graph,
    opts: &SearchOptions,
) -> Result<Option<CoreCertificate>> {
    opts.check(x, "core certification")?;
    let n = x.order();
    let own = |evidence| CoreCertificate {
        vertices: (0..n).collect(),
        retraction: VertexMap::identity(n),
        kind: if x.is_complete() {
            CoreKind::Complete
        } else {
            CoreKind::SelfCore
        },
        evidence,
    };
    let omega = maximum_clique(x).len();
    let mut eliminated = Vec::new();
    let has_edge = x.edge_count() > 0;
    let divisors: Vec<usize> = (1..n).filter(|m| n.is_multiple_of(*m)).collect();

    for &m in &divisors {
        let reason = if m == 1 {
            has_edge.then(|| "an edge has no image in K_1".to_string())
        } else if m != omega {
            Some(format!("a complete core would have order ω = {omega}"))
        } else if !has_proper_colouring(x, m) {
            Some(format!("not {m}-colourable"))
        } else {
            None
        };
        match reason {
            Some(reason) => eliminated.push(Elimination {
                order: m,
                complete: true,
                reason,
            }),
            None => return Ok(None),
        }
    }

    // non-complete candidates need m ≥ 3 (on two vertices only the edgeless
    // graph is non-complete, and it receives no edges)
    let mut bounds: Vec<(usize, usize)> = divisors
        .iter()
        .filter(|&&m| m >= 2)
        .map(|&m| (m, noncomplete_chromatic_bound(m)))
        .collect();
    bounds.sort_by_key(|&(_, b)| b);
    for (m, bound) in bounds {
        if m == 2 && has_edge {
            eliminated.push(Elimination {
                order: 2,
                complete: false,
                reason: "the only non-complete graph on 2 vertices is edgeless".into(),
            });
            continue;
        }
        if has_proper_colouring(x, bound) {
            return Ok(None);
        }
        eliminated.push(Elimination {
            order: m,
            complete: false,
            reason: format!("χ > {bound}, the largest chromatic number available on {m} vertices"),
        });
    }

    Ok(Some(own(Evidence::InvariantChain {
        order: n,
        clique_number: omega,
        eliminated,
    })))
}
