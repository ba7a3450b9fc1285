use super::{ensure, Parameters, Recorder, SweepReport, VerifyOptions};
use crate::cayley::{CayleyGraph, ConnectionSet, DEFAULT_MATERIALIZE_CAP};
use crate::cca::kappa;
use crate::error::{Error, Result};
use crate::gfp::{FieldSpec, LinearMap};
use crate::graph::Graph;
use crate::homcore::{
    certify_core_by_invariants, chromatic_number, has_proper_coloring, is_core, maximum_clique,
    CoreKind, SearchOptions,
};

/// A degree-`κ(p)` Cayley graph whose core and whose complement's core are
/// both the graph itself, and neither is complete.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub name: &'static str,
    pub connection: ConnectionSet,
}

impl Counterexample {
    pub fn field(&self) -> FieldSpec {
        self.connection.field()
    }

    pub fn graph(&self) -> Result<Graph> {
        CayleyGraph::new(self.connection.clone()).materialize(DEFAULT_MATERIALIZE_CAP)
    }

    pub fn complement_graph(&self) -> Result<Graph> {
        CayleyGraph::new(self.connection.complement()).materialize(DEFAULT_MATERIALIZE_CAP)
    }
}

pub fn counterexample(p: u32) -> Result<Counterexample> {
    match p {
        2 => {
            let f = FieldSpec::new(2, 4)?;
            let gens = [
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, 1],
                [1, 1, 1, 1],
            ]
            .iter()
            .map(|c| f.vector(c))
            .collect::<Result<Vec<_>>>()?;
            Ok(Counterexample {
                name: "folded 5-cube",
                connection: ConnectionSet::new(f, &gens, false)?,
            })
        }
        3 => {
            let f = FieldSpec::new(3, 3)?;
            let lines = [
                [1, 0, 0],
                [0, 1, 0],
                [0, 0, 1],
                [1, 1, 0],
                [1, 0, 1],
                [1, 1, 1],
            ]
            .iter()
            .map(|c| f.vector(c))
            .collect::<Result<Vec<_>>>()?;
            Ok(Counterexample {
                name: "ternary 27-vertex graph",
                connection: ConnectionSet::projective(f, &lines)?,
            })
        }
        _ => {
            let f = FieldSpec::new(p, 1)?;
            Ok(Counterexample {
                name: "cycle",
                connection: ConnectionSet::new(f, &[f.unit(0)], true)?,
            })
        }
    }
}

/// `{e_a} ∪ {e_a + e_b : a < b}` in `F_2^4`.
fn halved_cube_set() -> Result<ConnectionSet> {
    let f = FieldSpec::new(2, 4)?;
    let mut gens = Vec::new();
    for a in 0..4 {
        gens.push(f.unit(a));
        for b in a + 1..4 {
            gens.push(&f.unit(a) + &f.unit(b));
        }
    }
    ConnectionSet::new(f, &gens, false)
}

/// An invertible linear map carrying `a` onto `b`, by exhausting the images
/// of the standard basis.
pub(crate) fn linear_equivalence(
    a: &ConnectionSet,
    b: &ConnectionSet,
) -> Result<Option<LinearMap>> {
    let field = a.field();
    let n = field.check_order("linear equivalence search", 256)?;
    let d = field.d();
    if a.len() != b.len() {
        return Ok(None);
    }
    let target: std::collections::BTreeSet<_> = b.elements().cloned().collect();
    let mut images = vec![0usize; d];
    loop {
        let rows: Vec<Vec<u32>> = (0..d)
            .map(|r| {
                images
                    .iter()
                    .map(|&x| field.vector_at(x).coords()[r])
                    .collect()
            })
            .collect();
        let map = LinearMap::from_rows(field, rows)?;
        if map.is_invertible() && map.apply_set(a.elements(), true)? == target {
            return Ok(Some(map));
        }
        // next tuple of basis images
        let Some(t) = (0..d).find(|&t| images[t] + 1 < n) else {
            return Ok(None);
        };
        images[t] += 1;
        images[..t].fill(0);
    }
}

/// Any two vertices lie on a common 5-cycle.
fn pairs_share_five_cycles(g: &Graph) -> bool {
    let n = g.order();
    let mut covered = vec![false; n * n];
    for v0 in 0..n {
        for v1 in g.neighbors(v0) {
            for v2 in g.neighbors(v1).filter(|&x| x != v0) {
                for v3 in g.neighbors(v2).filter(|&x| x != v0 && x != v1) {
                    for v4 in g.neighbors(v3).filter(|&x| x != v0 && x != v1 && x != v2) {
                        if g.has_edge(v4, v0) {
                            let cycle = [v0, v1, v2, v3, v4];
                            for &a in &cycle {
                                for &b in &cycle {
                                    covered[a * n + b] = true;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    (0..n).all(|a| (0..n).all(|b| a == b || covered[a * n + b]))
}

fn parameters(p: u32, x: &Counterexample) -> Parameters {
    Parameters {
        p: Some(p as u64),
        d: Some(x.field().d()),
        table: None,
        ..Parameters::default()
    }
}

/// Degree and non-completeness checks for the counterexample at `p`.
pub(crate) fn table_6(p: u32) -> Result<SweepReport> {
    let x = counterexample(p)?;
    let mut params = parameters(p, &x);
    params.table = Some(6);
    let mut rec = Recorder::new("table 6", params);
    basic_checks(&mut rec, &x)?;
    Ok(rec.finish())
}

fn basic_checks(rec: &mut Recorder, x: &Counterexample) -> Result<(Graph, Graph)> {
    let k = kappa(x.field().p() as u64)? as usize;
    let g = x.graph()?;
    let h = x.complement_graph()?;
    let n = g.order();
    rec.item(
        format!("{} degree", x.name),
        ensure(g.regular_degree() == Some(k), || {
            format!("degree {:?}, expected κ = {k}", g.regular_degree())
        }),
    );
    rec.item(
        "complement degree",
        ensure(h.regular_degree() == Some(n - k - 1), || {
            format!("degree {:?}, expected {}", h.regular_degree(), n - k - 1)
        }),
    );
    rec.item(
        format!("{} is not complete", x.name),
        ensure(!g.is_complete(), || "complete".into()),
    );
    rec.item(
        "complement is not complete",
        ensure(!h.is_complete(), || "complete".into()),
    );
    Ok((g, h))
}

fn core_check(g: &Graph, search: &SearchOptions) -> Result<(), String> {
    let core = is_core(g, search).map_err(|e| e.to_string())?;
    ensure(core, || "a non-injective endomorphism exists".into())
}

fn certify_check(g: &Graph, search: &SearchOptions) -> Result<(), String> {
    let cert = certify_core_by_invariants(g, search).map_err(|e| e.to_string())?;
    match cert {
        Some(c) if c.kind == CoreKind::SelfCore => Ok(()),
        Some(c) => Err(format!("certified with kind {}", c.kind)),
        None => Err("invariant chain is inconclusive".into()),
    }
}

/// Checks that the counterexample at `p` and its complement are non-complete
/// cores of degrees `κ(p)` and `|V| - κ(p) - 1`.
pub fn verify_counterexamples(p: u32, opts: &VerifyOptions) -> Result<SweepReport> {
    let x = counterexample(p)?;
    let mut rec = Recorder::new("counterexamples", parameters(p, &x));
    let (g, h) = basic_checks(&mut rec, &x)?;
    let n = g.order();
    let search = SearchOptions::transitive(opts.max_vertices);
    let direct = n <= opts.max_vertices;
    match p {
        2 => {
            if !direct {
                return Err(Error::ResourceLimit {
                    what: "core search",
                    size: n as u64,
                    cap: opts.max_vertices as u64,
                });
            }
            rec.item("folded 5-cube is a core", core_check(&g, &search));
            rec.item("complement is a core", core_check(&h, &search));
            let omega = maximum_clique(&g).len();
            rec.item(
                "folded 5-cube is triangle-free",
                ensure(omega == 2, || format!("clique number {omega}")),
            );
            rec.item(
                "any two vertices lie on a common 5-cycle",
                ensure(pairs_share_five_cycles(&g), || {
                    "some pair is on no 5-cycle".into()
                }),
            );
            let halved = halved_cube_set()?;
            let equivalence = linear_equivalence(&x.connection.complement(), &halved)?;
            rec.item(
                "complement is the halved 5-cube",
                ensure(equivalence.is_some(), || {
                    "no invertible linear map found".into()
                }),
            );
            rec.item(
                "halved 5-cube degree",
                ensure(halved.len() == 10, || format!("degree {}", halved.len())),
            );
        }
        3 => {
            for (name, graph) in [("X", &g), ("complement", &h)] {
                let omega = maximum_clique(graph).len();
                rec.item(
                    format!("{name} has clique number 4"),
                    ensure(omega == 4, || format!("clique number {omega}")),
                );
                let six = has_proper_coloring(graph, 6, &search).map_err(|e| e.to_string());
                rec.item(
                    format!("{name} has no proper 6-colouring"),
                    six.and_then(|c| ensure(!c, || "6-colourable".into())),
                );
                rec.item(
                    format!("{name} certified by invariants"),
                    certify_check(graph, &search),
                );
                if direct {
                    rec.item(
                        format!("{name} is a core by direct search"),
                        core_check(graph, &search),
                    );
                } else {
                    rec.note(format!(
                        "direct core search on {name} skipped ({n} vertices)"
                    ));
                }
                rec.note(format!(
                    "chromatic number of {name}: {}",
                    chromatic_number(graph)
                ));
            }
        }
        _ => {
            rec.item(
                "complement degree is p - 3",
                ensure(h.regular_degree() == Some(p as usize - 3), || {
                    format!("degree {:?}", h.regular_degree())
                }),
            );
            for (name, graph) in [("cycle", &g), ("complement", &h)] {
                rec.item(
                    format!("{name} certified by prime order"),
                    certify_check(graph, &search),
                );
                if direct {
                    rec.item(
                        format!("{name} is a core by direct search"),
                        core_check(graph, &search),
                    );
                } else {
                    rec.note(format!(
                        "direct core search on {name} skipped ({n} vertices)"
                    ));
                }
            }
        }
    }
    Ok(rec.finish())
}
