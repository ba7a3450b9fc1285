//! One line per acceptance criterion, each with a pinned runtime bound.
//! Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use cayley_core::cayley::{CayleyGraph, ConnectionSet, DEFAULT_MATERIALIZE_CAP};
use cayley_core::cca::{search_witness, DEFAULT_WITNESS_CAP};
use cayley_core::gfp::FieldSpec;
use cayley_core::graph::Graph;
use cayley_core::homcore::{
    certify_core_by_invariants, clique_number, compute_core, has_proper_coloring, is_core,
    CoreKind, SearchOptions,
};
use cayley_core::verify::{
    counterexample, low_regime_sets, sweep_proposition, verify_table, SweepReport, VerifyOptions,
};
use common::{
    all_sets, cayley_fixture, connection_set, graph_of, invertible_map, oracle, props, small_graph,
    subspace_in,
};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok_report(r: &SweepReport) -> Result<(), String> {
    ensure(r.succeeded(), || {
        r.to_string().trim_end().replace('\n', "; ")
    })
}

fn graph(c: &ConnectionSet) -> Graph {
    CayleyGraph::new(c.clone())
        .materialize(DEFAULT_MATERIALIZE_CAP)
        .unwrap()
}

fn table_replay() -> Check {
    let opts = VerifyOptions::default();
    let mut runs: Vec<(u8, u32, usize, u64)> = vec![
        (1, 2, 4, 8),
        (2, 2, 4, 16),
        (2, 2, 5, 16),
        (3, 3, 5, 16),
        (3, 3, 6, 16),
        (4, 3, 5, 16),
        (4, 3, 6, 16),
    ];
    for p in [5, 7] {
        for d in 1..=3 {
            runs.push((5, p, d, 2));
        }
    }
    let mut rows = 0;
    for (id, p, d, expected) in runs {
        let r = verify_table(id, p, d, &opts).map_err(|e| e.to_string())?;
        ok_report(&r)?;
        ensure(r.examined == expected, || {
            format!(
                "table {id} at p = {p}, d = {d}: {} rows, expected {expected}",
                r.examined
            )
        })?;
        rows += r.examined;
    }
    Ok(format!("{rows} rows over 13 replays, 0 failures"))
}

fn sharp_set() -> Check {
    let f = FieldSpec::new(2, 4).unwrap();
    let gens: Vec<_> = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 1, 1],
    ]
    .iter()
    .map(|c| f.vector(c).unwrap())
    .collect();
    let c = ConnectionSet::new(f, &gens, false).unwrap();
    let mut out = Vec::new();
    for (name, set) in [("C", c.clone()), ("complement", c.complement())] {
        let s = search_witness(&set, DEFAULT_WITNESS_CAP).map_err(|e| e.to_string())?;
        ensure(s.witness.is_none(), || {
            format!("{name} has witness {:?}", s.witness)
        })?;
        ensure(s.v_candidates > 0, || {
            format!("{name}: no summands searched")
        })?;
        out.push(format!(
            "{name}: none ({} summands, {} complement nodes)",
            s.v_candidates, s.w_nodes
        ));
    }
    Ok(out.join("; "))
}

fn sweep(p: u32, d: usize, expected: u64) -> Check {
    let r = sweep_proposition(p, d, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    ok_report(&r)?;
    let low = &r.tallies[0];
    let high = &r.tallies[1];
    ensure(low.examined == expected && low.passed == expected, || {
        format!(
            "low regime {}/{}, expected {expected}",
            low.passed, low.examined
        )
    })?;
    ensure(high.examined == expected && high.passed == expected, || {
        format!(
            "high regime {}/{}, expected {expected}",
            high.passed, high.examined
        )
    })?;
    Ok(format!(
        "{} low-cardinality witnesses, {} complements by duality",
        low.passed, high.passed
    ))
}

/// Exact cores of every `Cay(F_2^d, C)` with `|C| < 5` against the witness
/// prediction; for `d ≤ 3` also against the exhaustive endomorphism scan.
fn theorem_oracle() -> Check {
    let mut checked = 0;
    for d in 1..=4 {
        let f = FieldSpec::new(2, d).unwrap();
        for c in low_regime_sets(f).map_err(|e| e.to_string())? {
            let w = search_witness(&c, DEFAULT_WITNESS_CAP)
                .map_err(|e| e.to_string())?
                .witness
                .ok_or_else(|| format!("no witness for {c:?}"))?;
            let g = graph(&c);
            let core =
                compute_core(&g, &SearchOptions::transitive(64)).map_err(|e| e.to_string())?;
            let expected = 1usize << w.dim();
            ensure(core.is_complete() && core.order() == expected, || {
                format!(
                    "{c:?}: core of order {} (complete {}), witness predicts K_{expected}",
                    core.order(),
                    core.is_complete()
                )
            })?;
            if g.order() <= 8 {
                let scanned = oracle::core_order(&g);
                ensure(scanned == expected, || {
                    format!("{c:?}: endomorphism scan gives core order {scanned}")
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} connection sets, cores K_(2^dim V) exactly"
    ))
}

fn halved_cube() -> ConnectionSet {
    let f = FieldSpec::new(2, 4).unwrap();
    let mut gens = Vec::new();
    for a in 0..4 {
        gens.push(f.unit(a));
        for b in a + 1..4 {
            gens.push(&f.unit(a) + &f.unit(b));
        }
    }
    ConnectionSet::new(f, &gens, false).unwrap()
}

fn binary_counterexample() -> Check {
    let opts = SearchOptions::transitive(64);
    let folded = graph(&counterexample(2).map_err(|e| e.to_string())?.connection);
    let halved = graph(&halved_cube());
    ensure(folded.regular_degree() == Some(5), || {
        "folded degree".into()
    })?;
    ensure(halved.regular_degree() == Some(10), || {
        "halved degree".into()
    })?;
    let omega = clique_number(&folded, &opts).map_err(|e| e.to_string())?;
    ensure(omega == 2, || {
        format!("folded 5-cube has clique number {omega}")
    })?;
    for (name, g) in [("folded 5-cube", &folded), ("halved 5-cube", &halved)] {
        let t = Instant::now();
        let core = is_core(g, &opts).map_err(|e| e.to_string())?;
        ensure(core, || format!("{name} is not a core"))?;
        ensure(t.elapsed() < Duration::from_secs(120), || {
            format!("{name}: is_core took {:?}", t.elapsed())
        })?;
    }
    Ok("both cores; ω = 2; degrees 5 and 10".into())
}

fn ternary_counterexample() -> Check {
    let opts = SearchOptions::transitive(64);
    let x = counterexample(3).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for (name, g) in [
        ("X", graph(&x.connection)),
        ("complement", graph(&x.connection.complement())),
    ] {
        let omega = clique_number(&g, &opts).map_err(|e| e.to_string())?;
        ensure(omega == 4, || format!("{name}: clique number {omega}"))?;
        let six = has_proper_coloring(&g, 6, &opts).map_err(|e| e.to_string())?;
        ensure(!six, || format!("{name} is 6-colourable"))?;
        let cert = certify_core_by_invariants(&g, &opts).map_err(|e| e.to_string())?;
        let kind = cert.map(|c| c.kind);
        ensure(kind == Some(CoreKind::SelfCore), || {
            format!("{name}: certification gave {kind:?}")
        })?;
        parts.push(format!("{name}: ω = 4, not 6-colourable, self core"));
    }
    Ok(parts.join("; "))
}

fn prime_counterexamples() -> Check {
    let opts = SearchOptions::transitive(64);
    for p in [5u32, 7, 11, 13] {
        let x = counterexample(p).map_err(|e| e.to_string())?;
        let g = graph(&x.connection);
        let h = graph(&x.connection.complement());
        ensure(g.regular_degree() == Some(2), || {
            format!("p = {p}: cycle degree")
        })?;
        ensure(h.regular_degree() == Some(p as usize - 3), || {
            format!("p = {p}: complement degree {:?}", h.regular_degree())
        })?;
        for (name, graph) in [("cycle", &g), ("complement", &h)] {
            let core = is_core(graph, &opts).map_err(|e| e.to_string())?;
            ensure(core, || format!("p = {p}: {name} is not a core"))?;
        }
    }
    Ok("C_p and complement are cores for p = 5, 7, 11, 13".into())
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        failure_persistence: None,
        ..Config::with_cases(1000)
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Check {
    run_property("duality round-trip", connection_set(64), |c| {
        props::duality_round_trip(&c)
    })?;
    let lifting = common::field(256)
        .prop_filter("needs d ≥ 2", |f| f.d() >= 2)
        .prop_flat_map(|amb| {
            (1..amb.d()).prop_flat_map(move |k| {
                let inner = FieldSpec::new(amb.p(), k).unwrap();
                (
                    common::connection_set_in(inner),
                    Just(amb),
                    invertible_map(amb),
                )
            })
        });
    run_property("lifting soundness", lifting, |(c, amb, t)| {
        props::lifting_soundness(&c, amb, &t)
    })?;
    run_property("projection is a homomorphism", connection_set(256), |c| {
        props::projection_is_homomorphism(&c)
    })?;
    let gl = connection_set(16).prop_flat_map(|c| {
        let f = c.field();
        (Just(c), invertible_map(f), subspace_in(f), subspace_in(f))
    });
    run_property("GL-equivariance", gl, |(c, t, v, w)| {
        props::gl_equivariance(&c, &t, &v, &w)
    })?;
    run_property("endomorphism oracle", small_graph(8), |g| {
        props::endomorphism_oracle(&g)
    })?;
    for f in common::fields_up_to(8) {
        for c in all_sets(f) {
            props::endomorphism_oracle(&graph_of(&c)).map_err(|e| format!("{c:?}: {e}"))?;
        }
    }
    run_property("core-order divisibility", cayley_fixture(), |c| {
        props::core_order_divides(&c)
    })?;
    Ok("6 properties × 1000 cases, plus every Cayley graph on ≤ 8 vertices".into())
}

fn witness_dimensions() -> Check {
    let mut sets = 0;
    for (p, d) in [(2, 3), (3, 2)] {
        let f = FieldSpec::new(p, d).unwrap();
        for c in all_sets(f) {
            props::witness_dimension_constant(&c).map_err(|e| format!("{c:?}: {e}"))?;
            sets += 1;
        }
    }
    Ok(format!("{sets} connection sets, one dim V each"))
}

type Criterion = (&'static str, Duration, fn() -> Check);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("table replay", Duration::from_secs(10), table_replay),
        ("sharpness of p = 2", Duration::from_secs(5), sharp_set),
        ("sweep p = 2, d = 4", Duration::from_secs(60), || {
            sweep(2, 4, 1941)
        }),
        ("sweep p = 3, d = 3", Duration::from_secs(300), || {
            sweep(3, 3, 2380)
        }),
        (
            "cores match witnesses, p = 2, d ≤ 4",
            Duration::from_secs(600),
            theorem_oracle,
        ),
        (
            "binary counterexample",
            Duration::from_secs(240),
            binary_counterexample,
        ),
        (
            "ternary counterexample",
            Duration::from_secs(600),
            ternary_counterexample,
        ),
        (
            "counterexamples for p ≥ 5",
            Duration::from_secs(1),
            prime_counterexamples,
        ),
        ("property suites", Duration::from_secs(600), property_suites),
        (
            "witness dimension is well defined",
            Duration::from_secs(120),
            witness_dimensions,
        ),
    ];
    let mut failures = 0;
    for (n, (name, bound, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= bound {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {elapsed:.2?}, bound {bound:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!(
                "PASS {:>2} {name}: {msg} [{elapsed:.2?} ≤ {bound:?}]",
                n + 1
            ),
            Err(msg) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {msg} [{elapsed:.2?}]", n + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
