use std::collections::BTreeSet;

use rayon::prelude::*;

use super::fixtures;
use super::{ensure, Parameters, Recorder, SweepReport, VerifyOptions};
use crate::cayley::{CayleyGraph, ConnectionSet, DEFAULT_MATERIALIZE_CAP};
use crate::cca::{dual_witness, kappa, search_witness, CcaWitness};
use crate::error::{Error, Result};
use crate::gfp::{FVector, FieldSpec};
use crate::homcore::{compute_core, is_homomorphism, SearchOptions};

/// Every connection set with `|C| < κ(p)`, as unions of projective points
/// (single nonzero vectors when `p = 2`), in lexicographic order of the
/// sorted point indices, smaller sets first.
pub fn low_regime_sets(field: FieldSpec) -> Result<Vec<ConnectionSet>> {
    let k = kappa(field.p() as u64)? as usize;
    let points = field.projective_points();
    let per_line = field.p() as usize - 1;
    let max_lines = (k - 1) / per_line;
    let mut out = Vec::new();
    for size in 0..=max_lines.min(points.len()) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let lines: Vec<FVector> = combo.iter().map(|&t| points[t].clone()).collect();
            out.push(if field.p() == 2 {
                ConnectionSet::new(field, &lines, false)?
            } else {
                ConnectionSet::projective(field, &lines)?
            });
            // advance to the next combination
            let Some(t) = (0..size)
                .rev()
                .find(|&t| combo[t] < points.len() - size + t)
            else {
                break;
            };
            combo[t] += 1;
            for u in t + 1..size {
                combo[u] = combo[u - 1] + 1;
            }
        }
    }
    Ok(out)
}

fn set_label(c: &ConnectionSet) -> String {
    let elements: Vec<String> = if c.field().p() == 2 {
        c.elements().map(|v| v.to_string()).collect()
    } else {
        c.projective_lines()
            .iter()
            .map(|v| format!("[{v}]"))
            .collect()
    };
    format!("{{{}}}", elements.join(" "))
}

/// Isomorphism-invariant data compared against the table rows.
type Signature = (usize, usize, usize);

struct SetOutcome {
    low: Result<(), String>,
    high: Result<(), String>,
    signature: Option<Signature>,
}

fn sweep_one(c: &ConnectionSet, opts: &VerifyOptions) -> SetOutcome {
    let field = c.field();
    let err = |e: Error| e.to_string();
    let found = search_witness(c, opts.witness_cap).map_err(err);
    let witness: Result<CcaWitness, String> = found.and_then(|s| {
        s.witness.ok_or_else(|| {
            format!(
                "no witness ({} summands, {} complement nodes searched)",
                s.v_candidates, s.w_nodes
            )
        })
    });
    let low = witness.as_ref().map_err(Clone::clone).and_then(|w| {
        let outcome = w.check(c).map_err(err)?;
        ensure(outcome.holds(), || {
            format!("search returned invalid {w}: {outcome:?}")
        })
    });
    let high = witness.as_ref().map_err(Clone::clone).and_then(|w| {
        let complement = c.complement();
        let dual = dual_witness(c, w).map_err(err)?;
        let outcome = dual.check(&complement).map_err(err)?;
        ensure(outcome.holds(), || {
            format!("dual {dual} fails on the complement: {outcome:?}")
        })?;
        ensure(dual.dim() == field.d() - w.dim(), || {
            "dual dimension mismatch".into()
        })?;
        if opts.direct {
            let direct = search_witness(&complement, opts.witness_cap).map_err(err)?;
            let dim = direct.witness.map(|x| x.dim());
            ensure(dim == Some(dual.dim()), || {
                format!(
                    "direct search on the complement gives dim {dim:?}, dual has {}",
                    dual.dim()
                )
            })?;
        }
        Ok(())
    });
    let signature = witness.ok().map(|w| (c.len(), c.span().dim(), w.dim()));
    SetOutcome {
        low,
        high,
        signature,
    }
}

/// Row signatures of the low-cardinality table for `p`, at `field`.
fn row_signatures(field: FieldSpec) -> Vec<(String, Signature)> {
    let table = match field.p() {
        2 => fixtures::table_2(),
        3 => fixtures::table_3(),
        _ => return Vec::new(),
    };
    table
        .rows
        .iter()
        .filter(|r| !r.complement && r.min_dim() <= field.d())
        .filter_map(|r| {
            let c = r.base.instantiate(field).ok()?;
            let dim = r.dim.eval(field.d())?;
            Some((r.label(), (c.len(), c.span().dim(), dim)))
        })
        .collect()
}

/// Exhaustive check that every set with `|C| < κ(p)` has a witness, and that
/// duality supplies one for every complement (`|C| ≥ p^d - κ(p)`).
pub fn sweep_proposition(p: u32, d: usize, opts: &VerifyOptions) -> Result<SweepReport> {
    let field = FieldSpec::new(p, d)?;
    field.check_order("proposition sweep", opts.witness_cap)?;
    let k = kappa(p as u64)?;
    let mut rec = Recorder::new(
        "sweep",
        Parameters {
            p: Some(p as u64),
            d: Some(d),
            low_bound: Some(k),
            high_bound: Some(field.order().saturating_sub(k)),
            ..Parameters::default()
        },
    );
    let sets = low_regime_sets(field)?;
    let outcomes: Vec<SetOutcome> = sets.par_iter().map(|c| sweep_one(c, opts)).collect();

    let mut low_passed = 0;
    let mut high_passed = 0;
    for (c, o) in sets.iter().zip(&outcomes) {
        low_passed += o.low.is_ok() as u64;
        rec.item(format!("C = {}", set_label(c)), o.low.clone());
    }
    for (c, o) in sets.iter().zip(&outcomes) {
        high_passed += o.high.is_ok() as u64;
        rec.item(format!("complement of {}", set_label(c)), o.high.clone());
    }
    let n = sets.len() as u64;
    rec.tally(&format!("|C| < {k}"), n, low_passed);
    let how = if opts.direct {
        "duality and direct search"
    } else {
        "duality"
    };
    rec.tally(
        &format!("|C| ≥ {} via {how}", field.order().saturating_sub(k)),
        n,
        high_passed,
    );

    let rows = row_signatures(field);
    if !rows.is_empty() {
        let seen: BTreeSet<Signature> = outcomes.iter().filter_map(|o| o.signature).collect();
        for (label, sig) in &rows {
            if !seen.contains(sig) {
                rec.note(format!("table row {label} matched no swept set"));
            }
        }
        let known: BTreeSet<Signature> = rows.iter().map(|(_, s)| *s).collect();
        let unmatched = outcomes
            .iter()
            .filter(|o| o.signature.is_some_and(|s| !known.contains(&s)))
            .count();
        if unmatched > 0 {
            rec.note(format!(
                "{unmatched} swept sets match no table row by (|C|, dim span, dim V)"
            ));
        }
    }
    Ok(rec.finish())
}

fn check_core(
    c: &ConnectionSet,
    witness: &CcaWitness,
    search: &SearchOptions,
) -> Result<(), String> {
    let err = |e: Error| e.to_string();
    let field = c.field();
    let g = CayleyGraph::new(c.clone())
        .materialize(DEFAULT_MATERIALIZE_CAP)
        .map_err(err)?;
    let core = compute_core(&g, search).map_err(err)?;
    let r = &core.retraction;
    ensure(r.is_idempotent(), || "retraction is not idempotent".into())?;
    ensure(is_homomorphism(r, &g, &g).map_err(err)?, || {
        "retraction is not a homomorphism".into()
    })?;
    let expected = (field.p() as usize).pow(witness.dim() as u32);
    ensure(core.is_complete(), || {
        format!("core of order {} is not complete", core.order())
    })?;
    ensure(core.order() == expected, || {
        format!(
            "core has order {}, witness predicts {expected}",
            core.order()
        )
    })?;
    let v = witness.v().element_indices();
    ensure(v.len() == core.order() && g.is_clique(&v), || {
        format!("V = {} does not induce a complete core", witness.v())
    })
}

/// For every set in both extreme regimes, computes the core by exact search
/// and compares it with the prediction `K_{p^dim V}` of the witness.
pub fn verify_theorem_end_to_end(p: u32, d: usize, opts: &VerifyOptions) -> Result<SweepReport> {
    let field = FieldSpec::new(p, d)?;
    let n = field.check_order("end-to-end check", DEFAULT_MATERIALIZE_CAP)?;
    if n > opts.max_vertices {
        return Err(Error::ResourceLimit {
            what: "core search",
            size: n as u64,
            cap: opts.max_vertices as u64,
        });
    }
    let k = kappa(p as u64)?;
    let mut rec = Recorder::new(
        "theorem",
        Parameters {
            p: Some(p as u64),
            d: Some(d),
            low_bound: Some(k),
            high_bound: Some(field.order().saturating_sub(k)),
            ..Parameters::default()
        },
    );
    let search = SearchOptions::transitive(opts.max_vertices);
    let sets = low_regime_sets(field)?;
    let outcomes: Vec<(Result<(), String>, Result<(), String>)> = sets
        .par_iter()
        .map(|c| {
            let witness = search_witness(c, opts.witness_cap)
                .map_err(|e| e.to_string())
                .and_then(|s| s.witness.ok_or_else(|| "no witness".to_string()));
            let low = witness
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|w| check_core(c, w, &search));
            let high = witness.as_ref().map_err(Clone::clone).and_then(|w| {
                let dual = dual_witness(c, w).map_err(|e| e.to_string())?;
                check_core(&c.complement(), &dual, &search)
            });
            (low, high)
        })
        .collect();
    let mut passed = [0u64; 2];
    for (c, (low, _)) in sets.iter().zip(&outcomes) {
        passed[0] += low.is_ok() as u64;
        rec.item(format!("C = {}", set_label(c)), low.clone());
    }
    for (c, (_, high)) in sets.iter().zip(&outcomes) {
        passed[1] += high.is_ok() as u64;
        rec.item(format!("complement of {}", set_label(c)), high.clone());
    }
    rec.tally(&format!("|C| < {k}"), sets.len() as u64, passed[0]);
    rec.tally(
        &format!("|C| ≥ {}", field.order().saturating_sub(k)),
        sets.len() as u64,
        passed[1],
    );
    Ok(rec.finish())
}
