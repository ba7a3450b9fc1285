use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use serde::Serialize;
use serde_json::json;

use cayley_core::cayley::{CayleyGraph, ConnectionDocument, ConnectionSet};
use cayley_core::cca::{cca_check, search_witness, CcaOutcome};
use cayley_core::gfp::{FVector, FieldSpec, Subspace};
use cayley_core::homcore::{self, compute_core, SearchOptions};
use cayley_core::verify::{self, fixtures, Parameters, SweepReport, VerifyOptions};
use cayley_core::Error;

use crate::{Caps, Format, Input, InputError, Suite, VerifyArgs};

/// Resource limits are runtime failures; every other library error comes
/// from the input.
fn classify(e: Error) -> anyhow::Error {
    match e {
        Error::ResourceLimit { .. } => anyhow!(e),
        other => anyhow!(InputError(other.to_string())),
    }
}

fn input_error(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(InputError(msg.into()))
}

fn load(input: &Input) -> Result<ConnectionSet> {
    let path = &input.input;
    let text = fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    let doc: ConnectionDocument =
        serde_json::from_str(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    doc.to_set().map_err(classify)
}

/// `"1,0,0;0,1,1"` as vectors of `field`; the empty string is no vectors.
fn parse_basis(field: FieldSpec, text: &str, flag: &str) -> Result<Vec<FVector>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let coords = s
                .split(',')
                .map(|c| c.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| input_error(format!("{flag}: bad coordinate in {s:?}: {e}")))?;
            field
                .vector(&coords)
                .map_err(|e| input_error(format!("{flag}: {e}")))
        })
        .collect()
}

fn coords(v: &FVector) -> &[u32] {
    v.coords()
}

fn basis_json(s: &Subspace) -> Vec<&[u32]> {
    s.basis().iter().map(coords).collect()
}

fn print_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

pub fn check_cca(input: &Input, v: &str, w: &str, _caps: &Caps, format: Format) -> Result<bool> {
    let c = load(input)?;
    let field = c.field();
    let v = Subspace::span(field, &parse_basis(field, v, "--v")?).map_err(classify)?;
    let w = Subspace::span(field, &parse_basis(field, w, "--w")?).map_err(classify)?;
    let outcome = cca_check(&c, &v, &w).map_err(classify)?;
    match format {
        Format::Json => {
            let value = match &outcome {
                CcaOutcome::Satisfied => json!({ "holds": true, "dim_v": v.dim() }),
                CcaOutcome::Violated { clause, vector } => json!({
                    "holds": false,
                    "clause": clause.label(),
                    "reason": clause.to_string(),
                    "vector": coords(vector),
                }),
            };
            print_json(&value)?;
        }
        Format::Text => match &outcome {
            CcaOutcome::Satisfied => {
                println!("pass: V = {v}, W = {w}, dim V = {}", v.dim());
            }
            CcaOutcome::Violated { clause, vector } => {
                println!("fail: clause {clause}");
                println!("vector: {vector}");
            }
        },
    }
    Ok(outcome.holds())
}

pub fn find_witness(input: &Input, caps: &Caps, format: Format) -> Result<bool> {
    let c = load(input)?;
    let search = search_witness(&c, caps.witness_cap).map_err(classify)?;
    match format {
        Format::Json => {
            let witness = search.witness.as_ref().map(|w| {
                json!({
                    "v": basis_json(w.v()),
                    "w": basis_json(w.w()),
                    "dim_v": w.dim(),
                })
            });
            print_json(&json!({
                "witness": witness,
                "v_candidates": search.v_candidates,
                "w_nodes": search.w_nodes,
            }))?;
        }
        Format::Text => {
            match &search.witness {
                Some(w) => {
                    println!("V = {}", w.v());
                    println!("W = {}", w.w());
                    println!("dim V = {}", w.dim());
                }
                None => println!("none"),
            }
            println!(
                "searched {} summands and {} complement nodes",
                search.v_candidates, search.w_nodes
            );
        }
    }
    Ok(true)
}

fn materialize(c: &ConnectionSet, caps: &Caps) -> Result<cayley_core::graph::Graph> {
    CayleyGraph::new(c.clone())
        .materialize(caps.materialize_cap)
        .map_err(classify)
}

pub fn core(
    input: &Input,
    retraction_path: Option<&Path>,
    caps: &Caps,
    format: Format,
) -> Result<bool> {
    let c = load(input)?;
    let g = materialize(&c, caps)?;
    let cert = compute_core(&g, &SearchOptions::transitive(caps.max_vertices)).map_err(classify)?;
    if let Some(path) = retraction_path {
        fs::write(path, serde_json::to_string(&cert.retraction)? + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    match format {
        Format::Json => print_json(&json!({
            "order": cert.order(),
            "complete": cert.is_complete(),
            "kind": cert.kind,
            "vertices": cert.vertices,
            "retraction": cert.retraction,
            "evidence": cert.evidence,
        }))?,
        Format::Text => {
            let field = c.field();
            println!("order: {}", cert.order());
            println!("complete: {}", cert.is_complete());
            println!("kind: {}", cert.kind);
            let vertices: Vec<String> = cert
                .vertices
                .iter()
                .map(|&u| field.vector_at(u).to_string())
                .collect();
            println!("core vertices: {}", vertices.join(" "));
            if retraction_path.is_none() {
                let images: Vec<String> = cert
                    .retraction
                    .images()
                    .iter()
                    .map(|u| u.to_string())
                    .collect();
                println!("retraction: {}", images.join(" "));
            }
        }
    }
    Ok(true)
}

pub fn is_core(input: &Input, caps: &Caps, format: Format) -> Result<bool> {
    let c = load(input)?;
    let g = materialize(&c, caps)?;
    let verdict =
        homcore::is_core(&g, &SearchOptions::transitive(caps.max_vertices)).map_err(classify)?;
    match format {
        Format::Json => print_json(&json!({ "is_core": verdict }))?,
        Format::Text => println!("{verdict}"),
    }
    Ok(true)
}

pub fn graph_info(input: &Input, caps: &Caps, format: Format) -> Result<bool> {
    let c = load(input)?;
    let field = c.field();
    let graph = CayleyGraph::new(c.clone());
    let order = field.order();
    let clique = if order <= caps.max_vertices as u64 {
        let g = materialize(&c, caps)?;
        Some(homcore::maximum_clique(&g).len())
    } else {
        None
    };
    let info = json!({
        "p": field.p(),
        "d": field.d(),
        "vertices": order,
        "degree": c.len(),
        "complement_degree": order - 1 - c.len() as u64,
        "span_dim": c.span().dim(),
        "components": graph.component_count(),
        "connected": graph.is_connected(),
        "clique_number": clique,
    });
    match format {
        Format::Json => print_json(&info)?,
        Format::Text => {
            println!("field: F_{}^{}", field.p(), field.d());
            println!("vertices: {order}");
            println!("degree: {}", c.len());
            println!("complement degree: {}", order - 1 - c.len() as u64);
            println!("span dimension: {}", c.span().dim());
            println!(
                "components: {} ({})",
                graph.component_count(),
                if graph.is_connected() {
                    "connected"
                } else {
                    "disconnected"
                }
            );
            match clique {
                Some(w) => println!("clique number: {w}"),
                None => println!("clique number: skipped ({order} vertices)"),
            }
            println!("connection set: {c}");
        }
    }
    Ok(true)
}

/// Table replays run when `verify tables` is given no `--table`.
const DEFAULT_TABLE_RUNS: &[(u8, u32, usize)] = &[
    (1, 2, 4),
    (2, 2, 4),
    (2, 2, 5),
    (3, 3, 5),
    (3, 3, 6),
    (4, 3, 5),
    (4, 3, 6),
    (5, 5, 1),
    (5, 5, 2),
    (5, 5, 3),
    (5, 7, 1),
    (5, 7, 2),
    (5, 7, 3),
    (6, 2, 0),
    (6, 3, 0),
    (6, 5, 0),
];

fn run_tables(args: &VerifyArgs, opts: &VerifyOptions) -> Result<SweepReport> {
    let Some(id) = args.table else {
        if args.p.is_some() || args.d.is_some() {
            return Err(input_error("--p and --d need --table"));
        }
        let reports = DEFAULT_TABLE_RUNS
            .iter()
            .map(|&(id, p, d)| verify::verify_table(id, p, d, opts).map_err(classify))
            .collect::<Result<Vec<_>>>()?;
        return Ok(SweepReport::combine(
            "tables",
            Parameters::default(),
            reports,
        ));
    };
    let (p, d) = if id == 6 {
        (args.p.unwrap_or(2), 0)
    } else {
        let table = fixtures::table(id)
            .ok_or_else(|| input_error(format!("no table {id}; tables are 1 to 6")))?;
        let p = args.p.or(table.p).unwrap_or(5);
        let needed = table.rows.iter().map(|r| r.min_dim()).max().unwrap_or(0);
        (p, args.d.unwrap_or(needed))
    };
    verify::verify_table(id, p, d, opts).map_err(classify)
}

pub fn verify(args: &VerifyArgs, suite: Suite, caps: &Caps, format: Format) -> Result<bool> {
    let opts = VerifyOptions {
        witness_cap: caps.witness_cap,
        max_vertices: caps.max_vertices,
        direct: args.direct,
    };
    if suite != Suite::Tables && args.table.is_some() {
        return Err(input_error(format!(
            "--table only applies to the tables suite, not {suite}"
        )));
    }
    let p = args.p.unwrap_or(2);
    let report = match suite {
        Suite::Tables => run_tables(args, &opts)?,
        Suite::Sweep => {
            let d = args.d.unwrap_or(match p {
                2 => 4,
                3 => 3,
                _ => 2,
            });
            verify::sweep_proposition(p, d, &opts).map_err(classify)?
        }
        Suite::Theorem => {
            let d = args.d.unwrap_or(match p {
                2 => 4,
                3 => 3,
                _ => 1,
            });
            verify::verify_theorem_end_to_end(p, d, &opts).map_err(classify)?
        }
        Suite::Counterexamples => {
            if args.d.is_some() {
                return Err(input_error(
                    "the counterexample for each p has a fixed dimension; drop --d",
                ));
            }
            verify::verify_counterexamples(p, &opts).map_err(classify)?
        }
    };
    if let Some(path) = &args.report {
        fs::write(path, serde_json::to_string_pretty(&report)? + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    match format {
        Format::Json => print_json(&report)?,
        Format::Text => print!("{report}"),
    }
    Ok(report.succeeded())
}
