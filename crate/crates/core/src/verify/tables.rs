use super::fixtures::{self, TableRow};
use super::{counterexamples, ensure, Parameters, Recorder, SweepReport, VerifyOptions};
use crate::cca::{lift_witness, search_witness, CcaWitness};
use crate::error::{Error, Result};
use crate::gfp::FieldSpec;

/// Largest `p^d` at which each row's witness dimension is also cross-checked
/// against an independent witness search.
const CROSS_CHECK_ORDER: u64 = 729;

fn check_row(row: &TableRow, field: FieldSpec, opts: &VerifyOptions) -> Result<(), String> {
    let d = field.d();
    let err = |e: Error| e.to_string();
    let base = row.base.instantiate(field).map_err(err)?;
    let c = if row.complement {
        base.complement()
    } else {
        base.clone()
    };
    if let (Some(size), false) = (row.size, row.complement) {
        ensure(c.len() == size, || {
            format!("|C| = {}, expected {size}", c.len())
        })?;
    }
    let base_span = base.span();
    let v = row.v.instantiate(field, &base_span).map_err(err)?;
    let w = row.w.instantiate(field, &base_span).map_err(err)?;
    let witness = if row.inner {
        lift_witness(&c, &v, &w).map_err(err)?
    } else {
        CcaWitness::new(v, w).map_err(err)?
    };
    let outcome = witness.check(&c).map_err(err)?;
    ensure(outcome.holds(), || format!("{witness}: {outcome:?}"))?;
    let expected = row
        .dim
        .eval(d)
        .ok_or_else(|| format!("dimension {} is negative at d = {d}", row.dim))?;
    ensure(witness.dim() == expected, || {
        format!(
            "dim V = {}, table says {} = {expected}",
            witness.dim(),
            row.dim
        )
    })?;
    if field.order() <= CROSS_CHECK_ORDER.min(opts.witness_cap) {
        let found = search_witness(&c, opts.witness_cap).map_err(err)?;
        let found_dim = found.witness.map(|w| w.dim());
        ensure(found_dim == Some(expected), || {
            format!("witness search gives dim V = {found_dim:?}, expected {expected}")
        })?;
    }
    Ok(())
}

/// Instantiates every row of table `id` at `F_p^d` and checks the stated
/// witness and dimension. Table 6 checks the counterexamples for `p`
/// (their dimension is fixed, so `d` is ignored).
pub fn verify_table(id: u8, p: u32, d: usize, opts: &VerifyOptions) -> Result<SweepReport> {
    if id == 6 {
        return counterexamples::table_6(p);
    }
    let table = fixtures::table(id)
        .ok_or_else(|| Error::InvalidArgument(format!("no table {id}; tables are 1 to 6")))?;
    if let Some(fixed) = table.p {
        if fixed != p {
            return Err(Error::InvalidArgument(format!(
                "table {id} is over F_{fixed}, not F_{p}"
            )));
        }
    } else if p < 5 {
        return Err(Error::InvalidArgument(format!(
            "table {id} needs p ≥ 5, got {p}"
        )));
    }
    let field = FieldSpec::new(p, d)?;
    let needed = table.rows.iter().map(|r| r.min_dim()).max().unwrap_or(0);
    if d < needed {
        return Err(Error::InvalidArgument(format!(
            "table {id} needs dimension at least {needed}, got {d}"
        )));
    }
    field.check_order("table replay", opts.witness_cap)?;
    let mut rec = Recorder::new(
        &format!("table {id}"),
        Parameters {
            p: Some(p as u64),
            d: Some(d),
            table: Some(id),
            ..Parameters::default()
        },
    );
    for row in &table.rows {
        rec.item(row.label(), check_row(row, field, opts));
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables_pass() {
        let opts = VerifyOptions::default();
        let r = verify_table(1, 2, 4, &opts).unwrap();
        assert!(r.succeeded(), "{r}");
        assert_eq!(r.examined, 8);
        let r = verify_table(5, 5, 2, &opts).unwrap();
        assert!(r.succeeded(), "{r}");
    }

    #[test]
    fn rejects_bad_parameters() {
        let opts = VerifyOptions::default();
        assert!(verify_table(1, 3, 4, &opts).is_err());
        assert!(verify_table(1, 2, 3, &opts).is_err());
        assert!(verify_table(7, 2, 4, &opts).is_err());
        assert!(verify_table(5, 3, 2, &opts).is_err());
    }
}
