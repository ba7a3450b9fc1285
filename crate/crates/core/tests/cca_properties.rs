mod common;

use proptest::prelude::*;

use cayley_core::cayley::ConnectionSet;
use cayley_core::gfp::{FieldSpec, LinearMap, Subspace};
use common::{
    all_sets, connection_set, connection_set_in, fields_up_to, invertible_map, negation_classes,
    props, subspace_in,
};

/// `(inner set over F_p^k, ambient F_p^d, map of F_p^d)` with `k < d`.
fn lifting_case() -> impl Strategy<Value = (ConnectionSet, FieldSpec, LinearMap)> {
    let pairs: Vec<(FieldSpec, FieldSpec)> = fields_up_to(256)
        .into_iter()
        .flat_map(|amb| (1..amb.d()).map(move |k| (FieldSpec::new(amb.p(), k).unwrap(), amb)))
        .collect();
    prop::sample::select(pairs)
        .prop_flat_map(|(inner, amb)| (connection_set_in(inner), Just(amb), invertible_map(amb)))
}

fn gl_case() -> impl Strategy<Value = (ConnectionSet, LinearMap, Subspace, Subspace)> {
    connection_set(16).prop_flat_map(|c| {
        let f = c.field();
        (Just(c), invertible_map(f), subspace_in(f), subspace_in(f))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn duality_round_trip(c in connection_set(64)) {
        props::duality_round_trip(&c)?;
    }

    #[test]
    fn lifting_is_sound((inner, ambient, t) in lifting_case()) {
        props::lifting_soundness(&inner, ambient, &t)?;
    }

    #[test]
    fn projection_is_a_homomorphism(c in connection_set(256)) {
        props::projection_is_homomorphism(&c)?;
    }

    #[test]
    fn cca_check_is_gl_equivariant((c, t, v, w) in gl_case()) {
        props::gl_equivariance(&c, &t, &v, &w)?;
    }
}

#[test]
fn witness_dimension_is_well_defined() {
    for (p, d) in [(2, 3), (3, 2), (2, 2), (5, 2)] {
        let f = FieldSpec::new(p, d).unwrap();
        for c in all_sets(f) {
            props::witness_dimension_constant(&c).unwrap();
        }
    }
}

#[test]
fn projection_exhaustive_over_small_fields() {
    for f in fields_up_to(32) {
        if negation_classes(f).len() > 10 {
            continue;
        }
        for c in all_sets(f) {
            props::projection_is_homomorphism(&c).unwrap();
            props::duality_round_trip(&c).unwrap();
        }
    }
}
