//! Property bodies shared by the property suites and the acceptance run.

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use cayley_core::cayley::ConnectionSet;
use cayley_core::cca::{
    cca_check, dual_witness, lift_witness, search_witness, CcaWitness, DEFAULT_WITNESS_CAP,
};
use cayley_core::gfp::{FVector, FieldSpec, LinearMap, Subspace};
use cayley_core::graph::Graph;
use cayley_core::homcore::{
    certify_core_by_invariants, compute_core, find_endomorphism, is_core, is_homomorphism,
    CoreKind, EndoConstraint, SearchOptions, VertexMap,
};

use super::{graph_of, oracle, transform_set};

type Outcome = Result<(), TestCaseError>;

pub fn duality_round_trip(c: &ConnectionSet) -> Outcome {
    let search = search_witness(c, DEFAULT_WITNESS_CAP).unwrap();
    let complement = c.complement();
    let direct = search_witness(&complement, DEFAULT_WITNESS_CAP).unwrap();
    // a witness exists for C iff one exists for its complement
    prop_assert_eq!(search.witness.is_some(), direct.witness.is_some());
    if let Some(w) = search.witness {
        let dual = dual_witness(c, &w).unwrap();
        prop_assert!(dual.check(&complement).unwrap().holds());
        prop_assert_eq!(dual.v(), w.w());
        prop_assert_eq!(dual.dim() + w.dim(), c.field().d());
        prop_assert_eq!(&dual_witness(&complement, &dual).unwrap(), &w);
        prop_assert_eq!(direct.witness.unwrap().dim(), dual.dim());
    }
    Ok(())
}

/// Embeds `F_p^k` as the first `k` coordinates of `F_p^d` and moves it by `t`.
fn embed(v: &FVector, ambient: FieldSpec, t: &LinearMap) -> FVector {
    let mut coords: Vec<i64> = v.coords().iter().map(|&c| c as i64).collect();
    coords.resize(ambient.d(), 0);
    t.apply(&ambient.vector(&coords).unwrap()).unwrap()
}

/// A witness for `inner` over `F_p^k`, carried into `F_p^d` by `t`, lifts to
/// an ambient witness of the same dimension.
pub fn lifting_soundness(inner: &ConnectionSet, ambient: FieldSpec, t: &LinearMap) -> Outcome {
    let Some(w) = search_witness(inner, DEFAULT_WITNESS_CAP).unwrap().witness else {
        return Ok(());
    };
    // only meaningful when the inner witness lives inside span(C)
    if inner.span().dim() != inner.field().d() {
        return Ok(());
    }
    let move_all =
        |vs: &[FVector]| -> Vec<FVector> { vs.iter().map(|v| embed(v, ambient, t)).collect() };
    let elements: Vec<FVector> = inner.elements().cloned().collect();
    let c = ConnectionSet::new(ambient, &move_all(&elements), false).unwrap();
    let v = Subspace::span(ambient, &move_all(w.v().basis())).unwrap();
    let wsub = Subspace::span(ambient, &move_all(w.w().basis())).unwrap();
    let lifted = lift_witness(&c, &v, &wsub).unwrap();
    prop_assert!(lifted.check(&c).unwrap().holds(), "{lifted} fails on {c:?}");
    prop_assert_eq!(lifted.dim(), w.dim());
    let found = search_witness(&c, DEFAULT_WITNESS_CAP).unwrap().witness;
    prop_assert_eq!(found.map(|x| x.dim()), Some(w.dim()));
    Ok(())
}

/// The projection `x = g + h ↦ g` along a witness is an idempotent
/// endomorphism of the Cayley graph onto `V`, which is a clique.
pub fn projection_is_homomorphism(c: &ConnectionSet) -> Outcome {
    let Some(w) = search_witness(c, DEFAULT_WITNESS_CAP).unwrap().witness else {
        return Ok(());
    };
    let g = graph_of(c);
    let map = VertexMap::new(w.projection_map(DEFAULT_WITNESS_CAP).unwrap());
    prop_assert!(is_homomorphism(&map, &g, &g).unwrap());
    prop_assert!(map.is_idempotent());
    let image = map.image();
    prop_assert_eq!(&image, &w.v().element_indices());
    prop_assert!(g.is_clique(&image));
    Ok(())
}

/// `cca_check` commutes with invertible linear maps.
pub fn gl_equivariance(c: &ConnectionSet, t: &LinearMap, v: &Subspace, w: &Subspace) -> Outcome {
    let tc = transform_set(t, c);
    let tv = t.image(v).unwrap();
    let tw = t.image(w).unwrap();
    let before = cca_check(c, v, w).unwrap();
    let after = cca_check(&tc, &tv, &tw).unwrap();
    prop_assert_eq!(before.holds(), after.holds());
    let dims = |s: &ConnectionSet| {
        search_witness(s, DEFAULT_WITNESS_CAP)
            .unwrap()
            .witness
            .map(|x| x.dim())
    };
    prop_assert_eq!(dims(c), dims(&tc));
    Ok(())
}

/// Library search verdicts agree with the exhaustive map scan.
pub fn endomorphism_oracle(g: &Graph) -> Outcome {
    let opts = SearchOptions::default();
    let expected = oracle::has_non_injective_endomorphism(g);
    for constraint in [
        EndoConstraint::NonInjective,
        EndoConstraint::ImageStrictlySmaller,
    ] {
        let found = find_endomorphism(g, constraint, &opts).unwrap();
        prop_assert_eq!(found.is_some(), expected, "{:?}", constraint);
        if let Some(f) = found {
            prop_assert!(is_homomorphism(&f, g, g).unwrap());
            prop_assert!(!f.is_injective());
        }
    }
    let any = find_endomorphism(g, EndoConstraint::Any, &opts).unwrap();
    prop_assert!(any.is_some_and(|f| is_homomorphism(&f, g, g).unwrap()));
    prop_assert_eq!(is_core(g, &opts).unwrap(), !expected);
    Ok(())
}

/// `compute_core` matches the least endomorphism image, its retraction is
/// valid, and the core is its own core.
pub fn core_oracle(g: &Graph, opts: &SearchOptions) -> Outcome {
    let cert = compute_core(g, opts).unwrap();
    prop_assert_eq!(cert.order(), oracle::core_order(g));
    core_consistency(g, opts)
}

pub fn core_consistency(g: &Graph, opts: &SearchOptions) -> Outcome {
    let cert = compute_core(g, opts).unwrap();
    let r = &cert.retraction;
    prop_assert!(r.is_idempotent());
    prop_assert!(is_homomorphism(r, g, g).unwrap());
    prop_assert_eq!(&r.image(), &cert.vertices);
    let core = cert.core_graph(g);
    prop_assert_eq!(cert.is_complete(), core.is_complete());
    let again = compute_core(&core, &SearchOptions::default()).unwrap();
    prop_assert_eq!(again.order(), cert.order());
    let identity = again
        .retraction
        .images()
        .iter()
        .enumerate()
        .all(|(u, &x)| u == x);
    prop_assert!(identity);
    prop_assert_eq!(
        again.core_graph(&core).degree_sequence(),
        core.degree_sequence()
    );
    prop_assert!(is_core(&core, &SearchOptions::default()).unwrap());
    Ok(())
}

/// The core of a Cayley graph on `F_p^d` has order dividing `p^d`.
pub fn core_order_divides(c: &ConnectionSet) -> Outcome {
    let g = graph_of(c);
    let cert = compute_core(&g, &SearchOptions::transitive(g.order())).unwrap();
    prop_assert_eq!(g.order() % cert.order(), 0);
    let n = cert.order() as u64;
    let p = c.field().p() as u64;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    prop_assert_eq!(m, 1, "core order {} is not a power of {}", n, p);
    Ok(())
}

/// The invariant chain never contradicts direct search.
pub fn certify_agrees(g: &Graph) -> Outcome {
    let opts = SearchOptions::transitive(g.order().max(1));
    if let Some(cert) = certify_core_by_invariants(g, &opts).unwrap() {
        prop_assert!(is_core(g, &opts).unwrap());
        prop_assert_eq!(cert.kind == CoreKind::Complete, g.is_complete());
        prop_assert_eq!(cert.order(), g.order());
    }
    Ok(())
}

/// All witnesses for `c` share one `dim V`, and the search finds it.
pub fn witness_dimension_constant(c: &ConnectionSet) -> Outcome {
    let all = cayley_core::cca::all_witnesses(c, DEFAULT_WITNESS_CAP).unwrap();
    let dims: std::collections::BTreeSet<usize> = all.iter().map(CcaWitness::dim).collect();
    prop_assert!(dims.len() <= 1, "{c:?} has witnesses of dims {dims:?}");
    let found = search_witness(c, DEFAULT_WITNESS_CAP).unwrap().witness;
    prop_assert_eq!(found.map(|w| w.dim()), dims.first().copied());
    Ok(())
}
