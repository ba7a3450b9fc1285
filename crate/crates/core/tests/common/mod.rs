#![allow(dead_code)]

pub mod oracle;
pub mod props;

use proptest::prelude::*;

use cayley_core::cayley::{CayleyGraph, ConnectionSet, DEFAULT_MATERIALIZE_CAP};
use cayley_core::gfp::{FVector, FieldSpec, LinearMap, Subspace};
use cayley_core::graph::Graph;

/// Every `F_p^d` with `p^d ≤ max_order` and `d ≥ 1`.
pub fn fields_up_to(max_order: u64) -> Vec<FieldSpec> {
    let mut out = Vec::new();
    for p in [2u32, 3, 5, 7, 11, 13] {
        for d in 1..=8 {
            if (p as u64).pow(d as u32) <= max_order {
                out.push(FieldSpec::new(p, d).unwrap());
            }
        }
    }
    out
}

pub fn field(max_order: u64) -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(fields_up_to(max_order))
}

/// One representative of each class `{v, -v}` of nonzero vectors.
pub fn negation_classes(field: FieldSpec) -> Vec<FVector> {
    (1..field.order() as usize)
        .filter(|&i| i <= field.neg_index(i))
        .map(|i| field.vector_at(i))
        .collect()
}

/// The symmetric set made of the classes picked by `chosen`.
pub fn set_from_choice(field: FieldSpec, chosen: &[bool]) -> ConnectionSet {
    let reps: Vec<FVector> = negation_classes(field)
        .into_iter()
        .zip(chosen)
        .filter(|(_, &pick)| pick)
        .map(|(v, _)| v)
        .collect();
    ConnectionSet::new(field, &reps, true).unwrap()
}

/// The symmetric set made of the classes selected by the bits of `mask`.
pub fn set_from_mask(field: FieldSpec, mask: u64) -> ConnectionSet {
    let classes = negation_classes(field).len();
    assert!(classes <= 64);
    let chosen: Vec<bool> = (0..classes).map(|t| mask >> t & 1 == 1).collect();
    set_from_choice(field, &chosen)
}

/// Every symmetric zero-free subset of `field`.
pub fn all_sets(field: FieldSpec) -> Vec<ConnectionSet> {
    let classes = negation_classes(field).len();
    assert!(classes < 20, "too many sets to enumerate");
    (0..1u64 << classes)
        .map(|m| set_from_mask(field, m))
        .collect()
}

pub fn connection_set_in(field: FieldSpec) -> impl Strategy<Value = ConnectionSet> {
    let classes = negation_classes(field).len();
    prop::collection::vec(any::<bool>(), classes)
        .prop_map(move |chosen| set_from_choice(field, &chosen))
}

/// Symmetric zero-free sets over fields of order at most `max_order`.
pub fn connection_set(max_order: u64) -> impl Strategy<Value = ConnectionSet> {
    field(max_order).prop_flat_map(connection_set_in)
}

/// Fields where exact core computation is quick on random connection sets:
/// `F_2^d` for `d ≤ 5`, `F_3^d` for `d ≤ 3`, and prime fields up to 13.
pub fn core_fields() -> Vec<FieldSpec> {
    fields_up_to(32)
        .into_iter()
        .filter(|f| f.p() <= 3 || f.d() == 1)
        .collect()
}

pub fn cayley_fixture() -> impl Strategy<Value = ConnectionSet> {
    prop::sample::select(core_fields()).prop_flat_map(connection_set_in)
}

pub fn vector_in(field: FieldSpec) -> impl Strategy<Value = FVector> {
    let p = field.p() as i64;
    prop::collection::vec(0..p, field.d()).prop_map(move |c| field.vector(&c).unwrap())
}

pub fn subspace_in(field: FieldSpec) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(vector_in(field), 0..=field.d())
        .prop_map(move |vs| Subspace::span(field, &vs).unwrap())
}

pub fn invertible_map(field: FieldSpec) -> impl Strategy<Value = LinearMap> {
    let p = field.p();
    let d = field.d();
    prop::collection::vec(prop::collection::vec(0..p, d), d)
        .prop_map(move |rows| LinearMap::from_rows(field, rows).unwrap())
        .prop_filter("singular", LinearMap::is_invertible)
}

pub fn graph_of(c: &ConnectionSet) -> Graph {
    CayleyGraph::new(c.clone())
        .materialize(DEFAULT_MATERIALIZE_CAP)
        .unwrap()
}

/// Random simple graphs on `1..=max_n` vertices.
pub fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut t = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[t] {
                        edges.push((u, v));
                    }
                    t += 1;
                }
            }
            Graph::from_edges(n, edges)
        })
    })
}

/// `T(C)` as a connection set.
pub fn transform_set(t: &LinearMap, c: &ConnectionSet) -> ConnectionSet {
    let image: Vec<FVector> = t
        .apply_set(c.elements(), true)
        .unwrap()
        .into_iter()
        .collect();
    ConnectionSet::new(c.field(), &image, false).unwrap()
}
