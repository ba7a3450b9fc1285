//! The complete-core condition on a connection set.
//!
//! A pair of subspaces `(V, W)` with `V ⊕ W = (F_p)^d`, `V \ {0} ⊆ C` and
//! `W ∩ C = ∅` makes the projection onto `V` along `W` a retraction of
//! `Cay((F_p)^d, C)` onto the complete subgraph induced by `V`. This module
//! checks such pairs, searches for them, and transports them through
//! complementation and through enlarging the ambient space.

use std::fmt;

use serde::Serialize;

use crate::cayley::ConnectionSet;
use crate::error::{Error, Result};
use crate::gfp::{self, walk_rref, FVector, FieldSpec, RrefVisitor, Subspace};

/// Default cap on `p^d` for witness search.
pub const DEFAULT_WITNESS_CAP: u64 = 1 << 12;

/// The sharp degree threshold: 5 for `p = 2`, 12 for `p = 3`, 2 for `p ≥ 5`.
pub fn kappa(p: u64) -> Result<u64> {
    if !gfp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(match p {
        2 => 5,
        3 => 12,
        _ => 2,
    })
}

/// A pair `(V, W)` of complementary subspaces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CcaWitness {
    v: Subspace,
    w: Subspace,
}

impl CcaWitness {
    pub fn new(v: Subspace, w: Subspace) -> Result<Self> {
        if !gfp::is_direct_sum(&v, &w)? {
            return Err(Error::InvalidWitness(format!(
                "{v} and {w} are not complementary"
            )));
        }
        Ok(CcaWitness { v, w })
    }

    pub fn v(&self) -> &Subspace {
        &self.v
    }

    pub fn w(&self) -> &Subspace {
        &self.w
    }

    pub fn field(&self) -> FieldSpec {
        self.v.field()
    }

    /// `dim V`; the complete core it certifies has `p^dim V` vertices.
    pub fn dim(&self) -> usize {
        self.v.dim()
    }

    pub fn check(&self, c: &ConnectionSet) -> Result<CcaOutcome> {
        cca_check(c, &self.v, &self.w)
    }

    /// The vertex map `x ↦ g` where `x = g + h`, `g ∈ V`, `h ∈ W`, on vertex indices.
    pub fn projection_map(&self, cap: u64) -> Result<Vec<usize>> {
        let field = self.field();
        let n = field.check_order("projection map", cap)?;
        let units = (0..field.d())
            .map(|a| project(&field.unit(a), self).map(|g| g.index()))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..n)
            .map(|x| {
                let coords = field.vector_at(x);
                coords.coords().iter().zip(&units).fold(0, |acc, (&a, &g)| {
                    field.add_index(acc, field.scale_index(g, a))
                })
            })
            .collect())
    }
}

impl fmt::Display for CcaWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(V = {}, W = {})", self.v, self.w)
    }
}

impl fmt::Debug for CcaWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which requirement a candidate pair violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// (a) `V ⊕ W` is not the whole space.
    DirectSum,
    /// (b) some nonzero element of `V` is outside `C`.
    SummandInside,
    /// (c) some element of `W` lies in `C`.
    ComplementDisjoint,
}

impl Clause {
    pub fn label(&self) -> &'static str {
        match self {
            Clause::DirectSum => "a",
            Clause::SummandInside => "b",
            Clause::ComplementDisjoint => "c",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Clause::DirectSum => "V and W do not form a direct sum of the whole space",
            Clause::SummandInside => "V contains a nonzero vector outside C",
            Clause::ComplementDisjoint => "W meets C",
        };
        write!(f, "({}) {}", self.label(), text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CcaOutcome {
    Satisfied,
    Violated { clause: Clause, vector: FVector },
}

impl CcaOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CcaOutcome::Satisfied)
    }
}

/// Checks `(V, W)` against `C`, reporting the first failing clause in the
/// order (a), (b), (c) together with the least offending vector.
pub fn cca_check(c: &ConnectionSet, v: &Subspace, w: &Subspace) -> Result<CcaOutcome> {
    let field = c.field();
    field.ensure_same(&v.field())?;
    field.ensure_same(&w.field())?;

    if let Some(x) = v
        .elements()
        .into_iter()
        .find(|x| !x.is_zero() && w.contains(x).unwrap())
    {
        return Ok(CcaOutcome::Violated {
            clause: Clause::DirectSum,
            vector: x,
        });
    }
    if v.dim() + w.dim() != field.d() {
        let sum = v.sum(w)?;
        let missing = (0..field.order() as usize)
            .map(|i| field.vector_at(i))
            .find(|x| !sum.contains(x).unwrap())
            .expect("a proper subspace misses some vector");
        return Ok(CcaOutcome::Violated {
            clause: Clause::DirectSum,
            vector: missing,
        });
    }
    if let Some(x) = v
        .elements()
        .into_iter()
        .find(|x| !x.is_zero() && !c.contains(x))
    {
        return Ok(CcaOutcome::Violated {
            clause: Clause::SummandInside,
            vector: x,
        });
    }
    if let Some(x) = w.elements().into_iter().find(|x| c.contains(x)) {
        return Ok(CcaOutcome::Violated {
            clause: Clause::ComplementDisjoint,
            vector: x,
        });
    }
    Ok(CcaOutcome::Satisfied)
}

/// Result of an exhaustive witness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSearch {
    pub witness: Option<CcaWitness>,
    /// Subspaces `V` with `V \ {0} ⊆ C` that were tried.
    pub v_candidates: u64,
    /// Partial `W` bases visited while extending complements.
    pub w_nodes: u64,
}

/// Grows the partial span incrementally; every new element must pass `allowed`.
struct SpanGuard<'a> {
    field: FieldSpec,
    allowed: &'a dyn Fn(usize) -> bool,
    elements: Vec<usize>,
    marks: Vec<usize>,
    pushes: u64,
}

impl<'a> SpanGuard<'a> {
    fn new(field: FieldSpec, allowed: &'a dyn Fn(usize) -> bool) -> Self {
        SpanGuard {
            field,
            allowed,
            elements: vec![0],
            marks: Vec::new(),
            pushes: 0,
        }
    }

    fn try_push(&mut self, row: &FVector) -> bool {
        self.pushes += 1;
        let r = row.index();
        let base = self.elements.len();
        for a in 1..self.field.p() {
            let step = self.field.scale_index(r, a);
            for t in 0..base {
                let e = self.field.add_index(self.elements[t], step);
                if !(self.allowed)(e) {
                    self.elements.truncate(base);
                    return false;
                }
                self.elements.push(e);
            }
        }
        self.marks.push(base);
        true
    }

    fn pop(&mut self) {
        let base = self.marks.pop().expect("balanced push/pop");
        self.elements.truncate(base);
    }
}

struct ComplementSearch<'a> {
    guard: SpanGuard<'a>,
    found: Option<Vec<FVector>>,
}

impl RrefVisitor for ComplementSearch<'_> {
    fn push(&mut self, row: &FVector) -> bool {
        self.guard.try_push(row)
    }
    fn pop(&mut self) {
        self.guard.pop()
    }
    fn complete(&mut self, basis: &[FVector]) -> bool {
        self.found = Some(basis.to_vec());
        true
    }
}

struct SummandSearch<'a> {
    field: FieldSpec,
    in_c: &'a [bool],
    guard: SpanGuard<'a>,
    v_candidates: u64,
    w_nodes: u64,
    found: Option<CcaWitness>,
}

impl RrefVisitor for SummandSearch<'_> {
    fn push(&mut self, row: &FVector) -> bool {
        self.guard.try_push(row)
    }
    fn pop(&mut self) {
        self.guard.pop()
    }
    fn complete(&mut self, basis: &[FVector]) -> bool {
        self.v_candidates += 1;
        let field = self.field;
        let mut in_v = vec![false; self.in_c.len()];
        for &e in &self.guard.elements[1..] {
            in_v[e] = true;
        }
        let in_c = self.in_c;
        let avoids = move |e: usize| !(in_c[e] || in_v[e]);
        let mut inner = ComplementSearch {
            guard: SpanGuard::new(field, &avoids),
            found: None,
        };
        walk_rref(field, field.d() - basis.len(), &mut inner);
        self.w_nodes += inner.guard.pushes;
        if let Some(w_basis) = inner.found {
            let v = Subspace::span(field, basis).expect("same field");
            let w = Subspace::span(field, &w_basis).expect("same field");
            debug_assert_eq!(v.basis(), basis);
            self.found = Some(CcaWitness { v, w });
            return true;
        }
        false
    }
}

/// Exhaustive search for a witness. Among all valid witnesses the one with
/// the largest `dim V` is returned, ties broken by the lexicographic order of
/// the RREF bases of `V` and then `W`. A `None` answer means every subspace
/// inside `C ∪ {0}` was tried against every complement avoiding `C`.
pub fn search_witness(c: &ConnectionSet, cap: u64) -> Result<WitnessSearch> {
    let field = c.field();
    field.check_order("witness search", cap)?;
    let in_c = c.indicator(cap)?;
    let mut v_candidates = 0;
    let mut w_nodes = 0;
    let inside = |e: usize| in_c[e];
    for dim in (0..=field.d()).rev() {
        // a subspace of dimension `dim` needs p^dim - 1 elements of C
        if (field.p() as u64).pow(dim as u32) - 1 > c.len() as u64 {
            continue;
        }
        let mut search = SummandSearch {
            field,
            in_c: &in_c,
            guard: SpanGuard::new(field, &inside),
            v_candidates: 0,
            w_nodes: 0,
            found: None,
        };
        walk_rref(field, dim, &mut search);
        v_candidates += search.v_candidates;
        w_nodes += search.w_nodes;
        if let Some(witness) = search.found {
            return Ok(WitnessSearch {
                witness: Some(witness),
                v_candidates,
                w_nodes,
            });
        }
    }
    Ok(WitnessSearch {
        witness: None,
        v_candidates,
        w_nodes,
    })
}

pub fn find_witness(c: &ConnectionSet) -> Result<Option<CcaWitness>> {
    Ok(search_witness(c, DEFAULT_WITNESS_CAP)?.witness)
}

/// Every witness for `C`, by direct enumeration of subspace pairs.
pub fn all_witnesses(c: &ConnectionSet, cap: u64) -> Result<Vec<CcaWitness>> {
    let field = c.field();
    let mut out = Vec::new();
    for dim in 0..=field.d() {
        let vs: Vec<Subspace> = gfp::enumerate_subspaces(field, dim, cap)?
            .filter(|v| v.elements().iter().all(|x| x.is_zero() || c.contains(x)))
            .collect();
        if vs.is_empty() {
            continue;
        }
        let ws: Vec<Subspace> = gfp::enumerate_subspaces(field, field.d() - dim, cap)?
            .filter(|w| w.elements().iter().all(|x| !c.contains(x)))
            .collect();
        for v in &vs {
            for w in &ws {
                if gfp::is_direct_sum(v, w)? {
                    out.push(CcaWitness {
                        v: v.clone(),
                        w: w.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `(W, V)`, which is a witness for the complement of `C`.
pub fn dual_witness(c: &ConnectionSet, w: &CcaWitness) -> Result<CcaWitness> {
    if let CcaOutcome::Violated { clause, vector } = w.check(c)? {
        return Err(Error::InvalidWitness(format!(
            "{w} is not a witness for C: {clause} at {vector}"
        )));
    }
    Ok(CcaWitness {
        v: w.w.clone(),
        w: w.v.clone(),
    })
}

/// Extends a witness `(v, w)` valid inside `B = span(C)` to the ambient
/// space by adding the standard complement of `B` to `w`.
pub fn lift_witness(c: &ConnectionSet, v: &Subspace, w: &Subspace) -> Result<CcaWitness> {
    let field = c.field();
    field.ensure_same(&v.field())?;
    field.ensure_same(&w.field())?;
    let b = c.span();
    if !v.is_subspace_of(&b)? || !w.is_subspace_of(&b)? {
        return Err(Error::InvalidWitness(format!(
            "({v}, {w}) does not lie inside span(C) = {b}"
        )));
    }
    if v.dim() + w.dim() != b.dim() || v.sum(w)? != b {
        return Err(Error::InvalidWitness(format!(
            "({v}, {w}) is not a direct sum decomposition of span(C) = {b}"
        )));
    }
    if let Some(x) = v
        .elements()
        .into_iter()
        .find(|x| !x.is_zero() && !c.contains(x))
    {
        return Err(Error::InvalidWitness(format!(
            "V contains {x}, which is not in C"
        )));
    }
    if let Some(x) = w.elements().into_iter().find(|x| c.contains(x)) {
        return Err(Error::InvalidWitness(format!(
            "W contains {x}, which is in C"
        )));
    }
    Ok(CcaWitness {
        v: v.clone(),
        w: w.sum(&b.standard_complement())?,
    })
}

/// The `V`-component of `x` in the decomposition `x = g + h`.
pub fn project(x: &FVector, w: &CcaWitness) -> Result<FVector> {
    let field = w.field();
    let basis: Vec<FVector> = w.v.basis().iter().chain(w.w.basis()).cloned().collect();
    let coeffs = gfp::solve_combination(field, &basis, x)?
        .ok_or_else(|| Error::InvalidWitness(format!("{w} does not span {x}")))?;
    Ok(w.v
        .basis()
        .iter()
        .zip(&coeffs)
        .fold(field.zero(), |acc, (b, &a)| &acc + &b.scale(a)))
}
