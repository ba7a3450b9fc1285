//! Exact linear algebra over a prime field `F_p`.
//!
//! Vectors are coordinate lists; subspaces are kept in reduced row echelon
//! form so that equal subspaces compare equal. Vertices of Cayley graphs are
//! addressed by the base-`p` integer of their coordinates (coordinate 1 most
//! significant), and the `*_index` helpers on [`FieldSpec`] do arithmetic
//! directly on those integers.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on `p^d` for operations that enumerate the ambient space.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 12;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// The ambient space `(F_p)^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    p: u32,
    d: usize,
    order: u64,
}

impl FieldSpec {
    pub fn new(p: u32, d: usize) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let order = (p as u64)
            .checked_pow(d as u32)
            .filter(|&o| o <= usize::MAX as u64)
            .ok_or(Error::FieldTooLarge { p: p as u64, d })?;
        Ok(FieldSpec { p, d, order })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of vectors, `p^d`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn check_order(&self, what: &'static str, cap: u64) -> Result<usize> {
        if self.order > cap {
            Err(Error::ResourceLimit {
                what,
                size: self.order,
                cap,
            })
        } else {
            Ok(self.order as usize)
        }
    }

    pub fn zero(&self) -> FVector {
        FVector {
            field: *self,
            coords: vec![0; self.d],
        }
    }

    /// The standard basis vector `e_{axis+1}`; `unit(0)` is `i`.
    pub fn unit(&self, axis: usize) -> FVector {
        assert!(axis < self.d, "axis {axis} out of range for d = {}", self.d);
        let mut v = self.zero();
        v.coords[axis] = 1;
        v
    }

    /// Builds a vector from integers that must already lie in `[0, p)`.
    pub fn vector(&self, coords: &[i64]) -> Result<FVector> {
        if coords.len() != self.d {
            return Err(Error::WrongLength {
                expected: self.d,
                found: coords.len(),
            });
        }
        let mut out = Vec::with_capacity(self.d);
        for (position, &value) in coords.iter().enumerate() {
            if value < 0 || value >= self.p as i64 {
                return Err(Error::CoordinateOutOfRange {
                    value,
                    position,
                    p: self.p,
                });
            }
            out.push(value as u32);
        }
        Ok(FVector {
            field: *self,
            coords: out,
        })
    }

    /// Builds a vector reducing every entry mod `p` (negative entries allowed).
    pub fn vector_mod(&self, coords: &[i64]) -> Result<FVector> {
        if coords.len() != self.d {
            return Err(Error::WrongLength {
                expected: self.d,
                found: coords.len(),
            });
        }
        let p = self.p as i64;
        Ok(FVector {
            field: *self,
            coords: coords.iter().map(|&c| c.rem_euclid(p) as u32).collect(),
        })
    }

    pub fn vector_at(&self, index: usize) -> FVector {
        debug_assert!((index as u64) < self.order);
        let mut coords = vec![0; self.d];
        let mut rest = index as u64;
        for slot in coords.iter_mut().rev() {
            *slot = (rest % self.p as u64) as u32;
            rest /= self.p as u64;
        }
        FVector {
            field: *self,
            coords,
        }
    }

    pub fn add_index(&self, a: usize, b: usize) -> usize {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p as usize)
    }

    pub fn sub_index(&self, a: usize, b: usize) -> usize {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p as usize;
        self.digitwise(a, b, |x, y| (x + p - y) % p)
    }

    pub fn neg_index(&self, a: usize) -> usize {
        self.sub_index(0, a)
    }

    pub fn scale_index(&self, a: usize, scalar: u32) -> usize {
        let p = self.p as usize;
        let s = scalar as usize % p;
        self.digitwise(a, 0, |x, _| (x * s) % p)
    }

    fn digitwise(&self, mut a: usize, mut b: usize, op: impl Fn(usize, usize) -> usize) -> usize {
        let p = self.p as usize;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.d {
            out += op(a % p, b % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    /// Canonical representatives (first nonzero coordinate 1) of the points
    /// of the projective space, in increasing index order.
    pub fn projective_points(&self) -> Vec<FVector> {
        (1..self.order as usize)
            .map(|i| self.vector_at(i))
            .filter(|v| v.first_nonzero().map(|(_, c)| c == 1).unwrap_or(false))
            .collect()
    }

    pub(crate) fn ensure_same(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected_p: self.p,
                expected_d: self.d,
                found_p: other.p,
                found_d: other.d,
            })
        }
    }

    fn inv(&self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        pow_mod(a as u64, self.p as u64 - 2, self.p as u64) as u32
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// An element of `(F_p)^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVector {
    field: FieldSpec,
    coords: Vec<u32>,
}

impl FVector {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn index(&self) -> usize {
        let p = self.field.p as usize;
        self.coords.iter().fold(0, |acc, &c| acc * p + c as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn first_nonzero(&self) -> Option<(usize, u32)> {
        self.coords
            .iter()
            .enumerate()
            .find(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
    }

    pub fn scale(&self, scalar: u32) -> FVector {
        let s = scalar % self.field.p;
        FVector {
            field: self.field,
            coords: self.coords.iter().map(|&c| self.field.mul(c, s)).collect(),
        }
    }

    /// Rescales so the first nonzero coordinate is 1; the zero vector is returned unchanged.
    pub fn projective_normal(&self) -> FVector {
        match self.first_nonzero() {
            Some((_, lead)) => self.scale(self.field.inv(lead)),
            None => self.clone(),
        }
    }

    /// `{a·self : a = 1..p-1}`.
    pub fn nonzero_multiples(&self) -> Vec<FVector> {
        (1..self.field.p).map(|a| self.scale(a)).collect()
    }

    fn zip_with(&self, other: &FVector, op: impl Fn(u32, u32) -> u32) -> FVector {
        assert_eq!(self.field, other.field, "vectors from different spaces");
        FVector {
            field: self.field,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, c) in self.coords.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::ops::Add for &FVector {
    type Output = FVector;
    fn add(self, rhs: &FVector) -> FVector {
        let p = self.field.p;
        self.zip_with(rhs, |a, b| (a + b) % p)
    }
}

impl std::ops::Sub for &FVector {
    type Output = FVector;
    fn sub(self, rhs: &FVector) -> FVector {
        let p = self.field.p;
        self.zip_with(rhs, |a, b| (a + p - b) % p)
    }
}

impl std::ops::Neg for &FVector {
    type Output = FVector;
    fn neg(self) -> FVector {
        let p = self.field.p;
        FVector {
            field: self.field,
            coords: self.coords.iter().map(|&c| (p - c) % p).collect(),
        }
    }
}

/// A linear subspace in reduced row echelon form.
///
/// Rows have leading entry 1, each pivot column is otherwise zero and pivots
/// strictly increase, so two `Subspace` values are equal exactly when they
/// describe the same subspace. The derived ordering compares bases
/// lexicographically row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: FieldSpec,
    basis: Vec<FVector>,
}

impl Subspace {
    pub fn zero(field: FieldSpec) -> Self {
        Subspace {
            field,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec) -> Self {
        Subspace {
            field,
            basis: (0..field.d).map(|a| field.unit(a)).collect(),
        }
    }

    /// The `F_p`-linear span of `vectors`, in canonical form.
    pub fn span<'a, I>(field: FieldSpec, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a FVector>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            field.ensure_same(&v.field)?;
            rows.push(v.coords.clone());
        }
        Ok(Subspace {
            field,
            basis: rref(field, rows)
                .into_iter()
                .map(|coords| FVector { field, coords })
                .collect(),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FVector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.first_nonzero().expect("RREF rows are nonzero").0)
            .collect()
    }

    /// Number of elements, `p^dim`.
    pub fn size(&self) -> u64 {
        (self.field.p as u64).pow(self.dim() as u32)
    }

    pub fn contains(&self, v: &FVector) -> Result<bool> {
        self.field.ensure_same(&v.field)?;
        Ok(self.reduce(v).iter().all(|&c| c == 0))
    }

    fn reduce(&self, v: &FVector) -> Vec<u32> {
        let p = self.field.p;
        let mut rest = v.coords.clone();
        for (row, pivot) in self.basis.iter().zip(self.pivots()) {
            let factor = rest[pivot];
            if factor != 0 {
                for (r, &b) in rest.iter_mut().zip(&row.coords) {
                    *r = (*r + p - self.field.mul(factor, b)) % p;
                }
            }
        }
        rest
    }

    /// Coefficients of `v` in this basis; `None` if `v` is not in the subspace.
    pub fn coordinates_of(&self, v: &FVector) -> Result<Option<Vec<u32>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots().iter().map(|&q| v.coords[q]).collect()))
    }

    /// Every element, in the order of the basis coefficients read as a base-`p` integer.
    pub fn elements(&self) -> Vec<FVector> {
        let mut out = vec![self.field.zero()];
        for row in self.basis.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * self.field.p as usize);
            for a in 0..self.field.p {
                let scaled = row.scale(a);
                next.extend(out.iter().map(|e| &scaled + e));
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn element_indices(&self) -> Vec<usize> {
        let f = self.field;
        let mut out = vec![0usize];
        for row in &self.basis {
            let r = row.index();
            let mut next = Vec::with_capacity(out.len() * f.p as usize);
            for a in 0..f.p {
                let scaled = f.scale_index(r, a);
                next.extend(out.iter().map(|&e| f.add_index(e, scaled)));
            }
            out = next;
        }
        out.sort_unstable();
        out
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.field.ensure_same(&other.field)?;
        Subspace::span(self.field, self.basis.iter().chain(&other.basis))
    }

    /// The span of the standard basis vectors at this subspace's non-pivot
    /// columns. It is always a direct complement, and serves as the image of
    /// a fixed section of the quotient map onto `(F_p)^d / self`.
    pub fn standard_complement(&self) -> Subspace {
        let pivots = self.pivots();
        Subspace {
            field: self.field,
            basis: (0..self.field.d)
                .filter(|c| !pivots.contains(c))
                .map(|c| self.field.unit(c))
                .collect(),
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.field.ensure_same(&other.field)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (n, b) in self.basis.iter().enumerate() {
            if n > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn rref(field: FieldSpec, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let p = field.p;
    let mut rank = 0;
    for col in 0..field.d {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = field.inv(rows[rank][col]);
        for c in rows[rank].iter_mut() {
            *c = field.mul(*c, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &b) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - field.mul(factor, b)) % p;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

pub fn rank(field: FieldSpec, rows: &[Vec<u32>]) -> usize {
    rref(field, rows.to_vec()).len()
}

/// True iff `v ∩ w = {0}` and `dim v + dim w = d`.
pub fn is_direct_sum(v: &Subspace, w: &Subspace) -> Result<bool> {
    v.field.ensure_same(&w.field)?;
    if v.dim() + w.dim() != v.field.d {
        return Ok(false);
    }
    Ok(v.sum(w)?.dim() == v.field.d)
}

/// Coefficients `c` with `Σ c_t vectors[t] = target`, if any exist.
pub fn solve_combination(
    field: FieldSpec,
    vectors: &[FVector],
    target: &FVector,
) -> Result<Option<Vec<u32>>> {
    field.ensure_same(&target.field)?;
    for v in vectors {
        field.ensure_same(&v.field)?;
    }
    let m = vectors.len();
    // rows of the augmented matrix [v_1 .. v_m | target]
    let rows: Vec<Vec<u32>> = (0..field.d)
        .map(|r| {
            vectors
                .iter()
                .map(|v| v.coords[r])
                .chain(std::iter::once(target.coords[r]))
                .collect()
        })
        .collect();
    let wide = FieldSpec {
        p: field.p,
        d: m + 1,
        order: 0,
    };
    let reduced = rref(wide, rows);
    let mut solution = vec![0u32; m];
    for row in &reduced {
        let pivot = row.iter().position(|&c| c != 0).expect("nonzero row");
        if pivot == m {
            return Ok(None);
        }
        solution[pivot] = row[m];
    }
    Ok(Some(solution))
}

/// Candidate next rows of an RREF basis extending `rows`, in increasing
/// lexicographic order, keeping room for `remaining` further pivots.
pub(crate) fn next_rows(field: FieldSpec, rows: &[FVector], remaining: usize) -> Vec<FVector> {
    let d = field.d;
    let last = rows
        .last()
        .map(|r| r.first_nonzero().expect("nonzero row").0 as isize)
        .unwrap_or(-1);
    let mut out = Vec::new();
    // a larger pivot column gives a lexicographically smaller row
    for q in ((last + 1) as usize..d).rev() {
        if rows.iter().any(|r| r.coords[q] != 0) {
            continue;
        }
        let free: Vec<usize> = ((q + 1)..d).collect();
        let available: Vec<bool> = free
            .iter()
            .map(|&c| rows.iter().all(|r| r.coords[c] == 0))
            .collect();
        if available.iter().filter(|&&a| a).count() < remaining {
            continue;
        }
        let combos = (field.p as u64).pow(free.len() as u32);
        for code in 0..combos {
            let mut coords = vec![0u32; d];
            coords[q] = 1;
            let mut rest = code;
            for &c in free.iter().rev() {
                coords[c] = (rest % field.p as u64) as u32;
                rest /= field.p as u64;
            }
            let zero_slots = free
                .iter()
                .zip(&available)
                .filter(|(&c, &a)| a && coords[c] == 0)
                .count();
            if zero_slots < remaining {
                continue;
            }
            out.push(FVector { field, coords });
        }
    }
    out
}

/// Depth-first walk over RREF bases of a fixed dimension in lexicographic
/// order, with a hook for pruning partial bases.
pub(crate) trait RrefVisitor {
    /// Called when `row` is appended to the partial basis. Returning `false`
    /// prunes every basis with this prefix (and `pop` is not called).
    fn push(&mut self, row: &FVector) -> bool;
    fn pop(&mut self);
    /// Called on every full basis that survives pruning; return `true` to stop.
    fn complete(&mut self, basis: &[FVector]) -> bool;
}

/// Returns `true` if the visitor asked to stop.
pub(crate) fn walk_rref<V: RrefVisitor>(field: FieldSpec, dim: usize, visitor: &mut V) -> bool {
    fn go<V: RrefVisitor>(
        field: FieldSpec,
        dim: usize,
        rows: &mut Vec<FVector>,
        visitor: &mut V,
    ) -> bool {
        if rows.len() == dim {
            return visitor.complete(rows);
        }
        for row in next_rows(field, rows, dim - rows.len() - 1) {
            if !visitor.push(&row) {
                continue;
            }
            rows.push(row);
            let stop = go(field, dim, rows, visitor);
            rows.pop();
            visitor.pop();
            if stop {
                return true;
            }
        }
        false
    }
    if dim > field.d {
        return false;
    }
    go(field, dim, &mut Vec::with_capacity(dim), visitor)
}

/// Lazy stream over all `dim`-dimensional subspaces in lexicographic order
/// of their RREF bases.
#[derive(Debug)]
pub struct SubspaceIter {
    field: FieldSpec,
    dim: usize,
    rows: Vec<FVector>,
    stack: Vec<(Vec<FVector>, usize)>,
    done: bool,
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        if self.dim == 0 {
            self.done = true;
            return Some(Subspace::zero(self.field));
        }
        // the top of the stack holds the candidates for row `rows.len()`
        loop {
            let (candidates, pos) = self.stack.last_mut()?;
            if *pos >= candidates.len() {
                self.stack.pop();
                self.rows.pop();
                continue;
            }
            let row = candidates[*pos].clone();
            *pos += 1;
            if self.rows.len() + 1 == self.dim {
                let mut basis = self.rows.clone();
                basis.push(row);
                return Some(Subspace {
                    field: self.field,
                    basis,
                });
            }
            self.rows.push(row);
            let remaining = self.dim - self.rows.len() - 1;
            let next = next_rows(self.field, &self.rows, remaining);
            self.stack.push((next, 0));
        }
    }
}

/// All `dim`-dimensional subspaces of `field`, each exactly once.
pub fn enumerate_subspaces(field: FieldSpec, dim: usize, cap: u64) -> Result<SubspaceIter> {
    field.check_order("subspace enumeration", cap)?;
    if dim > field.d {
        return Err(Error::InvalidArgument(format!(
            "subspace dimension {dim} exceeds ambient dimension {}",
            field.d
        )));
    }
    let first = if dim == 0 {
        Vec::new()
    } else {
        vec![(next_rows(field, &[], dim - 1), 0)]
    };
    Ok(SubspaceIter {
        field,
        dim,
        rows: Vec::new(),
        stack: first,
        done: false,
    })
}

/// A `d × d` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: FieldSpec,
    matrix: Vec<Vec<u32>>,
}

impl LinearMap {
    pub fn identity(field: FieldSpec) -> Self {
        let matrix = (0..field.d)
            .map(|r| (0..field.d).map(|c| u32::from(r == c)).collect())
            .collect();
        LinearMap { field, matrix }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != field.d {
            return Err(Error::WrongLength {
                expected: field.d,
                found: rows.len(),
            });
        }
        for row in &rows {
            if row.len() != field.d {
                return Err(Error::WrongLength {
                    expected: field.d,
                    found: row.len(),
                });
            }
            if let Some((position, &value)) = row.iter().enumerate().find(|(_, &v)| v >= field.p) {
                return Err(Error::CoordinateOutOfRange {
                    value: value as i64,
                    position,
                    p: field.p,
                });
            }
        }
        Ok(LinearMap {
            field,
            matrix: rows,
        })
    }

    /// The map sending `e_a` to `e_{perm[a]}`.
    pub fn permutation(field: FieldSpec, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; field.d];
        if perm.len() != field.d {
            return Err(Error::WrongLength {
                expected: field.d,
                found: perm.len(),
            });
        }
        let mut matrix = vec![vec![0; field.d]; field.d];
        for (a, &b) in perm.iter().enumerate() {
            if b >= field.d || std::mem::replace(&mut seen[b], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            matrix[b][a] = 1;
        }
        Ok(LinearMap { field, matrix })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn is_invertible(&self) -> bool {
        rank(self.field, &self.matrix) == self.field.d
    }

    pub fn apply(&self, v: &FVector) -> Result<FVector> {
        self.field.ensure_same(&v.field)?;
        let p = self.field.p as u64;
        let coords = self
            .matrix
            .iter()
            .map(|row| {
                (row.iter()
                    .zip(&v.coords)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    % p) as u32
            })
            .collect();
        Ok(FVector {
            field: self.field,
            coords,
        })
    }

    /// `{T(c) : c ∈ set}`; with `require_invertible`, a singular map is an error.
    pub fn apply_set<'a, I>(&self, set: I, require_invertible: bool) -> Result<BTreeSet<FVector>>
    where
        I: IntoIterator<Item = &'a FVector>,
    {
        if require_invertible && !self.is_invertible() {
            return Err(Error::SingularMap);
        }
        set.into_iter().map(|v| self.apply(v)).collect()
    }

    pub fn image(&self, s: &Subspace) -> Result<Subspace> {
        let images = s
            .basis()
            .iter()
            .map(|b| self.apply(b))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.field, &images)
    }
}
