//! Connection sets on `(F_p)^d` and the Cayley graphs they define.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::{FVector, FieldSpec, Subspace};
use crate::graph::Graph;

/// Default cap on the number of vertices of a materialized Cayley graph.
pub const DEFAULT_MATERIALIZE_CAP: u64 = 4096;

/// A zero-free subset `C` of `(F_p)^d` with `-C = C`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet {
    field: FieldSpec,
    elements: BTreeSet<FVector>,
}

impl ConnectionSet {
    pub fn empty(field: FieldSpec) -> Self {
        ConnectionSet {
            field,
            elements: BTreeSet::new(),
        }
    }

    /// `(F_p)^d \ {0}`.
    pub fn all_nonzero(field: FieldSpec) -> Self {
        ConnectionSet::empty(field).complement()
    }

    /// With `close`, adds the negatives of the generators; without it the
    /// generators must already be closed under negation. The zero vector is
    /// rejected in both modes.
    pub fn new(field: FieldSpec, generators: &[FVector], close: bool) -> Result<Self> {
        let mut elements = BTreeSet::new();
        for g in generators {
            field.ensure_same(&g.field())?;
            if g.is_zero() {
                return Err(Error::InvalidConnectionSet(
                    "the zero vector cannot be a connection element".into(),
                ));
            }
            elements.insert(g.clone());
            if close {
                elements.insert(-g);
            }
        }
        if !close {
            if let Some(c) = elements.iter().find(|c| !elements.contains(&-*c)) {
                return Err(Error::SymmetryViolation {
                    element: c.clone(),
                    missing: -c,
                });
            }
        }
        Ok(ConnectionSet { field, elements })
    }

    /// All nonzero multiples of the given projective representatives. Each
    /// representative is normalized so its first nonzero coordinate is 1.
    pub fn projective(field: FieldSpec, lines: &[FVector]) -> Result<Self> {
        if field.p() == 2 {
            return Err(Error::InvalidArgument(
                "projective specification needs an odd prime".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        let mut elements = BTreeSet::new();
        for line in lines {
            field.ensure_same(&line.field())?;
            if line.is_zero() {
                return Err(Error::InvalidConnectionSet(
                    "the zero vector does not name a projective point".into(),
                ));
            }
            let rep = line.projective_normal();
            if !seen.insert(rep.clone()) {
                return Err(Error::DuplicateLine(rep));
            }
            elements.extend(rep.nonzero_multiples());
        }
        Ok(ConnectionSet { field, elements })
    }

    /// Builds a set from vertex indices, validating zero-freeness and symmetry.
    pub fn from_indices(field: FieldSpec, indices: &[usize]) -> Result<Self> {
        let vectors: Vec<FVector> = indices.iter().map(|&i| field.vector_at(i)).collect();
        ConnectionSet::new(field, &vectors, false)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &FVector> {
        self.elements.iter()
    }

    pub fn contains(&self, v: &FVector) -> bool {
        self.elements.contains(v)
    }

    /// Sorted vertex indices of the elements.
    pub fn indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.elements.iter().map(FVector::index).collect();
        out.sort_unstable();
        out
    }

    /// Dense membership table over all `p^d` indices.
    pub fn indicator(&self, cap: u64) -> Result<Vec<bool>> {
        let n = self.field.check_order("connection-set indicator", cap)?;
        let mut table = vec![false; n];
        for c in &self.elements {
            table[c.index()] = true;
        }
        Ok(table)
    }

    /// `((F_p)^d \ {0}) \ C`.
    pub fn complement(&self) -> Self {
        let elements = (1..self.field.order() as usize)
            .map(|i| self.field.vector_at(i))
            .filter(|v| !self.elements.contains(v))
            .collect();
        ConnectionSet {
            field: self.field,
            elements,
        }
    }

    pub fn span(&self) -> Subspace {
        Subspace::span(self.field, &self.elements).expect("elements share the field")
    }

    /// Canonical projective representatives of the lines making up the set.
    pub fn projective_lines(&self) -> Vec<FVector> {
        let reps: BTreeSet<FVector> = self
            .elements
            .iter()
            .map(FVector::projective_normal)
            .collect();
        reps.into_iter().collect()
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, c) in self.elements.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} {}", self.field.p(), self.field.d(), self)
    }
}

/// `Cay((F_p)^d, C)`: vertices are all of `(F_p)^d`, `x ~ y` iff `x - y ∈ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGraph {
    connection: ConnectionSet,
}

impl CayleyGraph {
    pub fn new(connection: ConnectionSet) -> Self {
        CayleyGraph { connection }
    }

    pub fn connection(&self) -> &ConnectionSet {
        &self.connection
    }

    pub fn field(&self) -> FieldSpec {
        self.connection.field
    }

    pub fn order(&self) -> u64 {
        self.connection.field.order()
    }

    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn complement(&self) -> CayleyGraph {
        CayleyGraph::new(self.connection.complement())
    }

    pub fn adjacent(&self, x: &FVector, y: &FVector) -> Result<bool> {
        self.field().ensure_same(&x.field())?;
        self.field().ensure_same(&y.field())?;
        Ok(self.connection.contains(&(x - y)))
    }

    pub fn component_count(&self) -> u64 {
        let dim = self.connection.span().dim();
        (self.field().p() as u64).pow((self.field().d() - dim) as u32)
    }

    pub fn is_connected(&self) -> bool {
        self.connection.span().dim() == self.field().d()
    }

    /// The cosets of `span(C)`, each sorted, ordered by their least element.
    pub fn components(&self, cap: u64) -> Result<Vec<Vec<FVector>>> {
        let field = self.field();
        let n = field.check_order("component enumeration", cap)?;
        let span = self.connection.span().element_indices();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut coset: Vec<usize> = span.iter().map(|&s| field.add_index(x, s)).collect();
            coset.sort_unstable();
            for &y in &coset {
                seen[y] = true;
            }
            out.push(coset.into_iter().map(|i| field.vector_at(i)).collect());
        }
        Ok(out)
    }

    /// Explicit graph on vertex indices `0..p^d`.
    pub fn materialize(&self, cap: u64) -> Result<Graph> {
        let field = self.field();
        let n = field.check_order("Cayley graph materialization", cap)?;
        let steps = self.connection.indices();
        let mut g = Graph::empty(n);
        for x in 0..n {
            for &c in &steps {
                let y = field.add_index(x, c);
                if x < y {
                    g.add_edge(x, y);
                }
            }
        }
        Ok(g)
    }

    pub fn induced(&self, vertices: Vec<FVector>) -> Result<InducedSubgraph> {
        for v in &vertices {
            self.field().ensure_same(&v.field())?;
        }
        Ok(InducedSubgraph {
            parent: self.clone(),
            vertices,
        })
    }
}

/// `X|_V` for an explicit vertex list `V`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    parent: CayleyGraph,
    vertices: Vec<FVector>,
}

impl InducedSubgraph {
    pub fn parent(&self) -> &CayleyGraph {
        &self.parent
    }

    pub fn vertices(&self) -> &[FVector] {
        &self.vertices
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.parent
            .connection
            .contains(&(&self.vertices[a] - &self.vertices[b]))
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.vertices.len());
        for a in 0..self.vertices.len() {
            for b in a + 1..self.vertices.len() {
                if self.adjacent(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.to_graph().is_complete()
    }
}

/// The JSON connection-set document read by the command-line tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionDocument {
    pub p: u64,
    pub d: usize,
    pub generators: Vec<Vec<i64>>,
    #[serde(default = "default_close")]
    pub close_under_negation: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projective: Option<bool>,
}

fn default_close() -> bool {
    true
}

impl ConnectionDocument {
    pub fn from_set(set: &ConnectionSet) -> Self {
        ConnectionDocument {
            p: set.field.p() as u64,
            d: set.field.d(),
            generators: set
                .elements
                .iter()
                .map(|v| v.coords().iter().map(|&c| c as i64).collect())
                .collect(),
            close_under_negation: false,
            projective: None,
        }
    }

    pub fn to_set(&self) -> Result<ConnectionSet> {
        if !crate::gfp::is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        let p = u32::try_from(self.p).map_err(|_| Error::FieldTooLarge {
            p: self.p,
            d: self.d,
        })?;
        let field = FieldSpec::new(p, self.d)?;
        let generators = self
            .generators
            .iter()
            .map(|g| field.vector(g))
            .collect::<Result<Vec<_>>>()?;
        if self.projective.unwrap_or(false) {
            if p == 2 {
                return Err(Error::InvalidArgument(
                    "\"projective\" is only meaningful for odd p".into(),
                ));
            }
            ConnectionSet::projective(field, &generators)
        } else {
            ConnectionSet::new(field, &generators, self.close_under_negation)
        }
    }
}
