//! Symbolic table rows, instantiated at any ambient dimension.
//!
//! Vectors are written as linear forms in the letters `i, j, k, l, m`
//! (the first five standard basis vectors), e.g. `"i+j-k"` or `"2i+l"`.

use std::fmt;

use crate::cayley::ConnectionSet;
use crate::error::{Error, Result};
use crate::gfp::{FVector, FieldSpec, Subspace};

const LETTERS: [char; 5] = ['i', 'j', 'k', 'l', 'm'];

/// Parses a linear form into its coordinates at `field`; letters beyond
/// `field.d()` are rejected.
pub fn parse_form(field: FieldSpec, text: &str) -> Result<FVector> {
    let bad = || Error::InvalidArgument(format!("malformed linear form {text:?}"));
    let mut coords = vec![0i64; field.d()];
    let mut sign = 1i64;
    let mut scalar: Option<i64> = None;
    let mut expecting_term = true;
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '+' | '-' if !expecting_term => {
                sign = if ch == '-' { -1 } else { 1 };
                expecting_term = true;
            }
            '-' if expecting_term && scalar.is_none() => sign = -sign,
            '0'..='9' if expecting_term => {
                let digit = ch.to_digit(10).expect("decimal digit") as i64;
                scalar = Some(scalar.unwrap_or(0) * 10 + digit);
            }
            _ if expecting_term => {
                let axis = LETTERS.iter().position(|&l| l == ch).ok_or_else(bad)?;
                if axis >= field.d() {
                    return Err(Error::InvalidArgument(format!(
                        "{text:?} uses {ch}, but the ambient dimension is {}",
                        field.d()
                    )));
                }
                coords[axis] += sign * scalar.take().unwrap_or(1);
                sign = 1;
                expecting_term = false;
            }
            _ => return Err(bad()),
        }
    }
    if expecting_term {
        return Err(bad());
    }
    field.vector_mod(&coords)
}

/// A subspace written in terms of the row's connection set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubspaceExpr {
    Zero,
    Full,
    Span(Vec<&'static str>),
    /// `{Σ a_t e_t : Σ c_t a_t = 0}` over the first `coeffs.len()` letters.
    Hyperplane(Vec<i64>),
    /// The standard complement of the span of the row's base set.
    Section,
    Sum(Vec<SubspaceExpr>),
}

impl SubspaceExpr {
    pub fn instantiate(&self, field: FieldSpec, base_span: &Subspace) -> Result<Subspace> {
        match self {
            SubspaceExpr::Zero => Ok(Subspace::zero(field)),
            SubspaceExpr::Full => Ok(Subspace::full(field)),
            SubspaceExpr::Span(forms) => {
                let vectors = forms
                    .iter()
                    .map(|f| parse_form(field, f))
                    .collect::<Result<Vec<_>>>()?;
                Subspace::span(field, &vectors)
            }
            SubspaceExpr::Hyperplane(coeffs) => {
                let n = coeffs.len();
                if n > field.d() {
                    return Err(Error::InvalidArgument(format!(
                        "hyperplane in {n} letters needs dimension at least {n}"
                    )));
                }
                let p = field.p() as i64;
                let members: Vec<FVector> = (0..(p as usize).pow(n as u32))
                    .map(|t| {
                        let mut coords = vec![0i64; field.d()];
                        let mut rest = t;
                        for c in coords.iter_mut().take(n) {
                            *c = (rest % p as usize) as i64;
                            rest /= p as usize;
                        }
                        coords
                    })
                    .filter(|coords| {
                        coords
                            .iter()
                            .zip(coeffs)
                            .map(|(a, c)| a * c)
                            .sum::<i64>()
                            .rem_euclid(p)
                            == 0
                    })
                    .map(|coords| field.vector_mod(&coords))
                    .collect::<Result<_>>()?;
                Subspace::span(field, &members)
            }
            SubspaceExpr::Section => Ok(base_span.standard_complement()),
            SubspaceExpr::Sum(parts) => {
                parts.iter().try_fold(Subspace::zero(field), |acc, part| {
                    acc.sum(&part.instantiate(field, base_span)?)
                })
            }
        }
    }
}

impl fmt::Display for SubspaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubspaceExpr::Zero => f.write_str("0"),
            SubspaceExpr::Full => f.write_str("F^d"),
            SubspaceExpr::Span(forms) => write!(f, "<{}>", forms.join(", ")),
            SubspaceExpr::Hyperplane(coeffs) => {
                let terms: Vec<String> = coeffs
                    .iter()
                    .zip(LETTERS)
                    .map(|(c, l)| match c {
                        1 => format!("{l}"),
                        -1 => format!("-{l}"),
                        _ => format!("{c}{l}"),
                    })
                    .collect();
                write!(f, "{{{} = 0}}", terms.join(" + ").replace("+ -", "- "))
            }
            SubspaceExpr::Section => f.write_str("s"),
            SubspaceExpr::Sum(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                f.write_str(&parts.join(" + "))
            }
        }
    }
}

/// Expected `dim V`, possibly depending on the ambient dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimExpr {
    Const(usize),
    AmbientMinus(usize),
}

impl DimExpr {
    pub fn eval(&self, d: usize) -> Option<usize> {
        match *self {
            DimExpr::Const(n) => Some(n),
            DimExpr::AmbientMinus(c) => d.checked_sub(c),
        }
    }
}

impl fmt::Display for DimExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DimExpr::Const(n) => write!(f, "{n}"),
            DimExpr::AmbientMinus(0) => f.write_str("d"),
            DimExpr::AmbientMinus(c) => write!(f, "d - {c}"),
        }
    }
}

/// How a row names its connection set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetExpr {
    /// The listed vectors, closed under negation.
    Vectors(Vec<&'static str>),
    /// All nonzero multiples of the listed projective points.
    Lines(Vec<&'static str>),
}

impl SetExpr {
    pub fn instantiate(&self, field: FieldSpec) -> Result<ConnectionSet> {
        match self {
            SetExpr::Vectors(forms) => {
                let vectors = forms
                    .iter()
                    .map(|f| parse_form(field, f))
                    .collect::<Result<Vec<_>>>()?;
                ConnectionSet::new(field, &vectors, true)
            }
            SetExpr::Lines(forms) => {
                let vectors = forms
                    .iter()
                    .map(|f| parse_form(field, f).map(|v| v.projective_normal()))
                    .collect::<Result<Vec<_>>>()?;
                ConnectionSet::projective(field, &vectors)
            }
        }
    }

    pub fn letters_used(&self) -> usize {
        let forms = match self {
            SetExpr::Vectors(f) | SetExpr::Lines(f) => f,
        };
        forms
            .iter()
            .flat_map(|f| f.chars())
            .filter_map(|ch| LETTERS.iter().position(|&l| l == ch))
            .map(|a| a + 1)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Vectors(forms) => write!(f, "{{{}}}", forms.join(", ")),
            SetExpr::Lines(forms) => {
                let lines: Vec<String> = forms.iter().map(|l| format!("[{l}]")).collect();
                write!(f, "{{{}}}", lines.join(", "))
            }
        }
    }
}

/// One table row: the connection set is `base`, or its complement when
/// `complement` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub base: SetExpr,
    pub complement: bool,
    pub v: SubspaceExpr,
    pub w: SubspaceExpr,
    pub dim: DimExpr,
    /// `|C|` where the table states it.
    pub size: Option<usize>,
    /// The witness is stated inside `span(C)` and must be lifted.
    pub inner: bool,
}

impl TableRow {
    pub fn label(&self) -> String {
        if self.complement {
            format!("complement of {}", self.base)
        } else {
            self.base.to_string()
        }
    }

    /// Smallest ambient dimension the row makes sense in.
    pub fn min_dim(&self) -> usize {
        self.base.letters_used()
    }
}

/// A table of rows over a fixed prime (`None` for the any-prime table).
#[derive(Clone, Debug)]
pub struct Table {
    pub id: u8,
    pub p: Option<u32>,
    pub rows: Vec<TableRow>,
}

use DimExpr::{AmbientMinus as Minus, Const};
use SubspaceExpr::{Full, Hyperplane, Section, Span, Sum, Zero};

fn low(base: SetExpr, v: SubspaceExpr, w: SubspaceExpr, dim: usize) -> TableRow {
    TableRow {
        base,
        complement: false,
        v,
        w,
        dim: Const(dim),
        size: None,
        inner: false,
    }
}

fn high(base: SetExpr, v: SubspaceExpr, w: SubspaceExpr, dim: DimExpr) -> TableRow {
    TableRow {
        base,
        complement: true,
        v,
        w,
        dim,
        size: None,
        inner: false,
    }
}

fn vecs(forms: &[&'static str]) -> SetExpr {
    SetExpr::Vectors(forms.to_vec())
}

fn lines(forms: &[&'static str]) -> SetExpr {
    SetExpr::Lines(forms.to_vec())
}

fn span(forms: &[&'static str]) -> SubspaceExpr {
    Span(forms.to_vec())
}

fn plus(parts: Vec<SubspaceExpr>) -> SubspaceExpr {
    Sum(parts)
}

fn even(n: usize) -> SubspaceExpr {
    Hyperplane(vec![1; n])
}

/// Spanning sets of small cardinality over F_2, with witnesses stated
/// inside `span(C)`.
pub fn table_1() -> Table {
    let rows = vec![
        (vecs(&[]), Zero, Zero, 0),
        // the printed dimension column says 0 here; ⟨i⟩ has dimension 1
        (vecs(&["i"]), span(&["i"]), Zero, 1),
        (vecs(&["i", "j"]), span(&["i"]), span(&["i+j"]), 1),
        (vecs(&["i", "j", "i+j"]), span(&["i", "j"]), Zero, 2),
        (vecs(&["i", "j", "k"]), span(&["i"]), even(3), 1),
        (
            vecs(&["i", "j", "k", "i+j"]),
            span(&["i", "j"]),
            span(&["i+j+k"]),
            2,
        ),
        (vecs(&["i", "j", "k", "i+j+k"]), span(&["i"]), even(3), 1),
        (vecs(&["i", "j", "k", "l"]), span(&["i"]), even(4), 1),
    ];
    Table {
        id: 1,
        p: Some(2),
        rows: rows
            .into_iter()
            .map(|(base, v, w, dim)| TableRow {
                inner: true,
                ..low(base, v, w, dim)
            })
            .collect(),
    }
}

/// Sets of extreme cardinality over F_2.
pub fn table_2() -> Table {
    let s = || Section;
    let rows = vec![
        low(vecs(&[]), Zero, Full, 0),
        // printed as 0; ⟨i⟩ has dimension 1
        low(vecs(&["i"]), span(&["i"]), s(), 1),
        low(
            vecs(&["i", "j"]),
            span(&["i"]),
            plus(vec![span(&["i+j"]), s()]),
            1,
        ),
        low(vecs(&["i", "j", "i+j"]), span(&["i", "j"]), s(), 2),
        low(
            vecs(&["i", "j", "k"]),
            span(&["i"]),
            plus(vec![even(3), s()]),
            1,
        ),
        low(
            vecs(&["i", "j", "k", "i+j"]),
            span(&["i", "j"]),
            plus(vec![span(&["i+j+k"]), s()]),
            2,
        ),
        low(
            vecs(&["i", "j", "k", "i+j+k"]),
            span(&["i"]),
            plus(vec![even(3), s()]),
            1,
        ),
        low(
            vecs(&["i", "j", "k", "l"]),
            span(&["i"]),
            plus(vec![even(4), s()]),
            1,
        ),
        high(vecs(&[]), Full, Zero, Minus(0)),
        // printed as d; the section of F^d/⟨i⟩ has dimension d - 1
        high(vecs(&["i"]), s(), span(&["i"]), Minus(1)),
        high(
            vecs(&["i", "j"]),
            plus(vec![span(&["i+j"]), s()]),
            span(&["i"]),
            Minus(1),
        ),
        high(vecs(&["i", "j", "i+j"]), s(), span(&["i", "j"]), Minus(2)),
        high(
            vecs(&["i", "j", "k"]),
            plus(vec![even(3), s()]),
            span(&["i"]),
            Minus(1),
        ),
        high(
            vecs(&["i", "j", "k", "i+j"]),
            plus(vec![span(&["i+j+k"]), s()]),
            span(&["i", "j"]),
            Minus(2),
        ),
        high(
            vecs(&["i", "j", "k", "i+j+k"]),
            plus(vec![even(3), s()]),
            span(&["i"]),
            Minus(1),
        ),
        high(
            vecs(&["i", "j", "k", "l"]),
            plus(vec![even(4), s()]),
            span(&["i"]),
            Minus(1),
        ),
    ];
    Table {
        id: 2,
        p: Some(2),
        rows,
    }
}

/// The rows of the low-cardinality ternary table as
/// `(lines, |C|, V, W without the section, dim V)`.
fn ternary_rows() -> Vec<(SetExpr, usize, SubspaceExpr, SubspaceExpr, usize)> {
    let h3 = even(3);
    let h3_twisted = Hyperplane(vec![1, 1, -1]);
    let h4 = even(4);
    let h4_twisted = Hyperplane(vec![1, 1, -1, 1]);
    vec![
        (lines(&[]), 0, Zero, Full, 0),
        (lines(&["i"]), 2, span(&["i"]), Zero, 1),
        (lines(&["i", "j"]), 4, span(&["i"]), span(&["i+j"]), 1),
        (
            lines(&["i", "j", "i+j"]),
            6,
            span(&["i"]),
            span(&["i-j"]),
            1,
        ),
        (
            lines(&["i", "j", "i+j", "i-j"]),
            8,
            span(&["i", "j"]),
            Zero,
            2,
        ),
        (lines(&["i", "j", "k"]), 6, span(&["i"]), h3.clone(), 1),
        (
            lines(&["i", "j", "k", "i+j"]),
            8,
            span(&["k"]),
            h3.clone(),
            1,
        ),
        (
            lines(&["i", "j", "k", "i+j+k"]),
            8,
            span(&["i+j+k"]),
            h3_twisted,
            1,
        ),
        (
            lines(&["i", "j", "k", "j+k", "j-k"]),
            10,
            span(&["j", "k"]),
            span(&["i+j+k"]),
            2,
        ),
        (
            lines(&["i", "j", "k", "i+k", "j+k"]),
            10,
            span(&["i"]),
            h3.clone(),
            1,
        ),
        (
            lines(&["i", "j", "k", "i+j-k", "j+k"]),
            10,
            span(&["i"]),
            h3,
            1,
        ),
        (lines(&["i", "j", "k", "l"]), 8, span(&["i"]), h4.clone(), 1),
        (
            lines(&["i", "j", "k", "l", "i+j"]),
            10,
            span(&["i+j"]),
            h4.clone(),
            1,
        ),
        (
            lines(&["i", "j", "k", "l", "i+j+k"]),
            10,
            span(&["l"]),
            h4_twisted,
            1,
        ),
        (
            lines(&["i", "j", "k", "l", "i+j+k+l"]),
            10,
            span(&["i+j+k+l"]),
            h4,
            1,
        ),
        (
            lines(&["i", "j", "k", "l", "m"]),
            10,
            span(&["i"]),
            even(5),
            1,
        ),
    ]
}

fn with_section(w: SubspaceExpr) -> SubspaceExpr {
    match w {
        Full => Full,
        Zero => Section,
        other => plus(vec![other, Section]),
    }
}

/// Low-cardinality sets over F_3, given by projective points.
pub fn table_3() -> Table {
    let rows = ternary_rows()
        .into_iter()
        .map(|(base, size, v, w, dim)| TableRow {
            size: Some(size),
            ..low(base, v, with_section(w), dim)
        })
        .collect();
    Table {
        id: 3,
        p: Some(3),
        rows,
    }
}

/// High-cardinality sets over F_3: complements of the low rows.
pub fn table_4() -> Table {
    let dims = [0, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1];
    let rows = ternary_rows()
        .into_iter()
        .zip(dims)
        .map(|((base, _, v, w, _), minus)| {
            let (v, w) = match w {
                // the first row is the full projective space, V = F^d
                Full => (Full, Zero),
                w => (with_section(w), v),
            };
            high(base, v, w, Minus(minus))
        })
        .collect();
    Table {
        id: 4,
        p: Some(3),
        rows,
    }
}

/// Extreme cardinality for `p ≥ 5`: only the empty set and everything.
pub fn table_5() -> Table {
    Table {
        id: 5,
        p: None,
        rows: vec![
            low(vecs(&[]), Zero, Full, 0),
            high(vecs(&[]), Full, Zero, Minus(0)),
        ],
    }
}

pub fn table(id: u8) -> Option<Table> {
    match id {
        1 => Some(table_1()),
        2 => Some(table_2()),
        3 => Some(table_3()),
        4 => Some(table_4()),
        5 => Some(table_5()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32, d: usize) -> FieldSpec {
        FieldSpec::new(p, d).unwrap()
    }

    #[test]
    fn parses_forms() {
        let f3 = f(3, 4);
        assert_eq!(parse_form(f3, "i+j-k").unwrap().coords(), &[1, 1, 2, 0]);
        assert_eq!(parse_form(f3, "2i + l").unwrap().coords(), &[2, 0, 0, 1]);
        assert_eq!(parse_form(f3, "-j").unwrap().coords(), &[0, 2, 0, 0]);
        assert!(parse_form(f3, "i+").is_err());
        assert!(parse_form(f3, "m").is_err());
        assert!(parse_form(f3, "x").is_err());
    }

    #[test]
    fn hyperplane_instantiation() {
        let f2 = f(2, 4);
        let h = even(4).instantiate(f2, &Subspace::zero(f2)).unwrap();
        assert_eq!(h.dim(), 3);
        assert!(h.contains(&f2.vector(&[1, 1, 1, 1]).unwrap()).unwrap());
        // in three letters inside F_2^5 the hyperplane has dimension 2
        let f25 = f(2, 5);
        let h = even(3).instantiate(f25, &Subspace::zero(f25)).unwrap();
        assert_eq!(h.dim(), 2);
        let f33 = f(3, 3);
        let twisted = Hyperplane(vec![1, 1, -1])
            .instantiate(f33, &Subspace::zero(f33))
            .unwrap();
        assert!(twisted.contains(&f33.vector(&[1, 0, 1]).unwrap()).unwrap());
        assert!(!twisted.contains(&f33.vector(&[1, 1, 1]).unwrap()).unwrap());
    }

    #[test]
    fn row_counts() {
        assert_eq!(table_1().rows.len(), 8);
        assert_eq!(table_2().rows.len(), 16);
        assert_eq!(table_3().rows.len(), 16);
        assert_eq!(table_4().rows.len(), 16);
        assert_eq!(table_5().rows.len(), 2);
        assert!(table(6).is_none());
    }

    #[test]
    fn sizes_match_stated_cardinalities() {
        for row in table_3().rows {
            let c = row.base.instantiate(f(3, 5)).unwrap();
            assert_eq!(Some(c.len()), row.size, "{}", row.label());
        }
    }
}
