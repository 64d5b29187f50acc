use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{split_action, BitMatrix, Subspace};

/// A vector space over F2 with a square-zero endomorphism `d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ver4Object {
    d: BitMatrix,
}

impl Ver4Object {
    pub fn new(d: BitMatrix) -> Result<Self> {
        if !d.is_square() {
            return Err(Error::InvalidObject("d-matrix is not square".into()));
        }
        if !d.mul(&d).is_zero() {
            return Err(Error::InvalidObject("d-matrix does not square to zero".into()));
        }
        Ok(Ver4Object { d })
    }

    pub fn zero() -> Self {
        Ver4Object {
            d: BitMatrix::zeros(0, 0),
        }
    }

    pub fn unit() -> Self {
        Self::trivial(1)
    }

    pub fn trivial(dim: usize) -> Self {
        Ver4Object {
            d: BitMatrix::zeros(dim, dim),
        }
    }

    /// `P` with basis `x, x'` and `d x = x'`.
    pub fn projective() -> Self {
        Ver4Object {
            d: BitMatrix::from_fn(2, 2, |i, j| i == 1 && j == 0),
        }
    }

    /// `m·1 ⊕ n·P` in the standard basis: trivial vectors first, then pairs.
    pub fn from_mn(m: usize, n: usize) -> Self {
        let mut out = Self::trivial(m);
        for _ in 0..n {
            out = out.direct_sum(&Self::projective());
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.d.nrows()
    }

    pub fn d(&self) -> &BitMatrix {
        &self.d
    }

    /// Isomorphism class `(m, n)` with `self ≅ m·1 ⊕ n·P`.
    pub fn decompose(&self) -> (usize, usize) {
        let n = self.d.rank();
        (self.dim() - 2 * n, n)
    }

    pub fn direct_sum(&self, other: &Ver4Object) -> Ver4Object {
        Ver4Object {
            d: self.d.block_diag(&other.d),
        }
    }

    /// `d` acts on `X ⊗ Y` as `d ⊗ 1 + 1 ⊗ d`; `e_i ⊗ f_j` has index `i·dim Y + j`.
    pub fn tensor(&self, other: &Ver4Object) -> Ver4Object {
        let d = self
            .d
            .kron(&BitMatrix::identity(other.dim()))
            .add(&BitMatrix::identity(self.dim()).kron(&other.d));
        Ver4Object { d }
    }

    pub fn tensor_power(&self, n: usize) -> Ver4Object {
        (0..n).fold(Ver4Object::unit(), |acc, _| acc.tensor(self))
    }

    pub fn is_d_stable(&self, sub: &Subspace) -> bool {
        sub.is_invariant(std::slice::from_ref(&self.d))
    }

    pub fn subobject(&self, sub: &Subspace) -> Result<Ver4Object> {
        if !self.is_d_stable(sub) {
            return Err(Error::InvalidObject("subspace is not d-stable".into()));
        }
        let (r, _) = split_action(std::slice::from_ref(&self.d), sub);
        Ok(Ver4Object { d: r[0].clone() })
    }

    pub fn quotient(&self, sub: &Subspace) -> Result<Ver4Object> {
        if !self.is_d_stable(sub) {
            return Err(Error::InvalidObject("subspace is not d-stable".into()));
        }
        let (_, q) = split_action(std::slice::from_ref(&self.d), sub);
        Ok(Ver4Object { d: q[0].clone() })
    }

    pub fn label(&self) -> String {
        let (m, n) = self.decompose();
        match (m, n) {
            (0, 0) => "0".into(),
            (m, 0) => format!("{m}"),
            (0, n) => format!("{n}P"),
            (m, n) => format!("{m}+{n}P"),
        }
    }
}

impl fmt::Debug for Ver4Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ver4Object({}, dim {})", self.label(), self.dim())
    }
}

/// A map of `k[d]/d^2`-modules.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatMorphism {
    pub source: Ver4Object,
    pub target: Ver4Object,
    pub matrix: BitMatrix,
}

impl CatMorphism {
    pub fn new(source: Ver4Object, target: Ver4Object, matrix: BitMatrix) -> Result<Self> {
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(Error::InvalidObject("morphism has the wrong shape".into()));
        }
        if matrix.mul(source.d()) != target.d().mul(&matrix) {
            return Err(Error::InvalidObject("matrix does not commute with d".into()));
        }
        Ok(CatMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(x: &Ver4Object) -> Self {
        CatMorphism {
            source: x.clone(),
            target: x.clone(),
            matrix: BitMatrix::identity(x.dim()),
        }
    }

    pub fn compose(&self, first: &CatMorphism) -> Result<CatMorphism> {
        if first.target != self.source {
            return Err(Error::InvalidObject("composing mismatched morphisms".into()));
        }
        Ok(CatMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    pub fn tensor(&self, other: &CatMorphism) -> CatMorphism {
        CatMorphism {
            source: self.source.tensor(&other.source),
            target: self.target.tensor(&other.target),
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.source.dim(), self.matrix.kernel())
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.target.dim(), self.matrix.cols_vec())
    }
}

/// `c(v ⊗ w) = w ⊗ v + dw ⊗ dv` as a map `X ⊗ Y → Y ⊗ X`.
pub fn braiding(x: &Ver4Object, y: &Ver4Object) -> CatMorphism {
    let (nx, ny) = (x.dim(), y.dim());
    let swap = BitMatrix::from_fn(nx * ny, nx * ny, |row, col| {
        let (i, j) = (col / ny, col % ny);
        row == j * nx + i
    });
    let correction = y.d().kron(x.d()).mul(&swap);
    CatMorphism {
        source: x.tensor(y),
        target: y.tensor(x),
        matrix: swap.add(&correction),
    }
}

/// Parses `m+nP` style sums and `⊗` (or `x`, `*`) products with parentheses,
/// e.g. `P⊗P`, `(1+P)*(1+P)`, `3+2P`.
pub fn parse_object_expr(input: &str) -> Result<Ver4Object> {
    let normalized = input.replace('⊗', "*").replace('⊕', "+");
    let chars: Vec<char> = normalized.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let out = parse_sum(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(Error::Parse(format!("unexpected input in object {input:?}")));
    }
    Ok(out)
}

fn parse_sum(c: &[char], pos: &mut usize) -> Result<Ver4Object> {
    let mut acc = parse_product(c, pos)?;
    while c.get(*pos) == Some(&'+') {
        *pos += 1;
        acc = acc.direct_sum(&parse_product(c, pos)?);
    }
    Ok(acc)
}

fn parse_product(c: &[char], pos: &mut usize) -> Result<Ver4Object> {
    let mut acc = parse_atom(c, pos)?;
    while matches!(c.get(*pos), Some('*') | Some('x')) {
        *pos += 1;
        acc = acc.tensor(&parse_atom(c, pos)?);
    }
    Ok(acc)
}

fn parse_atom(c: &[char], pos: &mut usize) -> Result<Ver4Object> {
    if c.get(*pos) == Some(&'(') {
        *pos += 1;
        let inner = parse_sum(c, pos)?;
        if c.get(*pos) != Some(&')') {
            return Err(Error::Parse("expected ')' in object".into()));
        }
        *pos += 1;
        return Ok(inner);
    }
    let start = *pos;
    while c.get(*pos).is_some_and(|ch| ch.is_ascii_digit()) {
        *pos += 1;
    }
    let count: Option<usize> = if start == *pos {
        None
    } else {
        Some(
            c[start..*pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse("bad multiplicity".into()))?,
        )
    };
    if c.get(*pos) == Some(&'P') {
        *pos += 1;
        return Ok(Ver4Object::from_mn(0, count.unwrap_or(1)));
    }
    match count {
        Some(m) => Ok(Ver4Object::trivial(m)),
        None => Err(Error::Parse("expected an object".into())),
    }
}
