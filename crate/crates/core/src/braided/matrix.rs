use std::fmt;

use super::gens::GeneratorSet;
use super::poly::{BraidedPoly, Substitution};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A dense matrix with entries in a braided coordinate ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BraidedPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![BraidedPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BraidedPoly::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BraidedPoly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<BraidedPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_bits(m: &BitMatrix) -> Self {
        Self::from_fn(m.nrows(), m.ncols(), |i, j| {
            if m.get(i, j) {
                BraidedPoly::one()
            } else {
                BraidedPoly::zero()
            }
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> impl Iterator<Item = &BraidedPoly> {
        self.data.iter()
    }

    pub fn map(&self, mut f: impl FnMut(&BraidedPoly) -> BraidedPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    pub fn try_map(&self, mut f: impl FnMut(&BraidedPoly) -> Result<BraidedPoly>) -> Result<PolyMatrix> {
        let data = self.data.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn derive(&self) -> PolyMatrix {
        self.map(BraidedPoly::derive)
    }

    pub fn retag(&self, from: u8, to: u8) -> PolyMatrix {
        self.map(|p| p.retag(from, to))
    }

    pub fn substitute(&self, s: &mut Substitution) -> Result<PolyMatrix> {
        self.try_map(|p| s.apply(p))
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = BraidedPoly::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &other[(k, j)];
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
    }

    /// Entry `((i,k),(j,l))` is `self_ij · other_kl`, left factor first.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.rows * r2, self.cols * c2, |row, col| {
            let a = &self[(row / r2, col / c2)];
            let b = &other[(row % r2, col % c2)];
            if a.is_zero() || b.is_zero() {
                BraidedPoly::zero()
            } else {
                a * b
            }
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BraidedPoly::is_zero)
    }

    /// Converts a matrix of constants `0`/`1` to bits.
    pub fn to_bits(&self) -> Result<BitMatrix> {
        let mut out = BitMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = &self[(i, j)];
                if e.is_one() {
                    out.set(i, j, true);
                } else if !e.is_zero() {
                    return Err(Error::Domain(format!("entry ({i},{j}) is not a constant")));
                }
            }
        }
        Ok(out)
    }

    /// Inverse by Gauss-Jordan elimination with unit pivots, multiplying rows
    /// on the left. Fails when some column offers no unit pivot.
    pub fn inverse(&self) -> Result<PolyMatrix> {
        if self.rows != self.cols {
            return Err(Error::Domain("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = PolyMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| a[(r, col)].inverse().is_ok())
                .ok_or_else(|| {
                    Error::Unsupported(format!("no unit pivot in column {col}"))
                })?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let p_inv = a[(col, col)].inverse()?;
            a.left_scale_row(col, &p_inv);
            inv.left_scale_row(col, &p_inv);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                a.add_left_multiple(r, col, &factor);
                inv.add_left_multiple(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn left_scale_row(&mut self, i: usize, s: &BraidedPoly) {
        for c in 0..self.cols {
            let v = s * &self[(i, c)];
            self[(i, c)] = v;
        }
    }

    /// `row_target += factor · row_source`.
    fn add_left_multiple(&mut self, target: usize, source: usize, factor: &BraidedPoly) {
        for c in 0..self.cols {
            let v = factor * &self[(source, c)];
            self[(target, c)] += v;
        }
    }

    pub fn display<'a>(&'a self, set: &'a GeneratorSet) -> MatrixDisplay<'a> {
        MatrixDisplay { m: self, set }
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = BraidedPoly;
    fn index(&self, (i, j): (usize, usize)) -> &BraidedPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BraidedPoly {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub struct MatrixDisplay<'a> {
    m: &'a PolyMatrix,
    set: &'a GeneratorSet,
}

impl fmt::Display for MatrixDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m.rows {
            let row: Vec<String> = (0..self.m.cols)
                .map(|j| self.m[(i, j)].to_string_with(self.set))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
