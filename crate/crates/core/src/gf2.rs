//! Dense linear algebra over F2 with bit-packed rows.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Bits `0..len` of `mask`, bit `i` of the mask at position `i`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len.min(64) {
            v.set(i, mask >> i & 1 == 1);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut v = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            v.set(i, true);
        }
        for i in other.ones() {
            v.set(self.len + i, true);
        }
        v
    }

    pub fn slice(&self, start: usize, end: usize) -> BitVec {
        let mut v = BitVec::zeros(end - start);
        for i in start..end {
            if self.get(i) {
                v.set(i - start, true);
            }
        }
        v
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

/// Row-major matrix over F2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows: vec![BitVec::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix { rows, cols }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[BitVec], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b)
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn col(&self, j: usize) -> BitVec {
        let mut v = BitVec::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn cols_vec(&self) -> Vec<BitVec> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = Self::zeros(self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.nrows(), self.cols), (other.nrows(), other.cols));
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.xor_assign(b);
        }
        out
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.nrows(), "dimension mismatch");
        let mut out = Self::zeros(self.nrows(), other.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for k in r.ones() {
                out.rows[i].xor_assign(&other.rows[k]);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let (r2, c2) = (other.nrows(), other.cols);
        let mut out = Self::zeros(self.nrows() * r2, self.cols * c2);
        for i in 0..self.nrows() {
            for j in self.rows[i].ones() {
                for k in 0..r2 {
                    for l in other.rows[k].ones() {
                        out.set(i * r2 + k, j * c2 + l, true);
                    }
                }
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> BitMatrix {
        BitMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.nrows() {
                break;
            }
            let Some(p) = (r..m.nrows()).find(|&i| m.rows[i].get(c)) else {
                continue;
            };
            m.rows.swap(r, p);
            let pivot = m.rows[r].clone();
            for i in 0..m.nrows() {
                if i != r && m.rows[i].get(c) {
                    m.rows[i].xor_assign(&pivot);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.rows.truncate(r);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self·x = 0}`.
    pub fn kernel(&self) -> Vec<BitVec> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = BitVec::unit(self.cols, f);
                for (row, &pc) in r.rows.iter().zip(&pivots) {
                    if row.get(f) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect()
    }

    /// One solution of `self·x = b`, if any.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        let aug = BitMatrix::from_rows(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| r.concat(&BitVec::from_bits(&[b.get(i)])))
                .collect(),
            self.cols + 1,
        );
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = BitVec::zeros(self.cols);
        for (row, &pc) in r.rows.iter().zip(&pivots) {
            if row.get(self.cols) {
                x.set(pc, true);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<BitMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.cols;
        if n == 0 {
            return Some(BitMatrix::zeros(0, 0));
        }
        let aug = BitMatrix::from_rows(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| r.concat(&BitVec::unit(n, i)))
                .collect(),
            2 * n,
        );
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(BitMatrix::from_rows(
            r.rows.iter().map(|row| row.slice(n, 2 * n)).collect(),
            n,
        ))
    }

    pub fn block_diag(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = Self::zeros(self.nrows() + other.nrows(), self.cols + other.cols);
        for i in 0..self.nrows() {
            for j in self.rows[i].ones() {
                out.set(i, j, true);
            }
        }
        for i in 0..other.nrows() {
            for j in other.rows[i].ones() {
                out.set(self.nrows() + i, self.cols + j, true);
            }
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.nrows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

/// A subspace of F2^n held as a reduced row-echelon basis, so equal subspaces
/// compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    dim_ambient: usize,
    basis: Vec<BitVec>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            dim_ambient: n,
            basis: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::span(n, (0..n).map(|i| BitVec::unit(n, i)))
    }

    pub fn span(n: usize, vecs: impl IntoIterator<Item = BitVec>) -> Self {
        let rows: Vec<BitVec> = vecs.into_iter().collect();
        if rows.is_empty() {
            return Self::zero(n);
        }
        let (r, _) = BitMatrix::from_rows(rows, n).rref();
        Subspace {
            dim_ambient: n,
            basis: r.rows,
        }
    }

    pub fn ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        for b in &self.basis {
            let p = b.first_one().expect("nonzero basis vector");
            if w.get(p) {
                w.xor_assign(b);
            }
        }
        w.is_zero()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::span(
            self.dim_ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // solve Σ a_i u_i = Σ b_j w_j
        let n = self.dim_ambient;
        let k = self.dim();
        let cols: Vec<BitVec> = self.basis.iter().chain(&other.basis).cloned().collect();
        let m = BitMatrix::from_cols(&cols, n);
        let vecs = m.kernel().into_iter().map(|x| {
            let mut v = BitVec::zeros(n);
            for i in x.ones().filter(|&i| i < k) {
                v.xor_assign(&self.basis[i]);
            }
            v
        });
        Self::span(n, vecs)
    }

    /// Smallest subspace containing `self` and stable under every matrix.
    pub fn close_under(&self, mats: &[BitMatrix]) -> Subspace {
        let n = self.dim_ambient;
        let mut current = self.clone();
        let mut frontier: Vec<BitVec> = self.basis.clone();
        while let Some(v) = frontier.pop() {
            for m in mats {
                let w = m.mul_vec(&v);
                if !current.contains(&w) {
                    current = Self::span(n, current.basis.iter().cloned().chain([w.clone()]));
                    frontier.push(w);
                }
            }
        }
        current
    }

    pub fn is_invariant(&self, mats: &[BitMatrix]) -> bool {
        mats.iter()
            .all(|m| self.basis.iter().all(|v| self.contains(&m.mul_vec(v))))
    }

    /// Vectors completing the basis of `self` to one of the ambient space,
    /// chosen among standard unit vectors.
    pub fn complement_units(&self) -> Vec<BitVec> {
        let n = self.dim_ambient;
        let mut acc = self.clone();
        let mut out = Vec::new();
        for i in 0..n {
            let e = BitVec::unit(n, i);
            if !acc.contains(&e) {
                acc = Self::span(n, acc.basis.iter().cloned().chain([e.clone()]));
                out.push(e);
            }
        }
        out
    }
}

/// Columns: a basis of `sub` followed by standard unit vectors completing it.
pub fn adapted_basis(sub: &Subspace) -> BitMatrix {
    let cols: Vec<BitVec> = sub
        .basis()
        .iter()
        .cloned()
        .chain(sub.complement_units())
        .collect();
    BitMatrix::from_cols(&cols, sub.ambient())
}

/// The maps induced by `mats` on an invariant subspace and on the quotient by
/// it, in the coordinates of [`adapted_basis`].
pub fn split_action(mats: &[BitMatrix], sub: &Subspace) -> (Vec<BitMatrix>, Vec<BitMatrix>) {
    let b = adapted_basis(sub);
    let binv = b.inverse().expect("adapted basis is invertible");
    let k = sub.dim();
    let n = sub.ambient();
    let low: Vec<usize> = (0..k).collect();
    let high: Vec<usize> = (k..n).collect();
    let mut restricted = Vec::new();
    let mut quotient = Vec::new();
    for m in mats {
        let conj = binv.mul(m).mul(&b);
        debug_assert!(conj.submatrix(&high, &low).is_zero(), "subspace not invariant");
        restricted.push(conj.submatrix(&low, &low));
        quotient.push(conj.submatrix(&high, &high));
    }
    (restricted, quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let m = BitMatrix::from_fn(3, 4, |i, j| (i + j) % 2 == 0);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = BitMatrix::from_fn(3, 3, |i, j| j >= i);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), BitMatrix::identity(3));
        assert!(BitMatrix::zeros(2, 2).inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = BitMatrix::from_fn(2, 2, |_, _| true);
        let b = BitVec::from_bits(&[true, true]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(m.solve(&BitVec::from_bits(&[true, false])).is_none());
    }

    #[test]
    fn intersection() {
        let a = Subspace::span(3, [BitVec::unit(3, 0), BitVec::unit(3, 1)]);
        let b = Subspace::span(3, [BitVec::unit(3, 1), BitVec::unit(3, 2)]);
        assert_eq!(a.intersect(&b), Subspace::span(3, [BitVec::unit(3, 1)]));
    }

    #[test]
    fn closure_under_shift() {
        let shift = BitMatrix::from_fn(3, 3, |i, j| i == j + 1);
        let s = Subspace::span(3, [BitVec::unit(3, 0)]).close_under(&[shift]);
        assert_eq!(s.dim(), 3);
    }
}
