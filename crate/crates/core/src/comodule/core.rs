use std::collections::BTreeMap;

use crate::braided::{BraidedPoly, Monomial, PolyMatrix};
use crate::error::{Error, Result};
use crate::gf2::{adapted_basis, BitMatrix, BitVec, Subspace};
use crate::group::{restriction, Group, GroupSpec};
use crate::ver4::Ver4Object;

/// A representation: coaction matrix `M` over the group's coordinate ring
/// with `ρ(v_j) = Σ_i v_i ⊗ M_ij`, and the `d`-action on the underlying object.
#[derive(Clone, Debug)]
pub struct Comodule {
    group: Group,
    object: Ver4Object,
    matrix: PolyMatrix,
}

/// Outcome of [`Comodule::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub unit: bool,
    pub homomorphism: bool,
    pub d_equivariant: bool,
    pub first_failure: Option<String>,
}

impl Validation {
    pub fn passed(&self) -> bool {
        self.unit && self.homomorphism && self.d_equivariant
    }
}

impl Comodule {
    pub fn new(group: Group, object: Ver4Object, matrix: PolyMatrix) -> Result<Comodule> {
        let n = object.dim();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(Error::InvalidObject(format!(
                "coaction is {}x{} but the object has dimension {n}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(Comodule {
            group,
            object,
            matrix,
        })
    }

    pub fn trivial(group: &Group) -> Comodule {
        Comodule {
            group: group.clone(),
            object: Ver4Object::unit(),
            matrix: PolyMatrix::identity(1),
        }
    }

    /// One-dimensional comodule on `1` given by a grouplike element.
    pub fn character(group: &Group, value: BraidedPoly) -> Result<Comodule> {
        Comodule::new(
            group.clone(),
            Ver4Object::unit(),
            PolyMatrix::from_rows(vec![vec![value]]),
        )
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn spec(&self) -> GroupSpec {
        self.group.spec()
    }

    pub fn object(&self) -> &Ver4Object {
        &self.object
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn d(&self) -> &BitMatrix {
        self.object.d()
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    /// Unit law, two-tag homomorphism and `D·M + M·D = M'`.
    pub fn validate(&self) -> Validation {
        let mut first_failure = None;
        let unit = match self.matrix.substitute(&mut self.group.counit()) {
            Ok(m) => m.is_identity(),
            Err(_) => false,
        };
        if !unit {
            first_failure.get_or_insert_with(|| "counit does not give the identity".to_string());
        }
        let homomorphism = match self.check_homomorphism() {
            Ok(None) => true,
            Ok(Some(msg)) => {
                first_failure.get_or_insert(msg);
                false
            }
            Err(e) => {
                first_failure.get_or_insert(e.to_string());
                false
            }
        };
        let dm = PolyMatrix::from_bits(self.d());
        let lhs = dm.mul(&self.matrix).add(&self.matrix.mul(&dm));
        let rhs = self.matrix.derive();
        let d_equivariant = lhs == rhs;
        if !d_equivariant {
            let (i, j) = first_mismatch(&lhs, &rhs);
            first_failure.get_or_insert_with(|| format!("d-equivariance fails at entry ({i},{j})"));
        }
        Validation {
            unit,
            homomorphism,
            d_equivariant,
            first_failure,
        }
    }

    fn check_homomorphism(&self) -> Result<Option<String>> {
        let mut delta = self.group.coproduct()?;
        let lhs = self.matrix.substitute(&mut delta)?;
        let rhs = self.matrix.retag(0, 1).mul(&self.matrix.retag(0, 2));
        if lhs == rhs {
            Ok(None)
        } else {
            let (i, j) = first_mismatch(&lhs, &rhs);
            Ok(Some(format!("M(g1 g2) != M(g1) M(g2) at entry ({i},{j})")))
        }
    }

    fn same_group(&self, other: &Comodule) -> Result<()> {
        if self.spec() != other.spec() {
            return Err(Error::Domain(format!(
                "comodules over different groups {} and {}",
                self.spec(),
                other.spec()
            )));
        }
        Ok(())
    }

    /// `M_{V⊗W} = M_V ⊗ M_W + M_V' ⊗ (D_W M_W)`, the second term being the
    /// braiding of the coefficients of `V` past `W`.
    pub fn tensor(&self, other: &Comodule) -> Result<Comodule> {
        self.same_group(other)?;
        let dw = PolyMatrix::from_bits(other.d());
        let main = self.matrix.kron(&other.matrix);
        let corr = self.matrix.derive().kron(&dw.mul(&other.matrix));
        Comodule::new(
            self.group.clone(),
            self.object.tensor(&other.object),
            main.add(&corr),
        )
    }

    pub fn tensor_all(items: &[Comodule]) -> Result<Comodule> {
        let (first, rest) = items
            .split_first()
            .ok_or_else(|| Error::Domain("empty tensor product".into()))?;
        rest.iter().try_fold(first.clone(), |acc, c| acc.tensor(c))
    }

    /// Dual: with `K = M(g⁻¹)`, the coaction is `(K + K'·D)ᵀ` and `d` acts by `Dᵀ`.
    pub fn dual(&self) -> Result<Comodule> {
        let mut s = self.group.antipode()?;
        let k = self.matrix.substitute(&mut s)?;
        let dv = PolyMatrix::from_bits(self.d());
        let m = k.add(&k.derive().mul(&dv)).transpose();
        Comodule::new(
            self.group.clone(),
            Ver4Object::new(self.d().transpose())?,
            m,
        )
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        self.same_group(other)?;
        let (a, b) = (self.dim(), other.dim());
        let m = PolyMatrix::from_fn(a + b, a + b, |i, j| match (i < a, j < a) {
            (true, true) => self.matrix[(i, j)].clone(),
            (false, false) => other.matrix[(i - a, j - a)].clone(),
            _ => BraidedPoly::zero(),
        });
        Comodule::new(self.group.clone(), self.object.direct_sum(&other.object), m)
    }

    /// Pulls back along an implemented subgroup embedding.
    pub fn restrict(&self, sub: GroupSpec) -> Result<Comodule> {
        let (sub_group, mut s) = restriction(sub, self.spec())?;
        let m = self.matrix.substitute(&mut s)?;
        Comodule::new(sub_group, self.object.clone(), m)
    }

    /// Pulls back along the homomorphism given by a point of this group with
    /// entries in the coordinate ring of `sub`.
    pub fn pullback(&self, sub: &Group, point: &PolyMatrix) -> Result<Comodule> {
        let mut s = self.group.coordinates(point)?;
        let m = self.matrix.substitute(&mut s)?;
        Comodule::new(sub.clone(), self.object.clone(), m)
    }

    /// Re-expresses the comodule in a new F2 basis given by the columns of `b`.
    pub fn change_basis(&self, b: &BitMatrix) -> Result<Comodule> {
        let b_inv = b
            .inverse()
            .ok_or_else(|| Error::Domain("change of basis is singular".into()))?;
        let m = PolyMatrix::from_bits(&b_inv)
            .mul(&self.matrix)
            .mul(&PolyMatrix::from_bits(b));
        let d = b_inv.mul(self.d()).mul(b);
        Comodule::new(self.group.clone(), Ver4Object::new(d)?, m)
    }

    /// Coefficient matrices: `M = Σ_w w · N_w` over monomials `w`.
    pub fn coefficients(&self) -> BTreeMap<Monomial, BitMatrix> {
        let n = self.dim();
        let mut out: BTreeMap<Monomial, BitMatrix> = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                for w in self.matrix[(i, j)].terms() {
                    out.entry(w.clone())
                        .or_insert_with(|| BitMatrix::zeros(n, n))
                        .set(i, j, true);
                }
            }
        }
        out
    }

    /// A basis of the span of all `N_w` together with `D`: a subspace is a
    /// subcomodule exactly when it is invariant under each of these.
    pub fn action_matrices(&self) -> Vec<BitMatrix> {
        let n = self.dim();
        let flat: Vec<BitVec> = self
            .coefficients()
            .values()
            .chain(std::iter::once(self.d()))
            .map(flatten)
            .collect();
        Subspace::span(n * n, flat)
            .basis()
            .iter()
            .map(|v| unflatten(v, n))
            .collect()
    }

    pub fn is_subcomodule(&self, sub: &Subspace) -> bool {
        sub.is_invariant(&self.action_matrices())
    }

    /// Smallest subcomodule containing `v`.
    pub fn generated(&self, v: &BitVec) -> Result<Subspace> {
        if v.is_zero() {
            return Err(Error::Domain("the zero vector generates nothing".into()));
        }
        Ok(Subspace::span(self.dim(), [v.clone()]).close_under(&self.action_matrices()))
    }

    fn split(&self, sub: &Subspace) -> Result<(Comodule, Comodule)> {
        if !self.is_subcomodule(sub) {
            return Err(Error::Domain("subspace is not a subcomodule".into()));
        }
        let b = adapted_basis(sub);
        let conj = self.change_basis(&b)?;
        let k = sub.dim();
        let n = self.dim();
        let low: Vec<usize> = (0..k).collect();
        let high: Vec<usize> = (k..n).collect();
        let part = |idx: &[usize]| -> Result<Comodule> {
            Comodule::new(
                self.group.clone(),
                Ver4Object::new(conj.d().submatrix(idx, idx))?,
                conj.matrix.submatrix(idx, idx),
            )
        };
        Ok((part(&low)?, part(&high)?))
    }

    pub fn subcomodule(&self, sub: &Subspace) -> Result<Comodule> {
        Ok(self.split(sub)?.0)
    }

    pub fn quotient(&self, sub: &Subspace) -> Result<Comodule> {
        Ok(self.split(sub)?.1)
    }

    /// Dimension of `{X : X A = A X}` for every action matrix `A`.
    pub fn commutant_dim(&self) -> usize {
        intertwiner_space(&self.action_matrices(), &self.action_matrices(), self.dim(), self.dim()).len()
    }

    /// Basis of the comodule maps `self → other` commuting with `d`.
    pub fn hom(&self, other: &Comodule) -> Vec<BitMatrix> {
        if self.spec() != other.spec() {
            return Vec::new();
        }
        let (ma, mb) = paired_actions(self, other);
        intertwiner_space(&ma, &mb, other.dim(), self.dim())
    }

    /// F2-linear isomorphism of comodules (same group).
    pub fn is_isomorphic(&self, other: &Comodule) -> bool {
        if self.spec() != other.spec() || self.dim() != other.dim() {
            return false;
        }
        if self.object.decompose() != other.object.decompose() {
            return false;
        }
        let n = self.dim();
        let (ma, mb) = paired_actions(self, other);
        let sols = intertwiner_space(&ma, &mb, n, n);
        if sols.is_empty() {
            return false;
        }
        if sols.len() > 16 {
            // too many to enumerate; a random-free fallback: try each basis element
            return sols.iter().any(|x| x.inverse().is_some());
        }
        (1u64..(1u64 << sols.len())).any(|mask| {
            let mut x = BitMatrix::zeros(n, n);
            for (i, s) in sols.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x = x.add(s);
                }
            }
            x.inverse().is_some()
        })
    }
}

fn first_mismatch(a: &PolyMatrix, b: &PolyMatrix) -> (usize, usize) {
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if a[(i, j)] != b[(i, j)] {
                return (i, j);
            }
        }
    }
    (0, 0)
}

fn flatten(m: &BitMatrix) -> BitVec {
    let n = m.ncols();
    let mut v = BitVec::zeros(m.nrows() * n);
    for i in 0..m.nrows() {
        for j in m.row(i).ones() {
            v.set(i * n + j, true);
        }
    }
    v
}

fn unflatten(v: &BitVec, n: usize) -> BitMatrix {
    BitMatrix::from_fn(n, n, |i, j| v.get(i * n + j))
}

/// Coefficient matrices of both comodules on the union of their monomials,
/// plus the two `d` matrices, aligned pairwise.
fn paired_actions(a: &Comodule, b: &Comodule) -> (Vec<BitMatrix>, Vec<BitMatrix>) {
    let ca = a.coefficients();
    let cb = b.coefficients();
    let zero_a = BitMatrix::zeros(a.dim(), a.dim());
    let zero_b = BitMatrix::zeros(b.dim(), b.dim());
    let mut keys: Vec<&Monomial> = ca.keys().chain(cb.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut left = vec![a.d().clone()];
    let mut right = vec![b.d().clone()];
    for k in keys {
        left.push(ca.get(k).unwrap_or(&zero_a).clone());
        right.push(cb.get(k).unwrap_or(&zero_b).clone());
    }
    (left, right)
}

/// Basis of `{X (rows × cols) : X·A_k = B_k·X for all k}`, where `A_k` act on
/// the source (cols) and `B_k` on the target (rows).
pub fn intertwiner_space(a: &[BitMatrix], b: &[BitMatrix], rows: usize, cols: usize) -> Vec<BitMatrix> {
    let unknowns = rows * cols;
    let mut eqs: Vec<BitVec> = Vec::new();
    for (ak, bk) in a.iter().zip(b) {
        // (X A)_{ij} = Σ_l X_il A_lj ; (B X)_{ij} = Σ_l B_il X_lj
        for i in 0..rows {
            for j in 0..cols {
                let mut eq = BitVec::zeros(unknowns);
                for l in 0..cols {
                    if ak.get(l, j) {
                        eq.flip(i * cols + l);
                    }
                }
                for l in 0..rows {
                    if bk.get(i, l) {
                        eq.flip(l * cols + j);
                    }
                }
                if !eq.is_zero() {
                    eqs.push(eq);
                }
            }
        }
    }
    let sys = BitMatrix::from_rows(eqs, unknowns);
    sys.kernel()
        .into_iter()
        .map(|v| BitMatrix::from_fn(rows, cols, |i, j| v.get(i * cols + j)))
        .collect()
}
