use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::group::{Group, GroupSpec};
use crate::ver4::Ver4Object;

use super::presentation::{
    change_basis_and_reduce, compare_presentations, Comparison, Lattice, ReducedPresentation, SuperGen,
    SuperHopfPresentation,
};
use super::qsqrt2::QSqrt2;
use super::superpoly::SuperPoly;

/// A supergroup over `ℚ(√2)`, a lattice in its coordinate ring, and the
/// group scheme in `Ver4+` its reduction is compared with.
#[derive(Clone, Debug)]
pub struct Degeneration {
    pub key: &'static str,
    pub presentation: SuperHopfPresentation,
    pub lattice: Lattice,
    pub target: GroupSpec,
    /// Image of each lattice generator in the target coordinate ring.
    pub identification: Vec<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegenerationReport {
    pub key: String,
    pub target: String,
    pub reduced: Vec<String>,
    pub comparison: Comparison,
}

impl DegenerationReport {
    pub fn matches(&self) -> bool {
        self.comparison.agrees()
    }
}

fn gen(name: &str, odd: bool, invertible: bool) -> SuperGen {
    SuperGen {
        name: name.into(),
        odd,
        invertible,
    }
}

fn c(a: i64) -> QSqrt2 {
    QSqrt2::from(a)
}

/// `G_a^{1|1}`: `X` even, `Ξ` odd, both primitive; lattice `p = X + Ξ`,
/// `q = √2Ξ`.
pub fn ga11() -> Result<Degeneration> {
    let mut h = SuperHopfPresentation {
        name: "G_a^{1|1}".into(),
        gens: vec![gen("X", false, false), gen("Xi", true, false)],
        coproduct: Vec::new(),
        counit: vec![c(0), c(0)],
        antipode: Vec::new(),
    };
    for name in ["X", "Xi"] {
        h.coproduct.push(h.var(name, 1)?.add(&h.var(name, 2)?));
        h.antipode.push(h.var(name, 0)?.scale(&c(-1)));
    }
    let p = h.var("X", 0)?.add(&h.var("Xi", 0)?);
    let q = h.var("Xi", 0)?.scale(&QSqrt2::sqrt2());
    let lattice = Lattice::new(&h, &[("p", p), ("q", q)])?;
    Ok(Degeneration {
        key: "ga11",
        presentation: h,
        lattice,
        target: GroupSpec::GaPrime,
        identification: vec!["T"],
    })
}

/// `Aff(0,1)`: `Y` even grouplike, `Z` odd with `Δ(Z) = Z⊗1 + Y⊗Z`; lattice
/// `X = Z + (Y − 1)/√2`, `Ξ = √2Z`.
pub fn aff01() -> Result<Degeneration> {
    let mut h = SuperHopfPresentation {
        name: "Aff(0,1)".into(),
        gens: vec![gen("Y", false, true), gen("Z", true, false)],
        coproduct: Vec::new(),
        counit: vec![c(1), c(0)],
        antipode: Vec::new(),
    };
    let (y, z) = (h.var("Y", 0)?, h.var("Z", 0)?);
    let y_inv = y.inverse(0)?;
    h.coproduct = vec![
        h.var("Y", 1)?.mul(&h.var("Y", 2)?),
        h.var("Z", 1)?.add(&h.var("Y", 1)?.mul(&h.var("Z", 2)?)),
    ];
    h.antipode = vec![y_inv.clone(), y_inv.mul(&z).scale(&c(-1))];
    let r = QSqrt2::sqrt2_pow(-1);
    let x = z.add(&y.sub(&SuperPoly::one()).scale(&r));
    let xi = z.scale(&QSqrt2::sqrt2());
    let lattice = Lattice::new(&h, &[("X", x), ("Xi", xi)])?;
    Ok(Degeneration {
        key: "aff01",
        presentation: h,
        lattice,
        target: GroupSpec::M1,
        identification: vec!["X"],
    })
}

/// `S(1|1)`: `X` even invertible, `Y` odd, `Δ(X) = X⊗X + Y⊗Y`,
/// `Δ(Y) = Y⊗X + X⊗Y`; lattice `p = X + Y`, `q = √2Y`.
pub fn s11() -> Result<Degeneration> {
    let mut h = SuperHopfPresentation {
        name: "S(1|1)".into(),
        gens: vec![gen("X", false, true), gen("Y", true, false)],
        coproduct: Vec::new(),
        counit: vec![c(1), c(0)],
        antipode: Vec::new(),
    };
    let (x, y) = (h.var("X", 0)?, h.var("Y", 0)?);
    let (x1, y1, x2, y2) = (h.var("X", 1)?, h.var("Y", 1)?, h.var("X", 2)?, h.var("Y", 2)?);
    h.coproduct = vec![x1.mul(&x2).add(&y1.mul(&y2)), y1.mul(&x2).add(&x1.mul(&y2))];
    let x_inv = x.inverse(0)?;
    h.antipode = vec![x_inv.clone(), y.mul(&x_inv.pow(2)).scale(&c(-1))];
    let p = x.add(&y);
    let q = y.scale(&QSqrt2::sqrt2());
    let lattice = Lattice::new(&h, &[("p", p), ("q", q)])?;
    Ok(Degeneration {
        key: "s11",
        presentation: h,
        lattice,
        target: GroupSpec::GM_PRIME,
        identification: vec!["a"],
    })
}

pub const DEGENERATION_KEYS: [&str; 3] = ["ga11", "aff01", "s11"];

pub fn degeneration(key: &str) -> Result<Degeneration> {
    match key {
        "ga11" => ga11(),
        "aff01" => aff01(),
        "s11" => s11(),
        other => Err(Error::Parse(format!(
            "unknown degeneration {other:?}; expected one of {}",
            DEGENERATION_KEYS.join(", ")
        ))),
    }
}

impl Degeneration {
    pub fn reduce(&self) -> Result<ReducedPresentation> {
        change_basis_and_reduce(&self.presentation, &self.lattice)
    }

    /// Reduces and compares with `target` (or the stated one).
    pub fn check_against(&self, target: GroupSpec, identification: &[&str]) -> Result<DegenerationReport> {
        self.presentation.check_axioms()?;
        let reduced = self.reduce()?;
        let comparison = compare_presentations(&reduced, &Group::new(target)?, identification)?;
        Ok(DegenerationReport {
            key: self.key.into(),
            target: target.to_string(),
            reduced: reduced.describe(),
            comparison,
        })
    }

    pub fn check(&self) -> Result<DegenerationReport> {
        self.check_against(self.target, &self.identification)
    }
}

/// Square matrix over `ℚ(√2)`, row-major.
type QMatrix = Vec<Vec<QSqrt2>>;

fn q_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(QSqrt2::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

fn q_inverse(m: &QMatrix) -> Result<QMatrix> {
    let n = m.len();
    let mut a: QMatrix = m.clone();
    let mut inv: QMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { QSqrt2::one() } else { QSqrt2::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Domain("lattice basis is singular".into()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inverse()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    Ok(inv)
}

/// `k^{m+n|n}` with `d = (1 − g)/√2`, rewritten in the lattice basis
/// `v_1, …, v_m, (v_{m+j} + w_j, √2 w_j)` and reduced modulo `√2`.
pub fn reduce_supervector(m: usize, n: usize) -> Result<Ver4Object> {
    let size = m + 2 * n;
    // standard basis: m + n even vectors, then n odd ones
    let d: QMatrix = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j && i >= m + n { QSqrt2::sqrt2() } else { QSqrt2::zero() })
                .collect()
        })
        .collect();
    let mut basis: QMatrix = vec![vec![QSqrt2::zero(); size]; size];
    for (i, row) in basis.iter_mut().enumerate().take(m) {
        row[i] = QSqrt2::one();
    }
    for j in 0..n {
        let (p, q) = (m + 2 * j, m + 2 * j + 1);
        basis[m + j][p] = QSqrt2::one();
        basis[m + n + j][p] = QSqrt2::one();
        basis[m + n + j][q] = QSqrt2::sqrt2();
    }
    let lattice_d = q_mul(&q_mul(&q_inverse(&basis)?, &d), &basis);
    let mut bits = BitMatrix::zeros(size, size);
    for (i, row) in lattice_d.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if x.valuation().is_some_and(|v| v < 0) {
                return Err(Error::LatticeNotIntegral(format!("d has entry {x} at ({i},{j})")));
            }
            bits.set(i, j, x.residue()?);
        }
    }
    Ver4Object::new(bits)
}
