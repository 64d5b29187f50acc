use crate::braided::{BraidedPoly, PolyMatrix};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::group::{Group, GroupSpec};
use crate::ver4::Ver4Object;

use super::core::Comodule;
use super::label::GlpLabel;

fn glp() -> Group {
    Group::new(GroupSpec::GLP).expect("GL(P) is constructible")
}

fn projective_d() -> BitMatrix {
    BitMatrix::from_fn(2, 2, |i, j| i == 1 && j == 0)
}

fn pow(p: &BraidedPoly, k: i32) -> BraidedPoly {
    p.pow_signed(k).expect("a is invertible")
}

/// `Sym^n P` for any integer `n` (the 2×2 action matrix with `n` plugged in).
pub fn sym_matrix(n: i32) -> PolyMatrix {
    let g = glp();
    let a = g.var("A");
    let b = g.var("B");
    let a1 = a.derive();
    let b1 = b.derive();
    let an = pow(&a, n);
    let an1 = pow(&a, n - 1);
    let an2 = pow(&a, n - 2);
    let tail = &(&an2 * &a1) * &(&b1 + &a);
    let (m10, m11) = if n.rem_euclid(2) == 1 {
        let mut m10 = &an1 * &b;
        if (n - 1).div_euclid(2).rem_euclid(2) == 1 {
            m10 += tail;
        }
        (m10, &an + &(&an1 * &b1))
    } else {
        let m10 = if n.div_euclid(2).rem_euclid(2) == 1 {
            tail
        } else {
            BraidedPoly::zero()
        };
        (m10, &(&an + &(&an1 * &b1)) + &(&(&an2 * &b) * &a1))
    };
    PolyMatrix::from_rows(vec![vec![an.clone(), &an1 * &a1], vec![m10, m11]])
}

/// `Sym^n P` as a comodule; simple unless `n ≡ 0 (mod 4)`. The object is
/// `P` for odd `n` and `2·𝟙` for even `n`.
pub fn sym_power_rep(n: i32) -> Comodule {
    let object = if n.rem_euclid(2) == 1 {
        Ver4Object::projective()
    } else {
        Ver4Object::trivial(2)
    };
    Comodule::new(glp(), object, sym_matrix(n))
    .expect("2×2 matrix on a 2-dim object")
}

pub fn chi_poly(k: i32) -> BraidedPoly {
    pow(&glp().var("A"), 4 * k)
}

/// `ξ = 1 + a⁻¹b' + a⁻²ba'`.
pub fn xi_poly() -> BraidedPoly {
    let g = glp();
    g.parse("1 + A^-1 B' + A^-2 B A'").expect("well-formed")
}

pub fn chi(k: i32) -> Comodule {
    Comodule::character(&glp(), chi_poly(k)).expect("1×1")
}

pub fn xi() -> Comodule {
    Comodule::character(&glp(), xi_poly()).expect("1×1")
}

/// The catalog comodule for a GL(P) label.
pub fn glp_irrep(label: GlpLabel) -> Result<Comodule> {
    if label.t > 3 {
        return Err(Error::Domain(format!("T index {} out of range", label.t)));
    }
    let mut rep = if label.t == 0 {
        chi(label.chi)
    } else {
        let base = sym_power_rep(label.t as i32);
        if label.chi == 0 {
            base
        } else {
            chi(label.chi).tensor(&base)?
        }
    };
    if label.xi {
        rep = xi().tensor(&rep)?;
    }
    Ok(rep)
}

/// Irreducible `L_n` of `G'_m = H(1)`, by `n mod 4`: `aⁿ`; on `P`,
/// `(aⁿ, a^{n-1}a'; 0, aⁿ)`; `aⁿ + a^{n-1}a'`; on `P`, the previous matrix
/// with `aⁿ` replaced by `aⁿ + a^{n-1}a'` on the diagonal.
pub fn h1_irrep(n: i32) -> Comodule {
    let g = Group::new(GroupSpec::GM_PRIME).expect("H(1)");
    let a = g.var("a");
    let an = pow(&a, n);
    let corr = &pow(&a, n - 1) * &a.derive();
    let shifted = &an + &corr;
    match n.rem_euclid(4) {
        0 => Comodule::character(&g, an).expect("1×1"),
        2 => Comodule::character(&g, shifted).expect("1×1"),
        r => {
            let diag = if r == 1 { an } else { shifted };
            let m = PolyMatrix::from_rows(vec![
                vec![diag.clone(), corr],
                vec![BraidedPoly::zero(), diag],
            ]);
            Comodule::new(g, Ver4Object::new(projective_d()).expect("d² = 0"), m).expect("2×2")
        }
    }
}

/// `M₁` irreducibles: trivial (`ε = 0`) and `L_ξ: X ↦ 1 + X'` (`ε = 1`).
pub fn m1_irrep(eps: u8) -> Comodule {
    let g = Group::new(GroupSpec::M1).expect("M(1)");
    let v = if eps == 0 {
        BraidedPoly::one()
    } else {
        &BraidedPoly::one() + &g.var("X").derive()
    };
    Comodule::character(&g, v).expect("1×1")
}

/// `G'_a` has only the trivial irreducible.
pub fn ga_irreps() -> Vec<Comodule> {
    vec![Comodule::trivial(
        &Group::new(GroupSpec::GaPrime).expect("Ga'"),
    )]
}
