use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

use super::qsqrt2::QSqrt2;

/// A generator of a tensor power: `(tag, index)`. Tag `0` is the algebra
/// itself; tags `1, 2, …` are the tensor factors, ordered left to right.
pub type SGen = (u8, u16);

/// `∏ even^e · ∏ odd` with the odd generators in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMonomial {
    even: BTreeMap<SGen, i32>,
    odd: Vec<SGen>,
}

impl SuperMonomial {
    pub fn even(&self) -> &BTreeMap<SGen, i32> {
        &self.even
    }

    pub fn odd(&self) -> &[SGen] {
        &self.odd
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    /// Product with its Koszul sign, or `None` when an odd generator repeats.
    fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        let mut even = self.even.clone();
        for (&g, &e) in &other.even {
            let slot = even.entry(g).or_insert(0);
            *slot += e;
            if *slot == 0 {
                even.remove(&g);
            }
        }
        let mut odd = Vec::with_capacity(self.odd.len() + other.odd.len());
        let mut negative = false;
        let (mut i, mut j) = (0, 0);
        while i < self.odd.len() || j < other.odd.len() {
            let take_left = j == other.odd.len() || (i < self.odd.len() && self.odd[i] < other.odd[j]);
            if take_left {
                odd.push(self.odd[i]);
                i += 1;
            } else {
                if i < self.odd.len() && self.odd[i] == other.odd[j] {
                    return None;
                }
                // moving past the remaining left odd generators
                negative ^= (self.odd.len() - i) % 2 == 1;
                odd.push(other.odd[j]);
                j += 1;
            }
        }
        Some((SuperMonomial { even, odd }, negative))
    }

    /// Retagged monomial with the sign of restoring the odd order.
    fn retag(&self, from: u8, to: u8) -> Option<(SuperMonomial, bool)> {
        let re = |g: SGen| if g.0 == from { (to, g.1) } else { g };
        let mut acc = SuperMonomial {
            even: self.even.iter().map(|(&g, &e)| (re(g), e)).collect(),
            odd: Vec::new(),
        };
        let mut negative = false;
        for &g in &self.odd {
            let single = SuperMonomial {
                even: BTreeMap::new(),
                odd: vec![re(g)],
            };
            let (m, n) = acc.mul(&single)?;
            acc = m;
            negative ^= n;
        }
        Some((acc, negative))
    }
}

/// Element of a supercommutative Laurent polynomial algebra over `ℚ(√2)`
/// whose odd generators anticommute and square to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperPoly {
    terms: BTreeMap<SuperMonomial, QSqrt2>,
}

impl SuperPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: QSqrt2) -> Self {
        let mut p = SuperPoly::zero();
        p.add_term(SuperMonomial::default(), c);
        p
    }

    pub fn one() -> Self {
        SuperPoly::constant(QSqrt2::one())
    }

    pub fn even(g: SGen) -> Self {
        let mut m = SuperMonomial::default();
        m.even.insert(g, 1);
        let mut p = SuperPoly::zero();
        p.add_term(m, QSqrt2::one());
        p
    }

    pub fn odd(g: SGen) -> Self {
        let m = SuperMonomial {
            even: BTreeMap::new(),
            odd: vec![g],
        };
        let mut p = SuperPoly::zero();
        p.add_term(m, QSqrt2::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &QSqrt2)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: SuperMonomial, c: QSqrt2) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &SuperPoly) -> SuperPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SuperPoly) -> SuperPoly {
        self.add(&other.scale(&QSqrt2::from(-1)))
    }

    pub fn scale(&self, c: &QSqrt2) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, negative)) = m1.mul(m2) {
                    let c = c1 * c2;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SuperPoly {
        (0..k).fold(SuperPoly::one(), |acc, _| acc.mul(self))
    }

    /// Parity automorphism `g`: negates the terms with an odd number of odd
    /// generators.
    pub fn parity(&self) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), if m.odd.len() % 2 == 1 { -c } else { c.clone() });
        }
        out
    }

    /// `d = (1 − g)/√2`.
    pub fn d(&self) -> SuperPoly {
        self.sub(&self.parity()).scale(&QSqrt2::sqrt2_pow(-1))
    }

    /// Terms with exactly `k` odd generators.
    pub fn odd_degree_part(&self, k: usize) -> SuperPoly {
        SuperPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.odd.len() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn retag(&self, from: u8, to: u8) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            if let Some((m, negative)) = m.retag(from, to) {
                out.add_term(m, if negative { -c } else { c.clone() });
            }
        }
        out
    }

    fn odd_gens(&self) -> BTreeSet<SGen> {
        self.terms.keys().flat_map(|m| m.odd.iter().copied()).collect()
    }

    /// Inverse of `c·m·(1 + u)` where `m` is an even monomial and every term of
    /// `u` is nilpotent or has positive valuation. The geometric series is
    /// exact when `u` is nilpotent; otherwise it is cut off after the terms
    /// of valuation below `precision`.
    pub fn inverse(&self, precision: u32) -> Result<SuperPoly> {
        let bad = || Error::Domain("element is not a unit of the lattice".into());
        let lead = self
            .terms
            .iter()
            .filter(|(m, _)| m.odd.is_empty())
            .min_by_key(|(_, c)| c.valuation().unwrap_or(i64::MAX))
            .ok_or_else(bad)?;
        let (lm, lc) = (lead.0.clone(), lead.1.clone());
        let lead_inv = {
            let inv = SuperMonomial {
                even: lm.even.iter().map(|(&g, &e)| (g, -e)).collect(),
                odd: Vec::new(),
            };
            let mut p = SuperPoly::zero();
            p.add_term(inv, lc.inverse()?);
            p
        };
        let u = self.mul(&lead_inv).sub(&SuperPoly::one());
        for (m, c) in &u.terms {
            if m.odd.is_empty() && c.valuation().unwrap_or(i64::MAX) <= 0 {
                return Err(bad());
            }
        }
        let steps = precision as usize + u.odd_gens().len() + 1;
        let neg_u = u.scale(&QSqrt2::from(-1));
        let mut sum = SuperPoly::one();
        let mut power = SuperPoly::one();
        for _ in 0..steps {
            power = power.mul(&neg_u);
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power);
        }
        Ok(sum.mul(&lead_inv))
    }

    /// Replaces every generator by its image; negative exponents use
    /// [`SuperPoly::inverse`] of the image.
    pub fn substitute(&self, image: &dyn Fn(SGen, bool) -> Result<SuperPoly>, precision: u32) -> Result<SuperPoly> {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = SuperPoly::constant(c.clone());
            for (&g, &e) in &m.even {
                let img = image(g, false)?;
                let factor = if e >= 0 {
                    img.pow(e as u32)
                } else {
                    img.inverse(precision)?.pow(e.unsigned_abs())
                };
                acc = acc.mul(&factor);
            }
            for &g in &m.odd {
                acc = acc.mul(&image(g, true)?);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut s = format!("({c})");
                for (g, e) in &m.even {
                    s += &format!("·e{}_{}^{e}", g.1, g.0);
                }
                for g in &m.odd {
                    s += &format!("·o{}_{}", g.1, g.0);
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
