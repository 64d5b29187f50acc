use std::collections::BTreeMap;

use crate::braided::{split_by_tag, BraidedPoly, Monomial, PolyMatrix, Substitution};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::group::Group;
use crate::ver4::Ver4Object;

use super::core::Comodule;

/// F2-span of polynomials kept in echelon form by leading monomial.
#[derive(Clone, Debug, Default)]
pub struct PolySpan {
    pivots: BTreeMap<Monomial, usize>,
    basis: Vec<BraidedPoly>,
}

impl PolySpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(&self) -> &[BraidedPoly] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Adds `p` if it is not already in the span; returns whether it was new.
    pub fn insert(&mut self, p: &BraidedPoly) -> bool {
        let (rest, _) = self.reduce(p);
        let Some(lead) = rest.leading().cloned() else {
            return false;
        };
        self.pivots.insert(lead, self.basis.len());
        self.basis.push(rest);
        true
    }

    /// Coordinates of `p` in the current basis, if it lies in the span.
    pub fn coordinates(&self, p: &BraidedPoly) -> Option<BitVec> {
        let (rest, used) = self.reduce(p);
        if !rest.is_zero() {
            return None;
        }
        let mut v = BitVec::zeros(self.dim());
        for i in used {
            v.flip(i);
        }
        Some(v)
    }

    /// Cancels leading terms against pivots until the leading term is new;
    /// returns the remainder and the basis indices used.
    fn reduce(&self, p: &BraidedPoly) -> (BraidedPoly, Vec<usize>) {
        let mut rest = p.clone();
        let mut used = Vec::new();
        while let Some(lead) = rest.leading().cloned() {
            let Some(&i) = self.pivots.get(&lead) else {
                break;
            };
            rest += self.basis[i].clone();
            used.push(i);
        }
        (rest, used)
    }
}

/// The tag-1 parts of `Δ(p)` with the tag-2 monomial they pair with.
fn coproduct_split(delta: &mut Substitution, p: &BraidedPoly) -> Result<Vec<(Monomial, BraidedPoly)>> {
    let dp = delta.apply(p)?;
    Ok(split_by_tag(&dp, 1)
        .into_iter()
        .map(|(right, left)| (right, left.retag(1, 0)))
        .collect())
}

/// Subcomodule of the coordinate ring (with `ρ = Δ`, vectors on the left)
/// generated by `gens`, closed under `d`. Returns the comodule and its basis.
pub fn regular_subcomodule(group: &Group, gens: &[BraidedPoly], max_dim: usize) -> Result<(Comodule, Vec<BraidedPoly>)> {
    let mut delta = group.coproduct()?;
    let mut span = PolySpan::new();
    for g in gens {
        span.insert(g);
    }
    let mut done = 0;
    while done < span.dim() {
        if span.dim() > max_dim {
            return Err(Error::Unsupported(format!(
                "generated subcomodule exceeds dimension {max_dim}"
            )));
        }
        let b = span.basis()[done].clone();
        for (_, left) in coproduct_split(&mut delta, &b)? {
            span.insert(&left);
        }
        span.insert(&b.derive());
        done += 1;
    }
    let basis = span.basis().to_vec();
    let n = basis.len();
    let mut m = PolyMatrix::zeros(n, n);
    let mut d = BitMatrix::zeros(n, n);
    for (j, b) in basis.iter().enumerate() {
        for (right, left) in coproduct_split(&mut delta, b)? {
            let coords = span
                .coordinates(&left)
                .ok_or_else(|| Error::Contract("coproduct left factor escaped the span".into()))?;
            let w = BraidedPoly::from(right).retag(2, 0);
            for i in coords.ones() {
                m[(i, j)] += w.clone();
            }
        }
        let dc = span
            .coordinates(&b.derive())
            .ok_or_else(|| Error::Contract("derivative escaped the span".into()))?;
        for i in dc.ones() {
            d.set(i, j, true);
        }
    }
    Ok((Comodule::new(group.clone(), Ver4Object::new(d)?, m)?, basis))
}
