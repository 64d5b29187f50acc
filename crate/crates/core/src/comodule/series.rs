use std::fmt;

use serde::Serialize;

use crate::braided::{BraidedPoly, Substitution};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Subspace};
use crate::group::{Group, GroupSpec};

use super::core::Comodule;
use super::glp::{glp_irrep, h1_irrep};
use super::label::{Gl1pLabel, GlpLabel, IrrepLabel};

/// Default bound on the dimension accepted by the subcomodule search.
pub const DEFAULT_BOUND: usize = 16;

/// A minimal nonzero subcomodule, found by closing every nonzero F2 vector.
/// Ties are broken by the first generating vector in counting order.
pub fn minimal_subcomodule(v: &Comodule, bound: usize) -> Result<Subspace> {
    let n = v.dim();
    if n == 0 {
        return Err(Error::Domain("the zero comodule has no simple subcomodule".into()));
    }
    if n > bound || n > 24 {
        return Err(Error::Unsupported(format!(
            "dimension {n} exceeds the search bound {}",
            bound.min(24)
        )));
    }
    let mats = v.action_matrices();
    let mut best: Option<Subspace> = None;
    for mask in 1u64..(1u64 << n) {
        // only strictly smaller closures can replace the current best
        let limit = best.as_ref().map_or(n, |b| b.dim() - 1);
        if limit == 0 {
            break;
        }
        if let Some(closure) = close_bounded(&BitVec::from_mask(n, mask), &mats, limit) {
            best = Some(closure);
        }
    }
    Ok(best.expect("the whole space is a subcomodule"))
}

/// Closure of `v` under `mats`, abandoned once it exceeds `limit`.
fn close_bounded(v: &BitVec, mats: &[crate::gf2::BitMatrix], limit: usize) -> Option<Subspace> {
    let mut space = Subspace::span(v.len(), [v.clone()]);
    let mut frontier = vec![v.clone()];
    while let Some(w) = frontier.pop() {
        for m in mats {
            let img = m.mul_vec(&w);
            if !space.contains(&img) {
                space = space.sum(&Subspace::span(v.len(), [img.clone()]));
                if space.dim() > limit {
                    return None;
                }
                frontier.push(img);
            }
        }
    }
    Some(space)
}

/// Simple subquotients, head first and socle last.
pub fn composition_factors(v: &Comodule, bound: usize) -> Result<Vec<Comodule>> {
    let mut socle_first = Vec::new();
    let mut current = v.clone();
    while current.dim() > 0 {
        let sub = minimal_subcomodule(&current, bound)?;
        socle_first.push(current.subcomodule(&sub)?);
        current = current.quotient(&sub)?;
    }
    socle_first.reverse();
    Ok(socle_first)
}

/// Composition series as labels, head first.
pub fn composition_series(v: &Comodule, bound: usize) -> Result<Vec<IrrepLabel>> {
    composition_factors(v, bound)?.iter().map(identify).collect()
}

/// All simple subcomodules, as the closures that contain no smaller closure.
pub fn simple_subcomodules(v: &Comodule, bound: usize) -> Result<Vec<Subspace>> {
    let n = v.dim();
    if n > bound || n > 24 {
        return Err(Error::Unsupported(format!("dimension {n} exceeds the search bound")));
    }
    let mats = v.action_matrices();
    let mut closures: Vec<Subspace> = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let vec = BitVec::from_mask(n, mask);
        let c = Subspace::span(n, [vec]).close_under(&mats);
        if !closures.contains(&c) {
            closures.push(c);
        }
    }
    let simple = closures
        .iter()
        .filter(|c| {
            !closures
                .iter()
                .any(|o| o.dim() < c.dim() && c.contains_space(o))
        })
        .cloned()
        .collect();
    Ok(simple)
}

/// Whether some composition series of `v` reads `want` (head first).
pub fn admits_series(v: &Comodule, want: &[IrrepLabel], bound: usize) -> Result<bool> {
    let Some((socle, rest)) = want.split_last() else {
        return Ok(v.dim() == 0);
    };
    if v.dim() == 0 {
        return Ok(false);
    }
    for s in simple_subcomodules(v, bound)? {
        let sub = v.subcomodule(&s)?;
        if identify(&sub).ok().as_ref() != Some(socle) {
            continue;
        }
        if admits_series(&v.quotient(&s)?, rest, bound)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Invariants used to narrow down the catalog before the isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub group: String,
    pub dim: usize,
    pub degree: Option<i32>,
    pub d_rank: usize,
    /// Labels of the `M₁`-restriction series at `a = 1`, head first.
    pub m1_series: Vec<u8>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = self.degree.map_or("?".to_string(), |d| d.to_string());
        write!(
            f,
            "{}: dim {}, degree {deg}, d-rank {}, M1 series {:?}",
            self.group, self.dim, self.d_rank, self.m1_series
        )
    }
}

/// Degree of the scalar torus action, if the torus acts by a single power.
pub fn torus_degree(v: &Comodule) -> Option<i32> {
    let r = v.restrict(GroupSpec::Gm).ok()?;
    let t = r.group().gen("T");
    let mut k = None;
    for i in 0..r.dim() {
        for j in 0..r.dim() {
            let e = &r.matrix()[(i, j)];
            if i != j {
                if !e.is_zero() {
                    return None;
                }
                continue;
            }
            let mut terms = e.terms();
            let m = terms.next()?;
            if terms.next().is_some() || m.has_prime(t) {
                return None;
            }
            let d = m.exponent(t);
            if *k.get_or_insert(d) != d {
                return None;
            }
        }
    }
    k
}

pub fn fingerprint(v: &Comodule) -> Fingerprint {
    let degree = torus_degree(v);
    let m1_series = (v.spec() == GroupSpec::GLP)
        .then(|| v.restrict(GroupSpec::M1).ok())
        .flatten()
        .and_then(|r| composition_series(&r, DEFAULT_BOUND).ok())
        .map(|s| {
            s.into_iter()
                .filter_map(|l| match l {
                    IrrepLabel::M1(e) => Some(e),
                    _ => None,
                })
                .collect()
        })
        .unwrap_or_default();
    Fingerprint {
        group: v.spec().to_string(),
        dim: v.dim(),
        degree,
        d_rank: v.d().rank(),
        m1_series,
    }
}

fn unidentified(v: &Comodule) -> Error {
    Error::Unidentified {
        fingerprint: fingerprint(v).to_string(),
    }
}

/// Label of a simple comodule over a supported group.
pub fn identify(v: &Comodule) -> Result<IrrepLabel> {
    match v.spec() {
        GroupSpec::Gl { m: 0, n: 1 } => identify_glp(v).map(IrrepLabel::Glp),
        GroupSpec::Levi { m: 1, n: 1 } => identify_levi(v).map(IrrepLabel::Gl1p),
        GroupSpec::Gl { m: 1, n: 1 } => super::gl1p::identify_gl1p(v),
        GroupSpec::M(1) => identify_character(v, |c, p| {
            let x = c.group().var("X");
            if p.is_one() {
                Some(IrrepLabel::M1(0))
            } else if *p == &BraidedPoly::one() + &x.derive() {
                Some(IrrepLabel::M1(1))
            } else {
                None
            }
        }),
        GroupSpec::Gm | GroupSpec::GlClassical(1) => identify_character(v, |c, p| {
            let t = c.group().ring().gen(0, 0);
            let mut terms = p.terms();
            let m = terms.next()?;
            (terms.next().is_none() && m.base().len() <= 1 && m.primes().is_empty())
                .then(|| IrrepLabel::Gm(m.exponent(t)))
        }),
        GroupSpec::H(1) => identify_h1(v),
        GroupSpec::Ga | GroupSpec::GaPrime if v.dim() == 1 && v.matrix().is_identity() => {
            Ok(IrrepLabel::Trivial)
        }
        _ if v.dim() == 1 && v.matrix().is_identity() => Ok(IrrepLabel::Trivial),
        _ => Err(unidentified(v)),
    }
}

fn identify_character(
    v: &Comodule,
    f: impl Fn(&Comodule, &BraidedPoly) -> Option<IrrepLabel>,
) -> Result<IrrepLabel> {
    if v.dim() != 1 {
        return Err(unidentified(v));
    }
    f(v, &v.matrix()[(0, 0)]).ok_or_else(|| unidentified(v))
}

fn identify_h1(v: &Comodule) -> Result<IrrepLabel> {
    let a = v.group().gen("a");
    let n = v.matrix()[(0, 0)]
        .terms()
        .find(|m| !m.has_prime(a))
        .map(|m| m.exponent(a))
        .ok_or_else(|| unidentified(v))?;
    if h1_irrep(n).is_isomorphic(v) {
        Ok(IrrepLabel::H1(n))
    } else {
        Err(unidentified(v))
    }
}

/// Candidates with matching dimension and degree, confirmed by an explicit
/// isomorphism.
pub fn identify_glp(v: &Comodule) -> Result<GlpLabel> {
    let deg = torus_degree(v).ok_or_else(|| unidentified(v))?;
    let (k, t) = (deg.div_euclid(4), deg.rem_euclid(4) as u8);
    for xi in [false, true] {
        let cand = GlpLabel::new(xi, k, t)?;
        if cand.dim() != v.dim() || (xi && t == 2) {
            continue;
        }
        if glp_irrep(cand)?.is_isomorphic(v) {
            return Ok(cand);
        }
    }
    Err(unidentified(v))
}

fn levi_parts() -> (Group, Group) {
    (
        Group::new(GroupSpec::Levi { m: 1, n: 1 }).expect("Levi"),
        Group::new(GroupSpec::GLP).expect("GL(P)"),
    )
}

/// Splits a simple Levi comodule into its `GL(1)` weight and `GL(P)` part.
pub fn identify_levi(v: &Comodule) -> Result<Gl1pLabel> {
    let (levi, glp) = levi_parts();
    let (a, e, f) = (levi.gen("A"), levi.gen("E"), levi.gen("F"));
    let mut to_torus = Substitution::new()
        .with(a, levi.var("A"))?
        .with(e, BraidedPoly::one())?
        .with(f, BraidedPoly::zero())?;
    let torus_part = v.matrix().substitute(&mut to_torus)?;
    let n = torus_part[(0, 0)]
        .terms()
        .next()
        .map(|m| m.exponent(a))
        .ok_or_else(|| unidentified(v))?;
    let mut to_glp = Substitution::new()
        .with(a, BraidedPoly::one())?
        .with(e, glp.var("A"))?
        .with(f, glp.var("B"))?;
    let m = v.matrix().substitute(&mut to_glp)?;
    let glp_rep = Comodule::new(glp, v.object().clone(), m)?;
    Ok(Gl1pLabel::new(n, identify_glp(&glp_rep)?))
}
