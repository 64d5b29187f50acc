use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::braided::{BraidedPoly, Substitution};
use crate::error::{Error, Result};
use crate::gf2::Subspace;
use crate::group::{Group, GroupSpec};

use super::core::Comodule;
use super::glp::glp_irrep;
use super::label::{Gl1pLabel, GlpLabel, IrrepLabel};
use super::ext::kernel_combinations;
use super::regular::regular_subcomodule;
use super::series::{composition_factors, identify_glp, DEFAULT_BOUND};

pub const LEVI: GroupSpec = GroupSpec::Levi { m: 1, n: 1 };

pub fn gl1p() -> Group {
    Group::new(GroupSpec::GL1P).expect("GL(1+P)")
}

/// Table entry for the invariant function of highest weight `(n, T)`, for
/// `(n, 1)`, `(0, χ^k)`, `(0, T_i)` and `(1, T_i)`.
pub fn gl1p_invariant(label: Gl1pLabel) -> Result<BraidedPoly> {
    let g = gl1p();
    let GlpLabel { xi, chi, t } = label.glp;
    let text = match (label.n, xi, chi, t) {
        (n, false, 0, 0) => format!("A^{n}"),
        (0, false, k, 0) => format!("E^{}", 4 * k),
        (0, false, 0, i) => format!("A^-1 E^{i} B'"),
        (1, false, 0, i) => format!("E^{i} B'"),
        _ => {
            return Err(Error::Unsupported(format!(
                "no tabulated invariant for {label}; use the twisted construction"
            )))
        }
    };
    g.parse(&text)
}

/// The tabulated `(0, ξχ)` / `(1, ξχ)` entry with the undefined symbol `D'`
/// read as `E'`; kept only to compare against the re-derived invariant.
pub fn printed_xi_chi_invariant(n: i32) -> BraidedPoly {
    let g = gl1p();
    let head = g.parse("E^4 + E^3 F' + E^2 F E'").expect("well-formed");
    let tail = g
        .parse("C E^3 B' + B E^3 C' + E^2 F B' C' + B C E^2 E' + C E^2 B' F' + E B' C' E' F'")
        .expect("well-formed");
    let a = g.var("A");
    match n {
        0 => &head + &(&a.pow_signed(-1).expect("A invertible") * &tail),
        _ => &(&a * &head) + &tail,
    }
}

/// Solutions `f` of `(1 ⊗ π_B) Δ(f) = f ⊗ λ` among the given candidates, where
/// `π_B` restricts to the upper block-triangular subgroup (`B ↦ 0`) and `λ`
/// is a character of that subgroup written in the same coordinates.
pub fn b_semi_invariants(lambda: &BraidedPoly, candidates: &[BraidedPoly]) -> Result<Vec<BraidedPoly>> {
    let g = gl1p();
    let mut right = Substitution::new().with(g.ring().gen(g.gen("B").index() as usize, 2), BraidedPoly::zero())?;
    let point = g.generic(1).mul(&g.generic(2).substitute(&mut right)?);
    let mut delta_b = g.coordinates(&point)?;
    let lam2 = lambda.retag(0, 2);
    let mut rows: Vec<BraidedPoly> = Vec::new();
    for c in candidates {
        let lhs = delta_b.apply(c)?;
        let rhs = &c.retag(0, 1) * &lam2;
        rows.push(&lhs + &rhs);
    }
    Ok(kernel_combinations(candidates, &rows))
}

/// Products of powers `A^a B^b C^c E^e F^f` times square-free primes, with
/// right torus weight `(w1, w2)`: `A, B` count towards `w1`; `C, E, F`
/// towards `w2`.
pub fn weight_candidates(w1: i32, w2: i32, max_each: i32) -> Vec<BraidedPoly> {
    let g = gl1p();
    let (a, b, c, e, f) = (g.var("A"), g.var("B"), g.var("C"), g.var("E"), g.var("F"));
    let primes = [b.derive(), c.derive(), e.derive(), f.derive()];
    let mut out = Vec::new();
    for pm in 0u8..16 {
        let nb1 = (pm & 1) as i32;
        let ncef1 = (pm >> 1).count_ones() as i32;
        let mut prime = BraidedPoly::one();
        for (i, p) in primes.iter().enumerate() {
            if pm >> i & 1 == 1 {
                prime = &prime * p;
            }
        }
        for nb in 0..=max_each {
            for nc in 0..=max_each {
                for nf in 0..=max_each {
                    let na = w1 - nb - nb1;
                    let ne = w2 - nc - nf - ncef1;
                    if na.abs() > max_each + 2 || ne.abs() > 4 * max_each + 2 {
                        continue;
                    }
                    let pow = |x: &BraidedPoly, k: i32| x.pow_signed(k).expect("invertible");
                    let m = &(&(&(&(&pow(&a, na) * &pow(&b, nb)) * &pow(&c, nc)) * &pow(&e, ne)) * &pow(&f, nf)) * &prime;
                    if !m.is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// `ξχ` in the coordinates of the `P`-block: `E⁴ + E³F' + E²FE'`.
pub fn xi_chi_block() -> BraidedPoly {
    gl1p().parse("E^4 + E^3 F' + E^2 F E'").expect("well-formed")
}

/// Re-derived invariant for `(n, ξχ)`, `n ∈ {0, 1}`: the B-semi-invariant of
/// weight `A^n·ξχ` whose `B, C`-free part is `A^n(E⁴ + E³F' + E²FE')`.
pub fn derive_xi_chi_invariant(n: i32) -> Result<BraidedPoly> {
    let g = gl1p();
    let lambda = &g.var("A").pow_signed(n)? * &xi_chi_block();
    let sols = b_semi_invariants(&lambda, &weight_candidates(n, 4, 2))?;
    let levi_part = |p: &BraidedPoly| -> Result<BraidedPoly> {
        let mut s = Substitution::new()
            .with(g.gen("B"), BraidedPoly::zero())?
            .with(g.gen("C"), BraidedPoly::zero())?;
        s.apply(p)
    };
    // pick the solution whose Levi part is λ; solutions form an F2 space
    let target = lambda.clone();
    let parts: Vec<BraidedPoly> = sols.iter().map(levi_part).collect::<Result<_>>()?;
    let k = sols.len();
    if k > 20 {
        return Err(Error::Unsupported("too many semi-invariants to search".into()));
    }
    for mask in 1u32..(1u32 << k) {
        let mut lp = BraidedPoly::zero();
        let mut f = BraidedPoly::zero();
        for i in 0..k {
            if mask >> i & 1 == 1 {
                lp += parts[i].clone();
                f += sols[i].clone();
            }
        }
        if lp == target {
            return Ok(f);
        }
    }
    Err(Error::Unidentified {
        fingerprint: format!("no semi-invariant of weight ({n}, xi*chi)"),
    })
}

/// Character of the Levi subgroup on a named one-dimensional comodule.
fn one_dim(value: BraidedPoly) -> Comodule {
    Comodule::character(&gl1p(), value).expect("1×1")
}

/// `L(2, 1)`, `L(0, χ^k)` and `L(1, ξχ)`, the one-dimensional twists.
pub fn twist_a2() -> Comodule {
    one_dim(gl1p().parse("A^2").expect("well-formed"))
}

pub fn twist_chi(k: i32) -> Result<Comodule> {
    Ok(one_dim(gl1p().var("E").pow_signed(4 * k)?))
}

pub fn twist_xi_chi() -> Result<Comodule> {
    let (v, _) = regular_subcomodule(&gl1p(), &[derive_xi_chi_invariant(1)?], 4)?;
    if v.dim() != 1 {
        return Err(Error::Contract(format!("L(1, xi*chi) came out {}-dimensional", v.dim())));
    }
    Ok(v)
}

/// `L(r, T_t)` for `r ∈ {0, 1}`, `t ∈ 0..=3`: the simple head of the
/// comodule generated by the tabulated invariant.
pub fn base_irrep(r: i32, t: u8) -> Result<Comodule> {
    let g = gl1p();
    if r == 0 && t == 0 {
        return Ok(Comodule::trivial(&g));
    }
    let f = gl1p_invariant(Gl1pLabel::new(r, GlpLabel::new(false, 0, t)?))?;
    let (generated, _) = regular_subcomodule(&g, &[f], 32)?;
    simple_head(&generated)
}

/// Simple quotient of a cyclic comodule (head of the composition series).
pub fn simple_head(v: &Comodule) -> Result<Comodule> {
    composition_factors(v, DEFAULT_BOUND)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Domain("the zero comodule has no head".into()))
}

/// `L(n, T)` for any label, by twisting a base case with one-dimensional
/// representations.
pub fn gl1p_irrep(label: Gl1pLabel) -> Result<Comodule> {
    let GlpLabel { xi, chi, t } = label.glp;
    if xi {
        let rest = Gl1pLabel::new(label.n - 1, GlpLabel::new(false, chi - 1, t)?);
        return twist_xi_chi()?.tensor(&gl1p_irrep(rest)?);
    }
    let r = label.n.rem_euclid(2);
    let mut v = base_irrep(r, t)?;
    let half = (label.n - r) / 2;
    if half != 0 {
        let a = one_dim(gl1p().var("A").pow_signed(2 * half)?);
        v = a.tensor(&v)?;
    }
    if chi != 0 {
        v = twist_chi(chi)?.tensor(&v)?;
    }
    Ok(v)
}

/// One `GL(1)`-weight of a Levi decomposition with the `GL(P)` series of the
/// weight space, head first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub n: i32,
    pub dim: usize,
    pub series: Vec<GlpLabel>,
}

impl fmt::Display for WeightSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .series
            .iter()
            .map(|l| format!("({}, {l})", self.n))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// GL(P)-comodule obtained from a Levi comodule by forgetting the `GL(1)` part.
pub fn levi_to_glp(v: &Comodule) -> Result<Comodule> {
    let levi = v.group();
    let glp = Group::new(GroupSpec::GLP)?;
    let mut s = Substitution::new()
        .with(levi.gen("A"), BraidedPoly::one())?
        .with(levi.gen("E"), glp.var("A"))?
        .with(levi.gen("F"), glp.var("B"))?;
    Comodule::new(glp, v.object().clone(), v.matrix().substitute(&mut s)?)
}

/// Weight spaces of a Levi comodule, from the highest `GL(1)`-weight down.
pub fn levi_weights(v: &Comodule) -> Result<Vec<WeightSpace>> {
    if v.spec() != LEVI {
        return Err(Error::Domain(format!("{} is not the Levi of GL(1+P)", v.spec())));
    }
    let g = v.group();
    let a = g.gen("A");
    let mut s = Substitution::new()
        .with(g.gen("E"), BraidedPoly::one())?
        .with(g.gen("F"), BraidedPoly::zero())?;
    let torus = Comodule::new(g.clone(), v.object().clone(), v.matrix().substitute(&mut s)?)?;
    let mut out = Vec::new();
    let coeffs = torus.coefficients();
    for (m, proj) in coeffs.iter().rev() {
        let n = m.exponent(a);
        let space = Subspace::span(v.dim(), proj.cols_vec());
        let sub = levi_to_glp(&v.subcomodule(&space)?)?;
        let series = composition_factors(&sub, DEFAULT_BOUND)?
            .iter()
            .map(identify_glp)
            .collect::<Result<Vec<_>>>()?;
        out.push(WeightSpace {
            n,
            dim: space.dim(),
            series,
        });
    }
    out.sort_by_key(|x| std::cmp::Reverse(x.n));
    Ok(out)
}

/// Restriction to the Levi followed by [`levi_weights`].
pub fn weight_decomposition(v: &Comodule) -> Result<Vec<WeightSpace>> {
    levi_weights(&v.restrict(LEVI)?)
}

/// Highest weight of a simple GL(1+P)-comodule: the top weight space, which
/// must be a single simple Levi factor.
pub fn gl1p_highest_weight(v: &Comodule) -> Result<Gl1pLabel> {
    let ws = weight_decomposition(v)?;
    match ws.first() {
        Some(top) if top.series.len() == 1 => Ok(Gl1pLabel::new(top.n, top.series[0])),
        _ => Err(Error::Unidentified {
            fingerprint: format!(
                "GL(1+P): dim {}, top weight space not simple: {}",
                v.dim(),
                ws.first().map_or(String::new(), ToString::to_string)
            ),
        }),
    }
}

/// Multiset of simple Levi factors.
pub type Character = BTreeMap<Gl1pLabel, usize>;

pub fn character_of(ws: &[WeightSpace]) -> Character {
    let mut c = Character::new();
    for w in ws {
        for l in &w.series {
            *c.entry(Gl1pLabel::new(w.n, *l)).or_default() += 1;
        }
    }
    c
}

pub fn character_dim(c: &Character) -> usize {
    c.iter().map(|(l, k)| l.glp.dim() * k).sum()
}

/// Cached characters and GL(P) products used to decompose tensor products
/// without forming them.
#[derive(Default)]
pub struct Gl1pCalculus {
    base: HashMap<(i32, u8), Character>,
    glp_products: HashMap<(u8, u8), Vec<GlpLabel>>,
}

impl Gl1pCalculus {
    pub fn new() -> Self {
        Self::default()
    }

    /// GL(P) composition factors of `L1 ⊗ L2`.
    pub fn glp_product(&mut self, l1: GlpLabel, l2: GlpLabel) -> Result<Vec<GlpLabel>> {
        let key = (l1.t, l2.t);
        if let Entry::Vacant(slot) = self.glp_products.entry(key) {
            let v = glp_irrep(GlpLabel::new(false, 0, l1.t)?)?
                .tensor(&glp_irrep(GlpLabel::new(false, 0, l2.t)?)?)?;
            let factors = composition_factors(&v, DEFAULT_BOUND)?
                .iter()
                .map(identify_glp)
                .collect::<Result<Vec<_>>>()?;
            slot.insert(factors);
        }
        let xi = l1.xi ^ l2.xi;
        let chi = l1.chi + l2.chi;
        self.glp_products[&key]
            .iter()
            .map(|f| GlpLabel::new(f.xi ^ xi, f.chi + chi, f.t))
            .collect()
    }

    pub fn character(&mut self, label: Gl1pLabel) -> Result<Character> {
        let GlpLabel { xi, chi, t } = label.glp;
        // L(1, ξχ) carries the ξ; the rest is a shift of a base case
        let shift = GlpLabel::new(xi, chi, 0)?;
        let r = (label.n - xi as i32).rem_euclid(2);
        let extra_n = label.n - r;
        if let Entry::Vacant(slot) = self.base.entry((r, t)) {
            let v = base_irrep(r, t)?;
            slot.insert(character_of(&weight_decomposition(&v)?));
        }
        let base = self.base[&(r, t)].clone();
        let mut out = Character::new();
        for (l, k) in base {
            let glp = GlpLabel::new(l.glp.xi ^ shift.xi, l.glp.chi + shift.chi, l.glp.t)?;
            *out.entry(Gl1pLabel::new(l.n + extra_n, glp)).or_default() += k;
        }
        Ok(out)
    }

    pub fn product(&mut self, c1: &Character, c2: &Character) -> Result<Character> {
        let mut out = Character::new();
        for (l1, k1) in c1 {
            for (l2, k2) in c2 {
                for f in self.glp_product(l1.glp, l2.glp)? {
                    *out.entry(Gl1pLabel::new(l1.n + l2.n, f)).or_default() += k1 * k2;
                }
            }
        }
        Ok(out)
    }

    /// Highest weights of the composition factors of a module with this
    /// character, found by repeatedly removing the character of the top weight.
    pub fn peel(&mut self, mut c: Character) -> Result<Character> {
        let mut out = Character::new();
        while let Some((&top, _)) = c.iter().max_by_key(|(l, _)| (l.n, **l)) {
            let ch = self.character(top)?;
            for (l, k) in ch {
                let slot = c.get_mut(&l).filter(|have| **have >= k).ok_or_else(|| {
                    Error::Contract(format!("character is not a sum of irreducibles at {l}"))
                })?;
                *slot -= k;
                if *slot == 0 {
                    c.remove(&l);
                }
            }
            *out.entry(top).or_default() += 1;
        }
        Ok(out)
    }

    /// Table 1 cell: highest weights of the composition factors of `L(w1) ⊗ L(w2)`.
    pub fn tensor_cell(&mut self, w1: Gl1pLabel, w2: Gl1pLabel) -> Result<Character> {
        let c1 = self.character(w1)?;
        let c2 = self.character(w2)?;
        let prod = self.product(&c1, &c2)?;
        self.peel(prod)
    }
}

/// Identify hook for GL(1+P).
pub fn identify_gl1p(v: &Comodule) -> Result<IrrepLabel> {
    gl1p_highest_weight(v).map(IrrepLabel::Gl1p)
}

/// Formats a character as `(n, L) + 2 (m, L')`, highest first.
pub fn format_character(c: &Character) -> String {
    let mut items: Vec<(&Gl1pLabel, &usize)> = c.iter().collect();
    items.sort_by(|a, b| (b.0.n, b.0).cmp(&(a.0.n, a.0)));
    items
        .iter()
        .map(|(l, k)| if **k == 1 { l.to_string() } else { format!("{k} {l}") })
        .collect::<Vec<_>>()
        .join(" + ")
}
