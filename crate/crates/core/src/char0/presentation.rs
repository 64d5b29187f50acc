use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::braided::BraidedPoly;
use crate::error::{Error, Result};
use crate::group::Group;

use super::qsqrt2::QSqrt2;
use super::superpoly::{SGen, SuperPoly};

/// Truncation of the 2-adic geometric series used for lattice units.
pub const SERIES_PRECISION: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperGen {
    pub name: String,
    pub odd: bool,
    pub invertible: bool,
}

/// Finite presentation of a supercommutative Hopf superalgebra over `ℚ(√2)`:
/// generators with parity, and `Δ` (in tags 1, 2), `ε`, `S` on generators.
#[derive(Clone, Debug)]
pub struct SuperHopfPresentation {
    pub name: String,
    pub gens: Vec<SuperGen>,
    pub coproduct: Vec<SuperPoly>,
    pub counit: Vec<QSqrt2>,
    pub antipode: Vec<SuperPoly>,
}

fn gen_at(tag: u8, i: usize, odd: bool) -> SuperPoly {
    let g = (tag, i as u16);
    if odd {
        SuperPoly::odd(g)
    } else {
        SuperPoly::even(g)
    }
}

impl SuperHopfPresentation {
    /// Generator `name` in tensor factor `tag`.
    pub fn var(&self, name: &str, tag: u8) -> Result<SuperPoly> {
        let i = self.index(name)?;
        Ok(gen_at(tag, i, self.gens[i].odd))
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::Parse(format!("unknown generator {name:?} in {}", self.name)))
    }

    fn check_gen(&self, g: SGen, odd: bool) -> Result<usize> {
        let i = g.1 as usize;
        match self.gens.get(i) {
            Some(info) if info.odd == odd => Ok(i),
            _ => Err(Error::Contract(format!("generator {g:?} does not match {}", self.name))),
        }
    }

    /// Applies `Δ` to an element of tag 0.
    pub fn apply_coproduct(&self, p: &SuperPoly) -> Result<SuperPoly> {
        p.substitute(
            &|g, odd| {
                let i = self.check_gen(g, odd)?;
                Ok(self.coproduct[i].clone())
            },
            SERIES_PRECISION,
        )
    }

    pub fn apply_counit(&self, p: &SuperPoly) -> Result<QSqrt2> {
        let v = p.substitute(
            &|g, odd| {
                let i = self.check_gen(g, odd)?;
                Ok(SuperPoly::constant(self.counit[i].clone()))
            },
            SERIES_PRECISION,
        )?;
        let value = v.terms().next().map(|(_, c)| c.clone()).unwrap_or_default();
        Ok(value)
    }

    pub fn apply_antipode(&self, p: &SuperPoly) -> Result<SuperPoly> {
        p.substitute(
            &|g, odd| {
                let i = self.check_gen(g, odd)?;
                Ok(self.antipode[i].clone())
            },
            SERIES_PRECISION,
        )
    }

    /// Coassociativity, counit and antipode axioms on every generator.
    pub fn check_axioms(&self) -> Result<()> {
        for (i, g) in self.gens.iter().enumerate() {
            let x = gen_at(0, i, g.odd);
            let dx = &self.coproduct[i];
            let shift = |p: &SuperPoly| p.retag(2, 3).retag(1, 2);
            let left = dx.substitute(
                &|h, odd| {
                    let j = self.check_gen(h, odd)?;
                    if h.0 == 1 {
                        Ok(self.coproduct[j].clone())
                    } else {
                        Ok(gen_at(3, j, odd))
                    }
                },
                SERIES_PRECISION,
            )?;
            let right = dx.substitute(
                &|h, odd| {
                    let j = self.check_gen(h, odd)?;
                    if h.0 == 1 {
                        Ok(gen_at(1, j, odd))
                    } else {
                        Ok(shift(&self.coproduct[j]))
                    }
                },
                SERIES_PRECISION,
            )?;
            if left != right {
                return Err(Error::Contract(format!("Δ is not coassociative on {}", g.name)));
            }
            for (side, keep) in [("left", 2u8), ("right", 1u8)] {
                let v = dx.substitute(
                    &|h, odd| {
                        let j = self.check_gen(h, odd)?;
                        if h.0 == keep {
                            Ok(gen_at(0, j, odd))
                        } else {
                            Ok(SuperPoly::constant(self.counit[j].clone()))
                        }
                    },
                    SERIES_PRECISION,
                )?;
                if v != x {
                    return Err(Error::Contract(format!("{side} counit law fails on {}", g.name)));
                }
            }
            let s = dx.substitute(
                &|h, odd| {
                    let j = self.check_gen(h, odd)?;
                    if h.0 == 1 {
                        Ok(self.antipode[j].clone())
                    } else {
                        Ok(gen_at(0, j, odd))
                    }
                },
                SERIES_PRECISION,
            )?;
            if s != SuperPoly::constant(self.counit[i].clone()) {
                return Err(Error::Contract(format!("antipode law fails on {}", g.name)));
            }
        }
        Ok(())
    }
}

/// `ℓ = α·g + β + γ·h` with `g` even and `h` odd generators of the
/// presentation: the shape in which the original generators are recovered
/// from `ℓ` and `ℓ' = dℓ`.
#[derive(Clone, Debug)]
struct AffineParts {
    even: Option<(usize, QSqrt2, QSqrt2)>,
    odd: Option<(usize, QSqrt2)>,
}

fn affine_parts(h: &SuperHopfPresentation, expr: &SuperPoly, name: &str) -> Result<AffineParts> {
    let bad = || Error::Unsupported(format!("lattice generator {name} is not affine in one even and one odd generator"));
    let mut even = None;
    let mut beta = QSqrt2::zero();
    let mut odd = None;
    for (m, c) in expr.terms() {
        if m.is_one() {
            beta = c.clone();
        } else if m.odd().is_empty() && m.even().len() == 1 {
            let (&g, &e) = m.even().iter().next().expect("one entry");
            if e != 1 || g.0 != 0 || even.is_some() || h.gens[g.1 as usize].odd {
                return Err(bad());
            }
            even = Some((g.1 as usize, c.clone()));
        } else if m.even().is_empty() && m.odd().len() == 1 {
            let g = m.odd()[0];
            if g.0 != 0 || odd.is_some() {
                return Err(bad());
            }
            odd = Some((g.1 as usize, c.clone()));
        } else {
            return Err(bad());
        }
    }
    Ok(AffineParts {
        even: even.map(|(i, a)| (i, a, beta)),
        odd,
    })
}

/// An `O`-lattice `O[ℓ_i, ℓ_i']` spanned by ordered monomials
/// `∏ ℓ_i^{a_i} ℓ_i'^{ε_i}`, where `ℓ_i' = dℓ_i`.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub names: Vec<String>,
    pub prime_names: Vec<String>,
    exprs: Vec<SuperPoly>,
    parts: Vec<AffineParts>,
}

/// Exponents `(a, ε)` of `ℓ_i^a ℓ_i'^ε` for each `(tag, i)`, in order.
pub type LatticeMonomial = BTreeMap<SGen, (i32, bool)>;

type LatticePoly = BTreeMap<LatticeMonomial, QSqrt2>;

impl Lattice {
    /// Elements of the lattice, each either a new generator `ℓ` or `dℓ` of an
    /// earlier one (which then names `ℓ'`).
    pub fn new(h: &SuperHopfPresentation, elements: &[(&str, SuperPoly)]) -> Result<Lattice> {
        let mut names = Vec::new();
        let mut prime_names: Vec<Option<String>> = Vec::new();
        let mut exprs: Vec<SuperPoly> = Vec::new();
        let mut parts = Vec::new();
        for (name, expr) in elements {
            if let Some(j) = exprs.iter().position(|e| &e.d() == expr) {
                prime_names[j] = Some(name.to_string());
                continue;
            }
            parts.push(affine_parts(h, expr, name)?);
            names.push(name.to_string());
            prime_names.push(None);
            exprs.push(expr.clone());
        }
        let mut seen = BTreeSet::new();
        for p in &parts {
            let gs = p.even.iter().map(|e| (e.0, false)).chain(p.odd.iter().map(|o| (o.0, true)));
            for g in gs {
                if !seen.insert(g.0) {
                    return Err(Error::Unsupported(format!("{} appears in two lattice generators", h.gens[g.0].name)));
                }
            }
        }
        if seen.len() != h.gens.len() {
            return Err(Error::Unsupported("lattice does not generate the algebra".into()));
        }
        let prime_names = prime_names
            .into_iter()
            .zip(&names)
            .map(|(p, n)| p.unwrap_or_else(|| format!("{n}'")))
            .collect();
        Ok(Lattice {
            names,
            prime_names,
            exprs,
            parts,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// `ℓ_i` (or `ℓ_i'`) in the original generators.
    pub fn element(&self, i: usize, prime: bool) -> SuperPoly {
        if prime {
            self.exprs[i].d()
        } else {
            self.exprs[i].clone()
        }
    }

    /// Original generator `k` in terms of the even and odd parts `e_i`, `o_i`
    /// of the lattice generators (stored at indices `i` with parity).
    fn original_in_parts(&self, k: usize, tag: u8) -> Result<SuperPoly> {
        for (i, p) in self.parts.iter().enumerate() {
            if let Some((g, alpha, beta)) = &p.even {
                if *g == k {
                    let e = SuperPoly::even((tag, i as u16));
                    let shifted = e.sub(&SuperPoly::constant(beta.clone()));
                    return Ok(shifted.scale(&alpha.inverse()?));
                }
            }
            if let Some((g, gamma)) = &p.odd {
                if *g == k {
                    return Ok(SuperPoly::odd((tag, i as u16)).scale(&gamma.inverse()?));
                }
            }
        }
        Err(Error::Contract(format!("generator {k} is not covered by the lattice")))
    }

    /// Coordinates in the ordered-monomial basis of the lattice.
    fn coordinates(&self, p: &SuperPoly) -> Result<LatticePoly> {
        let parts = p.substitute(
            &|g, _| self.original_in_parts(g.1 as usize, g.0),
            SERIES_PRECISION,
        )?;
        let root2_inv = QSqrt2::sqrt2_pow(-1);
        let mut out: LatticePoly = BTreeMap::new();
        for (m, c) in parts.terms() {
            // e^a o = ℓ^a ℓ' / √2 and e^a = ℓ^a − (a/√2) ℓ^{a−1} ℓ'
            let mut keys: BTreeSet<SGen> = m.even().keys().copied().collect();
            keys.extend(m.odd().iter().copied());
            let mut acc: Vec<(LatticeMonomial, QSqrt2)> = vec![(BTreeMap::new(), c.clone())];
            for key in keys {
                let a = m.even().get(&key).copied().unwrap_or(0);
                let factor: Vec<((i32, bool), QSqrt2)> = if m.odd().contains(&key) {
                    vec![((a, true), root2_inv.clone())]
                } else {
                    vec![
                        ((a, false), QSqrt2::one()),
                        ((a - 1, true), &QSqrt2::from(-(a as i64)) * &root2_inv),
                    ]
                };
                let mut next = Vec::new();
                for (lm, lc) in &acc {
                    for (exp, fc) in &factor {
                        let mut lm = lm.clone();
                        lm.insert(key, *exp);
                        next.push((lm, lc * fc));
                    }
                }
                acc = next;
            }
            for (lm, lc) in acc {
                let lm: LatticeMonomial = lm.into_iter().filter(|(_, e)| *e != (0, false)).collect();
                let slot = out.entry(lm.clone()).or_default();
                *slot = &*slot + &lc;
                if slot.is_zero() {
                    out.remove(&lm);
                }
            }
        }
        Ok(out)
    }
}

/// A polynomial over `F₂` in the ordered lattice monomials.
pub type ReducedPoly = BTreeSet<LatticeMonomial>;

fn reduce(poly: &LatticePoly, what: &str, names: &[String]) -> Result<ReducedPoly> {
    let mut out = BTreeSet::new();
    for (m, c) in poly {
        match c.valuation() {
            Some(v) if v < 0 => {
                return Err(Error::LatticeNotIntegral(format!(
                    "{what}: coefficient {c} of {} has valuation {v}",
                    format_monomial(m, names, &[], m.keys().map(|g| g.0).max().unwrap_or(0))
                )));
            }
            _ => {}
        }
        if c.residue()? {
            out.insert(m.clone());
        }
    }
    Ok(out)
}

fn format_monomial(m: &LatticeMonomial, names: &[String], primes: &[String], rank: u8) -> String {
    let max_tag = rank;
    let part = |tag: u8| -> String {
        let mut s = Vec::new();
        for (g, &(a, p)) in m.iter().filter(|(g, _)| g.0 == tag) {
            let n = &names[g.1 as usize];
            match a {
                0 => {}
                1 => s.push(n.clone()),
                a => s.push(format!("{n}^{a}")),
            }
            if p {
                s.push(primes.get(g.1 as usize).cloned().unwrap_or_else(|| format!("{n}'")));
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s.join("")
        }
    };
    if max_tag == 0 {
        part(0)
    } else {
        (1..=max_tag).map(part).collect::<Vec<_>>().join("⊗")
    }
}

/// A Hopf algebra over `F₂` given by reduced structure maps on the lattice
/// generators `ℓ_i` and `ℓ_i'`.
#[derive(Clone, Debug, Serialize)]
pub struct ReducedPresentation {
    pub name: String,
    pub generators: Vec<String>,
    pub primes: Vec<String>,
    #[serde(skip)]
    pub coproduct: Vec<[ReducedPoly; 2]>,
    #[serde(skip)]
    pub counit: Vec<[bool; 2]>,
    #[serde(skip)]
    pub antipode: Vec<[ReducedPoly; 2]>,
    #[serde(skip)]
    pub d: Vec<[ReducedPoly; 2]>,
}

impl ReducedPresentation {
    pub fn format(&self, p: &ReducedPoly) -> String {
        if p.is_empty() {
            return "0".into();
        }
        let rank = p.iter().flat_map(|m| m.keys().map(|g| g.0)).max().unwrap_or(0);
        p.iter()
            .map(|m| format_monomial(m, &self.generators, &self.primes, rank))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Lines `Δ(x) = …`, `ε(x) = …`, `S(x) = …`, `d(x) = …`.
    pub fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.generators.len() {
            for (k, name) in [&self.generators[i], &self.primes[i]].into_iter().enumerate() {
                out.push(format!("Δ({name}) = {}", self.format(&self.coproduct[i][k])));
                out.push(format!("ε({name}) = {}", u8::from(self.counit[i][k])));
                out.push(format!("S({name}) = {}", self.format(&self.antipode[i][k])));
                out.push(format!("d({name}) = {}", self.format(&self.d[i][k])));
            }
        }
        out
    }
}

impl fmt::Display for ReducedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "reduction of {}:", self.name)?;
        for line in self.describe() {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Rewrites `Δ`, `ε`, `S` and `d` of the lattice generators in the ordered
/// lattice basis and reduces every coefficient modulo `√2`.
pub fn change_basis_and_reduce(h: &SuperHopfPresentation, lattice: &Lattice) -> Result<ReducedPresentation> {
    let n = lattice.len();
    let all_names: Vec<String> = lattice.names.clone();
    let mut coproduct = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    let mut d = Vec::with_capacity(n);
    for i in 0..n {
        let mut cop: [ReducedPoly; 2] = Default::default();
        let mut cou = [false; 2];
        let mut ant: [ReducedPoly; 2] = Default::default();
        let mut der: [ReducedPoly; 2] = Default::default();
        for (k, prime) in [false, true].into_iter().enumerate() {
            let x = lattice.element(i, prime);
            let label = if prime { &lattice.prime_names[i] } else { &lattice.names[i] };
            cop[k] = reduce(&lattice.coordinates(&h.apply_coproduct(&x)?)?, &format!("Δ({label})"), &all_names)?;
            let e = h.apply_counit(&x)?;
            if e.valuation().is_some_and(|v| v < 0) {
                return Err(Error::LatticeNotIntegral(format!("ε({label}) = {e}")));
            }
            cou[k] = e.residue()?;
            ant[k] = reduce(&lattice.coordinates(&h.apply_antipode(&x)?)?, &format!("S({label})"), &all_names)?;
            der[k] = reduce(&lattice.coordinates(&x.d())?, &format!("d({label})"), &all_names)?;
        }
        coproduct.push(cop);
        counit.push(cou);
        antipode.push(ant);
        d.push(der);
    }
    Ok(ReducedPresentation {
        name: h.name.clone(),
        generators: lattice.names.clone(),
        primes: lattice.prime_names.clone(),
        coproduct,
        counit,
        antipode,
        d,
    })
}

/// Outcome of [`compare_presentations`].
#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn to_braided(m: &ReducedPoly, images: &[BraidedPoly]) -> Result<BraidedPoly> {
    let mut out = BraidedPoly::zero();
    for mono in m {
        let mut acc = BraidedPoly::one();
        for (g, &(a, p)) in mono {
            let img = images[g.1 as usize].retag(0, g.0);
            acc = &acc * &img.pow_signed(a)?;
            if p {
                acc = &acc * &img.derive();
            }
        }
        out += acc;
    }
    Ok(out)
}

/// Compares the reduced structure maps with those of a group scheme over
/// `F₂`, after sending each lattice generator to the given element.
pub fn compare_presentations(reduced: &ReducedPresentation, target: &Group, identification: &[&str]) -> Result<Comparison> {
    if identification.len() != reduced.generators.len() {
        return Err(Error::Domain(format!(
            "{} lattice generators but {} images",
            reduced.generators.len(),
            identification.len()
        )));
    }
    let images = identification
        .iter()
        .map(|s| target.parse(s))
        .collect::<Result<Vec<_>>>()?;
    let mut delta = target.coproduct()?;
    let mut eps = target.counit();
    let mut s = target.antipode()?;
    let mut mismatches = Vec::new();
    let mut checked = 0;
    let ring = target.ring();
    for (i, img) in images.iter().enumerate() {
        for (k, x) in [img.clone(), img.derive()].into_iter().enumerate() {
            let name = if k == 0 { &reduced.generators[i] } else { &reduced.primes[i] };
            let pairs = [
                ("Δ", to_braided(&reduced.coproduct[i][k], &images)?, delta.apply(&x)?),
                (
                    "ε",
                    if reduced.counit[i][k] { BraidedPoly::one() } else { BraidedPoly::zero() },
                    eps.apply(&x)?,
                ),
                ("S", to_braided(&reduced.antipode[i][k], &images)?, s.apply(&x)?),
                ("d", to_braided(&reduced.d[i][k], &images)?, x.derive()),
            ];
            for (map, got, want) in pairs {
                checked += 1;
                if got != want {
                    mismatches.push(format!(
                        "{map}({name}): reduced {} but target {}",
                        got.to_string_with(ring),
                        want.to_string_with(ring)
                    ));
                }
            }
        }
    }
    Ok(Comparison { checked, mismatches })
}
