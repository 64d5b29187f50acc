use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use smallvec::SmallVec;

use super::gens::{Gen, GeneratorSet};
use crate::error::{Error, Result};

/// A normal-form monomial: base factors in generator order, then a square-free
/// set of primed generators. Primes are central so their position is irrelevant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    base: SmallVec<[(Gen, i32); 4]>,
    primes: SmallVec<[Gen; 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(g: Gen) -> Self {
        Self::power(g, 1).expect("positive power")
    }

    pub fn power(g: Gen, exp: i32) -> Result<Self> {
        if exp < 0 && !g.is_invertible() {
            return Err(Error::Domain(format!(
                "negative exponent {exp} on non-invertible generator {g:?}"
            )));
        }
        let mut m = Self::one();
        if exp != 0 {
            m.base.push((g, exp));
        }
        Ok(m)
    }

    /// The primed generator `g'`, or `None` when `d g = 0`.
    pub fn prime(g: Gen) -> Option<Self> {
        if g.is_closed() {
            return None;
        }
        let mut m = Self::one();
        m.primes.push(g);
        Some(m)
    }

    pub fn base(&self) -> &[(Gen, i32)] {
        &self.base
    }

    pub fn primes(&self) -> &[Gen] {
        &self.primes
    }

    pub fn is_one(&self) -> bool {
        self.base.is_empty() && self.primes.is_empty()
    }

    pub fn exponent(&self, g: Gen) -> i32 {
        self.base
            .iter()
            .find(|(h, _)| *h == g)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn has_prime(&self, g: Gen) -> bool {
        self.primes.binary_search(&g).is_ok()
    }

    /// Sum of exponents and prime count; the grading in which every generator
    /// and every prime has weight one.
    pub fn degree(&self) -> i32 {
        self.base.iter().map(|(_, e)| e).sum::<i32>() + self.primes.len() as i32
    }

    /// Multiplies in a central prime. Returns `false` (and leaves `self` in an
    /// unspecified state) when the product vanishes.
    fn push_prime(&mut self, g: Gen) -> bool {
        if g.is_closed() {
            return false;
        }
        match self.primes.binary_search(&g) {
            Ok(_) => false,
            Err(pos) => {
                self.primes.insert(pos, g);
                true
            }
        }
    }

    fn add_exponent(&mut self, g: Gen, exp: i32) {
        match self.base.binary_search_by(|(h, _)| h.cmp(&g)) {
            Ok(pos) => {
                self.base[pos].1 += exp;
                if self.base[pos].1 == 0 {
                    self.base.remove(pos);
                }
            }
            Err(pos) => {
                if exp != 0 {
                    self.base.insert(pos, (g, exp));
                }
            }
        }
    }

    pub fn all_gens(&self) -> impl Iterator<Item = Gen> + '_ {
        self.base
            .iter()
            .map(|(g, _)| *g)
            .chain(self.primes.iter().copied())
    }

    fn map_gens(&self, f: &impl Fn(Gen) -> Gen) -> Monomial {
        let mut base: SmallVec<[(Gen, i32); 4]> = self.base.iter().map(|(g, e)| (f(*g), *e)).collect();
        base.sort();
        let mut primes: SmallVec<[Gen; 4]> = self.primes.iter().map(|g| f(*g)).collect();
        primes.sort();
        Monomial { base, primes }
    }

    /// Splits into the factors with tag `<= tag` and `> tag`; the product of the
    /// two (left first) is `self` exactly.
    pub fn split_at_tag(&self, tag: u8) -> (Monomial, Monomial) {
        let mut left = Monomial::one();
        let mut right = Monomial::one();
        for &(g, e) in &self.base {
            if g.tag() <= tag {
                left.base.push((g, e));
            } else {
                right.base.push((g, e));
            }
        }
        for &g in &self.primes {
            if g.tag() <= tag {
                left.primes.push(g);
            } else {
                right.primes.push(g);
            }
        }
        (left, right)
    }

    pub fn display<'a>(&'a self, set: &'a GeneratorSet) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, set }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (g, e) in &self.base {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{g:?}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        for g in &self.primes {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{g:?}'")?;
        }
        Ok(())
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    set: &'a GeneratorSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (g, e) in &self.mono.base {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.set.name_of(*g))?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        for g in &self.mono.primes {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}'", self.set.name_of(*g))?;
        }
        Ok(())
    }
}

/// An element of a braided-commutative coordinate ring over F2, stored as the
/// set of its normal-form monomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BraidedPoly {
    terms: BTreeSet<Monomial>,
}

impl BraidedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Monomial::one())
    }

    pub fn var(g: Gen) -> Self {
        Self::from(Monomial::var(g))
    }

    pub fn power(g: Gen, exp: i32) -> Result<Self> {
        Ok(Self::from(Monomial::power(g, exp)?))
    }

    /// `g'`, which is zero for closed generators.
    pub fn prime(g: Gen) -> Self {
        Monomial::prime(g).map(Self::from).unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().unwrap().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    /// The largest monomial in the term order.
    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.iter().next_back()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Adds a monomial; over F2 an existing copy cancels.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn derive(&self) -> BraidedPoly {
        let mut out = BraidedPoly::zero();
        for m in &self.terms {
            derive_monomial_into(m, &mut out);
        }
        out
    }

    /// The terms free of primes; the remaining terms are nilpotent.
    pub fn reduced_part(&self) -> BraidedPoly {
        self.terms
            .iter()
            .filter(|m| m.primes.is_empty())
            .cloned()
            .collect()
    }

    pub fn pow(&self, exp: u32) -> BraidedPoly {
        let mut result = BraidedPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Two-sided inverse of a unit.
    ///
    /// A unit here is `u0 + r` with `u0` a single prime-free monomial in
    /// invertible generators and every term of `r` carrying a prime, so `r` is
    /// nilpotent and the geometric series terminates.
    pub fn inverse(&self) -> Result<BraidedPoly> {
        let reduced = self.reduced_part();
        if reduced.len() != 1 {
            return Err(Error::Domain(format!("not a unit: {self:?}")));
        }
        let lead = reduced.terms.iter().next().unwrap().clone();
        if lead.base.iter().any(|(g, _)| !g.is_invertible()) {
            return Err(Error::Domain(format!("not a unit: {self:?}")));
        }
        let lead_inv = monomial_inverse(&lead);
        let mut rest = self.clone();
        rest.toggle(lead);
        // self = lead * (1 + w) with w = lead^{-1} * rest
        let w = &lead_inv * &rest;
        let mut series = BraidedPoly::one();
        let mut power = BraidedPoly::one();
        loop {
            power = &power * &w;
            if power.is_zero() {
                break;
            }
            series += &power;
        }
        Ok(&series * &lead_inv)
    }

    pub fn pow_signed(&self, exp: i32) -> Result<BraidedPoly> {
        if exp >= 0 {
            Ok(self.pow(exp as u32))
        } else {
            Ok(self.inverse()?.pow(exp.unsigned_abs()))
        }
    }

    /// Applies `f` to every generator, re-normalizing. `f` must preserve the
    /// invertible/closed flags and be injective.
    pub fn map_gens(&self, f: impl Fn(Gen) -> Gen) -> BraidedPoly {
        let mut out = BraidedPoly::zero();
        let monos: Vec<Monomial> = self.terms.iter().map(|m| m.map_gens(&f)).collect();
        let order_preserved = self
            .terms
            .iter()
            .zip(&monos)
            .all(|(a, b)| b.base.iter().map(|x| x.0).eq(a.base.iter().map(|x| f(x.0))));
        if order_preserved {
            for m in monos {
                out.toggle(m);
            }
            return out;
        }
        // reordering may create braiding corrections: rebuild factor by factor
        for m in &self.terms {
            let mut acc = BraidedPoly::one();
            for &(g, e) in &m.base {
                acc = &acc * &BraidedPoly::power(f(g), e).expect("flags preserved");
            }
            for &g in &m.primes {
                acc = &acc * &BraidedPoly::prime(f(g));
            }
            out += &acc;
        }
        out
    }

    pub fn retag(&self, from: u8, to: u8) -> BraidedPoly {
        self.map_gens(|g| if g.tag() == from { g.with_tag(to) } else { g })
    }

    pub fn gens(&self) -> BTreeSet<Gen> {
        self.terms.iter().flat_map(|m| m.all_gens()).collect()
    }

    /// Total degree when it is the same for every term.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut it = self.terms.iter().map(|m| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn display<'a>(&'a self, set: &'a GeneratorSet) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, set }
    }

    pub fn to_string_with(&self, set: &GeneratorSet) -> String {
        self.display(set).to_string()
    }
}

fn monomial_inverse(m: &Monomial) -> BraidedPoly {
    let mut acc = BraidedPoly::one();
    for &(g, e) in m.base.iter().rev() {
        acc = &acc * &BraidedPoly::from(Monomial {
            base: smallvec::smallvec![(g, -e)],
            primes: SmallVec::new(),
        });
    }
    acc
}

fn derive_monomial_into(m: &Monomial, out: &mut BraidedPoly) {
    for (i, &(g, e)) in m.base.iter().enumerate() {
        if e.rem_euclid(2) == 0 || g.is_closed() || m.has_prime(g) {
            continue;
        }
        let mut t = m.clone();
        t.base[i].1 -= 1;
        if t.base[i].1 == 0 {
            t.base.remove(i);
        }
        if t.push_prime(g) {
            out.toggle(t);
        }
    }
}

/// `t * y^j` in normal form.
///
/// Moving `y^j` left past the suffix `S` of factors ordered after `y` uses
/// `S y^j = y^j S + S' (y^j)'`; the correction term already carries `y'`, so the
/// recursion on `y^{j-1}` terminates.
fn mul_block(t: &Monomial, y: Gen, j: i32, out: &mut BraidedPoly) {
    let split = t.base.partition_point(|(g, _)| *g <= y);
    let mut main = t.clone();
    main.add_exponent(y, j);
    out.toggle(main);
    if split == t.base.len() || j.rem_euclid(2) == 0 || y.is_closed() || t.has_prime(y) {
        return;
    }
    for i in split..t.base.len() {
        let (x, a) = t.base[i];
        if a.rem_euclid(2) == 0 || x.is_closed() || t.has_prime(x) {
            continue;
        }
        let mut s = t.clone();
        s.base[i].1 -= 1;
        if s.base[i].1 == 0 {
            s.base.remove(i);
        }
        if !s.push_prime(x) {
            continue;
        }
        let mut partial = BraidedPoly::zero();
        if j - 1 == 0 {
            partial.toggle(s);
        } else {
            mul_block(&s, y, j - 1, &mut partial);
        }
        for mut m in partial.terms {
            if m.push_prime(y) {
                out.toggle(m);
            }
        }
    }
}

pub fn mul_monomials(a: &Monomial, b: &Monomial) -> BraidedPoly {
    let mut acc = BraidedPoly::from(a.clone());
    for &(y, j) in &b.base {
        let mut next = BraidedPoly::zero();
        for t in &acc.terms {
            mul_block(t, y, j, &mut next);
        }
        acc = next;
    }
    if b.primes.is_empty() {
        return acc;
    }
    let mut out = BraidedPoly::zero();
    for mut t in acc.terms {
        if b.primes.iter().all(|&p| t.push_prime(p)) {
            out.toggle(t);
        }
    }
    out
}

impl From<Monomial> for BraidedPoly {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        BraidedPoly { terms }
    }
}

impl FromIterator<Monomial> for BraidedPoly {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut p = BraidedPoly::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }
}

impl AddAssign<&BraidedPoly> for BraidedPoly {
    fn add_assign(&mut self, rhs: &BraidedPoly) {
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl AddAssign<BraidedPoly> for BraidedPoly {
    fn add_assign(&mut self, rhs: BraidedPoly) {
        for m in rhs.terms {
            self.toggle(m);
        }
    }
}

impl Add<&BraidedPoly> for &BraidedPoly {
    type Output = BraidedPoly;
    fn add(self, rhs: &BraidedPoly) -> BraidedPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BraidedPoly {
    type Output = BraidedPoly;
    fn add(mut self, rhs: BraidedPoly) -> BraidedPoly {
        self += rhs;
        self
    }
}

impl Mul<&BraidedPoly> for &BraidedPoly {
    type Output = BraidedPoly;
    fn mul(self, rhs: &BraidedPoly) -> BraidedPoly {
        let mut out = BraidedPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        for a in &self.terms {
            for b in &rhs.terms {
                out += mul_monomials(a, b);
            }
        }
        out
    }
}

impl Mul for BraidedPoly {
    type Output = BraidedPoly;
    fn mul(self, rhs: BraidedPoly) -> BraidedPoly {
        &self * &rhs
    }
}

impl fmt::Debug for BraidedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m:?}")?;
        }
        Ok(())
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a BraidedPoly,
    set: &'a GeneratorSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.poly.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", m.display(self.set))?;
        }
        Ok(())
    }
}

/// The image of generators under a d-algebra map. Primed generators are sent
/// to the derivative of the image of their base generator.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    images: HashMap<Gen, BraidedPoly>,
    powers: HashMap<(Gen, i32), BraidedPoly>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Binds `g ↦ image`. Closed generators must go to d-closed elements.
    pub fn bind(&mut self, g: Gen, image: BraidedPoly) -> Result<()> {
        if g.is_closed() && !image.derive().is_zero() {
            return Err(Error::Contract(format!(
                "closed generator {g:?} bound to {image:?}, whose derivative is nonzero"
            )));
        }
        if g.is_invertible() && image.inverse().is_err() {
            return Err(Error::Domain(format!(
                "invertible generator {g:?} bound to the non-unit {image:?}"
            )));
        }
        self.powers.clear();
        self.images.insert(g, image);
        Ok(())
    }

    pub fn with(mut self, g: Gen, image: BraidedPoly) -> Result<Self> {
        self.bind(g, image)?;
        Ok(self)
    }

    /// Checks an explicitly supplied image for `g'` against `d(image(g))`.
    pub fn check_prime_binding(&self, g: Gen, prime_image: &BraidedPoly) -> Result<()> {
        let expected = self
            .images
            .get(&g)
            .map(|p| p.derive())
            .unwrap_or_else(|| BraidedPoly::prime(g));
        if &expected != prime_image {
            return Err(Error::Contract(format!(
                "binding of {g:?}' is not the derivative of the binding of {g:?}"
            )));
        }
        Ok(())
    }

    pub fn image(&self, g: Gen) -> BraidedPoly {
        self.images
            .get(&g)
            .cloned()
            .unwrap_or_else(|| BraidedPoly::var(g))
    }

    fn power(&mut self, g: Gen, exp: i32) -> Result<BraidedPoly> {
        if let Some(p) = self.powers.get(&(g, exp)) {
            return Ok(p.clone());
        }
        let value = match self.images.get(&g) {
            None => BraidedPoly::power(g, exp)?,
            Some(img) => img.pow_signed(exp).map_err(|_| {
                Error::Domain(format!("invertible generator {g:?} bound to a non-unit"))
            })?,
        };
        self.powers.insert((g, exp), value.clone());
        Ok(value)
    }

    pub fn apply(&mut self, p: &BraidedPoly) -> Result<BraidedPoly> {
        let mut out = BraidedPoly::zero();
        let mut prime_cache: HashMap<Gen, BraidedPoly> = HashMap::new();
        for m in p.terms() {
            let mut acc = BraidedPoly::one();
            for &(g, e) in m.base() {
                let f = self.power(g, e)?;
                acc = &acc * &f;
                if acc.is_zero() {
                    break;
                }
            }
            for &g in m.primes() {
                if acc.is_zero() {
                    break;
                }
                let dp = prime_cache
                    .entry(g)
                    .or_insert_with(|| match self.images.get(&g) {
                        Some(img) => img.derive(),
                        None => BraidedPoly::prime(g),
                    })
                    .clone();
                acc = &acc * &dp;
            }
            out += acc;
        }
        Ok(out)
    }
}

/// Splits an element of a two-tag ring into `Σ left_i ⊗ right_i`, grouped by
/// the monomial on the right (tags `> tag`).
pub fn split_by_tag(p: &BraidedPoly, tag: u8) -> Vec<(Monomial, BraidedPoly)> {
    let mut groups: std::collections::BTreeMap<Monomial, BraidedPoly> = Default::default();
    for m in p.terms() {
        let (l, r) = m.split_at_tag(tag);
        groups.entry(r).or_default().toggle(l);
    }
    groups.into_iter().collect()
}
