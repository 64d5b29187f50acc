use serde::Serialize;

use crate::braided::BraidedPoly;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::group::{Group, GroupSpec};

use super::core::Comodule;
use super::regular::PolySpan;

/// Default total-degree cutoff for [`skew_primitives`].
pub const DEFAULT_CUTOFF: u32 = 16;

/// Skew-primitive elements `f` with `Δ(f) = 1 ⊗ f + f ⊗ γ`, modulo the
/// coboundaries spanned by `γ + 1` and the constants.
#[derive(Clone, Debug, Serialize)]
pub struct SkewPrimitives {
    pub cutoff: u32,
    #[serde(skip)]
    pub classes: Vec<BraidedPoly>,
    #[serde(skip)]
    pub coboundaries: Vec<BraidedPoly>,
    pub candidates: usize,
}

impl SkewPrimitives {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }
}

/// Monomials `∏ g^{e_g} ∏ g'` of scalar-torus degree zero with
/// `Σ|e_g| + #primes ≤ cutoff`, in generator order.
pub fn degree_zero_monomials(group: &Group, cutoff: u32) -> Result<Vec<BraidedPoly>> {
    let gens = group.ring().gens(0);
    let cutoff = cutoff as i32;
    let mut out = Vec::new();
    let mut exps = vec![0i32; gens.len()];
    fn walk(
        gens: &[crate::braided::Gen],
        i: usize,
        used: i32,
        cutoff: i32,
        exps: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if i == gens.len() {
            out.push(exps.clone());
            return;
        }
        let lo = if gens[i].is_invertible() { -(cutoff - used) } else { 0 };
        for e in lo..=(cutoff - used) {
            exps[i] = e;
            walk(gens, i + 1, used + e.abs(), cutoff, exps, out);
        }
        exps[i] = 0;
    }
    let mut vectors = Vec::new();
    walk(&gens, 0, 0, cutoff, &mut exps, &mut vectors);
    let primable: Vec<_> = gens.iter().copied().filter(|g| !g.is_closed()).collect();
    for v in vectors {
        let used: i32 = v.iter().map(|e| e.abs()).sum();
        let deg: i32 = v.iter().sum();
        for mask in 0u32..(1 << primable.len()) {
            let np = mask.count_ones() as i32;
            if used + np > cutoff || deg + np != 0 {
                continue;
            }
            let mut m = BraidedPoly::one();
            for (g, e) in gens.iter().zip(&v) {
                if *e != 0 {
                    m = &m * &BraidedPoly::power(*g, *e)?;
                }
            }
            for (i, g) in primable.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    m = &m * &BraidedPoly::prime(*g);
                }
            }
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Solves `Δ(f) = 1 ⊗ f + f ⊗ γ` together with `f' = 0` over the monomials of total degree at most
/// `cutoff`. Only GL-type groups are supported, where every coordinate has
/// scalar-torus degree one and solutions are therefore of degree zero.
pub fn skew_primitives(group: &Group, gamma: &BraidedPoly, cutoff: u32) -> Result<SkewPrimitives> {
    if !matches!(group.spec(), GroupSpec::Gl { .. } | GroupSpec::GlClassical(_)) {
        return Err(Error::Unsupported(format!("skew-primitives over {}", group.spec())));
    }
    if gamma.homogeneous_degree() != Some(0) {
        return Err(Error::Domain("the twist must be a grouplike of degree zero".into()));
    }
    let candidates = if cutoff == 0 { Vec::new() } else { degree_zero_monomials(group, cutoff)? };
    let mut delta = group.coproduct()?;
    let g2 = gamma.retag(0, 2);
    let mut images = Vec::with_capacity(candidates.len());
    for c in &candidates {
        let lhs = delta.apply(c)?;
        // tag-0 part: `f' = 0`, needed for the extension to be d-equivariant
        let skew = &(&lhs + &c.retag(0, 2)) + &(&c.retag(0, 1) * &g2);
        images.push(&skew + &c.derive());
    }
    let solutions = kernel_combinations(&candidates, &images);
    let mut span = PolySpan::new();
    let mut coboundaries = Vec::new();
    let gm1 = gamma + &BraidedPoly::one();
    for c in [gm1, BraidedPoly::one()] {
        if !c.is_zero() && solutions_contain(&solutions, &c) && span.insert(&c) {
            coboundaries.push(c);
        }
    }
    let classes = solutions.into_iter().filter(|s| span.insert(s)).collect();
    Ok(SkewPrimitives {
        cutoff,
        classes,
        coboundaries,
        candidates: candidates.len(),
    })
}

fn solutions_contain(solutions: &[BraidedPoly], p: &BraidedPoly) -> bool {
    let mut span = PolySpan::new();
    for s in solutions {
        span.insert(s);
    }
    span.coordinates(p).is_some()
}

/// Whether `p` is a skew-primitive class that is nonzero modulo coboundaries.
pub fn is_nonzero_class(result: &SkewPrimitives, p: &BraidedPoly) -> bool {
    let mut all = PolySpan::new();
    let mut cob = PolySpan::new();
    for c in &result.coboundaries {
        all.insert(c);
        cob.insert(c);
    }
    for c in &result.classes {
        all.insert(c);
    }
    all.coordinates(p).is_some() && cob.coordinates(p).is_none()
}

/// Kernel of the linear map `candidates[j] ↦ images[j]`, as combinations of
/// the candidates.
pub(crate) fn kernel_combinations(candidates: &[BraidedPoly], images: &[BraidedPoly]) -> Vec<BraidedPoly> {
    let mut index = std::collections::BTreeMap::new();
    for r in images {
        for m in r.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut eqs = BitMatrix::zeros(index.len(), candidates.len());
    for (j, r) in images.iter().enumerate() {
        for m in r.terms() {
            eqs.set(index[m], j, true);
        }
    }
    eqs.kernel()
        .into_iter()
        .map(|v| v.ones().fold(BraidedPoly::zero(), |acc, j| &acc + &candidates[j]))
        .collect()
}

/// `Ext¹(𝟙, V)` in bounded degree: extensions `0 → V → E → 𝟙 → 0` written as
/// `ρ(e) = e ⊗ 1 + Σ v_i ⊗ c_i`, `d e = Σ δ_i v_i`.
#[derive(Clone, Debug, Serialize)]
pub struct Cohomology {
    pub cutoff: u32,
    pub cocycles: usize,
    pub coboundaries: usize,
    #[serde(skip)]
    pub classes: Vec<Vec<BraidedPoly>>,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.cocycles - self.coboundaries
    }
}

/// Solves the cocycle conditions
/// `Δ(c_i) = Σ_k M_ik ⊗ c_k + c_i ⊗ 1` and `c' = D c + (M + 1) δ`
/// with each `c_i` a combination of degree-zero monomials of total degree at
/// most `cutoff`, modulo the coboundaries `((M + 1) w, D w)`.
pub fn ext1_from_trivial(v: &Comodule, cutoff: u32) -> Result<Cohomology> {
    let group = v.group();
    if !matches!(group.spec(), GroupSpec::Gl { .. } | GroupSpec::GlClassical(_)) {
        return Err(Error::Unsupported(format!("Ext over {}", group.spec())));
    }
    let m = v.dim();
    let empty = Cohomology {
        cutoff,
        cocycles: 0,
        coboundaries: 0,
        classes: Vec::new(),
    };
    match torus_degree_of(v) {
        Some(0) => {}
        Some(_) => return Ok(empty),
        None => return Err(Error::Unsupported("Ext into a module that is not degree-homogeneous".into())),
    }
    let mut basis_span = PolySpan::new();
    for c in degree_zero_monomials(group, cutoff)? {
        basis_span.insert(&c);
    }
    let basis = basis_span.basis().to_vec();
    let nb = basis.len();
    let mut delta = group.coproduct()?;
    let mat = v.matrix();
    let left: Vec<Vec<BraidedPoly>> = (0..m)
        .map(|i| (0..m).map(|k| mat[(i, k)].retag(0, 1)).collect())
        .collect();
    // unknowns: (k, b) ↦ c_k += basis[b], then δ_k
    let n_unknowns = m * nb + m;
    let mut images: Vec<Vec<BraidedPoly>> = Vec::with_capacity(n_unknowns);
    for k in 0..m {
        for b in &basis {
            let db = delta.apply(b)?;
            let b2 = b.retag(0, 2);
            let mut img = vec![BraidedPoly::zero(); m];
            for (i, slot) in img.iter_mut().enumerate() {
                let mut p = &left[i][k] * &b2;
                if i == k {
                    p += &(&db + &b.retag(0, 1)) + &b.derive();
                }
                if v.d().get(i, k) {
                    p += b.clone();
                }
                *slot = p;
            }
            images.push(img);
        }
    }
    for k in 0..m {
        images.push(
            (0..m)
                .map(|i| if i == k { &mat[(i, k)] + &BraidedPoly::one() } else { mat[(i, k)].clone() })
                .collect(),
        );
    }
    let mut index = std::collections::BTreeMap::new();
    for img in &images {
        for (i, p) in img.iter().enumerate() {
            for t in p.terms() {
                let next = index.len();
                index.entry((i, t.clone())).or_insert(next);
            }
        }
    }
    let mut eqs = BitMatrix::zeros(index.len(), n_unknowns);
    for (j, img) in images.iter().enumerate() {
        for (i, p) in img.iter().enumerate() {
            for t in p.terms() {
                eqs.set(index[&(i, t.clone())], j, true);
            }
        }
    }
    let cocycles = eqs.kernel();
    let mut boundaries = Vec::new();
    for w in 0..m {
        let mut x = BitVec::zeros(n_unknowns);
        for i in 0..m {
            let mut c = mat[(i, w)].clone();
            if i == w {
                c += BraidedPoly::one();
            }
            let coords = basis_span.coordinates(&c).ok_or_else(|| {
                Error::Unsupported(format!("coboundary escapes degree cutoff {cutoff}"))
            })?;
            for b in coords.ones() {
                x.flip(i * nb + b);
            }
            if v.d().get(i, w) {
                x.flip(m * nb + i);
            }
        }
        boundaries.push(x);
    }
    let z = crate::gf2::Subspace::span(n_unknowns, cocycles.iter().cloned());
    let b = crate::gf2::Subspace::span(n_unknowns, boundaries);
    if !z.contains_space(&b) {
        return Err(Error::Contract("coboundaries are not cocycles".into()));
    }
    let mut acc = b.clone();
    let mut classes = Vec::new();
    for c in &cocycles {
        if acc.contains(c) {
            continue;
        }
        acc = acc.sum(&crate::gf2::Subspace::span(n_unknowns, [c.clone()]));
        let polys = (0..m)
            .map(|i| {
                (0..nb)
                    .filter(|&bi| c.get(i * nb + bi))
                    .fold(BraidedPoly::zero(), |s, bi| &s + &basis[bi])
            })
            .collect();
        classes.push(polys);
    }
    Ok(Cohomology {
        cutoff,
        cocycles: z.dim(),
        coboundaries: b.dim(),
        classes,
    })
}

/// `Ext¹(X, Y)` as `Ext¹(𝟙, Y ⊗ X*)`.
pub fn ext1(x: &Comodule, y: &Comodule, cutoff: u32) -> Result<Cohomology> {
    ext1_from_trivial(&y.tensor(&x.dual()?)?, cutoff)
}

fn torus_degree_of(v: &Comodule) -> Option<i32> {
    super::series::torus_degree(v)
}
