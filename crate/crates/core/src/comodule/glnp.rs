use std::fmt;

use serde::Serialize;

use crate::braided::{BraidedPoly, PolyMatrix};
use crate::error::{Error, Result};
use crate::gf2::Subspace;
use crate::group::{gl_assemble, GlBlocks, Group, GroupSpec};

use super::core::Comodule;
use super::label::GlpLabel;
use super::regular::regular_subcomodule;
use super::series::{composition_factors, identify_glp, DEFAULT_BOUND};

/// Largest generated module accepted by [`glnp_highest_weight_module`].
pub const GENERATED_LIMIT: usize = 48;

/// Top piece of the grading induced by a cocharacter of the standard torus.
#[derive(Clone, Debug)]
pub struct HighestWeight {
    pub degree: i32,
    pub dim: usize,
    /// The top piece restricted to each diagonal block, in order: `G_m` for
    /// the `𝟙` blocks, `GL(P)` for the `P` blocks.
    pub blocks: Vec<Comodule>,
    /// The top piece over `GL(m) × GL(nP)` when the cocharacter is constant
    /// on both kinds of block.
    pub levi: Option<Comodule>,
}

fn gl_shape(spec: GroupSpec) -> Result<(usize, usize)> {
    match spec {
        GroupSpec::Gl { m, n } => Ok((m, n)),
        other => Err(Error::Unsupported(format!("no standard torus for {other}"))),
    }
}

fn diagonal(n: usize, f: impl Fn(usize) -> BraidedPoly) -> PolyMatrix {
    PolyMatrix::from_fn(n, n, |i, j| if i == j { f(i) } else { BraidedPoly::zero() })
}

fn block_point(m: usize, n: usize, f: PolyMatrix, d: PolyMatrix, e: PolyMatrix) -> PolyMatrix {
    gl_assemble(
        &GlBlocks {
            f,
            b: PolyMatrix::zeros(n, m),
            c: PolyMatrix::zeros(m, n),
            d,
            e,
        },
        m,
        n,
    )
}

fn torus_point(m: usize, n: usize, weights: &[i32], t: &BraidedPoly) -> Result<PolyMatrix> {
    let powers = weights
        .iter()
        .map(|&w| t.pow_signed(w))
        .collect::<Result<Vec<_>>>()?;
    Ok(block_point(
        m,
        n,
        diagonal(m, |i| powers[i].clone()),
        diagonal(n, |i| powers[m + i].clone()),
        PolyMatrix::zeros(n, n),
    ))
}

/// Embedding of the `k`-th diagonal factor (`G_m` for `k < m`, else `GL(P)`).
fn factor_embedding(m: usize, n: usize, k: usize) -> Result<(Group, PolyMatrix)> {
    if k < m {
        let g = Group::new(GroupSpec::Gm)?;
        let t = g.var("T");
        let point = block_point(
            m,
            n,
            diagonal(m, |i| if i == k { t.clone() } else { BraidedPoly::one() }),
            PolyMatrix::identity(n),
            PolyMatrix::zeros(n, n),
        );
        Ok((g, point))
    } else {
        let g = Group::new(GroupSpec::GLP)?;
        let j = k - m;
        let (a, b) = (g.var("A"), g.var("B"));
        let point = block_point(
            m,
            n,
            PolyMatrix::identity(m),
            diagonal(n, |i| if i == j { a.clone() } else { BraidedPoly::one() }),
            diagonal(n, |i| if i == j { b.clone() } else { BraidedPoly::zero() }),
        );
        Ok((g, point))
    }
}

/// Weight spaces of `v` under the cocharacter, highest first.
pub fn torus_weights(v: &Comodule, cocharacter: &[i32]) -> Result<Vec<(i32, Subspace)>> {
    let (m, n) = gl_shape(v.spec())?;
    if cocharacter.len() != m + n {
        return Err(Error::Domain(format!(
            "cocharacter has {} entries, {} needs {}",
            cocharacter.len(),
            v.spec(),
            m + n
        )));
    }
    let gm = Group::new(GroupSpec::Gm)?;
    let t = gm.var("T");
    let graded = v.pullback(&gm, &torus_point(m, n, cocharacter, &t)?)?;
    let tgen = gm.gen("T");
    let mut out: Vec<(i32, Subspace)> = graded
        .coefficients()
        .iter()
        .map(|(w, proj)| (w.exponent(tgen), Subspace::span(v.dim(), proj.cols_vec())))
        .collect();
    out.sort_by_key(|x| std::cmp::Reverse(x.0));
    Ok(out)
}

/// The top graded piece of `v` for a cocharacter of the standard torus of
/// `GL(m𝟙 + nP)`, given by one weight per diagonal block.
pub fn highest_weight(v: &Comodule, cocharacter: &[i32]) -> Result<HighestWeight> {
    let (m, n) = gl_shape(v.spec())?;
    let weights = torus_weights(v, cocharacter)?;
    let (degree, top) = weights
        .into_iter()
        .next()
        .ok_or_else(|| Error::Domain("the zero comodule has no weights".into()))?;
    let blocks = (0..m + n)
        .map(|k| {
            let (g, point) = factor_embedding(m, n, k)?;
            v.pullback(&g, &point)?.subcomodule(&top)
        })
        .collect::<Result<Vec<_>>>()?;
    let constant = |ws: &[i32]| ws.windows(2).all(|p| p[0] == p[1]);
    let levi = if constant(&cocharacter[..m]) && constant(&cocharacter[m..]) {
        Some(v.restrict(GroupSpec::Levi { m, n })?.subcomodule(&top)?)
    } else {
        None
    };
    Ok(HighestWeight {
        degree,
        dim: top.dim(),
        blocks,
        levi,
    })
}

/// The tuple of `GL(P)` labels carried by the top piece of a `GL(nP)`
/// comodule under the cocharacter `(n−1, …, 1, 0)`.
pub fn glnp_highest_weight(v: &Comodule) -> Result<Vec<GlpLabel>> {
    let (m, n) = gl_shape(v.spec())?;
    if m != 0 {
        return Err(Error::Unsupported(format!("{} is not GL(nP)", v.spec())));
    }
    let cocharacter: Vec<i32> = (0..n as i32).rev().collect();
    let hw = highest_weight(v, &cocharacter)?;
    hw.blocks
        .iter()
        .map(|b| {
            let labels = composition_factors(b, DEFAULT_BOUND)?
                .iter()
                .map(identify_glp)
                .collect::<Result<Vec<_>>>()?;
            match labels.split_first() {
                Some((first, rest)) if rest.iter().all(|l| l == first) => Ok(*first),
                _ => Err(Error::Unidentified {
                    fingerprint: format!("top piece of dim {} is not isotypic on a block", hw.dim),
                }),
            }
        })
        .collect()
}

/// `p_λ(x)`: `x^λ` for `λ ≡ 0, 1 (mod 4)`, else `x^λ + x^{λ−1}x'`.
pub fn p_poly(degree: i32, x: &BraidedPoly) -> Result<BraidedPoly> {
    let lead = x.pow_signed(degree)?;
    if matches!(degree.rem_euclid(4), 0 | 1) {
        Ok(lead)
    } else {
        Ok(&lead + &(&x.pow_signed(degree - 1)? * &x.derive()))
    }
}

fn diagonal_names(n: usize, i: usize) -> (String, String) {
    if n == 1 {
        ("A".into(), "B".into())
    } else {
        (format!("D{0}{0}", i + 1), format!("E{0}{0}", i + 1))
    }
}

/// Leading term `∏ p_{λ_i}(D_ii)` of the invariant function of `L(λ)`,
/// times `1 + (BA⁻¹)'` for a `ξ`-twisted label when `n = 1`.
pub fn glnp_leading_term(lambda: &[GlpLabel]) -> Result<BraidedPoly> {
    let n = lambda.len();
    let g = Group::new(GroupSpec::Gl { m: 0, n })?;
    let mut f = BraidedPoly::one();
    for (i, l) in lambda.iter().enumerate() {
        let (d, e) = diagonal_names(n, i);
        let x = g.var(&d);
        f = &f * &p_poly(l.degree(), &x).map_err(|_| {
            Error::Unsupported(format!("negative degree at position {} needs D{0}{0} invertible", i + 1))
        })?;
        if l.xi {
            if n > 1 {
                return Err(Error::Unsupported("ξ-twisted entries need n = 1".into()));
            }
            let ratio = &g.var(&e) * &x.inverse()?;
            f = &f * &(&BraidedPoly::one() + &ratio.derive());
        }
    }
    Ok(f)
}

/// The subcomodule of `O(GL(nP))` generated by the leading term of the
/// invariant function of `L(λ)`.
pub fn glnp_highest_weight_module(lambda: &[GlpLabel]) -> Result<Comodule> {
    let n = lambda.len();
    if n == 0 || n > 2 {
        return Err(Error::Unsupported(format!("GL({n}P) is outside the supported range 1..=2")));
    }
    if lambda.windows(2).any(|p| p[0].degree() < p[1].degree()) {
        return Err(Error::Domain("degrees must be nonincreasing".into()));
    }
    let g = Group::new(GroupSpec::Gl { m: 0, n })?;
    let f = glnp_leading_term(lambda)?;
    Ok(regular_subcomodule(&g, &[f], GENERATED_LIMIT)?.0)
}

/// The simple head of [`glnp_highest_weight_module`].
pub fn glnp_irrep(lambda: &[GlpLabel]) -> Result<Comodule> {
    let v = glnp_highest_weight_module(lambda)?;
    composition_factors(&v, GENERATED_LIMIT)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Domain("empty module".into()))
}

/// Outcome of comparing `L(λ·χ^μ)` with `L(λ) ⊗ (Fr²)*L(μ)`.
#[derive(Clone, Debug, Serialize)]
pub struct SteinbergCheck {
    pub n: usize,
    pub lambda: Vec<GlpLabel>,
    pub mu: Vec<i32>,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub lhs_factors: Vec<usize>,
    pub rhs_factors: Vec<usize>,
    pub isomorphic: bool,
}

impl fmt::Display for SteinbergCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambda: Vec<String> = self.lambda.iter().map(ToString::to_string).collect();
        write!(
            f,
            "n={} λ=({}) μ={:?}: dims {} vs {}, {}",
            self.n,
            lambda.join(", "),
            self.mu,
            self.lhs_dim,
            self.rhs_dim,
            if self.isomorphic { "isomorphic" } else { "not isomorphic" }
        )
    }
}

/// `(Fr²)*` of the `GL(n)`-representation `det^b ⊗ V^{⊗(a−b)}` for
/// `μ = (a, b)` with `a − b ∈ {0, 1}`, or `det^a` when `n = 1`.
fn frobenius_twist(g: &Group, mu: &[i32]) -> Result<Comodule> {
    let n = mu.len();
    let entry = |i: usize, j: usize| -> BraidedPoly {
        let name = if n == 1 { "A".to_string() } else { format!("D{}{}", i + 1, j + 1) };
        g.var(&name).pow(4)
    };
    if n == 1 {
        let a = g.var("A").pow_signed(4 * mu[0])?;
        return Comodule::character(g, a);
    }
    let (a, b) = (mu[0], mu[1]);
    if b < 0 || !(0..=1).contains(&(a - b)) {
        return Err(Error::Unsupported(format!("μ = {mu:?} outside a − b ∈ {{0, 1}}, b ≥ 0")));
    }
    let det = &(&entry(0, 0) * &entry(1, 1)) + &(&entry(0, 1) * &entry(1, 0));
    let mut rep = Comodule::character(g, det.pow(b as u32))?;
    if a > b {
        let natural = Comodule::new(
            g.clone(),
            crate::ver4::Ver4Object::trivial(2),
            PolyMatrix::from_fn(2, 2, entry),
        )?;
        rep = rep.tensor(&natural)?;
    }
    Ok(rep)
}

/// Matches composition factors up to isomorphism.
fn same_factors(a: &[Comodule], b: &[Comodule]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let hit = b
            .iter()
            .enumerate()
            .position(|(j, y)| !used[j] && x.is_isomorphic(y));
        hit.map(|j| used[j] = true).is_some()
    })
}

/// Compares `L(λ·χ^μ)` with `L(λ) ⊗ (Fr²)*L_{GL(n)}(μ)` for a 4-restricted
/// `λ` (every entry without a `χ` twist).
pub fn steinberg_check(lambda: &[GlpLabel], mu: &[i32]) -> Result<SteinbergCheck> {
    let n = lambda.len();
    if mu.len() != n {
        return Err(Error::Domain("λ and μ have different lengths".into()));
    }
    if lambda.iter().any(|l| l.chi != 0) {
        return Err(Error::Domain("λ must be 4-restricted".into()));
    }
    let twisted: Vec<GlpLabel> = lambda.iter().zip(mu).map(|(l, &k)| l.twist_chi(k)).collect();
    let lhs = glnp_irrep(&twisted)?;
    let base = glnp_irrep(lambda)?;
    let rhs = base.tensor(&frobenius_twist(base.group(), mu)?)?;
    let lf = composition_factors(&lhs, GENERATED_LIMIT)?;
    let rf = composition_factors(&rhs, GENERATED_LIMIT)?;
    let isomorphic = lhs.dim() == rhs.dim() && same_factors(&lf, &rf) && (rf.len() != 1 || lhs.is_isomorphic(&rhs));
    Ok(SteinbergCheck {
        n,
        lambda: lambda.to_vec(),
        mu: mu.to_vec(),
        lhs_dim: lhs.dim(),
        rhs_dim: rhs.dim(),
        lhs_factors: lf.iter().map(Comodule::dim).collect(),
        rhs_factors: rf.iter().map(Comodule::dim).collect(),
        isomorphic,
    })
}
