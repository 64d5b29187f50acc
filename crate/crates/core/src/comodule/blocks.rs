use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{BitVec, Subspace};

use super::core::Comodule;
use super::ext::ext1;
use super::glp::{chi, glp_irrep, sym_power_rep};
use super::label::{GlpLabel, IrrepLabel};
use super::series::{admits_series, composition_series, torus_degree};

/// All subcomodules, as sums of the cyclic ones.
pub fn subcomodules(v: &Comodule, bound: usize) -> Result<Vec<Subspace>> {
    let n = v.dim();
    if n > bound || n > 20 {
        return Err(Error::Unsupported(format!("dimension {n} exceeds the search bound")));
    }
    let mats = v.action_matrices();
    let mut all = vec![Subspace::zero(n)];
    for mask in 1u64..(1u64 << n) {
        let c = Subspace::span(n, [BitVec::from_mask(n, mask)]).close_under(&mats);
        if !all.contains(&c) {
            all.push(c);
        }
    }
    let cyclic = all.clone();
    let mut i = 0;
    while i < all.len() {
        for c in &cyclic {
            let s = all[i].sum(c);
            if !all.contains(&s) {
                all.push(s);
            }
        }
        i += 1;
    }
    Ok(all)
}

/// A subcomodule complementary to `sub`, if one exists. Subcomodules are
/// d-stable by construction, so this decides whether `sub ⊆ v` splits.
pub fn complement(v: &Comodule, sub: &Subspace, bound: usize) -> Result<Option<Subspace>> {
    if !v.is_subcomodule(sub) {
        return Err(Error::Domain("not a subcomodule".into()));
    }
    Ok(subcomodules(v, bound)?
        .into_iter()
        .find(|w| w.dim() + sub.dim() == v.dim() && w.intersect(sub).dim() == 0))
}

/// Simple objects of `Rep(GL(P))` of degree `n`: `χ^k, ξχ^k` for `n = 4k`,
/// `T_n, ξT_n` for odd `n`, `T_n` for `n ≡ 2 (mod 4)`.
pub fn block_generators(n: i32) -> Vec<GlpLabel> {
    let (k, t) = (n.div_euclid(4), n.rem_euclid(4) as u8);
    let mut out = Vec::new();
    for xi in [false, true] {
        let l = GlpLabel::new(xi, k, t).expect("t < 4");
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionCheck {
    pub name: String,
    pub dim: usize,
    /// Expected head-first series: the quotient, then the subobject.
    pub expected: Vec<IrrepLabel>,
    pub series: Vec<IrrepLabel>,
    pub admits_expected: bool,
    pub nonsplit: bool,
    /// Bounded-degree `dim Ext¹(quotient, sub)` and `dim Ext¹(sub, quotient)`.
    pub ext_dims: [usize; 2],
    pub cutoff: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockCheck {
    pub degree: i32,
    pub generators: Vec<GlpLabel>,
    /// Every generator validates, has degree `n`, and no two are isomorphic.
    pub generators_ok: bool,
    /// The two generators are linked by a nonzero `Ext¹` in some direction.
    pub linked: bool,
    pub extension: Option<ExtensionCheck>,
}

impl BlockCheck {
    pub fn passed(&self) -> bool {
        self.generators_ok && self.extension.as_ref().is_none_or(|e| e.admits_expected && e.nonsplit)
    }

    /// The block in degree `n` is the one described by its generators: a
    /// single simple, or two simples joined by an extension.
    pub fn connected(&self) -> bool {
        self.generators_ok && (self.generators.len() == 1 || self.linked)
    }
}

/// The extension linking the two generators of a degree-`n` block, as
/// `(name, module, quotient, subobject)`; `None` for `n ≡ 2 (mod 4)`.
fn linking_extension(n: i32) -> Result<Option<(String, Comodule, GlpLabel, GlpLabel)>> {
    let (k, t) = (n.div_euclid(4), n.rem_euclid(4));
    let t4 = sym_power_rep(4);
    let t1 = sym_power_rep(1);
    let t2 = sym_power_rep(2);
    Ok(match t {
        0 => Some((
            format!("chi^{} * Sym^4 P", k - 1),
            chi(k - 1).tensor(&t4)?,
            GlpLabel::new(true, k, 0)?,
            GlpLabel::new(false, k, 0)?,
        )),
        1 => Some((
            format!("chi^{} * Sym^4 P * T(1)", k - 1),
            Comodule::tensor_all(&[chi(k - 1), t4, t1])?,
            GlpLabel::new(true, k, 1)?,
            GlpLabel::new(false, k, 1)?,
        )),
        3 => Some((
            format!("chi^{k} * T(1) * T(2)"),
            Comodule::tensor_all(&[chi(k), t1, t2])?,
            GlpLabel::new(true, k, 3)?,
            GlpLabel::new(false, k, 3)?,
        )),
        _ => None,
    })
}

pub fn block_check(n: i32, bound: usize, cutoff: u32) -> Result<BlockCheck> {
    let generators = block_generators(n);
    let reps = generators.iter().map(|l| glp_irrep(*l)).collect::<Result<Vec<_>>>()?;
    let mut generators_ok = reps
        .iter()
        .all(|r| r.validate().passed() && torus_degree(r) == Some(n));
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            generators_ok &= !a.is_isomorphic(b);
        }
    }
    let extension = match linking_extension(n)? {
        None => None,
        Some((name, v, quotient, sub)) => {
            let expected = vec![IrrepLabel::Glp(quotient), IrrepLabel::Glp(sub)];
            let series = composition_series(&v, bound)?;
            let admits_expected = admits_series(&v, &expected, bound)?;
            let socle = super::series::simple_subcomodules(&v, bound)?;
            let nonsplit = match socle.as_slice() {
                [s] => complement(&v, s, bound)?.is_none(),
                _ => false,
            };
            let (q, s) = (glp_irrep(quotient)?, glp_irrep(sub)?);
            let ext_dims = [ext1(&q, &s, cutoff)?.dim(), ext1(&s, &q, cutoff)?.dim()];
            Some(ExtensionCheck {
                name,
                dim: v.dim(),
                expected,
                series,
                admits_expected,
                nonsplit,
                ext_dims,
                cutoff,
            })
        }
    };
    let linked = extension.as_ref().is_some_and(|e| e.nonsplit || e.ext_dims.iter().any(|&d| d > 0));
    Ok(BlockCheck {
        degree: n,
        generators,
        generators_ok,
        linked,
        extension,
    })
}
