//! Generic points of the group schemes; `Δ`, `ε` and `S` are read off generic
//! multiplication, the identity point and generic inversion.

mod scheme;
mod spec;

pub use scheme::Group;
pub use spec::GroupSpec;

use crate::braided::{BraidedPoly, PolyMatrix, Substitution};
use crate::error::{Error, Result};

/// Blocks `(F, B, C, D, E)` of a point in `GL(m+nP)` shape.
pub struct GlBlocks {
    pub f: PolyMatrix,
    pub b: PolyMatrix,
    pub c: PolyMatrix,
    pub d: PolyMatrix,
    pub e: PolyMatrix,
}

fn range(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

pub fn gl_blocks(g: &PolyMatrix, m: usize, n: usize) -> GlBlocks {
    let (r0, r1, r2) = (range(0, m), range(m, n), range(m + n, n));
    GlBlocks {
        f: g.submatrix(&r0, &r0),
        b: g.submatrix(&r2, &r0),
        c: g.submatrix(&r0, &r1),
        d: g.submatrix(&r1, &r1),
        e: g.submatrix(&r2, &r1),
    }
}

/// Assembles the `(F C C'; B' D D'; B E D+E')` matrix.
pub fn gl_assemble(blocks: &GlBlocks, m: usize, n: usize) -> PolyMatrix {
    let size = m + 2 * n;
    let mut out = PolyMatrix::zeros(size, size);
    let mut put = |r0: usize, c0: usize, blk: &PolyMatrix| {
        for i in 0..blk.nrows() {
            for j in 0..blk.ncols() {
                out[(r0 + i, c0 + j)] = blk[(i, j)].clone();
            }
        }
    };
    put(0, 0, &blocks.f);
    put(0, m, &blocks.c);
    put(0, m + n, &blocks.c.derive());
    put(m, 0, &blocks.b.derive());
    put(m, m, &blocks.d);
    put(m, m + n, &blocks.d.derive());
    put(m + n, 0, &blocks.b);
    put(m + n, m, &blocks.e);
    put(m + n, m + n, &blocks.d.add(&blocks.e.derive()));
    out
}

/// Factorization `g = L · U` with `L` lower unipotent (a point of
/// `(G'_a)^{mn}`) and `U` in `B_{m,n}`:
/// `L` has blocks `B'F⁻¹`, `BF⁻¹`; `U` has `F`, `C`, `B'F⁻¹C + D`, `BF⁻¹C + E`.
pub fn gauss_decompose(g: &PolyMatrix, m: usize, n: usize) -> Result<(PolyMatrix, PolyMatrix)> {
    let group = Group::new(GroupSpec::Gl { m, n })?;
    if !group.in_shape(g) {
        return Err(Error::Domain("point is not in GL(m+nP) block shape".into()));
    }
    let blk = gl_blocks(g, m, n);
    let f_inv = blk.f.inverse()?;
    let bf = blk.b.mul(&f_inv);
    let lower = gl_assemble(
        &GlBlocks {
            f: PolyMatrix::identity(m),
            b: bf.clone(),
            c: PolyMatrix::zeros(m, n),
            d: PolyMatrix::identity(n),
            e: PolyMatrix::zeros(n, n),
        },
        m,
        n,
    );
    let d_new = blk.b.derive().mul(&f_inv).mul(&blk.c).add(&blk.d);
    let e_new = bf.mul(&blk.c).add(&blk.e);
    let upper = gl_assemble(
        &GlBlocks {
            f: blk.f.clone(),
            b: PolyMatrix::zeros(n, m),
            c: blk.c.clone(),
            d: d_new,
            e: e_new,
        },
        m,
        n,
    );
    Ok((lower, upper))
}

/// `(D D'; E D+E') = (I 0; ED⁻¹ I+(ED⁻¹)') · (D D'; 0 D)`, the `M_n × H_n`
/// factorization of a point of `GL(nP)`.
pub fn mh_decompose(g: &PolyMatrix, n: usize) -> Result<(PolyMatrix, PolyMatrix)> {
    let blk = gl_blocks(g, 0, n);
    let x = blk.e.mul(&blk.d.inverse()?);
    let mut m_part = PolyMatrix::identity(2 * n);
    let mut h_part = PolyMatrix::zeros(2 * n, 2 * n);
    let xd = x.derive();
    let dd = blk.d.derive();
    for i in 0..n {
        for j in 0..n {
            m_part[(n + i, j)] = x[(i, j)].clone();
            m_part[(n + i, n + j)] += xd[(i, j)].clone();
            h_part[(i, j)] = blk.d[(i, j)].clone();
            h_part[(n + i, n + j)] = blk.d[(i, j)].clone();
            h_part[(i, n + j)] = dd[(i, j)].clone();
        }
    }
    Ok((m_part, h_part))
}

/// Determinant modulo the nilradical, where the ring is commutative.
fn reduced_det(m: &PolyMatrix) -> BraidedPoly {
    let n = m.nrows();
    if n == 0 {
        return BraidedPoly::one();
    }
    let mut acc = BraidedPoly::zero();
    for j in 0..n {
        let a = m[(0, j)].reduced_part();
        if a.is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = reduced_det(&m.submatrix(&rows, &cols));
        acc += (&a * &minor).reduced_part();
    }
    acc
}

fn is_unit_monomial(p: &BraidedPoly) -> bool {
    p.len() == 1
        && p.terms().all(|t| t.primes().is_empty() && t.base().iter().all(|(g, _)| g.is_invertible()))
}

/// `(F C C'; B' D D'; B E D+E')` is invertible iff `F` and `D` are.
///
/// Invertibility is insensitive to nilpotents, so both blocks are tested by
/// their determinants modulo the nilradical. The determinants of the generic
/// blocks count as units because the coordinate ring inverts them.
pub fn invertibility_criterion(g: &PolyMatrix, m: usize, n: usize) -> Result<bool> {
    let group = Group::new(GroupSpec::Gl { m, n })?;
    if !group.in_shape(g) {
        return Err(Error::Domain("point is not in GL(m+nP) block shape".into()));
    }
    let blk = gl_blocks(g, m, n);
    let generic = gl_blocks(&group.generic(0), m, n);
    let unit = |block: &PolyMatrix, generic: &PolyMatrix| {
        let det = reduced_det(block);
        is_unit_monomial(&det) || det == reduced_det(generic)
    };
    Ok(unit(&blk.f, &generic.f) && unit(&blk.d, &generic.d))
}

/// The subgroup's tautological point written in the parent's shape.
pub fn embedding(sub: GroupSpec, parent: GroupSpec) -> Result<(Group, PolyMatrix)> {
    use GroupSpec::*;
    let sub_group = Group::new(sub)?;
    let parent_group = Group::new(parent)?;
    let g = sub_group.generic(0);
    let point = if sub.size() == parent.size() {
        g
    } else {
        match (sub, parent) {
            // scalar matrices: the torus of GL(P) and GL(n) inside H(n)
            (Gm, Gl { m: 0, n: 1 }) | (Gm, H(1)) => {
                PolyMatrix::from_fn(2, 2, |i, j| if i == j { g[(0, 0)].clone() } else { BraidedPoly::zero() })
            }
            (GlClassical(k), H(n)) if k == n => PolyMatrix::from_fn(2 * n, 2 * n, |i, j| {
                if i / n == j / n {
                    g[(i % n, j % n)].clone()
                } else {
                    BraidedPoly::zero()
                }
            }),
            (Gm, GlClassical(1)) => g,
            _ => {
                return Err(Error::Unsupported(format!("no embedding of {sub} in {parent}")));
            }
        }
    };
    if !parent_group.in_shape(&point) {
        return Err(Error::Unsupported(format!("{sub} does not embed in {parent} by shape")));
    }
    Ok((sub_group, point))
}

/// Substitution sending the parent's coordinates to functions on `sub`.
pub fn restriction(sub: GroupSpec, parent: GroupSpec) -> Result<(Group, Substitution)> {
    let (sub_group, point) = embedding(sub, parent)?;
    let parent_group = Group::new(parent)?;
    Ok((sub_group, parent_group.coordinates(&point)?))
}

#[cfg(test)]
mod tests;
