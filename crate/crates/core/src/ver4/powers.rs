use super::object::{braiding, CatMorphism, Ver4Object};
use crate::gf2::{adapted_basis, BitMatrix, BitVec, Subspace};

/// `Sym^n X` and the projection `X^{⊗(n-1)} ⊗ X → Sym^n X` realised on
/// `Sym^{n-1} X ⊗ X`.
struct SymStep {
    object: Ver4Object,
    /// Projection `Sym^{n-1} X ⊗ X → Sym^n X`.
    projection: BitMatrix,
}

fn quotient_with_projection(v: &Ver4Object, sub: &Subspace) -> SymStep {
    let object = v.quotient(sub).expect("image of a morphism is d-stable");
    let b = adapted_basis(sub);
    let binv = b.inverse().expect("adapted basis is invertible");
    let high: Vec<usize> = (sub.dim()..v.dim()).collect();
    let all: Vec<usize> = (0..v.dim()).collect();
    SymStep {
        object,
        projection: binv.submatrix(&high, &all),
    }
}

/// `Sym^n X = (Sym^{n-1} X ⊗ X) / im((π ⊗ 1)(1 ⊗ (1 + c)))`, built recursively.
pub fn sym_power(x: &Ver4Object, n: usize) -> Ver4Object {
    if n == 0 {
        return Ver4Object::unit();
    }
    if n == 1 {
        return x.clone();
    }
    let one_plus_c = braiding(x, x).matrix.add(&BitMatrix::identity(x.dim() * x.dim()));
    // S_{k-2} and the projection S_{k-2} ⊗ X → S_{k-1}
    let mut prev = Ver4Object::unit();
    let mut cur = SymStep {
        object: x.clone(),
        projection: BitMatrix::identity(x.dim()),
    };
    for _ in 2..=n {
        let left = BitMatrix::identity(prev.dim()).kron(&one_plus_c);
        let proj = cur.projection.kron(&BitMatrix::identity(x.dim()));
        let phi = proj.mul(&left);
        let target = cur.object.tensor(x);
        let image = Subspace::span(target.dim(), phi.cols_vec());
        let next = quotient_with_projection(&target, &image);
        prev = cur.object;
        cur = next;
    }
    cur.object
}

fn adjacent_swaps(x: &Ver4Object, n: usize) -> Vec<BitMatrix> {
    let c = braiding(x, x).matrix;
    (0..n.saturating_sub(1))
        .map(|i| {
            let left = BitMatrix::identity(x.dim().pow(i as u32));
            let right = BitMatrix::identity(x.dim().pow((n - i - 2) as u32));
            left.kron(&c).kron(&right)
        })
        .collect()
}

/// `X^{⊗n} / Σ_i im(1 + c_{i,i+1})` computed in one step.
pub fn sym_power_direct(x: &Ver4Object, n: usize) -> Ver4Object {
    let t = x.tensor_power(n);
    let id = BitMatrix::identity(t.dim());
    let mut rel = Subspace::zero(t.dim());
    for s in adjacent_swaps(x, n) {
        rel = rel.sum(&Subspace::span(t.dim(), s.add(&id).cols_vec()));
    }
    t.quotient(&rel).expect("relations are d-stable")
}

/// Image of `Σ_{σ ∈ S_n} c_σ` on `X^{⊗n}`, with `c_σ` built from adjacent
/// braidings along a reduced word.
pub fn symmetrizer_image(x: &Ver4Object, n: usize) -> Ver4Object {
    let t = x.tensor_power(n);
    let swaps = adjacent_swaps(x, n);
    let mut total = BitMatrix::zeros(t.dim(), t.dim());
    for perm in permutations(n) {
        let mut m = BitMatrix::identity(t.dim());
        for i in reduced_word(&perm) {
            m = swaps[i].mul(&m);
        }
        total = total.add(&m);
    }
    let image = Subspace::span(t.dim(), total.cols_vec());
    t.subobject(&image).expect("image is d-stable")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Adjacent transpositions sorting `perm` by bubble sort.
fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i);
                changed = true;
            }
        }
    }
    word
}

/// Braided-symmetric tensors `∩_i ker(1 + c_{i,i+1})` in `X^{⊗n}`.
///
/// Built as the kernel of `Γ^{n-1} ⊗ X → Γ^{n-2} ⊗ X ⊗ X`, `v ↦ (1 ⊗ (1 + c))(ι ⊗ 1) v`
/// where `ι: Γ^{n-1} → Γ^{n-2} ⊗ X` is the previous inclusion, so no full tensor
/// power is ever formed.
pub fn ext_power(x: &Ver4Object, n: usize) -> Ver4Object {
    if n == 0 {
        return Ver4Object::unit();
    }
    let dx = x.dim();
    let one_plus_c = braiding(x, x).matrix.add(&BitMatrix::identity(dx * dx));
    let mut prev = Ver4Object::unit();
    let mut cur = x.clone();
    // inclusion Γ^{k-1} → Γ^{k-2} ⊗ X
    let mut incl = BitMatrix::identity(dx);
    for _ in 2..=n {
        let ambient = cur.tensor(x);
        let map = BitMatrix::identity(prev.dim())
            .kron(&one_plus_c)
            .mul(&incl.kron(&BitMatrix::identity(dx)));
        let ker = Subspace::span(ambient.dim(), map.kernel());
        let next = ambient.subobject(&ker).expect("kernel of a morphism is d-stable");
        incl = BitMatrix::from_cols(ker.basis(), ambient.dim());
        prev = cur;
        cur = next;
    }
    cur
}

/// `Fr(X) = ker(1 + c) / im(1 + c)` on `X ⊗ X`.
pub fn frobenius(x: &Ver4Object) -> Ver4Object {
    let c = braiding(x, x);
    let xx = x.tensor(x);
    let one_plus_c = CatMorphism {
        source: xx.clone(),
        target: xx.clone(),
        matrix: c.matrix.add(&BitMatrix::identity(xx.dim())),
    };
    let ker = one_plus_c.kernel();
    let im = one_plus_c.image();
    let kernel_obj = xx.subobject(&ker).expect("kernel is d-stable");
    // coordinates of the image inside the kernel basis
    let kb = BitMatrix::from_cols(ker.basis(), xx.dim());
    let coords: Vec<BitVec> = im
        .basis()
        .iter()
        .map(|v| kb.solve(v).expect("image lies in the kernel"))
        .collect();
    let kernel_obj_basis_sub = Subspace::span(ker.dim(), coords);
    // subobject() used the adapted basis of `ker`, whose first block is the
    // kernel basis itself
    kernel_obj
        .quotient(&kernel_obj_basis_sub)
        .expect("image is d-stable")
}
