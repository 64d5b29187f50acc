use proptest::prelude::*;
use ver4::comodule::*;
use ver4::gf2::{BitMatrix, BitVec};

const CATALOG: [&str; 12] = [
    "1", "xi", "chi", "chi^-1", "T(1)", "T(2)", "T(3)", "xi*T(1)", "xi*T(3)", "T(-1)", "xi*chi*T(1)", "chi*T(2)",
];
const GENERATORS: [&str; 5] = ["T(1)", "T(2)", "T(3)", "xi", "chi"];

fn glp(s: &str) -> Comodule {
    glp_irrep(s.parse().unwrap()).unwrap()
}

fn arb_invertible(n: usize) -> impl Strategy<Value = BitMatrix> {
    prop::collection::vec(any::<bool>(), n * n)
        .prop_map(move |bits| BitMatrix::from_fn(n, n, |i, j| bits[i * n + j]))
        .prop_filter("singular", |m| m.inverse().is_some())
}

fn arb_rebased() -> impl Strategy<Value = (&'static str, BitMatrix)> {
    prop::sample::select(CATALOG.to_vec()).prop_flat_map(|s| (Just(s), arb_invertible(glp(s).dim())))
}

fn arb_rebased_product() -> impl Strategy<Value = (&'static str, &'static str, BitMatrix)> {
    let pick = || prop::sample::select(GENERATORS.to_vec());
    (pick(), pick()).prop_flat_map(|(a, b)| (Just(a), Just(b), arb_invertible(glp(a).dim() * glp(b).dim())))
}

fn sorted_series(v: &Comodule) -> Vec<String> {
    let mut s: Vec<String> = composition_series(v, DEFAULT_BOUND)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    s.sort();
    s
}

#[test]
fn catalog_validates_and_identifies() {
    for s in CATALOG {
        let v = glp(s);
        assert!(v.validate().passed(), "{s}");
        assert_eq!(identify_glp(&v).unwrap(), s.parse().unwrap(), "{s}");
    }
}

#[test]
fn simple_comodules_are_generated_by_every_vector() {
    for s in CATALOG {
        let v = glp(s);
        let n = v.dim();
        for mask in 1..(1u64 << n) {
            let g = v.generated(&BitVec::from_mask(n, mask)).unwrap();
            assert_eq!(g.dim(), n, "{s}, vector {mask:b}");
        }
    }
}

#[test]
fn grothendieck_classes_commute_and_add_degrees() {
    for a in GENERATORS {
        for b in GENERATORS {
            let (va, vb) = (glp(a), glp(b));
            let ab = va.tensor(&vb).unwrap();
            let ba = vb.tensor(&va).unwrap();
            assert_eq!(sorted_series(&ab), sorted_series(&ba), "{a} * {b}");
            let degree = a.parse::<GlpLabel>().unwrap().degree() + b.parse::<GlpLabel>().unwrap().degree();
            let mut total = 0;
            for f in composition_factors(&ab, DEFAULT_BOUND).unwrap() {
                assert_eq!(torus_degree(&f), Some(degree), "{a} * {b}");
                total += f.dim();
            }
            assert_eq!(total, va.dim() * vb.dim());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn invariants_are_basis_independent((s, b) in arb_rebased()) {
        let v = glp(s);
        let w = v.change_basis(&b).unwrap();
        prop_assert!(w.validate().passed());
        prop_assert!(w.is_isomorphic(&v));
        prop_assert_eq!(identify_glp(&w).unwrap(), s.parse::<GlpLabel>().unwrap());
        prop_assert_eq!(w.commutant_dim(), v.commutant_dim());
    }

    #[test]
    fn dual_is_an_involution((s, b) in arb_rebased()) {
        let v = glp(s).change_basis(&b).unwrap();
        let dd = v.dual().unwrap().dual().unwrap();
        prop_assert!(dd.validate().passed());
        prop_assert!(dd.is_isomorphic(&v));
        let l = s.parse::<GlpLabel>().unwrap();
        prop_assert_eq!(torus_degree(&v.dual().unwrap()), Some(-l.degree()));
    }

    #[test]
    fn rebased_products_keep_their_series((a, b, g) in arb_rebased_product()) {
        let v = glp(a).tensor(&glp(b)).unwrap();
        let w = v.change_basis(&g).unwrap();
        prop_assert_eq!(sorted_series(&w), sorted_series(&v));
    }
}
