use super::*;
use crate::braided::PolyMatrix;

fn all_specs() -> Vec<GroupSpec> {
    use GroupSpec::*;
    vec![
        GroupSpec::GLP,
        GroupSpec::GL1P,
        Gl { m: 0, n: 2 },
        Gl { m: 2, n: 0 },
        Gl { m: 1, n: 2 },
        Borel { m: 1, n: 1 },
        Levi { m: 1, n: 1 },
        GlClassical(2),
        M(1),
        M(2),
        H(1),
        H(2),
        End(2),
        GStar(1),
        GStar(2),
        Ga,
        GaPrime,
        Gm,
    ]
}

#[test]
fn glp_generic_point() {
    let g = Group::new(GroupSpec::GLP).unwrap();
    let m = g.generic(1);
    let ring = g.ring();
    assert_eq!(m[(0, 0)].to_string_with(ring), "A_1");
    assert_eq!(m[(0, 1)].to_string_with(ring), "A_1'");
    assert_eq!(m[(1, 0)].to_string_with(ring), "B_1");
    assert_eq!(m[(1, 1)], &g.var("A").retag(0, 1) + &BraidedPoly::prime(g.gen("B").with_tag(1)));
}

#[test]
fn m1_law() {
    let g = Group::new(GroupSpec::M1).unwrap();
    let prod = g.multiply_generic(1, 2).unwrap();
    assert_eq!(prod[(1, 0)], g.parse("X_1 + X_2 + X_1' X_2").unwrap());
    assert!(g.multiply_generic(1, 1).is_err());
}

#[test]
fn gm_prime_is_grouplike() {
    let g = Group::new(GroupSpec::GM_PRIME).unwrap();
    let prod = g.multiply_generic(1, 2).unwrap();
    assert_eq!(prod[(0, 0)], g.parse("a_1 a_2").unwrap());
}

#[test]
fn m1_antipode() {
    let g = Group::new(GroupSpec::M1).unwrap();
    let inv = g.inverse_generic(0).unwrap();
    assert_eq!(inv[(1, 0)], g.parse("X + X X'").unwrap());
}

#[test]
fn glp_inverse() {
    let g = Group::new(GroupSpec::GLP).unwrap();
    let inv = g.inverse_generic(0).unwrap();
    assert!(g.generic(0).mul(&inv).is_identity());
    // leading entry A^{-1} plus nilpotent corrections
    assert_eq!(inv[(0, 0)].reduced_part(), g.parse("A^-1").unwrap());
}

#[test]
fn group_axioms_on_generic_points() {
    for spec in all_specs() {
        let g = Group::new(spec).unwrap();
        let (g1, g2, g3) = (g.generic(1), g.generic(2), g.generic(3));
        assert_eq!(g1.mul(&g2).mul(&g3), g1.mul(&g2.mul(&g3)), "{spec} associativity");
        assert!(g.in_shape(&g1.mul(&g2)), "{spec} closure");
        assert!(g.in_shape(&PolyMatrix::identity(g.size())), "{spec} identity");
        match g.inverse_generic(1) {
            Ok(inv) => assert!(g.in_shape(&inv.retag(1, 0)), "{spec} inverse shape"),
            Err(crate::Error::Unsupported(_)) => {}
            Err(e) => panic!("{spec}: {e}"),
        }
    }
}

#[test]
fn inverse_support() {
    for spec in [GroupSpec::GLP, GroupSpec::GL1P, GroupSpec::M(2), GroupSpec::H(1), GroupSpec::End(2), GroupSpec::Gm, GroupSpec::GaPrime] {
        assert!(Group::new(spec).unwrap().inverse_generic(0).is_ok(), "{spec}");
    }
    let gl2p = Group::new(GroupSpec::Gl { m: 0, n: 2 }).unwrap();
    assert!(matches!(gl2p.inverse_generic(0), Err(crate::Error::Unsupported(_))));
}

#[test]
fn gauss_factors() {
    for (m, n) in [(1, 1), (0, 1), (1, 2), (0, 2)] {
        let g = Group::new(GroupSpec::Gl { m, n }).unwrap();
        let point = g.generic(0);
        let (lower, upper) = gauss_decompose(&point, m, n).unwrap();
        assert_eq!(lower.mul(&upper), point, "({m},{n})");
        let borel = Group::new(GroupSpec::Borel { m, n }).unwrap();
        assert!(borel.in_shape(&upper));
        if m == 0 {
            assert!(lower.is_identity());
        }
    }
    let gl1p = Group::new(GroupSpec::GL1P).unwrap();
    let (lower, upper) = gauss_decompose(&gl1p.generic(0), 1, 1).unwrap();
    assert_eq!(upper[(1, 1)], gl1p.parse("B' A^-1 C + E").unwrap());
    assert_eq!(upper[(2, 1)], gl1p.parse("B A^-1 C + F").unwrap());
    assert!(Group::new(GroupSpec::GaPrime).unwrap().in_shape(&lower));
    // an upper point factors with trivial lower part
    let (lower, _) = gauss_decompose(&borel_point(), 1, 1).unwrap();
    assert!(lower.is_identity());
}

fn borel_point() -> PolyMatrix {
    let gl1p = Group::new(GroupSpec::GL1P).unwrap();
    let mut s = crate::braided::Substitution::new()
        .with(gl1p.gen("B"), BraidedPoly::zero())
        .unwrap();
    gl1p.generic(0).substitute(&mut s).unwrap()
}

#[test]
fn mh_factorization() {
    let g = Group::new(GroupSpec::GLP).unwrap();
    let point = g.generic(0);
    let (m, h) = mh_decompose(&point, 1).unwrap();
    assert_eq!(m.mul(&h), point);
    let (_, mpt) = embedding(GroupSpec::M(1), GroupSpec::GLP).unwrap();
    assert!(Group::new(GroupSpec::GLP).unwrap().in_shape(&mpt));
    assert!(Group::new(GroupSpec::M(1)).unwrap().in_shape(&m));
    assert!(Group::new(GroupSpec::H(1)).unwrap().in_shape(&h));
}

#[test]
fn invertibility() {
    for (m, n) in [(1, 1), (0, 2), (2, 1)] {
        let g = Group::new(GroupSpec::Gl { m, n }).unwrap();
        assert!(invertibility_criterion(&PolyMatrix::identity(m + 2 * n), m, n).unwrap());
        assert!(invertibility_criterion(&g.generic(0), m, n).unwrap());
    }
    let g = Group::new(GroupSpec::GLP).unwrap();
    let d_zero = PolyMatrix::from_rows(vec![
        vec![BraidedPoly::zero(), BraidedPoly::zero()],
        vec![g.var("B"), BraidedPoly::prime(g.gen("B"))],
    ]);
    assert!(!invertibility_criterion(&d_zero, 0, 1).unwrap());
    let malformed = PolyMatrix::from_rows(vec![
        vec![g.var("A"), BraidedPoly::zero()],
        vec![g.var("B"), g.var("A")],
    ]);
    assert!(invertibility_criterion(&malformed, 0, 1).is_err());
}

#[test]
fn spec_grammar() {
    for s in ["GL(1+P)", "GL(P)", "B(1,1)", "M(2)", "H(2)", "Gm'", "Ga'", "M1", "GL(2)", "G*(2)"] {
        let spec = GroupSpec::parse(s).unwrap();
        assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec, "{s}");
    }
    assert_eq!(GroupSpec::parse("GL(2+3P)").unwrap(), GroupSpec::Gl { m: 2, n: 3 });
    assert!(GroupSpec::parse("SL(2)").is_err());
}

#[test]
fn embeddings() {
    use GroupSpec::*;
    for (sub, parent) in [
        (Gm, GroupSpec::GLP),
        (H(1), GroupSpec::GLP),
        (M(1), GroupSpec::GLP),
        (Borel { m: 1, n: 1 }, GroupSpec::GL1P),
        (Levi { m: 1, n: 1 }, GroupSpec::GL1P),
        (GaPrime, GroupSpec::GL1P),
        (GStar(2), Gl { m: 0, n: 2 }),
        (M(2), Gl { m: 0, n: 2 }),
        (H(2), Gl { m: 0, n: 2 }),
        (GlClassical(2), H(2)),
        (End(2), M(2)),
    ] {
        assert!(embedding(sub, parent).is_ok(), "{sub} in {parent}");
    }
    assert!(embedding(Ga, GroupSpec::GLP).is_ok());
    assert!(embedding(GaPrime, GroupSpec::GLP).is_err());
    assert!(embedding(H(2), GroupSpec::GL1P).is_err());
}
