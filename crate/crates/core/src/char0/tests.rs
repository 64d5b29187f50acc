use super::*;
use crate::group::GroupSpec;

#[test]
fn degenerations_match() {
    for key in DEGENERATION_KEYS {
        let r = degeneration(key).unwrap().check().unwrap();
        assert!(r.matches(), "{key}: {:?}\n{}", r.comparison.mismatches, r.reduced.join("\n"));
    }
}

#[test]
fn ga11_is_not_gm_prime() {
    let r = ga11().unwrap().check_against(GroupSpec::GM_PRIME, &["a"]).unwrap();
    assert!(!r.matches());
}

#[test]
fn supervector_reduction() {
    assert_eq!(reduce_supervector(1, 0).unwrap().decompose(), (1, 0));
    assert_eq!(reduce_supervector(0, 1).unwrap().decompose(), (0, 1));
    assert_eq!(reduce_supervector(1, 2).unwrap().decompose(), (1, 2));
}

#[test]
fn scaled_lattice_is_not_integral() {
    let h = s11().unwrap().presentation;
    let (x, y) = (h.var("X", 0).unwrap(), h.var("Y", 0).unwrap());
    let p = x.scale(&QSqrt2::sqrt2()).add(&y);
    let lattice = Lattice::new(&h, &[("p", p)]).unwrap();
    let err = change_basis_and_reduce(&h, &lattice).unwrap_err();
    assert!(matches!(err, crate::Error::LatticeNotIntegral(_)), "{err}");
}

#[test]
fn presentations_satisfy_hopf_axioms() {
    for key in DEGENERATION_KEYS {
        degeneration(key).unwrap().presentation.check_axioms().unwrap();
    }
}

#[test]
fn odd_generators_anticommute() {
    let (a, b) = (SuperPoly::odd((1, 0)), SuperPoly::odd((2, 0)));
    assert_eq!(a.mul(&b), b.mul(&a).scale(&QSqrt2::from(-1)));
    assert!(a.mul(&a).is_zero());
}

#[test]
fn unit_series_inverts_to_precision() {
    // (1 + √2 e)^{-1}
    let e = SuperPoly::even((0, 0));
    let u = SuperPoly::one().add(&e.scale(&QSqrt2::sqrt2()));
    let prod = u.mul(&u.inverse(SERIES_PRECISION).unwrap()).sub(&SuperPoly::one());
    for (_, c) in prod.terms() {
        assert!(c.valuation().unwrap() >= SERIES_PRECISION as i64);
    }
}

#[test]
fn valuations_and_residues() {
    assert_eq!(QSqrt2::sqrt2().valuation(), Some(1));
    assert_eq!(QSqrt2::from(2).valuation(), Some(2));
    assert_eq!(QSqrt2::from_fracs((1, 3), (0, 1)).valuation(), Some(0));
    assert_eq!(QSqrt2::zero().valuation(), None);
    assert!(QSqrt2::from_fracs((1, 3), (5, 7)).residue().unwrap());
    assert!(!QSqrt2::from_fracs((2, 3), (1, 1)).residue().unwrap());
    assert!(QSqrt2::from_fracs((1, 2), (0, 1)).residue().is_err());
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn element() -> impl Strategy<Value = QSqrt2> {
        let frac = (-40i64..40, prop::sample::select(vec![1i64, 2, 3, 4, 5, 8, 9, 15]));
        (frac.clone(), frac).prop_map(|(a, b)| QSqrt2::from_fracs(a, b))
    }

    fn integral() -> impl Strategy<Value = QSqrt2> {
        let frac = (-40i64..40, prop::sample::select(vec![1i64, 3, 5, 7, 9, 15]));
        (frac.clone(), frac).prop_map(|(a, b)| QSqrt2::from_fracs(a, b))
    }

    proptest! {
        #[test]
        fn field_identities(x in element(), y in element(), z in element()) {
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inverse().unwrap(), QSqrt2::one());
            }
        }

        #[test]
        fn valuation_is_a_valuation(x in element(), y in element()) {
            if let (Some(a), Some(b)) = (x.valuation(), y.valuation()) {
                prop_assert_eq!((&x * &y).valuation(), Some(a + b));
                if let Some(s) = (&x + &y).valuation() {
                    prop_assert!(s >= a.min(b));
                }
            }
        }

        #[test]
        fn residue_is_multiplicative(x in integral(), y in integral()) {
            let xy = &x * &y;
            prop_assert_eq!(xy.residue().unwrap(), x.residue().unwrap() && y.residue().unwrap());
            prop_assert_eq!((&x + &y).residue().unwrap(), x.residue().unwrap() ^ y.residue().unwrap());
        }
    }
}
