mod common;

use common::*;
use proptest::prelude::*;
use ver4::braided::{parse_poly, BraidedPoly};

const CLOSED: [bool; 4] = [false, false, false, true];

#[test]
fn oracle_agrees_on_worked_examples() {
    let set = ring();
    let sum = rewrite_normal(&[(0, false), (1, false), (0, false), (1, false)], &CLOSED, &[0]);
    assert_eq!(
        sum_to_poly(&sum, &set),
        parse_poly(&set, "A^2 B^2 + A B A' B'").unwrap()
    );
    let sum = rewrite_normal(&[(1, false), (1, false), (0, false)], &CLOSED, &[1, 0]);
    assert_eq!(sum_to_poly(&sum, &set), parse_poly(&set, "A B^2").unwrap());
    let sum = rewrite_normal(&[(1, false), (0, false), (0, false)], &CLOSED, &[0, 1]);
    assert_eq!(sum_to_poly(&sum, &set), parse_poly(&set, "A^2 B").unwrap());
}

#[test]
fn block_swap_closed_form() {
    let set = ring();
    let (a, b) = (gen(&set, 0), gen(&set, 1));
    for j in 1..6 {
        for k in 1..6 {
            let lhs = &BraidedPoly::power(b, j).unwrap() * &BraidedPoly::power(a, k).unwrap();
            let mut rhs = &BraidedPoly::power(a, k).unwrap() * &BraidedPoly::power(b, j).unwrap();
            if (j * k) % 2 == 1 {
                let corr = parse_poly(&set, &format!("A^{} B^{} A' B'", k - 1, j - 1)).unwrap();
                rhs += corr;
            }
            assert_eq!(lhs, rhs, "B^{j} A^{k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn confluence(word in arb_word(6), s1 in prop::collection::vec(0usize..8, 1..6), s2 in prop::collection::vec(0usize..8, 1..6)) {
        let set = ring();
        let first = rewrite_normal(&word, &CLOSED, &s1);
        let second = rewrite_normal(&word, &CLOSED, &s2);
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(sum_to_poly(&first, &set), word_to_poly(&word, &set));
    }

    #[test]
    fn braided_commutativity(p in arb_poly(), q in arb_poly()) {
        let lhs = &(&p * &q) + &(&q * &p);
        prop_assert_eq!(lhs, &p.derive() * &q.derive());
    }

    #[test]
    fn leibniz(p in arb_poly(), q in arb_poly()) {
        let lhs = (&p * &q).derive();
        let rhs = &(&p.derive() * &q) + &(&p * &q.derive());
        prop_assert_eq!(lhs, rhs);
        prop_assert!(p.derive().derive().is_zero());
    }

    #[test]
    fn primes_are_central(p in arb_poly(), i in 0usize..4) {
        let set = ring();
        let x = BraidedPoly::prime(gen(&set, i));
        prop_assert_eq!(&x * &p, &p * &x);
    }

    #[test]
    fn associativity(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn distributivity(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn units_invert(n in prop::collection::vec(any::<u8>(), 0..3), e in -3i32..4) {
        let set = ring();
        let lead = BraidedPoly::power(gen(&set, 0), e).unwrap();
        let mut nil = BraidedPoly::prime(gen(&set, 1));
        for c in n {
            nil = &nil * &if c % 2 == 0 { var(&set, 2) } else { var(&set, 0) };
        }
        let u = &lead + &nil;
        let v = u.inverse().unwrap();
        prop_assert!((&u * &v).is_one());
        prop_assert!((&v * &u).is_one());
    }

    #[test]
    fn print_parse_round_trip(p in arb_poly()) {
        let set = ring();
        let printed = p.to_string_with(&set);
        prop_assert_eq!(parse_poly(&set, &printed).unwrap(), p);
    }
}
