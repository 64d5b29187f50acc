use super::*;

fn ab() -> (GeneratorSet, Gen, Gen) {
    let set = GeneratorSet::new().with("A", true, false).with("B", false, false);
    let a = set.gen(0, 0);
    let b = set.gen(1, 0);
    (set, a, b)
}

fn p(set: &GeneratorSet, s: &str) -> BraidedPoly {
    parse_poly(set, s).unwrap()
}

#[test]
fn swap_rule() {
    let (set, a, b) = ab();
    let prod = &BraidedPoly::var(b) * &BraidedPoly::var(a);
    assert_eq!(prod, p(&set, "A*B + A'*B'"));
}

#[test]
fn prime_squares_to_zero() {
    let (set, _, _) = ab();
    assert!(p(&set, "A' A'").is_zero());
}

#[test]
fn even_exponent_swaps_freely() {
    let (set, _, _) = ab();
    assert_eq!(p(&set, "B^2 A"), p(&set, "A B^2"));
    assert_eq!(p(&set, "B A^2"), p(&set, "A^2 B"));
}

#[test]
fn square_of_ab() {
    let (set, _, _) = ab();
    assert_eq!(p(&set, "(A B)(A B)"), p(&set, "A^2 B^2 + A B A' B'"));
}

#[test]
fn derivatives() {
    let (set, _, _) = ab();
    assert_eq!(p(&set, "A^3").derive(), p(&set, "A^2 A'"));
    assert!(p(&set, "A'").derive().is_zero());
    assert_eq!(p(&set, "A^-1").derive(), p(&set, "A^-2 A'"));
}

#[test]
fn inverse_of_unit() {
    let (set, _, _) = ab();
    let u = p(&set, "A + A' B");
    let v = u.inverse().unwrap();
    assert!((&u * &v).is_one());
    assert!((&v * &u).is_one());
    assert!(p(&set, "B").inverse().is_err());
}

#[test]
fn negative_exponent_rejected() {
    let (set, _, _) = ab();
    assert!(parse_poly(&set, "B^-1").is_err());
}

#[test]
fn substitution_examples() {
    let (set, a, b) = ab();
    let mut s = Substitution::new()
        .with(a, BraidedPoly::one())
        .unwrap()
        .with(b, BraidedPoly::zero())
        .unwrap();
    assert!(s.apply(&p(&set, "A + A' B")).unwrap().is_one());

    let xi = p(&set, "1 + A^-1 B' + A^-2 B A'");
    let mut s = Substitution::new().with(a, BraidedPoly::one()).unwrap();
    assert_eq!(s.apply(&xi).unwrap(), p(&set, "1 + B'"));

    let mut s = Substitution::new().with(b, BraidedPoly::zero()).unwrap();
    let torus = s.apply(&xi).unwrap();
    // with a' also killed only the constant survives
    assert!(torus.terms().all(|m| m.is_one() || m.has_prime(a)));
}

#[test]
fn incoherent_prime_binding_rejected() {
    let (set, _, _) = ab();
    let b_gen = set.gen(1, 0);
    let s = Substitution::new().with(b_gen, p(&set, "A")).unwrap();
    assert!(s.check_prime_binding(b_gen, &p(&set, "A'")).is_ok());
    assert!(s.check_prime_binding(b_gen, &p(&set, "B'")).is_err());
}

#[test]
fn print_parse_round_trip() {
    let (set, _, _) = ab();
    let x = p(&set, "(A + B)^3 A^-2 + B'");
    let printed = x.to_string_with(&set);
    assert_eq!(p(&set, &printed), x);
}

#[test]
fn invertible_generator_needs_unit_image() {
    let (set, a, _) = ab();
    assert!(Substitution::new().with(a, p(&set, "B")).is_err());
    assert!(Substitution::new().with(a, p(&set, "A + B'")).is_ok());
}
