use super::*;
use crate::gf2::BitMatrix;

fn p() -> Ver4Object {
    Ver4Object::projective()
}

#[test]
fn decompose_basics() {
    assert_eq!(Ver4Object::zero().decompose(), (0, 0));
    assert_eq!(p().decompose(), (0, 1));
    assert_eq!(p().tensor(&p()).decompose(), (0, 2));
    let x = Ver4Object::from_mn(1, 1);
    assert_eq!(x.tensor(&x).decompose(), (1, 4));
}

#[test]
fn invalid_d_rejected() {
    let d = BitMatrix::identity(2);
    assert!(Ver4Object::new(d).is_err());
}

#[test]
fn unit_tensor_is_identity() {
    let x = Ver4Object::from_mn(2, 1);
    assert_eq!(Ver4Object::unit().tensor(&x), x);
}

#[test]
fn braiding_on_p() {
    let c = braiding(&p(), &p());
    // x ⊗ x ↦ x ⊗ x + x' ⊗ x'; basis x=0, x'=1, so x⊗x=0 and x'⊗x'=3
    assert!(c.matrix.get(0, 0));
    assert!(c.matrix.get(3, 0));
    assert_eq!(c.matrix.mul(&c.matrix), BitMatrix::identity(4));
    let unit = braiding(&Ver4Object::unit(), &Ver4Object::unit());
    assert_eq!(unit.matrix, BitMatrix::identity(1));
}

#[test]
fn sym_powers_of_p() {
    assert_eq!(sym_power(&p(), 0).decompose(), (1, 0));
    assert_eq!(sym_power(&p(), 2).decompose(), (2, 0));
    assert_eq!(sym_power(&p(), 3).decompose(), (0, 1));
}

#[test]
fn frobenius_values() {
    assert_eq!(frobenius(&Ver4Object::unit()).decompose(), (1, 0));
    assert_eq!(frobenius(&p()).dim(), 0);
    assert_eq!(frobenius(&Ver4Object::from_mn(1, 1)).decompose(), (1, 0));
}

#[test]
fn object_grammar() {
    assert_eq!(parse_object_expr("P⊗P").unwrap().decompose(), (0, 2));
    assert_eq!(parse_object_expr("(1+P)*(1+P)").unwrap().decompose(), (1, 4));
    assert_eq!(parse_object_expr("3+2P").unwrap().decompose(), (3, 2));
    assert!(parse_object_expr("Q").is_err());
}
