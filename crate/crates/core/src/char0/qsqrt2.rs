use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a + b√2` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QSqrt2 {
    a: BigRational,
    b: BigRational,
}

fn two_adic(n: &BigInt) -> i64 {
    n.trailing_zeros().map_or(0, |z| z as i64)
}

/// 2-adic valuation of a nonzero rational.
fn v2(q: &BigRational) -> i64 {
    two_adic(q.numer()) - two_adic(q.denom())
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QSqrt2::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    /// `(a_num/a_den) + (b_num/b_den)√2`.
    pub fn from_fracs(a: (i64, i64), b: (i64, i64)) -> Self {
        let r = |(n, d): (i64, i64)| BigRational::new(n.into(), d.into());
        QSqrt2::new(r(a), r(b))
    }

    pub fn zero() -> Self {
        QSqrt2::default()
    }

    pub fn one() -> Self {
        QSqrt2::from_ints(1, 0)
    }

    pub fn sqrt2() -> Self {
        QSqrt2::from_ints(0, 1)
    }

    /// `√2^k` for any integer `k`.
    pub fn sqrt2_pow(k: i32) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let two = BigRational::from_integer(BigInt::from(2));
        let base = if k >= 0 { two } else { half };
        let p = num_traits::pow(base, (k.unsigned_abs() / 2) as usize);
        if k.rem_euclid(2) == 0 {
            QSqrt2::new(p, BigRational::zero())
        } else if k > 0 {
            QSqrt2::new(BigRational::zero(), p)
        } else {
            // √2^{-(2j+1)} = √2 / 2^{j+1}
            QSqrt2::new(BigRational::zero(), p / BigRational::from_integer(BigInt::from(2)))
        }
    }

    pub fn rational(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a − b√2`.
    pub fn conjugate(&self) -> Self {
        QSqrt2::new(self.a.clone(), -self.b.clone())
    }

    /// `a² − 2b²`.
    pub fn norm(&self) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        &self.a * &self.a - two * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("division by zero in Q(√2)".into()));
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(QSqrt2::new(c.a / &n, c.b / n))
    }

    /// Valuation with `v(√2) = 1`; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => None,
            (false, true) => Some(2 * v2(&self.a)),
            (true, false) => Some(2 * v2(&self.b) + 1),
            (false, false) => Some((2 * v2(&self.a)).min(2 * v2(&self.b) + 1)),
        }
    }

    /// Image in `O/(√2) = F₂`; defined when both coordinates have odd
    /// denominators.
    pub fn residue(&self) -> Result<bool> {
        let odd = |q: &BigRational| two_adic(q.denom()) == 0;
        if !odd(&self.a) || !odd(&self.b) {
            return Err(Error::LatticeNotIntegral(format!("{self} has an even denominator")));
        }
        Ok(!self.a.is_zero() && two_adic(self.a.numer()) == 0)
    }
}

impl From<i64> for QSqrt2 {
    fn from(n: i64) -> Self {
        QSqrt2::from_ints(n, 0)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {sign} {}√2", self.a, self.b.abs())
            }
        }
    }
}

impl Add for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        let two = BigRational::from_integer(BigInt::from(2));
        QSqrt2::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a.clone(), -self.b.clone())
    }
}

impl Div for &QSqrt2 {
    type Output = Result<QSqrt2>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QSqrt2) -> Result<QSqrt2> {
        Ok(self * &rhs.inverse()?)
    }
}

macro_rules! by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QSqrt2 {
            type Output = <&'static QSqrt2 as $tr<&'static QSqrt2>>::Output;
            fn $m(self, rhs: QSqrt2) -> Self::Output {
                (&self).$m(&rhs)
            }
        }
    )*};
}

by_value!(Add add, Sub sub, Mul mul);

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -&self
    }
}
