use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact number `a + b·√3` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt3 {
    pub a: BigRational,
    pub b: BigRational,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QSqrt3 {
    pub fn new(a: BigRational, b: BigRational) -> QSqrt3 {
        QSqrt3 { a, b }
    }

    pub fn rational(a: BigRational) -> QSqrt3 {
        QSqrt3 { a, b: BigRational::zero() }
    }

    /// `an/ad + (bn/bd)·√3`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> QSqrt3 {
        QSqrt3 { a: q(an, ad), b: q(bn, bd) }
    }

    pub fn zero() -> QSqrt3 {
        QSqrt3::rational(BigRational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }

    pub fn signum(&self) -> Ordering {
        let (sa, sb) = (self.a.cmp(&BigRational::zero()), self.b.cmp(&BigRational::zero()));
        if sa == sb || sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // Opposite signs: compare a² with 3b².
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * BigRational::from_integer(BigInt::from(3));
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn abs(&self) -> QSqrt3 {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl Add for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, o: QSqrt3) -> QSqrt3 {
        QSqrt3 {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl Sub for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, o: QSqrt3) -> QSqrt3 {
        QSqrt3 {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Mul for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, o: QSqrt3) -> QSqrt3 {
        let three = BigRational::from_integer(BigInt::from(3));
        QSqrt3 {
            a: &self.a * &o.a + three * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3 { a: -self.a, b: -self.b }
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}·√3", self.b),
            _ => write!(f, "{} {} {}·√3", self.a, if self.b.is_negative() { "-" } else { "+" }, self.b.abs()),
        }
    }
}

/// Squared Euclidean distance between exact planar points.
pub fn dist2(p: &[QSqrt3; 2], r: &[QSqrt3; 2]) -> QSqrt3 {
    let dx = p[0].clone() - r[0].clone();
    let dy = p[1].clone() - r[1].clone();
    dx.clone() * dx + dy.clone() * dy
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_sign() {
        let s = QSqrt3::from_ratios(0, 1, 1, 1);
        assert_eq!(s.clone() * s.clone(), QSqrt3::from_ratios(3, 1, 0, 1));
        // 2 - √3 > 0, 1 - √3 < 0
        assert_eq!(QSqrt3::from_ratios(2, 1, -1, 1).signum(), Ordering::Greater);
        assert_eq!(QSqrt3::from_ratios(1, 1, -1, 1).signum(), Ordering::Less);
        assert!((QSqrt3::from_ratios(1, 2, 1, 3).to_f64() - (0.5 + 3f64.sqrt() / 3.0)).abs() < 1e-15);
        assert_eq!(QSqrt3::from_ratios(1, 2, -1, 3).to_string(), "1/2 - 1/3·√3");
    }
}
