//! Numbers that are exact rationals when the inputs allow it, and floats otherwise.
//!
//! Mixed arithmetic decays to float. Comparisons between two exact values are
//! exact; anything involving a float uses an absolute tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Default tolerance for float-mode geometric comparisons.
pub const TOL_GEOM: f64 = 1e-9;

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(BigRational::one())
    }

    pub fn int(v: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn float(v: f64) -> Self {
        Scalar::Float(v)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rational_to_f64(r),
            Scalar::Float(v) => *v,
        }
    }

    /// Drops exactness.
    pub fn to_float(&self) -> Scalar {
        Scalar::Float(self.to_f64())
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(v) => Scalar::Float(v.abs()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(v) => *v == 0.0,
        }
    }

    /// Integer power (p >= 0), exact when `self` is exact.
    pub fn powi(&self, p: u32) -> Scalar {
        match self {
            Scalar::Exact(r) => {
                let mut acc = BigRational::one();
                for _ in 0..p {
                    acc *= r;
                }
                Scalar::Exact(acc)
            }
            Scalar::Float(v) => Scalar::Float(v.powi(p as i32)),
        }
    }

    /// Compare with tolerance. Two exact values compare exactly.
    pub fn cmp_tol(&self, other: &Scalar, tol: f64) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                if (a - b).abs() <= tol {
                    Ordering::Equal
                } else if a < b {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn gt_tol(&self, other: &Scalar, tol: f64) -> bool {
        self.cmp_tol(other, tol) == Ordering::Greater
    }

    pub fn eq_tol(&self, other: &Scalar, tol: f64) -> bool {
        self.cmp_tol(other, tol) == Ordering::Equal
    }

    /// Parses a decimal literal, an integer, or `p/q`.
    ///
    /// Integers and `p/q` are always exact. Decimal literals (with `.` or an
    /// exponent) are exact only when `exact_decimals` is set.
    pub fn parse(token: &str, exact_decimals: bool) -> Result<Scalar, String> {
        let t = token.trim();
        if t.is_empty() {
            return Err("empty number".into());
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in '{t}'"))?;
            let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in '{t}'"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in '{t}'"));
            }
            return Ok(Scalar::Exact(BigRational::new(p, q)));
        }
        if let Ok(i) = t.parse::<BigInt>() {
            return Ok(Scalar::Exact(BigRational::from_integer(i)));
        }
        if exact_decimals {
            if let Some(r) = parse_decimal_exact(t) {
                return Ok(Scalar::Exact(r));
            }
        }
        t.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(Scalar::Float)
            .ok_or_else(|| format!("not a number: '{t}'"))
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerators/denominators: scale down by shifting.
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Exact value of a decimal literal such as `-1.25e-3`.
fn parse_decimal_exact(t: &str) -> Option<BigRational> {
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut num: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Some(r)
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    _ => Scalar::Float(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) if !b.is_zero() => Scalar::Exact(a / b),
            _ => Scalar::Float(self.to_f64() / rhs.to_f64()),
        }
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        (&self).div(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(-a),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}

impl PartialEq for Scalar {
    /// Structural equality: exact values equal exactly, floats bitwise-equal by value.
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => a == b,
            _ => false,
        }
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Float(v)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Exact(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            // Debug formatting keeps a decimal point, so floats re-parse as floats.
            Scalar::Float(v) => write!(f, "{v:?}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Float(v) => s.serialize_f64(*v),
            Scalar::Exact(_) => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            F(f64),
            S(String),
        }
        match Repr::deserialize(d)? {
            Repr::F(v) => Ok(Scalar::Float(v)),
            Repr::S(s) => Scalar::parse(&s, true).map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Scalar::parse("3", false).unwrap(), Scalar::int(3));
        assert_eq!(Scalar::parse("-6/4", false).unwrap(), Scalar::ratio(-3, 2));
        assert_eq!(Scalar::parse("0.5", false).unwrap(), Scalar::Float(0.5));
        assert_eq!(Scalar::parse("0.5", true).unwrap(), Scalar::ratio(1, 2));
        assert_eq!(Scalar::parse("1.25e-1", true).unwrap(), Scalar::ratio(1, 8));
        assert_eq!(Scalar::parse("0.000625", true).unwrap(), Scalar::ratio(1, 1600));
        assert!(Scalar::parse("1/0", false).is_err());
        assert!(Scalar::parse("abc", true).is_err());
        assert!(Scalar::parse("inf", false).is_err());
    }

    #[test]
    fn display_reparses() {
        for s in [Scalar::ratio(7, 3), Scalar::int(-4), Scalar::Float(1.0), Scalar::Float(1e-12)] {
            let back = Scalar::parse(&s.to_string(), false).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn exact_comparison_ignores_tolerance() {
        let a = Scalar::ratio(1, 1_000_000_000_000);
        assert!(a.gt_tol(&Scalar::zero(), 1.0));
        assert!(Scalar::Float(1e-12).eq_tol(&Scalar::zero(), 1e-9));
    }

    #[test]
    fn mixed_arithmetic_decays() {
        let s = Scalar::ratio(1, 2) + Scalar::Float(0.25);
        assert!(!s.is_exact());
        assert_eq!(s.to_f64(), 0.75);
        let e = Scalar::ratio(1, 2) * Scalar::ratio(2, 3);
        assert_eq!(e, Scalar::ratio(1, 3));
    }
}
