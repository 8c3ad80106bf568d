use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::shell::ShellSpec;
use crate::scalar::Scalar;
use crate::width::insphere::eggleston_bound;

/// Parameters of the lattice net in dimension `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NetSpec {
    pub n: usize,
    pub alpha: Scalar,
    /// Lattice spacing; exact when `alpha` is exact and `n` is a perfect square.
    pub kappa: Scalar,
    /// Outer radius of the class of bodies, `b/(1-b)` with `b = √(n/(2n+2))`.
    pub r_n: f64,
    pub inner: f64,
    pub outer: f64,
    /// True when `kappa` came from the formula rather than an override.
    pub kappa_from_alpha: bool,
}

/// `r_n = b/(1-b)`, `b = √(n/(2n+2))`.
pub fn r_n(n: usize) -> f64 {
    let b = eggleston_bound(n);
    b / (1.0 - b)
}

fn check_alpha(alpha: &Scalar) -> Result<()> {
    let a = alpha.to_f64();
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::InvalidArgument(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    Ok(())
}

fn sqrt_n(n: usize) -> f64 {
    (n as f64).sqrt()
}

/// `κ = (1 - α)/(4√n)`, exact when possible.
pub fn kappa_for(n: usize, alpha: &Scalar) -> Scalar {
    let root = n.sqrt();
    match alpha.as_exact() {
        Some(a) if root * root == n => {
            let one = BigRational::from_integer(BigInt::from(1));
            Scalar::Exact((one - a) / BigRational::from_integer(BigInt::from(4 * root)))
        }
        _ => Scalar::float((1.0 - alpha.to_f64()) / (4.0 * sqrt_n(n))),
    }
}

impl NetSpec {
    /// Net radius `√n·κ`: every body lies this close to its snapped polytope.
    pub fn beta(&self) -> f64 {
        sqrt_n(self.n) * self.kappa.to_f64()
    }

    /// Largest Hausdorff error the conclusion tolerates, `¼(1-α)`.
    pub fn epsilon_allowed(&self) -> f64 {
        0.25 * (1.0 - self.alpha.to_f64())
    }

    pub fn shell(&self) -> Result<ShellSpec> {
        ShellSpec::new(self.inner, self.outer)
    }

    /// Shell in lattice units (coordinates divided by `κ`).
    pub fn lattice_shell(&self) -> Result<ShellSpec> {
        let k = self.kappa.to_f64();
        ShellSpec::new(self.inner / k, self.outer / k)
    }

    /// Spec with an explicit lattice spacing.
    pub fn with_kappa(n: usize, alpha: Scalar, kappa: Scalar) -> Result<NetSpec> {
        let s = NetSpec::unchecked(n, alpha, kappa)?;
        if s.inner <= 0.0 {
            return Err(Error::InvalidArgument(format!("inner radius 1 - √n·κ = {} is not positive", s.inner)));
        }
        Ok(s)
    }

    fn unchecked(n: usize, alpha: Scalar, kappa: Scalar) -> Result<NetSpec> {
        check_alpha(&alpha)?;
        if n == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        if !(kappa.to_f64() > 0.0) {
            return Err(Error::InvalidArgument("kappa must be positive".into()));
        }
        let kappa_from_alpha = kappa == kappa_for(n, &alpha);
        let beta = sqrt_n(n) * kappa.to_f64();
        let inner = 1.0 - beta;
        let r = r_n(n);
        Ok(NetSpec {
            n,
            alpha,
            kappa,
            r_n: r,
            inner,
            outer: r + beta,
            kappa_from_alpha,
        })
    }

    /// Spec with explicit shell radii, for small experiments.
    pub fn with_shell(n: usize, alpha: Scalar, kappa: Scalar, inner: f64, outer: f64) -> Result<NetSpec> {
        let mut s = NetSpec::unchecked(n, alpha, kappa)?;
        ShellSpec::new(inner, outer)?;
        s.inner = inner;
        s.outer = outer;
        Ok(s)
    }
}

pub fn make_spec(n: usize, alpha: Scalar) -> Result<NetSpec> {
    check_alpha(&alpha)?;
    let kappa = kappa_for(n, &alpha);
    NetSpec::with_kappa(n, alpha, kappa)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_four_dims() {
        let s = make_spec(4, Scalar::ratio(995, 1000)).unwrap();
        assert_eq!(s.kappa, Scalar::ratio(1, 1600));
        assert!((s.r_n - (10f64.sqrt() + 2.0) / 3.0).abs() < 1e-12);
        assert!(s.kappa_from_alpha);
    }

    #[test]
    fn small_dims() {
        let s1 = make_spec(1, Scalar::ratio(1, 2)).unwrap();
        assert_eq!(s1.kappa, Scalar::ratio(1, 8));
        let s2 = make_spec(2, Scalar::float(0.9)).unwrap();
        assert!((s2.kappa.to_f64() - 0.1 / (4.0 * 2f64.sqrt())).abs() < 1e-15);
        assert!((s2.r_n - 1.3660254037844386).abs() < 1e-12);
        assert!((s2.beta() - s2.epsilon_allowed()).abs() < 1e-15);
    }

    #[test]
    fn bad_alpha() {
        assert!(make_spec(2, Scalar::int(1)).is_err());
        assert!(make_spec(2, Scalar::float(-0.1)).is_err());
        assert!(NetSpec::with_kappa(2, Scalar::float(0.9), Scalar::float(0.8)).is_err());
    }
}
