//! Entire functions of the form `e^x Y(x)` with `Y` a rational polynomial,
//! and the Schur-Szego composition restricted to that class.
//!
//! The closed form is exact; Taylor coefficients `gamma_j` (of `x^j / j!`)
//! are materialized only for cross-checks against the series definition of
//! the composition.

use num::Zero;

use crate::error::{Error, Result};
use crate::gauss::GaussRational;
use crate::gauss_poly::GaussRatPoly;
use crate::poly::RatPoly;
use crate::rational::{rat_i64, Rational};

/// `e^x * y(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpForm {
    pub y: RatPoly,
}

impl ExpForm {
    pub fn new(y: RatPoly) -> Self {
        ExpForm { y }
    }

    /// `e^x` itself.
    pub fn exp() -> Self {
        ExpForm { y: RatPoly::one() }
    }

    /// Derivative: `(e^x Y)' = e^x (Y + Y')`.
    pub fn derivative(&self) -> ExpForm {
        ExpForm { y: &self.y + &self.y.derivative() }
    }

    /// Taylor coefficient of `x^j / j!`:
    /// `gamma_j = sum_k y_k * j!/(j-k)! = sum_k y_k (j)_k`.
    pub fn gamma(&self, j: usize) -> Rational {
        let mut acc = Rational::zero();
        let mut falling = Rational::from_integer(1.into());
        for (k, yk) in self.y.coeffs().iter().enumerate() {
            if k > 0 {
                if j + 1 == k {
                    // (j)_k vanishes for k > j
                    return acc;
                }
                falling = falling * rat_i64((j + 1 - k) as i64);
            }
            acc = acc + yk * &falling;
        }
        acc
    }

    /// The series `gamma_0 ... gamma_n`.
    pub fn series(&self, n: usize) -> Vec<Rational> {
        (0..=n).map(|j| self.gamma(j)).collect()
    }
}

/// `e^x (alpha x + beta) * e^x Y = e^x (alpha x (Y + Y') + beta Y)`.
///
/// The composition factor `kappa_a = e^x (1 + x/a)` is `(1/a, 1)`; the
/// factor `e^x x` is `(1, 0)`; `e^x c` is `(0, c)`.
pub fn exp_apply_factor(alpha: &Rational, beta: &Rational, f: &ExpForm) -> Result<ExpForm> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::InvalidArgument("factor (0, 0) is identically zero".into()));
    }
    let x = RatPoly::from_i64(&[0, 1]);
    let sum = &f.y + &f.y.derivative();
    let y = &(&x * &sum).scale(alpha) + &f.y.scale(beta);
    Ok(ExpForm { y })
}

/// Gaussian-coefficient variant, used internally for conjugate-couple
/// chains; the public surface stays rational.
pub fn exp_apply_factor_gauss(
    alpha: &GaussRational,
    beta: &GaussRational,
    y: &GaussRatPoly,
) -> Result<GaussRatPoly> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::InvalidArgument("factor (0, 0) is identically zero".into()));
    }
    // derivative of y
    let dy = GaussRatPoly::new(
        y.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let s = rat_i64(i as i64);
                GaussRational::new(&c.re * &s, &c.im * &s)
            })
            .collect(),
    );
    let sum = &dy + y;
    // alpha * x * sum
    let mut shifted = vec![GaussRational::zero()];
    for c in sum.coeffs() {
        shifted.push(alpha.clone() * c.clone());
    }
    let term1 = GaussRatPoly::new(shifted);
    let term2 = GaussRatPoly::new(
        y.coeffs().iter().map(|c| beta.clone() * c.clone()).collect(),
    );
    Ok(&term1 + &term2)
}

/// Entrywise product of two Taylor coefficient lists through index `n` —
/// the series definition of the composition, kept as an independent oracle.
pub fn exp_truncated_compose(
    gamma: &[Rational],
    delta: &[Rational],
    n: usize,
) -> Result<Vec<Rational>> {
    if gamma.len() <= n || delta.len() <= n {
        return Err(Error::InvalidArgument(format!(
            "need at least {} coefficients on both sides",
            n + 1
        )));
    }
    Ok((0..=n).map(|j| &gamma[j] * &delta[j]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num::One;

    #[test]
    fn gamma_of_exp_x() {
        // e^x * x: gamma_j = j
        let f = ExpForm::new(RatPoly::from_i64(&[0, 1]));
        assert_eq!(f.series(5), (0..=5).map(|j| rat_i64(j)).collect::<Vec<_>>());
    }

    #[test]
    fn apply_x_factor_twice() {
        // (1,0) on e^x*1 -> e^x x; again -> e^x x(x+1)
        let f = exp_apply_factor(&Rational::one(), &Rational::zero(), &ExpForm::exp()).unwrap();
        assert_eq!(f.y, RatPoly::from_i64(&[0, 1]));
        let g = exp_apply_factor(&Rational::one(), &Rational::zero(), &f).unwrap();
        assert_eq!(g.y, RatPoly::from_i64(&[0, 1, 1]));
    }

    #[test]
    fn kappa_chain_example() {
        // kappa_1 * kappa_2 applied to e^x: Y = 1 + 2x + x^2/2,
        // gamma_j = (1+j)(2+j)/2
        let f = exp_apply_factor(&rat_i64(1), &Rational::one(), &ExpForm::exp()).unwrap();
        let g = exp_apply_factor(&rat(1, 2), &Rational::one(), &f).unwrap();
        assert_eq!(g.y, RatPoly::new(vec![rat_i64(1), rat_i64(2), rat(1, 2)]));
        for j in 0..10i64 {
            assert_eq!(g.gamma(j as usize), rat((1 + j) * (2 + j), 2));
        }
    }

    #[test]
    fn truncated_compose_identity() {
        let e = ExpForm::exp().series(8);
        let f = ExpForm::new(RatPoly::from_i64(&[3, -2, 5])).series(8);
        assert_eq!(exp_truncated_compose(&e, &f, 8).unwrap(), f);
        let ones = vec![Rational::one(); 9];
        assert_eq!(exp_truncated_compose(&ones, &ones, 8).unwrap(), ones);
    }

    #[test]
    fn series_oracle_for_apply() {
        // e^x(2x + 3) * e^x Y matches the entrywise series product
        let y = RatPoly::from_i64(&[1, -4, 0, 2]);
        let f = ExpForm::new(y);
        let factor = ExpForm::new(RatPoly::from_i64(&[3, 2]));
        let applied = exp_apply_factor(&rat_i64(2), &rat_i64(3), &f).unwrap();
        let n = 25;
        let oracle =
            exp_truncated_compose(&factor.series(n), &f.series(n), n).unwrap();
        assert_eq!(applied.series(n), oracle);
    }

    #[test]
    fn zero_factor_rejected() {
        assert!(exp_apply_factor(&Rational::zero(), &Rational::zero(), &ExpForm::exp()).is_err());
    }
}
