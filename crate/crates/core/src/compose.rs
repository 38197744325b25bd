//! The Schur-Szego composition of polynomials at a declared degree `n`,
//! together with the composition-factor constructors `K_a` and `K_inf`.
//!
//! The degree tag is explicit everywhere: composing the same coefficient
//! lists at a different declared degree is a different operation, so `n` is
//! never inferred from the data.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::GaussRational;
use crate::gauss_poly::GaussRatPoly;
use crate::poly::RatPoly;
use crate::rational::{binomial, rat_i64, Rational};

/// A polynomial together with its declared composition degree.
/// `deg(poly) <= n`; degree-deficient entries (such as `K_inf`) are legal,
/// the composition result is then interpreted under the convention that at
/// least one composed polynomial has full degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTaggedPoly {
    poly: RatPoly,
    n: usize,
}

impl DegreeTaggedPoly {
    pub fn new(poly: RatPoly, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("composition degree must be >= 1".into()));
        }
        if poly.degree().map_or(false, |d| d > n) {
            return Err(Error::InvalidArgument(format!(
                "polynomial degree {} exceeds declared degree {}",
                poly.degree().unwrap(),
                n
            )));
        }
        Ok(DegreeTaggedPoly { poly, n })
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn into_poly(self) -> RatPoly {
        self.poly
    }
}

/// Gaussian-rational counterpart of [`DegreeTaggedPoly`], the carrier for
/// conjugate-couple factor arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussTaggedPoly {
    poly: GaussRatPoly,
    n: usize,
}

impl GaussTaggedPoly {
    pub fn new(poly: GaussRatPoly, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("composition degree must be >= 1".into()));
        }
        if poly.degree().map_or(false, |d| d > n) {
            return Err(Error::InvalidArgument("degree exceeds declared degree".into()));
        }
        Ok(GaussTaggedPoly { poly, n })
    }

    pub fn from_real(p: &DegreeTaggedPoly) -> Self {
        GaussTaggedPoly { poly: GaussRatPoly::from_real(p.poly()), n: p.n }
    }

    pub fn poly(&self) -> &GaussRatPoly {
        &self.poly
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// `A * B` at the shared declared degree: coefficient of `x^j` is
/// `a_j b_j / C(n, j)`.
pub fn schur_szego(a: &DegreeTaggedPoly, b: &DegreeTaggedPoly) -> Result<RatPoly> {
    if a.n != b.n {
        return Err(Error::DegreeMismatch(a.n, b.n));
    }
    let n = a.n;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        coeffs.push(a.poly.coeff(j) * b.poly.coeff(j) / binomial(n, j));
    }
    Ok(RatPoly::new(coeffs))
}

/// Gaussian-coefficient composition.
pub fn schur_szego_gauss(a: &GaussTaggedPoly, b: &GaussTaggedPoly) -> Result<GaussRatPoly> {
    if a.n != b.n {
        return Err(Error::DegreeMismatch(a.n, b.n));
    }
    let n = a.n;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let binv = Rational::one() / binomial(n, j);
        let prod = a.poly.coeff(j) * b.poly.coeff(j);
        coeffs.push(GaussRational::new(prod.re * &binv, prod.im * &binv));
    }
    Ok(GaussRatPoly::new(coeffs))
}

/// `A_1 * ... * A_s` at the shared declared degree (left fold; the result is
/// order-independent).
pub fn schur_szego_multi(factors: &[DegreeTaggedPoly]) -> Result<RatPoly> {
    let first = factors.first().ok_or(Error::EmptyFactorList)?;
    let n = first.n;
    let mut acc = first.poly.clone();
    for f in &factors[1..] {
        if f.n != n {
            return Err(Error::DegreeMismatch(n, f.n));
        }
        let tagged = DegreeTaggedPoly { poly: acc, n };
        acc = schur_szego(&tagged, f)?;
    }
    Ok(acc)
}

/// `K_a = (x+1)^{n-1} (x+a)`, tagged with degree `n`.
pub fn factor_k(a: &Rational, n: usize) -> DegreeTaggedPoly {
    let base = RatPoly::from_i64(&[1, 1]).pow(n - 1);
    let poly = &base * &RatPoly::linear(a.clone());
    DegreeTaggedPoly { poly, n }
}

/// Gaussian `K_a` for complex factor parameters.
pub fn factor_k_gauss(a: &GaussRational, n: usize) -> GaussTaggedPoly {
    let base = GaussRatPoly::from_real(&RatPoly::from_i64(&[1, 1]).pow(n - 1));
    let poly = &base * &GaussRatPoly::linear(a.clone());
    GaussTaggedPoly { poly, n }
}

/// `K_inf = (x+1)^{n-1}`, tagged with degree `n`.
pub fn factor_k_infinity(n: usize) -> DegreeTaggedPoly {
    DegreeTaggedPoly { poly: RatPoly::from_i64(&[1, 1]).pow(n - 1), n }
}

/// The reverted polynomial `x^n P(1/x)`: the coefficient list reversed
/// within `n + 1` slots.
pub fn revert(p: &DegreeTaggedPoly) -> DegreeTaggedPoly {
    let n = p.n;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for j in 0..=n {
        coeffs[n - j] = p.poly.coeff(j);
    }
    DegreeTaggedPoly { poly: RatPoly::new(coeffs), n }
}

/// Number of sign alternations in the nonzero coefficient sequence.
pub fn sign_changes(p: &RatPoly) -> Result<usize> {
    p.sign_changes()
}

/// Normalized coefficient of `K_a` at index `j`, times `n`:
/// `phi_j(a) = (n - j) a + j`.  The composition of factors is, coefficient
/// by coefficient, the product of these values over all factors divided by
/// `n^{n-1}` and rescaled by `C(n, j)`.
pub fn factor_coeff(a: &GaussRational, j: usize, n: usize) -> GaussRational {
    let nj = rat_i64((n - j) as i64);
    let jr = rat_i64(j as i64);
    GaussRational::new(&a.re * &nj + jr, &a.im * &nj)
}

/// Compose a whole factor multiset given by its parameter values (plus
/// `infinity` copies of `K_inf` and a scalar) directly through the
/// coefficient-product formula.  Imaginary parts must cancel exactly.
pub fn compose_factor_values(
    values: &[GaussRational],
    infinity: usize,
    scalar: &Rational,
    n: usize,
) -> Result<RatPoly> {
    let count = values.len() + infinity;
    if count != n - 1 {
        return Err(Error::InvalidArgument(format!(
            "need n-1 = {} factors, got {}",
            n - 1,
            count
        )));
    }
    let n_pow = Rational::from_integer(num::BigInt::from(n).pow((n - 1) as u32));
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut prod = GaussRational::one();
        for a in values {
            prod = prod * factor_coeff(a, j, n);
        }
        // K_inf contributes (n - j)/n, i.e. phi with "a" at infinity
        for _ in 0..infinity {
            prod = GaussRational::new(&prod.re * &rat_i64((n - j) as i64), &prod.im * &rat_i64((n - j) as i64));
        }
        if !prod.im.is_zero() {
            return Err(Error::InvalidArgument(
                "factor values are not closed under conjugation".into(),
            ));
        }
        let scale = binomial(n, j) * scalar / &n_pow;
        coeffs.push(prod.re * scale);
    }
    Ok(RatPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn k2_k3_example() {
        let k2 = factor_k(&rat_i64(2), 3);
        let k3 = factor_k(&rat_i64(3), 3);
        let p = schur_szego(&k2, &k3).unwrap();
        assert_eq!(
            p,
            RatPoly::new(vec![rat_i64(6), rat(35, 3), rat(20, 3), rat_i64(1)])
        );
    }

    #[test]
    fn formula_k_normalized_coeffs() {
        // coefficient of x^j in K_a is C(n,j) ((n-j) a + j)/n
        for n in 1..=6usize {
            let a = rat(3, 7);
            let k = factor_k(&a, n);
            for j in 0..=n {
                let expected = binomial(n, j)
                    * (rat_i64((n - j) as i64) * &a + rat_i64(j as i64))
                    / rat_i64(n as i64);
                assert_eq!(k.poly().coeff(j), expected);
            }
        }
    }

    #[test]
    fn identity_element() {
        let unit = DegreeTaggedPoly::new(RatPoly::from_i64(&[1, 1]).pow(4), 4).unwrap();
        let a = DegreeTaggedPoly::new(RatPoly::from_i64(&[3, -1, 0, 2, 5]), 4).unwrap();
        assert_eq!(schur_szego(&unit, &a).unwrap(), *a.poly());
    }

    #[test]
    fn factor_k_specials() {
        assert_eq!(*factor_k(&rat_i64(1), 5).poly(), RatPoly::from_i64(&[1, 1]).pow(5));
        assert_eq!(
            *factor_k(&rat_i64(0), 4).poly(),
            &RatPoly::from_i64(&[0, 1]) * &RatPoly::from_i64(&[1, 1]).pow(3)
        );
        // a = b_1 = -1/2 at n = 3: zero coefficient at x^1
        let k = factor_k(&rat(-1, 2), 3);
        assert_eq!(
            *k.poly(),
            RatPoly::new(vec![rat(-1, 2), rat_i64(0), rat(3, 2), rat_i64(1)])
        );
    }

    #[test]
    fn k_infinity_revert_formula() {
        // K_inf * A = A - x A'/n
        let n = 5usize;
        let a = DegreeTaggedPoly::new(RatPoly::from_i64(&[2, -3, 1, 0, 4, 7]), n).unwrap();
        let composed = schur_szego(&factor_k_infinity(n), &a).unwrap();
        let xd = &RatPoly::from_i64(&[0, 1]) * &a.poly().derivative();
        let expected = &a.poly().clone() - &xd.scale(&rat(1, n as i64));
        assert_eq!(composed, expected);
    }

    #[test]
    fn revert_involution_and_k() {
        let n = 4usize;
        let p = DegreeTaggedPoly::new(RatPoly::from_i64(&[3, 1, 0, 2, 5]), n).unwrap();
        assert_eq!(revert(&revert(&p)), p);
        // revert(K_a) = a K_{1/a}
        let a = rat(2, 3);
        let lhs = revert(&factor_k(&a, n));
        let rhs = factor_k(&(Rational::one() / &a), n).poly().scale(&a);
        assert_eq!(*lhs.poly(), rhs);
    }

    #[test]
    fn compose_factor_values_matches_multi() {
        let n = 4usize;
        let values = vec![
            GaussRational::from_real(rat_i64(2)),
            GaussRational::from_real(rat(-1, 3)),
            GaussRational::from_real(rat(5, 2)),
        ];
        let direct = compose_factor_values(&values, 0, &Rational::one(), n).unwrap();
        let factors: Vec<DegreeTaggedPoly> =
            values.iter().map(|v| factor_k(&v.re, n)).collect();
        assert_eq!(direct, schur_szego_multi(&factors).unwrap());
    }

    #[test]
    fn compose_conjugate_pair_is_real() {
        let n = 3usize;
        let z = GaussRational::new(rat(1, 2), rat(1, 3));
        let p = compose_factor_values(
            &[z.clone(), z.conj()],
            0,
            &Rational::one(),
            n,
        )
        .unwrap();
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn mismatched_degree_rejected() {
        let a = factor_k(&rat_i64(2), 3);
        let b = factor_k(&rat_i64(2), 4);
        assert!(schur_szego(&a, &b).is_err());
    }
}
