//! Square-free decomposition over the rationals (Yun's algorithm).
use num::Zero;

use crate::error::{Error, Result};
use crate::poly::RatPoly;

/// Pairwise-coprime square-free factors with multiplicities; their product
/// (times a nonzero scalar) equals `p`.  Constant `p` yields an empty list.
pub fn squarefree_decompose(p: &RatPoly) -> Result<Vec<(RatPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (monic, _) = p.make_monic();
    if monic.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let dp = monic.derivative();
    let g = monic.gcd(&dp);
    let mut w = monic.div_rem(&g).unwrap().0; // product of distinct factors
    let mut y = dp.div_rem(&g).unwrap().0;
    let mut mult = 1;
    loop {
        let z = &y - &w.derivative();
        if z.is_zero() {
            if w.degree().unwrap_or(0) > 0 {
                out.push((w.make_monic().0, mult));
            }
            break;
        }
        let f = w.gcd(&z);
        if f.degree().unwrap_or(0) > 0 {
            out.push((f.make_monic().0, mult));
        }
        w = w.div_rem(&f).unwrap().0;
        y = z.div_rem(&f).unwrap().0;
        mult += 1;
    }
    Ok(out)
}

/// Multiplicity of the root 0 (number of leading zero coefficients).
pub fn zero_root_multiplicity(p: &RatPoly) -> usize {
    let mut k = 0;
    while k < p.coeffs().len() && p.coeff(k).is_zero() {
        k += 1;
    }
    if k == p.coeffs().len() {
        0
    } else {
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;
    use crate::rational::{rat, rat_i64, Rational};

    #[test]
    fn simple_cases() {
        // x^2 (x+1)
        let p = RatPoly::from_i64(&[0, 0, 1, 1]);
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d, vec![(RatPoly::from_i64(&[1, 1]), 1), (RatPoly::from_i64(&[0, 1]), 2)]);

        // (x+1)^7
        let p = RatPoly::from_i64(&[1, 1]).pow(7);
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d, vec![(RatPoly::from_i64(&[1, 1]), 7)]);
    }

    #[test]
    fn distinct_roots_single_factor() {
        let p = RatPoly::new(vec![rat_i64(6), rat(35, 3), rat(20, 3), rat_i64(1)]);
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 1);
        assert_eq!(d[0].0.degree(), Some(3));
    }

    #[test]
    fn product_reconstructs() {
        let p = &RatPoly::from_i64(&[0, 1]).pow(3)
            * &(&RatPoly::from_i64(&[-1, 1]).pow(2) * &RatPoly::from_i64(&[5, 3, 1]));
        let d = squarefree_decompose(&p).unwrap();
        let mut prod = RatPoly::one();
        for (f, m) in &d {
            prod = &prod * &f.pow(*m);
        }
        let (pm, _) = p.make_monic();
        assert_eq!(prod, pm);
        // pairwise coprime
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                assert_eq!(d[i].0.gcd(&d[j].0).degree(), Some(0));
            }
        }
    }

    #[test]
    fn rejects_zero() {
        assert!(squarefree_decompose(&RatPoly::zero()).is_err());
        assert_eq!(zero_root_multiplicity(&RatPoly::from_i64(&[0, 0, 5, 1])), 2);
        assert_eq!(zero_root_multiplicity(&RatPoly::from_i64(&[1, 1])), 0);
        assert_eq!(zero_root_multiplicity(&RatPoly::zero()), 0);
        assert!(Rational::zero().is_zero());
    }
}
