//! Polynomials with Gaussian-rational coefficients.  Only the operations
//! needed for conjugate-couple factor arithmetic live here; real results are
//! extracted through [`GaussRatPoly::into_real`], which checks that every
//! imaginary part vanished exactly.

use std::ops::{Add, Mul};

use num::Zero;

use crate::error::{Error, Result};
use crate::gauss::GaussRational;
use crate::poly::RatPoly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRatPoly {
    coeffs: Vec<GaussRational>,
}

impl GaussRatPoly {
    pub fn new(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        GaussRatPoly { coeffs }
    }

    pub fn zero() -> Self {
        GaussRatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        GaussRatPoly { coeffs: vec![GaussRational::one()] }
    }

    pub fn from_real(p: &RatPoly) -> Self {
        GaussRatPoly {
            coeffs: p.coeffs().iter().cloned().map(GaussRational::from_real).collect(),
        }
    }

    /// `x + a`.
    pub fn linear(a: GaussRational) -> Self {
        GaussRatPoly::new(vec![a, GaussRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> GaussRational {
        self.coeffs.get(j).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return GaussRatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * &GaussRational::from_real(crate::rational::rat_i64(j as i64)))
            .collect();
        GaussRatPoly::new(coeffs)
    }

    pub fn scale(&self, s: &GaussRational) -> Self {
        GaussRatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn conj(&self) -> Self {
        GaussRatPoly { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    pub fn eval(&self, x: &GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Demote to a real polynomial; errors if any imaginary part is nonzero.
    pub fn into_real(self) -> Result<RatPoly> {
        let mut v: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs {
            if !c.im.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "expected real polynomial, found imaginary part {}",
                    c.im
                )));
            }
            v.push(c.re);
        }
        Ok(RatPoly::new(v))
    }
}

impl Add for &GaussRatPoly {
    type Output = GaussRatPoly;
    fn add(self, rhs: &GaussRatPoly) -> GaussRatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        GaussRatPoly::new(v)
    }
}

impl Mul for &GaussRatPoly {
    type Output = GaussRatPoly;
    fn mul(self, rhs: &GaussRatPoly) -> GaussRatPoly {
        if self.is_zero() || rhs.is_zero() {
            return GaussRatPoly::zero();
        }
        let mut v = vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a * b;
            }
        }
        GaussRatPoly::new(v)
    }
}
