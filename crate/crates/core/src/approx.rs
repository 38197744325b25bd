//! Floating-point complex root approximation (Aberth-Ehrlich simultaneous
//! iteration).  Reporting only: nothing in the exact counting or
//! classification pipeline depends on these values.

use num::complex::Complex64;
use num::ToPrimitive;
use num::Zero;

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::Rational;
use crate::squarefree::squarefree_decompose;

/// An approximate root with its exact multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxRoot {
    pub value: Complex64,
    pub multiplicity: usize,
}

fn to_f64_coeffs(p: &RatPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::zero();
    let mut d = Complex64::zero();
    for &ck in c.iter().rev() {
        d = d * z + v;
        v = v * z + ck;
    }
    (v, d)
}

fn aberth(c: &[f64], max_iter: usize) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let radius = 1.0
        + c[..n]
            .iter()
            .map(|x| (x / lead).abs())
            .fold(0.0_f64, f64::max);
    // perturbed-circle initial guesses
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius * 0.7, theta)
        })
        .collect();
    for _ in 0..max_iter {
        let mut moved = 0.0_f64;
        for i in 0..n {
            let (v, d) = horner(c, z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let newton = if d.norm() > 0.0 { v / d } else { v };
            let mut s = Complex64::zero();
            for j in 0..n {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() > 1e-300 {
                        s += Complex64::new(1.0, 0.0) / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * s;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 * radius.max(1.0) {
            break;
        }
    }
    z
}

/// Approximate all complex roots of `p` (with exact multiplicities from the
/// square-free decomposition).  Each returned value satisfies
/// `|p(z)| / max|coeff| < tol`, otherwise an error with the best residual
/// is returned.
pub fn complex_roots_approx(p: &RatPoly, tol: &Rational) -> Result<Vec<ApproxRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if tol <= &Rational::zero() {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    let tol = tol.to_f64().unwrap_or(0.0);
    let full = to_f64_coeffs(p);
    let norm = full.iter().fold(0.0_f64, |a, &b| a.max(b.abs()));
    let mut out = Vec::new();
    let mut worst = 0.0_f64;
    for (factor, mult) in squarefree_decompose(p)? {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let c = to_f64_coeffs(&factor);
        let roots = aberth(&c, 400);
        for z in roots {
            let (v, _) = horner(&full, z);
            let residual = v.norm() / norm;
            worst = worst.max(residual);
            out.push(ApproxRoot { value: z, multiplicity: mult });
        }
    }
    if worst >= tol {
        return Err(Error::NonConvergence { best_residual: worst });
    }
    out.sort_by(|a, b| {
        (a.value.re, a.value.im)
            .partial_cmp(&(b.value.re, b.value.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(out)
}
