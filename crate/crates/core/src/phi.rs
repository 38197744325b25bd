//! The affine coefficient-to-symmetric-function map Φ.
//!
//! Polynomial mode: P = (x+1)(x^{n−1} + c₁x^{n−2} + … + c_{n−1}) maps to the
//! elementary symmetric functions σ_j of its composition parameters a_i.
//! Exponential mode: R = 1 + c̃₁x + … + c̃_{n−1}x^{n−1} maps to
//! σ̃_j = e_j(1/a_i), which equals the t^j-coefficient of the transformed
//! node polynomial G(t) = Σ_k c̃_k (t)_k.
//!
//! The map is materialized exactly by pushing the zero vector (offset) and
//! the unit coordinate vectors (columns) through the extraction, then
//! cross-checked for affinity on seeded pseudo-random inputs.

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decompose::node_polynomial;
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::{rat, rat_i64, Rational};
use crate::signature::Mode;
use crate::stirling::falling_to_monomial;

/// Exact affine map c ↦ matrix·c + offset on (n−1)-vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub n: usize,
    pub mode: Mode,
    /// Row-major (n−1)×(n−1).
    pub matrix: Vec<Vec<Rational>>,
    pub offset: Vec<Rational>,
}

impl AffineMap {
    pub fn dim(&self) -> usize {
        self.n - 1
    }

    pub fn apply(&self, c: &[Rational]) -> Result<Vec<Rational>> {
        if c.len() != self.dim() {
            return Err(Error::InvalidArgument(format!(
                "expected a vector of length {}, got {}",
                self.dim(),
                c.len()
            )));
        }
        Ok(self
            .matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, off)| {
                row.iter()
                    .zip(c)
                    .fold(off.clone(), |acc, (m, x)| acc + m * x)
            })
            .collect())
    }
}

/// σ-extraction for one coefficient vector, polynomial mode.
fn sigma_poly(c: &[Rational], n: usize) -> Result<Vec<Rational>> {
    // S = x^{n-1} + c₁x^{n-2} + … + c_{n-1}, ascending storage.
    let mut s_coeffs: Vec<Rational> = c.iter().rev().cloned().collect();
    s_coeffs.push(Rational::one());
    let s = RatPoly::new(s_coeffs);
    let p = &RatPoly::linear(rat_i64(1)) * &s;
    let q = node_polynomial(&p, n)?;
    if q.degree() != Some(n - 1) || !q.leading_coeff().map_or(false, |l| l.is_one()) {
        return Err(Error::InvalidArgument(
            "node polynomial is not monic of full degree".into(),
        ));
    }
    // σ_j is the coefficient of t^{n-1-j} in the monic Q.
    Ok((1..n).map(|j| q.coeff(n - 1 - j)).collect())
}

/// σ̃-extraction for one coefficient vector, exponential mode.
fn sigma_exp(c: &[Rational], n: usize) -> Vec<Rational> {
    let mut r_coeffs = vec![Rational::one()];
    r_coeffs.extend(c.iter().cloned());
    let g = falling_to_monomial(&r_coeffs);
    (1..n)
        .map(|j| g.get(j).cloned().unwrap_or_else(Rational::zero))
        .collect()
}

fn sigma(c: &[Rational], n: usize, mode: Mode) -> Result<Vec<Rational>> {
    match mode {
        Mode::Polynomial => sigma_poly(c, n),
        Mode::Exponential => Ok(sigma_exp(c, n)),
    }
}

/// Exact determinant by fraction-based Gaussian elimination.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let dim = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for col in 0..dim {
        let pivot = match (col..dim).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Rational::zero(),
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for row in col + 1..dim {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &pv;
            for k in col..dim {
                let sub = &factor * &a[col][k];
                a[row][k] = &a[row][k] - &sub;
            }
        }
    }
    det
}

/// Exact characteristic polynomial det(xI − M) via Faddeev–LeVerrier.
pub fn char_poly(m: &[Vec<Rational>]) -> RatPoly {
    let dim = m.len();
    let mut coeffs = vec![Rational::zero(); dim + 1];
    coeffs[dim] = Rational::one();
    // M_1 = M; c_k = -tr(M·B_{k-1})/k with B_k = M_k + c_k I.
    let mut b: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for k in 1..=dim {
        // M_k = M · B_{k-1}
        let mk: Vec<Vec<Rational>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        (0..dim).fold(Rational::zero(), |acc, l| acc + &m[i][l] * &b[l][j])
                    })
                    .collect()
            })
            .collect();
        let trace = (0..dim).fold(Rational::zero(), |acc, i| acc + &mk[i][i]);
        let ck = -trace / rat_i64(k as i64);
        coeffs[dim - k] = ck.clone();
        b = mk;
        for i in 0..dim {
            b[i][i] = &b[i][i] + &ck;
        }
    }
    RatPoly::new(coeffs)
}

/// Materialize Φ exactly and verify affinity on seeded random vectors.
pub fn phi_affine(n: usize, mode: Mode) -> Result<AffineMap> {
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    let dim = n - 1;
    let zero_vec = vec![Rational::zero(); dim];
    let offset = sigma(&zero_vec, n, mode)?;
    let mut columns = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut e = zero_vec.clone();
        e[i] = Rational::one();
        let img = sigma(&e, n, mode)?;
        let col: Vec<Rational> = img
            .iter()
            .zip(&offset)
            .map(|(v, o)| v - o)
            .collect();
        columns.push(col);
    }
    let matrix: Vec<Vec<Rational>> = (0..dim)
        .map(|row| (0..dim).map(|col| columns[col][row].clone()).collect())
        .collect();
    let map = AffineMap {
        n,
        mode,
        matrix,
        offset,
    };
    // Affinity cross-check on deterministic pseudo-random vectors.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a5a_0000 + n as u64);
    for _ in 0..8 {
        let c: Vec<Rational> = (0..dim)
            .map(|_| rat(rng.gen_range(-40i64..40), rng.gen_range(1i64..8)))
            .collect();
        if sigma(&c, n, mode)? != map.apply(&c)? {
            return Err(Error::InvalidArgument(
                "extraction is not affine; coefficient convention violated".into(),
            ));
        }
    }
    if determinant(&map.matrix).is_zero() {
        return Err(Error::InvalidArgument(
            "affine map is degenerate".into(),
        ));
    }
    Ok(map)
}

/// Eigenvalue analysis of the linear part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub n: usize,
    pub mode: Mode,
    /// Eigenvalues with algebraic multiplicity, when the characteristic
    /// polynomial splits over the rationals.
    pub eigenvalues: Vec<(Rational, usize)>,
    pub splits: bool,
    pub all_positive: bool,
    pub char_poly: RatPoly,
}

/// Compute the characteristic polynomial of Φ's linear part exactly and
/// extract its rational roots.  A non-splitting characteristic polynomial is
/// reported, not masked.
pub fn phi_eigen_check(n: usize, mode: Mode) -> Result<EigenReport> {
    let map = phi_affine(n, mode)?;
    let cp = char_poly(&map.matrix);
    let roots = cp.rational_roots();
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    let splits = total == map.dim();
    let all_positive = splits && roots.iter().all(|(r, _)| r.is_positive());
    Ok(EigenReport {
        n,
        mode,
        eigenvalues: roots,
        splits,
        all_positive,
        char_poly: cp,
    })
}

/// Eigen reports for a range of n in both modes.
pub fn phi_report(n_lo: usize, n_hi: usize) -> Result<Vec<EigenReport>> {
    if n_lo < 2 || n_hi < n_lo {
        return Err(Error::InvalidArgument("need 2 <= n_lo <= n_hi".into()));
    }
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        out.push(phi_eigen_check(n, Mode::Polynomial)?);
        out.push(phi_eigen_check(n, Mode::Exponential)?);
    }
    Ok(out)
}
