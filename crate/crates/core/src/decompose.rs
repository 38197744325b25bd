//! Inverse problem: recover the factor multiset {a_i} from a composed
//! polynomial or from the polynomial part R of an exponential form e^x·R.
//!
//! Polynomial case: if P = K_{a_1}*…*K_{a_{n-1}} (with possible (x+1)^{n-1}
//! factors absorbing degree deficits), the binomially normalized coefficients
//! p_j = coeff_j / C(n,j) satisfy
//!     n^{n-1} · p_j / (n-j)^{n-1} = Q(j/(n-j)),   j = 0..n-1,
//! where Q(t) = scalar · Π_i (t + a_i).  Interpolating Q at those n nodes and
//! classifying its roots exactly recovers the multiset.
//!
//! Exponential case: with R = Σ c_k x^k, the polynomial G(t) = Σ c_k (t)_k
//! (falling-factorial transform) satisfies G(j) = γ_j = scalar · Π_i (j + a_i),
//! so the factors are again the negated roots of G.

use num::{One, Signed, Zero};

use crate::approx::complex_roots_approx;
use crate::compose::compose_factor_values;
use crate::error::{Error, Result};
use crate::expform::ExpForm;
use crate::gauss::GaussRational;
use crate::gauss_poly::GaussRatPoly;
use crate::interp::interpolate;
use crate::poly::RatPoly;
use crate::rational::{rat, rat_i64, rational_sqrt, rational_to_string, Rational};
use crate::squarefree::squarefree_decompose;
use crate::stirling::falling_to_monomial;
use crate::sturm::IsolatingInterval;

/// The recovered multiset of composition parameters.
///
/// `rational_factors` holds the nonzero rational a_i (with repetition),
/// `zeros` counts a_i = 0, `complex_pairs` holds one representative (positive
/// imaginary part) per exactly-recovered Gaussian-rational conjugate pair, and
/// `approx_complex_pairs` holds pairs that are counted exactly but valued only
/// approximately.  `algebraic_factors` isolates real irrational a_i.
/// `infinity_count` counts degree-deficit factors (x+1)^{n-1} (polynomial case
/// only).  `scalar` is the leading scalar of the interpolated node polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorMultiset {
    pub rational_factors: Vec<Rational>,
    pub complex_pairs: Vec<GaussRational>,
    pub approx_complex_pairs: Vec<(f64, f64)>,
    pub algebraic_factors: Vec<IsolatingInterval>,
    pub zeros: usize,
    pub infinity_count: usize,
    pub scalar: Rational,
}

impl FactorMultiset {
    pub fn from_rationals(values: &[Rational], scalar: Rational) -> Self {
        let mut rational_factors = Vec::new();
        let mut zeros = 0usize;
        for v in values {
            if v.is_zero() {
                zeros += 1;
            } else {
                rational_factors.push(v.clone());
            }
        }
        let mut fm = FactorMultiset {
            rational_factors,
            complex_pairs: Vec::new(),
            approx_complex_pairs: Vec::new(),
            algebraic_factors: Vec::new(),
            zeros,
            infinity_count: 0,
            scalar,
        };
        fm.normalize();
        fm
    }

    /// Total factor count including multiplicity and K_∞ slots.
    pub fn total_count(&self) -> usize {
        self.rational_factors.len()
            + 2 * (self.complex_pairs.len() + self.approx_complex_pairs.len())
            + self.algebraic_factors.len()
            + self.zeros
            + self.infinity_count
    }

    /// True when every factor value is known exactly as a (Gaussian) rational.
    pub fn is_exact(&self) -> bool {
        self.approx_complex_pairs.is_empty() && self.algebraic_factors.is_empty()
    }

    /// Canonical ordering so multiset comparison is plain equality.
    pub fn normalize(&mut self) {
        self.rational_factors.sort();
        self.complex_pairs
            .sort_by(|a, b| a.re.cmp(&b.re).then(a.im.cmp(&b.im)));
        self.approx_complex_pairs
            .sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    }

    /// All exactly-known factor values expanded into a flat list (conjugate
    /// pairs expanded, zeros included).  Errors when inexact entries exist.
    pub fn exact_values(&self) -> Result<Vec<GaussRational>> {
        if !self.is_exact() {
            return Err(Error::Unsupported(
                "factor multiset contains approximately valued entries".into(),
            ));
        }
        let mut values = Vec::new();
        for _ in 0..self.zeros {
            values.push(GaussRational::zero());
        }
        for r in &self.rational_factors {
            values.push(GaussRational::from_real(r.clone()));
        }
        for z in &self.complex_pairs {
            values.push(z.clone());
            values.push(z.conj());
        }
        Ok(values)
    }

    /// Exact counts of (positive, zero, negative, complex-pair) factor values.
    /// Signs of algebraic entries come from their isolating intervals.
    pub fn sign_counts(&self) -> (usize, usize, usize, usize) {
        let mut pos = 0usize;
        let mut neg = 0usize;
        for r in &self.rational_factors {
            if r.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        for iv in &self.algebraic_factors {
            match iv.root_sign() {
                s if s > 0 => pos += 1,
                s if s < 0 => neg += 1,
                _ => unreachable!("algebraic factor isolating a zero root"),
            }
        }
        let cplx = self.complex_pairs.len() + self.approx_complex_pairs.len();
        (pos, self.zeros, neg, cplx)
    }

    /// Recompose the polynomial this multiset came from (exact entries only).
    pub fn recompose_poly(&self, n: usize) -> Result<RatPoly> {
        let values = self.exact_values()?;
        compose_factor_values(&values, self.infinity_count, &self.scalar, n)
    }

    /// Recompose the exponential form e^x·R this multiset came from.
    pub fn recompose_exp(&self) -> Result<ExpForm> {
        let values = self.exact_values()?;
        if self.infinity_count != 0 {
            return Err(Error::Unsupported(
                "degree-deficit factors have no exponential analogue".into(),
            ));
        }
        // Compose e^x·scalar with factors e^x(x + a_i): each application maps
        // Y to a_i·Y + x(Y + Y').
        let mut y = GaussRatPoly::from_real(&RatPoly::constant(self.scalar.clone()));
        let x = GaussRatPoly::from_real(&RatPoly::monomial(Rational::one(), 1));
        for a in &values {
            let shifted = &y + &y.derivative();
            y = &(&x * &shifted) + &y.scale(a);
        }
        Ok(ExpForm::new(y.into_real()?))
    }
}

/// p(-x), used to negate root locations of isolating intervals.
fn reflect(p: &RatPoly) -> RatPoly {
    let coeffs: Vec<Rational> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    RatPoly::new(coeffs)
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// by continued fractions.
fn rationalize(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let negative = x < 0.0;
    let mut v = x.abs();
    // Convergents p/q of the continued-fraction expansion.
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e18 {
            break;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    let mut r = Rational::new(p1.into(), q1.into());
    if negative {
        r = -r;
    }
    Some(r)
}

/// Try to recover an exact monic quadratic t² + βt + γ with rational β, γ
/// dividing `f`, from an approximate nonreal root z.
fn snap_quadratic(f: &RatPoly, re: f64, im: f64) -> Option<(Rational, Rational)> {
    let beta_f = -2.0 * re;
    let gamma_f = re * re + im * im;
    for max_den in [1u64 << 8, 1 << 16, 1 << 24, 1 << 32, 1 << 44] {
        let beta = rationalize(beta_f, max_den)?;
        let gamma = rationalize(gamma_f, max_den)?;
        // Nonreal roots require a negative discriminant.
        let disc = &beta * &beta - rat_i64(4) * &gamma;
        if !disc.is_negative() {
            continue;
        }
        let quad = RatPoly::new(vec![gamma.clone(), beta.clone(), Rational::one()]);
        if f.divides_exactly(&quad) {
            return Some((beta, gamma));
        }
    }
    None
}

/// Classify the roots of the monic node polynomial Q(t) = Π (t + a_i),
/// filling the value-bearing fields of a FactorMultiset (a_i = −root).
fn classify_node_poly(q: &RatPoly, out: &mut FactorMultiset) -> Result<()> {
    let mut rem = q.clone();
    for (root, mult) in q.rational_roots() {
        let a = -&root;
        for _ in 0..mult {
            if a.is_zero() {
                out.zeros += 1;
            } else {
                out.rational_factors.push(a.clone());
            }
        }
        let lin = RatPoly::linear(-root);
        for _ in 0..mult {
            rem = rem.div_rem(&lin)?.0;
        }
    }
    if rem.degree() == Some(0) || rem.is_zero() {
        out.normalize();
        return Ok(());
    }
    for (factor, mult) in squarefree_decompose(&rem)? {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let real_intervals = crate::sturm::isolate_real_roots(&factor)?;
        for iv in &real_intervals {
            // a lies in (−hi, −lo) and is a root of factor(−x).
            let neg = IsolatingInterval {
                lo: -iv.hi.clone(),
                hi: -iv.lo.clone(),
                defining_poly: reflect(&factor),
            };
            for _ in 0..mult {
                out.algebraic_factors.push(neg.clone());
            }
        }
        let deg = factor.degree().unwrap();
        let pair_count = (deg - real_intervals.len()) / 2;
        if pair_count == 0 {
            continue;
        }
        // Peel off exactly-recoverable Gaussian-rational quadratics; anything
        // left is counted exactly but valued from the approximate roots.
        let mut residual = factor.clone();
        let mut exact_found = 0usize;
        let mut approx_left: Vec<(f64, f64)> = Vec::new();
        match complex_roots_approx(&factor, &rat(1, 100_000_000)) {
            Ok(roots) => {
                for r in roots.iter().filter(|r| r.value.im > 1e-9) {
                    let (re, im) = (r.value.re, r.value.im);
                    if let Some((beta, gamma)) = snap_quadratic(&residual, re, im) {
                        let half_beta = &beta / rat_i64(2);
                        let im_sq = &gamma - &half_beta * &half_beta;
                        if let Some(qi) = rational_sqrt(&im_sq) {
                            // Root t = −β/2 + i·qi, so a = β/2 − i·qi; store
                            // the positive-imaginary representative.
                            for _ in 0..mult {
                                out.complex_pairs
                                    .push(GaussRational::new(half_beta.clone(), qi.clone()));
                            }
                            let quad =
                                RatPoly::new(vec![gamma, beta, Rational::one()]);
                            residual = residual.div_rem(&quad)?.0;
                            exact_found += 1;
                            continue;
                        }
                    }
                    approx_left.push((-re, im));
                }
            }
            Err(_) => {}
        }
        for _ in 0..mult {
            for idx in 0..(pair_count - exact_found) {
                let v = approx_left.get(idx).copied().unwrap_or((f64::NAN, f64::NAN));
                out.approx_complex_pairs.push(v);
            }
        }
    }
    out.normalize();
    Ok(())
}

/// The node polynomial Q̃(t) = scalar · Π (t + a_i) recovered from the
/// binomially normalized coefficients of `p` by interpolation at the nodes
/// t_j = j/(n−j).  Shared by decomposition and the affine-map extraction.
pub fn node_polynomial(p: &RatPoly, n: usize) -> Result<RatPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if n == 0 {
        return Err(Error::InvalidArgument("degree tag must be at least 1".into()));
    }
    let n_big = rat_i64(n as i64);
    let n_pow = num::pow::pow(n_big.clone(), n - 1);
    let mut nodes = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for j in 0..n {
        let nj = rat_i64((n - j) as i64);
        let nj_pow = num::pow::pow(nj.clone(), n - 1);
        let pj = p.coeff(j) / crate::rational::binomial(n, j);
        nodes.push(rat_i64(j as i64) / &nj);
        values.push(pj * &n_pow / nj_pow);
    }
    interpolate(&nodes, &values)
}

/// Recover the factor multiset of a polynomial composed at degree tag `n`.
pub fn decompose_poly(p: &RatPoly, n: usize) -> Result<FactorMultiset> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if n == 0 {
        return Err(Error::InvalidArgument("degree tag must be at least 1".into()));
    }
    let deg = p.degree().unwrap();
    if deg > n {
        return Err(Error::DegreeMismatch(n, deg));
    }
    if deg == n && !p.eval(&rat_i64(-1)).is_zero() {
        return Err(Error::NotPn1(format!(
            "p(-1) = {} is nonzero",
            rational_to_string(&p.eval(&rat_i64(-1)))
        )));
    }
    let q_tilde = node_polynomial(p, n)?;
    if q_tilde.is_zero() {
        return Err(Error::NotPn1("all node values vanish".into()));
    }
    let scalar = q_tilde.leading_coeff().unwrap().clone();
    let q_deg = q_tilde.degree().unwrap();
    if q_deg > n - 1 {
        return Err(Error::NotPn1("node polynomial degree exceeds n-1".into()));
    }
    let infinity_count = n - 1 - q_deg;
    // Coefficient j = n is the one condition not used by the interpolation:
    // it must equal the leading scalar (no deficit) or vanish (deficit).
    let expected_top = if infinity_count == 0 {
        scalar.clone()
    } else {
        Rational::zero()
    };
    if p.coeff(n) != expected_top {
        return Err(Error::NotPn1(
            "coefficients are not consistent with any factor multiset".into(),
        ));
    }
    let (q, _) = q_tilde.make_monic();
    let mut out = FactorMultiset {
        rational_factors: Vec::new(),
        complex_pairs: Vec::new(),
        approx_complex_pairs: Vec::new(),
        algebraic_factors: Vec::new(),
        zeros: 0,
        infinity_count,
        scalar,
    };
    classify_node_poly(&q, &mut out)?;
    Ok(out)
}

/// Recover the factor multiset of e^x·R from the polynomial part R.
pub fn decompose_exp(r: &RatPoly) -> Result<FactorMultiset> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = RatPoly::new(falling_to_monomial(r.coeffs()));
    let scalar = g.leading_coeff().unwrap().clone();
    let (q, _) = g.make_monic();
    let mut out = FactorMultiset {
        rational_factors: Vec::new(),
        complex_pairs: Vec::new(),
        approx_complex_pairs: Vec::new(),
        algebraic_factors: Vec::new(),
        zeros: 0,
        infinity_count: 0,
        scalar,
    };
    classify_node_poly(&q, &mut out)?;
    Ok(out)
}
