//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! trimmed; the zero polynomial has an empty coefficient list and
//! `degree() == None`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rational_to_string, sign, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        RatPoly { coeffs: v }
    }

    /// `x + a`.
    pub fn linear(a: Rational) -> Self {
        RatPoly::new(vec![a, Rational::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| crate::rational::rat_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the stored length).
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        if s.is_zero() {
            return RatPoly::zero();
        }
        RatPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Splits into `(monic, scalar)` with `self = monic * scalar`.
    /// The zero polynomial returns `(0, 1)`.
    pub fn make_monic(&self) -> (RatPoly, Rational) {
        match self.leading_coeff() {
            None => (RatPoly::zero(), Rational::one()),
            Some(lc) => {
                let lc = lc.clone();
                (self.scale(&(Rational::one() / &lc)), lc)
            }
        }
    }

    pub fn pow(&self, mut e: usize) -> RatPoly {
        let mut base = self.clone();
        let mut acc = RatPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `prod (x - r_i)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> RatPoly {
        let mut p = RatPoly::one();
        for r in roots {
            p = &p * &RatPoly::new(vec![-r.clone(), Rational::one()]);
        }
        p
    }

    /// Exact euclidean division; `rhs` must be nonzero.
    pub fn div_rem(&self, rhs: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let d = rhs.degree().ok_or(Error::ZeroPolynomial)?;
        let lc_inv = Rational::one() / rhs.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - d;
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + d] * &lc_inv;
            if !c.is_zero() {
                for (j, rc) in rhs.coeffs.iter().enumerate() {
                    let t = &c * rc;
                    rem[i + j] = &rem[i + j] - &t;
                }
            }
            quot[i] = c;
        }
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// True iff `rhs` divides `self` exactly.
    pub fn divides_exactly(&self, rhs: &RatPoly) -> bool {
        match self.div_rem(rhs) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic gcd over the rationals; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).unwrap();
            a = b;
            b = r;
            // normalize to keep coefficient growth down
            if let Some(lc) = a.leading_coeff() {
                let s = Rational::one() / lc;
                a = a.scale(&s);
            }
        }
        a.make_monic().0
    }

    /// Multiplicity of `r` as a root (0 when not a root).
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        let lin = RatPoly::new(vec![-r.clone(), Rational::one()]);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.eval(r).is_zero() {
            let (q, rem) = p.div_rem(&lin).unwrap();
            debug_assert!(rem.is_zero());
            p = q;
            m += 1;
        }
        m
    }

    /// Coefficients cleared to a primitive integer polynomial with positive
    /// leading coefficient; returns the coefficient list.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        for c in &mut ints {
            *c = &*c / &g;
        }
        ints
    }

    /// All rational roots with multiplicities: Sturm isolation of the
    /// square-free part, then bisection below the separation bound
    /// 1/(2·an²) testing the smallest-denominator rational of each
    /// interval.  Any rational root in lowest terms has denominator
    /// dividing the primitive leading coefficient an, and two distinct
    /// such rationals differ by at least 1/an², so the candidate found
    /// below the bound is the root or there is none.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut p = self.clone();
        // x = 0
        let mut zero_mult = 0;
        while !p.is_zero() && p.coeff(0).is_zero() {
            p = RatPoly::new(p.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            out.push((Rational::zero(), zero_mult));
        }
        if p.degree().unwrap_or(0) == 0 {
            return out;
        }
        // Any rational root of the square-free part, in lowest terms, has a
        // denominator dividing the primitive leading coefficient; distinct
        // such rationals are separated by at least 1/an².  Isolate real
        // roots with Sturm counts, bisect each isolating interval below the
        // separation bound, and test the simplest rational it contains.
        let sf = crate::sturm::square_free_part(&p);
        let ints = sf.primitive_integer_coeffs();
        let an = ints.last().unwrap().abs();
        let sep = Rational::new(BigInt::one(), &an * &an * BigInt::from(2));
        let lc = sf.leading_coeff().unwrap().clone();
        let mut bound = Rational::one();
        for c in sf.coeffs() {
            let q = (c / &lc).abs();
            if q > bound {
                bound = q;
            }
        }
        bound = bound + Rational::one();
        let two = Rational::from_integer(BigInt::from(2));
        let mut found: Vec<Rational> = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = match crate::sturm::sturm_count(
                &sf,
                &crate::sturm::Bound::Finite(lo.clone()),
                &crate::sturm::Bound::Finite(hi.clone()),
            ) {
                Ok(c) => c,
                Err(_) => 0,
            };
            if count == 0 {
                continue;
            }
            if count == 1 {
                // Single simple root: the square-free polynomial changes
                // sign across it, so plain sign bisection suffices.  Testing
                // the simplest rational in the interval every few steps
                // finds low-complexity roots long before the worst-case
                // separation bound is reached.
                let (mut lo, mut hi) = (lo, hi);
                // Interval endpoints may themselves be roots (created as
                // split midpoints and recorded there); the root counted in
                // this open interval is strictly interior, so endpoint
                // candidates are never accepted and the starting sign at a
                // root endpoint is taken just inside the interval.
                let mut slo = sign(&sf.eval(&lo));
                if slo == 0 {
                    slo = sign(&sf.derivative().eval(&lo));
                }
                let mut hit = false;
                let mut steps = 0usize;
                while &hi - &lo > sep {
                    if steps % 8 == 0 {
                        let r = crate::rational::simplest_rational_in(&lo, &hi);
                        if r > lo && r < hi && sf.eval(&r).is_zero() {
                            found.push(r);
                            hit = true;
                            break;
                        }
                    }
                    steps += 1;
                    let mid = (&lo + &hi) / &two;
                    let smid = sign(&sf.eval(&mid));
                    if smid == 0 {
                        found.push(mid);
                        hit = true;
                        break;
                    }
                    if smid == slo {
                        lo = mid;
                        slo = smid;
                    } else {
                        hi = mid;
                    }
                }
                if !hit {
                    let r = crate::rational::simplest_rational_in(&lo, &hi);
                    if r > lo && r < hi && sf.eval(&r).is_zero() {
                        found.push(r);
                    }
                }
                continue;
            }
            let mid = (&lo + &hi) / &two;
            if sf.eval(&mid).is_zero() {
                found.push(mid.clone());
            }
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        found.sort();
        found.dedup();
        for r in found {
            let m = p.root_multiplicity(&r);
            out.push((r, m));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Number of sign alternations in the nonzero coefficient sequence.
    pub fn sign_changes(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut count = 0;
        let mut last = 0;
        for c in &self.coeffs {
            let s = sign(c);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        Ok(count)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if sign(c) >= 0 { "+" } else { "-" })?;
            } else if sign(c) < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if j == 0 || !a.is_one() {
                write!(f, "{}", rational_to_string(&a))?;
                if j > 0 {
                    write!(f, "*")?;
                }
            }
            if j == 1 {
                write!(f, "x")?;
            } else if j > 1 {
                write!(f, "x^{j}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        RatPoly::new(v)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        RatPoly::new(v)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        RatPoly::new(v)
    }
}
