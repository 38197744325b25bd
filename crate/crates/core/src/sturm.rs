//! Exact Sturm-sequence root counting and real root isolation.
//!
//! `sturm_count` counts distinct real roots in the *open* interval
//! `(lo, hi)`.  With this convention the additivity law
//! `count(-inf, s) + count(s, +inf) + [p(s) = 0] = total distinct real roots`
//! holds exactly for every split point `s`.

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::{sign, Rational};

/// Interval endpoint: a rational or one of the infinities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn finite(x: Rational) -> Self {
        Bound::Finite(x)
    }
}

impl From<Rational> for Bound {
    fn from(x: Rational) -> Self {
        Bound::Finite(x)
    }
}

fn bound_lt(a: &Bound, b: &Bound) -> bool {
    match (a, b) {
        (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => false,
        (Bound::NegInf, _) | (_, Bound::PosInf) => true,
        (Bound::PosInf, _) | (_, Bound::NegInf) => false,
        (Bound::Finite(x), Bound::Finite(y)) => x < y,
    }
}

/// The Sturm chain of the square-free part of `p`, with each member scaled
/// to a primitive integer polynomial (positive scalars only, so signs are
/// preserved).
fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let sf = square_free_part(p);
    let mut chain = vec![normalize_positive(&sf)];
    let d = sf.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(normalize_positive(&d));
    loop {
        let k = chain.len();
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]).unwrap();
        if r.is_zero() {
            break;
        }
        chain.push(normalize_positive(&(-&r)));
    }
    chain
}

fn normalize_positive(p: &RatPoly) -> RatPoly {
    if p.is_zero() {
        return RatPoly::zero();
    }
    // primitive_integer_coeffs forces a positive leading coefficient;
    // restore the original sign so only a positive scalar was applied
    let ints = p.primitive_integer_coeffs();
    let neg = sign(p.leading_coeff().unwrap()) < 0;
    RatPoly::new(
        ints.into_iter()
            .map(|c| Rational::from_integer(if neg { -c } else { c }))
            .collect(),
    )
}

/// `p / gcd(p, p')`, monic.
pub fn square_free_part(p: &RatPoly) -> RatPoly {
    if p.is_zero() {
        return RatPoly::zero();
    }
    let g = p.gcd(&p.derivative());
    let (q, r) = p.div_rem(&g).unwrap();
    debug_assert!(r.is_zero());
    q.make_monic().0
}

fn sign_at(p: &RatPoly, x: &Bound) -> i32 {
    match x {
        Bound::Finite(v) => sign(&p.eval(v)),
        Bound::PosInf => match p.leading_coeff() {
            None => 0,
            Some(lc) => sign(lc),
        },
        Bound::NegInf => match p.degree() {
            None => 0,
            Some(d) => {
                let s = sign(p.leading_coeff().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        },
    }
}

fn variations(chain: &[RatPoly], x: &Bound) -> usize {
    let mut count = 0;
    let mut last = 0;
    for q in chain {
        let s = sign_at(q, x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &RatPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !bound_lt(lo, hi) {
        return Err(Error::InvalidArgument("need lo < hi".into()));
    }
    let chain = sturm_chain(p);
    let mut n = variations(&chain, lo) as isize - variations(&chain, hi) as isize;
    // the variation difference counts (lo, hi]; drop a root sitting at hi
    if let Bound::Finite(h) = hi {
        if p.eval(h).is_zero() {
            n -= 1;
        }
    }
    debug_assert!(n >= 0);
    Ok(n as usize)
}

/// Distinct real roots of `p` on the whole line.
pub fn distinct_real_roots(p: &RatPoly) -> Result<usize> {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}

/// One distinct real root of a square-free polynomial, pinned exactly.
///
/// Rational roots use a degenerate interval `lo == hi == root`; irrational
/// ones get an open interval containing exactly one root of
/// `defining_poly` and not straddling zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub defining_poly: RatPoly,
}

impl IsolatingInterval {
    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// Sign class of the isolated root: -1, 0 or 1.
    pub fn root_sign(&self) -> i32 {
        if self.is_degenerate() {
            sign(&self.lo)
        } else if sign(&self.lo) >= 0 {
            1
        } else {
            -1
        }
    }

    /// Re-checks the defining invariants.
    pub fn verify(&self) -> bool {
        if self.is_degenerate() {
            return self.defining_poly.eval(&self.lo).is_zero();
        }
        if self.lo >= self.hi {
            return false;
        }
        let straddles =
            sign(&self.lo) < 0 && sign(&self.hi) > 0 && !self.lo.is_zero() && !self.hi.is_zero();
        if straddles {
            return false;
        }
        matches!(
            sturm_count(
                &self.defining_poly,
                &Bound::Finite(self.lo.clone()),
                &Bound::Finite(self.hi.clone()),
            ),
            Ok(1)
        )
    }

    /// Bisect until `hi - lo <= width` (no-op for degenerate intervals).
    pub fn refine(&mut self, width: &Rational) {
        if self.is_degenerate() {
            return;
        }
        let two = Rational::from_integer(BigInt::from(2));
        while &self.hi - &self.lo > *width {
            let mid = (&self.lo + &self.hi) / &two;
            if self.defining_poly.eval(&mid).is_zero() {
                // landed exactly on the root
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            let left = sturm_count(
                &self.defining_poly,
                &Bound::Finite(self.lo.clone()),
                &Bound::Finite(mid.clone()),
            )
            .unwrap();
            if left == 1 {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }
}

/// Cauchy-style bound: every real root lies in `(-B, B)`.
fn root_bound(p: &RatPoly) -> Rational {
    let lc = p.leading_coeff().unwrap().abs();
    let mut m = Rational::zero();
    for c in p.coeffs() {
        let a = c.abs() / &lc;
        if a > m {
            m = a;
        }
    }
    m + Rational::one()
}

/// One isolating interval per distinct real root of the square-free part
/// of `p`, sorted by root value.
pub fn isolate_real_roots(p: &RatPoly) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = square_free_part(p);
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = sf.clone();
    for (r, _) in sf.rational_roots() {
        out.push(IsolatingInterval { lo: r.clone(), hi: r.clone(), defining_poly: sf.clone() });
        let lin = RatPoly::new(vec![-r, Rational::one()]);
        rest = rest.div_rem(&lin).unwrap().0;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let b = root_bound(&rest);
        // `rest` has no rational roots, so no rational endpoint can be a root
        // and splitting at 0 keeps every interval on one side of the origin
        let mut stack = vec![(-b.clone(), Rational::zero()), (Rational::zero(), b)];
        let two = Rational::from_integer(BigInt::from(2));
        while let Some((lo, hi)) = stack.pop() {
            let c = sturm_count(&rest, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))?;
            match c {
                0 => {}
                1 => out.push(IsolatingInterval { lo, hi, defining_poly: rest.clone() }),
                _ => {
                    let mid = (&lo + &hi) / &two;
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
    Ok(out)
}
