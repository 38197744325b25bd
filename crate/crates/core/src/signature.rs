//! Exact sign classification of roots and factor values, and the
//! necessary-condition checks linking the two sides.
//!
//! The central object is the 8-vector: the (positive, zero, negative,
//! complex-pair) counts for the roots of P/(x+1) (polynomial mode) or of R
//! (exponential mode), paired with the same four counts for the quantities
//! −a_i recovered by decomposition.  All counts are computed by Sturm
//! sequences and square-free decomposition, never from floating point.

use num::Zero;

use crate::decompose::{decompose_exp, decompose_poly, FactorMultiset};
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::{rat_i64, rational_to_string, Rational};
use crate::squarefree::squarefree_decompose;
use crate::sturm::{sturm_count, Bound};

/// Whether the object under study is a composed polynomial P of degree tag n
/// or the polynomial part R of an entire function e^x·R.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Polynomial,
    Exponential,
}

/// Exact (positive, zero, negative, complex-pair) counts with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootSignature {
    pub pos: usize,
    pub zero: usize,
    pub neg: usize,
    pub complex_pairs: usize,
    /// True iff every nonzero root is simple.
    pub distinct_nonzero: bool,
}

impl RootSignature {
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (self.pos, self.zero, self.neg, self.complex_pairs)
    }

    pub fn total(&self) -> usize {
        self.pos + self.zero + self.neg + 2 * self.complex_pairs
    }

    /// The same multiset with every value negated (pos and neg swap).
    pub fn negated(&self) -> RootSignature {
        RootSignature {
            pos: self.neg,
            zero: self.zero,
            neg: self.pos,
            complex_pairs: self.complex_pairs,
            distinct_nonzero: self.distinct_nonzero,
        }
    }
}

/// The paired signature: roots of P/(x+1) (or R) and the numbers −a_i.
///
/// Canonical storage is the −a_i view (the convention of the case
/// schematics); `a_side` derives the a_i view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignVector8 {
    pub roots: RootSignature,
    pub neg_a: RootSignature,
}

impl SignVector8 {
    /// Signature of the a_i themselves.
    pub fn a_side(&self) -> RootSignature {
        self.neg_a.negated()
    }

    /// Roots-side and a-side real counts always share parity.
    pub fn parity_ok(&self) -> bool {
        let real_roots = self.roots.pos + self.roots.zero + self.roots.neg;
        let real_a = self.neg_a.pos + self.neg_a.zero + self.neg_a.neg;
        (real_roots % 2) == (real_a % 2)
    }

    /// The eight counts in a stable order, for comparison and serialization:
    /// roots (pos, zero, neg, cplx) then −a_i (pos, zero, neg, cplx).
    pub fn as_tuple(&self) -> [usize; 8] {
        [
            self.roots.pos,
            self.roots.zero,
            self.roots.neg,
            self.roots.complex_pairs,
            self.neg_a.pos,
            self.neg_a.zero,
            self.neg_a.neg,
            self.neg_a.complex_pairs,
        ]
    }
}

/// Exact root classification of a nonzero rational polynomial.
pub fn classify_roots(p: &RatPoly) -> Result<RootSignature> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = p.degree().unwrap();
    if deg == 0 {
        return Ok(RootSignature {
            pos: 0,
            zero: 0,
            neg: 0,
            complex_pairs: 0,
            distinct_nonzero: true,
        });
    }
    let parts = squarefree_decompose(p)?;
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut zero = 0usize;
    let mut distinct_nonzero = true;
    let zero_bound = Bound::finite(Rational::zero());
    for (factor, mult) in &parts {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let p_here = sturm_count(factor, &zero_bound, &Bound::PosInf)?;
        let n_here = sturm_count(factor, &Bound::NegInf, &zero_bound)?;
        pos += mult * p_here;
        neg += mult * n_here;
        if factor.eval(&Rational::zero()).is_zero() {
            zero += mult;
        }
        if *mult > 1 && (p_here + n_here > 0 || factor.degree().unwrap() > 1) {
            // A repeated square-free factor with any nonzero root breaks
            // nonzero-root distinctness (complex roots count too).
            let only_zero = factor.degree().unwrap() == 1 && factor.eval(&Rational::zero()).is_zero();
            if !only_zero {
                distinct_nonzero = false;
            }
        }
    }
    let complex_pairs = (deg - pos - neg - zero) / 2;
    Ok(RootSignature {
        pos,
        zero,
        neg,
        complex_pairs,
        distinct_nonzero,
    })
}

/// Signature of a factor multiset, in the −a_i convention.
pub fn factor_signature(fm: &FactorMultiset) -> RootSignature {
    let (pos_a, zeros, neg_a, cplx) = fm.sign_counts();
    // Distinctness of the nonzero a_i: rational/complex exact duplicates are
    // visible directly; algebraic entries from a square-free factor are
    // distinct unless the same interval repeats.
    let mut distinct = true;
    let mut rs = fm.rational_factors.clone();
    rs.sort();
    distinct &= rs.windows(2).all(|w| w[0] != w[1]);
    let cps = &fm.complex_pairs;
    for i in 1..cps.len() {
        if cps[i - 1] == cps[i] {
            distinct = false;
        }
    }
    let al = &fm.algebraic_factors;
    for i in 1..al.len() {
        for j in 0..i {
            if al[i] == al[j] {
                distinct = false;
            }
        }
    }
    RootSignature {
        // −a_i view: positive a_i become negative entries and vice versa.
        pos: neg_a,
        zero: zeros,
        neg: pos_a,
        complex_pairs: cplx,
        distinct_nonzero: distinct,
    }
}

/// Compute the 8-vector of a polynomial P (with degree tag n) or of R.
pub fn signature_pair(p: &RatPoly, n: usize, mode: Mode) -> Result<SignVector8> {
    let (object, fm) = match mode {
        Mode::Polynomial => {
            let fm = decompose_poly(p, n)?;
            let linear = RatPoly::linear(rat_i64(1));
            let object = if p.eval(&rat_i64(-1)).is_zero() {
                p.div_rem(&linear)?.0
            } else {
                // Degree-deficient compositions need not vanish at −1; the
                // roots side is then the polynomial itself.
                p.clone()
            };
            (object, fm)
        }
        Mode::Exponential => (p.clone(), decompose_exp(p)?),
    };
    let roots = if object.degree().unwrap_or(0) == 0 {
        RootSignature {
            pos: 0,
            zero: 0,
            neg: 0,
            complex_pairs: 0,
            distinct_nonzero: true,
        }
    } else {
        classify_roots(&object)?
    };
    Ok(SignVector8 {
        roots,
        neg_a: factor_signature(&fm),
    })
}

/// One clause of the necessary-condition report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of checking the necessary conditions on a signature/factor pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryReport {
    pub clauses: Vec<ClauseResult>,
}

impl NecessaryReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// The special values b_j = −j/(n−j), j ≥ 0 (b_0 = 0).
pub fn b_value(j: usize, n: usize) -> Rational {
    -rat_i64(j as i64) / rat_i64((n - j) as i64)
}

/// Check the necessary conditions tying a k-fold zero root and (q, q₁) zero /
/// positive factor counts to the structure of the factors and roots.
///
/// Clauses: (1a) at least m + max(0, k−1) of the a_i are negative and
/// distinct; (1b) when k ≥ 1 the factors contain a_i = 0 together with the
/// specific values b_1..b_{k−1} (polynomial) or −1..−(k−1) (exponential);
/// (2a) at least q₁ + max(0, q−1) negative roots with multiplicity; (2b) a
/// root at 0 whenever q ≥ 1.
pub fn check_necessary(
    sig: &SignVector8,
    factors: &FactorMultiset,
    n: usize,
    mode: Mode,
) -> Result<NecessaryReport> {
    let expected_total = match mode {
        Mode::Polynomial => n - 1,
        Mode::Exponential => factors.total_count(),
    };
    if factors.total_count() != expected_total || sig.neg_a.total() + factors.infinity_count
        != factors.total_count()
    {
        return Err(Error::InvalidArgument(
            "signature and factor multiset describe different objects".into(),
        ));
    }
    let k = sig.roots.zero;
    let m = sig.roots.pos;
    let q = sig.neg_a.zero;
    let q1 = sig.a_side().pos; // positive a_i
    let mut clauses = Vec::new();

    // (1a): negative distinct a_i.
    let need_neg_a = m + k.saturating_sub(1);
    let a_neg = sig.a_side().neg;
    let neg_rationals: Vec<&Rational> = factors
        .rational_factors
        .iter()
        .filter(|r| r < &&Rational::zero())
        .collect();
    let mut distinct_neg = neg_rationals.len() + factors
        .algebraic_factors
        .iter()
        .filter(|iv| iv.root_sign() < 0)
        .count();
    for i in 1..neg_rationals.len() {
        if neg_rationals[i - 1] == neg_rationals[i] {
            distinct_neg -= 1;
        }
    }
    clauses.push(ClauseResult {
        clause: "1a",
        passed: a_neg >= need_neg_a && distinct_neg >= need_neg_a,
        detail: format!(
            "need {} negative distinct a_i, have {} negative ({} distinct)",
            need_neg_a, a_neg, distinct_neg
        ),
    });

    // (1b): specific membership forced by a k-fold zero root.
    let mut passed_1b = true;
    let mut missing = Vec::new();
    if k >= 1 {
        if factors.zeros == 0 {
            passed_1b = false;
            missing.push("0".to_string());
        }
        for j in 1..k {
            let required = match mode {
                Mode::Polynomial => b_value(j, n),
                Mode::Exponential => rat_i64(-(j as i64)),
            };
            if !factors.rational_factors.contains(&required) {
                passed_1b = false;
                missing.push(rational_to_string(&required));
            }
        }
    }
    clauses.push(ClauseResult {
        clause: "1b",
        passed: passed_1b,
        detail: if passed_1b {
            format!("k = {}: forced factor values present", k)
        } else {
            format!("k = {}: missing forced values {:?}", k, missing)
        },
    });

    // (2a): negative roots with multiplicity.
    let need_neg_roots = q1 + q.saturating_sub(1);
    clauses.push(ClauseResult {
        clause: "2a",
        passed: sig.roots.neg >= need_neg_roots,
        detail: format!(
            "need {} negative roots, have {}",
            need_neg_roots, sig.roots.neg
        ),
    });

    // (2b): root at zero whenever a_i = 0 occurs.
    let passed_2b = q == 0 || sig.roots.zero >= 1;
    clauses.push(ClauseResult {
        clause: "2b",
        passed: passed_2b,
        detail: format!("q = {}, zero-root multiplicity {}", q, sig.roots.zero),
    });

    Ok(NecessaryReport { clauses })
}
