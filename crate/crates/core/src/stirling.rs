//! Falling-factorial (Stirling) basis conversion.
//!
//! `falling_to_monomial` rewrites `G(t) = sum c_k t(t-1)...(t-k+1)` in the
//! monomial basis via signed Stirling numbers of the first kind;
//! `monomial_to_falling` is the exact inverse via Stirling numbers of the
//! second kind.  Triangles are cached per process behind a mutex.

use std::sync::Mutex;
use std::sync::OnceLock;

use num::{BigInt, Zero};

use crate::rational::Rational;

struct Triangles {
    // signed first kind s(n, j) and second kind S(n, j), rows 0..=max
    first: Vec<Vec<BigInt>>,
    second: Vec<Vec<BigInt>>,
}

fn cache() -> &'static Mutex<Triangles> {
    static CACHE: OnceLock<Mutex<Triangles>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(Triangles {
            first: vec![vec![BigInt::from(1)]],
            second: vec![vec![BigInt::from(1)]],
        })
    })
}

fn ensure_rows(t: &mut Triangles, n: usize) {
    while t.first.len() <= n {
        let k = t.first.len();
        let prev = &t.first[k - 1];
        let mut row = vec![BigInt::zero(); k + 1];
        for j in 0..=k {
            let from_shift = if j >= 1 { prev.get(j - 1).cloned().unwrap_or_default() } else { BigInt::zero() };
            let same = prev.get(j).cloned().unwrap_or_default();
            row[j] = from_shift - BigInt::from(k - 1) * same;
        }
        t.first.push(row);

        let prev = &t.second[k - 1];
        let mut row = vec![BigInt::zero(); k + 1];
        for j in 0..=k {
            let from_shift = if j >= 1 { prev.get(j - 1).cloned().unwrap_or_default() } else { BigInt::zero() };
            let same = prev.get(j).cloned().unwrap_or_default();
            row[j] = from_shift + BigInt::from(j) * same;
        }
        t.second.push(row);
    }
}

/// Signed Stirling number of the first kind `s(n, j)`.
pub fn stirling_first(n: usize, j: usize) -> BigInt {
    let mut t = cache().lock().unwrap();
    ensure_rows(&mut t, n);
    t.first[n].get(j).cloned().unwrap_or_default()
}

/// Stirling number of the second kind `S(n, j)`.
pub fn stirling_second(n: usize, j: usize) -> BigInt {
    let mut t = cache().lock().unwrap();
    ensure_rows(&mut t, n);
    t.second[n].get(j).cloned().unwrap_or_default()
}

/// Coefficients of `sum_k c_k (t)_k` in the monomial basis.
pub fn falling_to_monomial(c: &[Rational]) -> Vec<Rational> {
    if c.is_empty() {
        return Vec::new();
    }
    let n = c.len() - 1;
    let mut out = vec![Rational::zero(); c.len()];
    for (k, ck) in c.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        for j in 0..=k.min(n) {
            let s = Rational::from_integer(stirling_first(k, j));
            out[j] = &out[j] + &(ck * s);
        }
    }
    out
}

/// Inverse of [`falling_to_monomial`].
pub fn monomial_to_falling(m: &[Rational]) -> Vec<Rational> {
    if m.is_empty() {
        return Vec::new();
    }
    let n = m.len() - 1;
    let mut out = vec![Rational::zero(); m.len()];
    for (k, mk) in m.iter().enumerate() {
        if mk.is_zero() {
            continue;
        }
        for j in 0..=k.min(n) {
            let s = Rational::from_integer(stirling_second(k, j));
            out[j] = &out[j] + &(mk * s);
        }
    }
    out
}
