//! Exact polynomial interpolation (Newton divided differences).

use num::One;

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::Rational;

/// The unique polynomial of degree `< nodes.len()` through the given points.
pub fn interpolate(nodes: &[Rational], values: &[Rational]) -> Result<RatPoly> {
    if nodes.is_empty() || nodes.len() != values.len() {
        return Err(Error::InvalidArgument(
            "need equally many nodes and values, at least one".into(),
        ));
    }
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::DuplicateNode(
                    crate::rational::rational_to_string(&nodes[i]),
                ));
            }
        }
    }
    // divided-difference table, in place
    let mut dd: Vec<Rational> = values.to_vec();
    for level in 1..nodes.len() {
        for i in (level..nodes.len()).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &nodes[i] - &nodes[i - level];
            dd[i] = num / den;
        }
    }
    // Horner assembly of sum dd[k] * prod_{i<k} (x - node_i)
    let mut p = RatPoly::zero();
    for k in (0..nodes.len()).rev() {
        let lin = RatPoly::new(vec![-nodes[k].clone(), Rational::one()]);
        p = &(&p * &lin) + &RatPoly::constant(dd[k].clone());
    }
    Ok(p)
}
