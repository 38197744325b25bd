//! Constructive realization of the four admissible cases, for composed
//! polynomials and for exponential forms e^x·R.
//!
//! The construction follows the proof skeleton: a base composition with a
//! high-multiplicity zero root, a perturbation plan assigning each of the
//! n−1 factor slots a role (kept zero, small positive, small conjugate
//! couple, exact forced value, shifted window slot, or sector couple near 1),
//! and a verified search that solves the window coefficients toward a chosen
//! local root configuration by exact Newton steps.  Every accepted candidate
//! is certified by recomputing its decomposition and signature from scratch.

use num::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cases::{verify_realization, CaseSpec};
use crate::compose::compose_factor_values;
use crate::decompose::{decompose_exp, decompose_poly, FactorMultiset};
use crate::error::{Error, Result};
use crate::expform::ExpForm;
use crate::gauss::GaussRational;
use crate::gauss_poly::GaussRatPoly;
use crate::poly::RatPoly;
use crate::rational::{rat, rat_i64, round_dyadic, Rational};
use crate::signature::{b_value, signature_pair, Mode, SignVector8};
use crate::stirling::monomial_to_falling;

/// Search budget and determinism knobs.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Magnitude-shrink rounds; the scale starts at 1/8 and halves per round.
    pub max_rounds: usize,
    /// Direction resamples per round.
    pub resamples: usize,
    /// Newton iterations per candidate.
    pub newton_iters: usize,
    /// Random-multiset attempts for flagged (odd-δ) specs.
    pub fallback_tries: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_rounds: 64,
            resamples: 32,
            newton_iters: 24,
            fallback_tries: 256,
            seed: 0x5a_e905,
        }
    }
}

/// How the search ended up succeeding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTrace {
    pub rounds: usize,
    pub candidates: usize,
    pub newton_iterations: usize,
    pub final_magnitude: Rational,
}

/// A self-contained, re-checkable realization of one CaseSpec.
#[derive(Debug, Clone)]
pub struct RealizationCertificate {
    pub spec: CaseSpec,
    pub mode: Mode,
    /// P (polynomial mode) or R (exponential mode).
    pub object: RatPoly,
    pub factors: FactorMultiset,
    pub signature: SignVector8,
    pub trace: SearchTrace,
}

impl RealizationCertificate {
    /// Re-verify from the stored polynomial alone.
    pub fn reverify(&self) -> Result<bool> {
        let out = verify_realization(&self.object, &self.spec, self.spec.n, self.mode)?;
        Ok(out.passed())
    }
}

// ---------------------------------------------------------------------------
// Base compositions
// ---------------------------------------------------------------------------

/// U = K₀*…*K₀ (l times) * K_{b₁}*…*K_{b_μ}, computed by the fast route:
/// start from x^{μ+1}(x+1)^{n−μ−1} and apply x·(d/dx)/n a further l−1 times.
/// Exact structural assertions: (μ+1)-fold root at 0, (n−μ−l)-fold root at
/// −1, and l−1 simple roots inside (−1, 0).
pub fn base_composition_pol(l: usize, mu: usize, n: usize) -> Result<RatPoly> {
    if l < 1 || l + mu > n {
        return Err(Error::InvalidArgument(format!(
            "need l >= 1 and l + mu <= n, got l = {}, mu = {}, n = {}",
            l, mu, n
        )));
    }
    let mut u = &RatPoly::monomial(Rational::one(), mu + 1)
        * &RatPoly::linear(rat_i64(1)).pow(n - mu - 1);
    let n_rat = rat_i64(n as i64);
    for _ in 1..l {
        let d = u.derivative();
        u = (&RatPoly::monomial(Rational::one(), 1) * &d).scale(&(Rational::one() / &n_rat));
    }
    // Structural assertions (exact).
    if u.root_multiplicity(&Rational::zero()) != mu + 1
        || u.root_multiplicity(&rat_i64(-1)) != n - mu - l
    {
        return Err(Error::InvalidArgument(
            "base composition lost its forced multiplicities".into(),
        ));
    }
    let interior = crate::sturm::sturm_count(
        &u,
        &crate::sturm::Bound::finite(rat_i64(-1)),
        &crate::sturm::Bound::finite(Rational::zero()),
    )?;
    if interior != l - 1 {
        return Err(Error::InvalidArgument(format!(
            "expected {} interior roots, found {}",
            l - 1,
            interior
        )));
    }
    Ok(u)
}

/// Y with e^x·Y = (e^x·x)^{*l} * e^x(x−1) * … * e^x(x−μ): starts from
/// x^{μ+1} and applies Y ↦ x(Y+Y′) a further l−1 times.  Exact assertions:
/// (μ+1)-fold root at 0 and l−1 simple negative roots.
pub fn base_composition_exp(l: usize, mu: usize) -> Result<ExpForm> {
    if l < 1 {
        return Err(Error::InvalidArgument("need l >= 1".into()));
    }
    let mut y = RatPoly::monomial(Rational::one(), mu + 1);
    for _ in 1..l {
        y = &RatPoly::monomial(Rational::one(), 1) * &(&y + &y.derivative());
    }
    if y.root_multiplicity(&Rational::zero()) != mu + 1 {
        return Err(Error::InvalidArgument(
            "base composition lost its zero multiplicity".into(),
        ));
    }
    let neg = crate::sturm::sturm_count(
        &y,
        &crate::sturm::Bound::NegInf,
        &crate::sturm::Bound::finite(Rational::zero()),
    )?;
    if neg != l - 1 || y.degree() != Some(l + mu) {
        return Err(Error::InvalidArgument(
            "base composition has the wrong negative-root structure".into(),
        ));
    }
    Ok(ExpForm::new(y))
}

// ---------------------------------------------------------------------------
// Couple factors
// ---------------------------------------------------------------------------

/// Is ε in the sector S = { u + iv : 0 < 2u < v }?
pub fn in_sector(eps: &GaussRational) -> bool {
    eps.re.is_positive() && (rat_i64(2) * &eps.re) < eps.im
}

/// V = K_{1+ε} * K_{1+ε̄} for ε in the sector S, with an exact check against
/// the closed form (x+1)^{n−2}((x+1)² + (ε+ε̄+εε̄/n)(x+1) + (n−1)εε̄/n).
pub fn couple_factor_pol(eps: &GaussRational, n: usize) -> Result<RatPoly> {
    if !in_sector(eps) {
        return Err(Error::InvalidArgument(
            "couple parameter must lie in the sector 0 < 2u < v".into(),
        ));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    let one = GaussRational::one();
    let a = one.clone() + eps.clone();
    let b = a.conj();
    let fa = crate::compose::factor_k_gauss(&a, n);
    let fb = crate::compose::factor_k_gauss(&b, n);
    let v = crate::compose::schur_szego_gauss(&fa, &fb)?.into_real()?;
    // Closed form, in powers of (x+1).
    let trace = rat_i64(2) * &eps.re;
    let norm = &eps.re * &eps.re + &eps.im * &eps.im;
    let n_rat = rat_i64(n as i64);
    let beta = &trace + &(&norm / &n_rat);
    let gamma = rat_i64((n - 1) as i64) * &norm / &n_rat;
    let shifted = RatPoly::linear(rat_i64(1));
    let quad = &(&(&shifted * &shifted) + &shifted.scale(&beta)) + &RatPoly::constant(gamma.clone());
    let closed = &shifted.pow(n - 2) * &quad;
    if v != closed {
        return Err(Error::InvalidArgument(
            "couple closed form mismatch".into(),
        ));
    }
    Ok(v)
}

/// Discriminant of the quadratic-in-(x+1) part of the polynomial couple.
pub fn couple_discriminant_pol(eps: &GaussRational, n: usize) -> Rational {
    let trace = rat_i64(2) * &eps.re;
    let norm = &eps.re * &eps.re + &eps.im * &eps.im;
    let n_rat = rat_i64(n as i64);
    let beta = &trace + &(&norm / &n_rat);
    let gamma = rat_i64((n - 1) as i64) * &norm / &n_rat;
    &beta * &beta - rat_i64(4) * &gamma
}

/// V with e^x(1+εx) * e^x(1+ε̄x) = e^x·V, i.e. V = 1 + (ε+ε̄+εε̄)x + εε̄x²,
/// checked against the composition computed through the factor formulas.
pub fn couple_factor_exp(eps: &GaussRational) -> Result<RatPoly> {
    if eps.im.is_zero() {
        return Err(Error::InvalidArgument(
            "couple parameter must be nonreal".into(),
        ));
    }
    let trace = rat_i64(2) * &eps.re;
    let norm = &eps.re * &eps.re + &eps.im * &eps.im;
    let v = RatPoly::new(vec![Rational::one(), &trace + &norm, norm.clone()]);
    // Composition route: e^x(β + αx) acts as Y ↦ αx(Y+Y′) + βY.
    let one = GaussRational::one();
    let start = GaussRatPoly::one();
    let step1 = crate::expform::exp_apply_factor_gauss(eps, &one, &start)?;
    let step2 = crate::expform::exp_apply_factor_gauss(&eps.conj(), &one, &step1)?;
    if step2.into_real()? != v {
        return Err(Error::InvalidArgument(
            "exponential couple closed form mismatch".into(),
        ));
    }
    Ok(v)
}

/// Discriminant of the exponential couple quadratic.
pub fn couple_discriminant_exp(eps: &GaussRational) -> Rational {
    let trace = rat_i64(2) * &eps.re;
    let norm = &eps.re * &eps.re + &eps.im * &eps.im;
    let beta = &trace + &norm;
    &beta * &beta - rat_i64(4) * &norm
}

// ---------------------------------------------------------------------------
// Perturbation plan
// ---------------------------------------------------------------------------

/// The roles the n−1 slots play for one spec.
#[derive(Debug, Clone)]
pub struct PerturbationPlan {
    /// Values that never move: kept zeros and forced exact values.
    pub fixed: Vec<GaussRational>,
    /// Number of small-positive slots (scaled by the round magnitude).
    pub eps_positive: usize,
    /// Number of small conjugate couples (each contributes two slots).
    pub eps_couples: usize,
    /// Number of sector couples near a = 1 (polynomial) or with large |a|
    /// (exponential); each contributes two slots.
    pub sector_couples: usize,
    /// Window slot bases (the first may be 0 in Cases 2 and 4).
    pub shift_bases: Vec<Rational>,
    /// First controlled coefficient index.
    pub window_start: usize,
    /// Local root split: (positive, negative, complex pairs).
    pub split: (usize, usize, usize),
}

impl PerturbationPlan {
    pub fn slot_count(&self) -> usize {
        self.fixed.len()
            + self.eps_positive
            + 2 * self.eps_couples
            + 2 * self.sector_couples
            + self.shift_bases.len()
    }
}

/// Slot base value for window index j.
fn shift_base(j: usize, n: usize, mode: Mode) -> Rational {
    match mode {
        Mode::Polynomial => b_value(j, n),
        Mode::Exponential => -rat_i64(j as i64),
    }
}

/// Build the perturbation plan for a supported spec.
pub fn build_plan(spec: &CaseSpec, mode: Mode) -> Result<PerturbationPlan> {
    if !spec.is_valid() {
        return Err(Error::InvalidArgument("invalid case spec".into()));
    }
    if spec.construction_unsupported {
        return Err(Error::Unsupported(
            "no constructive plan for odd-delta specs".into(),
        ));
    }
    let n = spec.n;
    let mut fixed = Vec::new();
    for _ in 0..spec.q {
        fixed.push(GaussRational::zero());
    }
    // Forced values b₁..b_{k−1} (or −1..−(k−1)) keep the k-fold zero root.
    for j in 1..spec.k {
        fixed.push(GaussRational::from_real(shift_base(j, n, mode)));
    }
    let (m_tilde, split, eps_couples) = match spec.case_id {
        1 | 2 => (
            spec.m + spec.k1 + spec.k_c,
            (spec.m, spec.k1, spec.k_c / 2),
            spec.q_c / 2,
        ),
        _ => (spec.m + spec.r, (spec.m, 0, spec.r / 2), spec.s / 2),
    };
    let window_start = spec.k;
    let mut shift_bases = Vec::new();
    for j in window_start..window_start + m_tilde {
        shift_bases.push(shift_base(j, n, mode));
    }
    let plan = PerturbationPlan {
        fixed,
        eps_positive: spec.q1,
        eps_couples,
        sector_couples: spec.delta / 2,
        shift_bases,
        window_start,
        split,
    };
    if plan.slot_count() != n - 1 {
        return Err(Error::InvalidArgument(format!(
            "plan covers {} of {} slots for {:?}",
            plan.slot_count(),
            n - 1,
            spec
        )));
    }
    Ok(plan)
}

// ---------------------------------------------------------------------------
// Exact coefficient window machinery
// ---------------------------------------------------------------------------

/// Compose the object from a flat value list (always n−1 values).
fn compose_object(values: &[GaussRational], n: usize, mode: Mode) -> Result<RatPoly> {
    match mode {
        Mode::Polynomial => compose_factor_values(values, 0, &Rational::one(), n),
        Mode::Exponential => {
            // R from the monic node polynomial G(t) = Π (t + a_i).
            let mut g = GaussRatPoly::one();
            for a in values {
                g = &g * &GaussRatPoly::linear(a.clone());
            }
            Ok(RatPoly::new(monomial_to_falling(g.into_real()?.coeffs())))
        }
    }
}

/// Object coefficients in [w0, w0+len) from the value list, exactly.
fn window_coeffs(
    values: &[GaussRational],
    n: usize,
    mode: Mode,
    w0: usize,
    len: usize,
) -> Result<Vec<Rational>> {
    let obj = compose_object(values, n, mode)?;
    Ok((w0..w0 + len).map(|j| obj.coeff(j)).collect())
}

/// Derivative of the coefficient window with respect to the value in `slot`
/// (column of the Jacobian), exactly: remove the slot from the product.
fn window_derivative(
    values: &[GaussRational],
    slot: usize,
    n: usize,
    mode: Mode,
    w0: usize,
    len: usize,
) -> Result<Vec<Rational>> {
    match mode {
        Mode::Polynomial => {
            // coeff_j = C(n,j)/n^{n-1} · Π φ_j(a_i) with φ_j(a) = (n−j)a + j,
            // so ∂coeff_j/∂a_slot = coeff-without-slot · (n−j).
            let n_pow = Rational::from_integer(num::BigInt::from(n).pow((n - 1) as u32));
            let mut out = Vec::with_capacity(len);
            for j in w0..w0 + len {
                let mut prod = GaussRational::one();
                for (i, a) in values.iter().enumerate() {
                    if i == slot {
                        continue;
                    }
                    prod = &prod * &crate::compose::factor_coeff(a, j, n);
                }
                if !prod.im.is_zero() {
                    return Err(Error::InvalidArgument(
                        "Jacobian entry is not real; conjugate pairing broken".into(),
                    ));
                }
                let scale = crate::rational::binomial(n, j) * rat_i64((n - j) as i64) / &n_pow;
                out.push(&prod.re * &scale);
            }
            Ok(out)
        }
        Mode::Exponential => {
            // dG/da_slot = Π_{i≠slot}(t + a_i); transform to falling basis.
            let mut g = GaussRatPoly::one();
            for (i, a) in values.iter().enumerate() {
                if i == slot {
                    continue;
                }
                g = &g * &GaussRatPoly::linear(a.clone());
            }
            let coeffs = monomial_to_falling(g.into_real()?.coeffs());
            Ok((w0..w0 + len)
                .map(|j| coeffs.get(j).cloned().unwrap_or_else(Rational::zero))
                .collect())
        }
    }
}

/// Solve the m̃×m̃ linear system J·x = rhs exactly.  Returns None when J is
/// singular (the candidate is then resampled).
fn solve_linear(mut j: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let dim = rhs.len();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| !j[r][col].is_zero())?;
        j.swap(pivot, col);
        rhs.swap(pivot, col);
        let pv = j[col][col].clone();
        for row in 0..dim {
            if row == col || j[row][col].is_zero() {
                continue;
            }
            let f = &j[row][col] / &pv;
            for k in col..dim {
                let sub = &f * &j[col][k];
                j[row][k] = &j[row][k] - &sub;
            }
            let sub = &f * &rhs[col];
            rhs[row] = &rhs[row] - &sub;
        }
    }
    Some(
        rhs.iter()
            .enumerate()
            .map(|(i, v)| v / &j[i][i])
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// The search loop
// ---------------------------------------------------------------------------

fn mag_round(mag: &Rational) -> usize {
    (mag.denom().bits() as usize).saturating_sub(4)
}

fn dyadic(num: i64, shift: u32) -> Rational {
    rat(num, 1 << shift.min(62))
}

/// One candidate attempt: assign slot values at the given magnitude, solve
/// the window toward the sampled local root configuration, verify exactly.
#[allow(clippy::too_many_arguments)]
fn attempt(
    spec: &CaseSpec,
    plan: &PerturbationPlan,
    mode: Mode,
    mag: &Rational,
    rng: &mut ChaCha8Rng,
    cfg: &SearchConfig,
    newton_spent: &mut usize,
) -> Result<Option<RatPoly>> {
    let n = spec.n;
    let m_tilde = plan.shift_bases.len();

    // Flat slot layout: fixed | eps-positive | eps-couples | sector couples |
    // window shifts.
    let mut values: Vec<GaussRational> = plan.fixed.clone();
    for i in 0..plan.eps_positive {
        let jitter = rat_i64(16 + rng.gen_range(0i64..16));
        values.push(GaussRational::from_real(
            mag * rat_i64((i + 1) as i64) * jitter / rat_i64(32),
        ));
    }
    for i in 0..plan.eps_couples {
        let ju = rat_i64(8 + rng.gen_range(0i64..8));
        let re = mag * rat_i64((2 * i + 1) as i64) * &ju / rat_i64(64);
        let im = mag * rat_i64((i + 2) as i64) / rat_i64(4);
        let z = GaussRational::new(re, im);
        values.push(z.clone());
        values.push(z.conj());
    }
    for i in 0..plan.sector_couples {
        // ε in the sector 0 < 2u < v, distinct per couple.
        let scale = rat_i64((i + 1) as i64);
        let eps = GaussRational::new(mag * &scale / rat_i64(8), mag * &scale / rat_i64(2));
        let a = match mode {
            Mode::Polynomial => GaussRational::one() + eps.clone(),
            Mode::Exponential => eps.inv(),
        };
        values.push(a.clone());
        values.push(a.conj());
    }
    let shift_offset = values.len();
    for base in &plan.shift_bases {
        values.push(GaussRational::from_real(base.clone()));
    }
    debug_assert_eq!(values.len(), n - 1);

    if m_tilde == 0 {
        let object = compose_object(&values, n, mode)?;
        if verify_realization(&object, spec, n, mode)?.passed() {
            return Ok(Some(object));
        }
        return Ok(None);
    }

    // Top-of-window coefficient sets the overall scale of the target.
    let w0 = plan.window_start;
    let top = window_coeffs(&values, n, mode, w0 + m_tilde, 1)?[0].clone();
    if top.is_zero() {
        return Ok(None);
    }

    // At λ = 0 every controlled coefficient vanishes and the Jacobian is
    // diagonal, so the first Newton step is λ_d = target_d / J_dd.  When a
    // diagonal entry is small (e.g. a couple slot contributes a tiny norm to
    // the bottom coefficients), a target sampled at the raw magnitude would
    // throw the step far outside the basin of the intended solution.  Cap the
    // root-sampling scale so that every implied step stays O(mag): the target
    // for row d is ~ top·σ^{m̃−d}, so demand σ^{m̃−d} ≤ mag·|J_dd/top|.
    let mut root_scale = mag.clone();
    let mut clamps = Vec::with_capacity(m_tilde);
    for d in 0..m_tilde {
        let col = window_derivative(&values, shift_offset + d, n, mode, w0, m_tilde)?;
        if col[d].is_zero() {
            return Ok(None);
        }
        let ratio = ((mag * &col[d]) / &top).abs();
        let exponent = (m_tilde - d) as f64;
        let bound = ratio.to_f64().unwrap_or(0.0).powf(1.0 / exponent) / 2.0;
        if !bound.is_finite() || bound <= 0.0 {
            return Ok(None);
        }
        if let Some(b) = Rational::from_float(bound) {
            let b = round_dyadic(&b, 48);
            if b.is_positive() && b < root_scale {
                root_scale = b;
            }
        }
        // Basin guard: half the distance from this base to its nearest
        // neighbouring special value.
        let base = &plan.shift_bases[d];
        let mut nearest: Option<Rational> = None;
        let mut consider = |other: &Rational| {
            let dist = (base - other).abs();
            if !dist.is_zero() && nearest.as_ref().map_or(true, |m| dist < *m) {
                nearest = Some(dist);
            }
        };
        for (e, other) in plan.shift_bases.iter().enumerate() {
            if e != d {
                consider(other);
            }
        }
        for f in &plan.fixed {
            if f.is_real() {
                consider(&f.re);
            }
        }
        let next_idx = w0 + m_tilde;
        if match mode {
            Mode::Polynomial => next_idx < n,
            Mode::Exponential => true,
        } {
            consider(&shift_base(next_idx, n, mode));
        }
        clamps.push(nearest.map_or_else(Rational::one, |m| m / rat_i64(2)));
    }

    // Sample the local root configuration at the admissible scale.
    // Geometric spacing keeps the sampled roots well separated relative to
    // the model error of the truncated window, so the sign pattern survives
    // the uncontrolled higher-order terms.
    let (m_pos, m_neg, m_pairs) = plan.split;
    let mut local = RatPoly::one();
    let mut scale = root_scale;
    for _ in 0..m_pos {
        let rho = &scale * rat_i64(8 + rng.gen_range(0i64..8)) / rat_i64(16);
        local = &local * &RatPoly::linear(-rho);
        scale = &scale / rat_i64(4);
    }
    for _ in 0..m_neg {
        let rho = &scale * rat_i64(8 + rng.gen_range(0i64..8)) / rat_i64(16);
        local = &local * &RatPoly::linear(rho);
        scale = &scale / rat_i64(4);
    }
    for i in 0..m_pairs {
        // (x − u)² + v²: a conjugate pair at u ± iv; alternate the sign of u.
        let sgn = if i % 2 == 0 { 1 } else { -1 };
        let v = &scale * rat_i64(8 + rng.gen_range(0i64..8)) / rat_i64(128);
        let u = &v * rat_i64(sgn) / rat_i64(2);
        let quad = RatPoly::new(vec![&u * &u + &v * &v, -(rat_i64(2) * &u), Rational::one()]);
        local = &local * &quad;
        scale = &scale / rat_i64(4);
    }

    let targets: Vec<Rational> = (0..m_tilde).map(|d| &top * &local.coeff(d)).collect();

    // Newton on the window slots.  Verification is exact but costly, so it
    // only runs once the residual is small next to the target coefficients.
    let round_no = mag_round(mag);
    let bits = 64 + 2 * round_no as u32;
    let gate: Vec<Rational> = targets
        .iter()
        .map(|t| {
            let scale = if t.is_zero() {
                (&top * mag).abs()
            } else {
                t.abs()
            };
            scale / rat_i64(64)
        })
        .collect();
    let mut lambdas = vec![Rational::zero(); m_tilde];
    let mut verifies = 0usize;
    for _ in 0..cfg.newton_iters {
        *newton_spent += 1;
        for (i, l) in lambdas.iter().enumerate() {
            values[shift_offset + i] =
                GaussRational::from_real(&plan.shift_bases[i] + l);
        }
        let current = window_coeffs(&values, n, mode, w0, m_tilde)?;
        let residual: Vec<Rational> = current
            .iter()
            .zip(&targets)
            .map(|(c, t)| c - t)
            .collect();
        let small = residual
            .iter()
            .zip(&gate)
            .all(|(r, g)| r.abs() <= *g);
        if small {
            let object = compose_object(&values, n, mode)?;
            let out = verify_realization(&object, spec, n, mode)?;
            if out.passed() {
                return Ok(Some(object));
            }
            if std::env::var_os("SZEGO_DEBUG_REALIZE").is_some() {
                eprintln!(
                    "verify miss: obs={:?} exp={:?} distinct={}/{} mag={} values={:?} object={:?}",
                    out.observed.as_tuple(),
                    out.expected.as_tuple(),
                    out.roots_distinct,
                    out.factors_distinct,
                    mag,
                    values,
                    object.coeffs()
                );
            }
            verifies += 1;
            if verifies >= 4 {
                return Ok(None);
            }
        }
        if residual.iter().all(|r| r.is_zero()) {
            return Ok(None);
        }
        let mut jac = vec![vec![Rational::zero(); m_tilde]; m_tilde];
        for s in 0..m_tilde {
            let col = window_derivative(&values, shift_offset + s, n, mode, w0, m_tilde)?;
            for (row, v) in col.into_iter().enumerate() {
                jac[row][s] = v;
            }
        }
        let delta = match solve_linear(jac, residual) {
            Some(d) => d,
            None => return Ok(None),
        };
        let mut moved = false;
        for (l, d) in lambdas.iter_mut().zip(&delta) {
            let next = round_dyadic(&(&*l - d), bits);
            if next != *l {
                moved = true;
            }
            *l = next;
        }
        if lambdas
            .iter()
            .zip(&clamps)
            .any(|(l, c)| l.abs() > *c)
        {
            // The step left the basin of the intended solution.
            return Ok(None);
        }
        if !moved {
            break;
        }
    }
    Ok(None)
}

/// Fallback for flagged specs: sample exact factor multisets with the
/// prescribed a-side counts and test the resulting signature.
fn fallback_search(
    spec: &CaseSpec,
    mode: Mode,
    cfg: &SearchConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Option<RatPoly>> {
    let n = spec.n;
    let expected = spec.expected_signature();
    let a_pos = expected.a_side().pos;
    let a_neg = expected.a_side().neg;
    let a_zero = expected.neg_a.zero;
    let a_pairs = expected.neg_a.complex_pairs;
    for t in 0..cfg.fallback_tries {
        let shift = 3 + (t % 8) as u32;
        let mut values = Vec::new();
        for _ in 0..a_zero {
            values.push(GaussRational::zero());
        }
        // Forced values when a zero root of multiplicity k is demanded.
        let mut neg_left = a_neg;
        for j in 1..spec.k {
            values.push(GaussRational::from_real(shift_base(j, n, mode)));
            neg_left = neg_left.saturating_sub(1);
        }
        for _ in 0..neg_left {
            values.push(GaussRational::from_real(-dyadic(
                1 + rng.gen_range(0i64..200),
                shift,
            )));
        }
        for _ in 0..a_pos {
            values.push(GaussRational::from_real(dyadic(
                1 + rng.gen_range(0i64..200),
                shift,
            )));
        }
        for _ in 0..a_pairs {
            let z = GaussRational::new(
                dyadic(rng.gen_range(-200i64..200), shift),
                dyadic(1 + rng.gen_range(0i64..200), shift),
            );
            values.push(z.clone());
            values.push(z.conj());
        }
        if values.len() != n - 1 {
            return Ok(None);
        }
        let object = compose_object(&values, n, mode)?;
        if verify_realization(&object, spec, n, mode)?.passed() {
            return Ok(Some(object));
        }
    }
    Ok(None)
}

/// Realize one CaseSpec, returning a machine-checkable certificate.
/// Deterministic for fixed (spec, mode, config).
pub fn realize_case(
    spec: &CaseSpec,
    mode: Mode,
    cfg: &SearchConfig,
) -> Result<RealizationCertificate> {
    if !spec.is_valid() {
        return Err(Error::InvalidArgument("invalid case spec".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (spec.n as u64) << 32
        ^ (spec.case_id as u64) << 24);
    let mut candidates = 0usize;
    let mut newton_spent = 0usize;

    if spec.construction_unsupported {
        if let Some(object) = fallback_search(spec, mode, cfg, &mut rng)? {
            return finish(spec, mode, object, SearchTrace {
                rounds: 0,
                candidates: cfg.fallback_tries,
                newton_iterations: 0,
                final_magnitude: Rational::zero(),
            });
        }
        return Err(Error::Unsupported(format!(
            "odd-delta spec not covered by the constructive proof; \
             fallback search found nothing in {} tries",
            cfg.fallback_tries
        )));
    }

    let plan = build_plan(spec, mode)?;
    let mut mag = rat(1, 8);
    for round in 0..cfg.max_rounds {
        for _ in 0..cfg.resamples {
            candidates += 1;
            if let Some(object) =
                attempt(spec, &plan, mode, &mag, &mut rng, cfg, &mut newton_spent)?
            {
                return finish(spec, mode, object, SearchTrace {
                    rounds: round + 1,
                    candidates,
                    newton_iterations: newton_spent,
                    final_magnitude: mag,
                });
            }
        }
        mag = &mag / rat_i64(2);
    }
    Err(Error::BudgetExhausted(format!(
        "no certificate for {:?} after {} candidates",
        spec, candidates
    )))
}

fn finish(
    spec: &CaseSpec,
    mode: Mode,
    object: RatPoly,
    trace: SearchTrace,
) -> Result<RealizationCertificate> {
    let factors = match mode {
        Mode::Polynomial => decompose_poly(&object, spec.n)?,
        Mode::Exponential => decompose_exp(&object)?,
    };
    let signature = signature_pair(&object, spec.n, mode)?;
    Ok(RealizationCertificate {
        spec: spec.clone(),
        mode,
        object,
        factors,
        signature,
        trace,
    })
}

/// Outcome of driving every enumerated spec through realize_case.
#[derive(Debug, Clone)]
pub struct RealizeSummary {
    pub realized: usize,
    pub unsupported_failed: usize,
    pub certificates: Vec<RealizationCertificate>,
    /// Flagged specs for which even the fallback found nothing.
    pub unsupported: Vec<CaseSpec>,
}

/// Realize every admissible spec for n.  A failure on a supported spec is a
/// hard error (the theorems guarantee existence); flagged specs may land in
/// `unsupported`.
pub fn realize_all(n: usize, mode: Mode, cfg: &SearchConfig) -> Result<RealizeSummary> {
    let specs = crate::cases::enumerate_cases(n)?;
    let mut certificates = Vec::new();
    let mut unsupported = Vec::new();
    for spec in specs {
        match realize_case(&spec, mode, cfg) {
            Ok(cert) => certificates.push(cert),
            Err(Error::Unsupported(_)) if spec.construction_unsupported => {
                unsupported.push(spec);
            }
            Err(e) => {
                return Err(Error::InvalidArgument(format!(
                    "supported spec failed: {:?}: {}",
                    spec, e
                )))
            }
        }
    }
    Ok(RealizeSummary {
        realized: certificates.len(),
        unsupported_failed: unsupported.len(),
        certificates,
        unsupported,
    })
}
