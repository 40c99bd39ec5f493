//! Numerical sinc integrals: `I_p = (1/π)∫ |sin t / t|^p dt` and the slice
//! volume `(1/π)∫ Π sin(aᵢt)/(aᵢt) dt` for a unit normal `a`.
//!
//! The integrand is even, so both integrals are `(2/π)∫₀^∞`. The finite part
//! `[0, T]` is handled by globally adaptive Simpson quadrature. For products
//! of sines the tail `[T, ∞)` is expanded into exponentials `e^{iνt} t^{-N}`
//! whose integrals are evaluated by a truncated integration-by-parts series
//! with an explicit remainder bound; for odd powers of `|sinc|` the tail is
//! dropped and bounded by `(2/π)·T^{1−p}/(p−1)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};
use std::f64::consts::{FRAC_2_PI, PI, SQRT_2};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::AnalyticError;
use crate::linalg::primitive_integer;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const MIN_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_PANELS: usize = 1_000_000;
pub const MAX_POWER: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Adaptive-rule error estimate on `[0, T]` plus the tail bound.
    pub error_bound: f64,
    pub truncation_t: f64,
    pub panel_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureOptions {
    pub tolerance: f64,
    pub max_panels: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            tolerance: DEFAULT_TOLERANCE,
            max_panels: DEFAULT_MAX_PANELS,
        }
    }
}

impl QuadratureOptions {
    pub fn with_tolerance(tolerance: f64) -> Self {
        QuadratureOptions {
            tolerance,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<(), AnalyticError> {
        if !self.tolerance.is_finite() || self.tolerance < MIN_TOLERANCE {
            return Err(AnalyticError::ToleranceTooSmall(self.tolerance));
        }
        Ok(())
    }
}

fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// `Π sin(ωᵢ t)/(ωᵢ t)` with `ωᵢ = mᵢ / scale` for positive integers `mᵢ`.
#[derive(Clone, Debug)]
struct SincProduct {
    numerators: Vec<i128>,
    scale: f64,
}

impl SincProduct {
    fn omegas(&self) -> impl Iterator<Item = f64> + '_ {
        self.numerators.iter().map(move |&m| m as f64 / self.scale)
    }

    fn eval(&self, t: f64) -> f64 {
        self.omegas().map(|w| sinc(w * t)).product()
    }

    /// Weights `W_k` with `Π (e^{iωᵢt} − e^{−iωᵢt}) = Σ_k W_k e^{i k t / scale}`.
    fn exponential_weights(&self) -> BTreeMap<i128, f64> {
        let mut weights: BTreeMap<i128, f64> = BTreeMap::from([(0, 1.0)]);
        for &m in &self.numerators {
            let mut next: BTreeMap<i128, f64> = BTreeMap::new();
            for (&k, &w) in &weights {
                *next.entry(k + m).or_insert(0.0) += w;
                *next.entry(k - m).or_insert(0.0) -= w;
            }
            next.retain(|_, w| *w != 0.0);
            weights = next;
        }
        weights
    }

    fn min_nonzero_frequency(&self) -> Option<f64> {
        self.exponential_weights()
            .keys()
            .filter(|&&k| k != 0)
            .map(|&k| k.unsigned_abs() as f64 / self.scale)
            .reduce(f64::min)
    }

    /// `∫_T^∞ g(t) dt` and a bound on its truncation error.
    fn tail(&self, t: f64) -> (f64, f64) {
        let n = self.numerators.len() as u32;
        let prefactor: f64 = self.omegas().map(|w| 1.0 / w).product();
        let mut sum = Complex64::new(0.0, 0.0);
        let mut bound = 0.0;
        for (&k, &w) in &self.exponential_weights() {
            let (j, jb) = exp_power_tail(n, k as f64 / self.scale, t, k == 0);
            sum += w * j;
            bound += w.abs() * jb;
        }
        // (2i)^{-N}; the imaginary part cancels between ±ν
        let scale = Complex64::new(0.0, 2.0).powi(-(n as i32));
        ((prefactor * scale * sum).re, prefactor * 0.5f64.powi(n as i32) * bound)
    }
}

/// `J = ∫_T^∞ e^{iνt} t^{-n} dt` and an error bound.
///
/// Repeated integration by parts gives
/// `J = −e^{iνT} Σ_{k<K} (n)_k T^{−n−k} / (iν)^{k+1} + (n)_K/(iν)^K ∫_T^∞ e^{iνt} t^{−n−K} dt`,
/// and the last integral is bounded by `T^{1−n−K}/(n+K−1)`. The series is
/// asymptotic, so it is cut where that bound is smallest.
fn exp_power_tail(n: u32, nu: f64, t: f64, exactly_zero: bool) -> (Complex64, f64) {
    let nf = f64::from(n);
    if exactly_zero {
        debug_assert!(n >= 2);
        return (Complex64::from(t.powf(1.0 - nf) / (nf - 1.0)), 0.0);
    }
    let lead = -Complex64::from_polar(1.0, nu * t);
    let inv_i_nu = Complex64::new(0.0, -1.0 / nu);
    // term_k = lead · (n)_k T^{−n−k} · (iν)^{−k−1}
    let mut term = lead * t.powf(-nf) * inv_i_nu;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut best = (sum, f64::INFINITY);
    for k in 0..400u32 {
        sum += term;
        // the bound after k + 1 terms equals |term_k|
        let remainder = term.norm();
        if remainder >= best.1 {
            break;
        }
        best = (sum, remainder);
        if remainder == 0.0 {
            break;
        }
        term *= (nf + f64::from(k)) / t * inv_i_nu;
    }
    best
}

#[derive(Clone, Copy, Debug)]
struct Segment {
    a: f64,
    b: f64,
    f: [f64; 5],
    value: f64,
    err: f64,
}

impl Segment {
    /// `inherited` is a second error estimate passed down from the parent.
    fn new(a: f64, b: f64, f: [f64; 5], inherited: f64) -> Self {
        let h = b - a;
        let coarse = h / 6.0 * (f[0] + 4.0 * f[2] + f[4]);
        let fine = h / 12.0 * (f[0] + 4.0 * f[1] + 2.0 * f[2] + 4.0 * f[3] + f[4]);
        let diff = fine - coarse;
        Segment {
            a,
            b,
            f,
            value: fine + diff / 15.0,
            err: (diff.abs() / 15.0).max(inherited),
        }
    }

    fn evaluate(a: f64, b: f64, g: &impl Fn(f64) -> f64) -> Self {
        let h = b - a;
        let f = [g(a), g(a + 0.25 * h), g(a + 0.5 * h), g(a + 0.75 * h), g(b)];
        Segment::new(a, b, f, 0.0)
    }

    /// Halves the segment. The gap between the parent's extrapolated value
    /// and the sum of the children's checks the parent's estimate, which
    /// guards against a coarse and fine rule agreeing by accident.
    fn split(&self, g: &impl Fn(f64) -> f64) -> (Segment, Segment) {
        let h = self.b - self.a;
        let m = self.a + 0.5 * h;
        let left = [
            self.f[0],
            g(self.a + 0.125 * h),
            self.f[1],
            g(self.a + 0.375 * h),
            self.f[2],
        ];
        let right = [
            self.f[2],
            g(self.a + 0.625 * h),
            self.f[3],
            g(self.a + 0.875 * h),
            self.f[4],
        ];
        let (l, r) = (
            Segment::new(self.a, m, left, 0.0),
            Segment::new(m, self.b, right, 0.0),
        );
        let gap = 0.5 * (l.value + r.value - self.value).abs();
        (
            Segment::new(self.a, m, left, gap),
            Segment::new(m, self.b, right, gap),
        )
    }
}

struct ByError(Segment);

impl PartialEq for ByError {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for ByError {}
impl PartialOrd for ByError {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ByError {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .err
            .total_cmp(&other.0.err)
            .then(other.0.a.total_cmp(&self.0.a))
    }
}

/// Deterministic pairwise summation.
fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 8 {
        return values.iter().sum();
    }
    let (l, r) = values.split_at(values.len() / 2);
    pairwise_sum(l) + pairwise_sum(r)
}

/// Globally adaptive Simpson on `[0, count·width]`, refining the segment with the
/// largest error estimate until the total estimate reaches `target`.
/// Returns `None` when the initial panels alone exceed the budget.
fn adaptive_simpson(
    g: &impl Fn(f64) -> f64,
    width: f64,
    count: usize,
    target: f64,
    max_panels: usize,
) -> Option<(f64, f64, usize)> {
    if 2 * count > max_panels {
        return None;
    }
    let mut heap: BinaryHeap<ByError> = (0..count)
        .flat_map(|i| {
            let (l, r) = Segment::evaluate(i as f64 * width, (i + 1) as f64 * width, g).split(g);
            [ByError(l), ByError(r)]
        })
        .collect();
    let mut done: Vec<Segment> = Vec::new();
    let mut total: f64 = heap.iter().map(|s| s.0.err).sum();
    let mut iterations = 0usize;
    while total > target && heap.len() + done.len() < max_panels {
        let Some(ByError(worst)) = heap.pop() else { break };
        if worst.b - worst.a <= worst.a.abs().max(1.0) * 1e-13 {
            done.push(worst);
            continue;
        }
        let (l, r) = worst.split(g);
        total += l.err + r.err - worst.err;
        heap.push(ByError(l));
        heap.push(ByError(r));
        iterations += 1;
        if iterations.is_multiple_of(4096) {
            total = heap.iter().map(|s| s.0.err).chain(done.iter().map(|s| s.err)).sum();
        }
    }
    done.extend(heap.into_iter().map(|s| s.0));
    done.sort_by(|x, y| x.a.total_cmp(&y.a));
    let values: Vec<f64> = done.iter().map(|s| s.value).collect();
    let errors: Vec<f64> = done.iter().map(|s| s.err).collect();
    Some((pairwise_sum(&values), pairwise_sum(&errors), done.len()))
}

fn finish(
    main: Option<(f64, f64, usize)>,
    tail_value: f64,
    tail_bound: f64,
    t: f64,
    tolerance: f64,
) -> Result<QuadratureResult, AnalyticError> {
    let Some((value, err, panels)) = main else {
        return Err(AnalyticError::ToleranceUnreachable {
            requested: tolerance,
            achieved: f64::INFINITY,
            panels: 0,
        });
    };
    let result = QuadratureResult {
        value: FRAC_2_PI * (value + tail_value),
        error_bound: FRAC_2_PI * (err + tail_bound),
        truncation_t: t,
        panel_count: panels,
    };
    if result.error_bound > tolerance || !result.value.is_finite() {
        return Err(AnalyticError::ToleranceUnreachable {
            requested: tolerance,
            achieved: result.error_bound,
            panels,
        });
    }
    Ok(result)
}

/// Share of the tolerance given to the adaptive part.
const MAIN_SHARE: f64 = 0.45;

fn integrate_product(
    product: &SincProduct,
    options: &QuadratureOptions,
) -> Result<QuadratureResult, AnalyticError> {
    let n = product.numerators.len() as f64;
    let nu_min = product
        .min_nonzero_frequency()
        .expect("a nonempty sine product has a nonzero frequency");
    let max_frequency: f64 = product.omegas().sum();
    let width = PI / (2.0 * max_frequency.max(1.0));
    let wanted_t = ((60.0 + 2.0 * n) / nu_min).max(10.0);
    let count = (wanted_t / width).ceil() as usize;
    let t = count as f64 * width;
    let (tail_value, tail_bound) = product.tail(t);
    let target = MAIN_SHARE * options.tolerance / FRAC_2_PI;
    let main = adaptive_simpson(&|x| product.eval(x), width, count, target, options.max_panels);
    finish(main, tail_value, tail_bound, t, options.tolerance)
}

/// `√2/√p`, the upper bound for `I_p` (attained only at p = 2).
pub fn sinc_power_bound(p: u32) -> f64 {
    SQRT_2 / f64::from(p).sqrt()
}

pub fn sinc_power_integral(p: u32) -> Result<QuadratureResult, AnalyticError> {
    sinc_power_integral_with(p, &QuadratureOptions::default())
}

/// `I_p = (1/π)∫ |sin t|^p / |t|^p dt` for `2 ≤ p ≤ 64`.
pub fn sinc_power_integral_with(
    p: u32,
    options: &QuadratureOptions,
) -> Result<QuadratureResult, AnalyticError> {
    if !(2..=MAX_POWER).contains(&p) {
        return Err(AnalyticError::InvalidPower(p));
    }
    options.validate()?;
    if p.is_multiple_of(2) {
        let product = SincProduct {
            numerators: vec![1; p as usize],
            scale: 1.0,
        };
        return integrate_product(&product, options);
    }
    let pf = f64::from(p);
    // (2/π) T^{1−p}/(p−1) ≤ tol/2
    let t_min = (FRAC_2_PI / ((pf - 1.0) * 0.5 * options.tolerance)).powf(1.0 / (pf - 1.0));
    // panel boundaries land on the kinks of |sin t|^p at multiples of π
    let per_period = 2 * p as usize;
    let width = PI / per_period as f64;
    let count = ((t_min / PI).ceil() as usize).max(4) * per_period;
    let t = count as f64 * width;
    let tail_bound = t.powf(1.0 - pf) / (pf - 1.0);
    let target = MAIN_SHARE * options.tolerance / FRAC_2_PI;
    let main = adaptive_simpson(
        &|x| sinc(x).abs().powi(p as i32),
        width,
        count,
        target,
        options.max_panels,
    );
    finish(main, 0.0, tail_bound, t, options.tolerance)
}

fn normal_numerators(normal: &[Rational]) -> Result<Vec<i128>, AnalyticError> {
    if normal.len() < 2 {
        return Err(AnalyticError::DimensionTooSmall);
    }
    if normal.iter().all(Zero::is_zero) {
        return Err(AnalyticError::AllZeroNormal);
    }
    let ints: Vec<BigInt> = primitive_integer(normal);
    let mut numerators: Vec<i128> = ints
        .iter()
        .filter(|m| !m.is_zero())
        .map(|m| m.abs().to_i128().ok_or(AnalyticError::NormalTooLarge))
        .collect::<Result<_, _>>()?;
    numerators.sort_unstable();
    Ok(numerators)
}

/// Slice volume `(1/π)∫ Π sin(aᵢt)/(aᵢt) dt` with `a` the normal rescaled to
/// unit length; zero entries contribute a factor 1 and are dropped.
pub fn slice_volume_quadrature(
    normal: &[Rational],
    tolerance: f64,
) -> Result<QuadratureResult, AnalyticError> {
    slice_volume_quadrature_with(normal, &QuadratureOptions::with_tolerance(tolerance))
}

pub fn slice_volume_quadrature_with(
    normal: &[Rational],
    options: &QuadratureOptions,
) -> Result<QuadratureResult, AnalyticError> {
    options.validate()?;
    let numerators = normal_numerators(normal)?;
    let squared: i128 = numerators
        .iter()
        .try_fold(0i128, |acc, m| m.checked_mul(*m).and_then(|s| acc.checked_add(s)))
        .ok_or(AnalyticError::NormalTooLarge)?;
    let product = SincProduct {
        numerators,
        scale: (squared as f64).sqrt(),
    };
    integrate_product(&product, options)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BallBoundReport {
    pub value: f64,
    pub error_bound: f64,
    pub lower: f64,
    pub upper: f64,
    pub within_bounds: bool,
    /// Every unit-normal entry satisfies `|a_j| ≤ 1/√2`.
    pub hypothesis_holds: bool,
}

/// Checks `1 ≤ volume ≤ √2` up to `tol` plus the reported error bound.
pub fn ball_bound_check(normal: &[Rational], tolerance: f64) -> Result<BallBoundReport, AnalyticError> {
    let q = slice_volume_quadrature(normal, tolerance)?;
    let numerators = normal_numerators(normal)?;
    let squared: i128 = numerators.iter().map(|m| m * m).sum();
    let hypothesis_holds = numerators.iter().all(|m| 2 * m * m <= squared);
    let slack = tolerance + q.error_bound;
    Ok(BallBoundReport {
        value: q.value,
        error_bound: q.error_bound,
        lower: 1.0,
        upper: SQRT_2,
        within_bounds: q.value >= 1.0 - slack && q.value <= SQRT_2 + slack,
        hypothesis_holds,
    })
}
