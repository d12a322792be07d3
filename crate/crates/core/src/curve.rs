//! Curve representations: jet-evaluable curves, the flat-bump seeds and their
//! iterates, and dense samples refined by turning angle.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finn_map::phi_jet_shifted;
use crate::jets::{Jet, PlaneJet};

/// Seed jets are taken as exactly zero this close to an endpoint.
pub const ENDPOINT_FLAT_ZONE: f64 = 1e-6;

/// Jet orders reserved on top of the iteration depth so that curvature is
/// still available on the deepest curve.
pub const CURVATURE_ORDERS: usize = 2;

/// Default jet budget: depth 8 plus the curvature reserve.
pub const DEFAULT_JET_BUDGET: usize = 8 + CURVATURE_ORDERS;

/// Anything that can produce a [`PlaneJet`] at a parameter value.
pub trait JetCurve: Send + Sync + fmt::Debug {
    /// Closed parameter interval.
    fn domain(&self) -> (f64, f64);

    /// Highest jet order `jet` can deliver.
    fn max_order(&self) -> usize;

    fn jet(&self, t: f64, order: usize) -> Result<PlaneJet>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedKind {
    /// `a * exp(-1 / (t (1 - t)))`
    FinnBump,
    /// The x-axis segment from (0,0) to (1,0).
    Straight,
    /// `a * exp(-c / (t (1 - t)))` with a user-chosen sharpness `c`.
    CustomBump,
}

fn default_amplitude() -> f64 {
    4.0
}

fn default_sharpness() -> f64 {
    1.0
}

fn unit_domain() -> [f64; 2] {
    [0.0, 1.0]
}

/// The depth-0 curve `(t, y(t))` on `t in [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedSpec {
    pub kind: SeedKind,
    #[serde(default = "default_amplitude")]
    pub amplitude: f64,
    #[serde(default = "default_sharpness")]
    pub sharpness: f64,
    #[serde(default = "unit_domain")]
    pub domain: [f64; 2],
}

impl SeedSpec {
    pub fn finn(amplitude: f64) -> SeedSpec {
        SeedSpec {
            kind: SeedKind::FinnBump,
            amplitude,
            sharpness: 1.0,
            domain: unit_domain(),
        }
    }

    pub fn straight() -> SeedSpec {
        SeedSpec {
            kind: SeedKind::Straight,
            amplitude: 0.0,
            sharpness: 1.0,
            domain: unit_domain(),
        }
    }

    pub fn custom_bump(amplitude: f64, sharpness: f64) -> SeedSpec {
        SeedSpec {
            kind: SeedKind::CustomBump,
            amplitude,
            sharpness,
            domain: unit_domain(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.amplitude.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "seed amplitude must be finite, got {}",
                self.amplitude
            )));
        }
        if !(self.sharpness.is_finite() && self.sharpness > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "seed sharpness must be positive, got {}",
                self.sharpness
            )));
        }
        if self.domain != unit_domain() {
            return Err(Error::InvalidArgument(
                "seed domain must be [0, 1]".to_string(),
            ));
        }
        Ok(())
    }

    /// True when the seed is the x-axis segment.
    pub fn is_trivial(&self) -> bool {
        self.kind == SeedKind::Straight || self.amplitude == 0.0
    }

    fn sharpness_value(&self) -> f64 {
        match self.kind {
            SeedKind::CustomBump => self.sharpness,
            _ => 1.0,
        }
    }

    /// Scalar value of the seed height at `t`.
    pub fn height(&self, t: f64) -> f64 {
        if self.is_trivial() || t <= 0.0 || t >= 1.0 {
            return 0.0;
        }
        self.amplitude * (-self.sharpness_value() / (t * (1.0 - t))).exp()
    }

    /// Jet of the seed height `y(t)` at `t0`.
    pub fn height_jet(&self, t0: f64, order: usize) -> Jet {
        if self.is_trivial() || !(ENDPOINT_FLAT_ZONE..=1.0 - ENDPOINT_FLAT_ZONE).contains(&t0) {
            return Jet::zero(order);
        }
        let t = Jet::variable(t0, order);
        let u = &t * &t.scale(-1.0).offset(1.0);
        let exponent = Jet::constant(-self.sharpness_value(), order)
            .div(&u)
            .expect("t(1-t) is positive inside the flat zone");
        exponent.exp().scale(self.amplitude)
    }

    pub fn jet(&self, t0: f64, order: usize) -> PlaneJet {
        PlaneJet::new(Jet::variable(t0, order), self.height_jet(t0, order))
    }
}

/// The curve `gamma_n` obtained by applying the shifted front-track map `n`
/// times to a seed. Each application consumes one jet order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticCurve {
    seed: SeedSpec,
    depth: usize,
    jet_budget: usize,
}

impl AnalyticCurve {
    pub fn new(seed: SeedSpec, jet_budget: usize) -> Result<AnalyticCurve> {
        seed.validate()?;
        Ok(AnalyticCurve {
            seed,
            depth: 0,
            jet_budget,
        })
    }

    /// Depth `depth` of the iteration, checking that the budget allows it.
    pub fn at_depth(seed: SeedSpec, depth: usize, jet_budget: usize) -> Result<AnalyticCurve> {
        let mut curve = AnalyticCurve::new(seed, jet_budget)?;
        if depth > jet_budget {
            return Err(Error::OrderBudgetExceeded {
                requested: 0,
                depth,
                budget: jet_budget,
            });
        }
        curve.depth = depth;
        Ok(curve)
    }

    pub(crate) fn with_depth(&self, depth: usize) -> AnalyticCurve {
        AnalyticCurve { depth, ..*self }
    }

    pub fn seed(&self) -> &SeedSpec {
        &self.seed
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn jet_budget(&self) -> usize {
        self.jet_budget
    }

    /// Jet of `gamma_n` at `t`: the seed jet of order `order + n` pushed
    /// through `n` applications of the shifted map.
    pub fn evaluate(&self, t: f64, order: usize) -> Result<PlaneJet> {
        if order > self.max_order_value() {
            return Err(Error::OrderBudgetExceeded {
                requested: order,
                depth: self.depth,
                budget: self.jet_budget,
            });
        }
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::InvalidArgument(format!(
                "parameter {t} outside [0, 1]"
            )));
        }
        let mut germ = self.seed.jet(t, order + self.depth);
        for _ in 0..self.depth {
            germ = phi_jet_shifted(&germ).map_err(|e| match e {
                Error::NotImmersed { .. } => Error::NotImmersed { t },
                other => other,
            })?;
        }
        if !germ.is_finite() {
            return Err(Error::JetOverflow {
                depth: self.depth,
                t,
            });
        }
        Ok(germ)
    }

    fn max_order_value(&self) -> usize {
        self.jet_budget - self.depth
    }
}

impl JetCurve for AnalyticCurve {
    fn domain(&self) -> (f64, f64) {
        (0.0, 1.0)
    }

    fn max_order(&self) -> usize {
        self.max_order_value()
    }

    fn jet(&self, t: f64, order: usize) -> Result<PlaneJet> {
        self.evaluate(t, order)
    }
}

/// Depth-0 Finn seed `(t, a exp(-1/(t(1-t))))` with the default budget.
pub fn finn_seed(amplitude: f64) -> Result<AnalyticCurve> {
    AnalyticCurve::new(SeedSpec::finn(amplitude), DEFAULT_JET_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub pos: [f64; 2],
    pub unit_tangent: [f64; 2],
    pub speed: f64,
    pub curvature: f64,
}

impl Sample {
    /// Builds a sample from a germ of order >= 2.
    pub fn from_jet(t: f64, germ: &PlaneJet) -> Result<Sample> {
        let [dx, dy] = germ.velocity().ok_or(Error::OrderExhausted)?;
        let speed = dx.hypot(dy);
        if !(speed > 0.0) {
            return Err(Error::NotImmersed { t });
        }
        let curvature = germ.curvature().ok_or(Error::OrderExhausted)?;
        Ok(Sample {
            t,
            pos: germ.position(),
            unit_tangent: [dx / speed, dy / speed],
            speed,
            curvature,
        })
    }

    pub fn x(&self) -> f64 {
        self.pos[0]
    }

    pub fn y(&self) -> f64 {
        self.pos[1]
    }
}

/// Ordered samples of one curve, optionally tied to the jet source they came
/// from so that metrics can refine between samples.
#[derive(Clone, Debug)]
pub struct SampledCurve {
    pub samples: Vec<Sample>,
    pub depth: usize,
    pub source: Option<Arc<dyn JetCurve>>,
    /// Tangents and curvature came from finite differences, not jets.
    pub approximate: bool,
}

impl SampledCurve {
    /// Sample list without a jet source; tangents, speed and curvature are
    /// estimated by finite differences in `t`.
    pub fn from_points(ts: &[f64], points: &[[f64; 2]], depth: usize) -> Result<SampledCurve> {
        if ts.len() != points.len() || ts.len() < 3 {
            return Err(Error::InvalidArgument(
                "need at least 3 matching parameters and points".to_string(),
            ));
        }
        if ts.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidArgument(
                "parameters must be strictly increasing".to_string(),
            ));
        }
        let n = ts.len();
        let mut samples = Vec::with_capacity(n);
        for i in 0..n {
            let (a, b) = match i {
                0 => (0, 1),
                _ if i == n - 1 => (n - 2, n - 1),
                _ => (i - 1, i + 1),
            };
            let (d1, d2) = fd_derivatives(ts, points, i, a, b);
            let speed = d1[0].hypot(d1[1]);
            if !(speed > 0.0) {
                return Err(Error::NotImmersed { t: ts[i] });
            }
            let curvature = (d1[0] * d2[1] - d1[1] * d2[0]) / (speed * speed * speed);
            samples.push(Sample {
                t: ts[i],
                pos: points[i],
                unit_tangent: [d1[0] / speed, d1[1] / speed],
                speed,
                curvature,
            });
        }
        Ok(SampledCurve {
            samples,
            depth,
            source: None,
            approximate: true,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn points(&self) -> Vec<[f64; 2]> {
        self.samples.iter().map(|s| s.pos).collect()
    }

    pub fn params(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.t).collect()
    }

    /// Largest turning angle between consecutive unit tangents.
    pub fn max_turning(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| angle_between(w[0].unit_tangent, w[1].unit_tangent))
            .fold(0.0, f64::max)
    }
}

/// First and second derivatives at `i` from the three-point non-uniform
/// stencil through `a`, `i`, `b` (or the two-point slope at the ends).
fn fd_derivatives(
    ts: &[f64],
    p: &[[f64; 2]],
    i: usize,
    a: usize,
    b: usize,
) -> ([f64; 2], [f64; 2]) {
    if a == i || b == i {
        // endpoint: use the three nearest points
        let (j0, j1, j2) = if i == 0 { (0, 1, 2) } else { (i - 2, i - 1, i) };
        let d1 = lagrange_d1(ts, p, j0, j1, j2, ts[i]);
        let d2 = lagrange_d2(ts, p, j0, j1, j2);
        return (d1, d2);
    }
    (
        lagrange_d1(ts, p, a, i, b, ts[i]),
        lagrange_d2(ts, p, a, i, b),
    )
}

fn lagrange_d1(ts: &[f64], p: &[[f64; 2]], i0: usize, i1: usize, i2: usize, t: f64) -> [f64; 2] {
    let (t0, t1, t2) = (ts[i0], ts[i1], ts[i2]);
    let w0 = ((t - t1) + (t - t2)) / ((t0 - t1) * (t0 - t2));
    let w1 = ((t - t0) + (t - t2)) / ((t1 - t0) * (t1 - t2));
    let w2 = ((t - t0) + (t - t1)) / ((t2 - t0) * (t2 - t1));
    [0, 1].map(|k| w0 * p[i0][k] + w1 * p[i1][k] + w2 * p[i2][k])
}

fn lagrange_d2(ts: &[f64], p: &[[f64; 2]], i0: usize, i1: usize, i2: usize) -> [f64; 2] {
    let (t0, t1, t2) = (ts[i0], ts[i1], ts[i2]);
    let w0 = 2.0 / ((t0 - t1) * (t0 - t2));
    let w1 = 2.0 / ((t1 - t0) * (t1 - t2));
    let w2 = 2.0 / ((t2 - t0) * (t2 - t1));
    [0, 1].map(|k| w0 * p[i0][k] + w1 * p[i1][k] + w2 * p[i2][k])
}

pub fn angle_between(a: [f64; 2], b: [f64; 2]) -> f64 {
    let cross = a[0] * b[1] - a[1] * b[0];
    let dot = a[0] * b[0] + a[1] * b[1];
    cross.atan2(dot).abs()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplingOptions {
    /// Maximum turning angle between neighbouring samples, radians.
    pub theta_max: f64,
    pub min_samples: usize,
    /// Refinement cap; exceeding it is an error.
    pub max_samples: usize,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        SamplingOptions {
            theta_max: 0.02,
            min_samples: 257,
            max_samples: 4_000_000,
        }
    }
}

impl SamplingOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.theta_max > 0.0 && self.theta_max <= std::f64::consts::FRAC_PI_4) {
            return Err(Error::InvalidArgument(format!(
                "theta_max must lie in (0, pi/4], got {}",
                self.theta_max
            )));
        }
        if self.min_samples < 2 {
            return Err(Error::InvalidArgument(
                "min_samples must be at least 2".to_string(),
            ));
        }
        if self.max_samples < self.min_samples {
            return Err(Error::InvalidArgument(format!(
                "max_samples {} is below min_samples {}",
                self.max_samples, self.min_samples
            )));
        }
        Ok(())
    }
}

/// Smallest parameter step the sampler will bisect to, relative to the domain.
const MIN_STEP_FRACTION: f64 = 1e-13;

/// Adaptive sampling: starts from a uniform grid and bisects every interval
/// whose turning (tangent angle, or curvature times arc length) exceeds
/// `theta_max`.
pub fn sample(
    curve: Arc<dyn JetCurve>,
    depth: usize,
    opts: &SamplingOptions,
) -> Result<SampledCurve> {
    opts.validate()?;
    if curve.max_order() < 2 {
        return Err(Error::OrderBudgetExceeded {
            requested: 2,
            depth,
            budget: curve.max_order(),
        });
    }
    let (a, b) = curve.domain();
    let n0 = opts.min_samples;
    let grid: Vec<f64> = (0..n0)
        .map(|i| {
            if i == n0 - 1 {
                b
            } else {
                a + (b - a) * i as f64 / (n0 - 1) as f64
            }
        })
        .collect();
    let src = curve.as_ref();
    let coarse = grid
        .par_iter()
        .map(|&t| src.jet(t, 2).and_then(|g| Sample::from_jet(t, &g)))
        .collect::<Result<Vec<_>>>()?;

    let min_step = (b - a) * MIN_STEP_FRACTION;
    let pieces = coarse
        .par_windows(2)
        .map(|w| refine_interval(src, w[0], w[1], opts, min_step))
        .collect::<Result<Vec<_>>>()?;

    let total: usize = 1 + pieces.iter().map(Vec::len).sum::<usize>();
    if total > opts.max_samples {
        return Err(Error::RefinementLimitExceeded {
            cap: opts.max_samples,
        });
    }
    let mut samples = Vec::with_capacity(total);
    samples.push(coarse[0]);
    for piece in pieces {
        samples.extend(piece);
    }
    Ok(SampledCurve {
        samples,
        depth,
        source: Some(curve),
        approximate: false,
    })
}

fn needs_split(a: &Sample, b: &Sample, theta_max: f64) -> bool {
    if angle_between(a.unit_tangent, b.unit_tangent) > theta_max {
        return true;
    }
    let turning = 0.5 * (a.curvature.abs() * a.speed + b.curvature.abs() * b.speed) * (b.t - a.t);
    turning > theta_max
}

/// Samples strictly after `left` up to and including `right`.
fn refine_interval(
    src: &dyn JetCurve,
    left: Sample,
    right: Sample,
    opts: &SamplingOptions,
    min_step: f64,
) -> Result<Vec<Sample>> {
    let mut out = Vec::new();
    let mut stack = vec![right];
    let mut current = left;
    while let Some(next) = stack.last().copied() {
        if needs_split(&current, &next, opts.theta_max) {
            if next.t - current.t <= min_step {
                return Err(Error::RefinementLimitExceeded {
                    cap: opts.max_samples,
                });
            }
            let tm = 0.5 * (current.t + next.t);
            let mid = Sample::from_jet(tm, &src.jet(tm, 2)?)?;
            stack.push(mid);
            if stack.len() + out.len() > opts.max_samples {
                return Err(Error::RefinementLimitExceeded {
                    cap: opts.max_samples,
                });
            }
        } else {
            out.push(next);
            current = next;
            stack.pop();
        }
    }
    Ok(out)
}

/// Outcome of a class-Y check at both endpoints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub max_deviation: f64,
    pub failures: Vec<String>,
}

/// Checks the endpoint conditions of class Y: positions (0,0) and (1,0),
/// rightward horizontal tangents, and vanishing derivatives of orders
/// `2..=orders` at both ends.
pub fn validate_class_y(curve: &dyn JetCurve, orders: usize, tol: f64) -> ValidationReport {
    let mut failures = Vec::new();
    let mut max_deviation: f64 = 0.0;
    let (a, b) = curve.domain();
    let order = orders.max(1);
    for (t, target_x) in [(a, 0.0), (b, 1.0)] {
        let germ = match curve.jet(t, order) {
            Ok(g) => g,
            Err(e) => {
                failures.push(format!("t = {t}: {e}"));
                continue;
            }
        };
        let [x, y] = germ.position();
        let dev = (x - target_x).hypot(y);
        max_deviation = max_deviation.max(dev);
        if !(dev <= tol) {
            failures.push(format!("t = {t}: position ({x}, {y}) is off by {dev:e}"));
        }
        let [dx, dy] = germ.velocity().expect("order >= 1");
        let speed = dx.hypot(dy);
        let tangent_dev = if speed > 0.0 {
            (dx / speed - 1.0).hypot(dy / speed)
        } else {
            f64::INFINITY
        };
        max_deviation = max_deviation.max(tangent_dev);
        if !(tangent_dev <= tol) {
            failures.push(format!(
                "t = {t}: order 1 tangent ({dx}, {dy}) is not horizontal rightward"
            ));
        }
        for k in 2..=orders {
            let dxk = germ.x.derivative(k).unwrap_or(0.0);
            let dyk = germ.y.derivative(k).unwrap_or(0.0);
            let dev = dxk.hypot(dyk);
            max_deviation = max_deviation.max(dev);
            if !(dev <= tol) {
                failures.push(format!(
                    "t = {t}: order {k} derivative ({dxk}, {dyk}) is not zero"
                ));
            }
        }
    }
    ValidationReport {
        passed: failures.is_empty(),
        max_deviation,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug)]
    struct QuarterCircle;

    impl JetCurve for QuarterCircle {
        fn domain(&self) -> (f64, f64) {
            (0.0, std::f64::consts::FRAC_PI_2)
        }
        fn max_order(&self) -> usize {
            usize::MAX
        }
        fn jet(&self, t: f64, order: usize) -> Result<PlaneJet> {
            let (s, c) = Jet::variable(t, order).sin_cos();
            Ok(PlaneJet::new(c, s))
        }
    }

    #[derive(Debug)]
    struct Parabola;

    impl JetCurve for Parabola {
        fn domain(&self) -> (f64, f64) {
            (0.0, 1.0)
        }
        fn max_order(&self) -> usize {
            usize::MAX
        }
        fn jet(&self, t: f64, order: usize) -> Result<PlaneJet> {
            let x = Jet::variable(t, order);
            let y = &x * &x.scale(-1.0).offset(1.0);
            Ok(PlaneJet::new(x, y))
        }
    }

    #[test]
    fn finn_height_at_half() {
        let seed = SeedSpec::finn(4.0);
        let expected = 4.0 * (-4.0f64).exp();
        assert!((seed.height(0.5) - 0.073_262_555_554_936_7).abs() < 1e-12);
        assert!((seed.height_jet(0.5, 3).value() - expected).abs() < 1e-15);
    }

    #[test]
    fn zero_amplitude_is_straight() {
        let c = finn_seed(0.0).unwrap();
        for t in [0.0, 0.3, 0.5, 1.0] {
            let g = c.evaluate(t, 4).unwrap();
            assert!(g.y.coeffs().iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn endpoint_jets_are_flat() {
        let seed = SeedSpec::finn(4.0);
        for t in [0.0, 1.0, 5e-7, 1.0 - 5e-7] {
            assert!(seed.height_jet(t, 10).coeffs().iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn depth_zero_tangent_at_half() {
        let g = finn_seed(4.0).unwrap().evaluate(0.5, 1).unwrap();
        let [dx, dy] = g.velocity().unwrap();
        assert_eq!(dx, 1.0);
        assert!(dy.abs() < 1e-16);
    }

    #[test]
    fn straight_seed_is_fixed_by_iteration() {
        let c = AnalyticCurve::at_depth(SeedSpec::straight(), 5, 10).unwrap();
        for t in [0.0, 0.25, 0.9, 1.0] {
            let g = c.evaluate(t, 2).unwrap();
            assert!((g.x.value() - t).abs() < 1e-15);
            assert_eq!(g.y.value(), 0.0);
            assert_eq!(g.velocity().unwrap(), [1.0, 0.0]);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let c = AnalyticCurve::at_depth(SeedSpec::finn(4.0), 8, 10).unwrap();
        assert!(c.evaluate(0.5, 2).is_ok());
        assert_eq!(
            c.evaluate(0.5, 3),
            Err(Error::OrderBudgetExceeded {
                requested: 3,
                depth: 8,
                budget: 10
            })
        );
        assert!(AnalyticCurve::at_depth(SeedSpec::finn(4.0), 11, 10).is_err());
    }

    #[test]
    fn bad_seeds_are_rejected() {
        assert!(AnalyticCurve::new(SeedSpec::finn(f64::NAN), 10).is_err());
        assert!(AnalyticCurve::new(SeedSpec::custom_bump(1.0, -2.0), 10).is_err());
    }

    #[test]
    fn quarter_circle_sampling_density() {
        let opts = SamplingOptions {
            theta_max: 0.01,
            min_samples: 2,
            max_samples: 100_000,
        };
        let c = sample(Arc::new(QuarterCircle), 0, &opts).unwrap();
        assert!(c.len() >= 158, "{} samples", c.len());
        assert!(c.max_turning() <= 0.01 + 1e-15);
        assert_eq!(c.samples[0].t, 0.0);
        assert_eq!(c.samples.last().unwrap().t, std::f64::consts::FRAC_PI_2);
    }

    #[test]
    fn straight_sampling() {
        let c = AnalyticCurve::at_depth(SeedSpec::straight(), 2, 10).unwrap();
        let s = sample(Arc::new(c), 2, &SamplingOptions::default()).unwrap();
        for smp in &s.samples {
            assert_eq!(smp.unit_tangent, [1.0, 0.0]);
            assert_eq!(smp.curvature, 0.0);
        }
    }

    #[test]
    fn sampler_reports_cap() {
        let opts = SamplingOptions {
            theta_max: 0.001,
            min_samples: 2,
            max_samples: 50,
        };
        assert_eq!(
            sample(Arc::new(QuarterCircle), 0, &opts).unwrap_err(),
            Error::RefinementLimitExceeded { cap: 50 }
        );
    }

    #[test]
    fn class_y_checks() {
        let seed = finn_seed(4.0).unwrap();
        assert!(validate_class_y(&seed, 6, 1e-12).passed);
        let deep = AnalyticCurve::at_depth(SeedSpec::finn(4.0), 3, 10).unwrap();
        let report = validate_class_y(&deep, 6, 1e-12);
        assert!(report.passed, "{:?}", report.failures);
        let bad = validate_class_y(&Parabola, 3, 1e-12);
        assert!(!bad.passed);
        assert!(bad.failures.iter().any(|f| f.contains("order 1")));
    }

    #[test]
    fn unit_tangents_are_normalized() {
        let c = AnalyticCurve::at_depth(SeedSpec::finn(4.0), 2, 10).unwrap();
        let s = sample(Arc::new(c), 2, &SamplingOptions::default()).unwrap();
        for smp in &s.samples {
            let n = smp.unit_tangent[0].hypot(smp.unit_tangent[1]);
            assert!((n - 1.0).abs() <= 1e-12);
        }
        assert!(s.samples.windows(2).all(|w| w[1].t > w[0].t));
    }

    #[test]
    fn finite_difference_samples_of_circle() {
        let n = 2001;
        let ts: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        let pts: Vec<[f64; 2]> = ts.iter().map(|t| [t.cos(), t.sin()]).collect();
        let c = SampledCurve::from_points(&ts, &pts, 0).unwrap();
        assert!(c.approximate);
        for s in &c.samples[1..n - 1] {
            assert!((s.curvature - 1.0).abs() < 1e-5);
            assert!((s.speed - 1.0).abs() < 1e-6);
        }
    }
}
