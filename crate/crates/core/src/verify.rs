//! Runs the iteration and checks the claimed properties of the curve
//! sequence, one [`TheoremReport`] per claim.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::{
    sample, AnalyticCurve, JetCurve, SampledCurve, SamplingOptions, SeedSpec, CURVATURE_ORDERS,
    DEFAULT_JET_BUDGET,
};
use crate::error::{Error, Result};
use crate::metrics::{bisect, s_value, CurveMetrics, MetricsOptions};

/// All comparison tolerances in one place.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Algebraic identities evaluated from jets.
    pub algebraic: f64,
    /// Comparisons between quadrature results.
    pub quadrature: f64,
    /// Slack on the leftmost-point decrement bounds and the amplitude bounds.
    pub leftmost_drop: f64,
    /// Largest `|x'|` accepted as a vertical tangency.
    pub tangency: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            algebraic: 1e-10,
            quadrature: 1e-7,
            leftmost_drop: 1e-6,
            tangency: 1e-8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: SeedSpec,
    pub depth_max: usize,
    pub jet_budget: usize,
    pub sampling: SamplingOptions,
    pub metrics: MetricsOptions,
    /// Number of points in the uniform parameter grid used by the pointwise
    /// checks.
    pub grid: usize,
    pub tolerances: Tolerances,
}

impl RunConfig {
    pub fn new(seed: SeedSpec, depth_max: usize) -> RunConfig {
        RunConfig {
            seed,
            depth_max,
            jet_budget: DEFAULT_JET_BUDGET,
            sampling: SamplingOptions::default(),
            metrics: MetricsOptions::default(),
            grid: 1001,
            tolerances: Tolerances::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.seed.validate()?;
        self.sampling.validate()?;
        if self.depth_max + CURVATURE_ORDERS > self.jet_budget {
            return Err(Error::OrderBudgetExceeded {
                requested: CURVATURE_ORDERS,
                depth: self.depth_max,
                budget: self.jet_budget,
            });
        }
        let tol = &self.tolerances;
        let metric = &self.metrics;
        for (name, v) in [
            ("algebraic tolerance", tol.algebraic),
            ("quadrature tolerance", tol.quadrature),
            ("leftmost-drop tolerance", tol.leftmost_drop),
            ("tangency tolerance", tol.tangency),
            ("zero threshold", metric.zero_eps_rel),
            ("quadrature target", metric.quad_tol),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if self.grid < 2 {
            return Err(Error::InvalidArgument(
                "grid needs at least 2 points".to_string(),
            ));
        }
        Ok(())
    }

    /// Uniform grid on `[0, 1]` with `self.grid` points.
    pub fn t_grid(&self) -> Vec<f64> {
        uniform_grid(self.grid)
    }
}

pub fn uniform_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                1.0
            } else {
                i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// One curve of a run with its samples and measurements.
#[derive(Clone, Debug)]
pub struct DepthResult {
    pub curve: AnalyticCurve,
    pub sampled: SampledCurve,
    pub metrics: CurveMetrics,
    pub seconds: f64,
}

/// The curves `gamma_0 .. gamma_N` of one run.
#[derive(Clone, Debug)]
pub struct UnitrackRun {
    pub config: RunConfig,
    pub depths: Vec<DepthResult>,
}

impl UnitrackRun {
    pub fn curves(&self) -> Vec<AnalyticCurve> {
        self.depths.iter().map(|d| d.curve).collect()
    }

    pub fn metrics(&self) -> Vec<&CurveMetrics> {
        self.depths.iter().map(|d| &d.metrics).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.config.seed.is_trivial()
    }

    /// The same run cut after `depth`.
    pub fn truncated(&self, depth: usize) -> UnitrackRun {
        let mut config = self.config;
        config.depth_max = depth.min(self.config.depth_max);
        UnitrackRun {
            config,
            depths: self.depths[..=config.depth_max].to_vec(),
        }
    }
}

/// Samples and measures every depth `0..=depth_max`. Depths are independent
/// and processed in parallel.
pub fn run_unitrack(config: &RunConfig) -> Result<UnitrackRun> {
    config.validate()?;
    let depths = (0..=config.depth_max)
        .into_par_iter()
        .map(|depth| {
            let started = Instant::now();
            let curve = AnalyticCurve::at_depth(config.seed, depth, config.jet_budget)?;
            let sampled = sample(Arc::new(curve), depth, &config.sampling)?;
            let metrics = CurveMetrics::compute(&sampled, &config.metrics)?;
            Ok(DepthResult {
                curve,
                sampled,
                metrics,
                seconds: started.elapsed().as_secs_f64(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UnitrackRun {
        config: *config,
        depths,
    })
}

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    A_length_monotone,
    C_area_invariant,
    D_zeros_grow,
    F_V_monotone,
    I_graph_fails,
    P52_x_recursion,
    P61_r_bounds,
    C63_l_drop_ge1,
    P64_l_drop_le2,
    T43_H_bounds,
    L57_graph_length_bound,
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// Finite-depth evidence consistent with an asymptotic claim.
    TrendPass,
    Fail,
    Indeterminate,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::TrendPass => "trend-pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    pub depth: usize,
    pub name: String,
    pub value: f64,
}

/// Outcome of one claim. `max_violation` is the largest amount by which any
/// checked quantity left its admissible range (0 when none did); the claim
/// passes when it stays within `tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub claim: ClaimId,
    pub status: Status,
    pub depths: Vec<usize>,
    pub max_violation: f64,
    pub tolerance: f64,
    pub evidence: Vec<Evidence>,
    pub note: String,
}

impl TheoremReport {
    fn new(claim: ClaimId, tolerance: f64) -> TheoremReport {
        TheoremReport {
            claim,
            status: Status::Pass,
            depths: Vec::new(),
            max_violation: 0.0,
            tolerance,
            evidence: Vec::new(),
            note: String::new(),
        }
    }

    fn record(&mut self, depth: usize, name: &str, value: f64) {
        self.evidence.push(Evidence {
            depth,
            name: name.to_string(),
            value,
        });
    }

    fn visit(&mut self, depth: usize) {
        if !self.depths.contains(&depth) {
            self.depths.push(depth);
        }
    }

    /// Records how far `value` lies outside `[lo, hi]`.
    fn bound(&mut self, value: f64, lo: f64, hi: f64) {
        let off = if value.is_nan() {
            f64::MAX
        } else {
            (lo - value).max(value - hi).max(0.0)
        };
        self.max_violation = self.max_violation.max(off);
    }

    fn fail(&mut self, note: impl Into<String>) {
        self.status = Status::Fail;
        self.push_note(note);
    }

    fn indeterminate(mut self, note: impl Into<String>) -> TheoremReport {
        self.status = Status::Indeterminate;
        self.push_note(note);
        self
    }

    fn push_note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if note.is_empty() {
            return;
        }
        if !self.note.is_empty() {
            self.note.push_str("; ");
        }
        self.note.push_str(&note);
    }

    fn finish(mut self) -> TheoremReport {
        self.depths.sort_unstable();
        if self.status != Status::Indeterminate && self.max_violation > self.tolerance {
            self.status = Status::Fail;
        }
        self
    }
}

/// Smallest depth whose curve is not a graph over the x-axis.
pub fn first_non_graph_depth(run: &UnitrackRun) -> Option<usize> {
    run.depths
        .iter()
        .find(|d| !d.metrics.graph_status)
        .map(|d| d.metrics.depth)
}

/// A: lengths increase, and each next length equals the integral of
/// `sqrt(1 + k^2) ds` over the previous curve.
pub fn check_length_monotone(run: &UnitrackRun) -> TheoremReport {
    let tol = run.config.tolerances.quadrature;
    let mut rep = TheoremReport::new(ClaimId::A_length_monotone, tol);
    let m = run.metrics();
    if m.len() < 2 {
        return rep.indeterminate("need at least two depths");
    }
    for w in m.windows(2) {
        let (a, b) = (w[0], w[1]);
        rep.visit(a.depth);
        rep.visit(b.depth);
        let identity = b.length - a.front_length;
        rep.record(b.depth, "length", b.length);
        rep.record(a.depth, "length_identity_residual", identity);
        rep.bound(identity, 0.0, 0.0);
        rep.bound(b.length - a.length, 0.0, f64::INFINITY);
        if !run.is_trivial() && !(b.length > a.length) {
            rep.fail(format!(
                "length does not increase from depth {} to {}",
                a.depth, b.depth
            ));
        }
    }
    rep.finish()
}

/// C: the oriented area is the same at every depth.
pub fn check_area_invariant(run: &UnitrackRun) -> TheoremReport {
    let tol = run.config.tolerances.quadrature;
    let mut rep = TheoremReport::new(ClaimId::C_area_invariant, tol);
    let m = run.metrics();
    let reference = m[0].area;
    for c in &m {
        rep.visit(c.depth);
        rep.record(c.depth, "area", c.area);
        rep.record(c.depth, "area_error_estimate", c.area_error);
        rep.bound(c.area - reference, 0.0, 0.0);
        if c.area_error > tol {
            return rep.indeterminate(format!(
                "quadrature error estimate {:e} at depth {} exceeds the tolerance",
                c.area_error, c.depth
            ));
        }
    }
    rep.finish()
}

/// D: each step adds at least one interior zero of `y`, while counts are
/// finite.
pub fn check_zeros_grow(run: &UnitrackRun) -> TheoremReport {
    let mut rep = TheoremReport::new(ClaimId::D_zeros_grow, 0.0);
    if run.is_trivial() {
        return rep.indeterminate("y vanishes identically on the trivial track");
    }
    let m = run.metrics();
    let mut pairs = 0;
    for w in m.windows(2) {
        let (Some(a), Some(b)) = (w[0].zero_count, w[1].zero_count) else {
            continue;
        };
        pairs += 1;
        rep.visit(w[0].depth);
        rep.visit(w[1].depth);
        rep.record(w[1].depth, "zero_count", b as f64);
        rep.bound(b as f64, a as f64 + 1.0, f64::INFINITY);
    }
    for c in &m {
        if c.zero_count.is_none() {
            rep.push_note(format!("zero count indeterminate at depth {}", c.depth));
        }
    }
    if pairs == 0 {
        return rep.indeterminate("no pair of consecutive determinate zero counts");
    }
    rep.finish()
}

/// F: the vertical amplitude never decreases; where the top of `y` is
/// interior, the next curve reaches strictly higher.
pub fn check_v_monotone(run: &UnitrackRun) -> TheoremReport {
    let tol = run.config.tolerances.algebraic;
    let mut rep = TheoremReport::new(ClaimId::F_V_monotone, tol);
    let d = &run.depths;
    for w in d.windows(2) {
        let (a, b) = (&w[0].metrics, &w[1].metrics);
        rep.visit(a.depth);
        rep.visit(b.depth);
        rep.record(b.depth, "V", b.v);
        rep.bound(b.v - a.v, 0.0, f64::INFINITY);
        let top_t = extreme_t_of_y(&w[0]);
        let interior = top_t > 0.0 && top_t < 1.0 && a.v > 0.0;
        if interior && !(b.y_max > a.y_max) {
            rep.fail(format!(
                "max y does not grow from depth {} to {} although it is interior",
                a.depth, b.depth
            ));
        }
    }
    rep.finish()
}

fn extreme_t_of_y(d: &DepthResult) -> f64 {
    d.sampled
        .samples
        .iter()
        .max_by(|a, b| a.y().total_cmp(&b.y()))
        .map_or(0.0, |s| s.t)
}

/// I: the curves stop being graphs at some finite depth.
pub fn check_graph_fails(run: &UnitrackRun) -> TheoremReport {
    let mut rep = TheoremReport::new(ClaimId::I_graph_fails, 0.0);
    for c in run.metrics() {
        rep.visit(c.depth);
        rep.record(
            c.depth,
            "graph_status",
            if c.graph_status { 1.0 } else { 0.0 },
        );
    }
    rep.push_note(format!(
        "graph test: sign of sampled x' with turning angle <= {}",
        run.config.sampling.theta_max
    ));
    match first_non_graph_depth(run) {
        Some(n) => {
            rep.record(n, "first_non_graph_depth", n as f64);
            if run.is_trivial() {
                rep.fail("the trivial track lost the graph property");
            }
            rep.finish()
        }
        None if run.is_trivial() => {
            rep.push_note("trivial track stays a graph");
            rep.finish()
        }
        None => rep.indeterminate(format!(
            "no non-graph depth within depth_max = {}",
            run.config.depth_max
        )),
    }
}

/// Residual of `x_{n+1}(t) = x_n(t) - s_n(t)` on a parameter grid.
pub fn check_x_recursion(run: &UnitrackRun, t_grid: &[f64]) -> Result<TheoremReport> {
    let tol = run.config.tolerances.algebraic;
    let mut rep = TheoremReport::new(ClaimId::P52_x_recursion, tol);
    let curves = run.curves();
    for w in curves.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        let worst = t_grid
            .par_iter()
            .map(|&t| {
                let xn = cur.evaluate(t, 0)?.x.value();
                let xn1 = next.evaluate(t, 0)?.x.value();
                let s = s_value(cur, t)?;
                Ok((xn1 - xn + s).abs())
            })
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        rep.visit(cur.depth());
        rep.record(cur.depth(), "max_residual", worst);
        rep.bound(worst, 0.0, 0.0);
    }
    if curves.len() < 2 {
        return Ok(rep.indeterminate("need at least two depths"));
    }
    Ok(rep.finish())
}

/// `1 <= r_n <= r_0` at every depth.
pub fn check_r_bounds(run: &UnitrackRun) -> TheoremReport {
    let tol = run.config.tolerances.algebraic;
    let mut rep = TheoremReport::new(ClaimId::P61_r_bounds, tol);
    let m = run.metrics();
    let r0 = m[0].r;
    for c in &m {
        rep.visit(c.depth);
        rep.record(c.depth, "r", c.r);
        rep.bound(c.r, 1.0, r0);
    }
    rep.finish()
}

/// Past the first non-graph depth `N`: the leftmost point has a vertical
/// tangent and `1 <= l_n - l_{n+1} <= 2`. Returns the lower-bound report
/// (which also carries the tangency evidence) and the upper-bound report.
pub fn check_leftmost_decrement(run: &UnitrackRun) -> (TheoremReport, TheoremReport) {
    let tols = run.config.tolerances;
    let mut lower = TheoremReport::new(ClaimId::C63_l_drop_ge1, tols.leftmost_drop);
    let mut upper = TheoremReport::new(ClaimId::P64_l_drop_le2, tols.leftmost_drop);
    let Some(first) = first_non_graph_depth(run) else {
        let why = "no non-graph depth in the run";
        return (lower.indeterminate(why), upper.indeterminate(why));
    };
    let m = run.metrics();
    let mut pairs = 0;
    for c in m.iter().filter(|c| c.depth > first) {
        lower.visit(c.depth);
        lower.record(c.depth, "leftmost_x_velocity", c.leftmost_x_velocity);
        if c.leftmost_x_velocity.abs() > tols.tangency {
            lower.fail(format!(
                "leftmost point at depth {} has |x'| = {:e}",
                c.depth,
                c.leftmost_x_velocity.abs()
            ));
        }
    }
    for w in m.windows(2).filter(|w| w[0].depth > first) {
        pairs += 1;
        let drop = w[0].l - w[1].l;
        for rep in [&mut lower, &mut upper] {
            rep.visit(w[0].depth);
            rep.visit(w[1].depth);
            rep.record(w[0].depth, "l_drop", drop);
        }
        lower.bound(drop, 1.0, f64::INFINITY);
        upper.bound(drop, f64::NEG_INFINITY, 2.0);
    }
    if pairs == 0 {
        let why = format!("no depth pair beyond N = {first}");
        return (lower.indeterminate(why.clone()), upper.indeterminate(why));
    }
    (lower.finish(), upper.finish())
}

/// `n - c1 <= H_n <= 2n - c2` past `N`, with `c1 = N + l_N - 1` and
/// `c2 = 2N + l_N - r_0`; plus `H_n` non-decreasing throughout. Unboundedness
/// can only be seen as a trend, so a clean run reports `trend-pass`.
pub fn check_h_bounds(run: &UnitrackRun) -> TheoremReport {
    let tols = run.config.tolerances;
    let mut rep = TheoremReport::new(ClaimId::T43_H_bounds, tols.leftmost_drop);
    let Some(first) = first_non_graph_depth(run) else {
        return rep.indeterminate("no non-graph depth in the run");
    };
    let m = run.metrics();
    let l_n = m[first].l;
    let r0 = m[0].r;
    let n0 = first as f64;
    let c1 = n0 + l_n - 1.0;
    let c2 = 2.0 * n0 + l_n - r0;
    rep.record(first, "N", n0);
    rep.record(first, "c1", c1);
    rep.record(first, "c2", c2);
    for w in m.windows(2) {
        rep.bound(w[1].h - w[0].h, 0.0, f64::INFINITY);
    }
    let mut checked = 0;
    for c in m.iter().filter(|c| c.depth > first) {
        checked += 1;
        let n = c.depth as f64;
        rep.visit(c.depth);
        rep.record(c.depth, "H", c.h);
        rep.bound(c.h, n - c1, 2.0 * n - c2);
        let prev = m[c.depth - 1].h;
        rep.record(c.depth, "H_step", c.h - prev);
    }
    if checked == 0 {
        return rep.indeterminate(format!("no depth beyond N = {first}"));
    }
    let rep = rep.finish();
    if rep.status == Status::Pass {
        TheoremReport {
            status: Status::TrendPass,
            ..rep
        }
    } else {
        rep
    }
}

/// Length of a graph against `(r - l) sqrt(c^2 + 1)`, where `c` is the
/// largest slope, and against `(r - l) / C` with `C` the smallest
/// `cos(arctan(slope))`.
pub fn check_graph_length_bound(
    c: &SampledCurve,
    metrics: &CurveMetrics,
    tol: f64,
) -> Result<TheoremReport> {
    if !metrics.graph_status {
        return Err(Error::NotAGraph);
    }
    let mut rep = TheoremReport::new(ClaimId::L57_graph_length_bound, tol);
    let min_cos = min_tangent_x(c)?;
    if !(min_cos > 0.0) {
        return Err(Error::NotAGraph);
    }
    let slope = (1.0 - min_cos * min_cos).max(0.0).sqrt() / min_cos;
    let span = metrics.r - metrics.l;
    let bound_slope = span * (slope * slope + 1.0).sqrt();
    let bound_cos = span / min_cos;
    rep.visit(c.depth);
    rep.record(c.depth, "length", metrics.length);
    rep.record(c.depth, "max_slope", slope);
    rep.record(c.depth, "bound_slope", bound_slope);
    rep.record(c.depth, "bound_cos_arctan", bound_cos);
    rep.bound(metrics.length, 0.0, bound_slope.min(bound_cos));
    Ok(rep.finish())
}

/// The graph length bound over every graph depth of a run.
pub fn check_graph_length_bounds(run: &UnitrackRun) -> Result<TheoremReport> {
    let tol = run.config.tolerances.quadrature;
    let mut rep = TheoremReport::new(ClaimId::L57_graph_length_bound, tol);
    let mut any = false;
    for d in run.depths.iter().filter(|d| d.metrics.graph_status) {
        any = true;
        let one = check_graph_length_bound(&d.sampled, &d.metrics, tol)?;
        rep.depths.extend(one.depths);
        rep.evidence.extend(one.evidence);
        rep.max_violation = rep.max_violation.max(one.max_violation);
    }
    if !any {
        return Ok(rep.indeterminate("no graph depth in the run"));
    }
    Ok(rep.finish())
}

/// Smallest x-component of the unit tangent, refined between samples at the
/// zeros of the curvature (where the tangent angle is extremal).
fn min_tangent_x(c: &SampledCurve) -> Result<f64> {
    let s = &c.samples;
    let idx = (0..s.len())
        .min_by(|&a, &b| s[a].unit_tangent[0].total_cmp(&s[b].unit_tangent[0]))
        .expect("non-empty");
    let mut best = s[idx].unit_tangent[0];
    let Some(src) = &c.source else {
        return Ok(best);
    };
    let curvature = |t: f64| src.jet(t, 2)?.curvature().ok_or(Error::OrderExhausted);
    for (i, j) in [
        (idx.saturating_sub(1), idx),
        (idx, (idx + 1).min(s.len() - 1)),
    ] {
        if i == j || (s[i].curvature > 0.0) == (s[j].curvature > 0.0) {
            continue;
        }
        let t = bisect(curvature, s[i].t, s[j].t)?;
        let g = src.jet(t, 1)?;
        let [dx, dy] = g.velocity().ok_or(Error::OrderExhausted)?;
        best = best.min(dx / dx.hypot(dy));
    }
    Ok(best)
}

/// Pointwise estimate of the limit of `x_n(t)` from the last curve of a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitEstimate {
    pub t: f64,
    pub value: f64,
    /// `x_{N-1}(t) - x_N(t)`, the size of the last step.
    pub last_decrement: f64,
}

pub fn estimate_limit(run: &UnitrackRun, t_grid: &[f64]) -> Result<Vec<LimitEstimate>> {
    let curves = run.curves();
    let last = curves[curves.len() - 1];
    let prev = curves.len().checked_sub(2).map(|i| curves[i]);
    t_grid
        .par_iter()
        .map(|&t| {
            let value = last.evaluate(t, 0)?.x.value();
            let last_decrement = match prev {
                Some(p) => p.evaluate(t, 0)?.x.value() - value,
                None => 0.0,
            };
            Ok(LimitEstimate {
                t,
                value,
                last_decrement,
            })
        })
        .collect()
}

/// True when the estimate is non-decreasing in `t`.
pub fn is_monotone(est: &[LimitEstimate]) -> bool {
    est.windows(2).all(|w| w[1].value >= w[0].value)
}

/// Largest mismatch between the end jet of `gamma_n` (shifted by one unit)
/// and the start jet of `gamma_{n+1}`, up to `order`.
pub fn gluing_defect(run: &UnitrackRun, order: usize) -> Result<f64> {
    let curves = run.curves();
    let mut worst: f64 = 0.0;
    for w in curves.windows(2) {
        let k = order.min(w[1].max_order());
        let end = w[0].evaluate(1.0, k)?.translate(-1.0, 0.0);
        let start = w[1].evaluate(0.0, k)?;
        for (a, b) in end
            .x
            .coeffs()
            .iter()
            .chain(end.y.coeffs())
            .zip(start.x.coeffs().iter().chain(start.y.coeffs()))
        {
            worst = worst.max((a - b).abs());
        }
    }
    Ok(worst)
}

/// Every claim in a fixed order.
pub fn verify_all(run: &UnitrackRun) -> Result<Vec<TheoremReport>> {
    let (c63, p64) = check_leftmost_decrement(run);
    Ok(vec![
        check_length_monotone(run),
        check_area_invariant(run),
        check_zeros_grow(run),
        check_v_monotone(run),
        check_graph_fails(run),
        check_x_recursion(run, &run.config.t_grid())?,
        check_r_bounds(run),
        c63,
        p64,
        check_h_bounds(run),
        check_graph_length_bounds(run)?,
    ])
}
