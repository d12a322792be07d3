//! Scalar and structural measurements of one curve of the iteration.

pub mod intersections;

use serde::{Deserialize, Serialize};

use crate::curve::{AnalyticCurve, JetCurve, SampledCurve};
use crate::error::{Error, Result};
use crate::quad::{self, Estimate};

pub use intersections::{polyline_contacts, segment_contact, Contact, SegmentHit};

/// A quadrature result with its error estimate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Measured {
    pub value: f64,
    pub error: f64,
}

/// Length, oriented area `integral of y dx`, and the length integral
/// `integral of sqrt(1 + k^2) ds` that predicts the length of the front track.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveIntegrals {
    pub length: Measured,
    pub area: Measured,
    pub front_length: Measured,
}

/// Default absolute tolerance for the curve integrals, per unit of length.
pub const DEFAULT_QUAD_TOL: f64 = 1e-11;

/// Computes all three curve integrals in a single adaptive pass. Breakpoints
/// are the sample parameters; with a jet source the integrands are evaluated
/// exactly, otherwise trapezoid sums on the samples are Richardson
/// extrapolated against the every-other-sample sums.
pub fn curve_integrals(c: &SampledCurve, tol: f64) -> Result<CurveIntegrals> {
    if c.len() < 2 {
        return Err(Error::InvalidArgument(
            "need at least two samples".to_string(),
        ));
    }
    let Some(src) = c.source.as_ref().filter(|s| s.max_order() >= 2) else {
        return Ok(polyline_integrals(c));
    };
    let chord: f64 = c
        .samples
        .windows(2)
        .map(|w| (w[1].pos[0] - w[0].pos[0]).hypot(w[1].pos[1] - w[0].pos[1]))
        .sum();
    let integrand = |t: f64| -> Result<[f64; 3]> {
        let g = src.jet(t, 2)?;
        let [dx, dy] = g.velocity().ok_or(Error::OrderExhausted)?;
        let speed = dx.hypot(dy);
        if !(speed > 0.0) {
            return Err(Error::NotImmersed { t });
        }
        let k = g.curvature().ok_or(Error::OrderExhausted)?;
        Ok([speed, g.y.value() * dx, (1.0 + k * k).sqrt() * speed])
    };
    let breaks = c.params();
    let est: Estimate<3> = quad::integrate(&integrand, &breaks, tol * chord.max(1.0))?;
    let m = |k: usize| Measured {
        value: est.value[k],
        error: est.error[k],
    };
    Ok(CurveIntegrals {
        length: m(0),
        area: m(1),
        front_length: m(2),
    })
}

fn polyline_integrals(c: &SampledCurve) -> CurveIntegrals {
    let s = &c.samples;
    let sums = |stride: usize| -> [f64; 3] {
        let mut idx: Vec<usize> = (0..s.len()).step_by(stride).collect();
        if *idx.last().unwrap() != s.len() - 1 {
            idx.push(s.len() - 1);
        }
        let mut acc = [0.0; 3];
        for w in idx.windows(2) {
            let (a, b) = (&s[w[0]], &s[w[1]]);
            let ds = (b.pos[0] - a.pos[0]).hypot(b.pos[1] - a.pos[1]);
            acc[0] += ds;
            acc[1] += 0.5 * (a.pos[1] + b.pos[1]) * (b.pos[0] - a.pos[0]);
            let wa = (1.0 + a.curvature * a.curvature).sqrt();
            let wb = (1.0 + b.curvature * b.curvature).sqrt();
            acc[2] += 0.5 * (wa + wb) * ds;
        }
        acc
    };
    let fine = sums(1);
    if s.len() < 5 {
        let m = |k: usize| Measured {
            value: fine[k],
            error: 0.0,
        };
        return CurveIntegrals {
            length: m(0),
            area: m(1),
            front_length: m(2),
        };
    }
    let coarse = sums(2);
    let m = |k: usize| {
        let corr = (fine[k] - coarse[k]) / 3.0;
        Measured {
            value: fine[k] + corr,
            error: corr.abs(),
        }
    };
    CurveIntegrals {
        length: m(0),
        area: m(1),
        front_length: m(2),
    }
}

pub fn curve_length(c: &SampledCurve) -> Result<Measured> {
    Ok(curve_integrals(c, DEFAULT_QUAD_TOL)?.length)
}

pub fn oriented_area(c: &SampledCurve) -> Result<Measured> {
    Ok(curve_integrals(c, DEFAULT_QUAD_TOL)?.area)
}

/// Leftward displacement of the point at `t` under the shifted map:
/// `1 - x' / |(x', y')|`, in `[0, 2)`.
pub fn s_value(c: &dyn JetCurve, t: f64) -> Result<f64> {
    let [dx, dy] = c.jet(t, 1)?.velocity().ok_or(Error::OrderExhausted)?;
    let speed = dx.hypot(dy);
    if !(speed > 0.0) {
        return Err(Error::NotImmersed { t });
    }
    Ok(1.0 - dx / speed)
}

/// `x_0(t), x_1(t), ..., x_N(t)` along a run of curves.
pub fn track_x(run: &[AnalyticCurve], t: f64) -> Result<Vec<f64>> {
    run.iter()
        .map(|c| Ok(c.evaluate(t, 0)?.x.value()))
        .collect()
}

/// Bisection for a sign change of `f` on `[a, b]`. Returns the endpoint of
/// the final bracket where `|f|` is smaller.
pub fn bisect<F>(f: F, mut a: f64, mut b: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    Ok(if fa.abs() <= fb.abs() { a } else { b })
}

/// Interior zeros of `y(t)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroCount {
    /// `None` when a near-zero cluster is too wide to count.
    pub count: Option<usize>,
    pub locations: Vec<f64>,
    /// How many of the zeros are touching rather than crossing.
    pub tangential: usize,
}

/// A zero cluster wider than this fraction of the domain makes the count
/// indeterminate.
pub const INDETERMINATE_SPAN: f64 = 0.01;

/// Counts clusters of zeros of `y` on the open parameter interval. Samples
/// with `|y| <= eps` are treated as zero; the runs touching either endpoint
/// belong to the endpoint zeros and are skipped. Each change of sign between
/// non-zero samples is one zero, located by bisection on the jet source when
/// available. A zero run with the same sign on both sides counts once.
pub fn zero_count(c: &SampledCurve, eps: f64) -> Result<ZeroCount> {
    let s = &c.samples;
    let mut out = ZeroCount {
        count: Some(0),
        locations: Vec::new(),
        tangential: 0,
    };
    if s.len() < 2 {
        return Ok(out);
    }
    let width = s[s.len() - 1].t - s[0].t;
    let sign = |y: f64| -> i8 {
        if y.abs() <= eps {
            0
        } else if y > 0.0 {
            1
        } else {
            -1
        }
    };
    let nonzero: Vec<usize> = (0..s.len()).filter(|&i| sign(s[i].y()) != 0).collect();
    let mut indeterminate = false;
    for w in nonzero.windows(2) {
        let (i, j) = (w[0], w[1]);
        let (si, sj) = (sign(s[i].y()), sign(s[j].y()));
        let gap = j - i > 1;
        if si == sj && !gap {
            continue;
        }
        if gap && s[j - 1].t - s[i + 1].t > INDETERMINATE_SPAN * width {
            indeterminate = true;
        }
        if si != sj {
            out.locations.push(locate_zero(c, i, j)?);
        } else {
            let k = (i + 1..j)
                .min_by(|&a, &b| s[a].y().abs().total_cmp(&s[b].y().abs()))
                .unwrap();
            out.locations.push(s[k].t);
            out.tangential += 1;
        }
    }
    out.count = if indeterminate {
        None
    } else {
        Some(out.locations.len())
    };
    Ok(out)
}

fn locate_zero(c: &SampledCurve, i: usize, j: usize) -> Result<f64> {
    let (a, b) = (&c.samples[i], &c.samples[j]);
    match &c.source {
        Some(src) => bisect(|t| Ok(src.jet(t, 0)?.y.value()), a.t, b.t),
        None => Ok(a.t + (b.t - a.t) * a.y() / (a.y() - b.y())),
    }
}

/// A self-crossing of the sampled curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    pub t_i: f64,
    pub t_j: f64,
    pub point: [f64; 2],
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SelfIntersections {
    pub crossings: Vec<Crossing>,
    /// Non-transversal contacts, reported apart from the crossings.
    pub tangential: Vec<Crossing>,
}

/// Parameter resolution of the crossing refinement.
pub const CROSSING_T_TOL: f64 = 1e-10;

/// Transversal self-crossings of the sample polyline. With a jet source each
/// crossing is refined by bisecting both parameter intervals and keeping the
/// pair of sub-chords that still cross.
pub fn self_intersections(c: &SampledCurve) -> Result<SelfIntersections> {
    let points = c.points();
    let hits = polyline_contacts(&points, false);
    let mut out = SelfIntersections::default();
    for h in hits {
        let (a, b) = (&c.samples[h.i], &c.samples[h.i + 1]);
        let (p, q) = (&c.samples[h.j], &c.samples[h.j + 1]);
        let linear = Crossing {
            t_i: a.t + h.ua * (b.t - a.t),
            t_j: p.t + h.ub * (q.t - p.t),
            point: h.point,
        };
        match h.contact {
            Contact::Touching => out.tangential.push(linear),
            Contact::Crossing => {
                let refined = match &c.source {
                    Some(src) => {
                        refine_crossing(src.as_ref(), [a.t, b.t], [p.t, q.t])?.unwrap_or(linear)
                    }
                    None => linear,
                };
                out.crossings.push(refined);
            }
        }
    }
    Ok(out)
}

fn refine_crossing(
    src: &dyn JetCurve,
    mut ta: [f64; 2],
    mut tb: [f64; 2],
) -> Result<Option<Crossing>> {
    let pos = |t: f64| -> Result<[f64; 2]> { Ok(src.jet(t, 0)?.position()) };
    let mut pa = [pos(ta[0])?, pos(ta[1])?];
    let mut pb = [pos(tb[0])?, pos(tb[1])?];
    let mut last = None;
    for _ in 0..80 {
        let Some((Contact::Crossing, ua, ub)) = segment_contact(pa[0], pa[1], pb[0], pb[1]) else {
            break;
        };
        last = Some(Crossing {
            t_i: ta[0] + ua * (ta[1] - ta[0]),
            t_j: tb[0] + ub * (tb[1] - tb[0]),
            point: [
                pa[0][0] + ua * (pa[1][0] - pa[0][0]),
                pa[0][1] + ua * (pa[1][1] - pa[0][1]),
            ],
        });
        if ta[1] - ta[0] <= CROSSING_T_TOL && tb[1] - tb[0] <= CROSSING_T_TOL {
            break;
        }
        let ma = 0.5 * (ta[0] + ta[1]);
        let mb = 0.5 * (tb[0] + tb[1]);
        let pma = pos(ma)?;
        let pmb = pos(mb)?;
        let halves_a = [([ta[0], ma], [pa[0], pma]), ([ma, ta[1]], [pma, pa[1]])];
        let halves_b = [([tb[0], mb], [pb[0], pmb]), ([mb, tb[1]], [pmb, pb[1]])];
        let next = halves_a.iter().find_map(|(sa, qa)| {
            halves_b.iter().find_map(|(sb, qb)| {
                matches!(
                    segment_contact(qa[0], qa[1], qb[0], qb[1]),
                    Some((Contact::Crossing, _, _))
                )
                .then_some((*sa, *qa, *sb, *qb))
            })
        });
        let Some((sa, qa, sb, qb)) = next else { break };
        ta = sa;
        pa = qa;
        tb = sb;
        pb = qb;
    }
    Ok(last)
}

/// Horizontal and vertical extent of a curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Extrema {
    /// Leftmost x.
    pub l: f64,
    /// Rightmost x.
    pub r: f64,
    #[serde(rename = "H")]
    pub h: f64,
    #[serde(rename = "V")]
    pub v: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub t_left: f64,
    pub t_right: f64,
    pub t_bottom: f64,
    pub t_top: f64,
}

/// Extremes of `x` and `y`, refined between samples by bisection on the
/// derivative of the jet source.
pub fn extrema(c: &SampledCurve) -> Result<Extrema> {
    let (t_left, l) = refined_extreme(c, 0, false)?;
    let (t_right, r) = refined_extreme(c, 0, true)?;
    let (t_bottom, y_min) = refined_extreme(c, 1, false)?;
    let (t_top, y_max) = refined_extreme(c, 1, true)?;
    Ok(Extrema {
        l,
        r,
        h: r - l,
        v: y_max - y_min,
        y_min,
        y_max,
        t_left,
        t_right,
        t_bottom,
        t_top,
    })
}

fn refined_extreme(c: &SampledCurve, axis: usize, maximize: bool) -> Result<(f64, f64)> {
    let s = &c.samples;
    let better = |a: f64, b: f64| if maximize { a > b } else { a < b };
    let mut idx = 0;
    for (k, smp) in s.iter().enumerate() {
        if better(smp.pos[axis], s[idx].pos[axis]) {
            idx = k;
        }
    }
    let mut best = (s[idx].t, s[idx].pos[axis]);
    let Some(src) = &c.source else {
        return Ok(best);
    };
    let deriv = |t: f64| -> Result<f64> {
        let g = src.jet(t, 1)?;
        let d = if axis == 0 {
            g.x.derivative(1)
        } else {
            g.y.derivative(1)
        };
        d.ok_or(Error::OrderExhausted)
    };
    let lo = idx.saturating_sub(1);
    let hi = (idx + 1).min(s.len() - 1);
    for (i, j) in [(lo, idx), (idx, hi)] {
        if i == j {
            continue;
        }
        let (da, db) = (s[i].unit_tangent[axis], s[j].unit_tangent[axis]);
        // at an interior maximum the derivative goes + to -, at a minimum - to +
        let brackets = if maximize {
            da >= 0.0 && db <= 0.0
        } else {
            da <= 0.0 && db >= 0.0
        };
        if !brackets {
            continue;
        }
        let t = bisect(deriv, s[i].t, s[j].t)?;
        let v = src.jet(t, 0)?.position()[axis];
        if better(v, best.1) {
            best = (t, v);
        }
    }
    Ok(best)
}

/// Parameters where `x'(t) = 0`, from sign changes of the sampled tangents.
pub fn vertical_tangencies(c: &SampledCurve) -> Result<Vec<f64>> {
    let s = &c.samples;
    let mut out = Vec::new();
    for (k, smp) in s.iter().enumerate() {
        if smp.unit_tangent[0] == 0.0 {
            out.push(smp.t);
            continue;
        }
        let Some(next) = s.get(k + 1) else { break };
        if next.unit_tangent[0] == 0.0
            || (smp.unit_tangent[0] > 0.0) == (next.unit_tangent[0] > 0.0)
        {
            continue;
        }
        let t = match &c.source {
            Some(src) => bisect(
                |t| src.jet(t, 1)?.x.derivative(1).ok_or(Error::OrderExhausted),
                smp.t,
                next.t,
            )?,
            None => {
                let (a, b) = (smp.unit_tangent[0], next.unit_tangent[0]);
                smp.t + (next.t - smp.t) * a / (a - b)
            }
        };
        out.push(t);
    }
    Ok(out)
}

/// Everything measured on one curve of a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveMetrics {
    pub depth: usize,
    pub samples: usize,
    pub length: f64,
    pub length_error: f64,
    /// `integral of sqrt(1 + k^2) ds`, the predicted length of the next curve.
    pub front_length: f64,
    pub front_length_error: f64,
    #[serde(rename = "H")]
    pub h: f64,
    #[serde(rename = "V")]
    pub v: f64,
    pub area: f64,
    pub area_error: f64,
    pub zero_count: Option<usize>,
    pub zero_locations: Vec<f64>,
    pub self_intersections: Vec<Crossing>,
    pub tangential_contacts: usize,
    pub l: f64,
    pub r: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub t_left: f64,
    /// `x'(t)` at the leftmost point.
    pub leftmost_x_velocity: f64,
    pub vertical_tangencies: Vec<f64>,
    pub graph_status: bool,
    pub max_abs_curvature: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricsOptions {
    /// Zero threshold as a fraction of the vertical amplitude.
    pub zero_eps_rel: f64,
    pub quad_tol: f64,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        MetricsOptions {
            zero_eps_rel: 1e-10,
            quad_tol: DEFAULT_QUAD_TOL,
        }
    }
}

impl CurveMetrics {
    pub fn compute(c: &SampledCurve, opts: &MetricsOptions) -> Result<CurveMetrics> {
        let integrals = curve_integrals(c, opts.quad_tol)?;
        let ext = extrema(c)?;
        let zeros = zero_count(c, opts.zero_eps_rel * ext.v)?;
        let crossings = self_intersections(c)?;
        let tangencies = vertical_tangencies(c)?;
        let graph_status =
            tangencies.is_empty() && c.samples.iter().all(|s| s.unit_tangent[0] > 0.0);
        let leftmost_x_velocity = match &c.source {
            Some(src) => src
                .jet(ext.t_left, 1)?
                .x
                .derivative(1)
                .ok_or(Error::OrderExhausted)?,
            None => {
                let s = c
                    .samples
                    .iter()
                    .min_by(|a, b| a.x().total_cmp(&b.x()))
                    .expect("non-empty");
                s.unit_tangent[0] * s.speed
            }
        };
        Ok(CurveMetrics {
            depth: c.depth,
            samples: c.len(),
            length: integrals.length.value,
            length_error: integrals.length.error,
            front_length: integrals.front_length.value,
            front_length_error: integrals.front_length.error,
            h: ext.h,
            v: ext.v,
            area: integrals.area.value,
            area_error: integrals.area.error,
            zero_count: zeros.count,
            zero_locations: zeros.locations,
            self_intersections: crossings.crossings,
            tangential_contacts: crossings.tangential.len(),
            l: ext.l,
            r: ext.r,
            y_min: ext.y_min,
            y_max: ext.y_max,
            t_left: ext.t_left,
            leftmost_x_velocity,
            vertical_tangencies: tangencies,
            graph_status,
            max_abs_curvature: c
                .samples
                .iter()
                .map(|s| s.curvature.abs())
                .fold(0.0, f64::max),
        })
    }
}
