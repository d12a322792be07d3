//! The bicycle front-track map `gamma -> gamma + gamma' / |gamma'|` and its
//! variant shifted by `(-1, 0)` that keeps curves anchored on `[0, 1]`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::curve::{AnalyticCurve, JetCurve, Sample, SampledCurve};
use crate::error::{Error, Result};
use crate::jets::PlaneJet;

/// Jet of the front track of a rear-wheel germ. The output order is one
/// less than the input order.
pub fn phi_jet(g: &PlaneJet) -> Result<PlaneJet> {
    let v = g.differentiate()?;
    let speed_sq = &(&v.x * &v.x) + &(&v.y * &v.y);
    if !(speed_sq.value() > 0.0) {
        return Err(Error::NotImmersed { t: f64::NAN });
    }
    let speed = speed_sq.sqrt()?;
    let x = &g.x + &v.x.div(&speed)?;
    let y = &g.y + &v.y.div(&speed)?;
    Ok(PlaneJet::new(x, y))
}

/// [`phi_jet`] followed by the translation by `(-1, 0)`.
pub fn phi_jet_shifted(g: &PlaneJet) -> Result<PlaneJet> {
    Ok(phi_jet(g)?.translate(-1.0, 0.0))
}

/// The next curve of the unitrack construction.
pub fn apply_phi_shifted(curve: &AnalyticCurve) -> Result<AnalyticCurve> {
    if curve.max_order() < 2 {
        return Err(Error::OrderBudgetExceeded {
            requested: 2,
            depth: curve.depth() + 1,
            budget: curve.jet_budget(),
        });
    }
    Ok(curve.with_depth(curve.depth() + 1))
}

/// Front track of an arbitrary jet curve, without the shift.
#[derive(Debug, Clone)]
pub struct FrontTrack {
    rear: Arc<dyn JetCurve>,
}

impl FrontTrack {
    pub fn new(rear: Arc<dyn JetCurve>) -> FrontTrack {
        FrontTrack { rear }
    }
}

impl JetCurve for FrontTrack {
    fn domain(&self) -> (f64, f64) {
        self.rear.domain()
    }

    fn max_order(&self) -> usize {
        self.rear.max_order().saturating_sub(1)
    }

    fn jet(&self, t: f64, order: usize) -> Result<PlaneJet> {
        let rear = self.rear.jet(t, order + 1)?;
        phi_jet(&rear).map_err(|e| match e {
            Error::NotImmersed { .. } => Error::NotImmersed { t },
            other => other,
        })
    }
}

/// Front track of a sampled rear track, at the same parameter values.
///
/// With a jet source that still has three orders to spare, every output
/// sample comes from exact jets. Otherwise positions are `pos + tangent` and
/// the remaining fields are finite differences, flagged approximate.
pub fn front_track(rear: &SampledCurve) -> Result<SampledCurve> {
    if let Some(s) = rear.samples.iter().find(|s| !(s.speed > 0.0)) {
        return Err(Error::NotImmersed { t: s.t });
    }
    if let Some(src) = rear.source.as_ref().filter(|s| s.max_order() >= 3) {
        let front: Arc<dyn JetCurve> = Arc::new(FrontTrack::new(src.clone()));
        let samples = rear
            .samples
            .par_iter()
            .map(|s| Sample::from_jet(s.t, &front.jet(s.t, 2)?))
            .collect::<Result<Vec<_>>>()?;
        return Ok(SampledCurve {
            samples,
            depth: rear.depth + 1,
            source: Some(front),
            approximate: false,
        });
    }
    let ts = rear.params();
    let points: Vec<[f64; 2]> = rear
        .samples
        .iter()
        .map(|s| [s.pos[0] + s.unit_tangent[0], s.pos[1] + s.unit_tangent[1]])
        .collect();
    SampledCurve::from_points(&ts, &points, rear.depth + 1)
}

/// Finite-difference backend of the shifted map on a uniform parameter grid
/// with step `h`: five-point central differences inside, one-sided
/// second-order differences at the two ends.
pub fn shifted_front_track_fd(points: &[[f64; 2]], h: f64) -> Vec<[f64; 2]> {
    let n = points.len();
    assert!(n >= 5, "need at least five points");
    (0..n)
        .map(|i| {
            let d = |k: usize| -> f64 {
                let p = |j: usize| points[j][k];
                if i >= 2 && i + 2 < n {
                    (p(i - 2) - 8.0 * p(i - 1) + 8.0 * p(i + 1) - p(i + 2)) / (12.0 * h)
                } else if i < 2 {
                    (-3.0 * p(i) + 4.0 * p(i + 1) - p(i + 2)) / (2.0 * h)
                } else {
                    (3.0 * p(i) - 4.0 * p(i - 1) + p(i - 2)) / (2.0 * h)
                }
            };
            let (dx, dy) = (d(0), d(1));
            let speed = dx.hypot(dy);
            [points[i][0] + dx / speed - 1.0, points[i][1] + dy / speed]
        })
        .collect()
}
