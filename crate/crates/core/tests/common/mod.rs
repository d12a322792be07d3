#![allow(dead_code)]

use std::sync::Arc;

use unitrack::curve::{sample, JetCurve, SampledCurve, SamplingOptions};
use unitrack::jets::{Jet, PlaneJet};
use unitrack::Result;

/// A plane curve given as a jet-level formula in the parameter.
pub struct FnCurve {
    pub domain: (f64, f64),
    pub f: fn(&Jet) -> (Jet, Jet),
}

impl std::fmt::Debug for FnCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FnCurve{:?}", self.domain)
    }
}

impl JetCurve for FnCurve {
    fn domain(&self) -> (f64, f64) {
        self.domain
    }
    fn max_order(&self) -> usize {
        usize::MAX
    }
    fn jet(&self, t: f64, order: usize) -> Result<PlaneJet> {
        let (x, y) = (self.f)(&Jet::variable(t, order));
        Ok(PlaneJet::new(x, y))
    }
}

pub fn sampled(domain: (f64, f64), f: fn(&Jet) -> (Jet, Jet)) -> SampledCurve {
    sample(
        Arc::new(FnCurve { domain, f }),
        0,
        &SamplingOptions::default(),
    )
    .unwrap()
}

/// Composite Simpson rule with `n` (even) panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}
