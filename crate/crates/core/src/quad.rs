//! Adaptive Simpson quadrature with Richardson extrapolation over a list of
//! breakpoints, for vector-valued integrands.

use rayon::prelude::*;

use crate::error::Result;

/// Integral value with an error estimate, per component.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate<const K: usize> {
    pub value: [f64; K],
    pub error: [f64; K],
}

const MAX_LEVEL: u32 = 40;

/// Integrates `f` over `[breaks[0], breaks.last()]`, treating each gap
/// between consecutive breakpoints as its own adaptive panel. The absolute
/// tolerance `tol` is shared among panels in proportion to their width.
pub fn integrate<const K: usize, F>(f: &F, breaks: &[f64], tol: f64) -> Result<Estimate<K>>
where
    F: Fn(f64) -> Result<[f64; K]> + Sync,
{
    let mut total = Estimate {
        value: [0.0; K],
        error: [0.0; K],
    };
    if breaks.len() < 2 {
        return Ok(total);
    }
    let width = breaks[breaks.len() - 1] - breaks[0];
    let panels = breaks
        .par_windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let fa = f(a)?;
            let fm = f(0.5 * (a + b))?;
            let fb = f(b)?;
            let whole = simpson(a, b, &fa, &fm, &fb);
            panel(f, a, b, fa, fm, fb, whole, tol * (b - a) / width, 0)
        })
        .collect::<Result<Vec<_>>>()?;
    // summed in order so the result does not depend on scheduling
    for p in panels {
        for k in 0..K {
            total.value[k] += p.value[k];
            total.error[k] += p.error[k];
        }
    }
    Ok(total)
}

fn simpson<const K: usize>(
    a: f64,
    b: f64,
    fa: &[f64; K],
    fm: &[f64; K],
    fb: &[f64; K],
) -> [f64; K] {
    let h = (b - a) / 6.0;
    std::array::from_fn(|k| h * (fa[k] + 4.0 * fm[k] + fb[k]))
}

#[allow(clippy::too_many_arguments)]
fn panel<const K: usize, F>(
    f: &F,
    a: f64,
    b: f64,
    fa: [f64; K],
    fm: [f64; K],
    fb: [f64; K],
    whole: [f64; K],
    tol: f64,
    level: u32,
) -> Result<Estimate<K>>
where
    F: Fn(f64) -> Result<[f64; K]> + Sync,
{
    let m = 0.5 * (a + b);
    let flm = f(0.5 * (a + m))?;
    let frm = f(0.5 * (m + b))?;
    let left = simpson(a, m, &fa, &flm, &fm);
    let right = simpson(m, b, &fm, &frm, &fb);
    let diff: [f64; K] = std::array::from_fn(|k| (left[k] + right[k] - whole[k]) / 15.0);
    let scale = (0..K)
        .map(|k| (left[k] + right[k]).abs())
        .fold(0.0, f64::max);
    let worst = diff.iter().map(|d| d.abs()).fold(0.0, f64::max);
    if worst <= tol.max(4.0 * f64::EPSILON * scale) || level >= MAX_LEVEL || m <= a || m >= b {
        return Ok(Estimate {
            value: std::array::from_fn(|k| left[k] + right[k] + diff[k]),
            error: diff.map(f64::abs),
        });
    }
    let l = panel(f, a, m, fa, flm, fm, left, 0.5 * tol, level + 1)?;
    let r = panel(f, m, b, fm, frm, fb, right, 0.5 * tol, level + 1)?;
    Ok(Estimate {
        value: std::array::from_fn(|k| l.value[k] + r.value[k]),
        error: std::array::from_fn(|k| l.error[k] + r.error[k]),
    })
}
