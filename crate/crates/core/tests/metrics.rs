mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};
use std::sync::Arc;

use common::{sampled, simpson, FnCurve};
use unitrack::curve::{sample, AnalyticCurve, SamplingOptions, SeedSpec, DEFAULT_JET_BUDGET};
use unitrack::jets::Jet;
use unitrack::metrics::{
    curve_integrals, extrema, s_value, self_intersections, vertical_tangencies, zero_count,
    CurveMetrics, MetricsOptions, DEFAULT_QUAD_TOL,
};

fn finn(depth: usize, opts: &SamplingOptions) -> CurveMetrics {
    let curve = AnalyticCurve::at_depth(SeedSpec::finn(4.0), depth, DEFAULT_JET_BUDGET).unwrap();
    let c = sample(Arc::new(curve), depth, opts).unwrap();
    CurveMetrics::compute(&c, &MetricsOptions::default()).unwrap()
}

#[test]
fn unit_segment() {
    let c = sampled((0.0, 1.0), |t| (t.clone(), Jet::zero(t.order())));
    let m = curve_integrals(&c, DEFAULT_QUAD_TOL).unwrap();
    assert!((m.length.value - 1.0).abs() < 1e-14);
    assert_eq!(m.area.value, 0.0);
    assert!((m.front_length.value - 1.0).abs() < 1e-14);
}

#[test]
fn semicircle_length_and_area() {
    let c = sampled((0.0, 1.0), |t| {
        let (s, co) = t.scale(PI).sin_cos();
        (co.scale(-1.0).offset(1.0), s)
    });
    let m = curve_integrals(&c, DEFAULT_QUAD_TOL).unwrap();
    assert!((m.length.value - PI).abs() < 1e-9, "{}", m.length.value);
    assert!((m.area.value - PI / 2.0).abs() < 1e-9, "{}", m.area.value);
    // unit curvature: the front length is sqrt(2) times the length
    assert!((m.front_length.value - PI * 2f64.sqrt()).abs() < 1e-9);
}

#[test]
fn s_value_on_lines() {
    let horizontal = FnCurve {
        domain: (0.0, 1.0),
        f: |t| (t.clone(), Jet::zero(t.order())),
    };
    let diagonal = FnCurve {
        domain: (0.0, 1.0),
        f: |t| (t.clone(), t.clone()),
    };
    let vertical = FnCurve {
        domain: (0.0, 1.0),
        f: |t| (Jet::zero(t.order()), t.clone()),
    };
    assert_eq!(s_value(&horizontal, 0.3).unwrap(), 0.0);
    assert!((s_value(&diagonal, 0.3).unwrap() - (1.0 - FRAC_1_SQRT_2)).abs() < 1e-15);
    assert_eq!(s_value(&vertical, 0.3).unwrap(), 1.0);
}

#[test]
fn zeros_of_a_sine_wave() {
    let c = sampled((0.0, 1.0), |t| {
        (t.clone(), t.scale(3.0 * PI).sin_cos().0.scale(0.1))
    });
    let z = zero_count(&c, 1e-12).unwrap();
    assert_eq!(z.count, Some(2));
    assert_eq!(z.tangential, 0);
    assert!((z.locations[0] - 1.0 / 3.0).abs() < 1e-12);
    assert!((z.locations[1] - 2.0 / 3.0).abs() < 1e-12);
}

#[test]
fn touching_zero_counts_once() {
    // y = (t - 1/2)^2 t (1 - t) touches zero at t = 1/2
    let c = sampled((0.0, 1.0), |t| {
        let d = t.offset(-0.5);
        let bump = t * &t.scale(-1.0).offset(1.0);
        (t.clone(), &(&d * &d) * &bump)
    });
    let z = zero_count(&c, 1e-9).unwrap();
    assert_eq!(z.count, Some(1));
    assert_eq!(z.tangential, 1);
    assert!((z.locations[0] - 0.5).abs() < 1e-3);
}

#[test]
fn arc_extrema_and_tangency() {
    let c = sampled((-FRAC_PI_4, FRAC_PI_4), |t| {
        let (s, co) = t.sin_cos();
        (co, s)
    });
    let e = extrema(&c).unwrap();
    assert!((e.r - 1.0).abs() < 1e-15);
    assert!(e.t_right.abs() < 1e-12);
    assert!((e.l - FRAC_1_SQRT_2).abs() < 1e-15);
    assert!((e.v - 2.0 * FRAC_1_SQRT_2).abs() < 1e-15);
    let tan = vertical_tangencies(&c).unwrap();
    assert_eq!(tan.len(), 1);
    assert!(tan[0].abs() < 1e-12);
}

#[test]
fn nodal_cubic_crossing_is_refined() {
    // (t^2, t^3 - t) crosses itself at (1, 0) for t = -1 and t = 1
    let c = sampled((-1.5, 1.5), |t| {
        let t2 = t * t;
        (t2.clone(), &(&t2 * t) - t)
    });
    let si = self_intersections(&c).unwrap();
    assert_eq!(si.crossings.len(), 1);
    let x = si.crossings[0];
    assert!(
        (x.t_i + 1.0).abs() < 1e-9 && (x.t_j - 1.0).abs() < 1e-9,
        "{x:?}"
    );
    assert!((x.point[0] - 1.0).abs() < 1e-9 && x.point[1].abs() < 1e-9);
}

#[test]
fn seed_area_matches_independent_quadrature() {
    let oracle = simpson(
        |t| {
            if t <= 0.0 || t >= 1.0 {
                0.0
            } else {
                4.0 * (-1.0 / (t * (1.0 - t))).exp()
            }
        },
        0.0,
        1.0,
        200_000,
    );
    assert!((oracle - 0.028_119_433_626_439).abs() < 1e-14, "{oracle}");
    let m = finn(0, &SamplingOptions::default());
    assert!((m.area - oracle).abs() < 1e-12);
    assert!(m.area_error < 1e-10);
}

#[test]
fn metrics_converge_under_refinement() {
    let coarse = SamplingOptions::default();
    let fine = SamplingOptions {
        min_samples: 2 * coarse.min_samples - 1,
        ..coarse
    };
    for depth in [1, 3] {
        let a = finn(depth, &coarse);
        let b = finn(depth, &fine);
        assert!((a.length - b.length).abs() <= 1e-8, "depth {depth}");
        assert!((a.area - b.area).abs() <= 1e-8, "depth {depth}");
        assert!(
            (a.front_length - b.front_length).abs() <= 1e-8,
            "depth {depth}"
        );
        assert!(
            (a.l - b.l).abs() <= 1e-8 && (a.v - b.v).abs() <= 1e-8,
            "depth {depth}"
        );
        assert_eq!(a.zero_count, b.zero_count);
        assert_eq!(a.self_intersections.len(), b.self_intersections.len());
    }
}
