//! Segment crossings of a polyline: parameter-order sweep with spatial
//! hashing for candidate pairs, then an orientation test per pair.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

/// How two segments meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Contact {
    /// Proper transversal crossing in the interior of both segments.
    Crossing,
    /// Touching, endpoint contact or collinear overlap.
    Touching,
}

/// Contact between segment `i` (points `i`, `i+1`) and segment `j > i`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentHit {
    pub i: usize,
    pub j: usize,
    /// Fractions along each segment (approximate for touching contacts).
    pub ua: f64,
    pub ub: f64,
    pub point: [f64; 2],
    pub contact: Contact,
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

fn on_segment(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

/// Classifies the contact between segments `p1p2` and `q1q2`.
pub fn segment_contact(
    p1: [f64; 2],
    p2: [f64; 2],
    q1: [f64; 2],
    q2: [f64; 2],
) -> Option<(Contact, f64, f64)> {
    let o1 = sign(orient(p1, p2, q1));
    let o2 = sign(orient(p1, p2, q2));
    let o3 = sign(orient(q1, q2, p1));
    let o4 = sign(orient(q1, q2, p2));
    let rx = p2[0] - p1[0];
    let ry = p2[1] - p1[1];
    let sx = q2[0] - q1[0];
    let sy = q2[1] - q1[1];
    let denom = rx * sy - ry * sx;
    let params = || {
        if denom == 0.0 {
            return (0.5, 0.5);
        }
        let qpx = q1[0] - p1[0];
        let qpy = q1[1] - p1[1];
        (
            ((qpx * sy - qpy * sx) / denom).clamp(0.0, 1.0),
            ((qpx * ry - qpy * rx) / denom).clamp(0.0, 1.0),
        )
    };
    if o1 * o2 < 0 && o3 * o4 < 0 {
        let (ua, ub) = params();
        return Some((Contact::Crossing, ua, ub));
    }
    let touching = (o1 == 0 && on_segment(p1, p2, q1))
        || (o2 == 0 && on_segment(p1, p2, q2))
        || (o3 == 0 && on_segment(q1, q2, p1))
        || (o4 == 0 && on_segment(q1, q2, p2));
    if touching {
        let (ua, ub) = params();
        Some((Contact::Touching, ua, ub))
    } else {
        None
    }
}

/// Segments `i` and `j` share a vertex along the polyline.
fn adjacent(i: usize, j: usize, segments: usize, closed: bool) -> bool {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi - lo <= 1 || (closed && lo == 0 && hi == segments - 1)
}

fn segment_count(points: usize, closed: bool) -> usize {
    match (points, closed) {
        (0 | 1, _) => 0,
        (n, true) if n >= 3 => n,
        (n, _) => n - 1,
    }
}

fn endpoints(points: &[[f64; 2]], k: usize) -> ([f64; 2], [f64; 2]) {
    (points[k], points[(k + 1) % points.len()])
}

const MAX_CELLS_PER_AXIS: f64 = 4096.0;

/// All contacts between non-adjacent segments, sorted by `(i, j)`.
///
/// Segments are visited in parameter order; each one is tested against the
/// earlier segments that share a grid cell with its bounding box and is
/// then inserted into those cells.
pub fn polyline_contacts(points: &[[f64; 2]], closed: bool) -> Vec<SegmentHit> {
    let m = segment_count(points.len(), closed);
    if m < 3 {
        return Vec::new();
    }
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    let mut total_len = 0.0;
    for k in 0..m {
        let (a, b) = endpoints(points, k);
        for c in 0..2 {
            lo[c] = lo[c].min(a[c].min(b[c]));
            hi[c] = hi[c].max(a[c].max(b[c]));
        }
        total_len += (b[0] - a[0]).hypot(b[1] - a[1]);
    }
    let extent = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    if !extent.is_finite() {
        return brute_candidates(points, m, closed);
    }
    let cell = (total_len / m as f64)
        .max(extent / (m as f64).sqrt())
        .max(extent / MAX_CELLS_PER_AXIS)
        .max(f64::MIN_POSITIVE);
    let cell_of = |v: f64, c: usize| ((v - lo[c]) / cell).floor() as i64;

    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    let mut stamp = vec![usize::MAX; m];
    let mut hits = Vec::new();
    for k in 0..m {
        let (a, b) = endpoints(points, k);
        let (cx0, cx1) = (cell_of(a[0].min(b[0]), 0), cell_of(a[0].max(b[0]), 0));
        let (cy0, cy1) = (cell_of(a[1].min(b[1]), 1), cell_of(a[1].max(b[1]), 1));
        for cx in cx0..=cx1 {
            for cy in cy0..=cy1 {
                let bucket = grid.entry((cx, cy)).or_default();
                for &other in bucket.iter() {
                    if stamp[other] == k || adjacent(other, k, m, closed) {
                        continue;
                    }
                    stamp[other] = k;
                    let (c, d) = endpoints(points, other);
                    if let Some((contact, ua, ub)) = segment_contact(c, d, a, b) {
                        hits.push(hit(other, k, c, d, ua, ub, contact));
                    }
                }
                bucket.push(k);
            }
        }
    }
    hits.sort_by_key(|h| (h.i, h.j));
    hits
}

fn hit(
    i: usize,
    j: usize,
    c: [f64; 2],
    d: [f64; 2],
    ua: f64,
    ub: f64,
    contact: Contact,
) -> SegmentHit {
    SegmentHit {
        i,
        j,
        ua,
        ub,
        point: [c[0] + ua * (d[0] - c[0]), c[1] + ua * (d[1] - c[1])],
        contact,
    }
}

// Fallback for non-finite coordinates, where the grid is meaningless.
fn brute_candidates(points: &[[f64; 2]], m: usize, closed: bool) -> Vec<SegmentHit> {
    let mut hits = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if adjacent(i, j, m, closed) {
                continue;
            }
            let (a, b) = endpoints(points, i);
            let (c, d) = endpoints(points, j);
            if let Some((contact, ua, ub)) = segment_contact(a, b, c, d) {
                hits.push(hit(i, j, a, b, ua, ub, contact));
            }
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proper_crossing() {
        let c = segment_contact([0.0, 0.0], [2.0, 2.0], [0.0, 2.0], [2.0, 0.0]).unwrap();
        assert_eq!(c.0, Contact::Crossing);
        assert!((c.1 - 0.5).abs() < 1e-15 && (c.2 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn t_junction_is_touching() {
        let c = segment_contact([0.0, 0.0], [2.0, 0.0], [1.0, 0.0], [1.0, 1.0]).unwrap();
        assert_eq!(c.0, Contact::Touching);
        assert!(segment_contact([0.0, 0.0], [1.0, 0.0], [2.0, 1.0], [3.0, 1.0]).is_none());
    }

    #[test]
    fn straight_polyline_has_no_contacts() {
        let pts: Vec<[f64; 2]> = (0..100).map(|i| [i as f64 / 99.0, 0.0]).collect();
        assert!(polyline_contacts(&pts, false).is_empty());
    }

    #[test]
    fn bowtie_crosses_once() {
        let pts = [[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]];
        let hits = polyline_contacts(&pts, true);
        assert_eq!(hits.len(), 1);
        assert_eq!((hits[0].i, hits[0].j), (0, 2));
        assert_eq!(hits[0].contact, Contact::Crossing);
    }
}
