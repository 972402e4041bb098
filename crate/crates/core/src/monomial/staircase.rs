//! Two-variable fast paths.
//!
//! A two-variable monomial module is a staircase: corners sorted by strictly
//! increasing x with strictly decreasing y. Its height function
//! `h(a) = min { b : (a, b) in the module }` is non-increasing, infinite left
//! of the first corner and constant right of the last, so intersections and
//! colons become pointwise maxima over a bounded window of x values.

use super::ExponentVector;

const INF: i64 = i64::MAX;

struct Stair {
    corners: Vec<(i64, i64)>,
}

impl Stair {
    /// `points` must already be minimal (any order).
    fn from_minimal(points: &[ExponentVector]) -> Self {
        let mut corners: Vec<(i64, i64)> = points.iter().map(|p| (p.0[0], p.0[1])).collect();
        corners.sort_unstable();
        Stair { corners }
    }

    fn first_x(&self) -> i64 {
        self.corners[0].0
    }

    fn last_x(&self) -> i64 {
        self.corners[self.corners.len() - 1].0
    }

    /// Heights over `lo..=hi`.
    fn table(&self, lo: i64, hi: i64) -> Vec<i64> {
        let mut out = Vec::with_capacity((hi - lo + 1).max(0) as usize);
        let mut idx = 0usize;
        let mut current = INF;
        // Skip corners strictly left of the window.
        while idx < self.corners.len() && self.corners[idx].0 <= lo {
            current = self.corners[idx].1;
            idx += 1;
        }
        for a in lo..=hi {
            while idx < self.corners.len() && self.corners[idx].0 <= a {
                current = self.corners[idx].1;
                idx += 1;
            }
            out.push(current);
        }
        out
    }
}

/// Corners of a non-increasing height table starting at x = `lo`.
fn corners_of(lo: i64, heights: &[i64]) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut prev = INF;
    for (i, &h) in heights.iter().enumerate() {
        if h < prev {
            out.push(ExponentVector(vec![lo + i as i64, h]));
            prev = h;
        }
    }
    out
}

pub(super) fn minimal(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_unstable_by(|p, q| p.0.cmp(&q.0));
    let mut out: Vec<ExponentVector> = Vec::new();
    let mut low = INF;
    for g in gens {
        if g.0[1] < low {
            low = g.0[1];
            out.push(g);
        }
    }
    out
}

pub(super) fn intersect(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    let sa = Stair::from_minimal(a);
    let sb = Stair::from_minimal(b);
    let lo = sa.first_x().max(sb.first_x());
    let hi = sa.last_x().max(sb.last_x());
    let ta = sa.table(lo, hi);
    let tb = sb.table(lo, hi);
    let heights: Vec<i64> = ta.iter().zip(&tb).map(|(x, y)| *x.max(y)).collect();
    corners_of(lo, &heights)
}

/// Laurent colon `{ m : m + b ⊆ a }` of two minimal generator sets.
fn laurent_colon(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    let sa = Stair::from_minimal(a);
    let min_gx = b.iter().map(|g| g.0[0]).min().expect("nonempty");
    let max_gx = b.iter().map(|g| g.0[0]).max().expect("nonempty");
    let lo = sa.first_x() - min_gx;
    let hi = sa.last_x() - min_gx;
    // Heights of `a` over every x the shifted windows can touch.
    let base_lo = lo + min_gx;
    let ta = sa.table(base_lo, hi + max_gx);
    let mut heights = vec![i64::MIN; (hi - lo + 1) as usize];
    for g in b {
        let (gx, gy) = (g.0[0], g.0[1]);
        let offset = (gx - min_gx) as usize;
        for (slot, &h) in heights.iter_mut().zip(&ta[offset..]) {
            let v = h - gy;
            if v > *slot {
                *slot = v;
            }
        }
    }
    corners_of(lo, &heights)
}

pub(super) fn ring_colon(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    let laurent = laurent_colon(a, b);
    minimal(
        laurent
            .into_iter()
            .map(|p| ExponentVector(vec![p.0[0].max(0), p.0[1].max(0)]))
            .collect(),
    )
}
