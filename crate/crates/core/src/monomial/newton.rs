//! Integral closure of two-variable monomial ideals.
//!
//! The integral closure of a monomial ideal is spanned by the lattice points
//! of its Newton polyhedron, the convex hull of the generator exponents plus
//! the non-negative orthant. In two variables the lower boundary of that
//! polyhedron is the lower convex hull of the staircase corners, so the
//! closure's height at each integer x is the ceiling of the hull's height,
//! computed with exact integer arithmetic.

use num_integer::Integer;

use super::{ExponentVector, MonomialIdeal};
use crate::error::{Error, Result};

/// Twice the signed area of the triangle `o, a, b`.
fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn lower_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(points.len());
    for &p in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

pub fn integral_closure_2v(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.nvars() != 2 {
        return Err(Error::UnsupportedDimension(ideal.nvars()));
    }
    let mut corners: Vec<(i64, i64)> = ideal
        .generators()
        .iter()
        .map(|g| (g.as_slice()[0], g.as_slice()[1]))
        .collect();
    corners.sort_unstable();
    let hull = lower_hull(&corners);

    let mut gens = Vec::new();
    for edge in hull.windows(2) {
        let ((x0, y0), (x1, y1)) = (edge[0], edge[1]);
        let width = x1 - x0;
        for a in x0..x1 {
            // Height y0 + (a - x0)(y1 - y0)/width, rounded up.
            let numer = y0 * width + (a - x0) * (y1 - y0);
            gens.push(ExponentVector::new(vec![a, Integer::div_ceil(&numer, &width)]));
        }
    }
    let &(xr, yr) = hull.last().expect("nonempty ideal");
    gens.push(ExponentVector::new(vec![xr, yr]));
    MonomialIdeal::minimalize(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(rows).unwrap()
    }

    /// Points m with k*m in I^k for some k <= max_k, minimalized.
    fn brute_closure(i: &MonomialIdeal, bound: i64, max_k: u32) -> MonomialIdeal {
        let powers: Vec<MonomialIdeal> = (1..=max_k).map(|k| i.power(k).unwrap()).collect();
        let mut hits = Vec::new();
        for a in 0..=bound {
            for b in 0..=bound {
                let m = ExponentVector::new(vec![a, b]);
                if powers
                    .iter()
                    .enumerate()
                    .any(|(k, p)| p.contains(&m.scale(k as i64 + 1)).unwrap())
                {
                    hits.push(m);
                }
            }
        }
        MonomialIdeal::minimalize(hits).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            integral_closure_2v(&ideal(&[&[2, 0], &[0, 2]])).unwrap(),
            ideal(&[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert!(ideal(&[&[2, 0], &[0, 2]]).power(2).unwrap().contains(&ExponentVector::new(vec![2, 2])).unwrap());
        assert_eq!(
            integral_closure_2v(&ideal(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]])).unwrap(),
            ideal(&[&[4, 0], &[3, 1], &[2, 2], &[1, 3], &[0, 4]])
        );
        assert_eq!(integral_closure_2v(&ideal(&[&[3, 5]])).unwrap(), ideal(&[&[3, 5]]));
        assert_eq!(
            integral_closure_2v(&MonomialIdeal::from_exponents(&[&[1, 0, 0]]).unwrap()),
            Err(Error::UnsupportedDimension(3))
        );
    }

    #[test]
    fn matches_power_membership_oracle() {
        let cases: &[&[&[i64]]] = &[
            &[&[5, 0], &[0, 3]],
            &[&[4, 0], &[2, 1], &[0, 5]],
            &[&[3, 1], &[1, 4]],
            &[&[6, 0], &[1, 2], &[0, 6]],
            &[&[2, 3], &[5, 0], &[0, 5]],
            &[&[5, 2], &[3, 3], &[0, 5]],
        ];
        for rows in cases {
            let i = ideal(rows);
            assert_eq!(integral_closure_2v(&i).unwrap(), brute_closure(&i, 8, 12), "{i}");
        }
    }
}
