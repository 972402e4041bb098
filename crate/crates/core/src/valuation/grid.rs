//! Finite families of cuts: the exhaustive grid and seeded random cuts.

use rand::Rng;

use super::{sort_cuts, CutIdeal, CutKind, GroupElement, ValueGroup};
use crate::exact::Rational;

/// Prefix entries used by [`cut_grid`].
pub fn default_rho_values() -> Vec<Rational> {
    [(0, 1), (1, 2), (-1, 2), (1, 1), (-1, 1), (3, 2), (2, 1)]
        .iter()
        .map(|&(n, d)| Rational::new(n, d))
        .collect()
}

/// The groups every exhaustive check runs over.
pub fn default_groups() -> Vec<ValueGroup> {
    ["Z", "Q", "ZZ", "ZQ", "QZ"]
        .iter()
        .map(|c| ValueGroup::from_code(c).expect("valid code"))
        .collect()
}

/// Every canonical cut `GE_m(ρ)` / `GT_m(ρ)` with `ρ` drawn from `values`,
/// sorted by inclusion and deduplicated. Includes fractional cuts.
pub fn cut_grid(group: &ValueGroup, values: &[Rational]) -> Vec<CutIdeal> {
    let mut cuts = Vec::new();
    for m in 1..=group.rank() {
        for rho in tuples(values, m) {
            for kind in [CutKind::Ge, CutKind::Gt] {
                cuts.push(CutIdeal::new(group, kind, rho.clone()).expect("valid length"));
            }
        }
    }
    sort_cuts(&mut cuts);
    cuts
}

/// The grid intersected with `V`: every entry is an integral ideal.
pub fn integral_grid(group: &ValueGroup, values: &[Rational]) -> Vec<CutIdeal> {
    let mut cuts: Vec<CutIdeal> = cut_grid(group, values)
        .iter()
        .map(CutIdeal::meet_ring)
        .collect();
    sort_cuts(&mut cuts);
    cuts
}

fn tuples(values: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v.clone());
                    next
                })
            })
            .collect();
    }
    out
}

fn random_entry<R: Rng>(rng: &mut R, dense: bool, span: i64) -> Rational {
    if dense {
        let d = [1, 2, 3, 4][rng.gen_range(0..4)];
        Rational::new(rng.gen_range(-span * d..=span * d), d)
    } else {
        Rational::integer(rng.gen_range(-span..=span))
    }
}

/// A random group element with coordinates in `[-span, span]`.
pub fn random_element<R: Rng>(group: &ValueGroup, rng: &mut R, span: i64) -> GroupElement {
    let entries = (0..group.rank())
        .map(|i| random_entry(rng, group.is_dense_at(i), span))
        .collect();
    group.element(entries).expect("coordinates respect the group")
}

/// A random canonical cut. Entries at discrete positions are occasionally
/// fractional so canonicalization gets exercised; `integral` intersects the
/// result with `V`.
pub fn random_cut<R: Rng>(group: &ValueGroup, rng: &mut R, integral: bool) -> CutIdeal {
    let m = rng.gen_range(1..=group.rank());
    let rho = (0..m).map(|_| random_entry(rng, true, 3)).collect();
    let kind = if rng.gen_bool(0.5) { CutKind::Ge } else { CutKind::Gt };
    let cut = CutIdeal::new(group, kind, rho).expect("valid length");
    if integral {
        cut.meet_ring()
    } else {
        cut
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn grid_is_canonical_sorted_and_distinct() {
        for group in default_groups() {
            let grid = cut_grid(&group, &default_rho_values());
            assert!(grid.iter().all(CutIdeal::is_canonical));
            for w in grid.windows(2) {
                assert!(w[0].is_subset(&w[1]).unwrap() && w[0] != w[1]);
            }
            let integral = integral_grid(&group, &default_rho_values());
            assert!(integral.iter().all(CutIdeal::is_integral));
            assert!(integral.contains(&CutIdeal::ring(&group)));
        }
    }

    #[test]
    fn grid_sizes() {
        let values = default_rho_values();
        // Over ℚ all seven values survive in both kinds.
        assert_eq!(cut_grid(&ValueGroup::from_code("Q").unwrap(), &values).len(), 14);
        // Over ℤ the half-integers round up and GT collapses onto GE.
        // leaving GE_1(c) for c in -1..=3.
        assert_eq!(cut_grid(&ValueGroup::from_code("Z").unwrap(), &values).len(), 5);
    }

    #[test]
    fn random_cuts_respect_flags() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for group in default_groups() {
            for _ in 0..200 {
                let c = random_cut(&group, &mut rng, true);
                assert!(c.is_canonical() && c.is_integral());
                let e = random_element(&group, &mut rng, 4);
                assert_eq!(e.rank(), group.rank());
            }
        }
    }
}
