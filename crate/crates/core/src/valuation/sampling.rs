//! Checks symbolic cut arithmetic against the membership predicate.
//!
//! Membership in a product or colon is a quantified statement over the
//! operands. A probe `c` is judged by searching a finite candidate set built
//! around the operand boundaries: points exactly on `ρ`, points a tiny or a
//! unit step away in each coordinate, and huge positive and negative tails
//! below the prefix. Witnesses use a much finer step and much larger tails
//! than probes, so a candidate exists whenever the true answer needs one.
//!
//! A reported [`Disagreement`] always names the probe and the operands, so
//! it can be replayed.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use super::grid::random_element;
use super::{CutIdeal, CutKind, GroupElement, ValueGroup};
use crate::error::Result;
use crate::exact::Rational;

#[derive(Clone, Debug)]
pub struct SamplingConfig {
    pub witness_eps: Rational,
    pub witness_big: i64,
    pub probe_eps: Rational,
    pub probe_big: i64,
    /// Uniformly random probes added to the boundary probes.
    pub random_probes: usize,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            witness_eps: pow2_inv(40),
            witness_big: 1_000_000_000,
            probe_eps: pow2_inv(20),
            probe_big: 1_000,
            random_probes: 40,
        }
    }
}

fn pow2_inv(e: u32) -> Rational {
    Rational::new(1, 1i64 << e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub op: String,
    pub group: String,
    pub operands: Vec<String>,
    pub result: String,
    pub probe: String,
    /// What the symbolic result says about the probe.
    pub claimed: bool,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over {} of [{}] = {}: probe {} claimed {}",
            self.op,
            self.group,
            self.operands.join("; "),
            self.result,
            self.probe,
            if self.claimed { "in" } else { "out" }
        )
    }
}

/// Points around the boundary of `cut`: on it, stepped by `±1` or `±eps`
/// (dense positions only) at one coordinate of the prefix, and completed by
/// tails of `-big`, `0`, `big`.
pub fn near_boundary(cut: &CutIdeal, eps: &Rational, big: i64) -> Vec<GroupElement> {
    let group = cut.group();
    let rho = cut.rho();
    let mut prefixes = vec![rho.to_vec()];
    for i in 0..rho.len() {
        let mut steps = vec![Rational::one(), -&Rational::one()];
        if group.is_dense_at(i) {
            steps.push(eps.clone());
            steps.push(-eps);
        }
        for s in steps {
            let mut p = rho.to_vec();
            p[i] = &p[i] + &s;
            prefixes.push(p);
        }
    }
    let tail_values = [Rational::integer(-big), Rational::zero(), Rational::integer(big)];
    let mut out = Vec::new();
    for prefix in prefixes {
        // Non-canonical inputs may carry fractions at discrete positions.
        if prefix
            .iter()
            .enumerate()
            .any(|(i, r)| !group.is_dense_at(i) && !r.is_integer())
        {
            continue;
        }
        let mut points = vec![prefix];
        for _ in rho.len()..group.rank() {
            points = points
                .into_iter()
                .flat_map(|p| {
                    tail_values.iter().map(move |t| {
                        let mut q = p.clone();
                        q.push(t.clone());
                        q
                    })
                })
                .collect();
        }
        out.extend(points.into_iter().map(|p| group.element(p).expect("integral coordinates")));
    }
    out
}

/// Probe points for checking a result: boundary points of every cut
/// involved plus uniformly random elements.
pub fn probes<R: Rng>(
    cuts: &[&CutIdeal],
    rng: &mut R,
    cfg: &SamplingConfig,
    target: usize,
) -> Vec<GroupElement> {
    let group = cuts[0].group();
    let mut out: Vec<GroupElement> = cuts
        .iter()
        .flat_map(|c| near_boundary(c, &cfg.probe_eps, cfg.probe_big))
        .collect();
    let randoms = cfg.random_probes.max(target.saturating_sub(out.len()));
    out.extend((0..randoms).map(|_| random_element(group, rng, 4)));
    out
}

fn disagreement(
    op: &str,
    operands: &[&CutIdeal],
    result: &CutIdeal,
    probe: &GroupElement,
    claimed: bool,
) -> Disagreement {
    Disagreement {
        op: op.to_string(),
        group: result.group().to_string(),
        operands: operands.iter().map(|c| c.to_string()).collect(),
        result: result.to_string(),
        probe: probe.to_string(),
        claimed,
    }
}

fn member(cut: &CutIdeal, g: &GroupElement) -> bool {
    cut.contains(g).expect("same group")
}

/// Checks `a · b` on `probes`: `c` is in the product iff `c = x + (c - x)`
/// with `x ∈ a`, `c - x ∈ b` for some candidate `x`.
pub fn check_multiply(
    a: &CutIdeal,
    b: &CutIdeal,
    probes: &[GroupElement],
    cfg: &SamplingConfig,
) -> Result<Option<Disagreement>> {
    let product = a.multiply(b)?;
    let near_a = near_boundary(a, &cfg.witness_eps, cfg.witness_big);
    let near_b = near_boundary(b, &cfg.witness_eps, cfg.witness_big);
    for c in probes {
        let claimed = member(&product, c);
        let actual = near_a
            .iter()
            .cloned()
            .chain(near_b.iter().map(|y| c.sub(y)))
            .any(|x| member(a, &x) && member(b, &c.sub(&x)));
        if claimed != actual {
            return Ok(Some(disagreement("multiply", &[a, b], &product, c, claimed)));
        }
    }
    Ok(None)
}

/// Checks `(a : b)` on `probes`: `x` is in the colon iff no candidate
/// `y ∈ b` has `x + y ∉ a`.
pub fn check_colon(
    a: &CutIdeal,
    b: &CutIdeal,
    probes: &[GroupElement],
    cfg: &SamplingConfig,
) -> Result<Option<Disagreement>> {
    let colon = a.colon(b)?;
    let near_a = near_boundary(a, &cfg.witness_eps, cfg.witness_big);
    let near_b: Vec<GroupElement> = near_boundary(b, &cfg.witness_eps, cfg.witness_big)
        .into_iter()
        .filter(|y| member(b, y))
        .collect();
    for x in probes {
        let claimed = member(&colon, x);
        let escapes = near_b
            .iter()
            .cloned()
            .chain(near_a.iter().map(|z| z.sub(x)).filter(|y| member(b, y)))
            .any(|y| !member(a, &x.add(&y)));
        if claimed == escapes {
            return Ok(Some(disagreement("colon", &[a, b], &colon, x, claimed)));
        }
    }
    Ok(None)
}

/// Checks `a^n` on `probes`, using decompositions `c = (n-1)x + (c - (n-1)x)`.
/// Besides the sampling, the power must agree with repeated products.
pub fn check_power(
    a: &CutIdeal,
    n: u32,
    probes: &[GroupElement],
    cfg: &SamplingConfig,
) -> Result<Option<Disagreement>> {
    let power = a.power(n)?;
    let mut repeated = a.clone();
    for _ in 1..n {
        repeated = repeated.multiply(a)?;
    }
    let op = format!("power {n}");
    let near_a = near_boundary(a, &cfg.witness_eps, cfg.witness_big);
    for c in probes {
        let claimed = member(&power, c);
        if claimed != member(&repeated, c) {
            return Ok(Some(disagreement(&op, &[a], &power, c, claimed)));
        }
        let k = n as i64 - 1;
        let actual = near_a
            .iter()
            .any(|x| member(a, x) && member(a, &c.sub(&x.scale(k))));
        if claimed != actual {
            return Ok(Some(disagreement(&op, &[a], &power, c, claimed)));
        }
    }
    Ok(None)
}

/// Checks that canonicalizing `raw` does not change membership.
pub fn check_canonical(raw: &CutIdeal, probes: &[GroupElement]) -> Option<Disagreement> {
    let canonical = raw.canonicalize();
    probes
        .iter()
        .find(|g| member(raw, g) != member(&canonical, g))
        .map(|g| disagreement("canonicalize", &[raw], &canonical, g, member(&canonical, g)))
}

/// A cut with arbitrary, possibly non-canonical fields.
pub fn random_raw_cut<R: Rng>(group: &ValueGroup, rng: &mut R) -> CutIdeal {
    let m = rng.gen_range(1..=group.rank());
    let rho = (0..m)
        .map(|_| {
            let d = [1, 2, 3][rng.gen_range(0..3)];
            Rational::new(rng.gen_range(-3 * d..=3 * d), d)
        })
        .collect();
    let kind = if rng.gen_bool(0.5) { CutKind::Ge } else { CutKind::Gt };
    CutIdeal::raw(group, kind, rho).expect("valid length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::grid::{cut_grid, default_groups, default_rho_values};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn near_boundary_straddles_the_cut() {
        let cfg = SamplingConfig::default();
        for group in default_groups() {
            for cut in cut_grid(&group, &default_rho_values()) {
                let pts = near_boundary(&cut, &cfg.probe_eps, cfg.probe_big);
                assert!(pts.iter().any(|g| member(&cut, g)), "{cut}");
                assert!(pts.iter().any(|g| !member(&cut, g)), "{cut}");
            }
        }
    }

    #[test]
    fn grid_products_and_colons_agree_with_membership() {
        let cfg = SamplingConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for group in default_groups() {
            let grid = cut_grid(&group, &default_rho_values());
            for a in grid.iter().step_by(3) {
                for b in grid.iter().step_by(5) {
                    let pts = probes(&[a, b], &mut rng, &cfg, 0);
                    assert_eq!(check_multiply(a, b, &pts, &cfg).unwrap(), None);
                    assert_eq!(check_colon(a, b, &pts, &cfg).unwrap(), None);
                }
                let pts = probes(&[a], &mut rng, &cfg, 0);
                assert_eq!(check_power(a, 3, &pts, &cfg).unwrap(), None);
            }
        }
    }

    #[test]
    fn canonicalization_keeps_membership() {
        let cfg = SamplingConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for group in default_groups() {
            for _ in 0..100 {
                let raw = random_raw_cut(&group, &mut rng);
                let mut pts = probes(&[&raw.canonicalize()], &mut rng, &cfg, 0);
                pts.extend(near_boundary(&raw, &cfg.probe_eps, cfg.probe_big));
                assert_eq!(check_canonical(&raw, &pts), None);
            }
        }
    }

    #[test]
    fn a_wrong_rule_is_caught() {
        // GE·GT at equal length must be strict; claiming GE is detectably wrong.
        let qq = ValueGroup::from_code("Q").unwrap();
        let cfg = SamplingConfig::default();
        let a = CutIdeal::ge(&qq, &[Rational::one()]).unwrap();
        let b = CutIdeal::gt(&qq, &[Rational::one()]).unwrap();
        let wrong = CutIdeal::ge(&qq, &[Rational::integer(2)]).unwrap();
        let probe = qq.element_from_ints(&[2]).unwrap();
        assert!(member(&wrong, &probe));
        let near_a = near_boundary(&a, &cfg.witness_eps, cfg.witness_big);
        let near_b = near_boundary(&b, &cfg.witness_eps, cfg.witness_big);
        let decomposable = near_a
            .iter()
            .cloned()
            .chain(near_b.iter().map(|y| probe.sub(y)))
            .any(|x| member(&a, &x) && member(&b, &probe.sub(&x)));
        assert!(!decomposable);
    }
}
