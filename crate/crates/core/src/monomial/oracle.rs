//! Brute-force Ratliff-Rush membership.
//!
//! The oracle never calls the colon or product routines of the closure
//! engine. Powers of the ideal are expanded from the generators directly:
//! in two variables as height tables built by the min-plus recursion
//! `h_{k+1}(a) = min_g h_k(a - g_x) + g_y`, otherwise by recursive membership
//! `v ∈ I^{k+1} ⟺ v - g ∈ I^k` for some generator `g`. A point `m` belongs
//! to the closure when `m · I^n ⊆ I^{n+1}` for some `n` up to the bound; the
//! whole of `I^n` is tested, not just its generators.

use std::collections::HashMap;

use super::{ClosureConfig, ExponentVector, MonomialIdeal};
use crate::error::{Error, Result};

const INF: i64 = i64::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    pub closure: MonomialIdeal,
    pub degree_bound: i64,
    pub n_bound: u32,
    /// A minimal generator reached the degree bound, so the bound may be too
    /// small and the outcome cannot certify anything.
    pub boundary_touched: bool,
}

/// Height tables of `I, I^2, ..., I^{levels}` over `x in 0..width`.
struct PowerTables {
    tables: Vec<Vec<i64>>,
    max_gx: i64,
}

impl PowerTables {
    fn new(ideal: &MonomialIdeal, levels: u32, width: usize) -> Self {
        let gens: Vec<(i64, i64)> = ideal
            .generators()
            .iter()
            .map(|g| (g.as_slice()[0], g.as_slice()[1]))
            .collect();
        let max_gx = gens.iter().map(|g| g.0).max().unwrap_or(0);
        let mut first = vec![INF; width];
        for (a, slot) in first.iter_mut().enumerate() {
            for &(gx, gy) in &gens {
                if gx <= a as i64 {
                    *slot = (*slot).min(gy);
                }
            }
        }
        let mut tables = vec![first];
        for _ in 1..levels {
            let prev = tables.last().expect("nonempty");
            let mut next = vec![INF; width];
            for (a, slot) in next.iter_mut().enumerate() {
                for &(gx, gy) in &gens {
                    let rest = a as i64 - gx;
                    if rest >= 0 && prev[rest as usize] != INF {
                        *slot = (*slot).min(prev[rest as usize] + gy);
                    }
                }
            }
            tables.push(next);
        }
        PowerTables { tables, max_gx }
    }

    /// `m · I^n ⊆ I^{n+1}`, testing every boundary point of `I^n`.
    fn multiplies_into(&self, m: (i64, i64), n: usize) -> bool {
        let low = &self.tables[n - 1];
        let high = &self.tables[n];
        let reach = ((n as i64 + 1) * self.max_gx) as usize;
        (0..=reach).all(|a| {
            let h = low[a];
            h == INF || high[a + m.0 as usize] <= m.1 + h
        })
    }
}

fn table_width(ideal: &MonomialIdeal, n_bound: u32, degree_bound: i64) -> usize {
    let max_gx = ideal
        .generators()
        .iter()
        .map(|g| g.as_slice()[0])
        .max()
        .unwrap_or(0);
    ((n_bound as i64 + 2) * max_gx + degree_bound + 2) as usize
}

/// Membership of `v` in `I^k`, memoized over `(k, v)`.
struct PowerMembership<'a> {
    ideal: &'a MonomialIdeal,
    memo: HashMap<(u32, Vec<i64>), bool>,
}

impl PowerMembership<'_> {
    fn contains(&mut self, k: u32, v: &ExponentVector) -> bool {
        if k == 0 {
            return v.is_nonnegative();
        }
        if !v.is_nonnegative() {
            return false;
        }
        let key = (k, v.as_slice().to_vec());
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let gens = self.ideal.generators().to_vec();
        let hit = gens
            .iter()
            .any(|g| g.divides(v) && self.contains(k - 1, &v.sub(g)));
        self.memo.insert(key, hit);
        hit
    }
}

/// All sums of `n` generators (a generating set of `I^n`).
fn power_sums(ideal: &MonomialIdeal, n: u32) -> Vec<ExponentVector> {
    let gens = ideal.generators();
    let mut sums = vec![(0usize, ExponentVector::zeros(ideal.nvars()))];
    for _ in 0..n {
        sums = sums
            .into_iter()
            .flat_map(|(start, s)| (start..gens.len()).map(move |i| (i, s.add(&gens[i]))))
            .collect();
    }
    let mut out: Vec<ExponentVector> = sums.into_iter().map(|(_, s)| s).collect();
    out.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
    out.dedup();
    out
}

fn generic_member(
    ideal: &MonomialIdeal,
    members: &mut PowerMembership<'_>,
    sums: &mut Vec<Vec<ExponentVector>>,
    m: &ExponentVector,
    n_bound: u32,
) -> bool {
    (1..=n_bound).any(|n| {
        while sums.len() < n as usize {
            let next = power_sums(ideal, sums.len() as u32 + 1);
            sums.push(next);
        }
        sums[n as usize - 1]
            .iter()
            .all(|s| members.contains(n + 1, &m.add(s)))
    })
}

fn check_point(ideal: &MonomialIdeal, m: &ExponentVector) -> Result<()> {
    if m.len() != ideal.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ideal.nvars(),
            found: m.len(),
        });
    }
    if let Some(&value) = m.as_slice().iter().find(|&&e| e < 0) {
        return Err(Error::NegativeExponent { value });
    }
    Ok(())
}

/// Whether `m` lies in the Ratliff-Rush closure, searching `n` up to
/// `cfg.oracle_n_bound`.
pub fn rr_oracle_membership(
    ideal: &MonomialIdeal,
    m: &ExponentVector,
    cfg: &ClosureConfig,
) -> Result<bool> {
    check_point(ideal, m)?;
    let n_bound = cfg.oracle_n_bound;
    if ideal.nvars() == 2 {
        let width = table_width(ideal, n_bound, m.degree());
        let tables = PowerTables::new(ideal, n_bound + 1, width);
        let p = (m.as_slice()[0], m.as_slice()[1]);
        Ok((1..=n_bound as usize).any(|n| tables.multiplies_into(p, n)))
    } else {
        let mut members = PowerMembership {
            ideal,
            memo: HashMap::new(),
        };
        Ok(generic_member(ideal, &mut members, &mut Vec::new(), m, n_bound))
    }
}

fn points_up_to_degree(n: usize, bound: i64) -> Vec<ExponentVector> {
    let mut pts: Vec<(i64, Vec<i64>)> = vec![(0, Vec::new())];
    for _ in 0..n {
        pts = pts
            .into_iter()
            .flat_map(|(deg, p)| {
                (0..=bound - deg).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    (deg + e, q)
                })
            })
            .collect();
    }
    pts.into_iter().map(|(_, p)| ExponentVector::new(p)).collect()
}

/// The closure restricted to total degree `<= degree_bound`, minimalized.
pub fn rr_oracle_closure(ideal: &MonomialIdeal, cfg: &ClosureConfig) -> Result<OracleOutcome> {
    let degree_bound = cfg.degree_bound_for(ideal);
    let n_bound = cfg.oracle_n_bound;
    let points = points_up_to_degree(ideal.nvars(), degree_bound);
    let hits: Vec<ExponentVector> = if ideal.nvars() == 2 {
        let tables = PowerTables::new(ideal, n_bound + 1, table_width(ideal, n_bound, degree_bound));
        points
            .into_iter()
            .filter(|m| {
                let p = (m.as_slice()[0], m.as_slice()[1]);
                (1..=n_bound as usize).any(|n| tables.multiplies_into(p, n))
            })
            .collect()
    } else {
        let mut members = PowerMembership {
            ideal,
            memo: HashMap::new(),
        };
        let mut sums = Vec::new();
        points
            .into_iter()
            .filter(|m| generic_member(ideal, &mut members, &mut sums, m, n_bound))
            .collect()
    };
    let closure = MonomialIdeal::minimalize(hits)?;
    let boundary_touched = closure
        .generators()
        .iter()
        .any(|g| g.degree() >= degree_bound);
    Ok(OracleOutcome {
        closure,
        degree_bound,
        n_bound,
        boundary_touched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(rows).unwrap()
    }

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn witness_membership() {
        let j = ideal(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let cfg = ClosureConfig::default();
        assert!(rr_oracle_membership(&j, &ev(&[2, 2]), &cfg).unwrap());
        assert!(!rr_oracle_membership(&j, &ev(&[1, 1]), &cfg).unwrap());
        for g in j.generators() {
            assert!(rr_oracle_membership(&j, g, &cfg).unwrap());
        }
        assert!(rr_oracle_membership(&j, &ev(&[-1, 2]), &cfg).is_err());
    }

    #[test]
    fn oracle_closure_of_witness() {
        let j = ideal(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let out = rr_oracle_closure(&j, &ClosureConfig::default()).unwrap();
        assert_eq!(out.degree_bound, 12);
        assert_eq!(out.closure, ideal(&[&[4, 0], &[3, 1], &[2, 2], &[1, 3], &[0, 4]]));
        assert!(!out.boundary_touched);
    }

    #[test]
    fn generic_path_agrees_with_tables() {
        // Embed a 2-variable ideal in 3 variables; the third variable is inert.
        let j2 = ideal(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let j3 = ideal(&[&[4, 0, 0], &[3, 1, 0], &[1, 3, 0], &[0, 4, 0]]);
        let cfg = ClosureConfig {
            oracle_n_bound: 4,
            ..ClosureConfig::default()
        };
        for a in 0..5 {
            for b in 0..5 {
                let two = rr_oracle_membership(&j2, &ev(&[a, b]), &cfg).unwrap();
                let three = rr_oracle_membership(&j3, &ev(&[a, b, 0]), &cfg).unwrap();
                assert_eq!(two, three, "({a},{b})");
            }
        }
    }

    #[test]
    fn power_sums_generate_powers() {
        let i = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        let sums = power_sums(&i, 3);
        assert_eq!(MonomialIdeal::minimalize(sums).unwrap(), i.power(3).unwrap());
    }
}
