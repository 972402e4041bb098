//! The Ratliff-Rush chain `(I^{n+1} : I^n)`, its union, and the stability
//! predicates on monomial ideals.
//!
//! The chain is ascending and eventually constant, but nothing bounds where it
//! stops growing. `rr_closure` therefore reports two things separately:
//! whether `window` consecutive terms agreed (`stabilized_at`), and whether
//! the brute-force oracle, run with its own larger bounds, produced the same
//! ideal (`certified`).

use serde::Serialize;

use super::oracle::rr_oracle_closure;
use super::{endomorphism_ring, FractionalMonomialIdeal, MonomialIdeal};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureConfig {
    pub n_max: u32,
    pub window: u32,
    /// Total-degree bound for the oracle's enumeration; `None` means
    /// `2 * (max generator degree) + 4`.
    pub oracle_degree_bound: Option<i64>,
    pub oracle_n_bound: u32,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig {
            n_max: 16,
            window: 3,
            oracle_degree_bound: None,
            oracle_n_bound: 24,
        }
    }
}

impl ClosureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 || self.window == 0 || self.oracle_n_bound == 0 {
            return Err(Error::InvalidConfig("bounds must be positive".into()));
        }
        if self.window > self.n_max {
            return Err(Error::InvalidConfig(format!(
                "window {} exceeds n_max {}",
                self.window, self.n_max
            )));
        }
        if matches!(self.oracle_degree_bound, Some(d) if d <= 0) {
            return Err(Error::InvalidConfig("degree bound must be positive".into()));
        }
        Ok(())
    }

    pub fn degree_bound_for(&self, ideal: &MonomialIdeal) -> i64 {
        self.oracle_degree_bound
            .unwrap_or(2 * ideal.max_degree() + 4)
    }
}

/// What the brute-force oracle said about a chain union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    /// The chain never showed a full window of equal terms.
    NotRun,
    Agrees,
    Disagrees(MonomialIdeal),
    /// Some closure element sits on the enumeration bound.
    BoundaryTouched,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    /// `terms[i]` is `(I^{i+2} : I^{i+1})`, i.e. the chain term for `n = i + 1`.
    pub terms: Vec<MonomialIdeal>,
    pub stabilized_at: Option<u32>,
    pub certified: bool,
    pub n_max: u32,
    pub window: u32,
    pub oracle: OracleVerdict,
    pub warnings: Vec<String>,
}

impl ChainReport {
    pub fn term(&self, n: u32) -> Option<&MonomialIdeal> {
        self.terms.get(n.checked_sub(1)? as usize)
    }

    /// Union of the computed terms.
    pub fn union(&self) -> MonomialIdeal {
        let mut acc = self.terms[0].clone();
        for t in &self.terms[1..] {
            acc = acc.sum(t).expect("same dimension");
        }
        acc
    }
}

/// `(I^{n+1} : I^n)` for `n >= 1`.
pub fn rr_chain_term(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::InvalidConfig("chain index must be at least 1".into()));
    }
    let low = ideal.power(n)?;
    let high = low.multiply(ideal)?;
    high.colon(&low)
}

fn first_stable_window(terms: &[MonomialIdeal], window: u32) -> Option<u32> {
    let w = window as usize;
    (0..terms.len())
        .find(|&i| i + w <= terms.len() && terms[i..i + w].iter().all(|t| *t == terms[i]))
        .map(|i| i as u32 + 1)
}

/// All chain terms up to `cfg.n_max`, without oracle certification.
pub fn rr_chain(ideal: &MonomialIdeal, cfg: &ClosureConfig) -> Result<ChainReport> {
    cfg.validate()?;
    let mut terms = Vec::with_capacity(cfg.n_max as usize);
    let mut low = ideal.clone();
    for _ in 0..cfg.n_max {
        let high = low.multiply(ideal)?;
        terms.push(high.colon(&low)?);
        low = high;
    }
    let stabilized_at = first_stable_window(&terms, cfg.window);
    let mut warnings = Vec::new();
    if stabilized_at.is_none() {
        warnings.push(format!(
            "chain did not show {} equal consecutive terms within n_max = {}",
            cfg.window, cfg.n_max
        ));
    }
    Ok(ChainReport {
        terms,
        stabilized_at,
        certified: false,
        n_max: cfg.n_max,
        window: cfg.window,
        oracle: OracleVerdict::NotRun,
        warnings,
    })
}

/// The Ratliff-Rush closure as the union of the chain up to `cfg.n_max`.
///
/// The result always contains `ideal`. It is certified only when the chain
/// stabilized and the oracle agrees; otherwise the report carries warnings.
pub fn rr_closure(
    ideal: &MonomialIdeal,
    cfg: &ClosureConfig,
) -> Result<(MonomialIdeal, ChainReport)> {
    let mut report = rr_chain(ideal, cfg)?;
    let closure = report.union();
    if report.stabilized_at.is_some() {
        let oracle = rr_oracle_closure(ideal, cfg)?;
        if oracle.boundary_touched {
            report.oracle = OracleVerdict::BoundaryTouched;
            report.warnings.push(format!(
                "oracle hit its degree bound {}; closure left uncertified",
                oracle.degree_bound
            ));
        } else if oracle.closure != closure {
            report.warnings.push(format!(
                "oracle disagrees with the chain: oracle gives {}",
                oracle.closure
            ));
            report.oracle = OracleVerdict::Disagrees(oracle.closure);
        } else {
            report.oracle = OracleVerdict::Agrees;
            report.certified = true;
        }
    }
    Ok((closure, report))
}

/// `I` is invertible in its endomorphism ring `T = (I : I)`, tested as
/// `I (T : I) = T`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    let t = endomorphism_ring(ideal);
    let i = FractionalMonomialIdeal::from_ideal(ideal);
    let inverse = t.frac_colon(&i).expect("same dimension");
    i.frac_multiply(&inverse).expect("same dimension").frac_equals(&t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LStability {
    pub l_stable: bool,
    /// The verdict rests only on the checked range `n <= checked_up_to`.
    pub capped: bool,
    pub checked_up_to: u32,
}

/// Whether `(I^n : I^n) = (I : I)` for every `n <= cfg.n_max`. Stable ideals
/// are L-stable outright; any other positive verdict is flagged as capped.
pub fn is_l_stable(ideal: &MonomialIdeal, cfg: &ClosureConfig) -> Result<LStability> {
    cfg.validate()?;
    let t = endomorphism_ring(ideal);
    let mut power = ideal.clone();
    for n in 1..=cfg.n_max {
        if n > 1 {
            power = power.multiply(ideal)?;
        }
        let p = FractionalMonomialIdeal::from_ideal(&power);
        if !p.frac_colon(&p)?.frac_equals(&t) {
            return Ok(LStability {
                l_stable: false,
                capped: false,
                checked_up_to: n,
            });
        }
    }
    Ok(LStability {
        l_stable: true,
        capped: !is_stable(ideal),
        checked_up_to: cfg.n_max,
    })
}

/// Smallest `n <= cfg.n_max` with `I J^n = J^{n+1}`, for `I ⊆ J`.
pub fn is_reduction_of(
    ideal: &MonomialIdeal,
    over: &MonomialIdeal,
    cfg: &ClosureConfig,
) -> Result<Option<u32>> {
    cfg.validate()?;
    if !ideal.is_subset(over)? {
        return Err(Error::NotContained);
    }
    let mut power = over.clone();
    for n in 1..=cfg.n_max {
        let next = power.multiply(over)?;
        if ideal.multiply(&power)? == next {
            return Ok(Some(n));
        }
        power = next;
    }
    Ok(None)
}
