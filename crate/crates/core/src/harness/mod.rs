//! Seeded case generators and the property suite over both universes.
//!
//! Every random case is drawn from its own ChaCha stream, addressed by a
//! domain tag and a position, so a case can be regenerated on its own and
//! adding cases to one check never shifts the cases of another.

mod report;
mod suite;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::valuation::grid::{default_groups, default_rho_values, random_cut};
use crate::valuation::{CutIdeal, ValueGroup};

pub use report::{CheckResult, Envelope, Scope, SuiteReport};
pub use suite::{
    closure_gap_ideals, closure_gap_witness, cut_calculus, high_powers_closed, monotonicity,
    run_suite, star_axioms,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialGenConfig {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_exp: i64,
    /// Probability of forcing a pure power of every variable.
    pub m_primary_bias: Rational,
}

impl Default for MonomialGenConfig {
    fn default() -> Self {
        MonomialGenConfig {
            max_vars: 2,
            max_gens: 5,
            max_exp: 8,
            m_primary_bias: Rational::new(1, 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationGenConfig {
    pub groups: Vec<ValueGroup>,
    pub rho_grid: Vec<Rational>,
    /// Whether random cuts may contain negative values.
    pub fractional: bool,
}

impl Default for ValuationGenConfig {
    fn default() -> Self {
        ValuationGenConfig {
            groups: default_groups(),
            rho_grid: default_rho_values(),
            fractional: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    /// Random cases per sampled check; `0` leaves only the fixed witnesses
    /// and the exhaustive grids.
    pub cases: usize,
    pub monomial: MonomialGenConfig,
    pub valuation: ValuationGenConfig,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 42,
            cases: 200,
            monomial: MonomialGenConfig::default(),
            valuation: ValuationGenConfig::default(),
        }
    }
}

impl GeneratorConfig {
    pub fn with_seed(seed: u64, cases: usize) -> Self {
        GeneratorConfig {
            seed,
            cases,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let m = &self.monomial;
        if m.max_vars == 0 || m.max_gens == 0 || m.max_exp <= 0 {
            return Err(Error::InvalidConfig("monomial bounds must be positive".into()));
        }
        if m.m_primary_bias.is_negative() || m.m_primary_bias > Rational::one() {
            return Err(Error::InvalidConfig("m_primary_bias must lie in [0, 1]".into()));
        }
        if self.valuation.rho_grid.is_empty() {
            return Err(Error::InvalidConfig("rho grid must not be empty".into()));
        }
        Ok(())
    }
}

/// Stream domains, one per kind of generated case.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Domain {
    Monomial = 1,
    Principal = 2,
    MPrimary = 3,
    Cut = 4,
    CutOps = 5,
}

pub(crate) fn stream(seed: u64, domain: Domain, position: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((domain as u64) << 48) ^ position);
    rng
}

fn bernoulli<R: Rng>(rng: &mut R, p: &Rational) -> bool {
    if p.is_zero() {
        return false;
    }
    let (n, d) = (p.numer().clone(), p.denom().clone());
    // Exact for the small denominators used in practice; clamps otherwise.
    match (u32::try_from(n), u32::try_from(d)) {
        (Ok(n), Ok(d)) => rng.gen_ratio(n.min(d), d),
        _ => true,
    }
}

fn draw_ideal<R: Rng>(cfg: &MonomialGenConfig, rng: &mut R, force_m_primary: Option<bool>) -> MonomialIdeal {
    let nvars = rng.gen_range(cfg.max_vars.min(2)..=cfg.max_vars);
    let m_primary = cfg.max_gens >= nvars
        && force_m_primary.unwrap_or_else(|| bernoulli(rng, &cfg.m_primary_bias));
    // Forced m-primary draws always leave room for mixed generators.
    let low = if force_m_primary == Some(true) { (nvars + 1).min(cfg.max_gens) } else { 1 };
    let mut ngens = rng.gen_range(low..=cfg.max_gens);
    if m_primary {
        ngens = ngens.max(nvars);
    }
    if nvars == 2 {
        return draw_staircase(cfg.max_exp, ngens, m_primary, rng);
    }
    let mut gens = Vec::with_capacity(ngens.max(nvars));
    if m_primary {
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = rng.gen_range(1..=cfg.max_exp);
            gens.push(ExponentVector::new(e));
        }
    }
    while gens.len() < ngens.max(if m_primary { nvars } else { 1 }) {
        let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(0..=cfg.max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            gens.push(ExponentVector::new(e));
        }
    }
    MonomialIdeal::minimalize(gens).expect("nonempty, nonnegative generators")
}

/// Two-variable antichain: distinct `x` exponents in increasing order
/// paired with distinct `y` exponents in decreasing order. Independent
/// random generators would mostly divide one another and collapse to one or
/// two generators.
fn draw_staircase<R: Rng>(max_exp: i64, ngens: usize, m_primary: bool, rng: &mut R) -> MonomialIdeal {
    let ngens = ngens.min(max_exp as usize + 1);
    let mut pick = |forced_zero: bool| {
        let mut pool: Vec<i64> = (0..=max_exp).collect();
        let mut chosen = Vec::with_capacity(ngens);
        if forced_zero {
            chosen.push(pool.remove(0));
        }
        while chosen.len() < ngens {
            chosen.push(pool.swap_remove(rng.gen_range(0..pool.len())));
        }
        chosen.sort_unstable();
        chosen
    };
    let xs = pick(m_primary);
    let mut ys = pick(m_primary);
    ys.reverse();
    let mut gens: Vec<ExponentVector> = xs
        .into_iter()
        .zip(ys)
        .map(|(x, y)| ExponentVector::new(vec![x, y]))
        .collect();
    if gens.len() == 1 && gens[0].degree() == 0 {
        gens[0] = ExponentVector::new(vec![1, 0]);
    }
    MonomialIdeal::minimalize(gens).expect("nonempty, nonnegative generators")
}

/// The monomial ideal at `position` of the general stream.
pub fn gen_monomial_ideal(cfg: &GeneratorConfig, position: u64) -> MonomialIdeal {
    let mut rng = stream(cfg.seed, Domain::Monomial, position);
    draw_ideal(&cfg.monomial, &mut rng, None)
}

/// An ideal containing a pure power of every variable and, when `max_gens`
/// allows, at least one mixed generator before minimalization.
pub fn gen_m_primary_ideal(cfg: &GeneratorConfig, position: u64) -> MonomialIdeal {
    let mut rng = stream(cfg.seed, Domain::MPrimary, position);
    let mut mcfg = cfg.monomial.clone();
    mcfg.max_gens = mcfg.max_gens.max(mcfg.max_vars);
    draw_ideal(&mcfg, &mut rng, Some(true))
}

/// A principal ideal `(x^a)` with a nonzero exponent.
pub fn gen_principal_ideal(cfg: &GeneratorConfig, position: u64) -> MonomialIdeal {
    let mut rng = stream(cfg.seed, Domain::Principal, position);
    let mut mcfg = cfg.monomial.clone();
    mcfg.max_gens = 1;
    draw_ideal(&mcfg, &mut rng, Some(false))
}

/// A random canonical cut over `group`; integral unless the config allows
/// fractional cuts.
pub fn gen_cut(cfg: &GeneratorConfig, group: &ValueGroup, position: u64) -> CutIdeal {
    let mut rng = stream(cfg.seed, Domain::Cut, position);
    random_cut(group, &mut rng, !cfg.valuation.fractional)
}
