//! Closure operators on cuts: the Ratliff-Rush closure (closed form and
//! chain), the generalized closure `Î` in the fraction field, and the
//! v-operation, plus a checker for the star-operation axioms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::grid::{cut_grid, default_rho_values, random_cut, random_element};
use super::{CutIdeal, GroupElement, ValueGroup};
use crate::error::{Error, Result};

/// Chain length used by [`rr_hat`] and by default for [`rr_by_chain`].
pub const DEFAULT_CHAIN_LENGTH: u32 = 4;

fn require_integral(i: &CutIdeal) -> Result<()> {
    if !i.is_integral() {
        return Err(Error::InvalidCut(format!(
            "{i} is not an ideal of the ring (it contains negative values)"
        )));
    }
    Ok(())
}

/// `Ĩ` via the trace: `V` for an idempotent prime, `I` when `I` is
/// invertible, and `(IQ : Q) ∩ V` with `Q = I I^{-1}` otherwise.
pub fn rr_closed_form(i: &CutIdeal) -> Result<CutIdeal> {
    require_integral(i)?;
    if i.is_prime().is_some() && i.is_idempotent() {
        return Ok(CutIdeal::ring(i.group()));
    }
    let q = i.trace();
    if q.is_ring() {
        return Ok(i.clone());
    }
    Ok(i.multiply(&q)?.colon(&q)?.meet_ring())
}

/// `Ĩ` as the union of `(I^{n+1} : I^n) ∩ V` for `n <= n_max`.
pub fn rr_by_chain(i: &CutIdeal, n_max: u32) -> Result<CutIdeal> {
    require_integral(i)?;
    chain_join(i, n_max, true)
}

/// `Î`: the union of `(I^{n+1} : I^n)` in the fraction field, without
/// intersecting with `V`.
pub fn rr_hat(i: &CutIdeal) -> CutIdeal {
    rr_hat_with(i, DEFAULT_CHAIN_LENGTH)
}

pub fn rr_hat_with(i: &CutIdeal, n_max: u32) -> CutIdeal {
    chain_join(i, n_max, false).expect("chain length is positive")
}

fn chain_join(i: &CutIdeal, n_max: u32, integral: bool) -> Result<CutIdeal> {
    if n_max == 0 {
        return Err(Error::InvalidConfig("chain length must be at least 1".into()));
    }
    let mut lower = i.clone();
    let mut upper = i.power(2)?;
    let mut acc: Option<CutIdeal> = None;
    for _ in 0..n_max {
        let mut term = upper.colon(&lower)?;
        if integral {
            term = term.meet_ring();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.join(&term)?,
        });
        lower = upper;
        upper = lower.multiply(i)?;
    }
    Ok(acc.expect("at least one term"))
}

/// `I_v = (V : (V : I))`.
pub fn v_closure(i: &CutIdeal) -> CutIdeal {
    i.inverse().inverse()
}

pub fn is_divisorial(i: &CutIdeal) -> bool {
    v_closure(i) == *i
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaOutcome {
    Holds,
    Fails,
    /// `Ĩ = V`, where the statement says nothing.
    Skipped,
}

/// Whether `(I : I) ⊆ (Ĩ : Ĩ)`, for integral `I` with `Ĩ ≠ V`.
pub fn check_endomorphism_growth(i: &CutIdeal) -> Result<LemmaOutcome> {
    let closure = rr_closed_form(i)?;
    if closure.is_ring() {
        return Ok(LemmaOutcome::Skipped);
    }
    let before = i.colon(i)?;
    let after = closure.colon(&closure)?;
    Ok(if before.is_subset(&after)? {
        LemmaOutcome::Holds
    } else {
        LemmaOutcome::Fails
    })
}

/// A concrete violation of one star-operation axiom by `Î`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum StarWitness {
    /// `Î` does not commute with the shift by `a` (or `V̂ ≠ V`).
    Shift { cut: String, shift: String },
    /// `I ⊄ Î`.
    Extensive { cut: String },
    /// `I ⊆ J` but `Î ⊄ Ĵ`.
    Monotone { smaller: String, larger: String },
    /// `Î̂ ≠ Î`.
    Idempotent { cut: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarAxiomReport {
    pub group: String,
    pub e1_pass: bool,
    pub e2_pass: bool,
    pub e3_pass: bool,
    /// Cuts for which `Î` and `I_v` differ.
    pub hat_differs_from_v: usize,
    pub cases: usize,
    pub witnesses: Vec<StarWitness>,
}

impl StarAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.e1_pass && self.e2_pass && self.e3_pass
    }

    /// The first monotonicity witness, as `(smaller, larger)`.
    pub fn monotone_witness(&self) -> Option<(&str, &str)> {
        self.witnesses.iter().find_map(|w| match w {
            StarWitness::Monotone { smaller, larger } => Some((smaller.as_str(), larger.as_str())),
            _ => None,
        })
    }
}

fn record(witnesses: &mut Vec<StarWitness>, w: StarWitness) {
    const KEEP: usize = 8;
    if witnesses.len() < KEEP && !witnesses.contains(&w) {
        witnesses.push(w);
    }
}

/// The nested pairs `P_j ⊆ a + V` with `P_j` an idempotent nonmaximal prime
/// and `a` a positive value outside `P_j`.
pub fn idempotent_prime_pairs(group: &ValueGroup) -> Vec<(CutIdeal, CutIdeal)> {
    let k = group.rank();
    let mut out = Vec::new();
    for j in 1..k {
        let p = CutIdeal::prime(group, j).expect("valid prefix length");
        if !p.is_idempotent() {
            continue;
        }
        // a = (0, .., 0, 1, 0, ..) with the 1 at position j + 1.
        let mut a = vec![0i64; k];
        a[j] = 1;
        let a = group.element_from_ints(&a).expect("integral coordinates");
        out.push((p, CutIdeal::principal(group, &a).expect("same rank")));
    }
    out
}

/// Tests E1 (`V̂ = V`, `(a + I)^ = a + Î`), E2 (`I ⊆ Î`, monotonicity) and
/// E3 (`Î̂ = Î`) for `Î` over `group`, on the fractional grid, on `samples`
/// random cuts and shifts, and on the idempotent-prime construction.
pub fn check_star_axioms(group: &ValueGroup, samples: usize, seed: u64) -> Result<StarAxiomReport> {
    if samples == 0 {
        return Err(Error::InvalidConfig("samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cuts = cut_grid(group, &default_rho_values());
    cuts.extend((0..samples).map(|_| random_cut(group, &mut rng, false)));
    let shifts: Vec<GroupElement> = (0..samples).map(|_| random_element(group, &mut rng, 3)).collect();
    let hats: Vec<CutIdeal> = cuts.iter().map(rr_hat).collect();

    let mut report = StarAxiomReport {
        group: group.to_string(),
        e1_pass: true,
        e2_pass: true,
        e3_pass: true,
        hat_differs_from_v: 0,
        cases: 0,
        witnesses: Vec::new(),
    };
    let ring = CutIdeal::ring(group);
    if rr_hat(&ring) != ring {
        report.e1_pass = false;
        let shift = group.zero().to_string();
        record(&mut report.witnesses, StarWitness::Shift { cut: ring.to_string(), shift });
    }
    for (idx, (cut, hat)) in cuts.iter().zip(&hats).enumerate() {
        report.cases += 1;
        let a = &shifts[idx % shifts.len()];
        if rr_hat(&cut.shift(a)?) != hat.shift(a)? {
            report.e1_pass = false;
            let w = StarWitness::Shift { cut: cut.to_string(), shift: a.to_string() };
            record(&mut report.witnesses, w);
        }
        if !cut.is_subset(hat)? {
            report.e2_pass = false;
            record(&mut report.witnesses, StarWitness::Extensive { cut: cut.to_string() });
        }
        if rr_hat(hat) != *hat {
            report.e3_pass = false;
            record(&mut report.witnesses, StarWitness::Idempotent { cut: cut.to_string() });
        }
        if v_closure(cut) != *hat {
            report.hat_differs_from_v += 1;
        }
    }
    let mut pairs: Vec<(CutIdeal, CutIdeal)> = idempotent_prime_pairs(group);
    for (i, small) in cuts.iter().enumerate() {
        for large in &cuts[i..] {
            if small.is_subset(large)? {
                pairs.push((small.clone(), large.clone()));
            }
        }
    }
    for (small, large) in pairs {
        report.cases += 1;
        if !small.is_subset(&large)? {
            continue;
        }
        if !rr_hat(&small).is_subset(&rr_hat(&large))? {
            report.e2_pass = false;
            let w = StarWitness::Monotone { smaller: small.to_string(), larger: large.to_string() };
            record(&mut report.witnesses, w);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::valuation::grid::{default_groups, integral_grid};

    fn g(code: &str) -> ValueGroup {
        ValueGroup::from_code(code).unwrap()
    }

    fn z(n: i64) -> Rational {
        Rational::integer(n)
    }

    #[test]
    fn closed_form_examples() {
        let qq = g("Q");
        let i = CutIdeal::gt(&qq, &[z(1)]).unwrap();
        assert_eq!(rr_closed_form(&i).unwrap(), CutIdeal::ge(&qq, &[z(1)]).unwrap());
        assert!(rr_closed_form(&CutIdeal::maximal(&qq)).unwrap().is_ring());
        let z2 = g("ZZ");
        let p = CutIdeal::ge(&z2, &[z(1)]).unwrap();
        assert_eq!(rr_closed_form(&p).unwrap(), p);
        assert!(rr_closed_form(&CutIdeal::ge(&qq, &[z(-1)]).unwrap()).is_err());
    }

    #[test]
    fn chain_examples() {
        let qq = g("Q");
        let i = CutIdeal::gt(&qq, &[z(1)]).unwrap();
        assert_eq!(rr_by_chain(&i, 3).unwrap(), CutIdeal::ge(&qq, &[z(1)]).unwrap());
        let zz = g("Z");
        let i = CutIdeal::ge(&zz, &[z(5)]).unwrap();
        assert_eq!(rr_by_chain(&i, 3).unwrap(), i);
        let qz = g("QZ");
        let p = CutIdeal::prime(&qz, 1).unwrap();
        assert!(rr_by_chain(&p, 3).unwrap().is_ring());
        assert!(rr_by_chain(&p, 0).is_err());
    }

    #[test]
    fn hat_examples() {
        let qz = g("QZ");
        let p = CutIdeal::prime(&qz, 1).unwrap();
        let hat = rr_hat(&p);
        assert_eq!(hat, CutIdeal::ge(&qz, &[z(0)]).unwrap());
        let ring = CutIdeal::ring(&qz);
        assert!(ring.is_subset(&hat).unwrap() && hat != ring);
        let qq = g("Q");
        let i = CutIdeal::gt(&qq, &[z(1)]).unwrap();
        assert_eq!(rr_hat(&i), CutIdeal::ge(&qq, &[z(1)]).unwrap());
        let a = qq.element_from_ints(&[3]).unwrap();
        assert_eq!(rr_hat(&i.shift(&a).unwrap()), rr_hat(&i).shift(&a).unwrap());
    }

    #[test]
    fn v_closure_examples() {
        let qq = g("Q");
        let i = CutIdeal::gt(&qq, &[z(1)]).unwrap();
        assert_eq!(v_closure(&i), CutIdeal::ge(&qq, &[z(1)]).unwrap());
        assert!(!is_divisorial(&i));
        let qz = g("QZ");
        let p = CutIdeal::prime(&qz, 1).unwrap();
        assert_eq!(v_closure(&p), p);
        assert!(is_divisorial(&p));
        let zz = g("Z");
        for c in cut_grid(&zz, &default_rho_values()) {
            assert!(is_divisorial(&c), "{c}");
        }
    }

    #[test]
    fn endomorphism_growth_examples() {
        let qq = g("Q");
        let i = CutIdeal::gt(&qq, &[z(1)]).unwrap();
        assert_eq!(check_endomorphism_growth(&i).unwrap(), LemmaOutcome::Holds);
        let z2 = g("ZZ");
        let i = CutIdeal::ge(&z2, &[z(1), z(0)]).unwrap();
        assert_eq!(check_endomorphism_growth(&i).unwrap(), LemmaOutcome::Holds);
        let zq = g("ZQ");
        let i = CutIdeal::gt(&zq, &[z(1), z(0)]).unwrap();
        assert_eq!(check_endomorphism_growth(&i).unwrap(), LemmaOutcome::Holds);
        let qz = g("QZ");
        let p = CutIdeal::prime(&qz, 1).unwrap();
        assert_eq!(check_endomorphism_growth(&p).unwrap(), LemmaOutcome::Skipped);
    }

    #[test]
    fn closed_form_agrees_with_chain_and_hat() {
        for group in default_groups() {
            for i in integral_grid(&group, &default_rho_values()) {
                let closed = rr_closed_form(&i).unwrap();
                assert_eq!(closed, rr_by_chain(&i, DEFAULT_CHAIN_LENGTH).unwrap(), "{group} {i}");
                assert_eq!(closed, rr_hat(&i).meet_ring(), "{group} {i}");
                assert!(i.is_subset(&closed).unwrap());
            }
        }
    }

    #[test]
    fn star_axioms_by_group() {
        let report = check_star_axioms(&g("ZQ"), 50, 1).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.hat_differs_from_v, 0);
        let report = check_star_axioms(&g("Z"), 50, 1).unwrap();
        assert!(report.all_pass());
        let report = check_star_axioms(&g("QZ"), 50, 1).unwrap();
        assert!(!report.e2_pass);
        assert!(report.e1_pass && report.e3_pass);
        assert_eq!(report.monotone_witness(), Some(("gt m=1 rho=0", "ge m=2 rho=0,1")));
        assert!(check_star_axioms(&g("Z"), 0, 1).is_err());
    }
}
