//! Monomial ideals and fractional monomial modules over an implicit field.
//!
//! A monomial ideal is stored as its minimal generators: an antichain of
//! exponent vectors under the componentwise order, kept in a fixed graded
//! order so that equal ideals are syntactically equal. Coefficients are never
//! represented. Two-variable ideals take staircase fast paths; the generic
//! routines stay available as reference implementations.

pub mod closure;
pub mod newton;
pub mod oracle;
mod staircase;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub use closure::{
    is_l_stable, is_reduction_of, is_stable, rr_chain, rr_chain_term, rr_closure, ChainReport,
    ClosureConfig, LStability, OracleVerdict,
};
pub use newton::integral_closure_2v;
pub use oracle::{rr_oracle_closure, rr_oracle_membership, OracleOutcome};

/// Exponent of a (Laurent) monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(exponents: Vec<i64>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Componentwise `self <= other`, i.e. the monomial `self` divides `other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn max(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn min(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn scale(&self, k: i64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    fn clamp_nonnegative(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&a| a.max(0)).collect())
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl From<&[i64]> for ExponentVector {
    fn from(v: &[i64]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(v: [i64; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

/// Graded order: total degree ascending, ties broken lexicographically with
/// the larger vector first (so `x^2` precedes `x*y` precedes `y^2`).
pub fn graded_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0))
}

/// A nonzero monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// The minimal generating set of the ideal generated by `gens`.
    pub fn minimalize(gens: Vec<ExponentVector>) -> Result<Self> {
        let nvars = gens.first().ok_or(Error::EmptyGenerators)?.len();
        for g in &gens {
            if g.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.len(),
                });
            }
            if let Some(&value) = g.0.iter().find(|&&e| e < 0) {
                return Err(Error::NegativeExponent { value });
            }
        }
        Ok(Self::from_minimal(nvars, minimal(nvars, gens)))
    }

    /// Convenience constructor from exponent rows.
    pub fn from_exponents(rows: &[&[i64]]) -> Result<Self> {
        Self::minimalize(rows.iter().map(|r| ExponentVector::from(*r)).collect())
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![ExponentVector::zeros(nvars)],
        }
    }

    pub fn principal(m: ExponentVector) -> Result<Self> {
        Self::minimalize(vec![m])
    }

    /// Wraps an already minimal, non-negative antichain and fixes its order.
    fn from_minimal(nvars: usize, mut gens: Vec<ExponentVector>) -> Self {
        debug_assert!(!gens.is_empty());
        gens.sort_by(graded_cmp);
        MonomialIdeal { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].degree() == 0
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn max_degree(&self) -> i64 {
        self.gens.iter().map(ExponentVector::degree).max().unwrap_or(0)
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        self.check_dim(m.len())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        other.check_dim(self.nvars)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.nvars)?;
        Ok(Self::from_minimal(
            self.nvars,
            product(self.nvars, &self.gens, &other.gens),
        ))
    }

    /// `self^k` for `k >= 1`, by square-and-multiply.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut result: Option<MonomialIdeal> = None;
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.multiply(&base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.multiply(&base)?;
        }
        Ok(result.expect("k >= 1"))
    }

    /// The ideal sum `self + other`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.nvars)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_minimal(self.nvars, minimal(self.nvars, all)))
    }

    /// `(self : other)` taken inside the polynomial ring.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.nvars)?;
        Ok(Self::from_minimal(
            self.nvars,
            ring_colon(self.nvars, &self.gens, &other.gens),
        ))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.nvars)?;
        Ok(Self::from_minimal(
            self.nvars,
            intersect_sets(self.nvars, &self.gens, &other.gens),
        ))
    }

    /// Formats the generators with the given variable names, in the
    /// expression grammar accepted by the command line (`x^2*y, y^3`).
    pub fn display_with(&self, vars: &[String]) -> String {
        self.gens
            .iter()
            .map(|g| format_monomial(g, vars))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Default variable names: `x, y, z` for up to three variables, otherwise
/// `x1, ..., xn`.
pub fn default_variables(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn format_monomial(m: &ExponentVector, vars: &[String]) -> String {
    let factors: Vec<String> = m
        .0
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e != 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_variables(self.nvars)))
    }
}

/// The fractional module `x^{-d} · I` with `d >= 0` and `I` integral.
///
/// Canonical form: for every variable, either the denominator exponent is 0
/// or some numerator generator has exponent 0 in that variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FractionalMonomialIdeal {
    denominator: ExponentVector,
    numerator: MonomialIdeal,
}

impl FractionalMonomialIdeal {
    pub fn new(denominator: ExponentVector, numerator: MonomialIdeal) -> Result<Self> {
        numerator.check_dim(denominator.len())?;
        if let Some(&value) = denominator.0.iter().find(|&&e| e < 0) {
            return Err(Error::NegativeExponent { value });
        }
        let laurent: Vec<ExponentVector> =
            numerator.gens.iter().map(|g| g.sub(&denominator)).collect();
        Ok(Self::from_laurent(numerator.nvars, laurent))
    }

    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        FractionalMonomialIdeal {
            denominator: ExponentVector::zeros(ideal.nvars),
            numerator: ideal.clone(),
        }
    }

    /// The ring itself.
    pub fn unit(nvars: usize) -> Self {
        Self::from_ideal(&MonomialIdeal::unit(nvars))
    }

    /// Builds the canonical form from a minimal set of Laurent generators.
    fn from_laurent(nvars: usize, laurent: Vec<ExponentVector>) -> Self {
        let low = laurent
            .iter()
            .skip(1)
            .fold(laurent[0].clone(), |acc, g| acc.min(g));
        let denominator = ExponentVector(low.0.iter().map(|&e| (-e).max(0)).collect());
        let gens = laurent.iter().map(|g| g.add(&denominator)).collect();
        FractionalMonomialIdeal {
            denominator,
            numerator: MonomialIdeal::from_minimal(nvars, gens),
        }
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars
    }

    pub fn denominator(&self) -> &ExponentVector {
        &self.denominator
    }

    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    /// Minimal generators as Laurent exponents.
    pub fn laurent_generators(&self) -> Vec<ExponentVector> {
        self.numerator
            .gens
            .iter()
            .map(|g| g.sub(&self.denominator))
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.denominator.degree() == 0 && self.numerator.is_unit()
    }

    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        self.numerator.check_dim(m.len())?;
        Ok(self.numerator.contains_unchecked(&m.add(&self.denominator)))
    }

    pub fn is_subset(&self, other: &FractionalMonomialIdeal) -> Result<bool> {
        other.numerator.check_dim(self.nvars())?;
        Ok(self
            .laurent_generators()
            .iter()
            .all(|g| other.numerator.contains_unchecked(&g.add(&other.denominator))))
    }

    pub fn frac_multiply(&self, other: &FractionalMonomialIdeal) -> Result<Self> {
        let numerator = self.numerator.multiply(&other.numerator)?;
        Self::new(self.denominator.add(&other.denominator), numerator)
    }

    /// `(self : other) = { m : m + other ⊆ self }` in the Laurent ring.
    ///
    /// With `self = x^{-a} I` and `other = x^{-b} J` this is
    /// `x^{b-a} (I :_K J)`, and `(I :_K J) = x^{-c} (x^c I : J)` where `c` is
    /// the componentwise minimum of the generators of `J`: every Laurent
    /// solution is bounded below by `-c`, so the ring colon sees all of them.
    pub fn frac_colon(&self, other: &FractionalMonomialIdeal) -> Result<Self> {
        let n = self.nvars();
        self.numerator.check_dim(other.nvars())?;
        let j = &other.numerator;
        let c = j.gens.iter().skip(1).fold(j.gens[0].clone(), |acc, g| acc.min(g));
        let shifted: Vec<ExponentVector> = self.numerator.gens.iter().map(|g| g.add(&c)).collect();
        let integral = ring_colon(n, &shifted, &j.gens);
        let shift = other.denominator.sub(&self.denominator).sub(&c);
        let laurent = integral.iter().map(|g| g.add(&shift)).collect();
        Ok(Self::from_laurent(n, laurent))
    }

    pub fn frac_equals(&self, other: &FractionalMonomialIdeal) -> bool {
        self == other
    }
}

impl fmt::Display for FractionalMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = default_variables(self.nvars());
        if self.denominator.degree() == 0 {
            write!(f, "{}", self.numerator.display_with(&vars))
        } else {
            write!(
                f,
                "({})^-1 * ({})",
                format_monomial(&self.denominator, &vars),
                self.numerator.display_with(&vars)
            )
        }
    }
}

/// `(I : I)` as a fractional module.
pub fn endomorphism_ring(ideal: &MonomialIdeal) -> FractionalMonomialIdeal {
    let f = FractionalMonomialIdeal::from_ideal(ideal);
    f.frac_colon(&f).expect("same dimension")
}

// ---- generator-set algorithms (Laurent exponents allowed) ----

fn minimal(nvars: usize, gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    if nvars == 2 {
        staircase::minimal(gens)
    } else {
        minimal_generic(gens)
    }
}

/// Reference minimalization: scan by degree, keep what nothing kept divides.
pub(crate) fn minimal_generic(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by(graded_cmp);
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn product(nvars: usize, a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    let sums = a
        .iter()
        .flat_map(|g| b.iter().map(move |h| g.add(h)))
        .collect();
    minimal(nvars, sums)
}

fn intersect_sets(nvars: usize, a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    if nvars == 2 {
        staircase::intersect(a, b)
    } else {
        intersect_generic(a, b)
    }
}

pub(crate) fn intersect_generic(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    minimal_generic(
        a.iter()
            .flat_map(|g| b.iter().map(move |h| g.max(h)))
            .collect(),
    )
}

fn ring_colon(nvars: usize, a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    if nvars == 2 {
        staircase::ring_colon(a, b)
    } else {
        ring_colon_generic(a, b)
    }
}

/// `(A : B) = ∩_{g ∈ B} (A : g)` with `(A : g)` generated by `max(h - g, 0)`.
pub(crate) fn ring_colon_generic(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    let by_gen = |g: &ExponentVector| {
        minimal_generic(a.iter().map(|h| h.sub(g).clamp_nonnegative()).collect())
    };
    let mut acc = by_gen(&b[0]);
    for g in &b[1..] {
        acc = intersect_generic(&acc, &by_gen(g));
    }
    acc
}
