//! Ideals of a valuation domain as cuts in its value group.
//!
//! The value group is a lexicographic product of rank-one components, each
//! discrete (ℤ) or dense (ℚ). A nonzero fractional ideal corresponds to an
//! upward-closed, bounded-below subset of the group; the representable ones
//! are
//!
//! ```text
//! GE_m(ρ) = { g : prefix_m(g) ≥ ρ }      GT_m(ρ) = { g : prefix_m(g) > ρ }
//! ```
//!
//! with `ρ` a rational prefix of length `m`. The ring `V` is `GE_k(0)` and the
//! nonzero primes are `P_j = GT_j(0)`. [`CutIdeal::contains`] evaluates the
//! membership predicate directly and is the ground truth against which the
//! symbolic product and colon rules are validated (see [`sampling`]).
//!
//! Canonical form: `GT` only at a dense position, discrete coordinates of `ρ`
//! integral. Two cuts denote the same set exactly when their canonical forms
//! are equal, and inclusion is the order of their boundaries.

pub mod closure;
pub mod grid;
pub mod sampling;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{lex_cmp_slices, LexVector, Rational};

pub use closure::{
    check_endomorphism_growth, check_star_axioms, is_divisorial, rr_by_chain, rr_closed_form, rr_hat,
    idempotent_prime_pairs, rr_hat_with, v_closure, LemmaOutcome, StarAxiomReport, StarWitness, DEFAULT_CHAIN_LENGTH,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Component {
    /// ℤ
    Discrete,
    /// ℚ
    Dense,
}

/// Lexicographic product of rank-one components, most significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValueGroup {
    components: Vec<Component>,
}

impl ValueGroup {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidGroup("rank must be at least 1".into()));
        }
        Ok(ValueGroup { components })
    }

    /// Shorthand: `ValueGroup::from_code("ZQ")` is `lex(ℤ, ℚ)`.
    pub fn from_code(code: &str) -> Result<Self> {
        let comps = code
            .chars()
            .map(|c| match c {
                'Z' => Ok(Component::Discrete),
                'Q' => Ok(Component::Dense),
                other => Err(Error::InvalidGroup(format!("unknown component `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_dense_at(&self, i: usize) -> bool {
        self.components[i] == Component::Dense
    }

    /// No nonzero idempotent prime: every component discrete.
    pub fn is_strongly_discrete(&self) -> bool {
        self.components.iter().all(|c| *c == Component::Discrete)
    }

    /// Some nonmaximal prime `P_j` (`j < k`) is idempotent, which happens
    /// exactly when component `j` is dense.
    pub fn has_nonmax_idempotent_prime(&self) -> bool {
        self.components[..self.rank() - 1].contains(&Component::Dense)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(LexVector::zero(self.rank()))
    }

    pub fn element(&self, entries: Vec<Rational>) -> Result<GroupElement> {
        if entries.len() != self.rank() {
            return Err(Error::LengthMismatch {
                left: self.rank(),
                right: entries.len(),
            });
        }
        for (i, r) in entries.iter().enumerate() {
            if !self.is_dense_at(i) && !r.is_integer() {
                return Err(Error::InvalidCut(format!(
                    "coordinate {} of {} must be an integer",
                    i + 1,
                    LexVector::new(entries.clone())
                )));
            }
        }
        Ok(GroupElement(LexVector::new(entries)))
    }

    pub fn element_from_ints(&self, entries: &[i64]) -> Result<GroupElement> {
        self.element(entries.iter().map(|&n| Rational::integer(n)).collect())
    }

    fn check_same(&self, other: &ValueGroup) -> Result<()> {
        if self != other {
            return Err(Error::GroupMismatch {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ValueGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .components
            .iter()
            .map(|c| match c {
                Component::Discrete => "Z",
                Component::Dense => "Q",
            })
            .collect();
        write!(f, "lex({})", names.join(","))
    }
}

/// An element of the value group, i.e. the value of some element of the
/// fraction field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement(LexVector);

impl GroupElement {
    pub fn value(&self) -> &LexVector {
        &self.0
    }

    pub fn entries(&self) -> &[Rational] {
        self.0.entries()
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        GroupElement(crate::exact::vec_add(&self.0, &other.0).expect("same rank"))
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        GroupElement(crate::exact::vec_sub(&self.0, &other.0).expect("same rank"))
    }

    pub fn scale(&self, n: i64) -> GroupElement {
        GroupElement(crate::exact::vec_scale(&self.0, n))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CutKind {
    /// Boundary attained: `prefix ≥ ρ`.
    Ge,
    /// Boundary not attained: `prefix > ρ`.
    Gt,
}

impl CutKind {
    fn flip(self) -> CutKind {
        match self {
            CutKind::Ge => CutKind::Gt,
            CutKind::Gt => CutKind::Ge,
        }
    }
}

/// Prime `P_j = { g : prefix_j(g) > 0 }`; `j = k` is the maximal ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeSpec {
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutIdeal {
    group: ValueGroup,
    kind: CutKind,
    rho: Vec<Rational>,
}

impl CutIdeal {
    /// A cut exactly as given, not canonicalized.
    pub fn raw(group: &ValueGroup, kind: CutKind, rho: Vec<Rational>) -> Result<Self> {
        if rho.is_empty() || rho.len() > group.rank() {
            return Err(Error::InvalidCut(format!(
                "prefix length {} outside 1..={}",
                rho.len(),
                group.rank()
            )));
        }
        Ok(CutIdeal {
            group: group.clone(),
            kind,
            rho,
        })
    }

    /// A cut in canonical form.
    pub fn new(group: &ValueGroup, kind: CutKind, rho: Vec<Rational>) -> Result<Self> {
        Ok(Self::raw(group, kind, rho)?.canonicalize())
    }

    pub fn ge(group: &ValueGroup, rho: &[Rational]) -> Result<Self> {
        Self::new(group, CutKind::Ge, rho.to_vec())
    }

    pub fn gt(group: &ValueGroup, rho: &[Rational]) -> Result<Self> {
        Self::new(group, CutKind::Gt, rho.to_vec())
    }

    /// The ring `V = GE_k(0)`.
    pub fn ring(group: &ValueGroup) -> Self {
        CutIdeal {
            group: group.clone(),
            kind: CutKind::Ge,
            rho: vec![Rational::zero(); group.rank()],
        }
    }

    /// The prime `P_j`, `1 <= j <= k`.
    pub fn prime(group: &ValueGroup, j: usize) -> Result<Self> {
        Self::new(group, CutKind::Gt, vec![Rational::zero(); j])
    }

    pub fn maximal(group: &ValueGroup) -> Self {
        Self::prime(group, group.rank()).expect("valid prefix length")
    }

    /// The principal fractional ideal `aV`, i.e. the cut `a + Γ≥0`.
    pub fn principal(group: &ValueGroup, a: &GroupElement) -> Result<Self> {
        Self::ring(group).shift(a)
    }

    pub fn group(&self) -> &ValueGroup {
        &self.group
    }

    pub fn kind(&self) -> CutKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.rho.len()
    }

    pub fn rho(&self) -> &[Rational] {
        &self.rho
    }

    /// The unique representative of the same subset of the group.
    pub fn canonicalize(&self) -> CutIdeal {
        let group = &self.group;
        let mut kind = self.kind;
        let mut rho = self.rho.clone();
        // A discrete coordinate that cannot be hit makes the boundary
        // unattainable at that level: round up and stop there.
        if let Some(i) = (0..rho.len()).find(|&i| !group.is_dense_at(i) && !rho[i].is_integer()) {
            rho.truncate(i + 1);
            rho[i] = rho[i].ceil();
            kind = CutKind::Ge;
        }
        let last = rho.len() - 1;
        if kind == CutKind::Gt && !group.is_dense_at(last) {
            rho[last] = &rho[last] + &Rational::one();
            kind = CutKind::Ge;
        }
        CutIdeal {
            group: group.clone(),
            kind,
            rho,
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// Membership straight from the definition.
    pub fn contains(&self, g: &GroupElement) -> Result<bool> {
        if g.rank() != self.group.rank() {
            return Err(Error::LengthMismatch {
                left: self.group.rank(),
                right: g.rank(),
            });
        }
        let ord = lex_cmp_slices(&g.entries()[..self.m()], &self.rho);
        Ok(match self.kind {
            CutKind::Ge => ord != Ordering::Less,
            CutKind::Gt => ord == Ordering::Greater,
        })
    }

    /// Order of boundaries: `Less` means `self` has the lower boundary, i.e.
    /// the larger set. Both cuts must be canonical.
    fn boundary_cmp(&self, other: &CutIdeal) -> Ordering {
        let common = self.m().min(other.m());
        let ord = lex_cmp_slices(&self.rho[..common], &other.rho[..common]);
        if ord != Ordering::Equal {
            return ord;
        }
        // A GE boundary is ρ followed by -∞, a GT boundary ρ followed by +∞.
        let infinity = |k: CutKind| match k {
            CutKind::Ge => Ordering::Less,
            CutKind::Gt => Ordering::Greater,
        };
        match self.m().cmp(&other.m()) {
            Ordering::Equal => match (self.kind, other.kind) {
                (a, b) if a == b => Ordering::Equal,
                (CutKind::Ge, _) => Ordering::Less,
                (CutKind::Gt, _) => Ordering::Greater,
            },
            Ordering::Less => infinity(self.kind),
            Ordering::Greater => infinity(other.kind).reverse(),
        }
    }

    /// Inclusion order: `Less` means strictly contained in `other`.
    pub fn inclusion_cmp(&self, other: &CutIdeal) -> Result<Ordering> {
        self.group.check_same(&other.group)?;
        Ok(self.boundary_cmp(other).reverse())
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &CutIdeal) -> Result<bool> {
        Ok(self.inclusion_cmp(other)? != Ordering::Greater)
    }

    /// The larger of two cuts (their union).
    pub fn join(&self, other: &CutIdeal) -> Result<CutIdeal> {
        Ok(if self.is_subset(other)? { other.clone() } else { self.clone() })
    }

    /// The smaller of two cuts (their intersection).
    pub fn meet(&self, other: &CutIdeal) -> Result<CutIdeal> {
        Ok(if self.is_subset(other)? { self.clone() } else { other.clone() })
    }

    pub fn is_ring(&self) -> bool {
        *self == Self::ring(&self.group)
    }

    /// Intersection with `V`. A cut containing 0 contains all of `Γ≥0`, so
    /// the result is either `V` or the cut itself.
    pub fn meet_ring(&self) -> CutIdeal {
        if self.contains(&self.group.zero()).expect("same rank") {
            Self::ring(&self.group)
        } else {
            self.clone()
        }
    }

    /// Whether the cut is an ideal of `V` (contained in `Γ≥0`).
    pub fn is_integral(&self) -> bool {
        self.is_subset(&Self::ring(&self.group)).expect("same group")
    }

    /// `a + S`, the fractional ideal `x·I` with `v(x) = a`.
    pub fn shift(&self, a: &GroupElement) -> Result<CutIdeal> {
        if a.rank() != self.group.rank() {
            return Err(Error::LengthMismatch {
                left: self.group.rank(),
                right: a.rank(),
            });
        }
        let rho = self
            .rho
            .iter()
            .zip(a.entries())
            .map(|(r, x)| r + x)
            .collect();
        Self::new(&self.group, self.kind, rho)
    }

    /// Product ideal: the set of sums `a + b`.
    ///
    /// The shorter prefix binds. At equal length the result is attained only
    /// if both boundaries are; a longer operand always contributes an
    /// attained prefix.
    pub fn multiply(&self, other: &CutIdeal) -> Result<CutIdeal> {
        self.group.check_same(&other.group)?;
        let len = self.m().min(other.m());
        let rho = (0..len).map(|i| &self.rho[i] + &other.rho[i]).collect();
        let kind = match self.m().cmp(&other.m()) {
            Ordering::Less => self.kind,
            Ordering::Greater => other.kind,
            Ordering::Equal if self.kind == CutKind::Ge && other.kind == CutKind::Ge => CutKind::Ge,
            Ordering::Equal => CutKind::Gt,
        };
        Self::new(&self.group, kind, rho)
    }

    pub fn power(&self, n: u32) -> Result<CutIdeal> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let rho = self.rho.iter().map(|r| r.scale(n as i64)).collect();
        Self::new(&self.group, self.kind, rho)
    }

    /// `(self : other) = { x : x + other ⊆ self }`.
    ///
    /// A shorter denominator leaves its tail unconstrained, which forces the
    /// opposite strictness at its length. A shorter numerator keeps its own
    /// kind. At equal length only `GT : GE` stays strict.
    pub fn colon(&self, other: &CutIdeal) -> Result<CutIdeal> {
        self.group.check_same(&other.group)?;
        let len = self.m().min(other.m());
        let rho = (0..len).map(|i| &self.rho[i] - &other.rho[i]).collect();
        let kind = match other.m().cmp(&self.m()) {
            Ordering::Less => other.kind.flip(),
            Ordering::Greater => self.kind,
            Ordering::Equal if self.kind == CutKind::Gt && other.kind == CutKind::Ge => CutKind::Gt,
            Ordering::Equal => CutKind::Ge,
        };
        Self::new(&self.group, kind, rho)
    }

    /// `(V : self)`.
    pub fn inverse(&self) -> CutIdeal {
        Self::ring(&self.group).colon(self).expect("same group")
    }

    /// `I I^{-1}`: either `V` or a prime.
    pub fn trace(&self) -> CutIdeal {
        self.multiply(&self.inverse()).expect("same group")
    }

    pub fn is_prime(&self) -> Option<PrimeSpec> {
        (1..=self.group.rank())
            .find(|&j| Self::prime(&self.group, j).is_ok_and(|p| p == *self))
            .map(|j| PrimeSpec { j })
    }

    pub fn is_idempotent(&self) -> bool {
        self.power(2).is_ok_and(|sq| sq == *self)
    }

    pub fn is_maximal(&self) -> bool {
        self.is_prime() == Some(PrimeSpec { j: self.group.rank() })
    }
}

impl fmt::Display for CutIdeal {
    /// The expression grammar of the command line: `ge m=2 rho=0,1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            CutKind::Ge => "ge",
            CutKind::Gt => "gt",
        };
        let rho: Vec<String> = self.rho.iter().map(|r| r.to_string()).collect();
        write!(f, "{kind} m={} rho={}", self.m(), rho.join(","))
    }
}

/// Sorts cuts by inclusion, smallest first, and drops duplicates.
pub fn sort_cuts(cuts: &mut Vec<CutIdeal>) {
    cuts.sort_by(|a, b| a.boundary_cmp(b).reverse());
    cuts.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn z(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn g(code: &str) -> ValueGroup {
        ValueGroup::from_code(code).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let zz = g("Z");
        let c = CutIdeal::raw(&zz, CutKind::Gt, vec![z(0)]).unwrap().canonicalize();
        assert_eq!(c, CutIdeal::raw(&zz, CutKind::Ge, vec![z(1)]).unwrap());
        let qq = g("Q");
        let raw = CutIdeal::raw(&qq, CutKind::Gt, vec![z(0)]).unwrap();
        assert_eq!(raw.canonicalize(), raw);
        let z2 = g("ZZ");
        let c = CutIdeal::new(&z2, CutKind::Ge, vec![z(1), q(3, 2)]).unwrap();
        assert_eq!(c, CutIdeal::raw(&z2, CutKind::Ge, vec![z(1), z(2)]).unwrap());
        // A fractional first coordinate truncates the prefix.
        let c = CutIdeal::new(&z2, CutKind::Gt, vec![q(1, 2), z(7)]).unwrap();
        assert_eq!(c, CutIdeal::raw(&z2, CutKind::Ge, vec![z(1)]).unwrap());
        assert!(CutIdeal::raw(&z2, CutKind::Ge, vec![]).is_err());
        assert!(CutIdeal::raw(&z2, CutKind::Ge, vec![z(0); 3]).is_err());
    }

    #[test]
    fn membership_examples() {
        let z2 = g("ZZ");
        let c = CutIdeal::ge(&z2, &[z(1)]).unwrap();
        assert!(c.contains(&z2.element_from_ints(&[1, -100]).unwrap()).unwrap());
        let qz = g("QZ");
        let p = CutIdeal::gt(&qz, &[z(0)]).unwrap();
        assert!(!p.contains(&qz.element_from_ints(&[0, 5]).unwrap()).unwrap());
        let c = CutIdeal::ge(&z2, &[z(0), z(1)]).unwrap();
        assert!(c.contains(&z2.element_from_ints(&[0, 1]).unwrap()).unwrap());
        assert!(c.contains(&g("Z").element_from_ints(&[1]).unwrap()).is_err());
    }

    #[test]
    fn product_examples() {
        let qq = g("Q");
        let m = CutIdeal::maximal(&qq);
        assert_eq!(m.multiply(&m).unwrap(), m);
        let z2 = g("ZZ");
        let p = CutIdeal::ge(&z2, &[z(1)]).unwrap();
        assert_eq!(p.multiply(&p).unwrap(), CutIdeal::ge(&z2, &[z(2)]).unwrap());
        assert_eq!(p.power(2).unwrap(), CutIdeal::ge(&z2, &[z(2)]).unwrap());
        let a = CutIdeal::ge(&qq, &[z(1)]).unwrap();
        let b = CutIdeal::gt(&qq, &[z(1)]).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), CutIdeal::gt(&qq, &[z(2)]).unwrap());
        assert!(a.multiply(&CutIdeal::ring(&z2)).is_err());
    }

    #[test]
    fn colon_examples() {
        let qq = g("Q");
        let a = CutIdeal::gt(&qq, &[z(2)]).unwrap();
        let b = CutIdeal::gt(&qq, &[z(1)]).unwrap();
        assert_eq!(a.colon(&b).unwrap(), CutIdeal::ge(&qq, &[z(1)]).unwrap());
        let qz = g("QZ");
        let v = CutIdeal::ring(&qz);
        let p = CutIdeal::prime(&qz, 1).unwrap();
        let vp = CutIdeal::ge(&qz, &[z(0)]).unwrap();
        assert_eq!(v.colon(&p).unwrap(), vp);
        assert_eq!(v.colon(&vp).unwrap(), p);
        for c in [p.clone(), vp.clone(), a.clone()] {
            let ring = CutIdeal::ring(c.group());
            assert_eq!(c.colon(&ring).unwrap(), c);
        }
    }

    #[test]
    fn inverse_and_trace_examples() {
        let qq = g("Q");
        let i = CutIdeal::gt(&qq, &[z(1)]).unwrap();
        assert_eq!(i.inverse(), CutIdeal::ge(&qq, &[z(-1)]).unwrap());
        assert_eq!(i.trace(), CutIdeal::maximal(&qq));
        let zz = g("Z");
        let i = CutIdeal::ge(&zz, &[z(3)]).unwrap();
        assert_eq!(i.inverse(), CutIdeal::ge(&zz, &[z(-3)]).unwrap());
        assert!(i.trace().is_ring());
        let z2 = g("ZZ");
        let p = CutIdeal::ge(&z2, &[z(1)]).unwrap();
        assert_eq!(p.trace(), p);
    }

    #[test]
    fn prime_and_idempotent_examples() {
        let qz = g("QZ");
        let p = CutIdeal::gt(&qz, &[z(0)]).unwrap();
        assert_eq!(p.is_prime(), Some(PrimeSpec { j: 1 }));
        assert!(p.is_idempotent());
        assert!(!p.is_maximal());
        let z2 = g("ZZ");
        let p = CutIdeal::ge(&z2, &[z(1)]).unwrap();
        assert_eq!(p.is_prime(), Some(PrimeSpec { j: 1 }));
        assert!(!p.is_idempotent());
        let qq = g("Q");
        let c = CutIdeal::ge(&qq, &[z(2)]).unwrap();
        assert_eq!(c.is_prime(), None);
        assert!(!c.is_idempotent());
        assert!(CutIdeal::maximal(&qq).is_maximal());
    }

    #[test]
    fn idempotent_primes_by_group() {
        assert!(!g("ZQ").has_nonmax_idempotent_prime());
        assert!(g("QZ").has_nonmax_idempotent_prime());
        assert!(!g("Z").has_nonmax_idempotent_prime());
        assert!(!g("Q").has_nonmax_idempotent_prime());
        for code in ["Z", "Q", "ZZ", "ZQ", "QZ", "QQ", "ZQZ"] {
            let grp = g(code);
            // The maximal ideal is principal exactly when the last component is discrete.
            let m = CutIdeal::maximal(&grp);
            let principal = m.inverse().multiply(&m).unwrap().is_ring();
            assert_eq!(principal, !grp.is_dense_at(grp.rank() - 1), "{grp}");
            assert_eq!(m.is_idempotent(), !principal, "{grp}");
            let any_nonmax = (1..grp.rank())
                .any(|j| CutIdeal::prime(&grp, j).unwrap().is_idempotent());
            assert_eq!(any_nonmax, grp.has_nonmax_idempotent_prime());
        }
    }

    #[test]
    fn inclusion_order() {
        let z2 = g("ZZ");
        let a = CutIdeal::ge(&z2, &[z(1)]).unwrap();
        let b = CutIdeal::ge(&z2, &[z(0), z(5)]).unwrap();
        assert!(a.is_subset(&b).unwrap());
        assert!(!b.is_subset(&a).unwrap());
        let qz = g("QZ");
        let p = CutIdeal::prime(&qz, 1).unwrap();
        let vp = CutIdeal::ge(&qz, &[z(0)]).unwrap();
        let m = CutIdeal::maximal(&qz);
        let v = CutIdeal::ring(&qz);
        let mut cuts = vec![vp.clone(), m.clone(), v.clone(), p.clone(), m.clone()];
        sort_cuts(&mut cuts);
        assert_eq!(cuts, vec![p, m, v, vp]);
    }

    #[test]
    fn display() {
        let qz = g("QZ");
        let c = CutIdeal::gt(&qz, &[q(1, 2)]).unwrap();
        assert_eq!(c.to_string(), "gt m=1 rho=1/2");
        assert_eq!(qz.to_string(), "lex(Q,Z)");
        assert_eq!(CutIdeal::ring(&qz).to_string(), "ge m=2 rho=0,0");
    }
}
