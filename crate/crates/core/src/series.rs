//! Commutator series: lower central, derived, and supernilpotency degrees.
//!
//! Degree conventions. With 1 the full congruence and 0 the identity:
//! the lower central series is t1 = [1,1], t(i+1) = [1, ti]; the derived
//! series is t1 = [1,1], t(i+1) = [ti, ti]; the supernilpotency sequence is
//! tk = the (k+1)-ary commutator [1,...,1]. In every report, degree n means
//! the n-th term (terms[n-1]) is the identity congruence and no earlier term
//! is, so degree 1 always means abelian. For the iterated series a repeated
//! nonzero term is a fixpoint and the report marks it stabilized; the
//! supernilpotency sequence has no such fixpoint argument, so it is probed
//! to the arity budget and left unstabilized when nothing vanishes.

use alloc::vec::Vec;

use crate::commutator::{commutator_with, CubeBudget, CubeError, CubeExpander, SequentialExpander};
use crate::congruence::Congruence;
use crate::semigroup::FiniteSemigroup;

/// Default bound on iterated-series length; congruence chains on the corpus
/// orders stabilize well within it.
pub const DEFAULT_MAX_TERMS: usize = 8;

/// Default largest commutator arity probed for supernilpotency.
pub const DEFAULT_MAX_ARITY: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    Supernilpotent,
}

impl SeriesKind {
    pub fn name(&self) -> &'static str {
        match self {
            SeriesKind::LowerCentral => "lower-central",
            SeriesKind::Derived => "derived",
            SeriesKind::Supernilpotent => "supernilpotent",
        }
    }
}

/// A computed commutator sequence with its stabilization status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    kind: SeriesKind,
    terms: Vec<Congruence>,
    stabilized: bool,
    degree: Option<usize>,
}

impl SeriesReport {
    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    /// Sequence terms, first term first. Iterated series stop at the first
    /// zero or repeated term; the supernilpotency sequence stops at the
    /// first zero or the arity budget.
    pub fn terms(&self) -> &[Congruence] {
        &self.terms
    }

    /// Whether the sequence settled: a term hit zero, or an iterated series
    /// repeated a term. False means the budget ran out first.
    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    /// Least n with terms[n-1] equal to the identity congruence.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }
}

fn run_series(
    s: &FiniteSemigroup,
    kind: SeriesKind,
    max_terms: usize,
    budget: &CubeBudget,
    expander: &mut dyn CubeExpander,
) -> Result<SeriesReport, CubeError> {
    let one = Congruence::one(s);
    let mut terms: Vec<Congruence> = Vec::new();
    let mut cur = commutator_with(s, &[&one, &one], budget, expander)?;
    terms.push(cur.clone());
    let mut stabilized = cur.is_zero();
    let mut degree = if cur.is_zero() { Some(1) } else { None };
    while degree.is_none() && !stabilized && terms.len() < max_terms {
        let next = match kind {
            SeriesKind::LowerCentral => commutator_with(s, &[&one, &cur], budget, expander)?,
            SeriesKind::Derived => commutator_with(s, &[&cur, &cur], budget, expander)?,
            SeriesKind::Supernilpotent => unreachable!("probed by arity, not iterated"),
        };
        if next == cur {
            stabilized = true;
            break;
        }
        terms.push(next.clone());
        cur = next;
        if cur.is_zero() {
            stabilized = true;
            degree = Some(terms.len());
        }
    }
    Ok(SeriesReport {
        kind,
        terms,
        stabilized,
        degree,
    })
}

/// Lower central series up to `DEFAULT_MAX_TERMS` terms.
pub fn lower_central_series(s: &FiniteSemigroup) -> Result<SeriesReport, CubeError> {
    lower_central_series_with(
        s,
        DEFAULT_MAX_TERMS,
        &CubeBudget::default(),
        &mut SequentialExpander,
    )
}

pub fn lower_central_series_with(
    s: &FiniteSemigroup,
    max_terms: usize,
    budget: &CubeBudget,
    expander: &mut dyn CubeExpander,
) -> Result<SeriesReport, CubeError> {
    run_series(s, SeriesKind::LowerCentral, max_terms, budget, expander)
}

/// Derived series under the same conventions.
pub fn derived_series(s: &FiniteSemigroup) -> Result<SeriesReport, CubeError> {
    derived_series_with(
        s,
        DEFAULT_MAX_TERMS,
        &CubeBudget::default(),
        &mut SequentialExpander,
    )
}

pub fn derived_series_with(
    s: &FiniteSemigroup,
    max_terms: usize,
    budget: &CubeBudget,
    expander: &mut dyn CubeExpander,
) -> Result<SeriesReport, CubeError> {
    run_series(s, SeriesKind::Derived, max_terms, budget, expander)
}

/// Whether the binary commutator [1,1] is the identity congruence.
pub fn is_abelian(s: &FiniteSemigroup) -> Result<bool, CubeError> {
    let one = Congruence::one(s);
    Ok(commutator_with(
        s,
        &[&one, &one],
        &CubeBudget::default(),
        &mut SequentialExpander,
    )?
    .is_zero())
}

/// Probes the k-ary full commutators for k = 2..=max_arity; the report's
/// degree is the least d with the (d+1)-ary commutator zero. Dropping an
/// argument can only grow a commutator, so the least probed arity that
/// vanishes is exact.
pub fn supernilpotency_degree(
    s: &FiniteSemigroup,
    max_arity: usize,
) -> Result<SeriesReport, CubeError> {
    supernilpotency_degree_with(s, max_arity, &CubeBudget::default(), &mut SequentialExpander)
}

pub fn supernilpotency_degree_with(
    s: &FiniteSemigroup,
    max_arity: usize,
    budget: &CubeBudget,
    expander: &mut dyn CubeExpander,
) -> Result<SeriesReport, CubeError> {
    let one = Congruence::one(s);
    let mut terms: Vec<Congruence> = Vec::new();
    let mut degree = None;
    for arity in 2..=max_arity.min(budget.max_arity) {
        let args: Vec<&Congruence> = (0..arity).map(|_| &one).collect();
        let value = commutator_with(s, &args, budget, expander)?;
        let zero = value.is_zero();
        terms.push(value);
        if zero {
            degree = Some(arity - 1);
            break;
        }
    }
    Ok(SeriesReport {
        kind: SeriesKind::Supernilpotent,
        terms,
        stabilized: degree.is_some(),
        degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{builtin_group, cyclic_group, left_zero, rectangular_band, rees_matrix, s2};
    use alloc::string::ToString;

    #[test]
    fn abelian_groups_have_degree_one() {
        for s in [
            cyclic_group(4).into_underlying(),
            builtin_group("c2xc2").unwrap().into_underlying(),
        ] {
            assert!(is_abelian(&s).unwrap());
            assert_eq!(lower_central_series(&s).unwrap().degree(), Some(1));
            assert_eq!(derived_series(&s).unwrap().degree(), Some(1));
            assert_eq!(supernilpotency_degree(&s, 3).unwrap().degree(), Some(1));
        }
    }

    #[test]
    fn rectangular_bands_are_abelian() {
        for s in [left_zero(3), rectangular_band(2, 2)] {
            assert!(is_abelian(&s).unwrap());
            assert_eq!(supernilpotency_degree(&s, 3).unwrap().degree(), Some(1));
        }
    }

    #[test]
    fn s3_is_solvable_not_nilpotent() {
        let s3 = builtin_group("s3").unwrap().into_underlying();
        assert!(!is_abelian(&s3).unwrap());
        let lc = lower_central_series(&s3).unwrap();
        assert!(lc.stabilized());
        assert_eq!(lc.degree(), None);
        assert_eq!(lc.terms().last().unwrap().to_string(), "{0,4,5|1,2,3}");
        let der = derived_series(&s3).unwrap();
        assert_eq!(der.degree(), Some(2));
        let sup = supernilpotency_degree(&s3, 3).unwrap();
        assert_eq!(sup.degree(), None);
        assert!(!sup.stabilized());
        assert_eq!(sup.terms().len(), 2);
        assert_eq!(sup.terms()[1].to_string(), "{0,4,5|1,2,3}");
    }

    #[test]
    fn class_two_groups() {
        for name in ["d4", "q8"] {
            let g = builtin_group(name).unwrap().into_underlying();
            let lc = lower_central_series(&g).unwrap();
            assert_eq!(lc.degree(), Some(2), "{name}");
            assert_eq!(lc.terms().len(), 2);
            assert_eq!(derived_series(&g).unwrap().degree(), Some(2), "{name}");
            assert_eq!(
                supernilpotency_degree(&g, 3).unwrap().degree(),
                Some(2),
                "{name}"
            );
        }
    }

    #[test]
    fn s2_is_two_step_in_every_series() {
        let s = rees_matrix(&s2());
        let lc = lower_central_series(&s).unwrap();
        assert_eq!(lc.degree(), Some(2));
        assert_eq!(lc.terms()[0].to_string(), "{0,2|1,3|4,6|5,7}");
        assert!(lc.terms()[1].is_zero());
        assert_eq!(derived_series(&s).unwrap().degree(), Some(2));
        let sup = supernilpotency_degree(&s, 3).unwrap();
        assert_eq!(sup.degree(), Some(2));
        assert_eq!(sup.terms().len(), 2);
        assert_eq!(sup.terms()[0].to_string(), "{0,2|1,3|4,6|5,7}");
    }

    #[test]
    fn truncated_series_reports_unstabilized() {
        let s3 = builtin_group("s3").unwrap().into_underlying();
        let r = lower_central_series_with(
            &s3,
            1,
            &CubeBudget::default(),
            &mut SequentialExpander,
        )
        .unwrap();
        assert!(!r.stabilized());
        assert_eq!(r.degree(), None);
        assert_eq!(r.terms().len(), 1);
    }
}
