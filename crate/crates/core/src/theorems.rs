//! Executable checks of the structure theory tying commutator degrees to
//! decompositions: every check evaluates one implication or equivalence on
//! one algebra using only the library's own predicates, and fails only when
//! those predicates contradict each other.
//!
//! Budget-limited probes are never converted into claims: a supernilpotency
//! probe that exhausts its arity budget leaves the compared statement
//! skipped (or passes only over the degree range both sides decide).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::commutator::{commutator_with, CubeBudget, SequentialExpander};
use crate::congruence::{all_congruences, Congruence, CongruenceLattice, DEFAULT_LATTICE_CAP};
use crate::construct::GroupSpec;
use crate::semigroup::FiniteSemigroup;
use crate::series::{
    derived_series_with, lower_central_series_with, supernilpotency_degree_with, SeriesReport,
    DEFAULT_MAX_ARITY, DEFAULT_MAX_TERMS,
};
use crate::structure::{
    group_nilpotency_class, group_solvability_degree, inverse_supernilpotent_decomposition,
    orthodox_cs_decomposition, Decomposition, StructureError,
};

/// Budgets for one suite run. Checks that would exceed a budget are reported
/// as skipped, never as passed.
#[derive(Clone, Copy, Debug)]
pub struct SuiteBudget {
    /// Largest commutator arity probed for supernilpotency.
    pub max_arity: usize,
    /// Iterated-series length bound.
    pub max_terms: usize,
    /// Cube-engine budgets.
    pub cube: CubeBudget,
    /// Congruence lattice size cap.
    pub lattice_cap: usize,
    /// Cap on congruence tuples quantified per lattice check.
    pub tuple_cap: usize,
    /// Orders above this probe supernilpotency only at arity 2.
    pub arity3_order_cap: usize,
}

impl Default for SuiteBudget {
    fn default() -> Self {
        SuiteBudget {
            max_arity: DEFAULT_MAX_ARITY,
            max_terms: DEFAULT_MAX_TERMS,
            cube: CubeBudget::default(),
            lattice_cap: DEFAULT_LATTICE_CAP,
            tuple_cap: 4096,
            arity3_order_cap: 24,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    /// The premise is definitely false for this algebra.
    Vacuous,
    /// A budget stopped the check from being decided.
    Skipped,
    Fail,
}

impl CheckStatus {
    pub fn name(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Vacuous => "vacuous",
            CheckStatus::Skipped => "skipped",
            CheckStatus::Fail => "fail",
        }
    }
}

/// One check on one algebra.
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub algebra: String,
    pub check: &'static str,
    pub status: CheckStatus,
    /// Counterexample payload, skip reason, or verified-range note.
    pub detail: Option<String>,
}

/// All checks of a run, sorted by (algebra, check).
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    checks: Vec<TheoremCheck>,
}

impl SuiteReport {
    pub fn checks(&self) -> &[TheoremCheck] {
        &self.checks
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> Vec<&TheoremCheck> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }

    /// True when no check contradicts its statement.
    pub fn sound(&self) -> bool {
        self.count(CheckStatus::Fail) == 0
    }
}

/// What a (possibly budgeted) computation decided about "has degree n".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum DegreeInfo {
    /// Exactly this degree (and no other).
    Known(usize),
    /// No degree at or below the cap; usize::MAX encodes "no degree at all".
    NeverBelow(usize),
    /// The computation could not run within budget.
    Undecided,
}

impl DegreeInfo {
    fn from_series(report: Option<&SeriesReport>, probe_cap: Option<usize>) -> Self {
        let Some(r) = report else {
            return DegreeInfo::Undecided;
        };
        if let Some(d) = r.degree() {
            return DegreeInfo::Known(d);
        }
        match probe_cap {
            // iterated series: a repeated term settles every degree
            None if r.stabilized() => DegreeInfo::NeverBelow(usize::MAX),
            None => DegreeInfo::NeverBelow(r.terms().len()),
            Some(cap) => DegreeInfo::NeverBelow(cap),
        }
    }

    fn known(&self) -> Option<usize> {
        match self {
            DegreeInfo::Known(d) => Some(*d),
            _ => None,
        }
    }

    /// Premise "has some degree" is definitely false.
    fn definitely_none(&self) -> bool {
        matches!(self, DegreeInfo::NeverBelow(usize::MAX))
    }
}

/// Compares two degree statements claimed equivalent, degree by degree over
/// the range both sides decide.
fn compare_equivalence(lhs: DegreeInfo, rhs: DegreeInfo) -> (CheckStatus, Option<String>) {
    match (lhs, rhs) {
        (DegreeInfo::Undecided, _) | (_, DegreeInfo::Undecided) => (
            CheckStatus::Skipped,
            Some("a side of the equivalence exceeded its budget".into()),
        ),
        (DegreeInfo::Known(a), DegreeInfo::Known(b)) => {
            if a == b {
                (CheckStatus::Pass, None)
            } else {
                (
                    CheckStatus::Fail,
                    Some(format!("degrees disagree: {a} vs {b}")),
                )
            }
        }
        (DegreeInfo::Known(a), DegreeInfo::NeverBelow(m)) => {
            if a <= m {
                (
                    CheckStatus::Fail,
                    Some(format!("degree {a} on one side, none at or below {m} on the other")),
                )
            } else {
                (
                    CheckStatus::Skipped,
                    Some(format!("degree {a} lies beyond the compared bound {m}")),
                )
            }
        }
        (DegreeInfo::NeverBelow(m), DegreeInfo::Known(b)) => {
            if b <= m {
                (
                    CheckStatus::Fail,
                    Some(format!("degree {b} on one side, none at or below {m} on the other")),
                )
            } else {
                (
                    CheckStatus::Skipped,
                    Some(format!("degree {b} lies beyond the compared bound {m}")),
                )
            }
        }
        (DegreeInfo::NeverBelow(m1), DegreeInfo::NeverBelow(m2)) => {
            let m = m1.min(m2);
            if m == usize::MAX {
                (CheckStatus::Pass, None)
            } else {
                (
                    CheckStatus::Pass,
                    Some(format!("both sides verified absent for degrees <= {m}")),
                )
            }
        }
    }
}

struct Profile<'a> {
    name: &'a str,
    s: &'a FiniteSemigroup,
    regular: bool,
    orthodox: bool,
    inverse: bool,
    completely_simple: bool,
    antichain: bool,
    lattice: Option<CongruenceLattice>,
    lc: Option<SeriesReport>,
    derived: Option<SeriesReport>,
    sup: Option<SeriesReport>,
    sup_cap: usize,
    group: Option<GroupSpec>,
    /// Present iff orthodox and completely simple.
    decomposition: Option<Result<Decomposition, StructureError>>,
}

impl<'a> Profile<'a> {
    fn build(name: &'a str, s: &'a FiniteSemigroup, budget: &SuiteBudget) -> Self {
        let mut exp = SequentialExpander;
        let regular = s.is_regular();
        let orthodox = s.is_orthodox();
        let completely_simple = s.is_completely_simple();
        let sup_arity = if s.order() > budget.arity3_order_cap {
            2
        } else {
            budget.max_arity
        }
        .min(budget.cube.max_arity);
        let lc = lower_central_series_with(s, budget.max_terms, &budget.cube, &mut exp).ok();
        let derived = derived_series_with(s, budget.max_terms, &budget.cube, &mut exp).ok();
        let sup = supernilpotency_degree_with(s, sup_arity, &budget.cube, &mut exp).ok();
        let decomposition = if orthodox && completely_simple {
            Some(orthodox_cs_decomposition(s))
        } else {
            None
        };
        Profile {
            name,
            s,
            regular,
            orthodox,
            inverse: s.is_inverse_semigroup(),
            completely_simple,
            antichain: s.is_idempotent_antichain(),
            lattice: all_congruences(s, budget.lattice_cap).ok(),
            lc,
            derived,
            sup,
            sup_cap: sup_arity.saturating_sub(1),
            group: GroupSpec::new(s.clone()).ok(),
            decomposition,
        }
    }

    fn lc_info(&self) -> DegreeInfo {
        DegreeInfo::from_series(self.lc.as_ref(), None)
    }

    fn derived_info(&self) -> DegreeInfo {
        DegreeInfo::from_series(self.derived.as_ref(), None)
    }

    fn sup_info(&self) -> DegreeInfo {
        DegreeInfo::from_series(self.sup.as_ref(), Some(self.sup_cap))
    }

    /// Degree claim "isomorphic to a decomposition whose group factor has
    /// this degree", with the group degree measured by `group_degree`.
    fn decomposition_info(
        &self,
        group_degree: impl Fn(&GroupSpec) -> Option<usize>,
    ) -> Result<DegreeInfo, String> {
        match &self.decomposition {
            None => Ok(DegreeInfo::NeverBelow(usize::MAX)),
            Some(Err(e)) => Err(format!("decomposition failed: {e}")),
            Some(Ok(d)) => Ok(match group_degree(d.group()) {
                Some(c) => DegreeInfo::Known(c),
                None => DegreeInfo::NeverBelow(usize::MAX),
            }),
        }
    }
}

struct Run {
    checks: Vec<TheoremCheck>,
}

impl Run {
    fn push(&mut self, p: &Profile<'_>, check: &'static str, status: CheckStatus, detail: Option<String>) {
        self.checks.push(TheoremCheck {
            algebra: p.name.into(),
            check,
            status,
            detail,
        });
    }

    /// Comparable distinct idempotent pairs (e, f) with e under f.
    fn comparable_idempotents(s: &FiniteSemigroup) -> Vec<(usize, usize)> {
        let es = s.idempotents();
        let mut out = Vec::new();
        for &e in &es {
            for &f in &es {
                if e != f && s.natural_leq(e, f).unwrap_or(false) {
                    out.push((e, f));
                }
            }
        }
        out
    }

    fn lattice_checks(&mut self, p: &Profile<'_>, budget: &SuiteBudget) {
        let binary_ids = [
            "binary-commutator-below-meet",
            "commutator-monotone-in-arguments",
            "comparable-idempotents-binary-commutator",
        ];
        let ternary_ids = [
            "ternary-below-binary-commutator",
            "comparable-idempotents-ternary-commutator",
        ];
        let Some(lat) = &p.lattice else {
            for id in binary_ids.iter().chain(&ternary_ids) {
                self.push(p, id, CheckStatus::Skipped, Some("congruence lattice over cap".into()));
            }
            return;
        };
        let members = lat.members();
        let l = members.len();
        let comparable = Self::comparable_idempotents(p.s);
        let mut exp = SequentialExpander;

        if l * l > budget.tuple_cap {
            for id in &binary_ids {
                self.push(p, id, CheckStatus::Skipped, Some("pair budget exceeded".into()));
            }
        } else {
            // one matrix of binary commutators feeds all three binary checks
            let mut matrix: Vec<Vec<Congruence>> = Vec::with_capacity(l);
            let mut engine_err = None;
            'outer: for a in members {
                let mut row = Vec::with_capacity(l);
                for b in members {
                    match commutator_with(p.s, &[a, b], &budget.cube, &mut exp) {
                        Ok(c) => row.push(c),
                        Err(e) => {
                            engine_err = Some(format!("{e}"));
                            break 'outer;
                        }
                    }
                }
                matrix.push(row);
            }
            if let Some(msg) = engine_err {
                for id in &binary_ids {
                    self.push(p, id, CheckStatus::Skipped, Some(msg.clone()));
                }
            } else {
                let mut below_meet = None;
                let mut monotone = None;
                let mut idem = None;
                for i in 0..l {
                    for j in 0..l {
                        if !matrix[i][j].leq(&members[i].meet(&members[j])) {
                            below_meet.get_or_insert(format!(
                                "[{}, {}] exceeds the meet",
                                members[i].partition(),
                                members[j].partition()
                            ));
                        }
                        for (e, f) in &comparable {
                            if members[i].same(*e, *f)
                                && members[j].same(*e, *f)
                                && !matrix[i][j].same(*e, *f)
                            {
                                idem.get_or_insert(format!(
                                    "idempotents {e} <= {f} not related by [{}, {}]",
                                    members[i].partition(),
                                    members[j].partition()
                                ));
                            }
                        }
                        for a in 0..l {
                            for b in 0..l {
                                if lat.leq(a, i)
                                    && lat.leq(b, j)
                                    && !matrix[a][b].leq(&matrix[i][j])
                                {
                                    monotone.get_or_insert(format!(
                                        "[{}, {}] not below [{}, {}]",
                                        members[a].partition(),
                                        members[b].partition(),
                                        members[i].partition(),
                                        members[j].partition()
                                    ));
                                }
                            }
                        }
                    }
                }
                let verdicts = [
                    (binary_ids[0], below_meet, false),
                    (binary_ids[1], monotone, false),
                    (binary_ids[2], idem, comparable.is_empty()),
                ];
                for (id, violation, vacuous) in verdicts {
                    let (status, detail) = match violation {
                        Some(v) => (CheckStatus::Fail, Some(v)),
                        None if vacuous => (CheckStatus::Vacuous, None),
                        None => (CheckStatus::Pass, None),
                    };
                    self.push(p, id, status, detail);
                }
            }
        }

        if p.s.order() > budget.arity3_order_cap {
            for id in &ternary_ids {
                self.push(p, id, CheckStatus::Skipped, Some("order above ternary cap".into()));
            }
        } else if l * l * l > budget.tuple_cap {
            for id in &ternary_ids {
                self.push(p, id, CheckStatus::Skipped, Some("triple budget exceeded".into()));
            }
        } else {
            let mut hc3_violation = None;
            let mut idem_violation = None;
            let mut engine_err = None;
            'sweep: for i in 0..l {
                for j in 0..l {
                    for k in 0..l {
                        let t = match commutator_with(
                            p.s,
                            &[&members[i], &members[j], &members[k]],
                            &budget.cube,
                            &mut exp,
                        ) {
                            Ok(t) => t,
                            Err(e) => {
                                engine_err = Some(format!("{e}"));
                                break 'sweep;
                            }
                        };
                        let binary = match commutator_with(
                            p.s,
                            &[&members[j], &members[k]],
                            &budget.cube,
                            &mut exp,
                        ) {
                            Ok(b) => b,
                            Err(e) => {
                                engine_err = Some(format!("{e}"));
                                break 'sweep;
                            }
                        };
                        if !t.leq(&binary) {
                            hc3_violation.get_or_insert(format!(
                                "ternary commutator of ({}, {}, {}) exceeds the binary tail",
                                members[i].partition(),
                                members[j].partition(),
                                members[k].partition()
                            ));
                        }
                        for (e, f) in &comparable {
                            if members[i].same(*e, *f)
                                && members[j].same(*e, *f)
                                && members[k].same(*e, *f)
                                && !t.same(*e, *f)
                            {
                                idem_violation.get_or_insert(format!(
                                    "idempotents {e} <= {f} not related by the ternary commutator"
                                ));
                            }
                        }
                    }
                }
            }
            if let Some(msg) = engine_err {
                for id in &ternary_ids {
                    self.push(p, id, CheckStatus::Skipped, Some(msg.clone()));
                }
            } else {
                let (s1, d1) = match hc3_violation {
                    Some(v) => (CheckStatus::Fail, Some(v)),
                    None => (CheckStatus::Pass, None),
                };
                self.push(p, ternary_ids[0], s1, d1);
                let (s2, d2) = match idem_violation {
                    Some(v) => (CheckStatus::Fail, Some(v)),
                    None if comparable.is_empty() => (CheckStatus::Vacuous, None),
                    None => (CheckStatus::Pass, None),
                };
                self.push(p, ternary_ids[1], s2, d2);
            }
        }
    }

    /// If any series reaches a degree, the idempotent order is an antichain.
    fn antichain_check(&mut self, p: &Profile<'_>) {
        let infos = [p.lc_info(), p.derived_info(), p.sup_info()];
        let id = "degrees-imply-idempotent-antichain";
        if infos.iter().any(|i| i.known().is_some()) {
            if p.antichain {
                self.push(p, id, CheckStatus::Pass, None);
            } else {
                let pair = Self::comparable_idempotents(p.s)
                    .first()
                    .map(|(e, f)| format!("comparable idempotents {e} <= {f}"))
                    .unwrap_or_else(|| "comparable idempotents".into());
                self.push(p, id, CheckStatus::Fail, Some(pair));
            }
        } else if infos.iter().all(|i| i.definitely_none()) {
            self.push(p, id, CheckStatus::Vacuous, None);
        } else {
            self.push(
                p,
                id,
                CheckStatus::Skipped,
                Some("degree existence undecided within budget".into()),
            );
        }
    }

    /// A regular semigroup with any degree is completely simple.
    fn regular_degree_cs_check(&mut self, p: &Profile<'_>) {
        let id = "regular-with-degree-is-completely-simple";
        if !p.regular {
            self.push(p, id, CheckStatus::Vacuous, None);
            return;
        }
        let infos = [p.lc_info(), p.derived_info(), p.sup_info()];
        if infos.iter().any(|i| i.known().is_some()) {
            if p.completely_simple {
                self.push(p, id, CheckStatus::Pass, None);
            } else {
                self.push(
                    p,
                    id,
                    CheckStatus::Fail,
                    Some("regular with a degree but not completely simple".into()),
                );
            }
        } else if infos.iter().all(|i| i.definitely_none()) {
            self.push(p, id, CheckStatus::Vacuous, None);
        } else {
            self.push(
                p,
                id,
                CheckStatus::Skipped,
                Some("degree existence undecided within budget".into()),
            );
        }
    }

    /// Regular: the idempotent antichain condition pins complete simplicity.
    fn regular_antichain_cs_check(&mut self, p: &Profile<'_>) {
        let id = "regular-idempotent-antichain-iff-completely-simple";
        if !p.regular {
            self.push(p, id, CheckStatus::Vacuous, None);
        } else if p.antichain == p.completely_simple {
            self.push(p, id, CheckStatus::Pass, None);
        } else {
            self.push(
                p,
                id,
                CheckStatus::Fail,
                Some(format!(
                    "antichain = {}, completely simple = {}",
                    p.antichain, p.completely_simple
                )),
            );
        }
    }

    /// Regular: abelian exactly when the abelian-group-times-band
    /// decomposition exists.
    fn warne_check(&mut self, p: &Profile<'_>) {
        let id = "regular-abelian-iff-band-group-decomposition";
        if !p.regular {
            self.push(p, id, CheckStatus::Vacuous, None);
            return;
        }
        match crate::structure::warne_decomposition(p.s) {
            Ok(Some(_)) => self.push(p, id, CheckStatus::Pass, None),
            Ok(None) => self.push(p, id, CheckStatus::Pass, None),
            Err(StructureError::Cube(e)) => {
                self.push(p, id, CheckStatus::Skipped, Some(format!("{e}")))
            }
            Err(e) => self.push(p, id, CheckStatus::Fail, Some(format!("{e}"))),
        }
    }

    /// Left-zero and right-zero semigroups are abelian.
    fn zero_semigroup_check(&mut self, p: &Profile<'_>) {
        let id = "left-right-zero-semigroups-abelian";
        if !p.s.is_left_zero() && !p.s.is_right_zero() {
            self.push(p, id, CheckStatus::Vacuous, None);
            return;
        }
        let abelian = p
            .sup
            .as_ref()
            .map(|r| !r.terms().is_empty() && r.terms()[0].is_zero());
        match abelian {
            Some(true) => self.push(p, id, CheckStatus::Pass, None),
            Some(false) => self.push(
                p,
                id,
                CheckStatus::Fail,
                Some("binary commutator of a zero semigroup is not zero".into()),
            ),
            None => self.push(p, id, CheckStatus::Skipped, Some("engine budget".into())),
        }
    }

    fn orthodox_checks(&mut self, p: &Profile<'_>) {
        let cases: [(&'static str, DegreeInfo, fn(&GroupSpec) -> Option<usize>); 3] = [
            (
                "orthodox-supernilpotent-iff-nilpotent-group-band",
                p.sup_info(),
                group_nilpotency_class,
            ),
            (
                "orthodox-nilpotent-iff-nilpotent-group-band",
                p.lc_info(),
                group_nilpotency_class,
            ),
            (
                "orthodox-solvable-iff-solvable-group-band",
                p.derived_info(),
                group_solvability_degree,
            ),
        ];
        for (id, lhs, gdeg) in cases {
            if !p.orthodox {
                self.push(p, id, CheckStatus::Vacuous, None);
                continue;
            }
            match p.decomposition_info(gdeg) {
                Err(msg) => self.push(p, id, CheckStatus::Fail, Some(msg)),
                Ok(rhs) => {
                    let (status, detail) = compare_equivalence(lhs, rhs);
                    self.push(p, id, status, detail);
                }
            }
        }
        let id = "orthodox-supernilpotent-iff-nilpotent";
        if !p.orthodox {
            self.push(p, id, CheckStatus::Vacuous, None);
        } else {
            let (status, detail) = compare_equivalence(p.sup_info(), p.lc_info());
            self.push(p, id, status, detail);
        }
    }

    fn inverse_check(&mut self, p: &Profile<'_>) {
        let id = "inverse-supernilpotent-iff-nilpotent-group";
        if !p.inverse {
            self.push(p, id, CheckStatus::Vacuous, None);
            return;
        }
        match inverse_supernilpotent_decomposition(p.s, p.sup_cap + 1) {
            Ok(Some(d)) => self.push(
                p,
                id,
                CheckStatus::Pass,
                Some(format!(
                    "group of order {} at matching degree",
                    d.group().order()
                )),
            ),
            Ok(None) => {
                // the reverse direction: a nilpotent group must have been
                // caught by the probe unless its class exceeds the budget
                match &p.group {
                    Some(g) => match group_nilpotency_class(g) {
                        Some(c) if c <= p.sup_cap => self.push(
                            p,
                            id,
                            CheckStatus::Fail,
                            Some(format!(
                                "a class-{c} group found not supernilpotent within the probe"
                            )),
                        ),
                        Some(c) => self.push(
                            p,
                            id,
                            CheckStatus::Skipped,
                            Some(format!("group class {c} beyond the arity budget")),
                        ),
                        None => self.push(p, id, CheckStatus::Pass, None),
                    },
                    None => self.push(p, id, CheckStatus::Pass, None),
                }
            }
            Err(StructureError::Cube(e)) => {
                self.push(p, id, CheckStatus::Skipped, Some(format!("{e}")))
            }
            Err(e) => self.push(p, id, CheckStatus::Fail, Some(format!("{e}"))),
        }
    }

    fn group_check(&mut self, p: &Profile<'_>) {
        let id = "group-supernilpotency-equals-nilpotency-class";
        let Some(g) = &p.group else {
            self.push(p, id, CheckStatus::Vacuous, None);
            return;
        };
        let rhs = match group_nilpotency_class(g) {
            Some(c) => DegreeInfo::Known(c),
            None => DegreeInfo::NeverBelow(usize::MAX),
        };
        let (status, detail) = compare_equivalence(p.sup_info(), rhs);
        self.push(p, id, status, detail);
    }

    fn series_relation_checks(&mut self, p: &Profile<'_>) {
        // a nilpotency degree bounds some solvability degree
        let id = "nilpotent-implies-solvable";
        match (p.lc_info(), p.derived_info()) {
            (DegreeInfo::Known(n), DegreeInfo::Known(m)) => {
                if m <= n {
                    self.push(p, id, CheckStatus::Pass, None);
                } else {
                    self.push(
                        p,
                        id,
                        CheckStatus::Fail,
                        Some(format!("nilpotency degree {n} but solvability degree {m}")),
                    );
                }
            }
            (DegreeInfo::Known(n), DegreeInfo::NeverBelow(m)) => {
                if n <= m {
                    self.push(
                        p,
                        id,
                        CheckStatus::Fail,
                        Some(format!("nilpotent of degree {n} but not solvable at or below {m}")),
                    );
                } else {
                    self.push(p, id, CheckStatus::Skipped, Some("solvability undecided".into()));
                }
            }
            (DegreeInfo::Known(_), DegreeInfo::Undecided) => {
                self.push(p, id, CheckStatus::Skipped, Some("solvability undecided".into()));
            }
            (DegreeInfo::NeverBelow(_), _) | (DegreeInfo::Undecided, _) => {
                self.push(p, id, CheckStatus::Vacuous, None);
            }
        }

        // each derived term sits below the previous lower central term
        let id = "derived-terms-below-lower-central";
        match (&p.lc, &p.derived) {
            (Some(lc), Some(der)) => {
                let mut violation = None;
                for k in 1..der.terms().len() {
                    if k - 1 < lc.terms().len() && !der.terms()[k].leq(&lc.terms()[k - 1]) {
                        violation = Some(format!("derived term {} above lower central term {}", k + 1, k));
                        break;
                    }
                }
                match violation {
                    Some(v) => self.push(p, id, CheckStatus::Fail, Some(v)),
                    None => self.push(p, id, CheckStatus::Pass, None),
                }
            }
            _ => self.push(p, id, CheckStatus::Skipped, Some("series unavailable".into())),
        }
    }
}

/// Runs every check on every corpus member; the report is sorted by
/// (algebra, check) regardless of input order.
pub fn verify_theorem_suite(
    corpus: &[(String, FiniteSemigroup)],
    budget: &SuiteBudget,
) -> SuiteReport {
    let mut run = Run { checks: Vec::new() };
    for (name, s) in corpus {
        let p = Profile::build(name, s, budget);
        run.lattice_checks(&p, budget);
        run.antichain_check(&p);
        run.regular_degree_cs_check(&p);
        run.regular_antichain_cs_check(&p);
        run.warne_check(&p);
        run.zero_semigroup_check(&p);
        run.orthodox_checks(&p);
        run.inverse_check(&p);
        run.group_check(&p);
        run.series_relation_checks(&p);
    }
    run.checks
        .sort_by(|a, b| (a.algebra.as_str(), a.check).cmp(&(b.algebra.as_str(), b.check)));
    SuiteReport { checks: run.checks }
}
