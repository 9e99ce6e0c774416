//! Sufficient and necessary conditions for the generalized survival function
//! to agree with, dominate, or be dominated by the standard one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::aggops::{Fca, XVector};
use crate::error::{Error, Result};
use crate::setfun::{is_strictly_monotone_on, MonotoneMeasure, Subset};
use crate::survival::{
    check_ground, gsf_from_table, step_compare, survival_standard, PsiSystem, SortedView, StepFn,
    StepOrder, SurvivalMethod,
};
use crate::value::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConditionKind {
    C1,
    C2,
    C3,
    C4,
    C1Star,
    C2Star,
    C3Star,
    C4Star,
    C1Tilde,
    C2Tilde,
    C3Tilde,
}

impl ConditionKind {
    pub const ALL: [ConditionKind; 11] = [
        ConditionKind::C1,
        ConditionKind::C2,
        ConditionKind::C3,
        ConditionKind::C4,
        ConditionKind::C1Star,
        ConditionKind::C2Star,
        ConditionKind::C3Star,
        ConditionKind::C4Star,
        ConditionKind::C1Tilde,
        ConditionKind::C2Tilde,
        ConditionKind::C3Tilde,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ConditionKind::C1 => "C1",
            ConditionKind::C2 => "C2",
            ConditionKind::C3 => "C3",
            ConditionKind::C4 => "C4",
            ConditionKind::C1Star => "C1*",
            ConditionKind::C2Star => "C2*",
            ConditionKind::C3Star => "C3*",
            ConditionKind::C4Star => "C4*",
            ConditionKind::C1Tilde => "C1~",
            ConditionKind::C2Tilde => "C2~",
            ConditionKind::C3Tilde => "C3~",
        }
    }

    /// Existential conditions report witnesses; universal ones report
    /// counterexample sets.
    pub fn is_existential(&self) -> bool {
        !matches!(
            self,
            ConditionKind::C2 | ConditionKind::C2Star | ConditionKind::C2Tilde
        )
    }
}

impl fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConditionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace("star", "*").replace("tilde", "~");
        ConditionKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::parse("", format!("unknown condition {s:?}")))
    }
}

/// Where a condition fails: the index and, for universal conditions, the
/// offending set `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub set: Option<Subset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub kind: ConditionKind,
    pub holds: bool,
    /// Index ↦ smallest-bitmask witness set, for existential conditions.
    pub witnesses: BTreeMap<usize, Subset>,
    pub violation: Option<Violation>,
}

/// Everything the condition checks need about one `(x, μ, 𝒜)` instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub x: XVector,
    pub measure: MonotoneMeasure,
    pub view: SortedView,
    pub psi: PsiSystem,
    /// `(E, A(x|E))` over `ℰ` in bitmask order.
    pub table: Vec<(Subset, Value)>,
}

impl Instance {
    pub fn new(x: &XVector, measure: &MonotoneMeasure, fca: &Fca, tolerance: Option<Value>) -> Result<Self> {
        check_ground(measure, fca)?;
        let table = fca.aggregate(x, tolerance)?;
        let view = SortedView::new(x);
        let psi = PsiSystem::from_view(&view, measure);
        Ok(Instance {
            x: x.clone(),
            measure: measure.clone(),
            view,
            psi,
            table,
        })
    }

    fn n(&self) -> usize {
        self.view.n()
    }

    /// `μ(E_(k+1))`.
    fn tail(&self, k: usize) -> Value {
        self.measure.get(self.view.upper_set(k + 1))
    }

    fn co(&self, e: Subset) -> Value {
        self.measure.get(e.complement(self.measure.ground()))
    }

    /// `A(E) < x_(k+1)`, with `x_(n+1) = ∞`.
    fn below_next(&self, a: Value, k: usize) -> bool {
        self.view.upper_level(k + 1).is_none_or(|up| a < up)
    }

    fn indices(&self, kind: ConditionKind) -> Vec<usize> {
        use ConditionKind::*;
        match kind {
            C1 | C2 | C3 | C4 => self.psi.psi.clone(),
            C1Star | C2Star | C3Star | C4Star => self.psi.star_indices(),
            C1Tilde | C2Tilde | C3Tilde => (0..=self.n()).collect(),
        }
    }

    fn l_of(&self, k: usize) -> usize {
        self.psi.star.iter().find(|s| s.k == k).map(|s| s.l).unwrap_or(k)
    }

    /// Whether `e` witnesses an existential condition at index `k`.
    fn witnesses(&self, kind: ConditionKind, k: usize, e: Subset, a: Value) -> bool {
        use ConditionKind::*;
        let (level, target, mu) = (self.view.level(k), self.tail(k), self.co(e));
        match kind {
            C1 | C1Star | C1Tilde => a == level && mu == target,
            C3 | C3Star | C3Tilde => a <= level && mu <= target,
            C4 | C4Star => a <= level && mu == target,
            C2 | C2Star | C2Tilde => unreachable!(),
        }
    }

    /// Whether `e` breaks a universal condition at index `k`.
    fn breaks(&self, kind: ConditionKind, k: usize, e: Subset, a: Value) -> bool {
        let j = if kind == ConditionKind::C2Star { self.l_of(k) } else { k };
        self.below_next(a, j) && self.co(e) < self.tail(j)
    }

    pub fn check(&self, kind: ConditionKind) -> ConditionReport {
        let mut witnesses = BTreeMap::new();
        let mut violation = None;
        for k in self.indices(kind) {
            if kind.is_existential() {
                match self.table.iter().find(|&&(e, a)| self.witnesses(kind, k, e, a)) {
                    Some(&(e, _)) => {
                        witnesses.insert(k, e);
                    }
                    None if violation.is_none() => violation = Some(Violation { index: k, set: None }),
                    None => {}
                }
            } else if violation.is_none() {
                if let Some(&(e, _)) = self.table.iter().find(|&&(e, a)| self.breaks(kind, k, e, a)) {
                    violation = Some(Violation { index: k, set: Some(e) });
                }
            }
        }
        ConditionReport {
            kind,
            holds: violation.is_none(),
            witnesses,
            violation,
        }
    }

    /// Re-derives a report's claims from the definitions: every witness
    /// qualifies, and the violation is genuine.
    pub fn recheck(&self, report: &ConditionReport) -> bool {
        let kind = report.kind;
        let idx = self.indices(kind);
        let lookup = |e: Subset| self.table.iter().find(|(s, _)| *s == e).map(|(_, a)| *a);
        for (&k, &e) in &report.witnesses {
            let ok = idx.contains(&k) && lookup(e).is_some_and(|a| self.witnesses(kind, k, e, a));
            if !ok {
                return false;
            }
        }
        match report.violation {
            None => report.holds,
            Some(Violation { index, set: None }) => {
                kind.is_existential()
                    && idx.contains(&index)
                    && !self.table.iter().any(|&(e, a)| self.witnesses(kind, index, e, a))
            }
            Some(Violation { index, set: Some(e) }) => {
                !kind.is_existential()
                    && idx.contains(&index)
                    && lookup(e).is_some_and(|a| self.breaks(kind, index, e, a))
            }
        }
    }

    pub fn standard(&self) -> StepFn {
        survival_standard(&self.x, &self.measure, SurvivalMethod::SumForm)
            .expect("dimensions already checked")
    }

    pub fn generalized(&self) -> StepFn {
        gsf_from_table(&self.table, &self.measure)
    }

    /// Strict monotonicity of `μ` on `{E_(k+1) : k ∈ Ψ}`.
    pub fn strictly_monotone_on_chain(&self) -> bool {
        let chain: Vec<Subset> = self.psi.psi.iter().map(|&k| self.view.upper_set(k + 1)).collect();
        is_strictly_monotone_on(&self.measure, &chain)
    }
}

pub fn check_condition(
    kind: ConditionKind,
    x: &XVector,
    measure: &MonotoneMeasure,
    fca: &Fca,
    tolerance: Option<Value>,
) -> Result<ConditionReport> {
    Ok(Instance::new(x, measure, fca, tolerance)?.check(kind))
}

/// One implication or equivalence relating conditions and the order of
/// the two survival functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeRow {
    pub id: &'static str,
    pub statement: &'static str,
    pub holds: bool,
}

/// Truth values of all conditions plus the observed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub truth: BTreeMap<ConditionKind, bool>,
    /// Order of the generalized function against the standard one.
    pub relation: StepOrder,
    pub strictly_monotone_on_chain: bool,
    pub rows: Vec<LatticeRow>,
}

impl LatticeReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }

    pub fn first_failure(&self) -> Option<&LatticeRow> {
        self.rows.iter().find(|r| !r.holds)
    }
}

fn implies(a: bool, b: bool) -> bool {
    !a || b
}

/// Evaluates every row of the condition lattice on one instance.
pub fn evaluate_lattice(inst: &Instance) -> LatticeReport {
    use ConditionKind::*;
    let truth: BTreeMap<ConditionKind, bool> =
        ConditionKind::ALL.into_iter().map(|k| (k, inst.check(k).holds)).collect();
    let relation = step_compare(&inst.generalized(), &inst.standard());
    let strict = inst.strictly_monotone_on_chain();
    let t = |k: ConditionKind| truth[&k];
    let eq = relation.is_equal();
    let le = relation.is_le();
    let ge = relation.is_ge();

    let chain = [
        t(C1Star) && t(C2Star),
        t(C2) && t(C3),
        t(C2) && t(C4),
        t(C2Tilde) && t(C3Tilde),
        t(C2Star) && t(C3Star),
        t(C2Star) && t(C4Star),
        t(C1Star) && t(C2),
    ];
    let row = |id, statement, holds| LatticeRow { id, statement, holds };
    let rows = vec![
        row("T1", "C1~ ∧ C2~ ⇒ equal", implies(t(C1Tilde) && t(C2Tilde), eq)),
        row("T2", "C2~ ∧ C3~ ⇔ equal", (t(C2Tilde) && t(C3Tilde)) == eq),
        row("T3", "C1 ∧ C2 ⇒ equal", implies(t(C1) && t(C2), eq)),
        row("T4", "C2 ∧ C3 ⇔ equal", (t(C2) && t(C3)) == eq),
        row("T5", "C2 ∧ C4 ⇔ equal", (t(C2) && t(C4)) == eq),
        row("T6", "strict on chain ⇒ (C1 ∧ C2 ⇔ equal)", implies(strict, (t(C1) && t(C2)) == eq)),
        row("T7", "C2* ∧ C3* ⇔ equal", (t(C2Star) && t(C3Star)) == eq),
        row("T8", "C2* ∧ C4* ⇔ equal", (t(C2Star) && t(C4Star)) == eq),
        row("T9", "C1* ∧ C2* ⇔ equal", (t(C1Star) && t(C2Star)) == eq),
        row("T10", "C1 ⇒ gsf ≤ survival", implies(t(C1), le)),
        row("T11", "C1* ⇒ gsf ≤ survival", implies(t(C1Star), le)),
        row("T12", "C3 ⇔ gsf ≤ survival", t(C3) == le),
        row("T13", "C3* ⇔ gsf ≤ survival", t(C3Star) == le),
        row("T14", "C2 ⇔ gsf ≥ survival", t(C2) == ge),
        row("T15", "C2* ⇔ gsf ≥ survival", t(C2Star) == ge),
        row("R1", "C1~ ⇒ gsf ≤ survival", implies(t(C1Tilde), le)),
        row("R2", "C2~ ⇔ gsf ≥ survival", t(C2Tilde) == ge),
        row("R3", "C3~ ⇔ gsf ≤ survival", t(C3Tilde) == le),
        row("K1", "C1 ∧ C2 ⇒ C1* ∧ C2*", implies(t(C1) && t(C2), chain[0])),
        row(
            "K2",
            "C1*∧C2* ⇔ C2∧C3 ⇔ C2∧C4 ⇔ C2~∧C3~ ⇔ C2*∧C3* ⇔ C2*∧C4* ⇔ C1*∧C2",
            chain.iter().all(|&c| c == chain[0]),
        ),
        row(
            "K3",
            "C2* ⇒ (C1* ⇔ C3* ⇔ C4*)",
            implies(t(C2Star), t(C1Star) == t(C3Star) && t(C3Star) == t(C4Star)),
        ),
        row("K4", "C2 ⇒ (C3 ⇔ C4)", implies(t(C2), t(C3) == t(C4))),
        row("K5", "C2 ⇔ C2*", t(C2) == t(C2Star)),
        row("K6", "C1~ ⇒ C1", implies(t(C1Tilde), t(C1))),
        row("K7", "C2~ ⇔ C2", t(C2Tilde) == t(C2)),
        row("K8", "C3~ ⇔ C3", t(C3Tilde) == t(C3)),
    ];
    LatticeReport {
        truth,
        relation,
        strictly_monotone_on_chain: strict,
        rows,
    }
}

/// Lattice evaluation that fails with [`Error::LatticeViolation`] on the
/// first row that does not hold.
pub fn condition_lattice_check(
    x: &XVector,
    measure: &MonotoneMeasure,
    fca: &Fca,
    tolerance: Option<Value>,
) -> Result<LatticeReport> {
    let inst = Instance::new(x, measure, fca, tolerance)?;
    let report = evaluate_lattice(&inst);
    if let Some(row) = report.first_failure() {
        return Err(Error::LatticeViolation {
            row: format!("{} ({})", row.id, row.statement),
            instance: describe(&inst),
        });
    }
    Ok(report)
}

fn describe(inst: &Instance) -> String {
    let measure: Vec<String> = inst.measure.table().iter().map(|v| v.to_string()).collect();
    let table: Vec<String> = inst.table.iter().map(|(e, a)| format!("{e}:{a}")).collect();
    format!(
        "x = {:?}, μ = [{}], A = [{}]",
        inst.x,
        measure.join(","),
        table.join(",")
    )
}

/// Both survival functions, their order, and a condition certificate
/// consistent with that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonVerdict {
    pub standard: StepFn,
    pub generalized: StepFn,
    /// Order of the generalized function against the standard one.
    pub relation: StepOrder,
    pub conditions: BTreeMap<ConditionKind, bool>,
}

/// Compares the two survival functions, cross-checking the answer against
/// every condition. A disagreement is reported as
/// [`Error::ConsistencyViolation`] instead of a verdict.
pub fn compare_survival(
    x: &XVector,
    measure: &MonotoneMeasure,
    fca: &Fca,
    tolerance: Option<Value>,
) -> Result<ComparisonVerdict> {
    let inst = Instance::new(x, measure, fca, tolerance)?;
    let report = evaluate_lattice(&inst);
    if let Some(row) = report.first_failure() {
        return Err(Error::ConsistencyViolation(format!(
            "{} ({}) fails on {}",
            row.id,
            row.statement,
            describe(&inst)
        )));
    }
    Ok(ComparisonVerdict {
        standard: inst.standard(),
        generalized: inst.generalized(),
        relation: report.relation,
        conditions: report.truth,
    })
}
