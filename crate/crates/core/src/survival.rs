//! Standard and generalized survival functions as exact step functions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::aggops::{Fca, XVector};
use crate::error::{Error, Result};
use crate::setfun::{GroundSet, MonotoneMeasure, Subset};
use crate::value::Value;

/// The nondecreasing rearrangement `0 = x_(0) ≤ x_(1) ≤ … ≤ x_(n)` of a
/// vector, together with the permutation realizing it.
///
/// Ties are broken by original index unless a permutation is supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortedView {
    /// `perm[i-1]` is the 0-based original index of `(i)`.
    perm: Vec<usize>,
    /// `levels[i] = x_(i)`, with `levels[0] = 0`.
    levels: Vec<Value>,
}

impl SortedView {
    pub fn new(x: &XVector) -> Self {
        let mut perm: Vec<usize> = (0..x.len()).collect();
        perm.sort_by_key(|&i| x.get(i));
        Self::build(x, perm)
    }

    /// Uses a caller-chosen permutation, which must sort `x`.
    pub fn with_permutation(x: &XVector, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; x.len()];
        if perm.len() != x.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                found: perm.len(),
            });
        }
        for &i in &perm {
            if i >= x.len() || seen[i] {
                return Err(Error::InvalidDescriptor("not a permutation".into()));
            }
            seen[i] = true;
        }
        if perm.windows(2).any(|w| x.get(w[0]) > x.get(w[1])) {
            return Err(Error::InvalidDescriptor("permutation does not sort x".into()));
        }
        Ok(Self::build(x, perm))
    }

    fn build(x: &XVector, perm: Vec<usize>) -> Self {
        let mut levels = Vec::with_capacity(x.len() + 1);
        levels.push(Value::ZERO);
        levels.extend(perm.iter().map(|&i| x.get(i)));
        SortedView { perm, levels }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `x_(i)` for `i ∈ 0..=n`.
    pub fn level(&self, i: usize) -> Value {
        self.levels[i]
    }

    /// `x_(i)` for `i ∈ 0..=n`, `None` standing for `x_(n+1) = ∞`.
    pub fn upper_level(&self, i: usize) -> Option<Value> {
        self.levels.get(i).copied()
    }

    /// `E_(i) = {(i), …, (n)}` for `i ∈ 1..=n+1`; `E_(n+1) = ∅`.
    pub fn upper_set(&self, i: usize) -> Subset {
        debug_assert!(i >= 1);
        Subset::from_indices(self.perm[i.saturating_sub(1).min(self.perm.len())..].iter().copied())
    }
}

/// `Ψ_x = {i ∈ 0..n-1 : x_(i) < x_(i+1)} ∪ {n}`, ascending.
pub fn psi(x: &XVector) -> Vec<usize> {
    psi_of(&SortedView::new(x))
}

fn psi_of(view: &SortedView) -> Vec<usize> {
    let n = view.n();
    let mut out: Vec<usize> = (0..n).filter(|&i| view.level(i) < view.level(i + 1)).collect();
    out.push(n);
    out
}

/// A member `k` of `Ψ*` with `l_k = max{j ∈ Ψ : μ(E_(j+1)) = μ(E_(k+1))}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarIndex {
    pub k: usize,
    pub l: usize,
}

/// The index systems of `x` and, given a measure, the reduced set `Ψ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiSystem {
    pub psi: Vec<usize>,
    pub star: Vec<StarIndex>,
}

impl PsiSystem {
    pub fn new(x: &XVector, measure: &MonotoneMeasure) -> Self {
        Self::from_view(&SortedView::new(x), measure)
    }

    pub fn from_view(view: &SortedView, measure: &MonotoneMeasure) -> Self {
        let psi = psi_of(view);
        let tail = |k: usize| measure.get(view.upper_set(k + 1));
        let mut star = Vec::new();
        for (pos, &k) in psi.iter().enumerate() {
            let keep = pos == 0 || psi[..pos].iter().all(|&j| tail(j) > tail(k));
            if keep {
                let l = *psi.iter().rev().find(|&&j| tail(j) == tail(k)).unwrap();
                star.push(StarIndex { k, l });
            }
        }
        PsiSystem { psi, star }
    }

    pub fn star_indices(&self) -> Vec<usize> {
        self.star.iter().map(|s| s.k).collect()
    }
}

/// A right-continuous nonincreasing-or-not step function on `[0, ∞)`.
///
/// `values[j]` holds on `[breakpoints[j], breakpoints[j+1])`, the last
/// piece extending to `∞`. Stored canonically: `breakpoints[0] = 0`,
/// strictly increasing, adjacent values distinct.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StepFnRepr", into = "StepFnRepr")]
pub struct StepFn {
    breakpoints: Vec<Value>,
    values: Vec<Value>,
}

#[derive(Serialize, Deserialize)]
struct StepFnRepr {
    breakpoints: Vec<Value>,
    values: Vec<Value>,
}

impl TryFrom<StepFnRepr> for StepFn {
    type Error = Error;
    fn try_from(r: StepFnRepr) -> Result<Self> {
        if r.breakpoints.len() != r.values.len() {
            return Err(Error::InvalidStepFn("breakpoints and values differ in length".into()));
        }
        StepFn::from_pieces(r.breakpoints.into_iter().zip(r.values))
    }
}

impl From<StepFn> for StepFnRepr {
    fn from(f: StepFn) -> Self {
        StepFnRepr {
            breakpoints: f.breakpoints,
            values: f.values,
        }
    }
}

impl StepFn {
    pub fn constant(value: Value) -> Self {
        StepFn {
            breakpoints: vec![Value::ZERO],
            values: vec![value],
        }
    }

    /// From `(start, value)` pairs with strictly increasing starts beginning
    /// at 0. Adjacent equal values are merged.
    pub fn from_pieces(pieces: impl IntoIterator<Item = (Value, Value)>) -> Result<Self> {
        let mut breakpoints: Vec<Value> = Vec::new();
        let mut values: Vec<Value> = Vec::new();
        for (start, value) in pieces {
            match breakpoints.last() {
                None if !start.is_zero() => {
                    return Err(Error::InvalidStepFn("first piece must start at 0".into()))
                }
                Some(prev) if start <= *prev => {
                    return Err(Error::InvalidStepFn("starts must increase strictly".into()))
                }
                _ => {}
            }
            if values.last() == Some(&value) {
                continue;
            }
            breakpoints.push(start);
            values.push(value);
        }
        if breakpoints.is_empty() {
            return Err(Error::InvalidStepFn("no pieces".into()));
        }
        Ok(StepFn { breakpoints, values })
    }

    /// From half-open intervals `[start, end)` (`end = None` meaning `∞`),
    /// in any order, that partition `[0, ∞)`.
    pub fn from_intervals(mut intervals: Vec<(Value, Option<Value>, Value)>) -> Result<Self> {
        intervals.sort_by_key(|iv| iv.0);
        let mut expected = Some(Value::ZERO);
        for iv in &intervals {
            if Some(iv.0) != expected {
                return Err(Error::InvalidStepFn(format!(
                    "interval starting at {} leaves a gap or overlap",
                    iv.0
                )));
            }
            if iv.1.is_some_and(|e| e <= iv.0) {
                return Err(Error::InvalidStepFn("empty interval".into()));
            }
            expected = iv.1;
        }
        if expected.is_some() {
            return Err(Error::InvalidStepFn("intervals do not reach ∞".into()));
        }
        Self::from_pieces(intervals.into_iter().map(|(s, _, v)| (s, v)))
    }

    pub fn breakpoints(&self) -> &[Value] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    /// `(start, end, value)` with `end = None` on the last piece.
    pub fn pieces(&self) -> impl Iterator<Item = (Value, Option<Value>, Value)> + '_ {
        (0..self.values.len()).map(move |j| {
            (
                self.breakpoints[j],
                self.breakpoints.get(j + 1).copied(),
                self.values[j],
            )
        })
    }

    pub fn eval(&self, alpha: Value) -> Value {
        let j = self.breakpoints.partition_point(|b| *b <= alpha);
        self.values[j - 1]
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn final_value(&self) -> Value {
        *self.values.last().unwrap()
    }

    /// Breakpoints of both functions, merged.
    pub fn merged_grid(&self, other: &StepFn) -> Vec<Value> {
        let mut grid: Vec<Value> = self.breakpoints.iter().chain(&other.breakpoints).copied().collect();
        grid.sort();
        grid.dedup();
        grid
    }

    /// `self − other`, provided `self ≥ other` everywhere.
    pub fn difference(&self, other: &StepFn) -> Option<StepFn> {
        let grid = self.merged_grid(other);
        let mut pieces = Vec::with_capacity(grid.len());
        for a in grid {
            pieces.push((a, self.eval(a).checked_sub(&other.eval(a))?));
        }
        StepFn::from_pieces(pieces).ok()
    }
}

impl fmt::Debug for StepFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (start, end, value) in self.pieces() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match end {
                Some(e) => write!(f, "[{start},{e}):{value}")?,
                None => write!(f, "[{start},∞):{value}")?,
            }
        }
        Ok(())
    }
}

/// Equivalent formulas for the standard survival function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SurvivalMethod {
    /// `min{μ(E^c) : max_{i∈E} x_i ≤ α}` over all `E ⊆ [n]`.
    MinForm,
    /// `Σ_{i=0}^{n-1} μ(E_(i+1))·1_[x_(i), x_(i+1))`.
    #[default]
    SumForm,
    /// `Σ_{k∈Ψ} μ(E_(k+1))·1_[x_(k), x_(k+1))`.
    PsiForm,
    /// `Σ_{k∈Ψ*} μ(E_(k+1))·1_[x_(k), x_(l_k+1))`.
    PsiStarForm,
}

impl SurvivalMethod {
    pub const ALL: [SurvivalMethod; 4] = [
        SurvivalMethod::MinForm,
        SurvivalMethod::SumForm,
        SurvivalMethod::PsiForm,
        SurvivalMethod::PsiStarForm,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SurvivalMethod::MinForm => "minform",
            SurvivalMethod::SumForm => "sumform",
            SurvivalMethod::PsiForm => "psi",
            SurvivalMethod::PsiStarForm => "psistar",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }
}

/// `α ↦ μ({x > α})`.
pub fn survival_standard(x: &XVector, measure: &MonotoneMeasure, method: SurvivalMethod) -> Result<StepFn> {
    let ground = measure.ground();
    x.check_len(ground)?;
    let view = SortedView::new(x);
    let n = ground.n();
    let tail = |i: usize| measure.get(view.upper_set(i));
    let up = |i: usize| view.upper_level(i);
    match method {
        SurvivalMethod::MinForm => min_form(x, measure, ground),
        SurvivalMethod::SumForm => {
            let mut iv: Vec<_> = (0..n)
                .filter(|&i| view.level(i) < view.level(i + 1))
                .map(|i| (view.level(i), up(i + 1), tail(i + 1)))
                .collect();
            iv.push((view.level(n), None, Value::ZERO));
            StepFn::from_intervals(iv)
        }
        SurvivalMethod::PsiForm => StepFn::from_intervals(
            psi_of(&view)
                .into_iter()
                .map(|k| (view.level(k), up(k + 1), tail(k + 1)))
                .collect(),
        ),
        SurvivalMethod::PsiStarForm => StepFn::from_intervals(
            PsiSystem::from_view(&view, measure)
                .star
                .into_iter()
                .map(|s| (view.level(s.k), up(s.l + 1), tail(s.k + 1)))
                .collect(),
        ),
    }
}

fn min_form(x: &XVector, measure: &MonotoneMeasure, ground: GroundSet) -> Result<StepFn> {
    let mut grid: Vec<Value> = x.components().to_vec();
    grid.push(Value::ZERO);
    grid.sort();
    grid.dedup();
    let sets: Vec<(Value, Value)> = ground
        .subsets()
        .map(|e| (x.max_on(e), measure.get(e.complement(ground))))
        .collect();
    StepFn::from_pieces(grid.into_iter().map(|alpha| {
        let best = sets
            .iter()
            .filter(|(a, _)| *a <= alpha)
            .map(|(_, m)| *m)
            .min()
            .expect("∅ always qualifies");
        (alpha, best)
    }))
}

/// `α ↦ min{μ(E^c) : A(x|E) ≤ α, E ∈ ℰ}`.
pub fn gsf(x: &XVector, measure: &MonotoneMeasure, fca: &Fca, tolerance: Option<Value>) -> Result<StepFn> {
    check_ground(measure, fca)?;
    let table = fca.aggregate(x, tolerance)?;
    Ok(gsf_from_table(&table, measure))
}

/// Generalized survival function from a precomputed table `(E, A(x|E))`
/// that includes `(∅, 0)`.
pub fn gsf_from_table(table: &[(Subset, Value)], measure: &MonotoneMeasure) -> StepFn {
    let ground = measure.ground();
    let mut entries: Vec<(Value, Value)> = table
        .iter()
        .map(|&(e, a)| (a, measure.get(e.complement(ground))))
        .collect();
    entries.sort();
    let mut pieces = Vec::new();
    let mut running: Option<Value> = None;
    let mut idx = 0;
    while idx < entries.len() {
        let a = entries[idx].0;
        while idx < entries.len() && entries[idx].0 == a {
            let m = entries[idx].1;
            running = Some(running.map_or(m, |r| r.min(m)));
            idx += 1;
        }
        pieces.push((a, running.unwrap()));
    }
    StepFn::from_pieces(pieces).expect("table contains ∅ with aggregation 0")
}

pub(crate) fn check_ground(measure: &MonotoneMeasure, fca: &Fca) -> Result<()> {
    if measure.ground() != fca.ground() {
        return Err(Error::DimensionMismatch {
            expected: fca.ground().n(),
            found: measure.n(),
        });
    }
    Ok(())
}

/// Pointwise order between two step functions, with the left end of the
/// first piece where they differ as the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepOrder {
    Equal,
    /// `f ≤ g`, `f ≠ g`.
    Leq { at: Value },
    /// `f ≥ g`, `f ≠ g`.
    Geq { at: Value },
    Incomparable { at: Value },
}

impl StepOrder {
    pub fn is_equal(&self) -> bool {
        matches!(self, StepOrder::Equal)
    }

    /// `f ≤ g` everywhere.
    pub fn is_le(&self) -> bool {
        matches!(self, StepOrder::Equal | StepOrder::Leq { .. })
    }

    /// `f ≥ g` everywhere.
    pub fn is_ge(&self) -> bool {
        matches!(self, StepOrder::Equal | StepOrder::Geq { .. })
    }

    pub fn witness(&self) -> Option<Value> {
        match *self {
            StepOrder::Equal => None,
            StepOrder::Leq { at } | StepOrder::Geq { at } | StepOrder::Incomparable { at } => Some(at),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            StepOrder::Equal => "equal",
            StepOrder::Leq { .. } => "leq",
            StepOrder::Geq { .. } => "geq",
            StepOrder::Incomparable { .. } => "incomparable",
        }
    }
}

pub fn step_compare(f: &StepFn, g: &StepFn) -> StepOrder {
    let (mut less, mut greater) = (false, false);
    let mut first = None;
    for a in f.merged_grid(g) {
        let (fa, ga) = (f.eval(a), g.eval(a));
        if fa != ga && first.is_none() {
            first = Some(a);
        }
        less |= fa < ga;
        greater |= fa > ga;
    }
    match (first, less, greater) {
        (None, _, _) => StepOrder::Equal,
        (Some(at), true, false) => StepOrder::Leq { at },
        (Some(at), false, true) => StepOrder::Geq { at },
        (Some(at), _, _) => StepOrder::Incomparable { at },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggops::{CaoDescriptor, Fca};
    use crate::setfun::{random_monotone_measure, validate_measure};
    use crate::value::v;

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    /// Table in listed order ∅,{1},{2},{3},{1,2},{1,3},{2,3},{1,2,3}.
    fn measure3(listed: [&str; 8]) -> MonotoneMeasure {
        let order = [0usize, 1, 2, 4, 3, 5, 6, 7];
        let mut table = vec![Value::ZERO; 8];
        for (pos, mask) in order.iter().enumerate() {
            table[*mask] = v(listed[pos]);
        }
        validate_measure(table, g(3)).unwrap()
    }

    fn pieces(list: &[(&str, &str)]) -> StepFn {
        StepFn::from_pieces(list.iter().map(|(a, b)| (v(a), v(b)))).unwrap()
    }

    #[test]
    fn sorted_view_is_stable() {
        let x = XVector::from_integers(&[1, 3, 1]);
        let view = SortedView::new(&x);
        assert_eq!(view.perm(), &[0, 2, 1]);
        assert_eq!(view.level(0), v("0"));
        assert_eq!(view.level(3), v("3"));
        assert_eq!(view.upper_level(4), None);
        assert_eq!(view.upper_set(1), g(3).full());
        assert_eq!(view.upper_set(2), Subset::from_elements([2, 3]));
        assert_eq!(view.upper_set(3), Subset::singleton(2));
        assert_eq!(view.upper_set(4), Subset::EMPTY);
        assert!(SortedView::with_permutation(&x, vec![2, 0, 1]).is_ok());
        assert!(SortedView::with_permutation(&x, vec![1, 0, 2]).is_err());
    }

    #[test]
    fn psi_systems() {
        assert_eq!(psi(&XVector::from_integers(&[1, 3, 1])), vec![0, 2, 3]);
        assert_eq!(psi(&XVector::from_integers(&[2, 3, 4])), vec![0, 1, 2, 3]);
        assert_eq!(psi(&XVector::from_integers(&[0, 0, 0])), vec![3]);
        let mu = measure3(["0", "0", "0", "0.7", "0", "0.8", "0.7", "1"]);
        let sys = PsiSystem::new(&XVector::from_integers(&[2, 3, 4]), &mu);
        assert_eq!(sys.star_indices(), vec![0, 1, 3]);
        assert_eq!(sys.star[1], StarIndex { k: 1, l: 2 });
        assert_eq!(sys.star[2], StarIndex { k: 3, l: 3 });
    }

    #[test]
    fn worked_example_standard_survival() {
        let mu = measure3(["0", "0.25", "0.25", "0.4", "0.75", "0.75", "0.75", "1"]);
        let x = XVector::from_integers(&[2, 3, 4]);
        let expected = pieces(&[("0", "1"), ("2", "0.75"), ("3", "0.4"), ("4", "0")]);
        for m in SurvivalMethod::ALL {
            assert_eq!(survival_standard(&x, &mu, m).unwrap(), expected, "{m:?}");
        }
        let fca = Fca::powerset(CaoDescriptor::Max, g(3)).unwrap();
        assert_eq!(gsf(&x, &mu, &fca, None).unwrap(), expected);
    }

    #[test]
    fn worked_example_sum_gsf_by_brute_force() {

        let mu = measure3(["0", "0.25", "0.25", "0.4", "0.75", "0.75", "0.75", "1"]);
        let x = XVector::from_integers(&[2, 3, 4]);
        let fca = Fca::powerset(CaoDescriptor::Sum, g(3)).unwrap();
        let got = gsf(&x, &mu, &fca, None).unwrap();
        // brute force on a fine grid
        for tenth in 0..120u64 {
            let alpha = Value::ratio(tenth, 10).unwrap();
            let expect = g(3)
                .subsets()
                .filter(|e| e.indices().map(|i| x.get(i)).sum::<Value>() <= alpha)
                .map(|e| mu.get(e.complement(g(3))))
                .min()
                .unwrap();
            assert_eq!(got.eval(alpha), expect, "α = {alpha}");
        }
        assert_eq!(
            got,
            pieces(&[("0", "1"), ("2", "0.75"), ("5", "0.4"), ("6", "0.25"), ("9", "0")])
        );
    }

    #[test]
    fn psi_star_short_circuits_equal_tails() {
        let mu = measure3(["0", "0", "0", "0.7", "0", "0.8", "0.7", "1"]);
        let x = XVector::from_integers(&[2, 3, 4]);
        let expected = pieces(&[("0", "1"), ("2", "0.7"), ("4", "0")]);
        for m in SurvivalMethod::ALL {
            assert_eq!(survival_standard(&x, &mu, m).unwrap(), expected, "{m:?}");
        }
    }

    #[test]
    fn zero_vector_and_ties() {
        let mu = random_monotone_measure(g(3), 5, &[v("0"), v("0.5"), v("1")]).unwrap();
        let zero = XVector::zeros(3);
        for m in SurvivalMethod::ALL {
            assert_eq!(survival_standard(&zero, &mu, m).unwrap(), StepFn::constant(v("0")));
        }
        let x = XVector::from_integers(&[5, 5, 5]);
        for m in SurvivalMethod::ALL {
            let f = survival_standard(&x, &mu, m).unwrap();
            assert_eq!(f.eval(v("4.9")), mu.total());
            assert_eq!(f.eval(v("5")), v("0"));
        }
    }

    #[test]
    fn step_fn_basics() {
        let f = pieces(&[("0", "1"), ("2", "1"), ("3", "0.5")]);
        assert_eq!(f.breakpoints(), &[v("0"), v("3")]);
        assert_eq!(f.eval(v("2.99")), v("1"));
        assert_eq!(f.eval(v("3")), v("0.5"));
        assert_eq!(f.eval(v("100")), v("0.5"));
        assert!(StepFn::from_pieces([(v("1"), v("1"))]).is_err());
        assert!(StepFn::from_pieces([(v("0"), v("1")), (v("0"), v("1"))]).is_err());
        assert!(StepFn::from_intervals(vec![(v("0"), Some(v("1")), v("1"))]).is_err());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"breakpoints":["0","3"],"values":["1","0.5"]}"#);
        assert_eq!(serde_json::from_str::<StepFn>(&json).unwrap(), f);
        assert!(serde_json::from_str::<StepFn>(r#"{"breakpoints":["1"],"values":["1"]}"#).is_err());
    }

    #[test]
    fn compare_orders() {
        let f = pieces(&[("0", "1"), ("1", "0")]);
        let g2 = pieces(&[("0", "1"), ("1", "0.5"), ("2", "0")]);
        assert_eq!(step_compare(&f, &f), StepOrder::Equal);
        assert_eq!(step_compare(&f, &g2), StepOrder::Leq { at: v("1") });
        assert_eq!(step_compare(&g2, &f), StepOrder::Geq { at: v("1") });
        let h = pieces(&[("0", "0.5"), ("1", "0.5"), ("2", "0")]);
        assert_eq!(step_compare(&f, &h), StepOrder::Incomparable { at: v("0") });
        assert_eq!(g2.difference(&f).unwrap(), pieces(&[("0", "0"), ("1", "0.5"), ("2", "0")]));
        assert_eq!(f.difference(&g2), None);
    }

    proptest::proptest! {
        #[test]
        fn survival_forms_agree(seed in 0u64..10_000, a in 0u64..4, b in 0u64..4, c in 0u64..4, d in 0u64..4) {
            let grid = [v("0"), v("0.25"), v("0.5"), v("1")];
            let mu = random_monotone_measure(g(4), seed, &grid).unwrap();
            let x = XVector::from_integers(&[a, b, c, d]);
            let reference = survival_standard(&x, &mu, SurvivalMethod::MinForm).unwrap();
            for m in SurvivalMethod::ALL {
                let f = survival_standard(&x, &mu, m).unwrap();
                proptest::prop_assert!(f.is_nonincreasing());
                proptest::prop_assert_eq!(&f, &reference);
            }
            let fca = Fca::powerset(CaoDescriptor::Max, g(4)).unwrap();
            proptest::prop_assert_eq!(gsf(&x, &mu, &fca, None).unwrap(), reference.clone());
            // direct definition at every breakpoint and just below it
            for alpha in reference.breakpoints() {
                let above = Subset::from_indices((0..4).filter(|&i| x.get(i) > *alpha));
                proptest::prop_assert_eq!(reference.eval(*alpha), mu.get(above));
            }
        }
    }
}
