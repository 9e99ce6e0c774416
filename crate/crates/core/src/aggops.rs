//! Conditional aggregation operators and their families.
//!
//! An operator `A(·|B)` aggregates a nonnegative vector on a conditioning
//! set `B`. Every built-in here multiplies the vector by `1_B` before
//! aggregating, so `A(x|B) = A(x·1_B|B)`, and returns 0 on `B = ∅`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::setfun::{is_null_set, GroundSet, MonotoneMeasure, Subset};
use crate::survival::{psi, SortedView};
use crate::value::Value;

/// Comparison tolerance used for approximate operators when validating.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A nonnegative input vector `x = (x_1, …, x_n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XVector(Vec<Value>);

impl XVector {
    pub fn new(components: Vec<Value>) -> Self {
        XVector(components)
    }

    pub fn from_integers(components: &[u64]) -> Self {
        XVector(components.iter().map(|&c| Value::from_integer(c)).collect())
    }

    /// Zero vector of length `n`.
    pub fn zeros(n: usize) -> Self {
        XVector(vec![Value::ZERO; n])
    }

    /// Indicator vector `1_E` on a ground set of size `n`.
    pub fn indicator(e: Subset, n: usize) -> Self {
        XVector(
            (0..n)
                .map(|i| if e.contains_index(i) { Value::ONE } else { Value::ZERO })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Component at a 0-based index.
    pub fn get(&self, idx: usize) -> Value {
        self.0[idx]
    }

    pub fn components(&self) -> &[Value] {
        &self.0
    }

    /// `x·1_B`.
    pub fn masked(&self, b: Subset) -> XVector {
        XVector(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &c)| if b.contains_index(i) { c } else { Value::ZERO })
                .collect(),
        )
    }

    /// `max_{i∈B} x_i`, 0 on the empty set.
    pub fn max_on(&self, b: Subset) -> Value {
        b.indices()
            .filter(|&i| i < self.0.len())
            .map(|i| self.0[i])
            .max()
            .unwrap_or(Value::ZERO)
    }

    pub fn check_len(&self, ground: GroundSet) -> Result<()> {
        if self.0.len() != ground.n() {
            return Err(Error::DimensionMismatch {
                expected: ground.n(),
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for XVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Result of one operator evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Eval {
    Exact(Value),
    Approx(f64),
}

impl Eval {
    pub fn to_f64(self) -> f64 {
        match self {
            Eval::Exact(v) => v.to_f64(),
            Eval::Approx(f) => f,
        }
    }

    /// Exact value, snapping an approximation to the nearest anchor within
    /// `tolerance`, or to the float's own exact rational otherwise.
    pub fn resolve(self, anchors: &[Value], tolerance: f64) -> Value {
        match self {
            Eval::Exact(v) => v,
            Eval::Approx(f) => {
                let nearest = anchors
                    .iter()
                    .map(|a| (a, (a.to_f64() - f).abs()))
                    .filter(|(_, d)| *d <= tolerance)
                    .min_by(|a, b| a.1.total_cmp(&b.1));
                match nearest {
                    Some((a, _)) => *a,
                    None => Value::from_f64(f.max(0.0)).unwrap_or(Value::ZERO),
                }
            }
        }
    }

    fn le(self, other: Eval, tolerance: f64) -> bool {
        match (self, other) {
            (Eval::Exact(a), Eval::Exact(b)) => a <= b,
            (a, b) => a.to_f64() <= b.to_f64() + tolerance,
        }
    }

    fn is_zero(self, tolerance: f64) -> bool {
        match self {
            Eval::Exact(a) => a.is_zero(),
            Eval::Approx(f) => f.abs() <= tolerance,
        }
    }
}

type OpFn = dyn Fn(&XVector, Subset) -> Value + Send + Sync;
type SizeFn = dyn Fn(&XVector, Subset) -> Eval + Send + Sync;

/// User-supplied operator. The hook must be a pure function.
#[derive(Clone)]
pub struct CustomOp {
    name: String,
    f: Arc<OpFn>,
}

impl CustomOp {
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(&XVector, Subset) -> Value + Send + Sync + 'static,
    ) -> Self {
        CustomOp {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl PartialEq for CustomOp {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.f, &other.f)
    }
}

impl fmt::Debug for CustomOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CustomOp({})", self.name)
    }
}

/// A size `s(x)(D)`: a set-indexed aggregation kernel.
#[derive(Clone)]
pub enum SizeSpec {
    /// `s(x)(D) = Σ_{i∈D} x_i`.
    Sum,
    /// `s(x)(D) = ((1/#D)·Σ_{i∈D} x_i^p)^{1/p}`, 0 on `∅`.
    CountNormalized(Value),
    Custom { name: String, f: Arc<SizeFn> },
}

impl SizeSpec {
    pub fn custom(
        name: impl Into<String>,
        f: impl Fn(&XVector, Subset) -> Eval + Send + Sync + 'static,
    ) -> Self {
        SizeSpec::Custom {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    fn eval(&self, y: &XVector, d: Subset) -> Eval {
        match self {
            SizeSpec::Sum => Eval::Exact(agg_sum(y, d)),
            SizeSpec::CountNormalized(p) => power_mean(y, d, *p),
            SizeSpec::Custom { f, .. } => f(y, d),
        }
    }
}

impl PartialEq for SizeSpec {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (SizeSpec::Sum, SizeSpec::Sum) => true,
            (SizeSpec::CountNormalized(a), SizeSpec::CountNormalized(b)) => a == b,
            (SizeSpec::Custom { f: a, .. }, SizeSpec::Custom { f: b, .. }) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl fmt::Debug for SizeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SizeSpec::Sum => f.write_str("Sum"),
            SizeSpec::CountNormalized(p) => write!(f, "CountNormalized({p})"),
            SizeSpec::Custom { name, .. } => write!(f, "Custom({name})"),
        }
    }
}

/// Mode of the integral-based operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JMode {
    Choquet,
    Shilkret,
    Sugeno,
}

/// A conditional aggregation operator.
#[derive(Clone, Debug, PartialEq)]
pub enum CaoDescriptor {
    Max,
    Sum,
    PMean { p: Value },
    WeightedMax { w: Vec<Value>, z: Vec<Value> },
    Choquet(MonotoneMeasure),
    Shilkret(MonotoneMeasure),
    Sugeno(MonotoneMeasure),
    EssSup(MonotoneMeasure),
    Size { size: SizeSpec, family: Vec<Subset> },
    /// A different operator on selected conditioning sets.
    PerSet {
        default: Box<CaoDescriptor>,
        cases: BTreeMap<Subset, CaoDescriptor>,
    },
    Custom(CustomOp),
}

impl CaoDescriptor {
    /// Short tag used in reports and JSON.
    pub fn kind_name(&self) -> &'static str {
        match self {
            CaoDescriptor::Max => "max",
            CaoDescriptor::Sum => "sum",
            CaoDescriptor::PMean { .. } => "pmean",
            CaoDescriptor::WeightedMax { .. } => "weighted_max",
            CaoDescriptor::Choquet(_) => "choquet",
            CaoDescriptor::Shilkret(_) => "shilkret",
            CaoDescriptor::Sugeno(_) => "sugeno",
            CaoDescriptor::EssSup(_) => "ess_sup",
            CaoDescriptor::Size { .. } => "size",
            CaoDescriptor::PerSet { .. } => "per_set",
            CaoDescriptor::Custom(_) => "custom",
        }
    }

    /// Checks descriptor parameters against the ground set.
    pub fn validate(&self, ground: GroundSet) -> Result<()> {
        let n = ground.n();
        let bad = |m: String| Err(Error::InvalidDescriptor(m));
        match self {
            CaoDescriptor::PMean { p } if !p.is_positive() => bad("p must be positive".into()),
            CaoDescriptor::WeightedMax { w, z } => {
                if w.len() != n || z.len() != n {
                    return bad(format!("w and z must have length {n}"));
                }
                if w.iter().any(|wi| *wi > Value::ONE) {
                    return bad("w must lie in [0,1]".into());
                }
                if z.iter().any(|zi| zi.is_zero() || *zi > Value::ONE) {
                    return bad("z must lie in (0,1]".into());
                }
                if z.iter().max() != Some(&Value::ONE) {
                    return bad("max z_i must equal 1".into());
                }
                Ok(())
            }
            CaoDescriptor::Choquet(m)
            | CaoDescriptor::Shilkret(m)
            | CaoDescriptor::Sugeno(m)
            | CaoDescriptor::EssSup(m) => {
                if m.ground() != ground {
                    return bad(format!("inner measure is on [{}], expected [{n}]", m.n()));
                }
                Ok(())
            }
            CaoDescriptor::Size { size, family } => {
                if let SizeSpec::CountNormalized(p) = size {
                    if !p.is_positive() {
                        return bad("size exponent must be positive".into());
                    }
                }
                for d in family {
                    ground.check(*d)?;
                }
                Ok(())
            }
            CaoDescriptor::PerSet { default, cases } => {
                default.validate(ground)?;
                for (b, op) in cases {
                    ground.check(*b)?;
                    op.validate(ground)?;
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// True when evaluations may be floating point approximations.
    pub fn is_approximate(&self) -> bool {
        match self {
            CaoDescriptor::PMean { p } => *p != Value::ONE,
            CaoDescriptor::Size { size, .. } => match size {
                SizeSpec::Sum => false,
                SizeSpec::CountNormalized(p) => *p != Value::ONE,
                SizeSpec::Custom { .. } => true,
            },
            CaoDescriptor::PerSet { default, cases } => {
                default.is_approximate() || cases.values().any(CaoDescriptor::is_approximate)
            }
            _ => false,
        }
    }

    /// `A(x|B)`.
    pub fn evaluate(&self, x: &XVector, b: Subset) -> Eval {
        match self {
            CaoDescriptor::Max => Eval::Exact(agg_max(x, b)),
            CaoDescriptor::Sum => Eval::Exact(agg_sum(x, b)),
            CaoDescriptor::PMean { p } => power_mean(x, b, *p),
            CaoDescriptor::WeightedMax { w, z } => Eval::Exact(agg_weighted_max(x, b, w, z)),
            CaoDescriptor::Choquet(m) => Eval::Exact(agg_jintegral(x, b, m, JMode::Choquet)),
            CaoDescriptor::Shilkret(m) => Eval::Exact(agg_jintegral(x, b, m, JMode::Shilkret)),
            CaoDescriptor::Sugeno(m) => Eval::Exact(agg_jintegral(x, b, m, JMode::Sugeno)),
            CaoDescriptor::EssSup(m) => Eval::Exact(agg_ess_sup(x, b, m)),
            CaoDescriptor::Size { size, family } => agg_size(x, b, size, family),
            CaoDescriptor::PerSet { default, cases } => {
                cases.get(&b).unwrap_or(default).evaluate(x, b)
            }
            CaoDescriptor::Custom(op) => Eval::Exact((op.f)(x, b)),
        }
    }
}

pub fn agg_max(x: &XVector, b: Subset) -> Value {
    x.max_on(b)
}

pub fn agg_sum(x: &XVector, b: Subset) -> Value {
    b.indices().map(|i| x.get(i)).sum()
}

/// `((1/#B)·Σ_{i∈B} x_i^p)^{1/p}`; 0 on `∅`.
pub fn agg_pmean(x: &XVector, b: Subset, p: Value) -> f64 {
    power_mean(x, b, p).to_f64()
}

fn power_mean(x: &XVector, b: Subset, p: Value) -> Eval {
    if b.is_empty() {
        return Eval::Exact(Value::ZERO);
    }
    let count = Value::from_integer(b.len() as u64);
    if p == Value::ONE {
        return Eval::Exact(agg_sum(x, b) / count);
    }
    let pf = p.to_f64();
    let mean = b.indices().map(|i| x.get(i).to_f64().powf(pf)).sum::<f64>() / b.len() as f64;
    Eval::Approx(mean.powf(1.0 / pf))
}

/// `max_{i∈B}(x_i·w_i) / max_{i∈B} z_i`; 0 on `∅`.
pub fn agg_weighted_max(x: &XVector, b: Subset, w: &[Value], z: &[Value]) -> Value {
    if b.is_empty() {
        return Value::ZERO;
    }
    let top = b.indices().map(|i| x.get(i) * w[i]).max().unwrap();
    let bottom = b.indices().map(|i| z[i]).max().unwrap();
    top / bottom
}

/// Choquet, Shilkret or Sugeno aggregation of `x·1_B` with respect to `m`,
/// over the sorted view `y_(1) ≤ … ≤ y_(n)` and chain `E_(i)`.
pub fn agg_jintegral(x: &XVector, b: Subset, m: &MonotoneMeasure, mode: JMode) -> Value {
    if b.is_empty() {
        return Value::ZERO;
    }
    let y = x.masked(b);
    let view = SortedView::new(&y);
    let n = y.len();
    let level = |i: usize| m.get(view.upper_set(i).intersection(b));
    match mode {
        JMode::Choquet => (1..=n)
            .map(|i| {
                let drop = level(i)
                    .checked_sub(&level(i + 1))
                    .expect("monotone measure on a decreasing chain");
                view.level(i) * drop
            })
            .sum(),
        JMode::Shilkret => (1..=n)
            .map(|i| view.level(i) * level(i))
            .max()
            .unwrap_or(Value::ZERO),
        JMode::Sugeno => (1..=n)
            .map(|i| view.level(i).min(level(i)))
            .max()
            .unwrap_or(Value::ZERO),
    }
}

/// `ess sup_m(x·1_B)`: the least `α ≥ 0` with `{x·1_B > α}` null.
pub fn agg_ess_sup(x: &XVector, b: Subset, m: &MonotoneMeasure) -> Value {
    let y = x.masked(b);
    let mut candidates: Vec<Value> = y.components().to_vec();
    candidates.push(Value::ZERO);
    candidates.sort();
    candidates.dedup();
    for alpha in candidates {
        let above = Subset::from_indices((0..y.len()).filter(|&i| y.get(i) > alpha));
        if is_null_set(m, above) {
            return alpha;
        }
    }
    unreachable!("the empty set is always null")
}

/// `max_{D∈𝒟} s(x·1_B)(D)`; 0 when `𝒟` is empty.
pub fn agg_size(x: &XVector, b: Subset, size: &SizeSpec, family: &[Subset]) -> Eval {
    let y = x.masked(b);
    let mut best = Eval::Exact(Value::ZERO);
    for &d in family {
        let e = size.eval(&y, d);
        best = match (best, e) {
            (Eval::Exact(a), Eval::Exact(c)) => Eval::Exact(a.max(c)),
            (a, c) => Eval::Approx(a.to_f64().max(c.to_f64())),
        };
    }
    best
}

/// Which conditioning sets a family uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollectionSpec {
    Powerset,
    /// `{E_(k+1)^c : k ∈ Ψ_x} ∪ {∅}`, resolved per input vector.
    Chain,
    Explicit(Vec<Subset>),
}

impl CollectionSpec {
    pub fn resolve(&self, x: &XVector, ground: GroundSet) -> Vec<Subset> {
        match self {
            CollectionSpec::Powerset => ground.subsets().collect(),
            CollectionSpec::Chain => chain_collection(x),
            CollectionSpec::Explicit(sets) => sets.clone(),
        }
    }
}

/// An operator paired with an unresolved collection.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub op: CaoDescriptor,
    pub collection: CollectionSpec,
}

impl FamilySpec {
    pub fn new(op: CaoDescriptor, collection: CollectionSpec) -> Self {
        FamilySpec { op, collection }
    }

    pub fn instantiate(&self, x: &XVector, ground: GroundSet) -> Result<Fca> {
        Fca::new(self.op.clone(), self.collection.resolve(x, ground), ground)
    }
}

/// A family of conditional aggregation operators `{A(·|E) : E ∈ ℰ}`, `∅ ∈ ℰ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Fca {
    op: CaoDescriptor,
    collection: Vec<Subset>,
    ground: GroundSet,
}

impl Fca {
    pub fn new(op: CaoDescriptor, collection: Vec<Subset>, ground: GroundSet) -> Result<Self> {
        op.validate(ground)?;
        let mut collection = collection;
        for &e in &collection {
            ground.check(e)?;
        }
        collection.sort();
        collection.dedup();
        if collection.first() != Some(&Subset::EMPTY) {
            return Err(Error::EmptySetMissing);
        }
        Ok(Fca {
            op,
            collection,
            ground,
        })
    }

    pub fn powerset(op: CaoDescriptor, ground: GroundSet) -> Result<Self> {
        Fca::new(op, ground.subsets().collect(), ground)
    }

    pub fn op(&self) -> &CaoDescriptor {
        &self.op
    }

    /// Sorted by bitmask, starting with `∅`.
    pub fn collection(&self) -> &[Subset] {
        &self.collection
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn contains(&self, e: Subset) -> bool {
        self.collection.binary_search(&e).is_ok()
    }

    pub fn is_powerset(&self) -> bool {
        self.collection.len() == self.ground.powerset_len()
    }

    /// Exact aggregation table `(E, A(x|E))` over `ℰ`, in bitmask order.
    ///
    /// Approximate operators need a tolerance; their values are snapped to
    /// the components of `x` (or 0) when within it.
    pub fn aggregate(&self, x: &XVector, tolerance: Option<Value>) -> Result<Vec<(Subset, Value)>> {
        x.check_len(self.ground)?;
        let tol = match (self.op.is_approximate(), tolerance) {
            (true, None) => return Err(Error::ApproxOperatorWithoutTolerance),
            (_, t) => t.map(|t| t.to_f64()).unwrap_or(DEFAULT_TOLERANCE),
        };
        let mut anchors = x.components().to_vec();
        anchors.push(Value::ZERO);
        anchors.sort();
        anchors.dedup();
        let mut out = Vec::with_capacity(self.collection.len());
        for &e in &self.collection {
            let a = self.op.evaluate(x, e).resolve(&anchors, tol);
            if e.is_empty() && a.is_positive() {
                return Err(Error::EmptySetAggregationNonzero {
                    value: a.to_string(),
                });
            }
            out.push((e, a));
        }
        Ok(out)
    }

    /// `A(x|E)` for one member of `ℰ`.
    pub fn value(&self, x: &XVector, e: Subset, tolerance: Option<Value>) -> Result<Value> {
        if self.op.is_approximate() && tolerance.is_none() {
            return Err(Error::ApproxOperatorWithoutTolerance);
        }
        let tol = tolerance.map(|t| t.to_f64()).unwrap_or(DEFAULT_TOLERANCE);
        let mut anchors = x.components().to_vec();
        anchors.push(Value::ZERO);
        Ok(self.op.evaluate(x, e).resolve(&anchors, tol))
    }
}

/// Outcome of checking the defining properties of an operator.
#[derive(Clone, Debug, PartialEq)]
pub enum CaoValidity {
    Valid,
    Refuted(CaoViolation),
}

#[derive(Clone, Debug, PartialEq)]
pub enum CaoViolation {
    /// `A(1_{B^c}|B) ≠ 0`.
    ComplementNotZero { set: Subset, value: f64 },
    /// `A(x|∅) ≠ 0`.
    EmptyNotZero { x: XVector, value: f64 },
    /// `x ≤ y` on `B` but `A(x|B) > A(y|B)`.
    NotMonotone {
        x: XVector,
        y: XVector,
        set: Subset,
        ax: f64,
        ay: f64,
    },
}

/// Checks the operator axioms: `A(1_{B^c}|B) = 0` exhaustively over all
/// nonempty `B`, `A(·|∅) = 0` on every probe vector, and monotonicity in the
/// vector on the probe pairs. Refutation is definitive; a pass is
/// probe-limited for custom operators.
pub fn validate_cao(
    op: &CaoDescriptor,
    ground: GroundSet,
    probes: &[(XVector, XVector, Subset)],
    tolerance: Option<f64>,
) -> Result<CaoValidity> {
    op.validate(ground)?;
    let tol = tolerance.unwrap_or(DEFAULT_TOLERANCE);
    if probes.is_empty() {
        return Err(Error::ProbeMalformed("no probes given".into()));
    }
    for (k, (x, y, b)) in probes.iter().enumerate() {
        if x.len() != ground.n() || y.len() != ground.n() || !ground.contains(*b) {
            return Err(Error::ProbeMalformed(format!("probe {k} has wrong dimensions")));
        }
        if b.indices().any(|i| x.get(i) > y.get(i)) {
            return Err(Error::ProbeMalformed(format!("probe {k}: x ≰ y on {b}")));
        }
    }
    for b in ground.subsets().skip(1) {
        let indicator = XVector::indicator(b.complement(ground), ground.n());
        let a = op.evaluate(&indicator, b);
        if !a.is_zero(tol) {
            return Ok(CaoValidity::Refuted(CaoViolation::ComplementNotZero {
                set: b,
                value: a.to_f64(),
            }));
        }
    }
    for (x, y, _) in probes {
        for z in [x, y] {
            let a = op.evaluate(z, Subset::EMPTY);
            if !a.is_zero(tol) {
                return Ok(CaoValidity::Refuted(CaoViolation::EmptyNotZero {
                    x: z.clone(),
                    value: a.to_f64(),
                }));
            }
        }
    }
    for (x, y, b) in probes {
        let (ax, ay) = (op.evaluate(x, *b), op.evaluate(y, *b));
        if !ax.le(ay, tol) {
            return Ok(CaoValidity::Refuted(CaoViolation::NotMonotone {
                x: x.clone(),
                y: y.clone(),
                set: *b,
                ax: ax.to_f64(),
                ay: ay.to_f64(),
            }));
        }
    }
    Ok(CaoValidity::Valid)
}

/// Outcome of checking that `E ↦ A(·|E)` is nondecreasing on `ℰ`.
#[derive(Clone, Debug, PartialEq)]
pub enum SetMonotonicity {
    /// Known to hold for this operator kind.
    Symbolic,
    PassedProbes(usize),
    Refuted {
        x: XVector,
        smaller: Subset,
        larger: Subset,
        a_smaller: Value,
        a_larger: Value,
    },
}

impl SetMonotonicity {
    pub fn is_refuted(&self) -> bool {
        matches!(self, SetMonotonicity::Refuted { .. })
    }
}

/// Checks `A(x|E) ≤ A(x|F)` for every probe and every comparable pair
/// `E ⊂ F` in `ℰ`. Max, essential supremum and the integral-based
/// operators are accepted without probing.
pub fn is_nondecreasing_wrt_sets(
    fca: &Fca,
    probes: &[XVector],
    tolerance: Option<Value>,
) -> Result<SetMonotonicity> {
    match fca.op() {
        CaoDescriptor::Max
        | CaoDescriptor::EssSup(_)
        | CaoDescriptor::Choquet(_)
        | CaoDescriptor::Shilkret(_)
        | CaoDescriptor::Sugeno(_) => return Ok(SetMonotonicity::Symbolic),
        _ => {}
    }
    if probes.is_empty() {
        return Err(Error::ProbeMalformed("no probe vectors given".into()));
    }
    for x in probes {
        let table = fca.aggregate(x, tolerance)?;
        for (i, &(e, ae)) in table.iter().enumerate() {
            for &(f, af) in &table[i + 1..] {
                if e.is_subset_of(f) && ae > af {
                    return Ok(SetMonotonicity::Refuted {
                        x: x.clone(),
                        smaller: e,
                        larger: f,
                        a_smaller: ae,
                        a_larger: af,
                    });
                }
            }
        }
    }
    Ok(SetMonotonicity::PassedProbes(probes.len()))
}

/// `{E_(k+1)^c : k ∈ Ψ_x} ∪ {∅}`, sorted by bitmask.
pub fn chain_collection(x: &XVector) -> Vec<Subset> {
    let ground = GroundSet::new(x.len()).expect("vector length is a valid ground set");
    let view = SortedView::new(x);
    let mut out: Vec<Subset> = psi(x)
        .into_iter()
        .map(|k| view.upper_set(k + 1).complement(ground))
        .collect();
    out.push(Subset::EMPTY);
    out.sort();
    out.dedup();
    out
}
