//! When does the generalized survival function coincide with the standard
//! one for every monotone measure? Deciders, certificates and search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aggops::{
    is_nondecreasing_wrt_sets, CaoDescriptor, Fca, FamilySpec, SetMonotonicity, SizeSpec, XVector,
};
use crate::error::{Error, Result};
use crate::setfun::{
    is_null_set, random_monotone_measure, strict_binary_measure, validate_measure, weakest_measure, GroundSet,
    MonotoneMeasure, Subset,
};
use crate::survival::{gsf, psi, step_compare, survival_standard, SortedView, SurvivalMethod};
use crate::value::Value;

/// A concrete instance on which the two survival functions differ.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub x: XVector,
    pub measure: MonotoneMeasure,
    pub fca: Fca,
    /// First point where the functions differ.
    pub alpha: Value,
    pub standard: Value,
    pub generalized: Value,
    pub reason: String,
}

impl Witness {
    /// Recomputes both functions from scratch and confirms the recorded
    /// values and their disagreement.
    pub fn verify(&self, tolerance: Option<Value>) -> Result<bool> {
        let f = survival_standard(&self.x, &self.measure, SurvivalMethod::MinForm)?;
        let g = gsf(&self.x, &self.measure, &self.fca, tolerance)?;
        let (fa, ga) = (f.eval(self.alpha), g.eval(self.alpha));
        Ok(fa == self.standard && ga == self.generalized && fa != ga)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Proved,
    Refuted(Box<Witness>),
    /// No counterexample among this many probes; not a proof.
    PassedProbes(usize),
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Refuted(w) => Some(w),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Proved => "proved",
            Verdict::Refuted(_) => "refuted",
            Verdict::PassedProbes(_) => "passed_probes",
        }
    }
}

/// The first way `x` fails the criterion, if any: the chain
/// `{E_(k+1)^c : k ∈ Ψ_x}` lies in `ℰ` with `A = max` on it, and
/// `A(x|E) ≥ max_{i∈E} x_i` on the rest of `ℰ`.
fn criterion_failure(x: &XVector, table: &[(Subset, Value)], ground: GroundSet) -> Option<(String, bool)> {
    let view = SortedView::new(x);
    for k in psi(x) {
        let c = view.upper_set(k + 1).complement(ground);
        match table.iter().find(|(e, _)| *e == c) {
            None => return Some((format!("chain set {c} is not in the collection"), true)),
            Some((_, a)) if *a != view.level(k) => {
                return Some((format!("A(x|{c}) = {a} differs from max = {}", view.level(k)), true))
            }
            _ => {}
        }
    }
    table.iter().find(|(e, a)| *a < x.max_on(*e)).map(|(e, a)| {
        (format!("A(x|{e}) = {a} is below max = {}", x.max_on(*e)), false)
    })
}

fn refute_with(x: &XVector, measure: MonotoneMeasure, fca: &Fca, tolerance: Option<Value>, reason: &str) -> Result<Option<Witness>> {
    let f = survival_standard(x, &measure, SurvivalMethod::SumForm)?;
    let g = gsf(x, &measure, fca, tolerance)?;
    Ok(step_compare(&g, &f).witness().map(|alpha| Witness {
        x: x.clone(),
        alpha,
        standard: f.eval(alpha),
        generalized: g.eval(alpha),
        measure,
        fca: fca.clone(),
        reason: reason.to_string(),
    }))
}

/// Decides whether `gsf(x, μ) = μ({x > ·})` for every monotone measure `μ`
/// on `2^[n]`, for this fixed `x` and family.
pub fn equality_for_all_measures(x: &XVector, fca: &Fca, tolerance: Option<Value>) -> Result<Verdict> {
    let ground = fca.ground();
    let table = fca.aggregate(x, tolerance)?;
    let Some((reason, chain_part)) = criterion_failure(x, &table, ground) else {
        return Ok(Verdict::Proved);
    };
    let m = psi(x).len() as u64;
    let chain: Vec<Value> = (0..m).map(|j| Value::from_integer(m - 1 - j)).collect();
    let mut candidates = vec![strict_binary_measure(ground)];
    if m > 1 {
        candidates.push(measure_from_max_levels(x, &chain)?);
        if !chain_part {
            candidates.reverse();
        }
    }
    for measure in candidates {
        if let Some(w) = refute_with(x, measure, fca, tolerance, &reason)? {
            return Ok(Verdict::Refuted(Box::new(w)));
        }
    }
    Err(Error::ConsistencyViolation(format!(
        "criterion fails at x = {x:?} ({reason}) but no separating measure was found"
    )))
}

/// As [`equality_for_all_measures`], for families nondecreasing in the
/// conditioning set, where the criterion reduces to `A = max` on all of
/// `ℰ` with the chain included. Both deciders are run and must agree.
pub fn equality_all_measures_monotone_fca(x: &XVector, fca: &Fca, tolerance: Option<Value>) -> Result<Verdict> {
    if let SetMonotonicity::Refuted { smaller, larger, a_smaller, a_larger, .. } =
        is_nondecreasing_wrt_sets(fca, std::slice::from_ref(x), tolerance)?
    {
        return Err(Error::NotMonotoneFamily(format!(
            "A(x|{smaller}) = {a_smaller} > {a_larger} = A(x|{larger})"
        )));
    }
    let ground = fca.ground();
    let table = fca.aggregate(x, tolerance)?;
    let view = SortedView::new(x);
    let chain_in = psi(x)
        .into_iter()
        .all(|k| fca.contains(view.upper_set(k + 1).complement(ground)));
    let direct = chain_in && table.iter().all(|(e, a)| *a == x.max_on(*e));
    let general = equality_for_all_measures(x, fca, tolerance)?;
    if direct != general.is_proved() {
        return Err(Error::ConsistencyViolation(format!(
            "reduced criterion says {direct} but the general decider says {} at x = {x:?}",
            general.name()
        )));
    }
    Ok(general)
}

/// The measure `μ(F) = c_k` with `k = min{k ∈ Ψ_x : x_(k) ≥ max_{i∉F} x_i}`.
///
/// `chain` lists `c_k` for `k ∈ Ψ_x` in ascending order. It must be
/// nonincreasing, end in 0, and start positive; then `μ(E_(k+1)) = c_k`.
pub fn measure_from_max_levels(x: &XVector, chain: &[Value]) -> Result<MonotoneMeasure> {
    let ground = GroundSet::new(x.len())?;
    let indices = psi(x);
    if chain.len() != indices.len() {
        return Err(Error::ValuesNotMonotone(format!(
            "expected {} chain values, got {}",
            indices.len(),
            chain.len()
        )));
    }
    if chain.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::ValuesNotMonotone("chain values must be nonincreasing".into()));
    }
    if chain.last().is_some_and(|c| c.is_positive()) {
        return Err(Error::ValuesNotMonotone("last chain value must be 0".into()));
    }
    if chain[0].is_zero() {
        return Err(Error::ValuesNotMonotone("first chain value must be positive".into()));
    }
    let view = SortedView::new(x);
    let table = ground
        .subsets()
        .map(|f| {
            let top = x.max_on(f.complement(ground));
            let pos = indices.iter().position(|&k| view.level(k) >= top).unwrap();
            chain[pos]
        })
        .collect();
    validate_measure(table, ground)
}

/// Which symbolic answer `max_family_check` can give for an operator.
enum Symbolic {
    EqualsMax,
    /// Vector and set with `A(x|E) ≠ max_{i∈E} x_i`.
    Differs(XVector, Subset),
    Unknown,
}

fn symbolic_max(op: &CaoDescriptor, ground: GroundSet) -> Symbolic {
    let n = ground.n();
    let unit = |i: usize| XVector::indicator(Subset::from_indices([i]), n);
    let single = |i: usize| Subset::from_indices([i]);
    match op {
        CaoDescriptor::Max => Symbolic::EqualsMax,
        CaoDescriptor::Sum | CaoDescriptor::PMean { .. } => {
            if n == 1 {
                Symbolic::EqualsMax
            } else {
                let pair = Subset::from_indices([0, 1]);
                let x = if matches!(op, CaoDescriptor::Sum) { XVector::indicator(pair, n) } else { unit(0) };
                Symbolic::Differs(x, pair)
            }
        }
        CaoDescriptor::WeightedMax { w, z } => {
            if let Some(i) = (0..n).find(|&i| w[i] != z[i]) {
                return Symbolic::Differs(unit(i), single(i));
            }
            match (0..n).find(|&i| z[i] < Value::ONE) {
                None => Symbolic::EqualsMax,
                Some(i) => {
                    let j = (0..n).find(|&j| z[j] == Value::ONE).unwrap();
                    Symbolic::Differs(unit(i), Subset::from_indices([i, j]))
                }
            }
        }
        CaoDescriptor::Choquet(m) | CaoDescriptor::Shilkret(m) => {
            match ground.subsets().skip(1).find(|e| m.get(*e) != Value::ONE) {
                None => Symbolic::EqualsMax,
                Some(e) => Symbolic::Differs(XVector::indicator(e, n), e),
            }
        }
        CaoDescriptor::Sugeno(m) => {
            let c = m.total() + Value::ONE;
            let mut x = vec![Value::ZERO; n];
            x[0] = c;
            Symbolic::Differs(XVector::new(x), single(0))
        }
        CaoDescriptor::EssSup(m) => match (0..n).find(|&i| is_null_set(m, single(i))) {
            None => Symbolic::EqualsMax,
            Some(i) => Symbolic::Differs(unit(i), single(i)),
        },
        CaoDescriptor::Size { size, family } => match size {
            SizeSpec::Sum => {
                if let Some(d) = family.iter().find(|d| d.len() >= 2) {
                    return Symbolic::Differs(XVector::indicator(*d, n), *d);
                }
                match (0..n).find(|&i| !family.contains(&single(i))) {
                    None => Symbolic::EqualsMax,
                    Some(i) => Symbolic::Differs(unit(i), single(i)),
                }
            }
            SizeSpec::CountNormalized(_) => match (0..n).find(|&i| !family.contains(&single(i))) {
                None => Symbolic::EqualsMax,
                Some(i) => Symbolic::Differs(unit(i), single(i)),
            },
            SizeSpec::Custom { .. } => Symbolic::Unknown,
        },
        CaoDescriptor::PerSet { .. } | CaoDescriptor::Custom(_) => Symbolic::Unknown,
    }
}

/// `x·1_E + a·1_{E^c}` with `a = max_E x + 1`: makes `E` a chain set.
fn lift(x: &XVector, e: Subset) -> XVector {
    let a = x.max_on(e) + Value::ONE;
    XVector::new(
        (0..x.len())
            .map(|i| if e.contains_index(i) { x.get(i) } else { a })
            .collect(),
    )
}

fn certificate(fca: &Fca, x: &XVector, e: Subset, tolerance: Option<Value>) -> Result<Option<Verdict>> {
    for candidate in [lift(x, e), x.clone()] {
        let verdict = equality_for_all_measures(&candidate, fca, tolerance)?;
        if let Verdict::Refuted(_) = verdict {
            return Ok(Some(verdict));
        }
    }
    Ok(None)
}

/// Decides whether `gsf = survival` for every vector and every monotone
/// measure. The collection must be the full power set; then this holds
/// exactly when `A(x|E) = max_{i∈E} x_i` throughout.
///
/// Built-in operators are decided symbolically and certified; custom
/// operators are probed on vectors over `probe_values`, at most `budget`
/// of them.
pub fn max_family_check(
    fca: &Fca,
    probe_values: &[Value],
    budget: usize,
    tolerance: Option<Value>,
) -> Result<Verdict> {
    if !fca.is_powerset() {
        return Err(Error::CollectionNotPowerset);
    }
    let ground = fca.ground();
    match symbolic_max(fca.op(), ground) {
        Symbolic::EqualsMax => Ok(Verdict::Proved),
        Symbolic::Differs(x, e) => {
            let a = fca.value(&x, e, tolerance)?;
            if a == x.max_on(e) {
                return Err(Error::ConsistencyViolation(format!(
                    "expected A(x|{e}) ≠ max at x = {x:?}"
                )));
            }
            certificate(fca, &x, e, tolerance)?.ok_or_else(|| {
                Error::ConsistencyViolation(format!("no certificate from x = {x:?}, E = {e}"))
            })
        }
        Symbolic::Unknown => {
            let mut values = if probe_values.is_empty() {
                vec![Value::ZERO, Value::ONE, Value::from_integer(2)]
            } else {
                probe_values.to_vec()
            };
            values.sort();
            values.dedup();
            let mut tested = 0;
            for x in grid_vectors(&values, ground.n()).take(budget) {
                tested += 1;
                let table = fca.aggregate(&x, tolerance)?;
                for (e, a) in table {
                    if a != x.max_on(e) {
                        if let Some(v) = certificate(fca, &x, e, tolerance)? {
                            return Ok(v);
                        }
                    }
                }
            }
            Ok(Verdict::PassedProbes(tested))
        }
    }
}

/// All vectors with components in `grid`, lexicographic with `x_1` most
/// significant.
pub fn grid_vectors(grid: &[Value], n: usize) -> impl Iterator<Item = XVector> + '_ {
    let total = grid.len().checked_pow(n as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut code| {
        let mut c = vec![Value::ZERO; n];
        for slot in c.iter_mut().rev() {
            *slot = grid[code % grid.len()];
            code /= grid.len();
        }
        XVector::new(c)
    })
}

/// Which measures a search draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MeasureClass {
    #[default]
    Monotone,
    /// `μ*`: 0 off the full set.
    Weakest,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub ground: GroundSet,
    pub vector_grid: Vec<Value>,
    pub measure_grid: Vec<Value>,
    pub budget: usize,
    pub seed: u64,
    pub class: MeasureClass,
    pub tolerance: Option<Value>,
}

/// All monotone measures with values in `grid`, or `None` if there are
/// more than `cap`.
pub fn enumerate_measures(ground: GroundSet, grid: &[Value], cap: usize) -> Option<Vec<MonotoneMeasure>> {
    let mut grid = grid.to_vec();
    grid.sort();
    grid.dedup();
    let len = ground.powerset_len();
    let mut out = Vec::new();
    let mut table = vec![Value::ZERO; len];
    fn rec(
        mask: usize,
        table: &mut Vec<Value>,
        grid: &[Value],
        ground: GroundSet,
        out: &mut Vec<MonotoneMeasure>,
        cap: usize,
    ) -> bool {
        if mask == table.len() {
            if table[mask - 1].is_positive() {
                out.push(validate_measure(table.clone(), ground).expect("built monotone"));
                return out.len() <= cap;
            }
            return true;
        }
        let floor = (0..ground.n())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| table[mask & !(1 << i)])
            .max()
            .unwrap_or(Value::ZERO);
        for &g in grid.iter().filter(|g| **g >= floor) {
            table[mask] = g;
            if !rec(mask + 1, table, grid, ground, out, cap) {
                return false;
            }
        }
        true
    }
    if len == 1 || !rec(1, &mut table, &grid, ground, &mut out, cap) {
        return None;
    }
    Some(out)
}

fn test_instance(family: &FamilySpec, x: &XVector, measure: MonotoneMeasure, cfg: &SearchConfig) -> Result<Option<Witness>> {
    let fca = family.instantiate(x, cfg.ground)?;
    refute_with(x, measure, &fca, cfg.tolerance, "survival functions differ")
}

/// Looks for `(x, μ)` separating the two survival functions. Exhaustive
/// (first witness in lexicographic order of `x`, then enumeration order of
/// `μ`) when the grids yield at most `budget` instances, otherwise
/// `budget` seeded random draws.
pub fn search_counterexample(family: &FamilySpec, cfg: &SearchConfig) -> Result<Verdict> {
    let n = cfg.ground.n();
    let mut vgrid = cfg.vector_grid.clone();
    vgrid.sort();
    vgrid.dedup();
    if vgrid.is_empty() {
        return Err(Error::GridInvalid("vector grid is empty".into()));
    }
    let positive: Vec<Value> = cfg.measure_grid.iter().copied().filter(Value::is_positive).collect();
    if positive.is_empty() {
        return Err(Error::GridInvalid("measure grid has no positive value".into()));
    }
    let vcount = vgrid.len().checked_pow(n as u32).unwrap_or(usize::MAX);
    let measures = match cfg.class {
        MeasureClass::Weakest => Some(
            positive
                .iter()
                .map(|t| weakest_measure(cfg.ground, *t))
                .collect::<Result<Vec<_>>>()?,
        ),
        MeasureClass::Monotone => enumerate_measures(cfg.ground, &cfg.measure_grid, cfg.budget),
    };
    if let Some(ms) = measures.filter(|ms| vcount.saturating_mul(ms.len()) <= cfg.budget) {
        let mut tested = 0;
        for x in grid_vectors(&vgrid, n) {
            for m in &ms {
                tested += 1;
                if let Some(w) = test_instance(family, &x, m.clone(), cfg)? {
                    return Ok(Verdict::Refuted(Box::new(w)));
                }
            }
        }
        return Ok(Verdict::PassedProbes(tested));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.budget {
        let x = XVector::new((0..n).map(|_| vgrid[rng.gen_range(0..vgrid.len())]).collect());
        let measure = match cfg.class {
            MeasureClass::Monotone => random_monotone_measure(cfg.ground, rng.gen(), &cfg.measure_grid)?,
            MeasureClass::Weakest => weakest_measure(cfg.ground, positive[rng.gen_range(0..positive.len())])?,
        };
        if let Some(w) = test_instance(family, &x, measure, cfg)? {
            return Ok(Verdict::Refuted(Box::new(w)));
        }
    }
    Ok(Verdict::PassedProbes(cfg.budget))
}

/// Whether `x` and `y` have the same generalized survival function.
pub fn indistinguishable(
    x: &XVector,
    y: &XVector,
    measure: &MonotoneMeasure,
    fca: &Fca,
    tolerance: Option<Value>,
) -> Result<bool> {
    Ok(gsf(x, measure, fca, tolerance)? == gsf(y, measure, fca, tolerance)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggops::{CollectionSpec, CustomOp};
    use crate::value::v;

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn xv(c: &[u64]) -> XVector {
        XVector::from_integers(c)
    }

    #[test]
    fn sum_on_two_points_is_refuted() {
        let fca = Fca::powerset(CaoDescriptor::Sum, g(2)).unwrap();
        let verdict = equality_for_all_measures(&xv(&[1, 2]), &fca, None).unwrap();
        let w = verdict.witness().expect("refuted");
        assert!(w.verify(None).unwrap());
        assert_ne!(w.standard, w.generalized);
    }

    #[test]
    fn max_is_proved_everywhere() {
        let fca = Fca::powerset(CaoDescriptor::Max, g(3)).unwrap();
        for x in grid_vectors(&[v("0"), v("1"), v("2")], 3) {
            assert_eq!(equality_for_all_measures(&x, &fca, None).unwrap(), Verdict::Proved);
            assert_eq!(equality_all_measures_monotone_fca(&x, &fca, None).unwrap(), Verdict::Proved);
        }
    }

    #[test]
    fn weighted_max_example() {
        let op = CaoDescriptor::WeightedMax {
            w: vec![v("0.5"), v("0.5"), v("1")],
            z: vec![v("0.5"), v("0.25"), v("1")],
        };
        let fca = Fca::powerset(op, g(3)).unwrap();
        assert_eq!(equality_for_all_measures(&xv(&[2, 3, 4]), &fca, None).unwrap(), Verdict::Proved);
        let verdict = equality_for_all_measures(&xv(&[2, 5, 4]), &fca, None).unwrap();
        let w = verdict.witness().unwrap();
        assert!(w.verify(None).unwrap());
        assert!(w.alpha >= v("4") && w.alpha < v("5"));
        assert!(equality_all_measures_monotone_fca(&xv(&[2, 3, 4]), &fca, None).is_err());
    }

    #[test]
    fn chain_collection_max_is_proved() {
        let spec = FamilySpec::new(CaoDescriptor::Max, CollectionSpec::Chain);
        for x in grid_vectors(&[v("0"), v("1"), v("3")], 3) {
            let fca = spec.instantiate(&x, g(3)).unwrap();
            assert!(equality_for_all_measures(&x, &fca, None).unwrap().is_proved());
        }
    }

    #[test]
    fn levels_measure() {
        let x = xv(&[2, 3, 4]);
        let chain = [v("1"), v("0.7"), v("0.7"), v("0")];
        let m = measure_from_max_levels(&x, &chain).unwrap();
        let view = SortedView::new(&x);
        for (j, k) in psi(&x).into_iter().enumerate() {
            assert_eq!(m.get(view.upper_set(k + 1)), chain[j]);
        }
        assert!(measure_from_max_levels(&x, &[v("1"), v("0.7"), v("0.8"), v("0")]).is_err());
        assert!(measure_from_max_levels(&x, &[v("1"), v("0.7"), v("0.7"), v("0.1")]).is_err());
        assert!(measure_from_max_levels(&x, &[v("1"), v("0")]).is_err());
        // the measure only sees max levels of complements
        let fca = Fca::powerset(CaoDescriptor::Max, g(3)).unwrap();
        let f = survival_standard(&x, &m, SurvivalMethod::SumForm).unwrap();
        assert_eq!(gsf(&x, &m, &fca, None).unwrap(), f);
    }

    #[test]
    fn below_max_off_chain_needs_levels_measure() {
        // A = max on the chain {∅,{1},{1,2},[3]} but A({2}) = 0
        let op = CaoDescriptor::PerSet {
            default: Box::new(CaoDescriptor::Max),
            cases: [(Subset::singleton(2), CaoDescriptor::Custom(CustomOp::new("zero", |_, _| Value::ZERO)))]
                .into_iter()
                .collect(),
        };
        let fca = Fca::powerset(op, g(3)).unwrap();
        let verdict = equality_for_all_measures(&xv(&[2, 3, 4]), &fca, None).unwrap();
        let w = verdict.witness().unwrap();
        assert!(w.verify(None).unwrap());
        assert!(w.generalized < w.standard);
    }

    #[test]
    fn symbolic_max_family() {
        let n = g(3);
        let proved = |op: CaoDescriptor| {
            max_family_check(&Fca::powerset(op, n).unwrap(), &[], 10, Some(v("1e-9"))).unwrap()
        };
        assert_eq!(proved(CaoDescriptor::Max), Verdict::Proved);
        let ones = vec![Value::ONE; 3];
        assert_eq!(proved(CaoDescriptor::WeightedMax { w: ones.clone(), z: ones }), Verdict::Proved);
        for op in [
            CaoDescriptor::Sum,
            CaoDescriptor::PMean { p: v("2") },
            CaoDescriptor::WeightedMax {
                w: vec![v("0.5"), v("0.5"), v("1")],
                z: vec![v("0.5"), v("0.25"), v("1")],
            },
            CaoDescriptor::WeightedMax {
                w: vec![v("0.5"), v("1"), v("1")],
                z: vec![v("0.5"), v("1"), v("1")],
            },
            CaoDescriptor::Sugeno(crate::setfun::counting_measure(n)),
            CaoDescriptor::Choquet(crate::setfun::counting_measure(n)),
            CaoDescriptor::EssSup(
                MonotoneMeasure::from_fn(n, |e| if e.contains(1) { Value::ONE } else { Value::ZERO }).unwrap(),
            ),
            CaoDescriptor::Size { size: SizeSpec::Sum, family: n.subsets().collect() },
            CaoDescriptor::Size { size: SizeSpec::Sum, family: vec![Subset::singleton(1)] },
        ] {
            let verdict = proved(op.clone());
            let w = verdict.witness().unwrap_or_else(|| panic!("{op:?}"));
            assert!(w.verify(Some(v("1e-9"))).unwrap(), "{op:?}");
        }
        let normalized = crate::setfun::MonotoneMeasure::from_fn(n, |e| {
            if e.is_empty() { Value::ZERO } else { Value::ONE }
        })
        .unwrap();
        assert_eq!(proved(CaoDescriptor::Choquet(normalized.clone())), Verdict::Proved);
        assert_eq!(proved(CaoDescriptor::Shilkret(normalized)), Verdict::Proved);
        assert_eq!(proved(CaoDescriptor::EssSup(crate::setfun::counting_measure(n))), Verdict::Proved);
        assert_eq!(proved(CaoDescriptor::EssSup(weakest_measure(n, v("1")).unwrap())), Verdict::Proved);
        let singles: Vec<Subset> = (1..=3).map(Subset::singleton).collect();
        assert_eq!(
            proved(CaoDescriptor::Size { size: SizeSpec::Sum, family: singles.clone() }),
            Verdict::Proved
        );
        assert_eq!(
            proved(CaoDescriptor::Size { size: SizeSpec::CountNormalized(v("2")), family: singles }),
            Verdict::Proved
        );
        assert_eq!(proved_one_point(), Verdict::Proved);
    }

    fn proved_one_point() -> Verdict {
        max_family_check(&Fca::powerset(CaoDescriptor::Sum, g(1)).unwrap(), &[], 10, None).unwrap()
    }

    #[test]
    fn max_family_probing() {
        let n = g(2);
        let max_like = CaoDescriptor::Custom(CustomOp::new("max", |x, b| x.max_on(b)));
        let fca = Fca::powerset(max_like, n).unwrap();
        assert_eq!(max_family_check(&fca, &[], 100, None).unwrap(), Verdict::PassedProbes(9));
        let doubled = CaoDescriptor::Custom(CustomOp::new("2max", |x, b| x.max_on(b) + x.max_on(b)));
        let fca = Fca::powerset(doubled, n).unwrap();
        let verdict = max_family_check(&fca, &[], 100, None).unwrap();
        assert!(verdict.witness().unwrap().verify(None).unwrap());
        let chain = Fca::new(CaoDescriptor::Max, vec![Subset::EMPTY, n.full()], n).unwrap();
        assert_eq!(max_family_check(&chain, &[], 10, None), Err(Error::CollectionNotPowerset));
    }

    #[test]
    fn measure_enumeration() {
        let ms = enumerate_measures(g(1), &[v("0"), v("1")], 100).unwrap();
        assert_eq!(ms.len(), 1);
        let ms = enumerate_measures(g(2), &[v("0"), v("1")], 100).unwrap();
        // μ({1}), μ({2}) ∈ {0,1} free, μ([2]) = 1
        assert_eq!(ms.len(), 4);
        assert!(enumerate_measures(g(3), &[v("0"), v("0.5"), v("1")], 10).is_none());
    }

    #[test]
    fn search_finds_sum_counterexample() {
        let spec = FamilySpec::new(CaoDescriptor::Sum, CollectionSpec::Powerset);
        let cfg = SearchConfig {
            ground: g(2),
            vector_grid: vec![v("0"), v("1")],
            measure_grid: vec![v("0"), v("1")],
            budget: 1000,
            seed: 1,
            class: MeasureClass::Monotone,
            tolerance: None,
        };
        let verdict = search_counterexample(&spec, &cfg).unwrap();
        let w = verdict.witness().unwrap();
        assert!(w.verify(None).unwrap());
        assert_eq!(w.x, xv(&[1, 1]));
        let max = FamilySpec::new(CaoDescriptor::Max, CollectionSpec::Powerset);
        assert_eq!(search_counterexample(&max, &cfg).unwrap(), Verdict::PassedProbes(16));
        let random = SearchConfig { budget: 5, ..cfg };
        assert_eq!(search_counterexample(&max, &random).unwrap(), Verdict::PassedProbes(5));
    }

    #[test]
    fn indistinguishable_vectors() {
        let fca = Fca::powerset(CaoDescriptor::Max, g(2)).unwrap();
        let m = crate::setfun::counting_measure(g(2));
        assert!(indistinguishable(&xv(&[1, 2]), &xv(&[1, 2]), &m, &fca, None).unwrap());
        assert!(indistinguishable(&xv(&[1, 2]), &xv(&[2, 1]), &m, &fca, None).unwrap());
        let w = weakest_measure(g(2), v("1")).unwrap();
        assert!(indistinguishable(&xv(&[1, 3]), &xv(&[1, 2]), &w, &fca, None).unwrap());
        assert!(!indistinguishable(&xv(&[1, 3]), &xv(&[3, 3]), &w, &fca, None).unwrap());
    }
}
