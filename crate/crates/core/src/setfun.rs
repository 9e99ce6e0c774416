//! Ground sets, subsets as bitmasks, and monotone measures on the full power set.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::value::Value;

/// Largest supported ground set; dense measure tables hold `2^n` entries.
pub const MAX_N: usize = 24;

/// The ground set `[n] = {1, …, n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSet(usize);

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::GroundSetSize { n, max: MAX_N });
        }
        Ok(GroundSet(n))
    }

    pub fn n(&self) -> usize {
        self.0
    }

    /// Number of subsets, `2^n`.
    pub fn powerset_len(&self) -> usize {
        1usize << self.0
    }

    pub fn full(&self) -> Subset {
        Subset((1u32 << self.0) - 1)
    }

    /// All subsets in increasing bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> + Clone {
        (0..self.powerset_len() as u32).map(Subset)
    }

    pub fn contains(&self, s: Subset) -> bool {
        s.0 & !self.full().0 == 0
    }

    pub fn check(&self, s: Subset) -> Result<Subset> {
        if self.contains(s) {
            Ok(s)
        } else {
            Err(Error::SubsetOutOfRange { bits: s.0, n: self.0 })
        }
    }
}

/// A subset of `[n]`; bit `i-1` is set iff element `i` belongs to it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn bits(&self) -> u32 {
        self.0
    }

    /// `{i}` for a 1-based element `i`.
    pub fn singleton(i: usize) -> Subset {
        debug_assert!((1..=MAX_N).contains(&i));
        Subset(1 << (i - 1))
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        elements
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.with(i))
    }

    /// Builds a subset from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        Subset(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// Membership of a 1-based element.
    pub fn contains(&self, i: usize) -> bool {
        self.contains_index(i - 1)
    }

    /// Membership of a 0-based index.
    pub fn contains_index(&self, idx: usize) -> bool {
        self.0 >> idx & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn is_subset_of(&self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, ground: GroundSet) -> Subset {
        Subset(!self.0 & ground.full().0)
    }

    /// 0-based indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// 1-based elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        self.indices().map(|i| i + 1)
    }

    /// Parses `{1,3}` or `{}`, rejecting elements outside `[n]`.
    pub fn parse(s: &str, ground: GroundSet) -> Result<Subset> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::parse("", format!("subset key must look like {{1,3}}: {s:?}")))?;
        let mut out = Subset::EMPTY;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i: usize = part
                .parse()
                .map_err(|_| Error::parse("", format!("bad element {part:?} in {s:?}")))?;
            if i == 0 || i > ground.n() {
                return Err(Error::parse(
                    "",
                    format!("element {i} outside [1, {}] in {s:?}", ground.n()),
                ));
            }
            out = out.with(i);
        }
        Ok(out)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monotone measure on `2^[n]`: `μ(∅) = 0`, `μ([n]) > 0`, nondecreasing
/// under inclusion. Immutable once validated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMeasure {
    ground: GroundSet,
    table: Vec<Value>,
}

impl MonotoneMeasure {
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.n()
    }

    pub fn get(&self, e: Subset) -> Value {
        self.table[e.0 as usize]
    }

    /// Values in bitmask order.
    pub fn table(&self) -> &[Value] {
        &self.table
    }

    pub fn total(&self) -> Value {
        self.get(self.ground.full())
    }

    /// Builds from a function of the subset, validating the result.
    pub fn from_fn(ground: GroundSet, f: impl Fn(Subset) -> Value) -> Result<Self> {
        validate_measure(ground.subsets().map(f).collect(), ground)
    }
}

impl fmt::Debug for MonotoneMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.ground.subsets().map(|s| (s, self.get(s))))
            .finish()
    }
}

/// Validates a raw table indexed by bitmask.
pub fn validate_measure(raw_table: Vec<Value>, ground: GroundSet) -> Result<MonotoneMeasure> {
    if raw_table.len() != ground.powerset_len() {
        return Err(Error::WrongLength {
            expected: ground.powerset_len(),
            found: raw_table.len(),
        });
    }
    if raw_table[0].is_positive() {
        return Err(Error::EmptySetNonzero);
    }
    if !raw_table[ground.full().0 as usize].is_positive() {
        return Err(Error::TotalNotPositive);
    }
    // covering pairs E ⊂ E ∪ {i} suffice by transitivity
    for e in ground.subsets() {
        for i in 1..=ground.n() {
            if e.contains(i) {
                continue;
            }
            let f = e.with(i);
            if raw_table[e.0 as usize] > raw_table[f.0 as usize] {
                return Err(Error::NotMonotone {
                    smaller: e,
                    larger: f,
                });
            }
        }
    }
    Ok(MonotoneMeasure {
        ground,
        table: raw_table,
    })
}

/// `μ*(E) = total` for `E = [n]`, 0 otherwise.
pub fn weakest_measure(ground: GroundSet, total: Value) -> Result<MonotoneMeasure> {
    if !total.is_positive() {
        return Err(Error::TotalNotPositive);
    }
    let full = ground.full();
    MonotoneMeasure::from_fn(ground, |e| if e == full { total } else { Value::ZERO })
}

pub fn counting_measure(ground: GroundSet) -> MonotoneMeasure {
    MonotoneMeasure::from_fn(ground, |e| Value::from_integer(e.len() as u64))
        .expect("counting measure is monotone")
}

/// Additive measure with the given singleton weights.
pub fn additive_measure(weights: &[Value]) -> Result<MonotoneMeasure> {
    let ground = GroundSet::new(weights.len())?;
    MonotoneMeasure::from_fn(ground, |e| e.indices().map(|i| weights[i]).sum())
}

/// `μ(E) = Σ_{i∈E} 2^{i-1}`, which is injective on `2^[n]`.
pub fn strict_binary_measure(ground: GroundSet) -> MonotoneMeasure {
    MonotoneMeasure::from_fn(ground, |e| Value::from_integer(e.bits() as u64))
        .expect("binary weights are monotone")
}

/// True iff `μ` takes pairwise distinct values on `sets`.
pub fn is_strictly_monotone_on(measure: &MonotoneMeasure, sets: &[Subset]) -> bool {
    let mut seen: Vec<(Value, Subset)> = sets.iter().map(|&s| (measure.get(s), s)).collect();
    seen.sort();
    seen.dedup_by_key(|(_, s)| *s);
    seen.windows(2).all(|w| w[0].0 != w[1].0)
}

/// `N` is null iff `m(E ∪ N) = m(E)` for every `E`.
pub fn is_null_set(measure: &MonotoneMeasure, null: Subset) -> bool {
    measure
        .ground()
        .subsets()
        .all(|e| measure.get(e.union(null)) == measure.get(e))
}

/// Deterministic random measure with values drawn from `grid`.
///
/// Subsets are visited in increasing bitmask order, so every covered subset
/// `E \ {i}` is assigned before `E`; each value is drawn from the grid
/// points not below the largest covered value.
pub fn random_monotone_measure(
    ground: GroundSet,
    seed: u64,
    grid: &[Value],
) -> Result<MonotoneMeasure> {
    let mut grid = grid.to_vec();
    grid.sort();
    grid.dedup();
    if grid.first() != Some(&Value::ZERO) {
        return Err(Error::GridInvalid("grid must contain 0".into()));
    }
    if grid.len() < 2 {
        return Err(Error::GridInvalid(
            "grid must contain a positive value".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = ground.full();
    let mut table = vec![Value::ZERO; ground.powerset_len()];
    for e in ground.subsets().skip(1) {
        let mut lower = e
            .indices()
            .map(|i| table[(e.0 & !(1 << i)) as usize])
            .max()
            .unwrap_or(Value::ZERO);
        if e == full && lower.is_zero() {
            lower = grid[1];
        }
        let start = grid.partition_point(|g| *g < lower);
        table[e.0 as usize] = grid[rng.gen_range(start..grid.len())];
    }
    validate_measure(table, ground)
}
