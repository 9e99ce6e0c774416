// Seeded counterexample search over a grid of vectors and measures.

use survive::aggops::{CaoDescriptor, CollectionSpec, FamilySpec};
use survive::characterize::{search_counterexample, MeasureClass, SearchConfig};
use survive::value::v;
use survive::GroundSet;

pub fn run() -> survive::Result<()> {
    let cfg = SearchConfig {
        ground: GroundSet::new(3)?,
        vector_grid: ["0", "1", "2", "3"].map(v).to_vec(),
        measure_grid: ["0", "0.5", "1"].map(v).to_vec(),
        budget: 10_000,
        seed: 42,
        class: MeasureClass::Monotone,
        tolerance: None,
    };
    for (op, collection) in [
        (CaoDescriptor::Sum, CollectionSpec::Powerset),
        (CaoDescriptor::Max, CollectionSpec::Powerset),
        (CaoDescriptor::Sum, CollectionSpec::Chain),
    ] {
        let label = format!("{} over {:?}", op.kind_name(), collection);
        let verdict = search_counterexample(&FamilySpec::new(op, collection), &cfg)?;
        match verdict.witness() {
            Some(w) => println!("{label}: refuted at x = {:?}, alpha = {}", w.x, w.alpha),
            None => println!("{label}: {}", verdict.name()),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> survive::Result<()> {
    run()
}
