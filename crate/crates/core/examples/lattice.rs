// The full implication lattice evaluated on one instance where the two
// survival functions differ.

use survive::cli::lattice_table;
use survive::conditions::{condition_lattice_check, ConditionKind};
use survive::io::load_problem;

pub fn run() -> survive::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/ex_main_nu.json");
    let spec = load_problem(path)?;
    let x = spec.x()?;
    let fca = spec.family.instantiate(x, spec.ground)?;
    let report = condition_lattice_check(x, spec.measure()?, &fca, None)?;
    print!("{}", lattice_table(&report));
    assert!(report.truth[&ConditionKind::C2] && !report.truth[&ConditionKind::C3]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> survive::Result<()> {
    run()
}
