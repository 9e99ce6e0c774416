// Deciding equality for every measure at once: proved for one vector,
// refuted with a concrete measure for another.

use survive::characterize::equality_for_all_measures;
use survive::io::load_problem;

pub fn run() -> survive::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/pr_vektor_y.json");
    let spec = load_problem(path)?;
    for x in [spec.x()?, spec.y.as_ref().unwrap()] {
        let fca = spec.family.instantiate(x, spec.ground)?;
        let verdict = equality_for_all_measures(x, &fca, None)?;
        println!("{x:?}: {}", verdict.name());
        if let Some(w) = verdict.witness() {
            println!("  measure   {:?}", w.measure.table().iter().map(|v| v.to_string()).collect::<Vec<_>>());
            println!("  at alpha  {}: standard {} vs generalized {}", w.alpha, w.standard, w.generalized);
            println!("  reason    {}", w.reason);
            assert!(w.verify(None)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> survive::Result<()> {
    run()
}
