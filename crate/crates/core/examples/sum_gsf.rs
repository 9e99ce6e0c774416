// Generalized survival function with the sum operator over all subsets,
// next to the standard one, plus the link table it is read from.

use survive::io::load_problem;
use survive::render::diagram_model;
use survive::{gsf, step_compare, survival_standard, Fca, SurvivalMethod};

pub fn run() -> survive::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/worked_sum.json");
    let spec = load_problem(path)?;
    let (x, mu) = (spec.x()?, spec.measure()?);
    let fca: Fca = spec.family.instantiate(x, spec.ground)?;

    let standard = survival_standard(x, mu, SurvivalMethod::default())?;
    let generalized = gsf(x, mu, &fca, None)?;
    println!("standard:    {standard:?}");
    println!("generalized: {generalized:?}");
    println!("order:       {:?}", step_compare(&generalized, &standard));

    println!("\n{:>10} {:>8} {:>8}", "E", "A(x|E)", "mu(E^c)");
    for row in diagram_model(x, mu, &fca, None)?.rows {
        println!("{:>10} {:>8} {:>8}", row.set.to_string(), row.lower.to_string(), row.upper.to_string());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> survive::Result<()> {
    run()
}
