// SVG output: a step plot with both survival functions overlaid and the
// two-axis link diagram, written to the system temp directory.

use std::path::PathBuf;

use survive::io::load_problem;
use survive::render::{diagram_model, render_parallel_diagram, render_step_svg};
use survive::{gsf, survival_standard, SurvivalMethod};

pub fn run() -> survive::Result<Vec<PathBuf>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/worked_sum.json");
    let spec = load_problem(path)?;
    let (x, mu) = (spec.x()?, spec.measure()?);
    let fca = spec.family.instantiate(x, spec.ground)?;

    let standard = survival_standard(x, mu, SurvivalMethod::default())?;
    let generalized = gsf(x, mu, &fca, None)?;
    let plot = render_step_svg(&standard, Some(&generalized), "standard vs generalized");
    let links = render_parallel_diagram(&diagram_model(x, mu, &fca, None)?, "sum over all subsets");

    let dir = std::env::temp_dir();
    let mut written = Vec::new();
    for (name, svg) in [("survive_plot.svg", plot), ("survive_diagram.svg", links)] {
        let out = dir.join(name);
        std::fs::write(&out, svg)?;
        println!("wrote {}", out.display());
        written.push(out);
    }
    Ok(written)
}

#[allow(dead_code)]
fn main() -> survive::Result<()> {
    run().map(|_| ())
}
