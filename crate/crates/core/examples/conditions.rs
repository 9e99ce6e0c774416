// Every equality condition on two fixtures: one where the existential
// condition holds with explicit witnesses, one where it fails although
// the two functions coincide.

use survive::conditions::{ConditionKind, Instance};
use survive::io::load_problem;

pub fn run() -> survive::Result<()> {
    for name in ["sc_example", "example"] {
        let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let spec = load_problem(&path)?;
        let x = spec.x()?;
        let fca = spec.family.instantiate(x, spec.ground)?;
        let inst = Instance::new(x, spec.measure()?, &fca, None)?;
        println!("{name}: x = {x:?}");
        for kind in ConditionKind::ALL {
            let r = inst.check(kind);
            let detail = match (r.holds, r.violation) {
                (true, _) if !r.witnesses.is_empty() => {
                    let w: Vec<String> = r.witnesses.iter().map(|(k, e)| format!("G{k}={e}")).collect();
                    w.join(" ")
                }
                (false, Some(viol)) => format!("fails at k={}", viol.index),
                _ => String::new(),
            };
            println!("  {:<4} {:<5} {detail}", kind.name(), r.holds);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> survive::Result<()> {
    run()
}
