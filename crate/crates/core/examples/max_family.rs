// Which operator families reproduce the standard survival function for
// every vector and every measure.

use survive::aggops::CaoDescriptor;
use survive::aggops::CustomOp;
use survive::characterize::max_family_check;
use survive::value::v;
use survive::{Fca, GroundSet, Value};

pub fn run() -> survive::Result<()> {
    let ground = GroundSet::new(3)?;
    let probes = [v("0"), v("1"), v("2")];
    // max of the first two listed coordinates only; not the max on E
    let truncated = CustomOp::new("first_two_max", |x, e| {
        e.indices().take(2).map(|i| x.get(i)).max().unwrap_or(Value::ZERO)
    });
    let ops = [
        CaoDescriptor::Max,
        CaoDescriptor::Sum,
        CaoDescriptor::WeightedMax { w: vec![Value::ONE; 3], z: vec![Value::ONE; 3] },
        CaoDescriptor::WeightedMax { w: vec![v("0.5"); 3], z: vec![Value::ONE; 3] },
        CaoDescriptor::Custom(truncated),
    ];
    for op in ops {
        let name = op.kind_name();
        let fca = Fca::powerset(op, ground)?;
        let verdict = max_family_check(&fca, &probes, 10_000, None)?;
        print!("{name:>14}: {}", verdict.name());
        if let Some(w) = verdict.witness() {
            print!("  (x = {:?}, alpha = {})", w.x, w.alpha);
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> survive::Result<()> {
    run()
}
