// Survival function of a three-component vector under a tabulated
// measure, computed by each of the four equivalent formulas.
//
//     cargo run --example survival_formulas

use survive::setfun::validate_measure;
use survive::value::v;
use survive::{survival_standard, GroundSet, SurvivalMethod, XVector};

pub fn run() -> survive::Result<()> {
    let ground = GroundSet::new(3)?;
    let x = XVector::from_integers(&[2, 3, 4]);
    // bitmask order: {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}
    let table = ["0", "0.25", "0.25", "0.75", "0.4", "0.75", "0.75", "1"];
    let mu = validate_measure(table.iter().map(|s| v(s)).collect(), ground)?;

    let reference = survival_standard(&x, &mu, SurvivalMethod::MinForm)?;
    for method in SurvivalMethod::ALL {
        let f = survival_standard(&x, &mu, method)?;
        assert_eq!(f, reference);
        println!("{:>8}: {:?}", method.name(), f);
    }
    println!("value at 2.5: {}", reference.eval(v("2.5")));
    Ok(())
}

#[allow(dead_code)]
fn main() -> survive::Result<()> {
    run()
}
