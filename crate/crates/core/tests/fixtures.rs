use std::path::PathBuf;

use survive::conditions::{compare_survival, ConditionKind, Instance};
use survive::io::{emit, load_problem, parse_problem, problem_json, ProblemSpec};
use survive::value::v;
use survive::{gsf, survival_standard, Fca, StepFn, Subset, SurvivalMethod};

fn fixture_paths() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    paths
}

fn load(name: &str) -> (ProblemSpec, Fca) {
    let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let spec = load_problem(&path).unwrap();
    let fca = spec.family.instantiate(spec.x().unwrap(), spec.ground).unwrap();
    (spec, fca)
}

fn step(pieces: &[(&str, &str)]) -> StepFn {
    StepFn::from_pieces(pieces.iter().map(|(a, b)| (v(a), v(b)))).unwrap()
}

#[test]
fn every_fixture_round_trips() {
    let paths = fixture_paths();
    assert_eq!(paths.len(), 9);
    for path in paths {
        let spec = load_problem(path.to_str().unwrap()).unwrap();
        let text = emit(&problem_json(&spec).unwrap());
        assert_eq!(parse_problem(&text).unwrap(), spec, "{}", path.display());
    }
}

#[test]
fn sc_example_matches_and_has_the_expected_witnesses() {
    let (spec, fca) = load("sc_example");
    let (x, mu) = (spec.x().unwrap(), spec.measure().unwrap());
    let expected = step(&[("0", "1"), ("1", "0.5"), ("3", "0")]);
    assert_eq!(survival_standard(x, mu, SurvivalMethod::MinForm).unwrap(), expected);
    assert_eq!(gsf(x, mu, &fca, None).unwrap(), expected);
    let r = Instance::new(x, mu, &fca, None).unwrap().check(ConditionKind::C1);
    assert!(r.holds);
    let witnesses: Vec<(usize, Subset)> = r.witnesses.into_iter().collect();
    assert_eq!(
        witnesses,
        vec![(0, Subset::EMPTY), (2, Subset::from_elements([3])), (3, Subset::from_elements([2]))]
    );
}

#[test]
fn example_is_equal_although_c1_fails() {
    let (spec, fca) = load("example");
    let (x, mu) = (spec.x().unwrap(), spec.measure().unwrap());
    let expected = step(&[("0", "1"), ("2", "0.7"), ("4", "0")]);
    assert_eq!(gsf(x, mu, &fca, None).unwrap(), expected);
    assert_eq!(survival_standard(x, mu, SurvivalMethod::PsiForm).unwrap(), expected);
    let r = Instance::new(x, mu, &fca, None).unwrap().check(ConditionKind::C1);
    assert!(!r.holds);
    assert_eq!(r.violation.unwrap().index, 2);
}

#[test]
fn ex_main_differs_only_under_nu() {
    let (spec, fca) = load("ex_main_mu");
    let verdict = compare_survival(spec.x().unwrap(), spec.measure().unwrap(), &fca, None).unwrap();
    assert!(verdict.relation.is_equal());

    let (spec, fca) = load("ex_main_nu");
    let verdict = compare_survival(spec.x().unwrap(), spec.measure().unwrap(), &fca, None).unwrap();
    let diff = verdict.generalized.difference(&verdict.standard).unwrap();
    assert_eq!(diff, step(&[("0", "0"), ("1", "0.5"), ("2", "0")]));
}

#[test]
fn restricted_collection_reproduces_survival() {
    let (spec, fca) = load("lm_collection");
    assert_eq!(fca.collection().len(), 3);
    let (x, mu) = (spec.x().unwrap(), spec.measure().unwrap());
    let expected = step(&[("0", "1"), ("1", "0.5"), ("2", "0")]);
    assert_eq!(gsf(x, mu, &fca, None).unwrap(), expected);
    assert_eq!(survival_standard(x, mu, SurvivalMethod::SumForm).unwrap(), expected);
}

#[test]
fn worked_fixtures_agree_with_brute_force() {
    for name in ["worked_max", "worked_sum"] {
        let (spec, fca) = load(name);
        let (x, mu) = (spec.x().unwrap(), spec.measure().unwrap());
        let table = fca.aggregate(x, None).unwrap();
        let f = gsf(x, mu, &fca, None).unwrap();
        for k in 0..40 {
            let alpha = survive::Value::ratio(k, 4).unwrap();
            let brute = table
                .iter()
                .filter(|(_, a)| *a <= alpha)
                .map(|(e, _)| mu.get(e.complement(spec.ground)))
                .min()
                .unwrap();
            assert_eq!(f.eval(alpha), brute, "{name} at {alpha}");
        }
    }
}
