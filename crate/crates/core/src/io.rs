//! JSON problem files and report serialization.
//!
//! Numbers may be written as JSON numbers or as strings (`"0.25"`, `"1/3"`).
//! Subsets are strings such as `"{1,3}"` or `"{}"`. A measure is either an
//! array of `2^n` values in bitmask order (bit `i-1` set when `i ∈ E`) or an
//! object keyed by subsets; it is always written as an array.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value as Json};

use crate::aggops::{CaoDescriptor, CollectionSpec, FamilySpec, SizeSpec, XVector};
use crate::characterize::{MeasureClass, SearchConfig, Verdict, Witness};
use crate::conditions::{ComparisonVerdict, ConditionReport, LatticeReport};
use crate::error::{Error, Result};
use crate::setfun::{validate_measure, GroundSet, MonotoneMeasure, Subset};
use crate::survival::{StepFn, StepOrder, SurvivalMethod};
use crate::value::Value;

/// Evaluation options shared by all commands.
#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    pub tolerance: Option<Value>,
    pub seed: u64,
    pub budget: usize,
    pub method: SurvivalMethod,
    pub vector_grid: Vec<Value>,
    pub measure_grid: Vec<Value>,
    pub probe_values: Vec<Value>,
    pub measure_class: MeasureClass,
}

impl Default for Options {
    fn default() -> Self {
        let ints = |k: &[u64]| k.iter().map(|&i| Value::from_integer(i)).collect();
        Options {
            tolerance: None,
            seed: 0,
            budget: 10_000,
            method: SurvivalMethod::default(),
            vector_grid: ints(&[0, 1, 2, 3]),
            measure_grid: vec![Value::ZERO, Value::ratio(1, 2).unwrap(), Value::ONE],
            probe_values: ints(&[0, 1, 2]),
            measure_class: MeasureClass::Monotone,
        }
    }
}

/// One problem instance as loaded from JSON.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    pub ground: GroundSet,
    pub x: Option<XVector>,
    pub y: Option<XVector>,
    pub measure: Option<MonotoneMeasure>,
    pub measure2: Option<MonotoneMeasure>,
    pub family: FamilySpec,
    pub options: Options,
}

impl ProblemSpec {
    pub fn x(&self) -> Result<&XVector> {
        self.x.as_ref().ok_or_else(|| Error::Usage("problem has no \"x\"".into()))
    }

    pub fn measure(&self) -> Result<&MonotoneMeasure> {
        self.measure.as_ref().ok_or_else(|| Error::Usage("problem has no \"measure\"".into()))
    }

    pub fn search_config(&self) -> SearchConfig {
        SearchConfig {
            ground: self.ground,
            vector_grid: self.options.vector_grid.clone(),
            measure_grid: self.options.measure_grid.clone(),
            budget: self.options.budget,
            seed: self.options.seed,
            class: self.options.measure_class,
            tolerance: self.options.tolerance,
        }
    }
}

/// Reads a problem from a path, `-` meaning standard input.
pub fn load_problem(path: &str) -> Result<ProblemSpec> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?
    };
    parse_problem(&text)
}

pub fn parse_problem(text: &str) -> Result<ProblemSpec> {
    let doc: Json = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    let obj = doc.as_object().ok_or_else(|| Error::parse("$", "expected an object"))?;
    let n = obj
        .get("n")
        .and_then(Json::as_u64)
        .ok_or_else(|| Error::parse("n", "expected a positive integer"))?;
    let ground = GroundSet::new(n as usize)?;
    let vector = |key: &str| obj.get(key).map(|j| parse_vector(j, ground, key)).transpose();
    let measure = |key: &str| obj.get(key).map(|j| parse_measure(j, ground, key)).transpose();
    let op = match obj.get("op") {
        Some(j) => parse_descriptor(j, ground, "op")?,
        None => CaoDescriptor::Max,
    };
    let collection = match obj.get("collection") {
        Some(j) => parse_collection(j, ground, "collection")?,
        None => CollectionSpec::Powerset,
    };
    let options = match obj.get("options") {
        Some(j) => parse_options(j)?,
        None => Options::default(),
    };
    Ok(ProblemSpec {
        ground,
        x: vector("x")?,
        y: vector("y")?,
        measure: measure("measure")?,
        measure2: measure("measure2")?,
        family: FamilySpec::new(op, collection),
        options,
    })
}

pub fn parse_value(j: &Json, loc: &str) -> Result<Value> {
    let text = match j {
        Json::String(s) => s.clone(),
        Json::Number(num) => num.to_string(),
        _ => return Err(Error::parse(loc, "expected a number")),
    };
    text.parse::<Value>().map_err(|e| e.at(loc))
}

fn parse_values(j: &Json, loc: &str) -> Result<Vec<Value>> {
    let arr = j.as_array().ok_or_else(|| Error::parse(loc, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, e)| parse_value(e, &format!("{loc}[{i}]")))
        .collect()
}

pub fn parse_vector(j: &Json, ground: GroundSet, loc: &str) -> Result<XVector> {
    let values = parse_values(j, loc)?;
    let x = XVector::new(values);
    x.check_len(ground)?;
    Ok(x)
}

fn parse_subset(j: &Json, ground: GroundSet, loc: &str) -> Result<Subset> {
    let s = j.as_str().ok_or_else(|| Error::parse(loc, "expected a subset string like \"{1,3}\""))?;
    Subset::parse(s, ground).map_err(|e| e.at(loc))
}

fn parse_subsets(j: &Json, ground: GroundSet, loc: &str) -> Result<Vec<Subset>> {
    let arr = j.as_array().ok_or_else(|| Error::parse(loc, "expected an array of subsets"))?;
    arr.iter()
        .enumerate()
        .map(|(i, e)| parse_subset(e, ground, &format!("{loc}[{i}]")))
        .collect()
}

pub fn parse_measure(j: &Json, ground: GroundSet, loc: &str) -> Result<MonotoneMeasure> {
    let table = match j {
        Json::Array(_) => parse_values(j, loc)?,
        Json::Object(map) => {
            let mut table: Vec<Option<Value>> = vec![None; ground.powerset_len()];
            for (key, val) in map {
                let e = Subset::parse(key, ground).map_err(|e| e.at(&format!("{loc}.{key}")))?;
                table[e.bits() as usize] = Some(parse_value(val, &format!("{loc}.{key}"))?);
            }
            let missing = table.iter().filter(|t| t.is_none()).count();
            if missing > 0 {
                return Err(Error::WrongLength {
                    expected: ground.powerset_len(),
                    found: ground.powerset_len() - missing,
                });
            }
            table.into_iter().map(Option::unwrap).collect()
        }
        _ => return Err(Error::parse(loc, "expected an array or an object")),
    };
    validate_measure(table, ground)
}

fn field<'a>(obj: &'a Map<String, Json>, key: &str, loc: &str) -> Result<&'a Json> {
    obj.get(key).ok_or_else(|| Error::parse(loc, format!("missing \"{key}\"")))
}

pub fn parse_descriptor(j: &Json, ground: GroundSet, loc: &str) -> Result<CaoDescriptor> {
    if let Some(kind) = j.as_str() {
        return parse_descriptor(&json!({ "kind": kind }), ground, loc);
    }
    let obj = j.as_object().ok_or_else(|| Error::parse(loc, "expected an operator object"))?;
    let kind = field(obj, "kind", loc)?
        .as_str()
        .ok_or_else(|| Error::parse(format!("{loc}.kind"), "expected a string"))?;
    let sub = |key: &str| format!("{loc}.{key}");
    let inner = |key: &str| -> Result<MonotoneMeasure> { parse_measure(field(obj, key, loc)?, ground, &sub(key)) };
    let op = match kind {
        "max" => CaoDescriptor::Max,
        "sum" => CaoDescriptor::Sum,
        "pmean" => CaoDescriptor::PMean {
            p: parse_value(field(obj, "p", loc)?, &sub("p"))?,
        },
        "weighted_max" => CaoDescriptor::WeightedMax {
            w: parse_values(field(obj, "w", loc)?, &sub("w"))?,
            z: parse_values(field(obj, "z", loc)?, &sub("z"))?,
        },
        "choquet" => CaoDescriptor::Choquet(inner("measure")?),
        "shilkret" => CaoDescriptor::Shilkret(inner("measure")?),
        "sugeno" => CaoDescriptor::Sugeno(inner("measure")?),
        "ess_sup" => CaoDescriptor::EssSup(inner("measure")?),
        "size" => {
            let size = match field(obj, "size", loc)? {
                Json::String(s) if s == "sum" => SizeSpec::Sum,
                Json::Object(m) if m.contains_key("count_normalized") => {
                    SizeSpec::CountNormalized(parse_value(&m["count_normalized"], &sub("size.count_normalized"))?)
                }
                _ => {
                    return Err(Error::parse(
                        sub("size"),
                        "expected \"sum\" or {\"count_normalized\": p}",
                    ))
                }
            };
            CaoDescriptor::Size {
                size,
                family: parse_subsets(field(obj, "family", loc)?, ground, &sub("family"))?,
            }
        }
        "per_set" => {
            let default = Box::new(parse_descriptor(field(obj, "default", loc)?, ground, &sub("default"))?);
            let cases_json = field(obj, "cases", loc)?
                .as_object()
                .ok_or_else(|| Error::parse(sub("cases"), "expected an object keyed by subsets"))?;
            let mut cases = BTreeMap::new();
            for (key, val) in cases_json {
                let l = format!("{loc}.cases.{key}");
                let e = Subset::parse(key, ground).map_err(|e| e.at(&l))?;
                cases.insert(e, parse_descriptor(val, ground, &l)?);
            }
            CaoDescriptor::PerSet { default, cases }
        }
        "custom" => {
            return Err(Error::InvalidDescriptor(
                "custom operators are code hooks and cannot be loaded from JSON; use per_set".into(),
            ))
        }
        other => return Err(Error::parse(sub("kind"), format!("unknown operator {other:?}"))),
    };
    op.validate(ground)?;
    Ok(op)
}

pub fn parse_collection(j: &Json, ground: GroundSet, loc: &str) -> Result<CollectionSpec> {
    match j {
        Json::String(s) if s == "powerset" => Ok(CollectionSpec::Powerset),
        Json::String(s) if s == "chain" => Ok(CollectionSpec::Chain),
        Json::Array(_) => Ok(CollectionSpec::Explicit(parse_subsets(j, ground, loc)?)),
        _ => Err(Error::parse(loc, "expected \"powerset\", \"chain\" or a list of subsets")),
    }
}

fn parse_options(j: &Json) -> Result<Options> {
    let obj = j.as_object().ok_or_else(|| Error::parse("options", "expected an object"))?;
    let mut o = Options::default();
    for (key, val) in obj {
        let loc = format!("options.{key}");
        let int = || val.as_u64().ok_or_else(|| Error::parse(&loc, "expected a nonnegative integer"));
        match key.as_str() {
            "tolerance" => o.tolerance = Some(parse_value(val, &loc)?),
            "seed" => o.seed = int()?,
            "budget" => o.budget = int()? as usize,
            "method" => {
                let name = val.as_str().unwrap_or_default();
                o.method = SurvivalMethod::from_name(name)
                    .ok_or_else(|| Error::parse(&loc, "expected minform, sumform, psi or psistar"))?;
            }
            "vector_grid" => o.vector_grid = parse_values(val, &loc)?,
            "measure_grid" => o.measure_grid = parse_values(val, &loc)?,
            "probe_values" => o.probe_values = parse_values(val, &loc)?,
            "measure_class" => {
                o.measure_class = match val.as_str() {
                    Some("monotone") => MeasureClass::Monotone,
                    Some("weakest") => MeasureClass::Weakest,
                    _ => return Err(Error::parse(&loc, "expected \"monotone\" or \"weakest\"")),
                }
            }
            _ => return Err(Error::parse(&loc, "unknown option")),
        }
    }
    Ok(o)
}

fn values_json(values: &[Value]) -> Json {
    Json::Array(values.iter().map(|v| Json::String(v.to_string())).collect())
}

pub fn vector_json(x: &XVector) -> Json {
    values_json(x.components())
}

pub fn measure_json(m: &MonotoneMeasure) -> Json {
    values_json(m.table())
}

fn subsets_json(sets: &[Subset]) -> Json {
    Json::Array(sets.iter().map(|s| Json::String(s.to_string())).collect())
}

/// `None` for code hooks, which have no JSON form.
pub fn descriptor_json(op: &CaoDescriptor) -> Option<Json> {
    let kind = op.kind_name();
    Some(match op {
        CaoDescriptor::Max | CaoDescriptor::Sum => json!({ "kind": kind }),
        CaoDescriptor::PMean { p } => json!({ "kind": kind, "p": p.to_string() }),
        CaoDescriptor::WeightedMax { w, z } => json!({ "kind": kind, "w": values_json(w), "z": values_json(z) }),
        CaoDescriptor::Choquet(m)
        | CaoDescriptor::Shilkret(m)
        | CaoDescriptor::Sugeno(m)
        | CaoDescriptor::EssSup(m) => json!({ "kind": kind, "measure": measure_json(m) }),
        CaoDescriptor::Size { size, family } => {
            let size = match size {
                SizeSpec::Sum => json!("sum"),
                SizeSpec::CountNormalized(p) => json!({ "count_normalized": p.to_string() }),
                SizeSpec::Custom { .. } => return None,
            };
            json!({ "kind": kind, "size": size, "family": subsets_json(family) })
        }
        CaoDescriptor::PerSet { default, cases } => {
            let mut map = Map::new();
            for (e, c) in cases {
                map.insert(e.to_string(), descriptor_json(c)?);
            }
            json!({ "kind": kind, "default": descriptor_json(default)?, "cases": map })
        }
        CaoDescriptor::Custom(_) => return None,
    })
}

pub fn collection_json(c: &CollectionSpec) -> Json {
    match c {
        CollectionSpec::Powerset => json!("powerset"),
        CollectionSpec::Chain => json!("chain"),
        CollectionSpec::Explicit(sets) => subsets_json(sets),
    }
}

pub fn step_json(f: &StepFn) -> Json {
    serde_json::to_value(f).expect("step functions serialize")
}

pub fn order_json(o: &StepOrder) -> Json {
    match o.witness() {
        None => json!({ "relation": o.name() }),
        Some(at) => json!({ "relation": o.name(), "at": at.to_string() }),
    }
}

pub fn report_json(r: &ConditionReport) -> Json {
    let witnesses: Map<String, Json> = r
        .witnesses
        .iter()
        .map(|(k, e)| (k.to_string(), Json::String(e.to_string())))
        .collect();
    let violation = r.violation.map(|v| {
        json!({ "index": v.index, "set": v.set.map(|s| s.to_string()) })
    });
    json!({
        "kind": r.kind.name(),
        "holds": r.holds,
        "witnesses": witnesses,
        "violation": violation,
    })
}

fn truth_json<K: std::fmt::Display>(truth: &BTreeMap<K, bool>) -> Json {
    Json::Object(truth.iter().map(|(k, v)| (k.to_string(), Json::Bool(*v))).collect())
}

pub fn comparison_json(c: &ComparisonVerdict) -> Json {
    let mut out = order_json(&c.relation);
    let obj = out.as_object_mut().unwrap();
    obj.insert("standard".into(), step_json(&c.standard));
    obj.insert("generalized".into(), step_json(&c.generalized));
    obj.insert("conditions".into(), truth_json(&c.conditions));
    out
}

pub fn lattice_json(r: &LatticeReport) -> Json {
    let rows: Vec<Json> = r
        .rows
        .iter()
        .map(|row| json!({ "id": row.id, "statement": row.statement, "holds": row.holds }))
        .collect();
    let mut out = order_json(&r.relation);
    let obj = out.as_object_mut().unwrap();
    obj.insert("strictly_monotone_on_chain".into(), json!(r.strictly_monotone_on_chain));
    obj.insert("conditions".into(), truth_json(&r.truth));
    obj.insert("rows".into(), Json::Array(rows));
    obj.insert("all_hold".into(), json!(r.all_hold()));
    out
}

pub fn options_json(o: &Options) -> Json {
    let mut out = json!({
        "seed": o.seed,
        "budget": o.budget,
        "method": o.method.name(),
        "vector_grid": values_json(&o.vector_grid),
        "measure_grid": values_json(&o.measure_grid),
        "probe_values": values_json(&o.probe_values),
        "measure_class": match o.measure_class {
            MeasureClass::Monotone => "monotone",
            MeasureClass::Weakest => "weakest",
        },
    });
    if let Some(t) = o.tolerance {
        out["tolerance"] = json!(t.to_string());
    }
    out
}

/// The inverse of [`parse_problem`]; `None` if the operator is a code hook.
pub fn problem_json(p: &ProblemSpec) -> Option<Json> {
    let mut out = json!({
        "n": p.ground.n(),
        "op": descriptor_json(&p.family.op)?,
        "collection": collection_json(&p.family.collection),
        "options": options_json(&p.options),
    });
    let obj = out.as_object_mut().unwrap();
    if let Some(x) = &p.x {
        obj.insert("x".into(), vector_json(x));
    }
    if let Some(y) = &p.y {
        obj.insert("y".into(), vector_json(y));
    }
    if let Some(m) = &p.measure {
        obj.insert("measure".into(), measure_json(m));
    }
    if let Some(m) = &p.measure2 {
        obj.insert("measure2".into(), measure_json(m));
    }
    Some(out)
}

/// A witness as a standalone problem file that reproduces it.
pub fn witness_problem_json(w: &Witness) -> Json {
    let fca = &w.fca;
    let collection = if fca.is_powerset() {
        json!("powerset")
    } else {
        subsets_json(fca.collection())
    };
    json!({
        "n": fca.ground().n(),
        "x": vector_json(&w.x),
        "measure": measure_json(&w.measure),
        "op": descriptor_json(fca.op()).unwrap_or_else(|| json!({ "kind": "custom" })),
        "collection": collection,
    })
}

pub fn verdict_json(v: &Verdict) -> Json {
    match v {
        Verdict::Proved => json!({ "verdict": "proved" }),
        Verdict::PassedProbes(k) => json!({ "verdict": "passed_probes", "probes": k }),
        Verdict::Refuted(w) => json!({
            "verdict": "refuted",
            "alpha": w.alpha.to_string(),
            "standard": w.standard.to_string(),
            "generalized": w.generalized.to_string(),
            "reason": w.reason,
            "instance": witness_problem_json(w),
        }),
    }
}

/// Pretty JSON with a trailing newline. Keys are sorted, so output is
/// byte-for-byte deterministic.
pub fn emit(j: &Json) -> String {
    let mut s = serde_json::to_string_pretty(j).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::v;

    #[test]
    fn parses_a_full_problem() {
        let p = parse_problem(
            r#"{
                "n": 3,
                "x": [2, "3", 4.0],
                "measure": {"{}":0,"{1}":0,"{2}":0,"{3}":0.7,"{1,2}":0,"{1,3}":0.8,"{2,3}":0.7,"{1,2,3}":1},
                "op": {"kind": "sum"},
                "collection": ["{}", "{1}", "{1,2,3}"],
                "options": {"tolerance": "1e-9", "seed": 7, "method": "psistar"}
            }"#,
        )
        .unwrap();
        assert_eq!(p.x.unwrap(), XVector::from_integers(&[2, 3, 4]));
        assert_eq!(p.measure.as_ref().unwrap().get(Subset::from_elements([1, 3])), v("0.8"));
        assert_eq!(p.family.op, CaoDescriptor::Sum);
        assert_eq!(p.options.seed, 7);
        assert_eq!(p.options.method, SurvivalMethod::PsiStarForm);
        assert!(matches!(p.family.collection, CollectionSpec::Explicit(ref s) if s.len() == 3));
    }

    #[test]
    fn parse_errors_carry_locations() {
        let err = parse_problem(r#"{"n": 2, "x": [1, "a"]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location == "x[1]"), "{err:?}");
        let err = parse_problem(r#"{"n": 2, "measure": {"{3}": 1}}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location == "measure.{3}"), "{err:?}");
        let err = parse_problem(r#"{"n": 2, "measure": [0, 1, 1, 0.5]}"#).unwrap_err();
        assert!(matches!(err, Error::NotMonotone { .. }), "{err:?}");
        assert!(matches!(parse_problem("{"), Err(Error::Parse { .. })));
        assert!(matches!(parse_problem(r#"{"n": 0}"#), Err(Error::GroundSetSize { .. })));
        assert!(matches!(
            parse_problem(r#"{"n": 2, "op": {"kind": "custom"}}"#),
            Err(Error::InvalidDescriptor(_))
        ));
    }

    #[test]
    fn descriptors_round_trip() {
        let g = GroundSet::new(3).unwrap();
        let m = crate::setfun::counting_measure(g);
        let ops = vec![
            CaoDescriptor::Max,
            CaoDescriptor::Sum,
            CaoDescriptor::PMean { p: v("2") },
            CaoDescriptor::WeightedMax {
                w: vec![v("0.5"), v("0.5"), v("1")],
                z: vec![v("0.5"), v("0.25"), v("1")],
            },
            CaoDescriptor::Choquet(m.clone()),
            CaoDescriptor::Sugeno(m.clone()),
            CaoDescriptor::EssSup(m),
            CaoDescriptor::Size {
                size: SizeSpec::CountNormalized(v("3")),
                family: vec![Subset::EMPTY, Subset::singleton(2)],
            },
            CaoDescriptor::PerSet {
                default: Box::new(CaoDescriptor::Max),
                cases: [(Subset::singleton(2), CaoDescriptor::Sum)].into_iter().collect(),
            },
        ];
        for op in ops {
            let j = descriptor_json(&op).unwrap();
            assert_eq!(parse_descriptor(&j, g, "op").unwrap(), op);
        }
        assert_eq!(parse_descriptor(&json!("max"), g, "op").unwrap(), CaoDescriptor::Max);
    }

    #[test]
    fn reports_serialize() {
        let r = ConditionReport {
            kind: crate::conditions::ConditionKind::C1,
            holds: true,
            witnesses: [(0, Subset::EMPTY)].into_iter().collect(),
            violation: None,
        };
        assert_eq!(
            serde_json::to_string(&report_json(&r)).unwrap(),
            r#"{"holds":true,"kind":"C1","violation":null,"witnesses":{"0":"{}"}}"#
        );
    }
}
