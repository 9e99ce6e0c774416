//! The `survive` command line.
//!
//! Exit status: 0 on success, 1 when the verdict is negative (the functions
//! differ or a counterexample is found), 2 on input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use crate::aggops::{CaoDescriptor, CollectionSpec, Fca, FamilySpec, XVector};
use crate::characterize::{equality_for_all_measures, max_family_check, search_counterexample, MeasureClass, Verdict};
use crate::conditions::{compare_survival, evaluate_lattice, ConditionKind, Instance, LatticeReport};
use crate::error::{Error, Result};
use crate::io::{
    comparison_json, emit, lattice_json, load_problem, parse_descriptor, report_json, step_json, verdict_json,
    Options, ProblemSpec,
};
use crate::render::{diagram_model, render_parallel_diagram, render_step_svg};
use crate::setfun::GroundSet;
use crate::survival::{gsf, survival_standard, SurvivalMethod};
use crate::value::Value;

#[derive(Parser, Debug)]
#[command(name = "survive", version, about = "Standard and generalized survival functions on finite ground sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct Common {
    /// Problem file (JSON); `-` reads standard input.
    #[arg(long)]
    input: Option<String>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    output: Option<String>,
    /// Also write an SVG plot here.
    #[arg(long)]
    svg: Option<String>,
    /// minform, sumform, psi or psistar.
    #[arg(long)]
    method: Option<String>,
    #[arg(long)]
    tolerance: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Standard survival function α ↦ μ({x > α}).
    Survival(Common),
    /// Generalized survival function of the problem's family.
    Gsf(Common),
    /// Compare both functions; exit 1 unless they are equal.
    Compare(Common),
    /// Check conditions; exit 1 if any fails.
    Check {
        #[command(flatten)]
        common: Common,
        /// Comma-separated, e.g. C1,C2*,C3~ (default: all).
        #[arg(long, value_delimiter = ',')]
        conditions: Vec<String>,
    },
    /// Print every implication of the condition lattice with pass/fail.
    Lattice(Common),
    /// Decide equality for every monotone measure at the problem's x.
    Characterize(Common),
    /// Decide whether the family equals max for all vectors and measures.
    Maxfamily(Common),
    /// Search grids for a vector and measure separating the functions.
    Search {
        #[command(flatten)]
        common: Common,
        /// Operator name (max, sum) or a JSON descriptor.
        #[arg(long)]
        op: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// powerset or chain.
        #[arg(long)]
        collection: Option<String>,
        #[arg(long, value_delimiter = ',')]
        vector_grid: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        measure_grid: Vec<String>,
        /// Draw measures from the weakest measures only.
        #[arg(long)]
        weakest: bool,
    },
    /// Parallel-lines diagram of the problem as SVG.
    Diagram(Common),
    /// Step plot of the survival function with the generalized one overlaid.
    Plot(Common),
}

/// Runs one command; returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Outputs<'a> {
    out: &'a mut dyn Write,
    output: Option<String>,
    svg: Option<String>,
}

impl Outputs<'_> {
    fn text(&mut self, s: &str) -> Result<()> {
        match &self.output {
            Some(path) => write_file(path, s),
            None => Ok(self.out.write_all(s.as_bytes())?),
        }
    }

    fn json(&mut self, j: &Json) -> Result<()> {
        self.text(&emit(j))
    }

    fn svg(&mut self, render: impl FnOnce() -> String) -> Result<()> {
        match &self.svg {
            Some(path) => write_file(path, &render()),
            None => Ok(()),
        }
    }

    /// For commands whose main product is the SVG itself.
    fn primary_svg(&mut self, s: &str) -> Result<()> {
        match self.svg.clone() {
            Some(path) => write_file(&path, s),
            None => self.text(s),
        }
    }
}

fn write_file(path: &str, s: &str) -> Result<()> {
    std::fs::write(path, s).map_err(|e| Error::Io(format!("{path}: {e}")))
}

fn load(common: &Common) -> Result<ProblemSpec> {
    let path = common
        .input
        .as_deref()
        .ok_or_else(|| Error::Usage("--input <path> is required".into()))?;
    let mut p = load_problem(path)?;
    apply_overrides(&mut p.options, common)?;
    Ok(p)
}

fn apply_overrides(o: &mut Options, common: &Common) -> Result<()> {
    if let Some(t) = &common.tolerance {
        o.tolerance = Some(t.parse::<Value>().map_err(|e| e.at("--tolerance"))?);
    }
    if let Some(s) = common.seed {
        o.seed = s;
    }
    if let Some(b) = common.budget {
        o.budget = b;
    }
    if let Some(m) = &common.method {
        o.method = SurvivalMethod::from_name(m)
            .ok_or_else(|| Error::Usage(format!("unknown method {m:?}; use minform, sumform, psi or psistar")))?;
    }
    Ok(())
}

fn fca_of(p: &ProblemSpec) -> Result<(XVector, Fca)> {
    let x = p.x()?.clone();
    let fca = p.family.instantiate(&x, p.ground)?;
    Ok((x, fca))
}

fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Refuted(_) => 1,
        _ => 0,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    let outputs = |out, c: &Common| Outputs {
        out,
        output: c.output.clone(),
        svg: c.svg.clone(),
    };
    match command {
        Command::Survival(c) => {
            let p = load(&c)?;
            let f = survival_standard(p.x()?, p.measure()?, p.options.method)?;
            let mut o = outputs(out, &c);
            o.json(&step_json(&f))?;
            o.svg(|| render_step_svg(&f, None, "survival function"))?;
            Ok(0)
        }
        Command::Gsf(c) => {
            let p = load(&c)?;
            let (x, fca) = fca_of(&p)?;
            let g = gsf(&x, p.measure()?, &fca, p.options.tolerance)?;
            let mut o = outputs(out, &c);
            o.json(&step_json(&g))?;
            o.svg(|| render_step_svg(&g, None, "generalized survival function"))?;
            Ok(0)
        }
        Command::Compare(c) => {
            let p = load(&c)?;
            let (x, fca) = fca_of(&p)?;
            let tol = p.options.tolerance;
            let first = compare_survival(&x, p.measure()?, &fca, tol)?;
            let mut code = i32::from(!first.relation.is_equal());
            let mut report = comparison_json(&first);
            if let Some(nu) = &p.measure2 {
                let second = compare_survival(&x, nu, &fca, tol)?;
                code |= i32::from(!second.relation.is_equal());
                report = json!({ "measure": report, "measure2": comparison_json(&second) });
            }
            if let Some(y) = &p.y {
                let g_y = gsf(y, p.measure()?, &p.family.instantiate(y, p.ground)?, tol)?;
                report["indistinguishable_from_y"] = json!(g_y == first.generalized);
            }
            let mut o = outputs(out, &c);
            o.json(&report)?;
            o.svg(|| render_step_svg(&first.standard, Some(&first.generalized), "survival (solid) and generalized (dashed)"))?;
            Ok(code)
        }
        Command::Check { common: c, conditions } => {
            let p = load(&c)?;
            let (x, fca) = fca_of(&p)?;
            let kinds: Vec<ConditionKind> = if conditions.is_empty() {
                ConditionKind::ALL.to_vec()
            } else {
                conditions
                    .iter()
                    .map(|s| s.parse::<ConditionKind>().map_err(|e| e.at("--conditions")))
                    .collect::<Result<_>>()?
            };
            let inst = Instance::new(&x, p.measure()?, &fca, p.options.tolerance)?;
            let reports: Vec<_> = kinds.iter().map(|k| inst.check(*k)).collect();
            let code = i32::from(reports.iter().any(|r| !r.holds));
            outputs(out, &c).json(&Json::Array(reports.iter().map(report_json).collect()))?;
            Ok(code)
        }
        Command::Lattice(c) => {
            let p = load(&c)?;
            let (x, fca) = fca_of(&p)?;
            let report = evaluate_lattice(&Instance::new(&x, p.measure()?, &fca, p.options.tolerance)?);
            let code = i32::from(!report.all_hold());
            match &c.output {
                Some(path) => write_file(path, &emit(&lattice_json(&report)))?,
                None => out.write_all(lattice_table(&report).as_bytes())?,
            }
            Ok(code)
        }
        Command::Characterize(c) => {
            let p = load(&c)?;
            let (x, fca) = fca_of(&p)?;
            let v = equality_for_all_measures(&x, &fca, p.options.tolerance)?;
            outputs(out, &c).json(&verdict_json(&v))?;
            Ok(verdict_code(&v))
        }
        Command::Maxfamily(c) => {
            let p = load(&c)?;
            let x = p.x.clone().unwrap_or_else(|| XVector::zeros(p.ground.n()));
            let fca = p.family.instantiate(&x, p.ground)?;
            let v = max_family_check(&fca, &p.options.probe_values, p.options.budget, p.options.tolerance)?;
            outputs(out, &c).json(&verdict_json(&v))?;
            Ok(verdict_code(&v))
        }
        Command::Search {
            common: c,
            op,
            n,
            collection,
            vector_grid,
            measure_grid,
            weakest,
        } => {
            let mut p = match (&c.input, n) {
                (Some(_), _) => load(&c)?,
                (None, Some(n)) => {
                    let ground = GroundSet::new(n)?;
                    let mut options = Options::default();
                    apply_overrides(&mut options, &c)?;
                    ProblemSpec {
                        ground,
                        x: None,
                        y: None,
                        measure: None,
                        measure2: None,
                        family: FamilySpec::new(CaoDescriptor::Max, CollectionSpec::Powerset),
                        options,
                    }
                }
                (None, None) => return Err(Error::Usage("search needs --input or --n".into())),
            };
            if let Some(op) = op {
                let j: Json = serde_json::from_str(&op).unwrap_or(Json::String(op));
                p.family.op = parse_descriptor(&j, p.ground, "--op")?;
            }
            match collection.as_deref() {
                None => {}
                Some("powerset") => p.family.collection = CollectionSpec::Powerset,
                Some("chain") => p.family.collection = CollectionSpec::Chain,
                Some(other) => return Err(Error::Usage(format!("unknown collection {other:?}"))),
            }
            let grid = |items: &[String], flag: &str| -> Result<Vec<Value>> {
                items.iter().map(|s| s.parse::<Value>().map_err(|e| e.at(flag))).collect()
            };
            if !vector_grid.is_empty() {
                p.options.vector_grid = grid(&vector_grid, "--vector-grid")?;
            }
            if !measure_grid.is_empty() {
                p.options.measure_grid = grid(&measure_grid, "--measure-grid")?;
            }
            if weakest {
                p.options.measure_class = MeasureClass::Weakest;
            }
            let v = search_counterexample(&p.family, &p.search_config())?;
            outputs(out, &c).json(&verdict_json(&v))?;
            Ok(verdict_code(&v))
        }
        Command::Diagram(c) => {
            let p = load(&c)?;
            let (x, fca) = fca_of(&p)?;
            let model = diagram_model(&x, p.measure()?, &fca, p.options.tolerance)?;
            let title = format!("A = {} on x = {:?}", fca.op().kind_name(), x);
            outputs(out, &c).primary_svg(&render_parallel_diagram(&model, &title))?;
            Ok(0)
        }
        Command::Plot(c) => {
            let p = load(&c)?;
            let (x, fca) = fca_of(&p)?;
            let f = survival_standard(&x, p.measure()?, p.options.method)?;
            let g = gsf(&x, p.measure()?, &fca, p.options.tolerance)?;
            let svg = render_step_svg(&f, Some(&g), "survival (solid) and generalized (dashed)");
            outputs(out, &c).primary_svg(&svg)?;
            Ok(0)
        }
    }
}

/// Human-readable lattice table, one row per implication.
pub fn lattice_table(r: &LatticeReport) -> String {
    let mut s = String::new();
    let truth: Vec<String> = r
        .truth
        .iter()
        .map(|(k, v)| format!("{k}={}", if *v { "T" } else { "F" }))
        .collect();
    s.push_str(&format!("conditions: {}\n", truth.join(" ")));
    let at = r.relation.witness().map(|a| format!(" (first difference at {a})")).unwrap_or_default();
    s.push_str(&format!("relation:   gsf {} survival{at}\n", r.relation.name()));
    s.push_str(&format!("strict on chain: {}\n", r.strictly_monotone_on_chain));
    let width = r.rows.iter().map(|row| row.statement.chars().count()).max().unwrap_or(0);
    for row in &r.rows {
        let pad = width - row.statement.chars().count();
        s.push_str(&format!(
            "{:<4} {}{}  {}\n",
            row.id,
            row.statement,
            " ".repeat(pad),
            if row.holds { "PASS" } else { "FAIL" }
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("survive").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["survival"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["search"]).0, 2);
        assert_eq!(run_capture(&["survival", "--input", "/nonexistent.json"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn search_from_flags() {
        let (code, out, _) = run_capture(&["search", "--op", "sum", "--n", "2", "--vector-grid", "0,1", "--measure-grid", "0,1", "--budget", "100"]);
        assert_eq!(code, 1);
        assert!(out.contains("\"verdict\": \"refuted\""));
        let (code, out, _) = run_capture(&["search", "--op", "max", "--n", "2", "--vector-grid", "0,1", "--measure-grid", "0,1", "--budget", "100"]);
        assert_eq!(code, 0, "{out}");
    }
}
