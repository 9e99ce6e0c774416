//! Deterministic SVG plots of step functions and of the parallel-line
//! diagram behind the generalized survival function.

use std::fmt::Write;

use crate::aggops::{Fca, XVector};
use crate::error::Result;
use crate::setfun::{MonotoneMeasure, Subset};
use crate::survival::{check_ground, gsf_from_table, StepFn};
use crate::value::Value;

const WIDTH: f64 = 560.0;
const HEIGHT: f64 = 340.0;
const MARGIN: f64 = 48.0;

struct Frame {
    x_max: f64,
    y_max: f64,
}

impl Frame {
    fn px(&self, a: f64) -> f64 {
        MARGIN + a / self.x_max * (WIDTH - 2.0 * MARGIN)
    }

    fn py(&self, v: f64) -> f64 {
        HEIGHT - MARGIN - v / self.y_max * (HEIGHT - 2.0 * MARGIN)
    }
}

fn frame_for<'a>(fns: impl Iterator<Item = &'a StepFn>) -> Frame {
    let mut x_last = 0.0f64;
    let mut y_max = 0.0f64;
    for f in fns {
        x_last = x_last.max(f.breakpoints().last().unwrap().to_f64());
        y_max = y_max.max(f.values().iter().map(Value::to_f64).fold(0.0, f64::max));
    }
    Frame {
        x_max: if x_last > 0.0 { x_last * 1.25 } else { 1.0 },
        y_max: if y_max > 0.0 { y_max * 1.1 } else { 1.0 },
    }
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="24" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
}

fn axes(out: &mut String, fr: &Frame, ticks: &[Value], levels: &[Value]) {
    let (x0, y0) = (fr.px(0.0), fr.py(0.0));
    let _ = writeln!(
        out,
        r#"<path d="M{x0:.2} {y0:.2} H{:.2} M{x0:.2} {y0:.2} V{:.2}" stroke="black" fill="none"/>"#,
        WIDTH - MARGIN / 2.0,
        MARGIN / 2.0
    );
    for t in ticks {
        let x = fr.px(t.to_f64());
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{t}</text>"#,
            y0 + 16.0
        );
    }
    for l in levels {
        let y = fr.py(l.to_f64());
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{l}</text>"#,
            x0 - 6.0,
            y + 4.0
        );
    }
}

fn draw_steps(out: &mut String, fr: &Frame, f: &StepFn, color: &str, dash: bool) {
    let style = if dash { r#" stroke-dasharray="6 4""# } else { "" };
    for (start, end, value) in f.pieces() {
        let x1 = fr.px(start.to_f64());
        let x2 = end.map_or(WIDTH - MARGIN / 2.0, |e| fr.px(e.to_f64()));
        let y = fr.py(value.to_f64());
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.2}" y1="{y:.2}" x2="{x2:.2}" y2="{y:.2}" stroke="{color}" stroke-width="2"{style}/>"#
        );
        let _ = writeln!(out, r#"<circle cx="{x1:.2}" cy="{y:.2}" r="3" fill="{color}"/>"#);
        if end.is_some() {
            let _ = writeln!(
                out,
                r#"<circle cx="{x2:.2}" cy="{y:.2}" r="3" fill="white" stroke="{color}"/>"#
            );
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn sorted_unique(mut v: Vec<Value>) -> Vec<Value> {
    v.sort();
    v.dedup();
    v
}

/// Plots `f` in solid blue and, if given, `overlay` dashed in red.
pub fn render_step_svg(f: &StepFn, overlay: Option<&StepFn>, title: &str) -> String {
    let all: Vec<&StepFn> = std::iter::once(f).chain(overlay).collect();
    let fr = frame_for(all.iter().copied());
    let ticks = sorted_unique(all.iter().flat_map(|g| g.breakpoints().to_vec()).collect());
    let levels = sorted_unique(all.iter().flat_map(|g| g.values().to_vec()).collect());
    let mut out = String::new();
    header(&mut out, title);
    axes(&mut out, &fr, &ticks, &levels);
    draw_steps(&mut out, &fr, f, "#1f4e9c", false);
    if let Some(g) = overlay {
        draw_steps(&mut out, &fr, g, "#c0392b", true);
    }
    out.push_str("</svg>\n");
    out
}

/// One link of the diagram: `A(x|E)` on the lower axis joined to
/// `μ(E^c)` on the upper one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramRow {
    pub set: Subset,
    pub lower: Value,
    pub upper: Value,
}

/// One row per `E ∈ ℰ`, plus the resulting generalized survival function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramModel {
    /// Sorted by `lower` descending, then by bitmask ascending.
    pub rows: Vec<DiagramRow>,
    pub gsf: StepFn,
}

pub fn diagram_model(
    x: &XVector,
    measure: &MonotoneMeasure,
    fca: &Fca,
    tolerance: Option<Value>,
) -> Result<DiagramModel> {
    check_ground(measure, fca)?;
    let table = fca.aggregate(x, tolerance)?;
    let ground = measure.ground();
    let mut rows: Vec<DiagramRow> = table
        .iter()
        .map(|&(set, lower)| DiagramRow {
            set,
            lower,
            upper: measure.get(set.complement(ground)),
        })
        .collect();
    rows.sort_by(|a, b| b.lower.cmp(&a.lower).then(a.set.cmp(&b.set)));
    Ok(DiagramModel {
        rows,
        gsf: gsf_from_table(&table, measure),
    })
}

/// Evenly spaced slots for the distinct values, in the given order.
fn slots(values: &[Value]) -> Vec<(Value, f64)> {
    let k = values.len();
    values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let t = if k == 1 { 0.5 } else { i as f64 / (k - 1) as f64 };
            (*v, MARGIN + t * (WIDTH - 2.0 * MARGIN))
        })
        .collect()
}

fn slot_of(slots: &[(Value, f64)], v: Value) -> f64 {
    slots.iter().find(|(s, _)| *s == v).map(|(_, x)| *x).unwrap()
}

/// Two horizontal axes: aggregation values below, decreasing left to
/// right, and measure values above, increasing left to right, with one
/// labelled link per set.
pub fn render_parallel_diagram(model: &DiagramModel, title: &str) -> String {
    let mut lower: Vec<Value> = sorted_unique(model.rows.iter().map(|r| r.lower).collect());
    lower.reverse();
    let upper = sorted_unique(model.rows.iter().map(|r| r.upper).collect());
    let (lo, up) = (slots(&lower), slots(&upper));
    let (y_lo, y_up) = (HEIGHT - MARGIN, MARGIN + 12.0);
    let mut out = String::new();
    header(&mut out, title);
    for y in [y_lo, y_up] {
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="black"/>"#,
            MARGIN / 2.0,
            WIDTH - MARGIN / 2.0
        );
    }
    for (v, x) in &lo {
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{v}</text>"#,
            y_lo + 16.0
        );
    }
    for (v, x) in &up {
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{v}</text>"#,
            y_up - 8.0
        );
    }
    let count = model.rows.len().max(1) as f64;
    for (i, row) in model.rows.iter().enumerate() {
        let (x1, x2) = (slot_of(&lo, row.lower), slot_of(&up, row.upper));
        let _ = writeln!(
            out,
            r##"<line x1="{x1:.2}" y1="{y_lo:.2}" x2="{x2:.2}" y2="{y_up:.2}" stroke="#1f4e9c" stroke-width="1.5"/>"##
        );
        // labels spread along the links so coincident endpoints stay legible
        let t = (i as f64 + 1.0) / (count + 1.0);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10">{}</text>"#,
            x1 + t * (x2 - x1) + 3.0,
            y_lo + t * (y_up - y_lo),
            row.set
        );
    }
    out.push_str("</svg>\n");
    out
}
