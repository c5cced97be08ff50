//! Plain-text rendering of a [`Report`].

use std::fmt::Write;

use serde_json::Value;

use crate::report::{Matrix, Report, Status};

fn table(out: &mut String, header: &[String], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut String, cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let _ = writeln!(out, "  {}", padded.join(" | ").trim_end());
    };
    line(out, header);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    let _ = writeln!(out, "  {}", rule.join("-+-"));
    for row in rows {
        line(out, row);
    }
}

fn grid(out: &mut String, title: &str, rows: &[Vec<String>]) {
    let _ = writeln!(out, "{title}");
    let k = rows.first().map_or(0, Vec::len);
    let mut header = vec!["q".to_string()];
    header.extend((0..k).map(|p| format!("p={p}")));
    let body: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(q, row)| {
            let mut r = vec![q.to_string()];
            r.extend(row.iter().cloned());
            r
        })
        .collect();
    table(out, &header, &body);
    out.push('\n');
}

fn value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn matrix_rows(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(value).collect::<Vec<_>>().join(" ")))
        .collect();
    format!("[{}]", rows.join(" "))
}

fn status(out: &mut String, indent: &str, symbol: &str, s: &Status) {
    match s {
        Status::Determined { group } => {
            let _ = writeln!(out, "{indent}{symbol} = {group}");
        }
        Status::Extension { candidates } => {
            let _ = writeln!(
                out,
                "{indent}{symbol} ∈ {{{}}} (extension problem)",
                candidates.join(", ")
            );
        }
        Status::D2 { variants } => {
            for v in variants {
                let _ = writeln!(out, "{indent}if {}: factors {}", v.label, v.factors.join(", "));
                status(out, &format!("{indent}  "), symbol, &v.status);
            }
        }
        Status::Unresolved => {
            let _ = writeln!(out, "{indent}{symbol} unresolved");
        }
    }
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    let g = &r.graph;
    let _ = writeln!(out, "k-graph of rank {} on {} vertices", g.k, g.vertices.len());
    let fixed = if g.fixed.is_empty() {
        "none".to_string()
    } else {
        g.fixed.join(", ")
    };
    let paired = if g.paired.is_empty() {
        "none".to_string()
    } else {
        g.paired
            .iter()
            .map(|[a, b]| format!("{a} <-> {b}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(out, "  fixed vertices: {fixed}");
    let _ = writeln!(out, "  swapped pairs: {paired}");
    out.push('\n');

    if let Some(im) = &r.intermediate {
        let _ = writeln!(out, "Smith forms of B_i = I - M_i^t");
        for s in &im.snf {
            let diag: Vec<String> = s.diagonal.iter().map(value).collect();
            let _ = writeln!(
                out,
                "  B_{} = {}  SNF diag({})",
                s.color,
                matrix_rows(&s.b),
                diag.join(", ")
            );
        }
        out.push('\n');
        let _ = writeln!(out, "Chain complexes");
        for c in &im.complexes {
            let _ = writeln!(out, "  {} degree {}: {}", c.part, c.degree, c.groups.join(" <- "));
            for (p, b) in c.boundaries.iter().enumerate() {
                let _ = writeln!(out, "    d_{} = {}", p + 1, matrix_rows(b));
            }
        }
        out.push('\n');
    }

    grid(&mut out, "E2, real part (q mod 8)", &r.e2.real);
    grid(&mut out, "E2, complex part (q mod 2)", &r.e2.complex);

    if let Some(lifts) = &r.lifts {
        let _ = writeln!(out, "Cycle representatives");
        for l in lifts {
            let gens: Vec<String> = l
                .generators
                .iter()
                .map(|c| format!("({})", c.iter().map(value).collect::<Vec<_>>().join(", ")))
                .collect();
            let _ = writeln!(out, "  {} E({},{}) = {}: {}", l.part, l.p, l.q, l.group, gens.join(" "));
        }
        out.push('\n');
    }

    let _ = writeln!(out, "Possible differentials");
    if r.differentials.is_empty() {
        let _ = writeln!(out, "  none; E2 = E-infinity");
    }
    for d in &r.differentials {
        let _ = writeln!(
            out,
            "  {} d{}: ({},{}) -> ({},{})",
            d.part, d.r, d.source[0], d.source[1], d.target[0], d.target[1]
        );
    }
    out.push('\n');

    if !r.diagonals.is_empty() {
        let _ = writeln!(out, "Diagonals p + q = t");
        for d in &r.diagonals {
            let nonzero: Vec<String> = d
                .factors
                .iter()
                .filter(|f| f.group != "0")
                .map(|f| format!("E({},{}) = {}", f.p, f.q, f.group))
                .collect();
            let listed = if nonzero.is_empty() {
                "all factors 0".to_string()
            } else {
                nonzero.join(", ")
            };
            let _ = writeln!(out, "  {} t={}: {}", d.part, d.degree, listed);
            let symbol = if d.part == "real" {
                format!("KO_{}", d.degree)
            } else {
                format!("KU_{}", d.degree)
            };
            status(&mut out, "    ", &symbol, &d.status);
        }
        out.push('\n');
    }

    if !r.ko.is_empty() {
        let _ = writeln!(out, "Summary by degree");
        let header: Vec<String> = ["q", "KO", "KU", "psi", "MU"].iter().map(|s| s.to_string()).collect();
        let rows: Vec<Vec<String>> = (0..8)
            .map(|q| {
                let ko = match &r.ko[q] {
                    Some(gs) if gs.len() == 1 => gs[0].clone(),
                    Some(gs) => format!("{{{}}}", gs.join(", ")),
                    None => "?".into(),
                };
                let ku = r.ku.as_ref().map_or("?".into(), |v| v[q].clone());
                let psi = r.psi.as_ref().map_or("?".into(), |v| match &v[q].multiplier {
                    Some(m) => value(m),
                    None => matrix_rows(&v[q].matrix),
                });
                let mu = r.mu.as_ref().map_or("?".into(), |v| v[q].clone());
                vec![q.to_string(), ko, ku, psi, mu]
            })
            .collect();
        table(&mut out, &header, &rows);
        out.push('\n');
    }

    if let Some(core) = &r.core {
        let _ = writeln!(out, "Core sequence: candidate ranks of MO_0..MO_7");
        let bound = |v: &[Option<usize>]| -> String {
            v.iter()
                .map(|x| x.map_or("-".into(), |n| n.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(out, "  known: {}", bound(&core.mo_known));
        let _ = writeln!(out, "  upper: {}", bound(&core.mo_upper));
        for s in &core.solutions {
            let _ = writeln!(out, "  MO = {:?}", s.mo);
        }
        out.push('\n');
    }

    if let Some(e) = &r.error {
        let _ = writeln!(out, "stopped: {}", e.message);
    }
    out
}
