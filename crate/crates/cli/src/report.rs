//! The pipeline result as plain data, shared by both renderers.

use kktheory_core::crmod::Part;
use kktheory_core::exactalg::{smith_normal_form, ExtensionBound, IntMatrix, InvariantFactors};
use kktheory_core::kgraph::{validate, KGraphSpec};
use kktheory_core::spectral::{
    assemble_diagonals, compute_e2, compute_ku_with_psi, compute_mu, constraints_from_diagonals, differential_report,
    enumerate_core_solutions, DiagonalStatus, E2Page, SpectralError,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::groups::render;

pub const SCHEMA: &str = "kkth/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub extension: ExtensionBound,
    pub core_bound: usize,
    pub emit_intermediate: bool,
    pub emit_lifts: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            extension: ExtensionBound::default(),
            core_bound: 8,
            emit_intermediate: false,
            emit_lifts: false,
        }
    }
}

/// Integer matrix as rows; entries are JSON numbers when they fit in `i64`
/// and decimal strings otherwise.
pub type Matrix = Vec<Vec<Value>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub graph: GraphSummary,
    pub e2: PageTables,
    pub differentials: Vec<Differential>,
    pub diagonals: Vec<Diagonal>,
    /// Possible `KO_q`, `q = 0..8`; `null` where a diagonal is unresolved.
    pub ko: Vec<Option<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ku: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub psi: Option<Vec<Psi>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub core: Option<Core>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intermediate: Option<Intermediate>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lifts: Option<Vec<Lift>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<ErrorInfo>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub k: usize,
    pub vertices: Vec<String>,
    pub fixed: Vec<String>,
    pub paired: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PageTables {
    /// `real[q][p]`, `q = 0..8`.
    pub real: Vec<Vec<String>>,
    /// `complex[q][p]`, `q = 0..2`.
    pub complex: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Differential {
    pub part: String,
    pub r: usize,
    pub source: [usize; 2],
    pub target: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    pub p: usize,
    pub q: usize,
    pub group: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagonal {
    pub part: String,
    pub degree: usize,
    pub factors: Vec<Factor>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Status {
    Determined { group: String },
    Extension { candidates: Vec<String> },
    D2 { variants: Vec<Variant> },
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Variant {
    pub label: String,
    pub factors: Vec<String>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Psi {
    /// `k` with `ψ(x) = k·x` when `KU_q` is cyclic.
    pub multiplier: Option<Value>,
    /// In canonical coordinates of `KU_q`.
    pub matrix: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Core {
    pub mo_known: Vec<Option<usize>>,
    pub mo_upper: Vec<Option<usize>>,
    pub solutions: Vec<CoreSolution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreSolution {
    pub mo: Vec<usize>,
    pub eta: Vec<usize>,
    pub c: Vec<usize>,
    pub r: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Intermediate {
    pub snf: Vec<Snf>,
    pub complexes: Vec<Complex>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Snf {
    pub color: usize,
    pub b: Matrix,
    pub diagonal: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Complex {
    pub part: String,
    pub degree: usize,
    /// Chain groups `C_0 .. C_k`.
    pub groups: Vec<String>,
    /// `∂_1 .. ∂_k` on ambient generators.
    pub boundaries: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lift {
    pub part: String,
    pub p: usize,
    pub q: usize,
    pub group: String,
    /// One ambient cycle per canonical generator.
    pub generators: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub name: String,
    pub message: String,
}

impl ErrorInfo {
    pub fn from_spectral(e: &SpectralError) -> Self {
        ErrorInfo {
            name: e.name().to_string(),
            message: e.to_string(),
        }
    }
}

fn part_name(part: Part) -> String {
    match part {
        Part::Real => "real".into(),
        Part::Complex => "complex".into(),
    }
}

fn number(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn matrix(m: &IntMatrix) -> Matrix {
    (0..m.rows()).map(|i| m.row(i).iter().map(number).collect()).collect()
}

fn groups(gs: &[InvariantFactors]) -> Vec<String> {
    gs.iter().map(render).collect()
}

fn status(s: &DiagonalStatus) -> Status {
    match s {
        DiagonalStatus::Determined(g) => Status::Determined { group: render(g) },
        DiagonalStatus::ExtensionAmbiguous(gs) => Status::Extension { candidates: groups(gs) },
        DiagonalStatus::D2Ambiguous(vs) => Status::D2 {
            variants: vs
                .iter()
                .map(|v| Variant {
                    label: v.label.clone(),
                    factors: groups(&v.factors),
                    status: status(&v.status),
                })
                .collect(),
        },
        DiagonalStatus::Unresolved => Status::Unresolved,
    }
}

/// An error that prevents any report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fatal(pub SpectralError);

/// Runs the pipeline. Errors after the E² page is known are recorded in
/// [`Report::error`] and the later sections are left empty.
pub fn build_report(spec: &KGraphSpec, options: &Options) -> Result<Report, Fatal> {
    let partition = validate(spec).map_err(|e| Fatal(e.into()))?;
    let page = compute_e2(spec).map_err(Fatal)?;
    let name = |v: usize| spec.vertices[v].clone();
    let graph = GraphSummary {
        k: spec.k,
        vertices: spec.vertices.clone(),
        fixed: partition.g_f.iter().map(|&v| name(v)).collect(),
        paired: partition
            .g_1
            .iter()
            .zip(&partition.g_2)
            .map(|(&a, &b)| [name(a), name(b)])
            .collect(),
    };
    let table = |part: Part| -> Vec<Vec<String>> {
        (0..part.period() as i64)
            .map(|q| {
                (0..=spec.k as i64)
                    .map(|p| page.group(part, p, q).to_string())
                    .collect()
            })
            .collect()
    };
    let e2 = PageTables {
        real: table(Part::Real),
        complex: table(Part::Complex),
    };
    let report = differential_report(&page);
    let differentials = report
        .entries
        .iter()
        .map(|e| Differential {
            part: part_name(e.part),
            r: e.r,
            source: [e.source.0, e.source.1],
            target: [e.target.0, e.target.1],
        })
        .collect();

    let mut out = Report {
        schema: SCHEMA.into(),
        graph,
        e2,
        differentials,
        diagonals: Vec::new(),
        ko: Vec::new(),
        ku: None,
        psi: None,
        mu: None,
        core: None,
        intermediate: options.emit_intermediate.then(|| intermediate(spec, &page)),
        lifts: options.emit_lifts.then(|| lifts(&page)),
        error: None,
    };

    let diagonals = match assemble_diagonals(&page, &report, options.extension) {
        Ok(d) => d,
        Err(e) => {
            out.error = Some(ErrorInfo::from_spectral(&e));
            return Ok(out);
        }
    };
    out.diagonals = diagonals
        .iter()
        .map(|d| Diagonal {
            part: part_name(d.part),
            degree: d.degree,
            factors: d
                .factors
                .iter()
                .map(|f| Factor {
                    p: f.p,
                    q: f.q,
                    group: render(&f.group),
                })
                .collect(),
            status: status(&d.status),
        })
        .collect();
    out.ko = diagonals
        .iter()
        .filter(|d| d.part == Part::Real)
        .map(|d| d.possible_groups().map(|gs| groups(&gs)))
        .collect();

    let ku = match compute_ku_with_psi(&page, &report) {
        Ok(ku) => ku,
        Err(e) => {
            out.error = Some(ErrorInfo::from_spectral(&e));
            return Ok(out);
        }
    };
    out.ku = Some(ku.ku.iter().map(|g| g.to_string()).collect());
    out.psi = Some(
        ku.psi
            .iter()
            .map(|h| Psi {
                multiplier: h.cyclic_multiplier().map(|k| number(&k)),
                matrix: matrix(&h.canonical_matrix()),
            })
            .collect(),
    );
    let mu = match compute_mu(&ku) {
        Ok(mu) => mu,
        Err(e) => {
            out.error = Some(ErrorInfo::from_spectral(&e));
            return Ok(out);
        }
    };
    out.mu = Some(mu.iter().map(|g| g.to_string()).collect());

    let constraints = constraints_from_diagonals(&diagonals);
    let mut core = Core {
        mo_known: constraints.mo_known.to_vec(),
        mo_upper: constraints.mo_upper.to_vec(),
        solutions: Vec::new(),
    };
    match enumerate_core_solutions(&mu, &constraints, options.core_bound) {
        Ok(sols) => {
            core.solutions = sols
                .iter()
                .map(|s| CoreSolution {
                    mo: s.mo.to_vec(),
                    eta: s.eta.to_vec(),
                    c: s.c.to_vec(),
                    r: s.r.to_vec(),
                })
                .collect();
        }
        Err(e) => out.error = Some(ErrorInfo::from_spectral(&e)),
    }
    out.core = Some(core);
    Ok(out)
}

fn intermediate(spec: &KGraphSpec, page: &E2Page) -> Intermediate {
    let snf = (0..spec.k)
        .map(|i| {
            let b = spec.b_matrix(i);
            Snf {
                color: i + 1,
                diagonal: smith_normal_form(&b).diagonal().iter().map(number).collect(),
                b: matrix(&b),
            }
        })
        .collect();
    let mut complexes = Vec::new();
    for part in [Part::Real, Part::Complex] {
        for degree in 0..part.period() {
            let cx = page.complex_for(part, degree);
            complexes.push(Complex {
                part: part_name(part),
                degree,
                groups: cx.groups.iter().map(|g| g.to_string()).collect(),
                boundaries: cx.boundaries.iter().map(|b| matrix(b.matrix())).collect(),
            });
        }
    }
    Intermediate { snf, complexes }
}

fn lifts(page: &E2Page) -> Vec<Lift> {
    let mut out = Vec::new();
    for part in [Part::Real, Part::Complex] {
        for q in 0..part.period() {
            for p in 0..=page.k {
                let h = page.cell(part, p, q as i64).expect("p within the strip");
                if h.group().is_trivial() {
                    continue;
                }
                let l = h.lift();
                out.push(Lift {
                    part: part_name(part),
                    p,
                    q,
                    group: h.group().to_string(),
                    generators: (0..l.cols())
                        .map(|j| l.column(j).iter().map(number).collect())
                        .collect(),
                });
            }
        }
    }
    out
}
