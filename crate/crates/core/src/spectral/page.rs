use alloc::vec::Vec;

use crate::crmod::{psi_on_a, Part};
use crate::exactalg::{homology, induced_hom, FgAbGroup, GroupHom, Homology, IntMatrix};
use crate::kgraph::KGraphSpec;
use crate::koszul::{GradedChainComplex, KoszulData};

use super::SpectralError;

/// `E²_{p,q}` for `0 ≤ p ≤ k`, real part 8-periodic and complex part
/// 2-periodic in `q`.
#[derive(Clone, Debug)]
pub struct E2Page {
    pub k: usize,
    pub data: KoszulData,
    pub real_complexes: Vec<GradedChainComplex>,
    pub complex_complexes: Vec<GradedChainComplex>,
    /// `real[q][p]`.
    real: Vec<Vec<Homology>>,
    /// `complex[q][p]`.
    complex: Vec<Vec<Homology>>,
}

impl E2Page {
    /// The homology at `(p, q)`; `None` outside `0..=k`.
    pub fn cell(&self, part: Part, p: usize, q: i64) -> Option<&Homology> {
        let q = q.rem_euclid(part.period() as i64) as usize;
        let row = match part {
            Part::Real => &self.real[q],
            Part::Complex => &self.complex[q],
        };
        row.get(p)
    }

    /// The group at `(p, q)`, trivial outside the strip.
    pub fn group(&self, part: Part, p: i64, q: i64) -> FgAbGroup {
        if p < 0 {
            return FgAbGroup::trivial();
        }
        self.cell(part, p as usize, q)
            .map(|h| h.group().clone())
            .unwrap_or_else(FgAbGroup::trivial)
    }

    pub fn complex_for(&self, part: Part, degree: usize) -> &GradedChainComplex {
        match part {
            Part::Real => &self.real_complexes[degree % part.period()],
            Part::Complex => &self.complex_complexes[degree % part.period()],
        }
    }
}

fn column_homology(cx: &GradedChainComplex) -> Result<Vec<Homology>, SpectralError> {
    (0..=cx.k())
        .map(|p| Ok(homology(&cx.boundary(p + 1), &cx.boundary(p))?))
        .collect()
}

/// Homology of every complex, with generator lifts retained.
pub fn compute_e2(spec: &KGraphSpec) -> Result<E2Page, SpectralError> {
    let data = KoszulData::new(spec)?;
    let real_complexes = (0..Part::Real.period())
        .map(|j| data.complex(Part::Real, j))
        .collect::<Result<Vec<_>, _>>()?;
    let complex_complexes = (0..Part::Complex.period())
        .map(|j| data.complex(Part::Complex, j))
        .collect::<Result<Vec<_>, _>>()?;
    let real = real_complexes.iter().map(column_homology).collect::<Result<_, _>>()?;
    let complex = complex_complexes
        .iter()
        .map(column_homology)
        .collect::<Result<_, _>>()?;
    Ok(E2Page {
        k: spec.k,
        data,
        real_complexes,
        complex_complexes,
        real,
        complex,
    })
}

/// A differential `d^r: E_{source} → E_{target}` with both ends nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DifferentialEntry {
    pub part: Part,
    pub r: usize,
    pub source: (usize, usize),
    pub target: (usize, usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DifferentialReport {
    pub entries: Vec<DifferentialEntry>,
}

impl DifferentialReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Every `d^r` with `2 ≤ r ≤ k` of bidegree `(−r, r−1)` between nonzero
/// cells; real part first, then by `r`, `p`, `q`.
pub fn differential_report(page: &E2Page) -> DifferentialReport {
    let mut entries = Vec::new();
    for part in [Part::Real, Part::Complex] {
        let period = part.period();
        for r in 2..=page.k {
            for p in r..=page.k {
                for q in 0..period {
                    let target = (p - r, (q + r - 1) % period);
                    let src = page.group(part, p as i64, q as i64);
                    let tgt = page.group(part, target.0 as i64, target.1 as i64);
                    if !src.is_trivial() && !tgt.is_trivial() {
                        entries.push(DifferentialEntry {
                            part,
                            r,
                            source: (p, q),
                            target,
                        });
                    }
                }
            }
        }
    }
    DifferentialReport { entries }
}

/// `KU_q` for `q = 0..8` with the involution `ψ_q`.
#[derive(Clone, Debug)]
pub struct KuData {
    pub ku: Vec<FgAbGroup>,
    pub psi: Vec<GroupHom>,
    /// The filtration degree `p` whose cell carries `KU_q`, if nonzero.
    pub cell: Vec<Option<usize>>,
}

/// Reads `KU_*` off the complex part and induces `ψ` from `ψ_A`.
///
/// On `H_p` of the degree-0 complex, `ψ_A` computes `ψ` in degree `p`;
/// each Bott step in the complex part flips the sign.
pub fn compute_ku_with_psi(page: &E2Page, report: &DifferentialReport) -> Result<KuData, SpectralError> {
    if let Some(e) = report.entries.iter().find(|e| e.part == Part::Complex) {
        return Err(SpectralError::AmbiguousComplexPart {
            degree: (e.source.0 + e.source.1) % 2,
        });
    }
    let psi_a = psi_on_a(&page.data.partition);
    let mut out = KuData {
        ku: Vec::new(),
        psi: Vec::new(),
        cell: Vec::new(),
    };
    for t in 0..Part::Real.period() {
        let nonzero: Vec<usize> = (0..=page.k)
            .filter(|&p| !page.group(Part::Complex, p as i64, t as i64 - p as i64).is_trivial())
            .collect();
        match nonzero.as_slice() {
            [] => {
                out.ku.push(FgAbGroup::trivial());
                out.psi.push(GroupHom::identity(FgAbGroup::trivial()));
                out.cell.push(None);
            }
            [p] => {
                let p = *p;
                // complex degree t - p is even here; the cell lives in the degree-0 complex
                let h = page.cell(Part::Complex, p, 0).expect("p within the strip");
                let induced = induced_hom(&chain_psi(&psi_a, h.middle()), h, h)?;
                let sign = if (t as i64 - p as i64).rem_euclid(4) == 0 {
                    1
                } else {
                    -1
                };
                out.ku.push(h.group().clone());
                out.psi.push(induced.scale(sign));
                out.cell.push(Some(p));
            }
            _ => return Err(SpectralError::AmbiguousComplexPart { degree: t }),
        }
    }
    Ok(out)
}

/// `ψ_A` acting on each summand of a chain group `A^m`.
fn chain_psi(psi_a: &GroupHom, chain: &FgAbGroup) -> GroupHom {
    let n = psi_a.source().ambient_rank();
    let copies = chain.ambient_rank().checked_div(n).unwrap_or(0);
    let mut m = IntMatrix::zeros(n * copies, n * copies);
    for i in 0..copies {
        m.set_block(i * n, i * n, psi_a.matrix());
    }
    GroupHom::new(chain.clone(), chain.clone(), m).expect("ψ_A is an automorphism of a free group")
}

/// `MU_q = ker(1 − ψ_q) / im(1 + ψ_q)`.
pub fn compute_mu(ku: &KuData) -> Result<Vec<FgAbGroup>, SpectralError> {
    ku.psi
        .iter()
        .map(|psi| {
            let id = GroupHom::identity(psi.source().clone());
            let plus = id.add(psi)?;
            let minus = id.sub(psi)?;
            Ok(homology(&plus, &minus)?.group().clone())
        })
        .collect()
}
