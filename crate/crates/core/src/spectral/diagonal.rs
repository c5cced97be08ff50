use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::crmod::Part;
use crate::exactalg::{
    extension_candidates, AlgebraError, ExtensionBound, FgAbGroup, GroupHom, IntMatrix, InvariantFactors,
};

use super::page::{DifferentialEntry, DifferentialReport, E2Page};
use super::SpectralError;

/// `E_{p,q}` on a diagonal, in filtration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub p: usize,
    pub q: usize,
    pub group: InvariantFactors,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagonalStatus {
    /// At most one nonzero factor and no differential touches the diagonal.
    Determined(InvariantFactors),
    /// Several nonzero factors; every group the filtration allows.
    ExtensionAmbiguous(Vec<InvariantFactors>),
    /// Some differential may be nonzero; one variant per outcome.
    D2Ambiguous(Vec<D2Variant>),
    /// The filtration involves an infinite extension that is not forced to
    /// split, or a differential between infinite groups.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D2Variant {
    pub label: String,
    pub factors: Vec<InvariantFactors>,
    pub status: DiagonalStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalAssembly {
    pub part: Part,
    pub degree: usize,
    pub factors: Vec<Factor>,
    pub status: DiagonalStatus,
}

impl DiagonalAssembly {
    /// Every group the diagonal might assemble to; `None` if unresolved
    /// anywhere.
    pub fn possible_groups(&self) -> Option<Vec<InvariantFactors>> {
        let mut out = BTreeSet::new();
        collect(&self.status, &mut out)?;
        Some(out.into_iter().collect())
    }
}

fn collect(status: &DiagonalStatus, out: &mut BTreeSet<InvariantFactors>) -> Option<()> {
    match status {
        DiagonalStatus::Determined(g) => {
            out.insert(g.clone());
        }
        DiagonalStatus::ExtensionAmbiguous(gs) => out.extend(gs.iter().cloned()),
        DiagonalStatus::D2Ambiguous(vs) => {
            for v in vs {
                collect(&v.status, out)?;
            }
        }
        DiagonalStatus::Unresolved => return None,
    }
    Some(())
}

fn direct_sum(a: &InvariantFactors, b: &InvariantFactors) -> InvariantFactors {
    FgAbGroup::from_invariants(a)
        .direct_sum(&FgAbGroup::from_invariants(b))
        .invariants()
        .clone()
}

/// Resolves a filtration `F_0 ⊂ F_1 ⊂ …` with the given successive
/// quotients.
pub fn resolve_filtration(
    factors: &[InvariantFactors],
    bound: ExtensionBound,
) -> Result<DiagonalStatus, SpectralError> {
    let nonzero: Vec<&InvariantFactors> = factors.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.len() <= 1 {
        return Ok(DiagonalStatus::Determined(
            nonzero.first().map(|g| (*g).clone()).unwrap_or_default(),
        ));
    }
    let mut candidates: BTreeSet<InvariantFactors> = BTreeSet::new();
    candidates.insert(nonzero[0].clone());
    for quot in &nonzero[1..] {
        let free = InvariantFactors {
            torsion: Vec::new(),
            free_rank: quot.free_rank,
        };
        let torsion = InvariantFactors {
            torsion: quot.torsion.clone(),
            free_rank: 0,
        };
        let mut next = BTreeSet::new();
        for sub in &candidates {
            // a free quotient always splits off
            if torsion.is_zero() {
                next.insert(direct_sum(sub, &free));
                continue;
            }
            if !sub.is_finite() {
                return Ok(DiagonalStatus::Unresolved);
            }
            for e in extension_candidates(sub, &torsion, bound)? {
                next.insert(direct_sum(&e, &free));
            }
        }
        candidates = next;
    }
    Ok(DiagonalStatus::ExtensionAmbiguous(candidates.into_iter().collect()))
}

/// `(ker, coker)` of every nonzero homomorphism `src → tgt`, deduplicated.
/// `None` when there are infinitely many homomorphisms.
pub fn nonzero_hom_outcomes(
    src: &InvariantFactors,
    tgt: &InvariantFactors,
    max_work: u64,
) -> Result<Option<Vec<(InvariantFactors, InvariantFactors)>>, SpectralError> {
    let s = FgAbGroup::from_invariants(src);
    let t = FgAbGroup::from_invariants(tgt);
    let s_orders = s.canonical_orders().to_vec();
    let t_orders = t.canonical_orders().to_vec();

    // allowed values of each matrix entry (row j, column i)
    let mut choices: Vec<Vec<BigInt>> = Vec::new();
    let mut total: u64 = 1;
    for si in &s_orders {
        for tj in &t_orders {
            let opts: Vec<BigInt> = match (si.is_zero(), tj.is_zero()) {
                (false, true) => vec![BigInt::zero()],
                (true, true) => return Ok(None),
                (true, false) => (0..tj.to_u64().unwrap_or(u64::MAX).min(max_work + 1))
                    .map(BigInt::from)
                    .collect(),
                (false, false) => {
                    let step = tj / si.gcd(tj);
                    let count = (tj / &step).to_u64().unwrap_or(u64::MAX).min(max_work + 1);
                    (0..count).map(|x| &step * x).collect()
                }
            };
            total = total.saturating_mul(opts.len() as u64);
            choices.push(opts);
        }
    }
    if total > max_work {
        return Err(SpectralError::BoundExceeded { limit: max_work });
    }

    let rows = t_orders.len();
    let cols = s_orders.len();
    let mut seen = BTreeSet::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..cols {
            for j in 0..rows {
                let slot = i * rows + j;
                m[(j, i)] = choices[slot][idx[slot]].clone();
            }
        }
        let h = GroupHom::new(s.clone(), t.clone(), m).map_err(SpectralError::from)?;
        if !h.is_zero() {
            seen.insert((h.kernel().invariants().clone(), h.cokernel().invariants().clone()));
        }
        let mut slot = 0;
        loop {
            if slot == idx.len() {
                return Ok(Some(seen.into_iter().collect()));
            }
            idx[slot] += 1;
            if idx[slot] < choices[slot].len() {
                break;
            }
            idx[slot] = 0;
            slot += 1;
        }
    }
}

enum Outcome {
    Zero,
    Nonzero {
        ker: InvariantFactors,
        coker: InvariantFactors,
    },
}

fn on_diagonal(part: Part, cell: (usize, usize), t: usize) -> bool {
    (cell.0 + cell.1) % part.period() == t
}

/// Collects filtration factors per total degree and classifies each
/// diagonal against the differential report.
pub fn assemble_diagonals(
    page: &E2Page,
    report: &DifferentialReport,
    bound: ExtensionBound,
) -> Result<Vec<DiagonalAssembly>, SpectralError> {
    let mut out = Vec::new();
    for part in [Part::Real, Part::Complex] {
        let period = part.period();
        for t in 0..period {
            let factors: Vec<Factor> = (0..=page.k)
                .map(|p| {
                    let q = (t as i64 - p as i64).rem_euclid(period as i64) as usize;
                    Factor {
                        p,
                        q,
                        group: page.group(part, p as i64, q as i64).invariants().clone(),
                    }
                })
                .collect();
            let touching: Vec<&DifferentialEntry> = report
                .entries
                .iter()
                .filter(|e| e.part == part && (on_diagonal(part, e.source, t) || on_diagonal(part, e.target, t)))
                .collect();
            let status = if touching.is_empty() {
                let groups: Vec<InvariantFactors> = factors.iter().map(|f| f.group.clone()).collect();
                resolve_filtration(&groups, bound)?
            } else {
                d2_variants(page, part, t, &factors, &touching, bound)?
            };
            out.push(DiagonalAssembly {
                part,
                degree: t,
                factors,
                status,
            });
        }
    }
    Ok(out)
}

fn d2_variants(
    page: &E2Page,
    part: Part,
    t: usize,
    factors: &[Factor],
    touching: &[&DifferentialEntry],
    bound: ExtensionBound,
) -> Result<DiagonalStatus, SpectralError> {
    let mut per_entry: Vec<Vec<Outcome>> = Vec::new();
    for e in touching {
        let src = page.group(part, e.source.0 as i64, e.source.1 as i64);
        let tgt = page.group(part, e.target.0 as i64, e.target.1 as i64);
        let Some(nonzero) = nonzero_hom_outcomes(src.invariants(), tgt.invariants(), bound.max_work)? else {
            return Ok(DiagonalStatus::Unresolved);
        };
        let mut outcomes = vec![Outcome::Zero];
        outcomes.extend(nonzero.into_iter().map(|(ker, coker)| Outcome::Nonzero { ker, coker }));
        per_entry.push(outcomes);
    }

    let mut variants = Vec::new();
    let mut seen = BTreeSet::new();
    let mut idx = vec![0usize; per_entry.len()];
    loop {
        let mut groups: Vec<InvariantFactors> = factors.iter().map(|f| f.group.clone()).collect();
        let mut labels = Vec::new();
        for (n, e) in touching.iter().enumerate() {
            let tag = if touching.len() == 1 {
                format!("d{}", e.r)
            } else {
                format!("d{}({},{})", e.r, e.source.0, e.source.1)
            };
            match &per_entry[n][idx[n]] {
                Outcome::Zero => labels.push(format!("{tag}=0")),
                Outcome::Nonzero { ker, coker } => {
                    labels.push(format!("{tag}≠0"));
                    if on_diagonal(part, e.source, t) {
                        groups[e.source.0] = ker.clone();
                    }
                    if on_diagonal(part, e.target, t) {
                        groups[e.target.0] = coker.clone();
                    }
                }
            }
        }
        if seen.insert(groups.clone()) {
            let status = resolve_filtration(&groups, bound).or_else(|e| match e {
                SpectralError::Algebra(AlgebraError::InfiniteInput) => Ok(DiagonalStatus::Unresolved),
                other => Err(other),
            })?;
            variants.push(D2Variant {
                label: labels.join(", "),
                factors: groups,
                status,
            });
        }

        let mut n = 0;
        loop {
            if n == idx.len() {
                return Ok(DiagonalStatus::D2Ambiguous(variants));
            }
            idx[n] += 1;
            if idx[n] < per_entry[n].len() {
                break;
            }
            idx[n] = 0;
            n += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(orders: &[u64]) -> InvariantFactors {
        InvariantFactors::from_cyclic_orders(&orders.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>())
    }

    #[test]
    fn filtration_of_two_z2() {
        let s = resolve_filtration(&[inv(&[2]), inv(&[2]), inv(&[])], ExtensionBound::default()).unwrap();
        assert_eq!(s, DiagonalStatus::ExtensionAmbiguous(vec![inv(&[2, 2]), inv(&[4])]));
    }

    #[test]
    fn single_factor_is_determined() {
        let s = resolve_filtration(&[inv(&[]), inv(&[6])], ExtensionBound::default()).unwrap();
        assert_eq!(s, DiagonalStatus::Determined(inv(&[6])));
        let s = resolve_filtration(&[], ExtensionBound::default()).unwrap();
        assert_eq!(s, DiagonalStatus::Determined(InvariantFactors::zero()));
    }

    #[test]
    fn free_quotient_splits() {
        let z = InvariantFactors {
            torsion: vec![],
            free_rank: 1,
        };
        let s = resolve_filtration(&[inv(&[2]), z.clone()], ExtensionBound::default()).unwrap();
        assert_eq!(s, DiagonalStatus::ExtensionAmbiguous(vec![direct_sum(&inv(&[2]), &z)]));
        let s = resolve_filtration(&[z, inv(&[2])], ExtensionBound::default()).unwrap();
        assert_eq!(s, DiagonalStatus::Unresolved);
    }

    #[test]
    fn hom_outcomes_z2_to_z2n() {
        let out = nonzero_hom_outcomes(&inv(&[2]), &inv(&[6]), 1000).unwrap().unwrap();
        assert_eq!(out, vec![(inv(&[]), inv(&[3]))]);
        let out = nonzero_hom_outcomes(&inv(&[2]), &inv(&[2, 2]), 1000).unwrap().unwrap();
        assert_eq!(out, vec![(inv(&[]), inv(&[2]))]);
        let z = InvariantFactors {
            torsion: vec![],
            free_rank: 1,
        };
        assert_eq!(nonzero_hom_outcomes(&z, &z, 1000).unwrap(), None);
        assert!(nonzero_hom_outcomes(&inv(&[2]), &z, 1000).unwrap().unwrap().is_empty());
    }
}
