//! Rank-level search over the periodic core exact sequence
//!
//! `MO_i →η MO_{i+1} →c MU_i →r MO_{i−2} →η MO_{i−1} → …` (indices mod 8).
//!
//! Every group is an elementary abelian 2-group, so each is a rank and each
//! arrow an image rank `e_i`, `c_i`, `r_i`. Exactness reads
//! `mo_{i+1} = e_i + c_i`, `mu_i = c_i + r_i`, `mo_{i−2} = r_i + e_{i−2}`.
//! Since `MO` is the image of `η` and `η³ = 0`, also `η∘η = 0` on `MO`,
//! i.e. `e_i + e_{i+1} ≤ mo_{i+1}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::crmod::Part;
use crate::exactalg::FgAbGroup;

use super::diagonal::DiagonalAssembly;
use super::SpectralError;

const N: usize = 8;
const WORK_LIMIT: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Arrow {
    /// `η_i: MO_i → MO_{i+1}`.
    Eta,
    /// `c_i: MO_{i+1} → MU_i`.
    C,
    /// `r_i: MU_i → MO_{i−2}`.
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ArrowProperty {
    Zero,
    Injective,
    Surjective,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoreConstraints {
    /// Known ranks of `MO_i`.
    pub mo_known: [Option<usize>; N],
    /// Upper bounds on ranks of `MO_i`.
    pub mo_upper: [Option<usize>; N],
    pub arrows: Vec<(Arrow, usize, ArrowProperty)>,
}

/// One consistent `MO` table with a witnessing choice of image ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSolution {
    pub mo: [usize; N],
    pub eta: [usize; N],
    pub c: [usize; N],
    pub r: [usize; N],
}

/// Ranks of the `MU_q`, rejecting anything that is not elementary 2-torsion.
pub fn mu_ranks(mu: &[FgAbGroup]) -> Result<[usize; N], SpectralError> {
    let mut out = [0; N];
    for q in 0..N {
        let inv = mu[q].invariants();
        if !inv.is_elementary_two_group() {
            return Err(SpectralError::NonElementaryMu { degree: q });
        }
        out[q] = inv.torsion.len();
    }
    Ok(out)
}

fn idx(i: i64) -> usize {
    i.rem_euclid(N as i64) as usize
}

/// All `MO` rank tables (each entry at most `bound`) consistent with
/// exactness and the constraints, sorted, one witness each.
pub fn enumerate_core_solutions(
    mu: &[FgAbGroup],
    constraints: &CoreConstraints,
    bound: usize,
) -> Result<Vec<CoreSolution>, SpectralError> {
    let mu = mu_ranks(mu)?;
    let work = mu
        .iter()
        .fold(bound as u64 + 1, |acc, &m| acc.saturating_mul(m as u64 + 1));
    if work > WORK_LIMIT {
        return Err(SpectralError::BoundExceeded { limit: WORK_LIMIT });
    }

    let mut found: BTreeMap<[usize; N], CoreSolution> = BTreeMap::new();
    let mut c = [0usize; N];
    loop {
        let r: [usize; N] = core::array::from_fn(|i| mu[i] - c[i]);
        for e0 in 0..=bound {
            if let Some(sol) = close_cycle(e0, &c, &r, bound) {
                if satisfies(&sol, &mu, constraints) {
                    found.entry(sol.mo).or_insert(sol);
                }
            }
        }
        // odometer over c_i ∈ [0, mu_i]
        let mut i = 0;
        loop {
            if i == N {
                return if found.is_empty() {
                    Err(SpectralError::NoSolution)
                } else {
                    Ok(found.into_values().collect())
                };
            }
            c[i] += 1;
            if c[i] <= mu[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// `mo_{i+1} = e_i + c_i = r_{i+3} + e_{i+1}` fixes `e` from `e_0`.
fn close_cycle(e0: usize, c: &[usize; N], r: &[usize; N], bound: usize) -> Option<CoreSolution> {
    let mut e = [0i64; N];
    e[0] = e0 as i64;
    for i in 1..N {
        e[i] = e[i - 1] + c[i - 1] as i64 - r[idx(i as i64 + 2)] as i64;
        if e[i] < 0 {
            return None;
        }
    }
    if e[N - 1] + c[N - 1] as i64 - r[idx(N as i64 + 2)] as i64 != e[0] {
        return None;
    }
    let eta: [usize; N] = core::array::from_fn(|i| e[i] as usize);
    let mut mo = [0usize; N];
    for i in 0..N {
        mo[idx(i as i64 + 1)] = eta[i] + c[i];
    }
    if mo.iter().any(|&m| m > bound) {
        return None;
    }
    Some(CoreSolution { mo, eta, c: *c, r: *r })
}

fn satisfies(sol: &CoreSolution, mu: &[usize; N], k: &CoreConstraints) -> bool {
    for i in 0..N {
        let next = idx(i as i64 + 1);
        if sol.eta[i] + sol.eta[next] > sol.mo[next] {
            return false;
        }
        if k.mo_known[i].is_some_and(|m| m != sol.mo[i]) || k.mo_upper[i].is_some_and(|m| sol.mo[i] > m) {
            return false;
        }
    }
    k.arrows.iter().all(|&(arrow, i, prop)| {
        let i = i % N;
        let (rank, source, target) = match arrow {
            Arrow::Eta => (sol.eta[i], sol.mo[i], sol.mo[idx(i as i64 + 1)]),
            Arrow::C => (sol.c[i], sol.mo[idx(i as i64 + 1)], mu[i]),
            Arrow::R => (sol.r[i], mu[i], sol.mo[idx(i as i64 - 2)]),
        };
        match prop {
            ArrowProperty::Zero => rank == 0,
            ArrowProperty::Injective => rank == source,
            ArrowProperty::Surjective => rank == target,
        }
    })
}

/// Constraints implied by the real diagonals: `MO_i` is the image of
/// `η: KO_{i−1} → KO_i`, so it vanishes when either end must vanish, and its
/// rank is at most the 2-rank of both the 2-torsion of `KO_i` and
/// `KO_{i−1} ⊗ ℤ_2`.
pub fn constraints_from_diagonals(diagonals: &[DiagonalAssembly]) -> CoreConstraints {
    let mut ko: [Option<Vec<crate::exactalg::InvariantFactors>>; N] = Default::default();
    for d in diagonals.iter().filter(|d| d.part == Part::Real) {
        ko[d.degree] = d.possible_groups();
    }
    let mut out = CoreConstraints::default();
    for i in 0..N {
        let prev = idx(i as i64 - 1);
        let torsion_two = ko[i].as_ref().map(|gs| {
            gs.iter()
                .map(|g| g.torsion.iter().filter(|d| !d.bit(0)).count())
                .max()
                .unwrap_or(0)
        });
        let mod_two = ko[prev]
            .as_ref()
            .map(|gs| gs.iter().map(|g| g.two_rank()).max().unwrap_or(0));
        let upper = match (torsion_two, mod_two) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if upper == Some(0) {
            out.mo_known[i] = Some(0);
        } else {
            out.mo_upper[i] = upper;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn z2s(n: usize) -> Vec<FgAbGroup> {
        vec![FgAbGroup::cyclic(2); n]
    }

    #[test]
    fn zero_mu_forces_zero() {
        let mu = vec![FgAbGroup::trivial(); 8];
        let sols = enumerate_core_solutions(&mu, &CoreConstraints::default(), 8).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].mo, [0; 8]);
    }

    #[test]
    fn non_elementary_mu() {
        let mut mu = z2s(8);
        mu[3] = FgAbGroup::cyclic(4);
        assert_eq!(
            enumerate_core_solutions(&mu, &CoreConstraints::default(), 8),
            Err(SpectralError::NonElementaryMu { degree: 3 })
        );
    }

    #[test]
    fn contradictory_constraints() {
        let k = CoreConstraints {
            mo_known: [Some(5); 8],
            ..Default::default()
        };
        assert_eq!(enumerate_core_solutions(&z2s(8), &k, 8), Err(SpectralError::NoSolution));
    }

    #[test]
    fn arrow_constraints_filter() {
        let k = CoreConstraints {
            mo_known: [Some(0), None, None, None, None, None, Some(0), Some(0)],
            ..Default::default()
        };
        assert_eq!(enumerate_core_solutions(&z2s(8), &k, 8).unwrap().len(), 2);
        let k = CoreConstraints {
            arrows: vec![(Arrow::Eta, 1, ArrowProperty::Zero)],
            ..k
        };
        let sols = enumerate_core_solutions(&z2s(8), &k, 8).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].mo, [0, 1, 1, 2, 1, 1, 0, 0]);
    }
}
