//! The Koszul-type complex whose homology is the E² page.
//!
//! `C_p = ⊕_{μ ∈ N_p} A_j` with `N_p` the strictly increasing `p`-tuples
//! from `1..=k` in lexicographic order. Block `(λ, μ)` of `∂_p` is
//! `(−1)^{i+1} ρ^{μ_i}` when `λ` is `μ` with its `i`-th entry removed.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::crmod::{build_graded_group, build_rho, GradedGroupA, Part, RhoMap};
use crate::exactalg::{AlgebraError, FgAbGroup, GroupHom, IntMatrix};
use crate::kgraph::{validate, KGraphError, KGraphSpec, VertexPartition};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KoszulError {
    #[error(transparent)]
    Graph(#[from] KGraphError),
    #[error("CompositionNotZero: boundary composite at p = {0} is nonzero")]
    CompositionNotZero(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `N_p`: strictly increasing `p`-tuples from `1..=k`, lexicographic.
pub fn index_set(k: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for x in start..=k {
            prefix.push(x);
            go(x + 1, k, left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if p <= k {
        go(1, k, p, &mut Vec::new(), &mut out);
    }
    out
}

/// `0 → C_k → … → C_0 → 0` for one part and degree.
#[derive(Clone, Debug)]
pub struct GradedChainComplex {
    pub part: Part,
    pub degree: usize,
    /// `groups[p] = C_p`.
    pub groups: Vec<FgAbGroup>,
    /// `boundaries[p - 1] = ∂_p: C_p → C_{p−1}`.
    pub boundaries: Vec<GroupHom>,
}

impl GradedChainComplex {
    pub fn k(&self) -> usize {
        self.groups.len() - 1
    }

    /// `∂_p`, or the zero map out of `C_0` / into `C_k` at the ends.
    pub fn boundary(&self, p: usize) -> GroupHom {
        if p == 0 {
            GroupHom::zero(self.groups[0].clone(), FgAbGroup::trivial())
        } else if p > self.k() {
            GroupHom::zero(FgAbGroup::trivial(), self.groups[self.k()].clone())
        } else {
            self.boundaries[p - 1].clone()
        }
    }
}

/// Builds the complex from precomputed `ρ` maps (one per color).
pub fn assemble_complex(
    a: &GradedGroupA,
    rhos: &[RhoMap],
    part: Part,
    degree: usize,
) -> Result<GradedChainComplex, AlgebraError> {
    let k = rhos.len();
    let base = a.group(part, degree).clone();
    let n = base.ambient_rank();
    let sets: Vec<Vec<Vec<usize>>> = (0..=k).map(|p| index_set(k, p)).collect();
    let groups: Vec<FgAbGroup> = sets.iter().map(|s| base.power(s.len())).collect();

    let mut boundaries = Vec::with_capacity(k);
    for p in 1..=k {
        let mut m = IntMatrix::zeros(sets[p - 1].len() * n, sets[p].len() * n);
        for (col, mu) in sets[p].iter().enumerate() {
            for i in 0..p {
                let mut lambda = mu.clone();
                let color = lambda.remove(i);
                let row = sets[p - 1]
                    .iter()
                    .position(|l| *l == lambda)
                    .expect("face of an index tuple");
                let rho = rhos[color - 1].map(part, degree).matrix();
                let block = if i % 2 == 0 {
                    rho.clone()
                } else {
                    rho.scale(&BigInt::from(-1))
                };
                m.set_block(row * n, col * n, &block);
            }
        }
        boundaries.push(GroupHom::new(groups[p].clone(), groups[p - 1].clone(), m)?);
    }
    Ok(GradedChainComplex {
        part,
        degree,
        groups,
        boundaries,
    })
}

/// Everything needed to build complexes for a validated spec.
#[derive(Clone, Debug)]
pub struct KoszulData {
    pub partition: VertexPartition,
    pub a: GradedGroupA,
    pub rhos: Vec<RhoMap>,
}

impl KoszulData {
    pub fn new(spec: &KGraphSpec) -> Result<Self, KoszulError> {
        let partition = validate(spec)?;
        let a = build_graded_group(&partition);
        let rhos = (0..spec.k)
            .map(|i| build_rho(spec, &partition, &a, i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { partition, a, rhos })
    }

    pub fn complex(&self, part: Part, degree: usize) -> Result<GradedChainComplex, KoszulError> {
        let cx = assemble_complex(&self.a, &self.rhos, part, degree)?;
        if let Some(p) = verify_square_zero(&cx).first_failure() {
            return Err(KoszulError::CompositionNotZero(p));
        }
        Ok(cx)
    }
}

/// Validates `spec` and builds the degree-`degree` complex of `part`.
pub fn build_complex(spec: &KGraphSpec, degree: usize, part: Part) -> Result<GradedChainComplex, KoszulError> {
    KoszulData::new(spec)?.complex(part, degree)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareZeroReport {
    /// `(p, ∂_p ∘ ∂_{p+1} == 0)` for `1 ≤ p < k`.
    pub checks: Vec<(usize, bool)>,
}

impl SquareZeroReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.checks.iter().find(|(_, ok)| !ok).map(|&(p, _)| p)
    }
}

pub fn verify_square_zero(cx: &GradedChainComplex) -> SquareZeroReport {
    let checks = (1..cx.boundaries.len())
        .map(|p| {
            let ok = cx.boundaries[p - 1]
                .compose(&cx.boundaries[p])
                .map(|h| h.is_zero())
                .unwrap_or(false);
            (p, ok)
        })
        .collect();
    SquareZeroReport { checks }
}

/// Binomial coefficient, small arguments only.
pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;

    fn one_vertex(entries: &[i64]) -> KGraphSpec {
        KGraphSpec {
            k: entries.len(),
            vertices: vec![String::from("v")],
            matrices: entries.iter().map(|&e| IntMatrix::from_rows(&[&[e]])).collect(),
            involution: vec![0],
        }
    }

    #[test]
    fn index_sets() {
        assert_eq!(index_set(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(index_set(3, 0), vec![Vec::<usize>::new()]);
        assert!(index_set(2, 3).is_empty());
        for k in 0..6 {
            for p in 0..=k {
                assert_eq!(index_set(k, p).len(), binomial(k, p));
            }
        }
    }

    #[test]
    fn rank_two_one_vertex() {
        // M1 = (n), M2 = (m) with n = 3, m = 5
        let cx = build_complex(&one_vertex(&[3, 5]), 0, Part::Complex).unwrap();
        assert_eq!(cx.boundary(1).matrix(), &IntMatrix::from_rows(&[&[-2, -4]]));
        assert_eq!(cx.boundary(2).matrix(), &IntMatrix::from_rows(&[&[4], &[-2]]));
    }

    #[test]
    fn rank_three_signs() {
        let cx = build_complex(&one_vertex(&[2, 3, 4]), 0, Part::Complex).unwrap();
        let (r1, r2, r3) = (-1, -2, -3);
        assert_eq!(cx.boundary(1).matrix(), &IntMatrix::from_rows(&[&[r1, r2, r3]]));
        assert_eq!(
            cx.boundary(2).matrix(),
            &IntMatrix::from_rows(&[&[-r2, -r3, 0], &[r1, 0, -r3], &[0, r1, r2]])
        );
        assert_eq!(cx.boundary(3).matrix(), &IntMatrix::from_rows(&[&[r3], &[-r2], &[r1]]));
    }

    #[test]
    fn rank_one_and_zero_degree() {
        let cx = build_complex(&one_vertex(&[3]), 3, Part::Real).unwrap();
        assert!(cx.groups.iter().all(FgAbGroup::is_trivial));
        let cx = build_complex(&one_vertex(&[3]), 0, Part::Real).unwrap();
        assert_eq!(cx.boundary(1).matrix(), &IntMatrix::from_rows(&[&[-2]]));
    }

    #[test]
    fn sign_error_is_detected() {
        let cx = build_complex(&one_vertex(&[3, 5]), 0, Part::Complex).unwrap();
        let mut bad = cx.clone();
        let wrong = IntMatrix::from_rows(&[&[4], &[2]]);
        bad.boundaries[1] = GroupHom::new(cx.groups[2].clone(), cx.groups[1].clone(), wrong).unwrap();
        let report = verify_square_zero(&bad);
        assert_eq!(report.first_failure(), Some(1));
        assert!(verify_square_zero(&cx).passed());
    }

    #[test]
    fn zero_boundaries_pass() {
        let g = FgAbGroup::cyclic(2);
        let cx = GradedChainComplex {
            part: Part::Real,
            degree: 1,
            groups: vec![g.clone(), g.power(2), g.clone()],
            boundaries: vec![
                GroupHom::zero(g.power(2), g.clone()),
                GroupHom::zero(g.clone(), g.power(2)),
            ],
        };
        assert!(verify_square_zero(&cx).passed());
    }
}
