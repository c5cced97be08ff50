//! The building blocks `K^CR(ℝ)` and `K^CR(ℂ)`, the graded group
//! `A = K^CR(ℝ)^{G_f} ⊕ K^CR(ℂ)^{G_1}` and the endomorphisms `ρ^i` on it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactalg::{AlgebraError, FgAbGroup, GroupHom, IntMatrix};
use crate::kgraph::{block_decompose, reordered_b, KGraphSpec, VertexPartition};

/// Real degrees run over `0..8`, complex degrees over `0..2`.
pub const REAL_PERIOD: usize = 8;
pub const COMPLEX_PERIOD: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Real,
    Complex,
}

impl Part {
    pub fn period(self) -> usize {
        match self {
            Part::Real => REAL_PERIOD,
            Part::Complex => COMPLEX_PERIOD,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Part::Real => "real",
            Part::Complex => "complex",
        }
    }
}

/// Value table of one building block, degrees `0..8`.
///
/// `eta[n]: ko[n] → ko[n+1]`, `c[n]: ko[n] → ku[n]`, `r[n]: ku[n] → ko[n]`,
/// `psi[n]: ku[n] → ku[n]`, all as plain matrices on the generators of the
/// listed groups.
#[derive(Clone, Debug)]
pub struct CrBlockTable {
    pub name: &'static str,
    pub ko: Vec<FgAbGroup>,
    pub ku: Vec<FgAbGroup>,
    pub eta: Vec<IntMatrix>,
    pub c: Vec<IntMatrix>,
    pub r: Vec<IntMatrix>,
    pub psi: Vec<IntMatrix>,
}

#[derive(Clone, Debug)]
pub struct CrBlockTables {
    pub real: CrBlockTable,
    pub complex: CrBlockTable,
}

fn groups(orders: &[i64]) -> Vec<FgAbGroup> {
    // -1 marks the trivial group
    orders
        .iter()
        .map(|&d| match d {
            -1 => FgAbGroup::trivial(),
            d => FgAbGroup::cyclic(d as u64),
        })
        .collect()
}

fn scalars(entries: &[i64], ko: &[FgAbGroup], ku: &[FgAbGroup], ko_to_ku: bool) -> Vec<IntMatrix> {
    (0..REAL_PERIOD)
        .map(|n| {
            let (rows, cols) = if ko_to_ku {
                (ku[n].ambient_rank(), ko[n].ambient_rank())
            } else {
                (ko[n].ambient_rank(), ku[n].ambient_rank())
            };
            let mut m = IntMatrix::zeros(rows, cols);
            if rows == 1 && cols == 1 {
                m[(0, 0)] = BigInt::from(entries[n]);
            }
            m
        })
        .collect()
}

impl CrBlockTables {
    /// The standard tables.
    pub fn standard() -> Self {
        Self {
            real: real_block(),
            complex: complex_block(),
        }
    }
}

fn real_block() -> CrBlockTable {
    let ko = groups(&[0, 2, 2, -1, 0, -1, -1, -1]);
    let ku = groups(&[0, -1, 0, -1, 0, -1, 0, -1]);
    let eta = (0..REAL_PERIOD)
        .map(|n| {
            let next = (n + 1) % REAL_PERIOD;
            let mut m = IntMatrix::zeros(ko[next].ambient_rank(), ko[n].ambient_rank());
            if n <= 1 {
                m[(0, 0)] = BigInt::one();
            }
            m
        })
        .collect();
    let c = scalars(&[1, 0, 0, 0, 2, 0, 0, 0], &ko, &ku, true);
    let r = scalars(&[2, 0, 1, 0, 1, 0, 0, 0], &ko, &ku, false);
    let psi = (0..REAL_PERIOD)
        .map(|n| {
            let sign = [1, 0, -1, 0, 1, 0, -1, 0][n];
            let size = ku[n].ambient_rank();
            IntMatrix::identity(size).scale(&BigInt::from(sign))
        })
        .collect();
    CrBlockTable {
        name: "K^CR(R)",
        ko,
        ku,
        eta,
        c,
        r,
        psi,
    }
}

fn complex_block() -> CrBlockTable {
    let ko = groups(&[0, -1, 0, -1, 0, -1, 0, -1]);
    let ku: Vec<FgAbGroup> = (0..REAL_PERIOD)
        .map(|n| {
            if n % 2 == 0 {
                FgAbGroup::free(2)
            } else {
                FgAbGroup::trivial()
            }
        })
        .collect();
    let eta = (0..REAL_PERIOD)
        .map(|n| IntMatrix::zeros(ko[(n + 1) % REAL_PERIOD].ambient_rank(), ko[n].ambient_rank()))
        .collect();
    let sign = |n: usize| if n.is_multiple_of(4) { 1 } else { -1 };
    let c = (0..REAL_PERIOD)
        .map(|n| match n % 2 {
            0 => IntMatrix::from_rows(&[&[sign(n)], &[1]]),
            _ => IntMatrix::zeros(0, 0),
        })
        .collect();
    let r = (0..REAL_PERIOD)
        .map(|n| match n % 2 {
            0 => IntMatrix::from_rows(&[&[sign(n), 1]]),
            _ => IntMatrix::zeros(0, 0),
        })
        .collect();
    let psi = (0..REAL_PERIOD)
        .map(|n| match n % 2 {
            0 => IntMatrix::from_rows(&[&[0, sign(n)], &[sign(n), 0]]),
            _ => IntMatrix::zeros(0, 0),
        })
        .collect();
    CrBlockTable {
        name: "K^CR(C)",
        ko,
        ku,
        eta,
        c,
        r,
        psi,
    }
}

/// The relations checked by [`check_cr_relations`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CrRelation {
    WellDefined,
    RC,
    CR,
    TwoEta,
    EtaR,
    CEta,
    EtaCubed,
    PsiC,
    RPsi,
    PsiSquared,
}

impl fmt::Display for CrRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrRelation::WellDefined => "maps well defined",
            CrRelation::RC => "rc = 2",
            CrRelation::CR => "cr = 1 + psi",
            CrRelation::TwoEta => "2 eta = 0",
            CrRelation::EtaR => "eta r = 0",
            CrRelation::CEta => "c eta = 0",
            CrRelation::EtaCubed => "eta^3 = 0",
            CrRelation::PsiC => "psi c = c",
            CrRelation::RPsi => "r psi = r",
            CrRelation::PsiSquared => "psi^2 = 1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub table: &'static str,
    pub relation: CrRelation,
    pub degree: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrRelationReport {
    pub checks: Vec<RelationCheck>,
}

impl CrRelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

struct BlockMaps {
    eta: Vec<GroupHom>,
    c: Vec<GroupHom>,
    r: Vec<GroupHom>,
    psi: Vec<GroupHom>,
}

fn block_maps(t: &CrBlockTable) -> Result<BlockMaps, AlgebraError> {
    let mut maps = BlockMaps {
        eta: Vec::new(),
        c: Vec::new(),
        r: Vec::new(),
        psi: Vec::new(),
    };
    for n in 0..REAL_PERIOD {
        let next = (n + 1) % REAL_PERIOD;
        maps.eta
            .push(GroupHom::new(t.ko[n].clone(), t.ko[next].clone(), t.eta[n].clone())?);
        maps.c
            .push(GroupHom::new(t.ko[n].clone(), t.ku[n].clone(), t.c[n].clone())?);
        maps.r
            .push(GroupHom::new(t.ku[n].clone(), t.ko[n].clone(), t.r[n].clone())?);
        maps.psi
            .push(GroupHom::new(t.ku[n].clone(), t.ku[n].clone(), t.psi[n].clone())?);
    }
    Ok(maps)
}

/// Checks the relations among `η, c, r, ψ` degreewise on both tables.
pub fn check_cr_relations(tables: &CrBlockTables) -> CrRelationReport {
    let mut report = CrRelationReport::default();
    for t in [&tables.real, &tables.complex] {
        let maps = match block_maps(t) {
            Ok(m) => m,
            Err(_) => {
                report.checks.push(RelationCheck {
                    table: t.name,
                    relation: CrRelation::WellDefined,
                    degree: 0,
                    holds: false,
                });
                continue;
            }
        };
        for n in 0..REAL_PERIOD {
            let mut push = |relation, holds: Result<bool, AlgebraError>| {
                report.checks.push(RelationCheck {
                    table: t.name,
                    relation,
                    degree: n,
                    holds: holds.unwrap_or(false),
                });
            };
            let id_ko = GroupHom::identity(t.ko[n].clone());
            let id_ku = GroupHom::identity(t.ku[n].clone());
            let n1 = (n + 1) % REAL_PERIOD;
            let n2 = (n + 2) % REAL_PERIOD;
            push(
                CrRelation::RC,
                maps.r[n].compose(&maps.c[n]).and_then(|x| x.equals(&id_ko.scale(2))),
            );
            push(
                CrRelation::CR,
                maps.c[n]
                    .compose(&maps.r[n])
                    .and_then(|x| x.equals(&id_ku.add(&maps.psi[n])?)),
            );
            push(CrRelation::TwoEta, Ok(maps.eta[n].scale(2).is_zero()));
            push(CrRelation::EtaR, maps.eta[n].compose(&maps.r[n]).map(|x| x.is_zero()));
            push(CrRelation::CEta, maps.c[n1].compose(&maps.eta[n]).map(|x| x.is_zero()));
            push(
                CrRelation::EtaCubed,
                maps.eta[n2]
                    .compose(&maps.eta[n1])
                    .and_then(|x| x.compose(&maps.eta[n]))
                    .map(|x| x.is_zero()),
            );
            push(
                CrRelation::PsiC,
                maps.psi[n].compose(&maps.c[n]).and_then(|x| x.equals(&maps.c[n])),
            );
            push(
                CrRelation::RPsi,
                maps.r[n].compose(&maps.psi[n]).and_then(|x| x.equals(&maps.r[n])),
            );
            push(
                CrRelation::PsiSquared,
                maps.psi[n].compose(&maps.psi[n]).and_then(|x| x.equals(&id_ku)),
            );
        }
    }
    report
}

/// `A` in every degree: real part `A^O_j` for `j < 8`, complex part `A^U_j`
/// for `j < 2`.
///
/// Real coordinates are `(G_f, G_1)`; complex coordinates `(G_f, G_1, G_2)`.
#[derive(Clone, Debug)]
pub struct GradedGroupA {
    pub fixed: usize,
    pub paired: usize,
    pub real: Vec<FgAbGroup>,
    pub complex: Vec<FgAbGroup>,
}

impl GradedGroupA {
    pub fn group(&self, part: Part, degree: usize) -> &FgAbGroup {
        match part {
            Part::Real => &self.real[degree % REAL_PERIOD],
            Part::Complex => &self.complex[degree % COMPLEX_PERIOD],
        }
    }
}

pub fn build_graded_group(partition: &VertexPartition) -> GradedGroupA {
    let f = partition.g_f.len();
    let g = partition.g_1.len();
    let two = |n: usize| FgAbGroup::cyclic_sum(&vec![BigInt::from(2); n]);
    let real = vec![
        FgAbGroup::free(f + g),
        two(f),
        two(f).direct_sum(&FgAbGroup::free(g)),
        FgAbGroup::trivial(),
        FgAbGroup::free(f + g),
        FgAbGroup::trivial(),
        FgAbGroup::free(g),
        FgAbGroup::trivial(),
    ];
    let complex = vec![FgAbGroup::free(f + 2 * g), FgAbGroup::trivial()];
    GradedGroupA {
        fixed: f,
        paired: g,
        real,
        complex,
    }
}

/// `ρ^i` on every degree of `A`.
#[derive(Clone, Debug)]
pub struct RhoMap {
    pub color: usize,
    pub real: Vec<GroupHom>,
    pub complex: Vec<GroupHom>,
}

impl RhoMap {
    pub fn map(&self, part: Part, degree: usize) -> &GroupHom {
        match part {
            Part::Real => &self.real[degree % REAL_PERIOD],
            Part::Complex => &self.complex[degree % COMPLEX_PERIOD],
        }
    }
}

fn two_by_two(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> IntMatrix {
    a.hstack(b).vstack(&c.hstack(d))
}

/// The real-degree matrices of `ρ` from the blocks of `B_i`.
pub fn real_rho_matrices(spec: &KGraphSpec, partition: &VertexPartition, color: usize) -> Vec<IntMatrix> {
    let b = block_decompose(spec, partition, color);
    let f = partition.g_f.len();
    let g = partition.g_1.len();
    let two = BigInt::from(2);
    let sum = b.b22.add(&b.b23);
    let diff = b.b22.sub(&b.b23);

    let deg0 = two_by_two(&b.b11, &b.b12.scale(&two), &b.b21, &sum);
    let mut deg1 = b.b11.clone();
    let mut deg2 = two_by_two(&b.b11, &b.b12, &IntMatrix::zeros(g, f), &diff);
    for i in 0..f {
        deg1.reduce_row_mod(i, &two);
        deg2.reduce_row_mod(i, &two);
    }
    let deg4 = two_by_two(&b.b11, &b.b12, &b.b21.scale(&two), &sum);
    vec![
        deg0,
        deg1,
        deg2,
        IntMatrix::zeros(0, 0),
        deg4,
        IntMatrix::zeros(0, 0),
        diff,
        IntMatrix::zeros(0, 0),
    ]
}

/// Assembles `ρ^color`; fails only if a matrix breaks its certificate,
/// which a validated spec never does.
pub fn build_rho(
    spec: &KGraphSpec,
    partition: &VertexPartition,
    a: &GradedGroupA,
    color: usize,
) -> Result<RhoMap, AlgebraError> {
    let real = real_rho_matrices(spec, partition, color)
        .into_iter()
        .enumerate()
        .map(|(j, m)| GroupHom::new(a.real[j].clone(), a.real[j].clone(), m))
        .collect::<Result<Vec<_>, _>>()?;
    let complex = vec![
        GroupHom::new(
            a.complex[0].clone(),
            a.complex[0].clone(),
            reordered_b(spec, partition, color),
        )?,
        GroupHom::zero(a.complex[1].clone(), a.complex[1].clone()),
    ];
    Ok(RhoMap { color, real, complex })
}

/// `ψ_A` on complex degree 0: fixes `G_f`, swaps `G_1` with `G_2`.
pub fn psi_on_a(partition: &VertexPartition) -> GroupHom {
    let f = partition.g_f.len();
    let g = partition.g_1.len();
    let one = BigInt::one();
    let mut m = IntMatrix::zeros(f + 2 * g, f + 2 * g);
    for i in 0..f {
        m[(i, i)] = one.clone();
    }
    for i in 0..g {
        m[(f + i, f + g + i)] = one.clone();
        m[(f + g + i, f + i)] = one.clone();
    }
    GroupHom::new(FgAbGroup::free(f + 2 * g), FgAbGroup::free(f + 2 * g), m).expect("permutation of a free group")
}

/// Degree-0 complexification `A^O_0 → A^U_0`: `[[I,0],[0,I],[0,I]]`.
pub fn complexification_degree0(partition: &VertexPartition) -> IntMatrix {
    let f = partition.g_f.len();
    let g = partition.g_1.len();
    let mut m = IntMatrix::zeros(f + 2 * g, f + g);
    let one = BigInt::one();
    for i in 0..f + g {
        m[(i, i)] = one.clone();
    }
    for i in 0..g {
        m[(f + g + i, f + i)] = one.clone();
    }
    m
}

/// `B·c == c·ρ^O_0` for one color.
pub fn c_naturality_holds(spec: &KGraphSpec, partition: &VertexPartition, color: usize) -> bool {
    let c = complexification_degree0(partition);
    let complex = reordered_b(spec, partition, color);
    let real = &real_rho_matrices(spec, partition, color)[0];
    complex.mul(&c) == c.mul(real)
}

/// Table name and relation, for human-readable reports.
pub fn describe_check(c: &RelationCheck) -> String {
    alloc::format!(
        "{} degree {}: {} {}",
        c.table,
        c.degree,
        c.relation,
        if c.holds { "holds" } else { "FAILS" }
    )
}
