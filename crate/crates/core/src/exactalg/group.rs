//! Finitely presented abelian groups `ℤ^n / colspan(R)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_with_inverse;

/// Invariant-factor form: `ℤ_{d_1} ⊕ … ⊕ ℤ_{d_t} ⊕ ℤ^f` with `2 ≤ d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct InvariantFactors {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl InvariantFactors {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds the canonical form of an arbitrary direct sum of cyclic groups.
    ///
    /// Entries `0` count as free summands and entries `±1` are dropped.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let relations = IntMatrix::diagonal(orders);
        FgAbGroup::from_relations(relations).invariants().clone()
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Number of nontrivial canonical generators.
    pub fn generator_count(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// True when every element has order dividing 2.
    pub fn is_elementary_two_group(&self) -> bool {
        self.free_rank == 0 && self.torsion.iter().all(|d| *d == BigInt::from(2))
    }

    /// Dimension of `G ⊗ ℤ_2` over the field with two elements.
    pub fn two_rank(&self) -> usize {
        self.free_rank + self.torsion.iter().filter(|d| d.is_even()).count()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !core::mem::take(&mut first) {
                f.write_str(" + ")?;
            }
            Ok(())
        };
        for d in &self.torsion {
            sep(f)?;
            write!(f, "Z_{d}")?;
        }
        for _ in 0..self.free_rank {
            sep(f)?;
            f.write_str("Z")?;
        }
        Ok(())
    }
}

/// A finitely generated abelian group given by generators and relators.
///
/// The relators are the columns of `relations`, expressed in the
/// `ambient_rank` generators. Construction computes the invariant factors
/// together with a change of basis to canonical generators, so elements can
/// be moved between ambient and canonical coordinates.
///
/// Equality is isomorphism: two groups compare equal exactly when their
/// invariant factors agree. Use [`FgAbGroup::same_presentation`] when the
/// presentation itself matters.
#[derive(Clone)]
pub struct FgAbGroup {
    relations: IntMatrix,
    invariants: InvariantFactors,
    /// `canonical × ambient`: canonical coordinates of an ambient element.
    to_canonical: IntMatrix,
    /// `ambient × canonical`: ambient representative of each canonical generator.
    from_canonical: IntMatrix,
    /// Order of each canonical generator; zero marks a free generator.
    canonical_orders: Vec<BigInt>,
}

impl FgAbGroup {
    /// The group presented by the columns of `relations`.
    pub fn from_relations(relations: IntMatrix) -> Self {
        let n = relations.rows();
        let s = smith_with_inverse(&relations);
        let diag = s.snf.diagonal();

        let mut keep = Vec::new();
        let mut orders = Vec::new();
        for i in 0..n {
            let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_one() {
                continue;
            }
            keep.push(i);
            orders.push(d);
        }
        // Smith form lists units, then torsion, then zeros: canonical order
        // is already torsion-first.
        let torsion: Vec<BigInt> = orders.iter().filter(|d| !d.is_zero()).cloned().collect();
        let free_rank = orders.len() - torsion.len();
        let to_canonical = s.snf.u.select_rows(&keep);
        let from_canonical = s.u_inv.select_columns(&keep);
        Self {
            relations,
            invariants: InvariantFactors { torsion, free_rank },
            to_canonical,
            from_canonical,
            canonical_orders: orders,
        }
    }

    /// `ℤ^n` with no relations.
    pub fn free(n: usize) -> Self {
        Self::from_relations(IntMatrix::zeros(n, 0))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `ℤ_{d_1} ⊕ … ⊕ ℤ_{d_n}` with one generator per entry; `0` means `ℤ`.
    pub fn cyclic_sum(orders: &[BigInt]) -> Self {
        let cols: Vec<usize> = (0..orders.len()).filter(|&i| !orders[i].is_zero()).collect();
        let relations = IntMatrix::diagonal(orders).select_columns(&cols);
        Self::from_relations(relations)
    }

    /// Cyclic group of order `d`, or `ℤ` when `d == 0`.
    pub fn cyclic(d: u64) -> Self {
        Self::cyclic_sum(&[BigInt::from(d)])
    }

    /// The canonical presentation of the given invariant-factor form.
    pub fn from_invariants(inv: &InvariantFactors) -> Self {
        let mut orders = inv.torsion.clone();
        orders.extend(core::iter::repeat_n(BigInt::zero(), inv.free_rank));
        Self::cyclic_sum(&orders)
    }

    pub fn ambient_rank(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn invariants(&self) -> &InvariantFactors {
        &self.invariants
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.invariants.is_finite()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.invariants.order()
    }

    /// Orders of the canonical generators, torsion first; `0` marks `ℤ`.
    pub fn canonical_orders(&self) -> &[BigInt] {
        &self.canonical_orders
    }

    pub fn to_canonical_matrix(&self) -> &IntMatrix {
        &self.to_canonical
    }

    pub fn from_canonical_matrix(&self) -> &IntMatrix {
        &self.from_canonical
    }

    /// Same ambient generators and same relator columns.
    pub fn same_presentation(&self, other: &Self) -> bool {
        self.relations == other.relations
    }

    /// Canonical coordinates of an ambient element, reduced modulo the
    /// generator orders.
    pub fn canonical_coordinates(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut c = self.to_canonical.mul_vec(x);
        for (ci, d) in c.iter_mut().zip(&self.canonical_orders) {
            if !d.is_zero() {
                *ci = ci.mod_floor(d);
            }
        }
        c
    }

    /// Whether the ambient vector `x` lies in the relation lattice.
    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        self.canonical_coordinates(x).iter().all(Zero::is_zero)
    }

    /// Whether every column of `m` represents zero.
    pub fn columns_are_zero(&self, m: &IntMatrix) -> bool {
        assert_eq!(m.rows(), self.ambient_rank());
        (0..m.cols()).all(|j| self.is_zero_element(&m.column(j)))
    }

    /// Order of the element with ambient coordinates `x`; `None` if infinite.
    pub fn element_order(&self, x: &[BigInt]) -> Option<BigInt> {
        let c = self.canonical_coordinates(x);
        let mut ord = BigInt::one();
        for (ci, d) in c.iter().zip(&self.canonical_orders) {
            if ci.is_zero() {
                continue;
            }
            if d.is_zero() {
                return None;
            }
            ord = ord.lcm(&(d / ci.gcd(d)));
        }
        Some(ord)
    }

    /// External direct sum; ambient generators are concatenated.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_relations(self.relations.direct_sum(&other.relations))
    }

    /// Direct sum of `n` copies.
    pub fn power(&self, n: usize) -> Self {
        let mut rel = IntMatrix::zeros(0, 0);
        for _ in 0..n {
            rel = rel.direct_sum(&self.relations);
        }
        Self::from_relations(rel)
    }

    /// The same group re-presented on its canonical generators.
    pub fn canonical_form(&self) -> Self {
        Self::from_invariants(&self.invariants)
    }

    /// Enumerates every element as canonical coordinates. Finite groups only.
    pub fn canonical_elements(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.is_finite() {
            return None;
        }
        let mut out: Vec<Vec<BigInt>> = alloc::vec![Vec::new()];
        for d in &self.canonical_orders {
            let d = d.to_u64()?;
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for prefix in &out {
                for x in 0..d {
                    let mut v = prefix.clone();
                    v.push(BigInt::from(x));
                    next.push(v);
                }
            }
            out = next;
        }
        Some(out)
    }

    /// Human-readable invariant-factor form, e.g. `Z_2 + Z_4 + Z`.
    pub fn describe(&self) -> String {
        alloc::format!("{}", self.invariants)
    }
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.invariants == other.invariants
    }
}

impl Eq for FgAbGroup {}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.invariants, f)
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FgAbGroup({} on {} generators)",
            self.invariants,
            self.ambient_rank()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn inv(torsion: &[u64], free_rank: usize) -> InvariantFactors {
        InvariantFactors {
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
            free_rank,
        }
    }

    #[test]
    fn presentation_of_z2n() {
        // coker (B B) for the three-vertex family with n = 2
        let b = IntMatrix::from_rows(&[&[0, -1, -1], &[-1, 1, -1], &[-1, -1, 1]]);
        let g = FgAbGroup::from_relations(b.hstack(&b));
        assert_eq!(g.invariants(), &inv(&[4], 0));
    }

    #[test]
    fn empty_relations_give_free_group() {
        let g = FgAbGroup::from_relations(IntMatrix::zeros(3, 0));
        assert_eq!(g.invariants(), &inv(&[], 3));
    }

    #[test]
    fn diagonal_already_canonical() {
        let g = FgAbGroup::from_relations(IntMatrix::diagonal(&[2, 2, 6].map(BigInt::from)));
        assert_eq!(g.invariants(), &inv(&[2, 2, 6], 0));
        assert_eq!(g.to_string(), "Z_2 + Z_2 + Z_6");
    }

    #[test]
    fn coordinates_detect_relations() {
        let g = FgAbGroup::from_relations(IntMatrix::from_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(g.invariants(), &inv(&[6], 0));
        assert!(g.is_zero_element(&[BigInt::from(4), BigInt::from(9)]));
        assert!(!g.is_zero_element(&[BigInt::from(1), BigInt::from(0)]));
        assert_eq!(
            g.element_order(&[BigInt::from(1), BigInt::from(1)]),
            Some(BigInt::from(6))
        );
        assert_eq!(
            g.element_order(&[BigInt::from(0), BigInt::from(1)]),
            Some(BigInt::from(3))
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(FgAbGroup::trivial().to_string(), "0");
        assert_eq!(FgAbGroup::cyclic(0).to_string(), "Z");
        assert_eq!(
            FgAbGroup::cyclic_sum(&[0, 4, 2].map(BigInt::from)).to_string(),
            "Z_2 + Z_4 + Z"
        );
    }

    #[test]
    fn elementary_two_groups() {
        assert!(FgAbGroup::cyclic(2).power(3).invariants().is_elementary_two_group());
        assert!(!FgAbGroup::cyclic(4).invariants().is_elementary_two_group());
        assert!(FgAbGroup::trivial().invariants().is_elementary_two_group());
    }
}
