//! Homomorphisms between presented groups.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::group::FgAbGroup;
use super::lattice::{column_span_basis, integer_kernel};
use super::matrix::IntMatrix;
use super::AlgebraError;

/// An integer matrix between ambient generators that respects relations.
///
/// The well-definedness certificate (every relator of the source maps into
/// the relation lattice of the target) is checked on construction. In
/// particular a nonzero map from a torsion summand into a free summand is
/// rejected.
#[derive(Clone)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self, AlgebraError> {
        if matrix.shape() != (target.ambient_rank(), source.ambient_rank()) {
            return Err(AlgebraError::ShapeMismatch {
                expected: (target.ambient_rank(), source.ambient_rank()),
                found: matrix.shape(),
            });
        }
        let images = matrix.mul(source.relations());
        if !target.columns_are_zero(&images) {
            return Err(AlgebraError::NotWellDefined);
        }
        Ok(Self { source, target, matrix })
    }

    pub fn zero(source: FgAbGroup, target: FgAbGroup) -> Self {
        let matrix = IntMatrix::zeros(target.ambient_rank(), source.ambient_rank());
        Self { source, target, matrix }
    }

    pub fn identity(group: FgAbGroup) -> Self {
        let matrix = IntMatrix::identity(group.ambient_rank());
        Self {
            source: group.clone(),
            target: group,
            matrix,
        }
    }

    /// Multiplication by an integer on a group.
    pub fn multiplication(group: FgAbGroup, k: i64) -> Self {
        let matrix = IntMatrix::identity(group.ambient_rank()).scale(&BigInt::from(k));
        Self {
            source: group.clone(),
            target: group,
            matrix,
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom, AlgebraError> {
        if !inner.target.same_presentation(&self.source) {
            return Err(AlgebraError::IncompatibleGroups);
        }
        Ok(GroupHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        })
    }

    pub fn add(&self, other: &GroupHom) -> Result<GroupHom, AlgebraError> {
        self.check_parallel(other)?;
        Ok(GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix),
        })
    }

    pub fn sub(&self, other: &GroupHom) -> Result<GroupHom, AlgebraError> {
        self.check_parallel(other)?;
        Ok(GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.sub(&other.matrix),
        })
    }

    pub fn scale(&self, k: i64) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(&BigInt::from(k)),
        }
    }

    fn check_parallel(&self, other: &GroupHom) -> Result<(), AlgebraError> {
        if self.source.same_presentation(&other.source) && self.target.same_presentation(&other.target) {
            Ok(())
        } else {
            Err(AlgebraError::IncompatibleGroups)
        }
    }

    /// True when every source generator maps to zero in the target group.
    pub fn is_zero(&self) -> bool {
        self.target.columns_are_zero(&self.matrix)
    }

    /// Equality as maps of groups (matrices may differ by relations).
    pub fn equals(&self, other: &GroupHom) -> Result<bool, AlgebraError> {
        Ok(self.sub(other)?.is_zero())
    }

    /// Image of an ambient source element, as an ambient target element.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    /// ℤ-basis of `{ x : h(x) ∈ relations(target) }` as matrix columns.
    pub fn kernel_lattice(&self) -> IntMatrix {
        kernel_lattice(self)
    }

    /// The kernel as a subgroup of the source, presented on the kernel
    /// lattice basis.
    pub fn kernel(&self) -> FgAbGroup {
        let basis = self.kernel_lattice();
        let rel = super::lattice::LatticeBasis::new(basis)
            .coordinates_of_columns(self.source.relations())
            .expect("source relations lie in the kernel lattice");
        FgAbGroup::from_relations(rel)
    }

    /// `target / image`.
    pub fn cokernel(&self) -> FgAbGroup {
        FgAbGroup::from_relations(self.matrix.hstack(self.target.relations()))
    }

    /// The image as an abstract group (`source / kernel`).
    pub fn image(&self) -> FgAbGroup {
        FgAbGroup::from_relations(self.kernel_lattice())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    /// The matrix in canonical coordinates of both groups, entries reduced
    /// modulo the target generator orders.
    pub fn canonical_matrix(&self) -> IntMatrix {
        let lift = self.source.from_canonical_matrix();
        let cols = lift.cols();
        let rows = self.target.canonical_orders().len();
        let mut out = IntMatrix::zeros(rows, cols);
        for j in 0..cols {
            let img = self.matrix.mul_vec(&lift.column(j));
            for (i, c) in self.target.canonical_coordinates(&img).into_iter().enumerate() {
                out[(i, j)] = c;
            }
        }
        out
    }

    /// If source and target are the same cyclic group, the multiplier `k`
    /// with `h(x) = k·x`, reduced into `(-d/2, d/2]` for readability.
    pub fn cyclic_multiplier(&self) -> Option<BigInt> {
        let orders = self.source.canonical_orders();
        if orders.len() != 1 || self.target.canonical_orders() != orders {
            return None;
        }
        let d = &orders[0];
        let k = self.canonical_matrix()[(0, 0)].clone();
        if d.is_zero() {
            return Some(k);
        }
        let half = d / 2;
        Some(if k > half { k - d } else { k })
    }
}

fn kernel_lattice(h: &GroupHom) -> IntMatrix {
    let n = h.source.ambient_rank();
    // (x, y) with H x + R y = 0, projected to x.
    let stacked = h.matrix.hstack(h.target.relations());
    let kernel = integer_kernel(&stacked);
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..kernel.cols()).collect();
    let projected = kernel.select(&rows, &cols);
    column_span_basis(&projected)
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} -> {}, {})", self.source, self.target, self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FgAbGroup {
        FgAbGroup::free(n)
    }

    #[test]
    fn torsion_to_free_is_rejected() {
        let err = GroupHom::new(FgAbGroup::cyclic(2), z(1), IntMatrix::from_rows(&[&[1]]));
        assert!(matches!(err, Err(AlgebraError::NotWellDefined)));
        assert!(GroupHom::new(FgAbGroup::cyclic(2), z(1), IntMatrix::from_rows(&[&[0]])).is_ok());
        assert!(GroupHom::new(z(1), FgAbGroup::cyclic(2), IntMatrix::from_rows(&[&[1]])).is_ok());
    }

    #[test]
    fn kernel_of_b_b() {
        let b = IntMatrix::from_rows(&[&[0, -1, -1], &[-1, 1, -2], &[-1, -2, 1]]);
        let h = GroupHom::new(z(6), z(3), b.hstack(&b)).unwrap();
        let k = h.kernel_lattice();
        assert_eq!(k.cols(), 3);
        // every basis vector has the shape (x, y, z, -x, -y, -z)
        for j in 0..3 {
            let c = k.column(j);
            for i in 0..3 {
                assert_eq!(c[i], -c[i + 3].clone());
            }
        }
        // and (1,0,0,-1,0,0) lies in the span
        let basis = super::super::lattice::LatticeBasis::new(k);
        let e = [1, 0, 0, -1, 0, 0].map(BigInt::from);
        assert!(basis.coordinates(&e).is_some());
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let id = GroupHom::identity(z(2));
        assert_eq!(id.kernel_lattice().cols(), 0);
        let zero = GroupHom::zero(z(2), z(1));
        let k = zero.kernel_lattice();
        assert_eq!(k.cols(), 2);
        assert!(k.is_unimodular());
    }

    #[test]
    fn kernel_respects_target_torsion() {
        // Z -> Z_2, x -> x has kernel 2Z
        let h = GroupHom::new(z(1), FgAbGroup::cyclic(2), IntMatrix::from_rows(&[&[1]])).unwrap();
        let k = h.kernel_lattice();
        assert_eq!(k.shape(), (1, 1));
        assert_eq!(k.determinant() * k.determinant(), BigInt::from(4));
        assert!(h.is_surjective());
        assert!(!h.is_injective());
    }

    #[test]
    fn multiplier_readout() {
        let g = FgAbGroup::cyclic(6);
        assert_eq!(
            GroupHom::multiplication(g.clone(), -1).cyclic_multiplier(),
            Some(BigInt::from(-1))
        );
        assert_eq!(
            GroupHom::multiplication(g, 7).cyclic_multiplier(),
            Some(BigInt::from(1))
        );
    }
}
