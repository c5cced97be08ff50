//! Homology of `A --d_in--> B --d_out--> C` at `B`, and induced maps.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::group::FgAbGroup;
use super::hom::GroupHom;
use super::lattice::LatticeBasis;
use super::matrix::IntMatrix;
use super::AlgebraError;

/// `ker d_out / im d_in`, presented on a basis of the kernel lattice.
#[derive(Clone, Debug)]
pub struct Homology {
    middle: FgAbGroup,
    cycles: LatticeBasis,
    group: FgAbGroup,
}

impl Homology {
    /// The homology group. Its ambient generators are the cycle basis
    /// columns; see [`Homology::cycle_basis`].
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    /// The group the complex passes through at this spot.
    pub fn middle(&self) -> &FgAbGroup {
        &self.middle
    }

    /// Cycle lattice basis, in ambient coordinates of the middle group.
    pub fn cycle_basis(&self) -> &IntMatrix {
        self.cycles.basis()
    }

    /// Ambient cycles representing the canonical generators of the homology.
    pub fn lift(&self) -> IntMatrix {
        self.cycles.basis().mul(self.group.from_canonical_matrix())
    }

    /// Class of an ambient cycle, as an ambient element of [`Homology::group`].
    /// `None` when `x` is not a cycle.
    pub fn project(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        self.cycles.coordinates(x)
    }

    /// Class of an ambient cycle in canonical coordinates.
    pub fn class_of(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        Some(self.group.canonical_coordinates(&self.project(x)?))
    }
}

/// Homology at the middle of `d_in` followed by `d_out`.
pub fn homology(d_in: &GroupHom, d_out: &GroupHom) -> Result<Homology, AlgebraError> {
    if !d_in.target().same_presentation(d_out.source()) {
        return Err(AlgebraError::IncompatibleGroups);
    }
    let middle = d_out.source().clone();
    let cycles = LatticeBasis::new(d_out.kernel_lattice());
    let boundaries = d_in.matrix().hstack(middle.relations());
    let rel = cycles
        .coordinates_of_columns(&boundaries)
        .ok_or(AlgebraError::CompositionNotZero)?;
    Ok(Homology {
        middle,
        cycles,
        group: FgAbGroup::from_relations(rel),
    })
}

/// The map `H(f): src → tgt` induced by a map of middle groups.
///
/// Fails with [`AlgebraError::NotChainMap`] when `f` sends a cycle outside
/// the target cycles or a boundary outside the target boundaries.
pub fn induced_hom(f: &GroupHom, src: &Homology, tgt: &Homology) -> Result<GroupHom, AlgebraError> {
    if !f.source().same_presentation(&src.middle) || !f.target().same_presentation(&tgt.middle) {
        return Err(AlgebraError::IncompatibleGroups);
    }
    let images = f.matrix().mul(src.cycle_basis());
    let matrix = tgt
        .cycles
        .coordinates_of_columns(&images)
        .ok_or(AlgebraError::NotChainMap)?;
    GroupHom::new(src.group.clone(), tgt.group.clone(), matrix).map_err(|e| match e {
        AlgebraError::NotWellDefined => AlgebraError::NotChainMap,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::InvariantFactors;

    fn hom(src: &FgAbGroup, tgt: &FgAbGroup, rows: &[&[i64]]) -> GroupHom {
        let m = if rows.is_empty() {
            IntMatrix::zeros(tgt.ambient_rank(), src.ambient_rank())
        } else {
            IntMatrix::from_rows(rows)
        };
        GroupHom::new(src.clone(), tgt.clone(), m).unwrap()
    }

    #[test]
    fn one_vertex_koszul() {
        // Z --(m-1, 1-n)^t--> Z^2 --(1-n, 1-m)--> Z with m = 5, n = 3
        let z1 = FgAbGroup::free(1);
        let z2 = FgAbGroup::free(2);
        let d2 = hom(&z1, &z2, &[&[4], &[-2]]);
        let d1 = hom(&z2, &z1, &[&[-2, -4]]);
        let zero_in = GroupHom::zero(FgAbGroup::trivial(), z1.clone());
        let zero_out = GroupHom::zero(z1.clone(), FgAbGroup::trivial());
        let h0 = homology(&d1, &zero_out).unwrap();
        let h1 = homology(&d2, &d1).unwrap();
        let h2 = homology(&zero_in, &d2).unwrap();
        let z2g = InvariantFactors::from_cyclic_orders(&[BigInt::from(2)]);
        assert_eq!(h0.group().invariants(), &z2g);
        assert_eq!(h1.group().invariants(), &z2g);
        assert!(h2.group().is_trivial());
    }

    #[test]
    fn composition_must_vanish() {
        let z1 = FgAbGroup::free(1);
        let d = hom(&z1, &z1, &[&[1]]);
        assert!(matches!(homology(&d, &d), Err(AlgebraError::CompositionNotZero)));
    }

    #[test]
    fn torsion_middle() {
        // 0 -> Z_4 --2--> Z_4: homology at the middle is ker(2) = Z_2
        let z4 = FgAbGroup::cyclic(4);
        let d_out = hom(&z4, &z4, &[&[2]]);
        let d_in = GroupHom::zero(FgAbGroup::trivial(), z4.clone());
        let h = homology(&d_in, &d_out).unwrap();
        assert_eq!(h.group().invariants(), FgAbGroup::cyclic(2).invariants());
        // Z_4 --2--> Z_4 --2--> Z_4: ker 2 / im 2 = 0
        let h = homology(&d_out, &d_out).unwrap();
        assert!(h.group().is_trivial());
    }

    #[test]
    fn induced_identity_and_negation() {
        let z4 = FgAbGroup::cyclic(4);
        let d_out = hom(&z4, &z4, &[&[2]]);
        let d_in = GroupHom::zero(FgAbGroup::trivial(), z4.clone());
        let h = homology(&d_in, &d_out).unwrap();
        let id = induced_hom(&GroupHom::identity(z4.clone()), &h, &h).unwrap();
        assert!(id.equals(&GroupHom::identity(h.group().clone())).unwrap());
        let neg = induced_hom(&GroupHom::multiplication(z4, -1), &h, &h).unwrap();
        // -1 = +1 on Z_2
        assert!(neg.equals(&id).unwrap());
    }

    #[test]
    fn not_a_chain_map() {
        // cycles of 0 -> Z -> 0 are everything; f: Z -> Z into a spot where
        // only 2Z are cycles
        let z1 = FgAbGroup::free(1);
        let z2 = FgAbGroup::cyclic(2);
        let zero_in = GroupHom::zero(FgAbGroup::trivial(), z1.clone());
        let src = homology(&zero_in, &GroupHom::zero(z1.clone(), FgAbGroup::trivial())).unwrap();
        let tgt = homology(&zero_in, &hom(&z1, &z2, &[&[1]])).unwrap();
        let f = GroupHom::identity(z1);
        assert!(matches!(induced_hom(&f, &src, &tgt), Err(AlgebraError::NotChainMap)));
    }
}
