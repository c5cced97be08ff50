//! Sublattices of ℤ^n: kernels, spans and coordinates.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::snf::{smith_normal_form, smith_with_inverse, SnfDecomposition};

/// ℤ-basis of `{ x : a·x = 0 }`, as columns.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let cols: Vec<usize> = (r..a.cols()).collect();
    snf.v.select_columns(&cols)
}

/// ℤ-basis of the column span of `m`, as columns (full column rank).
pub fn column_span_basis(m: &IntMatrix) -> IntMatrix {
    // m = U⁻¹ D V⁻¹, so the span is generated by d_i · (column i of U⁻¹).
    let s = smith_with_inverse(m);
    let diag = s.snf.diagonal();
    let r = s.snf.rank();
    let mut out = IntMatrix::zeros(m.rows(), r);
    for (j, d) in diag.iter().take(r).enumerate() {
        for i in 0..m.rows() {
            out[(i, j)] = &s.u_inv[(i, j)] * d;
        }
    }
    out
}

/// A lattice with a fixed basis, able to solve for coordinates.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    basis: IntMatrix,
    snf: SnfDecomposition,
}

impl LatticeBasis {
    /// `basis` must have linearly independent columns.
    pub fn new(basis: IntMatrix) -> Self {
        let snf = smith_normal_form(&basis);
        debug_assert_eq!(snf.rank(), basis.cols(), "basis columns must be independent");
        Self { basis, snf }
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// The unique `c` with `basis · c == x`, if `x` lies in the lattice.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        // U K V = D  ⇒  D (V⁻¹ c) = U x.
        let y = self.snf.u.mul_vec(x);
        let diag = self.snf.diagonal();
        let r = self.rank();
        let mut w = Vec::with_capacity(r);
        for (i, yi) in y.iter().enumerate() {
            if i < r {
                let (q, rem) = yi.div_rem(&diag[i]);
                if !rem.is_zero() {
                    return None;
                }
                w.push(q);
            } else if !yi.is_zero() {
                return None;
            }
        }
        Some(self.snf.v.mul_vec(&w))
    }

    /// Coordinates of every column of `m`, as the columns of the result.
    pub fn coordinates_of_columns(&self, m: &IntMatrix) -> Option<IntMatrix> {
        let mut out = IntMatrix::zeros(self.rank(), m.cols());
        for j in 0..m.cols() {
            for (i, c) in self.coordinates(&m.column(j))?.into_iter().enumerate() {
                out[(i, j)] = c;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn kernel_of_row_vector() {
        let a = IntMatrix::from_rows(&[&[2, 3]]);
        let k = integer_kernel(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        let c = k.column(0);
        assert_eq!(c[0].abs(), BigInt::from(3));
    }

    #[test]
    fn span_basis_drops_dependencies() {
        let m = IntMatrix::from_rows(&[&[2, 4, 0], &[0, 0, 6]]);
        let b = column_span_basis(&m);
        assert_eq!(b.cols(), 2);
        let lat = LatticeBasis::new(b);
        for j in 0..3 {
            assert!(lat.coordinates(&m.column(j)).is_some());
        }
        assert!(lat.coordinates(&[BigInt::from(1), BigInt::zero()]).is_none());
        assert!(lat.coordinates(&[BigInt::from(2), BigInt::from(3)]).is_none());
    }

    #[test]
    fn coordinates_round_trip() {
        let k = IntMatrix::from_rows(&[&[1, 0], &[1, 2], &[0, 3]]);
        let lat = LatticeBasis::new(k.clone());
        let c = [BigInt::from(-4), BigInt::from(7)];
        let x = k.mul_vec(&c);
        assert_eq!(lat.coordinates(&x).unwrap(), c.to_vec());
    }
}
