//! Smith normal form over ℤ with unimodular transforms.
//!
//! Pivoting always selects the entry of smallest absolute value in the
//! active submatrix (ties broken by row, then column), so the transforms are
//! a deterministic function of the input. Only the diagonal is canonical.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u · m · v == d` with `u`, `v` unimodular and `d` in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// The diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Smith form together with the inverse of the left transform; the inverse
/// is what turns canonical generators back into ambient elements.
#[derive(Clone, Debug)]
pub(crate) struct SnfWithInverse {
    pub snf: SnfDecomposition,
    pub u_inv: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    smith_with_inverse(m).snf
}

pub(crate) fn smith_with_inverse(m: &IntMatrix) -> SnfWithInverse {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    // Row operations act on (a, u) and inversely on u_inv; column
    // operations act on (a, v).
    let row_add = |a: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, target, source, k: &BigInt| {
        a.add_row_multiple(target, source, k);
        u.add_row_multiple(target, source, k);
        u_inv.add_col_multiple(source, target, &-k);
    };
    let row_swap = |a: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, x, y| {
        a.swap_rows(x, y);
        u.swap_rows(x, y);
        u_inv.swap_cols(x, y);
    };

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_pivot(&a, t) else {
                return finish(a, u, u_inv, v);
            };
            row_swap(&mut a, &mut u, &mut u_inv, t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                row_add(&mut a, &mut u, &mut u_inv, i, t, &-q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &-&q);
                v.add_col_multiple(j, t, &-q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // Pivot row and column are clear; enforce divisibility of the rest.
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => row_add(&mut a, &mut u, &mut u_inv, t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    finish(a, u, u_inv, v)
}

fn finish(d: IntMatrix, u: IntMatrix, u_inv: IntMatrix, v: IntMatrix) -> SnfWithInverse {
    SnfWithInverse {
        snf: SnfDecomposition { u, d, v },
        u_inv,
    }
}

fn smallest_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(m: &IntMatrix) -> SnfDecomposition {
        let s = smith_with_inverse(m);
        let SnfDecomposition { u, d, v } = &s.snf;
        assert_eq!(&u.mul(m).mul(v), d);
        assert_eq!(u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        assert!(u.is_unimodular() && v.is_unimodular());
        let diag = s.snf.diagonal();
        for (i, x) in diag.iter().enumerate() {
            assert!(!x.is_negative());
            if let Some(next) = diag.get(i + 1) {
                assert!(x.is_zero() && next.is_zero() || !x.is_zero() && next.is_multiple_of(x));
            }
        }
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                assert!(i == j || d[(i, j)].is_zero());
            }
        }
        s.snf
    }

    #[test]
    fn three_vertex_family_n2() {
        // I - M with M = [[1,1,1],[1,0,1],[1,1,0]]
        let b = IntMatrix::from_rows(&[&[0, -1, -1], &[-1, 1, -1], &[-1, -1, 1]]);
        let s = check(&b);
        assert_eq!(s.diagonal(), [1, 1, 4].map(BigInt::from).to_vec());
    }

    #[test]
    fn zero_matrix_keeps_identity_transforms() {
        let z = IntMatrix::zeros(2, 2);
        let s = check(&z);
        assert!(s.d.is_zero());
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let s = check(&IntMatrix::zeros(r, c));
            assert_eq!(s.rank(), 0);
        }
    }

    #[test]
    fn divisibility_needs_mixing() {
        let m = IntMatrix::from_rows(&[&[2, 0], &[0, 3]]);
        let s = check(&m);
        assert_eq!(s.diagonal(), [1, 6].map(BigInt::from).to_vec());
        let m = IntMatrix::from_rows(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]);
        assert_eq!(check(&m).diagonal(), [2, 2, 60].map(BigInt::from).to_vec());
    }

    #[test]
    fn unit_entry_is_one() {
        let s = check(&IntMatrix::from_rows(&[&[-1]]));
        assert!(s.d[(0, 0)].is_one());
    }
}
