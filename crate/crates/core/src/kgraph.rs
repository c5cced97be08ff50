//! Finite k-graphs with involution, reduced to adjacency data.
//!
//! `matrices[i][(v, w)]` counts the color-`i` edges with source `w` and
//! range `v`. Colors are 0-based in the API and 1-based in error messages.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGraphSpec {
    pub k: usize,
    pub vertices: Vec<String>,
    pub matrices: Vec<IntMatrix>,
    /// `involution[v]` is the image of vertex `v`.
    pub involution: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KGraphError {
    #[error("ZeroRank: k must be at least 1")]
    ZeroRank,
    #[error("MatrixCount: expected {expected} adjacency matrices, found {found}")]
    MatrixCount { expected: usize, found: usize },
    #[error("MatrixShape({color}): expected {vertices}x{vertices}, found {rows}x{cols}")]
    MatrixShape {
        color: usize,
        vertices: usize,
        rows: usize,
        cols: usize,
    },
    #[error("InvolutionShape: involution lists {found} images for {vertices} vertices")]
    InvolutionShape { vertices: usize, found: usize },
    #[error("InvolutionOutOfRange: vertex {vertex} maps to {image}")]
    InvolutionOutOfRange { vertex: usize, image: usize },
    #[error("NegativeEntry({color}): entry ({row}, {col}) is negative")]
    NegativeEntry { color: usize, row: usize, col: usize },
    #[error("NonCommutingMatrices({0},{1})")]
    NonCommutingMatrices(usize, usize),
    #[error("SourceAtVertex({0}, {1}): vertex receives no edge of this color")]
    SourceAtVertex(usize, usize),
    #[error("NotInvolutive: the vertex map does not square to the identity")]
    NotInvolutive,
    #[error("IncompatibleInvolution({0}): P·M·P differs from M")]
    IncompatibleInvolution(usize),
}

impl KGraphError {
    /// The variant name, used as a stable diagnostic tag.
    pub fn name(&self) -> &'static str {
        match self {
            Self::ZeroRank => "ZeroRank",
            Self::MatrixCount { .. } => "MatrixCount",
            Self::MatrixShape { .. } => "MatrixShape",
            Self::InvolutionShape { .. } => "InvolutionShape",
            Self::InvolutionOutOfRange { .. } => "InvolutionOutOfRange",
            Self::NegativeEntry { .. } => "NegativeEntry",
            Self::NonCommutingMatrices(..) => "NonCommutingMatrices",
            Self::SourceAtVertex(..) => "SourceAtVertex",
            Self::NotInvolutive => "NotInvolutive",
            Self::IncompatibleInvolution(_) => "IncompatibleInvolution",
        }
    }
}

/// `Λ⁰ = G_f ⊔ G_1 ⊔ G_2`, with `g_2[i] = γ(g_1[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub g_f: Vec<usize>,
    pub g_1: Vec<usize>,
    pub g_2: Vec<usize>,
}

impl VertexPartition {
    /// Vertex indices in coordinate order `(G_f, G_1, G_2)`.
    pub fn order(&self) -> Vec<usize> {
        let mut out = self.g_f.clone();
        out.extend_from_slice(&self.g_1);
        out.extend_from_slice(&self.g_2);
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.g_f.len() + 2 * self.g_1.len()
    }
}

/// Blocks of `B_i = I − M_iᵗ` in `(G_f, G_1, G_2)` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub b11: IntMatrix,
    pub b12: IntMatrix,
    pub b21: IntMatrix,
    pub b22: IntMatrix,
    pub b23: IntMatrix,
}

impl BlockDecomposition {
    /// `[[B11,B12,B12],[B21,B22,B23],[B21,B23,B22]]`.
    pub fn reassemble(&self) -> IntMatrix {
        let f = self.b11.rows();
        let g = self.b22.rows();
        let mut out = IntMatrix::zeros(f + 2 * g, f + 2 * g);
        out.set_block(0, 0, &self.b11);
        out.set_block(0, f, &self.b12);
        out.set_block(0, f + g, &self.b12);
        out.set_block(f, 0, &self.b21);
        out.set_block(f, f, &self.b22);
        out.set_block(f, f + g, &self.b23);
        out.set_block(f + g, 0, &self.b21);
        out.set_block(f + g, f, &self.b23);
        out.set_block(f + g, f + g, &self.b22);
        out
    }
}

impl KGraphSpec {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Permutation matrix of the involution.
    pub fn involution_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut p = IntMatrix::zeros(n, n);
        for (v, &w) in self.involution.iter().enumerate() {
            p[(w, v)] = BigInt::one();
        }
        p
    }

    /// `I − M_iᵗ` in the original vertex order.
    pub fn b_matrix(&self, color: usize) -> IntMatrix {
        IntMatrix::identity(self.vertex_count()).sub(&self.matrices[color].transpose())
    }

    /// The same k-graph with vertex `v` relabelled `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> KGraphSpec {
        let n = self.vertex_count();
        let mut vertices = self.vertices.clone();
        let mut involution = alloc::vec![0; n];
        for v in 0..n {
            vertices[perm[v]] = self.vertices[v].clone();
            involution[perm[v]] = perm[self.involution[v]];
        }
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                let mut out = IntMatrix::zeros(n, n);
                for v in 0..n {
                    for w in 0..n {
                        out[(perm[v], perm[w])] = m[(v, w)].clone();
                    }
                }
                out
            })
            .collect();
        KGraphSpec {
            k: self.k,
            vertices,
            matrices,
            involution,
        }
    }
}

/// Checks every structural condition and returns the canonical partition.
pub fn validate(spec: &KGraphSpec) -> Result<VertexPartition, KGraphError> {
    let n = spec.vertex_count();
    if spec.k == 0 {
        return Err(KGraphError::ZeroRank);
    }
    if spec.matrices.len() != spec.k {
        return Err(KGraphError::MatrixCount {
            expected: spec.k,
            found: spec.matrices.len(),
        });
    }
    for (i, m) in spec.matrices.iter().enumerate() {
        if m.shape() != (n, n) {
            return Err(KGraphError::MatrixShape {
                color: i + 1,
                vertices: n,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        for r in 0..n {
            for c in 0..n {
                if m[(r, c)].is_negative() {
                    return Err(KGraphError::NegativeEntry {
                        color: i + 1,
                        row: r,
                        col: c,
                    });
                }
            }
        }
    }
    if spec.involution.len() != n {
        return Err(KGraphError::InvolutionShape {
            vertices: n,
            found: spec.involution.len(),
        });
    }
    for (v, &w) in spec.involution.iter().enumerate() {
        if w >= n {
            return Err(KGraphError::InvolutionOutOfRange { vertex: v, image: w });
        }
    }
    if (0..n).any(|v| spec.involution[spec.involution[v]] != v) {
        return Err(KGraphError::NotInvolutive);
    }
    for (i, m) in spec.matrices.iter().enumerate() {
        if let Some(v) = (0..n).find(|&v| m.row(v).iter().all(Zero::is_zero)) {
            return Err(KGraphError::SourceAtVertex(i + 1, v));
        }
    }
    for i in 0..spec.k {
        for j in i + 1..spec.k {
            let (a, b) = (&spec.matrices[i], &spec.matrices[j]);
            if a.mul(b) != b.mul(a) {
                return Err(KGraphError::NonCommutingMatrices(i + 1, j + 1));
            }
        }
    }
    let p = spec.involution_matrix();
    for (i, m) in spec.matrices.iter().enumerate() {
        if &p.mul(m).mul(&p) != m {
            return Err(KGraphError::IncompatibleInvolution(i + 1));
        }
    }

    let mut partition = VertexPartition {
        g_f: Vec::new(),
        g_1: Vec::new(),
        g_2: Vec::new(),
    };
    for v in 0..n {
        let w = spec.involution[v];
        if w == v {
            partition.g_f.push(v);
        } else if v < w {
            partition.g_1.push(v);
            partition.g_2.push(w);
        }
    }
    Ok(partition)
}

/// Blocks of `I − M_colorᵗ`. The spec must already be validated against
/// `partition`.
pub fn block_decompose(spec: &KGraphSpec, partition: &VertexPartition, color: usize) -> BlockDecomposition {
    let b = spec.b_matrix(color);
    let pick = |rows: &[usize], cols: &[usize]| b.select(rows, cols);
    BlockDecomposition {
        b11: pick(&partition.g_f, &partition.g_f),
        b12: pick(&partition.g_f, &partition.g_1),
        b21: pick(&partition.g_1, &partition.g_f),
        b22: pick(&partition.g_1, &partition.g_1),
        b23: pick(&partition.g_1, &partition.g_2),
    }
}

/// `B_color` with rows and columns in `(G_f, G_1, G_2)` order.
pub fn reordered_b(spec: &KGraphSpec, partition: &VertexPartition, color: usize) -> IntMatrix {
    let order = partition.order();
    spec.b_matrix(color).select(&order, &order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn spec(k: usize, mats: &[&[&[i64]]], involution: &[usize]) -> KGraphSpec {
        let n = involution.len();
        KGraphSpec {
            k,
            vertices: (0..n).map(|v| alloc::format!("v{}", v + 1)).collect(),
            matrices: mats.iter().map(|m| IntMatrix::from_rows(m)).collect(),
            involution: involution.to_vec(),
        }
    }

    fn three_vertex(n: i64) -> KGraphSpec {
        let m: &[&[i64]] = &[&[1, 1, 1], &[1, 0, n - 1], &[1, n - 1, 0]];
        spec(2, &[m, m], &[0, 2, 1])
    }

    #[test]
    fn paired_vertices() {
        let m2: &[&[i64]] = &[&[1, 1, 1], &[1, 2, 0], &[1, 0, 2]];
        let m1: &[&[i64]] = &[&[1, 1, 1], &[1, 0, 2], &[1, 2, 0]];
        let s = spec(2, &[m1, m2], &[0, 2, 1]);
        let p = validate(&s).unwrap();
        assert_eq!(p.g_f, vec![0]);
        assert_eq!(p.g_1, vec![1]);
        assert_eq!(p.g_2, vec![2]);
        let blocks = block_decompose(&s, &p, 1);
        assert_eq!(blocks.b22, IntMatrix::from_rows(&[&[2 - 3]]));
        assert_eq!(blocks.b23, IntMatrix::from_rows(&[&[0]]));
    }

    #[test]
    fn one_vertex() {
        let s = spec(2, &[&[&[3]], &[&[5]]], &[0]);
        let p = validate(&s).unwrap();
        assert_eq!(p.g_f, vec![0]);
        assert!(p.g_1.is_empty());
        assert_eq!(block_decompose(&s, &p, 0).b11, IntMatrix::from_rows(&[&[-2]]));
    }

    #[test]
    fn incompatible_involution() {
        let s = spec(2, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[1, 1]]], &[1, 0]);
        assert_eq!(validate(&s), Err(KGraphError::IncompatibleInvolution(2)));
    }

    #[test]
    fn structural_errors() {
        let s = spec(2, &[&[&[1, 1], &[0, 1]], &[&[1, 0], &[1, 1]]], &[0, 1]);
        assert_eq!(validate(&s), Err(KGraphError::NonCommutingMatrices(1, 2)));
        let s = spec(1, &[&[&[1, 0], &[0, 0]]], &[0, 1]);
        assert_eq!(validate(&s), Err(KGraphError::SourceAtVertex(1, 1)));
        let s = spec(1, &[&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]], &[1, 2, 0]);
        assert_eq!(validate(&s), Err(KGraphError::NotInvolutive));
        let s = spec(1, &[&[&[-1]]], &[0]);
        assert!(matches!(validate(&s), Err(KGraphError::NegativeEntry { .. })));
        assert_eq!(
            KGraphError::NonCommutingMatrices(1, 2).to_string(),
            "NonCommutingMatrices(1,2)"
        );
    }

    #[test]
    fn three_vertex_blocks() {
        for n in 2..6 {
            let s = three_vertex(n);
            let p = validate(&s).unwrap();
            let b = block_decompose(&s, &p, 0);
            assert_eq!(b.b11, IntMatrix::from_rows(&[&[0]]));
            assert_eq!(b.b12, IntMatrix::from_rows(&[&[-1]]));
            assert_eq!(b.b21, IntMatrix::from_rows(&[&[-1]]));
            assert_eq!(b.b22, IntMatrix::from_rows(&[&[1]]));
            assert_eq!(b.b23, IntMatrix::from_rows(&[&[1 - n]]));
            assert_eq!(b.reassemble(), reordered_b(&s, &p, 0));
        }
    }

    #[test]
    fn trivial_involution_blocks() {
        let s = spec(1, &[&[&[1, 2], &[3, 1]]], &[0, 1]);
        let p = validate(&s).unwrap();
        let b = block_decompose(&s, &p, 0);
        assert_eq!(b.b11, s.b_matrix(0));
        assert_eq!(b.b22.shape(), (0, 0));
    }

    #[test]
    fn relabel_preserves_validity() {
        let s = three_vertex(3);
        let r = s.relabel(&[2, 0, 1]);
        let p = validate(&r).unwrap();
        assert_eq!(p.g_f, vec![2]);
        assert_eq!(p.g_1, vec![0]);
        assert_eq!(
            block_decompose(&r, &p, 0),
            block_decompose(&s, &validate(&s).unwrap(), 0)
        );
    }
}
