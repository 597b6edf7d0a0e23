use crate::error::{Error, Result};
use crate::tensor::DenseMatrix;

/// Binary incidence matrix H in {0,1}^{m x n}, stored both node-major and
/// edge-major so products with H and H^T are single passes over the nonzeros.
///
/// Rows are nodes, columns are hyperedges; an entry (i, j) means node i
/// belongs to hyperedge j. Entries are implicitly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseIncidence {
    rows: usize,
    cols: usize,
    /// edges_of[i] = sorted hyperedge ids containing node i
    edges_of: Vec<Vec<u32>>,
    /// nodes_of[j] = sorted node ids of hyperedge j
    nodes_of: Vec<Vec<u32>>,
    nnz: usize,
}

impl SparseIncidence {
    /// Build from per-hyperedge node lists. Rejects duplicate (row, col)
    /// entries and empty columns.
    pub fn from_edges(rows: usize, edges: &[Vec<u32>]) -> Result<Self> {
        let cols = edges.len();
        let mut edges_of = vec![Vec::new(); rows];
        let mut nodes_of = Vec::with_capacity(cols);
        let mut nnz = 0;
        for (j, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyHyperedge);
            }
            let mut nodes: Vec<u32> = edge.clone();
            nodes.sort_unstable();
            for w in nodes.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::InvalidConfig(format!(
                        "duplicate incidence entry (node {}, hyperedge {j})",
                        w[0]
                    )));
                }
            }
            for &v in &nodes {
                let v = v as usize;
                if v >= rows {
                    return Err(Error::NodeIdOutOfRange {
                        id: v,
                        nodes: rows,
                        context: format!(" in hyperedge {j}"),
                    });
                }
                edges_of[v].push(j as u32);
                nnz += 1;
            }
            nodes_of.push(nodes);
        }
        Ok(Self {
            rows,
            cols,
            edges_of,
            nodes_of,
            nnz,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.nnz
    }

    /// Hyperedge ids containing node i.
    pub fn edges_of(&self, node: usize) -> &[u32] {
        &self.edges_of[node]
    }

    /// Node ids of hyperedge j.
    pub fn nodes_of(&self, edge: usize) -> &[u32] {
        &self.nodes_of[edge]
    }

    /// Node degrees d_i (number of incident hyperedges).
    pub fn node_degrees(&self) -> Vec<usize> {
        self.edges_of.iter().map(|e| e.len()).collect()
    }

    /// Hyperedge orders c_j (number of member nodes).
    pub fn edge_orders(&self) -> Vec<usize> {
        self.nodes_of.iter().map(|n| n.len()).collect()
    }

    /// H @ x (or H^T @ x when `transpose` is set).
    pub fn spmm(&self, x: &DenseMatrix, transpose: bool) -> Result<DenseMatrix> {
        let (hr, hc) = if transpose {
            (self.cols, self.rows)
        } else {
            (self.rows, self.cols)
        };
        if hc != x.rows() {
            return Err(Error::ShapeMismatch {
                op: "spmm",
                left_rows: hr,
                left_cols: hc,
                right_rows: x.rows(),
                right_cols: x.cols(),
            });
        }
        let k = x.cols();
        let mut out = DenseMatrix::zeros(hr, k);
        if transpose {
            // row j of output = sum of x rows for nodes in hyperedge j
            for (j, nodes) in self.nodes_of.iter().enumerate() {
                let out_row = out.row_mut(j);
                for &v in nodes {
                    let x_row = x.row(v as usize);
                    for (o, &xv) in out_row.iter_mut().zip(x_row) {
                        *o += xv;
                    }
                }
            }
        } else {
            // row i of output = sum of x rows for hyperedges containing node i
            for (i, edges) in self.edges_of.iter().enumerate() {
                let out_row = out.row_mut(i);
                for &j in edges {
                    let x_row = x.row(j as usize);
                    for (o, &xv) in out_row.iter_mut().zip(x_row) {
                        *o += xv;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Densified copy, for oracles and small fixtures.
    pub fn to_dense(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.rows, self.cols);
        for (j, nodes) in self.nodes_of.iter().enumerate() {
            for &v in nodes {
                out.set(v as usize, j, 1.0);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_features_give_zero_product() {
        let h = SparseIncidence::from_edges(4, &[vec![0, 1, 2], vec![1, 3]]).unwrap();
        let x = DenseMatrix::zeros(4, 3);
        let y = h.spmm(&x, true).unwrap();
        assert!(y.data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn single_edge_transpose_sums_member_rows() {
        let h = SparseIncidence::from_edges(2, &[vec![0, 1]]).unwrap();
        let x = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![10.0, 20.0]]);
        let y = h.spmm(&x, true).unwrap();
        assert_eq!(y.data(), &[11.0, 22.0]);
    }

    #[test]
    fn spmm_matches_densified_matmul() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        let mut edges = Vec::new();
        for _ in 0..6 {
            let size = rng.gen_range(1..=4);
            let mut nodes: Vec<u32> = (0..10u32).collect();
            for i in (1..nodes.len()).rev() {
                let j = rng.gen_range(0..=i);
                nodes.swap(i, j);
            }
            nodes.truncate(size);
            edges.push(nodes);
        }
        let h = SparseIncidence::from_edges(10, &edges).unwrap();
        let x = DenseMatrix::from_vec(10, 5, (0..50).map(|i| (i as f64).sin()).collect());
        let xt = DenseMatrix::from_vec(6, 5, (0..30).map(|i| (i as f64).cos()).collect());
        let dense = h.to_dense();
        assert_eq!(h.spmm(&x, false).unwrap(), dense.matmul_ex(&x, false, false).unwrap());
        assert_eq!(h.spmm(&xt, true).unwrap(), dense.matmul_ex(&xt, true, false).unwrap());
    }

    #[test]
    fn duplicate_entry_rejected() {
        assert!(SparseIncidence::from_edges(3, &[vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn empty_column_rejected() {
        assert!(SparseIncidence::from_edges(3, &[vec![]]).is_err());
    }
}
