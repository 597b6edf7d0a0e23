use crate::error::{Error, Result};

/// Dense row-major matrix of f64.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "data length {} does not match {}x{}",
            data.len(),
            rows,
            cols
        );
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Self { rows: r, cols: c, data }
    }

    /// m x m identity.
    pub fn identity(m: usize) -> Self {
        let mut out = Self::zeros(m, m);
        for i in 0..m {
            out.data[i * m + i] = 1.0;
        }
        out
    }

    pub fn scalar(value: f64) -> Self {
        Self::from_vec(1, 1, vec![value])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Scalar value of a 1x1 matrix.
    pub fn item(&self) -> f64 {
        assert_eq!((self.rows, self.cols), (1, 1), "item() on non-scalar");
        self.data[0]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn ensure_finite(&self, op: &'static str) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite { op })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    /// self @ other, with optional transposition of either operand.
    pub fn matmul_ex(&self, other: &Self, trans_a: bool, trans_b: bool) -> Result<Self> {
        let (ar, ac) = if trans_a {
            (self.cols, self.rows)
        } else {
            (self.rows, self.cols)
        };
        let (br, bc) = if trans_b {
            (other.cols, other.rows)
        } else {
            (other.rows, other.cols)
        };
        if ac != br {
            return Err(Error::ShapeMismatch {
                op: "matmul",
                left_rows: ar,
                left_cols: ac,
                right_rows: br,
                right_cols: bc,
            });
        }
        let mut out = Self::zeros(ar, bc);
        for i in 0..ar {
            for k in 0..ac {
                let a_ik = if trans_a { self.get(k, i) } else { self.get(i, k) };
                if a_ik == 0.0 {
                    continue;
                }
                let out_row = &mut out.data[i * bc..(i + 1) * bc];
                if trans_b {
                    for (j, o) in out_row.iter_mut().enumerate() {
                        *o += a_ik * other.get(j, k);
                    }
                } else {
                    let b_row = &other.data[k * bc..(k + 1) * bc];
                    for (o, &b) in out_row.iter_mut().zip(b_row) {
                        *o += a_ik * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.matmul_ex(other, false, false)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.shape(), other.shape(), "add_assign shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn scale_assign(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    /// Frobenius-norm squared.
    pub fn sum_squares(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    /// Max absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_matmul_is_identity_map() {
        let m = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        let i2 = DenseMatrix::identity(2);
        assert_eq!(i2.matmul(&m).unwrap(), m);
    }

    #[test]
    fn hand_matmul() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        let b = DenseMatrix::from_rows(&[vec![1.0], vec![1.0]]);
        let c = a.matmul(&b).unwrap();
        assert_eq!(c.data(), &[3.0, 7.0]);
    }

    #[test]
    fn matmul_shape_error_names_both_shapes() {
        let a = DenseMatrix::zeros(2, 3);
        let b = DenseMatrix::zeros(2, 3);
        let err = a.matmul(&b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2x3"), "{msg}");
    }

    #[test]
    fn transpose_roundtrip() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn matmul_ex_matches_explicit_transpose() {
        let a = DenseMatrix::from_rows(&[vec![1.0, -2.0], vec![0.5, 4.0], vec![2.0, 1.0]]);
        let b = DenseMatrix::from_rows(&[vec![3.0, 1.0], vec![-1.0, 2.0], vec![0.0, 5.0]]);
        let via_ex = a.matmul_ex(&b, true, false).unwrap();
        let via_t = a.transpose().matmul(&b).unwrap();
        assert_eq!(via_ex, via_t);
        let via_ex2 = b.matmul_ex(&a, false, true).unwrap();
        let via_t2 = b.matmul(&a.transpose()).unwrap();
        assert_eq!(via_ex2, via_t2);
    }
}
