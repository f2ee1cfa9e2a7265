use serde::Serialize;

use super::LinalgError;

/// Relative tolerance on `|a_ij - a_ji|` accepted when building a [`SymMatrix`]
/// from possibly rounded input.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Dense real symmetric matrix stored row-major.
///
/// Symmetry is enforced at construction: explicit input is checked entrywise
/// and then averaged, and in-place builders only expose symmetric updates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.data[i * order + i] = 1.0;
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &x) in diag.iter().enumerate() {
            m.data[i * diag.len() + i] = x;
        }
        m
    }

    /// Builds a matrix from rows, symmetrizing by averaging `a_ij` and `a_ji`.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(LinalgError::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let (a, b) = (rows[i][j], rows[j][i]);
                if !a.is_finite() || !b.is_finite() {
                    return Err(LinalgError::NonFinite { row: i, col: j });
                }
                if (a - b).abs() > SYMMETRY_TOLERANCE * a.abs().max(b.abs()) {
                    return Err(LinalgError::NotSymmetric { row: i, col: j });
                }
                m.set(i, j, 0.5 * (a + b));
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    /// Adds `value` to `(i, j)` and, off the diagonal, to `(j, i)`.
    #[inline]
    pub fn add(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] += value;
        if i != j {
            self.data[j * self.order + i] += value;
        }
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub(crate) fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.order).map(|i| self.get(i, i)).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Max-norm of `self - other`.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.order, other.order, "matrix orders differ");
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
    }

    pub fn scaled(&self, factor: f64) -> SymMatrix {
        SymMatrix {
            order: self.order,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.order, other.order, "matrix orders differ");
        SymMatrix {
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.order);
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `D M D` for the diagonal matrix `D = diag(scale)`.
    pub fn congruence_diagonal(&self, scale: &[f64]) -> SymMatrix {
        assert_eq!(scale.len(), self.order);
        let n = self.order;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] *= scale[i] * scale[j];
            }
        }
        out
    }

    /// Cholesky factor `L` (row-major, lower triangular) of a positive
    /// definite matrix.
    pub fn cholesky(&self) -> Result<Vec<f64>, LinalgError> {
        let n = self.order;
        let mut l = vec![0.0; n * n];
        for j in 0..n {
            let mut diag = self.get(j, j);
            for k in 0..j {
                diag -= l[j * n + k] * l[j * n + k];
            }
            if diag <= 0.0 || !diag.is_finite() {
                return Err(LinalgError::NotPositiveDefinite { pivot: j });
            }
            let ljj = diag.sqrt();
            l[j * n + j] = ljj;
            for i in (j + 1)..n {
                let (ri, rj) = (&l[i * n..i * n + j], &l[j * n..j * n + j]);
                let dot: f64 = ri.iter().zip(rj).map(|(a, b)| a * b).sum();
                l[i * n + j] = (self.get(i, j) - dot) / ljj;
            }
        }
        Ok(l)
    }

    /// Reduces the pencil `(self, mass)` to the standard symmetric matrix
    /// `L⁻¹ self L⁻ᵀ` where `mass = L Lᵀ`.
    pub fn reduce_pencil(&self, mass: &SymMatrix) -> Result<SymMatrix, LinalgError> {
        assert_eq!(self.order, mass.order, "matrix orders differ");
        let n = self.order;
        let l = mass.cholesky()?;
        // Y = L⁻¹ A, row by row via forward substitution on columns.
        let mut y = self.data.clone();
        for i in 0..n {
            let lii = l[i * n + i];
            for k in 0..i {
                let lik = l[i * n + k];
                if lik != 0.0 {
                    let (head, tail) = y.split_at_mut(i * n);
                    let src = &head[k * n..(k + 1) * n];
                    for (dst, s) in tail[..n].iter_mut().zip(src) {
                        *dst -= lik * s;
                    }
                }
            }
            for v in &mut y[i * n..(i + 1) * n] {
                *v /= lii;
            }
        }
        // C = Y L⁻ᵀ, i.e. solve L Cᵀ = Yᵀ; C is symmetric so Cᵀ = C.
        // Work on Yᵀ rows, which are columns of Y.
        let mut yt = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                yt[j * n + i] = y[i * n + j];
            }
        }
        for i in 0..n {
            let lii = l[i * n + i];
            for k in 0..i {
                let lik = l[i * n + k];
                if lik != 0.0 {
                    let (head, tail) = yt.split_at_mut(i * n);
                    let src = &head[k * n..(k + 1) * n];
                    for (dst, s) in tail[..n].iter_mut().zip(src) {
                        *dst -= lik * s;
                    }
                }
            }
            for v in &mut yt[i * n..(i + 1) * n] {
                *v /= lii;
            }
        }
        let mut c = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                c.set(i, j, 0.5 * (yt[i * n + j] + yt[j * n + i]));
            }
        }
        Ok(c)
    }
}
