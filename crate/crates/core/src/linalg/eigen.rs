//! Dense symmetric eigensolver.
//!
//! Householder reduction to tridiagonal form followed by the implicit QL
//! iteration with Wilkinson-type shifts (the EISPACK `tred2`/`tql2` pair).
//! Three entry points share the reduction:
//!
//! * [`eigenvalues`] keeps only the tridiagonal and never touches a vector;
//! * [`eigen_decomposition`] accumulates the orthogonal factor and returns a
//!   full eigenbasis with a measured residual;
//! * [`selected_eigenpairs`] solves the tridiagonal for values, then runs
//!   inverse iteration on the tridiagonal for the requested indices and maps
//!   the vectors back with the stored reflectors.
//!
//! The working array holds the transpose of the EISPACK `V` so that every
//! inner loop runs over contiguous memory.

use serde::Serialize;

use super::{LinalgError, SymMatrix};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_ORDER_CAP: usize = 5000;
const MAX_QL_SWEEPS: usize = 60;

/// Ascending eigenvalues, the residual bound achieved and, when requested,
/// the matching unit eigenvectors.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub residual_bound: f64,
    #[serde(skip)]
    pub vectors: Option<Vec<Vec<f64>>>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ_k`, if the matrix has that many eigenvalues.
    pub fn value(&self, k: usize) -> Option<f64> {
        self.values.get(k).copied()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    pub tol: f64,
    pub order_cap: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: DEFAULT_TOLERANCE,
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

impl SolverOptions {
    pub fn with_tol(tol: f64) -> Self {
        SolverOptions {
            tol,
            ..Default::default()
        }
    }
}

/// Full ascending spectrum without eigenvectors.
///
/// The reported `residual_bound` is the backward-error bound
/// `4 n ε ‖m‖_F` of the Householder/QL pair: every returned value is an exact
/// eigenvalue of a matrix within that distance of `m`.
pub fn eigenvalues(m: &SymMatrix, tol: f64) -> Result<Spectrum, LinalgError> {
    eigenvalues_with(m, SolverOptions::with_tol(tol))
}

pub fn eigenvalues_with(m: &SymMatrix, opts: SolverOptions) -> Result<Spectrum, LinalgError> {
    check_order(m, opts)?;
    let n = m.order();
    if n == 0 {
        return Ok(Spectrum {
            values: Vec::new(),
            residual_bound: 0.0,
            vectors: None,
        });
    }
    let red = Tridiagonal::reduce(m);
    let mut d = red.diag.clone();
    let mut e = red.offdiag.clone();
    ql_implicit(&mut d, &mut e, None)?;
    d.sort_by(f64::total_cmp);
    let residual_bound = a_priori_bound(m);
    check_residual(residual_bound, m, opts.tol)?;
    Ok(Spectrum {
        values: d,
        residual_bound,
        vectors: None,
    })
}

/// Full eigendecomposition with unit eigenvectors; `residual_bound` is the
/// measured `max_i ‖m x_i − λ_i x_i‖`.
pub fn eigen_decomposition(m: &SymMatrix, tol: f64) -> Result<Spectrum, LinalgError> {
    eigen_decomposition_with(m, SolverOptions::with_tol(tol))
}

pub fn eigen_decomposition_with(
    m: &SymMatrix,
    opts: SolverOptions,
) -> Result<Spectrum, LinalgError> {
    check_order(m, opts)?;
    let n = m.order();
    if n == 0 {
        return Ok(Spectrum {
            values: Vec::new(),
            residual_bound: 0.0,
            vectors: Some(Vec::new()),
        });
    }
    let red = Tridiagonal::reduce(m);
    let mut q = red.accumulate();
    let mut d = red.diag.clone();
    let mut e = red.offdiag.clone();
    ql_implicit(&mut d, &mut e, Some(&mut q))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]).then(a.cmp(&b)));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&i| fix_sign(q[i * n..(i + 1) * n].to_vec()))
        .collect();
    let residual_bound = values
        .iter()
        .zip(&vectors)
        .map(|(&lam, x)| residual(m, lam, x))
        .fold(0.0_f64, f64::max);
    check_residual(residual_bound, m, opts.tol)?;
    Ok(Spectrum {
        values,
        residual_bound,
        vectors: Some(vectors),
    })
}

/// Eigenpairs for the given ascending indices only.
///
/// Inside a degenerate cluster the returned vectors span part of the
/// eigenspace but are not otherwise unique; they are mutually
/// orthogonalized in index order.
pub fn selected_eigenpairs(
    m: &SymMatrix,
    indices: &[usize],
    tol: f64,
) -> Result<(Spectrum, Vec<Vec<f64>>), LinalgError> {
    let opts = SolverOptions::with_tol(tol);
    check_order(m, opts)?;
    let n = m.order();
    if let Some(&bad) = indices.iter().find(|&&k| k >= n) {
        return Err(LinalgError::IndexOutOfRange { index: bad, order: n });
    }
    let red = Tridiagonal::reduce(m);
    let mut d = red.diag.clone();
    let mut e = red.offdiag.clone();
    ql_implicit(&mut d, &mut e, None)?;
    d.sort_by(f64::total_cmp);

    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(indices.len());
    let mut worst = 0.0_f64;
    for &k in indices {
        let lam = d[k];
        let mut y = red.inverse_iteration(lam, k, scale);
        let mut x = red.apply_q(&y);
        // Orthogonalize against earlier vectors of the same cluster.
        for _ in 0..2 {
            for prev in &vectors {
                let dot: f64 = prev.iter().zip(&x).map(|(a, b)| a * b).sum();
                for (xi, pi) in x.iter_mut().zip(prev) {
                    *xi -= dot * pi;
                }
            }
            normalize(&mut x);
        }
        let mut r = residual(m, lam, &x);
        if r > opts.tol * scale {
            // One refinement step on the full matrix is cheap relative to
            // the reduction and recovers accuracy in tight clusters.
            y = red.apply_qt(&x);
            let y2 = red.solve_shifted(lam, k, scale, &y);
            x = red.apply_q(&y2);
            for prev in &vectors {
                let dot: f64 = prev.iter().zip(&x).map(|(a, b)| a * b).sum();
                for (xi, pi) in x.iter_mut().zip(prev) {
                    *xi -= dot * pi;
                }
            }
            normalize(&mut x);
            r = residual(m, lam, &x);
        }
        worst = worst.max(r);
        vectors.push(fix_sign(x));
    }
    check_residual(worst.max(a_priori_bound(m)), m, opts.tol)?;
    Ok((
        Spectrum {
            values: d,
            residual_bound: worst.max(a_priori_bound(m)),
            vectors: None,
        },
        vectors,
    ))
}

fn check_order(m: &SymMatrix, opts: SolverOptions) -> Result<(), LinalgError> {
    if m.order() > opts.order_cap {
        return Err(LinalgError::SizeCap {
            order: m.order(),
            cap: opts.order_cap,
        });
    }
    if let Some(pos) = m.as_slice().iter().position(|x| !x.is_finite()) {
        return Err(LinalgError::NonFinite {
            row: pos / m.order(),
            col: pos % m.order(),
        });
    }
    Ok(())
}

fn a_priori_bound(m: &SymMatrix) -> f64 {
    4.0 * m.order() as f64 * f64::EPSILON * m.frobenius_norm()
}

fn check_residual(residual: f64, m: &SymMatrix, tol: f64) -> Result<(), LinalgError> {
    let allowed = tol * m.frobenius_norm().max(f64::MIN_POSITIVE);
    if residual > allowed {
        Err(LinalgError::Inaccurate { residual, allowed })
    } else {
        Ok(())
    }
}

fn residual(m: &SymMatrix, lam: f64, x: &[f64]) -> f64 {
    let ax = m.mul_vec(x);
    let r2: f64 = ax.iter().zip(x).map(|(a, b)| (a - lam * b).powi(2)).sum();
    let x2: f64 = x.iter().map(|v| v * v).sum();
    (r2 / x2).sqrt()
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}

/// Makes the first entry of non-negligible magnitude positive.
pub(crate) fn fix_sign(mut x: Vec<f64>) -> Vec<f64> {
    let big = x.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    if let Some(first) = x.iter().find(|v| v.abs() > 1e-8 * big) {
        if *first < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
    }
    x
}

/// Output of the Householder reduction `A = Q T Qᵀ`.
struct Tridiagonal {
    n: usize,
    /// Transposed EISPACK work array; row `i` holds reflector `i` in its
    /// first `i` entries.
    work: Vec<f64>,
    /// Reflector normalizers `h_i` (zero when the step was skipped).
    h: Vec<f64>,
    diag: Vec<f64>,
    /// `offdiag[i] = T[i][i-1]`, `offdiag[0] = 0`.
    offdiag: Vec<f64>,
}

impl Tridiagonal {
    fn reduce(m: &SymMatrix) -> Self {
        let n = m.order();
        // w[j*n + k] plays the role of V[k][j].
        let mut w = m.as_slice().to_vec();
        let mut d: Vec<f64> = (0..n).map(|j| w[j * n + n - 1]).collect();
        let mut e = vec![0.0; n];
        let mut hs = vec![0.0; n];

        for i in (1..n).rev() {
            let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
            let mut h = 0.0;
            if scale == 0.0 {
                e[i] = d[i - 1];
                for j in 0..i {
                    d[j] = w[j * n + i - 1];
                    w[j * n + i] = 0.0;
                    w[i * n + j] = 0.0;
                }
            } else {
                for dk in &mut d[..i] {
                    *dk /= scale;
                    h += *dk * *dk;
                }
                let f = d[i - 1];
                let mut g = h.sqrt();
                if f > 0.0 {
                    g = -g;
                }
                e[i] = scale * g;
                h -= f * g;
                d[i - 1] = f - g;
                e[..i].iter_mut().for_each(|x| *x = 0.0);

                for j in 0..i {
                    let f = d[j];
                    w[i * n + j] = f;
                    let col = &w[j * n..j * n + i];
                    let mut g = e[j] + col[j] * f;
                    for k in (j + 1)..i {
                        g += col[k] * d[k];
                        e[k] += col[k] * f;
                    }
                    e[j] = g;
                }
                let mut f = 0.0;
                for j in 0..i {
                    e[j] /= h;
                    f += e[j] * d[j];
                }
                let hh = f / (h + h);
                for j in 0..i {
                    e[j] -= hh * d[j];
                }
                for j in 0..i {
                    let (f, g) = (d[j], e[j]);
                    let col = &mut w[j * n..j * n + i];
                    for k in j..i {
                        col[k] -= f * e[k] + g * d[k];
                    }
                    d[j] = w[j * n + i - 1];
                    w[j * n + i] = 0.0;
                }
            }
            d[i] = h;
            hs[i] = h;
        }
        // The last diagonal entry is never touched by the sweep.
        let diag: Vec<f64> = (0..n)
            .map(|j| if j + 1 < n { w[j * n + j] } else { m.get(j, j) })
            .collect();
        e[0] = 0.0;
        Tridiagonal {
            n,
            work: w,
            h: hs,
            diag,
            offdiag: e,
        }
    }

    /// Explicit `Q` in transposed layout: row `i` of the result is column
    /// `i` of `Q`.
    fn accumulate(&self) -> Vec<f64> {
        let n = self.n;
        let mut w = self.work.clone();
        let mut d = vec![0.0; n];
        for i in 0..n.saturating_sub(1) {
            w[i * n + n - 1] = w[i * n + i];
            w[i * n + i] = 1.0;
            let h = self.h[i + 1];
            if h != 0.0 {
                for k in 0..=i {
                    d[k] = w[(i + 1) * n + k] / h;
                }
                for j in 0..=i {
                    let (head, tail) = w.split_at_mut((i + 1) * n);
                    let (u, col) = (&tail[..=i], &mut head[j * n..j * n + i + 1]);
                    let g: f64 = u.iter().zip(col.iter()).map(|(a, b)| a * b).sum();
                    for (c, dk) in col.iter_mut().zip(&d[..=i]) {
                        *c -= g * dk;
                    }
                }
            }
            for k in 0..=i {
                w[(i + 1) * n + k] = 0.0;
            }
        }
        for j in 0..n {
            w[j * n + n - 1] = 0.0;
        }
        w[(n - 1) * n + n - 1] = 1.0;
        w
    }

    /// `Q y` using the stored reflectors.
    fn apply_q(&self, y: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut x = y.to_vec();
        for i in 0..n.saturating_sub(1) {
            let h = self.h[i + 1];
            if h != 0.0 {
                let u = &self.work[(i + 1) * n..(i + 1) * n + i + 1];
                let g: f64 = u.iter().zip(&x[..=i]).map(|(a, b)| a * b).sum::<f64>() / h;
                for (xk, uk) in x[..=i].iter_mut().zip(u) {
                    *xk -= g * uk;
                }
            }
        }
        x
    }

    /// `Qᵀ x`.
    fn apply_qt(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = x.to_vec();
        for i in (0..n.saturating_sub(1)).rev() {
            let h = self.h[i + 1];
            if h != 0.0 {
                let u = &self.work[(i + 1) * n..(i + 1) * n + i + 1];
                let g: f64 = u.iter().zip(&y[..=i]).map(|(a, b)| a * b).sum::<f64>() / h;
                for (yk, uk) in y[..=i].iter_mut().zip(u) {
                    *yk -= g * uk;
                }
            }
        }
        y
    }

    fn inverse_iteration(&self, lam: f64, seed: usize, scale: f64) -> Vec<f64> {
        let n = self.n;
        let mut state = 0x9E37_79B9_7F4A_7C15_u64 ^ (seed as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        let mut y: Vec<f64> = (0..n)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                0.5 + (state >> 11) as f64 / (1u64 << 53) as f64
            })
            .collect();
        normalize(&mut y);
        for _ in 0..3 {
            y = self.solve_shifted(lam, seed, scale, &y);
        }
        y
    }

    /// One normalized step `(T − σ)⁻¹ b` by Gaussian elimination with
    /// partial pivoting on the tridiagonal.
    fn solve_shifted(&self, lam: f64, seed: usize, scale: f64, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let sigma = lam + f64::EPSILON * scale * (1.0 + (seed % 7) as f64 * 0.1);
        let tiny = f64::EPSILON * scale;
        let guard = |x: f64| if x.abs() < tiny { tiny.copysign(x) } else { x };
        let mut c: Vec<f64> = self.diag.iter().map(|x| x - sigma).collect();
        let mut u: Vec<f64> = (0..n)
            .map(|i| if i + 1 < n { self.offdiag[i + 1] } else { 0.0 })
            .collect();
        let mut u2 = vec![0.0; n];
        let mut rhs = b.to_vec();
        for i in 0..n.saturating_sub(1) {
            let sub = self.offdiag[i + 1];
            if sub.abs() > c[i].abs() {
                let (ci, ui, ri) = (c[i], u[i], rhs[i]);
                let (c1, u1) = (c[i + 1], u[i + 1]);
                c[i] = sub;
                u[i] = c1;
                u2[i] = u1;
                rhs[i] = rhs[i + 1];
                let mult = ci / sub;
                c[i + 1] = ui - mult * c1;
                u[i + 1] = -mult * u1;
                rhs[i + 1] = ri - mult * rhs[i];
            } else {
                c[i] = guard(c[i]);
                let mult = sub / c[i];
                c[i + 1] -= mult * u[i];
                rhs[i + 1] -= mult * rhs[i];
            }
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = rhs[i];
            if i + 1 < n {
                s -= u[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= u2[i] * x[i + 2];
            }
            x[i] = s / guard(c[i]);
        }
        normalize(&mut x);
        x
    }
}

/// Implicit QL on a symmetric tridiagonal (`e[i] = T[i][i-1]` on entry).
/// When `q` is given its rows are rotated alongside (transposed layout).
fn ql_implicit(d: &mut [f64], e: &mut [f64], mut q: Option<&mut Vec<f64>>) -> Result<(), LinalgError> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1 = 0.0_f64;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_QL_SWEEPS {
                    return Err(LinalgError::NoConvergence { index: l });
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(q) = q.as_deref_mut() {
                        let (lo, hi) = q.split_at_mut((i + 1) * n);
                        let row_i = &mut lo[i * n..];
                        let row_i1 = &mut hi[..n];
                        for (a, b) in row_i.iter_mut().zip(row_i1.iter_mut()) {
                            let t = *b;
                            *b = s * *a + c * t;
                            *a = c * *a - s * t;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(rows: &[&[f64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn lcg_matrix(n: usize, seed: u64) -> SymMatrix {
        let mut s = seed;
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                m.set(i, j, ((s >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0);
            }
        }
        m
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let s = eigenvalues(&SymMatrix::identity(3), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(s.values, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn diagonal_is_sorted() {
        let s = eigenvalues(&SymMatrix::from_diagonal(&[3.0, 1.0, 2.0]), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(s.values, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn two_by_two_closed_form() {
        let m = sym(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let s = eigen_decomposition(&m, DEFAULT_TOLERANCE).unwrap();
        assert!((s.values[0] - 1.0).abs() < 1e-15);
        assert!((s.values[1] - 3.0).abs() < 1e-15);
        let v = &s.vectors.unwrap()[1];
        assert!((v[0] - v[1]).abs() < 1e-15 && v[0] > 0.0);
    }

    #[test]
    fn empty_and_scalar() {
        assert!(eigenvalues(&SymMatrix::zeros(0), 1e-10).unwrap().is_empty());
        let s = eigen_decomposition(&SymMatrix::from_diagonal(&[-4.5]), 1e-10).unwrap();
        assert_eq!(s.values, vec![-4.5]);
        assert_eq!(s.vectors.unwrap(), vec![vec![1.0]]);
    }

    #[test]
    fn size_cap_is_enforced() {
        let opts = SolverOptions {
            tol: 1e-10,
            order_cap: 4,
        };
        let err = eigenvalues_with(&SymMatrix::identity(5), opts).unwrap_err();
        assert!(matches!(err, LinalgError::SizeCap { order: 5, cap: 4 }));
    }

    #[test]
    fn value_path_matches_vector_path() {
        for (n, seed) in [(1, 1), (2, 2), (7, 3), (40, 4), (93, 5)] {
            let m = lcg_matrix(n, seed);
            let a = eigenvalues(&m, 1e-10).unwrap();
            let b = eigen_decomposition(&m, 1e-10).unwrap();
            for (x, y) in a.values.iter().zip(&b.values) {
                assert!((x - y).abs() < 1e-12, "n={n}: {x} vs {y}");
            }
            assert!(b.residual_bound < 1e-12);
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let m = lcg_matrix(30, 11);
        let s = eigen_decomposition(&m, 1e-10).unwrap();
        let v = s.vectors.unwrap();
        for i in 0..30 {
            for j in 0..30 {
                let dot: f64 = v[i].iter().zip(&v[j]).map(|(a, b)| a * b).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn selected_pairs_match_full_decomposition() {
        let m = lcg_matrix(57, 21);
        let full = eigen_decomposition(&m, 1e-10).unwrap();
        let (spec, vecs) = selected_eigenpairs(&m, &[0, 1, 30, 56], 1e-10).unwrap();
        let fv = full.vectors.unwrap();
        for (slot, &k) in [0usize, 1, 30, 56].iter().enumerate() {
            assert!((spec.values[k] - full.values[k]).abs() < 1e-12);
            let dot: f64 = vecs[slot].iter().zip(&fv[k]).map(|(a, b)| a * b).sum();
            assert!((dot.abs() - 1.0).abs() < 1e-9, "k={k} dot={dot}");
        }
    }

    #[test]
    fn selected_pairs_in_degenerate_cluster_are_orthogonal() {
        // C_6 adjacency has double eigenvalues.
        let n = 6;
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            m.set(i, (i + 1) % n, 1.0);
        }
        let (spec, vecs) = selected_eigenpairs(&m, &[1, 2], 1e-10).unwrap();
        assert!((spec.values[1] - spec.values[2]).abs() < 1e-12);
        let dot: f64 = vecs[0].iter().zip(&vecs[1]).map(|(a, b)| a * b).sum();
        assert!(dot.abs() < 1e-10);
        assert!(spec.residual_bound < 1e-12);
    }

    #[test]
    fn deterministic_output() {
        let m = lcg_matrix(25, 9);
        let a = eigen_decomposition(&m, 1e-10).unwrap();
        let b = eigen_decomposition(&m, 1e-10).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
    }
}
