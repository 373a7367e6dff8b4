//! Dense complex linear-algebra backbone: SVD with vectors, eigenvalues of
//! matrices and pencils, pseudo-inverse, nullspace extraction, norms.
//!
//! Everything here is a thin, contract-checked layer over LAPACK (zgesvd,
//! zgeev, zgetri) through `ndarray-linalg`. All routines are pure functions
//! of their arguments and safe to call concurrently.

use ndarray::prelude::*;
use ndarray_linalg::{Eig, Inverse, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = Array2<Complex64>;
pub type CVector = Array1<Complex64>;

/// Relative threshold below which a singular value is treated as zero
/// (rank decisions, pencil invertibility, pseudo-inverse truncation).
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

/// Constant in the SVD reconstruction bound
/// `‖M − UΣV*‖₂ ≤ ε_mach · SVD_RECONSTRUCT_KAPPA · ‖M‖₂`.
pub const SVD_RECONSTRUCT_KAPPA: f64 = 100.0;

/// Returns an error if any entry of `m` is NaN or infinite.
pub fn check_finite(m: &CMatrix, what: &'static str) -> Result<()> {
    if m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Full singular value decomposition `M = U Σ V*`.
///
/// `singular_values` is sorted nonincreasing. `σ_{-k}` (the k-th smallest
/// singular value, `k ≥ 1`) sits at position `min(rows, cols) - k` of the
/// sorted list; see [`SvdResult::sigma_from_smallest`].
#[derive(Debug, Clone)]
pub struct SvdResult {
    pub singular_values: Array1<f64>,
    /// Unitary `rows × rows` matrix of left singular vectors (columns).
    pub left_vectors: CMatrix,
    /// Unitary `cols × cols` matrix of right singular vectors (columns),
    /// i.e. `V`, not `V*`.
    pub right_vectors: CMatrix,
}

impl SvdResult {
    /// k-th smallest singular value, `k = 1` meaning the smallest.
    /// Columns of `right_vectors` beyond `singular_values.len()` (wide
    /// matrices) correspond to singular value zero.
    pub fn sigma_from_smallest(&self, k: usize) -> f64 {
        assert!(k >= 1 && k <= self.singular_values.len());
        self.singular_values[self.singular_values.len() - k]
    }

    /// Consistent (left, right) unit singular vector pair for `σ_{-k}`.
    pub fn pair_from_smallest(&self, k: usize) -> (CVector, CVector) {
        let idx = self.singular_values.len() - k;
        (
            self.left_vectors.column(idx).to_owned(),
            self.right_vectors.column(idx).to_owned(),
        )
    }

    pub fn sigma_max(&self) -> f64 {
        self.singular_values.first().copied().unwrap_or(0.0)
    }

    /// `U diag(Σ) V*` with the stored factors.
    pub fn reconstruct(&self) -> CMatrix {
        let (rows, cols) = (self.left_vectors.nrows(), self.right_vectors.nrows());
        let mut sigma = CMatrix::zeros((rows, cols));
        for (i, s) in self.singular_values.iter().enumerate() {
            sigma[(i, i)] = Complex64::new(*s, 0.0);
        }
        self.left_vectors.dot(&sigma).dot(&adjoint(&self.right_vectors))
    }
}

/// Conjugate transpose.
pub fn adjoint(m: &CMatrix) -> CMatrix {
    m.t().mapv(|z| z.conj())
}

/// Full SVD of a dense complex matrix.
pub fn svd_full(m: &CMatrix) -> Result<SvdResult> {
    check_finite(m, "svd input")?;
    let (u, s, vt) = m.svd(true, true).map_err(|e| Error::Numerical {
        routine: "zgesvd",
        detail: e.to_string(),
    })?;
    let u = u.expect("left vectors requested");
    let vt = vt.expect("right vectors requested");
    Ok(SvdResult {
        singular_values: s,
        left_vectors: u,
        right_vectors: adjoint(&vt),
    })
}

/// Spectral norm `‖M‖₂` (largest singular value).
pub fn spectral_norm(m: &CMatrix) -> Result<f64> {
    Ok(svd_full(m)?.sigma_max())
}

/// Frobenius norm.
pub fn fro_norm(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Eigenvalues of a square complex matrix (zgeev).
pub fn matrix_eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>> {
    check_finite(m, "eigenvalue input")?;
    let (vals, _) = m.eig().map_err(|e| Error::Numerical {
        routine: "zgeev",
        detail: e.to_string(),
    })?;
    Ok(vals.to_vec())
}

/// The `k` roots λ of `det(A + λB) = 0`, counted with multiplicity,
/// computed through the standard eigenproblem of `−B⁻¹A`.
///
/// `B` must be numerically invertible; a relative smallest singular value
/// at or below [`DEFAULT_RANK_TOL`] is rejected.
pub fn pencil_eigenvalues(a: &CMatrix, b: &CMatrix) -> Result<Vec<Complex64>> {
    if a.nrows() != a.ncols() || b.nrows() != b.ncols() || a.nrows() != b.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "pencil: A is {}x{}, B is {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    let svd_b = svd_full(b)?;
    let smax = svd_b.sigma_max();
    let smin = svd_b.sigma_from_smallest(1);
    if smax == 0.0 || smin <= DEFAULT_RANK_TOL * smax {
        return Err(Error::SingularPencil {
            ratio: if smax == 0.0 { 0.0 } else { smin / smax },
        });
    }
    let b_inv = b.inv().map_err(|e| Error::Numerical {
        routine: "zgetri",
        detail: e.to_string(),
    })?;
    let neg_binv_a = b_inv.dot(a).mapv(|z| -z);
    matrix_eigenvalues(&neg_binv_a)
}

/// Moore–Penrose pseudo-inverse with singular values at or below
/// `rank_tol · σ_max` treated as zero.
pub fn pseudo_inverse(m: &CMatrix, rank_tol: f64) -> Result<CMatrix> {
    assert!(rank_tol > 0.0, "rank_tol must be positive");
    let svd = svd_full(m)?;
    let smax = svd.sigma_max();
    let cut = rank_tol * smax;
    let mut pinv = CMatrix::zeros((m.ncols(), m.nrows()));
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s > cut && s > 0.0 {
            let v = svd.right_vectors.column(i);
            let u = svd.left_vectors.column(i);
            let scale = Complex64::new(1.0 / s, 0.0);
            for (r, vr) in v.iter().enumerate() {
                for (c, uc) in u.iter().enumerate() {
                    pinv[(r, c)] += scale * vr * uc.conj();
                }
            }
        }
    }
    Ok(pinv)
}

/// Orthonormal basis of the numerical right nullspace: right singular
/// vectors whose singular value is `≤ tol · σ_max`, smallest first.
/// Right-vector columns beyond `min(rows, cols)` carry singular value zero.
pub fn nullspace_basis(m: &CMatrix, tol: f64) -> Result<Vec<CVector>> {
    assert!(tol > 0.0, "tol must be positive");
    let svd = svd_full(m)?;
    let smax = svd.sigma_max();
    let cut = tol * smax;
    let nsv = svd.singular_values.len();
    let mut basis: Vec<CVector> = Vec::new();
    // Trailing exact-zero directions of a wide matrix come first.
    for i in (nsv..svd.right_vectors.ncols()).rev() {
        basis.push(svd.right_vectors.column(i).to_owned());
    }
    for i in (0..nsv).rev() {
        if svd.singular_values[i] <= cut {
            basis.push(svd.right_vectors.column(i).to_owned());
        } else {
            break;
        }
    }
    Ok(basis)
}

/// Greedy nearest-pair matching of two complex multisets: repeatedly pair
/// the closest unmatched elements. Not an optimal assignment, sufficient at
/// desk scale. Returns `(index_in_a, index_in_b, distance)` triples, one per
/// element of the smaller multiset.
pub fn greedy_match(a: &[Complex64], b: &[Complex64]) -> Vec<(usize, usize, f64)> {
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            pairs.push(((x - y).norm(), i, j));
        }
    }
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.cmp(&q.1)).then(p.2.cmp(&q.2)));
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut out = Vec::new();
    for (d, i, j) in pairs {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            out.push((i, j, d));
        }
    }
    out
}

/// Column-stacking `vec` operator.
pub fn vec_of(m: &CMatrix) -> CVector {
    let (rows, cols) = m.dim();
    let mut v = CVector::zeros(rows * cols);
    for c in 0..cols {
        for r in 0..rows {
            v[c * rows + r] = m[(r, c)];
        }
    }
    v
}

/// Inverse of [`vec_of`]: reshape a length `rows·cols` vector into a
/// `rows × cols` matrix column by column.
pub fn unvec(v: &CVector, rows: usize, cols: usize) -> CMatrix {
    assert_eq!(v.len(), rows * cols, "unvec length mismatch");
    let mut m = CMatrix::zeros((rows, cols));
    for c in 0..cols {
        for r in 0..rows {
            m[(r, c)] = v[c * rows + r];
        }
    }
    m
}
