//! Dense complex linear algebra helpers on top of `nalgebra`.
//!
//! Matrices are stored column-major (nalgebra's layout), and the
//! vectorization used throughout the crate is column-major as well, so
//! `vec_col` is a plain reshape and the conjugation map `X ↦ A X B`
//! vectorizes as `Bᵀ ⊗ A`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub fn identity(d: usize) -> CMatrix {
    CMatrix::identity(d, d)
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    m.clone().svd(false, false).singular_values.max()
}

/// Eigenvalues of a Hermitian matrix, ascending. The caller is responsible
/// for Hermiticity; the anti-Hermitian part is ignored by the solver.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut ev: Vec<f64> = nalgebra::SymmetricEigen::new(m.clone())
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Matrix exponential (scaling and squaring).
pub fn expm(m: &CMatrix) -> CMatrix {
    m.exp()
}

/// Column-major vectorization of a square matrix.
pub fn vec_col(m: &CMatrix) -> CVector {
    CVector::from_column_slice(m.as_slice())
}

/// Inverse of [`vec_col`] for a d×d matrix.
pub fn unvec(d: usize, v: &CVector) -> CMatrix {
    CMatrix::from_column_slice(d, d, v.as_slice())
}

/// Superoperator matrix of the transpose map `X ↦ Xᵀ` in column-major
/// vectorization: the d²×d² commutation (swap) matrix.
pub fn transpose_map_matrix(d: usize) -> CMatrix {
    let mut t = CMatrix::zeros(d * d, d * d);
    for r in 0..d {
        for c in 0..d {
            // vec(Xᵀ)[c + r·d] = vec(X)[r + c·d]
            t[(r * d + c, c * d + r)] = Complex64::new(1.0, 0.0);
        }
    }
    t
}

/// ‖U†U − I‖ in Frobenius norm.
pub fn unitary_deviation(u: &CMatrix) -> f64 {
    let d = u.nrows();
    (u.adjoint() * u - identity(d)).norm()
}

/// Matrix with independent standard complex Gaussian entries.
pub fn random_matrix<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(d, d, |_, _| {
        Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    })
}

/// Random Hermitian matrix `(G + G†)/2`.
pub fn random_hermitian<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    let g = random_matrix(d, rng);
    (&g + g.adjoint()).scale(0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn vectorization_round_trip() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(2.0, 1.0), c(3.0, -1.0), c(4.0, 0.5)]);
        let v = vec_col(&m);
        // column-major: (0,0), (1,0), (0,1), (1,1)
        assert_eq!(v[0], c(1.0, 0.0));
        assert_eq!(v[1], c(3.0, -1.0));
        assert_eq!(v[2], c(2.0, 1.0));
        assert_eq!(unvec(2, &v), m);
    }

    #[test]
    fn conjugation_kron_identity() {
        // vec(A X B) = (Bᵀ ⊗ A) vec(X)
        let a = CMatrix::from_row_slice(2, 2, &[c(1.0, 2.0), c(0.0, 1.0), c(2.0, 0.0), c(1.0, -1.0)]);
        let b = CMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(1.0, 1.0), c(-1.0, 0.0), c(2.0, 0.0)]);
        let x = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]);
        let lhs = vec_col(&(&a * &x * &b));
        let rhs = b.transpose().kronecker(&a) * vec_col(&x);
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn transpose_superoperator_acts_as_transpose() {
        let t = transpose_map_matrix(3);
        let x = CMatrix::from_fn(3, 3, |i, j| c(i as f64, j as f64));
        let lhs = unvec(3, &(t * vec_col(&x)));
        assert!((lhs - x.transpose()).norm() < 1e-14);
    }

    #[test]
    fn spectral_norm_of_diagonal() {
        let m = CMatrix::from_diagonal(&CVector::from_vec(vec![c(3.0, 0.0), c(0.0, -4.0)]));
        assert!((spectral_norm(&m) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_eigenvalues_sorted() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(-1.0, 0.0)]);
        let ev = hermitian_eigenvalues(&m);
        assert!((ev[0] + 2f64.sqrt()).abs() < 1e-12);
        assert!((ev[1] - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let z = CMatrix::zeros(3, 3);
        assert!((expm(&z) - identity(3)).norm() < 1e-14);
    }
}
