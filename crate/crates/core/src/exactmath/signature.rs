//! Signature (#positive − #negative eigenvalues) of hermitian matrices.
//!
//! Exact mode works over Q(i) by congruence diagonalization, so no tolerance is
//! involved. Float mode uses a hermitian eigensolver; eigenvalues with
//! |λ| < `FLOAT_TOLERANCE`·‖H‖ count as zero, and any eigenvalue in the
//! ill-conditioned band (1e-12, 1e-6) is reported back to the caller.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{GaussMatrix, GaussRat, MathError};

pub const FLOAT_TOLERANCE: f64 = 1e-9;
pub const HERMITIAN_CHECK_TOLERANCE: f64 = 1e-9;
const WARN_BAND: (f64, f64) = (1e-12, 1e-6);

#[derive(Clone, Debug)]
pub enum HermitianMatrix {
    Exact(GaussMatrix),
    Float(DMatrix<Complex64>),
}

impl HermitianMatrix {
    pub fn from_float_parts(re: &DMatrix<f64>, im: &DMatrix<f64>) -> Self {
        HermitianMatrix::Float(DMatrix::from_fn(re.nrows(), re.ncols(), |i, j| Complex64::new(re[(i, j)], im[(i, j)])))
    }

    pub fn dim(&self) -> usize {
        match self {
            HermitianMatrix::Exact(m) => m.rows(),
            HermitianMatrix::Float(m) => m.nrows(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Signature {
    pub value: i64,
    pub exact: bool,
    /// Zero threshold used in float mode (relative to the matrix norm).
    pub tolerance: Option<f64>,
    /// Eigenvalues that fell in the ill-conditioned band.
    pub near_zero: Vec<f64>,
}

impl Signature {
    pub fn has_warning(&self) -> bool {
        !self.near_zero.is_empty()
    }
}

pub fn hermitian_signature(h: &HermitianMatrix) -> Result<Signature, MathError> {
    match h {
        HermitianMatrix::Exact(m) => exact_signature(m).map(|value| Signature {
            value,
            exact: true,
            tolerance: None,
            near_zero: vec![],
        }),
        HermitianMatrix::Float(m) => float_signature(m),
    }
}

/// Congruence diagonalization over Q(i).
pub fn exact_signature(h: &GaussMatrix) -> Result<i64, MathError> {
    if h.rows() != h.cols() {
        return Err(MathError::NotSquare(h.rows(), h.cols()));
    }
    if !h.is_hermitian() {
        return Err(MathError::NonHermitian(h.max_asymmetry()));
    }
    let mut a: Vec<Vec<GaussRat>> = (0..h.rows()).map(|i| (0..h.cols()).map(|j| h[(i, j)].clone()).collect()).collect();
    let mut sig = 0i64;
    while !a.is_empty() {
        let n = a.len();
        let pivot = (0..n).find(|&k| !a[k][k].is_zero());
        let k = match pivot {
            Some(k) => k,
            None => {
                let Some((k, l)) = (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).find(|&(k, l)| !a[k][l].is_zero())
                else {
                    break; // remaining block is zero
                };
                // row_k += c·row_l, col_k += c̄·col_l with c = a[k][l] makes a[k][k] = 2|c|² > 0
                let c = a[k][l].clone();
                let cbar = c.conj();
                for j in 0..n {
                    let v = &a[k][j] + &(&c * &a[l][j]);
                    a[k][j] = v;
                }
                for row in a.iter_mut() {
                    let v = &row[k] + &(&cbar * &row[l]);
                    row[k] = v;
                }
                k
            }
        };
        let d = a[k][k].re.clone();
        debug_assert!(a[k][k].im.is_zero());
        sig += if d.is_positive() { 1 } else { -1 };
        let dinv = GaussRat::real(d.recip());
        let mut next = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != k) {
            let f = &a[i][k] * &dinv;
            let row: Vec<GaussRat> = (0..n)
                .filter(|&j| j != k)
                .map(|j| if f.is_zero() { a[i][j].clone() } else { &a[i][j] - &(&f * &a[k][j]) })
                .collect();
            next.push(row);
        }
        a = next;
    }
    Ok(sig)
}

fn float_signature(h: &DMatrix<Complex64>) -> Result<Signature, MathError> {
    if h.nrows() != h.ncols() {
        return Err(MathError::NotSquare(h.nrows(), h.ncols()));
    }
    let n = h.nrows();
    if n == 0 {
        return Ok(Signature { value: 0, exact: false, tolerance: Some(FLOAT_TOLERANCE), near_zero: vec![] });
    }
    let norm = h.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let mut asym = 0f64;
    for i in 0..n {
        for j in 0..n {
            asym = asym.max((h[(i, j)] - h[(j, i)].conj()).norm());
        }
    }
    if asym > HERMITIAN_CHECK_TOLERANCE * norm.max(1.0) {
        return Err(MathError::NonHermitian(asym));
    }
    // symmetrize away rounding noise before the eigensolve
    let hs = DMatrix::from_fn(n, n, |i, j| (h[(i, j)] + h[(j, i)].conj()) * 0.5);
    let eig = hs.symmetric_eigenvalues();
    let cut = FLOAT_TOLERANCE * norm;
    let mut value = 0i64;
    let mut near_zero = Vec::new();
    for &l in eig.iter() {
        if l.abs() > WARN_BAND.0 && l.abs() < WARN_BAND.1 {
            near_zero.push(l);
        }
        if l > cut {
            value += 1;
        } else if l < -cut {
            value -= 1;
        }
    }
    Ok(Signature { value, exact: false, tolerance: Some(FLOAT_TOLERANCE), near_zero })
}
