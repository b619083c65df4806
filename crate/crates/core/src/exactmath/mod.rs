//! Exact arithmetic substrate: integer and rational matrices, Laurent
//! polynomials, Gaussian rationals, hermitian signatures and integer
//! polynomial factorization.

mod factor;
mod gaussian;
mod int_matrix;
mod laurent;
mod poly;
mod rat_matrix;
mod signature;
pub mod snf;

pub use factor::{
    factor_integer_poly, factor_poly, is_irreducible, primitive_gcd, reciprocal, Factorization, DEFAULT_DEGREE_BOUND,
};
pub use gaussian::{CirclePoint, GaussMatrix, GaussRat};
pub use int_matrix::{congruence, IntMatrix};
pub use laurent::{LaurentPoly1, LaurentPoly2};
pub use poly::{poly_det, Poly};
pub use rat_matrix::RatMatrix;
pub use signature::{exact_signature, hermitian_signature, HermitianMatrix, Signature, FLOAT_TOLERANCE};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MathError {
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not hermitian (max asymmetry {0:e})")]
    NonHermitian(f64),
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the factorization bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
}

/// Characteristic polynomial det(M − xI) of a rational matrix, scaled to a primitive
/// integer polynomial with positive leading coefficient.
pub fn char_poly(m: &RatMatrix) -> Result<Poly, MathError> {
    if !m.is_square() {
        return Err(MathError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    // det(dM − uI) in u = d·x, with d clearing all denominators
    let d = m.denominator_lcm();
    let scaled = m.scale(&BigRational::from_integer(d.clone()));
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = scaled[(i, j)].to_integer();
                    if i == j {
                        Poly::new(vec![c, BigInt::from(-1)])
                    } else {
                        Poly::constant(c)
                    }
                })
                .collect()
        })
        .collect();
    let in_u = poly_det(entries);
    // substitute u = d·x: coefficient k picks up d^k
    let mut pow = BigInt::from(1);
    let mut coeffs = Vec::with_capacity(n + 1);
    for c in in_u.coeffs() {
        coeffs.push(c * &pow);
        pow *= &d;
    }
    Ok(Poly::new(coeffs).primitive())
}

/// Minimal polynomial of a square rational matrix, as a primitive integer polynomial.
pub fn min_poly(m: &RatMatrix) -> Result<Poly, MathError> {
    use num_traits::{One, Zero};
    if !m.is_square() {
        return Err(MathError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    // vectorized powers I, M, M², … until the first linear dependency
    let mut powers: Vec<RatMatrix> = vec![RatMatrix::identity(n)];
    loop {
        let k = powers.len();
        let cols: Vec<Vec<BigRational>> = powers.iter().map(|p| p.entries().to_vec()).collect();
        let sys = RatMatrix::from_columns(n * n, &cols);
        let ns = sys.nullspace();
        if let Some(v) = ns.first() {
            // normalize so the highest power present has coefficient 1
            let top = (0..k).rev().find(|&i| !v[i].is_zero()).expect("nonzero kernel vector");
            let lead = v[top].clone();
            let rat: Vec<BigRational> = v[..=top].iter().map(|c| c / &lead).collect();
            let den = rat.iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
            let ints = rat.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
            return Ok(Poly::new(ints).primitive());
        }
        let next = &powers[k - 1] * m;
        powers.push(next);
    }
}
