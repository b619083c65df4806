use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{KnotError, SeifertMatrix};
use crate::exactmath::{
    hermitian_signature, poly_det, CirclePoint, GaussMatrix, GaussRat, HermitianMatrix, LaurentPoly1, Poly, Signature,
};

/// Largest form (2g) that `arf` will enumerate.
pub const ARF_SIZE_LIMIT: usize = 24;

/// det(A − t·Aᵀ), unit-normalized.
pub fn alexander(s: &SeifertMatrix) -> LaurentPoly1 {
    let a = s.matrix();
    let n = a.rows();
    let entries = (0..n)
        .map(|i| (0..n).map(|j| Poly::new(vec![a[(i, j)].clone(), -a[(j, i)].clone()])).collect())
        .collect();
    LaurentPoly1::from_poly(&poly_det(entries)).normalize()
}

/// The hermitian matrix (1−ω)A + (1−ω̄)Aᵀ.
pub fn lt_matrix(s: &SeifertMatrix, omega: CirclePoint) -> HermitianMatrix {
    let a = s.matrix();
    let at = a.transpose();
    match omega.to_gauss() {
        Some(w) => {
            let c = &GaussRat::one() - &w;
            HermitianMatrix::Exact(GaussMatrix::combination(&[(c.clone(), a), (c.conj(), &at)]))
        }
        None => {
            let w = omega.to_complex();
            let c = Complex64::new(1.0, 0.0) - w;
            let n = a.rows();
            let f = |x: &num_bigint::BigInt| x.to_f64().unwrap_or(f64::NAN);
            HermitianMatrix::Float(DMatrix::from_fn(n, n, |i, j| c * f(&a[(i, j)]) + c.conj() * f(&at[(i, j)])))
        }
    }
}

/// Levine–Tristram signature at ω. Exact at ±1, ±i; eigenvalue-based elsewhere.
pub fn lt_signature(s: &SeifertMatrix, omega: CirclePoint) -> Result<Signature, KnotError> {
    Ok(hermitian_signature(&lt_matrix(s, omega))?)
}

#[derive(Clone, Debug, Serialize)]
pub struct Jump {
    /// Bracket [lo, hi] (radians) containing the jump.
    pub lo: f64,
    pub hi: f64,
    pub before: i64,
    pub after: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureIntegral {
    /// (1/2π)∫σ over the circle.
    pub estimate: f64,
    pub error_bound: f64,
    /// Nearest fraction with denominator ≤ 100 lying within the error bound, if any.
    #[serde(serialize_with = "ser_ratio")]
    pub rational: Option<Ratio<i64>>,
    pub resolution: usize,
    pub jumps: Vec<Jump>,
}

fn ser_ratio<S: serde::Serializer>(r: &Option<Ratio<i64>>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) if *r.denom() == 1 => s.serialize_some(&r.numer().to_string()),
        Some(r) => s.serialize_some(&format!("{}/{}", r.numer(), r.denom())),
        None => s.serialize_none(),
    }
}

/// Normalized integral of the signature function, from uniform samples with
/// jumps bracketed by bisection to width 2π/(64·resolution).
pub fn signature_integral(s: &SeifertMatrix, resolution: usize) -> Result<SignatureIntegral, KnotError> {
    if resolution < 16 {
        return Err(KnotError::Resolution(resolution));
    }
    if s.size() == 0 {
        return Ok(SignatureIntegral {
            estimate: 0.0,
            error_bound: 0.0,
            rational: Some(Ratio::from_integer(0)),
            resolution,
            jumps: vec![],
        });
    }
    let sigma = |theta: f64| -> Result<i64, KnotError> { Ok(lt_signature(s, CirclePoint::Angle(theta))?.value) };
    let step = TAU / resolution as f64;
    let width = step / 64.0;
    let thetas: Vec<f64> = (0..resolution).map(|k| step * (k as f64 + 0.5)).collect();
    let values = thetas.iter().map(|&t| sigma(t)).collect::<Result<Vec<_>, _>>()?;

    let mut jumps = Vec::new();
    for k in 0..resolution {
        let (a, va) = (thetas[k], values[k]);
        let (b, vb) = if k + 1 < resolution { (thetas[k + 1], values[k + 1]) } else { (thetas[0] + TAU, values[0]) };
        bracket(&sigma, (a, va), (b, vb), width, &mut jumps)?;
    }

    // integrate the step function over [θ₀, θ₀ + 2π], jumping at bracket midpoints
    let mut total = 0.0;
    let mut cur = values[0];
    let mut at = thetas[0];
    for j in &jumps {
        let mid = 0.5 * (j.lo + j.hi);
        total += cur as f64 * (mid - at);
        cur = j.after;
        at = mid;
    }
    total += cur as f64 * (thetas[0] + TAU - at);
    let estimate = total / TAU;
    let error_bound = jumps.iter().fold(0.0, |acc, j| acc + (j.after - j.before).unsigned_abs() as f64 * (j.hi - j.lo)) / TAU;
    let rational = small_fraction(estimate, error_bound);
    for j in &mut jumps {
        let w = j.hi - j.lo;
        j.lo = j.lo.rem_euclid(TAU);
        j.hi = j.lo + w;
    }
    Ok(SignatureIntegral { estimate, error_bound, rational, resolution, jumps })
}

fn bracket(
    sigma: &impl Fn(f64) -> Result<i64, KnotError>,
    (a, va): (f64, i64),
    (b, vb): (f64, i64),
    width: f64,
    out: &mut Vec<Jump>,
) -> Result<(), KnotError> {
    if va == vb {
        return Ok(());
    }
    if b - a <= width {
        out.push(Jump { lo: a, hi: b, before: va, after: vb });
        return Ok(());
    }
    let m = 0.5 * (a + b);
    let vm = sigma(m)?;
    bracket(sigma, (a, va), (m, vm), width, out)?;
    bracket(sigma, (m, vm), (b, vb), width, out)
}

fn small_fraction(x: f64, bound: f64) -> Option<Ratio<i64>> {
    let tol = bound.max(1e-12);
    (1..=100i64).find_map(|q| {
        let p = (x * q as f64).round();
        ((p / q as f64 - x).abs() <= tol).then(|| Ratio::new(p as i64, q))
    })
}

/// Arf invariant of q(x) = xᵀAx mod 2, by counting zeros over F₂^{2g}.
pub fn arf(s: &SeifertMatrix) -> Result<u8, KnotError> {
    let n = s.size();
    if n > ARF_SIZE_LIMIT {
        return Err(KnotError::TooLarge { size: n, limit: ARF_SIZE_LIMIT });
    }
    let a = s.matrix();
    let odd = |i: usize, j: usize| a[(i, j)].is_odd();
    // q(x) = Σ aᵢᵢxᵢ + Σ_{i<j} (aᵢⱼ + aⱼᵢ)xᵢxⱼ; walk F₂ⁿ in Gray-code order
    let diag: Vec<bool> = (0..n).map(|i| odd(i, i)).collect();
    let cross: Vec<u32> =
        (0..n).map(|i| (0..n).filter(|&j| j != i && (odd(i, j) ^ odd(j, i))).fold(0u32, |m, j| m | 1 << j)).collect();
    let mut x = 0u32;
    let mut q = false;
    let mut zeros: u64 = 1;
    for step in 1u64..(1u64 << n) {
        let k = step.trailing_zeros() as usize;
        q ^= diag[k] ^ ((cross[k] & x).count_ones() % 2 == 1);
        x ^= 1 << k;
        if !q {
            zeros += 1;
        }
    }
    let g = n / 2;
    let even = (1u64 << (2 * g)) / 2 + (1u64 << g) / 2;
    // 2^{2g−1} + 2^{g−1}; the g = 0 case gives 1
    Ok(if zeros == even.max(1) { 0 } else { 1 })
}
