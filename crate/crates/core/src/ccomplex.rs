//! Two-component link invariants from a pair of generalized Seifert matrices.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exactmath::{
    hermitian_signature, CirclePoint, GaussMatrix, GaussRat, HermitianMatrix, IntMatrix, LaurentPoly1, LaurentPoly2,
    MathError, Signature,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CComplexError {
    #[error("A is {0}x{1} and A' is {2}x{3}; both must be square of equal size")]
    Shape(usize, usize, usize, usize),
    #[error("Arf values must be 0 or 1, got {0}")]
    ArfValue(u8),
    #[error("second derivative at 1 is {0}, which is odd")]
    NonIntegralCorrection(String),
    #[error(transparent)]
    Math(#[from] MathError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CComplexData {
    #[serde(rename = "A")]
    a: IntMatrix,
    #[serde(rename = "Aprime")]
    a_prime: IntMatrix,
}

impl CComplexData {
    pub fn new(a: IntMatrix, a_prime: IntMatrix) -> Result<Self, CComplexError> {
        if !a.is_square() || !a_prime.is_square() || a.rows() != a_prime.rows() {
            return Err(CComplexError::Shape(a.rows(), a.cols(), a_prime.rows(), a_prime.cols()));
        }
        Ok(Self { a, a_prime })
    }

    /// The twisted Bing double case: both matrices equal to t·I_k.
    pub fn scalar(t: i64, k: usize) -> Self {
        let m = IntMatrix::identity(k).scale(&BigInt::from(t));
        Self { a: m.clone(), a_prime: m }
    }

    pub fn a(&self) -> &IntMatrix {
        &self.a
    }

    pub fn a_prime(&self) -> &IntMatrix {
        &self.a_prime
    }
}

impl<'de> Deserialize<'de> for CComplexData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "A")]
            a: IntMatrix,
            #[serde(rename = "Aprime")]
            a_prime: IntMatrix,
        }
        let r = Raw::deserialize(d)?;
        CComplexData::new(r.a, r.a_prime).map_err(serde::de::Error::custom)
    }
}

/// H(ω₁,ω₂) = (1−ω̄₁)(1−ω̄₂)A + (1−ω̄₁)(1−ω₂)A′ + (1−ω₁)(1−ω̄₂)A′ᵀ + (1−ω₁)(1−ω₂)Aᵀ.
pub fn multivar_matrix(d: &CComplexData, w1: CirclePoint, w2: CirclePoint) -> HermitianMatrix {
    let at = d.a.transpose();
    let apt = d.a_prime.transpose();
    match (w1.to_gauss(), w2.to_gauss()) {
        (Some(z1), Some(z2)) => {
            let one = GaussRat::one();
            let u1 = &one - &z1;
            let u2 = &one - &z2;
            let (c1, c2) = (u1.conj(), u2.conj());
            HermitianMatrix::Exact(GaussMatrix::combination(&[
                (&c1 * &c2, &d.a),
                (&c1 * &u2, &d.a_prime),
                (&u1 * &c2, &apt),
                (&u1 * &u2, &at),
            ]))
        }
        _ => {
            let one = Complex64::new(1.0, 0.0);
            let u1 = one - w1.to_complex();
            let u2 = one - w2.to_complex();
            let f = |m: &IntMatrix, i: usize, j: usize| m[(i, j)].to_f64().unwrap_or(f64::NAN);
            let n = d.a.rows();
            HermitianMatrix::Float(DMatrix::from_fn(n, n, |i, j| {
                u1.conj() * u2.conj() * f(&d.a, i, j)
                    + u1.conj() * u2 * f(&d.a_prime, i, j)
                    + u1 * u2.conj() * f(&apt, i, j)
                    + u1 * u2 * f(&at, i, j)
            }))
        }
    }
}

/// Signature of H(ω₁,ω₂); exact when both points are among ±1, ±i.
pub fn multivar_signature(d: &CComplexData, w1: CirclePoint, w2: CirclePoint) -> Result<Signature, CComplexError> {
    Ok(hermitian_signature(&multivar_matrix(d, w1, w2))?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict")]
pub enum AlexanderModule {
    /// The module of a trivial link: free, with reduced polynomial 1.
    TrivialFree { reduced_alexander: LaurentPoly2 },
    /// Outside the all-zero case; no claim is made.
    Other,
}

pub fn bing_alexander_module(d: &CComplexData) -> AlexanderModule {
    if d.a.is_zero() && d.a_prime.is_zero() {
        AlexanderModule::TrivialFree { reduced_alexander: LaurentPoly2::one() }
    } else {
        AlexanderModule::Other
    }
}

/// Arf(L₁) + Arf(L₂) + ½·Δ″(1) mod 2, with Δ the diagonal Δ_L(t, t).
pub fn murasugi_arf(arf1: u8, arf2: u8, diag: &LaurentPoly1) -> Result<u8, CComplexError> {
    for a in [arf1, arf2] {
        if a > 1 {
            return Err(CComplexError::ArfValue(a));
        }
    }
    let second = diag.second_derivative_at_one();
    if second.is_odd() {
        return Err(CComplexError::NonIntegralCorrection(second.to_string()));
    }
    let half: BigInt = second / 2;
    let corr = if half.is_odd() { 1 } else { 0 };
    Ok((arf1 + arf2 + corr) % 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EXACT: [CirclePoint; 3] = [CirclePoint::MinusOne, CirclePoint::I, CirclePoint::MinusI];

    #[test]
    fn signature_examples() {
        let zero = CComplexData::scalar(0, 1);
        for w1 in EXACT {
            for w2 in EXACT {
                assert_eq!(multivar_signature(&zero, w1, w2).unwrap().value, 0);
            }
        }
        let three = CComplexData::scalar(3, 1);
        assert_eq!(multivar_signature(&three, CirclePoint::MinusOne, CirclePoint::MinusOne).unwrap().value, 1);
        let m2 = CComplexData::scalar(-2, 1);
        assert_eq!(multivar_signature(&m2, CirclePoint::I, CirclePoint::MinusOne).unwrap().value, -1);
    }

    #[test]
    fn vanishes_at_one() {
        let d = CComplexData::new(
            IntMatrix::from_rows(&[vec![1, 2], vec![0, -3]]),
            IntMatrix::from_rows(&[vec![4, 1], vec![1, 1]]),
        )
        .unwrap();
        for w2 in EXACT {
            match multivar_matrix(&d, CirclePoint::One, w2) {
                HermitianMatrix::Exact(h) => assert_eq!(h, GaussMatrix::zeros(2, 2)),
                HermitianMatrix::Float(_) => panic!("exact point"),
            }
        }
    }

    #[test]
    fn alexander_module_examples() {
        assert_eq!(
            bing_alexander_module(&CComplexData::scalar(0, 1)),
            AlexanderModule::TrivialFree { reduced_alexander: LaurentPoly2::one() }
        );
        assert!(matches!(bing_alexander_module(&CComplexData::scalar(0, 3)), AlexanderModule::TrivialFree { .. }));
        let d = CComplexData::new(IntMatrix::from_rows(&[vec![1]]), IntMatrix::from_rows(&[vec![0]])).unwrap();
        assert_eq!(bing_alexander_module(&d), AlexanderModule::Other);
    }

    #[test]
    fn murasugi_examples() {
        assert_eq!(murasugi_arf(0, 0, &LaurentPoly1::zero()).unwrap(), 0);
        assert_eq!(murasugi_arf(1, 0, &LaurentPoly1::zero()).unwrap(), 1);
        assert_eq!(murasugi_arf(0, 0, &LaurentPoly1::from_i64(0, &[1, -2, 1])).unwrap(), 1);
        // t³ has second derivative 6 at 1: half is 3
        assert_eq!(murasugi_arf(0, 1, &LaurentPoly1::from_i64(3, &[1])).unwrap(), 0);
        assert!(matches!(murasugi_arf(2, 0, &LaurentPoly1::zero()), Err(CComplexError::ArfValue(2))));
    }

    #[test]
    fn shape_and_json() {
        assert!(CComplexData::new(IntMatrix::identity(2), IntMatrix::identity(3)).is_err());
        let d: CComplexData = serde_json::from_str(r#"{"A":[[1]],"Aprime":[[0]]}"#).unwrap();
        assert_eq!(d.a_prime(), &IntMatrix::from_rows(&[vec![0]]));
        let back: CComplexData = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
    }

    fn circle() -> impl Strategy<Value = CirclePoint> {
        prop_oneof![
            Just(CirclePoint::MinusOne),
            Just(CirclePoint::I),
            Just(CirclePoint::MinusI),
            (0.01f64..6.27).prop_map(CirclePoint::Angle),
        ]
    }

    proptest! {
        #[test]
        fn conjugation_symmetry(
            a in prop::collection::vec(-4i64..5, 9),
            b in prop::collection::vec(-4i64..5, 9),
            w1 in circle(),
            w2 in circle(),
        ) {
            let d = CComplexData::new(IntMatrix::from_vec(3, 3, a.into_iter().map(BigInt::from).collect()).unwrap(),
                IntMatrix::from_vec(3, 3, b.into_iter().map(BigInt::from).collect()).unwrap()).unwrap();
            let s = multivar_signature(&d, w1, w2).unwrap();
            let c = multivar_signature(&d, w1.conj(), w2.conj()).unwrap();
            prop_assume!(!s.has_warning() && !c.has_warning());
            prop_assert_eq!(s.value, c.value);
        }

        #[test]
        fn twisted_scalar_sign(t in -6i64..7, k in 1usize..4, w1 in circle(), w2 in circle()) {
            let s = multivar_signature(&CComplexData::scalar(t, k), w1, w2).unwrap();
            prop_assert_eq!(s.value, k as i64 * t.signum());
        }
    }
}
