use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{IntMatrix, RatMatrix};

/// Element of Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        Self::new(&self.re / &n, -&self.im / &n)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        Self::new(&self.re * &k, &self.im * &k)
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, r: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &r.re, &self.im + &r.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, r: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &r.re, &self.im - &r.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, r: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re * &r.re - &self.im * &r.im, &self.re * &r.im + &self.im * &r.re)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

/// Square-or-rectangular matrix over Q(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussRat>,
}

impl GaussMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![GaussRat::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> GaussRat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// re + i·im from a pair of rational matrices of equal shape.
    pub fn from_parts(re: &RatMatrix, im: &RatMatrix) -> Self {
        assert_eq!((re.rows(), re.cols()), (im.rows(), im.cols()));
        Self::from_fn(re.rows(), re.cols(), |i, j| GaussRat::new(re[(i, j)].clone(), im[(i, j)].clone()))
    }

    /// Σ cₖ·Mₖ for Gaussian scalars and integer matrices of a common shape.
    pub fn combination(terms: &[(GaussRat, &IntMatrix)]) -> Self {
        let (rows, cols) = terms.first().map_or((0, 0), |(_, m)| (m.rows(), m.cols()));
        let mut out = Self::zeros(rows, cols);
        for (c, m) in terms {
            assert_eq!((m.rows(), m.cols()), (rows, cols));
            for i in 0..rows {
                for j in 0..cols {
                    if !m[(i, j)].is_zero() {
                        out[(i, j)] = &out[(i, j)] + &c.scale_int(&m[(i, j)]);
                    }
                }
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { GaussRat::one() } else { GaussRat::zero() })
    }

    /// Largest |H - H*| entry, as a float, for error reports.
    pub fn max_asymmetry(&self) -> f64 {
        use num_traits::ToPrimitive;
        if self.rows != self.cols {
            return f64::INFINITY;
        }
        let mut worst = 0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = &self[(i, j)] - &self[(j, i)].conj();
                let v = d.norm_sqr().to_f64().unwrap_or(f64::INFINITY).sqrt();
                worst = worst.max(v);
            }
        }
        worst
    }

    pub fn to_complex_f64(&self) -> nalgebra::DMatrix<num_complex::Complex64> {
        use num_traits::ToPrimitive;
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| {
            let z = &self[(i, j)];
            num_complex::Complex64::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
        })
    }
}

impl Index<(usize, usize)> for GaussMatrix {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for GaussMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &GaussMatrix {
    type Output = GaussMatrix;
    fn mul(self, rhs: &GaussMatrix) -> GaussMatrix {
        assert_eq!(self.cols, rhs.rows);
        GaussMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(GaussRat::zero(), |acc, k| &acc + &(&self[(i, k)] * &rhs[(k, j)]))
        })
    }
}

/// Unit-circle point with an exact tag for the fourth roots of unity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CirclePoint {
    One,
    MinusOne,
    I,
    MinusI,
    /// e^{iθ}, θ in radians.
    Angle(f64),
}

impl CirclePoint {
    pub fn angle(theta: f64) -> Self {
        CirclePoint::Angle(theta)
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, CirclePoint::Angle(_))
    }

    pub fn conj(&self) -> Self {
        match *self {
            CirclePoint::I => CirclePoint::MinusI,
            CirclePoint::MinusI => CirclePoint::I,
            CirclePoint::Angle(t) => CirclePoint::Angle(-t),
            other => other,
        }
    }

    pub fn theta(&self) -> f64 {
        use std::f64::consts::{FRAC_PI_2, PI};
        match *self {
            CirclePoint::One => 0.0,
            CirclePoint::MinusOne => PI,
            CirclePoint::I => FRAC_PI_2,
            CirclePoint::MinusI => -FRAC_PI_2,
            CirclePoint::Angle(t) => t,
        }
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        match self {
            CirclePoint::One => num_complex::Complex64::new(1.0, 0.0),
            CirclePoint::MinusOne => num_complex::Complex64::new(-1.0, 0.0),
            CirclePoint::I => num_complex::Complex64::new(0.0, 1.0),
            CirclePoint::MinusI => num_complex::Complex64::new(0.0, -1.0),
            CirclePoint::Angle(t) => num_complex::Complex64::from_polar(1.0, *t),
        }
    }

    /// Exact value in Q(i) for the tagged points.
    pub fn to_gauss(&self) -> Option<GaussRat> {
        match self {
            CirclePoint::One => Some(GaussRat::from_ints(1, 0)),
            CirclePoint::MinusOne => Some(GaussRat::from_ints(-1, 0)),
            CirclePoint::I => Some(GaussRat::from_ints(0, 1)),
            CirclePoint::MinusI => Some(GaussRat::from_ints(0, -1)),
            CirclePoint::Angle(_) => None,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            CirclePoint::One => true,
            CirclePoint::Angle(t) => (t.rem_euclid(std::f64::consts::TAU)).abs() < 1e-15,
            _ => false,
        }
    }

    /// Parses "1", "-1", "i", "-i" or an angle in radians written as "angle:<θ>".
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "1" => Some(CirclePoint::One),
            "-1" => Some(CirclePoint::MinusOne),
            "i" => Some(CirclePoint::I),
            "-i" => Some(CirclePoint::MinusI),
            other => other.strip_prefix("angle:").and_then(|t| t.trim().parse().ok()).map(CirclePoint::Angle),
        }
    }
}

impl std::fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CirclePoint::One => write!(f, "1"),
            CirclePoint::MinusOne => write!(f, "-1"),
            CirclePoint::I => write!(f, "i"),
            CirclePoint::MinusI => write!(f, "-i"),
            CirclePoint::Angle(t) => write!(f, "angle:{t}"),
        }
    }
}

impl serde::Serialize for CirclePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for CirclePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = <String as serde::Deserialize>::deserialize(d)?;
        CirclePoint::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad circle point {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = GaussRat::from_ints(1, 2);
        let b = GaussRat::from_ints(3, -1);
        assert_eq!(&a * &b, GaussRat::from_ints(5, 5));
        assert_eq!(&a * &a.inv(), GaussRat::one());
        assert_eq!(a.conj(), GaussRat::from_ints(1, -2));
    }

    #[test]
    fn circle_points() {
        assert_eq!(CirclePoint::I.conj(), CirclePoint::MinusI);
        assert!(CirclePoint::One.is_one());
        assert!(CirclePoint::Angle(0.0).is_one());
        assert!(!CirclePoint::Angle(0.3).is_one());
        assert_eq!(CirclePoint::parse("angle:0.5"), Some(CirclePoint::Angle(0.5)));
        let z = CirclePoint::Angle(1.234).to_complex();
        assert!((z.norm() - 1.0).abs() < 1e-12);
    }
}
