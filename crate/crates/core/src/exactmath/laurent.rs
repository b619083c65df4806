use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Poly;

/// Laurent polynomial in one variable with integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Coefficients starting at exponent `low`.
    pub fn from_i64(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (low + k as i64, BigInt::from(c))))
    }

    pub fn from_poly(p: &Poly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c.clone())))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the exponent support (max - min); 0 for zero and monomials.
    pub fn span(&self) -> usize {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize,
            _ => 0,
        }
    }

    /// Splits into t^shift · p(t) with p an ordinary polynomial having nonzero constant term.
    pub fn to_poly_shifted(&self) -> (i64, Poly) {
        let Some(lo) = self.min_exp() else {
            return (0, Poly::zero());
        };
        let mut c = vec![BigInt::zero(); self.span() + 1];
        for (e, v) in &self.terms {
            c[(e - lo) as usize] = v.clone();
        }
        (lo, Poly::new(c))
    }

    /// Unit-normal form: lowest exponent moved to 0 and the top coefficient made positive.
    /// Two polynomials agree up to ±t^k exactly when their normal forms are equal.
    pub fn normalize(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let flip = self.terms.values().next_back().is_some_and(Signed::is_negative);
        Self::from_terms(self.terms.iter().map(|(e, c)| (e - lo, if flip { -c } else { c.clone() })))
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// p(t⁻¹).
    pub fn mirror(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-e, c.clone())))
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e + k, c.clone())))
    }

    /// Value at t = 1.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at t = -1.
    pub fn at_minus_one(&self) -> BigInt {
        self.terms.iter().map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c }).sum()
    }

    /// Value at t = i as (real, imaginary).
    pub fn at_i(&self) -> (BigInt, BigInt) {
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for (e, c) in &self.terms {
            match e.rem_euclid(4) {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        (re, im)
    }

    pub fn eval_complex(&self, re: f64, im: f64) -> (f64, f64) {
        let z = num_complex::Complex64::new(re, im);
        let v: num_complex::Complex64 = self
            .terms
            .iter()
            .map(|(e, c)| z.powi(*e as i32) * num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN))
            .sum();
        (v.re, v.im)
    }

    /// Σ c_k · k(k-1): the second derivative evaluated at t = 1.
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.terms.iter().map(|(e, c)| c * BigInt::from(*e) * BigInt::from(e - 1)).sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn add(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(*e, c.clone());
        }
        p
    }
}

impl Sub for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn sub(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn neg(self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(self.terms.iter().map(|(e, c)| (*e, -c)))
    }
}

impl Mul for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn mul(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut p = LaurentPoly1::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}

fn write_terms<K>(
    f: &mut fmt::Formatter<'_>,
    terms: impl DoubleEndedIterator<Item = (K, BigInt)>,
    mono: impl Fn(&K) -> String,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms.rev() {
        let m = mono(&k);
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if m.is_empty() || !a.is_one() {
            write!(f, "{a}")?;
        }
        write!(f, "{m}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn power(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(e, c)| (*e, c.clone())), |e| power("t", *e))
    }
}

impl fmt::Debug for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Str(String),
    Num(i64),
}

impl CoeffRepr {
    fn parse(self) -> Option<BigInt> {
        match self {
            CoeffRepr::Num(n) => Some(n.into()),
            CoeffRepr::Str(s) => s.trim().parse().ok(),
        }
    }
}

// JSON: {"exponent": "coefficient"} with exponents and coefficients as decimal strings.

impl Serialize for LaurentPoly1 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly1 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw: BTreeMap<String, CoeffRepr> = BTreeMap::deserialize(d)?;
        let mut p = LaurentPoly1::zero();
        for (k, v) in raw {
            let e: i64 = k.trim().parse().map_err(|_| D::Error::custom(format!("bad exponent {k:?}")))?;
            let c = v.parse().ok_or_else(|| D::Error::custom("bad coefficient"))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Laurent polynomial in two variables t₁, t₂.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([((0, 0), BigInt::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: (i64, i64), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Unit-normal form: the smallest exponent of each variable moved to 0 and the
    /// coefficient of the lexicographically largest exponent made positive.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo1 = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let lo2 = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        let flip = self.terms.values().next_back().is_some_and(Signed::is_negative);
        Self::from_terms(
            self.terms.iter().map(|((a, b), c)| ((a - lo1, b - lo2), if flip { -c } else { c.clone() })),
        )
    }

    /// Restriction t₁ = t₂ = t.
    pub fn diagonal(&self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(self.terms.iter().map(|((a, b), c)| (a + b, c.clone())))
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                p.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        p
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(e, c)| (*e, c.clone())), |(a, b)| {
            let (x, y) = (power("t1", *a), power("t2", *b));
            match (x.is_empty(), y.is_empty()) {
                (false, false) => format!("{x}*{y}"),
                _ => format!("{x}{y}"),
            }
        })
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for ((a, b), c) in &self.terms {
            map.serialize_entry(&format!("{a},{b}"), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw: BTreeMap<String, CoeffRepr> = BTreeMap::deserialize(d)?;
        let mut p = LaurentPoly2::zero();
        for (k, v) in raw {
            let bad = || D::Error::custom(format!("bad exponent pair {k:?}"));
            let (a, b) = k.split_once(',').ok_or_else(bad)?;
            let e = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            p.add_term(e, v.parse().ok_or_else(|| D::Error::custom("bad coefficient"))?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normal_form_examples() {
        // -t^-1 + 3 - t  ->  t^2 - 3t + 1
        let p = LaurentPoly1::from_i64(-1, &[-1, 3, -1]);
        assert_eq!(p.normalize(), LaurentPoly1::from_i64(0, &[1, -3, 1]));
        assert_eq!(p.normalize().to_string(), "t^2 - 3t + 1");
        assert!(LaurentPoly1::zero().normalize().is_zero());
    }

    #[test]
    fn evaluations() {
        let p = LaurentPoly1::from_i64(0, &[1, -1, 1]);
        assert_eq!(p.at_one(), BigInt::from(1));
        assert_eq!(p.at_minus_one(), BigInt::from(3));
        assert_eq!(p.at_i(), (BigInt::from(0), BigInt::from(-1)));
        let sq = LaurentPoly1::from_i64(0, &[1, -2, 1]);
        assert_eq!(sq.second_derivative_at_one(), BigInt::from(2));
    }

    #[test]
    fn json_shapes() {
        let p = LaurentPoly1::from_i64(-1, &[2, 0, 5]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"-1":"2","1":"5"}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly1>(&s).unwrap(), p);
        let q = LaurentPoly2::from_terms([((1, -2), BigInt::from(3))]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"1,-2":"3"}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly2>(r#"{"1,-2": 3}"#).unwrap(), q);
    }

    #[test]
    fn two_variable_normal_form() {
        let p = LaurentPoly2::from_terms([((-1, 2), BigInt::from(-2)), ((0, 1), BigInt::from(1))]);
        let n = p.normalize();
        // exponents shift to (0, 1) and (1, 0); the lexicographically top term is already positive
        assert_eq!(n.terms().get(&(0, 1)), Some(&BigInt::from(-2)));
        assert_eq!(n.terms().get(&(1, 0)), Some(&BigInt::from(1)));
        assert_eq!(n.normalize(), n);
    }

    fn laurent() -> impl Strategy<Value = LaurentPoly1> {
        (-4i64..4, prop::collection::vec(-9i64..10, 0..7)).prop_map(|(lo, c)| LaurentPoly1::from_i64(lo, &c))
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(p in laurent()) {
            let n = p.normalize();
            prop_assert_eq!(n.normalize(), n.clone());
            prop_assert!(n.is_zero() || n.min_exp() == Some(0));
        }

        #[test]
        fn units_collapse(p in laurent(), k in -5i64..5, neg in any::<bool>()) {
            let mut q = p.shift(k);
            if neg { q = -&q; }
            prop_assert_eq!(q.normalize(), p.normalize());
        }
    }
}
