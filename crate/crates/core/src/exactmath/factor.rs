//! Factorization of integer polynomials over the rationals by Kronecker's method.
//!
//! For each candidate degree `d` the polynomial is evaluated at `d + 1` integer
//! points; every factor of degree `d` must take a divisor of each value there, so
//! interpolating all divisor choices enumerates every possible factor. Slow in
//! general, but exact and easy to audit for the small degrees used here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{LaurentPoly1, MathError, Poly};

pub const DEFAULT_DEGREE_BOUND: usize = 16;

/// p = content · t^shift · Π fᵢ^mᵢ, each fᵢ primitive, irreducible, positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub shift: i64,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> LaurentPoly1 {
        let prod = self.factors.iter().fold(Poly::constant(self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m));
        LaurentPoly1::from_poly(&prod).shift(self.shift)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1 && self.content.abs().is_one()
    }
}

pub fn factor_integer_poly(p: &LaurentPoly1, degree_bound: usize) -> Result<Factorization, MathError> {
    if p.is_zero() {
        return Err(MathError::ZeroPolynomial);
    }
    let (shift, q) = p.to_poly_shifted();
    let (content, factors) = factor_poly(&q, degree_bound)?;
    Ok(Factorization { content, shift, factors })
}

/// Factors an ordinary polynomial with nonzero constant term into its signed content and
/// primitive irreducible factors with multiplicities.
pub fn factor_poly(q: &Poly, degree_bound: usize) -> Result<(BigInt, Vec<(Poly, u32)>), MathError> {
    let Some(deg) = q.degree() else {
        return Err(MathError::ZeroPolynomial);
    };
    if deg > degree_bound {
        return Err(MathError::DegreeBound { degree: deg, bound: degree_bound });
    }
    let mut content = q.content();
    if q.leading().is_negative() {
        content = -content;
    }
    let mut rest = q.primitive();
    let mut found: Vec<Poly> = Vec::new();

    // powers of t first; they never reach Kronecker since f(0) = 0 there
    let low = rest.low_order();
    for _ in 0..low {
        found.push(Poly::x());
    }
    rest = rest.shift_down(low);

    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        match kronecker_factor(&rest, d) {
            Some(f) => {
                rest = rest.div_exact(&f).expect("kronecker factor divides");
                found.push(f);
            }
            None => d += 1,
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        found.push(rest.primitive());
    }

    found.sort_by(|a, b| a.canonical_cmp(b));
    let mut grouped: Vec<(Poly, u32)> = Vec::new();
    for f in found {
        match grouped.last_mut() {
            Some((g, m)) if *g == f => *m += 1,
            _ => grouped.push((f, 1)),
        }
    }
    Ok((content, grouped))
}

/// True iff `q` is irreducible over the rationals (constants and zero are not).
pub fn is_irreducible(q: &Poly, degree_bound: usize) -> Result<bool, MathError> {
    if q.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let (_, f) = factor_poly(q, degree_bound)?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

/// A primitive factor of degree exactly `d` with positive leading coefficient, if any.
fn kronecker_factor(q: &Poly, d: usize) -> Option<Poly> {
    let n = q.degree()?;
    let radius = (n + d + 6) as i64;
    let mut candidates: Vec<(usize, BigInt, Vec<BigInt>)> = (-radius..=radius)
        .filter_map(|x| {
            let x = BigInt::from(x);
            let v = q.eval(&x);
            if v.is_zero() {
                // x - a divides q: only relevant when d == 1; handled by returning it directly
                return None;
            }
            let divs = positive_divisors(&v.abs())?;
            Some((divs.len(), x, divs))
        })
        .collect();

    if d == 1 {
        // rational roots at integer points: p(a) = 0 gives the factor x - a
        for a in -radius..=radius {
            if q.eval(&BigInt::from(a)).is_zero() {
                return Some(Poly::from_i64(&[-a, 1]));
            }
        }
    }

    if candidates.len() < d + 1 {
        return None;
    }
    candidates.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.abs().cmp(&b.1.abs())));
    candidates.truncate(d + 1);

    let xs: Vec<BigInt> = candidates.iter().map(|c| c.1.clone()).collect();
    let choices: Vec<Vec<BigInt>> = candidates
        .iter()
        .enumerate()
        .map(|(i, (_, _, divs))| {
            if i == 0 {
                divs.clone()
            } else {
                divs.iter().flat_map(|v| [v.clone(), -v]).collect()
            }
        })
        .collect();

    let lead = q.leading();
    let constant = q.coeff(0);
    let mut idx = vec![0usize; choices.len()];
    loop {
        let ys: Vec<BigInt> = idx.iter().zip(&choices).map(|(&k, c)| c[k].clone()).collect();
        if let Some(g) = Poly::interpolate(&xs, &ys) {
            if g.degree() == Some(d)
                && (&lead % &g.leading()).is_zero()
                && !g.coeff(0).is_zero()
                && (&constant % &g.coeff(0)).is_zero()
            {
                let g = g.primitive();
                if q.div_exact(&g).is_some() {
                    return Some(g);
                }
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return None;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Positive divisors of a positive integer; `None` when the value is too large to trial-divide.
fn positive_divisors(v: &BigInt) -> Option<Vec<BigInt>> {
    let v = v.to_u64()?;
    if v > 1 << 40 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= v {
        if v % i == 0 {
            small.push(BigInt::from(i));
            if i * i != v {
                large.push(BigInt::from(v / i));
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

/// Reciprocal partner t^deg · f(1/t), normalized to be primitive with positive leading term.
pub fn reciprocal(f: &Poly) -> Poly {
    f.shift_down(f.low_order()).reversed().primitive()
}

/// Greatest common divisor over Z[x] of primitive parts (content ignored).
pub fn primitive_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut a = a.primitive();
    let mut b = b.primitive();
    while !b.is_zero() {
        // pseudo-remainder keeps everything integral
        let db = b.degree().unwrap_or(0);
        let mut r = a.clone();
        while !r.is_zero() && r.degree().unwrap_or(0) >= db {
            let shift = r.degree().unwrap_or(0) - db;
            let lr = r.leading();
            let lb = b.leading();
            let g = lr.gcd(&lb);
            r = &r.scale(&(&lb / &g)) - &b.shift_up(shift).scale(&(&lr / &g));
        }
        a = b;
        b = r.primitive();
    }
    a.primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(c: &[i64]) -> LaurentPoly1 {
        LaurentPoly1::from_i64(0, c)
    }

    #[test]
    fn spec_examples() {
        let f = factor_integer_poly(&lp(&[1, -1, 1]), DEFAULT_DEGREE_BOUND).unwrap();
        assert!(f.is_irreducible());

        let f = factor_integer_poly(&lp(&[2, -5, 2]), DEFAULT_DEGREE_BOUND).unwrap();
        assert_eq!(
            f.factors,
            vec![(Poly::from_i64(&[-2, 1]), 1), (Poly::from_i64(&[-1, 2]), 1)]
        );

        let f = factor_integer_poly(&lp(&[1, -3, 1]), DEFAULT_DEGREE_BOUND).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn repeated_and_monomial_factors() {
        // 3 t^-2 (t - 1)^2 (t^2 + 1)
        let base = &lp(&[1, -1]).pow(2) * &lp(&[1, 0, 1]);
        let p = LaurentPoly1::from_poly(&Poly::from_i64(&[3])).shift(-2);
        let p = &p * &base;
        let f = factor_integer_poly(&p, DEFAULT_DEGREE_BOUND).unwrap();
        assert_eq!(f.content, BigInt::from(3));
        assert_eq!(f.shift, -2);
        assert_eq!(f.factors, vec![(Poly::from_i64(&[-1, 1]), 2), (Poly::from_i64(&[1, 0, 1]), 1)]);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn quartic_without_linear_factors() {
        // (t^2 + t + 2)(t^2 - 3t + 5)
        let p = &Poly::from_i64(&[2, 1, 1]) * &Poly::from_i64(&[5, -3, 1]);
        let (_, f) = factor_poly(&p, 16).unwrap();
        assert_eq!(f.len(), 2);
        assert!(is_irreducible(&Poly::from_i64(&[1, 0, 0, 0, 1]), 16).unwrap());
        assert!(!is_irreducible(&Poly::from_i64(&[4, 0, 0, 0, 1]), 16).unwrap());
    }

    #[test]
    fn degree_bound_refused() {
        let p = LaurentPoly1::from_i64(0, &[1; 18]);
        match factor_integer_poly(&p, DEFAULT_DEGREE_BOUND) {
            Err(MathError::DegreeBound { degree: 17, bound: 16 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reciprocal_partner() {
        assert_eq!(reciprocal(&Poly::from_i64(&[-1, 2])), Poly::from_i64(&[-2, 1]));
        assert_eq!(reciprocal(&Poly::from_i64(&[1, -1, 1])), Poly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn gcd_of_products() {
        let a = &Poly::from_i64(&[-1, 2]) * &Poly::from_i64(&[1, 1]);
        let b = &Poly::from_i64(&[-1, 2]) * &Poly::from_i64(&[3, 0, 1]);
        assert_eq!(primitive_gcd(&a, &b), Poly::from_i64(&[-1, 2]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn factors_reconstruct_input(
            coeffs in prop::collection::vec(-6i64..7, 1..8),
            lo in -3i64..3,
        ) {
            let p = LaurentPoly1::from_i64(lo, &coeffs);
            prop_assume!(!p.is_zero());
            let f = factor_integer_poly(&p, DEFAULT_DEGREE_BOUND).unwrap();
            prop_assert_eq!(f.expand(), p);
            for (g, _) in &f.factors {
                prop_assert!(g.leading().is_positive());
                prop_assert!(g.content().is_one());
            }
        }
    }
}
