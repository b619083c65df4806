//! Finite-dimensional rational representations (M, {πᵢ}, s, φ) with a (−1)-hermitian form,
//! the construction from Seifert data, the hat construction and exact module checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boundary_forms::{build_that_shat, BoundaryError};
use crate::exactmath::{char_poly, is_irreducible, min_poly, MathError, Poly, RatMatrix, DEFAULT_DEGREE_BOUND};
use crate::knot_invariants::SeifertMatrix;

/// Number of seeded random combinations tried in the commutant and isomorphism searches.
pub const SAMPLED_COMBINATIONS: usize = 20;
const SEED_BASE: u64 = 0x5eed_0001;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("representation invariant violated: {0}")]
    Invariant(String),
    #[error("empty Seifert matrix has no representation")]
    Empty,
    #[error("operation needs {expected} projectors, got {got}")]
    Components { expected: usize, got: usize },
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
    #[error(transparent)]
    Math(#[from] MathError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub projectors: Vec<RatMatrix>,
    pub action: RatMatrix,
    pub form: RatMatrix,
}

impl Representation {
    pub fn new(projectors: Vec<RatMatrix>, action: RatMatrix, form: RatMatrix) -> Result<Self, RepError> {
        let r = Self { projectors, action, form };
        r.validate()?;
        Ok(r)
    }

    pub fn dim(&self) -> usize {
        self.action.rows()
    }

    pub fn m(&self) -> usize {
        self.projectors.len()
    }

    /// Checks every structural identity exactly, naming the first one that fails.
    pub fn validate(&self) -> Result<(), RepError> {
        let n = self.dim();
        let bad = |s: String| Err(RepError::Invariant(s));
        let shapes = std::iter::once(&self.action).chain(std::iter::once(&self.form)).chain(&self.projectors);
        if shapes.into_iter().any(|m| m.rows() != n || m.cols() != n) {
            return bad(format!("all matrices must be {n}x{n}"));
        }
        let mut sum = RatMatrix::zeros(n, n);
        for (i, p) in self.projectors.iter().enumerate() {
            if &(p * p) != p {
                return bad(format!("pi_{} is not idempotent", i + 1));
            }
            for (j, q) in self.projectors.iter().enumerate() {
                if i != j && !(p * q).is_zero() {
                    return bad(format!("pi_{} pi_{} != 0", i + 1, j + 1));
                }
            }
            if &p.transpose() * &self.form != &self.form * p {
                return bad(format!("pi_{} is not self-adjoint for the form", i + 1));
            }
            sum = &sum + p;
        }
        if sum != RatMatrix::identity(n) {
            return bad("projectors do not sum to the identity".into());
        }
        if self.form.transpose() != -&self.form {
            return bad("form is not skew-symmetric".into());
        }
        if !self.form.is_invertible() {
            return bad("form is singular".into());
        }
        let lhs = &(&self.action.transpose() * &self.form) + &(&self.form * &self.action);
        if lhs != self.form {
            return bad("S^T phi + phi S != phi".into());
        }
        Ok(())
    }

    /// Coordinate grading when every projector is a 0/1 diagonal matrix: component of each basis vector.
    fn coordinate_grading(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let mut comp = vec![usize::MAX; n];
        for (i, p) in self.projectors.iter().enumerate() {
            for a in 0..n {
                for b in 0..n {
                    let v = &p[(a, b)];
                    if a != b && !v.is_zero() {
                        return None;
                    }
                    if a == b && v.is_one() {
                        comp[a] = i;
                    } else if a == b && !v.is_zero() {
                        return None;
                    }
                }
            }
        }
        comp.iter().all(|&c| c != usize::MAX).then_some(comp)
    }
}

#[derive(Serialize, Deserialize)]
struct RawRep {
    dim: usize,
    projectors: Vec<RatMatrix>,
    action: RatMatrix,
    form: RatMatrix,
}

impl Serialize for Representation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawRep {
            dim: self.dim(),
            projectors: self.projectors.clone(),
            action: self.action.clone(),
            form: self.form.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawRep::deserialize(d)?;
        if raw.action.rows() != raw.dim {
            return Err(D::Error::custom(format!("dim {} does not match the action", raw.dim)));
        }
        Representation::new(raw.projectors, raw.action, raw.form).map_err(D::Error::custom)
    }
}

/// One component, φ = T = A − Aᵀ and S = T⁻¹A.
pub fn from_seifert(s: &SeifertMatrix) -> Result<Representation, RepError> {
    if s.size() == 0 {
        return Err(RepError::Empty);
    }
    let t = s.intersection_form().to_rat();
    let action = &t.inverse()? * &s.matrix().to_rat();
    Representation::new(vec![RatMatrix::identity(s.size())], action, t)
}

/// M̂ = M⁴ graded as (x₁, x₂ | x₃, x₄), with action Ŝ and form T̂ computed from A.
pub fn hat(rep: &Representation, s: &SeifertMatrix) -> Result<Representation, RepError> {
    if *rep != from_seifert(s)? {
        return Err(RepError::Invariant("representation does not come from this Seifert matrix".into()));
    }
    let (that, shat) = build_that_shat(s)?;
    let h = hat_of_rep(rep)?;
    if h.action != shat || h.form != that.to_rat() {
        return Err(RepError::Invariant("hat built from S disagrees with T-hat^-1 A-hat".into()));
    }
    Ok(h)
}

/// The hat construction from (S, φ) alone:
/// Ŝ = [[0, S, 0, S], [0, I, I, 0], [−I, S, 0, S], [−I, I, 0, I]],
/// T̂ = [[0, φ, 0, 0], [φ, φᵀ, 0, 0], [0, 0, 0, φ], [0, 0, φ, φᵀ]].
pub fn hat_of_rep(rep: &Representation) -> Result<Representation, RepError> {
    if rep.m() != 1 {
        return Err(RepError::Components { expected: 1, got: rep.m() });
    }
    let n = rep.dim();
    let s = &rep.action;
    let f = &rep.form;
    let ft = f.transpose();
    let i = RatMatrix::identity(n);
    let mi = -&i;
    let z = RatMatrix::zeros(n, n);
    let action = grid(n, [[&z, s, &z, s], [&z, &i, &i, &z], [&mi, s, &z, s], [&mi, &i, &z, &i]]);
    let form = grid(n, [[&z, f, &z, &z], [f, &ft, &z, &z], [&z, &z, &z, f], [&z, &z, f, &ft]]);
    let half = RatMatrix::identity(2 * n);
    let p1 = half.direct_sum(&RatMatrix::zeros(2 * n, 2 * n));
    let p2 = RatMatrix::zeros(2 * n, 2 * n).direct_sum(&half);
    Representation::new(vec![p1, p2], action, form)
}

fn grid(n: usize, blocks: [[&RatMatrix; 4]; 4]) -> RatMatrix {
    let mut out = RatMatrix::zeros(4 * n, 4 * n);
    for (bi, row) in blocks.iter().enumerate() {
        for (bj, b) in row.iter().enumerate() {
            out.set_block(bi * n, bj * n, b);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharPolyReport {
    /// det(S − sI) scaled to a primitive integer polynomial.
    pub poly: Poly,
    /// None when the degree exceeds the factorization bound.
    pub irreducible: Option<bool>,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.to_string_in("s"))
    }
}

pub fn char_poly_simple(rep: &Representation) -> Result<CharPolyReport, RepError> {
    let poly = char_poly(&rep.action)?;
    let irreducible = match is_irreducible(&poly, DEFAULT_DEGREE_BOUND) {
        Ok(b) => Some(b),
        Err(MathError::DegreeBound { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(CharPolyReport { poly, irreducible })
}

/// Basis of {H : Hπᵢ = πᵢ′H, HS = S′H}, H mapping rep to rep′.
#[derive(Clone, Debug, PartialEq)]
pub struct HomSpaceBasis {
    pub basis: Vec<RatMatrix>,
}

impl HomSpaceBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combination(&self, coeffs: &[BigRational], rows: usize, cols: usize) -> RatMatrix {
        self.basis.iter().zip(coeffs).fold(RatMatrix::zeros(rows, cols), |acc, (b, c)| &acc + &b.scale(c))
    }
}

/// H intertwines the projectors and the actions.
pub fn is_hom(rep: &Representation, rep2: &Representation, h: &RatMatrix) -> bool {
    h.rows() == rep2.dim()
        && h.cols() == rep.dim()
        && rep.m() == rep2.m()
        && rep.projectors.iter().zip(&rep2.projectors).all(|(p, q)| (h * p) == (q * h))
        && (h * &rep.action) == (&rep2.action * h)
}

pub fn hom_space(rep: &Representation, rep2: &Representation) -> Result<HomSpaceBasis, RepError> {
    if rep.m() != rep2.m() {
        return Err(RepError::Components { expected: rep.m(), got: rep2.m() });
    }
    let (n, n2) = (rep.dim(), rep2.dim());
    // unknown h_{ab}, a < n2, b < n; with coordinate gradings only same-component entries survive
    let unknowns: Vec<(usize, usize)> = match (rep.coordinate_grading(), rep2.coordinate_grading()) {
        (Some(c1), Some(c2)) => (0..n2).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| c2[a] == c1[b]).collect(),
        _ => (0..n2).flat_map(|a| (0..n).map(move |b| (a, b))).collect(),
    };
    let graded = rep.coordinate_grading().is_some() && rep2.coordinate_grading().is_some();
    let index: std::collections::HashMap<(usize, usize), usize> =
        unknowns.iter().enumerate().map(|(k, &ab)| (ab, k)).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    // (H X − Y H)_{ab} = Σ_c h_{ac} X_{cb} − Σ_c Y_{ac} h_{cb}
    let mut push_system = |x: &RatMatrix, y: &RatMatrix| {
        for a in 0..n2 {
            for b in 0..n {
                let mut row = vec![BigRational::zero(); unknowns.len()];
                let mut any = false;
                for c in 0..n {
                    if let Some(&k) = index.get(&(a, c)) {
                        if !x[(c, b)].is_zero() {
                            row[k] += &x[(c, b)];
                            any = true;
                        }
                    }
                }
                for c in 0..n2 {
                    if let Some(&k) = index.get(&(c, b)) {
                        if !y[(a, c)].is_zero() {
                            row[k] -= &y[(a, c)];
                            any = true;
                        }
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    };
    if !graded {
        for (p, q) in rep.projectors.iter().zip(&rep2.projectors) {
            push_system(p, q);
        }
    }
    push_system(&rep.action, &rep2.action);
    let basis = if unknowns.is_empty() {
        vec![]
    } else if rows.is_empty() {
        (0..unknowns.len())
            .map(|k| {
                let mut h = RatMatrix::zeros(n2, n);
                h[unknowns[k]] = BigRational::one();
                h
            })
            .collect()
    } else {
        let sys = RatMatrix::from_fn(rows.len(), unknowns.len(), |i, j| rows[i][j].clone());
        sys.nullspace()
            .into_iter()
            .map(|v| {
                let mut h = RatMatrix::zeros(n2, n);
                for (k, &ab) in unknowns.iter().enumerate() {
                    h[ab] = v[k].clone();
                }
                h
            })
            .collect()
    };
    debug_assert!(basis.iter().all(|h| is_hom(rep, rep2, h)));
    Ok(HomSpaceBasis { basis })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict")]
pub enum IsoVerdict {
    Yes { witness: RatMatrix },
    No { reason: String },
    Unknown,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes { .. })
    }
}

fn seeded_coeffs(seed: u64, k: usize) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_BASE ^ seed);
    (0..k).map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-5i64..=5)))).collect()
}

/// Exhaustive grid of coefficient vectors in {−2..2}ᵏ, capped in size.
fn small_grid(k: usize) -> impl Iterator<Item = Vec<BigRational>> {
    const CAP: usize = 20_000;
    let total = if k == 0 { 0 } else { 5usize.checked_pow(k as u32).unwrap_or(usize::MAX).min(CAP) };
    (0..total).map(move |mut idx| {
        (0..k)
            .map(|_| {
                let d = (idx % 5) as i64 - 2;
                idx /= 5;
                BigRational::from_integer(BigInt::from(d))
            })
            .collect()
    })
}

pub fn is_isomorphic(rep: &Representation, rep2: &Representation) -> Result<IsoVerdict, RepError> {
    let no = |r: &str| Ok(IsoVerdict::No { reason: r.into() });
    if rep.dim() != rep2.dim() {
        return no("dimensions differ");
    }
    if rep.m() != rep2.m() {
        return no("different numbers of projectors");
    }
    if rep.projectors.iter().zip(&rep2.projectors).any(|(p, q)| p.rank() != q.rank()) {
        return no("projector ranks differ");
    }
    if char_poly(&rep.action)? != char_poly(&rep2.action)? {
        return no("characteristic polynomials differ");
    }
    let n = rep.dim();
    let id = RatMatrix::identity(n);
    if is_hom(rep, rep2, &id) {
        return Ok(IsoVerdict::Yes { witness: id });
    }
    let hom = hom_space(rep, rep2)?;
    if hom.dim() == 0 {
        return no("hom space is zero");
    }
    let k = hom.dim();
    let candidates = hom
        .basis
        .iter()
        .cloned()
        .chain((0..SAMPLED_COMBINATIONS as u64).map(|s| hom.combination(&seeded_coeffs(s, k), n, n)))
        .chain(small_grid(k).map(|c| hom.combination(&c, n, n)));
    for h in candidates {
        if h.is_invertible() {
            return Ok(IsoVerdict::Yes { witness: h });
        }
    }
    Ok(IsoVerdict::Unknown)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CyclicityFailure {
    /// Index of the standard basis vector.
    pub vector: usize,
    /// Basis (rows) of the proper invariant subspace it generates.
    pub invariant_subspace: RatMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimplicityReport {
    pub cyclic: bool,
    pub cyclicity_failures: Vec<CyclicityFailure>,
    pub commutant_dim: usize,
    pub basis_invertible: bool,
    pub sampled_invertible: bool,
    /// Minimal polynomials of the tested commutant elements are all irreducible (None: degree bound hit).
    pub minimal_polynomials_irreducible: Option<bool>,
    /// Overall verdict; None when some check could not be completed.
    pub simple: Option<bool>,
    /// m = 1 only: the characteristic-polynomial oracle's verdict and whether it agrees.
    pub oracle_irreducible: Option<bool>,
    pub oracle_agrees: Option<bool>,
    pub warnings: Vec<String>,
}

/// Span of all words in {πᵢ, S} applied to v, as echelon rows.
fn generated_subspace(rep: &Representation, v: Vec<BigRational>) -> Vec<Vec<BigRational>> {
    let gens: Vec<&RatMatrix> = rep.projectors.iter().chain(std::iter::once(&rep.action)).collect();
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut queue = vec![v];
    while let Some(mut w) = queue.pop() {
        for (b, &p) in basis.iter().zip(&pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (x, y) in w.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        // keep earlier rows reduced at the new pivot
        for b in basis.iter_mut() {
            if !b[p].is_zero() {
                let f = b[p].clone();
                for (x, y) in b.iter_mut().zip(&w) {
                    *x -= &f * y;
                }
            }
        }
        for g in &gens {
            queue.push(g.mul_vec(&w));
        }
        basis.push(w);
        pivots.push(p);
    }
    basis
}

pub fn simplicity_suite(rep: &Representation) -> Result<SimplicityReport, RepError> {
    let n = rep.dim();
    let mut cyclicity_failures = Vec::new();
    for k in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[k] = BigRational::one();
        let sub = generated_subspace(rep, e);
        if sub.len() < n {
            let rows = sub.len();
            cyclicity_failures.push(CyclicityFailure {
                vector: k,
                invariant_subspace: RatMatrix::from_fn(rows, n, |i, j| sub[i][j].clone()),
            });
        }
    }
    let cyclic = cyclicity_failures.is_empty();

    let comm = hom_space(rep, rep)?;
    let k = comm.dim();
    let basis_invertible = comm.basis.iter().all(RatMatrix::is_invertible);
    let samples: Vec<RatMatrix> =
        (0..SAMPLED_COMBINATIONS as u64).map(|s| comm.combination(&seeded_coeffs(s, k), n, n)).collect();
    let sampled_invertible = samples.iter().all(|h| h.is_zero() || h.is_invertible());

    // a division algebra has no zero divisors, so every element has an irreducible minimal polynomial
    let commutes = rep.projectors.iter().all(|p| (p * &rep.action) == (&rep.action * p));
    let mut tested: Vec<&RatMatrix> = comm.basis.iter().chain(&samples).collect();
    if commutes {
        tested.push(&rep.action);
    }
    let mut minimal_polynomials_irreducible = Some(true);
    for x in tested {
        if x.is_zero() {
            continue;
        }
        match is_irreducible(&min_poly(x)?, DEFAULT_DEGREE_BOUND) {
            Ok(true) => {}
            Ok(false) => {
                minimal_polynomials_irreducible = Some(false);
                break;
            }
            Err(MathError::DegreeBound { .. }) => minimal_polynomials_irreducible = None,
            Err(e) => return Err(e.into()),
        }
    }

    let simple = if !cyclic || !basis_invertible || !sampled_invertible || minimal_polynomials_irreducible == Some(false) {
        Some(false)
    } else {
        minimal_polynomials_irreducible
    };
    let oracle_irreducible = if rep.m() == 1 { char_poly_simple(rep)?.irreducible } else { None };
    let oracle_agrees = match (simple, oracle_irreducible) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    // the proof's side conditions p(0) ≠ 0 and p(1) ≠ 0 concern the one-component module; Ŝ is always singular
    let mut warnings = Vec::new();
    if rep.m() == 1 && rep.action.det()?.is_zero() {
        warnings.push("det S = 0".to_string());
    }
    if rep.m() == 1 && (&rep.action - &RatMatrix::identity(n)).det()?.is_zero() {
        warnings.push("det(S - I) = 0".to_string());
    }
    Ok(SimplicityReport {
        cyclic,
        cyclicity_failures,
        commutant_dim: k,
        basis_invertible,
        sampled_invertible,
        minimal_polynomials_irreducible,
        simple,
        oracle_irreducible,
        oracle_agrees,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(rows: &[Vec<i64>]) -> SeifertMatrix {
        SeifertMatrix::from_rows(rows).unwrap()
    }

    fn rat(rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows)
    }

    fn trefoil() -> SeifertMatrix {
        sm(&[vec![-1, 1], vec![0, -1]])
    }

    fn fig8() -> SeifertMatrix {
        sm(&[vec![1, 1], vec![0, -1]])
    }

    fn hopfish() -> SeifertMatrix {
        sm(&[vec![0, 1], vec![0, 0]])
    }

    #[test]
    fn from_seifert_examples() {
        let r = from_seifert(&hopfish()).unwrap();
        assert_eq!(r.action, rat(&[vec![0, 0], vec![0, 1]]));
        assert_eq!(r.form, rat(&[vec![0, 1], vec![-1, 0]]));
        assert_eq!(from_seifert(&trefoil()).unwrap().action, rat(&[vec![0, 1], vec![-1, 1]]));
        assert_eq!(from_seifert(&fig8()).unwrap().action, rat(&[vec![0, 1], vec![1, 1]]));
        assert_eq!(from_seifert(&SeifertMatrix::unknot()), Err(RepError::Empty));
    }

    #[test]
    fn hat_examples() {
        let r = from_seifert(&hopfish()).unwrap();
        let h = hat(&r, &hopfish()).unwrap();
        assert_eq!(h.dim(), 8);
        let diag: Vec<bool> = (0..8).map(|i| h.projectors[0][(i, i)].is_one()).collect();
        assert_eq!(diag, [true, true, true, true, false, false, false, false]);

        let t = from_seifert(&trefoil()).unwrap();
        let ht = hat(&t, &trefoil()).unwrap();
        ht.validate().unwrap();
        // blocks of Ŝ commute, so det(Ŝ − s) = det of the 4×4 scalar pattern = s²(s − 1)² per coordinate
        let p = Poly::from_i64(&[0, -1, 1]);
        assert_eq!(char_poly(&ht.action).unwrap(), p.pow(4));
        assert!(hat(&t, &fig8()).is_err());
    }

    #[test]
    fn char_poly_examples() {
        let c = char_poly_simple(&from_seifert(&trefoil()).unwrap()).unwrap();
        assert_eq!((c.poly.clone(), c.irreducible), (Poly::from_i64(&[1, -1, 1]), Some(true)));
        let c = char_poly_simple(&from_seifert(&fig8()).unwrap()).unwrap();
        assert_eq!((c.poly.clone(), c.irreducible), (Poly::from_i64(&[-1, -1, 1]), Some(true)));
        let c = char_poly_simple(&from_seifert(&hopfish()).unwrap()).unwrap();
        assert_eq!((c.poly.clone(), c.irreducible), (Poly::from_i64(&[0, -1, 1]), Some(false)));
    }

    #[test]
    fn hom_space_examples() {
        let t = from_seifert(&trefoil()).unwrap();
        let f = from_seifert(&fig8()).unwrap();
        assert_eq!(hom_space(&t, &t).unwrap().dim(), 2);
        assert_eq!(hom_space(&t, &f).unwrap().dim(), 0);
        let ht = hat(&t, &trefoil()).unwrap();
        assert_eq!(hom_space(&ht, &ht).unwrap().dim(), 2);
    }

    #[test]
    fn isomorphism_examples() {
        let t = from_seifert(&trefoil()).unwrap();
        let f = from_seifert(&fig8()).unwrap();
        assert_eq!(is_isomorphic(&t, &t).unwrap(), IsoVerdict::Yes { witness: RatMatrix::identity(2) });
        assert!(matches!(is_isomorphic(&t, &f).unwrap(), IsoVerdict::No { .. }));
        // congruent Seifert matrices give isomorphic modules, and so do their hats
        let q = crate::exactmath::IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        let t2 = trefoil().congruent(&q).unwrap();
        let r2 = from_seifert(&t2).unwrap();
        let IsoVerdict::Yes { witness } = is_isomorphic(&t, &r2).unwrap() else { panic!("expected isomorphic") };
        let big = witness.repeat_diagonal(4);
        let (h1, h2) = (hat(&t, &trefoil()).unwrap(), hat(&r2, &t2).unwrap());
        assert!(is_hom(&h1, &h2, &big) && big.is_invertible());
        assert!(is_isomorphic(&h1, &h2).unwrap().is_yes());
    }

    #[test]
    fn simplicity_examples() {
        let t = from_seifert(&trefoil()).unwrap();
        let r = simplicity_suite(&t).unwrap();
        assert_eq!((r.simple, r.oracle_agrees), (Some(true), Some(true)));

        let ht = hat(&t, &trefoil()).unwrap();
        let r = simplicity_suite(&ht).unwrap();
        assert!(r.cyclic && r.basis_invertible && r.sampled_invertible);
        assert_eq!(r.commutant_dim, 2);
        assert_eq!(r.simple, Some(true));

        let h = from_seifert(&hopfish()).unwrap();
        let r = simplicity_suite(&h).unwrap();
        assert!(!r.cyclic);
        let fail = &r.cyclicity_failures[0];
        assert_eq!(fail.vector, 0);
        assert_eq!(fail.invariant_subspace.rows(), 1);
        assert_eq!(r.simple, Some(false));
        assert_eq!(r.oracle_agrees, Some(true));
        assert!(r.warnings.iter().any(|w| w == "det S = 0"));
    }

    #[test]
    fn json_round_trip() {
        let t = from_seifert(&trefoil()).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with(r#"{"dim":2,"projectors":"#));
        assert_eq!(serde_json::from_str::<Representation>(&s).unwrap(), t);
        let broken = s.replace(r#""action":[["0","1"]"#, r#""action":[["1","1"]"#);
        assert!(serde_json::from_str::<Representation>(&broken).is_err());
    }
}
