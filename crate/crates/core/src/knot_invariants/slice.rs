use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{alexander, lt_signature, KnotError, SeifertMatrix};
use crate::exactmath::{
    congruence, factor_poly, reciprocal, snf, CirclePoint, IntMatrix, LaurentPoly1, MathError, Poly, RatMatrix,
    DEFAULT_DEGREE_BOUND,
};

/// Default bound on entries of candidate metabolizer basis vectors.
pub const DEFAULT_SEARCH_BOUND: u32 = 5;

// above this many candidate vectors the genus ≥ 2 search gives up
const CANDIDATE_BUDGET: u64 = 4_000_000;
const NODE_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum FoxMilnor {
    /// Δ ≐ f(t)·f(t⁻¹).
    Satisfied { witness: LaurentPoly1 },
    Fails { unpaired: Vec<String> },
    Inconclusive { degree: usize, bound: usize },
}

impl FoxMilnor {
    pub fn holds(&self) -> Option<bool> {
        match self {
            FoxMilnor::Satisfied { .. } => Some(true),
            FoxMilnor::Fails { .. } => Some(false),
            FoxMilnor::Inconclusive { .. } => None,
        }
    }
}

/// Decides whether the irreducible factors of Δ pair off with their reciprocals.
pub fn fox_milnor(delta: &LaurentPoly1) -> FoxMilnor {
    let (_, q) = delta.to_poly_shifted();
    let (content, factors) = match factor_poly(&q, DEFAULT_DEGREE_BOUND) {
        Ok(f) => f,
        Err(MathError::DegreeBound { degree, bound }) => return FoxMilnor::Inconclusive { degree, bound },
        Err(_) => return FoxMilnor::Fails { unpaired: vec!["0".into()] },
    };
    let mut unpaired = Vec::new();
    let root = content.abs().sqrt();
    if &root * &root != content.abs() {
        unpaired.push(content.to_string());
    }
    let mut witness = Poly::constant(root);
    let mut used = vec![false; factors.len()];
    for i in 0..factors.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let (p, m) = &factors[i];
        let r = reciprocal(p);
        if r == *p {
            if m % 2 == 0 {
                witness = &witness * &p.pow(m / 2);
            } else {
                unpaired.push(p.to_string());
            }
            continue;
        }
        match (0..factors.len()).find(|&j| !used[j] && factors[j].0 == r) {
            Some(j) if factors[j].1 == *m => {
                used[j] = true;
                // keep the partner whose leading coefficient dominates its constant term
                let pick = if p.leading().abs() > p.coeff(0).abs() { p } else { &factors[j].0 };
                witness = &witness * &pick.pow(*m);
            }
            _ => unpaired.push(p.to_string()),
        }
    }
    if !unpaired.is_empty() {
        return FoxMilnor::Fails { unpaired };
    }
    let w = LaurentPoly1::from_poly(&witness);
    debug_assert!((&w * &w.mirror()).equal_up_to_unit(delta));
    FoxMilnor::Satisfied { witness: w }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "test", rename_all = "snake_case")]
pub enum Obstruction {
    /// Δ admits no f(t)f(t⁻¹) factorization.
    FoxMilnor { alexander: LaurentPoly1 },
    /// Nonzero Levine–Tristram signature at a point where Δ does not vanish.
    Signature { omega: CirclePoint, value: i64 },
    /// Genus one: the binary form xᵀAx has non-square discriminant, so it has no isotropic vector.
    Discriminant { discriminant: String },
}

impl Obstruction {
    /// Recomputes the obstruction from `s` and checks it still reports the same value.
    pub fn recheck(&self, s: &SeifertMatrix) -> bool {
        match self {
            Obstruction::FoxMilnor { alexander: d } => alexander(s) == *d && fox_milnor(d).holds() == Some(false),
            Obstruction::Signature { omega, value } => {
                lt_signature(s, *omega).is_ok_and(|sig| sig.value == *value && sig.value != 0)
            }
            Obstruction::Discriminant { discriminant } => genus_one_form(s).is_some_and(|(_, _, _, d)| {
                d.to_string() == *discriminant && (d.is_negative() || d.sqrt().pow(2) != d)
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status")]
pub enum SliceVerdict {
    /// Q unimodular with the upper-left g×g block of QAQᵀ zero.
    AlgebraicallySlice { certificate: IntMatrix },
    NotSlice { obstruction: Obstruction },
    Inconclusive { search_bound: u32 },
}

impl SliceVerdict {
    pub fn is_slice(&self) -> Option<bool> {
        match self {
            SliceVerdict::AlgebraicallySlice { .. } => Some(true),
            SliceVerdict::NotSlice { .. } => Some(false),
            SliceVerdict::Inconclusive { .. } => None,
        }
    }

    /// Re-verifies the certificate or obstruction against `s`.
    pub fn recheck(&self, s: &SeifertMatrix) -> bool {
        match self {
            SliceVerdict::AlgebraicallySlice { certificate } => is_metabolizer_certificate(s.matrix(), certificate),
            SliceVerdict::NotSlice { obstruction } => obstruction.recheck(s),
            SliceVerdict::Inconclusive { .. } => true,
        }
    }
}

/// Q is unimodular and the upper-left half-size block of QAQᵀ vanishes.
pub fn is_metabolizer_certificate(a: &IntMatrix, q: &IntMatrix) -> bool {
    let g = a.rows() / 2;
    match congruence(q, a) {
        Ok(c) => c.submatrix(0, 0, g, g).is_zero(),
        Err(_) => false,
    }
}

pub fn algebraically_slice(s: &SeifertMatrix, search_bound: u32) -> Result<SliceVerdict, KnotError> {
    let delta = alexander(s);
    if fox_milnor(&delta).holds() == Some(false) {
        return Ok(SliceVerdict::NotSlice { obstruction: Obstruction::FoxMilnor { alexander: delta } });
    }
    let checkpoints = [(CirclePoint::MinusOne, !delta.at_minus_one().is_zero()), (CirclePoint::I, {
        let (re, im) = delta.at_i();
        !(re.is_zero() && im.is_zero())
    })];
    for (omega, nonvanishing) in checkpoints {
        if nonvanishing {
            let value = lt_signature(s, omega)?.value;
            if value != 0 {
                return Ok(SliceVerdict::NotSlice { obstruction: Obstruction::Signature { omega, value } });
            }
        }
    }
    let verdict = match s.genus() {
        0 => SliceVerdict::AlgebraicallySlice { certificate: IntMatrix::empty() },
        1 => genus_one(s),
        _ => search_metabolizer(s.matrix(), search_bound)
            .map_or(SliceVerdict::Inconclusive { search_bound }, |q| SliceVerdict::AlgebraicallySlice { certificate: q }),
    };
    debug_assert!(verdict.recheck(s));
    Ok(verdict)
}

/// Coefficients (a, b + c, d) of xᵀAx for 2×2 A, with discriminant (b + c)² − 4ad.
fn genus_one_form(s: &SeifertMatrix) -> Option<(BigInt, BigInt, BigInt, BigInt)> {
    if s.size() != 2 {
        return None;
    }
    let m = s.matrix();
    let a = m[(0, 0)].clone();
    let b = &m[(0, 1)] + &m[(1, 0)];
    let d = m[(1, 1)].clone();
    let disc = &b * &b - BigInt::from(4) * &a * &d;
    Some((a, b, d, disc))
}

fn genus_one(s: &SeifertMatrix) -> SliceVerdict {
    let (a, b, _, disc) = genus_one_form(s).expect("genus one");
    let root = if disc.is_negative() { None } else { Some(disc.sqrt()).filter(|r| r * r == disc) };
    let Some(root) = root else {
        return SliceVerdict::NotSlice { obstruction: Obstruction::Discriminant { discriminant: disc.to_string() } };
    };
    // isotropic direction x/y = (−b + √D) / 2a, or (1, 0) when a = 0
    let (mut x, mut y) = if a.is_zero() { (BigInt::one(), BigInt::zero()) } else { (-&b + &root, BigInt::from(2) * &a) };
    let g = x.gcd(&y);
    x /= &g;
    y /= &g;
    if x.is_negative() || (x.is_zero() && y.is_negative()) {
        x = -x;
        y = -y;
    }
    let e = x.extended_gcd(&y);
    let (mut u, mut v) = (-e.y, e.x);
    if e.gcd.is_negative() {
        u = -u;
        v = -v;
    }
    let q = IntMatrix::from_fn(2, 2, |i, j| [[&x, &y], [&u, &v]][i][j].clone());
    SliceVerdict::AlgebraicallySlice { certificate: q }
}

/// Bounded search for a rank-g isotropic direct summand; returns a completed unimodular Q.
fn search_metabolizer(a: &IntMatrix, bound: u32) -> Option<IntMatrix> {
    let n = a.rows();
    let g = n / 2;
    let width = 2 * bound as u64 + 1;
    if width.checked_pow(n as u32).is_none_or(|c| c > CANDIDATE_BUDGET) {
        return None;
    }
    let ai: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[(i, j)].to_i64()).collect::<Option<_>>()).collect::<Option<_>>()?;
    let form = |v: &[i64], w: &[i64]| -> i128 {
        let mut acc = 0i128;
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            let row: i128 = (0..n).map(|j| ai[i][j] as i128 * w[j] as i128).sum();
            acc += v[i] as i128 * row;
        }
        acc
    };

    let b = bound as i64;
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    let mut v = vec![-b; n];
    loop {
        let first = v.iter().find(|&&x| x != 0);
        if first.is_some_and(|&f| f > 0) && v.iter().fold(0i64, |acc, &x| acc.gcd(&x)) == 1 && form(&v, &v) == 0 {
            candidates.push(v.clone());
        }
        let mut k = 0;
        while k < n && v[k] == b {
            v[k] = -b;
            k += 1;
        }
        if k == n {
            break;
        }
        v[k] += 1;
    }
    candidates.sort_by_key(|v| (v.iter().map(|x| x.abs()).max(), v.iter().map(|x| x.abs()).sum::<i64>(), v.clone()));

    let mut chosen: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    let found = extend(&candidates, &form, g, 0, &mut chosen, &mut nodes);
    if !found {
        return None;
    }
    let basis = IntMatrix::from_fn(g, n, |i, j| BigInt::from(candidates[chosen[i]][j]));
    let sat = snf::saturate(&basis)?;
    let q = snf::complete_to_unimodular(&sat)?;
    is_metabolizer_certificate(a, &q).then_some(q)
}

fn extend(
    cand: &[Vec<i64>],
    form: &impl Fn(&[i64], &[i64]) -> i128,
    g: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
) -> bool {
    if chosen.len() == g {
        return true;
    }
    for i in start..cand.len() {
        *nodes += 1;
        if *nodes > NODE_BUDGET {
            return false;
        }
        let v = &cand[i];
        if chosen.iter().any(|&j| form(v, &cand[j]) != 0 || form(&cand[j], v) != 0) {
            continue;
        }
        let rows: Vec<Vec<i64>> = chosen.iter().map(|&j| cand[j].clone()).chain([v.clone()]).collect();
        if RatMatrix::from_i64_rows(&rows).rank() != rows.len() {
            continue;
        }
        chosen.push(i);
        if extend(cand, form, g, i + 1, chosen, nodes) {
            return true;
        }
        chosen.pop();
    }
    false
}
