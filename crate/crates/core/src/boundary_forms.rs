//! Boundary-pair matrix collections, the Bing-double map on Seifert matrices and
//! the reduced matrices Â, T̂, Ŝ with their exact identities.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exactmath::{IntMatrix, MathError, RatMatrix};
use crate::knot_invariants::SeifertMatrix;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundaryError {
    #[error("block ({0},{1}) has shape {2}x{3}, expected {4}x{5}")]
    BlockShape(usize, usize, usize, usize, usize, usize),
    #[error("expected {expected} components, got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("block ({0},{1}) is not the transpose of block ({1},{0})")]
    NotTransposeSymmetric(usize, usize),
    #[error("A_{0}{0} - A_{0}{0}^T is not unimodular")]
    NotUnimodular(usize),
    #[error("component {0} has odd size {1}")]
    OddSize(usize, usize),
    #[error("congruence matrix {0} is not unimodular or has the wrong size")]
    BadCongruence(usize),
    #[error("internal identity failed: {0}")]
    Identity(String),
    #[error(transparent)]
    Math(#[from] MathError),
}

/// An m×m grid of integer blocks, block (i,j) of size nᵢ×nⱼ, with Aᵢⱼ = Aⱼᵢᵀ off the
/// diagonal and Aᵢᵢ − Aᵢᵢᵀ unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPairMatrix {
    sizes: Vec<usize>,
    blocks: Vec<Vec<IntMatrix>>,
}

impl BoundaryPairMatrix {
    pub fn new(blocks: Vec<Vec<IntMatrix>>) -> Result<Self, BoundaryError> {
        let m = blocks.len();
        let sizes: Vec<usize> = (0..m).map(|i| blocks[i].get(i).map_or(0, IntMatrix::rows)).collect();
        for (i, row) in blocks.iter().enumerate() {
            if row.len() != m {
                return Err(BoundaryError::ComponentCount { expected: m, got: row.len() });
            }
            for (j, b) in row.iter().enumerate() {
                if (b.rows(), b.cols()) != (sizes[i], sizes[j]) {
                    return Err(BoundaryError::BlockShape(i, j, b.rows(), b.cols(), sizes[i], sizes[j]));
                }
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if blocks[i][j] != blocks[j][i].transpose() {
                    return Err(BoundaryError::NotTransposeSymmetric(i, j));
                }
            }
            let d = &blocks[i][i];
            if !(d - &d.transpose()).is_unimodular() {
                return Err(BoundaryError::NotUnimodular(i));
            }
        }
        Ok(Self { sizes, blocks })
    }

    /// The collection with m components of size 0.
    pub fn empty(m: usize) -> Self {
        Self { sizes: vec![0; m], blocks: vec![vec![IntMatrix::empty(); m]; m] }
    }

    pub fn m(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn block(&self, i: usize, j: usize) -> &IntMatrix {
        &self.blocks[i][j]
    }

    pub fn blocks(&self) -> &[Vec<IntMatrix>] {
        &self.blocks
    }

    pub fn negate(&self) -> Self {
        Self { sizes: self.sizes.clone(), blocks: self.blocks.iter().map(|r| r.iter().map(|b| -b).collect()).collect() }
    }

    /// The blocks assembled into one (Σnᵢ)-square matrix.
    pub fn to_full(&self) -> IntMatrix {
        IntMatrix::from_blocks(&self.blocks).expect("block shapes are consistent")
    }

    /// Blockwise Aᵢⱼ ↦ QᵢAᵢⱼQⱼᵀ.
    pub fn apply(&self, c: &ComponentCongruence) -> Result<Self, BoundaryError> {
        c.check_against(self)?;
        let blocks = (0..self.m())
            .map(|i| (0..self.m()).map(|j| &(&c.matrices[i] * &self.blocks[i][j]) * &c.matrices[j].transpose()).collect())
            .collect();
        Ok(Self { sizes: self.sizes.clone(), blocks })
    }
}

pub fn block_sum(x: &BoundaryPairMatrix, y: &BoundaryPairMatrix) -> Result<BoundaryPairMatrix, BoundaryError> {
    if x.m() != y.m() {
        return Err(BoundaryError::ComponentCount { expected: x.m(), got: y.m() });
    }
    let m = x.m();
    let blocks = (0..m).map(|i| (0..m).map(|j| x.blocks[i][j].direct_sum(&y.blocks[i][j])).collect()).collect();
    let sizes = x.sizes.iter().zip(&y.sizes).map(|(a, b)| a + b).collect();
    Ok(BoundaryPairMatrix { sizes, blocks })
}

#[derive(Serialize, Deserialize)]
struct RawCollection {
    m: usize,
    sizes: Vec<usize>,
    blocks: Vec<Vec<IntMatrix>>,
}

impl Serialize for BoundaryPairMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawCollection { m: self.m(), sizes: self.sizes.clone(), blocks: self.blocks.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundaryPairMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawCollection::deserialize(d)?;
        if raw.blocks.len() != raw.m || raw.sizes.len() != raw.m {
            return Err(D::Error::custom("m does not match sizes/blocks"));
        }
        // 0×0 blocks come back from JSON as [] with no column count; rebuild them from sizes
        let blocks = raw
            .blocks
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(j, b)| {
                        if b.rows() == 0 && raw.sizes.get(i) == Some(&0) {
                            IntMatrix::zeros(0, raw.sizes.get(j).copied().unwrap_or(0))
                        } else {
                            b
                        }
                    })
                    .collect()
            })
            .collect();
        let x = BoundaryPairMatrix::new(blocks).map_err(D::Error::custom)?;
        if x.sizes != raw.sizes {
            return Err(D::Error::custom("sizes do not match the diagonal blocks"));
        }
        Ok(x)
    }
}

/// Per-component unimodular change of basis (Q₁, …, Q_m).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename = "component_congruence")]
pub struct ComponentCongruence {
    pub matrices: Vec<IntMatrix>,
}

impl ComponentCongruence {
    pub fn new(matrices: Vec<IntMatrix>) -> Result<Self, BoundaryError> {
        for (i, q) in matrices.iter().enumerate() {
            if !q.is_unimodular() {
                return Err(BoundaryError::BadCongruence(i));
            }
        }
        Ok(Self { matrices })
    }

    pub fn identity(sizes: &[usize]) -> Self {
        Self { matrices: sizes.iter().map(|&n| IntMatrix::identity(n)).collect() }
    }

    fn check_against(&self, x: &BoundaryPairMatrix) -> Result<(), BoundaryError> {
        if self.matrices.len() != x.m() {
            return Err(BoundaryError::ComponentCount { expected: x.m(), got: self.matrices.len() });
        }
        for (i, q) in self.matrices.iter().enumerate() {
            if q.rows() != x.sizes[i] || !q.is_unimodular() {
                return Err(BoundaryError::BadCongruence(i));
            }
        }
        Ok(())
    }
}

/// True iff every QᵢAᵢⱼQⱼᵀ has a zero (nᵢ/2)×(nⱼ/2) upper-left quadrant.
pub fn is_metabolic_collection(x: &BoundaryPairMatrix, c: &ComponentCongruence) -> Result<bool, BoundaryError> {
    for (i, &n) in x.sizes.iter().enumerate() {
        if n % 2 != 0 {
            return Err(BoundaryError::OddSize(i, n));
        }
    }
    let y = x.apply(c)?;
    Ok((0..x.m()).all(|i| (0..x.m()).all(|j| y.blocks[i][j].submatrix(0, 0, x.sizes[i] / 2, x.sizes[j] / 2).is_zero())))
}

fn two_by_two(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> IntMatrix {
    IntMatrix::from_blocks(&[vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).expect("equal block sizes")
}

/// B(A): A₁₁ = A₂₂ = [[A, A], [Aᵀ, Aᵀ]], A₁₂ = A₂₁ᵀ = [[A, A], [Aᵀ, A]].
pub fn bing_double(s: &SeifertMatrix) -> BoundaryPairMatrix {
    let a = s.matrix();
    let at = a.transpose();
    let diag = two_by_two(a, a, &at, &at);
    let off = two_by_two(a, a, &at, a);
    let n = diag.rows();
    BoundaryPairMatrix { sizes: vec![n, n], blocks: vec![vec![diag.clone(), off.clone()], vec![off.transpose(), diag]] }
}

/// Q̂ = P·diag(Q, Q) where P lists the g-blocks of coordinates in the order 1, 3, 2, 4.
pub fn build_qhat(q: &IntMatrix) -> Result<IntMatrix, BoundaryError> {
    if !q.is_square() || !q.rows().is_multiple_of(2) {
        return Err(BoundaryError::OddSize(0, q.rows()));
    }
    if !q.is_unimodular() {
        return Err(MathError::NotUnimodular.into());
    }
    let g = q.rows() / 2;
    let p = block_permutation(&[g, g, g, g], &[0, 2, 1, 3]);
    Ok(&p * &q.direct_sum(q))
}

/// Permutation matrix whose block row k is the identity on source block `order[k]`.
fn block_permutation(sizes: &[usize], order: &[usize]) -> IntMatrix {
    let offsets: Vec<usize> = sizes.iter().scan(0, |acc, &s| Some(std::mem::replace(acc, *acc + s))).collect();
    let n: usize = sizes.iter().sum();
    let mut p = IntMatrix::zeros(n, n);
    let mut row = 0;
    for &k in order {
        for t in 0..sizes[k] {
            p[(row, offsets[k] + t)] = BigInt::one();
            row += 1;
        }
    }
    p
}

/// R for sizes n = 2g, n′ = 2g′: block rows I_n on blocks 1 and 3, I_{n′} on blocks 2 and 4
/// of the coordinates (x, x′, y, y′) of a B(A ⊕ A′) component.
pub fn r_matrix(n: usize, n_prime: usize) -> IntMatrix {
    block_permutation(&[n, n_prime, n, n_prime], &[0, 2, 1, 3])
}

/// Checks diag(R, R)·B(A ⊕ A′)·diag(Rᵀ, Rᵀ) = B(A) ⊕ B(A′) blockwise.
pub fn verify_r_identity(a: &SeifertMatrix, a_prime: &SeifertMatrix) -> bool {
    let r = r_matrix(a.size(), a_prime.size());
    let c = ComponentCongruence { matrices: vec![r.clone(), r] };
    let lhs = bing_double(&a.direct_sum(a_prime)).apply(&c).expect("R is a permutation");
    let rhs = block_sum(&bing_double(a), &bing_double(a_prime)).expect("both have two components");
    lhs == rhs
}

fn four_by_four(rows: [[&IntMatrix; 4]; 4]) -> IntMatrix {
    let blocks: Vec<Vec<IntMatrix>> = rows.iter().map(|r| r.iter().map(|&b| b.clone()).collect()).collect();
    IntMatrix::from_blocks(&blocks).expect("equal block sizes")
}

/// Â = [[0, T, T, 0], [0, Aᵀ, Tᵀ, A], [Tᵀ, T, 0, T], [0, Aᵀ, 0, Aᵀ]] with T = A − Aᵀ.
pub fn build_ahat(s: &SeifertMatrix) -> IntMatrix {
    let a = s.matrix();
    let at = a.transpose();
    let t = s.intersection_form();
    let tt = t.transpose();
    let z = IntMatrix::zeros(a.rows(), a.rows());
    four_by_four([[&z, &t, &t, &z], [&z, &at, &tt, a], [&tt, &t, &z, &t], [&z, &at, &z, &at]])
}

/// Â viewed as a two-component collection with components of size 4g.
pub fn ahat_collection(s: &SeifertMatrix) -> BoundaryPairMatrix {
    let full = build_ahat(s);
    let h = 2 * s.size();
    let blocks = (0..2).map(|i| (0..2).map(|j| full.submatrix(i * h, j * h, h, h)).collect()).collect();
    BoundaryPairMatrix { sizes: vec![h, h], blocks }
}

/// T̂ = Â − Âᵀ and Ŝ = T̂⁻¹Â, with Ŝ checked against
/// [[0, S, 0, S], [0, I, I, 0], [−I, S, 0, S], [−I, I, 0, I]] for S = T⁻¹A.
pub fn build_that_shat(s: &SeifertMatrix) -> Result<(IntMatrix, RatMatrix), BoundaryError> {
    let ahat = build_ahat(s);
    let that = &ahat - &ahat.transpose();
    if !that.is_unimodular() {
        return Err(BoundaryError::Identity("T-hat is not unimodular".into()));
    }
    let shat = &that.to_rat().inverse()? * &ahat.to_rat();
    let sm = seifert_action(s)?;
    let n = s.size();
    let i = RatMatrix::identity(n);
    let mi = -&i;
    let z = RatMatrix::zeros(n, n);
    let pattern = [[&z, &sm, &z, &sm], [&z, &i, &i, &z], [&mi, &sm, &z, &sm], [&mi, &i, &z, &i]];
    let mut expected = RatMatrix::zeros(4 * n, 4 * n);
    for (bi, row) in pattern.iter().enumerate() {
        for (bj, b) in row.iter().enumerate() {
            expected.set_block(bi * n, bj * n, b);
        }
    }
    if shat != expected {
        return Err(BoundaryError::Identity("S-hat does not match its block pattern".into()));
    }
    Ok((that, shat))
}

/// S = T⁻¹A with T = A − Aᵀ.
pub fn seifert_action(s: &SeifertMatrix) -> Result<RatMatrix, BoundaryError> {
    Ok(&s.intersection_form().to_rat().inverse()? * &s.matrix().to_rat())
}

/// Checks Cᵢ·Xᵢⱼ·Cⱼᵀ = Yᵢⱼ for every block.
pub fn verify_block_congruence(x: &BoundaryPairMatrix, y: &BoundaryPairMatrix, c: &ComponentCongruence) -> bool {
    x.sizes == y.sizes && x.apply(c).is_ok_and(|z| z == *y)
}

/// The block-congruence witness diag(P, P) with P = [[I, −I], [0, I]] (blocks of size 2g)
/// carrying B(A) to Â.
pub fn bing_to_ahat_witness(s: &SeifertMatrix) -> ComponentCongruence {
    let n = s.size();
    let i = IntMatrix::identity(n);
    let p = two_by_two(&i, &-&i, &IntMatrix::zeros(n, n), &i);
    ComponentCongruence { matrices: vec![p.clone(), p] }
}

/// Searches block-scalar congruences Qᵢ = pᵢ ⊗ I (pᵢ ∈ GL₂(Z), entries ≤ `bound`) with
/// Qᵢ Xᵢⱼ Qⱼᵀ = Yᵢⱼ. Every component must have even size.
pub fn search_block_congruence(
    x: &BoundaryPairMatrix,
    y: &BoundaryPairMatrix,
    bound: i64,
) -> Option<ComponentCongruence> {
    if x.sizes != y.sizes || x.sizes.iter().any(|n| n % 2 != 0) {
        return None;
    }
    let mut small: Vec<[i64; 4]> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    if (a * d - b * c).abs() == 1 {
                        small.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let lift = |p: &[i64; 4], n: usize| {
        let h = n / 2;
        let e = |k: i64| IntMatrix::identity(h).scale(&BigInt::from(k));
        two_by_two(&e(p[0]), &e(p[1]), &e(p[2]), &e(p[3]))
    };
    // per-component candidates from the diagonal blocks, then pairwise consistency
    let per: Vec<Vec<IntMatrix>> = (0..x.m())
        .map(|i| {
            small
                .iter()
                .map(|p| lift(p, x.sizes[i]))
                .filter(|q| &(q * &x.blocks[i][i]) * &q.transpose() == y.blocks[i][i])
                .collect()
        })
        .collect();
    let mut chosen: Vec<IntMatrix> = Vec::new();
    fn go(
        x: &BoundaryPairMatrix,
        y: &BoundaryPairMatrix,
        per: &[Vec<IntMatrix>],
        chosen: &mut Vec<IntMatrix>,
    ) -> bool {
        let i = chosen.len();
        if i == per.len() {
            return true;
        }
        for q in &per[i] {
            let ok = (0..i).all(|j| &(&chosen[j] * &x.blocks[j][i]) * &q.transpose() == y.blocks[j][i]);
            if ok {
                chosen.push(q.clone());
                if go(x, y, per, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(x, y, &per, &mut chosen).then_some(ComponentCongruence { matrices: chosen })
}

// the metabolizer search enumerates (2·bound + 1)^n vectors per component
const CANDIDATE_BUDGET: u64 = 2_000_000;
const NODE_BUDGET: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CollectionSearch {
    Metabolic { certificate: ComponentCongruence },
    Inconclusive { search_bound: u32 },
}

/// Bounded search for per-component direct summands of half rank on which every block vanishes.
pub fn find_collection_metabolizer(x: &BoundaryPairMatrix, bound: u32) -> Result<CollectionSearch, BoundaryError> {
    use num_traits::ToPrimitive;
    for (i, &n) in x.sizes.iter().enumerate() {
        if n % 2 != 0 {
            return Err(BoundaryError::OddSize(i, n));
        }
    }
    let inconclusive = CollectionSearch::Inconclusive { search_bound: bound };
    let width = 2 * bound as u64 + 1;
    if x.sizes.iter().any(|&n| width.checked_pow(n as u32).is_none_or(|c| c > CANDIDATE_BUDGET)) {
        return Ok(inconclusive);
    }
    let m = x.m();
    let Some(blocks) = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let b = &x.blocks[i][j];
                    (0..b.rows()).map(|r| (0..b.cols()).map(|c| b[(r, c)].to_i64()).collect::<Option<Vec<_>>>()).collect()
                })
                .collect::<Option<Vec<Vec<Vec<i64>>>>>()
        })
        .collect::<Option<Vec<_>>>()
    else {
        return Ok(inconclusive);
    };
    let pair = |i: usize, j: usize, v: &[i64], w: &[i64]| -> i128 {
        let b = &blocks[i][j];
        let mut acc = 0i128;
        for (r, &vr) in v.iter().enumerate() {
            if vr != 0 {
                acc += vr as i128 * b[r].iter().zip(w).map(|(&e, &wc)| e as i128 * wc as i128).sum::<i128>();
            }
        }
        acc
    };
    let b = bound as i64;
    let cands: Vec<Vec<Vec<i64>>> = (0..m)
        .map(|i| {
            let n = x.sizes[i];
            let mut out = Vec::new();
            let mut v = vec![-b; n];
            if n == 0 {
                return out;
            }
            loop {
                let first = v.iter().find(|&&c| c != 0);
                if first.is_some_and(|&f| f > 0)
                    && v.iter().fold(0i64, |acc, &c| num_integer::Integer::gcd(&acc, &c)) == 1
                    && pair(i, i, &v, &v) == 0
                {
                    out.push(v.clone());
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
            out.sort_by_key(|v| (v.iter().map(|c| c.abs()).max(), v.iter().map(|c| c.abs()).sum::<i64>(), v.clone()));
            out
        })
        .collect();

    let need: Vec<usize> = x.sizes.iter().map(|n| n / 2).collect();
    let lists: Vec<Vec<usize>> = cands.iter().map(|c| (0..c.len()).collect()).collect();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut nodes = 0u64;
    let ctx = Search { cands: &cands, pair: &pair };
    if !ctx.extend(&need, &lists, &mut chosen, &mut nodes) {
        return Ok(inconclusive);
    }
    let mut matrices = Vec::with_capacity(m);
    for i in 0..m {
        let n = x.sizes[i];
        if n == 0 {
            matrices.push(IntMatrix::empty());
            continue;
        }
        let rows: Vec<&Vec<i64>> = chosen.iter().filter(|c| c.0 == i).map(|c| &cands[i][c.1]).collect();
        let basis = IntMatrix::from_fn(rows.len(), n, |r, c| BigInt::from(rows[r][c]));
        let Some(q) = crate::exactmath::snf::saturate(&basis).and_then(|s| crate::exactmath::snf::complete_to_unimodular(&s))
        else {
            return Ok(inconclusive);
        };
        matrices.push(q);
    }
    let certificate = ComponentCongruence { matrices };
    if !is_metabolic_collection(x, &certificate)? {
        return Err(BoundaryError::Identity("metabolizer certificate failed to verify".into()));
    }
    Ok(CollectionSearch::Metabolic { certificate })
}

struct Search<'a, F: Fn(usize, usize, &[i64], &[i64]) -> i128> {
    cands: &'a [Vec<Vec<i64>>],
    pair: &'a F,
}

impl<F: Fn(usize, usize, &[i64], &[i64]) -> i128> Search<'_, F> {
    // `lists[c]` holds the candidates of component c still orthogonal to everything chosen
    fn extend(&self, need: &[usize], lists: &[Vec<usize>], chosen: &mut Vec<(usize, usize)>, nodes: &mut u64) -> bool {
        // fill the most constrained component first
        let Some(comp) = (0..need.len()).filter(|&c| need[c] > 0).min_by_key(|&c| lists[c].len()) else {
            return true;
        };
        if (0..need.len()).any(|c| lists[c].len() < need[c]) {
            return false;
        }
        for (pos, &k) in lists[comp].iter().enumerate() {
            *nodes += 1;
            if *nodes > NODE_BUDGET {
                return false;
            }
            let v = &self.cands[comp][k];
            let same: Vec<Vec<i64>> =
                chosen.iter().filter(|c| c.0 == comp).map(|c| self.cands[comp][c.1].clone()).chain([v.clone()]).collect();
            if RatMatrix::from_i64_rows(&same).rank() != same.len() {
                continue;
            }
            let next: Vec<Vec<usize>> = (0..need.len())
                .map(|c| {
                    // later picks in this component come after position `pos`
                    let tail = if c == comp { &lists[c][pos + 1..] } else { &lists[c][..] };
                    tail.iter()
                        .copied()
                        .filter(|&t| {
                            let w = &self.cands[c][t];
                            (self.pair)(comp, c, v, w) == 0 && (self.pair)(c, comp, w, v) == 0
                        })
                        .collect()
                })
                .collect();
            let mut need2 = need.to_vec();
            need2[comp] -= 1;
            chosen.push((comp, k));
            if self.extend(&need2, &next, chosen, nodes) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// X ~ Y in the boundary-pair group when X ⊕ (−Y) admits a metabolizer; never reports "not equivalent".
///
/// When Y = C·X·Cᵀ componentwise (C the identity, or found by the block-scalar search) the
/// graph rows [Cᵢ | I] span a metabolizer directly; otherwise the bounded search runs.
pub fn equivalent_in_g(
    x: &BoundaryPairMatrix,
    y: &BoundaryPairMatrix,
    bound: u32,
) -> Result<CollectionSearch, BoundaryError> {
    let sum = block_sum(x, &y.negate())?;
    if x.sizes == y.sizes {
        let direct = if x == y { Some(ComponentCongruence::identity(&x.sizes)) } else { None };
        if let Some(c) = direct.or_else(|| search_block_congruence(x, y, 1)) {
            let matrices = c
                .matrices
                .iter()
                .map(|q| {
                    let n = q.rows();
                    let mut g = IntMatrix::zeros(n, 2 * n);
                    g.set_block(0, 0, q);
                    g.set_block(0, n, &IntMatrix::identity(n));
                    crate::exactmath::snf::complete_to_unimodular(&g).expect("graph rows span a summand")
                })
                .collect();
            let certificate = ComponentCongruence { matrices };
            if is_metabolic_collection(&sum, &certificate)? {
                return Ok(CollectionSearch::Metabolic { certificate });
            }
        }
    }
    find_collection_metabolizer(&sum, bound)
}
