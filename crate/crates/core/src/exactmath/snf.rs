use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// U·A·W = D with U, W unimodular and D in Smith normal form.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub w: IntMatrix,
}

impl Smith {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    w: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.w.iter_mut()) {
            r.swap(i, j);
        }
    }

    // row_i += k·row_j
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(src) {
                *x += k * y;
            }
        }
    }

    // col_i += k·col_j
    fn add_col(&mut self, i: usize, j: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.w] {
            for r in m.iter_mut() {
                let v = &r[j] * k;
                r[i] += v;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (r, c) = (a.rows(), a.cols());
    let mut wk = Work { a: a.to_rows(), u: IntMatrix::identity(r).to_rows(), w: IntMatrix::identity(c).to_rows() };
    let mut t = 0;
    while t < r.min(c) {
        // smallest nonzero entry in the remaining block
        let Some((pi, pj)) = (t..r)
            .flat_map(|i| (t..c).map(move |j| (i, j)))
            .filter(|&(i, j)| !wk.a[i][j].is_zero())
            .min_by_key(|&(i, j)| wk.a[i][j].abs())
        else {
            break;
        };
        wk.swap_rows(t, pi);
        wk.swap_cols(t, pj);
        loop {
            let p = wk.a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..r {
                if !wk.a[i][t].is_zero() {
                    let q = wk.a[i][t].div_floor(&p);
                    wk.add_row(i, t, &-q);
                    if !wk.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..c {
                if !wk.a[t][j].is_zero() {
                    let q = wk.a[t][j].div_floor(&p);
                    wk.add_col(j, t, &-q);
                    if !wk.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // move the smallest remainder in row/column t to the pivot and retry
                let best = (t..r)
                    .map(|i| (i, t))
                    .chain((t..c).map(|j| (t, j)))
                    .filter(|&(i, j)| !wk.a[i][j].is_zero())
                    .min_by_key(|&(i, j)| wk.a[i][j].abs())
                    .expect("pivot is nonzero");
                wk.swap_rows(t, best.0);
                wk.swap_cols(t, best.1);
                continue;
            }
            // divisibility: pivot must divide the rest of the block
            let p = wk.a[t][t].clone();
            let bad = (t + 1..r).flat_map(|i| (t + 1..c).map(move |j| (i, j))).find(|&(i, j)| !(&wk.a[i][j] % &p).is_zero());
            match bad {
                Some((i, _)) => wk.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if wk.a[t][t].is_negative() {
            wk.negate_row(t);
        }
        t += 1;
    }
    let u = IntMatrix::from_fn(r, r, |i, j| wk.u[i][j].clone());
    let w = IntMatrix::from_fn(c, c, |i, j| wk.w[i][j].clone());
    let d = IntMatrix::from_fn(r, c, |i, j| wk.a[i][j].clone());
    Smith { u, d, w }
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).invariant_factors().len()
}

/// Rows of `v` are independent and span a direct summand of Zⁿ.
pub fn is_direct_summand_basis(v: &IntMatrix) -> bool {
    let f = smith_normal_form(v).invariant_factors();
    f.len() == v.rows() && f.iter().all(One::is_one)
}

/// Basis (as rows) of the saturation (rowspace ⊗ Q) ∩ Zⁿ of a full-row-rank `v`.
pub fn saturate(v: &IntMatrix) -> Option<IntMatrix> {
    let s = smith_normal_form(v);
    let g = s.invariant_factors().len();
    if g != v.rows() {
        return None;
    }
    let winv = s.w.unimodular_inverse().ok()?;
    Some(winv.submatrix(0, 0, g, v.cols()))
}

/// A unimodular n×n matrix whose first rows are exactly the rows of `v`,
/// provided `v` is a direct-summand basis.
pub fn complete_to_unimodular(v: &IntMatrix) -> Option<IntMatrix> {
    if !is_direct_summand_basis(v) {
        return None;
    }
    let g = v.rows();
    let n = v.cols();
    let s = smith_normal_form(v);
    // U·V·W = [I 0], so the first g rows of W⁻¹ are U·V
    let winv = s.w.unimodular_inverse().ok()?;
    let uinv = s.u.unimodular_inverse().ok()?;
    let q = &uinv.direct_sum(&IntMatrix::identity(n - g)) * &winv;
    debug_assert_eq!(q.submatrix(0, 0, g, n), *v);
    Some(q)
}
