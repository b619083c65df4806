//! Seeded generators for test corpora and the CLI's randomized verification.

use num_bigint::BigInt;
use rand::Rng;

use crate::exactmath::IntMatrix;
use crate::knot_invariants::SeifertMatrix;

/// A unimodular matrix built from `steps` random elementary row operations and sign flips.
pub fn random_unimodular<R: Rng>(n: usize, steps: usize, rng: &mut R) -> IntMatrix {
    let mut q = IntMatrix::identity(n);
    if n == 0 {
        return q;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            if rng.gen_bool(0.2) {
                for c in 0..n {
                    q[(i, c)] = -q[(i, c)].clone();
                }
            }
            continue;
        }
        let k = BigInt::from(rng.gen_range(-2i64..=2));
        for c in 0..n {
            let v = &q[(j, c)] * &k;
            q[(i, c)] += v;
        }
    }
    q
}

/// A random Seifert matrix of genus g: a symmetric part with entries in [−bound, bound]
/// plus the upper half of the standard symplectic form, then a random unimodular change of basis.
pub fn random_seifert<R: Rng>(g: usize, bound: i64, rng: &mut R) -> SeifertMatrix {
    let n = 2 * g;
    let mut a = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = BigInt::from(rng.gen_range(-bound..=bound));
            a[(i, j)] = v.clone();
            a[(j, i)] = v;
        }
    }
    for k in 0..g {
        a[(2 * k, 2 * k + 1)] += 1;
    }
    let q = random_unimodular(n, 2 * n, rng);
    let s = SeifertMatrix::new(a).expect("skew part is the standard symplectic form");
    s.congruent(&q).expect("q is unimodular")
}
