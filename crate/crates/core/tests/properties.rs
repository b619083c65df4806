//! Property tests over random Seifert matrices, braids and constraint systems.

use conclab::boundary_forms::{
    ahat_collection, bing_double, bing_to_ahat_witness, build_qhat, build_that_shat, is_metabolic_collection,
    verify_block_congruence, verify_r_identity, ComponentCongruence,
};
use conclab::diagrams::{braid_stats, sqp_expand, BraidWord};
use conclab::exactmath::{char_poly, is_irreducible, min_poly, CirclePoint, DEFAULT_DEGREE_BOUND};
use conclab::knot_invariants::{alexander, algebraically_slice, arf, lt_signature, KnotTable, SeifertMatrix, SliceVerdict};
use conclab::random::{random_seifert, random_unimodular};
use conclab::representations::{from_seifert, hat, hom_space, is_hom, is_isomorphic, IsoVerdict};
use conclab::s_calculus::{solve, LinkDecl, SConstraint, SConstraintSystem, SolveOutcome};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seifert(seed: u64, max_genus: usize) -> SeifertMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = 1 + (seed as usize % max_genus);
    random_seifert(g, 3, &mut rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn alexander_is_a_congruence_invariant(seed in any::<u64>()) {
        let s = seifert(seed, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let q = random_unimodular(s.size(), 10, &mut rng);
        let t = s.congruent(&q).unwrap();
        prop_assert_eq!(alexander(&s), alexander(&t));
        prop_assert_eq!(arf(&s).unwrap(), arf(&t).unwrap());
    }

    #[test]
    fn additivity_under_direct_sum(a in any::<u64>(), b in any::<u64>()) {
        let (s, t) = (seifert(a, 2), seifert(b, 2));
        let sum = s.direct_sum(&t);
        prop_assert_eq!(arf(&sum).unwrap(), (arf(&s).unwrap() + arf(&t).unwrap()) % 2);
        for w in [CirclePoint::MinusOne, CirclePoint::I] {
            let v = |m: &SeifertMatrix| lt_signature(m, w).unwrap().value;
            prop_assert_eq!(v(&sum), v(&s) + v(&t));
        }
        let prod = (&alexander(&s) * &alexander(&t)).normalize();
        prop_assert_eq!(alexander(&sum), prod);
    }

    #[test]
    fn bing_double_structure(seed in any::<u64>()) {
        let s = seifert(seed, 3);
        let b = bing_double(&s);
        prop_assert_eq!(b.block(0, 1), &b.block(1, 0).transpose());
        prop_assert_eq!(b.block(0, 0), b.block(1, 1));
        // B(A) is block-congruent to Â through diag(P, P)
        prop_assert!(verify_block_congruence(&b, &ahat_collection(&s), &bing_to_ahat_witness(&s)));
        prop_assert!(build_that_shat(&s).is_ok());
    }

    #[test]
    fn slice_certificates_metabolize_the_bing_double(seed in any::<u64>()) {
        // K # −K always has a metabolizer; its Q̂ must kill every block of B(A)
        let s = seifert(seed, 1);
        let sum = s.direct_sum(&s.negate());
        if let SliceVerdict::AlgebraicallySlice { certificate } = algebraically_slice(&sum, 5).unwrap() {
            let qh = build_qhat(&certificate).unwrap();
            let c = ComponentCongruence::new(vec![qh.clone(), qh]).unwrap();
            prop_assert!(is_metabolic_collection(&bing_double(&sum), &c).unwrap());
        }
    }

    #[test]
    fn r_identity_on_random_pairs(a in any::<u64>(), b in any::<u64>()) {
        prop_assert!(verify_r_identity(&seifert(a, 2), &seifert(b, 2)));
    }

    #[test]
    fn representation_invariants(seed in any::<u64>()) {
        let s = seifert(seed, 3);
        let r = from_seifert(&s).unwrap();
        r.validate().unwrap();
        hat(&r, &s).unwrap().validate().unwrap();
    }

    #[test]
    fn commutant_dimension_is_minimal_polynomial_degree(seed in any::<u64>()) {
        let s = seifert(seed, 2);
        let r = from_seifert(&s).unwrap();
        let p = char_poly(&r.action).unwrap();
        prop_assume!(is_irreducible(&p, DEFAULT_DEGREE_BOUND).unwrap());
        let deg = min_poly(&r.action).unwrap().degree().unwrap();
        prop_assert_eq!(hom_space(&r, &r).unwrap().dim(), deg);
        let h = hat(&r, &s).unwrap();
        prop_assert_eq!(hom_space(&h, &h).unwrap().dim(), deg);
    }

    #[test]
    fn isomorphism_transports_through_hat(seed in any::<u64>()) {
        let s = seifert(seed, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
        let t = s.congruent(&random_unimodular(s.size(), 8, &mut rng)).unwrap();
        let (r, r2) = (from_seifert(&s).unwrap(), from_seifert(&t).unwrap());
        let IsoVerdict::Yes { witness } = is_isomorphic(&r, &r2).unwrap() else {
            return Err(TestCaseError::fail("congruent matrices give isomorphic modules"));
        };
        let (h, h2) = (hat(&r, &s).unwrap(), hat(&r2, &t).unwrap());
        let big = witness.repeat_diagonal(4);
        prop_assert!(is_hom(&h, &h2, &big) && big.is_invertible());
    }

    #[test]
    fn braid_writhe(a in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..12),
                    b in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..12)) {
        let (x, y) = (BraidWord::new(4, a).unwrap(), BraidWord::new(4, b).unwrap());
        let w = |v: &BraidWord| braid_stats(v).writhe;
        prop_assert_eq!(w(&x.concat(&y).unwrap()), w(&x) + w(&y));
    }

    #[test]
    fn band_generators_have_writhe_one(n in 2usize..8, i in 1usize..8, j in 2usize..9) {
        prop_assume!(i < j && j <= n);
        prop_assert_eq!(braid_stats(&sqp_expand(i, j, n).unwrap()).writhe, 1);
    }
}

#[test]
fn hat_reflects_isomorphism_on_bundled_corpus() {
    let table = KnotTable::bundled();
    let mut corpus: Vec<SeifertMatrix> = table.entries().iter().filter(|e| e.seifert.size() > 0).map(|e| e.seifert.clone()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let copies: Vec<SeifertMatrix> =
        corpus.iter().map(|s| s.congruent(&random_unimodular(s.size(), 6, &mut rng)).unwrap()).collect();
    corpus.extend(copies);
    for a in &corpus {
        for b in &corpus {
            let (ra, rb) = (from_seifert(a).unwrap(), from_seifert(b).unwrap());
            let base = is_isomorphic(&ra, &rb).unwrap();
            let lifted = is_isomorphic(&hat(&ra, a).unwrap(), &hat(&rb, b).unwrap()).unwrap();
            assert!(!matches!(base, IsoVerdict::Unknown) && !matches!(lifted, IsoVerdict::Unknown));
            assert_eq!(base.is_yes(), lifted.is_yes(), "{:?} vs {:?}", a.matrix(), b.matrix());
        }
    }
}

// s-calculus: systems on at most four links, checked against exhaustive search in a box
const BOX: i64 = 10;

fn constraint(n: usize) -> impl Strategy<Value = SConstraint> {
    let name = |i: usize| format!("L{i}");
    prop_oneof![
        (0..n).prop_map(move |i| SConstraint::Parity { link: name(i) }),
        (0..n, -3i64..=3).prop_map(move |(i, value)| SConstraint::Known { link: name(i), value }),
        (0..n, 0u32..5, 1u32..4).prop_map(move |(i, crossings, circles)| SConstraint::PositiveDiagram {
            link: name(i),
            crossings,
            circles
        }),
        (0..n, 0..n, -2i64..=0).prop_map(move |(i, j, chi)| SConstraint::Cobordism { from: name(i), to: name(j), chi }),
    ]
}

fn system() -> impl Strategy<Value = SConstraintSystem> {
    (1usize..=4, prop::collection::vec(1u32..=3, 4)).prop_flat_map(|(n, comps)| {
        let links: Vec<LinkDecl> = (0..n).map(|i| LinkDecl { name: format!("L{i}"), components: comps[i] }).collect();
        (Just(links), prop::collection::vec(constraint(n), 0..7))
            .prop_map(|(links, constraints)| SConstraintSystem { links, constraints })
    })
}

fn box_solutions(sys: &SConstraintSystem) -> Vec<Vec<i64>> {
    let n = sys.links.len();
    let idx = |s: &str| s[1..].parse::<usize>().unwrap();
    let ok = |v: &[i64]| {
        sys.constraints.iter().all(|c| match c {
            SConstraint::Parity { link } => {
                let i = idx(link);
                (v[i] - sys.links[i].components as i64 + 1).rem_euclid(2) == 0
            }
            SConstraint::Known { link, value } => v[idx(link)] == *value,
            SConstraint::PositiveDiagram { link, crossings, circles } => {
                v[idx(link)] == *crossings as i64 - *circles as i64 + 1
            }
            SConstraint::Cobordism { from, to, chi } => (v[idx(from)] - v[idx(to)]).abs() <= -chi,
        })
    };
    let width = (2 * BOX + 1) as usize;
    let mut out = Vec::new();
    for code in 0..width.pow(n as u32) {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let x = (c % width) as i64 - BOX;
                c /= width;
                x
            })
            .collect();
        if ok(&v) {
            out.push(v);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn s_calculus_matches_exhaustive_search(sys in system()) {
        let sols = box_solutions(&sys);
        match solve(&sys).unwrap() {
            SolveOutcome::Inconsistent { .. } => prop_assert!(sols.is_empty()),
            SolveOutcome::Solved { domains, .. } => {
                for (i, l) in sys.links.iter().enumerate() {
                    let d = domains[&l.name];
                    // every solution lies in the reported domain
                    prop_assert!(sols.iter().all(|v| d.contains(v[i])));
                    // every reported value near the origin extends to a full solution
                    for x in -4..=4 {
                        if d.contains(x) {
                            prop_assert!(sols.iter().any(|v| v[i] == x), "{} = {} has no extension", l.name, x);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn s_calculus_is_monotone(sys in system(), extra in (1usize..=4).prop_flat_map(constraint)) {
        let n = sys.links.len();
        prop_assume!(extra_fits(&extra, n));
        let before = solve(&sys).unwrap();
        let after = solve(&sys.clone().with(extra)).unwrap();
        if let (Some(b), Some(a)) = (before.domains(), after.domains()) {
            for l in &sys.links {
                for x in -2 * BOX..=2 * BOX {
                    prop_assert!(!a[&l.name].contains(x) || b[&l.name].contains(x));
                }
            }
        } else {
            prop_assert!(before.domains().is_some() || after.domains().is_none());
        }
    }
}

fn extra_fits(c: &SConstraint, n: usize) -> bool {
    let ok = |s: &String| s[1..].parse::<usize>().unwrap() < n;
    match c {
        SConstraint::Parity { link } | SConstraint::Known { link, .. } | SConstraint::PositiveDiagram { link, .. } => ok(link),
        SConstraint::Cobordism { from, to, .. } => ok(from) && ok(to),
    }
}
