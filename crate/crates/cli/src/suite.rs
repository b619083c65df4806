//! The `verify-paper` suite: every exact identity the toolkit reproduces, each reported pass/fail.

use conclab::boundary_forms::{
    ahat_collection, bing_double, bing_to_ahat_witness, build_qhat, build_that_shat, is_metabolic_collection,
    verify_block_congruence, verify_r_identity, ComponentCongruence,
};
use conclab::ccomplex::{bing_alexander_module, multivar_signature, murasugi_arf, AlexanderModule, CComplexData};
use conclab::diagrams::{parse_braid, rasmussen_positive, seifert_matrix_from_braid, tb_grid, GridDiagram};
use conclab::exactmath::{CirclePoint, IntMatrix, LaurentPoly1};
use conclab::knot_invariants::{
    alexander, algebraically_slice, arf, fox_milnor, lt_signature, signature_integral, KnotTable, SeifertMatrix,
    SliceVerdict,
};
use conclab::random::{random_seifert, random_unimodular};
use conclab::representations::{from_seifert, hat, hom_space, is_hom, is_isomorphic, simplicity_suite, IsoVerdict};
use conclab::s_calculus::{scenario_whitehead, solve, LinkDecl, SConstraint, SConstraintSystem, ScenarioReport};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{to_value, Report};

pub const TREFOIL_GRID: &str = "5; X=[1,2,3,4,5]; O=[3,4,5,1,2]";

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Counterexample or explanation when the check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sm(rows: &[Vec<i64>]) -> SeifertMatrix {
    SeifertMatrix::from_rows(rows).expect("fixed matrix")
}

fn table_knots(t: &KnotTable) -> Vec<SeifertMatrix> {
    t.entries().iter().filter(|e| e.seifert.size() > 0).map(|e| e.seifert.clone()).collect()
}

fn get(t: &KnotTable, name: &str) -> Result<SeifertMatrix, String> {
    t.get(name).map(|e| e.seifert.clone()).ok_or_else(|| format!("table has no {name}"))
}

pub fn figure_eight_pipeline(t: &KnotTable) -> Outcome {
    let s = get(t, "figure8")?;
    let d = alexander(&s);
    ensure(d == LaurentPoly1::from_i64(0, &[1, -3, 1]), || format!("Alexander polynomial {d}"))?;
    ensure(fox_milnor(&d).holds() == Some(false), || "Fox-Milnor holds".into())?;
    let v = algebraically_slice(&s, 5).map_err(|e| e.to_string())?;
    ensure(matches!(v, SliceVerdict::NotSlice { .. }) && v.recheck(&s), || format!("verdict {v:?}"))
}

pub fn trefoil_integral(t: &KnotTable) -> Outcome {
    let i = signature_integral(&get(t, "trefoil")?, 4096).map_err(|e| e.to_string())?;
    ensure(i.rational == Some(Ratio::new(-4, 3)) && i.error_bound <= 0.01 && (i.estimate + 4.0 / 3.0).abs() <= i.error_bound, || {
        format!("estimate {} error {} rational {:?}", i.estimate, i.error_bound, i.rational)
    })
}

pub fn shat_pattern(corpus: &[SeifertMatrix]) -> Outcome {
    for s in corpus {
        let (that, _) = build_that_shat(s).map_err(|e| format!("{:?}: {e}", s.matrix()))?;
        let n = s.size();
        let t = s.intersection_form();
        let quad = IntMatrix::from_blocks(&[vec![IntMatrix::zeros(n, n), t.clone()], vec![t.clone(), t.transpose()]])
            .map_err(|e| e.to_string())?;
        ensure(that.submatrix(0, 0, 2 * n, 2 * n) == quad, || format!("T-hat quadrant for {:?}", s.matrix()))?;
        ensure(
            verify_block_congruence(&bing_double(s), &ahat_collection(s), &bing_to_ahat_witness(s)),
            || format!("B(A) not carried to A-hat for {:?}", s.matrix()),
        )?;
    }
    Ok(())
}

pub fn qhat_metabolizes(t: &KnotTable) -> Outcome {
    for s in [sm(&[vec![0, 1], vec![0, 0]]), get(t, "stevedore")?] {
        let SliceVerdict::AlgebraicallySlice { certificate } = algebraically_slice(&s, 5).map_err(|e| e.to_string())? else {
            return Err(format!("no certificate for {:?}", s.matrix()));
        };
        let qh = build_qhat(&certificate).map_err(|e| e.to_string())?;
        let c = ComponentCongruence::new(vec![qh.clone(), qh]).map_err(|e| e.to_string())?;
        let ok = is_metabolic_collection(&bing_double(&s), &c).map_err(|e| e.to_string())?;
        ensure(ok, || format!("Q-hat from {certificate:?} does not metabolize B({:?})", s.matrix()))?;
    }
    Ok(())
}

pub fn r_identity(corpus: &[SeifertMatrix]) -> Outcome {
    for a in corpus {
        for b in corpus {
            ensure(verify_r_identity(a, b), || format!("R identity fails for {:?} and {:?}", a.matrix(), b.matrix()))?;
        }
    }
    Ok(())
}

pub fn hermitian_identity(corpus: &[SeifertMatrix]) -> Outcome {
    for s in corpus {
        let r = from_seifert(s).map_err(|e| e.to_string())?;
        r.validate().map_err(|e| format!("{:?}: {e}", s.matrix()))?;
        hat(&r, s).map_err(|e| e.to_string())?.validate().map_err(|e| format!("hat of {:?}: {e}", s.matrix()))?;
    }
    Ok(())
}

pub fn endomorphism_dimensions(t: &KnotTable) -> Outcome {
    for name in ["trefoil", "figure8"] {
        let s = get(t, name)?;
        let r = from_seifert(&s).map_err(|e| e.to_string())?;
        let h = hat(&r, &s).map_err(|e| e.to_string())?;
        let d1 = hom_space(&r, &r).map_err(|e| e.to_string())?.dim();
        let d2 = hom_space(&h, &h).map_err(|e| e.to_string())?.dim();
        ensure(d1 == 2 && d2 == 2, || format!("{name}: dims {d1} and {d2}"))?;
    }
    Ok(())
}

pub fn simplicity_transport(t: &KnotTable) -> Outcome {
    for name in ["trefoil", "figure8"] {
        let s = get(t, name)?;
        let h = hat(&from_seifert(&s).map_err(|e| e.to_string())?, &s).map_err(|e| e.to_string())?;
        let rep = simplicity_suite(&h).map_err(|e| e.to_string())?;
        ensure(rep.simple == Some(true) && rep.cyclic && rep.sampled_invertible, || format!("hat({name}): {rep:?}"))?;
    }
    let bad = from_seifert(&sm(&[vec![0, 1], vec![0, 0]])).map_err(|e| e.to_string())?;
    let rep = simplicity_suite(&bad).map_err(|e| e.to_string())?;
    ensure(!rep.cyclic && rep.simple == Some(false), || "invariant subspace of [[0,1],[0,0]] missed".into())
}

pub fn isomorphism_transport(corpus: &[SeifertMatrix], seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in corpus {
        let t = s.congruent(&random_unimodular(s.size(), 6, &mut rng)).map_err(|e| e.to_string())?;
        let (r, r2) = (from_seifert(s).map_err(|e| e.to_string())?, from_seifert(&t).map_err(|e| e.to_string())?);
        let IsoVerdict::Yes { witness } = is_isomorphic(&r, &r2).map_err(|e| e.to_string())? else {
            return Err(format!("no isomorphism found for {:?}", s.matrix()));
        };
        let (h, h2) = (hat(&r, s).map_err(|e| e.to_string())?, hat(&r2, &t).map_err(|e| e.to_string())?);
        let big = witness.repeat_diagonal(4);
        ensure(is_hom(&h, &h2, &big) && big.is_invertible(), || format!("4-fold witness fails for {:?}", s.matrix()))?;
    }
    Ok(())
}

pub fn s_calculus_anchors() -> Outcome {
    let link = |n: &str, c| LinkDecl { name: n.into(), components: c };
    let cob = |a: &str, b: &str, chi| SConstraint::Cobordism { from: a.into(), to: b.into(), chi };
    let bing_sys = SConstraintSystem {
        links: vec![link("Hopf+", 2), link("Hopf-", 2), link("B", 2), link("Wh", 1)],
        constraints: vec![
            SConstraint::PositiveDiagram { link: "Hopf+".into(), crossings: 2, circles: 2 },
            cob("B", "Hopf+", -2),
            SConstraint::Known { link: "Hopf-".into(), value: -1 },
            cob("Hopf-", "B", -2),
            SConstraint::Parity { link: "B".into() },
        ],
    };
    let values = |sys: &SConstraintSystem, l: &str| {
        solve(sys).ok().and_then(|o| o.domains().and_then(|d| d[l].values()))
    };
    ensure(values(&bing_sys, "B") == Some(vec![-1, 1]), || "s(B) is not {-1, 1}".into())?;
    let prop = bing_sys
        .clone()
        .with(SConstraint::Known { link: "Wh".into(), value: 2 })
        .with(cob("B", "Wh", -1));
    ensure(values(&prop, "B") == Some(vec![1]), || "s(B) is not {1} given s(Wh) = 2".into())?;
    let unlink = SConstraintSystem {
        links: vec![link("U2", 2)],
        constraints: vec![SConstraint::PositiveDiagram { link: "U2".into(), crossings: 0, circles: 2 }],
    };
    ensure(values(&unlink, "U2") == Some(vec![-1]), || "2-component unlink is not -1".into())?;
    match scenario_whitehead(&[]).map_err(|e| e.to_string())? {
        ScenarioReport::Pairs { pairs, .. } => {
            ensure(pairs == vec![(-1, 0), (1, 0), (1, 2)], || format!("scenario pairs {pairs:?}"))
        }
        ScenarioReport::Inconsistent { .. } => Err("scenario inconsistent".into()),
    }
}

pub fn ccomplex_anchors() -> Outcome {
    let pts: Vec<CirclePoint> = (1..16).map(|k| CirclePoint::angle(2.0 * std::f64::consts::PI * k as f64 / 16.0)).collect();
    for t in [-3i64, -1, 0, 2, 5] {
        let d = CComplexData::scalar(t, 1);
        for &w1 in &pts {
            for &w2 in &pts {
                let v = multivar_signature(&d, w1, w2).map_err(|e| e.to_string())?.value;
                ensure(v == t.signum(), || format!("t = {t} at ({w1}, {w2}): {v}"))?;
            }
        }
    }
    ensure(
        matches!(bing_alexander_module(&CComplexData::scalar(0, 1)), AlexanderModule::TrivialFree { .. }),
        || "Alexander module of B(K) not trivial".into(),
    )?;
    ensure(murasugi_arf(0, 0, &LaurentPoly1::zero()) == Ok(0), || "Murasugi Arf of B(K) nonzero".into())
}

pub fn braid_pipeline() -> Outcome {
    let b = parse_braid("1 1 1").map_err(|e| e.to_string())?;
    let s = seifert_matrix_from_braid(&b).map_err(|e| e.to_string())?;
    let d = alexander(&s);
    ensure(d == LaurentPoly1::from_i64(0, &[1, -1, 1]), || format!("trefoil braid: Alexander {d}"))?;
    let sig = lt_signature(&s, CirclePoint::MinusOne).map_err(|e| e.to_string())?.value;
    ensure(sig == -2, || format!("trefoil braid: signature {sig}"))?;
    ensure(arf(&s) == Ok(1), || "trefoil braid: Arf".into())?;
    ensure(rasmussen_positive(&b) == Ok(2), || "trefoil braid: s".into())?;
    let f8 = seifert_matrix_from_braid(&parse_braid("1 -2 1 -2").map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let d = alexander(&f8);
    ensure(d == LaurentPoly1::from_i64(0, &[1, -3, 1]), || format!("figure-eight braid: Alexander {d}"))
}

pub fn tb_anchor() -> Outcome {
    let g: GridDiagram = TREFOIL_GRID.parse().map_err(|e: conclab::DiagramError| e.to_string())?;
    let tb = tb_grid(&g).map_err(|e| e.to_string())?;
    ensure(tb == 1, || format!("tb = {tb}"))
}

/// Random Seifert matrices of genus 1..=3: Ŝ pattern, hermitian identity, R identity and congruence invariance.
pub fn random_checks(count: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corpus: Vec<SeifertMatrix> = (0..count).map(|_| { let g = rng.gen_range(1..=3); random_seifert(g, 3, &mut rng) }).collect();
    shat_pattern(&corpus)?;
    hermitian_identity(&corpus)?;
    for w in corpus.windows(2) {
        ensure(verify_r_identity(&w[0], &w[1]), || format!("R identity: {:?}, {:?}", w[0].matrix(), w[1].matrix()))?;
    }
    for s in &corpus {
        let q = random_unimodular(s.size(), 8, &mut rng);
        let t = s.congruent(&q).map_err(|e| e.to_string())?;
        ensure(alexander(s) == alexander(&t), || format!("Alexander polynomial changes under congruence: {:?}", s.matrix()))?;
    }
    Ok(())
}

pub fn verify_paper(table: &KnotTable, random: usize, seed: u64) -> Report {
    let corpus = table_knots(table);
    let mut checks: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("figure-eight fails Fox-Milnor, not algebraically slice", Box::new(|| figure_eight_pipeline(table))),
        ("trefoil signature integral is -4/3", Box::new(|| trefoil_integral(table))),
        ("S-hat and T-hat displays, B(A) congruent to A-hat", Box::new(|| shat_pattern(&corpus))),
        ("Q-hat metabolizes B(A) for slice certificates", Box::new(|| qhat_metabolizes(table))),
        ("R carries B(A + A') to B(A) + B(A')", Box::new(|| r_identity(&corpus))),
        ("hermitian identity for modules and hats", Box::new(|| hermitian_identity(&corpus))),
        ("endomorphism dimensions agree under hat", Box::new(|| endomorphism_dimensions(table))),
        ("simplicity transports to hat", Box::new(|| simplicity_transport(table))),
        ("isomorphisms transport to hat", Box::new(|| isomorphism_transport(&corpus, seed))),
        ("s-invariant calculus", Box::new(s_calculus_anchors)),
        ("C-complex signatures, module and Arf", Box::new(ccomplex_anchors)),
        ("braid pipeline", Box::new(braid_pipeline)),
        ("grid trefoil has tb 1", Box::new(tb_anchor)),
    ];
    if random > 0 {
        checks.push(("random Seifert matrices", Box::new(move || random_checks(random, seed))));
    }
    let results: Vec<Check> = checks
        .iter()
        .map(|(name, f)| {
            let out = f();
            Check { name: name.to_string(), pass: out.is_ok(), detail: out.err() }
        })
        .collect();
    let failed = results.iter().any(|c| !c.pass);
    let mut r = Report::new(serde_json::json!({
        "checks": to_value(&results),
        "random": random,
        "seed": seed,
        "all_pass": !failed,
    }));
    r.failed = failed;
    for c in &results {
        match &c.detail {
            None => r.line(format!("PASS {}", c.name)),
            Some(d) => r.line(format!("FAIL {}: {d}", c.name)),
        }
    }
    r.line(format!("{} of {} checks passed", results.iter().filter(|c| c.pass).count(), results.len()));
    r
}
