//! The twelve acceptance criteria, each timed against its limit; one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use conclab::boundary_forms::{bing_double, build_qhat, build_that_shat, is_metabolic_collection, verify_r_identity, ComponentCongruence};
use conclab::ccomplex::{multivar_signature, CComplexData};
use conclab::diagrams::{parse_braid, rasmussen_positive, seifert_matrix_from_braid, tb_grid, GridDiagram};
use conclab::exactmath::{CirclePoint, LaurentPoly1};
use conclab::knot_invariants::{
    alexander, algebraically_slice, arf, fox_milnor, lt_signature, signature_integral, KnotTable, SeifertMatrix, SliceVerdict,
};
use conclab::random::{random_seifert, random_unimodular};
use conclab::representations::{from_seifert, hat, hom_space, is_hom, is_isomorphic, simplicity_suite, IsoVerdict};
use conclab::s_calculus::{scenario_whitehead, solve, LinkDecl, SConstraint, SConstraintSystem, ScenarioReport};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table() -> KnotTable {
    KnotTable::bundled()
}

fn knot(name: &str) -> SeifertMatrix {
    table().get(name).unwrap().seifert.clone()
}

fn random_corpus(count: usize, seed: u64) -> Vec<SeifertMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g = rng.gen_range(1..=3);
            random_seifert(g, 3, &mut rng)
        })
        .collect()
}

fn figure_eight_pipeline() -> Outcome {
    let s = knot("figure8");
    check(fox_milnor(&alexander(&s)).holds() == Some(false), || "Fox-Milnor holds".into())?;
    let v = algebraically_slice(&s, 5).map_err(|e| e.to_string())?;
    check(matches!(v, SliceVerdict::NotSlice { .. }), || format!("{v:?}"))?;
    let out = Command::new(env!("CARGO_BIN_EXE_conclab")).args(["bing", "--name", "figure8"]).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    check(out.status.success() && text.contains("B(figure8) not boundary slice"), || text.to_string())
}

fn trefoil_integral() -> Outcome {
    let i = signature_integral(&knot("trefoil"), 4096).map_err(|e| e.to_string())?;
    check(i.rational == Some(Ratio::new(-4, 3)) && i.error_bound <= 0.01 && (i.estimate + 4.0 / 3.0).abs() <= 0.01, || {
        format!("{} ± {}", i.estimate, i.error_bound)
    })
}

fn shat_display() -> Outcome {
    let mut corpus: Vec<SeifertMatrix> = table().entries().iter().map(|e| e.seifert.clone()).filter(|s| s.size() > 0).collect();
    check(corpus.len() == 3, || "bundled knots".into())?;
    corpus.extend(random_corpus(50, 3));
    for s in &corpus {
        build_that_shat(s).map_err(|e| format!("{:?}: {e}", s.matrix()))?;
    }
    Ok(())
}

fn homomorphism_well_defined() -> Outcome {
    for s in [SeifertMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap(), SeifertMatrix::from_rows(&[vec![1, 1], vec![0, -2]]).unwrap()] {
        let SliceVerdict::AlgebraicallySlice { certificate } = algebraically_slice(&s, 5).map_err(|e| e.to_string())? else {
            return Err(format!("no certificate for {:?}", s.matrix()));
        };
        let q = build_qhat(&certificate).map_err(|e| e.to_string())?;
        let c = ComponentCongruence::new(vec![q.clone(), q]).map_err(|e| e.to_string())?;
        check(is_metabolic_collection(&bing_double(&s), &c).map_err(|e| e.to_string())?, || format!("{:?}", s.matrix()))?;
    }
    Ok(())
}

fn r_identity() -> Outcome {
    let t = table();
    for a in t.entries() {
        for b in t.entries() {
            check(verify_r_identity(&a.seifert, &b.seifert), || format!("{} and {}", a.name, b.name))?;
        }
    }
    Ok(())
}

fn hermitian_identity() -> Outcome {
    for s in random_corpus(100, 6) {
        let r = from_seifert(&s).map_err(|e| e.to_string())?;
        r.validate().map_err(|e| e.to_string())?;
        hat(&r, &s).map_err(|e| e.to_string())?.validate().map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn endomorphism_dimensions() -> Outcome {
    for name in ["trefoil", "figure8"] {
        let s = knot(name);
        let r = from_seifert(&s).map_err(|e| e.to_string())?;
        let h = hat(&r, &s).map_err(|e| e.to_string())?;
        let d = (hom_space(&r, &r).unwrap().dim(), hom_space(&h, &h).unwrap().dim());
        check(d == (2, 2), || format!("{name}: {d:?}"))?;
    }
    Ok(())
}

fn transport_suite() -> Outcome {
    for name in ["trefoil", "figure8"] {
        let s = knot(name);
        let h = hat(&from_seifert(&s).unwrap(), &s).unwrap();
        let r = simplicity_suite(&h).map_err(|e| e.to_string())?;
        check(r.simple == Some(true) && r.cyclic && r.commutant_dim == 2 && r.sampled_invertible, || format!("{name}: {r:?}"))?;
    }
    let bad = simplicity_suite(&from_seifert(&SeifertMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap()).unwrap()).unwrap();
    check(!bad.cyclic && bad.cyclicity_failures.iter().any(|f| f.invariant_subspace.rows() == 1), || format!("{bad:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for e in table().entries().iter().filter(|e| e.seifert.size() > 0) {
        let s = &e.seifert;
        let t = s.congruent(&random_unimodular(s.size(), 6, &mut rng)).unwrap();
        let (r, r2) = (from_seifert(s).unwrap(), from_seifert(&t).unwrap());
        let IsoVerdict::Yes { witness } = is_isomorphic(&r, &r2).unwrap() else { return Err(format!("{}: not isomorphic", e.name)) };
        let big = witness.repeat_diagonal(4);
        check(is_hom(&hat(&r, s).unwrap(), &hat(&r2, &t).unwrap(), &big) && big.is_invertible(), || e.name.clone())?;
    }
    Ok(())
}

fn braid_pipeline() -> Outcome {
    let b = parse_braid("1 1 1").map_err(|e| e.to_string())?;
    let s = seifert_matrix_from_braid(&b).map_err(|e| e.to_string())?;
    check(alexander(&s) == LaurentPoly1::from_i64(0, &[1, -1, 1]), || alexander(&s).to_string())?;
    check(lt_signature(&s, CirclePoint::MinusOne).unwrap().value == -2, || "signature".into())?;
    check(arf(&s) == Ok(1) && rasmussen_positive(&b) == Ok(2), || "Arf or s".into())?;
    let f = seifert_matrix_from_braid(&parse_braid("1 -2 1 -2").unwrap()).map_err(|e| e.to_string())?;
    check(alexander(&f) == LaurentPoly1::from_i64(0, &[1, -3, 1]), || alexander(&f).to_string())
}

fn s_calculus() -> Outcome {
    let link = |n: &str, c| LinkDecl { name: n.into(), components: c };
    let cob = |a: &str, b: &str, chi| SConstraint::Cobordism { from: a.into(), to: b.into(), chi };
    let sys = SConstraintSystem {
        links: vec![link("Hopf+", 2), link("Hopf-", 2), link("B", 2), link("Wh", 1)],
        constraints: vec![
            SConstraint::PositiveDiagram { link: "Hopf+".into(), crossings: 2, circles: 2 },
            cob("B", "Hopf+", -2),
            SConstraint::Known { link: "Hopf-".into(), value: -1 },
            cob("Hopf-", "B", -2),
            SConstraint::Parity { link: "B".into() },
        ],
    };
    let b_values = |s: &SConstraintSystem| solve(s).unwrap().domains().and_then(|d| d["B"].values());
    check(b_values(&sys) == Some(vec![-1, 1]), || "s(B) domain".into())?;
    let prop = sys.clone().with(SConstraint::Known { link: "Wh".into(), value: 2 }).with(cob("B", "Wh", -1));
    check(b_values(&prop) == Some(vec![1]), || "s(B) with s(Wh) = 2".into())?;
    let unlink = SConstraintSystem {
        links: vec![link("U2", 2)],
        constraints: vec![SConstraint::PositiveDiagram { link: "U2".into(), crossings: 0, circles: 2 }],
    };
    check(solve(&unlink).unwrap().domains().unwrap()["U2"].values() == Some(vec![-1]), || "unlink".into())?;
    match scenario_whitehead(&[]).unwrap() {
        ScenarioReport::Pairs { pairs, .. } => check(pairs == vec![(-1, 0), (1, 0), (1, 2)], || format!("{pairs:?}")),
        other => Err(format!("{other:?}")),
    }
}

fn twisted_signatures() -> Outcome {
    let pts: Vec<CirclePoint> = (1..=16).map(|k| CirclePoint::angle(2.0 * std::f64::consts::PI * k as f64 / 17.0)).collect();
    for t in [-3i64, -1, 2, 5] {
        let d = CComplexData::scalar(t, 1);
        for &w1 in &pts {
            for &w2 in &pts {
                let v = multivar_signature(&d, w1, w2).map_err(|e| e.to_string())?.value;
                check(v == t.signum(), || format!("t={t} at ({w1}, {w2}): {v}"))?;
            }
        }
    }
    Ok(())
}

fn tb_anchor() -> Outcome {
    let g: GridDiagram = "5; X=[1,2,3,4,5]; O=[3,4,5,1,2]".parse().map_err(|e: conclab::DiagramError| e.to_string())?;
    let tb = tb_grid(&g).map_err(|e| e.to_string())?;
    check(tb == 1, || format!("tb = {tb}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 12] = [
        ("figure-eight pipeline", figure_eight_pipeline, 1),
        ("trefoil signature integral", trefoil_integral, 2),
        ("S-hat display identity", shat_display, 5),
        ("homomorphism well-definedness", homomorphism_well_defined, 1),
        ("R identity", r_identity, 1),
        ("hermitian identity", hermitian_identity, 5),
        ("endomorphism dimensions", endomorphism_dimensions, 2),
        ("simplicity and isomorphism transport", transport_suite, 10),
        ("braid pipeline", braid_pipeline, 1),
        ("s-invariant calculus", s_calculus, 1),
        ("twisted Bing double signatures", twisted_signatures, 2),
        ("grid tb anchor", tb_anchor, 1),
    ];
    let mut failures = Vec::new();
    for (k, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let slow = took > Duration::from_secs(*limit);
        let status = if out.is_ok() && !slow { "PASS" } else { "FAIL" };
        println!("[{status}] {:>2}. {name} ({:.3}s, limit {limit}s){}", k + 1, took.as_secs_f64(), match (&out, slow) {
            (Err(e), _) => format!(": {e}"),
            (Ok(()), true) => ": over time limit".into(),
            _ => String::new(),
        });
        if status == "FAIL" {
            failures.push(k + 1);
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures.len(), criteria.len());
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
