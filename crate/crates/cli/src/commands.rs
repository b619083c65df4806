//! One function per subcommand; each returns a [`Report`] or a [`CliError`] carrying the exit code.

use conclab::boundary_forms::{
    ahat_collection, bing_double, bing_to_ahat_witness, build_qhat, is_metabolic_collection, verify_block_congruence,
    ComponentCongruence,
};
use conclab::ccomplex::{bing_alexander_module, multivar_signature, murasugi_arf, AlexanderModule, CComplexData};
use conclab::diagrams::{
    braid_stats, parse_braid_with_strands, rasmussen_positive, seifert_matrix_from_braid, slice_bennequin_bound,
    tb_grid, GridDiagram,
};
use conclab::exactmath::{CirclePoint, LaurentPoly1};
use conclab::knot_invariants::{
    alexander, algebraically_slice, arf, fox_milnor, lt_signature, signature_integral, Obstruction, SeifertMatrix,
    SliceVerdict,
};
use conclab::representations::{char_poly_simple, from_seifert, hat, hom_space, simplicity_suite, Representation};
use conclab::s_calculus::{scenario_whitehead, solve, SConstraint, SConstraintSystem, ScenarioReport, SolveOutcome};
use serde_json::{json, Value};

use crate::{to_value, CliError, Report, Settings};

fn describe(o: &Obstruction) -> String {
    match o {
        Obstruction::FoxMilnor { alexander } => format!("Alexander polynomial {alexander} is not of the form f(t)f(1/t)"),
        Obstruction::Signature { omega, value } => format!("signature {value} at {omega}"),
        Obstruction::Discriminant { discriminant } => format!("isotropy discriminant {discriminant} is not a square"),
    }
}

fn verdict_line(v: &SliceVerdict) -> String {
    match v {
        SliceVerdict::AlgebraicallySlice { .. } => "algebraically slice (metabolizer certificate found)".into(),
        SliceVerdict::NotSlice { obstruction } => format!("not algebraically slice: {}", describe(obstruction)),
        SliceVerdict::Inconclusive { search_bound } => format!("inconclusive at search bound {search_bound}"),
    }
}

pub fn invariants(name: &str, s: &SeifertMatrix, cfg: &Settings) -> Result<Report, CliError> {
    let delta = alexander(s);
    let sig_m1 = lt_signature(s, CirclePoint::MinusOne).map_err(CliError::failed)?;
    let sig_i = lt_signature(s, CirclePoint::I).map_err(CliError::failed)?;
    let integral = signature_integral(s, cfg.resolution).map_err(CliError::parse)?;
    let arf_value = arf(s).ok();
    let fm = fox_milnor(&delta);
    let verdict = algebraically_slice(s, cfg.search_bound).map_err(CliError::failed)?;
    let conclusion = match &verdict {
        SliceVerdict::NotSlice { .. } => format!("{name} is not algebraically slice, so B({name}) is not boundary slice"),
        SliceVerdict::AlgebraicallySlice { .. } => {
            format!("{name} is algebraically slice; these invariants do not obstruct B({name}) from being boundary slice")
        }
        SliceVerdict::Inconclusive { search_bound } => format!("no verdict for {name} within search bound {search_bound}"),
    };
    let mut r = Report::new(json!({
        "knot": name,
        "genus": s.genus(),
        "seifert_matrix": to_value(s.matrix()),
        "alexander": delta.to_string(),
        "signature": { "-1": to_value(&sig_m1), "i": to_value(&sig_i) },
        "signature_integral": to_value(&integral),
        "arf": arf_value,
        "fox_milnor": to_value(&fm),
        "algebraically_slice": to_value(&verdict),
        "conclusion": conclusion,
    }));
    r.failed = !verdict.recheck(s);
    r.line(format!("knot: {name} (genus {})", s.genus()));
    r.line(format!("Alexander polynomial: {delta}"));
    r.line(format!("signature at -1: {}", sig_m1.value));
    r.line(format!("signature at i: {}", sig_i.value));
    let approx = integral.rational.map(|q| format!(" ~ {q}")).unwrap_or_default();
    r.line(format!(
        "signature integral: {:.6}{approx} (error <= {:.2e}, {} jumps)",
        integral.estimate,
        integral.error_bound,
        integral.jumps.len()
    ));
    r.line(format!("Arf invariant: {}", arf_value.map_or("too large to compute".to_string(), |a| a.to_string())));
    r.line(format!(
        "Fox-Milnor condition: {}",
        match fm.holds() {
            Some(true) => "satisfied",
            Some(false) => "fails",
            None => "undecided (degree bound)",
        }
    ));
    r.line(format!("slice status: {}", verdict_line(&verdict)));
    r.line(conclusion);
    Ok(r)
}

/// Sample points for the C-complex signature, none equal to 1.
fn sample_points() -> Vec<CirclePoint> {
    vec![CirclePoint::MinusOne, CirclePoint::I, CirclePoint::MinusI, CirclePoint::angle(2.0 * std::f64::consts::PI / 3.0)]
}

pub fn bing(name: &str, s: &SeifertMatrix, cfg: &Settings) -> Result<Report, CliError> {
    let b = bing_double(s);
    let congruent_to_ahat = verify_block_congruence(&b, &ahat_collection(s), &bing_to_ahat_witness(s));
    let verdict = algebraically_slice(s, cfg.search_bound).map_err(CliError::failed)?;
    let (metabolic, qhat) = match &verdict {
        SliceVerdict::AlgebraicallySlice { certificate } => {
            let qh = build_qhat(certificate).map_err(CliError::failed)?;
            let c = ComponentCongruence::new(vec![qh.clone(), qh.clone()]).map_err(CliError::failed)?;
            (Some(is_metabolic_collection(&b, &c).map_err(CliError::failed)?), Some(qh))
        }
        _ => (None, None),
    };

    // the standard C-complex of B(K): two discs meeting in two clasps, A = A′ = (0)
    let cc = CComplexData::scalar(0, 1);
    let mut samples = Vec::new();
    for &w1 in &sample_points() {
        for &w2 in &sample_points() {
            let v = multivar_signature(&cc, w1, w2).map_err(CliError::failed)?.value;
            samples.push(json!({ "omega1": w1.to_string(), "omega2": w2.to_string(), "signature": v }));
        }
    }
    let all_zero = samples.iter().all(|x| x["signature"] == 0);
    let module = bing_alexander_module(&cc);
    let murasugi = murasugi_arf(0, 0, &LaurentPoly1::zero()).map_err(CliError::failed)?;

    let conclusion = match &verdict {
        SliceVerdict::NotSlice { obstruction } => {
            format!("B({name}) not boundary slice: {name} is not algebraically slice ({})", describe(obstruction))
        }
        SliceVerdict::AlgebraicallySlice { .. } => format!(
            "B({name}) has a metabolic boundary-pair collection: the boundary-form obstruction vanishes"
        ),
        SliceVerdict::Inconclusive { search_bound } => {
            format!("no conclusion for B({name}): slice search for {name} inconclusive at bound {search_bound}")
        }
    };
    let mut r = Report::new(json!({
        "knot": name,
        "bing_double": to_value(&b),
        "congruent_to_ahat": congruent_to_ahat,
        "algebraically_slice": to_value(&verdict),
        "qhat": qhat.as_ref().map(to_value),
        "metabolic": metabolic,
        "multivariable_signatures": samples,
        "alexander_module": to_value(&module),
        "murasugi_arf": murasugi,
        "conclusion": conclusion,
    }));
    r.failed = !congruent_to_ahat
        || metabolic == Some(false)
        || !all_zero
        || !matches!(module, AlexanderModule::TrivialFree { .. })
        || murasugi != 0;
    r.line(format!("knot: {name}"));
    r.line(format!("B({name}) component sizes: {:?}", b.sizes()));
    if b.sizes().iter().all(|&n| n == 0) {
        r.line("all blocks empty");
    } else {
        for i in 0..2 {
            for j in 0..2 {
                r.line(format!("block A{}{}:\n{}", i + 1, j + 1, b.block(i, j)));
            }
        }
    }
    r.line(format!("block-congruent to A-hat: {congruent_to_ahat}"));
    r.line(format!("slice status of {name}: {}", verdict_line(&verdict)));
    match metabolic {
        Some(m) => r.line(format!("Q-hat metabolizes B({name}): {m}")),
        None => r.line("no metabolizer certificate for the knot"),
    }
    r.line(format!("multivariable signatures at {} sample points: {}", samples.len(), if all_zero { "all 0" } else { "NONZERO" }));
    r.line(format!(
        "Alexander module: {}",
        match module {
            AlexanderModule::TrivialFree { .. } => "free, reduced polynomial 1 (trivial link)",
            AlexanderModule::Other => "not determined",
        }
    ));
    r.line(format!("Murasugi Arf: {murasugi}"));
    r.line(conclusion);
    Ok(r)
}

fn rep_summary(rep: &Representation) -> Result<Value, CliError> {
    let simple = simplicity_suite(rep).map_err(CliError::failed)?;
    let hom = hom_space(rep, rep).map_err(CliError::failed)?;
    Ok(json!({
        "dim": rep.dim(),
        "components": rep.m(),
        "invariants_hold": rep.validate().is_ok(),
        "commutant_dim": hom.dim(),
        "simplicity": to_value(&simple),
    }))
}

fn rep_lines(r: &mut Report, label: &str, v: &Value) {
    let s = &v["simplicity"];
    r.line(format!(
        "{label}: dim {}, invariants hold: {}, commutant dim {}, cyclic: {}, simple: {}",
        v["dim"], v["invariants_hold"], v["commutant_dim"], s["cyclic"], s["simple"]
    ));
    if let Some(ws) = s["warnings"].as_array() {
        for w in ws {
            r.line(format!("  warning: {}", w.as_str().unwrap_or_default()));
        }
    }
}

pub fn rep_check(name: &str, s: &SeifertMatrix) -> Result<Report, CliError> {
    let rep = from_seifert(s).map_err(CliError::parse)?;
    let cp = char_poly_simple(&rep).map_err(CliError::failed)?;
    let h = hat(&rep, s).map_err(CliError::failed)?;
    let base = rep_summary(&rep)?;
    let lifted = rep_summary(&h)?;
    let mut r = Report::new(json!({
        "knot": name,
        "representation": to_value(&rep),
        "char_poly": to_value(&cp),
        "module": base,
        "hat": lifted,
    }));
    r.failed = base["invariants_hold"] != true || lifted["invariants_hold"] != true;
    r.line(format!("knot: {name}"));
    r.line(format!(
        "characteristic polynomial of S: {} ({})",
        cp.poly.to_string_in("s"),
        match cp.irreducible {
            Some(true) => "irreducible",
            Some(false) => "reducible",
            None => "not factored",
        }
    ));
    rep_lines(&mut r, "module", &base);
    rep_lines(&mut r, "hat", &lifted);
    Ok(r)
}

pub fn rep_check_file(rep: &Representation) -> Result<Report, CliError> {
    let v = rep_summary(rep)?;
    let mut r = Report::new(json!({ "representation": to_value(rep), "module": v }));
    r.failed = v["invariants_hold"] != true;
    rep_lines(&mut r, "module", &v);
    Ok(r)
}

fn outcome_lines(r: &mut Report, out: &SolveOutcome) {
    match out {
        SolveOutcome::Solved { domains, .. } => {
            for (k, v) in domains {
                r.line(format!("s({k}) in {v}"));
            }
        }
        SolveOutcome::Inconsistent { link, chain, .. } => {
            r.line(format!("inconsistent: no value left for s({link})"));
            for (i, c) in chain {
                r.line(format!("  #{i}: {c}"));
            }
        }
    }
    r.line("trace:");
    for t in out.trace() {
        r.line(format!("  {t}"));
    }
}

pub fn s_calc_system(sys: &SConstraintSystem) -> Result<Report, CliError> {
    let out = solve(sys).map_err(CliError::unknown)?;
    let mut r = Report::new(to_value(&out));
    outcome_lines(&mut r, &out);
    Ok(r)
}

/// Parses facts of the form "Wh=2".
pub fn parse_fact(s: &str) -> Result<SConstraint, CliError> {
    let (link, value) = s.split_once('=').ok_or_else(|| CliError::parse(format!("fact '{s}' is not LINK=VALUE")))?;
    let value: i64 = value.trim().parse().map_err(|_| CliError::parse(format!("fact '{s}' has no integer value")))?;
    Ok(SConstraint::Known { link: link.trim().to_string(), value })
}

pub fn s_calc_scenario(facts: &[SConstraint]) -> Result<Report, CliError> {
    let out = scenario_whitehead(facts).map_err(CliError::unknown)?;
    let mut r = Report::new(to_value(&out));
    match &out {
        ScenarioReport::Pairs { pairs, domains, trace } => {
            let ps: Vec<String> = pairs.iter().map(|(b, w)| format!("({b}, {w})")).collect();
            r.line(format!("possible (s(B), s(Wh)): {}", ps.join(", ")));
            let solved = SolveOutcome::Solved { domains: domains.clone(), trace: trace.clone() };
            outcome_lines(&mut r, &solved);
        }
        ScenarioReport::Inconsistent { link, chain, trace } => {
            let o = SolveOutcome::Inconsistent { link: link.clone(), chain: chain.clone(), trace: trace.clone() };
            outcome_lines(&mut r, &o);
        }
    }
    Ok(r)
}

pub fn parse_braid_cmd(text: &str, strands: Option<usize>) -> Result<Report, CliError> {
    let b = parse_braid_with_strands(text, strands).map_err(CliError::parse)?;
    let stats = braid_stats(&b);
    let s_value = rasmussen_positive(&b).ok();
    let bound = slice_bennequin_bound(&b);
    let seifert = if stats.components == 1 { Some(seifert_matrix_from_braid(&b).map_err(CliError::failed)?) } else { None };
    let mut r = Report::new(json!({
        "braid": to_value(&b),
        "stats": to_value(&stats),
        "rasmussen_positive": s_value,
        "slice_bennequin_bound": bound,
        "seifert_matrix": seifert.as_ref().map(|s| to_value(s.matrix())),
        "alexander": seifert.as_ref().map(|s| alexander(s).to_string()),
    }));
    r.line(format!("braid on {} strands: {b}", b.strands()));
    r.line(format!(
        "components {}, writhe {}, Seifert circles {}, positive: {}",
        stats.components, stats.writhe, stats.seifert_circles, stats.positive
    ));
    if let Some(v) = s_value {
        r.line(format!("s (positive diagram) = {v}"));
    }
    r.line(format!("slice-Bennequin bound on chi_s: {bound}"));
    if let Some(s) = &seifert {
        r.line(format!("Seifert matrix ({}x{}):\n{}", s.size(), s.size(), s.matrix()));
        r.line(format!("Alexander polynomial: {}", alexander(s)));
    }
    Ok(r)
}

pub fn parse_grid(text: &str) -> Result<GridDiagram, CliError> {
    let t = text.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(CliError::parse)
    } else {
        t.parse().map_err(CliError::parse)
    }
}

pub fn tb_grid_cmd(g: &GridDiagram) -> Result<Report, CliError> {
    let tb = tb_grid(g).map_err(CliError::parse)?;
    let st = g.stats();
    let mut r = Report::new(json!({ "grid": to_value(g), "stats": to_value(&st), "tb": tb }));
    r.line(format!(
        "grid of size {}: {} crossings, writhe {}, {} northeast corners",
        g.size(),
        st.crossings,
        st.writhe,
        st.ne_corners
    ));
    r.line(format!("tb = {tb}"));
    Ok(r)
}
