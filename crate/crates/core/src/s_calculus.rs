//! Propagation of constraints on Rasmussen s-values:
//! parity s ≡ m − 1 (mod 2), positive diagrams s = n − k + 1, and cobordisms |s − s′| ≤ −χ.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SCalcError {
    #[error("constraint {index} references undeclared link '{link}'")]
    UnknownLink { index: usize, link: String },
    #[error("link '{0}' declared twice")]
    Duplicate(String),
    #[error("link '{0}' must have at least one component")]
    NoComponents(String),
    #[error("constraint {index}: cobordism needs chi <= 0, got {chi}")]
    PositiveChi { index: usize, chi: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDecl {
    pub name: String,
    pub components: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SConstraint {
    Parity { link: String },
    PositiveDiagram { link: String, crossings: u32, circles: u32 },
    Cobordism { from: String, to: String, chi: i64 },
    Known { link: String, value: i64 },
}

impl SConstraint {
    fn links(&self) -> Vec<&str> {
        match self {
            SConstraint::Parity { link } | SConstraint::PositiveDiagram { link, .. } | SConstraint::Known { link, .. } => {
                vec![link]
            }
            SConstraint::Cobordism { from, to, .. } => vec![from, to],
        }
    }
}

impl fmt::Display for SConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SConstraint::Parity { link } => write!(f, "parity of s({link})"),
            SConstraint::PositiveDiagram { link, crossings, circles } => {
                write!(f, "positive diagram of {link} with {crossings} crossings and {circles} circles")
            }
            SConstraint::Cobordism { from, to, chi } => write!(f, "|s({from}) - s({to})| <= {}", -chi),
            SConstraint::Known { link, value } => write!(f, "s({link}) = {value}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SConstraintSystem {
    pub links: Vec<LinkDecl>,
    pub constraints: Vec<SConstraint>,
}

impl SConstraintSystem {
    pub fn validate(&self) -> Result<(), SCalcError> {
        let mut seen = BTreeSet::new();
        for l in &self.links {
            if !seen.insert(l.name.as_str()) {
                return Err(SCalcError::Duplicate(l.name.clone()));
            }
            if l.components == 0 {
                return Err(SCalcError::NoComponents(l.name.clone()));
            }
        }
        for (index, c) in self.constraints.iter().enumerate() {
            if let Some(l) = c.links().into_iter().find(|l| !seen.contains(l)) {
                return Err(SCalcError::UnknownLink { index, link: l.to_string() });
            }
            if let SConstraint::Cobordism { chi, .. } = c {
                if *chi > 0 {
                    return Err(SCalcError::PositiveChi { index, chi: *chi });
                }
            }
        }
        Ok(())
    }

    pub fn with(mut self, c: SConstraint) -> Self {
        self.constraints.push(c);
        self
    }
}

/// Integers in [lo, hi] (either end may be open) of a fixed residue mod 2 when `parity` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueSet {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
    pub parity: Option<u8>,
}

impl ValueSet {
    pub const ALL: ValueSet = ValueSet { lo: None, hi: None, parity: None };

    pub fn exact(v: i64) -> Self {
        ValueSet { lo: Some(v), hi: Some(v), parity: None }.normalized()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo.is_none_or(|l| v >= l)
            && self.hi.is_none_or(|h| v <= h)
            && self.parity.is_none_or(|p| v.rem_euclid(2) == p as i64)
    }

    pub fn is_empty(&self) -> bool {
        matches!((self.lo, self.hi), (Some(l), Some(h)) if l > h)
    }

    /// Finite member list, or None for a half-line.
    pub fn values(&self) -> Option<Vec<i64>> {
        let (l, h) = (self.lo?, self.hi?);
        Some((l..=h).filter(|&v| self.contains(v)).collect())
    }

    fn normalized(mut self) -> Self {
        if let Some(l) = self.lo {
            if let Some(h) = self.hi {
                if l == h {
                    self.parity = Some(l.rem_euclid(2) as u8);
                }
            }
        }
        if let Some(p) = self.parity {
            if let Some(l) = self.lo {
                if l.rem_euclid(2) != p as i64 {
                    self.lo = Some(l + 1);
                }
            }
            if let Some(h) = self.hi {
                if h.rem_euclid(2) != p as i64 {
                    self.hi = Some(h - 1);
                }
            }
        }
        self
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let lo = match (self.lo, other.lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        match (self.parity, other.parity) {
            (Some(a), Some(b)) if a != b => ValueSet { lo: Some(1), hi: Some(0), parity: None },
            (a, b) => ValueSet { lo, hi, parity: a.or(b) }.normalized(),
        }
    }

    /// {v : |v − w| ≤ d for some member w}.
    fn widen(&self, d: i64) -> Self {
        if d == 0 {
            return *self;
        }
        ValueSet { lo: self.lo.map(|l| l - d), hi: self.hi.map(|h| h + d), parity: None }
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        if let Some(vs) = self.values() {
            let parts: Vec<String> = vs.iter().map(i64::to_string).collect();
            return write!(f, "{{{}}}", parts.join(", "));
        }
        let lo = self.lo.map_or("(-inf".to_string(), |l| format!("[{l}"));
        let hi = self.hi.map_or("+inf)".to_string(), |h| format!("{h}]"));
        write!(f, "{lo}, {hi}")?;
        match self.parity {
            Some(0) => f.write_str(" even"),
            Some(_) => f.write_str(" odd"),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub constraint: usize,
    pub link: String,
    pub before: String,
    pub after: String,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}: s({}) {} -> {}", self.constraint, self.link, self.before, self.after)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveOutcome {
    Solved {
        domains: BTreeMap<String, ValueSet>,
        trace: Vec<TraceStep>,
    },
    Inconsistent {
        link: String,
        /// Constraints (index, statement) whose combination empties the domain of `link`.
        chain: Vec<(usize, String)>,
        trace: Vec<TraceStep>,
    },
}

impl SolveOutcome {
    pub fn domains(&self) -> Option<&BTreeMap<String, ValueSet>> {
        match self {
            SolveOutcome::Solved { domains, .. } => Some(domains),
            SolveOutcome::Inconsistent { .. } => None,
        }
    }

    pub fn trace(&self) -> &[TraceStep] {
        match self {
            SolveOutcome::Solved { trace, .. } | SolveOutcome::Inconsistent { trace, .. } => trace,
        }
    }
}

const MAX_ROUNDS: usize = 100_000;

pub fn solve(sys: &SConstraintSystem) -> Result<SolveOutcome, SCalcError> {
    sys.validate()?;
    let names: Vec<&str> = sys.links.iter().map(|l| l.name.as_str()).collect();
    let idx: HashMap<&str, usize> = names.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let mut dom = vec![ValueSet::ALL; names.len()];
    let mut why: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); names.len()];
    let mut trace = Vec::new();

    for _ in 0..MAX_ROUNDS {
        let mut changed = false;
        for (ci, c) in sys.constraints.iter().enumerate() {
            // (target link, restriction, links whose domains fed the restriction)
            let updates: Vec<(usize, ValueSet, Vec<usize>)> = match c {
                SConstraint::Parity { link } => {
                    let i = idx[link.as_str()];
                    let m = sys.links[i].components as i64;
                    vec![(i, ValueSet { lo: None, hi: None, parity: Some((m - 1).rem_euclid(2) as u8) }, vec![])]
                }
                SConstraint::PositiveDiagram { link, crossings, circles } => {
                    vec![(idx[link.as_str()], ValueSet::exact(*crossings as i64 - *circles as i64 + 1), vec![])]
                }
                SConstraint::Known { link, value } => vec![(idx[link.as_str()], ValueSet::exact(*value), vec![])],
                SConstraint::Cobordism { from, to, chi } => {
                    let (a, b) = (idx[from.as_str()], idx[to.as_str()]);
                    vec![(a, dom[b].widen(-chi), vec![b]), (b, dom[a].widen(-chi), vec![a])]
                }
            };
            for (i, r, sources) in updates {
                let next = dom[i].intersect(&r);
                if next == dom[i] {
                    continue;
                }
                trace.push(TraceStep {
                    constraint: ci,
                    link: names[i].to_string(),
                    before: dom[i].to_string(),
                    after: next.to_string(),
                });
                let mut reasons = why[i].clone();
                reasons.insert(ci);
                for s in sources {
                    reasons.extend(why[s].iter().copied());
                }
                why[i] = reasons;
                dom[i] = next;
                changed = true;
                if next.is_empty() {
                    let chain = why[i].iter().map(|&k| (k, sys.constraints[k].to_string())).collect();
                    return Ok(SolveOutcome::Inconsistent { link: names[i].to_string(), chain, trace });
                }
            }
        }
        if !changed {
            break;
        }
    }
    let domains = names.iter().zip(dom).map(|(n, d)| (n.to_string(), d)).collect();
    Ok(SolveOutcome::Solved { domains, trace })
}

/// Does the full assignment satisfy every constraint?
pub fn satisfies(sys: &SConstraintSystem, s: &BTreeMap<String, i64>) -> bool {
    let comps: HashMap<&str, u32> = sys.links.iter().map(|l| (l.name.as_str(), l.components)).collect();
    sys.constraints.iter().all(|c| match c {
        SConstraint::Parity { link } => (s[link] - (comps[link.as_str()] as i64 - 1)).rem_euclid(2) == 0,
        SConstraint::PositiveDiagram { link, crossings, circles } => s[link] == *crossings as i64 - *circles as i64 + 1,
        SConstraint::Known { link, value } => s[link] == *value,
        SConstraint::Cobordism { from, to, chi } => (s[from] - s[to]).abs() <= -chi,
    })
}

/// All full assignments drawn from finite domains that satisfy the system, in lexicographic order.
pub fn enumerate_assignments(sys: &SConstraintSystem, domains: &BTreeMap<String, Vec<i64>>) -> Vec<BTreeMap<String, i64>> {
    let names: Vec<&String> = domains.keys().collect();
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    fn rec<'a>(
        k: usize,
        names: &[&'a String],
        domains: &'a BTreeMap<String, Vec<i64>>,
        sys: &SConstraintSystem,
        cur: &mut BTreeMap<String, i64>,
        out: &mut Vec<BTreeMap<String, i64>>,
    ) {
        if k == names.len() {
            if satisfies(sys, cur) {
                out.push(cur.clone());
            }
            return;
        }
        for &v in &domains[names[k]] {
            cur.insert(names[k].clone(), v);
            rec(k + 1, names, domains, sys, cur, out);
        }
    }
    rec(0, &names, domains, sys, &mut cur, &mut out);
    out
}

/// Links and facts about a Bing double B = B(K) and the Whitehead double Wh = Wh(K):
/// B is cobordant (χ = −2) to both Hopf links and (χ = −1) to Wh, and Wh is cobordant (χ = −1) to the positive Hopf link.
pub fn whitehead_system() -> SConstraintSystem {
    let link = |name: &str, components| LinkDecl { name: name.into(), components };
    let cob = |from: &str, to: &str, chi| SConstraint::Cobordism { from: from.into(), to: to.into(), chi };
    SConstraintSystem {
        links: vec![link("B", 2), link("Wh", 1), link("Hopf+", 2), link("Hopf-", 2)],
        constraints: vec![
            SConstraint::PositiveDiagram { link: "Hopf+".into(), crossings: 2, circles: 2 },
            SConstraint::Known { link: "Hopf-".into(), value: -1 },
            SConstraint::Parity { link: "B".into() },
            SConstraint::Parity { link: "Wh".into() },
            cob("B", "Hopf+", -2),
            cob("Hopf-", "B", -2),
            cob("B", "Wh", -1),
            cob("Wh", "Hopf+", -1),
        ],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ScenarioReport {
    /// Possible pairs (s(B), s(Wh)).
    Pairs { pairs: Vec<(i64, i64)>, domains: BTreeMap<String, ValueSet>, trace: Vec<TraceStep> },
    Inconsistent { link: String, chain: Vec<(usize, String)>, trace: Vec<TraceStep> },
}

/// Solves the Bing/Whitehead system plus `extra` facts and lists every consistent (s(B), s(Wh)).
pub fn scenario_whitehead(extra: &[SConstraint]) -> Result<ScenarioReport, SCalcError> {
    let mut sys = whitehead_system();
    sys.constraints.extend_from_slice(extra);
    match solve(&sys)? {
        SolveOutcome::Inconsistent { link, chain, trace } => Ok(ScenarioReport::Inconsistent { link, chain, trace }),
        SolveOutcome::Solved { domains, trace } => {
            let finite: Option<BTreeMap<String, Vec<i64>>> =
                domains.iter().map(|(k, v)| v.values().map(|vs| (k.clone(), vs))).collect();
            let finite = finite.expect("every link in the scenario is bounded");
            let mut pairs: Vec<(i64, i64)> =
                enumerate_assignments(&sys, &finite).iter().map(|a| (a["B"], a["Wh"])).collect();
            pairs.sort();
            pairs.dedup();
            Ok(ScenarioReport::Pairs { pairs, domains, trace })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn link(name: &str, components: u32) -> LinkDecl {
        LinkDecl { name: name.into(), components }
    }

    fn bing_hopf_system() -> SConstraintSystem {
        SConstraintSystem {
            links: vec![link("Hopf+", 2), link("Hopf-", 2), link("B", 2)],
            constraints: vec![
                SConstraint::PositiveDiagram { link: "Hopf+".into(), crossings: 2, circles: 2 },
                SConstraint::Cobordism { from: "B".into(), to: "Hopf+".into(), chi: -2 },
                SConstraint::Known { link: "Hopf-".into(), value: -1 },
                SConstraint::Cobordism { from: "Hopf-".into(), to: "B".into(), chi: -2 },
                SConstraint::Parity { link: "B".into() },
            ],
        }
    }

    #[test]
    fn bing_double_is_plus_or_minus_one() {
        let out = solve(&bing_hopf_system()).unwrap();
        assert_eq!(out.domains().unwrap()["B"].values(), Some(vec![-1, 1]));
        assert!(!out.trace().is_empty());
    }

    #[test]
    fn whitehead_fact_pins_bing_double() {
        let mut sys = bing_hopf_system();
        sys.links.push(link("Wh", 1));
        let sys = sys
            .with(SConstraint::Known { link: "Wh".into(), value: 2 })
            .with(SConstraint::Cobordism { from: "B".into(), to: "Wh".into(), chi: -1 });
        assert_eq!(solve(&sys).unwrap().domains().unwrap()["B"].values(), Some(vec![1]));
    }

    #[test]
    fn unlink_value() {
        let sys = SConstraintSystem {
            links: vec![link("U2", 2)],
            constraints: vec![SConstraint::PositiveDiagram { link: "U2".into(), crossings: 0, circles: 2 }],
        };
        assert_eq!(solve(&sys).unwrap().domains().unwrap()["U2"].values(), Some(vec![-1]));
    }

    #[test]
    fn parity_alone_is_a_residue_class() {
        for m in 1..=5u32 {
            let sys = SConstraintSystem { links: vec![link("L", m)], constraints: vec![SConstraint::Parity { link: "L".into() }] };
            let d = solve(&sys).unwrap().domains().unwrap()["L"];
            assert_eq!(d.values(), None);
            assert_eq!(d.parity, Some(((m - 1) % 2) as u8));
            assert_eq!(d.to_string(), if m % 2 == 1 { "(-inf, +inf) even" } else { "(-inf, +inf) odd" });
        }
    }

    #[test]
    fn whitehead_scenarios() {
        let ScenarioReport::Pairs { pairs, .. } = scenario_whitehead(&[]).unwrap() else { panic!() };
        assert_eq!(pairs, vec![(-1, 0), (1, 0), (1, 2)]);
        let wh2 = SConstraint::Known { link: "Wh".into(), value: 2 };
        let ScenarioReport::Pairs { pairs, .. } = scenario_whitehead(std::slice::from_ref(&wh2)).unwrap() else { panic!() };
        assert_eq!(pairs, vec![(1, 2)]);
        let bad = scenario_whitehead(&[wh2, SConstraint::Known { link: "B".into(), value: -1 }]).unwrap();
        let ScenarioReport::Inconsistent { chain, .. } = bad else { panic!("expected inconsistency") };
        assert!(chain.iter().any(|(_, s)| s == "|s(B) - s(Wh)| <= 1"));
    }

    #[test]
    fn rejects_malformed_systems() {
        let mut sys = bing_hopf_system();
        sys.constraints.push(SConstraint::Known { link: "X".into(), value: 0 });
        assert!(matches!(solve(&sys), Err(SCalcError::UnknownLink { index: 5, .. })));
        let sys = bing_hopf_system().with(SConstraint::Cobordism { from: "B".into(), to: "Hopf+".into(), chi: 1 });
        assert!(matches!(solve(&sys), Err(SCalcError::PositiveChi { .. })));
    }

    #[test]
    fn json_format() {
        let text = r#"{"links":[{"name":"U2","components":2}],
            "constraints":[{"type":"positive_diagram","link":"U2","crossings":0,"circles":2},{"type":"parity","link":"U2"}]}"#;
        let sys: SConstraintSystem = serde_json::from_str(text).unwrap();
        assert_eq!(sys.constraints.len(), 2);
        let out = serde_json::to_value(solve(&sys).unwrap()).unwrap();
        assert_eq!(out["status"], "solved");
        assert_eq!(out["domains"]["U2"]["lo"], -1);
    }
}
