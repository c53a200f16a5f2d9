//! Exhaustive self-checks behind `unimap check`. Each suite returns a
//! report; the first failure stops the suite and carries the offending
//! object as JSON.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::bijection::{close_psi, intertwined_nodes, open_phi, opening_sequences};
use crate::enumerate::{
    catalan, count_by_genus, count_dominant_schemes, count_marked_trees, dominant_schemes,
    double_factorial_odd, enum_dominant, enum_trees_with_triples, enum_unicellular,
    eq_doublerooting_check, factorial, half_t, marked_trees, doubly_marked_trees, EnumOptions,
};
use crate::error::{Error, Result};
use crate::io::{ClosedMapFile, MapFile, TreeWithTriplesFile, WellLabelledFile};
use crate::labelled::{
    all_increments, all_labellings, labelled_phi, labelled_psi, series_checks, LabelledMap,
    WellLabelledTriples, DEFAULT_SERIES_BOUND,
};
use crate::perm::CombMap;
use crate::surgery::{glue_halfedges, reglue_spec, slice_vertex, SliceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Surgery,
    Bijection,
    Counts,
    Labelled,
    Series,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Surgery => "surgery",
            Suite::Bijection => "bijection",
            Suite::Counts => "counts",
            Suite::Labelled => "labelled",
            Suite::Series => "series",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub lines: Vec<CheckLine>,
    pub counterexample: Option<Value>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            lines: Vec::new(),
            counterexample: None,
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.lines.push(CheckLine {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>, example: Value) {
        self.push(name, false, detail);
        self.counterexample = Some(example);
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            let tag = if l.passed { "PASS" } else { "FAIL" };
            writeln!(s, "{tag} {} {}: {}", self.suite.as_str(), l.name, l.detail).unwrap();
        }
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(s, "{tag} suite {}", self.suite.as_str()).unwrap();
        s
    }
}

pub fn run_suite(suite: Suite, g: u32, n_max: u32, opts: &EnumOptions) -> Result<SuiteReport> {
    match suite {
        Suite::Surgery => surgery(g, n_max, opts),
        Suite::Bijection => bijection(g, n_max, opts),
        Suite::Counts => counts(g, n_max, opts),
        Suite::Labelled => labelled(g, n_max, opts),
        Suite::Series => series(n_max),
    }
}

fn map_json(m: &CombMap) -> Value {
    serde_json::to_value(MapFile::from_map(m, None)).unwrap()
}

fn fiber(g: u32) -> BigUint {
    BigUint::from(2u32).pow(g) * factorial(g as u64)
}

/// Slice every vertex of every genus-`g` unicellular map with at most
/// `n_max` edges along every cut set of size at least 2, and glue back.
pub fn surgery(g: u32, n_max: u32, opts: &EnumOptions) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Surgery);
    for n in (2 * g).max(1)..=n_max {
        let mut cases = 0u64;
        for m in enum_unicellular(g, n, opts)? {
            for v in m.vertices() {
                let cycle = m.vertex_cycle(v)?;
                let d = cycle.len();
                if d > 16 {
                    continue;
                }
                for mask in 1u32..(1 << d) {
                    if mask.count_ones() < 2 {
                        continue;
                    }
                    let cut: Vec<u32> = (0..d).filter(|j| mask >> j & 1 == 1).map(|j| cycle[j]).collect();
                    let spec = SliceSpec::new(v, cut.iter().copied());
                    let sliced = slice_vertex(&m, &spec)?;
                    let back = glue_halfedges(&sliced, &reglue_spec(&m, &spec)?)?;
                    cases += 1;
                    let vertices_ok = sliced.vertex_count() == m.vertex_count() + cut.len() - 1;
                    if back != *m.map() || !vertices_ok {
                        r.fail(
                            format!("slice/glue n={n}"),
                            format!("vertex {v}, cut {cut:?}"),
                            json!({"map": map_json(&m), "vertex": v.0, "cut": cut}),
                        );
                        return Ok(r);
                    }
                }
            }
        }
        r.push(format!("slice/glue n={n}"), true, format!("{cases} cases"));
    }
    Ok(r)
}

/// Exhaustive Φ/Ψ roundtrips and fiber counts for genus `g`.
pub fn bijection(g: u32, n_max: u32, opts: &EnumOptions) -> Result<SuiteReport> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { g, n: n_max });
    }
    let mut r = SuiteReport::new(Suite::Bijection);
    for n in 2 * g..=n_max {
        let maps = enum_dominant(g, n, opts)?;
        let trees = enum_trees_with_triples(g as usize, n as usize, opts)?;
        let expect = fiber(g) * maps.len();
        if !r.push(
            format!("|T| = 2^g g! |U*| n={n}"),
            BigUint::from(trees.len()) == expect,
            format!("{} vs {}", trees.len(), expect),
        ) {
            return Ok(r);
        }
        for m in &maps {
            let nodes = intertwined_nodes(m)?;
            if nodes.len() != 2 * g as usize {
                r.fail(
                    format!("intertwined nodes n={n}"),
                    format!("{} nodes", nodes.len()),
                    map_json(m),
                );
                return Ok(r);
            }
            for seq in opening_sequences(m)? {
                let tc = open_phi(m, &seq)?;
                let ok = close_psi(&tc).map(|(b, s)| &b == m && s == seq).unwrap_or(false);
                if !ok {
                    r.fail(
                        format!("psi(phi) n={n}"),
                        "roundtrip differs",
                        serde_json::to_value(ClosedMapFile::from_value(m, &seq)).unwrap(),
                    );
                    return Ok(r);
                }
            }
        }
        for tc in &trees {
            let ok = close_psi(tc)
                .and_then(|(m, s)| open_phi(&m, &s))
                .map(|b| &b == tc)
                .unwrap_or(false);
            if !ok {
                r.fail(
                    format!("phi(psi) n={n}"),
                    "roundtrip differs",
                    serde_json::to_value(TreeWithTriplesFile::from_value(tc)).unwrap(),
                );
                return Ok(r);
            }
        }
        r.push(
            format!("roundtrips n={n}"),
            true,
            format!("{} maps, {} trees with triples", maps.len(), trees.len()),
        );
    }
    Ok(r)
}

/// Genus partition, tree classes and the scheme decomposition identity.
pub fn counts(g: u32, n_max: u32, opts: &EnumOptions) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Counts);
    for n in 1..=n_max {
        let by_genus = count_by_genus(n, opts)?;
        let total: BigUint = by_genus.iter().sum();
        r.push(
            format!("sum over genus n={n}"),
            total == double_factorial_odd(n as u64),
            format!("{total}"),
        );
        r.push(
            format!("genus 0 is Catalan n={n}"),
            by_genus[0] == catalan(n as u64),
            format!("{}", by_genus[0]),
        );
        let t = doubly_marked_trees(n as usize).len();
        r.push(
            format!("|T_n| = C(2n,n)/2 n={n}"),
            BigUint::from(t) == half_t(n as u64)?,
            format!("{t}"),
        );
        if g > 0 && n + 1 >= 3 * g {
            let brute = count_marked_trees(g as usize, n as usize);
            r.push(
                format!("marked trees g={g} n={n}"),
                BigUint::from(brute) == marked_trees(g as u64, n as u64)?,
                format!("{brute}"),
            );
        }
    }
    if g > 0 {
        for row in eq_doublerooting_check(g, n_max, opts)? {
            r.push(
                format!("scheme decomposition g={g} n={}", row.n),
                row.agrees(),
                format!("{}", row.brute_force),
            );
        }
        if 6 * g - 3 <= n_max {
            let brute = count_dominant_schemes(g, opts)?;
            let formula = dominant_schemes(g as u64)?;
            r.push(format!("dominant schemes g={g}"), brute == formula, format!("{brute} vs {formula}"));
        }
    }
    Ok(r)
}

/// Labelled Φ/Ψ: fiber counts and roundtrips over all labellings.
pub fn labelled(g: u32, n_max: u32, opts: &EnumOptions) -> Result<SuiteReport> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { g, n: n_max });
    }
    let mut r = SuiteReport::new(Suite::Labelled);
    for n in 2 * g..=n_max {
        let mut maps = 0u64;
        for m in enum_dominant(g, n, opts)? {
            let seqs = opening_sequences(&m)?;
            for l in all_labellings(&m) {
                maps += 1;
                let lm = LabelledMap::new(m.clone(), l)?;
                for seq in &seqs {
                    let w = labelled_phi(&lm, seq)?;
                    let ok = labelled_psi(&w).map(|(b, s)| b == lm && &s == seq).unwrap_or(false);
                    if !ok {
                        r.fail(
                            format!("labelled psi(phi) n={n}"),
                            "roundtrip differs",
                            json!({
                                "map": serde_json::to_value(crate::io::LabelledMapFile::from_value(&lm)).unwrap(),
                                "sequence": seq.nodes.iter().map(|v| v.0).collect::<Vec<_>>(),
                            }),
                        );
                        return Ok(r);
                    }
                }
            }
        }
        let mut trees = 0u64;
        let incs = all_increments(n as usize);
        for tc in enum_trees_with_triples(g as usize, n as usize, opts)? {
            for inc in &incs {
                let Ok(w) = WellLabelledTriples::new(tc.clone(), inc.clone()) else {
                    continue;
                };
                trees += 1;
                let ok = labelled_psi(&w)
                    .and_then(|(m, s)| labelled_phi(&m, &s))
                    .map(|b| b == w)
                    .unwrap_or(false);
                if !ok {
                    r.fail(
                        format!("labelled phi(psi) n={n}"),
                        "roundtrip differs",
                        serde_json::to_value(WellLabelledFile::from_value(&w)).unwrap(),
                    );
                    return Ok(r);
                }
            }
        }
        let expect = fiber(g) * maps;
        r.push(
            format!("|W| = 2^g g! |L*| n={n}"),
            BigUint::from(trees) == expect,
            format!("{trees} vs {expect}"),
        );
    }
    Ok(r)
}

/// Coefficient identities up to order `n_max`, brute force up to 6.
pub fn series(n_max: u32) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Series);
    let report = series_checks(n_max as usize, DEFAULT_SERIES_BOUND, (n_max as usize).min(6))?;
    for c in report.checks {
        r.push(c.name, c.passed, format!("order {}", c.order));
    }
    Ok(r)
}
