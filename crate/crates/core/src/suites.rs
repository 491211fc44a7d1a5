//! Verification suites: each runs one family of checks over a quiver and reports
//! pass/fail per check, with the offending modules dumped on failure.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;

use crate::artheory::{gamma_l, verify_bijection};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::kqrep::{decompose, iso_test, knit_ar_quiver, ArNode, Module, Rep};
use crate::lambda::{eta, ext1_lambda, ghost_maps, homology, sample, sgp_witness, DiffRep, GhostContext};
use crate::quiver::{Quiver, RootType};
use crate::text::{diffrep_to_text, rep_to_text};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// `H` and `η` are mutually inverse on indecomposables; `H` is full.
    Bijection,
    /// Ghost maps between indecomposables factor through the generating ghosts.
    GhostGeneration,
    /// Every indecomposable perfect module is the kernel of a square-zero map `P → P`.
    GorensteinWitness,
    /// Homology dimension vectors are positive roots.
    HomologyRoots,
    /// On random modules: perfect iff `Ext¹(M, Λ) = 0`.
    PerfectExt,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Bijection, Suite::GhostGeneration, Suite::GorensteinWitness, Suite::HomologyRoots, Suite::PerfectExt];

    /// Default for [`SuiteConfig::random`].
    pub fn default_random(self) -> usize {
        match self {
            Suite::Bijection => 3,
            Suite::HomologyRoots => 50,
            Suite::PerfectExt => 200,
            Suite::GhostGeneration | Suite::GorensteinWitness => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Bijection => "theorem2",
            Suite::GhostGeneration => "theorem3",
            Suite::GorensteinWitness => "sgp",
            Suite::HomologyRoots => "kac",
            Suite::PerfectExt => "lemma21",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse { line: 0, message: format!("unknown suite `{s}`") })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub field: Field,
    pub trials: usize,
    /// Size of the randomized corpus (`lemma21`, `kac` off Dynkin type) or the number
    /// of perturbed copies per module (`theorem2`).
    pub random: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { field: Field::default(), trials: 64, random: 200 }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Counterexample text, empty on success.
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub quiver: String,
    pub field: Field,
    pub checks: Vec<Check>,
    /// Extra `key: value` lines.
    pub table: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, q: &Quiver, field: Field) -> SuiteReport {
        SuiteReport { suite, quiver: q.name().to_string(), field, checks: Vec::new(), table: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) {
        let detail = if passed { String::new() } else { detail() };
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn passed(&self) -> bool {
        self.passed_count() == self.checks.len()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite: {}\nquiver: {}\nfield: {}\n", self.suite, self.quiver, self.field);
        for row in &self.table {
            out.push_str(row);
            out.push('\n');
        }
        for c in &self.checks {
            out.push_str(&format!("check {}: {}\n", c.name, if c.passed { "pass" } else { "FAIL" }));
            for line in c.detail.lines() {
                out.push_str(&format!("  {line}\n"));
            }
        }
        out.push_str(&format!(
            "summary: {}/{} passed\nresult: {}\n",
            self.passed_count(),
            self.checks.len(),
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }
}

pub fn run_suite<R: Rng + ?Sized>(
    suite: Suite,
    q: &Arc<Quiver>,
    config: &SuiteConfig,
    rng: &mut R,
) -> Result<SuiteReport> {
    match suite {
        Suite::Bijection => bijection(q, config, rng),
        Suite::GhostGeneration => ghost_generation(q, config, rng),
        Suite::GorensteinWitness => gorenstein_witness(q, config, rng),
        Suite::HomologyRoots => homology_roots(q, config, rng),
        Suite::PerfectExt => perfect_ext(q, config, rng),
    }
}

fn bijection<R: Rng + ?Sized>(q: &Arc<Quiver>, c: &SuiteConfig, rng: &mut R) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Bijection, q, c.field);
    let bij = verify_bijection(q, c.field, rng, c.trials)?;
    report.table.push(format!("objects: {}", bij.objects));
    report.table.push(format!("fullness_pairs: {}", bij.fullness_pairs));
    report.check("bijection", bij.ok(), || bij.mismatches.join("\n"));
    let g0 = knit_ar_quiver(q, c.field)?;
    for node in &g0.nodes {
        let m = eta(&node.module).module;
        let mut ok = true;
        let mut bad = None;
        for _ in 0..c.random.max(1) {
            let m2 = sample::scramble(&m, rng);
            let back = eta(&homology(&m2).module).module;
            if iso_test(&back, &m2, rng, c.trials).is_none() {
                ok = false;
                bad = Some(m2);
                break;
            }
        }
        report
            .check(format!("roundtrip {}", gamma_label(node)), ok, || diffrep_to_text(&bad.expect("failure recorded")));
    }
    Ok(report)
}

fn ghost_generation<R: Rng + ?Sized>(q: &Arc<Quiver>, c: &SuiteConfig, rng: &mut R) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::GhostGeneration, q, c.field);
    let ar = gamma_l(q, c.field)?;
    let ctx = GhostContext::new(q, c.field);
    let (mut maps, mut refined) = (0, 0);
    for a in &ar.nodes {
        for b in &ar.nodes {
            let ghosts = ghost_maps(&a.module, &b.module);
            if ghosts.is_empty() {
                continue;
            }
            let mut failure = None;
            for g in &ghosts {
                match ctx.factor(g, rng, c.trials) {
                    Ok(fac) if fac.verify() => {
                        maps += 1;
                        refined += usize::from(!fac.used_full_set);
                    }
                    Ok(_) => failure = Some("recomposition differs from the map".to_string()),
                    Err(e) => failure = Some(e.to_string()),
                }
            }
            report.check(
                format!("factor {} -> {} ({} maps)", a.label, b.label, ghosts.len()),
                failure.is_none(),
                || failure.unwrap_or_default(),
            );
        }
    }
    report.table.push(format!("ghost_maps: {maps}"));
    report.table.push(format!("refined_generators: {refined}"));
    Ok(report)
}

fn gorenstein_witness<R: Rng + ?Sized>(q: &Arc<Quiver>, c: &SuiteConfig, rng: &mut R) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::GorensteinWitness, q, c.field);
    let g0 = knit_ar_quiver(q, c.field)?;
    report.table.push("table: module |M| |P| 2|M|".into());
    for node in &g0.nodes {
        let m = eta(&node.module).module;
        let (ok, detail) = match sgp_witness(&m, rng, c.trials) {
            Ok(w) => {
                let (dm, dp) = (m.total_dim(), w.p_module.total_dim());
                report.table.push(format!("row: {} {dm} {dp} {}", gamma_label(node), 2 * dm));
                (w.verify() && dp == 2 * dm, format!("|P| = {dp}, |M| = {dm}"))
            }
            Err(e) => (false, e.to_string()),
        };
        report.check(format!("witness {}", gamma_label(node)), ok, || format!("{detail}\n{}", diffrep_to_text(&m)));
    }
    Ok(report)
}

/// The label of `ηN` in `Γ(L)`.
fn gamma_label(node: &ArNode<Rep>) -> String {
    if node.module.is_projective() {
        node.label.clone()
    } else {
        format!("η{}", node.label)
    }
}

fn dims_i64<M: Module>(m: &M) -> Vec<i64> {
    m.dims().iter().map(|&d| d as i64).collect()
}

fn homology_roots<R: Rng + ?Sized>(q: &Arc<Quiver>, c: &SuiteConfig, rng: &mut R) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::HomologyRoots, q, c.field);
    let corpus: Vec<(String, DiffRep)> = if q.is_dynkin() {
        knit_ar_quiver(q, c.field)?.nodes.iter().map(|n| (gamma_label(n), eta(&n.module).module)).collect()
    } else {
        let mut out = Vec::new();
        for i in 0..c.random {
            let m = sample::random_perfect(q, c.field, rng, 2);
            for (k, piece) in decompose(&m, rng, c.trials).pieces.into_iter().enumerate() {
                if !homology(&piece).module.is_zero() {
                    out.push((format!("random{i}.{k}"), piece));
                }
            }
        }
        out
    };
    let mut realized: Vec<Vec<i64>> = Vec::new();
    for (label, m) in &corpus {
        let h = homology(m).module;
        let d = dims_i64(&h);
        let t = q.root_type(&d)?;
        report.check(format!("root {label} {d:?}"), t != RootType::NotARoot, || format!("{t}\n{}", rep_to_text(&h)));
        realized.push(d);
    }
    if q.is_dynkin() {
        for r in q.positive_roots()? {
            let n = realized.iter().filter(|d| **d == r).count();
            report.check(format!("realized {r:?}"), n == 1, || format!("{n} modules realize it"));
        }
    }
    report.table.push(format!("modules: {}", corpus.len()));
    Ok(report)
}

fn perfect_ext<R: Rng + ?Sized>(q: &Arc<Quiver>, c: &SuiteConfig, rng: &mut R) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::PerfectExt, q, c.field);
    let (mut perfect, mut other) = (0, 0);
    for i in 0..c.random {
        let m = sample::random_diffrep(q, c.field, rng, 2);
        let p = m.is_perfect();
        let e = ext1_lambda(&m);
        if p {
            perfect += 1;
        } else {
            other += 1;
        }
        if p != (e == 0) {
            report.check(format!("sample {i}"), false, || format!("perfect: {p}, ext1: {e}\n{}", diffrep_to_text(&m)));
        }
    }
    report.check(format!("perfect iff ext1 = 0 on {} samples", c.random), report.checks.is_empty(), String::new);
    report.table.push(format!("perfect: {perfect}"));
    report.table.push(format!("not_perfect: {other}"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn suites_pass_on_a3() {
        let q = Arc::new(catalog::a3());
        let config = SuiteConfig { random: 20, trials: 16, ..SuiteConfig::default() };
        for s in Suite::ALL {
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            let r = run_suite(s, &q, &config, &mut rng).unwrap();
            assert!(r.passed(), "{}", r.to_text());
            assert!(!r.checks.is_empty());
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn kac_off_dynkin() {
        let q = Arc::new(catalog::kronecker());
        let config = SuiteConfig { random: 10, trials: 16, ..SuiteConfig::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = run_suite(Suite::HomologyRoots, &q, &config, &mut rng).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(matches!(run_suite(Suite::Bijection, &q, &config, &mut rng), Err(Error::NotRepresentationFinite(_))));
    }

    #[test]
    fn failure_lines() {
        let q = catalog::a2();
        let mut r = SuiteReport::new(Suite::GorensteinWitness, &q, Field::default());
        r.check("x", false, || "line one\nline two".into());
        let t = r.to_text();
        assert!(t.contains("check x: FAIL\n  line one\n  line two\n"));
        assert!(t.ends_with("summary: 0/1 passed\nresult: fail\n"));
    }
}
