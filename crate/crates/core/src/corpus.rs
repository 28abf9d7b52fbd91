//! Random instance generation, parallel verification with a pass/fail
//! matrix, and greedy shrinking of failing instances.

use std::collections::BTreeMap;

use num::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cq::{CheckResult, Outcome, PointAnalysis};
use crate::error::{Error, Result};
use crate::geometry::rat::{self, Rat};
use crate::geometry::{Constraint, HPolyhedron, NormKind};
use crate::instance::InstanceDoc;
use crate::plfunc::{is_boundary_point, AffineAtom, PLExpr, PLFunction};
use crate::report::ENGINE_VERSION;

pub const MAX_ATOMS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceClass {
    /// Finite-valued max/min trees.
    Lipschitz,
    /// Trees on a polyhedral domain, or with restricted branches, whose
    /// basepoint sits on the domain boundary.
    Extended,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub count: usize,
    /// Each instance draws its dimension uniformly from `min_dim..=max_dim`.
    pub min_dim: usize,
    pub max_dim: usize,
    pub seed: u64,
    pub class: InstanceClass,
    pub norm: NormKind,
}

impl GeneratorConfig {
    pub fn new(count: usize, dim: usize, seed: u64) -> Self {
        GeneratorConfig {
            count,
            min_dim: dim,
            max_dim: dim,
            seed,
            class: InstanceClass::Lipschitz,
            norm: NormKind::Linf,
        }
    }

    pub fn dims(mut self, min_dim: usize, max_dim: usize) -> Self {
        self.min_dim = min_dim;
        self.max_dim = max_dim;
        self
    }

    pub fn class(mut self, class: InstanceClass) -> Self {
        self.class = class;
        self
    }

    pub fn norm(mut self, norm: NormKind) -> Self {
        self.norm = norm;
        self
    }
}

fn instance_rng(seed: u64, index: usize, class: InstanceClass) -> ChaCha8Rng {
    let salt = match class {
        InstanceClass::Lipschitz => 0x4C49_5053,
        InstanceClass::Extended => 0x4558_5445,
    };
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((index as u64) << 20) ^ salt)
}

fn half_integer(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    rat::rat(rng.gen_range(-2 * bound..=2 * bound), 2)
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
    loop {
        let v: Vec<Rat> = (0..dim).map(|_| half_integer(rng, 2)).collect();
        if !rat::is_zero(&v) {
            return v;
        }
    }
}

fn random_atom(rng: &mut ChaCha8Rng, dim: usize) -> PLExpr {
    let g = (0..dim).map(|_| half_integer(rng, 2)).collect();
    // mostly through the origin, so many pieces meet at the basepoint
    let c = if rng.gen_bool(0.8) { Rat::zero() } else { half_integer(rng, 1) };
    PLExpr::atom(g, c)
}

fn random_tree(rng: &mut ChaCha8Rng, dim: usize, atoms: usize) -> PLExpr {
    if atoms == 1 {
        return random_atom(rng, dim);
    }
    let parts = rng.gen_range(2..=atoms.min(3));
    let mut sizes = vec![1; parts];
    for _ in parts..atoms {
        let i = rng.gen_range(0..parts);
        sizes[i] += 1;
    }
    let children = sizes.into_iter().map(|k| random_tree(rng, dim, k)).collect();
    if rng.gen_bool(0.5) {
        PLExpr::Max(children)
    } else {
        PLExpr::Min(children)
    }
}

fn shift_expr(e: &PLExpr, by: &Rat) -> PLExpr {
    match e {
        PLExpr::Atom(a) => PLExpr::Atom(AffineAtom::new(a.g.clone(), &a.c - by)),
        PLExpr::Max(ch) => PLExpr::Max(ch.iter().map(|c| shift_expr(c, by)).collect()),
        PLExpr::Min(ch) => PLExpr::Min(ch.iter().map(|c| shift_expr(c, by)).collect()),
        PLExpr::Restrict { domain, expr } => PLExpr::Restrict {
            domain: domain.clone(),
            expr: Box::new(shift_expr(expr, by)),
        },
    }
}

/// Halfspaces through the origin.
fn random_cone(rng: &mut ChaCha8Rng, dim: usize, rows: usize) -> HPolyhedron {
    let mut p = HPolyhedron::universe(dim);
    for _ in 0..rows {
        p = p.with_ineq(random_vector(rng, dim), Rat::zero());
    }
    p
}

fn candidate(rng: &mut ChaCha8Rng, dim: usize, class: InstanceClass) -> Option<(PLExpr, Option<HPolyhedron>)> {
    let atoms = rng.gen_range(2..=MAX_ATOMS.min(2 + 3 * dim));
    match class {
        InstanceClass::Lipschitz => Some((random_tree(rng, dim, atoms), None)),
        InstanceClass::Extended => {
            if rng.gen_bool(0.5) {
                let rows = rng.gen_range(1..=dim.min(2));
                let domain = random_cone(rng, dim, rows);
                let atoms = rng.gen_range(1..=atoms.min(6));
                Some((random_tree(rng, dim, atoms), Some(domain)))
            } else {
                // a lower semicontinuous jump: two branches on closed cones
                let a = random_cone(rng, dim, 1);
                let rows = rng.gen_range(1..=dim.min(2));
                let b = random_cone(rng, dim, rows);
                let (ka, kb) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
                let left = PLExpr::Restrict {
                    domain: a,
                    expr: Box::new(random_tree(rng, dim, ka)),
                };
                let right = PLExpr::Restrict {
                    domain: b,
                    expr: Box::new(random_tree(rng, dim, kb)),
                };
                Some((PLExpr::Min(vec![left, right]), None))
            }
        }
    }
}

/// One instance with `φ(0) = 0` and the origin on the boundary of the
/// solution set; `None` if no such instance was drawn.
fn generate_one(seed: u64, index: usize, cfg: &GeneratorConfig) -> Option<InstanceDoc> {
    let mut rng = instance_rng(seed, index, cfg.class);
    let dim = rng.gen_range(cfg.min_dim..=cfg.max_dim);
    let origin = rat::zeros(dim);
    for _ in 0..64 {
        let Some((expr, domain)) = candidate(&mut rng, dim, cfg.class) else { continue };
        let Some(v0) = expr.eval(&origin) else { continue };
        let expr = shift_expr(&expr, &v0);
        let Ok(f) = PLFunction::new(dim, expr, domain) else { continue };
        if !f.in_domain(&origin) {
            continue;
        }
        if cfg.class == InstanceClass::Extended && f.is_lipschitz_at(&origin) {
            continue;
        }
        if !is_boundary_point(&f.solution_set(), &origin) {
            continue;
        }
        let mut doc = InstanceDoc::new(&f, vec![origin], cfg.norm);
        doc.seed = Some(seed);
        return Some(doc);
    }
    None
}

/// `cfg.count` instances, named `gen-00000`, `gen-00001`, ...
pub fn generate(cfg: &GeneratorConfig) -> Vec<(String, InstanceDoc)> {
    let mut out = Vec::with_capacity(cfg.count);
    let mut index = 0;
    while out.len() < cfg.count {
        if let Some(doc) = generate_one(cfg.seed, index, cfg) {
            out.push((format!("gen-{:05}", out.len()), doc));
        }
        index += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointChecks {
    pub basepoint: Vec<String>,
    pub on_boundary: bool,
    pub lipschitz: bool,
    pub checks: BTreeMap<String, CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PointOutcome {
    Checked(PointChecks),
    Skipped { basepoint: Vec<String>, reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceOutcome {
    pub id: String,
    pub points: Vec<PointOutcome>,
}

impl InstanceOutcome {
    pub fn checked(&self) -> impl Iterator<Item = &PointChecks> {
        self.points.iter().filter_map(|p| match p {
            PointOutcome::Checked(c) => Some(c),
            PointOutcome::Skipped { .. } => None,
        })
    }

    /// Failing `(basepoint index, check id)` pairs.
    pub fn failures(&self) -> Vec<(usize, String)> {
        let mut out = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if let PointOutcome::Checked(c) = p {
                for (k, r) in &c.checks {
                    if r.outcome == Outcome::Fail {
                        out.push((i, k.clone()));
                    }
                }
            }
        }
        out
    }

    /// Worst outcome for one check over all basepoints: fail, then pass,
    /// then not applicable.
    pub fn outcome(&self, check: &str) -> Option<Outcome> {
        let mut best = None;
        for c in self.checked() {
            match c.checks.get(check).map(|r| r.outcome) {
                Some(Outcome::Fail) => return Some(Outcome::Fail),
                Some(Outcome::Pass) => best = Some(Outcome::Pass),
                Some(Outcome::NotApplicable) if best.is_none() => best = Some(Outcome::NotApplicable),
                _ => {}
            }
        }
        best
    }
}

pub fn check_point(f: &PLFunction, x: &[Rat], norm: NormKind) -> PointOutcome {
    let basepoint = x.iter().map(Rat::to_string).collect();
    match PointAnalysis::new(f, x, &crate::instance::norm_spec(norm)) {
        Ok(a) => PointOutcome::Checked(PointChecks {
            basepoint,
            on_boundary: a.on_boundary,
            lipschitz: a.lipschitz,
            checks: a.theorem_checks().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }),
        Err(e) => PointOutcome::Skipped {
            basepoint,
            reason: e.to_string(),
        },
    }
}

pub fn check_instance(id: &str, doc: &InstanceDoc) -> Result<InstanceOutcome> {
    let f = doc.function()?;
    Ok(InstanceOutcome {
        id: id.to_string(),
        points: doc.basepoints.iter().map(|x| check_point(&f, x, doc.norm)).collect(),
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub instance_id: String,
    pub basepoint: Vec<String>,
    pub check: String,
    pub detail: String,
    pub instance: InstanceDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub engine_version: &'static str,
    pub instances: usize,
    pub checked_points: usize,
    /// Instance ids in column order.
    pub columns: Vec<String>,
    /// One row per check: `P` pass, `F` fail, `.` not applicable or no
    /// checked basepoint.
    pub matrix: BTreeMap<String, String>,
    pub counts: BTreeMap<String, Counts>,
    pub outcomes: Vec<InstanceOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.counts.values().all(|c| c.fail == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summaries always serialize")
    }

    /// Human-readable matrix, one line per check.
    pub fn table(&self) -> String {
        let width = self.matrix.keys().map(String::len).max().unwrap_or(0);
        let mut out = format!(
            "{} instances, {} checked basepoints\n",
            self.instances, self.checked_points
        );
        for (k, row) in &self.matrix {
            let c = self.counts[k];
            out.push_str(&format!(
                "{k:<width$}  pass {:>4}  fail {:>4}  n/a {:>4}  {row}\n",
                c.pass, c.fail, c.not_applicable
            ));
        }
        out
    }
}

/// Runs every theorem check on every instance in parallel; results keep
/// the input order. A failure is shrunk into a counterexample.
pub fn verify_corpus(instances: &[(String, InstanceDoc)]) -> Result<VerifySummary> {
    let outcomes: Vec<InstanceOutcome> = instances
        .par_iter()
        .map(|(id, doc)| check_instance(id, doc))
        .collect::<Result<_>>()?;
    let mut check_ids: Vec<String> = outcomes
        .iter()
        .flat_map(|o| o.checked().flat_map(|c| c.checks.keys().cloned()).collect::<Vec<_>>())
        .collect();
    check_ids.sort();
    check_ids.dedup();
    let mut matrix = BTreeMap::new();
    let mut counts = BTreeMap::new();
    for k in &check_ids {
        let mut row = String::with_capacity(outcomes.len());
        let mut c = Counts::default();
        for o in &outcomes {
            for p in o.checked() {
                match p.checks.get(k).map(|r| r.outcome) {
                    Some(Outcome::Pass) => c.pass += 1,
                    Some(Outcome::Fail) => c.fail += 1,
                    Some(Outcome::NotApplicable) => c.not_applicable += 1,
                    None => {}
                }
            }
            row.push(match o.outcome(k) {
                Some(Outcome::Pass) => 'P',
                Some(Outcome::Fail) => 'F',
                _ => '.',
            });
        }
        matrix.insert(k.clone(), row);
        counts.insert(k.clone(), c);
    }
    let counterexample = outcomes
        .iter()
        .zip(instances)
        .find_map(|(o, (id, doc))| o.failures().into_iter().next().map(|(i, check)| (id, doc, i, check)))
        .map(|(id, doc, i, check)| {
            let small = minimize(doc, i, &check);
            let detail = failing_detail(&small, 0, &check).unwrap_or_default();
            Counterexample {
                instance_id: id.clone(),
                basepoint: small.basepoints[0].iter().map(Rat::to_string).collect(),
                check,
                detail,
                instance: small,
            }
        });
    Ok(VerifySummary {
        engine_version: ENGINE_VERSION,
        instances: instances.len(),
        checked_points: outcomes.iter().map(|o| o.checked().count()).sum(),
        columns: instances.iter().map(|(id, _)| id.clone()).collect(),
        matrix,
        counts,
        outcomes,
        counterexample,
    })
}

/// The failure detail when `check` still fails at basepoint `i`.
fn failing_detail(doc: &InstanceDoc, i: usize, check: &str) -> Option<String> {
    let f = doc.function().ok()?;
    let x = doc.basepoints.get(i)?;
    match check_point(&f, x, doc.norm) {
        PointOutcome::Checked(c) => c
            .checks
            .get(check)
            .filter(|r| r.outcome == Outcome::Fail)
            .map(|r| r.detail.clone()),
        PointOutcome::Skipped { .. } => None,
    }
}

/// Smaller variants of an expression, one edit each.
fn shrink_expr(e: &PLExpr) -> Vec<PLExpr> {
    let mut out = Vec::new();
    match e {
        PLExpr::Atom(a) => {
            for i in 0..a.g.len() {
                if !a.g[i].is_zero() {
                    let mut g = a.g.clone();
                    g[i] = Rat::zero();
                    out.push(PLExpr::atom(g, a.c.clone()));
                }
            }
        }
        PLExpr::Max(ch) | PLExpr::Min(ch) => {
            let rebuild = |v: Vec<PLExpr>| match e {
                PLExpr::Max(_) => PLExpr::Max(v),
                _ => PLExpr::Min(v),
            };
            out.extend(ch.iter().cloned());
            if ch.len() > 2 {
                for i in 0..ch.len() {
                    let mut v = ch.clone();
                    v.remove(i);
                    out.push(rebuild(v));
                }
            }
            for i in 0..ch.len() {
                for smaller in shrink_expr(&ch[i]) {
                    let mut v = ch.clone();
                    v[i] = smaller;
                    out.push(rebuild(v));
                }
            }
        }
        PLExpr::Restrict { domain, expr } => {
            out.push((**expr).clone());
            for i in 0..domain.ineqs.len() {
                let mut d = domain.clone();
                d.ineqs.remove(i);
                out.push(PLExpr::Restrict {
                    domain: d,
                    expr: expr.clone(),
                });
            }
            for smaller in shrink_expr(expr) {
                out.push(PLExpr::Restrict {
                    domain: domain.clone(),
                    expr: Box::new(smaller),
                });
            }
        }
    }
    out
}

fn shrink_doc(doc: &InstanceDoc) -> Vec<InstanceDoc> {
    let mut out: Vec<InstanceDoc> = shrink_expr(&doc.expr)
        .into_iter()
        .map(|expr| InstanceDoc { expr, ..doc.clone() })
        .collect();
    if let Some(rows) = &doc.domain {
        for i in 0..rows.len() {
            let mut r: Vec<Constraint> = rows.clone();
            r.remove(i);
            out.push(InstanceDoc {
                domain: if r.is_empty() { None } else { Some(r) },
                ..doc.clone()
            });
        }
    }
    out
}

/// Greedy shrinking that keeps `check` failing at the one remaining
/// basepoint.
pub fn minimize(doc: &InstanceDoc, basepoint: usize, check: &str) -> InstanceDoc {
    let mut current = InstanceDoc {
        basepoints: vec![doc.basepoints[basepoint].clone()],
        ..doc.clone()
    };
    'outer: loop {
        for cand in shrink_doc(&current) {
            if failing_detail(&cand, 0, check).is_some() {
                current = cand;
                continue 'outer;
            }
        }
        return current;
    }
}

/// Every `*.json` file of a directory, sorted by file name.
pub fn load_corpus_dir(dir: &std::path::Path) -> Result<Vec<(String, InstanceDoc)>> {
    let io = |e: std::io::Error| Error::Parse {
        location: dir.display().to_string(),
        message: e.to_string(),
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::result::Result<_, _>>()
        .map_err(io)?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(io)?;
            let doc = InstanceDoc::parse(&text).map_err(|e| match e {
                Error::Parse { location, message } => Error::Parse {
                    location: format!("{}: {location}", p.display()),
                    message,
                },
                other => other,
            })?;
            let id = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok((id, doc))
        })
        .collect()
}
