//! Floating-point sampling approximations of the limit definitions, used to
//! cross-check the exact engines. Sampling can refute an exact answer but
//! never certify one.
//!
//! Everything is evaluated in displacement coordinates `d = x - x̄`, with
//! the slacks at `x̄` computed exactly and converted once, so that points
//! very close to `x̄` are classified without cancellation error.

use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cones;
use crate::error::{check_dim, Error, Result};
use crate::geometry::rat::{self, to_f64, Rat};
use crate::geometry::{HPolyhedron, UnionPolyhedron};
use crate::plfunc::{PLExpr, PLFunction};
use crate::subdiff;

/// Relative slack for membership tests: `1e-9 ‖d‖∞`.
const MEMBERSHIP_SLACK: f64 = 1e-9;

/// Margin below which a sampled direction counts as lying on a cell boundary.
pub fn direction_margin() -> Rat {
    rat::rat(1, 1 << 20)
}

/// Margin below which a sampled dual vector counts as lying on the boundary
/// of the exact subdifferential. Wider than [`direction_margin`] because
/// the Fréchet quotient of a vector at distance `δ` is of order `δ` and has
/// to clear the sampling tolerance.
pub fn subgradient_margin() -> Rat {
    rat::rat(1, 1 << 8)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplePlan {
    /// Strictly decreasing step sizes; limits are read off the second half.
    pub radii: Vec<f64>,
    pub directions_per_test: usize,
    /// Base points per radius for `φ°`, whose maximizing cell can be thin.
    pub base_points_per_radius: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl SamplePlan {
    /// Radii `2^-3, ..., 2^-20`, 64 directions and 1024 base points per
    /// radius, tolerance `1e-5`.
    pub fn new(seed: u64) -> Self {
        SamplePlan {
            radii: (3..=20).map(|k| 2f64.powi(-k)).collect(),
            directions_per_test: 64,
            base_points_per_radius: 1024,
            seed,
            tolerance: 1e-5,
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.radii.is_empty() || self.radii.windows(2).any(|w| w[1] >= w[0]) || self.radii[0] <= 0.0 {
            return Err(Error::InvalidArgument("radii must be positive and strictly decreasing".into()));
        }
        if self.directions_per_test == 0 || self.base_points_per_radius == 0 || !(self.tolerance > 0.0) {
            return Err(Error::InvalidArgument("need samples and a positive tolerance".into()));
        }
        Ok(())
    }

    fn tail(&self) -> &[f64] {
        &self.radii[self.radii.len() / 2..]
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm_inf(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn norm_2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(a: f64, x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(xi, yi)| a * xi + yi).collect()
}

fn scaled(a: f64, x: &[f64]) -> Vec<f64> {
    x.iter().map(|v| a * v).collect()
}

fn to_f64_vec(v: &[Rat]) -> Vec<f64> {
    v.iter().map(to_f64).collect()
}

fn random_box(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| rng.gen_range(-1.0..=1.0)).collect()
}

fn slack(d: &[f64]) -> f64 {
    MEMBERSHIP_SLACK * norm_inf(d)
}

/// A polyhedron around `x̄`: `a·d <= s` and `e·d = r` with exact `s`, `r`.
#[derive(Debug, Clone)]
struct LocalPoly {
    rows: Vec<(Vec<f64>, f64)>,
    eqs: Vec<(Vec<f64>, f64)>,
}

impl LocalPoly {
    fn new(p: &HPolyhedron, x: &[Rat]) -> Self {
        let shift = |c: &crate::geometry::Constraint| (to_f64_vec(&c.normal), to_f64(&c.slack(x)));
        LocalPoly {
            rows: p.ineqs.iter().map(shift).collect(),
            eqs: p
                .eqs
                .iter()
                .map(|c| (to_f64_vec(&c.normal), to_f64(&(&c.offset - rat::dot(&c.normal, x)))))
                .collect(),
        }
    }

    fn contains(&self, d: &[f64]) -> bool {
        let eps = slack(d);
        self.rows.iter().all(|(a, s)| dot(a, d) <= s + eps)
            && self.eqs.iter().all(|(e, r)| (dot(e, d) - r).abs() <= eps)
    }
}

#[derive(Debug, Clone)]
enum LocalExpr {
    Atom { g: Vec<f64>, at_anchor: f64 },
    Max(Vec<LocalExpr>),
    Min(Vec<LocalExpr>),
    Restrict { domain: LocalPoly, expr: Box<LocalExpr> },
}

impl LocalExpr {
    fn new(e: &PLExpr, x: &[Rat]) -> Self {
        match e {
            PLExpr::Atom(a) => LocalExpr::Atom {
                g: to_f64_vec(&a.g),
                at_anchor: to_f64(&a.eval(x)),
            },
            PLExpr::Max(ch) => LocalExpr::Max(ch.iter().map(|c| LocalExpr::new(c, x)).collect()),
            PLExpr::Min(ch) => LocalExpr::Min(ch.iter().map(|c| LocalExpr::new(c, x)).collect()),
            PLExpr::Restrict { domain, expr } => LocalExpr::Restrict {
                domain: LocalPoly::new(domain, x),
                expr: Box::new(LocalExpr::new(expr, x)),
            },
        }
    }

    fn eval(&self, d: &[f64]) -> f64 {
        match self {
            LocalExpr::Atom { g, at_anchor } => at_anchor + dot(g, d),
            LocalExpr::Max(ch) => ch.iter().map(|c| c.eval(d)).fold(f64::NEG_INFINITY, f64::max),
            LocalExpr::Min(ch) => ch.iter().map(|c| c.eval(d)).fold(f64::INFINITY, f64::min),
            LocalExpr::Restrict { domain, expr } => {
                if domain.contains(d) {
                    expr.eval(d)
                } else {
                    f64::INFINITY
                }
            }
        }
    }
}

/// `φ(x̄ + d)` in floating point, `+∞` off the domain.
struct LocalFunction {
    expr: LocalExpr,
    domain: Option<LocalPoly>,
}

impl LocalFunction {
    fn new(f: &PLFunction, x: &[Rat]) -> Self {
        LocalFunction {
            expr: LocalExpr::new(&f.expr, x),
            domain: f.domain.as_ref().map(|p| LocalPoly::new(p, x)),
        }
    }

    fn eval(&self, d: &[f64]) -> f64 {
        if self.domain.as_ref().is_some_and(|p| !p.contains(d)) {
            return f64::INFINITY;
        }
        self.expr.eval(d)
    }
}

struct LocalSet {
    pieces: Vec<LocalPoly>,
}

impl LocalSet {
    fn new(s: &UnionPolyhedron, x: &[Rat]) -> Self {
        LocalSet {
            pieces: s.pieces.iter().map(|p| LocalPoly::new(p, x)).collect(),
        }
    }

    fn contains(&self, d: &[f64]) -> bool {
        self.pieces.iter().any(|p| p.contains(d))
    }
}

/// `max (φ(z + t h) - φ(z)) / t` over sampled `z` near `x̄` and small `t`,
/// which approaches `φ°(x̄; h)` from below.
pub fn sample_clarke_dirderiv(f: &PLFunction, x: &[Rat], h: &[Rat], plan: &SamplePlan) -> Result<f64> {
    check_dim(f.dim, x.len())?;
    check_dim(f.dim, h.len())?;
    plan.validate()?;
    let local = LocalFunction::new(f, x);
    let h = to_f64_vec(h);
    let mut rng = plan.rng(1);
    let mut best = f64::NEG_INFINITY;
    for &r in plan.tail() {
        let t = r / 64.0;
        let mut zs = vec![vec![0.0; f.dim]];
        zs.extend((0..plan.base_points_per_radius).map(|_| scaled(r, &random_box(&mut rng, f.dim))));
        for z in zs {
            let base = local.eval(&z);
            let moved = local.eval(&axpy(t, &h, &z));
            if base.is_finite() && moved.is_finite() {
                best = best.max((moved - base) / t);
            }
        }
    }
    Ok(best)
}

/// For every small radius `t`, some `v'` with `|v' - v|∞ <= t` has
/// `x̄ + t v' ∈ S`.
pub fn sample_contingent_membership(s: &UnionPolyhedron, x: &[Rat], v: &[Rat], plan: &SamplePlan) -> Result<bool> {
    check_dim(s.dim, x.len())?;
    check_dim(s.dim, v.len())?;
    plan.validate()?;
    let set = LocalSet::new(s, x);
    let v = to_f64_vec(v);
    let mut rng = plan.rng(2);
    for &t in plan.tail() {
        let hit = std::iter::once(v.clone())
            .chain((0..plan.directions_per_test).map(|_| axpy(t, &random_box(&mut rng, s.dim), &v)))
            .any(|w| set.contains(&scaled(t, &w)));
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Points of `S` within `r` of `x̄`, drawn from the local cones of the
/// pieces through `x̄` with random faces switched off.
fn base_points(s: &UnionPolyhedron, x: &[Rat], r: f64, count: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut out = vec![vec![0.0; s.dim]];
    let gens: Vec<(Vec<Vec<f64>>, Vec<Vec<f64>>)> = s
        .pieces
        .iter()
        .filter(|p| p.contains(x))
        .filter_map(|p| p.tangent_at(x).to_vrep())
        .map(|v| {
            (
                v.rays.iter().map(|g| to_f64_vec(g)).collect(),
                v.lines.iter().map(|g| to_f64_vec(g)).collect(),
            )
        })
        .collect();
    if gens.is_empty() {
        return out;
    }
    for k in 0..count {
        let (rays, lines) = &gens[k % gens.len()];
        let mut d = vec![0.0; s.dim];
        for g in rays {
            if rng.gen_bool(0.5) {
                d = axpy(rng.gen_range(0.0..1.0), g, &d);
            }
        }
        for g in lines {
            if rng.gen_bool(0.5) {
                d = axpy(rng.gen_range(-1.0..1.0), g, &d);
            }
        }
        let n = norm_inf(&d);
        if n > 0.0 {
            out.push(scaled(r * rng.gen_range(0.0..1.0) / n, &d));
        }
    }
    out
}

/// From every sampled base point `a ∈ S` near `x̄` and small `t`, some
/// `v'` near `v` keeps `a + t v'` in `S`.
pub fn sample_clarke_tangent_membership(
    s: &UnionPolyhedron,
    x: &[Rat],
    v: &[Rat],
    plan: &SamplePlan,
) -> Result<bool> {
    check_dim(s.dim, x.len())?;
    check_dim(s.dim, v.len())?;
    plan.validate()?;
    let set = LocalSet::new(s, x);
    let v = to_f64_vec(v);
    let mut rng = plan.rng(3);
    for &r in plan.tail() {
        let bases = base_points(s, x, r, plan.directions_per_test, &mut rng);
        let perturbations: Vec<Vec<f64>> = std::iter::once(v.clone())
            .chain((0..plan.directions_per_test).map(|_| axpy(r, &random_box(&mut rng, s.dim), &v)))
            .collect();
        for a in &bases {
            for t in [r, r / 16.0] {
                if !perturbations.iter().any(|w| set.contains(&axpy(t, w, a))) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `false` iff `(φ(y) - φ(x̄) - <x*, y - x̄>) / |y - x̄|` drops below
/// `-tolerance` at every small radius.
pub fn sample_frechet_subgradient_check(f: &PLFunction, x: &[Rat], xstar: &[Rat], plan: &SamplePlan) -> Result<bool> {
    check_dim(f.dim, x.len())?;
    check_dim(f.dim, xstar.len())?;
    plan.validate()?;
    let local = LocalFunction::new(f, x);
    let at_anchor = local.eval(&vec![0.0; f.dim]);
    if !at_anchor.is_finite() {
        return Err(Error::OutsideDomain);
    }
    let xs = to_f64_vec(xstar);
    let mut rng = plan.rng(4);
    let mut dirs: Vec<Vec<f64>> = (0..f.dim)
        .flat_map(|i| {
            let mut e = vec![0.0; f.dim];
            e[i] = 1.0;
            [e.clone(), scaled(-1.0, &e)]
        })
        .collect();
    dirs.extend((0..plan.directions_per_test).filter_map(|_| {
        let u = random_box(&mut rng, f.dim);
        let n = norm_2(&u);
        (n > 1e-3).then(|| scaled(1.0 / n, &u))
    }));
    let persistent = plan.tail().iter().all(|&r| {
        let quotient = |u: &[f64]| {
            let y = scaled(r, u);
            (local.eval(&y) - at_anchor - dot(&xs, &y)) / norm_2(&y)
        };
        let mut scored: Vec<(f64, &Vec<f64>)> = dirs.iter().map(|u| (quotient(u), u)).collect();
        if scored.iter().any(|(q, _)| *q < -plan.tolerance) {
            return true;
        }
        // violating directions can form a thin cone; search around the best few
        scored.sort_by(|a, b| a.0.total_cmp(&b.0));
        scored
            .iter()
            .take(REFINE_STARTS)
            .filter(|(q, _)| q.is_finite())
            .any(|(q, u)| compass_search(u, *q, &quotient) < -plan.tolerance)
    });
    Ok(!persistent)
}

/// Directions refined by [`compass_search`] per radius.
const REFINE_STARTS: usize = 4;

/// Minimizes `obj` over unit vectors by coordinate steps that halve on
/// failure, starting from `u` with value `value`.
fn compass_search(u: &[f64], value: f64, obj: &impl Fn(&[f64]) -> f64) -> f64 {
    let (mut u, mut best) = (u.to_vec(), value);
    let mut step = 0.25;
    let mut rounds = 0;
    while step > 1e-6 && rounds < 2000 {
        rounds += 1;
        let mut improved = false;
        for i in 0..u.len() {
            for sign in [1.0, -1.0] {
                let mut v = u.clone();
                v[i] += sign * step;
                let n = norm_2(&v);
                if n < 1e-9 {
                    continue;
                }
                let v = scaled(1.0 / n, &v);
                let q = obj(&v);
                if q < best {
                    (u, best, improved) = (v, q, true);
                }
            }
        }
        if !improved {
            step /= 2.0;
        }
    }
    best
}

/// Agreement counts for one kind of query.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct OracleTally {
    pub agree: usize,
    pub disagree: usize,
    /// Queries too close to a boundary to be meaningful for sampling.
    pub degenerate: usize,
    /// Disagreements where the samples refute the exact answer, as opposed
    /// to sampling that merely failed to confirm it.
    pub contradictions: usize,
    pub disagreements: Vec<String>,
}

impl OracleTally {
    fn record(&mut self, agree: bool, refuted: bool, what: impl FnOnce() -> String) {
        if agree {
            self.agree += 1;
        } else {
            self.disagree += 1;
            self.contradictions += usize::from(refuted);
            self.disagreements.push(what());
        }
    }

    pub fn total(&self) -> usize {
        self.agree + self.disagree
    }

    /// Fraction of non-degenerate queries that agree; 1 when there are none.
    pub fn rate(&self) -> f64 {
        if self.total() == 0 {
            1.0
        } else {
            self.agree as f64 / self.total() as f64
        }
    }

    pub fn merge(&mut self, other: &OracleTally) {
        self.agree += other.agree;
        self.disagree += other.disagree;
        self.degenerate += other.degenerate;
        self.contradictions += other.contradictions;
        self.disagreements.extend(other.disagreements.iter().cloned());
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct OracleComparison {
    pub clarke_dirderiv: OracleTally,
    pub contingent: OracleTally,
    pub clarke_tangent: OracleTally,
    pub frechet: OracleTally,
}

impl OracleComparison {
    pub fn merge(&mut self, other: &OracleComparison) {
        self.clarke_dirderiv.merge(&other.clarke_dirderiv);
        self.contingent.merge(&other.contingent);
        self.clarke_tangent.merge(&other.clarke_tangent);
        self.frechet.merge(&other.frechet);
    }

    pub fn tallies(&self) -> [(&'static str, &OracleTally); 4] {
        [
            ("clarke-dirderiv", &self.clarke_dirderiv),
            ("contingent-cone", &self.contingent),
            ("clarke-tangent-cone", &self.clarke_tangent),
            ("frechet-subgradient", &self.frechet),
        ]
    }
}

fn random_rational_vector(rng: &mut ChaCha8Rng, dim: usize, bound: i64, den: i64) -> Vec<Rat> {
    (0..dim)
        .map(|_| rat::rat(rng.gen_range(-bound * den..=bound * den), den))
        .collect()
}

/// `v` lies within the margin of one of the hyperplanes.
fn near_hyperplane(rows: &[Vec<Rat>], v: &[Rat], margin: &Rat) -> bool {
    let scale = rat::norm_inf(v);
    rows.iter()
        .any(|a| !rat::is_zero(a) && rat::dot(a, v).abs() <= margin * rat::norm_1(a) * &scale)
}

fn cone_rows(p: &HPolyhedron) -> impl Iterator<Item = Vec<Rat>> + '_ {
    p.ineqs.iter().chain(&p.eqs).map(|c| c.normal.clone())
}

/// Compares the exact cones, `φ°` and the Fréchet subdifferential with
/// the sampling oracles on `queries` random queries of each kind.
pub fn compare_with_oracles(f: &PLFunction, x: &[Rat], plan: &SamplePlan, queries: usize) -> Result<OracleComparison> {
    plan.validate()?;
    let s = f.solution_set();
    let mut out = OracleComparison::default();
    let mut rng = plan.rng(5);
    let margin = direction_margin();
    let in_set = s.contains(x);

    if in_set {
        let local = cones::local_cone(&s, x)?;
        let contingent = cones::contingent_cone(&s, x)?;
        let tangent = cones::clarke_tangent_cone(&s, x)?;
        let mut rows: Vec<Vec<Rat>> = local.pieces.iter().flat_map(cone_rows).collect();
        if let Some(t) = tangent.as_convex() {
            rows.extend(cone_rows(t));
        }
        for _ in 0..queries {
            let v = random_rational_vector(&mut rng, f.dim, 1, 64);
            if rat::is_zero(&v) || near_hyperplane(&rows, &v, &margin) {
                out.contingent.degenerate += 1;
                out.clarke_tangent.degenerate += 1;
                continue;
            }
            // the contingent sampler tries v itself, so both outcomes are evidence
            let exact = contingent.contains(&v);
            let sampled = sample_contingent_membership(&s, x, &v, plan)?;
            out.contingent
                .record(exact == sampled, true, || format!("v = {}: exact {exact}, sampled {sampled}", rat::fmt_vec(&v)));
            // a sampled base point can refute membership but never prove it
            let exact = tangent.contains(&v);
            let sampled = sample_clarke_tangent_membership(&s, x, &v, plan)?;
            out.clarke_tangent
                .record(exact == sampled, exact, || format!("v = {}: exact {exact}, sampled {sampled}", rat::fmt_vec(&v)));
        }
    }

    if f.is_lipschitz_at(x) {
        for _ in 0..queries {
            let h = random_rational_vector(&mut rng, f.dim, 1, 64);
            let exact = to_f64(&subdiff::clarke_dirderiv(f, x, &h)?);
            let sampled = sample_clarke_dirderiv(f, x, &h, plan)?;
            let ok = (exact - sampled).abs() <= plan.tolerance * exact.abs().max(1.0);
            // sampled difference quotients bound φ° from below
            let refuted = sampled > exact + plan.tolerance * exact.abs().max(1.0);
            out.clarke_dirderiv
                .record(ok, refuted, || format!("h = {}: exact {exact}, sampled {sampled}", rat::fmt_vec(&h)));
        }
    }

    if f.in_domain(x) {
        let frechet = subdiff::frechet_subdiff(f, x)?;
        let vertices = frechet
            .set
            .as_ref()
            .and_then(HPolyhedron::to_vrep)
            .map(|v| v.points)
            .unwrap_or_default();
        let smargin = subgradient_margin();
        for k in 0..queries {
            let xs = if k % 2 == 1 && !vertices.is_empty() {
                let base = &vertices[rng.gen_range(0..vertices.len())];
                rat::add(base, &random_rational_vector(&mut rng, f.dim, 1, 8))
            } else {
                random_rational_vector(&mut rng, f.dim, 2, 16)
            };
            let degenerate = frechet.set.as_ref().is_some_and(|p| {
                p.ineqs.iter().chain(&p.eqs).any(|c| {
                    let gap = c.slack(&xs).abs();
                    !gap.is_zero() && gap < &smargin * rat::norm_1(&c.normal)
                })
            });
            if degenerate {
                out.frechet.degenerate += 1;
                continue;
            }
            let exact = frechet.contains(&xs);
            let sampled = sample_frechet_subgradient_check(f, x, &xs, plan)?;
            // only a persistent negative quotient is evidence
            out.frechet
                .record(exact == sampled, exact, || format!("x* = {}: exact {exact}, sampled {sampled}", rat::fmt_vec(&xs)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat::{int, rat};

    fn lin(k: Rat) -> PLExpr {
        PLExpr::atom(vec![k], int(0))
    }

    fn neg_abs() -> PLFunction {
        PLFunction::new(1, PLExpr::Min(vec![lin(int(1)), lin(int(-1))]), None).unwrap()
    }

    fn two_rays() -> UnionPolyhedron {
        let e1 = HPolyhedron::universe(2)
            .with_eq(vec![int(0), int(1)], int(0))
            .with_ineq(vec![int(-1), int(0)], int(0));
        let e2 = HPolyhedron::universe(2)
            .with_eq(vec![int(1), int(0)], int(0))
            .with_ineq(vec![int(0), int(-1)], int(0));
        UnionPolyhedron::new(2, vec![e1, e2]).unwrap()
    }

    #[test]
    fn dirderiv_samples() {
        let plan = SamplePlan::new(7);
        let o = vec![int(0)];
        assert!((sample_clarke_dirderiv(&neg_abs(), &o, &[int(1)], &plan).unwrap() - 1.0).abs() < 1e-6);
        let kinked = PLFunction::new(1, PLExpr::Max(vec![lin(int(-1)), lin(rat(1, 2))]), None).unwrap();
        assert!((sample_clarke_dirderiv(&kinked, &o, &[int(-1)], &plan).unwrap() - 1.0).abs() < 1e-6);
        let affine = PLFunction::new(1, PLExpr::atom(vec![int(3)], int(0)), None).unwrap();
        assert!((sample_clarke_dirderiv(&affine, &o, &[int(2)], &plan).unwrap() - 6.0).abs() < 1e-9);
    }

    #[test]
    fn cone_membership_samples() {
        let plan = SamplePlan::new(11);
        let o = vec![int(0), int(0)];
        let s = two_rays();
        assert!(sample_contingent_membership(&s, &o, &[int(1), int(0)], &plan).unwrap());
        assert!(!sample_contingent_membership(&s, &o, &[int(-1), int(0)], &plan).unwrap());
        assert!(!sample_clarke_tangent_membership(&s, &o, &[int(1), int(0)], &plan).unwrap());
        let half = UnionPolyhedron::from_convex(HPolyhedron::universe(1).with_ineq(vec![int(1)], int(0)));
        assert!(sample_contingent_membership(&half, &[int(0)], &[int(-1)], &plan).unwrap());
        assert!(sample_clarke_tangent_membership(&half, &[int(0)], &[int(-1)], &plan).unwrap());
        let point = UnionPolyhedron::from_convex(HPolyhedron::singleton(&[int(0)]));
        assert!(!sample_contingent_membership(&point, &[int(0)], &[int(1)], &plan).unwrap());
        let everything = UnionPolyhedron::from_convex(HPolyhedron::universe(2));
        assert!(sample_clarke_tangent_membership(&everything, &o, &[int(-1), int(1)], &plan).unwrap());
    }

    #[test]
    fn frechet_samples() {
        let plan = SamplePlan::new(3);
        let o = vec![int(0)];
        let abs = PLFunction::new(1, PLExpr::Max(vec![lin(int(1)), lin(int(-1))]), None).unwrap();
        assert!(sample_frechet_subgradient_check(&abs, &o, &[int(0)], &plan).unwrap());
        assert!(!sample_frechet_subgradient_check(&neg_abs(), &o, &[int(0)], &plan).unwrap());
        let affine = PLFunction::new(1, PLExpr::atom(vec![int(2)], int(0)), None).unwrap();
        assert!(sample_frechet_subgradient_check(&affine, &o, &[int(2)], &plan).unwrap());
    }

    #[test]
    fn comparison_is_deterministic_and_agrees() {
        let plan = SamplePlan::new(5);
        let a = compare_with_oracles(&neg_abs(), &[int(0)], &plan, 20).unwrap();
        let b = compare_with_oracles(&neg_abs(), &[int(0)], &plan, 20).unwrap();
        assert_eq!(a, b);
        for (name, t) in a.tallies() {
            assert_eq!(t.disagree, 0, "{name}: {:?}", t.disagreements);
            assert_eq!(t.contradictions, 0);
        }
    }
}
