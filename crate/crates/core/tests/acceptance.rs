//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every tolerance and size used is pinned below.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nonsmooth_cq::corpus::{self, GeneratorConfig, InstanceClass};
use nonsmooth_cq::cq::{Directional, Flag, Mode, Outcome, PointAnalysis};
use nonsmooth_cq::endset::{distance_to_end_set, end_set_forms_agree, end_set_pieces, in_end_set_by_ray, ray_exit};
use nonsmooth_cq::geometry::rat::{self, int, rat, ExtRat, Rat};
use nonsmooth_cq::geometry::{segment_hull, union_subset, Distance, HPolyhedron, NormSpec, UnionPolyhedron};
use nonsmooth_cq::instance::InstanceDoc;
use nonsmooth_cq::oracle::{compare_with_oracles, OracleComparison, SamplePlan};
use nonsmooth_cq::plfunc::{PLExpr, PLFunction};
use nonsmooth_cq::report;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const REMARK_TIME_LIMIT: Duration = Duration::from_secs(1);
const LIPSCHITZ_INSTANCES: usize = 200;
const LIPSCHITZ_SEED: u64 = 7;
const MAX_DIM: usize = 3;
const LIPSCHITZ_TIME_LIMIT: Duration = Duration::from_secs(300);
const EXTENDED_INSTANCES: usize = 50;
const EXTENDED_SEED: u64 = 11;
const RANDOM_POLYHEDRA: usize = 500;
const POLYHEDRA_SEED: u64 = 23;
const ORACLE_INSTANCES: usize = 30;
const ORACLE_QUERIES: usize = 30;
const ORACLE_TOLERANCE: f64 = 1e-5;
const ORACLE_MIN_RATE: f64 = 0.99;
const DETERMINISM_INSTANCES: usize = 20;

type Criterion = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn interval_above(lo: Rat) -> HPolyhedron {
    HPolyhedron::universe(1).with_ineq(vec![int(-1)], -lo)
}

fn tau_grid(star: &ExtRat) -> Vec<Rat> {
    let mut g = vec![rat(1, 2), int(1), int(2), int(4)];
    if let ExtRat::Finite(t) = star {
        if t > &rat::zero() {
            g.push(t.clone());
            g.push(t * rat(1023, 1024));
            g.push(t * rat(1025, 1024));
        }
    }
    g
}

/// Engine rows must never fail; passes are tallied per row.
fn rows_never_fail(checks: &BTreeMap<&'static str, nonsmooth_cq::cq::CheckResult>, pick: impl Fn(&str) -> bool, tally: &mut BTreeMap<String, usize>) -> Result<(), String> {
    for (id, r) in checks.iter().filter(|(id, _)| pick(id)) {
        match r.outcome {
            Outcome::Fail => return Err(format!("{id}: {}", r.detail)),
            Outcome::Pass => *tally.entry(id.to_string()).or_default() += 1,
            Outcome::NotApplicable => {}
        }
    }
    Ok(())
}

fn neg_abs() -> PLFunction {
    let lin = |k| PLExpr::atom(vec![int(k)], int(0));
    PLFunction::new(1, PLExpr::Min(vec![lin(1), lin(-1)]), None).unwrap()
}

fn abs() -> PLFunction {
    let lin = |k| PLExpr::atom(vec![int(k)], int(0));
    PLFunction::new(1, PLExpr::Max(vec![lin(1), lin(-1)]), None).unwrap()
}

fn remark_reproduction() -> Criterion {
    let started = Instant::now();
    let a = PointAnalysis::new(&neg_abs(), &[int(0)], &NormSpec::linf()).map_err(e2s)?;
    ensure(a.normal.set_eq(&HPolyhedron::singleton(&[int(0)])), || format!("N_c = {}", a.normal.describe()))?;
    let expected = HPolyhedron::cube(1, &int(-1), &int(1));
    let clarke = a.clarke.set.clone().ok_or("∂c is empty")?;
    ensure(clarke.set_eq(&expected), || format!("∂c = {}", clarke.describe()))?;
    ensure(!a.subdiff_in_normal().map_err(e2s)?, || "∂c ⊆ N_c reported".into())?;
    let elapsed = started.elapsed();
    ensure(elapsed < REMARK_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("N_c = {{0}}, ∂c = [-1,1], ∂c ⊄ N_c in {:.3}s", elapsed.as_secs_f64()))
}

struct LipschitzSummary {
    c2: Criterion,
    c3: Criterion,
    c4: Criterion,
    c6: Criterion,
}

fn lipschitz_suite() -> LipschitzSummary {
    let started = Instant::now();
    let docs = corpus::generate(&GeneratorConfig::new(LIPSCHITZ_INSTANCES, 1, LIPSCHITZ_SEED).dims(1, MAX_DIM));
    let mut c2 = Ok(());
    let mut c3 = Ok(());
    let mut c4 = Ok(());
    let mut c6 = Ok(());
    let (mut bcq_points, mut flips, mut any_tau) = (0, 0, 0);
    let (mut iff_true, mut iff_false) = (0, 0);
    let (mut inside, mut regular) = (0, 0);
    let mut rows2 = BTreeMap::new();
    let mut rows3 = BTreeMap::new();
    let mut rows4 = BTreeMap::new();
    let mut rows6 = BTreeMap::new();
    let mut points = 0;
    let mut max_atoms = 0;
    for (id, doc) in &docs {
        max_atoms = max_atoms.max(doc.expr.atom_count());
        let f = doc.function().expect("generated instances are valid");
        for x in &doc.basepoints {
            points += 1;
            let a = match PointAnalysis::new(&f, x, &doc.norm_spec()) {
                Ok(a) => a,
                Err(e) => {
                    c2 = Err(format!("{id}: {e}"));
                    continue;
                }
            };
            let where_ = |m: String| format!("{id} at ({}): {m}", report::fmt_point(x));
            if c2.is_ok() {
                c2 = clarke_routes(&a, &mut bcq_points, &mut flips, &mut any_tau).map_err(where_);
            }
            if c3.is_ok() {
                c3 = directional_iff(&a, &mut iff_true, &mut iff_false).map_err(where_);
            }
            if c4.is_ok() {
                c4 = error_bound_iff(&a, &mut inside, &mut regular).map_err(where_);
            }
            let checks = a.theorem_checks();
            if c2.is_ok() {
                c2 = rows_never_fail(&checks, |r| r.starts_with("clarke-strong-") || r == "clarke-best-tau-routes-agree", &mut rows2).map_err(where_);
            }
            if c3.is_ok() {
                c3 = rows_never_fail(&checks, |r| r == "clarke-strong-iff-directional-inequality", &mut rows3).map_err(where_);
            }
            if c4.is_ok() {
                c4 = rows_never_fail(&checks, |r| r.contains("error-bound"), &mut rows4).map_err(where_);
            }
            if c6.is_ok() {
                c6 = rows_never_fail(&checks, |r| r.starts_with("frechet-"), &mut rows6).map_err(where_);
            }
        }
    }
    let elapsed = started.elapsed();
    let c2 = c2.and_then(|_| {
        ensure(docs.len() >= LIPSCHITZ_INSTANCES, || format!("only {} instances", docs.len()))?;
        ensure(max_atoms <= 12, || format!("{max_atoms} atoms"))?;
        ensure(flips > 0, || "no finite positive τ* was exercised".into())?;
        ensure(elapsed < LIPSCHITZ_TIME_LIMIT, || format!("took {elapsed:?}"))?;
        Ok(format!(
            "{} instances, {points} points, BCQ at {bcq_points}, τ* flips at {flips}, any-τ at {any_tau}, rows {rows2:?}, {:.1}s",
            docs.len(),
            elapsed.as_secs_f64()
        ))
    });
    let c3 = c3.and_then(|_| {
        ensure(iff_true > 0 && iff_false > 0, || format!("one-sided: {iff_true} true, {iff_false} false"))?;
        Ok(format!("{iff_true} τ values both true, {iff_false} both false, rows {rows3:?}"))
    });
    let c4 = c4.and_then(|_| {
        ensure(inside > 0 && regular > 0, || format!("{inside} inside-normal, {regular} regular points"))?;
        Ok(format!("{inside} inside-normal points, {regular} regular, rows {rows4:?}"))
    });
    let c6 = c6.and_then(|_| {
        frechet_examples()?;
        ensure(rows6.values().sum::<usize>() > 0, || "no Fréchet row passed".into())?;
        Ok(format!("|x| τ* = 1, -|x| convention flagged, rows {rows6:?}"))
    });
    LipschitzSummary {
        c2,
        c3,
        c4,
        c6,
    }
}

fn clarke_routes(a: &PointAnalysis, bcq_points: &mut usize, flips: &mut usize, any_tau: &mut usize) -> Result<(), String> {
    if !a.on_boundary {
        return Ok(());
    }
    let bcq = a.bcq(Mode::Clarke).map_err(e2s)?;
    let vertex = a.tau_by_vertices(Mode::Clarke).map_err(e2s)?;
    if !bcq.holds {
        ensure(vertex.value.is_infinite(), || format!("BCQ fails but τ* = {}", vertex.value))?;
        for t in tau_grid(&vertex.value) {
            ensure(!a.strong_bcq(Mode::Clarke, &t).map_err(e2s)?.holds, || format!("strong at τ = {t} without BCQ"))?;
        }
        return Ok(());
    }
    *bcq_points += 1;
    let directional = a.best_tau_directional(Mode::Clarke).map_err(e2s)?;
    let endset = a.best_tau_endset(Mode::Clarke).map_err(e2s)?;
    ensure(directional.value == endset.value && endset.value == vertex.value, || {
        format!("directional {}, end set {}, vertices {}", directional.value, endset.value, vertex.value)
    })?;
    let star = vertex.value.finite().ok_or("finite τ* expected under BCQ")?.clone();
    if star == rat::zero() {
        *any_tau += 1;
        ensure(vertex.flags.contains(&Flag::AnyPositiveTau), || "τ* = 0 without ANY_POSITIVE_TAU".into())?;
        ensure(a.strong_bcq(Mode::Clarke, &rat(1, 1024)).map_err(e2s)?.holds, || "fails at τ = 1/1024".into())?;
        return Ok(());
    }
    *flips += 1;
    let holds = |t: Rat| a.strong_bcq(Mode::Clarke, &t).map(|v| v.holds).map_err(e2s);
    ensure(holds(star.clone())?, || format!("fails at τ* = {star}"))?;
    ensure(holds(&star * rat(1025, 1024))?, || format!("fails above τ* = {star}"))?;
    ensure(!holds(&star * rat(1023, 1024))?, || format!("holds below τ* = {star}"))
}

fn directional_iff(a: &PointAnalysis, both_true: &mut usize, both_false: &mut usize) -> Result<(), String> {
    if !a.on_boundary {
        return Ok(());
    }
    let star = a.tau_by_vertices(Mode::Clarke).map_err(e2s)?.value;
    for t in tau_grid(&star) {
        let strong = a.strong_bcq(Mode::Clarke, &t).map_err(e2s)?.holds;
        let dir = a.directional_holds(Directional::Clarke, &t).map_err(e2s)?.holds;
        ensure(strong == dir, || format!("τ = {t}: strong {strong}, direction-wise {dir}"))?;
        if strong {
            *both_true += 1;
        } else {
            *both_false += 1;
        }
    }
    Ok(())
}

fn error_bound_iff(a: &PointAnalysis, inside: &mut usize, regular: &mut usize) -> Result<(), String> {
    if !a.on_boundary || !a.subdiff_in_normal().map_err(e2s)? {
        return Ok(());
    }
    *inside += 1;
    if a.regular().map_err(e2s)? {
        *regular += 1;
    }
    let bcq = a.bcq(Mode::Clarke).map_err(e2s)?.holds;
    let modulus = a.error_bound_modulus().map_err(e2s)?.value;
    let star = a.tau_by_vertices(Mode::Clarke).map_err(e2s)?.value;
    let mut grid = tau_grid(&star);
    grid.extend(tau_grid(&modulus));
    for t in grid {
        let strong = a.strong_bcq(Mode::Clarke, &t).map_err(e2s)?.holds;
        let rhs = bcq && modulus <= ExtRat::Finite(t.clone());
        ensure(strong == rhs, || format!("τ = {t}: strong {strong}, BCQ {bcq}, modulus {modulus}"))?;
    }
    Ok(())
}

fn frechet_examples() -> Result<(), String> {
    let a = PointAnalysis::new(&abs(), &[int(0)], &NormSpec::linf()).map_err(e2s)?;
    for (route, t) in [
        ("vertices", a.tau_by_vertices(Mode::Frechet)),
        ("end set", a.best_tau_endset(Mode::Frechet)),
        ("directional", a.best_tau_directional(Mode::Frechet)),
    ] {
        let t = t.map_err(e2s)?;
        ensure(t.value == ExtRat::Finite(int(1)), || format!("|x|: {route} τ* = {}", t.value))?;
    }
    let b = PointAnalysis::new(&neg_abs(), &[int(0)], &NormSpec::linf()).map_err(e2s)?;
    ensure(b.frechet.is_empty(), || "-|x|: ∂̂ is nonempty".into())?;
    let v = b.bcq(Mode::Frechet).map_err(e2s)?;
    ensure(v.flags.contains(&Flag::ConventionApplied), || format!("-|x|: flags {:?}", v.flags))?;
    let t = b.tau_by_vertices(Mode::Frechet).map_err(e2s)?;
    ensure(t.flags.contains(&Flag::ConventionApplied), || format!("-|x|: τ flags {:?}", t.flags))
}

fn extended_suite() -> Criterion {
    worked_extended_instance()?;
    let docs = corpus::generate(
        &GeneratorConfig::new(EXTENDED_INSTANCES, 1, EXTENDED_SEED)
            .dims(1, MAX_DIM)
            .class(InstanceClass::Extended),
    );
    ensure(docs.len() >= EXTENDED_INSTANCES, || format!("only {} instances", docs.len()))?;
    let mut rows = BTreeMap::new();
    let mut nontrivial_singular = 0;
    for (id, doc) in &docs {
        let f = doc.function().map_err(e2s)?;
        ensure(doc.basepoints.iter().all(|x| !f.is_lipschitz_at(x)), || format!("{id} is Lipschitz"))?;
        for x in &doc.basepoints {
            let where_ = |m: String| format!("{id} at ({}): {m}", report::fmt_point(x));
            let a = PointAnalysis::new(&f, x, &doc.norm_spec()).map_err(e2s).map_err(where_)?;
            if a.singular.set.as_ref().is_some_and(|s| !s.set_eq(&HPolyhedron::singleton(&rat::zeros(f.dim)))) {
                nontrivial_singular += 1;
            }
            for r in [rat(1, 2), int(1), int(2)] {
                let s = a.singular_identities(&r).map_err(e2s).map_err(where_)?;
                ensure(s.all(), || where_(format!("r = {r}: {s:?}")))?;
            }
            extended_endset_iff(&a).map_err(where_)?;
            rows_never_fail(
                &a.theorem_checks(),
                |r| r.starts_with("extended-") || r.starts_with("trivial-singular-") || r == "singular-subdiff-identities",
                &mut rows,
            )
            .map_err(where_)?;
        }
    }
    ensure(nontrivial_singular > 0, || "every singular subdifferential was trivial".into())?;
    Ok(format!(
        "{} instances, {nontrivial_singular} with nontrivial ∂c∞, worked f(x)=x on x<=0 ok, rows {rows:?}",
        docs.len()
    ))
}

fn extended_endset_iff(a: &PointAnalysis) -> Result<(), String> {
    if !a.on_boundary {
        return Ok(());
    }
    let bcq = a.bcq(Mode::Extended).map_err(e2s)?.holds;
    let d = match a.endset_distance(Mode::Extended).map_err(e2s)? {
        Distance::Exact(d) => d,
        other => return Err(format!("inexact distance {other:?}")),
    };
    let star = a.tau_by_vertices(Mode::Extended).map_err(e2s)?;
    if bcq {
        let e = a.best_tau_endset(Mode::Extended).map_err(e2s)?;
        ensure(e.value == star.value, || format!("end set τ* {}, vertices {}", e.value, star.value))?;
    }
    for t in tau_grid(&star.value) {
        let strong = a.strong_bcq(Mode::Extended, &t).map_err(e2s)?.holds;
        let rhs = bcq && d >= ExtRat::Finite(t.recip());
        ensure(strong == rhs, || format!("τ = {t}: strong {strong}, BCQ {bcq}, d = {d}"))?;
    }
    Ok(())
}

fn worked_extended_instance() -> Result<(), String> {
    let domain = HPolyhedron::universe(1).with_ineq(vec![int(1)], int(0));
    let f = PLFunction::new(1, PLExpr::atom(vec![int(1)], int(0)), Some(domain)).map_err(e2s)?;
    let a = PointAnalysis::new(&f, &[int(0)], &NormSpec::linf()).map_err(e2s)?;
    let clarke = a.clarke.set.clone().ok_or("∂c is empty")?;
    ensure(clarke.set_eq(&interval_above(int(1))), || format!("∂c = {}", clarke.describe()))?;
    let singular = a.singular.set.clone().ok_or("∂c∞ is empty")?;
    ensure(singular.set_eq(&interval_above(int(0))), || format!("∂c∞ = {}", singular.describe()))?;
    for t in [a.tau_by_vertices(Mode::Extended), a.best_tau_endset(Mode::Extended)] {
        let t = t.map_err(e2s)?;
        ensure(t.flags.contains(&Flag::AnyPositiveTau), || format!("flags {:?}", t.flags))?;
    }
    ensure(a.strong_bcq(Mode::Extended, &rat(1, 1024)).map_err(e2s)?.holds, || "fails at τ = 1/1024".into())
}

fn random_row(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
    loop {
        let a: Vec<Rat> = (0..dim).map(|_| int(rng.gen_range(-3..=3))).collect();
        if !rat::is_zero(&a) {
            return a;
        }
    }
}

/// Cones, polytopes and unbounded polyhedra in dimensions 1 to 3.
fn random_polyhedron(rng: &mut ChaCha8Rng) -> (HPolyhedron, bool) {
    loop {
        let dim = rng.gen_range(1..=MAX_DIM);
        let kind = rng.gen_range(0..3);
        let rows = rng.gen_range(1..=dim + 2);
        let mut p = match kind {
            1 => HPolyhedron::cube(dim, &int(-rng.gen_range(0..=3)), &int(rng.gen_range(1..=3))),
            _ => HPolyhedron::universe(dim),
        };
        for _ in 0..rows {
            let b = if kind == 0 { int(0) } else { rat(rng.gen_range(-4..=8), rng.gen_range(1..=2)) };
            p = p.with_ineq(random_row(rng, dim), b);
        }
        if !p.is_empty() {
            return (p, kind == 0);
        }
    }
}

fn check_end_set_laws(c: &HPolyhedron, cone: bool, vertices_checked: &mut usize) -> Result<(), String> {
    let n = c.dim;
    let origin = rat::zeros(n);
    let pieces = end_set_pieces(c);
    ensure(!pieces.contains(&origin), || "0 ∈ E[C]".into())?;
    if cone {
        ensure(pieces.is_empty(), || "end set of a cone is nonempty".into())?;
        let d = distance_to_end_set(c, &NormSpec::linf()).map_err(e2s)?;
        ensure(d == Distance::Exact(ExtRat::PosInf), || format!("cone distance {d:?}"))?;
    }
    if c.contains(&origin) {
        let inside = union_subset(&pieces, &UnionPolyhedron::from_convex(c.clone())).map_err(e2s)?;
        ensure(inside.holds(), || "E[C] ⊄ C".into())?;
    }
    ensure(end_set_forms_agree(c).map_err(e2s)?, || "end-set forms disagree".into())?;
    let hull = segment_hull(Some(c), &int(1), n).map_err(e2s)?;
    for piece in &pieces.pieces {
        let v = piece.to_vrep().ok_or("empty end-set piece")?;
        let mut pts = v.points;
        if pts.is_empty() {
            pts.extend(piece.feasible_point());
        }
        for z in pts {
            *vertices_checked += 1;
            let exit = ray_exit(&hull, &z).map_err(e2s)?;
            ensure(exit == ExtRat::Finite(int(1)), || format!("ray from {} exits at {exit}", rat::fmt_vec(&z)))?;
            ensure(in_end_set_by_ray(&hull, &z).map_err(e2s)?, || format!("{} fails the ray test", rat::fmt_vec(&z)))?;
        }
    }
    // the supremal point along a ray through C is an end point
    if let Some(v) = c.to_vrep() {
        for z in v.points.iter().filter(|z| !rat::is_zero(z)) {
            if let ExtRat::Finite(m) = ray_exit(&hull, z).map_err(e2s)? {
                let end = rat::scale(z, &m);
                ensure(pieces.contains(&end), || format!("M z = {} is not an end point", rat::fmt_vec(&end)))?;
            }
        }
    }
    Ok(())
}

fn end_set_suite() -> Criterion {
    let mut rng = ChaCha8Rng::seed_from_u64(POLYHEDRA_SEED);
    let (mut cones, mut bounded, mut vertices) = (0, 0, 0);
    for i in 0..RANDOM_POLYHEDRA {
        let (c, cone) = random_polyhedron(&mut rng);
        cones += usize::from(cone);
        bounded += usize::from(c.is_bounded());
        check_end_set_laws(&c, cone, &mut vertices).map_err(|m| format!("polyhedron {i} {}: {m}", c.describe()))?;
    }
    ensure(cones > 0 && bounded > 0 && bounded + cones < RANDOM_POLYHEDRA, || {
        format!("unbalanced sample: {cones} cones, {bounded} bounded")
    })?;
    Ok(format!(
        "{RANDOM_POLYHEDRA} polyhedra ({cones} cones, {bounded} bounded), {vertices} end-set vertices cross-checked"
    ))
}

fn oracle_suite() -> Criterion {
    let mut docs = corpus::generate(&GeneratorConfig::new(ORACLE_INSTANCES, 1, 31).dims(1, MAX_DIM));
    docs.extend(corpus::generate(
        &GeneratorConfig::new(ORACLE_INSTANCES / 3, 1, 37)
            .dims(1, MAX_DIM)
            .class(InstanceClass::Extended),
    ));
    let mut total = OracleComparison::default();
    let plan = SamplePlan::new(41).with_tolerance(ORACLE_TOLERANCE);
    for (id, doc) in &docs {
        let f = doc.function().map_err(e2s)?;
        for x in &doc.basepoints {
            total.merge(&compare_with_oracles(&f, x, &plan, ORACLE_QUERIES).map_err(|e| format!("{id}: {e}"))?);
        }
    }
    let mut parts = Vec::new();
    let (mut agree, mut all) = (0, 0);
    for (name, t) in total.tallies() {
        agree += t.agree;
        all += t.total();
        ensure(t.total() > 0, || format!("{name}: no non-degenerate queries"))?;
        ensure(t.rate() >= ORACLE_MIN_RATE, || {
            format!("{name}: rate {:.4}, first disagreements {:?}", t.rate(), &t.disagreements[..t.disagreements.len().min(3)])
        })?;
        ensure(t.contradictions == 0, || format!("{name}: {} samples refute the exact answer: {:?}", t.contradictions, t.disagreements))?;
        parts.push(format!("{name} {}/{}", t.agree, t.total()));
    }
    Ok(format!("{agree}/{all} agree at tolerance {ORACLE_TOLERANCE:e}, no refutations: {}", parts.join(", ")))
}

fn determinism_suite() -> Criterion {
    let docs: Vec<(String, InstanceDoc)> = corpus::generate(&GeneratorConfig::new(DETERMINISM_INSTANCES, 2, LIPSCHITZ_SEED));
    let first = corpus::verify_corpus(&docs).map_err(e2s)?.to_json();
    let again = corpus::generate(&GeneratorConfig::new(DETERMINISM_INSTANCES, 2, LIPSCHITZ_SEED));
    let second = corpus::verify_corpus(&again).map_err(e2s)?.to_json();
    ensure(first == second, || "verify summaries differ".into())?;
    let a = report::analyze_instance(&docs[0].1).map_err(e2s)?.to_json();
    let b = report::analyze_instance(&docs[0].1).map_err(e2s)?.to_json();
    ensure(a == b, || "reports differ".into())?;
    Ok(format!("{DETERMINISM_INSTANCES}-instance verify summary identical ({} bytes)", first.len()))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut line = |n: usize, name: &str, r: Criterion| {
        match r {
            Ok(detail) => println!("PASS criterion {n} ({name}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {why}");
            }
        }
    };
    line(1, "counterexample to ∂c ⊆ N_c", remark_reproduction());
    let lip = lipschitz_suite();
    line(2, "strong BCQ via end sets and routes", lip.c2);
    line(3, "direction-wise characterization", lip.c3);
    line(4, "error-bound characterization", lip.c4);
    line(5, "extended-valued suite", extended_suite());
    line(6, "Fréchet suite", lip.c6);
    line(7, "end-set laws", end_set_suite());
    line(8, "oracle concordance", oracle_suite());
    line(9, "determinism", determinism_suite());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
