//! Constraint qualifications for `φ(x) <= 0` at a point of the solution set
//! `S`: the basic and strong qualifications in Clarke, extended Clarke and
//! Fréchet form, best constants computed by independent routes, and
//! self-checks of the equivalences that connect them.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{Signed, Zero};
use serde::Serialize;

use crate::cones;
use crate::endset::{distance_to_end_set, end_set_forms_agree, end_set_pieces};
use crate::error::{check_dim, Error, Result};
use crate::geometry::nnc::{
    closure_of_convex_union, nnc_union_eq, nnc_union_subset, positive_segment_sum, segment_sum,
};
use crate::geometry::norm::distance_to_polyhedron;
use crate::geometry::rat::{self, ExtRat, Rat};
use crate::geometry::{
    convex_hull, minkowski_sum, segment_hull, union_subset, ConeSet, Distance, HPolyhedron,
    LpOutcome, NncPolyhedron, NormSpec, Sense, SubsetVerdict, UnionPolyhedron,
};
use crate::plfunc::{is_boundary_point, PLFunction};
use crate::subdiff::{self, SubdiffResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    Clarke,
    Extended,
    Frechet,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Clarke, Mode::Extended, Mode::Frechet];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Clarke => "CLARKE",
            Mode::Extended => "EXTENDED",
            Mode::Frechet => "FRECHET",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s.to_ascii_uppercase().as_str() {
            "CLARKE" => Some(Mode::Clarke),
            "EXTENDED" => Some(Mode::Extended),
            "FRECHET" => Some(Mode::Frechet),
            _ => None,
        }
    }
}

/// Markers on verdicts that depend on a convention or a degenerate case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Flag {
    /// `[0, ∞) ∅` was taken to be `{0}`.
    ConventionApplied,
    /// The end set is empty, so every `τ > 0` works; reported as `0`.
    AnyPositiveTau,
    BcqFails,
    /// The basepoint is interior to `S`.
    NotOnBoundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// A point of the left-hand side outside the right-hand side.
    pub witness: Option<Vec<Rat>>,
    pub flags: BTreeSet<Flag>,
}

impl Verdict {
    fn from_subset(v: SubsetVerdict, flags: BTreeSet<Flag>) -> Self {
        Verdict {
            holds: v.holds(),
            witness: v.witness().map(<[Rat]>::to_vec),
            flags,
        }
    }
}

/// A best constant: the infimum of the valid `τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauResult {
    pub value: ExtRat,
    pub flags: BTreeSet<Flag>,
    /// Where the supremum is attained, or where finiteness fails.
    pub witness: Option<Vec<Rat>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub outcome: Outcome,
    pub detail: String,
}

impl CheckResult {
    fn pass(detail: impl Into<String>) -> Self {
        CheckResult {
            outcome: Outcome::Pass,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        CheckResult {
            outcome: Outcome::Fail,
            detail: detail.into(),
        }
    }

    fn not_applicable(detail: impl Into<String>) -> Self {
        CheckResult {
            outcome: Outcome::NotApplicable,
            detail: detail.into(),
        }
    }
}

/// Outcome of the four identities relating `∂c φ` and `∂c∞ φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularIdentities {
    pub sum_absorbs: bool,
    pub open_segment_absorbs: bool,
    pub singular_in_closure: bool,
    pub closure_formula: bool,
}

impl SingularIdentities {
    pub fn all(&self) -> bool {
        self.sum_absorbs && self.open_segment_absorbs && self.singular_in_closure && self.closure_formula
    }
}

/// Which direction-wise inequality to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Directional {
    /// `d(h, T_c) <= τ max{0, φ°(h)}`
    Clarke,
    /// `d(h, clco T) <= τ max{0, σ_∂̂(h)}`
    Frechet,
    /// `d(h, {φ° <= 0}) <= τ max{0, φ°(h)}`
    ErrorBound,
}

pub type Field<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone)]
pub struct CQReport {
    pub basepoint: Vec<Rat>,
    pub phi_value: Rat,
    pub norm: NormSpec,
    pub on_boundary: bool,
    pub lipschitz: bool,
    pub clarke_subdiff: SubdiffResult,
    pub singular_subdiff: SubdiffResult,
    pub frechet_subdiff: SubdiffResult,
    pub clarke_tangent: HPolyhedron,
    pub clarke_normal: HPolyhedron,
    pub frechet_normal: HPolyhedron,
    pub clarke_bcq: Field<Verdict>,
    pub clarke_strong_bcq_tau: Field<TauResult>,
    pub extended_bcq: Field<Verdict>,
    pub extended_strong_bcq_tau: Field<TauResult>,
    pub frechet_bcq: Field<Verdict>,
    pub frechet_strong_bcq_tau: Field<TauResult>,
    pub tau_directional_clarke: Field<TauResult>,
    pub tau_endset_clarke: Field<TauResult>,
    pub tau_endset_extended: Field<TauResult>,
    pub tau_directional_frechet: Field<TauResult>,
    pub tau_endset_frechet: Field<TauResult>,
    pub endset_distance_clarke: Field<Distance>,
    pub endset_distance_frechet: Field<Distance>,
    pub error_bound_modulus: Field<TauResult>,
    pub subdiff_in_normal: Field<bool>,
    pub regular_at_point: Field<bool>,
    pub theorem_checks: BTreeMap<&'static str, CheckResult>,
}

/// Everything local at one basepoint, computed once.
#[derive(Debug)]
pub struct PointAnalysis {
    pub f: PLFunction,
    pub anchor: Vec<Rat>,
    pub norm: NormSpec,
    pub value: Rat,
    pub solution_set: UnionPolyhedron,
    pub on_boundary: bool,
    pub lipschitz: bool,
    pub clarke: SubdiffResult,
    pub singular: SubdiffResult,
    pub frechet: SubdiffResult,
    /// Local cell gradients; Lipschitz points only.
    pub gradients: Option<Vec<Vec<Rat>>>,
    pub tangent: HPolyhedron,
    pub normal: HPolyhedron,
    pub contingent: UnionPolyhedron,
    pub frechet_normal: HPolyhedron,
    strong_cache: RefCell<HashMap<(Mode, Rat), Verdict>>,
    vertex_cache: RefCell<HashMap<Mode, Result<TauResult>>>,
    source_cache: RefCell<HashMap<Mode, Result<HPolyhedron>>>,
    /// `[0,1] ∂ (+ ∂c∞)` and `[0,∞) ∂ (+ ∂c∞)` per mode.
    segment_cache: RefCell<HashMap<(Mode, bool), Result<Vec<NncPolyhedron>>>>,
}

fn convex(c: ConeSet) -> Result<HPolyhedron> {
    match c {
        ConeSet::Convex(p) => Ok(p),
        ConeSet::Union(_) => Err(Error::Internal("expected a convex cone".into())),
    }
}

fn not_applicable(why: &str) -> Error {
    Error::NotApplicable(why.to_string())
}

fn need(cond: bool, why: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(not_applicable(why))
    }
}

/// `{h : <g, h> <= 0 for all g}`.
fn sublevel_cone(dim: usize, grads: &[Vec<Rat>]) -> HPolyhedron {
    grads
        .iter()
        .fold(HPolyhedron::universe(dim), |p, g| p.with_ineq(g.clone(), Rat::zero()))
}

fn max_pairing_or_zero(grads: &[Vec<Rat>], h: &[Rat]) -> Rat {
    let m = grads.iter().map(|g| rat::dot(g, h)).max();
    match m {
        Some(v) if v.is_positive() => v,
        _ => Rat::zero(),
    }
}

/// `d >= 1/τ` for an exact distance.
fn reaches(d: &Distance, tau: &Rat) -> Result<bool> {
    match d {
        Distance::Exact(ExtRat::PosInf) => Ok(true),
        Distance::Exact(ExtRat::Finite(v)) => Ok(v * tau >= rat::one()),
        Distance::Approx { .. } => Err(Error::NonPolyhedralNorm),
    }
}

/// `inf { t > 0 : v ∈ t C + K }`, or `0` when `v ∈ K`; `C = None` is empty.
fn min_scale(dim: usize, c: Option<&HPolyhedron>, k: Option<&HPolyhedron>, v: &[Rat]) -> Result<ExtRat> {
    if k.is_some_and(|k| k.contains(v)) || (k.is_none() && rat::is_zero(v)) {
        return Ok(ExtRat::Finite(Rat::zero()));
    }
    let Some(c) = c else {
        return Ok(ExtRat::PosInf);
    };
    // variables (w, t): w ∈ t C and v - w ∈ K
    let lift = |w: &[Rat], t: Rat| {
        let mut row = w.to_vec();
        row.push(t);
        row
    };
    let zero = rat::zeros(dim);
    let mut p = HPolyhedron::universe(dim + 1).with_ineq(lift(&zero, -rat::one()), Rat::zero());
    for a in &c.ineqs {
        p = p.with_ineq(lift(&a.normal, -a.offset.clone()), Rat::zero());
    }
    for e in &c.eqs {
        p = p.with_eq(lift(&e.normal, -e.offset.clone()), Rat::zero());
    }
    match k {
        Some(k) => {
            for q in &k.ineqs {
                p = p.with_ineq(lift(&rat::neg(&q.normal), Rat::zero()), &q.offset - rat::dot(&q.normal, v));
            }
            for q in &k.eqs {
                p = p.with_eq(lift(&rat::neg(&q.normal), Rat::zero()), &q.offset - rat::dot(&q.normal, v));
            }
        }
        None => {
            for (i, vi) in v.iter().enumerate() {
                p = p.with_eq(lift(&rat::unit(dim, i), Rat::zero()), vi.clone());
            }
        }
    }
    let objective = lift(&zero, rat::one());
    match p.lp(&objective, Sense::Min) {
        LpOutcome::Infeasible => Ok(ExtRat::PosInf),
        LpOutcome::Unbounded { .. } => Err(Error::Internal("scale LP unbounded below".into())),
        LpOutcome::Optimal { value, .. } if value.is_positive() => Ok(ExtRat::Finite(value)),
        LpOutcome::Optimal { .. } => {
            // only t = 0 is excluded; any positive feasible t gives inf 0
            Ok(match p.lp(&objective, Sense::Max) {
                LpOutcome::Unbounded { .. } => ExtRat::Finite(Rat::zero()),
                LpOutcome::Optimal { value, .. } if value.is_positive() => ExtRat::Finite(Rat::zero()),
                _ => ExtRat::PosInf,
            })
        }
    }
}

/// The region of directions where `y` attains `max_{y'} <y', h>` over
/// `ys ∪ {0}` and `g` attains `max_{g'} <g', h>`.
fn refined_region(dim: usize, ys: &[Vec<Rat>], y: &[Rat], gs: &[Vec<Rat>], g: Option<&[Rat]>) -> HPolyhedron {
    let mut r = HPolyhedron::universe(dim).with_ineq(rat::neg(y), Rat::zero());
    for other in ys {
        if other.as_slice() != y {
            r = r.with_ineq(rat::sub(other, y), Rat::zero());
        }
    }
    if let Some(g) = g {
        for other in gs {
            if other.as_slice() != g {
                r = r.with_ineq(rat::sub(other, g), Rat::zero());
            }
        }
    }
    r
}

/// `sup_h max_y <y, h> / max{0, max_g <g, h>}`, with `+∞` as soon as some
/// `h` has a positive numerator and a nonpositive denominator.
fn ratio_sup(dim: usize, ys: &[Vec<Rat>], gs: &[Vec<Rat>]) -> TauResult {
    let mut best = ExtRat::Finite(Rat::zero());
    let mut witness = None;
    for y in ys {
        if gs.is_empty() {
            return TauResult {
                value: ExtRat::PosInf,
                flags: BTreeSet::new(),
                witness: Some(y.clone()),
            };
        }
        for g in gs {
            let region = refined_region(dim, ys, y, gs, Some(g));
            let blowup = NncPolyhedron::from(&region)
                .with_row(g.clone(), Rat::zero(), false)
                .with_row(rat::neg(y), Rat::zero(), true);
            if let Some(h) = blowup.witness() {
                return TauResult {
                    value: ExtRat::PosInf,
                    flags: BTreeSet::new(),
                    witness: Some(h),
                };
            }
            // Charnes–Cooper: the ratio is homogeneous, so fix <g, h> = 1
            match region.with_eq(g.clone(), rat::one()).lp(y, Sense::Max) {
                LpOutcome::Infeasible => {}
                LpOutcome::Unbounded { ray, .. } => {
                    return TauResult {
                        value: ExtRat::PosInf,
                        flags: BTreeSet::new(),
                        witness: Some(ray),
                    }
                }
                LpOutcome::Optimal { value, witness: h } => {
                    let v = ExtRat::Finite(value);
                    if v > best {
                        best = v;
                        witness = Some(h);
                    }
                }
            }
        }
    }
    let mut flags = BTreeSet::new();
    if best == ExtRat::Finite(Rat::zero()) {
        flags.insert(Flag::AnyPositiveTau);
    }
    TauResult {
        value: best,
        flags,
        witness,
    }
}

impl PointAnalysis {
    pub fn new(f: &PLFunction, x: &[Rat], norm: &NormSpec) -> Result<Self> {
        check_dim(f.dim, x.len())?;
        let value = f.value(x)?;
        let solution_set = f.solution_set();
        if !solution_set.contains(x) {
            return Err(Error::NotInSet);
        }
        let on_boundary = is_boundary_point(&solution_set, x);
        let lipschitz = f.is_lipschitz_at(x);
        let (clarke, singular, frechet, gradients) = if lipschitz {
            let cells = f.local_cells(x)?;
            (
                subdiff::clarke_from_cells(&cells)?,
                subdiff::clarke_singular_subdiff(f, x)?,
                subdiff::frechet_from_cells(&cells, f.dim)?,
                Some(cells.gradients()),
            )
        } else {
            let e = subdiff::epigraph_subdiffs(f, x)?;
            (e.clarke, e.singular, e.frechet, None)
        };
        Ok(PointAnalysis {
            f: f.clone(),
            anchor: x.to_vec(),
            norm: norm.clone(),
            value,
            on_boundary,
            lipschitz,
            clarke,
            singular,
            frechet,
            gradients,
            tangent: convex(cones::clarke_tangent_cone(&solution_set, x)?)?,
            normal: convex(cones::clarke_normal_cone(&solution_set, x)?)?,
            contingent: cones::contingent_cone(&solution_set, x)?.to_union(),
            frechet_normal: convex(cones::frechet_normal_cone(&solution_set, x)?)?,
            solution_set,
            strong_cache: RefCell::new(HashMap::new()),
            vertex_cache: RefCell::new(HashMap::new()),
            source_cache: RefCell::new(HashMap::new()),
            segment_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.f.dim
    }

    fn subdiff_of(&self, mode: Mode) -> &SubdiffResult {
        match mode {
            Mode::Frechet => &self.frechet,
            _ => &self.clarke,
        }
    }

    fn normal_of(&self, mode: Mode) -> &HPolyhedron {
        match mode {
            Mode::Frechet => &self.frechet_normal,
            _ => &self.normal,
        }
    }

    fn singular_of(&self, mode: Mode) -> Option<&HPolyhedron> {
        match mode {
            Mode::Extended => self.singular.set.as_ref(),
            _ => None,
        }
    }

    fn base_flags(&self, mode: Mode) -> BTreeSet<Flag> {
        let mut flags = BTreeSet::new();
        if !self.on_boundary {
            flags.insert(Flag::NotOnBoundary);
        }
        if self.subdiff_of(mode).is_empty() {
            flags.insert(Flag::ConventionApplied);
        }
        flags
    }

    fn require_zero_value(&self, mode: Mode) -> Result<()> {
        need(
            mode == Mode::Clarke || self.value.is_zero(),
            "extended and Fréchet modes need φ(x̄) = 0",
        )
    }

    fn require_lipschitz(&self) -> Result<&[Vec<Rat>]> {
        self.gradients.as_deref().ok_or(Error::NotLipschitz)
    }

    /// `[0,1] ∂ (+ ∂c∞)` when `unit`, the generated cone otherwise.
    fn generated(&self, mode: Mode, unit: bool) -> Result<Vec<NncPolyhedron>> {
        if let Some(r) = self.segment_cache.borrow().get(&(mode, unit)) {
            return r.clone();
        }
        let one = rat::one();
        let r = segment_sum(
            self.dim(),
            self.subdiff_of(mode).set.as_ref(),
            self.singular_of(mode),
            unit.then_some(&one),
        );
        self.segment_cache.borrow_mut().insert((mode, unit), r.clone());
        r
    }

    /// The basic qualification: `N ⊆ [0, ∞) ∂ (+ ∂c∞)`, and equality in
    /// Fréchet mode.
    pub fn bcq(&self, mode: Mode) -> Result<Verdict> {
        let rhs = self.generated(mode, false)?;
        let lhs = [NncPolyhedron::from(self.normal_of(mode))];
        let mut verdict = Verdict::from_subset(nnc_union_subset(&lhs, &rhs), self.base_flags(mode));
        if mode == Mode::Frechet && verdict.holds {
            if let SubsetVerdict::NotSubset(w) = nnc_union_subset(&rhs, &lhs) {
                verdict.holds = false;
                verdict.witness = Some(w);
            }
        }
        Ok(verdict)
    }

    /// The strong qualification `N ∩ B* ⊆ [0, τ] ∂ (+ ∂c∞)`.
    pub fn strong_bcq(&self, mode: Mode, tau: &Rat) -> Result<Verdict> {
        if !tau.is_positive() {
            return Err(Error::InvalidArgument("τ must be positive".into()));
        }
        self.require_zero_value(mode)?;
        if let Some(v) = self.strong_cache.borrow().get(&(mode, tau.clone())) {
            return Ok(v.clone());
        }
        // [0,τ]C + K = τ([0,1]C + K) for a cone K, so test N ∩ B* / τ
        let ball = self.norm.dual().unit_ball(self.dim())?;
        let lhs = NncPolyhedron::from(&self.normal_of(mode).intersect(&ball)?.scaled(&tau.recip()));
        let rhs = self.generated(mode, true)?;
        let mut verdict = Verdict::from_subset(nnc_union_subset(&[lhs], &rhs), self.base_flags(mode));
        if let Some(w) = verdict.witness.as_mut() {
            *w = rat::scale(w, tau);
        }
        self.strong_cache
            .borrow_mut()
            .insert((mode, tau.clone()), verdict.clone());
        Ok(verdict)
    }

    fn ball_vertices(&self, cone: &HPolyhedron) -> Result<Vec<Vec<Rat>>> {
        let ball = self.norm.dual().unit_ball(self.dim())?;
        let v = cone
            .intersect(&ball)?
            .to_vrep()
            .ok_or_else(|| Error::Internal("cone section is empty".into()))?;
        if !v.rays.is_empty() || !v.lines.is_empty() {
            return Err(Error::Internal("cone section is unbounded".into()));
        }
        Ok(v.points.into_iter().filter(|p| !rat::is_zero(p)).collect())
    }

    /// Infimal valid `τ` for the strong qualification, read off the
    /// vertices of `N ∩ B*`: the right-hand side is convex, so the polytope
    /// is covered iff its vertices are.
    pub fn tau_by_vertices(&self, mode: Mode) -> Result<TauResult> {
        if let Some(r) = self.vertex_cache.borrow().get(&mode) {
            return r.clone();
        }
        let r = self.compute_tau_by_vertices(mode);
        self.vertex_cache.borrow_mut().insert(mode, r.clone());
        r
    }

    fn compute_tau_by_vertices(&self, mode: Mode) -> Result<TauResult> {
        self.require_zero_value(mode)?;
        let mut best = ExtRat::Finite(Rat::zero());
        let mut witness = None;
        for y in self.ball_vertices(self.normal_of(mode))? {
            let t = min_scale(
                self.dim(),
                self.subdiff_of(mode).set.as_ref(),
                self.singular_of(mode),
                &y,
            )?;
            if t > best {
                best = t;
                witness = Some(y);
            }
        }
        let mut flags = self.base_flags(mode);
        if best == ExtRat::Finite(Rat::zero()) {
            flags.insert(Flag::AnyPositiveTau);
        }
        if best.is_infinite() {
            flags.insert(Flag::BcqFails);
        }
        Ok(TauResult {
            value: best,
            flags,
            witness,
        })
    }

    /// The set whose end set bounds the strong constant in each mode.
    pub fn endset_source(&self, mode: Mode) -> Result<HPolyhedron> {
        if let Some(r) = self.source_cache.borrow().get(&mode) {
            return r.clone();
        }
        let r = self.compute_endset_source(mode);
        self.source_cache.borrow_mut().insert(mode, r.clone());
        r
    }

    fn compute_endset_source(&self, mode: Mode) -> Result<HPolyhedron> {
        let n = self.dim();
        match mode {
            Mode::Clarke => match &self.clarke.set {
                Some(c) => c.intersect(&self.normal),
                None => Ok(HPolyhedron::empty(n)),
            },
            Mode::Extended => {
                let normal = NncPolyhedron::from(&self.normal);
                let pieces = segment_sum(n, self.clarke.set.as_ref(), self.singular.set.as_ref(), Some(&rat::one()))?
                    .into_iter()
                    .map(|p| p.intersect(&normal))
                    .collect::<Result<Vec<_>>>()?;
                Ok(closure_of_convex_union(n, &pieces))
            }
            Mode::Frechet => Ok(self.frechet.polyhedron(n)),
        }
    }

    pub fn endset_distance(&self, mode: Mode) -> Result<Distance> {
        distance_to_end_set(&self.endset_source(mode)?, &self.norm)
    }

    /// Best constant from the end-set characterization.
    pub fn best_tau_endset(&self, mode: Mode) -> Result<TauResult> {
        self.require_zero_value(mode)?;
        if mode == Mode::Frechet {
            need(self.frechet.is_bounded(), "Fréchet subdifferential is unbounded")?;
        }
        let bcq = self.bcq(mode)?;
        let mut flags = bcq.flags.clone();
        if !bcq.holds {
            flags.insert(Flag::BcqFails);
            return Ok(TauResult {
                value: ExtRat::PosInf,
                flags,
                witness: bcq.witness,
            });
        }
        let value = match self.endset_distance(mode)? {
            Distance::Exact(ExtRat::PosInf) => {
                flags.insert(Flag::AnyPositiveTau);
                ExtRat::Finite(Rat::zero())
            }
            Distance::Exact(ExtRat::Finite(d)) => {
                if d.is_zero() {
                    return Err(Error::Internal("end set touches the origin".into()));
                }
                ExtRat::Finite(d.recip())
            }
            Distance::Approx { .. } => return Err(Error::NonPolyhedralNorm),
        };
        Ok(TauResult {
            value,
            flags,
            witness: None,
        })
    }

    /// Target set, dual-ball vertices and slopes for a direction-wise test.
    fn directional_data(&self, which: Directional) -> Result<(HPolyhedron, Vec<Vec<Rat>>, Vec<Vec<Rat>>)> {
        let n = self.dim();
        match which {
            Directional::Clarke => {
                let gs = self.require_lipschitz()?.to_vec();
                Ok((self.tangent.clone(), self.ball_vertices(&self.normal)?, gs))
            }
            Directional::ErrorBound => {
                let gs = self.require_lipschitz()?.to_vec();
                let level = sublevel_cone(n, &gs);
                let generated = convex_hull(&[rat::zeros(n)], &gs)?;
                Ok((level, self.ball_vertices(&generated)?, gs))
            }
            Directional::Frechet => {
                need(self.frechet.is_bounded(), "Fréchet subdifferential is unbounded")?;
                let gs = match &self.frechet.set {
                    Some(s) => s.to_vrep().map(|v| v.points).unwrap_or_default(),
                    None => Vec::new(),
                };
                let hull = self.contingent.convex_hull();
                Ok((hull, self.ball_vertices(&self.frechet_normal)?, gs))
            }
        }
    }

    /// Best constant as a supremum of ratios over refined cones.
    pub fn best_tau_directional(&self, mode: Mode) -> Result<TauResult> {
        let which = match mode {
            Mode::Clarke => Directional::Clarke,
            Mode::Frechet => Directional::Frechet,
            Mode::Extended => {
                return Err(Error::InvalidArgument("no direction-wise form in extended mode".into()))
            }
        };
        let (_, ys, gs) = self.directional_data(which)?;
        let mut t = ratio_sup(self.dim(), &ys, &gs);
        t.flags.extend(self.base_flags(mode));
        if t.value.is_infinite() {
            t.flags.insert(Flag::BcqFails);
        }
        Ok(t)
    }

    /// Infimal `τ` with `d(h, {φ° <= 0}) <= τ max{0, φ°(h)}` for all `h`.
    pub fn error_bound_modulus(&self) -> Result<TauResult> {
        let (_, ys, gs) = self.directional_data(Directional::ErrorBound)?;
        Ok(ratio_sup(self.dim(), &ys, &gs))
    }

    /// Tests the direction-wise inequality at the generators of every
    /// refined cone, split further by the sign of the slope so that both
    /// sides are linear on each piece.
    pub fn directional_holds(&self, which: Directional, tau: &Rat) -> Result<Verdict> {
        if !tau.is_positive() {
            return Err(Error::InvalidArgument("τ must be positive".into()));
        }
        let n = self.dim();
        let (target, ys, gs) = self.directional_data(which)?;
        let mut all_y = ys.clone();
        all_y.push(rat::zeros(n));
        let slopes: Vec<Option<&[Rat]>> = if gs.is_empty() {
            vec![None]
        } else {
            gs.iter().map(|g| Some(g.as_slice())).collect()
        };
        let mut seen = BTreeSet::new();
        for y in &all_y {
            for g in &slopes {
                let region = refined_region(n, &ys, y, &gs, *g);
                let halves = match g {
                    Some(g) => vec![
                        region.clone().with_ineq(rat::neg(g), Rat::zero()),
                        region.with_ineq(g.to_vec(), Rat::zero()),
                    ],
                    None => vec![region],
                };
                for half in halves {
                    let Some(v) = half.to_vrep() else { continue };
                    let gens = v
                        .rays
                        .iter()
                        .cloned()
                        .chain(v.lines.iter().flat_map(|l| [l.clone(), rat::neg(l)]));
                    for h in gens {
                        if !seen.insert(h.clone()) {
                            continue;
                        }
                        let d = match distance_to_polyhedron(&h, &target, &self.norm)? {
                            Distance::Exact(ExtRat::Finite(d)) => d,
                            Distance::Exact(ExtRat::PosInf) => {
                                return Err(Error::Internal("tangent target is empty".into()))
                            }
                            Distance::Approx { .. } => return Err(Error::NonPolyhedralNorm),
                        };
                        let support = all_y.iter().map(|y| rat::dot(y, &h)).max().expect("nonempty");
                        if d != support {
                            return Err(Error::Internal(format!(
                                "distance {} differs from the support value {} at h = {}",
                                d,
                                support,
                                rat::fmt_vec(&h)
                            )));
                        }
                        let rhs = tau * max_pairing_or_zero(&gs, &h);
                        if d > rhs {
                            return Ok(Verdict {
                                holds: false,
                                witness: Some(h),
                                flags: BTreeSet::new(),
                            });
                        }
                    }
                }
            }
        }
        Ok(Verdict {
            holds: true,
            witness: None,
            flags: BTreeSet::new(),
        })
    }

    /// `∂c φ ⊆ N_c` decided directly, and `T_c ⊆ {φ° <= 0}` decided on the
    /// generators of `T_c`.
    pub fn subdiff_in_normal_sides(&self) -> Result<(bool, bool)> {
        let gs = self.require_lipschitz()?;
        let left = self.clarke.polyhedron(self.dim()).is_subset_of(&self.normal);
        let v = self
            .tangent
            .to_vrep()
            .ok_or_else(|| Error::Internal("empty tangent cone".into()))?;
        let right = v
            .rays
            .iter()
            .cloned()
            .chain(v.lines.iter().flat_map(|l| [l.clone(), rat::neg(l)]))
            .all(|h| gs.iter().all(|g| !rat::dot(g, &h).is_positive()));
        Ok((left, right))
    }

    pub fn subdiff_in_normal(&self) -> Result<bool> {
        let (left, right) = self.subdiff_in_normal_sides()?;
        if left != right {
            return Err(Error::Internal(format!(
                "subgradient inclusion {left} disagrees with tangent inclusion {right}"
            )));
        }
        Ok(left)
    }

    /// `∂c φ ⊆ N_c`, without requiring Lipschitz behaviour.
    fn subdiff_in_normal_general(&self) -> bool {
        self.clarke.polyhedron(self.dim()).is_subset_of(&self.normal)
    }

    /// `{h : φ°(h) <= 0} ⊆ T_c`.
    pub fn tangent_inclusion(&self) -> Result<bool> {
        let gs = self.require_lipschitz()?;
        Ok(sublevel_cone(self.dim(), gs).is_subset_of(&self.tangent))
    }

    pub fn regular(&self) -> Result<bool> {
        self.require_lipschitz()?;
        subdiff::is_regular(&self.f, &self.anchor)
    }

    pub fn singular_identities(&self, r: &Rat) -> Result<SingularIdentities> {
        if !r.is_positive() {
            return Err(Error::InvalidArgument("r must be positive".into()));
        }
        let n = self.dim();
        let c = self
            .clarke
            .set
            .as_ref()
            .ok_or_else(|| not_applicable("empty Clarke subdifferential"))?;
        let k = self.singular.polyhedron(n);
        let positive = positive_segment_sum(n, c, None, Some(r))?;
        let positive_plus = positive_segment_sum(n, c, Some(&k), Some(r))?;
        let hull = segment_hull(Some(c), r, n)?;
        Ok(SingularIdentities {
            sum_absorbs: minkowski_sum(c, &k.scaled(r))?.set_eq(c),
            open_segment_absorbs: nnc_union_eq(&[positive_plus], std::slice::from_ref(&positive)),
            singular_in_closure: k.is_subset_of(&closure_of_convex_union(n, &[positive])),
            closure_formula: nnc_union_eq(
                &[NncPolyhedron::from(&hull)],
                &segment_sum(n, Some(c), Some(&k), Some(r))?,
            ),
        })
    }

    /// `τ` values to test at: a fixed grid plus the best constant and its
    /// neighbours at relative distance 1/1024.
    fn tau_grid(&self, mode: Mode) -> Vec<Rat> {
        let mut grid: BTreeSet<Rat> = [rat::rat(1, 2), rat::int(1), rat::int(2), rat::int(4)].into_iter().collect();
        if let Ok(t) = self.tau_by_vertices(mode) {
            if let ExtRat::Finite(t) = t.value {
                if t.is_positive() {
                    grid.insert(&t * rat::rat(1023, 1024));
                    grid.insert(&t * rat::rat(1025, 1024));
                    grid.insert(t);
                }
            }
        }
        grid.into_iter().collect()
    }

    fn compare_on_grid(
        &self,
        mode: Mode,
        mut sides: impl FnMut(&Rat) -> Result<(bool, bool)>,
    ) -> Result<CheckResult> {
        let grid = self.tau_grid(mode);
        for tau in &grid {
            let (lhs, rhs) = sides(tau)?;
            if lhs != rhs {
                return Ok(CheckResult::fail(format!("τ = {tau}: left side {lhs}, right side {rhs}")));
            }
        }
        Ok(CheckResult::pass(format!("{} values of τ", grid.len())))
    }

    fn boundary_gate(&self) -> Result<()> {
        need(self.on_boundary, "basepoint is interior to the solution set")
    }

    fn clarke_gate(&self) -> Result<()> {
        self.boundary_gate()?;
        self.require_lipschitz().map(|_| ())
    }

    fn extended_gate(&self) -> Result<()> {
        self.boundary_gate()?;
        self.require_zero_value(Mode::Extended)
    }

    fn frechet_gate(&self) -> Result<()> {
        self.boundary_gate()?;
        self.require_zero_value(Mode::Frechet)?;
        need(self.frechet.is_bounded(), "Fréchet subdifferential is unbounded")
    }

    fn endset_equivalence(&self, mode: Mode, source: &HPolyhedron) -> Result<CheckResult> {
        let bcq = self.bcq(mode)?.holds;
        let d = distance_to_end_set(source, &self.norm)?;
        self.compare_on_grid(mode, |tau| {
            Ok((self.strong_bcq(mode, tau)?.holds, bcq && reaches(&d, tau)?))
        })
    }

    fn routes_agree(&self, mode: Mode) -> Result<CheckResult> {
        let vertices = self.tau_by_vertices(mode)?.value;
        let endset = self.best_tau_endset(mode)?.value;
        let directional = match mode {
            Mode::Extended => vertices.clone(),
            _ => self.best_tau_directional(mode)?.value,
        };
        if vertices == endset && endset == directional {
            Ok(CheckResult::pass(format!("τ* = {endset}")))
        } else {
            Ok(CheckResult::fail(format!(
                "vertex route {vertices}, end-set route {endset}, direction-wise route {directional}"
            )))
        }
    }

    fn tightness(&self, mode: Mode) -> Result<CheckResult> {
        let t = self.tau_by_vertices(mode)?.value;
        let strong = |tau: Rat| self.strong_bcq(mode, &tau).map(|v| v.holds);
        let ok = match &t {
            ExtRat::PosInf => !strong(rat::int(1024))?,
            ExtRat::Finite(t) if t.is_zero() => strong(rat::rat(1, 1024))?,
            ExtRat::Finite(t) => {
                strong(t.clone())?
                    && strong(t * rat::rat(1025, 1024))?
                    && !strong(t * rat::rat(1023, 1024))?
            }
        };
        Ok(if ok {
            CheckResult::pass(format!("τ* = {t}"))
        } else {
            CheckResult::fail(format!("strong qualification does not switch at τ* = {t}"))
        })
    }

    fn monotone(&self, mode: Mode) -> Result<CheckResult> {
        let mut seen_true = None;
        for tau in self.tau_grid(mode) {
            let holds = self.strong_bcq(mode, &tau)?.holds;
            match (&seen_true, holds) {
                (Some(t1), false) => {
                    return Ok(CheckResult::fail(format!("holds at τ = {t1} but not at τ = {tau}")))
                }
                (None, true) => seen_true = Some(tau),
                _ => {}
            }
        }
        Ok(CheckResult::pass("monotone on the grid"))
    }

    fn singular_check(&self) -> Result<CheckResult> {
        for r in [rat::rat(1, 2), rat::int(1), rat::int(2), rat::int(4)] {
            let s = self.singular_identities(&r)?;
            if !s.all() {
                return Ok(CheckResult::fail(format!("r = {r}: {s:?}")));
            }
        }
        Ok(CheckResult::pass("r ∈ {1/2, 1, 2, 4}"))
    }

    fn frechet_segment_closed(&self) -> Result<CheckResult> {
        need(self.frechet.is_bounded(), "Fréchet subdifferential is unbounded")?;
        let n = self.dim();
        for r in [rat::rat(1, 2), rat::int(1), rat::int(2), rat::int(4)] {
            let hull = segment_hull(self.frechet.set.as_ref(), &r, n)?;
            let exact = segment_sum(n, self.frechet.set.as_ref(), None, Some(&r))?;
            if !nnc_union_eq(&[NncPolyhedron::from(&hull)], &exact) {
                return Ok(CheckResult::fail(format!("r = {r}: closure adds points")));
            }
        }
        Ok(CheckResult::pass("r ∈ {1/2, 1, 2, 4}"))
    }

    /// `{h : σ_∂̂(h) <= 0}` equals the closed convex hull of `T(S, x̄)`.
    fn frechet_polar_hull_equality(&self) -> Result<bool> {
        let n = self.dim();
        let gs = match &self.frechet.set {
            Some(s) => s.to_vrep().map(|v| v.points).unwrap_or_default(),
            None => Vec::new(),
        };
        Ok(sublevel_cone(n, &gs).set_eq(&self.contingent.convex_hull()))
    }

    fn endset_forms(&self) -> Result<CheckResult> {
        let mut sources = vec![
            ("clarke", self.endset_source(Mode::Clarke)?),
            ("frechet", self.endset_source(Mode::Frechet)?),
            ("extended", self.endset_source(Mode::Extended)?),
        ];
        if let Some(c) = &self.clarke.set {
            sources.push(("subdifferential", c.clone()));
        }
        let mut seen: Vec<HPolyhedron> = Vec::new();
        for (name, c) in sources {
            if seen.iter().any(|s| s.set_eq(&c)) {
                continue;
            }
            seen.push(c.clone());
            if !end_set_forms_agree(&c)? {
                return Ok(CheckResult::fail(format!("{name}: the two end-set forms differ")));
            }
        }
        Ok(CheckResult::pass("all end sets"))
    }

    fn extended_endset_reduces(&self) -> Result<CheckResult> {
        self.extended_gate()?;
        need(self.subdiff_in_normal_general(), "∂c φ is not inside N_c")?;
        let a = end_set_pieces(&self.endset_source(Mode::Extended)?);
        let b = end_set_pieces(&self.clarke.polyhedron(self.dim()));
        Ok(if union_subset(&a, &b)?.holds() && union_subset(&b, &a)?.holds() {
            CheckResult::pass("end sets coincide")
        } else {
            CheckResult::fail("end set of the extended set differs from the end set of ∂c φ")
        })
    }

    /// Every equivalence, each side computed by its own route.
    pub fn theorem_checks(&self) -> BTreeMap<&'static str, CheckResult> {
        let dim = self.dim();
        let zero_free = |s: &SubdiffResult| !s.contains(&rat::zeros(dim));
        let checks: Vec<(&'static str, Box<dyn Fn() -> Result<CheckResult> + '_>)> = vec![
            ("clarke-strong-iff-endset", Box::new(|| {
                self.clarke_gate()?;
                self.endset_equivalence(Mode::Clarke, &self.endset_source(Mode::Clarke)?)
            })),
            ("clarke-best-tau-routes-agree", Box::new(|| {
                self.clarke_gate()?;
                self.routes_agree(Mode::Clarke)
            })),
            ("clarke-strong-tight-at-best-tau", Box::new(|| {
                self.boundary_gate()?;
                self.tightness(Mode::Clarke)
            })),
            ("clarke-strong-monotone-in-tau", Box::new(|| {
                self.boundary_gate()?;
                self.monotone(Mode::Clarke)
            })),
            ("clarke-strong-iff-subdiff-endset-when-inside-normal", Box::new(|| {
                self.clarke_gate()?;
                need(self.subdiff_in_normal()?, "∂c φ is not inside N_c")?;
                self.endset_equivalence(Mode::Clarke, &self.clarke.polyhedron(dim))
            })),
            ("clarke-strong-iff-subdiff-endset-when-regular", Box::new(|| {
                self.clarke_gate()?;
                need(self.regular()?, "φ is not regular")?;
                self.endset_equivalence(Mode::Clarke, &self.clarke.polyhedron(dim))
            })),
            ("subdiff-in-normal-iff-tangent-in-sublevel", Box::new(|| {
                self.clarke_gate()?;
                let (l, r) = self.subdiff_in_normal_sides()?;
                Ok(if l == r {
                    CheckResult::pass(format!("both {l}"))
                } else {
                    CheckResult::fail(format!("subgradient side {l}, tangent side {r}"))
                })
            })),
            ("regular-implies-subdiff-in-normal", Box::new(|| {
                self.clarke_gate()?;
                need(self.regular()?, "φ is not regular")?;
                Ok(if self.subdiff_in_normal_sides()?.0 {
                    CheckResult::pass("∂c φ ⊆ N_c")
                } else {
                    CheckResult::fail("regular but ∂c φ is not inside N_c")
                })
            })),
            ("bcq-implies-sublevel-in-tangent", Box::new(|| {
                self.clarke_gate()?;
                need(self.bcq(Mode::Clarke)?.holds, "Clarke BCQ fails")?;
                Ok(if self.tangent_inclusion()? {
                    CheckResult::pass("{φ° <= 0} ⊆ T_c")
                } else {
                    CheckResult::fail("BCQ holds but {φ° <= 0} is not inside T_c")
                })
            })),
            ("bcq-iff-sublevel-in-tangent-when-zero-not-subgradient", Box::new(|| {
                self.clarke_gate()?;
                need(zero_free(&self.clarke), "0 ∈ ∂c φ")?;
                let b = self.bcq(Mode::Clarke)?.holds;
                let t = self.tangent_inclusion()?;
                Ok(if b == t {
                    CheckResult::pass(format!("both {b}"))
                } else {
                    CheckResult::fail(format!("BCQ {b}, tangent inclusion {t}"))
                })
            })),
            ("clarke-strong-iff-directional-inequality", Box::new(|| {
                self.clarke_gate()?;
                self.compare_on_grid(Mode::Clarke, |tau| {
                    Ok((
                        self.strong_bcq(Mode::Clarke, tau)?.holds,
                        self.directional_holds(Directional::Clarke, tau)?.holds,
                    ))
                })
            })),
            ("bcq-and-error-bound-imply-strong", Box::new(|| {
                self.clarke_gate()?;
                let bcq = self.bcq(Mode::Clarke)?.holds;
                let eb = self.error_bound_modulus()?.value;
                self.compare_on_grid(Mode::Clarke, |tau| {
                    let premise = bcq && eb <= ExtRat::Finite(tau.clone());
                    Ok((!premise || self.strong_bcq(Mode::Clarke, tau)?.holds, true))
                })
            })),
            ("strong-iff-bcq-and-error-bound-when-inside-normal", Box::new(|| {
                self.clarke_gate()?;
                need(self.subdiff_in_normal()?, "∂c φ is not inside N_c")?;
                self.error_bound_equivalence()
            })),
            ("strong-iff-bcq-and-error-bound-when-regular", Box::new(|| {
                self.clarke_gate()?;
                need(self.regular()?, "φ is not regular")?;
                self.error_bound_equivalence()
            })),
            ("singular-subdiff-identities", Box::new(|| self.singular_check())),
            ("extended-strong-iff-endset", Box::new(|| {
                self.extended_gate()?;
                self.endset_equivalence(Mode::Extended, &self.endset_source(Mode::Extended)?)
            })),
            ("extended-best-tau-routes-agree", Box::new(|| {
                self.extended_gate()?;
                self.routes_agree(Mode::Extended)
            })),
            ("extended-strong-iff-subdiff-endset-when-inside-normal", Box::new(|| {
                self.extended_gate()?;
                need(self.subdiff_in_normal_general(), "∂c φ is not inside N_c")?;
                self.endset_equivalence(Mode::Extended, &self.clarke.polyhedron(dim))
            })),
            ("extended-endset-reduces-to-subdiff-endset", Box::new(|| self.extended_endset_reduces())),
            ("trivial-singular-strong-iff-endset", Box::new(|| {
                self.extended_gate()?;
                need(self.singular_is_trivial(), "∂c∞ φ is not {0}")?;
                self.endset_equivalence(Mode::Clarke, &self.endset_source(Mode::Clarke)?)
            })),
            ("trivial-singular-strong-iff-subdiff-endset-when-inside-normal", Box::new(|| {
                self.extended_gate()?;
                need(self.singular_is_trivial(), "∂c∞ φ is not {0}")?;
                need(self.subdiff_in_normal_general(), "∂c φ is not inside N_c")?;
                self.endset_equivalence(Mode::Clarke, &self.clarke.polyhedron(dim))
            })),
            ("frechet-segment-closed", Box::new(|| self.frechet_segment_closed())),
            ("frechet-strong-iff-endset", Box::new(|| {
                self.frechet_gate()?;
                self.endset_equivalence(Mode::Frechet, &self.frechet.polyhedron(dim))
            })),
            ("frechet-strong-iff-endset-when-lipschitz", Box::new(|| {
                self.clarke_gate()?;
                self.endset_equivalence(Mode::Frechet, &self.frechet.polyhedron(dim))
            })),
            ("frechet-best-tau-routes-agree", Box::new(|| {
                self.frechet_gate()?;
                self.routes_agree(Mode::Frechet)
            })),
            ("frechet-bcq-implies-polar-equals-tangent-hull", Box::new(|| {
                self.boundary_gate()?;
                need(self.frechet.is_bounded(), "Fréchet subdifferential is unbounded")?;
                need(self.bcq(Mode::Frechet)?.holds, "Fréchet BCQ fails")?;
                Ok(if self.frechet_polar_hull_equality()? {
                    CheckResult::pass("equality holds")
                } else {
                    CheckResult::fail("BCQ holds but the polar differs from the tangent hull")
                })
            })),
            ("frechet-bcq-iff-polar-equals-tangent-hull", Box::new(|| {
                self.boundary_gate()?;
                need(self.frechet.is_bounded(), "Fréchet subdifferential is unbounded")?;
                need(zero_free(&self.frechet), "0 ∈ ∂̂ φ")?;
                let b = self.bcq(Mode::Frechet)?.holds;
                let e = self.frechet_polar_hull_equality()?;
                Ok(if b == e {
                    CheckResult::pass(format!("both {b}"))
                } else {
                    CheckResult::fail(format!("BCQ {b}, polar equality {e}"))
                })
            })),
            ("frechet-strong-iff-directional-inequality", Box::new(|| {
                self.frechet_gate()?;
                self.compare_on_grid(Mode::Frechet, |tau| {
                    Ok((
                        self.strong_bcq(Mode::Frechet, tau)?.holds,
                        self.directional_holds(Directional::Frechet, tau)?.holds,
                    ))
                })
            })),
            ("endset-forms-agree", Box::new(|| self.endset_forms())),
        ];
        checks
            .into_iter()
            .map(|(id, check)| {
                let result = match check() {
                    Ok(r) => r,
                    Err(Error::NotApplicable(why)) => CheckResult::not_applicable(why),
                    Err(Error::NotLipschitz) => CheckResult::not_applicable("φ is not known to be Lipschitz at x̄"),
                    Err(Error::NonPolyhedralNorm) => CheckResult::not_applicable("non-polyhedral norm"),
                    Err(e) => CheckResult::fail(format!("error: {e}")),
                };
                (id, result)
            })
            .collect()
    }

    fn singular_is_trivial(&self) -> bool {
        self.singular
            .set
            .as_ref()
            .is_some_and(|s| s.set_eq(&HPolyhedron::singleton(&rat::zeros(self.dim()))))
    }

    fn error_bound_equivalence(&self) -> Result<CheckResult> {
        let bcq = self.bcq(Mode::Clarke)?.holds;
        let eb = self.error_bound_modulus()?.value;
        self.compare_on_grid(Mode::Clarke, |tau| {
            Ok((
                self.strong_bcq(Mode::Clarke, tau)?.holds,
                bcq && eb <= ExtRat::Finite(tau.clone()),
            ))
        })
    }

    pub fn report(&self) -> CQReport {
        CQReport {
            basepoint: self.anchor.clone(),
            phi_value: self.value.clone(),
            norm: self.norm.clone(),
            on_boundary: self.on_boundary,
            lipschitz: self.lipschitz,
            clarke_subdiff: self.clarke.clone(),
            singular_subdiff: self.singular.clone(),
            frechet_subdiff: self.frechet.clone(),
            clarke_tangent: self.tangent.clone(),
            clarke_normal: self.normal.clone(),
            frechet_normal: self.frechet_normal.clone(),
            clarke_bcq: self.bcq(Mode::Clarke),
            clarke_strong_bcq_tau: self.tau_by_vertices(Mode::Clarke),
            extended_bcq: self.bcq(Mode::Extended),
            extended_strong_bcq_tau: self.tau_by_vertices(Mode::Extended),
            frechet_bcq: self.bcq(Mode::Frechet),
            frechet_strong_bcq_tau: self.tau_by_vertices(Mode::Frechet),
            tau_directional_clarke: self.best_tau_directional(Mode::Clarke),
            tau_endset_clarke: self.best_tau_endset(Mode::Clarke),
            tau_endset_extended: self.best_tau_endset(Mode::Extended),
            tau_directional_frechet: self.best_tau_directional(Mode::Frechet),
            tau_endset_frechet: self.best_tau_endset(Mode::Frechet),
            endset_distance_clarke: self.endset_distance(Mode::Clarke),
            endset_distance_frechet: self.endset_distance(Mode::Frechet),
            error_bound_modulus: self.error_bound_modulus(),
            subdiff_in_normal: self.subdiff_in_normal(),
            regular_at_point: self.regular(),
            theorem_checks: self.theorem_checks(),
        }
    }
}

pub fn analyze(f: &PLFunction, x: &[Rat], norm: &NormSpec) -> Result<CQReport> {
    Ok(PointAnalysis::new(f, x, norm)?.report())
}

pub fn check_clarke_bcq(f: &PLFunction, x: &[Rat]) -> Result<Verdict> {
    PointAnalysis::new(f, x, &NormSpec::default())?.bcq(Mode::Clarke)
}

pub fn check_frechet_bcq(f: &PLFunction, x: &[Rat]) -> Result<Verdict> {
    PointAnalysis::new(f, x, &NormSpec::default())?.bcq(Mode::Frechet)
}

pub fn check_strong_bcq(f: &PLFunction, x: &[Rat], tau: &Rat, mode: Mode, norm: &NormSpec) -> Result<Verdict> {
    PointAnalysis::new(f, x, norm)?.strong_bcq(mode, tau)
}

pub fn best_tau_directional(f: &PLFunction, x: &[Rat], mode: Mode, norm: &NormSpec) -> Result<TauResult> {
    PointAnalysis::new(f, x, norm)?.best_tau_directional(mode)
}

pub fn best_tau_endset(f: &PLFunction, x: &[Rat], mode: Mode, norm: &NormSpec) -> Result<TauResult> {
    PointAnalysis::new(f, x, norm)?.best_tau_endset(mode)
}

pub fn check_subdiff_in_normal(f: &PLFunction, x: &[Rat]) -> Result<bool> {
    PointAnalysis::new(f, x, &NormSpec::default())?.subdiff_in_normal()
}

/// `{h : φ°(h) <= 0} ⊆ T_c`; agreement with the basic qualification is
/// enforced when `0 ∉ ∂c φ`.
pub fn check_tangent_inclusion(f: &PLFunction, x: &[Rat]) -> Result<bool> {
    let a = PointAnalysis::new(f, x, &NormSpec::default())?;
    let t = a.tangent_inclusion()?;
    if !a.clarke.contains(&rat::zeros(a.dim())) && a.on_boundary {
        let b = a.bcq(Mode::Clarke)?.holds;
        if b != t {
            return Err(Error::Internal(format!("tangent inclusion {t} but Clarke BCQ {b}")));
        }
    }
    Ok(t)
}

pub fn error_bound_modulus(f: &PLFunction, x: &[Rat], norm: &NormSpec) -> Result<TauResult> {
    PointAnalysis::new(f, x, norm)?.error_bound_modulus()
}

pub fn verify_singular_identities(f: &PLFunction, x: &[Rat], r: &Rat) -> Result<SingularIdentities> {
    PointAnalysis::new(f, x, &NormSpec::default())?.singular_identities(r)
}

pub fn verify_theorems(f: &PLFunction, x: &[Rat], norm: &NormSpec) -> Result<BTreeMap<&'static str, CheckResult>> {
    Ok(PointAnalysis::new(f, x, norm)?.theorem_checks())
}
