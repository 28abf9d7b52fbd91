//! Closed convex polyhedra in halfspace form, their vertex/ray form, and
//! finite unions of them.

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dd::cone_generators;
use super::lp::{self, LpOutcome, LpProblem, Sense};
use super::rat::{self, dot, is_zero, normalize_direction, normalize_line, Rat};
use crate::error::{check_dim, Error, Result};

/// `<normal, x> <= offset` (or `=` when stored as an equality).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraint {
    #[serde(rename = "a", with = "rat::serde_rat_vec")]
    pub normal: Vec<Rat>,
    #[serde(rename = "b", with = "rat::serde_rat")]
    pub offset: Rat,
}

impl Constraint {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Self {
        Constraint { normal, offset }
    }

    pub fn slack(&self, x: &[Rat]) -> Rat {
        &self.offset - dot(&self.normal, x)
    }

    /// Positive rescaling with the largest absolute coefficient equal to one.
    pub fn normalized(&self) -> Constraint {
        let m = self
            .normal
            .iter()
            .chain(std::iter::once(&self.offset))
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Rat::zero);
        if m.is_zero() {
            return self.clone();
        }
        let s = m.recip();
        Constraint {
            normal: rat::scale(&self.normal, &s),
            offset: &self.offset * &s,
        }
    }
}

/// `{ x : A x <= b, E x = f }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HPolyhedron {
    pub dim: usize,
    pub ineqs: Vec<Constraint>,
    #[serde(default)]
    pub eqs: Vec<Constraint>,
}

/// `conv(points) + cone(rays) + span(lines)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VRep {
    pub dim: usize,
    pub points: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
    pub lines: Vec<Vec<Rat>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Support {
    Value(Rat),
    PosInf,
    EmptySet,
}

impl HPolyhedron {
    pub fn universe(dim: usize) -> Self {
        HPolyhedron {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    /// Canonical empty set `{ x : 0 <= -1 }`.
    pub fn empty(dim: usize) -> Self {
        HPolyhedron {
            dim,
            ineqs: vec![Constraint::new(rat::zeros(dim), rat::int(-1))],
            eqs: Vec::new(),
        }
    }

    pub fn from_constraints(dim: usize, ineqs: Vec<Constraint>, eqs: Vec<Constraint>) -> Result<Self> {
        for c in ineqs.iter().chain(&eqs) {
            check_dim(dim, c.normal.len())?;
        }
        Ok(HPolyhedron { dim, ineqs, eqs })
    }

    pub fn singleton(p: &[Rat]) -> Self {
        let dim = p.len();
        let eqs = (0..dim)
            .map(|i| Constraint::new(rat::unit(dim, i), p[i].clone()))
            .collect();
        HPolyhedron {
            dim,
            ineqs: Vec::new(),
            eqs,
        }
    }

    /// Axis-aligned box `lo <= x_i <= hi`.
    pub fn cube(dim: usize, lo: &Rat, hi: &Rat) -> Self {
        let mut ineqs = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            ineqs.push(Constraint::new(rat::unit(dim, i), hi.clone()));
            ineqs.push(Constraint::new(rat::neg(&rat::unit(dim, i)), -lo));
        }
        HPolyhedron {
            dim,
            ineqs,
            eqs: Vec::new(),
        }
    }

    pub fn with_ineq(mut self, normal: Vec<Rat>, offset: Rat) -> Self {
        debug_assert_eq!(normal.len(), self.dim);
        self.ineqs.push(Constraint::new(normal, offset));
        self
    }

    pub fn with_eq(mut self, normal: Vec<Rat>, offset: Rat) -> Self {
        debug_assert_eq!(normal.len(), self.dim);
        self.eqs.push(Constraint::new(normal, offset));
        self
    }

    pub fn intersect(&self, other: &HPolyhedron) -> Result<HPolyhedron> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        out.ineqs.extend(other.ineqs.iter().cloned());
        out.eqs.extend(other.eqs.iter().cloned());
        Ok(out)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        x.len() == self.dim
            && self.ineqs.iter().all(|c| !c.slack(x).is_negative())
            && self.eqs.iter().all(|c| c.slack(x).is_zero())
    }

    pub fn lp(&self, objective: &[Rat], sense: Sense) -> LpOutcome {
        let problem = LpProblem {
            dim: self.dim,
            ineqs: &self.ineqs,
            eqs: &self.eqs,
        };
        lp::solve(&problem, objective, sense)
    }

    pub fn feasible_point(&self) -> Option<Vec<Rat>> {
        match self.lp(&rat::zeros(self.dim), Sense::Max) {
            LpOutcome::Optimal { witness, .. } => Some(witness),
            LpOutcome::Unbounded { feasible, .. } => Some(feasible),
            LpOutcome::Infeasible => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_point().is_none()
    }

    pub fn support(&self, h: &[Rat]) -> Support {
        match self.lp(h, Sense::Max) {
            LpOutcome::Optimal { value, .. } => Support::Value(value),
            LpOutcome::Unbounded { .. } => Support::PosInf,
            LpOutcome::Infeasible => Support::EmptySet,
        }
    }

    /// `self ⊆ other`, both closed convex.
    pub fn is_subset_of(&self, other: &HPolyhedron) -> bool {
        if self.is_empty() {
            return true;
        }
        let below = |normal: &[Rat], offset: &Rat| match self.support(normal) {
            Support::Value(v) => v <= *offset,
            Support::PosInf => false,
            Support::EmptySet => true,
        };
        other.ineqs.iter().all(|c| below(&c.normal, &c.offset))
            && other
                .eqs
                .iter()
                .all(|c| below(&c.normal, &c.offset) && below(&rat::neg(&c.normal), &-&c.offset))
    }

    pub fn set_eq(&self, other: &HPolyhedron) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    /// Vertex/ray/line form, or `None` when the set is empty.
    pub fn to_vrep(&self) -> Option<VRep> {
        let n = self.dim;
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(self.ineqs.len() + 2 * self.eqs.len() + 1);
        let mut t_row = rat::zeros(n + 1);
        t_row[0] = rat::one();
        for c in &self.eqs {
            let mut r = Vec::with_capacity(n + 1);
            r.push(c.offset.clone());
            r.extend(c.normal.iter().map(|x| -x));
            rows.push(rat::neg(&r));
            rows.push(r);
        }
        rows.push(t_row);
        for c in &self.ineqs {
            let mut r = Vec::with_capacity(n + 1);
            r.push(c.offset.clone());
            r.extend(c.normal.iter().map(|x| -x));
            rows.push(r);
        }
        let gens = cone_generators(n + 1, &rows);
        let mut v = VRep {
            dim: n,
            ..VRep::default()
        };
        for r in gens.rays {
            if r[0].is_positive() {
                let inv = r[0].recip();
                v.points.push(r[1..].iter().map(|x| x * &inv).collect());
            } else {
                v.rays.push(normalize_direction(&r[1..]));
            }
        }
        for l in gens.lines {
            debug_assert!(l[0].is_zero());
            v.lines.push(normalize_line(&l[1..]));
        }
        if v.points.is_empty() {
            None
        } else {
            Some(v)
        }
    }

    /// Irredundant form: facet inequalities plus an equality basis of the
    /// affine hull. Empty input yields [`HPolyhedron::empty`].
    pub fn canonical(&self) -> HPolyhedron {
        match self.to_vrep() {
            Some(v) => v.to_hpolyhedron(),
            None => HPolyhedron::empty(self.dim),
        }
    }

    /// True for a nonempty set that is closed under nonnegative scaling.
    pub fn is_cone(&self) -> bool {
        match self.to_vrep() {
            None => false,
            Some(v) => {
                // a point representative that is not in the lineality space
                // is extreme modulo lineality, so 0 and 2p cannot both lie in P
                self.contains(&rat::zeros(self.dim))
                    && v.points.iter().all(|p| self.contains(&rat::scale(p, &rat::int(2))))
            }
        }
    }

    pub fn is_bounded(&self) -> bool {
        match self.to_vrep() {
            None => true,
            Some(v) => v.rays.is_empty() && v.lines.is_empty(),
        }
    }

    /// `{ x : (x, value) ∈ self }` where `value` is placed at coordinate `coord`.
    pub fn slice(&self, coord: usize, value: &Rat) -> HPolyhedron {
        let cut = |c: &Constraint| {
            let mut normal = c.normal.clone();
            let a = normal.remove(coord);
            Constraint::new(normal, &c.offset - a * value)
        };
        HPolyhedron {
            dim: self.dim - 1,
            ineqs: self.ineqs.iter().map(cut).collect(),
            eqs: self.eqs.iter().map(cut).collect(),
        }
    }

    /// `{ s x : x ∈ self }` for `s > 0`.
    pub fn scaled(&self, s: &Rat) -> HPolyhedron {
        debug_assert!(s.is_positive());
        let sc = |c: &Constraint| Constraint::new(c.normal.clone(), &c.offset * s);
        HPolyhedron {
            dim: self.dim,
            ineqs: self.ineqs.iter().map(sc).collect(),
            eqs: self.eqs.iter().map(sc).collect(),
        }
    }

    /// Recession cone of a nonempty polyhedron.
    pub fn recession_cone(&self) -> HPolyhedron {
        let z = |c: &Constraint| Constraint::new(c.normal.clone(), Rat::zero());
        HPolyhedron {
            dim: self.dim,
            ineqs: self.ineqs.iter().map(z).collect(),
            eqs: self.eqs.iter().map(z).collect(),
        }
    }

    /// Cone of feasible directions at a point of the set: the rows tight at
    /// `a`, with offsets set to zero.
    pub fn tangent_at(&self, a: &[Rat]) -> HPolyhedron {
        let z = |c: &Constraint| Constraint::new(c.normal.clone(), Rat::zero());
        HPolyhedron {
            dim: self.dim,
            ineqs: self.ineqs.iter().filter(|c| c.slack(a).is_zero()).map(z).collect(),
            eqs: self.eqs.iter().map(z).collect(),
        }
    }

    /// True when the set has nonempty interior.
    pub fn is_full_dimensional(&self) -> bool {
        self.interior_point().is_some()
    }

    /// A point satisfying every inequality strictly, if there is one.
    pub fn interior_point(&self) -> Option<Vec<Rat>> {
        if self.eqs.iter().any(|c| !is_zero(&c.normal)) {
            return None;
        }
        if self.eqs.iter().any(|c| !c.offset.is_zero()) {
            return None;
        }
        let mut strict = super::nnc::NncPolyhedron::universe(self.dim);
        for c in &self.ineqs {
            strict = strict.with_row(c.normal.clone(), c.offset.clone(), true);
        }
        strict.witness()
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for c in &self.ineqs {
            parts.push(format!("{}·x <= {}", rat::fmt_vec(&c.normal), c.offset));
        }
        for c in &self.eqs {
            parts.push(format!("{}·x = {}", rat::fmt_vec(&c.normal), c.offset));
        }
        if parts.is_empty() {
            "R^n".to_string()
        } else {
            parts.join("; ")
        }
    }
}

impl VRep {
    pub fn from_points(dim: usize, points: Vec<Vec<Rat>>) -> Self {
        VRep {
            dim,
            points,
            rays: Vec::new(),
            lines: Vec::new(),
        }
    }

    /// Minimal halfspace description of the generated set.
    pub fn to_hpolyhedron(&self) -> HPolyhedron {
        let n = self.dim;
        if self.points.is_empty() {
            return HPolyhedron::empty(n);
        }
        // (beta, alpha) is valid for alpha·x <= beta
        let mut rows = Vec::new();
        for p in &self.points {
            let mut r = Vec::with_capacity(n + 1);
            r.push(rat::one());
            r.extend(p.iter().map(|x| -x));
            rows.push(r);
        }
        for d in &self.rays {
            let mut r = Vec::with_capacity(n + 1);
            r.push(Rat::zero());
            r.extend(d.iter().map(|x| -x));
            rows.push(r);
        }
        for l in &self.lines {
            let mut r = Vec::with_capacity(n + 1);
            r.push(Rat::zero());
            r.extend(l.iter().cloned());
            rows.push(rat::neg(&r));
            rows.push(r);
        }
        let gens = cone_generators(n + 1, &rows);
        let mut ineqs = Vec::new();
        for g in gens.rays {
            if is_zero(&g[1..]) {
                continue;
            }
            ineqs.push(Constraint::new(g[1..].to_vec(), g[0].clone()).normalized());
        }
        let eqs = gens
            .lines
            .into_iter()
            .map(|g| Constraint::new(g[1..].to_vec(), g[0].clone()).normalized())
            .collect();
        HPolyhedron { dim: n, ineqs, eqs }
    }
}

/// Finite union of closed convex polyhedra in a common dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnionPolyhedron {
    pub dim: usize,
    pub pieces: Vec<HPolyhedron>,
}

impl UnionPolyhedron {
    /// Builds a union, discarding empty pieces.
    pub fn new(dim: usize, pieces: Vec<HPolyhedron>) -> Result<Self> {
        for p in &pieces {
            check_dim(dim, p.dim)?;
        }
        let pieces = pieces.into_iter().filter(|p| !p.is_empty()).collect();
        Ok(UnionPolyhedron { dim, pieces })
    }

    pub fn from_convex(p: HPolyhedron) -> Self {
        let dim = p.dim;
        let pieces = if p.is_empty() { Vec::new() } else { vec![p] };
        UnionPolyhedron { dim, pieces }
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    /// Closed convex hull of the union.
    pub fn convex_hull(&self) -> HPolyhedron {
        let mut all = VRep {
            dim: self.dim,
            ..VRep::default()
        };
        for p in &self.pieces {
            if let Some(v) = p.to_vrep() {
                all.points.extend(v.points);
                all.rays.extend(v.rays);
                all.lines.extend(v.lines);
            }
        }
        all.to_hpolyhedron()
    }

    /// Pairwise intersection of two unions.
    pub fn intersect(&self, other: &UnionPolyhedron) -> Result<UnionPolyhedron> {
        check_dim(self.dim, other.dim)?;
        let mut pieces = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                let c = a.intersect(b)?;
                if !c.is_empty() {
                    pieces.push(c);
                }
            }
        }
        Ok(UnionPolyhedron {
            dim: self.dim,
            pieces,
        })
    }
}

/// A convex polyhedral cone or a finite union of polyhedral cones.
#[derive(Debug, Clone, PartialEq)]
pub enum ConeSet {
    Convex(HPolyhedron),
    Union(UnionPolyhedron),
}

impl ConeSet {
    pub fn dim(&self) -> usize {
        match self {
            ConeSet::Convex(p) => p.dim,
            ConeSet::Union(u) => u.dim,
        }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        match self {
            ConeSet::Convex(p) => p.contains(x),
            ConeSet::Union(u) => u.contains(x),
        }
    }

    pub fn to_union(&self) -> UnionPolyhedron {
        match self {
            ConeSet::Convex(p) => UnionPolyhedron::from_convex(p.clone()),
            ConeSet::Union(u) => u.clone(),
        }
    }

    pub fn as_convex(&self) -> Option<&HPolyhedron> {
        match self {
            ConeSet::Convex(p) => Some(p),
            ConeSet::Union(_) => None,
        }
    }

    /// Checks that every piece is a cone.
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            ConeSet::Convex(p) => p.is_cone(),
            ConeSet::Union(u) => !u.pieces.is_empty() && u.pieces.iter().all(HPolyhedron::is_cone),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotACone)
        }
    }
}

pub fn lp_solve(objective: &[Rat], sense: Sense, feasible: &HPolyhedron) -> Result<LpOutcome> {
    check_dim(feasible.dim, objective.len())?;
    Ok(feasible.lp(objective, sense))
}

pub fn support_function(c: &HPolyhedron, h: &[Rat]) -> Result<Support> {
    check_dim(c.dim, h.len())?;
    Ok(c.support(h))
}

fn polar_of_convex_cone(k: &HPolyhedron) -> Result<HPolyhedron> {
    if !k.is_cone() {
        return Err(Error::NotACone);
    }
    let canon = k.canonical();
    let v = VRep {
        dim: k.dim,
        points: vec![rat::zeros(k.dim)],
        rays: canon.ineqs.iter().map(|c| c.normal.clone()).collect(),
        lines: canon.eqs.iter().map(|c| c.normal.clone()).collect(),
    };
    Ok(v.to_hpolyhedron())
}

/// `{ y : <y, h> <= 0 for all h in K }`; for a union this is the
/// intersection of the polars of its pieces.
pub fn polar_cone(k: &ConeSet) -> Result<ConeSet> {
    match k {
        ConeSet::Convex(p) => Ok(ConeSet::Convex(polar_of_convex_cone(p)?)),
        ConeSet::Union(u) => {
            if u.pieces.is_empty() {
                return Err(Error::NotACone);
            }
            let mut acc = HPolyhedron::universe(u.dim);
            for p in &u.pieces {
                acc = acc.intersect(&polar_of_convex_cone(p)?)?;
            }
            Ok(ConeSet::Convex(acc.canonical()))
        }
    }
}

pub fn convex_hull(points: &[Vec<Rat>], rays: &[Vec<Rat>]) -> Result<HPolyhedron> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyInput("convex hull needs at least one point"));
    };
    let dim = first.len();
    for v in points.iter().chain(rays) {
        check_dim(dim, v.len())?;
    }
    Ok(VRep {
        dim,
        points: points.to_vec(),
        rays: rays.to_vec(),
        lines: Vec::new(),
    }
    .to_hpolyhedron())
}

/// Exact `A + B`, computed from the generator forms of both operands.
pub fn minkowski_sum(a: &HPolyhedron, b: &HPolyhedron) -> Result<HPolyhedron> {
    check_dim(a.dim, b.dim)?;
    let va = a.to_vrep().ok_or(Error::EmptySet)?;
    let vb = b.to_vrep().ok_or(Error::EmptySet)?;
    let mut points = Vec::with_capacity(va.points.len() * vb.points.len());
    for p in &va.points {
        for q in &vb.points {
            points.push(rat::add(p, q));
        }
    }
    let v = VRep {
        dim: a.dim,
        points,
        rays: va.rays.into_iter().chain(vb.rays).collect(),
        lines: va.lines.into_iter().chain(vb.lines).collect(),
    };
    Ok(v.to_hpolyhedron())
}

/// Closure of `[0, r] C`; the empty set maps to `{0}`.
pub fn segment_hull(c: Option<&HPolyhedron>, r: &Rat, dim: usize) -> Result<HPolyhedron> {
    if r.is_negative() {
        return Err(Error::InvalidArgument("segment length must be nonnegative".into()));
    }
    let origin = rat::zeros(dim);
    let Some(c) = c else {
        return Ok(HPolyhedron::singleton(&origin));
    };
    check_dim(dim, c.dim)?;
    let Some(v) = c.to_vrep() else {
        return Ok(HPolyhedron::singleton(&origin));
    };
    if r.is_zero() {
        return Ok(HPolyhedron::singleton(&origin));
    }
    let mut points = vec![origin];
    points.extend(v.points.iter().map(|p| rat::scale(p, r)));
    Ok(VRep {
        dim,
        points,
        rays: v.rays,
        lines: v.lines,
    }
    .to_hpolyhedron())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat::{int, rat};

    fn interval(lo: Rat, hi: Rat) -> HPolyhedron {
        HPolyhedron::universe(1)
            .with_ineq(vec![int(1)], hi)
            .with_ineq(vec![int(-1)], -lo)
    }

    fn v(x: &[i64]) -> Vec<Rat> {
        x.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn lp_examples() {
        let p = HPolyhedron::universe(1).with_ineq(v(&[1]), int(1));
        match lp_solve(&v(&[1]), Sense::Max, &p).unwrap() {
            LpOutcome::Optimal { value, witness } => {
                assert_eq!(value, int(1));
                assert_eq!(witness, v(&[1]));
            }
            o => panic!("{o:?}"),
        }
        let unit = HPolyhedron::cube(2, &int(0), &int(1));
        assert_eq!(lp_solve(&v(&[1, 1]), Sense::Max, &unit).unwrap().value(), Some(&int(2)));
        let half = HPolyhedron::universe(1).with_ineq(v(&[-1]), int(0));
        match lp_solve(&v(&[1]), Sense::Max, &half).unwrap() {
            LpOutcome::Unbounded { ray, .. } => assert_eq!(normalize_direction(&ray), v(&[1])),
            o => panic!("{o:?}"),
        }
        assert!(lp_solve(&v(&[1, 1]), Sense::Max, &half).is_err());
    }

    #[test]
    fn support_function_examples() {
        assert_eq!(interval(int(-1), int(1)).support(&v(&[1])), Support::Value(int(1)));
        let quad = HPolyhedron::universe(2).with_ineq(v(&[-1, 0]), int(0)).with_ineq(v(&[0, -1]), int(0));
        assert_eq!(quad.support(&v(&[1, 1])), Support::PosInf);
        assert_eq!(interval(int(-1), rat(1, 2)).support(&v(&[1])), Support::Value(rat(1, 2)));
        assert_eq!(HPolyhedron::empty(1).support(&v(&[1])), Support::EmptySet);
    }

    #[test]
    fn polar_cone_examples() {
        let k = ConeSet::Convex(HPolyhedron::universe(1).with_ineq(v(&[-1]), int(0)));
        let p = polar_cone(&k).unwrap();
        let expect = HPolyhedron::universe(1).with_ineq(v(&[1]), int(0));
        assert!(p.as_convex().unwrap().set_eq(&expect));

        let whole = ConeSet::Convex(HPolyhedron::universe(2));
        let p = polar_cone(&whole).unwrap();
        assert!(p.as_convex().unwrap().set_eq(&HPolyhedron::singleton(&v(&[0, 0]))));

        let ray = |i: usize| {
            VRep {
                dim: 2,
                points: vec![v(&[0, 0])],
                rays: vec![rat::unit(2, i)],
                lines: vec![],
            }
            .to_hpolyhedron()
        };
        let two_rays = ConeSet::Union(UnionPolyhedron::new(2, vec![ray(0), ray(1)]).unwrap());
        let p = polar_cone(&two_rays).unwrap();
        let quad = HPolyhedron::universe(2).with_ineq(v(&[1, 0]), int(0)).with_ineq(v(&[0, 1]), int(0));
        assert!(p.as_convex().unwrap().set_eq(&quad));

        let not_cone = ConeSet::Convex(interval(int(0), int(1)));
        assert_eq!(polar_cone(&not_cone), Err(Error::NotACone));
    }

    #[test]
    fn convex_hull_examples() {
        let seg = convex_hull(&[v(&[0]), v(&[1])], &[]).unwrap();
        assert!(seg.set_eq(&interval(int(0), int(1))));
        assert_eq!(seg.ineqs.len(), 2);

        let diamond = convex_hull(&[v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])], &[]).unwrap();
        assert_eq!(diamond.ineqs.len(), 4);
        assert!(diamond.contains(&[rat(1, 2), rat(1, 2)]));
        assert!(!diamond.contains(&[rat(1, 2), rat(2, 3)]));

        let wedge = convex_hull(&[v(&[1, 0])], &[v(&[-1, -1])]).unwrap();
        let back = wedge.to_vrep().unwrap();
        assert_eq!(back.points, vec![v(&[1, 0])]);
        assert_eq!(back.rays, vec![v(&[-1, -1])]);
        assert_eq!(back.lines.len(), 0);

        assert!(convex_hull(&[], &[]).is_err());
    }

    #[test]
    fn minkowski_examples() {
        let s = minkowski_sum(&interval(int(0), int(1)), &interval(int(0), int(1))).unwrap();
        assert!(s.set_eq(&interval(int(0), int(2))));
        let c = interval(int(-1), int(3));
        let s = minkowski_sum(&HPolyhedron::singleton(&v(&[0])), &c).unwrap();
        assert!(s.set_eq(&c));
        let ray = HPolyhedron::universe(1).with_ineq(v(&[-1]), int(0));
        let s = minkowski_sum(&interval(int(1), int(2)), &ray).unwrap();
        assert!(s.set_eq(&HPolyhedron::universe(1).with_ineq(v(&[-1]), int(-1))));
        assert_eq!(minkowski_sum(&HPolyhedron::empty(1), &ray), Err(Error::EmptySet));
    }

    #[test]
    fn segment_hull_examples() {
        let z = segment_hull(None, &int(1), 1).unwrap();
        assert!(z.set_eq(&HPolyhedron::singleton(&v(&[0]))));
        let s = segment_hull(Some(&interval(int(1), int(2))), &int(1), 1).unwrap();
        assert!(s.set_eq(&interval(int(0), int(2))));
        let up = HPolyhedron::universe(1).with_ineq(v(&[-1]), int(-1));
        let s = segment_hull(Some(&up), &int(1), 1).unwrap();
        assert!(s.set_eq(&HPolyhedron::universe(1).with_ineq(v(&[-1]), int(0))));
    }

    #[test]
    fn canonical_removes_redundancy_and_detects_emptiness() {
        let p = interval(int(0), int(1)).with_ineq(v(&[1]), int(5)).with_ineq(v(&[2]), int(2));
        assert_eq!(p.canonical().ineqs.len(), 2);
        let e = interval(int(2), int(1));
        assert!(e.is_empty());
        assert!(e.canonical().is_empty());
        let line = HPolyhedron::universe(2).with_eq(v(&[1, -1]), int(0)).with_ineq(v(&[1, 0]), int(3)).with_ineq(v(&[0, 1]), int(3));
        let c = line.canonical();
        assert_eq!(c.eqs.len(), 1);
        assert_eq!(c.ineqs.len(), 1);
        assert!(c.set_eq(&line));
    }

    #[test]
    fn cone_detection() {
        assert!(HPolyhedron::universe(2).is_cone());
        assert!(HPolyhedron::singleton(&v(&[0, 0])).is_cone());
        assert!(!HPolyhedron::singleton(&v(&[1, 0])).is_cone());
        assert!(!interval(int(0), int(1)).is_cone());
        assert!(HPolyhedron::universe(1).with_ineq(v(&[1]), int(0)).with_ineq(v(&[1]), int(4)).is_cone());
    }
}
