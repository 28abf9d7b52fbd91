//! Piecewise-linear functions built from affine atoms with max, min and
//! domain restriction, together with their solution sets, epigraphs and
//! local cell structure.

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::geometry::nnc::NncPolyhedron;
use crate::geometry::rat::{self, ExtRat, Rat};
use crate::geometry::{HPolyhedron, UnionPolyhedron};

/// `x ↦ <g, x> + c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineAtom {
    #[serde(with = "rat::serde_rat_vec")]
    pub g: Vec<Rat>,
    #[serde(with = "rat::serde_rat")]
    pub c: Rat,
}

impl AffineAtom {
    pub fn new(g: Vec<Rat>, c: Rat) -> Self {
        AffineAtom { g, c }
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        rat::dot(&self.g, x) + &self.c
    }

    pub fn neg(&self) -> AffineAtom {
        AffineAtom::new(rat::neg(&self.g), -&self.c)
    }

    /// `<g, x> + c <= 0` as a halfspace.
    pub fn sublevel(&self) -> HPolyhedron {
        HPolyhedron::universe(self.g.len()).with_ineq(self.g.clone(), -&self.c)
    }
}

/// Expression tree. `Restrict` makes the subexpression `+∞` outside a
/// closed polyhedron, which is how lower semicontinuous jumps are encoded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PLExpr {
    Atom(AffineAtom),
    Max(Vec<PLExpr>),
    Min(Vec<PLExpr>),
    Restrict {
        domain: HPolyhedron,
        expr: Box<PLExpr>,
    },
}

impl PLExpr {
    pub fn atom(g: Vec<Rat>, c: Rat) -> PLExpr {
        PLExpr::Atom(AffineAtom::new(g, c))
    }

    /// `-self`, pushing the sign through max/min. Fails on restrictions,
    /// whose negation is not lower semicontinuous.
    pub fn neg(&self) -> Result<PLExpr> {
        Ok(match self {
            PLExpr::Atom(a) => PLExpr::Atom(a.neg()),
            PLExpr::Max(ch) => PLExpr::Min(ch.iter().map(PLExpr::neg).collect::<Result<_>>()?),
            PLExpr::Min(ch) => PLExpr::Max(ch.iter().map(PLExpr::neg).collect::<Result<_>>()?),
            PLExpr::Restrict { .. } => {
                return Err(Error::InvalidArgument("cannot negate a restricted expression".into()))
            }
        })
    }

    fn validate(&self, dim: usize) -> Result<()> {
        match self {
            PLExpr::Atom(a) => check_dim(dim, a.g.len()),
            PLExpr::Max(ch) | PLExpr::Min(ch) => {
                if ch.len() < 2 {
                    return Err(Error::InvalidArgument("max/min need at least two children".into()));
                }
                ch.iter().try_for_each(|c| c.validate(dim))
            }
            PLExpr::Restrict { domain, expr } => {
                check_dim(dim, domain.dim)?;
                expr.validate(dim)
            }
        }
    }

    pub fn has_restrictions(&self) -> bool {
        match self {
            PLExpr::Atom(_) => false,
            PLExpr::Max(ch) | PLExpr::Min(ch) => ch.iter().any(PLExpr::has_restrictions),
            PLExpr::Restrict { .. } => true,
        }
    }

    pub fn atom_count(&self) -> usize {
        match self {
            PLExpr::Atom(_) => 1,
            PLExpr::Max(ch) | PLExpr::Min(ch) => ch.iter().map(PLExpr::atom_count).sum(),
            PLExpr::Restrict { expr, .. } => expr.atom_count(),
        }
    }

    /// Direct interpreter; `None` stands for `+∞`.
    pub fn eval(&self, x: &[Rat]) -> Option<Rat> {
        match self {
            PLExpr::Atom(a) => Some(a.eval(x)),
            PLExpr::Max(ch) => {
                let mut best: Option<Rat> = None;
                for c in ch {
                    let v = c.eval(x)?;
                    if best.as_ref().is_none_or(|b| v > *b) {
                        best = Some(v);
                    }
                }
                best
            }
            PLExpr::Min(ch) => ch.iter().filter_map(|c| c.eval(x)).min(),
            PLExpr::Restrict { domain, expr } => {
                if domain.contains(x) {
                    expr.eval(x)
                } else {
                    None
                }
            }
        }
    }

    /// `{ x : self(x) <= 0 }` by distributing max over intersection and
    /// min over union.
    fn sublevel(&self, dim: usize) -> Vec<HPolyhedron> {
        match self {
            PLExpr::Atom(a) => vec![a.sublevel()],
            PLExpr::Min(ch) => ch.iter().flat_map(|c| c.sublevel(dim)).collect(),
            PLExpr::Max(ch) => {
                let mut acc = vec![HPolyhedron::universe(dim)];
                for c in ch {
                    let parts = c.sublevel(dim);
                    let mut next = Vec::new();
                    for a in &acc {
                        for p in &parts {
                            let q = a.intersect(p).expect("same dimension");
                            if !q.is_empty() {
                                next.push(q);
                            }
                        }
                    }
                    acc = next;
                    if acc.is_empty() {
                        break;
                    }
                }
                acc
            }
            PLExpr::Restrict { domain, expr } => expr
                .sublevel(dim)
                .into_iter()
                .filter_map(|p| {
                    let q = p.intersect(domain).expect("same dimension");
                    (!q.is_empty()).then_some(q)
                })
                .collect(),
        }
    }

    /// Min-of-pieces form: the value at `x` is the least affine value over
    /// the pieces whose region contains `x`, and `+∞` if there is none.
    fn pieces(&self, dim: usize) -> Vec<Piece> {
        match self {
            PLExpr::Atom(a) => vec![Piece {
                region: HPolyhedron::universe(dim),
                affine: a.clone(),
            }],
            PLExpr::Min(ch) => ch.iter().flat_map(|c| c.pieces(dim)).collect(),
            PLExpr::Restrict { domain, expr } => expr
                .pieces(dim)
                .into_iter()
                .filter_map(|p| {
                    let region = p.region.intersect(domain).expect("same dimension");
                    (!region.is_empty()).then_some(Piece {
                        region,
                        affine: p.affine,
                    })
                })
                .collect(),
            PLExpr::Max(ch) => {
                // max of mins is the min over all choices of the max of the
                // chosen pieces; each max splits by its winner
                let lists: Vec<Vec<Piece>> = ch.iter().map(|c| c.pieces(dim)).collect();
                let mut combos: Vec<(HPolyhedron, Vec<AffineAtom>)> =
                    vec![(HPolyhedron::universe(dim), Vec::new())];
                for list in &lists {
                    let mut next = Vec::new();
                    for (region, chosen) in &combos {
                        for p in list {
                            let r = region.intersect(&p.region).expect("same dimension");
                            if r.is_empty() {
                                continue;
                            }
                            let mut c = chosen.clone();
                            c.push(p.affine.clone());
                            next.push((r, c));
                        }
                    }
                    combos = next;
                }
                let mut out = Vec::new();
                for (region, chosen) in combos {
                    for (w, win) in chosen.iter().enumerate() {
                        if chosen[..w].contains(win) {
                            continue;
                        }
                        let mut r = region.clone();
                        for other in &chosen {
                            if other != win {
                                // other(x) <= win(x)
                                r = r.with_ineq(rat::sub(&other.g, &win.g), &win.c - &other.c);
                            }
                        }
                        if !r.is_empty() {
                            out.push(Piece {
                                region: r,
                                affine: win.clone(),
                            });
                        }
                    }
                }
                out
            }
        }
    }
}

/// One affine piece of a function in min-of-pieces form.
#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub region: HPolyhedron,
    pub affine: AffineAtom,
}

/// A piecewise-linear function on `R^dim`, `+∞` outside `domain`.
#[derive(Debug, Clone, PartialEq)]
pub struct PLFunction {
    pub dim: usize,
    pub expr: PLExpr,
    pub domain: Option<HPolyhedron>,
}

/// Full-dimensional linear pieces of a function near a point, as direction
/// cones at that point.
#[derive(Debug, Clone, PartialEq)]
pub struct CellComplex {
    pub anchor: Vec<Rat>,
    pub local: bool,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    /// Direction cone at the anchor.
    pub region: HPolyhedron,
    pub gradient: Vec<Rat>,
    /// `f(x) = <gradient, x> + offset` on `anchor + region` near the anchor.
    pub offset: Rat,
}

impl CellComplex {
    pub fn gradients(&self) -> Vec<Vec<Rat>> {
        let mut out: Vec<Vec<Rat>> = Vec::new();
        for c in &self.cells {
            if !out.contains(&c.gradient) {
                out.push(c.gradient.clone());
            }
        }
        out
    }
}

/// The first-order model of a function at a point: its epigraph near
/// `(x̄, f(x̄))` is `(x̄, f(x̄))` plus the union over the pieces of
/// `{ (h, s) : h ∈ cone, s >= <gradient, h> }`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalModel {
    pub anchor: Vec<Rat>,
    pub value: Rat,
    pub pieces: Vec<(HPolyhedron, Vec<Rat>)>,
}

impl LocalModel {
    /// One-sided directional derivative; `None` for `+∞`.
    pub fn derivative(&self, h: &[Rat]) -> Option<Rat> {
        self.pieces
            .iter()
            .filter(|(k, _)| k.contains(h))
            .map(|(_, g)| rat::dot(g, h))
            .min()
    }

    /// The local epigraph cone in `R^(dim+1)`, last coordinate vertical.
    pub fn epigraph_cone(&self) -> UnionPolyhedron {
        let n = self.anchor.len();
        let pieces = self
            .pieces
            .iter()
            .map(|(k, g)| {
                let lift = |c: &crate::geometry::Constraint| {
                    let mut a = c.normal.clone();
                    a.push(Rat::zero());
                    (a, c.offset.clone())
                };
                let mut p = HPolyhedron::universe(n + 1);
                for c in &k.ineqs {
                    let (a, b) = lift(c);
                    p = p.with_ineq(a, b);
                }
                for c in &k.eqs {
                    let (a, b) = lift(c);
                    p = p.with_eq(a, b);
                }
                let mut row = g.clone();
                row.push(rat::int(-1));
                p.with_ineq(row, Rat::zero())
            })
            .collect();
        UnionPolyhedron::new(n + 1, pieces).expect("consistent dimensions")
    }

    /// Splits the model into full-dimensional convex cones on each of which
    /// the derivative is linear.
    pub fn cells(&self) -> Vec<(HPolyhedron, Vec<Rat>)> {
        let mut cells: Vec<(HPolyhedron, Vec<Rat>)> = Vec::new();
        for (k, g) in &self.pieces {
            if !k.is_full_dimensional() {
                continue;
            }
            let mut next = Vec::new();
            let mut uncovered = vec![k.clone()];
            for (c, gc) in cells {
                let both = c.intersect(k).expect("same dimension");
                if !both.is_full_dimensional() {
                    next.push((c, gc));
                    continue;
                }
                if &gc == g {
                    next.push((both, gc.clone()));
                } else {
                    let d = rat::sub(&gc, g);
                    // where <gc, h> <= <g, h> the old gradient wins
                    let old = both.clone().with_ineq(d.clone(), Rat::zero());
                    let new = both.with_ineq(rat::neg(&d), Rat::zero());
                    if old.is_full_dimensional() {
                        next.push((old, gc.clone()));
                    }
                    if new.is_full_dimensional() {
                        next.push((new, g.clone()));
                    }
                }
                next.extend(closed_difference(&c, k).into_iter().map(|p| (p, gc.clone())));
                uncovered = uncovered
                    .iter()
                    .flat_map(|u| {
                        if u.intersect(&c).expect("same dimension").is_full_dimensional() {
                            closed_difference(u, &c)
                        } else {
                            vec![u.clone()]
                        }
                    })
                    .collect();
            }
            next.extend(uncovered.into_iter().map(|u| (u, g.clone())));
            cells = next;
        }
        cells
    }
}

/// Full-dimensional closed pieces covering the closure of `p \ q`.
fn closed_difference(p: &HPolyhedron, q: &HPolyhedron) -> Vec<HPolyhedron> {
    NncPolyhedron::from(p)
        .difference(&NncPolyhedron::from(q))
        .into_iter()
        .map(|piece| piece.relaxed())
        .filter(HPolyhedron::is_full_dimensional)
        .collect()
}

impl PLFunction {
    pub fn new(dim: usize, expr: PLExpr, domain: Option<HPolyhedron>) -> Result<Self> {
        expr.validate(dim)?;
        if let Some(d) = &domain {
            check_dim(dim, d.dim)?;
        }
        Ok(PLFunction { dim, expr, domain })
    }

    pub fn evaluate(&self, x: &[Rat]) -> Result<ExtRat> {
        check_dim(self.dim, x.len())?;
        if let Some(d) = &self.domain {
            if !d.contains(x) {
                return Ok(ExtRat::PosInf);
            }
        }
        Ok(match self.expr.eval(x) {
            Some(v) => ExtRat::Finite(v),
            None => ExtRat::PosInf,
        })
    }

    /// The finite value at `x`, or `OutsideDomain`.
    pub fn value(&self, x: &[Rat]) -> Result<Rat> {
        match self.evaluate(x)? {
            ExtRat::Finite(v) => Ok(v),
            ExtRat::PosInf => Err(Error::OutsideDomain),
        }
    }

    pub fn in_domain(&self, x: &[Rat]) -> bool {
        matches!(self.evaluate(x), Ok(ExtRat::Finite(_)))
    }

    /// Pieces of the min-of-pieces form, with the domain folded in.
    pub fn pieces(&self) -> Vec<Piece> {
        let ps = self.expr.pieces(self.dim);
        match &self.domain {
            None => ps,
            Some(d) => ps
                .into_iter()
                .filter_map(|p| {
                    let region = p.region.intersect(d).expect("same dimension");
                    (!region.is_empty()).then_some(Piece {
                        region,
                        affine: p.affine,
                    })
                })
                .collect(),
        }
    }

    /// `{ x ∈ dom f : f(x) <= 0 }`.
    pub fn solution_set(&self) -> UnionPolyhedron {
        let mut parts = self.expr.sublevel(self.dim);
        if let Some(d) = &self.domain {
            parts = parts
                .into_iter()
                .map(|p| p.intersect(d).expect("same dimension"))
                .collect();
        }
        UnionPolyhedron::new(self.dim, parts).expect("consistent dimensions")
    }

    /// `{ (x, r) : f(x) <= r }` in `R^(dim+1)`.
    pub fn epigraph(&self) -> UnionPolyhedron {
        let n = self.dim;
        let pieces = self
            .pieces()
            .into_iter()
            .map(|p| {
                let lift = |c: &crate::geometry::Constraint| {
                    let mut a = c.normal.clone();
                    a.push(Rat::zero());
                    (a, c.offset.clone())
                };
                let mut q = HPolyhedron::universe(n + 1);
                for c in &p.region.ineqs {
                    let (a, b) = lift(c);
                    q = q.with_ineq(a, b);
                }
                for c in &p.region.eqs {
                    let (a, b) = lift(c);
                    q = q.with_eq(a, b);
                }
                let mut row = p.affine.g.clone();
                row.push(rat::int(-1));
                q.with_ineq(row, -p.affine.c)
            })
            .collect();
        UnionPolyhedron::new(n + 1, pieces).expect("consistent dimensions")
    }

    /// Conservative local Lipschitz test: no restrictions and `x̄` interior
    /// to the domain.
    pub fn is_lipschitz_at(&self, x: &[Rat]) -> bool {
        if self.expr.has_restrictions() || x.len() != self.dim {
            return false;
        }
        match &self.domain {
            None => true,
            Some(d) => {
                d.contains(x)
                    && d.eqs.iter().all(|c| rat::is_zero(&c.normal))
                    && d.ineqs.iter().all(|c| c.slack(x).is_positive())
            }
        }
    }

    /// First-order model at `x̄` built from the pieces active there.
    pub fn local_model(&self, x: &[Rat]) -> Result<LocalModel> {
        let value = self.value(x)?;
        let pieces = if self.is_lipschitz_at(x) {
            // continuous case: inactive branches stay inactive nearby, so the
            // tree can be pruned before expanding into pieces
            let pruned = prune_continuous(&self.expr, x);
            pruned
                .pieces(self.dim)
                .into_iter()
                .map(|p| (p.region, p.affine.g))
                .collect()
        } else {
            self.pieces()
                .into_iter()
                .filter(|p| p.region.contains(x) && p.affine.eval(x) == value)
                .map(|p| (p.region.tangent_at(x), p.affine.g))
                .collect()
        };
        Ok(LocalModel {
            anchor: x.to_vec(),
            value,
            pieces,
        })
    }

    pub fn local_cells(&self, x: &[Rat]) -> Result<CellComplex> {
        let model = self.local_model(x)?;
        let raw = if self.is_lipschitz_at(x) {
            linear_cells(&prune_continuous(&self.expr, x), self.dim)
        } else {
            model.cells()
        };
        let cells = raw
            .into_iter()
            .map(|(region, gradient)| {
                let offset = &model.value - rat::dot(&gradient, x);
                Cell {
                    region,
                    gradient,
                    offset,
                }
            })
            .collect();
        Ok(CellComplex {
            anchor: x.to_vec(),
            local: true,
            cells,
        })
    }

    /// `x̄` lies in the set and every neighborhood meets its complement.
    pub fn is_boundary(&self, s: &UnionPolyhedron, x: &[Rat]) -> bool {
        is_boundary_point(s, x)
    }
}

/// `x` belongs to `s` but not to its interior.
pub fn is_boundary_point(s: &UnionPolyhedron, x: &[Rat]) -> bool {
    if !s.contains(x) {
        return false;
    }
    let local: Vec<HPolyhedron> = s
        .pieces
        .iter()
        .filter(|p| p.contains(x))
        .map(|p| p.tangent_at(x))
        .collect();
    let local = UnionPolyhedron::new(x.len(), local).expect("consistent dimensions");
    let all = UnionPolyhedron::from_convex(HPolyhedron::universe(x.len()));
    !crate::geometry::union_subset(&all, &local)
        .expect("same dimension")
        .holds()
}

/// Directional tree of a continuous expression at `x`: inactive children
/// are dropped and offsets vanish.
/// Gradient chosen by a homogeneous max/min tree at `p`, with ties broken
/// as at `p + εe1 + ε²e2 + ...`. Every comparison made on the way is
/// pushed to `rows` as `a·h <= 0`.
fn trace_decisions(e: &PLExpr, p: &[Rat], rows: &mut Vec<Vec<Rat>>) -> Vec<Rat> {
    match e {
        PLExpr::Atom(a) => a.g.clone(),
        PLExpr::Max(ch) | PLExpr::Min(ch) => {
            let grads: Vec<Vec<Rat>> = ch.iter().map(|c| trace_decisions(c, p, rows)).collect();
            let key = |g: &Vec<Rat>| (rat::dot(g, p), g.clone());
            let is_max = matches!(e, PLExpr::Max(_));
            let win = if is_max {
                grads.iter().max_by(|a, b| key(a).cmp(&key(b)))
            } else {
                grads.iter().min_by(|a, b| key(a).cmp(&key(b)))
            }
            .expect("nonempty")
            .clone();
            for g in &grads {
                if *g != win {
                    rows.push(if is_max { rat::sub(g, &win) } else { rat::sub(&win, g) });
                }
            }
            win
        }
        PLExpr::Restrict { expr, .. } => trace_decisions(expr, p, rows),
    }
}

/// Full-dimensional cones on which a homogeneous max/min tree is linear,
/// found one decision region at a time.
fn linear_cells(e: &PLExpr, dim: usize) -> Vec<(HPolyhedron, Vec<Rat>)> {
    let mut out = Vec::new();
    let mut todo = vec![HPolyhedron::universe(dim)];
    while let Some(c) = todo.pop() {
        let Some(p) = c.interior_point() else { continue };
        let mut rows = Vec::new();
        let g = trace_decisions(e, &p, &mut rows);
        let mut region = HPolyhedron::universe(dim);
        for r in rows {
            region = region.with_ineq(r, Rat::zero());
        }
        let region = region.canonical();
        out.push((c.intersect(&region).expect("same dimension").canonical(), g));
        todo.extend(closed_difference(&c, &region).into_iter().map(|q| q.canonical()));
    }
    out
}

fn prune_continuous(e: &PLExpr, x: &[Rat]) -> PLExpr {
    match e {
        PLExpr::Atom(a) => PLExpr::atom(a.g.clone(), Rat::zero()),
        PLExpr::Max(ch) | PLExpr::Min(ch) => {
            let vals: Vec<Rat> = ch.iter().map(|c| c.eval(x).expect("finite")).collect();
            let target = if matches!(e, PLExpr::Max(_)) {
                vals.iter().max()
            } else {
                vals.iter().min()
            }
            .expect("nonempty")
            .clone();
            let kept: Vec<PLExpr> = ch
                .iter()
                .zip(&vals)
                .filter(|(_, v)| **v == target)
                .map(|(c, _)| prune_continuous(c, x))
                .collect();
            if kept.len() == 1 {
                kept.into_iter().next().expect("one child")
            } else if matches!(e, PLExpr::Max(_)) {
                PLExpr::Max(kept)
            } else {
                PLExpr::Min(kept)
            }
        }
        PLExpr::Restrict { expr, .. } => prune_continuous(expr, x),
    }
}
