//! Not-necessarily-closed convex polyhedra (halfspaces may be strict),
//! Fourier–Motzkin projection, and exact inclusion tests between finite
//! unions.

use num::{Signed, Zero};

use super::lp::{LpOutcome, Sense};
use super::poly::{Constraint, HPolyhedron, UnionPolyhedron};
use super::rat::{self, Rat};
use crate::error::{check_dim, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NncRow {
    pub normal: Vec<Rat>,
    pub offset: Rat,
    pub strict: bool,
}

impl NncRow {
    fn holds(&self, x: &[Rat]) -> bool {
        let s = &self.offset - rat::dot(&self.normal, x);
        if self.strict {
            s.is_positive()
        } else {
            !s.is_negative()
        }
    }

    fn negated(&self) -> NncRow {
        NncRow {
            normal: rat::neg(&self.normal),
            offset: -&self.offset,
            strict: !self.strict,
        }
    }

    fn normalized(&self) -> NncRow {
        let c = Constraint::new(self.normal.clone(), self.offset.clone()).normalized();
        NncRow {
            normal: c.normal,
            offset: c.offset,
            strict: self.strict,
        }
    }
}

/// `{ x : a_i x <= b_i or a_i x < b_i, E x = f }`.
#[derive(Debug, Clone, PartialEq)]
pub struct NncPolyhedron {
    pub dim: usize,
    pub rows: Vec<NncRow>,
    pub eqs: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SubsetVerdict {
    Subset,
    /// A point of the left-hand side outside the right-hand side.
    NotSubset(Vec<Rat>),
}

impl SubsetVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SubsetVerdict::Subset)
    }

    pub fn witness(&self) -> Option<&[Rat]> {
        match self {
            SubsetVerdict::Subset => None,
            SubsetVerdict::NotSubset(w) => Some(w),
        }
    }
}

impl From<&HPolyhedron> for NncPolyhedron {
    fn from(p: &HPolyhedron) -> Self {
        NncPolyhedron {
            dim: p.dim,
            rows: p
                .ineqs
                .iter()
                .map(|c| NncRow {
                    normal: c.normal.clone(),
                    offset: c.offset.clone(),
                    strict: false,
                })
                .collect(),
            eqs: p.eqs.clone(),
        }
    }
}

impl NncPolyhedron {
    pub fn universe(dim: usize) -> Self {
        NncPolyhedron {
            dim,
            rows: Vec::new(),
            eqs: Vec::new(),
        }
    }

    pub fn empty(dim: usize) -> Self {
        NncPolyhedron::from(&HPolyhedron::empty(dim))
    }

    pub fn with_row(mut self, normal: Vec<Rat>, offset: Rat, strict: bool) -> Self {
        debug_assert_eq!(normal.len(), self.dim);
        self.rows.push(NncRow {
            normal,
            offset,
            strict,
        });
        self
    }

    pub fn with_eq(mut self, normal: Vec<Rat>, offset: Rat) -> Self {
        debug_assert_eq!(normal.len(), self.dim);
        self.eqs.push(Constraint::new(normal, offset));
        self
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        x.len() == self.dim
            && self.rows.iter().all(|r| r.holds(x))
            && self.eqs.iter().all(|c| c.slack(x).is_zero())
    }

    pub fn intersect(&self, other: &NncPolyhedron) -> Result<NncPolyhedron> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        out.rows.extend(other.rows.iter().cloned());
        out.eqs.extend(other.eqs.iter().cloned());
        Ok(out)
    }

    /// The polyhedron obtained by relaxing every strict row. Equals the
    /// topological closure whenever the set is nonempty.
    pub fn relaxed(&self) -> HPolyhedron {
        HPolyhedron {
            dim: self.dim,
            ineqs: self
                .rows
                .iter()
                .map(|r| Constraint::new(r.normal.clone(), r.offset.clone()))
                .collect(),
            eqs: self.eqs.clone(),
        }
    }

    pub fn closure(&self) -> HPolyhedron {
        if self.is_empty() {
            HPolyhedron::empty(self.dim)
        } else {
            self.relaxed()
        }
    }

    /// A point satisfying every strict row strictly, if one exists.
    pub fn witness(&self) -> Option<Vec<Rat>> {
        if !self.rows.iter().any(|r| r.strict) {
            return self.relaxed().feasible_point();
        }
        let n = self.dim;
        let lift = |v: &[Rat], e: Rat| {
            let mut w = v.to_vec();
            w.push(e);
            w
        };
        let mut lifted = HPolyhedron::universe(n + 1).with_ineq(rat::unit(n + 1, n), rat::one());
        for r in &self.rows {
            let e = if r.strict { rat::one() } else { Rat::zero() };
            lifted = lifted.with_ineq(lift(&r.normal, e), r.offset.clone());
        }
        for c in &self.eqs {
            lifted = lifted.with_eq(lift(&c.normal, Rat::zero()), c.offset.clone());
        }
        match lifted.lp(&rat::unit(n + 1, n), Sense::Max) {
            LpOutcome::Optimal { value, mut witness } if value.is_positive() => {
                witness.pop();
                Some(witness)
            }
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.witness().is_none()
    }

    /// `self \ other` as a disjoint list of nonempty pieces.
    pub fn difference(&self, other: &NncPolyhedron) -> Vec<NncPolyhedron> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        for r in &other.rows {
            let mut outside = cur.clone();
            outside.rows.push(r.negated());
            if !outside.is_empty() {
                out.push(outside);
            }
            cur.rows.push(r.clone());
            if cur.is_empty() {
                return out;
            }
        }
        for e in &other.eqs {
            for sign in [1, -1] {
                let s = rat::int(sign);
                let mut outside = cur.clone();
                outside.rows.push(NncRow {
                    normal: rat::scale(&e.normal, &s),
                    offset: &e.offset * &s,
                    strict: true,
                });
                if !outside.is_empty() {
                    out.push(outside);
                }
            }
            cur.eqs.push(e.clone());
            if cur.is_empty() {
                return out;
            }
        }
        out
    }

    /// Eliminates coordinates `keep..dim` by Fourier–Motzkin, returning the
    /// projection onto the first `keep` coordinates.
    pub fn project_onto_prefix(&self, keep: usize) -> NncPolyhedron {
        let mut cur = self.clone();
        while cur.dim > keep {
            let j = cur.dim - 1;
            cur = cur.eliminate(j);
            if cur.is_trivially_empty() {
                return NncPolyhedron::empty(keep);
            }
            cur.prune();
        }
        cur
    }

    fn is_trivially_empty(&self) -> bool {
        self.rows.iter().any(|r| {
            rat::is_zero(&r.normal)
                && (r.offset.is_negative() || (r.strict && r.offset.is_zero()))
        }) || self
            .eqs
            .iter()
            .any(|e| rat::is_zero(&e.normal) && !e.offset.is_zero())
    }

    fn eliminate(&self, j: usize) -> NncPolyhedron {
        let drop_col = |v: &[Rat]| {
            let mut w = v.to_vec();
            w.remove(j);
            w
        };
        if let Some(k) = self.eqs.iter().position(|e| !e.normal[j].is_zero()) {
            let e = &self.eqs[k];
            let ej = e.normal[j].clone();
            let sub = |normal: &[Rat], offset: &Rat| -> (Vec<Rat>, Rat) {
                let f = &normal[j] / &ej;
                if f.is_zero() {
                    return (drop_col(normal), offset.clone());
                }
                let n: Vec<Rat> = normal.iter().zip(&e.normal).map(|(a, b)| a - &f * b).collect();
                (drop_col(&n), offset - &f * &e.offset)
            };
            let rows = self
                .rows
                .iter()
                .map(|r| {
                    let (normal, offset) = sub(&r.normal, &r.offset);
                    NncRow {
                        normal,
                        offset,
                        strict: r.strict,
                    }
                })
                .collect();
            let eqs = self
                .eqs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, c)| {
                    let (normal, offset) = sub(&c.normal, &c.offset);
                    Constraint::new(normal, offset)
                })
                .collect();
            return NncPolyhedron {
                dim: self.dim - 1,
                rows,
                eqs,
            };
        }
        let mut rows = Vec::new();
        let (mut pos, mut negs) = (Vec::new(), Vec::new());
        for r in &self.rows {
            let c = &r.normal[j];
            if c.is_positive() {
                pos.push(r);
            } else if c.is_negative() {
                negs.push(r);
            } else {
                rows.push(NncRow {
                    normal: drop_col(&r.normal),
                    offset: r.offset.clone(),
                    strict: r.strict,
                });
            }
        }
        for p in &pos {
            for q in &negs {
                let lp = -&q.normal[j];
                let lq = p.normal[j].clone();
                let normal: Vec<Rat> = p
                    .normal
                    .iter()
                    .zip(&q.normal)
                    .map(|(a, b)| &lp * a + &lq * b)
                    .collect();
                rows.push(
                    NncRow {
                        normal: drop_col(&normal),
                        offset: &lp * &p.offset + &lq * &q.offset,
                        strict: p.strict || q.strict,
                    }
                    .normalized(),
                );
            }
        }
        NncPolyhedron {
            dim: self.dim - 1,
            rows,
            eqs: self.eqs.iter().map(|c| Constraint::new(drop_col(&c.normal), c.offset.clone())).collect(),
        }
    }

    /// Removes duplicate and implied rows (sound but not necessarily
    /// minimal for strict rows).
    fn prune(&mut self) {
        let mut rows: Vec<NncRow> = Vec::new();
        for r in self.rows.drain(..) {
            if rat::is_zero(&r.normal) {
                continue;
            }
            let r = r.normalized();
            if let Some(existing) = rows
                .iter_mut()
                .find(|x| x.normal == r.normal && x.offset == r.offset)
            {
                existing.strict |= r.strict;
            } else {
                rows.push(r);
            }
        }
        self.eqs.retain(|e| !rat::is_zero(&e.normal));
        let mut i = 0;
        while i < rows.len() {
            let others = HPolyhedron {
                dim: self.dim,
                ineqs: rows
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, r)| Constraint::new(r.normal.clone(), r.offset.clone()))
                    .collect(),
                eqs: self.eqs.clone(),
            };
            let redundant = match others.lp(&rows[i].normal, Sense::Max) {
                LpOutcome::Optimal { value, .. } => {
                    if rows[i].strict {
                        value < rows[i].offset
                    } else {
                        value <= rows[i].offset
                    }
                }
                LpOutcome::Unbounded { .. } => false,
                LpOutcome::Infeasible => false,
            };
            if redundant {
                rows.remove(i);
            } else {
                i += 1;
            }
        }
        self.rows = rows;
    }
}

/// `[0, r] C + K` as a union of pieces, with `r = None` meaning `[0, ∞)`.
/// `C = None` is the empty set, for which `[0, r] C` is `{0}`; `K = None`
/// is `{0}`. The result is convex but not closed in general.
pub fn segment_sum(
    dim: usize,
    c: Option<&HPolyhedron>,
    k: Option<&HPolyhedron>,
    r: Option<&Rat>,
) -> Result<Vec<NncPolyhedron>> {
    if let Some(c) = c {
        check_dim(dim, c.dim)?;
    }
    if let Some(k) = k {
        check_dim(dim, k.dim)?;
    }
    let base = match k {
        Some(k) => NncPolyhedron::from(k),
        None => NncPolyhedron::from(&HPolyhedron::singleton(&rat::zeros(dim))),
    };
    let mut out = vec![base];
    if let Some(c) = c.filter(|c| !c.is_empty()) {
        let positive = positive_segment_sum(dim, c, k, r)?;
        if !positive.is_empty() {
            out.push(positive);
        }
    }
    Ok(out)
}

/// `(0, r] C + K` for nonempty `C`, with `r = None` meaning `(0, ∞)` and
/// `K = None` meaning `{0}`.
pub fn positive_segment_sum(
    dim: usize,
    c: &HPolyhedron,
    k: Option<&HPolyhedron>,
    r: Option<&Rat>,
) -> Result<NncPolyhedron> {
    check_dim(dim, c.dim)?;
    if let Some(k) = k {
        check_dim(dim, k.dim)?;
    }
    // variables (z, w, t) with w ∈ t C, z - w ∈ K, 0 < t <= r
    let m = 2 * dim + 1;
    let row = |z: &[Rat], w: &[Rat], t: Rat| {
        let mut v = Vec::with_capacity(m);
        v.extend_from_slice(z);
        v.extend_from_slice(w);
        v.push(t);
        v
    };
    let zero = rat::zeros(dim);
    let mut lifted = NncPolyhedron::universe(m).with_row(row(&zero, &zero, -rat::one()), Rat::zero(), true);
    if let Some(r) = r {
        lifted = lifted.with_row(row(&zero, &zero, rat::one()), r.clone(), false);
    }
    for a in &c.ineqs {
        lifted = lifted.with_row(row(&zero, &a.normal, -a.offset.clone()), Rat::zero(), false);
    }
    for e in &c.eqs {
        lifted = lifted.with_eq(row(&zero, &e.normal, -e.offset.clone()), Rat::zero());
    }
    match k {
        Some(k) => {
            for p in &k.ineqs {
                lifted = lifted.with_row(row(&p.normal, &rat::neg(&p.normal), Rat::zero()), p.offset.clone(), false);
            }
            for q in &k.eqs {
                lifted = lifted.with_eq(row(&q.normal, &rat::neg(&q.normal), Rat::zero()), q.offset.clone());
            }
        }
        None => {
            for i in 0..dim {
                let e = rat::unit(dim, i);
                lifted = lifted.with_eq(row(&e, &rat::neg(&e), Rat::zero()), Rat::zero());
            }
        }
    }
    Ok(lifted.project_onto_prefix(dim))
}
/// Closure of a convex set given as a union of pieces.
pub fn closure_of_convex_union(dim: usize, pieces: &[NncPolyhedron]) -> HPolyhedron {
    let closed: Vec<HPolyhedron> = pieces
        .iter()
        .filter(|p| !p.is_empty())
        .map(NncPolyhedron::relaxed)
        .collect();
    match closed.len() {
        0 => HPolyhedron::empty(dim),
        1 => closed.into_iter().next().expect("one piece").canonical(),
        _ => UnionPolyhedron::new(dim, closed).expect("consistent dimensions").convex_hull(),
    }
}

/// Set equality of two unions of pieces.
pub fn nnc_union_eq(a: &[NncPolyhedron], b: &[NncPolyhedron]) -> bool {
    nnc_union_subset(a, b).holds() && nnc_union_subset(b, a).holds()
}

/// Exact test of `⋃ a ⊆ ⋃ b` for pieces that may have strict rows.
pub fn nnc_union_subset(a: &[NncPolyhedron], b: &[NncPolyhedron]) -> SubsetVerdict {
    for p in a {
        let mut remaining = if p.is_empty() { Vec::new() } else { vec![p.clone()] };
        for q in b {
            let mut next = Vec::new();
            for r in remaining {
                let meets = r.intersect(q).map(|x| !x.is_empty()).unwrap_or(false);
                if meets {
                    next.extend(r.difference(q));
                } else {
                    next.push(r);
                }
            }
            remaining = next;
            if remaining.is_empty() {
                break;
            }
        }
        if let Some(r) = remaining.first() {
            if let Some(w) = r.witness() {
                return SubsetVerdict::NotSubset(w);
            }
        }
    }
    SubsetVerdict::Subset
}

/// Decides `A ⊆ B` for unions of closed polyhedra, with a witness point of
/// `A \ B` on failure.
pub fn union_subset(a: &UnionPolyhedron, b: &UnionPolyhedron) -> Result<SubsetVerdict> {
    check_dim(a.dim, b.dim)?;
    let pa: Vec<NncPolyhedron> = a.pieces.iter().map(NncPolyhedron::from).collect();
    let pb: Vec<NncPolyhedron> = b.pieces.iter().map(NncPolyhedron::from).collect();
    Ok(nnc_union_subset(&pa, &pb))
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

    #[test]
    fn union_subset_examples() {
        let p = UnionPolyhedron::from_convex(HPolyhedron::cube(2, &int(-1), &int(1)));
        assert!(union_subset(&p, &p).unwrap().holds());

        let zero = UnionPolyhedron::from_convex(HPolyhedron::singleton(&[int(0)]));
        let halves = UnionPolyhedron::new(
            1,
            vec![
                HPolyhedron::universe(1).with_ineq(vec![int(-1)], int(0)),
                HPolyhedron::universe(1).with_ineq(vec![int(1)], int(0)),
            ],
        )
        .unwrap();
        assert!(union_subset(&zero, &halves).unwrap().holds());

        let a = UnionPolyhedron::from_convex(interval(int(0), int(1)));
        let b = UnionPolyhedron::new(
            1,
            vec![interval(int(0), rat(1, 2)), interval(rat(3, 4), int(1))],
        )
        .unwrap();
        match union_subset(&a, &b).unwrap() {
            SubsetVerdict::NotSubset(w) => {
                assert!(a.contains(&w));
                assert!(!b.contains(&w));
                assert!(w[0] > rat(1, 2) && w[0] < rat(3, 4));
            }
            SubsetVerdict::Subset => panic!("gap not detected"),
        }
    }

    #[test]
    fn strict_rows_and_witnesses() {
        let open = NncPolyhedron::universe(1)
            .with_row(vec![int(1)], int(1), true)
            .with_row(vec![int(-1)], int(0), true);
        let w = open.witness().unwrap();
        assert!(w[0] > int(0) && w[0] < int(1));
        let point_open = NncPolyhedron::universe(1)
            .with_row(vec![int(1)], int(0), true)
            .with_row(vec![int(-1)], int(0), false);
        assert!(point_open.is_empty());
        // [0,1] is not inside (0,1]
        let half_open = NncPolyhedron::universe(1)
            .with_row(vec![int(1)], int(1), false)
            .with_row(vec![int(-1)], int(0), true);
        let closed = NncPolyhedron::from(&interval(int(0), int(1)));
        assert_eq!(
            nnc_union_subset(&[closed.clone()], &[half_open.clone()]),
            SubsetVerdict::NotSubset(vec![int(0)])
        );
        let origin = NncPolyhedron::from(&HPolyhedron::singleton(&[int(0)]));
        assert!(nnc_union_subset(&[closed], &[half_open, origin]).holds());
    }

    #[test]
    fn segment_sums() {
        let up = HPolyhedron::universe(1).with_ineq(vec![int(-1)], int(-1));
        let ray = HPolyhedron::universe(1).with_ineq(vec![int(-1)], int(0));
        // [0, 1] [1, ∞) is {0} ∪ (0, ∞), i.e. [0, ∞), and it is closed
        let s = segment_sum(1, Some(&up), None, Some(&int(1))).unwrap();
        assert!(nnc_union_eq(&s, &[NncPolyhedron::from(&ray)]));
        // the cone over [1, 2] x {1} misses the open horizontal ray
        let seg = HPolyhedron::universe(2)
            .with_ineq(vec![int(1), int(0)], int(2))
            .with_ineq(vec![int(-1), int(0)], int(-1))
            .with_eq(vec![int(0), int(1)], int(1));
        let cone = segment_sum(2, Some(&seg), None, None).unwrap();
        let contains = |p: &[Rat]| cone.iter().any(|q| q.contains(p));
        assert!(contains(&[int(0), int(0)]));
        assert!(contains(&[int(4), int(3)]));
        assert!(!contains(&[int(1), int(0)]));
        assert!(!contains(&[int(3), int(1)]));
        assert!(!closure_of_convex_union(2, &cone).contains(&[int(1), int(0)]));
        // over an unbounded horizontal ray the closure picks up the axis
        let hray = HPolyhedron::universe(2)
            .with_ineq(vec![int(-1), int(0)], int(-1))
            .with_eq(vec![int(0), int(1)], int(1));
        let cone = segment_sum(2, Some(&hray), None, None).unwrap();
        assert!(!cone.iter().any(|q| q.contains(&[int(1), int(0)])));
        assert!(closure_of_convex_union(2, &cone).contains(&[int(1), int(0)]));
        // an empty set scales to the origin; adding a cone gives the cone
        let s = segment_sum(1, None, Some(&ray), Some(&int(3))).unwrap();
        assert!(nnc_union_eq(&s, &[NncPolyhedron::from(&ray)]));
        // (0, 2] [1, 2] + [0, ∞) = (0, ∞)
        let s = segment_sum(1, Some(&HPolyhedron::universe(1).with_ineq(vec![int(1)], int(2)).with_ineq(vec![int(-1)], int(-1))), Some(&ray), Some(&int(2))).unwrap();
        assert!(nnc_union_eq(&s, &[NncPolyhedron::from(&ray)]));
    }

    #[test]
    fn projection_keeps_strictness() {
        // {(z, t) : 0 < t <= 1, z = 2t} projects to (0, 2]
        let lifted = NncPolyhedron::universe(2)
            .with_row(vec![int(0), int(-1)], int(0), true)
            .with_row(vec![int(0), int(1)], int(1), false)
            .with_eq(vec![int(1), int(-2)], int(0));
        let proj = lifted.project_onto_prefix(1);
        assert!(!proj.contains(&[int(0)]));
        assert!(proj.contains(&[int(2)]));
        assert!(proj.contains(&[rat(1, 1000)]));
        assert!(!proj.contains(&[rat(2001, 1000)]));

        // {(z, t) : t > 0, z >= t} projects to z > 0
        let lifted = NncPolyhedron::universe(2)
            .with_row(vec![int(0), int(-1)], int(0), true)
            .with_row(vec![int(-1), int(1)], int(0), false);
        let proj = lifted.project_onto_prefix(1);
        assert!(!proj.contains(&[int(0)]));
        assert!(proj.contains(&[rat(1, 7)]));
    }
}
