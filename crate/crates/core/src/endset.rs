//! End sets: the points of a closed convex set from which the ray out of
//! the origin leaves the set immediately.

use num::{Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::geometry::norm::distance;
use crate::geometry::rat::{self, ExtRat, Rat};
use crate::geometry::{segment_hull, union_subset, Distance, HPolyhedron, LpOutcome, NormSpec, Sense, UnionPolyhedron};

#[derive(Debug, Clone, PartialEq)]
pub struct EndSetResult {
    pub pieces: UnionPolyhedron,
    /// Distance from the origin in the dual of `norm`.
    pub distance_to_origin: Distance,
    pub norm: NormSpec,
}

impl EndSetResult {
    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

/// `sup { t >= 0 : t z ∈ C }`; `EmptySet` when no such `t` exists.
pub fn ray_exit(c: &HPolyhedron, z: &[Rat]) -> Result<ExtRat> {
    check_dim(c.dim, z.len())?;
    if rat::is_zero(z) {
        return Err(Error::InvalidArgument("ray direction must be nonzero".into()));
    }
    let mut line = HPolyhedron::universe(1).with_ineq(vec![rat::int(-1)], Rat::zero());
    for r in &c.ineqs {
        line = line.with_ineq(vec![rat::dot(&r.normal, z)], r.offset.clone());
    }
    for r in &c.eqs {
        line = line.with_eq(vec![rat::dot(&r.normal, z)], r.offset.clone());
    }
    match line.lp(&[rat::one()], Sense::Max) {
        LpOutcome::Optimal { value, .. } => Ok(ExtRat::Finite(value)),
        LpOutcome::Unbounded { .. } => Ok(ExtRat::PosInf),
        LpOutcome::Infeasible => Err(Error::EmptySet),
    }
}

/// `E[C]` as a union of faces of `C`.
pub fn end_set_pieces(c: &HPolyhedron) -> UnionPolyhedron {
    let canon = c.canonical();
    if canon.is_empty() {
        return UnionPolyhedron::new(c.dim, Vec::new()).expect("valid");
    }
    if canon.eqs.iter().any(|e| !e.offset.is_zero()) {
        // the origin is off the affine hull, so no ray stays in C
        return UnionPolyhedron::from_convex(canon);
    }
    let faces = canon
        .ineqs
        .iter()
        .filter(|r| r.offset.is_positive())
        .map(|r| canon.clone().with_eq(r.normal.clone(), r.offset.clone()).canonical())
        .collect();
    UnionPolyhedron::new(c.dim, faces).expect("consistent dimensions")
}

/// `E[C]` computed from the closure of `[0,1] C` instead of `C`.
pub fn end_set_pieces_via_segment_hull(c: &HPolyhedron) -> Result<UnionPolyhedron> {
    if c.is_empty() {
        return UnionPolyhedron::new(c.dim, Vec::new());
    }
    let hull = segment_hull(Some(c), &rat::one(), c.dim)?;
    Ok(end_set_pieces(&hull))
}

/// Both descriptions of the end set give the same set.
pub fn end_set_forms_agree(c: &HPolyhedron) -> Result<bool> {
    let a = end_set_pieces(c);
    let b = end_set_pieces_via_segment_hull(c)?;
    Ok(union_subset(&a, &b)?.holds() && union_subset(&b, &a)?.holds())
}

pub fn end_set(c: &HPolyhedron, norm: &NormSpec) -> Result<EndSetResult> {
    let pieces = end_set_pieces(c);
    let distance_to_origin = distance(&rat::zeros(c.dim), &pieces, &norm.dual())?;
    Ok(EndSetResult {
        pieces,
        distance_to_origin,
        norm: norm.clone(),
    })
}

/// `d(0, E[C])` in the dual norm.
pub fn distance_to_end_set(c: &HPolyhedron, norm: &NormSpec) -> Result<Distance> {
    Ok(end_set(c, norm)?.distance_to_origin)
}

/// Membership by the definition: `z ∈ C` and the ray leaves at `t = 1`.
pub fn in_end_set_by_ray(c: &HPolyhedron, z: &[Rat]) -> Result<bool> {
    if !c.contains(z) || rat::is_zero(z) {
        return Ok(false);
    }
    Ok(ray_exit(c, z)? == ExtRat::Finite(rat::one()))
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
    fn ray_exit_examples() {
        assert_eq!(
            ray_exit(&interval(int(-1), int(1)), &[rat(1, 2)]).unwrap(),
            ExtRat::Finite(int(2))
        );
        let up = HPolyhedron::universe(1).with_ineq(vec![int(-1)], int(-1));
        assert_eq!(ray_exit(&up, &[int(1)]).unwrap(), ExtRat::PosInf);
        assert_eq!(
            ray_exit(&interval(int(-1), rat(1, 2)), &[rat(1, 2)]).unwrap(),
            ExtRat::Finite(int(1))
        );
        assert!(ray_exit(&up, &[int(0)]).is_err());
    }

    #[test]
    fn end_set_examples() {
        let e = end_set(&interval(int(-1), int(1)), &NormSpec::linf()).unwrap();
        assert_eq!(e.pieces.pieces.len(), 2);
        assert!(e.pieces.contains(&[int(-1)]) && e.pieces.contains(&[int(1)]));
        assert!(!e.pieces.contains(&[int(0)]));
        assert_eq!(e.distance_to_origin, Distance::Exact(ExtRat::Finite(int(1))));

        let quad = HPolyhedron::universe(2)
            .with_ineq(vec![int(-1), int(0)], int(0))
            .with_ineq(vec![int(-1), int(-1)], int(0));
        let e = end_set(&quad, &NormSpec::linf()).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.distance_to_origin, Distance::Exact(ExtRat::PosInf));

        let e = end_set_pieces(&interval(int(1), int(2)));
        assert!(e.contains(&[int(2)]) && !e.contains(&[rat(3, 2)]));
        assert!(in_end_set_by_ray(&interval(int(1), int(2)), &[int(2)]).unwrap());
        assert!(!in_end_set_by_ray(&interval(int(1), int(2)), &[rat(3, 2)]).unwrap());

        let d = distance_to_end_set(&interval(int(-1), rat(1, 2)), &NormSpec::linf()).unwrap();
        assert_eq!(d, Distance::Exact(ExtRat::Finite(rat(1, 2))));
    }

    #[test]
    fn affine_hull_off_origin() {
        // a horizontal segment at height 1: every point is an end point
        let seg = HPolyhedron::universe(2)
            .with_eq(vec![int(0), int(1)], int(1))
            .with_ineq(vec![int(1), int(0)], int(1))
            .with_ineq(vec![int(-1), int(0)], int(1));
        let e = end_set_pieces(&seg);
        assert!(e.contains(&[int(0), int(1)]));
        assert!(in_end_set_by_ray(&seg, &[int(0), int(1)]).unwrap());
        assert!(end_set_forms_agree(&seg).unwrap());
        assert!(end_set_forms_agree(&interval(int(1), int(2))).unwrap());
    }
}
