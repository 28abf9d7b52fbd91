//! Tangent and normal cones of finite unions of polyhedra.
//!
//! Near a point `a`, a finite union of closed polyhedra coincides with
//! `a + K` where `K` is the union of the feasible-direction cones of the
//! pieces through `a`. Every cone here is computed from `K`.

use num::Zero;

use crate::error::{check_dim, Error, Result};
use crate::geometry::nnc::NncPolyhedron;
use crate::geometry::rat::{self, Rat};
use crate::geometry::{polar_cone, union_subset, ConeSet, HPolyhedron, UnionPolyhedron};

/// Relatively open faces of the hyperplane arrangement of a local cone,
/// each with a point inside and the contingent cone there.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalFaceAtlas {
    pub anchor: Vec<Rat>,
    pub faces: Vec<AtlasFace>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AtlasFace {
    /// Closure of the face, in direction coordinates at the anchor.
    pub face: HPolyhedron,
    /// A point of the set in the relative interior of `anchor + face`.
    pub representative: Vec<Rat>,
    pub contingent: ConeSet,
}

/// Distance (sup norm) of atlas representatives from the anchor.
pub fn representative_radius() -> Rat {
    rat::rat(1, 1024)
}

/// Union of the feasible-direction cones at `a` of the pieces through `a`.
pub fn local_cone(set: &UnionPolyhedron, a: &[Rat]) -> Result<UnionPolyhedron> {
    check_dim(set.dim, a.len())?;
    if !set.contains(a) {
        return Err(Error::NotInSet);
    }
    let mut pieces: Vec<HPolyhedron> = Vec::new();
    for p in set.pieces.iter().filter(|p| p.contains(a)) {
        let t = p.tangent_at(a).canonical();
        if !pieces.contains(&t) {
            pieces.push(t);
        }
    }
    UnionPolyhedron::new(set.dim, drop_covered(pieces))
}

/// Removes pieces contained in another piece.
fn drop_covered(pieces: Vec<HPolyhedron>) -> Vec<HPolyhedron> {
    let mut keep: Vec<HPolyhedron> = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        let covered = pieces.iter().enumerate().any(|(j, q)| {
            j != i && p.is_subset_of(q) && (!q.is_subset_of(p) || j < i)
        });
        if !covered {
            keep.push(p.clone());
        }
    }
    keep
}

fn as_cone_set(u: UnionPolyhedron) -> ConeSet {
    if u.pieces.len() == 1 {
        ConeSet::Convex(u.pieces.into_iter().next().expect("one piece"))
    } else {
        ConeSet::Union(u)
    }
}

/// Bouligand contingent cone `T(A, a)`.
pub fn contingent_cone(set: &UnionPolyhedron, a: &[Rat]) -> Result<ConeSet> {
    Ok(as_cone_set(local_cone(set, a)?))
}

/// Hyperplanes carrying the rows of a union of cones, one normal per
/// hyperplane.
fn arrangement(k: &UnionPolyhedron) -> Vec<Vec<Rat>> {
    let mut planes: Vec<Vec<Rat>> = Vec::new();
    for p in &k.pieces {
        for c in p.ineqs.iter().chain(&p.eqs) {
            if rat::is_zero(&c.normal) {
                continue;
            }
            let n = rat::normalize_line(&c.normal);
            if !planes.contains(&n) {
                planes.push(n);
            }
        }
    }
    planes
}

/// Sign pattern of a point against the arrangement.
fn signature(planes: &[Vec<Rat>], y: &[Rat]) -> Vec<i8> {
    planes
        .iter()
        .map(|a| {
            let v = rat::dot(a, y);
            if v.is_zero() {
                0
            } else if v > Rat::zero() {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// Relatively open faces of the arrangement inside `K`, as (closure,
/// interior point) pairs.
fn faces_in(k: &UnionPolyhedron, planes: &[Vec<Rat>]) -> Vec<(HPolyhedron, Vec<Rat>)> {
    let mut seen: Vec<Vec<i8>> = Vec::new();
    let mut out = Vec::new();
    for piece in &k.pieces {
        let mut cells = vec![NncPolyhedron::from(piece)];
        for a in planes {
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells {
                for sign in [-1i64, 0, 1] {
                    let mut c = cell.clone();
                    if sign == 0 {
                        c = c.with_eq(a.clone(), Rat::zero());
                    } else {
                        let s = rat::int(-sign);
                        c = c.with_row(rat::scale(a, &s), Rat::zero(), true);
                    }
                    if !c.is_empty() {
                        next.push(c);
                    }
                }
            }
            cells = next;
        }
        for cell in cells {
            let y = cell.witness().expect("nonempty cell");
            let sig = signature(planes, &y);
            if !seen.contains(&sig) {
                seen.push(sig);
                out.push((cell.relaxed(), y));
            }
        }
    }
    out
}

fn tangent_of_union_at(k: &UnionPolyhedron, y: &[Rat]) -> UnionPolyhedron {
    let mut pieces: Vec<HPolyhedron> = Vec::new();
    for p in k.pieces.iter().filter(|p| p.contains(y)) {
        let t = p.tangent_at(y);
        if !pieces.contains(&t) {
            pieces.push(t);
        }
    }
    UnionPolyhedron::new(k.dim, pieces).expect("consistent dimensions")
}

fn is_whole_space(p: &HPolyhedron) -> bool {
    p.eqs.iter().all(|c| rat::is_zero(&c.normal)) && p.ineqs.iter().all(|c| rat::is_zero(&c.normal))
}

pub fn face_atlas(set: &UnionPolyhedron, a: &[Rat]) -> Result<LocalFaceAtlas> {
    let k = local_cone(set, a)?;
    let planes = arrangement(&k);
    let radius = representative_radius();
    let faces = faces_in(&k, &planes)
        .into_iter()
        .map(|(face, y)| {
            let norm = rat::norm_inf(&y);
            let rep = if norm.is_zero() {
                a.to_vec()
            } else {
                rat::add(a, &rat::scale(&y, &(&radius / norm)))
            };
            AtlasFace {
                face,
                representative: rep,
                contingent: as_cone_set(tangent_of_union_at(&k, &y)),
            }
        })
        .collect();
    Ok(LocalFaceAtlas {
        anchor: a.to_vec(),
        faces,
    })
}

/// Clarke tangent cone at the apex of a union of polyhedral cones: the
/// intersection of the contingent cones over all faces of the arrangement.
pub fn clarke_tangent_of_local_cone(k: &UnionPolyhedron) -> Result<HPolyhedron> {
    let n = k.dim;
    if k.is_empty() {
        return Err(Error::NotInSet);
    }
    let planes = arrangement(k);
    let mut convex = HPolyhedron::universe(n);
    let mut unions: Vec<UnionPolyhedron> = Vec::new();
    for (_, y) in faces_in(k, &planes) {
        let t = tangent_of_union_at(k, &y);
        if t.pieces.iter().any(is_whole_space) {
            continue;
        }
        if t.pieces.len() == 1 {
            convex = convex.intersect(&t.pieces[0])?;
        } else if !unions.contains(&t) {
            unions.push(t);
        }
    }
    let mut acc = UnionPolyhedron::from_convex(convex.canonical());
    for u in &unions {
        if union_subset(&acc, u)?.holds() {
            continue;
        }
        let next = acc.intersect(u)?;
        acc = UnionPolyhedron::new(n, drop_covered(next.pieces.into_iter().map(|p| p.canonical()).collect()))?;
    }
    let hull = acc.convex_hull();
    let hull_union = UnionPolyhedron::from_convex(hull.clone());
    if !union_subset(&hull_union, &acc)?.holds() {
        return Err(Error::Internal("Clarke tangent cone is not convex".into()));
    }
    Ok(hull.canonical())
}

/// Clarke tangent cone `T_c(A, a)`; always convex.
pub fn clarke_tangent_cone(set: &UnionPolyhedron, a: &[Rat]) -> Result<ConeSet> {
    let k = local_cone(set, a)?;
    Ok(ConeSet::Convex(clarke_tangent_of_local_cone(&k)?))
}

/// Clarke normal cone: polar of the Clarke tangent cone.
pub fn clarke_normal_cone(set: &UnionPolyhedron, a: &[Rat]) -> Result<ConeSet> {
    polar_cone(&clarke_tangent_cone(set, a)?)
}

/// Fréchet normal cone: polar of the contingent cone.
pub fn frechet_normal_cone(set: &UnionPolyhedron, a: &[Rat]) -> Result<ConeSet> {
    polar_cone(&contingent_cone(set, a)?)
}
