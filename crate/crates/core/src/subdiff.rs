//! Clarke, Fréchet and singular subdifferentials and directional
//! derivatives of piecewise-linear functions.

use serde::Serialize;

use crate::cones::clarke_tangent_of_local_cone;
use crate::error::{check_dim, Error, Result};
use crate::geometry::rat::{self, ExtRat, Rat};
use crate::geometry::{polar_cone, ConeSet, HPolyhedron, Support, VRep};
use crate::plfunc::{CellComplex, LocalModel, PLFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SubdiffKind {
    Clarke,
    Frechet,
    ClarkeSingular,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubdiffResult {
    /// `None` is the empty set.
    pub set: Option<HPolyhedron>,
    pub kind: SubdiffKind,
    pub basepoint: Vec<Rat>,
}

impl SubdiffResult {
    pub fn new(set: HPolyhedron, kind: SubdiffKind, basepoint: &[Rat]) -> Self {
        let canon = set.canonical();
        let set = if canon.is_empty() { None } else { Some(canon) };
        SubdiffResult {
            set,
            kind,
            basepoint: basepoint.to_vec(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_none()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.set.as_ref().is_some_and(|s| s.contains(x))
    }

    pub fn is_bounded(&self) -> bool {
        self.set.as_ref().is_none_or(HPolyhedron::is_bounded)
    }

    /// The set, with the empty set as `0 <= -1`.
    pub fn polyhedron(&self, dim: usize) -> HPolyhedron {
        self.set.clone().unwrap_or_else(|| HPolyhedron::empty(dim))
    }
}

/// Normal cones of the epigraph at `(x̄, f(x̄))`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpigraphNormals {
    pub clarke: HPolyhedron,
    pub frechet: HPolyhedron,
}

pub fn epigraph_normals(f: &PLFunction, x: &[Rat]) -> Result<EpigraphNormals> {
    let model = f.local_model(x)?;
    epigraph_normals_of(&model)
}

fn epigraph_normals_of(model: &LocalModel) -> Result<EpigraphNormals> {
    let cone = model.epigraph_cone();
    let tc = clarke_tangent_of_local_cone(&cone)?;
    let clarke = match polar_cone(&ConeSet::Convex(tc))? {
        ConeSet::Convex(p) => p,
        ConeSet::Union(_) => unreachable!("polar of a convex cone is convex"),
    };
    let frechet = match polar_cone(&ConeSet::Union(cone))? {
        ConeSet::Convex(p) => p,
        ConeSet::Union(_) => unreachable!("polar is always convex"),
    };
    Ok(EpigraphNormals { clarke, frechet })
}

fn slice_vertical(normal: &HPolyhedron, height: i64) -> HPolyhedron {
    let n = normal.dim - 1;
    normal.slice(n, &rat::int(height))
}

/// `∂c f(x̄)` from the epigraph Clarke normal cone.
pub fn clarke_subdiff_epigraph(f: &PLFunction, x: &[Rat]) -> Result<SubdiffResult> {
    let normals = epigraph_normals(f, x)?;
    Ok(SubdiffResult::new(slice_vertical(&normals.clarke, -1), SubdiffKind::Clarke, x))
}

/// All three subdifferentials from one epigraph computation.
#[derive(Debug, Clone, PartialEq)]
pub struct EpigraphSubdiffs {
    pub clarke: SubdiffResult,
    pub singular: SubdiffResult,
    pub frechet: SubdiffResult,
}

pub fn epigraph_subdiffs(f: &PLFunction, x: &[Rat]) -> Result<EpigraphSubdiffs> {
    let normals = epigraph_normals(f, x)?;
    Ok(EpigraphSubdiffs {
        clarke: SubdiffResult::new(slice_vertical(&normals.clarke, -1), SubdiffKind::Clarke, x),
        singular: SubdiffResult::new(slice_vertical(&normals.clarke, 0), SubdiffKind::ClarkeSingular, x),
        frechet: SubdiffResult::new(slice_vertical(&normals.frechet, -1), SubdiffKind::Frechet, x),
    })
}

/// `∂c f(x̄)` as the hull of the cell gradients; Lipschitz points only.
pub fn clarke_subdiff_cells(f: &PLFunction, x: &[Rat]) -> Result<SubdiffResult> {
    clarke_from_cells(&lipschitz_cells(f, x)?)
}

/// Convex hull of the cell gradients.
pub fn clarke_from_cells(cells: &CellComplex) -> Result<SubdiffResult> {
    let hull = crate::geometry::convex_hull(&cells.gradients(), &[])?;
    Ok(SubdiffResult::new(hull, SubdiffKind::Clarke, &cells.anchor))
}

fn lipschitz_cells(f: &PLFunction, x: &[Rat]) -> Result<CellComplex> {
    check_dim(f.dim, x.len())?;
    if !f.in_domain(x) {
        return Err(Error::OutsideDomain);
    }
    if !f.is_lipschitz_at(x) {
        return Err(Error::NotLipschitz);
    }
    f.local_cells(x)
}

pub fn clarke_subdiff(f: &PLFunction, x: &[Rat]) -> Result<SubdiffResult> {
    if f.is_lipschitz_at(x) {
        clarke_subdiff_cells(f, x)
    } else {
        clarke_subdiff_epigraph(f, x)
    }
}

pub fn clarke_singular_subdiff(f: &PLFunction, x: &[Rat]) -> Result<SubdiffResult> {
    check_dim(f.dim, x.len())?;
    if f.is_lipschitz_at(x) {
        return Ok(SubdiffResult::new(
            HPolyhedron::singleton(&rat::zeros(f.dim)),
            SubdiffKind::ClarkeSingular,
            x,
        ));
    }
    clarke_singular_subdiff_epigraph(f, x)
}

pub fn clarke_singular_subdiff_epigraph(f: &PLFunction, x: &[Rat]) -> Result<SubdiffResult> {
    let normals = epigraph_normals(f, x)?;
    Ok(SubdiffResult::new(
        slice_vertical(&normals.clarke, 0),
        SubdiffKind::ClarkeSingular,
        x,
    ))
}

pub fn frechet_subdiff_epigraph(f: &PLFunction, x: &[Rat]) -> Result<SubdiffResult> {
    let normals = epigraph_normals(f, x)?;
    Ok(SubdiffResult::new(slice_vertical(&normals.frechet, -1), SubdiffKind::Frechet, x))
}

/// `∩_j (g_j + polar(cell_j))` over the local cells; Lipschitz points only.
pub fn frechet_subdiff_cells(f: &PLFunction, x: &[Rat]) -> Result<SubdiffResult> {
    frechet_from_cells(&lipschitz_cells(f, x)?, f.dim)
}

pub fn frechet_from_cells(cells: &CellComplex, dim: usize) -> Result<SubdiffResult> {
    let mut acc = HPolyhedron::universe(dim);
    for c in &cells.cells {
        let canon = c.region.canonical();
        let shifted = VRep {
            dim,
            points: vec![c.gradient.clone()],
            rays: canon.ineqs.iter().map(|r| r.normal.clone()).collect(),
            lines: canon.eqs.iter().map(|r| r.normal.clone()).collect(),
        }
        .to_hpolyhedron();
        acc = acc.intersect(&shifted)?;
    }
    Ok(SubdiffResult::new(acc, SubdiffKind::Frechet, &cells.anchor))
}

pub fn frechet_subdiff(f: &PLFunction, x: &[Rat]) -> Result<SubdiffResult> {
    if f.is_lipschitz_at(x) {
        frechet_subdiff_cells(f, x)
    } else {
        frechet_subdiff_epigraph(f, x)
    }
}

/// Clarke directional derivative `φ°(x̄; h)`, the support function of the
/// Clarke subdifferential.
pub fn clarke_dirderiv(f: &PLFunction, x: &[Rat], h: &[Rat]) -> Result<Rat> {
    check_dim(f.dim, h.len())?;
    let grads = lipschitz_cells(f, x)?.gradients();
    Ok(max_pairing(&grads, h))
}

pub(crate) fn max_pairing(grads: &[Vec<Rat>], h: &[Rat]) -> Rat {
    grads
        .iter()
        .map(|g| rat::dot(g, h))
        .max()
        .expect("at least one gradient")
}

/// One-sided directional derivative `φ'(x̄; h)`, `+∞` when `x̄ + t h`
/// leaves the domain.
pub fn dirderiv(f: &PLFunction, x: &[Rat], h: &[Rat]) -> Result<ExtRat> {
    check_dim(f.dim, h.len())?;
    let model = f.local_model(x)?;
    Ok(match model.derivative(h) {
        Some(v) => ExtRat::Finite(v),
        None => ExtRat::PosInf,
    })
}

/// `φ' = φ°` everywhere. Both are linear on each cell, so agreement on the
/// cell generators decides it.
pub fn is_regular(f: &PLFunction, x: &[Rat]) -> Result<bool> {
    let cells = lipschitz_cells(f, x)?;
    let grads = cells.gradients();
    for c in &cells.cells {
        let v = c.region.to_vrep().ok_or(Error::Internal("empty cell".into()))?;
        let gens = v
            .rays
            .iter()
            .cloned()
            .chain(v.lines.iter().flat_map(|l| [l.clone(), rat::neg(l)]));
        for h in gens {
            if rat::dot(&c.gradient, &h) != max_pairing(&grads, &h) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `σ_{∂c f(x̄)}(h)` through the support function of the computed set.
pub fn clarke_support(sd: &SubdiffResult, h: &[Rat]) -> Option<ExtRat> {
    match sd.set.as_ref()?.support(h) {
        Support::Value(v) => Some(ExtRat::Finite(v)),
        Support::PosInf => Some(ExtRat::PosInf),
        Support::EmptySet => None,
    }
}
