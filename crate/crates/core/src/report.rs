//! Deterministic, machine-readable reports. Rationals are `"p/q"` strings
//! and every set is given in both halfspace and generator form.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cq::{self, CQReport, CheckResult, Field, Flag, Outcome, TauResult, Verdict};
use crate::error::Error;
use crate::geometry::rat::{self, ExtRat, Rat};
use crate::geometry::{Distance, HPolyhedron, NormKind, NormSpec};
use crate::instance::InstanceDoc;
use crate::subdiff::SubdiffResult;

pub const ENGINE_NAME: &str = env!("CARGO_PKG_NAME");
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(Rat::to_string).collect()
}

fn string_rows(m: &[Vec<Rat>]) -> Vec<Vec<String>> {
    m.iter().map(|v| strings(v)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorsDoc {
    pub points: Vec<Vec<String>>,
    pub rays: Vec<Vec<String>>,
    pub lines: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SetDoc {
    pub empty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hrep: Option<HPolyhedron>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vrep: Option<GeneratorsDoc>,
}

impl SetDoc {
    pub fn empty() -> Self {
        SetDoc {
            empty: true,
            hrep: None,
            vrep: None,
        }
    }

    pub fn of(p: &HPolyhedron) -> Self {
        let canon = p.canonical();
        match canon.to_vrep() {
            None => SetDoc::empty(),
            Some(v) => SetDoc {
                empty: false,
                vrep: Some(GeneratorsDoc {
                    points: string_rows(&v.points),
                    rays: string_rows(&v.rays),
                    lines: string_rows(&v.lines),
                }),
                hrep: Some(canon),
            },
        }
    }

    pub fn of_subdiff(s: &SubdiffResult) -> Self {
        s.set.as_ref().map_or_else(SetDoc::empty, SetDoc::of)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictDoc {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub flags: BTreeSet<Flag>,
}

impl From<&Verdict> for VerdictDoc {
    fn from(v: &Verdict) -> Self {
        VerdictDoc {
            holds: v.holds,
            witness: v.witness.as_deref().map(strings),
            flags: v.flags.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TauDoc {
    pub value: ExtRat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub flags: BTreeSet<Flag>,
}

impl From<&TauResult> for TauDoc {
    fn from(t: &TauResult) -> Self {
        TauDoc {
            value: t.value.clone(),
            witness: t.witness.as_deref().map(strings),
            flags: t.flags.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DistanceDoc {
    Exact { value: ExtRat },
    Approx { value: f64, tolerance: f64 },
}

impl From<&Distance> for DistanceDoc {
    fn from(d: &Distance) -> Self {
        match d {
            Distance::Exact(v) => DistanceDoc::Exact { value: v.clone() },
            Distance::Approx { value, tolerance } => DistanceDoc::Approx {
                value: *value,
                tolerance: *tolerance,
            },
        }
    }
}

/// A computed value, an unmet hypothesis, or an error.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FieldDoc<T> {
    Ok { value: T },
    NotApplicable { reason: String },
    Error { message: String },
}

fn is_hypothesis_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NotApplicable(_) | Error::NotLipschitz | Error::NonPolyhedralNorm | Error::NotOnBoundary | Error::NotInSet
    )
}

impl<T> FieldDoc<T> {
    pub fn from_error(e: &Error) -> Self {
        if is_hypothesis_error(e) {
            FieldDoc::NotApplicable { reason: e.to_string() }
        } else {
            FieldDoc::Error { message: e.to_string() }
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            FieldDoc::Ok { value } => Some(value),
            _ => None,
        }
    }

    pub fn is_error(&self) -> bool {
        matches!(self, FieldDoc::Error { .. })
    }
}

fn field<S, T>(f: &Field<S>, conv: impl FnOnce(&S) -> T) -> FieldDoc<T> {
    match f {
        Ok(v) => FieldDoc::Ok { value: conv(v) },
        Err(e) => FieldDoc::from_error(e),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointDoc {
    pub basepoint: Vec<String>,
    pub phi_value: String,
    pub on_boundary: bool,
    pub lipschitz: bool,
    pub clarke_subdiff: SetDoc,
    pub singular_subdiff: SetDoc,
    pub frechet_subdiff: SetDoc,
    pub clarke_tangent: SetDoc,
    pub clarke_normal: SetDoc,
    pub frechet_normal: SetDoc,
    pub clarke_bcq: FieldDoc<VerdictDoc>,
    pub clarke_strong_bcq_tau: FieldDoc<TauDoc>,
    pub extended_bcq: FieldDoc<VerdictDoc>,
    pub extended_strong_bcq_tau: FieldDoc<TauDoc>,
    pub frechet_bcq: FieldDoc<VerdictDoc>,
    pub frechet_strong_bcq_tau: FieldDoc<TauDoc>,
    pub tau_directional_clarke: FieldDoc<TauDoc>,
    pub tau_endset_clarke: FieldDoc<TauDoc>,
    pub tau_endset_extended: FieldDoc<TauDoc>,
    pub tau_directional_frechet: FieldDoc<TauDoc>,
    pub tau_endset_frechet: FieldDoc<TauDoc>,
    pub endset_distance_clarke: FieldDoc<DistanceDoc>,
    pub endset_distance_frechet: FieldDoc<DistanceDoc>,
    pub error_bound_modulus: FieldDoc<TauDoc>,
    pub subdiff_in_normal: FieldDoc<bool>,
    pub regular_at_point: FieldDoc<bool>,
    /// Union of every flag raised at this point.
    pub flags: BTreeSet<Flag>,
    pub theorem_checks: BTreeMap<String, CheckResult>,
}

impl PointDoc {
    pub fn from_report(r: &CQReport) -> Self {
        let mut flags = BTreeSet::new();
        if !r.on_boundary {
            flags.insert(Flag::NotOnBoundary);
        }
        for v in [&r.clarke_bcq, &r.extended_bcq, &r.frechet_bcq].into_iter().flatten() {
            flags.extend(v.flags.iter().copied());
        }
        for t in [
            &r.clarke_strong_bcq_tau,
            &r.extended_strong_bcq_tau,
            &r.frechet_strong_bcq_tau,
            &r.tau_directional_clarke,
            &r.tau_endset_clarke,
            &r.tau_endset_extended,
            &r.tau_directional_frechet,
            &r.tau_endset_frechet,
            &r.error_bound_modulus,
        ]
        .into_iter()
        .flatten()
        {
            flags.extend(t.flags.iter().copied());
        }
        PointDoc {
            basepoint: strings(&r.basepoint),
            phi_value: r.phi_value.to_string(),
            on_boundary: r.on_boundary,
            lipschitz: r.lipschitz,
            clarke_subdiff: SetDoc::of_subdiff(&r.clarke_subdiff),
            singular_subdiff: SetDoc::of_subdiff(&r.singular_subdiff),
            frechet_subdiff: SetDoc::of_subdiff(&r.frechet_subdiff),
            clarke_tangent: SetDoc::of(&r.clarke_tangent),
            clarke_normal: SetDoc::of(&r.clarke_normal),
            frechet_normal: SetDoc::of(&r.frechet_normal),
            clarke_bcq: field(&r.clarke_bcq, |v| VerdictDoc::from(v)),
            clarke_strong_bcq_tau: field(&r.clarke_strong_bcq_tau, |v| TauDoc::from(v)),
            extended_bcq: field(&r.extended_bcq, |v| VerdictDoc::from(v)),
            extended_strong_bcq_tau: field(&r.extended_strong_bcq_tau, |v| TauDoc::from(v)),
            frechet_bcq: field(&r.frechet_bcq, |v| VerdictDoc::from(v)),
            frechet_strong_bcq_tau: field(&r.frechet_strong_bcq_tau, |v| TauDoc::from(v)),
            tau_directional_clarke: field(&r.tau_directional_clarke, |v| TauDoc::from(v)),
            tau_endset_clarke: field(&r.tau_endset_clarke, |v| TauDoc::from(v)),
            tau_endset_extended: field(&r.tau_endset_extended, |v| TauDoc::from(v)),
            tau_directional_frechet: field(&r.tau_directional_frechet, |v| TauDoc::from(v)),
            tau_endset_frechet: field(&r.tau_endset_frechet, |v| TauDoc::from(v)),
            endset_distance_clarke: field(&r.endset_distance_clarke, |v| DistanceDoc::from(v)),
            endset_distance_frechet: field(&r.endset_distance_frechet, |v| DistanceDoc::from(v)),
            error_bound_modulus: field(&r.error_bound_modulus, |v| TauDoc::from(v)),
            subdiff_in_normal: field(&r.subdiff_in_normal, |b| *b),
            regular_at_point: field(&r.regular_at_point, |b| *b),
            flags,
            theorem_checks: r.theorem_checks.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.theorem_checks
            .iter()
            .filter(|(_, c)| c.outcome == Outcome::Fail)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

/// Analysis of one basepoint; points outside the solution set are reported
/// as not applicable.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PointEntry {
    Ok(Box<PointDoc>),
    NotApplicable { basepoint: Vec<String>, reason: String },
    Error { basepoint: Vec<String>, message: String },
}

impl PointEntry {
    pub fn doc(&self) -> Option<&PointDoc> {
        match self {
            PointEntry::Ok(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDoc {
    pub engine: &'static str,
    pub engine_version: &'static str,
    pub dim: usize,
    pub norm: NormKind,
    pub points: Vec<PointEntry>,
    /// Union of the per-point flags.
    pub flags: BTreeSet<Flag>,
}

impl ReportDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn failed_checks(&self) -> Vec<(usize, String)> {
        let mut out = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            match p {
                PointEntry::Ok(d) => out.extend(d.failed_checks().into_iter().map(|k| (i, k.to_string()))),
                PointEntry::Error { message, .. } => out.push((i, format!("error: {message}"))),
                PointEntry::NotApplicable { .. } => {}
            }
        }
        out
    }
}

pub fn analyze_point(f: &crate::plfunc::PLFunction, x: &[Rat], norm: &NormSpec) -> PointEntry {
    match cq::analyze(f, x, norm) {
        Ok(r) => PointEntry::Ok(Box::new(PointDoc::from_report(&r))),
        Err(e) if is_hypothesis_error(&e) || e == Error::OutsideDomain => PointEntry::NotApplicable {
            basepoint: strings(x),
            reason: e.to_string(),
        },
        Err(e) => PointEntry::Error {
            basepoint: strings(x),
            message: e.to_string(),
        },
    }
}

/// Full report for every basepoint of an instance.
pub fn analyze_instance(doc: &InstanceDoc) -> crate::Result<ReportDoc> {
    let f = doc.function()?;
    let norm = doc.norm_spec();
    let points: Vec<PointEntry> = doc.basepoints.iter().map(|x| analyze_point(&f, x, &norm)).collect();
    let flags = points.iter().filter_map(PointEntry::doc).flat_map(|d| d.flags.iter().copied()).collect();
    Ok(ReportDoc {
        engine: ENGINE_NAME,
        engine_version: ENGINE_VERSION,
        dim: doc.dim,
        norm: doc.norm,
        points,
        flags,
    })
}

/// Short text for an extended rational, `+inf` included.
pub fn fmt_ext(e: &ExtRat) -> String {
    e.to_string()
}

pub fn fmt_point(v: &[Rat]) -> String {
    rat::fmt_vec(v)
}

/// Which set an end-set listing is taken of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndsetChoice {
    /// `∂c φ(x̄)`
    Clarke,
    /// `∂̂ φ(x̄)`
    Frechet,
    /// `∂c φ(x̄) ∩ N_c(S, x̄)`
    Intersection,
    /// closure of `([0,1] ∂c φ + ∂c∞ φ) ∩ N_c(S, x̄)`
    Extended,
}

impl EndsetChoice {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "clarke" => Some(EndsetChoice::Clarke),
            "frechet" => Some(EndsetChoice::Frechet),
            "intersection" => Some(EndsetChoice::Intersection),
            "extended" => Some(EndsetChoice::Extended),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EndsetDoc {
    pub basepoint: Vec<String>,
    pub set: EndsetChoice,
    pub source: SetDoc,
    pub empty: bool,
    pub pieces: Vec<SetDoc>,
    pub distance: DistanceDoc,
}

impl EndsetDoc {
    /// Facet listing followed by the distance, for terminals.
    pub fn text(&self) -> String {
        let mut out = format!("basepoint ({})\n", self.basepoint.join(", "));
        if self.empty {
            out.push_str("empty end set\n");
        }
        for (i, p) in self.pieces.iter().enumerate() {
            out.push_str(&format!("piece {i}:\n"));
            if let Some(h) = &p.hrep {
                for c in &h.eqs {
                    out.push_str(&format!("  {} = {}\n", fmt_row(&c.normal), c.offset));
                }
                for c in &h.ineqs {
                    out.push_str(&format!("  {} <= {}\n", fmt_row(&c.normal), c.offset));
                }
            }
        }
        let d = match &self.distance {
            DistanceDoc::Exact { value } => value.to_string(),
            DistanceDoc::Approx { value, tolerance } => format!("{value} (+/- {tolerance})"),
        };
        out.push_str(&format!("distance = {d}\n"));
        out
    }
}

fn fmt_row(a: &[Rat]) -> String {
    let terms: Vec<String> = a.iter().enumerate().map(|(i, c)| format!("{c}*x{}", i + 1)).collect();
    terms.join(" + ")
}

pub fn endset_listing(f: &crate::plfunc::PLFunction, x: &[Rat], norm: &NormSpec, choice: EndsetChoice) -> crate::Result<EndsetDoc> {
    let a = cq::PointAnalysis::new(f, x, norm)?;
    let dim = a.dim();
    let source = match choice {
        EndsetChoice::Clarke => a.clarke.polyhedron(dim),
        EndsetChoice::Frechet => a.frechet.polyhedron(dim),
        EndsetChoice::Intersection => a.endset_source(cq::Mode::Clarke)?,
        EndsetChoice::Extended => a.endset_source(cq::Mode::Extended)?,
    };
    let e = crate::endset::end_set(&source, norm)?;
    Ok(EndsetDoc {
        basepoint: strings(x),
        set: choice,
        source: SetDoc::of(&source),
        empty: e.is_empty(),
        pieces: e.pieces.pieces.iter().map(SetDoc::of).collect(),
        distance: DistanceDoc::from(&e.distance_to_origin),
    })
}
