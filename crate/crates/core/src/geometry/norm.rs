//! Norms on the primal space and their duals, unit balls and exact
//! point-to-set distances.

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::lp::{LpOutcome, Sense};
use super::poly::{HPolyhedron, UnionPolyhedron};
use super::rat::{self, ExtRat, Rat};
use crate::error::{check_dim, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    L1,
    Linf,
    #[serde(rename = "l2")]
    L2Float,
}

impl NormKind {
    pub fn parse(s: &str) -> Option<NormKind> {
        match s.to_ascii_lowercase().as_str() {
            "l1" => Some(NormKind::L1),
            "linf" => Some(NormKind::Linf),
            "l2" | "l2_float" => Some(NormKind::L2Float),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormKind::L1 => "l1",
            NormKind::Linf => "linf",
            NormKind::L2Float => "l2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormSpec {
    pub kind: NormKind,
    /// Reported error bound for `L2Float`; ignored otherwise.
    pub tolerance: Rat,
}

impl Default for NormSpec {
    fn default() -> Self {
        NormSpec::linf()
    }
}

/// A distance or norm value. `Approx` only arises for the Euclidean norm.
#[derive(Debug, Clone, PartialEq)]
pub enum Distance {
    Exact(ExtRat),
    Approx { value: f64, tolerance: f64 },
}

impl Distance {
    pub fn exact(&self) -> Option<&ExtRat> {
        match self {
            Distance::Exact(e) => Some(e),
            Distance::Approx { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Distance::Exact(e) => e.to_f64(),
            Distance::Approx { value, .. } => *value,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Distance::Exact(ExtRat::Finite(r)) => r.is_zero(),
            Distance::Exact(ExtRat::PosInf) => false,
            Distance::Approx { value, .. } => *value == 0.0,
        }
    }
}

impl NormSpec {
    pub fn linf() -> Self {
        NormSpec {
            kind: NormKind::Linf,
            tolerance: Rat::zero(),
        }
    }

    pub fn l1() -> Self {
        NormSpec {
            kind: NormKind::L1,
            tolerance: Rat::zero(),
        }
    }

    pub fn l2(tolerance: Rat) -> Self {
        NormSpec {
            kind: NormKind::L2Float,
            tolerance,
        }
    }

    pub fn is_polyhedral(&self) -> bool {
        self.kind != NormKind::L2Float
    }

    /// The norm on the dual space.
    pub fn dual(&self) -> NormSpec {
        let kind = match self.kind {
            NormKind::L1 => NormKind::Linf,
            NormKind::Linf => NormKind::L1,
            NormKind::L2Float => NormKind::L2Float,
        };
        NormSpec {
            kind,
            tolerance: self.tolerance.clone(),
        }
    }

    /// Closed unit ball as an H-polyhedron.
    pub fn unit_ball(&self, dim: usize) -> Result<HPolyhedron> {
        match self.kind {
            NormKind::Linf => Ok(HPolyhedron::cube(dim, &rat::int(-1), &rat::one())),
            NormKind::L1 => {
                let mut ball = HPolyhedron::universe(dim);
                for mask in 0u64..(1u64 << dim) {
                    let row = (0..dim)
                        .map(|i| if mask >> i & 1 == 1 { rat::int(-1) } else { rat::one() })
                        .collect();
                    ball = ball.with_ineq(row, rat::one());
                }
                Ok(ball)
            }
            NormKind::L2Float => Err(Error::NonPolyhedralNorm),
        }
    }

    /// Vertices of the unit ball, for polyhedral norms.
    pub fn unit_ball_vertices(&self, dim: usize) -> Result<Vec<Vec<Rat>>> {
        match self.kind {
            NormKind::L1 => Ok((0..dim)
                .flat_map(|i| {
                    let e = rat::unit(dim, i);
                    [e.clone(), rat::neg(&e)]
                })
                .collect()),
            NormKind::Linf => Ok((0u64..(1u64 << dim))
                .map(|mask| {
                    (0..dim)
                        .map(|i| if mask >> i & 1 == 1 { rat::int(-1) } else { rat::one() })
                        .collect()
                })
                .collect()),
            NormKind::L2Float => Err(Error::NonPolyhedralNorm),
        }
    }

    pub fn value(&self, x: &[Rat]) -> Distance {
        match self.kind {
            NormKind::L1 => Distance::Exact(ExtRat::Finite(rat::norm_1(x))),
            NormKind::Linf => Distance::Exact(ExtRat::Finite(rat::norm_inf(x))),
            NormKind::L2Float => {
                let sq = rat::dot(x, x);
                self.approx_sqrt(&sq)
            }
        }
    }

    fn approx_sqrt(&self, sq: &Rat) -> Distance {
        Distance::Approx {
            value: rat::to_f64(sq).sqrt(),
            tolerance: rat::to_f64(&self.tolerance),
        }
    }
}

/// `d(x, A)` for a closed convex polyhedron.
pub fn distance_to_polyhedron(x: &[Rat], a: &HPolyhedron, norm: &NormSpec) -> Result<Distance> {
    check_dim(a.dim, x.len())?;
    if a.is_empty() {
        return Ok(match norm.kind {
            NormKind::L2Float => Distance::Approx {
                value: f64::INFINITY,
                tolerance: rat::to_f64(&norm.tolerance),
            },
            _ => Distance::Exact(ExtRat::PosInf),
        });
    }
    if a.contains(x) {
        return Ok(Distance::Exact(ExtRat::Finite(Rat::zero())));
    }
    match norm.kind {
        NormKind::Linf | NormKind::L1 => Ok(Distance::Exact(ExtRat::Finite(polyhedral_distance(
            x, a, norm.kind,
        )?))),
        NormKind::L2Float => {
            let sq = squared_euclidean_distance(x, a).ok_or(Error::Internal(
                "no feasible active set in Euclidean projection".into(),
            ))?;
            Ok(norm.approx_sqrt(&sq))
        }
    }
}

/// `d(x, A)` for a finite union: the minimum over its pieces.
pub fn distance(x: &[Rat], a: &UnionPolyhedron, norm: &NormSpec) -> Result<Distance> {
    check_dim(a.dim, x.len())?;
    let mut best: Option<Distance> = None;
    for p in &a.pieces {
        let d = distance_to_polyhedron(x, p, norm)?;
        best = Some(match best {
            None => d,
            Some(b) => {
                if d.to_f64() < b.to_f64() || (d.to_f64() == b.to_f64() && less_exact(&d, &b)) {
                    d
                } else {
                    b
                }
            }
        });
    }
    Ok(best.unwrap_or_else(|| match norm.kind {
        NormKind::L2Float => Distance::Approx {
            value: f64::INFINITY,
            tolerance: rat::to_f64(&norm.tolerance),
        },
        _ => Distance::Exact(ExtRat::PosInf),
    }))
}

fn less_exact(a: &Distance, b: &Distance) -> bool {
    match (a, b) {
        (Distance::Exact(x), Distance::Exact(y)) => x < y,
        _ => false,
    }
}

/// One LP in the variables `(y, s)`: minimize the norm bound of `x - y`
/// over `y ∈ A`.
fn polyhedral_distance(x: &[Rat], a: &HPolyhedron, kind: NormKind) -> Result<Rat> {
    let n = a.dim;
    let extra = if kind == NormKind::Linf { 1 } else { n };
    let m = n + extra;
    let pad = |v: &[Rat]| {
        let mut w = v.to_vec();
        w.resize(m, Rat::zero());
        w
    };
    let mut lifted = HPolyhedron::universe(m);
    for c in &a.ineqs {
        lifted = lifted.with_ineq(pad(&c.normal), c.offset.clone());
    }
    for c in &a.eqs {
        lifted = lifted.with_eq(pad(&c.normal), c.offset.clone());
    }
    for i in 0..n {
        let s = if kind == NormKind::Linf { n } else { n + i };
        let mut up = rat::zeros(m);
        up[i] = rat::one();
        up[s] = rat::int(-1);
        lifted = lifted.with_ineq(up, x[i].clone());
        let mut down = rat::zeros(m);
        down[i] = rat::int(-1);
        down[s] = rat::int(-1);
        lifted = lifted.with_ineq(down, -x[i].clone());
    }
    let mut objective = rat::zeros(m);
    for v in objective.iter_mut().skip(n) {
        *v = rat::one();
    }
    match lifted.lp(&objective, Sense::Min) {
        LpOutcome::Optimal { value, .. } => Ok(value),
        other => Err(Error::Internal(format!("distance LP ended with {other:?}"))),
    }
}

/// Exact squared Euclidean distance by enumerating active facet sets of
/// the canonical form.
fn squared_euclidean_distance(x: &[Rat], a: &HPolyhedron) -> Option<Rat> {
    let canon = a.canonical();
    let free = a.dim.saturating_sub(canon.eqs.len());
    let mut best: Option<Rat> = None;
    let mut subset = Vec::new();
    enumerate_subsets(canon.ineqs.len(), free, 0, &mut subset, &mut |active| {
        let rows: Vec<&super::poly::Constraint> = canon
            .eqs
            .iter()
            .chain(active.iter().map(|&i| &canon.ineqs[i]))
            .collect();
        let y = if rows.is_empty() {
            x.to_vec()
        } else {
            // y = x - Aᵀλ with A y = b, so (A Aᵀ) λ = A x - b
            let gram: Vec<Vec<Rat>> = rows
                .iter()
                .map(|r| rows.iter().map(|s| rat::dot(&r.normal, &s.normal)).collect())
                .collect();
            let rhs: Vec<Rat> = rows.iter().map(|r| rat::dot(&r.normal, x) - &r.offset).collect();
            let Some(lambda) = rat::solve_linear(&gram, &rhs) else {
                return;
            };
            let mut y = x.to_vec();
            for (r, l) in rows.iter().zip(&lambda) {
                y = rat::sub(&y, &rat::scale(&r.normal, l));
            }
            y
        };
        if canon.contains(&y) {
            let d = rat::sub(x, &y);
            let sq = rat::dot(&d, &d);
            if best.as_ref().is_none_or(|b| &sq < b) {
                best = Some(sq);
            }
        }
    });
    best.map(|b| if b.is_negative() { Rat::zero() } else { b })
}

fn enumerate_subsets(
    n: usize,
    max_size: usize,
    start: usize,
    cur: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    visit(cur);
    if cur.len() == max_size {
        return;
    }
    for i in start..n {
        cur.push(i);
        enumerate_subsets(n, max_size, i + 1, cur, visit);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat::{int, rat};

    fn exact(d: Distance) -> ExtRat {
        d.exact().cloned().expect("exact distance")
    }

    #[test]
    fn distance_examples() {
        let seg = HPolyhedron::universe(1)
            .with_ineq(vec![int(1)], int(2))
            .with_ineq(vec![int(-1)], int(-1));
        assert_eq!(
            exact(distance_to_polyhedron(&[int(0)], &seg, &NormSpec::linf()).unwrap()),
            ExtRat::Finite(int(1))
        );
        assert_eq!(
            exact(distance_to_polyhedron(&[int(0)], &HPolyhedron::universe(1), &NormSpec::l1()).unwrap()),
            ExtRat::Finite(int(0))
        );
        let half = HPolyhedron::universe(2).with_ineq(vec![int(1), int(0)], int(0));
        assert_eq!(
            exact(distance_to_polyhedron(&[int(2), int(0)], &half, &NormSpec::linf()).unwrap()),
            ExtRat::Finite(int(2))
        );
        let empty = UnionPolyhedron::new(1, vec![]).unwrap();
        assert_eq!(
            exact(distance(&[int(0)], &empty, &NormSpec::linf()).unwrap()),
            ExtRat::PosInf
        );
    }

    #[test]
    fn norms_differ_on_diagonal() {
        // distance from (1,1) to {x + y <= 0}
        let half = HPolyhedron::universe(2).with_ineq(vec![int(1), int(1)], int(0));
        let p = [int(1), int(1)];
        assert_eq!(
            exact(distance_to_polyhedron(&p, &half, &NormSpec::linf()).unwrap()),
            ExtRat::Finite(int(1))
        );
        assert_eq!(
            exact(distance_to_polyhedron(&p, &half, &NormSpec::l1()).unwrap()),
            ExtRat::Finite(int(2))
        );
        let d = distance_to_polyhedron(&p, &half, &NormSpec::l2(rat(1, 1_000_000))).unwrap();
        assert!((d.to_f64() - 2f64.sqrt()).abs() < 1e-12);
        assert!(d.exact().is_none());
    }

    #[test]
    fn euclidean_projection_onto_corner() {
        // nearest point of the nonnegative quadrant to (-1, -2) is the origin
        let quad = HPolyhedron::universe(2)
            .with_ineq(vec![int(-1), int(0)], int(0))
            .with_ineq(vec![int(0), int(-1)], int(0));
        let d = distance_to_polyhedron(&[int(-1), int(-2)], &quad, &NormSpec::l2(Rat::zero())).unwrap();
        assert!((d.to_f64() - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn dual_balls() {
        assert_eq!(NormSpec::linf().dual().kind, NormKind::L1);
        assert_eq!(NormSpec::l1().dual().kind, NormKind::Linf);
        let b1 = NormSpec::l1().unit_ball(2).unwrap();
        assert!(b1.contains(&[rat(1, 2), rat(-1, 2)]));
        assert!(!b1.contains(&[rat(3, 4), rat(1, 2)]));
        let verts = NormSpec::linf().unit_ball_vertices(3).unwrap();
        assert_eq!(verts.len(), 8);
        assert!(NormSpec::l2(Rat::zero()).unit_ball(2).is_err());
    }
}
