use nonsmooth_cq::corpus::{self, GeneratorConfig, InstanceClass};
use nonsmooth_cq::cq::{Mode, PointAnalysis};
use nonsmooth_cq::endset::{end_set_pieces, ray_exit};
use nonsmooth_cq::geometry::norm::distance_to_polyhedron;
use nonsmooth_cq::geometry::rat::{self, int, rat, ExtRat, Rat};
use nonsmooth_cq::geometry::{
    polar_cone, segment_hull, ConeSet, HPolyhedron, LpOutcome, NormSpec, Sense,
};
use nonsmooth_cq::instance::InstanceDoc;
use nonsmooth_cq::plfunc::PLFunction;
use nonsmooth_cq::subdiff;
use proptest::prelude::*;

fn small_vec(dim: usize, bound: i64) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-bound * 4..=bound * 4).prop_map(|k| rat(k, 4)), dim)
}

fn nonzero_row(dim: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(-3i64..=3, dim)
        .prop_filter("nonzero normal", |v| v.iter().any(|&k| k != 0))
        .prop_map(|v| v.into_iter().map(int).collect())
}

/// A box cut by a few extra halfspaces; always contains the origin.
fn polytope() -> impl Strategy<Value = HPolyhedron> {
    (1usize..=3).prop_flat_map(|dim| {
        (1i64..=3, prop::collection::vec((nonzero_row(dim), 0i64..=6), 0..=3)).prop_map(move |(w, rows)| {
            rows.into_iter().fold(HPolyhedron::cube(dim, &int(-w), &int(w)), |p, (a, b)| {
                p.with_ineq(a, rat(b, 2))
            })
        })
    })
}

/// A polyhedron that may be unbounded and may miss the origin, or a cone.
fn polyhedron() -> impl Strategy<Value = HPolyhedron> {
    (1usize..=3, any::<bool>()).prop_flat_map(|(dim, cone)| {
        prop::collection::vec((nonzero_row(dim), -4i64..=8), 1..=dim + 2).prop_map(move |rows| {
            rows.into_iter().fold(HPolyhedron::universe(dim), |p, (a, b)| {
                p.with_ineq(a, if cone { int(0) } else { rat(b, 2) })
            })
        })
    })
    .prop_filter("nonempty", |p| !p.is_empty())
}

fn convex_cone() -> impl Strategy<Value = HPolyhedron> {
    (1usize..=3).prop_flat_map(|dim| {
        prop::collection::vec(nonzero_row(dim), 0..=dim + 1)
            .prop_map(move |rows| rows.into_iter().fold(HPolyhedron::universe(dim), |p, a| p.with_ineq(a, int(0))))
    })
}

fn lipschitz_instance() -> impl Strategy<Value = (PLFunction, Vec<Rat>)> {
    (1usize..=2, any::<u64>()).prop_map(|(dim, seed)| {
        let (_, doc) = corpus::generate(&GeneratorConfig::new(1, dim, seed)).remove(0);
        (doc.function().unwrap(), doc.basepoints[0].clone())
    })
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn lp_optimum_is_the_best_vertex(p in polytope(), c in small_vec(3, 2)) {
        let c = &c[..p.dim];
        let best = p.to_vrep().unwrap().points.iter().map(|v| rat::dot(c, v)).max().unwrap();
        match p.lp(c, Sense::Max) {
            LpOutcome::Optimal { value, .. } => prop_assert_eq!(value, best),
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn polar_of_polar_is_the_cone(k in convex_cone()) {
        let twice = polar_cone(&polar_cone(&ConeSet::Convex(k.clone())).unwrap()).unwrap();
        prop_assert!(twice.as_convex().unwrap().set_eq(&k));
    }

    #[test]
    fn segment_hull_contains_scaled_points(p in polytope(), r in 1i64..=8, t in 0i64..=16) {
        let r = rat(r, 4);
        let hull = segment_hull(Some(&p), &r, p.dim).unwrap();
        let s = &r * rat(t, 16);
        for v in p.to_vrep().unwrap().points {
            prop_assert!(hull.contains(&rat::scale(&v, &s)));
        }
        // nothing beyond r times the farthest vertex
        let far = rat::scale(&rat::unit(p.dim, 0), &(int(4) * &r));
        prop_assert!(!hull.contains(&far));
    }

    #[test]
    fn distance_vanishes_exactly_on_the_set(p in polyhedron(), x in small_vec(3, 3)) {
        let x = &x[..p.dim];
        for norm in [NormSpec::linf(), NormSpec::l1()] {
            let d = distance_to_polyhedron(x, &p, &norm).unwrap();
            prop_assert_eq!(d.is_zero(), p.contains(x));
        }
    }

    #[test]
    fn evaluation_sublevel_and_epigraph_agree((f, _) in lipschitz_instance(), x in small_vec(2, 2), lift in 1i64..=4) {
        let x = &x[..f.dim];
        let value = f.value(x).unwrap();
        prop_assert_eq!(f.solution_set().contains(x), value <= rat::zero());
        let above: Vec<Rat> = x.iter().cloned().chain([&value + rat(lift, 4)]).collect();
        let below: Vec<Rat> = x.iter().cloned().chain([&value - rat(lift, 4)]).collect();
        prop_assert!(f.epigraph().contains(&above));
        prop_assert!(!f.epigraph().contains(&below));
    }

    #[test]
    fn frechet_objects_sit_inside_clarke_ones((f, x) in lipschitz_instance()) {
        let a = PointAnalysis::new(&f, &x, &NormSpec::linf()).unwrap();
        if let Some(fr) = &a.frechet.set {
            prop_assert!(fr.is_subset_of(a.clarke.set.as_ref().unwrap()));
        }
        prop_assert!(a.frechet_normal.is_subset_of(&a.normal));
    }

    #[test]
    fn clarke_derivative_is_sublinear_and_dominates((f, x) in lipschitz_instance(), h in small_vec(2, 2), k in small_vec(2, 2), l in 1i64..=8) {
        let (h, k) = (&h[..f.dim], &k[..f.dim]);
        let d = |v: &[Rat]| subdiff::clarke_dirderiv(&f, &x, v).unwrap();
        let lam = rat(l, 4);
        prop_assert_eq!(d(&rat::scale(h, &lam)), &lam * d(h));
        prop_assert!(d(&rat::add(h, k)) <= d(h) + d(k));
        // a tiny exact difference quotient equals φ' and stays below φ°
        let t = rat(1, 1 << 20);
        let moved = rat::add(&x, &rat::scale(h, &t));
        let quotient = (f.value(&moved).unwrap() - f.value(&x).unwrap()) / &t;
        prop_assert_eq!(subdiff::dirderiv(&f, &x, h).unwrap(), ExtRat::Finite(quotient.clone()));
        prop_assert!(quotient <= d(h));
    }

    #[test]
    fn strong_bcq_is_monotone_in_tau((f, x) in lipschitz_instance(), a in 1i64..=16, b in 1i64..=16) {
        let pa = PointAnalysis::new(&f, &x, &NormSpec::linf()).unwrap();
        let (lo, hi) = (rat(a.min(b), 4), rat(a.max(b), 4));
        if pa.strong_bcq(Mode::Clarke, &lo).unwrap().holds {
            prop_assert!(pa.strong_bcq(Mode::Clarke, &hi).unwrap().holds);
        }
    }

    #[test]
    fn end_set_points_are_ray_exits(p in polyhedron()) {
        let e = end_set_pieces(&p);
        let origin = rat::zeros(p.dim);
        prop_assert!(!e.contains(&origin));
        if p.is_cone() {
            prop_assert!(e.is_empty());
        }
        let hull = segment_hull(Some(&p), &int(1), p.dim).unwrap();
        for piece in &e.pieces {
            if let Some(z) = piece.feasible_point() {
                prop_assert_eq!(ray_exit(&hull, &z).unwrap(), ExtRat::Finite(int(1)));
            }
        }
    }

    #[test]
    fn instance_documents_round_trip(dim in 1usize..=3, seed in any::<u64>(), extended in any::<bool>()) {
        let class = if extended { InstanceClass::Extended } else { InstanceClass::Lipschitz };
        let (_, doc) = corpus::generate(&GeneratorConfig::new(1, dim, seed).class(class)).remove(0);
        let again = InstanceDoc::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_json(), doc.to_json());
    }
}
