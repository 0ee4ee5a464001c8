use logfano_core::constraints::ConstraintSystem;
use logfano_core::feasibility::{
    fm_homogeneous_feasible, gordan_feasible, origin_in_closure, FeasibilityCertificate,
    HomogeneousSystem,
};
use logfano_core::forms::LinearForm;
use logfano_core::lattice::{CenterSpec, CurveId, DivisorClass, SurfaceModel};
use logfano_core::logpair::{tail_sequence, LogPair};
use logfano_core::rational::{int, Rational};
use logfano_core::tailblowup::{budget, verify_tail_lp};
use proptest::prelude::*;

fn surface(base: u32, blowups: &[usize]) -> SurfaceModel {
    let mut s = if base == 5 {
        SurfaceModel::projective_plane()
    } else {
        SurfaceModel::hirzebruch(base)
    };
    for &pick in blowups {
        let center = CenterSpec::smooth_point_of(CurveId(pick % s.curves().len()));
        s = s.blow_up(center).unwrap();
    }
    s
}

fn class(s: &SurfaceModel, coords: &[i64]) -> DivisorClass {
    DivisorClass::from_ints(s.tag(), &coords[..s.rank()]).unwrap()
}

fn system(k: usize, entries: &[i64]) -> HomogeneousSystem {
    let m = entries.len() / k;
    let cols: Vec<Vec<Rational>> = (0..m)
        .map(|j| (0..k).map(|i| int(entries[j * k + i])).collect())
        .collect();
    HomogeneousSystem::from_columns(k, &cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn form_is_symmetric_and_bilinear(
        base in 0u32..6,
        ups in prop::collection::vec(0usize..6, 0..4),
        a in prop::collection::vec(-4i64..5, 6),
        b in prop::collection::vec(-4i64..5, 6),
        c in prop::collection::vec(-4i64..5, 6),
    ) {
        let s = surface(base, &ups);
        let (a, b, c) = (class(&s, &a), class(&s, &b), class(&s, &c));
        prop_assert_eq!(s.intersect(&a, &b).unwrap(), s.intersect(&b, &a).unwrap());
        let lhs = s.intersect(&(&a + &b), &c).unwrap();
        prop_assert_eq!(lhs, s.intersect(&a, &c).unwrap() + s.intersect(&b, &c).unwrap());
    }

    #[test]
    fn pullback_is_an_isometry(
        base in 0u32..6,
        ups in prop::collection::vec(0usize..6, 0..3),
        pick in 0usize..6,
        a in prop::collection::vec(-4i64..5, 6),
        b in prop::collection::vec(-4i64..5, 6),
    ) {
        let before = surface(base, &ups);
        let after = surface(base, &[ups.clone(), vec![pick]].concat());
        let (a, b) = (class(&before, &a), class(&before, &b));
        let (pa, pb) = (after.pullback(&a).unwrap(), after.pullback(&b).unwrap());
        prop_assert_eq!(after.intersect(&pa, &pb).unwrap(), before.intersect(&a, &b).unwrap());
        // the exceptional class is orthogonal to pull-backs and has square -1
        let e = after.basis(after.rank() - 1);
        prop_assert_eq!(after.intersect(&pa, &e).unwrap(), int(0));
        prop_assert_eq!(after.self_intersection(&e).unwrap(), int(-1));
    }

    #[test]
    fn canonical_class_changes_by_exceptional(
        base in 0u32..6,
        ups in prop::collection::vec(0usize..6, 1..4),
    ) {
        let s = surface(base, &ups);
        let k = s.canonical_class();
        let k2 = s.self_intersection(&k).unwrap();
        prop_assert_eq!(k2, int(8 + i64::from(base == 5) - ups.len() as i64));
        for curve in s.curves() {
            // every tracked curve is a smooth rational curve
            let adj = s.intersect(&curve.class, &(&curve.class + &k)).unwrap();
            prop_assert_eq!(adj, int(-2));
        }
    }

    #[test]
    fn twisted_class_evaluates_termwise(
        n in 0u32..5,
        h in 0usize..3,
        v in 0usize..3,
        beta in prop::collection::vec(0i64..17, 7),
        z in prop::collection::vec(-3i64..4, 7),
    ) {
        let base = LogPair::from_labels(SurfaceModel::hirzebruch(n), &["Z", "F"]).unwrap();
        let pair = tail_sequence(&base, h, v).unwrap();
        let s = pair.surface();
        let point: Vec<Rational> = beta[..pair.angle_count()]
            .iter()
            .map(|&b| Rational::new(b.into(), 16.into()))
            .collect();
        let minus_k = pair.log_canonical_class().negate();
        let at = minus_k.eval(&point);
        let zc = class(s, &z);
        let form = minus_k.intersect_with_class(s, &zc).unwrap();
        prop_assert_eq!(form.eval(&point), s.intersect(&at, &zc).unwrap());
        prop_assert_eq!(minus_k.square(s).eval(&point), s.self_intersection(&at).unwrap());
    }

    #[test]
    fn budget_drops_by_one_per_tail(n in 0u32..4, h in 0usize..4, v in 0usize..4) {
        let base = LogPair::from_labels(SurfaceModel::hirzebruch(n), &["Z", "F"]).unwrap();
        let pair = tail_sequence(&base, h, v).unwrap();
        prop_assert_eq!(budget(&pair), int(i64::from(n) + 2 - (h + v) as i64));
        prop_assert!(pair.is_chain());
    }

    #[test]
    fn gordan_alternative_is_certified(
        k in 1usize..5,
        entries in prop::collection::vec(-5i64..6, 40),
        m in 0usize..9,
    ) {
        let sys = system(k, &entries[..(m * k).min(entries.len() / k * k)]);
        let cert = gordan_feasible(&sys);
        prop_assert!(cert.verify(&sys));
        prop_assert_eq!(cert.is_feasible(), fm_homogeneous_feasible(&sys));
        // the two alternatives exclude each other: x.A > 0 and A y = 0, y >= 0
        // would give 0 = x.(A y) > 0
        if let FeasibilityCertificate::Feasible { point } = &cert {
            let values = sys.apply(point);
            prop_assert!(values.iter().all(|v| *v > int(0)));
        }
    }

    #[test]
    fn tail_lp_always_feasible(
        r in 2usize..5,
        h in 0usize..5,
        v in 0usize..5,
        c1 in -3i64..2,
        cr in -3i64..2,
    ) {
        prop_assume!(h + v > 0);
        prop_assert!(verify_tail_lp(r, h, v, c1, cr).unwrap().verified);
    }

    #[test]
    fn homogeneous_verdict_matches_gordan(
        k in 1usize..4,
        entries in prop::collection::vec(-3i64..4, 18),
    ) {
        let forms: Vec<LinearForm> = entries
            .chunks(k)
            .filter(|c| c.len() == k)
            .map(|c| LinearForm::dense(int(0), &c.iter().map(|&v| int(v)).collect::<Vec<_>>()))
            .collect();
        let cols: Vec<Vec<Rational>> = forms.iter().map(|f| f.dense_coefficients(k)).collect();
        let sys = ConstraintSystem::from_forms(k, forms);
        let report = origin_in_closure(&sys);
        let expected = gordan_feasible(&HomogeneousSystem::from_columns(k, &cols).with_orthant()).is_feasible();
        // a zero row reads 0 > 0 and is rejected before the solver
        let has_zero = cols.iter().any(|c| c.iter().all(|v| *v == int(0)));
        prop_assert_eq!(report.contains(), expected && !has_zero);
        if report.contains() {
            prop_assert!(sys.contains(report.witness.as_ref().unwrap()));
        }
    }
}
