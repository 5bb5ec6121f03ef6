use hha_core::equivfun::{
    action_from_crossing, coinvariants, crossing_from_action, extract_coaction, induce_four_angle,
    induced_right_action,
};
use hha_core::exactlin::{Field, LinMap, TensorIndex};
use hha_core::fourangle::{hom_cotensor, hom_tensor, xi_comparison, FourAngleModule};
use hha_core::heisenberg::{build_smash, functor_f, functor_g, SmashVariant};
use hha_core::homcore::{build_cyclic, build_dual, check_hom_hopf, HomHopfAlgebra};
use hha_core::repcat::{check_four_angle, check_module, regular, Side};
use hha_core::ydmod::{
    braiding, braiding_inverse, canonical_yd, check_yd, trivial_yd, yd_tensor, YDModule,
};
use proptest::prelude::*;

fn field(rational: bool) -> Field {
    if rational {
        Field::Rationals
    } else {
        Field::gf7()
    }
}

fn matrix(f: Field, rows: usize, cols: usize, entries: &[i64]) -> LinMap {
    LinMap::from_fn(f, rows, cols, |r, c| {
        f.from_i64(entries[(r * cols + c) % entries.len()])
    })
}

fn entries() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..40)
}

fn yd(h: &HomHopfAlgebra, k: u8) -> YDModule {
    match k {
        0 => trivial_yd(h).unwrap(),
        v => canonical_yd(h, v).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_interchange(
        q in any::<bool>(),
        (p, r, s, t, u, v) in (1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4),
        e in entries(),
    ) {
        let f = field(q);
        let a = matrix(f, p, r, &e);
        let c = matrix(f, r, s, &e[e.len() / 2..]);
        let b = matrix(f, t, u, &e[e.len() / 3..]);
        let d = matrix(f, u, v, &e[..]);
        let lhs = a.kron(&b).unwrap().compose(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_is_null_and_rank_complete(
        q in any::<bool>(),
        rows in 1usize..6,
        cols in 1usize..6,
        e in entries(),
    ) {
        let a = matrix(field(q), rows, cols, &e);
        let k = a.kernel();
        prop_assert!(a.compose(k.basis()).unwrap().is_zero());
        prop_assert_eq!(a.rank() + k.dim(), cols);
    }

    #[test]
    fn inverse_is_exact(q in any::<bool>(), n in 1usize..6, e in entries()) {
        let f = field(q);
        // Unit upper triangular times unit lower triangular is invertible.
        let u = LinMap::from_fn(f, n, n, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Equal => f.one(),
            std::cmp::Ordering::Less => f.from_i64(e[(r * n + c) % e.len()]),
            _ => f.zero(),
        });
        let a = u.compose(&u.transpose()).unwrap();
        let inv = a.invert().unwrap();
        prop_assert!(inv.compose(&a).unwrap().is_identity());
        prop_assert!(a.compose(&inv).unwrap().is_identity());
    }

    #[test]
    fn tensor_index_round_trips(dims in prop::collection::vec(1usize..5, 0..4)) {
        let t = TensorIndex::new(&dims);
        for flat in 0..t.total() {
            prop_assert_eq!(t.flatten(&t.unflatten(flat)), flat);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cyclic_and_dual_are_hom_hopf(q in any::<bool>(), n in 1usize..=6) {
        let h = build_cyclic(n, field(q)).unwrap();
        prop_assert!(check_hom_hopf(&h).unwrap().passed);
        prop_assert!(check_hom_hopf(&build_dual(&h).unwrap()).unwrap().passed);
        prop_assert!(h.beta().compose(h.beta()).unwrap().is_identity());
        let want: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        prop_assert_eq!(h.antipode(), &LinMap::permutation(h.field(), n, &want));
    }

    #[test]
    fn module_actions_commute_with_structure_maps(q in any::<bool>(), n in 1usize..=4) {
        let h = build_cyclic(n, field(q)).unwrap();
        let m = regular(&h).unwrap();
        prop_assert!(check_module(h.algebra(), &m, Side::Left).unwrap().passed);
        let act = m.left_action().unwrap();
        let lhs = m.zeta().compose(act).unwrap();
        let rhs = act.compose(&h.beta().kron(m.zeta()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(check_four_angle(&h, &m).unwrap().passed);
    }

    #[test]
    fn reports_are_deterministic(n in 1usize..=4, perturb in 0usize..16) {
        let f = Field::gf7();
        let h = build_cyclic(n, f).unwrap();
        let m = regular(&h).unwrap();
        let col = perturb % (n * n);
        let bump = LinMap::basis_vector(f, n, 0)
            .compose(&LinMap::basis_vector(f, n * n, col).transpose())
            .unwrap();
        let broken = m.clone().with_left_action(m.left_action().unwrap().add(&bump).unwrap()).unwrap();
        let a = check_four_angle(&h, &broken).unwrap();
        let b = check_four_angle(&h, &broken).unwrap();
        prop_assert!(!a.passed);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn yd_braidings_invert_and_tensor_stays_yd(
        q in any::<bool>(),
        n in 1usize..=3,
        i in 0u8..3,
        j in 0u8..3,
    ) {
        let h = build_cyclic(n, field(q)).unwrap();
        let (v, w) = (yd(&h, i), yd(&h, j));
        let c = braiding(&h, &v, &w).unwrap();
        let ci = braiding_inverse(&h, &v, &w).unwrap();
        prop_assert!(c.compose(&ci).unwrap().is_identity());
        prop_assert!(ci.compose(&c).unwrap().is_identity());
        let t = yd_tensor(&h, &v, &w).unwrap();
        prop_assert!(check_yd(&h, &t).unwrap().passed);
    }

    #[test]
    fn four_angle_products_have_unit_dimensions(
        q in any::<bool>(),
        n in 1usize..=3,
        i in 0u8..3,
    ) {
        let h = build_cyclic(n, field(q)).unwrap();
        let hh = FourAngleModule::new(&h, regular(&h).unwrap()).unwrap();
        let m = induce_four_angle(&h, &yd(&h, i)).unwrap();
        prop_assert!(check_four_angle(&h, &m).unwrap().passed);
        for (a, b) in [(&m, &hh), (&hh, &m)] {
            let t = hom_tensor(&h, a, b).unwrap();
            let c = hom_cotensor(&h, a, b).unwrap();
            prop_assert!(t.closure_certified && c.closure_certified);
            prop_assert_eq!(t.dim(), m.dim());
            prop_assert_eq!(c.dim(), m.dim());
        }
        let x = xi_comparison(&h, &m, &hh).unwrap();
        prop_assert!(x.report.passed);
    }

    #[test]
    fn induction_and_coinvariants_are_inverse_on_dimensions(
        q in any::<bool>(),
        n in 1usize..=3,
        i in 0u8..3,
    ) {
        let h = build_cyclic(n, field(q)).unwrap();
        let v = yd(&h, i);
        let m = induce_four_angle(&h, &v).unwrap();
        prop_assert_eq!(coinvariants(&h, &m).unwrap().dim(), v.dim());
        let rho = extract_coaction(&h, m.right_coaction().unwrap(), v.dim()).unwrap();
        prop_assert_eq!(&rho, v.right_coaction().unwrap());
        let mu = induced_right_action(&h, &v).unwrap();
        let (c, _) = crossing_from_action(h.algebra(), h.algebra(), v.zeta(), &mu).unwrap();
        let (back, _) = action_from_crossing(h.algebra(), h.algebra(), &c).unwrap();
        prop_assert_eq!(back, mu);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn g_inverts_f_on_induced_modules(q in any::<bool>(), n in 1usize..=2, i in 0u8..3) {
        let h = build_cyclic(n, field(q)).unwrap();
        let double = build_smash(&h, SmashVariant::Four).unwrap();
        let m = induce_four_angle(&h, &yd(&h, i)).unwrap();
        let fm = functor_f(&h, &double, &m).unwrap();
        prop_assert!(fm.report.passed);
        let gfm = functor_g(&h, &double, &fm).unwrap();
        prop_assert_eq!(gfm.bundle(), m.bundle());
    }
}
