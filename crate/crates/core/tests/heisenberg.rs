use hha_core::equivfun::induce_four_angle;
use hha_core::exactlin::{Field, LinMap};
use hha_core::fourangle::FourAngleModule;
use hha_core::heisenberg::{
    bicomodule_as_dual_module, bimodule_as_tensor_module, build_smash, check_double_equivalence,
    dual_module_as_bicomodule, functor_f, functor_g, tensor_module_as_bimodule, SmashVariant,
};
use hha_core::homcore::{build_cyclic, build_dual, check_hom_algebra, trivial, HomHopfAlgebra};
use hha_core::repcat::{regular, ModuleBundle};
use hha_core::ydmod::{canonical_yd, trivial_yd};
use hha_core::Error;

fn unit_object(h: &HomHopfAlgebra) -> FourAngleModule {
    FourAngleModule::new(h, regular(h).unwrap()).unwrap()
}

#[test]
fn smash_variants_are_hom_algebras() {
    for f in [Field::gf7(), Field::Rationals] {
        for n in 1..=3 {
            let h = build_cyclic(n, f).unwrap();
            for v in SmashVariant::ALL {
                if v == SmashVariant::Four && n > 2 {
                    continue;
                }
                let s = build_smash(&h, v).unwrap();
                let k = if v == SmashVariant::Four { 4 } else { 2 };
                assert_eq!(s.dim(), n.pow(k));
                assert!(s.report.passed, "{v} n={n}: {}", s.report.summary());
                assert_eq!(check_hom_algebra(&s.algebra).unwrap(), s.report);
            }
        }
    }
}

#[test]
fn smash_of_trivial_algebra_is_trivial() {
    let h = trivial(Field::gf7());
    let s = build_smash(&h, SmashVariant::Four).unwrap();
    assert_eq!(s.dim(), 1);
    assert_eq!(s.algebra.mult(), &LinMap::identity(Field::gf7(), 1));
}

#[test]
fn dual_actions_match_their_evaluation_formulas() {
    for n in 1..=4 {
        let f = Field::Rationals;
        let h = build_cyclic(n, f).unwrap();
        let acts = build_smash(&h, SmashVariant::LL).unwrap().actions;
        let b2 = h.beta_pow(-2).unwrap();
        let id = LinMap::identity(f, n);
        let s = h.antipode();
        let s_inv = s.invert().unwrap();
        // p(u, a) as matrices n × n², column index u·n + a.
        let left_p = |t: &LinMap| h.mult().compose(&t.kron(b2).unwrap()).unwrap();
        let right_p = h.mult().compose(&b2.kron(&id).unwrap()).unwrap();
        let harpoon = left_p(s);
        let triangle = left_p(&s_inv);
        for u in 0..n {
            for x in 0..n {
                for a in 0..n {
                    assert_eq!(acts.harpoon.get(a, u * n + x), harpoon.get(x, u * n + a));
                    assert_eq!(acts.triangle.get(a, u * n + x), triangle.get(x, u * n + a));
                    assert_eq!(acts.left_arrow.get(a, x * n + u), right_p.get(x, a * n + u));
                    assert_eq!(
                        acts.triangle_left.get(a, x * n + u),
                        right_p.get(x, a * n + u)
                    );
                }
            }
        }
    }
}

#[test]
fn smash_unit_and_structure_map_are_factorwise() {
    let h = build_cyclic(2, Field::gf7()).unwrap();
    let hd = build_dual(&h).unwrap();
    let s = build_smash(&h, SmashVariant::RR).unwrap();
    assert_eq!(s.algebra.unit(), &hd.unit().kron(h.unit()).unwrap());
    assert_eq!(s.algebra.beta(), &hd.beta().kron(h.beta()).unwrap());
}

#[test]
fn variant_names_parse() {
    for v in SmashVariant::ALL {
        assert_eq!(v.name().parse::<SmashVariant>().unwrap(), v);
    }
    assert_eq!("four".parse::<SmashVariant>().unwrap(), SmashVariant::Four);
    assert!(matches!("XY".parse::<SmashVariant>(), Err(Error::Parse(_))));
}

#[test]
fn bimodule_round_trips_through_tensor_module() {
    for n in 1..=3 {
        let h = build_cyclic(n, Field::gf7()).unwrap();
        let m = regular(&h).unwrap();
        let t = bimodule_as_tensor_module(&h, &m).unwrap();
        assert_eq!(t.over_dim(), n * n);
        let back = tensor_module_as_bimodule(&h, &t).unwrap();
        assert_eq!(back.left_action().unwrap(), m.left_action().unwrap());
        assert_eq!(back.right_action().unwrap(), m.right_action().unwrap());
    }
}

#[test]
fn non_bimodule_is_rejected() {
    let f = Field::gf7();
    let h = build_cyclic(2, f).unwrap();
    let m = regular(&h).unwrap();
    let broken = ModuleBundle::new(2, m.zeta().clone())
        .unwrap()
        .with_left_action(m.left_action().unwrap().clone())
        .unwrap()
        .with_right_action(LinMap::zeros(f, 2, 4))
        .unwrap();
    assert!(matches!(
        bimodule_as_tensor_module(&h, &broken),
        Err(Error::BimoduleCheckFailure(_))
    ));
}

#[test]
fn bicomodule_round_trips_through_dual_module() {
    for f in [Field::gf7(), Field::Rationals] {
        for n in 1..=3 {
            let h = build_cyclic(n, f).unwrap();
            let m = regular(&h).unwrap();
            let t = bicomodule_as_dual_module(&h, &m).unwrap();
            let back = dual_module_as_bicomodule(&h, &t).unwrap();
            assert_eq!(back.left_coaction().unwrap(), h.comult());
            assert_eq!(back.right_coaction().unwrap(), h.comult());
        }
    }
}

#[test]
fn dual_action_on_regular_pairs_both_legs() {
    // Δ(g^i) = g^{-i}⊗g^{-i} and Δ(g^{-i}) = g^i⊗g^i, then β^{-1} and ζ^{-1}
    // invert once more: (x⊗y)·g^i = [x = -i][y = -i] g^{-i}.
    let n = 3;
    let f = Field::gf7();
    let h = build_cyclic(n, f).unwrap();
    let t = bicomodule_as_dual_module(&h, &regular(&h).unwrap()).unwrap();
    let act = t.left_action().unwrap();
    for x in 0..n {
        for y in 0..n {
            for i in 0..n {
                let neg = (n - i) % n;
                let hit = x == neg && y == neg;
                for r in 0..n {
                    let want = if hit && r == neg { f.one() } else { f.zero() };
                    assert_eq!(act.get(r, (x * n + y) * n + i), &want);
                }
            }
        }
    }
}

#[test]
fn non_commuting_gradings_fail_the_interchange() {
    // Over kC_2 (β = id) comodules are gradings; the coordinate grading and
    // the one with projections [[1,1],[0,0]], [[0,-1],[0,1]] do not commute.
    let f = Field::Rationals;
    let h = build_cyclic(2, f).unwrap();
    let left = LinMap::from_i64(f, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
    let right = LinMap::from_i64(f, &[&[1, 1], &[0, -1], &[0, 0], &[0, 1]]);
    let broken = ModuleBundle::new(2, LinMap::identity(f, 2))
        .unwrap()
        .with_left_coaction(left)
        .unwrap()
        .with_right_coaction(right)
        .unwrap();
    let err = bicomodule_as_dual_module(&h, &broken).unwrap_err();
    assert!(matches!(err, Error::CoactionInterchangeFailure(_)), "{err}");
}

#[test]
fn functor_f_gives_double_modules() {
    let h = build_cyclic(2, Field::gf7()).unwrap();
    let double = build_smash(&h, SmashVariant::Four).unwrap();
    for m in [
        unit_object(&h),
        induce_four_angle(&h, &canonical_yd(&h, 1).unwrap()).unwrap(),
    ] {
        let fm = functor_f(&h, &double, &m).unwrap();
        assert!(fm.report.passed, "{}", fm.report.summary());
        assert_eq!(fm.bundle.over_dim(), 16);
        assert_eq!(fm.dim(), m.dim());
    }
}

#[test]
fn g_inverts_f_exactly() {
    let h = build_cyclic(2, Field::Rationals).unwrap();
    let double = build_smash(&h, SmashVariant::Four).unwrap();
    let m = unit_object(&h);
    let fm = functor_f(&h, &double, &m).unwrap();
    let gfm = functor_g(&h, &double, &fm).unwrap();
    assert_eq!(gfm.bundle(), m.bundle());
    let fgfm = functor_f(&h, &double, &gfm).unwrap();
    assert_eq!(fgfm.action().unwrap(), fm.action().unwrap());
}

#[test]
fn functors_reject_the_wrong_algebra() {
    let h = build_cyclic(2, Field::gf7()).unwrap();
    let ll = build_smash(&h, SmashVariant::LL).unwrap();
    assert!(matches!(
        functor_f(&h, &ll, &unit_object(&h)),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn double_equivalence_holds_on_witnesses() {
    for n in 1..=2 {
        let h = build_cyclic(n, Field::gf7()).unwrap();
        let ws = vec![
            regular(&h).unwrap(),
            induce_four_angle(&h, &trivial_yd(&h).unwrap())
                .unwrap()
                .into_bundle(),
        ];
        let r = check_double_equivalence(&h, &ws).unwrap();
        assert!(r.passed, "n={n}: {}", r.summary());
    }
}

#[test]
fn perturbed_witness_fails_fast() {
    let f = Field::gf7();
    let h = build_cyclic(2, f).unwrap();
    let good = regular(&h).unwrap();
    let mut rho = good.right_coaction().unwrap().clone();
    rho = rho
        .add(
            &LinMap::basis_vector(f, 4, 1)
                .compose(&LinMap::basis_vector(f, 2, 0).transpose())
                .unwrap(),
        )
        .unwrap();
    let bad = ModuleBundle::new(2, good.zeta().clone())
        .unwrap()
        .with_left_action(good.left_action().unwrap().clone())
        .unwrap()
        .with_right_action(good.right_action().unwrap().clone())
        .unwrap()
        .with_left_coaction(good.left_coaction().unwrap().clone())
        .unwrap()
        .with_right_coaction(rho)
        .unwrap();
    match check_double_equivalence(&h, &[good, bad]) {
        Err(Error::FourAngleCheckFailure(msg)) => assert!(msg.starts_with("witness 1")),
        other => panic!("unexpected {other:?}"),
    }
}
