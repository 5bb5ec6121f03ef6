use hha_core::exactlin::{Field, LinMap, Scalar};
use hha_core::homcore::{build_cyclic, build_dual, HomAlgebra, HomHopfAlgebra};
use hha_core::repcat::{
    check_bicomodule, check_bimodule, check_comodule, check_four_angle, check_hopf_compat,
    check_module, h_tensor_h, h_tensor_v, regular, trivial_module, HopfVariant, ModuleBundle, Side,
    StructureRole,
};
use hha_core::Error;

fn gf7() -> Field {
    Field::gf7()
}

#[test]
fn regular_module_passes_both_sides() {
    let h = build_cyclic(3, gf7()).unwrap();
    let m = regular(&h).unwrap();
    for side in [Side::Left, Side::Right] {
        assert!(check_module(h.algebra(), &m, side).unwrap().passed);
        assert!(check_comodule(h.coalgebra(), &m, side).unwrap().passed);
    }
    assert!(check_bimodule(h.algebra(), &m).unwrap().passed);
    assert!(check_bicomodule(h.coalgebra(), &m).unwrap().passed);
}

#[test]
fn trivial_module_passes_module_and_comodule_laws() {
    let h = build_cyclic(3, gf7()).unwrap();
    let m = trivial_module(&h).unwrap();
    for side in [Side::Left, Side::Right] {
        assert!(check_module(h.algebra(), &m, side).unwrap().passed);
        assert!(check_comodule(h.coalgebra(), &m, side).unwrap().passed);
    }
    assert!(check_bimodule(h.algebra(), &m).unwrap().passed);
    assert!(check_bicomodule(h.coalgebra(), &m).unwrap().passed);
}

#[test]
fn zero_action_breaks_unitality_everywhere() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    let m = ModuleBundle::new(3, h.beta().clone())
        .unwrap()
        .with_left_action(LinMap::zeros(f, 3, 9))
        .unwrap();
    let rep = check_module(h.algebra(), &m, Side::Left).unwrap();
    assert!(!rep.passed);
    let unit: Vec<_> = rep
        .violations
        .iter()
        .filter(|v| v.axiom == "left module unitality")
        .collect();
    assert_eq!(unit.len(), 3);
    // 1·m = 0 while ζ(g^1) = g^2.
    assert_eq!(unit[1].lhs, vec![Scalar::Fp(0); 3]);
    assert_eq!(
        unit[1].rhs,
        vec![Scalar::Fp(0), Scalar::Fp(0), Scalar::Fp(1)]
    );
    // The other two laws are homogeneous in the action and still hold.
    assert_eq!(rep.axioms(), vec!["left module unitality"]);
}

#[test]
fn missing_structure_is_an_error() {
    let h = build_cyclic(2, gf7()).unwrap();
    let m = ModuleBundle::new(2, h.beta().clone()).unwrap();
    assert!(matches!(
        check_module(h.algebra(), &m, Side::Right),
        Err(Error::MissingStructure("right action"))
    ));
    assert!(matches!(
        check_hopf_compat(&h, &m, HopfVariant::LL),
        Err(Error::MissingStructure(_))
    ));
}

#[test]
fn broken_counit_leg_fails_comodule() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    let coact = h.comult().scale(&f.from_i64(2));
    let m = ModuleBundle::new(3, h.beta().clone())
        .unwrap()
        .with_left_coaction(coact)
        .unwrap();
    let rep = check_comodule(h.coalgebra(), &m, Side::Left).unwrap();
    assert!(rep.mentions("left comodule counit law"));
}

#[test]
fn trivial_comodule_over_unit() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    // ρ(m) = 1⊗ζ(m) on a 2-dim space with a non-identity ζ.
    let zeta = LinMap::from_i64(f, &[&[0, 1], &[1, 0]]);
    let coact = h.unit().kron(&zeta).unwrap();
    let m = ModuleBundle::new(3, zeta)
        .unwrap()
        .with_left_coaction(coact)
        .unwrap();
    assert!(
        check_comodule(h.coalgebra(), &m, Side::Left)
            .unwrap()
            .passed
    );
}

/// A 3-dim Hom-algebra with noncommutative multiplication: the upper
/// triangular 2×2 matrices with basis e11, e12, e22 and `β = id`.
fn upper_triangular(f: Field) -> HomAlgebra {
    let mut rows = vec![vec![f.zero(); 9]; 3];
    let prod = |i: usize, j: usize| -> Option<usize> {
        // (e11,e11)=e11 (e11,e12)=e12 (e12,e22)=e12 (e22,e22)=e22
        match (i, j) {
            (0, 0) => Some(0),
            (0, 1) => Some(1),
            (1, 2) => Some(1),
            (2, 2) => Some(2),
            _ => None,
        }
    };
    for i in 0..3 {
        for j in 0..3 {
            if let Some(k) = prod(i, j) {
                rows[k][i * 3 + j] = f.one();
            }
        }
    }
    let mult = LinMap::from_rows(f, rows).unwrap();
    let unit = LinMap::from_i64(f, &[&[1], &[0], &[1]]);
    HomAlgebra::new(mult, unit, LinMap::identity(f, 3)).unwrap()
}

#[test]
fn swapped_right_action_fails_only_bimodule_law() {
    let f = Field::Rationals;
    let a = upper_triangular(f);
    assert!(hha_core::homcore::check_hom_algebra(&a).unwrap().passed);
    // m·b := b·m with M = A, which is not a right module either, so only the
    // bimodule report is inspected here.
    let swapped = a
        .mult()
        .compose(&hha_core::exactlin::swap(f, 3, 3))
        .unwrap();
    let m = ModuleBundle::new(3, a.beta().clone())
        .unwrap()
        .with_left_action(a.mult().clone())
        .unwrap()
        .with_right_action(swapped)
        .unwrap();
    let rep = check_bimodule(&a, &m).unwrap();
    assert!(!rep.passed);
    assert_eq!(rep.axioms(), vec!["bimodule compatibility"]);
}

#[test]
fn twisted_left_coaction_fails_bicomodule() {
    let f = Field::Rationals;
    let h = build_cyclic(3, f).unwrap();
    // A shear on the H leg of the left coaction only; it does not commute with β.
    let t = LinMap::from_i64(f, &[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]);
    assert_ne!(t.compose(h.beta()).unwrap(), h.beta().compose(&t).unwrap());
    let coact = t
        .kron(&LinMap::identity(f, 3))
        .unwrap()
        .compose(h.comult())
        .unwrap();
    let m = ModuleBundle::new(3, h.beta().clone())
        .unwrap()
        .with_left_coaction(coact)
        .unwrap()
        .with_right_coaction(h.comult().clone())
        .unwrap();
    assert!(!check_bicomodule(h.coalgebra(), &m).unwrap().passed);
}

#[test]
fn example_hopf_modules_are_left_left() {
    for n in 1..=4 {
        let h = build_cyclic(n, gf7()).unwrap();
        let hh = h_tensor_h(&h).unwrap();
        assert_eq!(hh.dim(), n * n);
        assert!(check_hopf_compat(&h, &hh, HopfVariant::LL).unwrap().passed);
        let kv = h_tensor_v(&h, &LinMap::identity(gf7(), 1)).unwrap();
        assert!(check_hopf_compat(&h, &kv, HopfVariant::LL).unwrap().passed);
        let mut kv = kv;
        assert!(kv.claim(&h, StructureRole::HopfLL).unwrap().passed);
        assert!(kv.has_role(StructureRole::HopfLL));
    }
}

#[test]
fn regular_right_right_recorded() {
    let h = build_cyclic(3, gf7()).unwrap();
    let m = regular(&h).unwrap();
    // Δ(mh) = m_1h_1 ⊗ m_2h_2 makes this hold.
    assert!(check_hopf_compat(&h, &m, HopfVariant::RR).unwrap().passed);
}

#[test]
fn regular_is_four_angle() {
    for field in [gf7(), Field::Rationals] {
        for n in 1..=4 {
            let h = build_cyclic(n, field).unwrap();
            let mut m = regular(&h).unwrap();
            let rep = m.claim(&h, StructureRole::FourAngle).unwrap();
            assert!(rep.passed, "{}", rep.summary());
            assert_eq!(m.roles(), &[StructureRole::FourAngle]);
        }
    }
}

#[test]
fn dual_regular_is_four_angle() {
    let h = build_dual(&build_cyclic(3, gf7()).unwrap()).unwrap();
    assert!(check_four_angle(&h, &regular(&h).unwrap()).unwrap().passed);
}

#[test]
fn perturbed_coaction_names_the_broken_variant() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    let m = regular(&h).unwrap();
    let mut rows: Vec<Vec<Scalar>> = (0..9)
        .map(|r| m.right_coaction().unwrap().row(r).to_vec())
        .collect();
    rows[0][0] = f.add(&rows[0][0], &f.one());
    let coact = LinMap::from_rows(f, rows).unwrap();
    let m = m.with_right_coaction(coact).unwrap();
    let rep = check_four_angle(&h, &m).unwrap();
    assert!(!rep.passed);
    assert!(rep.mentions("right-right Hopf compatibility"));
    assert!(!rep.mentions("left-left Hopf compatibility"));
}

#[test]
fn failed_claim_is_not_recorded() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    let mut m = ModuleBundle::new(3, h.beta().clone())
        .unwrap()
        .with_left_action(LinMap::zeros(f, 3, 9))
        .unwrap();
    assert!(!m.claim(&h, StructureRole::LeftModule).unwrap().passed);
    assert!(m.roles().is_empty());
}

#[test]
fn singular_zeta_is_rejected() {
    let f = gf7();
    assert!(matches!(
        ModuleBundle::new(2, LinMap::zeros(f, 2, 2)),
        Err(Error::SingularMap(_))
    ));
}

#[test]
fn shapes_are_validated() {
    let f = gf7();
    let m = ModuleBundle::new(2, LinMap::identity(f, 1)).unwrap();
    assert!(m.with_left_action(LinMap::zeros(f, 1, 3)).is_err());
}

#[allow(dead_code)]
fn assert_send_sync<T: Send + Sync>() {}

#[test]
fn bundles_are_thread_safe() {
    assert_send_sync::<ModuleBundle>();
    assert_send_sync::<HomHopfAlgebra>();
}
