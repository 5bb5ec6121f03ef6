use hha_core::equivfun::induce_four_angle;
use hha_core::exactlin::{Field, LinMap, Subspace};
use hha_core::fourangle::{
    assoc_cotensor, assoc_tensor, braiding_cotensor, braiding_tensor, check_tensor_hexagons,
    hom_cotensor, hom_tensor, restrict, tensor_ambient, tensor_braiding_ambient,
    unit_isos_cotensor, unit_isos_tensor, xi_coherence, xi_comparison, FourAngleModule,
};
use hha_core::homcore::{build_cyclic, trivial, HomHopfAlgebra};
use hha_core::repcat::{h_tensor_h, regular};
use hha_core::ydmod::{canonical_yd, trivial_yd};
use hha_core::Error;

fn gf7() -> Field {
    Field::gf7()
}

fn unit_object(h: &HomHopfAlgebra) -> FourAngleModule {
    FourAngleModule::new(h, regular(h).unwrap()).unwrap()
}

fn witnesses(h: &HomHopfAlgebra) -> Vec<(&'static str, FourAngleModule)> {
    vec![
        ("H", unit_object(h)),
        (
            "H⊗k",
            induce_four_angle(h, &trivial_yd(h).unwrap()).unwrap(),
        ),
        (
            "H⊗V1",
            induce_four_angle(h, &canonical_yd(h, 1).unwrap()).unwrap(),
        ),
    ]
}

/// `T_s = Σ_{x+y=s} g^x⊗g^y`, columns indexed by `s`.
fn balanced_sums(f: Field, n: usize) -> LinMap {
    LinMap::from_fn(f, n * n, n, |r, s| {
        let (x, y) = (r / n, r % n);
        if (x + y) % n == s {
            f.one()
        } else {
            f.zero()
        }
    })
}

#[test]
fn tensor_of_regular_is_spanned_by_balanced_sums() {
    for n in 1..=4 {
        let h = build_cyclic(n, gf7()).unwrap();
        let hh = unit_object(&h);
        let t = hom_tensor(&h, &hh, &hh).unwrap();
        assert_eq!(t.dim(), n);
        assert!(t.closure_certified);
        assert!(t.report.passed, "{}", t.report.summary());
        let oracle = Subspace::span(&balanced_sums(gf7(), n));
        assert_eq!(t.subspace, oracle);
    }
}

#[test]
fn regular_tensor_over_trivial_algebra_is_one_dimensional() {
    let h = trivial(Field::Rationals);
    let hh = unit_object(&h);
    assert_eq!(hom_tensor(&h, &hh, &hh).unwrap().dim(), 1);
    assert_eq!(hom_cotensor(&h, &hh, &hh).unwrap().dim(), 1);
    let u = unit_isos_tensor(&h, &hh).unwrap();
    assert!(u.report.passed);
    assert_eq!(u.right, LinMap::identity(h.field(), 1));
}

#[test]
fn tensor_of_induced_trivial_modules_has_dim_three() {
    let h = build_cyclic(3, gf7()).unwrap();
    let x = induce_four_angle(&h, &trivial_yd(&h).unwrap()).unwrap();
    let t = hom_tensor(&h, &x, &x).unwrap();
    assert_eq!(t.dim(), 3);
    assert!(t.report.passed);
}

#[test]
fn unit_dimensions_match_for_all_witnesses() {
    for field in [gf7(), Field::Rationals] {
        for n in 1..=3 {
            let h = build_cyclic(n, field).unwrap();
            for (name, m) in witnesses(&h) {
                let t = unit_isos_tensor(&h, &m).unwrap();
                let c = unit_isos_cotensor(&h, &m).unwrap();
                for (label, s) in [
                    ("M⊗H", &t.right_domain),
                    ("H⊗M", &t.left_domain),
                    ("M□H", &c.right_domain),
                    ("H□M", &c.left_domain),
                ] {
                    assert_eq!(s.dim(), m.dim(), "{label} for {name}, n={n}");
                    assert!(s.closure_certified);
                    assert!(
                        s.report.passed,
                        "{label} for {name}: {}",
                        s.report.summary()
                    );
                }
                assert!(c.report.passed, "{name}: {}", c.report.summary());
            }
        }
    }
}

#[test]
fn counit_unit_map_on_the_subspace_has_rank_one() {
    for n in 2..=4 {
        let h = build_cyclic(n, Field::Rationals).unwrap();
        let u = unit_isos_tensor(&h, &unit_object(&h)).unwrap();
        assert_eq!(u.right.rank(), 1);
        assert_eq!(u.left.rank(), 1);
        // Every T_s goes to the sum of all group elements.
        let all = LinMap::from_fn(h.field(), n, 1, |_, _| h.field().one());
        let coords = u
            .right_domain
            .subspace
            .coordinates(&balanced_sums(h.field(), n))
            .unwrap();
        let image = u.right.compose(&coords).unwrap();
        for s in 0..n {
            assert_eq!(image.column(s), all.column(0));
        }
        assert!(!u.report.passed);
        assert!(u.report.mentions("right unit bijective"));
        assert!(u
            .report
            .mentions("right unit inverse lands in the subspace"));
        assert!(u.report.mentions("right unit rewriting rule"));
    }
}

#[test]
fn contracted_unit_maps_are_bijective_unless_char_divides_order() {
    for n in 1..=4 {
        let h = build_cyclic(n, gf7()).unwrap();
        for (name, m) in witnesses(&h) {
            let (r, l) = unit_isos_tensor(&h, &m).unwrap().contracted.unwrap();
            assert!(r.invert().is_ok(), "{name}, n={n}");
            assert!(l.invert().is_ok(), "{name}, n={n}");
        }
    }
    let h = build_cyclic(7, gf7()).unwrap();
    let (r, _) = unit_isos_tensor(&h, &unit_object(&h))
        .unwrap()
        .contracted
        .unwrap();
    assert_eq!(r.rank(), 0);
}

#[test]
fn cotensor_units_are_bijective() {
    let h = build_cyclic(3, Field::Rationals).unwrap();
    let c = unit_isos_cotensor(&h, &unit_object(&h)).unwrap();
    assert!(c.report.passed);
    assert!(c.right.invert().is_ok());
    assert!(c.left.invert().is_ok());
}

#[test]
fn associators_pass_on_regular_triples() {
    for n in 1..=3 {
        let h = build_cyclic(n, gf7()).unwrap();
        let hh = unit_object(&h);
        let t = assoc_tensor(&h, &hh, &hh, &hh).unwrap();
        let c = assoc_cotensor(&h, &hh, &hh, &hh).unwrap();
        assert!(t.passed, "n={n}: {}", t.summary());
        assert!(c.passed, "n={n}: {}", c.summary());
    }
}

#[test]
fn associators_pass_on_mixed_triples() {
    let h = build_cyclic(2, Field::Rationals).unwrap();
    let w = witnesses(&h);
    let (a, b, c) = (&w[0].1, &w[1].1, &w[2].1);
    assert!(assoc_tensor(&h, a, b, c).unwrap().passed);
    assert!(assoc_cotensor(&h, c, a, b).unwrap().passed);
}

#[test]
fn tensor_braiding_inverts_and_is_a_morphism() {
    for n in 1..=3 {
        let h = build_cyclic(n, gf7()).unwrap();
        let w = witnesses(&h);
        for (a, m) in &w {
            for (b, p) in &w {
                let br = braiding_tensor(&h, m, p).unwrap();
                assert!(br.report.passed, "{a},{b} n={n}: {}", br.report.summary());
                let map = br.map.unwrap();
                assert_eq!(map.rows(), br.target_dim);
                assert!(map.invert().is_ok());
            }
        }
    }
}

#[test]
fn braiding_on_dimension_one_is_identity() {
    let h = trivial(gf7());
    let hh = unit_object(&h);
    let one = LinMap::identity(gf7(), 1);
    assert_eq!(braiding_tensor(&h, &hh, &hh).unwrap().map.unwrap(), one);
    assert_eq!(braiding_cotensor(&h, &hh, &hh).unwrap().map.unwrap(), one);
    assert_eq!(xi_comparison(&h, &hh, &hh).unwrap().map.unwrap(), one);
}

#[test]
fn braiding_is_well_defined_on_the_balanced_product() {
    let h = build_cyclic(3, gf7()).unwrap();
    let hh = unit_object(&h);
    let amb = tensor_braiding_ambient(&h, &hh, &hh).unwrap();
    assert_eq!((amb.rows(), amb.cols()), (9, 9));
    let br = braiding_tensor(&h, &hh, &hh).unwrap();
    assert!(!br.report.mentions("well defined"));
}

#[test]
fn cotensor_braiding_inverts_and_is_a_morphism() {
    for n in 1..=3 {
        let h = build_cyclic(n, Field::Rationals).unwrap();
        let w = witnesses(&h);
        for (a, m) in &w {
            for (b, p) in &w {
                let br = braiding_cotensor(&h, m, p).unwrap();
                assert!(br.report.passed, "{a},{b} n={n}: {}", br.report.summary());
            }
        }
    }
}

#[test]
fn xi_is_an_isomorphism_natural_in_zeta() {
    for n in 1..=3 {
        let h = build_cyclic(n, gf7()).unwrap();
        for (name, m) in witnesses(&h) {
            let x = xi_comparison(&h, &m, &m).unwrap();
            assert!(x.report.passed, "{name} n={n}: {}", x.report.summary());
            let map = x.map.unwrap();
            let src = hom_tensor(&h, &m, &m).unwrap();
            let tgt = hom_cotensor(&h, &m, &m).unwrap();
            assert_eq!(
                map.compose(src.induced.zeta()).unwrap(),
                tgt.induced.zeta().compose(&map).unwrap()
            );
        }
    }
}

#[test]
fn xi_coherence_commutes() {
    for n in 1..=3 {
        let h = build_cyclic(n, gf7()).unwrap();
        let hh = unit_object(&h);
        let r = xi_coherence(&h, &hh, &hh, &hh).unwrap();
        assert!(r.passed, "n={n}: {}", r.summary());
    }
    let h = build_cyclic(2, gf7()).unwrap();
    let w = witnesses(&h);
    assert!(xi_coherence(&h, &w[1].1, &w[2].1, &w[0].1).unwrap().passed);
}

#[test]
fn tensor_hexagons_hold() {
    for n in 1..=2 {
        let h = build_cyclic(n, Field::Rationals).unwrap();
        let w = witnesses(&h);
        for (a, u) in &w {
            for (b, v) in &w {
                for (c, x) in &w {
                    let r = check_tensor_hexagons(&h, u, v, x).unwrap();
                    assert!(r.passed, "({a},{b},{c}) n={n}: {}", r.summary());
                }
            }
        }
    }
}

#[test]
fn restrict_rejects_non_invariant_subspace() {
    let h = build_cyclic(3, gf7()).unwrap();
    let hh = unit_object(&h);
    let amb = tensor_ambient(&h, &hh, &hh).unwrap();
    let line = Subspace::span(&LinMap::basis_vector(gf7(), 9, 1));
    assert!(matches!(
        restrict(&line, &amb),
        Err(Error::ClosureFailure(_))
    ));
}

#[test]
fn four_angle_requires_all_structures() {
    let h = build_cyclic(2, gf7()).unwrap();
    let err = FourAngleModule::new(&h, h_tensor_h(&h).unwrap()).unwrap_err();
    assert!(matches!(err, Error::FourAngleCheckFailure(_)));
}

#[test]
fn products_reject_modules_over_other_algebras() {
    let h2 = build_cyclic(2, gf7()).unwrap();
    let h3 = build_cyclic(3, gf7()).unwrap();
    let a = unit_object(&h2);
    let b = unit_object(&h3);
    assert!(matches!(
        hom_tensor(&h3, &a, &b),
        Err(Error::AlgebraMismatch(_))
    ));
}
