use hha_core::exactlin::{Field, LinMap, Scalar};
use hha_core::homcore::{
    build_cyclic, build_dual, check_hom_algebra, check_hom_coalgebra, check_hom_hopf,
    opposite_variants, trivial, HomAlgebra, HomCoalgebra, HomHopfAlgebra,
};

fn gf7() -> Field {
    Field::gf7()
}

/// Independent oracle: the image of `g^i g^j` read straight off the group law.
fn cyclic_product(n: usize, i: usize, j: usize) -> usize {
    (2 * n - (i + j)) % n
}

#[test]
fn cyclic_structure_constants_match_group_law() {
    for n in 1..=6 {
        let h = build_cyclic(n, gf7()).unwrap();
        for i in 0..n {
            for j in 0..n {
                let col = h.mult().column(i * n + j);
                for (k, v) in col.iter().enumerate() {
                    let want = if k == cyclic_product(n, i, j) { 1 } else { 0 };
                    assert_eq!(*v, Scalar::Fp(want));
                }
            }
        }
    }
}

#[test]
fn cyclic_three_products() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    let g1 = LinMap::basis_vector(f, 3, 1);
    let g1g1 = h.mult().compose(&g1.kron(&g1).unwrap()).unwrap();
    assert_eq!(g1g1, g1);
    let one_g1 = h.mult().compose(&h.unit().kron(&g1).unwrap()).unwrap();
    assert_eq!(one_g1, LinMap::basis_vector(f, 3, 2));
    assert_eq!(one_g1, h.beta().compose(&g1).unwrap());
}

#[test]
fn cyclic_four_antipode() {
    let f = gf7();
    let h = build_cyclic(4, f).unwrap();
    let s_g1 = h
        .antipode()
        .compose(&LinMap::basis_vector(f, 4, 1))
        .unwrap();
    assert_eq!(s_g1, LinMap::basis_vector(f, 4, 3));
    assert_eq!(
        h.antipode().compose(h.beta()).unwrap(),
        h.beta().compose(h.antipode()).unwrap()
    );
}

#[test]
fn phi_is_an_involution() {
    for n in 1..=6 {
        let h = build_cyclic(n, gf7()).unwrap();
        assert!(h.beta().compose(h.beta()).unwrap().is_identity());
        assert_eq!(h.beta().invert().unwrap(), *h.beta());
    }
}

#[test]
fn cyclic_passes_all_axioms() {
    for field in [gf7(), Field::Rationals] {
        for n in 1..=6 {
            let h = build_cyclic(n, field).unwrap();
            let rep = check_hom_hopf(&h).unwrap();
            assert!(rep.passed, "n={n}: {:?}", rep.axioms());
        }
    }
}

#[test]
fn zero_order_is_rejected() {
    assert!(build_cyclic(0, gf7()).is_err());
}

#[test]
fn perturbed_multiplication_breaks_associativity() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    let mut rows: Vec<Vec<Scalar>> = (0..3).map(|r| h.mult().row(r).to_vec()).collect();
    rows[0][4] = f.add(&rows[0][4], &f.one());
    let mult = LinMap::from_rows(f, rows).unwrap();
    let a = HomAlgebra::new(mult, h.unit().clone(), h.beta().clone()).unwrap();
    let rep = check_hom_algebra(&a).unwrap();
    assert!(!rep.passed);
    assert!(rep.mentions("Hom-associativity"));
}

#[test]
fn zero_counit_breaks_counit_laws_everywhere() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    let c =
        HomCoalgebra::new(h.comult().clone(), LinMap::zeros(f, 1, 3), h.beta().clone()).unwrap();
    let rep = check_hom_coalgebra(&c).unwrap();
    assert!(!rep.passed);
    for law in ["left counit law", "right counit law"] {
        let hits: Vec<_> = rep.violations.iter().filter(|v| v.axiom == law).collect();
        assert_eq!(hits.len(), 3, "{law}");
    }
}

#[test]
fn identity_antipode_fails_at_g1() {
    let f = gf7();
    let h = build_cyclic(3, f).unwrap();
    let bad = HomHopfAlgebra::new(
        h.algebra().clone(),
        h.coalgebra().clone(),
        LinMap::identity(f, 3),
    )
    .unwrap();
    let rep = check_hom_hopf(&bad).unwrap();
    assert!(!rep.passed);
    let v = rep
        .violations
        .iter()
        .find(|v| v.axiom == "left antipode law" && v.index == [1])
        .expect("violation at g^1");
    // g^{-1}·g^{-1} = g^2·g^2 = g^{-4} = g^2, while ε(g)1 = g^0.
    assert_eq!(v.lhs, vec![Scalar::Fp(0), Scalar::Fp(0), Scalar::Fp(1)]);
    assert_eq!(v.rhs, vec![Scalar::Fp(1), Scalar::Fp(0), Scalar::Fp(0)]);
}

#[test]
fn trivial_algebra_passes() {
    let k = trivial(gf7());
    assert_eq!(k.dim(), 1);
    assert!(check_hom_hopf(&k).unwrap().passed);
    let d = build_dual(&k).unwrap();
    assert_eq!(d.dim(), 1);
    assert!(check_hom_hopf(&d).unwrap().passed);
}

#[test]
fn dual_of_cyclic_passes() {
    for field in [gf7(), Field::Rationals] {
        for n in 2..=5 {
            let d = build_dual(&build_cyclic(n, field).unwrap()).unwrap();
            let rep = check_hom_hopf(&d).unwrap();
            assert!(rep.passed, "n={n}: {:?}", rep.axioms());
        }
    }
}

#[test]
fn dual_counit_evaluates_at_unit() {
    let f = gf7();
    let d = build_dual(&build_cyclic(3, f).unwrap()).unwrap();
    let x0 = LinMap::basis_vector(f, 3, 0);
    assert_eq!(*d.counit().compose(&x0).unwrap().get(0, 0), f.one());
    let x1 = LinMap::basis_vector(f, 3, 1);
    assert_eq!(*d.counit().compose(&x1).unwrap().get(0, 0), f.zero());
}

#[test]
fn dual_convolution_matches_direct_evaluation() {
    // (x•y)(h) = x(β^{-2}(h_1)) y(β^{-2}(h_2)), evaluated on coordinates.
    let f = Field::Rationals;
    let h = build_cyclic(4, f).unwrap();
    let d = build_dual(&h).unwrap();
    let n = 4;
    let b2 = h.beta_pow(-2).unwrap();
    for i in 0..n {
        for j in 0..n {
            let prod = d.mult().column(i * n + j);
            for (k, got) in prod.iter().enumerate() {
                let hk = LinMap::basis_vector(f, n, k);
                let split = b2
                    .kron(b2)
                    .unwrap()
                    .compose(&h.comult().compose(&hk).unwrap())
                    .unwrap();
                let want = split.get(i * n + j, 0).clone();
                assert_eq!(got, &want);
            }
        }
    }
}

#[test]
fn opposite_of_commutative_is_identical() {
    for n in 1..=5 {
        let h = build_cyclic(n, gf7()).unwrap();
        let op = opposite_variants(&h).unwrap();
        assert_eq!(op.mult(), h.mult());
        assert_eq!(opposite_variants(&op).unwrap(), h);
    }
}

#[test]
fn opposite_of_noncommutative_is_involution() {
    let f = Field::Rationals;
    let h = build_cyclic(3, f).unwrap();
    let mut rows: Vec<Vec<Scalar>> = (0..3).map(|r| h.mult().row(r).to_vec()).collect();
    rows[1][1] = f.from_i64(5);
    let mult = LinMap::from_rows(f, rows).unwrap();
    let a = HomAlgebra::new(mult, h.unit().clone(), h.beta().clone()).unwrap();
    let skew = HomHopfAlgebra::new(a, h.coalgebra().clone(), h.antipode().clone()).unwrap();
    let op = opposite_variants(&skew).unwrap();
    assert_ne!(op.mult(), skew.mult());
    assert_eq!(opposite_variants(&op).unwrap(), skew);
}

#[test]
fn singular_beta_is_rejected() {
    let f = gf7();
    let h = build_cyclic(2, f).unwrap();
    let err = HomAlgebra::new(h.mult().clone(), h.unit().clone(), LinMap::zeros(f, 2, 2));
    assert!(matches!(err, Err(hha_core::Error::SingularMap(_))));
}
