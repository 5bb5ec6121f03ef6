use crate::error::{Error, Result};
use crate::exactlin::{swap, Field, LinMap, Net};

use super::{HomAlgebra, HomCoalgebra, HomHopfAlgebra};

/// The twisted group algebra `kG`, `G` cyclic of order `n`, with structure
/// map `φ(g^i) = g^{-i}`:
/// `g^i g^j = g^{-(i+j)}`, `Δ(g^i) = g^{-i} ⊗ g^{-i}`, `ε = 1`,
/// `S(g^i) = g^{-i}`. Exponents are reduced to `0..n`.
pub fn build_cyclic(n: usize, field: Field) -> Result<HomHopfAlgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cyclic group order must be positive".into(),
        ));
    }
    let neg = |i: usize| (n - i % n) % n;
    let mult_images: Vec<usize> = (0..n * n).map(|c| neg(c / n + c % n)).collect();
    let mult = LinMap::permutation(field, n, &mult_images);
    let unit = LinMap::basis_vector(field, n, 0);
    let phi_images: Vec<usize> = (0..n).map(neg).collect();
    let phi = LinMap::permutation(field, n, &phi_images);
    let comult_images: Vec<usize> = (0..n).map(|i| neg(i) * n + neg(i)).collect();
    let comult = LinMap::permutation(field, n * n, &comult_images);
    let counit = LinMap::from_fn(field, 1, n, |_, _| field.one());
    let algebra = HomAlgebra::new(mult, unit, phi.clone())?;
    let coalgebra = HomCoalgebra::new(comult, counit, phi.clone())?;
    HomHopfAlgebra::new(algebra, coalgebra, phi)
}

/// The one-dimensional Hom-Hopf algebra `𝕜` with `β = id`.
pub fn trivial(field: Field) -> HomHopfAlgebra {
    build_cyclic(1, field).expect("order 1 is valid")
}

/// The dual `(H*, α = β^{*-1}, S*)` in the coordinate covector basis.
///
/// The product is the twisted convolution
/// `(x•y)(h) = x(β^{-2}(h_1)) y(β^{-2}(h_2))` and the coproduct is
/// `Δ*(x)(h⊗g) = x(β^{-2}(hg))`. Unit `ε`, counit `x ↦ x(1_H)`.
pub fn build_dual(h: &HomHopfAlgebra) -> Result<HomHopfAlgebra> {
    let f = h.field();
    let n = h.dim();
    let split = Net::eval(f, &[n], |net, w| {
        let (a, b) = h.delta(net, w[0])?;
        Ok(vec![h.b(net, a, -2)?, h.b(net, b, -2)?])
    })?;
    let fused = h.beta_pow(-2)?.compose(h.mult())?;
    let alpha = h.beta_inv().transpose();
    let algebra = HomAlgebra::new(split.transpose(), h.counit().transpose(), alpha.clone())?;
    let coalgebra = HomCoalgebra::new(fused.transpose(), h.unit().transpose(), alpha)?;
    HomHopfAlgebra::new(algebra, coalgebra, h.antipode().transpose())
}

/// The same Hom-Hopf data with multiplication reversed, `m^op(a,b) = m(b,a)`.
///
/// The result is always a Hom-algebra; whether it is again Hom-Hopf with the
/// original antipode is for [`super::check_hom_hopf`] to decide.
pub fn opposite_variants(h: &HomHopfAlgebra) -> Result<HomHopfAlgebra> {
    let f = h.field();
    let n = h.dim();
    let mult = h.mult().compose(&swap(f, n, n))?;
    let algebra = HomAlgebra::new(mult, h.unit().clone(), h.beta().clone())?;
    HomHopfAlgebra::new(algebra, h.coalgebra().clone(), h.antipode().clone())
}

/// The tensor product Hom-algebra `A⊗B` with `(a⊗b)(a'⊗b') = aa'⊗bb'`,
/// structure map `ζ_A⊗ζ_B` and unit `1⊗1`.
pub fn tensor_algebra(a: &HomAlgebra, b: &HomAlgebra) -> Result<HomAlgebra> {
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let mult = Net::eval(f, &[na, nb, na, nb], |net, w| {
        Ok(vec![a.m(net, w[0], w[2])?, b.m(net, w[1], w[3])?])
    })?;
    HomAlgebra::new(mult, a.unit().kron(b.unit())?, a.beta().kron(b.beta())?)
}
