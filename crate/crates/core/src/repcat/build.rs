use crate::error::Result;
use crate::exactlin::{LinMap, Net};
use crate::homcore::HomHopfAlgebra;

use super::ModuleBundle;

/// `H` over itself: multiplication on both sides, `Δ` as both coactions,
/// `ζ = β`.
pub fn regular(h: &HomHopfAlgebra) -> Result<ModuleBundle> {
    ModuleBundle::new(h.dim(), h.beta().clone())?
        .with_left_action(h.mult().clone())?
        .with_right_action(h.mult().clone())?
        .with_left_coaction(h.comult().clone())?
        .with_right_coaction(h.comult().clone())
}

/// `𝕜` with `h·λ = λ·h = ε(h)λ`, `ρ^l(λ) = 1⊗λ`, `ρ^r(λ) = λ⊗1`, `ζ = id`.
/// Not a four-angle module in general, only a module and comodule on each side.
pub fn trivial_module(h: &HomHopfAlgebra) -> Result<ModuleBundle> {
    let f = h.field();
    let n = h.dim();
    ModuleBundle::new(n, LinMap::identity(f, 1))?
        .with_left_action(h.counit().clone())?
        .with_right_action(h.counit().clone())?
        .with_left_coaction(h.unit().clone())?
        .with_right_coaction(h.unit().clone())
}

/// `H⊗V` with `h·(g⊗v) = hg⊗ζ_V(v)` and `ρ^l(g⊗v) = g_1⊗g_2⊗ζ_V(v)`,
/// structure map `β⊗ζ_V`.
pub fn h_tensor_v(h: &HomHopfAlgebra, zeta_v: &LinMap) -> Result<ModuleBundle> {
    let f = h.field();
    let (n, k) = (h.dim(), zeta_v.rows());
    let act = Net::eval(f, &[n, n, k], |net, w| {
        let hg = h.m(net, w[0], w[1])?;
        let v = net.apply1(zeta_v, &[w[2]])?;
        Ok(vec![hg, v])
    })?;
    let coact = Net::eval(f, &[n, k], |net, w| {
        let (g1, g2) = h.delta(net, w[0])?;
        let v = net.apply1(zeta_v, &[w[1]])?;
        Ok(vec![g1, g2, v])
    })?;
    ModuleBundle::new(n, h.beta().kron(zeta_v)?)?
        .with_left_action(act)?
        .with_left_coaction(coact)
}

/// `H⊗H` with `h·(g⊗k) = hg⊗β(k)` and `ρ^l(g⊗k) = g_1⊗g_2⊗β(k)`.
pub fn h_tensor_h(h: &HomHopfAlgebra) -> Result<ModuleBundle> {
    h_tensor_v(h, h.beta())
}
