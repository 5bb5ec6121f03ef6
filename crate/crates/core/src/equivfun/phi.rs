use crate::error::Result;
use crate::exactlin::{LinMap, Net};
use crate::fourangle::{hom_cotensor, hom_tensor, tensor_subspace, xi_ambient};
use crate::homcore::HomHopfAlgebra;
use crate::repcat::{check_morphism, ModuleBundle};
use crate::report::AxiomReport;
use crate::ydmod::{yd_tensor, YDModule};

use super::{induce_four_angle, induced_right_coaction};

/// `g⊗v⊗k⊗w ↦ (β^{-1}(g)⊗ζ_V^{-1}(v))·β^{-1}(k) ⊗ w` on the ambient
/// `(H⊗V)⊗(H⊗W)`, using the induced right action on `H⊗V`. Only the right
/// action and `ζ` of `v` are read; `dw` is the dimension of `W`.
pub fn phi_ambient(h: &HomHopfAlgebra, v: &ModuleBundle, dw: usize) -> Result<LinMap> {
    let n = h.dim();
    Net::eval(h.field(), &[n, v.dim(), n, dw], |net, x| {
        let g = h.b(net, x[0], -1)?;
        let y = v.z(net, x[1], -1)?;
        let k = h.b(net, x[2], -1)?;
        let (k1, k2) = h.delta(net, k)?;
        let k1 = h.b(net, k1, -1)?;
        let k2 = h.b(net, k2, -1)?;
        let p = h.m(net, g, k1)?;
        let q = v.act_r(net, y, k2)?;
        Ok(vec![p, q, x[3]])
    })
}

/// `δ^{-1}(g⊗v⊗w) = (β^{-1}(g)⊗ζ_V^{-1}(v))_{(0)} ⊗ (β^{-1}(g)⊗ζ_V^{-1}(v))_{(1)} ⊗ w`
/// from `H⊗V⊗W` to the ambient `(H⊗V)⊗(H⊗W)`, using the induced right
/// coaction on `H⊗V`.
pub fn delta_inverse(h: &HomHopfAlgebra, v: &ModuleBundle, dw: usize) -> Result<LinMap> {
    let n = h.dim();
    let rho = induced_right_coaction(h, v)?;
    Net::eval(h.field(), &[n, v.dim(), dw], |net, x| {
        let g = h.b(net, x[0], -1)?;
        let y = v.z(net, x[1], -1)?;
        let out = net.apply(&rho, &[g, y], &[n, v.dim(), n])?;
        Ok(vec![out[0], out[1], out[2], x[2]])
    })
}

/// `φ` restricted to `(H⊗V)⊗_H(H⊗W)`, as a map onto `H⊗(V⊗W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiCheck {
    pub map: LinMap,
    pub report: AxiomReport,
}

/// Checks that `φ` is bijective, is a morphism for all four structures onto
/// the module induced from `V⊗W`, satisfies `h⊗v⊗1⊗w ↦ h⊗v⊗w`, and that
/// `δ^{-1}∘φ` is the comparison map `ξ` into `(H⊗V)□_H(H⊗W)`.
pub fn phi_monoidal(h: &HomHopfAlgebra, v: &YDModule, w: &YDModule) -> Result<PhiCheck> {
    let f = h.field();
    let (n, dv, dw) = (h.dim(), v.dim(), w.dim());
    let xv = induce_four_angle(h, v)?;
    let xw = induce_four_angle(h, w)?;
    let target = induce_four_angle(h, &yd_tensor(h, v, w)?)?;
    let source = hom_tensor(h, &xv, &xw)?;
    let amb = phi_ambient(h, v, dw)?;
    let map = amb.compose(source.basis())?;
    let mut rep = AxiomReport::new();
    rep.require("φ bijective", map.is_square() && map.invert().is_ok());
    rep.merge(check_morphism("φ", &map, &source.induced, &target)?);

    let unit_in = LinMap::kron_all(
        f,
        &[
            &LinMap::identity(f, n * dv),
            h.unit(),
            &LinMap::identity(f, dw),
        ],
    )?;
    rep.compare(
        "φ normalization",
        &[n, dv, dw],
        &amb.compose(&unit_in)?,
        &LinMap::identity(f, n * dv * dw),
    )?;

    let cot = hom_cotensor(h, &xv, &xw)?;
    let composite = delta_inverse(h, v, dw)?.compose(&map)?;
    rep.require(
        "δ^{-1} lands in the cotensor product",
        cot.subspace.contains_all(&composite)?,
    );
    rep.compare(
        "δ^{-1}φ is the comparison map",
        &[source.dim()],
        &composite,
        &xi_ambient(h, &xv, &xw)?.compose(source.basis())?,
    )?;
    Ok(PhiCheck { map, report: rep })
}

/// Both ways around the rectangle on `(H⊗U)⊗_H(H⊗V)⊗_H(H⊗W)` agree with
/// each other and with the closed formula
/// `β^{-1}(h)(β^{-3}(g_1)β^{-4}(f_11)) ⊗ ζ_U^{-1}(u)◁β^{-3}(g_2)β^{-4}(f_12)
/// ⊗ ζ_V^{-1}(v)◁β^{-2}(f_2) ⊗ w`.
pub fn phi_coherence(
    h: &HomHopfAlgebra,
    u: &YDModule,
    v: &YDModule,
    w: &YDModule,
) -> Result<AxiomReport> {
    let f = h.field();
    let (n, du, dv, dw) = (h.dim(), u.dim(), v.dim(), w.dim());
    let xu = induce_four_angle(h, u)?;
    let xv = induce_four_angle(h, v)?;
    let xw = induce_four_angle(h, w)?;
    let uv = hom_tensor(h, &xu, &xv)?;
    let inner = tensor_subspace(h, &uv.induced, &xw)?;
    let basis = uv
        .basis()
        .kron(&LinMap::identity(f, n * dw))?
        .compose(inner.basis())?;

    let uv_yd = yd_tensor(h, u, v)?;
    let top = LinMap::chain(&[
        &phi_ambient(h, u, dv * dw)?,
        &LinMap::identity(f, n * du).kron(&phi_ambient(h, v, dw)?)?,
        &basis,
    ])?;
    let left = LinMap::chain(&[
        &phi_ambient(h, &uv_yd, dw)?,
        &phi_ambient(h, u, dv)?.kron(&LinMap::identity(f, n * dw))?,
        &basis,
    ])?;
    let closed = Net::eval(f, &[n, du, n, dv, n, dw], |net, x| {
        let (g1, g2) = h.delta(net, x[2])?;
        let (f11, f12, f2) = h.delta_left(net, x[4])?;
        let hh = h.b(net, x[0], -1)?;
        let g1 = h.b(net, g1, -3)?;
        let f11 = h.b(net, f11, -4)?;
        let gf = h.m(net, g1, f11)?;
        let first = h.m(net, hh, gf)?;
        let g2 = h.b(net, g2, -3)?;
        let f12 = h.b(net, f12, -4)?;
        let gf = h.m(net, g2, f12)?;
        let uu = u.z(net, x[1], -1)?;
        let second = u.act_r(net, uu, gf)?;
        let f2 = h.b(net, f2, -2)?;
        let vv = v.z(net, x[3], -1)?;
        let third = v.act_r(net, vv, f2)?;
        Ok(vec![first, second, third, x[5]])
    })?
    .compose(&basis)?;

    let mut rep = AxiomReport::new();
    rep.compare("φ coherence rectangle", &[inner.dim()], &top, &left)?;
    rep.compare("φ coherence closed formula", &[inner.dim()], &top, &closed)?;
    Ok(rep)
}
