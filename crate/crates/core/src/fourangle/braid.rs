use crate::error::Result;
use crate::exactlin::{LinMap, Net, Wire};
use crate::homcore::HomHopfAlgebra;
use crate::repcat::{check_morphism, ModuleBundle};
use crate::report::AxiomReport;

use super::{
    cotensor_ambient, hom_cotensor, hom_tensor, tensor_ambient, tensor_relations, tensor_subspace,
    FourAngleModule, StructuredSubspace,
};

/// A map between two product subspaces, in subspace coordinates, with its
/// report. `map` is `None` when the ambient formula leaves the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingCheck {
    pub map: Option<LinMap>,
    pub source_dim: usize,
    pub target_dim: usize,
    pub report: AxiomReport,
}

pub type XiCheck = BraidingCheck;

fn sb(h: &HomHopfAlgebra, net: &mut Net, x: Wire, k: i32) -> Result<Wire> {
    let y = h.b(net, x, k)?;
    h.s(net, y)
}

fn sib(h: &HomHopfAlgebra, net: &mut Net, x: Wire, k: i32) -> Result<Wire> {
    let y = h.b(net, x, k)?;
    h.s_inv(net, y)
}

/// `m⊗n ↦ β^{-4}(m_{[-1]1})·ζ^{-3}(n_{(0)})·Sβ^{-3}(n_{(1)1}) ⊗
/// Sβ^{-3}(m_{[-1]2})·ζ^{-3}(m_{[0]})·β^{-4}(n_{(1)2})` on all of `M⊗N`.
pub fn tensor_braiding_ambient(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
) -> Result<LinMap> {
    Net::eval(h.field(), &[m.dim(), n.dim()], |net, w| {
        let (a, m0) = m.coact_l(net, w[0])?;
        let (a1, a2) = h.delta(net, a)?;
        let (n0, b) = n.coact_r(net, w[1])?;
        let (b1, b2) = h.delta(net, b)?;
        let a1 = h.b(net, a1, -4)?;
        let n0 = n.z(net, n0, -3)?;
        let b1 = sb(h, net, b1, -3)?;
        let x = n.act_l(net, a1, n0)?;
        let first = n.act_r(net, x, b1)?;
        let a2 = sb(h, net, a2, -3)?;
        let m0 = m.z(net, m0, -3)?;
        let b2 = h.b(net, b2, -4)?;
        let y = m.act_r(net, m0, b2)?;
        let second = m.act_l(net, a2, y)?;
        Ok(vec![first, second])
    })
}

/// The inverse formula `N⊗M → M⊗N` for [`tensor_braiding_ambient`], with
/// `S^{-1}` in place of `S`. Needs an invertible antipode.
pub fn tensor_braiding_inverse_ambient(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
) -> Result<LinMap> {
    Net::eval(h.field(), &[n.dim(), m.dim()], |net, w| {
        let (n0, b) = n.coact_r(net, w[0])?;
        let (b1, b2) = h.delta(net, b)?;
        let (a, m0) = m.coact_l(net, w[1])?;
        let (a1, a2) = h.delta(net, a)?;
        let b2 = h.b(net, b2, -4)?;
        let m0 = m.z(net, m0, -3)?;
        let a2 = sib(h, net, a2, -3)?;
        let x = m.act_l(net, b2, m0)?;
        let first = m.act_r(net, x, a2)?;
        let b1 = sib(h, net, b1, -3)?;
        let n0 = n.z(net, n0, -3)?;
        let a1 = h.b(net, a1, -4)?;
        let y = n.act_r(net, n0, a1)?;
        let second = n.act_l(net, b1, y)?;
        Ok(vec![first, second])
    })
}

/// `m⊗n ↦ β^{-4}(a)Sβ^{-3}(b)·ζ^{-3}(n'') ⊗ ζ^{-3}(m'')·Sβ^{-3}(c)β^{-4}(e)`
/// where `m ↦ a⊗m''⊗c` and `n ↦ b⊗n''⊗e` are the two-sided coactions.
pub fn cotensor_braiding_ambient(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
) -> Result<LinMap> {
    Net::eval(h.field(), &[m.dim(), n.dim()], |net, w| {
        let (m0, c) = m.coact_r(net, w[0])?;
        let (a, m00) = m.coact_l(net, m0)?;
        let (b, n0) = n.coact_l(net, w[1])?;
        let (n00, e) = n.coact_r(net, n0)?;
        let a = h.b(net, a, -4)?;
        let b = sb(h, net, b, -3)?;
        let ab = h.m(net, a, b)?;
        let n00 = n.z(net, n00, -3)?;
        let first = n.act_l(net, ab, n00)?;
        let c = sb(h, net, c, -3)?;
        let e = h.b(net, e, -4)?;
        let ce = h.m(net, c, e)?;
        let m00 = m.z(net, m00, -3)?;
        let second = m.act_r(net, m00, ce)?;
        Ok(vec![first, second])
    })
}

/// The inverse formula `N⊗M → M⊗N` for [`cotensor_braiding_ambient`].
pub fn cotensor_braiding_inverse_ambient(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
) -> Result<LinMap> {
    Net::eval(h.field(), &[n.dim(), m.dim()], |net, w| {
        let (n0, e) = n.coact_r(net, w[0])?;
        let (b, n00) = n.coact_l(net, n0)?;
        let (a, m0) = m.coact_l(net, w[1])?;
        let (m00, c) = m.coact_r(net, m0)?;
        let a = sib(h, net, a, -3)?;
        let b = h.b(net, b, -4)?;
        let ab = h.m(net, a, b)?;
        let m00 = m.z(net, m00, -3)?;
        let first = m.act_r(net, m00, ab)?;
        let c = h.b(net, c, -4)?;
        let e = sib(h, net, e, -3)?;
        let ce = h.m(net, c, e)?;
        let n00 = n.z(net, n00, -3)?;
        let second = n.act_l(net, ce, n00)?;
        Ok(vec![first, second])
    })
}

/// `m⊗n ↦ ζ^{-2}(m_{(0)})·β^{-2}(n_{[-1]}) ⊗ β^{-2}(m_{(1)})·ζ^{-2}(n_{[0]})`.
pub fn xi_ambient(h: &HomHopfAlgebra, m: &ModuleBundle, n: &ModuleBundle) -> Result<LinMap> {
    Net::eval(h.field(), &[m.dim(), n.dim()], |net, w| {
        let (m0, c) = m.coact_r(net, w[0])?;
        let (b, n0) = n.coact_l(net, w[1])?;
        let m0 = m.z(net, m0, -2)?;
        let b = h.b(net, b, -2)?;
        let first = m.act_r(net, m0, b)?;
        let c = h.b(net, c, -2)?;
        let n0 = n.z(net, n0, -2)?;
        let second = n.act_l(net, c, n0)?;
        Ok(vec![first, second])
    })
}

/// Restricts `ambient` to `source`, checks the image lies in `target`,
/// bijectivity, the optional inverse formula and the morphism laws.
fn induced_map(
    name: &str,
    ambient: &LinMap,
    inverse: Option<&LinMap>,
    source: &StructuredSubspace,
    target: &StructuredSubspace,
) -> Result<BraidingCheck> {
    let f = ambient.field();
    let mut rep = AxiomReport::new();
    let image = ambient.compose(source.basis())?;
    let inside = target.subspace.contains_all(&image)?;
    rep.require(format!("{name} maps into the target product"), inside);
    let mut out = BraidingCheck {
        map: None,
        source_dim: source.dim(),
        target_dim: target.dim(),
        report: AxiomReport::new(),
    };
    if !inside {
        out.report = rep;
        return Ok(out);
    }
    let map = target.subspace.coordinates(&image)?;
    rep.require(
        format!("{name} bijective"),
        map.is_square() && map.invert().is_ok(),
    );
    if let Some(inv) = inverse {
        let back = inv.compose(target.basis())?;
        let lands = source.subspace.contains_all(&back)?;
        rep.require(
            format!("{name} inverse maps into the source product"),
            lands,
        );
        if lands {
            let back = source.subspace.coordinates(&back)?;
            rep.compare(
                &format!("{name} inverse (left)"),
                &[source.dim()],
                &back.compose(&map)?,
                &LinMap::identity(f, source.dim()),
            )?;
            rep.compare(
                &format!("{name} inverse (right)"),
                &[target.dim()],
                &map.compose(&back)?,
                &LinMap::identity(f, target.dim()),
            )?;
        }
    }
    rep.merge(check_morphism(
        name,
        &map,
        &source.induced,
        &target.induced,
    )?);
    out.map = Some(map);
    out.report = rep;
    Ok(out)
}

/// `σ̃: M⊗_H N → N⊗_H M`, including the check that the ambient formula
/// agrees on `m·h⊗ζ(n)` and `ζ(m)⊗h·n` modulo the relations of `N⊗_H M`.
pub fn braiding_tensor(
    h: &HomHopfAlgebra,
    m: &FourAngleModule,
    n: &FourAngleModule,
) -> Result<BraidingCheck> {
    let f = h.field();
    let (k, dm, dn) = (h.dim(), m.dim(), n.dim());
    let source = hom_tensor(h, m, n)?;
    let target = hom_tensor(h, n, m)?;
    let amb = tensor_braiding_ambient(h, m, n)?;
    let inv = if h.antipode_inv().is_ok() {
        Some(tensor_braiding_inverse_ambient(h, m, n)?)
    } else {
        None
    };
    let mut out = induced_map("braiding", &amb, inv.as_ref(), &source, &target)?;
    if inv.is_none() {
        out.report
            .note("antipode not invertible; inverse formula skipped");
    }
    let lhs = Net::eval(f, &[dm, k, dn], |net, w| {
        Ok(vec![m.act_r(net, w[0], w[1])?, n.z(net, w[2], 1)?])
    })?;
    let rhs = Net::eval(f, &[dm, k, dn], |net, w| {
        Ok(vec![m.z(net, w[0], 1)?, n.act_l(net, w[1], w[2])?])
    })?;
    let gap = amb.compose(&lhs)?.sub(&amb.compose(&rhs)?)?;
    let relations = tensor_relations(h, n, m)?;
    out.report.require(
        "braiding well defined on the balanced product",
        relations.contains_all(&gap)?,
    );
    Ok(out)
}

/// `σ̂: M□_H N → N□_H M`.
pub fn braiding_cotensor(
    h: &HomHopfAlgebra,
    m: &FourAngleModule,
    n: &FourAngleModule,
) -> Result<BraidingCheck> {
    let source = hom_cotensor(h, m, n)?;
    let target = hom_cotensor(h, n, m)?;
    let amb = cotensor_braiding_ambient(h, m, n)?;
    let inv = if h.antipode_inv().is_ok() {
        Some(cotensor_braiding_inverse_ambient(h, m, n)?)
    } else {
        None
    };
    let mut out = induced_map("cobraiding", &amb, inv.as_ref(), &source, &target)?;
    if inv.is_none() {
        out.report
            .note("antipode not invertible; inverse formula skipped");
    }
    Ok(out)
}

/// `ξ: M⊗_H N → M□_H N`.
pub fn xi_comparison(
    h: &HomHopfAlgebra,
    m: &FourAngleModule,
    n: &FourAngleModule,
) -> Result<XiCheck> {
    let source = hom_tensor(h, m, n)?;
    let target = hom_cotensor(h, m, n)?;
    induced_map(
        "comparison map",
        &xi_ambient(h, m, n)?,
        None,
        &source,
        &target,
    )
}

/// The two ways of comparing `(M⊗_H N)⊗_H P` with the iterated cotensor
/// agree: `ξ_{M□N,P}(ξ_{M,N}⊗id)` and `ξ_{M,N□P}(id⊗ξ_{N,P})`.
pub fn xi_coherence(
    h: &HomHopfAlgebra,
    m: &FourAngleModule,
    n: &FourAngleModule,
    p: &FourAngleModule,
) -> Result<AxiomReport> {
    let f = h.field();
    let mn = hom_tensor(h, m, n)?;
    let inner = tensor_subspace(h, &mn.induced, p)?;
    let basis = mn
        .basis()
        .kron(&LinMap::identity(f, p.dim()))?
        .compose(inner.basis())?;
    let id_m = LinMap::identity(f, m.dim());
    let id_p = LinMap::identity(f, p.dim());
    let top = LinMap::chain(&[
        &xi_ambient(h, &cotensor_ambient(h, m, n)?, p)?,
        &xi_ambient(h, m, n)?.kron(&id_p)?,
        &basis,
    ])?;
    let bottom = LinMap::chain(&[
        &xi_ambient(h, m, &cotensor_ambient(h, n, p)?)?,
        &id_m.kron(&xi_ambient(h, n, p)?)?,
        &basis,
    ])?;
    let mut rep = AxiomReport::new();
    rep.compare("comparison map coherence", &[inner.dim()], &top, &bottom)?;
    Ok(rep)
}

/// Both hexagons for `σ̃` on `U⊗_H(V⊗_H W)` and `(U⊗_H V)⊗_H W`, with the
/// associators taken as identities of the ambient `U⊗V⊗W`.
pub fn check_tensor_hexagons(
    h: &HomHopfAlgebra,
    u: &FourAngleModule,
    v: &FourAngleModule,
    w: &FourAngleModule,
) -> Result<AxiomReport> {
    let f = h.field();
    let id = |d: usize| LinMap::identity(f, d);
    let (du, dv, dw) = (u.dim(), v.dim(), w.dim());
    let mut rep = AxiomReport::new();

    let vw = hom_tensor(h, v, w)?;
    let s1 = tensor_subspace(h, u, &vw.induced)?;
    let b1 = id(du).kron(vw.basis())?.compose(s1.basis())?;
    let lhs = tensor_braiding_ambient(h, u, &tensor_ambient(h, v, w)?)?.compose(&b1)?;
    let rhs = LinMap::chain(&[
        &id(dv).kron(&tensor_braiding_ambient(h, u, w)?)?,
        &tensor_braiding_ambient(h, u, v)?.kron(&id(dw))?,
        &b1,
    ])?;
    rep.compare("first hexagon", &[s1.dim()], &lhs, &rhs)?;

    let uv = hom_tensor(h, u, v)?;
    let s2 = tensor_subspace(h, &uv.induced, w)?;
    let b2 = uv.basis().kron(&id(dw))?.compose(s2.basis())?;
    let lhs = tensor_braiding_ambient(h, &tensor_ambient(h, u, v)?, w)?.compose(&b2)?;
    let rhs = LinMap::chain(&[
        &tensor_braiding_ambient(h, u, w)?.kron(&id(dv))?,
        &id(du).kron(&tensor_braiding_ambient(h, v, w)?)?,
        &b2,
    ])?;
    rep.compare("second hexagon", &[s2.dim()], &lhs, &rhs)?;
    Ok(rep)
}
