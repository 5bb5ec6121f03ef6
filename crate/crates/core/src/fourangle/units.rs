use crate::error::Result;
use crate::exactlin::{LinMap, Net};
use crate::homcore::HomHopfAlgebra;
use crate::repcat::{check_morphism, regular};
use crate::report::AxiomReport;

use super::{hom_cotensor, hom_tensor, FourAngleModule, StructuredSubspace};

/// The right and left unit maps of one product, each restricted to its
/// subspace (`dim M × dim subspace`), with the verification report.
///
/// For `⊗_H` the `contracted` maps `m⊗g ↦ ζ^{-1}(m)·β^{-1}(g)` and
/// `g⊗m ↦ β^{-1}(g)·ζ^{-1}(m)` are also returned. They are not part of the
/// report; they are the maps the rewriting rule reduces `r̃` and `l̃` to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitIsos {
    pub right: LinMap,
    pub left: LinMap,
    pub contracted: Option<(LinMap, LinMap)>,
    pub right_domain: StructuredSubspace,
    pub left_domain: StructuredSubspace,
    pub report: AxiomReport,
}

fn unit_module(h: &HomHopfAlgebra) -> Result<FourAngleModule> {
    FourAngleModule::new(h, regular(h)?)
}

fn require_iso(rep: &mut AxiomReport, name: &str, f: &LinMap) {
    rep.require(
        format!("{name} bijective"),
        f.is_square() && f.invert().is_ok(),
    );
}

/// `r̃: M⊗_H H → M, m⊗g ↦ mε(g)` and `l̃: H⊗_H M → M, g⊗m ↦ ε(g)m`.
///
/// Checks bijectivity, that both are four-angle morphisms, that the candidate
/// inverses `m ↦ m⊗1` and `m ↦ 1⊗m` land in the subspaces and invert them,
/// and the rewriting rules `m⊗g = ζ^{-1}(m)·β^{-1}(g)⊗1` and
/// `g⊗m = 1⊗β^{-1}(g)·ζ^{-1}(m)` on the subspace basis.
pub fn unit_isos_tensor(h: &HomHopfAlgebra, m: &FourAngleModule) -> Result<UnitIsos> {
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    let hh = unit_module(h)?;
    let mh = hom_tensor(h, m, &hh)?;
    let hm = hom_tensor(h, &hh, m)?;
    let id_d = LinMap::identity(f, d);
    let mut rep = AxiomReport::new();

    let right = id_d.kron(h.counit())?.compose(mh.basis())?;
    let left = h.counit().kron(&id_d)?.compose(hm.basis())?;
    require_iso(&mut rep, "right unit", &right);
    require_iso(&mut rep, "left unit", &left);
    rep.merge(check_morphism("right unit", &right, &mh.induced, m)?);
    rep.merge(check_morphism("left unit", &left, &hm.induced, m)?);

    let right_inv = id_d.kron(h.unit())?;
    let left_inv = h.unit().kron(&id_d)?;
    for (name, sub, inv, map) in [
        ("right unit", &mh, &right_inv, &right),
        ("left unit", &hm, &left_inv, &left),
    ] {
        let inside = sub.subspace.contains_all(inv)?;
        rep.require(format!("{name} inverse lands in the subspace"), inside);
        if inside {
            let coords = sub.subspace.coordinates(inv)?;
            rep.compare(
                &format!("{name} after its inverse"),
                &[d],
                &map.compose(&coords)?,
                &id_d,
            )?;
            rep.compare(
                &format!("{name} inverse after it"),
                &[sub.dim()],
                &coords.compose(map)?,
                &LinMap::identity(f, sub.dim()),
            )?;
        }
    }

    let rewrite_r = Net::eval(f, &[d, n], |net, w| {
        let x = m.z(net, w[0], -1)?;
        let g = h.b(net, w[1], -1)?;
        let y = m.act_r(net, x, g)?;
        Ok(vec![y, h.one(net)?])
    })?;
    rep.compare(
        "right unit rewriting rule",
        &[mh.dim()],
        &rewrite_r.compose(mh.basis())?,
        mh.basis(),
    )?;
    let rewrite_l = Net::eval(f, &[n, d], |net, w| {
        let g = h.b(net, w[0], -1)?;
        let x = m.z(net, w[1], -1)?;
        let y = m.act_l(net, g, x)?;
        Ok(vec![h.one(net)?, y])
    })?;
    rep.compare(
        "left unit rewriting rule",
        &[hm.dim()],
        &rewrite_l.compose(hm.basis())?,
        hm.basis(),
    )?;

    let contracted_r = Net::eval(f, &[d, n], |net, w| {
        let x = m.z(net, w[0], -1)?;
        let g = h.b(net, w[1], -1)?;
        Ok(vec![m.act_r(net, x, g)?])
    })?
    .compose(mh.basis())?;
    let contracted_l = Net::eval(f, &[n, d], |net, w| {
        let g = h.b(net, w[0], -1)?;
        let x = m.z(net, w[1], -1)?;
        Ok(vec![m.act_l(net, g, x)?])
    })?
    .compose(hm.basis())?;

    Ok(UnitIsos {
        right,
        left,
        contracted: Some((contracted_r, contracted_l)),
        right_domain: mh,
        left_domain: hm,
        report: rep,
    })
}

/// `r̂: M□_H H → M, m⊗g ↦ ε(g)m` and `l̂: H□_H M → M, g⊗m ↦ ε(g)m`:
/// bijectivity and the four-angle morphism laws.
pub fn unit_isos_cotensor(h: &HomHopfAlgebra, m: &FourAngleModule) -> Result<UnitIsos> {
    let f = h.field();
    let d = m.dim();
    let hh = unit_module(h)?;
    let mh = hom_cotensor(h, m, &hh)?;
    let hm = hom_cotensor(h, &hh, m)?;
    let id_d = LinMap::identity(f, d);
    let mut rep = AxiomReport::new();

    let right = id_d.kron(h.counit())?.compose(mh.basis())?;
    let left = h.counit().kron(&id_d)?.compose(hm.basis())?;
    require_iso(&mut rep, "right unit", &right);
    require_iso(&mut rep, "left unit", &left);
    rep.merge(check_morphism("right unit", &right, &mh.induced, m)?);
    rep.merge(check_morphism("left unit", &left, &hm.induced, m)?);

    Ok(UnitIsos {
        right,
        left,
        contracted: None,
        right_domain: mh,
        left_domain: hm,
        report: rep,
    })
}
