//! Induction `V ↦ H⊗V`, coinvariants `M ↦ ^{coH}M`, and the checks that
//! they are mutually inverse monoidal equivalences.

mod crossing;
mod phi;

pub use crossing::{
    action_from_crossing, check_ab_bimodule, check_crossing, crossing_from_action, CrossingMap,
};
pub use phi::{delta_inverse, phi_ambient, phi_coherence, phi_monoidal, PhiCheck};

use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Net, Subspace};
use crate::fourangle::{restrict, FourAngleModule};
use crate::homcore::HomHopfAlgebra;
use crate::repcat::{check_morphism, h_tensor_v, ModuleBundle};
use crate::report::AxiomReport;
use crate::ydmod::YDModule;

/// The right action on `H⊗V`: `(g⊗v)·h = gβ^{-1}(h_1) ⊗ v◁β^{-1}(h_2)`.
pub fn induced_right_action(h: &HomHopfAlgebra, v: &ModuleBundle) -> Result<LinMap> {
    let n = h.dim();
    Net::eval(h.field(), &[n, v.dim(), n], |net, w| {
        let (h1, h2) = h.delta(net, w[2])?;
        let h1 = h.b(net, h1, -1)?;
        let h2 = h.b(net, h2, -1)?;
        Ok(vec![h.m(net, w[0], h1)?, v.act_r(net, w[1], h2)?])
    })
}

/// The right coaction on `H⊗V`: `g⊗v ↦ g_1 ⊗ v_{(0)} ⊗ β^{-1}(g_2 v_{(1)})`.
pub fn induced_right_coaction(h: &HomHopfAlgebra, v: &ModuleBundle) -> Result<LinMap> {
    let n = h.dim();
    Net::eval(h.field(), &[n, v.dim()], |net, w| {
        let (g1, g2) = h.delta(net, w[0])?;
        let (v0, v1) = v.coact_r(net, w[1])?;
        let p = h.m(net, g2, v1)?;
        Ok(vec![g1, v0, h.b(net, p, -1)?])
    })
}

/// `H⊗V` with the regular left structures twisted by `ζ_V` and the right
/// structures induced from `V`, as an unchecked bundle.
pub fn induce_bundle(h: &HomHopfAlgebra, v: &ModuleBundle) -> Result<ModuleBundle> {
    h_tensor_v(h, v.zeta())?
        .with_right_action(induced_right_action(h, v)?)?
        .with_right_coaction(induced_right_coaction(h, v)?)
}

/// `H⊗V` as a four-angle module.
pub fn induce_four_angle(h: &HomHopfAlgebra, v: &YDModule) -> Result<FourAngleModule> {
    FourAngleModule::new(h, induce_bundle(h, v)?)
}

/// The right coaction `(ε⊗V⊗H)ρ^r(η⊗V)` recovered from a right coaction on
/// `H⊗V` with `dim V = dv`.
pub fn extract_coaction(h: &HomHopfAlgebra, rho: &LinMap, dv: usize) -> Result<LinMap> {
    let n = h.dim();
    Net::eval(h.field(), &[dv], |net, w| {
        let one = h.one(net)?;
        let x = net.apply(rho, &[one, w[0]], &[n, dv, n])?;
        h.eps(net, x[0])?;
        Ok(vec![x[1], x[2]])
    })
}

/// The right action `(ε⊗V)μ(η⊗V⊗H)` recovered from a right action on `H⊗V`.
pub fn extract_action(h: &HomHopfAlgebra, mu: &LinMap, dv: usize) -> Result<LinMap> {
    let n = h.dim();
    Net::eval(h.field(), &[dv, n], |net, w| {
        let one = h.one(net)?;
        let x = net.apply(mu, &[one, w[0], w[1]], &[n, dv])?;
        h.eps(net, x[0])?;
        Ok(vec![x[1]])
    })
}

/// `^{coH}M` with its Yetter-Drinfeld structure. `report` holds the check
/// that `ρ^l(m'◁h) = 1⊗ζ_M(m'◁h)` on all generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coinvariants {
    pub subspace: Subspace,
    pub yd: YDModule,
    pub report: AxiomReport,
}

impl Coinvariants {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

/// `^{coH}M = ker(ρ^l − 1⊗ζ_M)` with `m'◁h = Sβ^{-1}(h_1)·(ζ_M^{-1}(m')·β^{-2}(h_2))`
/// and the restricted right coaction.
pub fn coinvariants(h: &HomHopfAlgebra, m: &FourAngleModule) -> Result<Coinvariants> {
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    let trivial = h.unit().kron(m.zeta())?;
    let sub = m.left_coaction()?.sub(&trivial)?.kernel();

    let act = Net::eval(f, &[d, n], |net, w| {
        let (h1, h2) = h.delta(net, w[1])?;
        let h1 = h.b(net, h1, -1)?;
        let s = h.s(net, h1)?;
        let x = m.z(net, w[0], -1)?;
        let h2 = h.b(net, h2, -2)?;
        let y = m.act_r(net, x, h2)?;
        Ok(vec![m.act_l(net, s, y)?])
    })?;
    let ambient = ModuleBundle::new(n, m.zeta().clone())?
        .with_right_action(act.clone())?
        .with_right_coaction(m.right_coaction()?.clone())?;

    let mut report = AxiomReport::new();
    let image = act.compose(&sub.basis().kron(&LinMap::identity(f, n))?)?;
    report.compare(
        "coinvariant action stays coinvariant",
        &[sub.dim(), n],
        &m.left_coaction()?.compose(&image)?,
        &trivial.compose(&image)?,
    )?;
    let induced = restrict(&sub, &ambient)?;
    let yd = YDModule::new(h, induced)?;
    Ok(Coinvariants {
        subspace: sub,
        yd,
        report,
    })
}

/// `g⊗m' ↦ β^{-1}(g)·ζ_M^{-1}(m')` from `H⊗^{coH}M` to `M`.
pub fn counit_map(h: &HomHopfAlgebra, m: &ModuleBundle, co: &Coinvariants) -> Result<LinMap> {
    Net::eval(h.field(), &[h.dim(), co.dim()], |net, w| {
        let g = h.b(net, w[0], -1)?;
        let x = net.apply1(co.subspace.basis(), &[w[1]])?;
        let x = m.z(net, x, -1)?;
        Ok(vec![m.act_l(net, g, x)?])
    })
}

/// `g⊗m' ↦ g·ζ_M^{-1}(m')`, the plain evaluation candidate for the counit.
pub fn evaluation_candidate(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    co: &Coinvariants,
) -> Result<LinMap> {
    Net::eval(h.field(), &[h.dim(), co.dim()], |net, w| {
        let x = net.apply1(co.subspace.basis(), &[w[1]])?;
        let x = m.z(net, x, -1)?;
        Ok(vec![m.act_l(net, w[0], x)?])
    })
}

/// (a) `^{coH}(H⊗V) ≅ V` via `x ↦ 1⊗x`, and (b) `H⊗^{coH}M ≅ M` via
/// [`counit_map`], each checked for bijectivity and for intertwining every
/// structure both sides carry. When [`evaluation_candidate`] differs from
/// the counit and fails, a note records its failing laws.
pub fn roundtrip_check(
    h: &HomHopfAlgebra,
    v: &YDModule,
    m: &FourAngleModule,
) -> Result<AxiomReport> {
    let f = h.field();
    let mut rep = AxiomReport::new();

    let induced = induce_four_angle(h, v)?;
    let co = coinvariants(h, &induced)?;
    rep.merge(co.report.clone());
    let unit = h.unit().kron(&LinMap::identity(f, v.dim()))?;
    if co.subspace.contains_all(&unit)? {
        let a = co.subspace.coordinates(&unit)?;
        rep.require("V to coinvariants bijective", is_iso(&a));
        rep.merge(check_morphism("V to coinvariants", &a, v, &co.yd)?);
    } else {
        rep.fail("V to coinvariants lands in the coinvariants");
    }

    let co = coinvariants(h, m)?;
    rep.merge(co.report.clone());
    let rebuilt = induce_four_angle(h, &co.yd)?;
    let counit = counit_map(h, m, &co)?;
    rep.require("counit bijective", is_iso(&counit));
    rep.merge(check_morphism("counit", &counit, &rebuilt, m)?);

    let candidate = evaluation_candidate(h, m, &co)?;
    if candidate != counit {
        let mut alt = check_morphism("evaluation candidate", &candidate, &rebuilt, m)?;
        alt.require("evaluation candidate bijective", is_iso(&candidate));
        if !alt.passed {
            rep.note(format!(
                "g·ζ^{{-1}}(m') is not an isomorphism: {}",
                alt.summary()
            ));
        }
    }
    Ok(rep)
}

fn is_iso(a: &LinMap) -> bool {
    a.is_square() && a.invert().is_ok()
}

/// Fails with `IsomorphismFailure` naming the failing laws when
/// [`roundtrip_check`] does not pass.
pub fn require_roundtrip(h: &HomHopfAlgebra, v: &YDModule, m: &FourAngleModule) -> Result<()> {
    let rep = roundtrip_check(h, v, m)?;
    if rep.passed {
        Ok(())
    } else {
        Err(Error::IsomorphismFailure(rep.summary()))
    }
}
