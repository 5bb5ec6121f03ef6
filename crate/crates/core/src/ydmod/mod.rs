//! Right-right Yetter–Drinfel'd modules, their tensor product and braiding.

use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Net, Scalar};
use crate::homcore::HomHopfAlgebra;
use crate::repcat::{check_comodule, check_module, ModuleBundle, Side, StructureRole};
use crate::report::AxiomReport;

/// A bundle with right action `◁` and right coaction whose YD law has been
/// verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    bundle: ModuleBundle,
}

impl YDModule {
    /// Fails with `YDCheckFailure` unless `bundle` passes [`check_yd`].
    pub fn new(h: &HomHopfAlgebra, mut bundle: ModuleBundle) -> Result<YDModule> {
        let rep = bundle.claim(h, StructureRole::YetterDrinfeld)?;
        if !rep.passed {
            return Err(Error::YDCheckFailure(rep.summary()));
        }
        Ok(YDModule { bundle })
    }

    pub fn bundle(&self) -> &ModuleBundle {
        &self.bundle
    }

    pub fn into_bundle(self) -> ModuleBundle {
        self.bundle
    }
}

impl Deref for YDModule {
    type Target = ModuleBundle;

    fn deref(&self) -> &ModuleBundle {
        &self.bundle
    }
}

/// Right module and comodule laws, the crossed compatibility
/// `(v◁h_2)_{(0)} ⊗ β²(h_1)(v◁h_2)_{(1)} = v_{(0)}◁β(h_1) ⊗ β(v_{(1)})β²(h_2)`,
/// and its solved form
/// `ρ(v◁h) = v_{(0)}◁β^{-1}(h_21) ⊗ S(h_1)(β^{-1}(v_{(1)})β^{-2}(h_22))`.
/// A disagreement between the two forms is reported as its own violation.
pub fn check_yd(h: &HomHopfAlgebra, v: &ModuleBundle) -> Result<AxiomReport> {
    let f = h.field();
    let (n, d) = (h.dim(), v.dim());
    let mut rep = check_module(h.algebra(), v, Side::Right)?;
    rep.merge(check_comodule(h.coalgebra(), v, Side::Right)?);

    let lhs = Net::eval(f, &[d, n], |net, w| {
        let (h1, h2) = h.delta(net, w[1])?;
        let x = v.act_r(net, w[0], h2)?;
        let (x0, x1) = v.coact_r(net, x)?;
        let h1 = h.b(net, h1, 2)?;
        Ok(vec![x0, h.m(net, h1, x1)?])
    })?;
    let rhs = Net::eval(f, &[d, n], |net, w| {
        let (h1, h2) = h.delta(net, w[1])?;
        let (x0, x1) = v.coact_r(net, w[0])?;
        let h1 = h.b(net, h1, 1)?;
        let x1 = h.b(net, x1, 1)?;
        let h2 = h.b(net, h2, 2)?;
        Ok(vec![v.act_r(net, x0, h1)?, h.m(net, x1, h2)?])
    })?;
    let crossed = rep.compare("YD crossed compatibility", &[d, n], &lhs, &rhs)?;

    let lhs = Net::eval(f, &[d, n], |net, w| {
        let x = v.act_r(net, w[0], w[1])?;
        let (x0, x1) = v.coact_r(net, x)?;
        Ok(vec![x0, x1])
    })?;
    let rhs = Net::eval(f, &[d, n], |net, w| {
        let (h1, h21, h22) = h.delta_right(net, w[1])?;
        let (x0, x1) = v.coact_r(net, w[0])?;
        let h21 = h.b(net, h21, -1)?;
        let left = v.act_r(net, x0, h21)?;
        let x1 = h.b(net, x1, -1)?;
        let h22 = h.b(net, h22, -2)?;
        let inner = h.m(net, x1, h22)?;
        let s = h.s(net, h1)?;
        Ok(vec![left, h.m(net, s, inner)?])
    })?;
    let solved = rep.compare("YD solved form", &[d, n], &lhs, &rhs)?;
    rep.require("YD forms agree", crossed == solved);
    Ok(rep)
}

/// The two YD structures carried by `H` itself.
///
/// Variant 1: coaction `Δ`, `x◁h = Sβ^{-1}(h_1)(β^{-1}(x)β^{-2}(h_2))`.
/// Variant 2: action `m`, `ρ(h) = β^{-1}(h_12) ⊗ Sβ^{-2}(h_11)β^{-1}(h_2)`.
pub fn canonical_yd(h: &HomHopfAlgebra, variant: u8) -> Result<YDModule> {
    let f = h.field();
    let n = h.dim();
    let bundle = match variant {
        1 => {
            let act = Net::eval(f, &[n, n], |net, w| {
                let (h1, h2) = h.delta(net, w[1])?;
                let h1 = h.b(net, h1, -1)?;
                let s = h.s(net, h1)?;
                let x = h.b(net, w[0], -1)?;
                let h2 = h.b(net, h2, -2)?;
                let inner = h.m(net, x, h2)?;
                Ok(vec![h.m(net, s, inner)?])
            })?;
            ModuleBundle::new(n, h.beta().clone())?
                .with_right_action(act)?
                .with_right_coaction(h.comult().clone())?
        }
        2 => {
            let coact = Net::eval(f, &[n], |net, w| {
                let (h11, h12, h2) = h.delta_left(net, w[0])?;
                let a = h.b(net, h12, -1)?;
                let h11 = h.b(net, h11, -2)?;
                let s = h.s(net, h11)?;
                let h2 = h.b(net, h2, -1)?;
                Ok(vec![a, h.m(net, s, h2)?])
            })?;
            ModuleBundle::new(n, h.beta().clone())?
                .with_right_action(h.mult().clone())?
                .with_right_coaction(coact)?
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "canonical YD variant must be 1 or 2, got {variant}"
            )))
        }
    };
    YDModule::new(h, bundle)
}

/// `𝕜` with `v◁h = ε(h)v`, `ρ(v) = v⊗1`, `ζ = id`.
pub fn trivial_yd(h: &HomHopfAlgebra) -> Result<YDModule> {
    let bundle = ModuleBundle::new(h.dim(), LinMap::identity(h.field(), 1))?
        .with_right_action(h.counit().clone())?
        .with_right_coaction(h.unit().clone())?;
    YDModule::new(h, bundle)
}

/// `V⊗W` with `(v⊗w)◁h = v◁β^{-1}(h_1) ⊗ w◁β^{-1}(h_2)`,
/// `ρ(v⊗w) = v_{(0)}⊗w_{(0)}⊗β^{-1}(v_{(1)}w_{(1)})` and `ζ_V⊗ζ_W`.
pub fn yd_tensor(h: &HomHopfAlgebra, v: &YDModule, w: &YDModule) -> Result<YDModule> {
    let f = h.field();
    let (n, dv, dw) = (h.dim(), v.dim(), w.dim());
    if v.over_dim() != n || w.over_dim() != n {
        return Err(Error::AlgebraMismatch(
            "YD modules over different algebras".into(),
        ));
    }
    let act = Net::eval(f, &[dv, dw, n], |net, x| {
        let (h1, h2) = h.delta(net, x[2])?;
        let h1 = h.b(net, h1, -1)?;
        let h2 = h.b(net, h2, -1)?;
        Ok(vec![v.act_r(net, x[0], h1)?, w.act_r(net, x[1], h2)?])
    })?;
    let coact = Net::eval(f, &[dv, dw], |net, x| {
        let (v0, v1) = v.coact_r(net, x[0])?;
        let (w0, w1) = w.coact_r(net, x[1])?;
        let p = h.m(net, v1, w1)?;
        Ok(vec![v0, w0, h.b(net, p, -1)?])
    })?;
    let bundle = ModuleBundle::new(n, v.zeta().kron(w.zeta())?)?
        .with_right_action(act)?
        .with_right_coaction(coact)?;
    YDModule::new(h, bundle)
}

/// `c_{V,W}(v⊗w) = ζ_W^{-1}(w_{(0)}) ⊗ ζ_V^{-1}(v)◁β^{-2}(w_{(1)})`.
pub fn braiding(h: &HomHopfAlgebra, v: &YDModule, w: &YDModule) -> Result<LinMap> {
    Net::eval(h.field(), &[v.dim(), w.dim()], |net, x| {
        let (w0, w1) = w.coact_r(net, x[1])?;
        let w0 = w.z(net, w0, -1)?;
        let vv = v.z(net, x[0], -1)?;
        let w1 = h.b(net, w1, -2)?;
        Ok(vec![w0, v.act_r(net, vv, w1)?])
    })
}

/// The displayed inverse
/// `c_{V,W}^{-1}(w⊗v) = ζ_V^{-1}(v)◁S^{-1}β^{-2}(w_{(1)}) ⊗ ζ_W^{-1}(w_{(0)})`.
pub fn braiding_inverse(h: &HomHopfAlgebra, v: &YDModule, w: &YDModule) -> Result<LinMap> {
    h.antipode_inv()?;
    Net::eval(h.field(), &[w.dim(), v.dim()], |net, x| {
        let (w0, w1) = w.coact_r(net, x[0])?;
        let w1 = h.b(net, w1, -2)?;
        let w1 = h.s_inv(net, w1)?;
        let vv = v.z(net, x[1], -1)?;
        let w0 = w.z(net, w0, -1)?;
        Ok(vec![v.act_r(net, vv, w1)?, w0])
    })
}

/// Verifies that `c_{V,W}` is a morphism of right modules and comodules,
/// commutes with the structure maps, and is inverted by the displayed
/// formula on both sides. Without `S^{-1}` the inverse is obtained by matrix
/// inversion and the report carries a note.
pub fn check_braiding(h: &HomHopfAlgebra, v: &YDModule, w: &YDModule) -> Result<AxiomReport> {
    let f = h.field();
    let (n, dv, dw) = (h.dim(), v.dim(), w.dim());
    let vw = yd_tensor(h, v, w)?;
    let wv = yd_tensor(h, w, v)?;
    let c = braiding(h, v, w)?;
    let mut rep = AxiomReport::new();

    let lhs = c.compose(vw.right_action()?)?;
    let rhs = wv
        .right_action()?
        .compose(&c.kron(&LinMap::identity(f, n))?)?;
    rep.compare("braiding is right linear", &[dv, dw, n], &lhs, &rhs)?;

    let lhs = wv.right_coaction()?.compose(&c)?;
    let rhs = c
        .kron(&LinMap::identity(f, n))?
        .compose(vw.right_coaction()?)?;
    rep.compare("braiding is right colinear", &[dv, dw], &lhs, &rhs)?;

    let lhs = c.compose(vw.zeta())?;
    let rhs = wv.zeta().compose(&c)?;
    rep.compare(
        "braiding commutes with structure maps",
        &[dv, dw],
        &lhs,
        &rhs,
    )?;

    match braiding_inverse(h, v, w) {
        Ok(inv) => {
            let id_vw = LinMap::identity(f, dv * dw);
            rep.compare(
                "braiding inverse (left)",
                &[dv, dw],
                &inv.compose(&c)?,
                &id_vw,
            )?;
            rep.compare(
                "braiding inverse (right)",
                &[dw, dv],
                &c.compose(&inv)?,
                &id_vw,
            )?;
        }
        Err(Error::SingularMap(_)) => {
            rep.require("braiding invertible", c.invert().is_ok());
            rep.note("antipode not invertible: displayed inverse formula not verified");
        }
        Err(e) => return Err(e),
    }
    Ok(rep)
}

/// Both hexagon identities with the identity associator written out, plus
/// naturality of each braiding involved against the structure maps.
pub fn check_hexagons(
    h: &HomHopfAlgebra,
    u: &YDModule,
    v: &YDModule,
    w: &YDModule,
) -> Result<AxiomReport> {
    let f = h.field();
    let (du, dv, dw) = (u.dim(), v.dim(), w.dim());
    for m in [u, v, w] {
        if m.over_dim() != h.dim() {
            return Err(Error::AlgebraMismatch(
                "YD modules over different algebras".into(),
            ));
        }
    }
    let assoc = LinMap::identity(f, du * dv * dw);
    let id = |k: usize| LinMap::identity(f, k);
    let mut rep = AxiomReport::new();

    let vw = yd_tensor(h, v, w)?;
    let lhs = braiding(h, u, &vw)?;
    let rhs = LinMap::chain(&[
        &assoc,
        &id(dv).kron(&braiding(h, u, w)?)?,
        &assoc,
        &braiding(h, u, v)?.kron(&id(dw))?,
        &assoc,
    ])?;
    rep.compare("first hexagon", &[du, dv, dw], &lhs, &rhs)?;

    let uv = yd_tensor(h, u, v)?;
    let lhs = braiding(h, &uv, w)?;
    let rhs = LinMap::chain(&[
        &assoc,
        &braiding(h, u, w)?.kron(&id(dv))?,
        &assoc,
        &id(du).kron(&braiding(h, v, w)?)?,
        &assoc,
    ])?;
    rep.compare("second hexagon", &[du, dv, dw], &lhs, &rhs)?;

    for (a, b, dims) in [(u, v, [du, dv]), (v, w, [dv, dw]), (u, w, [du, dw])] {
        let c = braiding(h, a, b)?;
        let lhs = c.compose(&a.zeta().kron(b.zeta())?)?;
        let rhs = b.zeta().kron(a.zeta())?.compose(&c)?;
        rep.compare("braiding natural in structure maps", &dims, &lhs, &rhs)?;
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryWitness {
    /// Basis index of `x` in `x⊗1_H`.
    pub x: usize,
    pub input: Vec<Scalar>,
    pub image: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryVerdict {
    pub symmetric: bool,
    pub witness: Option<SymmetryWitness>,
}

/// Tests whether `c_{W,V}∘c_{V,W}` is the identity for `V`, `W` the
/// canonical variants 1 and 2. The witness is the first `x⊗1_H` that moves;
/// if every such vector is fixed but the composite is not the identity, the
/// first moved basis tensor is reported instead, with `x` its flat index.
pub fn symmetry_probe(h: &HomHopfAlgebra) -> Result<SymmetryVerdict> {
    let f = h.field();
    let n = h.dim();
    h.antipode_inv()?;
    let v = canonical_yd(h, 1)?;
    let w = canonical_yd(h, 2)?;
    let double = braiding(h, &w, &v)?.compose(&braiding(h, &v, &w)?)?;
    if double.is_identity() {
        return Ok(SymmetryVerdict {
            symmetric: true,
            witness: None,
        });
    }
    for x in 0..n {
        let input = LinMap::basis_vector(f, n, x).kron(h.unit())?;
        let image = double.compose(&input)?;
        if image != input {
            return Ok(SymmetryVerdict {
                symmetric: false,
                witness: Some(SymmetryWitness {
                    x,
                    input: input.column(0),
                    image: image.column(0),
                }),
            });
        }
    }
    let id = LinMap::identity(f, n * n);
    let c = double.differing_columns(&id)?[0];
    Ok(SymmetryVerdict {
        symmetric: false,
        witness: Some(SymmetryWitness {
            x: c,
            input: id.column(c),
            image: double.column(c),
        }),
    })
}
