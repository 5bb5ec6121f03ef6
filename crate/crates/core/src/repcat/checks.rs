use crate::error::Result;
use crate::exactlin::{LinMap, Net};
use crate::homcore::{HomAlgebra, HomCoalgebra, HomHopfAlgebra};
use crate::report::AxiomReport;

use super::{sides, HopfVariant, ModuleBundle, Side};

/// Module laws on one side: Hom-associativity, compatibility of the action
/// with the structure maps, and unitality `1·m = ζ_M(m)`.
pub fn check_module(a: &HomAlgebra, m: &ModuleBundle, side: Side) -> Result<AxiomReport> {
    let f = a.field();
    let (n, d) = (a.dim(), m.dim());
    let mut rep = AxiomReport::new();
    match side {
        Side::Left => {
            m.left_action()?;
            let lhs = Net::eval(f, &[n, n, d], |net, w| {
                let x = a.b(net, w[0], 1)?;
                let ym = m.act_l(net, w[1], w[2])?;
                Ok(vec![m.act_l(net, x, ym)?])
            })?;
            let rhs = Net::eval(f, &[n, n, d], |net, w| {
                let xy = a.m(net, w[0], w[1])?;
                let zm = m.z(net, w[2], 1)?;
                Ok(vec![m.act_l(net, xy, zm)?])
            })?;
            rep.compare("left module Hom-associativity", &[n, n, d], &lhs, &rhs)?;

            let lhs = Net::eval(f, &[n, d], |net, w| {
                let x = m.act_l(net, w[0], w[1])?;
                Ok(vec![m.z(net, x, 1)?])
            })?;
            let rhs = Net::eval(f, &[n, d], |net, w| {
                let x = a.b(net, w[0], 1)?;
                let y = m.z(net, w[1], 1)?;
                Ok(vec![m.act_l(net, x, y)?])
            })?;
            rep.compare(
                "left action commutes with structure maps",
                &[n, d],
                &lhs,
                &rhs,
            )?;

            let lhs = Net::eval(f, &[d], |net, w| {
                let one = a.one(net)?;
                Ok(vec![m.act_l(net, one, w[0])?])
            })?;
            rep.compare("left module unitality", &[d], &lhs, m.zeta())?;
        }
        Side::Right => {
            m.right_action()?;
            let lhs = Net::eval(f, &[d, n, n], |net, w| {
                let mx = m.act_r(net, w[0], w[1])?;
                let y = a.b(net, w[2], 1)?;
                Ok(vec![m.act_r(net, mx, y)?])
            })?;
            let rhs = Net::eval(f, &[d, n, n], |net, w| {
                let zm = m.z(net, w[0], 1)?;
                let xy = a.m(net, w[1], w[2])?;
                Ok(vec![m.act_r(net, zm, xy)?])
            })?;
            rep.compare("right module Hom-associativity", &[d, n, n], &lhs, &rhs)?;

            let lhs = Net::eval(f, &[d, n], |net, w| {
                let x = m.act_r(net, w[0], w[1])?;
                Ok(vec![m.z(net, x, 1)?])
            })?;
            let rhs = Net::eval(f, &[d, n], |net, w| {
                let x = m.z(net, w[0], 1)?;
                let y = a.b(net, w[1], 1)?;
                Ok(vec![m.act_r(net, x, y)?])
            })?;
            rep.compare(
                "right action commutes with structure maps",
                &[d, n],
                &lhs,
                &rhs,
            )?;

            let lhs = Net::eval(f, &[d], |net, w| {
                let one = a.one(net)?;
                Ok(vec![m.act_r(net, w[0], one)?])
            })?;
            rep.compare("right module unitality", &[d], &lhs, m.zeta())?;
        }
    }
    Ok(rep)
}

/// Comodule laws on one side: compatibility with the structure maps,
/// Hom-coassociativity and the counit law `ε(m_{[-1]})m_{[0]} = ζ_M(m)`.
pub fn check_comodule(c: &HomCoalgebra, m: &ModuleBundle, side: Side) -> Result<AxiomReport> {
    let f = c.field();
    let d = m.dim();
    let mut rep = AxiomReport::new();
    match side {
        Side::Left => {
            m.left_coaction()?;
            let lhs = Net::eval(f, &[d], |net, w| {
                let x = m.z(net, w[0], 1)?;
                let (h, x0) = m.coact_l(net, x)?;
                Ok(vec![h, x0])
            })?;
            let rhs = Net::eval(f, &[d], |net, w| {
                let (h, x0) = m.coact_l(net, w[0])?;
                Ok(vec![c.z(net, h, 1)?, m.z(net, x0, 1)?])
            })?;
            rep.compare(
                "left coaction commutes with structure maps",
                &[d],
                &lhs,
                &rhs,
            )?;

            let lhs = Net::eval(f, &[d], |net, w| {
                let (h, x0) = m.coact_l(net, w[0])?;
                let h = c.z(net, h, 1)?;
                let (g, x00) = m.coact_l(net, x0)?;
                Ok(vec![h, g, x00])
            })?;
            let rhs = Net::eval(f, &[d], |net, w| {
                let (h, x0) = m.coact_l(net, w[0])?;
                let (h1, h2) = c.delta(net, h)?;
                Ok(vec![h1, h2, m.z(net, x0, 1)?])
            })?;
            rep.compare("left comodule Hom-coassociativity", &[d], &lhs, &rhs)?;

            let lhs = Net::eval(f, &[d], |net, w| {
                let (h, x0) = m.coact_l(net, w[0])?;
                c.eps(net, h)?;
                Ok(vec![x0])
            })?;
            rep.compare("left comodule counit law", &[d], &lhs, m.zeta())?;
        }
        Side::Right => {
            m.right_coaction()?;
            let lhs = Net::eval(f, &[d], |net, w| {
                let x = m.z(net, w[0], 1)?;
                let (x0, h) = m.coact_r(net, x)?;
                Ok(vec![x0, h])
            })?;
            let rhs = Net::eval(f, &[d], |net, w| {
                let (x0, h) = m.coact_r(net, w[0])?;
                Ok(vec![m.z(net, x0, 1)?, c.z(net, h, 1)?])
            })?;
            rep.compare(
                "right coaction commutes with structure maps",
                &[d],
                &lhs,
                &rhs,
            )?;

            let lhs = Net::eval(f, &[d], |net, w| {
                let (x0, h) = m.coact_r(net, w[0])?;
                let h = c.z(net, h, 1)?;
                let (x00, g) = m.coact_r(net, x0)?;
                Ok(vec![x00, g, h])
            })?;
            let rhs = Net::eval(f, &[d], |net, w| {
                let (x0, h) = m.coact_r(net, w[0])?;
                let (h1, h2) = c.delta(net, h)?;
                Ok(vec![m.z(net, x0, 1)?, h1, h2])
            })?;
            rep.compare("right comodule Hom-coassociativity", &[d], &lhs, &rhs)?;

            let lhs = Net::eval(f, &[d], |net, w| {
                let (x0, h) = m.coact_r(net, w[0])?;
                c.eps(net, h)?;
                Ok(vec![x0])
            })?;
            rep.compare("right comodule counit law", &[d], &lhs, m.zeta())?;
        }
    }
    Ok(rep)
}

/// The two-sided law `ζ_A(a)·(m·b) = (a·m)·ζ_A(b)`. The one-sided module
/// laws are not re-run here.
pub fn check_bimodule(a: &HomAlgebra, m: &ModuleBundle) -> Result<AxiomReport> {
    let f = a.field();
    let (n, d) = (a.dim(), m.dim());
    m.left_action()?;
    m.right_action()?;
    let mut rep = AxiomReport::new();
    let lhs = Net::eval(f, &[n, d, n], |net, w| {
        let x = a.b(net, w[0], 1)?;
        let mb = m.act_r(net, w[1], w[2])?;
        Ok(vec![m.act_l(net, x, mb)?])
    })?;
    let rhs = Net::eval(f, &[n, d, n], |net, w| {
        let am = m.act_l(net, w[0], w[1])?;
        let y = a.b(net, w[2], 1)?;
        Ok(vec![m.act_r(net, am, y)?])
    })?;
    rep.compare("bimodule compatibility", &[n, d, n], &lhs, &rhs)?;
    Ok(rep)
}

/// The two-sided law
/// `ζ_C(m_{[-1]}) ⊗ m_{[0](0)} ⊗ m_{[0](1)} = m_{(0)[-1]} ⊗ m_{(0)[0]} ⊗ ζ_C(m_{(1)})`.
pub fn check_bicomodule(c: &HomCoalgebra, m: &ModuleBundle) -> Result<AxiomReport> {
    let f = c.field();
    let d = m.dim();
    m.left_coaction()?;
    m.right_coaction()?;
    let mut rep = AxiomReport::new();
    let lhs = Net::eval(f, &[d], |net, w| {
        let (h, x0) = m.coact_l(net, w[0])?;
        let h = c.z(net, h, 1)?;
        let (x00, g) = m.coact_r(net, x0)?;
        Ok(vec![h, x00, g])
    })?;
    let rhs = Net::eval(f, &[d], |net, w| {
        let (x0, g) = m.coact_r(net, w[0])?;
        let (h, x00) = m.coact_l(net, x0)?;
        Ok(vec![h, x00, c.z(net, g, 1)?])
    })?;
    rep.compare("bicomodule compatibility", &[d], &lhs, &rhs)?;
    Ok(rep)
}

/// The Hopf-module compatibility between the action and coaction named by
/// `variant`, for example `ρ^l(h·m) = h_1 m_{[-1]} ⊗ h_2·m_{[0]}` for LL.
pub fn check_hopf_compat(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    variant: HopfVariant,
) -> Result<AxiomReport> {
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    let (act, coact) = sides(variant);
    match act {
        Side::Left => m.left_action()?,
        Side::Right => m.right_action()?,
    };
    match coact {
        Side::Left => m.left_coaction()?,
        Side::Right => m.right_coaction()?,
    };
    let dims: [usize; 2] = match act {
        Side::Left => [n, d],
        Side::Right => [d, n],
    };
    let (lhs, rhs) = match variant {
        HopfVariant::LL => (
            Net::eval(f, &dims, |net, w| {
                let x = m.act_l(net, w[0], w[1])?;
                let (g, x0) = m.coact_l(net, x)?;
                Ok(vec![g, x0])
            })?,
            Net::eval(f, &dims, |net, w| {
                let (h1, h2) = h.delta(net, w[0])?;
                let (g, x0) = m.coact_l(net, w[1])?;
                Ok(vec![h.m(net, h1, g)?, m.act_l(net, h2, x0)?])
            })?,
        ),
        HopfVariant::LR => (
            Net::eval(f, &dims, |net, w| {
                let x = m.act_l(net, w[0], w[1])?;
                let (x0, g) = m.coact_r(net, x)?;
                Ok(vec![x0, g])
            })?,
            Net::eval(f, &dims, |net, w| {
                let (h1, h2) = h.delta(net, w[0])?;
                let (x0, g) = m.coact_r(net, w[1])?;
                Ok(vec![m.act_l(net, h1, x0)?, h.m(net, h2, g)?])
            })?,
        ),
        HopfVariant::RL => (
            Net::eval(f, &dims, |net, w| {
                let x = m.act_r(net, w[0], w[1])?;
                let (g, x0) = m.coact_l(net, x)?;
                Ok(vec![g, x0])
            })?,
            Net::eval(f, &dims, |net, w| {
                let (g, x0) = m.coact_l(net, w[0])?;
                let (h1, h2) = h.delta(net, w[1])?;
                Ok(vec![h.m(net, g, h1)?, m.act_r(net, x0, h2)?])
            })?,
        ),
        HopfVariant::RR => (
            Net::eval(f, &dims, |net, w| {
                let x = m.act_r(net, w[0], w[1])?;
                let (x0, g) = m.coact_r(net, x)?;
                Ok(vec![x0, g])
            })?,
            Net::eval(f, &dims, |net, w| {
                let (x0, g) = m.coact_r(net, w[0])?;
                let (h1, h2) = h.delta(net, w[1])?;
                Ok(vec![m.act_r(net, x0, h1)?, h.m(net, g, h2)?])
            })?,
        ),
    };
    let name = match variant {
        HopfVariant::LL => "left-left Hopf compatibility",
        HopfVariant::LR => "left-right Hopf compatibility",
        HopfVariant::RL => "right-left Hopf compatibility",
        HopfVariant::RR => "right-right Hopf compatibility",
    };
    let mut rep = AxiomReport::new();
    rep.compare(name, &dims, &lhs, &rhs)?;
    Ok(rep)
}

/// Both module sides, both comodule sides, the bimodule and bicomodule laws
/// and all four Hopf compatibilities.
pub fn check_four_angle(h: &HomHopfAlgebra, m: &ModuleBundle) -> Result<AxiomReport> {
    let mut rep = check_module(h.algebra(), m, Side::Left)?;
    rep.merge(check_module(h.algebra(), m, Side::Right)?);
    rep.merge(check_comodule(h.coalgebra(), m, Side::Left)?);
    rep.merge(check_comodule(h.coalgebra(), m, Side::Right)?);
    rep.merge(check_bimodule(h.algebra(), m)?);
    rep.merge(check_bicomodule(h.coalgebra(), m)?);
    for v in HopfVariant::ALL {
        rep.merge(check_hopf_compat(h, m, v)?);
    }
    Ok(rep)
}

/// Checks that `f: X → Y` commutes with the structure maps and with every
/// structure present on both bundles. Law names are prefixed with `name`.
pub fn check_morphism(
    name: &str,
    f: &LinMap,
    x: &ModuleBundle,
    y: &ModuleBundle,
) -> Result<AxiomReport> {
    let field = f.field();
    let (n, dx) = (x.over_dim(), x.dim());
    let id_n = LinMap::identity(field, n);
    let mut rep = AxiomReport::new();
    rep.compare(
        &format!("{name} commutes with structure maps"),
        &[dx],
        &f.compose(x.zeta())?,
        &y.zeta().compose(f)?,
    )?;
    if let (Ok(a), Ok(b)) = (x.left_action(), y.left_action()) {
        rep.compare(
            &format!("{name} is left linear"),
            &[n, dx],
            &f.compose(a)?,
            &b.compose(&id_n.kron(f)?)?,
        )?;
    }
    if let (Ok(a), Ok(b)) = (x.right_action(), y.right_action()) {
        rep.compare(
            &format!("{name} is right linear"),
            &[dx, n],
            &f.compose(a)?,
            &b.compose(&f.kron(&id_n)?)?,
        )?;
    }
    if let (Ok(a), Ok(b)) = (x.left_coaction(), y.left_coaction()) {
        rep.compare(
            &format!("{name} is left colinear"),
            &[dx],
            &id_n.kron(f)?.compose(a)?,
            &b.compose(f)?,
        )?;
    }
    if let (Ok(a), Ok(b)) = (x.right_coaction(), y.right_coaction()) {
        rep.compare(
            &format!("{name} is right colinear"),
            &[dx],
            &f.kron(&id_n)?.compose(a)?,
            &b.compose(f)?,
        )?;
    }
    Ok(rep)
}
