use crate::error::Result;
use crate::exactlin::Net;
use crate::report::AxiomReport;

use super::{HomAlgebra, HomCoalgebra, HomHopfAlgebra};

/// Checks Hom-associativity, multiplicativity of `ζ_A`, `ζ_A(1) = 1` and
/// Hom-unitality on all basis tuples.
pub fn check_hom_algebra(a: &HomAlgebra) -> Result<AxiomReport> {
    let f = a.field();
    let n = a.dim();
    let mut rep = AxiomReport::new();

    let lhs = Net::eval(f, &[n, n], |net, w| {
        let p = a.m(net, w[0], w[1])?;
        Ok(vec![a.b(net, p, 1)?])
    })?;
    let rhs = Net::eval(f, &[n, n], |net, w| {
        let x = a.b(net, w[0], 1)?;
        let y = a.b(net, w[1], 1)?;
        Ok(vec![a.m(net, x, y)?])
    })?;
    rep.compare("structure map multiplicative", &[n, n], &lhs, &rhs)?;

    let lhs = Net::eval(f, &[n, n, n], |net, w| {
        let x = a.b(net, w[0], 1)?;
        let yz = a.m(net, w[1], w[2])?;
        Ok(vec![a.m(net, x, yz)?])
    })?;
    let rhs = Net::eval(f, &[n, n, n], |net, w| {
        let xy = a.m(net, w[0], w[1])?;
        let z = a.b(net, w[2], 1)?;
        Ok(vec![a.m(net, xy, z)?])
    })?;
    rep.compare("Hom-associativity", &[n, n, n], &lhs, &rhs)?;

    let lhs = a.beta().compose(a.unit())?;
    rep.compare("structure map fixes unit", &[], &lhs, a.unit())?;

    let lhs = Net::eval(f, &[n], |net, w| {
        let one = a.one(net)?;
        Ok(vec![a.m(net, one, w[0])?])
    })?;
    rep.compare("left Hom-unitality", &[n], &lhs, a.beta())?;
    let lhs = Net::eval(f, &[n], |net, w| {
        let one = a.one(net)?;
        Ok(vec![a.m(net, w[0], one)?])
    })?;
    rep.compare("right Hom-unitality", &[n], &lhs, a.beta())?;
    Ok(rep)
}

/// Checks Hom-coassociativity, the counit laws and compatibility of `Δ`, `ε`
/// with `ζ_C` on all basis elements.
pub fn check_hom_coalgebra(c: &HomCoalgebra) -> Result<AxiomReport> {
    let f = c.field();
    let n = c.dim();
    let mut rep = AxiomReport::new();

    let lhs = Net::eval(f, &[n], |net, w| {
        let z = c.z(net, w[0], 1)?;
        let (a, b) = c.delta(net, z)?;
        Ok(vec![a, b])
    })?;
    let rhs = Net::eval(f, &[n], |net, w| {
        let (a, b) = c.delta(net, w[0])?;
        Ok(vec![c.z(net, a, 1)?, c.z(net, b, 1)?])
    })?;
    rep.compare(
        "comultiplication commutes with structure map",
        &[n],
        &lhs,
        &rhs,
    )?;

    let lhs = Net::eval(f, &[n], |net, w| {
        let (a, b) = c.delta(net, w[0])?;
        let a = c.z(net, a, 1)?;
        let (b1, b2) = c.delta(net, b)?;
        Ok(vec![a, b1, b2])
    })?;
    let rhs = Net::eval(f, &[n], |net, w| {
        let (a, b) = c.delta(net, w[0])?;
        let (a1, a2) = c.delta(net, a)?;
        Ok(vec![a1, a2, c.z(net, b, 1)?])
    })?;
    rep.compare("Hom-coassociativity", &[n], &lhs, &rhs)?;

    let lhs = c.counit().compose(c.zeta())?;
    rep.compare(
        "counit invariant under structure map",
        &[n],
        &lhs,
        c.counit(),
    )?;

    let lhs = Net::eval(f, &[n], |net, w| {
        let (a, b) = c.delta(net, w[0])?;
        c.eps(net, a)?;
        Ok(vec![b])
    })?;
    rep.compare("left counit law", &[n], &lhs, c.zeta())?;
    let lhs = Net::eval(f, &[n], |net, w| {
        let (a, b) = c.delta(net, w[0])?;
        c.eps(net, b)?;
        Ok(vec![a])
    })?;
    rep.compare("right counit law", &[n], &lhs, c.zeta())?;
    Ok(rep)
}

/// Full Hom-Hopf check: algebra and coalgebra laws, bialgebra
/// compatibilities, antipode laws, `S∘β = β∘S`, and the derived antipode
/// identities as independent cross-checks.
pub fn check_hom_hopf(h: &HomHopfAlgebra) -> Result<AxiomReport> {
    let f = h.field();
    let n = h.dim();
    let mut rep = check_hom_algebra(h.algebra())?;
    rep.merge(check_hom_coalgebra(h.coalgebra())?);

    let lhs = Net::eval(f, &[n, n], |net, w| {
        let p = h.m(net, w[0], w[1])?;
        let (a, b) = h.delta(net, p)?;
        Ok(vec![a, b])
    })?;
    let rhs = Net::eval(f, &[n, n], |net, w| {
        let (x1, x2) = h.delta(net, w[0])?;
        let (y1, y2) = h.delta(net, w[1])?;
        Ok(vec![h.m(net, x1, y1)?, h.m(net, x2, y2)?])
    })?;
    rep.compare("comultiplication multiplicative", &[n, n], &lhs, &rhs)?;

    let lhs = h.comult().compose(h.unit())?;
    let rhs = h.unit().kron(h.unit())?;
    rep.compare("comultiplication of unit", &[], &lhs, &rhs)?;

    let lhs = h.counit().compose(h.mult())?;
    let rhs = h.counit().kron(h.counit())?;
    rep.compare("counit multiplicative", &[n, n], &lhs, &rhs)?;

    let lhs = h.counit().compose(h.unit())?;
    rep.compare(
        "counit of unit",
        &[],
        &lhs,
        &crate::exactlin::LinMap::identity(f, 1),
    )?;

    let eps_one = Net::eval(f, &[n], |net, w| {
        h.eps(net, w[0])?;
        Ok(vec![h.one(net)?])
    })?;
    let lhs = Net::eval(f, &[n], |net, w| {
        let (a, b) = h.delta(net, w[0])?;
        let sa = h.s(net, a)?;
        Ok(vec![h.m(net, sa, b)?])
    })?;
    rep.compare("left antipode law", &[n], &lhs, &eps_one)?;
    let lhs = Net::eval(f, &[n], |net, w| {
        let (a, b) = h.delta(net, w[0])?;
        let sb = h.s(net, b)?;
        Ok(vec![h.m(net, a, sb)?])
    })?;
    rep.compare("right antipode law", &[n], &lhs, &eps_one)?;

    let lhs = h.antipode().compose(h.beta())?;
    let rhs = h.beta().compose(h.antipode())?;
    rep.compare("antipode commutes with structure map", &[n], &lhs, &rhs)?;

    let lhs = h.antipode().compose(h.mult())?;
    let rhs = Net::eval(f, &[n, n], |net, w| {
        let sx = h.s(net, w[0])?;
        let sy = h.s(net, w[1])?;
        Ok(vec![h.m(net, sy, sx)?])
    })?;
    rep.compare("antipode anti-multiplicative", &[n, n], &lhs, &rhs)?;

    let lhs = h.antipode().compose(h.unit())?;
    rep.compare("antipode fixes unit", &[], &lhs, h.unit())?;

    let lhs = h.comult().compose(h.antipode())?;
    let rhs = Net::eval(f, &[n], |net, w| {
        let (a, b) = h.delta(net, w[0])?;
        Ok(vec![h.s(net, b)?, h.s(net, a)?])
    })?;
    rep.compare("antipode anti-comultiplicative", &[n], &lhs, &rhs)?;

    let lhs = h.counit().compose(h.antipode())?;
    rep.compare("counit invariant under antipode", &[n], &lhs, h.counit())?;
    Ok(rep)
}
