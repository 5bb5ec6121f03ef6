use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Net, Wire};
use crate::homcore::{HomAlgebra, Powers};
use crate::report::AxiomReport;

/// A map `f: V⊗B → A⊗V` together with `ζ_V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingMap {
    pub f: LinMap,
    zeta_v: Powers,
    a_dim: usize,
    b_dim: usize,
}

impl CrossingMap {
    pub fn new(f: LinMap, zeta_v: &LinMap, a_dim: usize, b_dim: usize) -> Result<CrossingMap> {
        let dv = zeta_v.rows();
        if f.rows() != a_dim * dv || f.cols() != dv * b_dim {
            return Err(Error::DimensionMismatch {
                op: "crossing map",
                expected: a_dim * dv * dv * b_dim,
                got: f.rows() * f.cols(),
            });
        }
        Ok(CrossingMap {
            f,
            zeta_v: Powers::new(zeta_v)?,
            a_dim,
            b_dim,
        })
    }

    pub fn v_dim(&self) -> usize {
        self.zeta_v.map().rows()
    }

    pub fn zeta_v(&self) -> &LinMap {
        self.zeta_v.map()
    }

    fn apply(&self, net: &mut Net, v: Wire, b: Wire) -> Result<(Wire, Wire)> {
        net.apply2(&self.f, &[v, b], self.a_dim)
    }

    fn zv(&self, net: &mut Net, v: Wire, k: i32) -> Result<Wire> {
        net.apply1(self.zeta_v.get(k)?, &[v])
    }
}

fn act(net: &mut Net, mu: &LinMap, x: (Wire, Wire), b: Wire, da: usize) -> Result<(Wire, Wire)> {
    net.apply2(mu, &[x.0, x.1, b], da)
}

/// Bimodule laws for `A⊗V` with left action `m_A⊗ζ_V`, right action `mu`
/// over `B` and structure map `ζ_A⊗ζ_V`.
pub fn check_ab_bimodule(
    a: &HomAlgebra,
    b: &HomAlgebra,
    zeta_v: &LinMap,
    mu: &LinMap,
) -> Result<AxiomReport> {
    let f = a.field();
    let (da, db, dv) = (a.dim(), b.dim(), zeta_v.rows());
    let zv = Powers::new(zeta_v)?;
    let mut rep = AxiomReport::new();

    let lhs = Net::eval(f, &[da, dv, db, db], |net, w| {
        let x = act(net, mu, (w[0], w[1]), w[2], da)?;
        let y = b.b(net, w[3], 1)?;
        let (p, q) = act(net, mu, x, y, da)?;
        Ok(vec![p, q])
    })?;
    let rhs = Net::eval(f, &[da, dv, db, db], |net, w| {
        let x = a.b(net, w[0], 1)?;
        let v = net.apply1(zv.map(), &[w[1]])?;
        let bb = b.m(net, w[2], w[3])?;
        let (p, q) = act(net, mu, (x, v), bb, da)?;
        Ok(vec![p, q])
    })?;
    rep.compare(
        "right module Hom-associativity",
        &[da, dv, db, db],
        &lhs,
        &rhs,
    )?;

    let lhs = Net::eval(f, &[da, dv, db], |net, w| {
        let (p, q) = act(net, mu, (w[0], w[1]), w[2], da)?;
        Ok(vec![a.b(net, p, 1)?, net.apply1(zv.map(), &[q])?])
    })?;
    let rhs = Net::eval(f, &[da, dv, db], |net, w| {
        let x = a.b(net, w[0], 1)?;
        let v = net.apply1(zv.map(), &[w[1]])?;
        let y = b.b(net, w[2], 1)?;
        let (p, q) = act(net, mu, (x, v), y, da)?;
        Ok(vec![p, q])
    })?;
    rep.compare(
        "right action commutes with structure maps",
        &[da, dv, db],
        &lhs,
        &rhs,
    )?;

    let lhs = Net::eval(f, &[da, dv], |net, w| {
        let one = b.one(net)?;
        let (p, q) = act(net, mu, (w[0], w[1]), one, da)?;
        Ok(vec![p, q])
    })?;
    rep.compare(
        "right module unitality",
        &[da, dv],
        &lhs,
        &a.beta().kron(zeta_v)?,
    )?;

    // (a·x)·β(b) = β(a)·(x·b) with a·(a'⊗v) = aa'⊗ζ_V(v).
    let lhs = Net::eval(f, &[da, da, dv, db], |net, w| {
        let p = a.m(net, w[0], w[1])?;
        let q = net.apply1(zv.map(), &[w[2]])?;
        let y = b.b(net, w[3], 1)?;
        let (p, q) = act(net, mu, (p, q), y, da)?;
        Ok(vec![p, q])
    })?;
    let rhs = Net::eval(f, &[da, da, dv, db], |net, w| {
        let x = a.b(net, w[0], 1)?;
        let (p, q) = act(net, mu, (w[1], w[2]), w[3], da)?;
        let p = a.m(net, x, p)?;
        Ok(vec![p, net.apply1(zv.map(), &[q])?])
    })?;
    rep.compare("bimodule compatibility", &[da, da, dv, db], &lhs, &rhs)?;
    Ok(rep)
}

/// The three crossing conditions, named `(i)`, `(ii)`, `(iii)`.
pub fn check_crossing(a: &HomAlgebra, b: &HomAlgebra, c: &CrossingMap) -> Result<AxiomReport> {
    let f = a.field();
    let (db, dv) = (b.dim(), c.v_dim());
    let mut rep = AxiomReport::new();

    let lhs = Net::eval(f, &[dv, db, db], |net, w| {
        let (x, v) = c.apply(net, w[0], w[1])?;
        let v = c.zv(net, v, -1)?;
        let (y, v) = c.apply(net, v, w[2])?;
        let p = a.m(net, x, y)?;
        Ok(vec![p, c.zv(net, v, 1)?])
    })?;
    let rhs = Net::eval(f, &[dv, db, db], |net, w| {
        let v = c.zv(net, w[0], 1)?;
        let bb = b.m(net, w[1], w[2])?;
        let (p, q) = c.apply(net, v, bb)?;
        Ok(vec![p, q])
    })?;
    rep.compare("condition (i)", &[dv, db, db], &lhs, &rhs)?;

    let lhs = Net::eval(f, &[dv], |net, w| {
        let one = b.one(net)?;
        let (p, q) = c.apply(net, w[0], one)?;
        Ok(vec![p, q])
    })?;
    let rhs = Net::eval(f, &[dv], |net, w| {
        let one = a.one(net)?;
        Ok(vec![one, c.zv(net, w[0], 1)?])
    })?;
    rep.compare("condition (ii)", &[dv], &lhs, &rhs)?;

    let lhs = Net::eval(f, &[dv, db], |net, w| {
        let v = c.zv(net, w[0], -1)?;
        let y = b.b(net, w[1], -1)?;
        let (p, q) = c.apply(net, v, y)?;
        Ok(vec![p, q])
    })?;
    let rhs = Net::eval(f, &[dv, db], |net, w| {
        let (p, q) = c.apply(net, w[0], w[1])?;
        Ok(vec![a.b(net, p, -1)?, c.zv(net, q, -1)?])
    })?;
    rep.compare("condition (iii)", &[dv, db], &lhs, &rhs)?;
    Ok(rep)
}

/// `f = μ(η⊗V⊗B)`, after checking that `mu` makes `A⊗V` an `A`-`B`-bimodule.
/// The report holds the crossing conditions for the result.
pub fn crossing_from_action(
    a: &HomAlgebra,
    b: &HomAlgebra,
    zeta_v: &LinMap,
    mu: &LinMap,
) -> Result<(CrossingMap, AxiomReport)> {
    let bimodule = check_ab_bimodule(a, b, zeta_v, mu)?;
    if !bimodule.passed {
        return Err(Error::BimoduleCheckFailure(bimodule.summary()));
    }
    let (da, db, dv) = (a.dim(), b.dim(), zeta_v.rows());
    let f = Net::eval(a.field(), &[dv, db], |net, w| {
        let one = a.one(net)?;
        let (p, q) = act(net, mu, (one, w[0]), w[1], da)?;
        Ok(vec![p, q])
    })?;
    let c = CrossingMap::new(f, zeta_v, da, db)?;
    let rep = check_crossing(a, b, &c)?;
    Ok((c, rep))
}

/// `μ = (m_A⊗ζ_V)(A⊗f)(A⊗ζ_V^{-1}⊗ζ_B^{-1})`. Fails with
/// `CrossingCheckFailure` naming the first violated condition; the report
/// holds the bimodule laws of `μ`.
pub fn action_from_crossing(
    a: &HomAlgebra,
    b: &HomAlgebra,
    c: &CrossingMap,
) -> Result<(LinMap, AxiomReport)> {
    let cond = check_crossing(a, b, c)?;
    if let Some(v) = cond.violations.first() {
        let name = v.axiom.trim_start_matches("condition ").to_string();
        return Err(Error::CrossingCheckFailure(name));
    }
    let (da, db, dv) = (a.dim(), b.dim(), c.v_dim());
    let mu = Net::eval(a.field(), &[da, dv, db], |net, w| {
        let v = c.zv(net, w[1], -1)?;
        let y = b.b(net, w[2], -1)?;
        let (x, v) = c.apply(net, v, y)?;
        let p = a.m(net, w[0], x)?;
        Ok(vec![p, c.zv(net, v, 1)?])
    })?;
    let rep = check_ab_bimodule(a, b, c.zeta_v(), &mu)?;
    Ok((mu, rep))
}
