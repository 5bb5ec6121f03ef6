use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{DualBasisPair, LinMap, Net, Wire};
use crate::homcore::{build_dual, check_hom_algebra, HomAlgebra, HomHopfAlgebra};
use crate::report::AxiomReport;

/// Which Hom-smash product to build. `Four` is the full double
/// `H^{*op}⊗H^* # H⊗H^{op}`; the others are its one-sided pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SmashVariant {
    /// `H^{*op} # H`
    LL,
    /// `H^{*op} # H^{op}`
    RL,
    /// `H^* # H`
    LR,
    /// `H^* # H^{op}`
    RR,
    Four,
}

impl SmashVariant {
    pub const ALL: [SmashVariant; 5] = [
        SmashVariant::LL,
        SmashVariant::RL,
        SmashVariant::LR,
        SmashVariant::RR,
        SmashVariant::Four,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SmashVariant::LL => "LL",
            SmashVariant::RL => "RL",
            SmashVariant::LR => "LR",
            SmashVariant::RR => "RR",
            SmashVariant::Four => "FOUR",
        }
    }
}

impl fmt::Display for SmashVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SmashVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SmashVariant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown smash variant {s:?}")))
    }
}

/// The actions of `H` on `H*` that the smash products are built from, as
/// maps in the coordinate basis of `H` and the dual covector basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualActions {
    /// `(h⇀x)(a) = x(S(h)β^{-2}(a))`, a map `H⊗H* → H*`.
    pub harpoon: LinMap,
    /// `(x←h)(a) = x(β^{-2}(a)h)`, a map `H*⊗H → H*`.
    pub left_arrow: LinMap,
    /// `(h▶y)(a) = y(S^{-1}(h)β^{-2}(a))`, a map `H⊗H* → H*`.
    pub triangle: LinMap,
    /// `(y◀h)(a) = y(β^{-2}(a)h)`, a map `H*⊗H → H*`.
    pub triangle_left: LinMap,
}

/// `(u⊗x) ↦ (a ↦ x(p(u, a)))`.
fn left_dual_action(
    h: &HomHopfAlgebra,
    p: impl Fn(&mut Net, Wire, Wire) -> Result<Wire>,
) -> Result<LinMap> {
    let (f, n) = (h.field(), h.dim());
    let pair = DualBasisPair::new(f, n);
    Net::eval(f, &[n, n], |net, w| {
        let c = net.constant(&pair.coevaluation())?;
        let (a, a_star) = net.apply2(&LinMap::identity(f, n * n), &[c], n)?;
        let q = p(net, w[0], a)?;
        net.contract(&pair.evaluation(), &[w[1], q])?;
        Ok(vec![a_star])
    })
}

/// `(x⊗u) ↦ (a ↦ x(p(a, u)))`.
fn right_dual_action(
    h: &HomHopfAlgebra,
    p: impl Fn(&mut Net, Wire, Wire) -> Result<Wire>,
) -> Result<LinMap> {
    let (f, n) = (h.field(), h.dim());
    let pair = DualBasisPair::new(f, n);
    Net::eval(f, &[n, n], |net, w| {
        let c = net.constant(&pair.coevaluation())?;
        let (a, a_star) = net.apply2(&LinMap::identity(f, n * n), &[c], n)?;
        let q = p(net, a, w[1])?;
        net.contract(&pair.evaluation(), &[w[0], q])?;
        Ok(vec![a_star])
    })
}

impl DualActions {
    /// Fails with `SingularMap` when `S` is not invertible.
    pub fn new(h: &HomHopfAlgebra) -> Result<DualActions> {
        h.antipode_inv()?;
        let twisted_right = |net: &mut Net, a: Wire, u: Wire| {
            let a = h.b(net, a, -2)?;
            h.m(net, a, u)
        };
        Ok(DualActions {
            harpoon: left_dual_action(h, |net, u, a| {
                let s = h.s(net, u)?;
                let a = h.b(net, a, -2)?;
                h.m(net, s, a)
            })?,
            left_arrow: right_dual_action(h, twisted_right)?,
            triangle: left_dual_action(h, |net, u, a| {
                let s = h.s_inv(net, u)?;
                let a = h.b(net, a, -2)?;
                h.m(net, s, a)
            })?,
            triangle_left: right_dual_action(h, twisted_right)?,
        })
    }
}

/// A Hom-smash product on `H*⊗H` (or `H*⊗H*⊗H⊗H` for `Four`), with the
/// outcome of [`check_hom_algebra`] on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashAlgebra {
    pub algebra: HomAlgebra,
    pub variant: SmashVariant,
    pub actions: DualActions,
    pub report: AxiomReport,
}

impl SmashAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Builds the multiplication of `variant` from its displayed product
/// formula, with structure map `α⊗β` (`α⊗α⊗β⊗β` for `Four`) and unit `ε⊗1`
/// (`ε⊗ε⊗1⊗1`), then runs the Hom-algebra checker on it.
pub fn build_smash(h: &HomHopfAlgebra, variant: SmashVariant) -> Result<SmashAlgebra> {
    let f = h.field();
    let n = h.dim();
    let hd = build_dual(h)?;
    let acts = DualActions::new(h)?;
    let act = |net: &mut Net, map: &LinMap, a: Wire, b: Wire| net.apply1(map, &[a, b]);

    let (mult, unit, beta) = match variant {
        SmashVariant::LL => {
            // (x#h)(x'#h') = (β^{-2}(h_1) ⇀ α^{-1}(x'))•x # β^{-1}(h_2)h'
            let mult = Net::eval(f, &[n, n, n, n], |net, w| {
                let (h1, h2) = h.delta(net, w[1])?;
                let h1 = h.b(net, h1, -2)?;
                let x = hd.b(net, w[2], -1)?;
                let y = act(net, &acts.harpoon, h1, x)?;
                let p = hd.m(net, y, w[0])?;
                let h2 = h.b(net, h2, -1)?;
                Ok(vec![p, h.m(net, h2, w[3])?])
            })?;
            (mult, two_unit(&hd, h)?, hd.beta().kron(h.beta())?)
        }
        SmashVariant::RL => {
            // (x#h)(x'#h') = (α^{-1}(x') ← β^{-2}S^{-1}(h_1))•x # h'β^{-1}(h_2)
            let mult = Net::eval(f, &[n, n, n, n], |net, w| {
                let (h1, h2) = h.delta(net, w[1])?;
                let h1 = h.s_inv(net, h1)?;
                let h1 = h.b(net, h1, -2)?;
                let x = hd.b(net, w[2], -1)?;
                let y = act(net, &acts.left_arrow, x, h1)?;
                let p = hd.m(net, y, w[0])?;
                let h2 = h.b(net, h2, -1)?;
                Ok(vec![p, h.m(net, w[3], h2)?])
            })?;
            (mult, two_unit(&hd, h)?, hd.beta().kron(h.beta())?)
        }
        SmashVariant::LR => {
            // (y#h)(y'#h') = y•(β^{-2}(h_2) ▶ α^{-1}(y')) # β^{-1}(h_1)h'
            let mult = Net::eval(f, &[n, n, n, n], |net, w| {
                let (h1, h2) = h.delta(net, w[1])?;
                let h2 = h.b(net, h2, -2)?;
                let y = hd.b(net, w[2], -1)?;
                let y = act(net, &acts.triangle, h2, y)?;
                let p = hd.m(net, w[0], y)?;
                let h1 = h.b(net, h1, -1)?;
                Ok(vec![p, h.m(net, h1, w[3])?])
            })?;
            (mult, two_unit(&hd, h)?, hd.beta().kron(h.beta())?)
        }
        SmashVariant::RR => {
            // (y#h)(y'#h') = y•(α^{-1}(y') ◀ β^{-2}S(h_2)) # h'β^{-1}(h_1)
            let mult = Net::eval(f, &[n, n, n, n], |net, w| {
                let (h1, h2) = h.delta(net, w[1])?;
                let h2 = h.s(net, h2)?;
                let h2 = h.b(net, h2, -2)?;
                let y = hd.b(net, w[2], -1)?;
                let y = act(net, &acts.triangle_left, y, h2)?;
                let p = hd.m(net, w[0], y)?;
                let h1 = h.b(net, h1, -1)?;
                Ok(vec![p, h.m(net, w[3], h1)?])
            })?;
            (mult, two_unit(&hd, h)?, hd.beta().kron(h.beta())?)
        }
        SmashVariant::Four => {
            let mult = Net::eval(f, &[n; 8], |net, w| {
                let (x, y, hh, g) = (w[0], w[1], w[2], w[3]);
                let (x2, y2, h2, g2) = (w[4], w[5], w[6], w[7]);
                let (h1, h21, h22) = h.delta_right(net, hh)?;
                let (g1, g21, g22) = h.delta_right(net, g)?;

                // [(β^{-3}(h_1) ⇀ α^{-2}(x')) ← β^{-2}S^{-1}(g_1)] • x
                let h1 = h.b(net, h1, -3)?;
                let x2 = hd.b(net, x2, -2)?;
                let u = act(net, &acts.harpoon, h1, x2)?;
                let g1 = h.s_inv(net, g1)?;
                let g1 = h.b(net, g1, -2)?;
                let u = act(net, &acts.left_arrow, u, g1)?;
                let xo = hd.m(net, u, x)?;

                // y • [(β^{-4}(h_22) ▶ α^{-2}(y')) ◀ β^{-3}S(g_22)]
                let h22 = h.b(net, h22, -4)?;
                let y2 = hd.b(net, y2, -2)?;
                let v = act(net, &acts.triangle, h22, y2)?;
                let g22 = h.s(net, g22)?;
                let g22 = h.b(net, g22, -3)?;
                let v = act(net, &acts.triangle_left, v, g22)?;
                let yo = hd.m(net, y, v)?;

                // β^{-2}(h_21)h' ⊗ g'β^{-2}(g_21)
                let h21 = h.b(net, h21, -2)?;
                let ho = h.m(net, h21, h2)?;
                let g21 = h.b(net, g21, -2)?;
                let go = h.m(net, g2, g21)?;
                Ok(vec![xo, yo, ho, go])
            })?;
            let unit = LinMap::kron_all(f, &[hd.unit(), hd.unit(), h.unit(), h.unit()])?;
            let beta = LinMap::kron_all(f, &[hd.beta(), hd.beta(), h.beta(), h.beta()])?;
            (mult, unit, beta)
        }
    };
    let algebra = HomAlgebra::new(mult, unit, beta)?;
    let report = check_hom_algebra(&algebra)?;
    Ok(SmashAlgebra {
        algebra,
        variant,
        actions: acts,
        report,
    })
}

fn two_unit(hd: &HomHopfAlgebra, h: &HomHopfAlgebra) -> Result<LinMap> {
    hd.unit().kron(h.unit())
}
