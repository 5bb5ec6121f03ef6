//! Heisenberg doubles as Hom-smash products, and the functors identifying
//! four-angle Hopf modules with modules over the full double.

mod smash;

pub use smash::{build_smash, DualActions, SmashAlgebra, SmashVariant};

use crate::error::{Error, Result};
use crate::exactlin::{DualBasisPair, LinMap, Net, Wire};
use crate::fourangle::FourAngleModule;
use crate::homcore::{build_dual, opposite_variants, tensor_algebra, HomAlgebra, HomHopfAlgebra};
use crate::repcat::{
    check_bicomodule, check_bimodule, check_comodule, check_module, check_morphism, ModuleBundle,
    Side,
};
use crate::report::AxiomReport;

/// `H⊗H^{op}` with componentwise product.
pub fn tensor_op_algebra(h: &HomHopfAlgebra) -> Result<HomAlgebra> {
    tensor_algebra(h.algebra(), opposite_variants(h)?.algebra())
}

/// `H^{*op}⊗H^*` with componentwise product.
pub fn dual_pair_algebra(h: &HomHopfAlgebra) -> Result<HomAlgebra> {
    let hd = build_dual(h)?;
    tensor_algebra(opposite_variants(&hd)?.algebra(), hd.algebra())
}

fn require(rep: AxiomReport, err: impl FnOnce(String) -> Error) -> Result<()> {
    if rep.passed {
        Ok(())
    } else {
        Err(err(rep.summary()))
    }
}

/// An `H`-bimodule as a left `H⊗H^{op}`-module,
/// `(h⊗g)·m = (β^{-1}(h)·ζ^{-1}(m))·g`.
pub fn bimodule_as_tensor_module(h: &HomHopfAlgebra, m: &ModuleBundle) -> Result<ModuleBundle> {
    let mut rep = check_module(h.algebra(), m, Side::Left)?;
    rep.merge(check_module(h.algebra(), m, Side::Right)?);
    rep.merge(check_bimodule(h.algebra(), m)?);
    require(rep, Error::BimoduleCheckFailure)?;

    let n = h.dim();
    let act = Net::eval(h.field(), &[n, n, m.dim()], |net, w| {
        let x = h.b(net, w[0], -1)?;
        let y = m.z(net, w[2], -1)?;
        let p = m.act_l(net, x, y)?;
        Ok(vec![m.act_r(net, p, w[1])?])
    })?;
    let out = ModuleBundle::new(n * n, m.zeta().clone())?.with_left_action(act)?;
    let rep = check_module(&tensor_op_algebra(h)?, &out, Side::Left)?;
    require(rep, |s| {
        Error::BimoduleCheckFailure(format!("tensor module laws: {s}"))
    })?;
    Ok(out)
}

/// The inverse of [`bimodule_as_tensor_module`]: `h·m = (h⊗1)·m` and
/// `m·g = (1⊗g)·m`.
pub fn tensor_module_as_bimodule(h: &HomHopfAlgebra, t: &ModuleBundle) -> Result<ModuleBundle> {
    let (f, n, d) = (h.field(), h.dim(), t.dim());
    let act = t.left_action()?;
    let left = Net::eval(f, &[n, d], |net, w| {
        let one = h.one(net)?;
        Ok(vec![net.apply1(act, &[w[0], one, w[1]])?])
    })?;
    let right = Net::eval(f, &[d, n], |net, w| {
        let one = h.one(net)?;
        Ok(vec![net.apply1(act, &[one, w[1], w[0]])?])
    })?;
    ModuleBundle::new(n, t.zeta().clone())?
        .with_left_action(left)?
        .with_right_action(right)
}

/// An `H`-bicomodule as a left `H^{*op}⊗H^*`-module,
/// `(x⊗y)·m = ⟨x, m_{[-1]}⟩⟨y, β^{-1}(m_{[0](1)})⟩ζ^{-1}(m_{[0](0)})`.
/// Fails with `BicomoduleCheckFailure` when a one-sided comodule law fails
/// and with `CoactionInterchangeFailure` when the two coactions do not
/// interchange.
pub fn bicomodule_as_dual_module(h: &HomHopfAlgebra, m: &ModuleBundle) -> Result<ModuleBundle> {
    let mut rep = check_comodule(h.coalgebra(), m, Side::Left)?;
    rep.merge(check_comodule(h.coalgebra(), m, Side::Right)?);
    require(rep, Error::BicomoduleCheckFailure)?;
    require(
        check_bicomodule(h.coalgebra(), m)?,
        Error::CoactionInterchangeFailure,
    )?;

    let (f, n) = (h.field(), h.dim());
    let pair = DualBasisPair::new(f, n);
    let act = Net::eval(f, &[n, n, m.dim()], |net, w| {
        let (a, m0) = m.coact_l(net, w[2])?;
        let (m00, b) = m.coact_r(net, m0)?;
        let b = h.b(net, b, -1)?;
        net.contract(&pair.evaluation(), &[w[0], a])?;
        net.contract(&pair.evaluation(), &[w[1], b])?;
        Ok(vec![m.z(net, m00, -1)?])
    })?;
    let out = ModuleBundle::new(n * n, m.zeta().clone())?.with_left_action(act)?;
    let rep = check_module(&dual_pair_algebra(h)?, &out, Side::Left)?;
    require(rep, |s| {
        Error::BicomoduleCheckFailure(format!("dual module laws: {s}"))
    })?;
    Ok(out)
}

/// `Σ s_i ⊗ s^i` on two fresh wires.
fn dual_basis(net: &mut Net, n: usize) -> Result<(Wire, Wire)> {
    let f = net.field();
    let c = net.constant(&DualBasisPair::new(f, n).coevaluation())?;
    net.apply2(&LinMap::identity(f, n * n), &[c], n)
}

/// The inverse of [`bicomodule_as_dual_module`] through the dual bases:
/// `ρ^l(m) = s_i ⊗ (s^i⊗ε)·m` and `ρ^r(m) = (ε⊗s^i)·m ⊗ s_i`.
pub fn dual_module_as_bicomodule(h: &HomHopfAlgebra, t: &ModuleBundle) -> Result<ModuleBundle> {
    let hd = build_dual(h)?;
    let (f, n, d) = (h.field(), h.dim(), t.dim());
    let act = t.left_action()?;
    let left = Net::eval(f, &[d], |net, w| {
        let (s, s_star) = dual_basis(net, n)?;
        let eps = hd.one(net)?;
        Ok(vec![s, net.apply1(act, &[s_star, eps, w[0]])?])
    })?;
    let right = Net::eval(f, &[d], |net, w| {
        let (s, s_star) = dual_basis(net, n)?;
        let eps = hd.one(net)?;
        Ok(vec![net.apply1(act, &[eps, s_star, w[0]])?, s])
    })?;
    ModuleBundle::new(n, t.zeta().clone())?
        .with_left_coaction(left)?
        .with_right_coaction(right)
}

/// A left module over the full double `H^{*op}⊗H^* # H⊗H^{op}`. The action
/// takes its algebra argument as the four wires `x, y, h, g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleModule {
    pub bundle: ModuleBundle,
    pub report: AxiomReport,
}

impl DoubleModule {
    pub fn dim(&self) -> usize {
        self.bundle.dim()
    }

    pub fn action(&self) -> Result<&LinMap> {
        self.bundle.left_action()
    }

    /// `(x⊗y # h⊗g)·m`
    fn act(&self, net: &mut Net, ins: [Wire; 5]) -> Result<Wire> {
        net.apply1(self.action()?, &ins)
    }
}

/// Checks that `double` is the full double of `h`.
fn full_double(h: &HomHopfAlgebra, double: &SmashAlgebra) -> Result<()> {
    let n = h.dim();
    if double.variant != SmashVariant::Four || double.dim() != n.pow(4) {
        return Err(Error::InvalidArgument(format!(
            "expected the FOUR double of a {n}-dimensional algebra, got {} of dim {}",
            double.variant,
            double.dim()
        )));
    }
    Ok(())
}

/// `F(M)`: the double acts by `(x⊗y # h⊗g)·m = (x⊗y)·[(β^{-1}(h)⊗β^{-1}(g))·ζ^{-1}(m)]`.
/// The report covers the exchange law between the two partial actions,
/// the factorization through `x⊗y#1⊗1` and `ε⊗ε#h⊗g`, and the module laws
/// over the double. Fails with `DoubleModuleCheckFailure` if any of them
/// fails.
pub fn functor_f(
    h: &HomHopfAlgebra,
    double: &SmashAlgebra,
    m: &FourAngleModule,
) -> Result<DoubleModule> {
    full_double(h, double)?;
    let (f, n, d) = (h.field(), h.dim(), m.dim());
    let hd = build_dual(h)?;
    let t = bimodule_as_tensor_module(h, m)?;
    let c = bicomodule_as_dual_module(h, m)?;
    let (ta, ca) = (t.left_action()?, c.left_action()?);

    let act = Net::eval(f, &[n, n, n, n, d], |net, w| {
        let x = h.b(net, w[2], -1)?;
        let y = h.b(net, w[3], -1)?;
        let z = m.z(net, w[4], -1)?;
        let p = net.apply1(ta, &[x, y, z])?;
        Ok(vec![net.apply1(ca, &[w[0], w[1], p])?])
    })?;
    let bundle = ModuleBundle::new(n.pow(4), m.zeta().clone())?.with_left_action(act)?;
    let dm = DoubleModule {
        bundle,
        report: AxiomReport::new(),
    };

    let mut rep = AxiomReport::new();
    let a = &double.actions;
    let lhs = Net::eval(f, &[n, n, n, n, d], |net, w| {
        let p = net.apply1(ca, &[w[2], w[3], w[4]])?;
        Ok(vec![net.apply1(ta, &[w[0], w[1], p])?])
    })?;
    let rhs = Net::eval(f, &[n, n, n, n, d], |net, w| {
        let (h1, h21, h22) = h.delta_right(net, w[0])?;
        let (g1, g21, g22) = h.delta_right(net, w[1])?;
        let h1 = h.b(net, h1, -3)?;
        let x = hd.b(net, w[2], -1)?;
        let u = net.apply1(&a.harpoon, &[h1, x])?;
        let g1 = h.s_inv(net, g1)?;
        let g1 = h.b(net, g1, -2)?;
        let u = net.apply1(&a.left_arrow, &[u, g1])?;
        let h22 = h.b(net, h22, -4)?;
        let y = hd.b(net, w[3], -1)?;
        let v = net.apply1(&a.triangle, &[h22, y])?;
        let g22 = h.s(net, g22)?;
        let g22 = h.b(net, g22, -3)?;
        let v = net.apply1(&a.triangle_left, &[v, g22])?;
        let h21 = h.b(net, h21, -3)?;
        let g21 = h.b(net, g21, -3)?;
        let p = net.apply1(ta, &[h21, g21, w[4]])?;
        Ok(vec![net.apply1(ca, &[u, v, p])?])
    })?;
    rep.compare("exchange law", &[n, n, n, n, d], &lhs, &rhs)?;

    let refactored = Net::eval(f, &[n, n, n, n, d], |net, w| {
        let x = h.b(net, w[2], -1)?;
        let y = h.b(net, w[3], -1)?;
        let z = m.z(net, w[4], -1)?;
        let (e1, e2) = (hd.one(net)?, hd.one(net)?);
        let p = dm.act(net, [e1, e2, x, y, z])?;
        let (o1, o2) = (h.one(net)?, h.one(net)?);
        Ok(vec![dm.act(net, [w[0], w[1], o1, o2, p])?])
    })?;
    rep.compare(
        "double action factors through its partial actions",
        &[n, n, n, n, d],
        dm.action()?,
        &refactored,
    )?;
    rep.merge(check_module(&double.algebra, &dm.bundle, Side::Left)?);
    require(rep.clone(), Error::DoubleModuleCheckFailure)?;
    Ok(DoubleModule { report: rep, ..dm })
}

/// `G(M)`: `h·m = (ε⊗ε#h⊗1)·m`, `m·h = (ε⊗ε#1⊗h)·m`,
/// `ρ^l(m) = s_i ⊗ (s^i⊗ε#1⊗1)·m`, `ρ^r(m) = (ε⊗s^i#1⊗1)·m ⊗ s_i`.
/// Fails with `DoubleModuleCheckFailure` when `m` is not a module over the
/// double or the extracted structures are not four-angle.
pub fn functor_g(
    h: &HomHopfAlgebra,
    double: &SmashAlgebra,
    m: &DoubleModule,
) -> Result<FourAngleModule> {
    full_double(h, double)?;
    require(
        check_module(&double.algebra, &m.bundle, Side::Left)?,
        Error::DoubleModuleCheckFailure,
    )?;
    let hd = build_dual(h)?;
    let (f, n, d) = (h.field(), h.dim(), m.dim());
    let left = Net::eval(f, &[n, d], |net, w| {
        let (e1, e2, one) = (hd.one(net)?, hd.one(net)?, h.one(net)?);
        Ok(vec![m.act(net, [e1, e2, w[0], one, w[1]])?])
    })?;
    let right = Net::eval(f, &[d, n], |net, w| {
        let (e1, e2, one) = (hd.one(net)?, hd.one(net)?, h.one(net)?);
        Ok(vec![m.act(net, [e1, e2, one, w[1], w[0]])?])
    })?;
    let co_left = Net::eval(f, &[d], |net, w| {
        let (s, s_star) = dual_basis(net, n)?;
        let (e, o1, o2) = (hd.one(net)?, h.one(net)?, h.one(net)?);
        Ok(vec![s, m.act(net, [s_star, e, o1, o2, w[0]])?])
    })?;
    let co_right = Net::eval(f, &[d], |net, w| {
        let (s, s_star) = dual_basis(net, n)?;
        let (e, o1, o2) = (hd.one(net)?, h.one(net)?, h.one(net)?);
        Ok(vec![m.act(net, [e, s_star, o1, o2, w[0]])?, s])
    })?;
    let bundle = ModuleBundle::new(n, m.bundle.zeta().clone())?
        .with_left_action(left)?
        .with_right_action(right)?
        .with_left_coaction(co_left)?
        .with_right_coaction(co_right)?;
    FourAngleModule::new(h, bundle).map_err(|e| match e {
        Error::FourAngleCheckFailure(s) => Error::DoubleModuleCheckFailure(s),
        other => other,
    })
}

/// For each witness: `G(F(M)) = M` and `F(G(F(M))) = F(M)` as exact matrix
/// equalities, and `F` leaves morphisms unchanged (tested on `id_M` and
/// `ζ_M`, which must be a morphism of `F(M)` exactly when it is one of `M`).
/// A witness that is not four-angle fails fast with `FourAngleCheckFailure`
/// naming its index.
pub fn check_double_equivalence(
    h: &HomHopfAlgebra,
    witnesses: &[ModuleBundle],
) -> Result<AxiomReport> {
    let mut rep = AxiomReport::new();
    let double = build_smash(h, SmashVariant::Four)?;
    if !double.report.passed {
        rep.merge_scoped("double", double.report.clone());
    }
    for (i, w) in witnesses.iter().enumerate() {
        let m = FourAngleModule::new(h, w.clone()).map_err(|e| match e {
            Error::FourAngleCheckFailure(s) => {
                Error::FourAngleCheckFailure(format!("witness {i}: {s}"))
            }
            other => other,
        })?;
        let scope = format!("witness {i}");
        let fm = match functor_f(h, &double, &m) {
            Ok(fm) => fm,
            Err(e) => {
                rep.fail(format!("{scope}: F: {e}"));
                continue;
            }
        };
        let gfm = match functor_g(h, &double, &fm) {
            Ok(g) => g,
            Err(e) => {
                rep.fail(format!("{scope}: G: {e}"));
                continue;
            }
        };
        let d = m.dim();
        let n = h.dim();
        let pairs: [(&str, &[usize], &LinMap, &LinMap); 5] = [
            ("structure map", &[d], gfm.zeta(), m.zeta()),
            ("left action", &[n, d], gfm.left_action()?, m.left_action()?),
            (
                "right action",
                &[d, n],
                gfm.right_action()?,
                m.right_action()?,
            ),
            (
                "left coaction",
                &[d],
                gfm.left_coaction()?,
                m.left_coaction()?,
            ),
            (
                "right coaction",
                &[d],
                gfm.right_coaction()?,
                m.right_coaction()?,
            ),
        ];
        for (name, dims, got, want) in pairs {
            rep.compare(&format!("{scope}: G(F(M)) {name}"), dims, got, want)?;
        }
        match functor_f(h, &double, &gfm) {
            Ok(fgfm) => {
                rep.compare(
                    &format!("{scope}: F(G(F(M))) action"),
                    &[n, n, n, n, d],
                    fgfm.action()?,
                    fm.action()?,
                )?;
            }
            Err(e) => rep.fail(format!("{scope}: F(G(F(M))): {e}")),
        }
        for (name, map) in [
            ("identity", LinMap::identity(h.field(), d)),
            ("ζ", m.zeta().clone()),
        ] {
            let before = check_morphism(name, &map, &m, &m)?.passed;
            let after = check_morphism(name, &map, &fm.bundle, &fm.bundle)?.passed;
            rep.require(
                format!("{scope}: F preserves whether {name} is a morphism"),
                before == after,
            );
        }
    }
    Ok(rep)
}
