//! Four-angle Hopf modules and their two monoidal products.
//!
//! Both products are computed as subspaces of the ambient `M⊗N`. Structure
//! maps are first written down on the whole ambient space, then restricted to
//! the subspace after checking that they preserve it.

mod assoc;
mod braid;
mod units;

pub use assoc::{assoc_cotensor, assoc_tensor};
pub use braid::{
    braiding_cotensor, braiding_tensor, check_tensor_hexagons, cotensor_braiding_ambient,
    cotensor_braiding_inverse_ambient, tensor_braiding_ambient, tensor_braiding_inverse_ambient,
    xi_ambient, xi_coherence, xi_comparison, BraidingCheck, XiCheck,
};
pub use units::{unit_isos_cotensor, unit_isos_tensor, UnitIsos};

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Net, Subspace};
use crate::homcore::HomHopfAlgebra;
use crate::repcat::{check_four_angle, ModuleBundle, StructureRole};
use crate::report::AxiomReport;

/// A bundle carrying all four structures with the four-angle laws verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourAngleModule {
    bundle: ModuleBundle,
}

impl FourAngleModule {
    /// Fails with `FourAngleCheckFailure` unless every four-angle law holds.
    pub fn new(h: &HomHopfAlgebra, mut bundle: ModuleBundle) -> Result<FourAngleModule> {
        if !bundle.has_all_four() {
            return Err(Error::FourAngleCheckFailure(
                "all four structure maps are required".into(),
            ));
        }
        let rep = bundle.claim(h, StructureRole::FourAngle)?;
        if !rep.passed {
            return Err(Error::FourAngleCheckFailure(rep.summary()));
        }
        Ok(FourAngleModule { bundle })
    }

    pub fn bundle(&self) -> &ModuleBundle {
        &self.bundle
    }

    pub fn into_bundle(self) -> ModuleBundle {
        self.bundle
    }
}

impl Deref for FourAngleModule {
    type Target = ModuleBundle;

    fn deref(&self) -> &ModuleBundle {
        &self.bundle
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Tensor,
    Cotensor,
}

/// A product subspace of `M⊗N` with its structures.
///
/// `ambient` holds the structure maps on all of `M⊗N`; `induced` holds their
/// restrictions in subspace coordinates. `report` is the four-angle check of
/// `induced`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredSubspace {
    pub product: Product,
    pub subspace: Subspace,
    pub ambient: ModuleBundle,
    pub induced: ModuleBundle,
    pub closure_certified: bool,
    pub report: AxiomReport,
}

impl StructuredSubspace {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn basis(&self) -> &LinMap {
        self.subspace.basis()
    }

    /// The induced module, provided its four-angle check passed.
    pub fn module(&self, h: &HomHopfAlgebra) -> Result<FourAngleModule> {
        FourAngleModule::new(h, self.induced.clone())
    }
}

fn check_over(h: &HomHopfAlgebra, ms: &[&ModuleBundle]) -> Result<()> {
    for m in ms {
        if m.over_dim() != h.dim() || m.field() != h.field() {
            return Err(Error::AlgebraMismatch(
                "module is not over the given algebra".into(),
            ));
        }
    }
    Ok(())
}

/// The ambient structures of `M⊗N` that restrict to `M⊗_H N`:
/// `h·m⊗ζ_N(n)`, `β^{-1}(m_{[-1]})β^{-1}(n_{[-1]})⊗m_{[0]}⊗n_{[0]}`,
/// `ζ_M(m)⊗n·h`, `m_{(0)}⊗n_{(0)}⊗β^{-1}(m_{(1)})β^{-1}(n_{(1)})`.
pub fn tensor_ambient(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
) -> Result<ModuleBundle> {
    check_over(h, &[m, n])?;
    let f = h.field();
    let (k, dm, dn) = (h.dim(), m.dim(), n.dim());
    let la = Net::eval(f, &[k, dm, dn], |net, w| {
        Ok(vec![m.act_l(net, w[0], w[1])?, n.z(net, w[2], 1)?])
    })?;
    let lc = Net::eval(f, &[dm, dn], |net, w| {
        let (a, m0) = m.coact_l(net, w[0])?;
        let (b, n0) = n.coact_l(net, w[1])?;
        let a = h.b(net, a, -1)?;
        let b = h.b(net, b, -1)?;
        Ok(vec![h.m(net, a, b)?, m0, n0])
    })?;
    let ra = Net::eval(f, &[dm, dn, k], |net, w| {
        Ok(vec![m.z(net, w[0], 1)?, n.act_r(net, w[1], w[2])?])
    })?;
    let rc = Net::eval(f, &[dm, dn], |net, w| {
        let (m0, a) = m.coact_r(net, w[0])?;
        let (n0, b) = n.coact_r(net, w[1])?;
        let a = h.b(net, a, -1)?;
        let b = h.b(net, b, -1)?;
        Ok(vec![m0, n0, h.m(net, a, b)?])
    })?;
    ModuleBundle::new(k, m.zeta().kron(n.zeta())?)?
        .with_left_action(la)?
        .with_left_coaction(lc)?
        .with_right_action(ra)?
        .with_right_coaction(rc)
}

/// The ambient structures of `M⊗N` that restrict to `M□_H N`:
/// `β^{-1}(h_1)·m⊗β^{-1}(h_2)·n`, `m_{[-1]}⊗m_{[0]}⊗ζ_N(n)`,
/// `m·β^{-1}(h_1)⊗n·β^{-1}(h_2)`, `ζ_M(m)⊗n_{(0)}⊗n_{(1)}`.
pub fn cotensor_ambient(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
) -> Result<ModuleBundle> {
    check_over(h, &[m, n])?;
    let f = h.field();
    let (k, dm, dn) = (h.dim(), m.dim(), n.dim());
    let la = Net::eval(f, &[k, dm, dn], |net, w| {
        let (h1, h2) = h.delta(net, w[0])?;
        let h1 = h.b(net, h1, -1)?;
        let h2 = h.b(net, h2, -1)?;
        Ok(vec![m.act_l(net, h1, w[1])?, n.act_l(net, h2, w[2])?])
    })?;
    let lc = Net::eval(f, &[dm, dn], |net, w| {
        let (a, m0) = m.coact_l(net, w[0])?;
        Ok(vec![a, m0, n.z(net, w[1], 1)?])
    })?;
    let ra = Net::eval(f, &[dm, dn, k], |net, w| {
        let (h1, h2) = h.delta(net, w[2])?;
        let h1 = h.b(net, h1, -1)?;
        let h2 = h.b(net, h2, -1)?;
        Ok(vec![m.act_r(net, w[0], h1)?, n.act_r(net, w[1], h2)?])
    })?;
    let rc = Net::eval(f, &[dm, dn], |net, w| {
        let (n0, b) = n.coact_r(net, w[1])?;
        Ok(vec![m.z(net, w[0], 1)?, n0, b])
    })?;
    ModuleBundle::new(k, m.zeta().kron(n.zeta())?)?
        .with_left_action(la)?
        .with_left_coaction(lc)?
        .with_right_action(ra)?
        .with_right_coaction(rc)
}

/// Restricts every structure of `amb` to `sub`, after checking that each
/// one maps the subspace into itself.
pub fn restrict(sub: &Subspace, amb: &ModuleBundle) -> Result<ModuleBundle> {
    let f = amb.field();
    let (d, n) = (amb.dim(), amb.over_dim());
    if sub.ambient_dim() != d {
        return Err(Error::DimensionMismatch {
            op: "restrict",
            expected: d,
            got: sub.ambient_dim(),
        });
    }
    let b = sub.basis();
    let r = sub.retraction();
    // A vector lies in the subspace exactly when the projector b∘r fixes it.
    let proj = b.compose(r)?;
    let id_n = LinMap::identity(f, n);
    let closed = |what: &str, p: &LinMap, image: &LinMap| -> Result<()> {
        if p.compose(image)? == *image {
            Ok(())
        } else {
            Err(Error::ClosureFailure(format!("{what} leaves the subspace")))
        }
    };

    let zeta = amb.zeta().compose(b)?;
    closed("structure map", &proj, &zeta)?;
    let mut out = ModuleBundle::new(n, r.compose(&zeta)?)?;

    if let Ok(a) = amb.left_action() {
        let img = a.compose(&id_n.kron(b)?)?;
        closed("left action", &proj, &img)?;
        out = out.with_left_action(r.compose(&img)?)?;
    }
    if let Ok(a) = amb.right_action() {
        let img = a.compose(&b.kron(&id_n)?)?;
        closed("right action", &proj, &img)?;
        out = out.with_right_action(r.compose(&img)?)?;
    }
    if let Ok(c) = amb.left_coaction() {
        let img = c.compose(b)?;
        closed("left coaction", &id_n.kron(&proj)?, &img)?;
        out = out.with_left_coaction(id_n.kron(r)?.compose(&img)?)?;
    }
    if let Ok(c) = amb.right_coaction() {
        let img = c.compose(b)?;
        closed("right coaction", &proj.kron(&id_n)?, &img)?;
        out = out.with_right_coaction(r.kron(&id_n)?.compose(&img)?)?;
    }
    Ok(out)
}

/// `M⊗_H N = {t | (m·h)⊗ζ_N(n) = ζ_M(m)⊗(h·n) for all h}`, computed as the
/// common kernel over basis elements `h`, with the induced structures.
pub fn hom_tensor(
    h: &HomHopfAlgebra,
    m: &FourAngleModule,
    n: &FourAngleModule,
) -> Result<StructuredSubspace> {
    let sub = tensor_subspace(h, m, n)?;
    let ambient = tensor_ambient(h, m, n)?;
    finish(h, Product::Tensor, sub, ambient)
}

/// `M□_H N = {t | ρ^r(m)⊗ζ_N(n) = ζ_M(m)⊗ρ^l(n)}` with the induced structures.
pub fn hom_cotensor(
    h: &HomHopfAlgebra,
    m: &FourAngleModule,
    n: &FourAngleModule,
) -> Result<StructuredSubspace> {
    let sub = cotensor_subspace(h, m, n)?;
    let ambient = cotensor_ambient(h, m, n)?;
    finish(h, Product::Cotensor, sub, ambient)
}

fn finish(
    h: &HomHopfAlgebra,
    product: Product,
    subspace: Subspace,
    ambient: ModuleBundle,
) -> Result<StructuredSubspace> {
    let induced = restrict(&subspace, &ambient)?;
    let report = check_four_angle(h, &induced)?;
    Ok(StructuredSubspace {
        product,
        subspace,
        ambient,
        induced,
        closure_certified: true,
        report,
    })
}

/// The balancing map `M⊗N⊗H → M⊗N, m⊗n⊗h ↦ (m·h)⊗ζ_N(n) − ζ_M(m)⊗(h·n)`.
fn balancing(h: &HomHopfAlgebra, m: &ModuleBundle, n: &ModuleBundle) -> Result<LinMap> {
    check_over(h, &[m, n])?;
    let f = h.field();
    let (k, dm, dn) = (h.dim(), m.dim(), n.dim());
    Net::eval(f, &[dm, dn, k], |net, w| {
        let x = m.act_r(net, w[0], w[2])?;
        Ok(vec![x, n.z(net, w[1], 1)?])
    })?
    .sub(&Net::eval(f, &[dm, dn, k], |net, w| {
        let y = n.act_l(net, w[2], w[1])?;
        Ok(vec![m.z(net, w[0], 1)?, y])
    })?)
}

/// The defining subspace of `M⊗_H N` inside `M⊗N`.
pub fn tensor_subspace(h: &HomHopfAlgebra, m: &ModuleBundle, n: &ModuleBundle) -> Result<Subspace> {
    let f = h.field();
    let (k, dm, dn) = (h.dim(), m.dim(), n.dim());
    let diff = balancing(h, m, n)?;
    // diff is dm·dn × dm·dn·k; stack the k slices h = e_0, ..., e_{k-1}.
    let blocks = (0..k)
        .map(|i| {
            let e = LinMap::basis_vector(f, k, i);
            diff.compose(&LinMap::identity(f, dm * dn).kron(&e)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinMap::vstack(f, dm * dn, &blocks)?.kernel())
}

/// The span of the balancing relations, whose quotient of `M⊗N` is the
/// coequalizer form of `M⊗_H N`.
pub fn tensor_relations(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
) -> Result<Subspace> {
    Ok(Subspace::span(&balancing(h, m, n)?))
}

/// The defining subspace of `M□_H N` inside `M⊗N`.
pub fn cotensor_subspace(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
) -> Result<Subspace> {
    check_over(h, &[m, n])?;
    let f = h.field();
    let (dm, dn) = (m.dim(), n.dim());
    let lhs = Net::eval(f, &[dm, dn], |net, w| {
        let (m0, a) = m.coact_r(net, w[0])?;
        Ok(vec![m0, a, n.z(net, w[1], 1)?])
    })?;
    let rhs = Net::eval(f, &[dm, dn], |net, w| {
        let (a, n0) = n.coact_l(net, w[1])?;
        Ok(vec![m.z(net, w[0], 1)?, a, n0])
    })?;
    Ok(lhs.sub(&rhs)?.kernel())
}
