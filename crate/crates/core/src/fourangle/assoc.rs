use crate::error::Result;
use crate::exactlin::{LinMap, Subspace};
use crate::homcore::HomHopfAlgebra;
use crate::repcat::ModuleBundle;
use crate::report::AxiomReport;

use super::{
    cotensor_ambient, cotensor_subspace, hom_cotensor, hom_tensor, restrict, tensor_ambient,
    tensor_subspace, FourAngleModule, StructuredSubspace,
};

type SubspaceFn = fn(&HomHopfAlgebra, &ModuleBundle, &ModuleBundle) -> Result<Subspace>;
type AmbientFn = fn(&HomHopfAlgebra, &ModuleBundle, &ModuleBundle) -> Result<ModuleBundle>;

/// `(M⊗_H N)⊗_H P` and `M⊗_H(N⊗_H P)` coincide inside `M⊗N⊗P`, and the
/// identity between them intertwines all four structures.
pub fn assoc_tensor(
    h: &HomHopfAlgebra,
    m: &FourAngleModule,
    n: &FourAngleModule,
    p: &FourAngleModule,
) -> Result<AxiomReport> {
    let mn = hom_tensor(h, m, n)?;
    let np = hom_tensor(h, n, p)?;
    compare_nested(h, m, n, p, &mn, &np, tensor_subspace, tensor_ambient)
}

/// The cotensor analogue of [`assoc_tensor`].
pub fn assoc_cotensor(
    h: &HomHopfAlgebra,
    m: &FourAngleModule,
    n: &FourAngleModule,
    p: &FourAngleModule,
) -> Result<AxiomReport> {
    let mn = hom_cotensor(h, m, n)?;
    let np = hom_cotensor(h, n, p)?;
    compare_nested(h, m, n, p, &mn, &np, cotensor_subspace, cotensor_ambient)
}

#[allow(clippy::too_many_arguments)]
fn compare_nested(
    h: &HomHopfAlgebra,
    m: &ModuleBundle,
    n: &ModuleBundle,
    p: &ModuleBundle,
    mn: &StructuredSubspace,
    np: &StructuredSubspace,
    subspace: SubspaceFn,
    ambient: AmbientFn,
) -> Result<AxiomReport> {
    let f = h.field();
    let mut rep = AxiomReport::new();
    let left = subspace(h, &mn.induced, p)?;
    let right = subspace(h, m, &np.induced)?;
    let left_basis = mn
        .basis()
        .kron(&LinMap::identity(f, p.dim()))?
        .compose(left.basis())?;
    let right_basis = LinMap::identity(f, m.dim())
        .kron(np.basis())?
        .compose(right.basis())?;
    let sl = Subspace::span(&left_basis);
    let sr = Subspace::span(&right_basis);
    let forward = sr.contains_subspace(&sl)?;
    let backward = sl.contains_subspace(&sr)?;
    rep.require("associator maps into the regrouped product", forward);
    rep.require(
        "associator inverse maps into the original product",
        backward,
    );
    if !(forward && backward) {
        return Ok(rep);
    }

    let amb_l = ambient(h, &ambient(h, m, n)?, p)?;
    let amb_r = ambient(h, m, &ambient(h, n, p)?)?;
    let il = restrict(&sl, &amb_l)?;
    let ir = restrict(&sl, &amb_r)?;
    let k = sl.dim();
    let nh = h.dim();
    rep.compare(
        "associator commutes with structure maps",
        &[k],
        il.zeta(),
        ir.zeta(),
    )?;
    rep.compare(
        "associator is left linear",
        &[nh, k],
        il.left_action()?,
        ir.left_action()?,
    )?;
    rep.compare(
        "associator is right linear",
        &[k, nh],
        il.right_action()?,
        ir.right_action()?,
    )?;
    rep.compare(
        "associator is left colinear",
        &[k],
        il.left_coaction()?,
        ir.left_coaction()?,
    )?;
    rep.compare(
        "associator is right colinear",
        &[k],
        il.right_coaction()?,
        ir.right_coaction()?,
    )?;
    Ok(rep)
}
