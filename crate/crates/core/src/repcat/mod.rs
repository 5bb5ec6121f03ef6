//! Modules and comodules over Hom-(co)algebras, and their compatibility laws.

mod build;
mod checks;

pub use build::{h_tensor_h, h_tensor_v, regular, trivial_module};
pub use checks::{
    check_bicomodule, check_bimodule, check_comodule, check_four_angle, check_hopf_compat,
    check_module, check_morphism,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap, Net, Wire};
use crate::homcore::{HomHopfAlgebra, Powers};
use crate::report::AxiomReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Which action/coaction pair a Hopf-module compatibility relates.
/// The first letter is the action side, the second the coaction side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HopfVariant {
    LL,
    LR,
    RL,
    RR,
}

impl HopfVariant {
    pub const ALL: [HopfVariant; 4] = [
        HopfVariant::LL,
        HopfVariant::LR,
        HopfVariant::RL,
        HopfVariant::RR,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StructureRole {
    LeftModule,
    RightModule,
    LeftComodule,
    RightComodule,
    Bimodule,
    Bicomodule,
    HopfLL,
    HopfLR,
    HopfRL,
    HopfRR,
    TwoSided,
    FourAngle,
    YetterDrinfeld,
}

/// A space `M` with invertible `ζ_M` and any subset of the four structure maps
/// over an algebra of dimension `over_dim`.
///
/// Shapes: left action `d × n·d` (input `h⊗m`), right action `d × d·n`,
/// left coaction `n·d × d`, right coaction `d·n × d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBundle {
    over_dim: usize,
    dim: usize,
    zeta: Powers,
    left_action: Option<LinMap>,
    right_action: Option<LinMap>,
    left_coaction: Option<LinMap>,
    right_coaction: Option<LinMap>,
    roles: Vec<StructureRole>,
}

fn shape(op: &'static str, m: &LinMap, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::DimensionMismatch {
            op,
            expected: rows * cols,
            got: m.rows() * m.cols(),
        });
    }
    Ok(())
}

impl ModuleBundle {
    pub fn new(over_dim: usize, zeta: LinMap) -> Result<ModuleBundle> {
        let d = zeta.rows();
        shape("module zeta", &zeta, d, d)?;
        Ok(ModuleBundle {
            over_dim,
            dim: d,
            zeta: Powers::new(&zeta)?,
            left_action: None,
            right_action: None,
            left_coaction: None,
            right_coaction: None,
            roles: Vec::new(),
        })
    }

    fn same_field(&self, m: &LinMap) -> Result<()> {
        if m.field() != self.field() {
            return Err(Error::FieldMismatch(self.field(), m.field()));
        }
        Ok(())
    }

    pub fn with_left_action(mut self, a: LinMap) -> Result<Self> {
        shape("left action", &a, self.dim, self.over_dim * self.dim)?;
        self.same_field(&a)?;
        self.left_action = Some(a);
        self.roles.clear();
        Ok(self)
    }

    pub fn with_right_action(mut self, a: LinMap) -> Result<Self> {
        shape("right action", &a, self.dim, self.dim * self.over_dim)?;
        self.same_field(&a)?;
        self.right_action = Some(a);
        self.roles.clear();
        Ok(self)
    }

    pub fn with_left_coaction(mut self, c: LinMap) -> Result<Self> {
        shape("left coaction", &c, self.over_dim * self.dim, self.dim)?;
        self.same_field(&c)?;
        self.left_coaction = Some(c);
        self.roles.clear();
        Ok(self)
    }

    pub fn with_right_coaction(mut self, c: LinMap) -> Result<Self> {
        shape("right coaction", &c, self.dim * self.over_dim, self.dim)?;
        self.same_field(&c)?;
        self.right_coaction = Some(c);
        self.roles.clear();
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.zeta.map().field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn over_dim(&self) -> usize {
        self.over_dim
    }

    pub fn zeta(&self) -> &LinMap {
        self.zeta.map()
    }

    pub fn zeta_inv(&self) -> &LinMap {
        self.zeta.inverse()
    }

    pub fn zeta_pow(&self, k: i32) -> Result<&LinMap> {
        self.zeta.get(k)
    }

    pub fn left_action(&self) -> Result<&LinMap> {
        self.left_action
            .as_ref()
            .ok_or(Error::MissingStructure("left action"))
    }

    pub fn right_action(&self) -> Result<&LinMap> {
        self.right_action
            .as_ref()
            .ok_or(Error::MissingStructure("right action"))
    }

    pub fn left_coaction(&self) -> Result<&LinMap> {
        self.left_coaction
            .as_ref()
            .ok_or(Error::MissingStructure("left coaction"))
    }

    pub fn right_coaction(&self) -> Result<&LinMap> {
        self.right_coaction
            .as_ref()
            .ok_or(Error::MissingStructure("right coaction"))
    }

    pub fn has_all_four(&self) -> bool {
        self.left_action.is_some()
            && self.right_action.is_some()
            && self.left_coaction.is_some()
            && self.right_coaction.is_some()
    }

    pub fn roles(&self) -> &[StructureRole] {
        &self.roles
    }

    pub fn has_role(&self, role: StructureRole) -> bool {
        self.roles.contains(&role)
    }

    /// Runs the checker for `role` and records the claim if it passes.
    pub fn claim(&mut self, h: &HomHopfAlgebra, role: StructureRole) -> Result<AxiomReport> {
        use StructureRole::*;
        let rep = match role {
            LeftModule => check_module(h.algebra(), self, Side::Left)?,
            RightModule => check_module(h.algebra(), self, Side::Right)?,
            LeftComodule => check_comodule(h.coalgebra(), self, Side::Left)?,
            RightComodule => check_comodule(h.coalgebra(), self, Side::Right)?,
            Bimodule => {
                let mut r = check_module(h.algebra(), self, Side::Left)?;
                r.merge(check_module(h.algebra(), self, Side::Right)?);
                r.merge(check_bimodule(h.algebra(), self)?);
                r
            }
            Bicomodule => {
                let mut r = check_comodule(h.coalgebra(), self, Side::Left)?;
                r.merge(check_comodule(h.coalgebra(), self, Side::Right)?);
                r.merge(check_bicomodule(h.coalgebra(), self)?);
                r
            }
            HopfLL | HopfLR | HopfRL | HopfRR => {
                let v = match role {
                    HopfLL => HopfVariant::LL,
                    HopfLR => HopfVariant::LR,
                    HopfRL => HopfVariant::RL,
                    _ => HopfVariant::RR,
                };
                let (a, c) = sides(v);
                let mut r = check_module(h.algebra(), self, a)?;
                r.merge(check_comodule(h.coalgebra(), self, c)?);
                r.merge(check_hopf_compat(h, self, v)?);
                r
            }
            TwoSided => {
                let mut r = check_module(h.algebra(), self, Side::Left)?;
                r.merge(check_module(h.algebra(), self, Side::Right)?);
                r.merge(check_bimodule(h.algebra(), self)?);
                r.merge(check_comodule(h.coalgebra(), self, Side::Left)?);
                r.merge(check_hopf_compat(h, self, HopfVariant::LL)?);
                r.merge(check_hopf_compat(h, self, HopfVariant::RL)?);
                r
            }
            FourAngle => check_four_angle(h, self)?,
            YetterDrinfeld => crate::ydmod::check_yd(h, self)?,
        };
        if rep.passed && !self.roles.contains(&role) {
            self.roles.push(role);
        }
        Ok(rep)
    }

    /// `h·m`
    pub fn act_l(&self, net: &mut Net, h: Wire, m: Wire) -> Result<Wire> {
        Ok(net.apply(self.left_action()?, &[h, m], &[self.dim])?[0])
    }

    /// `m·h`
    pub fn act_r(&self, net: &mut Net, m: Wire, h: Wire) -> Result<Wire> {
        Ok(net.apply(self.right_action()?, &[m, h], &[self.dim])?[0])
    }

    /// `m ↦ (m_{[-1]}, m_{[0]})`
    pub fn coact_l(&self, net: &mut Net, m: Wire) -> Result<(Wire, Wire)> {
        let w = net.apply(self.left_coaction()?, &[m], &[self.over_dim, self.dim])?;
        Ok((w[0], w[1]))
    }

    /// `m ↦ (m_{(0)}, m_{(1)})`
    pub fn coact_r(&self, net: &mut Net, m: Wire) -> Result<(Wire, Wire)> {
        let w = net.apply(self.right_coaction()?, &[m], &[self.dim, self.over_dim])?;
        Ok((w[0], w[1]))
    }

    /// Applies `ζ_M^k`.
    pub fn z(&self, net: &mut Net, m: Wire, k: i32) -> Result<Wire> {
        Ok(net.apply(self.zeta.get(k)?, &[m], &[self.dim])?[0])
    }
}

/// The (action, coaction) sides named by a variant.
pub fn sides(v: HopfVariant) -> (Side, Side) {
    match v {
        HopfVariant::LL => (Side::Left, Side::Left),
        HopfVariant::LR => (Side::Left, Side::Right),
        HopfVariant::RL => (Side::Right, Side::Left),
        HopfVariant::RR => (Side::Right, Side::Right),
    }
}
