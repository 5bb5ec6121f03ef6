//! Hom-algebras, Hom-coalgebras and Hom-Hopf algebras as structure constants.

mod build;
mod checks;

pub use build::{build_cyclic, build_dual, opposite_variants, tensor_algebra, trivial};
pub use checks::{check_hom_algebra, check_hom_coalgebra, check_hom_hopf};

use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap, Net, Wire};

const MAX_POWER: i32 = 8;

/// Cached powers `f^k` for `|k| ≤ 8` of an invertible endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Powers {
    pos: Vec<LinMap>,
    neg: Vec<LinMap>,
}

impl Powers {
    pub fn new(f: &LinMap) -> Result<Powers> {
        let inv = f.invert()?;
        let n = f.rows();
        let mut pos = vec![LinMap::identity(f.field(), n)];
        let mut neg = vec![LinMap::identity(f.field(), n)];
        for k in 1..=MAX_POWER as usize {
            pos.push(f.compose(&pos[k - 1])?);
            neg.push(inv.compose(&neg[k - 1])?);
        }
        Ok(Powers { pos, neg })
    }

    pub fn get(&self, k: i32) -> Result<&LinMap> {
        if k.abs() > MAX_POWER {
            return Err(Error::InvalidArgument(format!(
                "power {k} out of cached range"
            )));
        }
        Ok(if k >= 0 {
            &self.pos[k as usize]
        } else {
            &self.neg[(-k) as usize]
        })
    }

    pub fn map(&self) -> &LinMap {
        &self.pos[1]
    }

    pub fn inverse(&self) -> &LinMap {
        &self.neg[1]
    }
}

fn expect_shape(what: &'static str, m: &LinMap, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::DimensionMismatch {
            op: what,
            expected: rows * cols,
            got: m.rows() * m.cols(),
        });
    }
    Ok(())
}

/// A Hom-associative algebra `(A, m, η, ζ_A)` with invertible `ζ_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    dim: usize,
    mult: LinMap,
    unit: LinMap,
    beta: Powers,
}

impl HomAlgebra {
    /// `mult` is `n × n²`, `unit` is `n × 1`, `beta` is `n × n`.
    pub fn new(mult: LinMap, unit: LinMap, beta: LinMap) -> Result<HomAlgebra> {
        let n = beta.rows();
        expect_shape("algebra beta", &beta, n, n)?;
        expect_shape("algebra mult", &mult, n, n * n)?;
        expect_shape("algebra unit", &unit, n, 1)?;
        for m in [&mult, &unit] {
            if m.field() != beta.field() {
                return Err(Error::FieldMismatch(beta.field(), m.field()));
            }
        }
        Ok(HomAlgebra {
            dim: n,
            mult,
            unit,
            beta: Powers::new(&beta)?,
        })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn beta(&self) -> &LinMap {
        self.beta.map()
    }

    pub fn beta_inv(&self) -> &LinMap {
        self.beta.inverse()
    }

    pub fn beta_pow(&self, k: i32) -> Result<&LinMap> {
        self.beta.get(k)
    }

    pub fn m(&self, net: &mut Net, a: Wire, b: Wire) -> Result<Wire> {
        net.apply1(&self.mult, &[a, b])
    }

    /// Applies `ζ_A^k`.
    pub fn b(&self, net: &mut Net, a: Wire, k: i32) -> Result<Wire> {
        net.apply1(self.beta.get(k)?, &[a])
    }

    pub fn one(&self, net: &mut Net) -> Result<Wire> {
        net.constant(&self.unit)
    }
}

/// A Hom-coassociative coalgebra `(C, Δ, ε, ζ_C)` with invertible `ζ_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    dim: usize,
    comult: LinMap,
    counit: LinMap,
    zeta: Powers,
}

impl HomCoalgebra {
    /// `comult` is `n² × n`, `counit` is `1 × n`, `zeta` is `n × n`.
    pub fn new(comult: LinMap, counit: LinMap, zeta: LinMap) -> Result<HomCoalgebra> {
        let n = zeta.rows();
        expect_shape("coalgebra zeta", &zeta, n, n)?;
        expect_shape("coalgebra comult", &comult, n * n, n)?;
        expect_shape("coalgebra counit", &counit, 1, n)?;
        for m in [&comult, &counit] {
            if m.field() != zeta.field() {
                return Err(Error::FieldMismatch(zeta.field(), m.field()));
            }
        }
        Ok(HomCoalgebra {
            dim: n,
            comult,
            counit,
            zeta: Powers::new(&zeta)?,
        })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn zeta(&self) -> &LinMap {
        self.zeta.map()
    }

    pub fn zeta_pow(&self, k: i32) -> Result<&LinMap> {
        self.zeta.get(k)
    }

    pub fn delta(&self, net: &mut Net, c: Wire) -> Result<(Wire, Wire)> {
        net.apply2(&self.comult, &[c], self.dim)
    }

    pub fn eps(&self, net: &mut Net, c: Wire) -> Result<()> {
        net.contract(&self.counit, &[c])
    }

    pub fn z(&self, net: &mut Net, c: Wire, k: i32) -> Result<Wire> {
        net.apply1(self.zeta.get(k)?, &[c])
    }
}

/// A Hom-Hopf algebra: algebra and coalgebra sharing the structure map `β`,
/// plus an antipode `S` (with `S^{-1}` cached when it exists).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfAlgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
    antipode: LinMap,
    antipode_inv: Option<LinMap>,
}

impl HomHopfAlgebra {
    pub fn new(
        algebra: HomAlgebra,
        coalgebra: HomCoalgebra,
        antipode: LinMap,
    ) -> Result<HomHopfAlgebra> {
        if algebra.beta() != coalgebra.zeta() {
            return Err(Error::AlgebraMismatch(
                "algebra and coalgebra structure maps differ".into(),
            ));
        }
        let n = algebra.dim();
        expect_shape("antipode", &antipode, n, n)?;
        if antipode.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), antipode.field()));
        }
        let antipode_inv = antipode.invert().ok();
        Ok(HomHopfAlgebra {
            algebra,
            coalgebra,
            antipode,
            antipode_inv,
        })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mult(&self) -> &LinMap {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinMap {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &LinMap {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &LinMap {
        self.coalgebra.counit()
    }

    pub fn beta(&self) -> &LinMap {
        self.algebra.beta()
    }

    pub fn beta_inv(&self) -> &LinMap {
        self.algebra.beta_inv()
    }

    pub fn beta_pow(&self, k: i32) -> Result<&LinMap> {
        self.algebra.beta_pow(k)
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Result<&LinMap> {
        self.antipode_inv
            .as_ref()
            .ok_or_else(|| Error::SingularMap("antipode is not invertible".into()))
    }

    pub fn m(&self, net: &mut Net, a: Wire, b: Wire) -> Result<Wire> {
        self.algebra.m(net, a, b)
    }

    pub fn b(&self, net: &mut Net, a: Wire, k: i32) -> Result<Wire> {
        self.algebra.b(net, a, k)
    }

    pub fn one(&self, net: &mut Net) -> Result<Wire> {
        self.algebra.one(net)
    }

    pub fn delta(&self, net: &mut Net, c: Wire) -> Result<(Wire, Wire)> {
        self.coalgebra.delta(net, c)
    }

    pub fn eps(&self, net: &mut Net, c: Wire) -> Result<()> {
        self.coalgebra.eps(net, c)
    }

    pub fn s(&self, net: &mut Net, a: Wire) -> Result<Wire> {
        net.apply1(&self.antipode, &[a])
    }

    pub fn s_inv(&self, net: &mut Net, a: Wire) -> Result<Wire> {
        net.apply1(self.antipode_inv()?, &[a])
    }

    /// `Δ` applied twice on the right leg: `h ↦ (h_1, h_21, h_22)`.
    pub fn delta_right(&self, net: &mut Net, c: Wire) -> Result<(Wire, Wire, Wire)> {
        let (c1, c2) = self.delta(net, c)?;
        let (c21, c22) = self.delta(net, c2)?;
        Ok((c1, c21, c22))
    }

    /// `Δ` applied twice on the left leg: `h ↦ (h_11, h_12, h_2)`.
    pub fn delta_left(&self, net: &mut Net, c: Wire) -> Result<(Wire, Wire, Wire)> {
        let (c1, c2) = self.delta(net, c)?;
        let (c11, c12) = self.delta(net, c1)?;
        Ok((c11, c12, c2))
    }
}
