//! JSON file formats for algebras and modules.
//!
//! Every matrix is stored as the list of images of basis vectors, so
//! `beta[j]` is `β(e_j)`. Tensor bases are flattened row-major: the basis
//! vector `e_i⊗e_j` of `U⊗V` has index `i·dim V + j`.

use hha_core::exactlin::{Field, LinMap, Scalar};
use hha_core::homcore::{HomAlgebra, HomCoalgebra, HomHopfAlgebra};
use hha_core::repcat::ModuleBundle;
use hha_core::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const CONVENTION: &str = "row-major";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Gf,
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: FieldKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl FieldSpec {
    pub fn of(f: Field) -> FieldSpec {
        match f {
            Field::Rationals => FieldSpec {
                kind: FieldKind::Rational,
                p: None,
            },
            Field::PrimeField(p) => FieldSpec {
                kind: FieldKind::Gf,
                p: Some(p),
            },
        }
    }

    pub fn field(&self) -> Result<Field> {
        match (self.kind, self.p) {
            (FieldKind::Rational, None) => Ok(Field::Rationals),
            (FieldKind::Gf, Some(p)) => Field::prime(p),
            (FieldKind::Gf, None) => Err(Error::Parse("field kind gf needs p".into())),
            (FieldKind::Rational, Some(_)) => {
                Err(Error::Parse("field kind rational takes no p".into()))
            }
        }
    }
}

type Column = Vec<Value>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub beta: Vec<Column>,
    /// `mult[i][j]` is `e_i·e_j`.
    pub mult: Vec<Vec<Column>>,
    pub unit: Column,
    /// `comult[i][a][b]` is the coefficient of `e_a⊗e_b` in `Δ(e_i)`.
    pub comult: Vec<Vec<Vec<Value>>>,
    pub counit: Column,
    pub antipode: Vec<Column>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub convention: String,
    pub dim_m: usize,
    pub zeta: Vec<Column>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_action: Option<Vec<Column>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Column>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_coaction: Option<Vec<Column>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_coaction: Option<Vec<Column>>,
}

fn bad(what: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{what}: {msg}"))
}

pub fn scalar(f: Field, v: &Value, what: &str) -> Result<Scalar> {
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(f.from_i64(i))
            } else {
                f.parse(&num.to_string())
            }
        }
        Value::String(s) => f.parse(s),
        other => Err(bad(what, format!("expected a scalar, found {other}"))),
    }
    .map_err(|e| bad(what, e))
}

pub fn value(s: &Scalar) -> Value {
    serde_json::to_value(s).expect("scalars serialize")
}

fn vector(f: Field, col: &[Value], len: usize, what: &str) -> Result<Vec<Scalar>> {
    if col.len() != len {
        return Err(bad(
            what,
            format!("expected length {len}, found {}", col.len()),
        ));
    }
    col.iter().map(|v| scalar(f, v, what)).collect()
}

/// Reads a `rows × cols` matrix stored as `cols` columns of length `rows`.
pub fn matrix(f: Field, cols: &[Column], rows: usize, ncols: usize, what: &str) -> Result<LinMap> {
    if cols.len() != ncols {
        return Err(bad(
            what,
            format!("expected {ncols} columns, found {}", cols.len()),
        ));
    }
    let cols = cols
        .iter()
        .map(|c| vector(f, c, rows, what))
        .collect::<Result<Vec<_>>>()?;
    LinMap::from_columns(f, rows, &cols)
}

pub fn columns(m: &LinMap) -> Vec<Column> {
    m.columns()
        .iter()
        .map(|c| c.iter().map(value).collect())
        .collect()
}

impl AlgebraFile {
    pub fn from_algebra(h: &HomHopfAlgebra) -> AlgebraFile {
        let n = h.dim();
        let mult = columns(h.mult());
        let comult = columns(h.comult());
        AlgebraFile {
            field: FieldSpec::of(h.field()),
            dim: n,
            beta: columns(h.beta()),
            mult: mult.chunks(n.max(1)).map(|c| c.to_vec()).collect(),
            unit: columns(h.unit()).remove(0),
            comult: comult
                .into_iter()
                .map(|c| c.chunks(n.max(1)).map(|r| r.to_vec()).collect())
                .collect(),
            counit: columns(&h.counit().transpose()).remove(0),
            antipode: columns(h.antipode()),
        }
    }

    pub fn to_algebra(&self) -> Result<HomHopfAlgebra> {
        let f = self.field.field()?;
        let n = self.dim;
        let beta = matrix(f, &self.beta, n, n, "beta")?;
        if self.mult.len() != n {
            return Err(bad(
                "mult",
                format!("expected {n} rows, found {}", self.mult.len()),
            ));
        }
        let mult_cols: Vec<Column> = self.mult.iter().flatten().cloned().collect();
        if self.mult.iter().any(|r| r.len() != n) {
            return Err(bad("mult", format!("every row needs {n} entries")));
        }
        let mult = matrix(f, &mult_cols, n, n * n, "mult")?;
        let unit = matrix(f, std::slice::from_ref(&self.unit), n, 1, "unit")?;
        if self.comult.len() != n {
            return Err(bad(
                "comult",
                format!("expected {n} grids, found {}", self.comult.len()),
            ));
        }
        let mut comult_cols = Vec::with_capacity(n);
        for grid in &self.comult {
            if grid.len() != n {
                return Err(bad("comult", format!("every grid needs {n} rows")));
            }
            comult_cols.push(grid.iter().flatten().cloned().collect::<Column>());
        }
        let comult = matrix(f, &comult_cols, n * n, n, "comult")?;
        let counit = matrix(f, std::slice::from_ref(&self.counit), n, 1, "counit")?.transpose();
        let antipode = matrix(f, &self.antipode, n, n, "antipode")?;
        HomHopfAlgebra::new(
            HomAlgebra::new(mult, unit, beta.clone())?,
            HomCoalgebra::new(comult, counit, beta)?,
            antipode,
        )
    }
}

impl ModuleFile {
    pub fn from_bundle(m: &ModuleBundle) -> ModuleFile {
        ModuleFile {
            convention: CONVENTION.into(),
            dim_m: m.dim(),
            zeta: columns(m.zeta()),
            left_action: m.left_action().ok().map(columns),
            right_action: m.right_action().ok().map(columns),
            left_coaction: m.left_coaction().ok().map(columns),
            right_coaction: m.right_coaction().ok().map(columns),
        }
    }

    /// Builds the bundle over `h`, checking shapes against `dim h`.
    pub fn to_bundle(&self, h: &HomHopfAlgebra) -> Result<ModuleBundle> {
        if self.convention != CONVENTION {
            return Err(bad(
                "convention",
                format!("expected {CONVENTION:?}, found {:?}", self.convention),
            ));
        }
        let f = h.field();
        let (n, d) = (h.dim(), self.dim_m);
        let mut m = ModuleBundle::new(n, matrix(f, &self.zeta, d, d, "zeta")?)?;
        if let Some(a) = &self.left_action {
            m = m.with_left_action(matrix(f, a, d, n * d, "left_action")?)?;
        }
        if let Some(a) = &self.right_action {
            m = m.with_right_action(matrix(f, a, d, d * n, "right_action")?)?;
        }
        if let Some(c) = &self.left_coaction {
            m = m.with_left_coaction(matrix(f, c, n * d, d, "left_coaction")?)?;
        }
        if let Some(c) = &self.right_coaction {
            m = m.with_right_coaction(matrix(f, c, d * n, d, "right_coaction")?)?;
        }
        Ok(m)
    }
}
