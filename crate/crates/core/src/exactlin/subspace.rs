use crate::error::{Error, Result};

use super::field::Field;
use super::linmap::LinMap;

/// A subspace of a coordinate space, stored with a canonical basis.
///
/// The basis is in reduced column echelon form: column `j` has a 1 in its
/// pivot row `pivots[j]` and every other basis column vanishes there. The
/// retraction reads off those pivot coordinates, so `retraction ∘ basis = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: LinMap,
    retraction: LinMap,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the columns of `gens`.
    pub fn span(gens: &LinMap) -> Subspace {
        let f = gens.field();
        let n = gens.rows();
        let (r, pivots) = gens.transpose().rref();
        let k = pivots.len();
        let basis = LinMap::from_fn(f, n, k, |i, j| r.get(j, i).clone());
        let retraction = LinMap::from_fn(
            f,
            k,
            n,
            |j, i| {
                if pivots[j] == i {
                    f.one()
                } else {
                    f.zero()
                }
            },
        );
        Subspace {
            ambient_dim: n,
            basis,
            retraction,
            pivots,
        }
    }

    pub fn full(field: Field, n: usize) -> Subspace {
        Subspace::span(&LinMap::identity(field, n))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// The inclusion into the ambient space (`ambient_dim × k`).
    pub fn basis(&self) -> &LinMap {
        &self.basis
    }

    pub fn retraction(&self) -> &LinMap {
        &self.retraction
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Whether every column of `vectors` lies in the subspace.
    pub fn contains_all(&self, vectors: &LinMap) -> Result<bool> {
        let proj = self.basis.compose(&self.retraction.compose(vectors)?)?;
        Ok(proj == *vectors)
    }

    /// Subspace coordinates of `vectors`, failing if any column lies outside.
    pub fn coordinates(&self, vectors: &LinMap) -> Result<LinMap> {
        let coords = self.retraction.compose(vectors)?;
        if self.basis.compose(&coords)? != *vectors {
            return Err(Error::ClosureFailure(
                "vector lies outside the subspace".into(),
            ));
        }
        Ok(coords)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.contains_all(other.basis())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_is_canonical() {
        let f = Field::Rationals;
        let a = LinMap::from_i64(f, &[&[1, 2], &[1, 2], &[0, 1]]);
        let b = LinMap::from_i64(f, &[&[3, 1], &[3, 1], &[1, 0]]);
        assert_eq!(Subspace::span(&a), Subspace::span(&b));
        let s = Subspace::span(&a);
        assert!(s.retraction().compose(s.basis()).unwrap().is_identity());
    }

    #[test]
    fn coordinates_reject_outside_vectors() {
        let f = Field::gf7();
        let s = Subspace::span(&LinMap::from_i64(f, &[&[1], &[1]]));
        assert!(s.coordinates(&LinMap::from_i64(f, &[&[2], &[2]])).is_ok());
        assert!(matches!(
            s.coordinates(&LinMap::from_i64(f, &[&[1], &[0]])),
            Err(Error::ClosureFailure(_))
        ));
    }
}
