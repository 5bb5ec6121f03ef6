use super::field::{Field, Scalar};
use super::linmap::LinMap;

/// The coordinate basis `{s_i}` of an `n`-dimensional space and the
/// coordinate covectors `{s^i}` of its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasisPair {
    field: Field,
    dim: usize,
}

impl DualBasisPair {
    pub fn new(field: Field, dim: usize) -> DualBasisPair {
        DualBasisPair { field, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `s_i` as a column vector.
    pub fn vector(&self, i: usize) -> LinMap {
        LinMap::basis_vector(self.field, self.dim, i)
    }

    /// `s^i` as a row covector.
    pub fn covector(&self, i: usize) -> LinMap {
        self.vector(i).transpose()
    }

    pub fn pairing(&self, i: usize, j: usize) -> Scalar {
        self.covector(i)
            .compose(&self.vector(j))
            .unwrap()
            .get(0, 0)
            .clone()
    }

    /// The evaluation map `H*⊗H → 𝕜`, `s^i ⊗ s_j ↦ δ_ij`.
    pub fn evaluation(&self) -> LinMap {
        let n = self.dim;
        let f = self.field;
        LinMap::from_fn(
            f,
            1,
            n * n,
            |_, c| {
                if c / n == c % n {
                    f.one()
                } else {
                    f.zero()
                }
            },
        )
    }

    /// The coevaluation `𝕜 → H⊗H*`, `1 ↦ Σ s_i ⊗ s^i`.
    pub fn coevaluation(&self) -> LinMap {
        self.evaluation().transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_is_kronecker_delta() {
        let f = Field::Rationals;
        let d = DualBasisPair::new(f, 3);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { f.one() } else { f.zero() };
                assert_eq!(d.pairing(i, j), want);
            }
        }
    }
}
