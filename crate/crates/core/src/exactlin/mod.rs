//! Exact scalars and the linear-algebra kernel.

mod dual;
mod field;
mod linmap;
mod net;
mod subspace;
mod tensor;

pub use dual::DualBasisPair;
pub use field::{Field, Scalar};
pub use linmap::LinMap;
pub use net::{Net, Wire};
pub use subspace::Subspace;
pub use tensor::{permute_factors, swap, TensorIndex};

use crate::error::Result;

pub fn kron(a: &LinMap, b: &LinMap) -> Result<LinMap> {
    a.kron(b)
}

pub fn kernel(a: &LinMap) -> Subspace {
    a.kernel()
}

pub fn invert(a: &LinMap) -> Result<LinMap> {
    a.invert()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn kron_identities() {
        let f = Field::gf7();
        let id6 = kron(&LinMap::identity(f, 2), &LinMap::identity(f, 3)).unwrap();
        assert!(id6.is_identity());
        let z = kron(&LinMap::zeros(f, 2, 2), &LinMap::identity(f, 3)).unwrap();
        assert!(z.is_zero());
        assert!(matches!(
            kron(
                &LinMap::identity(f, 1),
                &LinMap::identity(Field::Rationals, 1)
            ),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn kernel_examples() {
        let q = Field::Rationals;
        assert_eq!(kernel(&LinMap::identity(q, 3)).dim(), 0);
        assert_eq!(kernel(&LinMap::zeros(q, 3, 3)).dim(), 3);
        let k = kernel(&LinMap::from_i64(q, &[&[1, -1]]));
        assert_eq!(*k.basis(), LinMap::from_i64(q, &[&[1], &[1]]));
    }

    #[test]
    fn invert_examples() {
        let f = Field::gf7();
        assert!(invert(&LinMap::identity(f, 4)).unwrap().is_identity());
        assert!(matches!(
            invert(&LinMap::from_i64(f, &[&[1, 2], &[2, 4]])),
            Err(Error::SingularMap(_))
        ));
        assert!(invert(&LinMap::zeros(f, 2, 3)).is_err());
    }
}
