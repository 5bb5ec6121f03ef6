use super::field::Field;
use super::linmap::LinMap;

/// Row-major multi-index over a tensor product of coordinate spaces.
///
/// The index of `e_i ⊗ e_j` in an `n ⊗ m` space is `i·m + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: &[usize]) -> TensorIndex {
        TensorIndex {
            dims: dims.to_vec(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        idx.iter()
            .zip(&self.dims)
            .fold(0, |acc, (i, d)| acc * d + i)
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        out
    }

    /// All multi-indices in flattening order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.total()).map(|k| self.unflatten(k))
    }
}

/// The map permuting tensor factors: factor `k` of the output is factor
/// `order[k]` of the input.
pub fn permute_factors(field: Field, dims: &[usize], order: &[usize]) -> LinMap {
    let src = TensorIndex::new(dims);
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let dst = TensorIndex::new(&out_dims);
    let images: Vec<usize> = src
        .iter()
        .map(|idx| {
            let moved: Vec<usize> = order.iter().map(|&k| idx[k]).collect();
            dst.flatten(&moved)
        })
        .collect();
    LinMap::permutation(field, dst.total(), &images)
}

/// The flip `V⊗W → W⊗V`.
pub fn swap(field: Field, v: usize, w: usize) -> LinMap {
    permute_factors(field, &[v, w], &[1, 0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_convention() {
        let t = TensorIndex::new(&[2, 3]);
        assert_eq!(t.flatten(&[1, 2]), 5);
        assert_eq!(t.unflatten(4), vec![1, 1]);
    }

    #[test]
    fn swap_is_involution() {
        let f = Field::gf7();
        let s = swap(f, 2, 3);
        assert!(swap(f, 3, 2).compose(&s).unwrap().is_identity());
    }
}
