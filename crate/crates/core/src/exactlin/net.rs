//! Evaluation of string-diagram style formulas.
//!
//! A [`Net`] tracks, for each basis vector of its input space, the image in
//! the tensor product of the currently open wires. Applying a map to a few
//! wires contracts it against just those tensor legs; the remaining legs are
//! carried along. Reading the open wires out in a chosen order yields the
//! matrix of the whole formula.
//!
//! ```
//! use hha_core::exactlin::{Field, LinMap, Net};
//! let f = Field::gf7();
//! let (mut net, w) = Net::new(f, &[2, 3]);
//! let flip = net.output(&[w[1], w[0]]).unwrap();
//! assert_eq!(flip.rows(), 6);
//! ```

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::field::{Field, Scalar};
use super::linmap::LinMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Wire(usize);

type Sparse = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct Net {
    field: Field,
    live: Vec<(Wire, usize)>,
    columns: Vec<Sparse>,
    next: usize,
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

impl Net {
    /// A net whose inputs are the factors of `dims`, in order.
    pub fn new(field: Field, dims: &[usize]) -> (Net, Vec<Wire>) {
        let total: usize = dims.iter().product();
        let wires: Vec<Wire> = (0..dims.len()).map(Wire).collect();
        let columns = (0..total).map(|c| vec![(c, field.one())]).collect();
        let net = Net {
            field,
            live: wires.iter().copied().zip(dims.iter().copied()).collect(),
            columns,
            next: dims.len(),
        };
        (net, wires)
    }

    /// Builds a net on inputs `dims`, runs `body`, and reads out the wires it
    /// returns, in order.
    pub fn eval(
        field: Field,
        dims: &[usize],
        body: impl FnOnce(&mut Net, &[Wire]) -> Result<Vec<Wire>>,
    ) -> Result<LinMap> {
        let (mut net, w) = Net::new(field, dims);
        let outs = body(&mut net, &w)?;
        net.output(&outs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self, w: Wire) -> Result<usize> {
        self.live
            .iter()
            .find(|(x, _)| *x == w)
            .map(|(_, d)| *d)
            .ok_or_else(|| Error::Wiring(format!("wire {w:?} is not open")))
    }

    fn position(&self, w: Wire) -> Result<usize> {
        self.live
            .iter()
            .position(|(x, _)| *x == w)
            .ok_or_else(|| Error::Wiring(format!("wire {w:?} is not open")))
    }

    /// Applies `map` to the wires `ins` (in that order), producing fresh
    /// wires of dimensions `out_dims`. The input wires are consumed.
    pub fn apply(&mut self, map: &LinMap, ins: &[Wire], out_dims: &[usize]) -> Result<Vec<Wire>> {
        if map.field() != self.field {
            return Err(Error::FieldMismatch(self.field, map.field()));
        }
        let pos: Vec<usize> = ins
            .iter()
            .map(|&w| self.position(w))
            .collect::<Result<_>>()?;
        for (k, p) in pos.iter().enumerate() {
            if pos[..k].contains(p) {
                return Err(Error::Wiring("wire used twice in one application".into()));
            }
        }
        let in_dims: Vec<usize> = pos.iter().map(|&p| self.live[p].1).collect();
        let in_total: usize = in_dims.iter().product();
        let out_total: usize = out_dims.iter().product();
        if map.cols() != in_total || map.rows() != out_total {
            return Err(Error::DimensionMismatch {
                op: "net apply",
                expected: in_total * out_total,
                got: map.cols() * map.rows(),
            });
        }

        let f = self.field;
        let mut by_input: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); in_total];
        for (c, slot) in by_input.iter_mut().enumerate() {
            for r in 0..out_total {
                let v = map.get(r, c);
                if !f.is_zero(v) {
                    slot.push((r, v.clone()));
                }
            }
        }

        let dims: Vec<usize> = self.live.iter().map(|(_, d)| *d).collect();
        let old_strides = strides(&dims);
        let rest: Vec<usize> = (0..self.live.len()).filter(|p| !pos.contains(p)).collect();
        let rest_dims: Vec<usize> = rest.iter().map(|&p| dims[p]).collect();
        let rest_strides = strides(&rest_dims);
        let in_strides = strides(&in_dims);
        let rest_total: usize = rest_dims.iter().product();

        let split = |row: usize| -> (usize, usize) {
            let mut in_idx = 0;
            for (k, &p) in pos.iter().enumerate() {
                in_idx += (row / old_strides[p]) % dims[p] * in_strides[k];
            }
            let mut rest_idx = 0;
            for (k, &p) in rest.iter().enumerate() {
                rest_idx += (row / old_strides[p]) % dims[p] * rest_strides[k];
            }
            (in_idx, rest_idx)
        };

        self.columns.par_iter_mut().for_each(|col| {
            let mut acc: Sparse = Vec::new();
            for (row, v) in col.iter() {
                let (i, r) = split(*row);
                for (o, m) in &by_input[i] {
                    acc.push((o * rest_total + r, f.mul(m, v)));
                }
            }
            *col = merge(f, acc);
        });

        let outs: Vec<Wire> = (0..out_dims.len()).map(|k| Wire(self.next + k)).collect();
        self.next += out_dims.len();
        let mut live: Vec<(Wire, usize)> =
            outs.iter().copied().zip(out_dims.iter().copied()).collect();
        live.extend(rest.iter().map(|&p| self.live[p]));
        self.live = live;
        Ok(outs)
    }

    /// Single-output convenience wrapper around [`Net::apply`].
    pub fn apply1(&mut self, map: &LinMap, ins: &[Wire]) -> Result<Wire> {
        Ok(self.apply(map, ins, &[map.rows()])?[0])
    }

    /// Two-output convenience wrapper; `first` is the dimension of the first
    /// output factor.
    pub fn apply2(&mut self, map: &LinMap, ins: &[Wire], first: usize) -> Result<(Wire, Wire)> {
        if first == 0 || !map.rows().is_multiple_of(first) {
            return Err(Error::Wiring("output does not split as requested".into()));
        }
        let w = self.apply(map, ins, &[first, map.rows() / first])?;
        Ok((w[0], w[1]))
    }

    /// Consumes `ins` through a functional (a map with one row).
    pub fn contract(&mut self, map: &LinMap, ins: &[Wire]) -> Result<()> {
        self.apply(map, ins, &[])?;
        Ok(())
    }

    /// Introduces a constant vector (`d×1`) on a fresh wire.
    pub fn constant(&mut self, v: &LinMap) -> Result<Wire> {
        self.apply1(v, &[])
    }

    /// The matrix of the net with output factors in the given order. Every
    /// open wire must be listed exactly once.
    pub fn output(&self, order: &[Wire]) -> Result<LinMap> {
        if order.len() != self.live.len() {
            return Err(Error::Wiring(format!(
                "{} wires open but {} requested",
                self.live.len(),
                order.len()
            )));
        }
        let pos: Vec<usize> = order
            .iter()
            .map(|&w| self.position(w))
            .collect::<Result<_>>()?;
        let dims: Vec<usize> = self.live.iter().map(|(_, d)| *d).collect();
        let old_strides = strides(&dims);
        let new_dims: Vec<usize> = pos.iter().map(|&p| dims[p]).collect();
        let new_strides = strides(&new_dims);
        let rows: usize = new_dims.iter().product();
        let mut out = LinMap::zeros(self.field, rows, self.columns.len());
        for (c, col) in self.columns.iter().enumerate() {
            for (row, v) in col {
                let mut r = 0;
                for (k, &p) in pos.iter().enumerate() {
                    r += (row / old_strides[p]) % dims[p] * new_strides[k];
                }
                out.set(r, c, v.clone());
            }
        }
        Ok(out)
    }
}

fn merge(f: Field, mut acc: Sparse) -> Sparse {
    acc.sort_unstable_by_key(|(k, _)| *k);
    let mut out: Sparse = Vec::with_capacity(acc.len());
    for (k, v) in acc {
        match out.last_mut() {
            Some((lk, lv)) if *lk == k => *lv = f.add(lv, &v),
            _ => out.push((k, v)),
        }
    }
    out.retain(|(_, v)| !f.is_zero(v));
    out
}
