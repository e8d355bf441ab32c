//! The divided-difference table for Hermite data on clustered nodes.
//!
//! Entries `d[i][j]` hold the divided difference over `t[i..=j]` (0-based,
//! inclusive). Off the diagonal, an entry is a difference quotient when
//! `t[i] != t[j]` and a scaled derivative datum `D^{j-i} f(t_i) / (j-i)!`
//! otherwise. Which branch applies is read off the multiplicity index, never
//! re-decided by comparing floats.

use crate::error::{Error, Result};
use crate::function::{factorial, SmoothFunction};
use crate::nodes::{cluster_nodes, sample_function, HermiteDataset, NodeSequence};
use crate::poly::NewtonPoly;

#[derive(Debug, Clone, PartialEq)]
pub struct DDTable {
    nodes: NodeSequence,
    /// Row `i` holds `d[i][i..n]`, packed.
    entries: Vec<f64>,
}

impl DDTable {
    /// Fills the table column by column, left to right.
    pub fn build(data: &HermiteDataset) -> Self {
        let nodes = data.nodes().clone();
        let y = data.values();
        let t = nodes.nodes();
        let n = t.len();
        let mut table = Self {
            nodes: nodes.clone(),
            entries: vec![0.0; n * (n + 1) / 2],
        };
        for i in 0..n {
            let v = y[nodes.cluster_start(i)];
            table.set(i, i, v);
        }
        for width in 1..n {
            for i in 0..n - width {
                let j = i + width;
                let v = if nodes.same_cluster(i, j) {
                    y[nodes.cluster_start(i) + width] / factorial(width)
                } else {
                    (table.get(i + 1, j) - table.get(i, j - 1)) / (t[j] - t[i])
                };
                table.set(i, j, v);
            }
        }
        table
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        let n = self.nodes.len();
        // rows 0..i hold n, n-1, ..., n-i+1 entries
        i * n - i * (i.saturating_sub(1)) / 2 + (j - i)
    }

    fn set(&mut self, i: usize, j: usize, v: f64) {
        let k = self.offset(i, j);
        self.entries[k] = v;
    }

    /// Divided difference over `t[i..=j]`; requires `i <= j < n`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i <= j && j < self.nodes.len(), "table index ({i}, {j}) out of range");
        self.entries[self.offset(i, j)]
    }

    pub fn nodes(&self) -> &NodeSequence {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The top diagonal: divided differences over `t[0..=j]`.
    pub fn newton_coeffs(&self) -> Vec<f64> {
        (0..self.len()).map(|j| self.get(0, j)).collect()
    }

    pub fn divided_difference(&self) -> f64 {
        self.get(0, self.len() - 1)
    }

    /// Newton coefficients with respect to the centers `t[order[0]], t[order[1]], ...`.
    ///
    /// Each prefix of `order` must be a set of consecutive indices; the
    /// `k`-th coefficient is then the entry spanning that prefix.
    pub fn diagonal_for_order(&self, order: &[usize]) -> Result<Vec<f64>> {
        let n = self.len();
        if order.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: order.len(),
            });
        }
        let mut out = Vec::with_capacity(n);
        let (mut lo, mut hi) = (order[0], order[0]);
        if lo >= n {
            return Err(Error::NotConsecutive { position: 0 });
        }
        out.push(self.get(lo, hi));
        for (position, &k) in order.iter().enumerate().skip(1) {
            if lo > 0 && k == lo - 1 {
                lo = k;
            } else if k == hi + 1 && k < n {
                hi = k;
            } else {
                return Err(Error::NotConsecutive { position });
            }
            out.push(self.get(lo, hi));
        }
        Ok(out)
    }

    /// The interpolant in Newton form with respect to the reordered centers.
    pub fn interpolant_for_order(&self, order: &[usize]) -> Result<NewtonPoly> {
        let coeffs = self.diagonal_for_order(order)?;
        let t = self.nodes.nodes();
        let centers = order[..order.len() - 1].iter().map(|&k| t[k]).collect();
        NewtonPoly::new(centers, coeffs)
    }

    /// Lower-triangular matrix layout: row `i` lists the entries over
    /// `t[j..=i]` for `j = 0..=i`.
    pub fn lower_rows(&self) -> Vec<Vec<f64>> {
        (0..self.len())
            .map(|i| (0..=i).map(|j| self.get(j, i)).collect())
            .collect()
    }
}

/// Divided difference over all nodes of the dataset.
pub fn divided_difference(data: &HermiteDataset) -> f64 {
    DDTable::build(data).divided_difference()
}

pub fn newton_coeffs(data: &HermiteDataset) -> Vec<f64> {
    DDTable::build(data).newton_coeffs()
}

/// Hermite interpolant in Newton form with centers `t[0..n-1]`.
pub fn hermite_interpolant(data: &HermiteDataset) -> NewtonPoly {
    let coeffs = newton_coeffs(data);
    let t = data.nodes().nodes();
    NewtonPoly::new(t[..t.len() - 1].to_vec(), coeffs).expect("n - 1 centers for n coefficients")
}

/// Divided difference of `f` over arbitrary nodes: they are sorted and
/// clustered (exact equality only), sampled, and tabulated.
pub fn divided_difference_of<F: SmoothFunction + ?Sized>(f: &F, nodes: &[f64]) -> Result<f64> {
    let seq = cluster_nodes(nodes, 0.0)?;
    Ok(divided_difference(&sample_function(f, &seq)?))
}
