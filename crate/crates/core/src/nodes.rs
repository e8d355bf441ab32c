//! Node sequences with clustered multiplicities, Hermite data, and the
//! Newton polynomials `w_i(z) = (z - t_1)...(z - t_i)`.

use crate::error::{Error, Result};
use crate::function::SmoothFunction;

/// A finite node sequence whose repeated entries are clustered.
///
/// `mult_index()[j]` counts the earlier nodes equal to `nodes()[j]`; at a
/// repeated node it is the order of the derivative datum carried there.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSequence {
    nodes: Vec<f64>,
    mult: Vec<usize>,
}

/// Maximal run of equal nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    pub site: f64,
    pub start: usize,
    pub len: usize,
}

impl NodeSequence {
    /// Validates a clustered sequence. Order is kept as given.
    pub fn new(nodes: Vec<f64>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyNodes);
        }
        let mut clean = Vec::with_capacity(nodes.len());
        for &t in &nodes {
            if !t.is_finite() {
                return Err(Error::NonFinite { what: "node", value: t });
            }
            // -0.0 and 0.0 are the same node.
            clean.push(t + 0.0);
        }
        let mut mult = Vec::with_capacity(clean.len());
        let mut closed: Vec<f64> = Vec::new();
        for j in 0..clean.len() {
            if j > 0 && clean[j] == clean[j - 1] {
                mult.push(mult[j - 1] + 1);
                continue;
            }
            if closed.contains(&clean[j]) {
                return Err(Error::NotClustered { node: clean[j] });
            }
            if j > 0 {
                closed.push(clean[j - 1]);
            }
            mult.push(0);
        }
        Ok(Self { nodes: clean, mult })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn mult_index(&self) -> &[usize] {
        &self.mult
    }

    pub fn max_mult_index(&self) -> usize {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    /// Whether `nodes[i] == nodes[j]`, decided from the cluster structure.
    pub fn same_cluster(&self, i: usize, j: usize) -> bool {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        self.mult[hi] >= hi - lo
    }

    /// Index of the first node of the cluster containing `i`.
    pub fn cluster_start(&self, i: usize) -> usize {
        i - self.mult[i]
    }

    pub fn clusters(&self) -> Vec<Cluster> {
        let mut out: Vec<Cluster> = Vec::new();
        for (j, &m) in self.mult.iter().enumerate() {
            if m == 0 {
                out.push(Cluster {
                    site: self.nodes[j],
                    start: j,
                    len: 1,
                });
            } else if let Some(last) = out.last_mut() {
                last.len += 1;
            }
        }
        out
    }

    pub fn is_distinct(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    pub fn min(&self) -> f64 {
        self.nodes.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.nodes.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Sorts `raw` stably and snaps chains of nodes closer than `tol` onto the
/// first member of the chain. Returns the sequence and the sort permutation
/// (`perm[k]` is the position in `raw` of the `k`-th sorted node).
pub(crate) fn cluster_with_permutation(raw: &[f64], tol: f64) -> Result<(NodeSequence, Vec<usize>)> {
    if raw.is_empty() {
        return Err(Error::EmptyNodes);
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::NegativeTolerance(tol));
    }
    if let Some(&bad) = raw.iter().find(|t| !t.is_finite()) {
        return Err(Error::NonFinite {
            what: "node",
            value: bad,
        });
    }
    let mut perm: Vec<usize> = (0..raw.len()).collect();
    perm.sort_by(|&a, &b| (raw[a] + 0.0).total_cmp(&(raw[b] + 0.0)));
    let sorted: Vec<f64> = perm.iter().map(|&k| raw[k] + 0.0).collect();
    let mut snapped = Vec::with_capacity(sorted.len());
    let mut anchor = sorted[0];
    snapped.push(anchor);
    for w in sorted.windows(2) {
        if w[1] - w[0] > tol {
            anchor = w[1];
        }
        snapped.push(anchor);
    }
    Ok((NodeSequence::new(snapped)?, perm))
}

/// Sorts and clusters raw nodes. With `tol == 0` only equal nodes merge.
pub fn cluster_nodes(raw: &[f64], tol: f64) -> Result<NodeSequence> {
    cluster_with_permutation(raw, tol).map(|(seq, _)| seq)
}

/// `w_i(z) = (z - t_1)...(z - t_i)`; the empty product is 1.
pub fn newton_weight(t: &[f64], i: usize, z: f64) -> Result<f64> {
    if i > t.len() {
        return Err(Error::IndexOutOfRange { index: i, len: t.len() });
    }
    Ok(t[..i].iter().map(|&c| z - c).product())
}

/// Nodes with Hermite data: `values[j]` is the raw derivative
/// `D^{mu_j} f(t_j)`, not divided by `mu_j!`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteDataset {
    nodes: NodeSequence,
    values: Vec<f64>,
}

impl HermiteDataset {
    pub fn new(nodes: NodeSequence, values: Vec<f64>) -> Result<Self> {
        if values.len() != nodes.len() {
            return Err(Error::LengthMismatch {
                expected: nodes.len(),
                found: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "value",
                value: bad,
            });
        }
        Ok(Self { nodes, values })
    }

    /// Builds a dataset from `(t, y)` records whose nodes are already clustered.
    pub fn from_records(records: &[(f64, f64)]) -> Result<Self> {
        let nodes = NodeSequence::new(records.iter().map(|r| r.0).collect())?;
        Self::new(nodes, records.iter().map(|r| r.1).collect())
    }

    /// Sorts (stably) and clusters the records, permuting the data with the
    /// nodes. Records inside a cluster keep their relative order, so the
    /// k-th copy of a node still carries the k-th derivative.
    pub fn from_unsorted(records: &[(f64, f64)], tol: f64) -> Result<Self> {
        let raw: Vec<f64> = records.iter().map(|r| r.0).collect();
        let (nodes, perm) = cluster_with_permutation(&raw, tol)?;
        let values = perm.iter().map(|&k| records[k].1).collect();
        Self::new(nodes, values)
    }

    pub fn nodes(&self) -> &NodeSequence {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn records(&self) -> Vec<(f64, f64)> {
        self.nodes
            .nodes()
            .iter()
            .copied()
            .zip(self.values.iter().copied())
            .collect()
    }
}

/// Samples `f` into Hermite data: `y_j = D^{mu_j} f(t_j)`.
pub fn sample_function<F: SmoothFunction + ?Sized>(f: &F, t: &NodeSequence) -> Result<HermiteDataset> {
    let needed = t.max_mult_index();
    if f.max_order() < needed {
        return Err(Error::InsufficientDerivatives {
            needed,
            available: f.max_order(),
        });
    }
    let values = t
        .nodes()
        .iter()
        .zip(t.mult_index())
        .map(|(&x, &m)| f.derivative(m, x))
        .collect();
    HermiteDataset::new(t.clone(), values)
}
