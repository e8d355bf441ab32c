//! Closed forms and functional representations of the divided difference:
//! refinement weights, the Cauchy kernel, the reciprocal, Chakalov's
//! weights on derivative data, Lagrange weights, and the norm on C[-1, 1].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::function::{factorial, SmoothFunction};
use crate::nodes::NodeSequence;

/// Weights expressing the divided difference over the subsequence
/// `t[sigma]` as a combination of divided differences over windows of
/// `k = sigma.len()` consecutive nodes.
///
/// Returns `(j, alpha_j)` pairs, `j` being the start of the window
/// `t[j..j + k]`, in increasing `j`.
///
/// Gaps are closed one at a time with the three-term identity
/// `(u_N - u_1) [u \ u_m] = (u_N - u_m) [u_2..u_N] + (u_m - u_1) [u_1..u_{N-1}]`,
/// always filling the lowest missing index first.
pub fn refine_coeffs(t: &[f64], sigma: &[usize]) -> Result<Vec<(usize, f64)>> {
    let n = t.len();
    let valid = !sigma.is_empty() && sigma.windows(2).all(|w| w[0] < w[1]) && sigma.last().is_some_and(|&s| s < n);
    if !valid {
        return Err(Error::InvalidSubsequence { len: n });
    }
    let k = sigma.len();
    let mut pending: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    let mut done: BTreeMap<usize, f64> = BTreeMap::new();
    pending.insert(sigma.to_vec(), 1.0);

    // Children have strictly fewer gaps, so always expanding the set with the
    // most gaps first lets equal subsets merge before they are expanded.
    while let Some(set) = pending.keys().max_by_key(|s| (gaps(s), (*s).clone())).cloned() {
        let weight = pending.remove(&set).expect("present");
        let first = set[0];
        let last = set[k - 1];
        let Some(m) = (first..=last).find(|i| set.binary_search(i).is_err()) else {
            *done.entry(first).or_insert(0.0) += weight;
            continue;
        };
        let span = t[last] - t[first];
        if span == 0.0 {
            return Err(Error::DegenerateSpan);
        }
        let mut with_m = set.clone();
        let pos = with_m.binary_search(&m).unwrap_err();
        with_m.insert(pos, m);
        let drop_first = with_m[1..].to_vec();
        let drop_last = with_m[..k].to_vec();
        *pending.entry(drop_first).or_insert(0.0) += weight * (t[last] - t[m]) / span;
        *pending.entry(drop_last).or_insert(0.0) += weight * (t[m] - t[first]) / span;
    }
    Ok(done.into_iter().collect())
}

fn gaps(set: &[usize]) -> usize {
    set[set.len() - 1] - set[0] + 1 - set.len()
}

/// Divided difference of `x -> 1/(z - x)`, which is `1 / w_n(z)`.
pub fn cauchy_kernel_dd(t: &[f64], z: f64) -> Result<f64> {
    if t.contains(&z) {
        return Err(Error::Pole(z));
    }
    Ok(1.0 / t.iter().map(|&c| z - c).product::<f64>())
}

/// Divided difference of `x -> 1/x`: `(-1)^{n-1} / (t_1 ... t_n)`.
pub fn reciprocal_dd(t: &[f64]) -> Result<f64> {
    if t.is_empty() {
        return Err(Error::EmptyNodes);
    }
    if t.contains(&0.0) {
        return Err(Error::ZeroNode);
    }
    let sign = if t.len() % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign / t.iter().product::<f64>())
}

/// One term `weight * D^order f(site)` of a functional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalTerm {
    pub site: f64,
    pub order: usize,
    pub weight: f64,
}

/// A linear combination of point evaluations of derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct DDFunctional {
    pub terms: Vec<FunctionalTerm>,
}

impl DDFunctional {
    pub fn max_order(&self) -> usize {
        self.terms.iter().map(|t| t.order).max().unwrap_or(0)
    }

    pub fn apply<F: SmoothFunction + ?Sized>(&self, f: &F) -> Result<f64> {
        apply_functional(self, f)
    }
}

/// Weights `A_{xi,mu}` with `[t] f = sum A_{xi,mu} D^mu f(xi)`.
///
/// Exactness on the Newton basis `w_0, ..., w_{n-1}` gives a triangular
/// system: `D^{mu_i} w_{j}(t_i)` vanishes whenever `i < j` (0-based), since
/// `w_j` then has a zero of order `mu_i + 1` at `t_i`. It is solved from
/// the last unknown backwards.
pub fn chakalov_weights(t: &NodeSequence) -> DDFunctional {
    let nodes = t.nodes();
    let mult = t.mult_index();
    let n = nodes.len();

    // taylor[i][d]: d-th Taylor coefficient at t_i of the current w_j.
    // basis[j][i] = D^{mu_i} w_j(t_i).
    let mut taylor: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            let mut c = vec![0.0; n + 1];
            c[0] = 1.0;
            c
        })
        .collect();
    let mut basis = vec![vec![0.0; n]; n];
    for j in 0..n {
        for i in 0..n {
            basis[j][i] = factorial(mult[i]) * taylor[i][mult[i]];
        }
        if j + 1 < n {
            for (i, coeffs) in taylor.iter_mut().enumerate() {
                // multiply by (x - t_j) = (x - t_i) + (t_i - t_j)
                let shift = nodes[i] - nodes[j];
                for d in (0..=n).rev() {
                    let lower = if d > 0 { coeffs[d - 1] } else { 0.0 };
                    coeffs[d] = lower + shift * coeffs[d];
                }
            }
        }
    }

    let mut weights = vec![0.0; n];
    for j in (0..n).rev() {
        let rhs = if j == n - 1 { 1.0 } else { 0.0 };
        let known: f64 = (j + 1..n).map(|i| weights[i] * basis[j][i]).sum();
        weights[j] = (rhs - known) / basis[j][j];
    }

    DDFunctional {
        terms: (0..n)
            .map(|i| FunctionalTerm {
                site: nodes[i],
                order: mult[i],
                weight: weights[i],
            })
            .collect(),
    }
}

pub fn apply_functional<F: SmoothFunction + ?Sized>(functional: &DDFunctional, f: &F) -> Result<f64> {
    let needed = functional.max_order();
    if f.max_order() < needed {
        return Err(Error::InsufficientDerivatives {
            needed,
            available: f.max_order(),
        });
    }
    Ok(functional
        .terms
        .iter()
        .map(|term| term.weight * f.derivative(term.order, term.site))
        .sum())
}

/// `1 / prod_{i != j} (t_j - t_i)` for pairwise distinct nodes.
pub fn lagrange_weights(t: &[f64]) -> Result<Vec<f64>> {
    for (j, &tj) in t.iter().enumerate() {
        if t[..j].contains(&tj) {
            return Err(Error::RepeatedNode(tj));
        }
    }
    Ok(t.iter()
        .enumerate()
        .map(|(j, &tj)| {
            let d: f64 = t
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, &ti)| tj - ti)
                .product();
            1.0 / d
        })
        .collect())
}

/// Norm of the divided difference as a functional on C[-1, 1]:
/// the sum of the absolute Lagrange weights. Never below `2^{n-2}`.
pub fn functional_norm(t: &[f64]) -> Result<f64> {
    let in_range = t.iter().all(|&x| (-1.0..=1.0).contains(&x));
    let increasing = t.windows(2).all(|w| w[0] < w[1]);
    if t.is_empty() || !in_range || !increasing {
        return Err(Error::NodesOutOfRange);
    }
    Ok(lagrange_weights(t)?.iter().map(|w| w.abs()).sum())
}

/// Extreme points of the Chebyshev polynomial `T_{n-1}` in increasing
/// order; these attain the norm bound `2^{n-2}`.
pub fn chebyshev_extreme_sites(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n)
            .rev()
            .map(|j| (std::f64::consts::PI * j as f64 / (n - 1) as f64).cos())
            .collect(),
    }
}
