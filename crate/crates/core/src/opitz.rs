//! Divided differences as a matrix function: for the lower bidiagonal
//! matrix `A` with the nodes on its diagonal and ones below it, `p(A)` is
//! the full table of divided differences of `p`. Also the Leibniz rule for
//! products and the closed form for monomials.

use nalgebra::DMatrix;

use crate::ddtable::DDTable;
use crate::error::{Error, Result};
use crate::nodes::{HermiteDataset, NodeSequence};
use crate::poly::PowerPoly;

/// Lower bidiagonal `A` with `A[i][i] = t_i` and `A[i+1][i] = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct OpitzMatrix {
    diag: Vec<f64>,
}

impl OpitzMatrix {
    pub fn new(t: &[f64]) -> Self {
        Self { diag: t.to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.diag[i]
            } else if i == j + 1 {
                1.0
            } else {
                0.0
            }
        })
    }
}

pub fn opitz_matrix(t: &NodeSequence) -> OpitzMatrix {
    OpitzMatrix::new(t.nodes())
}

/// `p(A)` by Horner's scheme on matrices. Entry `(i, j)` is the divided
/// difference of `p` over `t[j..=i]` for `j <= i`, zero above the diagonal.
pub fn matrix_polynomial(p: &PowerPoly, a: &OpitzMatrix) -> DMatrix<f64> {
    let n = a.dim();
    let dense = a.to_dense();
    let identity = DMatrix::<f64>::identity(n, n);
    let mut acc = DMatrix::<f64>::zeros(n, n);
    for &c in p.coeffs().iter().rev() {
        acc = &acc * &dense + &identity * c;
    }
    acc
}

/// Divided difference of `p q` over the shared nodes, as
/// `sum_j [t_j..t_n] p * [t_1..t_j] q`.
pub fn leibniz_dd(p_data: &HermiteDataset, q_data: &HermiteDataset) -> Result<f64> {
    if p_data.nodes() != q_data.nodes() {
        return Err(Error::NodeMismatch);
    }
    let tp = DDTable::build(p_data);
    let tq = DDTable::build(q_data);
    let n = tp.len();
    Ok((0..n).map(|j| tp.get(j, n - 1) * tq.get(0, j)).sum())
}

/// Divided difference of `x^k` over `t`: the complete homogeneous symmetric
/// polynomial of degree `k - n + 1` in the nodes, or 0 when `k < n - 1`.
pub fn monomial_dd(t: &[f64], k: usize) -> f64 {
    let n = t.len();
    if n == 0 || k + 1 < n {
        return 0.0;
    }
    complete_homogeneous(t, k + 1 - n)
}

/// `h_m(t_1, ..., t_n)` via `h_m(t_{1:i}) = h_m(t_{1:i-1}) + t_i h_{m-1}(t_{1:i})`.
pub fn complete_homogeneous(t: &[f64], m: usize) -> f64 {
    let mut h = vec![0.0; m + 1];
    h[0] = 1.0;
    for &ti in t {
        for d in 1..=m {
            h[d] += ti * h[d - 1];
        }
    }
    h[m]
}
