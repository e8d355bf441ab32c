//! Integral and analytic representations of the divided difference, each an
//! independent route to the value the table computes.

mod bspline;
mod contour;
mod expansion;
pub mod quadrature;
mod simplex;

pub use bspline::{bspline_eval, bspline_integral, peano_dd};
pub use contour::{contour_dd, frobenius_partition, ContourEstimate};
pub use expansion::{floater_expansion, hopf_anchor, FloaterExpansion};
pub use simplex::genocchi_dd;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::ddtable::{divided_difference, divided_difference_of, hermite_interpolant};
use crate::error::{Error, Result};
use crate::function::{factorial, Derivative, SmoothFunction};
use crate::newton::derivative_at;
use crate::nodes::{sample_function, HermiteDataset, NodeSequence};

/// Discretization parameters for the quadrature-based routes.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    /// Gauss–Legendre points per dimension.
    pub gauss_order: usize,
    /// Trapezoid points on the contour circle.
    pub contour_points: usize,
    /// Defaults to the midpoint of the nodes.
    pub contour_center: Option<Complex64>,
    /// Defaults to `1.5 * half_width + 1`.
    pub contour_radius: Option<f64>,
    /// Largest accepted `|imag| / (1 + |real|)` of the contour estimate.
    pub contour_imag_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            gauss_order: 16,
            contour_points: 256,
            contour_center: None,
            contour_radius: None,
            contour_imag_tol: 1e-8,
        }
    }
}

/// Divided difference as a ratio of Vandermonde-type determinants
/// (pairwise distinct nodes only).
pub fn determinant_dd(data: &HermiteDataset) -> Result<f64> {
    let t = data.nodes();
    if !t.is_distinct() {
        let j = t.mult_index().iter().position(|&m| m > 0).unwrap_or(0);
        return Err(Error::RepeatedNode(t.nodes()[j]));
    }
    let nodes = t.nodes();
    let y = data.values();
    let n = nodes.len();
    let num = DMatrix::from_fn(n, n, |i, j| if j + 1 == n { y[i] } else { nodes[i].powi(j as i32) });
    let den = DMatrix::from_fn(n, n, |i, j| nodes[i].powi(j as i32));
    Ok(num.determinant() / den.determinant())
}

/// `k! [t_0..t_k] f` next to the range of `D^k f` sampled on a uniform grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanValueBracket {
    pub lo: f64,
    pub mid: f64,
    pub hi: f64,
}

impl MeanValueBracket {
    /// `lo - eps <= mid <= hi + eps` with `eps = 1e-9 (1 + |hi|)`.
    pub fn holds(&self) -> bool {
        let eps = 1e-9 * (1.0 + self.hi.abs());
        self.lo - eps <= self.mid && self.mid <= self.hi + eps
    }
}

pub const MEAN_VALUE_GRID: usize = 1001;

pub fn mean_value_check<F: SmoothFunction + ?Sized>(f: &F, t: &NodeSequence) -> Result<MeanValueBracket> {
    let k = t.len() - 1;
    if f.max_order() < k {
        return Err(Error::InsufficientDerivatives {
            needed: k,
            available: f.max_order(),
        });
    }
    let mid = factorial(k) * divided_difference(&sample_function(f, t)?);
    let (a, b) = (t.min(), t.max());
    let step = (b - a) / (MEAN_VALUE_GRID - 1) as f64;
    let (lo, hi) = (0..MEAN_VALUE_GRID)
        .map(|i| f.derivative(k, a + step * i as f64))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    Ok(MeanValueBracket { lo, mid, hi })
}

/// Outcome of searching for sites `sigma` interlacing `tau` at which
/// `D(f - r)` vanishes, `r` the Hermite interpolant to `f` at `tau`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interlacing {
    /// `k [tau] f`.
    pub scaled_dd: f64,
    /// The sites and `[sigma] Df`, when a root was bracketed in every gap.
    pub found: Option<(Vec<f64>, f64)>,
}

/// Brackets a zero of `D(f - r)` between each pair of neighbouring sites of
/// the nondecreasing `tau` (at a repeated site the zero is the site itself),
/// scanning `cells` grid cells per gap and refining by bisection.
pub fn interlacing_sites<F: SmoothFunction + Copy>(f: F, tau: &NodeSequence, cells: usize) -> Result<Interlacing> {
    let t = tau.nodes();
    if t.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument("sites must be nondecreasing"));
    }
    let k = t.len() - 1;
    if f.max_order() < k.max(tau.max_mult_index() + 1) {
        return Err(Error::InsufficientDerivatives {
            needed: k.max(tau.max_mult_index() + 1),
            available: f.max_order(),
        });
    }
    let data = sample_function(&f, tau)?;
    let scaled_dd = k as f64 * divided_difference(&data);
    let r = hermite_interpolant(&data);
    let g = |x: f64| f.derivative(1, x) - derivative_at(&r, x, 1);

    let mut sigma = Vec::with_capacity(k);
    for w in t.windows(2) {
        if w[0] == w[1] {
            sigma.push(w[0]);
            continue;
        }
        match bracket_root(&g, w[0], w[1], cells.max(1)) {
            Some(root) => sigma.push(root),
            None => return Ok(Interlacing { scaled_dd, found: None }),
        }
    }
    if sigma.is_empty() {
        return Ok(Interlacing { scaled_dd, found: None });
    }
    let dd = divided_difference_of(&Derivative(f), &sigma)?;
    Ok(Interlacing {
        scaled_dd,
        found: Some((sigma, dd)),
    })
}

/// A sign change of `g` strictly inside `(a, b)`, refined by bisection.
/// The grid starts and ends a hair inside the interval so that a zero at an
/// endpoint (a repeated site) is not mistaken for the interior one.
fn bracket_root(g: &impl Fn(f64) -> f64, a: f64, b: f64, cells: usize) -> Option<f64> {
    let h = (b - a) / cells as f64;
    let inset = 1e-6 * h;
    let grid = |i: usize| match i {
        0 => a + inset,
        i if i == cells => b - inset,
        i => a + h * i as f64,
    };
    let mut x0 = grid(0);
    let mut g0 = g(x0);
    for i in 1..=cells {
        let x1 = grid(i);
        let g1 = g(x1);
        if g0 == 0.0 {
            return Some(x0);
        }
        if g1 == 0.0 {
            return Some(x1);
        }
        if g0.signum() != g1.signum() {
            let (mut lo, mut hi, mut glo) = (x0, x1, g0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let gm = g(mid);
                if gm == 0.0 {
                    return Some(mid);
                }
                if gm.signum() == glo.signum() {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            return Some(0.5 * (lo + hi));
        }
        x0 = x1;
        g0 = g1;
    }
    None
}
