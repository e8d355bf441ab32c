use num_complex::Complex64;

use super::QuadratureConfig;
use crate::error::{Error, Result};
use crate::function::AnalyticFunction;
use crate::nodes::NodeSequence;

/// Trapezoid-rule value of `(1 / 2 pi i) \oint f(z) dz / w(z)` on a circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourEstimate {
    pub value: f64,
    /// Imaginary part of the estimate, zero in exact arithmetic.
    pub imag: f64,
}

/// Divided difference of an analytic `f` as a Cauchy integral over a circle
/// enclosing all nodes.
pub fn contour_dd<F: AnalyticFunction + ?Sized>(
    f: &F,
    t: &NodeSequence,
    cfg: &QuadratureConfig,
) -> Result<ContourEstimate> {
    let nodes = t.nodes();
    let (lo, hi) = (t.min(), t.max());
    let center = cfg
        .contour_center
        .unwrap_or_else(|| Complex64::new(0.5 * (lo + hi), 0.0));
    let radius = cfg.contour_radius.unwrap_or(0.75 * (hi - lo) + 1.0);
    if cfg.contour_points == 0 || !(radius > 0.0) {
        return Err(Error::InvalidArgument("contour needs points and a positive radius"));
    }
    if let Some(&bad) = nodes
        .iter()
        .find(|&&x| (Complex64::new(x, 0.0) - center).norm() >= radius)
    {
        return Err(Error::NodeOutsideContour { node: bad });
    }
    let m = cfg.contour_points;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..m {
        let theta = std::f64::consts::TAU * k as f64 / m as f64;
        let e = Complex64::from_polar(radius, theta);
        let zeta = center + e;
        let w: Complex64 = nodes.iter().map(|&x| zeta - x).product();
        // dz = i e dtheta, and the 1 / (2 pi i) cancels i and 2 pi
        sum += f.eval_complex(zeta) * e / w;
    }
    let est = sum / m as f64;
    if est.im.abs() > cfg.contour_imag_tol * (1.0 + est.re.abs()) {
        return Err(Error::ImaginaryResidual { imag: est.im });
    }
    Ok(ContourEstimate {
        value: est.re,
        imag: est.im,
    })
}

/// Both sides of `(y - x) sum_j w_{j-1}(x) / w_j(y) = 1 - w_n(x) / w_n(y)`.
pub fn frobenius_partition(t: &[f64], x: f64, y: f64) -> (f64, f64) {
    let mut wx = 1.0;
    let mut wy = 1.0;
    let mut sum = 0.0;
    for &c in t {
        let prev_x = wx;
        wx *= x - c;
        wy *= y - c;
        sum += prev_x / wy;
    }
    ((y - x) * sum, 1.0 - wx / wy)
}
