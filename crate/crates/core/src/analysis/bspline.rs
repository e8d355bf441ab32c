use super::quadrature::{gauss_legendre, integrate};
use super::QuadratureConfig;
use crate::ddtable::divided_difference;
use crate::error::{Error, Result};
use crate::function::{factorial, SmoothFunction};
use crate::nodes::{HermiteDataset, NodeSequence};

/// B-spline with the given `k + 1` knots, normalized to unit integral:
/// `k` times the divided difference over the knots of `u -> (u - x)_+^{k-1}`.
///
/// At a repeated knot the data are one-sided derivatives of the truncated
/// power. Where that knot equals `x`, derivatives of order up to `k - 2`
/// are taken as their right limit 0, and order `k - 1` (a jump) is an error.
/// The spline is right-continuous: it is 0 at and beyond the last knot.
///
/// The divided difference annihilates `(u - x)^{k-1}`, so the same value is
/// minus the divided difference of its left-truncated part. Whichever side
/// has fewer knots is used, which keeps the data small near both ends of the
/// support.
pub fn bspline_eval(x: f64, knots: &NodeSequence) -> Result<f64> {
    let k = knots.len() - 1;
    let (first, last) = (knots.min(), knots.max());
    if k == 0 || first == last {
        return Err(Error::DegenerateSpan);
    }
    if x < first || x >= last {
        return Ok(0.0);
    }
    let t = knots.nodes();
    let left = t.iter().filter(|&&u| u < x).count();
    let right = t.iter().filter(|&&u| u > x).count();
    let use_left = left < right;
    let values = t
        .iter()
        .zip(knots.mult_index())
        .map(|(&u, &m)| {
            let on_side = if use_left { u <= x } else { u >= x };
            if !on_side {
                return Ok(0.0);
            }
            let v = power_derivative(u, x, k - 1, m)?;
            Ok(if use_left { -v } else { v })
        })
        .collect::<Result<Vec<f64>>>()?;
    let data = HermiteDataset::new(knots.clone(), values)?;
    Ok(k as f64 * divided_difference(&data))
}

/// `D^m (u - x)^p` with respect to `u`. At `u = x` orders below `p` give 0
/// and order `p`, where the truncated power jumps, is rejected.
fn power_derivative(u: f64, x: f64, p: usize, m: usize) -> Result<f64> {
    if m > p {
        return Ok(0.0);
    }
    if u == x {
        if m == p {
            return Err(Error::UndefinedDerivative { knot: u, order: m });
        }
        return Ok(0.0);
    }
    let falling = factorial(p) / factorial(p - m);
    Ok(falling * (u - x).powi((p - m) as i32))
}

/// Distinct knot sites in increasing order.
fn spans(knots: &NodeSequence) -> Vec<f64> {
    let mut sites: Vec<f64> = knots.clusters().iter().map(|c| c.site).collect();
    sites.sort_by(f64::total_cmp);
    sites
}

/// `int g(y) M(y) dy`, one Gauss–Legendre rule per knot interval
/// (the spline is a polynomial on each).
fn integrate_against_spline(
    knots: &NodeSequence,
    cfg: &QuadratureConfig,
    mut g: impl FnMut(f64) -> f64,
) -> Result<f64> {
    if cfg.gauss_order == 0 {
        return Err(Error::InvalidArgument("gauss_order must be positive"));
    }
    let rule = gauss_legendre(cfg.gauss_order);
    let sites = spans(knots);
    if sites.len() < 2 {
        return Err(Error::DegenerateSpan);
    }
    let mut total = 0.0;
    let mut failure = None;
    for w in sites.windows(2) {
        total += integrate(&rule, w[0], w[1], |y| match bspline_eval(y, knots) {
            Ok(m) => m * g(y),
            Err(e) => {
                failure = Some(e);
                0.0
            }
        });
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// `int M(y) dy`, which is 1.
pub fn bspline_integral(knots: &NodeSequence, cfg: &QuadratureConfig) -> Result<f64> {
    integrate_against_spline(knots, cfg, |_| 1.0)
}

/// Divided difference over the `k + 1` knots as `int M(y) D^k f(y) dy / k!`.
pub fn peano_dd<F: SmoothFunction + ?Sized>(f: &F, knots: &NodeSequence, cfg: &QuadratureConfig) -> Result<f64> {
    let k = knots.len() - 1;
    if f.max_order() < k {
        return Err(Error::InsufficientDerivatives {
            needed: k,
            available: f.max_order(),
        });
    }
    let scale = factorial(k);
    integrate_against_spline(knots, cfg, |y| f.derivative(k, y) / scale)
}
