use super::quadrature::gauss_legendre;
use super::QuadratureConfig;
use crate::error::{Error, Result};
use crate::function::SmoothFunction;
use crate::nodes::NodeSequence;

/// Divided difference over `tau_0..tau_n` as the integral of `D^n f` over
/// the simplex `1 >= s_1 >= ... >= s_n >= 0`, evaluated at
/// `tau_0 + sum_i s_i (tau_i - tau_{i-1})`.
///
/// Iterated Gauss–Legendre with `gauss_order` points per dimension; each
/// inner variable runs over `[0, s_{i-1}]`. Cost is `gauss_order^n`.
pub fn genocchi_dd<F: SmoothFunction + ?Sized>(f: &F, t: &NodeSequence, cfg: &QuadratureConfig) -> Result<f64> {
    let tau = t.nodes();
    let n = tau.len() - 1;
    if f.max_order() < n {
        return Err(Error::InsufficientDerivatives {
            needed: n,
            available: f.max_order(),
        });
    }
    if cfg.gauss_order == 0 {
        return Err(Error::InvalidArgument("gauss_order must be positive"));
    }
    let rule = gauss_legendre(cfg.gauss_order);
    let steps: Vec<f64> = tau.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(nested(f, n, &steps, &rule, 0, 1.0, tau[0]))
}

fn nested<F: SmoothFunction + ?Sized>(
    f: &F,
    n: usize,
    steps: &[f64],
    rule: &(Vec<f64>, Vec<f64>),
    level: usize,
    upper: f64,
    x: f64,
) -> f64 {
    if level == n {
        return f.derivative(n, x);
    }
    let half = 0.5 * upper;
    rule.0
        .iter()
        .zip(&rule.1)
        .map(|(&g, &w)| {
            let s = half * (1.0 + g);
            w * nested(f, n, steps, rule, level + 1, s, x + s * steps[level])
        })
        .sum::<f64>()
        * half
}
