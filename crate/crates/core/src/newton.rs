//! Horner evaluation of Newton forms, center insertion, basis change, Taylor
//! conversion, and the remainder polynomial `q_n` with
//! `p = p_n + w_n q_n`.

use crate::ddtable::divided_difference_of;
use crate::error::{Error, Result};
use crate::function::{factorial, SmoothFunction};
use crate::poly::{NewtonPoly, PowerPoly};

/// Output of nested multiplication at a point `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct Horner {
    /// `p(z)`.
    pub value: f64,
    /// `hatc[j]` is the divided difference of `p` over `(z, t_1, ..., t_j)`;
    /// these are the Newton coefficients for the centers `(z, t_1, ...)`.
    pub hatc: Vec<f64>,
}

pub fn horner_eval(p: &NewtonPoly, z: f64) -> Horner {
    let c = p.coeffs();
    let t = p.centers();
    let n = c.len();
    let mut hatc = vec![0.0; n];
    hatc[n - 1] = c[n - 1];
    for j in (0..n - 1).rev() {
        hatc[j] = c[j] + (z - t[j]) * hatc[j + 1];
    }
    Horner { value: hatc[0], hatc }
}

/// Re-expresses `p` with `z` prepended to its centers (the last center drops off).
pub fn insert_center(p: &NewtonPoly, z: f64) -> NewtonPoly {
    let Horner { hatc, .. } = horner_eval(p, z);
    let t = p.centers();
    let mut centers = Vec::with_capacity(t.len());
    if !t.is_empty() {
        centers.push(z);
        centers.extend_from_slice(&t[..t.len() - 1]);
    }
    NewtonPoly::new(centers, hatc).expect("insertion keeps the center count")
}

/// Newton form of the same polynomial with respect to `new_centers`,
/// inserting them last to first.
pub fn change_basis(p: &NewtonPoly, new_centers: &[f64]) -> Result<NewtonPoly> {
    if new_centers.len() != p.centers().len() {
        return Err(Error::LengthMismatch {
            expected: p.centers().len(),
            found: new_centers.len(),
        });
    }
    Ok(new_centers
        .iter()
        .rev()
        .fold(p.clone(), |acc, &z| insert_center(&acc, z)))
}

/// Coefficients of `p` in powers of `(x - tau)`, i.e. `D^k p(tau) / k!`.
pub fn to_taylor(p: &NewtonPoly, tau: f64) -> PowerPoly {
    PowerPoly::new(taylor_coeffs(p, tau))
}

fn taylor_coeffs(p: &NewtonPoly, tau: f64) -> Vec<f64> {
    let centers = vec![tau; p.centers().len()];
    change_basis(p, &centers).expect("same length").coeffs().to_vec()
}

/// `D^k p(tau)`.
pub fn derivative_at(p: &NewtonPoly, tau: f64, k: usize) -> f64 {
    if k >= p.len() {
        return 0.0;
    }
    if k == 0 {
        return horner_eval(p, tau).value;
    }
    factorial(k) * taylor_coeffs(p, tau)[k]
}

impl SmoothFunction for NewtonPoly {
    fn max_order(&self) -> usize {
        usize::MAX
    }

    fn derivative(&self, order: usize, x: f64) -> f64 {
        derivative_at(self, x, order)
    }
}

/// Newton form of `q_n`, the divided difference over `(t_1..t_n, .)` of `p`
/// as a function of the free argument, so that `p = p_n + w_n q_n`.
///
/// `p` is first rebased onto centers starting with `t`; its remaining
/// centers become the centers of `q_n`.
pub fn remainder_poly(p: &NewtonPoly, t: &[f64]) -> Result<NewtonPoly> {
    let n = t.len();
    if n > p.len() {
        return Err(Error::RemainderOrder {
            order: n,
            available: p.len(),
        });
    }
    let p = if n == p.len() { p.padded(&[0.0]) } else { p.clone() };
    let mut centers = t.to_vec();
    centers.extend_from_slice(&p.centers()[n..]);
    let rebased = change_basis(&p, &centers)?;
    NewtonPoly::new(rebased.centers()[n..].to_vec(), rebased.coeffs()[n..].to_vec())
}

/// The lower-order Hermite interpolant `p_n = sum_{j<n} c(j) w_j` read off a
/// Newton form whose centers start with `t`.
pub fn leading_part(p: &NewtonPoly, t: &[f64]) -> Result<NewtonPoly> {
    let n = t.len();
    if n == 0 || n > p.len() {
        return Err(Error::RemainderOrder {
            order: n,
            available: p.len(),
        });
    }
    let mut centers = t.to_vec();
    centers.extend_from_slice(&p.centers()[n.min(p.centers().len())..]);
    centers.truncate(p.centers().len());
    let rebased = change_basis(p, &centers)?;
    NewtonPoly::new(t[..n - 1].to_vec(), rebased.coeffs()[..n].to_vec())
}

/// `D^k` of `z -> [t, z] p` at `z`, computed as `k!` times the divided
/// difference of `p` over `t` extended by `k + 1` copies of `z`.
pub fn extended_dd_derivative(p: &NewtonPoly, t: &[f64], k: usize, z: f64) -> Result<f64> {
    let mut nodes = t.to_vec();
    nodes.extend(std::iter::repeat_n(z, k + 1));
    Ok(factorial(k) * divided_difference_of(p, &nodes)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ddtable::hermite_interpolant;
    use crate::nodes::{HermiteDataset, NodeSequence};

    fn x_squared() -> NewtonPoly {
        NewtonPoly::new(vec![-1.0, 0.0], vec![1.0, -1.0, 1.0]).unwrap()
    }

    #[test]
    fn horner_examples() {
        assert_eq!(horner_eval(&NewtonPoly::constant(5.0), 7.0).value, 5.0);
        let h = horner_eval(&x_squared(), 2.0);
        assert_eq!(h.value, 4.0);
        assert_eq!(h.hatc, vec![4.0, 1.0, 1.0]);
        let p = NewtonPoly::new(vec![0.5, 2.0, -1.0], vec![3.0, 1.0, -2.0, 0.5]).unwrap();
        assert_eq!(horner_eval(&p, 0.5).value, 3.0);
    }

    #[test]
    fn insert_center_examples() {
        let q = insert_center(&x_squared(), 2.0);
        assert_eq!(q.centers(), &[2.0, -1.0]);
        assert_eq!(q.coeffs(), &[4.0, 1.0, 1.0]);

        // re-inserting the first center keeps the polynomial and c(1); the
        // later coefficients become [t_1, t_1, ...] p and do change
        let p = NewtonPoly::new(vec![0.5, 2.0, -1.0], vec![3.0, 1.0, -2.0, 0.5]).unwrap();
        let q = insert_center(&p, 0.5);
        assert_eq!(q.centers(), &[0.5, 0.5, 2.0]);
        assert_eq!(q.coeffs()[0], p.coeffs()[0]);
        assert_eq!(q.coeffs()[1], derivative_at(&p, 0.5, 1));
        for k in 0..20 {
            let z = -2.0 + 0.25 * k as f64;
            assert!((q.eval(z) - p.eval(z)).abs() < 1e-12);
        }

        let c = NewtonPoly::new(vec![1.0], vec![2.5, 0.0]).unwrap();
        let q = insert_center(&c, 9.0);
        assert_eq!((q.centers(), q.coeffs()), (&[9.0][..], &[2.5, 0.0][..]));
        let q = insert_center(&NewtonPoly::constant(2.5), 9.0);
        assert_eq!(q, NewtonPoly::constant(2.5));
    }

    #[test]
    fn change_basis_examples() {
        let p = NewtonPoly::new(vec![0.5, 2.0, -1.0], vec![3.0, 1.0, -2.0, 0.5]).unwrap();
        let same = change_basis(&p, p.centers()).unwrap();
        assert_eq!(same, p);
        let q = change_basis(&x_squared(), &[0.0, 0.0]).unwrap();
        assert_eq!(q.coeffs(), &[0.0, 0.0, 1.0]);
        assert!(change_basis(&p, &[1.0]).is_err());
    }

    #[test]
    fn taylor_examples() {
        assert_eq!(to_taylor(&x_squared(), 0.0).coeffs(), &[0.0, 0.0, 1.0]);
        let t = NodeSequence::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let cube = hermite_interpolant(&HermiteDataset::new(t, vec![1.0, 8.0, 27.0, 64.0]).unwrap());
        assert_eq!(to_taylor(&cube, 2.0).coeffs(), &[8.0, 12.0, 6.0, 1.0]);
        assert_eq!(to_taylor(&NewtonPoly::constant(-3.0), 1.0).coeffs(), &[-3.0]);

        assert_eq!(derivative_at(&cube, 2.0, 2), 12.0);
        assert_eq!(derivative_at(&cube, 2.0, 4), 0.0);
        assert_eq!(derivative_at(&cube, 1.5, 0), horner_eval(&cube, 1.5).value);
    }

    #[test]
    fn remainder_examples() {
        // x^2 with first center a: q_1(z) = z + a
        let a = 0.75;
        let p = change_basis(&x_squared(), &[a, -0.5]).unwrap();
        let q = remainder_poly(&p, &[a]).unwrap();
        for k in 0..10 {
            let z = -1.0 + 0.3 * k as f64;
            assert!((q.eval(z) - (z + a)).abs() < 1e-13);
        }
        // degree n-1 polynomial with n nodes leaves nothing
        let q = remainder_poly(&x_squared(), &[0.1, 0.2, 0.3]).unwrap();
        assert_eq!(q.coeffs(), &[0.0]);
        assert!(remainder_poly(&x_squared(), &[0.0; 4]).is_err());
    }

    #[test]
    fn remainder_reconstructs_polynomial() {
        let p = NewtonPoly::new(vec![0.5, 2.0, -1.0, 0.0], vec![3.0, 1.0, -2.0, 0.5, 0.25]).unwrap();
        let t = [0.2, -0.7];
        let q = remainder_poly(&p, &t).unwrap();
        let pn = leading_part(&p, &t).unwrap();
        for k in 0..20 {
            let z = -2.0 + 0.21 * k as f64;
            let w = (z - t[0]) * (z - t[1]);
            let lhs = pn.eval(z) + w * q.eval(z);
            assert!((lhs - p.eval(z)).abs() <= 1e-11 * (1.0 + p.eval(z).abs()));
        }
    }

    #[test]
    fn extended_derivative_examples() {
        let a = 0.4;
        for z in [-1.0, 0.0, 2.5] {
            assert!((extended_dd_derivative(&x_squared(), &[a], 1, z).unwrap() - 1.0).abs() < 1e-12);
            let q = remainder_poly(&change_basis(&x_squared(), &[a, 0.0]).unwrap(), &[a]).unwrap();
            let k0 = extended_dd_derivative(&x_squared(), &[a], 0, z).unwrap();
            assert!((k0 - horner_eval(&q, z).value).abs() < 1e-12);
        }
    }

    #[test]
    fn extended_derivative_matches_central_difference() {
        let p = NewtonPoly::new(vec![0.5, 2.0, -1.0], vec![0.3, 1.0, -0.2, 0.5]).unwrap();
        let t = [0.1, 0.9];
        let h = 1e-5;
        for z in [-0.6, 0.35, 1.4] {
            let fd = (extended_dd_derivative(&p, &t, 0, z + h).unwrap()
                - extended_dd_derivative(&p, &t, 0, z - h).unwrap())
                / (2.0 * h);
            let exact = extended_dd_derivative(&p, &t, 1, z).unwrap();
            assert!((fd - exact).abs() < 1e-6, "{fd} vs {exact}");
        }
    }
}
