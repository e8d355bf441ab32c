//! Polynomial representations: Newton form and power form.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::function::{factorial, AnalyticFunction, SmoothFunction};

/// `p = sum_j c(j) w_{j-1}` with `w_i(x) = (x - t_1)...(x - t_i)`.
///
/// `coeffs.len() == centers.len() + 1`; the degree is below `coeffs.len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonPoly {
    centers: Vec<f64>,
    coeffs: Vec<f64>,
}

impl NewtonPoly {
    pub fn new(centers: Vec<f64>, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != centers.len() + 1 {
            return Err(Error::LengthMismatch {
                expected: centers.len() + 1,
                found: coeffs.len(),
            });
        }
        Ok(Self { centers, coeffs })
    }

    pub fn constant(c: f64) -> Self {
        Self {
            centers: Vec::new(),
            coeffs: vec![c],
        }
    }

    /// The Newton form with all centers at zero is the power form.
    pub fn from_power(p: &PowerPoly) -> Self {
        let coeffs = if p.coeffs().is_empty() {
            vec![0.0]
        } else {
            p.coeffs().to_vec()
        };
        Self {
            centers: vec![0.0; coeffs.len() - 1],
            coeffs,
        }
    }

    /// The Newton polynomial `w_n` for the first `n` entries of `t`.
    pub fn newton_basis(t: &[f64], n: usize) -> Self {
        let mut coeffs = vec![0.0; n + 1];
        coeffs[n] = 1.0;
        Self {
            centers: t[..n].to_vec(),
            coeffs,
        }
    }

    pub fn centers(&self) -> &[f64] {
        &self.centers
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Number of coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Nested multiplication from the inside out.
    pub fn eval(&self, z: f64) -> f64 {
        let n = self.coeffs.len();
        let mut acc = self.coeffs[n - 1];
        for j in (0..n - 1).rev() {
            acc = self.coeffs[j] + (z - self.centers[j]) * acc;
        }
        acc
    }

    /// Pads with zero coefficients (on the given extra centers).
    pub(crate) fn padded(&self, extra_centers: &[f64]) -> Self {
        let mut centers = self.centers.clone();
        centers.extend_from_slice(extra_centers);
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(centers.len() + 1, 0.0);
        Self { centers, coeffs }
    }
}

impl AnalyticFunction for NewtonPoly {
    fn eval_complex(&self, z: Complex64) -> Complex64 {
        let n = self.coeffs.len();
        let mut acc = Complex64::from(self.coeffs[n - 1]);
        for j in (0..n - 1).rev() {
            acc = self.coeffs[j] + (z - self.centers[j]) * acc;
        }
        acc
    }
}

/// Power form `sum_k a_k x^k`, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PowerPoly {
    coeffs: Vec<f64>,
}

impl PowerPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0.0; k + 1];
        c[k] = 1.0;
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &a| acc * x + a)
    }

    pub fn derivative_poly(&self) -> PowerPoly {
        PowerPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &a)| k as f64 * a)
                .collect(),
        )
    }

    pub fn mul(&self, other: &PowerPoly) -> PowerPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return PowerPoly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerPoly::new(out)
    }

    /// `p(a x + b)`.
    pub fn compose_affine(&self, a: f64, b: f64) -> PowerPoly {
        let lin = PowerPoly::new(vec![b, a]);
        let mut out = PowerPoly::zero();
        for &c in self.coeffs.iter().rev() {
            out = out.mul(&lin).add(&PowerPoly::new(vec![c]));
        }
        out
    }

    pub fn add(&self, other: &PowerPoly) -> PowerPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        PowerPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&0.0) + other.coeffs.get(k).unwrap_or(&0.0))
                .collect(),
        )
    }
}

impl SmoothFunction for PowerPoly {
    fn max_order(&self) -> usize {
        usize::MAX
    }

    fn derivative(&self, order: usize, x: f64) -> f64 {
        if order >= self.coeffs.len() {
            return 0.0;
        }
        let mut acc = 0.0;
        for k in (order..self.coeffs.len()).rev() {
            let falling = factorial(k) / factorial(k - order);
            acc = acc * x + falling * self.coeffs[k];
        }
        acc
    }
}

impl AnalyticFunction for PowerPoly {
    fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }
}
