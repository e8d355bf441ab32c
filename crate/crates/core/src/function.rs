//! Functions that can report their derivatives, the input to divided
//! differences beyond polynomials.

use num_complex::Complex64;

/// A function together with derivatives up to `max_order()`.
pub trait SmoothFunction {
    /// Highest derivative order available; `usize::MAX` means unlimited.
    fn max_order(&self) -> usize;

    /// `D^order f(x)`; callers ensure `order <= max_order()`.
    fn derivative(&self, order: usize, x: f64) -> f64;

    fn value(&self, x: f64) -> f64 {
        self.derivative(0, x)
    }
}

/// A function that can also be evaluated off the real line.
pub trait AnalyticFunction {
    fn eval_complex(&self, z: Complex64) -> Complex64;
}

impl<T: SmoothFunction + ?Sized> SmoothFunction for &T {
    fn max_order(&self) -> usize {
        (**self).max_order()
    }
    fn derivative(&self, order: usize, x: f64) -> f64 {
        (**self).derivative(order, x)
    }
}

impl<T: AnalyticFunction + ?Sized> AnalyticFunction for &T {
    fn eval_complex(&self, z: Complex64) -> Complex64 {
        (**self).eval_complex(z)
    }
}

/// `x -> exp(x)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Exp;

impl SmoothFunction for Exp {
    fn max_order(&self) -> usize {
        usize::MAX
    }
    fn derivative(&self, _order: usize, x: f64) -> f64 {
        x.exp()
    }
}

impl AnalyticFunction for Exp {
    fn eval_complex(&self, z: Complex64) -> Complex64 {
        z.exp()
    }
}

/// `x -> sin(x)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sin;

impl SmoothFunction for Sin {
    fn max_order(&self) -> usize {
        usize::MAX
    }
    fn derivative(&self, order: usize, x: f64) -> f64 {
        match order % 4 {
            0 => x.sin(),
            1 => x.cos(),
            2 => -x.sin(),
            _ => -x.cos(),
        }
    }
}

impl AnalyticFunction for Sin {
    fn eval_complex(&self, z: Complex64) -> Complex64 {
        z.sin()
    }
}

/// `x -> 1/x`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Reciprocal;

impl SmoothFunction for Reciprocal {
    fn max_order(&self) -> usize {
        usize::MAX
    }
    fn derivative(&self, order: usize, x: f64) -> f64 {
        // D^m x^{-1} = (-1)^m m! x^{-m-1}
        let sign = if order.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * factorial(order) / x.powi(order as i32 + 1)
    }
}

/// The Cauchy kernel `x -> 1/(z - x)` for a fixed `z`.
#[derive(Debug, Clone, Copy)]
pub struct CauchyKernel(pub f64);

impl SmoothFunction for CauchyKernel {
    fn max_order(&self) -> usize {
        usize::MAX
    }
    fn derivative(&self, order: usize, x: f64) -> f64 {
        factorial(order) / (self.0 - x).powi(order as i32 + 1)
    }
}

/// `x -> x^k`.
#[derive(Debug, Clone, Copy)]
pub struct Monomial(pub usize);

impl SmoothFunction for Monomial {
    fn max_order(&self) -> usize {
        usize::MAX
    }
    fn derivative(&self, order: usize, x: f64) -> f64 {
        let k = self.0;
        if order > k {
            return 0.0;
        }
        let falling: f64 = ((k - order + 1)..=k).map(|i| i as f64).product();
        falling * x.powi((k - order) as i32)
    }
}

impl AnalyticFunction for Monomial {
    fn eval_complex(&self, z: Complex64) -> Complex64 {
        z.powu(self.0 as u32)
    }
}

/// Adapter from a closure `(order, x) -> D^order f(x)`.
pub struct FromFn<F> {
    max_order: usize,
    f: F,
}

impl<F: Fn(usize, f64) -> f64> FromFn<F> {
    pub fn new(max_order: usize, f: F) -> Self {
        Self { max_order, f }
    }
}

impl<F: Fn(usize, f64) -> f64> SmoothFunction for FromFn<F> {
    fn max_order(&self) -> usize {
        self.max_order
    }
    fn derivative(&self, order: usize, x: f64) -> f64 {
        (self.f)(order, x)
    }
}

/// The derivative `Df` of a smooth function.
#[derive(Debug, Clone, Copy)]
pub struct Derivative<F>(pub F);

impl<F: SmoothFunction> SmoothFunction for Derivative<F> {
    fn max_order(&self) -> usize {
        self.0.max_order().saturating_sub(1)
    }
    fn derivative(&self, order: usize, x: f64) -> f64 {
        self.0.derivative(order + 1, x)
    }
}

/// `m!` as a float.
pub fn factorial(m: usize) -> f64 {
    (1..=m).map(|i| i as f64).product()
}
