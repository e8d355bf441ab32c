use crate::ddtable::divided_difference_of;
use crate::error::{Error, Result};
use crate::function::SmoothFunction;
use crate::poly::NewtonPoly;

/// Expansion of the divided difference over `s` in divided differences over
/// initial segments of `t`, plus the remainder in two forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloaterExpansion {
    /// `sum_{j=m}^{n} [s] w_{j-1,t} * [t_1..t_j] f`.
    pub truncation: f64,
    /// Remainder from the Leibniz rule applied to `w_{n,t} [t, .] f`:
    /// `sum_{i=1}^{m} [s_i..s_m] w_{n,t} * [t_1..t_n, s_1..s_i] f`.
    pub e_leibniz: f64,
    /// Remainder with every divided difference of order `n`:
    /// `sum_{i=1}^{m} (s_i - t_{i+p}) [s_1..s_i] w_{i+p-1,t} * [t_1..t_{i+p}, s_i..s_m] f`,
    /// `p = n - m`.
    pub e_floater: f64,
    /// `[s] f` computed directly.
    pub direct: f64,
}

fn concat(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().chain(b).copied().collect()
}

/// Requires `1 <= s.len() <= t.len()`. Node multisets that mix `s` and `t`
/// are clustered on the fly, so `f` must supply derivatives wherever
/// entries coincide.
pub fn floater_expansion<F: SmoothFunction + ?Sized>(s: &[f64], t: &[f64], f: &F) -> Result<FloaterExpansion> {
    let (m, n) = (s.len(), t.len());
    if m == 0 {
        return Err(Error::EmptyNodes);
    }
    if m > n {
        return Err(Error::InvalidArgument("s must not be longer than t"));
    }
    let p = n - m;
    let w = |j: usize| NewtonPoly::newton_basis(t, j);

    let mut truncation = 0.0;
    for j in m..=n {
        truncation += divided_difference_of(&w(j - 1), s)? * divided_difference_of(f, &t[..j])?;
    }

    let w_n = w(n);
    let mut e_leibniz = 0.0;
    for i in 1..=m {
        let weight = divided_difference_of(&w_n, &s[i - 1..])?;
        if weight != 0.0 {
            e_leibniz += weight * divided_difference_of(f, &concat(t, &s[..i]))?;
        }
    }

    let mut e_floater = 0.0;
    for i in 1..=m {
        let gap = s[i - 1] - t[i + p - 1];
        if gap == 0.0 {
            continue;
        }
        let weight = divided_difference_of(&w(i + p - 1), &s[..i])?;
        e_floater += gap * weight * divided_difference_of(f, &concat(&t[..i + p], &s[i - 1..]))?;
    }

    Ok(FloaterExpansion {
        truncation,
        e_leibniz,
        e_floater,
        direct: divided_difference_of(f, s)?,
    })
}

/// `sum_{i=1}^{m} (s_i - t_i) [s_1..s_i, t_i..t_m] f`, which equals
/// `[s] f - [t] f` for sequences of equal length.
pub fn hopf_anchor<F: SmoothFunction + ?Sized>(s: &[f64], t: &[f64], f: &F) -> Result<f64> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch {
            expected: s.len(),
            found: t.len(),
        });
    }
    if s.is_empty() {
        return Err(Error::EmptyNodes);
    }
    let mut sum = 0.0;
    for i in 0..s.len() {
        let gap = s[i] - t[i];
        if gap != 0.0 {
            sum += gap * divided_difference_of(f, &concat(&s[..=i], &t[i..]))?;
        }
    }
    Ok(sum)
}
