//! Named functions for the `--fn` flag.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context};
use divdiff::function::{Exp, Monomial, Reciprocal, Sin};
use divdiff::SmoothFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Exp,
    Sin,
    Recip,
    Power(usize),
}

impl FromStr for Builtin {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Ok(match s {
            "exp" => Self::Exp,
            "sin" => Self::Sin,
            "recip" => Self::Recip,
            _ => match s.strip_prefix("power:") {
                Some(k) => Self::Power(k.parse().with_context(|| format!("bad exponent in '{s}'"))?),
                None => bail!("unknown function '{s}' (expected exp, sin, recip or power:k)"),
            },
        })
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exp => write!(f, "exp"),
            Self::Sin => write!(f, "sin"),
            Self::Recip => write!(f, "recip"),
            Self::Power(k) => write!(f, "power:{k}"),
        }
    }
}

impl SmoothFunction for Builtin {
    fn max_order(&self) -> usize {
        usize::MAX
    }

    fn derivative(&self, order: usize, x: f64) -> f64 {
        match *self {
            Self::Exp => Exp.derivative(order, x),
            Self::Sin => Sin.derivative(order, x),
            Self::Recip => Reciprocal.derivative(order, x),
            Self::Power(k) => Monomial(k).derivative(order, x),
        }
    }
}
