//! Numbers that stay exact until a square root forces them not to.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::Rational;

/// Either an exact rational or a double carrying a 1e-12 tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quantity {
    Exact(Rational),
    Approx(f64),
}

/// Tolerance promised for every `Approx` result.
pub const TOLERANCE: f64 = 1e-12;

fn exact_sqrt_i64(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Exact rational square root when both numerator and denominator are squares.
pub fn rational_sqrt(x: Rational) -> Option<Rational> {
    let n = exact_sqrt_i64(*x.numer())?;
    let d = exact_sqrt_i64(*x.denom())?;
    Some(Rational::new(n, d))
}

pub fn to_f64(x: Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

impl Quantity {
    /// Square root of a non-negative rational.
    pub fn sqrt(x: Rational) -> Quantity {
        match rational_sqrt(x) {
            Some(r) => Quantity::Exact(r),
            None => Quantity::Approx(to_f64(x).sqrt()),
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Quantity::Exact(r) => to_f64(r),
            Quantity::Approx(f) => f,
        }
    }

    pub fn exact(self) -> Option<Rational> {
        match self {
            Quantity::Exact(r) => Some(r),
            Quantity::Approx(_) => None,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Quantity::Exact(_))
    }

    pub fn is_zero(self) -> bool {
        match self {
            Quantity::Exact(r) => r.is_zero(),
            Quantity::Approx(f) => f == 0.0,
        }
    }

    /// Exact equality for exact values, otherwise agreement within `tol`
    /// relative to the larger magnitude (absolute below 1).
    pub fn approx_eq(self, other: Quantity, tol: f64) -> bool {
        match (self, other) {
            (Quantity::Exact(a), Quantity::Exact(b)) => a == b,
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
            }
        }
    }

    pub fn abs(self) -> Quantity {
        match self {
            Quantity::Exact(r) => Quantity::Exact(r.abs()),
            Quantity::Approx(f) => Quantity::Approx(f.abs()),
        }
    }
}

impl From<Rational> for Quantity {
    fn from(r: Rational) -> Self {
        Quantity::Exact(r)
    }
}

impl From<i64> for Quantity {
    fn from(n: i64) -> Self {
        Quantity::Exact(Rational::from(n))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Exact(r) => write!(f, "{r}"),
            Quantity::Approx(x) => write!(f, "{x:.15}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Quantity {
            type Output = Quantity;

            fn $method(self, rhs: Quantity) -> Quantity {
                match (self, rhs) {
                    (Quantity::Exact(a), Quantity::Exact(b)) => Quantity::Exact(a $op b),
                    (a, b) => Quantity::Approx(a.to_f64() $op b.to_f64()),
                }
            }
        }

        impl $trait<Rational> for Quantity {
            type Output = Quantity;

            fn $method(self, rhs: Rational) -> Quantity {
                self $op Quantity::Exact(rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Div, div, /);

impl Mul for Quantity {
    type Output = Quantity;

    fn mul(self, rhs: Quantity) -> Quantity {
        match (self, rhs) {
            (Quantity::Exact(a), Quantity::Exact(b)) => Quantity::Exact(a * b),
            // an exact zero annihilates even an approximate factor
            (Quantity::Exact(z), _) | (_, Quantity::Exact(z)) if z.is_zero() => {
                Quantity::Exact(Rational::zero())
            }
            (a, b) => Quantity::Approx(a.to_f64() * b.to_f64()),
        }
    }
}

impl Mul<Rational> for Quantity {
    type Output = Quantity;

    fn mul(self, rhs: Rational) -> Quantity {
        self * Quantity::Exact(rhs)
    }
}

impl Neg for Quantity {
    type Output = Quantity;

    fn neg(self) -> Quantity {
        match self {
            Quantity::Exact(r) => Quantity::Exact(-r),
            Quantity::Approx(f) => Quantity::Approx(-f),
        }
    }
}
