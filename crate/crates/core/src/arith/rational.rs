use core::fmt;

use num_rational::Ratio;

/// An exact slope value: a reduced fraction with positive denominator, or
/// the point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Finite(Ratio<i64>),
    Infinity,
}

impl Rational {
    pub const ZERO: Self = Rational::Finite(Ratio::new_raw(0, 1));

    /// `num / den`, reduced; `den == 0` gives `Infinity`.
    pub fn new(num: i64, den: i64) -> Self {
        if den == 0 {
            Rational::Infinity
        } else {
            Rational::Finite(Ratio::new(num, den))
        }
    }

    pub fn integer(n: i64) -> Self {
        Rational::Finite(Ratio::from_integer(n))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Rational::Infinity)
    }

    pub fn numer(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.numer()),
            Rational::Infinity => None,
        }
    }

    pub fn denom(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.denom()),
            Rational::Infinity => None,
        }
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(self) -> Self {
        match self {
            Rational::Infinity => Rational::ZERO,
            Rational::Finite(r) if *r.numer() == 0 => Rational::Infinity,
            Rational::Finite(r) => Rational::Finite(r.recip()),
        }
    }
}

impl From<Ratio<i64>> for Rational {
    fn from(r: Ratio<i64>) -> Self {
        Rational::Finite(r)
    }
}

/// Prints `p/q` with `q > 0`, or `inf`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rational::Infinity => f.write_str("inf"),
        }
    }
}
