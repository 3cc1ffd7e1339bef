//! Negative (Hirzebruch–Jung) continued fractions
//! `-p/q = -a₁ - 1/(-a₂ - 1/(… - 1/(-aₙ)))` with every `aᵢ ≥ 2`.

use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;

use super::Rational;
use crate::Error;

/// Expansion of `-p/q` for coprime `p > q ≥ 1`, via the ceiling recurrence
/// `a = ⌈p/q⌉`, `(p, q) ← (q, a·q - p)`.
pub fn neg_cf_expand(p: i64, q: i64) -> Result<Vec<i64>, Error> {
    if q < 1 || p <= q || p.gcd(&q) != 1 {
        return Err(Error::InvalidFraction { p, q });
    }
    let (mut p, mut q) = (p, q);
    let mut out = Vec::new();
    while q != 0 {
        let a = Integer::div_ceil(&p, &q);
        out.push(a);
        (p, q) = (q, a * q - p);
    }
    Ok(out)
}

pub fn neg_cf_evaluate(a: &[i64]) -> Result<Rational, Error> {
    check_exponents(a)?;
    let mut value = Ratio::from_integer(-a[a.len() - 1]);
    for &ai in a[..a.len() - 1].iter().rev() {
        value = Ratio::from_integer(-ai) - value.recip();
    }
    Ok(Rational::Finite(value))
}

pub(crate) fn check_exponents(a: &[i64]) -> Result<(), Error> {
    if a.is_empty() {
        return Err(Error::EmptyExponents);
    }
    if let Some((index, &value)) = a.iter().enumerate().find(|(_, &x)| x < 2) {
        return Err(Error::ExponentTooSmall {
            index,
            value,
            min: 2,
        });
    }
    Ok(())
}
