//! Hyperbolic torus-bundle monodromies written as
//! `A = ±T^{-a₀} S T^{-a₁} S ⋯ T^{-aₙ} S` with `a₀ ≥ 3` and `aᵢ ≥ 2`.

use alloc::vec::Vec;
use core::fmt;

use super::IntMatrix2;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonodromySign {
    Positive,
    Negative,
}

impl MonodromySign {
    pub fn as_i64(self) -> i64 {
        match self {
            MonodromySign::Positive => 1,
            MonodromySign::Negative => -1,
        }
    }
}

impl fmt::Display for MonodromySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonodromySign::Positive => "+",
            MonodromySign::Negative => "-",
        })
    }
}

/// Sign and exponents `(a₀, …, aₙ)`. Ordered by sign (positive first) and
/// then lexicographically by exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonodromyWord {
    sign: MonodromySign,
    exponents: Vec<i64>,
}

impl MonodromyWord {
    pub fn new(sign: MonodromySign, exponents: Vec<i64>) -> Result<Self, Error> {
        let Some(&first) = exponents.first() else {
            return Err(Error::EmptyExponents);
        };
        if first < 3 {
            return Err(Error::ExponentTooSmall {
                index: 0,
                value: first,
                min: 3,
            });
        }
        if let Some((i, &value)) = exponents.iter().enumerate().skip(1).find(|(_, &a)| a < 2) {
            return Err(Error::ExponentTooSmall {
                index: i,
                value,
                min: 2,
            });
        }
        Ok(Self { sign, exponents })
    }

    pub fn sign(&self) -> MonodromySign {
        self.sign
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Number of unknots in the associated cyclic chain (`n + 1`).
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }
}

impl fmt::Display for MonodromyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.sign)?;
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// `T^{-a} S = [[a, 1], [-1, 0]]`
fn step(a: i64) -> IntMatrix2 {
    IntMatrix2::new(a, 1, -1, 0)
}

pub fn monodromy_matrix(w: &MonodromyWord) -> IntMatrix2 {
    let product = w
        .exponents
        .iter()
        .fold(IntMatrix2::IDENTITY, |acc, &a| acc * step(a));
    match w.sign {
        MonodromySign::Positive => product,
        MonodromySign::Negative => -product,
    }
}

/// A successful factorization: the least matching word plus any other
/// words within the search bounds producing the same matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub word: MonodromyWord,
    pub ties: Vec<MonodromyWord>,
}

/// Exhaustive search over words with at most `max_n + 1` exponents, each
/// at most `max_a`, for an exact match with `a`. `Ok(None)` when nothing
/// within the bounds matches.
pub fn factor_monodromy(
    a: IntMatrix2,
    max_n: usize,
    max_a: i64,
) -> Result<Option<Factorization>, Error> {
    let det = a.determinant();
    if det != 1 {
        return Err(Error::NotUnimodular { det });
    }
    if a.trace().abs() <= 2 {
        return Err(Error::NotHyperbolic { trace: a.trace() });
    }
    let mut found = Vec::new();
    let mut exps = Vec::with_capacity(max_n + 1);
    for a0 in 3..=max_a {
        exps.push(a0);
        search(&a, step(a0), max_n, max_a, &mut exps, &mut found);
        exps.pop();
    }
    found.sort();
    let mut it = found.into_iter();
    Ok(it.next().map(|word| Factorization {
        word,
        ties: it.collect(),
    }))
}

fn search(
    target: &IntMatrix2,
    product: IntMatrix2,
    max_n: usize,
    max_a: i64,
    exps: &mut Vec<i64>,
    found: &mut Vec<MonodromyWord>,
) {
    if product == *target {
        found.push(MonodromyWord {
            sign: MonodromySign::Positive,
            exponents: exps.clone(),
        });
    }
    if -product == *target {
        found.push(MonodromyWord {
            sign: MonodromySign::Negative,
            exponents: exps.clone(),
        });
    }
    if exps.len() > max_n {
        return;
    }
    for ai in 2..=max_a {
        exps.push(ai);
        search(target, product * step(ai), max_n, max_a, exps, found);
        exps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn word(sign: MonodromySign, e: &[i64]) -> MonodromyWord {
        MonodromyWord::new(sign, e.to_vec()).unwrap()
    }

    #[test]
    fn step_is_t_inverse_power_times_s() {
        for a in 2..8 {
            assert_eq!(step(a), IntMatrix2::t_power(-a) * IntMatrix2::S);
        }
    }

    #[test]
    fn matrices() {
        use MonodromySign::*;
        let m = monodromy_matrix(&word(Positive, &[3]));
        assert_eq!(m, IntMatrix2::new(3, 1, -1, 0));
        assert_eq!(m.trace(), 3);
        let m = monodromy_matrix(&word(Positive, &[3, 2]));
        assert_eq!(m, IntMatrix2::new(5, 3, -2, -1));
        assert_eq!(m.trace(), 4);
        let m = monodromy_matrix(&word(Negative, &[3, 2]));
        assert_eq!(m, IntMatrix2::new(-5, -3, 2, 1));
        assert_eq!(m.trace(), -4);
    }

    #[test]
    fn word_validation() {
        use MonodromySign::*;
        assert!(MonodromyWord::new(Positive, vec![]).is_err());
        assert!(MonodromyWord::new(Positive, vec![2, 3]).is_err());
        assert!(MonodromyWord::new(Negative, vec![3, 1]).is_err());
    }

    #[test]
    fn factoring() {
        use MonodromySign::*;
        let f = factor_monodromy(IntMatrix2::new(3, 1, -1, 0), 3, 5)
            .unwrap()
            .unwrap();
        assert_eq!(f.word, word(Positive, &[3]));
        assert!(f.ties.is_empty());
        let f = factor_monodromy(IntMatrix2::new(5, 3, -2, -1), 3, 5)
            .unwrap()
            .unwrap();
        assert_eq!(f.word, word(Positive, &[3, 2]));
        assert_eq!(
            factor_monodromy(IntMatrix2::new(2, 1, 1, 1), 0, 3).unwrap(),
            None
        );
    }

    #[test]
    fn factoring_rejects_bad_input() {
        assert!(matches!(
            factor_monodromy(IntMatrix2::new(2, 0, 0, 2), 2, 4),
            Err(Error::NotUnimodular { det: 4 })
        ));
        assert!(matches!(
            factor_monodromy(IntMatrix2::new(1, 1, 0, 1), 2, 4),
            Err(Error::NotHyperbolic { trace: 2 })
        ));
    }
}
