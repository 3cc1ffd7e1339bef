//! Curves on a torus with a fixed (meridian, longitude) basis, integer
//! coordinate changes, and the slope bookkeeping around a belt torus
//! created by round surgery on an inconsistent chain of length `n`.

use core::fmt;
use core::ops::{Mul, Neg};

use num_integer::Integer;

use super::Rational;
use crate::Error;

/// The class `a·μ + b·λ`, with `μ = (1,0)ᵀ` and `λ = (0,1)ᵀ`.
///
/// Coordinates keep the sign produced by whatever computation built the
/// curve; use [`TorusCurve::normalized`] when an unoriented curve is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusCurve {
    pub mu: i64,
    pub lambda: i64,
}

impl TorusCurve {
    pub const MERIDIAN: Self = Self::new(1, 0);
    pub const LONGITUDE: Self = Self::new(0, 1);

    pub const fn new(mu: i64, lambda: i64) -> Self {
        Self { mu, lambda }
    }

    /// Slope `λ-coefficient / μ-coefficient`; `∞` when the μ-coefficient
    /// vanishes. Sign-blind.
    pub fn slope(&self) -> Rational {
        Rational::new(self.lambda, self.mu)
    }

    pub fn is_primitive(&self) -> bool {
        self.mu.gcd(&self.lambda) == 1
    }

    /// Same curve with its first nonzero coordinate made positive.
    pub fn normalized(self) -> Self {
        if self.mu < 0 || (self.mu == 0 && self.lambda < 0) {
            -self
        } else {
            self
        }
    }
}

impl Neg for TorusCurve {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.mu, -self.lambda)
    }
}

impl fmt::Display for TorusCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.mu, self.lambda)
    }
}

/// A 2×2 integer matrix acting on column vectors of curve coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix2 {
    pub m11: i64,
    pub m12: i64,
    pub m21: i64,
    pub m22: i64,
}

impl IntMatrix2 {
    pub const IDENTITY: Self = Self::new(1, 0, 0, 1);
    /// `S = [[0,1],[-1,0]]`
    pub const S: Self = Self::new(0, 1, -1, 0);
    /// `T = [[1,1],[0,1]]`
    pub const T: Self = Self::new(1, 1, 0, 1);

    pub const fn new(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    /// The matrix whose columns are the images of `μ` and `λ`.
    pub const fn from_columns(image_mu: TorusCurve, image_lambda: TorusCurve) -> Self {
        Self::new(
            image_mu.mu,
            image_lambda.mu,
            image_mu.lambda,
            image_lambda.lambda,
        )
    }

    pub const fn determinant(&self) -> i64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub const fn trace(&self) -> i64 {
        self.m11 + self.m22
    }

    pub fn apply(&self, c: TorusCurve) -> TorusCurve {
        TorusCurve::new(
            self.m11 * c.mu + self.m12 * c.lambda,
            self.m21 * c.mu + self.m22 * c.lambda,
        )
    }

    /// Integer inverse; `None` unless the determinant is ±1.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.determinant();
        if det.abs() != 1 {
            return None;
        }
        Some(Self::new(
            det * self.m22,
            -det * self.m12,
            -det * self.m21,
            det * self.m11,
        ))
    }

    /// `T^k` for any integer `k`.
    pub const fn t_power(k: i64) -> Self {
        Self::new(1, k, 0, 1)
    }
}

impl Mul for IntMatrix2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )
    }
}

impl Neg for IntMatrix2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.m11, -self.m12, -self.m21, -self.m22)
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.m11, self.m12, self.m21, self.m22
        )
    }
}

/// Meridian of the last unknot after `j` successive Legendrian surgeries
/// down a chain of max-tb meridians: `(j+1)·μ - j·λ`.
///
/// Each surgery along a knot with contact longitude `λ - μ` replaces the
/// current meridian `m` by `m - (λ - μ)`.
pub fn meridian_after_surgeries(j: u32) -> TorusCurve {
    let step = TorusCurve::new(-1, 1);
    let mut m = TorusCurve::MERIDIAN;
    for _ in 0..j {
        m = TorusCurve::new(m.mu - step.mu, m.lambda - step.lambda);
    }
    m
}

fn check_chain_length(n: i64) -> Result<(), Error> {
    if n < 1 {
        return Err(Error::InvalidChainLength { n });
    }
    Ok(())
}

/// Gluing map `γ: ∂N(Λ⁺) → ∂N(Λ⁻)` of round surgery on an inconsistent
/// chain of length `n`: `μ₊ ↦ (n-1)λ₋ - nμ₋` and `λ₊ - μ₊ ↦ λ₋ - μ₋`.
/// Orientation reversing.
pub fn gluing_matrix(n: i64) -> Result<IntMatrix2, Error> {
    check_chain_length(n)?;
    let image_mu = TorusCurve::new(-n, n - 1);
    let image_framing = TorusCurve::new(-1, 1);
    // γ(λ₊) = γ(λ₊ - μ₊) + γ(μ₊)
    let image_lambda = TorusCurve::new(
        image_framing.mu + image_mu.mu,
        image_framing.lambda + image_mu.lambda,
    );
    Ok(IntMatrix2::from_columns(image_mu, image_lambda))
}

/// Slopes of the standard mixed neighborhood of the belt torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MixedTorusSlopes {
    /// `(s₋₁, s₀, s₁)` in the `(μ₋, λ₋)` basis.
    pub raw: [Rational; 3],
    pub raw_curves: [TorusCurve; 3],
    pub normalizer: IntMatrix2,
    /// `(s₋₁, s₀, s₁)` after the normalizing change of coordinates.
    pub normalized: [Rational; 3],
}

pub fn mixed_torus_slopes(n: i64) -> Result<MixedTorusSlopes, Error> {
    let gamma = gluing_matrix(n)?;
    // dividing curves: γ(λ₊), λ₋ - μ₋, λ₋
    let raw_curves = [
        gamma.apply(TorusCurve::LONGITUDE),
        TorusCurve::new(-1, 1),
        TorusCurve::LONGITUDE,
    ];
    let normalizer = IntMatrix2::new(1, 1, n - 1, n);
    let raw = raw_curves.map(|c| c.slope());
    let normalized = raw_curves.map(|c| normalizer.apply(c).slope());
    Ok(MixedTorusSlopes {
        raw,
        raw_curves,
        normalizer,
        normalized,
    })
}

/// Result of splitting along the belt torus with integral slope `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitSlopes {
    /// New meridional slope on the `Λ⁺` side.
    pub plus_side: Rational,
    /// New meridional slope on the `Λ⁻` side.
    pub minus_side: Rational,
    /// The slope-`s` curve in `(μ₋, λ₋)` coordinates.
    pub curve: TorusCurve,
    /// `γ⁻¹(curve)` in `(μ₊, λ₊)` coordinates.
    pub preimage: TorusCurve,
}

pub fn split_slopes(n: i64, s: i64) -> Result<SplitSlopes, Error> {
    check_chain_length(n)?;
    if !(0..n).contains(&s) {
        return Err(Error::SplitSlopeOutOfRange { n, s });
    }
    let mixed = mixed_torus_slopes(n)?;
    let back = mixed.normalizer.inverse().ok_or(Error::NotUnimodular {
        det: mixed.normalizer.determinant(),
    })?;
    // (1, s) has slope s in normalized coordinates
    let curve = back.apply(TorusCurve::new(1, s));
    let gamma_inv = gluing_matrix(n)?
        .inverse()
        .expect("gluing map has determinant -1");
    let preimage = gamma_inv.apply(curve);
    Ok(SplitSlopes {
        plus_side: preimage.slope(),
        minus_side: curve.slope(),
        curve,
        preimage,
    })
}
