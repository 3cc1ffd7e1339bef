//! Legendrian unknots described by their stabilization counts.

use core::fmt;

use crate::Error;

/// A Legendrian unknot in the standard tight 3-sphere, recorded as the
/// number of positive and negative stabilizations applied to the
/// max-tb unknot (tb = -1, rot = 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnknotDescriptor {
    pub tb: i64,
    pub rot: i64,
    pub s_plus: u32,
    pub s_minus: u32,
}

impl UnknotDescriptor {
    /// The max-tb unknot.
    pub const MAX_TB: Self = Self::from_stabilizations(0, 0);

    pub const fn from_stabilizations(s_plus: u32, s_minus: u32) -> Self {
        Self {
            tb: -1 - s_plus as i64 - s_minus as i64,
            rot: s_plus as i64 - s_minus as i64,
            s_plus,
            s_minus,
        }
    }

    /// Solves `tb = -1 - s+ - s-`, `rot = s+ - s-` for the stabilization
    /// counts. Fails on parity mismatch or `|rot| > -1 - tb`.
    pub fn from_tb_rot(tb: i64, rot: i64) -> Result<Self, Error> {
        let total = -1 - tb;
        if total < 0 || rot.abs() > total || (total - rot) % 2 != 0 {
            return Err(Error::InvalidUnknot { tb, rot });
        }
        let s_plus = (total + rot) / 2;
        let s_minus = (total - rot) / 2;
        Ok(Self::from_stabilizations(s_plus as u32, s_minus as u32))
    }

    pub fn stabilizations(&self) -> u32 {
        self.s_plus + self.s_minus
    }

    pub fn is_max_tb(&self) -> bool {
        self.stabilizations() == 0
    }

    /// True when stabilized at least once with each sign.
    pub fn is_mixed(&self) -> bool {
        self.s_plus > 0 && self.s_minus > 0
    }

    /// Signs (+1 / -1) of the stabilizations present on this unknot.
    pub fn stabilization_signs(&self) -> impl Iterator<Item = i64> {
        let plus = (self.s_plus > 0).then_some(1);
        let minus = (self.s_minus > 0).then_some(-1);
        plus.into_iter().chain(minus)
    }

    /// Splits into the pair `(Λ⁺, Λ⁻)` used when the unknot is pinched
    /// along a belt sphere: `Λ⁺` keeps every positive stabilization and
    /// `Λ⁻` every negative one. The connected sum of the two recovers
    /// the original unknot.
    pub fn split(&self) -> (Self, Self) {
        (
            Self::from_stabilizations(self.s_plus, 0),
            Self::from_stabilizations(0, self.s_minus),
        )
    }
}

impl fmt::Display for UnknotDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(tb={},rot={})", self.tb, self.rot)
    }
}
