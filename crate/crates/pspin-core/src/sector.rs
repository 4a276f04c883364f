//! Stokes sectors and the formal sector moment.
//!
//! The contour integral `∫ du u^A e^{-cσu^p}` along the ray of one Stokes
//! sector evaluates, after `u → (cσ)^{-1/p} u^{1/p}`, to
//! `Γ((A+1)/p)/|p| · (cσ)^{-(A+1)/p}` times an exact root-of-unity phase.
//! Phases are rational turns (multiples of 2π), never floats: the R/NS split
//! depends on their exact cancellation.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coefficient::Coefficient;
use crate::error::{ExactError, ExactResult};
use crate::gamma::GammaFactor;
use crate::rational::{is_nonpositive_integer, Rat};

/// One Stokes sector: its spin label and its ray direction in exact turns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorPhase {
    pub sector_index: Rat,
    /// Ray angle as a fraction of a full turn, normalized into [0, 1).
    pub turns: Rat,
}

impl SectorPhase {
    pub fn new(sector_index: Rat, turns: Rat) -> Self {
        SectorPhase {
            sector_index,
            turns: normalize_turns(turns),
        }
    }

    /// The k-th of n root-of-unity directions, labelled by `l`.
    pub fn root_of_unity(l: Rat, k: i64, n: i64) -> Self {
        SectorPhase::new(l, Rat::new(k.into(), n.into()))
    }
}

fn normalize_turns(mut t: Rat) -> Rat {
    let one = Rat::from_integer(1.into());
    while t.is_negative() {
        t += &one;
    }
    while t >= one {
        t -= &one;
    }
    t
}

/// Result of integrating one monomial along a sector ray.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorMoment {
    /// Rational 1/|p| times Γ((A+1)/p), coupling power -(A+1)/p.
    pub coefficient: Coefficient,
    /// σ exponent contributed by the moment: -(A+1)/p.
    pub sigma_exponent: Rat,
    /// The ray phase, carried separately and exactly.
    pub phase: SectorPhase,
}

/// Formal value of `∫ du u^A e^{-cσu^p}` in the given sector.
pub fn sector_moment(a: &Rat, p: &Rat, sector: &SectorPhase) -> ExactResult<SectorMoment> {
    if p.is_zero() {
        return Err(ExactError::ZeroSpin);
    }
    let gamma_arg = (a + Rat::from_integer(1.into())) / p;
    if is_nonpositive_integer(&gamma_arg) {
        return Err(ExactError::Pole { argument: gamma_arg });
    }
    let mut gamma = GammaFactor::one();
    let prefactor = gamma.push(gamma_arg.clone(), 1)?;
    let coefficient = Coefficient {
        rational: prefactor / p.abs(),
        gamma,
        coupling_power: -gamma_arg.clone(),
    };
    Ok(SectorMoment {
        coefficient,
        sigma_exponent: -gamma_arg,
        phase: sector.clone(),
    })
}
