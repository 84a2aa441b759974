//! Twisted Kuperberg invariants from Heegaard diagrams of knot closures.
//!
//! A tangle diagram whose strand ends on an underpass gives a Heegaard
//! diagram with g−1 α-curves and g−1 closed β-curves (g crossings). Placing
//! cointegral coproducts on α-curves and integral products on β-curves gives
//! a tensor network whose exact contraction, times (−1)^{|Λ|(g−1)}, is
//! Z_Kup. For involutory H it satisfies ε(Z^ρ) = √r_H(m)^{−r}·Z_Kup, where r
//! is the clockwise rotation number.

mod heegaard;
mod network;

use hopf_core::{integral_pair, HopfError};
use rt_invariant::{counit_eval, universal_invariant, RtError};
use scalar_ring::{LaurentScalar, ScalarError, UnitWitness};
use tangle_diagram::{check_representation, TangleDiagram, TangleError, TangleRepresentation};
use twisted_double::{DoubleError, RibbonData};

pub use heegaard::{
    heegaard_from_diagram, AlphaCurve, AlphaOrientation, BetaCurve, BetaTarget, HeegaardData, IntersectionPoint, Slot,
};
pub use network::{AlphaTensor, BetaFunctional, KuperbergNetwork};

/// Errors raised while building or contracting the network.
#[derive(Debug, thiserror::Error)]
pub enum KuperbergError {
    #[error(
        "the last crossing along the strand is an overpass; move the open point so the strand ends on an underpass"
    )]
    LastCrossingOver,
    #[error("the Hopf algebra is not involutory")]
    NotInvolutory,
    #[error("the labels do not define a representation of the knot group")]
    NotARepresentation,
    #[error("the contraction schedule is not a permutation of the α-curves")]
    Schedule,
    #[error("some β-legs were never matched")]
    Unmatched,
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error(transparent)]
    Rt(#[from] RtError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Builds the network for the standard α-orientation.
pub fn kuperberg_network(
    h: &hopf_core::HopfAlgebraData,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
    orientation: AlphaOrientation,
) -> Result<KuperbergNetwork, KuperbergError> {
    if !h.is_involutory() {
        return Err(KuperbergError::NotInvolutory);
    }
    if !check_representation(d, rho, h)? {
        return Err(KuperbergError::NotARepresentation);
    }
    let hd = heegaard_from_diagram(d, orientation)?;
    KuperbergNetwork::new(h, &integral_pair(h)?, &hd, rho)
}

/// Z_Kup with the greedy schedule.
pub fn kuperberg_contract(
    h: &hopf_core::HopfAlgebraData,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
) -> Result<LaurentScalar, KuperbergError> {
    kuperberg_contract_with(h, d, rho, AlphaOrientation::Standard, None)
}

/// Z_Kup for a given orientation and schedule (greedy when `None`).
pub fn kuperberg_contract_with(
    h: &hopf_core::HopfAlgebraData,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
    orientation: AlphaOrientation,
    schedule: Option<&[usize]>,
) -> Result<LaurentScalar, KuperbergError> {
    let net = kuperberg_network(h, d, rho, orientation)?;
    let integrals = integral_pair(h)?;
    let greedy;
    let schedule = match schedule {
        Some(s) => s,
        None => {
            greedy = net.greedy_schedule();
            &greedy
        }
    };
    let z = net.contract(h, &integrals, schedule)?;
    let flips = integrals.parity(h) as usize * net.alphas.len();
    Ok(if flips % 2 == 1 { -z } else { z })
}

/// Both sides of ε(Z^ρ) = √r_H(m)^{−r}·Z_Kup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub counit: LaurentScalar,
    pub kuperberg: LaurentScalar,
    /// √r_H(m)^{−r} with r the clockwise rotation number.
    pub factor: LaurentScalar,
    /// The identity holds exactly.
    pub exact: bool,
    /// ε(Z^ρ) = ±s^{k|Λ|}·Z_Kup.
    pub up_to_unit: Option<UnitWitness>,
}

/// Runs the bead algorithm and the contraction on the same data.
pub fn compare_main_theorem(
    ribbon: &RibbonData<'_>,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
) -> Result<MainTheoremReport, KuperbergError> {
    let dbl = ribbon.double();
    let h = dbl.hopf();
    let counit = counit_eval(dbl, &universal_invariant(ribbon, d, rho)?);
    let kuperberg = kuperberg_contract(h, d, rho)?;
    let factor = ribbon.sqrt_r(rho.image(0))?.pow(-d.rotation_cw())?;
    let exact = counit == &factor * &kuperberg;
    let step = ribbon.integrals().degree(h).unsigned_abs() as u32;
    let up_to_unit = counit.equal_up_to_unit(&kuperberg, step);
    Ok(MainTheoremReport { counit, kuperberg, factor, exact, up_to_unit })
}
