//! The bead algorithm for the universal twisted invariant Z^ρ of a
//! (1,1)-tangle over a twisted Drinfeld double, and its scalar evaluations.
//!
//! Beads are multiplied from right to left along the orientation: the first
//! bead met on the walk is the rightmost factor. A bead that passes a dot
//! labeled Y on its way to the left is evaluated at φ_Y⁻¹. The sum over
//! R-factor summands is split across threads; exact addition makes the
//! result independent of the split.

mod plan;

use rayon::prelude::*;

use hopf_core::{HopfError, TwistedAutomorphism};
use scalar_ring::{LaurentScalar, ScalarError};
use tangle_diagram::{check_representation, TangleDiagram, TangleError, TangleRepresentation};
use twisted_double::{DoubleElement, DoubleError, RibbonData, TwistedDouble};

pub use plan::{BeadPlan, BeadTerm, CrossingBeads, Leg, PlanStep};

/// Environment variable overriding the default summand budget.
pub const TERM_BUDGET_VAR: &str = "KNOTINV_TERM_BUDGET";

/// Default maximum number of R-factor summands expanded in one invariant.
pub const DEFAULT_TERM_BUDGET: u128 = 1 << 22;

/// Errors raised while computing invariants.
#[derive(Debug, thiserror::Error)]
pub enum RtError {
    #[error("the labels do not define a representation of the tangle group")]
    NotARepresentation,
    #[error("crossing {0}: arc labels are inconsistent with the crossing")]
    LabelMismatch(usize),
    #[error("{needed} summands exceed the term budget of {budget} (set {TERM_BUDGET_VAR} to raise it)")]
    TermBudget { needed: u128, budget: u128 },
    #[error("normalized graded invariant {0} has a half-integral power of t")]
    OddExponent(String),
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Limits on the expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantOptions {
    pub term_budget: u128,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        Self { term_budget: DEFAULT_TERM_BUDGET }
    }
}

impl InvariantOptions {
    /// Reads the budget from `KNOTINV_TERM_BUDGET` when set and valid.
    pub fn from_env() -> Self {
        let term_budget =
            std::env::var(TERM_BUDGET_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_TERM_BUDGET);
        Self { term_budget }
    }
}

/// Z^ρ(T) in D(H)_{ρ(m)}, with the default budget.
pub fn universal_invariant(
    ribbon: &RibbonData<'_>,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
) -> Result<DoubleElement, RtError> {
    universal_invariant_with(ribbon, d, rho, &InvariantOptions::default())
}

/// Z^ρ(T) in D(H)_{ρ(m)}, where m is the meridian of the open strand.
pub fn universal_invariant_with(
    ribbon: &RibbonData<'_>,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
    options: &InvariantOptions,
) -> Result<DoubleElement, RtError> {
    let dbl = ribbon.double();
    if !check_representation(d, rho, dbl.hopf())? {
        return Err(RtError::NotARepresentation);
    }
    let plan = BeadPlan::new(ribbon, d, rho)?;
    let needed = plan.term_count();
    if needed > options.term_budget {
        return Err(RtError::TermBudget { needed, budget: options.term_budget });
    }
    let radices: Vec<usize> = plan.crossings.iter().map(|c| c.terms.len()).collect();
    let zero = || DoubleElement::zero(plan.grading.clone(), dbl.dim());
    let total = (0..needed as u64)
        .into_par_iter()
        .fold(zero, |acc, index| acc.add(&plan.evaluate(dbl, &mixed_radix(index, &radices))))
        .reduce(zero, |a, b| a.add(&b));
    Ok(total)
}

fn mixed_radix(mut index: u64, radices: &[usize]) -> Vec<usize> {
    radices
        .iter()
        .map(|&r| {
            let digit = (index % r as u64) as usize;
            index /= r as u64;
            digit
        })
        .collect()
}

/// ε_D(z) = p(1)ε(h) extended linearly.
pub fn counit_eval(dbl: &TwistedDouble, z: &DoubleElement) -> LaurentScalar {
    dbl.counit(z)
}

/// r_H(ρ(m))^{w/2}·ε(Z^ρ), with w the writhe. For a graded
/// representation r_H includes the factor t^{|Λ_l|} of the shift, so this is
/// r_H(m)^{w/2} t^{|Λ_l| w/2} ε(Z^{ρ⊗h}); the result must then lie in κ[t^{±1}].
pub fn normalized_polynomial(
    ribbon: &RibbonData<'_>,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
) -> Result<LaurentScalar, RtError> {
    let z = universal_invariant_with(ribbon, d, rho, &InvariantOptions::from_env())?;
    normalize(ribbon, d, rho, &counit_eval(ribbon.double(), &z))
}

/// Applies the writhe normalization to a counit value.
pub fn normalize(
    ribbon: &RibbonData<'_>,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
    counit: &LaurentScalar,
) -> Result<LaurentScalar, RtError> {
    let meridian = rho.image(0);
    let factor = ribbon.sqrt_r(meridian)?.pow(d.writhe())?;
    let p = &factor * counit;
    if rho.graded() && !p.has_integral_t_powers() {
        return Err(RtError::OddExponent(p.to_string()));
    }
    Ok(p)
}

/// Z^{ρ_β} computed directly, and φ_β(Z^ρ), for comparison.
pub fn conjugated_invariant(
    ribbon: &RibbonData<'_>,
    d: &TangleDiagram,
    rho: &TangleRepresentation,
    beta: &TwistedAutomorphism,
) -> Result<(DoubleElement, DoubleElement), RtError> {
    let direct = universal_invariant(ribbon, d, &rho.conjugated(beta)?)?;
    let mapped = ribbon.double().phi(beta, &universal_invariant(ribbon, d, rho)?)?;
    Ok((direct, mapped))
}
