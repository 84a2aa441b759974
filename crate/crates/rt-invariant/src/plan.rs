//! Bead placement along the walk of a diagram.
//!
//! A crossing whose bottom-left strand goes over (σ) carries R_{a,b}; the
//! other kind (σ⁻¹) carries R̄_{a,b}. Here a and b are the labels of the over
//! and under strands oriented upward. The first leg lands on the over strand
//! and the second leg on the under strand. A leg on a downward strand gets
//! the antipode. The under strand also meets a crossing-map dot labeled Y: Y
//! is a for σ and a⁻¹ for σ⁻¹, inverted when the under strand runs down. A
//! clockwise cap carries the pivot g_α and a counterclockwise cup carries
//! g_α⁻¹; other turns carry nothing.

use std::sync::Arc;

use hopf_core::TwistedAutomorphism;
use scalar_ring::LaurentScalar;
use tangle_diagram::{TangleDiagram, TangleRepresentation, TurnKind, WalkStep};
use twisted_double::{DoubleElement, RibbonData, TwistedDouble};

use crate::RtError;

type Sparse = Vec<(usize, LaurentScalar)>;

/// Which leg of a crossing's R-factor a bead comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Leg {
    Over,
    Under,
}

/// One summand s⊗t of a crossing's R-factor, already decorated.
#[derive(Clone, Debug)]
pub struct BeadTerm {
    pub coeff: LaurentScalar,
    pub over: DoubleElement,
    pub under: DoubleElement,
    pub over_odd: bool,
    pub under_odd: bool,
}

/// The R-factor data of one crossing.
#[derive(Clone, Debug)]
pub struct CrossingBeads {
    pub crossing: usize,
    pub sigma: bool,
    /// Upward labels a (over) and b (under) of the R-factor R_{a,b} or R̄_{a,b}.
    pub a: TwistedAutomorphism,
    pub b: TwistedAutomorphism,
    /// The dot on the under strand: crossing it conjugates the label by Y.
    pub dot: TwistedAutomorphism,
    pub terms: Vec<BeadTerm>,
}

/// An event of the walk, bottom to top.
#[derive(Clone, Debug)]
pub enum PlanStep {
    Bead { crossing: usize, leg: Leg },
    Dot { crossing: usize },
    Fixed(DoubleElement),
}

/// Beads and dots along the walk together with the label in force at each step.
#[derive(Clone, Debug)]
pub struct BeadPlan {
    pub crossings: Vec<CrossingBeads>,
    pub steps: Vec<(PlanStep, TwistedAutomorphism)>,
    /// Label of the open strand, the grading of the result.
    pub grading: TwistedAutomorphism,
    tables: Vec<Arc<Vec<Sparse>>>,
    step_table: Vec<usize>,
    /// Columns of φ_{Y⁻¹} on D_{YγY⁻¹}, one map per crossing.
    dot_maps: Vec<Vec<Sparse>>,
}

impl BeadPlan {
    pub fn new(ribbon: &RibbonData<'_>, d: &TangleDiagram, rho: &TangleRepresentation) -> Result<Self, RtError> {
        let dbl = ribbon.double();
        let labels = rho.arc_labels(d)?;
        let deco = |x: DoubleElement, up: bool| if up { Ok(x) } else { dbl.antipode(&x) };

        let mut crossings = Vec::with_capacity(d.crossings().len());
        for (c, x) in d.crossings().iter().enumerate() {
            let lo = &labels[x.over_arc];
            let a = if x.over_upward { lo.clone() } else { lo.inverse()? };
            let (li, lout) = (&labels[x.under_in], &labels[x.under_out]);
            let up = x.under_upward;
            let (b, r, big_x) = if x.a_over {
                let b = if up { li.clone() } else { lout.inverse()? };
                let r = dbl.r_matrix(&a, &b);
                (b, r, a.clone())
            } else {
                let b = if up { lout.clone() } else { li.inverse()? };
                let r = dbl.r_matrix_inverse(&a, &b)?;
                (b, r, a.inverse()?)
            };
            let dot = if up { big_x } else { big_x.inverse()? };
            if &li.conjugate_by(&dot)? != lout {
                return Err(RtError::LabelMismatch(c));
            }
            let terms = r
                .terms()
                .map(|(key, coeff)| {
                    Ok(BeadTerm {
                        coeff: coeff.clone(),
                        over: deco(dbl.basis(&a, key[0]), x.over_upward)?,
                        under: deco(dbl.basis(&b, key[1]), up)?,
                        over_odd: dbl.parity(key[0]) == 1,
                        under_odd: dbl.parity(key[1]) == 1,
                    })
                })
                .collect::<Result<Vec<_>, RtError>>()?;
            crossings.push(CrossingBeads { crossing: c, sigma: x.a_over, a, b, dot, terms });
        }

        let mut events = Vec::new();
        for step in d.walk() {
            match *step {
                WalkStep::Crossing { crossing, over: true, .. } => {
                    events.push(PlanStep::Bead { crossing, leg: Leg::Over });
                }
                WalkStep::Crossing { crossing, over: false, upward, .. } => {
                    let bead = PlanStep::Bead { crossing, leg: Leg::Under };
                    let dot = PlanStep::Dot { crossing };
                    if crossings[crossing].sigma == upward {
                        events.extend([bead, dot]);
                    } else {
                        events.extend([dot, bead]);
                    }
                }
                WalkStep::Turn { turn, from, .. } => {
                    let t = d.turns()[turn];
                    let label = &labels[d.arc_of_segment(from)];
                    match (t.kind, t.ccw) {
                        (TurnKind::Cap, false) => events.push(PlanStep::Fixed(ribbon.pivot(label)?)),
                        (TurnKind::Cup, true) => events.push(PlanStep::Fixed(ribbon.pivot_inverse(label)?)),
                        _ => {}
                    }
                }
            }
        }

        let mut current = labels[0].clone();
        let mut steps = Vec::with_capacity(events.len());
        for e in events {
            let here = current.clone();
            if let PlanStep::Dot { crossing } = e {
                current = current.conjugate_by(&crossings[crossing].dot)?;
            }
            steps.push((e, here));
        }
        debug_assert_eq!(current, labels[0]);

        let mut gradings: Vec<TwistedAutomorphism> = Vec::new();
        let mut step_table = Vec::with_capacity(steps.len());
        for (_, g) in &steps {
            let i = gradings.iter().position(|h| h == g).unwrap_or_else(|| {
                gradings.push(g.clone());
                gradings.len() - 1
            });
            step_table.push(i);
        }
        if !gradings.contains(&labels[0]) {
            gradings.push(labels[0].clone());
        }
        let tables = gradings.iter().map(|g| dbl.product_table(g)).collect::<Result<Vec<_>, _>>()?;

        let dot_maps = crossings
            .iter()
            .map(|c| {
                let yinv = c.dot.inverse()?;
                // In product order the dot is met carrying the label after it, the under_out label.
                let source = &labels[d.crossings()[c.crossing].under_out];
                (0..dbl.dim())
                    .map(|i| Ok(dbl.phi(&yinv, &dbl.basis(source, i))?.terms().map(|(k, v)| (k, v.clone())).collect()))
                    .collect::<Result<Vec<Sparse>, RtError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;

        Ok(Self { crossings, steps, grading: labels[0].clone(), tables, step_table, dot_maps })
    }

    /// Number of summands Π_c |R_c|, saturating.
    pub fn term_count(&self) -> u128 {
        self.crossings.iter().fold(1u128, |acc, c| acc.saturating_mul(c.terms.len() as u128))
    }

    /// The walk product for one choice of summand per crossing, with its
    /// coefficient and Koszul sign.
    pub fn evaluate(&self, dbl: &TwistedDouble, choice: &[usize]) -> DoubleElement {
        let big = dbl.dim();
        let mut coeff = LaurentScalar::one();
        for (c, &i) in self.crossings.iter().zip(choice) {
            coeff = &coeff * &c.terms[i].coeff;
        }
        // Odd beads in product order (reverse walk order) against tensor order.
        let mut odd: Vec<(usize, Leg)> = Vec::new();
        for (step, _) in self.steps.iter().rev() {
            if let PlanStep::Bead { crossing, leg } = *step {
                let t = &self.crossings[crossing].terms[choice[crossing]];
                if match leg {
                    Leg::Over => t.over_odd,
                    Leg::Under => t.under_odd,
                } {
                    odd.push((crossing, leg));
                }
            }
        }
        let inversions = (0..odd.len()).flat_map(|i| (i + 1..odd.len()).map(move |j| (i, j)));
        if inversions.filter(|&(i, j)| odd[i] > odd[j]).count() % 2 == 1 {
            coeff = -coeff;
        }

        let mut acc: Sparse = dbl.one(&self.grading).terms().map(|(k, v)| (k, v * &coeff)).collect();
        for ((step, label), &ti) in self.steps.iter().zip(&self.step_table).rev() {
            match step {
                PlanStep::Dot { crossing } => acc = apply(&self.dot_maps[*crossing], &acc, big),
                PlanStep::Bead { crossing, leg } => {
                    let t = &self.crossings[*crossing].terms[choice[*crossing]];
                    let bead = match leg {
                        Leg::Over => &t.over,
                        Leg::Under => &t.under,
                    };
                    debug_assert_eq!(&bead.grading, label);
                    acc = multiply(&self.tables[ti], &acc, bead, big);
                }
                PlanStep::Fixed(x) => {
                    debug_assert_eq!(&x.grading, label);
                    acc = multiply(&self.tables[ti], &acc, x, big);
                }
            }
        }
        let mut out = DoubleElement::zero(self.grading.clone(), big);
        for (k, v) in acc {
            out.coeffs[k] += v;
        }
        out
    }
}

fn densify(x: Vec<LaurentScalar>) -> Sparse {
    x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

fn multiply(table: &[Sparse], x: &Sparse, y: &DoubleElement, big: usize) -> Sparse {
    let mut out = vec![LaurentScalar::zero(); big];
    for (i, cx) in x {
        for (j, cy) in y.terms() {
            let cxy = cx * cy;
            for (k, c) in &table[i * big + j] {
                out[*k] += &cxy * c;
            }
        }
    }
    densify(out)
}

fn apply(columns: &[Sparse], x: &Sparse, big: usize) -> Sparse {
    let mut out = vec![LaurentScalar::zero(); big];
    for (i, cx) in x {
        for (k, c) in &columns[*i] {
            out[*k] += cx * c;
        }
    }
    densify(out)
}
