//! The Heegaard diagram of a knot closure read off a tangle diagram.
//!
//! The k-th underpass (k = 1, …, g−1) gives a closed curve α_k meeting the
//! β-curves in four points x_1, …, x_4. Arc e_j (1 ≤ j ≤ g−1) gives a closed
//! curve β_j, and the arc through the open point gives the arc β_g; points on
//! β_g are not matched. Each point carries a sign m and a word w in the
//! Wirtinger generators, read off the Fox derivative of the relator.

use tangle_diagram::{Letter, TangleDiagram, WalkStep};

use crate::KuperbergError;

/// The β-curve or arc that an α-point lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaTarget {
    Curve(usize),
    Arc,
}

/// One of the four points x_1, …, x_4 of an α-curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoint {
    /// Closure arc of the β side.
    pub edge: usize,
    pub target: BetaTarget,
    /// m_x = ±1; the antipode is applied where m_x = −1.
    pub sign: i8,
    pub word: Vec<Letter>,
}

/// Which of the two mirror conventions orients the α-curves.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AlphaOrientation {
    #[default]
    Standard,
    Mirrored,
}

/// The curve α_k of the k-th underpass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaCurve {
    pub index: usize,
    pub crossing: usize,
    pub crossing_sign: i32,
    pub points: [IntersectionPoint; 4],
    /// Points where the over strand's β-curve enters and leaves the
    /// neighbourhood of the crossing.
    pub entry: usize,
    pub exit: usize,
}

/// A point of α_k: (k, p) with p ∈ 0..4 for x_{p+1}.
pub type Slot = (usize, usize);

/// The closed curve β_j with its α-intersections in orientation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaCurve {
    pub index: usize,
    pub slots: Vec<Slot>,
}

/// α-curves α_1, …, α_{g−1} and closed β-curves β_1, …, β_{g−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeegaardData {
    pub g: usize,
    pub alphas: Vec<AlphaCurve>,
    pub betas: Vec<BetaCurve>,
}

impl HeegaardData {
    pub fn alpha(&self, k: usize) -> &AlphaCurve {
        &self.alphas[k - 1]
    }

    pub fn beta(&self, j: usize) -> &BetaCurve {
        &self.betas[j - 1]
    }

    /// Points lying on closed β-curves, as slots.
    pub fn matched_slots(&self) -> Vec<Slot> {
        self.alphas
            .iter()
            .flat_map(|a| {
                a.points.iter().enumerate().filter(|(_, x)| x.target != BetaTarget::Arc).map(move |(p, _)| (a.index, p))
            })
            .collect()
    }
}

fn point(edge: usize, sign: i8, word: Vec<Letter>) -> IntersectionPoint {
    let target = if edge == 0 { BetaTarget::Arc } else { BetaTarget::Curve(edge) };
    IntersectionPoint { edge, target, sign, word }
}

/// Builds the Heegaard data. The last crossing met along the strand must be
/// an underpass.
pub fn heegaard_from_diagram(d: &TangleDiagram, orientation: AlphaOrientation) -> Result<HeegaardData, KuperbergError> {
    if d.g() > 0 && !d.last_is_under() {
        return Err(KuperbergError::LastCrossingOver);
    }
    let g = d.g();
    let mut alphas = Vec::new();
    for k in 1..g {
        let c = d.under_sequence()[k - 1];
        let x = &d.crossings()[c];
        let o = d.closure_arc(x.over_arc);
        let (b, a) = (k - 1, k);
        let (o_p, o_m) = (Letter::new(o, false), Letter::new(o, true));
        let bl = Letter::new(b, false);
        let (points, entry, exit) = if x.sign > 0 {
            (
                [point(a, -1, vec![]), point(o, -1, vec![o_p, bl, o_m]), point(b, 1, vec![o_p]), point(o, 1, vec![])],
                3,
                1,
            )
        } else {
            ([point(a, -1, vec![]), point(o, 1, vec![o_m, bl]), point(b, 1, vec![o_m]), point(o, -1, vec![o_m])], 1, 3)
        };
        let (entry, exit) = match orientation {
            AlphaOrientation::Standard => (entry, exit),
            AlphaOrientation::Mirrored => (exit, entry),
        };
        alphas.push(AlphaCurve { index: k, crossing: c, crossing_sign: x.sign, points, entry, exit });
    }

    let underpass_index: Vec<Option<usize>> = {
        let mut v = vec![None; d.crossings().len()];
        for (i, &c) in d.under_sequence().iter().enumerate() {
            v[c] = Some(i + 1);
        }
        v
    };
    let mut betas = Vec::new();
    for j in 1..g {
        let mut slots = vec![(j, 0)];
        for step in d.walk() {
            if let WalkStep::Crossing { crossing, from, over: true, .. } = *step {
                if d.closure_arc(d.arc_of_segment(from)) != j {
                    continue;
                }
                if let Some(k) = underpass_index[crossing].filter(|&k| k < g) {
                    slots.push((k, alphas[k - 1].entry));
                    slots.push((k, alphas[k - 1].exit));
                }
            }
        }
        if j + 1 < g {
            slots.push((j + 1, 2));
        }
        betas.push(BetaCurve { index: j, slots });
    }
    Ok(HeegaardData { g, alphas, betas })
}
