//! The Wirtinger presentation read off the underpasses.
//!
//! Passing under a positive crossing with over arc o turns the incoming arc
//! label x into o·x·o⁻¹; a negative crossing gives o⁻¹·x·o. The relator of
//! the k-th underpass is written b_π b_{i+1} b_π⁻¹ b_i⁻¹ (positive) or
//! b_π⁻¹ b_{i+1} b_π b_i⁻¹ (negative), where b_{i+1} is the arc before the
//! underpass and b_i the arc after it. The relator of the last underpass is
//! a consequence of the others and is dropped.

use std::fmt;

use crate::diagram::TangleDiagram;

/// A generator or its inverse. `generator` is the closure arc index e_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    /// +1 or −1.
    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// The relator contributed by one underpass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub crossing: usize,
    pub sign: i32,
    pub letters: Vec<Letter>,
}

/// Generators e_0, …, e_{N−1} and relators; e_0 is the basepoint meridian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirtingerPresentation {
    pub generators: usize,
    pub relators: Vec<Relator>,
    names: Vec<String>,
}

impl WirtingerPresentation {
    pub fn meridian(&self) -> usize {
        0
    }

    /// Printed name of generator e_k.
    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    /// Total exponent of each generator in a relator.
    pub fn exponent_sums(relator: &Relator, generators: usize) -> Vec<i64> {
        let mut sums = vec![0; generators];
        for l in &relator.letters {
            sums[l.generator] += l.exponent();
        }
        sums
    }
}

impl fmt::Display for WirtingerPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.names.iter().rev().map(String::as_str).collect();
        write!(f, "<{}", gens.join(", "))?;
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                r.letters
                    .iter()
                    .map(|l| format!("{}{}", self.names[l.generator], if l.inverse { "^-1" } else { "" }))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        if !rels.is_empty() {
            write!(f, " | {}", rels.join(", "))?;
        }
        write!(f, ">")
    }
}

/// One step of the walk under a crossing: (crossing, sign, over, before, after),
/// all arcs given as closure arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Underpass {
    pub crossing: usize,
    pub sign: i32,
    pub over: usize,
    pub before: usize,
    pub after: usize,
}

/// Underpasses in walk order; the k-th one (from 1) leads from e_{k−1} to e_k.
pub fn underpasses(d: &TangleDiagram) -> Vec<Underpass> {
    d.under_sequence()
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let x = &d.crossings()[c];
            Underpass {
                crossing: c,
                sign: x.sign,
                over: d.closure_arc(x.over_arc),
                before: d.closure_arc(k),
                after: d.closure_arc(k + 1),
            }
        })
        .collect()
}

/// The Wirtinger presentation with one generator per arc of the closure.
pub fn wirtinger(d: &TangleDiagram) -> WirtingerPresentation {
    let ups = underpasses(d);
    let relators = ups
        .iter()
        .take(ups.len().saturating_sub(1))
        .map(|u| {
            let pos = u.sign > 0;
            Relator {
                crossing: u.crossing,
                sign: u.sign,
                letters: vec![
                    Letter::new(u.over, !pos),
                    Letter::new(u.before, false),
                    Letter::new(u.over, pos),
                    Letter::new(u.after, true),
                ],
            }
        })
        .collect();
    let n = d.generator_count();
    WirtingerPresentation { generators: n, relators, names: (0..n).map(|k| d.generator_name(k)).collect() }
}
