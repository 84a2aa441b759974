//! The slice text format: one line per slice, bottom slice first.
//!
//! Tokens: `|` upward strand, `!` downward strand, `u+`/`u-` counterclockwise
//! and clockwise cups, `n+`/`n-` counterclockwise and clockwise caps, `x+`/`x-`
//! positive and negative crossings of the next two strands. Text after `#` is
//! a comment.

use std::fmt;
use std::str::FromStr;

use crate::TangleError;

/// One event of a slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorseEvent {
    IdUp,
    IdDown,
    CupCcw,
    CupCw,
    CapCcw,
    CapCw,
    CrossPos,
    CrossNeg,
}

impl MorseEvent {
    pub fn token(self) -> &'static str {
        match self {
            MorseEvent::IdUp => "|",
            MorseEvent::IdDown => "!",
            MorseEvent::CupCcw => "u+",
            MorseEvent::CupCw => "u-",
            MorseEvent::CapCcw => "n+",
            MorseEvent::CapCw => "n-",
            MorseEvent::CrossPos => "x+",
            MorseEvent::CrossNeg => "x-",
        }
    }

    /// Number of strands consumed from below.
    pub fn inputs(self) -> usize {
        match self {
            MorseEvent::IdUp | MorseEvent::IdDown => 1,
            MorseEvent::CupCcw | MorseEvent::CupCw => 0,
            _ => 2,
        }
    }

    /// Number of strands produced above.
    pub fn outputs(self) -> usize {
        match self {
            MorseEvent::IdUp | MorseEvent::IdDown => 1,
            MorseEvent::CapCcw | MorseEvent::CapCw => 0,
            _ => 2,
        }
    }
}

impl FromStr for MorseEvent {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Ok(match s {
            "|" => MorseEvent::IdUp,
            "!" => MorseEvent::IdDown,
            "u+" => MorseEvent::CupCcw,
            "u-" => MorseEvent::CupCw,
            "n+" => MorseEvent::CapCcw,
            "n-" => MorseEvent::CapCw,
            "x+" => MorseEvent::CrossPos,
            "x-" => MorseEvent::CrossNeg,
            _ => return Err(()),
        })
    }
}

/// A token with its source position (1-based line and column).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Located {
    pub event: MorseEvent,
    pub line: usize,
    pub column: usize,
}

/// Slices listed bottom to top, events left to right.
///
/// Equality compares the slices only, not source positions.
#[derive(Clone, Debug, Default)]
pub struct MorseWord {
    slices: Vec<Vec<MorseEvent>>,
    positions: Vec<Vec<(usize, usize)>>,
}

impl MorseWord {
    pub fn new(slices: Vec<Vec<MorseEvent>>) -> Self {
        let positions =
            slices.iter().enumerate().map(|(i, s)| (0..s.len()).map(|j| (i + 1, 2 * j + 1)).collect()).collect();
        Self { slices, positions }
    }

    /// Tokenizes the text format. Strand bookkeeping is checked later, when the
    /// word is analyzed.
    pub fn parse(text: &str) -> Result<Self, TangleError> {
        let mut slices = Vec::new();
        let mut positions = Vec::new();
        for (li, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("");
            let mut slice = Vec::new();
            let mut pos = Vec::new();
            let mut col = 0;
            for piece in body.split(|c: char| c.is_whitespace()) {
                let start = col;
                col += piece.chars().count() + 1;
                if piece.is_empty() {
                    continue;
                }
                let event = piece.parse().map_err(|_| TangleError::Token {
                    line: li + 1,
                    column: start + 1,
                    token: piece.to_string(),
                })?;
                slice.push(event);
                pos.push((li + 1, start + 1));
            }
            if !slice.is_empty() {
                slices.push(slice);
                positions.push(pos);
            }
        }
        if slices.is_empty() {
            return Err(TangleError::Empty);
        }
        Ok(Self { slices, positions })
    }

    pub fn slices(&self) -> &[Vec<MorseEvent>] {
        &self.slices
    }

    /// Events with their source positions, slice by slice.
    pub fn located(&self) -> impl Iterator<Item = Vec<Located>> + '_ {
        self.slices
            .iter()
            .zip(&self.positions)
            .map(|(s, p)| s.iter().zip(p).map(|(&event, &(line, column))| Located { event, line, column }).collect())
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }
}

impl PartialEq for MorseWord {
    fn eq(&self, other: &Self) -> bool {
        self.slices == other.slices
    }
}

impl Eq for MorseWord {}

impl fmt::Display for MorseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for slice in &self.slices {
            let tokens: Vec<&str> = slice.iter().map(|e| e.token()).collect();
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}
