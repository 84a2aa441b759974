//! Strand tracing of a Morse word: segments, cups and caps, crossings, the
//! oriented walk from the bottom endpoint to the top one, and arcs.
//!
//! Arcs are numbered e_0, …, e_g in walk order, a new arc starting after each
//! underpass. e_0 holds the bottom endpoint and e_g the top one; in the
//! closure they are the same arc. The Wirtinger generator of e_k is printed as
//! b_{g−k}, so b_1 is the last arc met before the top endpoint and the
//! basepoint meridian is e_0.

use std::fmt;

use crate::morse::{Located, MorseEvent, MorseWord};
use crate::TangleError;

/// Which corner of a crossing a segment is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    BottomLeft,
    BottomRight,
    TopLeft,
    TopRight,
}

impl Corner {
    /// The corner across the crossing along the same strand.
    fn opposite(self) -> Self {
        match self {
            Corner::BottomLeft => Corner::TopRight,
            Corner::TopRight => Corner::BottomLeft,
            Corner::BottomRight => Corner::TopLeft,
            Corner::TopLeft => Corner::BottomRight,
        }
    }
}

/// Where a segment ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentEnd {
    BottomBoundary,
    TopBoundary,
    /// Left (`false`) or right (`true`) leg of a cup or cap.
    Turn {
        turn: usize,
        right: bool,
    },
    Crossing {
        crossing: usize,
        corner: Corner,
    },
}

/// A strand piece between two events, oriented up or down the page.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub upward: bool,
    pub lower: SegmentEnd,
    pub upper: SegmentEnd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TurnKind {
    Cup,
    Cap,
}

/// A cup or cap joining the segments `left` and `right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Turn {
    pub kind: TurnKind,
    pub ccw: bool,
    pub left: usize,
    pub right: usize,
    pub slice: usize,
}

/// A crossing with its segments and arcs.
///
/// Strand A runs between the bottom-left and top-right corners, strand B
/// between the bottom-right and top-left ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: i32,
    pub slice: usize,
    pub a_over: bool,
    pub bottom_left: usize,
    pub bottom_right: usize,
    pub top_left: usize,
    pub top_right: usize,
    pub over_arc: usize,
    pub over_upward: bool,
    pub under_in: usize,
    pub under_out: usize,
    pub under_upward: bool,
}

/// One step of the oriented walk from the bottom endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WalkStep {
    Turn { turn: usize, from: usize, to: usize },
    Crossing { crossing: usize, from: usize, to: usize, over: bool, upward: bool },
}

impl WalkStep {
    pub fn from(&self) -> usize {
        match *self {
            WalkStep::Turn { from, .. } | WalkStep::Crossing { from, .. } => from,
        }
    }

    pub fn to(&self) -> usize {
        match *self {
            WalkStep::Turn { to, .. } | WalkStep::Crossing { to, .. } => to,
        }
    }
}

/// A fully analyzed (1,1)-tangle diagram with blackboard framing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleDiagram {
    word: MorseWord,
    segments: Vec<Segment>,
    turns: Vec<Turn>,
    crossings: Vec<Crossing>,
    walk: Vec<WalkStep>,
    arc_of_segment: Vec<usize>,
    under_sequence: Vec<usize>,
    writhe: i64,
    rotation: i64,
}

/// Parses and analyzes a diagram in the slice text format.
pub fn parse_tangle(text: &str) -> Result<TangleDiagram, TangleError> {
    TangleDiagram::from_word(MorseWord::parse(text)?)
}

impl TangleDiagram {
    /// Traces the strands of a word and checks that it is a knot diagram.
    pub fn from_word(word: MorseWord) -> Result<Self, TangleError> {
        if word.is_empty() {
            return Err(TangleError::Empty);
        }
        let mut b = Builder::default();
        let mut current = vec![b.segment(true, SegmentEnd::BottomBoundary)];
        for (si, slice) in word.located().enumerate() {
            current = b.slice(si, &slice, &current)?;
        }
        let line = word.located().last().and_then(|s| s.first().map(|l| l.line)).unwrap_or(0);
        match current.as_slice() {
            [s] if b.segments[*s].upward => b.segments[*s].upper = SegmentEnd::TopBoundary,
            _ => {
                return Err(TangleError::Boundary {
                    line,
                    message: format!("top must be one upward strand, found {} strands", current.len()),
                })
            }
        }
        let Builder { segments, turns, crossings } = b;
        let mut d = Self {
            word,
            segments,
            turns,
            crossings,
            walk: Vec::new(),
            arc_of_segment: Vec::new(),
            under_sequence: Vec::new(),
            writhe: 0,
            rotation: 0,
        };
        d.trace()?;
        Ok(d)
    }

    fn trace(&mut self) -> Result<(), TangleError> {
        let mut seg = 0;
        let mut visited = vec![false; self.segments.len()];
        loop {
            visited[seg] = true;
            let s = self.segments[seg];
            let end = if s.upward { s.upper } else { s.lower };
            let step = match end {
                SegmentEnd::TopBoundary => break,
                SegmentEnd::BottomBoundary => unreachable!("the walk starts at the bottom boundary"),
                SegmentEnd::Turn { turn, right } => {
                    let t = self.turns[turn];
                    WalkStep::Turn { turn, from: seg, to: if right { t.left } else { t.right } }
                }
                SegmentEnd::Crossing { crossing, corner } => {
                    let c = self.crossings[crossing];
                    let to = match corner.opposite() {
                        Corner::BottomLeft => c.bottom_left,
                        Corner::BottomRight => c.bottom_right,
                        Corner::TopLeft => c.top_left,
                        Corner::TopRight => c.top_right,
                    };
                    let on_a = matches!(corner, Corner::BottomLeft | Corner::TopRight);
                    WalkStep::Crossing { crossing, from: seg, to, over: on_a == c.a_over, upward: s.upward }
                }
            };
            self.walk.push(step);
            seg = step.to();
        }
        if visited.iter().any(|v| !v) {
            return Err(TangleError::MultipleComponents);
        }

        let mut arc = 0;
        self.arc_of_segment = vec![0; self.segments.len()];
        for step in &self.walk {
            if let WalkStep::Crossing { crossing, over: false, .. } = *step {
                arc += 1;
                self.under_sequence.push(crossing);
            }
            self.arc_of_segment[step.to()] = arc;
        }
        for step in self.walk.clone() {
            if let WalkStep::Crossing { crossing, from, to, over, upward } = step {
                let c = &mut self.crossings[crossing];
                if over {
                    c.over_arc = self.arc_of_segment[from];
                    c.over_upward = upward;
                } else {
                    c.under_in = self.arc_of_segment[from];
                    c.under_out = self.arc_of_segment[to];
                    c.under_upward = upward;
                }
            }
        }
        self.writhe = self.crossings.iter().map(|c| i64::from(c.sign)).sum();
        let half_turns: i64 = self.turns.iter().map(|t| if t.ccw { 1 } else { -1 }).sum();
        debug_assert!(half_turns % 2 == 0, "a closed curve turns by whole turns");
        self.rotation = half_turns / 2;
        Ok(())
    }

    pub fn word(&self) -> &MorseWord {
        &self.word
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn turns(&self) -> &[Turn] {
        &self.turns
    }

    /// Crossings in slice order, bottom to top and left to right.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn walk(&self) -> &[WalkStep] {
        &self.walk
    }

    pub fn arc_of_segment(&self, segment: usize) -> usize {
        self.arc_of_segment[segment]
    }

    /// Segments of each arc e_0, …, e_g.
    pub fn arcs(&self) -> Vec<Vec<usize>> {
        let mut arcs = vec![Vec::new(); self.g() + 1];
        for (s, &a) in self.arc_of_segment.iter().enumerate() {
            arcs[a].push(s);
        }
        arcs
    }

    /// Crossings in the order they are passed under.
    pub fn under_sequence(&self) -> &[usize] {
        &self.under_sequence
    }

    /// Number of crossings, equal to the number of underpasses.
    pub fn g(&self) -> usize {
        self.under_sequence.len()
    }

    /// Number of Wirtinger generators: one per arc of the closure.
    pub fn generator_count(&self) -> usize {
        self.g().max(1)
    }

    /// The generator of an arc in the closure: e_g is identified with e_0.
    pub fn closure_arc(&self, arc: usize) -> usize {
        if arc == self.g() {
            0
        } else {
            arc
        }
    }

    /// Printed name b_i of the generator of arc e_k, with i = g − k.
    pub fn generator_name(&self, arc: usize) -> String {
        format!("b{}", self.generator_count() - self.closure_arc(arc))
    }

    /// Inverse of [`generator_name`](Self::generator_name).
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        let i: usize = name.strip_prefix('b')?.parse().ok()?;
        (1..=self.generator_count()).contains(&i).then(|| self.generator_count() - i)
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.writhe
    }

    /// Counterclockwise rotation number: counterclockwise minus clockwise
    /// half turns, halved.
    pub fn rotation(&self) -> i64 {
        self.rotation
    }

    /// Clockwise rotation number, the negative of [`rotation`](Self::rotation).
    pub fn rotation_cw(&self) -> i64 {
        -self.rotation
    }

    /// Whether the last crossing met on the walk is passed under.
    pub fn last_is_under(&self) -> bool {
        self.walk
            .iter()
            .rev()
            .find_map(|s| match s {
                WalkStep::Crossing { over, .. } => Some(!over),
                WalkStep::Turn { .. } => None,
            })
            .unwrap_or(true)
    }

    /// The slice text of the diagram.
    pub fn to_text(&self) -> String {
        self.word.to_string()
    }
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

#[derive(Default)]
struct Builder {
    segments: Vec<Segment>,
    turns: Vec<Turn>,
    crossings: Vec<Crossing>,
}

impl Builder {
    fn segment(&mut self, upward: bool, lower: SegmentEnd) -> usize {
        // The upper end is overwritten when the segment is closed off.
        self.segments.push(Segment { upward, lower, upper: SegmentEnd::TopBoundary });
        self.segments.len() - 1
    }

    fn slice(&mut self, si: usize, slice: &[Located], below: &[usize]) -> Result<Vec<usize>, TangleError> {
        let mut above = Vec::new();
        let mut pos = 0;
        for tok in slice {
            let need = tok.event.inputs();
            if pos + need > below.len() {
                return Err(TangleError::StrandCount {
                    line: tok.line,
                    column: tok.column,
                    message: format!(
                        "`{}` needs {need} strand(s) but only {} remain",
                        tok.event.token(),
                        below.len() - pos
                    ),
                });
            }
            let ins = &below[pos..pos + need];
            pos += need;
            let orientation = |message: &str| TangleError::Orientation {
                line: tok.line,
                column: tok.column,
                message: message.to_string(),
            };
            match tok.event {
                MorseEvent::IdUp | MorseEvent::IdDown => {
                    let up = tok.event == MorseEvent::IdUp;
                    if self.segments[ins[0]].upward != up {
                        return Err(orientation(if up {
                            "`|` continues a downward strand"
                        } else {
                            "`!` continues an upward strand"
                        }));
                    }
                    above.push(ins[0]);
                }
                MorseEvent::CupCcw | MorseEvent::CupCw => {
                    let ccw = tok.event == MorseEvent::CupCcw;
                    let turn = self.turns.len();
                    // A counterclockwise cup runs down its left leg and up its right leg.
                    let left = self.segment(!ccw, SegmentEnd::Turn { turn, right: false });
                    let right = self.segment(ccw, SegmentEnd::Turn { turn, right: true });
                    self.turns.push(Turn { kind: TurnKind::Cup, ccw, left, right, slice: si });
                    above.extend([left, right]);
                }
                MorseEvent::CapCcw | MorseEvent::CapCw => {
                    let ccw = tok.event == MorseEvent::CapCcw;
                    let (left, right) = (ins[0], ins[1]);
                    // A counterclockwise cap runs up its right leg and down its left leg.
                    if self.segments[left].upward == ccw || self.segments[right].upward != ccw {
                        return Err(orientation("cap legs do not match its orientation"));
                    }
                    let turn = self.turns.len();
                    self.segments[left].upper = SegmentEnd::Turn { turn, right: false };
                    self.segments[right].upper = SegmentEnd::Turn { turn, right: true };
                    self.turns.push(Turn { kind: TurnKind::Cap, ccw, left, right, slice: si });
                }
                MorseEvent::CrossPos | MorseEvent::CrossNeg => {
                    let sign = if tok.event == MorseEvent::CrossPos { 1 } else { -1 };
                    let (a, b) = (ins[0], ins[1]);
                    let (ua, ub) = (self.segments[a].upward, self.segments[b].upward);
                    let da: (i32, i32) = if ua { (1, 1) } else { (-1, -1) };
                    let db: (i32, i32) = if ub { (-1, 1) } else { (1, -1) };
                    let cross = da.0 * db.1 - da.1 * db.0;
                    let crossing = self.crossings.len();
                    let end = |corner| SegmentEnd::Crossing { crossing, corner };
                    self.segments[a].upper = end(Corner::BottomLeft);
                    self.segments[b].upper = end(Corner::BottomRight);
                    let top_left = self.segment(ub, end(Corner::TopLeft));
                    let top_right = self.segment(ua, end(Corner::TopRight));
                    self.crossings.push(Crossing {
                        sign,
                        slice: si,
                        a_over: (cross > 0) == (sign > 0),
                        bottom_left: a,
                        bottom_right: b,
                        top_left,
                        top_right,
                        over_arc: 0,
                        over_upward: false,
                        under_in: 0,
                        under_out: 0,
                        under_upward: false,
                    });
                    above.extend([top_left, top_right]);
                }
            }
        }
        if pos != below.len() {
            let line = slice.first().map(|t| t.line).unwrap_or(0);
            return Err(TangleError::StrandCount {
                line,
                column: 1,
                message: format!("slice consumes {pos} of {} strands", below.len()),
            });
        }
        Ok(above)
    }
}
