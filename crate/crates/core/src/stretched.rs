//! Stretched cup diagrams of standard tableaux.
//!
//! A standard tableau `T` with `d` boxes yields a stack of `d + 1` weight
//! diagrams: the encodings of the shapes occupied by `1..=r` for `r = 0..=d`.
//! Consecutive levels differ in exactly two adjacent columns `(c, c+1)` where
//! `c` is the residue of the box added at that step, and the four possible
//! transitions are wired by one non-vertical strip piece per layer:
//!
//! - `(x,o) → (strand, strand)`: a *cup* below the upper line,
//! - `(strand, strand) → (o,x)`: a *cap* above the lower line,
//! - `(x,s) → (s,x)`: a *left shift* (diagonal segment down-left),
//! - `(s,o) → (o,s)`: a *right shift* (diagonal segment up-right),
//!
//! with vertical segments everywhere else.  The resulting tangle decomposes
//! into circles, boundary cups (both ends on the top line) and — when the
//! two charges differ — lines running down to the bottom boundary.  Reading
//! orientations off the level labels gives the degree statistic, the tableau
//! weight and the tier used to filter the graded cell and simple modules.

use crate::diagram::{bipartition_to_weight, weight_to_bipartition, Label, WeightDiagram};
use crate::tableau::StandardTableau;
use crate::tangle::{CompKind, Edge, Port, Tangle};
use crate::{Error, Result};

/// Kind of the unique non-vertical strip in one layer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StripKind {
    Cup,
    Cap,
    ShiftLeft,
    ShiftRight,
}

/// The non-vertical strip of one layer: its kind and the left column of the
/// two-column window `(col, col + 1)` it acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Strip {
    pub kind: StripKind,
    pub col: i64,
}

impl Strip {
    /// The edge realizing this strip in layer `r` (between lines `r-1`, `r`).
    pub fn edge(&self, r: usize) -> Edge {
        let c = self.col;
        match self.kind {
            StripKind::Cup => Edge::Arc { line: r, left: c, right: c + 1, above: false },
            StripKind::Cap => Edge::Arc { line: r - 1, left: c, right: c + 1, above: true },
            StripKind::ShiftLeft => Edge::Seg { bot: (r - 1, c + 1), top: (r, c) },
            StripKind::ShiftRight => Edge::Seg { bot: (r - 1, c), top: (r, c + 1) },
        }
    }

    /// Vertices of the lower line whose upward side the strip occupies.
    pub fn bottom_ports(&self) -> Vec<i64> {
        match self.kind {
            StripKind::Cup => vec![],
            StripKind::Cap => vec![self.col, self.col + 1],
            StripKind::ShiftLeft => vec![self.col + 1],
            StripKind::ShiftRight => vec![self.col],
        }
    }
}

/// A boundary cup of the stretched diagram: an open component with both ends
/// on the top line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundaryCup {
    pub left: i64,
    pub right: i64,
    /// Clockwise = the left end carries `^`.
    pub clockwise: bool,
}

/// The stretched cup diagram of a standard tableau at charges `(p, q)`.
#[derive(Clone, Debug)]
pub struct StretchedDiagram {
    levels: Vec<WeightDiagram>,
    strips: Vec<Strip>,
    tangle: Tangle,
    p: i64,
    q: i64,
}

fn classify_transition(
    before: &WeightDiagram,
    after: &WeightDiagram,
    c: i64,
) -> Result<StripKind> {
    use Label::{Cross, Empty};
    let lo = before.window_start().min(after.window_start()) - 1;
    let hi = before.window_end().max(after.window_end());
    for v in lo..=hi {
        if v != c && v != c + 1 && before.label(v) != after.label(v) {
            return Err(Error::Precondition(format!(
                "levels `{before}` and `{after}` differ at vertex {v}, outside columns \
                 ({c},{}) of the added box",
                c + 1
            )));
        }
    }
    let b = (before.label(c), before.label(c + 1));
    let a = (after.label(c), after.label(c + 1));
    match (b, a) {
        ((Cross, Empty), (x, y)) if x.is_strand() && y.is_strand() => Ok(StripKind::Cup),
        ((x, y), (Empty, Cross)) if x.is_strand() && y.is_strand() => Ok(StripKind::Cap),
        ((Cross, x), (y, Cross)) if x.is_strand() && x == y => Ok(StripKind::ShiftLeft),
        ((x, Empty), (Empty, y)) if x.is_strand() && x == y => Ok(StripKind::ShiftRight),
        _ => Err(Error::Precondition(format!(
            "levels `{before}` and `{after}` make no valid strip at columns ({c},{})",
            c + 1
        ))),
    }
}

/// Assemble the tangle for given levels and strips (rays below the bottom
/// line at its strand vertices, open above the top line).
fn assemble(levels: &[WeightDiagram], strips: &[Strip]) -> Tangle {
    let mut edges = Vec::new();
    for (idx, strip) in strips.iter().enumerate() {
        let r = idx + 1;
        edges.push(strip.edge(r));
        let below = &levels[r - 1];
        let taken = strip.bottom_ports();
        for v in below.window_start()..below.window_end() {
            if below.label(v).is_strand() && !taken.contains(&v) {
                edges.push(Edge::Seg { bot: (r - 1, v), top: (r, v) });
            }
        }
    }
    let bottom = &levels[0];
    for v in bottom.window_start()..bottom.window_end() {
        if bottom.label(v).is_strand() {
            edges.push(Edge::RayDown { port: (0, v) });
        }
    }
    let t = Tangle::new(levels.to_vec(), edges);
    t.check_ports(false, true);
    t.assert_consistent();
    t
}

impl StretchedDiagram {
    /// Build the stretched diagram of `t` at charges `(p, q)`.
    pub fn of_tableau(t: &StandardTableau, p: i64, q: i64) -> Self {
        let chain = t.chain();
        let levels: Vec<WeightDiagram> =
            chain.iter().map(|bp| bipartition_to_weight(bp, p, q)).collect();
        let residues = t.residue_sequence(p, q);
        let strips: Vec<Strip> = residues
            .iter()
            .enumerate()
            .map(|(idx, &c)| {
                let kind = classify_transition(&levels[idx], &levels[idx + 1], c)
                    .expect("a standard tableau grows box by box");
                Strip { kind, col: c }
            })
            .collect();
        let tangle = assemble(&levels, &strips);
        StretchedDiagram { levels, strips, tangle, p, q }
    }

    /// Rebuild a stretched diagram from explicit levels (each step must add
    /// one box); used for decoding relabelled tangles back to tableaux.
    pub fn of_levels(levels: &[WeightDiagram], p: i64, q: i64) -> Result<Self> {
        let t = decode_levels(levels, p, q)?;
        let built = StretchedDiagram::of_tableau(&t, p, q);
        if built.levels != levels {
            return Err(Error::Precondition(
                "levels do not normalize to a tableau encoding".into(),
            ));
        }
        Ok(built)
    }

    pub fn levels(&self) -> &[WeightDiagram] {
        &self.levels
    }

    pub fn strips(&self) -> &[Strip] {
        &self.strips
    }

    pub fn tangle(&self) -> &Tangle {
        &self.tangle
    }

    pub fn size(&self) -> usize {
        self.strips.len()
    }

    pub fn charges(&self) -> (i64, i64) {
        (self.p, self.q)
    }

    /// The weight encoding the tableau's shape (the top level).
    pub fn shape_weight(&self) -> &WeightDiagram {
        self.levels.last().expect("levels are nonempty")
    }

    /// The tableau this diagram was built from.
    pub fn tableau(&self) -> StandardTableau {
        decode_levels(&self.levels, self.p, self.q).expect("levels of a built diagram decode")
    }

    /// All boundary cups, sorted by left endpoint.
    pub fn boundary_cups(&self) -> Vec<BoundaryCup> {
        let top = self.levels.len() - 1;
        let mut out = Vec::new();
        for c in self.tangle.components() {
            if c.closed || c.end_rays.0.is_some() || c.end_rays.1.is_some() {
                continue;
            }
            let (first, _) = *c.passes.first().expect("open component has passes");
            let (last, _) = *c.passes.last().expect("open component has passes");
            assert!(
                first.0 == top && last.0 == top,
                "open component without rays must end on the top line"
            );
            let (left, right) = (first.1.min(last.1), first.1.max(last.1));
            out.push(BoundaryCup {
                left,
                right,
                clockwise: self.tangle.port_label((top, left)) == Label::Up,
            });
        }
        out.sort_by_key(|b| b.left);
        out
    }

    /// Number of clockwise boundary cups (the tier of the tableau).
    pub fn tier(&self) -> usize {
        self.boundary_cups().iter().filter(|b| b.clockwise).count()
    }

    /// The weight of the tableau: the shape weight with the two endpoint
    /// labels of every clockwise boundary cup switched.
    pub fn weight(&self) -> WeightDiagram {
        let top = self.levels.len() - 1;
        let mut w = self.shape_weight().clone();
        for b in self.boundary_cups() {
            if b.clockwise {
                for v in [b.left, b.right] {
                    let l = self.tangle.port_label((top, v));
                    w.set_label(v, l.flipped());
                }
            }
        }
        w
    }

    /// Degree: clockwise cup strips minus anticlockwise cap strips, reading
    /// orientations off the level labels at the strip's own ports.
    pub fn degree(&self) -> i64 {
        let mut deg = 0;
        for (idx, s) in self.strips.iter().enumerate() {
            let r = idx + 1;
            match s.kind {
                StripKind::Cup if self.levels[r].label(s.col) == Label::Up => deg += 1,
                StripKind::Cap if self.levels[r - 1].label(s.col) == Label::Down => deg -= 1,
                _ => {}
            }
        }
        deg
    }

    /// Component census of the bare tangle: (ccw circles, cw circles, lines
    /// to the bottom boundary, boundary cups).  An independent traversal used
    /// to cross-check the strip-based statistics.
    pub fn census(&self) -> (usize, usize, usize, usize) {
        let (mut ccw, mut cw, mut lines, mut cups) = (0, 0, 0, 0);
        for c in self.tangle.components() {
            match self.tangle.classify(&c) {
                CompKind::CircleCcw => ccw += 1,
                CompKind::CircleCw => cw += 1,
                CompKind::Line => {
                    if c.end_rays.0.is_some() || c.end_rays.1.is_some() {
                        lines += 1;
                    } else {
                        cups += 1;
                    }
                }
            }
        }
        (ccw, cw, lines, cups)
    }

    /// The closed composite over a contained weight `wt`: the canonical
    /// matching of `wt` is stacked above the top line as cap arcs, with rays
    /// up from the unmatched strand vertices.
    pub fn composite(&self, wt: &WeightDiagram) -> Result<Tangle> {
        let top_line = self.levels.len() - 1;
        let top = self.shape_weight();
        let m = crate::cupcap::matching_of_weight(top, wt).ok_or_else(|| {
            Error::WeightMismatch(format!(
                "`{top}` supports no cap diagram of weight `{wt}`"
            ))
        })?;
        let mut t = self.tangle.clone();
        let mut matched = Vec::new();
        for &(l, r) in m.arcs() {
            t.add_edge(Edge::Arc { line: top_line, left: l, right: r, above: true });
            matched.extend([l, r]);
        }
        for v in top.strand_positions()? {
            if !matched.contains(&v) {
                t.add_edge(Edge::RayUp { port: (top_line, v) });
            }
        }
        t.check_ports(false, false);
        Ok(t)
    }
}

/// Decode a stack of levels (each adding one box) into the tableau whose
/// chain of shapes it encodes.
pub fn decode_levels(levels: &[WeightDiagram], p: i64, q: i64) -> Result<StandardTableau> {
    let chain: Vec<_> = levels
        .iter()
        .map(|w| weight_to_bipartition(w, p, q))
        .collect::<Result<_>>()?;
    StandardTableau::from_chain(&chain)
}

/// Decode the level lines of a tangle slice `lines[0..=d]`.
pub fn decode_tangle_levels(t: &Tangle, d: usize, p: i64, q: i64) -> Result<StandardTableau> {
    decode_levels(&t.lines[..=d], p, q)
}

/// Top-line ports of an edge set; helper shared with the module action.
pub fn ports_on_line(edges: &[Edge], line: usize) -> Vec<Port> {
    let mut out = Vec::new();
    for e in edges {
        let ps: Vec<Port> = match *e {
            Edge::Arc { line: l, left, right, .. } => vec![(l, left), (l, right)],
            Edge::Seg { bot, top } => vec![bot, top],
            Edge::RayUp { port } | Edge::RayDown { port } => vec![port],
        };
        out.extend(ps.into_iter().filter(|p| p.0 == line));
    }
    out.sort_unstable();
    out.dedup();
    out
}
