//! Weight diagrams on the integer line and their bipartition encodings.
//!
//! A weight diagram assigns one of four labels to every integer vertex:
//! `o` (empty), `v` (down), `^` (up), `x` (cross, i.e. both).  Only finitely
//! many vertices differ from two constant *fills* far to the left and right,
//! so a diagram is stored as (left fill, right fill, finite window).

use crate::{Error, Result};
use std::collections::HashSet;
use std::fmt;

/// Label at a single vertex of a weight diagram.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Label {
    /// `o` — neither a down nor an up strand.
    Empty,
    /// `v` — a single down strand.
    Down,
    /// `^` — a single up strand.
    Up,
    /// `x` — a down and an up strand sharing the vertex.
    Cross,
}

impl Label {
    pub fn to_char(self) -> char {
        match self {
            Label::Empty => 'o',
            Label::Down => 'v',
            Label::Up => '^',
            Label::Cross => 'x',
        }
    }

    pub fn from_char(c: char) -> Option<Label> {
        match c {
            'o' => Some(Label::Empty),
            'v' => Some(Label::Down),
            '^' => Some(Label::Up),
            'x' => Some(Label::Cross),
            _ => None,
        }
    }

    /// Does the label contain a down strand (`v` or `x`)?
    pub fn has_down(self) -> bool {
        matches!(self, Label::Down | Label::Cross)
    }

    /// Does the label contain an up strand (`^` or `x`)?
    pub fn has_up(self) -> bool {
        matches!(self, Label::Up | Label::Cross)
    }

    /// Is the label a single strand (`v` or `^`)?  Cup/cap arcs and rays
    /// attach exactly to these vertices.
    pub fn is_strand(self) -> bool {
        matches!(self, Label::Down | Label::Up)
    }

    /// Swap `v` and `^`, fixing `o` and `x`.
    pub fn flipped(self) -> Label {
        match self {
            Label::Down => Label::Up,
            Label::Up => Label::Down,
            other => other,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A possibly infinite cardinality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl Count {
    pub fn min(self, other: Count) -> Count {
        match (self, other) {
            (Count::Infinite, c) | (c, Count::Infinite) => c,
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a.min(b)),
        }
    }

    pub fn as_finite(self) -> Option<usize> {
        match self {
            Count::Finite(n) => Some(n),
            Count::Infinite => None,
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => write!(f, "inf"),
        }
    }
}

/// A weight diagram: labels on all of `Z`, constant far left and far right.
///
/// Stored in normal form: the first window entry differs from the left fill
/// and the last differs from the right fill; a window-free diagram has
/// `start == 0`.  The fill pair (left `v`, right `^`) is rejected — with it
/// every vertex of a cup or cap diagram would need an arc escaping to both
/// infinities.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightDiagram {
    left: Label,
    right: Label,
    start: i64,
    window: Vec<Label>,
}

impl WeightDiagram {
    pub fn new(left: Label, right: Label, start: i64, window: Vec<Label>) -> Result<Self> {
        if left == Label::Down && right == Label::Up {
            return Err(Error::InvalidDiagram(
                "fill pair (left v, right ^) is not allowed".into(),
            ));
        }
        let mut d = WeightDiagram { left, right, start, window };
        d.normalize();
        Ok(d)
    }

    fn normalize(&mut self) {
        while self.window.first() == Some(&self.left) {
            self.window.remove(0);
            self.start += 1;
        }
        while self.window.last() == Some(&self.right) {
            self.window.pop();
        }
        // With an empty window, `start` is the boundary where the left fill
        // ends; it only loses meaning when the two fills coincide.
        if self.window.is_empty() && self.left == self.right {
            self.start = 0;
        }
    }

    pub fn left_fill(&self) -> Label {
        self.left
    }

    pub fn right_fill(&self) -> Label {
        self.right
    }

    /// First vertex of the normalized window (0 when the window is empty).
    pub fn window_start(&self) -> i64 {
        self.start
    }

    /// One past the last vertex of the normalized window.
    pub fn window_end(&self) -> i64 {
        self.start + self.window.len() as i64
    }

    pub fn window(&self) -> &[Label] {
        &self.window
    }

    pub fn label(&self, v: i64) -> Label {
        if v < self.start {
            self.left
        } else if v >= self.window_end() {
            self.right
        } else {
            self.window[(v - self.start) as usize]
        }
    }

    /// Replace the label at one vertex (the window grows as needed and the
    /// result is renormalized).
    pub fn set_label(&mut self, v: i64, l: Label) {
        if v < self.start {
            if l == self.left {
                return;
            }
            let pad = (self.start - v) as usize;
            let mut w = vec![self.left; pad];
            w.extend(self.window.iter().copied());
            self.window = w;
            self.start = v;
            self.window[0] = l;
        } else if v >= self.window_end() {
            if l == self.right {
                return;
            }
            // With an empty window `start` marks the fill boundary, so the
            // gap up to `v` must be padded with the right fill, not skipped.
            while self.window_end() <= v {
                self.window.push(self.right);
            }
            let idx = (v - self.start) as usize;
            self.window[idx] = l;
        } else {
            self.window[(v - self.start) as usize] = l;
        }
        self.normalize();
    }

    pub fn with_label(&self, v: i64, l: Label) -> Self {
        let mut d = self.clone();
        d.set_label(v, l);
        d
    }

    /// Number of vertices labelled exactly `v` (`x` does not count).
    pub fn pure_down_count(&self) -> Count {
        if self.left == Label::Down || self.right == Label::Down {
            return Count::Infinite;
        }
        Count::Finite(self.window.iter().filter(|&&l| l == Label::Down).count())
    }

    /// Number of vertices labelled exactly `^` (`x` does not count).
    pub fn pure_up_count(&self) -> Count {
        if self.left == Label::Up || self.right == Label::Up {
            return Count::Infinite;
        }
        Count::Finite(self.window.iter().filter(|&&l| l == Label::Up).count())
    }

    /// Defect: min(#`v`, #`^`) over pure labels.  Constant on blocks, and
    /// equal to the maximal number of caps a diagram in the block supports.
    pub fn defect(&self) -> Count {
        self.pure_down_count().min(self.pure_up_count())
    }

    /// All strand vertices (pure `v`/`^`), finite sets only.
    pub fn strand_positions(&self) -> Result<Vec<i64>> {
        if self.left.is_strand() || self.right.is_strand() {
            return Err(Error::InfiniteStrands(format!(
                "diagram `{self}` has a strand fill"
            )));
        }
        Ok((self.start..self.window_end())
            .filter(|&v| self.label(v).is_strand())
            .collect())
    }

    /// Strand vertices within an inclusive range (works for infinite sets).
    pub fn strand_positions_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&v| self.label(v).is_strand()).collect()
    }

    /// Key identifying the block of the diagram: fills, the positions of the
    /// non-strand labels, and the pure strand counts.  Two diagrams lie in
    /// the same block exactly when one arises from the other by permuting
    /// the `v`/`^` labels.
    pub fn block_key(&self) -> BlockKey {
        let reduce = |l: Label| match l {
            Label::Empty => SkeletonLabel::Empty,
            Label::Cross => SkeletonLabel::Cross,
            Label::Down | Label::Up => SkeletonLabel::Strand,
        };
        let left = reduce(self.left);
        let right = reduce(self.right);
        let mut start = self.start;
        let mut skeleton: Vec<SkeletonLabel> = self.window.iter().map(|&l| reduce(l)).collect();
        while skeleton.first() == Some(&left) {
            skeleton.remove(0);
            start += 1;
        }
        while skeleton.last() == Some(&right) {
            skeleton.pop();
        }
        if skeleton.is_empty() {
            start = 0;
        }
        BlockKey {
            left,
            right,
            start,
            skeleton,
            down: self.pure_down_count(),
            up: self.pure_up_count(),
        }
    }

    pub fn same_block(&self, other: &WeightDiagram) -> bool {
        self.block_key() == other.block_key()
    }

    /// All diagrams in the block of `self` (finite strand sets only):
    /// every redistribution of the pure `v`/`^` labels over the strand
    /// vertices.
    pub fn block_members(&self) -> Result<Vec<WeightDiagram>> {
        let strands = self.strand_positions()?;
        let downs = match self.pure_down_count() {
            Count::Finite(n) => n,
            Count::Infinite => unreachable!(),
        };
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        fn rec(
            base: &WeightDiagram,
            strands: &[i64],
            idx: usize,
            left: usize,
            chosen: &mut Vec<i64>,
            out: &mut Vec<WeightDiagram>,
        ) {
            if left == 0 {
                let mut d = base.clone();
                for &v in strands {
                    d.set_label(v, Label::Up);
                }
                for &v in chosen.iter() {
                    d.set_label(v, Label::Down);
                }
                out.push(d);
                return;
            }
            if strands.len() - idx < left {
                return;
            }
            chosen.push(strands[idx]);
            rec(base, strands, idx + 1, left - 1, chosen, out);
            chosen.pop();
            rec(base, strands, idx + 1, left, chosen, out);
        }
        rec(self, &strands, 0, downs, &mut chosen, &mut out);
        Ok(out)
    }

    /// Bruhat order: `a <= b` when they share a block and, scanning from the
    /// far left, `a` always has at least as many pure `v` labels as `b`.
    /// The covering moves send `^ ... v` to `v ... ^` (a `v` moves left as
    /// a weight gets smaller).
    pub fn bruhat_leq(&self, other: &WeightDiagram) -> bool {
        if !self.same_block(other) {
            return false;
        }
        let lo = self.start.min(other.start);
        let hi = self.window_end().max(other.window_end());
        let mut ca = 0i64;
        let mut cb = 0i64;
        for v in lo..hi {
            if self.label(v) == Label::Down {
                ca += 1;
            }
            if other.label(v) == Label::Down {
                cb += 1;
            }
            if ca < cb {
                return false;
            }
        }
        true
    }

    /// All diagrams covered by the generating downward move
    /// `^ @ i, v @ j (i < j)  ->  v @ i, ^ @ j` for pure labels.
    /// Exponential when iterated; used as an oracle for `bruhat_leq`.
    pub fn bruhat_lower_moves(&self) -> Result<Vec<WeightDiagram>> {
        let strands = self.strand_positions()?;
        let mut out = Vec::new();
        for (a, &i) in strands.iter().enumerate() {
            if self.label(i) != Label::Up {
                continue;
            }
            for &j in &strands[a + 1..] {
                if self.label(j) != Label::Down {
                    continue;
                }
                out.push(
                    self.with_label(i, Label::Down).with_label(j, Label::Up),
                );
            }
        }
        Ok(out)
    }

    /// Transitive-closure Bruhat comparison by breadth-first search over the
    /// generating moves.  Exponential; for cross-validation on small blocks.
    pub fn bruhat_leq_bfs(&self, other: &WeightDiagram) -> Result<bool> {
        if !self.same_block(other) {
            return Ok(false);
        }
        let mut seen: HashSet<WeightDiagram> = HashSet::new();
        let mut queue = vec![other.clone()];
        seen.insert(other.clone());
        while let Some(w) = queue.pop() {
            if &w == self {
                return Ok(true);
            }
            for m in w.bruhat_lower_moves()? {
                if seen.insert(m.clone()) {
                    queue.push(m);
                }
            }
        }
        Ok(false)
    }
}

impl fmt::Display for WeightDiagram {
    /// `start=<n> left=<c> right=<c> <window>` with `-` for an empty window.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "start={} left={} right={} ",
            self.start,
            self.left.to_char(),
            self.right.to_char()
        )?;
        if self.window.is_empty() {
            write!(f, "-")
        } else {
            for l in &self.window {
                write!(f, "{}", l.to_char())?;
            }
            Ok(())
        }
    }
}

impl std::str::FromStr for WeightDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::textfmt::parse_weight_diagram(s)
    }
}

/// Window label with `v`/`^` collapsed; see [`WeightDiagram::block_key`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SkeletonLabel {
    Empty,
    Cross,
    Strand,
}

/// Identifies a block (equivalence class under permuting `v`/`^` labels).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BlockKey {
    pub left: SkeletonLabel,
    pub right: SkeletonLabel,
    pub start: i64,
    pub skeleton: Vec<SkeletonLabel>,
    pub down: Count,
    pub up: Count,
}

/// An ordered pair of partitions (weakly decreasing positive rows).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Bipartition {
    left: Vec<u64>,
    right: Vec<u64>,
}

fn check_partition(rows: &[u64], side: &str) -> Result<()> {
    for w in rows.windows(2) {
        if w[0] < w[1] {
            return Err(Error::InvalidBipartition(format!(
                "{side} component is not weakly decreasing: {rows:?}"
            )));
        }
    }
    if rows.last() == Some(&0) {
        return Err(Error::InvalidBipartition(format!(
            "{side} component has trailing zero rows: {rows:?}"
        )));
    }
    Ok(())
}

impl Bipartition {
    pub fn new(left: Vec<u64>, right: Vec<u64>) -> Result<Self> {
        check_partition(&left, "left")?;
        check_partition(&right, "right")?;
        Ok(Bipartition { left, right })
    }

    pub fn empty() -> Self {
        Bipartition { left: vec![], right: vec![] }
    }

    pub fn left(&self) -> &[u64] {
        &self.left
    }

    pub fn right(&self) -> &[u64] {
        &self.right
    }

    pub fn component(&self, side: Side) -> &[u64] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// Total number of boxes.
    pub fn size(&self) -> u64 {
        self.left.iter().sum::<u64>() + self.right.iter().sum::<u64>()
    }

    /// Row length, 0 beyond the last row (`row` is 1-based).
    pub fn row(&self, side: Side, row: usize) -> u64 {
        assert!(row >= 1);
        *self.component(side).get(row - 1).unwrap_or(&0)
    }

    /// Positions where a box can be added keeping both components partitions.
    pub fn addable_boxes(&self) -> Vec<(Side, usize)> {
        let mut out = Vec::new();
        for side in [Side::Left, Side::Right] {
            let rows = self.component(side);
            for r in 1..=rows.len() + 1 {
                let len = *rows.get(r - 1).unwrap_or(&0);
                let above = if r == 1 { u64::MAX } else { rows[r - 2] };
                if len < above {
                    out.push((side, r));
                }
            }
        }
        out
    }

    /// Positions of removable boxes (row corners).
    pub fn removable_boxes(&self) -> Vec<(Side, usize)> {
        let mut out = Vec::new();
        for side in [Side::Left, Side::Right] {
            let rows = self.component(side);
            for r in 1..=rows.len() {
                let below = *rows.get(r).unwrap_or(&0);
                if rows[r - 1] > below {
                    out.push((side, r));
                }
            }
        }
        out
    }

    pub fn with_added_box(&self, side: Side, row: usize) -> Result<Self> {
        let mut next = self.clone();
        let rows = match side {
            Side::Left => &mut next.left,
            Side::Right => &mut next.right,
        };
        if row == rows.len() + 1 {
            rows.push(1);
        } else if row <= rows.len() {
            rows[row - 1] += 1;
        } else {
            return Err(Error::InvalidBipartition(format!(
                "cannot add a box in row {row}"
            )));
        }
        check_partition(rows, "updated")?;
        Ok(next)
    }

    /// Column of the box added in `row` when growing this shape there.
    pub fn next_column(&self, side: Side, row: usize) -> u64 {
        self.row(side, row) + 1
    }

    /// All bipartitions of `n` boxes, in a deterministic order.
    pub fn all_of_size(n: u64) -> Vec<Bipartition> {
        fn partitions(n: u64) -> Vec<Vec<u64>> {
            fn rec(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
                if n == 0 {
                    out.push(cur.clone());
                    return;
                }
                let mut k = max.min(n);
                while k >= 1 {
                    cur.push(k);
                    rec(n - k, k, cur, out);
                    cur.pop();
                    k -= 1;
                }
            }
            let mut out = Vec::new();
            rec(n, n.max(1), &mut Vec::new(), &mut out);
            out
        }
        let mut out = Vec::new();
        for k in 0..=n {
            for l in partitions(k) {
                for r in partitions(n - k) {
                    out.push(Bipartition { left: l.clone(), right: r });
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    /// `[3,1],[2]` with `[]` for an empty component.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |rows: &[u64]| {
            let inner: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
            format!("[{}]", inner.join(","))
        };
        write!(f, "{},{}", part(&self.left), part(&self.right))
    }
}

impl std::str::FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::textfmt::parse_bipartition(s)
    }
}

/// Which component of a bipartition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "L"),
            Side::Right => write!(f, "R"),
        }
    }
}

/// Residue of the box in `row` and column `col` (1-based) of the given
/// component: `p + (col - row)` on the left, `q + (col - row)` on the right.
pub fn box_residue(side: Side, p: i64, q: i64, row: u64, col: u64) -> i64 {
    let offset = match side {
        Side::Left => p,
        Side::Right => q,
    };
    offset + col as i64 - row as i64
}

/// The weight diagram of a bipartition at charges `(p, q)`: a `v` strand at
/// each `p + row_i - i + 1` for the left component, an `^` strand at each
/// `q + row_i - i + 1` for the right component (rows padded by zeros), with
/// coincidences becoming `x` and absences `o`.
pub fn bipartition_to_weight(bp: &Bipartition, p: i64, q: i64) -> WeightDiagram {
    let down_tail = p - bp.left.len() as i64;
    let up_tail = q - bp.right.len() as i64;
    let downs: HashSet<i64> = bp
        .left
        .iter()
        .enumerate()
        .map(|(i, &r)| p + r as i64 - i as i64)
        .collect();
    let ups: HashSet<i64> = bp
        .right
        .iter()
        .enumerate()
        .map(|(i, &r)| q + r as i64 - i as i64)
        .collect();
    // Below `lo` every vertex is x; above `hi` every vertex is o.
    let lo = down_tail.min(up_tail);
    let hi = downs
        .iter()
        .chain(ups.iter())
        .copied()
        .chain([down_tail, up_tail])
        .max()
        .unwrap();
    let mut window = Vec::new();
    for v in lo..=hi {
        let d = v <= down_tail || downs.contains(&v);
        let u = v <= up_tail || ups.contains(&v);
        window.push(match (d, u) {
            (true, true) => Label::Cross,
            (true, false) => Label::Down,
            (false, true) => Label::Up,
            (false, false) => Label::Empty,
        });
    }
    WeightDiagram::new(Label::Cross, Label::Empty, lo, window)
        .expect("bipartition weights always normalize")
}

/// Inverse of [`bipartition_to_weight`]: recover the bipartition from a
/// diagram with fills `(x, o)`.
pub fn weight_to_bipartition(w: &WeightDiagram, p: i64, q: i64) -> Result<Bipartition> {
    if w.left_fill() != Label::Cross || w.right_fill() != Label::Empty {
        return Err(Error::InvalidDiagram(format!(
            "`{w}` does not have bipartition fills (x, o)"
        )));
    }
    let invalid = || {
        Error::InvalidDiagram(format!(
            "`{w}` is not a bipartition weight for charges ({p}, {q})"
        ))
    };
    // Row i (1-based) has length v_i - offset + i - 1 where v_i is the i-th
    // largest strand position of the relevant kind; below the window every
    // vertex carries both kinds, so the positions continue consecutively.
    let rows_from = |offset: i64, has: fn(Label) -> bool| -> Result<Vec<u64>> {
        let in_window: Vec<i64> = (w.window_start()..w.window_end())
            .rev()
            .filter(|&v| has(w.label(v)))
            .collect();
        let mut rows = Vec::new();
        let mut i = 0usize;
        loop {
            let in_tail = i >= in_window.len();
            let v = if in_tail {
                w.window_start() - 1 - (i - in_window.len()) as i64
            } else {
                in_window[i]
            };
            let row = v - offset + i as i64;
            if row < 0 || (row > 0 && in_tail) {
                return Err(invalid());
            }
            if row == 0 && in_tail {
                break;
            }
            if row > 0 {
                rows.push(row as u64);
            }
            i += 1;
        }
        Ok(rows)
    };
    let left = rows_from(p, Label::has_down)?;
    let right = rows_from(q, Label::has_up)?;
    let bp = Bipartition::new(left, right)?;
    let back = bipartition_to_weight(&bp, p, q);
    if &back != w {
        return Err(Error::InvalidDiagram(format!(
            "`{w}` is not a bipartition weight for charges ({p}, {q})"
        )));
    }
    Ok(bp)
}

/// Is the bipartition restricted at `(p, q)`?  For `p <= q` this is
/// `left_i <= right_i + q - p` for all rows, and for `p >= q` it is
/// `left_(i+p-q) <= right_i`.
pub fn is_restricted_bipartition(bp: &Bipartition, p: i64, q: i64) -> bool {
    let n = bp.left.len().max(bp.right.len()) + 1;
    if p <= q {
        let shift = (q - p) as u64;
        (1..=n).all(|i| bp.row(Side::Left, i) <= bp.row(Side::Right, i) + shift)
    } else {
        let shift = (p - q) as usize;
        (1..=n).all(|i| bp.row(Side::Left, i + shift) <= bp.row(Side::Right, i))
    }
}

/// Diagram encoding for parabolic category-O weights: the bipartition
/// diagram with every `x` at vertices `<= p - m` turned into `o`.
/// Requires `p - m == q - n` and components of height at most `m`, `n`.
pub fn embed_category_o(
    bp: &Bipartition,
    p: i64,
    q: i64,
    m: u64,
    n: u64,
) -> Result<WeightDiagram> {
    if p - m as i64 != q - n as i64 {
        return Err(Error::Precondition(format!(
            "p - m must equal q - n (got {} and {})",
            p - m as i64,
            q - n as i64
        )));
    }
    if bp.left.len() as u64 > m || bp.right.len() as u64 > n {
        return Err(Error::Precondition(
            "component heights must be bounded by m and n".into(),
        ));
    }
    let base = bipartition_to_weight(bp, p, q);
    let cut = p - m as i64;
    let mut window = Vec::new();
    let lo = cut + 1;
    let hi = base.window_end().max(lo);
    for v in lo..hi {
        window.push(base.label(v));
    }
    for v in base.window_start()..lo {
        debug_assert_eq!(base.label(v), Label::Cross);
    }
    WeightDiagram::new(Label::Empty, Label::Empty, lo, window)
}

/// Diagram encoding for integral gl(m|n) highest weights: the bipartition
/// diagram with `x -> ^` at vertices `<= p - m` and `o -> ^` at vertices
/// `> q + n`.  Requires `p <= q`, heights/widths bounded as checked.
pub fn embed_gl(
    bp: &Bipartition,
    p: i64,
    q: i64,
    m: u64,
    n: u64,
) -> Result<WeightDiagram> {
    if p > q {
        return Err(Error::Precondition("requires p <= q".into()));
    }
    let width = |rows: &[u64]| rows.first().copied().unwrap_or(0);
    if bp.left.len() as u64 > m
        || width(&bp.left) as i64 > n as i64 + q - p
        || bp.right.len() as i64 > m as i64 + q - p
        || width(&bp.right) > n
    {
        return Err(Error::Precondition(
            "bipartition does not fit the (m|n) weight lattice".into(),
        ));
    }
    let base = bipartition_to_weight(bp, p, q);
    let lo_cut = p - m as i64;
    let hi_cut = q + n as i64;
    let mut window = Vec::new();
    for v in lo_cut + 1..=hi_cut {
        window.push(base.label(v));
    }
    for v in base.window_start()..=lo_cut {
        debug_assert_eq!(base.label(v), Label::Cross);
    }
    for v in hi_cut + 1..base.window_end() {
        debug_assert_eq!(base.label(v), Label::Empty);
    }
    WeightDiagram::new(Label::Up, Label::Up, lo_cut + 1, window)
}

/// Diagram encoding for walled-Brauer weights at integral parameter `delta`:
/// `^` strands at `left_i - i + 1`, `v` strands at `i - delta - right_i`,
/// with fills `(^, v)`.
pub fn embed_walled_brauer(bp: &Bipartition, delta: i64) -> WeightDiagram {
    let ups: Vec<i64> = (1..=bp.left.len() as i64)
        .map(|i| bp.left[i as usize - 1] as i64 - i + 1)
        .collect();
    let downs: Vec<i64> = (1..=bp.right.len() as i64)
        .map(|i| i - delta - bp.right[i as usize - 1] as i64)
        .collect();
    let up_tail = -(bp.left.len() as i64); // all v <= up_tail are ^
    let down_tail = bp.right.len() as i64 + 1 - delta; // all v >= down_tail are v
    let lo = [
        up_tail + 1,
        ups.iter().copied().min().unwrap_or(i64::MAX),
        downs.iter().copied().min().unwrap_or(i64::MAX),
    ]
    .into_iter()
    .min()
    .unwrap();
    let hi = [
        down_tail - 1,
        ups.iter().copied().max().unwrap_or(i64::MIN),
        downs.iter().copied().max().unwrap_or(i64::MIN),
    ]
    .into_iter()
    .max()
    .unwrap();
    let up_set: HashSet<i64> = ups.into_iter().collect();
    let down_set: HashSet<i64> = downs.into_iter().collect();
    let mut window = Vec::new();
    for v in lo..=hi {
        let u = v <= up_tail || up_set.contains(&v);
        let d = v >= down_tail || down_set.contains(&v);
        window.push(match (d, u) {
            (true, true) => Label::Cross,
            (true, false) => Label::Down,
            (false, true) => Label::Up,
            (false, false) => Label::Empty,
        });
    }
    WeightDiagram::new(Label::Up, Label::Down, lo, window)
        .expect("(^, v) fills are admissible")
}
