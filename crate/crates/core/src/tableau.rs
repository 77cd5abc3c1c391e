//! Standard tableaux on bipartition shapes and their residue sequences.
//!
//! A standard tableau fills the boxes of a pair of partitions bijectively
//! with `1..=d` so that entries increase along rows and down columns of each
//! component.  The residue of the box in row `b`, column `c` (1-based) is
//! `p + c - b` in the left component and `q + c - b` in the right one; the
//! residue sequence of a tableau lists the residues of the boxes containing
//! `1, 2, ..., d` in order.

use crate::diagram::{box_residue, Bipartition, Side};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A standard tableau on a bipartition shape.
///
/// Stored as the row fillings of the two components; the shape is implicit
/// in the row lengths.  The derived ordering (component-wise, row-major) is
/// the tie-breaking "lexicographic tableau order" used for module bases.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StandardTableau {
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(left: Vec<Vec<u32>>, right: Vec<Vec<u32>>) -> Result<Self> {
        let t = StandardTableau { left, right };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        StandardTableau { left: vec![], right: vec![] }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Precondition(format!("not a standard tableau: {msg}")));
        let mut seen = BTreeSet::new();
        for rows in [&self.left, &self.right] {
            for (i, row) in rows.iter().enumerate() {
                if row.is_empty() {
                    return bad(format!("row {} is empty", i + 1));
                }
                if i + 1 < rows.len() && rows[i + 1].len() > row.len() {
                    return bad("row lengths must weakly decrease".into());
                }
                for (j, &e) in row.iter().enumerate() {
                    if e == 0 || !seen.insert(e) {
                        return bad(format!("entry {e} repeated or zero"));
                    }
                    if j + 1 < row.len() && row[j + 1] <= e {
                        return bad(format!("row not increasing at entry {e}"));
                    }
                    if i + 1 < rows.len() && rows[i + 1].get(j).is_some_and(|&b| b <= e) {
                        return bad(format!("column not increasing at entry {e}"));
                    }
                }
            }
        }
        let d = seen.len() as u32;
        if seen.iter().next_back().is_some_and(|&m| m != d) {
            return bad(format!("entries must be exactly 1..={d}"));
        }
        Ok(())
    }

    pub fn size(&self) -> u32 {
        (self.left.iter().map(Vec::len).sum::<usize>()
            + self.right.iter().map(Vec::len).sum::<usize>()) as u32
    }

    pub fn shape(&self) -> Bipartition {
        Bipartition::new(
            self.left.iter().map(|r| r.len() as u64).collect(),
            self.right.iter().map(|r| r.len() as u64).collect(),
        )
        .expect("row lengths of a valid tableau form partitions")
    }

    pub fn rows(&self, side: Side) -> &[Vec<u32>] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// Component, row and column (1-based) of the box containing `r`.
    pub fn position_of(&self, r: u32) -> Option<(Side, u64, u64)> {
        for side in [Side::Left, Side::Right] {
            for (i, row) in self.rows(side).iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    if e == r {
                        return Some((side, i as u64 + 1, j as u64 + 1));
                    }
                }
            }
        }
        None
    }

    /// Residue of the box containing `r` at charges `(p, q)`.
    pub fn residue(&self, r: u32, p: i64, q: i64) -> i64 {
        let (side, row, col) = self.position_of(r).expect("entry in range");
        box_residue(side, p, q, row, col)
    }

    pub fn residue_sequence(&self, p: i64, q: i64) -> Vec<i64> {
        (1..=self.size()).map(|r| self.residue(r, p, q)).collect()
    }

    /// The chain of shapes `∅ = λ_0 ⊂ λ_1 ⊂ … ⊂ λ_d` where `λ_r` is the
    /// shape occupied by the entries `1..=r`.
    pub fn chain(&self) -> Vec<Bipartition> {
        let d = self.size();
        let mut boxes = vec![None; d as usize];
        for side in [Side::Left, Side::Right] {
            for (i, row) in self.rows(side).iter().enumerate() {
                for &e in row {
                    boxes[e as usize - 1] = Some((side, i + 1));
                }
            }
        }
        let mut out = vec![Bipartition::empty()];
        for b in boxes {
            let (side, row) = b.expect("validated entries cover 1..=d");
            let next = out
                .last()
                .unwrap()
                .with_added_box(side, row)
                .expect("chain of a standard tableau grows box by box");
            out.push(next);
        }
        out
    }

    /// Rebuild a tableau from a chain of shapes each adding a single box.
    pub fn from_chain(chain: &[Bipartition]) -> Result<Self> {
        let mut t = StandardTableau::empty();
        if chain.first().is_none_or(|b| *b != Bipartition::empty()) {
            return Err(Error::Precondition("chain must start at the empty shape".into()));
        }
        for (r, pair) in chain.windows(2).enumerate() {
            let (prev, next) = (&pair[0], &pair[1]);
            let mut placed = false;
            for side in [Side::Left, Side::Right] {
                for i in 1..=next.component(side).len() {
                    let (a, b) = (prev.row(side, i), next.row(side, i));
                    if a == b {
                        continue;
                    }
                    if b != a + 1 || placed {
                        return Err(Error::Precondition(format!(
                            "chain step {} does not add exactly one box",
                            r + 1
                        )));
                    }
                    let rows = match side {
                        Side::Left => &mut t.left,
                        Side::Right => &mut t.right,
                    };
                    if rows.len() < i {
                        rows.push(Vec::new());
                    }
                    rows[i - 1].push(r as u32 + 1);
                    placed = true;
                }
            }
            if !placed {
                return Err(Error::Precondition(format!("chain step {} adds no box", r + 1)));
            }
        }
        t.validate()?;
        Ok(t)
    }

    /// Apply the transposition `s_r = (r, r+1)` to the entries; `None` when
    /// the result is not standard (the two entries share a row or column
    /// boundary).
    pub fn swap(&self, r: u32) -> Option<Self> {
        let mut next = self.clone();
        for rows in [&mut next.left, &mut next.right] {
            for row in rows.iter_mut() {
                for e in row.iter_mut() {
                    if *e == r {
                        *e = r + 1;
                    } else if *e == r + 1 {
                        *e = r;
                    }
                }
            }
        }
        next.validate().ok().map(|()| next)
    }
}

impl fmt::Display for StandardTableau {
    /// `([[1,3],[2]],[[4]])`: row lists per component.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comp = |rows: &[Vec<u32>]| {
            let inner: Vec<String> = rows
                .iter()
                .map(|r| {
                    let es: Vec<String> = r.iter().map(u32::to_string).collect();
                    format!("[{}]", es.join(","))
                })
                .collect();
            format!("[{}]", inner.join(","))
        };
        write!(f, "({},{})", comp(&self.left), comp(&self.right))
    }
}

impl std::str::FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad tableau `{s}`"));
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        // Split at the comma separating the two top-level bracket groups.
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in body.char_indices() {
            match c {
                '[' => depth += 1,
                ']' => depth = depth.checked_sub(1).ok_or_else(err)?,
                ',' if depth == 0 => {
                    if split.is_some() {
                        return Err(err());
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        let split = split.ok_or_else(err)?;
        let parse_comp = |t: &str| -> Result<Vec<Vec<u32>>> {
            let inner = t
                .trim()
                .strip_prefix('[')
                .and_then(|u| u.strip_suffix(']'))
                .ok_or_else(err)?
                .trim();
            if inner.is_empty() {
                return Ok(vec![]);
            }
            inner
                .split("],")
                .map(|row| {
                    row.trim()
                        .trim_start_matches('[')
                        .trim_end_matches(']')
                        .split(',')
                        .map(|e| e.trim().parse::<u32>().map_err(|_| err()))
                        .collect()
                })
                .collect()
        };
        StandardTableau::new(parse_comp(&body[..split])?, parse_comp(&body[split + 1..])?)
    }
}

/// All standard tableaux of the given shape, sorted.
pub fn standard_tableaux(shape: &Bipartition) -> Vec<StandardTableau> {
    fn without_box(shape: &Bipartition, side: Side, row: usize) -> Bipartition {
        let mut l = shape.left().to_vec();
        let mut r = shape.right().to_vec();
        let rows = match side {
            Side::Left => &mut l,
            Side::Right => &mut r,
        };
        rows[row - 1] -= 1;
        if rows[row - 1] == 0 {
            rows.pop();
        }
        Bipartition::new(l, r).expect("removing a corner keeps both components partitions")
    }
    fn rec(shape: &Bipartition, out: &mut Vec<StandardTableau>, partial: &mut Vec<Bipartition>) {
        if shape.size() == 0 {
            let mut chain = vec![Bipartition::empty()];
            chain.extend(partial.iter().rev().cloned());
            out.push(StandardTableau::from_chain(&chain).expect("constructed box by box"));
            return;
        }
        for (side, row) in shape.removable_boxes() {
            partial.push(shape.clone());
            rec(&without_box(shape, side, row), out, partial);
            partial.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut out, &mut Vec::new());
    out.sort();
    out
}

/// Is there a standard tableau (of any bipartition shape) whose residue
/// sequence at charges `(p, q)` is `seq`?
pub fn exists_tableau_with_residues(seq: &[i64], p: i64, q: i64) -> bool {
    let mut shapes = BTreeSet::from([Bipartition::empty()]);
    for &i in seq {
        let mut next = BTreeSet::new();
        for sh in &shapes {
            for (side, row) in sh.addable_boxes() {
                let col = sh.next_column(side, row);
                if box_residue(side, p, q, row as u64, col) == i {
                    next.insert(sh.with_added_box(side, row).expect("addable"));
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        shapes = next;
    }
    true
}

/// The standard tableau (of any bipartition shape) with the given residue
/// sequence: `Ok(None)` if there is none, an `Ambiguous` error if there are
/// several.
pub fn tableau_from_residues(seq: &[i64], p: i64, q: i64) -> Result<Option<StandardTableau>> {
    let mut chains: Vec<Vec<Bipartition>> = vec![vec![Bipartition::empty()]];
    for &i in seq {
        let mut next = Vec::new();
        for chain in &chains {
            let sh = chain.last().unwrap();
            for (side, row) in sh.addable_boxes() {
                let col = sh.next_column(side, row);
                if box_residue(side, p, q, row as u64, col) == i {
                    let mut grown = chain.clone();
                    grown.push(sh.with_added_box(side, row).expect("addable"));
                    next.push(grown);
                }
            }
        }
        if next.is_empty() {
            return Ok(None);
        }
        chains = next;
    }
    if chains.len() > 1 {
        return Err(Error::Ambiguous(format!(
            "{} standard tableaux share the residue sequence {seq:?} at ({p},{q})",
            chains.len()
        )));
    }
    Ok(Some(StandardTableau::from_chain(&chains[0])?))
}
