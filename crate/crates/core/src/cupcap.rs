//! Non-crossing cup/cap matchings over a weight diagram.
//!
//! A matching attaches finitely many non-crossing arcs to the strand
//! vertices (`v`/`^`) of a weight diagram; every unmatched strand vertex is
//! a ray to infinity.  Each arc joins one `v` and one `^` (in either order);
//! all `^` rays lie strictly left of all `v` rays; no ray sits underneath an
//! arc.  The same data describes a cap diagram (arcs above the line) or a
//! cup diagram (arcs below) — only the drawing side differs.

use crate::diagram::{Count, Label, WeightDiagram};
use crate::{Error, Result};
use std::collections::HashSet;

/// A valid set of arcs over a base weight diagram (side-agnostic).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Matching {
    base: WeightDiagram,
    arcs: Vec<(i64, i64)>,
}

impl Matching {
    pub fn new(base: WeightDiagram, mut arcs: Vec<(i64, i64)>) -> Result<Self> {
        arcs.sort();
        let mut endpoints = HashSet::new();
        for &(l, r) in &arcs {
            if l >= r {
                return Err(Error::InvalidMatching(format!(
                    "arc ({l},{r}) must run left to right"
                )));
            }
            for v in [l, r] {
                if !base.label(v).is_strand() {
                    return Err(Error::InvalidMatching(format!(
                        "arc endpoint {v} is not a strand vertex of `{base}`"
                    )));
                }
                if !endpoints.insert(v) {
                    return Err(Error::InvalidMatching(format!(
                        "vertex {v} is used by two arcs"
                    )));
                }
            }
            if base.label(l) == base.label(r) {
                return Err(Error::InvalidMatching(format!(
                    "arc ({l},{r}) joins two `{}` strands",
                    base.label(l)
                )));
            }
        }
        for (i, &(a, b)) in arcs.iter().enumerate() {
            for &(c, d) in &arcs[i + 1..] {
                if a < c && c < b && b < d {
                    return Err(Error::InvalidMatching(format!(
                        "arcs ({a},{b}) and ({c},{d}) cross"
                    )));
                }
            }
        }
        // No ray may sit underneath an arc: every strand vertex strictly
        // inside an arc span must itself be matched.
        for &(l, r) in &arcs {
            for v in l + 1..r {
                if base.label(v).is_strand() && !endpoints.contains(&v) {
                    return Err(Error::InvalidMatching(format!(
                        "ray at {v} sits underneath arc ({l},{r})"
                    )));
                }
            }
        }
        // All ^ rays strictly left of all v rays (fills included: a `v`
        // left fill floods v rays to the far left, an `^` right fill floods
        // ^ rays to the far right — each forbids rays of the other kind).
        let m = Matching { base, arcs };
        let up_rays = m.rays_with_label(Label::Up);
        let down_rays = m.rays_with_label(Label::Down);
        let has_up = !up_rays.is_empty() || m.base.right_fill() == Label::Up;
        let has_down = !down_rays.is_empty() || m.base.left_fill() == Label::Down;
        if m.base.left_fill() == Label::Down && has_up {
            return Err(Error::InvalidMatching(
                "an ^ ray lies right of the far-left v rays".into(),
            ));
        }
        if m.base.right_fill() == Label::Up && has_down {
            return Err(Error::InvalidMatching(
                "a v ray lies left of the far-right ^ rays".into(),
            ));
        }
        if let (Some(&u), Some(&d)) = (up_rays.iter().max(), down_rays.iter().min()) {
            if u > d {
                return Err(Error::InvalidMatching(format!(
                    "^ ray at {u} lies right of v ray at {d}"
                )));
            }
        }
        Ok(m)
    }

    pub fn base(&self) -> &WeightDiagram {
        &self.base
    }

    pub fn arcs(&self) -> &[(i64, i64)] {
        &self.arcs
    }

    fn matched(&self) -> HashSet<i64> {
        self.arcs.iter().flat_map(|&(l, r)| [l, r]).collect()
    }

    /// Unmatched strand vertices inside the window with the given label.
    fn rays_with_label(&self, l: Label) -> Vec<i64> {
        let matched = self.matched();
        let lo = self
            .arcs
            .first()
            .map(|&(a, _)| a.min(self.base.window_start()))
            .unwrap_or(self.base.window_start());
        let hi = self
            .arcs
            .iter()
            .map(|&(_, b)| b)
            .max()
            .map(|b| b.max(self.base.window_end() - 1))
            .unwrap_or(self.base.window_end() - 1);
        (lo..=hi)
            .filter(|&v| self.base.label(v) == l && !matched.contains(&v))
            .collect()
    }

    /// The ray vertices (finite strand sets only).
    pub fn rays(&self) -> Result<Vec<i64>> {
        let matched = self.matched();
        Ok(self
            .base
            .strand_positions()?
            .into_iter()
            .filter(|v| !matched.contains(v))
            .collect())
    }

    /// Is the arc oriented clockwise?  Counter-clockwise arcs read
    /// (v left, ^ right) and clockwise arcs (^ left, v right), for caps and
    /// cups alike.
    pub fn is_clockwise(&self, arc: (i64, i64)) -> bool {
        self.base.label(arc.0) == Label::Up
    }

    /// Number of clockwise arcs; for a cap (resp. cup) diagram this is its
    /// contribution to the degree of a circle diagram.
    pub fn clockwise_count(&self) -> usize {
        self.arcs.iter().filter(|&&a| self.is_clockwise(a)).count()
    }

    /// The weight of the oriented diagram: the base with the two labels of
    /// every clockwise arc switched.  Equivalently, every arc contributes
    /// (v left, ^ right) regardless of its orientation, and rays keep their
    /// base labels.
    pub fn weight(&self) -> WeightDiagram {
        let mut w = self.base.clone();
        for &(l, r) in &self.arcs {
            w.set_label(l, Label::Down);
            w.set_label(r, Label::Up);
        }
        w
    }

    /// Are all rays identically labelled (fills included)?  For the
    /// canonical self-matching of a weight this characterizes restricted
    /// weights.
    pub fn rays_uniform(&self) -> bool {
        let has_up =
            !self.rays_with_label(Label::Up).is_empty() || self.base.right_fill() == Label::Up
                || self.base.left_fill() == Label::Up;
        let has_down = !self.rays_with_label(Label::Down).is_empty()
            || self.base.left_fill() == Label::Down
            || self.base.right_fill() == Label::Down;
        !(has_up && has_down)
    }
}

/// The canonical matching of a weight: repeatedly join a `v` to the nearest
/// unmatched `^` to its right (stack discipline); everything left over is a
/// ray.  This is the unique matching of any cap (or cup) diagram whose
/// weight equals the base.
pub fn canonical_matching(w: &WeightDiagram) -> Matching {
    let mut lo = w.window_start();
    let mut hi = w.window_end() - 1;
    let window_ups = w.window().iter().filter(|&&l| l == Label::Up).count() as i64;
    let window_downs = w.window().iter().filter(|&&l| l == Label::Down).count() as i64;
    // With a `v` fill on the left every window `^` finds a partner below;
    // with an `^` fill on the right every leftover `v` finds one above.
    if w.left_fill() == Label::Down {
        lo -= window_ups;
    }
    if w.right_fill() == Label::Up {
        hi += window_downs;
    }
    let mut stack = Vec::new();
    let mut arcs = Vec::new();
    for v in lo..=hi {
        match w.label(v) {
            Label::Down => stack.push(v),
            Label::Up => {
                if let Some(l) = stack.pop() {
                    arcs.push((l, v));
                }
            }
            _ => {}
        }
    }
    Matching::new(w.clone(), arcs).expect("canonical matchings are always valid")
}

/// The matching over `base` whose oriented diagram has weight `wt`, if any.
/// Its arcs are forced to be the canonical matching of `wt`; the base must
/// carry one `v` and one `^` on every arc and agree with `wt` elsewhere.
pub fn matching_of_weight(base: &WeightDiagram, wt: &WeightDiagram) -> Option<Matching> {
    if base.left_fill() != wt.left_fill() || base.right_fill() != wt.right_fill() {
        return None;
    }
    let m = canonical_matching(wt);
    let mut endpoints = HashSet::new();
    for &(l, r) in m.arcs() {
        if !base.label(l).is_strand() || base.label(l) == base.label(r) {
            return None;
        }
        endpoints.insert(l);
        endpoints.insert(r);
    }
    let lo = base.window_start().min(wt.window_start());
    let hi = (base.window_end() - 1).max(wt.window_end() - 1);
    for v in lo..=hi {
        if !endpoints.contains(&v) && base.label(v) != wt.label(v) {
            return None;
        }
    }
    match Matching::new(base.clone(), m.arcs().to_vec()) {
        Ok(matching) => {
            debug_assert_eq!(&matching.weight(), wt);
            Some(matching)
        }
        Err(_) => None,
    }
}

/// Does `base` support an oriented cap (equivalently cup) diagram of weight
/// `wt`?  Written `base ⊃ wt`.
pub fn contains_weight(base: &WeightDiagram, wt: &WeightDiagram) -> bool {
    matching_of_weight(base, wt).is_some()
}

/// All matchings over the base.  The base may have one strand fill (the
/// fill vertices then carry infinitely many rays and at most finitely many
/// arc endpoints); enumeration is infinite — and an error — only when both
/// pure labels occur infinitely often.
pub fn enumerate_matchings(base: &WeightDiagram) -> Result<Vec<Matching>> {
    // Every arc pairs a `v` with a `^`, so the number of arcs is at most the
    // defect.  An arc endpoint on a strand fill at distance t from the window
    // forces the t-1 fill vertices it covers to be matched too, so arcs reach
    // at most `defect` vertices beyond the window on a strand-fill side.
    let k = match base.defect() {
        Count::Finite(k) => k as i64,
        Count::Infinite => {
            return Err(Error::InfiniteStrands(format!(
                "diagram `{base}` has infinitely many of both strand labels"
            )))
        }
    };
    let lo = base.window_start() - if base.left_fill().is_strand() { k } else { 0 };
    let hi = base.window_end() - 1 + if base.right_fill().is_strand() { k } else { 0 };
    let strands = base.strand_positions_in(lo, hi);
    // (arcs, rays) over a slice of strand positions; `complete` forbids rays.
    fn gen(base: &WeightDiagram, strands: &[i64], complete: bool) -> Vec<Vec<(i64, i64)>> {
        if strands.is_empty() {
            return vec![vec![]];
        }
        let x = strands[0];
        let mut out = Vec::new();
        if !complete {
            out.extend(gen(base, &strands[1..], false));
        }
        for k in 1..strands.len() {
            let y = strands[k];
            if base.label(x) == base.label(y) {
                continue;
            }
            for inner in gen(base, &strands[1..k], true) {
                for rest in gen(base, &strands[k + 1..], complete) {
                    let mut arcs = vec![(x, y)];
                    arcs.extend(inner.iter().copied());
                    arcs.extend(rest);
                    out.push(arcs);
                }
            }
        }
        out
    }
    let mut out = Vec::new();
    for arcs in gen(base, &strands, false) {
        if let Ok(m) = Matching::new(base.clone(), arcs) {
            out.push(m);
        }
    }
    out.sort();
    Ok(out)
}

/// All weights `wt` with `base ⊃ wt`, together with the number of clockwise
/// arcs of the witnessing diagram (one matching per weight).
pub fn covered_weights(base: &WeightDiagram) -> Result<Vec<(WeightDiagram, usize)>> {
    let mut out: Vec<(WeightDiagram, usize)> = enumerate_matchings(base)?
        .into_iter()
        .map(|m| (m.weight(), m.clockwise_count()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// All bases `b` with `b ⊃ wt`, with the clockwise arc count of the
/// witnessing diagram: switch the labels on any subset of the arcs of the
/// canonical matching of `wt`.  There are exactly `2^(#arcs)` of them.
pub fn covering_weights(wt: &WeightDiagram) -> Vec<(WeightDiagram, usize)> {
    let m = canonical_matching(wt);
    let arcs = m.arcs();
    let mut out = Vec::new();
    for mask in 0u64..(1 << arcs.len()) {
        let mut b = wt.clone();
        let mut cw = 0;
        for (i, &(l, r)) in arcs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                b.set_label(l, wt.label(l).flipped());
                b.set_label(r, wt.label(r).flipped());
                cw += 1;
            }
        }
        out.push((b, cw));
    }
    out
}

/// Is the weight restricted, i.e. are the rays of its canonical matching
/// identically labelled?
pub fn is_restricted_weight(w: &WeightDiagram) -> bool {
    canonical_matching(w).rays_uniform()
}
