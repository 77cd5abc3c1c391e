//! Stacked oriented diagrams and the surgery smoothing rules.
//!
//! A tangle is a stack of horizontal number lines (weight diagrams), bottom
//! to top, with strand pieces attached: arcs bulging below or above a line,
//! straight segments between neighbouring lines (vertical or one step
//! diagonal), and rays escaping to minus/plus infinity.  Every strand
//! vertex used by a piece has a *below* side and an *above* side; a closed
//! port carries one piece per side, and a port missing a side is a boundary
//! endpoint.
//!
//! The orientation of every connected component is encoded in the vertex
//! labels of the lines: a component is consistently labelled when each
//! vertex label points the way the strand travels through it (`^` upward,
//! `v` downward).  A closed component is counter-clockwise exactly when its
//! leftmost (lowest on ties) vertex is labelled `v`.

use crate::diagram::{Label, WeightDiagram};
use std::collections::HashMap;

/// (line index, vertex) — a strand vertex of one of the number lines.
pub type Port = (usize, i64);

/// One strand piece of a tangle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Edge {
    /// Arc with both endpoints on `line`, bulging above or below it.
    Arc { line: usize, left: i64, right: i64, above: bool },
    /// Straight segment from `bot` (on some line) to `top` (on the next).
    Seg { bot: Port, top: Port },
    /// Ray from `port` up to +infinity (top boundary line only).
    RayUp { port: Port },
    /// Ray from `port` down to -infinity (bottom boundary line only).
    RayDown { port: Port },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum PortSide {
    Below,
    Above,
}

impl PortSide {
    fn opposite(self) -> PortSide {
        match self {
            PortSide::Below => PortSide::Above,
            PortSide::Above => PortSide::Below,
        }
    }
}

impl Edge {
    /// The ports the edge attaches to, with the side it occupies there.
    fn slots(&self) -> Vec<(Port, PortSide)> {
        match *self {
            Edge::Arc { line, left, right, above } => {
                let side = if above { PortSide::Above } else { PortSide::Below };
                vec![((line, left), side), ((line, right), side)]
            }
            Edge::Seg { bot, top } => {
                vec![(bot, PortSide::Above), (top, PortSide::Below)]
            }
            Edge::RayUp { port } => vec![(port, PortSide::Above)],
            Edge::RayDown { port } => vec![(port, PortSide::Below)],
        }
    }

    /// For a two-port edge, the port other than `p`.
    fn other_port(&self, p: Port) -> Option<Port> {
        match *self {
            Edge::Arc { line, left, right, .. } => Some(if p == (line, left) {
                (line, right)
            } else {
                (line, left)
            }),
            Edge::Seg { bot, top } => Some(if p == bot { top } else { bot }),
            Edge::RayUp { .. } | Edge::RayDown { .. } => None,
        }
    }

    fn side_at(&self, p: Port) -> PortSide {
        self.slots()
            .into_iter()
            .find(|&(q, _)| q == p)
            .map(|(_, s)| s)
            .expect("edge not incident to port")
    }

    fn is_ray(&self) -> bool {
        matches!(self, Edge::RayUp { .. } | Edge::RayDown { .. })
    }
}

/// Kinds of connected component (after orientation is read off the labels).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompKind {
    CircleCcw,
    CircleCw,
    Line,
}

/// Smoothing rules used when a surgery merges or splits components.
/// `Standard` is the graded arc-algebra rule set; `MergeCwCwToCw` replaces
/// the "two clockwise circles annihilate" rule by "merge into a clockwise
/// circle" and serves as a negative control (it breaks composition).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SurgeryRules {
    Standard,
    MergeCwCwToCw,
}

/// A traced connected component.
#[derive(Clone, Debug)]
pub struct Component {
    /// Edge indices in traversal order.
    pub edges: Vec<usize>,
    /// Ports in traversal order with the traversal direction there
    /// (`true` = passing upward).
    pub passes: Vec<(Port, bool)>,
    pub closed: bool,
    /// For open components: the end edges when they are rays
    /// (`None` = the walk starts/stops at a boundary port instead).
    pub end_rays: (Option<usize>, Option<usize>),
}

impl Component {
    pub fn contains_edge(&self, eid: usize) -> bool {
        self.edges.contains(&eid)
    }
}

/// A stack of labelled number lines with strand pieces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tangle {
    pub lines: Vec<WeightDiagram>,
    pub edges: Vec<Edge>,
}

type PortMap = HashMap<Port, [Option<usize>; 2]>; // [below, above]

impl Tangle {
    pub fn new(lines: Vec<WeightDiagram>, edges: Vec<Edge>) -> Self {
        Tangle { lines, edges }
    }

    pub fn port_label(&self, p: Port) -> Label {
        self.lines[p.0].label(p.1)
    }

    pub fn set_port_label(&mut self, p: Port, l: Label) {
        self.lines[p.0].set_label(p.1, l);
    }

    fn port_map(&self) -> PortMap {
        let mut pm: PortMap = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for (p, side) in e.slots() {
                let entry = pm.entry(p).or_insert([None, None]);
                let slot = match side {
                    PortSide::Below => &mut entry[0],
                    PortSide::Above => &mut entry[1],
                };
                assert!(
                    slot.is_none(),
                    "two edges occupy the {side:?} side of port {p:?}"
                );
                *slot = Some(i);
            }
        }
        pm
    }

    fn edge_at(pm: &PortMap, p: Port, side: PortSide) -> Option<usize> {
        let sides = pm.get(&p)?;
        match side {
            PortSide::Below => sides[0],
            PortSide::Above => sides[1],
        }
    }

    /// Sanity checks: edges sit on strand vertices, strand vertices carry
    /// edges, and ports are only half-open where permitted.
    pub fn check_ports(&self, open_bottom: bool, open_top: bool) {
        let pm = self.port_map();
        for (&(line, v), sides) in &pm {
            assert!(
                self.lines[line].label(v).is_strand(),
                "edge attached to non-strand vertex {v} of line {line}"
            );
            if sides[0].is_none() {
                assert!(
                    open_bottom && line == 0,
                    "port ({line},{v}) is missing its below side"
                );
            }
            if sides[1].is_none() {
                assert!(
                    open_top && line + 1 == self.lines.len(),
                    "port ({line},{v}) is missing its above side"
                );
            }
        }
        for (i, d) in self.lines.iter().enumerate() {
            for v in d.window_start()..d.window_end() {
                if d.label(v).is_strand() {
                    assert!(
                        pm.contains_key(&(i, v)),
                        "strand vertex {v} of line {i} has no edges"
                    );
                }
            }
        }
    }

    /// Partition the edge indices into connected components (port sharing).
    fn edge_groups(&self, pm: &PortMap) -> Vec<Vec<usize>> {
        let mut group = vec![usize::MAX; self.edges.len()];
        let mut groups = Vec::new();
        for s in 0..self.edges.len() {
            if group[s] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            group[s] = id;
            while let Some(e) = stack.pop() {
                members.push(e);
                for (p, _) in self.edges[e].slots() {
                    for side in [PortSide::Below, PortSide::Above] {
                        if let Some(n) = Self::edge_at(pm, p, side) {
                            if group[n] == usize::MAX {
                                group[n] = id;
                                stack.push(n);
                            }
                        }
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }
        groups
    }

    /// Trace one component given its edge set.  Open components start at a
    /// ray or boundary endpoint; closed ones at their smallest edge index.
    fn trace_group(&self, pm: &PortMap, members: &[usize]) -> Component {
        // Find a starting endpoint.
        let ray_start = members
            .iter()
            .copied()
            .filter(|&e| self.edges[e].is_ray())
            .min();
        let boundary_start: Option<Port> = members
            .iter()
            .flat_map(|&e| self.edges[e].slots())
            .filter(|&(p, side)| Self::edge_at(pm, p, side.opposite()).is_none())
            .map(|(p, _)| p)
            .min_by_key(|&(line, v)| (v, line));

        let mut edges = Vec::new();
        let mut passes = Vec::new();

        // State: current edge and the port we entered it at (None for a ray
        // start that we are emerging from).
        let (mut cur, mut entered): (usize, Option<Port>) = if let Some(r) = ray_start {
            edges.push(r);
            (r, None)
        } else if let Some(p) = boundary_start {
            // Leave the boundary port through its single edge.
            let (side, next) = if let Some(e) = Self::edge_at(pm, p, PortSide::Above) {
                (PortSide::Above, e)
            } else {
                let e = Self::edge_at(pm, p, PortSide::Below).expect("isolated port");
                (PortSide::Below, e)
            };
            // Passing direction when leaving upward is up.
            passes.push((p, side == PortSide::Above));
            edges.push(next);
            (next, Some(p))
        } else {
            let e = members[0];
            edges.push(e);
            (e, Some(self.edges[e].slots()[0].0))
        };
        let closed = ray_start.is_none() && boundary_start.is_none();
        let start_state = (cur, entered);

        let mut guard = 0usize;
        loop {
            guard += 1;
            assert!(guard <= 2 * members.len() + 4, "tangle traversal did not terminate");
            let e = &self.edges[cur];
            let exit = match entered {
                None => e.slots()[0].0, // emerging from the starting ray
                Some(p) => match e.other_port(p) {
                    Some(q) => q,
                    None => break, // left through a ray
                },
            };
            let side = e.side_at(exit);
            passes.push((exit, side == PortSide::Below)); // from below = upward
            let next = Self::edge_at(pm, exit, side.opposite());
            match next {
                None => break, // boundary endpoint
                Some(n) => {
                    if closed && (n, Some(exit)) == start_state {
                        break;
                    }
                    edges.push(n);
                    cur = n;
                    entered = Some(exit);
                }
            }
        }
        debug_assert_eq!(
            {
                let mut a = edges.clone();
                a.sort_unstable();
                a.dedup();
                a
            },
            members.to_vec(),
            "trace did not cover the component"
        );
        let end_rays = if closed {
            (None, None)
        } else {
            (
                edges.first().copied().filter(|&i| self.edges[i].is_ray()),
                edges.last().copied().filter(|&i| self.edges[i].is_ray()),
            )
        };
        Component { edges, passes, closed, end_rays }
    }

    /// All connected components.
    pub fn components(&self) -> Vec<Component> {
        let pm = self.port_map();
        self.edge_groups(&pm)
            .iter()
            .map(|g| self.trace_group(&pm, g))
            .collect()
    }

    /// The component containing the given edge.
    pub fn component_of_edge(&self, eid: usize) -> Component {
        let pm = self.port_map();
        let groups = self.edge_groups(&pm);
        let g = groups
            .iter()
            .find(|g| g.contains(&eid))
            .expect("edge index out of range");
        self.trace_group(&pm, g)
    }

    /// Is the labelling consistent along the component?  `Some(true)`:
    /// labels equal the traversal direction, `Some(false)`: all opposite,
    /// `None`: mixed (needs relabelling).
    pub fn consistency(&self, c: &Component) -> Option<bool> {
        let mut along = true;
        let mut against = true;
        for &(p, up) in &c.passes {
            let l = self.port_label(p);
            let dir = if up { Label::Up } else { Label::Down };
            if l == dir {
                against = false;
            } else if l == dir.flipped() {
                along = false;
            } else {
                return None; // non-strand label at a port
            }
            if !along && !against {
                return None;
            }
        }
        if along {
            Some(true)
        } else {
            Some(false)
        }
    }

    /// Classify a consistently labelled component.
    pub fn classify(&self, c: &Component) -> CompKind {
        assert!(
            self.consistency(c).is_some(),
            "component labels are mixed; relabel before classifying"
        );
        if !c.closed {
            return CompKind::Line;
        }
        let p = self.leftmost_lowest(c);
        if self.port_label(p) == Label::Down {
            CompKind::CircleCcw
        } else {
            CompKind::CircleCw
        }
    }

    fn leftmost_lowest(&self, c: &Component) -> Port {
        *c.passes
            .iter()
            .map(|(p, _)| p)
            .min_by_key(|&&(line, v)| (v, line))
            .expect("component has no ports")
    }

    /// Flip every port label of the component (reverses its orientation).
    pub fn flip_component(&mut self, c: &Component) {
        for &(p, _) in &c.passes {
            let l = self.port_label(p);
            self.set_port_label(p, l.flipped());
        }
    }

    /// Make a closed component counter-clockwise (`true`) or clockwise,
    /// rewriting every label (merged circles start out mixed).
    pub fn orient_circle(&mut self, c: &Component, ccw: bool) {
        assert!(c.closed, "orient_circle needs a closed component");
        for &(p, up) in &c.passes {
            self.set_port_label(p, if up { Label::Up } else { Label::Down });
        }
        let now_ccw = self.port_label(self.leftmost_lowest(c)) == Label::Down;
        if now_ccw != ccw {
            self.flip_component(c);
        }
    }

    /// Rewrite all labels of an open component so they are consistent with
    /// the (unchanged) label at its first endpoint.
    pub fn relabel_anchored(&mut self, c: &Component) {
        assert!(!c.closed, "relabel_anchored needs an open component");
        let (p0, up0) = c.passes[0];
        let dir0 = if up0 { Label::Up } else { Label::Down };
        let along = self.port_label(p0) == dir0;
        for &(p, up) in &c.passes {
            let dir = if up { Label::Up } else { Label::Down };
            self.set_port_label(p, if along { dir } else { dir.flipped() });
        }
    }

    /// For an open component with ray ends: `Some(true)` if it runs from
    /// -infinity up to +infinity, `Some(false)` if it runs downward, `None`
    /// if it does not span both infinities (or labels are mixed).
    pub fn span_direction(&self, c: &Component) -> Option<bool> {
        let (Some(first), Some(last)) = c.end_rays else {
            return None;
        };
        let consistent = self.consistency(c)?;
        let first_down = matches!(self.edges[first], Edge::RayDown { .. });
        let last_up = matches!(self.edges[last], Edge::RayUp { .. });
        match (first_down, last_up) {
            (true, true) => Some(consistent),
            (false, false) => Some(!consistent),
            _ => None, // both ends at the same infinity: a turn-back
        }
    }

    pub fn find_edge(&self, e: Edge) -> Option<usize> {
        self.edges.iter().position(|&x| x == e)
    }

    pub fn remove_edge_value(&mut self, e: Edge) {
        let i = self.find_edge(e).expect("edge to remove not present");
        self.edges.remove(i);
    }

    pub fn add_edge(&mut self, e: Edge) -> usize {
        self.edges.push(e);
        self.edges.len() - 1
    }

    /// Surgery between `line` and `line + 1`: the cap above `line` and the
    /// cup below `line + 1`, both spanning `(l, r)`, are replaced by two
    /// straight segments, and orientations are resolved by the smoothing
    /// rules.  Returns 0, 1 or 2 tangles.
    pub fn surgery_at(&self, line: usize, (l, r): (i64, i64), rules: SurgeryRules) -> Vec<Tangle> {
        let cap = Edge::Arc { line, left: l, right: r, above: true };
        let cup = Edge::Arc { line: line + 1, left: l, right: r, above: false };
        let cap_id = self.find_edge(cap).expect("no facing cap at surgery site");
        let cup_id = self.find_edge(cup).expect("no facing cup at surgery site");
        let comp_cap = self.component_of_edge(cap_id);
        let before = if comp_cap.contains_edge(cup_id) {
            Before::Same(self.classify(&comp_cap))
        } else {
            let comp_cup = self.component_of_edge(cup_id);
            Before::Different {
                k1: self.classify(&comp_cap),
                k2: self.classify(&comp_cup),
                span1: self.span_direction(&comp_cap),
                span2: self.span_direction(&comp_cup),
            }
        };
        let mut t = self.clone();
        t.remove_edge_value(cap);
        t.remove_edge_value(cup);
        let s1 = t.add_edge(Edge::Seg { bot: (line, l), top: (line + 1, l) });
        let s2 = t.add_edge(Edge::Seg { bot: (line, r), top: (line + 1, r) });
        resolve_rewire(t, before, s1, s2, rules)
    }

    /// Debug helper: assert every component is consistently labelled.
    pub fn assert_consistent(&self) {
        for c in self.components() {
            assert!(
                self.consistency(&c).is_some(),
                "component with mixed labels: {:?}",
                c.edges
            );
        }
    }
}

/// The component situation at a smoothing site before the rewiring.
#[derive(Clone, Copy, Debug)]
pub enum Before {
    /// Both replaced pieces lay on one component (the smoothing splits it).
    Same(CompKind),
    /// The pieces lay on two components (the smoothing merges them).
    Different {
        k1: CompKind,
        k2: CompKind,
        span1: Option<bool>,
        span2: Option<bool>,
    },
}

/// Apply the orientation rules after a smoothing rewired the tangle;
/// `probe1`/`probe2` are edges of the one or two affected new components.
///
/// Splits: a counter-clockwise circle yields both ways of distributing
/// {counter-clockwise, clockwise} over the two pieces (a sum of two terms);
/// a clockwise circle yields two clockwise circles; a line keeps its labels
/// and sheds a clockwise circle.  Merges: a counter-clockwise circle is
/// absorbed without changing the other piece's orientation; two clockwise
/// circles, a clockwise circle with anything else, and two lines give zero
/// — except that two oppositely oriented lines spanning both infinities
/// reconnect with every label kept.
pub fn resolve_rewire(
    t: Tangle,
    before: Before,
    probe1: usize,
    probe2: usize,
    rules: SurgeryRules,
) -> Vec<Tangle> {
    match before {
        Before::Same(kind) => {
            let c1 = t.component_of_edge(probe1);
            assert!(
                !c1.contains_edge(probe2),
                "split smoothing produced a single component"
            );
            let c2 = t.component_of_edge(probe2);
            match kind {
                CompKind::CircleCcw => {
                    assert!(c1.closed && c2.closed, "a split circle stays closed");
                    let mut a = t.clone();
                    a.orient_circle(&c1, true);
                    a.orient_circle(&c2, false);
                    let mut b = t;
                    b.orient_circle(&c1, false);
                    b.orient_circle(&c2, true);
                    vec![a, b]
                }
                CompKind::CircleCw => {
                    assert!(c1.closed && c2.closed, "a split circle stays closed");
                    let mut a = t;
                    a.orient_circle(&c1, false);
                    a.orient_circle(&c2, false);
                    vec![a]
                }
                CompKind::Line => {
                    let (line_c, circ_c) = if c1.closed { (c2, c1) } else { (c1, c2) };
                    assert!(
                        circ_c.closed && !line_c.closed,
                        "a split line sheds one circle"
                    );
                    let mut a = t;
                    debug_assert!(
                        a.consistency(&line_c).is_some(),
                        "retained line piece must stay consistent"
                    );
                    a.orient_circle(&circ_c, false);
                    vec![a]
                }
            }
        }
        Before::Different { k1, k2, span1, span2 } => {
            use CompKind::*;
            let merged = t.component_of_edge(probe1);
            let joined = merged.contains_edge(probe2);
            match (k1, k2) {
                (CircleCcw, CircleCcw) => {
                    assert!(joined && merged.closed);
                    let mut a = t;
                    a.orient_circle(&merged, true);
                    vec![a]
                }
                (CircleCcw, CircleCw) | (CircleCw, CircleCcw) => {
                    assert!(joined && merged.closed);
                    let mut a = t;
                    a.orient_circle(&merged, false);
                    vec![a]
                }
                (CircleCw, CircleCw) => match rules {
                    SurgeryRules::Standard => vec![],
                    SurgeryRules::MergeCwCwToCw => {
                        assert!(joined && merged.closed);
                        let mut a = t;
                        a.orient_circle(&merged, false);
                        vec![a]
                    }
                },
                (CircleCcw, Line) | (Line, CircleCcw) => {
                    assert!(joined && !merged.closed);
                    let mut a = t;
                    a.relabel_anchored(&merged);
                    vec![a]
                }
                (CircleCw, Line) | (Line, CircleCw) => vec![],
                (Line, Line) => match (span1, span2) {
                    (Some(a), Some(b)) if a != b => {
                        assert!(
                            !joined,
                            "opposite spanning lines reconnect into two lines"
                        );
                        let c2 = t.component_of_edge(probe2);
                        debug_assert!(t.consistency(&merged).is_some());
                        debug_assert!(t.consistency(&c2).is_some());
                        vec![t]
                    }
                    _ => vec![],
                },
            }
        }
    }
}
