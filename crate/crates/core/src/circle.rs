//! Oriented circle diagrams and the graded arc-algebra product.
//!
//! A basis element is a triple: a cup diagram drawn under a weight and a
//! cap diagram drawn over it, both oriented consistently by the weight's
//! labels.  The product of two basis elements stacks the first under the
//! second, stitches matching rays, and smooths out every facing cup-cap
//! pair in the middle with the surgery rules of [`crate::tangle`].

use crate::cupcap::{canonical_matching, enumerate_matchings, Matching};
use crate::diagram::WeightDiagram;
use crate::tangle::{Edge, SurgeryRules, Tangle};
use crate::{scalar, Error, Result, Scalar};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// An oriented circle diagram: `cups` under `base` under `caps`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CircleDiagram {
    base: WeightDiagram,
    cups: Vec<(i64, i64)>,
    caps: Vec<(i64, i64)>,
}

#[derive(Serialize, Deserialize)]
struct CircleDiagramRepr {
    base: String,
    cups: Vec<(i64, i64)>,
    caps: Vec<(i64, i64)>,
}

impl CircleDiagram {
    /// Validates that both arc families are oriented consistently by `base`.
    pub fn new(base: WeightDiagram, cups: Vec<(i64, i64)>, caps: Vec<(i64, i64)>) -> Result<Self> {
        let mut cups = cups;
        let mut caps = caps;
        cups.sort_unstable();
        caps.sort_unstable();
        Matching::new(base.clone(), cups.clone())?;
        Matching::new(base.clone(), caps.clone())?;
        Ok(CircleDiagram { base, cups, caps })
    }

    /// The unique degree-zero diagram with both halves the canonical
    /// matching of `w`: the weight idempotent.
    pub fn idempotent(w: &WeightDiagram) -> Self {
        let arcs = canonical_matching(w).arcs().to_vec();
        CircleDiagram { base: w.clone(), cups: arcs.clone(), caps: arcs }
    }

    pub fn base(&self) -> &WeightDiagram {
        &self.base
    }

    pub fn cups(&self) -> &[(i64, i64)] {
        &self.cups
    }

    pub fn caps(&self) -> &[(i64, i64)] {
        &self.caps
    }

    fn cup_matching(&self) -> Matching {
        Matching::new(self.base.clone(), self.cups.clone()).expect("validated on construction")
    }

    fn cap_matching(&self) -> Matching {
        Matching::new(self.base.clone(), self.caps.clone()).expect("validated on construction")
    }

    /// Weight of the lower half: the base with every cup anticlockwise.
    pub fn cup_weight(&self) -> WeightDiagram {
        self.cup_matching().weight()
    }

    /// Weight of the upper half: the base with every cap anticlockwise.
    pub fn cap_weight(&self) -> WeightDiagram {
        self.cap_matching().weight()
    }

    /// Total number of clockwise cups and caps.
    pub fn degree(&self) -> usize {
        self.cup_matching().clockwise_count() + self.cap_matching().clockwise_count()
    }

    /// The anti-automorphism reflecting a diagram in its base line: cups and
    /// caps trade places.  An involution with `(a·b)* = b*·a*`.
    pub fn star(&self) -> CircleDiagram {
        CircleDiagram {
            base: self.base.clone(),
            cups: self.caps.clone(),
            caps: self.cups.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let repr = CircleDiagramRepr {
            base: self.base.to_string(),
            cups: self.cups.clone(),
            caps: self.caps.clone(),
        };
        serde_json::to_string(&repr).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: CircleDiagramRepr =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad circle JSON: {e}")))?;
        let base: WeightDiagram = repr.base.parse()?;
        CircleDiagram::new(base, repr.cups, repr.caps)
    }
}

impl fmt::Display for CircleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// A finite linear combination of circle diagrams.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<CircleDiagram, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn basis(d: CircleDiagram) -> Self {
        AlgebraElement::zero().plus(d, scalar(1))
    }

    pub fn plus(mut self, d: CircleDiagram, c: Scalar) -> Self {
        self.add_term(d, c);
        self
    }

    pub fn add_term(&mut self, d: CircleDiagram, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("just inserted");
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(d, c)| (d.clone(), c * s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<CircleDiagram, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, d: &CircleDiagram) -> Scalar {
        self.terms.get(d).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// Stack `x` under `y` into the two-line tangle with stitched rays.  The
/// facing cup-cap pairs of the middle section are exactly the caps of `x`.
/// Errors if either base has infinitely many strands.
pub fn stacked_tangle(x: &CircleDiagram, y: &CircleDiagram) -> Result<Tangle> {
    let strands = x.base.strand_positions()?;
    y.base.strand_positions()?;
    let mut edges = Vec::new();
    let in_arcs = |v: i64, arcs: &[(i64, i64)]| arcs.iter().any(|&(l, r)| l == v || r == v);
    for &(l, r) in &x.cups {
        edges.push(Edge::Arc { line: 0, left: l, right: r, above: false });
    }
    for &(l, r) in &x.caps {
        edges.push(Edge::Arc { line: 0, left: l, right: r, above: true });
    }
    for &(l, r) in &y.cups {
        edges.push(Edge::Arc { line: 1, left: l, right: r, above: false });
    }
    for &(l, r) in &y.caps {
        edges.push(Edge::Arc { line: 1, left: l, right: r, above: true });
    }
    for &v in &strands {
        if !in_arcs(v, &x.cups) {
            edges.push(Edge::RayDown { port: (0, v) });
        }
        if !in_arcs(v, &x.caps) {
            // wt(caps of x) = wt(cups of y) guarantees the matching ray.
            edges.push(Edge::Seg { bot: (0, v), top: (1, v) });
        }
        if !in_arcs(v, &y.caps) {
            edges.push(Edge::RayUp { port: (1, v) });
        }
    }
    let t = Tangle::new(vec![x.base.clone(), y.base.clone()], edges);
    t.check_ports(false, false);
    Ok(t)
}

/// Read the product circle diagram off a fully smoothed two-line tangle.
pub fn collapse(t: &Tangle) -> CircleDiagram {
    assert_eq!(t.lines.len(), 2);
    assert_eq!(
        t.lines[0], t.lines[1],
        "collapse requires identical line labels"
    );
    let mut cups = Vec::new();
    let mut caps = Vec::new();
    for e in &t.edges {
        match *e {
            Edge::Arc { line: 0, left, right, above: false } => cups.push((left, right)),
            Edge::Arc { line: 1, left, right, above: true } => caps.push((left, right)),
            Edge::Seg { .. } | Edge::RayDown { .. } | Edge::RayUp { .. } => {}
            _ => panic!("collapse on a tangle with unresolved middle arcs"),
        }
    }
    CircleDiagram::new(t.lines[0].clone(), cups, caps)
        .expect("smoothed tangles collapse to valid diagrams")
}

/// Product of two basis diagrams, smoothing the middle cup-cap pairs from
/// left to right.
pub fn multiply(x: &CircleDiagram, y: &CircleDiagram, rules: SurgeryRules) -> Result<AlgebraElement> {
    let order: Vec<usize> = (0..x.caps.len()).collect(); // caps are sorted
    multiply_in_order(x, y, &order, rules)
}

/// Product smoothing the pairs in the given order (indices into the sorted
/// cap list of `x`); the result does not depend on the order.
pub fn multiply_in_order(
    x: &CircleDiagram,
    y: &CircleDiagram,
    order: &[usize],
    rules: SurgeryRules,
) -> Result<AlgebraElement> {
    if x.cap_weight() != y.cup_weight() {
        return Ok(AlgebraElement::zero());
    }
    let mut sites: Vec<(i64, i64)> = Vec::new();
    {
        assert_eq!(order.len(), x.caps.len(), "order must cover every pair");
        let mut seen = vec![false; x.caps.len()];
        for &i in order {
            assert!(!seen[i], "duplicate site in order");
            seen[i] = true;
            sites.push(x.caps[i]);
        }
    }
    let mut frontier = vec![stacked_tangle(x, y)?];
    for &site in &sites {
        let mut next = Vec::new();
        for t in frontier {
            next.extend(t.surgery_at(0, site, rules));
        }
        frontier = next;
    }
    let mut out = AlgebraElement::zero();
    for t in frontier {
        out.add_term(collapse(&t), scalar(1));
    }
    Ok(out)
}

/// Product of linear combinations.
pub fn multiply_elements(
    a: &AlgebraElement,
    b: &AlgebraElement,
    rules: SurgeryRules,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            out = out.add(&multiply(x, y, rules)?.scale(&(cx * cy)));
        }
    }
    Ok(out)
}

/// All basis diagrams over the given weight set: triples of a middle weight
/// from the set and any two of its matchings.  The set must be closed under
/// the blocks it meets (every matching weight of a member is a member), or
/// the resulting span would not be closed under multiplication.
pub fn block_basis(weights: &[WeightDiagram]) -> Result<Vec<CircleDiagram>> {
    for w in weights {
        for member in w.block_members()? {
            if !weights.contains(&member) {
                return Err(Error::Precondition(format!(
                    "weight set is not block-closed: `{member}` lies in the block of `{w}` \
                     but outside the set"
                )));
            }
        }
    }
    let mut out = Vec::new();
    for w in weights {
        let matchings = enumerate_matchings(w)?;
        for cup in &matchings {
            for cap in &matchings {
                out.push(CircleDiagram {
                    base: w.clone(),
                    cups: cup.arcs().to_vec(),
                    caps: cap.arcs().to_vec(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The full multiplication table over a basis.
pub fn multiplication_table(
    basis: &[CircleDiagram],
    rules: SurgeryRules,
) -> Result<Vec<Vec<AlgebraElement>>> {
    basis
        .iter()
        .map(|x| basis.iter().map(|y| multiply(x, y, rules)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::SurgeryRules::Standard;

    fn wd(s: &str) -> WeightDiagram {
        s.parse().unwrap()
    }

    fn cd(base: &str, cups: &[(i64, i64)], caps: &[(i64, i64)]) -> CircleDiagram {
        CircleDiagram::new(wd(base), cups.to_vec(), caps.to_vec()).unwrap()
    }

    #[test]
    fn json_roundtrip() {
        let d = cd("start=0 left=x right=o ^v^v", &[(0, 1), (2, 3)], &[(1, 2)]);
        let back = CircleDiagram::from_json(&d.to_json()).unwrap();
        assert_eq!(d, back);
        assert!(CircleDiagram::from_json("{\"base\":\"nope\",\"cups\":[],\"caps\":[]}").is_err());
    }

    #[test]
    fn idempotents_are_degree_zero_and_idempotent() {
        let w = wd("start=0 left=x right=o ^v^v");
        let e = CircleDiagram::idempotent(&w);
        assert_eq!(e.degree(), 0);
        assert_eq!(e.cup_weight(), w);
        assert_eq!(e.cap_weight(), w);
        let sq = multiply(&e, &e, Standard).unwrap();
        assert_eq!(sq, AlgebraElement::basis(e));
    }

    #[test]
    fn idempotent_acts_by_half_weight() {
        // e_lambda x = x exactly when the cup weight of x is lambda.
        let x = cd("start=0 left=x right=o ^v^v", &[(0, 1), (2, 3)], &[(1, 2)]);
        let e_match = CircleDiagram::idempotent(&x.cup_weight());
        assert_eq!(
            multiply(&e_match, &x, Standard).unwrap(),
            AlgebraElement::basis(x.clone())
        );
        let e_other = CircleDiagram::idempotent(&x.base().clone());
        assert_ne!(x.cup_weight(), *x.base());
        assert!(multiply(&e_other, &x, Standard).unwrap().is_zero());
        // And on the right by the cap weight.
        let e_cap = CircleDiagram::idempotent(&x.cap_weight());
        assert_eq!(
            multiply(&x, &e_cap, Standard).unwrap(),
            AlgebraElement::basis(x)
        );
    }

    /// The six-vertex worked product: the left smoothing is the special
    /// two-spanning-lines case (all labels kept), the right smoothing
    /// merges a small anticlockwise circle into a turn-back line, and the
    /// result is a single degree-3 diagram.
    #[test]
    fn worked_product_with_intermediate_stages() {
        let x = cd(
            "start=0 left=x right=o ^v^v^v",
            &[(2, 5), (3, 4)],
            &[(1, 2), (3, 4)],
        );
        let y = cd(
            "start=0 left=x right=o ^v^^vv",
            &[(1, 2), (3, 4)],
            &[(0, 1)],
        );
        assert_eq!(x.degree(), 1);
        assert_eq!(y.degree(), 2);
        assert_eq!(x.cap_weight(), y.cup_weight());

        // Stage 1: smoothing at (1,2) is the two-opposite-spanning-lines
        // case; exactly one output with every label unchanged.
        let t0 = stacked_tangle(&x, &y).unwrap();
        let stage1 = t0.surgery_at(0, (1, 2), Standard);
        assert_eq!(stage1.len(), 1);
        assert_eq!(stage1[0].lines[0], wd("start=0 left=x right=o ^v^v^v"));
        assert_eq!(stage1[0].lines[1], wd("start=0 left=x right=o ^v^^vv"));

        // Stage 2: smoothing at (3,4) merges the small circle at the lower
        // line into the turn-back line, reorienting vertices 3 and 4 of the
        // lower line.
        let stage2 = stage1[0].surgery_at(0, (3, 4), Standard);
        assert_eq!(stage2.len(), 1);
        assert_eq!(stage2[0].lines[0], wd("start=0 left=x right=o ^v^^vv"));
        assert_eq!(stage2[0].lines[1], wd("start=0 left=x right=o ^v^^vv"));

        let result = collapse(&stage2[0]);
        let expected = cd(
            "start=0 left=x right=o ^v^^vv",
            &[(2, 5), (3, 4)],
            &[(0, 1)],
        );
        assert_eq!(result, expected);
        assert_eq!(result.degree(), 3); // grading is additive here

        // The full product agrees, in either smoothing order.
        let prod = multiply(&x, &y, Standard).unwrap();
        assert_eq!(prod, AlgebraElement::basis(expected));
        let prod_rev = multiply_in_order(&x, &y, &[1, 0], Standard).unwrap();
        assert_eq!(prod, prod_rev);
    }

    #[test]
    fn mismatched_interface_weights_give_zero() {
        // Orthogonal idempotents within one block.
        let e1 = CircleDiagram::idempotent(&wd("start=0 left=x right=o v^"));
        let e2 = CircleDiagram::idempotent(&wd("start=0 left=x right=o ^v"));
        assert!(multiply(&e1, &e2, Standard).unwrap().is_zero());
        // Different blocks entirely (strands at different vertices).
        let far = CircleDiagram::idempotent(&wd("start=2 left=x right=o v^"));
        assert!(multiply(&e1, &far, Standard).unwrap().is_zero());
    }

    #[test]
    fn product_degree_is_additive_on_small_block() {
        // All weights containing two strands at 0,1 with fills (x, o) and
        // one cross/empty pattern: the block of v^ has two members.
        let weights = wd("start=0 left=x right=o v^").block_members().unwrap();
        let basis = block_basis(&weights).unwrap();
        let table = multiplication_table(&basis, Standard).unwrap();
        for (i, xrow) in table.iter().enumerate() {
            for (j, cell) in xrow.iter().enumerate() {
                for (d, c) in cell.terms() {
                    assert_eq!(d.degree(), basis[i].degree() + basis[j].degree());
                    assert_eq!(*c, scalar(1));
                }
            }
        }
    }

    #[test]
    fn associativity_on_small_block() {
        let weights = wd("start=1 left=x right=o ^v^v").block_members().unwrap();
        let basis = block_basis(&weights).unwrap();
        for a in &basis {
            for b in &basis {
                let ab = multiply(a, b, Standard).unwrap();
                for c in &basis {
                    let bc = multiply(b, c, Standard).unwrap();
                    let ab_c = multiply_elements(&ab, &AlgebraElement::basis(c.clone()), Standard)
                        .unwrap();
                    let a_bc = multiply_elements(&AlgebraElement::basis(a.clone()), &bc, Standard)
                        .unwrap();
                    assert_eq!(ab_c, a_bc, "({a})({b})({c})");
                }
            }
        }
    }

    #[test]
    fn mutant_rule_breaks_associativity() {
        use crate::tangle::SurgeryRules::MergeCwCwToCw;
        let weights = wd("start=1 left=x right=o ^v^v").block_members().unwrap();
        let basis = block_basis(&weights).unwrap();
        let mut broken = false;
        'outer: for a in &basis {
            for b in &basis {
                let ab = multiply(a, b, MergeCwCwToCw).unwrap();
                for c in &basis {
                    let bc = multiply(b, c, MergeCwCwToCw).unwrap();
                    let ab_c =
                        multiply_elements(&ab, &AlgebraElement::basis(c.clone()), MergeCwCwToCw)
                            .unwrap();
                    let a_bc =
                        multiply_elements(&AlgebraElement::basis(a.clone()), &bc, MergeCwCwToCw)
                            .unwrap();
                    if ab_c != a_bc {
                        broken = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(broken, "the mutant smoothing rule should fail associativity");
    }

    #[test]
    fn star_is_an_anti_automorphism() {
        let block = wd("start=0 left=x right=o ^v^v").block_members().unwrap();
        let basis = block_basis(&block).unwrap();
        for a in &basis {
            assert_eq!(a.star().star(), *a);
            assert_eq!(a.star().degree(), a.degree());
        }
        for w in &block {
            let e = CircleDiagram::idempotent(w);
            assert_eq!(e.star(), e);
        }
        for a in &basis {
            for b in &basis {
                let ab = multiply(a, b, Standard).unwrap();
                let mut ab_star = AlgebraElement::zero();
                for (t, c) in ab.terms() {
                    ab_star.add_term(t.star(), c.clone());
                }
                let bstar_astar = multiply(&b.star(), &a.star(), Standard).unwrap();
                assert_eq!(ab_star, bstar_astar, "({a})·({b})");
            }
        }
    }

    #[test]
    fn block_basis_requires_closure() {
        let block = wd("start=0 left=x right=o ^v").block_members().unwrap();
        assert_eq!(block.len(), 2);
        assert!(block_basis(&block).is_ok());
        let partial = [wd("start=0 left=x right=o ^v")];
        assert!(block_basis(&partial).is_err());
    }
}
