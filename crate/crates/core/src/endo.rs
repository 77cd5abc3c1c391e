//! The action of circle diagrams on graded Young modules, and a brute-force
//! commutant oracle for cross-checking it.
//!
//! A basis circle diagram `x` with lower half-weight `λ` and upper
//! half-weight `μ` (both encoding bipartitions of `d`) defines a module
//! homomorphism `Y(λ) → Y(μ)`: glue the closed stacked diagram of a basis
//! tableau under `x`, smooth every facing cup-cap pair of the interface with
//! the surgery rules, and read the surviving stacks back off as basis
//! tableaux of the target.  Composition corresponds to multiplication in the
//! opposite order, so the assignment identifies the arc algebra over the
//! bipartition weights of `d` with `End(⊕_λ Y(λ))^op`.
//!
//! The oracle computes `Hom(Y(λ), Y(μ))` directly as the solution space of
//! the commutation constraints with every generator matrix `T_r`, `L_r`,
//! with no diagram combinatorics involved, and [`verify_isomorphism`] checks
//! the two descriptions against each other: the diagram images must be
//! linearly independent, span exactly the commutant, and compose opposite to
//! the product.

use crate::circle::{block_basis, multiply, CircleDiagram};
use crate::cupcap::Matching;
use crate::diagram::{bipartition_to_weight, weight_to_bipartition, Bipartition, WeightDiagram};
use crate::linalg::Matrix;
use crate::stretched::{decode_levels, StretchedDiagram};
use crate::tangle::{Edge, SurgeryRules, Tangle};
use crate::young::{GeneratorMatrices, HeckeParams, YoungModule};
use crate::{scalar, Error, Result, Scalar};
use num::Zero;
use std::collections::BTreeMap;

/// Default cap on the dimension of `⊕_λ Y(λ)` for the brute-force oracle.
pub const DEFAULT_DIMENSION_LIMIT: usize = 400;

/// A module homomorphism `Y(source) → Y(target)` as a matrix over the
/// tableau bases of the two Young modules.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomMatrix {
    source: Bipartition,
    target: Bipartition,
    matrix: Matrix,
}

impl HomMatrix {
    pub fn source(&self) -> &Bipartition {
        &self.source
    }

    pub fn target(&self) -> &Bipartition {
        &self.target
    }

    /// `target dim × source dim`; column `j` is the image of the `j`-th
    /// basis tableau.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// The composite `self` followed by `next`; `None` when the modules do
    /// not chain up.
    pub fn then(&self, next: &HomMatrix) -> Option<HomMatrix> {
        if self.target != next.source {
            return None;
        }
        Some(HomMatrix {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: &next.matrix * &self.matrix,
        })
    }

    fn flatten(&self) -> Vec<Scalar> {
        let m = &self.matrix;
        (0..m.rows())
            .flat_map(|i| (0..m.cols()).map(move |j| m[(i, j)].clone()))
            .collect()
    }
}

fn half_weight_bipartition(w: &WeightDiagram, params: &HeckeParams) -> Result<Bipartition> {
    weight_to_bipartition(w, params.p, params.q).map_err(|e| {
        Error::WeightMismatch(format!(
            "half-weight `{w}` encodes no bipartition at charges ({}, {}): {e}",
            params.p, params.q
        ))
    })
}

/// The module homomorphism of a basis circle diagram, building the source
/// and target Young modules from its two half-weights.
pub fn diagram_action(x: &CircleDiagram, params: &HeckeParams) -> Result<HomMatrix> {
    let src = half_weight_bipartition(&x.cup_weight(), params)?;
    let tgt = half_weight_bipartition(&x.cap_weight(), params)?;
    let source = YoungModule::new(params.clone(), src)?;
    let target = YoungModule::new(params.clone(), tgt)?;
    diagram_action_on(x, &source, &target, SurgeryRules::Standard)
}

/// The module homomorphism of `x` against already-built modules.  The lower
/// half-weight of `x` must be the source module's weight and the upper one
/// the target's.
pub fn diagram_action_on(
    x: &CircleDiagram,
    source: &YoungModule,
    target: &YoungModule,
    rules: SurgeryRules,
) -> Result<HomMatrix> {
    let order: Vec<usize> = (0..x.cups().len()).collect();
    diagram_action_in_order(x, source, target, &order, rules)
}

/// As [`diagram_action_on`], smoothing the interface pairs in the given
/// order (indices into the sorted cup list); the result is order-independent.
fn diagram_action_in_order(
    x: &CircleDiagram,
    source: &YoungModule,
    target: &YoungModule,
    order: &[usize],
    rules: SurgeryRules,
) -> Result<HomMatrix> {
    assert_eq!(
        (source.params().p, source.params().q),
        (target.params().p, target.params().q),
        "source and target modules must share their charges"
    );
    if x.cup_weight() != *source.lambda_weight() {
        return Err(Error::WeightMismatch(format!(
            "lower half-weight `{}` is not the source module weight `{}`",
            x.cup_weight(),
            source.lambda_weight()
        )));
    }
    if x.cap_weight() != *target.lambda_weight() {
        return Err(Error::WeightMismatch(format!(
            "upper half-weight `{}` is not the target module weight `{}`",
            x.cap_weight(),
            target.lambda_weight()
        )));
    }
    let (p, q) = (source.params().p, source.params().q);
    let d = source.strand_count();
    assert_eq!(d, target.strand_count(), "half-weights of unequal sizes");

    let mut sites: Vec<(i64, i64)> = Vec::new();
    {
        assert_eq!(order.len(), x.cups().len(), "order must cover every pair");
        let mut seen = vec![false; x.cups().len()];
        for &i in order {
            assert!(!seen[i], "duplicate site in order");
            seen[i] = true;
            sites.push(x.cups()[i]);
        }
    }

    let mut m = Matrix::zeros(target.dim(), source.dim());
    for j in 0..source.dim() {
        let t = &source.basis()[j];
        let stacked = StretchedDiagram::of_tableau(t, p, q);
        let composite = stacked.composite(source.lambda_weight())?;
        let mut frontier = vec![glue_on_top(composite, d, x)?];
        for &site in &sites {
            let mut next = Vec::new();
            for tg in frontier {
                next.extend(tg.surgery_at(d, site, rules));
            }
            frontier = next;
        }
        for tg in frontier {
            debug_assert_eq!(
                tg.lines[d], tg.lines[d + 1],
                "smoothing all interface pairs identifies the glue lines"
            );
            let s = decode_levels(&tg.lines[..=d], p, q)
                .expect("a fully smoothed action output decodes to a standard tableau");
            let caps = Matching::new(tg.lines[d + 1].clone(), x.caps().to_vec())
                .expect("the cap arcs survive the smoothing as a matching");
            assert_eq!(
                caps.weight(),
                *target.lambda_weight(),
                "action output left the target module"
            );
            let i = target
                .index_of(&s)
                .unwrap_or_else(|| panic!("output tableau {s} is not a target basis vector"));
            m[(i, j)] = &m[(i, j)] + &scalar(1);
        }
    }
    Ok(HomMatrix {
        source: source.lambda().clone(),
        target: target.lambda().clone(),
        matrix: m,
    })
}

/// Stack the circle diagram `x` on top of a closed stacked-tableau tangle
/// with top line `d`: the top rays become straight segments up to the new
/// line, whose strand vertices carry the cups, caps and rays of `x`.
fn glue_on_top(mut t: Tangle, d: usize, x: &CircleDiagram) -> Result<Tangle> {
    t.lines.push(x.base().clone());
    for e in t.edges.iter_mut() {
        if let Edge::RayUp { port } = *e {
            debug_assert_eq!(port.0, d, "top rays sit on the top line");
            *e = Edge::Seg { bot: port, top: (d + 1, port.1) };
        }
    }
    for &(l, r) in x.cups() {
        t.edges.push(Edge::Arc { line: d + 1, left: l, right: r, above: false });
    }
    for &(l, r) in x.caps() {
        t.edges.push(Edge::Arc { line: d + 1, left: l, right: r, above: true });
    }
    let in_caps = |v: i64| x.caps().iter().any(|&(a, b)| a == v || b == v);
    for v in x.base().strand_positions()? {
        if !in_caps(v) {
            t.edges.push(Edge::RayUp { port: (d + 1, v) });
        }
    }
    t.check_ports(false, false);
    t.assert_consistent();
    Ok(t)
}

/// The commutant of the generator matrices on `⊕_λ Y(λ)`, presented piece by
/// piece: a basis of `Hom(Y(source), Y(target))` for every ordered pair of
/// bipartitions of `d`.
pub struct EndomorphismSpace {
    summands: Vec<Bipartition>,
    dims: Vec<usize>,
    pieces: BTreeMap<(usize, usize), Vec<Matrix>>,
}

impl EndomorphismSpace {
    pub fn summands(&self) -> &[Bipartition] {
        &self.summands
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_module_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Basis of the piece `Hom(Y(summands[si]), Y(summands[ti]))`.
    pub fn piece(&self, si: usize, ti: usize) -> &[Matrix] {
        self.pieces.get(&(si, ti)).map_or(&[], Vec::as_slice)
    }

    pub fn piece_of(&self, source: &Bipartition, target: &Bipartition) -> &[Matrix] {
        let si = self.index_of(source);
        let ti = self.index_of(target);
        match (si, ti) {
            (Some(s), Some(t)) => self.piece(s, t),
            _ => &[],
        }
    }

    fn index_of(&self, b: &Bipartition) -> Option<usize> {
        self.summands.iter().position(|s| s == b)
    }

    /// Total dimension of the commutant.
    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(Vec::len).sum()
    }

    /// Is the homomorphism in the span of the computed commutant piece?
    pub fn contains(&self, h: &HomMatrix) -> bool {
        let (Some(si), Some(ti)) = (self.index_of(h.source()), self.index_of(h.target())) else {
            return false;
        };
        let basis = self.piece(si, ti);
        let mut vecs: Vec<Vec<Scalar>> = basis.iter().map(flatten_matrix).collect();
        let base_rank = if vecs.is_empty() {
            0
        } else {
            Matrix::from_rows(vecs.clone()).rank()
        };
        vecs.push(h.flatten());
        Matrix::from_rows(vecs).rank() == base_rank
    }
}

fn flatten_matrix(m: &Matrix) -> Vec<Scalar> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| m[(i, j)].clone()))
        .collect()
}

/// Solve `X A_g = B_g X` for all generator pairs: a basis of the space of
/// module homomorphisms between two summands.
fn commuting_maps(src: &GeneratorMatrices, tgt: &GeneratorMatrices) -> Vec<Matrix> {
    let n_src = src.l.first().map_or(1, Matrix::rows);
    let n_tgt = tgt.l.first().map_or(1, Matrix::rows);
    let cols = n_tgt * n_src;
    let gen_pairs: Vec<(&Matrix, &Matrix)> = src
        .t
        .iter()
        .zip(&tgt.t)
        .chain(src.l.iter().zip(&tgt.l))
        .collect();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, b) in gen_pairs {
        for i in 0..n_tgt {
            for j in 0..n_src {
                let mut row = vec![Scalar::zero(); cols];
                for k in 0..n_src {
                    row[i * n_src + k] = &row[i * n_src + k] + &a[(k, j)];
                }
                for k in 0..n_tgt {
                    row[k * n_src + j] = &row[k * n_src + j] - &b[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        // No generators (d = 0): every linear map is a homomorphism.
        rows.push(vec![Scalar::zero(); cols]);
    }
    Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(n_tgt, n_src, |i, j| v[i * n_src + j].clone()))
        .collect()
}

/// Compute `Hom(Y(λ), Y(μ))` for all ordered pairs of bipartitions of `d`
/// directly from the commutation constraints with every `T_r` and `L_r`.
pub fn brute_force_endomorphisms(d: u64, params: &HeckeParams) -> Result<EndomorphismSpace> {
    brute_force_endomorphisms_with_limit(d, params, DEFAULT_DIMENSION_LIMIT)
}

/// As [`brute_force_endomorphisms`] with an explicit cap on the dimension of
/// `⊕_λ Y(λ)`.
pub fn brute_force_endomorphisms_with_limit(
    d: u64,
    params: &HeckeParams,
    limit: usize,
) -> Result<EndomorphismSpace> {
    let summands = Bipartition::all_of_size(d);
    let mut modules = Vec::new();
    for b in &summands {
        modules.push(YoungModule::new(params.clone(), b.clone())?);
    }
    let dims: Vec<usize> = modules.iter().map(YoungModule::dim).collect();
    let total: usize = dims.iter().sum();
    if total > limit {
        return Err(Error::TooLarge(format!(
            "⊕ Y(λ) over bipartitions of {d} has dimension {total} > limit {limit}"
        )));
    }
    let gens: Vec<GeneratorMatrices> =
        modules.iter().map(YoungModule::generator_matrices).collect();
    let mut pieces = BTreeMap::new();
    for (si, gs) in gens.iter().enumerate() {
        for (ti, gt) in gens.iter().enumerate() {
            pieces.insert((si, ti), commuting_maps(gs, gt));
        }
    }
    Ok(EndomorphismSpace { summands, dims, pieces })
}

/// The outcome of checking the diagram action against the brute-force
/// commutant on `⊕_λ Y(λ)`.
#[derive(Clone, Debug)]
pub struct IsomorphismReport {
    pub strand_count: u64,
    /// Each summand bipartition with the dimension of its Young module.
    pub summands: Vec<(Bipartition, usize)>,
    pub total_module_dim: usize,
    /// Number of basis circle diagrams over the bipartition weights.
    pub diagram_count: usize,
    /// Dimension of the brute-force commutant.
    pub oracle_dim: usize,
    /// The diagram images are linearly independent, piece by piece.
    pub images_independent: bool,
    /// The diagram images span exactly the commutant, piece by piece.
    pub spans_match: bool,
    /// `action(x·y) = action(y) ∘ action(x)` for all composable pairs.
    pub composition_matches: bool,
}

impl IsomorphismReport {
    /// All checks passed: the diagram basis realizes the full commutant in
    /// the opposite-composition sense.
    pub fn holds(&self) -> bool {
        self.images_independent
            && self.spans_match
            && self.composition_matches
            && self.diagram_count == self.oracle_dim
    }
}

/// Check that the diagram action identifies the arc algebra over the
/// bipartition weights of `d` with the opposite endomorphism algebra of
/// `⊕_λ Y(λ)`.
pub fn verify_isomorphism(d: u64, params: &HeckeParams) -> Result<IsomorphismReport> {
    verify_isomorphism_with(d, params, SurgeryRules::Standard, DEFAULT_DIMENSION_LIMIT)
}

/// As [`verify_isomorphism`], multiplying diagrams with the given surgery
/// rules.  The action itself always uses the standard rules, so passing the
/// mutant rule set corrupts the product and must break the composition
/// check — the negative control for the verifier.
pub fn verify_isomorphism_with(
    d: u64,
    params: &HeckeParams,
    product_rules: SurgeryRules,
    limit: usize,
) -> Result<IsomorphismReport> {
    let oracle = brute_force_endomorphisms_with_limit(d, params, limit)?;
    let summands = oracle.summands().to_vec();
    let weights: Vec<WeightDiagram> = summands
        .iter()
        .map(|b| bipartition_to_weight(b, params.p, params.q))
        .collect();
    let mut modules = Vec::new();
    for b in &summands {
        modules.push(YoungModule::new(params.clone(), b.clone())?);
    }
    let index_of_weight = |w: &WeightDiagram| -> usize {
        weights
            .iter()
            .position(|u| u == w)
            .expect("half-weights of block diagrams are bipartition weights")
    };

    let diagrams = block_basis(&weights)?;
    let mut images: BTreeMap<CircleDiagram, HomMatrix> = BTreeMap::new();
    let mut grouped: BTreeMap<(usize, usize), Vec<Vec<Scalar>>> = BTreeMap::new();
    for x in &diagrams {
        let si = index_of_weight(&x.cup_weight());
        let ti = index_of_weight(&x.cap_weight());
        let h = diagram_action_on(x, &modules[si], &modules[ti], SurgeryRules::Standard)?;
        grouped.entry((si, ti)).or_default().push(h.flatten());
        images.insert(x.clone(), h);
    }

    let mut images_independent = true;
    let mut spans_match = true;
    for si in 0..summands.len() {
        for ti in 0..summands.len() {
            let img: &[Vec<Scalar>] = grouped.get(&(si, ti)).map_or(&[], Vec::as_slice);
            let oracle_basis = oracle.piece(si, ti);
            images_independent &= Matrix::independent(img);
            if img.len() != oracle_basis.len() {
                spans_match = false;
                continue;
            }
            if img.is_empty() {
                continue;
            }
            // Equal counts and independence reduce span equality to
            // containment of the oracle basis in the image span.
            let mut all = img.to_vec();
            all.extend(oracle_basis.iter().map(flatten_matrix));
            spans_match &= Matrix::from_rows(all).rank() == img.len();
        }
    }

    let mut composition_matches = true;
    for x in &diagrams {
        for y in &diagrams {
            if x.cap_weight() != y.cup_weight() {
                continue;
            }
            let product = multiply(x, y, product_rules)?;
            let hx = &images[x];
            let hy = &images[y];
            let mut lhs = Matrix::zeros(hy.matrix().rows(), hx.matrix().cols());
            for (term, c) in product.terms() {
                let ht = &images[term];
                assert_eq!(ht.source(), hx.source(), "product term changed the source");
                assert_eq!(ht.target(), hy.target(), "product term changed the target");
                lhs = &lhs + &ht.matrix().scale(c);
            }
            let rhs = hy.matrix() * hx.matrix();
            composition_matches &= lhs == rhs;
        }
    }

    Ok(IsomorphismReport {
        strand_count: d,
        summands: summands
            .iter()
            .cloned()
            .zip(oracle.dims().iter().copied())
            .collect(),
        total_module_dim: oracle.total_module_dim(),
        diagram_count: diagrams.len(),
        oracle_dim: oracle.total_dim(),
        images_independent,
        spans_match,
        composition_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Parameter;
    use crate::tableau::StandardTableau;

    fn params(p: i64, q: i64) -> HeckeParams {
        HeckeParams::new(p, q, Parameter::Degenerate).unwrap()
    }

    fn module(p: i64, q: i64, lambda: &str) -> YoungModule {
        YoungModule::new(params(p, q), lambda.parse().unwrap()).unwrap()
    }

    fn st(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn idempotent_diagrams_act_as_identity() {
        for (p, q) in [(0i64, 0i64), (0, 1)] {
            for d in 0..=2u64 {
                for lambda in Bipartition::all_of_size(d) {
                    let w = bipartition_to_weight(&lambda, p, q);
                    let x = CircleDiagram::idempotent(&w);
                    let h = diagram_action(&x, &params(p, q)).unwrap();
                    assert_eq!(h.source(), &lambda);
                    assert_eq!(h.target(), &lambda);
                    assert!(h.matrix().is_identity(), "idempotent of {lambda} at ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn worked_degree_one_action() {
        // The diagram with lower half-weight encoding ((),(2,2)) and upper
        // half-weight encoding ((1),(2,1)) at charges (0,0), with one
        // clockwise cup: it sends v_T to v_U + v_V.
        let base: WeightDiagram = "start=-1 left=x right=o v^v^".parse().unwrap();
        let x = CircleDiagram::new(base, vec![(-1, 2), (0, 1)], vec![(-1, 0), (1, 2)]).unwrap();
        assert_eq!(x.degree(), 1);
        let h = diagram_action(&x, &params(0, 0)).unwrap();
        assert_eq!(h.source(), &"[],[2,2]".parse().unwrap());
        assert_eq!(h.target(), &"[1],[2,1]".parse().unwrap());

        let source = module(0, 0, "[],[2,2]");
        let target = module(0, 0, "[1],[2,1]");
        let j = source.index_of(&st("([[2]],[[1,3],[4]])")).unwrap();
        let u = target.index_of(&st("([[2,3]],[[1],[4]])")).unwrap();
        let v = target.index_of(&st("([[2],[4]],[[1,3]])")).unwrap();
        for i in 0..target.dim() {
            let want = if i == u || i == v { scalar(1) } else { scalar(0) };
            assert_eq!(h.matrix()[(i, j)], want, "row {i}");
        }
        // The map is homogeneous: it shifts every degree by deg(x) = 1.
        for i in 0..target.dim() {
            for jj in 0..source.dim() {
                if !h.matrix()[(i, jj)].is_zero() {
                    assert_eq!(target.degrees()[i], source.degrees()[jj] + 1);
                }
            }
        }
        // Smoothing the interface pairs in the other order agrees.
        let reversed =
            diagram_action_in_order(&x, &source, &target, &[1, 0], SurgeryRules::Standard)
                .unwrap();
        assert_eq!(&reversed, &h);
    }

    #[test]
    fn action_commutes_with_the_generators() {
        for (p, q) in [(0i64, 0i64), (0, 1)] {
            for xi in [Parameter::Degenerate, Parameter::generic_default()] {
                let pars = HeckeParams::new(p, q, xi).unwrap();
                let summands = Bipartition::all_of_size(2);
                let weights: Vec<WeightDiagram> = summands
                    .iter()
                    .map(|b| bipartition_to_weight(b, p, q))
                    .collect();
                let modules: Vec<YoungModule> = summands
                    .iter()
                    .map(|b| YoungModule::new(pars.clone(), b.clone()).unwrap())
                    .collect();
                let gens: Vec<GeneratorMatrices> =
                    modules.iter().map(YoungModule::generator_matrices).collect();
                for x in block_basis(&weights).unwrap() {
                    let si = weights.iter().position(|w| *w == x.cup_weight()).unwrap();
                    let ti = weights.iter().position(|w| *w == x.cap_weight()).unwrap();
                    let h =
                        diagram_action_on(&x, &modules[si], &modules[ti], SurgeryRules::Standard)
                            .unwrap();
                    for (a, b) in gens[si].t.iter().zip(&gens[ti].t) {
                        assert_eq!(&(h.matrix() * a), &(b * h.matrix()), "{x}");
                    }
                    for (a, b) in gens[si].l.iter().zip(&gens[ti].l) {
                        assert_eq!(&(h.matrix() * a), &(b * h.matrix()), "{x}");
                    }
                    // Homogeneity: the degree shift is the diagram degree.
                    for i in 0..modules[ti].dim() {
                        for j in 0..modules[si].dim() {
                            if !h.matrix()[(i, j)].is_zero() {
                                assert_eq!(
                                    modules[ti].degrees()[i] - modules[si].degrees()[j],
                                    x.degree() as i64,
                                    "{x}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn verifier_passes_on_small_strand_counts() {
        for (p, q) in [(0i64, 0i64), (0, 1), (0, 2)] {
            for d in 1..=2u64 {
                let report = verify_isomorphism(d, &params(p, q)).unwrap();
                assert!(report.images_independent, "(a) at d={d}, ({p},{q})");
                assert!(report.spans_match, "(b) at d={d}, ({p},{q})");
                assert!(report.composition_matches, "(c) at d={d}, ({p},{q})");
                assert_eq!(report.diagram_count, report.oracle_dim, "d={d}, ({p},{q})");
                assert!(report.holds());
            }
        }
        // Frozen counts for one strand: the two bipartitions sit in one
        // block at equal charges (five diagrams) and split into two
        // singleton blocks otherwise (one diagram each).
        let r = verify_isomorphism(1, &params(0, 0)).unwrap();
        assert_eq!(r.diagram_count, 5);
        assert_eq!(r.total_module_dim, 3);
        let r = verify_isomorphism(1, &params(0, 1)).unwrap();
        assert_eq!(r.diagram_count, 2);
        assert_eq!(r.total_module_dim, 2);
    }

    #[test]
    fn mutant_product_rule_breaks_composition() {
        let r = verify_isomorphism_with(
            1,
            &params(0, 0),
            SurgeryRules::MergeCwCwToCw,
            DEFAULT_DIMENSION_LIMIT,
        )
        .unwrap();
        assert!(
            !r.composition_matches,
            "the corrupted product must fail the composition check"
        );
        assert!(!r.holds());
    }

    #[test]
    fn oracle_counts_diagrams_per_piece() {
        // dim Hom(Y(λ), Y(μ)) equals the number of basis diagrams with the
        // matching half-weights, piece by piece.
        for (p, q) in [(0i64, 0i64), (1, 0)] {
            let oracle = brute_force_endomorphisms(2, &params(p, q)).unwrap();
            let weights: Vec<WeightDiagram> = oracle
                .summands()
                .iter()
                .map(|b| bipartition_to_weight(b, p, q))
                .collect();
            let diagrams = block_basis(&weights).unwrap();
            for (si, sw) in weights.iter().enumerate() {
                for (ti, tw) in weights.iter().enumerate() {
                    let count = diagrams
                        .iter()
                        .filter(|x| x.cup_weight() == *sw && x.cap_weight() == *tw)
                        .count();
                    assert_eq!(
                        oracle.piece(si, ti).len(),
                        count,
                        "piece ({}, {})",
                        oracle.summands()[si],
                        oracle.summands()[ti]
                    );
                }
            }
            // Membership: every diagram image lies in the commutant.
            for x in &diagrams {
                let h = diagram_action(&x.clone(), &params(p, q)).unwrap();
                assert!(oracle.contains(&h), "{x}");
            }
        }
    }

    #[test]
    fn rejects_foreign_weights_and_oversized_sums() {
        // A half-weight with both fills `^` encodes no bipartition.
        let w: WeightDiagram = "start=0 left=^ right=^ -".parse().unwrap();
        let x = CircleDiagram::idempotent(&w);
        assert!(matches!(
            diagram_action(&x, &params(0, 0)),
            Err(Error::WeightMismatch(_))
        ));
        // A diagram against the wrong module weight is rejected.
        let lam = module(0, 0, "[],[1]");
        let other = module(0, 0, "[1],[]");
        let e = CircleDiagram::idempotent(lam.lambda_weight());
        assert!(matches!(
            diagram_action_on(&e, &other, &lam, SurgeryRules::Standard),
            Err(Error::WeightMismatch(_))
        ));
        // The dimension guard trips.
        assert!(matches!(
            brute_force_endomorphisms_with_limit(2, &params(0, 0), 1),
            Err(Error::TooLarge(_))
        ));
    }
}
