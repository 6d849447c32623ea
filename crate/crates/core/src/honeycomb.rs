//! Finite quotients of the honeycomb lattice by translation sublattices and
//! half-turn extensions, the 𝔖₄ vertex labeling of the Λ_{X₃} quotient, and
//! the Fourier eigenvalue multiset.
//!
//! All lattice arithmetic happens in the integer basis (v₁, v₂) with
//! v₁ = (3/2, √3/2), v₂ = (3/2, −√3/2). Black vertices sit at
//! (−1,0) + a·v₁ + b·v₂ and white vertices at (−2,0) + a·v₁ + b·v₂; the
//! adjacency rule is black(a,b) ~ white(a,b), white(a+1,b), white(a,b+1).
//! The half-turn about the origin acts as R(black(a,b)) = white(1−a,1−b) and
//! R(white(a,b)) = black(1−a,1−b). No floating point: membership and
//! reduction use a lower-triangular Hermite form of the sublattice.

use std::collections::VecDeque;

use thiserror::Error;

use crate::cover::{quotient_by_automorphisms, CoverError, CoveringMap};
use crate::graph::{Graph, GraphError};
use crate::perm::Permutation;
use crate::spectra::{IntPolynomial, SpectrumMultiset};

#[derive(Debug, Error)]
pub enum HoneycombError {
    #[error("lattice generators are linearly dependent (zero determinant)")]
    ZeroDeterminant,
    #[error("half-turn folding identifies a dart with its own reverse")]
    DartInversion,
    #[error("{0:?} is not a sublattice of the target lattice")]
    NotSublattice((i64, i64)),
    #[error("operation requires the Λ_X3 lattice (basis (2,2),(4,−2)), got {0:?}")]
    WrongLattice(((i64, i64), (i64, i64))),
    #[error("operation requires a translation-only lattice (no half turn)")]
    HalfTurnNotAllowed,
    #[error("edge weights give inconsistent path products at dart {0}")]
    InconsistentLabeling(usize),
    #[error("squared magnitude {0} is not a perfect square")]
    NonSquareMagnitude(i64),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A finite-index sublattice of ℤv₁ + ℤv₂ (basis coordinates), optionally
/// extended by the half-turn about the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    pub gen1: (i64, i64),
    pub gen2: (i64, i64),
    pub half_turn: bool,
}

impl LatticeSpec {
    pub fn new(gen1: (i64, i64), gen2: (i64, i64), half_turn: bool) -> Self {
        LatticeSpec {
            gen1,
            gen2,
            half_turn,
        }
    }

    /// The four named symmetry groups of the polyhedral quotients.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "Lambda_Q" => Some(Self::new((2, 0), (0, 2), false)),
            "Lambda_X3" => Some(Self::new((2, 2), (4, -2), false)),
            "G_K4" => Some(Self::new((2, 0), (0, 2), true)),
            "G_T" => Some(Self::new((2, 2), (4, -2), true)),
            _ => None,
        }
    }

    /// Parses `"a,b;c,d"`.
    pub fn parse(text: &str, half_turn: bool) -> Option<Self> {
        let (g1, g2) = text.split_once(';')?;
        let parse_pair = |s: &str| -> Option<(i64, i64)> {
            let (a, b) = s.split_once(',')?;
            Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
        };
        Some(Self::new(parse_pair(g1)?, parse_pair(g2)?, half_turn))
    }

    pub fn det(&self) -> i64 {
        self.gen1.0 * self.gen2.1 - self.gen1.1 * self.gen2.0
    }
}

/// Lower-triangular Hermite form of a rank-2 sublattice: rows (p, 0) and
/// (y, g) with p, g > 0 and 0 ≤ y < p. Unique per lattice, so equality of
/// forms is equality of lattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    p: i64,
    y: i64,
    g: i64,
}

impl LatticeBasis {
    pub fn from_generators(gen1: (i64, i64), gen2: (i64, i64)) -> Result<Self, HoneycombError> {
        if gen1.0 * gen2.1 - gen1.1 * gen2.0 == 0 {
            return Err(HoneycombError::ZeroDeterminant);
        }
        let mut r1 = gen1;
        let mut r2 = gen2;
        // Euclid on the second coordinates until one vanishes.
        while r2.1 != 0 {
            let t = r1.1.div_euclid(r2.1);
            r1 = (r1.0 - t * r2.0, r1.1 - t * r2.1);
            std::mem::swap(&mut r1, &mut r2);
        }
        // Now r2 = (x, 0); make it the first row.
        let mut p = r2.0;
        let (mut y, mut g) = r1;
        if p < 0 {
            p = -p;
        }
        if g < 0 {
            y = -y;
            g = -g;
        }
        y = y.rem_euclid(p);
        Ok(LatticeBasis { p, y, g })
    }

    /// Canonical representative of (a, b) modulo the lattice, in
    /// [0, p) × [0, g).
    pub fn reduce(&self, a: i64, b: i64) -> (i64, i64) {
        let t = b.div_euclid(self.g);
        let a = a - t * self.y;
        (a.rem_euclid(self.p), b - t * self.g)
    }

    pub fn contains(&self, v: (i64, i64)) -> bool {
        self.reduce(v.0, v.1) == (0, 0)
    }

    /// Index in ℤ² = number of classes = |det|.
    pub fn index(&self) -> i64 {
        self.p * self.g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

/// The quotient of the honeycomb lattice by a translation sublattice, with
/// enough indexing structure to support foldings, projections and labelings.
/// Vertices are ordered blacks first, then whites, each by (a, b).
#[derive(Clone, Debug)]
pub struct TranslationQuotient {
    pub gen1: (i64, i64),
    pub gen2: (i64, i64),
    pub basis: LatticeBasis,
    pub graph: Graph,
}

impl TranslationQuotient {
    pub fn build(gen1: (i64, i64), gen2: (i64, i64)) -> Result<Self, HoneycombError> {
        let basis = LatticeBasis::from_generators(gen1, gen2)?;
        let n = basis.index() as usize;
        let class_index = |(a, b): (i64, i64)| -> usize { (a * basis.g + b) as usize };
        let mut labels = Vec::with_capacity(2 * n);
        for color in ["B", "W"] {
            for a in 0..basis.p {
                for b in 0..basis.g {
                    labels.push(format!("{}({},{})", color, a, b));
                }
            }
        }
        let mut edges = Vec::with_capacity(3 * n);
        for a in 0..basis.p {
            for b in 0..basis.g {
                let black = class_index((a, b));
                for (da, db) in [(0, 0), (1, 0), (0, 1)] {
                    let white = n + class_index(basis.reduce(a + da, b + db));
                    edges.push((black, white, 1));
                }
            }
        }
        let graph = Graph::from_edges(2 * n, Some(labels), &edges)?;
        Ok(TranslationQuotient {
            gen1,
            gen2,
            basis,
            graph,
        })
    }

    pub fn class_count(&self) -> usize {
        self.basis.index() as usize
    }

    pub fn black_vertex(&self, a: i64, b: i64) -> usize {
        let (a, b) = self.basis.reduce(a, b);
        (a * self.basis.g + b) as usize
    }

    pub fn white_vertex(&self, a: i64, b: i64) -> usize {
        self.class_count() + self.black_vertex(a, b)
    }

    pub fn vertex_class(&self, v: usize) -> (Color, (i64, i64)) {
        let n = self.class_count();
        let (color, k) = if v < n {
            (Color::Black, v)
        } else {
            (Color::White, v - n)
        };
        (color, (k as i64 / self.basis.g, k as i64 % self.basis.g))
    }

    /// Decodes a dart into (black class, direction 0..3, black_is_origin).
    fn dart_info(&self, d: usize) -> ((i64, i64), usize, bool) {
        let edge = d / 2;
        let k = (edge / 3) as i64;
        let dir = edge % 3;
        ((k / self.basis.g, k % self.basis.g), dir, d % 2 == 0)
    }

    fn dart_of(&self, black: (i64, i64), dir: usize, black_origin: bool) -> usize {
        let k = self.black_vertex(black.0, black.1);
        2 * (3 * k + dir) + usize::from(!black_origin)
    }

    /// Vertex and dart permutations of the translation by `t`.
    pub fn translation_perms(&self, t: (i64, i64)) -> (Vec<usize>, Vec<usize>) {
        let n = self.class_count();
        let mut vperm = vec![0usize; 2 * n];
        for v in 0..2 * n {
            let (color, (a, b)) = self.vertex_class(v);
            vperm[v] = match color {
                Color::Black => self.black_vertex(a + t.0, b + t.1),
                Color::White => self.white_vertex(a + t.0, b + t.1),
            };
        }
        let mut dperm = vec![0usize; self.graph.dart_count()];
        for d in 0..self.graph.dart_count() {
            let ((a, b), dir, fwd) = self.dart_info(d);
            dperm[d] = self.dart_of((a + t.0, b + t.1), dir, fwd);
        }
        (vperm, dperm)
    }

    /// Vertex and dart permutations of the half-turn R about the origin.
    /// R maps the direction-d dart at black(a,b) to the reverse of the
    /// direction-d dart at black(a′,b′), where (a′,b′) is (1−a,1−b),
    /// (−a,1−b), (1−a,−b) for d = 0, 1, 2.
    pub fn half_turn_perms(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.class_count();
        let mut vperm = vec![0usize; 2 * n];
        for v in 0..2 * n {
            let (color, (a, b)) = self.vertex_class(v);
            vperm[v] = match color {
                Color::Black => self.white_vertex(1 - a, 1 - b),
                Color::White => self.black_vertex(1 - a, 1 - b),
            };
        }
        let mut dperm = vec![0usize; self.graph.dart_count()];
        for d in 0..self.graph.dart_count() {
            let ((a, b), dir, fwd) = self.dart_info(d);
            let target = match dir {
                0 => (1 - a, 1 - b),
                1 => (-a, 1 - b),
                _ => (1 - a, -b),
            };
            dperm[d] = self.dart_of(target, dir, !fwd);
        }
        (vperm, dperm)
    }
}

/// The finite quotient graph 𝓛/Λ (or 𝓛/(Λ⋊⟨R⟩) with `half_turn`): 3-regular,
/// with 2·|det| vertices, or |det| after half-turn folding.
pub fn honeycomb_quotient(spec: &LatticeSpec) -> Result<Graph, HoneycombError> {
    let tq = TranslationQuotient::build(spec.gen1, spec.gen2)?;
    if !spec.half_turn {
        return Ok(tq.graph);
    }
    let (graph, _) = fold_half_turn(&tq)?;
    Ok(graph)
}

/// Quotient of 𝓛/Λ by the induced half-turn. Errors if the folding would
/// identify a dart with its own reverse.
pub fn fold_half_turn(tq: &TranslationQuotient) -> Result<(Graph, CoveringMap), HoneycombError> {
    let (vperm, dperm) = tq.half_turn_perms();
    match quotient_by_automorphisms(&tq.graph, &[vperm], &[dperm]) {
        Ok(pair) => Ok(pair),
        Err(CoverError::DartReversal(_)) => Err(HoneycombError::DartInversion),
        Err(e) => Err(e.into()),
    }
}

/// The natural projection 𝓛/Λ₁ → 𝓛/Λ₂ (or → 𝓛/(Λ₂⋊⟨R⟩)) for Λ₁ ⊆ Λ₂,
/// realized as the quotient of the finer graph by the residual group
/// Λ₂/Λ₁ (plus R when requested). Returns the coarse graph and the
/// covering map from the finer quotient onto it.
pub fn projection_onto(
    finer: &TranslationQuotient,
    coarser: &LatticeSpec,
) -> Result<(Graph, CoveringMap), HoneycombError> {
    let coarse_basis = LatticeBasis::from_generators(coarser.gen1, coarser.gen2)?;
    for gen in [finer.gen1, finer.gen2] {
        if !coarse_basis.contains(gen) {
            return Err(HoneycombError::NotSublattice(gen));
        }
    }
    let mut vperms = Vec::new();
    let mut dperms = Vec::new();
    for a in 0..finer.basis.p {
        for b in 0..finer.basis.g {
            if (a, b) != (0, 0) && coarse_basis.contains((a, b)) {
                let (vp, dp) = finer.translation_perms((a, b));
                vperms.push(vp);
                dperms.push(dp);
            }
        }
    }
    if coarser.half_turn {
        let (vp, dp) = finer.half_turn_perms();
        vperms.push(vp);
        dperms.push(dp);
    }
    if vperms.is_empty() {
        // Same lattice, no half turn: identity projection.
        return Ok((finer.graph.clone(), CoveringMap::identity(&finer.graph)));
    }
    match quotient_by_automorphisms(&finer.graph, &vperms, &dperms) {
        Ok(pair) => Ok(pair),
        Err(CoverError::DartReversal(_)) => Err(HoneycombError::DartInversion),
        Err(e) => Err(e.into()),
    }
}

fn lambda_x3_basis() -> LatticeBasis {
    LatticeBasis::from_generators((2, 2), (4, -2)).expect("nonzero determinant")
}

/// Edge weight of the direction-`dir` edge at black(a,b): one of the star
/// transpositions (g, 4). The generator attached to a geometric direction is
/// not constant over the lattice: it rotates with (b−a) mod 3, which is
/// Λ_X3-periodic. The base assignment at black(0,0) is
/// dir 0 ↦ (3,4), dir 1 ↦ (1,4), dir 2 ↦ (2,4); path products around every
/// hexagon then reduce to the order-3 relations (τ_i τ_j)³ = id, which is
/// what makes the labeling below well defined (a constant assignment does
/// not: its hexagon products have order 2).
fn edge_weight(a: i64, b: i64, dir: usize) -> Permutation {
    let base = [3i64, 1, 2][dir];
    let twist = (b - a).rem_euclid(3);
    let gen = ((base - 1 + twist).rem_euclid(3) + 1) as usize;
    Permutation::transposition(4, gen, 4).expect("valid points")
}

/// Labels every vertex of the Λ_X3 quotient with a permutation in 𝔖₄: the
/// base point black(0,0) gets the identity and every step along an edge
/// right-multiplies by the edge weight. Path-product consistency is verified
/// over all darts, and the resulting labels are the vertex map of a graph
/// isomorphism onto the star cover Cay(𝔖₄, {(1,4),(2,4),(3,4)}).
pub fn label_vertices_s4(tq: &TranslationQuotient) -> Result<Vec<Permutation>, HoneycombError> {
    if tq.basis != lambda_x3_basis() {
        return Err(HoneycombError::WrongLattice((tq.gen1, tq.gen2)));
    }
    let weight_of_dart = |d: usize| -> Permutation {
        let ((a, b), dir, _) = tq.dart_info(d);
        edge_weight(a, b, dir)
    };
    let nv = tq.graph.vertex_count();
    let mut labels: Vec<Option<Permutation>> = vec![None; nv];
    let start = tq.black_vertex(0, 0);
    labels[start] = Some(Permutation::identity(4));
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let here = labels[v].clone().expect("queued vertices are labeled");
        for &d in tq.graph.darts_at(v) {
            let w = tq.graph.dart(d).terminus;
            let next = here.compose(&weight_of_dart(d)).expect("degree 4");
            match &labels[w] {
                None => {
                    labels[w] = Some(next);
                    queue.push_back(w);
                }
                Some(existing) => {
                    if *existing != next {
                        return Err(HoneycombError::InconsistentLabeling(d));
                    }
                }
            }
        }
    }
    // Full consistency sweep over every dart (weights are involutions, so
    // both traversal directions impose the same relation).
    let labels: Vec<Permutation> = labels
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .expect("Λ_X3 quotient is connected");
    for d in 0..tq.graph.dart_count() {
        let dart = tq.graph.dart(d);
        let lhs = labels[dart.origin]
            .compose(&weight_of_dart(d))
            .expect("degree 4");
        if lhs != labels[dart.terminus] {
            return Err(HoneycombError::InconsistentLabeling(d));
        }
    }
    Ok(labels)
}

/// The Fourier eigenvalue multiset
/// `𝒮 = {±|1 + e^{2πki/6} + e^{2π(−k+3l)i/6}| : k ∈ ℤ/6, l ∈ ℤ/2}`,
/// computed exactly: the squared magnitudes expand through 2cos(2πm/6) ∈ ℤ
/// and must be perfect squares.
pub fn fourier_spectrum() -> Result<SpectrumMultiset, HoneycombError> {
    // 2cos(2πm/6) for m = 0..5.
    let two_cos = [2i64, 1, -1, -2, -1, 1];
    let c = |m: i64| two_cos[m.rem_euclid(6) as usize];
    let mut entries = std::collections::BTreeMap::new();
    for k in 0..6i64 {
        for l in 0..2i64 {
            let k2 = -k + 3 * l;
            let sq = 3 + c(k) + c(k2) + c(k - k2);
            let mag = (0..=3)
                .find(|m| m * m == sq)
                .ok_or(HoneycombError::NonSquareMagnitude(sq))?;
            *entries.entry(mag).or_insert(0usize) += 1;
            *entries.entry(-mag).or_insert(0usize) += 1;
        }
    }
    // ±0 collapses onto a single eigenvalue slot but keeps both multiplicities.
    Ok(SpectrumMultiset {
        entries,
        residual: IntPolynomial::one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{star_cover, validate_cover};
    use crate::graph::isomorphic;
    use crate::spectra::{charpoly, integral_spectrum};

    fn preset(name: &str) -> LatticeSpec {
        LatticeSpec::preset(name).unwrap()
    }

    #[test]
    fn parse_and_presets() {
        let s = LatticeSpec::parse("2,2;4,-2", false).unwrap();
        assert_eq!(s, preset("Lambda_X3"));
        assert_eq!(s.det(), -12);
        assert!(LatticeSpec::parse("2,2;4", false).is_none());
        assert!(LatticeSpec::preset("nope").is_none());
    }

    #[test]
    fn hermite_form_is_lattice_invariant() {
        let a = LatticeBasis::from_generators((2, 2), (4, -2)).unwrap();
        let b = LatticeBasis::from_generators((4, -2), (2, 2)).unwrap();
        let c = LatticeBasis::from_generators((6, 0), (2, 2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.index(), 12);
        let q = LatticeBasis::from_generators((2, 0), (0, 2)).unwrap();
        assert_eq!(q.index(), 4);
        assert_ne!(a, q);
        assert!(LatticeBasis::from_generators((1, 2), (2, 4)).is_err());
    }

    #[test]
    fn reduce_is_canonical() {
        let basis = LatticeBasis::from_generators((2, 2), (4, -2)).unwrap();
        for a in -8..8 {
            for b in -8..8 {
                let (ra, rb) = basis.reduce(a, b);
                assert!((0..basis.p).contains(&ra) && (0..basis.g).contains(&rb));
                // The difference must lie in the lattice.
                assert!(basis.contains((a - ra, b - rb)));
            }
        }
        assert!(basis.contains((2, 2)));
        assert!(basis.contains((4, -2)));
        assert!(!basis.contains((2, 0)));
    }

    #[test]
    fn quotient_shapes() {
        let cases = [("Lambda_Q", 8), ("Lambda_X3", 24), ("G_T", 12), ("G_K4", 4)];
        for (name, n) in cases {
            let g = honeycomb_quotient(&preset(name)).unwrap();
            assert_eq!(g.vertex_count(), n, "{}", name);
            assert_eq!(g.is_regular(), Some(3), "{}", name);
            assert!(g.is_connected(), "{}", name);
            assert!(g.validate().is_empty(), "{}", name);
        }
    }

    #[test]
    fn quotients_match_named_graphs() {
        let q = honeycomb_quotient(&preset("Lambda_Q")).unwrap();
        assert!(isomorphic(&q, &crate::cover::tests::cube_graph())
            .unwrap()
            .is_some());
        let t = honeycomb_quotient(&preset("G_T")).unwrap();
        assert!(
            isomorphic(&t, &crate::cover::tests::truncated_tetrahedron())
                .unwrap()
                .is_some()
        );
        let k = honeycomb_quotient(&preset("G_K4")).unwrap();
        assert!(isomorphic(&k, &Graph::complete(4)).unwrap().is_some());
        let x = honeycomb_quotient(&preset("Lambda_X3")).unwrap();
        let star = star_cover(3).unwrap();
        assert!(isomorphic(&x, star.total()).unwrap().is_some());
    }

    #[test]
    fn half_turn_matches_geometric_action() {
        // Float oracle, test-only: R is the point reflection through the
        // origin of the plane embedding.
        let v1 = (1.5f64, 3f64.sqrt() / 2.0);
        let v2 = (1.5f64, -(3f64.sqrt()) / 2.0);
        let black_pos = |a: f64, b: f64| (-1.0 + a * v1.0 + b * v2.0, a * v1.1 + b * v2.1);
        let white_pos = |a: f64, b: f64| (-2.0 + a * v1.0 + b * v2.0, a * v1.1 + b * v2.1);
        for a in -3..=3 {
            for b in -3..=3 {
                let (x, y) = black_pos(a as f64, b as f64);
                let (rx, ry) = white_pos((1 - a) as f64, (1 - b) as f64);
                assert!((rx + x).abs() < 1e-9 && (ry + y).abs() < 1e-9);
                let (x, y) = white_pos(a as f64, b as f64);
                let (rx, ry) = black_pos((1 - a) as f64, (1 - b) as f64);
                assert!((rx + x).abs() < 1e-9 && (ry + y).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn half_turn_is_an_involution_automorphism() {
        let tq = TranslationQuotient::build((2, 2), (4, -2)).unwrap();
        let (vp, dp) = tq.half_turn_perms();
        for v in 0..tq.graph.vertex_count() {
            assert_eq!(vp[vp[v]], v);
        }
        for d in 0..tq.graph.dart_count() {
            assert_eq!(dp[dp[d]], d);
            let before = tq.graph.dart(d);
            let after = tq.graph.dart(dp[d]);
            assert_eq!(after.origin, vp[before.origin]);
            assert_eq!(after.terminus, vp[before.terminus]);
            assert_eq!(dp[before.pair], after.pair);
        }
    }

    #[test]
    fn dart_inversion_detected() {
        // The unit lattice folds an edge onto its own reverse.
        let spec = LatticeSpec::new((1, 0), (0, 1), true);
        assert!(matches!(
            honeycomb_quotient(&spec),
            Err(HoneycombError::DartInversion)
        ));
    }

    #[test]
    fn projections_are_covering_maps() {
        let finer = TranslationQuotient::build((2, 2), (4, -2)).unwrap();
        // 𝓛/Λ_X3 → 𝓛/Λ_Q: a 3-fold cover.
        let (coarse, cover) = projection_onto(&finer, &preset("Lambda_Q")).unwrap();
        assert_eq!(coarse.vertex_count(), 8);
        assert_eq!(cover.sheets(), 3);
        assert!(validate_cover(&cover).is_empty());
        // 𝓛/Λ_X3 → 𝓛/G_T: a 2-fold cover.
        let (coarse, cover) = projection_onto(&finer, &preset("G_T")).unwrap();
        assert_eq!(coarse.vertex_count(), 12);
        assert_eq!(cover.sheets(), 2);
        assert!(validate_cover(&cover).is_empty());
        // Index bookkeeping: [Λ_Q : Λ_X3] = 12/4 = 3.
        let fine_basis = LatticeBasis::from_generators((2, 2), (4, -2)).unwrap();
        let coarse_basis = LatticeBasis::from_generators((2, 0), (0, 2)).unwrap();
        assert_eq!(fine_basis.index() / coarse_basis.index(), 3);
    }

    #[test]
    fn projection_rejects_non_sublattice() {
        let finer = TranslationQuotient::build((2, 0), (0, 2)).unwrap();
        let err = projection_onto(&finer, &preset("Lambda_X3"));
        assert!(matches!(err, Err(HoneycombError::NotSublattice(_))));
    }

    #[test]
    fn labeling_base_cases() {
        let tq = TranslationQuotient::build((2, 2), (4, -2)).unwrap();
        let labels = label_vertices_s4(&tq).unwrap();
        assert_eq!(labels[tq.black_vertex(0, 0)].one_line(), "1234");
        assert_eq!(labels[tq.white_vertex(0, 0)].one_line(), "1243");
        // Λ_X3-periodicity built in: shifting by 2v₁+2v₂ is the identity map
        // on classes, so equal labels are structural.
        assert_eq!(tq.black_vertex(2, 2), tq.black_vertex(0, 0));
    }

    #[test]
    fn labeling_is_bijective_and_respects_wrong_lattice() {
        let tq = TranslationQuotient::build((2, 2), (4, -2)).unwrap();
        let labels = label_vertices_s4(&tq).unwrap();
        let mut seen: Vec<String> = labels.iter().map(|p| p.one_line()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 24);
        let other = TranslationQuotient::build((2, 0), (0, 2)).unwrap();
        assert!(matches!(
            label_vertices_s4(&other),
            Err(HoneycombError::WrongLattice(_))
        ));
    }

    #[test]
    fn labeling_is_isomorphism_onto_star_cover() {
        let tq = TranslationQuotient::build((2, 2), (4, -2)).unwrap();
        let labels = label_vertices_s4(&tq).unwrap();
        let star = star_cover(3).unwrap();
        let map: Vec<usize> = labels
            .iter()
            .map(|p| star.total().find_vertex_by_label(&p.one_line()).unwrap())
            .collect();
        assert!(crate::graph::verify_isomorphism(
            &tq.graph,
            star.total(),
            &map
        ));
    }

    #[test]
    fn fourier_multiset() {
        let s = fourier_spectrum().unwrap();
        let want = SpectrumMultiset::from_entries(&[
            (-3, 1),
            (-2, 6),
            (-1, 3),
            (0, 4),
            (1, 3),
            (2, 6),
            (3, 1),
        ]);
        assert_eq!(s, want);
        assert_eq!(s.total_multiplicity(), 24);
    }

    #[test]
    fn fourier_equals_lattice_spectrum() {
        let x = honeycomb_quotient(&preset("Lambda_X3")).unwrap();
        let spec = integral_spectrum(&charpoly(&x)).unwrap();
        assert_eq!(spec, fourier_spectrum().unwrap());
    }
}
