//! Graph covers, Galois covers, star-graph covers of complete graphs,
//! subgroup quotients, and Frobenius automorphisms.
//!
//! The deck group acts on the right: `v·g` is `vertex_action[g][v]`, and the
//! action axiom is `v·(ab) = (v·a)·b`. For star covers this is right coset
//! multiplication, matching the composition convention pinned in [`crate::perm`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Dart, Graph, GraphError};
use crate::perm::{star_transpositions, GroupTable, PermError, Permutation, PermutationGroup};

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("malformed cover JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cover JSON fails validation: {0}")]
    InvalidSerialized(String),
    #[error("n = {0} out of supported range {1}..={2}")]
    NOutOfRange(usize, usize, usize),
    #[error("the given elements do not form a subgroup of the deck group")]
    NotSubgroup,
    #[error("subgroup is not normal in the deck group")]
    NotNormal,
    #[error("deck group has no permutation realization")]
    NoPermutationRealization,
    #[error("element {0} is not in the deck group")]
    NotInDeckGroup(String),
    #[error("no edge between base vertices {0} and {1}")]
    NoSuchBaseEdge(usize, usize),
    #[error("walk is not closed or not a dart walk")]
    BadWalk,
    #[error("start vertex {0} is not in the fiber over the walk base point")]
    StartNotInFiber(usize),
    #[error("quotient identifies a dart with its own reverse (half edge at dart {0})")]
    DartReversal(usize),
    #[error("no unique deck element carries the lift start to its end")]
    NoDeckElement,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A covering map `p: total → base`, stored with explicit vertex and dart maps.
#[derive(Clone, Debug)]
pub struct CoveringMap {
    pub total: Graph,
    pub base: Graph,
    pub vertex_map: Vec<usize>,
    pub dart_map: Vec<usize>,
}

impl CoveringMap {
    pub fn identity(g: &Graph) -> CoveringMap {
        CoveringMap {
            total: g.clone(),
            base: g.clone(),
            vertex_map: (0..g.vertex_count()).collect(),
            dart_map: (0..g.dart_count()).collect(),
        }
    }

    /// Vertices of the fiber over a base vertex.
    pub fn fiber(&self, base_vertex: usize) -> Vec<usize> {
        (0..self.total.vertex_count())
            .filter(|&v| self.vertex_map[v] == base_vertex)
            .collect()
    }

    pub fn sheets(&self) -> usize {
        if self.base.vertex_count() == 0 {
            return 0;
        }
        self.total.vertex_count() / self.base.vertex_count()
    }

    /// Lifts a closed dart walk in the base starting at `start` in the total
    /// graph; returns the visited total vertices (length = walk length + 1).
    pub fn lift_walk(&self, base_darts: &[usize], start: usize) -> Result<Vec<usize>, CoverError> {
        let mut at = start;
        let mut visited = vec![at];
        for &bd in base_darts {
            if bd >= self.base.dart_count() || self.base.dart(bd).origin != self.vertex_map[at] {
                return Err(CoverError::BadWalk);
            }
            let lifted = self
                .total
                .darts_at(at)
                .iter()
                .copied()
                .find(|&d| self.dart_map[d] == bd)
                .ok_or(CoverError::BadWalk)?;
            at = self.total.dart(lifted).terminus;
            visited.push(at);
        }
        Ok(visited)
    }
}

/// Checks all covering-map invariants; returns one message per violation.
pub fn validate_cover(c: &CoveringMap) -> Vec<String> {
    let mut issues = Vec::new();
    let nv = c.total.vertex_count();
    let nd = c.total.dart_count();
    if c.vertex_map.len() != nv {
        issues.push("vertex_map length mismatch".into());
        return issues;
    }
    if c.dart_map.len() != nd {
        issues.push("dart_map length mismatch".into());
        return issues;
    }
    let mut hit = vec![false; c.base.vertex_count()];
    for &w in &c.vertex_map {
        if w >= c.base.vertex_count() {
            issues.push(format!("vertex_map target {} out of range", w));
            return issues;
        }
        hit[w] = true;
    }
    for (w, h) in hit.iter().enumerate() {
        if !h {
            issues.push(format!("vertex_map misses base vertex {}", w));
        }
    }
    for d in 0..nd {
        let bd = c.dart_map[d];
        if bd >= c.base.dart_count() {
            issues.push(format!("dart_map target {} out of range", bd));
            return issues;
        }
        let td = c.total.dart(d);
        let bdd = c.base.dart(bd);
        if c.vertex_map[td.origin] != bdd.origin {
            issues.push(format!("dart {} does not commute with origin", d));
        }
        if c.vertex_map[td.terminus] != bdd.terminus {
            issues.push(format!("dart {} does not commute with terminus", d));
        }
        if c.dart_map[td.pair] != bdd.pair {
            issues.push(format!("dart {} does not commute with pairing", d));
        }
    }
    // Local bijectivity: darts at ṽ map bijectively onto darts at p(ṽ).
    for v in 0..nv {
        let base_v = c.vertex_map[v];
        let mut seen: Vec<usize> = c.total.darts_at(v).iter().map(|&d| c.dart_map[d]).collect();
        seen.sort_unstable();
        seen.dedup();
        let mut expected: Vec<usize> = c.base.darts_at(base_v).to_vec();
        expected.sort_unstable();
        if seen != expected {
            issues.push(format!(
                "local bijection fails at vertex {} (degree {} over degree {})",
                v,
                c.total.degree(v),
                c.base.degree(base_v)
            ));
        }
    }
    issues
}

/// The deck group of a Galois cover: an abstract multiplication table, an
/// optional permutation realization (present for star covers), and the action
/// on the total graph, per element, at vertex and dart level.
#[derive(Clone, Debug)]
pub struct DeckGroup {
    pub table: GroupTable,
    pub perms: Option<Vec<Permutation>>,
    pub vertex_action: Vec<Vec<usize>>,
    pub dart_action: Vec<Vec<usize>>,
}

impl DeckGroup {
    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// Resolves a permutation subgroup to deck element indices.
    pub fn subgroup_indices(&self, sub: &PermutationGroup) -> Result<Vec<usize>, CoverError> {
        let perms = self
            .perms
            .as_ref()
            .ok_or(CoverError::NoPermutationRealization)?;
        let mut indices = Vec::new();
        for p in sub.elements() {
            let i = perms
                .iter()
                .position(|q| q == p)
                .ok_or_else(|| CoverError::NotInDeckGroup(p.one_line()))?;
            indices.push(i);
        }
        indices.sort_unstable();
        Ok(indices)
    }

    /// True iff the sorted index list is a subgroup of the table.
    pub fn is_subgroup(&self, indices: &[usize]) -> bool {
        if indices.is_empty() || indices.binary_search(&self.table.identity).is_err() {
            return false;
        }
        indices.iter().all(|&a| {
            a < self.order()
                && indices.binary_search(&self.table.inverse_of(a)).is_ok()
                && indices
                    .iter()
                    .all(|&b| indices.binary_search(&self.table.mul(a, b)).is_ok())
        })
    }

    pub fn is_normal_subgroup(&self, indices: &[usize]) -> bool {
        self.is_subgroup(indices)
            && (0..self.order()).all(|g| {
                let ginv = self.table.inverse_of(g);
                indices.iter().all(|&h| {
                    indices
                        .binary_search(&self.table.mul(self.table.mul(ginv, h), g))
                        .is_ok()
                })
            })
    }

    /// All elements as index list.
    pub fn all_indices(&self) -> Vec<usize> {
        (0..self.order()).collect()
    }
}

/// A Galois (regular) cover: a covering map plus a deck group acting freely
/// and transitively on every fiber.
#[derive(Clone, Debug)]
pub struct GaloisCover {
    pub cover: CoveringMap,
    pub deck: DeckGroup,
}

/// Result of quotienting the total graph of a cover by a subgroup: the
/// quotient graph and the two covering maps it sits between.
#[derive(Clone, Debug)]
pub struct QuotientCover {
    pub graph: Graph,
    /// total → quotient
    pub projection: CoveringMap,
    /// quotient → base
    pub to_base: CoveringMap,
}

pub const STAR_COVER_MAX_N: usize = 5;

/// The star-graph cover: total = Cay(𝔖_{n+1}, {τ₁..τₙ}) with vertices labeled
/// by one-line notation, base = K_{n+1}, vertex map ξ ↦ ξ(n+1), deck group the
/// stabilizer of n+1 acting by right multiplication.
pub fn star_cover(n: usize) -> Result<GaloisCover, CoverError> {
    if n < 1 || n > STAR_COVER_MAX_N {
        return Err(CoverError::NOutOfRange(n, 1, STAR_COVER_MAX_N));
    }
    let m = n + 1;
    let group = PermutationGroup::symmetric(m);
    let gens = star_transpositions(n);
    let nv = group.order();

    // Total graph: vertex per permutation (sorted order), dart per (vertex,
    // generator) with the pair sitting at the other endpoint, same generator.
    let mut darts = Vec::with_capacity(nv * n);
    let mut target_vertex = vec![0usize; nv * n];
    for (v, xi) in group.elements().iter().enumerate() {
        for (i, tau) in gens.iter().enumerate() {
            let eta = xi.compose(tau).expect("same degree");
            target_vertex[v * n + i] = group.index_of(&eta).expect("closed");
        }
    }
    for v in 0..nv {
        for i in 0..n {
            let w = target_vertex[v * n + i];
            darts.push(Dart {
                origin: v,
                terminus: w,
                pair: w * n + i,
            });
        }
    }
    let labels: Vec<Option<String>> = group
        .elements()
        .iter()
        .map(|p| Some(p.one_line()))
        .collect();
    let total = Graph::from_darts(labels, darts)?;

    let base = Graph::complete(m);
    // Base dart lookup by (origin, terminus); K_{n+1} is simple.
    let mut base_dart: HashMap<(usize, usize), usize> = HashMap::new();
    for (d, dart) in base.darts().iter().enumerate() {
        base_dart.insert((dart.origin, dart.terminus), d);
    }

    let vertex_map: Vec<usize> = group.elements().iter().map(|xi| xi.apply(m) - 1).collect();
    let mut dart_map = vec![0usize; total.dart_count()];
    for (v, xi) in group.elements().iter().enumerate() {
        for i in 0..n {
            // Dart ξ → ξτ_i projects to the base dart ξ(n+1) → ξ(i).
            let from = xi.apply(m) - 1;
            let to = xi.apply(i + 1) - 1;
            dart_map[v * n + i] = base_dart[&(from, to)];
        }
    }
    let cover = CoveringMap {
        total,
        base,
        vertex_map,
        dart_map,
    };

    // Deck group: stabilizer of n+1, acting by right multiplication.
    let stab = PermutationGroup::stabilizer_of_last(m);
    let table = GroupTable::from_permutation_group(&stab);
    let mut vertex_action = Vec::with_capacity(stab.order());
    let mut dart_action = Vec::with_capacity(stab.order());
    for sigma in stab.elements() {
        let mut va = vec![0usize; nv];
        for (v, xi) in group.elements().iter().enumerate() {
            va[v] = group
                .index_of(&xi.compose(sigma).expect("deg"))
                .expect("closed");
        }
        // Dart (ξ, τ_i) ↦ (ξσ, τ_{σ⁻¹(i)}).
        let sigma_inv = sigma.inverse();
        let mut da = vec![0usize; nv * n];
        for v in 0..nv {
            for i in 0..n {
                let gi = sigma_inv.apply(i + 1) - 1;
                da[v * n + i] = va[v] * n + gi;
            }
        }
        vertex_action.push(va);
        dart_action.push(da);
    }
    let deck = DeckGroup {
        table,
        perms: Some(stab.elements().to_vec()),
        vertex_action,
        dart_action,
    };
    Ok(GaloisCover { cover, deck })
}

/// Checks automorphism, homomorphism, fiber-preservation, freeness and
/// transitivity for the deck action. Empty result = valid Galois cover.
pub fn validate_galois(g: &GaloisCover) -> Vec<String> {
    let mut issues = validate_cover(&g.cover);
    let nv = g.cover.total.vertex_count();
    let nd = g.cover.total.dart_count();
    let order = g.deck.order();
    if g.deck.vertex_action.len() != order || g.deck.dart_action.len() != order {
        issues.push("action tables have wrong size".into());
        return issues;
    }
    for e in 0..order {
        let va = &g.deck.vertex_action[e];
        let da = &g.deck.dart_action[e];
        if va.len() != nv || da.len() != nd {
            issues.push(format!("action of element {} has wrong length", e));
            return issues;
        }
        let mut seen = vec![false; nv];
        for &v in va {
            if v >= nv || seen[v] {
                issues.push(format!("element {} does not permute vertices", e));
                break;
            }
            seen[v] = true;
        }
        let mut seen_d = vec![false; nd];
        for &d in da {
            if d >= nd || seen_d[d] {
                issues.push(format!("element {} does not permute darts", e));
                break;
            }
            seen_d[d] = true;
        }
        for d in 0..nd {
            let before = g.cover.total.dart(d);
            let after = g.cover.total.dart(da[d]);
            if after.origin != va[before.origin] || after.terminus != va[before.terminus] {
                issues.push(format!("element {} breaks incidence at dart {}", e, d));
                break;
            }
            if da[before.pair] != after.pair {
                issues.push(format!("element {} breaks dart pairing at dart {}", e, d));
                break;
            }
        }
        for v in 0..nv {
            if g.cover.vertex_map[va[v]] != g.cover.vertex_map[v] {
                issues.push(format!(
                    "element {} is not fiber-preserving at vertex {}",
                    e, v
                ));
                break;
            }
        }
        if e != g.deck.table.identity {
            if (0..nv).any(|v| va[v] == v) {
                issues.push(format!("element {} fixes a vertex (action not free)", e));
            }
        } else if (0..nv).any(|v| va[v] != v) {
            issues.push("identity element does not act trivially".into());
        }
    }
    // Right-action axiom: v·(ab) = (v·a)·b.
    for a in 0..order {
        for b in 0..order {
            let ab = g.deck.table.mul(a, b);
            for v in 0..nv {
                if g.deck.vertex_action[ab][v]
                    != g.deck.vertex_action[b][g.deck.vertex_action[a][v]]
                {
                    issues.push(format!("action is not a right action at ({},{})", a, b));
                    break;
                }
            }
        }
    }
    // Transitivity on each fiber (freeness already checked ⇒ |fiber| = |G| suffices
    // once orbits are verified).
    for w in 0..g.cover.base.vertex_count() {
        let fiber = g.cover.fiber(w);
        if fiber.len() != order {
            issues.push(format!(
                "fiber over {} has size {} ≠ group order {}",
                w,
                fiber.len(),
                order
            ));
            continue;
        }
        if let Some(&v0) = fiber.first() {
            let mut reached: Vec<usize> = (0..order).map(|e| g.deck.vertex_action[e][v0]).collect();
            reached.sort_unstable();
            let mut want = fiber.clone();
            want.sort_unstable();
            if reached != want {
                issues.push(format!("action is not transitive on the fiber over {}", w));
            }
        }
    }
    issues
}

/// Quotient of a graph by a group of automorphisms given at vertex and dart
/// level. Returns the quotient graph and the projection covering map.
/// Errors if some dart orbit contains its own reverse (half edge).
pub fn quotient_by_automorphisms(
    graph: &Graph,
    vertex_perms: &[Vec<usize>],
    dart_perms: &[Vec<usize>],
) -> Result<(Graph, CoveringMap), CoverError> {
    let nv = graph.vertex_count();
    let nd = graph.dart_count();
    // Vertex orbits.
    let mut vorbit = vec![usize::MAX; nv];
    let mut vreps: Vec<usize> = Vec::new();
    for v in 0..nv {
        if vorbit[v] != usize::MAX {
            continue;
        }
        let id = vreps.len();
        let mut stack = vec![v];
        vorbit[v] = id;
        while let Some(x) = stack.pop() {
            for p in vertex_perms {
                let y = p[x];
                if vorbit[y] == usize::MAX {
                    vorbit[y] = id;
                    stack.push(y);
                }
            }
        }
        vreps.push(v);
    }
    // Name each orbit by its lexicographically smallest member label.
    let mut orbit_label: Vec<String> = vec![String::new(); vreps.len()];
    for v in 0..nv {
        let l = graph.display_label(v);
        let o = vorbit[v];
        if orbit_label[o].is_empty() || l < orbit_label[o] {
            orbit_label[o] = l;
        }
    }
    // Dart orbits.
    let mut dorbit = vec![usize::MAX; nd];
    let mut dreps: Vec<usize> = Vec::new();
    for d in 0..nd {
        if dorbit[d] != usize::MAX {
            continue;
        }
        let id = dreps.len();
        let mut stack = vec![d];
        dorbit[d] = id;
        while let Some(x) = stack.pop() {
            for p in dart_perms {
                let y = p[x];
                if dorbit[y] == usize::MAX {
                    dorbit[y] = id;
                    stack.push(y);
                }
            }
        }
        dreps.push(d);
    }
    // Assemble quotient darts; the pair involution descends because the
    // action commutes with pairing, unless an orbit meets its own reverse.
    let mut qdarts = Vec::with_capacity(dreps.len());
    for (o, &rep) in dreps.iter().enumerate() {
        let rd = graph.dart(rep);
        let pair_orbit = dorbit[rd.pair];
        if pair_orbit == o {
            return Err(CoverError::DartReversal(rep));
        }
        qdarts.push(Dart {
            origin: vorbit[rd.origin],
            terminus: vorbit[rd.terminus],
            pair: pair_orbit,
        });
    }
    let quotient = Graph::from_darts(orbit_label.into_iter().map(Some).collect(), qdarts)?;
    let projection = CoveringMap {
        total: graph.clone(),
        base: quotient.clone(),
        vertex_map: vorbit,
        dart_map: dorbit,
    };
    Ok((quotient, projection))
}

impl GaloisCover {
    /// Base graph accessor.
    pub fn base(&self) -> &Graph {
        &self.cover.base
    }

    /// Total graph accessor.
    pub fn total(&self) -> &Graph {
        &self.cover.total
    }

    /// Quotient by a subgroup given as sorted deck element indices: vertices
    /// and darts become H-orbits, and the cover factors through the result.
    pub fn quotient(&self, subgroup: &[usize]) -> Result<QuotientCover, CoverError> {
        if !self.deck.is_subgroup(subgroup) {
            return Err(CoverError::NotSubgroup);
        }
        let vperms: Vec<Vec<usize>> = subgroup
            .iter()
            .map(|&e| self.deck.vertex_action[e].clone())
            .collect();
        let dperms: Vec<Vec<usize>> = subgroup
            .iter()
            .map(|&e| self.deck.dart_action[e].clone())
            .collect();
        let (graph, projection) = quotient_by_automorphisms(&self.cover.total, &vperms, &dperms)?;
        // Induced map quotient → base: image of any orbit representative.
        let nq = graph.vertex_count();
        let mut vertex_map = vec![0usize; nq];
        for v in 0..self.cover.total.vertex_count() {
            vertex_map[projection.vertex_map[v]] = self.cover.vertex_map[v];
        }
        let mut dart_map = vec![0usize; graph.dart_count()];
        for d in 0..self.cover.total.dart_count() {
            dart_map[projection.dart_map[d]] = self.cover.dart_map[d];
        }
        let to_base = CoveringMap {
            total: graph.clone(),
            base: self.cover.base.clone(),
            vertex_map,
            dart_map,
        };
        Ok(QuotientCover {
            graph,
            projection,
            to_base,
        })
    }

    /// Convenience: quotient by a permutation subgroup of the deck group.
    pub fn quotient_by_perms(&self, sub: &PermutationGroup) -> Result<QuotientCover, CoverError> {
        let indices = self.deck.subgroup_indices(sub)?;
        self.quotient(&indices)
    }

    /// Quotient by a normal subgroup, returning a Galois cover of the same
    /// base with deck group `G/N` and the induced action.
    pub fn quotient_galois(&self, normal: &[usize]) -> Result<GaloisCover, CoverError> {
        if !self.deck.is_subgroup(normal) {
            return Err(CoverError::NotSubgroup);
        }
        if !self.deck.is_normal_subgroup(normal) {
            return Err(CoverError::NotNormal);
        }
        let q = self.quotient(normal)?;
        let table = &self.deck.table;
        let order = table.order();
        // Cosets of N, keyed by sorted member list; representative = smallest
        // label, cosets sorted by representative label for reproducibility.
        let mut coset_of = vec![usize::MAX; order];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = cosets.len();
            let members: Vec<usize> = normal.iter().map(|&h| table.mul(g, h)).collect();
            for &m in &members {
                coset_of[m] = id;
            }
            cosets.push(members);
        }
        let rep_of = |members: &Vec<usize>| -> usize {
            *members
                .iter()
                .min_by(|&&a, &&b| table.labels[a].cmp(&table.labels[b]))
                .expect("nonempty coset")
        };
        let mut order_idx: Vec<usize> = (0..cosets.len()).collect();
        order_idx.sort_by(|&a, &b| {
            table.labels[rep_of(&cosets[a])].cmp(&table.labels[rep_of(&cosets[b])])
        });
        let mut rank = vec![0usize; cosets.len()];
        for (new, &old) in order_idx.iter().enumerate() {
            rank[old] = new;
        }
        let reps: Vec<usize> = order_idx.iter().map(|&i| rep_of(&cosets[i])).collect();
        let qn = reps.len();
        let mut mul = vec![vec![0usize; qn]; qn];
        for a in 0..qn {
            for b in 0..qn {
                mul[a][b] = rank[coset_of[table.mul(reps[a], reps[b])]];
            }
        }
        let qtable = GroupTable {
            labels: reps.iter().map(|&r| table.labels[r].clone()).collect(),
            mul,
            identity: rank[coset_of[table.identity]],
        };
        // Induced action of each coset on orbits, via its representative.
        let nqv = q.graph.vertex_count();
        let nqd = q.graph.dart_count();
        let mut vertex_action = Vec::with_capacity(qn);
        let mut dart_action = Vec::with_capacity(qn);
        for &r in &reps {
            let mut va = vec![usize::MAX; nqv];
            for v in 0..self.cover.total.vertex_count() {
                va[q.projection.vertex_map[v]] =
                    q.projection.vertex_map[self.deck.vertex_action[r][v]];
            }
            let mut da = vec![usize::MAX; nqd];
            for d in 0..self.cover.total.dart_count() {
                da[q.projection.dart_map[d]] = q.projection.dart_map[self.deck.dart_action[r][d]];
            }
            vertex_action.push(va);
            dart_action.push(da);
        }
        let perms = match (&self.deck.perms, normal.len()) {
            // Quotient by the trivial subgroup keeps the realization.
            (Some(p), 1) => Some(p.clone()),
            _ => None,
        };
        Ok(GaloisCover {
            cover: q.to_base,
            deck: DeckGroup {
                table: qtable,
                perms,
                vertex_action,
                dart_action,
            },
        })
    }

    /// Deletes base edges and their full fiber preimages. Galois structure is
    /// preserved; returns warnings (e.g. disconnected base) rather than failing.
    pub fn delete_edges_cover(
        &self,
        base_edges: &[(usize, usize)],
    ) -> Result<(GaloisCover, Vec<String>), CoverError> {
        let mut base_doomed: Vec<usize> = Vec::new();
        for &(u, v) in base_edges {
            let d = self
                .cover
                .base
                .darts_at(u)
                .iter()
                .copied()
                .find(|&d| {
                    self.cover.base.dart(d).terminus == v
                        && !base_doomed.contains(&d)
                        && !base_doomed.contains(&self.cover.base.dart(d).pair)
                })
                .ok_or(CoverError::NoSuchBaseEdge(u, v))?;
            base_doomed.push(d);
        }
        let mut base_dead = vec![false; self.cover.base.dart_count()];
        for &d in &base_doomed {
            base_dead[d] = true;
            base_dead[self.cover.base.dart(d).pair] = true;
        }
        let new_base = self.cover.base.delete_dart_pairs(&base_doomed)?;
        let mut base_remap = vec![usize::MAX; self.cover.base.dart_count()];
        let mut next = 0;
        for (d, dead) in base_dead.iter().enumerate() {
            if !dead {
                base_remap[d] = next;
                next += 1;
            }
        }
        let total_doomed: Vec<usize> = (0..self.cover.total.dart_count())
            .filter(|&d| base_dead[self.cover.dart_map[d]] && d < self.cover.total.dart(d).pair)
            .collect();
        let total_dead: Vec<bool> = (0..self.cover.total.dart_count())
            .map(|d| base_dead[self.cover.dart_map[d]])
            .collect();
        let new_total = self.cover.total.delete_dart_pairs(&total_doomed)?;
        let mut total_remap = vec![usize::MAX; self.cover.total.dart_count()];
        let mut next = 0;
        for (d, dead) in total_dead.iter().enumerate() {
            if !dead {
                total_remap[d] = next;
                next += 1;
            }
        }
        let dart_map: Vec<usize> = (0..self.cover.total.dart_count())
            .filter(|&d| !total_dead[d])
            .map(|d| base_remap[self.cover.dart_map[d]])
            .collect();
        let cover = CoveringMap {
            total: new_total,
            base: new_base,
            vertex_map: self.cover.vertex_map.clone(),
            dart_map,
        };
        let dart_action: Vec<Vec<usize>> = self
            .deck
            .dart_action
            .iter()
            .map(|da| {
                (0..da.len())
                    .filter(|&d| !total_dead[d])
                    .map(|d| total_remap[da[d]])
                    .collect()
            })
            .collect();
        let deck = DeckGroup {
            table: self.deck.table.clone(),
            perms: self.deck.perms.clone(),
            vertex_action: self.deck.vertex_action.clone(),
            dart_action,
        };
        let mut warnings = Vec::new();
        if !cover.base.is_connected() {
            warnings.push("base graph is disconnected after edge deletion".into());
        }
        Ok((GaloisCover { cover, deck }, warnings))
    }

    /// The Frobenius automorphism of the lift of `base_cycle` starting at
    /// `start`: the unique deck element carrying the lift's start to its end.
    pub fn frobenius(&self, base_cycle: &[usize], start: usize) -> Result<usize, CoverError> {
        if start >= self.cover.total.vertex_count() {
            return Err(CoverError::StartNotInFiber(start));
        }
        if let Some(&first) = base_cycle.first() {
            let base_start = self.cover.base.dart(first).origin;
            if self.cover.vertex_map[start] != base_start {
                return Err(CoverError::StartNotInFiber(start));
            }
            let last = *base_cycle.last().expect("nonempty");
            if self.cover.base.dart(last).terminus != base_start {
                return Err(CoverError::BadWalk);
            }
            for w in base_cycle.windows(2) {
                if self.cover.base.dart(w[0]).terminus != self.cover.base.dart(w[1]).origin {
                    return Err(CoverError::BadWalk);
                }
            }
        }
        let visited = self.cover.lift_walk(base_cycle, start)?;
        let end = *visited.last().expect("nonempty");
        let mut found = None;
        for e in 0..self.deck.order() {
            if self.deck.vertex_action[e][start] == end {
                if found.is_some() {
                    return Err(CoverError::NoDeckElement);
                }
                found = Some(e);
            }
        }
        found.ok_or(CoverError::NoDeckElement)
    }
}

// Serialized covers keep explicit dart lists (unlike the edge-multiset graph
// schema): vertex_map, dart_map and the action tables are index-based, so the
// dart order must survive the round trip exactly.
#[derive(Serialize, Deserialize)]
struct DartGraphJson {
    labels: Vec<Option<String>>,
    darts: Vec<(usize, usize, usize)>,
}

impl DartGraphJson {
    fn of(g: &Graph) -> Self {
        DartGraphJson {
            labels: (0..g.vertex_count())
                .map(|v| g.label(v).map(str::to_string))
                .collect(),
            darts: g
                .darts()
                .iter()
                .map(|d| (d.origin, d.terminus, d.pair))
                .collect(),
        }
    }

    fn build(self) -> Result<Graph, GraphError> {
        let darts = self
            .darts
            .into_iter()
            .map(|(origin, terminus, pair)| Dart {
                origin,
                terminus,
                pair,
            })
            .collect();
        Graph::from_darts(self.labels, darts)
    }
}

#[derive(Serialize, Deserialize)]
struct CoverJson {
    total: DartGraphJson,
    base: DartGraphJson,
    vertex_map: Vec<usize>,
    dart_map: Vec<usize>,
    group_labels: Vec<String>,
    group_mul: Vec<Vec<usize>>,
    group_identity: usize,
    /// One-line permutation strings when the deck group has a realization.
    group_perms: Option<Vec<String>>,
    vertex_action: Vec<Vec<usize>>,
    dart_action: Vec<Vec<usize>>,
}

impl GaloisCover {
    pub fn to_json(&self) -> String {
        let body = CoverJson {
            total: DartGraphJson::of(&self.cover.total),
            base: DartGraphJson::of(&self.cover.base),
            vertex_map: self.cover.vertex_map.clone(),
            dart_map: self.cover.dart_map.clone(),
            group_labels: self.deck.table.labels.clone(),
            group_mul: self.deck.table.mul.clone(),
            group_identity: self.deck.table.identity,
            group_perms: self
                .deck
                .perms
                .as_ref()
                .map(|ps| ps.iter().map(|p| p.one_line()).collect()),
            vertex_action: self.deck.vertex_action.clone(),
            dart_action: self.deck.dart_action.clone(),
        };
        serde_json::to_string_pretty(&body).expect("serializable")
    }

    /// Deserializes and fully re-validates the cover and action.
    pub fn from_json(text: &str) -> Result<GaloisCover, CoverError> {
        let body: CoverJson = serde_json::from_str(text)?;
        let total = body.total.build()?;
        let base = body.base.build()?;
        let perms = body
            .group_perms
            .map(|ps| {
                ps.iter()
                    .map(|s| Permutation::parse(s, s.chars().count()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        let cover = GaloisCover {
            cover: CoveringMap {
                total,
                base,
                vertex_map: body.vertex_map,
                dart_map: body.dart_map,
            },
            deck: DeckGroup {
                table: GroupTable {
                    labels: body.group_labels,
                    mul: body.group_mul,
                    identity: body.group_identity,
                },
                perms,
                vertex_action: body.vertex_action,
                dart_action: body.dart_action,
            },
        };
        let issues = validate_galois(&cover);
        if !issues.is_empty() {
            return Err(CoverError::InvalidSerialized(issues.join("; ")));
        }
        Ok(cover)
    }
}
