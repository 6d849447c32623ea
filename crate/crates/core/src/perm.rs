//! Exact permutation and small-finite-group arithmetic.
//!
//! Composition convention: `compose(p, q)` is the bijection `x ↦ p(q(x))`,
//! i.e. `q` acts first. Under this convention a product written `ξσ` applies
//! `σ` first, so right-coset and right-action statements hold verbatim:
//! `(ξ·τ)(m) = ξ(τ(m))`. Getting this backwards silently breaks every
//! Frobenius computation downstream, which is why it is pinned here once.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images are not a bijection on 1..={0}")]
    NotBijection(usize),
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("empty generator list")]
    NoGenerators,
    #[error("group order {0} exceeds bound {1}")]
    BoundExceeded(usize, usize),
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
}

/// A permutation of `{1..m}` in one-line notation, stored 0-based internally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds from 1-based images, validating bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in images {
            if x == 0 || x > m || seen[x - 1] {
                return Err(PermError::NotBijection(m));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// The transposition `(a, b)` in 𝔖_degree (1-based points).
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self, PermError> {
        Self::from_cycles(degree, &[vec![a, b]])
    }

    /// Builds from disjoint cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange(p, degree));
                }
                if moved[p - 1] {
                    return Err(PermError::NotBijection(degree));
                }
                moved[p - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i] - 1;
                let to = cycle[(i + 1) % cycle.len()] - 1;
                images[from] = to as u8;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses either one-line notation ("4231") or cycle notation ("(1,4)(2,3)").
    /// One-line input fixes the degree by its length; cycle input needs `degree`.
    pub fn parse(input: &str, degree: usize) -> Result<Self, PermError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(PermError::Parse {
                input: input.to_string(),
                reason: "empty string".into(),
            });
        }
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            let mut rest = s;
            while !rest.is_empty() {
                if !rest.starts_with('(') {
                    return Err(PermError::Parse {
                        input: input.to_string(),
                        reason: format!("expected '(' at {:?}", rest),
                    });
                }
                let close = rest.find(')').ok_or_else(|| PermError::Parse {
                    input: input.to_string(),
                    reason: "unbalanced parenthesis".into(),
                })?;
                let body = &rest[1..close];
                let cycle: Result<Vec<usize>, _> = body
                    .split(',')
                    .map(|t| {
                        t.trim().parse::<usize>().map_err(|_| PermError::Parse {
                            input: input.to_string(),
                            reason: format!("bad point {:?}", t.trim()),
                        })
                    })
                    .collect();
                cycles.push(cycle?);
                rest = rest[close + 1..].trim();
            }
            Self::from_cycles(degree, &cycles)
        } else if s == "id" {
            Ok(Self::identity(degree))
        } else {
            let digits: Result<Vec<usize>, _> = s
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| PermError::Parse {
                            input: input.to_string(),
                            reason: format!("bad digit {:?}", c),
                        })
                })
                .collect();
            let digits = digits?;
            if digits.len() != degree {
                return Err(PermError::Parse {
                    input: input.to_string(),
                    reason: format!("one-line length {} but degree {}", digits.len(), degree),
                });
            }
            Self::from_images(&digits)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i)
    }

    /// `compose(p, q)(x) = p(q(x))`: `q` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self).expect("same degree");
            k += 1;
        }
        k
    }

    /// +1 for even permutations, −1 for odd.
    pub fn sign(&self) -> i8 {
        let mut seen = vec![false; self.images.len()];
        let mut sign = 1i8;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// One-line notation; digits for degree ≤ 9, comma-separated otherwise.
    pub fn one_line(&self) -> String {
        if self.degree() <= 9 {
            self.images.iter().map(|&x| char::from(b'1' + x)).collect()
        } else {
            let parts: Vec<String> = self
                .images
                .iter()
                .map(|&x| (x as usize + 1).to_string())
                .collect();
            format!("[{}]", parts.join(","))
        }
    }

    /// Nontrivial cycles, each rotated to start at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "id".into();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

/// The star transpositions `τ_i = (i, n+1)` for `i = 1..n`, each of degree `n+1`.
pub fn star_transpositions(n: usize) -> Vec<Permutation> {
    (1..=n)
        .map(|i| Permutation::transposition(n + 1, i, n + 1).expect("valid points"))
        .collect()
}

/// A finite permutation group stored as its full, lexicographically sorted
/// element list. Intended for small groups (closure enumeration, no
/// Schreier–Sims), which is all the covers here need.
#[derive(Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

pub const GROUP_BOUND: usize = 5040;

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Closure of the generators under composition; always contains the identity.
    pub fn generate(gens: &[Permutation]) -> Result<Self, PermError> {
        if gens.is_empty() {
            return Err(PermError::NoGenerators);
        }
        let degree = gens[0].degree();
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = vec![Permutation::identity(degree)];
        seen.insert(queue[0].clone());
        while let Some(p) = queue.pop() {
            for g in gens {
                let q = p.compose(g).expect("same degree");
                if seen.insert(q.clone()) {
                    queue.push(q);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermutationGroup { degree, elements })
    }

    /// The full symmetric group on `{1..m}`.
    pub fn symmetric(m: usize) -> Self {
        if m <= 1 {
            return Self::trivial(m.max(1));
        }
        let swap = Permutation::transposition(m, 1, 2).expect("valid");
        let cycle = Permutation::from_cycles(m, &[(1..=m).collect()]).expect("valid");
        Self::generate(&[swap, cycle]).expect("nonempty")
    }

    /// The stabilizer of the point `m` inside 𝔖_m, i.e. a copy of 𝔖_{m−1}
    /// acting on `{1..m−1}` by degree-m permutations.
    pub fn stabilizer_of_last(m: usize) -> Self {
        if m <= 2 {
            return Self::trivial(m);
        }
        let swap = Permutation::transposition(m, 1, 2).expect("valid");
        let cycle = Permutation::from_cycles(m, &[(1..=m - 1).collect()]).expect("valid");
        Self::generate(&[swap, cycle]).expect("nonempty")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Checks the stored element set is actually a group; returns violations.
    pub fn verify(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if !self.contains(&self.identity()) {
            issues.push("identity missing".into());
        }
        for a in &self.elements {
            if !self.contains(&a.inverse()) {
                issues.push(format!("inverse of {} missing", a));
            }
            for b in &self.elements {
                let c = a.compose(b).expect("same degree");
                if !self.contains(&c) {
                    issues.push(format!("product {}·{} = {} missing", a, b, c));
                }
            }
        }
        issues
    }

    /// All subgroups, found by closing cyclic seeds under adjoining single
    /// elements. Sorted by order, then by lexicographic element list.
    pub fn subgroups(&self) -> Result<Vec<PermutationGroup>, PermError> {
        if self.order() > GROUP_BOUND {
            return Err(PermError::BoundExceeded(self.order(), GROUP_BOUND));
        }
        let mut found: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        found.insert(vec![self.identity()]);
        let mut queue: Vec<Vec<Permutation>> = found.iter().cloned().collect();
        while let Some(current) = queue.pop() {
            for g in &self.elements {
                if current.binary_search(g).is_ok() {
                    continue;
                }
                let mut gens = current.clone();
                gens.push(g.clone());
                let bigger = Self::generate(&gens)?.elements;
                if bigger.len() <= self.order() && found.insert(bigger.clone()) {
                    queue.push(bigger);
                }
            }
        }
        let mut out: Vec<PermutationGroup> = found
            .into_iter()
            .map(|elements| PermutationGroup {
                degree: self.degree,
                elements,
            })
            .collect();
        out.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        Ok(out)
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermutationGroup(degree {}, order {})",
            self.degree,
            self.order()
        )
    }
}

/// `true` iff `gHg⁻¹ = H` for every `g` in `group`. Errors if `sub ⊄ group`.
pub fn is_normal(sub: &PermutationGroup, group: &PermutationGroup) -> Result<bool, PermError> {
    if !sub.is_subgroup_of(group) {
        return Err(PermError::NotSubgroup);
    }
    for g in group.elements() {
        let g_inv = g.inverse();
        for h in sub.elements() {
            let conj = g.compose(h).expect("deg").compose(&g_inv).expect("deg");
            if !sub.contains(&conj) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An abstract finite group given by its multiplication table.
/// `mul[a][b]` is the index of the product `a·b` (with `b` acting first,
/// matching [`Permutation::compose`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

pub const TABLE_BOUND: usize = 1024;

impl GroupTable {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.mul[a][b] == self.identity)
            .expect("group table has inverses")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul[x][a];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Cyclic subgroup generated by one element, as sorted indices.
    pub fn cyclic_subgroup(&self, a: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut x = a;
        while x != self.identity {
            out.push(x);
            x = self.mul[x][a];
        }
        out.sort_unstable();
        out
    }

    /// Checks the group axioms; associativity exhaustively for orders ≤ 24.
    pub fn verify(&self) -> Vec<String> {
        let n = self.order();
        let mut issues = Vec::new();
        for a in 0..n {
            if self.mul[a].len() != n {
                issues.push(format!("row {} has wrong length", a));
                return issues;
            }
            if self.mul[self.identity][a] != a || self.mul[a][self.identity] != a {
                issues.push(format!("identity fails at {}", a));
            }
            if !(0..n).any(|b| self.mul[a][b] == self.identity) {
                issues.push(format!("element {} has no inverse", a));
            }
            let row: BTreeSet<usize> = self.mul[a].iter().copied().collect();
            if row.len() != n {
                issues.push(format!("row {} is not a bijection", a));
            }
        }
        if n <= 24 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                            issues.push(format!("associativity fails at ({},{},{})", a, b, c));
                        }
                    }
                }
            }
        }
        issues
    }

    pub fn from_permutation_group(group: &PermutationGroup) -> Self {
        let n = group.order();
        let elements = group.elements();
        let mut mul = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let p = elements[a].compose(&elements[b]).expect("same degree");
                mul[a][b] = group.index_of(&p).expect("closed");
            }
        }
        let identity = group.index_of(&group.identity()).expect("identity present");
        GroupTable {
            labels: elements.iter().map(|p| p.one_line()).collect(),
            mul,
            identity,
        }
    }
}

/// Coset multiplication table of `group / normal`. Cosets are labeled by their
/// lexicographically smallest member and sorted by that label, so the identity
/// coset is identifiable and output is reproducible.
pub fn quotient_group(
    group: &PermutationGroup,
    normal: &PermutationGroup,
) -> Result<GroupTable, PermError> {
    if !is_normal(normal, group)? {
        return Err(PermError::NotNormal);
    }
    let q = group.order() / normal.order();
    if q > TABLE_BOUND {
        return Err(PermError::BoundExceeded(q, TABLE_BOUND));
    }
    // Right cosets g·N (= N·g by normality), keyed by sorted element list.
    let mut coset_of_element = vec![usize::MAX; group.order()];
    let mut cosets: Vec<Vec<Permutation>> = Vec::new();
    for (i, g) in group.elements().iter().enumerate() {
        if coset_of_element[i] != usize::MAX {
            continue;
        }
        let mut members: Vec<Permutation> = normal
            .elements()
            .iter()
            .map(|n| g.compose(n).expect("same degree"))
            .collect();
        members.sort();
        let id = cosets.len();
        for m in &members {
            coset_of_element[group.index_of(m).expect("closed")] = id;
        }
        cosets.push(members);
    }
    // Sort cosets by smallest representative.
    let mut order: Vec<usize> = (0..cosets.len()).collect();
    order.sort_by(|&a, &b| cosets[a][0].cmp(&cosets[b][0]));
    let rank: Vec<usize> = {
        let mut r = vec![0; cosets.len()];
        for (new, &old) in order.iter().enumerate() {
            r[old] = new;
        }
        r
    };
    let reps: Vec<&Permutation> = order.iter().map(|&i| &cosets[i][0]).collect();
    let n = reps.len();
    let mut mul = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let p = reps[a].compose(reps[b]).expect("same degree");
            mul[a][b] = rank[coset_of_element[group.index_of(&p).expect("closed")]];
        }
    }
    let identity_coset =
        rank[coset_of_element[group.index_of(&group.identity()).expect("identity")]];
    Ok(GroupTable {
        labels: reps.iter().map(|p| p.one_line()).collect(),
        mul,
        identity: identity_coset,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, s.len()).unwrap()
    }

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse(s, degree).unwrap()
    }

    #[test]
    fn compose_identity_case() {
        let id = Permutation::identity(4);
        let t = cyc(4, "(1,4)");
        assert_eq!(id.compose(&t).unwrap(), t);
        assert_eq!(t.compose(&id).unwrap(), t);
    }

    #[test]
    fn compose_hand_evaluated() {
        // (1,4)·(2,4) = (1,4,2), one-line 4132.
        let a = cyc(4, "(1,4)").compose(&cyc(4, "(2,4)")).unwrap();
        assert_eq!(a.one_line(), "4132");
        assert_eq!(a.cycle_string(), "(1,4,2)");
        // (1,4,2)·(1,4) = (1,2), one-line 2134.
        let b = a.compose(&cyc(4, "(1,4)")).unwrap();
        assert_eq!(b.one_line(), "2134");
        assert_eq!(b.cycle_string(), "(1,2)");
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(PermError::DegreeMismatch(3, 4)));
    }

    #[test]
    fn inverse_examples() {
        assert!(Permutation::identity(5).inverse().is_identity());
        let t = cyc(4, "(1,4)");
        assert_eq!(t.inverse(), t);
        let c = cyc(3, "(1,2,3)");
        assert_eq!(c.inverse(), cyc(3, "(1,3,2)"));
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
    }

    #[test]
    fn star_transposition_lists() {
        let one = star_transpositions(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0], cyc(2, "(1,2)"));
        let three = star_transpositions(3);
        assert_eq!(
            three,
            vec![cyc(4, "(1,4)"), cyc(4, "(2,4)"), cyc(4, "(3,4)")]
        );
        let four = star_transpositions(4);
        assert_eq!(four.len(), 4);
        assert_eq!(four[3], cyc(5, "(4,5)"));
    }

    #[test]
    fn generate_group_orders() {
        let c2 = PermutationGroup::generate(&[cyc(2, "(1,2)")]).unwrap();
        assert_eq!(c2.order(), 2);
        let s3 = PermutationGroup::generate(&[cyc(3, "(1,2)"), cyc(3, "(1,2,3)")]).unwrap();
        assert_eq!(s3.order(), 6);
        let s4 = PermutationGroup::generate(&star_transpositions(3)).unwrap();
        assert_eq!(s4.order(), 24);
        assert!(s4.verify().is_empty());
    }

    #[test]
    fn one_line_parse_round_trip() {
        let q = p("4231");
        assert_eq!(q, cyc(4, "(1,4)"));
        assert_eq!(q.one_line(), "4231");
    }

    #[test]
    fn subgroups_of_s3_inside_s4() {
        // G₃ = stabilizer of 4 in 𝔖₄, isomorphic to 𝔖₃.
        let g3 = PermutationGroup::stabilizer_of_last(4);
        assert_eq!(g3.order(), 6);
        let subs = g3.subgroups().unwrap();
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        for expected in ["(1,2)", "(2,3)", "(1,3)", "(1,2,3)"] {
            let gen = cyc(4, expected);
            let sub = PermutationGroup::generate(&[gen]).unwrap();
            assert!(subs.contains(&sub), "missing ⟨{}⟩", expected);
        }
        for s in &subs {
            assert!(s.verify().is_empty());
        }
    }

    #[test]
    fn subgroups_trivial_and_prime() {
        let t = PermutationGroup::trivial(3);
        assert_eq!(t.subgroups().unwrap().len(), 1);
        let c2 = PermutationGroup::generate(&[cyc(2, "(1,2)")]).unwrap();
        let subs = c2.subgroups().unwrap();
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[0].order(), 1);
        assert_eq!(subs[1].order(), 2);
    }

    #[test]
    fn subgroups_of_s4_count() {
        let s4 = PermutationGroup::symmetric(4);
        assert_eq!(s4.subgroups().unwrap().len(), 30);
    }

    #[test]
    fn normality_checks() {
        let s3 = PermutationGroup::symmetric(3);
        let c3 = PermutationGroup::generate(&[cyc(3, "(1,2,3)")]).unwrap();
        let c2 = PermutationGroup::generate(&[cyc(3, "(1,2)")]).unwrap();
        assert!(is_normal(&c3, &s3).unwrap());
        assert!(!is_normal(&c2, &s3).unwrap());
        assert!(is_normal(&s3, &s3).unwrap());
        let wrong = PermutationGroup::generate(&[cyc(3, "(1,3)")]).unwrap();
        assert!(is_normal(&wrong, &c3).is_err());
    }

    #[test]
    fn quotient_s3_by_c3() {
        let s3 = PermutationGroup::symmetric(3);
        let c3 = PermutationGroup::generate(&[cyc(3, "(1,2,3)")]).unwrap();
        let q = quotient_group(&s3, &c3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.verify().is_empty());
        assert_eq!(q.element_order(1 - q.identity), 2);
    }

    #[test]
    fn quotient_by_trivial_matches_group_table() {
        let s3 = PermutationGroup::symmetric(3);
        let t = PermutationGroup::trivial(3);
        let q = quotient_group(&s3, &t).unwrap();
        let full = GroupTable::from_permutation_group(&s3);
        assert_eq!(q, full);
    }

    #[test]
    fn quotient_s4_by_klein_is_nonabelian_order_6() {
        let s4 = PermutationGroup::symmetric(4);
        let v = PermutationGroup::generate(&[cyc(4, "(1,2)(3,4)"), cyc(4, "(1,3)(2,4)")]).unwrap();
        assert_eq!(v.order(), 4);
        assert!(is_normal(&v, &s4).unwrap());
        let q = quotient_group(&s4, &v).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert!(q.verify().is_empty());
        // The non-normal Klein four group ⟨(1,2),(3,4)⟩ must be rejected.
        let v_bad = PermutationGroup::generate(&[cyc(4, "(1,2)"), cyc(4, "(3,4)")]).unwrap();
        assert_eq!(v_bad.order(), 4);
        assert!(!is_normal(&v_bad, &s4).unwrap());
        assert_eq!(quotient_group(&s4, &v_bad), Err(PermError::NotNormal));
    }

    #[test]
    fn quotient_not_normal_rejected() {
        let s3 = PermutationGroup::symmetric(3);
        let c2 = PermutationGroup::generate(&[cyc(3, "(1,2)")]).unwrap();
        assert_eq!(quotient_group(&s3, &c2), Err(PermError::NotNormal));
    }

    #[test]
    fn right_action_convention() {
        // compose(ξ, τ_i)(4) = ξ(i) for all ξ ∈ 𝔖₄: the p_V(η) = ξ(i) step.
        let s4 = PermutationGroup::symmetric(4);
        let taus = star_transpositions(3);
        for xi in s4.elements() {
            for (i, tau) in taus.iter().enumerate() {
                let eta = xi.compose(tau).unwrap();
                assert_eq!(eta.apply(4), xi.apply(i + 1));
            }
        }
    }

    #[test]
    fn group_order_divides_factorial_and_closure() {
        let g3 = PermutationGroup::stabilizer_of_last(4);
        let fact: usize = (1..=4).product();
        assert_eq!(fact % g3.order(), 0);
        for a in g3.elements() {
            for b in g3.elements() {
                assert!(g3.contains(&a.compose(b).unwrap()));
            }
        }
    }

    #[test]
    fn sign_and_order() {
        assert_eq!(cyc(4, "(1,4)").sign(), -1);
        assert_eq!(cyc(4, "(1,2,3)").sign(), 1);
        assert_eq!(cyc(4, "(1,2,3)").order(), 3);
        assert_eq!(cyc(4, "(1,2)(3,4)").order(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(Permutation::parse("", 3).is_err());
        assert!(Permutation::parse("112", 3).is_err());
        assert!(Permutation::parse("(1,5)", 4).is_err());
        assert!(Permutation::parse("(1,2", 4).is_err());
        assert!(Permutation::parse("12x", 3).is_err());
    }
}
