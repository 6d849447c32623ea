//! Ihara zeta reciprocals, prime-cycle enumeration, and Artin L-functions for
//! 𝔖₃-covers.
//!
//! The zeta function itself is rational, so everything is stored and checked
//! through its reciprocal polynomial `Z = 1/ζ`, keeping the arithmetic exact:
//! `Z(u) = (1−u²)^{r−1} · det(I − uA + u²Q)` with `r−1 = ½Tr(Q−I) = |E|−|V|`.
//! The determinant is computed by integer evaluation–interpolation in `u`,
//! mirroring the characteristic-polynomial route.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cover::GaloisCover;
use crate::graph::Graph;
use crate::perm::{GroupTable, Permutation};
use crate::spectra::{bareiss_det, interpolate_integer_poly, IntPolynomial};

#[derive(Debug, Error)]
pub enum ZetaError {
    #[error("graph has a vertex of degree < 2")]
    MinDegree,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not regular")]
    NotRegular,
    #[error("polynomial does not match the graph (degree {0:?}, {1} vertices)")]
    CharpolyMismatch(Option<usize>, usize),
    #[error("requested length {0} exceeds guard {1}")]
    GuardExceeded(usize, usize),
    #[error("deck group is not isomorphic to 𝔖₃ (order-6 nonabelian)")]
    NotS3,
    #[error("inexact polynomial division while forming {0}")]
    InexactDivision(&'static str),
    #[error("series inversion needs constant term 1, found {0}")]
    BadConstantTerm(BigInt),
    #[error(transparent)]
    Cover(#[from] crate::cover::CoverError),
}

/// The reciprocal `1/ζ_Γ(u)` as an exact integer polynomial, together with
/// `r − 1 = ½Tr(Q−I)`, the exponent of the `(1−u²)` prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaReciprocal {
    pub poly: IntPolynomial,
    pub r_minus_1: i64,
}

fn check_zeta_preconditions(g: &Graph) -> Result<(), ZetaError> {
    if (0..g.vertex_count()).any(|v| g.degree(v) < 2) {
        return Err(ZetaError::MinDegree);
    }
    if !g.is_connected() {
        return Err(ZetaError::Disconnected);
    }
    Ok(())
}

/// `det(I − tA + t²Q)` at one integer `t`.
fn bass_value_at(g: &Graph, t: i64) -> BigInt {
    let a = g.adjacency_matrix();
    let n = g.vertex_count();
    let tt = BigInt::from(t);
    let t2 = &tt * &tt;
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = BigInt::from(-a[i][j]) * &tt;
                    if i == j {
                        e += BigInt::one() + &t2 * BigInt::from(g.degree(i) as i64 - 1);
                    }
                    e
                })
                .collect()
        })
        .collect();
    bareiss_det(m)
}

/// The Bass-determinant route: `(1−u²)^{r−1} · det(I − uA + u²Q)`, exact.
/// Requires a connected graph with minimum degree ≥ 2.
pub fn ihara_zeta_reciprocal(g: &Graph) -> Result<ZetaReciprocal, ZetaError> {
    check_zeta_preconditions(g)?;
    let n = g.vertex_count();
    let det_degree = 2 * n;
    let half = det_degree as i64 / 2;
    let xs: Vec<i64> = (0..=det_degree as i64).map(|j| j - half).collect();
    let ys: Vec<BigInt> = xs.iter().map(|&t| bass_value_at(g, t)).collect();
    let det = interpolate_integer_poly(&xs, &ys).expect("Bass determinant is integral");
    let r_minus_1 = g.edge_count() as i64 - n as i64;
    let prefactor = IntPolynomial::from_i64_coeffs(&[1, 0, -1]).pow(r_minus_1 as usize);
    Ok(ZetaReciprocal {
        poly: prefactor.mul(&det),
        r_minus_1,
    })
}

/// The spectral route for a k-regular graph:
/// `(1−u²)^{|E|−|V|} · Π_λ ((k−1)u² + 1 − λu)`, computed from the
/// characteristic polynomial without extracting roots, via
/// `u^{|V|} P(((k−1)u²+1)/u) = Σ_j a_j ((k−1)u²+1)^j u^{|V|−j}`.
pub fn zeta_from_charpoly(g: &Graph, p: &IntPolynomial) -> Result<ZetaReciprocal, ZetaError> {
    check_zeta_preconditions(g)?;
    let k = g.is_regular().ok_or(ZetaError::NotRegular)?;
    let n = g.vertex_count();
    if p.degree() != Some(n) || !p.is_monic() {
        return Err(ZetaError::CharpolyMismatch(p.degree(), n));
    }
    let q_shift = IntPolynomial::from_i64_coeffs(&[1, 0, k as i64 - 1]); // (k−1)u² + 1
    let u = IntPolynomial::x();
    let mut acc = IntPolynomial::zero();
    let mut shift_pow = IntPolynomial::one();
    let mut u_pows: Vec<IntPolynomial> = Vec::with_capacity(n + 1);
    let mut up = IntPolynomial::one();
    for _ in 0..=n {
        u_pows.push(up.clone());
        up = up.mul(&u);
    }
    for j in 0..=n {
        let term = IntPolynomial::from_coeffs(vec![p.coeff(j)])
            .mul(&shift_pow)
            .mul(&u_pows[n - j]);
        acc = acc.add(&term);
        shift_pow = shift_pow.mul(&q_shift);
    }
    let r_minus_1 = g.edge_count() as i64 - n as i64;
    let prefactor = IntPolynomial::from_i64_coeffs(&[1, 0, -1]).pow(r_minus_1 as usize);
    Ok(ZetaReciprocal {
        poly: prefactor.mul(&acc),
        r_minus_1,
    })
}

/// A prime cycle: a non-backtracking, tailless, primitive closed dart walk,
/// stored as the lexicographically least rotation of its dart sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCycle {
    darts: Vec<usize>,
}

impl PrimeCycle {
    pub fn darts(&self) -> &[usize] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Origin vertex of the first dart.
    pub fn base_vertex(&self, g: &Graph) -> usize {
        g.dart(self.darts[0]).origin
    }
}

pub const PRIME_LEN_GUARD: usize = 16;

/// All primes `[C]` with `ν(C) ≤ max_len`, one canonical representative per
/// rotation class, sorted by length then lexicographic dart sequence.
pub fn enumerate_primes(g: &Graph, max_len: usize) -> Result<Vec<PrimeCycle>, ZetaError> {
    if max_len > PRIME_LEN_GUARD {
        return Err(ZetaError::GuardExceeded(max_len, PRIME_LEN_GUARD));
    }
    let mut out = Vec::new();
    let mut walk: Vec<usize> = Vec::new();
    for start in 0..g.dart_count() {
        walk.push(start);
        extend_prime_search(g, start, max_len, &mut walk, &mut out);
        walk.pop();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.darts.cmp(&b.darts)));
    Ok(out)
}

fn extend_prime_search(
    g: &Graph,
    start: usize,
    max_len: usize,
    walk: &mut Vec<usize>,
    out: &mut Vec<PrimeCycle>,
) {
    let last = *walk.last().expect("nonempty walk");
    let home = g.dart(start).origin;
    // Close the walk if we are back home and the wrap step does not backtrack.
    if g.dart(last).terminus == home
        && g.dart(last).pair != start
        && is_primitive(walk)
        && is_min_rotation(walk)
    {
        out.push(PrimeCycle {
            darts: walk.clone(),
        });
    }
    if walk.len() == max_len {
        return;
    }
    let at = g.dart(last).terminus;
    for &next in g.darts_at(at) {
        // Only darts ≥ start keep each rotation class enumerated exactly once.
        if next < start || next == g.dart(last).pair {
            continue;
        }
        walk.push(next);
        extend_prime_search(g, start, max_len, walk, out);
        walk.pop();
    }
}

fn is_primitive(walk: &[usize]) -> bool {
    let l = walk.len();
    for d in 1..l {
        if l % d == 0 && (0..l).all(|i| walk[i] == walk[(i + d) % l]) {
            return false;
        }
    }
    true
}

fn is_min_rotation(walk: &[usize]) -> bool {
    let l = walk.len();
    let first = walk[0];
    for s in 1..l {
        if walk[s] != first {
            continue;
        }
        for i in 0..l {
            match walk[(s + i) % l].cmp(&walk[i]) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    true
}

/// Truncated power series with integer coefficients, index = degree in `u`.
pub type Series = Vec<BigInt>;

/// Series of `1/p` up to `u^order`; requires `p(0) = 1`.
pub fn series_inverse(p: &IntPolynomial, order: usize) -> Result<Series, ZetaError> {
    let c0 = p.coeff(0);
    if !c0.is_one() {
        return Err(ZetaError::BadConstantTerm(c0));
    }
    let mut inv: Series = vec![BigInt::zero(); order + 1];
    inv[0] = BigInt::one();
    for k in 1..=order {
        let mut acc = BigInt::zero();
        for j in 1..=k {
            let pj = p.coeff(j);
            if !pj.is_zero() {
                acc += pj * &inv[k - j];
            }
        }
        inv[k] = -acc;
    }
    Ok(inv)
}

pub fn series_mul(a: &Series, b: &Series, order: usize) -> Series {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

pub fn poly_series(p: &IntPolynomial, order: usize) -> Series {
    (0..=order).map(|k| p.coeff(k)).collect()
}

/// Series of `ζ = 1/Z` up to `u^order`.
pub fn zeta_series(z: &ZetaReciprocal, order: usize) -> Result<Series, ZetaError> {
    series_inverse(&z.poly, order)
}

pub const CYCLE_SERIES_GUARD: usize = 32;

/// `N_1..N_m`, the coefficients of `u·d/du log ζ(u) = −u·Z′(u)/Z(u)`:
/// `N_k` counts closed non-backtracking tailless dart walks of length `k`.
pub fn cycle_count_series(z: &ZetaReciprocal, m: usize) -> Result<Vec<BigInt>, ZetaError> {
    if m > CYCLE_SERIES_GUARD {
        return Err(ZetaError::GuardExceeded(m, CYCLE_SERIES_GUARD));
    }
    let inv = series_inverse(&z.poly, m)?;
    // −u·Z′(u): coefficient at u^k is −k·z_k.
    let mut num: Series = vec![BigInt::zero(); m + 1];
    for (k, slot) in num.iter_mut().enumerate().skip(1) {
        *slot = -(z.poly.coeff(k) * BigInt::from(k));
    }
    let s = series_mul(&num, &inv, m);
    Ok(s[1..=m].to_vec())
}

/// Truncated Euler product `Π_[C] (1 − u^{ν(C)})⁻¹` over enumerated primes.
pub fn euler_product_series(g: &Graph, order: usize) -> Result<Series, ZetaError> {
    let primes = enumerate_primes(g, order)?;
    let mut acc: Series = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::one();
    for p in &primes {
        let mut factor = vec![BigInt::zero(); p.len() + 1];
        factor[0] = BigInt::one();
        factor[p.len()] = -BigInt::one();
        let inv = series_inverse(&IntPolynomial::from_coeffs(factor), order)?;
        acc = series_mul(&acc, &inv, order);
    }
    Ok(acc)
}

/// An exact integer-matrix representation of 𝔖₃ (degree-3 permutations).
#[derive(Clone, Debug)]
pub struct S3Representation {
    pub name: &'static str,
    pub degree: usize,
    mats: HashMap<String, Vec<Vec<i64>>>,
}

impl S3Representation {
    pub fn matrix(&self, p: &Permutation) -> &Vec<Vec<i64>> {
        &self.mats[&p.one_line()]
    }

    pub fn character(&self, p: &Permutation) -> i64 {
        let m = self.matrix(p);
        (0..self.degree).map(|i| m[i][i]).sum()
    }
}

fn s3_elements() -> Vec<Permutation> {
    let mut v: Vec<Permutation> = Vec::new();
    for a in 1..=3usize {
        for b in 1..=3usize {
            for c in 1..=3usize {
                if a != b && b != c && a != c {
                    v.push(Permutation::from_images(&[a, b, c]).unwrap());
                }
            }
        }
    }
    v.sort();
    v
}

/// The three irreducible representations of 𝔖₃ with integer matrices:
/// trivial (d=1), sign (d=1), and standard (d=2, acting on
/// `{x ∈ ℤ³ : Σx = 0}` in the basis `e₁−e₂, e₂−e₃`).
pub fn s3_irreps() -> Vec<S3Representation> {
    let elements = s3_elements();
    let mut trivial = HashMap::new();
    let mut sgn = HashMap::new();
    let mut std_rep = HashMap::new();
    // Coordinates of e_a − e_b in the basis (e₁−e₂, e₂−e₃).
    let diff = |a: usize, b: usize| -> (i64, i64) {
        match (a, b) {
            (1, 2) => (1, 0),
            (2, 3) => (0, 1),
            (1, 3) => (1, 1),
            (2, 1) => (-1, 0),
            (3, 2) => (0, -1),
            (3, 1) => (-1, -1),
            _ => unreachable!("distinct points"),
        }
    };
    for p in &elements {
        let key = p.one_line();
        trivial.insert(key.clone(), vec![vec![1]]);
        sgn.insert(key.clone(), vec![vec![p.sign() as i64]]);
        // Columns: images of b₁ = e₁−e₂ and b₂ = e₂−e₃.
        let c1 = diff(p.apply(1), p.apply(2));
        let c2 = diff(p.apply(2), p.apply(3));
        std_rep.insert(key, vec![vec![c1.0, c2.0], vec![c1.1, c2.1]]);
    }
    vec![
        S3Representation {
            name: "trivial",
            degree: 1,
            mats: trivial,
        },
        S3Representation {
            name: "sgn",
            degree: 1,
            mats: sgn,
        },
        S3Representation {
            name: "std",
            degree: 2,
            mats: std_rep,
        },
    ]
}

/// Identification of an abstract order-6 nonabelian table with 𝔖₃:
/// the smallest order-2 element goes to (1,2), the smallest order-3 element
/// to (1,2,3), and the assignment is verified to be an isomorphism.
pub struct S3Identification {
    pub to_canonical: Vec<Permutation>,
}

pub fn identify_s3(table: &GroupTable) -> Result<S3Identification, ZetaError> {
    if table.order() != 6 || table.is_abelian() {
        return Err(ZetaError::NotS3);
    }
    let a = (0..6)
        .find(|&e| table.element_order(e) == 2)
        .ok_or(ZetaError::NotS3)?;
    let b = (0..6)
        .find(|&e| table.element_order(e) == 3)
        .ok_or(ZetaError::NotS3)?;
    let pa = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
    let pb = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
    let id3 = Permutation::identity(3);
    let mut to_canonical: Vec<Option<Permutation>> = vec![None; 6];
    // Elements of 𝔖₃ as words e, b, b², a, ab, ab².
    let words: Vec<(usize, Permutation)> = vec![
        (table.identity, id3),
        (b, pb.clone()),
        (table.mul(b, b), pb.compose(&pb).unwrap()),
        (a, pa.clone()),
        (table.mul(a, b), pa.compose(&pb).unwrap()),
        (
            table.mul(a, table.mul(b, b)),
            pa.compose(&pb.compose(&pb).unwrap()).unwrap(),
        ),
    ];
    for (idx, perm) in words {
        if to_canonical[idx].is_some() {
            return Err(ZetaError::NotS3);
        }
        to_canonical[idx] = Some(perm);
    }
    let to_canonical: Vec<Permutation> = to_canonical.into_iter().map(|p| p.unwrap()).collect();
    // Verify the assignment is multiplicative on all 36 pairs.
    for x in 0..6 {
        for y in 0..6 {
            let lhs = &to_canonical[table.mul(x, y)];
            let rhs = to_canonical[x].compose(&to_canonical[y]).unwrap();
            if *lhs != rhs {
                return Err(ZetaError::NotS3);
            }
        }
    }
    Ok(S3Identification { to_canonical })
}

/// `det(I − M u^ν)` for a d×d integer matrix, d ≤ 2.
fn det_i_minus_mu(m: &[Vec<i64>], nu: usize) -> IntPolynomial {
    match m.len() {
        1 => {
            let mut c = vec![BigInt::zero(); nu + 1];
            c[0] = BigInt::one();
            c[nu] -= BigInt::from(m[0][0]);
            IntPolynomial::from_coeffs(c)
        }
        2 => {
            let tr = m[0][0] + m[1][1];
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            let mut c = vec![BigInt::zero(); 2 * nu + 1];
            c[0] = BigInt::one();
            c[nu] -= BigInt::from(tr);
            c[2 * nu] += BigInt::from(det);
            IntPolynomial::from_coeffs(c)
        }
        d => panic!("unsupported representation degree {}", d),
    }
}

pub const L_SERIES_GUARD: usize = 10;

/// Truncated Euler product `Π_[C] det(I − ρ(Frob(C̃)) u^{ν(C)})⁻¹` over the
/// primes of the base, with `ρ` given as one integer matrix per deck element.
pub fn l_series(
    cover: &GaloisCover,
    rep_mats: &[Vec<Vec<i64>>],
    max_len: usize,
) -> Result<Series, ZetaError> {
    if max_len > L_SERIES_GUARD {
        return Err(ZetaError::GuardExceeded(max_len, L_SERIES_GUARD));
    }
    let primes = enumerate_primes(&cover.cover.base, max_len)?;
    let mut acc: Series = vec![BigInt::zero(); max_len + 1];
    acc[0] = BigInt::one();
    for prime in &primes {
        let base_vertex = prime.base_vertex(&cover.cover.base);
        let start = cover.cover.fiber(base_vertex)[0];
        let frob = cover.frobenius(prime.darts(), start)?;
        let det = det_i_minus_mu(&rep_mats[frob], prime.len());
        let inv = series_inverse(&det, max_len)?;
        acc = series_mul(&acc, &inv, max_len);
    }
    Ok(acc)
}

/// Artin L-series for an 𝔖₃-cover: the deck table is identified with 𝔖₃ and
/// `rho` evaluated through that identification.
pub fn artin_l_series(
    cover: &GaloisCover,
    rho: &S3Representation,
    max_len: usize,
) -> Result<Series, ZetaError> {
    let ident = identify_s3(&cover.deck.table)?;
    let mats: Vec<Vec<Vec<i64>>> = ident
        .to_canonical
        .iter()
        .map(|p| rho.matrix(p).clone())
        .collect();
    l_series(cover, &mats, max_len)
}

/// The reciprocal L-polynomials of the sign and standard representations for
/// one 𝔖₃-cover family, by exact division:
/// `Lsgn⁻¹ = Z_Q/Z_X`, `Lstd⁻¹ = (Z_Y·Z_X)/(Z_T·Z_Q)`; both divisions must be
/// exact, and the factorization `Z_Y = Z_X·Lsgn⁻¹·(Lstd⁻¹)²` is rechecked.
pub fn l_functions_s3(
    zy: &ZetaReciprocal,
    zx: &ZetaReciprocal,
    zq: &ZetaReciprocal,
    zt: &ZetaReciprocal,
) -> Result<(IntPolynomial, IntPolynomial), ZetaError> {
    let lsgn_inv = zq
        .poly
        .exact_div(&zx.poly)
        .ok_or(ZetaError::InexactDivision("L(sgn)⁻¹ = Z_Q/Z_X"))?;
    let lstd_inv = zy
        .poly
        .mul(&zx.poly)
        .exact_div(&zt.poly.mul(&zq.poly))
        .ok_or(ZetaError::InexactDivision("L(std)⁻¹ = Z_Y·Z_X/(Z_T·Z_Q)"))?;
    let recheck = zx.poly.mul(&lsgn_inv).mul(&lstd_inv).mul(&lstd_inv);
    if recheck != zy.poly {
        return Err(ZetaError::InexactDivision("Z_Y = Z_X·Lsgn⁻¹·(Lstd⁻¹)²"));
    }
    Ok((lsgn_inv, lstd_inv))
}

/// Certificate for the zeta identity `Z_Y·Z_X² = Z_Q·Z_T²` (reciprocal form of
/// `ζ_Y ζ_X² = ζ_Q ζ_T²`).
#[derive(Clone, Debug)]
pub struct ZetaIdentityCheck {
    pub holds: bool,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    /// First differing coefficient (degree, lhs value, rhs value) when false.
    pub first_difference: Option<(usize, BigInt, BigInt)>,
}

pub fn verify_zeta_identity(
    zy: &ZetaReciprocal,
    zx: &ZetaReciprocal,
    zq: &ZetaReciprocal,
    zt: &ZetaReciprocal,
) -> ZetaIdentityCheck {
    let lhs = zy.poly.mul(&zx.poly).mul(&zx.poly);
    let rhs = zq.poly.mul(&zt.poly).mul(&zt.poly);
    let holds = lhs == rhs;
    let first_difference = if holds {
        None
    } else {
        let top = lhs.degree().unwrap_or(0).max(rhs.degree().unwrap_or(0));
        (0..=top)
            .find(|&k| lhs.coeff(k) != rhs.coeff(k))
            .map(|k| (k, lhs.coeff(k), rhs.coeff(k)))
    };
    ZetaIdentityCheck {
        holds,
        lhs,
        rhs,
        first_difference,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::star_cover;
    use crate::perm::PermutationGroup;
    use crate::spectra::charpoly;

    fn k4_zeta_expected() -> IntPolynomial {
        // (1−u²)²(1−u)(1−2u)(1+u+2u²)³, expanded exactly.
        let a = IntPolynomial::from_i64_coeffs(&[1, 0, -1]).pow(2);
        let b = IntPolynomial::from_i64_coeffs(&[1, -1]);
        let c = IntPolynomial::from_i64_coeffs(&[1, -2]);
        let d = IntPolynomial::from_i64_coeffs(&[1, 1, 2]).pow(3);
        a.mul(&b).mul(&c).mul(&d)
    }

    #[test]
    fn bass_route_k4() {
        let z = ihara_zeta_reciprocal(&Graph::complete(4)).unwrap();
        assert_eq!(z.r_minus_1, 2);
        assert_eq!(z.poly, k4_zeta_expected());
        assert_eq!(z.poly.coeff(0), BigInt::one());
        assert_eq!(z.poly.degree(), Some(12));
    }

    #[test]
    fn bass_route_triangle() {
        // C₃: the two oriented triangles are the only primes, ζ⁻¹ = (1−u³)².
        let z = ihara_zeta_reciprocal(&Graph::cycle(3)).unwrap();
        assert_eq!(z.r_minus_1, 0);
        let expected = IntPolynomial::from_i64_coeffs(&[1, 0, 0, -1]).pow(2);
        assert_eq!(z.poly, expected);
    }

    #[test]
    fn zeta_preconditions() {
        let path = Graph::from_edges(2, None, &[(0, 1, 1)]).unwrap();
        assert!(matches!(
            ihara_zeta_reciprocal(&path),
            Err(ZetaError::MinDegree)
        ));
        let two_triangles = Graph::from_edges(
            6,
            None,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 0, 1),
                (3, 4, 1),
                (4, 5, 1),
                (5, 3, 1),
            ],
        )
        .unwrap();
        assert!(matches!(
            ihara_zeta_reciprocal(&two_triangles),
            Err(ZetaError::Disconnected)
        ));
    }

    #[test]
    fn charpoly_route_matches_bass() {
        for g in [
            Graph::complete(4),
            Graph::cycle(3),
            crate::cover::tests::cube_graph(),
        ] {
            let p = charpoly(&g);
            let a = ihara_zeta_reciprocal(&g).unwrap();
            let b = zeta_from_charpoly(&g, &p).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn charpoly_route_x3() {
        let c = star_cover(3).unwrap();
        let p = charpoly(c.total());
        let bass = ihara_zeta_reciprocal(c.total()).unwrap();
        let spec = zeta_from_charpoly(c.total(), &p).unwrap();
        assert_eq!(bass, spec);
        assert_eq!(bass.poly.degree(), Some(72));
    }

    #[test]
    fn charpoly_route_rejects_irregular() {
        let g = Graph::complete(4).delete_undirected_edge(0, 1).unwrap();
        let p = charpoly(&g);
        assert!(matches!(
            zeta_from_charpoly(&g, &p),
            Err(ZetaError::NotRegular)
        ));
    }

    #[test]
    fn primes_of_k4_length_3() {
        let primes = enumerate_primes(&Graph::complete(4), 3).unwrap();
        assert_eq!(primes.len(), 8); // 4 triangles × 2 orientations
        assert!(primes.iter().all(|p| p.len() == 3));
    }

    #[test]
    fn primes_of_triangle() {
        let primes = enumerate_primes(&Graph::cycle(3), 6).unwrap();
        assert_eq!(primes.len(), 2); // both orientations; powers excluded
    }

    #[test]
    fn primes_of_tree_empty() {
        let tree = Graph::from_edges(4, None, &[(0, 1, 1), (1, 2, 1), (1, 3, 1)]).unwrap();
        assert!(enumerate_primes(&tree, 8).unwrap().is_empty());
    }

    #[test]
    fn primes_guard() {
        assert!(enumerate_primes(&Graph::cycle(3), 17).is_err());
    }

    /// Independent oracle: count closed non-backtracking tailless dart walks
    /// of length m by direct enumeration.
    fn brute_force_walk_count(g: &Graph, m: usize) -> BigInt {
        fn extend(g: &Graph, first: usize, walk: &mut Vec<usize>, m: usize, count: &mut u64) {
            let last = *walk.last().unwrap();
            if walk.len() == m {
                if g.dart(last).terminus == g.dart(first).origin && g.dart(last).pair != first {
                    *count += 1;
                }
                return;
            }
            for &next in g.darts_at(g.dart(last).terminus) {
                if next != g.dart(last).pair {
                    walk.push(next);
                    extend(g, first, walk, m, count);
                    walk.pop();
                }
            }
        }
        let mut count = 0u64;
        for first in 0..g.dart_count() {
            let mut walk = vec![first];
            extend(g, first, &mut walk, m, &mut count);
        }
        BigInt::from(count)
    }

    #[test]
    fn cycle_counts_match_brute_force() {
        for g in [
            Graph::complete(4),
            Graph::cycle(3),
            crate::cover::tests::cube_graph(),
        ] {
            let z = ihara_zeta_reciprocal(&g).unwrap();
            let ns = cycle_count_series(&z, 8).unwrap();
            for m in 1..=8 {
                assert_eq!(ns[m - 1], brute_force_walk_count(&g, m), "length {}", m);
            }
        }
    }

    #[test]
    fn cycle_counts_k4_and_triangle_values() {
        let zk4 = ihara_zeta_reciprocal(&Graph::complete(4)).unwrap();
        let ns = cycle_count_series(&zk4, 3).unwrap();
        assert_eq!(ns[0], BigInt::zero());
        assert_eq!(ns[1], BigInt::zero());
        assert_eq!(ns[2], BigInt::from(24));
        let zc3 = ihara_zeta_reciprocal(&Graph::cycle(3)).unwrap();
        let ns = cycle_count_series(&zc3, 6).unwrap();
        let expect: Vec<i64> = vec![0, 0, 6, 0, 0, 6];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(ns[k], BigInt::from(*e));
        }
    }

    #[test]
    fn euler_product_matches_zeta_series() {
        for g in [
            Graph::complete(4),
            Graph::cycle(3),
            crate::cover::tests::cube_graph(),
        ] {
            let z = ihara_zeta_reciprocal(&g).unwrap();
            let series = zeta_series(&z, 8).unwrap();
            let euler = euler_product_series(&g, 8).unwrap();
            assert_eq!(series, euler);
        }
    }

    #[test]
    fn s3_irreps_properties() {
        let irreps = s3_irreps();
        assert_eq!(irreps.len(), 3);
        let sum_sq: usize = irreps.iter().map(|r| r.degree * r.degree).sum();
        assert_eq!(sum_sq, 6);
        let elements = s3_elements();
        for rho in &irreps {
            for p in &elements {
                for q in &elements {
                    let pq = p.compose(q).unwrap();
                    let mp = rho.matrix(p);
                    let mq = rho.matrix(q);
                    let d = rho.degree;
                    let mut prod = vec![vec![0i64; d]; d];
                    for i in 0..d {
                        for j in 0..d {
                            prod[i][j] = (0..d).map(|k| mp[i][k] * mq[k][j]).sum();
                        }
                    }
                    assert_eq!(&prod, rho.matrix(&pq), "{} not multiplicative", rho.name);
                }
            }
        }
        let std_rep = &irreps[2];
        assert_eq!(std_rep.character(&Permutation::identity(3)), 2);
        assert_eq!(
            std_rep.character(&Permutation::from_cycles(3, &[vec![1, 2]]).unwrap()),
            0
        );
        assert_eq!(
            std_rep.character(&Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap()),
            -1
        );
        let trivial = &irreps[0];
        for p in &elements {
            assert_eq!(trivial.character(p), 1);
        }
    }

    #[test]
    fn induced_character_identity() {
        // χ(Ind_{C₂}^{𝔖₃} sgn_{C₂}) = χ_sgn + χ_std.
        let irreps = s3_irreps();
        let elements = s3_elements();
        let h = [
            Permutation::identity(3),
            Permutation::from_cycles(3, &[vec![1, 2]]).unwrap(),
        ];
        for g in &elements {
            let mut induced = 0i64;
            for x in &elements {
                let conj = x.inverse().compose(g).unwrap().compose(x).unwrap();
                if conj == h[0] {
                    induced += 1;
                } else if conj == h[1] {
                    induced -= 1;
                }
            }
            induced /= 2;
            let want = irreps[1].character(g) + irreps[2].character(g);
            assert_eq!(induced, want, "at {}", g);
        }
    }

    #[test]
    fn identify_s3_on_star_cover_deck() {
        let c = star_cover(3).unwrap();
        let ident = identify_s3(&c.deck.table).unwrap();
        assert_eq!(ident.to_canonical.len(), 6);
        // Orders must be preserved.
        for e in 0..6 {
            assert_eq!(c.deck.table.element_order(e), ident.to_canonical[e].order());
        }
    }

    #[test]
    fn identify_s3_rejects_abelian() {
        let c6 =
            PermutationGroup::generate(&[
                Permutation::from_cycles(6, &[vec![1, 2, 3, 4, 5, 6]]).unwrap()
            ])
            .unwrap();
        let table = crate::perm::GroupTable::from_permutation_group(&c6);
        assert!(matches!(identify_s3(&table), Err(ZetaError::NotS3)));
    }

    fn n3_family() -> (
        ZetaReciprocal,
        ZetaReciprocal,
        ZetaReciprocal,
        ZetaReciprocal,
    ) {
        let c = star_cover(3).unwrap();
        let c2 = PermutationGroup::generate(&[Permutation::parse("(1,2)", 4).unwrap()]).unwrap();
        let c3 = PermutationGroup::generate(&[Permutation::parse("(1,2,3)", 4).unwrap()]).unwrap();
        let q = c.quotient_by_perms(&c3).unwrap().graph;
        let t = c.quotient_by_perms(&c2).unwrap().graph;
        (
            ihara_zeta_reciprocal(c.total()).unwrap(),
            ihara_zeta_reciprocal(c.base()).unwrap(),
            ihara_zeta_reciprocal(&q).unwrap(),
            ihara_zeta_reciprocal(&t).unwrap(),
        )
    }

    #[test]
    fn l_functions_n3_family() {
        let (zy, zx, zq, zt) = n3_family();
        let (lsgn, lstd) = l_functions_s3(&zy, &zx, &zq, &zt).unwrap();
        assert_eq!(lsgn.degree(), Some(12));
        assert_eq!(lstd.degree(), Some(24));
        // Factorization through the irreducibles: Z_X3 = Z_K4·Lsgn⁻¹·(Lstd⁻¹)².
        assert_eq!(zx.poly.mul(&lsgn).mul(&lstd).mul(&lstd), zy.poly);
    }

    #[test]
    fn l_functions_degenerate_inputs() {
        let z = ihara_zeta_reciprocal(&Graph::complete(4)).unwrap();
        let (lsgn, lstd) = l_functions_s3(&z, &z, &z, &z).unwrap();
        assert!(lsgn.is_one());
        assert!(lstd.is_one());
    }

    #[test]
    fn zeta_identity_n3() {
        let (zy, zx, zq, zt) = n3_family();
        let check = verify_zeta_identity(&zy, &zx, &zq, &zt);
        assert!(check.holds);
        assert_eq!(check.lhs.degree(), Some(96));
    }

    #[test]
    fn zeta_identity_false_case() {
        let zk4 = ihara_zeta_reciprocal(&Graph::complete(4)).unwrap();
        let zc3 = ihara_zeta_reciprocal(&Graph::cycle(3)).unwrap();
        let check = verify_zeta_identity(&zk4, &zc3, &zk4, &zk4);
        assert!(!check.holds);
        let (k, l, r) = check.first_difference.unwrap();
        assert_ne!(l, r);
        assert!(k <= 96);
    }

    #[test]
    fn artin_trivial_is_base_zeta() {
        let c = star_cover(3).unwrap();
        let irreps = s3_irreps();
        let series = artin_l_series(&c, &irreps[0], 8).unwrap();
        let zx = ihara_zeta_reciprocal(c.base()).unwrap();
        assert_eq!(series, zeta_series(&zx, 8).unwrap());
    }

    #[test]
    fn artin_sgn_matches_quotient_ratio() {
        // L(u, sgn, Y/X) = ζ_Q/ζ_X = Z_X/Z_Q as series.
        let c = star_cover(3).unwrap();
        let irreps = s3_irreps();
        let series = artin_l_series(&c, &irreps[1], 8).unwrap();
        let (_, zx, zq, _) = n3_family();
        let expected = series_mul(
            &poly_series(&zx.poly, 8),
            &series_inverse(&zq.poly, 8).unwrap(),
            8,
        );
        assert_eq!(series, expected);
    }

    #[test]
    fn artin_std_matches_ratio() {
        // L(u, std, Y/X) = ζ_Y ζ_X/(ζ_T ζ_Q) = Z_T·Z_Q/(Z_Y·Z_X) as series.
        let c = star_cover(3).unwrap();
        let irreps = s3_irreps();
        let series = artin_l_series(&c, &irreps[2], 8).unwrap();
        let (zy, zx, zq, zt) = n3_family();
        let num = poly_series(&zt.poly.mul(&zq.poly), 8);
        let den = series_inverse(&zy.poly.mul(&zx.poly), 8).unwrap();
        let expected = series_mul(&num, &den, 8);
        assert_eq!(series, expected);
    }

    #[test]
    fn sgn_l_series_agrees_between_covers() {
        // Lift invariance: L(u, sgn, Y/X) computed over the full 𝔖₃-cover
        // equals L(u, sgn_{C₂}, Q/X) computed over the intermediate Galois
        // cover with its own Frobenii.
        let c = star_cover(3).unwrap();
        let irreps = s3_irreps();
        let via_y = artin_l_series(&c, &irreps[1], 6).unwrap();
        let c3 = PermutationGroup::generate(&[Permutation::parse("(1,2,3)", 4).unwrap()]).unwrap();
        let n = c.deck.subgroup_indices(&c3).unwrap();
        let q_cover = c.quotient_galois(&n).unwrap();
        assert_eq!(q_cover.deck.order(), 2);
        let mats: Vec<Vec<Vec<i64>>> = (0..2)
            .map(|e| {
                if e == q_cover.deck.table.identity {
                    vec![vec![1]]
                } else {
                    vec![vec![-1]]
                }
            })
            .collect();
        let via_q = l_series(&q_cover, &mats, 6).unwrap();
        assert_eq!(via_y, via_q);
    }

    #[test]
    fn series_inverse_requires_unit() {
        let p = IntPolynomial::from_i64_coeffs(&[2, 1]);
        assert!(matches!(
            series_inverse(&p, 4),
            Err(ZetaError::BadConstantTerm(_))
        ));
    }

    #[test]
    fn l_functions_reject_inconsistent_family() {
        let zk4 = ihara_zeta_reciprocal(&Graph::complete(4)).unwrap();
        let zc3 = ihara_zeta_reciprocal(&Graph::cycle(3)).unwrap();
        assert!(matches!(
            l_functions_s3(&zk4, &zc3, &zk4, &zk4),
            Err(ZetaError::InexactDivision(_))
        ));
    }

    #[test]
    fn series_guards() {
        let z = ihara_zeta_reciprocal(&Graph::cycle(3)).unwrap();
        assert!(matches!(
            cycle_count_series(&z, 33),
            Err(ZetaError::GuardExceeded(33, _))
        ));
        let c = star_cover(3).unwrap();
        let irreps = s3_irreps();
        assert!(matches!(
            artin_l_series(&c, &irreps[0], 11),
            Err(ZetaError::GuardExceeded(11, _))
        ));
    }
}
