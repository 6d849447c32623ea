//! Verification suites: pure compositions of library operations, each check
//! yielding a PASS/FAIL line with an exact certificate string.

use starcover::cover::{star_cover, GaloisCover};
use starcover::graph::{isomorphic, verify_isomorphism, Graph};
use starcover::honeycomb::{
    fourier_spectrum, honeycomb_quotient, label_vertices_s4, LatticeSpec, TranslationQuotient,
};
use starcover::perm::{Permutation, PermutationGroup};
use starcover::spectra::{charpoly, integral_spectrum, verify_charpoly_identity};
use starcover::syt::{multiplicity, multiplicity_table};
use starcover::zeta::{ihara_zeta_reciprocal, l_functions_s3, verify_zeta_identity};

pub struct Check {
    pub name: String,
    pub pass: bool,
    pub certificate: String,
}

fn check(name: &str, pass: bool, certificate: String) -> Check {
    Check {
        name: name.to_string(),
        pass,
        certificate,
    }
}

fn sub(degree: usize, gens: &[&str]) -> PermutationGroup {
    let gens: Vec<Permutation> = gens
        .iter()
        .map(|s| Permutation::parse(s, degree).expect("parsable"))
        .collect();
    PermutationGroup::generate(&gens).expect("nonempty")
}

fn x3_family() -> (GaloisCover, Graph, Graph) {
    let c = star_cover(3).expect("n = 3 in range");
    let q = c
        .quotient_by_perms(&sub(4, &["(1,2,3)"]))
        .expect("subgroup")
        .graph;
    let t = c
        .quotient_by_perms(&sub(4, &["(1,2)"]))
        .expect("subgroup")
        .graph;
    (c, q, t)
}

pub fn run_suite(name: &str) -> Result<Vec<Check>, String> {
    match name {
        "s3" => Ok(suite_s3()),
        "s4v" => Ok(suite_s4v()),
        "zeta3" => Ok(suite_zeta3()),
        "honeycomb" => Ok(suite_honeycomb()),
        "fourier" => Ok(suite_fourier()),
        "syt" => Ok(suite_syt()),
        "all" => {
            let mut all = Vec::new();
            for s in ["s3", "s4v", "zeta3", "honeycomb", "fourier", "syt"] {
                all.extend(run_suite(s)?);
            }
            Ok(all)
        }
        other => Err(format!(
            "unknown suite {:?} (expected s3, s4v, zeta3, honeycomb, fourier, syt, all)",
            other
        )),
    }
}

/// Charpolys of the n = 3 family and the product identity.
fn suite_s3() -> Vec<Check> {
    let (c, q, t) = x3_family();
    let px3 = charpoly(c.total());
    let pk4 = charpoly(c.base());
    let pq = charpoly(&q);
    let pt = charpoly(&t);
    let expected = [
        ("P_X3", &px3, "(x+3)(x+2)^6(x+1)^3x^4(x-1)^3(x-2)^6(x-3)"),
        ("P_K4", &pk4, "(x+1)^3(x-3)"),
        ("P_Q", &pq, "(x+3)(x+1)^3(x-1)^3(x-3)"),
        ("P_T", &pt, "(x+2)^3(x+1)^3x^2(x-2)^3(x-3)"),
    ];
    let mut checks = Vec::new();
    for (name, poly, want) in expected {
        let got = poly.factored_string("x");
        checks.push(check(name, got == want, got));
    }
    let id = verify_charpoly_identity(&[px3, pk4.clone(), pk4], &[pq, pt.clone(), pt]);
    checks.push(check(
        "P_X3·P_K4^2 = P_Q·P_T^2",
        id.equal,
        format!(
            "both sides expand to {}",
            id.lhs_product.factored_string("x")
        ),
    ));
    checks
}

/// The X₄/V family: quotient by the normal Klein four-group.
fn suite_s4v() -> Vec<Check> {
    let c = star_cover(4).expect("n = 4 in range");
    let v = sub(5, &["(1,2)(3,4)", "(1,3)(2,4)"]);
    let y = c
        .quotient_galois(
            &c.deck
                .subgroup_indices(&v)
                .expect("subgroup of the deck group"),
        )
        .expect("normal subgroup");
    let c3 = (0..6)
        .find(|&e| y.deck.table.element_order(e) == 3)
        .expect("order-3 element");
    let c2 = (0..6)
        .find(|&e| y.deck.table.element_order(e) == 2)
        .expect("order-2 element");
    let q = y
        .quotient(&y.deck.table.cyclic_subgroup(c3))
        .expect("C3")
        .graph;
    let t = y
        .quotient(&y.deck.table.cyclic_subgroup(c2))
        .expect("C2")
        .graph;
    let pxv = charpoly(y.total());
    let pk5 = charpoly(y.base());
    let pq = charpoly(&q);
    let pt = charpoly(&t);
    let mut checks = vec![check(
        "X4/V is a 30-vertex S3-cover of K5",
        y.total().vertex_count() == 30 && y.deck.order() == 6 && !y.deck.table.is_abelian(),
        format!(
            "{} vertices, deck order {}",
            y.total().vertex_count(),
            y.deck.order()
        ),
    )];
    let expected = [
        ("P_X4/V", &pxv, "(x+4)(x+2)^10(x+1)^4(x-1)^4(x-2)^10(x-4)"),
        ("P_K5", &pk5, "(x+1)^4(x-4)"),
        ("P_Q'", &pq, "(x+4)(x+1)^4(x-1)^4(x-4)"),
        ("P_T'", &pt, "(x+2)^5(x+1)^4(x-2)^5(x-4)"),
    ];
    for (name, poly, want) in expected {
        let got = poly.factored_string("x");
        checks.push(check(name, got == want, got));
    }
    let id = verify_charpoly_identity(&[pxv, pk5.clone(), pk5], &[pq, pt.clone(), pt]);
    checks.push(check(
        "P_X4/V·P_K5^2 = P_Q'·P_T'^2",
        id.equal,
        format!(
            "both sides expand to {}",
            id.lhs_product.factored_string("x")
        ),
    ));
    checks
}

/// The reciprocal-zeta identity and L-function divisions for n = 3.
fn suite_zeta3() -> Vec<Check> {
    let (c, q, t) = x3_family();
    let zy = ihara_zeta_reciprocal(c.total()).expect("valid zeta input");
    let zx = ihara_zeta_reciprocal(c.base()).expect("valid zeta input");
    let zq = ihara_zeta_reciprocal(&q).expect("valid zeta input");
    let zt = ihara_zeta_reciprocal(&t).expect("valid zeta input");
    let mut checks = Vec::new();
    let id = verify_zeta_identity(&zy, &zx, &zq, &zt);
    checks.push(check(
        "Z_X3·Z_K4^2 = Z_Q·Z_T^2",
        id.holds,
        format!("degree-{} polynomials agree", id.lhs.degree().unwrap_or(0)),
    ));
    match l_functions_s3(&zy, &zx, &zq, &zt) {
        Ok((lsgn, lstd)) => {
            checks.push(check(
                "L(sgn)^-1 = Z_Q/Z_X exact",
                lsgn.degree() == Some(12),
                format!("L(sgn)^-1 = {}", lsgn.factored_string("u")),
            ));
            checks.push(check(
                "L(std)^-1 = Z_X3·Z_K4/(Z_T·Z_Q) exact",
                lstd.degree() == Some(24),
                format!("L(std)^-1 = {}", lstd.factored_string("u")),
            ));
            checks.push(check(
                "Z_X3 = Z_K4·L(sgn)^-1·(L(std)^-1)^2",
                zx.poly.mul(&lsgn).mul(&lstd).mul(&lstd) == zy.poly,
                String::new(),
            ));
        }
        Err(e) => checks.push(check("L-function divisions", false, e.to_string())),
    }
    checks
}

/// The honeycomb quotient identifications: four isomorphism certificates plus the labeling.
fn suite_honeycomb() -> Vec<Check> {
    let star = star_cover(3).expect("n = 3 in range");
    let (_, q, t) = x3_family();
    let mut checks = Vec::new();
    let cases: [(&str, &Graph); 4] = [
        ("Lambda_Q", &q),
        ("Lambda_X3", star.total()),
        ("G_T", &t),
        ("G_K4", star.base()),
    ];
    for (name, target) in cases {
        let spec = LatticeSpec::preset(name).expect("known preset");
        let g = honeycomb_quotient(&spec).expect("valid lattice");
        let map = isomorphic(&g, target).expect("within guard");
        checks.push(check(
            &format!("L/{} isomorphic to its polyhedral graph", name),
            map.is_some(),
            format!("{} vertices", g.vertex_count()),
        ));
    }
    let tq = TranslationQuotient::build((2, 2), (4, -2)).expect("nonzero determinant");
    match label_vertices_s4(&tq) {
        Ok(labels) => {
            let map: Option<Vec<usize>> = labels
                .iter()
                .map(|p| star.total().find_vertex_by_label(&p.one_line()))
                .collect();
            let ok = map
                .map(|m| verify_isomorphism(&tq.graph, star.total(), &m))
                .unwrap_or(false);
            checks.push(check(
                "S4 labeling is an isomorphism onto the star cover",
                ok,
                format!("base point black(0,0) -> {}", labels[tq.black_vertex(0, 0)]),
            ));
        }
        Err(e) => checks.push(check("S4 labeling", false, e.to_string())),
    }
    checks
}

/// The Fourier multiset and the three-graph multiset relation.
fn suite_fourier() -> Vec<Check> {
    let (c, q, t) = x3_family();
    let mut checks = Vec::new();
    let s = match fourier_spectrum() {
        Ok(s) => s,
        Err(e) => return vec![check("fourier spectrum", false, e.to_string())],
    };
    let spec_x3 = integral_spectrum(&charpoly(c.total())).expect("monic");
    checks.push(check(
        "fourier multiset = Spec(X3)",
        s == spec_x3,
        s.to_string(),
    ));
    let spec_k4 = integral_spectrum(&charpoly(c.base())).expect("monic");
    let spec_q = integral_spectrum(&charpoly(&q)).expect("monic");
    let spec_t = integral_spectrum(&charpoly(&t)).expect("monic");
    let lhs = s.union(&spec_k4).union(&spec_k4);
    let rhs = spec_q.union(&spec_t).union(&spec_t);
    checks.push(check(
        "S ∪ Spec(K4) ∪ Spec(K4) = Spec(Q) ∪ Spec(T) ∪ Spec(T)",
        lhs == rhs,
        format!("both sides {}", lhs),
    ));
    checks
}

/// The tableau-multiplicity checks: published table and spectral agreement.
fn suite_syt() -> Vec<Check> {
    let mut checks = Vec::new();
    let table = match multiplicity_table(3) {
        Ok(t) => t,
        Err(e) => return vec![check("multiplicity table", false, e.to_string())],
    };
    let published: [[usize; 7]; 5] = [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, 0, 1, 0, 0],
        [0, 0, 0, 2, 0, 0, 0],
        [0, 0, 1, 0, 0, 2, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ];
    let mut table_ok = table.rows.len() == 5
        && table.rows.iter().map(|r| r.f).collect::<Vec<_>>() == vec![1, 3, 2, 3, 1];
    for (row, want) in table.rows.iter().zip(&published) {
        for (j, k) in (-3..=3).rev().enumerate() {
            table_ok &= row.counts.get(&k).copied().unwrap_or(0) == want[j];
        }
    }
    checks.push(check(
        "I_lambda(k)/f table for n = 3 matches the published 5×7 table",
        table_ok,
        format!(
            "f column {:?}",
            table.rows.iter().map(|r| r.f).collect::<Vec<_>>()
        ),
    ));
    let x3 = star_cover(3).expect("in range");
    let spec3 = integral_spectrum(&charpoly(x3.total())).expect("monic");
    let ok3 = (-3..=3).all(|k| multiplicity(3, k).expect("in range") == spec3.multiplicity(k));
    checks.push(check(
        "multiplicity(3,k) = Spec(X3) multiplicities for k in [-3,3]",
        ok3,
        spec3.to_string(),
    ));
    let x4 = star_cover(4).expect("in range");
    let spec4 = integral_spectrum(&charpoly(x4.total())).expect("monic");
    let ok4 = (-4..=4).all(|k| multiplicity(4, k).expect("in range") == spec4.multiplicity(k));
    checks.push(check(
        "multiplicity(4,k) = Spec(X4) multiplicities for k in [-4,4] (120×120 exact charpoly)",
        ok4,
        spec4.to_string(),
    ));
    checks
}
