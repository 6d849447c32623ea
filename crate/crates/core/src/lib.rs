//! Exact-arithmetic library for star-graph Galois covers of complete graphs,
//! their subgroup quotients, honeycomb-lattice quotients, and the spectral and
//! Ihara-zeta identities relating them.
//!
//! Everything here is certificate-grade: integer arithmetic end to end, no
//! floating point on any verification path. The main entry points are
//! [`cover::star_cover`] (the Cayley-graph cover construction),
//! [`cover::GaloisCover::quotient`] (intermediate covers), [`spectra::charpoly`]
//! (exact characteristic polynomials), [`zeta::ihara_zeta_reciprocal`] (Bass
//! determinant route), and [`honeycomb::honeycomb_quotient`] (finite quotients
//! of the hexagonal lattice).

pub mod cover;
pub mod graph;
pub mod honeycomb;
pub mod perm;
pub mod spectra;
pub mod syt;
pub mod zeta;
