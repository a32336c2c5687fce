//! Desk-scale computational workbench for geometric group theory.
//!
//! The crate builds and checks the explicit combinatorial objects that arise
//! around right-angled Artin groups: finite flag complexes and their
//! subdivisions, exact integral/rational homology via Smith normal form,
//! finite permutation groups acting simplicially, Z-periodic complexes and
//! mapping telescopes, cube-complex vertex links with nonpositive-curvature
//! certificates, conjugacy-class classification reports, and Hattori-Stallings
//! rank bounds on K0 of rational group algebras.
//!
//! All arithmetic is exact (big integers and rationals); every operation is
//! deterministic, so reports are byte-identical across runs.

pub mod classify;
pub mod complexes;
pub mod cubes;
pub mod fingroups;
pub mod fixtures;
pub mod homology;
pub mod io;
pub mod ktheory;
pub mod periodic;
pub mod raag;
