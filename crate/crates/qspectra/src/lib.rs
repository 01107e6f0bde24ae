//! qspectra: signless Laplacian spectral analysis of small graphs, built for
//! verification work.
//!
//! The library computes the signless Laplacian Estrada index by two
//! independent routes (eigenvalues and exact spectral moments), carries exact
//! integer characteristic polynomials next to the floating spectra, counts
//! semi-edge walks both combinatorially and through matrix powers, and runs
//! exhaustive extremal searches over all tricyclic graphs at desk scale.
//!
//! Organization:
//!
//! - [`graph`]: the [`graph::Graph`] type, graph6 and edge-list formats, and
//!   structural operations (cyclomatic number, simple cycles, pendent
//!   vertices, base extraction, tricyclic classification).
//! - [`canon`]: canonical forms and isomorphism for graphs on up to 16
//!   vertices.
//! - [`exact`]: integer symmetric matrices, exact powers and spectral
//!   moments, characteristic polynomials, cospectrality.
//! - [`spectral`]: Jacobi eigenvalues, SLEE by eigenvalues and by the moment
//!   series, the adjacency Estrada index.
//! - [`walks`]: semi-edge walk enumeration, walk tables, finite-horizon
//!   dominance, and the neighbor-transfer construction.
//! - [`families`]: the named extremal families H_j^n, candidate bases A_i^j,
//!   and the bordered submatrices S_6, S_7.
//! - [`search`]: exhaustive tricyclic enumeration and the verification
//!   reports for the extremal and cospectrality claims.
//! - [`cli`]: the command-line front end used by the `qspectra` binary.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `cargo run --example slee_routes`.

pub mod canon;
pub mod cli;
pub mod exact;
pub mod families;
pub mod graph;
pub mod search;
pub mod spectral;
pub mod walks;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use exact::{
    adjacency, are_q_cospectral, char_poly, signless_laplacian, spectral_moment, spectral_moments,
    CharPoly, IntSymMatrix, MomentSequence,
};
pub use families::{build_a, build_h, build_s, min_vertices, AnchoredGraph, FamilyId};
pub use graph::{Graph, GraphError, TricyclicClass};
pub use search::{
    enumerate_tricyclic, verify_cospectral_family, verify_recurrence, verify_theorem1,
    verify_theorem2, EnumerationRun, RecurrenceForm, TricyclicSearch, VerificationReport,
};
pub use spectral::{
    eigenvalues_sym, estrada_index, slee, slee_series, SleeMethod, SleeValue, Spectrum,
    DEFAULT_TOL,
};
pub use walks::{
    apply_transfer, check_dominance, check_transfer_hypotheses, enumerate_walks, walk_table,
    DominanceOutcome, DominanceVerdict, WalkTable,
};
