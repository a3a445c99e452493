//! Regular distance-preserving graphs.
//!
//! A connected graph is distance-preserving (dp) when it has an isometric
//! subgraph of every order `1..=n`. This crate builds `r`-regular dp graphs
//! for every admissible `(n, r)` with checkable certificates, runs the
//! classic and modified Havel–Hakimi loops, and enumerates connected regular
//! graphs exhaustively to count how many of them are dp.

pub mod canon;
pub mod constructions;
pub mod distance;
pub mod enumeration;
pub mod formats;
pub mod graph;
pub mod havel_hakimi;
pub mod isometry;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm};
pub use constructions::{
    build_regular_dp, circulant, direct_sum, direct_sum_chain, is_admissible, join, AdmissiblePair, ChainBlock,
    ConstructionCase, ConstructionError, RegularDpConstruction, TaggedGraph,
};
pub use distance::{distance_matrix, Distance, DistanceMatrix};
pub use enumeration::{
    enumerate_connected_regular, enumerate_connected_regular_of_degree, enumerate_regular, MAX_ENUMERATION_N,
    survey_modified_hh, survey_regular_dp, survey_regular_dp_of, SurveyRow,
};
pub use formats::{decode_graph6, encode_graph6, parse_edge_list, write_dot, write_edge_list, FormatError};
pub use graph::{Edge, Graph, GraphError};
pub use havel_hakimi::{
    classic_hh, enumerate_graphical_sequences, erdos_gallai_graphical, hh_dp_certificate, modified_hh, DegreeSequence,
    HHOutcome, HHStatus, SequenceError,
};
pub use isometry::{
    is_distance_preserving, is_dp_bruteforce, is_isometric, lemma_condition_holds, verify_certificate,
    CertificateVerdict, DpCertificate, DpReport, IsometryError,
};
