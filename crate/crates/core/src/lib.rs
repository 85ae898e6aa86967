//! Commutator calculus over free groups: Magnus expansions, lower-central
//! weights, Lyndon-basis Lie classes, Cockcroft certificates for partitioned
//! presentations, and membership evidence for normal closures.

pub mod cockcroft;
pub mod intlin;
pub mod lyndon;
pub mod magnus;
pub mod membership;
pub mod parse;
pub mod presentation;
pub mod word;

pub use cockcroft::{
    certify, detect_h3, e_class, CertificationFailure, CockcroftCertificate,
    CockcroftConclusions, DetectError, EClassError, ENImage, H3Report, Part,
};
pub use intlin::{
    rank, row_dependency, rows_independent, smith_normal_form, solve_left, IntMatrix,
    SmithDecomposition,
};
pub use lyndon::{
    bracket_expansion, leading_lie_class, lyndon_words, relator_class_matrix, standard_split,
    ClassError, ClassMatrixError, LieVector,
};
pub use magnus::{lcs_weight, magnus_expand, TruncatedSeries, WeightResult};
pub use membership::{
    check_witness, exponent_balance, left_power_witness, replay_trace, right_power_witness,
    search_membership, trace_to_witness, MembershipEvidence, ReplayError, RewriteStep,
    RewriteTrace, SearchBounds, Witness, WitnessError, WitnessFactor,
};
pub use parse::{parse_word, ParseError};
pub use presentation::{
    efficiency_report, parse_presentation, EfficiencyError, EfficiencyReport, HomologyReport,
    Presentation, PresentationError, PresentationFileError,
};
pub use word::{Alphabet, Syllable, Word, WordError};
