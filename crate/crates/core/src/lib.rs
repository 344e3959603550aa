//! A fixed-point laboratory for self-maps on finite metric spaces.
//!
//! Distances are exact arbitrary-precision rationals, so every class
//! boundary — all of which are strict inequalities — is decided
//! bit-exactly, never by tolerance. The crate provides:
//!
//! * [`space`]: validated finite metric spaces, the pairwise-distance
//!   sum `S`, ultrametric detection, shortest-path repair of raw
//!   matrices, and the worked ultrametric family `E(n, M)`;
//! * [`map`]: self-maps as functional graphs — fixed points, cycles
//!   with prime periods, tails, asymptotic regularity;
//! * [`classify`]: exact minimal coefficients and membership verdicts
//!   for the contraction classes (two-point, n-point, total-pairwise,
//!   and the combiner-based `G`/`β` conditions), plus the closed-form
//!   coefficient transformations connecting them;
//! * [`iterate`]: Picard iteration with exact gap sequences, the
//!   window decay condition, and its geometric envelope;
//! * [`search`]: seeded random instance generation, class-separation
//!   mining, and per-instance verification of the theory's claims,
//!   aggregated over reproducible campaigns;
//! * [`document`]: JSON/CSV interchange for spaces and maps.
//!
//! Every operation is a pure function of immutable values; parallel
//! enumeration reduces deterministically, so witnesses and campaign
//! summaries are reproducible across runs and thread counts.

// Symmetric-matrix code indexes with `i`/`j` on both `[i][j]` and
// `[j][i]`; iterator-and-enumerate rewrites obscure that symmetry.
#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod document;
pub mod error;
pub mod iterate;
pub mod map;
pub mod rat;
pub mod search;
pub mod space;

pub use classify::{
    classify_b_kannan, classify_g_kannan, coefficient_calculus, kannan_min_coefficient,
    kannan_ratio, npk_min_coefficient, npk_ratio, tpd_min_coefficient, tpd_ratio, ClassName,
    ClassificationReport, Coefficient, CoefficientRule, ConditionVerdict, ConditionViolation,
};
pub use document::{
    document_from_parts, emit_csv, emit_json, parse_document, resolve_document, SpaceDocument,
};
pub use error::Error;
pub use iterate::{
    cauchy_certificate, envelope_check, gap_condition, picard, CauchyCertificate, EnvelopeCheck,
    GapAnalysis, IterationTrace, Termination,
};
pub use map::{Cycle, OrbitAnalysis, SelfMap, Tail};
pub use rat::{format_rat, parse_rat, rat, rat_int, rat_to_f64, Rat};
pub use search::{
    campaign, derive_seed, generate, mine_separation, replay, verify_theorems, CampaignConfig,
    CampaignFailure, CampaignSummary, ClaimId, ClaimStats, ClaimVerdict, GeneratorConfig,
    MapScheme, ReplaySpec, SeparationWitness, SpaceScheme, TheoremReport, WitnessSource,
};
pub use space::{
    default_labels, example_family, is_ultrametric, metric_closure, total_pairwise_sum,
    validate_metric, FiniteMetricSpace, MetricViolation, ValidationReport,
};
