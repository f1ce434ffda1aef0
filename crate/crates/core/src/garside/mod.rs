//! Complemented monoid presentations and the Garside machinery built on them.

pub mod ball;
pub mod certificate;
pub mod coherence;
pub mod complement;
pub mod file;
pub mod monoid;
pub mod presentation;
pub mod reversing;
pub mod structure;

pub use coherence::{check_coherence_left, check_coherence_right, CoherenceReport, TripleCheck, TripleStatus};
pub use complement::ComplementTable;
pub use monoid::ComplementedMonoid;
pub use presentation::{congruence_class, MonoidPresentation, DEFAULT_CLASS_LIMIT};
pub use reversing::{reverse, reverse_left, reverse_right, reverse_with, ReversalOutcome, Side, DEFAULT_CAP};
pub use certificate::{verify_garside, Condition, ConditionCheck, DivisorSet, GarsideCertificate};
pub use structure::{FractionForm, GarsideStructure, GreedyForm};
pub use ball::{compare_with_ball, enumerate_ball, Ball, OracleReport};
pub use file::PresentationFile;
