pub mod braidrep;
pub mod error;
pub mod freeprod;
pub mod garside;
pub mod linkinv;
pub mod semidirect;
pub mod wada;
pub mod words;

pub use braidrep::{braid_is_trivial, markov_conjugate, markov_stabilize, ArtinRepresentation, BraidWord};
pub use error::{Error, Result};
pub use freeprod::{
    BaseGroup, CyclicGroup, DistinguishedElement, FreeProduct, FreeProductElement, GarsideGroup, IntegerGroup, Syllable,
};
pub use garside::{ComplementTable, ComplementedMonoid, GarsideStructure, MonoidPresentation, ReversalOutcome, Side};
pub use words::{free_reduce, Alphabet, Letter, PositiveWord, SignedWord};
pub use linkinv::{
    abelianized_matrix, fingerprint, gamma_presentation, smith_normal_form, Fingerprint, GroupPresentation,
    IntegerMatrix,
};
pub use wada::{WadaKind, WadaRep};
