//! Exact Dehn surgery classification for wrapped Montesinos knots in a
//! solid torus.
//!
//! A wrapped Montesinos knot `K^a(t1, …, tk)` is a Montesinos tangle placed
//! in a solid torus `V` with its top endpoints joined to its bottom
//! endpoints by two arcs running around `V`, either straight (`a = 0`) or
//! with a half twist (`a = 1`). The crate normalizes such knots under the
//! obvious homeomorphisms of `V`, decides which surgery slopes are
//! exceptional, and produces certificates: Seifert invariants of the
//! double branched covers that arise upstairs in `S³`, pretzel-surface
//! slopes, and predictions for the twisted family `K_n ⊂ S³`.

pub mod classify;
pub mod error;
pub mod parse;
pub mod seifert;
pub mod slopes;
pub mod tangles;
pub mod wrapped;

pub use classify::{
    classify, exceptional_slopes, predict_s3_family, surgery_in_s3, FamilyPrediction, S3Surgery,
    SurgeryClassification, ToroidalCertificate,
};
pub use error::{Error, Result};
pub use seifert::{dbc_montesinos, moser, sfs_equal, MontesinosLink, SeifertInvariants, SfsClass};
pub use slopes::Slope;
pub use tangles::{MontesinosTangle, NormalForm, Pairing, RationalTangle};
pub use wrapped::{TwistedImage, WrappedKnot};
