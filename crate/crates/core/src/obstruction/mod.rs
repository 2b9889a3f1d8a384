//! Norm obstructions to topological sliceness.

pub mod foxmilnor;
pub mod modr;
pub mod norm;
pub mod quartic;
pub mod verdict;

pub use foxmilnor::{fox_milnor_test, FoxMilnor};
pub use modr::{mod_r_norm_test, mod_r_scan, Attempt, ModROutcome, ModRWitness};
pub use norm::{rational_norm_certificate, NormCertificate, NormVerdict, Witness};
pub use quartic::{quartic_norm_decision, QuarticDecision};
pub use verdict::{sliceness_verdict, KReport, SlicenessReport, Verdict};
