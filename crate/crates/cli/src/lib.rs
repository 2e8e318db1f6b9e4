//! Corpora, claim campaigns and JSONL reports behind the `ekrcx` binary.

pub mod campaign;
pub mod corpus;
pub mod error;
pub mod report;

pub use campaign::{evaluate, replay, run_campaign, CampaignConfig, Claim};
pub use corpus::{CorpusSpec, Instance};
pub use error::CliError;
pub use report::{ReportSink, Verdict, VerificationReport};
