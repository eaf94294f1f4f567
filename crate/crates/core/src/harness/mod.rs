//! Verification harness for the codes of this crate.

pub mod examples;
pub mod identities;
pub mod oracle;
pub mod simulate;
