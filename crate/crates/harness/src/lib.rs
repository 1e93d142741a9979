//! Analysis reports, corpora and theorem sweeps behind the `lmsg` binary.

pub mod corpus;
pub mod report;
pub mod verify;
