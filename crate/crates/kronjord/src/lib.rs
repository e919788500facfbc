//! File formats and verification reports for `kronjord-core`, plus the
//! `kronjord` command line tool.

pub mod json;
pub mod report;
