//! Command-line front end: expression parser, JSON reports, subcommands and
//! the fixture corpus.

pub mod commands;
pub mod corpus;
pub mod parser;
pub mod report;
