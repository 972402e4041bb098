//! Command-line front end for `rrclosure`: the ideal grammar, staircase
//! plots, and subcommand dispatch.

pub mod app;
pub mod parse;
pub mod svg;

pub use app::{run_command, CommandOutput, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
pub use parse::{
    parse_group, parse_poly_ideal, parse_val_ideal, parse_vars, IdealExpr, ParseError,
};
pub use svg::staircase_svg;
