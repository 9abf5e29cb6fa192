//! Command-line surface: text syntax and commands.

mod commands;
pub mod text;

pub use commands::{run, Outcome};
pub use text::{format_element, format_key, format_parsed, parse, parse_diagram, parse_element, Parsed};
