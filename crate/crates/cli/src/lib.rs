//! Command-line frontend: argument grammar, command execution and SVG output.

mod commands;
pub mod render;

pub use commands::{execute, Cli, Command, Output, SideRange};
pub use render::render_svg;
