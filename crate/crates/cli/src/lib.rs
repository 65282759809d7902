//! Library side of the `sgrace` command: document format, cache, rendering
//! and the subcommands themselves.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub mod args;
pub mod cache;
pub mod commands;
pub mod document;
pub mod render;

pub use args::Cli;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    /// Labeling built or verified, or the question decided.
    Ok = 0,
    VerifyFailed = 1,
    /// Bad flags, malformed input or an I/O failure.
    Usage = 2,
    Nonexistent = 3,
    Uncovered = 4,
    BudgetExceeded = 5,
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return if e.use_stderr() {
                Exit::Usage as i32
            } else {
                0
            };
        }
    };
    match commands::execute(cli.command, out, err) {
        Ok(exit) => exit as i32,
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            Exit::Usage as i32
        }
    }
}
