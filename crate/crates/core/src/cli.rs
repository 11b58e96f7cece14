//! Command-line front end.
//!
//! Exit status is 0 on success (and, for `verify`, only when the map is
//! isomorphic), 1 on a domain failure, and 2 on a usage error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::document::{report_to_json, MapDocument};
use crate::dot::cube_to_dot;
use crate::embedding::{embed_grid, inflate_k, labelled_view, EmbeddingMap, GridSpec};
use crate::error::{Error, Result};
use crate::topology::{cube_stats, CubeSpec};
use crate::verify::{oracle_search, verify, OracleOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cubegrid",
    version,
    about = "Embed rectangular grids into k-ary n-cubes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Embed an A x B grid and print the map.
    Embed {
        /// Grid rows.
        #[arg(short = 'A', value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        /// Grid columns.
        #[arg(short = 'B', value_parser = clap::value_parser!(u32).range(1..))]
        cols: u32,
        /// Nodes per cube dimension.
        #[arg(short = 'k', value_parser = clap::value_parser!(u32).range(2..))]
        k: u32,
        /// Cube dimensions.
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Round k up to a power of two before embedding.
        #[arg(long)]
        inflate: bool,
    },
    /// Verify a JSON map document ("-" reads stdin).
    Verify { map_path: PathBuf },
    /// Search exhaustively for an isomorphic embedding.
    Oracle {
        #[arg(short = 'A', value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        #[arg(short = 'B', value_parser = clap::value_parser!(u32).range(1..))]
        cols: u32,
        #[arg(short = 'k', value_parser = clap::value_parser!(u32).range(2..))]
        k: u32,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Maximum number of tentative placements.
        #[arg(long, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Print node count, edge count, degree and diameter of a cube.
    Info {
        #[arg(short = 'k', value_parser = clap::value_parser!(u32).range(2..))]
        k: u32,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
}

/// Parse `args` (program name first) and run. Usage errors print to `err`.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            code
        }
    }
}

pub fn run(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(command, out) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

enum CliError {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> std::result::Result<i32, CliError> {
    match *command {
        Command::Embed {
            rows,
            cols,
            k,
            n,
            format,
            out: ref path,
            inflate,
        } => {
            let grid = GridSpec::new(rows, cols)?;
            let cube = if inflate {
                inflate_k(k, n)?
            } else {
                CubeSpec::new(k, n)?
            };
            let map = embed_grid(&grid, &cube)?;
            let text = match format {
                Format::Json => MapDocument::from_map(&map).to_json(),
                Format::Dot => cube_to_dot(&cube, Some(&map)),
                Format::Table => render_table(&map)?,
            };
            match path {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { ref map_path } => {
            let text = if map_path.as_os_str() == "-" {
                let mut buf = String::new();
                io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                fs::read_to_string(map_path)?
            };
            let map = MapDocument::from_json(&text)?.to_map()?;
            let report = verify(&map);
            out.write_all(report_to_json(&report).as_bytes())?;
            Ok(if report.isomorphic {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Oracle {
            rows,
            cols,
            k,
            n,
            budget,
        } => {
            let grid = GridSpec::new(rows, cols)?;
            let cube = CubeSpec::new(k, n)?;
            let outcome = oracle_search(&grid, &cube, budget)?;
            writeln!(out, "{}", outcome.name())?;
            match outcome {
                OracleOutcome::Found(map) => {
                    out.write_all(MapDocument::from_map(&map).to_json().as_bytes())?;
                    Ok(EXIT_OK)
                }
                _ => Ok(EXIT_FAILURE),
            }
        }
        Command::Info { k, n } => {
            let cube = CubeSpec::new(k, n)?;
            let stats = cube_stats(&cube);
            writeln!(out, "cube      {cube}")?;
            writeln!(out, "nodes     {}", stats.node_count)?;
            writeln!(out, "edges     {}", stats.edge_count)?;
            writeln!(out, "degree    {}", stats.degree)?;
            writeln!(out, "diameter  {}", stats.diameter)?;
            Ok(EXIT_OK)
        }
    }
}

/// One line per grid point; label columns appear only for power-of-two `k`.
pub fn render_table(map: &EmbeddingMap) -> Result<String> {
    let grid = map.grid();
    let cube = map.cube();
    let mut lines = vec![format!(
        "# {}x{} grid in the {cube}",
        grid.rows(),
        grid.cols()
    )];
    let coord_width = cube.n() as usize * (cube.k() - 1).to_string().len() + cube.n() as usize + 1;

    if cube.k().is_power_of_two() {
        let view = labelled_view(map)?;
        let label_width = view.first().map_or(0, |p| p.label.width()).max(5);
        lines.push(format!(
            "{:>4} {:>6}  {:<cw$}  {:<lw$}  {:<4} {:<4} {:<4}",
            "x",
            "y",
            "coord",
            "label",
            "row",
            "pad",
            "col",
            cw = coord_width,
            lw = label_width
        ));
        for p in view {
            lines.push(format!(
                "{:>4} {:>6}  {:<cw$}  {:<lw$}  {:<4} {:<4} {:<4}",
                p.x,
                p.y,
                p.coord.to_string(),
                p.label.to_string(),
                field(&p.partition.row.to_string()),
                field(&p.partition.pad.to_string()),
                field(&p.partition.col.to_string()),
                cw = coord_width,
                lw = label_width
            ));
        }
    } else {
        lines.push(format!("{:>4} {:>6}  coord", "x", "y"));
        for ((x, y), coord) in map.iter() {
            lines.push(format!("{x:>4} {y:>6}  {coord}"));
        }
    }
    let mut text = lines
        .join("\n")
        .lines()
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n");
    text.push('\n');
    Ok(text)
}

fn field(bits: &str) -> &str {
    if bits.is_empty() {
        "-"
    } else {
        bits
    }
}
