use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use aprac::drawing::{parse_drawing, serialize_drawing, Drawing};
use aprac::factor::{regularize, split_two_factors};
use aprac::generators::Family;
use aprac::graph::{parse_graph, serialize_graph, Graph};
use aprac::layout::{draw_with, DrawOptions};
use aprac::oracle::{search_drawing, OracleOptions};
use aprac::render::{to_svg, RenderOptions};
use aprac::validate::{validate, Mode, SlopeSet, ValidateOptions};

#[derive(Parser)]
#[command(name = "aprac", version, about = "Right-angle-crossing drawings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split a graph into directed 2-factors and list them.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Number of 2-factors; every vertex needs degree at most twice this.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Draw a graph of maximum degree 8 with two bends per edge.
    Draw {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        keep_augmented: bool,
    },
    /// Check a drawing; exits with 0 iff it passes.
    Validate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        bends: usize,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        /// Allowed slopes for slope-rac, e.g. "0;1;-2/3".
        #[arg(long)]
        slopes: Option<String>,
        #[arg(long)]
        strict_simple: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write a member of one of the dense drawable families.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_drawing: PathBuf,
    },
    /// Search a small grid for a straight-line drawing.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Grid size as WxH.
        #[arg(long, value_parser = parse_grid)]
        grid: (usize, usize),
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long)]
        deterministic: bool,
    },
    /// Write a drawing as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = 4)]
        scale: u32,
        #[arg(long)]
        mark_crossings: bool,
        #[arg(long)]
        color_by_factor: bool,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WxH, got `{s}`"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad grid size `{s}`: {e}"))
    };
    Ok((num(w)?, num(h)?))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

fn read_drawing(path: &Path) -> Result<Drawing> {
    parse_drawing(&read(path)?).with_context(|| format!("parsing drawing {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Decompose { input, degree, output } => {
            let g = read_graph(&input)?;
            let dmg = regularize(&g, degree)?;
            let listing = split_two_factors(&dmg, degree)?.listing(&dmg);
            match output {
                Some(path) => write(&path, &listing)?,
                None => print!("{listing}"),
            }
        }
        Command::Draw {
            input,
            output,
            keep_augmented,
        } => {
            let g = read_graph(&input)?;
            let d = draw_with(&g, DrawOptions { keep_augmented })?;
            write(&output, &serialize_drawing(&d))?;
        }
        Command::Validate {
            input,
            bends,
            mode,
            slopes,
            strict_simple,
            report,
        } => {
            let d = read_drawing(&input)?;
            let mut opts = ValidateOptions::new(bends, mode);
            if let Some(s) = slopes {
                opts = opts.with_slopes(SlopeSet::parse(&s)?);
            } else if mode == Mode::SlopeRac {
                bail!("--mode slope-rac needs --slopes");
            }
            opts.strict_simple = strict_simple;
            let r = validate(&d, &opts);
            let text = r.to_text();
            match report {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            return Ok(if r.passed { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Command::Generate {
            family,
            k,
            out_graph,
            out_drawing,
        } => {
            let (g, d) = family.generate(k)?;
            write(&out_graph, &serialize_graph(&g))?;
            write(&out_drawing, &serialize_drawing(&d))?;
        }
        Command::Oracle {
            input,
            grid: (width, height),
            mode,
            deterministic,
        } => {
            let g = read_graph(&input)?;
            let mut opts = OracleOptions::new(width, height, mode);
            opts.deterministic = deterministic;
            let outcome = search_drawing(&g, opts)?;
            println!("{}", outcome.summary());
            if let Some(d) = outcome.drawing() {
                print!("{}", serialize_drawing(d));
            }
        }
        Command::Render {
            input,
            output,
            scale,
            mark_crossings,
            color_by_factor,
        } => {
            let d = read_drawing(&input)?;
            let opts = RenderOptions {
                scale,
                mark_crossings,
                color_by_factor,
            };
            write(&output, &to_svg(&d, &opts))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
