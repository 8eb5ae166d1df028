//! `segre`: count, enumerate, analyze and draw Jordan structures.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 counting self-check
//! mismatch, 4 irrational eigenvalue, 5 I/O failure, 6 invalid rank pattern.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use segre::{
    analyze, blocks_from_rank_pattern, count_segre_gf, count_segre_sum, enumerate_segre, grid_of,
    nullity_growth, render_ascii, render_svg, ExactMatrix, JordanSpec, RankPattern,
};

#[derive(Debug, Parser)]
#[command(
    name = "segre",
    version,
    about = "Exact Jordan-structure counting and analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print P(n), the number of Segre characteristics of n x n matrices.
    Count {
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Gf)]
        method: Method,
    },
    /// List every Segre characteristic of n x n matrices.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find the Segre characteristic of a matrix given as a JSON file.
    Analyze {
        matrix_file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw every Jordan structure of n x n matrices.
    Render {
        n: usize,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u16).range(1..))]
        columns: u16,
        #[arg(long, value_enum, default_value_t = Figure::Svg)]
        format: Figure,
    },
    /// Turn a rank pattern such as "n=10: 10,7,5,3,2,1,0" into block sizes.
    Rankpattern { pattern: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Gf,
    Sum,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Figure {
    Svg,
    Ascii,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("counting methods disagree: generating function {gf}, sum {sum}")]
    Mismatch { gf: String, sum: String },
    #[error("{0}")]
    Irrational(segre::Error),
    #[error("failed to write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    InvalidPattern(segre::Error),
    #[error("{0}")]
    Internal(segre::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Mismatch { .. } => 3,
            CliError::Irrational(_) => 4,
            CliError::Io { .. } => 5,
            CliError::InvalidPattern(_) => 6,
            CliError::Internal(_) => 1,
        }
    }
}

/// Output text plus, for `count --method both`, a deferred mismatch.
struct Output {
    text: String,
    failure: Option<CliError>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output {
            text,
            failure: None,
        }
    }
}

fn positive(n: usize) -> Result<usize, CliError> {
    if n == 0 {
        Err(CliError::Usage("n must be at least 1".into()))
    } else {
        Ok(n)
    }
}

fn run(command: &Command) -> Result<Output, CliError> {
    match *command {
        Command::Count { n, method } => Ok(match method {
            Method::Gf => format!("{}\n", count_segre_gf(n)).into(),
            Method::Sum => format!("{}\n", count_segre_sum(n)).into(),
            Method::Both => {
                let (gf, sum) = (count_segre_gf(n), count_segre_sum(n));
                let failure = (gf != sum).then(|| CliError::Mismatch {
                    gf: gf.to_string(),
                    sum: sum.to_string(),
                });
                Output {
                    text: format!("{gf}\n{sum}\n"),
                    failure,
                }
            }
        }),
        Command::Enumerate { n, format } => {
            let all = enumerate_segre(positive(n)?);
            let text = match format {
                Format::Text => {
                    let mut out: String = all.iter().map(|s| format!("{s}\n")).collect();
                    out.push_str(&format!("total: {}\n", all.len()));
                    out
                }
                Format::Json => {
                    let strings: Vec<String> = all.iter().map(ToString::to_string).collect();
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&strings).expect("strings serialize")
                    )
                }
            };
            Ok(text.into())
        }
        Command::Analyze {
            ref matrix_file,
            format,
        } => {
            let text = fs::read_to_string(matrix_file).map_err(|e| {
                CliError::Usage(format!("cannot read {}: {e}", matrix_file.display()))
            })?;
            let matrix =
                ExactMatrix::from_json_str(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            let report = analyze(&matrix).map_err(|e| match e {
                segre::Error::IrrationalEigenvalue { .. } => CliError::Irrational(e),
                segre::Error::NotSquare { .. } => CliError::Usage(e.to_string()),
                other => CliError::Internal(other),
            })?;
            Ok(match format {
                Format::Text => report.to_string(),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report.to_json()).expect("json serializes")
                ),
            }
            .into())
        }
        Command::Render { n, columns, format } => {
            let grids: Vec<_> = enumerate_segre(positive(n)?)
                .into_iter()
                .map(|s| grid_of(&JordanSpec::positional(s)))
                .collect();
            Ok(match format {
                Figure::Svg => render_svg(&grids, columns as usize),
                Figure::Ascii => {
                    let pictures: Vec<String> = grids.iter().map(render_ascii).collect();
                    format!("{}\n", pictures.join("\n\n"))
                }
            }
            .into())
        }
        Command::Rankpattern { ref pattern } => {
            let rp: RankPattern = pattern
                .parse()
                .map_err(|e: segre::Error| CliError::Usage(e.to_string()))?;
            let growth = nullity_growth(&rp).map_err(CliError::InvalidPattern)?;
            let blocks = blocks_from_rank_pattern(&rp).map_err(CliError::InvalidPattern)?;
            Ok(format!("growth: {growth}\nblocks: {blocks}\n").into())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = run(&cli.command).and_then(|output| {
        match &cli.out {
            Some(path) => fs::write(path, &output.text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?,
            None => print!("{}", output.text),
        }
        output.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
