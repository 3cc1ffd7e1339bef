use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use jsj_core::arith::{
    factor_monodromy, mixed_torus_slopes, monodromy_matrix, neg_cf_evaluate, neg_cf_expand,
    split_slopes, IntMatrix2, MonodromySign, MonodromyWord,
};
use jsj_core::diagram::{bundle_counts, count_structures};
use jsj_core::{
    is_consistent, maximal_consistent_subgraphs, minimal_inconsistent_paths, reduce_to_tree,
    validate_graph, PlumbingGraph,
};

use crate::dot::emit_dot;
use crate::format::{parse_graph_file, SetDisplay};
use crate::report::ReductionReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "jsj",
    version,
    about = "Consistency and reduction of decorated plumbing graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check decorations, goodness and shape; exits 1 if anything fails.
    Validate { file: PathBuf },
    /// Print `consistent` or `inconsistent`, with minimal inconsistent paths.
    Consistent { file: PathBuf },
    /// Build the reduction tree and print the report.
    Reduce {
        file: PathBuf,
        /// Break every minimal inconsistent path, not only the least one.
        #[arg(long)]
        all_paths: bool,
        /// Append the maximal consistent subgraphs.
        #[arg(long)]
        oracle: bool,
        /// Also write the tree as DOT to this path.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// List the maximal consistent subgraphs.
    Subgraphs { file: PathBuf },
    /// Tight structure counts for the lens space with exponents `a`.
    Count {
        #[arg(required = true, allow_negative_numbers = true)]
        a: Vec<i64>,
    },
    /// Negative continued fractions.
    Lens {
        #[command(subcommand)]
        command: LensCommand,
    },
    /// Torus-bundle monodromy words.
    Bundle {
        #[command(subcommand)]
        command: BundleCommand,
    },
    /// Mixed-torus slopes for a chain of length `n`.
    #[command(allow_negative_numbers = true)]
    Slopes {
        n: i64,
        /// Meridional slopes after splitting at `s`.
        #[arg(long)]
        split: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
enum LensCommand {
    /// Expand -p/q as [-a1, ..., -an].
    #[command(allow_negative_numbers = true)]
    Expand { p: i64, q: i64 },
    /// Evaluate [-a1, ..., -an].
    #[command(allow_negative_numbers = true)]
    Evaluate {
        #[arg(required = true)]
        a: Vec<i64>,
    },
}

#[derive(Subcommand, Debug)]
enum BundleCommand {
    /// Matrix and structure counts for a word.
    #[command(allow_negative_numbers = true)]
    Word {
        #[arg(value_parser = parse_monodromy_sign)]
        sign: MonodromySign,
        #[arg(required = true)]
        a: Vec<i64>,
    },
    /// Find the least word for a matrix.
    #[command(allow_negative_numbers = true)]
    Factor {
        m11: i64,
        m12: i64,
        m21: i64,
        m22: i64,
        /// Largest word index searched.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest exponent searched.
        #[arg(long, default_value_t = 12)]
        max_a: i64,
    },
}

fn parse_monodromy_sign(s: &str) -> Result<MonodromySign, String> {
    match s {
        "+" => Ok(MonodromySign::Positive),
        "-" => Ok(MonodromySign::Negative),
        _ => Err(format!("expected + or -, found {s:?}")),
    }
}

fn load(path: &PathBuf) -> Result<PlumbingGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn join(a: &[i64]) -> String {
    let parts: Vec<String> = a.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Runs one command. Domain failures exit 1, argument errors exit 2.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(msg) => Outcome {
            code: EXIT_DOMAIN,
            stdout: out,
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn execute(command: Command, out: &mut String) -> Result<i32, String> {
    let e = |err: jsj_core::Error| err.to_string();
    match command {
        Command::Validate { file } => {
            let g = load(&file)?;
            let report = validate_graph(&g);
            if report.is_valid() {
                out.push_str("valid\n");
                return Ok(EXIT_OK);
            }
            out.push_str("invalid\n");
            for v in &report.violations {
                let _ = writeln!(out, "  {v}");
            }
            Ok(EXIT_DOMAIN)
        }
        Command::Consistent { file } => {
            let g = load(&file)?;
            if is_consistent(&g).map_err(e)? {
                out.push_str("consistent\n");
            } else {
                out.push_str("inconsistent\n");
                // paths are only defined once every vertex is extreme
                if let Ok(paths) = minimal_inconsistent_paths(&g) {
                    for p in paths {
                        let _ = writeln!(out, "  path {}", p.path());
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Reduce {
            file,
            all_paths,
            oracle,
            dot,
        } => {
            let g = load(&file)?;
            let tree = reduce_to_tree(&g, all_paths).map_err(e)?;
            let oracle = if oracle {
                Some(maximal_consistent_subgraphs(&g).map_err(e)?)
            } else {
                None
            };
            let report = ReductionReport {
                tree: &tree,
                oracle: oracle.as_deref(),
            };
            let _ = write!(out, "{report}");
            if let Some(path) = dot {
                std::fs::write(&path, emit_dot(&tree))
                    .map_err(|err| format!("{}: {err}", path.display()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Subgraphs { file } => {
            let g = load(&file)?;
            for m in maximal_consistent_subgraphs(&g).map_err(e)? {
                let _ = writeln!(out, "{}", SetDisplay(&m));
            }
            Ok(EXIT_OK)
        }
        Command::Count { a } => {
            let c = count_structures(&a).map_err(e)?;
            let _ = writeln!(
                out,
                "total={} universally_tight={} virtually_overtwisted={}",
                c.total, c.universally_tight, c.virtually_overtwisted
            );
            Ok(EXIT_OK)
        }
        Command::Lens {
            command: LensCommand::Expand { p, q },
        } => {
            let a = neg_cf_expand(p, q).map_err(e)?;
            let _ = writeln!(out, "a={}", join(&a));
            Ok(EXIT_OK)
        }
        Command::Lens {
            command: LensCommand::Evaluate { a },
        } => {
            let v = neg_cf_evaluate(&a).map_err(e)?;
            let _ = writeln!(out, "value={v}");
            Ok(EXIT_OK)
        }
        Command::Bundle {
            command: BundleCommand::Word { sign, a },
        } => {
            let w = MonodromyWord::new(sign, a).map_err(e)?;
            let m = monodromy_matrix(&w);
            let c = bundle_counts(&w);
            let _ = writeln!(out, "word={w}");
            let _ = writeln!(out, "matrix={m}");
            let _ = writeln!(out, "trace={}", m.trace());
            let _ = writeln!(out, "tight={}", c.tight);
            let _ = writeln!(out, "virtually_overtwisted={}", c.virtually_overtwisted);
            Ok(EXIT_OK)
        }
        Command::Bundle {
            command:
                BundleCommand::Factor {
                    m11,
                    m12,
                    m21,
                    m22,
                    max_n,
                    max_a,
                },
        } => {
            let m = IntMatrix2::new(m11, m12, m21, m22);
            let Some(f) = factor_monodromy(m, max_n, max_a).map_err(e)? else {
                return Err(format!(
                    "no word with n <= {max_n} and a <= {max_a} gives {m}"
                ));
            };
            let _ = writeln!(out, "word={}", f.word);
            for t in &f.ties {
                let _ = writeln!(out, "tie={t}");
            }
            Ok(EXIT_OK)
        }
        Command::Slopes { n, split: Some(s) } => {
            let sp = split_slopes(n, s).map_err(e)?;
            let _ = writeln!(out, "plus={} minus={}", sp.plus_side, sp.minus_side);
            Ok(EXIT_OK)
        }
        Command::Slopes { n, split: None } => {
            let m = mixed_torus_slopes(n).map_err(e)?;
            let [r0, r1, r2] = m.raw;
            let [s0, s1, s2] = m.normalized;
            let _ = writeln!(out, "raw={r0} {r1} {r2}");
            let _ = writeln!(out, "normalizer={}", m.normalizer);
            let _ = writeln!(out, "normalized={s0} {s1} {s2}");
            Ok(EXIT_OK)
        }
    }
}
