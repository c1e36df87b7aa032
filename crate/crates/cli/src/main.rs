//! `lefschetz`: classify arcs, enumerate Hurwitz orbits, decompose quiver
//! representations.
//!
//! Exit codes: 0 success, 2 invalid input, 3 orbit cap exceeded.

use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lefschetz_core::arcs::{match_segment, parse_base, ArcSpec};
use lefschetz_core::braid::{BraidWord, Handedness};
use lefschetz_core::classify::{classify, random_arc};
use lefschetz_core::hurwitz::{orbit, standard_tuple, total_monodromy};
use lefschetz_core::quiver::{decompose, iterated_twist, QuiverRep};
use lefschetz_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "lefschetz", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Hand {
    #[default]
    Right,
    Left,
}

impl From<Hand> for Handedness {
    fn from(h: Hand) -> Self {
        match h {
            Hand::Right => Handedness::Right,
            Hand::Left => Handedness::Left,
        }
    }
}

#[derive(clap::Args, Debug)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long)]
    json: bool,
}

impl Output {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the total space for a last vanishing arc.
    Classify {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Base chord `k,l`.
        #[arg(long)]
        base: String,
        /// Conjugating braid word, e.g. "1 -2 1".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        conj: String,
        #[arg(long, value_enum, default_value_t = Hand::Right)]
        handedness: Hand,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate the Hurwitz orbit of the standard tuple.
    Orbit {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Read a quiver representation as JSON on stdin and print its barcode.
    Decompose,
    /// Print the normal form of a braid word.
    Nf {
        /// Strand count; defaults to one more than the largest generator.
        #[arg(long)]
        strands: Option<usize>,
        #[arg(allow_hyphen_values = true, default_value = "")]
        word: String,
    },
    /// Print the reduced iterated-twist complex for the chord `(k,l)` as
    /// quiver representations, one JSON line per degree.
    Twist {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Generate random arc specifications.
    Sample {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) => match flushed {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(EXIT_CAP),
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Error> {
    match command {
        Command::Classify {
            m,
            n,
            base,
            conj,
            handedness,
            output,
        } => {
            let spec = ArcSpec {
                base: parse_base(&base)?,
                conjugator: BraidWord::parse(m.max(1) + 1, &conj)?.letters().to_vec(),
            };
            let arc = spec.build_with(m, handedness.into())?;
            let report = classify(m, n, &arc)?;
            match output.format() {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&report).expect("serialisable")),
                Format::Text => writeln!(out, "{}", report.to_text()),
            }
            .map_err(io_err)
        }
        Command::Orbit { m, cap, output } => {
            let start = standard_tuple(m)?;
            let tuples = orbit(&start, cap)?;
            let monodromy = total_monodromy(&start).to_string();
            for (i, t) in tuples.iter().enumerate() {
                match output.format() {
                    Format::Json => {
                        let arcs: Vec<_> = t
                            .arcs()
                            .iter()
                            .map(|a| {
                                json!({
                                    "chord": match_segment(a),
                                    "half_twist": a.key().to_string(),
                                })
                            })
                            .collect();
                        writeln!(out, "{}", json!({ "index": i, "arcs": arcs }))
                    }
                    Format::Text => writeln!(out, "{t}"),
                }
                .map_err(io_err)?;
            }
            match output.format() {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({ "summary": { "count": tuples.len(), "monodromy": monodromy } })
                ),
                Format::Text => writeln!(out, "orbit: {} tuples; monodromy {monodromy}", tuples.len()),
            }
            .map_err(io_err)
        }
        Command::Decompose => {
            let mut input = String::new();
            io::stdin().read_to_string(&mut input).map_err(io_err)?;
            let rep = QuiverRep::from_json(&input)?;
            writeln!(out, "{}", decompose(&rep).to_json()).map_err(io_err)
        }
        Command::Nf { strands, word } => {
            let strands = match strands {
                Some(s) => s,
                None => {
                    let probe = BraidWord::parse(usize::MAX, &word).map_err(|_| {
                        Error::Parse(format!("bad braid word {word:?}"))
                    })?;
                    probe.letters().iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(2)
                }
            };
            let w = BraidWord::parse(strands, &word)?;
            writeln!(out, "{}", w.normal_form()).map_err(io_err)
        }
        Command::Twist { m, k, l } => {
            let c = iterated_twist(m, k, l)?;
            for (_, rep) in c.reduce().split_by_degree()? {
                writeln!(out, "{}", rep.to_json()).map_err(io_err)?;
            }
            Ok(())
        }
        Command::Sample {
            m,
            seed,
            count,
            max_len,
            output,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let arc = random_arc(m, max_len, &mut rng)?;
                match output.format() {
                    Format::Json => {
                        writeln!(out, "{}", serde_json::to_string(&ArcSpec::from(&arc)).expect("serialisable"))
                    }
                    Format::Text => writeln!(out, "{arc}"),
                }
                .map_err(io_err)?;
            }
            Ok(())
        }
    }
}
