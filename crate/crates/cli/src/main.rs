mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use lrplanar::oracle::GenSpec;

/// Left-Right planarity testing, embedding and certification.
///
/// Graphs are edge-list files: an `n m` header, then `m` lines `u v` with
/// 1-based vertices. Lines starting with `#` are comments. Use `-` to read
/// standard input. Exit status is 0 whenever a verdict was printed and 2 on
/// usage, input or consistency errors.
#[derive(Parser)]
#[command(name = "lrplanar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print `planar` or `nonplanar`.
    Test {
        file: String,
        #[arg(long)]
        json: bool,
        /// Print the constraint system of every finished vertex first.
        #[arg(long)]
        trace: bool,
    },
    /// Print a planar rotation system (`v: n1/e1 n2/e2 ...`, counterclockwise)
    /// and the face count, or `nonplanar`.
    Embed {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a rotation system against a graph with Euler's formula.
    Certify {
        graph: String,
        rotation: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Replace every edge by a path with this many internal vertices.
        #[arg(long, global = true, default_value_t = 0)]
        subdivide: usize,
    },
    /// Time test plus embedding on random triangulations; prints TSV.
    Bench {
        #[arg(required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 1)]
        repeat: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Complete {
        n: usize,
    },
    Bipartite {
        a: usize,
        b: usize,
    },
    Triangulation {
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Random {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn gen_spec(kind: &GenKind, subdivide: usize) -> (GenSpec, String) {
    let (spec, mut label) = match *kind {
        GenKind::Complete { n } => (GenSpec::Complete(n), format!("complete n={n}")),
        GenKind::Bipartite { a, b } => (GenSpec::CompleteBipartite(a, b), format!("bipartite a={a} b={b}")),
        GenKind::Triangulation { n, seed } => (
            GenSpec::Triangulation { n, seed },
            format!("triangulation n={n} seed={seed}"),
        ),
        GenKind::Random { n, m, seed } => (
            GenSpec::RandomConnected { n, m, seed },
            format!("random n={n} m={m} seed={seed}"),
        ),
    };
    if subdivide == 0 {
        return (spec, label);
    }
    label.push_str(&format!(" subdivide={subdivide}"));
    let spec = GenSpec::Subdivide {
        base: Box::new(spec),
        k: subdivide,
    };
    (spec, label)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Test { file, json, trace } => commands::test(&file, json, trace),
        Command::Embed { file, json } => commands::embed(&file, json),
        Command::Certify { graph, rotation, json } => commands::certify_files(&graph, &rotation, json),
        Command::Gen { kind, subdivide } => {
            let (spec, label) = gen_spec(&kind, subdivide);
            commands::gen(&spec, &label)
        }
        Command::Bench { sizes, seed, repeat } => commands::bench(&sizes, seed, repeat),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
