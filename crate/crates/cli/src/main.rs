use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use braidcent::Limits;
use braidcent_cli::{render, run, Options, Status, Verb};
use clap::{Parser, Subcommand};

/// Normal forms, conjugacy, Nielsen-Thurston type and centralizers of braids.
///
/// Braids are written `B4: 1 -2 3` (generator indices, negative for inverses).
/// Without braid arguments, inputs are read from stdin, one request per line;
/// two-braid verbs take `a ; b` per line.
#[derive(Parser)]
#[command(name = "braidcent", version)]
struct Cli {
    #[command(subcommand)]
    verb: Cmd,
    /// Print JSON reports (one per line in batch mode).
    #[arg(long, global = true)]
    json: bool,
    /// Maximum size of a super summit set.
    #[arg(long, global = true, default_value_t = Limits::default().sss_cap)]
    sss_cap: usize,
    /// Budget for the bounded searches.
    #[arg(long, global = true, default_value_t = Limits::default().budget)]
    budget: usize,
    /// Maximum number of candidates in a root search.
    #[arg(long, global = true, default_value_t = Limits::default().root_cap)]
    root_cap: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Left normal form for the classical Garside structure.
    Nf { braid: Option<String> },
    /// Left normal form for the band generator structure.
    BklNf { braid: Option<String> },
    /// Whether two braids are equal.
    Equal { a: Option<String>, b: Option<String> },
    /// Conjugacy test with a conjugating braid.
    Conj { a: Option<String>, b: Option<String> },
    /// Super summit set with conjugators.
    Sss {
        braid: Option<String>,
        /// Use the band generator structure.
        #[arg(long)]
        dual: bool,
    },
    /// Periodic, reducible or pseudo-Anosov, with a certificate.
    Classify { braid: Option<String> },
    /// Tubular braid and interior braids of a reducible braid.
    Reduce { braid: Option<String> },
    /// Regular form of a reducible braid.
    RegularForm { braid: Option<String> },
    /// Generating set of the centralizer.
    Centralizer { braid: Option<String> },
    /// Upper bound on the number of generators for n strands.
    Bound { n: Option<String> },
}

fn split(verb: Cmd) -> (Verb, Vec<Option<String>>, bool) {
    match verb {
        Cmd::Nf { braid } => (Verb::Nf, vec![braid], false),
        Cmd::BklNf { braid } => (Verb::BklNf, vec![braid], false),
        Cmd::Equal { a, b } => (Verb::Equal, vec![a, b], false),
        Cmd::Conj { a, b } => (Verb::Conj, vec![a, b], false),
        Cmd::Sss { braid, dual } => (Verb::Sss, vec![braid], dual),
        Cmd::Classify { braid } => (Verb::Classify, vec![braid], false),
        Cmd::Reduce { braid } => (Verb::Reduce, vec![braid], false),
        Cmd::RegularForm { braid } => (Verb::RegularForm, vec![braid], false),
        Cmd::Centralizer { braid } => (Verb::Centralizer, vec![braid], false),
        Cmd::Bound { n } => (Verb::Bound, vec![n], false),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits { sss_cap: cli.sss_cap, budget: cli.budget, root_cap: cli.root_cap, ..Limits::default() };
    let (verb, args, dual) = split(cli.verb);
    let opts = Options { limits, dual };

    let requests: Vec<Vec<String>> = if args.iter().any(Option::is_some) {
        vec![args.into_iter().flatten().collect()]
    } else {
        io::stdin()
            .lock()
            .lines()
            .map_while(std::result::Result::ok)
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(';').map(|s| s.trim().to_string()).collect())
            .collect()
    };

    let mut status = Status::Ok;
    let mut out = io::stdout().lock();
    for inputs in requests {
        let r = run(verb, &inputs, &opts);
        status = status.worst(r.status);
        let text = if cli.json { r.json.to_string() } else { render(&r.json) };
        if writeln!(out, "{text}").is_err() {
            break;
        }
    }
    ExitCode::from(status.code() as u8)
}
