use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use numsemi::pfseq::{pf_violation, AnchoredSeq, DiffSeq};
use numsemi::{
    buchweitz_test, census_range, census_range_with_threads, corollary_bound, decompose_pf,
    paste, paste_unchecked, verify_sequence, verify_window, CensusRow, Semigroup,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "numsemi", version, about = "Numerical semigroups, Buchweitz tests and PF-semigroups")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SemigroupArg {
    /// Generators, e.g. 5,7,11,13
    #[arg(long)]
    gens: Option<String>,
    /// Gaps, e.g. 1,2,3,4,6,8,9
    #[arg(long)]
    gaps: Option<String>,
}

impl SemigroupArg {
    fn load(&self) -> numsemi::Result<Semigroup> {
        match (&self.gens, &self.gaps) {
            (Some(g), _) => Semigroup::parse(&format!("gens:{g}")),
            (_, Some(g)) => Semigroup::parse(&format!("gaps:{g}")),
            _ => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, pseudo-Frobenius numbers and Schubert index
    Info(SemigroupArg),
    /// n-fold gap sumset and the Buchweitz inequality
    Buchweitz {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Test the PF-semigroup definition
    PfCheck(SemigroupArg),
    /// Difference sequences
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Decompose a PF-semigroup into irreducible stair blocks
    Decompose(SemigroupArg),
    /// Count semigroups, 2-Buchweitz semigroups and 2-Buchweitz PF-semigroups per genus
    Census {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Write CSV to PATH (`-` for stdout)
        #[arg(long, value_name = "PATH")]
        csv: Option<String>,
        #[arg(long, env = "NUMSEMI_THREADS")]
        threads: Option<usize>,
    },
}

#[derive(Subcommand)]
enum SeqCommand {
    /// Genus bound and direct verification of a sequence
    Check {
        /// Sequence, e.g. 1,3,3,2
        seq: DiffSeq,
        #[arg(long, conflicts_with = "window")]
        genus: Option<u32>,
        /// Inclusive genus window A..B
        #[arg(long, value_parser = parse_window)]
        window: Option<RangeInclusive<u32>>,
    },
    /// Paste HEAD@G ++ [k] ++ TAIL@G
    Paste {
        head: AnchoredSeq,
        tail: AnchoredSeq,
        #[arg(long)]
        k: u32,
        /// Skip the paste preconditions; the result carries no guarantee
        #[arg(long)]
        unchecked: bool,
    },
}

fn parse_window(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a: u32 = a.parse().map_err(|_| format!("bad start {a:?}"))?;
    let b: u32 = b.parse().map_err(|_| format!("bad end {b:?}"))?;
    if a > b {
        return Err(format!("empty window {a}..{b}"));
    }
    Ok(a..=b)
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}

/// Domain failures carry the library error through to `main`.
enum Failure {
    Domain(numsemi::Error),
    Usage(String),
    Other(anyhow::Error),
}

impl From<numsemi::Error> for Failure {
    fn from(e: numsemi::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.into())
    }
}

fn info(s: &Semigroup, format: Format) {
    let inv = s.invariants();
    let gaps = s.gaps().into_vec();
    let gens = s.minimal_generators();
    let pf = s.pseudo_frobenius().unwrap_or_default();
    let alpha = s.schubert_index();
    if format == Format::Json {
        print_json(&json!({
            "gaps": gaps,
            "generators": gens,
            "invariants": inv,
            "pseudo_frobenius": pf,
            "schubert_index": alpha,
        }));
        return;
    }
    println!("gaps: {}", join(&gaps));
    println!("generators: {}", join(&gens));
    println!("multiplicity: {}", inv.multiplicity);
    println!("genus: {}", inv.genus);
    println!("frobenius: {}", inv.frobenius);
    println!("conductor: {}", inv.conductor);
    println!("type: {}", inv.type_);
    println!("pseudo-frobenius: {}", join(&pf));
    println!("schubert index: {}", join(&alpha));
}

/// Header `genus,ns,b2s,b2pfs` comes from the row field names.
fn write_csv(rows: &[CensusRow], out: impl Write) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    if format == Format::Csv && !matches!(cli.command, Command::Census { .. }) {
        return Err(Failure::Usage("csv output is only available for census".into()));
    }
    match cli.command {
        Command::Info(arg) => info(&arg.load()?, format),
        Command::Buchweitz { semigroup, n } => {
            let s = semigroup.load()?;
            let report = buchweitz_test(&s, n)?;
            if format == Format::Json {
                print_json(&json!(report));
            } else {
                println!("n: {}", report.n);
                println!("cardinality: {}", report.cardinality);
                println!("threshold: {}", report.threshold);
                println!("buchweitz: {}", report.is_buchweitz);
            }
        }
        Command::PfCheck(arg) => {
            let s = arg.load()?;
            let violation = pf_violation(&s);
            if format == Format::Json {
                print_json(&json!({
                    "pf_semigroup": violation.is_none(),
                    "reason": violation.map(|v| v.to_string()),
                }));
            } else {
                println!("{}", violation.is_none());
                if let Some(v) = violation {
                    println!("reason: {v}");
                }
            }
        }
        Command::Seq(SeqCommand::Check { seq, genus, window }) => {
            let mut verdict = corollary_bound(&seq)?;
            verdict.verified_genera = match (genus, window, verdict.corollary_bound) {
                (Some(g), _, _) => vec![(g, verify_sequence(&seq, g)?)],
                (None, Some(w), _) => verify_window(&seq, w)?,
                (None, None, Some(b)) => verify_window(&seq, b..=b + 20)?,
                (None, None, None) => Vec::new(),
            };
            if format == Format::Json {
                print_json(&json!({
                    "a": seq.to_a().as_slice(),
                    "verdict": verdict,
                }));
            } else {
                println!("sequence: {}", join(seq.as_slice()));
                println!("a: {}", join(seq.to_a().as_slice()));
                println!("t: {}", verdict.t);
                println!(
                    "pair sums: {} (needs > {})",
                    verdict.condition2_cardinality, verdict.condition2_threshold
                );
                match verdict.corollary_bound {
                    Some(b) => println!("corollary_bound: {b}"),
                    None => println!("corollary_bound: none"),
                }
                for (g, ok) in &verdict.verified_genera {
                    println!("genus {g}: {ok}");
                }
            }
        }
        Command::Seq(SeqCommand::Paste { head, tail, k, unchecked }) => {
            let pasted = if unchecked {
                paste_unchecked(&tail, &head, k)?
            } else {
                paste(&tail, &head, k)?
            };
            if format == Format::Json {
                print_json(&json!({
                    "seq": pasted.seq,
                    "genus": pasted.genus,
                    "checked": !unchecked,
                }));
            } else {
                println!("{pasted}");
            }
        }
        Command::Decompose(arg) => {
            let blocks = decompose_pf(&arg.load()?)?;
            if format == Format::Json {
                let list: Vec<_> = blocks
                    .iter()
                    .map(|b| {
                        json!({
                            "genus": b.genus,
                            "parity": b.parity,
                            "large_gap": b.large_gap(),
                            "gaps": b.semigroup.gaps().into_vec(),
                        })
                    })
                    .collect();
                print_json(&json!(list));
            } else {
                for b in blocks {
                    println!("{}", b.semigroup);
                }
            }
        }
        Command::Census { from, to, csv, threads } => {
            let rows = match threads {
                Some(n) => census_range_with_threads(from, to, n)?,
                None => census_range(from, to)?,
            };
            match (csv.as_deref(), format) {
                (Some("-"), _) | (None, Format::Csv) => write_csv(&rows, io::stdout().lock())?,
                (Some(path), _) => {
                    let file = std::fs::File::create(path)
                        .with_context(|| format!("creating {path}"))?;
                    write_csv(&rows, file)?;
                }
                (None, Format::Json) => print_json(&json!(rows)),
                (None, _) => {
                    println!("{:>5} {:>10} {:>8} {:>8}", "genus", "ns", "2-bs", "2-bpfs");
                    for r in rows {
                        println!("{:>5} {:>10} {:>8} {:>8}", r.genus, r.ns, r.b2s, r.b2pfs);
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
