//! `gsi` - command-line front end for gsi-core.
//!
//! Exit codes: 0 on success, 1 when the answer is negative (no witness),
//! 2 on malformed input or a violated mathematical precondition.

mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gsi_core::{
    all_even_witnesses, classify, constant_floor_exclusive, enumerate_gsi_up_to_with_jobs,
    exclusive_to_class, find_gsi_with_even_frobenius, glue_spec, gsi_frobenius, gsi_gaps,
    gsi_genus, parse_generators, scan_witnesses, GluingSpec, NumericalSemigroup,
};

#[derive(Parser, Debug)]
#[command(
    name = "gsi",
    version,
    about = "Generalized strongly increasing numerical semigroups"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Write output to PATH instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for enumeration and scans.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..), global = true)]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants and family membership of ⟨GENS⟩.
    Analyze {
        /// Generators, comma or space separated.
        gens: String,
    },
    /// Gap partition of the GSI semigroup BASE ⊕_{d,γ} ℕ.
    Gaps(GluingArgs),
    /// The gluing BASE ⊕_{d,γ} ℕ.
    Glue(GluingArgs),
    /// All GSI semigroups with Frobenius number at most F.
    Enumerate { f: i64 },
    /// A GSI semigroup with even Frobenius number F, or "none".
    Even {
        f: u64,
        /// List every witness instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Even numbers up to BOUND realizable as GSI Frobenius numbers.
    Scan {
        bound: u64,
        /// Report only values reachable from seeds with this Frobenius number ...
        #[arg(long, requires = "excluding")]
        exclusive_to: Option<u64>,
        /// ... and from none of these seed Frobenius numbers.
        #[arg(long, requires = "exclusive_to")]
        excluding: Option<String>,
        /// Use per-class constant γ floors in the exclusive comparison.
        #[arg(long, requires = "exclusive_to")]
        constant_floor: bool,
    },
}

#[derive(clap::Args, Debug)]
struct GluingArgs {
    /// Generators of the base semigroup S.
    #[arg(long)]
    base: String,
    #[arg(long)]
    d: u64,
    #[arg(long)]
    gamma: u64,
}

impl GluingArgs {
    fn spec(&self) -> gsi_core::Result<GluingSpec> {
        let base = NumericalSemigroup::from_generators(&parse_generators(&self.base)?)?;
        GluingSpec::new(base, self.d, self.gamma)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let jobs = cli.jobs as usize;
    let code = match &cli.command {
        Command::Analyze { gens } => {
            let s = NumericalSemigroup::from_generators(&parse_generators(gens)?)?;
            render::analysis(&mut out, cli.format, &s, &classify(&s))?;
            ExitCode::SUCCESS
        }
        Command::Gaps(args) => {
            let spec = args.spec()?;
            let partition = gsi_gaps(&spec)?;
            let glued = glue_spec(&spec)?;
            render::partition(
                &mut out,
                cli.format,
                &spec,
                &glued,
                &partition,
                gsi_frobenius(&spec)?,
                gsi_genus(&spec)?,
            )?;
            ExitCode::SUCCESS
        }
        Command::Glue(args) => {
            let spec = args.spec()?;
            let glued = glue_spec(&spec)?;
            render::gluing(&mut out, cli.format, &spec, &glued)?;
            ExitCode::SUCCESS
        }
        Command::Enumerate { f } => {
            let catalog = enumerate_gsi_up_to_with_jobs(*f, jobs)?;
            render::catalog(&mut out, cli.format, &catalog)?;
            ExitCode::SUCCESS
        }
        Command::Even { f, all } => {
            let witnesses = if *all {
                all_even_witnesses(*f)?
                    .into_iter()
                    .map(|w| w.spec)
                    .collect()
            } else {
                find_gsi_with_even_frobenius(*f)?
                    .into_iter()
                    .collect::<Vec<_>>()
            };
            render::even(&mut out, cli.format, *f, &witnesses)?;
            if witnesses.is_empty() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Scan {
            bound,
            exclusive_to,
            excluding,
            constant_floor,
        } => {
            if let (Some(target), Some(excluding)) = (exclusive_to, excluding) {
                let excluded = parse_generators(excluding)?;
                eprintln!("comparing seed class {target} against {excluded:?} up to {bound}");
                let values = if *constant_floor {
                    constant_floor_exclusive(*target, &excluded, *bound)
                } else {
                    exclusive_to_class(*target, &excluded, *bound)?
                };
                render::value_list(&mut out, cli.format, &values)?;
            } else {
                eprintln!("scanning even f <= {bound} with {jobs} job(s)");
                let results = scan_witnesses(*bound, jobs)?;
                eprintln!(
                    "{} realizable",
                    results.iter().filter(|(_, w)| w.is_some()).count()
                );
                render::scan(&mut out, cli.format, &results)?;
            }
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}
