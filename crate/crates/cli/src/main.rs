use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use porc_cli::{
    sweep, sweep_header, verify_prime, write_records, ClassRow, DensitySummary, Format, OutputError, BRUTE_MAX_CAP,
    CLASS_HEADER, DENSITY_HEADER,
};
use porc_core::diophantine::{density_scan, subcongruence_scan};
use porc_core::finite_field::primes_in_range;
use porc_core::lie::{build_covering, dump};
use porc_core::PrimeField;

const USAGE: u8 = 1;
const INVARIANT: u8 = 2;

#[derive(Parser)]
#[command(name = "porc", version, about = "Descendant counts and the arithmetic behind them, prime by prime")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One report row per prime in a range.
    Sweep {
        #[arg(long, default_value_t = 5)]
        min: u64,
        #[arg(long)]
        max: u64,
        /// Largest p for the direct orbit count; 0 disables it.
        #[arg(long, default_value_t = 61)]
        brute_max: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Omit the elapsed_ms column.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run every check at a single prime.
    Verify { p: u64 },
    /// Frequencies of solvability over primes 1 mod 12.
    Density {
        #[arg(long, default_value_t = 1_000_000)]
        max: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Witness primes in each class c mod 12d with c = 1 mod 12.
    Subcong {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimensions of the covering algebra.
    Covering {
        #[arg(default_value_t = 5)]
        p: u64,
        /// Also print the structure constants.
        #[arg(long)]
        dump: bool,
    },
}

enum Failure {
    Usage(String),
    Invariant(String),
    Output(OutputError),
}

impl From<OutputError> for Failure {
    fn from(e: OutputError) -> Self {
        Failure::Output(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Output(OutputError::Io(e))
    }
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        b = b.num_threads(j);
    }
    b.build().map_err(|e| Failure::Usage(e.to_string()))
}

fn field(p: u64) -> Result<PrimeField, Failure> {
    PrimeField::new(p).map_err(|_| Failure::Usage(format!("{p} is not a prime >= 5")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Sweep { min, max, brute_max, jobs, format, out, no_timing } => {
            if min < 5 || max < min {
                return Err(Failure::Usage(format!("need 5 <= min <= max, got {min}..{max}")));
            }
            if brute_max > BRUTE_MAX_CAP {
                return Err(Failure::Usage(format!("--brute-max is capped at {BRUTE_MAX_CAP}")));
            }
            if format == Format::Text {
                return Err(Failure::Usage("sweep writes csv or json".into()));
            }
            let primes = primes_in_range(min, max);
            let results = thread_pool(jobs)?.install(|| sweep(&primes, brute_max, !no_timing));
            let mut rows = Vec::with_capacity(results.len());
            let mut problems = Vec::new();
            for (p, r) in results {
                match r {
                    Ok(row) => {
                        let v = row.violations();
                        if !v.is_empty() {
                            problems.push(format!("p={p}: {}", v.join(", ")));
                        }
                        rows.push(row);
                    }
                    Err(e) => problems.push(format!("p={p}: {e}")),
                }
            }
            let mut w = open_out(&out)?;
            write_records(&rows, &sweep_header(!no_timing), format, &mut w)?;
            w.flush()?;
            if !problems.is_empty() {
                return Err(Failure::Invariant(problems.join("\n")));
            }
        }
        Command::Verify { p } => {
            let f = field(p)?;
            let checks = verify_prime(&f);
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "p={p} (p mod 12 = {})", p % 12)?;
            for c in &checks {
                writeln!(stdout, "{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.label, c.detail)?;
            }
            if let Some(c) = checks.iter().find(|c| !c.pass) {
                return Err(Failure::Invariant(format!("first failing check: {}", c.label)));
            }
        }
        Command::Density { max, jobs, format, out } => {
            if max < 100 {
                return Err(Failure::Usage("--max must be at least 100".into()));
            }
            let scan = thread_pool(jobs)?.install(|| density_scan(max));
            let s = DensitySummary::from(&scan);
            let mut w = open_out(&out)?;
            if format == Format::Text {
                writeln!(
                    w,
                    "max={} primes_1mod12={} quartic={} ({}, {:.4}) v_p_positive={} ({}, {:.4})",
                    s.max, s.n_1mod12, s.n_quartic, s.frac_quartic, s.frac_quartic_approx, s.n_both, s.frac_both,
                    s.frac_both_approx
                )?;
            } else {
                match format {
                    Format::Json => {
                        serde_json::to_writer_pretty(&mut w, &s).map_err(OutputError::Json)?;
                        writeln!(w)?;
                    }
                    _ => write_records(&[s], &DENSITY_HEADER, format, &mut w)?,
                }
            }
            w.flush()?;
        }
        Command::Subcong { d, max, format, out } => {
            if d == 0 {
                return Err(Failure::Usage("--d must be positive".into()));
            }
            let rows: Vec<ClassRow> = subcongruence_scan(d, max).iter().map(|c| ClassRow::new(d, c)).collect();
            let mut w = open_out(&out)?;
            if format == Format::Text {
                let show = |x: Option<u64>| x.map_or("none".to_string(), |p| p.to_string());
                for r in &rows {
                    writeln!(
                        w,
                        "c={} mod {}: v_p>0 at {}, v_p=0 at {}",
                        r.c,
                        r.modulus,
                        show(r.witness_vp_positive),
                        show(r.witness_vp_zero)
                    )?;
                }
            } else {
                write_records(&rows, &CLASS_HEADER, format, &mut w)?;
            }
            w.flush()?;
        }
        Command::Covering { p, dump: with_dump } => {
            let f = field(p)?;
            let c = build_covering(&f).map_err(|e| Failure::Invariant(e.to_string()))?;
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "dim={} nucleus={}", c.m.dim(), c.nucleus.dim())?;
            if with_dump {
                write!(stdout, "{}", dump(&c.m))?;
            }
            if c.m.dim() != 23 || c.nucleus.dim() != 2 {
                return Err(Failure::Invariant("unexpected covering algebra dimensions".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violation:\n{msg}");
            ExitCode::from(INVARIANT)
        }
        Err(Failure::Output(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}
