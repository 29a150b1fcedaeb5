mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use harmonic_bounds::bounds::{bounds_for, phi, residual, table_row, Family};
use harmonic_bounds::exact::{parse_rational, rat, Rational};
use harmonic_bounds::psi::{euler_gamma_auto, euler_gamma_enclosure};
use harmonic_bounds::verify::{self, SweepOptions, Status};
use harmonic_bounds::Error;

use output::{Format, Rendered};

const EXIT_USAGE: u8 = 64;
const EXIT_SOFTWARE: u8 = 70;

#[derive(Parser, Debug)]
#[command(name = "hbounds", version, about = "Certified bounds for H_n - ln n - gamma")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Working precision in bits (at least 16).
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(16..))]
    bits: u32,
    /// Target enclosure width, parsed exactly (e.g. 1e-20, 0.001, 1/3).
    #[arg(long, global = true, default_value = "1e-20", value_parser = parse_width)]
    width: Rational,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Worker threads for verification sweeps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enclose Euler's constant by Euler–Maclaurin summation.
    Gamma {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=119))]
        q: u32,
    },
    /// Lower and upper bounds of one or all families at n.
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// franel, toth_mare or sharp; all three when omitted.
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
    },
    /// phi(x) = 1/(psi(x+1) - ln x) - 2x for rational x > 0.
    Phi {
        #[arg(long, value_parser = parse_positive)]
        x: Rational,
    },
    /// H_n - ln n - gamma.
    Residual {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// One row per n with the residual, all three families and phi.
    Table {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
    },
    /// Run a verification suite; exit 0 on pass, 1 on failure, 2 if inconclusive.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
        /// Largest index for the series suite.
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(7..))]
        n_max: u64,
        /// Sample count for the sampled suites.
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Suite {
    Theorem,
    PhiMonotone,
    PhiDerivative,
    Series,
    Integrands,
    Brackets,
    Ordering,
}

fn parse_width(s: &str) -> Result<Rational, String> {
    let r = parse_rational(s).map_err(|e| e.to_string())?;
    if r <= rat(0, 1) {
        return Err("width must be positive".into());
    }
    Ok(r)
}

fn parse_positive(s: &str) -> Result<Rational, String> {
    let r = parse_rational(s).map_err(|e| e.to_string())?;
    if r <= rat(0, 1) {
        return Err("value must be positive".into());
    }
    Ok(r)
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Outcome {
    rendered: Rendered,
    status: Status,
}

impl From<Rendered> for Outcome {
    fn from(rendered: Rendered) -> Self {
        Outcome {
            rendered,
            status: Status::Pass,
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let g = &cli.global;
    let mut opts = SweepOptions::with_bits(g.bits);
    if let Some(j) = g.jobs {
        opts.jobs = j as usize;
    }
    let out = match &cli.command {
        Command::Gamma { n, q } => output::gamma(*n, *q, &euler_gamma_enclosure(*n, *q, g.bits)?).into(),
        Command::Bounds { n, family } => {
            let gamma = euler_gamma_auto(&(&g.width / rat(2, 1)), g.bits)?.value;
            let families = match family {
                Some(f) => vec![*f],
                None => vec![Family::Franel, Family::TothMare, Family::Sharp],
            };
            let pairs = families
                .into_iter()
                .map(|f| bounds_for(f, *n, &gamma))
                .collect::<Result<Vec<_>, _>>()?;
            output::bounds(*n, &pairs).into()
        }
        Command::Phi { x } => output::phi(x, &phi(x, &g.width, g.bits)?).into(),
        Command::Residual { n } => output::residual(*n, &residual(*n, &g.width, g.bits)?).into(),
        Command::Table { from, to } => {
            if from > to {
                return Err(Error::InvalidArgument(format!("need --from <= --to, got {from} > {to}")));
            }
            let gamma = euler_gamma_auto(&(&g.width / rat(2, 1)), g.bits)?.value;
            let rows = (*from..=*to)
                .map(|n| table_row(n, &gamma, g.bits))
                .collect::<Result<Vec<_>, _>>()?;
            output::table(&rows).into()
        }
        Command::Verify {
            suite,
            from,
            to,
            n_max,
            samples,
        } => {
            let report = match suite {
                Suite::Theorem => verify::verify_theorem(*from, *to, &g.width, &opts)?,
                Suite::PhiMonotone => verify::verify_phi_monotone(*from, *to, &g.width, &opts)?,
                Suite::PhiDerivative => {
                    // x = 5/2 + i/4
                    let xs: Vec<Rational> = (0..*samples).map(|i| rat(10 + i as i64, 4)).collect();
                    verify::verify_phi_derivative_sign(&xs, &g.width, &opts)?
                }
                Suite::Series => verify::verify_series_coefficients(*n_max)?,
                Suite::Integrands => {
                    let ts: Vec<f64> = (1..=*samples).map(|i| 50.0 * i as f64 / *samples as f64).collect();
                    verify::verify_integrand_signs(&ts)?
                }
                Suite::Brackets => {
                    let xs: Vec<Rational> = (1..=*samples).map(|i| rat(100 * i as i64, *samples as i64)).collect();
                    verify::verify_lemma_brackets(&xs, &Default::default(), &opts)?
                }
                Suite::Ordering => verify::verify_family_ordering(*from, *to, &opts)?,
            };
            Outcome {
                status: report.status(),
                rendered: output::report(&report),
            }
        }
    };
    Ok(out)
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::InvalidArgument(_) | Error::NonPositiveLog(_) | Error::BadGamma(_) => EXIT_USAGE,
        Error::AtIndex { source, .. } => exit_for(source),
        _ => EXIT_SOFTWARE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_for(&e));
        }
    };
    let format = match cli.global.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Text => Format::Text,
    };
    let text = outcome.rendered.render(format);
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_SOFTWARE);
    }
    ExitCode::from(outcome.status.exit_code() as u8)
}
