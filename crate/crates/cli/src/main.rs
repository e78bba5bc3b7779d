use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use annular_cli::{
    parallel_by_mixed, parallel_distribution, verify, DistributionReport, MapsReport,
    OutputFormat, SumReport, VerifyReport,
};
use annular_core::oracle::brute_rooted_maps;
use annular_core::series::{
    gs_series, hz_series, jackson_series, main_series_monomial, rooted_map_distribution,
    summed_series,
};
use annular_core::{
    BinomialPoly, CycleDistribution, GroundSet, MixedFilter, MonomialPoly, SeriesSpec,
};

/// Exact cycle-count distributions for pairings times one- and two-cycle
/// permutations, and the matching rooted-map genus distributions.
#[derive(Parser)]
#[command(name = "annular", version, arg_required_else_help = true)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> OutputFormat {
        match f {
            Format::Table => OutputFormat::Table,
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Distribution of cycle counts over pairings of [p] ∪ [q]′ with exactly
    /// s mixed pairs.
    Dist {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value_t = DistMethod::Formula)]
        method: DistMethod,
        /// Largest p+q the brute-force method accepts.
        #[arg(long, default_value_t = 18)]
        max_brute: usize,
    },
    /// Distribution of cycle counts over all pairings of [p] (one vertex).
    Hz {
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = HzMethod::Formula)]
        method: HzMethod,
        /// Largest p the brute-force method accepts.
        #[arg(long, default_value_t = 18)]
        max_brute: usize,
    },
    /// Distribution summed over the number of mixed pairs (s ≥ 1).
    Sum {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = SumMethod::Gs)]
        method: SumMethod,
        /// Largest p+q the brute-force method accepts.
        #[arg(long, default_value_t = 18)]
        max_brute: usize,
    },
    /// Rooted maps with two vertices of degrees p and q joined by s edges,
    /// counted by genus.
    Maps {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        s: usize,
        /// Largest p+q for the independent rotation-system cross-check.
        #[arg(long, default_value_t = 12)]
        max_crosscheck: usize,
    },
    /// Cross-check the closed forms, bijections, and counting formulas.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Size budget; sweeps scale with it, capped per check.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DistMethod {
    Formula,
    Reduction,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum HzMethod {
    Formula,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum SumMethod {
    Jackson,
    Gs,
    SumS,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Formulas,
    Bijections,
    Forests,
    All,
}

/// Writes one line to stdout, ignoring a closed pipe so `annular ... | head`
/// does not panic.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn main() {
    let cli = Cli::parse();
    let format = cli.format.into();
    match run(cli.command, format) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn run(command: Command, format: OutputFormat) -> Result<i32, String> {
    match command {
        Command::Dist {
            p,
            q,
            s,
            method,
            max_brute,
        } => {
            let spec = SeriesSpec::new(p, q, s).map_err(|e| e.to_string())?;
            let (dist, name) = match method {
                DistMethod::Formula => (
                    main_series_monomial(&spec)
                        .to_distribution()
                        .map_err(|e| e.to_string())?,
                    "formula",
                ),
                DistMethod::Reduction => {
                    let n = spec.edges();
                    let poly = BinomialPoly::from_coeffs(
                        (1..=n + 1).map(|k| {
                            (k, BigInt::from(annular_core::series::c_via_reduction(&spec, k)))
                        }),
                    );
                    (
                        poly.to_monomial()
                            .map_err(|e| e.to_string())?
                            .to_distribution()
                            .map_err(|e| e.to_string())?,
                        "reduction",
                    )
                }
                DistMethod::Brute => {
                    if p + q > max_brute {
                        return Err(format!(
                            "p+q = {} exceeds --max-brute {max_brute}",
                            p + q
                        ));
                    }
                    (
                        parallel_distribution(spec.ground(), MixedFilter::Exactly(s))
                            .map_err(|e| e.to_string())?,
                        "brute",
                    )
                }
            };
            let report = DistributionReport::from_distribution(
                p,
                Some(q),
                Some(s),
                2,
                spec.edges(),
                name,
                &dist,
            );
            emit(&report.render(format));
            Ok(0)
        }
        Command::Hz {
            p,
            method,
            max_brute,
        } => {
            let (dist, name) = match method {
                HzMethod::Formula => (
                    hz_series(p)
                        .map_err(|e| e.to_string())?
                        .to_monomial()
                        .map_err(|e| e.to_string())?
                        .to_distribution()
                        .map_err(|e| e.to_string())?,
                    "formula",
                ),
                HzMethod::Brute => {
                    if p > max_brute {
                        return Err(format!("p = {p} exceeds --max-brute {max_brute}"));
                    }
                    // Validate parity through the series first.
                    hz_series(p).map_err(|e| e.to_string())?;
                    (
                        parallel_distribution(GroundSet::new(p, 0), MixedFilter::Any)
                            .map_err(|e| e.to_string())?,
                        "brute",
                    )
                }
            };
            let report =
                DistributionReport::from_distribution(p, None, None, 1, p / 2, name, &dist);
            emit(&report.render(format));
            Ok(0)
        }
        Command::Sum {
            p,
            q,
            method,
            max_brute,
        } => {
            let (poly, name) = match method {
                SumMethod::Jackson => {
                    if p != q {
                        return Err(format!("jackson needs p = q, got p={p} q={q}"));
                    }
                    (jackson_series(p).map_err(|e| e.to_string())?, "jackson")
                }
                SumMethod::Gs => (gs_series(p, q).map_err(|e| e.to_string())?, "gs"),
                SumMethod::SumS => (summed_series(p, q).map_err(|e| e.to_string())?, "sum-s"),
                SumMethod::Brute => {
                    if p + q > max_brute {
                        return Err(format!(
                            "p+q = {} exceeds --max-brute {max_brute}",
                            p + q
                        ));
                    }
                    let buckets =
                        parallel_by_mixed(GroundSet::new(p, q)).map_err(|e| e.to_string())?;
                    let mut merged = CycleDistribution::new();
                    for (s, dist) in &buckets {
                        if *s >= 1 {
                            merged.merge(dist);
                        }
                    }
                    (MonomialPoly::from_distribution(&merged), "brute")
                }
            };
            let report = SumReport::from_poly(p, q, name, &poly);
            emit(&report.render(format));
            Ok(0)
        }
        Command::Maps {
            p,
            q,
            s,
            max_crosscheck,
        } => {
            let spec = SeriesSpec::new(p, q, s).map_err(|e| e.to_string())?;
            let maps = rooted_map_distribution(&spec);
            let crosschecked = p + q <= max_crosscheck;
            if crosschecked && brute_rooted_maps(&spec) != maps {
                eprintln!("rotation-system cross-check failed for p={p} q={q} s={s}");
                return Ok(1);
            }
            let report = MapsReport::new(p, q, s, &maps, crosschecked);
            emit(&report.render(format));
            Ok(0)
        }
        Command::Verify { suite, max_n } => {
            let name = match suite {
                Suite::Formulas => "formulas",
                Suite::Bijections => "bijections",
                Suite::Forests => "forests",
                Suite::All => "all",
            };
            let report = VerifyReport::new(name, max_n, verify::suite(name, max_n));
            emit(&report.render(format));
            Ok(if report.pass { 0 } else { 1 })
        }
    }
}
