mod family;
mod input;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use czi_core::families::Variant;
use czi_core::verify::{registry, run_claims, select_claims, CorpusConfig, Verdict, VerifyReport};
use czi_core::{
    full_report, stability_report, Budget, ExtremaOptions, ExtremaStatus, IndexReport, Semantics,
    StabilityBudget,
};

use family::{family_report, FamilyOptions, FamilyReport};
use input::Source;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CLAIM_FAILURE: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
}

#[derive(Parser, Debug)]
#[command(
    name = "czi",
    version,
    about = "Classical and chromatic Zagreb indices"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "CZI_JOBS", value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantChoice {
    AsPrinted,
    Corrected,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SemanticsArg {
    All,
    Permutation,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index report for a graph: classical indices and chromatic extrema.
    Compute {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Which minimum colorings compete for the extrema.
        #[arg(long, value_enum, default_value = "all")]
        semantics: SemanticsArg,
        /// Conventional values for edgeless graphs.
        #[arg(long, value_enum, default_value = "off")]
        paper_compat: Switch,
        /// Include witness colorings.
        #[arg(long)]
        witness: bool,
        /// Largest order enumerated exactly.
        #[arg(long, default_value_t = Budget::default().max_order)]
        max_order: usize,
        /// Largest number of colorings enumerated.
        #[arg(long, default_value_t = Budget::default().max_colorings)]
        max_colorings: u64,
        /// Exit with status 4 when only bounds could be computed.
        #[arg(long)]
        strict: bool,
        /// Write to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Closed-form values for a family next to enumerated values.
    Family {
        /// complete:n, tree:n, path:n, star:n, caterpillar:..., multipartite:n1,...,
        /// complete-bipartite:a,b, equal-multipartite:n,r or thorn(base;m).
        spec: String,
        #[arg(long, value_enum, default_value = "both")]
        variant: VariantChoice,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
        /// Largest order for the enumerated column.
        #[arg(long, default_value_t = 9)]
        oracle_max_order: usize,
    },
    /// Chromatic stability verdict and stability number.
    Stability {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
        /// Largest order searched for the stability number.
        #[arg(long, default_value_t = StabilityBudget::default().max_order)]
        max_order: usize,
        /// Largest number of edge subsets examined.
        #[arg(long, default_value_t = StabilityBudget::default().max_subsets)]
        max_subsets: u64,
        /// Exit with status 4 when the search budget runs out.
        #[arg(long)]
        strict: bool,
    },
    /// Run registered claims over seeded corpora and write a report.
    Verify {
        /// Claim ids, group prefixes (lem-3.2), ranges (obs-i..obs-xii) or all.
        #[arg(long, default_value = "all")]
        claims: String,
        /// Largest graph order in any corpus.
        #[arg(long, default_value_t = CorpusConfig::default().max_order)]
        max_order: usize,
        /// Corpus seeds, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "0")]
        seed: Vec<u64>,
        /// Random trees per seed.
        #[arg(long, default_value_t = CorpusConfig::default().random_trees)]
        random_trees: usize,
        /// Random connected graphs per seed and corpus.
        #[arg(long, default_value_t = CorpusConfig::default().random_connected)]
        random_connected: usize,
        /// Report path; `-` writes to stdout.
        #[arg(long, default_value = "verify_report.json", value_name = "PATH")]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Exit with status 4 when any instance was skipped for budget.
        #[arg(long)]
        strict: bool,
    },
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) if path.as_os_str() != "-" => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        _ => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn report_json(report: &IndexReport, witness: bool) -> serde_json::Value {
    let mut value = serde_json::to_value(report).expect("report serializes");
    if !witness {
        value
            .as_object_mut()
            .expect("report is an object")
            .remove("witnesses");
    }
    value
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializes") + "\n"
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Compute {
            source,
            format,
            semantics,
            paper_compat,
            witness,
            max_order,
            max_colorings,
            strict,
            out,
        } => {
            let options = ExtremaOptions {
                semantics: match semantics {
                    SemanticsArg::All => Semantics::All,
                    SemanticsArg::Permutation => Semantics::Permutation,
                },
                budget: Budget {
                    max_order,
                    max_colorings,
                },
                paper_compat: paper_compat == Switch::On,
            };
            let reports = source
                .graphs()?
                .iter()
                .map(|g| full_report(g, &options))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Usage(format!("internal check failed: {e}")))?;
            let text = match format {
                Format::Json => {
                    let values: Vec<_> = reports.iter().map(|r| report_json(r, witness)).collect();
                    match values.as_slice() {
                        [single] => pretty(single),
                        _ => pretty(&values),
                    }
                }
                Format::Csv => csv_text(
                    &IndexReport::CSV_HEADER,
                    reports.iter().map(IndexReport::csv_row),
                ),
            };
            write_output(out.as_ref(), &text)?;
            let bounded = reports
                .iter()
                .any(|r| r.status == ExtremaStatus::BoundsOnly);
            if bounded {
                eprintln!("warning: enumeration budget exceeded; values are bounds");
            }
            Ok(if bounded && strict { EXIT_BUDGET } else { 0 })
        }
        Command::Family {
            spec,
            variant,
            format,
            oracle_max_order,
        } => {
            let variants = match variant {
                VariantChoice::AsPrinted => vec![Variant::AsPrinted],
                VariantChoice::Corrected => vec![Variant::Corrected],
                VariantChoice::Both => vec![Variant::AsPrinted, Variant::Corrected],
            };
            let report = family_report(
                &spec,
                &FamilyOptions {
                    variants,
                    oracle_max_order,
                    budget: Budget::default(),
                },
            )?;
            let text = match format {
                TableFormat::Table => report.table(),
                TableFormat::Json => pretty(&report),
                TableFormat::Csv => csv_text(&FamilyReport::csv_header(), report.csv_rows()),
            };
            write_output(None, &text)?;
            Ok(0)
        }
        Command::Stability {
            source,
            format,
            max_order,
            max_subsets,
            strict,
        } => {
            let budget = StabilityBudget {
                max_order,
                max_subsets,
            };
            let reports: Vec<_> = source
                .graphs()?
                .iter()
                .map(|g| stability_report(g, &budget))
                .collect();
            let text = match format {
                TextFormat::Text => reports
                    .iter()
                    .map(|r| r.verdict_line() + "\n")
                    .collect::<String>(),
                TextFormat::Json => match reports.as_slice() {
                    [single] => pretty(single),
                    _ => pretty(&reports),
                },
            };
            write_output(None, &text)?;
            let exhausted = reports.iter().any(|r| r.budget_exhausted);
            Ok(if exhausted && strict { EXIT_BUDGET } else { 0 })
        }
        Command::Verify {
            claims,
            max_order,
            seed,
            random_trees,
            random_connected,
            out,
            format,
            strict,
        } => {
            let selected = select_claims(&claims).map_err(|e| CliError::Usage(e.to_string()))?;
            let config = CorpusConfig {
                max_order,
                seeds: seed,
                random_trees,
                random_connected,
                ..Default::default()
            };
            let results = run_claims(&config, &selected);
            let report = VerifyReport::new(config, results);
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv(),
            };
            write_output(Some(&out), &text)?;
            let to_stdout = out.as_os_str() == "-";
            let mut lines: Vec<String> = report
                .results
                .iter()
                .filter(|r| r.verdict == Verdict::Counterexample)
                .map(|r| {
                    format!(
                        "counterexample {} {}: expected {}; actual {}",
                        r.claim_id, r.instance, r.expected, r.actual
                    )
                })
                .collect();
            lines.push(report.summary.line());
            if report.summary.must_hold_failures > 0 {
                lines.push(format!(
                    "{} must-hold failures",
                    report.summary.must_hold_failures
                ));
            }
            for line in lines {
                if to_stdout {
                    eprintln!("{line}");
                } else {
                    println!("{line}");
                }
            }
            Ok(if !report.passed() {
                EXIT_CLAIM_FAILURE
            } else if strict && report.summary.skipped_budget > 0 {
                EXIT_BUDGET
            } else {
                0
            })
        }
    }
}

fn claim_list() -> String {
    let mut text = String::from("Registered claims:\n");
    for claim in registry() {
        let tag = if claim.must_hold { " [must-hold]" } else { "" };
        text.push_str(&format!("  {:<24} {}{tag}\n", claim.id, claim.statement));
    }
    text
}

fn main() -> ExitCode {
    let claims = claim_list();
    let command = Cli::command()
        .after_help(claims.clone())
        .mut_subcommand("verify", |c| c.after_help(claims));
    let cli = match command
        .try_get_matches()
        .and_then(|m| Cli::from_arg_matches(&m))
    {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Parse(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_PARSE)
        }
    }
}
