//! Command-line front end: compute Bell polynomials and composition weights,
//! run the identity-verification sweeps, and benchmark the strategies.
//!
//! Exit codes: 0 on success (and when every verify check passes), 1 when a
//! verify check fails, 2 on usage or precondition errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use bellcomp::bell::{self, BellStrategy};
use bellcomp::compositions::{
    enumerate_compositions, weight_by_convolution, weight_by_depril, weight_by_enumeration,
    weight_by_part_removal, weight_by_partitions, weight_by_weighted_conv, WeightFunction,
};
use bellcomp::report::{bench_csv, bench_json, run_bench, run_verify, Suite};
use bellcomp::{Assignment, MultiPoly};

#[derive(Parser)]
#[command(
    name = "bellcomp",
    version,
    about = "Partial Bell polynomials and weighted integer compositions, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the partial Bell polynomial B(n, k)
    Bell {
        n: u32,
        k: u32,
        /// One of: direct, compositions, id1, id2, id3, id4, id5, id6
        #[arg(long, default_value = "direct")]
        strategy: String,
        /// Evaluate at x1,x2,...: comma-separated rationals such as 1,1/2,3
        #[arg(long)]
        eval: Option<String>,
        /// Left summand of the split used by id2 (defaults to k/2)
        #[arg(long)]
        split: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Total weight of the k-part integer compositions of n
    Comps {
        n: u32,
        k: u32,
        /// Weight of one part size, written s=p/q; repeat per part size
        #[arg(short = 'w', long = "weight")]
        weights: Vec<String>,
        /// One of: enumerate, partitions, convolution, depril,
        /// weighted-conv, part-removal
        #[arg(long, default_value = "convolution")]
        strategy: String,
        /// Part size split off by the part-removal strategy
        #[arg(long, default_value_t = 0)]
        part: u32,
        /// Stream the compositions themselves instead of weighing them
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity-verification suites over all 0 <= k <= n <= n-max
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Cap on k (defaults to n-max)
        #[arg(long)]
        k_max: Option<u32>,
        /// Comma-separated subset of: theorem1, lemma2, lemma3, id1, id2,
        /// id3, id4, id5, id6, stirling, stochastic; or `all`
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suites: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time the Bell strategies over the whole (n, k) grid
    Bench {
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        /// Comma-separated subset of: direct, compositions, enumeration,
        /// id1, id2, id3, id4, id5, id6
        #[arg(long, value_delimiter = ',', default_value = "direct,compositions,enumeration")]
        strategies: Vec<String>,
        /// Runs per cell; the minimum wall time is reported
        #[arg(long, default_value_t = 3)]
        repetitions: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome { output, failed_checks }) => {
            print!("{output}");
            if failed_checks {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

struct Outcome {
    output: String,
    failed_checks: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, failed_checks: false }
    }
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Bell { n, k, strategy, eval, split, format } => {
            let value = compute_bell(n, k, &strategy, split)?;
            match eval {
                None => Ok(Outcome::ok(render_poly(&value, format))),
                Some(values) => {
                    let assignment = parse_assignment(&values)?;
                    let result = value.eval(&assignment).map_err(|e| e.to_string())?;
                    Ok(Outcome::ok(render_value(&result, format)))
                }
            }
        }
        Command::Comps { n, k, weights, strategy, part, list, format } => {
            let f = parse_weights(&weights)?;
            if list {
                let compositions: Vec<Vec<u32>> =
                    enumerate_compositions(n, k, f.max_part()).collect();
                return Ok(Outcome::ok(render_compositions(&compositions, format)));
            }
            let value = compute_weight(&f, &strategy, part, k, n)?;
            Ok(Outcome::ok(render_value(&value, format)))
        }
        Command::Verify { n_max, k_max, suites, format } => {
            let suites = parse_suites(&suites)?;
            let report = run_verify(n_max, k_max.unwrap_or(n_max), &suites);
            let output = match format {
                Format::Text => report.to_text(),
                Format::Json => format!("{}\n", report.to_json()),
                Format::Csv => report.to_csv(),
            };
            Ok(Outcome { output, failed_checks: !report.passed() })
        }
        Command::Bench { n_max, strategies, repetitions, format } => {
            let strategies: Vec<BellStrategy> = strategies
                .iter()
                .map(|s| s.parse())
                .collect::<Result<_, _>>()?;
            let rows = run_bench(n_max, &strategies, repetitions);
            let output = match format {
                Format::Text | Format::Csv => bench_csv(&rows),
                Format::Json => format!("{}\n", bench_json(&rows)),
            };
            Ok(Outcome::ok(output))
        }
    }
}

fn compute_bell(n: u32, k: u32, strategy: &str, split: Option<u32>) -> Result<MultiPoly, String> {
    match strategy {
        "direct" => Ok(bell::direct(n, k)),
        "compositions" => Ok(bell::from_compositions(n, k)),
        "id1" => {
            // The recurrence divides by (n - k) and by x1; it only states
            // anything for n > k >= 1.
            if k < 1 || n <= k {
                return Err(format!("strategy id1 needs n > k >= 1, got n={n}, k={k}"));
            }
            bell::identity1(n, k).map_err(|e| e.to_string())
        }
        "id2" => {
            let k1 = split.unwrap_or(k / 2);
            if k1 > k {
                return Err(format!("--split {k1} exceeds k={k}"));
            }
            Ok(bell::identity2(n, k1, k - k1))
        }
        "id3" => {
            if k < 1 {
                return Err(format!("strategy id3 needs k >= 1, got k={k}"));
            }
            Ok(bell::identity3(n, k - 1))
        }
        "id4" => bell::identity4(n, k).map_err(|e| e.to_string()),
        "id5" => bell::identity5(n, k).map_err(|e| e.to_string()),
        "id6" => Ok(bell::identity6(n, k)),
        other => Err(format!(
            "unknown bell strategy `{other}` (expected direct, compositions, id1, id2, id3, id4, id5 or id6)"
        )),
    }
}

fn compute_weight(
    f: &WeightFunction<BigRational>,
    strategy: &str,
    part: u32,
    k: u32,
    n: u32,
) -> Result<BigRational, String> {
    match strategy {
        "enumerate" => Ok(weight_by_enumeration(f, k, n)),
        "partitions" => Ok(weight_by_partitions(f, k, n)),
        "convolution" => Ok(weight_by_convolution(f, k, n)),
        "depril" => weight_by_depril(f, k, n).map_err(|e| e.to_string()),
        "weighted-conv" => weight_by_weighted_conv(f, k, n).map_err(|e| e.to_string()),
        "part-removal" => Ok(weight_by_part_removal(f, part, k, n)),
        other => Err(format!(
            "unknown composition strategy `{other}` (expected enumerate, partitions, convolution, depril, weighted-conv or part-removal)"
        )),
    }
}

fn parse_weights(entries: &[String]) -> Result<WeightFunction<BigRational>, String> {
    let mut pairs = Vec::new();
    for entry in entries {
        let (part, value) = entry
            .split_once('=')
            .ok_or_else(|| format!("weight `{entry}` is not of the form s=p/q"))?;
        let part: u32 = part
            .trim()
            .parse()
            .map_err(|_| format!("part size `{part}` is not a nonnegative integer"))?;
        let value: BigRational = value
            .trim()
            .parse()
            .map_err(|_| format!("weight value `{value}` is not a rational p/q"))?;
        pairs.push((part, value));
    }
    Ok(WeightFunction::from_pairs(pairs))
}

fn parse_assignment(values: &str) -> Result<Assignment, String> {
    let mut assignment = Assignment::new();
    for (idx, field) in values.split(',').enumerate() {
        let value: BigRational = field
            .trim()
            .parse()
            .map_err(|_| format!("eval value `{field}` is not a rational p/q"))?;
        assignment.insert(idx as u32 + 1, value);
    }
    Ok(assignment)
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, String> {
    let mut suites = Vec::new();
    for name in names {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(name.parse()?);
        }
    }
    Ok(suites)
}

fn render_poly(p: &MultiPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", p.to_json()),
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(["coeff", "monomial"]).expect("in-memory write");
            for (m, c) in p.terms() {
                wtr.write_record([c.to_string(), m.to_string()]).expect("in-memory write");
            }
            String::from_utf8(wtr.into_inner().expect("flush")).expect("utf8")
        }
    }
}

fn render_value(v: &BigRational, format: Format) -> String {
    match format {
        Format::Text => format!("{v}\n"),
        Format::Json => format!("{}\n", serde_json::json!({ "value": v.to_string() })),
        Format::Csv => format!("value\n{v}\n"),
    }
}

fn render_compositions(compositions: &[Vec<u32>], format: Format) -> String {
    let line = |c: &Vec<u32>| {
        let parts: Vec<String> = c.iter().map(u32::to_string).collect();
        format!("({})", parts.join(","))
    };
    match format {
        Format::Text => {
            let mut out = String::new();
            for c in compositions {
                out.push_str(&line(c));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = compositions
                .iter()
                .map(|c| serde_json::Value::from(c.clone()))
                .collect();
            format!("{}\n", serde_json::json!({ "compositions": rows }))
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(["composition"]).expect("in-memory write");
            for c in compositions {
                wtr.write_record([line(c)]).expect("in-memory write");
            }
            String::from_utf8(wtr.into_inner().expect("flush")).expect("utf8")
        }
    }
}
