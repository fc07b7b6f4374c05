//! `acx`: command-line front end for automatic complexity computations.

mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use autocomplexity::census::{
    eventual_upper_bound, limit_r, limit_s, CacheDir, Census, CensusOptions, ExponentReading,
    DEFAULT_LIMIT,
};
use autocomplexity::nfa::export_dot;
use autocomplexity::words::{necklace_count, periodic_count};
use autocomplexity::{complexity, Word};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use output::{CmdResult, OutputRecord};

#[derive(Parser)]
#[command(
    name = "acx",
    version,
    about = "Nondeterministic automatic complexity of binary words"
)]
struct Cli {
    /// Print a single JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// A_N of one word, with an optional witness.
    Complexity {
        /// A word over {0,1}; pass "" for the empty word.
        word: String,
        /// Print the witness automaton in Graphviz DOT.
        #[arg(long)]
        dot: bool,
        /// Print the accepting run as a state sequence.
        #[arg(long)]
        run: bool,
    },
    /// s_q(n) and r_q(n) for every q at one length.
    Census {
        n: usize,
        /// Worker threads (default: logical processors).
        #[arg(long, short)]
        jobs: Option<usize>,
        #[arg(long, env = "ACX_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Largest n accepted without --force.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        /// Run even when n exceeds --limit.
        #[arg(long)]
        force: bool,
    },
    /// Eventual values of s_q(n) against the closed-form bound.
    Limits {
        max_q: usize,
        /// Count only words starting with 0.
        #[arg(long)]
        per_leading_bit: bool,
        /// Also print the provisional right-inextendible limit under this
        /// reading of its head exponent (head, tail, zero).
        #[arg(long)]
        inextendible: Option<ExponentReading>,
    },
    /// Run the built-in consistency checks.
    Verify {
        /// Sequence file to cross-check periodic counts against.
        #[arg(long)]
        oeis_file: Option<PathBuf>,
        /// Longest length for the exhaustive small-word checks.
        #[arg(long, default_value_t = 8)]
        small_n_limit: usize,
    },
    /// Periodic-word and necklace counts for lengths 1..=N.
    Periodic { n: u32 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let record = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&record).expect("records serialize")
        );
    } else {
        print!("{}", record.text);
    }
    if record.status == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(command: &Command) -> CmdResult {
    match command {
        Command::Complexity { word, dot, run } => cmd_complexity(word, *dot, *run),
        Command::Census {
            n,
            jobs,
            cache_dir,
            format,
            limit,
            force,
        } => {
            let options = CensusOptions {
                limit: *limit,
                allow_over_limit: *force,
                cache: cache_dir.as_ref().map(CacheDir::new),
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()?;
            pool.install(|| cmd_census(*n, options, *format))
        }
        Command::Limits {
            max_q,
            per_leading_bit,
            inextendible,
        } => cmd_limits(*max_q, *per_leading_bit, *inextendible),
        Command::Verify {
            oeis_file,
            small_n_limit,
        } => verify::run(oeis_file.as_deref(), *small_n_limit),
        Command::Periodic { n } => cmd_periodic(*n),
    }
}

fn cmd_complexity(literal: &str, dot: bool, run: bool) -> CmdResult {
    let word: Word = literal.parse()?;
    let r = complexity(&word, None)?;
    let mut rec = OutputRecord::new("complexity").input("word", literal);
    rec.result("q", r.complexity);
    rec.line(format!("A_N({word}) = {}", r.complexity));
    if run {
        rec.result("run", r.run.to_string());
        rec.line(format!("run: {}", r.run));
    }
    if dot {
        let dot = export_dot(&r.witness, Some(r.run.states()));
        rec.line(dot.trim_end());
        rec.result("dot", dot);
    }
    Ok(rec)
}

fn cmd_census(n: usize, options: CensusOptions, format: Format) -> CmdResult {
    let mut rec = OutputRecord::new("census").input("n", n);
    let table = Census::new(options).table(n)?;
    rec.result("max_complexity", table.max_complexity());
    rec.result("max_count", table.max_count());
    rec.result(
        "rows",
        table
            .rows
            .iter()
            .map(|(q, row)| json!({"q": q, "s": row.s, "r": row.r}))
            .collect::<Vec<_>>(),
    );
    let text = match format {
        Format::Table => table.to_pretty(),
        Format::Csv => table.to_csv(),
        Format::JsonLines => table.to_json_lines(),
    };
    rec.text.push_str(&text);
    Ok(rec)
}

fn cmd_limits(
    max_q: usize,
    per_leading_bit: bool,
    inextendible: Option<ExponentReading>,
) -> CmdResult {
    if max_q == 0 {
        return Err("max_q must be at least 1".into());
    }
    let mut rec = OutputRecord::new("limits")
        .input("max_q", max_q)
        .input("per_leading_bit", per_leading_bit);
    let divisor = BigUint::from(if per_leading_bit { 2u32 } else { 1 });
    let mut header = format!("{:>3} {:>22} {:>22} {:>9}", "q", "limit", "bound", "ratio");
    if let Some(reading) = inextendible {
        header.push_str(&format!(" {:>22}", "r limit (provisional)"));
        rec.inputs
            .insert("inextendible".into(), json!(format!("{reading:?}")));
    }
    rec.line(header);
    let mut rows = Vec::new();
    for q in 1..=max_q {
        let limit = limit_s(q);
        let shown = &limit / &divisor;
        let bound = eventual_upper_bound(q).ok();
        let ratio = bound.as_ref().map(|b| ratio(&limit, b));
        let mut row = json!({"q": q, "limit": shown.to_string()});
        let mut line = format!(
            "{q:>3} {:>22} {:>22} {:>9}",
            shown.to_string(),
            bound
                .as_ref()
                .map_or("-".into(), |b| (b / &divisor).to_string()),
            ratio.map_or("-".into(), |r| format!("{r:.6}"))
        );
        if let Some(b) = &bound {
            row["bound"] = json!((b / &divisor).to_string());
            row["ratio"] = json!(ratio);
        }
        if let Some(reading) = inextendible {
            let r = limit_r(q, reading) / &divisor;
            line.push_str(&format!(" {:>22}", r.to_string()));
            row["inextendible_limit"] = json!(r.to_string());
        }
        rec.line(line);
        rows.push(row);
    }
    rec.result("rows", rows);
    Ok(rec)
}

/// `a / b` as a float; both are far below `f64` range for any q in use.
fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    let scale = BigUint::from(1_000_000_000u64);
    let scaled: BigUint = a * &scale / b;
    scaled.to_string().parse::<f64>().unwrap_or(f64::NAN) / 1e9
}

fn cmd_periodic(n: u32) -> CmdResult {
    let mut rec = OutputRecord::new("periodic").input("n", n);
    rec.line(format!("{:>4} {:>24} {:>24}", "n", "periodic", "necklaces"));
    let mut rows = Vec::new();
    for k in 1..=n {
        let z = periodic_count(k);
        let neck = necklace_count(k)?;
        rec.line(format!(
            "{k:>4} {:>24} {:>24}",
            z.to_string(),
            neck.to_string()
        ));
        rows.push(json!({"n": k, "periodic": z.to_string(), "necklaces": neck.to_string()}));
    }
    rec.result("rows", rows);
    Ok(rec)
}
