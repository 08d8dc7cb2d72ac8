//! Command-line interface to the abra library.
//!
//! Exit codes are a stable contract:
//!   0  success / verification positive
//!   1  verification negative
//!   2  input error
//!   3  budget refusal
//!   4  internal engine disagreement

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use abra::{
    bell_number, border_array_incremental, border_array_naive, border_array_packed,
    brute_force_valid, count_valid, enumerate_valid, equivalence_class_count,
    equivalence_class_count_exhaustive, general_border_array, ternary_upper_bound,
    verify_with_threshold, BinaryWord, BorderArray, Engine, Error, GeneralWord, VerifyOutcome,
    AUTO_PACKED_THRESHOLD, DEFAULT_BUDGET,
};

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "abra",
    version,
    about = "Abelian border arrays of binary words: compute, verify, enumerate, count, bench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the abelian border array of a word
    #[command(name = "border-array")]
    BorderArray {
        /// The word: a '0'/'1' string, or whitespace-separated integer
        /// tokens when --alphabet differs from 2
        word: Option<String>,
        /// Alphabet size k; words over k != 2 use integer tokens
        #[arg(long, default_value_t = 2)]
        alphabet: u32,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Word length at which --engine auto switches to the packed engine
        #[arg(long, default_value_t = AUTO_PACKED_THRESHOLD)]
        packed_threshold: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Read words from a file, one per line
        #[arg(long, conflicts_with = "word")]
        input: Option<PathBuf>,
    },
    /// Decide whether an integer array is a valid abelian border array
    Verify {
        /// Comma- or whitespace-separated integers, or a JSON array
        array: Option<String>,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Word length at which --engine auto switches to the packed engine
        #[arg(long, default_value_t = AUTO_PACKED_THRESHOLD)]
        packed_threshold: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Read candidate arrays from a file, one per line
        #[arg(long, conflicts_with = "array")]
        input: Option<PathBuf>,
    },
    /// Stream every valid abelian border array of length n with its
    /// generating word
    Enumerate {
        n: usize,
        /// Stop after this many arrays
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count valid abelian border arrays (exact for k = 2; brute-force
    /// count plus upper bound for larger alphabets)
    Count {
        n: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: u32,
        /// Require the brute-force count; refuse if over budget
        #[arg(long)]
        brute: bool,
        /// Maximum word-positions for exhaustive operations
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count letter-equivalence classes of words of length n over k letters
    Classes {
        n: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: u32,
        /// Count by exhaustive canonicalization instead of the recurrence
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time all three engines on seeded random words
    Bench {
        n: usize,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum EngineArg {
    Naive,
    Incremental,
    Packed,
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Naive => Engine::Naive,
            EngineArg::Incremental => Engine::Incremental,
            EngineArg::Packed => Engine::Packed,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::BorderArray {
            word,
            alphabet,
            engine,
            packed_threshold,
            format,
            input,
        } => cmd_border_array(word, alphabet, engine.into(), packed_threshold, format, input),
        Command::Verify {
            array,
            engine,
            packed_threshold,
            format,
            input,
        } => cmd_verify(array, engine.into(), packed_threshold, format, input),
        Command::Enumerate { n, limit, format } => cmd_enumerate(n, limit, format),
        Command::Count {
            n,
            alphabet,
            brute,
            budget,
            format,
        } => cmd_count(n, alphabet, brute, budget, format),
        Command::Classes {
            n,
            alphabet,
            brute,
            budget,
            format,
        } => cmd_classes(n, alphabet, brute, budget, format),
        Command::Bench {
            n,
            trials,
            seed,
            format,
        } => cmd_bench(n, trials, seed, format),
    };
    ExitCode::from(code)
}

fn fail(err: &Error) -> u8 {
    eprintln!("error: {err}");
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn gather_items(
    arg: Option<String>,
    input: Option<PathBuf>,
    what: &str,
) -> Result<Vec<String>, u8> {
    if let Some(arg) = arg {
        return Ok(vec![arg]);
    }
    let Some(path) = input else {
        eprintln!("error: no {what} given; pass one as an argument or use --input");
        return Err(EXIT_INPUT);
    };
    match fs::read_to_string(&path) {
        Ok(text) => Ok(text.lines().map(|l| l.to_string()).collect()),
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            Err(EXIT_INPUT)
        }
    }
}

fn print_array(ba: &BorderArray, format: Format) {
    match format {
        Format::Text => println!("{ba}"),
        Format::Json => println!("{}", serde_json::json!(ba.entries())),
    }
}

fn cmd_border_array(
    word: Option<String>,
    alphabet: u32,
    engine: Engine,
    packed_threshold: usize,
    format: Format,
    input: Option<PathBuf>,
) -> u8 {
    let items = match gather_items(word, input, "word") {
        Ok(items) => items,
        Err(code) => return code,
    };
    for item in items {
        let result = if alphabet == 2 {
            BinaryWord::parse(item.trim())
                .and_then(|w| engine.compute_with_threshold(&w, packed_threshold))
        } else {
            GeneralWord::parse(&item, alphabet).and_then(|w| general_border_array(&w))
        };
        match result {
            Ok(ba) => print_array(&ba, format),
            Err(e) => return fail(&e),
        }
    }
    EXIT_OK
}

fn parse_candidate(text: &str) -> Result<BorderArray, Error> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let entries: Vec<u64> = serde_json::from_str(trimmed).map_err(|_| Error::InvalidToken {
            token: trimmed.to_string(),
            pos: 1,
        })?;
        BorderArray::from_entries(entries.into_iter().map(|v| v as usize).collect())
    } else {
        BorderArray::parse(trimmed)
    }
}

fn cmd_verify(
    array: Option<String>,
    engine: Engine,
    packed_threshold: usize,
    format: Format,
    input: Option<PathBuf>,
) -> u8 {
    let items = match gather_items(array, input, "array") {
        Ok(items) => items,
        Err(code) => return code,
    };
    let mut any_invalid = false;
    for item in items {
        let pi = match parse_candidate(&item) {
            Ok(pi) => pi,
            Err(e) => return fail(&e),
        };
        match verify_with_threshold(&pi, engine, packed_threshold) {
            VerifyOutcome::Valid { word } => match format {
                Format::Text => println!("yes {word}"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"valid": true, "word": word.to_string()})
                ),
            },
            VerifyOutcome::Invalid { mismatch_index } => {
                any_invalid = true;
                match format {
                    Format::Text => println!("no {mismatch_index}"),
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({"valid": false, "mismatch_index": mismatch_index})
                    ),
                }
            }
        }
    }
    if any_invalid {
        EXIT_INVALID
    } else {
        EXIT_OK
    }
}

fn cmd_enumerate(n: usize, limit: Option<u64>, format: Format) -> u8 {
    let nodes = match enumerate_valid(n) {
        Ok(nodes) => nodes,
        Err(e) => return fail(&e),
    };
    let limit = limit.unwrap_or(u64::MAX);
    let mut printed = 0u64;
    for node in nodes {
        if printed == limit {
            break;
        }
        match format {
            Format::Text => println!("{}\t{}", node.array, node.word),
            Format::Json => println!(
                "{}",
                serde_json::json!({"array": node.array.entries(), "word": node.word.to_string()})
            ),
        }
        printed += 1;
    }
    eprintln!("count {printed}");
    EXIT_OK
}

fn cmd_count(n: usize, alphabet: u32, brute: bool, budget: u64, format: Format) -> u8 {
    if n == 0 {
        return fail(&Error::ZeroLength);
    }
    let mut exact: Option<String> = None;
    let mut bound: Option<(String, &str)> = None;

    if alphabet == 2 {
        let formula = count_valid(n).expect("n >= 1").to_string();
        if brute {
            match brute_force_valid(n, 2, budget) {
                Ok(set) => {
                    if set.len().to_string() != formula {
                        eprintln!(
                            "error: brute-force count {} disagrees with closed form {formula}",
                            set.len()
                        );
                        return EXIT_DISAGREEMENT;
                    }
                }
                Err(e) => return fail(&e),
            }
        }
        exact = Some(formula);
    } else {
        bound = Some(if alphabet == 3 {
            (ternary_upper_bound(n).to_string(), "ternary")
        } else {
            (bell_number(n).to_string(), "bell")
        });
        match brute_force_valid(n, alphabet, budget) {
            Ok(set) => exact = Some(set.len().to_string()),
            Err(e @ Error::BudgetExceeded { .. }) if brute => return fail(&e),
            Err(Error::BudgetExceeded { .. }) => {
                eprintln!("note: brute-force count skipped (over budget); bound only")
            }
            Err(e) => return fail(&e),
        }
    }

    match format {
        Format::Text => {
            if let Some(v) = &exact {
                println!("exact {v}");
            }
            if let Some((v, kind)) = &bound {
                println!("bound ({kind}) {v}");
            }
        }
        Format::Json => {
            let mut obj = serde_json::json!({"n": n, "alphabet": alphabet});
            if let Some(v) = &exact {
                obj["exact"] = serde_json::json!(v);
            }
            if let Some((v, kind)) = &bound {
                obj["bound"] = serde_json::json!(v);
                obj["bound_kind"] = serde_json::json!(kind);
            }
            println!("{obj}");
        }
    }
    EXIT_OK
}

fn cmd_classes(n: usize, alphabet: u32, brute: bool, budget: u64, format: Format) -> u8 {
    if n == 0 {
        return fail(&Error::ZeroLength);
    }
    if alphabet == 0 {
        return fail(&Error::EmptyAlphabet);
    }
    let recurrence = equivalence_class_count(n, alphabet);
    let (value, method) = if brute {
        match equivalence_class_count_exhaustive(n, alphabet, budget) {
            Ok(count) => {
                if count != recurrence {
                    eprintln!(
                        "error: exhaustive class count {count} disagrees with recurrence {recurrence}"
                    );
                    return EXIT_DISAGREEMENT;
                }
                (count, "exhaustive")
            }
            Err(e) => return fail(&e),
        }
    } else {
        (recurrence, "recurrence")
    };
    match format {
        Format::Text => println!("{value}"),
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "n": n,
                "alphabet": alphabet,
                "classes": value.to_string(),
                "method": method,
            })
        ),
    }
    EXIT_OK
}

fn random_word(rng: &mut ChaCha12Rng, n: usize) -> BinaryWord {
    let limbs: Vec<u64> = (0..n.div_ceil(64)).map(|_| rng.next_u64()).collect();
    BinaryWord::from_limbs(limbs, n)
}

fn cmd_bench(n: usize, trials: u32, seed: u64, format: Format) -> u8 {
    if n == 0 || trials == 0 {
        eprintln!("error: bench needs n >= 1 and trials >= 1");
        return EXIT_INPUT;
    }
    // build the packed engine's lookup table outside the timed region
    border_array_packed(&BinaryWord::parse("01").unwrap()).unwrap();

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut totals = [0f64; 3];
    for trial in 0..trials {
        let w = random_word(&mut rng, n);
        let mut results = Vec::with_capacity(3);
        for (slot, run) in [
            border_array_naive as fn(&BinaryWord) -> Result<BorderArray, Error>,
            border_array_incremental,
            border_array_packed,
        ]
        .iter()
        .enumerate()
        {
            let start = Instant::now();
            let ba = run(&w).expect("nonempty word");
            totals[slot] += start.elapsed().as_secs_f64();
            results.push(ba);
        }
        if results[1] != results[0] || results[2] != results[0] {
            eprintln!("error: engines disagree on trial {trial} (n={n}, seed={seed})");
            return EXIT_DISAGREEMENT;
        }
    }
    let means: Vec<f64> = totals.iter().map(|t| t / trials as f64).collect();
    let ratio = |a: f64, b: f64| if b > 0.0 { a / b } else { f64::INFINITY };
    match format {
        Format::Text => {
            println!("n {n}  trials {trials}  seed {seed}");
            println!("engine mean_seconds");
            for (name, mean) in ["naive", "incremental", "packed"].iter().zip(&means) {
                println!("{name} {mean:.6}");
            }
            println!("speedup naive/incremental {:.2}", ratio(means[0], means[1]));
            println!("speedup naive/packed {:.2}", ratio(means[0], means[2]));
            println!(
                "speedup incremental/packed {:.2}",
                ratio(means[1], means[2])
            );
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "n": n,
                "trials": trials,
                "seed": seed,
                "mean_seconds": {
                    "naive": means[0],
                    "incremental": means[1],
                    "packed": means[2],
                },
                "speedup": {
                    "naive_over_incremental": ratio(means[0], means[1]),
                    "naive_over_packed": ratio(means[0], means[2]),
                    "incremental_over_packed": ratio(means[1], means[2]),
                },
            })
        ),
    }
    EXIT_OK
}
