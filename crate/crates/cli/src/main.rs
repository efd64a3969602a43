//! Command-line frontend. Every command prints deterministic output:
//! identical invocations give byte-identical bytes. Exit codes: 0 success,
//! 2 usage or parse error, 3 resource limit (horizon, expansion, or time
//! budget), 4 internal invariant breach.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cliff_operads::bijections;
use cliff_operads::cliffs::{count, enumerate, CliffWord};
use cliff_operads::dual::{
    dual_presentation, hi_c_presentation, kstar_presentation, quotient_dimensions,
    BinaryPresentation,
};
use cliff_operads::error::Error;
use cliff_operads::hillops::{q_compose, QuotientContext};
use cliff_operads::operad::{check_axioms, compose, Basis, OperadContext, OperadElement};
use cliff_operads::presentation::{generator_counts, relation_profile};
use cliff_operads::rangemap::RangeMap;

#[derive(Parser)]
#[command(
    name = "cliffops",
    version,
    about = "Lattices of bounded integer words and the operads built on them",
    after_help = "Range maps are written const:<c>, arith:<m>@<horizon>, or \
<p1>,...,<pk>;<tail>. Words are comma-separated letters, \"\" for the empty \
word. An arith map without @horizon gets one derived from the command's \
arity arguments."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format where the command supports a choice.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Omit the CSV header row.
    #[arg(long, global = true)]
    no_header: bool,

    /// Time budget in seconds for the heavy computations; overrides the
    /// CLIFF_OPERADS_BUDGET_SECS environment variable (default 600).
    #[arg(long, global = true)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List all cliffs (or hills) of one size, one word per line.
    Enumerate {
        delta: String,
        n: usize,
        #[arg(long)]
        hills: bool,
    },
    /// Count the cliffs (or hills) of one size.
    Count {
        delta: String,
        n: usize,
        #[arg(long)]
        hills: bool,
    },
    /// Partial composition of two basis words in the E, F, or H basis.
    Compose {
        delta: String,
        basis: String,
        u: String,
        slot: usize,
        v: String,
        #[arg(long)]
        hills: bool,
    },
    /// Sizes of the minimal generating set per arity, as one CSV row.
    Generators {
        delta: String,
        #[arg(long, default_value_t = 6)]
        max_arity: usize,
        #[arg(long)]
        hills: bool,
    },
    /// Relation-space dimensions per arity as CSV rows.
    Relations {
        delta: String,
        #[arg(long, default_value_t = 6)]
        max_arity: usize,
        #[arg(long)]
        hills: bool,
    },
    /// Koszul-dual quotient dimensions, or a presentation as JSON.
    Dual {
        c: u32,
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
        /// Emit a presentation instead of dimensions.
        #[arg(long, value_enum)]
        presentation: Option<PresentationKind>,
    },
    /// Map a word to a classical object (or back with --inverse). Kinds:
    /// comp, perm, tree:<m>, rect:<c>, dyck:<m>.
    Biject {
        kind: String,
        input: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Exhaustively check the operad axioms in all three bases.
    Axioms {
        delta: String,
        #[arg(long, default_value_t = 4)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        samples: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PresentationKind {
    Hi,
    Dual,
    Kstar,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("cliffops: {err}");
            match err {
                Error::HorizonExceeded { .. }
                | Error::ExpansionLimitExceeded { .. }
                | Error::TimeBudgetExceeded { .. } => ExitCode::from(3),
                Error::Parse(_)
                | Error::NotACliff { .. }
                | Error::NotAHill { .. }
                | Error::NotBinaryWord { .. }
                | Error::NotAPermutation
                | Error::MalformedTree { .. }
                | Error::SlotOutOfRange { .. }
                | Error::NotUnimodal { .. }
                | Error::BadEndpoint { .. }
                | Error::PathBelowAxis { .. } => ExitCode::from(2),
                _ => ExitCode::from(4),
            }
        }
    }
}

fn budget_of(cli: &Cli) -> Duration {
    let secs = cli.budget.unwrap_or_else(|| {
        std::env::var("CLIFF_OPERADS_BUDGET_SECS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(600)
    });
    Duration::from_secs(secs)
}

/// Parses a range map, deriving a horizon for `arith:<m>` from the word
/// lengths the command will touch.
fn parse_delta(spec: &str, needed_len: usize) -> Result<RangeMap, Error> {
    if let Some(m) = spec.strip_prefix("arith:") {
        if !m.contains('@') {
            let m = m
                .parse()
                .map_err(|_| Error::Parse(format!("range map {spec:?}: bad difference")))?;
            return Ok(RangeMap::arithmetic_truncated(m, needed_len.max(1) + 1));
        }
    }
    spec.parse()
}

fn parse_word(s: &str) -> Result<CliffWord, Error> {
    s.parse()
}

fn print_json(value: &Value) {
    println!("{value}");
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Enumerate { delta, n, hills } => {
            let d = parse_delta(delta, n.saturating_sub(1))?;
            let words = enumerate(&d, *n, *hills)?;
            match cli.format.unwrap_or(Format::Plain) {
                Format::Json => {
                    let list: Vec<Value> =
                        words.iter().map(|w| Value::String(w.to_string())).collect();
                    print_json(&Value::Array(list));
                }
                _ => {
                    for w in words {
                        println!("{w}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { delta, n, hills } => {
            let d = parse_delta(delta, n.saturating_sub(1))?;
            let total = count(&d, *n, *hills)?;
            match cli.format.unwrap_or(Format::Plain) {
                Format::Json => print_json(&json!({ "count": total.to_string() })),
                _ => println!("{total}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compose {
            delta,
            basis,
            u,
            slot,
            v,
            hills,
        } => {
            let u = parse_word(u)?;
            let v = parse_word(v)?;
            let basis: Basis = basis.parse()?;
            let d = parse_delta(delta, u.len() + v.len())?;
            let cap = u.size() + v.size();
            let element = if *hills {
                let q = QuotientContext::hills(OperadContext::new(d, cap)?)?;
                let xu = OperadElement::monomial(q.base(), basis, u)?;
                let xv = OperadElement::monomial(q.base(), basis, v)?;
                for (w, _) in xu.terms().chain(xv.terms()) {
                    if !q.contains(w) {
                        return Err(Error::NotAHill {
                            word: w.to_string(),
                        });
                    }
                }
                q_compose(&q, &xu, *slot, &xv)?
            } else {
                let ctx = OperadContext::new(d, cap)?;
                let xu = OperadElement::monomial(&ctx, basis, u)?;
                let xv = OperadElement::monomial(&ctx, basis, v)?;
                compose(&ctx, &xu, *slot, &xv)?
            };
            match cli.format.unwrap_or(Format::Json) {
                Format::Plain => println!("{element}"),
                _ => {
                    let mut value = element.to_json();
                    if *hills {
                        value.as_object_mut().expect("object").insert(
                            "quotient".into(),
                            Value::String("hills".into()),
                        );
                    }
                    print_json(&value);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generators {
            delta,
            max_arity,
            hills,
        } => {
            let d = parse_delta(delta, max_arity.saturating_sub(1))?;
            let ctx = OperadContext::new(d, *max_arity)?;
            let counts = if *hills {
                let q = QuotientContext::hills(ctx)?;
                generator_counts(&q, *max_arity)?
            } else {
                generator_counts(&ctx, *max_arity)?
            };
            match cli.format.unwrap_or(Format::Csv) {
                Format::Json => print_json(&json!(counts)),
                _ => {
                    let row: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                    println!("{}", row.join(","));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Relations {
            delta,
            max_arity,
            hills,
        } => {
            let d = parse_delta(delta, max_arity.saturating_sub(1))?;
            let ctx = OperadContext::new(d, *max_arity)?;
            let outcome = if *hills {
                let q = QuotientContext::hills(ctx)?;
                relation_profile(&q, *max_arity, budget_of(cli))?
            } else {
                relation_profile(&ctx, *max_arity, budget_of(cli))?
            };
            match cli.format.unwrap_or(Format::Csv) {
                Format::Json => {
                    let rows: Vec<Value> = outcome
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "arity": r.arity,
                                "dim_free": r.dim_free,
                                "dim_target": r.dim_target,
                                "dim_kernel": r.dim_kernel,
                                "dim_ideal": r.dim_ideal,
                                "dim_minimal": r.dim_minimal,
                            })
                        })
                        .collect();
                    print_json(&Value::Array(rows));
                }
                _ => {
                    if !cli.no_header {
                        println!("arity,dim_free,dim_target,dim_kernel,dim_ideal,dim_minimal");
                    }
                    for r in &outcome.rows {
                        println!(
                            "{},{},{},{},{},{}",
                            r.arity,
                            r.dim_free,
                            r.dim_target,
                            r.dim_kernel,
                            r.dim_ideal,
                            r.dim_minimal
                        );
                    }
                }
            }
            if outcome.hit_budget {
                return Err(Error::TimeBudgetExceeded {
                    last_completed: outcome.rows.len(),
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual {
            c,
            max_arity,
            presentation,
        } => {
            match presentation {
                Some(kind) => {
                    let p = match kind {
                        PresentationKind::Hi => hi_c_presentation(*c),
                        PresentationKind::Dual => dual_presentation(*c),
                        PresentationKind::Kstar => kstar_presentation(*c),
                    };
                    print_json(&presentation_json(&p));
                }
                None => {
                    let outcome =
                        quotient_dimensions(&dual_presentation(*c), *max_arity, budget_of(cli))?;
                    match cli.format.unwrap_or(Format::Csv) {
                        Format::Json => print_json(&json!(outcome.dims)),
                        _ => {
                            let row: Vec<String> =
                                outcome.dims.iter().map(|d| d.to_string()).collect();
                            println!("{}", row.join(","));
                        }
                    }
                    if outcome.hit_budget {
                        return Err(Error::TimeBudgetExceeded {
                            last_completed: outcome.dims.len(),
                        });
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Biject {
            kind,
            input,
            inverse,
        } => {
            let out = biject(kind, input, *inverse)?;
            match cli.format.unwrap_or(Format::Plain) {
                Format::Json => print_json(&json!({ "result": out })),
                _ => println!("{out}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Axioms {
            delta,
            cap,
            samples,
        } => {
            let d = parse_delta(delta, *cap + 1)?;
            let ctx = OperadContext::new(d, cap + 1)?;
            let mut all_violations = Vec::new();
            for basis in [Basis::E, Basis::F, Basis::H] {
                let report = check_axioms(&ctx, basis, *cap, *samples)?;
                for v in report.violations {
                    all_violations.push((basis, v));
                }
            }
            if all_violations.is_empty() {
                println!("ok");
                Ok(ExitCode::SUCCESS)
            } else {
                for (basis, v) in &all_violations {
                    println!(
                        "violation[{basis}]: {} on {:?} at slots {:?}",
                        v.law, v.operands, v.slots
                    );
                }
                // A failed axiom on an accepted range map is an internal
                // invariant breach.
                Ok(ExitCode::from(4))
            }
        }
    }
}

fn presentation_json(p: &BinaryPresentation) -> Value {
    let relations: Vec<Value> = p
        .relations
        .iter()
        .map(|r| {
            let terms: Vec<Value> = r
                .terms
                .iter()
                .map(|(t, c)| {
                    json!({
                        "outer": t.outer,
                        "slot": t.slot,
                        "inner": t.inner,
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                    })
                })
                .collect();
            Value::Array(terms)
        })
        .collect();
    json!({
        "generators": p.generators,
        "relations": relations,
    })
}

fn biject(kind: &str, input: &str, inverse: bool) -> Result<String, Error> {
    if kind == "comp" {
        return Ok(if inverse {
            let parts: Vec<usize> = input
                .split(',')
                .map(|p| {
                    p.parse()
                        .map_err(|_| Error::Parse(format!("bad part {p:?}")))
                })
                .collect::<Result<_, _>>()?;
            bijections::from_composition(&bijections::Composition::new(parts)?).to_string()
        } else {
            bijections::to_composition(&parse_word(input)?)?.to_string()
        });
    }
    if kind == "perm" {
        return Ok(if inverse {
            bijections::from_permutation(&input.parse()?).to_string()
        } else {
            bijections::to_permutation(&parse_word(input)?)?.to_string()
        });
    }
    if let Some(m) = kind.strip_prefix("tree:") {
        let m = m
            .parse()
            .map_err(|_| Error::Parse(format!("bad tree kind {kind:?}")))?;
        return Ok(if inverse {
            bijections::from_increasing_tree(m, &input.parse()?)?.to_string()
        } else {
            bijections::to_increasing_tree(m, &parse_word(input)?)?.to_string()
        });
    }
    if let Some(c) = kind.strip_prefix("rect:") {
        let c = c
            .parse()
            .map_err(|_| Error::Parse(format!("bad rectangle kind {kind:?}")))?;
        return Ok(if inverse {
            bijections::from_rect_path(c, &input.parse()?)?.to_string()
        } else {
            bijections::to_rect_path(c, &parse_word(input)?)?.to_string()
        });
    }
    if let Some(m) = kind.strip_prefix("dyck:") {
        let m = m
            .parse()
            .map_err(|_| Error::Parse(format!("bad Dyck kind {kind:?}")))?;
        return Ok(if inverse {
            bijections::from_dyck(m, &input.parse()?)?.to_string()
        } else {
            bijections::to_dyck(m, &parse_word(input)?)?.to_string()
        });
    }
    Err(Error::Parse(format!(
        "unknown bijection kind {kind:?}; use comp, perm, tree:<m>, rect:<c>, or dyck:<m>"
    )))
}
