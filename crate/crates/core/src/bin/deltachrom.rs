//! Command-line front end. Exit codes: 0 pass, 1 check failure, 2 usage
//! error, 3 timeout (result is a bracketing interval).

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use delta_chromatic::bounds::formula_chi_delta;
use delta_chromatic::chromatic::{chi_delta, SolverOptions};
use delta_chromatic::constructions::{check, Construction, CONSTRUCTION_IDS};
use delta_chromatic::families::{generate, FamilySpec};
use delta_chromatic::io::{edges_to_json, to_dot, to_json};
use delta_chromatic::report::{overall, to_csv, to_pretty, Verdict};
use delta_chromatic::structure::{delta_of_product, equality_holds};
use delta_chromatic::verify::{self, chi_text, Span, VerifyOptions, CHECK_IDS};
use delta_chromatic::{Error, Graph};

const FAMILY_HELP: &str = "\
Graph specs: P<n> path, C<n> cycle, K<n> complete, N<n> edgeless, S1,<n> star \
with n pendants, W<n> wheel with rim n, M<m>,<n> windmill of m copies of K<n>, \
J(A,B) join, X(A,B,...) Cartesian product, @file.json a graph in \
{\"n\":..,\"edges\":[[a,b],..]} form.";

#[derive(Parser)]
#[command(name = "deltachrom", version, about = "δ-complements, Cartesian products and δ-chromatic numbers", after_help = FAMILY_HELP)]
struct Cli {
    /// Solver time limit in seconds.
    #[arg(
        long,
        global = true,
        env = "DELTACHROM_TIMEOUT",
        default_value_t = 60.0
    )]
    timeout: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ResultFmt {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColoringFmt {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFmt {
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form and solver value of χ_δ for a graph spec.
    ChiDelta {
        spec: String,
        #[arg(long, value_enum, default_value = "pretty")]
        fmt: ResultFmt,
        /// Print witness colors starting at 1.
        #[arg(long)]
        one_based: bool,
    },
    /// Compare the δ-complement of a product with the product of δ-complements.
    Structure {
        /// Factor specs, or a single X(...) spec.
        #[arg(required = true)]
        specs: Vec<String>,
        /// Print the extra edge set S as a JSON edge list.
        #[arg(long)]
        emit_s: bool,
    },
    /// Run an explicit coloring construction.
    ///
    /// Ids and parameters: star-star <m> <n>; star-path <m> <n>;
    /// path-path <n> <k>; join-p3 <H>; degree-diff-product <G> <H>.
    Construct {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CONSTRUCTION_IDS))]
        id: String,
        #[arg(required = true)]
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        fmt: ColoringFmt,
        /// Re-check properness and the clique certificate.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        one_based: bool,
    },
    /// Check theorem instances over a range or a seeded random corpus.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CHECK_IDS.iter().copied().chain(["all"])))]
        id: String,
        #[arg(long)]
        n: Option<Span>,
        #[arg(long)]
        k: Option<Span>,
        #[arg(long)]
        m: Option<Span>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long, value_enum, default_value = "pretty")]
        fmt: TableFmt,
    },
    /// Write a graph (or its δ-complement) as JSON or DOT.
    Export {
        spec: String,
        #[arg(long)]
        delta: bool,
        #[arg(long, value_enum)]
        fmt: ColoringFmt,
    },
}

enum Failure {
    Usage(String),
    Check(String),
    Timeout,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidFamily(_) | Error::Io(_) | Error::Json(_) => {
                Failure::Usage(e.to_string())
            }
            Error::Precondition(_) | Error::EmptyFactor(_) | Error::EmptyFactorList => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Check(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.timeout.is_finite() && cli.timeout >= 0.0) {
        eprintln!("error: --timeout must be a non-negative number of seconds");
        return ExitCode::from(2);
    }
    let solver = SolverOptions::with_timeout(Duration::from_secs_f64(cli.timeout));
    let result = match cli.command {
        Command::ChiDelta {
            spec,
            fmt,
            one_based,
        } => cmd_chi_delta(&spec, fmt, one_based, &solver),
        Command::Structure { specs, emit_s } => cmd_structure(&specs, emit_s),
        Command::Construct {
            id,
            params,
            fmt,
            check,
            one_based,
        } => cmd_construct(&id, &params, fmt, check, one_based, &solver),
        Command::Verify {
            id,
            n,
            k,
            m,
            trials,
            seed,
            max,
            fmt,
        } => {
            let opts = VerifyOptions {
                n,
                k,
                m,
                trials,
                seed,
                max,
                solver,
            };
            cmd_verify(&id, &opts, fmt)
        }
        Command::Export { spec, delta, fmt } => cmd_export(&spec, delta, fmt),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            if !msg.is_empty() {
                eprintln!("check failed: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Timeout) => ExitCode::from(3),
    }
}

fn parse_spec(text: &str) -> Result<FamilySpec, Failure> {
    Ok(FamilySpec::parse(text)?)
}

fn shown(colors: &[usize], one_based: bool) -> Vec<usize> {
    colors.iter().map(|&c| c + usize::from(one_based)).collect()
}

fn cmd_chi_delta(text: &str, fmt: ResultFmt, one_based: bool, solver: &SolverOptions) -> Outcome {
    let spec = parse_spec(text)?;
    let formula = formula_chi_delta(&spec);
    let graph = match generate(&spec) {
        Ok(g) => Some(g),
        Err(Error::ProductTooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let result = graph.as_ref().map(|g| chi_delta(g, solver));
    let agree = match (&formula, &result) {
        (Some(f), Some(r)) => r.chi.map(|c| c == f.value),
        _ => None,
    };
    match fmt {
        ResultFmt::Json => {
            let solver_json = result.as_ref().map(|r| {
                let mut v = r.to_json();
                v["witness"] = json!(shown(r.witness.colors(), one_based));
                v
            });
            let doc = json!({
                "spec": spec.to_string(),
                "formula": formula.as_ref().map(|f| f.value),
                "formula_note": formula.as_ref().map(|f| f.note.clone()),
                "solver": solver_json,
                "agree": agree,
            });
            println!("{doc}");
        }
        ResultFmt::Pretty => {
            println!("graph:    {spec}");
            match &formula {
                Some(f) => println!("formula:  {} ({})", f.value, f.note),
                None => println!("formula:  none"),
            }
            match &result {
                Some(r) => {
                    println!(
                        "solver:   {} ({}, clique {}, {} ms)",
                        chi_text(r),
                        r.method,
                        r.clique_lower(),
                        r.elapsed.as_millis()
                    );
                    println!("witness:  {:?}", shown(r.witness.colors(), one_based));
                }
                None => println!("solver:   skipped (product exceeds the size limit)"),
            }
            match agree {
                Some(true) => println!("agree:    yes"),
                Some(false) => println!("agree:    NO"),
                None => {}
            }
        }
    }
    match (agree, &result) {
        (Some(false), _) => Err(Failure::Check(String::new())),
        (_, Some(r)) if !r.is_exact() => Err(Failure::Timeout),
        _ => Ok(()),
    }
}

fn factor_graphs(texts: &[String]) -> Result<Vec<Graph>, Failure> {
    let specs = texts
        .iter()
        .map(|t| parse_spec(t))
        .collect::<Result<Vec<_>, _>>()?;
    let factors: Vec<&FamilySpec> = match specs.as_slice() {
        [single] => single.factors(),
        many => many.iter().collect(),
    };
    Ok(factors
        .into_iter()
        .map(generate)
        .collect::<Result<Vec<_>, _>>()?)
}

fn cmd_structure(texts: &[String], emit_s: bool) -> Outcome {
    let gs = factor_graphs(texts)?;
    let d = delta_of_product(&gs)?;
    if emit_s {
        println!("{}", edges_to_json(&d.extra_edges));
        return Ok(());
    }
    let identity = d.union_identity_holds() && d.is_disjoint();
    println!("|V(product)|        {}", d.product.n());
    println!("|E(product)|        {}", d.product.edge_count());
    println!("|E(delta)|          {}", d.delta_of_product.edge_count());
    println!("|E(prod of deltas)| {}", d.product_of_deltas.edge_count());
    println!("|S|                 {}", d.extra_edges.len());
    println!("equal               {}", equality_holds(&gs));
    println!("identity holds      {identity}");
    if identity {
        Ok(())
    } else {
        Err(Failure::Check(
            "E(delta) differs from E(prod of deltas) + S".into(),
        ))
    }
}

fn int_param(params: &[String], i: usize, name: &str) -> Result<usize, Failure> {
    params
        .get(i)
        .ok_or_else(|| Failure::Usage(format!("missing parameter <{name}>")))?
        .parse()
        .map_err(|_| Failure::Usage(format!("<{name}> must be a non-negative integer")))
}

fn graph_param(params: &[String], i: usize, name: &str) -> Result<Graph, Failure> {
    let text = params
        .get(i)
        .ok_or_else(|| Failure::Usage(format!("missing parameter <{name}>")))?;
    Ok(generate(&parse_spec(text)?)?)
}

fn cmd_construct(
    id: &str,
    params: &[String],
    fmt: ColoringFmt,
    do_check: bool,
    one_based: bool,
    solver: &SolverOptions,
) -> Outcome {
    let (construction, arity) = match id {
        "star-star" => (
            Construction::StarStar {
                m: int_param(params, 0, "m")?,
                n: int_param(params, 1, "n")?,
            },
            2,
        ),
        "star-path" => (
            Construction::StarPath {
                m: int_param(params, 0, "m")?,
                n: int_param(params, 1, "n")?,
            },
            2,
        ),
        "path-path" => (
            Construction::PathPath {
                n: int_param(params, 0, "n")?,
                k: int_param(params, 1, "k")?,
            },
            2,
        ),
        "join-p3" => (
            Construction::JoinP3 {
                h: graph_param(params, 0, "H")?,
            },
            1,
        ),
        "degree-diff-product" => (
            Construction::DegreeDiffProduct {
                g: graph_param(params, 0, "G")?,
                h: graph_param(params, 1, "H")?,
            },
            2,
        ),
        other => return Err(Failure::Usage(format!("unknown construction {other:?}"))),
    };
    if params.len() != arity {
        return Err(Failure::Usage(format!("{id} takes {arity} parameters")));
    }
    let built = construction.build(solver)?;
    let delta = construction.product()?.delta_complement();
    match fmt {
        ColoringFmt::Json => {
            let doc = json!({
                "construction": id,
                "params": params,
                "n": delta.n(),
                "colors_used": built.coloring.colors_used(),
                "colors": shown(built.coloring.colors(), one_based),
                "clique": built.clique,
                "notes": built.notes,
            });
            println!("{doc}");
        }
        ColoringFmt::Dot => print!("{}", to_dot(&delta, Some(&built.coloring))?),
    }
    if do_check {
        let out = check(&delta, &built)?;
        eprintln!(
            "proper: {}, colors: {}, clique certificate: {}",
            out.proper,
            out.colors_used,
            match out.clique_certifies {
                Some(true) => "valid",
                Some(false) => "INVALID",
                None => "none",
            }
        );
        if !out.passed() {
            return Err(Failure::Check(String::new()));
        }
    }
    Ok(())
}

fn cmd_verify(id: &str, opts: &VerifyOptions, fmt: TableFmt) -> Outcome {
    let rows = verify::run(id, opts)?;
    match fmt {
        TableFmt::Csv => print!("{}", to_csv(&rows)?),
        TableFmt::Pretty => print!("{}", to_pretty(&rows)),
    }
    match overall(&rows) {
        Verdict::Pass | Verdict::Skipped => Ok(()),
        Verdict::Fail => Err(Failure::Check(String::new())),
        Verdict::Timeout => Err(Failure::Timeout),
    }
}

fn cmd_export(text: &str, delta: bool, fmt: ColoringFmt) -> Outcome {
    let mut g = generate(&parse_spec(text)?)?;
    if delta {
        g = g.delta_complement();
    }
    match fmt {
        ColoringFmt::Json => println!("{}", to_json(&g)),
        ColoringFmt::Dot => print!("{}", to_dot(&g, None)?),
    }
    Ok(())
}
