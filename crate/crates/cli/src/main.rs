use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use midlevels::export::{self, GraphExport};
use midlevels::hamilton::{
    self, decode_colors, decode_hats_all, encode_colors, find_hamilton_path, k6_catalog, lift_path,
    verify_hamilton, CatalogOptions, ColorWord, HatSequence, NeighborOrder, SearchOptions, Strategy,
};
use midlevels::lexical::adjacency_table;
use midlevels::quotient::{MiddleLevelsGraph, QuotientGraph, ReducedGraph};
use midlevels::Error;

mod render;
mod selftest;

#[derive(Parser)]
#[command(name = "midlevels", version, about = "Middle-levels graphs, quotients, the lexical tree and Hamilton cycles")]
struct Cli {
    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit M_k, M_k/π or R_k.
    Build {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Target::Rk)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The δ-headed adjacency table of R_k and its id matrix.
    Table {
        #[arg(long)]
        k: usize,
        /// Print only the id matrix as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Render the first levels of the lexical tree.
    Tree {
        #[arg(long, default_value_t = 5)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Notation::Delta)]
        notation: Notation,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Level counts, second-symbol counts, S-sequences and the Catalan triangle.
    Counts {
        #[arg(long)]
        k: usize,
    },
    /// Hamilton paths, encodings and cycles.
    #[command(subcommand)]
    Ham(Ham),
    /// Check every built-in golden value and report per area.
    Selftest,
}

#[derive(Subcommand)]
enum Ham {
    /// Search a Hamilton path of R_k from Φ(0…0) to Φ(01…).
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Order::Color)]
        order: Order,
        #[command(flatten)]
        budget: Budget,
        /// Also lift the path and print the cycle length and translation.
        #[arg(long)]
        lift: bool,
    },
    /// Decode a hat sequence under one or all strategies.
    Decode {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        hats: String,
        #[arg(long, default_value = "all")]
        strategy: String,
    },
    /// Lift a color word to a Hamilton cycle of M_k and write it as a cycle file.
    Lift {
        /// "k start c1c2..." or a path to a file holding it.
        #[arg(long)]
        word: String,
    },
    /// Verify a cycle file as a Hamilton cycle of M_k.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cycle: PathBuf,
    },
    /// Build the verified M_6 catalog and print its manifest.
    Catalog {
        #[arg(long, default_value_t = 6)]
        k: usize,
        #[arg(long, default_value_t = 29)]
        target: usize,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Args, Clone, Copy)]
struct Budget {
    #[arg(long = "budget-nodes", value_parser = clap::value_parser!(u64).range(1..))]
    nodes: Option<u64>,
    #[arg(long = "budget-seconds", value_parser = clap::value_parser!(u64).range(1..))]
    seconds: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Target {
    Mk,
    Mkpi,
    Rk,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Notation {
    Delta,
    A,
    B,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Order {
    Color,
    Warnsdorff,
}

/// A failed run: exit code 1 for domain failures, 3 for capacity.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Capacity { .. }) { 3 } else { 1 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn domain(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs.filter(|&j| j > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    match run(&cli) {
        Ok(output) => {
            if let Err(f) = emit(&cli, &output) {
                eprintln!("error: {}", f.message);
                return ExitCode::from(f.code);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(cli: &Cli, output: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, output).map_err(|e| domain(format!("{}: {e}", path.display()))),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn jobs(cli: &Cli) -> usize {
    cli.jobs.unwrap_or_else(rayon::current_num_threads).max(1)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Build { k, target, format } => build(*k, *target, *format),
        Command::Table { k, csv } => {
            let t = adjacency_table(*k)?;
            Ok(if *csv {
                t.matrix_csv()
            } else {
                format!("{}\n{}", t.text(), t.matrix_csv())
            })
        }
        Command::Tree {
            depth,
            notation,
            format,
        } => Ok(match format {
            Format::Text => render::tree_text(*depth, *notation),
            Format::Json => serde_json::to_string_pretty(&export::tree_rows(*depth)).unwrap() + "\n",
            Format::Dot => export::tree_dot(*depth),
        }),
        Command::Counts { k } => Ok(render::counts(*k)?),
        Command::Ham(ham) => run_ham(cli, ham),
        Command::Selftest => {
            let report = selftest::run();
            let text = report.render();
            if report.all_passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(domain(format!("{} check(s) failed", report.failures())))
            }
        }
    }
}

fn build(k: usize, target: Target, format: Format) -> Result<String, Failure> {
    let graph = match target {
        Target::Mk => GraphExport::from_mk(&MiddleLevelsGraph::build(k)?),
        Target::Mkpi => GraphExport::from_quotient(&QuotientGraph::build(k)?),
        Target::Rk => GraphExport::from_reduced(&ReducedGraph::build(k)?),
    };
    Ok(match format {
        Format::Json => graph.to_json() + "\n",
        Format::Dot => graph.to_dot(),
        Format::Text => graph.to_text(),
    })
}

fn search_options(order: NeighborOrder, budget: Budget, jobs: usize) -> SearchOptions {
    SearchOptions {
        order,
        node_budget: budget.nodes,
        time_budget: budget.seconds.map(Duration::from_secs),
        jobs,
        ..SearchOptions::default()
    }
}

fn read_word(arg: &str) -> Result<ColorWord, Failure> {
    let text = match fs::read_to_string(arg) {
        Ok(s) => s,
        Err(_) => arg.to_string(),
    };
    Ok(export::color_word_from_text(&text)?)
}

fn run_ham(cli: &Cli, ham: &Ham) -> Result<String, Failure> {
    match ham {
        Ham::Search { k, order, budget, lift } => {
            let q = QuotientGraph::build(*k)?;
            let r = ReducedGraph::from_quotient(&q)?;
            let s = hamilton::vertex_of(&r, &hamilton::phi_zero(*k))?;
            let e = hamilton::vertex_of(&r, &hamilton::phi_one(*k))?;
            let order = match order {
                Order::Color => NeighborOrder::Color,
                Order::Warnsdorff => NeighborOrder::Warnsdorff,
            };
            let found = find_hamilton_path(&r, s, e, &search_options(order, *budget, jobs(cli)));
            let Some(path) = found.paths.first() else {
                let why = if found.truncated { "budget exhausted" } else { "no path exists" };
                return Err(domain(format!("no Hamilton path after {} nodes: {why}", found.nodes)));
            };
            let mut out = export::color_word_to_text(&encode_colors(&r, path));
            if *lift {
                let l = lift_path(&q, &r, path).map_err(|fails| {
                    domain(format!("lift failed for every loop choice ({} tried)", fails.len()))
                })?;
                out.push_str(&format!(
                    "# lifted: {} vertices, loops {}/{}, translation {}\n",
                    l.cycle.len(),
                    l.start_loop.0,
                    l.end_loop.0,
                    l.translation
                ));
            }
            Ok(out)
        }
        Ham::Decode { k, hats, strategy } => {
            let r = ReducedGraph::build(*k)?;
            let hats: HatSequence = hats.parse()?;
            let strategies: Vec<Strategy> = if strategy.eq_ignore_ascii_case("all") {
                Strategy::ALL.to_vec()
            } else {
                vec![strategy.parse()?]
            };
            let outcomes = decode_hats_all(&r, &hats, &strategies);
            let mut out = String::new();
            for o in &outcomes {
                out.push_str(&o.summary());
                out.push('\n');
            }
            if outcomes.iter().any(|o| o.validates()) {
                Ok(out)
            } else {
                print!("{out}");
                Err(domain("no strategy validates the sequence"))
            }
        }
        Ham::Lift { word } => {
            let cw = read_word(word)?;
            let q = QuotientGraph::build(cw.k)?;
            let r = ReducedGraph::from_quotient(&q)?;
            let path = decode_colors(&r, &cw)?;
            if !path.is_hamilton(&r) {
                return Err(domain("the color word is not a Hamilton path of R_k"));
            }
            let l = lift_path(&q, &r, &path).map_err(|fails| {
                let detail: Vec<String> = fails.iter().map(|(s, e, err)| format!("{}/{}: {err}", s.0, e.0)).collect();
                domain(format!("lift failed: {}", detail.join("; ")))
            })?;
            let g = MiddleLevelsGraph::build(cw.k)?;
            verify_hamilton(&g, &l.cycle).map_err(|v| domain(v.to_string()))?;
            Ok(export::cycle_to_text(&l.cycle))
        }
        Ham::Verify { k, cycle } => {
            let text = fs::read_to_string(cycle).map_err(|e| domain(format!("{}: {e}", cycle.display())))?;
            let c = export::cycle_from_text(&text)?;
            if c.k != *k {
                return Err(domain(format!("cycle words have length {}, expected {}", 2 * c.k + 1, 2 * k + 1)));
            }
            let g = MiddleLevelsGraph::build(*k)?;
            verify_hamilton(&g, &c).map_err(|v| domain(v.to_string()))?;
            Ok(format!("ok: Hamilton cycle of M_{k} with {} vertices\n", c.len()))
        }
        Ham::Catalog { k, target, budget } => {
            if *k != 6 {
                return Err(domain("the catalog is defined for k = 6 only"));
            }
            let opts = CatalogOptions {
                target: *target,
                node_budget: budget.nodes.or(CatalogOptions::default().node_budget),
                time_budget: budget.seconds.map(Duration::from_secs),
                jobs: jobs(cli),
                ..CatalogOptions::default()
            };
            let cat = k6_catalog(&opts)?;
            for r in &cat.report {
                eprintln!("{}: {}", r.source, r.outcome);
            }
            if let Some(note) = &cat.fallback {
                eprintln!("fallback: {note}");
            }
            eprintln!(
                "catalog: {} verified, signatures distinct: {}",
                cat.verified_count(),
                cat.signatures_distinct()
            );
            let out = serde_json::to_string_pretty(&cat.manifest_json()).unwrap() + "\n";
            if cat.verified_count() < *target {
                print!("{out}");
                return Err(domain(format!("only {} of {target} cycles", cat.verified_count())));
            }
            Ok(out)
        }
    }
}
