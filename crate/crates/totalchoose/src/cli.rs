//! Command-line front end. Exit codes: 0 success; 1 failed verification,
//! infeasible instance, or internal failure; 2 maximum degree below 3;
//! 3 a list smaller than `2 * max_degree - 1`; 4 oracle budget exhausted;
//! 64 unparsable input (files or arguments).

use crate::bench::run_bench;
use crate::color::total_color;
use crate::error::Error;
use crate::format::{
    read_coloring, read_instance, write_coloring, write_instance, InstanceFile, InstanceMeta,
};
use crate::gadget::{
    check_fixed_solution, check_ring_solution, sample_fixed_instance, sample_ring_instance,
    solve_fixed, solve_ring, FixedGadgetKind,
};
use crate::generate::{gen_lists, gen_random_multigraph, gen_random_regular};
use crate::graph::{ColorSet, ElementId, ListAssignment};
use crate::oracle::{oracle_total_color, OracleOutcome};
use crate::verify::{verify_total_coloring, Violation};
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fs;
use std::path::{Path, PathBuf};

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_DELTA: i32 = 2;
const EXIT_LISTS: i32 = 3;
const EXIT_BUDGET: i32 = 4;
const EXIT_PARSE: i32 = 64;

#[derive(Parser)]
#[command(
    name = "totalchoose",
    about = "Total list-coloring of loopless multigraphs from lists of size 2*max_degree - 1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color an instance file and emit the coloring
    Color {
        input: PathBuf,
        /// Write the coloring here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file against an instance
    Verify {
        input: PathBuf,
        coloring: PathBuf,
        /// Accept partial colorings
        #[arg(long)]
        partial: bool,
    },
    /// Exhaustive search for a coloring, independent of the pipeline
    Oracle {
        input: PathBuf,
        /// Maximum number of color-assignment attempts
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a seeded random instance file
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        /// Defaults to TOTALCHOOSE_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        /// Embed lists of this size
        #[arg(long)]
        lists: Option<usize>,
        /// Palette size for embedded lists (default 4 * delta)
        #[arg(long)]
        palette: Option<u32>,
        /// Probability of planting parallel pairs (makes a multigraph)
        #[arg(long, default_value_t = 0.0)]
        double_prob: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Measure scaling across sizes and report per-element cost
    Bench {
        #[arg(long)]
        delta: usize,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Solve many random gadget instances of one kind
    GadgetTest {
        /// One of: double-edge-thick, double-edge-thin, triangle-two-thick,
        /// four-cycle-two-thick, k4, k33, ring<m>
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Runs the CLI on the given arguments (including the program name) and
/// returns the process exit code.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with successful exit
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Color { input, output } => cmd_color(&input, output.as_deref()),
        Command::Verify {
            input,
            coloring,
            partial,
        } => cmd_verify(&input, &coloring, partial),
        Command::Oracle {
            input,
            budget,
            output,
        } => cmd_oracle(&input, budget, output.as_deref()),
        Command::Gen {
            n,
            delta,
            seed,
            lists,
            palette,
            double_prob,
            output,
        } => cmd_gen(
            n,
            delta,
            seed,
            lists,
            palette,
            double_prob,
            output.as_deref(),
        ),
        Command::Bench { delta, sizes, seed } => cmd_bench(delta, &sizes, seed),
        Command::GadgetTest { kind, trials, seed } => cmd_gadget_test(&kind, trials, seed),
    }
}

fn default_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        std::env::var("TOTALCHOOSE_SEED")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(0)
    })
}

/// File-style label for an element: 1-indexed v<i> / e<j>.
fn label(x: ElementId) -> String {
    match x {
        ElementId::Vertex(i) => format!("v{}", i + 1),
        ElementId::Edge(j) => format!("e{}", j + 1),
    }
}

fn describe(violation: &Violation) -> String {
    match violation {
        Violation::ColorNotInList { element, color } => {
            format!("{} uses color {color}, not in its list", label(*element))
        }
        Violation::Conflict { a, b, color } => {
            format!(
                "{} conflicts with {}: both use color {color}",
                label(*a),
                label(*b)
            )
        }
        Violation::Uncolored { element } => format!("{} is uncolored", label(*element)),
    }
}

fn load_instance(path: &Path) -> Result<InstanceFile, i32> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(EXIT_FAIL);
        }
    };
    read_instance(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_PARSE
    })
}

/// Embedded lists, or the identical full list 0..2*max_degree-2 when absent.
fn effective_lists(inst: &InstanceFile) -> ListAssignment {
    match &inst.lists {
        Some(l) => l.clone(),
        None => {
            let k = 2 * inst.graph.max_degree().max(1) - 1;
            ListAssignment::uniform(&inst.graph, ColorSet::range(k as u32))
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> i32 {
    match output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_FAIL;
            }
            EXIT_OK
        }
        None => {
            print!("{text}");
            EXIT_OK
        }
    }
}

fn cmd_color(input: &Path, output: Option<&Path>) -> i32 {
    let inst = match load_instance(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let lists = effective_lists(&inst);
    match total_color(&inst.graph, &lists) {
        Ok(coloring) => {
            let text = write_coloring(&inst.graph, &coloring);
            eprintln!(
                "colored {} elements (max degree {})",
                inst.graph.element_count(),
                inst.graph.max_degree()
            );
            emit(&text, output)
        }
        Err(Error::DeltaTooSmall(d)) => {
            eprintln!("error: max degree {d} is below 3; try `totalchoose oracle`");
            EXIT_DELTA
        }
        Err(e @ Error::ListTooSmall { .. }) => {
            eprintln!("error: {e}");
            EXIT_LISTS
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAIL
        }
    }
}

fn cmd_verify(input: &Path, coloring_path: &Path, partial: bool) -> i32 {
    let inst = match load_instance(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let text = match fs::read_to_string(coloring_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", coloring_path.display());
            return EXIT_FAIL;
        }
    };
    let coloring = match read_coloring(&inst.graph, &text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}: {e}", coloring_path.display());
            return EXIT_PARSE;
        }
    };
    let lists = effective_lists(&inst);
    match verify_total_coloring(&inst.graph, &lists, &coloring, !partial) {
        Ok(()) => {
            println!("ok");
            EXIT_OK
        }
        Err(v) => {
            println!("violation: {}", describe(&v));
            EXIT_FAIL
        }
    }
}

fn cmd_oracle(input: &Path, budget: u64, output: Option<&Path>) -> i32 {
    let inst = match load_instance(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let lists = effective_lists(&inst);
    match oracle_total_color(&inst.graph, &lists, budget) {
        OracleOutcome::Found(coloring) => {
            let text = write_coloring(&inst.graph, &coloring);
            emit(&text, output)
        }
        OracleOutcome::Infeasible => {
            println!("infeasible");
            EXIT_FAIL
        }
        OracleOutcome::BudgetExceeded => {
            println!("budget exceeded");
            EXIT_BUDGET
        }
    }
}

fn cmd_gen(
    n: usize,
    delta: usize,
    seed: Option<u64>,
    lists: Option<usize>,
    palette: Option<u32>,
    double_prob: f64,
    output: Option<&Path>,
) -> i32 {
    let seed = default_seed(seed);
    let graph = if double_prob > 0.0 {
        gen_random_multigraph(n, delta, double_prob, seed)
    } else {
        gen_random_regular(n, delta, seed)
    };
    let graph = match graph {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAIL;
        }
    };
    let palette = palette.unwrap_or(4 * delta as u32);
    let lists = match lists {
        Some(size) => match gen_lists(&graph, size, palette, seed ^ 0x5eed) {
            Ok(l) => Some(l),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAIL;
            }
        },
        None => None,
    };
    let inst = InstanceFile {
        meta: InstanceMeta {
            seed: Some(seed),
            delta: Some(delta),
            palette: lists.as_ref().map(|_| palette),
        },
        graph,
        lists,
    };
    emit(&write_instance(&inst), output)
}

fn cmd_bench(delta: usize, sizes: &[usize], seed: Option<u64>) -> i32 {
    let seed = default_seed(seed);
    match run_bench(delta, sizes, seed) {
        Ok(report) => {
            println!(
                "{:>10} {:>10} {:>12} {:>12} {:>12} {:>12}",
                "n", "elements", "millis", "probes", "probes/elem", "us/elem"
            );
            for p in &report.points {
                println!(
                    "{:>10} {:>10} {:>12.2} {:>12} {:>12.2} {:>12.3}",
                    p.n,
                    p.elements,
                    p.millis,
                    p.probes,
                    p.probes_per_element(),
                    1e3 * p.millis_per_element()
                );
            }
            println!(
                "probe ratio {:.3}, time ratio {:.3}",
                report.probe_ratio(),
                report.time_ratio()
            );
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAIL
        }
    }
}

fn parse_gadget_kind(kind: &str) -> Option<Result<FixedGadgetKind, usize>> {
    if let Some(m) = kind.strip_prefix("ring") {
        return m.parse::<usize>().ok().filter(|&m| m >= 3).map(Err);
    }
    FixedGadgetKind::ALL
        .into_iter()
        .find(|k| k.name() == kind)
        .map(Ok)
}

fn cmd_gadget_test(kind: &str, trials: u64, seed: Option<u64>) -> i32 {
    let seed = default_seed(seed);
    let Some(parsed) = parse_gadget_kind(kind) else {
        eprintln!(
            "error: unknown gadget kind '{kind}'; use ring<m> or one of: {}",
            FixedGadgetKind::ALL.map(|k| k.name()).join(", ")
        );
        return EXIT_PARSE;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut solved = 0u64;
    for t in 0..trials {
        let ok = match parsed {
            Ok(kind) => {
                let g = sample_fixed_instance(kind, 12, &mut rng);
                solve_fixed(&g).map(|c| check_fixed_solution(&g, &c)) == Ok(true)
            }
            Err(m) => {
                let g = sample_ring_instance(m, 12, &mut rng);
                solve_ring(&g).map(|s| check_ring_solution(&g, &s)) == Ok(true)
            }
        };
        if ok {
            solved += 1;
        } else {
            eprintln!("trial {t} failed");
        }
    }
    println!("kind {kind}: solved {solved}/{trials}");
    if solved == trials {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}
