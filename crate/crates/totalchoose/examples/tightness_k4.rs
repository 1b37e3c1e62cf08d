//! Why `2 * max_degree - 1` colors: the exhaustive oracle shows K4 (max
//! degree 3) has no total coloring from four identical colors, while five
//! always suffice.

use totalchoose::generate::named;
use totalchoose::graph::{ColorSet, ListAssignment};
use totalchoose::oracle::{oracle_total_color, OracleOutcome};

fn main() {
    let g = named::complete(4);
    for colors in [4u32, 5] {
        let lists = ListAssignment::uniform(&g, ColorSet::range(colors));
        let outcome = oracle_total_color(&g, &lists, 100_000_000);
        match outcome {
            OracleOutcome::Found(c) => {
                println!("K4 with {colors} identical colors: colorable, e.g.");
                print!("  ");
                for x in g.elements() {
                    print!("{x}={} ", c.get(x).unwrap());
                }
                println!();
            }
            OracleOutcome::Infeasible => {
                println!("K4 with {colors} identical colors: infeasible (exact, exhaustive)");
            }
            OracleOutcome::BudgetExceeded => println!("budget exceeded"),
        }
    }
}
