//! Proper-total-coloring verifier. Every solver in this crate is judged
//! against this module; it depends only on the graph representation.

use crate::graph::{ElementId, ListAssignment, Multigraph, PartialTotalColoring};
use std::fmt;

/// Why a coloring is not a proper (partial) list total coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ColorNotInList {
        element: ElementId,
        color: u32,
    },
    Conflict {
        a: ElementId,
        b: ElementId,
        color: u32,
    },
    Uncolored {
        element: ElementId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColorNotInList { element, color } => {
                write!(f, "{element} uses color {color}, which is not in its list")
            }
            Violation::Conflict { a, b, color } => {
                write!(f, "{a} conflicts with {b}: both use color {color}")
            }
            Violation::Uncolored { element } => write!(f, "{element} is uncolored"),
        }
    }
}

/// Checks that `coloring` is a proper partial total coloring of `g` from `lists`:
/// every assigned color lies in its element's list, no two total-graph
/// neighbors share a color, and (when `require_complete`) nothing is uncolored.
pub fn verify_total_coloring(
    g: &Multigraph,
    lists: &ListAssignment,
    coloring: &PartialTotalColoring,
    require_complete: bool,
) -> Result<(), Violation> {
    for x in g.elements() {
        match coloring.get(x) {
            None => {
                if require_complete {
                    return Err(Violation::Uncolored { element: x });
                }
            }
            Some(c) => {
                if !lists.get(x).contains(c) {
                    return Err(Violation::ColorNotInList {
                        element: x,
                        color: c,
                    });
                }
            }
        }
    }
    for x in g.elements() {
        let Some(cx) = coloring.get(x) else { continue };
        let mut clash = None;
        g.for_each_total_neighbor(x, |y| {
            if clash.is_none() && y > x && coloring.get(y) == Some(cx) {
                clash = Some(y);
            }
        });
        if let Some(y) = clash {
            return Err(Violation::Conflict {
                a: x,
                b: y,
                color: cx,
            });
        }
    }
    Ok(())
}
