//! Loopless multigraph representation and the total-graph adjacency it induces.
//!
//! The *elements* of a graph are its vertices and its edge instances (parallel
//! copies are distinct elements). Two elements are adjacent in the total graph
//! `T(G)` when they are adjacent or incident in `G`; a proper total coloring
//! assigns distinct colors to adjacent elements.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

/// A vertex or an edge instance. Edge ids follow construction order, so two
/// parallel copies of the same vertex pair have distinct ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementId {
    Vertex(usize),
    Edge(usize),
}

impl ElementId {
    pub fn is_vertex(self) -> bool {
        matches!(self, ElementId::Vertex(_))
    }

    pub fn is_edge(self) -> bool {
        matches!(self, ElementId::Edge(_))
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementId::Vertex(i) => write!(f, "vertex {i}"),
            ElementId::Edge(i) => write!(f, "edge {i}"),
        }
    }
}

/// An immutable loopless multigraph with a per-vertex incidence index.
///
/// The structure never changes after construction; algorithms that need to
/// reason about a subgraph express it with skip-sets instead of mutation.
/// An internal counter tallies adjacency probes (incidence scans and endpoint
/// lookups) so callers can check the linear-work claims empirically.
#[derive(Debug)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
    degrees: Vec<usize>,
    max_degree: usize,
    parallel: HashMap<(usize, usize), Vec<usize>>,
    probes: AtomicU64,
}

impl Clone for Multigraph {
    fn clone(&self) -> Self {
        Multigraph {
            vertex_count: self.vertex_count,
            edges: self.edges.clone(),
            incidence: self.incidence.clone(),
            degrees: self.degrees.clone(),
            max_degree: self.max_degree,
            parallel: self.parallel.clone(),
            probes: AtomicU64::new(self.probes.load(Ordering::Relaxed)),
        }
    }
}

impl Multigraph {
    /// Builds a multigraph from an edge list. Edge ids equal input positions.
    /// Rejects loops and out-of-range endpoints.
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut incidence = vec![Vec::new(); vertex_count];
        let mut degrees = vec![0usize; vertex_count];
        let mut parallel: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (id, &(a, b)) in edge_list.iter().enumerate() {
            if a >= vertex_count {
                return Err(Error::EndpointOutOfRange {
                    edge: id,
                    vertex: a,
                    count: vertex_count,
                });
            }
            if b >= vertex_count {
                return Err(Error::EndpointOutOfRange {
                    edge: id,
                    vertex: b,
                    count: vertex_count,
                });
            }
            if a == b {
                return Err(Error::LoopEdge {
                    edge: id,
                    vertex: a,
                });
            }
            incidence[a].push(id);
            incidence[b].push(id);
            degrees[a] += 1;
            degrees[b] += 1;
            parallel.entry((a.min(b), a.max(b))).or_default().push(id);
        }
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        Ok(Multigraph {
            vertex_count,
            edges: edge_list.to_vec(),
            incidence,
            degrees,
            max_degree,
            parallel,
            probes: AtomicU64::new(0),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn element_count(&self) -> usize {
        self.vertex_count + self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Endpoints of an edge, in construction order. Counts as one probe.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.probes.fetch_add(1, Ordering::Relaxed);
        self.edges[e]
    }

    /// Edge ids incident to `v`. Counts deg(v) probes, the cost of scanning.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        self.probes
            .fetch_add(self.incidence[v].len() as u64, Ordering::Relaxed);
        &self.incidence[v]
    }

    /// The other endpoint of `e` as seen from `v`.
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Number of parallel copies between `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.parallel
            .get(&(u.min(v), u.max(v)))
            .map_or(0, |g| g.len())
    }

    /// All edge ids joining the endpoints of `e` (including `e` itself).
    pub fn parallel_group(&self, e: usize) -> &[usize] {
        let (a, b) = self.edges[e];
        &self.parallel[&(a.min(b), a.max(b))]
    }

    pub fn has_edge_between(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Lowest-id edge joining `u` and `v`, if any.
    pub fn first_edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.parallel
            .get(&(u.min(v), u.max(v)))
            .and_then(|g| g.iter().copied().min())
    }

    pub fn contains(&self, x: ElementId) -> bool {
        match x {
            ElementId::Vertex(i) => i < self.vertex_count,
            ElementId::Edge(i) => i < self.edges.len(),
        }
    }

    /// All elements, vertices first, in index order.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.vertex_count)
            .map(ElementId::Vertex)
            .chain((0..self.edges.len()).map(ElementId::Edge))
    }

    pub fn probes(&self) -> u64 {
        self.probes.load(Ordering::Relaxed)
    }

    pub fn reset_probes(&self) {
        self.probes.store(0, Ordering::Relaxed);
    }

    /// Visits every total-graph neighbor of `x` exactly once.
    ///
    /// For a vertex: its incident edges and its adjacent vertices (one visit
    /// per neighbor even with parallel edges). For an edge uv: both endpoints,
    /// then all other edges at u, then edges at v that do not also touch u
    /// (parallel copies of uv are emitted once, from u's side).
    pub fn for_each_total_neighbor<F: FnMut(ElementId)>(&self, x: ElementId, mut f: F) {
        match x {
            ElementId::Vertex(v) => {
                let mut seen: Vec<usize> = Vec::with_capacity(self.degrees[v]);
                for &e in self.incident_edges(v) {
                    f(ElementId::Edge(e));
                    let w = self.opposite(e, v);
                    if !seen.contains(&w) {
                        seen.push(w);
                        f(ElementId::Vertex(w));
                    }
                }
            }
            ElementId::Edge(e) => {
                let (u, v) = self.endpoints(e);
                f(ElementId::Vertex(u));
                f(ElementId::Vertex(v));
                for &e2 in self.incident_edges(u) {
                    if e2 != e {
                        f(ElementId::Edge(e2));
                    }
                }
                for &e2 in self.incident_edges(v) {
                    if e2 == e {
                        continue;
                    }
                    // skip edges that also touch u; they were emitted above
                    let (a, b) = self.endpoints(e2);
                    if a != u && b != u {
                        f(ElementId::Edge(e2));
                    }
                }
            }
        }
    }

    /// The set of elements adjacent to `x` in the total graph, sorted.
    /// Its size never exceeds twice the maximum degree.
    pub fn total_neighbors(&self, x: ElementId) -> Result<Vec<ElementId>> {
        if !self.contains(x) {
            return Err(Error::InvalidElement(x));
        }
        let mut out = Vec::new();
        self.for_each_total_neighbor(x, |y| out.push(y));
        out.sort_unstable();
        Ok(out)
    }

    /// Connected components as sorted vertex and edge id sets.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut vertices = vec![start];
            let mut edges = Vec::new();
            let mut queue = std::collections::VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                for &e in &self.incidence[v] {
                    let w = if self.edges[e].0 == v {
                        self.edges[e].1
                    } else {
                        self.edges[e].0
                    };
                    if !seen[w] {
                        seen[w] = true;
                        vertices.push(w);
                        queue.push_back(w);
                    }
                }
            }
            vertices.sort_unstable();
            for (id, &(a, _)) in self.edges.iter().enumerate() {
                if vertices.binary_search(&a).is_ok() {
                    edges.push(id);
                }
            }
            out.push(Component { vertices, edges });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// One connected component, as sorted element id lists.
#[derive(Debug, Clone)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// A set of elements of a fixed graph, used as a skip-set: graphs are never
/// mutated, so "G minus these elements" is expressed by membership tests.
#[derive(Debug, Clone)]
pub struct ElementSet {
    vertices: Vec<bool>,
    edges: Vec<bool>,
}

impl ElementSet {
    pub fn empty(g: &Multigraph) -> Self {
        ElementSet {
            vertices: vec![false; g.vertex_count()],
            edges: vec![false; g.edge_count()],
        }
    }

    pub fn insert(&mut self, x: ElementId) {
        match x {
            ElementId::Vertex(i) => self.vertices[i] = true,
            ElementId::Edge(i) => self.edges[i] = true,
        }
    }

    pub fn contains(&self, x: ElementId) -> bool {
        match x {
            ElementId::Vertex(i) => self.vertices[i],
            ElementId::Edge(i) => self.edges[i],
        }
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges[e]
    }

    pub fn from_elements(g: &Multigraph, items: impl IntoIterator<Item = ElementId>) -> Self {
        let mut s = ElementSet::empty(g);
        for x in items {
            s.insert(x);
        }
        s
    }
}

/// A sorted, duplicate-free set of colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSet(Vec<u32>);

impl ColorSet {
    pub fn new(mut colors: Vec<u32>) -> Self {
        colors.sort_unstable();
        colors.dedup();
        ColorSet(colors)
    }

    pub fn range(n: u32) -> Self {
        ColorSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: u32) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Smallest member not present in `banned`.
    pub fn first_available(&self, banned: &[u32]) -> Option<u32> {
        self.0.iter().copied().find(|c| !banned.contains(c))
    }

    /// The set with every member of `banned` removed.
    pub fn without(&self, banned: &[u32]) -> ColorSet {
        ColorSet(
            self.0
                .iter()
                .copied()
                .filter(|c| !banned.contains(c))
                .collect(),
        )
    }

    /// Keeps only the `k` smallest colors.
    pub fn truncated(&self, k: usize) -> ColorSet {
        ColorSet(self.0.iter().copied().take(k).collect())
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        ColorSet::new(iter.into_iter().collect())
    }
}

/// A list of permitted colors for every element of a graph.
#[derive(Clone, Debug)]
pub struct ListAssignment {
    vertex_lists: Vec<ColorSet>,
    edge_lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(
        g: &Multigraph,
        vertex_lists: Vec<ColorSet>,
        edge_lists: Vec<ColorSet>,
    ) -> Result<Self> {
        if vertex_lists.len() != g.vertex_count() {
            return Err(Error::Invariant(format!(
                "expected {} vertex lists, got {}",
                g.vertex_count(),
                vertex_lists.len()
            )));
        }
        if edge_lists.len() != g.edge_count() {
            return Err(Error::Invariant(format!(
                "expected {} edge lists, got {}",
                g.edge_count(),
                edge_lists.len()
            )));
        }
        Ok(ListAssignment {
            vertex_lists,
            edge_lists,
        })
    }

    /// The same list on every element.
    pub fn uniform(g: &Multigraph, list: ColorSet) -> Self {
        ListAssignment {
            vertex_lists: vec![list.clone(); g.vertex_count()],
            edge_lists: vec![list; g.edge_count()],
        }
    }

    pub fn get(&self, x: ElementId) -> &ColorSet {
        match x {
            ElementId::Vertex(i) => &self.vertex_lists[i],
            ElementId::Edge(i) => &self.edge_lists[i],
        }
    }

    pub fn min_list_size(&self) -> usize {
        self.vertex_lists
            .iter()
            .chain(self.edge_lists.iter())
            .map(ColorSet::len)
            .min()
            .unwrap_or(0)
    }

    /// First element whose list is smaller than `need`, if any.
    pub fn first_undersized(&self, need: usize) -> Option<(ElementId, usize)> {
        for (i, l) in self.vertex_lists.iter().enumerate() {
            if l.len() < need {
                return Some((ElementId::Vertex(i), l.len()));
            }
        }
        for (i, l) in self.edge_lists.iter().enumerate() {
            if l.len() < need {
                return Some((ElementId::Edge(i), l.len()));
            }
        }
        None
    }
}

/// A partial assignment of colors to elements; the evolving solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTotalColoring {
    vertex_colors: Vec<Option<u32>>,
    edge_colors: Vec<Option<u32>>,
}

impl PartialTotalColoring {
    pub fn empty(g: &Multigraph) -> Self {
        PartialTotalColoring {
            vertex_colors: vec![None; g.vertex_count()],
            edge_colors: vec![None; g.edge_count()],
        }
    }

    pub fn get(&self, x: ElementId) -> Option<u32> {
        match x {
            ElementId::Vertex(i) => self.vertex_colors[i],
            ElementId::Edge(i) => self.edge_colors[i],
        }
    }

    pub fn set(&mut self, x: ElementId, c: u32) {
        match x {
            ElementId::Vertex(i) => self.vertex_colors[i] = Some(c),
            ElementId::Edge(i) => self.edge_colors[i] = Some(c),
        }
    }

    pub fn unset(&mut self, x: ElementId) {
        match x {
            ElementId::Vertex(i) => self.vertex_colors[i] = None,
            ElementId::Edge(i) => self.edge_colors[i] = None,
        }
    }

    pub fn is_colored(&self, x: ElementId) -> bool {
        self.get(x).is_some()
    }

    pub fn colored_count(&self) -> usize {
        self.vertex_colors
            .iter()
            .chain(self.edge_colors.iter())
            .filter(|c| c.is_some())
            .count()
    }

    pub fn is_complete(&self, g: &Multigraph) -> bool {
        self.colored_count() == g.element_count()
    }
}
