//! Edge orderings, the sliding-window verifier and DOT rendering.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{check_format_tag, DisjointSets, Graph, FORMAT_TAG};

/// A bijection from edge indices to ranks `1..=m`.
///
/// `order[p]` is the edge holding rank `p + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeOrdering {
    order: Vec<usize>,
}

impl EdgeOrdering {
    /// Wraps a sequence of edge indices listed by rank. It must be a
    /// permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; order.len()];
        for &e in &order {
            if e >= order.len() {
                return Err(Error::InvalidOrdering(format!(
                    "edge {e} out of range for {} edges",
                    order.len()
                )));
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidOrdering(format!("edge {e} appears twice")));
            }
        }
        Ok(EdgeOrdering { order })
    }

    /// Builds the ordering from `ranks[e]`, the 1-based rank of edge `e`.
    pub fn from_ranks(ranks: &[usize]) -> Result<Self> {
        let m = ranks.len();
        let mut order = vec![usize::MAX; m];
        for (e, &r) in ranks.iter().enumerate() {
            if r == 0 || r > m {
                return Err(Error::InvalidOrdering(format!(
                    "rank {r} out of range 1..={m}"
                )));
            }
            if order[r - 1] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("rank {r} assigned twice")));
            }
            order[r - 1] = e;
        }
        Ok(EdgeOrdering { order })
    }

    pub fn identity(m: usize) -> Self {
        EdgeOrdering {
            order: (0..m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Edge indices listed by rank.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Edge holding 1-based `rank`.
    pub fn edge_at(&self, rank: usize) -> usize {
        self.order[rank - 1]
    }

    /// `ranks()[e]` is the 1-based rank of edge `e`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.order.len()];
        for (p, &e) in self.order.iter().enumerate() {
            ranks[e] = p + 1;
        }
        ranks
    }

    /// Moves every edge from rank `r` to rank `((r - 1 + shift) mod m) + 1`.
    pub fn rotate(&self, shift: i64) -> EdgeOrdering {
        let m = self.order.len();
        if m == 0 {
            return self.clone();
        }
        let s = shift.rem_euclid(m as i64) as usize;
        let mut order = vec![0; m];
        for (p, &e) in self.order.iter().enumerate() {
            order[(p + s) % m] = e;
        }
        EdgeOrdering { order }
    }

    /// Edges of the window starting at 1-based rank `start`, wrapping past `m`.
    pub fn window(&self, start: usize, size: usize) -> impl Iterator<Item = usize> + '_ {
        let m = self.order.len();
        (0..size).map(move |k| self.order[(start - 1 + k) % m])
    }

    pub fn to_json(&self) -> String {
        let doc = OrderingDoc {
            format: Some(FORMAT_TAG.to_owned()),
            order: self.order.clone(),
        };
        let mut s = serde_json::to_string(&doc).expect("ordering serialises");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: OrderingDoc = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
        check_format_tag(doc.format.as_deref())?;
        EdgeOrdering::new(doc.order)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderingDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<String>,
    order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FailureKind {
    Cycle,
    Disconnected,
    Cardinality,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::Cycle => "cycle",
            FailureKind::Disconnected => "disconnected",
            FailureKind::Cardinality => "cardinality",
        })
    }
}

/// The first window that is not a spanning tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowFailure {
    /// 1-based rank at which the window starts.
    pub window_start: usize,
    pub kind: FailureKind,
}

impl fmt::Display for WindowFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "window starting at rank {} ({})",
            self.window_start, self.kind
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub total_windows: usize,
    pub first_failure: Option<WindowFailure>,
}

/// Scratch state for checking windows of one graph.
pub(crate) struct WindowChecker<'g> {
    graph: &'g Graph,
    sets: DisjointSets,
}

impl<'g> WindowChecker<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Self {
        WindowChecker {
            graph,
            sets: DisjointSets::new(graph.num_vertices()),
        }
    }

    /// Why `edges` is not a spanning tree, or `None` if it is one.
    pub(crate) fn classify(
        &mut self,
        edges: impl IntoIterator<Item = usize>,
    ) -> Option<FailureKind> {
        self.sets.reset();
        let mut count = 0;
        let mut cycle = false;
        for e in edges {
            count += 1;
            let (u, v) = self.graph.edge(e);
            if !self.sets.union(u - 1, v - 1) {
                cycle = true;
            }
        }
        if count != self.graph.num_vertices() - 1 {
            Some(FailureKind::Cardinality)
        } else if cycle {
            Some(FailureKind::Cycle)
        } else if self.sets.components() > 1 {
            Some(FailureKind::Disconnected)
        } else {
            None
        }
    }
}

/// Checks every window of `n - 1` cyclically consecutive ranks.
///
/// Windows start at ranks `1..=m` in turn; the report names the smallest
/// failing start. A single-vertex graph has no windows and passes.
pub fn verify_cbo(g: &Graph, o: &EdgeOrdering) -> Result<VerificationReport> {
    let (n, m) = (g.num_vertices(), g.num_edges());
    if o.len() != m {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} entries but the graph has {m} edges",
            o.len()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if m < n - 1 {
        return Err(Error::InvalidInput(format!(
            "{m} edges cannot span {n} vertices"
        )));
    }
    let mut checker = WindowChecker::new(g);
    let first_failure = (1..=m).find_map(|start| {
        checker
            .classify(o.window(start, n - 1))
            .map(|kind| WindowFailure {
                window_start: start,
                kind,
            })
    });
    Ok(VerificationReport {
        passed: first_failure.is_none(),
        total_windows: m,
        first_failure,
    })
}

/// Renders `g` as an undirected DOT graph. With an ordering, edges are
/// emitted in rank order and labelled by rank.
pub fn to_dot(g: &Graph, ordering: Option<&EdgeOrdering>) -> Result<String> {
    let mut out = String::from("graph G {\n");
    for v in 1..=g.num_vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    match ordering {
        Some(o) => {
            if o.len() != g.num_edges() {
                return Err(Error::InvalidOrdering(format!(
                    "ordering has {} entries but the graph has {} edges",
                    o.len(),
                    g.num_edges()
                )));
            }
            for (p, &e) in o.order().iter().enumerate() {
                let (u, v) = g.edge(e);
                writeln!(out, "  {u} -- {v} [label=\"{}\"];", p + 1).unwrap();
            }
        }
        None => {
            for &(u, v) in g.edges() {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
