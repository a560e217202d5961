//! Immutable multigraphs and the spanning-tree, connectivity, degree and
//! density primitives everything else is built on.
//!
//! Vertices are numbered `1..=n`; edges are addressed by their 0-based
//! position in the construction order, which never changes.

mod dsu;
mod rational;
mod subsets;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dsu::DisjointSets;
pub use rational::Rational;
pub use subsets::{ConnectedSets, VertexSet};

/// Tag written into every JSON document this crate produces.
pub const FORMAT_TAG: &str = "cbo/1";

/// An undirected multigraph without self-loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 1-based endpoint pairs, keeping their order.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::InvalidInput(
                "a graph needs at least one vertex".into(),
            ));
        }
        for &(u, v) in &edges {
            for w in [u, v] {
                if w == 0 || w > num_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        num_vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        Ok(Graph {
            num_vertices,
            edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Index of the first edge joining `u` and `v`, in either orientation.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.num_vertices {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                num_vertices: self.num_vertices,
            });
        }
        Ok(())
    }

    /// Number of incident edges; parallel edges count separately.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices + 1];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.remove(0);
        deg
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Adjacency lists indexed by vertex (slot 0 unused). Parallel edges repeat.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.num_vertices + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.num_vertices
    }

    /// `m / (n - 1)`, exactly.
    pub fn density(&self) -> Result<Rational> {
        if self.num_vertices < 2 {
            return Err(Error::UndefinedDensity);
        }
        Ok(Rational::new(
            self.num_edges() as i64,
            self.num_vertices as i64 - 1,
        ))
    }

    /// Whether the given edges form a spanning tree. Duplicated indices are
    /// counted twice, so they never pass.
    pub fn is_spanning_tree(&self, edge_indices: &[usize]) -> Result<bool> {
        for &i in edge_indices {
            if i >= self.edges.len() {
                return Err(Error::EdgeOutOfRange {
                    index: i,
                    num_edges: self.edges.len(),
                });
            }
        }
        if edge_indices.len() != self.num_vertices - 1 {
            return Ok(false);
        }
        let mut ds = DisjointSets::new(self.num_vertices);
        Ok(edge_indices.iter().all(|&i| {
            let (u, v) = self.edges[i];
            ds.union(u - 1, v - 1)
        }))
    }

    /// Edges with both endpoints in `set`, counting multiplicity.
    pub fn induced_edge_count(&self, set: VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .count()
    }

    /// Every vertex subset of size at least two whose induced subgraph is connected.
    pub fn connected_induced_vertex_sets(&self) -> Result<ConnectedSets> {
        ConnectedSets::new(self)
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            format: Some(FORMAT_TAG.to_owned()),
            num_vertices: self.num_vertices,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        };
        let mut s = serde_json::to_string(&doc).expect("graph serialises");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
        check_format_tag(doc.format.as_deref())?;
        Graph::new(
            doc.num_vertices,
            doc.edges.into_iter().map(|[u, v]| (u, v)).collect(),
        )
    }
}

pub(crate) fn check_format_tag(tag: Option<&str>) -> Result<()> {
    match tag {
        None | Some(FORMAT_TAG) => Ok(()),
        Some(other) => Err(Error::Format(format!(
            "unsupported format `{other}`, expected `{FORMAT_TAG}`"
        ))),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<String>,
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k3() -> Graph {
        Graph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_self_loops_and_bad_vertices() {
        assert_eq!(Graph::new(2, vec![(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::new(2, vec![(1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(Graph::new(0, vec![]).is_err());
        // parallel edges are fine
        assert_eq!(Graph::new(2, vec![(1, 2), (2, 1)]).unwrap().num_edges(), 2);
    }

    #[test]
    fn spanning_tree_basics() {
        let g = k3();
        assert!(g.is_spanning_tree(&[0, 1]).unwrap());
        assert!(!g.is_spanning_tree(&[0, 1, 2]).unwrap());
        assert!(!g.is_spanning_tree(&[0, 0]).unwrap());
        assert_eq!(
            g.is_spanning_tree(&[3]),
            Err(Error::EdgeOutOfRange {
                index: 3,
                num_edges: 3
            })
        );
        let single = Graph::new(1, vec![]).unwrap();
        assert!(single.is_spanning_tree(&[]).unwrap());
    }

    #[test]
    fn spanning_tree_of_t3_first_window() {
        // Triangular grid with three levels, edges listed as in its drawing.
        let t3 = Graph::new(
            6,
            vec![
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 5),
                (3, 6),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap();
        let window: Vec<usize> = [(1, 2), (2, 4), (2, 5), (5, 6), (1, 3)]
            .iter()
            .map(|&(u, v)| t3.find_edge(u, v).unwrap())
            .collect();
        assert!(t3.is_spanning_tree(&window).unwrap());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::new(2, vec![(1, 2)]).unwrap().is_connected());
        assert!(!Graph::new(2, vec![]).unwrap().is_connected());
        assert!(Graph::new(1, vec![]).unwrap().is_connected());
    }

    #[test]
    fn density_and_degree() {
        assert_eq!(k3().density().unwrap(), Rational::new(3, 2));
        assert_eq!(
            Graph::new(1, vec![]).unwrap().density(),
            Err(Error::UndefinedDensity)
        );
        let k4 = Graph::new(4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(k4.min_degree(), 3);
        let multi = Graph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert_eq!(multi.min_degree(), 2);
    }

    #[test]
    fn json_is_canonical() {
        let text = "{\"format\":\"cbo/1\",\"num_vertices\":3,\"edges\":[[1,2],[3,1],[2,3]]}\n";
        let g = Graph::from_json(text).unwrap();
        assert_eq!(g.edge(1), (3, 1));
        assert_eq!(g.to_json(), text);
        assert!(Graph::from_json("{\"num_vertices\":2,\"edges\":[[1,2]]}").is_ok());
        assert!(
            Graph::from_json("{\"format\":\"cbo/2\",\"num_vertices\":2,\"edges\":[]}").is_err()
        );
        assert!(Graph::from_json("{\"num_vertices\":2,\"edges\":[[1,1]]}").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..8).prop_flat_map(|n| {
            proptest::collection::vec((1..=n, 1..=n), 0..14).prop_map(move |pairs| {
                let edges = pairs.into_iter().filter(|(u, v)| u != v).collect();
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(g in arb_graph()) {
            let text = g.to_json();
            let back = Graph::from_json(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(back.to_json(), text);
        }

        #[test]
        fn spanning_tree_implies_connected_subgraph(g in arb_graph(), mask in 0u32..(1 << 14)) {
            let subset: Vec<usize> = (0..g.num_edges()).filter(|i| mask >> i & 1 == 1).collect();
            if g.is_spanning_tree(&subset).unwrap() {
                prop_assert_eq!(subset.len(), g.num_vertices() - 1);
                let sub = Graph::new(g.num_vertices(), subset.iter().map(|&i| g.edge(i)).collect()).unwrap();
                prop_assert!(sub.is_connected());
            }
        }

        #[test]
        fn density_is_exact(g in arb_graph()) {
            let d = g.density().unwrap();
            let (m, n1) = (g.num_edges() as i64, g.num_vertices() as i64 - 1);
            prop_assert_eq!(d.numerator() * n1, m * d.denominator());
        }
    }
}
