use std::fmt;

use crate::error::{Error, Result};

use super::Graph;

/// A set of vertices of a graph with at most 64 vertices; vertex `v` is bit `v - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        VertexSet(vertices.into_iter().fold(0, |acc, v| acc | 1 << (v - 1)))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> (v - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order.
    pub fn vertices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros() as usize + 1);
            bits &= bits - 1;
        }
        out
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

#[derive(Clone, Copy)]
struct Frame {
    set: u64,
    // `set` together with its neighbourhood
    closed: u64,
    extension: u64,
    root: u32,
}

/// Streams the connected induced vertex sets of a graph.
///
/// Each set is produced exactly once, anchored at its smallest vertex, by
/// only growing with neighbours that are larger than the anchor and not yet
/// adjacent to the partial set (the ESU extension rule without a size cap).
pub struct ConnectedSets {
    neighbours: Vec<u64>,
    next_root: usize,
    stack: Vec<Frame>,
}

impl ConnectedSets {
    pub(super) fn new(g: &Graph) -> Result<Self> {
        let n = g.num_vertices();
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let mut neighbours = vec![0u64; n];
        for &(u, v) in g.edges() {
            neighbours[u - 1] |= 1 << (v - 1);
            neighbours[v - 1] |= 1 << (u - 1);
        }
        Ok(ConnectedSets {
            neighbours,
            next_root: 0,
            stack: Vec::new(),
        })
    }

    fn above(root: u32) -> u64 {
        if root >= 63 {
            0
        } else {
            !0u64 << (root + 1)
        }
    }
}

impl Iterator for ConnectedSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let Some(frame) = self.stack.last_mut() else {
                if self.next_root == self.neighbours.len() {
                    return None;
                }
                let root = self.next_root;
                self.next_root += 1;
                let bit = 1u64 << root;
                self.stack.push(Frame {
                    set: bit,
                    closed: bit | self.neighbours[root],
                    extension: self.neighbours[root] & Self::above(root as u32),
                    root: root as u32,
                });
                continue;
            };
            if frame.extension == 0 {
                self.stack.pop();
                continue;
            }
            let w = frame.extension.trailing_zeros() as usize;
            frame.extension &= frame.extension - 1;
            let parent = *frame;
            let fresh = self.neighbours[w] & !parent.closed & Self::above(parent.root);
            let child = Frame {
                set: parent.set | 1 << w,
                closed: parent.closed | self.neighbours[w],
                extension: parent.extension | fresh,
                root: parent.root,
            };
            self.stack.push(child);
            return Some(VertexSet(child.set));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn collect(g: &Graph) -> Vec<VertexSet> {
        g.connected_induced_vertex_sets().unwrap().collect()
    }

    /// Power-set filter: build each induced subgraph and ask it if it is connected.
    fn oracle(g: &Graph) -> HashSet<u64> {
        let n = g.num_vertices();
        (0u64..1 << n)
            .filter(|m| m.count_ones() >= 2)
            .filter(|&m| {
                let verts = VertexSet(m).vertices();
                let relabel = |v: usize| verts.iter().position(|&x| x == v).unwrap() + 1;
                let edges = g
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| VertexSet(m).contains(u) && VertexSet(m).contains(v))
                    .map(|&(u, v)| (relabel(u), relabel(v)))
                    .collect();
                Graph::new(verts.len(), edges).unwrap().is_connected()
            })
            .collect()
    }

    #[test]
    fn small_examples() {
        let k3 = Graph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(collect(&k3).len(), 4);

        let path = Graph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let sets: HashSet<Vec<usize>> = collect(&path).into_iter().map(|s| s.vertices()).collect();
        let expected: HashSet<Vec<usize>> = [vec![1, 2], vec![2, 3], vec![1, 2, 3]]
            .into_iter()
            .collect();
        assert_eq!(sets, expected);

        let c4 = Graph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(collect(&c4).len(), 9);
        assert_eq!(oracle(&c4).len(), 9);
    }

    #[test]
    fn too_large() {
        let g = Graph::new(65, vec![]).unwrap();
        assert_eq!(
            g.connected_induced_vertex_sets().err(),
            Some(Error::TooLarge(65))
        );
    }

    proptest! {
        #[test]
        fn matches_power_set_filter(
            n in 2usize..=7,
            pairs in proptest::collection::vec((1usize..=7, 1usize..=7), 0..16),
        ) {
            let edges = pairs.into_iter().filter(|&(u, v)| u != v && u <= n && v <= n).collect();
            let g = Graph::new(n, edges).unwrap();
            let got = collect(&g);
            let unique: HashSet<u64> = got.iter().map(|s| s.0).collect();
            prop_assert_eq!(unique.len(), got.len(), "duplicates emitted");
            prop_assert_eq!(unique, oracle(&g));
        }
    }
}
