//! Exhaustive backtracking search for cyclic base orderings, and the sweep
//! that pairs it with the uniform-density test over all small graphs.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::is_uniformly_dense;
use crate::error::{Error, Result};
use crate::graph::{DisjointSets, Graph};
use crate::ordering::{verify_cbo, EdgeOrdering};

/// Limits on a search. Exceeding either yields [`SearchStatus::BudgetExceeded`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    /// Every ordering was ruled out: the graph has no CBO.
    Exhausted,
    BudgetExceeded,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Found => "found",
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::BudgetExceeded => "budget_exceeded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub ordering: Option<EdgeOrdering>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

const FLUSH_EVERY: u64 = 256;

/// State shared by all workers of one search.
struct Shared {
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
    // smallest branch index known to hold a solution
    best_branch: AtomicUsize,
    deterministic: bool,
}

impl Shared {
    fn new(budget: Budget, deterministic: bool) -> Self {
        Shared {
            budget,
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            out_of_budget: AtomicBool::new(false),
            best_branch: AtomicUsize::new(usize::MAX),
            deterministic,
        }
    }

    fn cancelled(&self, branch: usize) -> bool {
        let best = self.best_branch.load(AtomicOrdering::Relaxed);
        if self.deterministic {
            best < branch
        } else {
            best != usize::MAX
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    OutOfBudget,
    Cancelled,
}

struct Searcher<'a> {
    graph: &'a Graph,
    n: usize,
    m: usize,
    order: Vec<usize>,
    used: Vec<bool>,
    sets: DisjointSets,
    shared: &'a Shared,
    branch: usize,
    nodes: u64,
    unflushed: u64,
}

impl<'a> Searcher<'a> {
    fn new(graph: &'a Graph, shared: &'a Shared, branch: usize) -> Self {
        Searcher {
            graph,
            n: graph.num_vertices(),
            m: graph.num_edges(),
            order: Vec::with_capacity(graph.num_edges()),
            used: vec![false; graph.num_edges()],
            sets: DisjointSets::new(graph.num_vertices()),
            shared,
            branch,
            nodes: 0,
            unflushed: 0,
        }
    }

    /// Counts one node and checks the limits.
    fn tick(&mut self) -> Option<Step> {
        self.nodes += 1;
        self.unflushed += 1;
        let shared = self.shared;
        if let Some(max) = shared.budget.max_nodes {
            if shared.nodes.load(AtomicOrdering::Relaxed) + self.unflushed > max {
                shared.out_of_budget.store(true, AtomicOrdering::Relaxed);
                return Some(Step::OutOfBudget);
            }
        }
        if self.unflushed == FLUSH_EVERY {
            shared
                .nodes
                .fetch_add(self.unflushed, AtomicOrdering::Relaxed);
            self.unflushed = 0;
            if shared.out_of_budget.load(AtomicOrdering::Relaxed) {
                return Some(Step::OutOfBudget);
            }
            if let Some(max) = shared.budget.max_time {
                if shared.start.elapsed() > max {
                    shared.out_of_budget.store(true, AtomicOrdering::Relaxed);
                    return Some(Step::OutOfBudget);
                }
            }
            if shared.cancelled(self.branch) {
                return Some(Step::Cancelled);
            }
        }
        None
    }

    fn flush(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.unflushed, AtomicOrdering::Relaxed);
        self.unflushed = 0;
    }

    fn place(&mut self, e: usize) {
        self.order.push(e);
        self.used[e] = true;
    }

    fn unplace(&mut self) {
        let e = self.order.pop().expect("non-empty");
        self.used[e] = false;
    }

    fn is_forest(&mut self, positions: impl Iterator<Item = usize>) -> bool {
        self.sets.reset();
        for p in positions {
            let (u, v) = self.graph.edge(self.order[p]);
            if !self.sets.union(u - 1, v - 1) {
                return false;
            }
        }
        true
    }

    /// Checks every window that contains the most recently placed rank.
    ///
    /// The trailing `n - 1` ranks must be a forest (a spanning tree once
    /// complete). Windows that wrap past the last rank are checked on their
    /// already assigned part: the ranks from their start up to now plus the
    /// fixed prefix they wrap onto.
    fn consistent(&mut self) -> bool {
        let a = self.order.len();
        let w = a.min(self.n - 1);
        if !self.is_forest(a - w..a) {
            return false;
        }
        let (n, m) = (self.n, self.m);
        let first_wrap = (m + 2).saturating_sub(n).max(1);
        for s in first_wrap..a {
            let prefix = s + n - 1 - m;
            if !self.is_forest((s..a).chain(0..prefix)) {
                return false;
            }
        }
        true
    }

    fn extend(&mut self) -> Step {
        if self.order.len() == self.m {
            return Step::Found;
        }
        for e in 0..self.m {
            if self.used[e] {
                continue;
            }
            if let Some(stop) = self.tick() {
                return stop;
            }
            self.place(e);
            if self.consistent() {
                match self.extend() {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.unplace();
        }
        Step::Exhausted
    }
}

struct BranchResult {
    step: Step,
    nodes: u64,
    ordering: Option<Vec<usize>>,
}

fn check_searchable(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.num_edges() + 1 < g.num_vertices() {
        return Err(Error::InvalidInput(
            "too few edges to span the graph".into(),
        ));
    }
    Ok(())
}

/// Decides whether `g` has a CBO, single-threaded.
///
/// Edge 0 is fixed at rank 1 (every CBO rotates to one of these); later
/// ranks try unused edges in ascending index order, so the first CBO found
/// is the lexicographically smallest edge sequence. `deterministic` only
/// matters for [`find_cbo_with_workers`]; it is accepted here for symmetry.
pub fn find_cbo(g: &Graph, budget: &Budget, deterministic: bool) -> Result<SearchOutcome> {
    find_cbo_with_workers(g, budget, deterministic, 1)
}

/// [`find_cbo`] with the rank-2 branches spread over `workers` threads.
///
/// In deterministic mode the outcome (status, ordering and node count) is
/// that of the single-threaded search, except when a budget is hit: the
/// shared node counter then depends on scheduling.
pub fn find_cbo_with_workers(
    g: &Graph,
    budget: &Budget,
    deterministic: bool,
    workers: usize,
) -> Result<SearchOutcome> {
    check_searchable(g)?;
    let m = g.num_edges();
    let shared = Shared::new(*budget, deterministic);
    let finish = |status, ordering: Option<Vec<usize>>, nodes| -> Result<SearchOutcome> {
        let ordering = ordering.map(EdgeOrdering::new).transpose()?;
        if let Some(o) = &ordering {
            debug_assert!(verify_cbo(g, o)?.passed);
        }
        Ok(SearchOutcome {
            status,
            ordering,
            nodes_explored: nodes,
            elapsed: shared.start.elapsed(),
        })
    };

    if m <= 1 {
        // the root alone decides
        let nodes = m as u64;
        if budget.max_nodes.is_some_and(|max| nodes > max) {
            return finish(SearchStatus::BudgetExceeded, None, nodes);
        }
        return finish(SearchStatus::Found, Some((0..m).collect()), nodes);
    }

    let run = |second: usize| -> BranchResult {
        let mut s = Searcher::new(g, &shared, second);
        // the root node is counted by the caller
        s.place(0);
        s.place(second);
        let step = if shared.cancelled(second) {
            Step::Cancelled
        } else if let Some(stop) = s.tick() {
            stop
        } else if s.consistent() {
            s.extend()
        } else {
            Step::Exhausted
        };
        s.flush();
        if step == Step::Found {
            shared
                .best_branch
                .fetch_min(second, AtomicOrdering::Relaxed);
        }
        BranchResult {
            ordering: (step == Step::Found).then(|| s.order.clone()),
            step,
            nodes: s.nodes,
        }
    };

    // root: edge 0 at rank 1
    shared.nodes.fetch_add(1, AtomicOrdering::Relaxed);
    if budget.max_nodes == Some(0) {
        return finish(SearchStatus::BudgetExceeded, None, 1);
    }

    let results: Vec<BranchResult> = if workers <= 1 {
        let mut results = Vec::new();
        for second in 1..m {
            let r = run(second);
            let stop = r.step != Step::Exhausted;
            results.push(r);
            if stop {
                break;
            }
        }
        results
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
        pool.install(|| (1..m).into_par_iter().map(run).collect())
    };

    if deterministic || workers <= 1 {
        let mut nodes = 1;
        for r in results {
            nodes += r.nodes;
            match r.step {
                Step::Exhausted => continue,
                Step::Found => return finish(SearchStatus::Found, r.ordering, nodes),
                Step::OutOfBudget | Step::Cancelled => {
                    return finish(SearchStatus::BudgetExceeded, None, nodes)
                }
            }
        }
        return finish(SearchStatus::Exhausted, None, nodes);
    }

    let nodes = 1 + results.iter().map(|r| r.nodes).sum::<u64>();
    if let Some(r) = results.iter().find(|r| r.step == Step::Found) {
        return finish(SearchStatus::Found, r.ordering.clone(), nodes);
    }
    if results.iter().all(|r| r.step == Step::Exhausted) {
        finish(SearchStatus::Exhausted, None, nodes)
    } else {
        finish(SearchStatus::BudgetExceeded, None, nodes)
    }
}

/// Which graphs [`sweep_small_graphs`] visits and how hard it tries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_m: usize,
    /// Largest number of parallel edges between two vertices; 1 for simple graphs.
    pub max_multiplicity: usize,
    /// Keep one labeled representative per isomorphism class.
    pub dedup: bool,
    pub budget: Budget,
    pub workers: usize,
}

impl SweepConfig {
    pub fn new(max_n: usize, max_m: usize) -> Self {
        SweepConfig {
            max_n,
            max_m,
            max_multiplicity: 1,
            dedup: false,
            budget: Budget::unlimited(),
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub graph: Graph,
    pub uniformly_dense: bool,
    pub status: SearchStatus,
    pub nodes_explored: u64,
    /// `None` when the search ran out of budget.
    pub agree: Option<bool>,
}

impl SweepRow {
    /// Edges as `u-v` pairs joined by `;`, e.g. `1-2;1-3;2-3`.
    pub fn edges_string(&self) -> String {
        self.graph
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Every connected graph on `2..=max_n` vertices with `n - 1..=max_m` edges
/// and edge multiplicities up to `max_multiplicity`.
///
/// Vertex pairs `(i, j)`, `i < j`, are taken in lexicographic order; graphs
/// come out by `n`, then `m`, then lexicographically by multiplicity vector
/// (highest first), and each lists its edges in pair order.
pub fn enumerate_connected_graphs(
    max_n: usize,
    max_m: usize,
    max_multiplicity: usize,
    dedup: bool,
) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let mut seen = std::collections::HashSet::new();
        for m in n - 1..=max_m.min(pairs.len() * max_multiplicity) {
            let mut counts = vec![0; pairs.len()];
            fill_multiplicities(&pairs, &mut counts, 0, m, max_multiplicity, &mut |counts| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .zip(counts)
                    .flat_map(|(&p, &c)| std::iter::repeat_n(p, c))
                    .collect();
                let g = Graph::new(n, edges).expect("valid pairs");
                if !g.is_connected() {
                    return;
                }
                if dedup && !seen.insert(canonical_form(&g)) {
                    return;
                }
                out.push(g);
            });
        }
    }
    out
}

fn fill_multiplicities(
    pairs: &[(usize, usize)],
    counts: &mut [usize],
    at: usize,
    remaining: usize,
    cap: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    if at == pairs.len() {
        if remaining == 0 {
            emit(counts);
        }
        return;
    }
    if remaining > (pairs.len() - at) * cap {
        return;
    }
    for c in (0..=cap.min(remaining)).rev() {
        counts[at] = c;
        fill_multiplicities(pairs, counts, at + 1, remaining - c, cap, emit);
    }
    counts[at] = 0;
}

/// Smallest sorted edge list over all vertex relabelings; exact but `O(n!)`.
pub fn canonical_form(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.num_vertices();
    let mut perm: Vec<usize> = (0..=n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut relabelled = Vec::with_capacity(g.num_edges());
    loop {
        relabelled.clear();
        relabelled.extend(g.edges().iter().map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        }));
        relabelled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled.clone());
        }
        if !next_permutation(&mut perm[1..]) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs
        .iter()
        .rposition(|&x| x > xs[i])
        .expect("pivot has a successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

fn sweep_row(g: Graph, budget: &Budget) -> SweepRow {
    let dense = is_uniformly_dense(&g)
        .expect("sweep graphs are connected")
        .uniformly_dense;
    let outcome = find_cbo(&g, budget, true).expect("sweep graphs are searchable");
    let agree = match outcome.status {
        SearchStatus::Found => Some(dense),
        SearchStatus::Exhausted => Some(!dense),
        SearchStatus::BudgetExceeded => None,
    };
    SweepRow {
        graph: g,
        uniformly_dense: dense,
        status: outcome.status,
        nodes_explored: outcome.nodes_explored,
        agree,
    }
}

/// Runs the uniform-density test and the exhaustive search on every graph
/// from [`enumerate_connected_graphs`]. Rows keep enumeration order.
pub fn sweep_small_graphs(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    let graphs = enumerate_connected_graphs(
        config.max_n,
        config.max_m,
        config.max_multiplicity,
        config.dedup,
    );
    if config.workers <= 1 {
        return Ok(graphs
            .into_iter()
            .map(|g| sweep_row(g, &config.budget))
            .collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(pool.install(|| {
        graphs
            .into_par_iter()
            .map(|g| sweep_row(g, &config.budget))
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, theta};

    #[test]
    fn small_cases() {
        let k4 = complete(4).unwrap();
        let out = find_cbo(&k4, &Budget::unlimited(), true).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        assert!(
            verify_cbo(&k4, out.ordering.as_ref().unwrap())
                .unwrap()
                .passed
        );
        assert_eq!(out.ordering.unwrap().order()[0], 0);

        let k2 = complete(2).unwrap();
        let out = find_cbo(&k2, &Budget::unlimited(), true).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        assert_eq!(out.ordering.unwrap().order(), &[0]);

        let t1 = Graph::new(1, vec![]).unwrap();
        assert_eq!(
            find_cbo(&t1, &Budget::unlimited(), true).unwrap().status,
            SearchStatus::Found
        );

        let th = theta(&[1, 2, 5]).unwrap();
        assert_eq!(
            find_cbo(&th, &Budget::unlimited(), true).unwrap().status,
            SearchStatus::Exhausted
        );

        let tree = path(5).unwrap();
        let out = find_cbo(&tree, &Budget::unlimited(), true).unwrap();
        assert_eq!(out.ordering.unwrap(), EdgeOrdering::identity(4));
    }

    #[test]
    fn errors() {
        let split = Graph::new(3, vec![(1, 2)]).unwrap();
        assert_eq!(
            find_cbo(&split, &Budget::unlimited(), true),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn budgets() {
        let k4 = complete(4).unwrap();
        let out = find_cbo(&k4, &Budget::nodes(1), true).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert!(out.ordering.is_none());
        let out = find_cbo(
            &k4,
            &Budget {
                max_nodes: None,
                max_time: Some(Duration::ZERO),
            },
            true,
        )
        .unwrap();
        // too small to reach a time check
        assert_eq!(out.status, SearchStatus::Found);
        let th = theta(&[1, 2, 5]).unwrap();
        let full = find_cbo(&th, &Budget::unlimited(), true).unwrap();
        let out = find_cbo(&th, &Budget::nodes(full.nodes_explored - 1), true).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        let out = find_cbo(&th, &Budget::nodes(full.nodes_explored), true).unwrap();
        assert_eq!(out.status, SearchStatus::Exhausted);
    }

    #[test]
    fn workers_agree_in_deterministic_mode() {
        for g in [
            complete(4).unwrap(),
            complete(5).unwrap(),
            theta(&[1, 2, 5]).unwrap(),
            cycle(6).unwrap(),
            theta(&[2, 3, 3]).unwrap(),
        ] {
            let one = find_cbo(&g, &Budget::unlimited(), true).unwrap();
            for workers in [2, 4] {
                let many = find_cbo_with_workers(&g, &Budget::unlimited(), true, workers).unwrap();
                assert_eq!(many.status, one.status);
                assert_eq!(many.ordering, one.ordering);
                assert_eq!(many.nodes_explored, one.nodes_explored);
            }
            let loose = find_cbo_with_workers(&g, &Budget::unlimited(), false, 3).unwrap();
            assert_eq!(loose.status, one.status);
            if let Some(o) = loose.ordering {
                assert!(verify_cbo(&g, &o).unwrap().passed);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // connected labeled graphs on n vertices: 1, 4, 38, 728
        let all = enumerate_connected_graphs(5, 10, 1, false);
        let per_n: Vec<usize> = (2..=5)
            .map(|n| all.iter().filter(|g| g.num_vertices() == n).count())
            .collect();
        assert_eq!(per_n, [1, 4, 38, 728]);
        // connected unlabeled graphs: 1, 2, 6, 21
        let classes = enumerate_connected_graphs(5, 10, 1, true);
        let per_n: Vec<usize> = (2..=5)
            .map(|n| classes.iter().filter(|g| g.num_vertices() == n).count())
            .collect();
        assert_eq!(per_n, [1, 2, 6, 21]);
        // multigraphs on two vertices with up to three parallel edges
        assert_eq!(enumerate_connected_graphs(2, 5, 3, false).len(), 3);
    }

    #[test]
    fn tiny_sweeps() {
        let rows = sweep_small_graphs(&SweepConfig::new(2, 1)).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].edges_string(), "1-2");
        assert_eq!(rows[0].agree, Some(true));

        let rows: Vec<SweepRow> = sweep_small_graphs(&SweepConfig {
            dedup: true,
            ..SweepConfig::new(3, 3)
        })
        .unwrap()
        .into_iter()
        .filter(|r| r.graph.num_vertices() == 3)
        .collect();
        assert_eq!(rows.len(), 2);
        assert!(rows
            .iter()
            .all(|r| r.uniformly_dense && r.status == SearchStatus::Found));

        let rows = sweep_small_graphs(&SweepConfig {
            workers: 3,
            ..SweepConfig::new(4, 6)
        })
        .unwrap();
        assert!(rows.iter().all(|r| r.agree == Some(true)));
        let serial = sweep_small_graphs(&SweepConfig::new(4, 6)).unwrap();
        assert_eq!(rows, serial);
    }

    #[test]
    fn multigraph_sweep_reaches_parallel_edges() {
        let rows = sweep_small_graphs(&SweepConfig {
            max_multiplicity: 2,
            dedup: true,
            ..SweepConfig::new(3, 4)
        })
        .unwrap();
        assert!(rows
            .iter()
            .any(|r| r.graph.num_vertices() == 3 && r.graph.num_edges() == 4));
        assert!(rows.iter().all(|r| r.agree == Some(true)));
    }
}
