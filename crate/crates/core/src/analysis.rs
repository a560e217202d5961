//! Density conditions: uniform density, the minimum-degree bound, the theta
//! path-length inequality, and the cross-check between uniform density and
//! exhaustive search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Rational, FORMAT_TAG};
use crate::search::{find_cbo, Budget, SearchStatus};

/// A connected induced subgraph denser than the whole graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub density: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub graph_density: Rational,
    pub uniformly_dense: bool,
    pub witness: Option<Witness>,
}

/// Brute-force uniform-density test over connected induced vertex sets.
///
/// For a fixed vertex set the induced subgraph has the most edges, so it is
/// enough to look at induced subgraphs. The witness, if any, is the smallest
/// violating set, ties broken by the sorted vertex list.
pub fn is_uniformly_dense(g: &Graph) -> Result<DensityReport> {
    if g.num_vertices() < 2 {
        return Err(Error::UndefinedDensity);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let graph_density = g.density()?;
    let mut best: Option<(usize, Vec<usize>, Rational)> = None;
    for set in g.connected_induced_vertex_sets()? {
        let d = Rational::new(g.induced_edge_count(set) as i64, set.len() as i64 - 1);
        if d <= graph_density {
            continue;
        }
        let key = (set.len(), set.vertices());
        if best
            .as_ref()
            .is_none_or(|(len, verts, _)| key < (*len, verts.clone()))
        {
            best = Some((key.0, key.1, d));
        }
    }
    Ok(DensityReport {
        graph_density,
        uniformly_dense: best.is_none(),
        witness: best.map(|(_, vertices, density)| Witness { vertices, density }),
    })
}

/// `δ(G) ≥ m / (n - 1)`. Every cyclically orderable graph satisfies it.
pub fn min_degree_condition(g: &Graph) -> Result<bool> {
    let d = g.density()?;
    Ok(Rational::from_integer(g.min_degree() as i64) >= d)
}

/// For a theta graph with sorted path lengths `l_1 <= ... <= l_k`: whether
/// `(l_1 + ... + l_t) / (t - 1) >= (l_1 + ... + l_k) / (k - 1)` for every
/// `2 <= t <= k`. Lengths are sorted first.
pub fn theta_necessary_condition(lengths: &[usize]) -> Result<bool> {
    let k = lengths.len();
    if k < 2 {
        return Err(Error::InvalidParameter("need at least two paths".into()));
    }
    if lengths.contains(&0) {
        return Err(Error::InvalidParameter(
            "path lengths must be positive".into(),
        ));
    }
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    let prefix: Vec<i64> = sorted
        .iter()
        .scan(0i64, |acc, &l| {
            *acc += l as i64;
            Some(*acc)
        })
        .collect();
    let whole = Rational::new(prefix[k - 1], k as i64 - 1);
    Ok((2..=k).all(|t| Rational::new(prefix[t - 1], t as i64 - 1) >= whole))
}

/// `T_k` is cyclically orderable exactly when `k <= 4`.
///
/// Drawn orderings cover `k = 2, 3, 4`; for `k >= 5` the density of `T_k`
/// exceeds its minimum degree 2, which [`min_degree_condition`] rejects.
pub fn triangular_orderability(k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "triangular grid needs k >= 1".into(),
        ));
    }
    Ok(k <= 4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureCheck {
    pub uniformly_dense: bool,
    /// `None` if the search ran out of budget.
    pub cbo_found: Option<bool>,
}

impl ConjectureCheck {
    /// `Some(false)` flags a graph where density and orderability disagree.
    pub fn agree(&self) -> Option<bool> {
        self.cbo_found.map(|found| found == self.uniformly_dense)
    }
}

/// Pairs the uniform-density verdict with an exhaustive search.
pub fn conjecture_check(g: &Graph, budget: &Budget) -> Result<ConjectureCheck> {
    let dense = if g.num_vertices() == 1 {
        true
    } else {
        is_uniformly_dense(g)?.uniformly_dense
    };
    let outcome = find_cbo(g, budget, true)?;
    let cbo_found = match outcome.status {
        SearchStatus::Found => Some(true),
        SearchStatus::Exhausted => Some(false),
        SearchStatus::BudgetExceeded => None,
    };
    Ok(ConjectureCheck {
        uniformly_dense: dense,
        cbo_found,
    })
}

/// The `analyze` report: density as `p/q`, uniform density with witness,
/// and the minimum-degree verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub format: String,
    pub num_vertices: usize,
    pub num_edges: usize,
    pub density: Rational,
    pub uniformly_dense: bool,
    pub witness: Option<Vec<usize>>,
    pub witness_density: Option<Rational>,
    pub min_degree: usize,
    pub min_degree_ok: bool,
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let report = is_uniformly_dense(g)?;
    Ok(AnalysisReport {
        format: FORMAT_TAG.to_owned(),
        num_vertices: g.num_vertices(),
        num_edges: g.num_edges(),
        density: report.graph_density,
        uniformly_dense: report.uniformly_dense,
        witness_density: report.witness.as_ref().map(|w| w.density),
        witness: report.witness.map(|w| w.vertices),
        min_degree: g.min_degree(),
        min_degree_ok: min_degree_condition(g)?,
    })
}
