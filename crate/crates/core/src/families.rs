//! Generators for the graph families studied here, each with a frozen
//! vertex labeling and edge order so that drawn labelings can be written
//! down as plain tables.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `K_n` with edges in lexicographic order.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let edges = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, edges)
}

/// `C_n`: edges `(1,2), (2,3), ..., (n,1)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    let edges = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::new(n, edges)
}

/// Path on `n` vertices, `1 - 2 - ... - n`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)).collect())
}

/// Triangular grid `T_k` with `k` levels.
///
/// Vertices are numbered row by row from the apex (vertex 1), left to right.
/// Edges are listed level by level: the two downward edges of each vertex in
/// row `r`, then the horizontal edges of row `r + 1`.
pub fn triangular_grid(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("triangular grid needs k >= 1"));
    }
    let label = |row: usize, col: usize| row * (row - 1) / 2 + col;
    let mut edges = Vec::with_capacity(3 * k * (k - 1) / 2);
    for row in 1..k {
        for col in 1..=row {
            edges.push((label(row, col), label(row + 1, col)));
            edges.push((label(row, col), label(row + 1, col + 1)));
        }
        for col in 1..=row {
            edges.push((label(row + 1, col), label(row + 1, col + 1)));
        }
    }
    Graph::new(k * (k + 1) / 2, edges)
}

/// Generalized theta graph: hubs 1 and 2 joined by internally disjoint
/// paths of the given lengths, in the given order.
///
/// Internal vertices are numbered from 3 upwards, path by path, walking from
/// hub 1 towards hub 2. Edge `j` (1-based) of path `i` (1-based) has index
/// [`theta_edge_index`]`(lengths, i, j)`.
pub fn theta(lengths: &[usize]) -> Result<Graph> {
    if lengths.is_empty() {
        return Err(invalid("theta graph needs at least one path"));
    }
    if lengths.contains(&0) {
        return Err(invalid("theta path lengths must be positive"));
    }
    let mut next = 3;
    let mut edges = Vec::with_capacity(lengths.iter().sum());
    for &len in lengths {
        let mut prev = 1;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 2));
    }
    Graph::new(next - 1, edges)
}

/// Edge index of the `j`-th edge (from hub 1) on path `i` of [`theta`].
pub fn theta_edge_index(lengths: &[usize], i: usize, j: usize) -> usize {
    debug_assert!(i >= 1 && j >= 1 && j <= lengths[i - 1]);
    lengths[..i - 1].iter().sum::<usize>() + j - 1
}

/// Circulant graph `Ci_n(steps)`: `v_i` joined to `v_{i+x}` (indices mod n).
///
/// Edges are grouped by step in the given order; within a step, the edge
/// leaving `v_i` has offset `i - 1`.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    if steps.is_empty() {
        return Err(invalid("circulant needs at least one step"));
    }
    for (pos, &x) in steps.iter().enumerate() {
        if x == 0 || 2 * x >= n {
            return Err(invalid(format!(
                "circulant step {x} must satisfy 1 <= x < n/2 = {n}/2"
            )));
        }
        if steps[..pos].contains(&x) {
            return Err(invalid(format!("circulant step {x} repeated")));
        }
    }
    let edges = steps
        .iter()
        .flat_map(|&x| (1..=n).map(move |i| (i, (i - 1 + x) % n + 1)))
        .collect();
    Graph::new(n, edges)
}

/// Disjoint union of `g` and `h` with `h`'s vertex `v` identified with `g`'s `u`.
///
/// `g` keeps its labels; the other vertices of `h` are shifted above
/// `g.num_vertices()` preserving their relative order. `g`'s edges come first.
pub fn series_compose(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    h.check_vertex(v)?;
    let n_g = g.num_vertices();
    let relabel = |w: usize| match w.cmp(&v) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Less => n_g + w,
        std::cmp::Ordering::Greater => n_g + w - 1,
    };
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(a, b)| (relabel(a), relabel(b))));
    Graph::new(n_g + h.num_vertices() - 1, edges)
}

/// `Wd(k, t)`: `t` copies of `K_k` sharing vertex 1.
pub fn windmill(k: usize, t: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid("windmill needs k >= 2"));
    }
    if t == 0 {
        return Err(invalid("windmill needs t >= 1"));
    }
    let blade = complete(k)?;
    let mut g = blade.clone();
    for _ in 1..t {
        g = series_compose(&g, 1, &blade, 1)?;
    }
    Ok(g)
}

/// Friendship graph `Fd_t = Wd(3, t)`.
pub fn friendship(t: usize) -> Result<Graph> {
    windmill(3, t)
}

/// A chain of `t` polygons with `g` sides, consecutive ones sharing an edge.
#[derive(Debug, Clone)]
pub struct PolygonChain {
    pub graph: Graph,
    /// `sides[p][s]` is the edge index of side `s` of polygon `p` (both 0-based).
    ///
    /// Side 0 of polygon `p > 0` is the edge shared with polygon `p - 1`; side
    /// [`PolygonChain::right_side`] is shared with polygon `p + 1`. For the end
    /// polygons these two sides are the "end edges" matching a shared edge.
    pub sides: Vec<Vec<usize>>,
    pub sides_per_polygon: usize,
}

impl PolygonChain {
    /// Position of the side shared with the next polygon: `ceil(g / 2)`,
    /// the side opposite (or nearly opposite) side 0.
    pub fn right_side(&self) -> usize {
        self.sides_per_polygon.div_ceil(2)
    }
}

/// Builds a chain of `t` `g`-gons.
///
/// Polygon `p` is walked as `w_0, w_1, ..., w_{g-1}` with side `s` joining
/// `w_s` and `w_{s+1}`. The first polygon is `1, 2, ..., g`. Polygon `p + 1`
/// starts with the endpoints `w_r, w_{r+1}` of its predecessor's right side
/// `r = ceil(g/2)` and continues through `g - 2` fresh vertices numbered in
/// walk order. For pentagons this is the familiar `v_1 .. v_17` layout of a
/// five-pentagon strip, with shared edges `(4,5), (7,8), (10,11), (13,14)`.
pub fn polygon_chain_layout(g: usize, t: usize) -> Result<PolygonChain> {
    if g < 3 {
        return Err(invalid("polygon chain needs g >= 3"));
    }
    if t == 0 {
        return Err(invalid("polygon chain needs t >= 1"));
    }
    let right = g.div_ceil(2);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut sides = Vec::with_capacity(t);
    let mut walk: Vec<usize> = (1..=g).collect();
    let mut shared: Option<usize> = None;
    let mut next_vertex = g + 1;
    for p in 0..t {
        if p > 0 {
            let (a, b) = (walk[right], walk[(right + 1) % g]);
            walk = vec![a, b];
            walk.extend(next_vertex..next_vertex + g - 2);
            next_vertex += g - 2;
        }
        let mut these = Vec::with_capacity(g);
        for s in 0..g {
            if s == 0 {
                if let Some(e) = shared {
                    these.push(e);
                    continue;
                }
            }
            these.push(edges.len());
            edges.push((walk[s], walk[(s + 1) % g]));
        }
        shared = Some(these[right]);
        sides.push(these);
    }
    let graph = Graph::new(next_vertex - 1, edges)?;
    Ok(PolygonChain {
        graph,
        sides,
        sides_per_polygon: g,
    })
}

pub fn polygon_chain(g: usize, t: usize) -> Result<Graph> {
    polygon_chain_layout(g, t).map(|c| c.graph)
}

/// Family names accepted by [`FamilySpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Triangular,
    Theta,
    Circulant,
    Complete,
    Cycle,
    Windmill,
    Friendship,
    PolygonChain,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Triangular => "triangular",
            Family::Theta => "theta",
            Family::Circulant => "circulant",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Windmill => "windmill",
            Family::Friendship => "friendship",
            Family::PolygonChain => "polygon",
        }
    }
}

pub const FAMILY_GRAMMAR: &str = "triangular:k | theta:l1,l2,... | circulant:n:x1,x2,... | \
windmill:k,t | friendship:t | polygon:g,t | complete:n | cycle:n";

/// A parsed family descriptor such as `theta:1,2,5` or `circulant:9:1,4`.
///
/// For circulants the first parameter is `n` and the rest are the steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        match self.family {
            Family::Triangular => triangular_grid(p[0]),
            Family::Theta => theta(p),
            Family::Circulant => circulant(p[0], &p[1..]),
            Family::Complete => complete(p[0]),
            Family::Cycle => cycle(p[0]),
            Family::Windmill => windmill(p[0], p[1]),
            Family::Friendship => friendship(p[0]),
            Family::PolygonChain => polygon_chain(p[0], p[1]),
        }
    }
}

fn parse_list(spec: &str, s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            let v: usize = x.trim().parse().map_err(|_| Error::FamilySpec {
                spec: spec.to_owned(),
                reason: format!("`{x}` is not a positive integer"),
            })?;
            if v == 0 {
                return Err(Error::FamilySpec {
                    spec: spec.to_owned(),
                    reason: "parameters must be positive".into(),
                });
            }
            Ok(v)
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let err = |reason: &str| Error::FamilySpec {
            spec: spec.to_owned(),
            reason: reason.to_owned(),
        };
        let (name, rest) = spec
            .split_once(':')
            .ok_or_else(|| err("expected `family:params`"))?;
        let (family, params) = match name.trim() {
            "triangular" => (Family::Triangular, parse_list(spec, rest)?),
            "theta" => (Family::Theta, parse_list(spec, rest)?),
            "circulant" => {
                let (n, steps) = rest
                    .split_once(':')
                    .ok_or_else(|| err("expected `circulant:n:x1,x2,...`"))?;
                let mut params = parse_list(spec, n)?;
                if params.len() != 1 {
                    return Err(err("circulant takes a single vertex count"));
                }
                params.extend(parse_list(spec, steps)?);
                (Family::Circulant, params)
            }
            "complete" => (Family::Complete, parse_list(spec, rest)?),
            "cycle" => (Family::Cycle, parse_list(spec, rest)?),
            "windmill" => (Family::Windmill, parse_list(spec, rest)?),
            "friendship" => (Family::Friendship, parse_list(spec, rest)?),
            "polygon" => (Family::PolygonChain, parse_list(spec, rest)?),
            _ => return Err(err("unknown family")),
        };
        let arity_ok = match family {
            Family::Triangular | Family::Complete | Family::Cycle | Family::Friendship => {
                params.len() == 1
            }
            Family::Windmill | Family::PolygonChain => params.len() == 2,
            Family::Theta => !params.is_empty(),
            Family::Circulant => params.len() >= 2,
        };
        if !arity_ok {
            return Err(err("wrong number of parameters"));
        }
        let parsed = FamilySpec { family, params };
        // range checks live in the generators
        parsed.build().map_err(|e| err(&e.to_string()))?;
        Ok(parsed)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.family {
            Family::Circulant => write!(
                f,
                "circulant:{}:{}",
                self.params[0],
                join(&self.params[1..])
            ),
            fam => write!(f, "{}:{}", fam.name(), join(&self.params)),
        }
    }
}
