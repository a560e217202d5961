//! Explicit CBO constructions. Every builder runs its output through
//! [`verify_cbo`] and reports a [`Error::ClaimViolation`] instead of
//! returning an ordering that fails.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{circulant, polygon_chain_layout, series_compose, theta, theta_edge_index};
use crate::graph::{Graph, Rational};
use crate::ordering::{verify_cbo, EdgeOrdering};

/// A graph together with an ordering of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub ordering: EdgeOrdering,
}

fn self_check(name: &str, graph: Graph, ordering: EdgeOrdering) -> Result<Construction> {
    let report = verify_cbo(&graph, &ordering)?;
    match report.first_failure {
        None => Ok(Construction { graph, ordering }),
        Some(failure) => Err(Error::ClaimViolation {
            construction: name.to_owned(),
            failure,
        }),
    }
}

fn require_cbo(g: &Graph, o: &EdgeOrdering) -> Result<()> {
    match verify_cbo(g, o)?.first_failure {
        None => Ok(()),
        Some(failure) => Err(Error::NotACbo(failure)),
    }
}

/// Ranks `(j - 1) k + i` for edge `j` of path `i` of the theta graph with `k`
/// paths of length `l`: the paths take turns, one edge each.
pub fn theta_uniform_cbo(k: usize, l: usize) -> Result<Construction> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidParameter(
            "theta needs k >= 1 and l >= 1".into(),
        ));
    }
    let lengths = vec![l; k];
    let graph = theta(&lengths)?;
    let mut ranks = vec![0; k * l];
    for i in 1..=k {
        for j in 1..=l {
            ranks[theta_edge_index(&lengths, i, j)] = (j - 1) * k + i;
        }
    }
    let ordering = EdgeOrdering::from_ranks(&ranks)?;
    self_check("theta_uniform_cbo", graph, ordering)
}

/// Alternates the two orderings: `g`'s edge of rank `r` gets `2r - 1`,
/// `h`'s gets `2r`. Both graphs must have the same vertex and edge counts.
pub fn series_cbo_equal(
    g: &Graph,
    og: &EdgeOrdering,
    h: &Graph,
    oh: &EdgeOrdering,
    u: usize,
    v: usize,
) -> Result<Construction> {
    if g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() {
        return Err(Error::Precondition(format!(
            "sizes differ: ({}, {}) vs ({}, {}) vertices/edges",
            g.num_vertices(),
            g.num_edges(),
            h.num_vertices(),
            h.num_edges()
        )));
    }
    require_cbo(g, og)?;
    require_cbo(h, oh)?;
    let graph = series_compose(g, u, h, v)?;
    let m = g.num_edges();
    let mut ranks: Vec<usize> = og.ranks().into_iter().map(|r| 2 * r - 1).collect();
    ranks.extend(oh.ranks().into_iter().map(|r| 2 * r));
    debug_assert_eq!(ranks.len(), 2 * m);
    self_check("series_cbo_equal", graph, EdgeOrdering::from_ranks(&ranks)?)
}

/// `count` consecutive rank intervals of `size` ranks each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockPartition {
    pub count: usize,
    pub size: usize,
}

impl BlockPartition {
    /// Splits `m` ranks into `count` equal blocks.
    pub fn new(m: usize, count: usize) -> Result<Self> {
        if count == 0 || !m.is_multiple_of(count) {
            return Err(Error::Precondition(format!(
                "{m} ranks do not split into {count} equal blocks"
            )));
        }
        Ok(BlockPartition {
            count,
            size: m / count,
        })
    }

    /// 1-based ranks of block `i` (0-based).
    pub fn ranks(&self, i: usize) -> RangeInclusive<usize> {
        i * self.size + 1..=(i + 1) * self.size
    }

    /// Edges of block `i` of `o`, in rank order.
    pub fn block<'o>(&self, o: &'o EdgeOrdering, i: usize) -> &'o [usize] {
        &o.order()[i * self.size..(i + 1) * self.size]
    }
}

/// Splits a common density `s/t` into its block count `s` and checks every
/// part's `n - 1` is a multiple of `t`.
fn common_density(parts: &[&Graph]) -> Result<Rational> {
    let d = parts[0].density()?;
    for g in &parts[1..] {
        let dg = g.density()?;
        if dg != d {
            return Err(Error::Precondition(format!(
                "densities differ: {d} vs {dg}"
            )));
        }
    }
    Ok(d)
}

/// Interleaves blocks `P_1, Q_1, ..., P_s, Q_s`, where `d = s/t` is the
/// common density, `P_i` are the `s` blocks of `og` (size `(n_g - 1)/t`)
/// and `Q_i` those of `oh` (size `(n_h - 1)/t`).
pub fn series_cbo_density(
    g: &Graph,
    og: &EdgeOrdering,
    h: &Graph,
    oh: &EdgeOrdering,
    u: usize,
    v: usize,
) -> Result<Construction> {
    let d = common_density(&[g, h])?;
    require_cbo(g, og)?;
    require_cbo(h, oh)?;
    let s = d.numerator() as usize;
    let p = BlockPartition::new(g.num_edges(), s)?;
    let q = BlockPartition::new(h.num_edges(), s)?;
    let t = d.denominator() as usize;
    assert_eq!(p.size * t, g.num_vertices() - 1);
    assert_eq!(q.size * t, h.num_vertices() - 1);

    let graph = series_compose(g, u, h, v)?;
    let offset = g.num_edges();
    let mut order = Vec::with_capacity(graph.num_edges());
    for i in 0..s {
        order.extend_from_slice(p.block(og, i));
        order.extend(q.block(oh, i).iter().map(|&e| e + offset));
    }
    self_check("series_cbo_density", graph, EdgeOrdering::new(order)?)
}

/// One ingredient of [`series_cbo_multi`].
#[derive(Debug, Clone)]
pub struct SeriesPart {
    pub graph: Graph,
    pub ordering: EdgeOrdering,
    /// `(u, v)`: glue this part's vertex `v` onto vertex `u` of the graph
    /// composed so far. Ignored for the first part; defaults to `(1, 1)`.
    pub glue: Option<(usize, usize)>,
}

/// Composes all parts left to right and interleaves their orderings block
/// by block, round-robin, one block per part per round.
pub fn series_cbo_multi(parts: &[SeriesPart]) -> Result<Construction> {
    if parts.is_empty() {
        return Err(Error::Precondition("no parts to compose".into()));
    }
    let graphs: Vec<&Graph> = parts.iter().map(|p| &p.graph).collect();
    let d = common_density(&graphs)?;
    let s = d.numerator() as usize;
    let mut partitions = Vec::with_capacity(parts.len());
    for part in parts {
        require_cbo(&part.graph, &part.ordering)?;
        partitions.push(BlockPartition::new(part.graph.num_edges(), s)?);
    }

    let mut graph = parts[0].graph.clone();
    let mut offsets = vec![0];
    for part in &parts[1..] {
        offsets.push(graph.num_edges());
        let (u, v) = part.glue.unwrap_or((1, 1));
        graph = series_compose(&graph, u, &part.graph, v)?;
    }

    let mut order = Vec::with_capacity(graph.num_edges());
    for i in 0..s {
        for ((part, blocks), &offset) in parts.iter().zip(&partitions).zip(&offsets) {
            order.extend(blocks.block(&part.ordering, i).iter().map(|&e| e + offset));
        }
    }
    self_check("series_cbo_multi", graph, EdgeOrdering::new(order)?)
}

/// Numbers a chain of `t` `g`-gons.
///
/// Each polygon has `g - 2` sides that are neither shared nor an end edge
/// matching a shared side; call their positions (in the polygon's walk,
/// skipping the two shared positions) classes `1..=g-2`. Class `c` takes
/// ranks `(c - 1) t + 1 ..= c t`, left to right. The remaining `t + 1`
/// edges (first polygon's end edge, the `t - 1` shared edges, last
/// polygon's end edge) follow left to right.
pub fn polygon_chain_cbo(g: usize, t: usize) -> Result<Construction> {
    let chain = polygon_chain_layout(g, t)?;
    let right = chain.right_side();
    let mut ranks = vec![0; chain.graph.num_edges()];
    let classes = (1..g).filter(|&side| side != right);
    for (c, side) in classes.enumerate() {
        for (p, sides) in chain.sides.iter().enumerate() {
            ranks[sides[side]] = c * t + p + 1;
        }
    }
    let base = t * (g - 2);
    ranks[chain.sides[0][0]] = base + 1;
    for (p, sides) in chain.sides.iter().enumerate() {
        ranks[sides[right]] = base + p + 2;
    }
    let ordering = EdgeOrdering::from_ranks(&ranks)?;
    self_check(
        &format!("polygon_chain_cbo({g}, {t})"),
        chain.graph,
        ordering,
    )
}

fn check_circulant_params(n: usize, x: usize) -> Result<()> {
    if x <= 1 || 2 * x >= n {
        return Err(Error::InvalidParameter(format!(
            "need 1 < x < n/2, got n = {n}, x = {x}"
        )));
    }
    Ok(())
}

/// The alternating candidate for `Ci_n(1, x)` with offsets `(a, b)`: the
/// chord leaving `v_{((i + a) mod n) + 1}` gets rank `2i - 1` and the cycle
/// edge leaving `v_{((j + b) mod n) + 1}` gets rank `2j`.
pub fn circulant_alternating_candidate(
    n: usize,
    x: usize,
    a: usize,
    b: usize,
) -> Result<EdgeOrdering> {
    check_circulant_params(n, x)?;
    // cycle edges occupy indices 0..n, chords n..2n (edge leaving v_k at offset k - 1)
    let mut order = Vec::with_capacity(2 * n);
    for i in 1..=n {
        order.push(n + (i + a) % n);
        order.push((i + b) % n);
    }
    EdgeOrdering::new(order)
}

/// Tries every offset pair `(a, b)` in lexicographic order and returns the
/// first alternating candidate that verifies, or `None`.
pub fn circulant_offset_cbo(n: usize, x: usize) -> Result<Option<(Construction, (usize, usize))>> {
    check_circulant_params(n, x)?;
    let graph = circulant(n, &[1, x])?;
    let found = (0..n * n).into_par_iter().find_map_first(|code| {
        let (a, b) = (code / n, code % n);
        let o = circulant_alternating_candidate(n, x, a, b).ok()?;
        verify_cbo(&graph, &o).ok()?.passed.then_some((o, (a, b)))
    });
    Ok(found.map(|(ordering, offsets)| (Construction { graph, ordering }, offsets)))
}

/// Which pattern produced a circulant ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CirculantPattern {
    /// Plain alternation with offsets `(a, b)`, see [`circulant_alternating_candidate`].
    Offsets { a: usize, b: usize },
    /// A rotation-symmetric ordering, see [`circulant_symmetric_candidate`].
    Symmetric {
        stride: usize,
        period: Vec<PeriodSlot>,
    },
}

/// One slot of the repeating block of a [`CirculantPattern::Symmetric`] ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodSlot {
    pub chord: bool,
    /// 0-based vertex the edge leaves from in the first block.
    pub vertex: usize,
}

/// Candidate budget for the symmetric fallback of [`circulant_alternating_cbo`].
pub const SYMMETRIC_CANDIDATE_BUDGET: u64 = 2_000_000;

/// The ordering of `Ci_n(1, x)` that repeats `period` under the rotation
/// `v -> v + stride`: rank `k * p + t + 1` (with `p = period.len()`) holds
/// the image of slot `t` under `k` rotations.
///
/// With `d = gcd(stride, n)`, `period` must hold `2d` edges, one from each
/// orbit of the rotation (chords and cycle edges leaving vertices `= c mod d`).
pub fn circulant_symmetric_candidate(
    n: usize,
    x: usize,
    stride: usize,
    period: &[PeriodSlot],
) -> Result<EdgeOrdering> {
    check_circulant_params(n, x)?;
    if stride == 0 || stride >= n {
        return Err(Error::InvalidParameter(format!(
            "stride {stride} outside 1..{n}"
        )));
    }
    let d = gcd(stride, n);
    if period.len() != 2 * d {
        return Err(Error::InvalidParameter(format!(
            "period must hold {} edges",
            2 * d
        )));
    }
    let mut order = Vec::with_capacity(2 * n);
    for k in 0..n / d {
        for slot in period {
            let v = (slot.vertex + k * stride) % n;
            order.push(if slot.chord { n + v } else { v });
        }
    }
    EdgeOrdering::new(order)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Searches rotation-symmetric orderings for every stride other than 1,
/// ordered by `gcd(stride, n)` then stride; within a stride, by the order
/// of orbits in the block, then by representatives (slot 0 pinned to the
/// smallest vertex of its orbit, which loses nothing up to rotation).
fn circulant_symmetric_search(
    graph: &Graph,
    n: usize,
    x: usize,
) -> Result<Option<(EdgeOrdering, CirculantPattern)>> {
    let mut strides: Vec<usize> = (2..n).collect();
    strides.sort_by_key(|&s| (gcd(s, n), s));
    let mut spent = 0u64;
    for stride in strides {
        let d = gcd(stride, n);
        let q = n / d;
        let slots = 2 * d;
        // orbit o < d: chords leaving vertices = o mod d; o >= d: cycle edges, class o - d
        let mut orbits: Vec<usize> = (0..slots).collect();
        loop {
            let mut reps = vec![0usize; slots];
            loop {
                spent += 1;
                if spent > SYMMETRIC_CANDIDATE_BUDGET {
                    return Ok(None);
                }
                let period: Vec<PeriodSlot> = orbits
                    .iter()
                    .zip(&reps)
                    .map(|(&o, &r)| PeriodSlot {
                        chord: o < d,
                        vertex: (o % d + r * stride) % n,
                    })
                    .collect();
                let o = circulant_symmetric_candidate(n, x, stride, &period)?;
                if verify_cbo(graph, &o)?.passed {
                    return Ok(Some((o, CirculantPattern::Symmetric { stride, period })));
                }
                // odometer over reps[1..]
                let Some(t) = (1..slots).find(|&t| reps[t] + 1 < q) else {
                    break;
                };
                reps[t] += 1;
                reps[1..t].fill(0);
            }
            if !next_permutation(&mut orbits) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs
        .iter()
        .rposition(|&v| v > xs[i])
        .expect("pivot has a successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// A CBO of `Ci_n(1, x)` built from alternating patterns.
///
/// First the offset pairs of [`circulant_offset_cbo`]; when none of those
/// verifies (e.g. `Ci_11(1,4)`, `Ci_13(1,4)`, `Ci_15(1,4)`), rotation-symmetric
/// orderings under the other strides, within [`SYMMETRIC_CANDIDATE_BUDGET`]
/// candidates. `None` if both come up empty.
pub fn circulant_alternating_cbo(
    n: usize,
    x: usize,
) -> Result<Option<(Construction, CirculantPattern)>> {
    if let Some((c, (a, b))) = circulant_offset_cbo(n, x)? {
        return Ok(Some((c, CirculantPattern::Offsets { a, b })));
    }
    let graph = circulant(n, &[1, x])?;
    Ok(circulant_symmetric_search(&graph, n, x)?
        .map(|(ordering, pattern)| (Construction { graph, ordering }, pattern)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, polygon_chain, windmill};
    use crate::fixtures::fixture_by_name;

    fn k3_cbo() -> (Graph, EdgeOrdering) {
        (complete(3).unwrap(), EdgeOrdering::identity(3))
    }

    #[test]
    fn theta_uniform_matches_drawn_labeling() {
        let c = theta_uniform_cbo(3, 5).unwrap();
        let (g, o) = fixture_by_name("Theta555").unwrap();
        assert_eq!(c.graph, g);
        assert_eq!(c.ordering, o);
        let lengths = [5, 5, 5];
        let path1: Vec<usize> = (1..=5)
            .map(|j| c.ordering.ranks()[theta_edge_index(&lengths, 1, j)])
            .collect();
        assert_eq!(path1, [1, 4, 7, 10, 13]);
    }

    #[test]
    fn theta_uniform_small() {
        assert_eq!(
            theta_uniform_cbo(1, 3).unwrap().ordering,
            EdgeOrdering::identity(3)
        );
        let c = theta_uniform_cbo(2, 2).unwrap();
        // path 1 = edges 0,1; path 2 = edges 2,3
        assert_eq!(c.ordering.ranks(), vec![1, 3, 2, 4]);
        for k in 1..=6 {
            for l in 1..=6 {
                let c = theta_uniform_cbo(k, l).unwrap();
                let lengths = vec![l; k];
                for i in 1..=k {
                    for j in 1..=l {
                        assert_eq!(
                            c.ordering.ranks()[theta_edge_index(&lengths, i, j)],
                            (j - 1) * k + i
                        );
                    }
                }
            }
        }
        assert!(theta_uniform_cbo(0, 2).is_err());
    }

    #[test]
    fn series_equal_examples() {
        let (k3, o) = k3_cbo();
        let c = series_cbo_equal(&k3, &o, &k3, &o, 1, 1).unwrap();
        assert_eq!(c.ordering.ranks(), vec![1, 3, 5, 2, 4, 6]);

        let k2 = complete(2).unwrap();
        let one = EdgeOrdering::identity(1);
        let c = series_cbo_equal(&k2, &one, &k2, &one, 2, 1).unwrap();
        assert_eq!(c.ordering.order(), &[0, 1]);

        let (t2, ot2) = fixture_by_name("T2").unwrap();
        assert!(series_cbo_equal(&t2, &ot2, &t2, &ot2, 1, 1).is_ok());

        assert!(matches!(
            series_cbo_equal(&k3, &o, &k2, &one, 1, 1),
            Err(Error::Precondition(_))
        ));
        let k4 = complete(4).unwrap();
        let bad = EdgeOrdering::new(vec![0, 1, 3, 2, 4, 5]).unwrap();
        assert!(matches!(
            series_cbo_equal(&k4, &bad, &k4, &bad, 1, 1),
            Err(Error::NotACbo(_))
        ));
    }

    #[test]
    fn series_equal_restricts_to_inputs() {
        let (g, og) = fixture_by_name("T3").unwrap();
        let c = series_cbo_equal(&g, &og, &g, &og.rotate(4), 3, 6).unwrap();
        let ranks = c.ordering.ranks();
        let m = g.num_edges();
        let back_g: Vec<usize> = ranks[..m].iter().map(|r| r.div_ceil(2)).collect();
        let back_h: Vec<usize> = ranks[m..].iter().map(|r| r / 2).collect();
        assert_eq!(back_g, og.ranks());
        assert_eq!(back_h, og.rotate(4).ranks());
    }

    #[test]
    fn series_density_blocks() {
        let (k3, ok3) = k3_cbo();
        let th = theta_uniform_cbo(3, 2).unwrap();
        let c = series_cbo_density(&k3, &ok3, &th.graph, &th.ordering, 1, 1).unwrap();
        assert_eq!(c.graph.num_edges(), 9);
        // P1 Q1 P2 Q2 P3 Q3 with |P| = 1, |Q| = 2
        let order = c.ordering.order();
        let p: Vec<usize> = [0, 3, 6].iter().map(|&i| order[i]).collect();
        let q: Vec<usize> = [1, 2, 4, 5, 7, 8].iter().map(|&i| order[i] - 3).collect();
        assert_eq!(p, ok3.order());
        assert_eq!(q, th.ordering.order());

        // p1 = p2 = 1 coincides with the plain alternation
        let eq = series_cbo_equal(&k3, &ok3, &k3, &ok3, 2, 3).unwrap();
        let dens = series_cbo_density(&k3, &ok3, &k3, &ok3, 2, 3).unwrap();
        assert_eq!(eq, dens);

        let k2 = complete(2).unwrap();
        let one = EdgeOrdering::identity(1);
        let c = series_cbo_density(&k2, &one, &k2, &one, 1, 1).unwrap();
        assert_eq!(c.ordering.order(), &[0, 1]);

        let c4 = crate::families::cycle(4).unwrap();
        assert!(matches!(
            series_cbo_density(&k3, &ok3, &c4, &EdgeOrdering::identity(4), 1, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn block_partition() {
        let p = BlockPartition::new(9, 3).unwrap();
        assert_eq!(p.ranks(1), 4..=6);
        assert!(BlockPartition::new(9, 2).is_err());
    }

    #[test]
    fn series_multi_windmills() {
        let (k3, ok3) = k3_cbo();
        let part = |g: &Graph, o: &EdgeOrdering| SeriesPart {
            graph: g.clone(),
            ordering: o.clone(),
            glue: None,
        };
        for t in 1..=4 {
            let parts = vec![part(&k3, &ok3); t];
            let c = series_cbo_multi(&parts).unwrap();
            assert_eq!(c.graph, windmill(3, t).unwrap());
        }
        let k4 = complete(4).unwrap();
        let found =
            crate::search::find_cbo(&k4, &crate::search::Budget::unlimited(), true).unwrap();
        let ok4 = found.ordering.unwrap();
        let c = series_cbo_multi(&[part(&k4, &ok4), part(&k4, &ok4)]).unwrap();
        assert_eq!(c.graph, windmill(4, 2).unwrap());

        // two parts reproduce the pairwise construction
        let th = theta_uniform_cbo(3, 2).unwrap();
        let mut second = part(&th.graph, &th.ordering);
        second.glue = Some((2, 4));
        let multi = series_cbo_multi(&[part(&k3, &ok3), second]).unwrap();
        let pair = series_cbo_density(&k3, &ok3, &th.graph, &th.ordering, 2, 4).unwrap();
        assert_eq!(multi, pair);
    }

    #[test]
    fn polygon_chain_matches_drawing() {
        let c = polygon_chain_cbo(5, 5).unwrap();
        let (g, o) = fixture_by_name("Pentagon5").unwrap();
        assert_eq!(c.graph, g);
        assert_eq!(c.ordering, o);
        let c = polygon_chain_cbo(4, 1).unwrap();
        assert_eq!(c.graph, polygon_chain(4, 1).unwrap());
        let c = polygon_chain_cbo(3, 2).unwrap();
        assert_eq!(c.ordering.len(), 5);
    }

    #[test]
    fn circulant_fixtures_are_candidates() {
        for (name, n) in [("Ci9_14", 9), ("Ci10_14", 10), ("Ci12_14", 12)] {
            let (_, fixture) = fixture_by_name(name).unwrap();
            let hit = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| circulant_alternating_candidate(n, 4, a, b).unwrap() == fixture);
            assert!(hit.is_some(), "{name} is not an alternating candidate");
        }
        assert_eq!(
            circulant_alternating_candidate(9, 4, 8, 4).unwrap(),
            fixture_by_name("Ci9_14").unwrap().1
        );
    }

    #[test]
    fn circulant_offsets() {
        let offsets: Vec<Option<(usize, usize)>> = (9..=16)
            .map(|n| circulant_offset_cbo(n, 4).unwrap().map(|(_, ab)| ab))
            .collect();
        assert_eq!(
            offsets,
            [
                Some((0, 5)),
                Some((0, 5)),
                None,
                Some((0, 6)),
                None,
                Some((0, 7)),
                None,
                Some((0, 8))
            ]
        );
        assert!(circulant_offset_cbo(8, 4).is_err());
        assert!(circulant_offset_cbo(9, 1).is_err());
    }

    #[test]
    fn circulant_fallback() {
        let (c, pattern) = circulant_alternating_cbo(9, 4).unwrap().unwrap();
        assert_eq!(pattern, CirculantPattern::Offsets { a: 0, b: 5 });
        assert!(verify_cbo(&c.graph, &c.ordering).unwrap().passed);
        for n in [11, 13, 15] {
            let (c, pattern) = circulant_alternating_cbo(n, 4).unwrap().expect("found");
            assert!(matches!(pattern, CirculantPattern::Symmetric { .. }));
            assert!(verify_cbo(&c.graph, &c.ordering).unwrap().passed);
        }
    }

    #[test]
    fn symmetric_candidates_extend_offsets() {
        // stride 1 with a chord then a cycle edge is the plain alternation
        let (n, x) = (10, 4);
        for (a, b) in [(0, 5), (3, 7), (9, 9)] {
            let period = [
                PeriodSlot {
                    chord: true,
                    vertex: (1 + a) % n,
                },
                PeriodSlot {
                    chord: false,
                    vertex: (1 + b) % n,
                },
            ];
            assert_eq!(
                circulant_symmetric_candidate(n, x, 1, &period).unwrap(),
                circulant_alternating_candidate(n, x, a, b).unwrap()
            );
        }
        assert!(circulant_symmetric_candidate(
            10,
            4,
            2,
            &[PeriodSlot {
                chord: true,
                vertex: 0
            }; 2]
        )
        .is_err());
    }
}
