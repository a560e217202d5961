//! Hand-drawn cyclic base orderings, transcribed edge by edge.
//!
//! Each table lists `(u, v, rank)` under the canonical labeling of the
//! matching generator in [`crate::families`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{circulant, polygon_chain, theta, triangular_grid};
use crate::graph::Graph;
use crate::ordering::EdgeOrdering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    T2,
    T3,
    T4,
    Theta555,
    Ci9_14,
    Ci10_14,
    Ci12_14,
    Pentagon5,
}

impl Fixture {
    pub const ALL: [Fixture; 8] = [
        Fixture::T2,
        Fixture::T3,
        Fixture::T4,
        Fixture::Theta555,
        Fixture::Ci9_14,
        Fixture::Ci10_14,
        Fixture::Ci12_14,
        Fixture::Pentagon5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::T2 => "T2",
            Fixture::T3 => "T3",
            Fixture::T4 => "T4",
            Fixture::Theta555 => "Theta555",
            Fixture::Ci9_14 => "Ci9_14",
            Fixture::Ci10_14 => "Ci10_14",
            Fixture::Ci12_14 => "Ci12_14",
            Fixture::Pentagon5 => "Pentagon5",
        }
    }

    fn graph(self) -> Result<Graph> {
        match self {
            Fixture::T2 => triangular_grid(2),
            Fixture::T3 => triangular_grid(3),
            Fixture::T4 => triangular_grid(4),
            Fixture::Theta555 => theta(&[5, 5, 5]),
            Fixture::Ci9_14 => circulant(9, &[1, 4]),
            Fixture::Ci10_14 => circulant(10, &[1, 4]),
            Fixture::Ci12_14 => circulant(12, &[1, 4]),
            Fixture::Pentagon5 => polygon_chain(5, 5),
        }
    }

    pub fn table(self) -> &'static [(usize, usize, usize)] {
        match self {
            Fixture::T2 => T2,
            Fixture::T3 => T3,
            Fixture::T4 => T4,
            Fixture::Theta555 => THETA_555,
            Fixture::Ci9_14 => CI9,
            Fixture::Ci10_14 => CI10,
            Fixture::Ci12_14 => CI12,
            Fixture::Pentagon5 => PENTAGON5,
        }
    }

    /// The graph under its canonical labeling together with the drawn ordering.
    pub fn load(self) -> Result<(Graph, EdgeOrdering)> {
        let g = self.graph()?;
        let table = self.table();
        if table.len() != g.num_edges() {
            return Err(Error::Format(format!(
                "fixture {} lists {} edges, graph has {}",
                self.name(),
                table.len(),
                g.num_edges()
            )));
        }
        let mut ranks = vec![0; g.num_edges()];
        for &(u, v, rank) in table {
            let e = g.find_edge(u, v).ok_or_else(|| {
                Error::Format(format!("fixture {}: no edge ({u},{v})", self.name()))
            })?;
            if ranks[e] != 0 {
                return Err(Error::Format(format!(
                    "fixture {}: edge ({u},{v}) listed twice",
                    self.name()
                )));
            }
            ranks[e] = rank;
        }
        Ok((g, EdgeOrdering::from_ranks(&ranks)?))
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFixture(s.to_owned()))
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn fixture_by_name(name: &str) -> Result<(Graph, EdgeOrdering)> {
    name.parse::<Fixture>()?.load()
}

const T2: &[(usize, usize, usize)] = &[(1, 2, 1), (1, 3, 2), (2, 3, 3)];

const T3: &[(usize, usize, usize)] = &[
    (1, 2, 1),
    (1, 3, 5),
    (2, 3, 6),
    (2, 4, 2),
    (2, 5, 3),
    (3, 5, 8),
    (3, 6, 9),
    (4, 5, 7),
    (5, 6, 4),
];

const T4: &[(usize, usize, usize)] = &[
    (1, 2, 1),
    (1, 3, 10),
    (2, 3, 11),
    (2, 4, 5),
    (2, 5, 14),
    (3, 5, 2),
    (3, 6, 18),
    (4, 5, 3),
    (5, 6, 9),
    (4, 7, 6),
    (4, 8, 12),
    (5, 8, 7),
    (5, 9, 4),
    (6, 9, 13),
    (6, 10, 17),
    (7, 8, 15),
    (8, 9, 16),
    (9, 10, 8),
];

// hubs 1, 2; path interiors 3..=6, 7..=10, 11..=14
const THETA_555: &[(usize, usize, usize)] = &[
    (1, 3, 1),
    (3, 4, 4),
    (4, 5, 7),
    (5, 6, 10),
    (6, 2, 13),
    (1, 7, 2),
    (7, 8, 5),
    (8, 9, 8),
    (9, 10, 11),
    (10, 2, 14),
    (1, 11, 3),
    (11, 12, 6),
    (12, 13, 9),
    (13, 14, 12),
    (14, 2, 15),
];

const CI9: &[(usize, usize, usize)] = &[
    (1, 2, 10),
    (2, 3, 12),
    (3, 4, 14),
    (4, 5, 16),
    (5, 6, 18),
    (6, 7, 2),
    (7, 8, 4),
    (8, 9, 6),
    (9, 1, 8),
    (1, 5, 1),
    (2, 6, 3),
    (3, 7, 5),
    (4, 8, 7),
    (5, 9, 9),
    (6, 1, 11),
    (7, 2, 13),
    (8, 3, 15),
    (9, 4, 17),
];

const CI10: &[(usize, usize, usize)] = &[
    (1, 2, 12),
    (2, 3, 14),
    (3, 4, 16),
    (4, 5, 18),
    (5, 6, 20),
    (6, 7, 2),
    (7, 8, 4),
    (8, 9, 6),
    (9, 10, 8),
    (10, 1, 10),
    (1, 5, 1),
    (2, 6, 3),
    (3, 7, 5),
    (4, 8, 7),
    (5, 9, 9),
    (6, 10, 11),
    (7, 1, 13),
    (8, 2, 15),
    (9, 3, 17),
    (10, 4, 19),
];

const CI12: &[(usize, usize, usize)] = &[
    (1, 2, 12),
    (2, 3, 14),
    (3, 4, 16),
    (4, 5, 18),
    (5, 6, 20),
    (6, 7, 22),
    (7, 8, 24),
    (8, 9, 2),
    (9, 10, 4),
    (10, 11, 6),
    (11, 12, 8),
    (12, 1, 10),
    (1, 5, 23),
    (2, 6, 1),
    (3, 7, 3),
    (4, 8, 5),
    (5, 9, 7),
    (6, 10, 9),
    (7, 11, 11),
    (8, 12, 13),
    (9, 1, 15),
    (10, 2, 17),
    (11, 3, 19),
    (12, 4, 21),
];

const PENTAGON5: &[(usize, usize, usize)] = &[
    (2, 3, 1),
    (5, 6, 2),
    (8, 9, 3),
    (11, 12, 4),
    (14, 15, 5),
    (3, 4, 6),
    (6, 7, 7),
    (9, 10, 8),
    (12, 13, 9),
    (15, 16, 10),
    (1, 5, 11),
    (8, 4, 12),
    (11, 7, 13),
    (14, 10, 14),
    (17, 13, 15),
    (1, 2, 16),
    (4, 5, 17),
    (7, 8, 18),
    (10, 11, 19),
    (13, 14, 20),
    (16, 17, 21),
];
