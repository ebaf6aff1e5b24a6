//! Immutable simple graphs.
//!
//! A [`Graph`] keeps two views of the same edge set: a dense symmetric bit
//! matrix (one row of `u64` words per vertex) for word-parallel
//! common-neighbor counts, and sorted neighbor lists for iteration.

mod graph6;

use std::fmt;

use thiserror::Error;

use crate::srg::{SrgError, SrgParams};

pub use graph6::{graph6_header, MAX_DECODE_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 input declares {0} vertices, more than the decoder accepts ({MAX_DECODE_VERTICES})")]
    TooLarge(usize),
    #[error("vertex {index} out of range for a graph on {order} vertices")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not regular: vertex {vertex} has degree {degree}, vertex 0 has degree {expected}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error(
        "not strongly regular: {} pair ({u}, {v}) has {found} common neighbors, expected {expected}",
        if *.adjacent { "adjacent" } else { "non-adjacent" }
    )]
    NotSrg {
        u: usize,
        v: usize,
        adjacent: bool,
        found: usize,
        expected: usize,
    },
    #[error("strong regularity needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("complete and edgeless graphs have undefined SRG parameters")]
    Degenerate,
}

/// Which subconstituent of a vertex to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subconstituent {
    /// Induced on the neighbors of the vertex.
    First,
    /// Induced on the non-neighbors, excluding the vertex itself.
    Second,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(v={}, e={}, {})", self.order, self.edge_count(), self.to_graph6())
    }
}

impl Graph {
    fn from_bits(order: usize, words: usize, bits: Vec<u64>) -> Self {
        let neighbors = (0..order)
            .map(|i| {
                let row = &bits[i * words..(i + 1) * words];
                let mut out = Vec::new();
                for (w, &word) in row.iter().enumerate() {
                    let mut x = word;
                    while x != 0 {
                        out.push(w * 64 + x.trailing_zeros() as usize);
                        x &= x - 1;
                    }
                }
                out
            })
            .collect();
        Self {
            order,
            words,
            bits,
            neighbors,
        }
    }

    /// Graph whose edge `{i, j}` (for `i < j`) is present iff `adjacent(i, j)`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let words = order.div_ceil(64);
        let mut bits = vec![0u64; order * words];
        for j in 1..order {
            for i in 0..j {
                if adjacent(i, j) {
                    bits[i * words + j / 64] |= 1 << (j % 64);
                    bits[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        Self::from_bits(order, words, bits)
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops are rejected.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let words = order.div_ceil(64);
        let mut bits = vec![0u64; order * words];
        for (i, j) in edges {
            for index in [i, j] {
                if index >= order {
                    return Err(GraphError::IndexOutOfRange { index, order });
                }
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            bits[i * words + j / 64] |= 1 << (j % 64);
            bits[j * words + i / 64] |= 1 << (i % 64);
        }
        Ok(Self::from_bits(order, words, bits))
    }

    pub fn empty(order: usize) -> Self {
        Self::from_fn(order, |_, _| false)
    }

    pub fn complete(order: usize) -> Self {
        Self::from_fn(order, |_, _| true)
    }

    pub fn cycle(order: usize) -> Self {
        Self::from_fn(order, |i, j| j == i + 1 || (i == 0 && j + 1 == order))
    }

    /// Kneser graph K(5,2).
    pub fn petersen() -> Self {
        let pairs: Vec<u8> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (1u8 << a) | (1u8 << b)))
            .collect();
        Self::from_fn(10, |i, j| pairs[i] & pairs[j] == 0)
    }

    /// Even-weight binary words of length `n`, adjacent at Hamming distance 2.
    pub fn halved_cube(n: u32) -> Self {
        assert!((1..=20).contains(&n), "halved cube dimension out of range");
        let words: Vec<u32> = (0..1u32 << n).filter(|w| w.count_ones() % 2 == 0).collect();
        Self::from_fn(words.len(), |i, j| (words[i] ^ words[j]).count_ones() == 2)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        (self.bits[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbor set of `v` as a bit row.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |i| {
            self.neighbors[i]
                .iter()
                .copied()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.order, |i, j| !self.has_edge(i, j))
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self, GraphError> {
        if let Some(&index) = vertices.iter().find(|&&v| v >= self.order) {
            return Err(GraphError::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        Ok(Self::from_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        }))
    }

    pub fn subconstituent(&self, vertex: usize, kind: Subconstituent) -> Result<Self, GraphError> {
        if vertex >= self.order {
            return Err(GraphError::IndexOutOfRange {
                index: vertex,
                order: self.order,
            });
        }
        let vertices: Vec<usize> = match kind {
            Subconstituent::First => self.neighbors[vertex].clone(),
            Subconstituent::Second => (0..self.order)
                .filter(|&u| u != vertex && !self.has_edge(vertex, u))
                .collect(),
        };
        self.induced_subgraph(&vertices)
    }

    /// Appends two adjacent vertices joined to every existing vertex.
    pub fn join_with_k2(&self) -> Self {
        let n = self.order;
        Self::from_fn(n + 2, |i, j| j >= n || self.has_edge(i, j))
    }

    pub fn is_regular(&self) -> bool {
        self.neighbors.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Exhaustive strong-regularity check over all vertex pairs.
    ///
    /// Pairs are scanned in lexicographic order; the first adjacent pair fixes
    /// `λ`, the first non-adjacent pair fixes `μ`, and the first later pair
    /// that disagrees is reported as the witness.
    pub fn srg_check(&self) -> Result<SrgCheck, GraphError> {
        let v = self.order;
        if v < 3 {
            return Err(GraphError::TooSmall(v));
        }
        let k = self.degree(0);
        if let Some(vertex) = (1..v).find(|&u| self.degree(u) != k) {
            return Err(GraphError::NotRegular {
                vertex,
                degree: self.degree(vertex),
                expected: k,
            });
        }
        if k == 0 || k == v - 1 {
            return Err(GraphError::Degenerate);
        }
        let mut lambda = None;
        let mut mu = None;
        for i in 0..v {
            for j in i + 1..v {
                let adjacent = self.has_edge(i, j);
                let found = self.common_neighbors(i, j);
                let slot = if adjacent { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(found),
                    Some(expected) if expected != found => {
                        return Err(GraphError::NotSrg {
                            u: i,
                            v: j,
                            adjacent,
                            found,
                            expected,
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        let mu = mu.expect("non-complete graph has a non-adjacent pair");
        Ok(SrgCheck {
            v: v as u64,
            k: k as u64,
            lambda: lambda.expect("graph with edges has an adjacent pair") as u64,
            mu: mu as u64,
        })
    }
}

/// Parameters observed by [`Graph::srg_check`].
///
/// `mu == 0` (a disjoint union of cliques) is reported here rather than
/// rejected; [`SrgCheck::params`] applies the full parameter validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgCheck {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgCheck {
    pub fn is_disconnected(&self) -> bool {
        self.mu == 0
    }

    pub fn params(&self) -> Result<SrgParams, SrgError> {
        SrgParams::new(self.v, self.k, self.lambda, self.mu)
    }

    pub fn tuple(&self) -> (u64, u64, u64, u64) {
        (self.v, self.k, self.lambda, self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions() {
        let p = Graph::petersen();
        assert_eq!((p.order(), p.edge_count()), (10, 15));
        let h = Graph::halved_cube(5);
        assert_eq!((h.order(), h.edge_count()), (16, 80));
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(Graph::complete(4).edge_count(), 6);
    }

    #[test]
    fn views_agree() {
        let g = Graph::halved_cube(5).join_with_k2();
        for i in 0..g.order() {
            for j in 0..g.order() {
                assert_eq!(g.has_edge(i, j), g.neighbors(i).contains(&j));
            }
            assert!(!g.has_edge(i, i));
        }
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::IndexOutOfRange { index: 3, order: 3 })
        );
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_examples() {
        let p = Graph::petersen();
        assert_eq!(p.complement().complement(), p);
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
    }

    #[test]
    fn srg_check_examples() {
        assert_eq!(Graph::petersen().srg_check().unwrap().tuple(), (10, 3, 0, 1));
        assert_eq!(Graph::halved_cube(5).srg_check().unwrap().tuple(), (16, 10, 6, 6));
        assert_eq!(Graph::cycle(5).srg_check().unwrap().tuple(), (5, 2, 0, 1));
        assert_eq!(Graph::cycle(4).srg_check().unwrap().tuple(), (4, 2, 0, 2));
        match Graph::cycle(6).srg_check() {
            Err(GraphError::NotSrg { u, v, adjacent, found, expected }) => {
                assert_eq!((u, v, adjacent, found, expected), (0, 3, false, 0, 1));
            }
            other => panic!("expected NotSrg, got {other:?}"),
        }
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(path.srg_check(), Err(GraphError::NotRegular { vertex: 1, .. })));
        assert_eq!(Graph::complete(4).srg_check(), Err(GraphError::Degenerate));
        assert_eq!(Graph::complete(2).srg_check(), Err(GraphError::TooSmall(2)));
        // two disjoint triangles: mu = 0 is reported, not rejected
        let two_k3 = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let check = two_k3.srg_check().unwrap();
        assert!(check.is_disconnected());
        assert!(check.params().is_err());
    }

    #[test]
    fn subconstituent_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.subconstituent(2, Subconstituent::First).unwrap(), Graph::complete(3));
        assert_eq!(k4.subconstituent(2, Subconstituent::Second).unwrap().order(), 0);
        assert!(k4.subconstituent(4, Subconstituent::First).is_err());
        let p = Graph::petersen();
        assert_eq!(p.subconstituent(0, Subconstituent::First).unwrap().order(), 3);
        assert_eq!(p.subconstituent(0, Subconstituent::Second).unwrap().order(), 6);
    }

    #[test]
    fn join_with_k2_examples() {
        assert_eq!(Graph::empty(1).join_with_k2(), Graph::complete(3));
        let j = Graph::cycle(5).join_with_k2();
        assert_eq!((j.order(), j.edge_count()), (7, 16));
    }

    #[test]
    fn large_bit_rows() {
        // exercises rows spanning several words
        let g = Graph::cycle(130);
        assert!(g.has_edge(0, 129));
        assert!(g.has_edge(64, 65));
        assert_eq!(g.common_neighbors(63, 65), 1);
        assert_eq!(g.srg_check().err().map(|e| matches!(e, GraphError::NotSrg { .. })), Some(true));
    }
}
