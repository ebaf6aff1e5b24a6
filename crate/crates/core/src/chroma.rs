//! Proper colorings, greedy upper bounds and an exact chromatic-number solver.
//!
//! The exact solver is DSATUR branch and bound on 64-bit vertex masks, so it
//! handles graphs of at most 64 vertices. Its lower bound is the largest of
//! a maximum clique, `⌈v/α⌉` with `α` the independence number, and the
//! Hoffman bound when the graph is a verified SRG.

use thiserror::Error;

use crate::arith::Rational;
use crate::graph::Graph;
use crate::srg::{ceil_u64, hoffman_chromatic_lower};

/// Largest order accepted by [`exact_chromatic`].
pub const MAX_EXACT_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChromaError {
    #[error("coloring has {found} entries for {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("order is not a permutation of the vertices")]
    NotAPermutation,
    #[error("graph has {order} vertices, the exact solver accepts at most {max}")]
    TooLarge { order: usize, max: usize },
    #[error("search budget must be positive")]
    ZeroBudget,
    #[error("budget of {nodes} nodes exceeded with {lower} <= chi <= {upper}")]
    BudgetExceeded {
        nodes: u64,
        lower: usize,
        upper: usize,
    },
}

/// Vertex-indexed color assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    /// Number of distinct colors used.
    pub fn palette(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// True iff no edge is monochromatic.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, ChromaError> {
    if c.colors.len() != g.order() {
        return Err(ChromaError::LengthMismatch {
            expected: g.order(),
            found: c.colors.len(),
        });
    }
    Ok(g.edges().all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// First-fit coloring along `order`.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring, ChromaError> {
    let n = g.order();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(ChromaError::NotAPermutation);
    }
    let mut colors = vec![usize::MAX; n];
    for &v in order {
        let mut taken = vec![false; g.degree(v) + 1];
        for &u in g.neighbors(v) {
            if colors[u] < taken.len() {
                taken[colors[u]] = true;
            }
        }
        colors[v] = taken.iter().position(|&t| !t).expect("degree + 1 slots");
    }
    Ok(Coloring { colors })
}

/// Smallest-last order: repeatedly remove a minimum-degree vertex (lowest
/// index on ties), then reverse.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// The bound that certified optimality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerBound {
    /// A clique of this many vertices.
    Clique(Vec<usize>),
    /// `⌈v/α⌉` for independence number `α`.
    Independence { alpha: usize },
    /// `⌈1 − k/s⌉` for a verified SRG.
    Hoffman(Rational),
    /// The search exhausted every coloring with fewer colors.
    Search,
}

impl LowerBound {
    pub fn value(&self, order: usize) -> usize {
        match self {
            LowerBound::Clique(c) => c.len(),
            LowerBound::Independence { alpha } => order.div_ceil((*alpha).max(1)),
            LowerBound::Hoffman(h) => ceil_u64(h) as usize,
            LowerBound::Search => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Coloring,
    /// Strongest a priori bound; [`LowerBound::Search`] when the search
    /// itself closed the gap.
    pub lower_bound: LowerBound,
    pub nodes: u64,
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

/// Maximum clique inside `candidates`, by branch and bound with a greedy
/// coloring bound.
fn max_clique(adj: &[u64], candidates: u64) -> u64 {
    fn expand(adj: &[u64], current: u64, mut cand: u64, best: &mut u64) {
        // color classes bound the clique size reachable from `cand`
        let mut order = Vec::new();
        let mut bound = Vec::new();
        let mut uncolored = cand;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut avail = uncolored;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1 << v) & !adj[v];
                uncolored &= !(1 << v);
                order.push(v);
                bound.push(color);
            }
        }
        for idx in (0..order.len()).rev() {
            if current.count_ones() + bound[idx] <= best.count_ones() {
                return;
            }
            let v = order[idx];
            let next = current | 1 << v;
            let sub = cand & adj[v];
            if sub == 0 {
                if next.count_ones() > best.count_ones() {
                    *best = next;
                }
            } else {
                expand(adj, next, sub, best);
            }
            cand &= !(1 << v);
        }
    }
    let mut best = 0;
    expand(adj, 0, candidates, &mut best);
    best
}

fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Clique number and a maximum clique, for graphs of at most 64 vertices.
pub fn maximum_clique(g: &Graph) -> Result<Vec<usize>, ChromaError> {
    check_order(g)?;
    Ok(mask_to_vec(max_clique(&masks(g), full_mask(g.order()))))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(g: &Graph) -> Result<(), ChromaError> {
    if g.order() > MAX_EXACT_VERTICES {
        return Err(ChromaError::TooLarge {
            order: g.order(),
            max: MAX_EXACT_VERTICES,
        });
    }
    Ok(())
}

/// Strongest of the clique, independence and Hoffman bounds.
pub fn chromatic_lower_bound(g: &Graph) -> Result<LowerBound, ChromaError> {
    check_order(g)?;
    let n = g.order();
    let adj = masks(g);
    let full = full_mask(n);
    let co_adj: Vec<u64> = (0..n).map(|v| !adj[v] & full & !(1 << v)).collect();
    let mut best = LowerBound::Clique(mask_to_vec(max_clique(&adj, full)));
    let alpha = max_clique(&co_adj, full).count_ones() as usize;
    let candidates = [
        Some(LowerBound::Independence { alpha }),
        g.srg_check()
            .ok()
            .and_then(|c| c.params().ok())
            .and_then(|p| hoffman_chromatic_lower(&p).ok())
            .map(LowerBound::Hoffman),
    ];
    for b in candidates.into_iter().flatten() {
        if b.value(n) > best.value(n) {
            best = b;
        }
    }
    Ok(best)
}

struct Dsatur<'a> {
    adj: &'a [u64],
    degree: Vec<u32>,
    colors: Vec<usize>,
    classes: Vec<u64>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
    nodes: u64,
    budget: u64,
}

const UNCOLORED: usize = usize::MAX;

impl Dsatur<'_> {
    fn pick(&self, used: usize) -> usize {
        let mut choice = (0, 0, usize::MAX);
        for v in 0..self.colors.len() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let sat = self.classes[..used].iter().filter(|&&c| c & self.adj[v] != 0).count();
            let key = (sat, self.degree[v]);
            if choice.2 == usize::MAX || key > (choice.0, choice.1) {
                choice = (key.0, key.1, v);
            }
        }
        choice.2
    }

    fn search(&mut self, colored: usize, used: usize) -> Result<(), ()> {
        if colored == self.colors.len() {
            if used < self.best {
                self.best = used;
                self.best_colors = self.colors.clone();
            }
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let v = self.pick(used);
        // a new color is allowed only as index `used`, and only if it can improve
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.classes[c] & self.adj[v] != 0 {
                continue;
            }
            self.colors[v] = c;
            self.classes[c] |= 1 << v;
            self.search(colored + 1, used.max(c + 1))?;
            self.classes[c] &= !(1 << v);
            self.colors[v] = UNCOLORED;
            if self.best <= self.lower || self.best <= used {
                break;
            }
        }
        Ok(())
    }
}

/// Exact chromatic number within `budget` search nodes.
pub fn exact_chromatic(g: &Graph, budget: u64) -> Result<ChromaticResult, ChromaError> {
    check_order(g)?;
    if budget == 0 {
        return Err(ChromaError::ZeroBudget);
    }
    let n = g.order();
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            witness: Coloring { colors: vec![] },
            lower_bound: LowerBound::Clique(vec![]),
            nodes: 0,
        });
    }
    let bound = chromatic_lower_bound(g)?;
    let lower = bound.value(n);
    let seed = greedy_coloring(g, &degeneracy_order(g))?;
    let adj = masks(g);
    let mut solver = Dsatur {
        adj: &adj,
        degree: adj.iter().map(|m| m.count_ones()).collect(),
        colors: vec![UNCOLORED; n],
        classes: vec![0; n],
        best: seed.palette(),
        best_colors: seed.colors,
        lower,
        nodes: 0,
        budget,
    };
    if solver.best > lower && solver.search(0, 0).is_err() {
        return Err(ChromaError::BudgetExceeded {
            nodes: budget,
            lower,
            upper: solver.best,
        });
    }
    let chi = solver.best;
    let lower_bound = if lower == chi { bound } else { LowerBound::Search };
    let witness = Coloring {
        colors: solver.best_colors,
    };
    debug_assert_eq!(verify_coloring(g, &witness), Ok(true));
    Ok(ChromaticResult {
        chi,
        witness,
        lower_bound,
        nodes: solver.nodes,
    })
}

/// Most cliques [`clique_partition_coloring`] will enumerate.
pub const MAX_PARTITION_CLIQUES: usize = 200_000;

/// Colors the vertices by a partition of `g` into `size`-cliques, found by
/// exact cover. Each clique is an independent set of the complement, so this
/// bounds the chromatic number of the complement by `v/size`. `None` when
/// no partition exists, the cover budget runs out, or there are more than
/// [`MAX_PARTITION_CLIQUES`] cliques.
pub fn clique_partition_coloring(g: &Graph, size: usize, budget: Option<u64>) -> Option<Coloring> {
    use crate::exact_cover::ExactCover;
    let n = g.order();
    if size == 0 || !n.is_multiple_of(size) {
        return None;
    }
    let mut cliques = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).rev().map(|v| vec![v]).collect();
    while let Some(c) = stack.pop() {
        if c.len() == size {
            cliques.push(c);
            if cliques.len() > MAX_PARTITION_CLIQUES {
                return None;
            }
            continue;
        }
        let last = *c.last().expect("nonempty");
        for &u in g.neighbors(last).iter().rev() {
            if u > last && c.iter().all(|&w| g.has_edge(w, u)) {
                let mut next = c.clone();
                next.push(u);
                stack.push(next);
            }
        }
    }
    let mut cover = ExactCover::new(n);
    for c in &cliques {
        cover.add_row(c).expect("vertices in range");
    }
    let rows = cover.solve(budget).ok()?.solution?;
    let mut colors = vec![0; n];
    for (color, &r) in rows.iter().enumerate() {
        for &v in &cliques[r] {
            colors[v] = color;
        }
    }
    Some(Coloring { colors })
}

/// Where an upper bound came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpperSource {
    /// First-fit along the smallest-last order.
    Greedy,
    /// Partition of the complement into cliques of this size.
    CliquePartition { size: usize },
}

/// Lower and upper bounds on the chromatic number without exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticBounds {
    pub lower: usize,
    pub lower_source: LowerBound,
    pub upper: usize,
    pub upper_source: UpperSource,
    pub witness: Coloring,
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let Some(start) = (0..g.order()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))) else {
        return vec![];
    };
    let mut clique = vec![start];
    for &u in g.neighbors(start) {
        if clique.iter().all(|&w| g.has_edge(w, u)) {
            clique.push(u);
        }
    }
    clique.sort_unstable();
    clique
}

/// Bounds for graphs of any order. Up to 64 vertices the lower bound is
/// [`chromatic_lower_bound`]; beyond that it is the Hoffman bound for a
/// verified SRG, or a greedy clique. When the lower bound `c` divides `v`,
/// a partition of the complement into `v/c`-cliques is tried for a matching
/// upper bound.
pub fn chromatic_bounds(g: &Graph, cover_budget: Option<u64>) -> ChromaticBounds {
    let n = g.order();
    let lower_source = chromatic_lower_bound(g).unwrap_or_else(|_| {
        let clique = LowerBound::Clique(greedy_clique(g));
        match g
            .srg_check()
            .ok()
            .and_then(|c| c.params().ok())
            .and_then(|p| hoffman_chromatic_lower(&p).ok())
        {
            Some(h) if ceil_u64(&h) as usize > clique.value(n) => LowerBound::Hoffman(h),
            _ => clique,
        }
    });
    let lower = lower_source.value(n);
    let mut witness = greedy_coloring(g, &degeneracy_order(g)).expect("degeneracy order is a permutation");
    let mut upper_source = UpperSource::Greedy;
    if lower > 0 && n.is_multiple_of(lower) && witness.palette() > lower {
        let size = n / lower;
        if let Some(c) = clique_partition_coloring(&g.complement(), size, cover_budget) {
            witness = c;
            upper_source = UpperSource::CliquePartition { size };
        }
    }
    ChromaticBounds {
        lower,
        lower_source,
        upper: witness.palette(),
        upper_source,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrangle::build_gq;
    use rand::{Rng, SeedableRng};

    fn brute_chi(g: &Graph) -> usize {
        let n = g.order();
        (1..=n.max(1))
            .find(|&k| {
                let total = (k as u64).pow(n as u32);
                (0..total).any(|mut code| {
                    let colors: Vec<usize> = (0..n)
                        .map(|_| {
                            let c = (code % k as u64) as usize;
                            code /= k as u64;
                            c
                        })
                        .collect();
                    g.edges().all(|(u, v)| colors[u] != colors[v])
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn verify_examples() {
        let c5 = Graph::cycle(5);
        let good = Coloring { colors: vec![0, 1, 0, 1, 2] };
        let bad = Coloring { colors: vec![0, 1, 0, 1, 0] };
        assert_eq!(verify_coloring(&c5, &good), Ok(true));
        assert_eq!(verify_coloring(&c5, &bad), Ok(false));
        assert_eq!(
            verify_coloring(&c5, &Coloring { colors: vec![0] }),
            Err(ChromaError::LengthMismatch { expected: 5, found: 1 })
        );
    }

    #[test]
    fn greedy_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(greedy_coloring(&k4, &[3, 1, 0, 2]).unwrap().palette(), 4);
        assert_eq!(greedy_coloring(&Graph::cycle(5), &[0, 1, 2, 3, 4]).unwrap().palette(), 3);
        let h = Graph::halved_cube(5);
        let c = greedy_coloring(&h, &degeneracy_order(&h)).unwrap();
        assert_eq!(verify_coloring(&h, &c), Ok(true));
        assert!(c.palette() <= 11);
        assert_eq!(greedy_coloring(&k4, &[0, 0, 1, 2]), Err(ChromaError::NotAPermutation));
    }

    #[test]
    fn exact_small() {
        assert_eq!(exact_chromatic(&Graph::cycle(5), 1000).unwrap().chi, 3);
        assert_eq!(exact_chromatic(&Graph::complete(4), 1000).unwrap().chi, 4);
        assert_eq!(exact_chromatic(&Graph::petersen(), 1000).unwrap().chi, 3);
        assert_eq!(exact_chromatic(&Graph::empty(3), 1000).unwrap().chi, 1);
        assert_eq!(exact_chromatic(&Graph::empty(0), 1000).unwrap().chi, 0);
        assert_eq!(exact_chromatic(&Graph::cycle(5), 0), Err(ChromaError::ZeroBudget));
    }

    #[test]
    fn halved_cube_and_lift() {
        let h = Graph::halved_cube(5);
        let base = exact_chromatic(&h, 10_000_000).unwrap();
        assert_eq!(base.chi, 8);
        assert_eq!(verify_coloring(&h, &base.witness), Ok(true));
        let lift = exact_chromatic(&h.join_with_k2(), 10_000_000).unwrap();
        assert_eq!(lift.chi, 10);
    }

    #[test]
    fn schlafli_is_nine() {
        let g = build_gq(2).unwrap().point_graph().complement();
        let r = exact_chromatic(&g, 10_000_000).unwrap();
        assert_eq!(r.chi, 9);
        assert!(r.lower_bound.value(27) >= 9);
        let spread = clique_partition_coloring(&g.complement(), 3, None).unwrap();
        assert_eq!(spread.palette(), 9);
        assert_eq!(verify_coloring(&g, &spread), Ok(true));
        let b = chromatic_bounds(&g, None);
        assert_eq!((b.lower, b.upper), (9, 9));
    }

    #[test]
    fn bounds_beyond_exact_range() {
        let g = build_gq(3).unwrap().point_graph().complement();
        let b = chromatic_bounds(&g, Some(1_000_000));
        assert_eq!(b.lower_source, LowerBound::Hoffman(crate::arith::int(28)));
        assert_eq!((b.lower, b.upper), (28, 28));
        assert_eq!(b.upper_source, UpperSource::CliquePartition { size: 4 });
        assert_eq!(verify_coloring(&g, &b.witness), Ok(true));

        let c = Graph::cycle(100);
        let b = chromatic_bounds(&c, None);
        assert_eq!((b.lower, b.upper), (2, 2));
    }

    #[test]
    fn too_large() {
        assert!(matches!(exact_chromatic(&Graph::cycle(65), 10), Err(ChromaError::TooLarge { .. })));
    }

    #[test]
    fn budget_reports_bounds() {
        let g = build_gq(2).unwrap().point_graph().complement().join_with_k2();
        match exact_chromatic(&g, 1) {
            Err(ChromaError::BudgetExceeded { nodes: 1, lower: 10, upper }) => assert!(upper >= 11),
            other => panic!("{other:?}"),
        }
        let r = exact_chromatic(&g, 1_000_000).unwrap();
        assert_eq!((r.chi, r.lower_bound.clone()), (11, LowerBound::Search));
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.random_range(1..=8);
            let p = rng.random_range(0.1..0.9);
            let g = Graph::from_fn(n, |_, _| rng.random_bool(p));
            let r = exact_chromatic(&g, 1_000_000).unwrap();
            assert_eq!(r.chi, brute_chi(&g), "{}", g.to_graph6());
            assert_eq!(verify_coloring(&g, &r.witness), Ok(true));
            assert_eq!(r.witness.palette(), r.chi);
            assert_eq!(maximum_clique(&g).unwrap().len(), brute_clique(&g));
        }
    }

    fn brute_clique(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|m| {
                let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn join_adds_two() {
        for g in [Graph::cycle(5), Graph::petersen(), Graph::complete(3), Graph::cycle(6)] {
            let base = exact_chromatic(&g, 1_000_000).unwrap().chi;
            let lift = exact_chromatic(&g.join_with_k2(), 1_000_000).unwrap().chi;
            assert_eq!(lift, base + 2);
        }
    }
}
