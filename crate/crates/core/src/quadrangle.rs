//! Generalized quadrangles GQ(q, q²) realized on the elliptic quadric
//! Q⁻(5, q), their spreads, and the colorings spreads induce.
//!
//! Points are the projective zeros of
//! `Q(x) = x0 x1 + x2 x3 + x4² + a x4 x5 + b x5²` with `t² + a t + b`
//! irreducible over GF(q). Two singular points are collinear iff the polar
//! form `B(x, y) = Q(x + y) − Q(x) − Q(y)` vanishes, and the line through
//! them is the set of points of their projective span.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_cover::{CoverError, ExactCover};
use crate::field::{make_field, FieldError, GaloisField};
use crate::graph::Graph;

/// Largest `q` built by [`build_gq`] unless a caller raises the limit.
pub const DEFAULT_MAX_Q: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadrangleError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("q = {q} exceeds the configured maximum {max}")]
    UnsupportedSize { q: u64, max: u64 },
    #[error("incidence axiom violated: {0}")]
    AxiomViolated(String),
    #[error("no spread exists (search exhausted after {0} nodes)")]
    NoSpread(u64),
    #[error("spread search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("not a spread: {0}")]
    NotASpread(String),
    #[error("malformed spread certificate: {0}")]
    Malformed(String),
}

/// Points and lines of a finite incidence geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    /// Field order for quadric constructions, `None` for abstract structures.
    pub q: Option<u64>,
    /// Normalized projective coordinates (element codes), empty for abstract structures.
    pub coordinates: Vec<Vec<u32>>,
    point_count: usize,
    lines: Vec<Vec<usize>>,
    lines_through: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    /// Abstract structure on `point_count` points; each line is sorted and
    /// deduplicated. No axioms are checked here.
    pub fn from_lines(point_count: usize, lines: Vec<Vec<usize>>) -> Result<Self, QuadrangleError> {
        let mut lines_through = vec![Vec::new(); point_count];
        let mut sorted = Vec::with_capacity(lines.len());
        for (l, mut line) in lines.into_iter().enumerate() {
            line.sort_unstable();
            line.dedup();
            for &p in &line {
                if p >= point_count {
                    return Err(QuadrangleError::AxiomViolated(format!(
                        "line {l} contains point {p} outside 0..{point_count}"
                    )));
                }
                lines_through[p].push(l);
            }
            sorted.push(line);
        }
        Ok(Self {
            q: None,
            coordinates: Vec::new(),
            point_count,
            lines: sorted,
            lines_through,
        })
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.lines_through[p]
    }

    /// Checks the three quadrangle axioms for order `(sigma, tau)` exhaustively.
    pub fn verify_gq_axioms(&self, sigma: usize, tau: usize) -> Result<(), QuadrangleError> {
        let fail = |m: String| Err(QuadrangleError::AxiomViolated(m));
        for (l, line) in self.lines.iter().enumerate() {
            if line.len() != sigma + 1 {
                return fail(format!("line {l} has {} points, expected {}", line.len(), sigma + 1));
            }
        }
        for (p, through) in self.lines_through.iter().enumerate() {
            if through.len() != tau + 1 {
                return fail(format!("point {p} is on {} lines, expected {}", through.len(), tau + 1));
            }
        }
        // two points on at most one line: count line memberships per pair
        let n = self.point_count;
        let mut shared = vec![0u8; n * n];
        for line in &self.lines {
            for (i, &a) in line.iter().enumerate() {
                for &b in &line[i + 1..] {
                    shared[a * n + b] += 1;
                    if shared[a * n + b] > 1 {
                        return fail(format!("points {a} and {b} share more than one line"));
                    }
                }
            }
        }
        let collinear = |a: usize, b: usize| shared[a.min(b) * n + a.max(b)] == 1;
        for (l1, a) in self.lines.iter().enumerate() {
            for &p in a {
                for &l2 in &self.lines_through[p] {
                    if l2 > l1 && a.iter().filter(|x| self.lines[l2].binary_search(x).is_ok()).count() > 1 {
                        return fail(format!("lines {l1} and {l2} share more than one point"));
                    }
                }
            }
        }
        for p in 0..n {
            for (l, line) in self.lines.iter().enumerate() {
                if line.binary_search(&p).is_ok() {
                    continue;
                }
                let projections = line.iter().filter(|&&x| collinear(p, x)).count();
                if projections != 1 {
                    return fail(format!(
                        "point {p} is collinear with {projections} points of line {l}, expected 1"
                    ));
                }
            }
        }
        Ok(())
    }

    /// Collinearity graph: points joined when they share a line.
    pub fn point_graph(&self) -> Graph {
        let edges = self.lines.iter().flat_map(|line| {
            line.iter()
                .enumerate()
                .flat_map(move |(i, &a)| line[i + 1..].iter().map(move |&b| (a, b)))
        });
        Graph::from_edges(self.point_count, edges).expect("lines reference valid points")
    }

    /// Formats point `p` as a digit string (comma separated when `q > 10`).
    pub fn point_label(&self, p: usize) -> String {
        let coords = &self.coordinates[p];
        if self.q.is_some_and(|q| q > 10) {
            coords.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        } else {
            coords.iter().map(u32::to_string).collect()
        }
    }
}

struct Quadric<'f> {
    field: &'f GaloisField,
    a: u32,
    b: u32,
}

impl Quadric<'_> {
    fn value(&self, x: &[u32; 6]) -> u32 {
        let f = self.field;
        let mut acc = f.add(f.mul(x[0], x[1]), f.mul(x[2], x[3]));
        acc = f.add(acc, f.mul(x[4], x[4]));
        acc = f.add(acc, f.mul(self.a, f.mul(x[4], x[5])));
        f.add(acc, f.mul(self.b, f.mul(x[5], x[5])))
    }

    fn polar(&self, x: &[u32; 6], y: &[u32; 6]) -> u32 {
        let f = self.field;
        let sum: [u32; 6] = std::array::from_fn(|i| f.add(x[i], y[i]));
        f.sub(f.sub(self.value(&sum), self.value(x)), self.value(y))
    }
}

fn normalize(field: &GaloisField, x: &mut [u32; 6]) {
    if let Some(&lead) = x.iter().find(|&&c| c != 0) {
        let inv = field.inv(lead).expect("nonzero leading coordinate");
        for c in x.iter_mut() {
            *c = field.mul(*c, inv);
        }
    }
}

/// Builds GQ(q, q²) with the default size limit.
pub fn build_gq(q: u64) -> Result<IncidenceStructure, QuadrangleError> {
    build_gq_with_limit(q, DEFAULT_MAX_Q)
}

/// Builds GQ(q, q²) on Q⁻(5, q) and verifies point and line counts and all
/// quadrangle axioms.
pub fn build_gq_with_limit(q: u64, max_q: u64) -> Result<IncidenceStructure, QuadrangleError> {
    let field = make_field(q)?;
    if q > max_q {
        return Err(QuadrangleError::UnsupportedSize { q, max: max_q });
    }
    let (a, b) = field.find_irreducible_quadratic();
    let quadric = Quadric { field: &field, a, b };
    let qq = field.order();

    let mut points: Vec<[u32; 6]> = Vec::new();
    for code in 1..qq.pow(6) {
        let mut rest = code;
        // most significant digit first, so points come out in lexicographic order
        let mut x = [0u32; 6];
        for slot in x.iter_mut().rev() {
            *slot = rest % qq;
            rest /= qq;
        }
        if x.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        if quadric.value(&x) == 0 {
            points.push(x);
        }
    }
    let index: HashMap<[u32; 6], usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();

    let n = points.len();
    let mut on_common_line = vec![false; n * n];
    let mut lines = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if on_common_line[i * n + j] || quadric.polar(&points[i], &points[j]) != 0 {
                continue;
            }
            let mut line = vec![i];
            for c in 0..qq {
                let mut y: [u32; 6] = std::array::from_fn(|t| field.add(points[j][t], field.mul(c, points[i][t])));
                normalize(&field, &mut y);
                let idx = *index.get(&y).ok_or_else(|| {
                    QuadrangleError::AxiomViolated(format!("span of points {i} and {j} leaves the quadric"))
                })?;
                line.push(idx);
            }
            line.sort_unstable();
            for (s, &u) in line.iter().enumerate() {
                for &w in &line[s + 1..] {
                    on_common_line[u * n + w] = true;
                }
            }
            lines.push(line);
        }
    }

    let expected_points = (q + 1) * (q * q * q + 1);
    let expected_lines = (q * q * q + 1) * (q * q + 1);
    if n as u64 != expected_points || lines.len() as u64 != expected_lines {
        return Err(QuadrangleError::AxiomViolated(format!(
            "{} points and {} lines, expected {expected_points} and {expected_lines}",
            n,
            lines.len()
        )));
    }
    let mut s = IncidenceStructure::from_lines(n, lines)?;
    s.q = Some(q);
    s.coordinates = points.iter().map(|p| p.to_vec()).collect();
    s.verify_gq_axioms(q as usize, (q * q) as usize)?;
    Ok(s)
}

/// A set of lines partitioning the points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spread {
    pub lines: Vec<usize>,
}

impl Spread {
    /// Independent check that the lines are pairwise disjoint and cover every point.
    pub fn verify(&self, s: &IncidenceStructure) -> Result<(), QuadrangleError> {
        let mut owner = vec![None; s.point_count()];
        for &l in &self.lines {
            let line = s
                .lines()
                .get(l)
                .ok_or_else(|| QuadrangleError::NotASpread(format!("line index {l} out of range")))?;
            for &p in line {
                if let Some(prev) = owner[p].replace(l) {
                    return Err(QuadrangleError::NotASpread(format!(
                        "point {p} lies on spread lines {prev} and {l}"
                    )));
                }
            }
        }
        if let Some(p) = owner.iter().position(Option::is_none) {
            return Err(QuadrangleError::NotASpread(format!("point {p} is not covered")));
        }
        Ok(())
    }
}

/// Exact cover of the points by lines. `budget` limits search nodes.
pub fn find_spread(s: &IncidenceStructure, budget: Option<u64>) -> Result<Spread, QuadrangleError> {
    let mut cover = ExactCover::new(s.point_count());
    for line in s.lines() {
        cover.add_row(line).expect("lines reference valid points");
    }
    let search = cover.solve(budget).map_err(|e| match e {
        CoverError::BudgetExceeded(b) => QuadrangleError::SearchBudgetExceeded(b),
        other => QuadrangleError::Malformed(other.to_string()),
    })?;
    let lines = search.solution.ok_or(QuadrangleError::NoSpread(search.nodes))?;
    let spread = Spread { lines };
    spread.verify(s)?;
    Ok(spread)
}

/// Colors each point by the position of its spread line. Spread lines are
/// cliques of the point graph, hence color classes of its complement.
pub fn spread_to_coloring(sp: &Spread, s: &IncidenceStructure) -> Result<Vec<usize>, QuadrangleError> {
    sp.verify(s)?;
    let mut colors = vec![0; s.point_count()];
    for (color, &l) in sp.lines.iter().enumerate() {
        for &p in &s.lines()[l] {
            colors[p] = color;
        }
    }
    Ok(colors)
}

/// Serialized spread and coloring of GQ(q, q²).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadCertificate {
    pub q: u64,
    pub points: Vec<String>,
    pub lines: Vec<Vec<usize>>,
    pub spread: Vec<usize>,
    pub coloring: Vec<usize>,
}

impl SpreadCertificate {
    pub fn new(s: &IncidenceStructure, sp: &Spread) -> Result<Self, QuadrangleError> {
        let q = s
            .q
            .ok_or_else(|| QuadrangleError::Malformed("structure has no field order".into()))?;
        Ok(Self {
            q,
            points: (0..s.point_count()).map(|p| s.point_label(p)).collect(),
            lines: s.lines().to_vec(),
            spread: sp.lines.clone(),
            coloring: spread_to_coloring(sp, s)?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, QuadrangleError> {
        serde_json::from_str(text).map_err(|e| QuadrangleError::Malformed(e.to_string()))
    }

    /// Rebuilds the incidence structure from the listed lines and checks the
    /// quadrangle axioms, the spread, and the coloring of the complement of
    /// the point graph. Returns the number of colors.
    pub fn verify(&self) -> Result<usize, QuadrangleError> {
        let q = self.q as usize;
        let s = IncidenceStructure::from_lines(self.points.len(), self.lines.clone())?;
        if s.lines() != self.lines.as_slice() {
            return Err(QuadrangleError::Malformed("lines must be sorted and duplicate-free".into()));
        }
        s.verify_gq_axioms(q, q * q)?;
        let spread = Spread {
            lines: self.spread.clone(),
        };
        spread.verify(&s)?;
        if self.coloring.len() != s.point_count() {
            return Err(QuadrangleError::Malformed("coloring length differs from point count".into()));
        }
        let complement = s.point_graph().complement();
        if let Some((u, v)) = complement.edges().find(|&(u, v)| self.coloring[u] == self.coloring[v]) {
            return Err(QuadrangleError::NotASpread(format!(
                "coloring is improper on complement edge ({u}, {v})"
            )));
        }
        let mut used: Vec<usize> = self.coloring.clone();
        used.sort_unstable();
        used.dedup();
        Ok(used.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_small_quadrangles() {
        let g2 = build_gq(2).unwrap();
        assert_eq!((g2.point_count(), g2.lines().len()), (27, 45));
        let g3 = build_gq(3).unwrap();
        assert_eq!((g3.point_count(), g3.lines().len()), (112, 280));
        assert!(matches!(build_gq(6), Err(QuadrangleError::Field(FieldError::NotPrimePower(6)))));
        assert_eq!(build_gq(7), Err(QuadrangleError::UnsupportedSize { q: 7, max: 5 }));
    }

    #[test]
    fn lines_are_cliques_and_edges_lie_on_one_line() {
        for q in [2, 3] {
            let s = build_gq(q).unwrap();
            let g = s.point_graph();
            for line in s.lines() {
                for &a in line {
                    for &b in line {
                        assert!(a == b || g.has_edge(a, b));
                    }
                }
            }
            for (a, b) in g.edges() {
                let on = s.lines().iter().filter(|l| l.contains(&a) && l.contains(&b)).count();
                assert_eq!(on, 1);
            }
        }
    }

    #[test]
    fn points_are_normalized_and_singular() {
        let s = build_gq(3).unwrap();
        for c in &s.coordinates {
            assert_eq!(c.iter().find(|&&x| x != 0), Some(&1));
        }
        assert_eq!(s.point_label(0).len(), 6);
    }

    #[test]
    fn degenerate_grid_point_graph() {
        // GQ(1,1): the 2x2 grid, whose point graph is the 4-cycle
        let s = IncidenceStructure::from_lines(4, vec![vec![0, 1], vec![2, 3], vec![0, 2], vec![1, 3]]).unwrap();
        s.verify_gq_axioms(1, 1).unwrap();
        assert_eq!(s.point_graph().srg_check().unwrap().tuple(), (4, 2, 0, 2));
    }

    #[test]
    fn axiom_violations_are_reported() {
        let s = IncidenceStructure::from_lines(4, vec![vec![0, 1], vec![2, 3], vec![0, 2]]).unwrap();
        assert!(matches!(s.verify_gq_axioms(1, 1), Err(QuadrangleError::AxiomViolated(_))));
    }

    #[test]
    fn spread_q2() {
        let s = build_gq(2).unwrap();
        let sp = find_spread(&s, None).unwrap();
        assert_eq!(sp.lines.len(), 9);
        let colors = spread_to_coloring(&sp, &s).unwrap();
        let complement = s.point_graph().complement();
        assert!(complement.edges().all(|(u, v)| colors[u] != colors[v]));
        assert_eq!(find_spread(&s, None).unwrap(), sp, "search is deterministic");
    }

    #[test]
    fn spread_q3() {
        let s = build_gq(3).unwrap();
        let sp = find_spread(&s, None).unwrap();
        assert_eq!(sp.lines.len(), 28);
        let cert = SpreadCertificate::new(&s, &sp).unwrap();
        assert_eq!(cert.verify(), Ok(28));
    }

    #[test]
    fn no_spread_for_uncoverable_point() {
        let s = IncidenceStructure::from_lines(1, vec![]).unwrap();
        assert!(matches!(find_spread(&s, None), Err(QuadrangleError::NoSpread(_))));
    }

    #[test]
    fn not_a_spread() {
        let s = build_gq(2).unwrap();
        let bad = Spread { lines: vec![0] };
        assert!(matches!(spread_to_coloring(&bad, &s), Err(QuadrangleError::NotASpread(_))));
    }

    #[test]
    fn certificate_round_trip() {
        let s = build_gq(2).unwrap();
        let sp = find_spread(&s, None).unwrap();
        let cert = SpreadCertificate::new(&s, &sp).unwrap();
        let back = SpreadCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.verify(), Ok(9));
        let g = s.point_graph();
        let j = (1..27).find(|&j| !g.has_edge(0, j)).unwrap();
        let mut broken = cert.clone();
        broken.coloring[j] = broken.coloring[0];
        assert!(matches!(broken.verify(), Err(QuadrangleError::NotASpread(_))));
    }
}

