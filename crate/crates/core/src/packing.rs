//! Ball-packing certificates from the spherical two-distance representation
//! of a strongly regular graph, their exact verification, and the lift that
//! adds one dimension and two mutually tangent balls touching every old ball.
//!
//! A certificate stores the Gram matrix of the ball centers and the squared
//! radii, never coordinates, so every check is an exact rational identity.
//! Balls `i` and `j` with `d² = G_ii + G_jj − 2 G_ij` and `e = d² − ρ_i² − ρ_j²`
//! are tangent iff `e ≥ 0` and `e² = 4 ρ_i² ρ_j²`, and have disjoint
//! interiors iff `e > 0` and `e² > 4 ρ_i² ρ_j²`.
//!
//! The dimension of a certificate is `rank(G)`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{format_rational, int, isqrt_exact, parse_rational, rat, ArithError, Rational, RationalMatrix};
use crate::graph::{Graph, GraphError};
use crate::srg::{spectrum, two_distance_angles, SrgError, SrgParams, Spectrum, TwoDistanceAngles};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PackingError {
    #[error(transparent)]
    Srg(#[from] SrgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has parameters {found:?}, expected {expected}")]
    ParameterMismatch {
        expected: SrgParams,
        found: (u64, u64, u64, u64),
    },
    #[error("Gram matrix has rank {rank}, expected {expected}")]
    RankMismatch { rank: usize, expected: usize },
    #[error("closed-form Gram differs from the normalized eigenprojection at ({0}, {1})")]
    GramMismatch(usize, usize),
    #[error("Gram matrix is not positive semidefinite")]
    NotPsd,
    #[error("declared dimension {declared} differs from rank {rank}")]
    DimensionMismatch { declared: usize, rank: usize },
    #[error("balls {0} and {1} overlap")]
    OverlapDetected(usize, usize),
    #[error("balls {i} and {j}: declared tangent = {declared}, actually tangent = {actual}")]
    TangencyMismatch {
        i: usize,
        j: usize,
        declared: bool,
        actual: bool,
    },
    #[error("squared radius of ball {0} is not positive")]
    NonPositiveRadius(usize),
    #[error("lift needs equal radii, ball {0} differs from ball 0")]
    NonUniformRadii(usize),
    #[error("lift needs centers on the unit sphere, ball {0} has squared norm {1}")]
    CentersNotOnUnitSphere(usize, String),
    #[error("lift needs 0 < rho² < 1, got {0}")]
    DegenerateRadius(String),
    #[error("coordinate reconstruction error {error:e} exceeds {tolerance:e}")]
    Precision { error: f64, tolerance: f64 },
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

impl From<ArithError> for PackingError {
    fn from(e: ArithError) -> Self {
        PackingError::Malformed(e.to_string())
    }
}

/// Spherical two-distance representation of an SRG.
#[derive(Debug, Clone)]
pub struct Representation {
    pub params: SrgParams,
    pub spectrum: Spectrum,
    pub angles: TwoDistanceAngles,
    pub graph: Graph,
    pub gram: RationalMatrix,
}

/// Builds the Gram matrix with diagonal 1, `r/k` on edges and
/// `−(r+1)/(v−k−1)` on non-edges, and checks it against the normalized
/// square of `M = (A − sI)(I − J/v)` computed from the adjacency matrix.
pub fn build_representation(g: &Graph, p: &SrgParams) -> Result<Representation, PackingError> {
    let check = g.srg_check()?;
    if check.tuple() != p.tuple() {
        return Err(PackingError::ParameterMismatch {
            expected: *p,
            found: check.tuple(),
        });
    }
    let sp = spectrum(p)?;
    let angles = two_distance_angles(p)?;
    let n = g.order();
    let gram = RationalMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Rational::one()
        } else if g.has_edge(i, j) {
            angles.cos_alpha.clone()
        } else {
            angles.cos_beta.clone()
        }
    });

    // vM = vA − svI − (k−s)J; M is symmetric, M² = (r−s)² P_r and P_r has
    // diagonal f/v, so G = (vM)² / (v·δ·(−s(v−1) − k)).
    let (v, k, s) = (p.v as i128, p.k as i128, sp.s as i128);
    let vm: Vec<i128> = (0..n * n)
        .map(|t| {
            let (i, j) = (t / n, t % n);
            let a = i128::from(i != j && g.has_edge(i, j));
            v * a - if i == j { s * v } else { 0 } - (k - s)
        })
        .collect();
    let norm = v * sp.delta as i128 * (-s * (v - 1) - k);
    for i in 0..n {
        for j in i..n {
            let sq: i128 = (0..n).map(|t| vm[i * n + t] * vm[t * n + j]).sum();
            let entry = Rational::new(sq.into(), norm.into());
            if &entry != gram.get(i, j) {
                return Err(PackingError::GramMismatch(i, j));
            }
        }
    }
    let rank = gram.rank();
    if rank != sp.f as usize {
        return Err(PackingError::RankMismatch {
            rank,
            expected: sp.f as usize,
        });
    }
    if !gram.is_positive_semidefinite()? {
        return Err(PackingError::NotPsd);
    }
    Ok(Representation {
        params: *p,
        spectrum: sp,
        angles,
        graph: g.clone(),
        gram,
    })
}

/// Gram matrix of ball centers, squared radii and declared tangent pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingCertificate {
    pub n: usize,
    pub dimension: usize,
    pub gram: RationalMatrix,
    pub sq_radii: Vec<Rational>,
    /// Pairs `(i, j)` with `i < j`, sorted. Advisory: verification recomputes them.
    pub declared_tangencies: Vec<(usize, usize)>,
}

/// Outcome of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub rank: usize,
    pub tangencies: usize,
    pub tangency_graph: Graph,
}

pub fn representation_to_packing(rep: &Representation) -> PackingCertificate {
    let n = rep.graph.order();
    PackingCertificate {
        n,
        dimension: rep.spectrum.f as usize,
        gram: rep.gram.clone(),
        sq_radii: vec![rep.angles.sq_radius.clone(); n],
        declared_tangencies: rep.graph.edges().collect(),
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    let n = isqrt_exact(x.numer()).ok()?;
    let d = isqrt_exact(x.denom()).ok()?;
    Some(Rational::new(n, d))
}

impl PackingCertificate {
    pub fn sq_distance(&self, i: usize, j: usize) -> Rational {
        self.gram.get(i, i) + self.gram.get(j, j) - int(2) * self.gram.get(i, j)
    }

    /// `ρ_i ρ_j` when it is rational. Verification never needs it: it works
    /// with the squared identity instead.
    pub fn cross_radius_product(&self, i: usize, j: usize) -> Option<Rational> {
        rational_sqrt(&(&self.sq_radii[i] * &self.sq_radii[j]))
    }

    /// `Some(true)` if tangent, `Some(false)` if interiors are disjoint and
    /// the balls do not touch, `None` if the interiors meet.
    pub fn contact(&self, i: usize, j: usize) -> Option<bool> {
        let (ri, rj) = (&self.sq_radii[i], &self.sq_radii[j]);
        let e = self.sq_distance(i, j) - ri - rj;
        if e.is_negative() {
            return None;
        }
        let lhs = &e * &e;
        let rhs = int(4) * ri * rj;
        if lhs == rhs {
            Some(true)
        } else if lhs > rhs {
            Some(false)
        } else {
            None
        }
    }

    fn check_shape(&self) -> Result<(), PackingError> {
        if self.gram.rows() != self.n || self.gram.cols() != self.n || self.sq_radii.len() != self.n {
            return Err(PackingError::Malformed(format!(
                "n = {} but Gram is {}x{} with {} radii",
                self.n,
                self.gram.rows(),
                self.gram.cols(),
                self.sq_radii.len()
            )));
        }
        if let Some((i, j)) = self.gram.first_asymmetry() {
            return Err(PackingError::Malformed(format!("Gram is not symmetric at ({i}, {j})")));
        }
        if let Some(i) = self.sq_radii.iter().position(|r| !r.is_positive()) {
            return Err(PackingError::NonPositiveRadius(i));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let json = CertificateJson {
            n: self.n,
            dimension: self.dimension,
            gram: (0..self.n)
                .map(|i| self.gram.row(i).iter().map(format_rational).collect())
                .collect(),
            sq_radii: self.sq_radii.iter().map(format_rational).collect(),
            tangencies: self.declared_tangencies.iter().map(|&(i, j)| [i, j]).collect(),
        };
        serde_json::to_string(&json).expect("certificate serializes")
    }

    /// Parses the JSON form. Shape, symmetry and index ranges are checked
    /// here; geometry is checked by [`verify`].
    pub fn from_json(text: &str) -> Result<Self, PackingError> {
        let json: CertificateJson =
            serde_json::from_str(text).map_err(|e| PackingError::Malformed(e.to_string()))?;
        let rows = json
            .gram
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let gram = if rows.is_empty() {
            RationalMatrix::zeros(0, 0)
        } else {
            RationalMatrix::from_rows(rows)?
        };
        let sq_radii = json
            .sq_radii
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        let mut declared = Vec::with_capacity(json.tangencies.len());
        for [a, b] in json.tangencies {
            if a == b || a.max(b) >= json.n {
                return Err(PackingError::Malformed(format!("invalid tangency pair [{a}, {b}]")));
            }
            declared.push((a.min(b), a.max(b)));
        }
        declared.sort_unstable();
        declared.dedup();
        let c = Self {
            n: json.n,
            dimension: json.dimension,
            gram,
            sq_radii,
            declared_tangencies: declared,
        };
        c.check_shape()?;
        Ok(c)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateJson {
    n: usize,
    dimension: usize,
    gram: Vec<Vec<String>>,
    sq_radii: Vec<String>,
    tangencies: Vec<[usize; 2]>,
}

/// Tangency graph recomputed from the Gram matrix and radii alone. The first
/// overlapping pair in lexicographic order is reported.
pub fn tangency_graph(c: &PackingCertificate) -> Result<Graph, PackingError> {
    c.check_shape()?;
    let mut edges = Vec::new();
    for i in 0..c.n {
        for j in i + 1..c.n {
            match c.contact(i, j) {
                None => return Err(PackingError::OverlapDetected(i, j)),
                Some(true) => edges.push((i, j)),
                Some(false) => {}
            }
        }
    }
    Ok(Graph::from_edges(c.n, edges)?)
}

/// Full check: PSD Gram, rank equal to the declared dimension, no overlaps,
/// and declared tangencies equal to the recomputed ones.
pub fn verify(c: &PackingCertificate) -> Result<Verification, PackingError> {
    c.check_shape()?;
    if !c.gram.is_positive_semidefinite()? {
        return Err(PackingError::NotPsd);
    }
    let rank = c.gram.rank();
    if rank != c.dimension {
        return Err(PackingError::DimensionMismatch {
            declared: c.dimension,
            rank,
        });
    }
    let g = tangency_graph(c)?;
    let actual: Vec<(usize, usize)> = g.edges().collect();
    if actual != c.declared_tangencies {
        let (i, j) = first_difference(&c.declared_tangencies, &actual);
        return Err(PackingError::TangencyMismatch {
            i,
            j,
            declared: c.declared_tangencies.binary_search(&(i, j)).is_ok(),
            actual: g.has_edge(i, j),
        });
    }
    Ok(Verification {
        rank,
        tangencies: actual.len(),
        tangency_graph: g,
    })
}

fn first_difference(a: &[(usize, usize)], b: &[(usize, usize)]) -> (usize, usize) {
    let in_one = |x: &(usize, usize), other: &[(usize, usize)]| other.binary_search(x).is_err();
    a.iter()
        .filter(|x| in_one(x, b))
        .chain(b.iter().filter(|x| in_one(x, a)))
        .min()
        .copied()
        .expect("sets differ")
}

/// Appends two balls of radius `t = (1 − ρ²)/(2ρ)` centered at `±t` on a new
/// axis. Each touches the other and every old ball, using `tρ = (1 − ρ²)/2`.
pub fn maehara_lift(c: &PackingCertificate) -> Result<PackingCertificate, PackingError> {
    c.check_shape()?;
    let rho_sq = c
        .sq_radii
        .first()
        .cloned()
        .ok_or_else(|| PackingError::Malformed("empty certificate".into()))?;
    if let Some(i) = c.sq_radii.iter().position(|r| r != &rho_sq) {
        return Err(PackingError::NonUniformRadii(i));
    }
    if let Some(i) = (0..c.n).find(|&i| !c.gram.get(i, i).is_one()) {
        return Err(PackingError::CentersNotOnUnitSphere(i, format_rational(c.gram.get(i, i))));
    }
    let one = Rational::one();
    if !(rho_sq.is_positive() && rho_sq < one) {
        return Err(PackingError::DegenerateRadius(format_rational(&rho_sq)));
    }
    let gap = &one - &rho_sq;
    let t_sq = &gap * &gap / (int(4) * &rho_sq);
    let n = c.n;
    let gram = RationalMatrix::from_fn(n + 2, n + 2, |i, j| match (i >= n, j >= n) {
        (false, false) => c.gram.get(i, j).clone(),
        (true, true) if i == j => t_sq.clone(),
        (true, true) => -t_sq.clone(),
        _ => Rational::zero(),
    });
    let mut sq_radii = c.sq_radii.clone();
    sq_radii.extend([t_sq.clone(), t_sq]);
    let mut declared = c.declared_tangencies.clone();
    declared.extend((0..n).flat_map(|i| [(i, n), (i, n + 1)]));
    declared.push((n, n + 1));
    declared.sort_unstable();
    Ok(PackingCertificate {
        n: n + 2,
        dimension: c.dimension + 1,
        gram,
        sq_radii,
        declared_tangencies: declared,
    })
}

/// Floating-point center coordinates, one column per ball and `rank(G)`
/// rows, from a symmetric eigendecomposition. Lossy; never used to verify.
pub fn export_coordinates(c: &PackingCertificate, precision: u32) -> Result<Vec<Vec<f64>>, PackingError> {
    c.check_shape()?;
    if !c.gram.is_positive_semidefinite()? {
        return Err(PackingError::NotPsd);
    }
    let rank = c.gram.rank();
    let n = c.n;
    let g = DMatrix::from_fn(n, n, |i, j| c.gram.get(i, j).to_f64().unwrap_or(f64::NAN));
    let eig = SymmetricEigen::new(g.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let rows: Vec<Vec<f64>> = order[..rank]
        .iter()
        .map(|&e| {
            let scale = eig.eigenvalues[e].max(0.0).sqrt();
            (0..n).map(|i| scale * eig.eigenvectors[(i, e)]).collect()
        })
        .collect();
    let mut error: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let dot: f64 = rows.iter().map(|r| r[i] * r[j]).sum();
            error = error.max((dot - g[(i, j)]).abs());
        }
    }
    let tolerance = 10f64.powi(2 - precision as i32);
    if error.is_nan() || error > tolerance {
        return Err(PackingError::Precision { error, tolerance });
    }
    Ok(rows)
}

/// Squared radius of the lifted balls for base squared radius `ρ²`.
pub fn lift_sq_radius(rho_sq: &Rational) -> Rational {
    let gap = Rational::one() - rho_sq;
    &gap * &gap / (int(4) * rho_sq)
}

/// `tρ = (1 − ρ²)/2`, the rational cross-radius product for lifted contacts.
pub fn lift_cross_product(rho_sq: &Rational) -> Rational {
    (Rational::one() - rho_sq) * rat(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrangle::build_gq;

    fn schlafli() -> Graph {
        build_gq(2).unwrap().point_graph().complement()
    }

    fn certificate_for(g: &Graph) -> (Representation, PackingCertificate) {
        let p = g.srg_check().unwrap().params().unwrap();
        let rep = build_representation(g, &p).unwrap();
        let c = representation_to_packing(&rep);
        (rep, c)
    }

    fn two_points(sq_radius: Rational) -> PackingCertificate {
        // unit-distance pair: centers at 0 and e1
        PackingCertificate {
            n: 2,
            dimension: 1,
            gram: RationalMatrix::from_rows(vec![vec![int(0), int(0)], vec![int(0), int(1)]]).unwrap(),
            sq_radii: vec![sq_radius.clone(), sq_radius],
            declared_tangencies: vec![(0, 1)],
        }
    }

    #[test]
    fn schlafli_representation() {
        let g = schlafli();
        let (rep, c) = certificate_for(&g);
        assert_eq!(rep.params.tuple(), (27, 16, 10, 8));
        assert_eq!(rep.angles.cos_alpha, rat(1, 4));
        assert_eq!(rep.angles.cos_beta, rat(-1, 2));
        assert_eq!(rep.gram.rank(), 6);
        assert_eq!(c.sq_radii[0], rat(3, 8));
        let (u, w) = g.edges().next().unwrap();
        assert_eq!(c.sq_distance(u, w), rat(3, 2));
        let non = (1..27).find(|&j| !g.has_edge(0, j)).unwrap();
        assert_eq!(c.sq_distance(0, non), int(3));
        assert_eq!(c.cross_radius_product(0, 1), Some(rat(3, 8)));
        let v = verify(&c).unwrap();
        assert_eq!(v.tangency_graph, g);
        assert_eq!(v.rank, 6);
    }

    #[test]
    fn halved_cube_representation() {
        let g = Graph::halved_cube(5);
        let (rep, c) = certificate_for(&g);
        assert_eq!((rep.angles.cos_alpha.clone(), rep.angles.cos_beta.clone()), (rat(1, 5), rat(-3, 5)));
        assert_eq!(rep.gram.rank(), 5);
        assert_eq!(c.sq_radii[0], rat(2, 5));
        assert_eq!(c.sq_distance(0, g.neighbors(0)[0]), rat(8, 5));
        let non = (1..16).find(|&j| !g.has_edge(0, j)).unwrap();
        assert_eq!(c.sq_distance(0, non), rat(16, 5));
        assert_eq!(verify(&c).unwrap().tangency_graph, g);
    }

    #[test]
    fn round_trip_small_graphs() {
        // the Petersen graph itself violates the λ − μ condition; its complement satisfies it
        let petersen = Graph::petersen();
        let p = petersen.srg_check().unwrap().params().unwrap();
        assert!(matches!(
            build_representation(&petersen, &p),
            Err(PackingError::Srg(SrgError::AssumptionViolated { .. }))
        ));
        for g in [petersen.complement(), Graph::halved_cube(5), schlafli()] {
            let (_, c) = certificate_for(&g);
            assert_eq!(tangency_graph(&c).unwrap(), g);
        }
    }

    #[test]
    fn gq3_complement_representation() {
        let g = build_gq(3).unwrap().point_graph().complement();
        let (rep, c) = certificate_for(&g);
        assert_eq!(rep.params.tuple(), (112, 81, 60, 54));
        assert_eq!((rep.angles.cos_alpha.clone(), rep.angles.cos_beta.clone()), (rat(1, 9), rat(-1, 3)));
        assert_eq!(c.sq_radii[0], rat(4, 9));
        let v = verify(&c).unwrap();
        assert_eq!((v.rank, v.tangencies), (21, 4536));
        assert_eq!(v.tangency_graph, g);
    }

    #[test]
    fn parameter_mismatch_is_rejected() {
        let g = Graph::halved_cube(5);
        let wrong = SrgParams::new(27, 16, 10, 8).unwrap();
        assert!(matches!(build_representation(&g, &wrong), Err(PackingError::ParameterMismatch { .. })));
        assert!(matches!(
            build_representation(&Graph::cycle(6), &wrong),
            Err(PackingError::Graph(GraphError::NotSrg { .. }))
        ));
    }

    #[test]
    fn pair_contacts() {
        assert_eq!(tangency_graph(&two_points(rat(1, 4))).unwrap().edge_count(), 1);
        assert_eq!(tangency_graph(&two_points(rat(1, 2))), Err(PackingError::OverlapDetected(0, 1)));
        let mut apart = two_points(rat(1, 9));
        apart.declared_tangencies.clear();
        assert_eq!(tangency_graph(&apart).unwrap().edge_count(), 0);
        verify(&apart).unwrap();
    }

    #[test]
    fn halved_cube_lift() {
        let g = Graph::halved_cube(5);
        let (_, c) = certificate_for(&g);
        let lifted = maehara_lift(&c).unwrap();
        assert_eq!(lifted.sq_radii[16], rat(9, 40));
        assert_eq!(lift_cross_product(&rat(2, 5)), rat(3, 10));
        assert_eq!(lifted.sq_distance(0, 16), rat(49, 40));
        assert_eq!(lifted.cross_radius_product(16, 16), Some(rat(9, 40)));
        let v = verify(&lifted).unwrap();
        assert_eq!(v.rank, 6);
        assert_eq!(v.tangency_graph, g.join_with_k2());
    }

    #[test]
    fn single_ball_lift_is_a_triangle() {
        let c = PackingCertificate {
            n: 1,
            dimension: 1,
            gram: RationalMatrix::from_rows(vec![vec![int(1)]]).unwrap(),
            sq_radii: vec![rat(1, 4)],
            declared_tangencies: vec![],
        };
        let lifted = maehara_lift(&c).unwrap();
        assert_eq!(lifted.sq_radii[1], rat(9, 16));
        assert_eq!(lifted.sq_distance(0, 1), rat(25, 16));
        let v = verify(&lifted).unwrap();
        assert_eq!(v.tangency_graph, Graph::complete(3));
    }

    #[test]
    fn schlafli_lift() {
        let g = schlafli();
        let (_, c) = certificate_for(&g);
        let lifted = maehara_lift(&c).unwrap();
        assert_eq!(lifted.sq_radii[27], rat(25, 96));
        assert_eq!(lifted.dimension, 7);
        assert_eq!(verify(&lifted).unwrap().tangency_graph, g.join_with_k2());
    }

    #[test]
    fn lift_preconditions() {
        let mut c = two_points(rat(1, 4));
        assert!(matches!(maehara_lift(&c), Err(PackingError::CentersNotOnUnitSphere(0, _))));
        c.sq_radii[1] = rat(1, 9);
        assert_eq!(maehara_lift(&c), Err(PackingError::NonUniformRadii(1)));
        let big = PackingCertificate {
            n: 1,
            dimension: 1,
            gram: RationalMatrix::from_rows(vec![vec![int(1)]]).unwrap(),
            sq_radii: vec![int(1)],
            declared_tangencies: vec![],
        };
        assert!(matches!(maehara_lift(&big), Err(PackingError::DegenerateRadius(_))));
    }

    #[test]
    fn json_round_trip_and_corruption() {
        let (_, c) = certificate_for(&Graph::halved_cube(5));
        let text = c.to_json();
        assert!(text.starts_with(r#"{"n":16,"dimension":5,"gram":[["1","1/5""#));
        let back = PackingCertificate::from_json(&text).unwrap();
        assert_eq!(back, c);

        let mut bad = back.clone();
        let (i, j) = bad.declared_tangencies[0];
        let shifted = bad.gram.get(i, j) + rat(1, 1000);
        bad.gram.set(i, j, shifted.clone());
        bad.gram.set(j, i, shifted);
        assert!(verify(&bad).is_err());

        let mut wrong_dim = back.clone();
        wrong_dim.dimension = 6;
        assert_eq!(verify(&wrong_dim).unwrap_err(), PackingError::DimensionMismatch { declared: 6, rank: 5 });

        let mut missing = back;
        missing.declared_tangencies.remove(0);
        assert!(matches!(verify(&missing), Err(PackingError::TangencyMismatch { declared: false, actual: true, .. })));

        assert!(matches!(PackingCertificate::from_json("{}"), Err(PackingError::Malformed(_))));
    }

    #[test]
    fn non_psd_is_rejected() {
        let c = PackingCertificate {
            n: 2,
            dimension: 2,
            gram: RationalMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(1)]]).unwrap(),
            sq_radii: vec![rat(1, 100), rat(1, 100)],
            declared_tangencies: vec![],
        };
        assert_eq!(verify(&c).unwrap_err(), PackingError::NotPsd);
        assert_eq!(export_coordinates(&c, 10).unwrap_err(), PackingError::NotPsd);
    }

    #[test]
    fn coordinates() {
        let id = PackingCertificate {
            n: 3,
            dimension: 3,
            gram: RationalMatrix::identity(3),
            sq_radii: vec![rat(1, 4); 3],
            declared_tangencies: vec![],
        };
        let x = export_coordinates(&id, 10).unwrap();
        assert_eq!(x.len(), 3);
        for i in 0..3 {
            let norm: f64 = x.iter().map(|r| r[i] * r[i]).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }

        let (_, c) = certificate_for(&schlafli());
        let x = export_coordinates(&c, 10).unwrap();
        assert_eq!((x.len(), x[0].len()), (6, 27));

        let g = Graph::halved_cube(5);
        let (_, c) = certificate_for(&g);
        let x = export_coordinates(&c, 10).unwrap();
        assert_eq!((x.len(), x[0].len()), (5, 16));
        for i in 0..16 {
            for j in i + 1..16 {
                let d: f64 = x.iter().map(|r| (r[i] - r[j]).powi(2)).sum::<f64>().sqrt();
                let want = if g.has_edge(i, j) { (8.0f64 / 5.0).sqrt() } else { (16.0f64 / 5.0).sqrt() };
                assert!((d - want).abs() < 1e-8);
            }
        }
    }
}

