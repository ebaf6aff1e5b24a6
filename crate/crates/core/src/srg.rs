//! Closed-form arithmetic on strongly regular graph parameters.
//!
//! Everything here is exact: eigenvalues and multiplicities are integers,
//! bounds and cosines are [`Rational`]s.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{int, isqrt_exact_i64, rat, ArithError, Rational};
use crate::field::prime_power;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("{0}: counting identity k(k-lambda-1) = (v-k-1)mu fails")]
    CountingIdentity(SrgParams),
    #[error("{0}: mu = 0, the graph is disconnected")]
    Disconnected(SrgParams),
    #[error("{0}: {1}")]
    Infeasible(SrgParams, &'static str),
    #[error("{0}: complement is not a connected strongly regular graph ({1})")]
    InvalidComplement(SrgParams, Box<SrgError>),
    #[error("{params}: (lambda-mu)^2 + 4(k-mu) = {delta_sq} is not a square; conference graphs are not supported")]
    ConferenceGraph { params: SrgParams, delta_sq: i64 },
    #[error("{0}: eigenvalue multiplicities are not integral")]
    NonIntegralMultiplicity(SrgParams),
    #[error(
        "{params}: lambda - mu >= -2k/(v-1) fails; take the complement{}",
        .complement.map(|c| format!(" {c}")).unwrap_or_default()
    )]
    AssumptionViolated {
        params: SrgParams,
        complement: Option<SrgParams>,
    },
    #[error("{0}: spectrum invariant violated: {1}")]
    SpectrumInvariant(SrgParams, &'static str),
    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),
    #[error("parameter {0} out of range")]
    OutOfRange(u64),
}

/// Parameters `(v, k, λ, μ)` of a connected, non-complete strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

impl SrgParams {
    /// Validates the counting identity, connectivity (`μ > 0`) and `0 < k < v - 1`.
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self, SrgError> {
        let p = Self { v, k, lambda, mu };
        if k == 0 || k + 1 >= v {
            return Err(SrgError::Infeasible(p, "need 0 < k < v - 1"));
        }
        if mu == 0 {
            return Err(SrgError::Disconnected(p));
        }
        if lambda >= k || mu > k {
            return Err(SrgError::Infeasible(p, "need lambda < k and mu <= k"));
        }
        if u128::from(k) * u128::from(k - lambda - 1) != u128::from(v - k - 1) * u128::from(mu) {
            return Err(SrgError::CountingIdentity(p));
        }
        Ok(p)
    }

    pub fn tuple(&self) -> (u64, u64, u64, u64) {
        (self.v, self.k, self.lambda, self.mu)
    }

    fn signed(&self) -> (i64, i64, i64, i64) {
        (self.v as i64, self.k as i64, self.lambda as i64, self.mu as i64)
    }
}

/// `λ − μ ≥ −2k/(v−1)`, compared exactly as `(λ−μ)(v−1) ≥ −2k`.
pub fn assumption_holds(p: &SrgParams) -> bool {
    let (v, k, l, m) = p.signed();
    (l - m) * (v - 1) >= -2 * k
}

/// `(v, v−k−1, v−2k−2+μ, v−2k+λ)`.
pub fn complement_params(p: &SrgParams) -> Result<SrgParams, SrgError> {
    let (v, k, l, m) = p.signed();
    let kc = v - k - 1;
    let lc = v - 2 * k - 2 + m;
    let mc = v - 2 * k + l;
    if lc < 0 || mc < 0 {
        return Err(SrgError::InvalidComplement(
            *p,
            Box::new(SrgError::Infeasible(*p, "negative complement parameter")),
        ));
    }
    SrgParams::new(v as u64, kc as u64, lc as u64, mc as u64)
        .map_err(|e| SrgError::InvalidComplement(*p, Box::new(e)))
}

/// Restricted eigenvalues `(r, s)` with `r > s`, requiring only that they are
/// integers. Unlike [`spectrum`] this does not require the assumption on
/// `λ − μ`, so it applies to a graph and its complement alike.
pub fn eigenvalues(p: &SrgParams) -> Result<(i64, i64), SrgError> {
    let (_, k, l, m) = p.signed();
    let delta_sq = (l - m) * (l - m) + 4 * (k - m);
    let delta = isqrt_exact_i64(delta_sq).map_err(|e| match e {
        ArithError::NotASquare(_) => SrgError::ConferenceGraph { params: *p, delta_sq },
        _ => SrgError::Infeasible(*p, "negative discriminant"),
    })?;
    if (l - m + delta) % 2 != 0 {
        return Err(SrgError::Infeasible(*p, "eigenvalues are not integral"));
    }
    Ok(((l - m + delta) / 2, (l - m - delta) / 2))
}

/// Restricted eigenvalues and multiplicities, `f` paired with `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    /// `√((λ−μ)² + 4(k−μ))`.
    pub delta: i64,
    /// `((v−1)(μ−λ) − 2k)/δ`, never positive.
    pub big_delta: Rational,
    pub r: i64,
    pub s: i64,
    pub f: u64,
    pub g: u64,
}

pub fn spectrum(p: &SrgParams) -> Result<Spectrum, SrgError> {
    if !assumption_holds(p) {
        return Err(SrgError::AssumptionViolated {
            params: *p,
            complement: complement_params(p).ok(),
        });
    }
    let (v, k, l, m) = p.signed();
    let (r, s) = eigenvalues(p)?;
    let delta = r - s;
    let big_delta = rat((v - 1) * (m - l) - 2 * k, delta);
    if big_delta.is_positive() {
        return Err(SrgError::SpectrumInvariant(*p, "Delta > 0"));
    }
    let half = rat(1, 2);
    let f = (int(v - 1) + &big_delta) * &half;
    let g = (int(v - 1) - &big_delta) * &half;
    if !f.is_integer() || !g.is_integer() {
        return Err(SrgError::NonIntegralMultiplicity(*p));
    }
    let f = f.to_integer().to_i64().unwrap();
    let g = g.to_integer().to_i64().unwrap();
    if f <= 0 || g <= 0 {
        return Err(SrgError::NonIntegralMultiplicity(*p));
    }
    if !(r > 0 && s + 1 < 0) {
        return Err(SrgError::SpectrumInvariant(*p, "need r > 0 > s + 1"));
    }
    if f > g {
        return Err(SrgError::SpectrumInvariant(*p, "need f <= g"));
    }
    if f + g != v - 1 || k + f * r + g * s != 0 {
        return Err(SrgError::SpectrumInvariant(*p, "trace identity fails"));
    }
    Ok(Spectrum {
        delta,
        big_delta,
        r,
        s,
        f: f as u64,
        g: g as u64,
    })
}

/// Inner products of the spherical two-distance representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoDistanceAngles {
    /// `r/k`, between adjacent vertices.
    pub cos_alpha: Rational,
    /// `−(r+1)/(v−k−1)`, between non-adjacent vertices.
    pub cos_beta: Rational,
    /// Squared ball radius `(1 − r/k)/2`.
    pub sq_radius: Rational,
}

pub fn two_distance_angles(p: &SrgParams) -> Result<TwoDistanceAngles, SrgError> {
    let sp = spectrum(p)?;
    let (v, k, _, _) = p.signed();
    let cos_alpha = rat(sp.r, k);
    let cos_beta = rat(-(sp.r + 1), v - k - 1);
    let sq_radius = (Rational::one() - &cos_alpha) / int(2);
    if cos_beta >= cos_alpha {
        return Err(SrgError::SpectrumInvariant(*p, "cos beta >= cos alpha"));
    }
    if !(sq_radius.is_positive() && sq_radius < rat(1, 2)) {
        return Err(SrgError::SpectrumInvariant(*p, "squared radius outside (0, 1/2)"));
    }
    Ok(TwoDistanceAngles {
        cos_alpha,
        cos_beta,
        sq_radius,
    })
}

/// Hoffman's lower bound `1 − k/s` on the chromatic number, cross-checked
/// against `v / (1 + (v−k−1)/(1+r))`.
pub fn hoffman_chromatic_lower(p: &SrgParams) -> Result<Rational, SrgError> {
    let sp = spectrum(p)?;
    let (v, k, _, _) = p.signed();
    let bound = Rational::one() - rat(k, sp.s);
    let via_clique = int(v) / clique_bound(p, sp.r);
    if bound != via_clique {
        return Err(SrgError::SpectrumInvariant(*p, "Hoffman identity fails"));
    }
    Ok(bound)
}

fn clique_bound(p: &SrgParams, r: i64) -> Rational {
    let (v, k, _, _) = p.signed();
    Rational::one() + rat(v - k - 1, 1 + r)
}

/// Upper bound `1 + (v−k−1)/(1+r)` on the clique number of the complement.
pub fn clique_upper_bound_complement(p: &SrgParams) -> Result<Rational, SrgError> {
    let sp = spectrum(p)?;
    Ok(clique_bound(p, sp.r))
}

/// Point graph of a generalized quadrangle GQ(σ, τ).
pub fn gq_point_graph_params(sigma: u64, tau: u64) -> Result<SrgParams, SrgError> {
    if sigma == 0 {
        return Err(SrgError::OutOfRange(sigma));
    }
    if tau == 0 {
        return Err(SrgError::OutOfRange(tau));
    }
    SrgParams::new(
        (sigma * tau + 1) * (sigma + 1),
        sigma * (tau + 1),
        sigma - 1,
        tau + 1,
    )
}

/// Complement of the GQ(q, q²) point graph.
pub fn gq_complement_params(q: u64) -> Result<SrgParams, SrgError> {
    if q < 2 {
        return Err(SrgError::OutOfRange(q));
    }
    SrgParams::new(
        (q + 1) * (q * q * q + 1),
        q * q * q * q,
        q * (q - 1) * (q * q + 1),
        (q - 1) * q * q * q,
    )
}

/// Complement of the C20 family, for odd prime powers `q`.
pub fn c20_params(q: u64) -> Result<SrgParams, SrgError> {
    match prime_power(q) {
        Ok((p, _)) if p % 2 == 1 => {}
        _ => return Err(SrgError::NotOddPrimePower(q)),
    }
    let q2 = q * q;
    SrgParams::new(
        q2 * q,
        (q + 1) * (q2 - 1) / 2,
        (q + 3) * (q2 - 3) / 4 + 1,
        (q + 1) * (q2 - 1) / 4,
    )
}

/// `f + 3 < 1 − k/s`: the packing's chromatic number exceeds its dimension by more than 3.
pub fn interesting_filter(p: &SrgParams) -> Result<bool, SrgError> {
    let sp = spectrum(p)?;
    let hoffman = hoffman_chromatic_lower(p)?;
    Ok(int(sp.f as i64 + 3) < hoffman)
}

/// Every parameter set with `v <= max_v` that passes [`SrgParams::new`] and
/// has integral eigenvalues and multiplicities, normalized so that the
/// assumption on `λ − μ` holds (the complement is taken where needed).
/// Sets whose required complement is disconnected are skipped.
pub fn feasible_parameter_sets(max_v: u64) -> Vec<SrgParams> {
    let mut out = Vec::new();
    for v in 3..=max_v {
        for k in 1..v - 1 {
            for lambda in 0..k {
                let num = k * (k - lambda - 1);
                let den = v - k - 1;
                if num % den != 0 {
                    continue;
                }
                let mu = num / den;
                let Ok(p) = SrgParams::new(v, k, lambda, mu) else {
                    continue;
                };
                let p = if assumption_holds(&p) {
                    p
                } else {
                    match complement_params(&p) {
                        Ok(c) => c,
                        Err(_) => continue,
                    }
                };
                if spectrum(&p).is_ok() {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A named parameter row of the high-chromatic-number table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub name: String,
    /// Raw tuple; validated when the row is evaluated.
    pub tuple: (u64, u64, u64, u64),
}

/// Computed cells of one table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCells {
    pub r: i64,
    pub f: u64,
    pub s: i64,
    pub g: u64,
    pub hoffman: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub row: TableRow,
    pub cells: Result<TableCells, SrgError>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMismatch {
    pub row: usize,
    pub name: String,
    pub column: &'static str,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for CellMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} ({}), column {}: expected {}, found {}",
            self.row + 1,
            self.name,
            self.column,
            self.expected,
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct TableParseError {
    pub line: usize,
    pub msg: String,
}

/// Bundled parameter rows (`name v k lambda mu`).
pub const TABLE1_DATA: &str = include_str!("../data/table1.txt");
/// Bundled expected cells (`name r f s g bound`).
pub const TABLE1_EXPECTED: &str = include_str!("../data/table1_expected.txt");

/// Splits a data line into a free-form name and its last `n` whitespace-separated fields.
fn split_row(line: &str, n: usize, lineno: usize) -> Result<(String, Vec<&str>), TableParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() < n + 1 {
        return Err(TableParseError {
            line: lineno,
            msg: format!("expected a name followed by {n} fields"),
        });
    }
    let split = tokens.len() - n;
    Ok((tokens[..split].join(" "), tokens[split..].to_vec()))
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parses rows of `name v k lambda mu`; the name may contain spaces.
pub fn parse_table_rows(text: &str) -> Result<Vec<TableRow>, TableParseError> {
    data_lines(text)
        .map(|(lineno, line)| {
            let (name, fields) = split_row(line, 4, lineno)?;
            let nums = fields
                .iter()
                .map(|t| t.parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| TableParseError {
                    line: lineno,
                    msg: e.to_string(),
                })?;
            Ok(TableRow {
                name,
                tuple: (nums[0], nums[1], nums[2], nums[3]),
            })
        })
        .collect()
}

/// Parses rows of `name r f s g bound`; `bound` is a rational `p/q` or integer.
pub fn parse_table_expected(text: &str) -> Result<Vec<(String, TableCells)>, TableParseError> {
    data_lines(text)
        .map(|(lineno, line)| {
            let (name, fields) = split_row(line, 5, lineno)?;
            let err = |msg: String| TableParseError { line: lineno, msg };
            let r = fields[0].parse().map_err(|e| err(format!("{e}")))?;
            let f = fields[1].parse().map_err(|e| err(format!("{e}")))?;
            let s = fields[2].parse().map_err(|e| err(format!("{e}")))?;
            let g = fields[3].parse().map_err(|e| err(format!("{e}")))?;
            let hoffman = crate::arith::parse_rational(fields[4]).map_err(|e| err(e.to_string()))?;
            Ok((name, TableCells { r, f, s, g, hoffman }))
        })
        .collect()
}

pub fn evaluate_row(row: &TableRow) -> Result<TableCells, SrgError> {
    let (v, k, l, m) = row.tuple;
    let p = SrgParams::new(v, k, l, m)?;
    let sp = spectrum(&p)?;
    Ok(TableCells {
        r: sp.r,
        f: sp.f,
        s: sp.s,
        g: sp.g,
        hoffman: hoffman_chromatic_lower(&p)?,
    })
}

/// Evaluates every row; per-row failures are kept, not propagated.
pub fn table1(rows: &[TableRow]) -> Vec<TableEntry> {
    rows.iter()
        .map(|row| TableEntry {
            row: row.clone(),
            cells: evaluate_row(row),
        })
        .collect()
}

/// Cell-level differences between computed entries and an expected table.
/// A row whose evaluation failed mismatches in every column.
pub fn compare_table(entries: &[TableEntry], expected: &[(String, TableCells)]) -> Vec<CellMismatch> {
    let mut out = Vec::new();
    if entries.len() != expected.len() {
        out.push(CellMismatch {
            row: entries.len().min(expected.len()),
            name: "<table>".into(),
            column: "rows",
            expected: expected.len().to_string(),
            found: entries.len().to_string(),
        });
    }
    for (i, (entry, (name, exp))) in entries.iter().zip(expected).enumerate() {
        let expected_cells = [
            ("r", exp.r.to_string()),
            ("f", exp.f.to_string()),
            ("s", exp.s.to_string()),
            ("g", exp.g.to_string()),
            ("1-k/s", exp.hoffman.to_string()),
        ];
        let found: Vec<String> = match &entry.cells {
            Ok(c) => vec![
                c.r.to_string(),
                c.f.to_string(),
                c.s.to_string(),
                c.g.to_string(),
                c.hoffman.to_string(),
            ],
            Err(e) => vec![format!("error: {e}"); 5],
        };
        if &entry.row.name != name {
            out.push(CellMismatch {
                row: i,
                name: entry.row.name.clone(),
                column: "name",
                expected: name.clone(),
                found: entry.row.name.clone(),
            });
        }
        for ((column, e), f) in expected_cells.into_iter().zip(found) {
            if e != f {
                out.push(CellMismatch {
                    row: i,
                    name: entry.row.name.clone(),
                    column,
                    expected: e,
                    found: f,
                });
            }
        }
    }
    out
}

/// `⌈x⌉` for a rational, as used when a rational bound constrains an integer.
pub fn ceil_u64(x: &Rational) -> u64 {
    let c = x.ceil().to_integer();
    if c.is_negative() || c.is_zero() {
        0
    } else {
        c.to_u64().unwrap_or(u64::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64, k: u64, l: u64, m: u64) -> SrgParams {
        SrgParams::new(v, k, l, m).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(matches!(SrgParams::new(100, 77, 60, 55), Err(SrgError::CountingIdentity(_))));
        assert!(matches!(SrgParams::new(6, 2, 1, 0), Err(SrgError::Disconnected(_))));
        assert!(matches!(SrgParams::new(4, 3, 2, 1), Err(SrgError::Infeasible(..))));
        assert!(SrgParams::new(10, 3, 0, 1).is_ok());
    }

    #[test]
    fn assumption_examples() {
        assert!(!assumption_holds(&p(112, 30, 2, 10)));
        assert!(assumption_holds(&p(112, 81, 60, 54)));
        assert!(assumption_holds(&p(16, 10, 6, 6)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_params(&p(112, 30, 2, 10)), Ok(p(112, 81, 60, 54)));
        assert_eq!(complement_params(&p(27, 10, 1, 5)), Ok(p(27, 16, 10, 8)));
        let hs = p(100, 77, 60, 56);
        assert_eq!(complement_params(&complement_params(&hs).unwrap()), Ok(hs));
        // complete bipartite K_{3,3}: complement is two triangles
        assert!(matches!(complement_params(&p(6, 3, 0, 3)), Err(SrgError::InvalidComplement(..))));
    }

    #[test]
    fn spectrum_examples() {
        let hs = spectrum(&p(100, 77, 60, 56)).unwrap();
        assert_eq!((hs.r, hs.f, hs.s, hs.g), (7, 22, -3, 77));
        let last = spectrum(&p(729, 616, 523, 506)).unwrap();
        assert_eq!((last.r, last.f, last.s, last.g), (22, 112, -5, 616));
        // the misprinted tuple is feasible but has a different spectrum
        let misprint = spectrum(&p(729, 520, 379, 350)).unwrap();
        assert_eq!((misprint.r, misprint.f, misprint.s, misprint.g), (34, 80, -5, 648));
        assert!(matches!(spectrum(&p(5, 2, 0, 1)), Err(SrgError::ConferenceGraph { delta_sq: 5, .. })));
        match spectrum(&p(112, 30, 2, 10)) {
            Err(SrgError::AssumptionViolated { complement, .. }) => {
                assert_eq!(complement, Some(p(112, 81, 60, 54)));
            }
            other => panic!("{other:?}"),
        }
        let msg = spectrum(&p(112, 30, 2, 10)).unwrap_err().to_string();
        assert!(msg.contains("take the complement"), "{msg}");
    }

    #[test]
    fn hoffman_examples() {
        assert_eq!(hoffman_chromatic_lower(&p(100, 77, 60, 56)), Ok(rat(80, 3)));
        assert_eq!(hoffman_chromatic_lower(&p(275, 162, 105, 81)), Ok(int(55)));
        assert_eq!(hoffman_chromatic_lower(&p(16, 10, 6, 6)), Ok(int(6)));
    }

    #[test]
    fn clique_bound_examples() {
        assert_eq!(clique_upper_bound_complement(&p(27, 16, 10, 8)), Ok(int(3)));
        assert_eq!(clique_upper_bound_complement(&p(112, 81, 60, 54)), Ok(int(4)));
        assert_eq!(clique_upper_bound_complement(&p(100, 77, 60, 56)), Ok(rat(15, 4)));
    }

    #[test]
    fn gq_examples() {
        assert_eq!(gq_point_graph_params(2, 4), Ok(p(27, 10, 1, 5)));
        assert_eq!(gq_point_graph_params(3, 9), Ok(p(112, 30, 2, 10)));
        assert_eq!(gq_point_graph_params(1, 1), Ok(p(4, 2, 0, 2)));
        assert_eq!(gq_complement_params(2), Ok(p(27, 16, 10, 8)));
        assert_eq!(gq_complement_params(3), Ok(p(112, 81, 60, 54)));
        for q in [2, 3, 4, 5] {
            let via = complement_params(&gq_point_graph_params(q, q * q).unwrap()).unwrap();
            assert_eq!(gq_complement_params(q).unwrap(), via);
        }
    }

    #[test]
    fn gq_complement_dimension_and_bound() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let params = gq_complement_params(q).unwrap();
            let sp = spectrum(&params).unwrap();
            assert_eq!(sp.f, q * q * q - q * q + q, "q={q}");
            assert_eq!(hoffman_chromatic_lower(&params), Ok(int((q * q * q + 1) as i64)));
        }
    }

    #[test]
    fn c20_examples() {
        assert_eq!(c20_params(3), Ok(p(27, 16, 10, 8)));
        let c5 = c20_params(5).unwrap();
        assert_eq!(c5, p(125, 72, 45, 36));
        assert_eq!(spectrum(&c5).unwrap().f, 20);
        assert_eq!(hoffman_chromatic_lower(&c5), Ok(int(25)));
        assert_eq!(c20_params(2), Err(SrgError::NotOddPrimePower(2)));
        assert_eq!(c20_params(15), Err(SrgError::NotOddPrimePower(15)));
        for q in [3u64, 5, 7, 9, 11, 13] {
            let c = c20_params(q).unwrap();
            assert_eq!(spectrum(&c).unwrap().f, q * q - q);
            assert_eq!(hoffman_chromatic_lower(&c), Ok(int((q * q) as i64)));
        }
    }

    #[test]
    fn interesting_examples() {
        assert_eq!(interesting_filter(&p(100, 77, 60, 56)), Ok(true));
        assert_eq!(interesting_filter(&p(16, 10, 6, 6)), Ok(false));
        assert_eq!(interesting_filter(&p(27, 16, 10, 8)), Ok(false));
    }

    #[test]
    fn angles() {
        let a = two_distance_angles(&p(27, 16, 10, 8)).unwrap();
        assert_eq!((a.cos_alpha, a.cos_beta, a.sq_radius), (rat(1, 4), rat(-1, 2), rat(3, 8)));
        let h = two_distance_angles(&p(16, 10, 6, 6)).unwrap();
        assert_eq!((h.cos_alpha, h.cos_beta, h.sq_radius), (rat(1, 5), rat(-3, 5), rat(2, 5)));
    }

    #[test]
    fn table_parsing() {
        let rows = parse_table_rows("# c\nHigman-Sims 100 77 60 56\n2nd subconst. of McL 162 105 72 60 # x\n").unwrap();
        assert_eq!(rows[1].name, "2nd subconst. of McL");
        assert_eq!(rows[1].tuple, (162, 105, 72, 60));
        assert!(parse_table_rows("x 1 2 3").is_err());
        assert!(parse_table_rows("x 1 2 3 y").is_err());
    }

    #[test]
    fn bundled_table_matches() {
        let rows = parse_table_rows(TABLE1_DATA).unwrap();
        assert_eq!(rows.len(), 13);
        let expected = parse_table_expected(TABLE1_EXPECTED).unwrap();
        let entries = table1(&rows);
        assert_eq!(compare_table(&entries, &expected), vec![]);
    }

    #[test]
    fn ceil_helper() {
        assert_eq!(ceil_u64(&rat(80, 3)), 27);
        assert_eq!(ceil_u64(&int(9)), 9);
        assert_eq!(ceil_u64(&rat(-1, 2)), 0);
    }
}
