//! Distances between bodies of evidence.
//!
//! Three measures are provided:
//!
//! - [`jousselme_distance`]: `sqrt(½ (m1 - m2)ᵀ D (m1 - m2))` where `D` holds the
//!   Jaccard index of every pair of focal sets.
//! - [`dif_betp`](crate::pignistic::dif_betp): the largest gap between betting
//!   commitments.
//! - [`red_distance`]: the ranking evidence distance. Both operands are first
//!   mapped to pignistic probabilities, so the Jaccard part collapses to the
//!   identity, and the difference is weighted by the ordinal correlation
//!   matrix `s_ij = 1 - |i - j| / (N - 1)`. Adjacent grades therefore end up
//!   closer than distant ones, which the other two measures cannot express.

use std::fmt;
use std::str::FromStr;

use crate::pignistic::{dif_betp, ppt, BetPMode};
use crate::{Bba, Error, FocalSet, Result};

/// Quadratic forms down to this negative value are rounding noise and read as 0.
pub const RADICAND_TOLERANCE: f64 = 1e-12;

/// `sqrt(q / 2)` for a quadratic form `q` of a PSD matrix.
fn half_form_sqrt(q: f64) -> Result<f64> {
    let r = 0.5 * q;
    if r < -RADICAND_TOLERANCE || r.is_nan() {
        return Err(Error::NegativeRadicand(r));
    }
    Ok(r.max(0.0).sqrt())
}

/// Jaccard index `|A ∩ B| / |A ∪ B|`.
pub fn jaccard_similarity(a: &FocalSet, b: &FocalSet) -> Result<f64> {
    if a.frame_len() != b.frame_len() {
        return Err(Error::FrameMismatch);
    }
    Ok(jaccard(a, b))
}

fn jaccard(a: &FocalSet, b: &FocalSet) -> f64 {
    a.intersection_len(b) as f64 / a.union_len(b) as f64
}

/// Jaccard matrix restricted to the focal sets of two mass functions.
///
/// Sets outside this list carry zero mass in both operands and do not
/// contribute to the quadratic form, so the full `2^N` basis is never built.
#[derive(Debug, Clone, PartialEq)]
pub struct JaccardMatrix {
    focal: Vec<FocalSet>,
    entries: Vec<f64>,
}

impl JaccardMatrix {
    pub fn between(m1: &Bba, m2: &Bba) -> Result<Self> {
        m1.ensure_same_frame(m2)?;
        let mut focal: Vec<FocalSet> = m1
            .focal_elements()
            .chain(m2.focal_elements())
            .map(|(s, _)| *s)
            .collect();
        focal.sort_unstable();
        focal.dedup();
        let n = focal.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
            for j in (i + 1)..n {
                let s = jaccard(&focal[i], &focal[j]);
                entries[i * n + j] = s;
                entries[j * n + i] = s;
            }
        }
        Ok(Self { focal, entries })
    }

    pub fn focal_sets(&self) -> &[FocalSet] {
        &self.focal
    }

    pub fn len(&self) -> usize {
        self.focal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.focal.is_empty()
    }

    /// Entry for the `i`-th and `j`-th focal sets of [`Self::focal_sets`].
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.len() + j]
    }

    /// Mass vector of `m` over the joint focal list.
    pub fn mass_vector(&self, m: &Bba) -> Result<Vec<f64>> {
        self.focal.iter().map(|s| m.mass_of(s)).collect()
    }

    fn quadratic_form(&self, d: &[f64]) -> f64 {
        let n = self.len();
        (0..n)
            .map(|i| d[i] * (0..n).map(|j| self.entries[i * n + j] * d[j]).sum::<f64>())
            .sum()
    }
}

pub fn jousselme_distance(m1: &Bba, m2: &Bba) -> Result<f64> {
    let jm = JaccardMatrix::between(m1, m2)?;
    let v1 = jm.mass_vector(m1)?;
    let v2 = jm.mass_vector(m2)?;
    let d: Vec<f64> = v1.iter().zip(&v2).map(|(a, b)| a - b).collect();
    half_form_sqrt(jm.quadratic_form(&d))
}

/// Symmetric `N × N` matrix weighting pignistic differences.
///
/// [`CorrelationMatrix::ordinal`] is the closeness model shipped with the
/// crate; [`CorrelationMatrix::identity`] treats the elements as unordered.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl CorrelationMatrix {
    /// `s_ij = 1 - |i - j| / (N - 1)`; the 1 × 1 identity when `N = 1`.
    pub fn ordinal(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyFrame);
        }
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let span = (n - 1) as f64;
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| 1.0 - i.abs_diff(j) as f64 / span))
            .collect();
        Ok(Self { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
        }
        Self { n, entries }
    }

    /// Takes a row-major square matrix. Symmetry is checked; positive
    /// semidefiniteness is the caller's responsibility.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let symmetric = (0..n).all(|i| (0..i).all(|j| rows[i][j] == rows[j][i]));
        symmetric.then(|| Self {
            n,
            entries: rows.concat(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `s_ij` with 1-based `i` and `j`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    /// `dᵀ S d`.
    pub fn quadratic_form(&self, d: &[f64]) -> f64 {
        assert_eq!(d.len(), self.n);
        let n = self.n;
        (0..n)
            .map(|i| d[i] * (0..n).map(|j| self.entries[i * n + j] * d[j]).sum::<f64>())
            .sum()
    }
}

pub fn correlation_matrix(n: usize) -> Result<CorrelationMatrix> {
    CorrelationMatrix::ordinal(n)
}

/// Ranking evidence distance with the ordinal correlation matrix of the frame.
pub fn red_distance(m1: &Bba, m2: &Bba) -> Result<f64> {
    let s = CorrelationMatrix::ordinal(m1.frame().len())?;
    red_distance_with(m1, m2, &s)
}

/// Ranking evidence distance under an arbitrary correlation matrix.
pub fn red_distance_with(m1: &Bba, m2: &Bba, s: &CorrelationMatrix) -> Result<f64> {
    m1.ensure_same_frame(m2)?;
    if s.size() != m1.frame().len() {
        return Err(Error::FrameMismatch);
    }
    let d = ppt(m1).difference(&ppt(m2))?;
    half_form_sqrt(s.quadratic_form(&d))
}

/// Evaluates the two sides of the reduction to Jousselme's distance: RED with
/// the identity as correlation matrix, and Jousselme's distance between the
/// Bayesian mass functions induced by the pignistic transformation.
pub fn red_reduces_to_jousselme(m1: &Bba, m2: &Bba) -> Result<(f64, f64)> {
    m1.ensure_same_frame(m2)?;
    let red = red_distance_with(m1, m2, &CorrelationMatrix::identity(m1.frame().len()))?;
    let jousselme = jousselme_distance(&ppt(m1).to_bba(), &ppt(m2).to_bba())?;
    Ok((red, jousselme))
}

/// A selectable evidence distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DistanceMeasure {
    Jousselme,
    BettingCommitments(BetPMode),
    #[default]
    Red,
}

impl DistanceMeasure {
    pub fn distance(&self, m1: &Bba, m2: &Bba) -> Result<f64> {
        match *self {
            DistanceMeasure::Jousselme => jousselme_distance(m1, m2),
            DistanceMeasure::BettingCommitments(mode) => dif_betp(m1, m2, mode),
            DistanceMeasure::Red => red_distance(m1, m2),
        }
    }
}

impl fmt::Display for DistanceMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceMeasure::Jousselme => f.write_str("jousselme"),
            DistanceMeasure::BettingCommitments(mode) => write!(f, "betp:{mode}"),
            DistanceMeasure::Red => f.write_str("red"),
        }
    }
}

impl FromStr for DistanceMeasure {
    type Err = Error;

    /// Accepts `red`, `jousselme`, `betp` and `betp:all|singleton|focal`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None => match s {
                "red" => Ok(DistanceMeasure::Red),
                "jousselme" => Ok(DistanceMeasure::Jousselme),
                "betp" => Ok(DistanceMeasure::BettingCommitments(BetPMode::default())),
                _ => Err(Error::UnknownMeasure(s.to_owned())),
            },
            Some(("betp", mode)) => mode.parse().map(DistanceMeasure::BettingCommitments),
            Some(_) => Err(Error::UnknownMeasure(s.to_owned())),
        }
    }
}
