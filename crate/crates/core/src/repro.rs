//! Embedded benchmark fixtures and the tables recomputed from them.
//!
//! Two benchmarks are bundled:
//!
//! - the graded-example comparison: three categorical or near-categorical
//!   mass functions per example on the five-grade frame, scored against `m1`
//!   with all three measures and checked against the published values;
//! - the growing-subset sweep on a 20-element frame, where one focal set of
//!   `m1` grows from `{1}` to the whole frame while `m2` stays fixed.

use crate::distance::{jousselme_distance, red_distance, DistanceMeasure};
use crate::document::{parse_document, EvidenceDocument};
use crate::pignistic::{dif_betp, BetPMode};
use crate::table::{round_display, Table};
use crate::{Bba, Frame, Result};

/// Published values are matched against the displayed (rounded) result.
pub const MATCH_TOLERANCE: f64 = 5e-4;

const EXAMPLE_DOCUMENTS: [(u8, &str); 4] = [
    (1, include_str!("../data/example1.json")),
    (2, include_str!("../data/example2.json")),
    (3, include_str!("../data/example3.json")),
    (4, include_str!("../data/example4.json")),
];

/// The bundled graded example `number` (1 to 4).
pub fn example_document(number: u8) -> Option<EvidenceDocument> {
    EXAMPLE_DOCUMENTS
        .iter()
        .find(|(n, _)| *n == number)
        .map(|(_, text)| parse_document(text).expect("bundled fixture is valid"))
}

type PublishedPair = [f64; 2];

/// Published distances from `m1` to (`m2`, `m3`) for examples 2 to 4.
const PUBLISHED_EXAMPLES: [(u8, PublishedPair, PublishedPair, PublishedPair); 3] = [
    //  example, jousselme,   betting,     red
    (2, [1.0, 1.0], [1.0, 1.0], [0.5, 0.707]),
    (3, [1.0, 1.0], [1.0, 1.0], [0.559, 0.901]),
    (4, [1.0, 1.0], [0.5, 0.5], [0.25, 0.354]),
];

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleRow {
    pub example: u8,
    pub reference: &'static str,
    pub candidate: &'static str,
    pub measure: DistanceMeasure,
    pub computed: f64,
    pub expected: f64,
    pub matches: bool,
}

fn matches(computed: f64, expected: f64) -> bool {
    (round_display(computed) - expected).abs() <= MATCH_TOLERANCE + 1e-12
}

/// Every published cell of the example comparison, recomputed.
pub fn example_rows() -> Result<Vec<ExampleRow>> {
    let measures = [
        DistanceMeasure::Jousselme,
        DistanceMeasure::BettingCommitments(BetPMode::AllSubsets),
        DistanceMeasure::Red,
    ];
    let mut rows = Vec::new();
    for (example, j, p, r) in PUBLISHED_EXAMPLES {
        let doc = example_document(example).expect("bundled example");
        let m1 = &doc.bbas["m1"];
        for (measure, published) in measures.iter().zip([j, p, r]) {
            for (candidate, expected) in ["m2", "m3"].into_iter().zip(published) {
                let computed = measure.distance(m1, &doc.bbas[candidate])?;
                rows.push(ExampleRow {
                    example,
                    reference: "m1",
                    candidate,
                    measure: *measure,
                    computed,
                    expected,
                    matches: matches(computed, expected),
                });
            }
        }
    }
    Ok(rows)
}

pub fn examples_table() -> Result<Table> {
    let mut t = Table::new(vec![
        "example",
        "reference",
        "candidate",
        "measure",
        "computed",
        "expected",
        "match",
    ]);
    for r in example_rows()? {
        t.push(vec![
            (r.example as usize).into(),
            r.reference.into(),
            r.candidate.into(),
            r.measure.to_string().into(),
            r.computed.into(),
            r.expected.into(),
            r.matches.into(),
        ]);
    }
    Ok(t)
}

/// The growing-subset benchmark on the frame `{1, …, 20}`.
///
/// `m1` puts 0.05 on `{2,3,4}`, 0.05 on `{7}`, 0.1 on the whole frame and 0.8
/// on `A = {1, …, k}`; at `k = 20` the last two merge. `m2` puts all mass on
/// `{1, …, 5}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    frame: Frame,
}

impl SweepSpec {
    pub const FRAME_SIZE: usize = 20;

    pub fn new() -> Self {
        Self {
            frame: Frame::numbered(Self::FRAME_SIZE).expect("20 numbered labels"),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn cases(&self) -> std::ops::RangeInclusive<usize> {
        1..=Self::FRAME_SIZE
    }

    /// Mass functions `(m1, m2)` of case `k`, where `A = {1, …, k}`.
    pub fn case(&self, k: usize) -> Result<(Bba, Bba)> {
        let f = &self.frame;
        let m1 = Bba::new(
            f,
            [
                (f.set_of_indices([2, 3, 4])?, 0.05),
                (f.singleton(7)?, 0.05),
                (f.set_of_indices(1..=k)?, 0.8),
                (f.theta(), 0.1),
            ],
        )?;
        let m2 = Bba::new(f, [(f.set_of_indices(1..=5)?, 1.0)])?;
        Ok((m1, m2))
    }
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self::new()
    }
}

/// Published sweep values per case: (jousselme, betting commitments, red).
pub const PUBLISHED_SWEEP: [(f64, f64, f64); 20] = [
    (0.7858, 0.605, 0.1871),
    (0.6866, 0.426, 0.1340),
    (0.5633, 0.248, 0.0882),
    (0.4286, 0.125, 0.0555),
    (0.1322, 0.125, 0.0597),
    (0.3883, 0.258, 0.0969),
    (0.5029, 0.355, 0.1349),
    (0.5705, 0.425, 0.1682),
    (0.6187, 0.480, 0.1980),
    (0.6553, 0.525, 0.2251),
    (0.6844, 0.560, 0.2499),
    (0.7081, 0.591, 0.2728),
    (0.7274, 0.617, 0.2943),
    (0.7444, 0.639, 0.3144),
    (0.7592, 0.658, 0.3333),
    (0.7658, 0.675, 0.3512),
    (0.7839, 0.689, 0.3682),
    (0.7944, 0.702, 0.3844),
    (0.8042, 0.714, 0.3999),
    (0.8123, 0.725, 0.4147),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub case: usize,
    pub jousselme: f64,
    pub betp_focal: f64,
    pub betp_all: f64,
    pub red: f64,
    /// Published (jousselme, betting commitments, red).
    pub published: (f64, f64, f64),
}

impl SweepRow {
    /// Per-column match flags at [`MATCH_TOLERANCE`] on displayed values.
    pub fn matches(&self) -> (bool, bool, bool) {
        (
            matches(self.jousselme, self.published.0),
            matches(self.betp_focal, self.published.1),
            matches(self.red, self.published.2),
        )
    }
}

pub fn sweep_rows() -> Result<Vec<SweepRow>> {
    let spec = SweepSpec::new();
    spec.cases()
        .map(|k| {
            let (m1, m2) = spec.case(k)?;
            Ok(SweepRow {
                case: k,
                jousselme: jousselme_distance(&m1, &m2)?,
                betp_focal: dif_betp(&m1, &m2, BetPMode::FocalSets)?,
                betp_all: dif_betp(&m1, &m2, BetPMode::AllSubsets)?,
                red: red_distance(&m1, &m2)?,
                published: PUBLISHED_SWEEP[k - 1],
            })
        })
        .collect()
}

pub fn sweep_table() -> Result<Table> {
    let mut t = Table::new(vec![
        "case",
        "d_j",
        "d_ppt_focal",
        "d_red",
        "d_ppt_all",
        "expected_d_j",
        "expected_d_ppt",
        "expected_d_red",
        "match_d_j",
        "match_d_ppt",
        "match_d_red",
    ]);
    for r in sweep_rows()? {
        let (mj, mp, mr) = r.matches();
        t.push(vec![
            r.case.into(),
            r.jousselme.into(),
            r.betp_focal.into(),
            r.red.into(),
            r.betp_all.into(),
            r.published.0.into(),
            r.published.1.into(),
            r.published.2.into(),
            mj.into(),
            mp.into(),
            mr.into(),
        ]);
    }
    Ok(t)
}

/// True when `values` falls to a single lowest plateau and then never falls again.
pub fn is_valley(values: &[f64]) -> bool {
    let Some(min) = values.iter().copied().reduce(f64::min) else {
        return false;
    };
    let first = values.iter().position(|&v| v == min).unwrap();
    let last = values.iter().rposition(|&v| v == min).unwrap();
    values[..=first].windows(2).all(|w| w[1] < w[0])
        && values[first..=last].iter().all(|&v| v == min)
        && values[last..].windows(2).all(|w| w[1] > w[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_examples_load() {
        for n in 1..=4 {
            let doc = example_document(n).unwrap();
            assert_eq!(doc.bbas.len(), 3);
            assert_eq!(doc.frame.len(), 5);
        }
        assert!(example_document(5).is_none());
    }

    #[test]
    fn sweep_last_case_merges_into_theta() {
        let spec = SweepSpec::new();
        let (m1, _) = spec.case(20).unwrap();
        assert_eq!(m1.focal_count(), 3);
        assert!((m1.mass_of(&spec.frame().theta()).unwrap() - 0.9).abs() < 1e-12);
        let (m1, m2) = spec.case(1).unwrap();
        assert_eq!(m1.focal_count(), 4);
        assert_eq!(m2.focal_count(), 1);
    }

    #[test]
    fn valley_shape() {
        assert!(is_valley(&[3.0, 2.0, 1.0, 1.0, 2.0]));
        assert!(is_valley(&[1.0, 2.0]));
        assert!(!is_valley(&[3.0, 1.0, 2.0, 1.5]));
        assert!(!is_valley(&[3.0, 3.0, 1.0]));
        assert!(!is_valley(&[1.0, 2.0, 1.0, 2.0]));
        assert!(!is_valley(&[]));
    }

    #[test]
    fn sweep_first_case() {
        let r = sweep_rows().unwrap()[0];
        assert!((r.jousselme - 0.7858).abs() < 5e-5);
        assert!((r.betp_focal - 0.605).abs() < 1e-12);
        assert!((r.betp_all - 0.73).abs() < 1e-12);
        assert!((r.red - 0.1871).abs() < 5e-5);
    }
}
