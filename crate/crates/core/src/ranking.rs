//! Ranking candidates by their distance to a reference mass function.

use crate::distance::DistanceMeasure;
use crate::{Bba, Error, Result};

/// Distances closer than this are considered tied.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct RankedCandidate {
    pub name: String,
    pub distance: f64,
    /// 1-based; tied candidates share the rank of the first of their group.
    pub rank: usize,
    /// Set when at least one other candidate has the same distance.
    pub tied: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    pub reference: String,
    pub measure: DistanceMeasure,
    /// Best (closest) first.
    pub entries: Vec<RankedCandidate>,
}

impl Ranking {
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.name.as_str())
    }

    /// True when the measure separates every candidate from every other.
    pub fn is_strict(&self) -> bool {
        self.entries.iter().all(|e| !e.tied)
    }
}

/// Orders `candidates` by ascending distance to `reference`.
///
/// Candidates whose distances agree within [`TIE_TOLERANCE`] keep their input
/// order and are flagged as tied.
pub fn rank_by_distance<S: AsRef<str>>(
    reference_name: &str,
    reference: &Bba,
    candidates: &[(S, Bba)],
    measure: DistanceMeasure,
) -> Result<Ranking> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let mut scored = candidates
        .iter()
        .enumerate()
        .map(|(pos, (name, bba))| Ok((pos, name.as_ref(), measure.distance(reference, bba)?)))
        .collect::<Result<Vec<_>>>()?;
    scored.sort_by(|a, b| a.2.total_cmp(&b.2).then(a.0.cmp(&b.0)));

    // chain near-equal neighbours into tie groups, then restore input order inside each
    let mut groups: Vec<Vec<(usize, &str, f64)>> = Vec::new();
    for item in scored {
        match groups.last_mut() {
            Some(group) if item.2 - group.last().unwrap().2 <= TIE_TOLERANCE => group.push(item),
            _ => groups.push(vec![item]),
        }
    }

    let mut entries = Vec::with_capacity(candidates.len());
    for mut group in groups {
        group.sort_by_key(|g| g.0);
        let rank = entries.len() + 1;
        let tied = group.len() > 1;
        entries.extend(
            group
                .into_iter()
                .map(|(_, name, distance)| RankedCandidate {
                    name: name.to_owned(),
                    distance,
                    rank,
                    tied,
                }),
        );
    }
    Ok(Ranking {
        reference: reference_name.to_owned(),
        measure,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pignistic::BetPMode;
    use crate::Frame;

    fn example(sets: [&[usize]; 3]) -> Vec<(String, Bba)> {
        let frame = Frame::new(["Poor", "Low", "Middle", "High", "Perfect"]).unwrap();
        sets.iter()
            .enumerate()
            .map(|(i, s)| {
                (
                    format!("m{}", i + 1),
                    Bba::from_indices(&frame, &[(s, 1.0)]).unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn red_separates_adjacent_grades() {
        let set = example([&[1], &[2], &[3]]);
        let r = rank_by_distance("m1", &set[0].1, &set, DistanceMeasure::Red).unwrap();
        assert_eq!(r.names().collect::<Vec<_>>(), ["m1", "m2", "m3"]);
        assert_eq!(r.entries[0].distance, 0.0);
        assert_eq!(
            r.entries.iter().map(|e| e.rank).collect::<Vec<_>>(),
            [1, 2, 3]
        );
        assert!(r.is_strict());
    }

    #[test]
    fn old_measures_tie() {
        let set = example([&[1], &[2], &[5]]);
        for measure in [
            DistanceMeasure::Jousselme,
            DistanceMeasure::BettingCommitments(BetPMode::AllSubsets),
        ] {
            let r = rank_by_distance("m1", &set[0].1, &set, measure).unwrap();
            assert_eq!(r.names().collect::<Vec<_>>(), ["m1", "m2", "m3"]);
            assert!(!r.entries[0].tied);
            assert!(r.entries[1].tied && r.entries[2].tied);
            assert_eq!(r.entries[1].rank, 2);
            assert_eq!(r.entries[2].rank, 2);
        }
    }

    #[test]
    fn ties_keep_input_order() {
        let mut set = example([&[1], &[2], &[5]]);
        set.swap(1, 2);
        let r = rank_by_distance("m1", &set[0].1, &set, DistanceMeasure::Jousselme).unwrap();
        assert_eq!(r.names().collect::<Vec<_>>(), ["m1", "m3", "m2"]);
    }

    #[test]
    fn empty_candidates() {
        let set = example([&[1], &[2], &[3]]);
        let none: &[(String, Bba)] = &[];
        assert_eq!(
            rank_by_distance("m1", &set[0].1, none, DistanceMeasure::Red).unwrap_err(),
            Error::EmptyCandidates
        );
    }

    #[test]
    fn mismatched_frames() {
        let set = example([&[1], &[2], &[3]]);
        let other = vec![("x", Bba::vacuous(&Frame::numbered(2).unwrap()))];
        assert_eq!(
            rank_by_distance("m1", &set[0].1, &other, DistanceMeasure::Red).unwrap_err(),
            Error::FrameMismatch
        );
    }
}
