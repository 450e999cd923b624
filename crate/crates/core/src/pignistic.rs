//! Pignistic transformation and the distance between betting commitments.

use std::fmt;
use std::str::FromStr;

use crate::{Bba, Error, FocalSet, Frame, Result};

/// Probability over the singletons of a frame, obtained by spreading each
/// focal mass evenly over its members.
#[derive(Debug, Clone, PartialEq)]
pub struct Pignistic {
    frame: Frame,
    probs: Vec<f64>,
}

impl Pignistic {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Probabilities indexed by ordinal position (slot 0 is element 1).
    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// Probability of the element at 1-based position `index`.
    pub fn singleton(&self, index: usize) -> Option<f64> {
        index
            .checked_sub(1)
            .and_then(|i| self.probs.get(i))
            .copied()
    }

    /// Betting commitment to a set: the sum over its members.
    pub fn betp_of_subset(&self, set: &FocalSet) -> Result<f64> {
        if !self.frame.contains_set(set) {
            return Err(Error::FrameMismatch);
        }
        Ok(set.indices().map(|i| self.probs[i - 1]).sum())
    }

    /// The Bayesian mass function carrying these probabilities on singletons.
    pub fn to_bba(&self) -> Bba {
        let masses = self
            .probs
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0.0)
            .map(|(i, &p)| (self.frame.singleton(i + 1).expect("index within frame"), p))
            .collect();
        Bba::from_parts(self.frame.clone(), masses)
    }

    /// `self - other`, coordinate by coordinate.
    pub fn difference(&self, other: &Pignistic) -> Result<Vec<f64>> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch);
        }
        Ok(self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| a - b)
            .collect())
    }
}

/// Pignistic transformation `BetP({x}) = Σ_{A ∋ x} m(A) / |A|`.
///
/// The empty set never carries mass here, so no `1 - m(∅)` rescaling is needed.
pub fn ppt(bba: &Bba) -> Pignistic {
    let frame = bba.frame().clone();
    let mut probs = vec![0.0; frame.len()];
    for (set, mass) in bba.focal_elements() {
        let share = mass / set.len() as f64;
        for i in set.indices() {
            probs[i - 1] += share;
        }
    }
    Pignistic { frame, probs }
}

/// Which subsets the betting-commitment distance maximizes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BetPMode {
    /// Every subset of the frame.
    #[default]
    AllSubsets,
    /// Singletons only.
    Singletons,
    /// Focal sets of either operand.
    FocalSets,
}

impl BetPMode {
    pub fn as_str(self) -> &'static str {
        match self {
            BetPMode::AllSubsets => "all",
            BetPMode::Singletons => "singleton",
            BetPMode::FocalSets => "focal",
        }
    }
}

impl fmt::Display for BetPMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BetPMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" | "all-subsets" => Ok(BetPMode::AllSubsets),
            "singleton" | "singletons" => Ok(BetPMode::Singletons),
            "focal" | "focal-sets" => Ok(BetPMode::FocalSets),
            _ => Err(Error::UnknownMeasure(format!("betp:{s}"))),
        }
    }
}

/// Largest gap between the betting commitments of `m1` and `m2`.
///
/// Over all subsets the maximum is reached by collecting exactly the elements
/// where `m1` bets more, so it equals the sum of positive coordinates of
/// `BetP_m1 - BetP_m2` (their total variation distance).
pub fn dif_betp(m1: &Bba, m2: &Bba, mode: BetPMode) -> Result<f64> {
    m1.ensure_same_frame(m2)?;
    let d = ppt(m1).difference(&ppt(m2))?;
    let gap = match mode {
        BetPMode::AllSubsets => {
            let pos: f64 = d.iter().filter(|x| **x > 0.0).sum();
            let neg: f64 = -d.iter().filter(|x| **x < 0.0).sum::<f64>();
            // equal analytically; taking the max keeps the result symmetric bit for bit
            pos.max(neg)
        }
        BetPMode::Singletons => d.iter().fold(0.0, |acc: f64, x| acc.max(x.abs())),
        BetPMode::FocalSets => m1
            .focal_elements()
            .chain(m2.focal_elements())
            .map(|(set, _)| set.indices().map(|i| d[i - 1]).sum::<f64>().abs())
            .fold(0.0, f64::max),
    };
    Ok(gap.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn three_element_worked_example() {
        let frame = Frame::new(["x1", "x2", "x3"]).unwrap();
        let m =
            Bba::from_indices(&frame, &[(&[1], 0.3), (&[1, 2], 0.4), (&[1, 2, 3], 0.3)]).unwrap();
        let p = ppt(&m);
        let expected = [0.6, 0.3, 0.1];
        for (got, want) in p.probabilities().iter().zip(expected) {
            assert!(close(*got, want), "{got} vs {want}");
        }
        assert!(close(p.betp_of_subset(&frame.theta()).unwrap(), 1.0));
    }

    #[test]
    fn categorical_and_vacuous() {
        let frame = Frame::numbered(5).unwrap();
        let p = ppt(&Bba::categorical(&frame, frame.singleton(4).unwrap()));
        assert_eq!(p.probabilities(), &[0.0, 0.0, 0.0, 1.0, 0.0]);
        let u = ppt(&Bba::vacuous(&frame));
        assert!(u.probabilities().iter().all(|x| close(*x, 0.2)));
        assert!(close(
            u.betp_of_subset(&frame.set_of_indices([1, 2]).unwrap())
                .unwrap(),
            0.4
        ));
    }

    #[test]
    fn subset_commitment_of_split_mass() {
        let frame = Frame::numbered(5).unwrap();
        let p = ppt(&Bba::from_indices(&frame, &[(&[2, 3], 1.0)]).unwrap());
        assert_eq!(p.probabilities(), &[0.0, 0.5, 0.5, 0.0, 0.0]);
        assert!(close(
            p.betp_of_subset(&frame.set_of_indices([2, 3]).unwrap())
                .unwrap(),
            1.0
        ));
        let other = Frame::numbered(4).unwrap();
        assert_eq!(
            p.betp_of_subset(&other.theta()).unwrap_err(),
            Error::FrameMismatch
        );
    }

    #[test]
    fn gap_between_disjoint_categoricals_is_one() {
        let frame = Frame::numbered(5).unwrap();
        let m1 = Bba::categorical(&frame, frame.singleton(1).unwrap());
        let m2 = Bba::categorical(&frame, frame.singleton(2).unwrap());
        for mode in [
            BetPMode::AllSubsets,
            BetPMode::Singletons,
            BetPMode::FocalSets,
        ] {
            assert!(close(dif_betp(&m1, &m2, mode).unwrap(), 1.0));
            assert_eq!(dif_betp(&m1, &m1, mode).unwrap(), 0.0);
        }
    }

    #[test]
    fn gap_for_nested_categoricals_is_half() {
        let frame = Frame::numbered(5).unwrap();
        let m1 = Bba::categorical(&frame, frame.singleton(1).unwrap());
        let m2 = Bba::from_indices(&frame, &[(&[1, 2], 1.0)]).unwrap();
        for mode in [
            BetPMode::AllSubsets,
            BetPMode::Singletons,
            BetPMode::FocalSets,
        ] {
            assert!(close(dif_betp(&m1, &m2, mode).unwrap(), 0.5));
        }
    }

    #[test]
    fn modes_parse() {
        assert_eq!("all".parse::<BetPMode>().unwrap(), BetPMode::AllSubsets);
        assert_eq!(
            "singleton".parse::<BetPMode>().unwrap(),
            BetPMode::Singletons
        );
        assert_eq!("focal".parse::<BetPMode>().unwrap(), BetPMode::FocalSets);
        assert!("some".parse::<BetPMode>().is_err());
        assert_eq!(BetPMode::default(), BetPMode::AllSubsets);
    }

    #[test]
    fn pignistic_bba_round_trip() {
        let frame = Frame::numbered(4).unwrap();
        let m = Bba::from_indices(&frame, &[(&[1, 2], 0.5), (&[4], 0.5)]).unwrap();
        let b = ppt(&m).to_bba();
        assert!(b.is_bayesian());
        assert_eq!(b.focal_count(), 3);
        assert_eq!(ppt(&b), ppt(&m));
    }
}
