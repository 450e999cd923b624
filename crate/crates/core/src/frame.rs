//! Ordered frames of discernment and their subsets.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest supported frame; focal sets are stored as 64-bit masks.
pub const MAX_FRAME_SIZE: usize = 64;

/// An ordered set of hypotheses.
///
/// The order carries meaning: the element at 1-based position `i` is closer to
/// position `i + 1` than to `i + 2`. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(Error::FrameTooLarge(labels.len()));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    /// A frame labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// 1-based ordinal position of `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label).map(|i| i + 1)
    }

    /// Label at 1-based position `index`.
    pub fn label(&self, index: usize) -> Option<&str> {
        index
            .checked_sub(1)
            .and_then(|i| self.labels.get(i))
            .map(String::as_str)
    }

    fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// The whole frame as a focal set.
    pub fn theta(&self) -> FocalSet {
        FocalSet {
            bits: self.full_mask(),
            frame_len: self.len() as u8,
        }
    }

    pub fn singleton(&self, index: usize) -> Result<FocalSet> {
        self.set_of_indices([index])
    }

    /// Builds a focal set from 1-based indices. Repeated indices are ignored.
    pub fn set_of_indices<I>(&self, indices: I) -> Result<FocalSet>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for index in indices {
            if index == 0 || index > self.len() {
                return Err(Error::IndexOutOfRange {
                    index,
                    size: self.len(),
                });
            }
            bits |= 1 << (index - 1);
        }
        self.from_bits(bits)
    }

    pub fn set_of_labels<I, S>(&self, labels: I) -> Result<FocalSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let indices = labels
            .into_iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_owned()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.set_of_indices(indices)
    }

    pub fn set_of_elements<'a, I>(&self, elements: I) -> Result<FocalSet>
    where
        I: IntoIterator<Item = &'a Element>,
    {
        let indices = elements
            .into_iter()
            .map(|e| match e {
                Element::Index(i) => Ok(*i),
                Element::Label(l) => self
                    .index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.clone())),
            })
            .collect::<Result<Vec<_>>>()?;
        self.set_of_indices(indices)
    }

    /// Bit `i` stands for the element at 1-based position `i + 1`.
    pub fn from_bits(&self, bits: u64) -> Result<FocalSet> {
        if bits == 0 {
            return Err(Error::EmptyFocalSet);
        }
        if bits & !self.full_mask() != 0 {
            return Err(Error::IndexOutOfRange {
                index: 64 - bits.leading_zeros() as usize,
                size: self.len(),
            });
        }
        Ok(FocalSet {
            bits,
            frame_len: self.len() as u8,
        })
    }

    /// True when `set` was built against a frame of this size.
    pub fn contains_set(&self, set: &FocalSet) -> bool {
        set.frame_len as usize == self.len()
    }

    /// Renders a set as `{Poor,Low}`.
    pub fn display_set(&self, set: &FocalSet) -> String {
        let names: Vec<&str> = set
            .indices()
            .map(|i| self.label(i).unwrap_or("?"))
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A non-empty subset of a frame.
///
/// Two sets are equal when they hold the same members and were drawn from
/// frames of the same size. Ordering follows the bit pattern, which keeps map
/// iteration deterministic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FocalSet {
    frame_len: u8,
    bits: u64,
}

impl FocalSet {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn frame_len(&self) -> usize {
        self.frame_len as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, index: usize) -> bool {
        (1..=64).contains(&index) && self.bits & (1 << (index - 1)) != 0
    }

    /// Member indices in increasing order, 1-based.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..64).filter(move |b| bits & (1 << b) != 0).map(|b| b + 1)
    }

    /// Size of the intersection; zero means the sets are disjoint.
    pub fn intersection_len(&self, other: &FocalSet) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn union_len(&self, other: &FocalSet) -> usize {
        (self.bits | other.bits).count_ones() as usize
    }

    /// `None` when the sets are disjoint.
    pub fn intersect(&self, other: &FocalSet) -> Option<FocalSet> {
        let bits = self.bits & other.bits;
        (bits != 0).then_some(FocalSet {
            bits,
            frame_len: self.frame_len,
        })
    }

    pub fn is_singleton(&self) -> bool {
        self.bits.is_power_of_two()
    }
}

impl fmt::Debug for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

/// One member of a set as written in input: a label or a 1-based index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Element {
    Index(usize),
    Label(String),
}

impl From<usize> for Element {
    fn from(i: usize) -> Self {
        Element::Index(i)
    }
}

impl From<&str> for Element {
    fn from(s: &str) -> Self {
        Element::Label(s.to_owned())
    }
}
