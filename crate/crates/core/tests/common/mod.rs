#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use evrank::{Bba, Frame};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random mass function with between 1 and `max_focal` focal sets.
pub fn random_bba(rng: &mut impl Rng, frame: &Frame, max_focal: usize) -> Bba {
    let n = frame.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let count = rng.gen_range(1..=max_focal);
    let entries: Vec<_> = (0..count)
        .map(|_| {
            let bits = loop {
                let b = rng.gen::<u64>() & full;
                if b != 0 {
                    break b;
                }
            };
            (frame.from_bits(bits).unwrap(), rng.gen_range(0.01..1.0))
        })
        .collect();
    Bba::new_normalized(frame, entries).unwrap()
}

/// Random mass function whose focal sets are all singletons or small sets,
/// useful to provoke high conflict.
pub fn random_sparse_bba(rng: &mut impl Rng, frame: &Frame, max_focal: usize) -> Bba {
    let n = frame.len();
    let count = rng.gen_range(1..=max_focal);
    let entries: Vec<_> = (0..count)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(1..=n);
            (
                frame.set_of_indices([a, b]).unwrap(),
                rng.gen_range(0.01..1.0),
            )
        })
        .collect();
    Bba::new_normalized(frame, entries).unwrap()
}

pub fn categorical(frame: &Frame, set: &[usize]) -> Bba {
    Bba::from_indices(frame, &[(set, 1.0)]).unwrap()
}

pub fn grades() -> Frame {
    Frame::new(["Poor", "Low", "Middle", "High", "Perfect"]).unwrap()
}

/// proptest strategy: a frame size in `sizes` and a list of (mask, weight) pairs.
pub fn arb_bba_parts(
    sizes: std::ops::RangeInclusive<usize>,
    max_focal: usize,
) -> impl Strategy<Value = (usize, Vec<(u64, f64)>)> {
    sizes.prop_flat_map(move |n| {
        let full = (1u64 << n) - 1;
        (
            Just(n),
            prop::collection::vec((1..=full, 0.01f64..1.0), 1..=max_focal),
        )
    })
}

pub fn bba_from_parts(frame: &Frame, parts: &[(u64, f64)]) -> Bba {
    Bba::new_normalized(
        frame,
        parts.iter().map(|&(b, w)| (frame.from_bits(b).unwrap(), w)),
    )
    .unwrap()
}

// ---- independent oracles -------------------------------------------------

pub type SetMass = BTreeMap<BTreeSet<usize>, f64>;

pub fn as_sets(bba: &Bba) -> SetMass {
    bba.focal_elements()
        .map(|(s, m)| (s.indices().collect(), m))
        .collect()
}

/// Dempster's rule by direct enumeration over ordered index sets.
pub fn dempster_oracle(m1: &Bba, m2: &Bba) -> Option<(SetMass, f64)> {
    let a = as_sets(m1);
    let b = as_sets(m2);
    let mut joint: SetMass = BTreeMap::new();
    let mut k = 0.0;
    for (x, mx) in &a {
        for (y, my) in &b {
            let z: BTreeSet<usize> = x.intersection(y).copied().collect();
            if z.is_empty() {
                k += mx * my;
            } else {
                *joint.entry(z).or_default() += mx * my;
            }
        }
    }
    if k >= 1.0 - 1e-12 {
        return None;
    }
    for v in joint.values_mut() {
        *v /= 1.0 - k;
    }
    Some((joint, k))
}

/// Pignistic vector computed element by element from the set representation.
pub fn betp_oracle(bba: &Bba) -> Vec<f64> {
    let n = bba.frame().len();
    let sets = as_sets(bba);
    (1..=n)
        .map(|x| {
            sets.iter()
                .filter(|(s, _)| s.contains(&x))
                .map(|(s, m)| m / s.len() as f64)
                .sum()
        })
        .collect()
}

/// Max over every subset of the frame of the betting-commitment gap.
pub fn betp_gap_brute_force(p1: &[f64], p2: &[f64]) -> f64 {
    let n = p1.len();
    let d: Vec<f64> = p1.iter().zip(p2).map(|(a, b)| a - b).collect();
    // Gray-code walk keeps each step O(1)
    let mut best = 0.0f64;
    let mut sum = 0.0f64;
    let mut prev_gray = 0u64;
    for i in 1u64..(1u64 << n) {
        let gray = i ^ (i >> 1);
        let flipped = (gray ^ prev_gray).trailing_zeros() as usize;
        if gray & (1 << flipped) != 0 {
            sum += d[flipped];
        } else {
            sum -= d[flipped];
        }
        prev_gray = gray;
        best = best.max(sum.abs());
    }
    best
}

/// Jousselme's distance over the full `2^N - 1` basis of non-empty subsets.
pub fn jousselme_full_basis(m1: &Bba, m2: &Bba) -> f64 {
    let n = m1.frame().len();
    let size = (1usize << n) - 1;
    let mass = |m: &Bba, bits: u64| m.mass_of(&m.frame().from_bits(bits).unwrap()).unwrap();
    let d: Vec<f64> = (1..=size as u64)
        .map(|b| mass(m1, b) - mass(m2, b))
        .collect();
    let mut q = 0.0;
    for i in 0..size {
        if d[i] == 0.0 {
            continue;
        }
        let a = (i + 1) as u64;
        for j in 0..size {
            if d[j] == 0.0 {
                continue;
            }
            let b = (j + 1) as u64;
            let jac = (a & b).count_ones() as f64 / (a | b).count_ones() as f64;
            q += d[i] * jac * d[j];
        }
    }
    (0.5 * q).max(0.0).sqrt()
}

/// RED through the zero-sum expansion `dᵀSd = -(1/(N-1)) Σ d_i d_j |i-j|`.
pub fn red_zero_sum(p1: &[f64], p2: &[f64]) -> f64 {
    let n = p1.len();
    if n == 1 {
        return 0.0;
    }
    let d: Vec<f64> = p1.iter().zip(p2).map(|(a, b)| a - b).collect();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            acc += d[i] * d[j] * i.abs_diff(j) as f64;
        }
    }
    let q = -acc / (n - 1) as f64;
    (0.5 * q).max(0.0).sqrt()
}
