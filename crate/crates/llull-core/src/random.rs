//! Deterministic pseudo-random generation for the verification command,
//! the randomised experiment, and the test suites. Everything is seeded
//! and platform-independent so runs are reproducible.

use alloc::vec::Vec;

use crate::ballots::{Ballot, LlullMatrix, Profile};
use crate::belief::Valuation;
use crate::doctrines::default_option_names;
use crate::rational::{rat, Rat};
use num_traits::Zero;

/// SplitMix64 generator; tiny, seedable and stable across platforms.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw from `0..bound`; `bound` must be positive.
    pub fn gen_range(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn gen_bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.gen_range(i + 1));
        }
    }
}

fn group_sequence(rng: &mut SplitMix64, sequence: Vec<usize>) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for o in sequence {
        if groups.is_empty() || rng.gen_range(3) < 2 {
            groups.push(alloc::vec![o]);
        } else {
            groups.last_mut().unwrap().push(o);
        }
    }
    groups
}

fn random_listing(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    let mut listed: Vec<usize> = (0..n).filter(|_| rng.gen_range(4) < 3).collect();
    if listed.is_empty() {
        listed.push(rng.gen_range(n));
    }
    rng.shuffle(&mut listed);
    listed
}

/// Ranked ballots with ties and truncation, small integer weights.
pub fn random_ranked_profile(rng: &mut SplitMix64, n: usize, max_ballots: usize) -> Profile {
    let ballots = (0..1 + rng.gen_range(max_ballots))
        .map(|_| {
            let listing = random_listing(rng, n);
            Ballot {
                weight: rat((1 + rng.gen_range(4)) as i64, 1),
                approved_groups: group_sequence(rng, listing),
                disapproved_groups: Vec::new(),
                has_divider: false,
            }
        })
        .collect();
    Profile::new(default_option_names(n), ballots).expect("generated profile is valid")
}

/// Strict complete rankings, small integer weights.
pub fn random_complete_strict_profile(
    rng: &mut SplitMix64,
    n: usize,
    max_ballots: usize,
) -> Profile {
    let ballots = (0..1 + rng.gen_range(max_ballots))
        .map(|_| {
            let mut order: Vec<usize> = (0..n).collect();
            rng.shuffle(&mut order);
            Ballot {
                weight: rat((1 + rng.gen_range(4)) as i64, 1),
                approved_groups: order.into_iter().map(|o| alloc::vec![o]).collect(),
                disapproved_groups: Vec::new(),
                has_divider: false,
            }
        })
        .collect();
    Profile::new(default_option_names(n), ballots).expect("generated profile is valid")
}

/// Ballots with an approval divider at a random depth, plus ties and
/// truncation on both sides.
pub fn random_divided_profile(rng: &mut SplitMix64, n: usize, max_ballots: usize) -> Profile {
    let ballots = (0..1 + rng.gen_range(max_ballots))
        .map(|_| {
            let listing = random_listing(rng, n);
            let groups = group_sequence(rng, listing);
            let cut = rng.gen_range(groups.len() + 1);
            let (approved, disapproved) = {
                let mut approved = groups;
                let disapproved = approved.split_off(cut);
                (approved, disapproved)
            };
            Ballot {
                weight: rat((1 + rng.gen_range(4)) as i64, 1),
                approved_groups: approved,
                disapproved_groups: disapproved,
                has_divider: true,
            }
        })
        .collect();
    Profile::new(default_option_names(n), ballots).expect("generated profile is valid")
}

/// A Llull matrix with entries `a/d`, `b/d` such that `a + b <= d`.
pub fn random_matrix(rng: &mut SplitMix64, n: usize) -> LlullMatrix {
    random_matrix_with(rng, n, false)
}

/// A complete Llull matrix: opposed entries sum to exactly 1.
pub fn random_complete_matrix(rng: &mut SplitMix64, n: usize) -> LlullMatrix {
    random_matrix_with(rng, n, true)
}

#[allow(clippy::needless_range_loop)]
fn random_matrix_with(rng: &mut SplitMix64, n: usize, complete: bool) -> LlullMatrix {
    let mut rows: Vec<Vec<Rat>> = (0..n).map(|_| alloc::vec![Rat::zero(); n]).collect();
    for x in 0..n {
        for y in x + 1..n {
            let d = 2 + rng.gen_range(7) as i64;
            let a = rng.gen_range(d as usize + 1) as i64;
            let b = if complete {
                d - a
            } else {
                rng.gen_range((d - a) as usize + 1) as i64
            };
            let (a, b) = if rng.gen_bool() { (a, b) } else { (b, a) };
            rows[x][y] = rat(a, d);
            rows[y][x] = rat(b, d);
        }
    }
    LlullMatrix::from_rows(default_option_names(n), rows).expect("generated matrix is valid")
}

/// A valuation with small-denominator values in `[0, 1]`.
pub fn random_valuation(rng: &mut SplitMix64, len: usize) -> Valuation {
    let values = (0..len)
        .map(|_| {
            let d = 1 + rng.gen_range(6) as i64;
            rat(rng.gen_range(d as usize + 1) as i64, d)
        })
        .collect();
    Valuation::from_values(values).expect("generated values are in range")
}
