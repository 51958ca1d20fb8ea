//! Shared fixtures for the integration tests: the worked 5x5 instances used
//! throughout the test suite, plus a seeded uniform profile generator.

#![allow(dead_code)]

use matchmanip_core::{Matching, Profile};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Pair manipulation beats self and accomplice manipulation for (m1, w1).
pub fn example1() -> Profile {
    Profile::from_rows(
        &[
            vec![4, 2, 3, 1, 0],
            vec![3, 0, 4, 2, 1],
            vec![4, 3, 0, 1, 2],
            vec![0, 3, 4, 1, 2],
            vec![1, 3, 2, 0, 4],
        ],
        &[
            vec![2, 3, 4, 0, 1],
            vec![0, 4, 2, 1, 3],
            vec![4, 3, 2, 1, 0],
            vec![1, 4, 2, 0, 3],
            vec![4, 1, 3, 2, 0],
        ],
    )
    .unwrap()
}

/// m1's optimal one-for-all push-up promotes two women and produces the
/// women-optimal matching.
pub fn example2() -> Profile {
    Profile::from_rows(
        &[
            vec![0, 1, 2, 3, 4],
            vec![1, 2, 3, 4, 0],
            vec![2, 1, 0, 4, 3],
            vec![3, 4, 0, 1, 2],
            vec![4, 3, 2, 1, 0],
        ],
        &[
            vec![0, 1, 2, 3, 4],
            vec![2, 3, 4, 0, 1],
            vec![1, 4, 3, 0, 2],
            vec![4, 2, 1, 0, 3],
            vec![3, 1, 2, 4, 0],
        ],
    )
    .unwrap()
}

/// Concatenating the individually optimal lists of m1 and w1 hurts both.
pub fn example3() -> Profile {
    Profile::from_rows(
        &[
            vec![3, 2, 0, 1, 4],
            vec![0, 2, 1, 4, 3],
            vec![2, 0, 4, 1, 3],
            vec![0, 4, 1, 2, 3],
            vec![2, 4, 0, 3, 1],
        ],
        &[
            vec![2, 0, 4, 3, 1],
            vec![3, 2, 0, 1, 4],
            vec![0, 2, 1, 3, 4],
            vec![1, 4, 0, 2, 3],
            vec![1, 3, 4, 0, 2],
        ],
    )
    .unwrap()
}

/// A with-regret misreport by w1 that no single-man promotion replicates.
pub fn example4() -> Profile {
    Profile::from_rows(
        &[
            vec![2, 0, 1, 3, 4],
            vec![3, 4, 2, 0, 1],
            vec![0, 2, 4, 3, 1],
            vec![1, 0, 2, 3, 4],
            vec![0, 4, 2, 1, 3],
        ],
        &[
            vec![0, 1, 2, 3, 4],
            vec![2, 4, 0, 1, 3],
            vec![4, 1, 2, 3, 0],
            vec![1, 2, 0, 4, 3],
            vec![0, 4, 2, 1, 3],
        ],
    )
    .unwrap()
}

/// The optimal (m4, w1) pair manipulation is blocked by (m4, w5) under the
/// true lists.
pub fn example6() -> Profile {
    Profile::from_rows(
        &[
            vec![0, 3, 4, 2, 1],
            vec![3, 2, 0, 4, 1],
            vec![0, 1, 4, 3, 2],
            vec![4, 2, 3, 0, 1],
            vec![4, 1, 2, 0, 3],
        ],
        &[
            vec![1, 3, 0, 2, 4],
            vec![4, 1, 3, 2, 0],
            vec![4, 0, 3, 1, 2],
            vec![2, 4, 3, 0, 1],
            vec![0, 2, 3, 4, 1],
        ],
    )
    .unwrap()
}

/// Pushing up w1 or w3 in accomplice m3's list triggers distinct proposal
/// chains.
pub fn example7() -> Profile {
    Profile::from_rows(
        &[
            vec![4, 1, 0, 3, 2],
            vec![0, 4, 2, 1, 3],
            vec![1, 3, 2, 0, 4],
            vec![4, 1, 2, 0, 3],
            vec![2, 1, 3, 0, 4],
        ],
        &[
            vec![0, 4, 2, 3, 1],
            vec![4, 3, 0, 1, 2],
            vec![3, 2, 0, 1, 4],
            vec![4, 3, 2, 0, 1],
            vec![2, 1, 3, 0, 4],
        ],
    )
    .unwrap()
}

pub fn matching(man_to_woman: &[usize]) -> Matching {
    Matching::from_man_to_woman(man_to_woman.to_vec()).unwrap()
}

/// Uniform random profile from a fixed seed: every list is an independent
/// uniform permutation.
pub fn seeded_profile(n: usize, seed: u64) -> Profile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = |count: usize| -> Vec<Vec<usize>> {
        (0..count)
            .map(|_| {
                let mut row: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    let j = rng.random_range(0..=i);
                    row.swap(i, j);
                }
                row
            })
            .collect()
    };
    let men = rows(n);
    let women = rows(n);
    Profile::from_rows(&men, &women).unwrap()
}
