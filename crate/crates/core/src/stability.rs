//! Blocking pairs and exhaustive enumeration of the stable set.

use crate::agent::AgentId;
use crate::error::Error;
use crate::matching::Matching;
use crate::oracle::permutations;
use crate::profile::Profile;
use alloc::vec::Vec;

/// A man and a woman who prefer each other over their assigned partners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockingPair {
    pub man: AgentId,
    pub woman: AgentId,
}

/// Hard guard for [`all_stable_matchings`]: the brute-force filter visits n!
/// candidate matchings.
pub const STABLE_ENUMERATION_GUARD: usize = 8;

/// All pairs `(m, w)` with `w ≻_m μ(m)` and `m ≻_w μ(w)`, in ascending
/// `(man, woman)` order. Empty iff `matching` is stable under `profile`.
pub fn blocking_pairs(profile: &Profile, matching: &Matching) -> Vec<BlockingPair> {
    assert_eq!(profile.n(), matching.n(), "matching size does not fit the profile");
    let n = profile.n();
    let mut out = Vec::new();
    for m in 0..n {
        let matched_rank = profile.man_rank_of(m, matching.woman_of(m));
        for w in 0..n {
            if profile.man_rank_of(m, w) < matched_rank
                && profile.woman_rank_of(w, m) < profile.woman_rank_of(w, matching.man_of(w))
            {
                out.push(BlockingPair { man: AgentId::man(m), woman: AgentId::woman(w) });
            }
        }
    }
    out
}

/// True iff `matching` has no blocking pair under `profile`.
pub fn is_stable(profile: &Profile, matching: &Matching) -> bool {
    let n = profile.n();
    for m in 0..n {
        let matched_rank = profile.man_rank_of(m, matching.woman_of(m));
        for &w in &profile.man_order(m)[..matched_rank] {
            if profile.woman_rank_of(w, m) < profile.woman_rank_of(w, matching.man_of(w)) {
                return false;
            }
        }
    }
    true
}

/// The exact stable set, computed by filtering all n! matchings.
///
/// Intended for desk-scale verification only; refuses to run for
/// `n > STABLE_ENUMERATION_GUARD`. The result is in ascending lexicographic
/// order of the man-to-woman assignment.
pub fn all_stable_matchings(profile: &Profile) -> Result<Vec<Matching>, Error> {
    let n = profile.n();
    if n > STABLE_ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            what: "all_stable_matchings",
            size: n,
            limit: STABLE_ENUMERATION_GUARD,
        });
    }
    let mut out = Vec::new();
    for perm in permutations(n) {
        let mu = Matching::from_man_to_woman(perm).expect("permutations are bijections");
        if is_stable(profile, &mu) {
            out.push(mu);
        }
    }
    Ok(out)
}
