//! Men-proposing deferred acceptance with proposal logging.

use crate::matching::Matching;
use crate::profile::Profile;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// Every proposal made during one deferred-acceptance run, in execution order.
///
/// Pairs are `(man, woman)` 0-based indices. Each man proposes along a prefix
/// of his list, so no pair repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProposalLog {
    proposals: Vec<(usize, usize)>,
}

impl ProposalLog {
    /// Proposals in the order they were made.
    pub fn proposals(&self) -> &[(usize, usize)] {
        &self.proposals
    }

    /// The proposals as an unordered set.
    pub fn as_set(&self) -> BTreeSet<(usize, usize)> {
        self.proposals.iter().copied().collect()
    }

    pub fn contains(&self, man: usize, woman: usize) -> bool {
        self.proposals.iter().any(|&p| p == (man, woman))
    }

    pub fn len(&self) -> usize {
        self.proposals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.proposals.is_empty()
    }
}

/// Runs men-proposing deferred acceptance.
///
/// The run proceeds in rounds: every man unmatched at the start of a round
/// proposes (in ascending index order) to the best woman who has not yet
/// rejected him, and each woman keeps the best proposal she has seen so far.
/// The matching is independent of this scheduling; fixing it makes the
/// proposal log deterministic.
///
/// Returns the men-optimal stable matching together with the full log.
pub fn deferred_acceptance(profile: &Profile) -> (Matching, ProposalLog) {
    let n = profile.n();
    let mut next = alloc::vec![0usize; n]; // next position each man will try
    let mut engaged_to: Vec<Option<usize>> = alloc::vec![None; n]; // woman -> man
    let mut engagement: Vec<Option<usize>> = alloc::vec![None; n]; // man -> woman
    let mut log = Vec::new();
    let mut round: Vec<usize> = Vec::with_capacity(n);

    loop {
        round.clear();
        round.extend((0..n).filter(|&m| engagement[m].is_none() && next[m] < n));
        if round.is_empty() {
            break;
        }
        for &m in &round {
            let w = profile.man_order(m)[next[m]];
            next[m] += 1;
            log.push((m, w));
            match engaged_to[w] {
                None => {
                    engaged_to[w] = Some(m);
                    engagement[m] = Some(w);
                }
                Some(cur) => {
                    if profile.woman_rank_of(w, m) < profile.woman_rank_of(w, cur) {
                        engagement[cur] = None;
                        engaged_to[w] = Some(m);
                        engagement[m] = Some(w);
                    }
                }
            }
        }
    }

    let man_to_woman: Vec<usize> = engagement
        .into_iter()
        .map(|w| w.expect("complete strict lists leave no man unmatched"))
        .collect();
    let matching = Matching::from_man_to_woman(man_to_woman)
        .expect("deferred acceptance produces a bijection");
    (matching, ProposalLog { proposals: log })
}
