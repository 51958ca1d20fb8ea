//! Optimal pair manipulation: a man and a woman jointly misreport to give the
//! woman the best possible partner without changing the man's own match.
//!
//! The search space is the product of two small candidate families. For the
//! woman, every unilateral misreport is outcome-equivalent to some list that
//! moves an ordered pair of men to her top two positions; for the man (given
//! any fixed list of the woman), every feasible misreport is covered by his
//! partner-promoted "hat" list and its single-woman top promotions. Scanning
//! the product plus the truthful row and column therefore finds an optimum.

use crate::agent::AgentId;
use crate::da::deferred_acceptance;
use crate::matching::Matching;
use crate::one_for_one::{
    optimal_accomplice_manipulation, optimal_self_manipulation, ManipulationOutcome,
};
use crate::profile::{PreferenceList, Profile};
use crate::stability::{blocking_pairs, BlockingPair};
use crate::surgery::{is_inconspicuous, promote_to_top};
use alloc::vec::Vec;

/// A joint misreport for a manipulating pair and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairStrategy {
    pub man: AgentId,
    pub woman: AgentId,
    /// The man's submitted list (truthful when nothing strictly helps).
    pub man_list: PreferenceList,
    /// The woman's submitted list.
    pub woman_list: PreferenceList,
    /// Deferred-acceptance matching under the joint misreport.
    pub matching: Matching,
    /// True iff the woman strictly improves over truth-telling.
    pub improved: bool,
    /// The woman's improvement in true rank (old − new, ≥ 0).
    pub w_rank_delta: i64,
    /// Blocking pairs of `matching` under the true profile.
    pub blocking: Vec<BlockingPair>,
    /// True iff every blocking pair contains the accomplice.
    pub m_stable: bool,
    /// Inconspicuousness of the two submitted lists.
    pub man_list_inconspicuous: bool,
    pub woman_list_inconspicuous: bool,
}

/// The woman-side candidate family: every list obtained by moving an ordered
/// pair of distinct men to the top two positions of her true list, the
/// remainder kept in true order. Exactly n(n−1) lists, enumerated by
/// ascending first and then second man index.
pub fn candidate_set_sw(profile: &Profile, woman: usize) -> Vec<PreferenceList> {
    let wid = AgentId::woman(woman);
    let true_list = profile.list(wid);
    let n = profile.n();
    let mut out = Vec::with_capacity(n.saturating_sub(1) * n);
    for first in 0..n {
        for second in 0..n {
            if first == second {
                continue;
            }
            let (p, q) = (AgentId::man(first), AgentId::man(second));
            let mut order = Vec::with_capacity(n);
            order.push(p);
            order.push(q);
            order.extend(true_list.order().iter().copied().filter(|&a| a != p && a != q));
            out.push(PreferenceList::new(wid, order).expect("reordering preserves validity"));
        }
    }
    out
}

/// The man-side candidate family: his true list with his partner promoted to
/// the top (the hat list), plus, for each other woman, the hat list with that
/// woman promoted above everything. Exactly n lists.
pub fn candidate_set_sm(profile: &Profile, man: usize) -> Vec<PreferenceList> {
    let mid = AgentId::man(man);
    let (mu, _) = deferred_acceptance(profile);
    let partner = mu.partner_of(mid);
    let hat = promote_to_top(&profile.list(mid), partner);
    let mut out = Vec::with_capacity(profile.n());
    out.push(hat.clone());
    for w in 0..profile.n() {
        let wid = AgentId::woman(w);
        if wid != partner {
            out.push(promote_to_top(&hat, wid));
        }
    }
    out
}

struct PairScan<'a> {
    profile: &'a Profile,
    man: usize,
    woman: usize,
    truthful: Matching,
    partner: AgentId,
}

impl<'a> PairScan<'a> {
    fn new(profile: &'a Profile, man: usize, woman: usize) -> PairScan<'a> {
        let (truthful, _) = deferred_acceptance(profile);
        let partner = truthful.partner_of(AgentId::man(man));
        PairScan { profile, man, woman, truthful, partner }
    }

    /// Visits the truthful-plus-candidate grid in the fixed scan order,
    /// calling `visit` with each feasible cell that strictly beats `rank`
    /// at the time the scan reaches it. `visit` returns the new bar, or
    /// `None` to stop the scan.
    fn scan<F>(&self, mut bar: usize, mut visit: F)
    where
        F: FnMut(usize, &PreferenceList, &PreferenceList, Matching) -> Option<usize>,
    {
        let wid = AgentId::woman(self.woman);
        let mid = AgentId::man(self.man);
        let truthful_w = self.profile.list(wid);
        let truthful_m = self.profile.list(mid);
        let sm = candidate_set_sm(self.profile, self.man);

        let mut w_lists = Vec::with_capacity(1 + candidate_count(self.profile.n()));
        w_lists.push(truthful_w);
        w_lists.extend(candidate_set_sw(self.profile, self.woman));

        for w_list in &w_lists {
            let with_w = self.profile.with_list(w_list).expect("candidate fits profile");
            for m_list in core::iter::once(&truthful_m).chain(sm.iter()) {
                let trial = with_w.with_list(m_list).expect("candidate fits profile");
                let (mu, _) = deferred_acceptance(&trial);
                if mu.partner_of(mid) != self.partner {
                    continue;
                }
                let r = self.profile.rank(wid, mu.partner_of(wid));
                if r < bar {
                    match visit(r, m_list, w_list, mu) {
                        Some(new_bar) => bar = new_bar,
                        None => return,
                    }
                }
            }
        }
    }
}

fn candidate_count(n: usize) -> usize {
    n.saturating_sub(1) * n
}

/// Finds an optimal pair manipulation for `(man, woman)` by evaluating the
/// deferred-acceptance outcome of every candidate pair of lists, keeping the
/// first strict maximum of the woman's true-rank partner subject to the man's
/// match being unchanged. Returns the truthful lists when no candidate
/// strictly improves on truth-telling.
pub fn optimal_pair_manipulation(profile: &Profile, man: usize, woman: usize) -> PairStrategy {
    let scan = PairScan::new(profile, man, woman);
    let wid = AgentId::woman(woman);
    let mid = AgentId::man(man);
    let truthful_rank = profile.rank(wid, scan.truthful.partner_of(wid));

    let mut best: Option<(PreferenceList, PreferenceList, Matching, usize)> = None;
    scan.scan(truthful_rank, |r, m_list, w_list, mu| {
        best = Some((m_list.clone(), w_list.clone(), mu, r));
        Some(r)
    });

    let (man_list, woman_list, matching, rank) = match best {
        Some((ml, wl, mu, r)) => (ml, wl, mu, r),
        None => (profile.list(mid), profile.list(wid), scan.truthful.clone(), truthful_rank),
    };
    let blocking = blocking_pairs(profile, &matching);
    let m_stable = blocking.iter().all(|b| b.man == mid);
    PairStrategy {
        man: mid,
        woman: wid,
        man_list_inconspicuous: is_inconspicuous(&profile.list(mid), &man_list),
        woman_list_inconspicuous: is_inconspicuous(&profile.list(wid), &woman_list),
        man_list,
        woman_list,
        matching,
        improved: rank < truthful_rank,
        w_rank_delta: truthful_rank as i64 - rank as i64,
        blocking,
        m_stable,
    }
}

/// True iff some pair strategy for `(man, woman)` strictly improves the
/// woman. Stops at the first improving cell instead of searching for the
/// optimum.
pub fn pair_improvement_exists(profile: &Profile, man: usize, woman: usize) -> bool {
    let scan = PairScan::new(profile, man, woman);
    let wid = AgentId::woman(woman);
    let truthful_rank = profile.rank(wid, scan.truthful.partner_of(wid));
    let mut found = false;
    scan.scan(truthful_rank, |_, _, _, _| {
        found = true;
        None
    });
    found
}

/// Side-by-side comparison of the three searches for one `(man, woman)` pair.
#[derive(Debug, Clone)]
pub struct PairComparison {
    pub pair: PairStrategy,
    pub self_outcome: ManipulationOutcome,
    pub accomplice_outcome: ManipulationOutcome,
    /// The woman's achieved true ranks: (truthful, self, accomplice, pair).
    pub ranks: (usize, usize, usize, usize),
    /// True iff the pair outcome is weakly better than both individual ones.
    pub pair_dominates: bool,
}

/// Runs the self, accomplice, and pair optimizers and reports the woman's
/// achieved ranks under each.
pub fn pair_dominates_individuals(profile: &Profile, man: usize, woman: usize) -> PairComparison {
    let wid = AgentId::woman(woman);
    let (truthful, _) = deferred_acceptance(profile);
    let truthful_rank = profile.rank(wid, truthful.partner_of(wid));
    let self_outcome = optimal_self_manipulation(profile, woman);
    let accomplice_outcome = optimal_accomplice_manipulation(profile, man, woman);
    let pair = optimal_pair_manipulation(profile, man, woman);
    let self_rank = profile.rank(wid, self_outcome.matching.partner_of(wid));
    let accomplice_rank = profile.rank(wid, accomplice_outcome.matching.partner_of(wid));
    let pair_rank = profile.rank(wid, pair.matching.partner_of(wid));
    PairComparison {
        pair,
        self_outcome,
        accomplice_outcome,
        ranks: (truthful_rank, self_rank, accomplice_rank, pair_rank),
        pair_dominates: pair_rank <= self_rank && pair_rank <= accomplice_rank,
    }
}
