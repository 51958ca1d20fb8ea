//! Single-beneficiary baselines: optimal self manipulation by a woman and
//! optimal no-regret accomplice manipulation by a man.
//!
//! Both searches scan a canonical polynomial family instead of all n!
//! permutations: the optimal self misreport is inconspicuous (a single-man
//! promotion), and the optimal no-regret accomplice misreport is a single-
//! woman push up. The brute-force oracles in [`crate::oracle`] certify the
//! shortcut on small instances.

use crate::agent::AgentId;
use crate::da::deferred_acceptance;
use crate::matching::Matching;
use crate::profile::{PreferenceList, Profile};
use crate::stability::is_stable;
use crate::surgery::{is_inconspicuous, push_up};
use alloc::vec::Vec;

/// Result of an optimal single-agent manipulation search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManipulationOutcome {
    /// The agent submitting the misreport.
    pub manipulator: AgentId,
    /// The woman the manipulation is meant to help.
    pub beneficiary: AgentId,
    /// The submitted list; the truthful list when nothing strictly helps.
    pub strategy: PreferenceList,
    /// True iff the beneficiary strictly improves over truth-telling.
    pub improved: bool,
    /// Deferred-acceptance matching under the chosen strategy.
    pub matching: Matching,
    /// Beneficiary's improvement in true rank (old − new, ≥ 0).
    pub beneficiary_rank_delta: i64,
    /// Per-woman improvements in true rank (old − new), indexed by woman.
    pub women_deltas: Vec<i64>,
    /// True iff the manipulator's own partner is unchanged (always true for
    /// the searches in this module).
    pub no_regret: bool,
    /// True iff the resulting matching is stable under the true profile.
    pub stable: bool,
    /// True iff the chosen strategy promotes at most one agent.
    pub inconspicuous: bool,
}

fn outcome(
    profile: &Profile,
    truthful: &Matching,
    manipulator: AgentId,
    beneficiary: AgentId,
    strategy: PreferenceList,
    matching: Matching,
) -> ManipulationOutcome {
    let n = profile.n();
    let women_deltas: Vec<i64> = (0..n)
        .map(|w| {
            let wid = AgentId::woman(w);
            profile.rank(wid, truthful.partner_of(wid)) as i64
                - profile.rank(wid, matching.partner_of(wid)) as i64
        })
        .collect();
    let beneficiary_rank_delta = women_deltas[beneficiary.index];
    let no_regret = matching.partner_of(manipulator) == truthful.partner_of(manipulator);
    let stable = is_stable(profile, &matching);
    let inconspicuous = is_inconspicuous(&profile.list(manipulator), &strategy);
    ManipulationOutcome {
        manipulator,
        beneficiary,
        strategy,
        improved: beneficiary_rank_delta > 0,
        matching,
        beneficiary_rank_delta,
        women_deltas,
        no_regret,
        stable,
        inconspicuous,
    }
}

/// All lists reachable from `list` by promoting one agent to a strictly
/// earlier position, enumerated by ascending agent index and then ascending
/// target position. The truthful list itself is not included.
pub fn single_promotion_candidates(list: &PreferenceList) -> Vec<PreferenceList> {
    let n = list.len();
    let side = list.owner().side.opposite();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for index in 0..n {
        let agent = AgentId { side, index };
        let cur = list.position(agent).expect("full lists contain every opposite agent");
        for target in 0..cur {
            let mut order: Vec<AgentId> =
                list.order().iter().copied().filter(|&a| a != agent).collect();
            order.insert(target, agent);
            out.push(
                PreferenceList::new(list.owner(), order).expect("promotion preserves validity"),
            );
        }
    }
    out
}

/// Optimal self manipulation for `woman`: the single-promotion misreport of
/// her own list that gives her the best partner by her true ranking.
///
/// Ties are broken by the candidate scan order; the truthful list is returned
/// when no candidate strictly improves on it.
pub fn optimal_self_manipulation(profile: &Profile, woman: usize) -> ManipulationOutcome {
    let wid = AgentId::woman(woman);
    let (truthful, _) = deferred_acceptance(profile);
    let true_list = profile.list(wid);

    let mut best_rank = profile.rank(wid, truthful.partner_of(wid));
    let mut best: Option<(PreferenceList, Matching)> = None;
    for cand in single_promotion_candidates(&true_list) {
        let trial = profile.with_list(&cand).expect("candidate lists fit the profile");
        let (mu, _) = deferred_acceptance(&trial);
        let r = profile.rank(wid, mu.partner_of(wid));
        if r < best_rank {
            best_rank = r;
            best = Some((cand, mu));
        }
    }
    match best {
        Some((strategy, matching)) => outcome(profile, &truthful, wid, wid, strategy, matching),
        None => outcome(profile, &truthful, wid, wid, true_list, truthful.clone()),
    }
}

/// Optimal no-regret accomplice manipulation: `man` misreports to help
/// `woman`, keeping his own partner unchanged.
///
/// Scans the single-woman push-ups of his true list (women strictly below his
/// partner, ascending index), skipping any that change his own match.
pub fn optimal_accomplice_manipulation(
    profile: &Profile,
    man: usize,
    woman: usize,
) -> ManipulationOutcome {
    let mid = AgentId::man(man);
    let wid = AgentId::woman(woman);
    let (truthful, _) = deferred_acceptance(profile);
    let partner = truthful.partner_of(mid);
    let true_list = profile.list(mid);
    let partner_pos = true_list.position(partner).unwrap();

    let mut best_rank = profile.rank(wid, truthful.partner_of(wid));
    let mut best: Option<(PreferenceList, Matching)> = None;
    for index in 0..profile.n() {
        let candidate_woman = AgentId::woman(index);
        match true_list.position(candidate_woman) {
            Some(p) if p > partner_pos => {}
            _ => continue,
        }
        let up = [candidate_woman].into_iter().collect();
        let cand = push_up(&true_list, partner, &up).expect("candidate is below the partner");
        let trial = profile.with_list(&cand).expect("candidate lists fit the profile");
        let (mu, _) = deferred_acceptance(&trial);
        if mu.partner_of(mid) != partner {
            continue; // with-regret push up
        }
        let r = profile.rank(wid, mu.partner_of(wid));
        if r < best_rank {
            best_rank = r;
            best = Some((cand, mu));
        }
    }
    match best {
        Some((strategy, matching)) => outcome(profile, &truthful, mid, wid, strategy, matching),
        None => outcome(profile, &truthful, mid, wid, true_list, truthful.clone()),
    }
}
