//! Property tests for the algorithmic invariants: deferred-acceptance
//! structure, list-surgery laws, and the manipulation-model guarantees.

mod common;

use matchmanip_core::oracle::naive_da;
use matchmanip_core::*;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn rows(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), n)
}

fn profiles(min_n: usize, max_n: usize) -> impl Strategy<Value = Profile> {
    (min_n..=max_n).prop_flat_map(|n| {
        (rows(n), rows(n)).prop_map(|(men, women)| Profile::from_rows(&men, &women).unwrap())
    })
}

fn profile_and_man(min_n: usize, max_n: usize) -> impl Strategy<Value = (Profile, usize)> {
    profiles(min_n, max_n).prop_flat_map(|p| {
        let n = p.n();
        (Just(p), 0..n)
    })
}

fn profile_man_woman(min_n: usize, max_n: usize) -> impl Strategy<Value = (Profile, usize, usize)> {
    profiles(min_n, max_n).prop_flat_map(|p| {
        let n = p.n();
        (Just(p), 0..n, 0..n)
    })
}

/// A subset of `pool` selected by the bits of proptest-provided entropy.
fn subset(pool: &[AgentId], bits: u64) -> BTreeSet<AgentId> {
    pool.iter()
        .enumerate()
        .filter(|(k, _)| bits >> (k % 64) & 1 == 1)
        .map(|(_, &a)| a)
        .collect()
}

fn women_below_partner(p: &Profile, m: usize) -> Vec<AgentId> {
    let (mu, _) = deferred_acceptance(p);
    let mid = AgentId::man(m);
    let list = p.list(mid);
    let pos = list.position(mu.partner_of(mid)).unwrap();
    list.order()[pos + 1..].to_vec()
}

proptest! {
    // ------------------------------------------------------------------
    // Deferred acceptance
    // ------------------------------------------------------------------

    #[test]
    fn da_output_is_stable((p, _) in profile_and_man(1, 7)) {
        let (mu, _) = deferred_acceptance(&p);
        prop_assert!(blocking_pairs(&p, &mu).is_empty());
    }

    #[test]
    fn da_is_men_optimal_and_women_pessimal(p in profiles(1, 5)) {
        let (mu, _) = deferred_acceptance(&p);
        for other in all_stable_matchings(&p).unwrap() {
            prop_assert!(dominates_for_men(&p, &mu, &other));
            prop_assert!(dominates_for_women(&p, &other, &mu));
        }
    }

    #[test]
    fn proposal_log_is_consistent(p in profiles(1, 7)) {
        let (mu, log) = deferred_acceptance(&p);
        let n = p.n();
        // Each man's proposals are exactly the prefix of his list ending at
        // his final partner.
        for m in 0..n {
            let made: Vec<usize> =
                log.proposals().iter().filter(|&&(mm, _)| mm == m).map(|&(_, w)| w).collect();
            let prefix: Vec<usize> = p
                .list(AgentId::man(m))
                .order()
                .iter()
                .take(made.len())
                .map(|a| a.index)
                .collect();
            prop_assert_eq!(made.clone(), prefix);
            prop_assert_eq!(*made.last().unwrap(), mu.woman_of(m));
        }
        // Each woman's final partner is her best proposer in the log.
        for w in 0..n {
            let wid = AgentId::woman(w);
            let best = log
                .proposals()
                .iter()
                .filter(|&&(_, ww)| ww == w)
                .map(|&(m, _)| AgentId::man(m))
                .min_by_key(|&m| p.rank(wid, m));
            prop_assert_eq!(best, Some(mu.partner_of(wid)));
        }
        // No duplicate proposals.
        prop_assert_eq!(log.as_set().len(), log.len());
    }

    #[test]
    fn naive_da_agrees_with_production_da(p in profiles(1, 7)) {
        let (mu, _) = deferred_acceptance(&p);
        prop_assert_eq!(naive_da(&p), mu);
    }

    #[test]
    fn men_cannot_gain_by_misreporting((p, m) in profile_and_man(1, 6), perm in any::<u64>()) {
        let (mu, _) = deferred_acceptance(&p);
        let mid = AgentId::man(m);
        let shuffled = shuffle_list(&p.list(mid), perm);
        let (mu2, _) = deferred_acceptance(&p.with_list(&shuffled).unwrap());
        prop_assert!(
            p.rank(mid, mu2.partner_of(mid)) >= p.rank(mid, mu.partner_of(mid)),
            "a misreport strictly improved the proposing side"
        );
    }

    #[test]
    fn women_are_non_bossy((p, w) in profile_and_man(1, 6), perm in any::<u64>()) {
        let (mu, _) = deferred_acceptance(&p);
        let wid = AgentId::woman(w);
        let shuffled = shuffle_list(&p.list(wid), perm);
        let (mu2, _) = deferred_acceptance(&p.with_list(&shuffled).unwrap());
        if mu2.partner_of(wid) == mu.partner_of(wid) {
            prop_assert_eq!(mu2, mu);
        }
    }

    // ------------------------------------------------------------------
    // Surgery laws
    // ------------------------------------------------------------------

    #[test]
    fn within_block_permutations_do_not_change_da((p, m) in profile_and_man(1, 6), bits in any::<u64>()) {
        let (mu, _) = deferred_acceptance(&p);
        let mid = AgentId::man(m);
        let list = p.list(mid);
        let partner = mu.partner_of(mid);
        let pos = list.position(partner).unwrap();
        let mut above: Vec<AgentId> = list.order()[..pos].to_vec();
        let mut below: Vec<AgentId> = list.order()[pos + 1..].to_vec();
        permute_in_place(&mut above, bits);
        permute_in_place(&mut below, bits.rotate_left(17));
        let mut order = above;
        order.push(partner);
        order.extend(below);
        let permuted = PreferenceList::new(mid, order).unwrap();
        let (mu2, _) = deferred_acceptance(&p.with_list(&permuted).unwrap());
        prop_assert_eq!(mu2, mu);
    }

    #[test]
    fn push_up_and_push_down_commute((p, m) in profile_and_man(2, 7), bits in any::<u64>()) {
        let (mu, _) = deferred_acceptance(&p);
        let mid = AgentId::man(m);
        let list = p.list(mid);
        let partner = mu.partner_of(mid);
        let pos = list.position(partner).unwrap();
        let up = subset(&list.order()[pos + 1..], bits);
        let down = subset(&list.order()[..pos], bits.rotate_left(23));
        let a = push_down(&push_up(&list, partner, &up).unwrap(), partner, &down).unwrap();
        let b = push_up(&push_down(&list, partner, &down).unwrap(), partner, &up).unwrap();
        prop_assert_eq!(&a, &b);
        let (mu_a, _) = deferred_acceptance(&p.with_list(&a).unwrap());
        let (mu_b, _) = deferred_acceptance(&p.with_list(&b).unwrap());
        prop_assert_eq!(mu_a, mu_b);
    }

    #[test]
    fn decompose_normalization_preserves_da((p, m) in profile_and_man(1, 6), perm in any::<u64>()) {
        let mid = AgentId::man(m);
        let truth = p.list(mid);
        let mis = shuffle_list(&truth, perm);
        let (mu_mis, _) = deferred_acceptance(&p.with_list(&mis).unwrap());
        // Normalize around the partner the misreport actually attains.
        let pivot = mu_mis.partner_of(mid);
        let spec = decompose_as_push(&truth, &mis, pivot).unwrap();
        let normalized = surgery::apply_push(&truth, &spec).unwrap();
        let (mu_norm, _) = deferred_acceptance(&p.with_list(&normalized).unwrap());
        prop_assert_eq!(mu_norm, mu_mis);
    }

    #[test]
    fn push_down_keeps_partner_and_hurts_women((p, m) in profile_and_man(1, 7), bits in any::<u64>()) {
        let (mu, _) = deferred_acceptance(&p);
        let mid = AgentId::man(m);
        let list = p.list(mid);
        let partner = mu.partner_of(mid);
        let pos = list.position(partner).unwrap();
        let down = subset(&list.order()[..pos], bits);
        let pushed = push_down(&list, partner, &down).unwrap();
        let (mu2, _) = deferred_acceptance(&p.with_list(&pushed).unwrap());
        prop_assert_eq!(mu2.partner_of(mid), partner);
        prop_assert!(dominates_for_men(&p, &mu2, &mu));
        prop_assert!(dominates_for_women(&p, &mu, &mu2));
    }

    // ------------------------------------------------------------------
    // Manipulation-model guarantees
    // ------------------------------------------------------------------

    #[test]
    fn self_manipulation_never_worsens_the_woman((p, w) in profile_and_man(1, 6)) {
        let out = optimal_self_manipulation(&p, w);
        prop_assert!(out.beneficiary_rank_delta >= 0);
    }

    #[test]
    fn accomplice_manipulation_is_no_regret_and_stable((p, m, w) in profile_man_woman(1, 6)) {
        let out = optimal_accomplice_manipulation(&p, m, w);
        prop_assert!(out.no_regret);
        prop_assert!(out.stable, "no-regret accomplice outcome must be stable");
    }

    #[test]
    fn pair_keeps_accomplice_partner_and_beats_accomplice((p, m, w) in profile_man_woman(1, 5)) {
        let (mu, _) = deferred_acceptance(&p);
        let pair = optimal_pair_manipulation(&p, m, w);
        prop_assert_eq!(pair.matching.partner_of(AgentId::man(m)), mu.partner_of(AgentId::man(m)));
        let acc = optimal_accomplice_manipulation(&p, m, w);
        let wid = AgentId::woman(w);
        prop_assert!(
            p.rank(wid, pair.matching.partner_of(wid))
                <= p.rank(wid, acc.matching.partner_of(wid))
        );
        prop_assert_eq!(pair.improved, pair_improvement_exists(&p, m, w));
    }

    #[test]
    fn joint_misreport_blocks_only_through_the_pair((p, m, w) in profile_man_woman(1, 6), pm in any::<u64>(), pw in any::<u64>()) {
        // Any DA matching of a profile misreported only by (m, w) can only be
        // blocked, under the true lists, by pairs containing m or w.
        let mid = AgentId::man(m);
        let wid = AgentId::woman(w);
        let trial = p
            .with_list(&shuffle_list(&p.list(mid), pm))
            .unwrap()
            .with_list(&shuffle_list(&p.list(wid), pw))
            .unwrap();
        let (mu, _) = deferred_acceptance(&trial);
        for b in blocking_pairs(&p, &mu) {
            prop_assert!(b.man == mid || b.woman == wid);
        }
    }

    #[test]
    fn no_regret_push_up_props((p, m) in profile_and_man(1, 7), bits in any::<u64>()) {
        let (mu, log) = deferred_acceptance(&p);
        let nr = no_regret_set(&p, m);
        let below = women_below_partner(&p, m);
        let y = subset(&below, bits);
        let y_idx: BTreeSet<usize> = y.iter().map(|a| a.index).collect();
        let out = push_up_outcome(&p, m, &y_idx).unwrap();
        let mid = AgentId::man(m);
        if y.is_subset(&nr.members) {
            // Pushing any subset of the no-regret set keeps the partner,
            // stays stable, helps the women, and hurts the men.
            prop_assert!(out.no_regret);
            prop_assert!(out.stable);
            prop_assert!(dominates_for_women(&p, &out.matching, &mu));
            prop_assert!(dominates_for_men(&p, &mu, &out.matching));
            // Proposal containment: every truthful proposal still occurs.
            let mis = p.with_list(&out.strategy).unwrap();
            let (_, log2) = deferred_acceptance(&mis);
            prop_assert!(log.as_set().is_subset(&log2.as_set()));
            // Strict push up: a changed matching improves at least two women
            // and worsens at least two men.
            if out.matching != mu {
                let improved = out.women_deltas.iter().filter(|&&d| d > 0).count();
                let worsened = (0..p.n())
                    .filter(|&mm| {
                        let a = AgentId::man(mm);
                        p.rank(a, out.matching.partner_of(a)) > p.rank(a, mu.partner_of(a))
                    })
                    .count();
                prop_assert!(improved >= 2, "only {improved} women improved");
                prop_assert!(worsened >= 2, "only {worsened} men worsened");
            }
        } else {
            // Any set touching the with-regret women strictly worsens m.
            prop_assert!(!out.no_regret);
            prop_assert!(
                p.rank(mid, out.matching.partner_of(mid)) > p.rank(mid, mu.partner_of(mid))
            );
        }
    }

    #[test]
    fn push_up_alone_beats_push_up_plus_push_down((p, m) in profile_and_man(1, 6), bits in any::<u64>()) {
        let (mu, _) = deferred_acceptance(&p);
        let mid = AgentId::man(m);
        let list = p.list(mid);
        let partner = mu.partner_of(mid);
        let pos = list.position(partner).unwrap();
        let up = subset(&list.order()[pos + 1..], bits);
        let down = subset(&list.order()[..pos], bits.rotate_left(31));
        let up_only = push_up(&list, partner, &up).unwrap();
        let both = surgery::apply_push(
            &list,
            &PushSpec::new(partner, up.clone(), down).unwrap(),
        )
        .unwrap();
        let (mu_up, _) = deferred_acceptance(&p.with_list(&up_only).unwrap());
        let (mu_both, _) = deferred_acceptance(&p.with_list(&both).unwrap());
        prop_assert!(dominates_for_women(&p, &mu_up, &mu_both));
    }

    #[test]
    fn minimum_set_is_bounded_and_reproduces_the_push((p, m) in profile_and_man(1, 7)) {
        let full = optimal_one_for_all(&p, m);
        let min = minimum_push_up_set(&p, m);
        prop_assert_eq!(&min.matching, &full.matching);
        prop_assert!(min.pushed.is_subset(&no_regret_set(&p, m).members));
        prop_assert!(min.pushed.len() <= (p.n() - 1) / 2);
    }

    #[test]
    fn meet_identity_and_disjoint_deltas((p, m) in profile_and_man(1, 7), bits in any::<u64>()) {
        let nr = no_regret_set(&p, m);
        let members: Vec<AgentId> = nr.members.iter().copied().collect();
        let y = subset(&members, bits);
        if y.is_empty() {
            return Ok(());
        }
        let y_idx: BTreeSet<usize> = y.iter().map(|a| a.index).collect();
        let out = push_up_outcome(&p, m, &y_idx).unwrap();
        // Womanwise max / manwise min over the singleton push-up matchings.
        for w in 0..p.n() {
            let wid = AgentId::woman(w);
            let best = y
                .iter()
                .map(|x| p.rank(wid, nr.per_woman_matchings[x].partner_of(wid)))
                .min()
                .unwrap();
            prop_assert_eq!(p.rank(wid, out.matching.partner_of(wid)), best);
        }
        for mm in 0..p.n() {
            let a = AgentId::man(mm);
            let worst = y
                .iter()
                .map(|x| p.rank(a, nr.per_woman_matchings[x].partner_of(a)))
                .max()
                .unwrap();
            prop_assert_eq!(p.rank(a, out.matching.partner_of(a)), worst);
        }
        // Proposal deltas of the minimum set's singletons are pairwise
        // disjoint.
        let min = minimum_push_up_set(&p, m);
        let deltas: Vec<BTreeSet<(usize, usize)>> = min
            .pushed
            .iter()
            .map(|&x| {
                let strat = push_up(
                    &p.list(AgentId::man(m)),
                    deferred_acceptance(&p).0.partner_of(AgentId::man(m)),
                    &[x].into_iter().collect(),
                )
                .unwrap();
                proposal_delta(&p, &p.with_list(&strat).unwrap()).unwrap()
            })
            .collect();
        for i in 0..deltas.len() {
            for j in i + 1..deltas.len() {
                prop_assert!(deltas[i].is_disjoint(&deltas[j]));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive inconspicuousness check against a brute-force decider
// ---------------------------------------------------------------------------

#[test]
fn inconspicuous_matches_brute_force_for_small_lists() {
    for n in 1..=4usize {
        let owner = AgentId::man(0);
        let all: Vec<PreferenceList> = matchmanip_core::oracle::permutations(n)
            .map(|p| PreferenceList::from_indices(owner, &p).unwrap())
            .collect();
        for truth in &all {
            // Brute force: every list reachable by one promotion.
            let mut reachable: BTreeSet<Vec<AgentId>> = BTreeSet::new();
            reachable.insert(truth.order().to_vec());
            for &agent in truth.order() {
                let cur = truth.position(agent).unwrap();
                for target in 0..cur {
                    let mut order: Vec<AgentId> =
                        truth.order().iter().copied().filter(|&a| a != agent).collect();
                    order.insert(target, agent);
                    reachable.insert(order);
                }
            }
            for mis in &all {
                assert_eq!(
                    is_inconspicuous(truth, mis),
                    reachable.contains(&mis.order().to_vec()),
                    "n={n} truth={truth} mis={mis}"
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Helpers driven by proptest-provided entropy
// ---------------------------------------------------------------------------

fn permute_in_place(items: &mut [AgentId], mut bits: u64) {
    for i in (1..items.len()).rev() {
        bits = bits.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = (bits >> 33) as usize % (i + 1);
        items.swap(i, j);
    }
}

fn shuffle_list(list: &PreferenceList, bits: u64) -> PreferenceList {
    let mut order = list.order().to_vec();
    permute_in_place(&mut order, bits ^ 0x9e37_79b9_7f4a_7c15);
    PreferenceList::new(list.owner(), order).unwrap()
}
