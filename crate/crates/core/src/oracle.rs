//! Exhaustive brute-force references certifying the fast searches at desk
//! scale.
//!
//! The oracles reuse the production deferred-acceptance routine and derive
//! their independence from enumerating the full strategy space; guards fail
//! loudly instead of degrading to sampling. [`naive_da`] is a second,
//! deliberately different implementation used to de-correlate bugs in the
//! production one.

use crate::agent::AgentId;
use crate::da::deferred_acceptance;
use crate::error::Error;
use crate::matching::{dominates_for_women, Matching};
use crate::one_for_all::no_regret_set;
use crate::profile::{PreferenceList, Profile};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// Default size guard for [`enumerate_misreports`].
pub const MISREPORT_GUARD: usize = 7;
/// Size guard for the single-agent and one-for-all oracles (n! DA runs each).
pub const ORACLE_GUARD: usize = 6;
/// Size guard for the joint-misreport oracle (n!² DA runs).
pub const PAIR_ORACLE_GUARD: usize = 5;
/// Guard on |no-regret set| for the subset-enumeration oracle.
pub const MIN_SUBSET_GUARD: usize = 20;

/// Lazy iterator over all permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations { next: Some((0..n).collect()) }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        self.next = next_permutation(&current);
        Some(current)
    }
}

fn next_permutation(perm: &[usize]) -> Option<Vec<usize>> {
    let mut p = perm.to_vec();
    let n = p.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    Some(p)
}

/// All n! reorderings of `list`, lexicographic in the positions of the true
/// list. Refuses to enumerate above `guard`.
pub fn enumerate_misreports(
    list: &PreferenceList,
    guard: usize,
) -> Result<impl Iterator<Item = PreferenceList> + '_, Error> {
    let n = list.len();
    if n > guard {
        return Err(Error::GuardExceeded { what: "enumerate_misreports", size: n, limit: guard });
    }
    let owner = list.owner();
    let base: Vec<AgentId> = list.order().to_vec();
    Ok(permutations(n).map(move |perm| {
        let order: Vec<AgentId> = perm.into_iter().map(|k| base[k]).collect();
        PreferenceList::new(owner, order).expect("permutation preserves validity")
    }))
}

/// Best outcome a single agent can reach, found by full enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    /// 1-based true rank of the beneficiary's partner under the best strategy.
    pub best_rank: usize,
    pub witness: PreferenceList,
    pub matching: Matching,
}

/// Exact optimal self manipulation for `woman` over all n! lists.
pub fn oracle_self(profile: &Profile, woman: usize) -> Result<OracleOutcome, Error> {
    guard(profile.n(), ORACLE_GUARD, "oracle_self")?;
    let wid = AgentId::woman(woman);
    best_unilateral(profile, wid, wid, |_| true)
}

/// Exact optimal no-regret accomplice manipulation for `(man, woman)` over
/// all n! lists of the man, subject to his match being unchanged.
pub fn oracle_accomplice(
    profile: &Profile,
    man: usize,
    woman: usize,
) -> Result<OracleOutcome, Error> {
    guard(profile.n(), ORACLE_GUARD, "oracle_accomplice")?;
    let mid = AgentId::man(man);
    let (truthful, _) = deferred_acceptance(profile);
    let partner = truthful.partner_of(mid);
    best_unilateral(profile, mid, AgentId::woman(woman), |mu| mu.partner_of(mid) == partner)
}

fn best_unilateral(
    profile: &Profile,
    manipulator: AgentId,
    beneficiary: AgentId,
    feasible: impl Fn(&Matching) -> bool,
) -> Result<OracleOutcome, Error> {
    let mut best: Option<OracleOutcome> = None;
    for cand in enumerate_misreports(&profile.list(manipulator), profile.n())? {
        let trial = profile.with_list(&cand)?;
        let (mu, _) = deferred_acceptance(&trial);
        if !feasible(&mu) {
            continue;
        }
        let r = profile.rank(beneficiary, mu.partner_of(beneficiary));
        if best.as_ref().map_or(true, |b| r < b.best_rank) {
            best = Some(OracleOutcome { best_rank: r, witness: cand, matching: mu });
        }
    }
    // The truthful list is among the candidates and always feasible.
    Ok(best.expect("enumeration includes the truthful list"))
}

/// Best joint outcome for `(man, woman)` over all n!² misreport pairs with
/// the man's match unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OraclePairOutcome {
    pub best_rank: usize,
    pub man_witness: PreferenceList,
    pub woman_witness: PreferenceList,
    pub matching: Matching,
}

pub fn oracle_pair(profile: &Profile, man: usize, woman: usize) -> Result<OraclePairOutcome, Error> {
    guard(profile.n(), PAIR_ORACLE_GUARD, "oracle_pair")?;
    let mid = AgentId::man(man);
    let wid = AgentId::woman(woman);
    let (truthful, _) = deferred_acceptance(profile);
    let partner = truthful.partner_of(mid);
    let mut best: Option<OraclePairOutcome> = None;
    for w_list in enumerate_misreports(&profile.list(wid), profile.n())? {
        let with_w = profile.with_list(&w_list)?;
        for m_list in enumerate_misreports(&profile.list(mid), profile.n())? {
            let trial = with_w.with_list(&m_list)?;
            let (mu, _) = deferred_acceptance(&trial);
            if mu.partner_of(mid) != partner {
                continue;
            }
            let r = profile.rank(wid, mu.partner_of(wid));
            if best.as_ref().map_or(true, |b| r < b.best_rank) {
                best = Some(OraclePairOutcome {
                    best_rank: r,
                    man_witness: m_list.clone(),
                    woman_witness: w_list.clone(),
                    matching: mu,
                });
            }
        }
    }
    Ok(best.expect("truthful pair is feasible"))
}

/// Exhaustive one-for-all search: all matchings a fixed accomplice can induce
/// without changing his own match, their womanwise Pareto frontier, and the
/// womanwise-best matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOneForAllOutcome {
    /// A matching weakly dominating (womanwise) every feasible one.
    pub matching: Matching,
    pub witness: PreferenceList,
    /// The womanwise Pareto frontier over all feasible matchings.
    pub frontier: Vec<Matching>,
    /// True iff some feasible matching dominates all others, i.e. the
    /// frontier is a singleton.
    pub optimal_exists: bool,
}

pub fn oracle_one_for_all(profile: &Profile, man: usize) -> Result<OracleOneForAllOutcome, Error> {
    guard(profile.n(), ORACLE_GUARD, "oracle_one_for_all")?;
    let mid = AgentId::man(man);
    let (truthful, _) = deferred_acceptance(profile);
    let partner = truthful.partner_of(mid);

    let mut feasible: Vec<(Matching, PreferenceList)> = Vec::new();
    for cand in enumerate_misreports(&profile.list(mid), profile.n())? {
        let trial = profile.with_list(&cand)?;
        let (mu, _) = deferred_acceptance(&trial);
        if mu.partner_of(mid) != partner {
            continue;
        }
        if !feasible.iter().any(|(m, _)| *m == mu) {
            feasible.push((mu, cand));
        }
    }

    let frontier: Vec<Matching> = feasible
        .iter()
        .filter(|(mu, _)| {
            !feasible.iter().any(|(other, _)| {
                other != mu && dominates_for_women(profile, other, mu)
            })
        })
        .map(|(mu, _)| mu.clone())
        .collect();

    let (best, witness) = feasible
        .iter()
        .find(|(mu, _)| feasible.iter().all(|(other, _)| dominates_for_women(profile, mu, other)))
        .map(|(mu, w)| (mu.clone(), w.clone()))
        .unwrap_or_else(|| {
            let (mu, w) = &feasible[0];
            (mu.clone(), w.clone())
        });
    let optimal_exists = frontier.len() == 1;
    Ok(OracleOneForAllOutcome { matching: best, witness, frontier, optimal_exists })
}

/// Exact minimum subset of the no-regret set reproducing the full push-up
/// matching, found by subset enumeration in increasing cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMinSubsetOutcome {
    pub set: BTreeSet<AgentId>,
    pub size: usize,
    pub matching: Matching,
}

pub fn oracle_min_subset(profile: &Profile, man: usize) -> Result<OracleMinSubsetOutcome, Error> {
    let nr = no_regret_set(profile, man);
    let members: Vec<AgentId> = nr.members.iter().copied().collect();
    if members.len() > MIN_SUBSET_GUARD {
        return Err(Error::GuardExceeded {
            what: "oracle_min_subset",
            size: members.len(),
            limit: MIN_SUBSET_GUARD,
        });
    }
    let mid = AgentId::man(man);
    let (truthful, _) = deferred_acceptance(profile);
    let partner = truthful.partner_of(mid);
    let true_list = profile.list(mid);
    let run = |set: &BTreeSet<AgentId>| -> Matching {
        let strategy =
            crate::surgery::push_up(&true_list, partner, set).expect("members below partner");
        let trial = profile.with_list(&strategy).expect("lists fit");
        deferred_acceptance(&trial).0
    };
    let target = run(&nr.members);
    for size in 0..=members.len() {
        for combo in combinations(members.len(), size) {
            let set: BTreeSet<AgentId> = combo.iter().map(|&k| members[k]).collect();
            if run(&set) == target {
                return Ok(OracleMinSubsetOutcome { set, size, matching: target });
            }
        }
    }
    unreachable!("the full set always reproduces its own matching")
}

/// All k-element index combinations of `0..n`, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// A second deferred-acceptance implementation with a different control
/// structure: one free man proposes at a time, always the lowest-indexed,
/// and the receiving woman resolves immediately.
///
/// Its matching must always agree with [`deferred_acceptance`].
pub fn naive_da(profile: &Profile) -> Matching {
    let n = profile.n();
    let mut next = alloc::vec![0usize; n];
    let mut engaged_to: Vec<Option<usize>> = alloc::vec![None; n];
    let mut engagement: Vec<Option<usize>> = alloc::vec![None; n];
    loop {
        let free = (0..n).find(|&m| engagement[m].is_none() && next[m] < n);
        let m = match free {
            Some(m) => m,
            None => break,
        };
        let w = profile.man_order(m)[next[m]];
        next[m] += 1;
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
    let man_to_woman: Vec<usize> =
        engagement.into_iter().map(|w| w.expect("all men end matched")).collect();
    Matching::from_man_to_woman(man_to_woman).expect("bijection")
}

fn guard(n: usize, limit: usize, what: &'static str) -> Result<(), Error> {
    if n > limit {
        Err(Error::GuardExceeded { what, size: n, limit })
    } else {
        Ok(())
    }
}
