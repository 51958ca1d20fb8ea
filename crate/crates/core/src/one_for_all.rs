//! One-for-all accomplice manipulation: a single man misreports to weakly
//! improve every woman.
//!
//! Pushing up the whole no-regret set is optimal for the women; a minimum
//! push-up set reproducing the same matching is found by greedy deletion.

use crate::agent::AgentId;
use crate::da::deferred_acceptance;
use crate::error::Error;
use crate::matching::Matching;
use crate::profile::{PreferenceList, Profile};
use crate::stability::is_stable;
use crate::surgery::push_up;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

/// The women a fixed accomplice can push up individually without changing
/// his own match, together with the matching each singleton push-up induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoRegretSet {
    pub accomplice: AgentId,
    /// Women strictly below the accomplice's partner whose singleton push-up
    /// keeps his match. Includes women whose push-up changes nothing at all.
    pub members: BTreeSet<AgentId>,
    /// The remaining below-partner women; pushing any of them alone strictly
    /// worsens the accomplice.
    pub with_regret: BTreeSet<AgentId>,
    /// Matching induced by each member's singleton push-up.
    pub per_woman_matchings: BTreeMap<AgentId, Matching>,
}

/// Outcome of pushing a set of women above the accomplice's partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushUpOutcome {
    pub accomplice: AgentId,
    pub pushed: BTreeSet<AgentId>,
    /// The accomplice's submitted list (canonical push-up of `pushed`).
    pub strategy: PreferenceList,
    pub matching: Matching,
    /// True iff the accomplice's match is unchanged.
    pub no_regret: bool,
    /// True iff `matching` is stable under the true profile.
    pub stable: bool,
    /// Per-woman improvements in true rank (old − new), indexed by woman.
    pub women_deltas: Vec<i64>,
    /// True iff some woman strictly improves.
    pub improved: bool,
}

fn build_outcome(
    profile: &Profile,
    truthful: &Matching,
    man: usize,
    pushed: BTreeSet<AgentId>,
) -> Result<PushUpOutcome, Error> {
    let mid = AgentId::man(man);
    let partner = truthful.partner_of(mid);
    let strategy = push_up(&profile.list(mid), partner, &pushed)?;
    let trial = profile.with_list(&strategy)?;
    let (matching, _) = deferred_acceptance(&trial);
    let women_deltas: Vec<i64> = (0..profile.n())
        .map(|w| {
            let wid = AgentId::woman(w);
            profile.rank(wid, truthful.partner_of(wid)) as i64
                - profile.rank(wid, matching.partner_of(wid)) as i64
        })
        .collect();
    Ok(PushUpOutcome {
        accomplice: mid,
        pushed,
        strategy,
        no_regret: matching.partner_of(mid) == partner,
        stable: is_stable(profile, &matching),
        improved: women_deltas.iter().any(|&d| d > 0),
        matching,
        women_deltas,
    })
}

/// Women strictly below `man`'s partner in his true list, ascending by index.
fn below_partner(profile: &Profile, man: usize, truthful: &Matching) -> Vec<AgentId> {
    let mid = AgentId::man(man);
    let list = profile.list(mid);
    let partner_pos = list.position(truthful.partner_of(mid)).unwrap();
    let mut below: Vec<AgentId> = list.order()[partner_pos + 1..].to_vec();
    below.sort();
    below
}

/// Computes the no-regret set of `man` by promoting each woman below his
/// partner individually and rerunning deferred acceptance.
pub fn no_regret_set(profile: &Profile, man: usize) -> NoRegretSet {
    let mid = AgentId::man(man);
    let (truthful, _) = deferred_acceptance(profile);
    let partner = truthful.partner_of(mid);
    let mut members = BTreeSet::new();
    let mut with_regret = BTreeSet::new();
    let mut per_woman_matchings = BTreeMap::new();
    for wid in below_partner(profile, man, &truthful) {
        let up = [wid].into_iter().collect();
        let strategy = push_up(&profile.list(mid), partner, &up).expect("below-partner woman");
        let trial = profile.with_list(&strategy).expect("lists fit");
        let (mu, _) = deferred_acceptance(&trial);
        if mu.partner_of(mid) == partner {
            members.insert(wid);
            per_woman_matchings.insert(wid, mu);
        } else {
            with_regret.insert(wid);
        }
    }
    NoRegretSet { accomplice: mid, members, with_regret, per_woman_matchings }
}

/// Deferred-acceptance outcome of `man` pushing the given women (all strictly
/// below his partner) above his partner.
pub fn push_up_outcome(
    profile: &Profile,
    man: usize,
    pushed: &BTreeSet<usize>,
) -> Result<PushUpOutcome, Error> {
    let (truthful, _) = deferred_acceptance(profile);
    let pushed: BTreeSet<AgentId> = pushed.iter().map(|&w| AgentId::woman(w)).collect();
    build_outcome(profile, &truthful, man, pushed)
}

/// The optimal one-for-all strategy for `man`: push up his entire no-regret
/// set. The result weakly improves every woman over any other misreport of
/// his that keeps his own match.
pub fn optimal_one_for_all(profile: &Profile, man: usize) -> PushUpOutcome {
    let nr = no_regret_set(profile, man);
    let (truthful, _) = deferred_acceptance(profile);
    build_outcome(profile, &truthful, man, nr.members).expect("no-regret set is below partner")
}

/// Shrinks the no-regret set to a minimum set inducing the same matching.
///
/// Greedy deletion: repeatedly drop a woman and keep the drop iff the
/// deferred-acceptance matching is unchanged, restarting the scan after every
/// successful drop. Any maximal sequence of drops reaches a minimal set, and
/// minimal no-regret push-up sets are minimum, so only the scan order can
/// change the returned set (never its size); candidates are tried in
/// descending index order.
pub fn minimum_push_up_set(profile: &Profile, man: usize) -> PushUpOutcome {
    let mid = AgentId::man(man);
    let (truthful, _) = deferred_acceptance(profile);
    let partner = truthful.partner_of(mid);
    let nr = no_regret_set(profile, man);
    let true_list = profile.list(mid);

    let run = |set: &BTreeSet<AgentId>| -> Matching {
        let strategy = push_up(&true_list, partner, set).expect("members are below partner");
        let trial = profile.with_list(&strategy).expect("lists fit");
        deferred_acceptance(&trial).0
    };

    let mut current = nr.members.clone();
    let target = run(&current);
    'outer: loop {
        for &wid in current.iter().rev().collect::<Vec<_>>() {
            let mut reduced = current.clone();
            reduced.remove(&wid);
            if run(&reduced) == target {
                current = reduced;
                continue 'outer;
            }
        }
        break;
    }
    build_outcome(profile, &truthful, man, current).expect("subset of no-regret set")
}

/// Builds the profile family on which the minimum push-up set for accomplice
/// m1 reaches the ⌊(n−1)/2⌋ upper bound.
///
/// m1 and w1 rank each other first. The remaining agents form consecutive
/// pairs in which each woman's top choice is the other pair's man and m1
/// sits between; for even `n` a final dummy pair ranks each other first and
/// stays out of the way. Unconstrained tails are filled in ascending index
/// order. The construction is checked to produce the identity matching
/// before being returned.
pub fn tight_bound_family(n: usize) -> Result<Profile, Error> {
    if n < 3 {
        return Err(Error::SizeMismatch { expected: 3, found: n });
    }
    let mut men: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut women: Vec<Vec<usize>> = Vec::with_capacity(n);
    for _ in 0..n {
        men.push(Vec::new());
        women.push(Vec::new());
    }
    men[0] = complete(n, &[0]);
    women[0] = complete(n, &[0]);
    let paired_end = if n % 2 == 1 { n } else { n - 1 };
    let mut i = 1;
    while i + 1 < paired_end {
        // 0-based pair (i, i+1); 1-based (i+1, i+2).
        men[i] = complete(n, &[i, i + 1]);
        men[i + 1] = complete(n, &[i + 1, i]);
        women[i] = complete(n, &[i + 1, 0, i]);
        women[i + 1] = complete(n, &[i, i + 1]);
        i += 2;
    }
    if n % 2 == 0 {
        men[n - 1] = complete(n, &[n - 1]);
        women[n - 1] = complete(n, &[n - 1]);
    }
    let profile = Profile::from_rows(&men, &women)?;
    let (mu, _) = deferred_acceptance(&profile);
    assert!(
        (0..n).all(|m| mu.woman_of(m) == m),
        "tight-bound family must produce the identity matching"
    );
    Ok(profile)
}

fn complete(n: usize, prefix: &[usize]) -> Vec<usize> {
    let mut row: Vec<usize> = prefix.to_vec();
    row.extend((0..n).filter(|x| !prefix.contains(x)));
    row
}

/// New proposals caused by one man's misreport: the proposals occurring under
/// `misreported` but not under `base`, made by men other than the misreporting
/// one.
///
/// The profiles must differ in at most one man's list; identical profiles
/// yield the empty set.
pub fn proposal_delta(
    base: &Profile,
    misreported: &Profile,
) -> Result<BTreeSet<(usize, usize)>, Error> {
    if base.n() != misreported.n() {
        return Err(Error::SizeMismatch { expected: base.n(), found: misreported.n() });
    }
    let n = base.n();
    let mut changed_man: Option<usize> = None;
    for w in 0..n {
        let wid = AgentId::woman(w);
        if base.list(wid) != misreported.list(wid) {
            return Err(Error::ProfilesDifferElsewhere { agent: wid });
        }
    }
    for m in 0..n {
        let mid = AgentId::man(m);
        if base.list(mid) != misreported.list(mid) {
            if changed_man.is_some() {
                return Err(Error::ProfilesDifferElsewhere { agent: mid });
            }
            changed_man = Some(m);
        }
    }
    let accomplice = match changed_man {
        Some(m) => m,
        None => return Ok(BTreeSet::new()),
    };
    let (_, base_log) = deferred_acceptance(base);
    let (_, mis_log) = deferred_acceptance(misreported);
    let base_set = base_log.as_set();
    Ok(mis_log
        .as_set()
        .into_iter()
        .filter(|&(m, _)| m != accomplice)
        .filter(|p| !base_set.contains(p))
        .collect())
}
