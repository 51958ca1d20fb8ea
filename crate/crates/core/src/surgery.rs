//! List-rewriting primitives shared by every manipulation algorithm.
//!
//! A push up moves a set of agents from below a pivot (the owner's current
//! partner) to above it; a push down mirrors this. The canonical placement
//! puts the moved block immediately next to the pivot, preserving relative
//! order inside each block — the exact placement does not affect the
//! deferred-acceptance outcome, but a canonical form keeps outputs
//! deterministic and diffable.

use crate::agent::AgentId;
use crate::error::Error;
use crate::profile::PreferenceList;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// A misreport expressed as the sets moved above and below a pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushSpec {
    pub pivot: AgentId,
    /// Agents moved from below the pivot to above it.
    pub up: BTreeSet<AgentId>,
    /// Agents moved from above the pivot to below it.
    pub down: BTreeSet<AgentId>,
}

impl PushSpec {
    /// Structural validation: the sets are disjoint and exclude the pivot.
    pub fn new(
        pivot: AgentId,
        up: BTreeSet<AgentId>,
        down: BTreeSet<AgentId>,
    ) -> Result<PushSpec, Error> {
        if up.contains(&pivot) || down.contains(&pivot) {
            return Err(Error::PushSetContainsPivot { pivot });
        }
        if let Some(&a) = up.intersection(&down).next() {
            return Err(Error::PushSetsOverlap { agent: a });
        }
        Ok(PushSpec { pivot, up, down })
    }
}

/// Moves the agents in `up` (all strictly below `pivot` in `list`) into a
/// block immediately above the pivot. Relative order is preserved within the
/// original above-pivot segment, within the moved block, and within the
/// remaining below-pivot segment.
pub fn push_up(
    list: &PreferenceList,
    pivot: AgentId,
    up: &BTreeSet<AgentId>,
) -> Result<PreferenceList, Error> {
    rewrite(list, pivot, up, &BTreeSet::new())
}

/// Mirror of [`push_up`]: moves the agents in `down` (all strictly above
/// `pivot`) into a block immediately below the pivot.
pub fn push_down(
    list: &PreferenceList,
    pivot: AgentId,
    down: &BTreeSet<AgentId>,
) -> Result<PreferenceList, Error> {
    rewrite(list, pivot, &BTreeSet::new(), down)
}

/// Applies a combined push up and push down around `spec.pivot`.
pub fn apply_push(list: &PreferenceList, spec: &PushSpec) -> Result<PreferenceList, Error> {
    rewrite(list, spec.pivot, &spec.up, &spec.down)
}

fn rewrite(
    list: &PreferenceList,
    pivot: AgentId,
    up: &BTreeSet<AgentId>,
    down: &BTreeSet<AgentId>,
) -> Result<PreferenceList, Error> {
    if up.contains(&pivot) || down.contains(&pivot) {
        return Err(Error::PushSetContainsPivot { pivot });
    }
    if let Some(&a) = up.intersection(down).next() {
        return Err(Error::PushSetsOverlap { agent: a });
    }
    let pivot_pos = list.position(pivot).ok_or(Error::AgentNotInList { agent: pivot })?;
    for &a in up {
        match list.position(a) {
            None => return Err(Error::AgentNotInList { agent: a }),
            Some(p) if p <= pivot_pos => {
                return Err(Error::PushSetOutOfRegion { agent: a, pivot })
            }
            _ => {}
        }
    }
    for &a in down {
        match list.position(a) {
            None => return Err(Error::AgentNotInList { agent: a }),
            Some(p) if p >= pivot_pos => {
                return Err(Error::PushSetOutOfRegion { agent: a, pivot })
            }
            _ => {}
        }
    }

    let order = list.order();
    let mut out = Vec::with_capacity(order.len());
    // Above-pivot survivors, then the pushed-up block, the pivot, the
    // pushed-down block, and finally the below-pivot survivors.
    out.extend(order[..pivot_pos].iter().copied().filter(|a| !down.contains(a)));
    out.extend(order[pivot_pos + 1..].iter().copied().filter(|a| up.contains(a)));
    out.push(pivot);
    out.extend(order[..pivot_pos].iter().copied().filter(|a| down.contains(a)));
    out.extend(order[pivot_pos + 1..].iter().copied().filter(|a| !up.contains(a)));
    PreferenceList::new(list.owner(), out)
}

/// Moves `agent` to the top of the list, leaving all other relative orders
/// intact.
///
/// Panics if `agent` does not occur in the list.
pub fn promote_to_top(list: &PreferenceList, agent: AgentId) -> PreferenceList {
    let pos = list.position(agent).expect("promoted agent must occur in the list");
    let order = list.order();
    let mut out = Vec::with_capacity(order.len());
    out.push(agent);
    out.extend(order[..pos].iter().copied());
    out.extend(order[pos + 1..].iter().copied());
    PreferenceList::new(list.owner(), out).expect("reordering preserves validity")
}

/// True iff `misreport` can be derived from `true_list` by removing at most
/// one agent and reinserting it strictly earlier, with every other relative
/// order intact.
pub fn is_inconspicuous(true_list: &PreferenceList, misreport: &PreferenceList) -> bool {
    if true_list.order() == misreport.order() {
        return true;
    }
    if true_list.len() != misreport.len() {
        return false;
    }
    for &a in true_list.order() {
        let tp = true_list.position(a).unwrap();
        let mp = match misreport.position(a) {
            Some(p) => p,
            None => return false,
        };
        if mp < tp && equal_without(true_list, misreport, a) {
            return true;
        }
    }
    false
}

fn equal_without(a: &PreferenceList, b: &PreferenceList, skip: AgentId) -> bool {
    let left = a.order().iter().filter(|&&x| x != skip);
    let right = b.order().iter().filter(|&&x| x != skip);
    left.eq(right)
}

/// Normalizes `misreport` against `true_list` as a push around `pivot`:
/// returns the set `up` of agents below the pivot in the true list that the
/// misreport places above it, and the set `down` moved the other way.
///
/// When the pivot is the owner's deferred-acceptance partner under the
/// misreport, applying the returned spec to the true list is outcome-
/// equivalent to the misreport itself.
pub fn decompose_as_push(
    true_list: &PreferenceList,
    misreport: &PreferenceList,
    pivot: AgentId,
) -> Result<PushSpec, Error> {
    if true_list.owner() != misreport.owner() {
        return Err(Error::WrongOwner {
            expected: true_list.owner(),
            found: misreport.owner(),
        });
    }
    if true_list.len() != misreport.len() {
        return Err(Error::CannotNormalize { pivot });
    }
    let true_pos = true_list.position(pivot).ok_or(Error::AgentNotInList { agent: pivot })?;
    let mis_pos = misreport.position(pivot).ok_or(Error::AgentNotInList { agent: pivot })?;

    let mut up = BTreeSet::new();
    let mut down = BTreeSet::new();
    for &a in true_list.order() {
        if a == pivot {
            continue;
        }
        let below_true = true_list.position(a).unwrap() > true_pos;
        let above_mis = match misreport.position(a) {
            Some(p) => p < mis_pos,
            None => return Err(Error::CannotNormalize { pivot }),
        };
        match (below_true, above_mis) {
            (true, true) => {
                up.insert(a);
            }
            (false, false) => {
                down.insert(a);
            }
            _ => {}
        }
    }
    PushSpec::new(pivot, up, down)
}
