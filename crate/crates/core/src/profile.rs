//! Preference lists and profiles.

use crate::agent::{AgentId, Side};
use crate::error::Error;
use alloc::vec::Vec;
use core::fmt;

/// A complete strict preference list: the owner ranks every agent of the
/// opposite side, best first, with no ties and no omissions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreferenceList {
    owner: AgentId,
    order: Vec<AgentId>,
}

impl PreferenceList {
    /// Builds a validated list. `order` must be a permutation of all `n`
    /// opposite-side agents, where `n = order.len()`.
    pub fn new(owner: AgentId, order: Vec<AgentId>) -> Result<PreferenceList, Error> {
        let n = order.len();
        let mut seen = alloc::vec![false; n];
        for a in &order {
            if a.side != owner.side.opposite() || a.index >= n || seen[a.index] {
                return Err(Error::NotAPermutation { owner });
            }
            seen[a.index] = true;
        }
        if n == 0 {
            return Err(Error::NotAPermutation { owner });
        }
        Ok(PreferenceList { owner, order })
    }

    /// Convenience constructor from 0-based opposite-side indices.
    pub fn from_indices(owner: AgentId, order: &[usize]) -> Result<PreferenceList, Error> {
        let side = owner.side.opposite();
        let order = order.iter().map(|&i| AgentId { side, index: i }).collect();
        PreferenceList::new(owner, order)
    }

    pub fn owner(&self) -> AgentId {
        self.owner
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The ranked agents, best first.
    pub fn order(&self) -> &[AgentId] {
        &self.order
    }

    /// 0-based position of `agent`, if present.
    pub fn position(&self, agent: AgentId) -> Option<usize> {
        self.order.iter().position(|&a| a == agent)
    }

    pub(crate) fn indices(&self) -> Vec<usize> {
        self.order.iter().map(|a| a.index).collect()
    }
}

impl fmt::Display for PreferenceList {
    /// Prints the ranked agents as space-separated labels, e.g. `w3 w1 w2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.order.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A complete preference profile for `n` men and `n` women.
///
/// Ranks are precomputed as inverse-permutation tables at construction, so
/// [`Profile::rank`] and [`Profile::prefers`] are O(1). Profiles are immutable;
/// [`Profile::with_list`] produces a modified copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    n: usize,
    /// men_order[m][k] = index of the woman man `m` ranks at position `k`.
    men_order: Vec<Vec<usize>>,
    women_order: Vec<Vec<usize>>,
    /// men_rank[m][w] = 0-based position of woman `w` in man `m`'s list.
    men_rank: Vec<Vec<usize>>,
    women_rank: Vec<Vec<usize>>,
}

impl Profile {
    /// Builds a validated profile from one list per man and one per woman,
    /// each given in owner order (`men[i]` owned by man `i`).
    pub fn new(men: Vec<PreferenceList>, women: Vec<PreferenceList>) -> Result<Profile, Error> {
        let n = men.len();
        if women.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: women.len() });
        }
        if n == 0 {
            return Err(Error::SizeMismatch { expected: 1, found: 0 });
        }
        let mut men_order = Vec::with_capacity(n);
        let mut women_order = Vec::with_capacity(n);
        for (i, list) in men.iter().enumerate() {
            let expected = AgentId::man(i);
            if list.owner() != expected {
                return Err(Error::WrongOwner { expected, found: list.owner() });
            }
            if list.len() != n {
                return Err(Error::SizeMismatch { expected: n, found: list.len() });
            }
            men_order.push(list.indices());
        }
        for (j, list) in women.iter().enumerate() {
            let expected = AgentId::woman(j);
            if list.owner() != expected {
                return Err(Error::WrongOwner { expected, found: list.owner() });
            }
            if list.len() != n {
                return Err(Error::SizeMismatch { expected: n, found: list.len() });
            }
            women_order.push(list.indices());
        }
        let men_rank = invert_all(&men_order);
        let women_rank = invert_all(&women_order);
        Ok(Profile { n, men_order, women_order, men_rank, women_rank })
    }

    /// Builds a profile from 0-based index rows: `men[i]` lists woman indices,
    /// `women[j]` lists man indices.
    pub fn from_rows(men: &[Vec<usize>], women: &[Vec<usize>]) -> Result<Profile, Error> {
        let men = men
            .iter()
            .enumerate()
            .map(|(i, row)| PreferenceList::from_indices(AgentId::man(i), row))
            .collect::<Result<Vec<_>, _>>()?;
        let women = women
            .iter()
            .enumerate()
            .map(|(j, row)| PreferenceList::from_indices(AgentId::woman(j), row))
            .collect::<Result<Vec<_>, _>>()?;
        Profile::new(men, women)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Reconstructs the preference list of `agent`.
    pub fn list(&self, agent: AgentId) -> PreferenceList {
        let order = match agent.side {
            Side::Man => &self.men_order[agent.index],
            Side::Woman => &self.women_order[agent.index],
        };
        let side = agent.side.opposite();
        PreferenceList {
            owner: agent,
            order: order.iter().map(|&i| AgentId { side, index: i }).collect(),
        }
    }

    /// 1-based rank of `partner` in `agent`'s list (1 = top choice).
    ///
    /// Panics if `partner` is not on the opposite side or out of range.
    pub fn rank(&self, agent: AgentId, partner: AgentId) -> usize {
        assert_eq!(partner.side, agent.side.opposite(), "rank: partner on same side as agent");
        let table = match agent.side {
            Side::Man => &self.men_rank[agent.index],
            Side::Woman => &self.women_rank[agent.index],
        };
        table[partner.index] + 1
    }

    /// True iff `agent` strictly prefers `a` to `b`.
    pub fn prefers(&self, agent: AgentId, a: AgentId, b: AgentId) -> bool {
        self.rank(agent, a) < self.rank(agent, b)
    }

    /// A copy of this profile with the list of `list.owner()` replaced.
    pub fn with_list(&self, list: &PreferenceList) -> Result<Profile, Error> {
        if list.len() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: list.len() });
        }
        let mut out = self.clone();
        let row = list.indices();
        let inv = invert(&row);
        match list.owner().side {
            Side::Man => {
                out.men_order[list.owner().index] = row;
                out.men_rank[list.owner().index] = inv;
            }
            Side::Woman => {
                out.women_order[list.owner().index] = row;
                out.women_rank[list.owner().index] = inv;
            }
        }
        Ok(out)
    }

    // Fast internal accessors used by the algorithm modules.

    pub(crate) fn man_order(&self, m: usize) -> &[usize] {
        &self.men_order[m]
    }

    pub(crate) fn man_rank_of(&self, m: usize, w: usize) -> usize {
        self.men_rank[m][w]
    }

    pub(crate) fn woman_rank_of(&self, w: usize, m: usize) -> usize {
        self.women_rank[w][m]
    }
}

fn invert(order: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0usize; order.len()];
    for (pos, &x) in order.iter().enumerate() {
        inv[x] = pos;
    }
    inv
}

fn invert_all(orders: &[Vec<usize>]) -> Vec<Vec<usize>> {
    orders.iter().map(|o| invert(o)).collect()
}
