//! Perfect matchings and side-wise dominance.

use crate::agent::{AgentId, Side};
use crate::error::Error;
use crate::profile::Profile;
use alloc::vec::Vec;
use core::fmt;

/// A perfect matching between the `n` men and `n` women.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    man_to_woman: Vec<usize>,
    woman_to_man: Vec<usize>,
}

impl Matching {
    /// Builds a matching from `man_to_woman[m] = w`. Fails unless the map is
    /// a bijection.
    pub fn from_man_to_woman(man_to_woman: Vec<usize>) -> Result<Matching, Error> {
        let n = man_to_woman.len();
        let mut woman_to_man = alloc::vec![usize::MAX; n];
        for (m, &w) in man_to_woman.iter().enumerate() {
            if w >= n || woman_to_man[w] != usize::MAX {
                return Err(Error::NotABijection);
            }
            woman_to_man[w] = m;
        }
        Ok(Matching { man_to_woman, woman_to_man })
    }

    pub fn n(&self) -> usize {
        self.man_to_woman.len()
    }

    /// Woman index matched with man `m`.
    pub fn woman_of(&self, m: usize) -> usize {
        self.man_to_woman[m]
    }

    /// Man index matched with woman `w`.
    pub fn man_of(&self, w: usize) -> usize {
        self.woman_to_man[w]
    }

    /// Partner of an arbitrary agent.
    pub fn partner_of(&self, agent: AgentId) -> AgentId {
        match agent.side {
            Side::Man => AgentId::woman(self.man_to_woman[agent.index]),
            Side::Woman => AgentId::man(self.woman_to_man[agent.index]),
        }
    }

    /// Pairs `(man, woman)` in ascending man order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.man_to_woman.iter().copied().enumerate()
    }
}

impl fmt::Display for Matching {
    /// `m1-w3 m2-w4 ...` in ascending man order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, w) in self.pairs() {
            if m > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", AgentId::man(m), AgentId::woman(w))?;
        }
        Ok(())
    }
}

/// True iff every woman weakly prefers her partner in `a` to her partner in `b`.
pub fn dominates_for_women(profile: &Profile, a: &Matching, b: &Matching) -> bool {
    (0..profile.n())
        .all(|w| profile.woman_rank_of(w, a.man_of(w)) <= profile.woman_rank_of(w, b.man_of(w)))
}

/// True iff every man weakly prefers his partner in `a` to his partner in `b`.
pub fn dominates_for_men(profile: &Profile, a: &Matching, b: &Matching) -> bool {
    (0..profile.n())
        .all(|m| profile.man_rank_of(m, a.woman_of(m)) <= profile.man_rank_of(m, b.woman_of(m)))
}
