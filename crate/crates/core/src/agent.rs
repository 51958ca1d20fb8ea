//! Agent identities.

use core::fmt;

/// Side of the market an agent belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Man,
    Woman,
}

impl Side {
    /// The other side of the market.
    pub fn opposite(self) -> Side {
        match self {
            Side::Man => Side::Woman,
            Side::Woman => Side::Man,
        }
    }

    /// One-letter label used in text output (`m` / `w`).
    pub fn letter(self) -> char {
        match self {
            Side::Man => 'm',
            Side::Woman => 'w',
        }
    }
}

/// Identity of a single agent: a side plus a 0-based index within that side.
///
/// Text output is 1-based (`m1` is the man with index 0), matching the usual
/// naming in the matching literature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AgentId {
    pub side: Side,
    pub index: usize,
}

impl AgentId {
    pub fn man(index: usize) -> AgentId {
        AgentId { side: Side::Man, index }
    }

    pub fn woman(index: usize) -> AgentId {
        AgentId { side: Side::Woman, index }
    }

    pub fn is_man(self) -> bool {
        self.side == Side::Man
    }

    pub fn is_woman(self) -> bool {
        self.side == Side::Woman
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.letter(), self.index + 1)
    }
}
