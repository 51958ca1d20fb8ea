//! Error type shared by all core operations.

use crate::agent::AgentId;
use core::fmt;

/// Errors raised by validation, precondition checks, and size guards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A preference list is not a full permutation of the opposite side.
    NotAPermutation { owner: AgentId },
    /// A list owner does not match the slot it was supplied for.
    WrongOwner { expected: AgentId, found: AgentId },
    /// The two sides of a profile have different sizes, or a list has the
    /// wrong length.
    SizeMismatch { expected: usize, found: usize },
    /// A pairing is not a bijection between the two sides.
    NotABijection,
    /// A push set contains the pivot itself.
    PushSetContainsPivot { pivot: AgentId },
    /// A pushed-up agent is not strictly below the pivot (or a pushed-down
    /// agent not strictly above it) in the reference list.
    PushSetOutOfRegion { agent: AgentId, pivot: AgentId },
    /// Push-up and push-down sets overlap.
    PushSetsOverlap { agent: AgentId },
    /// An agent named by an operation does not occur in the given list.
    AgentNotInList { agent: AgentId },
    /// A misreport cannot be normalized against the given pivot.
    CannotNormalize { pivot: AgentId },
    /// Two profiles that must differ in at most one man's list differ
    /// somewhere else.
    ProfilesDifferElsewhere { agent: AgentId },
    /// An exhaustive routine was asked to run above its size guard.
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPermutation { owner } => {
                write!(f, "list of {owner} is not a permutation of the opposite side")
            }
            Error::WrongOwner { expected, found } => {
                write!(f, "expected a list owned by {expected}, found one owned by {found}")
            }
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::NotABijection => write!(f, "pairing is not a perfect matching"),
            Error::PushSetContainsPivot { pivot } => {
                write!(f, "push set contains the pivot {pivot}")
            }
            Error::PushSetOutOfRegion { agent, pivot } => {
                write!(f, "{agent} is on the wrong side of the pivot {pivot} for this push")
            }
            Error::PushSetsOverlap { agent } => {
                write!(f, "{agent} appears in both the push-up and push-down sets")
            }
            Error::AgentNotInList { agent } => write!(f, "{agent} does not occur in the list"),
            Error::CannotNormalize { pivot } => {
                write!(f, "misreport cannot be normalized around pivot {pivot}")
            }
            Error::ProfilesDifferElsewhere { agent } => {
                write!(f, "profiles differ in the list of {agent}, which is not permitted here")
            }
            Error::GuardExceeded { what, size, limit } => {
                write!(f, "{what}: size {size} exceeds the guard of {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
