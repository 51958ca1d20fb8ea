//! Algorithms for strategic behavior in stable marriage markets.
//!
//! The crate implements the men-proposing deferred acceptance algorithm with
//! proposal logging, preference-list surgery (push up / push down / single
//! promotions), optimal manipulation searches for four models
//! (self, accomplice, joint pair, one-for-all), and exhaustive brute-force
//! oracles that certify the fast searches at desk scale.
//!
//! All operations are pure functions over immutable inputs. The crate is
//! `no_std` (with `alloc`); IO, file formats, experiment harness, and the CLI
//! live in the companion `matchmanip` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod agent;
pub mod da;
pub mod error;
pub mod matching;
pub mod one_for_all;
pub mod one_for_one;
pub mod oracle;
pub mod profile;
pub mod stability;
pub mod surgery;
pub mod two_for_one;

pub use agent::{AgentId, Side};
pub use da::{deferred_acceptance, ProposalLog};
pub use error::Error;
pub use matching::{dominates_for_men, dominates_for_women, Matching};
pub use one_for_all::{
    minimum_push_up_set, no_regret_set, optimal_one_for_all, proposal_delta, push_up_outcome,
    tight_bound_family, NoRegretSet, PushUpOutcome,
};
pub use one_for_one::{
    optimal_accomplice_manipulation, optimal_self_manipulation, single_promotion_candidates,
    ManipulationOutcome,
};
pub use profile::{PreferenceList, Profile};
pub use stability::{all_stable_matchings, blocking_pairs, is_stable, BlockingPair};
pub use surgery::{
    decompose_as_push, is_inconspicuous, promote_to_top, push_down, push_up, PushSpec,
};
pub use two_for_one::{
    candidate_set_sm, candidate_set_sw, optimal_pair_manipulation, pair_dominates_individuals,
    pair_improvement_exists, PairComparison, PairStrategy,
};
