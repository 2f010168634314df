//! Collective decision making over logically constrained propositions.
//!
//! Ballots are aggregated into exact-rational degrees of belief about
//! pairwise preferences (a Llull matrix) and, depending on the method,
//! about unary propositions such as "x is prominent" or "x is good".
//! A doctrine (a clause set in conjunctive normal form) then drives a
//! max-min revision of those degrees of belief to a fixed point, from
//! which winners and rankings are decided.
//!
//! The crate is organised as:
//!
//! - [`rational`]: exact rational arithmetic helpers (no floating point
//!   anywhere in this crate);
//! - [`belief`]: literals, valuations, clauses, doctrines, the one-step
//!   revision transform, its fixed point, and margin decisions;
//! - [`blake`]: resolution saturation to the Blake canonical form and
//!   numerical unquestionability checks;
//! - [`ballots`]: the ballot file grammar, Llull matrices and score
//!   vectors;
//! - [`doctrines`]: clause-set builders and initial valuations for the
//!   six supported doctrines;
//! - [`methods`]: closed-form winner rules cross-checkable against the
//!   generic engine, plus set-theoretic diagnostics;
//! - [`random`]: deterministic generators used by the verification
//!   commands and the randomised experiment.
//!
//! ```
//! use llull_core::ballots::{Profile, TruncationMode};
//! use llull_core::methods::{run_method, MethodId};
//! use llull_core::rational::zero;
//!
//! let profile = Profile::parse("3: a > b > c\n2: b > c > a\n").unwrap();
//! let result = run_method(
//!     MethodId::SymmetricProminence,
//!     &profile,
//!     TruncationMode::Abstain,
//!     None,
//!     &zero(),
//!     12,
//! )
//! .unwrap();
//! assert_eq!(result.winner_names(), ["b"]);
//! ```

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod ballots;
pub mod belief;
pub mod blake;
pub mod doctrines;
pub mod methods;
pub mod random;
pub mod rational;

pub use ballots::{Ballot, LlullMatrix, Profile, ScoreVectors, TruncationMode};
pub use belief::{
    acceptability, decide, is_definitely_consistent, one_step_revise, upper_revise, Clause,
    Decision, Doctrine, LitState, Literal, LiteralUniverse, Valuation,
};
pub use doctrines::{build_doctrine, initial_valuation, DoctrineKind, UnaryInit};
pub use methods::MethodResult;
pub use rational::Rat;
