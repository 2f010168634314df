//! Resolution saturation to the Blake canonical form, and numerical
//! unquestionability checks.
//!
//! The canonical form of a doctrine is the set of all its prime clauses:
//! the result of closing the clause set under resolution while removing
//! tautological resolvents and absorbed clauses (supersets of other
//! clauses). Excluded-middle clauses are pinned: they are exempt from
//! tautology suppression and are never removed by absorption.
//!
//! A doctrine is *unquestionable* for a literal when the one-step
//! revision of the canonical form already reaches the fixed point for
//! that literal, which certifies that the revised belief does not stem
//! from unsatisfiable conjunctions. [`verify_unquestionability`] checks
//! the equality numerically for a given starting valuation.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::belief::{
    one_step_revise, upper_revise, BeliefError, Clause, Doctrine, Literal, LiteralUniverse,
    Valuation,
};
use crate::rational::Rat;

/// Saturation is exponential in the worst case; refuse universes beyond
/// this many literals unless overridden.
pub const DEFAULT_LITERAL_GUARD: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlakeError {
    /// `resolve` was called with a pivot not present in the clauses.
    PivotNotPresent,
    /// The universe exceeds the saturation size guard.
    SizeGuardExceeded {
        literals: usize,
        guard: usize,
    },
    Belief(BeliefError),
}

impl core::fmt::Display for BlakeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BlakeError::PivotNotPresent => {
                write!(f, "pivot literal not present in the clauses to resolve")
            }
            BlakeError::SizeGuardExceeded { literals, guard } => write!(
                f,
                "universe of {literals} literals exceeds the saturation guard of {guard}"
            ),
            BlakeError::Belief(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BlakeError {}

impl From<BeliefError> for BlakeError {
    fn from(e: BeliefError) -> Self {
        BlakeError::Belief(e)
    }
}

/// One resolution step for debugging: pivot, parents and resolvent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTrace {
    pub pivot: Literal,
    pub parents: (Clause, Clause),
    pub resolvent: Clause,
}

/// Resolves `c1` (containing `pivot`) with `c2` (containing the
/// negation of `pivot`). Returns `None` when the resolvent is
/// tautological, i.e. contains some literal together with its negation.
pub fn resolve(
    universe: &LiteralUniverse,
    c1: &Clause,
    c2: &Clause,
    pivot: Literal,
) -> Result<Option<Clause>, BlakeError> {
    if !c1.contains(pivot) || !c2.contains(universe.neg(pivot)) {
        return Err(BlakeError::PivotNotPresent);
    }
    Ok(resolvent_of(universe, c1, c2, pivot))
}

/// Like [`resolve`], but records the step.
pub fn resolve_traced(
    universe: &LiteralUniverse,
    c1: &Clause,
    c2: &Clause,
    pivot: Literal,
) -> Result<Option<ResolutionTrace>, BlakeError> {
    Ok(
        resolve(universe, c1, c2, pivot)?.map(|resolvent| ResolutionTrace {
            pivot,
            parents: (c1.clone(), c2.clone()),
            resolvent,
        }),
    )
}

fn resolvent_of(
    universe: &LiteralUniverse,
    c1: &Clause,
    c2: &Clause,
    pivot: Literal,
) -> Option<Clause> {
    let neg_pivot = universe.neg(pivot);
    let mut lits: Vec<Literal> = c1
        .literals()
        .iter()
        .copied()
        .filter(|&l| l != pivot)
        .collect();
    lits.extend(c2.literals().iter().copied().filter(|&l| l != neg_pivot));
    if lits.is_empty() {
        return None;
    }
    let clause = Clause::new(lits);
    if clause.is_tautological(universe) {
        None
    } else {
        Some(clause)
    }
}

/// Removes every clause that strictly contains another clause of the
/// set. Excluded-middle clauses are never removed.
fn absorb(universe: &LiteralUniverse, set: BTreeSet<Clause>) -> BTreeSet<Clause> {
    let list: Vec<Clause> = set.into_iter().collect();
    let mut keep: Vec<bool> = Vec::with_capacity(list.len());
    for (i, c) in list.iter().enumerate() {
        let absorbed = !c.is_tertium_non_datur(universe)
            && list
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && other.subset_of(c) && other != c);
        keep.push(!absorbed);
    }
    list.into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Computes the Blake canonical form of a doctrine: saturation under
/// resolution in breadth-first rounds, with tautological resolvents
/// suppressed and absorption applied after each round. The result is
/// the set of prime clauses plus the excluded-middle clauses.
pub fn blake_canonical_form(d: &Doctrine) -> Result<Doctrine, BlakeError> {
    blake_canonical_form_guarded(d, DEFAULT_LITERAL_GUARD)
}

pub fn blake_canonical_form_guarded(d: &Doctrine, guard: usize) -> Result<Doctrine, BlakeError> {
    let universe = d.universe();
    if universe.len() > guard {
        return Err(BlakeError::SizeGuardExceeded {
            literals: universe.len(),
            guard,
        });
    }
    let mut clauses: BTreeSet<Clause> = d.clauses().iter().cloned().collect();
    clauses = absorb(universe, clauses);
    loop {
        let list: Vec<Clause> = clauses.iter().cloned().collect();
        let mut fresh: BTreeSet<Clause> = BTreeSet::new();
        for (i, c1) in list.iter().enumerate() {
            for (j, c2) in list.iter().enumerate() {
                if i == j {
                    continue;
                }
                for &pivot in c1.literals() {
                    if !c2.contains(universe.neg(pivot)) {
                        continue;
                    }
                    if let Some(r) = resolvent_of(universe, c1, c2, pivot) {
                        if !clauses.contains(&r) {
                            fresh.insert(r);
                        }
                    }
                }
            }
        }
        let mut changed = false;
        for r in fresh {
            // Skip resolvents already entailed by a present clause.
            if !clauses.iter().any(|c| c.subset_of(&r)) {
                clauses.insert(r);
                changed = true;
            }
        }
        if !changed {
            break;
        }
        clauses = absorb(universe, clauses);
    }
    Doctrine::new(universe.clone(), clauses.into_iter().collect()).map_err(BlakeError::from)
}

/// Per-literal outcome of an unquestionability check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnquestionabilityEntry {
    pub literal: Literal,
    /// Belief after one revision step of the canonical form.
    pub one_step: Rat,
    /// Belief at the revision fixed point.
    pub fixed_point: Rat,
}

impl UnquestionabilityEntry {
    /// The fixed point is already reached after one step.
    pub fn holds(&self) -> bool {
        self.one_step == self.fixed_point
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnquestionabilityReport {
    pub entries: Vec<UnquestionabilityEntry>,
}

impl UnquestionabilityReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(UnquestionabilityEntry::holds)
    }
}

/// Reports, for each requested literal, whether one revision step of
/// the Blake canonical form of `d` already reaches the fixed point when
/// starting from `v0`.
pub fn verify_unquestionability(
    v0: &Valuation,
    d: &Doctrine,
    literals: &[Literal],
) -> Result<UnquestionabilityReport, BlakeError> {
    verify_unquestionability_guarded(v0, d, literals, DEFAULT_LITERAL_GUARD)
}

pub fn verify_unquestionability_guarded(
    v0: &Valuation,
    d: &Doctrine,
    literals: &[Literal],
    guard: usize,
) -> Result<UnquestionabilityReport, BlakeError> {
    let canonical = blake_canonical_form_guarded(d, guard)?;
    let one_step = one_step_revise(v0, &canonical)?;
    let fixed = upper_revise(v0, &canonical)?;
    let entries = literals
        .iter()
        .map(|&literal| UnquestionabilityEntry {
            literal,
            one_step: one_step.get(literal).clone(),
            fixed_point: fixed.get(literal).clone(),
        })
        .collect();
    Ok(UnquestionabilityReport { entries })
}
