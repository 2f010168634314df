//! Literals, valuations, clause doctrines, max-min belief revision and
//! margin decisions.
//!
//! A [`Valuation`] assigns an exact rational degree of belief in `[0, 1]`
//! to every literal of a [`LiteralUniverse`]. A [`Doctrine`] is a set of
//! clauses over that universe; it always materialises the excluded-middle
//! clause `{l, not l}` for every literal, contains no unit clauses, and
//! no other clause mixes a literal with its negation.
//!
//! [`one_step_revise`] raises each degree of belief to the strongest
//! support any clause gives it: for a clause containing `l`, the belief
//! in `l` is at least the weakest belief in the negations of the other
//! literals of the clause. [`upper_revise`] iterates this transform to
//! its least fixed point above the input, which exists because revised
//! values always come from the finite set of input values.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::rational::Rat;
use num_traits::{One, Zero};

/// Index of a proposition (or its negation) within a [`LiteralUniverse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal(pub(crate) u32);

impl Literal {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite set of literals with an involutive negation pairing and
/// human-readable labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiteralUniverse {
    labels: Vec<String>,
    negation: Vec<Literal>,
}

impl LiteralUniverse {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The negation partner of `lit`. Involutive: `neg(neg(l)) == l`.
    pub fn neg(&self, lit: Literal) -> Literal {
        self.negation[lit.index()]
    }

    pub fn label(&self, lit: Literal) -> &str {
        &self.labels[lit.index()]
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        (0..self.labels.len() as u32).map(Literal)
    }
}

/// Incrementally builds a [`LiteralUniverse`] out of negation pairs.
#[derive(Default)]
pub struct UniverseBuilder {
    labels: Vec<String>,
    negation: Vec<Literal>,
}

impl UniverseBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a literal and its negation, returning `(positive, negative)`.
    pub fn add_pair(&mut self, pos_label: String, neg_label: String) -> (Literal, Literal) {
        let pos = Literal(self.labels.len() as u32);
        let neg = Literal(pos.0 + 1);
        self.labels.push(pos_label);
        self.labels.push(neg_label);
        self.negation.push(neg);
        self.negation.push(pos);
        (pos, neg)
    }

    pub fn finish(self) -> LiteralUniverse {
        LiteralUniverse {
            labels: self.labels,
            negation: self.negation,
        }
    }
}

/// Exact-rational degree-of-belief map over a literal universe.
///
/// Valuations are immutable values as far as the engine is concerned:
/// revision returns a new valuation and never mutates its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    values: Vec<Rat>,
}

impl Valuation {
    /// All-zero valuation over a universe of `len` literals.
    pub fn zeros(len: usize) -> Self {
        Valuation {
            values: vec![Rat::zero(); len],
        }
    }

    /// Wraps raw values; they must already lie in `[0, 1]`.
    pub fn from_values(values: Vec<Rat>) -> Result<Self, BeliefError> {
        if values.iter().any(|r| r < &Rat::zero() || r > &Rat::one()) {
            return Err(BeliefError::ValueOutOfRange);
        }
        Ok(Valuation { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, lit: Literal) -> &Rat {
        &self.values[lit.index()]
    }

    /// Sets the belief in one literal. Panics if out of `[0, 1]`.
    pub fn set(&mut self, lit: Literal, value: Rat) {
        assert!(
            value >= Rat::zero() && value <= Rat::one(),
            "belief degree out of [0, 1]"
        );
        self.values[lit.index()] = value;
    }

    /// Pointwise comparison: `self <= other` at every literal.
    pub fn pointwise_le(&self, other: &Valuation) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// The set of distinct values taken by the valuation.
    pub fn image(&self) -> BTreeSet<Rat> {
        self.values.iter().cloned().collect()
    }

    /// `v(l) + v(not l) == 1` for every literal.
    pub fn is_balanced(&self, universe: &LiteralUniverse) -> bool {
        universe
            .literals()
            .all(|l| self.get(l) + self.get(universe.neg(l)) == Rat::one())
    }
}

/// A non-empty set of literals, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(mut literals: Vec<Literal>) -> Self {
        literals.sort_unstable();
        literals.dedup();
        assert!(!literals.is_empty(), "clause must be non-empty");
        Clause { literals }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, lit: Literal) -> bool {
        self.literals.binary_search(&lit).is_ok()
    }

    /// `self` is a (non-strict) subset of `other`.
    pub fn subset_of(&self, other: &Clause) -> bool {
        if self.len() > other.len() {
            return false;
        }
        self.literals.iter().all(|l| other.contains(*l))
    }

    /// Excluded-middle clause `{l, not l}`.
    pub fn is_tertium_non_datur(&self, universe: &LiteralUniverse) -> bool {
        self.literals.len() == 2 && universe.neg(self.literals[0]) == self.literals[1]
    }

    /// Contains some literal together with its negation.
    pub fn is_tautological(&self, universe: &LiteralUniverse) -> bool {
        self.literals
            .iter()
            .any(|&l| l < universe.neg(l) && self.contains(universe.neg(l)))
    }
}

/// Errors from the belief engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BeliefError {
    /// A valuation does not cover the doctrine's universe.
    UniverseMismatch { expected: usize, got: usize },
    /// A clause with a single literal was supplied.
    UnitClause(String),
    /// A clause other than an excluded-middle clause mixes a literal with
    /// its negation.
    ContradictoryClause(String),
    /// A clause references a literal outside the universe.
    LiteralOutOfUniverse,
    /// A belief degree outside `[0, 1]`.
    ValueOutOfRange,
    /// Decision margin outside `[0, 1]`.
    MarginOutOfRange,
    /// The fixed-point iteration exceeded its theoretical bound; this
    /// signals an engine bug, not a user error.
    RevisionCapExceeded,
}

impl core::fmt::Display for BeliefError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BeliefError::UniverseMismatch { expected, got } => write!(
                f,
                "valuation covers {got} literals but the doctrine's universe has {expected}"
            ),
            BeliefError::UnitClause(c) => write!(f, "unit clause not allowed: {c}"),
            BeliefError::ContradictoryClause(c) => {
                write!(f, "clause mixes a literal with its negation: {c}")
            }
            BeliefError::LiteralOutOfUniverse => write!(f, "clause literal outside the universe"),
            BeliefError::ValueOutOfRange => write!(f, "belief degree outside [0, 1]"),
            BeliefError::MarginOutOfRange => write!(f, "decision margin outside [0, 1]"),
            BeliefError::RevisionCapExceeded => {
                write!(f, "revision failed to reach a fixed point within its bound")
            }
        }
    }
}

impl core::error::Error for BeliefError {}

/// A set of clauses over a literal universe.
///
/// Construction materialises the excluded-middle clause for every
/// literal, rejects unit clauses, and rejects any other clause that
/// contains both a literal and its negation.
#[derive(Clone, Debug)]
pub struct Doctrine {
    universe: LiteralUniverse,
    clauses: Vec<Clause>,
    /// For each literal, the indices of the clauses containing it.
    occurrences: Vec<Vec<usize>>,
}

impl Doctrine {
    pub fn new(universe: LiteralUniverse, clauses: Vec<Clause>) -> Result<Self, BeliefError> {
        let mut set: BTreeSet<Clause> = BTreeSet::new();
        for clause in clauses {
            if clause
                .literals()
                .iter()
                .any(|l| l.index() >= universe.len())
            {
                return Err(BeliefError::LiteralOutOfUniverse);
            }
            if clause.len() == 1 {
                return Err(BeliefError::UnitClause(render_clause(&universe, &clause)));
            }
            if clause.is_tautological(&universe) && !clause.is_tertium_non_datur(&universe) {
                return Err(BeliefError::ContradictoryClause(render_clause(
                    &universe, &clause,
                )));
            }
            set.insert(clause);
        }
        for lit in universe.literals() {
            set.insert(Clause::new(vec![lit, universe.neg(lit)]));
        }
        let clauses: Vec<Clause> = set.into_iter().collect();
        let mut occurrences = vec![Vec::new(); universe.len()];
        for (idx, clause) in clauses.iter().enumerate() {
            for lit in clause.literals() {
                occurrences[lit.index()].push(idx);
            }
        }
        Ok(Doctrine {
            universe,
            clauses,
            occurrences,
        })
    }

    pub fn universe(&self) -> &LiteralUniverse {
        &self.universe
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Clauses rendered one per line, literals space-separated and
    /// label-sorted, lines sorted; the format shared by the doctrine
    /// and canonical-form dumps.
    pub fn dump_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                let mut labels: Vec<&str> = c
                    .literals()
                    .iter()
                    .map(|&l| self.universe.label(l))
                    .collect();
                labels.sort_unstable();
                labels.join(" ")
            })
            .collect();
        lines.sort();
        lines
    }
}

pub(crate) fn render_clause(universe: &LiteralUniverse, clause: &Clause) -> String {
    let mut out = String::new();
    for (i, lit) in clause.literals().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(universe.label(*lit));
    }
    out
}

fn check_universe(v: &Valuation, d: &Doctrine) -> Result<(), BeliefError> {
    if v.len() != d.universe().len() {
        return Err(BeliefError::UniverseMismatch {
            expected: d.universe().len(),
            got: v.len(),
        });
    }
    Ok(())
}

/// The support a single clause gives to its member `lit` under `v`:
/// the weakest belief in the negations of the other literals.
fn clause_support(v: &Valuation, universe: &LiteralUniverse, clause: &Clause, lit: Literal) -> Rat {
    let mut support: Option<&Rat> = None;
    for &q in clause.literals() {
        if q == lit {
            continue;
        }
        let w = v.get(universe.neg(q));
        support = Some(match support {
            Some(s) if s <= w => s,
            _ => w,
        });
    }
    support.expect("clauses have at least two literals").clone()
}

/// One step of belief revision: each literal's belief becomes the
/// strongest support any clause gives it. The result dominates `v`
/// pointwise because every excluded-middle clause supports `l` with
/// `v(l)` itself.
pub fn one_step_revise(v: &Valuation, d: &Doctrine) -> Result<Valuation, BeliefError> {
    check_universe(v, d)?;
    let universe = d.universe();
    let mut out = Vec::with_capacity(v.len());
    for lit in universe.literals() {
        let mut best = v.get(lit).clone();
        for &ci in &d.occurrences[lit.index()] {
            let s = clause_support(v, universe, &d.clauses[ci], lit);
            if s > best {
                best = s;
            }
        }
        out.push(best);
    }
    Ok(Valuation { values: out })
}

/// Least fixed point of [`one_step_revise`] above `v`.
///
/// Uses the accelerated recurrence that keeps the original `v` inside the
/// outer max and skips excluded-middle clauses, which reproduces the
/// n-fold one-step revision exactly. All iterates take values in the
/// finite image of `v`, so the loop terminates; the hard cap of
/// `|literals| * |image|` sweeps is unreachable unless the engine itself
/// is broken.
pub fn upper_revise(v: &Valuation, d: &Doctrine) -> Result<Valuation, BeliefError> {
    check_universe(v, d)?;
    let universe = d.universe();
    let cap = v.len() * v.image().len() + 2;
    let mut current = v.clone();
    for _ in 0..cap {
        let mut next = Vec::with_capacity(v.len());
        for lit in universe.literals() {
            let mut best = v.get(lit).clone();
            if current.get(lit) > &best {
                best = current.get(lit).clone();
            }
            for &ci in &d.occurrences[lit.index()] {
                let clause = &d.clauses[ci];
                if clause.is_tertium_non_datur(universe) {
                    continue;
                }
                let s = clause_support(&current, universe, clause, lit);
                if s > best {
                    best = s;
                }
            }
            next.push(best);
        }
        let next = Valuation { values: next };
        if next == current {
            return Ok(next);
        }
        current = next;
    }
    Err(BeliefError::RevisionCapExceeded)
}

/// Tri-state outcome for one literal of a margin decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LitState {
    Accepted,
    Rejected,
    Undecided,
}

/// The decision of a given margin associated with a valuation: a literal
/// is accepted when its acceptability exceeds the margin, rejected when
/// its negation is accepted, and undecided otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    states: Vec<LitState>,
    margin: Rat,
}

impl Decision {
    pub fn state(&self, lit: Literal) -> LitState {
        self.states[lit.index()]
    }

    pub fn is_accepted(&self, lit: Literal) -> bool {
        self.states[lit.index()] == LitState::Accepted
    }

    pub fn is_rejected(&self, lit: Literal) -> bool {
        self.states[lit.index()] == LitState::Rejected
    }

    pub fn is_undecided(&self, lit: Literal) -> bool {
        self.states[lit.index()] == LitState::Undecided
    }

    pub fn margin(&self) -> &Rat {
        &self.margin
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

/// Difference `v(l) - v(not l)`, in `[-1, 1]`.
pub fn acceptability(v: &Valuation, universe: &LiteralUniverse, lit: Literal) -> Rat {
    v.get(lit) - v.get(universe.neg(lit))
}

/// Decision of margin `margin` associated with `v`: `l` is accepted iff
/// `v(l) - v(not l) > margin`; `l` and `not l` are both undecided iff the
/// absolute difference is at most the margin.
pub fn decide(
    v: &Valuation,
    universe: &LiteralUniverse,
    margin: &Rat,
) -> Result<Decision, BeliefError> {
    if margin < &Rat::zero() || margin > &Rat::one() {
        return Err(BeliefError::MarginOutOfRange);
    }
    if v.len() != universe.len() {
        return Err(BeliefError::UniverseMismatch {
            expected: universe.len(),
            got: v.len(),
        });
    }
    let mut states = Vec::with_capacity(v.len());
    for lit in universe.literals() {
        let acc = acceptability(v, universe, lit);
        let state = if &acc > margin {
            LitState::Accepted
        } else if -acc > *margin {
            LitState::Rejected
        } else {
            LitState::Undecided
        };
        states.push(state);
    }
    Ok(Decision {
        states,
        margin: margin.clone(),
    })
}

/// A decision is definitely consistent with a doctrine when every clause
/// contains an accepted literal or at least two undecided ones.
pub fn is_definitely_consistent(dec: &Decision, d: &Doctrine) -> bool {
    d.clauses().iter().all(|clause| {
        let mut undecided = 0usize;
        for &lit in clause.literals() {
            match dec.state(lit) {
                LitState::Accepted => return true,
                LitState::Undecided => undecided += 1,
                LitState::Rejected => {}
            }
        }
        undecided >= 2
    })
}
