//! The six clause doctrines and their initial valuations.
//!
//! Each [`DoctrineKind`] deterministically generates a clause set over a
//! [`VotingUniverse`]: pairwise-preference literals `p(x,y)` (with
//! `p(y,x)` as negation) plus, depending on the kind, one unary literal
//! family per option: `s(x)` ("x is supreme"), `t(x)` ("x is
//! prominent") or `g(x)` ("x is good").
//!
//! The comprehensive-prominence doctrine is indexed by every non-empty
//! option subset, so its clause count grows as `2^n`; construction is
//! guarded by a cap, and [`comprehensive_upper_revise`] evaluates the
//! subset clauses in grouped form during revision instead of walking a
//! materialised clause list.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::ballots::{LlullMatrix, ScoreVectors};
use crate::belief::{
    BeliefError, Clause, Doctrine, Literal, LiteralUniverse, UniverseBuilder, Valuation,
};
use crate::rational::Rat;
use num_traits::{One, Zero};

/// Option-subset clause families make comprehensive prominence
/// exponential in the option count; refuse beyond this many options
/// unless overridden.
pub const DEFAULT_COMPREHENSIVE_CAP: usize = 12;

/// The supported doctrines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DoctrineKind {
    /// Preferences chain: x over y and y over z entail x over z.
    Transitivity,
    /// Some option is preferred to every other (`s` literals).
    Supremacy,
    /// Beating everybody makes an option prominent (`t` literals).
    Prominence,
    /// Prominence plus its mirror: losing to everybody excludes it.
    SymmetricProminence,
    /// Symmetric prominence plus existence, uniqueness, and dominance
    /// clauses for every option subset.
    ComprehensiveProminence,
    /// Good options are preferred to bad ones (`g` literals).
    Goodness,
}

impl DoctrineKind {
    pub const ALL: [DoctrineKind; 6] = [
        DoctrineKind::Transitivity,
        DoctrineKind::Supremacy,
        DoctrineKind::Prominence,
        DoctrineKind::SymmetricProminence,
        DoctrineKind::ComprehensiveProminence,
        DoctrineKind::Goodness,
    ];

    pub fn id(self) -> &'static str {
        match self {
            DoctrineKind::Transitivity => "transitivity",
            DoctrineKind::Supremacy => "supremacy",
            DoctrineKind::Prominence => "prominence",
            DoctrineKind::SymmetricProminence => "symmetric-prominence",
            DoctrineKind::ComprehensiveProminence => "comprehensive-prominence",
            DoctrineKind::Goodness => "goodness",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        DoctrineKind::ALL.into_iter().find(|k| k.id() == id)
    }

    fn unary_symbol(self) -> Option<char> {
        match self {
            DoctrineKind::Transitivity => None,
            DoctrineKind::Supremacy => Some('s'),
            DoctrineKind::Prominence
            | DoctrineKind::SymmetricProminence
            | DoctrineKind::ComprehensiveProminence => Some('t'),
            DoctrineKind::Goodness => Some('g'),
        }
    }
}

/// How the unary literals are initialised from a ballot profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum UnaryInit {
    /// All unary literals start at zero belief.
    #[default]
    Zero,
    /// `s(x)` starts at the plurality fraction, `not s(x)` at the
    /// antiplurality fraction (supremacy only).
    Plurality,
    /// `t(x)` starts at the plurality fraction, `not t(x)` at the
    /// last-place fraction (prominence family only).
    PluralityAndLast,
    /// `g(x)` / `not g(x)` start at the approval / disapproval
    /// fractions (goodness only).
    Approval,
}

impl UnaryInit {
    pub fn id(self) -> &'static str {
        match self {
            UnaryInit::Zero => "zero",
            UnaryInit::Plurality => "plurality",
            UnaryInit::PluralityAndLast => "plurality-last",
            UnaryInit::Approval => "approval",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        [
            UnaryInit::Zero,
            UnaryInit::Plurality,
            UnaryInit::PluralityAndLast,
            UnaryInit::Approval,
        ]
        .into_iter()
        .find(|i| i.id() == id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DoctrineError {
    /// The doctrine's clause family is exponential in the option count
    /// and the requested size exceeds the cap.
    CapExceeded {
        kind: DoctrineKind,
        cap: usize,
        requested: usize,
    },
    /// The selected initialisation needs score vectors.
    MissingScores(UnaryInit),
    /// The selected initialisation does not apply to this doctrine.
    IncompatibleInit {
        kind: DoctrineKind,
        init: UnaryInit,
    },
    /// Matrix size does not match the universe.
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
    Belief(BeliefError),
}

impl core::fmt::Display for DoctrineError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DoctrineError::CapExceeded {
                kind,
                cap,
                requested,
            } => write!(
                f,
                "{} doctrine refuses {requested} options (cap {cap})",
                kind.id()
            ),
            DoctrineError::MissingScores(init) => {
                write!(f, "initialisation `{}` requires score vectors", init.id())
            }
            DoctrineError::IncompatibleInit { kind, init } => write!(
                f,
                "initialisation `{}` does not apply to the {} doctrine",
                init.id(),
                kind.id()
            ),
            DoctrineError::DimensionMismatch { expected, got } => {
                write!(f, "matrix has {got} options, universe expects {expected}")
            }
            DoctrineError::Belief(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DoctrineError {}

impl From<BeliefError> for DoctrineError {
    fn from(e: BeliefError) -> Self {
        DoctrineError::Belief(e)
    }
}

/// Literal universe for one doctrine over a fixed option set: the
/// pairwise-preference literals plus the kind's unary family.
#[derive(Clone, Debug)]
pub struct VotingUniverse {
    kind: DoctrineKind,
    n: usize,
    universe: LiteralUniverse,
    /// `pref[x * n + y]` for `x != y`.
    prefs: Vec<Option<Literal>>,
    unary_pos: Vec<Literal>,
    unary_neg: Vec<Literal>,
}

/// `a`, `b`, ... `z`, then `o27`, `o28`, ...
pub fn default_option_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("o{}", i + 1)
            }
        })
        .collect()
}

impl VotingUniverse {
    pub fn new(kind: DoctrineKind, option_names: &[String]) -> Self {
        let n = option_names.len();
        let mut builder = UniverseBuilder::new();
        let mut prefs = alloc::vec![None; n * n];
        for x in 0..n {
            for y in x + 1..n {
                let (xy, yx) = builder.add_pair(
                    format!("p({},{})", option_names[x], option_names[y]),
                    format!("p({},{})", option_names[y], option_names[x]),
                );
                prefs[x * n + y] = Some(xy);
                prefs[y * n + x] = Some(yx);
            }
        }
        let mut unary_pos = Vec::new();
        let mut unary_neg = Vec::new();
        if let Some(symbol) = kind.unary_symbol() {
            for name in option_names {
                let (pos, neg) =
                    builder.add_pair(format!("{symbol}({name})"), format!("~{symbol}({name})"));
                unary_pos.push(pos);
                unary_neg.push(neg);
            }
        }
        VotingUniverse {
            kind,
            n,
            universe: builder.finish(),
            prefs,
            unary_pos,
            unary_neg,
        }
    }

    pub fn kind(&self) -> DoctrineKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> &LiteralUniverse {
        &self.universe
    }

    /// The literal "x is preferable to y". Panics if `x == y`.
    pub fn pref(&self, x: usize, y: usize) -> Literal {
        self.prefs[x * self.n + y].expect("no preference literal on the diagonal")
    }

    pub fn has_unary(&self) -> bool {
        !self.unary_pos.is_empty()
    }

    /// The kind's unary literal for option `x` (`s`, `t` or `g`).
    pub fn unary(&self, x: usize) -> Literal {
        self.unary_pos[x]
    }

    pub fn unary_negated(&self, x: usize) -> Literal {
        self.unary_neg[x]
    }
}

/// Builds the doctrine for `kind` over `n` options named `a`, `b`, ...
pub fn build_doctrine(
    kind: DoctrineKind,
    n: usize,
) -> Result<(VotingUniverse, Doctrine), DoctrineError> {
    build_doctrine_named(kind, &default_option_names(n), DEFAULT_COMPREHENSIVE_CAP)
}

/// Builds the doctrine for `kind` over the given options.
///
/// With a single option every pairwise clause is vacuous and the unary
/// existence clauses degenerate to units, so the doctrine reduces to the
/// excluded-middle clauses; winner extraction short-circuits that case.
pub fn build_doctrine_named(
    kind: DoctrineKind,
    option_names: &[String],
    comprehensive_cap: usize,
) -> Result<(VotingUniverse, Doctrine), DoctrineError> {
    let n = option_names.len();
    if kind == DoctrineKind::ComprehensiveProminence && n > comprehensive_cap {
        return Err(DoctrineError::CapExceeded {
            kind,
            cap: comprehensive_cap,
            requested: n,
        });
    }
    let vu = VotingUniverse::new(kind, option_names);
    let mut clauses: Vec<Clause> = Vec::new();
    let mut push = |lits: Vec<Literal>| {
        // Only n = 1 produces degenerate unit clauses; drop them.
        if lits.len() >= 2 {
            clauses.push(Clause::new(lits));
        }
    };
    match kind {
        DoctrineKind::Transitivity => {
            for x in 0..n {
                for y in x + 1..n {
                    for z in y + 1..n {
                        push(alloc::vec![vu.pref(x, y), vu.pref(y, z), vu.pref(z, x)]);
                        push(alloc::vec![vu.pref(y, x), vu.pref(z, y), vu.pref(x, z)]);
                    }
                }
            }
        }
        DoctrineKind::Supremacy => {
            for x in 0..n {
                // Beaten by nobody implies supreme.
                let mut c = alloc::vec![vu.unary(x)];
                c.extend((0..n).filter(|&y| y != x).map(|y| vu.pref(y, x)));
                push(c);
                // Supreme implies beating everybody.
                for y in 0..n {
                    if y != x {
                        push(alloc::vec![vu.unary_negated(x), vu.pref(x, y)]);
                    }
                }
            }
            // A supreme option exists.
            push((0..n).map(|x| vu.unary(x)).collect());
        }
        DoctrineKind::Prominence | DoctrineKind::SymmetricProminence => {
            for x in 0..n {
                let mut c = alloc::vec![vu.unary(x)];
                c.extend((0..n).filter(|&y| y != x).map(|y| vu.pref(y, x)));
                push(c);
            }
            if kind == DoctrineKind::SymmetricProminence {
                for x in 0..n {
                    let mut c = alloc::vec![vu.unary_negated(x)];
                    c.extend((0..n).filter(|&y| y != x).map(|y| vu.pref(x, y)));
                    push(c);
                }
            }
        }
        DoctrineKind::ComprehensiveProminence => {
            for mask in 1u32..(1 << n) {
                let inside: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                let outside: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) == 0).collect();
                let mut rectangle: Vec<Literal> = Vec::new();
                for &r in &inside {
                    for &s in &outside {
                        rectangle.push(vu.pref(s, r));
                    }
                }
                // A set dominated by nobody outside contains a prominent option...
                let mut c: Vec<Literal> = inside.iter().map(|&r| vu.unary(r)).collect();
                c.extend(rectangle.iter().copied());
                push(c);
                // ...and excludes prominence outside it.
                for &y in &outside {
                    let mut c = alloc::vec![vu.unary_negated(y)];
                    c.extend(rectangle.iter().copied());
                    push(c);
                }
            }
            // At most one prominent option.
            for x in 0..n {
                for y in x + 1..n {
                    push(alloc::vec![vu.unary_negated(x), vu.unary_negated(y)]);
                }
            }
        }
        DoctrineKind::Goodness => {
            for x in 0..n {
                for y in 0..n {
                    if x != y {
                        push(alloc::vec![vu.unary_negated(x), vu.pref(x, y), vu.unary(y),]);
                    }
                }
            }
        }
    }
    let doctrine = Doctrine::new(vu.universe().clone(), clauses)?;
    Ok((vu, doctrine))
}

/// Builds the initial valuation: preference literals from the Llull
/// matrix, unary literals per `init`.
pub fn initial_valuation(
    vu: &VotingUniverse,
    llull: &LlullMatrix,
    scores: Option<&ScoreVectors>,
    init: UnaryInit,
) -> Result<Valuation, DoctrineError> {
    if llull.n() != vu.n() {
        return Err(DoctrineError::DimensionMismatch {
            expected: vu.n(),
            got: llull.n(),
        });
    }
    let compatible = matches!(
        (vu.kind(), init),
        (_, UnaryInit::Zero)
            | (DoctrineKind::Supremacy, UnaryInit::Plurality)
            | (
                DoctrineKind::Prominence
                    | DoctrineKind::SymmetricProminence
                    | DoctrineKind::ComprehensiveProminence,
                UnaryInit::PluralityAndLast,
            )
            | (DoctrineKind::Goodness, UnaryInit::Approval)
    );
    if !compatible {
        return Err(DoctrineError::IncompatibleInit {
            kind: vu.kind(),
            init,
        });
    }
    let mut v = Valuation::zeros(vu.universe().len());
    for x in 0..vu.n() {
        for y in 0..vu.n() {
            if x != y {
                v.set(vu.pref(x, y), llull.entry(x, y).clone());
            }
        }
    }
    if init != UnaryInit::Zero {
        let scores = scores.ok_or(DoctrineError::MissingScores(init))?;
        for x in 0..vu.n() {
            let (pos, neg) = match init {
                UnaryInit::Plurality => (&scores.plurality[x], &scores.antiplurality[x]),
                UnaryInit::PluralityAndLast => (&scores.plurality[x], &scores.last_place[x]),
                UnaryInit::Approval => (&scores.approval[x], &scores.disapproval[x]),
                UnaryInit::Zero => unreachable!(),
            };
            v.set(vu.unary(x), pos.clone());
            v.set(vu.unary_negated(x), neg.clone());
        }
    }
    Ok(v)
}

/// Minimum of `v(p(r, s))` over the cut rectangle `r` inside, `s`
/// outside, together with the cell attaining it and the runner-up value,
/// so one cell can be excluded cheaply. Empty rectangles yield 1.
struct RectMin {
    min: Rat,
    min_cell: Option<(usize, usize)>,
    second: Rat,
}

impl RectMin {
    fn of(vu: &VotingUniverse, w: &Valuation, mask: u32) -> Self {
        let n = vu.n();
        let mut best: Option<((usize, usize), Rat)> = None;
        let mut second = Rat::one();
        for r in (0..n).filter(|&i| mask & (1 << i) != 0) {
            for s in (0..n).filter(|&i| mask & (1 << i) == 0) {
                let val = w.get(vu.pref(r, s));
                match &best {
                    Some((_, b)) if val >= b => {
                        if val < &second {
                            second = val.clone();
                        }
                    }
                    Some((_, b)) => {
                        second = b.clone();
                        best = Some(((r, s), val.clone()));
                    }
                    None => best = Some(((r, s), val.clone())),
                }
            }
        }
        match best {
            Some((cell, min)) => RectMin {
                min,
                min_cell: Some(cell),
                second,
            },
            None => RectMin {
                min: Rat::one(),
                min_cell: None,
                second: Rat::one(),
            },
        }
    }

    fn full(&self) -> &Rat {
        &self.min
    }

    /// Minimum over the rectangle with one cell removed.
    fn without(&self, cell: (usize, usize)) -> &Rat {
        if self.min_cell == Some(cell) {
            &self.second
        } else {
            &self.min
        }
    }
}

/// Fixed point of one-step revision for the comprehensive-prominence
/// doctrine, evaluating the subset-indexed clauses in grouped form
/// rather than walking a materialised clause list. Numerically identical
/// to [`crate::belief::upper_revise`] on the materialised doctrine.
pub fn comprehensive_upper_revise(
    vu: &VotingUniverse,
    v0: &Valuation,
) -> Result<Valuation, BeliefError> {
    assert_eq!(vu.kind(), DoctrineKind::ComprehensiveProminence);
    if v0.len() != vu.universe().len() {
        return Err(BeliefError::UniverseMismatch {
            expected: vu.universe().len(),
            got: v0.len(),
        });
    }
    let n = vu.n();
    if n <= 1 {
        return Ok(v0.clone());
    }
    let full_mask: u32 = (1 << n) - 1;
    let cap = v0.len() * (v0.image().len() + 2) + 2;
    let mut current = v0.clone();
    for _ in 0..cap {
        let rects: Vec<RectMin> = (0..=full_mask)
            .map(|mask| RectMin::of(vu, &current, mask))
            .collect();
        // Per-mask min of `not t` and max of `t` beliefs.
        let min_neg_t = |mask: u32| -> Rat {
            let mut out = Rat::one();
            for r in (0..n).filter(|&i| mask & (1 << i) != 0) {
                let v = current.get(vu.unary_negated(r));
                if v < &out {
                    out = v.clone();
                }
            }
            out
        };
        let max_t = |mask: u32| -> Rat {
            let mut out = Rat::zero();
            for s in (0..n).filter(|&i| mask & (1 << i) != 0) {
                let v = current.get(vu.unary(s));
                if v > &out {
                    out = v.clone();
                }
            }
            out
        };
        let mut next = current.clone();
        for x in 0..n {
            // t(x): over subsets containing x, the others' rejection and
            // the subset's dominance jointly support prominence.
            let lit = vu.unary(x);
            let mut best = v0.get(lit).clone();
            if current.get(lit) > &best {
                best = current.get(lit).clone();
            }
            for mask in 1..=full_mask {
                if mask & (1 << x) == 0 {
                    continue;
                }
                let mut cand = min_neg_t(mask & !(1 << x));
                let rect = rects[mask as usize].full();
                if rect < &cand {
                    cand = rect.clone();
                }
                if cand > best {
                    best = cand;
                }
            }
            next.set(lit, best);

            // not t(x): another prominent option, or a dominant subset
            // avoiding x.
            let lit = vu.unary_negated(x);
            let mut best = v0.get(lit).clone();
            if current.get(lit) > &best {
                best = current.get(lit).clone();
            }
            for r in 0..n {
                if r != x && current.get(vu.unary(r)) > &best {
                    best = current.get(vu.unary(r)).clone();
                }
            }
            for mask in 1..=full_mask {
                if mask & (1 << x) != 0 {
                    continue;
                }
                let rect = rects[mask as usize].full();
                if rect > &best {
                    best = rect.clone();
                }
            }
            next.set(lit, best);
        }
        for y in 0..n {
            for x in 0..n {
                if x == y {
                    continue;
                }
                // p(y, x): supported by subsets containing x but not y.
                let lit = vu.pref(y, x);
                let mut best = v0.get(lit).clone();
                if current.get(lit) > &best {
                    best = current.get(lit).clone();
                }
                for mask in 1..=full_mask {
                    if mask & (1 << x) == 0 || mask & (1 << y) != 0 {
                        continue;
                    }
                    let unary_part = {
                        let a = min_neg_t(mask);
                        let b = max_t(full_mask & !mask);
                        if a >= b {
                            a
                        } else {
                            b
                        }
                    };
                    let rect = rects[mask as usize].without((x, y));
                    let cand = if &unary_part <= rect {
                        unary_part
                    } else {
                        rect.clone()
                    };
                    if cand > best {
                        best = cand;
                    }
                }
                next.set(lit, best);
            }
        }
        if next == current {
            return Ok(next);
        }
        current = next;
    }
    Err(BeliefError::RevisionCapExceeded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballots::{llull_matrix, score_vectors, Profile, TruncationMode};
    use crate::belief::{one_step_revise, upper_revise};
    use crate::rational::{rat, zero};

    fn count_with_len(d: &Doctrine, len: usize) -> usize {
        d.clauses().iter().filter(|c| c.len() == len).count()
    }

    #[test]
    fn transitivity_clause_counts() {
        let (_, d) = build_doctrine(DoctrineKind::Transitivity, 3).unwrap();
        // 3 excluded-middle pairs + the two triangle orientations.
        assert_eq!(d.clauses().len(), 5);
        assert_eq!(count_with_len(&d, 3), 2);
        let (vu, d) = build_doctrine(DoctrineKind::Transitivity, 4).unwrap();
        assert_eq!(count_with_len(&d, 3), 8);
        assert_eq!(d.clauses().len(), 6 + 8);
        let c = Clause::new(alloc::vec![vu.pref(0, 1), vu.pref(1, 2), vu.pref(2, 0)]);
        assert!(d.clauses().contains(&c));
    }

    #[test]
    fn supremacy_clause_counts() {
        let (_, d) = build_doctrine(DoctrineKind::Supremacy, 3).unwrap();
        // Families: beaten-by-nobody (3), supreme-beats-all (6),
        // existence (1), excluded middle (3 preference + 3 unary).
        assert_eq!(d.clauses().len(), 3 + 6 + 1 + 6);
    }

    #[test]
    fn comprehensive_clause_counts() {
        let (_, d) = build_doctrine(DoctrineKind::ComprehensiveProminence, 3).unwrap();
        // 7 subset-dominance clauses, 9 (subset, outsider) exclusion
        // clauses, 3 uniqueness pairs, 6 excluded middle.
        assert_eq!(d.clauses().len(), 7 + 9 + 3 + 6);
    }

    #[test]
    fn single_option_reduces_to_excluded_middle() {
        for kind in DoctrineKind::ALL {
            let (vu, d) = build_doctrine(kind, 1).unwrap();
            assert!(d
                .clauses()
                .iter()
                .all(|c| c.is_tertium_non_datur(vu.universe())));
        }
    }

    #[test]
    fn comprehensive_cap_is_enforced() {
        let err = build_doctrine_named(
            DoctrineKind::ComprehensiveProminence,
            &default_option_names(13),
            12,
        )
        .unwrap_err();
        assert!(matches!(err, DoctrineError::CapExceeded { .. }));
    }

    #[test]
    fn negation_symmetric_doctrines() {
        for kind in [DoctrineKind::SymmetricProminence, DoctrineKind::Goodness] {
            let (vu, d) = build_doctrine(kind, 4).unwrap();
            let u = vu.universe();
            for clause in d.clauses() {
                let negated = Clause::new(clause.literals().iter().map(|&l| u.neg(l)).collect());
                assert!(
                    d.clauses().contains(&negated),
                    "{kind:?} not negation-symmetric"
                );
            }
        }
    }

    #[test]
    fn derived_prominence_clauses_are_covered_by_comprehensive() {
        // Every clause obtainable from the symmetric-prominence doctrine
        // plus existence/uniqueness by resolution is a superset of some
        // comprehensive clause.
        let n = 4;
        let (vu, comp) = build_doctrine(DoctrineKind::ComprehensiveProminence, n).unwrap();
        let mut derived: Vec<Clause> = Vec::new();
        let (_, sym) = build_doctrine(DoctrineKind::SymmetricProminence, n).unwrap();
        derived.extend(sym.clauses().iter().cloned());
        derived.push(Clause::new((0..n).map(|x| vu.unary(x)).collect()));
        for x in 0..n {
            for y in x + 1..n {
                derived.push(Clause::new(alloc::vec![
                    vu.unary_negated(x),
                    vu.unary_negated(y)
                ]));
                // Pairwise combinations of the prominence clauses.
                let mut c = alloc::vec![vu.unary(x), vu.unary(y)];
                let mut cneg = alloc::vec![vu.unary_negated(x), vu.unary_negated(y)];
                for z in (0..n).filter(|&z| z != x && z != y) {
                    c.push(vu.pref(z, x));
                    c.push(vu.pref(z, y));
                    cneg.push(vu.pref(x, z));
                    cneg.push(vu.pref(y, z));
                }
                derived.push(Clause::new(c));
                derived.push(Clause::new(cneg));
            }
        }
        for clause in &derived {
            assert!(
                comp.clauses().iter().any(|c| c.subset_of(clause)),
                "not covered: {clause:?}"
            );
        }
    }

    #[test]
    fn initial_valuations() {
        let p = Profile::parse("3: a > b > c\n2: b > c > a\n").unwrap();
        let m = llull_matrix(&p, TruncationMode::Abstain);
        let s = score_vectors(&p);
        let (vu, _) = build_doctrine(DoctrineKind::Supremacy, 3).unwrap();
        let v = initial_valuation(&vu, &m, None, UnaryInit::Zero).unwrap();
        for x in 0..3 {
            assert_eq!(v.get(vu.unary(x)), &zero());
            assert_eq!(v.get(vu.unary_negated(x)), &zero());
        }
        assert_eq!(v.get(vu.pref(0, 1)), &rat(3, 5));
        let v = initial_valuation(&vu, &m, Some(&s), UnaryInit::Plurality).unwrap();
        assert_eq!(v.get(vu.unary(0)), &rat(3, 5));
        assert_eq!(v.get(vu.unary_negated(0)), &rat(2, 5));
        // Plurality initialisation is for the supremacy doctrine only.
        let (vu_t, _) = build_doctrine(DoctrineKind::Prominence, 3).unwrap();
        assert!(matches!(
            initial_valuation(&vu_t, &m, Some(&s), UnaryInit::Plurality),
            Err(DoctrineError::IncompatibleInit { .. })
        ));
        assert!(matches!(
            initial_valuation(&vu_t, &m, None, UnaryInit::PluralityAndLast),
            Err(DoctrineError::MissingScores(_))
        ));
    }

    #[test]
    fn symmetric_prominence_one_step() {
        // 3: a>b>c, 2: b>c>a. One step raises t(b) to 2/5 and leaves
        // ~t(b) at 0 because a never loses to c.
        let p = Profile::parse("3: a > b > c\n2: b > c > a\n").unwrap();
        let m = llull_matrix(&p, TruncationMode::Abstain);
        let (vu, d) = build_doctrine(DoctrineKind::SymmetricProminence, 3).unwrap();
        let v = initial_valuation(&vu, &m, None, UnaryInit::Zero).unwrap();
        let revised = one_step_revise(&v, &d).unwrap();
        assert_eq!(revised.get(vu.unary(1)), &rat(2, 5));
        assert_eq!(revised.get(vu.unary_negated(1)), &zero());
        assert_eq!(revised.get(vu.unary(0)), &rat(3, 5));
        assert_eq!(revised.get(vu.unary_negated(0)), &rat(2, 5));
    }

    #[test]
    fn plurality_and_last_init_matches_zero_init_on_complete_profiles() {
        let p = Profile::parse("3: a > b > c\n2: b > c > a\n1: c > b > a\n").unwrap();
        let m = llull_matrix(&p, TruncationMode::Abstain);
        let s = score_vectors(&p);
        // With both clause families present, the score-based starting
        // values are absorbed by revision and the whole fixed point
        // agrees with the zero start.
        for kind in [
            DoctrineKind::SymmetricProminence,
            DoctrineKind::ComprehensiveProminence,
        ] {
            let (vu, d) = build_doctrine(kind, 3).unwrap();
            let v_zero = initial_valuation(&vu, &m, None, UnaryInit::Zero).unwrap();
            let v_scores =
                initial_valuation(&vu, &m, Some(&s), UnaryInit::PluralityAndLast).unwrap();
            assert_eq!(
                upper_revise(&v_zero, &d).unwrap(),
                upper_revise(&v_scores, &d).unwrap(),
                "{kind:?}"
            );
        }
        // The one-sided prominence doctrine never feeds the rejection
        // literals, so only the prominence side of the fixed point is
        // independent of the start.
        let (vu, d) = build_doctrine(DoctrineKind::Prominence, 3).unwrap();
        let v_zero = initial_valuation(&vu, &m, None, UnaryInit::Zero).unwrap();
        let v_scores = initial_valuation(&vu, &m, Some(&s), UnaryInit::PluralityAndLast).unwrap();
        let f_zero = upper_revise(&v_zero, &d).unwrap();
        let f_scores = upper_revise(&v_scores, &d).unwrap();
        for x in 0..3 {
            assert_eq!(f_zero.get(vu.unary(x)), f_scores.get(vu.unary(x)));
        }
    }

    #[test]
    fn grouped_comprehensive_revision_matches_materialised_engine() {
        let texts = [
            "1: a > b > c\n1: b > c > a\n2: c > a > b\n1: a\n2: b\n",
            "3: a > b > c\n2: b > c > a\n",
            "1: a > b > c > d\n1: b > d > a > c\n2: c > a > d > b\n1: d > b\n",
        ];
        for text in texts {
            let p = Profile::parse(text).unwrap();
            let m = llull_matrix(&p, TruncationMode::Abstain);
            let (vu, d) =
                build_doctrine(DoctrineKind::ComprehensiveProminence, p.n_options()).unwrap();
            let v = initial_valuation(&vu, &m, None, UnaryInit::Zero).unwrap();
            let grouped = comprehensive_upper_revise(&vu, &v).unwrap();
            let materialised = upper_revise(&v, &d).unwrap();
            assert_eq!(grouped, materialised);
        }
    }

    #[test]
    fn comprehensive_fixed_point_on_cycle_matrix() {
        // Three-way cycle with a fourth option beaten by a half vote
        // everywhere; counts over 10.
        let rows = alloc::vec![
            alloc::vec![zero(), rat(6, 10), rat(3, 10), rat(5, 10)],
            alloc::vec![rat(3, 10), zero(), rat(6, 10), rat(5, 10)],
            alloc::vec![rat(6, 10), rat(3, 10), zero(), rat(5, 10)],
            alloc::vec![rat(4, 10), rat(4, 10), rat(4, 10), zero()],
        ];
        let m = LlullMatrix::from_rows(default_option_names(4), rows).unwrap();
        let (vu, d) = build_doctrine(DoctrineKind::ComprehensiveProminence, 4).unwrap();
        let v = initial_valuation(&vu, &m, None, UnaryInit::Zero).unwrap();
        let fixed = upper_revise(&v, &d).unwrap();
        assert_eq!(fixed.get(vu.unary_negated(3)), &rat(1, 2));
        for x in 0..3 {
            assert_eq!(fixed.get(vu.unary_negated(x)), &rat(2, 5));
        }
        assert_eq!(comprehensive_upper_revise(&vu, &v).unwrap(), fixed);
    }
}
