//! Winner and ranking extraction for the supported methods, with
//! closed-form fast paths that the generic revision engine must agree
//! with, plus set-theoretic diagnostics (Condorcet report, minimal
//! majority-dominant set, maximin sets).
//!
//! Winners are always returned as sets and no tie-breaking is ever
//! applied: equal maxima co-win, and a method may genuinely leave
//! several options undecided.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::ballots::{
    llull_matrix, score_vectors, LlullMatrix, Profile, ScoreVectors, TruncationMode,
};
use crate::belief::{acceptability, decide, upper_revise, BeliefError, Decision, Valuation};
use crate::doctrines::{
    build_doctrine_named, comprehensive_upper_revise, initial_valuation, DoctrineError,
    DoctrineKind, UnaryInit, VotingUniverse, DEFAULT_COMPREHENSIVE_CAP,
};
use crate::rational::{half, Rat};
use num_traits::{One, Zero};

/// The selectable methods, by their command-line ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MethodId {
    Transitivity,
    Minimax,
    Plurality,
    Maximin,
    SymmetricProminence,
    ComprehensiveProminence,
    RefinedComprehensiveProminence,
    Goodness,
    Cav,
    Approval,
    Pav,
}

impl MethodId {
    pub const ALL: [MethodId; 11] = [
        MethodId::Transitivity,
        MethodId::Minimax,
        MethodId::Plurality,
        MethodId::Maximin,
        MethodId::SymmetricProminence,
        MethodId::ComprehensiveProminence,
        MethodId::RefinedComprehensiveProminence,
        MethodId::Goodness,
        MethodId::Cav,
        MethodId::Approval,
        MethodId::Pav,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MethodId::Transitivity => "transitivity",
            MethodId::Minimax => "minimax",
            MethodId::Plurality => "plurality",
            MethodId::Maximin => "maximin",
            MethodId::SymmetricProminence => "symmetric-prominence",
            MethodId::ComprehensiveProminence => "comprehensive-prominence",
            MethodId::RefinedComprehensiveProminence => "refined-comprehensive-prominence",
            MethodId::Goodness => "goodness",
            MethodId::Cav => "cav",
            MethodId::Approval => "approval",
            MethodId::Pav => "pav",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        MethodId::ALL.into_iter().find(|m| m.id() == id)
    }

    /// The doctrine behind the method, if it is doctrine-based.
    pub fn doctrine(self) -> Option<DoctrineKind> {
        match self {
            MethodId::Transitivity => Some(DoctrineKind::Transitivity),
            MethodId::Minimax | MethodId::Plurality => Some(DoctrineKind::Supremacy),
            MethodId::Maximin => Some(DoctrineKind::Prominence),
            MethodId::SymmetricProminence => Some(DoctrineKind::SymmetricProminence),
            MethodId::ComprehensiveProminence | MethodId::RefinedComprehensiveProminence => {
                Some(DoctrineKind::ComprehensiveProminence)
            }
            MethodId::Goodness => Some(DoctrineKind::Goodness),
            MethodId::Cav | MethodId::Approval | MethodId::Pav => None,
        }
    }

    /// The unary initialisation the method is defined with.
    pub fn default_init(self) -> UnaryInit {
        match self {
            MethodId::Plurality => UnaryInit::Plurality,
            MethodId::Goodness => UnaryInit::Approval,
            _ => UnaryInit::Zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodError {
    Doctrine(DoctrineError),
    Belief(BeliefError),
    /// The requested unary initialisation does not fit the method.
    IncompatibleInit {
        method: MethodId,
        init: UnaryInit,
    },
    /// The accepted strict preference relation contains a cycle, which
    /// the consistency of revised decisions rules out; an engine bug.
    RankingCycle,
}

impl core::fmt::Display for MethodError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MethodError::Doctrine(e) => write!(f, "{e}"),
            MethodError::Belief(e) => write!(f, "{e}"),
            MethodError::IncompatibleInit { method, init } => write!(
                f,
                "initialisation `{}` does not apply to the {} method",
                init.id(),
                method.id()
            ),
            MethodError::RankingCycle => {
                write!(f, "accepted preferences form a cycle (engine bug)")
            }
        }
    }
}

impl core::error::Error for MethodError {}

impl From<DoctrineError> for MethodError {
    fn from(e: DoctrineError) -> Self {
        MethodError::Doctrine(e)
    }
}

impl From<BeliefError> for MethodError {
    fn from(e: BeliefError) -> Self {
        MethodError::Belief(e)
    }
}

/// Row/column extrema of a Llull matrix. Minima over an empty index set
/// are 1 and maxima 0, so the single-option case stays well-defined.
#[derive(Clone, Debug)]
pub struct RowColStats {
    /// Weakest victory of each option: `min over y of v(x, y)`.
    pub min_row: Vec<Rat>,
    /// Strongest opposition to each option: `max over y of v(y, x)`.
    pub max_col: Vec<Rat>,
    /// Weakest opposition to each option: `min over y of v(y, x)`.
    pub min_col: Vec<Rat>,
}

impl RowColStats {
    pub fn of(m: &LlullMatrix) -> Self {
        let n = m.n();
        let mut min_row = Vec::with_capacity(n);
        let mut max_col = Vec::with_capacity(n);
        let mut min_col = Vec::with_capacity(n);
        for x in 0..n {
            let mut mr = Rat::one();
            let mut mc = Rat::zero();
            let mut mcol = Rat::one();
            for y in (0..n).filter(|&y| y != x) {
                if m.entry(x, y) < &mr {
                    mr = m.entry(x, y).clone();
                }
                if m.entry(y, x) > &mc {
                    mc = m.entry(y, x).clone();
                }
                if m.entry(y, x) < &mcol {
                    mcol = m.entry(y, x).clone();
                }
            }
            min_row.push(mr);
            max_col.push(mc);
            min_col.push(mcol);
        }
        RowColStats {
            min_row,
            max_col,
            min_col,
        }
    }

    /// `min over z outside {x, y} of v(x, z)`; 1 when empty.
    pub fn min_row_without(m: &LlullMatrix, x: usize, y: usize) -> Rat {
        let mut out = Rat::one();
        for z in (0..m.n()).filter(|&z| z != x && z != y) {
            if m.entry(x, z) < &out {
                out = m.entry(x, z).clone();
            }
        }
        out
    }
}

fn argmax_set(values: &[Rat]) -> BTreeSet<usize> {
    let best = values.iter().max().expect("non-empty");
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == best)
        .map(|(i, _)| i)
        .collect()
}

fn argmin_set(values: &[Rat]) -> BTreeSet<usize> {
    let best = values.iter().min().expect("non-empty");
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == best)
        .map(|(i, _)| i)
        .collect()
}

/// Pairwise beliefs revised under the transitivity constraint: entry
/// `(x, y)` becomes the strength of the widest path from `x` to `y`
/// (the maximum over paths of the weakest edge). Opposed entries may
/// both exceed one half afterwards, so the result is a plain table
/// rather than a Llull matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathsClosure {
    n: usize,
    entries: Vec<Rat>,
}

impl PathsClosure {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, x: usize, y: usize) -> &Rat {
        &self.entries[x * self.n + y]
    }
}

/// Widest-path closure by max-min dynamic programming. A max-min
/// optimum over walks is always attained by a simple path, so this
/// equals the maximum over simple paths.
pub fn paths_closure(m: &LlullMatrix) -> PathsClosure {
    let n = m.n();
    let mut entries: Vec<Rat> = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            entries.push(m.entry(x, y).clone());
        }
    }
    for k in 0..n {
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..n {
                if j == i || j == k {
                    continue;
                }
                let through = if entries[i * n + k] <= entries[k * n + j] {
                    entries[i * n + k].clone()
                } else {
                    entries[k * n + j].clone()
                };
                if through > entries[i * n + j] {
                    entries[i * n + j] = through;
                }
            }
        }
    }
    PathsClosure { n, entries }
}

/// Orders options into layers from a pairwise decision: each layer
/// holds the options with no accepted preference against them among
/// those remaining. Mutually undecided options share a layer. A cycle
/// in the accepted strict relation is an engine bug.
pub fn ranking_from_decision(
    dec: &Decision,
    vu: &VotingUniverse,
) -> Result<Vec<Vec<usize>>, MethodError> {
    let n = vu.n();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let layer: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&x| {
                !remaining
                    .iter()
                    .any(|&y| y != x && dec.is_accepted(vu.pref(y, x)))
            })
            .collect();
        if layer.is_empty() {
            return Err(MethodError::RankingCycle);
        }
        remaining.retain(|x| !layer.contains(x));
        layers.push(layer);
    }
    Ok(layers)
}

/// Options minimising the strongest opposition `max over y of v(y, x)`.
pub fn minimax_winners(m: &LlullMatrix) -> BTreeSet<usize> {
    argmin_set(&RowColStats::of(m).max_col)
}

/// Options maximising the plurality fraction.
pub fn plurality_winners(profile: &Profile) -> BTreeSet<usize> {
    argmax_set(&score_vectors(profile).plurality)
}

/// Options maximising the weakest victory `min over y of v(x, y)`.
pub fn maximin_winners(m: &LlullMatrix) -> BTreeSet<usize> {
    argmax_set(&RowColStats::of(m).min_row)
}

/// Winners and per-option acceptabilities of the symmetric prominence
/// method: acceptability of "x is prominent" revises to the weakest
/// victory minus the weakest opposition.
pub fn symmetric_prominence_winners(m: &LlullMatrix) -> (BTreeSet<usize>, Vec<Rat>) {
    let stats = RowColStats::of(m);
    let acc: Vec<Rat> = (0..m.n())
        .map(|x| &stats.min_row[x] - &stats.min_col[x])
        .collect();
    (argmax_set(&acc), acc)
}

/// Smallest set whose members each hold a strict majority against every
/// outsider. Computed by closing each option under "not majority-beaten
/// by" and keeping the smallest closure; dominant sets are totally
/// ordered by inclusion, so that closure is the minimal one.
pub fn smith_set(m: &LlullMatrix) -> BTreeSet<usize> {
    let n = m.n();
    let h = half();
    let mut best: Option<BTreeSet<usize>> = None;
    for seed in 0..n {
        let mut set = BTreeSet::from([seed]);
        let mut queue = vec![seed];
        while let Some(x) = queue.pop() {
            for y in 0..n {
                if y != x && !set.contains(&y) && m.entry(x, y) <= &h {
                    set.insert(y);
                    queue.push(y);
                }
            }
        }
        if best.as_ref().is_none_or(|b| set.len() < b.len()) {
            best = Some(set);
        }
    }
    best.expect("at least one option")
}

/// All proper non-empty subsets maximising the weakest outgoing
/// preference `sigma(X) = min over x in X, y outside of v(x, y)`,
/// together with that maximal value. Empty for a single option.
pub fn maximin_sets(m: &LlullMatrix) -> (Vec<BTreeSet<usize>>, Option<Rat>) {
    let n = m.n();
    if n < 2 {
        return (Vec::new(), None);
    }
    let mut best: Option<Rat> = None;
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 1u32..((1 << n) - 1) {
        let sigma = cut_min(m, mask);
        match &best {
            Some(b) if &sigma < b => {}
            Some(b) if &sigma == b => sets.push(mask_to_set(mask, n)),
            _ => {
                best = Some(sigma);
                sets = vec![mask_to_set(mask, n)];
            }
        }
    }
    (sets, best)
}

fn mask_to_set(mask: u32, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).collect()
}

/// `min over x in mask, y outside of v(x, y)`; 1 when the cut is empty.
fn cut_min(m: &LlullMatrix, mask: u32) -> Rat {
    let n = m.n();
    let mut out = Rat::one();
    for x in (0..n).filter(|&i| mask & (1 << i) != 0) {
        for y in (0..n).filter(|&i| mask & (1 << i) == 0) {
            if m.entry(x, y) < &out {
                out = m.entry(x, y).clone();
            }
        }
    }
    out
}

/// Revised rejection degree of "y is prominent" under the comprehensive
/// doctrine: the strongest dominance of any non-empty option subset
/// avoiding y. One revision step already reaches the fixed point here.
pub fn comprehensive_rejections(m: &LlullMatrix) -> Vec<Rat> {
    let n = m.n();
    let sigmas: Vec<Rat> = (0..(1u32 << n)).map(|mask| cut_min(m, mask)).collect();
    (0..n)
        .map(|y| {
            let mut out = Rat::zero();
            for mask in 1u32..(1 << n) {
                if mask & (1 << y) == 0 && sigmas[mask as usize] > out {
                    out = sigmas[mask as usize].clone();
                }
            }
            out
        })
        .collect()
}

/// One round of refinement: the candidate set and the winners it keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementRound {
    pub candidates: Vec<usize>,
    pub winners: BTreeSet<usize>,
}

/// Condorcet-style diagnostics over a Llull matrix, reporting the
/// option beating every other by strict majority, the one beating every
/// other by margin, and the option majority-beaten by every other.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CondorcetReport {
    pub winner_majority: Option<usize>,
    pub winner_margin: Option<usize>,
    pub loser_majority: Option<usize>,
}

pub fn condorcet_diagnostics(m: &LlullMatrix) -> CondorcetReport {
    let n = m.n();
    let h = half();
    let mut report = CondorcetReport::default();
    if n < 2 {
        report.winner_majority = (n == 1).then_some(0);
        report.winner_margin = (n == 1).then_some(0);
        return report;
    }
    for x in 0..n {
        if (0..n).filter(|&y| y != x).all(|y| m.entry(x, y) > &h) {
            report.winner_majority = Some(x);
        }
        if (0..n)
            .filter(|&y| y != x)
            .all(|y| m.entry(x, y) > m.entry(y, x))
        {
            report.winner_margin = Some(x);
        }
        if (0..n).filter(|&y| y != x).all(|y| m.entry(y, x) > &h) {
            report.loser_majority = Some(x);
        }
    }
    report
}

/// Revised beliefs attached to a method run.
#[derive(Clone, Debug)]
pub struct RevisedBeliefs {
    pub vu: VotingUniverse,
    pub initial: Valuation,
    pub fixed: Valuation,
    /// Margin decision over the revised beliefs.
    pub decision: Decision,
}

#[derive(Clone, Debug, Default)]
pub struct Diagnostics {
    pub condorcet: CondorcetReport,
    pub smith_set: BTreeSet<usize>,
    pub maximin_sets: Vec<BTreeSet<usize>>,
    pub maximin_sigma: Option<Rat>,
    pub refinement_rounds: Vec<RefinementRound>,
}

/// Outcome of one method run: a non-empty winner set plus whatever the
/// method computed along the way.
#[derive(Clone, Debug)]
pub struct MethodResult {
    pub method: MethodId,
    pub options: Vec<String>,
    pub winners: BTreeSet<usize>,
    /// Per-option acceptability of the method's unary proposition, for
    /// methods that decide by one.
    pub acceptabilities: Option<Vec<Rat>>,
    /// Ranking layers, top first (transitivity method).
    pub ranking: Option<Vec<Vec<usize>>>,
    pub revised: Option<RevisedBeliefs>,
    pub diagnostics: Diagnostics,
}

impl MethodResult {
    pub fn winner_names(&self) -> Vec<&str> {
        self.winners
            .iter()
            .map(|&i| self.options[i].as_str())
            .collect()
    }
}

fn base_diagnostics(m: &LlullMatrix, subset_cap: usize) -> Diagnostics {
    let mut d = Diagnostics {
        condorcet: condorcet_diagnostics(m),
        smith_set: smith_set(m),
        ..Diagnostics::default()
    };
    if m.n() <= subset_cap {
        let (sets, sigma) = maximin_sets(m);
        d.maximin_sets = sets;
        d.maximin_sigma = sigma;
    }
    d
}

/// Comprehensive prominence over a matrix: winners minimise the revised
/// rejection degree, with the one-step shortcut that an option whose
/// prominence already exceeds its rejection is the unique winner. The
/// full revised valuation comes from the grouped fixed-point iteration.
pub fn comprehensive_prominence(m: &LlullMatrix, cap: usize) -> Result<MethodResult, MethodError> {
    comprehensive_with(m, cap, MethodId::ComprehensiveProminence)
}

fn comprehensive_with(
    m: &LlullMatrix,
    cap: usize,
    method: MethodId,
) -> Result<MethodResult, MethodError> {
    let n = m.n();
    if n > cap {
        return Err(DoctrineError::CapExceeded {
            kind: DoctrineKind::ComprehensiveProminence,
            cap,
            requested: n,
        }
        .into());
    }
    let vu = VotingUniverse::new(DoctrineKind::ComprehensiveProminence, m.options());
    let initial = initial_valuation(&vu, m, None, UnaryInit::Zero)?;
    let fixed = comprehensive_upper_revise(&vu, &initial)?;
    let rejections = comprehensive_rejections(m);
    let stats = RowColStats::of(m);
    let winners = if n == 1 {
        BTreeSet::from([0])
    } else if let Some(x) = (0..n).find(|&x| stats.min_row[x] > rejections[x]) {
        // Unique-winner shortcut: prominence already outweighs rejection
        // after one step.
        BTreeSet::from([x])
    } else {
        argmin_set(&rejections)
    };
    let acc: Vec<Rat> = (0..n)
        .map(|x| acceptability(&fixed, vu.universe(), vu.unary(x)))
        .collect();
    let decision = decide(&fixed, vu.universe(), &Rat::zero())?;
    Ok(MethodResult {
        method,
        options: m.options().to_vec(),
        winners,
        acceptabilities: Some(acc),
        ranking: None,
        revised: Some(RevisedBeliefs {
            vu,
            initial,
            fixed,
            decision,
        }),
        diagnostics: base_diagnostics(m, cap),
    })
}

/// Restricts to the winner set and reruns while the winners keep
/// shrinking; stops at a singleton or at a non-shrinking round.
pub fn refined_comprehensive_prominence(
    m: &LlullMatrix,
    cap: usize,
) -> Result<MethodResult, MethodError> {
    let mut candidates: Vec<usize> = (0..m.n()).collect();
    let mut rounds: Vec<RefinementRound> = Vec::new();
    let (inner, winners) = loop {
        let restricted = m.restrict(&candidates);
        let result =
            comprehensive_with(&restricted, cap, MethodId::RefinedComprehensiveProminence)?;
        let winners: BTreeSet<usize> = result.winners.iter().map(|&i| candidates[i]).collect();
        rounds.push(RefinementRound {
            candidates: candidates.clone(),
            winners: winners.clone(),
        });
        if winners.len() <= 1 || winners.len() == candidates.len() {
            break (result, winners);
        }
        candidates = winners.into_iter().collect();
    };
    let mut diagnostics = base_diagnostics(m, cap);
    diagnostics.refinement_rounds = rounds;
    Ok(MethodResult {
        method: MethodId::RefinedComprehensiveProminence,
        options: m.options().to_vec(),
        winners,
        acceptabilities: None,
        ranking: None,
        revised: inner.revised,
        diagnostics,
    })
}

/// Goodness beliefs revised in closed form: belief in "x is good"
/// becomes the best path from x to an approved endpoint, judged by its
/// weakest link; dually for "x is bad" along incoming paths.
pub struct GoodnessRevision {
    pub good: Vec<Rat>,
    pub bad: Vec<Rat>,
    pub closure: PathsClosure,
}

pub fn goodness_revision(m: &LlullMatrix, scores: &ScoreVectors) -> GoodnessRevision {
    let n = m.n();
    let closure = paths_closure(m);
    let mut good = Vec::with_capacity(n);
    let mut bad = Vec::with_capacity(n);
    for x in 0..n {
        let mut g = scores.approval[x].clone();
        let mut b = scores.disapproval[x].clone();
        for y in (0..n).filter(|&y| y != x) {
            let via = core::cmp::min(closure.entry(x, y), &scores.approval[y]);
            if via > &g {
                g = via.clone();
            }
            let via = core::cmp::min(&scores.disapproval[y], closure.entry(y, x));
            if via > &b {
                b = via.clone();
            }
        }
        good.push(g);
        bad.push(b);
    }
    GoodnessRevision { good, bad, closure }
}

/// The goodness method: revise approval/disapproval beliefs through the
/// preference information and select the options with the highest
/// revised acceptability of "x is good".
pub fn goodness_method(
    profile: &Profile,
    mode: TruncationMode,
) -> Result<MethodResult, MethodError> {
    goodness_with_approval(profile, mode, true)
}

fn goodness_with_approval(
    profile: &Profile,
    mode: TruncationMode,
    use_approval: bool,
) -> Result<MethodResult, MethodError> {
    let m = llull_matrix(profile, mode);
    let mut scores = score_vectors(profile);
    if !use_approval {
        scores.approval = alloc::vec![Rat::zero(); m.n()];
        scores.disapproval = alloc::vec![Rat::zero(); m.n()];
    }
    let rev = goodness_revision(&m, &scores);
    let n = m.n();
    let acc: Vec<Rat> = (0..n).map(|x| &rev.good[x] - &rev.bad[x]).collect();
    let winners = argmax_set(&acc);
    // Assemble the full revised valuation for reporting.
    let vu = VotingUniverse::new(DoctrineKind::Goodness, m.options());
    let initial = initial_valuation(&vu, &m, Some(&scores), UnaryInit::Approval)?;
    let mut fixed = initial.clone();
    for x in 0..n {
        fixed.set(vu.unary(x), rev.good[x].clone());
        fixed.set(vu.unary_negated(x), rev.bad[x].clone());
        for y in 0..n {
            if x != y {
                let implied = core::cmp::min(&rev.good[x], &rev.bad[y]);
                let value = core::cmp::max(m.entry(x, y), implied);
                fixed.set(vu.pref(x, y), value.clone());
            }
        }
    }
    let decision = decide(&fixed, vu.universe(), &Rat::zero())?;
    Ok(MethodResult {
        method: MethodId::Goodness,
        options: m.options().to_vec(),
        winners,
        acceptabilities: Some(acc),
        ranking: None,
        revised: Some(RevisedBeliefs {
            vu,
            initial,
            fixed,
            decision,
        }),
        diagnostics: base_diagnostics(&m, DEFAULT_COMPREHENSIVE_CAP),
    })
}

/// The approval-first baseline: the approval score decides unless
/// several candidates are majority-approved, in which case their
/// Condorcet winner decides; failing that, the approval score within
/// the minimal majority-dominant subset of the majority-approved set.
pub fn pav_winner(profile: &Profile, mode: TruncationMode) -> BTreeSet<usize> {
    let m = llull_matrix(profile, mode);
    let scores = score_vectors(profile);
    let n = m.n();
    let h = half();
    let majority: Vec<usize> = (0..n).filter(|&x| scores.approval[x] > h).collect();
    if majority.len() <= 1 {
        return argmax_set(&scores.approval);
    }
    if let Some(&x) = majority
        .iter()
        .find(|&&x| majority.iter().all(|&y| y == x || m.entry(x, y) > &h))
    {
        return BTreeSet::from([x]);
    }
    let restricted = m.restrict(&majority);
    let dominant = smith_set(&restricted);
    let pool: Vec<usize> = dominant.into_iter().map(|i| majority[i]).collect();
    let best = pool
        .iter()
        .map(|&x| &scores.approval[x])
        .max()
        .expect("non-empty pool");
    pool.into_iter()
        .filter(|&x| &scores.approval[x] == best)
        .collect()
}

/// Runs a method over a profile. `init` overrides the method's default
/// unary initialisation where compatible; `margin` governs the reported
/// pairwise decision and the transitivity ranking; `subset_cap` bounds
/// the option count for the subset-indexed computations.
pub fn run_method(
    method: MethodId,
    profile: &Profile,
    mode: TruncationMode,
    init: Option<UnaryInit>,
    margin: &Rat,
    subset_cap: usize,
) -> Result<MethodResult, MethodError> {
    if let Some(explicit) = init {
        let allowed: &[UnaryInit] = match method {
            MethodId::Transitivity | MethodId::RefinedComprehensiveProminence => &[UnaryInit::Zero],
            MethodId::Minimax | MethodId::Plurality => &[UnaryInit::Zero, UnaryInit::Plurality],
            MethodId::Maximin
            | MethodId::SymmetricProminence
            | MethodId::ComprehensiveProminence => &[UnaryInit::Zero, UnaryInit::PluralityAndLast],
            MethodId::Goodness => &[UnaryInit::Zero, UnaryInit::Approval],
            MethodId::Cav | MethodId::Approval | MethodId::Pav => &[UnaryInit::Approval],
        };
        if !allowed.contains(&explicit) {
            return Err(MethodError::IncompatibleInit {
                method,
                init: explicit,
            });
        }
    }
    let m = llull_matrix(profile, mode);
    let n = m.n();
    if n == 1 {
        // A sole option wins by fiat under every method.
        return Ok(MethodResult {
            method,
            options: m.options().to_vec(),
            winners: BTreeSet::from([0]),
            acceptabilities: None,
            ranking: (method == MethodId::Transitivity).then(|| vec![vec![0]]),
            revised: None,
            diagnostics: base_diagnostics(&m, subset_cap),
        });
    }
    let scores = score_vectors(profile);
    let init = init.unwrap_or_else(|| match method {
        // Ballots without dividers carry no approval information; the
        // unary beliefs then start at zero.
        MethodId::Goodness if !profile.has_approval_data() => UnaryInit::Zero,
        _ => method.default_init(),
    });
    match method {
        MethodId::Transitivity => {
            let closure = paths_closure(&m);
            let vu = VotingUniverse::new(DoctrineKind::Transitivity, m.options());
            let initial = initial_valuation(&vu, &m, None, UnaryInit::Zero)?;
            let mut fixed = initial.clone();
            for x in 0..n {
                for y in 0..n {
                    if x != y {
                        fixed.set(vu.pref(x, y), closure.entry(x, y).clone());
                    }
                }
            }
            let decision = decide(&fixed, vu.universe(), margin)?;
            let ranking = ranking_from_decision(&decision, &vu)?;
            Ok(MethodResult {
                method,
                options: m.options().to_vec(),
                winners: ranking[0].iter().copied().collect(),
                acceptabilities: None,
                ranking: Some(ranking),
                revised: Some(RevisedBeliefs {
                    vu,
                    initial,
                    fixed,
                    decision,
                }),
                diagnostics: base_diagnostics(&m, subset_cap),
            })
        }
        MethodId::Minimax
        | MethodId::Plurality
        | MethodId::Maximin
        | MethodId::SymmetricProminence => {
            let kind = method.doctrine().expect("doctrine-based");
            let (vu, doctrine) = build_doctrine_named(kind, m.options(), subset_cap)?;
            let initial = initial_valuation(&vu, &m, Some(&scores), init)?;
            let fixed = upper_revise(&initial, &doctrine)?;
            let acc: Vec<Rat> = (0..n)
                .map(|x| acceptability(&fixed, vu.universe(), vu.unary(x)))
                .collect();
            let winners = match method {
                // Supremacy winners: options whose supremacy is not
                // rejected.
                MethodId::Minimax | MethodId::Plurality => {
                    (0..n).filter(|&x| acc[x] >= Rat::zero()).collect()
                }
                // Prominence winners: highest acceptability.
                _ => argmax_set(&acc),
            };
            let decision = decide(&fixed, vu.universe(), margin)?;
            Ok(MethodResult {
                method,
                options: m.options().to_vec(),
                winners,
                acceptabilities: Some(acc),
                ranking: None,
                revised: Some(RevisedBeliefs {
                    vu,
                    initial,
                    fixed,
                    decision,
                }),
                diagnostics: base_diagnostics(&m, subset_cap),
            })
        }
        MethodId::ComprehensiveProminence => {
            if init == UnaryInit::Zero {
                comprehensive_prominence(&m, subset_cap)
            } else {
                // Non-default initialisation: run the grouped engine and
                // decide by the not-rejected rule.
                if n > subset_cap {
                    return Err(DoctrineError::CapExceeded {
                        kind: DoctrineKind::ComprehensiveProminence,
                        cap: subset_cap,
                        requested: n,
                    }
                    .into());
                }
                let vu = VotingUniverse::new(DoctrineKind::ComprehensiveProminence, m.options());
                let initial = initial_valuation(&vu, &m, Some(&scores), init)?;
                let fixed = comprehensive_upper_revise(&vu, &initial)?;
                let acc: Vec<Rat> = (0..n)
                    .map(|x| acceptability(&fixed, vu.universe(), vu.unary(x)))
                    .collect();
                let winners = (0..n).filter(|&x| acc[x] >= Rat::zero()).collect();
                let decision = decide(&fixed, vu.universe(), margin)?;
                Ok(MethodResult {
                    method,
                    options: m.options().to_vec(),
                    winners,
                    acceptabilities: Some(acc),
                    ranking: None,
                    revised: Some(RevisedBeliefs {
                        vu,
                        initial,
                        fixed,
                        decision,
                    }),
                    diagnostics: base_diagnostics(&m, subset_cap),
                })
            }
        }
        MethodId::RefinedComprehensiveProminence => {
            refined_comprehensive_prominence(&m, subset_cap)
        }
        MethodId::Goodness => goodness_with_approval(profile, mode, init == UnaryInit::Approval),
        MethodId::Cav => {
            let acc: Vec<Rat> = (0..n)
                .map(|x| &scores.approval[x] - &scores.disapproval[x])
                .collect();
            Ok(MethodResult {
                method,
                options: m.options().to_vec(),
                winners: argmax_set(&acc),
                acceptabilities: Some(acc),
                ranking: None,
                revised: None,
                diagnostics: base_diagnostics(&m, subset_cap),
            })
        }
        MethodId::Approval => Ok(MethodResult {
            method,
            options: m.options().to_vec(),
            winners: argmax_set(&scores.approval),
            acceptabilities: None,
            ranking: None,
            revised: None,
            diagnostics: base_diagnostics(&m, subset_cap),
        }),
        MethodId::Pav => Ok(MethodResult {
            method,
            options: m.options().to_vec(),
            winners: pav_winner(profile, mode),
            acceptabilities: None,
            ranking: None,
            revised: None,
            diagnostics: base_diagnostics(&m, subset_cap),
        }),
    }
}

/// Outcome of the randomised inclusion experiment comparing transitivity
/// winners with refined comprehensive prominence winners on complete
/// profiles. Reported, never asserted.
#[derive(Clone, Debug)]
pub struct ConjectureOutcome {
    pub trials: usize,
    pub counterexamples: usize,
    pub first_counterexample: Option<String>,
}

/// Runs `trials` random profiles of `n_options` and counts those where
/// some transitivity winner falls outside the refined comprehensive
/// prominence winners.
pub fn conjecture_experiment(
    trials: usize,
    n_options: usize,
    seed: u64,
    complete: bool,
    cap: usize,
) -> Result<ConjectureOutcome, MethodError> {
    let mut rng = crate::random::SplitMix64::new(seed);
    let mut counterexamples = 0usize;
    let mut first = None;
    for _ in 0..trials {
        let profile = if complete {
            crate::random::random_complete_strict_profile(&mut rng, n_options, 8)
        } else {
            crate::random::random_ranked_profile(&mut rng, n_options, 8)
        };
        let transitivity = run_method(
            MethodId::Transitivity,
            &profile,
            TruncationMode::Abstain,
            None,
            &Rat::zero(),
            cap,
        )?;
        let refined = run_method(
            MethodId::RefinedComprehensiveProminence,
            &profile,
            TruncationMode::Abstain,
            None,
            &Rat::zero(),
            cap,
        )?;
        if !transitivity.winners.is_subset(&refined.winners) {
            counterexamples += 1;
            if first.is_none() {
                first = Some(format!(
                    "profile:\n{}transitivity winners {:?}, refined winners {:?}",
                    profile.render(),
                    transitivity.winner_names(),
                    refined.winner_names()
                ));
            }
        }
    }
    Ok(ConjectureOutcome {
        trials,
        counterexamples,
        first_counterexample: first,
    })
}
