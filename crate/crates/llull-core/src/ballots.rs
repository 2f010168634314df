//! Ballot profiles, the ballot file grammar, Llull matrices and score
//! vectors.
//!
//! # Ballot file grammar
//!
//! One ballot per line, `weight: expression`. The weight is a
//! non-negative rational in integer (`3`), fraction (`9/20`) or decimal
//! (`4.75`) notation. The expression ranks bare option tokens with `>`
//! (strict preference) and `=` (tie), and may contain one `|` divider
//! separating approved options (left) from disapproved ones (right).
//! Either side of the divider may be empty, but not both. `#` starts a
//! comment; blank lines are ignored.
//!
//! ```text
//! # three voters rank a over b over c
//! 3: a > b > c
//! 2: b > c > a
//! 5: a | b > c      # approves a, disapproves b and c, prefers b to c
//! 9/20: a > b |     # approves both, prefers a
//! 1: a = b          # a single tie group
//! ```
//!
//! # Pairwise interpretation
//!
//! A ballot contributes to the degree of belief in "x is preferable to
//! y" as follows: 1 when it ranks x strictly above y (approved options
//! count as above every disapproved one), 1/2 each when it ties them,
//! 1 / 0 when a plain ranking lists x but not y, and nothing when it
//! lists neither. A ballot with a divider abstains on every option it
//! does not mention at all. Under
//! [`TruncationMode::CompleteAsTies`] unlisted options are instead read
//! as tied among themselves below everything listed, for divided and
//! plain ballots alike. Contributions are aggregated weighted by ballot
//! weight and normalised by the total weight.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::rational::{parse_rat, Rat};
use num_traits::{One, Zero};

/// How pairs of options absent from a ballot are interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncationMode {
    /// The ballot abstains on every pair involving an unlisted option.
    Abstain,
    /// Unlisted options are appended as one tie group below everything
    /// the ballot lists.
    CompleteAsTies,
}

/// One weighted ballot: ordered tie groups of approved options, then
/// (when a divider is present) ordered tie groups of disapproved ones.
///
/// Without a divider the ballot is a plain, possibly truncated, ranking
/// stored in `approved_groups`, and carries no approval information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ballot {
    pub weight: Rat,
    pub approved_groups: Vec<Vec<usize>>,
    pub disapproved_groups: Vec<Vec<usize>>,
    pub has_divider: bool,
}

impl Ballot {
    /// Tie groups in ranking order: approved groups above disapproved
    /// groups.
    pub fn groups(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.approved_groups
            .iter()
            .chain(self.disapproved_groups.iter())
    }

    pub fn lists(&self, option: usize) -> bool {
        self.groups().any(|g| g.contains(&option))
    }
}

/// A weighted list of ballots over an ordered option set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    options: Vec<String>,
    ballots: Vec<Ballot>,
    total_weight: Rat,
}

/// Errors from ballot parsing and profile construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BallotError {
    /// Malformed ballot text; `line` is 1-based.
    Parse { line: usize, message: String },
    /// A structurally invalid profile or matrix.
    Invalid { message: String },
}

impl core::fmt::Display for BallotError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BallotError::Parse { line, message } => write!(f, "line {line}: {message}"),
            BallotError::Invalid { message } => write!(f, "{message}"),
        }
    }
}

impl core::error::Error for BallotError {}

fn parse_err(line: usize, message: impl Into<String>) -> BallotError {
    BallotError::Parse {
        line,
        message: message.into(),
    }
}

fn invalid(message: impl Into<String>) -> BallotError {
    BallotError::Invalid {
        message: message.into(),
    }
}

impl Profile {
    /// Builds a profile from parts, checking the ballot invariants.
    pub fn new(options: Vec<String>, ballots: Vec<Ballot>) -> Result<Self, BallotError> {
        if options.is_empty() {
            return Err(invalid("profile has no options"));
        }
        let mut total = Rat::zero();
        for ballot in &ballots {
            if ballot.weight < Rat::zero() {
                return Err(invalid("ballot weight is negative"));
            }
            if !ballot.has_divider && !ballot.disapproved_groups.is_empty() {
                return Err(invalid("disapproved side on a ballot without divider"));
            }
            let mut seen = vec![false; options.len()];
            let mut listed = 0usize;
            for group in ballot.groups() {
                if group.is_empty() {
                    return Err(invalid("empty tie group"));
                }
                for &o in group {
                    if o >= options.len() {
                        return Err(invalid("option index out of range"));
                    }
                    if seen[o] {
                        return Err(invalid("option listed twice in a ballot"));
                    }
                    seen[o] = true;
                    listed += 1;
                }
            }
            if listed == 0 {
                return Err(invalid("ballot lists no options"));
            }
            total += &ballot.weight;
        }
        if total <= Rat::zero() {
            return Err(invalid("profile has zero total weight"));
        }
        Ok(Profile {
            options,
            ballots,
            total_weight: total,
        })
    }

    /// Parses the ballot file grammar. Option ids are collected in order
    /// of first appearance.
    pub fn parse(text: &str) -> Result<Self, BallotError> {
        let mut options: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut ballots = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = match raw.split_once('#') {
                Some((before, _)) => before,
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (weight_text, expr) = line
                .split_once(':')
                .ok_or_else(|| parse_err(lineno, "expected `weight: expression`"))?;
            let weight = parse_rat(weight_text).ok_or_else(|| {
                parse_err(lineno, format!("malformed weight `{}`", weight_text.trim()))
            })?;
            if weight < Rat::zero() {
                return Err(parse_err(lineno, "negative weight"));
            }
            let expr = expr.trim();
            if expr.is_empty() {
                return Err(parse_err(lineno, "empty ballot expression"));
            }
            let mut intern = |token: &str| -> usize {
                *index.entry(token.to_string()).or_insert_with(|| {
                    options.push(token.to_string());
                    options.len() - 1
                })
            };
            let mut sides = expr.split('|');
            let approved_text = sides.next().unwrap_or("");
            let disapproved_text = sides.next();
            if sides.next().is_some() {
                return Err(parse_err(lineno, "more than one `|` divider"));
            }
            let has_divider = disapproved_text.is_some();
            let approved_groups = parse_side(approved_text, lineno, &mut intern)?;
            let disapproved_groups = match disapproved_text {
                Some(t) => parse_side(t, lineno, &mut intern)?,
                None => Vec::new(),
            };
            if approved_groups.is_empty() && disapproved_groups.is_empty() {
                return Err(parse_err(lineno, "empty ballot expression"));
            }
            let ballot = Ballot {
                weight,
                approved_groups,
                disapproved_groups,
                has_divider,
            };
            let mut seen = vec![false; options.len()];
            for group in ballot.groups() {
                for &o in group {
                    if seen[o] {
                        return Err(parse_err(
                            lineno,
                            format!("option `{}` listed twice", options[o]),
                        ));
                    }
                    seen[o] = true;
                }
            }
            ballots.push(ballot);
        }
        if ballots.is_empty() {
            return Err(parse_err(0, "no ballots in input"));
        }
        Profile::new(options, ballots).map_err(|e| match e {
            BallotError::Invalid { message } => parse_err(0, message),
            other => other,
        })
    }

    pub fn options(&self) -> &[String] {
        &self.options
    }

    pub fn n_options(&self) -> usize {
        self.options.len()
    }

    pub fn option_index(&self, name: &str) -> Option<usize> {
        self.options.iter().position(|o| o == name)
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn total_weight(&self) -> &Rat {
        &self.total_weight
    }

    /// Ballots contain a `|` divider, i.e. approval information exists.
    pub fn has_approval_data(&self) -> bool {
        self.ballots.iter().any(|b| b.has_divider)
    }

    /// Renders the profile in the ballot file grammar; parses back to an
    /// equal profile as long as every option is listed somewhere.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for ballot in &self.ballots {
            out.push_str(&crate::rational::format_rat(&ballot.weight));
            out.push_str(": ");
            let side = |groups: &[Vec<usize>]| -> String {
                groups
                    .iter()
                    .map(|g| {
                        g.iter()
                            .map(|&o| self.options[o].as_str())
                            .collect::<Vec<_>>()
                            .join(" = ")
                    })
                    .collect::<Vec<_>>()
                    .join(" > ")
            };
            out.push_str(&side(&ballot.approved_groups));
            if ballot.has_divider {
                if !ballot.approved_groups.is_empty() {
                    out.push(' ');
                }
                out.push('|');
                if !ballot.disapproved_groups.is_empty() {
                    out.push(' ');
                    out.push_str(&side(&ballot.disapproved_groups));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Parses one side of a divider into tie groups of interned options.
fn parse_side(
    text: &str,
    lineno: usize,
    intern: &mut impl FnMut(&str) -> usize,
) -> Result<Vec<Vec<usize>>, BallotError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut groups = Vec::new();
    for group_text in text.split('>') {
        let mut group = Vec::new();
        for token in group_text.split('=') {
            let token = token.trim();
            if token.is_empty() {
                return Err(parse_err(lineno, "empty preference group"));
            }
            if token.chars().any(char::is_whitespace) {
                return Err(parse_err(
                    lineno,
                    format!("`{token}` is not a single option token (missing `>` or `=`?)"),
                ));
            }
            group.push(intern(token));
        }
        groups.push(group);
    }
    Ok(groups)
}

/// Square table of collective degrees of belief in pairwise preferences.
///
/// Entry `(x, y)` is the degree of belief that `x` is preferable to `y`;
/// the diagonal is unused and kept at zero. For every pair,
/// `v(x, y) + v(y, x) <= 1`; the matrix is *complete* when equality
/// holds everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LlullMatrix {
    options: Vec<String>,
    entries: Vec<Rat>,
}

impl LlullMatrix {
    /// Builds a matrix from rows of entries (diagonal entries must be
    /// zero), validating the range and pair-sum invariants.
    pub fn from_rows(options: Vec<String>, rows: Vec<Vec<Rat>>) -> Result<Self, BallotError> {
        let n = options.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(invalid("matrix shape does not match option count"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            entries.extend(row);
        }
        let m = LlullMatrix { options, entries };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), BallotError> {
        let n = self.n();
        for x in 0..n {
            if !self.entry(x, x).is_zero() {
                return Err(invalid("matrix diagonal must be zero"));
            }
            for y in 0..n {
                let v = self.entry(x, y);
                if v < &Rat::zero() || v > &Rat::one() {
                    return Err(invalid("matrix entry outside [0, 1]"));
                }
                if x < y && self.entry(x, y) + self.entry(y, x) > Rat::one() {
                    return Err(invalid("opposed matrix entries sum to more than 1"));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.options.len()
    }

    pub fn options(&self) -> &[String] {
        &self.options
    }

    /// Belief that option `x` is preferable to option `y`.
    pub fn entry(&self, x: usize, y: usize) -> &Rat {
        &self.entries[x * self.n() + y]
    }

    /// Every opposed pair of entries sums to exactly 1.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (x + 1..n).all(|y| self.entry(x, y) + self.entry(y, x) == Rat::one()))
    }

    /// The sub-matrix over `keep` (indices into this matrix), in order.
    pub fn restrict(&self, keep: &[usize]) -> LlullMatrix {
        let options: Vec<String> = keep.iter().map(|&i| self.options[i].clone()).collect();
        let mut entries = Vec::with_capacity(keep.len() * keep.len());
        for &x in keep {
            for &y in keep {
                entries.push(if x == y {
                    Rat::zero()
                } else {
                    self.entry(x, y).clone()
                });
            }
        }
        LlullMatrix { options, entries }
    }
}

/// Per-option score fractions read off the ballots themselves rather
/// than the Llull matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreVectors {
    /// Fraction of the vote placing the option (possibly tied) at the top.
    pub plurality: Vec<Rat>,
    /// For each option, the total plurality fraction of the others.
    pub antiplurality: Vec<Rat>,
    /// Fraction of the vote placing the option (possibly tied) last.
    pub last_place: Vec<Rat>,
    /// Fraction of the vote approving the option (divider ballots only).
    pub approval: Vec<Rat>,
    /// Fraction of the vote disapproving the option.
    pub disapproval: Vec<Rat>,
}

/// Options for score counting; see [`score_vectors_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ScoreOptions {
    /// Count the options a truncated ballot omits as tied in last place,
    /// instead of counting only the explicitly listed bottom group.
    pub count_unlisted_as_last: bool,
}

/// Builds the Llull matrix of a profile under the given truncation mode.
pub fn llull_matrix(profile: &Profile, mode: TruncationMode) -> LlullMatrix {
    let n = profile.n_options();
    let mut sums = vec![Rat::zero(); n * n];
    let half = Rat::new(1.into(), 2.into());
    for ballot in profile.ballots() {
        if ballot.weight.is_zero() {
            continue;
        }
        // Rank level of each listed option; unlisted stay None.
        let mut level = vec![None; n];
        for (depth, group) in ballot.groups().enumerate() {
            for &o in group {
                level[o] = Some(depth);
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let contribution = match (level[x], level[y]) {
                    (Some(lx), Some(ly)) if lx < ly => Some(ballot.weight.clone()),
                    (Some(lx), Some(ly)) if lx == ly => Some(&ballot.weight * &half),
                    (Some(_), Some(_)) => None,
                    // A plain truncated ranking places listed options
                    // over unlisted ones; a divided ballot abstains on
                    // every option it does not mention.
                    (Some(_), None) => match mode {
                        TruncationMode::Abstain if ballot.has_divider => None,
                        _ => Some(ballot.weight.clone()),
                    },
                    (None, Some(_)) => None,
                    (None, None) => match mode {
                        TruncationMode::Abstain => None,
                        TruncationMode::CompleteAsTies => Some(&ballot.weight * &half),
                    },
                };
                if let Some(c) = contribution {
                    sums[x * n + y] += c;
                }
            }
        }
    }
    let total = profile.total_weight();
    let entries = sums.into_iter().map(|s| s / total).collect();
    LlullMatrix {
        options: profile.options().to_vec(),
        entries,
    }
}

/// Score vectors with the default counting rules: only the explicitly
/// listed bottom group counts as "placed last".
pub fn score_vectors(profile: &Profile) -> ScoreVectors {
    score_vectors_with(profile, ScoreOptions::default())
}

pub fn score_vectors_with(profile: &Profile, opts: ScoreOptions) -> ScoreVectors {
    let n = profile.n_options();
    let mut plurality = vec![Rat::zero(); n];
    let mut last_place = vec![Rat::zero(); n];
    let mut approval = vec![Rat::zero(); n];
    let mut disapproval = vec![Rat::zero(); n];
    for ballot in profile.ballots() {
        if ballot.weight.is_zero() {
            continue;
        }
        let groups: Vec<&Vec<usize>> = ballot.groups().collect();
        let top = groups.first().expect("ballots list at least one option");
        let share = &ballot.weight / Rat::from_integer((top.len() as i64).into());
        for &o in *top {
            plurality[o] += &share;
        }
        let unlisted: Vec<usize> = (0..n).filter(|&o| !ballot.lists(o)).collect();
        let bottom: Vec<usize> = if opts.count_unlisted_as_last && !unlisted.is_empty() {
            unlisted
        } else {
            groups.last().expect("non-empty").to_vec()
        };
        let share = &ballot.weight / Rat::from_integer((bottom.len() as i64).into());
        for o in bottom {
            last_place[o] += &share;
        }
        if ballot.has_divider {
            for group in &ballot.approved_groups {
                for &o in group {
                    approval[o] += &ballot.weight;
                }
            }
            for group in &ballot.disapproved_groups {
                for &o in group {
                    disapproval[o] += &ballot.weight;
                }
            }
        }
    }
    let total = profile.total_weight();
    let normalise = |v: Vec<Rat>| -> Vec<Rat> { v.into_iter().map(|s| s / total).collect() };
    let plurality = normalise(plurality);
    let antiplurality = (0..n)
        .map(|x| {
            plurality
                .iter()
                .enumerate()
                .filter(|(y, _)| *y != x)
                .map(|(_, f)| f)
                .sum()
        })
        .collect();
    ScoreVectors {
        plurality,
        antiplurality,
        last_place: normalise(last_place),
        approval: normalise(approval),
        disapproval: normalise(disapproval),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn short_profile() -> Profile {
        Profile::parse("3: a > b > c\n2: b > c > a\n").unwrap()
    }

    #[test]
    fn parses_ranked_profile() {
        let p = short_profile();
        assert_eq!(p.options(), ["a", "b", "c"]);
        assert_eq!(p.total_weight(), &rat_int(5));
        assert_eq!(p.ballots().len(), 2);
        assert!(!p.has_approval_data());
    }

    #[test]
    fn parses_divided_ballot() {
        let p = Profile::parse("5: a | b > c\n").unwrap();
        let b = &p.ballots()[0];
        assert!(b.has_divider);
        assert_eq!(b.approved_groups, vec![vec![0]]);
        assert_eq!(b.disapproved_groups, vec![vec![1], vec![2]]);
    }

    #[test]
    fn parses_divider_with_empty_side() {
        let p = Profile::parse("9/20: a > b |\n1/10: | a = b\n").unwrap();
        assert!(p.ballots()[0].disapproved_groups.is_empty());
        assert!(p.ballots()[0].has_divider);
        assert!(p.ballots()[1].approved_groups.is_empty());
        assert_eq!(p.ballots()[1].disapproved_groups, vec![vec![0, 1]]);
    }

    #[test]
    fn parses_tie_group_and_comments() {
        let p = Profile::parse("# header\n1: a = b  # trailing\n\n").unwrap();
        assert_eq!(p.ballots()[0].approved_groups, vec![vec![0, 1]]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Profile::parse("1: a > b\n2: a > a\n").unwrap_err();
        assert_eq!(
            err,
            BallotError::Parse {
                line: 2,
                message: "option `a` listed twice".into()
            }
        );
        let err = Profile::parse("x: a\n").unwrap_err();
        assert!(matches!(err, BallotError::Parse { line: 1, .. }));
        let err = Profile::parse("1:\n").unwrap_err();
        assert!(matches!(err, BallotError::Parse { line: 1, .. }));
        let err = Profile::parse("1: a > > b\n").unwrap_err();
        assert!(matches!(err, BallotError::Parse { line: 1, .. }));
        let err = Profile::parse("1: a | b | c\n").unwrap_err();
        assert!(matches!(err, BallotError::Parse { line: 1, .. }));
        let err = Profile::parse("").unwrap_err();
        assert!(matches!(err, BallotError::Parse { line: 0, .. }));
        let err = Profile::parse("1: a b\n").unwrap_err();
        assert!(matches!(err, BallotError::Parse { line: 1, .. }));
    }

    #[test]
    fn matrix_of_short_profile() {
        // 3: a>b>c, 2: b>c>a; times 5: a row (3, 3), b row (2, 5), c row (2, 0).
        let p = short_profile();
        let m = llull_matrix(&p, TruncationMode::Abstain);
        let expect = [
            ((0, 1), rat(3, 5)),
            ((0, 2), rat(3, 5)),
            ((1, 0), rat(2, 5)),
            ((1, 2), rat_int(1)),
            ((2, 0), rat(2, 5)),
            ((2, 1), rat(0, 1)),
        ];
        for ((x, y), v) in expect {
            assert_eq!(m.entry(x, y), &v, "entry ({x},{y})");
        }
        assert!(m.is_complete());
    }

    #[test]
    fn matrix_of_truncated_profile() {
        // 1: a>b>c, 1: b>c>a, 2: c>a>b, 1: a, 2: b; times 7:
        // a row (4, 2), b row (3, 4), c row (3, 2).
        let p = Profile::parse("1: a > b > c\n1: b > c > a\n2: c > a > b\n1: a\n2: b\n").unwrap();
        let m = llull_matrix(&p, TruncationMode::Abstain);
        let expect = [
            ((0, 1), rat(4, 7)),
            ((0, 2), rat(2, 7)),
            ((1, 0), rat(3, 7)),
            ((1, 2), rat(4, 7)),
            ((2, 0), rat(3, 7)),
            ((2, 1), rat(2, 7)),
        ];
        for ((x, y), v) in expect {
            assert_eq!(m.entry(x, y), &v, "entry ({x},{y})");
        }
        assert!(!m.is_complete());
    }

    #[test]
    fn complete_as_ties_completes_truncated_ballots() {
        let p = Profile::parse("1: a\n1: b > c\n").unwrap();
        let m = llull_matrix(&p, TruncationMode::CompleteAsTies);
        assert!(m.is_complete());
        // Ballot `a` ties b and c below a: contributes 1/2 to each of
        // p(b,c) and p(c,b).
        assert_eq!(m.entry(1, 2), &rat(3, 4)); // (1 + 1/2) / 2
        assert_eq!(m.entry(2, 1), &rat(1, 4));
        let m = llull_matrix(&p, TruncationMode::Abstain);
        assert!(!m.is_complete());
    }

    #[test]
    fn divider_induces_preferences() {
        // 5: a | b>c, 4: b>c | a, 3: c | a>b, 1: a>c | b; times 13:
        // p(a,b) = 5 + 3 + 1 = 9.
        let p = Profile::parse("5: a | b > c\n4: b > c | a\n3: c | a > b\n1: a > c | b\n").unwrap();
        let m = llull_matrix(&p, TruncationMode::Abstain);
        assert_eq!(m.entry(0, 1), &rat(9, 13));
        assert_eq!(m.entry(1, 0), &rat(4, 13));
        assert_eq!(m.entry(0, 2), &rat(6, 13));
        assert_eq!(m.entry(2, 0), &rat(7, 13));
        assert_eq!(m.entry(1, 2), &rat(9, 13));
        assert_eq!(m.entry(2, 1), &rat(4, 13));
        assert!(m.is_complete());
    }

    #[test]
    fn scores_of_short_profile() {
        let s = score_vectors(&short_profile());
        assert_eq!(s.plurality, vec![rat(3, 5), rat(2, 5), rat(0, 1)]);
        assert_eq!(s.antiplurality, vec![rat(2, 5), rat(3, 5), rat_int(1)]);
        assert_eq!(s.last_place, vec![rat(2, 5), rat(0, 1), rat(3, 5)]);
    }

    #[test]
    fn tied_top_splits_plurality() {
        let p = Profile::parse("1: a = b\n").unwrap();
        let s = score_vectors(&p);
        assert_eq!(s.plurality, vec![rat(1, 2), rat(1, 2)]);
        // The sole group is also the bottom group.
        assert_eq!(s.last_place, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn approval_scores_from_dividers() {
        // (1-e)/2: a>b |, (1-e)/2: b | a, e: a | b at e = 1/10.
        let p = Profile::parse("9/20: a > b |\n9/20: b | a\n1/10: a | b\n").unwrap();
        let s = score_vectors(&p);
        assert_eq!(s.approval, vec![rat(11, 20), rat(9, 10)]); // (1+e)/2, 1-e
        assert_eq!(s.disapproval, vec![rat(9, 20), rat(1, 10)]);
        let m = llull_matrix(&p, TruncationMode::Abstain);
        assert_eq!(m.entry(0, 1), &rat(11, 20)); // (1+e)/2
        assert_eq!(m.entry(1, 0), &rat(9, 20));
    }

    #[test]
    fn unlisted_as_last_flag() {
        let p = Profile::parse("1: a > b\n1: c > a\n").unwrap();
        let s = score_vectors(&p);
        // Explicit bottoms: b on the first ballot, a on the second.
        assert_eq!(s.last_place, vec![rat(1, 2), rat(1, 2), rat(0, 1)]);
        let s = score_vectors_with(
            &p,
            ScoreOptions {
                count_unlisted_as_last: true,
            },
        );
        // Unlisted options take last place instead: c, then b.
        assert_eq!(s.last_place, vec![rat(0, 1), rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn aggregation_is_linear_in_weights() {
        let p1 = Profile::parse("1: a > b > c\n").unwrap();
        let p2 = Profile::parse("1: a > c\n2: b > c > a\n").unwrap();
        let merged = Profile::parse("1: a > b > c\n1: a > c\n2: b > c > a\n").unwrap();
        let (m1, m2, m) = (
            llull_matrix(&p1, TruncationMode::Abstain),
            llull_matrix(&p2, TruncationMode::Abstain),
            llull_matrix(&merged, TruncationMode::Abstain),
        );
        // Option interning order differs between the parts, so compare
        // entries by name.
        for x in ["a", "b", "c"] {
            for y in ["a", "b", "c"] {
                if x == y {
                    continue;
                }
                let at = |m: &LlullMatrix, p: &Profile| {
                    m.entry(p.option_index(x).unwrap(), p.option_index(y).unwrap())
                        .clone()
                };
                let blended = (at(&m1, &p1) * rat_int(1) + at(&m2, &p2) * rat_int(3)) / rat_int(4);
                assert_eq!(at(&m, &merged), blended, "({x},{y})");
            }
        }
    }

    #[test]
    fn score_bounds_against_the_matrix() {
        use crate::random::{random_complete_strict_profile, random_ranked_profile, SplitMix64};
        let mut rng = SplitMix64::new(0xB0);
        for _ in 0..60 {
            let n = 2 + rng.gen_range(3);
            // Plain rankings: the plurality fraction never exceeds any
            // victory of its option, which never exceeds the loser's
            // antiplurality fraction.
            let p = random_ranked_profile(&mut rng, n, 8);
            let s = score_vectors(&p);
            for mode in [TruncationMode::Abstain, TruncationMode::CompleteAsTies] {
                let m = llull_matrix(&p, mode);
                for x in 0..n {
                    for y in (0..n).filter(|&y| y != x) {
                        assert!(s.plurality[x] <= *m.entry(x, y), "plurality bound");
                        assert!(*m.entry(x, y) <= s.antiplurality[y], "antiplurality bound");
                    }
                }
            }
            // Last-place bound: needs every option placed, either by a
            // complete profile or by counting unlisted options as last
            // under the tie-completing mode.
            let p = random_complete_strict_profile(&mut rng, n, 8);
            let m = llull_matrix(&p, TruncationMode::Abstain);
            let s = score_vectors(&p);
            for x in 0..n {
                for y in (0..n).filter(|&y| y != x) {
                    assert!(s.last_place[y] <= *m.entry(x, y), "last-place bound");
                }
            }
            let p = random_ranked_profile(&mut rng, n, 8);
            let m = llull_matrix(&p, TruncationMode::CompleteAsTies);
            let s = score_vectors_with(
                &p,
                ScoreOptions {
                    count_unlisted_as_last: true,
                },
            );
            for x in 0..n {
                for y in (0..n).filter(|&y| y != x) {
                    assert!(s.last_place[y] <= *m.entry(x, y), "last-place bound (ties)");
                }
            }
        }
    }

    #[test]
    fn completeness_by_mode() {
        use crate::random::{random_ranked_profile, SplitMix64};
        let mut rng = SplitMix64::new(0xB1);
        for _ in 0..40 {
            let n = 2 + rng.gen_range(3);
            let p = random_ranked_profile(&mut rng, n, 8);
            assert!(llull_matrix(&p, TruncationMode::CompleteAsTies).is_complete());
            // A plain ranking omitting a single option still compares it
            // against everything listed, so abstention only shows up in
            // pairs of jointly omitted options.
            let no_pair_omitted = p
                .ballots()
                .iter()
                .all(|b| (0..n).filter(|&o| !b.lists(o)).count() <= 1);
            assert_eq!(
                llull_matrix(&p, TruncationMode::Abstain).is_complete(),
                no_pair_omitted
            );
        }
    }

    #[test]
    fn matrix_constructor_validates() {
        let opts = vec!["a".to_string(), "b".to_string()];
        let bad = LlullMatrix::from_rows(
            opts.clone(),
            vec![vec![rat(0, 1), rat(3, 5)], vec![rat(3, 5), rat(0, 1)]],
        );
        assert!(bad.is_err());
        let ok = LlullMatrix::from_rows(
            opts,
            vec![vec![rat(0, 1), rat(3, 5)], vec![rat(2, 5), rat(0, 1)]],
        )
        .unwrap();
        assert!(ok.is_complete());
    }

    #[test]
    fn restriction_keeps_labels_and_entries() {
        let p = short_profile();
        let m = llull_matrix(&p, TruncationMode::Abstain);
        let r = m.restrict(&[0, 2]);
        assert_eq!(r.options(), ["a", "c"]);
        assert_eq!(r.entry(0, 1), m.entry(0, 2));
        assert_eq!(r.entry(1, 0), m.entry(2, 0));
    }
}
