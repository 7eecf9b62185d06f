//! Payoff matrices, mixed strategies, and best-response analysis.
//!
//! Conventions: the row player maximizes and the column player minimizes the
//! same payoff, so a single matrix of row-player payoffs describes the game.
//! A mixed strategy is the probability placed on a player's first action.
//! Against a fixed opponent, a player's expected payoff is affine in that
//! probability, which is why every best-response set is `{0}`, `{1}`, or all
//! of `[0,1]`, and why checking the four pure deviations decides Nash.

use std::cmp::Ordering;
use std::fmt;

use crate::numeric::Rational;

/// Payoffs of a 2x2 zero-sum game from the row player's point of view.
///
/// `uij` is the row player's payoff when the row player takes action `i` and
/// the column player takes action `j`; the column player receives `-uij`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PayoffMatrix {
    u11: Rational,
    u12: Rational,
    u21: Rational,
    u22: Rational,
}

impl PayoffMatrix {
    pub fn new(u11: Rational, u12: Rational, u21: Rational, u22: Rational) -> Self {
        PayoffMatrix { u11, u12, u21, u22 }
    }

    /// Convenience for integer payoffs.
    pub fn from_ints(u11: i64, u12: i64, u21: i64, u22: i64) -> Self {
        PayoffMatrix::new(
            Rational::from_int(u11),
            Rational::from_int(u12),
            Rational::from_int(u21),
            Rational::from_int(u22),
        )
    }

    pub fn u11(&self) -> &Rational {
        &self.u11
    }

    pub fn u12(&self) -> &Rational {
        &self.u12
    }

    pub fn u21(&self) -> &Rational {
        &self.u21
    }

    pub fn u22(&self) -> &Rational {
        &self.u22
    }

    /// Interaction term `u11 - u12 - u21 + u22`, recomputed on every call.
    ///
    /// Zero exactly when the payoff difference between the rows does not
    /// depend on the column (and vice versa).
    pub fn delta(&self) -> Rational {
        &self.u11 - &self.u12 - &self.u21 + &self.u22
    }

    /// The dual game: transposed and negated, so the players swap roles.
    /// The dual's row player faces exactly the original column player's
    /// decision problem.
    pub fn dual(&self) -> PayoffMatrix {
        PayoffMatrix::new(-&self.u11, -&self.u21, -&self.u12, -&self.u22)
    }
}

impl fmt::Display for PayoffMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.u11, self.u12, self.u21, self.u22
        )
    }
}

/// Probability a player places on their first action.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MixedStrategy {
    p: Rational,
}

/// Invalid game-level input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(Rational),
}

impl MixedStrategy {
    /// Requires `0 <= p <= 1`.
    pub fn new(p: Rational) -> Result<Self, GameError> {
        if p.is_negative() || p > Rational::one() {
            Err(GameError::ProbabilityOutOfRange(p))
        } else {
            Ok(MixedStrategy { p })
        }
    }

    /// Plays the first action with certainty.
    pub fn pure_a1() -> Self {
        MixedStrategy { p: Rational::one() }
    }

    /// Plays the second action with certainty.
    pub fn pure_a2() -> Self {
        MixedStrategy {
            p: Rational::zero(),
        }
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    /// Probability of the second action.
    pub fn complement(&self) -> Rational {
        Rational::one() - &self.p
    }

    pub fn is_pure(&self) -> bool {
        self.p.is_zero() || self.p == Rational::one()
    }
}

impl fmt::Display for MixedStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// A joint strategy choice, one mixed strategy per player.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrategyPair {
    pub row: MixedStrategy,
    pub col: MixedStrategy,
}

impl StrategyPair {
    pub fn new(row: MixedStrategy, col: MixedStrategy) -> Self {
        StrategyPair { row, col }
    }
}

impl fmt::Display for StrategyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// All probabilities for the first action that maximize a player's outcome
/// against a fixed opponent strategy.
///
/// The outcome is affine in the player's own probability, so the optimal set
/// is one of the two endpoints or, under indifference, the whole interval.
/// No other shape can occur, which this enum makes unrepresentable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BestResponseSet {
    /// Only the second action is optimal: the point set {0}.
    PureA2,
    /// Only the first action is optimal: the point set {1}.
    PureA1,
    /// Indifference: every mixture in [0,1] is optimal.
    AnyMixture,
}

impl BestResponseSet {
    pub fn lo(&self) -> Rational {
        match self {
            BestResponseSet::PureA1 => Rational::one(),
            _ => Rational::zero(),
        }
    }

    pub fn hi(&self) -> Rational {
        match self {
            BestResponseSet::PureA2 => Rational::zero(),
            _ => Rational::one(),
        }
    }

    pub fn contains(&self, p: &Rational) -> bool {
        *p >= self.lo() && *p <= self.hi()
    }
}

impl fmt::Display for BestResponseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BestResponseSet::PureA2 => write!(f, "{{0}}"),
            BestResponseSet::PureA1 => write!(f, "{{1}}"),
            BestResponseSet::AnyMixture => write!(f, "[0,1]"),
        }
    }
}

/// Expected payoff to the row player under a joint strategy.
pub fn payoff(m: &PayoffMatrix, s: &StrategyPair) -> Rational {
    let p = s.row.p();
    let q = s.col.p();
    let p_bar = s.row.complement();
    let q_bar = s.col.complement();
    p * q * m.u11() + p * &q_bar * m.u12() + &p_bar * q * m.u21() + &p_bar * &q_bar * m.u22()
}

/// Column probability at which the row player is indifferent between rows:
/// `(u22 - u12) / delta`. `None` when delta is zero. Deliberately not clamped
/// to [0,1]; a threshold outside the interval means one row dominates.
pub fn threshold_col(m: &PayoffMatrix) -> Option<Rational> {
    let d = m.delta();
    (m.u22() - m.u12()).checked_div(&d).ok()
}

/// Row probability at which the column player is indifferent between columns:
/// `(u22 - u21) / delta`. `None` when delta is zero. Not clamped.
pub fn threshold_row(m: &PayoffMatrix) -> Option<Rational> {
    let d = m.delta();
    (m.u22() - m.u21()).checked_div(&d).ok()
}

/// The row player's best responses to a column strategy.
pub fn best_response_row(m: &PayoffMatrix, col: &MixedStrategy) -> BestResponseSet {
    let d = m.delta();
    match threshold_col(m) {
        // Row payoff difference (top minus bottom) is delta * q - (u22 - u12),
        // so the comparison of q against the threshold, oriented by the sign
        // of delta, decides which row wins.
        Some(t) => match (col.p().cmp(&t), d.is_positive()) {
            (Ordering::Equal, _) => BestResponseSet::AnyMixture,
            (Ordering::Less, true) | (Ordering::Greater, false) => BestResponseSet::PureA2,
            (Ordering::Greater, true) | (Ordering::Less, false) => BestResponseSet::PureA1,
        },
        // With delta zero the row difference is constant in q: u12 - u22.
        None => match m.u12().cmp(m.u22()) {
            Ordering::Less => BestResponseSet::PureA2,
            Ordering::Greater => BestResponseSet::PureA1,
            Ordering::Equal => BestResponseSet::AnyMixture,
        },
    }
}

/// The column player's best responses to a row strategy. The column player
/// minimizes, which mirrors the orientation of the row player's table.
pub fn best_response_col(m: &PayoffMatrix, row: &MixedStrategy) -> BestResponseSet {
    let d = m.delta();
    match threshold_row(m) {
        // Column payoff difference (left minus right) is delta * p - (u22 - u21);
        // the minimizer walks away from the larger payoff.
        Some(t) => match (row.p().cmp(&t), d.is_positive()) {
            (Ordering::Equal, _) => BestResponseSet::AnyMixture,
            (Ordering::Greater, true) | (Ordering::Less, false) => BestResponseSet::PureA2,
            (Ordering::Less, true) | (Ordering::Greater, false) => BestResponseSet::PureA1,
        },
        // With delta zero the column difference is constant in p: u21 - u22.
        None => match m.u21().cmp(m.u22()) {
            Ordering::Greater => BestResponseSet::PureA2,
            Ordering::Less => BestResponseSet::PureA1,
            Ordering::Equal => BestResponseSet::AnyMixture,
        },
    }
}

/// Nash test. The payoff is affine in each player's own probability, so no
/// mixed deviation can beat the better of the two pure deviations; checking
/// those four suffices exactly.
pub fn is_nash(m: &PayoffMatrix, s: &StrategyPair) -> bool {
    let current = payoff(m, s);
    let row_to = |row: MixedStrategy| payoff(m, &StrategyPair::new(row, s.col.clone()));
    let col_to = |col: MixedStrategy| payoff(m, &StrategyPair::new(s.row.clone(), col));
    current >= row_to(MixedStrategy::pure_a1())
        && current >= row_to(MixedStrategy::pure_a2())
        && current <= col_to(MixedStrategy::pure_a1())
        && current <= col_to(MixedStrategy::pure_a2())
}
