//! Exact classification of the full Nash equilibrium set.
//!
//! Every 2x2 zero-sum game falls into exactly one of eighteen cases, and in
//! each case the equilibrium set is a product of two closed subintervals of
//! [0,1] (each either a point, a sub-interval, or all of [0,1]) together
//! with a closed-form game value. [`classify`] dispatches on entry orderings
//! only; it never samples, rounds, or iterates, so its output is exact and
//! total over all rational matrices.
//!
//! The conditions fall into four families:
//!
//! * one unique fully mixed equilibrium (both players strictly mix),
//! * four unique pure equilibria (one per cell),
//! * five products where one player is pinned and the other is fully free,
//! * eight products where one player is pinned and the other optimizes
//!   anywhere up to (or beyond) an indifference threshold.
//!
//! Completeness and pairwise exclusivity of the conditions are relied on
//! here and independently rechecked elsewhere: [`classify_checked`] evaluates
//! every condition and reports an internal error unless exactly one fires,
//! and the oracle module recomputes the same sets from scratch by direct
//! payoff optimization.

use std::fmt;

use crate::game::{threshold_col, threshold_row, PayoffMatrix, StrategyPair};
use crate::numeric::Rational;

/// A closed subinterval of [0,1]: one player's slice of the equilibrium set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProbabilityInterval {
    lo: Rational,
    hi: Rational,
}

impl ProbabilityInterval {
    /// Requires `0 <= lo <= hi <= 1`. Every constructor call in this crate
    /// satisfies that by construction; a violation is an internal error, so
    /// this panics rather than returning a result.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(
            !lo.is_negative() && lo <= hi && hi <= Rational::one(),
            "invalid probability interval [{lo}, {hi}]"
        );
        ProbabilityInterval { lo, hi }
    }

    pub fn point(p: Rational) -> Self {
        ProbabilityInterval::new(p.clone(), p)
    }

    pub fn full() -> Self {
        ProbabilityInterval::new(Rational::zero(), Rational::one())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_full(&self) -> bool {
        self.lo.is_zero() && self.hi == Rational::one()
    }

    pub fn contains(&self, p: &Rational) -> bool {
        *p >= self.lo && *p <= self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * Rational::new(1, 2)
    }
}

/// Points render as `{p}`, proper intervals as `[lo,hi]`.
impl fmt::Display for ProbabilityInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// The eighteen mutually exclusive equilibrium-structure cases.
///
/// `UniquePure{rc}` names the pure equilibrium cell by the probability each
/// player puts on their first action: `UniquePure10` is (row plays first
/// action, column plays second). `Inf1*` cases pin one player and leave the
/// other completely free. `Inf2*` cases pin one player and bound the other
/// by an indifference threshold.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CaseLabel {
    UniqueMixed,
    UniquePure11,
    UniquePure10,
    UniquePure01,
    UniquePure00,
    Inf1RowTop,
    Inf1RowBottom,
    Inf1ColLeft,
    Inf1ColRight,
    Inf1Full,
    Inf2I,
    Inf2Ii,
    Inf2Iii,
    Inf2Iv,
    Inf2V,
    Inf2Vi,
    Inf2Vii,
    Inf2Viii,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 18] = [
        CaseLabel::UniqueMixed,
        CaseLabel::UniquePure11,
        CaseLabel::UniquePure10,
        CaseLabel::UniquePure01,
        CaseLabel::UniquePure00,
        CaseLabel::Inf1RowTop,
        CaseLabel::Inf1RowBottom,
        CaseLabel::Inf1ColLeft,
        CaseLabel::Inf1ColRight,
        CaseLabel::Inf1Full,
        CaseLabel::Inf2I,
        CaseLabel::Inf2Ii,
        CaseLabel::Inf2Iii,
        CaseLabel::Inf2Iv,
        CaseLabel::Inf2V,
        CaseLabel::Inf2Vi,
        CaseLabel::Inf2Vii,
        CaseLabel::Inf2Viii,
    ];

    /// Stable identifier used in reports and machine output.
    pub fn tag(&self) -> &'static str {
        match self {
            CaseLabel::UniqueMixed => "UniqueMixed",
            CaseLabel::UniquePure11 => "UniquePure11",
            CaseLabel::UniquePure10 => "UniquePure10",
            CaseLabel::UniquePure01 => "UniquePure01",
            CaseLabel::UniquePure00 => "UniquePure00",
            CaseLabel::Inf1RowTop => "Inf1RowTop",
            CaseLabel::Inf1RowBottom => "Inf1RowBottom",
            CaseLabel::Inf1ColLeft => "Inf1ColLeft",
            CaseLabel::Inf1ColRight => "Inf1ColRight",
            CaseLabel::Inf1Full => "Inf1Full",
            CaseLabel::Inf2I => "Inf2_i",
            CaseLabel::Inf2Ii => "Inf2_ii",
            CaseLabel::Inf2Iii => "Inf2_iii",
            CaseLabel::Inf2Iv => "Inf2_iv",
            CaseLabel::Inf2V => "Inf2_v",
            CaseLabel::Inf2Vi => "Inf2_vi",
            CaseLabel::Inf2Vii => "Inf2_vii",
            CaseLabel::Inf2Viii => "Inf2_viii",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How many equilibria the set contains. A product of two intervals over the
/// rationals is either a single point or infinite; no other cardinality can
/// arise, and the classifier treats any other outcome as an internal error.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cardinality {
    One,
    Infinite,
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::One => f.write_str("one"),
            Cardinality::Infinite => f.write_str("infinite"),
        }
    }
}

/// The complete equilibrium set of a game: the product of the two players'
/// optimal-probability intervals, with the game value and the case that
/// produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquilibriumSet {
    label: CaseLabel,
    condition: &'static str,
    row_set: ProbabilityInterval,
    col_set: ProbabilityInterval,
    value: Rational,
    cardinality: Cardinality,
}

impl EquilibriumSet {
    pub fn label(&self) -> CaseLabel {
        self.label
    }

    /// The exact entry-ordering condition that fired, as written in the case
    /// table. Cases reachable through two different orderings report the one
    /// that actually matched.
    pub fn condition(&self) -> &'static str {
        self.condition
    }

    pub fn row_set(&self) -> &ProbabilityInterval {
        &self.row_set
    }

    pub fn col_set(&self) -> &ProbabilityInterval {
        &self.col_set
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn cardinality(&self) -> Cardinality {
        self.cardinality
    }

    /// Membership in the product set.
    pub fn contains(&self, s: &StrategyPair) -> bool {
        self.row_set.contains(s.row.p()) && self.col_set.contains(s.col.p())
    }
}

/// Classification failed its own consistency requirements. Both variants are
/// unreachable if the case table is complete and pairwise exclusive; they
/// exist so the verification harness can surface a violation loudly instead
/// of trusting the table.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassificationError {
    #[error("no case condition matches {matrix}")]
    NoMatch { matrix: String },
    #[error("multiple case conditions match {matrix}: {labels:?}")]
    MultipleMatch {
        matrix: String,
        labels: Vec<CaseLabel>,
    },
}

struct CaseRule {
    label: CaseLabel,
    condition: &'static str,
    applies: fn(&PayoffMatrix) -> bool,
    build: fn(&PayoffMatrix) -> (ProbabilityInterval, ProbabilityInterval, Rational),
}

fn col_threshold(m: &PayoffMatrix) -> Rational {
    threshold_col(m).expect("delta is nonzero in every case that uses the column threshold")
}

fn row_threshold(m: &PayoffMatrix) -> Rational {
    threshold_row(m).expect("delta is nonzero in every case that uses the row threshold")
}

/// Case table in release dispatch order: the unique mixed case, the four
/// unique pure cases, the eight threshold-bounded families, then the five
/// one-player-pinned families (whose two alternative orderings are listed
/// as separate rows so the fired condition can be reported verbatim).
const RULES: &[CaseRule] = &[
    CaseRule {
        label: CaseLabel::UniqueMixed,
        condition: "(u_{1,1} - u_{1,2})(u_{2,2} - u_{2,1}) > 0 and (u_{1,1} - u_{2,1})(u_{2,2} - u_{1,2}) > 0",
        applies: mixed_assumption_holds,
        build: |m| {
            (
                ProbabilityInterval::point(row_threshold(m)),
                ProbabilityInterval::point(col_threshold(m)),
                mixed_value(m),
            )
        },
    },
    CaseRule {
        label: CaseLabel::UniquePure11,
        condition: "u_{1,2} > u_{1,1} > u_{2,1}",
        applies: |m| m.u12() > m.u11() && m.u11() > m.u21(),
        build: |m| {
            (
                ProbabilityInterval::point(Rational::one()),
                ProbabilityInterval::point(Rational::one()),
                m.u11().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::UniquePure10,
        condition: "u_{1,1} > u_{1,2} > u_{2,2}",
        applies: |m| m.u11() > m.u12() && m.u12() > m.u22(),
        build: |m| {
            (
                ProbabilityInterval::point(Rational::one()),
                ProbabilityInterval::point(Rational::zero()),
                m.u12().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::UniquePure01,
        condition: "u_{2,2} > u_{2,1} > u_{1,1}",
        applies: |m| m.u22() > m.u21() && m.u21() > m.u11(),
        build: |m| {
            (
                ProbabilityInterval::point(Rational::zero()),
                ProbabilityInterval::point(Rational::one()),
                m.u21().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::UniquePure00,
        condition: "u_{2,1} > u_{2,2} > u_{1,2}",
        applies: |m| m.u21() > m.u22() && m.u22() > m.u12(),
        build: |m| {
            (
                ProbabilityInterval::point(Rational::zero()),
                ProbabilityInterval::point(Rational::zero()),
                m.u22().clone(),
            )
        },
    },
    // Threshold-bounded families. Each ordering forces the threshold it uses
    // strictly inside (0,1), so the interval constructions cannot fail.
    CaseRule {
        label: CaseLabel::Inf2I,
        condition: "u_{1,1} > u_{2,1} = u_{2,2} > u_{1,2}",
        applies: |m| m.u11() > m.u21() && m.u21() == m.u22() && m.u22() > m.u12(),
        build: |m| {
            (
                ProbabilityInterval::point(Rational::zero()),
                ProbabilityInterval::new(Rational::zero(), col_threshold(m)),
                m.u21().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::Inf2Ii,
        condition: "u_{1,1} < u_{2,1} = u_{2,2} < u_{1,2}",
        applies: |m| m.u11() < m.u21() && m.u21() == m.u22() && m.u22() < m.u12(),
        build: |m| {
            (
                ProbabilityInterval::point(Rational::zero()),
                ProbabilityInterval::new(col_threshold(m), Rational::one()),
                m.u21().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::Inf2Iii,
        condition: "u_{2,2} > u_{1,2} = u_{1,1} > u_{2,1}",
        applies: |m| m.u22() > m.u12() && m.u12() == m.u11() && m.u11() > m.u21(),
        build: |m| {
            (
                ProbabilityInterval::point(Rational::one()),
                ProbabilityInterval::new(col_threshold(m), Rational::one()),
                m.u11().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::Inf2Iv,
        condition: "u_{2,2} < u_{1,2} = u_{1,1} < u_{2,1}",
        applies: |m| m.u22() < m.u12() && m.u12() == m.u11() && m.u11() < m.u21(),
        build: |m| {
            (
                ProbabilityInterval::point(Rational::one()),
                ProbabilityInterval::new(Rational::zero(), col_threshold(m)),
                m.u11().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::Inf2V,
        condition: "u_{1,1} > u_{1,2} = u_{2,2} > u_{2,1}",
        applies: |m| m.u11() > m.u12() && m.u12() == m.u22() && m.u22() > m.u21(),
        build: |m| {
            (
                ProbabilityInterval::new(row_threshold(m), Rational::one()),
                ProbabilityInterval::point(Rational::zero()),
                m.u12().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::Inf2Vi,
        condition: "u_{1,1} < u_{1,2} = u_{2,2} < u_{2,1}",
        applies: |m| m.u11() < m.u12() && m.u12() == m.u22() && m.u22() < m.u21(),
        build: |m| {
            (
                ProbabilityInterval::new(Rational::zero(), row_threshold(m)),
                ProbabilityInterval::point(Rational::zero()),
                m.u12().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::Inf2Vii,
        condition: "u_{2,2} > u_{2,1} = u_{1,1} > u_{1,2}",
        applies: |m| m.u22() > m.u21() && m.u21() == m.u11() && m.u11() > m.u12(),
        build: |m| {
            (
                ProbabilityInterval::new(Rational::zero(), row_threshold(m)),
                ProbabilityInterval::point(Rational::one()),
                m.u11().clone(),
            )
        },
    },
    CaseRule {
        label: CaseLabel::Inf2Viii,
        condition: "u_{2,2} < u_{2,1} = u_{1,1} < u_{1,2}",
        applies: |m| m.u22() < m.u21() && m.u21() == m.u11() && m.u11() < m.u12(),
        build: |m| {
            (
                ProbabilityInterval::new(row_threshold(m), Rational::one()),
                ProbabilityInterval::point(Rational::one()),
                m.u11().clone(),
            )
        },
    },
    // One-player-pinned families, two alternative orderings each: either the
    // free player's payoffs tie across the board, or the pinned player's
    // action weakly dominates with at least one strict corner.
    CaseRule {
        label: CaseLabel::Inf1RowTop,
        condition: "u_{1,1} = u_{1,2} > u_{2,1} = u_{2,2}",
        applies: |m| m.u11() == m.u12() && m.u21() == m.u22() && m.u11() > m.u21(),
        build: build_row_top,
    },
    CaseRule {
        label: CaseLabel::Inf1RowTop,
        condition: "u_{1,1} = u_{1,2} >= max{u_{2,1}, u_{2,2}} > min{u_{2,1}, u_{2,2}}",
        applies: |m| {
            m.u11() == m.u12()
                && m.u21() != m.u22()
                && *m.u11() >= m.u21().clone().max(m.u22().clone())
        },
        build: build_row_top,
    },
    CaseRule {
        label: CaseLabel::Inf1RowBottom,
        condition: "u_{2,1} = u_{2,2} > u_{1,1} = u_{1,2}",
        applies: |m| m.u21() == m.u22() && m.u11() == m.u12() && m.u21() > m.u11(),
        build: build_row_bottom,
    },
    CaseRule {
        label: CaseLabel::Inf1RowBottom,
        condition: "u_{2,1} = u_{2,2} >= max{u_{1,1}, u_{1,2}} > min{u_{1,1}, u_{1,2}}",
        applies: |m| {
            m.u21() == m.u22()
                && m.u11() != m.u12()
                && *m.u21() >= m.u11().clone().max(m.u12().clone())
        },
        build: build_row_bottom,
    },
    CaseRule {
        label: CaseLabel::Inf1ColLeft,
        condition: "u_{1,1} = u_{2,1} < u_{1,2} = u_{2,2}",
        applies: |m| m.u11() == m.u21() && m.u12() == m.u22() && m.u11() < m.u12(),
        build: build_col_left,
    },
    CaseRule {
        label: CaseLabel::Inf1ColLeft,
        condition: "u_{1,1} = u_{2,1} <= min{u_{1,2}, u_{2,2}} < max{u_{1,2}, u_{2,2}}",
        applies: |m| {
            m.u11() == m.u21()
                && m.u12() != m.u22()
                && *m.u11() <= m.u12().clone().min(m.u22().clone())
        },
        build: build_col_left,
    },
    CaseRule {
        label: CaseLabel::Inf1ColRight,
        condition: "u_{1,2} = u_{2,2} < u_{1,1} = u_{2,1}",
        applies: |m| m.u12() == m.u22() && m.u11() == m.u21() && m.u12() < m.u11(),
        build: build_col_right,
    },
    CaseRule {
        label: CaseLabel::Inf1ColRight,
        condition: "u_{1,2} = u_{2,2} <= min{u_{1,1}, u_{2,1}} < max{u_{1,1}, u_{2,1}}",
        applies: |m| {
            m.u12() == m.u22()
                && m.u11() != m.u21()
                && *m.u12() <= m.u11().clone().min(m.u21().clone())
        },
        build: build_col_right,
    },
    CaseRule {
        label: CaseLabel::Inf1Full,
        condition: "u_{1,1} = u_{1,2} = u_{2,1} = u_{2,2}",
        applies: |m| m.u11() == m.u12() && m.u12() == m.u21() && m.u21() == m.u22(),
        build: |m| {
            (
                ProbabilityInterval::full(),
                ProbabilityInterval::full(),
                m.u11().clone(),
            )
        },
    },
];

fn build_row_top(m: &PayoffMatrix) -> (ProbabilityInterval, ProbabilityInterval, Rational) {
    (
        ProbabilityInterval::point(Rational::one()),
        ProbabilityInterval::full(),
        m.u11().clone(),
    )
}

fn build_row_bottom(m: &PayoffMatrix) -> (ProbabilityInterval, ProbabilityInterval, Rational) {
    (
        ProbabilityInterval::point(Rational::zero()),
        ProbabilityInterval::full(),
        m.u21().clone(),
    )
}

fn build_col_left(m: &PayoffMatrix) -> (ProbabilityInterval, ProbabilityInterval, Rational) {
    (
        ProbabilityInterval::full(),
        ProbabilityInterval::point(Rational::one()),
        m.u11().clone(),
    )
}

fn build_col_right(m: &PayoffMatrix) -> (ProbabilityInterval, ProbabilityInterval, Rational) {
    (
        ProbabilityInterval::full(),
        ProbabilityInterval::point(Rational::zero()),
        m.u12().clone(),
    )
}

fn build_set(m: &PayoffMatrix, rule: &CaseRule) -> EquilibriumSet {
    let (row_set, col_set, value) = (rule.build)(m);
    let cardinality = if row_set.is_point() && col_set.is_point() {
        Cardinality::One
    } else {
        Cardinality::Infinite
    };
    EquilibriumSet {
        label: rule.label,
        condition: rule.condition,
        row_set,
        col_set,
        value,
        cardinality,
    }
}

/// Both players strictly mix in the unique equilibrium exactly when both
/// diagonals dominate consistently: `(u11 - u12)(u22 - u21) > 0` and
/// `(u11 - u21)(u22 - u12) > 0`.
pub fn mixed_assumption_holds(m: &PayoffMatrix) -> bool {
    ((m.u11() - m.u12()) * (m.u22() - m.u21())).is_positive()
        && ((m.u11() - m.u21()) * (m.u22() - m.u12())).is_positive()
}

/// Closed-form value in the mixed case: `(u11 u22 - u12 u21) / delta`.
/// Only meaningful when [`mixed_assumption_holds`]; delta is then nonzero.
fn mixed_value(m: &PayoffMatrix) -> Rational {
    (m.u11() * m.u22() - m.u12() * m.u21())
        .checked_div(&m.delta())
        .expect("delta is nonzero under the mixed assumption")
}

/// Classifies a game into its unique case and returns the complete
/// equilibrium set.
///
/// Dispatches through the case table in a fixed order and takes the first
/// match; under debug assertions it additionally re-runs the exhaustive
/// [`classify_checked`] evaluation and confirms both routes agree. The case
/// analysis is complete, so the panic on a fall-through is unreachable.
pub fn classify(m: &PayoffMatrix) -> EquilibriumSet {
    let rule = RULES
        .iter()
        .find(|rule| (rule.applies)(m))
        .unwrap_or_else(|| panic!("internal error: no case condition matches {m}"));
    let result = build_set(m, rule);
    debug_assert_eq!(
        classify_checked(m).as_ref(),
        Ok(&result),
        "internal error: first-match dispatch disagrees with exhaustive evaluation"
    );
    result
}

/// Evaluates every condition in the case table and requires exactly one to
/// fire. This is the paranoid route used by verification: it proves on each
/// concrete input that the table is exhaustive and pairwise exclusive,
/// instead of assuming it.
pub fn classify_checked(m: &PayoffMatrix) -> Result<EquilibriumSet, ClassificationError> {
    let fired: Vec<&CaseRule> = RULES.iter().filter(|rule| (rule.applies)(m)).collect();
    match fired.as_slice() {
        [rule] => Ok(build_set(m, rule)),
        [] => Err(ClassificationError::NoMatch {
            matrix: m.to_string(),
        }),
        many => Err(ClassificationError::MultipleMatch {
            matrix: m.to_string(),
            labels: many.iter().map(|rule| rule.label).collect(),
        }),
    }
}

/// Exact value of the game.
///
/// In the mixed case this is the closed form `(u11 u22 - u12 u21) / delta`;
/// otherwise the pure maximin and pure minimax coincide and either one is
/// the value. The coincidence always holds outside the mixed case; its
/// failure would mean broken arithmetic, so it is asserted rather than
/// returned as an error.
pub fn game_value(m: &PayoffMatrix) -> Rational {
    if mixed_assumption_holds(m) {
        mixed_value(m)
    } else {
        let (maximin, minimax) = pure_bounds(m);
        assert_eq!(
            maximin, minimax,
            "internal error: pure maximin and minimax differ outside the mixed case for {m}"
        );
        minimax
    }
}

/// Pure-strategy security levels: `(maximin, minimax)` where
/// `maximin = max{min{u11, u12}, min{u21, u22}}` and
/// `minimax = min{max{u11, u21}, max{u12, u22}}`.
///
/// Always `maximin <= minimax`; they bracket the game value, strictly so in
/// the mixed case and with equality otherwise.
pub fn pure_bounds(m: &PayoffMatrix) -> (Rational, Rational) {
    let row_min_top = m.u11().clone().min(m.u12().clone());
    let row_min_bottom = m.u21().clone().min(m.u22().clone());
    let col_max_left = m.u11().clone().max(m.u21().clone());
    let col_max_right = m.u12().clone().max(m.u22().clone());
    (
        row_min_top.max(row_min_bottom),
        col_max_left.min(col_max_right),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{is_nash, MixedStrategy};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn point(n: i64, d: i64) -> ProbabilityInterval {
        ProbabilityInterval::point(rat(n, d))
    }

    #[test]
    fn interval_geometry() {
        let iv = ProbabilityInterval::new(rat(1, 4), rat(3, 4));
        assert!(!iv.is_point());
        assert!(!iv.is_full());
        assert!(iv.contains(&rat(1, 2)));
        assert!(!iv.contains(&rat(1, 8)));
        assert_eq!(iv.midpoint(), rat(1, 2));
        assert_eq!(iv.to_string(), "[1/4,3/4]");
        assert_eq!(point(1, 2).to_string(), "{1/2}");
        assert!(ProbabilityInterval::full().is_full());
    }

    #[test]
    #[should_panic(expected = "invalid probability interval")]
    fn interval_rejects_reversed_bounds() {
        ProbabilityInterval::new(rat(3, 4), rat(1, 4));
    }

    #[test]
    #[should_panic(expected = "invalid probability interval")]
    fn interval_rejects_values_above_one() {
        ProbabilityInterval::new(rat(1, 2), rat(3, 2));
    }

    #[test]
    fn classifies_unique_mixed() {
        let eq = classify(&PayoffMatrix::from_ints(1, -1, -1, 1));
        assert_eq!(eq.label(), CaseLabel::UniqueMixed);
        assert_eq!(eq.row_set(), &point(1, 2));
        assert_eq!(eq.col_set(), &point(1, 2));
        assert_eq!(eq.value(), &Rational::zero());
        assert_eq!(eq.cardinality(), Cardinality::One);
    }

    #[test]
    fn classifies_unique_pure() {
        let eq = classify(&PayoffMatrix::from_ints(2, 3, 1, 0));
        assert_eq!(eq.label(), CaseLabel::UniquePure11);
        assert_eq!(eq.condition(), "u_{1,2} > u_{1,1} > u_{2,1}");
        assert_eq!(eq.row_set(), &point(1, 1));
        assert_eq!(eq.col_set(), &point(1, 1));
        assert_eq!(eq.value(), &rat(2, 1));

        assert_eq!(
            classify(&PayoffMatrix::from_ints(1, 0, 0, -1)).label(),
            CaseLabel::UniquePure10
        );
        assert_eq!(
            classify(&PayoffMatrix::from_ints(-1, 0, 0, 1)).label(),
            CaseLabel::UniquePure01
        );
        assert_eq!(
            classify(&PayoffMatrix::from_ints(0, -1, 1, 0)).label(),
            CaseLabel::UniquePure00
        );
    }

    #[test]
    fn classifies_threshold_bounded_family() {
        let eq = classify(&PayoffMatrix::from_ints(2, 0, 1, 1));
        assert_eq!(eq.label(), CaseLabel::Inf2I);
        assert_eq!(eq.row_set(), &point(0, 1));
        assert_eq!(
            eq.col_set(),
            &ProbabilityInterval::new(Rational::zero(), rat(1, 2))
        );
        assert_eq!(eq.value(), &Rational::one());
        assert_eq!(eq.cardinality(), Cardinality::Infinite);

        // The bound is an interior point here, not an endpoint.
        let eq = classify(&PayoffMatrix::from_ints(0, 0, 1, -1));
        assert_eq!(eq.label(), CaseLabel::Inf2Iv);
        assert_eq!(
            eq.col_set(),
            &ProbabilityInterval::new(Rational::zero(), rat(1, 2))
        );
        assert_eq!(eq.value(), &Rational::zero());
    }

    #[test]
    fn classifies_pinned_player_family() {
        let eq = classify(&PayoffMatrix::from_ints(0, 0, 0, 0));
        assert_eq!(eq.label(), CaseLabel::Inf1Full);
        assert_eq!(eq.row_set(), &ProbabilityInterval::full());
        assert_eq!(eq.col_set(), &ProbabilityInterval::full());
        assert_eq!(eq.value(), &Rational::zero());

        let eq = classify(&PayoffMatrix::from_ints(1, 1, 0, 0));
        assert_eq!(eq.label(), CaseLabel::Inf1RowTop);
        assert_eq!(eq.condition(), "u_{1,1} = u_{1,2} > u_{2,1} = u_{2,2}");
        assert_eq!(eq.row_set(), &point(1, 1));
        assert_eq!(eq.col_set(), &ProbabilityInterval::full());

        // Same label through the weak-dominance ordering; the report shows it.
        let eq = classify(&PayoffMatrix::from_ints(1, 1, 0, 1));
        assert_eq!(eq.label(), CaseLabel::Inf1RowTop);
        assert_eq!(
            eq.condition(),
            "u_{1,1} = u_{1,2} >= max{u_{2,1}, u_{2,2}} > min{u_{2,1}, u_{2,2}}"
        );

        assert_eq!(
            classify(&PayoffMatrix::from_ints(0, 0, 1, 1)).label(),
            CaseLabel::Inf1RowBottom
        );
        assert_eq!(
            classify(&PayoffMatrix::from_ints(0, 1, 0, 1)).label(),
            CaseLabel::Inf1ColLeft
        );
        assert_eq!(
            classify(&PayoffMatrix::from_ints(1, 0, 1, 0)).label(),
            CaseLabel::Inf1ColRight
        );
        // Weak-dominance orderings of the column families.
        assert_eq!(
            classify(&PayoffMatrix::from_ints(0, 1, 0, 0)).label(),
            CaseLabel::Inf1ColLeft
        );
        assert_eq!(
            classify(&PayoffMatrix::from_ints(1, 0, 0, 0)).label(),
            CaseLabel::Inf1ColRight
        );
    }

    #[test]
    fn checked_route_agrees_with_dispatch() {
        for m in [
            PayoffMatrix::from_ints(1, -1, -1, 1),
            PayoffMatrix::from_ints(2, 3, 1, 0),
            PayoffMatrix::from_ints(2, 0, 1, 1),
            PayoffMatrix::from_ints(0, 0, 0, 0),
            PayoffMatrix::from_ints(1, 1, 2, 0),
        ] {
            assert_eq!(classify_checked(&m), Ok(classify(&m)));
        }
    }

    #[test]
    fn game_value_examples() {
        assert_eq!(
            game_value(&PayoffMatrix::from_ints(1, -1, -1, 1)),
            rat(0, 1)
        );
        assert_eq!(game_value(&PayoffMatrix::from_ints(2, 3, 1, 0)), rat(2, 1));
        assert_eq!(game_value(&PayoffMatrix::from_ints(2, 0, 1, 1)), rat(1, 1));
        assert_eq!(game_value(&PayoffMatrix::from_ints(0, 0, 0, 0)), rat(0, 1));
        // Mixed closed form with a fractional answer.
        let m = PayoffMatrix::from_ints(3, -1, -2, 2);
        assert_eq!(game_value(&m), rat(1, 2));
    }

    #[test]
    fn pure_bounds_bracket_the_value() {
        assert_eq!(
            pure_bounds(&PayoffMatrix::from_ints(1, -1, -1, 1)),
            (rat(-1, 1), rat(1, 1))
        );
        assert_eq!(
            pure_bounds(&PayoffMatrix::from_ints(2, 3, 1, 0)),
            (rat(2, 1), rat(2, 1))
        );
    }

    #[test]
    fn equilibrium_members_pass_the_nash_test() {
        let eq = classify(&PayoffMatrix::from_ints(2, 0, 1, 1));
        let m = PayoffMatrix::from_ints(2, 0, 1, 1);
        for q in [rat(0, 1), rat(1, 4), rat(1, 2)] {
            let s = StrategyPair::new(
                MixedStrategy::new(eq.row_set().lo().clone()).unwrap(),
                MixedStrategy::new(q.clone()).unwrap(),
            );
            assert!(eq.contains(&s));
            assert!(is_nash(&m, &s));
        }
        let outside = StrategyPair::new(
            MixedStrategy::new(rat(0, 1)).unwrap(),
            MixedStrategy::new(rat(3, 4)).unwrap(),
        );
        assert!(!eq.contains(&outside));
        assert!(!is_nash(&m, &outside));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn any_rational() -> impl Strategy<Value = Rational> {
            (-8i64..=8, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
        }

        fn any_matrix() -> impl Strategy<Value = PayoffMatrix> {
            (
                any_rational(),
                any_rational(),
                any_rational(),
                any_rational(),
            )
                .prop_map(|(a, b, c, d)| PayoffMatrix::new(a, b, c, d))
        }

        proptest! {
            // Exactly one condition fires for every matrix.
            #[test]
            fn classification_is_total_and_unambiguous(m in any_matrix()) {
                prop_assert!(classify_checked(&m).is_ok());
            }

            // Value and sets transform covariantly under positive affine maps.
            #[test]
            fn classification_is_affine_covariant(
                m in any_matrix(),
                scale in 1i64..=4,
                shift in -4i64..=4,
            ) {
                let a = Rational::from_int(scale);
                let c = Rational::from_int(shift);
                let t = PayoffMatrix::new(
                    &a * m.u11() + &c,
                    &a * m.u12() + &c,
                    &a * m.u21() + &c,
                    &a * m.u22() + &c,
                );
                let eq = classify(&m);
                let eq_t = classify(&t);
                prop_assert_eq!(eq_t.label(), eq.label());
                prop_assert_eq!(eq_t.row_set(), eq.row_set());
                prop_assert_eq!(eq_t.col_set(), eq.col_set());
                prop_assert_eq!(eq_t.value().clone(), &a * eq.value() + &c);
            }

            // Pure security levels always bracket the value; strictly in the
            // mixed case, with equality otherwise.
            #[test]
            fn bounds_sandwich_the_value(m in any_matrix()) {
                let (maximin, minimax) = pure_bounds(&m);
                let v = game_value(&m);
                prop_assert!(maximin <= minimax);
                if mixed_assumption_holds(&m) {
                    prop_assert!(maximin < v && v < minimax);
                } else {
                    prop_assert!(maximin == v && v == minimax);
                }
            }

            // Corners and midpoints of the product pass the Nash test, and
            // the classifier's value is the payoff at every such point.
            #[test]
            fn product_members_are_nash(m in any_matrix()) {
                let eq = classify(&m);
                let rows = [eq.row_set().lo().clone(), eq.row_set().midpoint(), eq.row_set().hi().clone()];
                let cols = [eq.col_set().lo().clone(), eq.col_set().midpoint(), eq.col_set().hi().clone()];
                for r in &rows {
                    for c in &cols {
                        let s = StrategyPair::new(
                            MixedStrategy::new(r.clone()).unwrap(),
                            MixedStrategy::new(c.clone()).unwrap(),
                        );
                        prop_assert!(is_nash(&m, &s));
                        prop_assert_eq!(&crate::game::payoff(&m, &s), eq.value());
                    }
                }
            }

            // In the mixed case each player's equilibrium point makes the
            // opponent exactly indifferent.
            #[test]
            fn mixed_equilibrium_equalizes(m in any_matrix()) {
                prop_assume!(mixed_assumption_holds(&m));
                let eq = classify(&m);
                let row = MixedStrategy::new(eq.row_set().lo().clone()).unwrap();
                let col = MixedStrategy::new(eq.col_set().lo().clone()).unwrap();
                let vs_col = |r: MixedStrategy| crate::game::payoff(&m, &StrategyPair::new(r, col.clone()));
                let vs_row = |c: MixedStrategy| crate::game::payoff(&m, &StrategyPair::new(row.clone(), c));
                prop_assert_eq!(vs_col(MixedStrategy::pure_a1()), vs_col(MixedStrategy::pure_a2()));
                prop_assert_eq!(vs_row(MixedStrategy::pure_a1()), vs_row(MixedStrategy::pure_a2()));
            }
        }
    }
}
