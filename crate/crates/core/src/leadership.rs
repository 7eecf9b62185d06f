//! Commitment analysis: what happens when one player moves first.
//!
//! If the column player publicly commits to mixing probability `beta`, the
//! row player simply takes whichever row pays more, so the leader's exposure
//! is the upper envelope of two affine functions of `beta`. That envelope is
//! convex and piecewise linear with at most one interior breakpoint, and its
//! minimum over [0,1] equals the simultaneous-play game value for every
//! matrix: committing first concedes nothing, it only removes the leader's
//! slack elsewhere.
//!
//! The symmetric question (row commits first) is answered on the dual game,
//! where the roles swap; see [`row_leader_payoff`] and [`row_leader_optimum`].

use std::cmp::Ordering;
use std::fmt;

use crate::equilibrium::{mixed_assumption_holds, ProbabilityInterval};
use crate::game::{MixedStrategy, PayoffMatrix};
use crate::numeric::Rational;

/// An affine piece `beta -> slope * beta + intercept` over a subinterval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSegment {
    slope: Rational,
    intercept: Rational,
    domain: ProbabilityInterval,
}

impl LinearSegment {
    pub fn slope(&self) -> &Rational {
        &self.slope
    }

    pub fn intercept(&self) -> &Rational {
        &self.intercept
    }

    pub fn domain(&self) -> &ProbabilityInterval {
        &self.domain
    }

    fn at(&self, beta: &Rational) -> Rational {
        &self.slope * beta + &self.intercept
    }
}

impl fmt::Display for LinearSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]: slope {}, intercept {}",
            self.domain.lo(),
            self.domain.hi(),
            self.slope,
            self.intercept
        )
    }
}

/// The follower-value function as an explicit piecewise-linear curve.
///
/// Invariants: the segment domains tile [0,1] in order, adjacent segments
/// agree at the shared endpoint, and the curve everywhere equals the upper
/// envelope of the two row-payoff lines. One or two segments, never more.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeaderPayoffCurve {
    segments: Vec<LinearSegment>,
    breakpoints: Vec<Rational>,
}

impl LeaderPayoffCurve {
    pub fn segments(&self) -> &[LinearSegment] {
        &self.segments
    }

    /// Interior betas where the active line changes. Empty when one line
    /// dominates throughout.
    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    /// Evaluates the curve through its segments.
    pub fn at(&self, beta: &Rational) -> Rational {
        self.segments
            .iter()
            .find(|seg| seg.domain().contains(beta))
            .expect("segments tile [0,1]")
            .at(beta)
    }
}

/// Commitment-analysis errors. Both report misuse of the monotonicity
/// contract, which is only meaningful in the unique-mixed case.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LeadershipError {
    #[error("the unique-mixed-equilibrium condition does not hold")]
    MixedAssumptionViolated,
    #[error("monotonicity comparison requires strictly increasing probabilities")]
    PointsNotOrdered,
}

fn row_lines(m: &PayoffMatrix) -> (LineCoeffs, LineCoeffs) {
    // Row payoff as a function of the leader's beta, one line per row.
    let top = LineCoeffs {
        slope: m.u11() - m.u12(),
        intercept: m.u12().clone(),
    };
    let bottom = LineCoeffs {
        slope: m.u21() - m.u22(),
        intercept: m.u22().clone(),
    };
    (top, bottom)
}

struct LineCoeffs {
    slope: Rational,
    intercept: Rational,
}

impl LineCoeffs {
    fn at(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }

    fn segment(&self, lo: Rational, hi: Rational) -> LinearSegment {
        LinearSegment {
            slope: self.slope.clone(),
            intercept: self.intercept.clone(),
            domain: ProbabilityInterval::new(lo, hi),
        }
    }
}

/// The leader's exposure at commitment `beta`: the follower takes the better
/// row, so this is the pointwise maximum of the two row payoffs.
pub fn leader_payoff(m: &PayoffMatrix, col: &MixedStrategy) -> Rational {
    let (top, bottom) = row_lines(m);
    top.at(col.p()).max(bottom.at(col.p()))
}

/// Builds the follower-value curve explicitly.
pub fn leader_curve(m: &PayoffMatrix) -> LeaderPayoffCurve {
    let (top, bottom) = row_lines(m);
    let crossing = if top.slope == bottom.slope {
        None
    } else {
        let x = (&bottom.intercept - &top.intercept)
            .checked_div(&(&top.slope - &bottom.slope))
            .expect("slopes differ");
        (x.is_positive() && x < Rational::one()).then_some(x)
    };
    match crossing {
        Some(x) => {
            // Two pieces; the line that is higher at beta = 0 owns the left.
            let (left, right) = if top.intercept > bottom.intercept {
                (top, bottom)
            } else {
                (bottom, top)
            };
            LeaderPayoffCurve {
                segments: vec![
                    left.segment(Rational::zero(), x.clone()),
                    right.segment(x.clone(), Rational::one()),
                ],
                breakpoints: vec![x],
            }
        }
        None => {
            // One line dominates on all of [0,1]; compare at the midpoint,
            // where non-crossing lines cannot tie unless they are identical.
            let half = Rational::new(1, 2);
            let winner = if top.at(&half) >= bottom.at(&half) {
                top
            } else {
                bottom
            };
            LeaderPayoffCurve {
                segments: vec![winner.segment(Rational::zero(), Rational::one())],
                breakpoints: vec![],
            }
        }
    }
}

/// Minimizes the follower-value curve: the leader's best commitments and the
/// exposure they guarantee. The curve is convex piecewise linear, so the
/// minimizer set is a closed interval delimited by segment endpoints, and
/// the minimum value always equals the game value.
pub fn leader_optimum(m: &PayoffMatrix) -> (ProbabilityInterval, Rational) {
    let curve = leader_curve(m);
    let mut candidates = vec![Rational::zero()];
    candidates.extend(curve.breakpoints().iter().cloned());
    candidates.push(Rational::one());
    let best = candidates
        .iter()
        .map(|beta| curve.at(beta))
        .min()
        .expect("candidate list is nonempty");
    let achieving: Vec<&Rational> = candidates
        .iter()
        .filter(|beta| curve.at(beta) == best)
        .collect();
    // Convexity makes the achieving candidates contiguous, and a flat bottom
    // segment contributes both its endpoints, so first-to-last is the set.
    let set = ProbabilityInterval::new(
        (*achieving.first().expect("minimum is achieved")).clone(),
        (*achieving.last().expect("minimum is achieved")).clone(),
    );
    (set, best)
}

/// Compares the follower value at two commitments `left.p < right.p`.
///
/// Meaningful in the unique-mixed case, where the curve strictly decreases
/// up to the equilibrium commitment and strictly increases after it:
/// pairs on the left side return `Greater`, pairs on the right side return
/// `Less`. A pair straddling the breakpoint is compared as-is.
pub fn monotonicity_check(
    m: &PayoffMatrix,
    left: &MixedStrategy,
    right: &MixedStrategy,
) -> Result<Ordering, LeadershipError> {
    if !mixed_assumption_holds(m) {
        return Err(LeadershipError::MixedAssumptionViolated);
    }
    if left.p() >= right.p() {
        return Err(LeadershipError::PointsNotOrdered);
    }
    Ok(leader_payoff(m, left).cmp(&leader_payoff(m, right)))
}

/// The row player's guaranteed payoff when committing to `row` first: the
/// column player best-responds by minimizing, which is the dual game's
/// follower problem with the sign flipped.
pub fn row_leader_payoff(m: &PayoffMatrix, row: &MixedStrategy) -> Rational {
    -leader_payoff(&m.dual(), row)
}

/// The row player's best commitments and the payoff they guarantee; the
/// value again equals the game value.
pub fn row_leader_optimum(m: &PayoffMatrix) -> (ProbabilityInterval, Rational) {
    let (set, value) = leader_optimum(&m.dual());
    (set, -value)
}
