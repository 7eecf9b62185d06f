//! Independent equilibrium computation by direct payoff optimization.
//!
//! Nothing here consults the case table or the indifference thresholds that
//! drive the classifier (the one exception is [`support_enumeration`], whose
//! defining method is solving the indifference equations). The maximin
//! route optimizes piecewise-linear security levels from scratch, so its
//! agreement with the classifier on value and optimal sets is evidence, not
//! circularity. Keeping the routes separate is the point; do not "simplify"
//! one into calling the other.

use crate::equilibrium::{classify, ProbabilityInterval};
use crate::game::{
    is_nash, threshold_col, threshold_row, MixedStrategy, PayoffMatrix, StrategyPair,
};
use crate::numeric::Rational;

/// Which computation produced an oracle result.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleMethod {
    /// Exact piecewise-linear maximin/minimax optimization.
    MaximinExact,
    /// Exhaustive scan of a uniform strategy grid.
    GridEpsilon,
    /// Support enumeration through the indifference equations.
    SupportEnum,
}

/// Result of the independent route, ready to confront the classifier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleReport {
    pub method: OracleMethod,
    pub value: Rational,
    pub row_opt_set: ProbabilityInterval,
    pub col_opt_set: ProbabilityInterval,
    /// True when value and both optimal sets equal the classifier's output
    /// exactly. The oracle's own numbers above are computed first and never
    /// depend on the classifier.
    pub agrees_with_classifier: bool,
}

/// Affine function `x -> slope * x + intercept` on [0,1].
#[derive(Clone)]
struct Affine {
    slope: Rational,
    intercept: Rational,
}

impl Affine {
    fn at(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }

    fn neg(&self) -> Affine {
        Affine {
            slope: -&self.slope,
            intercept: -&self.intercept,
        }
    }
}

/// Maximizes `min(f, g)` over [0,1] exactly.
///
/// The objective is concave piecewise linear, so the maximum is attained at
/// an endpoint or at the crossing of the two lines, and the full argmax is
/// the interval spanned by the achieving candidates (a flat top contributes
/// both endpoints of its piece).
fn maximize_lower_envelope(f: &Affine, g: &Affine) -> (Rational, ProbabilityInterval) {
    let objective = |x: &Rational| f.at(x).min(g.at(x));
    let mut candidates = vec![Rational::zero(), Rational::one()];
    if f.slope != g.slope {
        let crossing = (&g.intercept - &f.intercept)
            .checked_div(&(&f.slope - &g.slope))
            .expect("slopes differ");
        if crossing.is_positive() && crossing < Rational::one() {
            candidates.insert(1, crossing);
        }
    }
    let best = candidates
        .iter()
        .map(objective)
        .max()
        .expect("candidate list is nonempty");
    let achieving: Vec<&Rational> = candidates.iter().filter(|x| objective(x) == best).collect();
    let set = ProbabilityInterval::new(
        (*achieving.first().expect("maximum is achieved")).clone(),
        (*achieving.last().expect("maximum is achieved")).clone(),
    );
    (best, set)
}

/// Minimizes `max(f, g)` over [0,1] exactly, by negating and reusing the
/// concave case.
fn minimize_upper_envelope(f: &Affine, g: &Affine) -> (Rational, ProbabilityInterval) {
    let (value, set) = maximize_lower_envelope(&f.neg(), &g.neg());
    (-value, set)
}

/// Computes the game's value and both optimal-strategy sets from security
/// levels alone.
///
/// The row player's guaranteed payoff against each pure column is affine in
/// the row probability; maximizing the lower envelope gives the maximin
/// value and the exact set of maximizers. The column side is the dual
/// minimization. The two optimal values must coincide, and the equilibrium
/// set of a zero-sum game is exactly the product of the two optimal sets.
pub fn maximin_oracle(m: &PayoffMatrix) -> OracleReport {
    // Row payoff against each pure column, as functions of the row probability.
    let vs_col_a1 = Affine {
        slope: m.u11() - m.u21(),
        intercept: m.u21().clone(),
    };
    let vs_col_a2 = Affine {
        slope: m.u12() - m.u22(),
        intercept: m.u22().clone(),
    };
    let (maximin, row_opt_set) = maximize_lower_envelope(&vs_col_a1, &vs_col_a2);

    // Row payoff against each pure row, as functions of the column probability.
    let vs_row_a1 = Affine {
        slope: m.u11() - m.u12(),
        intercept: m.u12().clone(),
    };
    let vs_row_a2 = Affine {
        slope: m.u21() - m.u22(),
        intercept: m.u22().clone(),
    };
    let (minimax, col_opt_set) = minimize_upper_envelope(&vs_row_a1, &vs_row_a2);

    assert_eq!(
        maximin, minimax,
        "internal error: maximin and minimax differ for {m}"
    );
    // At most one side may be a proper sub-interval strictly between a point
    // and [0,1]; both at once never occurs.
    debug_assert!(
        !(proper_subinterval(&row_opt_set) && proper_subinterval(&col_opt_set)),
        "internal error: both optimal sets are proper sub-intervals for {m}"
    );

    let classified = classify(m);
    let agrees_with_classifier = *classified.value() == maximin
        && *classified.row_set() == row_opt_set
        && *classified.col_set() == col_opt_set;
    OracleReport {
        method: OracleMethod::MaximinExact,
        value: maximin,
        row_opt_set,
        col_opt_set,
        agrees_with_classifier,
    }
}

fn proper_subinterval(set: &ProbabilityInterval) -> bool {
    !set.is_point() && !set.is_full()
}

/// Scans the uniform `(resolution + 1)^2` strategy grid and keeps the pairs
/// where neither player can gain more than `eps` by any deviation.
///
/// With `eps = 0` this is the exact Nash predicate restricted to the grid:
/// the payoff is affine in each player's own probability, so the best
/// deviation is pure and the gains below are exact. Pairs are returned in
/// row-major order (row probability ascending, then column probability).
pub fn grid_epsilon_nash(m: &PayoffMatrix, resolution: u32, eps: &Rational) -> Vec<StrategyPair> {
    assert!(resolution >= 1, "grid resolution must be at least 1");
    assert!(!eps.is_negative(), "eps must be nonnegative");
    let steps: Vec<Rational> = (0..=resolution)
        .map(|k| Rational::new(i64::from(k), i64::from(resolution)))
        .collect();
    // Row deviation gain at (p, q) is max(0, a) - p * a where a is the payoff
    // advantage of the top row at q; column gain mirrors it with the payoff
    // advantage c of the left column at p. Both are affine per axis, so they
    // are precomputed per grid line.
    let top_row_advantage: Vec<Rational> = steps
        .iter()
        .map(|q| (m.u11() - m.u21()) * q + (m.u12() - m.u22()) * (Rational::one() - q))
        .collect();
    let left_col_advantage: Vec<Rational> = steps
        .iter()
        .map(|p| (m.u11() - m.u12()) * p + (m.u21() - m.u22()) * (Rational::one() - p))
        .collect();
    let mut found = Vec::new();
    for (i, p) in steps.iter().enumerate() {
        let c = &left_col_advantage[i];
        for (j, q) in steps.iter().enumerate() {
            let a = &top_row_advantage[j];
            let row_gain = if a.is_negative() {
                -(p * a)
            } else {
                (Rational::one() - p) * a
            };
            if row_gain > *eps {
                continue;
            }
            // The column player minimizes, so its gain flips the sign logic.
            let col_gain = if c.is_negative() {
                (q - Rational::one()) * c
            } else {
                q * c
            };
            if col_gain > *eps {
                continue;
            }
            found.push(StrategyPair::new(
                MixedStrategy::new(p.clone()).expect("grid point is a probability"),
                MixedStrategy::new(q.clone()).expect("grid point is a probability"),
            ));
        }
    }
    found
}

/// [`grid_epsilon_nash`] with the default `eps = 0`.
pub fn grid_exact_nash(m: &PayoffMatrix, resolution: u32) -> Vec<StrategyPair> {
    grid_epsilon_nash(m, resolution, &Rational::zero())
}

/// Enumerates candidate equilibria by support: the four pure profiles plus
/// the interior candidate obtained by solving both players' indifference
/// equations (when delta is nonzero and both solutions are strictly inside
/// (0,1)), each filtered through the Nash test.
///
/// Returns representative points, not complete sets; every returned point
/// lies in the classified equilibrium product. Pure profiles come first in
/// lexicographic `(row, col)` order, the interior candidate last.
pub fn support_enumeration(m: &PayoffMatrix) -> Vec<StrategyPair> {
    let mut found = Vec::new();
    let pure = [MixedStrategy::pure_a2(), MixedStrategy::pure_a1()];
    for row in &pure {
        for col in &pure {
            let s = StrategyPair::new(row.clone(), col.clone());
            if is_nash(m, &s) {
                found.push(s);
            }
        }
    }
    if let (Some(p), Some(q)) = (threshold_row(m), threshold_col(m)) {
        let interior = |x: &Rational| x.is_positive() && *x < Rational::one();
        if interior(&p) && interior(&q) {
            let s = StrategyPair::new(
                MixedStrategy::new(p).expect("interior candidate is a probability"),
                MixedStrategy::new(q).expect("interior candidate is a probability"),
            );
            if is_nash(m, &s) {
                found.push(s);
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::{game_value, CaseLabel};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn pair(rn: i64, rd: i64, cn: i64, cd: i64) -> StrategyPair {
        StrategyPair::new(
            MixedStrategy::new(rat(rn, rd)).unwrap(),
            MixedStrategy::new(rat(cn, cd)).unwrap(),
        )
    }

    #[test]
    fn maximin_on_matching_pennies() {
        let report = maximin_oracle(&PayoffMatrix::from_ints(1, -1, -1, 1));
        assert_eq!(report.method, OracleMethod::MaximinExact);
        assert_eq!(report.value, Rational::zero());
        assert_eq!(report.row_opt_set, ProbabilityInterval::point(rat(1, 2)));
        assert_eq!(report.col_opt_set, ProbabilityInterval::point(rat(1, 2)));
        assert!(report.agrees_with_classifier);
    }

    #[test]
    fn maximin_on_dominance_solvable_game() {
        let report = maximin_oracle(&PayoffMatrix::from_ints(2, 3, 1, 0));
        assert_eq!(report.value, rat(2, 1));
        assert_eq!(
            report.row_opt_set,
            ProbabilityInterval::point(Rational::one())
        );
        assert_eq!(
            report.col_opt_set,
            ProbabilityInterval::point(Rational::one())
        );
        assert!(report.agrees_with_classifier);
    }

    #[test]
    fn maximin_recovers_interval_sets() {
        let report = maximin_oracle(&PayoffMatrix::from_ints(2, 0, 1, 1));
        assert_eq!(report.value, Rational::one());
        assert_eq!(
            report.row_opt_set,
            ProbabilityInterval::point(Rational::zero())
        );
        assert_eq!(
            report.col_opt_set,
            ProbabilityInterval::new(Rational::zero(), rat(1, 2))
        );
        assert!(report.agrees_with_classifier);

        let report = maximin_oracle(&PayoffMatrix::from_ints(0, 0, 0, 0));
        assert!(report.row_opt_set.is_full());
        assert!(report.col_opt_set.is_full());
        assert!(report.agrees_with_classifier);
    }

    #[test]
    fn grid_scan_examples() {
        let matching = PayoffMatrix::from_ints(1, -1, -1, 1);
        assert_eq!(grid_exact_nash(&matching, 2), vec![pair(1, 2, 1, 2)]);
        // An odd grid misses the lone equilibrium entirely.
        assert_eq!(grid_exact_nash(&matching, 3), vec![]);

        let m = PayoffMatrix::from_ints(2, 0, 1, 1);
        assert_eq!(
            grid_exact_nash(&m, 4),
            vec![pair(0, 1, 0, 1), pair(0, 1, 1, 4), pair(0, 1, 1, 2)]
        );
    }

    #[test]
    fn grid_tolerance_widens_the_set() {
        let matching = PayoffMatrix::from_ints(1, -1, -1, 1);
        // Deviation gains on the 3x3 grid are 0 at the center, 1 at the edge
        // midpoints, and 2 at the corners; eps slices those tiers exactly.
        assert_eq!(grid_epsilon_nash(&matching, 2, &rat(2, 1)).len(), 9);
        assert_eq!(grid_epsilon_nash(&matching, 2, &rat(1, 1)).len(), 5);
        assert_eq!(grid_epsilon_nash(&matching, 2, &rat(99, 100)).len(), 1);
    }

    #[test]
    fn support_enumeration_examples() {
        let matching = PayoffMatrix::from_ints(1, -1, -1, 1);
        assert_eq!(support_enumeration(&matching), vec![pair(1, 2, 1, 2)]);

        assert_eq!(
            support_enumeration(&PayoffMatrix::from_ints(2, 3, 1, 0)),
            vec![pair(1, 1, 1, 1)]
        );

        // Every pure profile of the all-ties game is an equilibrium; there is
        // no interior candidate because delta is zero.
        assert_eq!(
            support_enumeration(&PayoffMatrix::from_ints(0, 0, 0, 0)),
            vec![
                pair(0, 1, 0, 1),
                pair(0, 1, 1, 1),
                pair(1, 1, 0, 1),
                pair(1, 1, 1, 1)
            ]
        );
    }

    #[test]
    fn oracle_disagreement_is_never_observed_on_spot_checks() {
        for (a, b, c, d) in [
            (1, -1, -1, 1),
            (2, 3, 1, 0),
            (2, 0, 1, 1),
            (0, 0, 0, 0),
            (1, 1, 2, 0),
            (0, 1, 2, 1),
            (3, -1, -2, 2),
        ] {
            let m = PayoffMatrix::from_ints(a, b, c, d);
            let report = maximin_oracle(&m);
            assert!(report.agrees_with_classifier, "{m}");
            assert_eq!(report.value, game_value(&m), "{m}");
        }
    }

    #[test]
    fn grid_points_live_inside_the_classified_product() {
        let m = PayoffMatrix::from_ints(2, 0, 1, 1);
        let eq = classify(&m);
        assert_eq!(eq.label(), CaseLabel::Inf2I);
        for s in grid_exact_nash(&m, 64) {
            assert!(eq.contains(&s));
        }
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
            // The oracle and the classifier agree everywhere.
            #[test]
            fn oracle_always_agrees(m in any_matrix()) {
                prop_assert!(maximin_oracle(&m).agrees_with_classifier);
            }

            // The fast affine-gain grid scan equals the brute-force filter
            // through the Nash predicate.
            #[test]
            fn grid_scan_matches_nash_filter(m in any_matrix(), resolution in 1u32..=6) {
                let fast = grid_exact_nash(&m, resolution);
                let mut brute = Vec::new();
                for i in 0..=resolution {
                    for j in 0..=resolution {
                        let s = StrategyPair::new(
                            MixedStrategy::new(Rational::new(i64::from(i), i64::from(resolution))).unwrap(),
                            MixedStrategy::new(Rational::new(i64::from(j), i64::from(resolution))).unwrap(),
                        );
                        if is_nash(&m, &s) {
                            brute.push(s);
                        }
                    }
                }
                prop_assert_eq!(fast, brute);
            }

            // Support enumeration returns only true equilibria, inside the
            // classified product, and finds at least one representative.
            #[test]
            fn support_points_are_equilibria(m in any_matrix()) {
                let eq = classify(&m);
                let points = support_enumeration(&m);
                for s in &points {
                    prop_assert!(is_nash(&m, s));
                    prop_assert!(eq.contains(s));
                }
                // A representative always exists: either some pure profile is
                // an equilibrium or the unique equilibrium is interior.
                prop_assert!(!points.is_empty());
            }
        }
    }
}
