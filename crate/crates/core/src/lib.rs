//! Exact solver for 2x2 zero-sum games.
//!
//! Given a payoff matrix with rational entries, this crate computes, in
//! exact arbitrary-precision arithmetic:
//!
//! * the complete Nash equilibrium set, as a product of two probability
//!   intervals classified into one of eighteen mutually exclusive cases
//!   ([`equilibrium::classify`]),
//! * the game value and its pure-strategy security bounds
//!   ([`equilibrium::game_value`], [`equilibrium::pure_bounds`]),
//! * best-response sets and indifference thresholds ([`game`]),
//! * commitment analysis for either player moving first ([`leadership`]),
//! * and an independent verification route that recomputes everything by
//!   direct payoff optimization ([`oracle`]).
//!
//! The classifier and the oracle share no logic beyond basic payoff
//! evaluation; their exact agreement on every input is the crate's central
//! correctness check and is enforced by the test suite.
//!
//! ```
//! use zs2x2_core::equilibrium::{classify, CaseLabel};
//! use zs2x2_core::oracle::maximin_oracle;
//! use zs2x2_core::{PayoffMatrix, Rational};
//!
//! // Matching pennies: unique mixed equilibrium at (1/2, 1/2), value 0.
//! let m = PayoffMatrix::from_ints(1, -1, -1, 1);
//! let eq = classify(&m);
//! assert_eq!(eq.label(), CaseLabel::UniqueMixed);
//! assert_eq!(eq.value(), &Rational::zero());
//! assert_eq!(eq.row_set().lo(), &Rational::new(1, 2));
//! assert!(maximin_oracle(&m).agrees_with_classifier);
//! ```

pub mod equilibrium;
pub mod game;
pub mod leadership;
pub mod numeric;
pub mod oracle;

pub use equilibrium::{Cardinality, CaseLabel, EquilibriumSet, ProbabilityInterval};
pub use game::{BestResponseSet, MixedStrategy, PayoffMatrix, StrategyPair};
pub use leadership::{LeaderPayoffCurve, LinearSegment};
pub use numeric::Rational;
pub use oracle::{OracleMethod, OracleReport};
