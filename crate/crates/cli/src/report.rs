//! Report construction and rendering.
//!
//! Two formats share one data source: `machine` serializes serde structs with
//! a fixed field order, `text` renders the same facts line by line. Rationals
//! appear in canonical string form in both, so identical inputs always yield
//! identical output bytes.

use std::cmp::Ordering;

use serde::Serialize;
use zs2x2_core::equilibrium::{classify, Cardinality, EquilibriumSet};
use zs2x2_core::game::{best_response_col, best_response_row, threshold_col, threshold_row};
use zs2x2_core::leadership::{leader_curve, leader_optimum};
use zs2x2_core::oracle::{grid_exact_nash, maximin_oracle, support_enumeration};
use zs2x2_core::{
    BestResponseSet, LeaderPayoffCurve, MixedStrategy, PayoffMatrix, ProbabilityInterval, Rational,
};

use crate::input::GameInput;

/// ANSI styling, enabled only when `ZS2X2_COLOR=1`.
#[derive(Clone, Copy)]
pub struct Style {
    enabled: bool,
}

impl Style {
    pub fn from_env() -> Self {
        let enabled = std::env::var("ZS2X2_COLOR")
            .map(|v| v == "1")
            .unwrap_or(false);
        Style { enabled }
    }

    fn bold(&self, s: &str) -> String {
        if self.enabled {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn green(&self, s: &str) -> String {
        if self.enabled {
            format!("\x1b[32m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn red(&self, s: &str) -> String {
        if self.enabled {
            format!("\x1b[31m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }
}

fn interval_pair(iv: &ProbabilityInterval) -> [String; 2] {
    [iv.lo().to_string(), iv.hi().to_string()]
}

fn matrix_strings(m: &PayoffMatrix) -> [[String; 2]; 2] {
    [
        [m.u11().to_string(), m.u12().to_string()],
        [m.u21().to_string(), m.u22().to_string()],
    ]
}

/// Cross-check results: the independent maximin oracle, support enumeration,
/// and an exact grid scan, all confronted with the classifier's answer.
pub struct Verification {
    pub oracle_value: Rational,
    pub oracle_row_set: ProbabilityInterval,
    pub oracle_col_set: ProbabilityInterval,
    pub oracle_agrees: bool,
    pub support_points: usize,
    pub support_inside: usize,
    pub grid_resolution: u32,
    pub grid_points: usize,
    pub grid_inside: usize,
}

impl Verification {
    pub fn run(m: &PayoffMatrix, eq: &EquilibriumSet, grid_resolution: u32) -> Self {
        let oracle = maximin_oracle(m);
        let support = support_enumeration(m);
        let support_inside = support.iter().filter(|s| eq.contains(s)).count();
        let grid = grid_exact_nash(m, grid_resolution);
        let grid_inside = grid.iter().filter(|s| eq.contains(s)).count();
        Verification {
            oracle_value: oracle.value,
            oracle_row_set: oracle.row_opt_set,
            oracle_col_set: oracle.col_opt_set,
            oracle_agrees: oracle.agrees_with_classifier,
            support_points: support.len(),
            support_inside,
            grid_resolution,
            grid_points: grid.len(),
            grid_inside,
        }
    }

    pub fn verified(&self) -> bool {
        self.oracle_agrees
            && self.support_inside == self.support_points
            && self.support_points > 0
            && self.grid_inside == self.grid_points
    }
}

/// One solved game, holding exact core results plus input metadata.
pub struct Solved {
    pub index: Option<usize>,
    pub id: Option<String>,
    pub matrix: PayoffMatrix,
    pub eq: EquilibriumSet,
    pub leader_minimizers: ProbabilityInterval,
    pub leader_min_value: Rational,
    pub verification: Option<Verification>,
}

impl Solved {
    pub fn new(input: &GameInput, verify_grid: Option<u32>, index: Option<usize>) -> Self {
        let m = input.matrix.clone();
        let eq = classify(&m);
        let (leader_minimizers, leader_min_value) = leader_optimum(&m);
        let verification = verify_grid.map(|res| Verification::run(&m, &eq, res));
        Solved {
            index,
            id: input.id.clone(),
            matrix: m,
            eq,
            leader_minimizers,
            leader_min_value,
            verification,
        }
    }
}

#[derive(Serialize)]
struct LeadershipJson {
    minimizers: [String; 2],
    min_value: String,
}

#[derive(Serialize)]
struct VerificationJson {
    oracle_value: String,
    oracle_row_set: [String; 2],
    oracle_col_set: [String; 2],
    oracle_agrees: bool,
    support_points: usize,
    support_inside: usize,
    grid_resolution: u32,
    grid_points: usize,
    grid_inside: usize,
    verified: bool,
}

#[derive(Serialize)]
struct SolveJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<String>,
    matrix: [[String; 2]; 2],
    case: &'static str,
    condition: &'static str,
    cardinality: &'static str,
    row_set: [String; 2],
    col_set: [String; 2],
    value: String,
    leadership: LeadershipJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<VerificationJson>,
}

fn cardinality_str(c: Cardinality) -> &'static str {
    match c {
        Cardinality::One => "one",
        Cardinality::Infinite => "infinite",
    }
}

pub fn solve_machine(s: &Solved) -> String {
    let verification = s.verification.as_ref().map(|v| VerificationJson {
        oracle_value: v.oracle_value.to_string(),
        oracle_row_set: interval_pair(&v.oracle_row_set),
        oracle_col_set: interval_pair(&v.oracle_col_set),
        oracle_agrees: v.oracle_agrees,
        support_points: v.support_points,
        support_inside: v.support_inside,
        grid_resolution: v.grid_resolution,
        grid_points: v.grid_points,
        grid_inside: v.grid_inside,
        verified: v.verified(),
    });
    let json = SolveJson {
        index: s.index,
        id: s.id.clone(),
        matrix: matrix_strings(&s.matrix),
        case: s.eq.label().tag(),
        condition: s.eq.condition(),
        cardinality: cardinality_str(s.eq.cardinality()),
        row_set: interval_pair(s.eq.row_set()),
        col_set: interval_pair(s.eq.col_set()),
        value: s.eq.value().to_string(),
        leadership: LeadershipJson {
            minimizers: interval_pair(&s.leader_minimizers),
            min_value: s.leader_min_value.to_string(),
        },
        verification,
    };
    serde_json::to_string(&json).expect("report serialization cannot fail")
}

pub fn solve_text(s: &Solved, style: &Style) -> String {
    let mut out = String::new();
    if let Some(id) = &s.id {
        out.push_str(&format!("id: {id}\n"));
    }
    out.push_str(&format!("matrix: {}\n", s.matrix));
    out.push_str(&format!("case: {}\n", style.bold(s.eq.label().tag())));
    out.push_str(&format!("condition: {}\n", s.eq.condition()));
    out.push_str(&format!(
        "equilibria: {}\n",
        cardinality_str(s.eq.cardinality())
    ));
    out.push_str(&format!("row set: {}\n", s.eq.row_set()));
    out.push_str(&format!("col set: {}\n", s.eq.col_set()));
    out.push_str(&format!("value: {}\n", s.eq.value()));
    out.push_str(&format!("leader minimizers: {}\n", s.leader_minimizers));
    out.push_str(&format!("leader min value: {}\n", s.leader_min_value));
    if let Some(v) = &s.verification {
        out.push_str("verification:\n");
        out.push_str(&format!(
            "  oracle value: {} (agrees: {})\n",
            v.oracle_value,
            if v.oracle_agrees { "yes" } else { "no" }
        ));
        out.push_str(&format!(
            "  support points inside set: {}/{}\n",
            v.support_inside, v.support_points
        ));
        out.push_str(&format!(
            "  grid points inside set (resolution {}): {}/{}\n",
            v.grid_resolution, v.grid_inside, v.grid_points
        ));
        let tag = if v.verified() {
            style.green("PASS")
        } else {
            style.red("FAIL")
        };
        out.push_str(&format!("  verified: {tag}\n"));
    }
    out
}

/// Best-response query result: the set plus the branch that produced it.
pub struct BrAnswer {
    pub player: u8,
    pub opponent_prob: Rational,
    pub set: BestResponseSet,
    pub branch: String,
    pub delta: Rational,
    pub threshold: Option<Rational>,
}

impl BrAnswer {
    /// Answers for the given player, reconstructing which branch fired from
    /// the same comparisons the core dispatch makes.
    pub fn compute(m: &PayoffMatrix, player: u8, opponent: &MixedStrategy) -> Self {
        let delta = m.delta();
        match player {
            1 => {
                let set = best_response_row(m, opponent);
                let threshold = threshold_col(m);
                let branch = match &threshold {
                    Some(t) => branch_nonzero_delta(opponent.p(), t, &delta, "p(2)"),
                    None => branch_zero_delta(m.u12(), m.u22(), "u12", "u22"),
                };
                BrAnswer {
                    player,
                    opponent_prob: opponent.p().clone(),
                    set,
                    branch,
                    delta,
                    threshold,
                }
            }
            2 => {
                let set = best_response_col(m, opponent);
                let threshold = threshold_row(m);
                let branch = match &threshold {
                    Some(t) => branch_nonzero_delta(opponent.p(), t, &delta, "p(1)"),
                    None => branch_zero_delta(m.u21(), m.u22(), "u21", "u22"),
                };
                BrAnswer {
                    player,
                    opponent_prob: opponent.p().clone(),
                    set,
                    branch,
                    delta,
                    threshold,
                }
            }
            _ => unreachable!("player is validated by the argument parser"),
        }
    }
}

fn branch_nonzero_delta(p: &Rational, t: &Rational, delta: &Rational, name: &str) -> String {
    let delta_side = if delta.is_positive() {
        "δ > 0"
    } else {
        "δ < 0"
    };
    match p.cmp(t) {
        Ordering::Equal => format!("indifferent; P(a1) = {name}"),
        Ordering::Less => format!("P(a1) < {name}, {delta_side}"),
        Ordering::Greater => format!("P(a1) > {name}, {delta_side}"),
    }
}

fn branch_zero_delta(lhs: &Rational, rhs: &Rational, lname: &str, rname: &str) -> String {
    let rel = match lhs.cmp(rhs) {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    };
    format!("δ=0, {lname} {rel} {rname}")
}

#[derive(Serialize)]
struct BrJson {
    player: u8,
    opponent_prob: String,
    best_response: [String; 2],
    branch: String,
    delta: String,
    threshold: Option<String>,
}

pub fn br_machine(a: &BrAnswer) -> String {
    let json = BrJson {
        player: a.player,
        opponent_prob: a.opponent_prob.to_string(),
        best_response: [a.set.lo().to_string(), a.set.hi().to_string()],
        branch: a.branch.clone(),
        delta: a.delta.to_string(),
        threshold: a.threshold.as_ref().map(|t| t.to_string()),
    };
    serde_json::to_string(&json).expect("report serialization cannot fail")
}

pub fn br_text(a: &BrAnswer) -> String {
    format!("{} ({})\n", a.set, a.branch)
}

/// Leadership query result: curve, optimum, optional evenly spaced samples.
pub struct LeaderAnswer {
    pub id: Option<String>,
    pub matrix: PayoffMatrix,
    pub curve: LeaderPayoffCurve,
    pub minimizers: ProbabilityInterval,
    pub min_value: Rational,
    pub samples: Option<Vec<(Rational, Rational)>>,
}

impl LeaderAnswer {
    pub fn compute(input: &GameInput, samples: Option<u32>) -> Self {
        let m = input.matrix.clone();
        let curve = leader_curve(&m);
        let (minimizers, min_value) = leader_optimum(&m);
        let samples = samples.map(|n| {
            let denom = Rational::from_int(i64::from(n));
            (0..=n)
                .map(|k| {
                    let beta = Rational::from_int(i64::from(k)) / &denom;
                    let value = curve.at(&beta);
                    (beta, value)
                })
                .collect()
        });
        LeaderAnswer {
            id: input.id.clone(),
            matrix: m,
            curve,
            minimizers,
            min_value,
            samples,
        }
    }
}

#[derive(Serialize)]
struct SegmentJson {
    domain: [String; 2],
    slope: String,
    intercept: String,
}

#[derive(Serialize)]
struct LeaderJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<String>,
    matrix: [[String; 2]; 2],
    breakpoints: Vec<String>,
    segments: Vec<SegmentJson>,
    minimizers: [String; 2],
    min_value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<Vec<[String; 2]>>,
}

pub fn leader_machine(a: &LeaderAnswer) -> String {
    let json = LeaderJson {
        id: a.id.clone(),
        matrix: matrix_strings(&a.matrix),
        breakpoints: a
            .curve
            .breakpoints()
            .iter()
            .map(Rational::to_string)
            .collect(),
        segments: a
            .curve
            .segments()
            .iter()
            .map(|seg| SegmentJson {
                domain: interval_pair(seg.domain()),
                slope: seg.slope().to_string(),
                intercept: seg.intercept().to_string(),
            })
            .collect(),
        minimizers: interval_pair(&a.minimizers),
        min_value: a.min_value.to_string(),
        samples: a.samples.as_ref().map(|rows| {
            rows.iter()
                .map(|(beta, value)| [beta.to_string(), value.to_string()])
                .collect()
        }),
    };
    serde_json::to_string(&json).expect("report serialization cannot fail")
}

pub fn leader_text(a: &LeaderAnswer, style: &Style) -> String {
    // With samples requested, emit only the plot CSV so the output pipes
    // straight into tooling.
    if let Some(rows) = &a.samples {
        let mut out = String::from("beta,value\n");
        for (beta, value) in rows {
            out.push_str(&format!("{beta},{value}\n"));
        }
        return out;
    }
    let mut out = String::new();
    if let Some(id) = &a.id {
        out.push_str(&format!("id: {id}\n"));
    }
    out.push_str(&format!("matrix: {}\n", a.matrix));
    if a.curve.breakpoints().is_empty() {
        out.push_str("breakpoints: none\n");
    } else {
        let joined: Vec<String> = a
            .curve
            .breakpoints()
            .iter()
            .map(Rational::to_string)
            .collect();
        out.push_str(&format!("breakpoints: {}\n", joined.join(", ")));
    }
    out.push_str("segments:\n");
    for seg in a.curve.segments() {
        out.push_str(&format!("  {seg}\n"));
    }
    out.push_str(&format!("minimizers: {}\n", a.minimizers));
    out.push_str(&format!(
        "min value: {}\n",
        style.bold(&a.min_value.to_string())
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain() -> Style {
        Style { enabled: false }
    }

    fn input(m: PayoffMatrix) -> GameInput {
        GameInput {
            id: None,
            description: None,
            matrix: m,
        }
    }

    #[test]
    fn solve_text_matching_pennies() {
        let solved = Solved::new(&input(PayoffMatrix::from_ints(1, -1, -1, 1)), None, None);
        let text = solve_text(&solved, &plain());
        assert!(text.contains("case: UniqueMixed"), "{text}");
        assert!(text.contains("row set: {1/2}"), "{text}");
        assert!(text.contains("value: 0\n"), "{text}");
    }

    #[test]
    fn br_branch_strings_match_contract() {
        let mp = PayoffMatrix::from_ints(1, -1, -1, 1);
        let half = MixedStrategy::new(Rational::new(1, 2)).unwrap();
        let a = BrAnswer::compute(&mp, 1, &half);
        assert_eq!(br_text(&a), "[0,1] (indifferent; P(a1) = p(2))\n");

        let degenerate = PayoffMatrix::from_ints(1, 2, 0, 1);
        let q = MixedStrategy::new(Rational::new(3, 4)).unwrap();
        let a = BrAnswer::compute(&degenerate, 1, &q);
        assert_eq!(br_text(&a), "{1} (δ=0, u12 > u22)\n");
    }

    #[test]
    fn br_machine_reports_null_threshold_when_delta_zero() {
        let degenerate = PayoffMatrix::from_ints(1, 2, 0, 1);
        let q = MixedStrategy::new(Rational::new(3, 4)).unwrap();
        let line = br_machine(&BrAnswer::compute(&degenerate, 1, &q));
        assert!(line.contains(r#""threshold":null"#), "{line}");
        assert!(line.contains(r#""delta":"0""#), "{line}");
    }

    #[test]
    fn leader_samples_emit_csv_only() {
        let a = LeaderAnswer::compute(&input(PayoffMatrix::from_ints(1, -1, -1, 1)), Some(4));
        let text = leader_text(&a, &plain());
        assert_eq!(text, "beta,value\n0,1\n1/4,1/2\n1/2,0\n3/4,1/2\n1,1\n");
    }

    #[test]
    fn verification_passes_on_consistent_games() {
        let inp = input(PayoffMatrix::from_ints(2, -1, 1, 1));
        let solved = Solved::new(&inp, Some(8), None);
        assert!(solved.verification.as_ref().unwrap().verified());
    }

    #[test]
    fn machine_solve_quotes_every_rational() {
        let solved = Solved::new(&input(PayoffMatrix::from_ints(1, -1, -1, 1)), None, None);
        let line = solve_machine(&solved);
        assert!(line.contains(r#""value":"0""#), "{line}");
        assert!(line.contains(r#""row_set":["1/2","1/2"]"#), "{line}");
    }
}
