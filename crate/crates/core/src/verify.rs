//! Brute force against prediction: per-case counts, per-class degrees, invariants,
//! and the lemma checks, assembled into a [`VerificationReport`].
//!
//! Enumeration is ground truth. A MISMATCH row is a result, not a failure;
//! rows whose solver ran out of budget are INCONCLUSIVE.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{dihedral_group, moufang_extension, AlgebraError, GroupPartition, LoopProvenance};
use crate::formulas::{
    case_id_of, degree_sum_consistency, predict_case_counts, predict_degrees, predict_invariants, predict_total_edges,
    DegreeClass, Parity, PredictedValue, CASE_PATTERNS,
};
use crate::hypergraph::{AssociatingHypergraph, DirectedHyperedge};
use crate::invariants::{
    format_matching_polynomial, matching_polynomial, Budget, InvariantError, InvariantKind, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("hypergraph was not built from an M(G,2) loop")]
    NotMoufangExtension,
    #[error("loop order {loop_order} is not twice the base order {base_order}")]
    OrderMismatch { loop_order: usize, base_order: usize },
    #[error("vertex {vertex} out of range for loop order {loop_order}")]
    VertexOutOfRange { vertex: usize, loop_order: usize },
    #[error("invalid range: need 3 <= n_min <= n_max (got {0}..={1})")]
    InvalidRange(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    Inconclusive,
}

impl Verdict {
    pub fn from_eq(equal: bool) -> Self {
        if equal {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Case id 1..=8 of a directed edge in an M(G,2) hypergraph, from the alpha bits.
pub fn classify_triple(e: &DirectedHyperedge, loop_order: usize, base_order: usize) -> Result<u8, VerifyError> {
    if loop_order != 2 * base_order {
        return Err(VerifyError::OrderMismatch { loop_order, base_order });
    }
    let mut pattern = [0u8; 3];
    for (slot, &v) in pattern.iter_mut().zip(&e.triple) {
        if v >= loop_order {
            return Err(VerifyError::VertexOutOfRange { vertex: v, loop_order });
        }
        *slot = u8::from(v >= base_order);
    }
    Ok(case_id_of(pattern).expect("alpha bits are 0/1"))
}

/// Enumerated directed edges per case; `counts[i]` is case `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseBreakdown {
    pub counts: [usize; 8],
}

impl CaseBreakdown {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn count(&self, case_id: u8) -> usize {
        self.counts[case_id as usize - 1]
    }

    /// Cases 2,3,4 pairwise equal and cases 5,6,7 pairwise equal.
    pub fn blocks_symmetric(&self) -> bool {
        let c = &self.counts;
        c[1] == c[2] && c[2] == c[3] && c[4] == c[5] && c[5] == c[6]
    }
}

fn base_order(h: &AssociatingHypergraph) -> Result<usize, VerifyError> {
    match h.source().provenance() {
        LoopProvenance::MoufangExtension { base_order } => Ok(base_order),
        _ => Err(VerifyError::NotMoufangExtension),
    }
}

pub fn case_breakdown(h: &AssociatingHypergraph) -> Result<CaseBreakdown, VerifyError> {
    let base = base_order(h)?;
    let mut counts = [0; 8];
    for e in h.directed_edges() {
        counts[classify_triple(e, h.vertex_count(), base)? as usize - 1] += 1;
    }
    Ok(CaseBreakdown { counts })
}

/// Degree values seen across one class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeObservation {
    Uniform(usize),
    /// (degree, number of members with it), ascending by degree.
    NonUniform(Vec<(usize, usize)>),
}

impl DegreeObservation {
    fn from_values(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for v in values {
            match groups.last_mut() {
                Some((d, c)) if *d == v => *c += 1,
                _ => groups.push((v, 1)),
            }
        }
        match groups.as_slice() {
            [(d, _)] => DegreeObservation::Uniform(*d),
            _ => DegreeObservation::NonUniform(groups),
        }
    }

    pub fn uniform(&self) -> Option<usize> {
        match self {
            DegreeObservation::Uniform(d) => Some(*d),
            DegreeObservation::NonUniform(_) => None,
        }
    }
}

impl fmt::Display for DegreeObservation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeObservation::Uniform(d) => write!(f, "{d}"),
            DegreeObservation::NonUniform(groups) => {
                f.write_str("{")?;
                for (i, (d, c)) in groups.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{d}x{c}")?;
                }
                f.write_str("}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub class: DegreeClass,
    pub label: &'static str,
    pub members: Vec<usize>,
    pub directed: DegreeObservation,
    pub support: DegreeObservation,
    pub predicted: i64,
    pub proof_variant: Option<i64>,
    /// Directed degree against the statement; MISMATCH when non-uniform.
    pub verdict: Verdict,
    pub proof_verdict: Option<Verdict>,
}

/// Groups vertices into the six (alpha, Z/R/S) classes and compares each class's
/// directed degree with A..F.
pub fn degree_class_check(
    h: &AssociatingHypergraph,
    partition: &GroupPartition,
) -> Result<Vec<DegreeRow>, VerifyError> {
    let base = base_order(h)?;
    let n = base / 2;
    let degrees = h.degrees();
    let predictions = predict_degrees(n);
    let rows = DegreeClass::ALL
        .iter()
        .zip(predictions)
        .map(|(&class, prediction)| {
            let members: Vec<usize> =
                partition.members(class.class).iter().map(|&g| class.alpha as usize * base + g).collect();
            let directed =
                DegreeObservation::from_values(members.iter().map(|&v| degrees.directed_degree[v]).collect());
            let support = DegreeObservation::from_values(members.iter().map(|&v| degrees.support_degree[v]).collect());
            let hit = |p: i64| Verdict::from_eq(directed.uniform().map(|d| d as i64) == Some(p));
            DegreeRow {
                class,
                label: prediction.label,
                members,
                verdict: hit(prediction.value),
                proof_verdict: prediction.proof_variant.map(hit),
                predicted: prediction.value,
                proof_variant: prediction.proof_variant,
                directed,
                support,
            }
        })
        .collect();
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub enumerated: usize,
    pub predicted: i64,
    pub support_edges: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRow {
    pub case_id: u8,
    pub pattern: [u8; 3],
    pub enumerated: usize,
    pub predicted: i64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRow {
    pub name: InvariantKind,
    pub computed: usize,
    pub predicted: PredictedValue,
    pub alternate_predicted: Option<PredictedValue>,
    pub verdict: Verdict,
    pub alternate_verdict: Option<Verdict>,
    pub budget_exhausted: bool,
    pub nodes_explored: u64,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub name: &'static str,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaCheckRow {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingPolynomialRow {
    pub coefficients: Vec<u128>,
    pub rendered: String,
    pub computed_degree: usize,
    pub predicted_degree: PredictedValue,
    pub verdict: Verdict,
    pub budget_exhausted: bool,
    pub nodes_explored: u64,
}

pub const EDGE_SEMANTICS: &str =
    "edge totals, case counts and degrees count ordered (directed) triples; alpha, tau, rho, nu, chi, chi-strong and the matching polynomial use the unordered support";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub parity: Parity,
    pub vertex_count: usize,
    pub budget: u64,
    pub edge_semantics: &'static str,
    pub totals: Totals,
    pub cases: Vec<CaseRow>,
    pub degrees: Vec<DegreeRow>,
    pub invariants: Vec<InvariantRow>,
    pub lemmas: Vec<LemmaRow>,
    pub formula_checks: Vec<FormulaCheckRow>,
    pub matching_polynomial: MatchingPolynomialRow,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub matches: usize,
    pub mismatches: usize,
    pub inconclusive: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Match => self.matches += 1,
            Verdict::Mismatch => self.mismatches += 1,
            Verdict::Inconclusive => self.inconclusive += 1,
        }
    }

    pub fn merge(self, other: Tally) -> Tally {
        Tally {
            matches: self.matches + other.matches,
            mismatches: self.mismatches + other.mismatches,
            inconclusive: self.inconclusive + other.inconclusive,
        }
    }
}

impl VerificationReport {
    /// Every primary verdict with a row label; proof-variant verdicts are not included.
    pub fn verdicts(&self) -> Vec<(String, Verdict)> {
        let mut out = Vec::new();
        out.push((String::from("total edges"), self.totals.verdict));
        for c in &self.cases {
            out.push((format!("case {}", c.case_id), c.verdict));
        }
        for d in &self.degrees {
            out.push((format!("degree {}", d.label), d.verdict));
        }
        for i in &self.invariants {
            out.push((format!("invariant {}", i.name), i.verdict));
        }
        for l in &self.lemmas {
            out.push((format!("lemma {}", l.name), l.verdict));
        }
        for f in &self.formula_checks {
            out.push((format!("formula {}", f.name), f.verdict));
        }
        out.push((String::from("matching polynomial degree"), self.matching_polynomial.verdict));
        out
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        self.verdicts().into_iter().for_each(|(_, v)| t.add(v));
        t
    }

    pub fn invariant(&self, kind: InvariantKind) -> Option<&InvariantRow> {
        self.invariants.iter().find(|r| r.name == kind)
    }
}

/// Builds M(D_n,2) and its hypergraph and runs every check.
pub fn run_verification(n: usize, budget: Budget) -> Result<VerificationReport, VerifyError> {
    let (group, partition) = dihedral_group(n)?;
    let source = moufang_extension(&group);
    let h = AssociatingHypergraph::build(&source);
    let support = h.support();

    let breakdown = case_breakdown(&h)?;
    let predicted_total = predict_total_edges(n);
    let totals = Totals {
        enumerated: breakdown.total(),
        predicted: predicted_total,
        support_edges: support.edge_count(),
        verdict: Verdict::from_eq(breakdown.total() as i64 == predicted_total),
    };
    let cases = predict_case_counts(n)
        .iter()
        .map(|p| {
            let enumerated = breakdown.count(p.case_id);
            CaseRow {
                case_id: p.case_id,
                pattern: CASE_PATTERNS[p.case_id as usize - 1],
                enumerated,
                predicted: p.count,
                verdict: Verdict::from_eq(enumerated as i64 == p.count),
            }
        })
        .collect();
    let degrees = degree_class_check(&h, &partition)?;

    let predictions = predict_invariants(n);
    let mut invariants = Vec::new();
    for kind in InvariantKind::ALL {
        let r = kind.solve(support, budget)?;
        let judge = |p: PredictedValue| {
            if r.budget_exhausted {
                Verdict::Inconclusive
            } else {
                Verdict::from_eq(p.equals(r.value))
            }
        };
        let predicted = predictions.get(kind);
        let alternate = predictions.alternate(kind);
        invariants.push(InvariantRow {
            name: kind,
            computed: r.value,
            predicted,
            alternate_predicted: alternate,
            verdict: judge(predicted),
            alternate_verdict: alternate.map(judge),
            budget_exhausted: r.budget_exhausted,
            nodes_explored: r.nodes_explored,
            witness: r.witness,
        });
    }

    let row = |k: InvariantKind| invariants.iter().find(|r| r.name == k).unwrap();
    let (alpha, tau) = (row(InvariantKind::Independence), row(InvariantKind::Transversal));
    let vertex_count = h.vertex_count();
    let alpha_plus_tau = LemmaRow {
        name: "alpha_plus_tau",
        verdict: if alpha.budget_exhausted || tau.budget_exhausted {
            Verdict::Inconclusive
        } else {
            Verdict::from_eq(alpha.computed + tau.computed == vertex_count)
        },
        detail: format!(
            "{} + {} = {} vs |V| = {}",
            alpha.computed,
            tau.computed,
            alpha.computed + tau.computed,
            vertex_count
        ),
    };
    let distance = match support.first_non_adjacent_pair() {
        None => LemmaRow {
            name: "all_pairs_distance_1",
            verdict: Verdict::Match,
            detail: format!("all {} vertex pairs share an edge", vertex_count * (vertex_count - 1) / 2),
        },
        Some((u, v)) => LemmaRow {
            name: "all_pairs_distance_1",
            verdict: Verdict::Mismatch,
            detail: format!(
                "{} and {} share no edge; distance {:?}",
                source.name(u),
                source.name(v),
                support.distance(u, v).ok().flatten()
            ),
        },
    };
    let moufang = source.check_moufang_identities();
    let moufang = LemmaRow {
        name: "moufang_identities",
        verdict: Verdict::from_eq(moufang.holds()),
        detail: match moufang.counterexample {
            None => format!("all three identities hold on {}^3 triples", source.order()),
            Some(v) => format!("{v}"),
        },
    };

    let (lhs, rhs) = degree_sum_consistency(n);
    let formula_checks =
        alloc::vec![FormulaCheckRow { name: "degree_sum", lhs, rhs, verdict: Verdict::from_eq(lhs == rhs) }];

    let poly = matching_polynomial(support, budget)?;
    let predicted_degree = predictions.matching_polynomial_degree();
    let matching_polynomial = MatchingPolynomialRow {
        rendered: format_matching_polynomial(&poly),
        computed_degree: poly.degree(),
        predicted_degree,
        verdict: if poly.budget_exhausted {
            Verdict::Inconclusive
        } else {
            Verdict::from_eq(predicted_degree.equals(poly.degree()))
        },
        budget_exhausted: poly.budget_exhausted,
        nodes_explored: poly.nodes_explored,
        coefficients: poly.coefficients,
    };

    Ok(VerificationReport {
        n,
        parity: Parity::of(n),
        vertex_count,
        budget: budget.0,
        edge_semantics: EDGE_SEMANTICS,
        totals,
        cases,
        degrees,
        invariants,
        lemmas: alloc::vec![alpha_plus_tau, distance, moufang],
        formula_checks,
        matching_polynomial,
    })
}

/// Independent reports for every n in the range, ascending.
pub fn run_range(n_min: usize, n_max: usize, budget: Budget) -> Result<Vec<VerificationReport>, VerifyError> {
    check_range(n_min, n_max)?;
    (n_min..=n_max).map(|n| run_verification(n, budget)).collect()
}

pub fn check_range(n_min: usize, n_max: usize) -> Result<(), VerifyError> {
    if n_min < 3 || n_min > n_max {
        return Err(VerifyError::InvalidRange(n_min, n_max));
    }
    Ok(())
}
