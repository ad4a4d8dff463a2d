//! Closed-form predictions for the associating hypergraph of M(D_n,2).
//!
//! Every expression is written out term by term in the printed shape, including
//! redundant factors such as `1 * n` or `C(m, 1)`, so each line can be audited
//! against its source. Nothing here is simplified or corrected.

#![allow(clippy::identity_op)]

use core::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::ElementClass;
use crate::invariants::InvariantKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// An exact rational prediction in lowest terms (denominator > 0).
///
/// A few printed formulas, e.g. `7n/4 - 1`, are not integers for every n of their
/// parity; they are kept exact instead of rounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PredictedValue {
    numerator: i64,
    denominator: i64,
}

const fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl PredictedValue {
    pub const fn integer(v: i64) -> Self {
        Self { numerator: v, denominator: 1 }
    }

    pub const fn ratio(numerator: i64, denominator: i64) -> Self {
        let g = gcd(numerator, denominator);
        let sign = if denominator < 0 { -1 } else { 1 };
        Self { numerator: sign * numerator / g, denominator: sign * denominator / g }
    }

    pub fn as_integer(self) -> Option<i64> {
        (self.denominator == 1).then_some(self.numerator)
    }

    pub fn is_integer(self) -> bool {
        self.denominator == 1
    }

    /// Exact equality with a computed integer.
    pub fn equals(self, computed: usize) -> bool {
        self.as_integer() == Some(computed as i64)
    }
}

impl fmt::Display for PredictedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

impl Serialize for PredictedValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.as_integer() {
            Some(v) => s.serialize_i64(v),
            None => s.collect_str(self),
        }
    }
}

/// C(m, r) for small arguments; zero when r > m or m < 0.
fn binom(m: i64, r: i64) -> i64 {
    if r < 0 || m < 0 || r > m {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

/// (alpha_1, alpha_2, alpha_3) for case ids 1..=8.
pub const CASE_PATTERNS: [[u8; 3]; 8] =
    [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0], [1, 1, 1]];

pub fn case_id_of(pattern: [u8; 3]) -> Option<u8> {
    CASE_PATTERNS.iter().position(|p| *p == pattern).map(|i| i as u8 + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CasePrediction {
    pub case_id: u8,
    pub pattern: [u8; 3],
    pub count: i64,
    pub parity: Parity,
}

/// Case 1: all three from G.
fn case_all_group(n: i64) -> i64 {
    6 * binom(2 * n, 3)
}

/// Cases 2, 3, 4: one coordinate has alpha = 1 and the other two must commute.
fn case_one_flipped(n: i64, parity: Parity) -> i64 {
    match parity {
        // C(n-1,1) C(n-2,1) C(2n,1) + 2 (C(1,1) C(2n-1,1) C(2n,1))
        Parity::Odd => {
            binom(n - 1, 1) * binom(n - 2, 1) * binom(2 * n, 1)
                + 2 * (binom(1, 1) * binom(2 * n - 1, 1) * binom(2 * n, 1))
        }
        // C(n-2,1) C(n-3,1) C(2n,1) + 4 (C(1,1) C(2n-1,1) C(2n,1)) + 2 C(2n,1) + n C(2n,1)
        Parity::Even => {
            binom(n - 2, 1) * binom(n - 3, 1) * binom(2 * n, 1)
                + 4 * (binom(1, 1) * binom(2 * n - 1, 1) * binom(2 * n, 1))
                + 2 * binom(2 * n, 1)
                + n * binom(2 * n, 1)
        }
    }
}

/// Cases 2, 3, 4 in the simplified form printed alongside the binomial form.
pub fn case_one_flipped_simplified(n: i64, parity: Parity) -> i64 {
    match parity {
        // [2n(n-1)(n-2)] + [4n(2n-1)]
        Parity::Odd => 2 * n * (n - 1) * (n - 2) + 4 * n * (2 * n - 1),
        // [2n(n-2)(n-3)] + [8n(2n-1)] + 4n + 2n^2
        Parity::Even => 2 * n * (n - 2) * (n - 3) + 8 * n * (2 * n - 1) + 4 * n + 2 * n * n,
    }
}

/// Cases 5, 6, 7: two coordinates have alpha = 1.
fn case_two_flipped(n: i64, parity: Parity) -> i64 {
    match parity {
        // [2n x (2n-1)] + [(n-1) x (n-1) x 2n] + [n x 2n]
        Parity::Odd => (2 * n * (2 * n - 1)) + ((n - 1) * (n - 1) * 2 * n) + (n * 2 * n),
        // [2 x 2n x (2n-1)] + [(n-2) x (n-1) x 2n] + [n x 3 x 2n]
        Parity::Even => (2 * 2 * n * (2 * n - 1)) + ((n - 2) * (n - 1) * 2 * n) + (n * 3 * 2 * n),
    }
}

/// Case 8: all three have alpha = 1.
fn case_all_flipped(n: i64, parity: Parity) -> i64 {
    match parity {
        // 1 x [(n-1)(n-2)] + (n-1) x [(n-1)(n-2) + 1(n)] + n x [1(n-2)]
        Parity::Odd => 1 * ((n - 1) * (n - 2)) + (n - 1) * ((n - 1) * (n - 2) + 1 * n) + n * (1 * (n - 2)),
        // 2 x [(n-2)(n-3) + 1(n) + 2(2n-2)]
        //   + (n-2) x [(n-1)(n-2) + 1(n) + 2(n) + 1(n)]
        //   + n x [2(n-2) + 2 + 1(n) + 1(n) + 1(n)]
        Parity::Even => {
            2 * ((n - 2) * (n - 3) + 1 * n + 2 * (2 * n - 2))
                + (n - 2) * ((n - 1) * (n - 2) + 1 * n + 2 * n + 1 * n)
                + n * (2 * (n - 2) + 2 + 1 * n + 1 * n + 1 * n)
        }
    }
}

/// The eight per-pattern edge counts, in case-id order.
pub fn predict_case_counts(n: usize) -> [CasePrediction; 8] {
    let parity = Parity::of(n);
    let m = n as i64;
    core::array::from_fn(|i| {
        let case_id = i as u8 + 1;
        let count = match case_id {
            1 => case_all_group(m),
            2..=4 => case_one_flipped(m, parity),
            5..=7 => case_two_flipped(m, parity),
            _ => case_all_flipped(m, parity),
        };
        CasePrediction { case_id, pattern: CASE_PATTERNS[i], count, parity }
    })
}

/// Sum of the eight case predictions.
pub fn predict_total_edges(n: usize) -> i64 {
    predict_case_counts(n).iter().map(|c| c.count).sum()
}

/// One of the six vertex classes (g, alpha) with g in Z(D_n), R or S.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DegreeClass {
    pub alpha: u8,
    pub class: ElementClass,
}

impl DegreeClass {
    /// A..F order.
    pub const ALL: [DegreeClass; 6] = [
        DegreeClass { alpha: 0, class: ElementClass::Center },
        DegreeClass { alpha: 0, class: ElementClass::Rotation },
        DegreeClass { alpha: 0, class: ElementClass::Reflection },
        DegreeClass { alpha: 1, class: ElementClass::Center },
        DegreeClass { alpha: 1, class: ElementClass::Rotation },
        DegreeClass { alpha: 1, class: ElementClass::Reflection },
    ];

    pub fn label(self) -> &'static str {
        let i = DegreeClass::ALL.iter().position(|c| *c == self).unwrap();
        ["A", "B", "C", "D", "E", "F"][i]
    }
}

impl fmt::Display for DegreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = match self.class {
            ElementClass::Center => "Z",
            ElementClass::Rotation => "R",
            ElementClass::Reflection => "S",
        };
        write!(f, "(g,{}) g in {}", self.alpha, set)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreePrediction {
    pub class: DegreeClass,
    pub label: &'static str,
    /// The primary closed form.
    pub value: i64,
    /// As recomputed in the proof text, when that differs from the statement.
    pub proof_variant: Option<i64>,
}

fn degrees_odd(n: i64) -> [(i64, Option<i64>); 6] {
    // 3[(n-1)(n-2) + 2(2n-1)] + 3[2(2n-1) + 2(n-1)(n-1) + 2(n)]
    let shared = 3 * ((n - 1) * (n - 2) + 2 * (2 * n - 1)) + 3 * (2 * (2 * n - 1) + 2 * (n - 1) * (n - 1) + 2 * n);
    // A = 3(2n-1) + 3[2(2n-1)(2n)] + 3[2n(2n-1)]
    let a = 3 * (2 * n - 1) + 3 * (2 * (2 * n - 1) * (2 * n)) + 3 * (2 * n * (2 * n - 1));
    // B = 3(2n-1) + 3[2(n-2) + 2(2n)] + 3[(n-1)(2n)]
    let b = 3 * (2 * n - 1) + 3 * (2 * (n - 2) + 2 * (2 * n)) + 3 * ((n - 1) * (2 * n));
    // C = 3(2n-1) + 3[2(2n)] + 3[2n]
    let c = 3 * (2 * n - 1) + 3 * (2 * (2 * n)) + 3 * (2 * n);
    // D = shared + (n-1)(n-2) + 2(n-1)(n-2)
    let d = shared + (n - 1) * (n - 2) + 2 * (n - 1) * (n - 2);
    // E = shared + 2(n-2) + (n-2)((n-1) + 2) + n
    let e = shared + 2 * (n - 2) + (n - 2) * ((n - 1) + 2) + n;
    // F = shared + 1(n-1) + 1(n-1)
    let f = shared + 1 * (n - 1) + 1 * (n - 1);
    [(a, None), (b, None), (c, None), (d, None), (e, None), (f, None)]
}

fn degrees_even(n: i64) -> [(i64, Option<i64>); 6] {
    let c1 = |m: i64| binom(m, 1);
    // 3 x C(2n-1, 2): Case 1 share of every (g,0)
    let case1 = 3 * binom(2 * n - 1, 2);
    // A = case1 + 3[2(C(2n-1,1) C(2n,1)) + 2 C(2n,1)] + 3[2n (2n-1)]
    let a = case1 + 3 * (2 * (c1(2 * n - 1) * c1(2 * n)) + 2 * c1(2 * n)) + 3 * ((2 * n) * (2 * n - 1));
    // B = case1 + 3[2 C(n-3,1) + 4 C(2n,1)] + 3[(n-1) 2n]
    let b = case1 + 3 * (2 * c1(n - 3) + 4 * c1(2 * n)) + 3 * ((n - 1) * 2 * n);
    // C = case1 + 3[4 C(2n,1) + C(2n,1)] + 3[3 x 2n]
    let c = case1 + 3 * (4 * c1(2 * n) + c1(2 * n)) + 3 * (3 * 2 * n);
    // 3[C(n-2,1) C(n-3,1) + 4 C(2n-1,1) + 2 + n]
    //   + 3[2 (2(2n-1)) + (n-2)(2(n-1)) + n (3 x 2)]
    let shared = 3 * (c1(n - 2) * c1(n - 3) + 4 * c1(2 * n - 1) + 2 + n)
        + 3 * (2 * (2 * (2 * n - 1)) + (n - 2) * (2 * (n - 1)) + n * (3 * 2));

    // statement: (n-2)(n-3) + 1(n) + 1(2n-2) + (n-2) 2(n-2) + n (2+1+1)
    let d = shared + (n - 2) * (n - 3) + 1 * n + 1 * (2 * n - 2) + (n - 2) * 2 * (n - 2) + n * (2 + 1 + 1);
    // proof: (n-2)(n-3) + 2(n) + 1(2n-2) + (n-2)(2(n-2)) + n (2+1+1)
    let d_proof = shared + (n - 2) * (n - 3) + 2 * n + 1 * (2 * n - 2) + (n - 2) * (2 * (n - 2)) + n * (2 + 1 + 1);

    // statement: 2(2(n-3)) + 2(2(2n-2)) + (n-1)(n-2) + 1(n) + 2(n) + 1(n) + n(2(2)+1+1)
    let e = shared
        + 2 * (2 * (n - 3))
        + 2 * (2 * (2 * n - 2))
        + (n - 1) * (n - 2)
        + 1 * n
        + 2 * n
        + 1 * n
        + n * (2 * 2 + 1 + 1);
    // proof: 2(2(n-3)) + 2(2(2n-2)) + (n-1)(n-2) + (n-3)(2(n-2)) + 1(n) + 2(n) + 2(n) + n(2(2)+1+1)
    let e_proof = shared
        + 2 * (2 * (n - 3))
        + 2 * (2 * (2 * n - 2))
        + (n - 1) * (n - 2)
        + (n - 3) * (2 * (n - 2))
        + 1 * n
        + 2 * n
        + 2 * n
        + n * (2 * 2 + 1 + 1);

    // statement: 2(2+2) + (n-2)(1+2+1) + 1(2(n-2) + 2 + 1(n) + 1(n) + 1(n))
    let f = shared + 2 * (2 + 2) + (n - 2) * (1 + 2 + 1) + 1 * (2 * (n - 2) + 2 + 1 * n + 1 * n + 1 * n);
    // proof: 2(2+2) + (n-2)(1+2+1) + 1((n-2)(n-3)) + 1 x 2 + 1 x n + 2(n-1) + 2(n) + 2(n)
    let f_proof = shared
        + 2 * (2 + 2)
        + (n - 2) * (1 + 2 + 1)
        + 1 * ((n - 2) * (n - 3))
        + 1 * 2
        + 1 * n
        + 2 * (n - 1)
        + 2 * n
        + 2 * n;

    let variant = |stmt: i64, proof: i64| (stmt, (proof != stmt).then_some(proof));
    [(a, None), (b, None), (c, None), variant(d, d_proof), variant(e, e_proof), variant(f, f_proof)]
}

/// A..F for the parity of n.
pub fn predict_degrees(n: usize) -> [DegreePrediction; 6] {
    let values = match Parity::of(n) {
        Parity::Odd => degrees_odd(n as i64),
        Parity::Even => degrees_even(n as i64),
    };
    core::array::from_fn(|i| {
        let class = DegreeClass::ALL[i];
        DegreePrediction { class, label: class.label(), value: values[i].0, proof_variant: values[i].1 }
    })
}

/// Class sizes (center, R, S) for D_n, used by the degree-sum consistency check.
pub fn class_sizes(n: usize) -> [usize; 3] {
    match Parity::of(n) {
        Parity::Odd => [1, n - 1, n],
        Parity::Even => [2, n - 2, n],
    }
}

/// Sum over classes of size x predicted degree, against 3 x predicted total.
pub fn degree_sum_consistency(n: usize) -> (i64, i64) {
    let sizes = class_sizes(n);
    let lhs = predict_degrees(n).iter().enumerate().map(|(i, d)| sizes[i % 3] as i64 * d.value).sum();
    (lhs, 3 * predict_total_edges(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantPrediction {
    pub alpha: PredictedValue,
    /// Even n only: the proof's closing line.
    pub alpha_proof: Option<PredictedValue>,
    pub tau: PredictedValue,
    pub rho: PredictedValue,
    pub nu: PredictedValue,
    pub chi_weak: PredictedValue,
    pub chi_strong: PredictedValue,
}

impl InvariantPrediction {
    pub fn get(&self, kind: InvariantKind) -> PredictedValue {
        match kind {
            InvariantKind::Independence => self.alpha,
            InvariantKind::Transversal => self.tau,
            InvariantKind::Covering => self.rho,
            InvariantKind::Matching => self.nu,
            InvariantKind::WeakChromatic => self.chi_weak,
            InvariantKind::StrongChromatic => self.chi_strong,
        }
    }

    pub fn alternate(&self, kind: InvariantKind) -> Option<PredictedValue> {
        match kind {
            InvariantKind::Independence => self.alpha_proof,
            _ => None,
        }
    }

    /// Highest power of w2 in the matching polynomial, i.e. the predicted nu.
    pub fn matching_polynomial_degree(&self) -> PredictedValue {
        self.nu
    }
}

pub fn predict_invariants(n: usize) -> InvariantPrediction {
    let m = n as i64;
    let int = PredictedValue::integer;
    let ratio = PredictedValue::ratio;
    let rho = int(m + m.div_euclid(3) + i64::from(m % 3 != 0));
    let nu = int(m + m / 3);
    let chi_strong = int(4 * m);
    match Parity::of(n) {
        Parity::Even => InvariantPrediction {
            // n/2 + 4
            alpha: ratio(m + 8, 2),
            // n/4 + 4
            alpha_proof: Some(ratio(m + 16, 4)),
            // 7n/2 - 4
            tau: ratio(7 * m - 8, 2),
            rho,
            nu,
            // 7n/4 - 1
            chi_weak: ratio(7 * m - 4, 4),
            chi_strong,
        },
        Parity::Odd => InvariantPrediction {
            alpha: int(m + 2),
            alpha_proof: None,
            tau: int(3 * m - 2),
            rho,
            nu,
            chi_weak: int(3 * m - 1),
            chi_strong,
        },
    }
}
