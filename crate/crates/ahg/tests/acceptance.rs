//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::process::Command;
use std::time::{Duration, Instant};

use ahg_core::formulas::predict_invariants;
use ahg_core::invariants::{
    check_witness, covering_number, independence_number, matching_number, matching_polynomial, strong_chromatic_number,
    transversal_number, weak_chromatic_number, Budget, InvariantKind, Witness,
};
use ahg_core::verify::{case_breakdown, run_verification, Verdict, VerificationReport};
use ahg_core::{dihedral_group, moufang_extension, AssociatingHypergraph, Hypergraph};
use oracle::Oracle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<f64, String> {
    let secs = start.elapsed().as_secs_f64();
    ensure(start.elapsed() < limit, || format!("{what} took {secs:.2}s, limit {}s", limit.as_secs()))?;
    Ok(secs)
}

fn hypergraph(n: usize) -> AssociatingHypergraph {
    let (g, _) = dihedral_group(n).unwrap();
    AssociatingHypergraph::build(&moufang_extension(&g))
}

fn construction() -> Outcome {
    let start = Instant::now();
    let mut witnesses = Vec::new();
    for n in 3..=6 {
        let (g, _) = dihedral_group(n).unwrap();
        let l = moufang_extension(&g);
        l.table().check_latin().map_err(|e| format!("n={n}: {e}"))?;
        let e = l.identity();
        ensure((0..l.order()).all(|x| l.product(e, x) == x && l.product(x, e) == x), || format!("n={n}: identity"))?;
        let m = l.check_moufang_identities();
        ensure(m.holds(), || format!("n={n}: {:?}", m.counterexample))?;
        let (x, y, z) = l.nonassociative_witness().ok_or(format!("n={n}: associative"))?;
        witnesses.push(format!("n={n} ({},{},{})", l.name(x), l.name(y), l.name(z)));
    }
    let secs = within(start, Duration::from_secs(5), "construction")?;
    Ok(format!("n=3..6 Latin, identity, Moufang; nonassociative witnesses {}; {secs:.2}s", witnesses.join(", ")))
}

fn enumeration() -> Outcome {
    let start = Instant::now();
    let (g, _) = dihedral_group(3).unwrap();
    let l = moufang_extension(&g);
    let mut brute = 0;
    for x in 0..12 {
        for y in 0..12 {
            for z in 0..12 {
                if x != y && y != z && x != z && l.associates(x, y, z).unwrap() {
                    brute += 1;
                }
            }
        }
    }
    let secs = within(start, Duration::from_secs(1), "brute-force scan")?;
    let h = AssociatingHypergraph::build(&l);
    ensure(brute == h.directed_edges().len(), || format!("scan {brute} vs build {}", h.directed_edges().len()))?;
    let b = case_breakdown(&h).map_err(|e| e.to_string())?;
    ensure(b.blocks_symmetric(), || format!("case blocks differ: {:?}", b.counts))?;

    let r = run_verification(3, Budget::DEFAULT).map_err(|e| e.to_string())?;
    let predicted: Vec<i64> = r.cases.iter().map(|c| c.predicted).collect();
    ensure(predicted == [120, 72, 72, 72, 72, 72, 72, 15], || format!("predicted cases {predicted:?}"))?;
    ensure(r.totals.predicted == 567, || format!("predicted total {}", r.totals.predicted))?;
    let rows: Vec<String> =
        r.cases.iter().map(|c| format!("{}:{}/{} {}", c.case_id, c.enumerated, c.predicted, c.verdict)).collect();
    Ok(format!(
        "{brute} directed edges in {secs:.3}s (predicted {}, {}); cases {}",
        r.totals.predicted,
        r.totals.verdict,
        rows.join(", ")
    ))
}

fn alpha_plus_tau(reports: &[VerificationReport]) -> Outcome {
    let mut parts = Vec::new();
    for r in reports {
        let a = r.invariant(InvariantKind::Independence).unwrap();
        let t = r.invariant(InvariantKind::Transversal).unwrap();
        ensure(!a.budget_exhausted && !t.budget_exhausted, || format!("n={}: solver not optimal", r.n))?;
        ensure(a.computed + t.computed == 4 * r.n, || {
            format!("n={}: {} + {} != {}", r.n, a.computed, t.computed, 4 * r.n)
        })?;
        parts.push(format!("n={}: {} + {} = {}", r.n, a.computed, t.computed, 4 * r.n));
    }
    Ok(parts.join("; "))
}

fn distance(reports: &[VerificationReport]) -> Outcome {
    for n in 3..=5 {
        let h = hypergraph(n);
        let v = h.vertex_count();
        for a in 0..v {
            for b in a + 1..v {
                let d = h.distance(a, b).unwrap();
                ensure(d == Some(1), || format!("n={n}: d({a},{b}) = {d:?}"))?;
            }
        }
    }
    let mut parts = Vec::new();
    for r in reports {
        let s = r.invariant(InvariantKind::StrongChromatic).unwrap();
        ensure(!s.budget_exhausted && s.computed == 4 * r.n && s.verdict == Verdict::Match, || {
            format!("n={}: chi-strong {} ({})", r.n, s.computed, s.verdict)
        })?;
        parts.push(format!("chi-strong({}) = {} MATCH", r.n, s.computed));
    }
    Ok(format!("all pairs at distance 1 for n=3..5; {}", parts.join(", ")))
}

fn reconciliation(reports: &[VerificationReport], rerun: &[VerificationReport]) -> Outcome {
    let expected: [(usize, [(InvariantKind, i64); 5]); 2] = [
        (
            3,
            [
                (InvariantKind::Independence, 5),
                (InvariantKind::Transversal, 7),
                (InvariantKind::Covering, 4),
                (InvariantKind::Matching, 4),
                (InvariantKind::WeakChromatic, 8),
            ],
        ),
        (
            4,
            [
                (InvariantKind::Independence, 6),
                (InvariantKind::Transversal, 10),
                (InvariantKind::Covering, 6),
                (InvariantKind::Matching, 5),
                (InvariantKind::WeakChromatic, 6),
            ],
        ),
    ];
    let mut parts = Vec::new();
    for (r, (n, rows)) in reports.iter().zip(expected) {
        let h = hypergraph(n);
        let predictions = predict_invariants(n);
        for (kind, value) in rows {
            ensure(predictions.get(kind).as_integer() == Some(value), || format!("n={n} {kind}: prediction drifted"))?;
            let row = r.invariant(kind).unwrap();
            ensure(row.verdict != Verdict::Inconclusive, || format!("n={n} {kind}: INCONCLUSIVE"))?;
            check_witness(h.support(), kind, &row.witness, row.computed).map_err(|e| format!("n={n} {kind}: {e}"))?;
            parts.push(format!("n={n} {kind} {}/{} {}", row.computed, value, row.verdict));
        }
    }
    ensure(reports == rerun, || "rerun differs".to_string())?;
    Ok(format!("{}; witnesses verified; rerun identical", parts.join(", ")))
}

fn polynomial(reports: &[VerificationReport]) -> Outcome {
    let r = &reports[0];
    let h = hypergraph(3);
    let p = &r.matching_polynomial;
    let nu = r.invariant(InvariantKind::Matching).unwrap();
    ensure(!p.budget_exhausted, || "budget exhausted".to_string())?;
    ensure(p.coefficients[0] == 1, || format!("a_0 = {}", p.coefficients[0]))?;
    ensure(p.coefficients[1] == r.totals.support_edges as u128, || format!("a_1 = {}", p.coefficients[1]))?;
    ensure(p.computed_degree == nu.computed, || format!("degree {} vs nu {}", p.computed_degree, nu.computed))?;
    let Witness::Edges(edges) = &nu.witness else { return Err("nu witness is not a matching".to_string()) };
    ensure(edges.len() == nu.computed, || "witness size".to_string())?;
    check_witness(h.support(), InvariantKind::Matching, &nu.witness, nu.computed).map_err(|e| e.to_string())?;
    Ok(format!("coefficients {:?}; degree {} = nu; witness matching re-validated", p.coefficients, p.computed_degree))
}

fn degrees(reports: &[VerificationReport]) -> Outcome {
    let mut parts = Vec::new();
    for r in reports {
        ensure(r.degrees.len() == 6, || format!("n={}: {} degree rows", r.n, r.degrees.len()))?;
        for d in &r.degrees {
            ensure(d.verdict != Verdict::Inconclusive, || format!("n={} {}: inconclusive", r.n, d.label))?;
            if r.n % 2 == 0 && ["D", "E", "F"].contains(&d.label) {
                ensure(d.proof_variant.is_some() && d.proof_verdict.is_some(), || {
                    format!("n={} {}: no proof row", r.n, d.label)
                })?;
            }
            parts.push(format!("n={} {} {}/{} {}", r.n, d.label, d.directed, d.predicted, d.verdict));
        }
    }
    let c = &reports[0].degrees[2];
    ensure(c.label == "C" && c.predicted == 69, || format!("C at n=3 predicted {}", c.predicted))?;
    Ok(parts.join(", "))
}

fn random_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let b = Budget::DEFAULT;
    for case in 0..200 {
        let n = rng.gen_range(3..=12);
        let m = rng.gen_range(0..=20);
        let mut edges = Vec::new();
        while edges.len() < m {
            let t = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
            if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
                edges.push(t);
            }
        }
        let h = Hypergraph::new(n, edges.iter().copied()).unwrap();
        let o = Oracle::new(n, &edges);
        let fail = |what: &str| format!("case {case}: {what} on n={n} edges={edges:?}");
        let results = [
            (independence_number(&h, b).unwrap(), o.independence()),
            (transversal_number(&h, b).unwrap(), o.transversal()),
            (matching_number(&h, b).unwrap(), o.matching()),
            (weak_chromatic_number(&h, b).unwrap(), o.weak_chromatic()),
            (strong_chromatic_number(&h, b).unwrap(), o.strong_chromatic()),
        ];
        for (r, expected) in results {
            ensure(r.value == expected && !r.budget_exhausted, || fail(r.kind.tag()))?;
            r.check(&h).map_err(|e| fail(&e.to_string()))?;
        }
        match (covering_number(&h, b), o.covering()) {
            (Ok(r), Some(x)) => ensure(r.value == x, || fail("rho"))?,
            (Err(_), None) => {}
            _ => return Err(fail("rho feasibility")),
        }
        let p = matching_polynomial(&h, b).unwrap();
        let counts: Vec<u64> = p.coefficients.iter().map(|&c| c as u64).collect();
        ensure(counts == o.matching_counts(), || fail("matching polynomial"))?;
    }
    let secs = within(start, Duration::from_secs(120), "oracle suite")?;
    Ok(format!("200 random hypergraphs (<=12 vertices, <=20 edges) agree on all 7 quantities; {secs:.2}s"))
}

fn determinism() -> Outcome {
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let o = Command::new(env!("CARGO_BIN_EXE_ahg"))
            .args(args)
            .env_remove("AHG_BUDGET")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(o.status.success(), || format!("{args:?} exited {:?}", o.status.code()))?;
        Ok(o.stdout)
    };
    for args in [&["build", "--n", "3"][..], &["verify", "--n-min", "3", "--n-max", "3"][..]] {
        let (a, b) = (run(args)?, run(args)?);
        ensure(!a.is_empty() && a == b, || format!("{args:?} output differs"))?;
    }
    Ok("build --n 3 and verify --n-min 3 --n-max 3 byte-identical across two runs".to_string())
}

fn main() {
    let start = Instant::now();
    let reports: Vec<VerificationReport> =
        [3, 4].iter().map(|&n| run_verification(n, Budget::DEFAULT).unwrap()).collect();
    let verify_secs = start.elapsed().as_secs_f64();
    let rerun: Vec<VerificationReport> =
        [3, 4].iter().map(|&n| run_verification(n, Budget::DEFAULT).unwrap()).collect();

    let criteria: Vec<(&str, Outcome)> = vec![
        ("construction", construction()),
        ("edge enumeration oracle", enumeration()),
        ("alpha + tau = |V|", alpha_plus_tau(&reports)),
        ("all-pairs distance", distance(&reports)),
        ("invariant reconciliation", reconciliation(&reports, &rerun)),
        ("matching polynomial", polynomial(&reports)),
        ("degree classes", degrees(&reports)),
        ("solver oracle equivalence", random_oracle()),
        ("determinism", determinism()),
    ];

    println!("acceptance: verify n=3,4 at default budget took {verify_secs:.2}s");
    let mut failed = 0;
    for (name, outcome) in &criteria {
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
