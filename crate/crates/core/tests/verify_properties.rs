use ahg_core::formulas::Parity;
use ahg_core::invariants::{Budget, InvariantKind};
use ahg_core::verify::{case_breakdown, degree_class_check, DegreeObservation, Verdict};
use ahg_core::{dihedral_group, moufang_extension, run_range, AssociatingHypergraph};

#[test]
fn range_reports_three_to_six() {
    // small budget: the matching polynomial may stop early, everything else finishes
    let reports = run_range(3, 6, Budget(2_000_000)).unwrap();
    assert_eq!(reports.iter().map(|r| r.n).collect::<Vec<_>>(), vec![3, 4, 5, 6]);
    for r in &reports {
        assert_eq!(r.parity, if r.n % 2 == 0 { Parity::Even } else { Parity::Odd });
        assert_eq!((r.cases.len(), r.degrees.len(), r.invariants.len(), r.lemmas.len()), (8, 6, 6, 3));

        let case_sum: usize = r.cases.iter().map(|c| c.enumerated).sum();
        assert_eq!(case_sum, r.totals.enumerated);
        let c: Vec<usize> = r.cases.iter().map(|c| c.enumerated).collect();
        assert!(c[1] == c[2] && c[2] == c[3], "n={} cases 2-4: {c:?}", r.n);
        assert!(c[4] == c[5] && c[5] == c[6], "n={} cases 5-7: {c:?}", r.n);

        // handshake: summed directed degrees = 3 * directed edges
        let degree_sum: usize = r
            .degrees
            .iter()
            .map(|d| match &d.directed {
                DegreeObservation::Uniform(v) => v * d.members.len(),
                DegreeObservation::NonUniform(groups) => groups.iter().map(|(v, k)| v * k).sum(),
            })
            .sum();
        assert_eq!(degree_sum, 3 * r.totals.enumerated);
        assert_eq!(r.degrees.iter().map(|d| d.members.len()).sum::<usize>(), 4 * r.n);

        let alpha = r.invariant(InvariantKind::Independence).unwrap();
        let tau = r.invariant(InvariantKind::Transversal).unwrap();
        assert!(!alpha.budget_exhausted && !tau.budget_exhausted);
        assert_eq!(alpha.computed + tau.computed, 4 * r.n);
        assert!(r.lemmas.iter().all(|l| l.verdict == Verdict::Match), "n={}", r.n);

        for row in &r.invariants {
            assert_eq!(row.budget_exhausted, row.verdict == Verdict::Inconclusive);
        }
        assert_eq!(r.matching_polynomial.budget_exhausted, r.matching_polynomial.verdict == Verdict::Inconclusive);
    }
}

#[test]
fn breakdown_and_degree_rows_agree_with_build() {
    for n in 3..=6 {
        let (g, p) = dihedral_group(n).unwrap();
        let h = AssociatingHypergraph::build(&moufang_extension(&g));
        assert_eq!(case_breakdown(&h).unwrap().total(), h.directed_edges().len());
        let rows = degree_class_check(&h, &p).unwrap();
        let degrees = h.degrees();
        for row in rows {
            for &v in &row.members {
                assert_eq!(row.directed.uniform(), Some(degrees.directed_degree[v]), "n={n} {}", row.label);
            }
        }
    }
}
