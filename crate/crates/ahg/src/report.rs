//! Text and JSON renderings of verification reports.

use std::fmt::Write;

use ahg_core::verify::{Tally, VerificationReport};
use ahg_core::Witness;
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Structured,
}

pub fn render(reports: &[VerificationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => render_table(reports),
        ReportFormat::Structured => render_structured(reports),
    }
}

/// A JSON array with one object per report, keys matching the report fields.
pub fn render_structured(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

pub fn summary(reports: &[VerificationReport]) -> Tally {
    reports.iter().map(VerificationReport::tally).fold(Tally::default(), Tally::merge)
}

pub fn witness_summary(w: &Witness, names: &[String]) -> String {
    match w {
        Witness::Vertices(vs) => {
            let list: Vec<&str> = vs.iter().map(|&v| names[v].as_str()).collect();
            format!("{{{}}}", list.join(" "))
        }
        Witness::Edges(es) => {
            let list: Vec<String> =
                es.iter().map(|e| format!("{} {} {}", names[e[0]], names[e[1]], names[e[2]])).collect();
            format!("[{}]", list.join("; "))
        }
        Witness::Coloring(cs) => {
            let list: Vec<String> = cs.iter().map(usize::to_string).collect();
            format!("colors [{}]", list.join(" "))
        }
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn render_table(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        write_report(&mut s, r).expect("writing to a String cannot fail");
    }
    let t = summary(reports);
    let _ = writeln!(
        s,
        "summary: {} report(s), {} MATCH, {} MISMATCH, {} INCONCLUSIVE",
        reports.len(),
        t.matches,
        t.mismatches,
        t.inconclusive
    );
    s
}

fn write_report(s: &mut String, r: &VerificationReport) -> std::fmt::Result {
    let names: Vec<String> = names_for(r);
    writeln!(s, "== M(D_{},2)  n={} ({})  |V|={}  budget={}", r.n, r.n, r.parity, r.vertex_count, r.budget)?;
    writeln!(s, "note: {}", r.edge_semantics)?;
    writeln!(
        s,
        "directed edges: enumerated {}  predicted {}  {}  (support edges {})",
        r.totals.enumerated, r.totals.predicted, r.totals.verdict, r.totals.support_edges
    )?;

    writeln!(s, "\ncases")?;
    writeln!(s, "  {:<4} {:<8} {:>10} {:>10}  verdict", "id", "pattern", "enumerated", "predicted")?;
    for c in &r.cases {
        let pattern = format!("{}{}{}", c.pattern[0], c.pattern[1], c.pattern[2]);
        writeln!(s, "  {:<4} {:<8} {:>10} {:>10}  {}", c.case_id, pattern, c.enumerated, c.predicted, c.verdict)?;
    }

    writeln!(s, "\ndegrees (directed degree compared)")?;
    writeln!(
        s,
        "  {:<2} {:<14} {:>7} {:>12} {:>12} {:>9}  {:<12} {:>6}  proof verdict",
        "", "class", "members", "directed", "support", "predicted", "verdict", "proof"
    )?;
    for d in &r.degrees {
        writeln!(
            s,
            "  {:<2} {:<14} {:>7} {:>12} {:>12} {:>9}  {:<12} {:>6}  {}",
            d.label,
            d.class.to_string(),
            d.members.len(),
            d.directed.to_string(),
            d.support.to_string(),
            d.predicted,
            d.verdict.to_string(),
            opt(d.proof_variant),
            opt(d.proof_verdict)
        )?;
    }

    writeln!(s, "\ninvariants (support hypergraph)")?;
    writeln!(
        s,
        "  {:<10} {:>8} {:>9}  {:<12} {:>9}  {:<12} {:>12}  witness",
        "name", "computed", "predicted", "verdict", "alternate", "alt verdict", "nodes"
    )?;
    for i in &r.invariants {
        let nodes = if i.budget_exhausted { format!("{}+", i.nodes_explored) } else { i.nodes_explored.to_string() };
        writeln!(
            s,
            "  {:<10} {:>8} {:>9}  {:<12} {:>9}  {:<12} {:>12}  {}",
            i.name.to_string(),
            i.computed,
            i.predicted.to_string(),
            i.verdict.to_string(),
            opt(i.alternate_predicted),
            opt(i.alternate_verdict),
            nodes,
            witness_summary(&i.witness, &names)
        )?;
    }

    writeln!(s, "\nlemmas")?;
    for l in &r.lemmas {
        writeln!(s, "  {:<22} {:<12}  {}", l.name, l.verdict.to_string(), l.detail)?;
    }
    writeln!(s, "\nformula checks")?;
    for f in &r.formula_checks {
        writeln!(s, "  {:<22} {:<12}  lhs {} rhs {}", f.name, f.verdict.to_string(), f.lhs, f.rhs)?;
    }

    let p = &r.matching_polynomial;
    writeln!(s, "\nmatching polynomial")?;
    writeln!(s, "  coefficients: {:?}", p.coefficients)?;
    writeln!(s, "  polynomial:   {}", p.rendered)?;
    writeln!(
        s,
        "  degree {} vs predicted nu {}  {}  (nodes {}{})",
        p.computed_degree,
        p.predicted_degree,
        p.verdict,
        p.nodes_explored,
        if p.budget_exhausted { ", budget exhausted, partial counts" } else { "" }
    )?;
    let t = r.tally();
    writeln!(s, "\nn={}: {} MATCH, {} MISMATCH, {} INCONCLUSIVE\n", r.n, t.matches, t.mismatches, t.inconclusive)
}

// Reports hold indices only; names are rebuilt from the loop.
fn names_for(r: &VerificationReport) -> Vec<String> {
    let (g, _) = ahg_core::dihedral_group(r.n).expect("report n >= 3");
    ahg_core::moufang_extension(&g).names().to_vec()
}
