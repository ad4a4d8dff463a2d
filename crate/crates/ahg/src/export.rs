//! Hypergraph file formats. Output is a pure function of the hypergraph, so
//! repeated exports are byte-identical.

use std::io::{self, Write};
use std::str::FromStr;

use ahg_core::AssociatingHypergraph;
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    /// Vertex names plus every ordered triple, as JSON.
    EdgeJson,
    /// Vertex-by-support-edge 0/1 matrix.
    IncidenceCsv,
    /// One "a b c m" line per support edge, m = multiplicity.
    SupportList,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Self as ValueEnum>::from_str(s, false).map_err(|_| format!("unknown export format '{s}'"))
    }
}

pub fn export<W: Write>(h: &AssociatingHypergraph, n: usize, format: ExportFormat, out: W) -> io::Result<()> {
    match format {
        ExportFormat::EdgeJson => edge_json(h, n, out),
        ExportFormat::IncidenceCsv => incidence_csv(h, out),
        ExportFormat::SupportList => support_list(h, out),
    }
}

pub fn export_to_vec(h: &AssociatingHypergraph, n: usize, format: ExportFormat) -> Vec<u8> {
    let mut buf = Vec::new();
    export(h, n, format, &mut buf).expect("writing to a Vec cannot fail");
    buf
}

// Hand-formatted so each triple sits on its own line.
fn edge_json<W: Write>(h: &AssociatingHypergraph, n: usize, mut out: W) -> io::Result<()> {
    let names = serde_json::to_string(h.source().names()).map_err(io::Error::other)?;
    writeln!(out, "{{")?;
    writeln!(out, "  \"n\": {n},")?;
    writeln!(out, "  \"vertex_count\": {},", h.vertex_count())?;
    writeln!(out, "  \"vertices\": {names},")?;
    writeln!(out, "  \"directed_edge_count\": {},", h.directed_edges().len())?;
    writeln!(out, "  \"directed_edges\": [")?;
    let edges = h.directed_edges();
    for (i, e) in edges.iter().enumerate() {
        let [a, b, c] = e.triple;
        let sep = if i + 1 < edges.len() { "," } else { "" };
        writeln!(out, "    [{a}, {b}, {c}]{sep}")?;
    }
    writeln!(out, "  ]")?;
    writeln!(out, "}}")
}

fn incidence_csv<W: Write>(h: &AssociatingHypergraph, out: W) -> io::Result<()> {
    let support = h.support();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![String::from("vertex")];
    header.extend((0..support.edge_count()).map(|i| format!("e{i}")));
    w.write_record(&header)?;
    for v in 0..h.vertex_count() {
        let mut record = vec![h.source().name(v).to_string()];
        record.extend(support.edges().iter().map(|e| if e.contains(&v) { "1" } else { "0" }.to_string()));
        w.write_record(&record)?;
    }
    w.flush()
}

fn support_list<W: Write>(h: &AssociatingHypergraph, mut out: W) -> io::Result<()> {
    for (e, m) in h.support().edges().iter().zip(h.multiplicity()) {
        writeln!(out, "{} {} {} {m}", e[0], e[1], e[2])?;
    }
    Ok(())
}
