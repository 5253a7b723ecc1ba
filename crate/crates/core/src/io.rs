//! Text formats: signed graph files and spectrum documents.
//!
//! A graph file holds the node count on its first line and one edge `u v s`
//! per following line, `s` being `+` or `-`. `#` starts a comment; blank lines
//! are ignored; LF and CRLF line ends are accepted. The unsigned variant has
//! edges `u v` and makes every edge positive.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{MatrixKind, Sign, SignedGraph};
use crate::spectra::{Discrepancy, Method, SpectrumReport};
use crate::spectrum::Eigenvalue;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("invalid node index `{tok}`")))
}

fn parse_with(text: &str, signed: bool) -> Result<SignedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing node count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(header_line, format!("invalid node count `{header}`")))?;
    let mut g = SignedGraph::empty(n);
    for (line, content) in lines {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let (u, v, s) = match (signed, toks.as_slice()) {
            (true, [u, v, s]) => {
                let sign = match *s {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(parse_err(line, format!("invalid sign `{other}`"))),
                };
                (*u, *v, sign)
            }
            (false, [u, v]) => (*u, *v, Sign::Plus),
            (true, _) => return Err(parse_err(line, "expected `u v s`")),
            (false, _) => return Err(parse_err(line, "expected `u v`")),
        };
        let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
        g.add_edge(u, v, s).map_err(|e| match e {
            Error::IndexOutOfRange { .. } => parse_err(line, "index out of range"),
            Error::SelfLoop(_) => parse_err(line, "self-loop"),
            Error::DuplicateEdge(..) => parse_err(line, "duplicate edge"),
            other => other,
        })?;
    }
    Ok(g)
}

pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    parse_with(text, true)
}

/// Parses raw bytes, rejecting invalid UTF-8.
pub fn parse_graph_bytes(bytes: &[u8]) -> Result<SignedGraph> {
    let text = std::str::from_utf8(bytes).map_err(|e| parse_err(1, format!("invalid UTF-8: {e}")))?;
    parse_graph(text)
}

/// All-positive graph from a `u v` edge list with a node-count header.
pub fn parse_unsigned_edge_list(text: &str) -> Result<SignedGraph> {
    parse_with(text, false)
}

pub fn render_graph(g: &SignedGraph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v, s) in g.edges() {
        out.push_str(&format!("{u} {v} {s}\n"));
    }
    out
}

/// Hex SHA-256 of an input file's bytes.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(name: impl Into<String>, bytes: &[u8]) -> Self {
        InputDigest { name: name.into(), sha256: digest(bytes) }
    }
}

/// Serialized spectrum. Values are written in shortest round-trip form, so a
/// document parses back to bit-identical eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDocument {
    pub matrix: MatrixKind,
    pub method: Method,
    pub order: usize,
    pub eigenvalues: Vec<Eigenvalue>,
    pub discrepancies: Vec<Discrepancy>,
    pub inputs: Vec<InputDigest>,
}

impl SpectrumDocument {
    pub fn new(matrix: MatrixKind, report: &SpectrumReport, inputs: Vec<InputDigest>) -> Self {
        SpectrumDocument {
            matrix,
            method: report.method,
            order: report.spectrum.total(),
            eigenvalues: report.spectrum.pairs().to_vec(),
            discrepancies: report.discrepancies.clone(),
            inputs,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
