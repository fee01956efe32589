//! Edge-list ingestion, random graph generation and output writers.
//!
//! Input is line oriented: blank lines and lines starting with the comment
//! character are skipped, every other line holds two non-negative integer ids
//! separated by whitespace. Self-loops and repeated edges are dropped.
//!
//! Random graphs are G(n, p) drawn from ChaCha8 seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. Pairs `(u, v)` with `u < v` are visited
//! in lexicographic order and each consumes one `next_u64()`; the pair becomes
//! an edge when the top 53 bits, read as a fraction of 2^53, are below `p`.
//! The same `(n, p, seed)` therefore gives the same graph everywhere.

use std::collections::HashMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use flate2::read::MultiGzDecoder;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GraphError, IngestError};
use crate::graph::EditableGraph;

/// Parser settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    pub comment: char,
    /// Take the first two tokens of lines that have more.
    pub lenient: bool,
    /// Map the distinct ids, ascending, onto `0..n`.
    pub renumber: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            comment: '#',
            lenient: false,
            renumber: true,
        }
    }
}

/// Counts gathered while parsing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseStats {
    pub lines: usize,
    pub edges_read: usize,
    pub edges_kept: usize,
    pub self_loops: usize,
    pub duplicates: usize,
}

/// A parsed graph with the file id of every vertex when renumbered.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: EditableGraph,
    /// `labels[v]` is the id vertex `v` had in the file.
    pub labels: Option<Vec<u64>>,
    pub stats: ParseStats,
}

fn parse_id(token: &str, line: usize) -> Result<u64, IngestError> {
    token.parse::<u64>().map_err(|_| IngestError::BadToken {
        line,
        token: token.to_string(),
    })
}

/// Reads an edge list line by line.
pub fn parse_edge_list<R: BufRead>(mut input: R, opts: ParseOptions) -> Result<ParsedGraph, IngestError> {
    let mut stats = ParseStats::default();
    let mut pairs: Vec<(u64, u64)> = Vec::new();
    let mut line = String::new();
    loop {
        line.clear();
        let read = input
            .read_line(&mut line)
            .map_err(|e| IngestError::io(format!("reading line {}", stats.lines + 1), e))?;
        if read == 0 {
            break;
        }
        stats.lines += 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with(opts.comment) {
            continue;
        }
        let mut tokens = text.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(IngestError::WrongArity {
                    line: stats.lines,
                    found: 1,
                })
            }
        };
        let extra = tokens.count();
        if extra > 0 && !opts.lenient {
            return Err(IngestError::WrongArity {
                line: stats.lines,
                found: 2 + extra,
            });
        }
        pairs.push((parse_id(a, stats.lines)?, parse_id(b, stats.lines)?));
    }
    stats.edges_read = pairs.len();

    let (n, labels, edges): (usize, Option<Vec<u64>>, Vec<(u32, u32)>) = if opts.renumber {
        let mut ids: Vec<u64> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() > u32::MAX as usize {
            return Err(GraphError::TooManyVertices(ids.len() as u64).into());
        }
        let index: HashMap<u64, u32> = ids.iter().enumerate().map(|(i, &id)| (id, i as u32)).collect();
        let edges = pairs.iter().map(|(a, b)| (index[a], index[b])).collect();
        (ids.len(), Some(ids), edges)
    } else {
        let max = pairs.iter().flat_map(|&(a, b)| [a, b]).max();
        if let Some(m) = max {
            if m >= u32::MAX as u64 {
                return Err(GraphError::TooManyVertices(m + 1).into());
            }
        }
        let n = max.map_or(0, |m| m as usize + 1);
        (n, None, pairs.iter().map(|&(a, b)| (a as u32, b as u32)).collect())
    };
    drop(pairs);

    let (graph, (loops, dups)) = EditableGraph::from_edges_with_n(n, edges)?;
    stats.self_loops = loops;
    stats.duplicates = dups;
    stats.edges_kept = graph.m();
    Ok(ParsedGraph { graph, labels, stats })
}

/// Opens `path` for reading; `-` is stdin and a `.gz` suffix means gzip.
pub fn open_input(path: &str) -> Result<Box<dyn BufRead>, IngestError> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).map_err(|e| IngestError::io(format!("opening {path}"), e))?;
    if Path::new(path).extension().is_some_and(|e| e == "gz") {
        Ok(Box::new(BufReader::new(MultiGzDecoder::new(file))))
    } else {
        Ok(Box::new(BufReader::new(file)))
    }
}

/// Parses the edge list at `path` (see [`open_input`]).
pub fn read_edge_list(path: &str, opts: ParseOptions) -> Result<ParsedGraph, IngestError> {
    parse_edge_list(open_input(path)?, opts).map_err(|e| match e {
        IngestError::Io { context, source } => IngestError::Io {
            context: format!("{path}: {context}"),
            source,
        },
        other => other,
    })
}

/// Erdős–Rényi G(n, p); see the module docs for the exact sampling procedure.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<EditableGraph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::BadProbability(p));
    }
    if n > u32::MAX as usize {
        return Err(GraphError::TooManyVertices(n as u64));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = 1.0 / (1u64 << 53) as f64;
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if ((rng.next_u64() >> 11) as f64 * scale) < p {
                edges.push((u, v));
            }
        }
    }
    Ok(EditableGraph::from_edges_with_n(n, edges)?.0)
}

/// How [`write_cliques`] renders its input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputMode {
    /// One clique per line, members ascending, lines in lexicographic order.
    #[default]
    Canonical,
    /// A single line with the number of cliques.
    Count,
}

/// Writes cliques, translating ids through `labels` when given.
pub fn write_cliques<W: Write>(
    mut out: W,
    cliques: &[Vec<u32>],
    labels: Option<&[u64]>,
    mode: OutputMode,
) -> Result<(), IngestError> {
    let ctx = |e| IngestError::io("writing cliques", e);
    match mode {
        OutputMode::Count => writeln!(out, "{}", cliques.len()).map_err(ctx)?,
        OutputMode::Canonical => {
            let mut rows: Vec<Vec<u64>> = cliques
                .iter()
                .map(|c| {
                    let mut row: Vec<u64> = match labels {
                        Some(l) => c.iter().map(|&v| l[v as usize]).collect(),
                        None => c.iter().map(|&v| v as u64).collect(),
                    };
                    row.sort_unstable();
                    row
                })
                .collect();
            rows.sort_unstable();
            for row in rows {
                let line: Vec<String> = row.iter().map(u64::to_string).collect();
                writeln!(out, "{}", line.join(" ")).map_err(ctx)?;
            }
        }
    }
    out.flush().map_err(ctx)
}

/// Writes the live edges as `u v` lines, `u < v`, ascending.
pub fn write_edge_list<W: Write>(mut out: W, g: &EditableGraph, labels: Option<&[u64]>) -> Result<(), IngestError> {
    let ctx = |e| IngestError::io("writing edge list", e);
    let label = |v: u32| labels.map_or(v as u64, |l| l[v as usize]);
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", label(u), label(v)).map_err(ctx)?;
    }
    out.flush().map_err(ctx)
}

/// Writes the renumbering as `dense_id original_id` lines.
pub fn write_id_map<W: Write>(mut out: W, labels: &[u64]) -> Result<(), IngestError> {
    let ctx = |e| IngestError::io("writing id map", e);
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "{i} {l}").map_err(ctx)?;
    }
    out.flush().map_err(ctx)
}
