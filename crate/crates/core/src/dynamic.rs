//! In-recursion reduction of a subproblem `(R, P, X)`.
//!
//! Candidates with at most one neighbor inside P are settled on the spot:
//! their only possible maximal clique is reported (when it is maximal) and
//! they leave P. Afterwards every candidate adjacent to all other candidates
//! is moved into R. Removed candidates join X before X is narrowed, which
//! keeps R from being reported when a removed candidate still extends it.

use crate::graph::setops::{first_common, intersect_count, intersect_into, intersect_with, union_into, GALLOP_RATIO};
use crate::graph::CompactGraph;
use crate::sink::CliqueSink;
use crate::subproblem::Subproblem;

/// Per-vertex flags and buffers reused across calls; sized for one graph.
#[derive(Clone, Debug)]
pub struct DynamicScratch {
    marked: Vec<bool>,
    removed: Vec<bool>,
    cur: Vec<u32>,
    orig: Vec<u32>,
    members: Vec<u32>,
    delta: Vec<u32>,
    hoisted: Vec<u32>,
    buf: Vec<u32>,
    buf2: Vec<u32>,
}

impl DynamicScratch {
    pub fn new(n: usize) -> Self {
        DynamicScratch {
            marked: vec![false; n],
            removed: vec![false; n],
            cur: vec![0; n],
            orig: Vec::new(),
            members: Vec::new(),
            delta: Vec::new(),
            hoisted: Vec::new(),
            buf: Vec::new(),
            buf2: Vec::new(),
        }
    }
}

/// What one reduction call did.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DynamicOutcome {
    pub emitted: usize,
    pub removed: usize,
    pub hoisted: usize,
    /// Elements scanned by set intersections, Σ min(|A|, |B|).
    pub touches: u64,
}

/// Reduces `sub` in place.
///
/// With `strict_degree_one` a degree-one candidate whose partner also has an
/// X-neighbor is still removed: its clique is reported unless the two share
/// an X-neighbor.
pub fn dynamic_reduce(
    g: &CompactGraph,
    sub: &mut Subproblem,
    sink: &mut dyn CliqueSink,
    scratch: &mut DynamicScratch,
    strict_degree_one: bool,
) -> DynamicOutcome {
    reduce_parts(g, &mut sub.r, &mut sub.p, &mut sub.x, sink, scratch, strict_degree_one)
}

#[inline]
fn touch(a: &[u32], b: &[u32]) -> u64 {
    a.len().min(b.len()) as u64
}

fn emit_with(r: &mut Vec<u32>, extra: &[u32], sink: &mut dyn CliqueSink) {
    let base = r.len();
    r.extend_from_slice(extra);
    sink.emit(r);
    r.truncate(base);
}

pub(crate) fn reduce_parts(
    g: &CompactGraph,
    r: &mut Vec<u32>,
    p: &mut Vec<u32>,
    x: &mut Vec<u32>,
    sink: &mut dyn CliqueSink,
    s: &mut DynamicScratch,
    strict: bool,
) -> DynamicOutcome {
    let mut out = DynamicOutcome::default();
    if p.is_empty() {
        return out;
    }

    for &w in x.iter() {
        let nw = g.neighbors(w);
        out.touches += touch(nw, p);
        intersect_with(nw, p, GALLOP_RATIO, |u| s.marked[u as usize] = true);
    }
    debug_assert!(p
        .iter()
        .all(|&u| s.marked[u as usize] == x.iter().any(|&w| g.has_edge(u, w))));

    s.orig.clear();
    for &v in p.iter() {
        let nv = g.neighbors(v);
        out.touches += touch(nv, p);
        let d = intersect_count(nv, p) as u32;
        s.orig.push(d);
        s.cur[v as usize] = d;
    }

    s.delta.clear();
    for i in 0..p.len() {
        let v = p[i];
        if s.removed[v as usize] {
            continue;
        }
        match s.orig[i] {
            0 => {
                s.removed[v as usize] = true;
                s.delta.push(v);
                if !s.marked[v as usize] {
                    emit_with(r, &[v], sink);
                    out.emitted += 1;
                }
            }
            1 => {
                let nv = g.neighbors(v);
                out.touches += touch(nv, p);
                let u = first_common(nv, p).expect("degree-one candidate has a neighbor in P");
                debug_assert!(!s.removed[u as usize]);
                let both_marked = s.marked[v as usize] && s.marked[u as usize];
                let report = if !both_marked {
                    true
                } else if strict {
                    let nu = g.neighbors(u);
                    out.touches += touch(nv, nu);
                    intersect_into(nv, nu, &mut s.buf);
                    out.touches += touch(&s.buf, x);
                    first_common(&s.buf, x).is_none()
                } else {
                    continue;
                };
                if report {
                    emit_with(r, &[v, u], sink);
                    out.emitted += 1;
                }
                s.removed[v as usize] = true;
                s.delta.push(v);
                if s.cur[u as usize] == 1 {
                    s.removed[u as usize] = true;
                    s.delta.push(u);
                } else {
                    s.cur[u as usize] -= 1;
                }
            }
            _ => {}
        }
    }
    out.removed = s.delta.len();

    s.members.clear();
    s.members.extend_from_slice(p);
    if out.removed > 0 {
        let removed = &s.removed;
        p.retain(|&v| !removed[v as usize]);
        s.delta.sort_unstable();
    }

    s.hoisted.clear();
    let k = p.len();
    if k > 0 {
        let cur = &s.cur;
        s.hoisted.extend(p.iter().copied().filter(|&v| cur[v as usize] as usize == k - 1));
    }
    out.hoisted = s.hoisted.len();

    if !s.delta.is_empty() {
        union_into(x, &s.delta, &mut s.buf);
        std::mem::swap(x, &mut s.buf);
    }
    if !s.hoisted.is_empty() {
        if s.hoisted.len() == k {
            p.clear();
        } else {
            let hoisted = &s.hoisted;
            let cur = &s.cur;
            p.retain(|&v| (cur[v as usize] as usize) != k - 1 || hoisted.binary_search(&v).is_err());
        }
        for &h in &s.hoisted {
            let nh = g.neighbors(h);
            out.touches += touch(nh, x);
            intersect_into(x, nh, &mut s.buf2);
            std::mem::swap(x, &mut s.buf2);
        }
        r.extend_from_slice(&s.hoisted);
    }

    for &v in &s.members {
        s.marked[v as usize] = false;
        s.removed[v as usize] = false;
    }
    out
}
