//! Iterative recursion kernels.
//!
//! Both kernels keep an explicit frame stack, so deep recursions cannot
//! overflow the thread stack. R is one shared vector: a frame remembers the
//! length R had when it was entered and truncates back on exit. P and X
//! buffers are recycled through a small pool.

use crate::dynamic::{reduce_parts, DynamicScratch};
use crate::graph::setops::{difference_into, insert_sorted, intersect_count, intersect_into};
use crate::graph::CompactGraph;
use crate::metrics::Counters;
use crate::sink::CliqueSink;

use super::pivot::pivot_select;

/// Debug builds validate every subproblem up to this many vertices.
const DEBUG_CHECK_LIMIT: usize = 256;

pub(crate) struct Searcher<'g> {
    g: &'g CompactGraph,
    dynamic: bool,
    strict: bool,
    visit_key: Option<&'g [u32]>,
    scratch: Option<DynamicScratch>,
    pool: Vec<Vec<u32>>,
    r: Vec<u32>,
    pub counters: Counters,
}

struct PivotFrame {
    r_base: usize,
    p: Vec<u32>,
    x: Vec<u32>,
    /// Candidates still to branch on: P \ N(pivot), ascending.
    branch: Vec<u32>,
    next: usize,
}

struct RcdFrame {
    r_base: usize,
    p: Vec<u32>,
    x: Vec<u32>,
    /// `deg[i] = |N(p[i]) ∩ P|`.
    deg: Vec<u32>,
}

impl<'g> Searcher<'g> {
    /// `visit_key[v]` is the degree under which visits of `v` are recorded;
    /// `None` disables the histogram.
    pub fn new(g: &'g CompactGraph, dynamic: bool, strict: bool, visit_key: Option<&'g [u32]>) -> Self {
        Searcher {
            g,
            dynamic,
            strict,
            visit_key,
            scratch: dynamic.then(|| DynamicScratch::new(g.n())),
            pool: Vec::new(),
            r: Vec::new(),
            counters: Counters::default(),
        }
    }

    fn take(&mut self) -> Vec<u32> {
        let mut v = self.pool.pop().unwrap_or_default();
        v.clear();
        v
    }

    fn give(&mut self, v: Vec<u32>) {
        self.pool.push(v);
    }

    /// Counts the call, records visits and applies dynamic reduction, which
    /// may grow R and shrink P and X.
    fn enter(&mut self, p: &mut Vec<u32>, x: &mut Vec<u32>, sink: &mut dyn CliqueSink) {
        if cfg!(debug_assertions) && self.r.len() + p.len() + x.len() <= DEBUG_CHECK_LIMIT {
            if let Err(e) = crate::subproblem::check_parts(self.g, &self.r, p, x) {
                panic!("invalid subproblem: {e}");
            }
        }
        self.counters.recursive_calls += 1;
        if let Some(key) = self.visit_key {
            for &v in p.iter().chain(x.iter()) {
                self.counters.visit(key[v as usize]);
            }
        }
        if self.dynamic {
            let scratch = self.scratch.as_mut().expect("scratch allocated with dynamic reduction");
            let out = reduce_parts(self.g, &mut self.r, p, x, sink, scratch, self.strict);
            self.counters.dynamic_cliques += out.emitted as u64;
            self.counters.dynamic_removed += out.removed as u64;
            self.counters.dynamic_hoisted += out.hoisted as u64;
        }
    }

    fn report(&mut self, sink: &mut dyn CliqueSink) {
        self.counters.recursion_cliques += 1;
        sink.emit(&self.r);
    }

    /// Enumerates every maximal clique of the form `r ∪ S`, `S ⊆ p`, not
    /// extendable by a vertex of `x`.
    pub fn pivot(&mut self, r: &[u32], p: Vec<u32>, x: Vec<u32>, sink: &mut dyn CliqueSink) {
        self.r.clear();
        self.r.extend_from_slice(r);
        let mut stack: Vec<PivotFrame> = Vec::new();
        if let Some(f) = self.open_pivot(0, p, x, sink) {
            stack.push(f);
        }
        while let Some(top) = stack.last_mut() {
            if top.next == top.branch.len() {
                let f = stack.pop().expect("nonempty");
                self.r.truncate(f.r_base);
                self.give(f.p);
                self.give(f.x);
                self.give(f.branch);
                continue;
            }
            let v = top.branch[top.next];
            top.next += 1;
            let nv = self.g.neighbors(v);
            let mut cp = self.pool.pop().unwrap_or_default();
            let mut cx = self.pool.pop().unwrap_or_default();
            intersect_into(&top.p, nv, &mut cp);
            intersect_into(&top.x, nv, &mut cx);
            let pos = top.p.binary_search(&v).expect("branch vertex in P");
            top.p.remove(pos);
            insert_sorted(&mut top.x, v);
            let base = self.r.len();
            self.r.push(v);
            match self.open_pivot(base, cp, cx, sink) {
                Some(f) => stack.push(f),
                None => self.r.truncate(base),
            }
        }
    }

    /// `r_base` is the length R returns to once the frame is closed; the
    /// branch vertex (if any) and hoisted vertices sit above it.
    fn open_pivot(
        &mut self,
        r_base: usize,
        mut p: Vec<u32>,
        mut x: Vec<u32>,
        sink: &mut dyn CliqueSink,
    ) -> Option<PivotFrame> {
        self.enter(&mut p, &mut x, sink);
        if p.is_empty() {
            if x.is_empty() && !self.r.is_empty() {
                self.report(sink);
            }
            self.give(p);
            self.give(x);
            return None;
        }
        let u = pivot_select(self.g, &p, &x);
        let mut branch = self.take();
        difference_into(&p, self.g.neighbors(u), &mut branch);
        Some(PivotFrame {
            r_base,
            p,
            x,
            branch,
            next: 0,
        })
    }

    /// Enumerates like [`Searcher::pivot`], peeling the minimum-degree
    /// candidate until the candidates form a clique.
    pub fn rcd(&mut self, r: &[u32], p: Vec<u32>, x: Vec<u32>, sink: &mut dyn CliqueSink) {
        self.r.clear();
        self.r.extend_from_slice(r);
        let mut stack: Vec<RcdFrame> = Vec::new();
        if let Some(f) = self.open_rcd(0, p, x, sink) {
            stack.push(f);
        }
        while let Some(top) = stack.last_mut() {
            let k = top.p.len();
            let (i, dmin) = top
                .deg
                .iter()
                .enumerate()
                .min_by_key(|&(i, &d)| (d, i))
                .map(|(i, &d)| (i, d as usize))
                .expect("open frames have candidates");
            if dmin + 1 == k {
                let f = stack.pop().expect("nonempty");
                let g = self.g;
                if f.x.iter().all(|&w| intersect_count(g.neighbors(w), &f.p) < k) {
                    self.r.extend_from_slice(&f.p);
                    self.report(sink);
                }
                self.r.truncate(f.r_base);
                self.give(f.p);
                self.give(f.x);
                self.give(f.deg);
                continue;
            }
            let v = top.p[i];
            let nv = self.g.neighbors(v);
            let mut cp = self.pool.pop().unwrap_or_default();
            let mut cx = self.pool.pop().unwrap_or_default();
            intersect_into(&top.p, nv, &mut cp);
            intersect_into(&top.x, nv, &mut cx);
            top.p.remove(i);
            top.deg.remove(i);
            for &u in &cp {
                let j = top.p.binary_search(&u).expect("neighbor still in P");
                top.deg[j] -= 1;
            }
            insert_sorted(&mut top.x, v);
            let base = self.r.len();
            self.r.push(v);
            match self.open_rcd(base, cp, cx, sink) {
                Some(f) => stack.push(f),
                None => self.r.truncate(base),
            }
        }
    }

    fn open_rcd(&mut self, r_base: usize, mut p: Vec<u32>, mut x: Vec<u32>, sink: &mut dyn CliqueSink) -> Option<RcdFrame> {
        self.enter(&mut p, &mut x, sink);
        if p.is_empty() {
            if x.is_empty() && !self.r.is_empty() {
                self.report(sink);
            }
            self.give(p);
            self.give(x);
            return None;
        }
        let mut deg = self.take();
        let g = self.g;
        deg.extend(p.iter().map(|&v| intersect_count(g.neighbors(v), &p) as u32));
        Some(RcdFrame { r_base, p, x, deg })
    }
}
