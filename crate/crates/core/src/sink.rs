//! Output channel for maximal cliques.

use std::io::{self, Write};

/// Receives every maximal clique reported by reductions and recursions.
///
/// `clique` is borrowed scratch in no particular order; implementations that
/// keep it must copy. Cliques are always nonempty.
pub trait CliqueSink {
    fn emit(&mut self, clique: &[u32]);

    /// Number of cliques received so far.
    fn count(&self) -> u64;

    /// `false` when the sink only counts, letting callers skip id translation.
    fn wants_members(&self) -> bool {
        true
    }

    /// Records `n` cliques without members. Only called on sinks whose
    /// [`CliqueSink::wants_members`] is `false`.
    fn tally(&mut self, n: u64) {
        unreachable!("tally({n}) on a sink that wants members");
    }
}

impl<S: CliqueSink + ?Sized> CliqueSink for &mut S {
    fn emit(&mut self, clique: &[u32]) {
        (**self).emit(clique)
    }
    fn count(&self) -> u64 {
        (**self).count()
    }
    fn wants_members(&self) -> bool {
        (**self).wants_members()
    }
    fn tally(&mut self, n: u64) {
        (**self).tally(n)
    }
}

/// Count-only sink; never materializes a clique.
#[derive(Clone, Copy, Debug, Default)]
pub struct CountingSink {
    count: u64,
}

impl CountingSink {
    pub fn new() -> Self {
        Self::default()
    }
}

impl CliqueSink for CountingSink {
    #[inline]
    fn emit(&mut self, clique: &[u32]) {
        debug_assert!(!clique.is_empty());
        self.count += 1;
    }
    fn count(&self) -> u64 {
        self.count
    }
    fn wants_members(&self) -> bool {
        false
    }
    fn tally(&mut self, n: u64) {
        self.count += n;
    }
}

/// Keeps every clique, each sorted ascending.
#[derive(Clone, Debug, Default)]
pub struct CollectingSink {
    cliques: Vec<Vec<u32>>,
}

impl CollectingSink {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cliques(&self) -> &[Vec<u32>] {
        &self.cliques
    }

    pub fn into_cliques(self) -> Vec<Vec<u32>> {
        self.cliques
    }
}

impl CliqueSink for CollectingSink {
    fn emit(&mut self, clique: &[u32]) {
        debug_assert!(!clique.is_empty());
        let mut c = clique.to_vec();
        c.sort_unstable();
        self.cliques.push(c);
    }
    fn count(&self) -> u64 {
        self.cliques.len() as u64
    }
}

/// Streams cliques as lines of space-separated ids, sorted within each line.
///
/// An optional label table translates ids before writing. The first write
/// error is kept and returned by [`WriterSink::finish`]; later cliques are
/// still counted but not written.
pub struct WriterSink<'a, W: Write> {
    out: W,
    labels: Option<&'a [u64]>,
    count: u64,
    scratch: Vec<u64>,
    line: String,
    error: Option<io::Error>,
}

impl<'a, W: Write> WriterSink<'a, W> {
    pub fn new(out: W, labels: Option<&'a [u64]>) -> Self {
        WriterSink {
            out,
            labels,
            count: 0,
            scratch: Vec::new(),
            line: String::new(),
            error: None,
        }
    }

    pub fn finish(mut self) -> io::Result<u64> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        self.out.flush()?;
        Ok(self.count)
    }
}

impl<W: Write> CliqueSink for WriterSink<'_, W> {
    fn emit(&mut self, clique: &[u32]) {
        self.count += 1;
        if self.error.is_some() {
            return;
        }
        self.scratch.clear();
        match self.labels {
            Some(l) => self.scratch.extend(clique.iter().map(|&v| l[v as usize])),
            None => self.scratch.extend(clique.iter().map(|&v| v as u64)),
        }
        self.scratch.sort_unstable();
        self.line.clear();
        for (i, v) in self.scratch.iter().enumerate() {
            use std::fmt::Write as _;
            if i > 0 {
                self.line.push(' ');
            }
            let _ = write!(self.line, "{v}");
        }
        self.line.push('\n');
        if let Err(e) = self.out.write_all(self.line.as_bytes()) {
            self.error = Some(e);
        }
    }
    fn count(&self) -> u64 {
        self.count
    }
}

/// Forwards to an inner sink after mapping every id through `map`.
pub(crate) struct TranslatingSink<'a, S: CliqueSink + ?Sized> {
    pub inner: &'a mut S,
    pub map: &'a [u32],
    pub buf: Vec<u32>,
}

impl<S: CliqueSink + ?Sized> CliqueSink for TranslatingSink<'_, S> {
    fn emit(&mut self, clique: &[u32]) {
        if !self.inner.wants_members() {
            self.inner.emit(clique);
            return;
        }
        self.buf.clear();
        self.buf.extend(clique.iter().map(|&v| self.map[v as usize]));
        self.inner.emit(&self.buf);
    }
    fn count(&self) -> u64 {
        self.inner.count()
    }
    fn wants_members(&self) -> bool {
        self.inner.wants_members()
    }
    fn tally(&mut self, n: u64) {
        self.inner.tally(n)
    }
}
