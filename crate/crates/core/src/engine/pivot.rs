use crate::graph::setops::intersect_count;
use crate::graph::CompactGraph;

/// Vertex of `P ∪ X` with the most neighbors in `P`, smallest id on ties.
///
/// Stops early once a vertex adjacent to all of `P` is found, since nothing
/// can beat it.
///
/// # Panics
/// If `p` is empty.
pub fn pivot_select(g: &CompactGraph, p: &[u32], x: &[u32]) -> u32 {
    assert!(!p.is_empty(), "pivot needs a candidate");
    let full = p.len();
    let mut best = (0usize, u32::MAX);
    let (mut i, mut j) = (0, 0);
    loop {
        let u = match (p.get(i), x.get(j)) {
            (Some(&a), Some(&b)) if a < b => {
                i += 1;
                a
            }
            (Some(_), Some(&b)) => {
                j += 1;
                b
            }
            (Some(&a), None) => {
                i += 1;
                a
            }
            (None, Some(&b)) => {
                j += 1;
                b
            }
            (None, None) => break,
        };
        let c = intersect_count(g.neighbors(u), p);
        if best.1 == u32::MAX || c > best.0 {
            best = (c, u);
            if c == full {
                break;
            }
        }
    }
    best.1
}
