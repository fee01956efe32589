//! Sorted-slice set primitives.
//!
//! Every vertex set handled by the enumeration kernels is a strictly
//! ascending `u32` slice. Intersections run as a linear merge unless one side
//! is at least [`GALLOP_RATIO`] times larger than the other, in which case
//! the short side drives an exponential search through the long side.

/// Size ratio at which intersections switch from merging to galloping.
pub const GALLOP_RATIO: usize = 32;

/// Returns the suffix of `slice` starting at the first element `>= value`.
#[inline]
pub fn gallop_ge(mut slice: &[u32], value: u32) -> &[u32] {
    if !slice.is_empty() && slice[0] < value {
        let mut step = 1;
        while step < slice.len() && slice[step] < value {
            slice = &slice[step..];
            step <<= 1;
        }
        step >>= 1;
        while step > 0 {
            if step < slice.len() && slice[step] < value {
                slice = &slice[step..];
            }
            step >>= 1;
        }
        slice = &slice[1..];
    }
    slice
}

/// Calls `f` on every element of `a ∩ b`, in ascending order.
#[inline]
pub fn intersect_with<F: FnMut(u32)>(a: &[u32], b: &[u32], ratio: usize, mut f: F) {
    let (small, mut large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.is_empty() {
        return;
    }
    if small.len().saturating_mul(ratio) <= large.len() {
        for &x in small {
            large = gallop_ge(large, x);
            match large.first() {
                None => return,
                Some(&y) if y == x => {
                    f(x);
                    large = &large[1..];
                }
                _ => {}
            }
        }
    } else {
        let (mut i, mut j) = (0, 0);
        while i < small.len() && j < large.len() {
            let (x, y) = (small[i], large[j]);
            if x < y {
                i += 1;
            } else if y < x {
                j += 1;
            } else {
                f(x);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Ascending intersection of two ascending sequences.
pub fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    intersect_into(a, b, &mut out);
    out
}

/// Like [`intersect_sorted`] but writes into `out` (cleared first).
#[inline]
pub fn intersect_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    intersect_with(a, b, GALLOP_RATIO, |x| out.push(x));
}

/// `|a ∩ b|`.
#[inline]
pub fn intersect_count(a: &[u32], b: &[u32]) -> usize {
    let mut c = 0;
    intersect_with(a, b, GALLOP_RATIO, |_| c += 1);
    c
}

/// Smallest element of `a ∩ b`, stopping at the first hit.
#[inline]
pub fn first_common(a: &[u32], b: &[u32]) -> Option<u32> {
    let (mut i, mut j) = (0, 0);
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len().saturating_mul(GALLOP_RATIO) <= large.len() {
        let mut rest = large;
        for &x in small {
            rest = gallop_ge(rest, x);
            match rest.first() {
                None => return None,
                Some(&y) if y == x => return Some(x),
                _ => {}
            }
        }
        return None;
    }
    while i < small.len() && j < large.len() {
        match small[i].cmp(&large[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(small[i]),
        }
    }
    None
}

/// True when every element of `a` is in `b`.
#[inline]
pub fn is_subset(a: &[u32], b: &[u32]) -> bool {
    a.len() <= b.len() && intersect_count(a, b) == a.len()
}

/// Elements of `a` not in `b`, ascending.
pub fn difference_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let mut rest = b;
    for &x in a {
        rest = gallop_ge(rest, x);
        if rest.first() != Some(&x) {
            out.push(x);
        }
    }
}

/// Ascending union of two disjoint-or-overlapping ascending sequences.
pub fn union_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Inserts `x` into an ascending vector, keeping it ascending. No-op if present.
#[inline]
pub fn insert_sorted(v: &mut Vec<u32>, x: u32) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

/// Removes `x` from an ascending vector. Returns whether it was present.
#[inline]
pub fn remove_sorted(v: &mut Vec<u32>, x: u32) -> bool {
    match v.binary_search(&x) {
        Ok(pos) => {
            v.remove(pos);
            true
        }
        Err(_) => false,
    }
}
