//! Counting multipartitions by enumeration.

/// Partitions of `n` with every part at most `max_part`.
fn partitions_bounded(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(n)).rev() {
        for mut rest in partitions_bounded(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    partitions_bounded(n, n)
}

/// All `m`-tuples of partitions of total size `n`.
pub fn multipartitions(m: usize, n: usize) -> Vec<Vec<Vec<usize>>> {
    if m == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for head in partitions(first) {
            for mut tail in multipartitions(m - 1, n - first) {
                tail.insert(0, head.clone());
                out.push(tail);
            }
        }
    }
    out
}

pub fn count_multipartitions(m: usize, n: usize) -> usize {
    multipartitions(m, n).len()
}
