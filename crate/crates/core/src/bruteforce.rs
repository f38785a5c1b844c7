//! Reference implementations by exhaustive enumeration. Deliberately naive
//! and structured differently from the production code paths so the two can
//! cross-check each other in tests: congruence lattices are found by
//! filtering every partition of the carrier, semigroup counts by scanning
//! every multiplication table.

use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::Partition;
use crate::semigroup::FiniteSemigroup;

/// All partitions of {0..n-1} in restricted-growth-string order
/// (Bell(n) many; Bell(8) = 4140).
pub fn all_partitions(n: usize) -> Vec<Partition> {
    assert!(n >= 1, "partitions need a nonempty carrier");
    let mut out = Vec::new();
    // restricted growth: labels[0] = 0, labels[i] <= 1 + max(labels[..i])
    let mut labels = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    let mut i = 0usize;
    loop {
        if i == n {
            out.push(Partition::from_labels(&labels));
            // backtrack to the last position we can bump
            loop {
                if i == 1 {
                    return out;
                }
                i -= 1;
                let cap = maxes[i - 1] + 1;
                if labels[i] < cap {
                    labels[i] += 1;
                    maxes[i] = maxes[i - 1].max(labels[i]);
                    i += 1;
                    break;
                }
                labels[i] = 0;
            }
        } else {
            if i > 0 {
                labels[i] = 0;
                maxes[i] = maxes[i - 1];
            } else {
                maxes[0] = 0;
            }
            i += 1;
        }
    }
}

/// Whether the partition is compatible with the multiplication: products of
/// related elements against a common companion stay related.
pub fn partition_is_compatible(s: &FiniteSemigroup, p: &Partition) -> bool {
    let n = s.order();
    for a in 0..n {
        for b in a + 1..n {
            if !p.same(a, b) {
                continue;
            }
            for c in 0..n {
                if !p.same(s.mul(a, c), s.mul(b, c)) || !p.same(s.mul(c, a), s.mul(c, b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every congruence of `s`, as partitions, found by filtering all set
/// partitions. Sorted by class map like the lattice ordering.
pub fn congruences_by_filter(s: &FiniteSemigroup) -> Vec<Partition> {
    let mut out: Vec<Partition> = all_partitions(s.order())
        .into_iter()
        .filter(|p| partition_is_compatible(s, p))
        .collect();
    out.sort_by(|a, b| a.class_map().cmp(b.class_map()));
    out
}

fn table_is_associative(n: usize, t: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            for c in 0..n {
                if t[ab * n + c] != t[a * n + t[b * n + c]] {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm, iterative
    let mut c = vec![0usize; n];
    out.push(perm.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Least relabeling of the table over all permutations of the carrier.
pub fn canonical_table(n: usize, t: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut image = vec![0usize; n * n];
    for p in perms {
        // relabeled[p(a)][p(b)] = p(t[a][b])
        for a in 0..n {
            for b in 0..n {
                image[p[a] * n + p[b]] = p[t[a * n + b]];
            }
        }
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image.clone());
        }
    }
    best.expect("at least the identity permutation")
}

/// Number of semigroups of the given order up to isomorphism, by scanning
/// every n^(n^2) table. Only sensible for n <= 3 (3^9 = 19683 tables).
pub fn count_semigroups_by_tables(n: usize) -> usize {
    assert!((1..=3).contains(&n), "table scan only supports orders 1..=3");
    let perms = permutations(n);
    let cells = n * n;
    let mut canon: Vec<Vec<usize>> = Vec::new();
    let mut t = vec![0usize; cells];
    loop {
        if table_is_associative(n, &t) {
            let c = canonical_table(n, &t, &perms);
            if !canon.contains(&c) {
                canon.push(c);
            }
        }
        // odometer over the table cells
        let mut i = cells;
        loop {
            if i == 0 {
                return canon.len();
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}
