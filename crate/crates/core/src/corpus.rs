//! Exhaustive enumeration of small semigroups up to isomorphism.
//!
//! Backtracking over table cells with incremental associativity pruning;
//! completed tables are reduced to their canonical form (minimum relabeling
//! over all carrier permutations) and deduplicated, so the output has exactly
//! one representative per isomorphism class, in ascending canonical-table
//! order. Anti-isomorphic but non-isomorphic semigroups count separately.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bruteforce::canonical_table;
use crate::construct::GroupSpec;
use crate::semigroup::FiniteSemigroup;

/// Predicate applied to completed tables (isomorphism-invariant, so filtering
/// before deduplication is sound). Band and Commutative also prune the
/// search itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusFilter {
    All,
    Band,
    Commutative,
    Regular,
    Orthodox,
    Inverse,
    CompletelySimple,
    Group,
}

impl CorpusFilter {
    pub fn name(&self) -> &'static str {
        match self {
            CorpusFilter::All => "all",
            CorpusFilter::Band => "band",
            CorpusFilter::Commutative => "commutative",
            CorpusFilter::Regular => "regular",
            CorpusFilter::Orthodox => "orthodox",
            CorpusFilter::Inverse => "inverse",
            CorpusFilter::CompletelySimple => "completely-simple",
            CorpusFilter::Group => "group",
        }
    }

    pub fn parse(name: &str) -> Option<CorpusFilter> {
        Some(match name {
            "all" => CorpusFilter::All,
            "band" => CorpusFilter::Band,
            "commutative" => CorpusFilter::Commutative,
            "regular" => CorpusFilter::Regular,
            "orthodox" => CorpusFilter::Orthodox,
            "inverse" => CorpusFilter::Inverse,
            "completely-simple" => CorpusFilter::CompletelySimple,
            "group" => CorpusFilter::Group,
            _ => return None,
        })
    }

    fn accepts(&self, s: &FiniteSemigroup) -> bool {
        match self {
            CorpusFilter::All => true,
            CorpusFilter::Band => s.is_band(),
            CorpusFilter::Commutative => s.is_commutative(),
            CorpusFilter::Regular => s.is_regular(),
            CorpusFilter::Orthodox => s.is_orthodox(),
            CorpusFilter::Inverse => s.is_inverse_semigroup(),
            CorpusFilter::CompletelySimple => s.is_completely_simple(),
            CorpusFilter::Group => GroupSpec::new(s.clone()).is_ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusError {
    /// Order 5 requires a restricting filter; orders above 5 are refused.
    CapExceeded { order: usize },
}

impl core::fmt::Display for CorpusError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            CorpusError::CapExceeded { order } => {
                write!(
                    f,
                    "cannot enumerate order {order}: orders 1-4 run unfiltered, order 5 needs a filter"
                )
            }
        }
    }
}

impl core::error::Error for CorpusError {}

const UNSET: usize = usize::MAX;

/// Both sides of (x y) z = x (y z) on a partial table; undetermined triples
/// pass. Returns false only on a witnessed contradiction.
fn partial_assoc_ok(n: usize, t: &[usize]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            for z in 0..n {
                let yz = t[y * n + z];
                if xy == UNSET || yz == UNSET {
                    continue;
                }
                let lhs = t[xy * n + z];
                let rhs = t[x * n + yz];
                if lhs != UNSET && rhs != UNSET && lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

struct Search {
    n: usize,
    filter: CorpusFilter,
    slots: Vec<usize>,
    table: Vec<usize>,
    perms: Vec<Vec<usize>>,
    canon: BTreeSet<Vec<usize>>,
}

impl Search {
    fn place(&mut self, slot: usize) {
        let n = self.n;
        if slot == self.slots.len() {
            let s = FiniteSemigroup::new(n, self.table.clone()).expect("search output associative");
            if self.filter.accepts(&s) {
                self.canon.insert(canonical_table(n, &self.table, &self.perms));
            }
            return;
        }
        let cell = self.slots[slot];
        let mirror = if self.filter == CorpusFilter::Commutative {
            let (a, b) = (cell / n, cell % n);
            Some(b * n + a)
        } else {
            None
        };
        for v in 0..n {
            self.table[cell] = v;
            if let Some(m) = mirror {
                self.table[m] = v;
            }
            if partial_assoc_ok(n, &self.table) {
                self.place(slot + 1);
            }
        }
        self.table[cell] = UNSET;
        if let Some(m) = mirror {
            self.table[m] = UNSET;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(perm: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(perm.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            perm.push(x);
            go(perm, rest, out);
            perm.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// All semigroups of the given order up to isomorphism satisfying the
/// filter, in ascending canonical-table order. Order 5 demands a filter
/// other than `All`; larger orders are always refused.
pub fn enumerate_semigroups(
    order: usize,
    filter: CorpusFilter,
) -> Result<Vec<FiniteSemigroup>, CorpusError> {
    if order == 0 || order > 5 || (order == 5 && filter == CorpusFilter::All) {
        return Err(CorpusError::CapExceeded { order });
    }
    let n = order;
    let mut table = vec![UNSET; n * n];
    let mut slots: Vec<usize> = (0..n * n).collect();
    match filter {
        CorpusFilter::Band => {
            // idempotency pins the diagonal
            for a in 0..n {
                table[a * n + a] = a;
            }
            slots.retain(|&c| c / n != c % n);
        }
        CorpusFilter::Commutative => {
            // fill the upper triangle, mirroring as we go
            slots.retain(|&c| c / n <= c % n);
        }
        _ => {}
    }
    let mut search = Search {
        n,
        filter,
        slots,
        table,
        perms: permutations(n),
        canon: BTreeSet::new(),
    };
    search.place(0);
    Ok(search
        .canon
        .into_iter()
        .map(|t| FiniteSemigroup::new(n, t).expect("canonical table associative"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruteforce::count_semigroups_by_tables;

    #[test]
    fn counts_match_the_table_scan_oracle() {
        for n in 1..=3 {
            assert_eq!(
                enumerate_semigroups(n, CorpusFilter::All).unwrap().len(),
                count_semigroups_by_tables(n),
                "order {n}"
            );
        }
    }

    #[test]
    fn known_counts_through_order_four() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_semigroups(n, CorpusFilter::All).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 5, 24, 188]);
    }

    #[test]
    fn caps_and_filters() {
        assert_eq!(
            enumerate_semigroups(5, CorpusFilter::All).unwrap_err(),
            CorpusError::CapExceeded { order: 5 }
        );
        assert_eq!(
            enumerate_semigroups(6, CorpusFilter::Band).unwrap_err(),
            CorpusError::CapExceeded { order: 6 }
        );
        // bands of order <= 3: 1, 3, 10
        for (n, want) in [(1, 1), (2, 3), (3, 10)] {
            let bands = enumerate_semigroups(n, CorpusFilter::Band).unwrap();
            assert_eq!(bands.len(), want, "order {n}");
            assert!(bands.iter().all(|s| s.is_band()));
        }
        // groups of order <= 4: 1, 1, 1, 2
        for (n, want) in [(1, 1), (2, 1), (3, 1), (4, 2)] {
            assert_eq!(
                enumerate_semigroups(n, CorpusFilter::Group).unwrap().len(),
                want,
                "order {n}"
            );
        }
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let all3 = enumerate_semigroups(3, CorpusFilter::All).unwrap();
        let perms = permutations(3);
        for s in &all3 {
            assert_eq!(canonical_table(3, s.table(), &perms), s.table());
        }
        for (i, a) in all3.iter().enumerate() {
            for b in &all3[i + 1..] {
                assert_ne!(a.table(), b.table());
            }
        }
        // output sorted ascending by table
        for w in all3.windows(2) {
            assert!(w[0].table() < w[1].table());
        }
    }

    #[test]
    fn filters_are_consistent_subsets() {
        let all4 = enumerate_semigroups(4, CorpusFilter::All).unwrap();
        let regular: Vec<_> = all4.iter().filter(|s| s.is_regular()).collect();
        assert_eq!(
            regular.len(),
            enumerate_semigroups(4, CorpusFilter::Regular).unwrap().len()
        );
        let orthodox = enumerate_semigroups(4, CorpusFilter::Orthodox).unwrap();
        assert!(orthodox.iter().all(|s| s.is_regular()));
        assert!(orthodox.len() <= regular.len());
        let inverse = enumerate_semigroups(4, CorpusFilter::Inverse).unwrap();
        assert!(inverse.iter().all(|s| s.is_orthodox()));
    }
}
