//! Small internal containers shared across modules.

use alloc::vec;
use alloc::vec::Vec;

/// Fixed-length bit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 != 0
    }

    /// Sets bit `i`, returning whether it was previously clear.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let w = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Union-find over `0..n` with path halving; no rank, merges keep the
/// smaller root so that representatives stay canonical-friendly.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    /// Seeds the structure from an existing class map (class ids are members).
    pub fn from_class_map(class_of: &[usize]) -> Self {
        UnionFind {
            parent: class_of.to_vec(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Unions the classes of `a` and `b`; returns false if already joined.
    /// The smaller representative wins, so roots are least class members.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    /// Flattens to a canonical class map: each element labeled by the least
    /// member of its class.
    pub fn into_class_map(mut self) -> Vec<usize> {
        let n = self.parent.len();
        (0..n).map(|x| self.find(x)).collect()
    }
}

/// Open-addressing set of u64 keys (power-of-two capacity, linear probing).
/// Exists because the core is no_std and iteration order must not matter:
/// callers keep their own insertion-ordered Vec when they need to iterate.
#[derive(Clone, Debug)]
pub struct U64Set {
    slots: Vec<u64>,
    mask: usize,
    len: usize,
    has_zero: bool,
}

impl U64Set {
    pub fn with_capacity(cap: usize) -> Self {
        let slots = (cap.max(8) * 2).next_power_of_two();
        U64Set {
            slots: vec![0; slots],
            mask: slots - 1,
            len: 0,
            has_zero: false,
        }
    }

    #[inline]
    fn bucket(&self, key: u64) -> usize {
        // Fibonacci hashing spreads consecutive codes well enough.
        (key.wrapping_mul(0x9e37_79b9_7f4a_7c15) >> 32) as usize & self.mask
    }

    /// Inserts `key`, returning whether it was absent.
    pub fn insert(&mut self, key: u64) -> bool {
        if key == 0 {
            let fresh = !self.has_zero;
            self.has_zero = true;
            self.len += fresh as usize;
            return fresh;
        }
        if (self.len + 1) * 2 > self.slots.len() {
            self.grow();
        }
        let mut i = self.bucket(key);
        loop {
            let slot = self.slots[i];
            if slot == key {
                return false;
            }
            if slot == 0 {
                self.slots[i] = key;
                self.len += 1;
                return true;
            }
            i = (i + 1) & self.mask;
        }
    }

    pub fn contains(&self, key: u64) -> bool {
        if key == 0 {
            return self.has_zero;
        }
        let mut i = self.bucket(key);
        loop {
            let slot = self.slots[i];
            if slot == key {
                return true;
            }
            if slot == 0 {
                return false;
            }
            i = (i + 1) & self.mask;
        }
    }

    #[allow(dead_code)]
    pub fn len(&self) -> usize {
        self.len
    }

    #[allow(dead_code)]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn grow(&mut self) {
        let doubled = self.slots.len() * 2;
        let old = core::mem::replace(&mut self.slots, vec![0; doubled]);
        self.mask = self.slots.len() - 1;
        for key in old {
            if key != 0 {
                let mut i = self.bucket(key);
                while self.slots[i] != 0 {
                    i = (i + 1) & self.mask;
                }
                self.slots[i] = key;
            }
        }
    }
}
