//! Finite semigroups as validated Cayley tables.
//!
//! Elements are the integers `0..order`; the table stores `a * b` row-major.
//! Associativity is checked exhaustively on construction — a `FiniteSemigroup`
//! value is always a real semigroup, every later algorithm relies on that.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::util::Bits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupError {
    /// Order must be at least 1; there is no empty semigroup here.
    InvalidOrder,
    TableSizeMismatch { expected: usize, got: usize },
    OutOfRangeEntry { row: usize, col: usize, value: usize },
    /// Witness triple with `(a*b)*c != a*(b*c)`.
    NotAssociative { a: usize, b: usize, c: usize },
    /// The natural partial order is only defined on idempotents.
    NotIdempotent { element: usize },
}

impl core::fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            SemigroupError::InvalidOrder => write!(f, "order must be at least 1"),
            SemigroupError::TableSizeMismatch { expected, got } => {
                write!(f, "table has {got} entries, expected {expected}")
            }
            SemigroupError::OutOfRangeEntry { row, col, value } => {
                write!(f, "table entry at ({row}, {col}) is {value}, out of range")
            }
            SemigroupError::NotAssociative { a, b, c } => {
                write!(f, "not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
            }
            SemigroupError::NotIdempotent { element } => {
                write!(f, "element {element} is not idempotent")
            }
        }
    }
}

impl core::error::Error for SemigroupError {}

/// A finite semigroup on `0..order` with a row-major multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates entries and associativity (exhaustive, O(order³)).
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self, SemigroupError> {
        if order == 0 {
            return Err(SemigroupError::InvalidOrder);
        }
        if table.len() != order * order {
            return Err(SemigroupError::TableSizeMismatch {
                expected: order * order,
                got: table.len(),
            });
        }
        for (i, &v) in table.iter().enumerate() {
            if v >= order {
                return Err(SemigroupError::OutOfRangeEntry {
                    row: i / order,
                    col: i % order,
                    value: v,
                });
            }
        }
        let s = FiniteSemigroup {
            order,
            table,
            names: None,
        };
        for a in 0..order {
            for b in 0..order {
                let ab = s.mul(a, b);
                for c in 0..order {
                    if s.mul(ab, c) != s.mul(a, s.mul(b, c)) {
                        return Err(SemigroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, SemigroupError> {
        let order = rows.len();
        let mut flat = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(SemigroupError::TableSizeMismatch {
                    expected: order * order,
                    got: row.len() * order,
                });
            }
            flat.extend_from_slice(row);
        }
        FiniteSemigroup::new(order, flat)
    }

    /// Attaches display names (one per element). Names never affect algebra.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        debug_assert_eq!(names.len(), self.order);
        self.names = Some(names);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element: its attached name, or the bare id.
    pub fn element_name(&self, x: usize) -> String {
        match &self.names {
            Some(ns) => ns[x].clone(),
            None => format!("{x}"),
        }
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// All idempotents in ascending order. Nonempty for every finite semigroup.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.is_idempotent(e)).collect()
    }

    /// Natural partial order on idempotents: `e <= f` iff `ef = fe = e`.
    pub fn natural_leq(&self, e: usize, f: usize) -> Result<bool, SemigroupError> {
        for x in [e, f] {
            if !self.is_idempotent(x) {
                return Err(SemigroupError::NotIdempotent { element: x });
            }
        }
        Ok(self.mul(e, f) == e && self.mul(f, e) == e)
    }

    /// True iff no two distinct idempotents are comparable.
    pub fn is_idempotent_antichain(&self) -> bool {
        let es = self.idempotents();
        for (i, &e) in es.iter().enumerate() {
            for &f in &es[i + 1..] {
                if (self.mul(e, f) == e && self.mul(f, e) == e)
                    || (self.mul(f, e) == f && self.mul(e, f) == f)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Inverses of `x`: all `y` with `xyx = x` and `yxy = y`, ascending.
    pub fn inverses_of(&self, x: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&y| {
                self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y
            })
            .collect()
    }

    /// Regular: every element has at least one inverse. (If `xyx = x` then
    /// `y' = yxy` is a genuine inverse of `x`, so this matches the
    /// every-element-has-a-weak-inverse definition.)
    pub fn is_regular(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).any(|y| self.mul(self.mul(x, y), x) == x))
    }

    /// Inverse semigroup: regular with exactly one inverse per element.
    pub fn is_inverse_semigroup(&self) -> bool {
        (0..self.order).all(|x| self.inverses_of(x).len() == 1)
    }

    pub fn is_band(&self) -> bool {
        (0..self.order).all(|e| self.is_idempotent(e))
    }

    pub fn is_left_zero(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == a))
    }

    pub fn is_right_zero(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == b))
    }

    /// Rectangular band: a band satisfying `xyx = x`.
    pub fn is_rectangular_band(&self) -> bool {
        self.is_band()
            && (0..self.order)
                .all(|x| (0..self.order).all(|y| self.mul(self.mul(x, y), x) == x))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Orthodox: regular and the idempotents are closed under multiplication.
    pub fn is_orthodox(&self) -> bool {
        self.is_regular() && self.non_closed_idempotent_pair().is_none()
    }

    /// First (lexicographic) pair of idempotents whose product is not
    /// idempotent, if any.
    pub fn non_closed_idempotent_pair(&self) -> Option<(usize, usize)> {
        let es = self.idempotents();
        for &e in &es {
            for &f in &es {
                if !self.is_idempotent(self.mul(e, f)) {
                    return Some((e, f));
                }
            }
        }
        None
    }

    /// The two-sided principal ideal `S¹ a S¹` as a bit set.
    fn principal_ideal(&self, a: usize) -> Bits {
        let mut right = Bits::new(self.order);
        right.insert(a);
        for s in 0..self.order {
            right.insert(self.mul(a, s));
        }
        let mut ideal = right.clone();
        for r in right.iter_ones() {
            for s in 0..self.order {
                ideal.insert(self.mul(s, r));
            }
        }
        ideal
    }

    /// Simple: the only two-sided ideal is the whole semigroup.
    pub fn is_simple(&self) -> bool {
        (0..self.order).all(|a| self.principal_ideal(a).count() == self.order)
    }

    /// Completely simple: simple with a primitive (minimal) idempotent.
    pub fn is_completely_simple(&self) -> bool {
        if !self.is_simple() {
            return false;
        }
        let es = self.idempotents();
        es.iter().any(|&e| {
            es.iter()
                .all(|&f| f == e || !(self.mul(f, e) == f && self.mul(e, f) == f))
        })
    }

    pub fn green_classes(&self) -> GreenClasses {
        let n = self.order;
        let classes_by = |ideal: &dyn Fn(usize) -> Bits| -> Vec<usize> {
            let mut groups: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
            let mut class_of = alloc::vec![0; n];
            for a in 0..n {
                let key = ideal(a).words().to_vec();
                let rep = *groups.entry(key).or_insert(a);
                class_of[a] = rep;
            }
            class_of
        };
        let right = |a: usize| {
            let mut b = Bits::new(n);
            b.insert(a);
            for s in 0..n {
                b.insert(self.mul(a, s));
            }
            b
        };
        let left = |a: usize| {
            let mut b = Bits::new(n);
            b.insert(a);
            for s in 0..n {
                b.insert(self.mul(s, a));
            }
            b
        };
        GreenClasses {
            r_class_of: classes_by(&right),
            l_class_of: classes_by(&left),
        }
    }
}

/// Green's R/L classes; class ids are least members, the only relations the
/// Rees coordinatization needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenClasses {
    /// `r_class_of[a]` = least element R-equivalent to `a` (equal aS¹).
    pub r_class_of: Vec<usize>,
    /// `l_class_of[a]` = least element L-equivalent to `a` (equal S¹a).
    pub l_class_of: Vec<usize>,
}

impl GreenClasses {
    /// Distinct R-class representatives, ascending.
    pub fn r_reps(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self.r_class_of.clone();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    pub fn l_reps(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self.l_class_of.clone();
        reps.sort_unstable();
        reps.dedup();
        reps
    }
}
