//! Constructors: groups, zero semigroups, Rees matrix semigroups, and the
//! small builtin menagerie used throughout the tests and the CLI.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::semigroup::{FiniteSemigroup, SemigroupError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructError {
    Semigroup(SemigroupError),
    /// The table is a semigroup but not a group (no identity or a missing
    /// inverse).
    InvalidGroup,
    /// Sandwich matrix not normalized: row 0 and column 0 must be the
    /// identity. Witness is the offending (lambda, i) position.
    NotNormalized { lambda: usize, i: usize },
    /// Sandwich entry outside the group.
    SandwichOutOfRange { lambda: usize, i: usize, value: usize },
    SandwichSizeMismatch { expected: usize, got: usize },
    UnknownBuiltin(String),
}

impl From<SemigroupError> for ConstructError {
    fn from(e: SemigroupError) -> Self {
        ConstructError::Semigroup(e)
    }
}

impl core::fmt::Display for ConstructError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConstructError::Semigroup(e) => write!(f, "{e}"),
            ConstructError::InvalidGroup => write!(f, "table is not a group"),
            ConstructError::NotNormalized { lambda, i } => {
                write!(f, "sandwich matrix not normalized at ({lambda}, {i})")
            }
            ConstructError::SandwichOutOfRange { lambda, i, value } => {
                write!(f, "sandwich entry {value} at ({lambda}, {i}) is not a group element")
            }
            ConstructError::SandwichSizeMismatch { expected, got } => {
                write!(f, "sandwich matrix has {got} entries, expected {expected}")
            }
            ConstructError::UnknownBuiltin(name) => write!(f, "unknown builtin '{name}'"),
        }
    }
}

impl core::error::Error for ConstructError {}

/// A finite group: a semigroup together with its identity and inverse map,
/// both derived and verified at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    underlying: FiniteSemigroup,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupSpec {
    pub fn new(underlying: FiniteSemigroup) -> Result<Self, ConstructError> {
        let n = underlying.order();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| underlying.mul(e, x) == x && underlying.mul(x, e) == x))
            .ok_or(ConstructError::InvalidGroup)?;
        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| underlying.mul(x, y) == identity && underlying.mul(y, x) == identity)
                .ok_or(ConstructError::InvalidGroup)?;
        }
        Ok(GroupSpec {
            underlying,
            identity,
            inverse,
        })
    }

    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self, ConstructError> {
        Ok(GroupSpec::new(FiniteSemigroup::new(order, table)?)?)
    }

    pub fn underlying(&self) -> &FiniteSemigroup {
        &self.underlying
    }

    pub fn into_underlying(self) -> FiniteSemigroup {
        self.underlying
    }

    pub fn order(&self) -> usize {
        self.underlying.order()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.underlying.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn is_abelian(&self) -> bool {
        self.underlying.is_commutative()
    }
}

/// A normalized Rees matrix specification M[G; I, Lambda; P]: sandwich row 0
/// and column 0 are the group identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesSpec {
    group: GroupSpec,
    i_size: usize,
    lambda_size: usize,
    /// Row-major Lambda x I matrix of group element ids.
    sandwich: Vec<usize>,
}

impl ReesSpec {
    pub fn new(
        group: GroupSpec,
        i_size: usize,
        lambda_size: usize,
        sandwich: Vec<usize>,
    ) -> Result<Self, ConstructError> {
        assert!(i_size >= 1 && lambda_size >= 1, "index sets must be nonempty");
        if sandwich.len() != i_size * lambda_size {
            return Err(ConstructError::SandwichSizeMismatch {
                expected: i_size * lambda_size,
                got: sandwich.len(),
            });
        }
        let spec = ReesSpec {
            group,
            i_size,
            lambda_size,
            sandwich,
        };
        for lambda in 0..lambda_size {
            for i in 0..i_size {
                let v = spec.p(lambda, i);
                if v >= spec.group.order() {
                    return Err(ConstructError::SandwichOutOfRange { lambda, i, value: v });
                }
                if (lambda == 0 || i == 0) && v != spec.group.identity() {
                    return Err(ConstructError::NotNormalized { lambda, i });
                }
            }
        }
        Ok(spec)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn i_size(&self) -> usize {
        self.i_size
    }

    pub fn lambda_size(&self) -> usize {
        self.lambda_size
    }

    pub fn sandwich(&self) -> &[usize] {
        &self.sandwich
    }

    /// Sandwich entry p(lambda, i).
    #[inline]
    pub fn p(&self, lambda: usize, i: usize) -> usize {
        self.sandwich[lambda * self.i_size + i]
    }

    pub fn order(&self) -> usize {
        self.i_size * self.group.order() * self.lambda_size
    }

    /// Element id of the triple (i, g, lambda); lambda varies fastest.
    pub fn encode(&self, i: usize, g: usize, lambda: usize) -> usize {
        (i * self.group.order() + g) * self.lambda_size + lambda
    }

    /// Triple (i, g, lambda) of an element id.
    pub fn decode(&self, id: usize) -> (usize, usize, usize) {
        let lambda = id % self.lambda_size;
        let rest = id / self.lambda_size;
        (rest / self.group.order(), rest % self.group.order(), lambda)
    }
}

/// Builds the Rees matrix semigroup: (i,g,l)(j,h,m) = (i, g·p(l,j)·h, m).
pub fn rees_matrix(spec: &ReesSpec) -> FiniteSemigroup {
    let n = spec.order();
    let mut table = vec![0; n * n];
    for a in 0..n {
        let (i, g, l) = spec.decode(a);
        for b in 0..n {
            let (j, h, m) = spec.decode(b);
            let prod = spec.group.mul(spec.group.mul(g, spec.p(l, j)), h);
            table[a * n + b] = spec.encode(i, prod, m);
        }
    }
    let names = (0..n)
        .map(|id| {
            let (i, g, l) = spec.decode(id);
            format!(
                "({},{},{})",
                i + 1,
                spec.group.underlying().element_name(g),
                l + 1
            )
        })
        .collect();
    FiniteSemigroup::new(n, table)
        .expect("Rees matrix multiplication is associative")
        .with_names(names)
}

pub fn trivial() -> FiniteSemigroup {
    FiniteSemigroup::new(1, vec![0]).unwrap()
}

pub fn left_zero(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let table = (0..n).flat_map(|a| core::iter::repeat(a).take(n)).collect();
    FiniteSemigroup::new(n, table).unwrap()
}

pub fn right_zero(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let table = (0..n).flat_map(|_| 0..n).collect();
    FiniteSemigroup::new(n, table).unwrap()
}

/// The m x k rectangular band, realized as left_zero(m) x right_zero(k).
pub fn rectangular_band(m: usize, k: usize) -> FiniteSemigroup {
    crate::product::DirectProduct::new(&[&left_zero(m), &right_zero(k)]).into_algebra()
}

/// Cyclic group of order n with elements e, g, g2, ...
pub fn cyclic_group(n: usize) -> GroupSpec {
    assert!(n >= 1);
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push((a + b) % n);
        }
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    GroupSpec::new(FiniteSemigroup::new(n, table).unwrap().with_names(names)).unwrap()
}

/// Adjoins an absorbing zero as the new largest element id.
pub fn adjoin_zero(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    let m = n + 1;
    let mut table = vec![n; m * m];
    for a in 0..n {
        for b in 0..n {
            table[a * m + b] = s.mul(a, b);
        }
    }
    let mut names: Vec<String> = (0..n).map(|x| s.element_name(x)).collect();
    names.push("0".to_string());
    FiniteSemigroup::new(m, table).unwrap().with_names(names)
}

/// Named group tables, identity at id 0, verified at construction.
///
/// `s3`: symmetric group on three points. `d4`: dihedral of order 8 with
/// id = 2*rotation + reflection. `q8`: quaternions ordered 1,-1,i,-i,j,-j,k,-k.
/// `c2xc2`: Klein four group (xor on two bits).
pub fn builtin_group(name: &str) -> Result<GroupSpec, ConstructError> {
    let (table, names): (Vec<usize>, Vec<&str>) = match name {
        "s3" => (
            vec![
                0, 1, 2, 3, 4, 5, //
                1, 0, 5, 4, 3, 2, //
                2, 4, 0, 5, 1, 3, //
                3, 5, 4, 0, 2, 1, //
                4, 2, 3, 1, 5, 0, //
                5, 3, 1, 2, 0, 4,
            ],
            vec!["e", "(01)", "(02)", "(12)", "(012)", "(021)"],
        ),
        "d4" => (
            vec![
                0, 1, 2, 3, 4, 5, 6, 7, //
                1, 0, 7, 6, 5, 4, 3, 2, //
                2, 3, 4, 5, 6, 7, 0, 1, //
                3, 2, 1, 0, 7, 6, 5, 4, //
                4, 5, 6, 7, 0, 1, 2, 3, //
                5, 4, 3, 2, 1, 0, 7, 6, //
                6, 7, 0, 1, 2, 3, 4, 5, //
                7, 6, 5, 4, 3, 2, 1, 0,
            ],
            vec!["e", "s", "r", "rs", "r2", "r2s", "r3", "r3s"],
        ),
        "q8" => (
            vec![
                0, 1, 2, 3, 4, 5, 6, 7, //
                1, 0, 3, 2, 5, 4, 7, 6, //
                2, 3, 1, 0, 6, 7, 5, 4, //
                3, 2, 0, 1, 7, 6, 4, 5, //
                4, 5, 7, 6, 1, 0, 2, 3, //
                5, 4, 6, 7, 0, 1, 3, 2, //
                6, 7, 4, 5, 3, 2, 1, 0, //
                7, 6, 5, 4, 2, 3, 0, 1,
            ],
            vec!["1", "-1", "i", "-i", "j", "-j", "k", "-k"],
        ),
        "c2xc2" => (
            (0..4).flat_map(|a| (0..4).map(move |b| a ^ b)).collect(),
            vec!["e", "a", "b", "ab"],
        ),
        _ => return Err(ConstructError::UnknownBuiltin(name.to_string())),
    };
    let order = names.len();
    let named = FiniteSemigroup::new(order, table)?
        .with_names(names.into_iter().map(String::from).collect());
    GroupSpec::new(named)
}

/// The 8-element completely simple semigroup M[C2; 2, 2; P] whose sandwich
/// matrix has a single non-identity entry. It is 2-nilpotent and 2-solvable
/// but not orthodox, which makes it the standard separating example.
pub fn s2() -> ReesSpec {
    let c2 = cyclic_group(2);
    ReesSpec::new(c2, 2, 2, vec![0, 0, 0, 1]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_validation() {
        assert!(GroupSpec::new(left_zero(2)).is_err());
        let c4 = cyclic_group(4);
        assert_eq!(c4.identity(), 0);
        assert_eq!(c4.inv(1), 3);
        assert!(c4.is_abelian());
        for name in ["s3", "d4", "q8", "c2xc2"] {
            let g = builtin_group(name).unwrap();
            assert_eq!(g.identity(), 0);
            assert_eq!(g.is_abelian(), name == "c2xc2");
        }
        assert!(matches!(
            builtin_group("nope"),
            Err(ConstructError::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn rees_requires_normalized_sandwich() {
        let c2 = cyclic_group(2);
        let err = ReesSpec::new(c2.clone(), 2, 2, vec![0, 1, 0, 1]).unwrap_err();
        assert_eq!(err, ConstructError::NotNormalized { lambda: 0, i: 1 });
        let err = ReesSpec::new(c2.clone(), 2, 2, vec![0, 0, 1, 1]).unwrap_err();
        assert_eq!(err, ConstructError::NotNormalized { lambda: 1, i: 0 });
        let err = ReesSpec::new(c2.clone(), 2, 2, vec![0, 0, 0, 2]).unwrap_err();
        assert_eq!(
            err,
            ConstructError::SandwichOutOfRange {
                lambda: 1,
                i: 1,
                value: 2
            }
        );
        let err = ReesSpec::new(c2, 2, 2, vec![0, 0, 0]).unwrap_err();
        assert_eq!(
            err,
            ConstructError::SandwichSizeMismatch {
                expected: 4,
                got: 3
            }
        );
    }

    #[test]
    fn s2_multiplication_matches_hand_computation() {
        let spec = s2();
        let s = rees_matrix(&spec);
        assert_eq!(s.order(), 8);
        // (1,e,1)(2,g,2) = (1, e·p(1,2)·g, 2) = (1,g,2) in 1-based notation.
        let a = spec.encode(0, 0, 0);
        let b = spec.encode(1, 1, 1);
        let ab = s.mul(a, b);
        assert_eq!(ab, spec.encode(0, 1, 1));
        // its square is (1,e,2) != (1,g,2), so idempotents are not closed
        assert_eq!(s.mul(ab, ab), spec.encode(0, 0, 1));
        assert!(s.is_completely_simple());
        assert!(s.is_regular());
        assert!(!s.is_orthodox());
        assert_eq!(s.non_closed_idempotent_pair(), Some((0, 7)));
        assert_eq!(s.idempotents(), alloc::vec![0, 1, 4, 7]);
        assert!(s.is_idempotent_antichain());
        assert!(!s.is_inverse_semigroup());
    }

    #[test]
    fn identity_sandwich_gives_orthodox() {
        let spec = ReesSpec::new(cyclic_group(2), 2, 2, vec![0; 4]).unwrap();
        let s = rees_matrix(&spec);
        assert!(s.is_orthodox() && s.is_completely_simple());
    }

    #[test]
    fn adjoin_zero_order_structure() {
        let s = adjoin_zero(cyclic_group(2).underlying());
        assert_eq!(s.order(), 3);
        assert_eq!(s.idempotents(), alloc::vec![0, 2]);
        // zero sits below the group identity
        assert!(s.natural_leq(2, 0).unwrap());
        assert!(!s.is_simple());
        assert!(!s.is_idempotent_antichain());
    }

    #[test]
    fn zero_semigroup_shapes() {
        assert!(left_zero(3).is_left_zero());
        assert!(right_zero(3).is_right_zero());
        let rb = rectangular_band(2, 3);
        assert!(rb.is_rectangular_band() && rb.is_simple());
        assert_eq!(trivial().order(), 1);
    }
}
