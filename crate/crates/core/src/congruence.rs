//! Congruences as translation-closed partitions, their lattice, product
//! congruences, and the linked-triple coordinates of congruences on Rees
//! matrix semigroups.
//!
//! Partitions are kept canonical: the label of a class is its least member.
//! That makes structural equality, ordering, and all printed output
//! deterministic with no further normalization anywhere downstream.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::construct::ReesSpec;
use crate::product::DirectProduct;
use crate::semigroup::FiniteSemigroup;
use crate::util::UnionFind;

/// Default cap on congruence lattice size.
pub const DEFAULT_LATTICE_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongError {
    MalformedPartition(String),
    /// The partition is not compatible with the algebra's multiplication.
    NotACongruence,
    AlgebraMismatch { expected: usize, got: usize },
    LatticeTooLarge { cap: usize },
    /// The triple does not induce a congruence (or N is not a normal
    /// subgroup), so it is not linked.
    NotLinked,
}

impl core::fmt::Display for CongError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CongError::MalformedPartition(why) => write!(f, "malformed partition: {why}"),
            CongError::NotACongruence => write!(f, "partition is not a congruence"),
            CongError::AlgebraMismatch { expected, got } => {
                write!(f, "partition is over {got} elements, algebra has {expected}")
            }
            CongError::LatticeTooLarge { cap } => {
                write!(f, "congruence lattice exceeds cap of {cap} members")
            }
            CongError::NotLinked => write!(f, "triple is not linked"),
        }
    }
}

impl core::error::Error for CongError {}

/// A partition of `0..n` in canonical form: `class_of[x]` is the least
/// element of the class of `x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    class_of: Vec<usize>,
}

impl Partition {
    /// Canonicalizes an arbitrary class-label vector (labels need not be
    /// members; only equality of labels matters).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut first: alloc::collections::BTreeMap<usize, usize> =
            alloc::collections::BTreeMap::new();
        let mut class_of = vec![0; labels.len()];
        for (x, &l) in labels.iter().enumerate() {
            class_of[x] = *first.entry(l).or_insert(x);
        }
        Partition { class_of }
    }

    /// Builds from explicit blocks covering `0..n` exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, CongError> {
        let mut class_of = vec![usize::MAX; n];
        for block in blocks {
            if block.is_empty() {
                return Err(CongError::MalformedPartition("empty block".into()));
            }
            let rep = *block.iter().min().unwrap();
            for &x in block {
                if x >= n {
                    return Err(CongError::MalformedPartition(alloc::format!(
                        "element {x} out of range"
                    )));
                }
                if class_of[x] != usize::MAX {
                    return Err(CongError::MalformedPartition(alloc::format!(
                        "element {x} listed twice"
                    )));
                }
                class_of[x] = rep;
            }
        }
        if let Some(x) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(CongError::MalformedPartition(alloc::format!(
                "element {x} missing"
            )));
        }
        Ok(Partition { class_of })
    }

    /// The identity (finest) partition.
    pub fn zero(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
        }
    }

    /// The universal (coarsest) partition.
    pub fn one(n: usize) -> Self {
        Partition {
            class_of: vec![0; n],
        }
    }

    pub fn size(&self) -> usize {
        self.class_of.len()
    }

    #[inline]
    pub fn rep(&self, x: usize) -> usize {
        self.class_of[x]
    }

    #[inline]
    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(x, &c)| x == c)
            .count()
    }

    pub fn is_zero(&self) -> bool {
        self.class_of.iter().enumerate().all(|(x, &c)| x == c)
    }

    pub fn is_one(&self) -> bool {
        self.class_of.iter().all(|&c| c == 0)
    }

    /// Blocks sorted by least member; members ascending inside each block.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut blocks: alloc::collections::BTreeMap<usize, Vec<usize>> =
            alloc::collections::BTreeMap::new();
        for (x, &c) in self.class_of.iter().enumerate() {
            blocks.entry(c).or_default().push(x);
        }
        blocks.into_values().collect()
    }

    /// True iff every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        debug_assert_eq!(self.size(), coarser.size());
        self.class_of
            .iter()
            .enumerate()
            .all(|(x, &c)| coarser.class_of[x] == coarser.class_of[c])
    }

    /// All related ordered pairs (x, y) with x < y.
    pub fn related_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for x in 0..self.size() {
            for y in x + 1..self.size() {
                if self.same(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }
}

impl core::fmt::Display for Partition {
    /// Text form: `{0,3|1,2}`.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        for (bi, block) in self.classes().iter().enumerate() {
            if bi > 0 {
                write!(f, "|")?;
            }
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "}}")
    }
}

impl core::str::FromStr for Partition {
    type Err = CongError;

    fn from_str(s: &str) -> Result<Self, CongError> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| CongError::MalformedPartition("expected {...}".into()))?;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut count = 0;
        for part in inner.split('|') {
            let mut block = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(CongError::MalformedPartition("empty element".into()));
                }
                let x: usize = tok
                    .parse()
                    .map_err(|_| CongError::MalformedPartition(alloc::format!("bad token '{tok}'")))?;
                block.push(x);
                count += 1;
            }
            blocks.push(block);
        }
        Partition::from_blocks(count, &blocks)
    }
}

/// A congruence: a partition verified compatible with a specific algebra's
/// multiplication (recorded only by order; callers keep track of the algebra).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Congruence {
    part: Partition,
}

impl Congruence {
    /// Validates compatibility of the partition with `s`.
    pub fn new(s: &FiniteSemigroup, part: Partition) -> Result<Self, CongError> {
        if part.size() != s.order() {
            return Err(CongError::AlgebraMismatch {
                expected: s.order(),
                got: part.size(),
            });
        }
        if !is_congruence(s, &part) {
            return Err(CongError::NotACongruence);
        }
        Ok(Congruence { part })
    }

    pub fn zero(s: &FiniteSemigroup) -> Self {
        Congruence {
            part: Partition::zero(s.order()),
        }
    }

    pub fn one(s: &FiniteSemigroup) -> Self {
        Congruence {
            part: Partition::one(s.order()),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.part
    }

    pub fn size(&self) -> usize {
        self.part.size()
    }

    #[inline]
    pub fn same(&self, x: usize, y: usize) -> bool {
        self.part.same(x, y)
    }

    #[inline]
    pub fn rep(&self, x: usize) -> usize {
        self.part.rep(x)
    }

    pub fn is_zero(&self) -> bool {
        self.part.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.part.is_one()
    }

    pub fn leq(&self, other: &Congruence) -> bool {
        self.part.refines(&other.part)
    }

    /// Meet: plain intersection of the relations, always a congruence.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        debug_assert_eq!(self.size(), other.size());
        let n = self.size();
        let mut key_to_rep: alloc::collections::BTreeMap<(usize, usize), usize> =
            alloc::collections::BTreeMap::new();
        let mut class_of = vec![0; n];
        for x in 0..n {
            let key = (self.part.rep(x), other.part.rep(x));
            class_of[x] = *key_to_rep.entry(key).or_insert(x);
        }
        Congruence {
            part: Partition { class_of },
        }
    }

    /// Join: transitive closure of the union. For congruences the result is
    /// already translation-closed, so no multiplication is consulted.
    pub fn join(&self, other: &Congruence) -> Congruence {
        debug_assert_eq!(self.size(), other.size());
        let mut uf = UnionFind::from_class_map(self.part.class_map());
        for (x, &c) in other.part.class_map().iter().enumerate() {
            uf.union(x, c);
        }
        Congruence {
            part: Partition {
                class_of: uf.into_class_map(),
            },
        }
    }
}

impl core::fmt::Display for Congruence {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        self.part.fmt(f)
    }
}

/// Compatibility test: related pairs stay related under every left and right
/// translation.
pub fn is_congruence(s: &FiniteSemigroup, part: &Partition) -> bool {
    if part.size() != s.order() {
        return false;
    }
    let n = s.order();
    for x in 0..n {
        for y in x + 1..n {
            if !part.same(x, y) {
                continue;
            }
            for t in 0..n {
                if !part.same(s.mul(t, x), s.mul(t, y)) || !part.same(s.mul(x, t), s.mul(y, t)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Least congruence containing `base` (if given) and all seed pairs.
///
/// Worklist closure: each newly merged pair is pushed back under every
/// one-sided translation x -> sx and x -> xs; two-sided translations are
/// compositions of those, so this converges to the congruence generated.
pub(crate) fn generated_congruence(
    s: &FiniteSemigroup,
    base: Option<&Congruence>,
    seeds: &[(usize, usize)],
) -> Congruence {
    let n = s.order();
    let mut uf = match base {
        Some(c) => UnionFind::from_class_map(c.part.class_map()),
        None => UnionFind::new(n),
    };
    let mut work: Vec<(usize, usize)> = seeds.to_vec();
    while let Some((x, y)) = work.pop() {
        if !uf.union(x, y) {
            continue;
        }
        for t in 0..n {
            let (a, b) = (s.mul(t, x), s.mul(t, y));
            if uf.find(a) != uf.find(b) {
                work.push((a, b));
            }
            let (a, b) = (s.mul(x, t), s.mul(y, t));
            if uf.find(a) != uf.find(b) {
                work.push((a, b));
            }
        }
    }
    Congruence {
        part: Partition {
            class_of: uf.into_class_map(),
        },
    }
}

/// Principal congruence Cg(a, b).
pub fn principal_congruence(s: &FiniteSemigroup, a: usize, b: usize) -> Congruence {
    assert!(a < s.order() && b < s.order());
    generated_congruence(s, None, &[(a, b)])
}

/// The full congruence lattice, members sorted lexicographically by class map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceLattice {
    members: Vec<Congruence>,
}

impl CongruenceLattice {
    pub fn members(&self) -> &[Congruence] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.members[i]
    }

    pub fn index_of(&self, c: &Congruence) -> Option<usize> {
        self.members.binary_search(c).ok()
    }

    pub fn zero_index(&self) -> usize {
        self.index_of_unchecked(|c| c.is_zero())
    }

    pub fn one_index(&self) -> usize {
        self.index_of_unchecked(|c| c.is_one())
    }

    fn index_of_unchecked(&self, pred: impl Fn(&Congruence) -> bool) -> usize {
        self.members
            .iter()
            .position(pred)
            .expect("lattice always contains 0 and 1")
    }

    /// Containment of members by index.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.members[i].leq(&self.members[j])
    }

    /// Covering pairs (lower index, upper index) of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = self.members.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let has_mid = (0..m).any(|k| {
                    k != i && k != j && self.leq(i, k) && self.leq(k, j)
                });
                if !has_mid {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Enumerates all congruences: distinct principal congruences, closed under
/// join, plus the identity. Every congruence is a join of principals, so this
/// is exhaustive.
pub fn all_congruences(s: &FiniteSemigroup, cap: usize) -> Result<CongruenceLattice, CongError> {
    let n = s.order();
    let mut principals: Vec<Congruence> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            let c = principal_congruence(s, a, b);
            if seen.insert(c.part.class_map().to_vec()) {
                principals.push(c);
            }
        }
    }
    let zero = Congruence::zero(s);
    seen.insert(zero.part.class_map().to_vec());
    let mut members: Vec<Congruence> = vec![zero];
    members.extend(principals.iter().cloned());
    // the seed (zero + principals) counts against the cap too, not just the
    // members discovered by join closure below
    if members.len() > cap {
        return Err(CongError::LatticeTooLarge { cap });
    }
    let mut frontier: Vec<Congruence> = principals.clone();
    while let Some(m) = frontier.pop() {
        for p in &principals {
            let j = m.join(p);
            if seen.insert(j.part.class_map().to_vec()) {
                if members.len() + 1 > cap {
                    return Err(CongError::LatticeTooLarge { cap });
                }
                members.push(j.clone());
                frontier.push(j);
            }
        }
    }
    members.sort();
    Ok(CongruenceLattice { members })
}

/// Componentwise product of factor congruences, as a congruence of the
/// product algebra.
pub fn product_congruence(
    product: &DirectProduct,
    parts: &[&Congruence],
) -> Result<Congruence, CongError> {
    let orders = product.factor_orders();
    if parts.len() != orders.len() {
        return Err(CongError::AlgebraMismatch {
            expected: orders.len(),
            got: parts.len(),
        });
    }
    for (p, &m) in parts.iter().zip(orders) {
        if p.size() != m {
            return Err(CongError::AlgebraMismatch {
                expected: m,
                got: p.size(),
            });
        }
    }
    let n = product.algebra().order();
    let mut class_of = vec![0; n];
    for id in 0..n {
        let coords = product.decode(id);
        let reps: Vec<usize> = coords
            .iter()
            .zip(parts)
            .map(|(&c, p)| p.rep(c))
            .collect();
        // tuple of least members is the least member of the product class
        class_of[id] = product.encode(&reps);
    }
    Ok(Congruence {
        part: Partition { class_of },
    })
}

/// True iff every congruence of the product is a product of factor
/// congruences. Exact: both sides are enumerated.
pub fn is_skew_free(product: &DirectProduct, cap: usize) -> Result<bool, CongError> {
    let full = all_congruences(product.algebra(), cap)?;
    let mut produced: BTreeSet<Congruence> = BTreeSet::new();
    let factor_lattices: Vec<CongruenceLattice> = product
        .factors()
        .iter()
        .map(|f| all_congruences(f, cap))
        .collect::<Result<_, _>>()?;
    let mut idx = vec![0usize; factor_lattices.len()];
    loop {
        let parts: Vec<&Congruence> = idx
            .iter()
            .zip(&factor_lattices)
            .map(|(&i, l)| l.get(i))
            .collect();
        produced.insert(product_congruence(product, &parts)?);
        // odometer over factor lattice indices
        let mut k = factor_lattices.len();
        loop {
            if k == 0 {
                let all: BTreeSet<Congruence> = full.members().iter().cloned().collect();
                return Ok(all == produced);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < factor_lattices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The linked-triple coordinates of a congruence on a normalized Rees matrix
/// semigroup: a partition of I, a normal subgroup N of G, a partition of
/// Lambda.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedTriple {
    pub i_classes: Partition,
    /// Sorted element ids of the normal subgroup N of G.
    pub group_normal: Vec<usize>,
    pub lambda_classes: Partition,
}

fn is_normal_subgroup(spec: &ReesSpec, subset: &[usize]) -> bool {
    let g = spec.group();
    let member = |x: usize| subset.binary_search(&x).is_ok();
    if !member(g.identity()) || subset.iter().any(|&x| x >= g.order()) {
        return false;
    }
    for &a in subset {
        if !member(g.inv(a)) {
            return false;
        }
        for &b in subset {
            if !member(g.mul(a, b)) {
                return false;
            }
        }
        for x in 0..g.order() {
            if !member(g.mul(g.mul(x, a), g.inv(x))) {
                return false;
            }
        }
    }
    true
}

/// Extracts the linked triple of a congruence `rho` on `rees_matrix(spec)`:
/// classes of I read off at (.,e,0), classes of Lambda at (0,e,.), and
/// N = { g : (0,g,0) rho (0,e,0) }.
pub fn linked_triple(spec: &ReesSpec, rho: &Congruence) -> Result<LinkedTriple, CongError> {
    if rho.size() != spec.order() {
        return Err(CongError::AlgebraMismatch {
            expected: spec.order(),
            got: rho.size(),
        });
    }
    let s = crate::construct::rees_matrix(spec);
    if !is_congruence(&s, rho.partition()) {
        return Err(CongError::NotACongruence);
    }
    let e = spec.group().identity();
    let by_rel = |m: usize, elt: &dyn Fn(usize) -> usize| -> Partition {
        let mut labels = vec![0; m];
        for (x, l) in labels.iter_mut().enumerate() {
            *l = rho.rep(elt(x));
        }
        Partition::from_labels(&labels)
    };
    let i_classes = by_rel(spec.i_size(), &|i| spec.encode(i, e, 0));
    let lambda_classes = by_rel(spec.lambda_size(), &|l| spec.encode(0, e, l));
    let group_normal: Vec<usize> = (0..spec.group().order())
        .filter(|&g| rho.same(spec.encode(0, g, 0), spec.encode(0, e, 0)))
        .collect();
    if !is_normal_subgroup(spec, &group_normal) {
        // cannot happen for genuine congruences; defensive
        return Err(CongError::NotACongruence);
    }
    Ok(LinkedTriple {
        i_classes,
        group_normal,
        lambda_classes,
    })
}

/// Rebuilds the congruence defined by a triple:
/// (i,g,l) ~ (j,h,m) iff i ~ j, l ~ m, and h⁻¹g in N.
/// Fails with `NotLinked` when the induced relation is not a congruence.
pub fn congruence_from_triple(
    spec: &ReesSpec,
    triple: &LinkedTriple,
) -> Result<Congruence, CongError> {
    if triple.i_classes.size() != spec.i_size()
        || triple.lambda_classes.size() != spec.lambda_size()
    {
        return Err(CongError::AlgebraMismatch {
            expected: spec.i_size(),
            got: triple.i_classes.size(),
        });
    }
    let mut sorted = triple.group_normal.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if !is_normal_subgroup(spec, &sorted) {
        return Err(CongError::NotLinked);
    }
    let g = spec.group();
    let in_n = |x: usize| sorted.binary_search(&x).is_ok();
    let n = spec.order();
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        let (i, x, l) = spec.decode(a);
        for b in a + 1..n {
            let (j, y, m) = spec.decode(b);
            if triple.i_classes.same(i, j)
                && triple.lambda_classes.same(l, m)
                && in_n(g.mul(g.inv(y), x))
            {
                uf.union(a, b);
            }
        }
    }
    let part = Partition {
        class_of: uf.into_class_map(),
    };
    let s = crate::construct::rees_matrix(spec);
    Congruence::new(&s, part).map_err(|_| CongError::NotLinked)
}

/// Round-trip check: a congruence of a Rees matrix semigroup equals the
/// product congruence its linked triple induces.
pub fn verify_cong_product(spec: &ReesSpec, rho: &Congruence) -> Result<bool, CongError> {
    let triple = linked_triple(spec, rho)?;
    let rebuilt = congruence_from_triple(spec, &triple)?;
    Ok(rebuilt == *rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic_group, left_zero, rees_matrix, s2};
    use alloc::string::ToString;

    #[test]
    fn partition_canonical_and_display() {
        let p = Partition::from_labels(&[7, 7, 3, 3, 9]);
        assert_eq!(p.class_map(), &[0, 0, 2, 2, 4]);
        assert_eq!(p.to_string(), "{0,1|2,3|4}");
        assert_eq!(p.class_count(), 3);
        let q: Partition = "{0,3|1,2|4}".parse().unwrap();
        assert_eq!(q.class_map(), &[0, 1, 1, 0, 4]);
        assert_eq!(q.to_string(), "{0,3|1,2|4}");
    }

    #[test]
    fn partition_parse_rejects_garbage() {
        assert!("{0,2|1}".parse::<Partition>().is_ok()); // ids 0,1,2 each once
        assert!("0,1".parse::<Partition>().is_err());
        assert!("{0,0|1}".parse::<Partition>().is_err());
        assert!("{0,|1}".parse::<Partition>().is_err());
        assert!("{0,3|1}".parse::<Partition>().is_err()); // element 2 missing
    }

    #[test]
    fn congruence_validation_on_c4() {
        let c4 = cyclic_group(4).into_underlying();
        let good = Partition::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert!(Congruence::new(&c4, good).is_ok());
        let bad = Partition::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            Congruence::new(&c4, bad).unwrap_err(),
            CongError::NotACongruence
        );
    }

    #[test]
    fn principal_congruences() {
        let c4 = cyclic_group(4).into_underlying();
        assert!(principal_congruence(&c4, 2, 2).is_zero());
        // Cg(0,2) is the order-2 subgroup congruence
        assert_eq!(principal_congruence(&c4, 0, 2).to_string(), "{0,2|1,3}");
        // Cg(0,1) collapses everything
        assert!(principal_congruence(&c4, 0, 1).is_one());
        let lz = left_zero(2);
        assert!(principal_congruence(&lz, 0, 1).is_one());
    }

    #[test]
    fn lattice_of_small_algebras() {
        let c4 = cyclic_group(4).into_underlying();
        let lat = all_congruences(&c4, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(lat.len(), 3);
        let lz3 = left_zero(3);
        // every partition is a congruence of a left-zero semigroup
        assert_eq!(all_congruences(&lz3, DEFAULT_LATTICE_CAP).unwrap().len(), 5);
        assert_eq!(
            all_congruences(&lz3, 3).unwrap_err(),
            CongError::LatticeTooLarge { cap: 3 }
        );
        // the cap also applies when zero + principals alone exceed it (the
        // 3-member chain lattice of c4 needs no join closure at all)
        assert_eq!(
            all_congruences(&c4, 2).unwrap_err(),
            CongError::LatticeTooLarge { cap: 2 }
        );
        assert_eq!(all_congruences(&c4, 3).unwrap().len(), 3);
    }

    #[test]
    fn join_meet_are_lattice_ops() {
        let lz3 = left_zero(3);
        let a = principal_congruence(&lz3, 0, 1);
        let b = principal_congruence(&lz3, 1, 2);
        assert!(a.meet(&b).is_zero());
        assert!(a.join(&b).is_one());
        assert_eq!(a.join(&a), a);
        assert!(a.meet(&b).leq(&a));
        assert!(a.leq(&a.join(&b)));
    }

    #[test]
    fn s2_lattice_and_triples() {
        let spec = s2();
        let s = rees_matrix(&spec);
        let lat = all_congruences(&s, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(lat.len(), 5);
        let strs: Vec<String> = lat.members().iter().map(|c| c.to_string()).collect();
        assert!(strs.contains(&"{0,2|1,3|4,6|5,7}".to_string()));
        assert!(strs.contains(&"{0,2,4,6|1,3,5,7}".to_string()));
        assert!(strs.contains(&"{0,1,2,3|4,5,6,7}".to_string()));
        for rho in lat.members() {
            assert_eq!(verify_cong_product(&spec, rho), Ok(true));
        }
        // triple of the group-kernel congruence: trivial I/Lambda classes, N = C2
        let rho: Congruence = Congruence::new(
            &s,
            "{0,2|1,3|4,6|5,7}".parse::<Partition>().unwrap(),
        )
        .unwrap();
        let t = linked_triple(&spec, &rho).unwrap();
        assert!(t.i_classes.is_zero() && t.lambda_classes.is_zero());
        assert_eq!(t.group_normal, vec![0, 1]);
        // collapsing I without collapsing G is not linked here
        let bad = LinkedTriple {
            i_classes: Partition::one(2),
            group_normal: vec![0],
            lambda_classes: Partition::zero(2),
        };
        assert_eq!(
            congruence_from_triple(&spec, &bad).unwrap_err(),
            CongError::NotLinked
        );
        // order-preserving bijection: containment matches componentwise containment
        for x in lat.members() {
            let tx = linked_triple(&spec, x).unwrap();
            for y in lat.members() {
                let ty = linked_triple(&spec, y).unwrap();
                let comp = tx.i_classes.refines(&ty.i_classes)
                    && tx.group_normal.iter().all(|g| ty.group_normal.contains(g))
                    && tx.lambda_classes.refines(&ty.lambda_classes);
                assert_eq!(x.leq(y), comp);
            }
        }
    }

    #[test]
    fn product_congruences_and_skew_freeness() {
        let c2 = cyclic_group(2).into_underlying();
        let c3 = cyclic_group(3).into_underlying();
        let p23 = DirectProduct::new(&[&c2, &c3]);
        assert_eq!(is_skew_free(&p23, DEFAULT_LATTICE_CAP), Ok(true));
        let p22 = DirectProduct::new(&[&c2, &c2]);
        // the diagonal congruence of C2 x C2 is not a product
        assert_eq!(is_skew_free(&p22, DEFAULT_LATTICE_CAP), Ok(false));
        let zero2 = Congruence::zero(&c2);
        let one2 = Congruence::one(&c2);
        let pc = product_congruence(&p22, &[&zero2, &one2]).unwrap();
        assert_eq!(pc.to_string(), "{0,1|2,3}");
        assert!(product_congruence(&p22, &[&zero2]).is_err());
    }

    #[test]
    fn covers_of_s2_lattice() {
        let s = rees_matrix(&s2());
        let lat = all_congruences(&s, DEFAULT_LATTICE_CAP).unwrap();
        let covers = lat.covers();
        // diamond with doubled middle: 0 < rho < {rho_I, rho_Lambda} < 1
        assert_eq!(covers.len(), 5);
        let zero = lat.zero_index();
        let one = lat.one_index();
        assert_eq!(covers.iter().filter(|&&(a, _)| a == zero).count(), 1);
        assert_eq!(covers.iter().filter(|&&(_, b)| b == one).count(), 2);
    }
}
