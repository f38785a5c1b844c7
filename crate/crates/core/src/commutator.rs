//! Higher (k-ary) term-condition commutators on cube subpowers.
//!
//! The centralizing condition quantifies over all polynomials of the algebra.
//! Polynomials of a semigroup are nonempty words in variables and constants,
//! so the tuple of values a polynomial takes across the 2^k choice patterns —
//! a *cube* — ranges exactly over the subsemigroup of S^(2^k) generated by
//! constant cubes and edge cubes. Each variable of block j contributes an
//! edge cube (its pair (a, b) placed by bit j of the coordinate index), each
//! constant a constant cube, and the word multiplies them coordinatewise.
//! Closing the generators under right multiplication enumerates every word
//! value (each word is prefix·letter), replacing the polynomial quantifier by
//! one finite closure per congruence list.
//!
//! Coordinate convention: cube entries are indexed by bit vectors
//! (b1, ..., bk) read most-significant-first, so block 1 is the top bit and
//! block k — the pair block of the condition — is bit 0. Premise rows are the
//! coordinate pairs (2p, 2p+1) for every proper prefix p, the conclusion row
//! is the last pair (2^k - 2, 2^k - 1).

use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::{generated_congruence, Congruence};
use crate::semigroup::FiniteSemigroup;
use crate::util::{Bits, U64Set};

/// Budgets for cube-set generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubeBudget {
    /// Largest supported arity (number of congruence arguments).
    pub max_arity: usize,
    /// Cap on generated cube-set members.
    pub max_members: usize,
}

impl Default for CubeBudget {
    fn default() -> Self {
        CubeBudget {
            max_arity: 4,
            max_members: 50_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubeError {
    UnsupportedArity { arity: usize, max: usize },
    AlgebraMismatch { expected: usize, got: usize },
    TooManyMembers { cap: usize },
    /// order^(2^arity) does not fit the 64-bit dense encoding.
    EncodingOverflow { order: usize, arity: usize },
    OracleBudgetExceeded { max_steps: u64 },
}

impl core::fmt::Display for CubeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            CubeError::UnsupportedArity { arity, max } => {
                write!(f, "arity {arity} unsupported (budget allows at most {max})")
            }
            CubeError::AlgebraMismatch { expected, got } => {
                write!(f, "congruence over {got} elements given, algebra has {expected}")
            }
            CubeError::TooManyMembers { cap } => {
                write!(f, "cube set exceeds cap of {cap} members")
            }
            CubeError::EncodingOverflow { order, arity } => {
                write!(f, "cube codes for order {order} at arity {arity} overflow 64 bits")
            }
            CubeError::OracleBudgetExceeded { max_steps } => {
                write!(f, "word oracle exceeded its budget of {max_steps} steps")
            }
        }
    }
}

impl core::error::Error for CubeError {}

/// A single cube: 2^k element ids in bit-vector index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cube {
    entries: Vec<usize>,
}

impl Cube {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Cube dimension k (entries are 2^k).
    pub fn arity(&self) -> usize {
        self.entries.len().trailing_zeros() as usize
    }
}

impl core::fmt::Display for Cube {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of a centralizing-condition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Centrality {
    Holds,
    /// A cube whose premise rows are delta-related but whose conclusion row
    /// is not.
    Violation(Cube),
}

impl Centrality {
    pub fn holds(&self) -> bool {
        matches!(self, Centrality::Holds)
    }

    pub fn witness(&self) -> Option<&Cube> {
        match self {
            Centrality::Holds => None,
            Centrality::Violation(c) => Some(c),
        }
    }
}

/// Dense mixed-radix encoding of cubes: base `order`, one digit per
/// coordinate, coordinate 0 least significant.
#[derive(Clone, Debug)]
struct CubeSpace {
    order: usize,
    coords: usize,
    pow: Vec<u64>,
}

impl CubeSpace {
    fn new(order: usize, arity: usize) -> Result<Self, CubeError> {
        let coords = 1usize << arity;
        let mut pow = Vec::with_capacity(coords + 1);
        let mut p: u64 = 1;
        pow.push(1);
        for _ in 0..coords {
            p = p
                .checked_mul(order as u64)
                .ok_or(CubeError::EncodingOverflow { order, arity })?;
            pow.push(p);
        }
        Ok(CubeSpace { order, coords, pow })
    }

    /// Total number of codes, order^coords.
    fn span(&self) -> u64 {
        self.pow[self.coords]
    }

    #[inline]
    fn encode(&self, digits: &[u16]) -> u64 {
        let mut code = 0u64;
        for &d in digits.iter().rev() {
            code = code * self.order as u64 + d as u64;
        }
        code
    }

    #[inline]
    fn decode(&self, mut code: u64, out: &mut [u16]) {
        for d in out.iter_mut() {
            *d = (code % self.order as u64) as u16;
            code /= self.order as u64;
        }
    }
}

/// Membership structure: dense bit vector when the code space is small,
/// open-addressing set otherwise.
#[derive(Clone, Debug)]
enum Members {
    Dense(Bits),
    Sparse(U64Set),
}

const DENSE_LIMIT: u64 = 1 << 28;

impl Members {
    fn new(span: u64) -> Self {
        if span <= DENSE_LIMIT {
            Members::Dense(Bits::new(span as usize))
        } else {
            Members::Sparse(U64Set::with_capacity(1 << 16))
        }
    }

    #[inline]
    fn insert(&mut self, code: u64) -> bool {
        match self {
            Members::Dense(b) => b.insert(code as usize),
            Members::Sparse(s) => s.insert(code),
        }
    }

    #[inline]
    fn contains(&self, code: u64) -> bool {
        match self {
            Members::Dense(b) => b.get(code as usize),
            Members::Sparse(s) => s.contains(code),
        }
    }
}

/// The generated cube set for one list of congruences, codes ascending.
#[derive(Clone, Debug)]
pub struct CubeSet {
    order: usize,
    arity: usize,
    space: CubeSpace,
    codes: Vec<u64>,
}

impl CubeSet {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Codes in ascending order.
    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn contains(&self, entries: &[usize]) -> bool {
        if entries.len() != self.space.coords || entries.iter().any(|&e| e >= self.order) {
            return false;
        }
        let digits: Vec<u16> = entries.iter().map(|&e| e as u16).collect();
        self.codes.binary_search(&self.space.encode(&digits)).is_ok()
    }

    pub fn cube_at(&self, i: usize) -> Cube {
        let mut digits = vec![0u16; self.space.coords];
        self.space.decode(self.codes[i], &mut digits);
        Cube {
            entries: digits.iter().map(|&d| d as usize).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Cube> + '_ {
        (0..self.codes.len()).map(|i| self.cube_at(i))
    }
}

/// Read-only context handed to expanders: successor computation over the
/// frozen member set of the current BFS level.
pub struct ExpandCtx<'a> {
    table: &'a [usize],
    order: usize,
    space: &'a CubeSpace,
    generators: &'a [Vec<u16>],
    members: &'a Members,
}

impl ExpandCtx<'_> {
    /// Pushes codes of `cube * g` for every generator `g`, skipping codes
    /// already in the member set. Duplicates may appear; the driver dedups.
    pub fn successors(&self, code: u64, out: &mut Vec<u64>) {
        let coords = self.space.coords;
        let mut digits = vec![0u16; coords];
        self.space.decode(code, &mut digits);
        let mut prod = vec![0u16; coords];
        for g in self.generators {
            for i in 0..coords {
                prod[i] = self.table[digits[i] as usize * self.order + g[i] as usize] as u16;
            }
            let c = self.space.encode(&prod);
            if !self.members.contains(c) {
                out.push(c);
            }
        }
    }
}

/// Strategy for expanding one BFS level. Implementations may partition the
/// level across workers; results are deduplicated in order by the driver, so
/// any partitioning that preserves level order yields identical output.
pub trait CubeExpander {
    fn expand(&mut self, ctx: &ExpandCtx<'_>, level: &[u64]) -> Vec<u64>;
}

/// Single-threaded expander.
#[derive(Default)]
pub struct SequentialExpander;

impl CubeExpander for SequentialExpander {
    fn expand(&mut self, ctx: &ExpandCtx<'_>, level: &[u64]) -> Vec<u64> {
        let mut out = Vec::new();
        for &code in level {
            ctx.successors(code, &mut out);
        }
        out
    }
}

fn check_alphas(
    s: &FiniteSemigroup,
    alphas: &[&Congruence],
    budget: &CubeBudget,
    min_arity: usize,
) -> Result<(), CubeError> {
    let k = alphas.len();
    if k < min_arity || k > budget.max_arity {
        return Err(CubeError::UnsupportedArity {
            arity: k,
            max: budget.max_arity,
        });
    }
    for a in alphas {
        if a.size() != s.order() {
            return Err(CubeError::AlgebraMismatch {
                expected: s.order(),
                got: a.size(),
            });
        }
    }
    Ok(())
}

/// Generator cubes: one constant cube per element, then for each block j an
/// edge cube per ordered related pair (a, b) with a != b — digit a where bit
/// (k - j) of the coordinate index is clear, b where set.
fn generator_cubes(order: usize, alphas: &[&Congruence], coords: usize) -> Vec<Vec<u16>> {
    let k = alphas.len();
    let mut gens: Vec<Vec<u16>> = Vec::new();
    for a in 0..order {
        gens.push(vec![a as u16; coords]);
    }
    for (j, alpha) in alphas.iter().enumerate() {
        let bit = k - 1 - j;
        for a in 0..order {
            for b in 0..order {
                if a == b || !alpha.same(a, b) {
                    continue;
                }
                let cube: Vec<u16> = (0..coords)
                    .map(|idx| if idx >> bit & 1 == 0 { a as u16 } else { b as u16 })
                    .collect();
                gens.push(cube);
            }
        }
    }
    gens
}

/// Generates the cube set for `alphas` (arity = alphas.len() >= 1).
pub fn generate_cube_set(
    s: &FiniteSemigroup,
    alphas: &[&Congruence],
) -> Result<CubeSet, CubeError> {
    generate_cube_set_with(s, alphas, &CubeBudget::default(), &mut SequentialExpander)
}

pub fn generate_cube_set_with(
    s: &FiniteSemigroup,
    alphas: &[&Congruence],
    budget: &CubeBudget,
    expander: &mut dyn CubeExpander,
) -> Result<CubeSet, CubeError> {
    check_alphas(s, alphas, budget, 1)?;
    let k = alphas.len();
    let order = s.order();
    let space = CubeSpace::new(order, k)?;
    let coords = space.coords;
    let generators = generator_cubes(order, alphas, coords);
    let mut members = Members::new(space.span());
    let mut all: Vec<u64> = Vec::new();
    let mut level: Vec<u64> = Vec::new();
    for g in &generators {
        let code = space.encode(g);
        if members.insert(code) {
            all.push(code);
            level.push(code);
        }
    }
    while !level.is_empty() {
        if all.len() > budget.max_members {
            return Err(CubeError::TooManyMembers {
                cap: budget.max_members,
            });
        }
        let candidates = {
            let ctx = ExpandCtx {
                table: s.table(),
                order,
                space: &space,
                generators: &generators,
                members: &members,
            };
            expander.expand(&ctx, &level)
        };
        let mut next = Vec::new();
        for code in candidates {
            if members.insert(code) {
                if all.len() + 1 > budget.max_members {
                    return Err(CubeError::TooManyMembers {
                        cap: budget.max_members,
                    });
                }
                all.push(code);
                next.push(code);
            }
        }
        level = next;
    }
    all.sort_unstable();
    Ok(CubeSet {
        order,
        arity: k,
        space,
        codes: all,
    })
}

/// Premise rows hold but the conclusion row fails under `delta`.
#[inline]
fn violates(entries: &[u16], delta: &Congruence, coords: usize) -> bool {
    let mut p = 0;
    while p + 2 < coords {
        if !delta.same(entries[p] as usize, entries[p + 1] as usize) {
            return false;
        }
        p += 2;
    }
    !delta.same(entries[coords - 2] as usize, entries[coords - 1] as usize)
}

/// Checks the centralizing condition C(alphas[0..k-1], alphas[k-1]; delta).
/// The last congruence of `alphas` is the pair block of the condition.
pub fn centralizes(
    s: &FiniteSemigroup,
    alphas: &[&Congruence],
    delta: &Congruence,
) -> Result<Centrality, CubeError> {
    centralizes_with(s, alphas, delta, &CubeBudget::default(), &mut SequentialExpander)
}

pub fn centralizes_with(
    s: &FiniteSemigroup,
    alphas: &[&Congruence],
    delta: &Congruence,
    budget: &CubeBudget,
    expander: &mut dyn CubeExpander,
) -> Result<Centrality, CubeError> {
    check_alphas(s, alphas, budget, 2)?;
    if delta.size() != s.order() {
        return Err(CubeError::AlgebraMismatch {
            expected: s.order(),
            got: delta.size(),
        });
    }
    let cubes = generate_cube_set_with(s, alphas, budget, expander)?;
    let coords = cubes.space.coords;
    let mut digits = vec![0u16; coords];
    for &code in &cubes.codes {
        cubes.space.decode(code, &mut digits);
        if violates(&digits, delta, coords) {
            return Ok(Centrality::Violation(Cube {
                entries: digits.iter().map(|&d| d as usize).collect(),
            }));
        }
    }
    Ok(Centrality::Holds)
}

/// The k-ary commutator [alphas[0], ..., alphas[k-1]]: the least congruence
/// delta satisfying the centralizing condition.
///
/// Least fixpoint: start at the identity congruence, sweep all cubes in
/// ascending code order collecting every forced conclusion pair, close under
/// the congruence generation, repeat until no sweep forces anything new.
pub fn commutator(s: &FiniteSemigroup, alphas: &[&Congruence]) -> Result<Congruence, CubeError> {
    commutator_with(s, alphas, &CubeBudget::default(), &mut SequentialExpander)
}

pub fn commutator_with(
    s: &FiniteSemigroup,
    alphas: &[&Congruence],
    budget: &CubeBudget,
    expander: &mut dyn CubeExpander,
) -> Result<Congruence, CubeError> {
    check_alphas(s, alphas, budget, 2)?;
    let cubes = generate_cube_set_with(s, alphas, budget, expander)?;
    let coords = cubes.space.coords;
    let mut delta = Congruence::zero(s);
    let mut digits = vec![0u16; coords];
    loop {
        let mut forced: Vec<(usize, usize)> = Vec::new();
        for &code in &cubes.codes {
            cubes.space.decode(code, &mut digits);
            if violates(&digits, &delta, coords) {
                forced.push((digits[coords - 2] as usize, digits[coords - 1] as usize));
            }
        }
        if forced.is_empty() {
            return Ok(delta);
        }
        delta = generated_congruence(s, Some(&delta), &forced);
    }
}

/// Budgets for the word oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordOracleParams {
    pub max_word_len: usize,
    pub max_block_arity: usize,
    pub max_steps: u64,
}

impl Default for WordOracleParams {
    fn default() -> Self {
        WordOracleParams {
            max_word_len: 6,
            max_block_arity: 2,
            max_steps: 50_000_000,
        }
    }
}

fn combinations(items: usize, choose: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..choose).collect();
    if choose == 0 {
        out.push(Vec::new());
        return out;
    }
    if choose > items {
        return out;
    }
    loop {
        out.push(idx.clone());
        // advance lexicographically
        let mut i = choose;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] + (choose - i) < items {
                idx[i] += 1;
                for j in i + 1..choose {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Independent reference check of the same centralizing condition by direct
/// word enumeration: polynomials are materialized as words over per-block
/// variable palettes and constants, bounded by `max_word_len` and
/// `max_block_arity` distinct variables per block. Deliberately shares no
/// machinery with the closure engine beyond the cube convention; its blind
/// spot is words longer than the bound.
pub fn oracle_centralizes_by_words(
    s: &FiniteSemigroup,
    alphas: &[&Congruence],
    delta: &Congruence,
    params: &WordOracleParams,
) -> Result<Centrality, CubeError> {
    let budget = CubeBudget {
        max_arity: 4,
        max_members: usize::MAX,
    };
    check_alphas(s, alphas, &budget, 2)?;
    if delta.size() != s.order() {
        return Err(CubeError::AlgebraMismatch {
            expected: s.order(),
            got: delta.size(),
        });
    }
    let k = alphas.len();
    let order = s.order();
    let space = CubeSpace::new(order, k)?;
    let coords = space.coords;
    let mut steps: u64 = 0;

    // distinct non-diagonal related pairs per block; a variable assigned a
    // diagonal pair behaves as a constant, which the alphabet always has
    let block_pairs: Vec<Vec<(usize, usize)>> = alphas
        .iter()
        .map(|alpha| {
            let mut pairs = Vec::new();
            for a in 0..order {
                for b in 0..order {
                    if a != b && alpha.same(a, b) {
                        pairs.push((a, b));
                    }
                }
            }
            pairs
        })
        .collect();
    // maximal palettes only: any smaller admissible assignment is a subset
    let palettes: Vec<Vec<Vec<usize>>> = block_pairs
        .iter()
        .map(|pairs| combinations(pairs.len(), params.max_block_arity.min(pairs.len())))
        .collect();

    let constant_cubes: Vec<Vec<u16>> = (0..order).map(|a| vec![a as u16; coords]).collect();
    let mut palette_idx = vec![0usize; k];
    loop {
        // alphabet for this palette combination
        let mut alphabet: Vec<Vec<u16>> = constant_cubes.clone();
        for (j, sel) in palette_idx.iter().enumerate() {
            let bit = k - 1 - j;
            for &pi in &palettes[j][*sel] {
                let (a, b) = block_pairs[j][pi];
                alphabet.push(
                    (0..coords)
                        .map(|idx| if idx >> bit & 1 == 0 { a as u16 } else { b as u16 })
                        .collect(),
                );
            }
        }
        let mut seen = Members::new(space.span());
        let mut level: Vec<Vec<u16>> = Vec::new();
        for letter in &alphabet {
            let code = space.encode(letter);
            if seen.insert(code) {
                if violates(letter, delta, coords) {
                    return Ok(Centrality::Violation(Cube {
                        entries: letter.iter().map(|&d| d as usize).collect(),
                    }));
                }
                level.push(letter.clone());
            }
        }
        for _len in 2..=params.max_word_len {
            let mut next: Vec<Vec<u16>> = Vec::new();
            for word in &level {
                for letter in &alphabet {
                    steps += 1;
                    if steps > params.max_steps {
                        return Err(CubeError::OracleBudgetExceeded {
                            max_steps: params.max_steps,
                        });
                    }
                    let prod: Vec<u16> = (0..coords)
                        .map(|i| s.mul(word[i] as usize, letter[i] as usize) as u16)
                        .collect();
                    if seen.insert(space.encode(&prod)) {
                        if violates(&prod, delta, coords) {
                            return Ok(Centrality::Violation(Cube {
                                entries: prod.iter().map(|&d| d as usize).collect(),
                            }));
                        }
                        next.push(prod);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            level = next;
        }
        // odometer over palette choices
        let mut j = k;
        loop {
            if j == 0 {
                return Ok(Centrality::Holds);
            }
            j -= 1;
            palette_idx[j] += 1;
            if palette_idx[j] < palettes[j].len() {
                break;
            }
            palette_idx[j] = 0;
        }
    }
}
