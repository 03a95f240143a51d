//! Partitions, partition tuples, cycle types, and composition tuples, plus
//! the symmetric-group arithmetic built on them: dominance order,
//! irreducible characters, Littlewood–Richardson coefficients, and
//! hook-length dimensions.
//!
//! Characters are computed by the Murnaghan–Nakayama recursion on beta-sets
//! with a process-wide memo table; Littlewood–Richardson coefficients by
//! enumerating skew semistandard tableaux whose reverse reading word is a
//! ballot word. Both are exact integer computations.

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{OnceLock, RwLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PartitionError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("size mismatch: partition of {0} paired with cycle type of {1}")]
    SizeMismatch(u32, u32),
}

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is valid and has size 0.
///
/// The constructor normalizes its input (sorts descending, drops zeros), so
/// every held value satisfies the invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity m_j: how many parts equal `j`.
    pub fn multiplicity(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == j).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts: Vec<u32> =
            (1..=cols).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32).collect();
        Partition { parts }
    }

    /// Containment of Young diagrams: `self` fits inside `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(other.parts.iter()).all(|(a, b)| a <= b)
    }

    /// Part at `row` (0-based), 0 beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// z_μ = Π_j j^{m_j}·m_j!, the centralizer order of the cycle type.
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let max = self.parts.first().copied().unwrap_or(0);
        for j in 1..=max {
            let m = self.multiplicity(j) as u64;
            z *= (j as u64).pow(m as u32) * factorial(m as u32) as u64;
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Ok(Partition::new(parts))
    }
}

/// A tuple of `n` partitions (components may be empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTuple {
    components: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(components: Vec<Partition>) -> Self {
        PartitionTuple { components }
    }

    /// The all-empty tuple of the given arity.
    pub fn empty(arity: usize) -> Self {
        PartitionTuple { components: vec![Partition::empty(); arity] }
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    /// Σ_i |λ^i|.
    pub fn total_size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    /// (|λ^1|, …, |λ^n|).
    pub fn size_vector(&self) -> CompositionTuple {
        CompositionTuple::new(self.components.iter().map(Partition::size).collect::<Vec<_>>())
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for PartitionTuple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.components.len()))?;
        for p in &self.components {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for PartitionTuple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(PartitionTuple::new(Vec::<Partition>::deserialize(d)?))
    }
}

/// A tuple of partitions read as cycle types: component i records the cycle
/// type of the i-th symmetric-group factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleTypeTuple(pub PartitionTuple);

impl CycleTypeTuple {
    pub fn arity(&self) -> usize {
        self.0.arity()
    }

    pub fn components(&self) -> &[Partition] {
        self.0.components()
    }

    pub fn total_size(&self) -> u32 {
        self.0.total_size()
    }

    pub fn size_vector(&self) -> CompositionTuple {
        self.0.size_vector()
    }

    /// Π_i z_{μ^i}: the centralizer order inside the product group.
    pub fn z(&self) -> u64 {
        self.components().iter().map(Partition::z).product()
    }
}

/// μ! = Π_{i,j} m_j(μ^i)!: the product of multiplicity factorials.
pub fn lambda_factorial(mu: &CycleTypeTuple) -> u64 {
    let mut out = 1u64;
    for comp in mu.components() {
        let max = comp.parts().first().copied().unwrap_or(0);
        for j in 1..=max {
            out *= factorial(comp.multiplicity(j)) as u64;
        }
    }
    out
}

/// An n-tuple of nonnegative integers a = (a_1,…,a_n); `entries()[i]` is
/// a_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositionTuple {
    entries: Vec<u32>,
}

impl CompositionTuple {
    pub fn new(entries: impl Into<Vec<u32>>) -> Self {
        CompositionTuple { entries: entries.into() }
    }

    pub fn zero(arity: usize) -> Self {
        CompositionTuple { entries: vec![0; arity] }
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// |a| = Σ a_i.
    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// a_w for 1-based weight w.
    pub fn weight_count(&self, w: u32) -> u32 {
        self.entries[(w - 1) as usize]
    }

    /// τ(a) = (a_n,…,a_1).
    pub fn reversed(&self) -> CompositionTuple {
        let mut entries = self.entries.clone();
        entries.reverse();
        CompositionTuple { entries }
    }

    /// Componentwise sum (the object a ⊔ b).
    pub fn add(&self, other: &CompositionTuple) -> CompositionTuple {
        assert_eq!(self.arity(), other.arity(), "composition arity mismatch");
        CompositionTuple {
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| x + y).collect(),
        }
    }

    /// Componentwise difference, if defined.
    pub fn checked_sub(&self, other: &CompositionTuple) -> Option<CompositionTuple> {
        if self.arity() != other.arity() {
            return None;
        }
        let entries: Option<Vec<u32>> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.checked_sub(*y))
            .collect();
        entries.map(CompositionTuple::new)
    }

    /// Componentwise ≤.
    pub fn le_componentwise(&self, other: &CompositionTuple) -> bool {
        self.arity() == other.arity()
            && self.entries.iter().zip(&other.entries).all(|(x, y)| x <= y)
    }
}

impl fmt::Display for CompositionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

impl Serialize for CompositionTuple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CompositionTuple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = CompositionTuple;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a sequence of nonnegative integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut entries = Vec::new();
                while let Some(e) = seq.next_element::<u32>()? {
                    entries.push(e);
                }
                Ok(CompositionTuple::new(entries))
            }
        }
        d.deserialize_seq(V)
    }
}

/// Dominance order on composition tuples of equal arity: a ⊴ b iff every
/// prefix sum of a is at most the corresponding prefix sum of b.
pub fn dominance_leq(a: &CompositionTuple, b: &CompositionTuple) -> Result<bool, PartitionError> {
    if a.arity() != b.arity() {
        return Err(PartitionError::ArityMismatch(a.arity(), b.arity()));
    }
    let (mut pa, mut pb) = (0u64, 0u64);
    for (x, y) in a.entries().iter().zip(b.entries()) {
        pa += u64::from(*x);
        pb += u64::from(*y);
        if pa > pb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// n! as u128 (panics beyond 34!, far above every size this crate touches).
pub fn factorial(n: u32) -> u128 {
    assert!(n <= 34, "factorial({n}) exceeds u128");
    (1..=u128::from(n)).product()
}

/// Binomial coefficient, exact in u64 for the small arguments used here.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u128;
    for i in 0..k {
        out = out * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(out).expect("binomial exceeds u64")
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

/// χ^λ(μ): the irreducible character of the symmetric group on |λ| letters
/// indexed by λ, evaluated at the conjugacy class of cycle type μ.
///
/// Errors if |λ| ≠ |μ|. Computed by the Murnaghan–Nakayama recursion on
/// beta-sets; values are memoized in a process-wide table.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, PartitionError> {
    if lambda.size() != mu.size() {
        return Err(PartitionError::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(mn_rec(lambda, mu.parts()))
}

static MN_CACHE: OnceLock<RwLock<HashMap<(Partition, Vec<u32>), i64>>> = OnceLock::new();

fn mn_rec(lambda: &Partition, mu_parts: &[u32]) -> i64 {
    if mu_parts.is_empty() {
        return 1; // sizes match, so lambda is empty too
    }
    let cache = MN_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (lambda.clone(), mu_parts.to_vec());
    if let Some(&v) = cache.read().unwrap().get(&key) {
        return v;
    }
    let t = mu_parts[0];
    let rest = &mu_parts[1..];
    let mut total = 0i64;
    for (smaller, sign) in border_strip_removals(lambda, t) {
        total += sign * mn_rec(&smaller, rest);
    }
    cache.write().unwrap().insert(key, total);
    total
}

/// All ways to remove a border strip of `t` cells from `lambda`, with the
/// height sign (−1)^{rows spanned − 1}. Implemented on the beta-set: the
/// strictly decreasing list λ_i + (ℓ−1−i); removing a strip of length t is
/// subtracting t from one beta-number without colliding, and the sign counts
/// the beta-numbers jumped over.
fn border_strip_removals(lambda: &Partition, t: u32) -> Vec<(Partition, i64)> {
    let ell = lambda.len();
    let beta: Vec<i64> =
        (0..ell).map(|i| i64::from(lambda.parts()[i]) + (ell - 1 - i) as i64).collect();
    let present: HashSet<i64> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - i64::from(t);
        if nb < 0 || present.contains(&nb) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > nb && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nbeta
            .iter()
            .enumerate()
            .map(|(j, &x)| u32::try_from(x - (ell - 1 - j) as i64).expect("beta-set stays valid"))
            .collect();
        out.push((Partition::new(parts), sign));
    }
    out
}

/// dim of the irreducible indexed by λ: |λ|! over the product of hook
/// lengths.
pub fn hook_dimension(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut hooks = 1u128;
    for (r, &row_len) in lambda.parts().iter().enumerate() {
        for c in 0..row_len as usize {
            let arm = row_len as u128 - c as u128 - 1;
            let leg = conj.parts()[c] as u128 - r as u128 - 1;
            hooks *= arm + leg + 1;
        }
    }
    let num = factorial(lambda.size());
    debug_assert_eq!(num % hooks, 0);
    u64::try_from(num / hooks).expect("hook dimension exceeds u64")
}

// ---------------------------------------------------------------------------
// Littlewood–Richardson
// ---------------------------------------------------------------------------

static LR_CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), Vec<(Partition, u64)>>>> =
    OnceLock::new();

/// c^ν_{λμ}: the multiplicity of s_ν in s_λ·s_μ. Zero unless
/// |ν| = |λ| + |μ| and λ ⊆ ν.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !lambda.contained_in(nu) {
        return 0;
    }
    count_lr_tableaux(lambda, mu, nu)
}

/// The full expansion s_λ·s_μ = Σ_ν c^ν_{λμ} s_ν, memoized.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let cache = LR_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = Vec::new();
    for nu in partitions_of(lambda.size() + mu.size()) {
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.push((nu, c));
        }
    }
    cache.write().unwrap().insert(key, out.clone());
    out
}

/// Count skew semistandard tableaux of shape ν/λ and content μ whose
/// reverse reading word (rows top to bottom, each read right to left) is a
/// ballot word.
fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Cells in reading order.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..nu.len() {
        let lo = lambda.part(r) as usize;
        let hi = nu.parts()[r] as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    if cells.is_empty() {
        return u64::from(mu.is_empty());
    }
    let mut grid: Vec<Vec<u32>> = nu.parts().iter().map(|&w| vec![0; w as usize]).collect();
    let mut counts = vec![0u32; mu.len()];
    let mut total = 0u64;
    fill(&mut grid, &mut counts, &cells, 0, lambda, mu, &mut total);
    total
}

fn fill(
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    cells: &[(usize, usize)],
    pos: usize,
    lambda: &Partition,
    mu: &Partition,
    total: &mut u64,
) {
    if pos == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[pos];
    // Row bound: weakly increasing left to right; the right neighbour was
    // filled earlier in reading order.
    let row_max = if c + 1 < grid[r].len() && grid[r][c + 1] != 0 {
        grid[r][c + 1]
    } else {
        mu.len() as u32
    };
    // Column bound: strictly increasing downward; the cell above is filled
    // (or belongs to λ, imposing no bound).
    let col_min = if r > 0 && c >= lambda.part(r - 1) as usize { grid[r - 1][c] + 1 } else { 1 };
    for v in col_min..=row_max {
        let vi = (v - 1) as usize;
        if counts[vi] + 1 > mu.parts()[vi] {
            continue; // content exceeded
        }
        if v > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue; // ballot violation
        }
        counts[vi] += 1;
        grid[r][c] = v;
        fill(grid, counts, cells, pos + 1, lambda, mu, total);
        grid[r][c] = 0;
        counts[vi] -= 1;
    }
}

// ---------------------------------------------------------------------------
// Enumeration helpers
// ---------------------------------------------------------------------------

/// All partitions of `m` in descending lexicographic order.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(m, m.max(1), &mut current, &mut out);
    out
}

/// All partition tuples with the given component sizes.
pub fn partition_tuples_with_sizes(sizes: &[u32]) -> Vec<PartitionTuple> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        let opts = partitions_of(s);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Partition>| {
                opts.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(PartitionTuple::new).collect()
}

/// All partition tuples of the given arity with total size exactly `m`.
pub fn partition_tuples_of_total(arity: usize, m: u32) -> Vec<PartitionTuple> {
    compositions_of_total(arity, m)
        .iter()
        .flat_map(|sizes| partition_tuples_with_sizes(sizes.entries()))
        .collect()
}

/// All partition tuples of the given arity with total size ≤ `max`.
pub fn partition_tuples_up_to(arity: usize, max: u32) -> Vec<PartitionTuple> {
    (0..=max).flat_map(|m| partition_tuples_of_total(arity, m)).collect()
}

/// All composition tuples of the given arity summing to exactly `total`,
/// in lexicographic order.
pub fn compositions_of_total(arity: usize, total: u32) -> Vec<CompositionTuple> {
    let mut out = Vec::new();
    let mut current = vec![0u32; arity];
    fn rec(pos: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<CompositionTuple>) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(CompositionTuple::new(current.clone()));
            return;
        }
        for v in 0..=remaining {
            current[pos] = v;
            rec(pos + 1, remaining - v, current, out);
        }
    }
    if arity == 0 {
        if total == 0 {
            out.push(CompositionTuple::new(Vec::<u32>::new()));
        }
        return out;
    }
    rec(0, total, &mut current, &mut out);
    out
}

/// All composition tuples of the given arity with total ≤ `max`, ordered by
/// total then lexicographically.
pub fn compositions_up_to(arity: usize, max: u32) -> Vec<CompositionTuple> {
    (0..=max).flat_map(|t| compositions_of_total(arity, t)).collect()
}
