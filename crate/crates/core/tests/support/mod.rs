//! Independent oracles for the cross-check tests.
//!
//! Nothing here calls the library's character, Littlewood–Richardson, or
//! series code: characters come from tabloid fixed-point counts and the
//! Jacobi–Trudi alternating sum, products from explicit induction
//! convolution.  Agreement between these and the library is therefore a
//! genuine two-route check.

// Shared by several test targets, each of which uses a subset.
#![allow(dead_code)]

use std::collections::BTreeMap;

use flagmod_core::partition::{partitions_of, Partition};
use flagmod_core::{BigInt, BigRational};
use num::{ToPrimitive, Zero};

/// Number of ways to distribute the given cycles among rows so that the
/// cycle lengths assigned to row `i` sum to `rows[i]`.  This counts the
/// tabloids fixed by a permutation with those cycle lengths, i.e. the
/// permutation-module character value.
pub fn tabloid_character(rows: &[u32], cycles: &[u32]) -> i64 {
    fn place(remaining: &mut [u32], cycles: &[u32]) -> i64 {
        let Some((&len, rest)) = cycles.split_first() else {
            return i64::from(remaining.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for i in 0..remaining.len() {
            if remaining[i] >= len {
                remaining[i] -= len;
                total += place(remaining, rest);
                remaining[i] += len;
            }
        }
        total
    }
    place(&mut rows.to_vec(), cycles)
}

/// All permutations of `0..len` with their signs.
pub fn signed_permutations(len: usize) -> Vec<(Vec<usize>, i64)> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == used.len() {
            let mut inversions = 0;
            for i in 0..prefix.len() {
                for j in i + 1..prefix.len() {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; len], &mut out);
    out
}

/// Irreducible character value by Jacobi–Trudi: the alternating sum of
/// tabloid characters over the compositions `λ_i − i + w(i)`.
pub fn jt_character(lambda: &Partition, mu: &Partition) -> i64 {
    let l = lambda.parts().len();
    let mut total = 0;
    'perms: for (w, sign) in signed_permutations(l) {
        let mut rows = Vec::with_capacity(l);
        for i in 0..l {
            let entry = lambda.parts()[i] as i64 - i as i64 + w[i] as i64;
            if entry < 0 {
                continue 'perms;
            }
            rows.push(entry as u32);
        }
        total += sign * tabloid_character(&rows, mu.parts());
    }
    total
}

/// The centralizer order of a cycle type, computed from scratch.
pub fn centralizer_order(mu: &Partition) -> u64 {
    let mut by_length: BTreeMap<u32, u64> = BTreeMap::new();
    for &part in mu.parts() {
        *by_length.entry(part).or_insert(0) += 1;
    }
    by_length
        .into_iter()
        .map(|(len, mult)| u64::from(len).pow(mult as u32) * (1..=mult).product::<u64>())
        .product()
}

fn merge_partitions(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts)
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Tabulated Jacobi–Trudi characters up to a fixed size, with the derived
/// inner-product and convolution formulas on top.
pub struct CharacterOracle {
    tables: BTreeMap<u32, BTreeMap<(Partition, Partition), i64>>,
}

impl CharacterOracle {
    pub fn up_to(max_size: u32) -> Self {
        let mut tables = BTreeMap::new();
        for m in 0..=max_size {
            let shapes = partitions_of(m);
            let mut table = BTreeMap::new();
            for lam in &shapes {
                for mu in &shapes {
                    table.insert((lam.clone(), mu.clone()), jt_character(lam, mu));
                }
            }
            tables.insert(m, table);
        }
        CharacterOracle { tables }
    }

    pub fn chi(&self, lam: &Partition, mu: &Partition) -> i64 {
        if lam.size() != mu.size() {
            return 0;
        }
        self.tables[&lam.size()][&(lam.clone(), mu.clone())]
    }

    /// Littlewood–Richardson coefficient as the character inner product
    /// `⟨χ^ν, χ^λ × χ^μ induced⟩`.
    pub fn lr(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> i64 {
        let (p, q) = (lam.size(), mu.size());
        if nu.size() != p + q {
            return 0;
        }
        let mut acc = BigRational::zero();
        for rho in partitions_of(p) {
            for sigma in partitions_of(q) {
                let value = self.chi(lam, &rho)
                    * self.chi(mu, &sigma)
                    * self.chi(nu, &merge_partitions(&rho, &sigma));
                let index = centralizer_order(&rho) * centralizer_order(&sigma);
                acc += BigRational::new(BigInt::from(value), BigInt::from(index));
            }
        }
        assert!(acc.is_integer(), "inner product must be integral");
        acc.to_integer().to_i64().expect("coefficient fits in i64")
    }

    /// Value of the induction product `χ^λ · χ^μ` at the cycle type `nu`:
    /// a sum over splittings of the cycle multiset, each weighted by the
    /// number of ways to pick that many cycles of each length.
    pub fn product_character(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> i64 {
        if nu.size() != lam.size() + mu.size() {
            return 0;
        }
        let mut by_length: Vec<(u32, u64)> = Vec::new();
        for &part in nu.parts() {
            match by_length.last_mut() {
                Some((len, mult)) if *len == part => *mult += 1,
                _ => by_length.push((part, 1)),
            }
        }
        let mut total = 0;
        self.split_cycles(
            &by_length,
            lam.size(),
            &mut Vec::new(),
            &mut Vec::new(),
            1,
            lam,
            mu,
            &mut total,
        );
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn split_cycles(
        &self,
        groups: &[(u32, u64)],
        target: u32,
        left: &mut Vec<u32>,
        right: &mut Vec<u32>,
        weight: u64,
        lam: &Partition,
        mu: &Partition,
        total: &mut i64,
    ) {
        let Some((&(len, mult), rest)) = groups.split_first() else {
            if target == 0 {
                let desc = |parts: &mut Vec<u32>| parts.sort_unstable_by(|a, b| b.cmp(a));
                desc(left);
                desc(right);
                *total += weight as i64
                    * self.chi(lam, &Partition::new(left.clone()))
                    * self.chi(mu, &Partition::new(right.clone()));
            }
            return;
        };
        for take in 0..=mult {
            if len as u64 * take > u64::from(target) {
                break;
            }
            let before = (left.len(), right.len());
            left.extend(std::iter::repeat(len).take(take as usize));
            right.extend(std::iter::repeat(len).take((mult - take) as usize));
            self.split_cycles(
                rest,
                target - len * take as u32,
                left,
                right,
                weight * binom(mult, take),
                lam,
                mu,
                total,
            );
            left.truncate(before.0);
            right.truncate(before.1);
        }
    }
}

/// Counts weight-non-decreasing injections of weighted sets by direct
/// backtracking over flattened slot lists, requiring every target slot of
/// weight below `cover_below` to be hit (so a bound above every weight
/// forces a bijection, and `1` imposes nothing).
pub fn count_weight_injections(src: &[u32], tgt: &[u32], cover_below: u32) -> u64 {
    let flatten = |counts: &[u32]| {
        let mut slots = Vec::new();
        for (i, &count) in counts.iter().enumerate() {
            slots.extend(std::iter::repeat(i as u32 + 1).take(count as usize));
        }
        slots
    };
    fn assign(sources: &[u32], targets: &[u32], used: &mut [bool], cover_below: u32) -> u64 {
        let Some((&weight, rest)) = sources.split_first() else {
            let covered = targets
                .iter()
                .zip(used.iter())
                .all(|(&w, &u)| w >= cover_below || u);
            return u64::from(covered);
        };
        let mut total = 0;
        for j in 0..targets.len() {
            if !used[j] && targets[j] >= weight {
                used[j] = true;
                total += assign(rest, targets, used, cover_below);
                used[j] = false;
            }
        }
        total
    }
    let sources = flatten(src);
    let targets = flatten(tgt);
    let mut used = vec![false; targets.len()];
    assign(&sources, &targets, &mut used, cover_below)
}
