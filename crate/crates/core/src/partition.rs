//! Partitions labelling nilpotent orbits of classical Lie algebras.

use std::collections::BTreeMap;

use crate::centralizer::CartanType;
use crate::error::{Error, Result};

/// Parts in non-increasing order, no zeros.
pub type Partition = Vec<usize>;

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn transpose(lambda: &[usize]) -> Partition {
    let first = lambda.first().copied().unwrap_or(0);
    (1..=first).map(|i| lambda.iter().filter(|&&p| p >= i).count()).collect()
}

pub fn multiplicities(lambda: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &p in lambda {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// Parity of the parts that must come in pairs: even parts for B and D, odd for C.
fn paired_parity(kind: CartanType) -> Option<usize> {
    match kind {
        CartanType::B | CartanType::D => Some(0),
        CartanType::C => Some(1),
        _ => None,
    }
}

/// Size of the partitions labelling orbits of a factor of the given type and rank.
pub fn partition_size(kind: CartanType, rank: usize) -> Result<usize> {
    match kind {
        CartanType::A => Ok(rank + 1),
        CartanType::B => Ok(2 * rank + 1),
        CartanType::C | CartanType::D => Ok(2 * rank),
        _ => Err(Error::UnsupportedFactor(format!("{kind}{rank}"))),
    }
}

/// Whether `lambda` satisfies the parity rule of `kind` (size is not checked).
pub fn satisfies_parity(kind: CartanType, lambda: &[usize]) -> bool {
    match paired_parity(kind) {
        None => true,
        Some(par) => multiplicities(lambda).iter().all(|(&p, &m)| p % 2 != par || m % 2 == 0),
    }
}

pub fn typed_partitions(kind: CartanType, rank: usize) -> Result<Vec<Partition>> {
    let n = partition_size(kind, rank)?;
    Ok(partitions(n).into_iter().filter(|l| satisfies_parity(kind, l)).collect())
}

pub fn is_very_even(lambda: &[usize]) -> bool {
    !lambda.is_empty() && lambda.iter().all(|p| p % 2 == 0)
}

/// The largest partition of the given type dominated by `lambda`.
pub fn collapse(kind: CartanType, lambda: &[usize]) -> Partition {
    let Some(par) = paired_parity(kind) else { return lambda.to_vec() };
    assert!(par == 0 || lambda.iter().sum::<usize>() % 2 == 0, "no C-partition of odd size");
    let mut l = lambda.to_vec();
    loop {
        let bad = multiplicities(&l).into_iter().rev().find(|&(p, m)| p % 2 == par && m % 2 == 1);
        let Some((q, _)) = bad else { break };
        let last = l.iter().rposition(|&p| p == q).expect("part present");
        l[last] -= 1;
        match l[last + 1..].iter().position(|&r| r + 1 < q) {
            Some(off) => l[last + 1 + off] += 1,
            None => l.push(1),
        }
        l.retain(|&p| p > 0);
    }
    l
}

/// Lusztig-Spaltenstein duality: transpose, then collapse.
pub fn d_map(kind: CartanType, lambda: &[usize]) -> Partition {
    collapse(kind, &transpose(lambda))
}

/// Specialness by the transpose-parity rule.
pub fn is_special(kind: CartanType, lambda: &[usize]) -> bool {
    let t = transpose(lambda);
    match kind {
        CartanType::A => true,
        CartanType::B => satisfies_parity(CartanType::B, &t),
        CartanType::C | CartanType::D => satisfies_parity(CartanType::C, &t),
        _ => false,
    }
}

pub fn format_partition(lambda: &[usize]) -> String {
    let parts: Vec<String> = lambda.iter().map(|p| p.to_string()).collect();
    format!("[{}]", parts.join(","))
}
