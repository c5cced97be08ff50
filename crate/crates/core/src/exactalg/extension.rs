//! Abelian extensions of finite groups by brute force over p-primary parts.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::group::{FgAbGroup, InvariantFactors};
use super::matrix::IntMatrix;
use super::AlgebraError;

/// Limits for [`extension_candidates`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionBound {
    /// Largest allowed order of the middle group.
    pub max_order: u64,
    /// Largest number of candidate embeddings tried per prime.
    pub max_work: u64,
}

impl Default for ExtensionBound {
    fn default() -> Self {
        Self {
            max_order: 1 << 16,
            max_work: 1 << 20,
        }
    }
}

/// Every `E` (up to isomorphism) admitting `0 → sub → E → quotient → 0`,
/// sorted and without repeats.
pub fn extension_candidates(
    sub: &InvariantFactors,
    quotient: &InvariantFactors,
    bound: ExtensionBound,
) -> Result<Vec<InvariantFactors>, AlgebraError> {
    if !sub.is_finite() || !quotient.is_finite() {
        return Err(AlgebraError::InfiniteInput);
    }
    let order_s = small_order(sub, bound)?;
    let order_q = small_order(quotient, bound)?;
    let total = order_s
        .checked_mul(order_q)
        .filter(|&n| n <= bound.max_order)
        .ok_or(AlgebraError::BoundExceeded { limit: bound.max_order })?;

    let mut per_prime: Vec<(u64, Vec<Vec<u32>>)> = Vec::new();
    for p in prime_factors(total) {
        let s = primary_exponents(sub, p);
        let q = primary_exponents(quotient, p);
        per_prime.push((p, primary_candidates(p, &s, &q, bound)?));
    }

    let mut out = vec![InvariantFactors::zero()];
    let mut partial: Vec<Vec<(u64, Vec<u32>)>> = vec![Vec::new()];
    for (p, options) in &per_prime {
        let mut next = Vec::new();
        for prefix in &partial {
            for lambda in options {
                let mut v = prefix.clone();
                v.push((*p, lambda.clone()));
                next.push(v);
            }
        }
        partial = next;
    }
    if !per_prime.is_empty() {
        out = partial.iter().map(|parts| assemble(parts)).collect();
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn small_order(g: &InvariantFactors, bound: ExtensionBound) -> Result<u64, AlgebraError> {
    g.order()
        .and_then(|n| n.to_u64())
        .filter(|&n| n <= bound.max_order)
        .ok_or(AlgebraError::BoundExceeded { limit: bound.max_order })
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Exponents `a` with `ℤ_{p^a}` a summand of the p-primary part, descending.
fn primary_exponents(g: &InvariantFactors, p: u64) -> Vec<u32> {
    let p = BigInt::from(p);
    let mut out: Vec<u32> = g
        .torsion
        .iter()
        .map(|d| {
            let mut d = d.clone();
            let mut a = 0;
            while (&d % &p) == BigInt::from(0) {
                d /= &p;
                a += 1;
            }
            a
        })
        .filter(|&a| a > 0)
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Partitions `λ` such that `⊕ ℤ_{p^λ_i}` is an extension of `q` by `s`.
fn primary_candidates(p: u64, s: &[u32], q: &[u32], bound: ExtensionBound) -> Result<Vec<Vec<u32>>, AlgebraError> {
    let n: u32 = s.iter().sum::<u32>() + q.iter().sum::<u32>();
    let max_parts = s.len() + q.len();
    let target = p_group(p, q).invariants().clone();
    let mut out = Vec::new();
    for lambda in partitions(n) {
        if lambda.len() > max_parts || lambda.len() < s.len().max(q.len()) {
            continue;
        }
        if admits_embedding(p, &lambda, s, &target, bound)? {
            out.push(lambda);
        }
    }
    Ok(out)
}

fn p_group(p: u64, exps: &[u32]) -> FgAbGroup {
    let orders: Vec<BigInt> = exps.iter().map(|&a| BigInt::from(p).pow(a)).collect();
    FgAbGroup::cyclic_sum(&orders)
}

/// Searches for an injective `s → E_λ` whose cokernel is `target`.
fn admits_embedding(
    p: u64,
    lambda: &[u32],
    s: &[u32],
    target: &InvariantFactors,
    bound: ExtensionBound,
) -> Result<bool, AlgebraError> {
    let pb = BigInt::from(p);
    let rel = IntMatrix::diagonal(&lambda.iter().map(|&l| pb.pow(l)).collect::<Vec<_>>());
    let s_order: BigInt = s.iter().map(|&a| pb.pow(a)).product();
    let e_order: BigInt = lambda.iter().map(|&l| pb.pow(l)).product();
    let want_coker = e_order / &s_order;

    // Admissible images of a generator of order p^a: x_j ∈ p^{max(λ_j - a, 0)} ℤ.
    let choices: Vec<Vec<Vec<BigInt>>> = s
        .iter()
        .map(|&a| {
            let mut vecs: Vec<Vec<BigInt>> = vec![Vec::new()];
            for &l in lambda {
                let step = pb.pow(l.saturating_sub(a));
                let count = pb.pow(l.min(a)).to_u64().unwrap_or(u64::MAX);
                let mut next = Vec::new();
                for prefix in &vecs {
                    for k in 0..count {
                        let mut v = prefix.clone();
                        v.push(&step * k);
                        next.push(v);
                    }
                }
                vecs = next;
            }
            vecs
        })
        .collect();

    let mut idx = vec![0usize; s.len()];
    let mut work = 0u64;
    loop {
        work += 1;
        if work > bound.max_work {
            return Err(AlgebraError::BoundExceeded { limit: bound.max_work });
        }
        let mut images = IntMatrix::zeros(lambda.len(), s.len());
        for (g, &i) in idx.iter().enumerate() {
            for (r, x) in choices[g][i].iter().enumerate() {
                images[(r, g)] = x.clone();
            }
        }
        let coker = FgAbGroup::from_relations(rel.hstack(&images));
        if coker.order().is_some_and(|o| o == want_coker) && coker.invariants() == target {
            return Ok(true);
        }
        // odometer
        let mut g = 0;
        loop {
            if g == s.len() {
                return Ok(false);
            }
            idx[g] += 1;
            if idx[g] < choices[g].len() {
                break;
            }
            idx[g] = 0;
            g += 1;
        }
    }
}

/// Partitions of `n` with parts in descending order.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Combines p-primary partitions into invariant factors.
fn assemble(parts: &[(u64, Vec<u32>)]) -> InvariantFactors {
    let len = parts.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
    // i-th largest factor is the product of the i-th largest prime powers
    let mut factors: Vec<BigInt> = (0..len)
        .map(|i| {
            parts.iter().fold(BigInt::one(), |acc, (p, l)| {
                acc * BigInt::from(*p).pow(l.get(i).copied().unwrap_or(0))
            })
        })
        .collect();
    factors.reverse();
    InvariantFactors::from_cyclic_orders(&factors)
}
