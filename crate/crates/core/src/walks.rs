//! Exact enumeration of lattice walks whose steps are the q-th roots of
//! unity.
//!
//! A length-n walk is a sequence of steps drawn from `{z^0, ..., z^(q-1)}`;
//! the table maps each reachable endpoint (a cyclotomic integer in canonical
//! form) to the exact number of walks ending there. Endpoint counts drive
//! both the eigenvalue multiplicities of the all-ones hypermatrix and its
//! spectral measure.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};

/// Default cap on the number of distinct endpoints a table may hold.
pub const DEFAULT_ENDPOINT_GUARD: usize = 10_000_000;

/// Endpoint-count table of all q-step-set walks of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    n: u64,
    q: u32,
    counts: BTreeMap<CycInt, BigUint>,
}

impl WalkTable {
    pub fn steps(&self) -> u64 {
        self.n
    }

    pub fn step_order(&self) -> u32 {
        self.q
    }

    /// Number of walks ending at `w` (zero if unreachable).
    pub fn count(&self, w: &CycInt) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn endpoints(&self) -> impl Iterator<Item = (&CycInt, &BigUint)> {
        self.counts.iter()
    }

    pub fn num_endpoints(&self) -> usize {
        self.counts.len()
    }

    /// Total weight, which always equals q^n.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// CSV dump with columns `re,im,count` (embedded endpoints), rows in
    /// canonical endpoint order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im,count\n");
        for (w, c) in &self.counts {
            let z = w.embed();
            writeln!(out, "{},{},{}", z.re, z.im, c).expect("writing to a String cannot fail");
        }
        out
    }
}

/// Build the endpoint table of all length-n walks with the q-th roots of
/// unity as steps, by n-fold convolution over canonical endpoints.
pub fn walk_counts(n: u64, q: u32) -> Result<WalkTable> {
    walk_counts_guarded(n, q, DEFAULT_ENDPOINT_GUARD)
}

/// As [`walk_counts`], with an explicit cap on distinct endpoints.
pub fn walk_counts_guarded(n: u64, q: u32, endpoint_guard: usize) -> Result<WalkTable> {
    if q == 0 {
        return Err(Error::ZeroOrder);
    }
    let steps: Vec<CycInt> = (0..q)
        .map(|j| CycInt::root_of_unity(q, j))
        .collect::<Result<Vec<_>>>()?;
    let mut counts = BTreeMap::new();
    counts.insert(CycInt::zero(q)?, BigUint::one());
    for _ in 0..n {
        let mut next: BTreeMap<CycInt, BigUint> = BTreeMap::new();
        for (w, c) in &counts {
            for s in &steps {
                let endpoint = w + s;
                *next.entry(endpoint).or_insert_with(BigUint::zero) += c;
            }
        }
        if next.len() > endpoint_guard {
            return Err(Error::GuardExceeded {
                what: "distinct walk endpoints",
                value: next.len() as u128,
                limit: endpoint_guard as u128,
            });
        }
        counts = next;
    }
    Ok(WalkTable { n, q, counts })
}

/// Multinomial coefficient `n! / (parts[0]! ... parts[k]!)`, defined to be
/// zero unless the parts sum to n.
pub fn multinomial(n: u64, parts: &[u64]) -> BigUint {
    if parts.iter().sum::<u64>() != n {
        return BigUint::zero();
    }
    // n! / prod parts! computed as a product of binomials to keep
    // intermediate values small.
    let mut acc = BigUint::one();
    let mut remaining = n;
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// Binomial coefficient with the same zero-outside convention.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
