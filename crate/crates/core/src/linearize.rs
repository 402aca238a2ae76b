//! Log-linearization of both systems and exact root-of-unity analysis of
//! the resulting characteristic polynomials.
//!
//! For positive orbits, `a_n = ln y_n` satisfies an integer linear
//! recurrence:
//!
//! * `SysOne`: `a[n+1] + a[n-k] + a[n-2k-1] = 0`, characteristic polynomial
//!   `λ^(2k+2) + λ^(k+1) + 1`.
//! * `SysTwo`: `a[n+1] + a[n-m] - a[n-k] - a[n-m-k-1] = 0`, characteristic
//!   polynomial `(λ^(k+1) - 1)(λ^(m+1) + 1)`.
//!
//! Every root is a root of unity, so roots are stored as exact fractions of
//! a turn and all order/multiplicity questions reduce to gcd/lcm arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::poly::IntPoly;
use crate::system::{Family, SystemSpec};

/// `Σ coefficients[i] * a[n+1-i] = 0`, with `coefficients[0] = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    coefficients: Vec<i64>,
}

impl LinearRecurrence {
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `Σ c_i λ^(order - i)` as an integer polynomial.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        let mut ascending = self.coefficients.clone();
        ascending.reverse();
        IntPoly::from_i64(&ascending)
    }
}

pub fn log_linearize(spec: &SystemSpec) -> LinearRecurrence {
    let k = spec.k();
    let mut c = match spec.m() {
        None => {
            let mut c = vec![0i64; 2 * k + 3];
            c[k + 1] += 1;
            c[2 * k + 2] += 1;
            c
        }
        Some(m) => {
            // when m == k the two middle terms cancel here
            let mut c = vec![0i64; m + k + 3];
            c[m + 1] += 1;
            c[k + 1] -= 1;
            c[m + k + 2] -= 1;
            c
        }
    };
    c[0] = 1;
    LinearRecurrence { coefficients: c }
}

/// A point `exp(2πi · num/den)` on the unit circle, reduced so that
/// `0 <= num < den` and `gcd(num, den) = 1`. The root `1` is `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Turn {
    num: u64,
    den: u64,
}

impl Turn {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "turn denominator must be positive");
        let num = num % den;
        let g = num.gcd(&den);
        Turn {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Multiplicative order of the root, which is the reduced denominator.
    pub fn order(&self) -> u64 {
        self.den
    }

    /// The turn of `λ^e`.
    pub fn pow(&self, e: u64) -> Turn {
        let num = ((u128::from(self.num) * u128::from(e)) % u128::from(self.den)) as u64;
        Turn::new(num, self.den)
    }
}

impl Ord for Turn {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl PartialOrd for Turn {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnityRoot {
    pub turn: Turn,
    pub multiplicity: u32,
}

/// All roots of a characteristic polynomial, sorted by angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnityRootMultiset {
    roots: Vec<UnityRoot>,
    total_degree: usize,
}

impl UnityRootMultiset {
    fn from_turns(turns: impl IntoIterator<Item = Turn>) -> Self {
        let mut counts = BTreeMap::new();
        for t in turns {
            *counts.entry(t).or_insert(0u32) += 1;
        }
        let roots: Vec<_> = counts
            .into_iter()
            .map(|(turn, multiplicity)| UnityRoot { turn, multiplicity })
            .collect();
        let total_degree = roots.iter().map(|r| r.multiplicity as usize).sum();
        UnityRootMultiset {
            roots,
            total_degree,
        }
    }

    pub fn roots(&self) -> &[UnityRoot] {
        &self.roots
    }

    pub fn total_degree(&self) -> usize {
        self.total_degree
    }

    pub fn has_repeated(&self) -> bool {
        self.roots.iter().any(|r| r.multiplicity > 1)
    }

    /// Least `ρ > 0` with `λ^ρ = 1` for every root.
    pub fn common_order(&self) -> u64 {
        self.roots.iter().fold(1, |acc, r| acc.lcm(&r.turn.order()))
    }
}

pub fn characteristic_roots(spec: &SystemSpec) -> UnityRootMultiset {
    let k = spec.k() as u64;
    match spec.family() {
        // λ^(k+1) is a primitive cube root of unity
        Family::SysOne => UnityRootMultiset::from_turns(
            (0..=k).flat_map(|j| [1, 2].map(|r| Turn::new(3 * j + r, 3 * (k + 1)))),
        ),
        // λ^(k+1) = 1, or λ^(m+1) = -1
        Family::SysTwo => {
            let m = spec.m().expect("SysTwo carries m") as u64;
            let unity = (0..=k).map(|j| Turn::new(j, k + 1));
            let minus_one = (0..=m).map(|l| Turn::new(2 * l + 1, 2 * (m + 1)));
            UnityRootMultiset::from_turns(unity.chain(minus_one))
        }
    }
}

/// Whether `(λ^(k+1) - 1)(λ^(m+1) + 1)` has a double root, decided by the
/// 2-adic valuations: a common root has order `d` dividing both `k+1` and
/// `2(m+1)` but not `m+1`, which exists iff `v2(k+1) > v2(m+1)`.
pub fn has_repeated_root(k: usize, m: usize) -> bool {
    (k + 1).trailing_zeros() > (m + 1).trailing_zeros()
}

/// Exhaustive search for `2j(m+1) = (2l+1)(k+1)` over `j in 0..=k`,
/// `l in 0..=m`. Independent check of [`has_repeated_root`].
pub fn brute_force_repeated_root(k: usize, m: usize) -> bool {
    (0..=k).any(|j| (0..=m).any(|l| 2 * j * (m + 1) == (2 * l + 1) * (k + 1)))
}

/// Period of every solution with generic initial data: the lcm of the root
/// orders when all roots are simple, `None` when a repeated root makes
/// generic solutions unbounded.
pub fn generic_period(spec: &SystemSpec) -> Option<u64> {
    let roots = characteristic_roots(spec);
    (!roots.has_repeated()).then(|| roots.common_order())
}
