//! Dense integer polynomials, just enough to test root-of-unity claims
//! exactly: a primitive `q`-th root of unity is a root of `p` with
//! multiplicity `e` iff the cyclotomic polynomial `Φ_q` divides `p` exactly
//! `e` times.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients in ascending order of degree, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        Self::from_coeffs(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_coeffs(c)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("nonzero divisor");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPoly::from_coeffs(vec![]), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for top in (d..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[top]);
            if lead.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs[..d].iter().enumerate() {
                rem[top - d + i] -= &lead * dc;
            }
            quot[top - d] = lead;
        }
        (IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem))
    }
}

/// The `n`-th cyclotomic polynomial, `(x^n - 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic(n: usize) -> IntPoly {
    assert!(n >= 1);
    let mut p = IntPoly::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = p.div_rem_monic(&cyclotomic(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

/// How many times `Φ_order` divides `p`, i.e. the multiplicity of every
/// primitive `order`-th root of unity as a root of `p`.
pub fn unity_root_multiplicity(p: &IntPoly, order: usize) -> u32 {
    let phi = cyclotomic(order);
    let mut p = p.clone();
    let mut count = 0;
    while !p.is_zero() {
        let (q, r) = p.div_rem_monic(&phi);
        if !r.is_zero() {
            break;
        }
        p = q;
        count += 1;
    }
    count
}
