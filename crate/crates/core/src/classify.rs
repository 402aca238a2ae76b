//! Qualitative behavior of positive solutions.
//!
//! `SysOne` is always periodic with period `3(k+1)`. For `SysTwo` the clauses
//! are tried in order: `m == k`, unit products on the `-m..=0` window, then
//! the parity cases. The odd/odd split is decided by the repeated-root
//! criterion of [`linearize::has_repeated_root`] rather than by residues
//! mod 4, which miss pairs such as `(k, m) = (7, 11)`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linearize::{self, has_repeated_root};
use crate::system::{Family, InitialConditions, SystemSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Periodic,
    Unbounded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Periodic => "Periodic",
            Verdict::Unbounded => "Unbounded",
        })
    }
}

/// Which clause produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `SysOne`, period `3(k+1)`.
    T1,
    /// `m == k`, period `2k+2`.
    S2I,
    /// `x_i y_i = 1` for every `i` in `-m..=0`, period `k+1`.
    S2Ii,
    /// `k` even.
    S2IIIa,
    /// `k` odd, `m` even.
    S2IIIb,
    /// both odd with `k ≡ 3, m ≡ 1 (mod 4)` or `2(m+1) = k+1`.
    S2IIIc,
    /// both odd otherwise; the verdict follows the repeated-root test.
    S2IIIdCorrected,
}

impl Rule {
    pub fn tag(&self) -> &'static str {
        match self {
            Rule::T1 => "T1",
            Rule::S2I => "S2_i",
            Rule::S2Ii => "S2_ii",
            Rule::S2IIIa => "S2_iiia",
            Rule::S2IIIb => "S2_iiib",
            Rule::S2IIIc => "S2_iiic",
            Rule::S2IIIdCorrected => "S2_iiid_corrected",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Classifier verdict. Periods are present exactly when the verdict is
/// `Periodic`; `generic_minimal_period` always divides `stated_period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BehaviorClass {
    pub verdict: Verdict,
    /// The period formula attached to the clause.
    pub stated_period: Option<u64>,
    /// The least period for generic initial data.
    pub generic_minimal_period: Option<u64>,
    pub rule: Rule,
}

impl BehaviorClass {
    fn periodic(stated: u64, generic: u64, rule: Rule) -> Self {
        debug_assert_eq!(stated % generic, 0);
        BehaviorClass {
            verdict: Verdict::Periodic,
            stated_period: Some(stated),
            generic_minimal_period: Some(generic),
            rule,
        }
    }

    fn unbounded(rule: Rule) -> Self {
        BehaviorClass {
            verdict: Verdict::Unbounded,
            stated_period: None,
            generic_minimal_period: None,
            rule,
        }
    }
}

impl fmt::Display for BehaviorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict={}", self.verdict)?;
        if let (Some(s), Some(g)) = (self.stated_period, self.generic_minimal_period) {
            write!(f, " stated={s} generic={g}")?;
        }
        write!(f, " rule={}", self.rule)
    }
}

/// `x_i y_i = 1` for every `i` in `-m..=0`.
pub fn unit_products(spec: &SystemSpec, init: &InitialConditions) -> bool {
    let m = spec.m().unwrap_or(0) as i64;
    (-m..=0).all(|i| match (init.x_at(i), init.y_at(i)) {
        (Some(x), Some(y)) => (x * y).is_one(),
        _ => false,
    })
}

pub fn classify(spec: &SystemSpec, init: &InitialConditions) -> Result<BehaviorClass> {
    if init.nu() != spec.nu() {
        return Err(Error::InvalidInitials(format!(
            "initial segment does not match {spec}"
        )));
    }
    if !init.all_positive() {
        return Err(Error::NonPositiveInitials);
    }
    let k = spec.k() as u64;
    let m = match spec.family() {
        Family::SysOne => {
            let p = 3 * (k + 1);
            return Ok(BehaviorClass::periodic(p, p, Rule::T1));
        }
        Family::SysTwo => spec.m().expect("SysTwo carries m") as u64,
    };
    if m == k {
        return Ok(BehaviorClass::periodic(2 * k + 2, 2 * k + 2, Rule::S2I));
    }
    if unit_products(spec, init) {
        return Ok(BehaviorClass::periodic(k + 1, k + 1, Rule::S2Ii));
    }
    let lcm = (k + 1).lcm(&(2 * (m + 1)));
    debug_assert_eq!(
        linearize::generic_period(spec).is_some(),
        !has_repeated_root(k as usize, m as usize)
    );
    let class = if k.is_multiple_of(2) {
        BehaviorClass::periodic(2 * (k + 1) * (m + 1), lcm, Rule::S2IIIa)
    } else if m % 2 == 0 {
        BehaviorClass::unbounded(Rule::S2IIIb)
    } else {
        let clause_c = (k % 4 == 3 && m % 4 == 1) || 2 * (m + 1) == k + 1;
        let rule = if clause_c {
            Rule::S2IIIc
        } else {
            Rule::S2IIIdCorrected
        };
        if has_repeated_root(k as usize, m as usize) {
            BehaviorClass::unbounded(rule)
        } else {
            BehaviorClass::periodic(lcm, lcm, rule)
        }
    };
    Ok(class)
}
