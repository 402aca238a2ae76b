//! Classifier-versus-oracle grid over `SysTwo` delay pairs.
//!
//! Each row classifies one seeded initial segment, then simulates it and
//! runs the exact period search and the stride certificate on the result.
//! A row agrees when a periodic prediction meets a detected period that
//! divides the stated one (with no growth certificate), or an unbounded
//! prediction meets a certificate.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;

use recurra::detect::{canonical_stride, default_p_max, is_unbounded_empirical, minimal_period};
use recurra::simulate::iterate_until_failure;
use recurra::{classify, BehaviorClass, InitialConditions, SystemSpec, Verdict};

use crate::error::CliError;

/// Largest `k_max` or `m_max` accepted for the grid.
pub const GRID_LIMIT: usize = 8;

/// Unbounded orbits with repeated roots need tens of thousands of bits
/// before the period search window is filled.
pub const SWEEP_BIT_BUDGET: u64 = 1 << 20;

pub const SWEEP_HEADER: &str =
    "k,m,seed,verdict,rule,stated,generic,detected_period,unbounded_certificate,minimal_match,agree";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub k_max: usize,
    pub m_max: usize,
    /// Seeds `first_seed .. first_seed + seeds`.
    pub seeds: u64,
    pub first_seed: u64,
    /// Pairs appended after the grid; not bound by [`GRID_LIMIT`].
    pub extra_pairs: Vec<(usize, usize)>,
    pub bit_budget: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            k_max: 6,
            m_max: 6,
            seeds: 5,
            first_seed: 1,
            extra_pairs: Vec::new(),
            bit_budget: SWEEP_BIT_BUDGET,
        }
    }
}

impl SweepConfig {
    fn jobs(&self) -> Result<Vec<(SystemSpec, u64)>, CliError> {
        if self.k_max == 0 || self.k_max > GRID_LIMIT || self.m_max > GRID_LIMIT {
            return Err(CliError::Config(format!(
                "sweep needs 1 <= k_max <= {GRID_LIMIT} and m_max <= {GRID_LIMIT}"
            )));
        }
        if self.seeds == 0 {
            return Err(CliError::Config("sweep needs at least one seed".into()));
        }
        let grid = (1..=self.k_max).flat_map(|k| (0..=self.m_max).map(move |m| (k, m)));
        let mut jobs = Vec::new();
        for (k, m) in grid.chain(self.extra_pairs.iter().copied()) {
            let spec = SystemSpec::sys_two(k, m)?;
            jobs.extend((0..self.seeds).map(|i| (spec, self.first_seed + i)));
        }
        Ok(jobs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub k: usize,
    pub m: usize,
    pub seed: u64,
    pub class: BehaviorClass,
    pub detected_period: Option<usize>,
    pub unbounded_certificate: bool,
}

impl SweepRow {
    pub fn minimal_match(&self) -> bool {
        self.detected_period.is_some()
            && self.detected_period.map(|p| p as u64) == self.class.generic_minimal_period
    }

    pub fn agree(&self) -> bool {
        match self.class.verdict {
            Verdict::Periodic => {
                let divides = matches!(
                    (self.detected_period, self.class.stated_period),
                    (Some(p), Some(s)) if s % p as u64 == 0
                );
                divides && !self.unbounded_certificate
            }
            Verdict::Unbounded => self.unbounded_certificate,
        }
    }
}

impl fmt::Display for SweepRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
        write!(
            f,
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.k,
            self.m,
            self.seed,
            self.class.verdict,
            self.class.rule,
            opt(self.class.stated_period),
            opt(self.class.generic_minimal_period),
            opt(self.detected_period.map(|p| p as u64)),
            self.unbounded_certificate,
            self.minimal_match(),
            self.agree()
        )
    }
}

/// Classifies and measures one seeded orbit.
pub fn sweep_row(spec: SystemSpec, seed: u64, bit_budget: u64) -> Result<SweepRow, CliError> {
    let init = InitialConditions::random_positive(&spec, seed);
    let class = classify(&spec, &init)?;
    let p_max = default_p_max(&spec);
    let stride = canonical_stride(&spec);
    let steps = 3 * p_max.max(stride);
    // a budget failure only shortens the orbit; each detector checks its own length needs
    let (orbit, _) = iterate_until_failure(&spec, &init, steps, bit_budget)?;
    let detected_period = minimal_period(&orbit, p_max)
        .ok()
        .and_then(|r| r.minimal_period);
    let unbounded_certificate = is_unbounded_empirical(&orbit, stride).unwrap_or(false);
    Ok(SweepRow {
        k: spec.k(),
        m: spec.m().expect("sweep runs SysTwo"),
        seed,
        class,
        detected_period,
        unbounded_certificate,
    })
}

/// All rows in grid order (`k`, then `m`, then seed), extras last. Rows are
/// computed in parallel; the order does not depend on scheduling.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    cfg.jobs()?
        .into_par_iter()
        .map(|(spec, seed)| sweep_row(spec, seed, cfg.bit_budget))
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: &mut W) -> std::io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for row in rows {
        writeln!(out, "{row}")?;
    }
    out.flush()
}

/// Parses `7:11,2:2` into delay pairs.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let bad = || CliError::Config(format!("bad pair `{item}` (expected k:m)"));
            let (k, m) = item.trim().split_once(':').ok_or_else(bad)?;
            Ok((k.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_examples() {
        let row = sweep_row(SystemSpec::sys_two(2, 2).unwrap(), 1, SWEEP_BIT_BUDGET).unwrap();
        assert_eq!(row.to_string(), "2,2,1,Periodic,S2_i,6,6,6,false,true,true");
        let row = sweep_row(SystemSpec::sys_two(3, 1).unwrap(), 1, SWEEP_BIT_BUDGET).unwrap();
        assert_eq!(
            row.to_string(),
            "3,1,1,Unbounded,S2_iiic,,,,true,false,true"
        );
    }

    #[test]
    fn grid_order_and_limits() {
        let cfg = SweepConfig {
            k_max: 2,
            m_max: 1,
            seeds: 2,
            extra_pairs: vec![(3, 3)],
            ..Default::default()
        };
        let rows = sweep(&cfg).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.k, r.m, r.seed)).collect();
        assert_eq!(
            keys,
            [
                (1, 0, 1),
                (1, 0, 2),
                (1, 1, 1),
                (1, 1, 2),
                (2, 0, 1),
                (2, 0, 2),
                (2, 1, 1),
                (2, 1, 2),
                (3, 3, 1),
                (3, 3, 2)
            ]
        );
        assert!(rows.iter().all(SweepRow::agree));
        let too_big = SweepConfig {
            k_max: 9,
            ..Default::default()
        };
        assert!(matches!(sweep(&too_big), Err(CliError::Config(_))));
    }

    #[test]
    fn pairs() {
        assert_eq!(parse_pairs("7:11, 2:2").unwrap(), [(7, 11), (2, 2)]);
        assert!(parse_pairs("7-11").is_err());
    }
}
