//! Analysis-free oracles over exact orbits.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::system::{Family, Orbit, SystemSpec};

/// Result of an exact period search.
///
/// When `minimal_period = Some(p)`, the points at orbit indices
/// `start + preperiod ..= checked_up_to` satisfy `(x, y)[n + p] = (x, y)[n]`
/// and no smaller positive shift does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodReport {
    pub minimal_period: Option<usize>,
    /// Number of leading points before the periodic part.
    pub preperiod: usize,
    /// Last orbit index examined.
    pub checked_up_to: i64,
}

/// Stride along which every solution's `y` subsequences are geometric:
/// `3(k+1)` for `SysOne`, `lcm(k+1, 2(m+1))` for `SysTwo`.
pub fn canonical_stride(spec: &SystemSpec) -> usize {
    let k = spec.k();
    match spec.family() {
        Family::SysOne => 3 * (k + 1),
        Family::SysTwo => (k + 1).lcm(&(2 * (spec.m().expect("SysTwo carries m") + 1))),
    }
}

/// Search bound covering twice the largest stated period, plus slack.
pub fn default_p_max(spec: &SystemSpec) -> usize {
    let k = spec.k();
    match spec.m() {
        None => 6 * (k + 1) + 6,
        Some(m) => 4 * (k + 1) * (m + 1) + 4,
    }
}

pub fn minimal_period(orbit: &Orbit, p_max: usize) -> Result<PeriodReport> {
    minimal_period_of_states(
        orbit.points(),
        orbit.start_index(),
        orbit.spec().nu() + 1,
        p_max,
    )
}

/// Smallest shift `p <= p_max` under which the tail of `points` repeats.
///
/// A shift is accepted only if at least `window` consecutive pairs match:
/// the recurrence is determined by that many pairs, so such a match forces
/// exact periodicity from there on.
pub fn minimal_period_of_states(
    points: &[(Rational, Rational)],
    start_index: i64,
    window: usize,
    p_max: usize,
) -> Result<PeriodReport> {
    let needed = 3 * p_max;
    if p_max == 0 || points.len() < needed {
        return Err(Error::OrbitTooShort {
            needed: needed.max(1),
            have: points.len(),
        });
    }
    let checked_up_to = start_index + points.len() as i64 - 1;
    for p in 1..=p_max {
        // first position from which every point matches its p-shift
        let from = (0..points.len() - p)
            .rev()
            .find(|&i| points[i] != points[i + p])
            .map_or(0, |i| i + 1);
        if points.len() - p - from >= window {
            return Ok(PeriodReport {
                minimal_period: Some(p),
                preperiod: from,
                checked_up_to,
            });
        }
    }
    Ok(PeriodReport {
        minimal_period: None,
        preperiod: 0,
        checked_up_to,
    })
}

/// Per-residue common ratios of `y[stride*n + t]`, `n >= 0`, if every such
/// subsequence is exactly geometric; `None` otherwise.
pub fn stride_ratios(orbit: &Orbit, stride: usize) -> Result<Option<Vec<Rational>>> {
    if stride == 0 || orbit.end_index() < 3 * stride as i64 - 1 {
        let have = usize::try_from(orbit.end_index() + 1).unwrap_or(0);
        return Err(Error::OrbitTooShort {
            needed: 3 * stride.max(1),
            have,
        });
    }
    let y = |n: i64| orbit.y(n).expect("index within orbit");
    let stride = stride as i64;
    let mut ratios = Vec::with_capacity(stride as usize);
    for t in 0..stride {
        let mut n = t;
        while n + 2 * stride <= orbit.end_index() {
            if y(n + 2 * stride) * y(n) != y(n + stride) * y(n + stride) {
                return Ok(None);
            }
            n += stride;
        }
        ratios.push(y(t + stride).checked_div(y(t))?);
    }
    Ok(Some(ratios))
}

/// `y[ρ(n+2)+t] · y[ρn+t] = y[ρ(n+1)+t]²` for every residue `t` and every
/// available `n >= 0`.
pub fn geometric_stride_check(orbit: &Orbit, stride: usize) -> Result<bool> {
    Ok(stride_ratios(orbit, stride)?.is_some())
}

/// Exact unboundedness certificate: all stride subsequences are geometric
/// and at least one ratio differs from one, so that subsequence tends to
/// zero or infinity.
pub fn is_unbounded_empirical(orbit: &Orbit, stride: usize) -> Result<bool> {
    Ok(stride_ratios(orbit, stride)?.is_some_and(|r| r.iter().any(|q| !q.is_one())))
}
