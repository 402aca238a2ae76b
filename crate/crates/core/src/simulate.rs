//! Exact forward iteration of both systems.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::system::{Family, InitialConditions, Orbit, SystemSpec};

/// Default cap on numerator/denominator size. Unbounded orbits reach it
/// after a modest number of steps; periodic orbits never do.
pub const DEFAULT_BIT_BUDGET: u64 = 4096;

/// One application of the recurrence.
///
/// `history` holds the last `nu + 1` pairs, oldest first, so
/// `history[nu - j]` is the pair at index `n - j`. Returns `(x[n+1], y[n+1])`.
pub fn step(spec: &SystemSpec, history: &[(Rational, Rational)]) -> Result<(Rational, Rational)> {
    let nu = spec.nu();
    if history.len() != nu + 1 {
        return Err(Error::InvalidInitials(format!(
            "step needs {} history pairs, got {}",
            nu + 1,
            history.len()
        )));
    }
    let back = |j: usize| &history[nu - j];
    let (x_k, y_k) = back(spec.k());
    let x_next = y_k.reciprocal()?;
    let y_next = match spec.family() {
        Family::SysOne => x_k.checked_div(y_k)?,
        Family::SysTwo => {
            let (x_m, y_m) = back(spec.m().expect("SysTwo carries m"));
            y_k.checked_div(&(x_m * y_m))?
        }
    };
    Ok((x_next, y_next))
}

/// Streaming iterator over an orbit that keeps only the `nu + 1` most recent
/// pairs.
#[derive(Debug, Clone)]
pub struct Simulator {
    spec: SystemSpec,
    window: VecDeque<(Rational, Rational)>,
    last_index: i64,
    bit_budget: u64,
}

impl Simulator {
    pub fn new(spec: SystemSpec, init: &InitialConditions, bit_budget: u64) -> Result<Self> {
        if init.nu() != spec.nu() {
            return Err(Error::InvalidInitials(format!(
                "initial segment has nu={} but {spec} has nu={}",
                init.nu(),
                spec.nu()
            )));
        }
        Ok(Simulator {
            spec,
            window: init.points().collect(),
            last_index: 0,
            bit_budget,
        })
    }

    pub fn spec(&self) -> &SystemSpec {
        &self.spec
    }

    /// Index of the most recently produced pair.
    pub fn last_index(&self) -> i64 {
        self.last_index
    }

    /// Computes the next pair, returning its index.
    pub fn advance(&mut self) -> Result<(i64, Rational, Rational)> {
        let index = self.last_index + 1;
        let (x, y) = step(&self.spec, self.window.make_contiguous()).map_err(|e| match e {
            Error::DivisionByZero { .. } => Error::DivisionByZero { index: Some(index) },
            other => other,
        })?;
        let bits = x.bits().max(y.bits());
        if bits > self.bit_budget {
            return Err(Error::BudgetExceeded {
                index,
                bits,
                budget: self.bit_budget,
            });
        }
        self.window.pop_front();
        self.window.push_back((x.clone(), y.clone()));
        self.last_index = index;
        Ok((index, x, y))
    }
}

/// The orbit at indices `-nu..=n_steps`.
pub fn iterate(
    spec: &SystemSpec,
    init: &InitialConditions,
    n_steps: usize,
    bit_budget: u64,
) -> Result<Orbit> {
    match iterate_until_failure(spec, init, n_steps, bit_budget)? {
        (orbit, None) => Ok(orbit),
        (_, Some(err)) => Err(err),
    }
}

/// Like [`iterate`], but keeps the prefix computed before a division or
/// budget failure and returns the failure alongside it.
pub fn iterate_until_failure(
    spec: &SystemSpec,
    init: &InitialConditions,
    n_steps: usize,
    bit_budget: u64,
) -> Result<(Orbit, Option<Error>)> {
    let mut sim = Simulator::new(*spec, init, bit_budget)?;
    let mut points: Vec<_> = init.points().collect();
    points.reserve(n_steps);
    for _ in 0..n_steps {
        match sim.advance() {
            Ok((_, x, y)) => points.push((x, y)),
            Err(err) => return Ok((Orbit::new(*spec, points), Some(err))),
        }
    }
    Ok((Orbit::new(*spec, points), None))
}

/// `x_n * y_n` for every stored index.
pub fn product_sequence(orbit: &Orbit) -> Vec<Rational> {
    orbit.points().iter().map(|(x, y)| x * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn init(spec: &SystemSpec, x: &[&str], y: &[&str]) -> InitialConditions {
        InitialConditions::new(
            spec,
            x.iter().map(|s| q(s)).collect(),
            y.iter().map(|s| q(s)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn step_sys_two_by_substitution() {
        // y[n+1] = y[n-1]/(x[n] y[n]) with (x,y)[-1] = (1,5), (x,y)[0] = (2,3)
        let spec = SystemSpec::sys_two(1, 0).unwrap();
        let history = [(q("1"), q("5")), (q("2"), q("3"))];
        assert_eq!(step(&spec, &history).unwrap(), (q("1/5"), q("5/6")));
        // x[-1] is irrelevant
        let history = [(q("77"), q("5")), (q("2"), q("3"))];
        assert_eq!(step(&spec, &history).unwrap(), (q("1/5"), q("5/6")));
    }

    #[test]
    fn step_sys_one_by_substitution() {
        let spec = SystemSpec::sys_one(1).unwrap();
        let history = [(q("2"), q("4")), (q("3"), q("5"))];
        assert_eq!(step(&spec, &history).unwrap(), (q("1/4"), q("1/2")));
    }

    #[test]
    fn step_fixed_point() {
        for spec in [
            SystemSpec::sys_one(3).unwrap(),
            SystemSpec::sys_two(2, 4).unwrap(),
        ] {
            let history = vec![(Rational::one(), Rational::one()); spec.nu() + 1];
            assert_eq!(
                step(&spec, &history).unwrap(),
                (Rational::one(), Rational::one())
            );
        }
    }

    #[test]
    fn step_reports_division_by_zero() {
        let spec = SystemSpec::sys_two(1, 0).unwrap();
        let history = [(q("1"), q("0")), (q("2"), q("3"))];
        assert!(matches!(
            step(&spec, &history),
            Err(Error::DivisionByZero { .. })
        ));
    }

    #[test]
    fn orbit_prefix() {
        let spec = SystemSpec::sys_two(1, 0).unwrap();
        let orbit = iterate(
            &spec,
            &init(&spec, &["1", "2"], &["5", "3"]),
            3,
            DEFAULT_BIT_BUDGET,
        )
        .unwrap();
        assert_eq!(orbit.start_index(), -1);
        assert_eq!(orbit.end_index(), 3);
        let xs: Vec<_> = (1..=3).map(|n| orbit.x(n).unwrap().to_string()).collect();
        let ys: Vec<_> = (1..=3).map(|n| orbit.y(n).unwrap().to_string()).collect();
        assert_eq!(xs, ["1/5", "1/3", "6/5"]);
        assert_eq!(ys, ["5/6", "18", "5/36"]);
    }

    #[test]
    fn products_alternate_for_m_zero() {
        let spec = SystemSpec::sys_two(1, 0).unwrap();
        let orbit = iterate(
            &spec,
            &init(&spec, &["1", "2"], &["5", "3"]),
            6,
            DEFAULT_BIT_BUDGET,
        )
        .unwrap();
        let p = product_sequence(&orbit);
        // p[0] is index -1
        for n in 0..=6usize {
            let want = if n % 2 == 0 { q("6") } else { q("1/6") };
            assert_eq!(p[n + 1], want, "p_{n}");
        }
    }

    #[test]
    fn unit_product_stays_one_for_m_zero() {
        let spec = SystemSpec::sys_two(3, 0).unwrap();
        let init = InitialConditions::random_unit_products(&spec, 5);
        let orbit = iterate(&spec, &init, 40, DEFAULT_BIT_BUDGET).unwrap();
        let p = product_sequence(&orbit);
        assert!(p[spec.nu()..].iter().all(Rational::is_one));
    }

    #[test]
    fn reciprocal_orbit_gives_unit_products() {
        let spec = SystemSpec::sys_two(2, 2).unwrap();
        let y: Vec<Rational> = ["2", "3/7", "5"].iter().map(|s| q(s)).collect();
        let x = y.iter().map(|v| v.reciprocal().unwrap()).collect();
        let orbit = iterate(
            &spec,
            &InitialConditions::new(&spec, x, y).unwrap(),
            30,
            4096,
        )
        .unwrap();
        assert!(product_sequence(&orbit).iter().all(Rational::is_one));
    }

    #[test]
    fn all_ones_is_constant() {
        for spec in [
            SystemSpec::sys_one(2).unwrap(),
            SystemSpec::sys_two(3, 5).unwrap(),
        ] {
            let orbit = iterate(&spec, &InitialConditions::ones(&spec), 50, 64).unwrap();
            assert!(orbit.points().iter().all(|(x, y)| x.is_one() && y.is_one()));
        }
    }

    #[test]
    fn unbounded_regime_exhausts_budget() {
        let spec = SystemSpec::sys_two(3, 2).unwrap();
        let init = InitialConditions::random_positive(&spec, 1);
        match iterate(&spec, &init, 100_000, 64) {
            Err(Error::BudgetExceeded {
                index,
                budget: 64,
                bits,
            }) => {
                assert!(index > 0 && bits > 64);
            }
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn simulator_tracks_index() {
        let spec = SystemSpec::sys_one(1).unwrap();
        let mut sim = Simulator::new(spec, &InitialConditions::ones(&spec), 64).unwrap();
        assert_eq!(sim.advance().unwrap().0, 1);
        assert_eq!(sim.last_index(), 1);
    }

    #[test]
    fn partial_orbit_survives_budget_failure() {
        let spec = SystemSpec::sys_two(3, 2).unwrap();
        let init = InitialConditions::random_positive(&spec, 2);
        let (orbit, err) = iterate_until_failure(&spec, &init, 100_000, 128).unwrap();
        let Some(Error::BudgetExceeded { index, .. }) = err else {
            panic!("{err:?}")
        };
        assert_eq!(orbit.end_index(), index - 1);
    }
}
