use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::seeded::Lcg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `x[n+1] = 1/y[n-k]`, `y[n+1] = x[n-k]/y[n-k]`
    SysOne,
    /// `x[n+1] = 1/y[n-k]`, `y[n+1] = y[n-k]/(x[n-m] y[n-m])`
    SysTwo,
}

/// Which system is iterated, and its delays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SystemSpec {
    family: Family,
    k: usize,
    m: Option<usize>,
}

impl SystemSpec {
    pub fn sys_one(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidSpec("SysOne requires k >= 1".into()));
        }
        Ok(SystemSpec {
            family: Family::SysOne,
            k,
            m: None,
        })
    }

    pub fn sys_two(k: usize, m: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidSpec("SysTwo requires k >= 1".into()));
        }
        Ok(SystemSpec {
            family: Family::SysTwo,
            k,
            m: Some(m),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The second delay; `None` for `SysOne`.
    pub fn m(&self) -> Option<usize> {
        self.m
    }

    /// Largest delay. Initial data occupy indices `-nu..=0`.
    pub fn nu(&self) -> usize {
        self.k.max(self.m.unwrap_or(0))
    }
}

impl fmt::Display for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            None => write!(f, "SysOne(k={})", self.k),
            Some(m) => write!(f, "SysTwo(k={}, m={})", self.k, m),
        }
    }
}

/// Initial segments `x[-nu..=0]` and `y[-nu..=0]`; position 0 holds index `-nu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialConditions {
    x: Vec<Rational>,
    y: Vec<Rational>,
}

impl InitialConditions {
    pub fn new(spec: &SystemSpec, x: Vec<Rational>, y: Vec<Rational>) -> Result<Self> {
        let want = spec.nu() + 1;
        if x.len() != want || y.len() != want {
            return Err(Error::InvalidInitials(format!(
                "{spec} needs {want} values for each of x and y, got {} and {}",
                x.len(),
                y.len()
            )));
        }
        if let Some(pos) = x.iter().chain(&y).position(Rational::is_zero) {
            let (name, i) = if pos < want {
                ("x", pos)
            } else {
                ("y", pos - want)
            };
            return Err(Error::InvalidInitials(format!(
                "{name}[{}] is zero",
                i as i64 - spec.nu() as i64
            )));
        }
        Ok(InitialConditions { x, y })
    }

    /// Every initial value equal to one: the fixed point of both systems.
    pub fn ones(spec: &SystemSpec) -> Self {
        let v = vec![Rational::one(); spec.nu() + 1];
        InitialConditions { x: v.clone(), y: v }
    }

    /// Seeded positive initials `p/q` with `p, q` uniform in `1..=1000`,
    /// drawn x first (index `-nu` upward), then y.
    pub fn random_positive(spec: &SystemSpec, seed: u64) -> Self {
        let mut rng = Lcg::new(seed);
        let n = spec.nu() + 1;
        let mut draw = || {
            let p = rng.uniform_inclusive(1, 1000) as i64;
            let q = rng.uniform_inclusive(1, 1000) as i64;
            Rational::new(p, q).expect("q >= 1")
        };
        let x = (0..n).map(|_| draw()).collect();
        let y = (0..n).map(|_| draw()).collect();
        InitialConditions { x, y }
    }

    /// Random positive initials, then forces `x[i] = 1/y[i]` for `i` in
    /// `-m..=0` so every product `x[i] y[i]` there equals one.
    pub fn random_unit_products(spec: &SystemSpec, seed: u64) -> Self {
        let mut init = Self::random_positive(spec, seed);
        let m = spec.m().unwrap_or(0);
        let nu = spec.nu();
        for pos in (nu - m)..=nu {
            init.x[pos] = init.y[pos].reciprocal().expect("initials are nonzero");
        }
        init
    }

    pub fn nu(&self) -> usize {
        self.x.len() - 1
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    /// `x` at orbit index `n` in `-nu..=0`.
    pub fn x_at(&self, n: i64) -> Option<&Rational> {
        self.position(n).map(|p| &self.x[p])
    }

    pub fn y_at(&self, n: i64) -> Option<&Rational> {
        self.position(n).map(|p| &self.y[p])
    }

    fn position(&self, n: i64) -> Option<usize> {
        let p = n + self.nu() as i64;
        (0..=self.nu() as i64).contains(&p).then_some(p as usize)
    }

    pub fn all_positive(&self) -> bool {
        self.x.iter().chain(&self.y).all(Rational::is_positive)
    }

    pub fn points(&self) -> impl Iterator<Item = (Rational, Rational)> + '_ {
        self.x.iter().cloned().zip(self.y.iter().cloned())
    }
}

/// An exact trajectory. `points[i]` holds `(x_n, y_n)` for `n = start_index + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    spec: SystemSpec,
    start_index: i64,
    points: Vec<(Rational, Rational)>,
}

impl Orbit {
    pub(crate) fn new(spec: SystemSpec, points: Vec<(Rational, Rational)>) -> Self {
        Orbit {
            spec,
            start_index: -(spec.nu() as i64),
            points,
        }
    }

    /// Wraps externally produced points. Used by fixtures that need to
    /// corrupt an orbit; the recurrence is not re-checked.
    pub fn from_points(spec: SystemSpec, points: Vec<(Rational, Rational)>) -> Self {
        Self::new(spec, points)
    }

    pub fn spec(&self) -> &SystemSpec {
        &self.spec
    }

    pub fn start_index(&self) -> i64 {
        self.start_index
    }

    /// Index of the last stored point.
    pub fn end_index(&self) -> i64 {
        self.start_index + self.points.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn get(&self, n: i64) -> Option<&(Rational, Rational)> {
        usize::try_from(n - self.start_index)
            .ok()
            .and_then(|i| self.points.get(i))
    }

    pub fn x(&self, n: i64) -> Option<&Rational> {
        self.get(n).map(|p| &p.0)
    }

    pub fn y(&self, n: i64) -> Option<&Rational> {
        self.get(n).map(|p| &p.1)
    }

    /// `(n, x_n, y_n)` for every stored point.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational, &Rational)> + '_ {
        self.points
            .iter()
            .enumerate()
            .map(move |(i, (x, y))| (self.start_index + i as i64, x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation_and_nu() {
        assert!(SystemSpec::sys_one(0).is_err());
        assert!(SystemSpec::sys_two(0, 3).is_err());
        assert_eq!(SystemSpec::sys_one(4).unwrap().nu(), 4);
        assert_eq!(SystemSpec::sys_two(2, 5).unwrap().nu(), 5);
        assert_eq!(SystemSpec::sys_two(5, 0).unwrap().nu(), 5);
        assert_eq!(SystemSpec::sys_one(4).unwrap().m(), None);
    }

    #[test]
    fn initial_lengths_and_zeros() {
        let spec = SystemSpec::sys_two(2, 1).unwrap();
        let three = vec![Rational::one(); 3];
        assert!(InitialConditions::new(&spec, three.clone(), three.clone()).is_ok());
        assert!(InitialConditions::new(&spec, three.clone(), vec![Rational::one(); 2]).is_err());
        let mut with_zero = three.clone();
        with_zero[2] = Rational::zero();
        let err = InitialConditions::new(&spec, three, with_zero).unwrap_err();
        assert_eq!(err, Error::InvalidInitials("y[0] is zero".into()));
    }

    #[test]
    fn positivity_flag() {
        let spec = SystemSpec::sys_one(1).unwrap();
        let init = InitialConditions::new(
            &spec,
            vec![Rational::from(2), Rational::from(3)],
            vec![Rational::from(-4), Rational::from(5)],
        )
        .unwrap();
        assert!(!init.all_positive());
        assert!(InitialConditions::random_positive(&spec, 9).all_positive());
        assert_eq!(init.y_at(-1), Some(&Rational::from(-4)));
        assert_eq!(init.y_at(1), None);
    }

    #[test]
    fn random_initials_are_seeded() {
        let spec = SystemSpec::sys_two(3, 2).unwrap();
        let a = InitialConditions::random_positive(&spec, 42);
        assert_eq!(a, InitialConditions::random_positive(&spec, 42));
        assert_ne!(a, InitialConditions::random_positive(&spec, 43));
    }

    #[test]
    fn unit_products_cover_the_m_window() {
        let spec = SystemSpec::sys_two(4, 2).unwrap();
        let init = InitialConditions::random_unit_products(&spec, 7);
        for n in -2..=0 {
            assert!((init.x_at(n).unwrap() * init.y_at(n).unwrap()).is_one());
        }
        assert!(!(init.x_at(-3).unwrap() * init.y_at(-3).unwrap()).is_one());
    }
}
