//! Exact analysis of two families of delayed rational difference systems:
//!
//! * `SysOne`: `x[n+1] = 1 / y[n-k]`, `y[n+1] = x[n-k] / y[n-k]`
//! * `SysTwo`: `x[n+1] = 1 / y[n-k]`, `y[n+1] = y[n-k] / (x[n-m] * y[n-m])`
//!
//! Every value is an exact [`Rational`]. Orbits are produced by [`simulate`],
//! the qualitative behavior is predicted by [`classify`] (built on the
//! root-of-unity analysis in [`linearize`]), the explicit solution formulas
//! for the odd-delay subfamilies live in [`closedform`], and [`detect`]
//! provides analysis-free oracles (exact period search and geometric growth
//! certificates) that check all of the above against the raw orbit.

pub mod classify;
pub mod closedform;
pub mod detect;
mod error;
pub mod linearize;
pub mod poly;
mod rational;
pub mod seeded;
pub mod simulate;
mod system;

pub use classify::{classify, BehaviorClass, Rule, Verdict};
pub use detect::PeriodReport;
pub use error::{Error, Result};
pub use linearize::{LinearRecurrence, Turn, UnityRoot, UnityRootMultiset};
pub use rational::Rational;
pub use simulate::{iterate, Simulator, DEFAULT_BIT_BUDGET};
pub use system::{Family, InitialConditions, Orbit, SystemSpec};
