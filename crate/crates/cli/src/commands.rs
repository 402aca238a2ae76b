//! The `simulate`, `classify` and `verify` verbs.

use std::fmt;
use std::io::Write;

use recurra::closedform::{self, ClosedForm, ClosedFormParams};
use recurra::simulate::iterate_until_failure;
use recurra::{iterate, Orbit};

use crate::config::Experiment;
use crate::error::CliError;
use crate::render;

pub const CSV_HEADER: &str = "n,x_exact,y_exact,x_float,y_float";

pub fn write_orbit_csv<W: Write>(orbit: &Orbit, out: &mut W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for (n, x, y) in orbit.iter() {
        writeln!(
            out,
            "{n},{x},{y},{},{}",
            render::float(x.to_f64()),
            render::float(y.to_f64())
        )?;
    }
    Ok(())
}

/// Simulates and writes the orbit as CSV. If the bit budget runs out, the
/// rows computed so far are still written before the error is returned.
pub fn simulate<W: Write>(exp: &Experiment, out: &mut W) -> Result<Orbit, CliError> {
    let (orbit, failure) =
        iterate_until_failure(&exp.spec, &exp.init, exp.iterations, exp.bit_budget)?;
    write_orbit_csv(&orbit, out)?;
    out.flush()?;
    match failure {
        None => Ok(orbit),
        Some(err) => Err(err.into()),
    }
}

/// One-line report, e.g. `verdict=Periodic stated=30 generic=30 rule=S2_iiia`.
pub fn classify(exp: &Experiment) -> Result<String, CliError> {
    Ok(recurra::classify(&exp.spec, &exp.init)?.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyReport {
    pub n_checked: usize,
    pub first_mismatch: Option<i64>,
}

impl VerifyReport {
    pub fn matched(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_mismatch {
            None => write!(f, "match=true n_checked={}", self.n_checked),
            Some(n) => write!(f, "match=false first_mismatch={n}"),
        }
    }
}

/// Compares the selected closed form with the simulated orbit at
/// `n = 1..=iterations`.
pub fn verify(exp: &Experiment) -> Result<VerifyReport, CliError> {
    let name = exp
        .closed_form
        .as_deref()
        .ok_or_else(|| CliError::Config("verify needs `closed_form` (s3, s4 or s5)".into()))?;
    let m = exp.spec.m().ok_or_else(|| {
        recurra::Error::IncompatibleShape(format!("{name} applies to SysTwo, not {}", exp.spec))
    })?;
    let form = ClosedForm::for_delays(name, exp.spec.k(), m)?;
    let params = ClosedFormParams::new(form, &exp.init)?;
    let orbit = iterate(&exp.spec, &exp.init, exp.iterations, exp.bit_budget)?;
    for n in 1..=exp.iterations as i64 {
        let (x, y) = closedform::eval(&params, n)?;
        if orbit.get(n) != Some(&(x, y)) {
            return Ok(VerifyReport {
                n_checked: (n - 1) as usize,
                first_mismatch: Some(n),
            });
        }
    }
    Ok(VerifyReport {
        n_checked: exp.iterations,
        first_mismatch: None,
    })
}
