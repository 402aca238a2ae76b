//! Explicit solutions of `SysTwo` for odd `k` and `m ∈ {0, 1}`.
//!
//! * `S3`: `k = 2r+1`, `m = 0`. Products alternate, `x_n y_n = A^((-1)^n)`,
//!   with `A = x_0 y_0`.
//! * `S4`: `k = 2r+1 ≡ 3 (mod 4)`, `m = 1`. Products follow
//!   `x_n y_n = A^ξ(n) B^-ξ(n-1)`, with `B = x_{-1} y_{-1}`, and stride
//!   subsequences are geometric.
//! * `S5`: `k = 4k'+1`, `m = 1`. Periodic with period `ρ = 4(2k'+1)`.
//!
//! All exponents are integers drawn from `ξ(n) = (i^n + (-i)^n)/2`, which
//! only depends on `n mod 4`; there is no floating-point trigonometry.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::system::{InitialConditions, SystemSpec};

/// `ξ(n)`: 1, 0, -1, 0 for `n ≡ 0, 1, 2, 3 (mod 4)`.
pub fn xi(n: i64) -> i64 {
    [1, 0, -1, 0][n.rem_euclid(4) as usize]
}

/// `cos(nπ/2)` for integer `n`.
pub fn cos_quarter(n: i64) -> i64 {
    [1, 0, -1, 0][n.rem_euclid(4) as usize]
}

/// `sin(nπ/2)` for integer `n`.
pub fn sin_quarter(n: i64) -> i64 {
    [0, 1, 0, -1][n.rem_euclid(4) as usize]
}

/// Writes `n = period * q + s` with `s` in `lowest..lowest + period`.
pub fn split_index(n: i64, period: i64, lowest: i64) -> (i64, i64) {
    let q = (n - lowest).div_euclid(period);
    (q, n - q * period)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `k = 2r + 1`, `m = 0`.
    S3 { r: usize },
    /// `k = 2r + 1` with `r` odd, `m = 1`.
    S4 { r: usize },
    /// `k = 4 kp + 1` with `kp >= 1`, `m = 1`.
    S5 { kp: usize },
}

impl ClosedForm {
    pub fn spec(&self) -> Result<SystemSpec> {
        match *self {
            ClosedForm::S3 { r } => SystemSpec::sys_two(2 * r + 1, 0),
            ClosedForm::S4 { r } if r % 2 == 1 => SystemSpec::sys_two(2 * r + 1, 1),
            ClosedForm::S4 { r } => Err(Error::IncompatibleShape(format!(
                "s4 needs k ≡ 3 (mod 4), got k = {}",
                2 * r + 1
            ))),
            ClosedForm::S5 { kp } if kp >= 1 => SystemSpec::sys_two(4 * kp + 1, 1),
            ClosedForm::S5 { .. } => Err(Error::IncompatibleShape(
                "s5 needs k = 4k'+1 with k' >= 1".into(),
            )),
        }
    }

    /// Picks the shape parameter for a named form (`s3`, `s4`, `s5`) from
    /// the delays.
    pub fn for_delays(name: &str, k: usize, m: usize) -> Result<Self> {
        let bad = |why: &str| {
            Err(Error::IncompatibleShape(format!(
                "{name} with k={k}, m={m}: {why}"
            )))
        };
        let form = match name {
            "s3" if m != 0 => return bad("needs m = 0"),
            "s3" if k.is_multiple_of(2) => return bad("needs odd k"),
            "s3" => ClosedForm::S3 { r: (k - 1) / 2 },
            "s4" if m != 1 => return bad("needs m = 1"),
            "s4" if k % 4 != 3 => return bad("needs k ≡ 3 (mod 4)"),
            "s4" => ClosedForm::S4 { r: (k - 1) / 2 },
            "s5" if m != 1 => return bad("needs m = 1"),
            "s5" if k % 4 != 1 || k < 5 => return bad("needs k = 4k'+1 with k' >= 1"),
            "s5" => ClosedForm::S5 { kp: (k - 1) / 4 },
            _ => {
                return Err(Error::IncompatibleShape(format!(
                    "unknown closed form `{name}`"
                )))
            }
        };
        form.spec()?;
        Ok(form)
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClosedForm::S3 { .. } => "s3",
            ClosedForm::S4 { .. } => "s4",
            ClosedForm::S5 { .. } => "s5",
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClosedForm::S3 { r } => write!(f, "s3(r={r})"),
            ClosedForm::S4 { r } => write!(f, "s4(r={r})"),
            ClosedForm::S5 { kp } => write!(f, "s5(k'={kp})"),
        }
    }
}

/// Shape plus the initial data the formulas read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormParams {
    form: ClosedForm,
    /// `x_0 y_0`
    a: Rational,
    /// `x_{-1} y_{-1}`; absent for `S3`.
    b: Option<Rational>,
    init: InitialConditions,
}

impl ClosedFormParams {
    pub fn new(form: ClosedForm, init: &InitialConditions) -> Result<Self> {
        let spec = form.spec()?;
        if init.nu() != spec.nu() {
            return Err(Error::InvalidInitials(format!(
                "{form} needs initials for {spec}"
            )));
        }
        let product = |n: i64| -> Result<Rational> {
            let x = init.x_at(n).ok_or(Error::IndexOutOfRange(n))?;
            let y = init.y_at(n).ok_or(Error::IndexOutOfRange(n))?;
            Ok(x * y)
        };
        let a = product(0)?;
        let b = match form {
            ClosedForm::S3 { .. } => None,
            _ => Some(product(-1)?),
        };
        Ok(ClosedFormParams {
            form,
            a,
            b,
            init: init.clone(),
        })
    }

    pub fn form(&self) -> ClosedForm {
        self.form
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> Option<&Rational> {
        self.b.as_ref()
    }

    fn y_init(&self, n: i64) -> Result<&Rational> {
        self.init.y_at(n).ok_or(Error::IndexOutOfRange(n))
    }

    fn b_required(&self) -> Result<&Rational> {
        self.b
            .as_ref()
            .ok_or_else(|| Error::IncompatibleShape(format!("{} has no B", self.form)))
    }
}

fn require_positive_index(n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::IndexOutOfRange(n));
    }
    Ok(())
}

/// `(x_n, y_n)` for `n >= 1` from whichever formula matches the shape.
pub fn eval(params: &ClosedFormParams, n: i64) -> Result<(Rational, Rational)> {
    match params.form {
        ClosedForm::S3 { .. } => eval_s3(params, n),
        ClosedForm::S4 { .. } => eval_s4(params, n),
        ClosedForm::S5 { .. } => eval_s5(params, n),
    }
}

pub fn eval_s3(params: &ClosedFormParams, n: i64) -> Result<(Rational, Rational)> {
    let ClosedForm::S3 { r } = params.form else {
        return Err(Error::IncompatibleShape(format!(
            "eval_s3 called with {}",
            params.form
        )));
    };
    require_positive_index(n)?;
    let period = 2 * r as i64 + 2;
    let a = &params.a;

    let (q, s) = split_index(n, period, 1);
    let y_ref = params.y_init(s - period)?;
    let x = if s % 2 == 1 {
        a.pow(q)?.checked_div(y_ref)?
    } else {
        (&a.pow(q)? * y_ref).reciprocal()?
    };

    let (q, s) = split_index(n, period, 1 - period);
    let y_s = params.y_init(s)?;
    let y = if s.rem_euclid(2) == 1 {
        y_s.checked_div(&a.pow(q)?)?
    } else {
        &a.pow(q)? * y_s
    };
    Ok((x, y))
}

/// Uses the sine/cosine exponents in their displayed form, via
/// [`sin_quarter`] and [`cos_quarter`].
pub fn eval_s4(params: &ClosedFormParams, n: i64) -> Result<(Rational, Rational)> {
    let ClosedForm::S4 { r } = params.form else {
        return Err(Error::IncompatibleShape(format!(
            "eval_s4 called with {}",
            params.form
        )));
    };
    require_positive_index(n)?;
    let period = 2 * r as i64 + 2;
    let (a, b) = (&params.a, params.b_required()?);
    // A or B raised to q times the parity-selected trig factor of s
    let factor = |q: i64, s: i64| -> Result<Rational> {
        if s.rem_euclid(2) == 1 {
            b.pow(q * sin_quarter(s))
        } else {
            a.pow(q * cos_quarter(s + 2))
        }
    };

    let (q, s) = split_index(n, period, 1);
    let x = factor(q, s)?.checked_div(params.y_init(s - period)?)?;

    let (q, s) = split_index(n, period, 1 - period);
    let y = params.y_init(s)?.checked_div(&factor(q, s)?)?;
    Ok((x, y))
}

pub fn eval_s5(params: &ClosedFormParams, n: i64) -> Result<(Rational, Rational)> {
    let ClosedForm::S5 { kp } = params.form else {
        return Err(Error::IncompatibleShape(format!(
            "eval_s5 called with {}",
            params.form
        )));
    };
    require_positive_index(n)?;
    let half = 4 * kp as i64 + 2;
    let rho = 2 * half;
    let (a, b) = (&params.a, params.b_required()?);

    let (_, s) = split_index(n, rho, 1);
    // initial y index congruent to s mod (k+1)
    let (_, t) = split_index(s - half, half, 1 - half);
    let y_t = params.y_init(t)?;
    let weight = &a.pow(xi(s))? * &b.pow(-xi(s - 1))?;

    if s <= half {
        let x = y_t.reciprocal()?;
        let y = y_t.checked_div(&(&a.pow(-xi(s))? * &b.pow(xi(s - 1))?))?;
        Ok((x, y))
    } else {
        Ok((weight.checked_div(y_t)?, y_t.clone()))
    }
}
