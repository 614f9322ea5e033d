//! Counting polynomials of character varieties of the free group `F_m`.
//!
//! All series here are built from
//!
//! * `F(t) = Σ_d ((q-1)(q^2-1)…(q^d-1))^{m-1} t^d`, through
//!   `Σ A_d t^d = Pow(T⁻¹F(t)⁻¹, 1-q)` and
//!   `Σ A_d^irr t^d = (1-q) Log(T⁻¹F(t)⁻¹)`;
//! * the partition sum `Σ_λ r_λ^{m-1} t^{|λ|}`, through
//!   `Σ M_d t^d = Pow(·, q-1)` and `Σ A_d^ind t^d = (q-1) Log(·)`.
//!
//! Every polynomial coming out of these constructions must have integer
//! coefficients; a fractional coefficient is reported as
//! [`Error::NotIntegral`] rather than returned.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{all_natural, is_integral};
use crate::combinatorics::partitions::{partitions, Partition};
use crate::error::{Error, Result};
use crate::numtheory::{mobius, totient};
use crate::plethystic::{pleth_log, pow};
use crate::{rat, Int, QPoly, QRatFun, QSeries, Rat};

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidArgument("m must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `q - 1`.
pub fn s_poly() -> QPoly {
    QPoly::from_ints(&[-1, 1])
}

/// `(q - 1)^m`.
pub fn s_pow(m: u32) -> QPoly {
    s_poly().pow(m)
}

/// `(q-1)(q^2-1)…(q^d-1)`.
pub fn q_pochhammer_prod(d: usize) -> QPoly {
    (1..=d).fold(QPoly::one(), |acc, i| &acc * &QPoly::q_pow_minus_one(i))
}

fn ensure_integral(series: &QSeries, what: &str) -> Result<()> {
    for (d, c) in series.coeffs().iter().enumerate() {
        if !is_integral(c) {
            return Err(Error::NotIntegral(format!("{what}, degree {d} in t")));
        }
    }
    Ok(())
}

/// `F(t)` truncated at `t^order`.
pub fn series_f(m: u32, order: usize) -> Result<QSeries> {
    check_m(m)?;
    Ok(QSeries::from_fn(order, |d| q_pochhammer_prod(d).pow(m - 1)))
}

/// `T⁻¹ F(t)⁻¹`.
pub fn shifted_inverse_f(m: u32, order: usize) -> Result<QSeries> {
    series_f(m, order)?.inverse()?.shift_t(m, -1)
}

/// `Σ_{d ≥ 1} A_d^irr(q) t^d`, absolutely irreducible representations.
pub fn airr_series(m: u32, order: usize) -> Result<QSeries> {
    let log = pleth_log(&shifted_inverse_f(m, order)?)?;
    let out = log.mul_coeff(&QPoly::from_ints(&[1, -1]));
    ensure_integral(&out, "A_irr")?;
    Ok(out)
}

/// `Σ_{d ≥ 0} A_d(q) t^d`, semisimple representations.
pub fn a_series(m: u32, order: usize) -> Result<QSeries> {
    let out = pow(&shifted_inverse_f(m, order)?, &QPoly::from_ints(&[1, -1]))?;
    ensure_integral(&out, "A")?;
    Ok(out)
}

/// `r_λ = Π_n q^{λ_n²} (q⁻¹)_{λ_n - λ_{n+1}}` with `(x)_k = (1-x)…(1-x^k)`,
/// cleared of negative powers of `q`.
pub fn r_lambda(lambda: &Partition) -> QPoly {
    let parts = lambda.parts();
    let mut exponent: i64 = 0;
    let mut out = QPoly::one();
    for (n, &part) in parts.iter().enumerate() {
        let next = parts.get(n + 1).copied().unwrap_or(0);
        let k = i64::from(part - next);
        // (q^{-1})_k = Π_{i ≤ k} (q^i - 1) / q^i
        exponent += i64::from(part) * i64::from(part) - k * (k + 1) / 2;
        out = &out * &q_pochhammer_prod(k as usize);
    }
    assert!(exponent >= 0, "r_lambda exponent must be nonnegative");
    out.shift_up(exponent as usize)
}

/// `Σ_λ r_λ(q)^{m-1} t^{|λ|}` over all partitions of size ≤ `order`.
pub fn partition_series(m: u32, order: usize) -> Result<QSeries> {
    check_m(m)?;
    Ok(QSeries::from_fn(order, |n| {
        partitions(n).iter().fold(QPoly::zero(), |acc, lambda| {
            &acc + &r_lambda(lambda).pow(m - 1)
        })
    }))
}

/// `Σ_d M_d(q) t^d`, all conjugation orbits on `Hom(F_m, GL_d(F_q))`.
pub fn m_series(m: u32, order: usize) -> Result<QSeries> {
    let out = pow(&partition_series(m, order)?, &s_poly())?;
    ensure_integral(&out, "M")?;
    Ok(out)
}

/// `Σ_{d ≥ 1} A_d^ind(q) t^d`, absolutely indecomposable representations.
pub fn aind_series(m: u32, order: usize) -> Result<QSeries> {
    let out = pleth_log(&partition_series(m, order)?)?.mul_coeff(&s_poly());
    ensure_integral(&out, "A_ind")?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Gl,
    Pgl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Full,
    Irr,
}

/// E-polynomial `E(u, v)`, stored as a polynomial in the product `uv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPolynomial {
    in_uv: QPoly,
}

impl EPolynomial {
    pub fn from_uv_poly(in_uv: QPoly) -> Self {
        EPolynomial { in_uv }
    }

    /// Coefficients of `(uv)^k`.
    pub fn uv_poly(&self) -> &QPoly {
        &self.in_uv
    }

    pub fn eval(&self, u: &Rat, v: &Rat) -> Rat {
        self.in_uv.eval(&(u * v))
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.in_uv.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.in_uv.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "u*v".to_string(),
                _ => format!("u^{k}*v^{k}"),
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{}", crate::arith::rat_to_string(&mag))?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{}*{mono}", crate::arith::rat_to_string(&mag))?,
            }
        }
        Ok(())
    }
}

/// E-polynomial of the `GL_d` or `PGL_d` character variety from its
/// counting polynomial (`A_d` or `A_d^irr`).
///
/// For `PGL_d` the counting polynomial is divided exactly by `(q-1)^m`,
/// which needs `m ≥ 2`.
pub fn e_polynomial(counting: &QPoly, m: u32, group: Group) -> Result<EPolynomial> {
    check_m(m)?;
    match group {
        Group::Gl => Ok(EPolynomial::from_uv_poly(counting.clone())),
        Group::Pgl => {
            if m < 2 {
                return Err(Error::InvalidArgument(
                    "PGL E-polynomials need m >= 2".into(),
                ));
            }
            Ok(EPolynomial::from_uv_poly(counting.div_exact(&s_pow(m))?))
        }
    }
}

/// Euler characteristics of the `PGL_d` character variety and of its
/// irreducible locus, as the limit at `q = 1` of `A/(q-1)^m` and
/// `A^irr/(q-1)^m`.
pub fn euler_chars_from(a: &QPoly, a_irr: &QPoly, m: u32) -> Result<(Rat, Rat)> {
    if m < 2 {
        return Err(Error::InvalidArgument(
            "Euler characteristics need m >= 2".into(),
        ));
    }
    let den = s_pow(m);
    if a.div_exact(&den).is_err() || a_irr.div_exact(&den).is_err() {
        return Err(Error::NotDivisible);
    }
    let chi = QRatFun::new(a.clone(), den.clone())?.limit_at_one()?;
    let chi_irr = QRatFun::new(a_irr.clone(), den)?.limit_at_one()?;
    Ok((chi, chi_irr))
}

pub fn euler_chars(m: u32, d: usize) -> Result<(Rat, Rat)> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let a = a_series(m, d)?;
    let airr = airr_series(m, d)?;
    euler_chars_from(a.coeff(d), airr.coeff(d), m)
}

/// `(φ(d) d^{m-2}, μ(d) d^{m-2})`, the closed form the limits must match.
pub fn euler_chars_closed_form(m: u32, d: usize) -> (Int, Int) {
    let scale = Int::from(d).pow(m - 2);
    (
        Int::from(totient(d as u64)) * &scale,
        Int::from(mobius(d as u64)) * &scale,
    )
}

/// Expansion of the counting polynomials in powers of `s = q - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityRow {
    pub d: usize,
    pub s_coeffs_a: Vec<Rat>,
    /// All `s`-coefficients of `A_d` are nonnegative integers.
    pub a_positive: bool,
    pub s_coeffs_airr: Vec<Rat>,
    /// Index of the first negative `s`-coefficient of `A_d^irr`, if any.
    pub airr_first_negative: Option<usize>,
}

fn positivity_row(d: usize, a: &QPoly, a_irr: &QPoly) -> PositivityRow {
    let s_coeffs_a = a.expand_in_s();
    let s_coeffs_airr = a_irr.expand_in_s();
    PositivityRow {
        d,
        a_positive: all_natural(&s_coeffs_a),
        airr_first_negative: s_coeffs_airr.iter().position(|c| c.is_negative()),
        s_coeffs_a,
        s_coeffs_airr,
    }
}

pub fn positivity_report(m: u32, dmax: usize) -> Result<Vec<PositivityRow>> {
    let a = a_series(m, dmax)?;
    let airr = airr_series(m, dmax)?;
    Ok((1..=dmax)
        .map(|d| positivity_row(d, a.coeff(d), airr.coeff(d)))
        .collect())
}

/// Default table size: coefficients grow quickly with `m`.
pub fn default_dmax(m: u32) -> usize {
    if m <= 3 {
        6
    } else {
        4
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVarRow {
    pub d: usize,
    pub a: QPoly,
    pub a_irr: QPoly,
    pub a_ind: QPoly,
    pub m_count: QPoly,
    /// `(χ, χ^irr)` of the `PGL_d` varieties; `None` for `m = 1`.
    pub chi: Option<(Rat, Rat)>,
    pub positivity: PositivityRow,
}

impl CharVarRow {
    pub fn counting(&self, variant: Variant) -> &QPoly {
        match variant {
            Variant::Full => &self.a,
            Variant::Irr => &self.a_irr,
        }
    }

    pub fn e_poly(&self, m: u32, group: Group, variant: Variant) -> Result<EPolynomial> {
        e_polynomial(self.counting(variant), m, group)
    }
}

/// All counting polynomials for one `m` and `d = 1..=dmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVarTable {
    pub m: u32,
    pub dmax: usize,
    pub rows: Vec<CharVarRow>,
}

impl CharVarTable {
    pub fn compute(m: u32, dmax: usize) -> Result<Self> {
        check_m(m)?;
        if dmax == 0 {
            return Err(Error::InvalidArgument("dmax must be at least 1".into()));
        }
        let a = a_series(m, dmax)?;
        let airr = airr_series(m, dmax)?;
        let aind = aind_series(m, dmax)?;
        let mser = m_series(m, dmax)?;

        let base = s_pow(m);
        for (name, s) in [("A", &a), ("A_irr", &airr), ("A_ind", &aind), ("M", &mser)] {
            if s.coeff(1) != &base {
                return Err(Error::IdentityFailed(format!("{name}_1 != (q-1)^{m}")));
            }
        }

        let mut rows = Vec::with_capacity(dmax);
        for d in 1..=dmax {
            let chi = if m >= 2 {
                Some(euler_chars_from(a.coeff(d), airr.coeff(d), m)?)
            } else {
                None
            };
            rows.push(CharVarRow {
                d,
                a: a.coeff(d).clone(),
                a_irr: airr.coeff(d).clone(),
                a_ind: aind.coeff(d).clone(),
                m_count: mser.coeff(d).clone(),
                chi,
                positivity: positivity_row(d, a.coeff(d), airr.coeff(d)),
            });
        }
        Ok(CharVarTable { m, dmax, rows })
    }

    pub fn row(&self, d: usize) -> Option<&CharVarRow> {
        self.rows.get(d.checked_sub(1)?)
    }
}

/// Closed form of `A_2^irr` for general `m`.
pub fn a2_irr_closed_form(m: u32) -> QPoly {
    let q = QPoly::q();
    let qp1 = QPoly::from_ints(&[1, 1]);
    let half = crate::ratio(1, 2);
    let inner = &(&(&q.pow(m - 1) * &s_pow(m - 1)) * &(&qp1.pow(m - 1) - &QPoly::one()))
        - &(&qp1.pow(m - 1) - &s_pow(m - 1)).scale(&half);
    &s_pow(m) * &inner
}

/// Closed form of `A_2` for general `m`.
pub fn a2_closed_form(m: u32) -> QPoly {
    &s_pow(m) * &pgl2_closed_form(m)
}

/// Closed form of the `PGL_2` E-polynomial as a polynomial in `uv`.
pub fn pgl2_closed_form(m: u32) -> QPoly {
    let x = QPoly::q();
    let xp1 = QPoly::from_ints(&[1, 1]);
    let half = crate::ratio(1, 2);
    let first = &(&x.pow(m - 1) * &s_pow(m - 1)) * &(&xp1.pow(m - 1) - &QPoly::one());
    let second = (&x * &(&xp1.pow(m - 1) + &s_pow(m - 1))).scale(&half);
    &first + &second
}

/// Value of a polynomial at an integer point, as an integer when exact.
pub fn eval_int(p: &QPoly, q: i64) -> Rat {
    p.eval(&rat(q))
}
