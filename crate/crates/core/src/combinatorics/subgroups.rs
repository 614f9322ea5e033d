//! Index-`n` subgroups of the free group `F_m`.

use crate::charvar::{airr_series, s_poly};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, factorial};
use crate::{ratio, Int, QPoly, QRatFun, Rat, RatSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupCountRow {
    pub n: usize,
    /// Number of index-`n` subgroups.
    pub j_n: Int,
}

/// `J_n = n [x^n] log(Σ_k k!^{m-1} x^k)` for `n = 1..=nmax`.
pub fn subgroup_counts(m: u32, nmax: usize) -> Result<Vec<SubgroupCountRow>> {
    if m < 1 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let f = RatSeries::from_fn(nmax, |k| Rat::from_integer(factorial(k as u64).pow(m - 1)));
    let log = f.log()?;
    (1..=nmax)
        .map(|n| {
            let j = log.coeff(n) * Rat::from_integer(Int::from(n));
            if !j.is_integer() {
                return Err(Error::NotIntegral(format!("J_{n}")));
            }
            Ok(SubgroupCountRow {
                n,
                j_n: j.to_integer(),
            })
        })
        .collect()
}

/// Classical recursion
/// `J_n = n (n!)^{m-1} - Σ_{k=1}^{n-1} ((n-k)!)^{m-1} J_k`.
pub fn hall_recursion_oracle(m: u32, nmax: usize) -> Vec<Int> {
    let fact: Vec<Int> = (0..=nmax)
        .map(|k| factorial(k as u64).pow(m.saturating_sub(1)))
        .collect();
    let mut out: Vec<Int> = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        let mut j = Int::from(n) * &fact[n];
        for k in 1..n {
            j -= &fact[n - k] * &out[k - 1];
        }
        out.push(j);
    }
    out
}

/// Coefficients of `Ψ(Σ_n A_n^irr/(q-1) t^n)` at `t = x/(q-1)^{m-1}`, `q = 1`.
///
/// The coefficient of `x^n` is the limit at `q = 1` of
/// `Σ_{kj = n} A_j^irr(q^k) / (k (q^k - 1) (q-1)^{n(m-1)})`; individual
/// terms may have poles that cancel in the sum.
pub fn limit_transform(m: u32, nmax: usize) -> Result<Vec<Rat>> {
    if m < 2 {
        return Err(Error::InvalidArgument(
            "limit transform needs m >= 2".into(),
        ));
    }
    let airr = airr_series(m, nmax)?;
    let s = s_poly();
    (1..=nmax)
        .map(|n| {
            let mut total = QRatFun::zero();
            for k in divisors(n as u64) {
                let k = k as usize;
                let j = n / k;
                let num = airr.coeff(j).adams(k).scale(&ratio(1, k as i64));
                let den = &QPoly::q_pow_minus_one(k) * &s.pow((n as u32) * (m - 1));
                total = &total + &QRatFun::new(num, den)?;
            }
            total.limit_at_one()
        })
        .collect()
}

/// `J_n / n` as rationals, for comparison with [`limit_transform`].
pub fn weighted_subgroup_counts(m: u32, nmax: usize) -> Result<Vec<Rat>> {
    Ok(subgroup_counts(m, nmax)?
        .into_iter()
        .map(|r| Rat::new(r.j_n, Int::from(r.n)))
        .collect())
}
