//! Plethystic calculus on truncated series in `(q, t)`.
//!
//! With Adams operations `ψ_n(q^i t^j) = q^{ni} t^{nj}`, set
//! `Ψ = Σ ψ_n / n` and `Ψ⁻¹ = Σ μ(n) ψ_n / n`. Then
//! `Exp = exp ∘ Ψ`, `Log = Ψ⁻¹ ∘ log`, and `Pow(f, g) = Exp(g Log f)`.
//! Only the first `order` Adams operations matter at a given truncation.

use num_traits::{One, Zero};

use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::numtheory::{divisors, mobius};
use crate::scalar::Scalar;
use crate::series::{Coeff, TSeries};

/// Truncation settings shared by a family of plethystic computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlethContext {
    pub order: usize,
    pub m: u32,
}

impl PlethContext {
    pub fn new(order: usize, m: u32) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidArgument(
                "truncation order must be at least 1".into(),
            ));
        }
        if m < 1 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        Ok(PlethContext { order, m })
    }
}

fn adams_sum<C: Coeff>(f: &TSeries<C>, weight: impl Fn(usize) -> C::Scalar) -> Result<TSeries<C>> {
    if !f.has_zero_constant() {
        return Err(Error::NonzeroConstant);
    }
    let mut out = TSeries::zero(f.order());
    for n in 1..=f.order() {
        let w = weight(n);
        if w.is_zero() {
            continue;
        }
        out = &out + &f.adams(n).scale(&w);
    }
    Ok(out)
}

/// `Ψ(f) = Σ_{n ≥ 1} ψ_n(f) / n`.
pub fn psi<C: Coeff>(f: &TSeries<C>) -> Result<TSeries<C>> {
    adams_sum(f, |n| C::Scalar::one() / C::Scalar::from_int(n as i64))
}

/// `Ψ⁻¹(f) = Σ_{n ≥ 1} μ(n) ψ_n(f) / n`.
pub fn psi_inv<C: Coeff>(f: &TSeries<C>) -> Result<TSeries<C>> {
    adams_sum(f, |n| {
        C::Scalar::from_int(mobius(n as u64)) / C::Scalar::from_int(n as i64)
    })
}

/// Plethystic exponential; `Exp(q^i t^d) = (1 - q^i t^d)^{-1}`.
pub fn pleth_exp<C: Coeff>(f: &TSeries<C>) -> Result<TSeries<C>> {
    psi(f)?.exp()
}

/// Plethystic logarithm, inverse to [`pleth_exp`].
pub fn pleth_log<C: Coeff>(g: &TSeries<C>) -> Result<TSeries<C>> {
    psi_inv(&g.log()?)
}

/// Ordinary power `f^g = exp(g log f)` with a scalar exponent from the
/// coefficient ring.
pub fn pow_scalar<C: Coeff>(f: &TSeries<C>, g: &C) -> Result<TSeries<C>> {
    f.log()?.mul_coeff(g).exp()
}

/// Plethystic power `Pow(f, g) = Exp(g Log f)`.
pub fn pow<C: Coeff>(f: &TSeries<C>, g: &C) -> Result<TSeries<C>> {
    pleth_exp(&pleth_log(f)?.mul_coeff(g))
}

/// `Φ_n(q) = (1/n) Σ_{d | n} μ(n/d) (q^d - 1)`, the number of monic
/// irreducible degree-`n` polynomials over `F_q` with nonzero constant term.
pub fn phi_count<F: Scalar>(n: usize) -> Poly<F> {
    assert!(n >= 1, "phi_count needs n >= 1");
    let sum = divisors(n as u64).into_iter().fold(Poly::zero(), |acc, d| {
        let mu = mobius(n as u64 / d);
        if mu == 0 {
            acc
        } else {
            &acc + &Poly::q_pow_minus_one(d as usize).scale(&F::from_int(mu))
        }
    });
    sum.scale(&(F::one() / F::from_int(n as i64)))
}

/// `Π_{d=1}^{max_d} ψ_d(f)^{-Φ_d}`, which equals `Pow(f, 1 - q)` once
/// `max_d` reaches the truncation order.
pub fn pow_product<C>(f: &TSeries<C>, max_d: usize) -> Result<TSeries<C>>
where
    C: Coeff + From<Poly<<C as Coeff>::Scalar>>,
{
    if !f.has_unit_constant() {
        return Err(Error::ConstantNotOne);
    }
    let mut out = TSeries::one(f.order());
    for d in 1..=max_d.min(f.order()) {
        let exponent: C = C::from(-phi_count::<C::Scalar>(d));
        out = &out * &pow_scalar(&f.adams(d), &exponent)?;
    }
    Ok(out)
}

/// True if every coefficient of `f` lies in `Q_{≥0}[q - 1]`.
pub fn nonnegative_in_s(f: &TSeries<Poly<crate::Rat>>) -> bool {
    use num_traits::Signed;
    f.coeffs()
        .iter()
        .all(|c| c.expand_in_s().iter().all(|x| !x.is_negative()))
}

/// Empirical variant of the positivity statement with exponent `q - 1`
/// instead of `1 - q`: reports whether `Pow(f, q - 1)` stays in
/// `Q_{≥0}[q - 1][[t]]` for an `f` that already does. Not a theorem.
pub fn pow_q_minus_one_stays_nonnegative(f: &TSeries<Poly<crate::Rat>>) -> Result<bool> {
    let g = Poly::from_ints(&[-1, 1]);
    Ok(nonnegative_in_s(&pow(f, &g)?))
}

/// Helper: `Σ_{d | n} d Φ_d(q)`.
pub fn weighted_phi_sum<F: Scalar>(n: usize) -> Poly<F> {
    divisors(n as u64).into_iter().fold(Poly::zero(), |acc, d| {
        &acc + &phi_count::<F>(d as usize).scale(&F::from_int(d as i64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio, QPoly, QSeries, Rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn qs(order: usize, cs: &[&[i64]]) -> QSeries {
        QSeries::from_prefix(order, cs.iter().map(|c| p(c)).collect())
    }

    fn t(order: usize) -> QSeries {
        QSeries::monomial(QPoly::one(), 1, order)
    }

    #[test]
    fn psi_of_t() {
        let s = psi(&t(4)).unwrap();
        let expected: Vec<QPoly> = [0, 1, 2, 3, 4]
            .iter()
            .map(|&n| {
                if n == 0 {
                    QPoly::zero()
                } else {
                    QPoly::constant(ratio(1, n))
                }
            })
            .collect();
        assert_eq!(s, QSeries::new(expected));
    }

    #[test]
    fn psi_inverse_pairs() {
        let f = qs(5, &[&[], &[0, 1], &[1]]);
        assert_eq!(psi_inv(&psi(&f).unwrap()).unwrap(), f);
        let g = QSeries::new(vec![
            QPoly::zero(),
            QPoly::one(),
            QPoly::constant(ratio(1, 2)),
        ]);
        assert_eq!(psi_inv(&g).unwrap(), t(2));
        assert_eq!(psi(&QSeries::one(3)), Err(Error::NonzeroConstant));
    }

    #[test]
    fn exp_of_monomials() {
        assert_eq!(
            pleth_exp(&t(5)).unwrap(),
            QSeries::from_fn(5, |_| QPoly::one())
        );
        let qt = qs(3, &[&[], &[0, 1]]);
        assert_eq!(
            pleth_exp(&qt).unwrap(),
            qs(3, &[&[1], &[0, 1], &[0, 0, 1], &[0, 0, 0, 1]])
        );
        let f = qs(6, &[&[], &[0, 1], &[1, 0, 1]]);
        assert_eq!(pleth_log(&pleth_exp(&f).unwrap()).unwrap(), f);
        assert_eq!(pleth_log(&t(3)), Err(Error::ConstantNotOne));
    }

    #[test]
    fn scalar_powers() {
        let one_minus_t = qs(6, &[&[1], &[-1]]);
        assert_eq!(
            pow_scalar(&one_minus_t, &p(&[-1])).unwrap(),
            QSeries::from_fn(6, |_| QPoly::one())
        );
        let f = qs(5, &[&[1], &[1, 2], &[0, -1]]);
        assert_eq!(pow_scalar(&f, &p(&[2])).unwrap(), &f * &f);
        // exp((q-1) Σ t^n / n): t^1 coefficient q - 1, t^2 coefficient (q-1)q/2
        let r = pow_scalar(&one_minus_t, &p(&[1, -1])).unwrap();
        assert_eq!(r.coeff(1), &p(&[-1, 1]));
        assert_eq!(
            r.coeff(2),
            &QPoly::from_coeffs(vec![rat(0), ratio(-1, 2), ratio(1, 2)])
        );
    }

    #[test]
    fn plethystic_powers() {
        let f = qs(5, &[&[1], &[3, 1], &[0, 0, 2]]);
        assert_eq!(pow(&f, &QPoly::one()).unwrap(), f);
        let geo = QSeries::from_fn(4, |_| QPoly::one());
        let expected = QSeries::from_fn(4, |d| QPoly::monomial(rat(1), d));
        assert_eq!(pow(&geo, &p(&[0, 1])).unwrap(), expected);
    }

    #[test]
    fn phi_counts() {
        assert_eq!(phi_count::<Rat>(1), p(&[-1, 1]));
        assert_eq!(
            phi_count::<Rat>(2),
            QPoly::from_coeffs(vec![rat(0), ratio(-1, 2), ratio(1, 2)])
        );
        assert_eq!(
            phi_count::<Rat>(3),
            QPoly::from_coeffs(vec![rat(0), ratio(-1, 3), rat(0), ratio(1, 3)])
        );
        for n in 1..=12 {
            assert_eq!(weighted_phi_sum::<Rat>(n), QPoly::q_pow_minus_one(n));
            let s = phi_count::<Rat>(n).scale(&rat(n as i64)).expand_in_s();
            assert!(crate::arith::all_natural(&s), "n = {n}: {s:?}");
        }
        // counts of irreducible polynomials over F_2 with nonzero constant
        let at2: Vec<Rat> = (1..=6).map(|n| phi_count::<Rat>(n).eval(&rat(2))).collect();
        assert_eq!(at2, [1, 1, 2, 3, 6, 9].map(rat));
    }

    #[test]
    fn product_formula_small_cases() {
        assert_eq!(pow_product(&QSeries::one(5), 5).unwrap(), QSeries::one(5));
        let r = pow_product(&qs(5, &[&[1], &[-1]]), 5).unwrap();
        assert_eq!(r.coeff(1), &p(&[-1, 1]));
        assert_eq!(pow_product(&t(3), 3), Err(Error::ConstantNotOne));
    }

    fn zero_const(order: usize) -> impl Strategy<Value = QSeries> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, 0..3), order).prop_map(|cs| {
            let mut v = vec![QPoly::zero()];
            v.extend(cs.iter().map(|c| QPoly::from_ints(c)));
            QSeries::new(v)
        })
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-3i64..=3, 0..3).prop_map(|c| QPoly::from_ints(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn exp_log_inverse(f in zero_const(6)) {
            let e = pleth_exp(&f).unwrap();
            prop_assert_eq!(pleth_log(&e).unwrap(), f.clone());
            let g = &QSeries::one(6) + &f;
            prop_assert_eq!(pleth_exp(&pleth_log(&g).unwrap()).unwrap(), g);
        }

        #[test]
        fn exp_is_additive(f in zero_const(5), g in zero_const(5)) {
            let lhs = pleth_exp(&(&f + &g)).unwrap();
            let rhs = &pleth_exp(&f).unwrap() * &pleth_exp(&g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pow_is_additive_in_exponent(f in zero_const(5), a in small_poly(), b in small_poly()) {
            let u = &QSeries::one(5) + &f;
            let lhs = pow(&u, &(&a + &b)).unwrap();
            let rhs = &pow(&u, &a).unwrap() * &pow(&u, &b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_formula(f in zero_const(5)) {
            let u = &QSeries::one(5) + &f;
            prop_assert_eq!(pow_product(&u, 5).unwrap(), pow(&u, &p(&[1, -1])).unwrap());
        }
    }
}
