//! Truncated formal power series over an exact coefficient ring.
//!
//! A series of order N stores ordinary coefficients c_0..c_N of
//! Σ c_n t^n; exponential-generating-function values are read off through
//! [`Series::egf`], which multiplies by n!. Binary operations align operands
//! by truncating the longer one to the shorter order first. Multiplication
//! is schoolbook O(N^2): orders in this engine stay small and exactness is
//! the point.

use crate::error::{Error, Result};
use crate::ring::{factorial, Coeff, Rat};
use crate::specnum::dff;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Truncated power series with coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct Series<R: Coeff> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Series<R> {
    /// Wrap explicit ordinary coefficients c_0..c_N. Must be nonempty.
    pub fn from_coeffs(coeffs: Vec<R>) -> Series<R> {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        Series { coeffs }
    }

    pub fn zeros(order: usize) -> Series<R> {
        Series {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Series<R> {
        Series::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Series<R> {
        let mut s = Series::zeros(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial c * t^k, zero when k exceeds the order.
    pub fn monomial(c: R, k: usize, order: usize) -> Series<R> {
        let mut s = Series::zeros(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity series t.
    pub fn t(order: usize) -> Series<R> {
        Series::monomial(R::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// EGF value at index n: n! * c_n.
    pub fn egf(&self, n: usize) -> R {
        self.coeffs[n].mul(&R::from_rat(&factorial(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Series<R> {
        let order = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn aligned(&self, other: &Series<R>) -> (Series<R>, Series<R>) {
        let n = self.order().min(other.order());
        (self.truncate(n), other.truncate(n))
    }

    /// Coefficientwise scale by a ring element.
    pub fn scale(&self, c: &R) -> Series<R> {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Coefficientwise scale by a rational.
    pub fn scale_rat(&self, c: &Rat) -> Series<R> {
        self.scale(&R::from_rat(c))
    }

    /// Argument scaling t -> c t, i.e. c_n -> c_n * c^n.
    pub fn scale_arg(&self, c: &Rat) -> Series<R> {
        let mut pow = Rat::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul(&R::from_rat(&pow)));
            pow = &pow * c;
        }
        Series { coeffs }
    }

    /// Quotient with an invertible denominator constant term.
    pub fn div(&self, den: &Series<R>) -> Result<Series<R>> {
        let (num, den) = self.aligned(den);
        let inv0 = den.coeffs[0]
            .invert()
            .ok_or(Error::NonInvertibleConstantTerm)?;
        let n = num.order();
        let mut q: Vec<R> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = num.coeffs[i].clone();
            for j in 1..=i {
                acc = acc.sub(&den.coeffs[j].mul(&q[i - j]));
            }
            q.push(acc.mul(&inv0));
        }
        Ok(Series { coeffs: q })
    }

    /// Positive integer power by repeated multiplication; exponent 0 gives 1.
    pub fn pow(&self, exp: u32) -> Series<R> {
        let mut acc = Series::one(self.order());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Composition self(inner); the inner series must have zero constant term.
    pub fn compose(&self, inner: &Series<R>) -> Result<Series<R>> {
        let (outer, inner) = self.aligned(inner);
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerConstantNotZero);
        }
        let n = outer.order();
        let mut acc = Series::constant(outer.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = &(&acc * &inner) + &Series::constant(outer.coeffs[i].clone(), n);
        }
        Ok(acc)
    }

    /// Slot substitution t -> t^p: result has c_{p n} = a_n, order preserved.
    pub fn substitute_power(&self, p: usize) -> Series<R> {
        assert!(p >= 1, "substitution stride must be positive");
        let order = self.order();
        let mut out = Series::zeros(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            match i.checked_mul(p) {
                Some(k) if k <= order => out.coeffs[k] = a.clone(),
                _ => break,
            }
        }
        out
    }

    /// Formal derivative; order drops by one (a constant stays order 0).
    pub fn derivative(&self) -> Series<R> {
        if self.order() == 0 {
            return Series::zeros(0);
        }
        let coeffs = (1..=self.order())
            .map(|n| self.coeffs[n].mul(&R::from_rat(&Rat::from_int(n as i64))))
            .collect();
        Series { coeffs }
    }

    /// Formal antiderivative with zero constant; order rises by one.
    pub fn integrate(&self) -> Series<R> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(R::zero());
        for (n, a) in self.coeffs.iter().enumerate() {
            let inv = Rat::from_int(n as i64 + 1).inv().expect("n+1 > 0");
            coeffs.push(a.mul(&R::from_rat(&inv)));
        }
        Series { coeffs }
    }

    /// Multiply by t, preserving order (the top coefficient falls off).
    pub fn mul_by_t(&self) -> Series<R> {
        let order = self.order();
        let mut out = Series::zeros(order);
        for i in 1..=order {
            out.coeffs[i] = self.coeffs[i - 1].clone();
        }
        out
    }

    /// Divide by t exactly; requires zero constant term. Order drops by one.
    pub fn shift_down(&self) -> Result<Series<R>> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleConstantTerm);
        }
        if self.order() == 0 {
            return Ok(Series::zeros(0));
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Map coefficients into another ring.
    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl Series<Rat> {
    /// Lift a rational series into any coefficient ring.
    pub fn lift<R: Coeff>(&self) -> Series<R> {
        self.map(|c| R::from_rat(c))
    }
}

impl<R: Coeff> Add for &Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: &Series<R>) -> Series<R> {
        let (a, b) = self.aligned(rhs);
        Series {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x.add(y))
                .collect(),
        }
    }
}

impl<R: Coeff> Sub for &Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: &Series<R>) -> Series<R> {
        let (a, b) = self.aligned(rhs);
        Series {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x.sub(y))
                .collect(),
        }
    }
}

impl<R: Coeff> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: &Series<R>) -> Series<R> {
        let (a, b) = self.aligned(rhs);
        let n = a.order();
        let mut out = Series::<R>::zeros(n);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if y.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&x.mul(y));
            }
        }
        out
    }
}

impl<R: Coeff> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
}

impl<R: Coeff> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Degenerate exponential e_rho^x(t) = (1 + rho t)^{x/rho}: the series whose
/// EGF coefficients are the degenerate falling factorials (x)_{n,rho}.
/// At rho = 0 this is the classical e^{x t}.
pub fn deg_exp<R: Coeff>(xval: &R, rho: &Rat, order: usize) -> Series<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let inv_fact = factorial(n).inv().expect("factorial is nonzero");
        coeffs.push(dff(xval, n, rho).mul(&R::from_rat(&inv_fact)));
    }
    Series::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::TriPoly;
    use crate::specnum::deg_log;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn exp_t(order: usize) -> Series<Rat> {
        deg_exp(&Rat::one(), &Rat::zero(), order)
    }

    #[test]
    fn square_of_t_plus_t2() {
        let s = &Series::t(4) + &Series::monomial(Rat::one(), 2, 4);
        let sq = s.pow(2);
        let expect = vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(2, 1), rat(1, 1)];
        assert_eq!(sq.coeffs(), &expect[..]);
    }

    #[test]
    fn genocchi_by_division() {
        // 2t / (e^t + 1) at order 6, read as EGF values.
        let num = Series::monomial(rat(2, 1), 1, 6);
        let den = &exp_t(6) + &Series::one(6);
        let g = num.div(&den).unwrap();
        let egf: Vec<Rat> = (0..=6).map(|n| g.egf(n)).collect();
        let expect: Vec<Rat> = [0, 1, -1, 0, 1, 0, -3]
            .iter()
            .map(|&v| Rat::from_int(v))
            .collect();
        assert_eq!(egf, expect);
    }

    #[test]
    fn division_requires_invertible_constant() {
        let num = Series::<Rat>::one(4);
        let den = Series::t(4);
        assert_eq!(num.div(&den), Err(Error::NonInvertibleConstantTerm));
    }

    #[test]
    fn division_inverts_multiplication_exactly() {
        let a = Series::from_coeffs(vec![rat(1, 3), rat(-2, 1), rat(0, 1), rat(5, 7), rat(1, 2)]);
        let b = Series::from_coeffs(vec![rat(2, 1), rat(1, 5), rat(-1, 1), rat(0, 1), rat(3, 4)]);
        let q = (&a * &b).div(&b).unwrap();
        assert_eq!(q, a);
    }

    #[test]
    fn geometric_composed_with_half_t() {
        // (1/(1-t)) o (t/2) = 1 + t/2 + t^2/4 + t^3/8
        let geo = Series::from_coeffs(vec![Rat::one(); 4]);
        let half_t = Series::monomial(rat(1, 2), 1, 3);
        let c = geo.compose(&half_t).unwrap();
        assert_eq!(
            c.coeffs(),
            &[rat(1, 1), rat(1, 2), rat(1, 4), rat(1, 8)][..]
        );
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let outer = exp_t(4);
        let inner = Series::one(4);
        assert_eq!(outer.compose(&inner), Err(Error::InnerConstantNotZero));
    }

    #[test]
    fn inverse_pair_compositions() {
        // log_rho undoes e_rho in both composition orders.
        for rho in [rat(0, 1), rat(1, 3), rat(-1, 1), rat(7, 2)] {
            let n = 12;
            let e = deg_exp(&Rat::one(), &rho, n);
            let l = deg_log(&rho, n);
            // e_rho(log_rho(1+t)) = 1 + t
            let lhs = e.compose(&l).unwrap();
            let expect = &Series::one(n) + &Series::t(n);
            assert_eq!(lhs, expect, "rho = {rho}");
            // log_rho(e_rho(t)) = t
            let em1 = &e - &Series::one(n);
            assert_eq!(l.compose(&em1).unwrap(), Series::t(n), "rho = {rho}");
        }
    }

    #[test]
    fn substitute_power_spreads_slots() {
        let s = exp_t(8);
        let s2 = s.substitute_power(2);
        for m in 0..=8usize {
            if m % 2 == 1 {
                assert!(s2.coeff(m).is_zero());
            } else {
                assert_eq!(s2.coeff(m), s.coeff(m / 2));
            }
        }
    }

    #[test]
    fn derivative_then_integrate_round_trips() {
        let s = Series::from_coeffs(vec![rat(3, 1), rat(1, 2), rat(-4, 3), rat(7, 5)]);
        let back = s.derivative().integrate();
        // Integration pins the constant term to zero; the rest comes back.
        let expect = &s - &Series::constant(rat(3, 1), 3);
        assert_eq!(back, expect);
    }

    #[test]
    fn deg_exp_egf_is_degenerate_falling_factorial() {
        let x = rat(5, 1);
        let rho = rat(1, 2);
        let s = deg_exp(&x, &rho, 4);
        // egf(2) = x (x - rho)
        assert_eq!(s.egf(2), &x * &(&x - &rho));
        // egf(0) = 1
        assert_eq!(s.egf(0), Rat::one());
    }

    #[test]
    fn deg_exp_multiplicative_in_x() {
        // e_rho^x(t) e_rho^y(t) = e_rho^{x+y}(t)
        let rho = rat(-2, 5);
        let (x, y) = (rat(3, 7), rat(-1, 2));
        let lhs = &deg_exp(&x, &rho, 10) * &deg_exp(&y, &rho, 10);
        assert_eq!(lhs, deg_exp(&(&x + &y), &rho, 10));
    }

    #[test]
    fn lift_into_tripoly_commutes_with_mul() {
        let a = Series::from_coeffs(vec![rat(1, 2), rat(3, 1), rat(-2, 7)]);
        let b = Series::from_coeffs(vec![rat(2, 1), rat(0, 1), rat(5, 3)]);
        let lifted = &a.lift::<TriPoly>() * &b.lift::<TriPoly>();
        assert_eq!(lifted, (&a * &b).lift::<TriPoly>());
    }

    fn arb_series() -> impl Strategy<Value = Series<Rat>> {
        proptest::collection::vec((-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rat::new(n, d)), 9)
            .prop_map(Series::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn div_round_trip(a in arb_series(), mut b in arb_series()) {
            prop_assume!(!b.coeff(0).is_zero());
            let q = (&a * &b).div(&b).unwrap();
            prop_assert_eq!(q, a);
            b = b.truncate(8);
            prop_assert_eq!(b.div(&b).unwrap(), Series::one(8));
        }

        #[test]
        fn compose_is_associative(mut a in arb_series(), mut b in arb_series(), c in arb_series()) {
            a = a.truncate(6);
            b = b.truncate(6);
            let c = c.truncate(6);
            // force zero constants on the inner layers
            let b = &b - &Series::constant(b.coeff(0).clone(), 6);
            let a2 = &a - &Series::constant(a.coeff(0).clone(), 6);
            let lhs = c.compose(&a2).unwrap().compose(&b).unwrap();
            let rhs = c.compose(&a2.compose(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
