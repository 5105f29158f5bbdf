//! The special-number kernel.
//!
//! Degenerate falling factorials, the degenerate logarithm, modified
//! degenerate polyexponentials, polylogarithms, degenerate Stirling numbers
//! of both kinds, Eulerian numbers and polynomials, the closed geometric
//! power sum they produce, degenerate Bernoulli polynomials of the second
//! kind, r-Whitney numbers of the first kind, and the B-coefficients that
//! expand the polyexponential-of-degenerate-log compound.
//!
//! Conventions pinned here and relied on everywhere else:
//! - Eulerian numbers satisfy Σ_{n≥0} n^m z^n = A_m(z)/(1-z)^{m+1} with
//!   0^0 = 1, so A_0(z) = 1, A_1(z) = z, A_2(z) = z + z².
//! - bcoef at k = 1 is B(0) = (1-u)L and B(m>0) = 0, the convention forced
//!   by Ei_{1,rho}(log_rho(1+w)) = w.

use crate::error::{Error, Result};
use crate::ring::{factorial, rat_binomial, Coeff, Rat};
use crate::series::{deg_exp, Series};
use num::BigInt;
use num::One;

/// Degenerate falling factorial (x)_{n,rho} = x(x-rho)(x-2rho)...(x-(n-1)rho),
/// with the empty product 1 at n = 0. At rho = 0 this is x^n.
pub fn dff<R: Coeff>(xval: &R, n: usize, rho: &Rat) -> R {
    let mut acc = R::one();
    for i in 0..n {
        let shift = R::from_rat(&(rho * &Rat::from_int(i as i64)));
        acc = acc.mul(&xval.sub(&shift));
    }
    acc
}

/// Degenerate logarithm log_rho(1+t) = ((1+t)^rho - 1)/rho, the compositional
/// inverse of the degenerate exponential; rho = 0 gives classical log(1+t).
pub fn deg_log(rho: &Rat, order: usize) -> Series<Rat> {
    let mut coeffs = vec![Rat::zero()];
    // c_n = (rho-1)(rho-2)...(rho-(n-1)) / n!, uniform in rho.
    let mut prod = Rat::one();
    for n in 1..=order {
        if n > 1 {
            prod = &prod * &(rho - &Rat::from_int(n as i64 - 1));
        }
        coeffs.push(&prod * &factorial(n).inv().expect("n! is nonzero"));
    }
    Series::from_coeffs(coeffs)
}

/// (1 + t)^beta as a series: c_n = binom(beta, n).
pub fn binomial_series(beta: &Rat, order: usize) -> Series<Rat> {
    Series::from_coeffs((0..=order).map(|n| rat_binomial(beta, n)).collect())
}

/// Modified degenerate polyexponential Ei_{k,rho}:
/// c_n = (1)_{n,rho} / (n^k (n-1)!) for n >= 1. rho = 0 gives the classical
/// polyexponential Ei_k; negative k multiplies by n^{|k|}.
pub fn polyexp(k: i64, rho: &Rat, order: usize) -> Series<Rat> {
    let mut coeffs = vec![Rat::zero()];
    for n in 1..=order {
        let num = dff(&Rat::one(), n, rho);
        let den = &Rat::from_int(n as i64).pow(k) * &factorial(n - 1);
        coeffs.push(&num * &den.inv().expect("n^k (n-1)! is nonzero"));
    }
    Series::from_coeffs(coeffs)
}

/// Polylogarithm Li_k: c_n = 1/n^k for n >= 1.
pub fn polylog(k: i64, order: usize) -> Series<Rat> {
    let mut coeffs = vec![Rat::zero()];
    for n in 1..=order {
        coeffs.push(Rat::from_int(n as i64).pow(-k));
    }
    Series::from_coeffs(coeffs)
}

/// Which degenerate Stirling triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// EGF coefficients of (log_rho(1+t))^j / j!.
    First,
    /// EGF coefficients of (e_rho(t) - 1)^j / j!.
    Second,
}

/// Degenerate Stirling number by series extraction from Eq-defining EGFs.
/// At rho = 0 these are the classical signed S1 and S2.
pub fn deg_stirling(kind: StirlingKind, n: usize, j: usize, rho: &Rat) -> Result<Rat> {
    if j > n {
        return Err(Error::IndexOutOfRange { n, j });
    }
    let base = match kind {
        StirlingKind::First => deg_log(rho, n),
        StirlingKind::Second => &deg_exp(&Rat::one(), rho, n) - &Series::one(n),
    };
    let series = base
        .pow(j as u32)
        .scale_rat(&factorial(j).inv().expect("j! is nonzero"));
    Ok(series.egf(n))
}

/// Triangle of Eulerian numbers A(n,k), rows 0..=n_max.
///
/// Pinned by the generating identity Σ_{p>=0} p^n z^p = A_n(z)/(1-z)^{n+1}
/// (0^0 = 1); rows satisfy A(n,k) = (n-k+1)A(n-1,k-1) + kA(n-1,k), row sums
/// are n! for n >= 1.
pub struct EulerianTable {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// A(n, k); zero outside 0 <= k <= n.
    pub fn entry(&self, n: usize, k: usize) -> Rat {
        match self.rows.get(n).and_then(|row| row.get(k)) {
            Some(v) => Rat::from_bigint(v.clone()),
            None => Rat::zero(),
        }
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// A_n(z) = Σ_k A(n,k) z^k.
    pub fn poly(&self, n: usize, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut pow = Rat::one();
        for k in 0..=n {
            acc = &acc + &(&self.entry(n, k) * &pow);
            pow = &pow * z;
        }
        acc
    }
}

/// Build the Eulerian triangle up to row n_max.
pub fn eulerian_table(n_max: usize) -> EulerianTable {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = BigInt::from(0);
            if k >= 1 && k - 1 < prev.len() {
                v += BigInt::from((n - k + 1) as u64) * &prev[k - 1];
            }
            if k < prev.len() {
                v += BigInt::from(k as u64) * &prev[k];
            }
            row.push(v);
        }
        rows.push(row);
    }
    EulerianTable { rows }
}

/// Eulerian polynomial value A_m(z).
pub fn eulerian_poly(m: usize, z: &Rat) -> Rat {
    eulerian_table(m).poly(m, z)
}

/// Closed form of the arithmetic-geometric power sum Σ_{n>=0} n^m z^n:
/// A_m(z)/(1-z)^{m+1}. This finite rational value replaces every infinite
/// p-sum in the explicit formulas. Pole at z = 1.
pub fn geom_power_sum(z: &Rat, m: usize) -> Result<Rat> {
    let one_minus = &Rat::one() - z;
    if one_minus.is_zero() {
        return Err(Error::PoleAtOne);
    }
    Ok(&eulerian_poly(m, z) * &one_minus.pow(-(m as i64 + 1)))
}

/// Degenerate Bernoulli polynomial of the second kind b_{n,rho}(x):
/// EGF coefficient n of t(1+t)^x / log_rho(1+t).
pub fn deg_bernoulli2(n: usize, rho: &Rat, xval: &Rat) -> Rat {
    // Divide out one factor of t: (1+t)^x / (log_rho(1+t)/t).
    let num = binomial_series(xval, n);
    let den = deg_log(rho, n + 1)
        .shift_down()
        .expect("deg_log has zero constant term");
    num.div(&den)
        .expect("log_rho(1+t)/t has constant term 1")
        .egf(n)
}

/// One row of r-Whitney numbers of the first kind.
#[derive(Debug, Clone, PartialEq)]
pub struct WhitneyRow {
    pub m: Rat,
    pub r: Rat,
    pub n: usize,
    /// coeffs[j] = w_{m,r}(n, j) for j = 0..=n.
    pub coeffs: Vec<Rat>,
}

/// Expand Π_{i=0}^{n-1} (v - (r + i m)) as a dense polynomial in v.
fn expand_root_product(m: &Rat, r: &Rat, n: usize) -> Vec<Rat> {
    let mut coeffs = vec![Rat::one()];
    for i in 0..n {
        let root = r + &(m * &Rat::from_int(i as i64));
        let mut next = vec![Rat::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = &next[j + 1] + c;
            next[j] = &next[j] - &(&root * c);
        }
        coeffs = next;
    }
    coeffs
}

/// r-Whitney numbers of the first kind: the row w_{m,r}(n, ·) defined by
/// m^n (x)_n = Σ_j w_{m,r}(n,j) (mx + r)^j. Substituting v = mx + r turns the
/// left side into Π_{i=0}^{n-1}(v - (r + i m)), which is what gets expanded.
pub fn whitney_first(m: &Rat, r: &Rat, n: usize) -> Result<WhitneyRow> {
    if m.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    Ok(WhitneyRow {
        m: m.clone(),
        r: r.clone(),
        n,
        coeffs: expand_root_product(m, r, n),
    })
}

/// The r = 0 specialization w̃_m(n, ·), defined for every m (including 0) by
/// (x)_{n,m} = Σ_j w̃_m(n,j) x^j; equals m^{n-j} s(n,j) with s the signed
/// Stirling numbers of the first kind (so the m = 1 row is s(n, ·) itself and
/// the m = 0 row is the x^n expansion).
pub fn whitney_tilde(m: &Rat, n: usize) -> WhitneyRow {
    WhitneyRow {
        m: m.clone(),
        r: Rat::zero(),
        n,
        coeffs: expand_root_product(m, &Rat::zero(), n),
    }
}

/// total! / (parts_0! parts_1! ...) — parts must sum to total.
pub(crate) fn multinomial(total: usize, parts: &[usize]) -> Rat {
    debug_assert_eq!(parts.iter().sum::<usize>(), total);
    let mut acc = factorial(total);
    for &p in parts {
        acc = &acc * &factorial(p).inv().expect("p! is nonzero");
    }
    acc
}

/// Visit every ordered composition of `total` into `parts` nonnegative parts.
pub(crate) fn for_each_composition(
    total: usize,
    parts: usize,
    f: &mut impl FnMut(&[usize]),
) {
    fn rec(remaining: usize, slots: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if slots == 0 {
            if remaining == 0 {
                f(buf);
            }
            return;
        }
        if slots == 1 {
            buf.push(remaining);
            f(buf);
            buf.pop();
            return;
        }
        for v in 0..=remaining {
            buf.push(v);
            rec(remaining - v, slots - 1, buf, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(parts);
    rec(total, parts, &mut buf, f);
}

/// B-coefficient of the compound Ei_{k,rho}(log_rho(1 + (1-u) L t)):
/// the EGF expansion of that compound is t · Σ_m B(m) t^m / m!.
///
/// For k = 1 the compound is exactly (1-u)L t, so B(0) = (1-u)L and all
/// higher B vanish. For k >= 2, B(m) = ((1-u)L)^{m+1} times the sum over
/// compositions m_1 + ... + m_{k-1} = m of the multinomial coefficient times
/// Π_i b_{m_i,rho}(rho-1) / (m_1 + ... + m_i + 1).
pub fn bcoef(k: i64, m: usize, u: &Rat, ln_ab: &Rat, rho: &Rat) -> Result<Rat> {
    if k < 1 {
        return Err(Error::Precondition(format!(
            "bcoef requires k >= 1, got {k}"
        )));
    }
    let scale = &(&Rat::one() - u) * ln_ab;
    if k == 1 {
        return Ok(if m == 0 { scale } else { Rat::zero() });
    }
    let x_shift = rho - &Rat::one();
    let bvals: Vec<Rat> = (0..=m).map(|i| deg_bernoulli2(i, rho, &x_shift)).collect();
    let mut sum = Rat::zero();
    for_each_composition(m, (k - 1) as usize, &mut |parts| {
        let mut term = multinomial(m, parts);
        let mut prefix = 0usize;
        for &p in parts {
            prefix += p;
            let denom = Rat::from_int(prefix as i64 + 1);
            term = &term * &(&bvals[p] * &denom.inv().expect("prefix+1 > 0"));
        }
        sum = &sum + &term;
    });
    Ok(&scale.pow(m as i64 + 1) * &sum)
}
