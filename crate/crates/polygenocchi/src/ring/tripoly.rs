//! Sparse polynomials in three variables x, y, z over the rationals.
//!
//! Terms live in a BTreeMap keyed by the exponent triple [i, j, l] for
//! x^i y^j z^l, so iteration order is deterministic. Invariant: no zero
//! coefficient is ever stored; the zero polynomial is the empty map.

use crate::ring::{Coeff, Rat};
use std::collections::BTreeMap;
use std::fmt;

/// Variable selector for derivatives and generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
}

/// Sparse trivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    terms: BTreeMap<[u32; 3], Rat>,
}

impl TriPoly {
    pub fn zero() -> TriPoly {
        TriPoly::default()
    }

    pub fn one() -> TriPoly {
        TriPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> TriPoly {
        let mut p = TriPoly::zero();
        p.add_term([0, 0, 0], c);
        p
    }

    /// The generator x, y or z.
    pub fn var(v: Var) -> TriPoly {
        let expt = match v {
            Var::X => [1, 0, 0],
            Var::Y => [0, 1, 0],
            Var::Z => [0, 0, 1],
        };
        let mut p = TriPoly::zero();
        p.add_term(expt, Rat::one());
        p
    }

    /// Add `c * x^i y^j z^l`, keeping the no-zero-terms invariant.
    pub fn add_term(&mut self, expt: [u32; 3], c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expt) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, expt: &[u32; 3]) -> Rat {
        self.terms.get(expt).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in exponent-lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&[u32; 3], &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e[0] + e[1] + e[2])
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn neg(&self) -> TriPoly {
        let mut out = TriPoly::zero();
        for (e, c) in self.iter() {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn mul(&self, other: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ea, ca) in self.iter() {
            for (eb, cb) in other.iter() {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> TriPoly {
        let mut out = TriPoly::zero();
        for (e, t) in self.iter() {
            out.add_term(*e, t * c);
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rat, y: &Rat, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in self.iter() {
            let term = c
                * &x.pow(e[0] as i64)
                * &y.pow(e[1] as i64)
                * &z.pow(e[2] as i64);
            acc = &acc + &term;
        }
        acc
    }

    /// Partial derivative with respect to one variable.
    pub fn derivative(&self, v: Var) -> TriPoly {
        let idx = match v {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        };
        let mut out = TriPoly::zero();
        for (e, c) in self.iter() {
            if e[idx] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[idx] -= 1;
            out.add_term(ne, c * &Rat::from_int(e[idx] as i64));
        }
        out
    }

    /// Structural invariants: no stored zero coefficient.
    pub fn check_invariants(&self) -> Result<(), &'static str> {
        if self.terms.values().any(|c| c.is_zero()) {
            return Err("zero coefficient stored");
        }
        Ok(())
    }

    /// Terms sorted by total degree, then lexicographic exponent.
    pub fn sorted_terms(&self) -> Vec<([u32; 3], Rat)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by_key(|(e, _)| (e[0] + e[1] + e[2], *e));
        v
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.sorted_terms() {
            let neg = c < Rat::zero();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let has_vars = e != [0, 0, 0];
            if !has_vars || !mag.is_one() {
                write!(f, "{mag}")?;
                if has_vars {
                    write!(f, "*")?;
                }
            }
            let mut need_star = false;
            for (sym, p) in [("x", e[0]), ("y", e[1]), ("z", e[2])] {
                if p == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                need_star = true;
                if p == 1 {
                    write!(f, "{sym}")?;
                } else {
                    write!(f, "{sym}^{p}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Coeff for TriPoly {
    fn zero() -> TriPoly {
        TriPoly::zero()
    }
    fn one() -> TriPoly {
        TriPoly::one()
    }
    fn add(&self, other: &TriPoly) -> TriPoly {
        TriPoly::add(self, other)
    }
    fn sub(&self, other: &TriPoly) -> TriPoly {
        TriPoly::sub(self, other)
    }
    fn mul(&self, other: &TriPoly) -> TriPoly {
        TriPoly::mul(self, other)
    }
    fn neg(&self) -> TriPoly {
        TriPoly::neg(self)
    }
    // Units are the nonzero degree-zero polynomials.
    fn invert(&self) -> Option<TriPoly> {
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&[0, 0, 0]) {
                return c.inv().map(TriPoly::constant);
            }
        }
        None
    }
    fn from_rat(r: &Rat) -> TriPoly {
        TriPoly::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        TriPoly::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p_x2_plus_2y() -> TriPoly {
        let mut p = TriPoly::zero();
        p.add_term([2, 0, 0], Rat::one());
        p.add_term([0, 1, 0], Rat::from_int(2));
        p
    }

    #[test]
    fn eval_example() {
        // x^2 + 2y at (3, 1, 0) -> 11
        let p = p_x2_plus_2y();
        assert_eq!(
            p.eval(&Rat::from_int(3), &Rat::one(), &Rat::zero()),
            Rat::from_int(11)
        );
    }

    #[test]
    fn derivative_example() {
        // d/dx (x^2 + 2y) = 2x
        let d = p_x2_plus_2y().derivative(Var::X);
        assert_eq!(d.coeff(&[1, 0, 0]), Rat::from_int(2));
        assert_eq!(d.num_terms(), 1);
        // d/dz kills it entirely
        assert!(p_x2_plus_2y().derivative(Var::Z).is_zero());
    }

    #[test]
    fn cancellation_restores_invariant() {
        let p = p_x2_plus_2y();
        let diff = p.sub(&p);
        assert!(diff.is_zero());
        diff.check_invariants().unwrap();
    }

    #[test]
    fn display_is_sorted_and_compact() {
        let mut p = TriPoly::zero();
        p.add_term([2, 1, 0], Rat::new(-3, 2));
        p.add_term([0, 0, 0], Rat::from_int(7));
        p.add_term([1, 0, 0], Rat::one());
        assert_eq!(p.to_string(), "7 + x - 3/2*x^2*y");
    }

    #[test]
    fn inversion_is_constants_only() {
        assert_eq!(
            TriPoly::constant(Rat::new(2, 3)).invert(),
            Some(TriPoly::constant(Rat::new(3, 2)))
        );
        assert_eq!(TriPoly::var(Var::X).invert(), None);
        assert_eq!(TriPoly::zero().invert(), None);
    }

    fn arb_poly() -> impl Strategy<Value = TriPoly> {
        proptest::collection::vec(
            ((0u32..=2, 0u32..=2, 0u32..=2), -6i64..=6),
            0..6,
        )
        .prop_map(|terms| {
            let mut p = TriPoly::zero();
            for ((i, j, l), c) in terms {
                p.add_term([i, j, l], Rat::from_int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            a.mul(&b).check_invariants().unwrap();
        }

        #[test]
        fn eval_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
            let (x, y, z) = (Rat::new(2, 3), Rat::new(-1, 2), Rat::from_int(2));
            let lhs = a.mul(&b).eval(&x, &y, &z);
            let rhs = &a.eval(&x, &y, &z) * &b.eval(&x, &y, &z);
            prop_assert_eq!(lhs, rhs);
            let lhs = a.add(&b).eval(&x, &y, &z);
            let rhs = &a.eval(&x, &y, &z) + &b.eval(&x, &y, &z);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
