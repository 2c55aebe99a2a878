//! Sparse Laurent polynomials in one variable `v`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A Laurent polynomial `sum c_e v^e` stored as a map from exponent to
/// nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i64, R>,
}

impl<R: Coefficient> LaurentPoly<R> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, R::one())
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::v_pow(1)
    }

    /// `v^e` with coefficient one.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(e, R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i64, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, R)>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    /// Balanced quantum integer `[n] = (v^n - v^-n) / (v - v^-1)`.
    pub fn quantum_integer(n: i64) -> Self {
        let sign = if n < 0 {
            R::zero() - R::one()
        } else {
            R::one()
        };
        let len = n.unsigned_abs() as i64;
        let mut out = Self::zero();
        for t in 0..len {
            out.terms.insert(len - 1 - 2 * t, sign.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(R::is_one)
    }

    /// The exponent of a single-term polynomial with coefficient one.
    pub fn as_unit_monomial(&self) -> Option<i64> {
        match self.terms.iter().next() {
            Some((&e, c)) if self.terms.len() == 1 && c.is_one() => Some(e),
            _ => None,
        }
    }

    pub fn coeff(&self, e: i64) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: R) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = existing.checked_add(&c).ok_or(Error::Overflow)?;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone())?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            terms.insert(e, c.checked_negate().ok_or(Error::Overflow)?);
        }
        Ok(Self { terms })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.checked_neg()?)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                let e = ea.checked_add(eb).ok_or(Error::Overflow)?;
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `v^shift`.
    pub fn shift(&self, shift: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            terms.insert(e.checked_add(shift).ok_or(Error::Overflow)?, c.clone());
        }
        Ok(Self { terms })
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Specialization `v -> 1`.
    pub fn eval_at_one(&self) -> Result<R> {
        self.terms.values().try_fold(R::zero(), |acc, c| {
            acc.checked_add(c).ok_or(Error::Overflow)
        })
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Long division from the lowest term upwards; fails with
    /// [`Error::InexactDivision`] when a nonzero remainder is left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (Some(d_lo), Some(d_hi)) = (divisor.min_exponent(), divisor.max_exponent()) else {
            return Err(Error::DivisionByZero);
        };
        let d_lead = divisor.coeff(d_lo);
        let Some(a_hi) = self.max_exponent() else {
            return Ok(Self::zero());
        };
        let q_hi = a_hi - d_hi;

        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some(r_lo) = rem.min_exponent() {
            let e = r_lo - d_lo;
            if e > q_hi {
                return Err(Error::InexactDivision);
            }
            let c = rem
                .coeff(r_lo)
                .checked_exact_div(&d_lead)
                .ok_or(Error::InexactDivision)?;
            let term = Self::monomial(e, c.clone());
            rem = rem.checked_sub(&term.checked_mul(divisor)?)?;
            quotient.add_term(e, c)?;
        }
        Ok(quotient)
    }

    /// LaTeX rendering, e.g. `v^{2} - 1 + v^{-1}`.
    pub fn to_latex(&self) -> String {
        self.render(|e| format!("v^{{{e}}}"))
    }

    fn render(&self, power: impl Fn(i64) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mut coeff = c.to_string();
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let var = match e {
                0 => String::new(),
                1 => "v".to_string(),
                _ => power(e),
            };
            if var.is_empty() {
                out.push_str(&coeff);
            } else {
                if coeff != "1" {
                    out.push_str(&coeff);
                }
                out.push_str(&var);
            }
        }
        out
    }
}

impl<R: Coefficient> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|e| format!("v^{e}")))
    }
}

impl<R: Coefficient> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// Operator impls panic on overflow, like debug-mode integer arithmetic.
// Fallible callers use the `checked_*` methods.

impl<R: Coefficient> Add for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: Self) -> LaurentPoly<R> {
        self.checked_add(rhs)
            .expect("Laurent polynomial addition overflowed")
    }
}

impl<R: Coefficient> Add for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: Self) -> LaurentPoly<R> {
        &self + &rhs
    }
}

impl<R: Coefficient> Sub for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: Self) -> LaurentPoly<R> {
        self.checked_sub(rhs)
            .expect("Laurent polynomial subtraction overflowed")
    }
}

impl<R: Coefficient> Sub for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: Self) -> LaurentPoly<R> {
        &self - &rhs
    }
}

impl<R: Coefficient> Mul for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: Self) -> LaurentPoly<R> {
        self.checked_mul(rhs)
            .expect("Laurent polynomial multiplication overflowed")
    }
}

impl<R: Coefficient> Mul for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: Self) -> LaurentPoly<R> {
        &self * &rhs
    }
}

impl<R: Coefficient> Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        self.checked_neg()
            .expect("Laurent polynomial negation overflowed")
    }
}

impl<R: Coefficient> Zero for LaurentPoly<R> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Coefficient> One for LaurentPoly<R> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<R: Coefficient + Serialize> Serialize for LaurentPoly<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter())
    }
}

impl<'de, R: Coefficient + Deserialize<'de>> Deserialize<'de> for LaurentPoly<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, R)> = Vec::deserialize(deserializer)?;
        LaurentPoly::from_terms(pairs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type L = LaurentPoly<i64>;

    fn poly(terms: &[(i64, i64)]) -> L {
        L::from_terms(terms.iter().copied()).unwrap()
    }

    fn v() -> L {
        L::v()
    }

    fn vinv() -> L {
        L::v_pow(-1)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&v() + &v(), poly(&[(1, 2)]));
        assert_eq!(&L::one() + &L::zero(), L::one());
        assert_eq!(&(&v() + &vinv()) + &poly(&[(-1, -1)]), v());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&v() * &v(), L::v_pow(2));
        let q2 = &v() + &vinv();
        assert_eq!(&q2 * &L::one(), q2);
        assert_eq!(&q2 * &(&v() - &vinv()), poly(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(v().bar(), vinv());
        assert_eq!(L::constant(3).bar(), L::constant(3));
        assert_eq!(poly(&[(2, 1), (1, 1)]).bar(), poly(&[(-2, 1), (-1, 1)]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly(&[(2, 1), (1, 1)]).eval_at_one().unwrap(), 2);
        assert_eq!(L::zero().eval_at_one().unwrap(), 0);
        assert_eq!(
            poly(&[(0, 1), (1, 1), (2, 1), (3, 1)])
                .eval_at_one()
                .unwrap(),
            4
        );
    }

    #[test]
    fn div_exact_examples() {
        let q2 = &v() + &vinv();
        assert_eq!(q2.div_exact(&q2).unwrap(), L::one());
        assert_eq!(poly(&[(2, 1), (0, 1)]).div_exact(&v()).unwrap(), q2);
        assert_eq!(
            poly(&[(0, 1), (1, 1)]).div_exact(&q2),
            Err(Error::InexactDivision)
        );
        assert_eq!(v().div_exact(&L::zero()), Err(Error::DivisionByZero));
        assert_eq!(L::zero().div_exact(&q2).unwrap(), L::zero());
    }

    #[test]
    fn overflow_is_an_error() {
        let big = L::constant(i64::MAX);
        assert_eq!(big.checked_add(&L::one()), Err(Error::Overflow));
        assert_eq!(big.checked_mul(&L::constant(2)), Err(Error::Overflow));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(L::quantum_integer(0), L::zero());
        assert_eq!(L::quantum_integer(1), L::one());
        assert_eq!(L::quantum_integer(2), &v() + &vinv());
        assert_eq!(L::quantum_integer(-2), -(&v() + &vinv()));
        let num = &L::v_pow(3) - &L::v_pow(-3);
        assert_eq!(
            num.div_exact(&(&v() - &vinv())).unwrap(),
            L::quantum_integer(3)
        );
    }

    #[test]
    fn display_and_latex() {
        assert_eq!(poly(&[(2, 1)]).to_string(), "v^2");
        assert_eq!(poly(&[(1, 1)]).to_string(), "v");
        assert_eq!(poly(&[(0, 1)]).to_string(), "1");
        assert_eq!(
            poly(&[(2, 3), (0, -1), (-1, 1)]).to_string(),
            "3v^2 - 1 + v^-1"
        );
        assert_eq!(poly(&[(-2, -2)]).to_latex(), "-2v^{-2}");
        assert_eq!(L::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = L> {
        prop::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(|t| L::from_terms(t).unwrap())
    }

    proptest! {
        #[test]
        fn bar_is_involutive_ring_automorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }

        #[test]
        fn div_exact_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn eval_at_one_is_ring_hom(a in arb_poly(), b in arb_poly()) {
            let (ea, eb) = (a.eval_at_one().unwrap(), b.eval_at_one().unwrap());
            prop_assert_eq!((&a * &b).eval_at_one().unwrap(), ea * eb);
            prop_assert_eq!((&a + &b).eval_at_one().unwrap(), ea + eb);
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<L>(&s).unwrap(), a);
        }
    }
}
