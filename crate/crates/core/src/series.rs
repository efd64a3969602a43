//! Truncated power series with exact rational coefficients, just enough to
//! state the Koszul dimension identity: addition, multiplication, negation,
//! and substitution of a series with zero constant term.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cliffs::{binomial, fuss_catalan};

/// Coefficients of `t^0 .. t^order`, everything past `order` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty());
        RationalSeries { coeffs }
    }

    /// The identity series `t`.
    pub fn t(order: usize) -> Self {
        let mut s = RationalSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn neg(&self) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        RationalSeries {
            coeffs: (0..=order).map(|n| self.coeff(n) + other.coeff(n)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        RationalSeries { coeffs }
    }

    /// Substitution `self(inner)`; `inner` must have zero constant term so
    /// the truncation is well defined.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            inner.coeff(0).is_zero(),
            "substituted series needs zero constant term"
        );
        let order = self.order().min(inner.order());
        let mut acc = RationalSeries::zero(order);
        acc.coeffs[0] = self.coeff(0);
        // Horner from the top coefficient down.
        let mut power = RationalSeries::zero(order);
        power.coeffs[0] = BigRational::one();
        for n in 1..=order {
            power = power.mul(inner);
            let cn = self.coeff(n);
            if !cn.is_zero() {
                for k in 0..=order {
                    let term = power.coeff(k) * &cn;
                    acc.coeffs[k] += term;
                }
            }
        }
        acc
    }
}

/// Hilbert series of the graded family counted by `binom(n + c - 1, c)`,
/// offset so the coefficient of `t^n` is the arity-n dimension.
pub fn binomial_hilbert_series(c: u32, order: usize) -> RationalSeries {
    let coeffs = (0..=order)
        .map(|n| {
            if n == 0 {
                BigRational::zero()
            } else {
                BigRational::from_integer(binomial(n + c as usize - 1, c as usize).into())
            }
        })
        .collect();
    RationalSeries::from_coeffs(coeffs)
}

/// Hilbert series with Fuss-Catalan coefficients `cat_c(n)`.
pub fn fuss_catalan_hilbert_series(c: u32, order: usize) -> RationalSeries {
    let coeffs = (0..=order)
        .map(|n| {
            if n == 0 {
                BigRational::zero()
            } else {
                BigRational::from_integer(fuss_catalan(c, n).into())
            }
        })
        .collect();
    RationalSeries::from_coeffs(coeffs)
}

/// The Koszul compatibility defect `F(-G(-t)) - t`: identically zero when
/// the two series are dual Hilbert series.
pub fn koszul_defect(f: &RationalSeries, g: &RationalSeries) -> RationalSeries {
    let t = RationalSeries::t(f.order().min(g.order()));
    f.compose(&g.compose(&t.neg()).neg()).add(&t.neg())
}
