//! Truncated formal series in 1/u over an exact coefficient ring.
//!
//! A `Series` holds c_0 + c_1/u + ... + c_N/u^N. Multiplication and
//! inversion close at the minimum order of the operands; substituting
//! u -> u + const is well defined for series in 1/u and preserves the order.

use crate::rat::{self, Rat};

/// Coefficient ring of a series: exact, commutative, with Q-scaling.
pub trait Coeff: Clone + PartialEq {
    fn coeff_zero() -> Self;
    fn coeff_one() -> Self;
    fn coeff_is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rat) -> Self;
}

impl Coeff for Rat {
    fn coeff_zero() -> Self {
        num::traits::Zero::zero()
    }
    fn coeff_one() -> Self {
        num::traits::One::one()
    }
    fn coeff_is_zero(&self) -> bool {
        num::traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
}

/// c_0 + c_1/u + ... + c_N/u^N with N = coeffs.len() - 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T: Coeff> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Series<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![T::coeff_zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::coeff_one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &T {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|m| self.coeffs[m].add(&other.coeffs[m]))
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|m| self.coeffs[m].sub(&other.coeffs[m]))
            .collect();
        Series { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![T::coeff_zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.coeff_is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.coeff_is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Series { coeffs }
    }

    /// Multiplicative inverse; the constant term must be 1.
    pub fn invert(&self) -> Self {
        assert!(self.coeffs[0] == T::coeff_one(), "inversion needs constant term 1");
        let n = self.order();
        let mut inv = vec![T::coeff_zero(); n + 1];
        inv[0] = T::coeff_one();
        for m in 1..=n {
            let mut acc = T::coeff_zero();
            for j in 1..=m {
                if self.coeffs[j].coeff_is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&inv[m - j]));
            }
            inv[m] = acc.neg();
        }
        Series { coeffs: inv }
    }

    /// Substitutes u -> u + s: each 1/(u+s)^m re-expands in 1/u.
    pub fn substitute_shift(&self, s: &Rat) -> Self {
        let n = self.order();
        let mut out = vec![T::coeff_zero(); n + 1];
        out[0] = self.coeffs[0].clone();
        for m in 1..=n {
            if self.coeffs[m].coeff_is_zero() {
                continue;
            }
            // 1/(u+s)^m = sum_{t>=0} C(m+t-1, t) (-s)^t / u^(m+t).
            let mut neg_s_pow: Rat = num::traits::One::one();
            for t in 0..=(n - m) {
                let factor = rat::binomial((m + t - 1) as u64, t as i64);
                let scaled = self.coeffs[m].scale(&(&factor * &neg_s_pow));
                out[m + t] = out[m + t].add(&scaled);
                neg_s_pow = &neg_s_pow * &(-s);
            }
        }
        Series { coeffs: out }
    }

    /// Substitutes u -> -u: flips the sign of odd coefficients.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| if m % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        Series { coeffs }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Series { coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == T::coeff_one() && self.coeffs[1..].iter().all(|c| c.coeff_is_zero())
    }
}

/// Expansion of 1/(u - r) to the given order: sum_{t>=1} r^(t-1)/u^t.
pub fn geometric(r: &Rat, order: usize) -> Series<Rat> {
    let mut coeffs = vec![num::traits::Zero::zero(); order + 1];
    let mut pow: Rat = num::traits::One::one();
    for t in 1..=order {
        coeffs[t] = pow.clone();
        pow = &pow * r;
    }
    Series::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rint, rq};

    fn s(vals: &[(i64, i64)]) -> Series<Rat> {
        Series::new(vals.iter().map(|&(p, q)| rq(p, q)).collect())
    }

    #[test]
    fn mul_and_invert_round_trip() {
        let a = s(&[(1, 1), (2, 1), (-1, 3), (0, 1), (5, 7)]);
        let prod = a.mul(&a.invert());
        assert!(prod.is_one());
    }

    #[test]
    fn geometric_times_linear_is_one() {
        // (u - r) * geometric(r) = 1, checked through u * S = shift in index.
        let r = rq(3, 2);
        let g = geometric(&r, 8);
        // u*g has coefficients g[t+1] at power t.
        let ug = Series::new(g.coeffs()[1..].to_vec());
        let rg = g.truncate(7).scale(&r);
        assert!(ug.sub(&rg).is_one());
    }

    #[test]
    fn substitute_shift_on_geometric() {
        // 1/(u - 1) with u -> u + 3 equals 1/(u + 2).
        let shifted = geometric(&rint(1), 10).substitute_shift(&rint(3));
        assert_eq!(shifted, geometric(&rint(-2), 10));
        // Substitution by zero is the identity.
        let g = geometric(&rq(5, 3), 6);
        assert_eq!(g.substitute_shift(&rint(0)), g);
    }

    #[test]
    fn negate_variable_involution() {
        let a = s(&[(1, 1), (2, 1), (-1, 3), (4, 5)]);
        assert_eq!(a.negate_variable().negate_variable(), a);
    }

    proptest::proptest! {
        #[test]
        fn invert_round_trip(tail in proptest::collection::vec((-9i64..=9, 1i64..=5), 1..8)) {
            let mut coeffs = vec![rint(1)];
            coeffs.extend(tail.iter().map(|&(p, q)| rq(p, q)));
            let a = Series::new(coeffs);
            proptest::prop_assert!(a.mul(&a.invert()).is_one());
            proptest::prop_assert_eq!(a.invert().invert(), a);
        }

        #[test]
        fn shift_substitution_composes(
            tail in proptest::collection::vec((-5i64..=5, 1i64..=3), 1..6),
            s1 in -4i64..=4,
            s2 in -4i64..=4,
        ) {
            let mut coeffs = vec![rint(1)];
            coeffs.extend(tail.iter().map(|&(p, q)| rq(p, q)));
            let a = Series::new(coeffs);
            let two_steps = a.substitute_shift(&rint(s1)).substitute_shift(&rint(s2));
            let one_step = a.substitute_shift(&rint(s1 + s2));
            proptest::prop_assert_eq!(two_steps, one_step);
        }
    }
}
