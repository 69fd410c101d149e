//! Independent oracle: shifted Schur polynomials as falling-factorial
//! determinant ratios, the relative-dimension formula, and the
//! correspondence that certifies the Frobenius-Schur pipeline.
//!
//! The shifted functions are implemented only as evaluators at rational
//! points; the abstract shifted algebra is redundant here given the
//! correspondence to the main pipeline.

use num::traits::{One, Zero};

use crate::error::Error;
use crate::multischur::fs_function;
use crate::paramseq::ParameterSequence;
use crate::partition::{dim_skew, Partition, SkewDimMethod};
use crate::rat::{self, Rat};

pub use crate::rat::falling_factorial;
use crate::series::Series;
use crate::superpoly::{diagram_point, eval_lambda};

/// s*_mu(x_1..x_n): the ratio of falling-factorial determinants
/// det[(x_i + n - i) down (mu_j + n - j)] / det[(x_i + n - i) down (n - j)].
/// Returns 0 when mu has more rows than there are variables; errors when
/// the denominator determinant vanishes.
pub fn shifted_schur_eval(mu: &Partition, point: &[Rat]) -> Result<Rat, Error> {
    let n = point.len();
    if mu.len() > n {
        return Ok(Rat::zero());
    }
    let shifted: Vec<Rat> = point
        .iter()
        .enumerate()
        .map(|(i0, x)| x + rat::rint((n - 1 - i0) as i64))
        .collect();
    let den = rat::det(
        &(0..n)
            .map(|i| {
                (0..n)
                    .map(|j| falling_factorial(&shifted[i], (n - 1 - j) as u32))
                    .collect()
            })
            .collect::<Vec<_>>(),
    );
    if den.is_zero() {
        return Err(Error::ZeroDenominator(
            "shifted Schur denominator determinant vanishes at this point".into(),
        ));
    }
    let num = rat::det(
        &(0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let m = mu.row(j + 1) + (n - 1 - j) as u32;
                        falling_factorial(&shifted[i], m)
                    })
                    .collect()
            })
            .collect::<Vec<_>>(),
    );
    Ok(num / den)
}

/// Evaluates s*_mu at the row coordinates of a diagram, padded as needed.
pub fn shifted_schur_at_partition(mu: &Partition, lambda: &Partition) -> Rat {
    let n = mu.len().max(lambda.len());
    let point: Vec<Rat> = (1..=n).map(|i| rat::rint(lambda.row(i) as i64)).collect();
    // Partition coordinates keep the x_i + n - i strictly decreasing, so the
    // denominator never vanishes.
    shifted_schur_eval(mu, &point).expect("partition points are nonsingular")
}

/// dim(mu,nu)/dim nu via the shifted route: s*_mu(nu) / (n down m).
pub fn dim_ratio_shifted(mu: &Partition, nu: &Partition) -> Rat {
    let v = shifted_schur_at_partition(mu, nu);
    if v.is_zero() {
        return Rat::zero();
    }
    v / falling_factorial(&rat::rint(nu.size() as i64), mu.size())
}

/// dim(mu,nu)/dim nu via brute-force chain counting.
pub fn dim_ratio_brute(mu: &Partition, nu: &Partition) -> Rat {
    let rel = dim_skew(mu, nu, SkewDimMethod::Brute);
    let total = dim_skew(&Partition::empty(), nu, SkewDimMethod::Brute);
    rat::rint(rel as i64) / rat::rint(total as i64)
}

/// dim(mu,nu)/dim nu via the Frobenius-Schur function at the modified
/// Frobenius coordinates of nu.
pub fn dim_ratio_fs(mu: &Partition, nu: &Partition) -> Rat {
    let pt = diagram_point(nu, &ParameterSequence::fs(), nu.depth().max(1));
    let v = eval_lambda(&fs_function(mu), &pt);
    if v.is_zero() {
        return Rat::zero();
    }
    v / falling_factorial(&rat::rint(nu.size() as i64), mu.size())
}

/// The correspondence check: the shifted evaluation at row coordinates must
/// equal the Frobenius-Schur evaluation at modified Frobenius coordinates.
pub fn phi_check(mu: &Partition, lambda: &Partition) -> bool {
    let lhs = shifted_schur_at_partition(mu, lambda);
    let pt = diagram_point(lambda, &ParameterSequence::fs(), lambda.depth().max(1));
    let rhs = eval_lambda(&fs_function(mu), &pt);
    lhs == rhs
}

/// H*(u) at a point, as a series in 1/u: 1 + sum h*_k / (u down k) with
/// h*_k = s*_{(k)}(x).
fn shifted_h_series(order: usize, point: &[Rat]) -> Series<Rat> {
    let mut acc = Series::<Rat>::one(order);
    for k in 1..=order {
        let hk = shifted_schur_eval(&Partition::new(vec![k as u32]), point)
            .expect("partition-style points are nonsingular");
        acc = acc.add(&falling_denominator(k, 0, order).scale(&hk));
    }
    acc
}

/// E*(u) at a point: 1 + sum e*_k / (u down k) with e*_k = s*_{(1^k)}(x).
fn shifted_e_series(order: usize, point: &[Rat]) -> Series<Rat> {
    let mut acc = Series::<Rat>::one(order);
    for k in 1..=order {
        let ek = shifted_schur_eval(&Partition::new(vec![1; k]), point)
            .expect("partition-style points are nonsingular");
        acc = acc.add(&falling_denominator(k, 0, order).scale(&ek));
    }
    acc
}

/// Expansion of 1/((u - off)(u - off - 1)...(u - off - k + 1)) in 1/u.
fn falling_denominator(k: usize, off: i64, order: usize) -> Series<Rat> {
    let mut acc = Series::<Rat>::one(order);
    for t in 0..k {
        acc = acc.mul(&crate::series::geometric(&rat::rint(off + t as i64), order));
    }
    acc
}

/// Verifies the shifted series identities at a point, to the given order:
/// the H* and E* product formulas, and H*(u) E*(-u-1) = 1.
pub fn shifted_series_check(order: usize, point: &[Rat]) -> bool {
    let h = shifted_h_series(order, point);
    let e = shifted_e_series(order, point);

    // Product form of H*: prod (1 + i/u) / (1 + (i - x_i)/u), finite since
    // factors with x_i = 0 cancel.
    let mut h_prod = Series::<Rat>::one(order);
    for (i0, x) in point.iter().enumerate() {
        let i = (i0 + 1) as i64;
        let num = one_plus_over_u(rat::rint(i), order);
        let den = one_plus_over_u(rat::rint(i) - x, order);
        h_prod = h_prod.mul(&num).mul(&den.invert());
    }
    if h != h_prod {
        return false;
    }

    // Product form of E*: prod (1 + (x_i - i + 1)/u) / (1 + (-i + 1)/u).
    let mut e_prod = Series::<Rat>::one(order);
    for (i0, x) in point.iter().enumerate() {
        let i = (i0 + 1) as i64;
        let num = one_plus_over_u(x - rat::rint(i - 1), order);
        let den = one_plus_over_u(rat::rint(1 - i), order);
        e_prod = e_prod.mul(&num).mul(&den.invert());
    }
    if e != e_prod {
        return false;
    }

    // E*(-u-1): (v down k) at v = -u-1 is (-1)^k (u+1)...(u+k).
    let mut e_at = Series::<Rat>::one(order);
    for k in 1..=order {
        let ek = shifted_schur_eval(&Partition::new(vec![1; k]), point)
            .expect("partition-style points are nonsingular");
        let mut den = Series::<Rat>::one(order);
        for t in 1..=k {
            den = den.mul(&crate::series::geometric(&rat::rint(-(t as i64)), order));
        }
        let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
        e_at = e_at.add(&den.scale(&(sign * ek)));
    }
    h.mul(&e_at).is_one()
}

/// 1 + c/u as a series.
fn one_plus_over_u(c: Rat, order: usize) -> Series<Rat> {
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[0] = Rat::one();
    if order >= 1 {
        coeffs[1] = c;
    }
    Series::new(coeffs)
}
