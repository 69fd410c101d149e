//! Multiparameter Schur functions: h_{k;a}, e_{k;a}, s_{mu;a} by three
//! determinantal routes, skew variants, and transition coefficients between
//! parameter sequences.
//!
//! h_{k;a} is defined by matching 1 + sum h_{k;a}/((u-a_1)...(u-a_k))
//! against H(u); extraction is a unit upper-triangular back-substitution on
//! the expanded denominators, so everything stays exact and O(k^2) series
//! work per table.

use std::collections::{BTreeMap, HashMap};

use num::traits::{One, Zero};

use crate::lambda::{det_lambda, LambdaElement};
use crate::paramseq::ParameterSequence;
use crate::partition::{subdiagrams, Partition};
use crate::rat::{self, Rat};
use crate::series::{geometric, Series};

/// Determinantal route selector for s_{mu;a}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    JacobiTrudi,
    NagelsbachKostka,
    Giambelli,
}

/// Expansions of the products 1/((u-a_1)...(u-a_k)) for k = 0..=kmax,
/// as series in 1/u of the given order. The family is unit-triangular:
/// d[k].coeff(k) = 1 and d[k].coeff(m) = 0 for m < k.
pub(crate) fn denominator_expansions(
    kmax: usize,
    order: usize,
    a: &ParameterSequence,
) -> Vec<Series<Rat>> {
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(Series::<Rat>::one(order));
    for k in 1..=kmax {
        let factor = geometric(&a.value_at(k as i64), order);
        out.push(out[k - 1].mul(&factor));
    }
    out
}

/// Solves target(u) = 1 + sum_k g_k / ((u-a_1)...(u-a_k)) for the g_k.
///
/// `target` must have constant term 1; the returned vector has g_0 = 1.
pub(crate) fn back_substitute<T: crate::series::Coeff>(
    target: &Series<T>,
    a: &ParameterSequence,
) -> Vec<T> {
    let kmax = target.order();
    let dens = denominator_expansions(kmax, kmax, a);
    let mut g: Vec<T> = vec![T::coeff_one()];
    for m in 1..=kmax {
        // Coefficient of 1/u^m: target_m = sum_{k<=m} g_k d[k](m), d[m](m)=1.
        let mut acc = target.coeff(m).clone();
        for k in 1..m {
            let d = dens[k].coeff(m);
            if !d.is_zero() {
                acc = acc.sub(&g[k].scale(d));
            }
        }
        g.push(acc);
    }
    g
}

/// h_{0;a}, ..., h_{kmax;a}; each is a combination of h_0..h_k.
pub fn h_multi_table(kmax: u32, a: &ParameterSequence) -> Vec<LambdaElement> {
    let target = crate::lambda::h_series(kmax as usize);
    back_substitute(&target, a)
}

/// h_{k;a}; 0 for negative k, 1 for k = 0.
pub fn h_multi(k: i64, a: &ParameterSequence) -> LambdaElement {
    if k < 0 {
        return LambdaElement::zero();
    }
    h_multi_table(k as u32, a).pop().unwrap()
}

/// e_{0;a}, ..., e_{kmax;a}: the dual series, denominators built on dual(a).
pub fn e_multi_table(kmax: u32, a: &ParameterSequence) -> Vec<LambdaElement> {
    let target = crate::lambda::e_series(kmax as usize);
    back_substitute(&target, &a.dual())
}

/// e_{k;a}; 0 for negative k, 1 for k = 0.
pub fn e_multi(k: i64, a: &ParameterSequence) -> LambdaElement {
    if k < 0 {
        return LambdaElement::zero();
    }
    e_multi_table(k as u32, a).pop().unwrap()
}

/// s_{mu;a} by the requested determinantal route. All routes agree; the
/// top homogeneous component is the classical s_mu.
pub fn s_multi(mu: &Partition, a: &ParameterSequence, route: Route) -> LambdaElement {
    match route {
        Route::JacobiTrudi => s_multi_skew(mu, &Partition::empty(), a),
        Route::NagelsbachKostka => {
            let conj = mu.conjugate();
            let l = conj.len();
            let mut mat: Vec<Vec<LambdaElement>> = vec![Vec::with_capacity(l); l];
            for j in 1..=l {
                let shifted = a.shift(j as i64 - 1);
                let kmax = (1..=l)
                    .map(|i| conj.row(i) as i64 - i as i64 + j as i64)
                    .max()
                    .unwrap()
                    .max(0) as u32;
                let table = e_multi_table(kmax, &shifted);
                for (i, row) in mat.iter_mut().enumerate() {
                    let k = conj.row(i + 1) as i64 - (i + 1) as i64 + j as i64;
                    row.push(if k < 0 {
                        LambdaElement::zero()
                    } else {
                        table[k as usize].clone()
                    });
                }
            }
            det_lambda(&mat)
        }
        Route::Giambelli => {
            let f = mu.frobenius();
            let d = f.depth();
            let mut hooks: HashMap<(u32, u32), LambdaElement> = HashMap::new();
            let mat: Vec<Vec<LambdaElement>> = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            let key = (f.arms()[i], f.legs()[j]);
                            hooks
                                .entry(key)
                                .or_insert_with(|| {
                                    s_multi(&hook_partition(key.0, key.1), a, Route::JacobiTrudi)
                                })
                                .clone()
                        })
                        .collect()
                })
                .collect();
            det_lambda(&mat)
        }
    }
}

/// The hook diagram (p|q) = (p+1, 1^q).
pub fn hook_partition(p: u32, q: u32) -> Partition {
    let mut parts = vec![p + 1];
    parts.resize(1 + q as usize, 1);
    Partition::new(parts)
}

/// Skew function s_{lambda/mu;a} = det[h_{lambda_i - mu_j - i + j; tau^{mu_j - j + 1} a}].
/// Zero unless mu is contained in lambda; mu = empty reduces to s_{lambda;a}.
pub fn s_multi_skew(lambda: &Partition, mu: &Partition, a: &ParameterSequence) -> LambdaElement {
    let l = lambda.len().max(mu.len());
    if l == 0 {
        return LambdaElement::one();
    }
    let mut mat: Vec<Vec<LambdaElement>> = vec![Vec::with_capacity(l); l];
    for j in 1..=l {
        let shifted = a.shift(mu.row(j) as i64 - j as i64 + 1);
        let kmax = (1..=l)
            .map(|i| lambda.row(i) as i64 - mu.row(j) as i64 - i as i64 + j as i64)
            .max()
            .unwrap()
            .max(0) as u32;
        let table = h_multi_table(kmax, &shifted);
        for (i, row) in mat.iter_mut().enumerate() {
            let k = lambda.row(i + 1) as i64 - mu.row(j) as i64 - (i + 1) as i64 + j as i64;
            row.push(if k < 0 {
                LambdaElement::zero()
            } else {
                table[k as usize].clone()
            });
        }
    }
    det_lambda(&mat)
}

/// The Frobenius-Schur function Fs_mu = s_{mu;a} at a_i = i - 1/2.
pub fn fs_function(mu: &Partition) -> LambdaElement {
    s_multi(mu, &ParameterSequence::fs(), Route::JacobiTrudi)
}

/// Transition coefficient c_{pp'}(a,b) = h_{p-p'}(b_1..b_{p'+1}; -a_1..-a_p),
/// the conventional supersymmetric h evaluated at finitely many numbers.
/// Zero when p' > p; c_{pp}(a,b) = 1.
pub fn transition_coeff(p: u32, p_prime: u32, a: &ParameterSequence, b: &ParameterSequence) -> Rat {
    if p_prime > p {
        return Rat::zero();
    }
    let deg = (p - p_prime) as usize;
    if deg == 0 {
        return Rat::one();
    }
    // H(u)(x;y) = prod 1/(1 - x_i/u) * prod (1 + y_j/u) with
    // x = (b_1..b_{p'+1}), y = (-a_1..-a_p).
    let mut series = Series::<Rat>::one(deg);
    for i in 1..=p_prime as i64 + 1 {
        let x = b.value_at(i);
        let mut coeffs = Vec::with_capacity(deg + 1);
        let mut pow = Rat::one();
        for _ in 0..=deg {
            coeffs.push(pow.clone());
            pow *= &x;
        }
        series = series.mul(&Series::new(coeffs));
    }
    for j in 1..=p as i64 {
        let y = -a.value_at(j);
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[0] = Rat::one();
        coeffs[1] = y;
        series = series.mul(&Series::new(coeffs));
    }
    series.coeff(deg).clone()
}

/// One row of the transition matrix: s_{mu;a} = sum_nu c_{mu nu}(a,b) s_{nu;b}.
/// Entries vanish unless nu is contained in mu with the same depth.
pub fn transition_row(
    mu: &Partition,
    a: &ParameterSequence,
    b: &ParameterSequence,
) -> BTreeMap<Partition, Rat> {
    let fm = mu.frobenius();
    let d = fm.depth();
    let (a_dual, b_dual) = (a.dual(), b.dual());
    let mut out = BTreeMap::new();
    for nu in subdiagrams(mu) {
        let fnu = nu.frobenius();
        if fnu.depth() != d {
            continue;
        }
        let arm_det = rat::det(
            &(0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| transition_coeff(fm.arms()[i], fnu.arms()[j], a, b))
                        .collect()
                })
                .collect::<Vec<_>>(),
        );
        if arm_det.is_zero() {
            continue;
        }
        let leg_det = rat::det(
            &(0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| transition_coeff(fm.legs()[i], fnu.legs()[j], &a_dual, &b_dual))
                        .collect()
                })
                .collect::<Vec<_>>(),
        );
        let c = arm_det * leg_det;
        if !c.is_zero() {
            out.insert(nu, c);
        }
    }
    out
}

/// Checks the hook product identity
/// s_{(p+1|q);a} + s_{(p|q+1);a} + (a_{p+1} + dual(a)_{q+1}) s_{(p|q);a}
///   = s_{(p|0);a} s_{(0|q);a}
/// exactly, truncated at degree p + q + 3.
pub fn hook_identity_check(p: u32, q: u32, a: &ParameterSequence) -> bool {
    let trunc = p + q + 3;
    let s = |pp: u32, qq: u32| s_multi(&hook_partition(pp, qq), a, Route::JacobiTrudi);
    let scalar = a.value_at(p as i64 + 1) + a.dual().value_at(q as i64 + 1);
    let lhs = s(p + 1, q)
        .add(&s(p, q + 1))
        .add(&s(p, q).scale(&scalar))
        .truncated(trunc);
    let rhs = s(p, 0).mul(&s(0, q)).truncated(trunc);
    lhs == rhs
}

/// A table window [lo, hi] sufficient for every lookup the Jacobi-Trudi
/// route for s_{mu;a} makes (including the dual-side checks).
pub fn jt_window(mu: &Partition) -> (i64, i64) {
    let l = mu.len().max(1) as i64;
    let w = mu.row(1) as i64 + l + 1;
    (-w, w)
}

/// Conservative window for the transition row of mu (covers both the plain
/// and the dual lookups on either sequence argument).
pub fn transition_window(mu: &Partition) -> (i64, i64) {
    let m = mu.size() as i64 + 2;
    (-m, m)
}
