//! Exact rational scalars and small dense linear algebra over them.

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::Error;

/// Exact rational number; all coefficient arithmetic in the crate runs on it.
pub type Rat = num::BigRational;

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn rq(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses "p/q" or an integer, with optional sign.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| mk_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| mk_err())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// 1/k! with the Gamma convention: 0 for negative k.
pub fn inv_factorial(k: i64) -> Rat {
    if k < 0 {
        Rat::zero()
    } else {
        Rat::new(BigInt::one(), factorial(k as u64))
    }
}

/// Binomial coefficient C(n, k) as a rational (0 for k < 0 or k > n).
pub fn binomial(n: u64, k: i64) -> Rat {
    if k < 0 || k as u64 > n {
        return Rat::zero();
    }
    let k = k as u64;
    let mut acc = Rat::one();
    for t in 0..k {
        acc *= rq((n - t) as i64, (t + 1) as i64);
    }
    acc
}

/// Falling factorial x(x-1)...(x-m+1); empty product = 1.
pub fn falling_factorial(x: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    for t in 0..m {
        acc *= x - rint(t as i64);
    }
    acc
}

/// Determinant of a square rational matrix by fraction-aware Gaussian
/// elimination. The 0x0 determinant is 1.
pub fn det(mat: &[Vec<Rat>]) -> Rat {
    let n = mat.len();
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut sign = Rat::one();
    let mut acc = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            sign = -sign;
        }
        let p = m[col][col].clone();
        acc *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    acc * sign
}

/// Solves the (possibly overdetermined) exact system `mat * x = rhs`.
///
/// Returns `Ok(None)` when the system is inconsistent, `Err` when it is
/// consistent but the solution is not unique.
pub fn solve(mat: &[Vec<Rat>], rhs: &[Rat]) -> Result<Option<Vec<Rat>>, Error> {
    let rows = mat.len();
    assert_eq!(rows, rhs.len());
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut m: Vec<Vec<Rat>> = mat
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for c in col..=cols {
            m[rank][c] = &m[rank][c] / &p;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let sub = &f * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    // Inconsistent when a zero row has nonzero rhs.
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return Ok(None);
        }
    }
    if pivot_of_col.iter().any(|p| p.is_none()) {
        return Err(Error::SingularSystem(format!(
            "rank {rank} < {cols} unknowns"
        )));
    }
    let mut x = vec![Rat::zero(); cols];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        x[col] = m[pivot.unwrap()][cols].clone();
    }
    Ok(Some(x))
}

/// True when all values are pairwise distinct.
pub fn pairwise_distinct(vals: &[Rat]) -> bool {
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            if vals[i] == vals[j] {
                return false;
            }
        }
    }
    true
}

/// Formats a rational the way the CLI emits it ("p/q" or "p").
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}
