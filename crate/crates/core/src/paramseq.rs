//! The doubly infinite parameter sequence a = (a_i), its dual and shifts,
//! primed (half-integer) indexing, and factorial powers (u|a)^k.
//!
//! Parameters are exact rationals. Closed forms stay closed under dual and
//! shift; explicit tables reindex. Table access outside the stored window
//! panics, so callers drawing random tables must size the window a priori.

use std::fmt;

use num::traits::{One, Zero};

use crate::error::Error;
use crate::rat::{self, Rat};

/// A total map i -> a_i from integers to rationals (tables are partial and
/// panic outside their window).
#[derive(Clone, Debug, PartialEq)]
pub enum ParameterSequence {
    /// a_i = 0.
    Zero,
    /// a_i = i - 1/2, the Frobenius-Schur specialization.
    Fs,
    /// a_i = alpha * i + beta.
    Affine(Rat, Rat),
    /// Explicit values on the window [base, base + values.len() - 1].
    Table { base: i64, values: Vec<Rat> },
}

use ParameterSequence::*;

impl ParameterSequence {
    pub fn fs() -> Self {
        Fs
    }

    pub fn zero() -> Self {
        Zero
    }

    pub fn affine(alpha: Rat, beta: Rat) -> Self {
        Affine(alpha, beta)
    }

    pub fn table(base: i64, values: Vec<Rat>) -> Self {
        Table { base, values }
    }

    /// a_i. Panics when a table does not cover i.
    pub fn value_at(&self, i: i64) -> Rat {
        match self {
            Zero => Rat::zero(),
            Fs => rat::rint(i) - rat::rq(1, 2),
            Affine(alpha, beta) => alpha * rat::rint(i) + beta,
            Table { base, values } => {
                let idx = i - base;
                assert!(
                    idx >= 0 && (idx as usize) < values.len(),
                    "index {i} outside table window [{}, {}]",
                    base,
                    base + values.len() as i64 - 1
                );
                values[idx as usize].clone()
            }
        }
    }

    /// True when every index in lo..=hi is defined.
    pub fn covers(&self, lo: i64, hi: i64) -> bool {
        match self {
            Table { base, values } => *base <= lo && hi < base + values.len() as i64,
            _ => true,
        }
    }

    /// Errors unless lo..=hi is covered; used by CLI-facing entry points.
    pub fn require_window(&self, lo: i64, hi: i64) -> Result<(), Error> {
        if self.covers(lo, hi) {
            return Ok(());
        }
        let Table { base, values } = self else { unreachable!() };
        Err(Error::Window {
            need_lo: lo,
            need_hi: hi,
            have_lo: *base,
            have_hi: base + values.len() as i64 - 1,
        })
    }

    /// Dual sequence, (dual a)_i = -a_{-i+1}.
    pub fn dual(&self) -> ParameterSequence {
        match self {
            Zero => Zero,
            Fs => Fs,
            Affine(alpha, beta) => Affine(alpha.clone(), -alpha - beta),
            Table { base, values } => {
                // Defined for i with -i+1 in the old window.
                let hi_old = base + values.len() as i64 - 1;
                let new_base = 1 - hi_old;
                let new_values = values.iter().rev().map(|v| -v).collect();
                Table { base: new_base, values: new_values }
            }
        }
    }

    /// Shifted sequence, (shift(a, r))_i = a_{i+r}.
    pub fn shift(&self, r: i64) -> ParameterSequence {
        match self {
            Zero => Zero,
            Fs => {
                if r == 0 {
                    Fs
                } else {
                    Affine(Rat::one(), rat::rint(r) - rat::rq(1, 2))
                }
            }
            Affine(alpha, beta) => Affine(alpha.clone(), alpha * rat::rint(r) + beta),
            Table { base, values } => Table { base: base - r, values: values.clone() },
        }
    }

    /// a'_eps = a_{eps + 1/2} for half-integer eps. Panics on a non
    /// half-integer argument.
    pub fn primed(&self, eps: &Rat) -> Rat {
        let doubled = eps * rat::rint(2);
        assert!(
            doubled.is_integer(),
            "primed index must be a half-integer, got {eps}"
        );
        let two: num::BigInt = 2.into();
        let num = doubled.to_integer();
        assert!(
            (&num % &two) != 0.into(),
            "primed index must be a proper half-integer, got {eps}"
        );
        let i = (eps + rat::rq(1, 2)).to_integer();
        self.value_at(num::traits::ToPrimitive::to_i64(&i).expect("index fits i64"))
    }

    /// The monic polynomial (u|a)^k with roots a_1, ..., a_k.
    pub fn factorial_power(&self, k: u32) -> FactorialPower {
        let mut coeffs = vec![Rat::one()];
        for i in 1..=k {
            let root = self.value_at(i as i64);
            // Multiply by (u - root).
            let mut next = vec![Rat::zero(); coeffs.len() + 1];
            for (t, c) in coeffs.iter().enumerate() {
                next[t + 1] += c;
                next[t] -= &root * c;
            }
            coeffs = next;
        }
        FactorialPower { coeffs }
    }

    /// Parses `zero | fs | affine:<a>:<b> | table:<base>:<v0,v1,...>`.
    pub fn parse(s: &str) -> Result<ParameterSequence, Error> {
        let s = s.trim();
        match s {
            "zero" => return Ok(Zero),
            "fs" => return Ok(Fs),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("affine:") {
            let (a, b) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("invalid affine sequence {s:?}")))?;
            return Ok(Affine(rat::parse_rat(a)?, rat::parse_rat(b)?));
        }
        if let Some(rest) = s.strip_prefix("table:") {
            let (base, vals) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("invalid table sequence {s:?}")))?;
            let base: i64 = base
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid table base {base:?}")))?;
            let values = vals
                .split(',')
                .map(rat::parse_rat)
                .collect::<Result<Vec<_>, _>>()?;
            if values.is_empty() {
                return Err(Error::Parse("empty table sequence".into()));
            }
            return Ok(Table { base, values });
        }
        Err(Error::Parse(format!("unknown sequence {s:?}")))
    }
}

impl fmt::Display for ParameterSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Zero => write!(f, "zero"),
            Fs => write!(f, "fs"),
            Affine(a, b) => write!(f, "affine:{a}:{b}"),
            Table { base, values } => {
                let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                write!(f, "table:{base}:{}", vals.join(","))
            }
        }
    }
}

/// The expanded polynomial (u|a)^k, ascending coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorialPower {
    coeffs: Vec<Rat>,
}

impl FactorialPower {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ascending coefficients; the top one is 1.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, u: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rint, rq};

    #[test]
    fn value_examples() {
        assert_eq!(Fs.value_at(1), rq(1, 2));
        assert_eq!(Zero.value_at(-7), rint(0));
        assert_eq!(Fs.value_at(0), rq(-1, 2));
    }

    #[test]
    fn fs_is_affine_pointwise() {
        let affine = Affine(rint(1), rq(-1, 2));
        for i in -10..=10 {
            assert_eq!(Fs.value_at(i), affine.value_at(i));
        }
    }

    #[test]
    #[should_panic(expected = "outside table window")]
    fn table_window_violation() {
        Table { base: 0, values: vec![rint(1), rint(2)] }.value_at(2);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(Zero.dual(), Zero);
        assert_eq!(Fs.dual(), Fs);
        let a = Affine(rq(1, 3), rint(-2));
        assert_eq!(a.dual(), Affine(rq(1, 3), rint(2) - rq(1, 3)));
        for i in -6..=6 {
            assert_eq!(a.dual().value_at(i), -a.value_at(-i + 1));
        }
        // FS self-duality, pointwise.
        for i in -6..=6 {
            assert_eq!(Fs.dual().value_at(i), -Fs.value_at(-i + 1));
        }
    }

    #[test]
    fn dual_involution_on_tables() {
        let t = Table { base: -2, values: vec![rq(1, 2), rint(3), rq(-5, 7), rint(0)] };
        assert_eq!(t.dual().dual(), t);
        for i in -2..=1 {
            assert_eq!(t.dual().value_at(-i + 1), -t.value_at(i));
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(Zero.shift(5), Zero);
        assert_eq!(Fs.shift(3), Affine(rint(1), rint(3) - rq(1, 2)));
        let t = Table { base: 0, values: vec![rint(4), rint(5)] };
        assert_eq!(t.shift(1), Table { base: -1, values: vec![rint(4), rint(5)] });
        for r in [-3i64, 0, 2] {
            let s = Fs.shift(r);
            for i in -4..=4 {
                assert_eq!(s.value_at(i), Fs.value_at(i + r));
            }
            assert_eq!(s.shift(-r).value_at(2), Fs.value_at(2));
        }
    }

    #[test]
    fn shift_dual_interchange() {
        // dual(shift(a, r)) = shift(dual(a), -r) pointwise.
        let seqs = [
            Zero,
            Fs,
            Affine(rq(1, 3), rint(-2)),
            Table { base: -8, values: (0..17).map(|k| rq(k - 5, 3)).collect() },
        ];
        for a in &seqs {
            for r in [-2i64, 1, 3] {
                for i in -4..=4 {
                    assert_eq!(
                        a.shift(r).dual().value_at(i),
                        a.dual().shift(-r).value_at(i),
                        "a={a} r={r} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn primed_examples() {
        assert_eq!(Fs.primed(&rq(3, 2)), rq(3, 2));
        assert_eq!(Zero.primed(&rq(-7, 2)), rint(0));
        assert_eq!(Affine(rint(1), rint(0)).primed(&rq(1, 2)), rint(1));
        // FS: a'_eps = eps on a window.
        for k in -9..=9i64 {
            let eps = rq(2 * k + 1, 2);
            assert_eq!(Fs.primed(&eps), eps);
        }
    }

    #[test]
    fn primed_dual_identity() {
        // (dual a)'_eps = -a'_{-eps} for eps in {-9/2..9/2}.
        let seqs = [Zero, Fs, Affine(rq(2, 5), rq(7, 3))];
        for a in &seqs {
            for k in -5..5i64 {
                let eps = rq(2 * k + 1, 2);
                assert_eq!(a.dual().primed(&eps), -a.primed(&(-eps.clone())), "a={a}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "half-integer")]
    fn primed_rejects_integers() {
        Fs.primed(&rint(1));
    }

    #[test]
    fn factorial_power_examples() {
        assert_eq!(Fs.factorial_power(0).coeffs(), &[rint(1)]);
        let fp = Fs.factorial_power(2);
        assert_eq!(fp.coeffs(), &[rq(3, 4), rint(-2), rint(1)]);
        let cube = Zero.factorial_power(3);
        assert_eq!(cube.coeffs(), &[rint(0), rint(0), rint(0), rint(1)]);
        assert_eq!(cube.degree(), 3);
    }

    #[test]
    fn factorial_power_roots() {
        let a = Affine(rq(1, 3), rint(-2));
        let fp = a.factorial_power(4);
        for j in 1..=4 {
            assert_eq!(fp.eval(&a.value_at(j)), rint(0));
        }
        assert!(fp.eval(&rint(100)) != rint(0));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(ParameterSequence::parse("zero").unwrap(), Zero);
        assert_eq!(ParameterSequence::parse("fs").unwrap(), Fs);
        assert_eq!(
            ParameterSequence::parse("affine:1/3:-2").unwrap(),
            Affine(rq(1, 3), rint(-2))
        );
        assert_eq!(
            ParameterSequence::parse("table:-1:1/2,3").unwrap(),
            Table { base: -1, values: vec![rq(1, 2), rint(3)] }
        );
        assert!(ParameterSequence::parse("bogus").is_err());
        assert!(ParameterSequence::parse("affine:1").is_err());
        // Round trip through Display.
        for s in ["zero", "fs", "affine:1/3:-2", "table:-1:1/2,3"] {
            let seq = ParameterSequence::parse(s).unwrap();
            assert_eq!(ParameterSequence::parse(&seq.to_string()).unwrap(), seq);
        }
    }
}
