//! The super realization: exact polynomials in (x_1..x_n; y_1..y_n),
//! evaluation at diagram points, the Sergeev-Pragacz alternating sum, hook
//! factorization, special values and the interpolation characterization.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num::traits::{One, Zero};

use crate::error::Error;
use crate::lambda::{schur, LambdaElement};
use crate::multischur::{s_multi, Route};
use crate::paramseq::ParameterSequence;
use crate::partition::{partitions_up_to, Partition};
use crate::rat::{self, Rat};

/// Exact polynomial in x_1..x_n, y_1..y_n. Exponent vectors store the x
/// block first, then the y block.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u16>, Rat>,
}

impl SuperPolynomial {
    pub fn zero(n: usize) -> Self {
        SuperPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rat::one())
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; 2 * n], c);
        }
        SuperPolynomial { n, terms }
    }

    /// x_i, 1-based.
    pub fn xvar(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        Self::monomial_at(n, i - 1)
    }

    /// y_i, 1-based.
    pub fn yvar(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        Self::monomial_at(n, n + i - 1)
    }

    fn monomial_at(n: usize, pos: usize) -> Self {
        let mut e = vec![0u16; 2 * n];
        e[pos] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Rat::one());
        SuperPolynomial { n, terms }
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&v| v as u32).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, e: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SuperPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero(self.n);
        }
        SuperPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * r)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1 * c2);
            }
        }
        out
    }

    /// Value at the point (exact).
    pub fn eval(&self, pt: &EvalPoint) -> Rat {
        assert_eq!(pt.x.len(), self.n, "point size must match variable count");
        let vals: Vec<&Rat> = pt.x.iter().chain(pt.y.iter()).collect();
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &exp) in vals.iter().zip(e) {
                for _ in 0..exp {
                    term *= *v;
                }
            }
            acc += term;
        }
        acc
    }

    /// Sets x_n = y_n = 0, producing an (n-1)-variable polynomial.
    pub fn restrict(&self) -> Self {
        assert!(self.n >= 1, "cannot restrict a 0-variable polynomial");
        let n = self.n;
        let mut out = Self::zero(n - 1);
        for (e, c) in &self.terms {
            if e[n - 1] != 0 || e[2 * n - 1] != 0 {
                continue;
            }
            let mut e2 = Vec::with_capacity(2 * n - 2);
            e2.extend_from_slice(&e[..n - 1]);
            e2.extend_from_slice(&e[n..2 * n - 1]);
            out.insert(e2, c.clone());
        }
        out
    }

    /// Applies w1 to the x block and w2 to the y block (0-based images).
    fn permuted(&self, w1: &[usize], w2: &[usize]) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            let mut e2 = vec![0u16; 2 * n];
            for i in 0..n {
                e2[w1[i]] += e[i];
                e2[n + w2[i]] += e[n + i];
            }
            out.insert(e2, c.clone());
        }
        out
    }

    /// Separate symmetry in the x block and in the y block.
    pub fn is_separately_symmetric(&self) -> bool {
        let n = self.n;
        let id: Vec<usize> = (0..n).collect();
        for t in 0..n.saturating_sub(1) {
            let mut sw = id.clone();
            sw.swap(t, t + 1);
            if &self.permuted(&sw, &id) != self || &self.permuted(&id, &sw) != self {
                return false;
            }
        }
        true
    }

    /// Supersymmetry: separate symmetry plus the cancellation property. The
    /// substitution x_1 = t, y_1 = -t is performed symbolically and the
    /// degree in t must be 0.
    pub fn is_supersymmetric(&self) -> bool {
        if !self.is_separately_symmetric() {
            return false;
        }
        if self.n == 0 {
            return true;
        }
        let n = self.n;
        // Key: (degree in t, remaining exponents).
        let mut collapsed: BTreeMap<(u16, Vec<u16>), Rat> = BTreeMap::new();
        for (e, c) in &self.terms {
            let t_deg = e[0] + e[n];
            let signed = if e[n] % 2 == 1 { -c.clone() } else { c.clone() };
            let mut rest = Vec::with_capacity(2 * n - 2);
            rest.extend_from_slice(&e[1..n]);
            rest.extend_from_slice(&e[n + 1..]);
            let entry = collapsed.entry((t_deg, rest)).or_insert_with(Rat::zero);
            *entry += signed;
        }
        collapsed.retain(|_, v| !v.is_zero());
        collapsed.keys().all(|(t_deg, _)| *t_deg == 0)
    }
}

impl std::fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let n = self.n;
        let mut pieces = Vec::new();
        for (e, c) in &self.terms {
            let mut s = format!("{c}");
            for (pos, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let var = if pos < n {
                    format!("x{}", pos + 1)
                } else {
                    format!("y{}", pos - n + 1)
                };
                s.push('*');
                s.push_str(&var);
                if exp > 1 {
                    s.push_str(&format!("^{exp}"));
                }
            }
            pieces.push(s);
        }
        write!(f, "{}", pieces.join(" + "))
    }
}

/// A rational evaluation point (x_1..x_n; y_1..y_n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    x: Vec<Rat>,
    y: Vec<Rat>,
}

impl EvalPoint {
    pub fn new(x: Vec<Rat>, y: Vec<Rat>) -> Self {
        assert_eq!(x.len(), y.len(), "alphabets must have equal length");
        EvalPoint { x, y }
    }

    pub fn zeros(n: usize) -> Self {
        EvalPoint { x: vec![Rat::zero(); n], y: vec![Rat::zero(); n] }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[Rat] {
        &self.x
    }

    pub fn y(&self) -> &[Rat] {
        &self.y
    }

    /// Pads with zeros up to n coordinates (stability keeps values intact).
    pub fn padded(&self, n: usize) -> Self {
        assert!(n >= self.n());
        let mut x = self.x.clone();
        let mut y = self.y.clone();
        x.resize(n, Rat::zero());
        y.resize(n, Rat::zero());
        EvalPoint { x, y }
    }

    /// Parses "x=1,1/2;y=0,3" (empty lists allowed: "x=;y=").
    pub fn parse(s: &str) -> Result<Self, Error> {
        let err = || Error::Parse(format!("invalid point {s:?}, expected x=..;y=.."));
        let (xs, ys) = s.trim().split_once(';').ok_or_else(err)?;
        let xs = xs.trim().strip_prefix("x=").ok_or_else(err)?;
        let ys = ys.trim().strip_prefix("y=").ok_or_else(err)?;
        let parse_list = |t: &str| -> Result<Vec<Rat>, Error> {
            if t.trim().is_empty() {
                return Ok(Vec::new());
            }
            t.split(',').map(rat::parse_rat).collect()
        };
        let (x, y) = (parse_list(xs)?, parse_list(ys)?);
        if x.len() != y.len() {
            return Err(Error::Parse(format!(
                "point needs equally many x and y coordinates, got {} and {}",
                x.len(),
                y.len()
            )));
        }
        Ok(EvalPoint { x, y })
    }
}

/// The evaluation point x(lambda)_i = a_{P_i+1}, y(lambda)_i = dual(a)_{Q_i+1}
/// attached to a diagram, padded with zeros to n coordinates. For a = FS this
/// is the modified Frobenius coordinate point (p_i + 1/2; q_i + 1/2).
pub fn diagram_point(lambda: &Partition, a: &ParameterSequence, n: usize) -> EvalPoint {
    let f = lambda.frobenius();
    let d = f.depth();
    assert!(n >= d, "need at least d = {d} coordinates for {lambda:?}, got {n}");
    let dual = a.dual();
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    for i in 0..d {
        x.push(a.value_at(f.arms()[i] as i64 + 1));
        y.push(dual.value_at(f.legs()[i] as i64 + 1));
    }
    x.resize(n, Rat::zero());
    y.resize(n, Rat::zero());
    EvalPoint { x, y }
}

/// The super specializations of h_0..h_kmax in n + n variables, cached.
fn h_spec_table(kmax: u32, n: usize) -> Vec<SuperPolynomial> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Vec<SuperPolynomial>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    {
        let map = cache.read().unwrap();
        if let Some(tab) = map.get(&n) {
            if tab.len() > kmax as usize {
                return tab[..=kmax as usize].to_vec();
            }
        }
    }
    let k = kmax as usize;
    let mut c = vec![SuperPolynomial::zero(n); k + 1];
    c[0] = SuperPolynomial::one(n);
    for i in 1..=n {
        let x = SuperPolynomial::xvar(n, i);
        // Multiply by 1/(1 - x_i/u): ascending update reuses the new c[m-1].
        for m in 1..=k {
            let bump = c[m - 1].mul(&x);
            c[m] = c[m].add(&bump);
        }
        let y = SuperPolynomial::yvar(n, i);
        // Multiply by (1 + y_i/u): descending update uses the old c[m-1].
        for m in (1..=k).rev() {
            let bump = c[m - 1].mul(&y);
            c[m] = c[m].add(&bump);
        }
    }
    let mut map = cache.write().unwrap();
    let entry = map.entry(n).or_default();
    if entry.len() <= k {
        *entry = c;
    }
    entry[..=k].to_vec()
}

/// Specializes an element of the symmetric-function algebra to a
/// supersymmetric polynomial in n + n variables (a ring homomorphism).
pub fn specialize(f: &LambdaElement, n: usize) -> SuperPolynomial {
    static MONO: OnceLock<RwLock<HashMap<(usize, Partition), SuperPolynomial>>> = OnceLock::new();
    let cache = MONO.get_or_init(|| RwLock::new(HashMap::new()));
    let kmax = f.terms().map(|(p, _)| p.row(1)).max().unwrap_or(0);
    let table = h_spec_table(kmax, n);
    let mut out = SuperPolynomial::zero(n);
    for (p, c) in f.terms() {
        let key = (n, p.clone());
        let hit = cache.read().unwrap().get(&key).cloned();
        let poly = match hit {
            Some(poly) => poly,
            None => {
                let mut acc = SuperPolynomial::one(n);
                for &part in p.parts() {
                    acc = acc.mul(&table[part as usize]);
                }
                cache.write().unwrap().insert(key, acc.clone());
                acc
            }
        };
        out = out.add(&poly.scale(c));
    }
    out
}

/// Values of h_0..h_kmax at a point, by the same series recurrences.
fn h_values_at(kmax: u32, pt: &EvalPoint) -> Vec<Rat> {
    let k = kmax as usize;
    let mut c = vec![Rat::zero(); k + 1];
    c[0] = Rat::one();
    for i in 0..pt.n() {
        for m in 1..=k {
            let bump = &c[m - 1] * &pt.x[i];
            c[m] += bump;
        }
        for m in (1..=k).rev() {
            let bump = &c[m - 1] * &pt.y[i];
            c[m] += bump;
        }
    }
    c
}

/// Evaluates an element of the algebra at a point (equals evaluating its
/// specialization, without building the polynomial).
pub fn eval_lambda(f: &LambdaElement, pt: &EvalPoint) -> Rat {
    let kmax = f.terms().map(|(p, _)| p.row(1)).max().unwrap_or(0);
    let h = h_values_at(kmax, pt);
    let mut acc = Rat::zero();
    for (p, c) in f.terms() {
        let mut term = c.clone();
        for &part in p.parts() {
            term *= &h[part as usize];
        }
        acc += term;
    }
    acc
}

pub(crate) fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(k: usize, perm: &mut Vec<usize>, even: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = perm.len();
        if k == n {
            out.push((perm.clone(), even));
            return;
        }
        for t in k..n {
            perm.swap(k, t);
            go(k + 1, perm, even == (k == t), out);
            perm.swap(k, t);
        }
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    go(0, &mut perm, true, &mut out);
    out
}

/// Coefficients of (x|a)^m * x^shift per power of x.
fn factorial_power_coeffs(a: &ParameterSequence, m: u32, shift: u32) -> Vec<(u16, Rat)> {
    a.factorial_power(m)
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(t, c)| ((t as u16) + shift as u16, c.clone()))
        .collect()
}

/// The Sergeev-Pragacz expression: alternating sum over S_n x S_n of the
/// weight f_{mu;a}, divided exactly by V(x) V(y). Errors when n < d(mu).
pub fn sergeev_pragacz(
    mu: &Partition,
    a: &ParameterSequence,
    n: usize,
) -> Result<SuperPolynomial, Error> {
    let d = mu.depth();
    if n < d {
        return Err(Error::TooFewVariables { n, d });
    }
    let conj = mu.conjugate();
    let dual = a.dual();

    // Expand the weight once as a flat term list.
    let mut terms: Vec<(Vec<u16>, Rat)> = vec![(vec![0u16; 2 * n], Rat::one())];
    let fold_univariate = |terms: &mut Vec<(Vec<u16>, Rat)>, pos: usize, poly: Vec<(u16, Rat)>| {
        let mut next = Vec::with_capacity(terms.len() * poly.len());
        for (e, c) in terms.iter() {
            for (t, ct) in &poly {
                let mut e2 = e.clone();
                e2[pos] += t;
                next.push((e2, c * ct));
            }
        }
        *terms = next;
    };
    for i in 1..=d {
        let xm = mu.row(i) - i as u32;
        let xs = (n as i64 - mu.row(i) as i64).max(0) as u32;
        fold_univariate(&mut terms, i - 1, factorial_power_coeffs(a, xm, xs));
        let ym = conj.row(i) - i as u32;
        let ys = (n as i64 - conj.row(i) as i64).max(0) as u32;
        fold_univariate(&mut terms, n + i - 1, factorial_power_coeffs(&dual, ym, ys));
    }
    for i in d + 1..=n {
        let e = (n - i) as u16;
        for (ev, _) in terms.iter_mut() {
            ev[i - 1] += e;
            ev[n + i - 1] += e;
        }
    }
    for (i, j) in mu.cells() {
        if i <= n && j <= n {
            let mut next = Vec::with_capacity(terms.len() * 2);
            for (e, c) in terms.iter() {
                let mut ex = e.clone();
                ex[i - 1] += 1;
                next.push((ex, c.clone()));
                let mut ey = e.clone();
                ey[n + j - 1] += 1;
                next.push((ey, c.clone()));
            }
            terms = next;
        }
    }

    // Alternating sum in two stages (y-block first, then x-block): the
    // intermediate map is antisymmetric in the y's, so most terms cancel
    // before the second stage. Exponent vectors are packed into u128 keys
    // (one byte per variable).
    let packed: Vec<(u128, Rat)> = terms
        .iter()
        .map(|(e, c)| (pack_exponents(e), c.clone()))
        .collect();
    let perms = permutations_with_sign(n);
    let mut y_stage: HashMap<u128, Rat> = HashMap::with_capacity(packed.len() * 2);
    for (w2, even2) in &perms {
        for (key, c) in &packed {
            let k2 = permute_block(*key, w2, n, n);
            merge_packed(&mut y_stage, k2, if *even2 { c.clone() } else { -c });
        }
    }
    let mut numerator: HashMap<u128, Rat> = HashMap::with_capacity(y_stage.len() * 2);
    for (w1, even1) in &perms {
        for (key, c) in &y_stage {
            let k2 = permute_block(*key, w1, 0, n);
            merge_packed(&mut numerator, k2, if *even1 { c.clone() } else { -c });
        }
    }

    // Exact division by V(x) V(y); a nonzero remainder is a hard error.
    for hi in 0..n {
        for lo in 0..hi {
            numerator = divide_packed(numerator, lo, hi);
            numerator = divide_packed(numerator, n + lo, n + hi);
        }
    }
    let mut out = SuperPolynomial::zero(n);
    for (key, c) in numerator {
        out.insert(unpack_exponents(key, 2 * n), c);
    }
    Ok(out)
}

fn pack_exponents(e: &[u16]) -> u128 {
    assert!(e.len() <= 16);
    e.iter().enumerate().fold(0u128, |acc, (i, &v)| {
        debug_assert!(v < 256, "exponent overflows the packed byte");
        acc | (v as u128) << (8 * i)
    })
}

fn unpack_exponents(key: u128, len: usize) -> Vec<u16> {
    (0..len).map(|i| ((key >> (8 * i)) & 0xff) as u16).collect()
}

/// Shuffles the byte block [offset, offset + n) of `key` by w.
fn permute_block(key: u128, w: &[usize], offset: usize, n: usize) -> u128 {
    let mut out = key;
    for i in 0..n {
        out &= !(0xffu128 << (8 * (offset + i)));
    }
    for (i, &wi) in w.iter().enumerate() {
        let byte = (key >> (8 * (offset + i))) & 0xff;
        out |= byte << (8 * (offset + wi));
    }
    out
}

fn merge_packed(map: &mut HashMap<u128, Rat>, key: u128, c: Rat) {
    use std::collections::hash_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Packed-key variant of the synthetic division by (v_a - v_b).
fn divide_packed(p: HashMap<u128, Rat>, a: usize, b: usize) -> HashMap<u128, Rat> {
    let byte_of = |key: u128, pos: usize| ((key >> (8 * pos)) & 0xff) as u16;
    let top = p.keys().map(|&k| byte_of(k, a)).max().unwrap_or(0) as usize;
    let mut levels: Vec<HashMap<u128, Rat>> = vec![HashMap::new(); top + 1];
    for (key, c) in p {
        let t = byte_of(key, a) as usize;
        let cleared = key & !(0xffu128 << (8 * a));
        merge_packed(&mut levels[t], cleared, c);
    }
    let mut quotient: HashMap<u128, Rat> = HashMap::new();
    // Horner from the top exponent down: Q_{t-1} = C_t + v_b * Q_t.
    let mut carry: HashMap<u128, Rat> = HashMap::new();
    for t in (1..=top).rev() {
        let mut level = std::mem::take(&mut levels[t]);
        for (key, c) in carry {
            debug_assert!(byte_of(key, b) < 255);
            merge_packed(&mut level, key + (1u128 << (8 * b)), c);
        }
        for (key, c) in &level {
            quotient.insert(key | ((t as u128 - 1) << (8 * a)), c.clone());
        }
        carry = level;
    }
    let mut remainder = std::mem::take(&mut levels[0]);
    for (key, c) in carry {
        merge_packed(&mut remainder, key + (1u128 << (8 * b)), c);
    }
    assert!(
        remainder.is_empty(),
        "Vandermonde division left a nonzero remainder"
    );
    quotient
}

/// Exact quotient P / (v_a - v_b) for variable positions a != b; panics when
/// the remainder (P at v_a = v_b) is nonzero.
fn divide_by_linear_difference(p: &SuperPolynomial, a: usize, b: usize) -> SuperPolynomial {
    let n = p.n;
    // Group by the exponent of v_a.
    let mut by_deg: BTreeMap<u16, Vec<(Vec<u16>, Rat)>> = BTreeMap::new();
    for (e, c) in &p.terms {
        let t = e[a];
        let mut e2 = e.clone();
        e2[a] = 0;
        by_deg.entry(t).or_default().push((e2, c.clone()));
    }
    let top = by_deg.keys().next_back().copied().unwrap_or(0);
    let mut quotient = SuperPolynomial::zero(n);
    // Horner from the top exponent down: Q_{t-1} = C_t + v_b * Q_t.
    let mut carry: BTreeMap<Vec<u16>, Rat> = BTreeMap::new();
    for t in (1..=top).rev() {
        let mut level: BTreeMap<Vec<u16>, Rat> = BTreeMap::new();
        for (e, c) in &carry {
            let mut e2 = e.clone();
            e2[b] += 1;
            merge_term(&mut level, e2, c.clone());
        }
        if let Some(cs) = by_deg.get(&t) {
            for (e, c) in cs {
                merge_term(&mut level, e.clone(), c.clone());
            }
        }
        for (e, c) in &level {
            let mut e2 = e.clone();
            e2[a] = t - 1;
            quotient.insert(e2, c.clone());
        }
        carry = level;
    }
    // Remainder = C_0 + v_b * Q_0 must vanish.
    let mut remainder: BTreeMap<Vec<u16>, Rat> = BTreeMap::new();
    for (e, c) in &carry {
        let mut e2 = e.clone();
        e2[b] += 1;
        merge_term(&mut remainder, e2, c.clone());
    }
    if let Some(cs) = by_deg.get(&0) {
        for (e, c) in cs {
            merge_term(&mut remainder, e.clone(), c.clone());
        }
    }
    assert!(
        remainder.is_empty(),
        "Vandermonde division left a nonzero remainder"
    );
    quotient
}

fn merge_term(map: &mut BTreeMap<Vec<u16>, Rat>, e: Vec<u16>, c: Rat) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Determinant of a small matrix of polynomials (permutation expansion).
fn det_super(m: &[Vec<SuperPolynomial>], n_vars: usize) -> SuperPolynomial {
    let d = m.len();
    if d == 0 {
        return SuperPolynomial::one(n_vars);
    }
    let mut acc = SuperPolynomial::zero(n_vars);
    for (w, even) in permutations_with_sign(d) {
        let mut term = SuperPolynomial::one(n_vars);
        for (i, &wi) in w.iter().enumerate() {
            term = term.mul(&m[i][wi]);
        }
        acc = if even { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The hook factorization at n = d(mu):
/// det[(x_i|a)^{p_j}]/V(x) * det[(y_i|dual a)^{q_j}]/V(y) * prod (x_i + y_j).
pub fn berele_regev_factor(mu: &Partition, a: &ParameterSequence) -> SuperPolynomial {
    let f = mu.frobenius();
    let d = f.depth();
    let dual = a.dual();

    let factorial_in_var = |seq: &ParameterSequence, pos: usize, m: u32| -> SuperPolynomial {
        let mut out = SuperPolynomial::zero(d);
        for (t, c) in factorial_power_coeffs(seq, m, 0) {
            let mut e = vec![0u16; 2 * d];
            e[pos] = t;
            out.insert(e, c);
        }
        out
    };

    let xmat: Vec<Vec<SuperPolynomial>> = (0..d)
        .map(|i| (0..d).map(|j| factorial_in_var(a, i, f.arms()[j])).collect())
        .collect();
    let ymat: Vec<Vec<SuperPolynomial>> = (0..d)
        .map(|i| (0..d).map(|j| factorial_in_var(&dual, d + i, f.legs()[j])).collect())
        .collect();

    let mut xdet = det_super(&xmat, d);
    for hi in 0..d {
        for lo in 0..hi {
            xdet = divide_by_linear_difference(&xdet, lo, hi);
        }
    }
    let mut ydet = det_super(&ymat, d);
    for hi in 0..d {
        for lo in 0..hi {
            ydet = divide_by_linear_difference(&ydet, d + lo, d + hi);
        }
    }
    let mut acc = xdet.mul(&ydet);
    for i in 1..=d {
        for j in 1..=d {
            let cell = SuperPolynomial::xvar(d, i).add(&SuperPolynomial::yvar(d, j));
            acc = acc.mul(&cell);
        }
    }
    acc
}

/// Route selector for the special value s_{mu;a}(x(mu); y(mu)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialValueRoute {
    /// The content product over the cells of mu.
    Product,
    /// The Frobenius-coordinate quotient; needs distinct parameter values.
    FrobeniusProduct,
}

/// The special value s_{mu;a}(x(mu); y(mu)) by either closed form. The
/// Frobenius route reports a collision error when a denominator vanishes.
pub fn special_value(
    mu: &Partition,
    a: &ParameterSequence,
    route: SpecialValueRoute,
) -> Result<Rat, Error> {
    match route {
        SpecialValueRoute::Product => {
            let conj = mu.conjugate();
            let mut acc = Rat::one();
            for (i, j) in mu.cells() {
                let top = a.value_at(mu.row(i) as i64 - i as i64 + 1);
                let bot = a.value_at(j as i64 - conj.row(j) as i64);
                acc *= top - bot;
            }
            Ok(acc)
        }
        SpecialValueRoute::FrobeniusProduct => {
            let f = mu.frobenius();
            let d = f.depth();
            let dual = a.dual();
            let xs: Vec<Rat> = (0..d).map(|i| a.value_at(f.arms()[i] as i64 + 1)).collect();
            let ys: Vec<Rat> = (0..d).map(|i| dual.value_at(f.legs()[i] as i64 + 1)).collect();
            let mut den = Rat::one();
            for i in 0..d {
                for k in i + 1..d {
                    den *= &xs[i] - &xs[k];
                    den *= &ys[i] - &ys[k];
                }
            }
            if den.is_zero() {
                return Err(Error::ParameterCollision(
                    "coinciding parameter values in the Frobenius quotient".into(),
                ));
            }
            let mut num = Rat::one();
            for i in 0..d {
                for t in 1..=f.arms()[i] as i64 {
                    num *= &xs[i] - a.value_at(t);
                }
                for t in 1..=f.legs()[i] as i64 {
                    num *= &ys[i] - dual.value_at(t);
                }
            }
            for i in 0..d {
                for j in 0..d {
                    num *= &xs[i] + &ys[j];
                }
            }
            Ok(num / den)
        }
    }
}

/// Whether s_{mu;a} vanishes at the diagram point of lambda. Always true
/// when mu is not contained in lambda.
pub fn vanishing_check(mu: &Partition, lambda: &Partition, a: &ParameterSequence) -> bool {
    let n = mu.depth().max(lambda.depth()).max(1);
    let pt = diagram_point(lambda, a, n);
    eval_lambda(&s_multi(mu, a, Route::JacobiTrudi), &pt).is_zero()
}

/// Solves the interpolation problem: the unique element with top component
/// s_mu vanishing at every diagram point of D(mu) = {lambda != mu,
/// |lambda| <= |mu|}. A singular system signals parameter collisions.
pub fn interpolation_solve(mu: &Partition, a: &ParameterSequence) -> Result<LambdaElement, Error> {
    let m = mu.size();
    let unknowns: Vec<Partition> = if m == 0 {
        Vec::new()
    } else {
        partitions_up_to(m - 1)
    };
    let points: Vec<Partition> = partitions_up_to(m).into_iter().filter(|l| l != mu).collect();
    let top = schur(mu);
    let mut rows = Vec::with_capacity(points.len());
    let mut rhs = Vec::with_capacity(points.len());
    for lambda in &points {
        let pt = diagram_point(lambda, a, lambda.depth().max(1));
        rows.push(
            unknowns
                .iter()
                .map(|nu| eval_lambda(&schur(nu), &pt))
                .collect::<Vec<_>>(),
        );
        rhs.push(-eval_lambda(&top, &pt));
    }
    let sol = rat::solve(&rows, &rhs)?
        .ok_or_else(|| Error::SingularSystem("inconsistent vanishing conditions".into()))?;
    let mut acc = top;
    for (nu, c) in unknowns.iter().zip(sol) {
        acc = acc.add(&schur(nu).scale(&c));
    }
    Ok(acc)
}
