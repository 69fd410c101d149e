//! Young diagrams, Frobenius coordinates, skew shapes and the brute-force
//! dimension oracles.
//!
//! Partitions are stored without trailing zeros; every indexing formula
//! treats row i beyond the length as 0. Determinantal dimension formulas use
//! exact rational factorials with 1/k! = 0 for negative k.

use std::collections::BTreeMap;
use std::fmt;

use num::traits::ToPrimitive;

use crate::error::Error;
use crate::rat::{self, Rat};

/// Chain enumeration cap: brute-force dimension counts refuse to walk more
/// than this many added cells.
pub const BRUTE_CAP: u32 = 12;

/// A Young diagram: weakly decreasing positive parts.
///
/// Ordered by size first, then lexicographically on the parts, so reverse
/// iteration over a sorted map yields the CLI's output order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Panics if the parts
    /// increase anywhere.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells |mu|.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Row length mu_i for 1-based i; 0 beyond the last row.
    pub fn row(&self, i: usize) -> u32 {
        assert!(i >= 1, "rows are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Column length mu'_j for 1-based j.
    pub fn col(&self, j: usize) -> u32 {
        assert!(j >= 1, "columns are 1-based");
        self.parts.iter().filter(|&&p| p as usize >= j).count() as u32
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.row(1) as usize;
        Partition::new((1..=cols).map(|j| self.col(j)).collect())
    }

    /// Number of diagonal cells d(mu).
    pub fn depth(&self) -> usize {
        (1..=self.parts.len()).filter(|&i| self.row(i) as usize >= i).count()
    }

    /// Frobenius coordinates (p_1..p_d | q_1..q_d) with p_i = mu_i - i,
    /// q_i = mu'_i - i.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let d = self.depth();
        let conj = self.conjugate();
        let p = (1..=d).map(|i| self.row(i) - i as u32).collect();
        let q = (1..=d).map(|i| conj.row(i) - i as u32).collect();
        FrobeniusCoords { p, q }
    }

    /// True iff self_i <= outer_i for every row.
    pub fn is_subdiagram_of(&self, outer: &Partition) -> bool {
        (1..=self.len()).all(|i| self.row(i) <= outer.row(i))
    }

    /// Cells (i, j), 1-based, in reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p as usize {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Hook lengths h(i,j) = mu_i - i + mu'_j - j + 1 per cell.
    pub fn hook_lengths(&self) -> BTreeMap<(usize, usize), u32> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|(i, j)| {
                let h = self.row(i) + conj.row(j) - i as u32 - j as u32 + 1;
                ((i, j), h)
            })
            .collect()
    }

    /// Partition grown by one cell at 1-based row i (must stay a partition).
    fn with_cell(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Partition { parts }
    }

    /// Parses "4,2,2"; "" and "0" denote the empty diagram.
    pub fn parse(s: &str) -> Result<Partition, Error> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid partition part {tok:?}")))?;
            parts.push(v);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "partition parts must be weakly decreasing: {s:?}"
            )));
        }
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Frobenius notation (p_1..p_d | q_1..q_d), both strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    p: Vec<u32>,
    q: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn new(p: Vec<u32>, q: Vec<u32>) -> Result<Self, Error> {
        if p.len() != q.len() {
            return Err(Error::Frobenius(format!(
                "arm and leg counts differ: {} vs {}",
                p.len(),
                q.len()
            )));
        }
        let strictly_decreasing = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if !strictly_decreasing(&p) || !strictly_decreasing(&q) {
            return Err(Error::Frobenius(format!(
                "coordinates must strictly decrease: p={p:?} q={q:?}"
            )));
        }
        Ok(FrobeniusCoords { p, q })
    }

    pub fn depth(&self) -> usize {
        self.p.len()
    }

    pub fn arms(&self) -> &[u32] {
        &self.p
    }

    pub fn legs(&self) -> &[u32] {
        &self.q
    }

    /// The diagram with these coordinates.
    pub fn to_partition(&self) -> Partition {
        let d = self.p.len();
        // Row i for i <= d is p_i + i; rows below the diagonal block are read
        // off the conjugate built from the legs.
        let mut rows: Vec<u32> = (0..d).map(|i| self.p[i] + i as u32 + 1).collect();
        let mut col_lens: Vec<u32> = (0..d).map(|i| self.q[i] + i as u32 + 1).collect();
        col_lens.retain(|&c| c as usize > d);
        // col_lens are the column lengths exceeding d; convert to rows i > d.
        let max_extra = col_lens.first().map(|&c| c as usize).unwrap_or(d);
        for i in d + 1..=max_extra {
            let len = col_lens.iter().filter(|&&c| c as usize >= i).count() as u32;
            rows.push(len);
        }
        Partition::new(rows)
    }
}

/// A skew shape outer/inner with inner contained in outer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        assert!(
            inner.is_subdiagram_of(&outer),
            "inner {inner:?} not contained in outer {outer:?}"
        );
        SkewShape { outer, inner }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Cells (i, j) with inner_i < j <= outer_i, 1-based, reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.outer.len() {
            for j in self.inner.row(i) as usize + 1..=self.outer.row(i) as usize {
                out.push((i, j));
            }
        }
        out
    }

    /// Contents c(i,j) = j - i per cell.
    pub fn contents(&self) -> BTreeMap<(usize, usize), i64> {
        self.cells()
            .into_iter()
            .map(|(i, j)| ((i, j), j as i64 - i as i64))
            .collect()
    }

    /// True when no 2x2 block of cells lies inside the shape.
    pub fn has_no_2x2_block(&self) -> bool {
        // A 2x2 block exists iff outer_i >= inner_{i-1} + 2 for some row pair.
        (2..=self.outer.len()).all(|i| self.outer.row(i) < self.inner.row(i - 1) + 2)
    }

    /// Transposed shape.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape::new(self.outer.conjugate(), self.inner.conjugate())
    }

    /// Parses "4,2,2/1,1" (no slash means an empty inner diagram).
    pub fn parse(s: &str) -> Result<SkewShape, Error> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (Partition::parse(o)?, Partition::parse(i)?),
            None => (Partition::parse(s)?, Partition::empty()),
        };
        if !inner.is_subdiagram_of(&outer) {
            return Err(Error::Parse(format!(
                "inner diagram not contained in outer: {s:?}"
            )));
        }
        Ok(SkewShape::new(outer, inner))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// All partitions of exactly n, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(prefix.clone()));
            return;
        }
        for next in (1..=rem.min(max)).rev() {
            prefix.push(next);
            go(rem - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size 0..=n.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions fitting in a rows x cols box (the empty one included).
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn go(rows_left: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()));
        if rows_left == 0 {
            return;
        }
        for next in 1..=max {
            prefix.push(next);
            go(rows_left - 1, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// All subdiagrams of outer.
pub fn subdiagrams(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()));
        if row > outer.len() {
            return;
        }
        for next in 1..=outer.row(row).min(max) {
            prefix.push(next);
            go(outer, row + 1, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 1, u32::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Dimension method selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimMethod {
    Brute,
    Hook,
    Determinant,
}

/// Number of standard tableaux of shape nu.
pub fn dim(nu: &Partition, method: DimMethod) -> u64 {
    match method {
        DimMethod::Brute => dim_skew(&Partition::empty(), nu, SkewDimMethod::Brute),
        DimMethod::Hook => dim_hook(nu),
        DimMethod::Determinant => dim_skew(&Partition::empty(), nu, SkewDimMethod::Determinant),
    }
}

fn dim_hook(nu: &Partition) -> u64 {
    let mut acc = Rat::from_integer(rat::factorial(nu.size() as u64));
    for (_, h) in nu.hook_lengths() {
        acc /= rat::rint(h as i64);
    }
    assert!(acc.is_integer(), "hook quotient must be an integer");
    acc.to_integer().to_u64().expect("dimension fits u64")
}

/// Skew dimension method selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewDimMethod {
    Brute,
    Determinant,
}

/// Number of standard tableaux of skew shape nu/mu; 0 when mu is not
/// contained in nu.
pub fn dim_skew(mu: &Partition, nu: &Partition, method: SkewDimMethod) -> u64 {
    match method {
        SkewDimMethod::Brute => {
            if !mu.is_subdiagram_of(nu) {
                return 0;
            }
            let steps = nu.size() - mu.size();
            assert!(
                steps <= BRUTE_CAP,
                "brute-force chain count capped at {BRUTE_CAP} added cells, got {steps}"
            );
            count_chains(mu, nu)
        }
        SkewDimMethod::Determinant => dim_skew_det(mu, nu),
    }
}

/// Walks every saturated chain mu = l0 c l1 c ... c nu, one added cell at a
/// time.
fn count_chains(cur: &Partition, nu: &Partition) -> u64 {
    if cur == nu {
        return 1;
    }
    let mut acc = 0u64;
    for i in 1..=cur.len() + 1 {
        // Cell addable at row i keeping a partition inside nu.
        let ok_shape = i == 1 || cur.row(i) < cur.row(i - 1);
        if ok_shape && cur.row(i) < nu.row(i) {
            acc += count_chains(&cur.with_cell(i), nu);
        }
    }
    acc
}

/// (n-m)! det[1/(nu_i - mu_j - i + j)!], order max(l(mu), l(nu)).
fn dim_skew_det(mu: &Partition, nu: &Partition) -> u64 {
    if !mu.is_subdiagram_of(nu) {
        // The determinant vanishes here as well; keep the cheap answer.
        return 0;
    }
    let l = mu.len().max(nu.len());
    let mat: Vec<Vec<Rat>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = nu.row(i) as i64 - mu.row(j) as i64 - i as i64 + j as i64;
                    rat::inv_factorial(k)
                })
                .collect()
        })
        .collect();
    let steps = (nu.size() - mu.size()) as u64;
    let val = Rat::from_integer(rat::factorial(steps)) * rat::det(&mat);
    assert!(val.is_integer(), "skew dimension determinant must be integral");
    let val = val.to_integer();
    assert!(!num::traits::Signed::is_negative(&val));
    val.to_u64().expect("dimension fits u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Oracle: conjugate by explicit cell transposition.
    fn conjugate_by_cells(mu: &Partition) -> Partition {
        let cells: Vec<(usize, usize)> = mu.cells().into_iter().map(|(i, j)| (j, i)).collect();
        let rows = cells.iter().map(|&(i, _)| i).max().unwrap_or(0);
        let parts = (1..=rows)
            .map(|i| cells.iter().filter(|&&(r, _)| r == i).count() as u32)
            .collect();
        Partition::new(parts)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[4, 2, 2]).conjugate(), conjugate_by_cells(&p(&[4, 2, 2])));
        assert_eq!(p(&[4, 2, 2]).conjugate(), p(&[3, 3, 1, 1]));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(Partition::empty().frobenius(), FrobeniusCoords::new(vec![], vec![]).unwrap());
        let f = p(&[2, 1]).frobenius();
        assert_eq!((f.arms(), f.legs()), (&[1u32][..], &[1u32][..]));
        let f = p(&[4, 2, 2]).frobenius();
        assert_eq!((f.arms(), f.legs()), (&[3u32, 0][..], &[2u32, 1][..]));
    }

    #[test]
    fn from_frobenius_examples() {
        let c = FrobeniusCoords::new(vec![1], vec![1]).unwrap();
        assert_eq!(c.to_partition(), p(&[2, 1]));
        let c = FrobeniusCoords::new(vec![0], vec![0]).unwrap();
        assert_eq!(c.to_partition(), p(&[1]));
        let c = FrobeniusCoords::new(vec![3, 0], vec![2, 1]).unwrap();
        assert_eq!(c.to_partition(), p(&[4, 2, 2]));
    }

    #[test]
    fn frobenius_rejects_bad_input() {
        assert!(FrobeniusCoords::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(FrobeniusCoords::new(vec![2], vec![1, 0]).is_err());
    }

    #[test]
    fn frobenius_round_trip_small() {
        for mu in partitions_up_to(10) {
            let f = mu.frobenius();
            assert_eq!(f.to_partition(), mu, "round trip failed for {mu:?}");
            let rebuilt = FrobeniusCoords::new(f.arms().to_vec(), f.legs().to_vec()).unwrap();
            assert_eq!(rebuilt.to_partition().frobenius(), f);
        }
    }

    #[test]
    fn containment_examples() {
        assert!(Partition::empty().is_subdiagram_of(&p(&[3, 1])));
        assert!(p(&[2, 1]).is_subdiagram_of(&p(&[2, 1])));
        assert!(!p(&[3]).is_subdiagram_of(&p(&[2, 2])));
    }

    #[test]
    fn containment_matches_frobenius_criterion() {
        let all = partitions_up_to(8);
        for mu in &all {
            for nu in &all {
                let fm = mu.frobenius();
                let fn_ = nu.frobenius();
                let by_frob = fm.depth() <= fn_.depth()
                    && (0..fm.depth()).all(|i| {
                        fm.arms()[i] <= fn_.arms()[i] && fm.legs()[i] <= fn_.legs()[i]
                    });
                assert_eq!(mu.is_subdiagram_of(nu), by_frob, "mu={mu:?} nu={nu:?}");
            }
        }
    }

    #[test]
    fn hooks_and_contents() {
        let mu = p(&[1]);
        assert_eq!(mu.hook_lengths()[&(1, 1)], 1);
        let hooks = p(&[2, 1]).hook_lengths();
        assert_eq!(hooks[&(1, 1)], 3);
        assert_eq!(hooks[&(1, 2)], 1);
        assert_eq!(hooks[&(2, 1)], 1);

        let shape = SkewShape::new(p(&[4, 2, 2]), p(&[1, 1]));
        let contents = shape.contents();
        assert_eq!(contents[&(1, 2)], 1);
        assert_eq!(contents[&(1, 3)], 2);
        assert_eq!(contents[&(1, 4)], 3);
        assert_eq!(contents[&(2, 2)], 0);
        assert_eq!(contents[&(3, 1)], -2);
        assert_eq!(contents[&(3, 2)], -1);
    }

    #[test]
    fn content_sets_disjoint() {
        // {mu_i - i + 1} and {j - mu'_j} never meet on the checking window.
        for mu in partitions_up_to(8) {
            let window = (mu.len() as u32).max(mu.row(1)) + 2;
            let conj = mu.conjugate();
            let first: Vec<i64> = (1..=window as usize)
                .map(|i| mu.row(i) as i64 - i as i64 + 1)
                .collect();
            let second: Vec<i64> = (1..=window as usize)
                .map(|j| j as i64 - conj.row(j) as i64)
                .collect();
            for a in &first {
                assert!(!second.contains(a), "collision for {mu:?}");
            }
        }
    }

    #[test]
    fn dim_examples() {
        assert_eq!(dim(&Partition::empty(), DimMethod::Brute), 1);
        assert_eq!(dim(&p(&[2, 1]), DimMethod::Brute), 2);
        assert_eq!(dim(&p(&[3, 2]), DimMethod::Brute), 5);
    }

    #[test]
    fn dim_methods_agree() {
        for nu in partitions_up_to(8) {
            let b = dim(&nu, DimMethod::Brute);
            assert_eq!(b, dim(&nu, DimMethod::Hook), "hook vs brute for {nu:?}");
            assert_eq!(b, dim(&nu, DimMethod::Determinant), "det vs brute for {nu:?}");
        }
    }

    #[test]
    fn dim_skew_examples() {
        assert_eq!(dim_skew(&p(&[2, 1]), &p(&[2, 1]), SkewDimMethod::Brute), 1);
        assert_eq!(dim_skew(&p(&[3]), &p(&[2, 2]), SkewDimMethod::Brute), 0);
        assert_eq!(dim_skew(&p(&[1]), &p(&[2, 1]), SkewDimMethod::Brute), 2);
    }

    #[test]
    fn dim_skew_methods_agree() {
        for nu in partitions_up_to(8) {
            for mu in subdiagrams(&nu) {
                let b = dim_skew(&mu, &nu, SkewDimMethod::Brute);
                let d = dim_skew(&mu, &nu, SkewDimMethod::Determinant);
                assert_eq!(b, d, "mu={mu:?} nu={nu:?}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "capped")]
    fn brute_cap_fails_loudly() {
        dim_skew(&Partition::empty(), &p(&[7, 6]), SkewDimMethod::Brute);
    }

    #[test]
    fn no_2x2_detection() {
        assert!(SkewShape::new(p(&[4, 2, 2]), p(&[1, 1])).has_no_2x2_block());
        assert!(!SkewShape::new(p(&[2, 2]), Partition::empty()).has_no_2x2_block());
        assert!(SkewShape::new(p(&[2, 1]), Partition::empty()).has_no_2x2_block());
        assert!(SkewShape::new(p(&[3, 3]), p(&[2])).has_no_2x2_block());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::parse("4,2,2").unwrap(), p(&[4, 2, 2]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("x").is_err());
        assert_eq!(p(&[4, 2, 2]).to_string(), "4,2,2");
        let s = SkewShape::parse("4,2,2/1,1").unwrap();
        assert_eq!(s.outer(), &p(&[4, 2, 2]));
        assert_eq!(s.inner(), &p(&[1, 1]));
        assert!(SkewShape::parse("1/2").is_err());
    }

    proptest! {
        #[test]
        fn conjugate_involution(parts in proptest::collection::vec(0u32..7, 0..6)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let mu = Partition::new(sorted);
            prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
            prop_assert_eq!(mu.conjugate().size(), mu.size());
            prop_assert_eq!(mu.conjugate(), conjugate_by_cells(&mu));
        }
    }
}
