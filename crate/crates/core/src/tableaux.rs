//! The combinatorial side: skew-hook weights, diagonal-strict and
//! primed-alphabet tableau enumeration, the combinatorial sums, and the
//! nonintersecting lattice-path machinery with its Gessel-Viennot
//! determinant.
//!
//! Coordinates are matrix-style: the first axis runs downwards, so a wall
//! between two row-neighbours is a *vertical* interior side (u-factor) and a
//! wall between column-neighbours is horizontal (v-factor). The orientation
//! is pinned by the (4,2,2)/(1,1) weight test below.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::traits::{One, Zero};

use crate::multischur::back_substitute;
use crate::paramseq::ParameterSequence;
use crate::partition::{Partition, SkewShape};
use crate::rat::{self, Rat};
use crate::series::Series;
use crate::superpoly::SuperPolynomial;

type Cell = (usize, usize);

/// Polynomial in two variables (u, v) with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BivarPoly {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, 0), Rat::one());
        BivarPoly { terms }
    }

    /// Multiplies by alpha*u + beta*v + gamma.
    pub fn mul_linear(&self, alpha: &Rat, beta: &Rat, gamma: &Rat) -> Self {
        let mut terms: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        let mut bump = |key: (u32, u32), val: Rat| {
            if val.is_zero() {
                return;
            }
            let e = terms.entry(key).or_insert_with(Rat::zero);
            *e += val;
            if e.is_zero() {
                terms.remove(&key);
            }
        };
        for (&(du, dv), c) in &self.terms {
            bump((du + 1, dv), alpha * c);
            bump((du, dv + 1), beta * c);
            bump((du, dv), gamma * c);
        }
        BivarPoly { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                let e = terms.entry((a1 + a2, b1 + b2)).or_insert_with(Rat::zero);
                *e += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BivarPoly { terms }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn eval(&self, u: &Rat, v: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(du, dv), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..du {
                term *= u;
            }
            for _ in 0..dv {
                term *= v;
            }
            acc += term;
        }
        acc
    }

    /// The polynomial with u and v interchanged.
    pub fn swap_uv(&self) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }
}

fn connected_components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some((i, j)) = stack.pop() {
            comp.push((i, j));
            let mut neighbours = vec![(i + 1, j), (i, j + 1)];
            if i > 1 {
                neighbours.push((i - 1, j));
            }
            if j > 1 {
                neighbours.push((i, j - 1));
            }
            for nb in neighbours {
                if set.contains(&nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Interior-side factors of one connected no-2x2 component: (u - a_c) per
/// row-neighbour wall (c = content of the right cell) and (v + a_c) per
/// column-neighbour wall (c = content of the upper cell).
fn component_factors(comp: &[Cell], a: &ParameterSequence) -> (Vec<Rat>, Vec<Rat>) {
    let set: BTreeSet<Cell> = comp.iter().copied().collect();
    let mut u_roots = Vec::new();
    let mut v_offsets = Vec::new();
    for &(i, j) in comp {
        if set.contains(&(i, j + 1)) {
            u_roots.push(a.value_at((j + 1) as i64 - i as i64));
        }
        if set.contains(&(i + 1, j)) {
            v_offsets.push(a.value_at(j as i64 - i as i64));
        }
    }
    (u_roots, v_offsets)
}

/// The weight polynomial f_{shape;a}(u, v): per connected component a factor
/// (u+v) times the interior-side factors. Panics if the shape has a 2x2
/// block.
pub fn skew_hook_weight(shape: &SkewShape, a: &ParameterSequence) -> BivarPoly {
    assert!(
        shape.has_no_2x2_block(),
        "skew-hook weight needs a shape with no 2x2 block, got {shape}"
    );
    weight_of_cells(&shape.cells(), a)
}

fn weight_of_cells(cells: &[Cell], a: &ParameterSequence) -> BivarPoly {
    let mut acc = BivarPoly::one();
    for comp in connected_components(cells) {
        acc = acc.mul_linear(&Rat::one(), &Rat::one(), &Rat::zero());
        let (u_roots, v_offsets) = component_factors(&comp, a);
        for r in u_roots {
            acc = acc.mul_linear(&Rat::one(), &Rat::zero(), &(-r));
        }
        for o in v_offsets {
            acc = acc.mul_linear(&Rat::zero(), &Rat::one(), &o);
        }
    }
    acc
}

/// Numeric weight of a level set at (u, v) without building the polynomial.
fn weight_of_cells_at(cells: &[Cell], a: &ParameterSequence, u: &Rat, v: &Rat) -> Rat {
    let mut acc = Rat::one();
    for comp in connected_components(cells) {
        acc *= u + v;
        let (u_roots, v_offsets) = component_factors(&comp, a);
        for r in u_roots {
            acc *= u - r;
        }
        for o in v_offsets {
            acc *= v + o;
        }
    }
    acc
}

/// A diagonal-strict tableau stored as its chain of diagrams
/// inner = level_0 <= level_1 <= ... <= level_n = outer, each step free of
/// 2x2 blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalStrictTableau {
    levels: Vec<Partition>,
}

impl DiagonalStrictTableau {
    pub fn order(&self) -> usize {
        self.levels.len() - 1
    }

    /// Cells taking the value i (1-based level).
    pub fn level_set(&self, i: usize) -> Vec<Cell> {
        SkewShape::new(self.levels[i].clone(), self.levels[i - 1].clone()).cells()
    }

    /// The entry at each cell.
    pub fn entries(&self) -> BTreeMap<Cell, u32> {
        let mut out = BTreeMap::new();
        for i in 1..self.levels.len() {
            for cell in self.level_set(i) {
                out.insert(cell, i as u32);
            }
        }
        out
    }
}

/// All diagonal-strict tableaux of the skew shape with entries in 1..=n.
pub fn enumerate_diagonal_strict(shape: &SkewShape, n: usize) -> Vec<DiagonalStrictTableau> {
    let rows = shape.outer().len();
    let outer: Vec<u32> = (1..=rows).map(|i| shape.outer().row(i)).collect();
    let start: Vec<u32> = (1..=rows).map(|i| shape.inner().row(i)).collect();

    // Largest diagram reachable from `cur` in one no-2x2 step.
    let max_step = |cur: &[u32]| -> Vec<u32> {
        let mut g = vec![0u32; rows];
        for r in 0..rows {
            let mut hi = outer[r];
            if r > 0 {
                hi = hi.min(cur[r - 1] + 1).min(g[r - 1]);
            }
            g[r] = hi.max(cur[r]);
        }
        g
    };
    let reachable = |cur: &[u32], steps: usize| -> bool {
        let mut g = cur.to_vec();
        for _ in 0..steps {
            g = max_step(&g);
        }
        g == outer
    };

    fn growths(cur: &[u32], outer: &[u32], rows: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut buf = vec![0u32; rows];
        fn go(r: usize, rows: usize, cur: &[u32], outer: &[u32], buf: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if r == rows {
                out.push(buf.clone());
                return;
            }
            let lo = cur[r];
            let mut hi = outer[r];
            if r > 0 {
                hi = hi.min(cur[r - 1] + 1).min(buf[r - 1]);
            }
            for v in lo..=hi {
                buf[r] = v;
                go(r + 1, rows, cur, outer, buf, out);
            }
        }
        go(0, rows, cur, outer, buf.as_mut(), &mut out);
        out
    }

    let mut out = Vec::new();
    let mut chain = vec![start.clone()];
    fn dfs(
        chain: &mut Vec<Vec<u32>>,
        left: usize,
        rows: usize,
        outer: &[u32],
        reachable: &dyn Fn(&[u32], usize) -> bool,
        out: &mut Vec<DiagonalStrictTableau>,
    ) {
        let cur = chain.last().unwrap().clone();
        if left == 0 {
            if cur == outer {
                out.push(DiagonalStrictTableau {
                    levels: chain
                        .iter()
                        .map(|v| Partition::new(v.clone()))
                        .collect(),
                });
            }
            return;
        }
        for next in growths(&cur, outer, rows) {
            if !reachable(&next, left - 1) {
                continue;
            }
            chain.push(next);
            dfs(chain, left - 1, rows, outer, reachable, out);
            chain.pop();
        }
    }
    dfs(&mut chain, n, rows, &outer, &reachable, &mut out);
    out
}

/// A symbol of the primed alphabet 1' < 1 < 2' < 2 < ... < n' < n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub value: u32,
    pub primed: bool,
}

impl Symbol {
    fn rank(&self) -> (u32, u8) {
        (self.value, if self.primed { 0 } else { 1 })
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

/// A tableau over the primed alphabet: weak increase along rows and columns,
/// at most one i' per row, at most one i per column.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimedTableau {
    entries: BTreeMap<Cell, Symbol>,
}

impl PrimedTableau {
    pub fn entries(&self) -> &BTreeMap<Cell, Symbol> {
        &self.entries
    }

    /// The weight product over cells: unprimed k at content c contributes
    /// (x_k - a_c), primed k' contributes (y_k + a_c).
    pub fn weight(&self, a: &ParameterSequence, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::one();
        for (&(i, j), s) in &self.entries {
            let ac = a.value_at(j as i64 - i as i64);
            let k = s.value as usize - 1;
            if s.primed {
                acc *= &y[k] + &ac;
            } else {
                acc *= &x[k] - &ac;
            }
        }
        acc
    }

    fn weight_symbolic(&self, a: &ParameterSequence, n: usize) -> SuperPolynomial {
        let mut acc = SuperPolynomial::one(n);
        for (&(i, j), s) in &self.entries {
            let ac = a.value_at(j as i64 - i as i64);
            let var = if s.primed {
                SuperPolynomial::yvar(n, s.value as usize)
            } else {
                SuperPolynomial::xvar(n, s.value as usize)
            };
            let shift = SuperPolynomial::constant(n, if s.primed { ac } else { -ac });
            acc = acc.mul(&var.add(&shift));
        }
        acc
    }
}

/// Validates the four tableau conditions for a filling of the shape.
pub fn is_valid_primed(shape: &SkewShape, entries: &BTreeMap<Cell, Symbol>) -> bool {
    let cells = shape.cells();
    if entries.len() != cells.len() || !cells.iter().all(|c| entries.contains_key(c)) {
        return false;
    }
    for &(i, j) in &cells {
        let s = entries[&(i, j)];
        if let Some(left) = entries.get(&(i, j - 1)) {
            if *left > s {
                return false;
            }
        }
        if i > 1 {
            if let Some(up) = entries.get(&(i - 1, j)) {
                if *up > s {
                    return false;
                }
            }
        }
    }
    // At most one i' per row, one i per column.
    let mut row_primed: BTreeSet<(usize, u32)> = BTreeSet::new();
    let mut col_unprimed: BTreeSet<(usize, u32)> = BTreeSet::new();
    for (&(i, j), s) in entries {
        if s.primed {
            if !row_primed.insert((i, s.value)) {
                return false;
            }
        } else if !col_unprimed.insert((j, s.value)) {
            return false;
        }
    }
    true
}

/// All tableaux of the shape over the primed alphabet of order n, by direct
/// backtracking over the cells in reading order.
pub fn enumerate_primed(shape: &SkewShape, n: usize) -> Vec<PrimedTableau> {
    let cells = shape.cells();
    let symbols: Vec<Symbol> = (1..=n as u32)
        .flat_map(|v| [Symbol { value: v, primed: true }, Symbol { value: v, primed: false }])
        .collect();
    let mut out = Vec::new();
    let mut entries: BTreeMap<Cell, Symbol> = BTreeMap::new();
    fn go(
        idx: usize,
        cells: &[Cell],
        symbols: &[Symbol],
        entries: &mut BTreeMap<Cell, Symbol>,
        out: &mut Vec<PrimedTableau>,
    ) {
        if idx == cells.len() {
            out.push(PrimedTableau { entries: entries.clone() });
            return;
        }
        let (i, j) = cells[idx];
        let mut lower = Symbol { value: 1, primed: true };
        if let Some(&left) = entries.get(&(i, j - 1)) {
            lower = lower.max(left);
        }
        if i > 1 {
            if let Some(&up) = entries.get(&(i - 1, j)) {
                lower = lower.max(up);
            }
        }
        for &s in symbols.iter().filter(|&&s| s >= lower) {
            let clash = if s.primed {
                // One i' per row: scan the already-filled row prefix.
                entries.range((i, 1)..(i, j)).any(|(_, &t)| t == s)
            } else {
                // One i per column: scan the column above.
                (1..i).any(|r| entries.get(&(r, j)) == Some(&s))
            };
            if clash {
                continue;
            }
            entries.insert((i, j), s);
            go(idx + 1, cells, symbols, entries, out);
            entries.remove(&(i, j));
        }
    }
    go(0, &cells, &symbols, &mut entries, &mut out);
    out
}

/// Lifts a diagonal-strict tableau to its primed refinements: per level set
/// and per connected component the lowest-content cell picks i' or i, the
/// rest is forced (row-neighbour of the previous cell takes i, column
/// neighbour takes i').
pub fn lift_to_primed(t: &DiagonalStrictTableau) -> Vec<PrimedTableau> {
    let mut partial: Vec<BTreeMap<Cell, Symbol>> = vec![BTreeMap::new()];
    for level in 1..=t.order() {
        let value = level as u32;
        for comp in connected_components(&t.level_set(level)) {
            // Order the component by content; consecutive cells are
            // adjacent (row or column neighbours).
            let mut cells = comp.clone();
            cells.sort_by_key(|&(i, j)| j as i64 - i as i64);
            let mut variants: Vec<Vec<(Cell, Symbol)>> = Vec::new();
            for first_primed in [true, false] {
                let mut assignment = vec![(cells[0], Symbol { value, primed: first_primed })];
                for w in cells.windows(2) {
                    let same_row = w[0].0 == w[1].0;
                    assignment.push((w[1], Symbol { value, primed: !same_row }));
                }
                variants.push(assignment);
            }
            let mut next = Vec::with_capacity(partial.len() * 2);
            for base in &partial {
                for variant in &variants {
                    let mut m = base.clone();
                    for &(cell, s) in variant {
                        m.insert(cell, s);
                    }
                    next.push(m);
                }
            }
            partial = next;
        }
    }
    partial.into_iter().map(|entries| PrimedTableau { entries }).collect()
}

/// Weight skeleton of a diagonal-strict tableau: per nonempty level, the
/// entry value, component count and the interior-side contents that feed
/// the u- and v-factors. Lets sweeps evaluate many (sequence, point) pairs
/// without re-walking the cells.
#[derive(Clone, Debug)]
pub struct StripPlan {
    pub levels: Vec<(u32, usize, Vec<i64>, Vec<i64>)>,
}

/// Builds the weight skeleton of one tableau.
pub fn strip_plan(t: &DiagonalStrictTableau) -> StripPlan {
    let mut levels = Vec::new();
    for i in 1..=t.order() {
        let cells = t.level_set(i);
        if cells.is_empty() {
            continue;
        }
        let comps = connected_components(&cells);
        let mut u_contents = Vec::new();
        let mut v_contents = Vec::new();
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        for &(r, c) in &cells {
            if set.contains(&(r, c + 1)) {
                u_contents.push((c + 1) as i64 - r as i64);
            }
            if set.contains(&(r + 1, c)) {
                v_contents.push(c as i64 - r as i64);
            }
        }
        levels.push((i as u32, comps.len(), u_contents, v_contents));
    }
    StripPlan { levels }
}

/// Flat weight factors of a primed tableau: (content, value, primed).
pub fn primed_plan(t: &PrimedTableau) -> Vec<(i64, u32, bool)> {
    t.entries
        .iter()
        .map(|(&(i, j), s)| (j as i64 - i as i64, s.value, s.primed))
        .collect()
}

/// Flat weight factors of one path: (abscissa, level, diagonal).
pub fn path_plan(p: &Path) -> Vec<(i64, u32, bool)> {
    let mut out = Vec::new();
    for w in p.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        if x1 != x0 {
            out.push((x1, y1, y1 != y0));
        }
    }
    out
}

/// Flat weight factors of a path collection: (abscissa, level, diagonal).
pub fn collection_plan(l: &PathCollection) -> Vec<(i64, u32, bool)> {
    l.paths.iter().flat_map(path_plan).collect()
}

/// Sum route selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumRoute {
    /// Over diagonal-strict tableaux: products of skew-hook weights.
    Strips,
    /// Over primed tableaux: cellwise linear factors.
    Primed,
}

/// The combinatorial sum at a rational point (x_1..x_n; y_1..y_n).
pub fn combinatorial_sum(
    shape: &SkewShape,
    a: &ParameterSequence,
    x: &[Rat],
    y: &[Rat],
    route: SumRoute,
) -> Rat {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    match route {
        SumRoute::Strips => {
            let mut acc = Rat::zero();
            for t in enumerate_diagonal_strict(shape, n) {
                let mut term = Rat::one();
                for i in 1..=n {
                    let cells = t.level_set(i);
                    if cells.is_empty() {
                        continue;
                    }
                    term *= weight_of_cells_at(&cells, a, &x[i - 1], &y[i - 1]);
                }
                acc += term;
            }
            acc
        }
        SumRoute::Primed => enumerate_primed(shape, n)
            .iter()
            .map(|t| t.weight(a, x, y))
            .sum(),
    }
}

/// The combinatorial sum as an exact polynomial; kept to small sizes where
/// the term count stays tame.
pub fn combinatorial_sum_symbolic(
    shape: &SkewShape,
    a: &ParameterSequence,
    n: usize,
    route: SumRoute,
) -> SuperPolynomial {
    assert!(n <= 2 && shape.size() <= 6, "symbolic sums are limited to n <= 2, |shape| <= 6");
    match route {
        SumRoute::Strips => {
            let mut acc = SuperPolynomial::zero(n);
            for t in enumerate_diagonal_strict(shape, n) {
                let mut term = SuperPolynomial::one(n);
                for i in 1..=n {
                    let cells = t.level_set(i);
                    if cells.is_empty() {
                        continue;
                    }
                    let w = weight_of_cells(&cells, a);
                    let mut level = SuperPolynomial::zero(n);
                    let xv = SuperPolynomial::xvar(n, i);
                    let yv = SuperPolynomial::yvar(n, i);
                    for (&(du, dv), c) in &w.terms {
                        let mut mono = SuperPolynomial::constant(n, c.clone());
                        for _ in 0..du {
                            mono = mono.mul(&xv);
                        }
                        for _ in 0..dv {
                            mono = mono.mul(&yv);
                        }
                        level = level.add(&mono);
                    }
                    term = term.mul(&level);
                }
                acc = acc.add(&term);
            }
            acc
        }
        SumRoute::Primed => {
            let mut acc = SuperPolynomial::zero(n);
            for t in enumerate_primed(shape, n) {
                acc = acc.add(&t.weight_symbolic(a, n));
            }
            acc
        }
    }
}

/// One lattice path: the vertex list from (mu_i - i, 0) to (lambda_i - i, n),
/// steps right (1,0), diagonal (1,1) or up (0,1), first step never
/// horizontal.
pub type Path = Vec<(i64, u32)>;

/// A vertex-disjoint collection, one path per row of the outer diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCollection {
    pub paths: Vec<Path>,
}

fn enumerate_single_paths(start: i64, end: i64, n: usize) -> Vec<Path> {
    let mut out = Vec::new();
    let mut path: Path = vec![(start, 0)];
    fn go(path: &mut Path, end: i64, n: usize, out: &mut Vec<Path>) {
        let &(x, y) = path.last().unwrap();
        if (x, y as usize) == (end, n) {
            out.push(path.clone());
            return;
        }
        // Horizontal (any level, but never the first step).
        if path.len() > 1 && x < end {
            path.push((x + 1, y));
            go(path, end, n, out);
            path.pop();
        }
        if (y as usize) < n {
            if x < end {
                path.push((x + 1, y + 1));
                go(path, end, n, out);
                path.pop();
            }
            path.push((x, y + 1));
            go(path, end, n, out);
            path.pop();
        }
    }
    if end >= start {
        go(&mut path, end, n, &mut out);
    }
    out
}

/// All single paths per row, plus every vertex-disjoint combination given
/// as per-row indices into the first component.
pub fn enumerate_paths_indexed(shape: &SkewShape, n: usize) -> (Vec<Vec<Path>>, Vec<Vec<usize>>) {
    let rows = shape.outer().len();
    let per_row: Vec<Vec<Path>> = (1..=rows)
        .map(|i| {
            let start = shape.inner().row(i) as i64 - i as i64;
            let end = shape.outer().row(i) as i64 - i as i64;
            enumerate_single_paths(start, end, n)
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut used: BTreeSet<(i64, u32)> = BTreeSet::new();
    fn go(
        row: usize,
        per_row: &[Vec<Path>],
        chosen: &mut Vec<usize>,
        used: &mut BTreeSet<(i64, u32)>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == per_row.len() {
            out.push(chosen.clone());
            return;
        }
        'next: for (idx, path) in per_row[row].iter().enumerate() {
            for v in path {
                if used.contains(v) {
                    continue 'next;
                }
            }
            for v in path {
                used.insert(*v);
            }
            chosen.push(idx);
            go(row + 1, per_row, chosen, used, out);
            chosen.pop();
            for v in path {
                used.remove(v);
            }
        }
    }
    go(0, &per_row, &mut chosen, &mut used, &mut out);
    (per_row, out)
}

/// All vertex-disjoint collections for the shape (per-row start and end
/// abscissas mu_i - i and lambda_i - i).
pub fn enumerate_paths(shape: &SkewShape, n: usize) -> Vec<PathCollection> {
    let (per_row, index_sets) = enumerate_paths_indexed(shape, n);
    index_sets
        .into_iter()
        .map(|choice| PathCollection {
            paths: choice
                .into_iter()
                .enumerate()
                .map(|(row, idx)| per_row[row][idx].clone())
                .collect(),
        })
        .collect()
}

/// Weight of one path: horizontal step to (m,k) contributes x_k - a_m,
/// diagonal step to (m,k) contributes y_k + a_m, vertical steps 1.
pub fn path_weight(path: &Path, a: &ParameterSequence, x: &[Rat], y: &[Rat]) -> Rat {
    let mut acc = Rat::one();
    for w in path.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        if x1 == x0 {
            continue;
        }
        let am = a.value_at(x1);
        let k = (y1 - 1) as usize;
        if y1 == y0 {
            acc *= &x[k] - &am;
        } else {
            acc *= &y[k] + &am;
        }
    }
    acc
}

/// Product of the path weights of a collection.
pub fn collection_weight(
    l: &PathCollection,
    a: &ParameterSequence,
    x: &[Rat],
    y: &[Rat],
) -> Rat {
    l.paths.iter().map(|p| path_weight(p, a, x, y)).product()
}

/// The tableau encoded by a collection: a nonvertical step of path i ending
/// at (m, k) fills cell (i, m + i) with k (horizontal) or k' (diagonal).
pub fn collection_to_tableau(l: &PathCollection) -> PrimedTableau {
    let mut entries = BTreeMap::new();
    for (idx, path) in l.paths.iter().enumerate() {
        let i = idx + 1;
        for w in path.windows(2) {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            if x1 == x0 {
                continue;
            }
            let j = (x1 + i as i64) as usize;
            let primed = y1 != y0;
            entries.insert((i, j), Symbol { value: y1, primed });
        }
    }
    PrimedTableau { entries }
}

/// Rebuilds the unique path collection of a tableau (the inverse of
/// `collection_to_tableau`).
pub fn tableau_to_collection(t: &PrimedTableau, shape: &SkewShape, n: usize) -> PathCollection {
    let rows = shape.outer().len();
    let mut paths = Vec::with_capacity(rows);
    for i in 1..=rows {
        let start = shape.inner().row(i) as i64 - i as i64;
        let end = shape.outer().row(i) as i64 - i as i64;
        let mut path: Path = vec![(start, 0)];
        let mut x = start;
        let mut y = 0u32;
        for j in shape.inner().row(i) as usize + 1..=shape.outer().row(i) as usize {
            let s = t.entries[&(i, j)];
            let level = s.value;
            // Climb to the step's starting level, then move right.
            let pre = if s.primed { level - 1 } else { level };
            assert!(pre >= y, "tableau rows must weakly increase");
            while y < pre {
                y += 1;
                path.push((x, y));
            }
            x += 1;
            y = level;
            path.push((x, y));
        }
        while (y as usize) < n {
            y += 1;
            path.push((x, y));
        }
        assert_eq!(x, end);
        paths.push(path);
    }
    PathCollection { paths }
}

/// Values of the row generating functions h_{k|n}(x;y|b) for k = 0..=kmax:
/// 1 + sum_k h_k / (u|b)^k = prod (u + y_i)/(u - x_i).
pub fn h_numeric_table(kmax: u32, x: &[Rat], y: &[Rat], b: &ParameterSequence) -> Vec<Rat> {
    let order = kmax as usize;
    let mut target = Series::<Rat>::one(order);
    for xi in x {
        // 1/(1 - x/u).
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut pow = Rat::one();
        for _ in 0..=order {
            coeffs.push(pow.clone());
            pow *= xi;
        }
        target = target.mul(&Series::new(coeffs));
    }
    for yi in y {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = Rat::one();
        if order >= 1 {
            coeffs[1] = yi.clone();
        }
        target = target.mul(&Series::new(coeffs));
    }
    back_substitute(&target, b)
}

/// The Gessel-Viennot determinant det[h_{lambda_i - mu_j + j - i | n}] with
/// the column shifts tau^{mu_j - j + 1} a; equals the combinatorial sum.
pub fn gessel_viennot_determinant(
    shape: &SkewShape,
    a: &ParameterSequence,
    x: &[Rat],
    y: &[Rat],
) -> Rat {
    assert_eq!(x.len(), y.len());
    let l = shape.outer().len();
    let mut mat = vec![vec![Rat::zero(); l]; l];
    for j in 1..=l {
        let shifted = a.shift(shape.inner().row(j) as i64 - j as i64 + 1);
        let kmax = (1..=l)
            .map(|i| shape.outer().row(i) as i64 - shape.inner().row(j) as i64 + j as i64 - i as i64)
            .max()
            .unwrap()
            .max(0) as u32;
        let table = h_numeric_table(kmax, x, y, &shifted);
        for i in 1..=l {
            let k = shape.outer().row(i) as i64 - shape.inner().row(j) as i64 + j as i64 - i as i64;
            mat[i - 1][j - 1] = if k < 0 { Rat::zero() } else { table[k as usize].clone() };
        }
    }
    rat::det(&mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multischur::s_multi_skew;
    use crate::rat::{rint, rq};
    use crate::superpoly::{eval_lambda, specialize, EvalPoint};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn shape(outer: &[u32], inner: &[u32]) -> SkewShape {
        SkewShape::new(p(outer), p(inner))
    }

    fn fs() -> ParameterSequence {
        ParameterSequence::fs()
    }

    fn zero_seq() -> ParameterSequence {
        ParameterSequence::zero()
    }

    fn affine() -> ParameterSequence {
        ParameterSequence::affine(rq(1, 3), rint(-2))
    }

    #[test]
    fn single_cell_weight() {
        let w = skew_hook_weight(&shape(&[1], &[]), &affine());
        assert_eq!(w, BivarPoly::one().mul_linear(&rint(1), &rint(1), &rint(0)));
        assert_eq!(w.degree(), 1);
    }

    #[test]
    fn worked_example_weight() {
        // (4,2,2)/(1,1): (u+v)(u-a_{-1})(u-a_2)(u-a_3)(v+a_0)(v+a_1).
        let a = affine();
        let w = skew_hook_weight(&shape(&[4, 2, 2], &[1, 1]), &a);
        let mut expected = BivarPoly::one().mul_linear(&rint(1), &rint(1), &rint(0));
        for root in [-1i64, 2, 3] {
            expected = expected.mul_linear(&rint(1), &rint(0), &(-a.value_at(root)));
        }
        for off in [0i64, 1] {
            expected = expected.mul_linear(&rint(0), &rint(1), &a.value_at(off));
        }
        assert_eq!(w, expected);
        assert_eq!(w.degree(), 6);
    }

    #[test]
    fn two_component_weight() {
        // (3,1)/(2) has two far-apart cells: weight (u+v)^2.
        let w = skew_hook_weight(&shape(&[3, 1], &[2]), &fs());
        let uv = BivarPoly::one().mul_linear(&rint(1), &rint(1), &rint(0));
        assert_eq!(w, uv.mul(&uv));
    }

    #[test]
    #[should_panic(expected = "2x2")]
    fn weight_rejects_blocks() {
        skew_hook_weight(&shape(&[2, 2], &[]), &fs());
    }

    #[test]
    fn weight_duality() {
        // f_{nu;a}(v,u) = f_{nu';dual a}(u,v) for all no-2x2 shapes in a
        // 4x4 box.
        let a = affine();
        let dual = a.dual();
        for outer in crate::partition::partitions_in_box(4, 4) {
            for inner in crate::partition::subdiagrams(&outer) {
                let sh = SkewShape::new(outer.clone(), inner.clone());
                if sh.size() == 0 || !sh.has_no_2x2_block() {
                    continue;
                }
                let w = skew_hook_weight(&sh, &a);
                let wc = skew_hook_weight(&sh.conjugate(), &dual);
                assert_eq!(w.swap_uv(), wc, "{sh}");
            }
        }
    }

    #[test]
    fn diagonal_strict_counts() {
        assert_eq!(enumerate_diagonal_strict(&shape(&[1], &[]), 1).len(), 1);
        assert_eq!(enumerate_diagonal_strict(&shape(&[2, 2], &[]), 1).len(), 0);
        // Entries strictly increase along diagonals.
        for t in enumerate_diagonal_strict(&shape(&[3, 2], &[]), 3) {
            let e = t.entries();
            for (&(i, j), &v) in &e {
                if let Some(&w) = e.get(&(i + 1, j + 1)) {
                    assert!(w > v, "diagonal must strictly increase");
                }
                if let Some(&r) = e.get(&(i, j + 1)) {
                    assert!(r >= v);
                }
                if let Some(&d) = e.get(&(i + 1, j)) {
                    assert!(d >= v);
                }
            }
        }
    }

    #[test]
    fn diagonal_strict_matches_direct_fill() {
        // Oracle: brute-force cell filling checked against the definition.
        let sh = shape(&[3, 2], &[1]);
        let n = 2usize;
        let cells = sh.cells();
        let mut count = 0usize;
        let mut values = vec![0u32; cells.len()];
        fn ok(cells: &[(usize, usize)], values: &[u32], upto: usize) -> bool {
            let get = |ci: usize, cj: usize| -> Option<u32> {
                cells[..upto]
                    .iter()
                    .position(|&(i, j)| (i, j) == (ci, cj))
                    .map(|t| values[t])
            };
            let (i, j) = cells[upto - 1];
            let v = values[upto - 1];
            if let Some(left) = get(i, j.wrapping_sub(1)) {
                if left > v {
                    return false;
                }
            }
            if i > 1 {
                if let Some(up) = get(i - 1, j) {
                    if up > v {
                        return false;
                    }
                }
                if j > 1 {
                    if let Some(diag) = get(i - 1, j - 1) {
                        if diag >= v {
                            return false;
                        }
                    }
                }
            }
            true
        }
        fn fill(
            idx: usize,
            n: usize,
            cells: &[(usize, usize)],
            values: &mut Vec<u32>,
            count: &mut usize,
        ) {
            if idx == cells.len() {
                *count += 1;
                return;
            }
            for v in 1..=n as u32 {
                values[idx] = v;
                if ok(cells, values, idx + 1) {
                    fill(idx + 1, n, cells, values, count);
                }
            }
        }
        fill(0, n, &cells, &mut values, &mut count);
        assert_eq!(enumerate_diagonal_strict(&sh, n).len(), count);
    }

    #[test]
    fn primed_counts_and_lift() {
        assert_eq!(enumerate_primed(&shape(&[1], &[]), 1).len(), 2);
        assert_eq!(enumerate_primed(&shape(&[2, 2], &[]), 1).len(), 0);

        // Lifting each diagonal-strict tableau gives all primed tableaux,
        // 2^(components) per level set.
        for (outer, inner, n) in [([2, 1], [0, 0], 2usize), ([3, 1], [1, 0], 2), ([2, 2], [1, 0], 2)] {
            let sh = shape(&outer, &inner);
            let mut lifted: Vec<PrimedTableau> = Vec::new();
            for t in enumerate_diagonal_strict(&sh, n) {
                let lifts = lift_to_primed(&t);
                let comps: usize = (1..=n)
                    .map(|i| connected_components(&t.level_set(i)).len())
                    .sum();
                assert_eq!(lifts.len(), 1usize << comps);
                lifted.extend(lifts);
            }
            let mut brute = enumerate_primed(&sh, n);
            brute.sort();
            lifted.sort();
            assert_eq!(brute, lifted, "{sh}");
            for t in &brute {
                assert!(is_valid_primed(&sh, t.entries()));
            }
        }
    }

    #[test]
    fn combinatorial_routes_agree_pointwise() {
        let x = [rq(5, 2), rq(-1, 3), rq(7, 4)];
        let y = [rq(1, 5), rq(3, 2), rq(-2, 7)];
        for a in [zero_seq(), fs(), affine()] {
            for outer in crate::partition::partitions_in_box(3, 3) {
                for inner in crate::partition::subdiagrams(&outer) {
                    let sh = SkewShape::new(outer.clone(), inner.clone());
                    for n in 1..=3usize {
                        let s1 = combinatorial_sum(&sh, &a, &x[..n], &y[..n], SumRoute::Strips);
                        let s2 = combinatorial_sum(&sh, &a, &x[..n], &y[..n], SumRoute::Primed);
                        assert_eq!(s1, s2, "{sh} n={n} a={a}");
                    }
                }
            }
        }
    }

    #[test]
    fn combinatorial_sum_single_row() {
        // Shape (2), a = FS, n = 1: (x_1 + y_1)(x_1 - 1/2) = Fh_2(x_1;y_1).
        let sh = shape(&[2], &[]);
        let sym = combinatorial_sum_symbolic(&sh, &fs(), 1, SumRoute::Primed);
        let fh2 = specialize(&crate::multischur::h_multi(2, &fs()), 1);
        assert_eq!(sym, fh2);
        let x = SuperPolynomial::xvar(1, 1);
        let y = SuperPolynomial::yvar(1, 1);
        let half = SuperPolynomial::constant(1, rq(1, 2));
        assert_eq!(sym, x.add(&y).mul(&x.sub(&half)));
    }

    #[test]
    fn combinatorial_sum_classical_point() {
        // Shape (2,1), a = 0 at x=(1,2), y=(0,0): the classical Schur value.
        let sh = shape(&[2, 1], &[]);
        let val = combinatorial_sum(
            &sh,
            &zero_seq(),
            &[rint(1), rint(2)],
            &[rint(0), rint(0)],
            SumRoute::Strips,
        );
        let pt = EvalPoint::new(vec![rint(1), rint(2)], vec![rint(0), rint(0)]);
        assert_eq!(val, eval_lambda(&crate::lambda::schur(&p(&[2, 1])), &pt));
        assert_eq!(val, rint(6));
    }

    #[test]
    fn symbolic_sum_equals_specialized_skew() {
        for a in [zero_seq(), fs(), affine()] {
            for (outer, inner) in [(vec![2u32, 1], vec![]), (vec![3, 1], vec![1]), (vec![2, 2], vec![1])] {
                let sh = SkewShape::new(p(&outer), p(&inner));
                for n in 1..=2usize {
                    let sym = combinatorial_sum_symbolic(&sh, &a, n, SumRoute::Primed);
                    let det = specialize(&s_multi_skew(sh.outer(), sh.inner(), &a), n);
                    assert_eq!(sym, det, "{sh} n={n} a={a}");
                }
            }
        }
    }

    #[test]
    fn single_cell_paths() {
        // Shape (1), n = 1: one diagonal or vertical-then-horizontal path.
        let ls = enumerate_paths(&shape(&[1], &[]), 1);
        assert_eq!(ls.len(), 2);
        let a = affine();
        let x = [rq(5, 2)];
        let y = [rq(1, 5)];
        let total: Rat = ls.iter().map(|l| collection_weight(l, &a, &x, &y)).sum();
        assert_eq!(total, &x[0] + &y[0]);
    }

    #[test]
    fn path_sum_matches_combinatorial_sum() {
        let a = affine();
        let x = [rq(5, 2), rq(-1, 3)];
        let y = [rq(1, 5), rq(3, 2)];
        for (outer, inner) in [
            (vec![2u32, 1], vec![]),
            (vec![2, 2], vec![1]),
            (vec![3, 2, 1], vec![1, 1]),
        ] {
            let sh = SkewShape::new(p(&outer), p(&inner));
            for n in 1..=2usize {
                let by_paths: Rat = enumerate_paths(&sh, n)
                    .iter()
                    .map(|l| collection_weight(l, &a, &x[..n], &y[..n]))
                    .sum();
                let by_tableaux =
                    combinatorial_sum(&sh, &a, &x[..n], &y[..n], SumRoute::Primed);
                assert_eq!(by_paths, by_tableaux, "{sh} n={n}");
            }
        }
    }

    #[test]
    fn bijection_round_trip() {
        let sh = shape(&[2, 1], &[]);
        let n = 2usize;
        let collections = enumerate_paths(&sh, n);
        let mut tableaux: Vec<PrimedTableau> = Vec::new();
        for l in &collections {
            let t = collection_to_tableau(l);
            assert!(is_valid_primed(&sh, t.entries()));
            let back = tableau_to_collection(&t, &sh, n);
            assert_eq!(&back, l);
            tableaux.push(t);
        }
        tableaux.sort();
        tableaux.dedup();
        let mut brute = enumerate_primed(&sh, n);
        brute.sort();
        assert_eq!(tableaux, brute);
    }

    #[test]
    fn disjointness_matches_tableau_count() {
        // Collections with intersecting paths are excluded; the count then
        // matches the primed enumeration.
        let sh = shape(&[2, 2], &[1]);
        let n = 2usize;
        assert_eq!(enumerate_paths(&sh, n).len(), enumerate_primed(&sh, n).len());
    }

    #[test]
    fn path_weights_match_tableau_weights() {
        let a = fs();
        let x = [rq(5, 2), rq(-1, 3)];
        let y = [rq(1, 5), rq(3, 2)];
        let sh = shape(&[3, 1], &[1]);
        for l in enumerate_paths(&sh, 2) {
            let t = collection_to_tableau(&l);
            assert_eq!(
                collection_weight(&l, &a, &x, &y),
                t.weight(&a, &x, &y),
                "collection {l:?}"
            );
        }
    }

    #[test]
    fn gv_determinant_matches_sums() {
        let x = [rq(5, 2), rq(-1, 3)];
        let y = [rq(1, 5), rq(3, 2)];
        for a in [zero_seq(), fs(), affine()] {
            for (outer, inner) in [
                (vec![2u32, 1], vec![]),
                (vec![2, 2], vec![1]),
                (vec![3, 2], vec![1, 1]),
                (vec![3, 3], vec![]),
            ] {
                let sh = SkewShape::new(p(&outer), p(&inner));
                for n in 1..=2usize {
                    let det = gessel_viennot_determinant(&sh, &a, &x[..n], &y[..n]);
                    let sum = combinatorial_sum(&sh, &a, &x[..n], &y[..n], SumRoute::Primed);
                    assert_eq!(det, sum, "{sh} n={n} a={a}");
                }
            }
        }
    }

    #[test]
    fn gv_skew_identity_is_trivial() {
        let sh = shape(&[2, 1], &[2, 1]);
        assert_eq!(
            gessel_viennot_determinant(&sh, &fs(), &[rq(5, 2)], &[rq(1, 5)]),
            rint(1)
        );
    }

    #[test]
    fn h_numeric_branching_recursion() {
        // h_{k|n} = h_{k|n-1} + (x_n + y_n) sum_r h_{r|n-1} prod (x_n - a_t).
        let a = affine();
        let x = [rq(5, 2), rq(-1, 3)];
        let y = [rq(1, 5), rq(3, 2)];
        let kmax = 5u32;
        let full = h_numeric_table(kmax, &x, &y, &a);
        let small = h_numeric_table(kmax, &x[..1], &y[..1], &a);
        for k in 1..=kmax as usize {
            let mut acc = small[k].clone();
            for r in 0..k {
                let mut prod = &small[r] * (&x[1] + &y[1]);
                for t in 1..=(k - 1 - r) {
                    prod *= &x[1] - a.value_at((k - t) as i64);
                }
                acc += prod;
            }
            assert_eq!(acc, full[k], "k={k}");
        }
    }

    #[test]
    fn branching_through_intermediate_diagrams() {
        // Splitting the variables factors the sum through diagrams between
        // inner and outer; exhaustive for (2,2), n = 2, split 1|1.
        let a = affine();
        let x = [rq(5, 2), rq(-1, 3)];
        let y = [rq(1, 5), rq(3, 2)];
        let outer = p(&[2, 2]);
        for inner in crate::partition::subdiagrams(&outer) {
            let sh = SkewShape::new(outer.clone(), inner.clone());
            let full = combinatorial_sum(&sh, &a, &x, &y, SumRoute::Primed);
            let mut acc = Rat::zero();
            for mid in crate::partition::subdiagrams(&outer) {
                if !inner.is_subdiagram_of(&mid) {
                    continue;
                }
                let low = SkewShape::new(mid.clone(), inner.clone());
                let high = SkewShape::new(outer.clone(), mid.clone());
                acc += combinatorial_sum(&low, &a, &x[..1], &y[..1], SumRoute::Primed)
                    * combinatorial_sum(&high, &a, &x[1..], &y[1..], SumRoute::Primed);
            }
            assert_eq!(acc, full, "inner={inner:?}");
        }
    }

    #[test]
    fn stability_in_extra_variables() {
        // Appending x = y = 0 variables leaves the sum unchanged.
        let a = fs();
        let sh = shape(&[2, 1], &[]);
        let x = [rq(5, 2), rq(-1, 3)];
        let y = [rq(1, 5), rq(3, 2)];
        let base = combinatorial_sum(&sh, &a, &x[..2], &y[..2], SumRoute::Primed);
        for extra in 1..=2usize {
            let mut xe = x[..2].to_vec();
            let mut ye = y[..2].to_vec();
            xe.extend(vec![rint(0); extra]);
            ye.extend(vec![rint(0); extra]);
            assert_eq!(
                combinatorial_sum(&sh, &a, &xe, &ye, SumRoute::Primed),
                base,
                "extra={extra}"
            );
        }
    }
}
