//! Matrix crystals.
//!
//! [`Matrix01`] is a finite window of rows `lo..=hi` and columns `1..=n` of a
//! semi-infinite 0-1 matrix whose rows above the window are all ones and whose
//! rows below are all zeros. Under the row family `gl` (colors `i`), the
//! columns are tensor factors read left to right and a single column moves a
//! one from row `i` to row `i + 1`. Under the column family (colors `ṗ j`) the
//! rows are tensor factors read bottom to top and a single row moves a one
//! from column `j` to column `j + 1`.
//!
//! [`MatrixNat`] is a finitely supported matrix of nonnegative integers with
//! rows indexed by `r ≤ 0` and columns by `c ≥ 1`; the entry at `(r, c)` has
//! weight `ε_c - ε_r`. Rows are crystals of symmetric powers for the colors
//! `i ≥ 1` (tensored from `r = 0` downwards), columns are crystals of dual
//! symmetric powers for the colors `i ≤ -1` (tensored from `c = 1`
//! rightwards), and `f̃_0` increments the corner entry `(0, 1)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::crystal::{components, signature, Color, Crystal, Side, Signature};
use crate::error::{domain, Error, Result};
use crate::partitions::{pairing_h_lambda, GlWeight, Partition, PartitionPair};

/// A window of a semi-infinite 0-1 matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix01 {
    lo: i64,
    hi: i64,
    n: usize,
    bits: Vec<Vec<u8>>,
}

impl Matrix01 {
    /// Rows `lo, lo + 1, …` given top to bottom. Every row has the same
    /// positive length and holds only zeros and ones.
    pub fn new(lo: i64, rows: Vec<Vec<u8>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return domain("a matrix window needs at least one row");
        };
        let n = first.len();
        if n == 0 {
            return domain("a matrix window needs at least one column");
        }
        if rows.iter().any(|r| r.len() != n) {
            return domain("matrix rows have different lengths");
        }
        if rows.iter().flatten().any(|&b| b > 1) {
            return domain("matrix entries must be 0 or 1");
        }
        let hi = lo + rows.len() as i64 - 1;
        Ok(Self {
            lo,
            hi,
            n,
            bits: rows,
        })
    }

    pub fn zeros(lo: i64, hi: i64, n: usize) -> Result<Self> {
        if hi < lo {
            return domain(format!("empty row window [{lo}..{hi}]"));
        }
        Self::new(lo, vec![vec![0; n]; (hi - lo + 1) as usize])
    }

    /// All `2^{mn}` matrices on rows `1..=m`, in increasing order.
    pub fn all(m: usize, n: usize) -> Vec<Matrix01> {
        let cells = m * n;
        let mut out: Vec<Matrix01> = (0..1u64 << cells)
            .map(|mask| {
                let bits = (0..m)
                    .map(|i| (0..n).map(|j| ((mask >> (i * n + j)) & 1) as u8).collect())
                    .collect();
                Matrix01 {
                    lo: 1,
                    hi: m as i64,
                    n,
                    bits,
                }
            })
            .collect();
        out.sort();
        out
    }

    /// The row window `(lo, hi)`.
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.bits
    }

    /// Entry `(i, j)`, reading the padding outside the window.
    pub fn bit(&self, i: i64, j: usize) -> u8 {
        assert!(
            (1..=self.n).contains(&j),
            "column {j} outside 1..={}",
            self.n
        );
        if i < self.lo {
            1
        } else if i > self.hi {
            0
        } else {
            self.bits[(i - self.lo) as usize][j - 1]
        }
    }

    fn set(&mut self, i: i64, j: usize, v: u8) {
        self.bits[(i - self.lo) as usize][j - 1] = v;
    }

    /// Number of ones in each window row.
    pub fn row_sums(&self) -> Vec<i64> {
        self.bits
            .iter()
            .map(|r| r.iter().map(|&b| i64::from(b)).sum())
            .collect()
    }

    /// Number of ones in each column, inside the window.
    pub fn col_sums(&self) -> Vec<i64> {
        (1..=self.n)
            .map(|j| self.bits.iter().map(|r| i64::from(r[j - 1])).sum())
            .collect()
    }

    /// Ones in rows `≥ 1` minus zeros in rows `≤ 0`, padding included.
    ///
    /// A column whose ones are exactly the rows `≤ k` has charge `k`.
    pub fn charge(&self) -> i64 {
        self.col_sums().iter().map(|s| s + self.lo - 1).sum()
    }

    /// Signature of the column word for the row color `i`; any `i` is allowed.
    pub fn q_signature(&self, i: i64) -> Signature {
        signature((1..=self.n).map(|j| {
            let (a, b) = (self.bit(i, j), self.bit(i + 1, j));
            (usize::from(a == 0 && b == 1), usize::from(a == 1 && b == 0))
        }))
    }

    /// Signature of the row word, bottom row first, for the column color `j`.
    pub fn p_signature(&self, j: usize) -> Signature {
        signature((self.lo..=self.hi).rev().map(|i| {
            let (a, b) = (self.bit(i, j), self.bit(i, j + 1));
            (usize::from(a == 0 && b == 1), usize::from(a == 1 && b == 0))
        }))
    }

    fn q_move(&self, i: i64, factor: usize, raise: bool) -> Option<Matrix01> {
        let j = factor + 1;
        if i < self.lo || i + 1 > self.hi {
            return None;
        }
        let mut out = self.clone();
        out.set(i, j, u8::from(raise));
        out.set(i + 1, j, u8::from(!raise));
        Some(out)
    }

    fn p_move(&self, j: usize, factor: usize, raise: bool) -> Option<Matrix01> {
        let i = self.hi - factor as i64;
        let mut out = self.clone();
        out.set(i, j, u8::from(raise));
        out.set(i, j + 1, u8::from(!raise));
        Some(out)
    }
}

impl fmt::Display for Matrix01 {
    /// Rows top to bottom separated by `|`, e.g. `10|01`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .bits
            .iter()
            .map(|r| r.iter().map(|b| char::from(b'0' + b)).collect())
            .collect();
        write!(f, "{}", rows.join("|"))
    }
}

impl fmt::Debug for Matrix01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.lo)
    }
}

/// The staircase `M(λ)` with `M(λ)_{ij} = 1` iff `i ≤ λ_j`, on rows `lo..=hi`.
pub fn highest_matrix(lambda: &[i64], lo: i64, hi: i64) -> Result<Matrix01> {
    if lambda.is_empty() {
        return domain("λ must have at least one entry");
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return domain(format!("{lambda:?} is not weakly decreasing"));
    }
    if let Some(bad) = lambda.iter().find(|&&l| l < lo - 1 || l > hi) {
        return domain(format!(
            "λ entry {bad} does not fit the window [{lo}..{hi}]"
        ));
    }
    let mut m = Matrix01::zeros(lo, hi, lambda.len())?;
    for (j, &l) in lambda.iter().enumerate() {
        for i in lo..=l {
            m.set(i, j + 1, 1);
        }
    }
    Ok(m)
}

/// `M^n(μ, ν)`, the staircase of the dominant vector of `(μ, ν)` in rank `n`,
/// on the smallest window holding it.
pub fn pair_highest_matrix(mu_nu: &PartitionPair, n: usize) -> Result<Matrix01> {
    let lambda = mu_nu.to_dominant(n)?;
    if lambda.is_empty() {
        return domain("rank must be positive");
    }
    let lo = *lambda.last().unwrap();
    let hi = lambda[0].max(lo);
    highest_matrix(&lambda, lo, hi)
}

/// Weight of a matrix for the two families: row sums, then column sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiWeight {
    pub q: Vec<i64>,
    pub p: Vec<i64>,
}

/// The crystal on all 0-1 matrices of a fixed window, with both families.
#[derive(Clone, Copy, Debug)]
pub struct MatrixCrystal {
    lo: i64,
    hi: i64,
    n: usize,
}

impl MatrixCrystal {
    pub fn new(lo: i64, hi: i64, n: usize) -> Result<Self> {
        if hi < lo || n == 0 {
            return domain("the window and column count must be nonempty");
        }
        Ok(Self { lo, hi, n })
    }

    /// Number of rows.
    pub fn m(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> Vec<Matrix01> {
        Matrix01::all(self.m(), self.n)
            .into_iter()
            .map(|mut x| {
                x.lo = self.lo;
                x.hi = self.hi;
                x
            })
            .collect()
    }

    fn sig(&self, c: Color, b: &Matrix01) -> Signature {
        match c.side {
            Side::Q => b.q_signature(c.index),
            Side::P => b.p_signature(c.index as usize),
        }
    }

    fn act(&self, c: Color, b: &Matrix01, raise: bool) -> Option<Matrix01> {
        let s = self.sig(c, b);
        let factor = if raise { s.e_factor } else { s.f_factor }?;
        match c.side {
            Side::Q => b.q_move(c.index, factor, raise),
            Side::P => b.p_move(c.index as usize, factor, raise),
        }
    }
}

/// `matrix_crystal(m, n)`: all `m × n` 0-1 matrices on rows `1..=m`.
pub fn matrix_crystal(m: usize, n: usize) -> Result<MatrixCrystal> {
    if m == 0 {
        return domain("m must be positive");
    }
    MatrixCrystal::new(1, m as i64, n)
}

impl Crystal for MatrixCrystal {
    type Elem = Matrix01;
    type Weight = BiWeight;

    fn colors(&self) -> Vec<Color> {
        let q = (self.lo..self.hi).map(Color::q);
        let p = (1..self.n as i64).map(Color::p);
        q.chain(p).collect()
    }

    fn e(&self, c: Color, b: &Matrix01) -> Option<Matrix01> {
        self.act(c, b, true)
    }

    fn f(&self, c: Color, b: &Matrix01) -> Option<Matrix01> {
        self.act(c, b, false)
    }

    fn weight(&self, b: &Matrix01) -> BiWeight {
        BiWeight {
            q: b.row_sums(),
            p: b.col_sums(),
        }
    }

    fn epsilon(&self, c: Color, b: &Matrix01) -> usize {
        self.sig(c, b).epsilon
    }

    fn phi(&self, c: Color, b: &Matrix01) -> usize {
        self.sig(c, b).phi
    }

    fn label(&self, b: &Matrix01) -> String {
        b.to_string()
    }
}

/// `⟨h_c, wt⟩` for weights of a [`MatrixCrystal`] whose window starts at row 1.
pub fn matrix_pairing(c: Color, w: &BiWeight) -> i64 {
    let v = match c.side {
        Side::Q => &w.q,
        Side::P => &w.p,
    };
    let i = c.index as usize;
    v[i - 1] - v[i]
}

/// One isotypic block of the joint decomposition of the matrix crystal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoweComponent {
    /// Row-family highest weight; the column family sees `λ'`.
    pub lambda: Partition,
    pub multiplicity: usize,
    /// Size of a single component.
    pub size: usize,
}

/// Decomposes the `m × n` matrix crystal under both families at once.
///
/// Each component must have a unique highest element of the form `M(λ')`
/// with row sums `λ` and column sums `λ'`.
pub fn howe_decompose(m: usize, n: usize, budget: usize) -> Result<Vec<HoweComponent>> {
    let crystal = matrix_crystal(m, n)?;
    let cells = m * n;
    if cells >= 63 || (1usize << cells) > budget {
        let needed = if cells >= 63 {
            usize::MAX
        } else {
            1usize << cells
        };
        return Err(Error::Budget {
            explored: needed,
            budget,
        });
    }
    let elems = crystal.elements();
    let mut table: BTreeMap<Partition, (usize, usize)> = BTreeMap::new();
    for comp in components(&crystal, &elems, budget)? {
        let Some(top) = comp.highest.as_ref() else {
            return domain("a component of the matrix crystal has no unique highest element");
        };
        let rows: Vec<usize> = top.row_sums().iter().map(|&x| x as usize).collect();
        let lambda = Partition::new(rows.clone()).map_err(|_| {
            Error::Domain(format!("row sums {rows:?} of {top} are not a partition"))
        })?;
        let cols: Vec<i64> = top.col_sums();
        let conj: Vec<i64> = (1..=n).map(|j| lambda.conjugate().part(j) as i64).collect();
        if cols != conj {
            return domain(format!(
                "column sums of {top} are not the conjugate of {lambda}"
            ));
        }
        if *top != highest_matrix(&cols, 1, m as i64)? {
            return domain(format!("{top} is highest but not a staircase"));
        }
        let entry = table.entry(lambda).or_insert((0, comp.len()));
        if entry.1 != comp.len() {
            return domain("components with equal labels have different sizes");
        }
        entry.0 += 1;
    }
    let mut out: Vec<HoweComponent> = table
        .into_iter()
        .map(|(lambda, (multiplicity, size))| HoweComponent {
            lambda,
            multiplicity,
            size,
        })
        .collect();
    out.sort_by(|a, b| {
        a.lambda
            .size()
            .cmp(&b.lambda.size())
            .then_with(|| b.lambda.cmp(&a.lambda))
    });
    Ok(out)
}

/// A finitely supported matrix of nonnegative integers on `(r ≤ 0) × (c ≥ 1)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixNat {
    entries: BTreeMap<(i64, i64), u64>,
}

/// Corner entry incremented by `f̃_0`.
pub const CORNER: (i64, i64) = (0, 1);

impl MatrixNat {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a matrix from `((r, c), value)` entries; zeros are dropped.
    pub fn new<I: IntoIterator<Item = ((i64, i64), u64)>>(entries: I) -> Result<Self> {
        let mut out = Self::zero();
        for ((r, c), v) in entries {
            if r > 0 || c < 1 {
                return domain(format!(
                    "entry ({r},{c}) lies outside rows ≤ 0, columns ≥ 1"
                ));
            }
            if v > 0 {
                *out.entries.entry((r, c)).or_insert(0) += v;
            }
        }
        Ok(out)
    }

    /// `diag(λ)`: the part `λ_k` sits at `(1 - k, k)`.
    pub fn diag(lambda: &Partition) -> Self {
        let entries = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(k, &p)| ((-(k as i64), k as i64 + 1), p as u64))
            .collect();
        Self { entries }
    }

    pub fn get(&self, r: i64, c: i64) -> u64 {
        self.entries.get(&(r, c)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all entries.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `Σ M_{rc} (ε_c - ε_r)`.
    pub fn weight(&self) -> GlWeight {
        let mut w = GlWeight::zero();
        for (&(r, c), &v) in &self.entries {
            w.add_eps(c, v as i64);
            w.add_eps(r, -(v as i64));
        }
        w
    }

    fn bump(&mut self, at: (i64, i64), delta: i64) {
        let v = self.get(at.0, at.1) as i64 + delta;
        debug_assert!(v >= 0);
        if v == 0 {
            self.entries.remove(&at);
        } else {
            self.entries.insert(at, v as u64);
        }
    }

    /// Signature for a color `i ≠ 0`, with the positions of its factors.
    fn string(&self, i: i64) -> (Signature, Vec<i64>) {
        assert!(i != 0, "color 0 has no signature");
        if i > 0 {
            let mut rows: Vec<i64> = self
                .entries
                .keys()
                .filter(|&&(_, c)| c == i || c == i + 1)
                .map(|&(r, _)| r)
                .collect();
            rows.sort_unstable_by(|a, b| b.cmp(a));
            rows.dedup();
            let sig = signature(
                rows.iter()
                    .map(|&r| (self.get(r, i + 1) as usize, self.get(r, i) as usize)),
            );
            (sig, rows)
        } else {
            let mut cols: Vec<i64> = self
                .entries
                .keys()
                .filter(|&&(r, _)| r == i || r == i + 1)
                .map(|&(_, c)| c)
                .collect();
            cols.sort_unstable();
            cols.dedup();
            let sig = signature(
                cols.iter()
                    .map(|&c| (self.get(i, c) as usize, self.get(i + 1, c) as usize)),
            );
            (sig, cols)
        }
    }

    /// `ε_i` for any color; `ε_0` is the corner entry.
    pub fn epsilon(&self, i: i64) -> usize {
        if i == 0 {
            return self.get(CORNER.0, CORNER.1) as usize;
        }
        self.string(i).0.epsilon
    }

    /// `φ_i` for a color `i ≠ 0`.
    pub fn phi(&self, i: i64) -> usize {
        self.string(i).0.phi
    }

    /// `f̃_i`; for `i = 0` this always succeeds.
    pub fn f(&self, i: i64) -> Option<MatrixNat> {
        let mut out = self.clone();
        if i == 0 {
            out.bump(CORNER, 1);
            return Some(out);
        }
        let (sig, pos) = self.string(i);
        let k = pos[sig.f_factor?];
        if i > 0 {
            out.bump((k, i), -1);
            out.bump((k, i + 1), 1);
        } else {
            out.bump((i + 1, k), -1);
            out.bump((i, k), 1);
        }
        Some(out)
    }

    /// `ẽ_i`.
    pub fn e(&self, i: i64) -> Option<MatrixNat> {
        let mut out = self.clone();
        if i == 0 {
            if self.get(CORNER.0, CORNER.1) == 0 {
                return None;
            }
            out.bump(CORNER, -1);
            return Some(out);
        }
        let (sig, pos) = self.string(i);
        let k = pos[sig.e_factor?];
        if i > 0 {
            out.bump((k, i + 1), -1);
            out.bump((k, i), 1);
        } else {
            out.bump((i, k), -1);
            out.bump((i + 1, k), 1);
        }
        Some(out)
    }

    /// Colors on which some `ε_i` may be nonzero.
    fn color_range(&self) -> std::ops::RangeInclusive<i64> {
        let min_r = self.entries.keys().map(|k| k.0).min().unwrap_or(0);
        let max_c = self.entries.keys().map(|k| k.1).max().unwrap_or(1);
        (min_r - 1)..=max_c
    }
}

impl fmt::Display for MatrixNat {
    /// `(0,1)=2 (-1,2)=1`; the zero matrix prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|((r, c), v)| format!("({r},{c})={v}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for MatrixNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The integer matrix crystal restricted to the colors `±1..=±span`.
///
/// Color `0` is left out because `f̃_0` never terminates; use
/// [`MatrixNat::f`] with `i = 0` directly.
#[derive(Clone, Copy, Debug)]
pub struct BosonCrystal {
    pub span: i64,
}

impl Crystal for BosonCrystal {
    type Elem = MatrixNat;
    type Weight = GlWeight;

    fn colors(&self) -> Vec<Color> {
        (-self.span..=self.span)
            .filter(|&i| i != 0)
            .map(Color::q)
            .collect()
    }

    fn e(&self, c: Color, b: &MatrixNat) -> Option<MatrixNat> {
        b.e(c.index)
    }

    fn f(&self, c: Color, b: &MatrixNat) -> Option<MatrixNat> {
        b.f(c.index)
    }

    fn weight(&self, b: &MatrixNat) -> GlWeight {
        b.weight()
    }

    fn epsilon(&self, c: Color, b: &MatrixNat) -> usize {
        b.epsilon(c.index)
    }

    fn phi(&self, c: Color, b: &MatrixNat) -> usize {
        b.phi(c.index)
    }

    fn label(&self, b: &MatrixNat) -> String {
        b.to_string()
    }
}

/// Checks `γ ∈ wt(𝓜)`, ignoring any `Λ_0` component.
pub fn in_boson_weights(gamma: &GlWeight) -> bool {
    gamma
        .coords()
        .all(|(i, c)| if i > 0 { c >= 0 } else { c <= 0 })
        && gamma.level_sum() == 0
}

/// Every matrix of weight `γ`.
///
/// The weight fixes the row sums (`-γ_r` for `r ≤ 0`) and the column sums
/// (`γ_c` for `c ≥ 1`), so the enumeration is exactly the set of
/// contingency tables with those margins and nothing can escape it.
pub fn boson_weight_space(gamma: &GlWeight, budget: usize) -> Result<Vec<MatrixNat>> {
    if !in_boson_weights(gamma) {
        return domain(format!("{gamma:?} is not a weight of the vacuum module"));
    }
    let mut rows: Vec<(i64, u64)> = gamma
        .coords()
        .filter(|&(i, _)| i <= 0)
        .map(|(i, c)| (i, (-c) as u64))
        .collect();
    rows.sort_unstable_by_key(|r| std::cmp::Reverse(r.0));
    let cols: Vec<(i64, u64)> = gamma
        .coords()
        .filter(|&(i, _)| i > 0)
        .map(|(i, c)| (i, c as u64))
        .collect();

    struct Ctx<'a> {
        rows: &'a [(i64, u64)],
        cols: &'a [(i64, u64)],
        budget: usize,
    }

    fn fill_row(
        ctx: &Ctx,
        r: usize,
        c: usize,
        left_in_row: u64,
        remaining: &mut Vec<u64>,
        cur: &mut Vec<((i64, i64), u64)>,
        out: &mut Vec<MatrixNat>,
    ) -> Result<()> {
        if r == ctx.rows.len() {
            if remaining.iter().all(|&x| x == 0) {
                if out.len() >= ctx.budget {
                    return Err(Error::Budget {
                        explored: out.len(),
                        budget: ctx.budget,
                    });
                }
                out.push(MatrixNat {
                    entries: cur.iter().copied().collect(),
                });
            }
            return Ok(());
        }
        if c == ctx.cols.len() {
            if left_in_row == 0 {
                let next = ctx.rows.get(r + 1).map_or(0, |x| x.1);
                fill_row(ctx, r + 1, 0, next, remaining, cur, out)?;
            }
            return Ok(());
        }
        let cap = left_in_row.min(remaining[c]);
        for v in 0..=cap {
            remaining[c] -= v;
            if v > 0 {
                cur.push(((ctx.rows[r].0, ctx.cols[c].0), v));
            }
            fill_row(ctx, r, c + 1, left_in_row - v, remaining, cur, out)?;
            if v > 0 {
                cur.pop();
            }
            remaining[c] += v;
        }
        Ok(())
    }

    let ctx = Ctx {
        rows: &rows,
        cols: &cols,
        budget,
    };
    let mut remaining: Vec<u64> = cols.iter().map(|c| c.1).collect();
    let mut out = Vec::new();
    let first = rows.first().map_or(0, |x| x.1);
    fill_row(&ctx, 0, 0, first, &mut remaining, &mut Vec::new(), &mut out)?;
    out.sort();
    Ok(out)
}

/// The set `H^n_γ(μ, ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSet {
    pub base: PartitionPair,
    pub level: usize,
    pub weight: GlWeight,
    pub members: Vec<MatrixNat>,
}

impl HSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Matrices `b` of weight `γ` such that `M^n(μ,ν) ⊗ b` is highest, i.e.
/// `ε_i(b) ≤ φ_i(M^n(μ,ν))` for every color `i`.
///
/// `γ` is read modulo `Λ_0`.
pub fn h_set(base: &PartitionPair, gamma: &GlWeight, n: usize, budget: usize) -> Result<HSet> {
    if n < base.len() || n == 0 {
        return domain(format!("level {n} is below ℓ(μ)+ℓ(ν) = {}", base.len()));
    }
    let gamma = gamma.without_lambda0();
    let top = pair_highest_matrix(base, n)?;
    let members = boson_weight_space(&gamma, budget)?
        .into_iter()
        .filter(|b| {
            b.color_range()
                .all(|i| b.epsilon(i) <= top.q_signature(i).phi)
        })
        .collect();
    Ok(HSet {
        base: base.clone(),
        level: n,
        weight: gamma,
        members,
    })
}

/// A level from which `H^n_γ(μ, ν)` no longer grows.
///
/// For colors `i ≠ 0` the bound `φ_i(M^n(μ,ν))` does not depend on `n`, and
/// `ε_0(b)` never exceeds the total of `b`, which is the positive part of `γ`.
pub fn stable_level(base: &PartitionPair, gamma: &GlWeight) -> usize {
    let total: i64 = gamma.coords().filter(|&(i, _)| i > 0).map(|(_, c)| c).sum();
    (base.len() + total.max(0) as usize).max(1)
}

/// `H_γ(μ, ν)` at [`stable_level`].
pub fn h_set_stable(base: &PartitionPair, gamma: &GlWeight, budget: usize) -> Result<HSet> {
    h_set(base, gamma, stable_level(base, gamma), budget)
}

/// `n^{μ,ν}_{ζ,η} = |H_γ(ζ, η)|` with `γ = Λ_{μ,ν} - Λ_{ζ,η}`; zero unless
/// `(ζ,η) ≤ (μ,ν)`.
pub fn socle_multiplicity(
    top: &PartitionPair,
    bottom: &PartitionPair,
    budget: usize,
) -> Result<usize> {
    let gamma = (&GlWeight::lambda_pair(top) - &GlWeight::lambda_pair(bottom)).without_lambda0();
    if !in_boson_weights(&gamma) {
        return Ok(0);
    }
    Ok(h_set_stable(bottom, &gamma, budget)?.size())
}

/// Cross-check of `φ_i(M^n(μ,ν))` against `⟨h_i, Λ^n_{μ,ν}⟩`.
pub fn highest_phi_matches_pairing(base: &PartitionPair, n: usize) -> Result<bool> {
    let top = pair_highest_matrix(base, n)?;
    let (lo, hi) = top.window();
    for i in (lo - 2)..=(hi + 2) {
        let s = top.q_signature(i);
        if s.epsilon != 0 || s.phi as i64 != pairing_h_lambda(i, base, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{check_axioms, DEFAULT_BUDGET};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> PartitionPair {
        PartitionPair::new(p(a), p(b))
    }

    #[test]
    fn single_column_and_row_moves() {
        let c = matrix_crystal(2, 1).unwrap();
        let top = Matrix01::new(1, vec![vec![1], vec![0]]).unwrap();
        let down = Matrix01::new(1, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(c.f(Color::q(1), &top), Some(down.clone()));
        assert_eq!(c.e(Color::q(1), &down), Some(top));

        let r = matrix_crystal(1, 2).unwrap();
        let left = Matrix01::new(1, vec![vec![1, 0]]).unwrap();
        let right = Matrix01::new(1, vec![vec![0, 1]]).unwrap();
        assert_eq!(r.f(Color::p(1), &left), Some(right.clone()));
        assert_eq!(r.f(Color::p(1), &right), None);
    }

    #[test]
    fn staircase_is_highest() {
        let c = matrix_crystal(2, 2).unwrap();
        let m = highest_matrix(&[1, 0], 1, 2).unwrap();
        for col in c.colors() {
            assert_eq!(c.epsilon(col, &m), 0, "color {col}");
        }
    }

    #[test]
    fn staircase_examples() {
        let m = highest_matrix(&[0, 0], -1, 2).unwrap();
        assert_eq!(m.to_string(), "11|11|00|00");
        let m = highest_matrix(&[1, -1], -2, 2).unwrap();
        assert_eq!(m.to_string(), "11|11|10|10|00");
        let m = highest_matrix(&[2, 1], 1, 2).unwrap();
        assert_eq!(m.to_string(), "11|10");
        assert!(highest_matrix(&[3, 0], 1, 2).is_err());
        assert!(highest_matrix(&[0, 1], 1, 2).is_err());
        assert_eq!(highest_matrix(&[2, 1], 1, 2).unwrap().charge(), 3);
        assert_eq!(highest_matrix(&[1, -1], -2, 2).unwrap().charge(), 0);
    }

    #[test]
    fn axioms() {
        let c = matrix_crystal(2, 3).unwrap();
        check_axioms(&c, &c.elements(), matrix_pairing).unwrap();
    }

    #[test]
    fn howe_small() {
        let got = howe_decompose(2, 2, DEFAULT_BUDGET).unwrap();
        let labels: Vec<String> = got.iter().map(|h| h.lambda.to_string()).collect();
        assert_eq!(labels, ["∅", "(1)", "(2)", "(1,1)", "(2,1)", "(2,2)"]);
        let sizes: Vec<usize> = got.iter().map(|h| h.size).collect();
        assert_eq!(sizes, [1, 4, 3, 3, 4, 1]);
        assert!(got.iter().all(|h| h.multiplicity == 1));

        let row: Vec<(String, usize)> = howe_decompose(1, 3, DEFAULT_BUDGET)
            .unwrap()
            .iter()
            .map(|h| (h.lambda.to_string(), h.size))
            .collect();
        assert_eq!(
            row,
            [
                ("∅".into(), 1),
                ("(1)".into(), 3),
                ("(2)".into(), 3),
                ("(3)".into(), 1)
            ]
        );
        let col: Vec<usize> = howe_decompose(2, 1, DEFAULT_BUDGET)
            .unwrap()
            .iter()
            .map(|h| h.size)
            .collect();
        assert_eq!(col, [1, 2, 1]);
    }

    #[test]
    fn howe_budget() {
        assert!(matches!(
            howe_decompose(3, 3, 100),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn vacuum_and_corner() {
        assert_eq!(
            boson_weight_space(&GlWeight::zero(), 10).unwrap(),
            vec![MatrixNat::zero()]
        );
        let g = -&GlWeight::alpha(0);
        let space = boson_weight_space(&g, 10).unwrap();
        assert_eq!(space, vec![MatrixNat::zero().f(0).unwrap()]);
        assert_eq!(MatrixNat::zero().f(0).unwrap().weight(), g);
        // Margins force the single corner entry 2.
        let g2 = &g + &g;
        assert_eq!(boson_weight_space(&g2, 10).unwrap().len(), 1);
        assert!(boson_weight_space(&GlWeight::alpha(0), 10).is_err());
    }

    #[test]
    fn weight_axiom_for_all_colors() {
        let b = MatrixNat::new([((0, 1), 2), ((-1, 2), 1), ((0, 3), 1), ((-2, 1), 1)]).unwrap();
        for i in -3..=3 {
            if let Some(fb) = b.f(i) {
                assert_eq!(&fb.weight() + &GlWeight::alpha(i), b.weight(), "color {i}");
                assert_eq!(fb.e(i), Some(b.clone()));
            }
        }
    }

    #[test]
    fn diag_matrices_are_the_highest_elements() {
        let crystal = BosonCrystal { span: 4 };
        for g in [
            &GlWeight::eps(1) - &GlWeight::eps(0),
            &(&GlWeight::eps(1) + &GlWeight::eps(2)) - &(&GlWeight::eps(0) + &GlWeight::eps(-1)),
            &(&GlWeight::eps(1) + &GlWeight::eps(1)) - &(&GlWeight::eps(0) + &GlWeight::eps(-1)),
        ] {
            let tops: Vec<MatrixNat> = boson_weight_space(&g, 1000)
                .unwrap()
                .into_iter()
                .filter(|b| crystal.is_highest(b))
                .collect();
            for t in &tops {
                let parts: Vec<usize> = (1..=4).map(|k| t.get(1 - k, k) as usize).collect();
                assert_eq!(*t, MatrixNat::diag(&Partition::from_unsorted(parts)));
            }
        }
        let d = MatrixNat::diag(&p("3,1"));
        assert!(crystal.is_highest(&d));
        check_axioms(&crystal, &[d], |c, w: &GlWeight| w.pair_h(c.index)).unwrap();
    }

    #[test]
    fn h_set_examples() {
        let g = -&GlWeight::alpha(0);
        assert_eq!(h_set(&pair("", ""), &g, 2, 100).unwrap().size(), 1);
        for n in 3..6 {
            assert_eq!(
                h_set(&pair("2,1", "1"), &GlWeight::zero(), n, 100)
                    .unwrap()
                    .size(),
                1
            );
        }
        let top = pair("2", "2");
        let bottom = pair("1", "1");
        assert_eq!(socle_multiplicity(&top, &bottom, 100).unwrap(), 1);
        // Too small a level leaves no room for the corner.
        assert_eq!(h_set(&bottom, &g, 2, 100).unwrap().size(), 0);
    }

    #[test]
    fn highest_phi_is_the_pairing() {
        for (a, b) in [("", ""), ("2,1", "1"), ("3", "2,2"), ("1,1,1", "")] {
            let base = pair(a, b);
            for n in base.len().max(1)..base.len() + 3 {
                assert!(
                    highest_phi_matches_pairing(&base, n).unwrap(),
                    "{base} n={n}"
                );
            }
        }
    }
}
