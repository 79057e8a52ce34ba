//! Tableau realizations of `gl_N` crystals.
//!
//! * [`SstCrystal`]: semistandard tableaux of a fixed shape, entries `1..=N`.
//! * [`DualSstCrystal`]: the dual crystal, with letters `k∨` of weight `-ε_k`.
//! * [`BitableauxCrystal`]: pairs `(S, T)` subject to the column condition
//!   below, realizing the extremal weight crystal of a pair of partitions.
//!
//! A tableau is identified with its column word, read column by column from
//! right to left and from top to bottom inside each column, and operators
//! act through the signature rule on that word.
//!
//! Dual tableaux are drawn in the diagram of `ν` rotated by 180 degrees.
//! Storing entry `T(i, j)` at row `i` counted from the bottom and column `j`
//! counted from the right turns the rotated semistandard condition (for the
//! order `a∨ < b∨ ⇔ a > b`) into the ordinary semistandard condition on the
//! numbers `a`. [`DualTableau`] uses these coordinates.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::crystal::{
    components, decompose_multiplicities, gl_weight_label, signature, Color, Crystal, Op, Tensor,
};
use crate::error::{domain, Result};
use crate::partitions::{Partition, PartitionPair};

/// A semistandard tableau: rows weakly increase, columns strictly increase.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates the semistandard conditions and positivity of entries.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape.clone())?;
        if shape.contains(&0) {
            return domain("tableau rows must be nonempty");
        }
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return domain("tableau entries must be positive");
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return domain(format!("row {} is not weakly increasing", i + 1));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(b, a)| a >= b) {
                return domain(format!(
                    "a column is not strictly increasing at row {}",
                    i + 1
                ));
            }
        }
        Ok(Self { rows })
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at row `i`, column `j` (both from zero).
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    /// The tableau with `T(r, c) = r + 1`, the highest element of its crystal.
    pub fn highest(shape: &Partition) -> Self {
        Self {
            rows: shape
                .parts()
                .iter()
                .enumerate()
                .map(|(r, &len)| vec![r as u32 + 1; len])
                .collect(),
        }
    }

    /// Every semistandard tableau of `shape` with entries in `1..=n`, in order.
    pub fn all(shape: &Partition, n: u32) -> Vec<Tableau> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        fill(shape, n, 0, 0, &mut rows, &mut out);
        out.sort();
        out
    }
}

fn fill(
    shape: &Partition,
    n: u32,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    if r == shape.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    if c == shape.part(r + 1) {
        fill(shape, n, r + 1, 0, rows, out);
        return;
    }
    let lo_row = if c > 0 { rows[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=n {
        rows[r][c] = v;
        fill(shape, n, r, c + 1, rows, out);
    }
    rows[r][c] = 0;
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A tableau of dual letters, stored in bottom-right coordinates.
///
/// `rows()[i][j]` is the number `a` of the dual letter `a∨` sitting in the
/// `(i+1)`-th row from the bottom and `(j+1)`-th column from the right of
/// the rotated diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualTableau(Tableau);

impl DualTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Ok(Self(Tableau::new(rows)?))
    }

    pub fn shape(&self) -> Partition {
        self.0.shape()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        self.0.rows()
    }

    pub fn all(shape: &Partition, n: u32) -> Vec<DualTableau> {
        Tableau::all(shape, n)
            .into_iter()
            .map(DualTableau)
            .collect()
    }

    /// Rows of the rotated diagram, top to bottom and left to right.
    pub fn rotated_rows(&self) -> Vec<Vec<u32>> {
        self.0
            .rows
            .iter()
            .rev()
            .map(|r| r.iter().rev().copied().collect())
            .collect()
    }
}

impl fmt::Display for DualTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rotated_rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|a| format!("{a}∨"))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

impl fmt::Debug for DualTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cells of `shape` in column-word order: columns right to left, top to bottom.
fn sst_reading(shape: &Partition) -> Vec<(usize, usize)> {
    let conj = shape.conjugate();
    let mut cells = Vec::new();
    for j in (0..shape.part(1)).rev() {
        for i in 0..conj.part(j + 1) {
            cells.push((i, j));
        }
    }
    cells
}

/// Column-word order of the rotated diagram, in bottom-right coordinates.
fn dual_reading(shape: &Partition) -> Vec<(usize, usize)> {
    let conj = shape.conjugate();
    let mut cells = Vec::new();
    for j in 0..shape.part(1) {
        for i in (0..conj.part(j + 1)).rev() {
            cells.push((i, j));
        }
    }
    cells
}

/// `(ε_i, φ_i)` of a single natural letter.
fn nat_string(a: u32, i: i64) -> (usize, usize) {
    let a = i64::from(a);
    (usize::from(a == i + 1), usize::from(a == i))
}

/// `(ε_i, φ_i)` of a single dual letter `a∨`.
fn dual_string(a: u32, i: i64) -> (usize, usize) {
    let a = i64::from(a);
    (usize::from(a == i), usize::from(a == i + 1))
}

/// Applies `op` with color `i` to one natural letter.
fn nat_step(a: u32, op: Op) -> u32 {
    match op {
        Op::E => a - 1,
        Op::F => a + 1,
    }
}

/// Applies `op` with color `i` to one dual letter; `f̃_i` sends `(i+1)∨` to `i∨`.
fn dual_step(a: u32, op: Op) -> u32 {
    match op {
        Op::E => a + 1,
        Op::F => a - 1,
    }
}

fn gl_colors(n: u32) -> Vec<Color> {
    (1..i64::from(n)).map(Color::q).collect()
}

/// Crystal of semistandard tableaux of shape `μ` over `1..=N`.
#[derive(Clone, Debug)]
pub struct SstCrystal {
    shape: Partition,
    n: u32,
    reading: Vec<(usize, usize)>,
}

impl SstCrystal {
    pub fn new(shape: Partition, n: u32) -> Result<Self> {
        if n == 0 {
            return domain("alphabet size must be at least 1");
        }
        let reading = sst_reading(&shape);
        Ok(Self { shape, n, reading })
    }

    pub fn elements(&self) -> Vec<Tableau> {
        Tableau::all(&self.shape, self.n)
    }

    pub fn highest(&self) -> Tableau {
        Tableau::highest(&self.shape)
    }

    /// The column word of a tableau.
    pub fn word(&self, t: &Tableau) -> Vec<u32> {
        self.reading.iter().map(|&(i, j)| t.get(i, j)).collect()
    }

    fn act(&self, op: Op, c: Color, t: &Tableau) -> Option<Tableau> {
        let sig = signature(
            self.reading
                .iter()
                .map(|&(i, j)| nat_string(t.get(i, j), c.index)),
        );
        let k = sig.factor(op)?;
        let (i, j) = self.reading[k];
        let mut out = t.clone();
        out.rows[i][j] = nat_step(t.get(i, j), op);
        (out.rows[i][j] <= self.n).then_some(out)
    }
}

impl Crystal for SstCrystal {
    type Elem = Tableau;
    type Weight = Vec<i64>;

    fn colors(&self) -> Vec<Color> {
        gl_colors(self.n)
    }

    fn e(&self, c: Color, b: &Tableau) -> Option<Tableau> {
        self.act(Op::E, c, b)
    }

    fn f(&self, c: Color, b: &Tableau) -> Option<Tableau> {
        self.act(Op::F, c, b)
    }

    fn weight(&self, b: &Tableau) -> Vec<i64> {
        let mut w = vec![0; self.n as usize];
        for row in b.rows() {
            for &a in row {
                w[a as usize - 1] += 1;
            }
        }
        w
    }

    fn epsilon(&self, c: Color, b: &Tableau) -> usize {
        signature(
            self.reading
                .iter()
                .map(|&(i, j)| nat_string(b.get(i, j), c.index)),
        )
        .epsilon
    }

    fn phi(&self, c: Color, b: &Tableau) -> usize {
        signature(
            self.reading
                .iter()
                .map(|&(i, j)| nat_string(b.get(i, j), c.index)),
        )
        .phi
    }

    fn label(&self, b: &Tableau) -> String {
        b.to_string()
    }
}

/// Crystal of dual tableaux of shape `ν` (drawn rotated) over `N∨ < … < 1∨`.
#[derive(Clone, Debug)]
pub struct DualSstCrystal {
    shape: Partition,
    n: u32,
    reading: Vec<(usize, usize)>,
}

impl DualSstCrystal {
    pub fn new(shape: Partition, n: u32) -> Result<Self> {
        if n == 0 {
            return domain("alphabet size must be at least 1");
        }
        let reading = dual_reading(&shape);
        Ok(Self { shape, n, reading })
    }

    pub fn elements(&self) -> Vec<DualTableau> {
        DualTableau::all(&self.shape, self.n)
    }

    /// The highest element: the rotated tableau filled from `N∨` downwards.
    pub fn highest(&self) -> Result<DualTableau> {
        let len = self.shape.len() as u32;
        if len > self.n {
            return domain("shape does not fit the alphabet");
        }
        let rows = self
            .shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &l)| vec![self.n - len + 1 + r as u32; l])
            .collect();
        DualTableau::new(rows)
    }

    fn act(&self, op: Op, c: Color, t: &DualTableau) -> Option<DualTableau> {
        let sig = signature(
            self.reading
                .iter()
                .map(|&(i, j)| dual_string(t.0.get(i, j), c.index)),
        );
        let k = sig.factor(op)?;
        let (i, j) = self.reading[k];
        let mut out = t.clone();
        out.0.rows[i][j] = dual_step(t.0.get(i, j), op);
        (out.0.rows[i][j] >= 1 && out.0.rows[i][j] <= self.n).then_some(out)
    }
}

impl Crystal for DualSstCrystal {
    type Elem = DualTableau;
    type Weight = Vec<i64>;

    fn colors(&self) -> Vec<Color> {
        gl_colors(self.n)
    }

    fn e(&self, c: Color, b: &DualTableau) -> Option<DualTableau> {
        self.act(Op::E, c, b)
    }

    fn f(&self, c: Color, b: &DualTableau) -> Option<DualTableau> {
        self.act(Op::F, c, b)
    }

    fn weight(&self, b: &DualTableau) -> Vec<i64> {
        let mut w = vec![0; self.n as usize];
        for row in b.rows() {
            for &a in row {
                w[a as usize - 1] -= 1;
            }
        }
        w
    }

    fn epsilon(&self, c: Color, b: &DualTableau) -> usize {
        signature(
            self.reading
                .iter()
                .map(|&(i, j)| dual_string(b.0.get(i, j), c.index)),
        )
        .epsilon
    }

    fn phi(&self, c: Color, b: &DualTableau) -> usize {
        signature(
            self.reading
                .iter()
                .map(|&(i, j)| dual_string(b.0.get(i, j), c.index)),
        )
        .phi
    }

    fn label(&self, b: &DualTableau) -> String {
        b.to_string()
    }
}

/// A bitableau `(S, T)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiTableau {
    pub s: Tableau,
    pub t: DualTableau,
}

impl fmt::Display for BiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

impl fmt::Debug for BiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The column condition on a bitableau: for every `k ≥ 1`, the number of
/// first-column entries of `S` that are `≤ k` plus the number of
/// first-column entries `a∨` of `T` with `a ≤ k` is at most `k`.
pub fn bitableau_condition(s: &Tableau, t: &DualTableau) -> bool {
    let s_col: Vec<u32> = s.rows().iter().map(|r| r[0]).collect();
    let t_col: Vec<u32> = t.rows().iter().map(|r| r[0]).collect();
    let top = s_col
        .iter()
        .chain(&t_col)
        .copied()
        .max()
        .unwrap_or(0)
        .max((s_col.len() + t_col.len()) as u32);
    (1..=top).all(|k| {
        let a = s_col.iter().filter(|&&x| x <= k).count();
        let b = t_col.iter().filter(|&&x| x <= k).count();
        (a + b) as u32 <= k
    })
}

/// The bitableaux crystal `B_{μ,ν}` truncated to the alphabet `1..=N`.
#[derive(Clone, Debug)]
pub struct BitableauxCrystal {
    pub sst: SstCrystal,
    pub dual: DualSstCrystal,
    n: u32,
}

impl BitableauxCrystal {
    /// Requires `N ≥ ℓ(μ) + ℓ(ν)`.
    pub fn new(mu: Partition, nu: Partition, n: u32) -> Result<Self> {
        if (n as usize) < mu.len() + nu.len() || n == 0 {
            return domain(format!(
                "N = {n} is below ℓ(μ)+ℓ(ν) = {}",
                mu.len() + nu.len()
            ));
        }
        Ok(Self {
            sst: SstCrystal::new(mu, n)?,
            dual: DualSstCrystal::new(nu, n)?,
            n,
        })
    }

    pub fn elements(&self) -> Vec<BiTableau> {
        let ts = self.dual.elements();
        let mut out = Vec::new();
        for s in self.sst.elements() {
            for t in &ts {
                if bitableau_condition(&s, t) {
                    out.push(BiTableau {
                        s: s.clone(),
                        t: t.clone(),
                    });
                }
            }
        }
        out
    }

    fn strings(&self, c: Color, b: &BiTableau) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self
            .sst
            .reading
            .iter()
            .map(|&(i, j)| nat_string(b.s.get(i, j), c.index))
            .collect();
        v.extend(
            self.dual
                .reading
                .iter()
                .map(|&(i, j)| dual_string(b.t.0.get(i, j), c.index)),
        );
        v
    }

    fn act(&self, op: Op, c: Color, b: &BiTableau) -> Option<BiTableau> {
        let k = signature(self.strings(c, b)).factor(op)?;
        let mut out = b.clone();
        let ns = self.sst.reading.len();
        if k < ns {
            let (i, j) = self.sst.reading[k];
            out.s.rows[i][j] = nat_step(b.s.get(i, j), op);
            if out.s.rows[i][j] > self.n {
                return None;
            }
        } else {
            let (i, j) = self.dual.reading[k - ns];
            out.t.0.rows[i][j] = dual_step(b.t.0.get(i, j), op);
            if out.t.0.rows[i][j] == 0 || out.t.0.rows[i][j] > self.n {
                return None;
            }
        }
        Some(out)
    }
}

impl Crystal for BitableauxCrystal {
    type Elem = BiTableau;
    type Weight = Vec<i64>;

    fn colors(&self) -> Vec<Color> {
        gl_colors(self.n)
    }

    fn e(&self, c: Color, b: &BiTableau) -> Option<BiTableau> {
        self.act(Op::E, c, b)
    }

    fn f(&self, c: Color, b: &BiTableau) -> Option<BiTableau> {
        self.act(Op::F, c, b)
    }

    fn weight(&self, b: &BiTableau) -> Vec<i64> {
        let w1 = self.sst.weight(&b.s);
        let w2 = self.dual.weight(&b.t);
        w1.iter().zip(&w2).map(|(a, b)| a + b).collect()
    }

    fn epsilon(&self, c: Color, b: &BiTableau) -> usize {
        signature(self.strings(c, b)).epsilon
    }

    fn phi(&self, c: Color, b: &BiTableau) -> usize {
        signature(self.strings(c, b)).phi
    }

    fn label(&self, b: &BiTableau) -> String {
        b.to_string()
    }
}

/// Builds the three tableau crystals for the usual `gl_N` checks.
pub fn sst_crystal(mu: &Partition, n: u32) -> Result<SstCrystal> {
    SstCrystal::new(mu.clone(), n)
}

pub fn dual_sst_crystal(nu: &Partition, n: u32) -> Result<DualSstCrystal> {
    DualSstCrystal::new(nu.clone(), n)
}

pub fn bitableaux_crystal(mu: &Partition, nu: &Partition, n: u32) -> Result<BitableauxCrystal> {
    BitableauxCrystal::new(mu.clone(), nu.clone(), n)
}

/// Decomposes `SST_N(μ) ⊗ SST∨_N(ν)` into irreducibles labelled by pairs.
pub fn tensor_multiplicities(
    mu: &Partition,
    nu: &Partition,
    n: u32,
    budget: usize,
) -> Result<BTreeMap<PartitionPair, usize>> {
    let left = sst_crystal(mu, n)?;
    let right = dual_sst_crystal(nu, n)?;
    let lefts = left.elements();
    let rights = right.elements();
    let seeds: Vec<_> = lefts
        .iter()
        .flat_map(|a| rights.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let t = Tensor::new(left, right);
    decompose_multiplicities(&t, &seeds, budget, gl_weight_label)
}

/// Smallest `N` in `n0..=n_max` from which the tensor multiplicity table no
/// longer changes up to `n_max`.
pub fn stabilization_rank(
    mu: &Partition,
    nu: &Partition,
    n0: u32,
    n_max: u32,
    budget: usize,
) -> Result<u32> {
    let n0 = n0.max((mu.len() + nu.len()) as u32).max(1);
    let top = tensor_multiplicities(mu, nu, n_max, budget)?;
    for n in n0..=n_max {
        if tensor_multiplicities(mu, nu, n, budget)? == top {
            return Ok(n);
        }
    }
    Ok(n_max)
}

/// Littlewood-Richardson coefficients `c^λ_{μν}` for every `λ`, counted as
/// highest weight elements of `SST_N(μ) ⊗ SST_N(ν)`.
///
/// The rank is `N = ℓ(μ) + ℓ(ν)`, which bounds `ℓ(λ)` for every nonzero
/// coefficient; pass a larger `n` to check stability.
pub fn lr_by_crystal(
    mu: &Partition,
    nu: &Partition,
    n: Option<u32>,
) -> Result<BTreeMap<Partition, u64>> {
    let n = n.unwrap_or((mu.len() + nu.len()).max(1) as u32);
    let t = Tensor::new(sst_crystal(mu, n)?, sst_crystal(nu, n)?);
    // A highest element of a tensor product has a highest left factor.
    let tops: Vec<Tableau> = t
        .left
        .elements()
        .into_iter()
        .filter(|b| t.left.is_highest(b))
        .collect();
    let mut out = BTreeMap::new();
    for b2 in t.right.elements() {
        for b1 in &tops {
            let b = (b1.clone(), b2.clone());
            if t.is_highest(&b) {
                let w = t.weight(&b);
                let lam = Partition::from_unsorted(w.iter().map(|&x| x as usize).collect());
                *out.entry(lam).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// Checks that the truncated `B_{μ,ν}` is connected and isomorphic, as a
/// colored graph, to the component of `SST∨_N(ν) ⊗ SST_N(μ)` through the
/// tensor of the two highest elements.
pub fn verify_bitableaux_iso(mu: &Partition, nu: &Partition, n: u32) -> Result<bool> {
    let bt = bitableaux_crystal(mu, nu, n)?;
    let elems = bt.elements();
    let comps = components(&bt, &elems, crate::crystal::DEFAULT_BUDGET)?;
    if comps.len() != 1 {
        return Ok(false);
    }
    let Some(h1) = comps[0].highest.clone() else {
        return Ok(false);
    };

    let tensor = Tensor::new(dual_sst_crystal(nu, n)?, sst_crystal(mu, n)?);
    let seed = (tensor.left.highest()?, tensor.right.highest());
    let comp2 = components(&tensor, &[seed], crate::crystal::DEFAULT_BUDGET)?;
    let Some(h2) = comp2[0].highest.clone() else {
        return Ok(false);
    };
    if bt.weight(&h1) != tensor.weight(&h2) || comp2[0].len() != comps[0].len() {
        return Ok(false);
    }
    Ok(graphs_match(&bt, &tensor, h1, h2))
}

/// Simultaneous breadth-first walk from two base points, checking that every
/// operator is defined on both sides or on neither and that the induced
/// correspondence is a weight-preserving bijection.
pub fn graphs_match<A, B>(a: &A, b: &B, a0: A::Elem, b0: B::Elem) -> bool
where
    A: Crystal,
    B: Crystal<Weight = A::Weight>,
{
    let colors = a.colors();
    if colors != b.colors() {
        return false;
    }
    let mut fwd: HashMap<A::Elem, B::Elem> = HashMap::new();
    let mut back: HashMap<B::Elem, A::Elem> = HashMap::new();
    fwd.insert(a0.clone(), b0.clone());
    back.insert(b0.clone(), a0.clone());
    let mut queue = VecDeque::from([(a0, b0)]);
    while let Some((x, y)) = queue.pop_front() {
        if a.weight(&x) != b.weight(&y) {
            return false;
        }
        for &c in &colors {
            for op in [Op::E, Op::F] {
                match (a.apply(op, c, &x), b.apply(op, c, &y)) {
                    (None, None) => {}
                    (Some(nx), Some(ny)) => match (fwd.get(&nx), back.get(&ny)) {
                        (None, None) => {
                            fwd.insert(nx.clone(), ny.clone());
                            back.insert(ny.clone(), nx.clone());
                            queue.push_back((nx, ny));
                        }
                        (Some(my), Some(mx)) if *my == ny && *mx == nx => {}
                        _ => return false,
                    },
                    _ => return false,
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{check_axioms, gl_pairing, DEFAULT_BUDGET};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn sst_sizes() {
        assert_eq!(SstCrystal::new(p("1"), 3).unwrap().elements().len(), 3);
        assert_eq!(SstCrystal::new(p("2,1"), 3).unwrap().elements().len(), 8);
        let empty = SstCrystal::new(p(""), 3).unwrap();
        let els = empty.elements();
        assert_eq!(els.len(), 1);
        assert!(empty
            .colors()
            .iter()
            .all(|&c| empty.f(c, &els[0]).is_none() && empty.e(c, &els[0]).is_none()));
    }

    #[test]
    fn single_box_string() {
        let c = SstCrystal::new(p("1"), 2).unwrap();
        let t = Tableau::new(vec![vec![1]]).unwrap();
        assert_eq!(c.epsilon(Color::q(1), &t), 0);
        assert_eq!(c.phi(Color::q(1), &t), 1);
    }

    #[test]
    fn dual_chain() {
        let d = DualSstCrystal::new(p("1"), 3).unwrap();
        let three = DualTableau::new(vec![vec![3]]).unwrap();
        let two = d.f(Color::q(2), &three).unwrap();
        assert_eq!(two.rows(), &[vec![2]]);
        let one = d.f(Color::q(1), &two).unwrap();
        assert_eq!(one.rows(), &[vec![1]]);
        assert_eq!(d.highest().unwrap(), three);
        let col = DualSstCrystal::new(p("1,1"), 2).unwrap().elements();
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].to_string(), "[2∨|1∨]");
    }

    #[test]
    fn bitableau_condition_examples() {
        let s = Tableau::new(vec![vec![1]]).unwrap();
        assert!(!bitableau_condition(
            &s,
            &DualTableau::new(vec![vec![1]]).unwrap()
        ));
        assert!(bitableau_condition(
            &s,
            &DualTableau::new(vec![vec![2]]).unwrap()
        ));
        let b = BitableauxCrystal::new(p("1"), p("1"), 2).unwrap();
        let els = b.elements();
        assert_eq!(els.len(), 3);
        assert_eq!(components(&b, &els, DEFAULT_BUDGET).unwrap().len(), 1);
        assert!(BitableauxCrystal::new(p("1"), p("1"), 1).is_err());
    }

    #[test]
    fn bitableaux_without_dual_part_is_sst() {
        let b = BitableauxCrystal::new(p("2,1"), p(""), 3).unwrap();
        let s = SstCrystal::new(p("2,1"), 3).unwrap();
        assert_eq!(b.elements().len(), s.elements().len());
        let h = b.elements().into_iter().find(|x| b.is_highest(x)).unwrap();
        assert!(graphs_match(&b, &s, h, s.highest()));
    }

    #[test]
    fn axioms_hold() {
        let s = SstCrystal::new(p("2,1"), 3).unwrap();
        check_axioms(&s, &s.elements(), gl_pairing).unwrap();
        let d = DualSstCrystal::new(p("2,1"), 3).unwrap();
        check_axioms(&d, &d.elements(), gl_pairing).unwrap();
        let b = BitableauxCrystal::new(p("2"), p("1"), 4).unwrap();
        check_axioms(&b, &b.elements(), gl_pairing).unwrap();
    }

    #[test]
    fn isomorphism_examples() {
        assert!(verify_bitableaux_iso(&p("1"), &p("1"), 3).unwrap());
        assert!(verify_bitableaux_iso(&p("2"), &p("1"), 4).unwrap());
        assert!(verify_bitableaux_iso(&p(""), &p(""), 2).unwrap());
    }

    #[test]
    fn tensor_examples() {
        let t = tensor_multiplicities(&p("1"), &p("1"), 3, DEFAULT_BUDGET).unwrap();
        let expect: BTreeMap<_, _> = [
            (PartitionPair::new(p("1"), p("1")), 1),
            (PartitionPair::default(), 1),
        ]
        .into();
        assert_eq!(t, expect);
        let t = tensor_multiplicities(&p(""), &p("2"), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(t, [(PartitionPair::new(p(""), p("2")), 1)].into());
    }

    #[test]
    fn lr_small() {
        let t = lr_by_crystal(&p("2,1"), &p("2,1"), None).unwrap();
        assert_eq!(t[&p("3,2,1")], 2);
        assert_eq!(t[&p("4,2")], 1);
    }
}
