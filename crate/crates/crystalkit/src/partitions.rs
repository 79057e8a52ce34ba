//! Partitions, partition pairs, Littlewood-Richardson coefficients and the
//! `gl` weight bookkeeping attached to pairs of partitions.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing; zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("parts {parts:?} are not weakly decreasing"));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, counting from one; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let first = self.part(1);
        Self(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, by size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// Partitions contained in this one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(
            outer: &[usize],
            i: usize,
            max: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == outer.len() {
                out.push(Partition::from_unsorted(cur.clone()));
                return;
            }
            for p in 0..=outer[i].min(max) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `"3,2,1"`; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Self::from_unsorted(parts)
    }
}

/// A pair `(μ, ν)` labelling the extremal weight `ε_μ - ε_ν` type data.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionPair {
    pub plus: Partition,
    pub minus: Partition,
}

impl PartitionPair {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        Self { plus, minus }
    }

    /// `ℓ(μ) + ℓ(ν)`.
    pub fn len(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    /// The dominant vector `λ ∈ Z^n_+`: `μ`, then zeros, then `-reverse(ν)`.
    pub fn to_dominant(&self, n: usize) -> Result<Vec<i64>> {
        if n < self.len() {
            return domain(format!("rank {n} is below ℓ(μ)+ℓ(ν) = {}", self.len()));
        }
        let mut v = vec![0i64; n];
        for (i, &p) in self.plus.parts().iter().enumerate() {
            v[i] = p as i64;
        }
        for (i, &p) in self.minus.parts().iter().enumerate() {
            v[n - 1 - i] = -(p as i64);
        }
        Ok(v)
    }

    /// Inverse of [`PartitionPair::to_dominant`].
    pub fn from_dominant(lambda: &[i64]) -> Result<Self> {
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{lambda:?} is not weakly decreasing"));
        }
        let plus = lambda
            .iter()
            .filter(|&&x| x > 0)
            .map(|&x| x as usize)
            .collect();
        let minus = lambda
            .iter()
            .rev()
            .filter(|&&x| x < 0)
            .map(|&x| (-x) as usize)
            .collect();
        Ok(Self {
            plus: Partition(plus),
            minus: Partition(minus),
        })
    }

    /// All pairs with `|μ| ≤ a` and `|ν| ≤ b`.
    pub fn all_up_to(a: usize, b: usize) -> Vec<PartitionPair> {
        let mut out = Vec::new();
        for mu in Partition::all_up_to(a) {
            for nu in Partition::all_up_to(b) {
                out.push(PartitionPair::new(mu.clone(), nu));
            }
        }
        out
    }

    /// All `(ζ, η) ≤ (μ, ν)` in the order of [`pair_order_ge`].
    pub fn below(&self) -> Vec<PartitionPair> {
        let mut out = Vec::new();
        let diff = self.plus.size() as i64 - self.minus.size() as i64;
        for zeta in self.plus.subpartitions() {
            for eta in self.minus.subpartitions() {
                if zeta.size() as i64 - eta.size() as i64 == diff {
                    out.push(PartitionPair::new(zeta.clone(), eta));
                }
            }
        }
        out
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.plus, self.minus)
    }
}

impl fmt::Debug for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(μ,ν) ≥ (ζ,η)`: equal differences `|μ|-|ν| = |ζ|-|η|` and componentwise containment.
pub fn pair_order_ge(a: &PartitionPair, b: &PartitionPair) -> bool {
    a.plus.size() as i64 - a.minus.size() as i64 == b.plus.size() as i64 - b.minus.size() as i64
        && a.plus.contains(&b.plus)
        && a.minus.contains(&b.minus)
}

/// `⟨h_i, Λ^n_{μ,ν}⟩`, the number of entries of the dominant vector equal to `i`.
pub fn pairing_h_lambda(i: i64, mu_nu: &PartitionPair, n: usize) -> Result<i64> {
    let lambda = mu_nu.to_dominant(n)?;
    Ok(lambda.iter().filter(|&&x| x == i).count() as i64)
}

thread_local! {
    static LR_CACHE: RefCell<HashMap<(Partition, Partition, Partition), u64>> =
        RefCell::new(HashMap::new());
}

/// The Littlewood-Richardson coefficient `c^λ_{μν}`.
///
/// Counts semistandard fillings of the skew shape `λ/μ` with content `ν`
/// whose reverse reading word (rows right to left, top to bottom) is a
/// lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = LR_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let v = count_lr_tableaux(lambda, mu, nu);
    LR_CACHE.with(|c| c.borrow_mut().insert(key, v));
    v
}

fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Cells in reverse reading order: row by row, right to left.
    let rows = lambda.len();
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (mu.part(r + 1)..lambda.part(r + 1)).rev() {
            cells.push((r, c));
        }
    }
    let width = lambda.part(1);
    let mut grid = vec![vec![0usize; width]; rows];
    let mut content = vec![0usize; nu.len() + 1];

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        mu: &'a Partition,
        lambda: &'a Partition,
        nu: &'a Partition,
    }

    fn rec(ctx: &Ctx, k: usize, grid: &mut [Vec<usize>], content: &mut [usize]) -> u64 {
        if k == ctx.cells.len() {
            return 1;
        }
        let (r, c) = ctx.cells[k];
        // Row weakly increasing: bounded above by the right neighbour.
        let hi_row = if c + 1 < ctx.lambda.part(r + 1) {
            grid[r][c + 1]
        } else {
            usize::MAX
        };
        // Column strict: above neighbour inside the skew shape gives a lower bound.
        let lo = if r > 0 && c >= ctx.mu.part(r) {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let hi = hi_row.min(ctx.nu.len()).min(r + 1);
        let mut total = 0;
        for v in lo..=hi {
            if content[v] >= ctx.nu.part(v) {
                continue;
            }
            if v > 1 && content[v] + 1 > content[v - 1] {
                continue;
            }
            content[v] += 1;
            grid[r][c] = v;
            total += rec(ctx, k + 1, grid, content);
            content[v] -= 1;
        }
        grid[r][c] = 0;
        total
    }

    let ctx = Ctx {
        cells: &cells,
        mu,
        lambda,
        nu,
    };
    rec(&ctx, 0, &mut grid, &mut content)
}

/// The product `s_μ s_ν = Σ_λ c^λ_{μν} s_λ`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let n = mu.size() + nu.size();
    Partition::all_of_size(n)
        .into_iter()
        .filter(|l| l.contains(mu) && l.contains(nu))
        .filter_map(|l| {
            let c = lr_coefficient(&l, mu, nu);
            (c > 0).then_some((l, c))
        })
        .collect()
}

/// An element of the weight lattice `⊕ Z ε_i ⊕ Z Λ_0`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlWeight {
    coords: BTreeMap<i64, i64>,
    lambda0: i64,
}

impl GlWeight {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit vector `ε_i`.
    pub fn eps(i: i64) -> Self {
        let mut w = Self::zero();
        w.add_eps(i, 1);
        w
    }

    /// `Λ_0`.
    pub fn lambda0_unit() -> Self {
        Self {
            coords: BTreeMap::new(),
            lambda0: 1,
        }
    }

    /// The simple root `α_i = ε_i - ε_{i+1}`.
    pub fn alpha(i: i64) -> Self {
        let mut w = Self::eps(i);
        w.add_eps(i + 1, -1);
        w
    }

    /// The fundamental weight `Λ_k`: `Λ_0 + ε_1 + … + ε_k` for `k ≥ 0`,
    /// `Λ_0 - (ε_{k+1} + … + ε_0)` for `k < 0`.
    pub fn fundamental(k: i64) -> Self {
        let mut w = Self::lambda0_unit();
        if k >= 0 {
            for j in 1..=k {
                w.add_eps(j, 1);
            }
        } else {
            for j in (k + 1)..=0 {
                w.add_eps(j, -1);
            }
        }
        w
    }

    /// `Λ_λ = Σ_j Λ_{λ_j}` for an integer vector `λ`.
    pub fn from_dominant(lambda: &[i64]) -> Self {
        lambda
            .iter()
            .fold(Self::zero(), |acc, &k| &acc + &Self::fundamental(k))
    }

    /// `Λ^n_{μ,ν}`.
    pub fn lambda_n(mu_nu: &PartitionPair, n: usize) -> Result<Self> {
        Ok(Self::from_dominant(&mu_nu.to_dominant(n)?))
    }

    /// `Λ_{μ,ν} = Λ^n_{μ,ν} - (n - ℓ(μ) - ℓ(ν)) Λ_0`, independent of `n`.
    pub fn lambda_pair(mu_nu: &PartitionPair) -> Self {
        let n = mu_nu.len();
        Self::lambda_n(mu_nu, n).expect("n = ℓ(μ)+ℓ(ν) is always admissible")
    }

    pub fn add_eps(&mut self, i: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coords.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coords.remove(&i);
        }
    }

    /// Coefficient of `ε_i`.
    pub fn coord(&self, i: i64) -> i64 {
        self.coords.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero `ε` coordinates in ascending index order.
    pub fn coords(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coords.iter().map(|(i, c)| (*i, *c))
    }

    pub fn lambda0(&self) -> i64 {
        self.lambda0
    }

    /// The same weight with its `Λ_0` component removed.
    pub fn without_lambda0(&self) -> Self {
        Self {
            coords: self.coords.clone(),
            lambda0: 0,
        }
    }

    /// `⟨E_kk, self⟩`, using `⟨E_kk, Λ_0⟩ = 1` for `k ≤ 0` and `0` otherwise.
    pub fn pair_e(&self, k: i64) -> i64 {
        self.coord(k) + if k <= 0 { self.lambda0 } else { 0 }
    }

    /// `⟨h_i, self⟩` with `h_i = E_ii - E_{i+1,i+1}`.
    pub fn pair_h(&self, i: i64) -> i64 {
        self.pair_e(i) - self.pair_e(i + 1)
    }

    /// Sum of the `ε` coordinates.
    pub fn level_sum(&self) -> i64 {
        self.coords.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty() && self.lambda0 == 0
    }
}

impl std::ops::Add for &GlWeight {
    type Output = GlWeight;
    fn add(self, rhs: &GlWeight) -> GlWeight {
        let mut out = self.clone();
        for (i, c) in &rhs.coords {
            out.add_eps(*i, *c);
        }
        out.lambda0 += rhs.lambda0;
        out
    }
}

impl std::ops::Neg for &GlWeight {
    type Output = GlWeight;
    fn neg(self) -> GlWeight {
        GlWeight {
            coords: self.coords.iter().map(|(i, c)| (*i, -c)).collect(),
            lambda0: -self.lambda0,
        }
    }
}

impl std::ops::Sub for &GlWeight {
    type Output = GlWeight;
    fn sub(self, rhs: &GlWeight) -> GlWeight {
        self + &(-rhs)
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .coords
            .iter()
            .map(|(i, c)| format!("{c}ε{i}"))
            .collect();
        if self.lambda0 != 0 {
            terms.push(format!("{}Λ0", self.lambda0));
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("1"), &p(""), &p("1")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
        assert_eq!(lr_coefficient(&p("2,2"), &p("1"), &p("2")), 0);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..9).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn pair_order_examples() {
        let pp = |a: &str, b: &str| PartitionPair::new(p(a), p(b));
        assert!(pair_order_ge(&pp("1", "1"), &pp("", "")));
        assert!(!pair_order_ge(&pp("2", "1"), &pp("", "")));
        // Differences 3-1 and 1-0 disagree, so these are incomparable.
        assert!(!pair_order_ge(&pp("2,1", "1"), &pp("1", "")));
        assert!(pair_order_ge(&pp("2,1", "1"), &pp("2", "")));
    }

    #[test]
    fn pairings() {
        let pp = |a: &str, b: &str| PartitionPair::new(p(a), p(b));
        assert_eq!(pairing_h_lambda(0, &pp("", ""), 3).unwrap(), 3);
        assert_eq!(pairing_h_lambda(1, &pp("1", "1"), 2).unwrap(), 1);
        assert_eq!(pairing_h_lambda(5, &pp("1", "1"), 2).unwrap(), 0);
        assert!(pairing_h_lambda(0, &pp("1", "1"), 1).is_err());
        // ⟨h_i, Λ^n_{μ,ν}⟩ agrees with the explicit weight.
        for mn in PartitionPair::all_up_to(3, 3) {
            let n = mn.len() + 2;
            let w = GlWeight::lambda_n(&mn, n).unwrap();
            for i in -5..5 {
                assert_eq!(
                    w.pair_h(i),
                    pairing_h_lambda(i, &mn, n).unwrap(),
                    "{mn} i={i}"
                );
            }
        }
    }

    #[test]
    fn dominant_round_trip() {
        let mn = PartitionPair::new(p("2,1"), p("3"));
        let v = mn.to_dominant(5).unwrap();
        assert_eq!(v, vec![2, 1, 0, 0, -3]);
        assert_eq!(PartitionPair::from_dominant(&v).unwrap(), mn);
    }
}
