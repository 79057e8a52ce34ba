//! The noncommutative character ring generated by `h^+_r` and `h^-_s`.
//!
//! Generators of one sign commute. Across signs they obey
//! `h^+_r h^-_s = Σ_{k=0}^{min(r,s)} h^-_{s-k} h^+_{r-k}`, with degree-zero
//! generators equal to one. The elementary family `e^±_k` satisfies the same
//! relation. Elements are stored in normal form, all minus factors first.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::partitions::{lr_coefficient, lr_product, Partition, PartitionPair};
use crate::ratfun::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    H,
    E,
}

/// One generator, e.g. `h+3` or `e-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub sign: Sign,
    pub family: Family,
    pub degree: u32,
}

impl Gen {
    pub fn new(sign: Sign, family: Family, degree: u32) -> Result<Self> {
        if degree == 0 {
            return domain("generators have degree at least 1");
        }
        Ok(Self {
            sign,
            family,
            degree,
        })
    }

    fn with_degree(self, degree: u32) -> Option<Self> {
        (degree > 0).then_some(Self { degree, ..self })
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::H => 'h',
            Family::E => 'e',
        };
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{fam}{sign}{}", self.degree)
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('h') => Family::H,
            Some('e') => Family::E,
            _ => return Err(Error::Parse(format!("bad generator {s:?}"))),
        };
        let sign = match chars.next() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(Error::Parse(format!("bad generator {s:?}"))),
        };
        let degree: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in {s:?}")))?;
        Gen::new(sign, family, degree).map_err(|_| Error::Parse(format!("degree 0 in {s:?}")))
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CharWord(pub Vec<Gen>);

impl CharWord {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|g| g.degree).sum()
    }

    /// The single family used by the word, or an error for mixed words.
    pub fn family(&self) -> Result<Option<Family>> {
        let mut fam = None;
        for g in &self.0 {
            match fam {
                None => fam = Some(g.family),
                Some(f) if f != g.family => return domain(format!("mixed e/h word {self}")),
                _ => {}
            }
        }
        Ok(fam)
    }

    pub fn concat(&self, other: &CharWord) -> CharWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        CharWord(v)
    }

    /// Degrees of the factors of one sign, largest first.
    pub fn block(&self, sign: Sign) -> Partition {
        Partition::from_unsorted(
            self.0
                .iter()
                .filter(|g| g.sign == sign)
                .map(|g| g.degree as usize)
                .collect(),
        )
    }
}

impl fmt::Display for CharWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(Gen::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for CharWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Whitespace or `*` separated generators; `1` or the empty string is the unit.
impl FromStr for CharWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let gens = s
            .split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty() && *t != "1")
            .map(str::parse)
            .collect::<Result<Vec<Gen>>>()?;
        Ok(Self(gens))
    }
}

/// Which sign is gathered on the left in a normal word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    MinusLeft,
    PlusLeft,
}

impl Orientation {
    fn left(self) -> Sign {
        match self {
            Orientation::MinusLeft => Sign::Minus,
            Orientation::PlusLeft => Sign::Plus,
        }
    }
}

/// Which offending adjacency is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Sorts each sign block of a word that has no offending adjacency.
fn canonical(word: &[Gen], orient: Orientation) -> CharWord {
    let left = orient.left();
    let (mut a, mut b): (Vec<Gen>, Vec<Gen>) = word.iter().partition(|g| g.sign == left);
    a.sort_by(|x, y| y.cmp(x));
    b.sort_by(|x, y| y.cmp(x));
    a.extend(b);
    CharWord(a)
}

fn offending(word: &[Gen], orient: Orientation) -> impl Iterator<Item = usize> + '_ {
    let left = orient.left();
    (0..word.len().saturating_sub(1))
        .filter(move |&i| word[i].sign != left && word[i + 1].sign == left)
}

/// Rewrites the offending pair at `i` into a list of words with coefficients.
fn rewrite_at(word: &[Gen], i: usize, orient: Orientation) -> Vec<(Vec<Gen>, i64)> {
    let (x, y) = (word[i], word[i + 1]);
    let (plus, minus) = match orient {
        Orientation::MinusLeft => (x, y),
        Orientation::PlusLeft => (y, x),
    };
    let (r, s) = (plus.degree, minus.degree);
    let splice = |mid: Vec<Gen>| {
        let mut v = word[..i].to_vec();
        v.extend(mid);
        v.extend_from_slice(&word[i + 2..]);
        v
    };
    let lowered = |k: u32| {
        let mut mid = Vec::new();
        mid.extend(minus.with_degree(s - k));
        mid.extend(plus.with_degree(r - k));
        mid
    };
    let mut out = Vec::new();
    match orient {
        Orientation::MinusLeft => {
            for k in 0..=r.min(s) {
                out.push((splice(lowered(k)), 1));
            }
        }
        Orientation::PlusLeft => {
            out.push((splice(vec![plus, minus]), 1));
            for k in 1..=r.min(s) {
                out.push((splice(lowered(k)), -1));
            }
        }
    }
    out
}

/// A linear combination of normal words with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CharElement {
    terms: BTreeMap<CharWord, Rational>,
}

impl CharElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(CharWord::unit())
    }

    fn from_word(w: CharWord) -> Self {
        Self {
            terms: BTreeMap::from([(w, Rational::one())]),
        }
    }

    pub fn add_term(&mut self, w: CharWord, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CharWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &CharWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    /// Parses a sum like `"h-1 h+1 + 1"` or `"2*h+1 - h-2"`, then normal-orders it.
    pub fn parse_normal(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        let cleaned = s.replace(" - ", " + -");
        for term in cleaned.split(" + ") {
            let term = term.trim();
            if term.is_empty() {
                continue;
            }
            let (coef, rest) = match term.split_once('*') {
                Some((c, r))
                    if c.trim()
                        .trim_start_matches('-')
                        .chars()
                        .all(|ch| ch.is_ascii_digit()) =>
                {
                    let c: i64 = c
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?;
                    (c, r)
                }
                _ => match term.strip_prefix('-') {
                    Some(r) => (-1, r),
                    None => (1, term),
                },
            };
            let w: CharWord = rest.parse()?;
            out = &out + &normal_order(&w)?.scale(&rat(coef));
        }
        Ok(out)
    }
}

impl std::ops::Add for &CharElement {
    type Output = CharElement;
    fn add(self, rhs: &CharElement) -> CharElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl std::ops::Sub for &CharElement {
    type Output = CharElement;
    fn sub(self, rhs: &CharElement) -> CharElement {
        self + &rhs.scale(&rat(-1))
    }
}

impl fmt::Display for CharElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if a.is_one() {
                write!(f, "{w}")?;
            } else if w.0.is_empty() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CharElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

type OrderMemo = HashMap<(Orientation, Vec<Gen>), BTreeMap<CharWord, i64>>;

thread_local! {
    static ORDER_MEMO: RefCell<OrderMemo> = RefCell::new(HashMap::new());
}

fn normal_memo(word: &[Gen], orient: Orientation) -> BTreeMap<CharWord, i64> {
    let Some(i) = offending(word, orient).next() else {
        return BTreeMap::from([(canonical(word, orient), 1)]);
    };
    let key = (orient, word.to_vec());
    if let Some(hit) = ORDER_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut out: BTreeMap<CharWord, i64> = BTreeMap::new();
    for (w, c) in rewrite_at(word, i, orient) {
        for (nw, c2) in normal_memo(&w, orient) {
            let e = out.entry(nw.clone()).or_default();
            *e += c * c2;
            if *e == 0 {
                out.remove(&nw);
            }
        }
    }
    ORDER_MEMO.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

fn to_element(map: BTreeMap<CharWord, i64>) -> CharElement {
    CharElement {
        terms: map.into_iter().map(|(w, c)| (w, rat(c))).collect(),
    }
}

/// Normal form with all minus factors on the left.
pub fn normal_order(w: &CharWord) -> Result<CharElement> {
    normal_order_oriented(w, Orientation::MinusLeft)
}

/// Normal form for either orientation (memoized).
pub fn normal_order_oriented(w: &CharWord, orient: Orientation) -> Result<CharElement> {
    w.family()?;
    Ok(to_element(normal_memo(&w.0, orient)))
}

/// Step-by-step rewriting of a whole linear combination with an explicit
/// choice of redex. Slower than [`normal_order`]; used to check confluence.
pub fn normal_order_with(
    w: &CharWord,
    orient: Orientation,
    strategy: Strategy,
) -> Result<CharElement> {
    w.family()?;
    let mut pending: BTreeMap<Vec<Gen>, i64> = BTreeMap::from([(w.0.clone(), 1)]);
    let mut done: BTreeMap<CharWord, i64> = BTreeMap::new();
    while let Some((word, c)) = pending.pop_first() {
        let pos = match strategy {
            Strategy::Leftmost => offending(&word, orient).next(),
            Strategy::Rightmost => offending(&word, orient).last(),
        };
        match pos {
            None => *done.entry(canonical(&word, orient)).or_default() += c,
            Some(i) => {
                for (nw, c2) in rewrite_at(&word, i, orient) {
                    *pending.entry(nw).or_default() += c * c2;
                }
            }
        }
        pending.retain(|_, v| *v != 0);
    }
    done.retain(|_, v| *v != 0);
    Ok(to_element(done))
}

/// Product of two elements, normal-ordered.
pub fn multiply(x: &CharElement, y: &CharElement) -> Result<CharElement> {
    multiply_oriented(x, y, Orientation::MinusLeft)
}

/// Product of two elements, normal-ordered in the given orientation.
pub fn multiply_oriented(
    x: &CharElement,
    y: &CharElement,
    orient: Orientation,
) -> Result<CharElement> {
    let mut out = CharElement::zero();
    for (wx, cx) in &x.terms {
        for (wy, cy) in &y.terms {
            let w = wx.concat(wy);
            out = &out + &normal_order_oriented(&w, orient)?.scale(&(cx * cy));
        }
    }
    Ok(out)
}

/// Polynomial in the commuting generators of one sign, keyed by the
/// multiset of degrees (largest first).
type OneSign = BTreeMap<Vec<u32>, i64>;

fn one_sign_mul(a: &OneSign, b: &OneSign) -> OneSign {
    let mut out = OneSign::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let mut k: Vec<u32> = ka.iter().chain(kb).copied().collect();
            k.sort_by(|x, y| y.cmp(x));
            *out.entry(k).or_default() += ca * cb;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Determinant of `(g_{a_i - i + j})` over the commuting generators.
fn jacobi_trudi(a: &[usize]) -> OneSign {
    fn entry(d: i64) -> OneSign {
        match d {
            d if d < 0 => OneSign::new(),
            0 => OneSign::from([(Vec::new(), 1)]),
            d => OneSign::from([(vec![d as u32], 1)]),
        }
    }
    fn det(a: &[usize], row: usize, cols: &mut Vec<usize>) -> OneSign {
        let l = a.len();
        if row == l {
            return OneSign::from([(Vec::new(), 1)]);
        }
        let mut out = OneSign::new();
        for idx in 0..cols.len() {
            let j = cols[idx];
            let e = entry(a[row] as i64 - row as i64 + j as i64);
            if e.is_empty() {
                continue;
            }
            let sign = if idx % 2 == 0 { 1 } else { -1 };
            cols.remove(idx);
            let minor = det(a, row + 1, cols);
            cols.insert(idx, j);
            for (k, c) in one_sign_mul(&e, &minor) {
                *out.entry(k).or_default() += sign * c;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }
    det(a, 0, &mut (0..a.len()).collect())
}

/// The Schur element `s^±_λ` written in one generator family.
pub fn schur(sign: Sign, family: Family, lambda: &Partition) -> CharElement {
    let rows = match family {
        Family::H => lambda.parts().to_vec(),
        Family::E => lambda.conjugate().parts().to_vec(),
    };
    let mut out = CharElement::zero();
    for (k, c) in jacobi_trudi(&rows) {
        let w = CharWord(
            k.into_iter()
                .map(|d| Gen {
                    sign,
                    family,
                    degree: d,
                })
                .collect(),
        );
        out.add_term(w, &rat(c));
    }
    out
}

/// `Σ_σ c^μ_{σζ} c^ν_{ση}`.
pub fn m_coeff(mu: &Partition, nu: &Partition, zeta: &Partition, eta: &Partition) -> u64 {
    if mu.size() < zeta.size() || mu.size() - zeta.size() != nu.size().wrapping_sub(eta.size()) {
        return 0;
    }
    Partition::all_of_size(mu.size() - zeta.size())
        .iter()
        .map(|s| lr_coefficient(mu, s, zeta) * lr_coefficient(nu, s, eta))
        .sum()
}

/// `Σ_λ (-1)^{|λ|} c^σ_{λμ} c^τ_{λ'ν}`.
pub fn n_coeff(sigma: &Partition, tau: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if sigma.size() < mu.size() || sigma.size() - mu.size() != tau.size().wrapping_sub(nu.size()) {
        return 0;
    }
    let k = sigma.size() - mu.size();
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    Partition::all_of_size(k)
        .iter()
        .map(|l| (lr_coefficient(sigma, l, mu) * lr_coefficient(tau, &l.conjugate(), nu)) as i64)
        .sum::<i64>()
        * sign
}

/// `[V_{σ,τ}] = Σ n^{σ,τ}_{μ,ν} [V_{μ,∅} ⊗ V_{∅,ν}]` as a sparse table.
pub fn character_expansion(st: &PartitionPair) -> BTreeMap<PartitionPair, i64> {
    let (sigma, tau) = (&st.plus, &st.minus);
    let mut out = BTreeMap::new();
    for mu in sigma.subpartitions() {
        for nu in tau.subpartitions() {
            let c = n_coeff(sigma, tau, &mu, &nu);
            if c != 0 {
                out.insert(PartitionPair::new(mu.clone(), nu), c);
            }
        }
    }
    out
}

/// `[V_{μ,∅} ⊗ V_{∅,ν}] = Σ m^{μ,ν}_{ζ,η} [V_{ζ,η}]` as a sparse table.
pub fn highest_lowest_expansion(mn: &PartitionPair) -> BTreeMap<PartitionPair, u64> {
    let (mu, nu) = (&mn.plus, &mn.minus);
    let mut out = BTreeMap::new();
    for zeta in mu.subpartitions() {
        for eta in nu.subpartitions() {
            let c = m_coeff(mu, nu, &zeta, &eta);
            if c != 0 {
                out.insert(PartitionPair::new(zeta.clone(), eta), c);
            }
        }
    }
    out
}

/// Checks that the `m` and `n` matrices are mutually inverse on all pairs
/// with both sizes at most `degree`.
pub fn verify_transition_inverse(degree: usize) -> bool {
    let pairs = PartitionPair::all_up_to(degree, degree);
    let m: Vec<BTreeMap<PartitionPair, u64>> = pairs.iter().map(highest_lowest_expansion).collect();
    let n: Vec<BTreeMap<PartitionPair, i64>> = pairs.iter().map(character_expansion).collect();
    let index: HashMap<&PartitionPair, usize> =
        pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // m·n and n·m restricted to the block must both be the identity.
    for i in 0..pairs.len() {
        let mut mn: BTreeMap<&PartitionPair, i64> = BTreeMap::new();
        for (mid, &a) in &m[i] {
            for (end, &b) in &n[index[mid]] {
                *mn.entry(end).or_default() += a as i64 * b;
            }
        }
        let mut nm: BTreeMap<&PartitionPair, i64> = BTreeMap::new();
        for (mid, &a) in &n[i] {
            for (end, &b) in &m[index[mid]] {
                *nm.entry(end).or_default() += a * b as i64;
            }
        }
        for prod in [mn, nm] {
            for (k, v) in prod {
                let expect = i64::from(*k == pairs[i]);
                if v != expect {
                    return false;
                }
            }
        }
    }
    true
}

/// One layer of the socle filtration of `V_{α,β} ⊗ V_{γ,δ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleTable {
    pub left: PartitionPair,
    pub right: PartitionPair,
    pub layer: usize,
    pub entries: BTreeMap<PartitionPair, i64>,
}

/// `[V_{α,β}] [V_{γ,δ}]` in the basis `[V_{ξ,∅} ⊗ V_{∅,π}]`.
pub fn product_in_tensor_basis(
    ab: &PartitionPair,
    gd: &PartitionPair,
) -> BTreeMap<PartitionPair, i64> {
    let left = character_expansion(ab);
    let right = character_expansion(gd);
    let mut out: BTreeMap<PartitionPair, i64> = BTreeMap::new();
    for (mn, a) in &left {
        for (ze, b) in &right {
            let xis = lr_product(&mn.plus, &ze.plus);
            let pis = lr_product(&mn.minus, &ze.minus);
            for (xi, c1) in &xis {
                for (pi, c2) in &pis {
                    *out.entry(PartitionPair::new(xi.clone(), pi.clone()))
                        .or_default() += a * b * (*c1 as i64) * (*c2 as i64);
                }
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// The layer-`d` subquotient of the socle filtration of `V_{α,β} ⊗ V_{γ,δ}`.
pub fn socle_layer_general(ab: &PartitionPair, gd: &PartitionPair, d: usize) -> Result<SocleTable> {
    let big_m = ab.plus.size() + gd.plus.size();
    let big_n = ab.minus.size() + gd.minus.size();
    if d > big_m.min(big_n) {
        return domain(format!("layer {d} out of range 0..={}", big_m.min(big_n)));
    }
    let mut entries: BTreeMap<PartitionPair, i64> = BTreeMap::new();
    for (xp, a) in product_in_tensor_basis(ab, gd) {
        let (xi, pi) = (&xp.plus, &xp.minus);
        // |ρ| is fixed by the layer.
        let Some(r) = (xi.size() + d).checked_sub(big_m) else {
            continue;
        };
        for rho in Partition::all_of_size(r) {
            if !xi.contains(&rho) || !pi.contains(&rho) {
                continue;
            }
            for phi in Partition::all_of_size(big_m - d) {
                let c1 = lr_coefficient(xi, &rho, &phi);
                if c1 == 0 {
                    continue;
                }
                for psi in Partition::all_of_size(big_n - d) {
                    let c2 = lr_coefficient(pi, &rho, &psi);
                    if c2 != 0 {
                        *entries
                            .entry(PartitionPair::new(phi.clone(), psi))
                            .or_default() += a * (c1 * c2) as i64;
                    }
                }
            }
        }
    }
    entries.retain(|_, v| *v != 0);
    Ok(SocleTable {
        left: ab.clone(),
        right: gd.clone(),
        layer: d,
        entries,
    })
}

/// Every layer `0..=min(M,N)`, including empty ones.
pub fn socle_layers(ab: &PartitionPair, gd: &PartitionPair) -> Result<Vec<SocleTable>> {
    let big_m = ab.plus.size() + gd.plus.size();
    let big_n = ab.minus.size() + gd.minus.size();
    (0..=big_m.min(big_n))
        .map(|d| socle_layer_general(ab, gd, d))
        .collect()
}

/// Number of nonempty layers.
pub fn loewy_length(layers: &[SocleTable]) -> usize {
    layers.iter().filter(|t| !t.entries.is_empty()).count()
}

/// Polynomial in `2k` commuting variables, truncated above a total degree.
///
/// Variables `0..k` are `x_1..x_k`, variables `k..2k` are `y_1..y_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncPoly {
    nvars: usize,
    cutoff: u32,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl TruncPoly {
    pub fn zero(nvars: usize, cutoff: u32) -> Self {
        Self {
            nvars,
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, cutoff: u32) -> Self {
        Self::monomial(nvars, cutoff, vec![0; nvars], 1)
    }

    pub fn monomial(nvars: usize, cutoff: u32, exps: Vec<u32>, c: i64) -> Self {
        let mut out = Self::zero(nvars, cutoff);
        if exps.iter().sum::<u32>() <= cutoff && c != 0 {
            out.terms.insert(exps, c);
        }
        out
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &i64)> {
        self.terms.iter()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars || self.cutoff != other.cutoff {
            return domain(format!(
                "truncated polynomials with different shapes ({} vars to degree {} vs {} to {})",
                self.nvars, self.cutoff, other.nvars, other.cutoff
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            *out.terms.entry(k.clone()).or_default() += c;
        }
        out.terms.retain(|_, v| *v != 0);
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.terms = out
            .terms
            .into_iter()
            .map(|(e, v)| (e, v * k))
            .filter(|(_, v)| *v != 0)
            .collect();
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars, self.cutoff);
        for (ka, ca) in &self.terms {
            let da: u32 = ka.iter().sum();
            for (kb, cb) in &other.terms {
                if da + kb.iter().sum::<u32>() > self.cutoff {
                    continue;
                }
                let k: Vec<u32> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                *out.terms.entry(k).or_default() += ca * cb;
            }
        }
        out.terms.retain(|_, v| *v != 0);
        Ok(out)
    }
}

/// Which Cauchy identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CauchyKind {
    /// `E⁺(y)E⁻(x) = E⁻(x)E⁺(y) Π(1 - x_i y_j)^{-1}`.
    EE,
    /// `E⁺(y)H⁻(x) = H⁻(x)E⁺(y) Π(1 + x_i y_j)`.
    EH,
}

impl FromStr for CauchyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "E-E" | "EE" => Ok(Self::EE),
            "E-H" | "EH" => Ok(Self::EH),
            _ => Err(Error::Parse(format!(
                "unknown Cauchy kind {s:?}; use E-E or E-H"
            ))),
        }
    }
}

/// Outcome of [`verify_cauchy`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyReport {
    /// Number of `(word, monomial)` coefficients compared.
    pub compared: usize,
    /// First coefficient where the two sides differ.
    pub mismatch: Option<String>,
}

impl CauchyReport {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Element of the character ring with truncated polynomial coefficients.
type Series = BTreeMap<CharWord, TruncPoly>;

fn series_add_into(acc: &mut Series, w: CharWord, c: TruncPoly) -> Result<()> {
    match acc.get_mut(&w) {
        Some(x) => {
            *x = x.add(&c)?;
            if x.is_zero() {
                acc.remove(&w);
            }
        }
        None if !c.is_zero() => {
            acc.insert(w, c);
        }
        None => {}
    }
    Ok(())
}

fn series_mul(a: &Series, b: &Series) -> Result<Series> {
    let mut out = Series::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let c = ca.mul(cb)?;
            if c.is_zero() {
                continue;
            }
            for (w, k) in normal_order(&wa.concat(wb))?.terms() {
                let k = k
                    .to_integer()
                    .try_into()
                    .map_err(|_| Error::Domain("coefficient overflow".into()))?;
                series_add_into(&mut out, w.clone(), c.scale(k))?;
            }
        }
    }
    Ok(out)
}

/// `Π_j G(z_j)` for the generator family given by `gen`, with `z_j` the
/// variables `offset..offset+k`. `gen(d)` writes the degree-`d` generator as
/// a one-sign polynomial.
fn generating_product(
    k: usize,
    offset: usize,
    cutoff: u32,
    gen: &dyn Fn(u32) -> CharElement,
) -> Result<Series> {
    let nvars = 2 * k;
    let mut acc: Series = Series::from([(CharWord::unit(), TruncPoly::one(nvars, cutoff))]);
    for j in 0..k {
        let mut factor = Series::new();
        for d in 0..=cutoff {
            let mut exps = vec![0; nvars];
            exps[offset + j] = d;
            for (w, c) in gen(d).terms() {
                let c: i64 = c
                    .to_integer()
                    .try_into()
                    .map_err(|_| Error::Domain("coefficient overflow".into()))?;
                series_add_into(
                    &mut factor,
                    w.clone(),
                    TruncPoly::monomial(nvars, cutoff, exps.clone(), c),
                )?;
            }
        }
        acc = series_mul(&acc, &factor)?;
    }
    Ok(acc)
}

fn single_gen(sign: Sign, family: Family, d: u32) -> CharElement {
    match (Gen {
        sign,
        family,
        degree: d,
    })
    .with_degree(d)
    {
        Some(g) => CharElement::from_word(CharWord(vec![g])),
        None => CharElement::one(),
    }
}

/// `e^±_d` written in the `h` family: the Schur element of a column.
fn e_in_h(sign: Sign, d: u32) -> CharElement {
    schur(
        sign,
        Family::H,
        &Partition::from_unsorted(vec![1; d as usize]),
    )
}

/// Checks a non-symmetric Cauchy identity with `k` variables of each kind up
/// to total degree `degree`.
///
/// For [`CauchyKind::EE`] the check runs twice: once with the elementary
/// generators rewritten by their own relation, and once with each `e^±_d`
/// expanded as a determinant in the `h` family. [`CauchyKind::EH`] always
/// runs in the `h` family.
pub fn verify_cauchy(
    kind: CauchyKind,
    k: usize,
    degree: u32,
    budget: usize,
) -> Result<CauchyReport> {
    // Number of exponent vectors in 2k variables of degree ≤ D.
    let mut size: u128 = 1;
    for i in 1..=u128::from(degree) {
        size = size * (2 * k as u128 + i) / i;
    }
    if size > budget as u128 {
        return Err(Error::Budget {
            explored: size as usize,
            budget,
        });
    }
    let nvars = 2 * k;
    type GenFn = Box<dyn Fn(u32) -> CharElement>;
    let mut variants: Vec<(GenFn, GenFn)> = Vec::new();
    match kind {
        CauchyKind::EE => {
            variants.push((
                Box::new(|d| single_gen(Sign::Plus, Family::E, d)),
                Box::new(|d| single_gen(Sign::Minus, Family::E, d)),
            ));
            variants.push((
                Box::new(|d| e_in_h(Sign::Plus, d)),
                Box::new(|d| e_in_h(Sign::Minus, d)),
            ));
        }
        CauchyKind::EH => variants.push((
            Box::new(|d| e_in_h(Sign::Plus, d)),
            Box::new(|d| single_gen(Sign::Minus, Family::H, d)),
        )),
    }
    // Π_{i,j} (1 - x_i y_j)^{-1} or Π (1 + x_i y_j).
    let mut kernel = TruncPoly::one(nvars, degree);
    for i in 0..k {
        for j in 0..k {
            let mut f = TruncPoly::one(nvars, degree);
            let top = match kind {
                CauchyKind::EE => degree / 2,
                CauchyKind::EH => 1,
            };
            for p in 1..=top {
                let mut e = vec![0; nvars];
                e[i] = p;
                e[k + j] = p;
                f = f.add(&TruncPoly::monomial(nvars, degree, e, 1))?;
            }
            kernel = kernel.mul(&f)?;
        }
    }
    let mut compared = 0;
    for (plus, minus) in &variants {
        let ey = generating_product(k, k, degree, plus.as_ref())?;
        let mx = generating_product(k, 0, degree, minus.as_ref())?;
        let lhs = series_mul(&ey, &mx)?;
        let kernel_series = Series::from([(CharWord::unit(), kernel.clone())]);
        let rhs = series_mul(&series_mul(&mx, &ey)?, &kernel_series)?;
        let zero = TruncPoly::zero(nvars, degree);
        let words: std::collections::BTreeSet<&CharWord> = lhs.keys().chain(rhs.keys()).collect();
        for w in words {
            let a = lhs.get(w).unwrap_or(&zero);
            let b = rhs.get(w).unwrap_or(&zero);
            let monos: std::collections::BTreeSet<&Vec<u32>> =
                a.terms.keys().chain(b.terms.keys()).collect();
            for e in monos {
                compared += 1;
                let ca = a.terms.get(e).copied().unwrap_or(0);
                let cb = b.terms.get(e).copied().unwrap_or(0);
                if ca != cb {
                    return Ok(CauchyReport {
                        compared,
                        mismatch: Some(format!("word {w}, exponents {e:?}: left {ca}, right {cb}")),
                    });
                }
            }
        }
    }
    Ok(CauchyReport {
        compared,
        mismatch: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> CharElement {
        CharElement::parse_normal(s).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn relation_examples() {
        let got = normal_order(&"h+1 h-1".parse().unwrap()).unwrap();
        assert_eq!(got.to_string(), "1 + h-1 h+1");
        let got = normal_order(&"h+2 h-2".parse().unwrap()).unwrap();
        assert_eq!(got, el("h-2 h+2 + h-1 h+1 + 1"));
        let w: CharWord = "h-2 h+3".parse().unwrap();
        assert_eq!(normal_order(&w).unwrap(), CharElement::from_word(w));
        assert!(normal_order(&"e+1 h-1".parse().unwrap()).is_err());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(Sign::Plus, Family::H, &p("1")), el("h+1"));
        assert_eq!(schur(Sign::Plus, Family::H, &p("1,1")), el("h+1 h+1 - h+2"));
        assert_eq!(schur(Sign::Minus, Family::H, &p("2")), el("h-2"));
        assert_eq!(schur(Sign::Plus, Family::E, &p("1,1")), el("e+2"));
    }

    #[test]
    fn coefficient_examples() {
        let e = Partition::empty();
        assert_eq!(m_coeff(&p("1"), &p("1"), &e, &e), 1);
        assert_eq!(n_coeff(&p("1"), &p("1"), &e, &e), -1);
        assert_eq!(m_coeff(&p("2,1"), &p("1,1"), &p("2,1"), &p("1,1")), 1);
    }

    #[test]
    fn small_transition_blocks() {
        for d in 0..=2 {
            assert!(verify_transition_inverse(d));
        }
    }

    #[test]
    fn socle_of_one_box_pair() {
        let a = PartitionPair::new(p("1"), Partition::empty());
        let b = PartitionPair::new(Partition::empty(), p("1"));
        let layers = socle_layers(&a, &b).unwrap();
        assert_eq!(layers.len(), 2);
        assert_eq!(
            layers[0].entries,
            BTreeMap::from([(PartitionPair::new(p("1"), p("1")), 1)])
        );
        assert_eq!(
            layers[1].entries,
            BTreeMap::from([(
                PartitionPair::new(Partition::empty(), Partition::empty()),
                1
            )])
        );
        assert!(socle_layer_general(&a, &b, 2).is_err());
    }

    #[test]
    fn mixed_cutoff_is_an_error() {
        let a = TruncPoly::one(2, 3);
        let b = TruncPoly::one(2, 4);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn tiny_cauchy() {
        for kind in [CauchyKind::EE, CauchyKind::EH] {
            for d in 0..=2 {
                assert!(
                    verify_cauchy(kind, 1, d, 1000).unwrap().holds(),
                    "{kind:?} {d}"
                );
            }
        }
    }
}
