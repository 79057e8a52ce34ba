//! The q-deformed exterior algebra `⋀_{m,n}` of `m × n` matrices.
//!
//! Generators are letters `w_{(a,b)}` with `1 ≤ a ≤ m`, `1 ≤ b ≤ n`. The
//! letters are totally ordered by `(a,b) < (c,d)` iff `b < d`, or `b = d`
//! and `a > c` (columns left to right, bottom to top inside a column). A
//! word is standard when it is strictly increasing; standard words form a
//! basis and every word is rewritten into them by the quadratic relations.
//!
//! `gl_m` acts on rows with the lower comultiplication, letter by letter;
//! `gl_n` acts on columns with the opposite comultiplication and parameter
//! `p = -q^-1`. Both actions are computed on words and then straightened.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::crystal::{Color, Op, Side};
use crate::error::{domain, Error, Result};
use crate::fockcrystal::Matrix01;
use crate::ratfun::{qbinom, qfactorial, rat, LaurentPoly, RatFun};

/// A generator `w_{(row, col)}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub row: u32,
    pub col: u32,
}

impl Letter {
    pub fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.col.cmp(&other.col).then(other.row.cmp(&self.row))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An arbitrary word in the generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WedgeWord(pub Vec<Letter>);

impl WedgeWord {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl fmt::Display for WedgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        write!(f, "w[{}]", parts.join(","))
    }
}

impl fmt::Debug for WedgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses pairs of positive integers, e.g. `"(1,2),(2,1)"` or `"1,2 2,1"`.
impl FromStr for WedgeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nums = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if nums.len() % 2 != 0 {
            return Err(Error::Parse(format!("odd number of indices in {s:?}")));
        }
        if nums.contains(&0) {
            return Err(Error::Parse("letter indices start at 1".into()));
        }
        Ok(Self(
            nums.chunks(2).map(|c| Letter::new(c[0], c[1])).collect(),
        ))
    }
}

/// A standard monomial: a strictly increasing word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<Letter>);

impl Monomial {
    /// Accepts only strictly increasing words.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.windows(2).any(|w| w[0] >= w[1]) {
            return domain(format!("{} is not standard", WedgeWord(letters)));
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// The monomial `w_M` of a 0-1 matrix on rows `1..=m`.
    pub fn from_matrix(m: &Matrix01) -> Result<Self> {
        if m.window().0 != 1 {
            return domain("only windows starting at row 1 index monomials");
        }
        let mut letters = Vec::new();
        for (i, row) in m.rows().iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b == 1 {
                    letters.push(Letter::new(i as u32 + 1, j as u32 + 1));
                }
            }
        }
        letters.sort();
        Ok(Self(letters))
    }

    pub fn to_matrix(&self, m: u32, n: u32) -> Result<Matrix01> {
        let mut rows = vec![vec![0u8; n as usize]; m as usize];
        for l in &self.0 {
            if l.row == 0 || l.row > m || l.col == 0 || l.col > n {
                return domain(format!("letter {l} outside {m}×{n}"));
            }
            rows[l.row as usize - 1][l.col as usize - 1] = 1;
        }
        Matrix01::new(1, rows)
    }

    /// Row weight: number of letters in each row `1..=m`.
    pub fn q_weight(&self, m: u32) -> Vec<i64> {
        let mut w = vec![0; m as usize];
        for l in &self.0 {
            w[l.row as usize - 1] += 1;
        }
        w
    }

    /// Column weight: number of letters in each column `1..=n`.
    pub fn p_weight(&self, n: u32) -> Vec<i64> {
        let mut w = vec![0; n as usize];
        for l in &self.0 {
            w[l.col as usize - 1] += 1;
        }
        w
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", WedgeWord(self.0.clone()))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

type LaurentSum = BTreeMap<Monomial, LaurentPoly>;

fn add_into(acc: &mut LaurentSum, key: Monomial, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(key.clone()).or_default();
    *entry += &c;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

/// A linear combination of standard monomials with coefficients in `Q(q)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WedgeElement {
    terms: BTreeMap<Monomial, RatFun>,
}

impl WedgeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit, the empty monomial.
    pub fn one() -> Self {
        Self::monomial(Monomial::default())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_terms([(m, RatFun::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, RatFun)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    fn from_laurent(sum: LaurentSum) -> Self {
        Self {
            terms: sum.into_iter().map(|(m, c)| (m, RatFun::from(c))).collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &RatFun) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFun)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFun {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    pub fn scale_laurent(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, x)| (m.clone(), x.scale_laurent(c))),
        )
    }

    /// Divides every coefficient by a nonzero Laurent polynomial.
    pub fn div_laurent(&self, d: &LaurentPoly) -> Result<Self> {
        let d = RatFun::from(d.clone()).recip()?;
        Ok(self.scale(&d))
    }

    /// Common `(row weight, column weight)` of every term, if there is one.
    pub fn biweight(&self, m: u32, n: u32) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys().map(|k| (k.q_weight(m), k.p_weight(n)));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

impl std::ops::Add for &WedgeElement {
    type Output = WedgeElement;
    fn add(self, rhs: &WedgeElement) -> WedgeElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl std::ops::Sub for &WedgeElement {
    type Output = WedgeElement;
    fn sub(self, rhs: &WedgeElement) -> WedgeElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl std::ops::Neg for &WedgeElement {
    type Output = WedgeElement;
    fn neg(self) -> WedgeElement {
        WedgeElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})*{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which adjacent descent the rewriting resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

thread_local! {
    static STRAIGHTEN_MEMO: RefCell<HashMap<(Strategy, Vec<Letter>), LaurentSum>> =
        RefCell::new(HashMap::new());
}

/// Rewrites the non-standard adjacent pair `y x` (with `x ≤ y`) as a
/// combination of words of length two.
fn rewrite_pair(y: Letter, x: Letter) -> Vec<([Letter; 2], LaurentPoly)> {
    let (a, b, c, d) = (x.row, x.col, y.row, y.col);
    if x == y {
        return Vec::new();
    }
    if b == d {
        // Same column, a > c.
        return vec![([x, y], LaurentPoly::monomial(rat(-1), -1))];
    }
    if a == c {
        return vec![([x, y], LaurentPoly::q())];
    }
    if a < c {
        return vec![([x, y], LaurentPoly::one())];
    }
    let q_minus = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    vec![
        ([x, y], LaurentPoly::one()),
        ([Letter::new(c, b), Letter::new(a, d)], q_minus),
    ]
}

fn straighten_sum(word: &[Letter], strategy: Strategy) -> LaurentSum {
    let descents = (0..word.len().saturating_sub(1)).filter(|&i| word[i] >= word[i + 1]);
    let pos = match strategy {
        Strategy::Leftmost => descents.min(),
        Strategy::Rightmost => descents.max(),
    };
    let Some(i) = pos else {
        return BTreeMap::from([(Monomial(word.to_vec()), LaurentPoly::one())]);
    };
    let key = (strategy, word.to_vec());
    if let Some(hit) = STRAIGHTEN_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut out = LaurentSum::new();
    for (pair, c) in rewrite_pair(word[i], word[i + 1]) {
        let mut next = word.to_vec();
        next[i] = pair[0];
        next[i + 1] = pair[1];
        for (m, c2) in straighten_sum(&next, strategy) {
            add_into(&mut out, m, &c * &c2);
        }
    }
    STRAIGHTEN_MEMO.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

/// Expands a word in standard monomials.
pub fn straighten(word: &WedgeWord) -> WedgeElement {
    straighten_with(word, Strategy::Leftmost)
}

/// [`straighten`] with an explicit rewriting order.
pub fn straighten_with(word: &WedgeWord, strategy: Strategy) -> WedgeElement {
    WedgeElement::from_laurent(straighten_sum(&word.0, strategy))
}

/// The product `x ∧ y`.
pub fn wedge(x: &WedgeElement, y: &WedgeElement) -> WedgeElement {
    let mut out = WedgeElement::zero();
    for (mx, cx) in &x.terms {
        for (my, cy) in &y.terms {
            let mut word = mx.0.clone();
            word.extend_from_slice(&my.0);
            let c = cx * cy;
            for (m, c2) in straighten_sum(&word, Strategy::Leftmost) {
                out.add_term(m, &c.scale_laurent(&c2));
            }
        }
    }
    out
}

/// `⟨x, y⟩` with the standard monomials orthonormal.
pub fn pairing(x: &WedgeElement, y: &WedgeElement) -> RatFun {
    let mut out = RatFun::zero();
    for (m, c) in &x.terms {
        if let Some(d) = y.terms.get(m) {
            out += &(c * d);
        }
    }
    out
}

/// Kind of a Chevalley generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    E,
    F,
    /// `q^{E_kk}` on the row side, `p^{E_kk}` on the column side.
    K,
}

/// A generator of `U_q(gl_m)` (row side) or `U_p(gl_n)` (column side).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorAction {
    pub side: Side,
    pub kind: GenKind,
    pub index: u32,
}

impl GeneratorAction {
    pub fn e(side: Side, index: u32) -> Self {
        Self {
            side,
            kind: GenKind::E,
            index,
        }
    }

    pub fn f(side: Side, index: u32) -> Self {
        Self {
            side,
            kind: GenKind::F,
            index,
        }
    }

    pub fn k(side: Side, index: u32) -> Self {
        Self {
            side,
            kind: GenKind::K,
            index,
        }
    }
}

/// `⟨h_i, ε_a⟩`.
fn h_pair(i: u32, a: u32) -> i64 {
    i64::from(a == i) - i64::from(a == i + 1)
}

thread_local! {
    static ACT_MEMO: RefCell<HashMap<(GeneratorAction, Monomial), LaurentSum>> = RefCell::new(HashMap::new());
    static BAR_MEMO: RefCell<HashMap<Monomial, LaurentSum>> = RefCell::new(HashMap::new());
}

/// Crystal operators of the representation itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrystalVariant {
    Lower,
    Upper,
}

/// Result of a canonical basis computation on one bi-weight space.
#[derive(Clone, Debug)]
pub struct CanonicalBasis {
    /// Monomials of the weight space, increasing in the triangularity order.
    pub monomials: Vec<Monomial>,
    /// `G(M)` for each monomial, in the same order.
    pub elements: Vec<WedgeElement>,
}

impl CanonicalBasis {
    /// Coefficient of `w_N` in `G(M)`.
    pub fn entry(&self, n: usize, m: usize) -> RatFun {
        self.elements[m].coeff(&self.monomials[n])
    }

    /// The base-change matrix as CSV: one row per `G(M)`, one column per `w_N`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("G");
        for n in &self.monomials {
            out.push_str(&format!(",\"{n}\""));
        }
        out.push('\n');
        for (i, m) in self.monomials.iter().enumerate() {
            out.push_str(&format!("\"{m}\""));
            for j in 0..self.monomials.len() {
                out.push_str(&format!(",{}", self.entry(j, i)));
            }
            out.push('\n');
        }
        out
    }
}

/// The algebra `⋀_{m,n}` with its two quantum group actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WedgeSpace {
    m: u32,
    n: u32,
}

impl WedgeSpace {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return domain("m and n must be positive");
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn contains(&self, l: Letter) -> bool {
        (1..=self.m).contains(&l.row) && (1..=self.n).contains(&l.col)
    }

    fn check_word(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|l| !self.contains(**l)) {
            Some(l) => domain(format!("letter {l} outside {}×{}", self.m, self.n)),
            None => Ok(()),
        }
    }

    /// All standard monomials, by degree and then in monomial order.
    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = Matrix01::all(self.m as usize, self.n as usize)
            .iter()
            .map(|x| Monomial::from_matrix(x).expect("window starts at 1"))
            .collect();
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        out
    }

    /// Standard monomials with the given row and column weights.
    pub fn weight_space(&self, q_wt: &[i64], p_wt: &[i64]) -> Vec<Monomial> {
        self.monomials()
            .into_iter()
            .filter(|x| x.q_weight(self.m) == q_wt && x.p_weight(self.n) == p_wt)
            .collect()
    }

    fn check_generator(&self, g: GeneratorAction) -> Result<()> {
        let bound = match g.side {
            Side::Q => self.m,
            Side::P => self.n,
        };
        let ok = match g.kind {
            GenKind::E | GenKind::F => g.index >= 1 && g.index < bound,
            GenKind::K => g.index >= 1 && g.index <= bound,
        };
        if ok {
            Ok(())
        } else {
            domain(format!(
                "generator index {} out of range for this side",
                g.index
            ))
        }
    }

    /// The action of a generator on a word, before straightening.
    fn act_word_sum(&self, g: GeneratorAction, word: &[Letter]) -> LaurentSum {
        let i = g.index;
        let coord = |l: &Letter| match g.side {
            Side::Q => l.row,
            Side::P => l.col,
        };
        let with = |l: &Letter, v: u32| match g.side {
            Side::Q => Letter::new(v, l.col),
            Side::P => Letter::new(l.row, v),
        };
        let unit = |e: i64| match g.side {
            Side::Q => LaurentPoly::q_pow(e),
            Side::P => LaurentPoly::p_pow(e),
        };
        let mut out = LaurentSum::new();
        match g.kind {
            GenKind::K => {
                let k = word.iter().filter(|l| coord(l) == i).count() as i64;
                return straighten_sum(word, Strategy::Leftmost)
                    .into_iter()
                    .map(|(m, c)| (m, &c * &unit(k)))
                    .collect();
            }
            GenKind::F | GenKind::E => {
                let (from, to) = if g.kind == GenKind::F {
                    (i, i + 1)
                } else {
                    (i + 1, i)
                };
                for pos in 0..word.len() {
                    if coord(&word[pos]) != from {
                        continue;
                    }
                    // Exponent of the group-like factor on the other letters.
                    let (others, sign) = match (g.side, g.kind) {
                        (Side::Q, GenKind::F) => (&word[..pos], 1),
                        (Side::Q, _) => (&word[pos + 1..], -1),
                        (Side::P, GenKind::F) => (&word[pos + 1..], 1),
                        (Side::P, _) => (&word[..pos], -1),
                    };
                    let e: i64 = sign * others.iter().map(|l| h_pair(i, coord(l))).sum::<i64>();
                    let mut next = word.to_vec();
                    next[pos] = with(&word[pos], to);
                    let c = unit(e);
                    for (m, c2) in straighten_sum(&next, Strategy::Leftmost) {
                        add_into(&mut out, m, &c * &c2);
                    }
                }
            }
        }
        out
    }

    fn act_monomial(&self, g: GeneratorAction, m: &Monomial) -> LaurentSum {
        let key = (g, m.clone());
        if let Some(hit) = ACT_MEMO.with(|c| c.borrow().get(&key).cloned()) {
            return hit;
        }
        let out = self.act_word_sum(g, &m.0);
        ACT_MEMO.with(|c| c.borrow_mut().insert(key, out.clone()));
        out
    }

    /// Applies a generator to an element.
    pub fn act(&self, g: GeneratorAction, x: &WedgeElement) -> Result<WedgeElement> {
        self.check_generator(g)?;
        let mut out = WedgeElement::zero();
        for (m, c) in &x.terms {
            self.check_word(&m.0)?;
            for (m2, c2) in self.act_monomial(g, m) {
                out.add_term(m2, &c.scale_laurent(&c2));
            }
        }
        Ok(out)
    }

    /// Applies a generator to a raw word, then straightens.
    pub fn act_word(&self, g: GeneratorAction, w: &WedgeWord) -> Result<WedgeElement> {
        self.check_generator(g)?;
        self.check_word(&w.0)?;
        Ok(WedgeElement::from_laurent(self.act_word_sum(g, &w.0)))
    }

    /// Applies a sequence of generators, the last one first.
    pub fn act_seq(&self, gs: &[GeneratorAction], x: &WedgeElement) -> Result<WedgeElement> {
        gs.iter()
            .rev()
            .try_fold(x.clone(), |acc, &g| self.act(g, &acc))
    }

    /// `⟨h_i, wt⟩` on a bi-weight vector for the given side.
    fn h_value(&self, side: Side, i: u32, x: &WedgeElement) -> Result<i64> {
        let Some((qw, pw)) = x.biweight(self.m, self.n) else {
            return domain("expected a nonzero weight vector");
        };
        let w = match side {
            Side::Q => qw,
            Side::P => pw,
        };
        Ok(w[i as usize - 1] - w[i as usize])
    }

    /// The bar involution.
    pub fn bar(&self, x: &WedgeElement) -> Result<WedgeElement> {
        let mut out = WedgeElement::zero();
        for (m, c) in &x.terms {
            self.check_word(&m.0)?;
            let cb = c.bar();
            for (m2, c2) in bar_monomial(m) {
                out.add_term(m2, &cb.scale_laurent(&c2));
            }
        }
        Ok(out)
    }

    /// `G(M)` for every `M` of one bi-weight space.
    ///
    /// Monomials are ordered lexicographically by their diagonal sums
    /// `c(M)(i) = Σ_k M_{i+k,k}`, read from the lowest diagonal index. The
    /// bar involution must be unitriangular for this order; a violation is
    /// reported as an error.
    pub fn canonical_basis(&self, q_wt: &[i64], p_wt: &[i64]) -> Result<CanonicalBasis> {
        let mut mons = self.weight_space(q_wt, p_wt);
        mons.sort_by_cached_key(|x| (self.diagonal_sums(x), x.clone()));
        let index: HashMap<&Monomial, usize> =
            mons.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let keys: Vec<Vec<i64>> = mons.iter().map(|x| self.diagonal_sums(x)).collect();

        // a[k][j]: coefficient of w_{mons[k]} in bar(w_{mons[j]}).
        let mut a: Vec<BTreeMap<usize, LaurentPoly>> = Vec::with_capacity(mons.len());
        for (j, x) in mons.iter().enumerate() {
            let mut col = BTreeMap::new();
            for (y, c) in bar_monomial(x) {
                let k = index[&y];
                let below = k == j || keys[k] < keys[j];
                if !below || (k == j && !c.is_one()) {
                    return domain(format!("bar({x}) is not unitriangular at {y}"));
                }
                col.insert(k, c);
            }
            a.push(col);
        }

        let mut elements = Vec::with_capacity(mons.len());
        for j in 0..mons.len() {
            // g[k]: coefficient of w_k in G(mons[j]).
            let mut g: BTreeMap<usize, LaurentPoly> = BTreeMap::from([(j, LaurentPoly::one())]);
            for k in (0..j).rev() {
                let mut r = LaurentPoly::zero();
                for (&l, gl) in g.range(k + 1..) {
                    if let Some(akl) = a[l].get(&k) {
                        r += &(akl * &gl.bar());
                    }
                }
                if r.bar() != -&r {
                    return domain("recursion residue is not anti-invariant");
                }
                let gk = r.positive_part();
                if !gk.is_zero() {
                    g.insert(k, gk);
                }
            }
            elements.push(WedgeElement::from_terms(
                g.into_iter()
                    .map(|(k, c)| (mons[k].clone(), RatFun::from(c))),
            ));
        }
        Ok(CanonicalBasis {
            monomials: mons,
            elements,
        })
    }

    /// `c(M)(i)` for `i = 1-n, …, m-1`.
    pub fn diagonal_sums(&self, x: &Monomial) -> Vec<i64> {
        let lo = 1 - i64::from(self.n);
        let mut out = vec![0; (i64::from(self.m) - lo) as usize];
        for l in &x.0 {
            let d = i64::from(l.row) - i64::from(l.col);
            out[(d - lo) as usize] += 1;
        }
        out
    }

    /// The quantum parameter of a side's crystal: `q` for rows, `-q` for the
    /// twisted column action.
    fn param_twist(side: Side) -> impl Fn(LaurentPoly) -> LaurentPoly {
        move |x| match side {
            Side::Q => x,
            Side::P => x.negate_q(),
        }
    }

    fn divided(&self, kind: GenKind, c: Color, k: u32, x: &WedgeElement) -> Result<WedgeElement> {
        let g = GeneratorAction {
            side: c.side,
            kind,
            index: c.index as u32,
        };
        let mut y = x.clone();
        for _ in 0..k {
            if y.is_zero() {
                return Ok(y);
            }
            y = self.act(g, &y)?;
        }
        y.div_laurent(&Self::param_twist(c.side)(qfactorial(k)))
    }

    /// `x = Σ_k f^{(k)} v_k` with `e v_k = 0`; returns the `(k, v_k)` with
    /// `v_k ≠ 0`.
    pub fn string_decomposition(
        &self,
        c: Color,
        x: &WedgeElement,
    ) -> Result<Vec<(u32, WedgeElement)>> {
        if x.is_zero() {
            return Ok(Vec::new());
        }
        let l = self.h_value(c.side, c.index as u32, x)?;
        let e = GeneratorAction {
            side: c.side,
            kind: GenKind::E,
            index: c.index as u32,
        };
        let mut top = 0u32;
        let mut y = self.act(e, x)?;
        while !y.is_zero() {
            top += 1;
            y = self.act(e, &y)?;
        }
        let twist = Self::param_twist(c.side);
        let mut rest = x.clone();
        let mut out = Vec::new();
        for k in (0..=top).rev() {
            let ek = self.divided(GenKind::E, c, k, &rest)?;
            if ek.is_zero() {
                continue;
            }
            let norm = twist(qbinom(l + 2 * i64::from(k), k));
            if norm.is_zero() {
                return domain("vanishing string normalization");
            }
            let vk = ek.div_laurent(&norm)?;
            rest = &rest - &self.divided(GenKind::F, c, k, &vk)?;
            out.push((k, vk));
        }
        if !rest.is_zero() {
            return domain("string decomposition left a remainder");
        }
        out.reverse();
        Ok(out)
    }

    /// Kashiwara operator `ẽ_c` or `f̃_c` of the module, lower or upper.
    ///
    /// The column side is read through the twist `q ↦ -q` that turns its
    /// `U_p` action into a `U_q` action.
    pub fn rep_crystal_op(
        &self,
        c: Color,
        op: Op,
        variant: CrystalVariant,
        x: &WedgeElement,
    ) -> Result<WedgeElement> {
        let bound = match c.side {
            Side::Q => self.m,
            Side::P => self.n,
        };
        if c.index < 1 || c.index >= i64::from(bound) {
            return domain(format!("color {c} out of range"));
        }
        if !x.is_zero() && x.biweight(self.m, self.n).is_none() {
            return domain("crystal operators need a weight vector");
        }
        let l = if x.is_zero() {
            0
        } else {
            self.h_value(c.side, c.index as u32, x)?
        };
        let mut out = WedgeElement::zero();
        for (k, vk) in self.string_decomposition(c, x)? {
            let lk = l + 2 * i64::from(k);
            let (target, expo) = match op {
                Op::F => (k + 1, lk - 2 * i64::from(k) - 1),
                Op::E if k == 0 => continue,
                Op::E => (k - 1, -lk + 2 * i64::from(k) - 1),
            };
            let mut term = self.divided(GenKind::F, c, target, &vk)?;
            if variant == CrystalVariant::Upper {
                let pre = LaurentPoly::q_pow(expo);
                term = term.scale_laurent(&Self::param_twist(c.side)(pre));
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

/// `bar(w_M)`: reverse the word, scale by `q^{-l(rows)} p^{-l(cols)}`, straighten.
fn bar_monomial(m: &Monomial) -> LaurentSum {
    if let Some(hit) = BAR_MEMO.with(|c| c.borrow().get(m).cloned()) {
        return hit;
    }
    let longest = |keys: Vec<u32>| -> i64 {
        let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
        for k in keys {
            *counts.entry(k).or_default() += 1;
        }
        counts.values().map(|c| c * (c - 1) / 2).sum()
    };
    let lr = longest(m.0.iter().map(|l| l.row).collect());
    let lc = longest(m.0.iter().map(|l| l.col).collect());
    let scale = &LaurentPoly::q_pow(-lr) * &LaurentPoly::p_pow(-lc);
    let rev: Vec<Letter> = m.0.iter().rev().copied().collect();
    let out: LaurentSum = straighten_sum(&rev, Strategy::Leftmost)
        .into_iter()
        .map(|(k, c)| (k, &c * &scale))
        .collect();
    BAR_MEMO.with(|c| c.borrow_mut().insert(m.clone(), out.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WedgeWord {
        s.parse().unwrap()
    }

    fn mono(s: &str) -> Monomial {
        Monomial::new(w(s).0).unwrap()
    }

    fn lp(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn letter_order() {
        assert!(Letter::new(2, 1) < Letter::new(1, 1));
        assert!(Letter::new(1, 1) < Letter::new(2, 2));
        assert!(Letter::new(1, 1) < Letter::new(1, 2));
    }

    #[test]
    fn straighten_examples() {
        assert!(straighten(&w("(1,1),(1,1)")).is_zero());
        let expect = WedgeElement::from_terms([
            (mono("(2,1),(1,2)"), RatFun::one()),
            (mono("(1,1),(2,2)"), lp("-1*q^-1 + 1*q^1")),
        ]);
        assert_eq!(straighten(&w("(1,2),(2,1)")), expect);
        // Same column: the standard order puts the lower row first.
        assert_eq!(
            straighten(&w("(1,1),(2,1)")),
            WedgeElement::from_terms([(mono("(2,1),(1,1)"), lp("-1*q^-1"))])
        );
        let lhs = straighten(&w("(2,1),(1,1)"));
        let rhs = straighten(&w("(1,1),(2,1)")).scale(&lp("-1*q^1"));
        assert_eq!(lhs, rhs);
        assert_eq!(
            straighten(&w("(1,2),(1,1)")),
            WedgeElement::from_terms([(mono("(1,1),(1,2)"), lp("1*q^1"))])
        );
    }

    #[test]
    fn wedge_examples() {
        let a = WedgeElement::monomial(mono("(1,1)"));
        assert_eq!(wedge(&a, &WedgeElement::one()), a);
        assert!(wedge(&a, &a).is_zero());
        let b = WedgeElement::monomial(mono("(2,2)"));
        assert_eq!(wedge(&a, &b), WedgeElement::monomial(mono("(1,1),(2,2)")));
    }

    #[test]
    fn generator_examples() {
        let s = WedgeSpace::new(2, 1).unwrap();
        let x = WedgeElement::monomial(mono("(1,1)"));
        assert_eq!(
            s.act(GeneratorAction::f(Side::Q, 1), &x).unwrap(),
            WedgeElement::monomial(mono("(2,1)"))
        );
        assert!(s.act(GeneratorAction::e(Side::Q, 1), &x).unwrap().is_zero());
        let s = WedgeSpace::new(2, 2).unwrap();
        let y = WedgeElement::monomial(mono("(1,1),(2,2)"));
        assert_eq!(
            s.act(GeneratorAction::k(Side::Q, 1), &y).unwrap(),
            y.scale(&RatFun::q_pow(1))
        );
    }

    #[test]
    fn bar_examples() {
        let s = WedgeSpace::new(2, 2).unwrap();
        for t in ["(1,1)", "(1,1),(2,2)"] {
            let x = WedgeElement::monomial(mono(t));
            assert_eq!(s.bar(&x).unwrap(), x);
        }
        let x = WedgeElement::monomial(mono("(2,1),(1,2)"));
        let expect =
            &x + &WedgeElement::monomial(mono("(1,1),(2,2)")).scale(&lp("-1*q^-1 + 1*q^1"));
        assert_eq!(s.bar(&x).unwrap(), expect);
    }

    #[test]
    fn canonical_antidiagonal() {
        let s = WedgeSpace::new(2, 2).unwrap();
        let cb = s.canonical_basis(&[1, 1], &[1, 1]).unwrap();
        let anti = mono("(2,1),(1,2)");
        let i = cb.monomials.iter().position(|x| *x == anti).unwrap();
        let expect =
            WedgeElement::from_terms([(anti, RatFun::one()), (mono("(1,1),(2,2)"), lp("1*q^1"))]);
        assert_eq!(cb.elements[i], expect);
    }

    #[test]
    fn lower_operator_trivial_string() {
        let s = WedgeSpace::new(2, 1).unwrap();
        let x = WedgeElement::monomial(mono("(1,1)"));
        let y = s
            .rep_crystal_op(Color::q(1), Op::F, CrystalVariant::Lower, &x)
            .unwrap();
        assert_eq!(y, WedgeElement::monomial(mono("(2,1)")));
    }
}
