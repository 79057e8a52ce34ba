//! Exact arithmetic in `Q[q, q^-1]` and its fraction field `Q(q)`.
//!
//! [`LaurentPoly`] is a sparse map from exponents to rational coefficients.
//! [`RatFun`] is a reduced quotient of two Laurent polynomials. Both have a
//! unique stored form, so structural equality is mathematical equality and
//! both types can be hashed.
//!
//! The second parameter `p` of the exterior algebra is never a separate
//! variable: [`LaurentPoly::p`] returns `-q^-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number.
pub type Rational = BigRational;

/// Builds a rational from an `i64`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A Laurent polynomial with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    /// `q^e` with coefficient one.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(rat(1), e)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// The second quantum parameter `p = -q^-1`.
    pub fn p() -> Self {
        Self::monomial(rat(-1), -1)
    }

    /// `p^e = (-1)^e q^-e`, for any integer `e`.
    pub fn p_pow(e: i64) -> Self {
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(rat(sign), -e)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, adding repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &rat(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent, i.e. the order of vanishing at `q = 0`; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.min_exp()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn add_term(&mut self, e: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// The substitution `q -> -q`.
    pub fn negate_q(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, if e.rem_euclid(2) == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Part with strictly positive exponents.
    pub fn positive_part(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .range(1..)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Integer power; negative exponents are only allowed for monomials.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            if self.coeffs.len() != 1 {
                return Err(Error::Domain("negative power of a non-monomial".into()));
            }
            let (e, c) = self.coeffs.iter().next().unwrap();
            let ci = c.recip();
            let mut out = Self::one();
            let base = Self::monomial(ci, -e);
            for _ in 0..(-k) {
                out = &out * &base;
            }
            return Ok(out);
        }
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        Ok(out)
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a, sa) = poly::from_laurent(self);
        let (b, sb) = poly::from_laurent(other);
        let (quo, rem) = poly::divrem(&a, &b);
        if !rem.is_empty() {
            return None;
        }
        Some(poly::to_laurent(&quo, sa - sb))
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> Rational {
        self.coeffs
            .values()
            .fold(Rational::zero(), |acc, c| acc + c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::laurent(s)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// The quantum integer `[a] = (q^a - q^-a) / (q - q^-1)`.
pub fn qint(a: i64) -> LaurentPoly {
    let n = a.abs();
    let sign = if a < 0 { -1 } else { 1 };
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, sign)))
}

/// The quantum factorial `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn qfactorial(n: u32) -> LaurentPoly {
    (1..=i64::from(n)).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k))
}

/// Gaussian binomial coefficient, via the product formula
/// `[n][n-1]...[n-k+1] / [k]!`, valid for every integer `n`.
pub fn qbinom(n: i64, k: u32) -> LaurentPoly {
    let num = (0..i64::from(k)).fold(LaurentPoly::one(), |acc, j| &acc * &qint(n - j));
    num.div_exact(&qfactorial(k))
        .expect("the Gaussian binomial product formula always divides exactly")
}

/// Order of vanishing at `q = 0`; `None` stands for infinity (the zero function).
pub fn valuation(x: &RatFun) -> Option<i64> {
    x.valuation()
}

/// An element of `Q(q)` stored as a reduced fraction.
///
/// The denominator is a polynomial with nonzero constant term and leading
/// coefficient one, and it is coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFun {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from(LaurentPoly::constant(rat(n)))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from(LaurentPoly::q_pow(e))
    }

    /// Builds `num / den`, reducing to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.coeffs.len() == 1 {
            let (e, c) = den.coeffs.iter().next().unwrap();
            return Self {
                num: num.shift(-e).scale(&c.recip()),
                den: LaurentPoly::one(),
            };
        }
        let (n, sn) = poly::from_laurent(&num);
        let (d, sd) = poly::from_laurent(&den);
        let g = poly::gcd(&n, &d);
        let (mut n, _) = poly::divrem(&n, &g);
        let (mut d, _) = poly::divrem(&d, &g);
        let lead = d.last().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            n.iter_mut().for_each(|c| *c *= &inv);
            d.iter_mut().for_each(|c| *c *= &inv);
        }
        Self {
            num: poly::to_laurent(&n, sn - sd),
            den: poly::to_laurent(&d, 0),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this value equals, if it is one.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Order of vanishing at `q = 0`; `None` for the zero function.
    pub fn valuation(&self) -> Option<i64> {
        // The denominator has a nonzero constant term.
        self.num.valuation()
    }

    /// True when the function is regular at `q = 0`.
    pub fn is_regular_at_zero(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    /// The value at `q = 0`, when the function is regular there.
    pub fn eval_zero(&self) -> Option<Rational> {
        match self.valuation() {
            None => Some(Rational::zero()),
            Some(v) if v < 0 => None,
            Some(_) => Some(self.num.coeff(0) / self.den.coeff(0)),
        }
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.den.is_one() {
            return Self {
                num: self.num.bar(),
                den: LaurentPoly::one(),
            };
        }
        Self::normalize(self.num.bar(), self.den.bar())
    }

    /// The substitution `q -> -q`.
    pub fn negate_q(&self) -> Self {
        Self::normalize(self.num.negate_q(), self.den.negate_q())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn scale_laurent(&self, c: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return Self {
                num: &self.num * c,
                den: LaurentPoly::one(),
            };
        }
        Self::normalize(&self.num * c, self.den.clone())
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RatFun {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some(idx) = rest.find(")/(") {
                let body = rest[idx + 3..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced fraction: {s}")))?;
                return RatFun::new(parse::laurent(&rest[..idx])?, parse::laurent(body)?);
            }
        }
        Ok(RatFun::from(parse::laurent(s)?))
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFun::from(&self.num + &rhs.num);
            }
            return RatFun::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &RatFun) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from(&self.num * &rhs.num);
        }
        RatFun::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

/// Dense polynomial helpers over the rationals, lowest degree first.
mod poly {
    use super::*;

    pub type Poly = Vec<Rational>;

    /// Splits a nonzero Laurent polynomial into `q^shift * poly` with `poly(0) != 0`.
    pub fn from_laurent(x: &LaurentPoly) -> (Poly, i64) {
        let lo = x.min_exp().unwrap_or(0);
        let hi = x.max_exp().unwrap_or(0);
        let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in x.terms() {
            out[(e - lo) as usize] = c.clone();
        }
        (out, lo)
    }

    pub fn to_laurent(p: &[Rational], shift: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, c) in p.iter().enumerate() {
            out.add_term(i as i64 + shift, c);
        }
        out
    }

    fn trim(p: &mut Poly) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
        let mut rem: Poly = a.to_vec();
        trim(&mut rem);
        let mut b = b.to_vec();
        trim(&mut b);
        let db = b.len() - 1;
        let lead = b[db].clone();
        if rem.len() <= db {
            return (Vec::new(), rem);
        }
        let mut quo = vec![Rational::zero(); rem.len() - db];
        while rem.len() > db {
            let k = rem.len() - 1 - db;
            let c = rem.last().unwrap() / &lead;
            for (i, bc) in b.iter().enumerate() {
                rem[k + i] -= &c * bc;
            }
            quo[k] = c;
            rem.pop();
            trim(&mut rem);
        }
        trim(&mut quo);
        (quo, rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &[Rational], b: &[Rational]) -> Poly {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
        }
        let lead = x.last().cloned().unwrap_or_else(Rational::one);
        x.iter().map(|c| c / &lead).collect()
    }
}

mod parse {
    use super::*;

    struct Cursor<'a> {
        s: &'a [u8],
        pos: usize,
    }

    impl Cursor<'_> {
        fn skip_ws(&mut self) {
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.s.get(self.pos).copied()
        }

        fn eat(&mut self, b: u8) -> bool {
            if self.peek() == Some(b) {
                self.pos += 1;
                true
            } else {
                false
            }
        }

        fn digits(&mut self) -> Option<String> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            (self.pos > start)
                .then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
        }

        fn err(&self, what: &str) -> Error {
            Error::Parse(format!(
                "{what} at byte {} of {:?}",
                self.pos,
                String::from_utf8_lossy(self.s)
            ))
        }
    }

    /// Grammar: `term (('+' | '-') term)*` where a term is
    /// `[-] [coeff] ['*'] [q ['^' [-]int]]` and `coeff` is `int` or `int/int`.
    pub fn laurent(text: &str) -> Result<LaurentPoly> {
        let mut cur = Cursor {
            s: text.as_bytes(),
            pos: 0,
        };
        let mut out = LaurentPoly::zero();
        let mut sign = 1i64;
        if cur.eat(b'-') {
            sign = -1;
        }
        loop {
            if cur.eat(b'-') {
                sign = -sign;
            }
            let coeff = match cur.digits() {
                Some(n) => {
                    let n: BigInt = n.parse().map_err(|_| cur.err("bad integer"))?;
                    if cur.eat(b'/') {
                        let Some(d) = cur.digits() else {
                            return Err(cur.err("expected denominator"));
                        };
                        let d: BigInt = d.parse().map_err(|_| cur.err("bad integer"))?;
                        if d.is_zero() {
                            return Err(cur.err("zero denominator"));
                        }
                        Some(Rational::new(n, d))
                    } else {
                        Some(Rational::from_integer(n))
                    }
                }
                None => None,
            };
            let had_star = cur.eat(b'*');
            let exp = if cur.eat(b'q') {
                if cur.eat(b'^') {
                    let neg = cur.eat(b'-');
                    let Some(digits) = cur.digits() else {
                        return Err(cur.err("expected exponent"));
                    };
                    let e: i64 = digits.parse().map_err(|_| cur.err("exponent overflow"))?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else if had_star || coeff.is_none() {
                return Err(cur.err("expected a term"));
            } else {
                0
            };
            let c = coeff.unwrap_or_else(|| rat(1)) * rat(sign);
            out.add_term(exp, &c);
            match cur.peek() {
                None => break,
                Some(b'+') => {
                    cur.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    cur.pos += 1;
                    sign = -1;
                }
                Some(_) => return Err(cur.err("unexpected character")),
            }
        }
        Ok(out)
    }
}
