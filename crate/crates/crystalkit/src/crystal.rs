//! Generic crystal engine.
//!
//! A realization implements [`Crystal`] by supplying single-element
//! operator callbacks. Everything else (string lengths, tensor products,
//! connected components, highest weight classification and DOT export) is
//! derived here.
//!
//! Tensor products follow the rule
//!
//! * `f̃_i(b1 ⊗ b2) = f̃_i b1 ⊗ b2` if `φ_i(b1) > ε_i(b2)`, else `b1 ⊗ f̃_i b2`,
//! * `ẽ_i(b1 ⊗ b2) = ẽ_i b1 ⊗ b2` if `φ_i(b1) ≥ ε_i(b2)`, else `b1 ⊗ ẽ_i b2`.
//!
//! For longer tensor words this is the usual signature rule implemented by
//! [`signature`].

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::{self, Debug, Write as _};
use std::hash::Hash;

use crate::error::{domain, Error, Result};

/// Default cap on the number of elements a closure may visit.
pub const DEFAULT_BUDGET: usize = 5_000_000;

/// Which of the two commuting families a color belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// The row side (`gl_m`, or the only family of a one-family crystal).
    Q,
    /// The column side (`gl_n`), whose operators are written with dots.
    P,
}

/// An operator color: a side and an index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color {
    pub side: Side,
    pub index: i64,
}

impl Color {
    pub fn q(index: i64) -> Self {
        Self {
            side: Side::Q,
            index,
        }
    }

    pub fn p(index: i64) -> Self {
        Self {
            side: Side::P,
            index,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Q => write!(f, "{}", self.index),
            Side::P => write!(f, "p{}", self.index),
        }
    }
}

impl Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Raising or lowering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    E,
    F,
}

/// A crystal given by operator callbacks.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + Debug;
    type Weight: Clone + Eq + Ord + Debug;

    /// The operator colors.
    fn colors(&self) -> Vec<Color>;

    fn e(&self, c: Color, b: &Self::Elem) -> Option<Self::Elem>;

    fn f(&self, c: Color, b: &Self::Elem) -> Option<Self::Elem>;

    fn weight(&self, b: &Self::Elem) -> Self::Weight;

    fn apply(&self, op: Op, c: Color, b: &Self::Elem) -> Option<Self::Elem> {
        match op {
            Op::E => self.e(c, b),
            Op::F => self.f(c, b),
        }
    }

    /// `ε_c(b)`, by default the length of the `ẽ_c` string.
    fn epsilon(&self, c: Color, b: &Self::Elem) -> usize {
        string_length(|x| self.e(c, x), b)
    }

    /// `φ_c(b)`, by default the length of the `f̃_c` string.
    fn phi(&self, c: Color, b: &Self::Elem) -> usize {
        string_length(|x| self.f(c, x), b)
    }

    /// True when every `ẽ_c` kills `b`.
    fn is_highest(&self, b: &Self::Elem) -> bool {
        self.colors().into_iter().all(|c| self.e(c, b).is_none())
    }

    /// Canonical text form used for DOT export.
    fn label(&self, b: &Self::Elem) -> String {
        format!("{b:?}")
    }
}

fn string_length<E: Clone>(step: impl Fn(&E) -> Option<E>, b: &E) -> usize {
    let mut n = 0;
    let mut cur = b.clone();
    while let Some(next) = step(&cur) {
        cur = next;
        n += 1;
    }
    n
}

/// Outcome of the signature rule on a tensor word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    /// `ε` of the whole tensor.
    pub epsilon: usize,
    /// `φ` of the whole tensor.
    pub phi: usize,
    /// Factor on which `ẽ` acts, if `ε > 0`.
    pub e_factor: Option<usize>,
    /// Factor on which `f̃` acts, if `φ > 0`.
    pub f_factor: Option<usize>,
}

impl Signature {
    pub fn factor(&self, op: Op) -> Option<usize> {
        match op {
            Op::E => self.e_factor,
            Op::F => self.f_factor,
        }
    }
}

/// Signature rule for `b_1 ⊗ b_2 ⊗ … ⊗ b_k`, given `(ε_i(b_j), φ_i(b_j))` per factor.
///
/// Each factor contributes `-^ε +^φ`; adjacent `+-` pairs cancel. `f̃` acts on
/// the factor owning the leftmost surviving `+`, `ẽ` on the factor owning the
/// rightmost surviving `-`.
pub fn signature<I: IntoIterator<Item = (usize, usize)>>(factors: I) -> Signature {
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut minus = 0;
    let mut e_factor = None;
    for (k, (eps, phi)) in factors.into_iter().enumerate() {
        let mut m = eps;
        while m > 0 {
            let Some(top) = pending.last_mut() else { break };
            let t = m.min(top.1);
            top.1 -= t;
            m -= t;
            if top.1 == 0 {
                pending.pop();
            }
        }
        if m > 0 {
            minus += m;
            e_factor = Some(k);
        }
        if phi > 0 {
            pending.push((k, phi));
        }
    }
    Signature {
        epsilon: minus,
        phi: pending.iter().map(|p| p.1).sum(),
        e_factor,
        f_factor: pending.first().map(|p| p.0),
    }
}

/// The tensor product `A ⊗ B` of two crystals sharing their colors.
#[derive(Clone, Debug)]
pub struct Tensor<A, B> {
    pub left: A,
    pub right: B,
}

impl<A, B> Tensor<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Self { left, right }
    }
}

/// Weights of tensor factors add.
pub trait WeightAdd {
    fn add(&self, other: &Self) -> Self;
}

impl WeightAdd for Vec<i64> {
    fn add(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        (0..n)
            .map(|i| self.get(i).copied().unwrap_or(0) + other.get(i).copied().unwrap_or(0))
            .collect()
    }
}

impl<A, B> Crystal for Tensor<A, B>
where
    A: Crystal,
    B: Crystal<Weight = A::Weight>,
    A::Weight: WeightAdd,
{
    type Elem = (A::Elem, B::Elem);
    type Weight = A::Weight;

    fn colors(&self) -> Vec<Color> {
        self.left.colors()
    }

    fn e(&self, c: Color, b: &Self::Elem) -> Option<Self::Elem> {
        if self.left.phi(c, &b.0) >= self.right.epsilon(c, &b.1) {
            Some((self.left.e(c, &b.0)?, b.1.clone()))
        } else {
            Some((b.0.clone(), self.right.e(c, &b.1)?))
        }
    }

    fn f(&self, c: Color, b: &Self::Elem) -> Option<Self::Elem> {
        if self.left.phi(c, &b.0) > self.right.epsilon(c, &b.1) {
            Some((self.left.f(c, &b.0)?, b.1.clone()))
        } else {
            Some((b.0.clone(), self.right.f(c, &b.1)?))
        }
    }

    fn weight(&self, b: &Self::Elem) -> Self::Weight {
        self.left.weight(&b.0).add(&self.right.weight(&b.1))
    }

    fn epsilon(&self, c: Color, b: &Self::Elem) -> usize {
        let (e1, p1) = (self.left.epsilon(c, &b.0), self.left.phi(c, &b.0));
        let (e2, p2) = (self.right.epsilon(c, &b.1), self.right.phi(c, &b.1));
        signature([(e1, p1), (e2, p2)]).epsilon
    }

    fn phi(&self, c: Color, b: &Self::Elem) -> usize {
        let (e1, p1) = (self.left.epsilon(c, &b.0), self.left.phi(c, &b.0));
        let (e2, p2) = (self.right.epsilon(c, &b.1), self.right.phi(c, &b.1));
        signature([(e1, p1), (e2, p2)]).phi
    }

    fn label(&self, b: &Self::Elem) -> String {
        format!("{} ⊗ {}", self.left.label(&b.0), self.right.label(&b.1))
    }
}

/// The natural crystal `1 → 2 → … → n` of `gl_n`.
#[derive(Clone, Copy, Debug)]
pub struct Natural {
    pub n: u32,
}

impl Crystal for Natural {
    type Elem = u32;
    type Weight = Vec<i64>;

    fn colors(&self) -> Vec<Color> {
        (1..i64::from(self.n)).map(Color::q).collect()
    }

    fn e(&self, c: Color, b: &u32) -> Option<u32> {
        (i64::from(*b) == c.index + 1).then(|| b - 1)
    }

    fn f(&self, c: Color, b: &u32) -> Option<u32> {
        (i64::from(*b) == c.index && *b < self.n).then(|| b + 1)
    }

    fn weight(&self, b: &u32) -> Vec<i64> {
        let mut w = vec![0; self.n as usize];
        w[*b as usize - 1] = 1;
        w
    }
}

/// One connected component of a closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component<E> {
    /// The unique element killed by every `ẽ`, when there is exactly one.
    pub highest: Option<E>,
    /// Elements in canonical order.
    pub elements: Vec<E>,
}

impl<E> Component<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Splits the closure of `seeds` under all operators into connected components.
///
/// Components are ordered by the weight of their representative (the highest
/// element, or the least element when there is no unique highest one) and
/// then by the representative itself.
pub fn components<C: Crystal>(
    crystal: &C,
    seeds: &[C::Elem],
    budget: usize,
) -> Result<Vec<Component<C::Elem>>> {
    let colors = crystal.colors();
    let mut seen: HashMap<C::Elem, ()> = HashMap::new();
    let mut out = Vec::new();
    for seed in seeds {
        if seen.contains_key(seed) {
            continue;
        }
        let mut queue = VecDeque::from([seed.clone()]);
        seen.insert(seed.clone(), ());
        let mut elements = Vec::new();
        while let Some(b) = queue.pop_front() {
            for &c in &colors {
                for op in [Op::E, Op::F] {
                    if let Some(nb) = crystal.apply(op, c, &b) {
                        if !seen.contains_key(&nb) {
                            if seen.len() >= budget {
                                return Err(Error::Budget {
                                    explored: seen.len(),
                                    budget,
                                });
                            }
                            seen.insert(nb.clone(), ());
                            queue.push_back(nb);
                        }
                    }
                }
            }
            elements.push(b);
        }
        elements.sort();
        let tops: Vec<&C::Elem> = elements.iter().filter(|b| crystal.is_highest(b)).collect();
        let highest = (tops.len() == 1).then(|| tops[0].clone());
        out.push(Component { highest, elements });
    }
    out.sort_by_cached_key(|comp| {
        let rep = comp
            .highest
            .clone()
            .unwrap_or_else(|| comp.elements[0].clone());
        (crystal.weight(&rep), rep)
    });
    Ok(out)
}

/// Counts components by the label of their highest weight.
///
/// Fails when some component lacks a unique highest element.
pub fn decompose_multiplicities<C, L, F>(
    crystal: &C,
    seeds: &[C::Elem],
    budget: usize,
    mut label: F,
) -> Result<BTreeMap<L, usize>>
where
    C: Crystal,
    L: Ord,
    F: FnMut(&C::Weight) -> Result<L>,
{
    let mut table = BTreeMap::new();
    for comp in components(crystal, seeds, budget)? {
        let Some(top) = comp.highest else {
            return domain("a component has no unique highest weight element");
        };
        *table.entry(label(&crystal.weight(&top))?).or_insert(0) += 1;
    }
    Ok(table)
}

/// Converts a dominant `gl_N` weight into the pair of partitions it encodes.
#[allow(clippy::ptr_arg)]
pub fn gl_weight_label(w: &Vec<i64>) -> Result<crate::partitions::PartitionPair> {
    crate::partitions::PartitionPair::from_dominant(w)
}

/// DOT rendering of the subgraph on `elements`, with at most `cap` nodes.
///
/// Nodes are labelled by [`Crystal::label`]; an edge `b -> f̃_c b` carries the
/// color `c`. Truncation is reported in a comment.
pub fn to_dot<C: Crystal>(crystal: &C, elements: &[C::Elem], cap: usize) -> String {
    let shown = &elements[..elements.len().min(cap)];
    let index: HashMap<&C::Elem, usize> = shown.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut out = String::from("digraph crystal {\n");
    if shown.len() < elements.len() {
        let _ = writeln!(
            out,
            "  // truncated: showing {} of {} nodes",
            shown.len(),
            elements.len()
        );
    }
    for (i, b) in shown.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{i} [label=\"{}\"];",
            crystal.label(b).replace('"', "\\\"")
        );
    }
    for (i, b) in shown.iter().enumerate() {
        for c in crystal.colors() {
            if let Some(t) = crystal.f(c, b) {
                if let Some(j) = index.get(&t) {
                    let _ = writeln!(out, "  n{i} -> n{j} [label=\"{c}\"];");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Checks the axioms `ẽ f̃ b = b`, `f̃ ẽ b = b` and
/// `φ - ε = ⟨h, wt⟩` (through `pairing`) on the given elements.
pub fn check_axioms<C, P>(
    crystal: &C,
    elements: &[C::Elem],
    pairing: P,
) -> std::result::Result<(), String>
where
    C: Crystal,
    P: Fn(Color, &C::Weight) -> i64,
{
    for b in elements {
        for c in crystal.colors() {
            if let Some(fb) = crystal.f(c, b) {
                if crystal.e(c, &fb).as_ref() != Some(b) {
                    return Err(format!("e_{c} f_{c} {b:?} != {b:?}"));
                }
            }
            if let Some(eb) = crystal.e(c, b) {
                if crystal.f(c, &eb).as_ref() != Some(b) {
                    return Err(format!("f_{c} e_{c} {b:?} != {b:?}"));
                }
            }
            let lhs = crystal.phi(c, b) as i64 - crystal.epsilon(c, b) as i64;
            let rhs = pairing(c, &crystal.weight(b));
            if lhs != rhs {
                return Err(format!(
                    "phi - eps = {lhs} but <h_{c}, wt> = {rhs} at {b:?}"
                ));
            }
        }
    }
    Ok(())
}

/// `⟨h_i, w⟩` for a `gl_N` weight vector indexed from one.
#[allow(clippy::ptr_arg)]
pub fn gl_pairing(c: Color, w: &Vec<i64>) -> i64 {
    let i = c.index as usize;
    w.get(i - 1).copied().unwrap_or(0) - w.get(i).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_rule_examples() {
        let t = Tensor::new(Natural { n: 2 }, Natural { n: 2 });
        let c = Color::q(1);
        assert_eq!(t.f(c, &(1, 1)), Some((2, 1)));
        assert_eq!(t.e(c, &(2, 1)), Some((1, 1)));
        assert_eq!(t.f(c, &(2, 2)), None);
    }

    #[test]
    fn signature_matches_two_factor_rule() {
        for e1 in 0..3 {
            for p1 in 0..3 {
                for e2 in 0..3 {
                    for p2 in 0..3 {
                        let s = signature([(e1, p1), (e2, p2)]);
                        let f_left = p1 > e2;
                        let e_left = p1 >= e2;
                        if s.phi > 0 {
                            assert_eq!(s.f_factor == Some(0), f_left);
                        }
                        if s.epsilon > 0 {
                            assert_eq!(s.e_factor == Some(0), e_left);
                        }
                        assert_eq!(s.epsilon, e1 + e2.saturating_sub(p1));
                        assert_eq!(s.phi, p2 + p1.saturating_sub(e2));
                    }
                }
            }
        }
    }

    #[test]
    fn natural_is_connected() {
        let nat = Natural { n: 3 };
        let comps = components(&nat, &[1, 2, 3], DEFAULT_BUDGET).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 3);
        assert_eq!(comps[0].highest, Some(1));
        check_axioms(&nat, &[1, 2, 3], gl_pairing).unwrap();
    }

    #[test]
    fn budget_is_enforced() {
        let t = Tensor::new(Natural { n: 3 }, Natural { n: 3 });
        let err = components(&t, &[(1, 1)], 2).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn dot_export() {
        let nat = Natural { n: 2 };
        let dot = to_dot(&nat, &[1, 2], 10);
        assert!(dot.contains("n0 -> n1 [label=\"1\"]"));
        let dot = to_dot(&nat, &[1, 2], 1);
        assert!(dot.contains("truncated"));
    }
}
