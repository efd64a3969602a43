//! Minimal generating sets, free-operad terms over graded generators, and
//! the per-arity dimension profile of the relation space.
//!
//! The evaluation of a free term lands on a single basis word or dies, so
//! the kernel of the evaluation at each arity has an explicit basis of
//! differences of trees sharing an image (plus the trees whose image died).
//! The arity-n component of the ideal generated by all lower-arity kernels
//! is spanned by single composition steps against full kernel bases: any
//! one-hole context around a kernel element peels, at its root, into a tree
//! with one leaf replaced by a smaller-arity context image, and that image
//! lies in the smaller full kernel. The count of minimal relations at arity
//! n is then `dim kernel(n) - dim ideal(n)`, with the ideal rank computed
//! by exact integer elimination.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cliffs::{is_cliff, CliffWord};
use crate::compose::white_square;
use crate::error::Result;
use crate::hillops::{wedge, QuotientContext};
use crate::linalg::{rank, SparseRow};
use crate::operad::{Basis, OperadContext, OperadElement};
use crate::rangemap::RangeMap;

/// A planar rooted tree whose internal nodes carry generator words; the
/// arity is the leaf count and a bare leaf is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreeTerm {
    Leaf,
    Node {
        generator: CliffWord,
        children: Vec<FreeTerm>,
    },
}

impl FreeTerm {
    pub fn arity(&self) -> usize {
        match self {
            FreeTerm::Leaf => 1,
            FreeTerm::Node { children, .. } => children.iter().map(FreeTerm::arity).sum(),
        }
    }

    /// Substitutes `sub` for the 1-based `leaf`-th leaf.
    pub fn graft(&self, leaf: usize, sub: &FreeTerm) -> FreeTerm {
        debug_assert!(leaf >= 1 && leaf <= self.arity());
        match self {
            FreeTerm::Leaf => sub.clone(),
            FreeTerm::Node {
                generator,
                children,
            } => {
                let mut remaining = leaf;
                let mut out = Vec::with_capacity(children.len());
                let mut done = false;
                for child in children {
                    let a = child.arity();
                    if !done && remaining <= a {
                        out.push(child.graft(remaining, sub));
                        done = true;
                    } else {
                        if !done {
                            remaining -= a;
                        }
                        out.push(child.clone());
                    }
                }
                FreeTerm::Node {
                    generator: generator.clone(),
                    children: out,
                }
            }
        }
    }
}

/// Anything a free term can be evaluated into: the cliff operads and their
/// quotients, both with word-or-nothing elementary composition.
pub trait EvalTarget {
    fn delta(&self) -> &RangeMap;

    /// Elementary composition at the word level: the composite word, or
    /// nothing when the composition vanishes.
    fn compose_words(&self, u: &CliffWord, slot: usize, v: &CliffWord)
        -> Result<Option<CliffWord>>;

    /// Basis words of one arity in lexicographic order.
    fn basis_words(&self, arity: usize) -> Result<Vec<CliffWord>>;

    /// Minimal generating set, graded by arity (`result[n]` holds arity n;
    /// entries 0 and 1 stay empty).
    fn generating_set(&self, max_arity: usize) -> Result<Vec<Vec<CliffWord>>>;
}

impl EvalTarget for OperadContext {
    fn delta(&self) -> &RangeMap {
        self.delta()
    }

    fn compose_words(
        &self,
        u: &CliffWord,
        slot: usize,
        v: &CliffWord,
    ) -> Result<Option<CliffWord>> {
        let w = white_square(u, slot, v)?;
        Ok(is_cliff(self.delta(), &w)?.then_some(w))
    }

    fn basis_words(&self, arity: usize) -> Result<Vec<CliffWord>> {
        self.words(arity)
    }

    fn generating_set(&self, max_arity: usize) -> Result<Vec<Vec<CliffWord>>> {
        let mut graded = vec![Vec::new(); max_arity + 1];
        for n in 2..=max_arity {
            for w in self.words(n)? {
                if is_prime(self.delta(), &w)? {
                    graded[n].push(w);
                }
            }
        }
        Ok(graded)
    }
}

impl EvalTarget for QuotientContext {
    fn delta(&self) -> &RangeMap {
        self.delta()
    }

    fn compose_words(
        &self,
        u: &CliffWord,
        slot: usize,
        v: &CliffWord,
    ) -> Result<Option<CliffWord>> {
        let spliced = white_square(u, slot, v)?;
        if !is_cliff(self.delta(), &spliced)? {
            return Ok(None);
        }
        wedge(self, &spliced)
    }

    fn basis_words(&self, arity: usize) -> Result<Vec<CliffWord>> {
        self.words(arity)
    }

    /// Members not expressible as a composition of two non-unit members.
    fn generating_set(&self, max_arity: usize) -> Result<Vec<Vec<CliffWord>>> {
        let mut graded = vec![Vec::new(); max_arity + 1];
        for n in 2..=max_arity {
            let mut decomposable: Vec<CliffWord> = Vec::new();
            for a in 2..n {
                let b = n + 1 - a;
                for u in self.words(a)? {
                    for v in self.words(b)? {
                        for i in 1..=a {
                            if let Some(w) = self.compose_words(&u, i, &v)? {
                                decomposable.push(w);
                            }
                        }
                    }
                }
            }
            decomposable.sort();
            decomposable.dedup();
            graded[n] = self
                .words(n)?
                .into_iter()
                .filter(|w| decomposable.binary_search(w).is_err())
                .collect();
        }
        Ok(graded)
    }
}

/// True when the only splittings of `w` into two cliffs are the trivial
/// ones. Brute force over every slot and segment length; the empty word is
/// not prime.
pub fn is_prime(delta: &RangeMap, w: &CliffWord) -> Result<bool> {
    delta.check_length(w.len())?;
    let l = w.len();
    if l == 0 {
        return Ok(false);
    }
    for seg in 1..l {
        for i in 1..=l - seg + 1 {
            let inner = CliffWord::new(w.letters()[i - 1..i - 1 + seg].to_vec());
            if !is_cliff(delta, &inner)? {
                continue;
            }
            let mut outer: Vec<u32> = w.letters()[..i - 1].to_vec();
            outer.extend_from_slice(&w.letters()[i - 1 + seg..]);
            if is_cliff(delta, &CliffWord::new(outer))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The recursive primality characterization special to arithmetic maps:
/// scanning prefixes, a prime is extended by any nonzero letter, and a
/// non-prime becomes prime exactly when the new letter is too large to sit
/// anywhere earlier. Must agree with [`is_prime`] on arithmetic cliffs.
pub fn is_prime_arithmetic_fast(m: u32, w: &CliffWord) -> bool {
    let l = w.len();
    if l == 0 {
        return false;
    }
    let mut prime = true;
    for j in 2..=l {
        let a = w.letter(j);
        let threshold = (j as u32 - 2) * m + 1;
        prime = if prime { a != 0 } else { a >= threshold };
    }
    prime
}

/// All free terms of one arity over a graded generator alphabet, in a
/// deterministic order, with index lookup. Terms of arity n are a bare
/// leaf (n = 1) or a root generator of arity k with child terms whose
/// arities sum to n, enumerated by root generator and then by the
/// composition of n into k parts.
pub struct FreeTermTable {
    terms: Vec<Vec<FreeTerm>>,
    index: Vec<HashMap<FreeTerm, usize>>,
}

/// Enumeration order knob; ranks are order-independent, which the tests
/// exploit as a determinism check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Forward,
    Reversed,
}

impl FreeTermTable {
    pub fn new(generators: &[Vec<CliffWord>], max_arity: usize, order: TermOrder) -> Self {
        let mut terms: Vec<Vec<FreeTerm>> = vec![Vec::new(); max_arity + 1];
        if max_arity >= 1 {
            terms[1] = vec![FreeTerm::Leaf];
        }
        for n in 2..=max_arity {
            let mut level: Vec<FreeTerm> = Vec::new();
            for k in 2..=n {
                for g in generators.get(k).map(Vec::as_slice).unwrap_or(&[]) {
                    for split in compositions(n, k) {
                        let choices: Vec<&[FreeTerm]> =
                            split.iter().map(|&a| terms[a].as_slice()).collect();
                        product(&choices, &mut |children| {
                            level.push(FreeTerm::Node {
                                generator: g.clone(),
                                children: children.to_vec(),
                            });
                        });
                    }
                }
            }
            terms[n] = level;
        }
        if order == TermOrder::Reversed {
            for level in &mut terms {
                level.reverse();
            }
        }
        let index = terms
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, t)| (t.clone(), i))
                    .collect()
            })
            .collect();
        FreeTermTable { terms, index }
    }

    pub fn terms(&self, arity: usize) -> &[FreeTerm] {
        &self.terms[arity]
    }

    pub fn index_of(&self, arity: usize, term: &FreeTerm) -> Option<usize> {
        self.index[arity].get(term).copied()
    }
}

/// Compositions of `n` into exactly `k` positive parts, lexicographic.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            current.push(n);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in 1..=n - k + 1 {
            current.push(first);
            go(n - first, k - 1, current, out);
            current.pop();
        }
    }
    if k >= 1 && n >= k {
        go(n, k, &mut current, &mut out);
    }
    out
}

fn product(choices: &[&[FreeTerm]], emit: &mut impl FnMut(&[FreeTerm])) {
    let mut picked: Vec<FreeTerm> = Vec::with_capacity(choices.len());
    fn go(
        choices: &[&[FreeTerm]],
        picked: &mut Vec<FreeTerm>,
        emit: &mut impl FnMut(&[FreeTerm]),
    ) {
        if picked.len() == choices.len() {
            emit(picked);
            return;
        }
        for t in choices[picked.len()] {
            picked.push(t.clone());
            go(choices, picked, emit);
            picked.pop();
        }
    }
    go(choices, &mut picked, emit);
}

/// All free terms of one arity over a graded generating set.
pub fn free_terms(generators: &[Vec<CliffWord>], arity: usize) -> Vec<FreeTerm> {
    FreeTermTable::new(generators, arity, TermOrder::Forward)
        .terms(arity)
        .to_vec()
}

/// Image word of a free term, or nothing when some composition dies.
/// Children substitute right to left so earlier slots stay put.
pub fn evaluate_word<T: EvalTarget>(target: &T, term: &FreeTerm) -> Result<Option<CliffWord>> {
    match term {
        FreeTerm::Leaf => Ok(Some(CliffWord::empty())),
        FreeTerm::Node {
            generator,
            children,
        } => {
            let mut acc = generator.clone();
            for (j, child) in children.iter().enumerate().rev() {
                match evaluate_word(target, child)? {
                    None => return Ok(None),
                    Some(cw) => match target.compose_words(&acc, j + 1, &cw)? {
                        None => return Ok(None),
                        Some(next) => acc = next,
                    },
                }
            }
            Ok(Some(acc))
        }
    }
}

/// Evaluation as an elementary-basis element: a monomial or zero.
pub fn evaluate<T: EvalTarget>(target: &T, term: &FreeTerm) -> Result<OperadElement> {
    Ok(match evaluate_word(target, term)? {
        Some(w) => {
            let arity = w.size();
            OperadElement::from_clean_terms(Basis::E, arity, [(w, BigRational::one())])
        }
        None => OperadElement::zero(Basis::E, term.arity()),
    })
}

/// One arity of the relation profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationProfile {
    pub arity: usize,
    pub dim_free: usize,
    pub dim_target: usize,
    pub dim_kernel: usize,
    pub dim_ideal: usize,
    pub dim_minimal: usize,
}

/// Profile rows plus a flag marking a budget-truncated run.
#[derive(Clone, Debug, Default)]
pub struct ProfileOutcome {
    pub rows: Vec<RelationProfile>,
    pub hit_budget: bool,
}

/// Sizes of the minimal generating set per arity, `1..=max_arity`.
pub fn generator_counts<T: EvalTarget>(target: &T, max_arity: usize) -> Result<Vec<usize>> {
    let graded = target.generating_set(max_arity)?;
    Ok((1..=max_arity).map(|n| graded[n].len()).collect())
}

/// Per-arity dimensions of the evaluation kernel and of the ideal its
/// lower-arity part generates, up to `max_arity` or until the budget runs
/// out (partial rows are kept and flagged).
pub fn relation_profile<T: EvalTarget>(
    target: &T,
    max_arity: usize,
    budget: Duration,
) -> Result<ProfileOutcome> {
    relation_profile_ordered(target, max_arity, budget, TermOrder::Forward)
}

pub fn relation_profile_ordered<T: EvalTarget>(
    target: &T,
    max_arity: usize,
    budget: Duration,
    order: TermOrder,
) -> Result<ProfileOutcome> {
    let start = Instant::now();
    let generators = target.generating_set(max_arity)?;
    let table = FreeTermTable::new(&generators, max_arity, order);
    let mut outcome = ProfileOutcome::default();
    // Full kernel bases per arity, as sparse vectors over term indices.
    let mut kernels: Vec<Vec<SparseRow>> = vec![Vec::new(); max_arity + 1];

    for n in 1..=max_arity {
        if start.elapsed() > budget {
            outcome.hit_budget = true;
            return Ok(outcome);
        }
        let terms = table.terms(n);
        let words = target.basis_words(n)?;
        let column: HashMap<&CliffWord, usize> =
            words.iter().enumerate().map(|(i, w)| (w, i)).collect();

        // Kernel basis: per image word, every term minus the first term
        // seen with that image; dead terms enter alone.
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let mut kernel: Vec<SparseRow> = Vec::new();
        for (t, term) in terms.iter().enumerate() {
            match evaluate_word(target, term)? {
                None => kernel.push(vec![(t, BigInt::one())]),
                Some(w) => {
                    let col = *column
                        .get(&w)
                        .expect("evaluation image must be a basis word");
                    match seen.get(&col) {
                        None => {
                            seen.insert(col, t);
                        }
                        Some(&rep) => {
                            kernel.push(vec![(rep, BigInt::one()), (t, -BigInt::one())])
                        }
                    }
                }
            }
        }
        let dim_kernel = kernel.len();

        // Single-step closure of the lower-arity kernels.
        let mut ideal_rows: Vec<SparseRow> = Vec::new();
        for b in 2..n {
            if kernels[b].is_empty() {
                continue;
            }
            let k = n - b + 1;
            let outer = table.terms(k);
            for x in &kernels[b] {
                let x_trees: Vec<(&FreeTerm, &BigInt)> = x
                    .iter()
                    .map(|(idx, c)| (&table.terms(b)[*idx], c))
                    .collect();
                // Context above: x plugged into each leaf of each outer term.
                for t in outer {
                    for slot in 1..=k {
                        let row: SparseRow = x_trees
                            .iter()
                            .map(|(tree, c)| {
                                let composed = t.graft(slot, tree);
                                let idx = table
                                    .index_of(n, &composed)
                                    .expect("graft lands in the term table");
                                (idx, (*c).clone())
                            })
                            .collect();
                        ideal_rows.push(row);
                    }
                }
                // Context below: each outer term plugged into each leaf of x.
                for t in outer {
                    for slot in 1..=b {
                        let row: SparseRow = x_trees
                            .iter()
                            .map(|(tree, c)| {
                                let composed = tree.graft(slot, t);
                                let idx = table
                                    .index_of(n, &composed)
                                    .expect("graft lands in the term table");
                                (idx, (*c).clone())
                            })
                            .collect();
                        ideal_rows.push(row);
                    }
                }
            }
        }
        let dim_ideal = rank(ideal_rows);

        outcome.rows.push(RelationProfile {
            arity: n,
            dim_free: terms.len(),
            dim_target: words.len(),
            dim_kernel,
            dim_ideal,
            dim_minimal: dim_kernel - dim_ideal,
        });
        kernels[n] = kernel;
    }
    Ok(outcome)
}
