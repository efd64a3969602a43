//! Binary quadratic presentations: the presentation of the constant-map
//! hill operads, its Koszul dual in the starred generators, the triangular
//! change to the K-generators, and quotient dimensions computed from a
//! presentation alone.
//!
//! The free operad on g binary generators has, in arity n, a basis of
//! binary trees with generator-labeled nodes; its dimension is the Catalan
//! number times g^(n-1). Relations live in arity 3, whose basis splits into
//! the left combs `x o_1 y` and right combs `x o_2 y`. Ideal components are
//! grown arity by arity with the same single-step closure argument as the
//! relation-profile engine, carrying full echelon bases.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::linalg::{Echelon, SparseRow};

/// A term of the arity-3 free operad on binary generators: the generator
/// `inner` plugged into slot 1 or 2 of the generator `outer`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arity3Term {
    pub outer: usize,
    pub slot: usize,
    pub inner: usize,
}

impl Arity3Term {
    pub fn new(outer: usize, slot: usize, inner: usize) -> Self {
        assert!(slot == 1 || slot == 2, "binary slots only");
        Arity3Term { outer, slot, inner }
    }

    /// Column index in the arity-3 basis of dimension `2 g^2`.
    pub fn column(&self, generators: usize) -> usize {
        (self.slot - 1) * generators * generators + self.outer * generators + self.inner
    }
}

/// An exact-rational combination of arity-3 terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Arity3Term, BigRational)>,
}

impl Relation {
    fn difference(pos: Arity3Term, neg: Arity3Term) -> Self {
        Relation {
            terms: vec![
                (pos, BigRational::one()),
                (neg, -BigRational::one()),
            ],
        }
    }

    /// Integer row over the arity-3 basis, denominators cleared.
    pub fn row(&self, generators: usize) -> SparseRow {
        let lcm = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        self.terms
            .iter()
            .map(|(t, c)| {
                let cleared = (c * BigRational::from_integer(lcm.clone())).to_integer();
                (t.column(generators), cleared)
            })
            .collect()
    }
}

/// Generators (all binary, numbered `0..generators`) and arity-3 relations.
#[derive(Clone, Debug)]
pub struct BinaryPresentation {
    pub generators: usize,
    pub relations: Vec<Relation>,
}

impl BinaryPresentation {
    /// Dimension of the linear span of the relations inside arity 3.
    pub fn relation_span_dimension(&self) -> usize {
        crate::linalg::rank(self.relations.iter().map(|r| r.row(self.generators)))
    }
}

/// Presentation of the hill operad of the constant map `c`: one generator
/// per letter, with the relations
/// `E_a o_1 E_b - E_b o_2 E_a'` for `b <= c` and `a, a' <= b`, and
/// `E_b o_1 E_a - E_a o_2 E_b` for `a < b <= c`.
pub fn hi_c_presentation(c: u32) -> BinaryPresentation {
    let g = c as usize + 1;
    let mut relations = Vec::new();
    for b in 0..g {
        for a in 0..=b {
            for a2 in 0..=b {
                relations.push(Relation::difference(
                    Arity3Term::new(a, 1, b),
                    Arity3Term::new(b, 2, a2),
                ));
            }
        }
    }
    for b in 0..g {
        for a in 0..b {
            relations.push(Relation::difference(
                Arity3Term::new(b, 1, a),
                Arity3Term::new(a, 2, b),
            ));
        }
    }
    BinaryPresentation {
        generators: g,
        relations,
    }
}

/// The Koszul dual presentation on the starred generators: for each `b`,
/// the summed relation over `a <= b`, plus the pairwise family for `a < b`.
pub fn dual_presentation(c: u32) -> BinaryPresentation {
    let g = c as usize + 1;
    let mut relations = Vec::new();
    for b in 0..g {
        let mut terms = Vec::new();
        for a in 0..=b {
            terms.push((Arity3Term::new(a, 1, b), BigRational::one()));
            terms.push((Arity3Term::new(b, 2, a), -BigRational::one()));
        }
        relations.push(Relation { terms });
    }
    for b in 0..g {
        for a in 0..b {
            relations.push(Relation::difference(
                Arity3Term::new(b, 1, a),
                Arity3Term::new(a, 2, b),
            ));
        }
    }
    BinaryPresentation {
        generators: g,
        relations,
    }
}

/// The same dual after the triangular change of generators
/// `K_b = sum of E*_a over a <= b`: a pure set-style presentation.
pub fn kstar_presentation(c: u32) -> BinaryPresentation {
    let g = c as usize + 1;
    let mut relations = Vec::new();
    for b in 0..g {
        for a in 0..=b {
            relations.push(Relation::difference(
                Arity3Term::new(b, 1, a),
                Arity3Term::new(a, 2, b),
            ));
        }
    }
    BinaryPresentation {
        generators: g,
        relations,
    }
}

/// The K-generator relations rewritten over the starred generators, for
/// span comparison against [`dual_presentation`].
pub fn kstar_relations_in_estar(c: u32) -> Vec<Relation> {
    let g = c as usize + 1;
    let mut out = Vec::new();
    for b in 0..g {
        for a in 0..=b {
            let mut terms = Vec::new();
            for bp in 0..=b {
                for ap in 0..=a {
                    terms.push((Arity3Term::new(bp, 1, ap), BigRational::one()));
                    terms.push((Arity3Term::new(ap, 2, bp), -BigRational::one()));
                }
            }
            out.push(Relation { terms });
        }
    }
    out
}

/// Labeled binary trees, the free-operad basis over binary generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum BinTree {
    Leaf,
    Node {
        generator: usize,
        left: Box<BinTree>,
        right: Box<BinTree>,
    },
}

impl BinTree {
    fn arity(&self) -> usize {
        match self {
            BinTree::Leaf => 1,
            BinTree::Node { left, right, .. } => left.arity() + right.arity(),
        }
    }

    fn graft(&self, leaf: usize, sub: &BinTree) -> BinTree {
        match self {
            BinTree::Leaf => sub.clone(),
            BinTree::Node {
                generator,
                left,
                right,
            } => {
                let la = left.arity();
                if leaf <= la {
                    BinTree::Node {
                        generator: *generator,
                        left: Box::new(left.graft(leaf, sub)),
                        right: right.clone(),
                    }
                } else {
                    BinTree::Node {
                        generator: *generator,
                        left: left.clone(),
                        right: Box::new(right.graft(leaf - la, sub)),
                    }
                }
            }
        }
    }
}

fn bin_trees(generators: usize, max_arity: usize) -> Vec<Vec<BinTree>> {
    let mut levels: Vec<Vec<BinTree>> = vec![Vec::new(); max_arity + 1];
    if max_arity >= 1 {
        levels[1] = vec![BinTree::Leaf];
    }
    for n in 2..=max_arity {
        let mut level = Vec::new();
        for g in 0..generators {
            for la in 1..n {
                for lt in &levels[la] {
                    for rt in &levels[n - la] {
                        level.push(BinTree::Node {
                            generator: g,
                            left: Box::new(lt.clone()),
                            right: Box::new(rt.clone()),
                        });
                    }
                }
            }
        }
        levels[n] = level;
    }
    levels
}

fn term_tree(t: &Arity3Term) -> BinTree {
    let inner = BinTree::Node {
        generator: t.inner,
        left: Box::new(BinTree::Leaf),
        right: Box::new(BinTree::Leaf),
    };
    match t.slot {
        1 => BinTree::Node {
            generator: t.outer,
            left: Box::new(inner),
            right: Box::new(BinTree::Leaf),
        },
        _ => BinTree::Node {
            generator: t.outer,
            left: Box::new(BinTree::Leaf),
            right: Box::new(inner),
        },
    }
}

/// Per-arity dimensions of the quotient of the free operad by the ideal
/// the presentation's relations generate, with a budget flag.
#[derive(Clone, Debug, Default)]
pub struct DimensionOutcome {
    pub dims: Vec<usize>,
    pub hit_budget: bool,
}

pub fn quotient_dimensions(
    p: &BinaryPresentation,
    max_arity: usize,
    budget: Duration,
) -> Result<DimensionOutcome> {
    let start = Instant::now();
    let trees = bin_trees(p.generators, max_arity);
    let index: Vec<HashMap<BinTree, usize>> = trees
        .iter()
        .map(|level| {
            level
                .iter()
                .enumerate()
                .map(|(i, t)| (t.clone(), i))
                .collect()
        })
        .collect();
    let mut outcome = DimensionOutcome::default();
    // Echelon basis of the ideal component per arity.
    let mut ideal: Vec<Echelon> = (0..=max_arity).map(|_| Echelon::new()).collect();

    for n in 1..=max_arity {
        if start.elapsed() > budget {
            outcome.hit_budget = true;
            return Ok(outcome);
        }
        if n == 3 {
            for r in &p.relations {
                let lcm = r
                    .terms
                    .iter()
                    .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
                let row: SparseRow = r
                    .terms
                    .iter()
                    .map(|(t, c)| {
                        let cleared =
                            (c * BigRational::from_integer(lcm.clone())).to_integer();
                        (index[3][&term_tree(t)], cleared)
                    })
                    .collect();
                ideal[3].insert(row);
            }
        } else if n > 3 {
            let mut rows: Vec<SparseRow> = Vec::new();
            for b in 3..n {
                let k = n - b + 1;
                let basis: Vec<SparseRow> = ideal[b].basis().cloned().collect();
                for x in &basis {
                    let x_trees: Vec<(&BinTree, &BigInt)> =
                        x.iter().map(|(i, c)| (&trees[b][*i], c)).collect();
                    for t in &trees[k] {
                        for slot in 1..=k {
                            rows.push(
                                x_trees
                                    .iter()
                                    .map(|(tree, c)| {
                                        (index[n][&t.graft(slot, tree)], (*c).clone())
                                    })
                                    .collect(),
                            );
                        }
                    }
                    for t in &trees[k] {
                        for slot in 1..=b {
                            rows.push(
                                x_trees
                                    .iter()
                                    .map(|(tree, c)| {
                                        (index[n][&tree.graft(slot, t)], (*c).clone())
                                    })
                                    .collect(),
                            );
                        }
                    }
                }
            }
            for row in rows {
                ideal[n].insert(row);
            }
        }
        outcome.dims.push(trees[n].len() - ideal[n].rank());
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn long_budget() -> Duration {
        Duration::from_secs(600)
    }

    fn dims(p: &BinaryPresentation, max_arity: usize) -> Vec<usize> {
        let outcome = quotient_dimensions(p, max_arity, long_budget()).unwrap();
        assert!(!outcome.hit_budget);
        outcome.dims
    }

    #[test]
    fn relation_counts() {
        // One associative product for the zero map.
        let p = hi_c_presentation(0);
        assert_eq!(p.generators, 1);
        assert_eq!(p.relations.len(), 1);
        // For c = 1: (1 + 4) + 1 relations.
        let p = hi_c_presentation(1);
        assert_eq!(p.relations.len(), 6);
        // K relations number (c + 1)(c + 2) / 2.
        for c in 0..=4u32 {
            let k = kstar_presentation(c);
            let expect = (c as usize + 1) * (c as usize + 2) / 2;
            assert_eq!(k.relations.len(), expect);
        }
    }

    #[test]
    fn dual_relation_span_dimensions() {
        for c in 0..=3u32 {
            let want = (c as usize + 2) * (c as usize + 1) / 2;
            assert_eq!(dual_presentation(c).relation_span_dimension(), want);
            assert_eq!(kstar_presentation(c).relation_span_dimension(), want);
        }
        assert_eq!(dual_presentation(0).relation_span_dimension(), 1);
    }

    #[test]
    fn kstar_and_dual_spans_coincide() {
        for c in 0..=3u32 {
            let g = c as usize + 1;
            let dual = dual_presentation(c);
            let expanded = kstar_relations_in_estar(c);
            let dual_rank = dual.relation_span_dimension();
            let kstar_rank = crate::linalg::rank(expanded.iter().map(|r| r.row(g)));
            let stacked = crate::linalg::rank(
                dual.relations
                    .iter()
                    .chain(&expanded)
                    .map(|r| r.row(g)),
            );
            assert_eq!(dual_rank, kstar_rank, "c={c}");
            assert_eq!(dual_rank, stacked, "c={c}: spans differ");
        }
    }

    #[test]
    fn quotient_dimensions_match_counting_series() {
        // The primal presentations have binomial dimensions.
        assert_eq!(dims(&hi_c_presentation(0), 5), [1, 1, 1, 1, 1]);
        assert_eq!(dims(&hi_c_presentation(1), 5), [1, 2, 3, 4, 5]);
        assert_eq!(dims(&hi_c_presentation(2), 4), [1, 3, 6, 10]);
        // The duals have Fuss-Catalan dimensions.
        assert_eq!(dims(&dual_presentation(1), 4), [1, 2, 5, 14]);
        assert_eq!(dims(&dual_presentation(2), 4), [1, 3, 12, 55]);
        // The K-generator form presents the same operad.
        assert_eq!(dims(&kstar_presentation(1), 4), [1, 2, 5, 14]);
        assert_eq!(dims(&kstar_presentation(2), 4), [1, 3, 12, 55]);
    }

    #[test]
    fn generator_associativity_in_span() {
        for c in 0..=3u32 {
            let p = hi_c_presentation(c);
            let mut ech = Echelon::new();
            for r in &p.relations {
                ech.insert(r.row(p.generators));
            }
            for b in 0..p.generators {
                let assoc = Relation::difference(
                    Arity3Term::new(b, 1, b),
                    Arity3Term::new(b, 2, b),
                );
                assert!(
                    ech.reduce(assoc.row(p.generators)).is_empty(),
                    "c={c} generator {b}"
                );
            }
        }
    }

    #[test]
    fn presentation_relations_vanish_in_the_hill_quotient() {
        // Soundness: every relation of the primal presentation evaluates
        // to zero under the quotient composition, with generator i read as
        // the one-letter word i.
        use crate::hillops::{q_compose_e, QuotientContext};
        use crate::operad::{Basis, OperadContext, OperadElement};
        for c in 0..=3u32 {
            let ctx = OperadContext::new(
                crate::rangemap::RangeMap::constant(c),
                4,
            )
            .unwrap();
            let q = QuotientContext::hills(ctx).unwrap();
            let letter =
                |a: usize| crate::cliffs::CliffWord::new(vec![a as u32]);
            for relation in &hi_c_presentation(c).relations {
                let mut acc = OperadElement::zero(Basis::E, 3);
                for (t, coeff) in &relation.terms {
                    let part =
                        q_compose_e(&q, &letter(t.outer), t.slot, &letter(t.inner)).unwrap();
                    acc = acc.add(&part.scale(coeff)).unwrap();
                }
                assert!(acc.is_zero(), "c={c} relation {relation:?}");
            }
        }
    }

    #[test]
    fn budget_truncates() {
        let outcome =
            quotient_dimensions(&dual_presentation(1), 4, Duration::ZERO).unwrap();
        assert!(outcome.hit_budget);
    }
}
