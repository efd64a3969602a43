//! Quotient operads supported on a graded subset of the cliff family.
//!
//! The quotient identifies, over the fundamental basis, every word outside
//! the subset with zero. The subset must be closed by subword reduction for
//! the identification to be a composition ideal; that closure is validated
//! up to the context's arity cap at construction. When each graded piece is
//! additionally a sublattice, the quotient has elementary and homogeneous
//! bases with single-term compositions; the hill instantiation realizes the
//! two projections in closed form as running maximum and suffix minimum.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cliffs::{is_hill, reduce, CliffWord};
use crate::compose::{black_square, chi, white_square};
use crate::error::{Error, Result};
use crate::operad::{Basis, OperadContext, OperadElement};
use crate::order::{join, leq, meet, running_max, suffix_min, Interval};
use crate::rangemap::RangeMap;

type MembershipFn = Arc<dyn Fn(&RangeMap, &CliffWord) -> bool + Send + Sync>;

/// Closed-form projections onto the subset: the least member above a word
/// and the greatest member below it.
#[derive(Clone, Copy)]
pub struct ClosedForms {
    pub wedge: fn(&CliffWord) -> CliffWord,
    pub vee: fn(&CliffWord) -> CliffWord,
}

/// A quotient operad context: the base cliff operad, the membership
/// predicate of the subset, and optional sublattice closed forms.
#[derive(Clone)]
pub struct QuotientContext {
    base: OperadContext,
    name: String,
    membership: MembershipFn,
    closed_forms: Option<ClosedForms>,
}

impl std::fmt::Debug for QuotientContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuotientContext")
            .field("name", &self.name)
            .field("delta", &self.base.delta().to_string())
            .field("closed_forms", &self.closed_forms.is_some())
            .finish()
    }
}

impl QuotientContext {
    /// Generic construction. Validates nonemptiness, closure by subword
    /// reduction up to the base arity cap, and, when closed forms are
    /// given, that each graded piece is a sublattice. Validation is finite:
    /// the guarantee extends only up to the cap.
    pub fn new(
        base: OperadContext,
        name: impl Into<String>,
        membership: MembershipFn,
        closed_forms: Option<ClosedForms>,
    ) -> Result<Self> {
        let q = QuotientContext {
            base,
            name: name.into(),
            membership,
            closed_forms,
        };
        let report = validate_closed_by_subword_reduction(&q, q.base.arity_cap())?;
        if let Some(v) = report.violations.first() {
            return Err(Error::NotClosedBySubwordReduction {
                word: v.word.to_string(),
                reduced: v.reduced.to_string(),
            });
        }
        if q.closed_forms.is_some() {
            q.validate_sublattice()?;
        }
        Ok(q)
    }

    /// The hill instantiation: weakly increasing cliffs, with running
    /// maximum and suffix minimum as the two projections.
    pub fn hills(base: OperadContext) -> Result<Self> {
        QuotientContext::new(
            base,
            "hills",
            Arc::new(|d: &RangeMap, w: &CliffWord| is_hill(d, w).unwrap_or(false)),
            Some(ClosedForms {
                wedge: running_max,
                vee: suffix_min,
            }),
        )
    }

    pub fn base(&self) -> &OperadContext {
        &self.base
    }

    pub fn delta(&self) -> &RangeMap {
        self.base.delta()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn closed_forms(&self) -> Option<&ClosedForms> {
        self.closed_forms.as_ref()
    }

    pub fn contains(&self, w: &CliffWord) -> bool {
        (self.membership)(self.base.delta(), w)
    }

    /// Members of one arity, in lexicographic order.
    pub fn words(&self, arity: usize) -> Result<Vec<CliffWord>> {
        Ok(self
            .base
            .words(arity)?
            .into_iter()
            .filter(|w| self.contains(w))
            .collect())
    }

    fn validate_sublattice(&self) -> Result<()> {
        for n in 1..=self.base.arity_cap() {
            let members = self.words(n)?;
            for (i, u) in members.iter().enumerate() {
                for v in &members[i + 1..] {
                    if !self.contains(&meet(u, v)?) {
                        return Err(Error::NotASublattice {
                            op: "meet",
                            left: u.to_string(),
                            right: v.to_string(),
                        });
                    }
                    if !self.contains(&join(u, v)?) {
                        return Err(Error::NotASublattice {
                            op: "join",
                            left: u.to_string(),
                            right: v.to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn require_closed_forms(&self) -> Result<&ClosedForms> {
        self.closed_forms.as_ref().ok_or(Error::NoClosedForms)
    }
}

/// One closure failure: a member whose subword reduces outside the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureViolation {
    pub word: CliffWord,
    pub subword: CliffWord,
    pub reduced: CliffWord,
}

/// Report of the subword-reduction closure sweep.
#[derive(Clone, Debug, Default)]
pub struct ClosureReport {
    pub checked: u64,
    pub violations: Vec<ClosureViolation>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every member up to `arity_cap`, that the reduction of every
/// subword (scattered letters, order kept) is again a member.
pub fn validate_closed_by_subword_reduction(
    q: &QuotientContext,
    arity_cap: usize,
) -> Result<ClosureReport> {
    let delta = q.base().delta();
    let mut report = ClosureReport::default();
    let mut nonempty = false;
    for n in 1..=arity_cap {
        for w in q.words(n)? {
            nonempty = true;
            let l = w.len();
            assert!(l < 32, "subword sweep over {l} positions is not tractable");
            for mask in 0u64..(1 << l) {
                let letters: Vec<u32> = (0..l)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| w.letters()[b])
                    .collect();
                let sub = CliffWord::new(letters);
                let red = reduce(delta, &sub)?;
                report.checked += 1;
                if !q.contains(&red) {
                    report.violations.push(ClosureViolation {
                        word: w.clone(),
                        subword: sub,
                        reduced: red,
                    });
                }
            }
        }
    }
    if !nonempty {
        // An empty set cannot support the quotient; closure would force the
        // empty word in, so report it as the missing reduction.
        report.violations.push(ClosureViolation {
            word: CliffWord::empty(),
            subword: CliffWord::empty(),
            reduced: CliffWord::empty(),
        });
    }
    Ok(report)
}

/// Canonical projection on the fundamental basis: keeps the terms indexed
/// by members, drops the rest.
pub fn project(q: &QuotientContext, x: &OperadElement) -> Result<OperadElement> {
    if x.basis() != Basis::F {
        return Err(Error::BasisMismatch);
    }
    Ok(OperadElement::from_clean_terms(
        Basis::F,
        x.arity(),
        x.terms()
            .filter(|(w, _)| q.contains(w))
            .map(|(w, c)| (w.clone(), c.clone())),
    ))
}

fn monomial(basis: Basis, w: CliffWord) -> OperadElement {
    let arity = w.size();
    OperadElement::from_clean_terms(basis, arity, [(w, BigRational::one())])
}

/// Least member above `w`, by closed form when available and otherwise by
/// a minimal-element search over the up-set box. `None` when the up-set
/// contains no member or no least one.
pub fn wedge(q: &QuotientContext, w: &CliffWord) -> Result<Option<CliffWord>> {
    if let Some(forms) = q.closed_forms() {
        let candidate = (forms.wedge)(w);
        return Ok(q.contains(&candidate).then_some(candidate));
    }
    let minimals = minimal_above(q, w)?;
    Ok(match minimals.len() {
        1 => minimals.into_iter().next(),
        _ => None,
    })
}

/// Greatest member below `w`, closed form or search.
pub fn vee(q: &QuotientContext, w: &CliffWord) -> Result<Option<CliffWord>> {
    if let Some(forms) = q.closed_forms() {
        let candidate = (forms.vee)(w);
        return Ok(q.contains(&candidate).then_some(candidate));
    }
    let maximals = maximal_below(q, w)?;
    Ok(match maximals.len() {
        1 => maximals.into_iter().next(),
        _ => None,
    })
}

/// All minimal members of the up-set of `w` (slow path: box enumeration).
/// Unique when the graded pieces are sublattices.
pub fn minimal_above(q: &QuotientContext, w: &CliffWord) -> Result<Vec<CliffWord>> {
    let delta = q.delta();
    delta.check_length(w.len())?;
    let high = CliffWord::new((1..=w.len()).map(|i| delta.at(i)).collect());
    if !leq(w, &high)? {
        return Ok(Vec::new());
    }
    let members: Vec<CliffWord> = Interval::new(w.clone(), high)?
        .enumerate(None)?
        .into_iter()
        .filter(|x| q.contains(x))
        .collect();
    extremal(&members, leq)
}

/// All maximal members of the down-set of `w`.
pub fn maximal_below(q: &QuotientContext, w: &CliffWord) -> Result<Vec<CliffWord>> {
    let low = CliffWord::new(vec![0; w.len()]);
    let members: Vec<CliffWord> = Interval::new(low, w.clone())?
        .enumerate(None)?
        .into_iter()
        .filter(|x| q.contains(x))
        .collect();
    extremal(&members, |a, b| leq(b, a))
}

fn extremal(
    members: &[CliffWord],
    below: impl Fn(&CliffWord, &CliffWord) -> Result<bool>,
) -> Result<Vec<CliffWord>> {
    let mut out = Vec::new();
    'outer: for x in members {
        for y in members {
            if x != y && below(y, x)? {
                continue 'outer;
            }
        }
        out.push(x.clone());
    }
    Ok(out)
}

fn check_members(q: &QuotientContext, u: &CliffWord, v: &CliffWord) -> Result<()> {
    for w in [u, v] {
        if !q.contains(w) {
            return Err(Error::NotACliff {
                word: w.to_string(),
            });
        }
    }
    Ok(())
}

/// Fundamental-basis composition in the quotient: the box support of the
/// base composition intersected with the subset. Legitimately zero.
pub fn q_compose_f(
    q: &QuotientContext,
    u: &CliffWord,
    slot: usize,
    v: &CliffWord,
) -> Result<OperadElement> {
    check_members(q, u, v)?;
    let arity = u.size() + v.size() - 1;
    let low = white_square(u, slot, v)?;
    if !chi(q.delta(), &low)? {
        return Ok(OperadElement::zero(Basis::F, arity));
    }
    let high = black_square(q.delta(), u, slot, v)?;
    let terms = Interval::new(low, high)?
        .enumerate(None)?
        .into_iter()
        .filter(|w| q.contains(w))
        .map(|w| (w, BigRational::one()));
    Ok(OperadElement::from_clean_terms(Basis::F, arity, terms))
}

/// Elementary-basis composition in the quotient: the least member above the
/// plain substitution, or zero. For hills this is the running maximum.
pub fn q_compose_e(
    q: &QuotientContext,
    u: &CliffWord,
    slot: usize,
    v: &CliffWord,
) -> Result<OperadElement> {
    check_members(q, u, v)?;
    let arity = u.size() + v.size() - 1;
    let spliced = white_square(u, slot, v)?;
    if !chi(q.delta(), &spliced)? {
        return Ok(OperadElement::zero(Basis::E, arity));
    }
    Ok(match wedge(q, &spliced)? {
        Some(w) => monomial(Basis::E, w),
        None => OperadElement::zero(Basis::E, arity),
    })
}

/// Homogeneous-basis composition in the quotient: the greatest member below
/// the reduced saturated substitution, or zero. For hills this is the
/// suffix minimum.
pub fn q_compose_h(
    q: &QuotientContext,
    u: &CliffWord,
    slot: usize,
    v: &CliffWord,
) -> Result<OperadElement> {
    check_members(q, u, v)?;
    let arity = u.size() + v.size() - 1;
    let saturated = reduce(q.delta(), &black_square(q.delta(), u, slot, v)?)?;
    Ok(match vee(q, &saturated)? {
        Some(w) => monomial(Basis::H, w),
        None => OperadElement::zero(Basis::H, arity),
    })
}

/// Bilinear extension of the quotient compositions.
pub fn q_compose(
    q: &QuotientContext,
    x: &OperadElement,
    slot: usize,
    y: &OperadElement,
) -> Result<OperadElement> {
    if x.basis() != y.basis() {
        return Err(Error::BasisMismatch);
    }
    let arity = x.arity() + y.arity() - 1;
    let mut acc = OperadElement::zero(x.basis(), arity);
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            let part = match x.basis() {
                Basis::E => q_compose_e(q, u, slot, v)?,
                Basis::F => q_compose_f(q, u, slot, v)?,
                Basis::H => q_compose_h(q, u, slot, v)?,
            };
            acc = acc.add(&part.scale(&(cu * cv)))?;
        }
    }
    Ok(acc)
}

/// Basis change inside the quotient. The zeta directions are direct sums
/// over members; the Möbius directions are solved triangularly in
/// lexicographic order, which refines the componentwise order. Requires the
/// sublattice closed forms, since only then are the quotient E- and
/// H-bases defined.
pub fn q_convert(q: &QuotientContext, x: &OperadElement, target: Basis) -> Result<OperadElement> {
    if x.basis() == target {
        return Ok(x.clone());
    }
    q.require_closed_forms()?;
    let members = q.words(x.arity())?;

    let in_f = match x.basis() {
        Basis::F => x.clone(),
        // E_w = sum of F over members above w, so the F-coefficient of w'
        // accumulates the E-coefficients of members below it.
        Basis::E => {
            let mut terms = Vec::new();
            for wp in &members {
                let mut c = BigRational::zero();
                for w in &members {
                    if leq(w, wp)? {
                        c += x.coefficient(w);
                    }
                }
                terms.push((wp.clone(), c));
            }
            OperadElement::from_clean_terms(Basis::F, x.arity(), terms)
        }
        // H_w = sum of F over members below w.
        Basis::H => {
            let mut terms = Vec::new();
            for wp in &members {
                let mut c = BigRational::zero();
                for w in &members {
                    if leq(wp, w)? {
                        c += x.coefficient(w);
                    }
                }
                terms.push((wp.clone(), c));
            }
            OperadElement::from_clean_terms(Basis::F, x.arity(), terms)
        }
    };

    Ok(match target {
        Basis::F => in_f,
        // Solve f_{w'} = sum_{w <= w'} a_w upward in lex order.
        Basis::E => {
            let mut coeffs: Vec<(CliffWord, BigRational)> = Vec::new();
            for wp in &members {
                let mut c = in_f.coefficient(wp);
                for (w, a) in &coeffs {
                    if w != wp && leq(w, wp)? {
                        c -= a;
                    }
                }
                coeffs.push((wp.clone(), c));
            }
            OperadElement::from_clean_terms(Basis::E, x.arity(), coeffs)
        }
        // Solve f_{w'} = sum_{w >= w'} h_w downward in lex order.
        Basis::H => {
            let mut coeffs: Vec<(CliffWord, BigRational)> = Vec::new();
            for wp in members.iter().rev() {
                let mut c = in_f.coefficient(wp);
                for (w, a) in &coeffs {
                    if w != wp && leq(wp, w)? {
                        c -= a;
                    }
                }
                coeffs.push((wp.clone(), c));
            }
            OperadElement::from_clean_terms(Basis::H, x.arity(), coeffs)
        }
    })
}
