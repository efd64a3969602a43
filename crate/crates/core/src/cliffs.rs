//! Cliff words, their membership tests, reduction, enumeration, and the
//! closed counting formulas.
//!
//! A word of length `l` has size `l + 1`; the empty word has size 1 and is
//! the unit of every operad built here. Enumeration is always in
//! lexicographic order on letters: that order is the canonical column index
//! for all linear algebra downstream.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rangemap::RangeMap;

/// A finite word of nonnegative integers, possibly empty.
///
/// Derived `Ord` is lexicographic, which agrees with the enumeration order
/// on words of equal length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliffWord(Vec<u32>);

impl CliffWord {
    pub fn empty() -> Self {
        CliffWord(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        CliffWord(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Size of the word as a graded-set element: length plus one.
    pub fn size(&self) -> usize {
        self.0.len() + 1
    }

    /// 1-based letter access.
    pub fn letter(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }
}

impl fmt::Display for CliffWord {
    /// Comma-separated decimal letters; the empty word prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CliffWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[")?;
        fmt::Display::fmt(self, f)?;
        write!(f, "]")
    }
}

impl FromStr for CliffWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(CliffWord::empty());
        }
        let letters = s
            .split(',')
            .map(|p| {
                p.parse()
                    .map_err(|_| Error::Parse(format!("word {s:?}: bad letter {p:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(CliffWord(letters))
    }
}

/// True when `w(i) <= delta(i)` at every position.
pub fn is_cliff(delta: &RangeMap, w: &CliffWord) -> Result<bool> {
    delta.check_length(w.len())?;
    Ok((1..=w.len()).all(|i| w.letter(i) <= delta.at(i)))
}

/// True when `w` is a weakly increasing cliff.
pub fn is_hill(delta: &RangeMap, w: &CliffWord) -> Result<bool> {
    Ok(is_cliff(delta, w)? && w.is_weakly_increasing())
}

/// Letterwise clamp `min(w(i), delta(i))`; the identity exactly on cliffs.
pub fn reduce(delta: &RangeMap, w: &CliffWord) -> Result<CliffWord> {
    delta.check_length(w.len())?;
    Ok(CliffWord::new(
        (1..=w.len())
            .map(|i| w.letter(i).min(delta.at(i)))
            .collect(),
    ))
}

/// All cliffs (or hills) of the given size in lexicographic order.
pub fn enumerate(delta: &RangeMap, size: usize, hills_only: bool) -> Result<Vec<CliffWord>> {
    assert!(size >= 1, "sizes start at 1");
    let len = size - 1;
    delta.check_length(len)?;
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(len);
    fill(delta, len, hills_only, &mut current, &mut out);
    Ok(out)
}

fn fill(
    delta: &RangeMap,
    len: usize,
    hills_only: bool,
    current: &mut Vec<u32>,
    out: &mut Vec<CliffWord>,
) {
    if current.len() == len {
        out.push(CliffWord::new(current.clone()));
        return;
    }
    let pos = current.len() + 1;
    let lo = if hills_only {
        current.last().copied().unwrap_or(0)
    } else {
        0
    };
    for letter in lo..=delta.at(pos) {
        current.push(letter);
        fill(delta, len, hills_only, current, out);
        current.pop();
    }
}

/// Number of cliffs (or hills) of the given size.
///
/// Cliff counts use the product of the letter ranges. Hill counts use the
/// binomial formula for constant maps, the Fuss-Catalan formula for
/// truncated arithmetic maps, and otherwise a small dynamic program over
/// the last letter.
pub fn count(delta: &RangeMap, size: usize, hills_only: bool) -> Result<BigUint> {
    assert!(size >= 1, "sizes start at 1");
    let len = size - 1;
    delta.check_length(len)?;
    if !hills_only {
        let mut product = BigUint::one();
        for i in 1..=len {
            product *= BigUint::from(delta.at(i) + 1);
        }
        return Ok(product);
    }
    if delta.prefix().is_empty() && delta.horizon().is_none() {
        // Constant map c: weakly increasing words over an alphabet of
        // c + 1 letters.
        return Ok(binomial(len + delta.tail() as usize, delta.tail() as usize));
    }
    if let Some(h) = delta.horizon() {
        let m = if h >= 2 { delta.tail() / (h as u32 - 1) } else { 1 };
        return Ok(fuss_catalan(m, len));
    }
    // General map: hills of length l ending in a given letter.
    let mut by_last: Vec<BigUint> = vec![BigUint::one(); delta.at(1) as usize + 1];
    if len == 0 {
        return Ok(BigUint::one());
    }
    for i in 2..=len {
        let b = delta.at(i) as usize;
        let mut next = vec![BigUint::from(0u32); b + 1];
        let mut running = BigUint::from(0u32);
        for letter in 0..=b {
            if letter < by_last.len() {
                running += &by_last[letter];
            }
            next[letter] = running.clone();
        }
        by_last = next;
    }
    Ok(by_last.iter().sum())
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// The Fuss-Catalan number `cat_m(n) = C(mn + n, n) / (mn + 1)`.
pub fn fuss_catalan(m: u32, n: usize) -> BigUint {
    let mn = m as usize * n;
    binomial(mn + n, n) / BigUint::from(mn + 1)
}
