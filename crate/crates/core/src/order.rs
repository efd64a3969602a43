//! The componentwise order on words of a fixed length: a product of total
//! orders, hence a distributive lattice. Möbius values, coordinate-box
//! intervals, and the two hill projections (running maximum and suffix
//! minimum) live here.

use crate::cliffs::{is_cliff, CliffWord};
use crate::error::{Error, Result};
use crate::rangemap::RangeMap;

fn check_lengths(u: &CliffWord, v: &CliffWord) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(())
}

/// Componentwise comparison of words of equal length.
pub fn leq(u: &CliffWord, v: &CliffWord) -> Result<bool> {
    check_lengths(u, v)?;
    Ok(u.letters().iter().zip(v.letters()).all(|(a, b)| a <= b))
}

/// Letterwise minimum.
pub fn meet(u: &CliffWord, v: &CliffWord) -> Result<CliffWord> {
    check_lengths(u, v)?;
    Ok(CliffWord::new(
        u.letters()
            .iter()
            .zip(v.letters())
            .map(|(&a, &b)| a.min(b))
            .collect(),
    ))
}

/// Letterwise maximum.
pub fn join(u: &CliffWord, v: &CliffWord) -> Result<CliffWord> {
    check_lengths(u, v)?;
    Ok(CliffWord::new(
        u.letters()
            .iter()
            .zip(v.letters())
            .map(|(&a, &b)| a.max(b))
            .collect(),
    ))
}

/// Möbius value of the pair `u <= v`: the product over positions of
/// `mu(a, a) = 1`, `mu(a, a + 1) = -1`, and `0` otherwise. Always in
/// `{-1, 0, 1}`.
pub fn moebius(u: &CliffWord, v: &CliffWord) -> Result<i64> {
    if !leq(u, v)? {
        return Err(Error::NotComparable);
    }
    let mut sign = 1i64;
    for (&a, &b) in u.letters().iter().zip(v.letters()) {
        match b - a {
            0 => {}
            1 => sign = -sign,
            _ => return Ok(0),
        }
    }
    Ok(sign)
}

/// A coordinate box `[low, high]` in the componentwise order, stored
/// unexpanded. Enumeration is mixed-radix counting in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    low: CliffWord,
    high: CliffWord,
}

impl Interval {
    pub fn new(low: CliffWord, high: CliffWord) -> Result<Self> {
        if !leq(&low, &high)? {
            return Err(Error::NotComparable);
        }
        Ok(Interval { low, high })
    }

    pub fn low(&self) -> &CliffWord {
        &self.low
    }

    pub fn high(&self) -> &CliffWord {
        &self.high
    }

    pub fn contains(&self, w: &CliffWord) -> Result<bool> {
        Ok(leq(&self.low, w)? && leq(w, &self.high)?)
    }

    /// Number of words in the box, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        self.low
            .letters()
            .iter()
            .zip(self.high.letters())
            .fold(1u128, |acc, (&a, &b)| {
                acc.saturating_mul((b - a) as u128 + 1)
            })
    }

    /// All words of the box in lexicographic order, optionally filtered to
    /// the hills of a range map.
    pub fn enumerate(&self, restrict_hills: Option<&RangeMap>) -> Result<Vec<CliffWord>> {
        let mut out = Vec::new();
        let mut current = self.low.letters().to_vec();
        loop {
            let w = CliffWord::new(current.clone());
            let keep = match restrict_hills {
                None => true,
                Some(d) => w.is_weakly_increasing() && is_cliff(d, &w)?,
            };
            if keep {
                out.push(w);
            }
            // Mixed-radix increment from the rightmost coordinate.
            let mut pos = current.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                if current[pos - 1] < self.high.letter(pos) {
                    current[pos - 1] += 1;
                    for p in pos..current.len() {
                        current[p] = self.low.letter(p + 1);
                    }
                    break;
                }
                pos -= 1;
            }
        }
    }
}

/// Running maximum `w(j) -> max(w(1), ..., w(j))`: the least weakly
/// increasing word above `w`.
pub fn running_max(w: &CliffWord) -> CliffWord {
    let mut max = 0u32;
    CliffWord::new(
        w.letters()
            .iter()
            .map(|&a| {
                max = max.max(a);
                max
            })
            .collect(),
    )
}

/// Suffix minimum `w(j) -> min(w(j), ..., w(l))`: the greatest weakly
/// increasing word below `w`.
pub fn suffix_min(w: &CliffWord) -> CliffWord {
    let mut letters: Vec<u32> = w.letters().to_vec();
    let mut min = u32::MAX;
    for a in letters.iter_mut().rev() {
        min = min.min(*a);
        *a = min;
    }
    CliffWord::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> CliffWord {
        s.parse().unwrap()
    }

    #[test]
    fn componentwise_order() {
        assert!(leq(&word("0,1,0"), &word("0,1,2")).unwrap());
        assert!(!leq(&word("0,1,1"), &word("0,0,2")).unwrap());
        assert!(leq(&CliffWord::empty(), &CliffWord::empty()).unwrap());
        assert!(leq(&word("0,1"), &word("0,1,2")).is_err());
    }

    #[test]
    fn lattice_ops() {
        assert_eq!(meet(&word("0,1,2"), &word("0,1,0")).unwrap(), word("0,1,0"));
        assert_eq!(join(&word("0,1,2"), &word("0,1,0")).unwrap(), word("0,1,2"));
        assert_eq!(meet(&word("1,0"), &word("0,1")).unwrap(), word("0,0"));
        assert_eq!(join(&word("1,0"), &word("0,1")).unwrap(), word("1,1"));
        let w = word("2,0,3");
        assert_eq!(meet(&w, &w).unwrap(), w);
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(&word("1,2,2,1"), &word("1,2,3,2")).unwrap(), 1);
        assert_eq!(moebius(&word("1,2,2,1"), &word("2,2,3,1")).unwrap(), 1);
        assert_eq!(moebius(&word("1,2,2,1"), &word("1,2,2,2")).unwrap(), -1);
        assert_eq!(moebius(&word("1,2,2,1"), &word("1,2,4,1")).unwrap(), 0);
        let w = word("0,3");
        assert_eq!(moebius(&w, &w).unwrap(), 1);
        assert_eq!(
            moebius(&word("1,0"), &word("0,1")),
            Err(Error::NotComparable)
        );
    }

    #[test]
    fn interval_enumeration() {
        let iv = Interval::new(word("1,0,2,1,0"), word("1,0,3,1,0")).unwrap();
        assert_eq!(
            iv.enumerate(None).unwrap(),
            vec![word("1,0,2,1,0"), word("1,0,3,1,0")]
        );
        assert_eq!(iv.size(), 2);

        let d: RangeMap = "1,3,3,4;4".parse().unwrap();
        let iv = Interval::new(word("0,2,1,1,2,3,4"), word("0,2,3,1,2,4,4")).unwrap();
        assert_eq!(iv.enumerate(Some(&d)).unwrap(), Vec::<CliffWord>::new());

        let w = word("0,4,2");
        let point = Interval::new(w.clone(), w.clone()).unwrap();
        assert_eq!(point.enumerate(None).unwrap(), vec![w]);
    }

    #[test]
    fn hill_projections() {
        assert_eq!(running_max(&word("0,1,0,0")), word("0,1,1,1"));
        assert_eq!(
            running_max(&word("0,2,1,1,2,3,4")),
            word("0,2,2,2,2,3,4")
        );
        assert_eq!(suffix_min(&word("2,1,0,1")), word("0,0,0,1"));
        assert_eq!(
            suffix_min(&word("0,2,3,1,2,4,4")),
            word("0,1,1,1,2,4,4")
        );
        for s in ["0,1,1,3", ""] {
            let w = word(s);
            assert_eq!(running_max(&w), w);
            assert_eq!(suffix_min(&w), w);
        }
    }
}
