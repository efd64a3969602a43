//! Range maps: eventually constant infinite words of nonnegative integers,
//! indexed from 1, that bound the letters of cliffs.
//!
//! A map is stored as a finite prefix plus the constant value of its tail.
//! The prefix is kept minimal (its last entry differs from the tail), so
//! structural equality coincides with equality of maps. Arithmetic maps
//! `i -> (i - 1) m` are unbounded for `m >= 1` and are represented by
//! truncation at an explicit horizon; word positions past the horizon are
//! rejected with [`Error::HorizonExceeded`] rather than read from the tail.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RangeMap {
    prefix: Vec<u32>,
    tail: u32,
    horizon: Option<usize>,
}

impl RangeMap {
    /// General prefix-plus-tail map without a horizon.
    pub fn new(prefix: Vec<u32>, tail: u32) -> Self {
        let mut map = RangeMap {
            prefix,
            tail,
            horizon: None,
        };
        map.canonicalize();
        map
    }

    /// The constant map `i -> c`.
    pub fn constant(c: u32) -> Self {
        RangeMap {
            prefix: Vec::new(),
            tail: c,
            horizon: None,
        }
    }

    /// The arithmetic map `i -> (i - 1) m`, truncated at `horizon`: values
    /// are exact for `i <= horizon` and positions beyond it are rejected by
    /// [`RangeMap::bound`]. For `m = 0` the map is the constant zero map and
    /// no horizon is recorded.
    pub fn arithmetic_truncated(m: u32, horizon: usize) -> Self {
        assert!(horizon >= 1, "horizon must be at least 1");
        if m == 0 {
            return RangeMap::constant(0);
        }
        let prefix = (0..horizon.saturating_sub(1))
            .map(|i| i as u32 * m)
            .collect();
        let mut map = RangeMap {
            prefix,
            tail: (horizon as u32 - 1) * m,
            horizon: Some(horizon),
        };
        map.canonicalize();
        map
    }

    fn canonicalize(&mut self) {
        while self.prefix.last() == Some(&self.tail) {
            self.prefix.pop();
        }
    }

    /// Value at the 1-based position `i`, using prefix-plus-tail semantics.
    pub fn at(&self, i: usize) -> u32 {
        assert!(i >= 1, "range maps are indexed from 1");
        if i <= self.prefix.len() {
            self.prefix[i - 1]
        } else {
            self.tail
        }
    }

    /// Value at position `i`, refusing positions past the horizon.
    pub fn bound(&self, i: usize) -> Result<u32> {
        if let Some(h) = self.horizon {
            if i > h {
                return Err(Error::HorizonExceeded {
                    len: i,
                    horizon: h,
                });
            }
        }
        Ok(self.at(i))
    }

    /// Checks that a whole word length fits under the horizon.
    pub fn check_length(&self, len: usize) -> Result<()> {
        if let Some(h) = self.horizon {
            if len > h {
                return Err(Error::HorizonExceeded { len, horizon: h });
            }
        }
        Ok(())
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn tail(&self) -> u32 {
        self.tail
    }

    pub fn horizon(&self) -> Option<usize> {
        self.horizon
    }

    /// True when the pattern `delta(i1) > delta(i2) < delta(i3)` never
    /// occurs. Scanning positions up to `prefix.len() + 2` is enough: a
    /// violating triple needs `delta(i2) < delta(i3)`, and past the prefix
    /// all values equal the tail, so `i2` can be clamped into the prefix and
    /// `i3` to at most one position after it.
    pub fn is_unimodal(&self) -> bool {
        let window = self.prefix.len() + 2;
        let vals: Vec<u32> = (1..=window).map(|i| self.at(i)).collect();
        let mut running_max = vals[0];
        for i2 in 1..window {
            if vals[i2] < running_max {
                // Went strictly below an earlier value; no later value may
                // exceed vals[i2] again.
                for &later in &vals[i2 + 1..] {
                    if later > vals[i2] {
                        return false;
                    }
                }
            }
            running_max = running_max.max(vals[i2]);
        }
        true
    }

    /// True when `delta(1)` dominates every sufficiently late value, which
    /// for an eventually constant map means `delta(1) >= tail`.
    pub fn is_one_dominated(&self) -> bool {
        self.at(1) >= self.tail
    }

    /// The weakly increasing closure `i -> max(delta(1), ..., delta(i))`.
    pub fn closure(&self) -> RangeMap {
        let mut prefix = Vec::with_capacity(self.prefix.len());
        let mut max = 0u32;
        for &v in &self.prefix {
            max = max.max(v);
            prefix.push(max);
        }
        let mut map = RangeMap {
            prefix,
            tail: max.max(self.tail),
            horizon: self.horizon,
        };
        map.canonicalize();
        map
    }

    pub fn is_weakly_increasing(&self) -> bool {
        let window = self.prefix.len() + 1;
        (1..window).all(|i| self.at(i) <= self.at(i + 1))
    }

    /// Smallest `k` with `delta(k) != delta(k + 1)`, absent for constant maps.
    pub fn first_change_index(&self) -> Option<usize> {
        (1..=self.prefix.len()).find(|&k| self.at(k) != self.at(k + 1))
    }

    /// Smallest `k` such that `delta(1) >= delta(k')` for all `k' >= k`.
    pub fn domination_index(&self) -> Result<usize> {
        if !self.is_one_dominated() {
            return Err(Error::NotDominated);
        }
        let first = self.at(1);
        let last_above = (1..=self.prefix.len())
            .rev()
            .find(|&k| self.at(k) > first);
        Ok(last_above.map_or(1, |k| k + 1))
    }
}

impl fmt::Display for RangeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(h) = self.horizon {
            // Truncation at horizon 1 erases the common difference, so any
            // positive one prints the same (the values are equal anyway).
            let m = if h >= 2 {
                self.tail / (h as u32 - 1)
            } else {
                1
            };
            return write!(f, "arith:{m}@{h}");
        }
        if self.prefix.is_empty() {
            return write!(f, "const:{}", self.tail);
        }
        let parts: Vec<String> = self.prefix.iter().map(|v| v.to_string()).collect();
        write!(f, "{};{}", parts.join(","), self.tail)
    }
}

impl FromStr for RangeMap {
    type Err = Error;

    /// Grammar: `const:<c>` | `arith:<m>@<horizon>` | `<p1>,...,<pk>;<tail>`
    /// with the empty prefix written `;<tail>`. Whitespace is forbidden.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("range map {s:?}: {msg}"));
        if s.contains(char::is_whitespace) {
            return Err(bad("whitespace is forbidden"));
        }
        if let Some(rest) = s.strip_prefix("const:") {
            let c = rest.parse().map_err(|_| bad("bad constant"))?;
            return Ok(RangeMap::constant(c));
        }
        if let Some(rest) = s.strip_prefix("arith:") {
            let (m, h) = rest
                .split_once('@')
                .ok_or_else(|| bad("expected arith:<m>@<horizon>"))?;
            let m = m.parse().map_err(|_| bad("bad difference"))?;
            let h: usize = h.parse().map_err(|_| bad("bad horizon"))?;
            if h == 0 {
                return Err(bad("horizon must be at least 1"));
            }
            return Ok(RangeMap::arithmetic_truncated(m, h));
        }
        let (prefix, tail) = s
            .split_once(';')
            .ok_or_else(|| bad("expected <prefix>;<tail>"))?;
        let tail = tail.parse().map_err(|_| bad("bad tail"))?;
        let prefix = if prefix.is_empty() {
            Vec::new()
        } else {
            prefix
                .split(',')
                .map(|p| p.parse().map_err(|_| bad("bad prefix letter")))
                .collect::<Result<Vec<u32>>>()?
        };
        Ok(RangeMap::new(prefix, tail))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(s: &str) -> RangeMap {
        s.parse().unwrap()
    }

    #[test]
    fn constant_maps() {
        let zero = RangeMap::constant(0);
        assert_eq!(zero.at(1), 0);
        assert_eq!(zero.at(100), 0);
        let one = RangeMap::constant(1);
        assert_eq!(one.at(1), 1);
        assert_eq!(one.at(5), 1);
        assert_eq!(RangeMap::constant(4).at(100), 4);
    }

    #[test]
    fn arithmetic_truncation() {
        let d = RangeMap::arithmetic_truncated(1, 4);
        assert_eq!((1..=4).map(|i| d.at(i)).collect::<Vec<_>>(), [0, 1, 2, 3]);
        assert_eq!(d.at(9), 3);
        assert!(d.bound(5).is_err());

        let d = RangeMap::arithmetic_truncated(2, 3);
        assert_eq!(d.at(1), 0);
        assert_eq!(d.at(2), 2);
        assert_eq!(d.at(3), 4);
        assert_eq!(d.at(7), 4);

        assert_eq!(RangeMap::arithmetic_truncated(0, 6), RangeMap::constant(0));
    }

    #[test]
    fn unimodality() {
        assert!(map("0,1,1,0;0").is_unimodal());
        assert!(!map("1,0,0,3,2,2,4,2;2").is_unimodal());
        assert!(map("2;2").is_unimodal());
        assert!(map("1,2,3,2;2").is_unimodal());
        assert!(!map("1,0;1").is_unimodal());
    }

    #[test]
    fn one_domination() {
        assert!(map("const:3").is_one_dominated());
        assert_eq!(map("const:3").domination_index().unwrap(), 1);
        let d = map("2,2,3,3,4,1,1;0");
        assert!(d.is_one_dominated());
        assert_eq!(d.domination_index().unwrap(), 6);
        let d = map("1,1,2;2");
        assert!(!d.is_one_dominated());
        assert_eq!(d.domination_index(), Err(Error::NotDominated));
    }

    #[test]
    fn closures() {
        assert_eq!(map("1,0,0,3,2,2,4,2;2").closure(), map("1,1,1,3,3,3;4"));
        let incr = map("1,2,3;4");
        assert_eq!(incr.closure(), incr);
        assert_eq!(RangeMap::constant(0).closure(), RangeMap::constant(0));
    }

    #[test]
    fn change_indices() {
        assert_eq!(map("2,2,2,4,4,4,5;5").first_change_index(), Some(3));
        assert_eq!(
            RangeMap::arithmetic_truncated(2, 5).first_change_index(),
            Some(1)
        );
        assert_eq!(map("const:7").first_change_index(), None);
    }

    #[test]
    fn canonical_form_and_roundtrip() {
        // A prefix entry equal to the tail is folded away.
        assert_eq!(map("1,2,3,2;2"), map("1,2,3;2"));
        assert_eq!(map(";2"), RangeMap::constant(2));
        for s in ["const:2", "arith:1@4", "arith:2@7", "1,2,3;2", "0,1,1,0;0"] {
            let d = map(s);
            assert_eq!(map(&d.to_string()), d, "roundtrip of {s}");
        }
        assert!("1, 2;3".parse::<RangeMap>().is_err());
        assert!("arith:1".parse::<RangeMap>().is_err());
    }

    #[test]
    fn representation_boundary() {
        for s in ["1,2,3;2", "const:0", "arith:2@9", "0,1,1,0;0"] {
            let d = map(s);
            let l = d.prefix().len();
            for i in 1..=l + 5 {
                let expect = if i <= l { d.prefix()[i - 1] } else { d.tail() };
                assert_eq!(d.at(i), expect);
            }
        }
    }
}
