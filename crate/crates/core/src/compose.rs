//! The two word-level substitution operations and their companions.
//!
//! `white_square(u, i, v)` splices `v` into the i-th interstice of `u`.
//! `black_square` additionally re-saturates: every letter that sat at its
//! ceiling `delta(j)` before the splice is raised to the ceiling of the
//! position it lands on. Both index shifts go through one audited
//! `saturate` with the reindexing passed as data.

use crate::cliffs::{is_cliff, CliffWord};
use crate::error::{Error, Result};
use crate::rangemap::RangeMap;

fn check_slot(slot: usize, size: usize) -> Result<()> {
    if slot < 1 || slot > size {
        return Err(Error::SlotOutOfRange { slot, size });
    }
    Ok(())
}

/// Plain substitution `u(1, i - 1) v u(i, l(u))`. Slots are 1-based and run
/// from 1 to the size of `u`.
pub fn white_square(u: &CliffWord, slot: usize, v: &CliffWord) -> Result<CliffWord> {
    check_slot(slot, u.size())?;
    let mut letters = Vec::with_capacity(u.len() + v.len());
    letters.extend_from_slice(&u.letters()[..slot - 1]);
    letters.extend_from_slice(v.letters());
    letters.extend_from_slice(&u.letters()[slot - 1..]);
    Ok(CliffWord::new(letters))
}

/// Indicator of cliff membership; kills compositions leaving the family.
pub fn chi(delta: &RangeMap, w: &CliffWord) -> Result<bool> {
    is_cliff(delta, w)
}

/// Letterwise re-saturation along a reindexing of positions: letter `j`
/// becomes `delta(f(j))` when `w(j) = delta(j)` and is kept otherwise.
/// Both `j` and `f(j)` are 1-based.
pub fn saturate(
    delta: &RangeMap,
    w: &CliffWord,
    reindex: impl Fn(usize) -> usize,
) -> Result<CliffWord> {
    delta.check_length(w.len())?;
    let mut letters = Vec::with_capacity(w.len());
    for j in 1..=w.len() {
        let a = w.letter(j);
        letters.push(if a == delta.at(j) {
            delta.bound(reindex(j))?
        } else {
            a
        });
    }
    Ok(CliffWord::new(letters))
}

/// Saturated substitution: `m^f(u)` spliced with `m^g(v)` where `f` keeps
/// positions left of the slot and shifts the rest by `l(v)`, and `g` shifts
/// all of `v` by `i - 1`. The result need not be a cliff even when both
/// operands are; callers apply `chi` or `reduce` as their formula demands.
pub fn black_square(
    delta: &RangeMap,
    u: &CliffWord,
    slot: usize,
    v: &CliffWord,
) -> Result<CliffWord> {
    check_slot(slot, u.size())?;
    delta.check_length(u.len() + v.len())?;
    let lv = v.len();
    let su = saturate(delta, u, |j| if j < slot { j } else { j + lv })?;
    let sv = saturate(delta, v, |j| j + slot - 1)?;
    white_square(&su, slot, &sv)
}

/// The three-zone membership test for the box `[u |_i v, u #_i v]` where
/// `|` and `#` are the plain and saturated substitutions. Assumes
/// `u |_i v` is a cliff; under that hypothesis the value agrees with
/// coordinate box membership.
pub fn interval_membership_check(
    delta: &RangeMap,
    u: &CliffWord,
    slot: usize,
    v: &CliffWord,
    w: &CliffWord,
) -> Result<bool> {
    check_slot(slot, u.size())?;
    let total = u.len() + v.len();
    if w.len() != total {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: total,
        });
    }
    delta.check_length(total)?;
    let lv = v.len();
    // Zone (i): the untouched head of u.
    for j in 1..slot {
        if w.letter(j) != u.letter(j) {
            return Ok(false);
        }
    }
    // Zone (ii): the spliced copy of v.
    for j in slot..slot + lv {
        let a = v.letter(j - slot + 1);
        let ok = if a == delta.at(j - slot + 1) {
            a <= w.letter(j) && w.letter(j) <= delta.at(j)
        } else {
            w.letter(j) == a
        };
        if !ok {
            return Ok(false);
        }
    }
    // Zone (iii): the shifted tail of u.
    for j in slot + lv..=total {
        let a = u.letter(j - lv);
        let ok = if a == delta.at(j - lv) {
            a <= w.letter(j) && w.letter(j) <= delta.at(j)
        } else {
            w.letter(j) == a
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliffs::enumerate;
    use crate::order::Interval;

    fn map(s: &str) -> RangeMap {
        s.parse().unwrap()
    }

    fn word(s: &str) -> CliffWord {
        s.parse().unwrap()
    }

    #[test]
    fn white_square_splices() {
        assert_eq!(
            white_square(&word("0,0,1,0,2,1"), 4, &word("2,1,0,0")).unwrap(),
            word("0,0,1,2,1,0,0,0,2,1")
        );
        assert_eq!(
            white_square(&word("0,0,2"), 3, &word("1,0")).unwrap(),
            word("0,0,1,0,2")
        );
        let w = word("3,1,4");
        for i in 1..=w.size() {
            assert_eq!(white_square(&w, i, &CliffWord::empty()).unwrap(), w);
        }
        assert!(matches!(
            white_square(&w, 5, &word("0")),
            Err(Error::SlotOutOfRange { slot: 5, size: 4 })
        ));
    }

    #[test]
    fn chi_indicator() {
        let d = map("1,2,3;2");
        let dead = white_square(&word("0,0,2"), 3, &word("1,3,1,1")).unwrap();
        assert_eq!(dead, word("0,0,1,3,1,1,2"));
        assert!(!chi(&d, &dead).unwrap());
        assert!(chi(&d, &word("0,0,1,0,2")).unwrap());
        assert!(chi(&d, &CliffWord::empty()).unwrap());
    }

    #[test]
    fn saturation() {
        let d = map("1,1,3,2,1;1");
        let sat = saturate(&d, &word("1,0,2,2"), |j| if j <= 2 { j } else { j + 3 }).unwrap();
        assert_eq!(sat, word("1,0,2,1"));
        let shifted = saturate(&d, &word("1,0,1"), |j| j + 2).unwrap();
        assert_eq!(shifted, word("3,0,1"));
        let untouched = word("0,0,2,1");
        assert_eq!(saturate(&d, &untouched, |j| j + 1).unwrap(), untouched);
    }

    #[test]
    fn black_square_examples() {
        let d = map("1,1,3,2,1;1");
        assert_eq!(
            black_square(&d, &word("1,0,2,2"), 3, &word("1,0,1")).unwrap(),
            word("1,0,3,0,1,2,1")
        );
        assert_eq!(
            black_square(&d, &word("1,0,2,2"), 4, &word("0,0,3")).unwrap(),
            word("1,0,2,0,0,1,1")
        );
        // The identity reindexing case: splicing the empty word at the last
        // slot saturates nothing.
        let u = word("1,0,2,2");
        assert_eq!(
            black_square(&d, &u, u.size(), &CliffWord::empty()).unwrap(),
            u
        );
    }

    #[test]
    fn membership_zones() {
        let d = map("1,2,3,4,5,4;4");
        let u = word("1,0");
        let v = word("0,2,1");
        assert!(interval_membership_check(&d, &u, 2, &v, &word("1,0,3,1,0")).unwrap());
        assert!(!interval_membership_check(&d, &u, 2, &v, &word("1,0,2,1,1")).unwrap());
        let low = white_square(&u, 2, &v).unwrap();
        assert!(interval_membership_check(&d, &u, 2, &v, &low).unwrap());
    }

    #[test]
    fn zones_match_box_membership_exhaustively() {
        for spec in ["1,1,3,2,1;1", "1,2,3;2", "arith:1@8"] {
            let d = map(spec);
            for su in 1..=4usize {
                for sv in 1..=7 - su {
                    let n = su + sv - 1;
                    for u in enumerate(&d, su, false).unwrap() {
                        for v in enumerate(&d, sv, false).unwrap() {
                            for i in 1..=su {
                                let lo = white_square(&u, i, &v).unwrap();
                                if !chi(&d, &lo).unwrap() {
                                    continue;
                                }
                                let hi = black_square(&d, &u, i, &v).unwrap();
                                let iv = Interval::new(lo, hi).unwrap();
                                for w in enumerate(&d, n, false).unwrap() {
                                    assert_eq!(
                                        interval_membership_check(&d, &u, i, &v, &w).unwrap(),
                                        iv.contains(&w).unwrap(),
                                        "{spec}: u={u:?} i={i} v={v:?} w={w:?}"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn white_square_word_laws() {
        // Word shadows of the operad axioms on a few spot checks; the
        // property suite covers random triples.
        let (u, v, w) = (word("1,0"), word("0,2"), word("3"));
        for i in 1..=u.size() {
            for j in 1..=v.size() {
                let a = white_square(&white_square(&u, i, &v).unwrap(), i + j - 1, &w).unwrap();
                let b = white_square(&u, i, &white_square(&v, j, &w).unwrap()).unwrap();
                assert_eq!(a, b);
            }
        }
        for i in 1..u.size() {
            for j in i + 1..=u.size() {
                let a = white_square(&white_square(&u, i, &v).unwrap(), j + v.len(), &w).unwrap();
                let b = white_square(&white_square(&u, j, &w).unwrap(), i, &v).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
