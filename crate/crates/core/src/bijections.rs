//! Size-preserving bijections between cliff or hill families and classical
//! combinatorial objects: integer compositions, permutations, increasing
//! trees, rectangular paths, and Dyck paths. Each pair of maps is mutually
//! inverse; figures are matched through text encodings, never drawings.

use std::fmt;
use std::str::FromStr;

use crate::cliffs::CliffWord;
use crate::error::{Error, Result};
use crate::rangemap::RangeMap;

fn arithmetic_check(m: u32, w: &CliffWord) -> Result<()> {
    for i in 1..=w.len() {
        if w.letter(i) > (i as u32 - 1) * m {
            return Err(Error::NotACliff {
                word: w.to_string(),
            });
        }
    }
    Ok(())
}

fn hill_check(delta: &RangeMap, w: &CliffWord) -> Result<()> {
    if !crate::cliffs::is_hill(delta, w)? {
        return Err(Error::NotAHill {
            word: w.to_string(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Integer compositions <-> binary words (cliffs of the constant map 1).
// ---------------------------------------------------------------------

/// A sequence of positive parts; the size is their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::EmptyPart);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Reads a binary word `0^(p1 - 1) 1 0^(p2 - 1) 1 ...` off as its parts.
pub fn to_composition(w: &CliffWord) -> Result<Composition> {
    if w.letters().iter().any(|&a| a > 1) {
        return Err(Error::NotBinaryWord {
            word: w.to_string(),
        });
    }
    let mut parts = Vec::new();
    let mut zeros = 0usize;
    for &a in w.letters() {
        if a == 0 {
            zeros += 1;
        } else {
            parts.push(zeros + 1);
            zeros = 0;
        }
    }
    parts.push(zeros + 1);
    Composition::new(parts)
}

pub fn from_composition(c: &Composition) -> CliffWord {
    let mut letters = Vec::with_capacity(c.size() - 1);
    for (k, &part) in c.parts().iter().enumerate() {
        letters.extend(std::iter::repeat_n(0, part - 1));
        if k + 1 < c.parts().len() {
            letters.push(1);
        }
    }
    CliffWord::new(letters)
}

// ---------------------------------------------------------------------
// Permutations <-> cliffs of the arithmetic map with difference 1.
// ---------------------------------------------------------------------

/// One-line permutation of `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let k = one_line.len();
        let mut seen = vec![false; k + 1];
        for &v in &one_line {
            if v == 0 || v > k || seen[v] {
                return Err(Error::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Permutation {
    /// Digits are concatenated while every value is a single digit, the
    /// usual one-line shorthand; larger permutations print with commas.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v <= 9) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.parse().map_err(|_| Error::NotAPermutation))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|ch| ch.to_digit(10).map(|d| d as usize).ok_or(Error::NotAPermutation))
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// Builds the permutation with exactly `w(i)` smaller letters right of `i`:
/// insert `1, 2, ...` in turn, placing `i` so that `w(i)` of the previous
/// letters end up on its right.
pub fn to_permutation(w: &CliffWord) -> Result<Permutation> {
    arithmetic_check(1, w)?;
    let mut one_line: Vec<usize> = Vec::with_capacity(w.len());
    for i in 1..=w.len() {
        let from_right = w.letter(i) as usize;
        one_line.insert(one_line.len() - from_right, i);
    }
    Permutation::new(one_line)
}

/// Lehmer-style reading: `w(i)` counts the smaller letters right of `i`.
pub fn from_permutation(p: &Permutation) -> CliffWord {
    let k = p.len();
    let mut position = vec![0usize; k + 1];
    for (idx, &v) in p.one_line().iter().enumerate() {
        position[v] = idx;
    }
    let mut letters = Vec::with_capacity(k);
    for i in 1..=k {
        let count = (1..i).filter(|&j| position[j] > position[i]).count();
        letters.push(count as u32);
    }
    CliffWord::new(letters)
}

// ---------------------------------------------------------------------
// Increasing trees <-> cliffs of arithmetic maps.
// ---------------------------------------------------------------------

/// A planar rooted tree whose internal nodes all have `m + 1` children and
/// carry the labels `1..=k` increasing away from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncreasingTree {
    Leaf,
    Node {
        label: usize,
        children: Vec<IncreasingTree>,
    },
}

impl IncreasingTree {
    pub fn leaf_count(&self) -> usize {
        match self {
            IncreasingTree::Leaf => 1,
            IncreasingTree::Node { children, .. } => {
                children.iter().map(IncreasingTree::leaf_count).sum()
            }
        }
    }

    fn max_label(&self) -> usize {
        match self {
            IncreasingTree::Leaf => 0,
            IncreasingTree::Node { label, children } => children
                .iter()
                .map(IncreasingTree::max_label)
                .max()
                .unwrap_or(0)
                .max(*label),
        }
    }

    /// Replaces the 1-based `leaf`-th leaf; returns the tree and whether
    /// the graft happened.
    fn graft(&self, leaf: usize, sub: &IncreasingTree) -> (IncreasingTree, usize) {
        match self {
            IncreasingTree::Leaf => {
                if leaf == 1 {
                    (sub.clone(), 0)
                } else {
                    (IncreasingTree::Leaf, leaf - 1)
                }
            }
            IncreasingTree::Node { label, children } => {
                let mut remaining = leaf;
                let mut out = Vec::with_capacity(children.len());
                for child in children {
                    if remaining > 0 {
                        let (new_child, rest) = child.graft(remaining, sub);
                        out.push(new_child);
                        remaining = rest;
                    } else {
                        out.push(child.clone());
                    }
                }
                (
                    IncreasingTree::Node {
                        label: *label,
                        children: out,
                    },
                    remaining,
                )
            }
        }
    }
}

impl fmt::Display for IncreasingTree {
    /// Nested parenthesized label lists: a leaf is `*`, a node is
    /// `label(child,...)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IncreasingTree::Leaf => write!(f, "*"),
            IncreasingTree::Node { label, children } => {
                write!(f, "{label}(")?;
                for (k, child) in children.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{child}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for IncreasingTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn parse(chars: &mut std::iter::Peekable<std::str::Chars>) -> Result<IncreasingTree> {
            match chars.peek() {
                Some('*') => {
                    chars.next();
                    Ok(IncreasingTree::Leaf)
                }
                Some(c) if c.is_ascii_digit() => {
                    let mut label = 0usize;
                    while let Some(c) = chars.peek() {
                        match c.to_digit(10) {
                            Some(d) => {
                                label = label * 10 + d as usize;
                                chars.next();
                            }
                            None => break,
                        }
                    }
                    if chars.next() != Some('(') {
                        return Err(Error::Parse("expected ( after label".into()));
                    }
                    let mut children = Vec::new();
                    loop {
                        children.push(parse(chars)?);
                        match chars.next() {
                            Some(',') => continue,
                            Some(')') => break,
                            _ => return Err(Error::Parse("expected , or )".into())),
                        }
                    }
                    Ok(IncreasingTree::Node { label, children })
                }
                _ => Err(Error::Parse("expected * or a label".into())),
            }
        }
        let mut chars = s.chars().peekable();
        let tree = parse(&mut chars)?;
        if chars.next().is_some() {
            return Err(Error::Parse("trailing input after tree".into()));
        }
        Ok(tree)
    }
}

/// Grafts, for each letter in turn, a node labeled by the step number onto
/// the `(a + 1)`-st leaf of the tree so far.
pub fn to_increasing_tree(m: u32, w: &CliffWord) -> Result<IncreasingTree> {
    arithmetic_check(m, w)?;
    let mut tree = IncreasingTree::Leaf;
    for j in 1..=w.len() {
        let node = IncreasingTree::Node {
            label: j,
            children: vec![IncreasingTree::Leaf; m as usize + 1],
        };
        let at = w.letter(j) as usize + 1;
        let (next, rest) = tree.graft(at, &node);
        debug_assert_eq!(rest, 0);
        tree = next;
    }
    Ok(tree)
}

/// Strips the highest-labeled node (its children must all be leaves) and
/// records which leaf it sat on, last letter first.
pub fn from_increasing_tree(m: u32, t: &IncreasingTree) -> Result<CliffWord> {
    fn strip(
        t: &IncreasingTree,
        target: usize,
        m: u32,
        leaves_before: &mut usize,
        letter: &mut Option<u32>,
    ) -> Result<IncreasingTree> {
        match t {
            IncreasingTree::Leaf => {
                *leaves_before += 1;
                Ok(IncreasingTree::Leaf)
            }
            IncreasingTree::Node { label, children } => {
                if children.len() != m as usize + 1 {
                    return Err(Error::MalformedTree {
                        reason: format!(
                            "node {label} has {} children, expected {}",
                            children.len(),
                            m + 1
                        ),
                    });
                }
                if *label == target {
                    if children.iter().any(|c| c != &IncreasingTree::Leaf) {
                        return Err(Error::MalformedTree {
                            reason: format!("labels below {label} are not increasing"),
                        });
                    }
                    if letter.is_some() {
                        return Err(Error::MalformedTree {
                            reason: format!("label {label} repeats"),
                        });
                    }
                    *letter = Some(*leaves_before as u32);
                    *leaves_before += 1;
                    return Ok(IncreasingTree::Leaf);
                }
                let mut out = Vec::with_capacity(children.len());
                for child in children {
                    out.push(strip(child, target, m, leaves_before, letter)?);
                }
                Ok(IncreasingTree::Node {
                    label: *label,
                    children: out,
                })
            }
        }
    }

    let k = t.max_label();
    let mut tree = t.clone();
    let mut letters = vec![0u32; k];
    for target in (1..=k).rev() {
        let mut leaves_before = 0usize;
        let mut letter = None;
        tree = strip(&tree, target, m, &mut leaves_before, &mut letter)?;
        letters[target - 1] = letter.ok_or_else(|| Error::MalformedTree {
            reason: format!("label {target} missing"),
        })?;
    }
    if tree != IncreasingTree::Leaf {
        return Err(Error::MalformedTree {
            reason: "unlabeled structure remains".into(),
        });
    }
    let w = CliffWord::new(letters);
    arithmetic_check(m, &w)?;
    Ok(w)
}

// ---------------------------------------------------------------------
// Rectangular paths <-> hills of constant maps.
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RectStep {
    East,
    North,
}

/// An east/north step path in a `(n - 1) x c` rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectPath(Vec<RectStep>);

impl RectPath {
    pub fn steps(&self) -> &[RectStep] {
        &self.0
    }
}

impl fmt::Display for RectPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", if *s == RectStep::East { 'E' } else { 'N' })?;
        }
        Ok(())
    }
}

impl FromStr for RectPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'E' => Ok(RectStep::East),
                'N' => Ok(RectStep::North),
                _ => Err(Error::Parse(format!("bad rectangular step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(RectPath)
    }
}

/// The path with as many east steps at ordinate `i` as `w` has letters `i`.
pub fn to_rect_path(c: u32, w: &CliffWord) -> Result<RectPath> {
    hill_check(&RangeMap::constant(c), w)?;
    let mut steps = Vec::with_capacity(w.len() + c as usize);
    let mut level = 0u32;
    for &a in w.letters() {
        while level < a {
            steps.push(RectStep::North);
            level += 1;
        }
        steps.push(RectStep::East);
    }
    while level < c {
        steps.push(RectStep::North);
        level += 1;
    }
    Ok(RectPath(steps))
}

/// Reads each east step's ordinate off as a letter; the endpoint must be
/// the far corner at height `c`.
pub fn from_rect_path(c: u32, p: &RectPath) -> Result<CliffWord> {
    let mut letters = Vec::new();
    let mut level = 0u32;
    let mut x = 0usize;
    for s in p.steps() {
        match s {
            RectStep::North => level += 1,
            RectStep::East => {
                letters.push(level);
                x += 1;
            }
        }
    }
    if level != c {
        return Err(Error::BadEndpoint {
            x,
            y: level as usize,
            want_x: x,
            want_y: c as usize,
        });
    }
    Ok(CliffWord::new(letters))
}

// ---------------------------------------------------------------------
// Dyck paths <-> hills of arithmetic maps.
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DyckStep {
    Up,
    Down,
}

/// A path of `(1, m)` up-steps and `(1, -1)` down-steps staying above the
/// x-axis and ending on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckPath(Vec<DyckStep>);

impl DyckPath {
    pub fn steps(&self) -> &[DyckStep] {
        &self.0
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", if *s == DyckStep::Up { 'U' } else { 'D' })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'U' => Ok(DyckStep::Up),
                'D' => Ok(DyckStep::Down),
                _ => Err(Error::Parse(format!("bad Dyck step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(DyckPath)
    }
}

/// The path whose `i`-th up-step has `w(i)` down-steps on its left.
pub fn to_dyck(m: u32, w: &CliffWord) -> Result<DyckPath> {
    arithmetic_check(m, w)?;
    if !w.is_weakly_increasing() {
        return Err(Error::NotAHill {
            word: w.to_string(),
        });
    }
    let ups = w.len();
    let total_downs = m as usize * ups;
    let mut steps = Vec::with_capacity(ups + total_downs);
    let mut downs = 0usize;
    let mut next_up = 1usize;
    while steps.len() < ups + total_downs {
        if next_up <= ups && w.letter(next_up) as usize == downs {
            steps.push(DyckStep::Up);
            next_up += 1;
        } else {
            steps.push(DyckStep::Down);
            downs += 1;
        }
    }
    Ok(DyckPath(steps))
}

/// Counts the down-steps left of each up-step; fails when the path dips
/// under the axis or misses the final return to it.
pub fn from_dyck(m: u32, p: &DyckPath) -> Result<CliffWord> {
    let mut letters = Vec::new();
    let mut height = 0i64;
    let mut downs = 0u32;
    for (k, s) in p.steps().iter().enumerate() {
        match s {
            DyckStep::Up => {
                letters.push(downs);
                height += m as i64;
            }
            DyckStep::Down => {
                downs += 1;
                height -= 1;
            }
        }
        if height < 0 {
            return Err(Error::PathBelowAxis { step: k + 1 });
        }
    }
    if height != 0 {
        return Err(Error::BadEndpoint {
            x: p.steps().len(),
            y: height as usize,
            want_x: p.steps().len(),
            want_y: 0,
        });
    }
    Ok(CliffWord::new(letters))
}
