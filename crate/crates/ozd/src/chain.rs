//! Transformations of the finite chain `X_n = {1 < 2 < … < n}` and their
//! exact arithmetic.
//!
//! A [`Transformation`] is a total self-map of `X_n`, stored as its image
//! word: entry at position `x` (1-based) is the image of `x`. Composition is
//! left-to-right throughout the crate: `x · (a ∘ b) = (x · a) · b`, so
//! constant maps are right zeros. All values are immutable; equality is
//! entrywise equality of image words and the derived order is lexicographic
//! on the image word, which makes deduplicating collections deterministic.

use std::borrow::Borrow;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A 1-based point of the chain.
pub type Point = usize;

/// Largest supported chain size (image words are stored as `u16`).
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A full transformation of the chain `X_n`, stored as its image word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Box<[u16]>,
}

impl Transformation {
    /// Builds a transformation of the given degree from a 1-based image word.
    pub fn new(degree: usize, images: &[Point]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: MAX_DEGREE,
            });
        }
        if images.len() != degree {
            return Err(Error::WrongLength {
                expected: degree,
                got: images.len(),
            });
        }
        let mut word = Vec::with_capacity(degree);
        for (pos, &value) in images.iter().enumerate() {
            if value < 1 || value > degree {
                return Err(Error::EntryOutOfRange {
                    position: pos + 1,
                    value,
                    degree,
                });
            }
            word.push(value as u16);
        }
        Ok(Self {
            images: word.into_boxed_slice(),
        })
    }

    pub(crate) fn from_word(word: Vec<u16>) -> Self {
        debug_assert!(!word.is_empty());
        Self {
            images: word.into_boxed_slice(),
        }
    }

    /// The identity map of `X_n`.
    pub fn identity(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: MAX_DEGREE,
            });
        }
        Ok(Self::from_word((1..=degree as u16).collect()))
    }

    /// The constant map sending every point to `k`, a right zero of the
    /// composition monoid.
    pub fn constant(degree: usize, k: Point) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: MAX_DEGREE,
            });
        }
        if k < 1 || k > degree {
            return Err(Error::PointOutOfRange {
                point: k,
                degree,
            });
        }
        Ok(Self::from_word(vec![k as u16; degree]))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    ///
    /// Panics when `x` is outside the chain; use [`Transformation::degree`]
    /// to stay in range.
    pub fn apply(&self, x: Point) -> Point {
        assert!(
            x >= 1 && x <= self.images.len(),
            "point {x} outside 1..={}",
            self.images.len()
        );
        self.images[x - 1] as Point
    }

    /// The image word as 1-based points.
    pub fn images(&self) -> Vec<Point> {
        self.images.iter().map(|&v| v as Point).collect()
    }

    pub(crate) fn word(&self) -> &[u16] {
        &self.images
    }

    /// Left-to-right composition: apply `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let mut word = Vec::with_capacity(self.images.len());
        for &v in self.images.iter() {
            word.push(other.images[v as usize - 1]);
        }
        Ok(Self::from_word(word))
    }

    pub(crate) fn compose_into(&self, other: &Self, out: &mut Vec<u16>) {
        debug_assert_eq!(self.degree(), other.degree());
        out.clear();
        for &v in self.images.iter() {
            out.push(other.images[v as usize - 1]);
        }
    }

    /// Sorted, deduplicated image set.
    pub fn image(&self) -> Vec<Point> {
        let mut values: Vec<Point> = self.images.iter().map(|&v| v as Point).collect();
        values.sort_unstable();
        values.dedup();
        values
    }

    /// Number of distinct image values.
    pub fn image_size(&self) -> usize {
        self.image().len()
    }

    /// Fixed points, sorted.
    pub fn fix_set(&self) -> Vec<Point> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| v as usize == i + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The partition of the chain into preimage classes, blocks ordered by
    /// their image values. For order-preserving input the result is convex
    /// and ordered.
    pub fn kernel(&self) -> OrderedPartition {
        let mut classes: BTreeMap<u16, Vec<Point>> = BTreeMap::new();
        for (i, &v) in self.images.iter().enumerate() {
            classes.entry(v).or_default().push(i + 1);
        }
        OrderedPartition {
            degree: self.degree(),
            blocks: classes.into_values().collect(),
        }
    }

    pub fn is_order_preserving(&self) -> bool {
        self.images.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_order_decreasing(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize <= i + 1)
    }

    pub fn is_order_increasing(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize > i)
    }

    /// Conjugate by chain reversal: `x ↦ n+1 − (n+1−x)·self`.
    ///
    /// An involution, and a monoid isomorphism exchanging the "1" and "n"
    /// ends of the chain.
    pub fn dual(&self) -> Self {
        let n = self.images.len() as u16;
        let word = (0..n)
            .map(|i| n + 1 - self.images[(n - 1 - i) as usize])
            .collect();
        Self::from_word(word)
    }

    /// The block presentation of an order-preserving map: the convex ordered
    /// partition into preimage classes, paired with the strictly increasing
    /// list of image values. Rejects non-order-preserving input, whose
    /// preimage classes need not be convex.
    pub fn tabular_form(&self) -> Result<TabularForm> {
        if !self.is_order_preserving() {
            return Err(Error::NotOrderPreserving);
        }
        let blocks = self.kernel();
        let values = self.image();
        debug_assert_eq!(blocks.len(), values.len());
        Ok(TabularForm { blocks, values })
    }
}

impl Borrow<[u16]> for Transformation {
    fn borrow(&self) -> &[u16] {
        &self.images
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Transformation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Transformation {
    type Err = Error;

    /// Parses the canonical text form, e.g. `[1,1,2]`. The brackets are
    /// optional and whitespace around entries is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .unwrap_or(trimmed);
        let parse_err = |reason: &str| Error::ParseTransformation {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if inner.trim().is_empty() {
            return Err(parse_err("empty image word"));
        }
        let mut images = Vec::new();
        for part in inner.split(',') {
            let value: usize = part
                .trim()
                .parse()
                .map_err(|_| parse_err("entries must be positive integers"))?;
            images.push(value);
        }
        Transformation::new(images.len(), &images).map_err(|e| Error::ParseTransformation {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

/// A partition of the chain into nonempty, pairwise disjoint blocks.
///
/// Blocks are kept in the order they were produced (kernels order them by
/// image value, equivalence closures by least element); equality and hashing
/// ignore the block order and compare the partitions as set systems.
#[derive(Clone)]
pub struct OrderedPartition {
    degree: usize,
    blocks: Vec<Vec<Point>>,
}

impl OrderedPartition {
    /// Validates that `blocks` partition `{1..n}`. Each block is sorted;
    /// the block order itself is preserved.
    pub fn new(degree: usize, blocks: Vec<Vec<Point>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::NotAPartition("empty block".to_string()));
            }
            block.sort_unstable();
            for &p in &block {
                if p < 1 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if seen[p - 1] {
                    return Err(Error::NotAPartition(format!("point {p} occurs twice")));
                }
                seen[p - 1] = true;
            }
            sorted_blocks.push(block);
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::NotAPartition(format!(
                "point {} is not covered",
                missing + 1
            )));
        }
        Ok(Self {
            degree,
            blocks: sorted_blocks,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<Point>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// True when every block is a set of consecutive integers.
    pub fn is_convex(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }

    /// True when `max(block i) < min(block i+1)` for consecutive blocks.
    pub fn is_ordered(&self) -> bool {
        self.blocks
            .windows(2)
            .all(|w| w[0][w[0].len() - 1] < w[1][0])
    }

    /// True when every block of `self` is contained in a block of `other`
    /// (i.e. `self` is a finer partition of the same chain).
    pub fn refines(&self, other: &OrderedPartition) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let mut owner = vec![0usize; self.degree];
        for (bi, block) in other.blocks.iter().enumerate() {
            for &p in block {
                owner[p - 1] = bi;
            }
        }
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&p| owner[p - 1] == owner[block[0] - 1]))
    }

    fn canonical(&self) -> Vec<&Vec<Point>> {
        let mut blocks: Vec<&Vec<Point>> = self.blocks.iter().collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        blocks
    }
}

impl PartialEq for OrderedPartition {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.canonical() == other.canonical()
    }
}

impl Eq for OrderedPartition {}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, p) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The two-row block form of an order-preserving transformation: convex
/// ordered kernel blocks over their strictly increasing image values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TabularForm {
    blocks: OrderedPartition,
    values: Vec<Point>,
}

impl TabularForm {
    pub fn blocks(&self) -> &OrderedPartition {
        &self.blocks
    }

    pub fn values(&self) -> &[Point] {
        &self.values
    }

    /// Number of blocks, equal to the image size of the transformation.
    pub fn width(&self) -> usize {
        self.values.len()
    }

    /// Rebuilds the transformation: every point of block `i` maps to
    /// `values[i]`. Round-trips with [`Transformation::tabular_form`].
    pub fn to_transformation(&self) -> Transformation {
        let mut word = vec![0u16; self.blocks.degree()];
        for (block, &value) in self.blocks.blocks().iter().zip(&self.values) {
            for &p in block {
                word[p - 1] = value as u16;
            }
        }
        Transformation::from_word(word)
    }
}

/// The partition induced by the smallest equivalence relation containing the
/// given pairs, blocks ordered by least element.
pub fn equivalence_closure(pairs: &[(Point, Point)], degree: usize) -> Result<OrderedPartition> {
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    for &(a, b) in pairs {
        for p in [a, b] {
            if p < 1 || p > degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
        }
    }
    // Union-find over 0-based points.
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for &(a, b) in pairs {
        let ra = find(&mut parent, a - 1);
        let rb = find(&mut parent, b - 1);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    }
    let mut classes: BTreeMap<usize, Vec<Point>> = BTreeMap::new();
    for x in 0..degree {
        let root = find(&mut parent, x);
        classes.entry(root).or_default().push(x + 1);
    }
    Ok(OrderedPartition {
        degree,
        blocks: classes.into_values().collect(),
    })
}
