//! Exhaustive enumeration of `O_n` and its distinguished subsets,
//! characterized and definitional membership predicates for the zero-divisor
//! sets, and exact big-integer closed-form counts.
//!
//! Enumeration generates image words in nondecreasing lexicographic order
//! and filters by the characterized predicates, so every store is
//! deterministic and usable as a golden value. The definitional predicates
//! perform the existential witness search over all of `O_n` and exist to
//! validate the characterizations; they are capped at a small degree.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::chain::{Point, Transformation};
use crate::error::{Error, Result};

/// Default cap for materializing a full enumeration (`|O_12| ≈ 1.35M`).
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// Default cap for the existential (definitional) predicates, which search
/// quadratically over `O_n`.
pub const DEFAULT_DEFINITIONAL_CAP: usize = 6;

/// Identifier of one of the distinguished subsets of `O_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SemigroupId {
    /// All order-preserving full transformations of `X_n`.
    O { n: usize },
    /// Maps whose image is an interval of the chain.
    Io { n: usize },
    /// Maps whose image is contained in `y`.
    OY { n: usize, y: BTreeSet<Point> },
    /// Left zero-divisors of `π_k`.
    L { n: usize, k: Point },
    /// Right zero-divisors of `π_k`.
    R { n: usize, k: Point },
    /// Two-sided zero-divisors of `π_k`.
    Z { n: usize, k: Point },
    /// `{α ∈ R_1 : 3α ≥ 3}`.
    R1Star { n: usize },
    /// `{α ∈ Z_1 : 3α ≥ 3}`.
    Z1Star { n: usize },
}

impl SemigroupId {
    pub fn degree(&self) -> usize {
        match *self {
            SemigroupId::O { n }
            | SemigroupId::Io { n }
            | SemigroupId::OY { n, .. }
            | SemigroupId::L { n, .. }
            | SemigroupId::R { n, .. }
            | SemigroupId::Z { n, .. }
            | SemigroupId::R1Star { n }
            | SemigroupId::Z1Star { n } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        match self {
            SemigroupId::O { .. } | SemigroupId::Io { .. } => Ok(()),
            SemigroupId::OY { y, .. } => {
                if y.is_empty() {
                    return Err(Error::InvalidParameter(
                        "Y must be a nonempty subset of the chain".to_string(),
                    ));
                }
                for &p in y {
                    if p < 1 || p > n {
                        return Err(Error::PointOutOfRange { point: p, degree: n });
                    }
                }
                Ok(())
            }
            SemigroupId::L { k, .. } | SemigroupId::R { k, .. } | SemigroupId::Z { k, .. } => {
                if *k < 1 || *k > n {
                    return Err(Error::PointOutOfRange {
                        point: *k,
                        degree: n,
                    });
                }
                Ok(())
            }
            SemigroupId::R1Star { .. } | SemigroupId::Z1Star { .. } => {
                if n < 3 {
                    return Err(Error::BelowThreshold {
                        name: "starred slice",
                        degree: n,
                        min: 3,
                    });
                }
                Ok(())
            }
        }
    }

    /// The characterized membership predicate of the set. Requires an
    /// order-preserving transformation of matching degree.
    pub fn contains(&self, a: &Transformation) -> Result<bool> {
        self.validate()?;
        let n = self.degree();
        if a.degree() != n {
            return Err(Error::DegreeMismatch {
                left: a.degree(),
                right: n,
            });
        }
        if !a.is_order_preserving() {
            return Err(Error::NotOrderPreserving);
        }
        Ok(match self {
            SemigroupId::O { .. } => true,
            SemigroupId::Io { .. } => {
                let image = a.image();
                image[image.len() - 1] - image[0] + 1 == image.len()
            }
            SemigroupId::OY { y, .. } => a.image().iter().all(|p| y.contains(p)),
            SemigroupId::L { k, .. } => in_l(a, *k)?,
            SemigroupId::R { k, .. } => in_r(a, *k)?,
            SemigroupId::Z { k, .. } => in_z(a, *k)?,
            SemigroupId::R1Star { .. } => in_r(a, 1)? && a.apply(3) >= 3,
            SemigroupId::Z1Star { .. } => in_z(a, 1)? && a.apply(3) >= 3,
        })
    }

    /// Stable identifier used in CLI output.
    pub fn cli_id(&self) -> &'static str {
        match self {
            SemigroupId::O { .. } => "on",
            SemigroupId::Io { .. } => "ion",
            SemigroupId::OY { .. } => "ony",
            SemigroupId::L { .. } => "l",
            SemigroupId::R { .. } => "r",
            SemigroupId::Z { .. } => "z",
            SemigroupId::R1Star { .. } => "r1star",
            SemigroupId::Z1Star { .. } => "z1star",
        }
    }
}

impl fmt::Display for SemigroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupId::O { n } => write!(f, "O_{n}"),
            SemigroupId::Io { n } => write!(f, "IO_{n}"),
            SemigroupId::OY { n, y } => {
                let points: Vec<String> = y.iter().map(|p| p.to_string()).collect();
                write!(f, "O_{n}({{{}}})", points.join(","))
            }
            SemigroupId::L { n, k } => write!(f, "L_{k} (n={n})"),
            SemigroupId::R { n, k } => write!(f, "R_{k} (n={n})"),
            SemigroupId::Z { n, k } => write!(f, "Z_{k} (n={n})"),
            SemigroupId::R1Star { n } => write!(f, "R_1* (n={n})"),
            SemigroupId::Z1Star { n } => write!(f, "Z_1* (n={n})"),
        }
    }
}

/// A deduplicated, insertion-ordered collection of transformations of common
/// degree — the result of an enumeration or a closure.
#[derive(Clone, Debug, Serialize)]
pub struct ElementStore {
    degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    elements: Vec<Transformation>,
    #[serde(skip)]
    index: HashMap<Transformation, usize>,
}

impl ElementStore {
    pub fn new(degree: usize) -> Self {
        Self {
            degree,
            label: None,
            elements: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn from_elements<I>(degree: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = Transformation>,
    {
        let mut store = Self::new(degree);
        for t in elements {
            store.insert(t)?;
        }
        Ok(store)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Inserts unless already present; returns whether the element was new.
    pub fn insert(&mut self, t: Transformation) -> Result<bool> {
        if t.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: t.degree(),
                right: self.degree,
            });
        }
        if self.index.contains_key(&t) {
            return Ok(false);
        }
        self.index.insert(t.clone(), self.elements.len());
        self.elements.push(t);
        Ok(true)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.index.contains_key(t)
    }

    pub(crate) fn contains_word(&self, word: &[u16]) -> bool {
        self.index.contains_key(word)
    }

    pub fn position(&self, t: &Transformation) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub(crate) fn position_of_word(&self, word: &[u16]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn get(&self, i: usize) -> Option<&Transformation> {
        self.elements.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Transformation> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[Transformation] {
        &self.elements
    }

    /// Set equality, ignoring insertion order and labels.
    pub fn same_elements(&self, other: &ElementStore) -> bool {
        self.degree == other.degree
            && self.len() == other.len()
            && self.elements.iter().all(|t| other.contains(t))
    }

    pub fn is_subset_of(&self, other: &ElementStore) -> bool {
        self.degree == other.degree && self.elements.iter().all(|t| other.contains(t))
    }
}

impl<'a> IntoIterator for &'a ElementStore {
    type Item = &'a Transformation;
    type IntoIter = std::slice::Iter<'a, Transformation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Calls `f` with every nondecreasing image word of length `n` in
/// lexicographic order (i.e. with every element of `O_n`).
pub(crate) fn for_each_order_preserving<F: FnMut(&[u16])>(n: usize, mut f: F) {
    debug_assert!(n >= 1);
    let mut word = vec![1u16; n];
    loop {
        f(&word);
        // Advance to the next nondecreasing word: bump the rightmost entry
        // below n, then level the suffix.
        let mut pos = n;
        while pos > 0 && word[pos - 1] == n as u16 {
            pos -= 1;
        }
        if pos == 0 {
            return;
        }
        let bumped = word[pos - 1] + 1;
        for entry in word.iter_mut().skip(pos - 1) {
            *entry = bumped;
        }
    }
}

/// Membership in the left zero-divisor set of `π_k`, by structure: for
/// `k = 1` the image omits `n`, for `k = n` it omits `1`, and for interior
/// `k` it omits at least one endpoint.
pub fn in_l(a: &Transformation, k: Point) -> Result<bool> {
    let n = a.degree();
    if k < 1 || k > n {
        return Err(Error::PointOutOfRange { point: k, degree: n });
    }
    if !a.is_order_preserving() {
        return Err(Error::NotOrderPreserving);
    }
    // Order-preserving maps attain their extremes at the chain ends.
    let has_one = a.apply(1) == 1;
    let has_n = a.apply(n) == n;
    Ok(if k == 1 {
        !has_n
    } else if k == n {
        !has_one
    } else {
        !has_one || !has_n
    })
}

/// Membership in the right zero-divisor set of `π_k`, by structure: `k` is
/// in the image and its preimage is not the singleton `{k}`.
pub fn in_r(a: &Transformation, k: Point) -> Result<bool> {
    let n = a.degree();
    if k < 1 || k > n {
        return Err(Error::PointOutOfRange { point: k, degree: n });
    }
    if !a.is_order_preserving() {
        return Err(Error::NotOrderPreserving);
    }
    let preimage: Vec<Point> = (1..=n).filter(|&x| a.apply(x) == k).collect();
    Ok(!preimage.is_empty() && preimage != [k])
}

/// Membership in the two-sided zero-divisor set `Z_k = L_k ∩ R_k`. For
/// `k = 1` this unfolds to `1α = 2α = 1` with `n` missing from the image,
/// dually for `k = n`, and for interior `k` to the `R_k` condition plus a
/// missing endpoint.
pub fn in_z(a: &Transformation, k: Point) -> Result<bool> {
    Ok(in_l(a, k)? && in_r(a, k)?)
}

/// Definitional membership in the left zero-divisor set: exhaustive search
/// for a witness `β ∈ O_n ∖ {π_k}` with `a∘β = π_k`. The oracle the
/// characterized predicate is validated against.
pub fn in_l_definitional(a: &Transformation, k: Point) -> Result<bool> {
    in_l_definitional_with_cap(a, k, DEFAULT_DEFINITIONAL_CAP)
}

pub fn in_l_definitional_with_cap(a: &Transformation, k: Point, cap: usize) -> Result<bool> {
    let n = a.degree();
    if n > cap {
        return Err(Error::AboveDefinitionalCap { degree: n, cap });
    }
    if k < 1 || k > n {
        return Err(Error::PointOutOfRange { point: k, degree: n });
    }
    if !a.is_order_preserving() {
        return Err(Error::NotOrderPreserving);
    }
    let target = Transformation::constant(n, k)?;
    let mut found = false;
    let mut buf = Vec::with_capacity(n);
    for_each_order_preserving(n, |word| {
        if found || word == target.word() {
            return;
        }
        let beta = Transformation::from_word(word.to_vec());
        a.compose_into(&beta, &mut buf);
        if buf == target.word() {
            found = true;
        }
    });
    Ok(found)
}

/// Definitional membership in the right zero-divisor set: exhaustive search
/// for `γ ∈ O_n ∖ {π_k}` with `γ∘a = π_k`.
pub fn in_r_definitional(a: &Transformation, k: Point) -> Result<bool> {
    in_r_definitional_with_cap(a, k, DEFAULT_DEFINITIONAL_CAP)
}

pub fn in_r_definitional_with_cap(a: &Transformation, k: Point, cap: usize) -> Result<bool> {
    let n = a.degree();
    if n > cap {
        return Err(Error::AboveDefinitionalCap { degree: n, cap });
    }
    if k < 1 || k > n {
        return Err(Error::PointOutOfRange { point: k, degree: n });
    }
    if !a.is_order_preserving() {
        return Err(Error::NotOrderPreserving);
    }
    let target = Transformation::constant(n, k)?;
    let mut found = false;
    let mut buf = Vec::with_capacity(n);
    for_each_order_preserving(n, |word| {
        if found || word == target.word() {
            return;
        }
        let gamma = Transformation::from_word(word.to_vec());
        gamma.compose_into(a, &mut buf);
        if buf == target.word() {
            found = true;
        }
    });
    Ok(found)
}

/// Enumerates the named set in lexicographic image-word order, up to the
/// default degree cap.
pub fn enumerate(id: &SemigroupId) -> Result<ElementStore> {
    enumerate_with_cap(id, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_with_cap(id: &SemigroupId, cap: usize) -> Result<ElementStore> {
    id.validate()?;
    let n = id.degree();
    if n > cap {
        return Err(Error::AboveEnumerationCap { degree: n, cap });
    }
    let mut store = ElementStore::new(n).with_label(id.to_string());
    let mut pending: Result<()> = Ok(());
    for_each_order_preserving(n, |word| {
        if pending.is_err() {
            return;
        }
        let t = Transformation::from_word(word.to_vec());
        match id.contains(&t) {
            Ok(true) => {
                if let Err(e) = store.insert(t) {
                    pending = Err(e);
                }
            }
            Ok(false) => {}
            Err(e) => pending = Err(e),
        }
    });
    pending?;
    Ok(store)
}

/// The elements of `s` whose image has exactly `r` points.
pub fn layer(s: &ElementStore, r: usize) -> ElementStore {
    let mut out = ElementStore::new(s.degree());
    for t in s {
        if t.image_size() == r {
            out.insert(t.clone()).expect("degree preserved");
        }
    }
    out
}

/// The captive elements of `y` inside the chain of size `n`: endpoints of
/// the chain, and interior points whose both neighbours also lie in `y`.
pub fn captive_set(y: &BTreeSet<Point>, n: usize) -> Result<BTreeSet<Point>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if y.is_empty() {
        return Err(Error::InvalidParameter(
            "Y must be a nonempty subset of the chain".to_string(),
        ));
    }
    for &p in y {
        if p < 1 || p > n {
            return Err(Error::PointOutOfRange { point: p, degree: n });
        }
    }
    Ok(y.iter()
        .copied()
        .filter(|&p| p == 1 || p == n || (y.contains(&(p - 1)) && y.contains(&(p + 1))))
        .collect())
}

/// Binomial coefficient with the convention `C(a,b) = 0` for `b < 0`,
/// `b > a` or `a < 0`, which makes the counting formulas total at boundary
/// parameters.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || b > a || a < 0 {
        return BigUint::from(0u32);
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut result = BigUint::from(1u32);
    for i in 0..b {
        result = result * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    result
}

/// Exact closed-form cardinality. Available for `O_n` and the three
/// zero-divisor sets, at the parameter ranges where the counting formulas
/// are established:
///
/// * `|O_n| = C(2n−1, n−1)`;
/// * `|L_1| = |L_n| = C(2n−2, n−2)` (n ≥ 2) and
///   `|L_k| = C(2n−2, n−2) + C(2n−3, n−2)` for interior `k` (n ≥ 3);
/// * `|R_1| = |R_n| = C(2n−3, n−1)` (n ≥ 2) and
///   `|R_k| = C(2n−2, n−1) − C(2k−3, k−2)·C(2n−2k−1, n−k−1)` for interior `k`;
/// * `|Z_1| = |Z_n| = C(2n−4, n−2)` (n ≥ 3; at n = 2 they coincide with
///   `R_1`, `R_n`) and
///   `|Z_k| = |R_k| − (C(2n−4, n−1) − C(2k−4, k−2)·C(2n−2k−2, n−k−1))` for
///   interior `k`.
pub fn card(id: &SemigroupId) -> Result<BigUint> {
    id.validate()?;
    let n = id.degree() as i64;
    match id {
        SemigroupId::O { .. } => Ok(binomial(2 * n - 1, n - 1)),
        SemigroupId::L { k, .. } => {
            let k = *k as i64;
            if k == 1 || k == n {
                if n < 2 {
                    return Err(Error::BelowThreshold {
                        name: "left zero-divisor count",
                        degree: n as usize,
                        min: 2,
                    });
                }
                Ok(binomial(2 * n - 2, n - 2))
            } else {
                if n < 3 {
                    return Err(Error::BelowThreshold {
                        name: "left zero-divisor count (interior k)",
                        degree: n as usize,
                        min: 3,
                    });
                }
                Ok(binomial(2 * n - 2, n - 2) + binomial(2 * n - 3, n - 2))
            }
        }
        SemigroupId::R { k, .. } => {
            let k = *k as i64;
            if n < 2 {
                return Err(Error::BelowThreshold {
                    name: "right zero-divisor count",
                    degree: n as usize,
                    min: 2,
                });
            }
            if k == 1 || k == n {
                Ok(binomial(2 * n - 3, n - 1))
            } else {
                Ok(binomial(2 * n - 2, n - 1)
                    - binomial(2 * k - 3, k - 2) * binomial(2 * n - 2 * k - 1, n - k - 1))
            }
        }
        SemigroupId::Z { k, .. } => {
            let k = *k as i64;
            if n < 2 {
                return Err(Error::BelowThreshold {
                    name: "two-sided zero-divisor count",
                    degree: n as usize,
                    min: 2,
                });
            }
            if n == 2 {
                // At n = 2 the two-sided sets coincide with the right ones.
                return card(&SemigroupId::R {
                    n: 2,
                    k: k as usize,
                });
            }
            if k == 1 || k == n {
                Ok(binomial(2 * n - 4, n - 2))
            } else {
                let r = card(&SemigroupId::R {
                    n: n as usize,
                    k: k as usize,
                })?;
                let excluded = binomial(2 * n - 4, n - 1)
                    - binomial(2 * k - 4, k - 2) * binomial(2 * n - 2 * k - 2, n - k - 1);
                Ok(r - excluded)
            }
        }
        _ => Err(Error::NoClosedForm),
    }
}

/// The established rank values:
///
/// * `rank(O_n) = n + 1` (n ≥ 2), realized by `G_n`;
/// * `rank(IO_n) = n − 1` (n ≥ 3);
/// * `rank(O_n(Y)) = C(n−1, |Y|−1) + |Y^♯|` for `1 < |Y| < n`;
/// * `rank(L_1) = rank(L_n) = 2n − 3` and `rank(L_k) = 2n − 4` for interior
///   `k` (n ≥ 3);
/// * `rank(R_1) = rank(R_n) = 2n − 4` (n ≥ 3; value 1 at n = 2);
/// * `rank(Z_1) = rank(Z_n) = 2n − 5` (n ≥ 5; values 1, 2 at n = 3, 4);
/// * `rank(R_1*) = n − 1` (n ≥ 4) and `rank(Z_1*) = 2n − 7` (n ≥ 5), via
///   their isomorphisms onto `O_{n−2}` and the degree-(n−2) `L_1`.
pub fn rank_formula(id: &SemigroupId) -> Result<BigUint> {
    id.validate()?;
    let n = id.degree();
    let value = |v: usize| Ok(BigUint::from(v));
    match id {
        SemigroupId::O { .. } => {
            if n < 2 {
                return Err(Error::NoRankFormula);
            }
            value(n + 1)
        }
        SemigroupId::Io { .. } => {
            if n < 3 {
                return Err(Error::NoRankFormula);
            }
            value(n - 1)
        }
        SemigroupId::OY { y, .. } => {
            let r = y.len();
            if !(1 < r && r < n) {
                return Err(Error::NoRankFormula);
            }
            let captive = captive_set(y, n)?;
            Ok(binomial(n as i64 - 1, r as i64 - 1) + BigUint::from(captive.len()))
        }
        SemigroupId::L { k, .. } => {
            if n < 3 {
                return Err(Error::NoRankFormula);
            }
            if *k == 1 || *k == n {
                value(2 * n - 3)
            } else {
                value(2 * n - 4)
            }
        }
        SemigroupId::R { k, .. } => {
            if *k != 1 && *k != n {
                // Not a subsemigroup for interior k.
                return Err(Error::NoRankFormula);
            }
            match n {
                0 | 1 => Err(Error::NoRankFormula),
                2 => value(1),
                _ => value(2 * n - 4),
            }
        }
        SemigroupId::Z { k, .. } => {
            if *k != 1 && *k != n {
                return Err(Error::NoRankFormula);
            }
            match n {
                0..=2 => Err(Error::NoRankFormula),
                3 => value(1),
                4 => value(2),
                _ => value(2 * n - 5),
            }
        }
        SemigroupId::R1Star { .. } => {
            if n < 4 {
                return Err(Error::NoRankFormula);
            }
            value(n - 1)
        }
        SemigroupId::Z1Star { .. } => {
            if n < 5 {
                return Err(Error::NoRankFormula);
            }
            value(2 * n - 7)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn t(images: &[Point]) -> Transformation {
        Transformation::new(images.len(), images).unwrap()
    }

    fn strings(store: &ElementStore) -> Vec<String> {
        store.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn enumerates_all_order_preserving_maps() {
        let o3 = enumerate(&SemigroupId::O { n: 3 }).unwrap();
        assert_eq!(
            strings(&o3),
            vec![
                "[1,1,1]", "[1,1,2]", "[1,1,3]", "[1,2,2]", "[1,2,3]", "[1,3,3]", "[2,2,2]",
                "[2,2,3]", "[2,3,3]", "[3,3,3]",
            ]
        );
        assert_eq!(o3.len(), 10);
        // Counted two ways: enumeration vs the closed form.
        for n in 1..=7 {
            let count = enumerate(&SemigroupId::O { n }).unwrap().len();
            assert_eq!(BigUint::from(count), card(&SemigroupId::O { n }).unwrap());
        }
    }

    #[test]
    fn enumerates_right_divisors_of_pi_one() {
        let r1 = enumerate(&SemigroupId::R { n: 3, k: 1 }).unwrap();
        assert_eq!(strings(&r1), vec!["[1,1,1]", "[1,1,2]", "[1,1,3]"]);
        let r2 = enumerate(&SemigroupId::R { n: 3, k: 2 }).unwrap();
        assert_eq!(
            strings(&r2),
            vec!["[1,1,2]", "[1,2,2]", "[2,2,2]", "[2,2,3]", "[2,3,3]"]
        );
    }

    #[test]
    fn interval_image_subsemigroup() {
        let io3 = enumerate(&SemigroupId::Io { n: 3 }).unwrap();
        assert_eq!(io3.len(), 8);
        assert!(!io3.contains(&t(&[1, 1, 3])));
        assert!(!io3.contains(&t(&[1, 3, 3])));
    }

    #[test]
    fn restricted_image_semigroup() {
        let y: BTreeSet<Point> = [1, 2].into_iter().collect();
        let oy = enumerate(&SemigroupId::OY { n: 3, y }).unwrap();
        assert_eq!(strings(&oy), vec!["[1,1,1]", "[1,1,2]", "[1,2,2]", "[2,2,2]"]);
    }

    #[test]
    fn starred_slices() {
        let r1s = enumerate(&SemigroupId::R1Star { n: 3 }).unwrap();
        assert_eq!(strings(&r1s), vec!["[1,1,3]"]);
        let z1s = enumerate(&SemigroupId::Z1Star { n: 4 }).unwrap();
        assert_eq!(strings(&z1s), vec!["[1,1,3,3]"]);
    }

    #[test]
    fn characterized_predicates() {
        assert!(!in_r(&t(&[1, 2, 3]), 2).unwrap());
        assert!(in_l(&t(&[1, 1, 2]), 1).unwrap());
        assert!(in_z(&t(&[1, 1, 2]), 1).unwrap());
        assert!(!in_z(&t(&[1, 1, 3]), 1).unwrap());
        assert!(in_r(&Transformation::constant(3, 1).unwrap(), 1).unwrap());
        assert!(in_l_definitional(&Transformation::constant(3, 1).unwrap(), 1).unwrap());
        assert!(in_r_definitional(&Transformation::constant(3, 1).unwrap(), 1).unwrap());
        // Identity is never a left divisor for interior k: both endpoints
        // stay in the image.
        for n in 3..=5 {
            let id = Transformation::identity(n).unwrap();
            for k in 2..=n - 1 {
                assert!(!in_l_definitional(&id, k).unwrap());
            }
        }
        assert!(in_l(&t(&[2, 1, 3]), 1).is_err());
        assert!(in_l(&t(&[1, 1, 2]), 4).is_err());
    }

    #[test]
    fn characterizations_agree_with_definitions() {
        for n in 1..=4 {
            let o = enumerate(&SemigroupId::O { n }).unwrap();
            for a in &o {
                for k in 1..=n {
                    assert_eq!(
                        in_l(a, k).unwrap(),
                        in_l_definitional(a, k).unwrap(),
                        "L mismatch at n={n} k={k} a={a}"
                    );
                    assert_eq!(
                        in_r(a, k).unwrap(),
                        in_r_definitional(a, k).unwrap(),
                        "R mismatch at n={n} k={k} a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn layers_slice_by_image_size() {
        let r1 = enumerate(&SemigroupId::R { n: 3, k: 1 }).unwrap();
        let f = layer(&r1, 2);
        assert_eq!(strings(&f), vec!["[1,1,2]", "[1,1,3]"]);

        let z1 = enumerate(&SemigroupId::Z { n: 5, k: 1 }).unwrap();
        let top = layer(&z1, 4);
        assert_eq!(top.as_slice(), &[families::tau(5, 4).unwrap()]);

        let o4 = enumerate(&SemigroupId::O { n: 4 }).unwrap();
        let bij = layer(&o4, 4);
        assert_eq!(bij.as_slice(), &[Transformation::identity(4).unwrap()]);
    }

    #[test]
    fn captive_points() {
        let y: BTreeSet<Point> = [1, 2].into_iter().collect();
        assert_eq!(captive_set(&y, 3).unwrap(), [1].into_iter().collect());
        let all: BTreeSet<Point> = (1..=5).collect();
        assert_eq!(captive_set(&all, 5).unwrap(), all);
        let y: BTreeSet<Point> = [2, 3, 4].into_iter().collect();
        assert_eq!(captive_set(&y, 5).unwrap(), [3].into_iter().collect());
        assert!(captive_set(&BTreeSet::new(), 3).is_err());
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, -1), BigUint::from(0u32));
        assert_eq!(binomial(3, 4), BigUint::from(0u32));
        assert_eq!(binomial(-2, 0), BigUint::from(0u32));
        assert_eq!(binomial(15, 7), BigUint::from(6435u32));
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(
            card(&SemigroupId::R { n: 3, k: 2 }).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            card(&SemigroupId::L { n: 4, k: 2 }).unwrap(),
            BigUint::from(25u32)
        );
        assert_eq!(
            card(&SemigroupId::Z { n: 3, k: 1 }).unwrap(),
            BigUint::from(2u32)
        );
        // n = 2: two-sided counts collapse onto the right ones.
        assert_eq!(
            card(&SemigroupId::Z { n: 2, k: 1 }).unwrap(),
            card(&SemigroupId::R { n: 2, k: 1 }).unwrap()
        );
        assert!(card(&SemigroupId::Io { n: 4 }).is_err());
        assert!(card(&SemigroupId::L { n: 2, k: 5 }).is_err());
    }

    #[test]
    fn counts_match_enumeration_for_all_parameters() {
        for n in 2..=6 {
            for k in 1..=n {
                for id in [
                    SemigroupId::L { n, k },
                    SemigroupId::R { n, k },
                    SemigroupId::Z { n, k },
                ] {
                    let enumerated = enumerate(&id).unwrap().len();
                    assert_eq!(
                        BigUint::from(enumerated),
                        card(&id).unwrap(),
                        "count mismatch for {id}"
                    );
                }
            }
        }
    }

    #[test]
    fn intersection_of_end_sets_has_its_own_count() {
        for n in 3..=7i64 {
            let l1 = enumerate(&SemigroupId::L { n: n as usize, k: 1 }).unwrap();
            let both = l1
                .iter()
                .filter(|t| in_l(t, n as usize).unwrap())
                .count();
            assert_eq!(BigUint::from(both), binomial(2 * n - 3, n - 3));
        }
    }

    #[test]
    fn two_sided_set_is_the_intersection() {
        for n in 2..=6 {
            for k in 1..=n {
                let l = enumerate(&SemigroupId::L { n, k }).unwrap();
                let r = enumerate(&SemigroupId::R { n, k }).unwrap();
                let z = enumerate(&SemigroupId::Z { n, k }).unwrap();
                let both: Vec<_> = l.iter().filter(|t| r.contains(t)).cloned().collect();
                assert_eq!(z.as_slice(), both.as_slice());
            }
        }
    }

    #[test]
    fn duality_swaps_the_two_ends() {
        for n in 2..=6 {
            for (a_id, b_id) in [
                (SemigroupId::L { n, k: 1 }, SemigroupId::L { n, k: n }),
                (SemigroupId::R { n, k: 1 }, SemigroupId::R { n, k: n }),
                (SemigroupId::Z { n, k: 1 }, SemigroupId::Z { n, k: n }),
            ] {
                let a = enumerate(&a_id).unwrap();
                let b = enumerate(&b_id).unwrap();
                assert_eq!(a.len(), b.len());
                assert!(a.iter().all(|t| b.contains(&t.dual())));
            }
        }
    }

    #[test]
    fn rank_formulas() {
        assert_eq!(
            rank_formula(&SemigroupId::L { n: 3, k: 1 }).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            rank_formula(&SemigroupId::Z { n: 3, k: 1 }).unwrap(),
            BigUint::from(1u32)
        );
        let y: BTreeSet<Point> = [1, 2].into_iter().collect();
        assert_eq!(
            rank_formula(&SemigroupId::OY { n: 3, y }).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            rank_formula(&SemigroupId::R { n: 2, k: 1 }).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            rank_formula(&SemigroupId::Z { n: 4, k: 4 }).unwrap(),
            BigUint::from(2u32)
        );
        assert!(rank_formula(&SemigroupId::R { n: 4, k: 2 }).is_err());
        assert!(rank_formula(&SemigroupId::Z { n: 2, k: 1 }).is_err());
        let y: BTreeSet<Point> = (1..=4).collect();
        assert!(rank_formula(&SemigroupId::OY { n: 4, y }).is_err());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        assert!(matches!(
            enumerate_with_cap(&SemigroupId::O { n: 9 }, 8),
            Err(Error::AboveEnumerationCap { degree: 9, cap: 8 })
        ));
        assert!(matches!(
            in_l_definitional_with_cap(&Transformation::identity(7).unwrap(), 1, 6),
            Err(Error::AboveDefinitionalCap { degree: 7, cap: 6 })
        ));
    }

    #[test]
    fn store_rejects_mixed_degrees_and_duplicates() {
        let mut store = ElementStore::new(3);
        assert!(store.insert(t(&[1, 1, 2])).unwrap());
        assert!(!store.insert(t(&[1, 1, 2])).unwrap());
        assert!(store.insert(t(&[1, 1])).is_err());
        assert_eq!(store.len(), 1);
        assert_eq!(store.position(&t(&[1, 1, 2])), Some(0));
    }
}
