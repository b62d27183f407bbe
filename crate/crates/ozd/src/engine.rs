//! Generic machinery over finite sets of transformations: composition
//! closure, generating-set tests, undecomposable elements, subsemigroup
//! tests, isomorphism verification, and exact minimal-generating-set
//! search.
//!
//! Everything here is deterministic: closures expand breadth-first in
//! insertion order, candidate orderings are total, and the rank search
//! returns the least witness under that ordering, so results are stable
//! golden values.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::chain::Transformation;
use crate::error::{Error, Result};
use crate::sets::ElementStore;

/// Result of a breadth-first product closure.
///
/// `word_witness[i]` is one factorization of element `i` as indices into the
/// first `generator_count` elements (the deduplicated generators seed the
/// store, so generator `g` is element `g`).
#[derive(Clone, Debug, Serialize)]
pub struct ClosureResult {
    pub elements: ElementStore,
    pub generator_count: usize,
    pub product_count: u64,
    pub word_witness: Option<Vec<Vec<usize>>>,
}

impl ClosureResult {
    /// The recorded factorization of `t` as generator elements, if any.
    pub fn witness_for(&self, t: &Transformation) -> Option<Vec<&Transformation>> {
        let pos = self.elements.position(t)?;
        let words = self.word_witness.as_ref()?;
        Some(
            words[pos]
                .iter()
                .map(|&g| self.elements.get(g).expect("generator index"))
                .collect(),
        )
    }
}

/// Closure of a generator set under composition: seed with the generators
/// and repeatedly right-compose with each generator until stable. Every
/// product of generators is a left-associated chain of right extensions, so
/// this reaches the whole generated subsemigroup.
pub fn closure(generators: &ElementStore) -> Result<ClosureResult> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let degree = generators.degree();
    let mut elements = ElementStore::new(degree);
    let mut words: Vec<Vec<usize>> = Vec::new();
    for (gi, g) in generators.iter().enumerate() {
        if elements.insert(g.clone())? {
            words.push(vec![gi]);
        }
    }
    let generator_count = elements.len();
    let mut product_count = 0u64;
    let mut buf = Vec::with_capacity(degree);
    let mut frontier = 0;
    while frontier < elements.len() {
        for gi in 0..generator_count {
            let (e, g) = (
                elements.get(frontier).expect("frontier element"),
                elements.get(gi).expect("generator"),
            );
            e.compose_into(g, &mut buf);
            product_count += 1;
            if !elements.contains_word(&buf) {
                let mut word = words[frontier].clone();
                word.push(gi);
                elements.insert(Transformation::from_word(buf.clone()))?;
                words.push(word);
            }
        }
        frontier += 1;
    }
    Ok(ClosureResult {
        elements,
        generator_count,
        product_count,
        word_witness: Some(words),
    })
}

/// True when `generators` generate exactly `target`.
///
/// Generation is monoid-aware: when `target` contains the identity
/// transformation of its degree, the identity counts as the empty product
/// and need not be reached by the closure. (The identity is never a
/// composite of non-identity order-preserving maps, so the classical rank
/// results for identity-containing monoids are stated in this convention;
/// identity-free targets are plain subsemigroup generation.)
pub fn is_generating_set(generators: &ElementStore, target: &ElementStore) -> Result<bool> {
    if generators.degree() != target.degree() {
        return Err(Error::DegreeMismatch {
            left: generators.degree(),
            right: target.degree(),
        });
    }
    if !generators.is_subset_of(target) {
        return Ok(false);
    }
    let closed = closure(generators)?.elements;
    if closed.same_elements(target) {
        return Ok(true);
    }
    let identity = Transformation::identity(target.degree())?;
    Ok(target.contains(&identity)
        && !closed.contains(&identity)
        && closed.len() + 1 == target.len()
        && closed.is_subset_of(target))
}

/// A pair whose product escapes the set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureViolation {
    pub left: Transformation,
    pub right: Transformation,
    pub product: Transformation,
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ∘ {} = {} ∉ S", self.left, self.right, self.product)
    }
}

/// First pair (in insertion order) whose product lies outside `s`, if any.
pub fn closure_violation(s: &ElementStore) -> Option<ClosureViolation> {
    let mut buf = Vec::with_capacity(s.degree());
    for a in s {
        for b in s {
            a.compose_into(b, &mut buf);
            if !s.contains_word(&buf) {
                return Some(ClosureViolation {
                    left: a.clone(),
                    right: b.clone(),
                    product: Transformation::from_word(buf.clone()),
                });
            }
        }
    }
    None
}

/// True when `s` is closed under composition.
pub fn is_subsemigroup(s: &ElementStore) -> bool {
    closure_violation(s).is_none()
}

/// The elements of `s` admitting no factorization `s = a∘b` with both
/// factors in `S ∖ {s}`. Undecomposable elements belong to every generating
/// set. Errors when `s` is not closed.
pub fn undecomposables(s: &ElementStore) -> Result<ElementStore> {
    if s.is_empty() {
        return Err(Error::EmptyStore);
    }
    let mut decomposable = vec![false; s.len()];
    let mut buf = Vec::with_capacity(s.degree());
    for (ai, a) in s.iter().enumerate() {
        for (bi, b) in s.iter().enumerate() {
            a.compose_into(b, &mut buf);
            let Some(pi) = s.position_of_word(&buf) else {
                return Err(Error::NotClosed);
            };
            if ai != pi && bi != pi {
                decomposable[pi] = true;
            }
        }
    }
    let mut out = ElementStore::new(s.degree());
    for (i, t) in s.iter().enumerate() {
        if !decomposable[i] {
            out.insert(t.clone())?;
        }
    }
    Ok(out)
}

/// How an element-to-element correspondence failed to be an isomorphism.
#[derive(Clone, Debug, Serialize)]
pub enum IsomorphismFailure {
    MapFailed { on: Transformation, error: String },
    NotInTarget { source: Transformation, image: Transformation },
    NotInjective { first: Transformation, second: Transformation },
    NotSurjective { missed: Transformation },
    NotMultiplicative { left: Transformation, right: Transformation },
}

impl fmt::Display for IsomorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsomorphismFailure::MapFailed { on, error } => {
                write!(f, "map undefined on {on}: {error}")
            }
            IsomorphismFailure::NotInTarget { source, image } => {
                write!(f, "{source} maps to {image} outside the target")
            }
            IsomorphismFailure::NotInjective { first, second } => {
                write!(f, "{first} and {second} share an image")
            }
            IsomorphismFailure::NotSurjective { missed } => {
                write!(f, "{missed} has no preimage")
            }
            IsomorphismFailure::NotMultiplicative { left, right } => {
                write!(f, "map({left} ∘ {right}) ≠ map({left}) ∘ map({right})")
            }
        }
    }
}

/// Outcome of [`verify_isomorphism`], carrying the first counterexample on
/// failure.
#[derive(Clone, Debug, Serialize)]
pub struct IsomorphismReport {
    pub holds: bool,
    pub failure: Option<IsomorphismFailure>,
}

/// Checks that `map` is a bijection from `source` onto `target` respecting
/// composition: `map(a ∘ b) = map(a) ∘ map(b)` for every pair. The two sets
/// may live on chains of different sizes.
pub fn verify_isomorphism<F>(
    map: F,
    source: &ElementStore,
    target: &ElementStore,
) -> IsomorphismReport
where
    F: Fn(&Transformation) -> Result<Transformation>,
{
    let fail = |failure| IsomorphismReport {
        holds: false,
        failure: Some(failure),
    };
    let mut images = Vec::with_capacity(source.len());
    let mut seen: HashMap<Transformation, usize> = HashMap::new();
    for (i, a) in source.iter().enumerate() {
        let image = match map(a) {
            Ok(image) => image,
            Err(e) => {
                return fail(IsomorphismFailure::MapFailed {
                    on: a.clone(),
                    error: e.to_string(),
                })
            }
        };
        if !target.contains(&image) {
            return fail(IsomorphismFailure::NotInTarget {
                source: a.clone(),
                image,
            });
        }
        if let Some(&prev) = seen.get(&image) {
            return fail(IsomorphismFailure::NotInjective {
                first: source.get(prev).expect("seen index").clone(),
                second: a.clone(),
            });
        }
        seen.insert(image.clone(), i);
        images.push(image);
    }
    if images.len() != target.len() {
        let missed = target
            .iter()
            .find(|t| !seen.contains_key(*t))
            .expect("some target element unhit")
            .clone();
        return fail(IsomorphismFailure::NotSurjective { missed });
    }
    for (i, a) in source.iter().enumerate() {
        for (j, b) in source.iter().enumerate() {
            let ab = match a.compose(b) {
                Ok(ab) => ab,
                Err(e) => {
                    return fail(IsomorphismFailure::MapFailed {
                        on: a.clone(),
                        error: e.to_string(),
                    })
                }
            };
            let mapped_ab = match map(&ab) {
                Ok(m) => m,
                Err(e) => {
                    return fail(IsomorphismFailure::MapFailed {
                        on: ab,
                        error: e.to_string(),
                    })
                }
            };
            let product_of_images = match images[i].compose(&images[j]) {
                Ok(p) => p,
                Err(e) => {
                    return fail(IsomorphismFailure::MapFailed {
                        on: images[i].clone(),
                        error: e.to_string(),
                    })
                }
            };
            if mapped_ab != product_of_images {
                return fail(IsomorphismFailure::NotMultiplicative {
                    left: a.clone(),
                    right: b.clone(),
                });
            }
        }
    }
    IsomorphismReport {
        holds: true,
        failure: None,
    }
}

/// Limits for the exact rank search.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    /// Largest semigroup attempted exactly.
    pub max_elements: usize,
    /// Iterative-deepening ceiling on generators beyond the mandatory ones.
    pub max_extra_generators: usize,
    /// Composition budget across the whole search.
    pub max_products: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_elements: 2000,
            max_extra_generators: 8,
            max_products: 100_000_000,
        }
    }
}

/// Outcome of [`rank_exact`].
///
/// When `search_exhaustive` holds, `rank == |witness|` is the exact rank.
/// Otherwise the certificate carries proven bounds: `witness` is a verified
/// generating set realizing `upper_bound`, and `lower_bound` combines the
/// undecomposable count with layer-structure counts and any exhausted search
/// depths.
#[derive(Clone, Debug, Serialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub witness: Vec<Transformation>,
    pub mandatory: Vec<Transformation>,
    pub search_exhaustive: bool,
    pub lower_bound: usize,
    pub upper_bound: usize,
}

/// Candidate ordering for searches and witnesses: descending image size,
/// then lexicographic image word. Elements of maximal image size that are
/// not products must enter every generating set first, so this order fails
/// fast and makes the chosen witness canonical.
fn candidate_order(a: &Transformation, b: &Transformation) -> std::cmp::Ordering {
    b.image_size()
        .cmp(&a.image_size())
        .then_with(|| a.cmp(b))
}

struct Indexed {
    size: usize,
    table: Vec<u16>,
    image_size: Vec<usize>,
    image_id: Vec<u32>,
    kernel_id: Vec<u32>,
}

impl Indexed {
    fn build(s: &ElementStore) -> Result<Self> {
        let size = s.len();
        let mut table = vec![0u16; size * size];
        let mut buf = Vec::with_capacity(s.degree());
        for (ai, a) in s.iter().enumerate() {
            for (bi, b) in s.iter().enumerate() {
                a.compose_into(b, &mut buf);
                let Some(pi) = s.position_of_word(&buf) else {
                    return Err(Error::NotClosed);
                };
                table[ai * size + bi] = pi as u16;
            }
        }
        let mut image_ids: HashMap<Vec<usize>, u32> = HashMap::new();
        let mut kernel_ids: HashMap<Vec<Vec<usize>>, u32> = HashMap::new();
        let mut image_size = Vec::with_capacity(size);
        let mut image_id = Vec::with_capacity(size);
        let mut kernel_id = Vec::with_capacity(size);
        for t in s {
            let image = t.image();
            image_size.push(image.len());
            let next = image_ids.len() as u32;
            image_id.push(*image_ids.entry(image).or_insert(next));
            let kernel: Vec<Vec<usize>> = t.kernel().blocks().to_vec();
            let next = kernel_ids.len() as u32;
            kernel_id.push(*kernel_ids.entry(kernel).or_insert(next));
        }
        Ok(Self {
            size,
            table,
            image_size,
            image_id,
            kernel_id,
        })
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }
}

#[derive(Clone)]
struct BitSet {
    words: Vec<u64>,
    count: usize,
}

impl BitSet {
    fn new(size: usize) -> Self {
        Self {
            words: vec![0; size.div_ceil(64)],
            count: 0,
        }
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        if self.words[w] >> b & 1 == 1 {
            return false;
        }
        self.words[w] |= 1 << b;
        self.count += 1;
        true
    }
}

struct RankSearch<'a> {
    ix: &'a Indexed,
    budget: SearchBudget,
    products: u64,
    aborted: bool,
    /// Position of the identity, covered for free under the monoid
    /// convention.
    free_point: Option<usize>,
    max_image: usize,
    top_layer: Vec<usize>,
    mandatory_top_images: HashSet<u32>,
    mandatory_top_kernels: HashSet<u32>,
    top_image_positions: HashMap<u32, Vec<usize>>,
    top_kernel_positions: HashMap<u32, Vec<usize>>,
    candidates: Vec<usize>,
    mandatory: Vec<usize>,
}

impl<'a> RankSearch<'a> {
    fn charge(&mut self, amount: u64) -> bool {
        self.products += amount;
        if self.products > self.budget.max_products {
            self.aborted = true;
        }
        self.aborted
    }

    /// Closure of `gens` inside the table, by right extension.
    fn close(&mut self, gens: &[usize]) -> BitSet {
        let mut set = BitSet::new(self.ix.size);
        let mut queue = Vec::with_capacity(gens.len());
        for &g in gens {
            if set.insert(g) {
                queue.push(g);
            }
        }
        let mut qi = 0;
        while qi < queue.len() {
            let e = queue[qi];
            qi += 1;
            if self.charge(gens.len() as u64) {
                return set;
            }
            for &g in gens {
                let p = self.ix.mul(e, g);
                if set.insert(p) {
                    queue.push(p);
                }
            }
        }
        set
    }

    /// Closure of `⟨gens⟩ ∪ {new_gen}` given the already-closed `base`.
    fn extend(&mut self, base: &BitSet, gens_with_new: &[usize], new_gen: usize) -> BitSet {
        let mut set = base.clone();
        let mut queue = Vec::new();
        if set.insert(new_gen) {
            queue.push(new_gen);
        }
        // Old elements need only their products with the new generator; they
        // are already closed under the previous ones.
        for e in 0..self.ix.size {
            if base.contains(e) {
                let p = self.ix.mul(e, new_gen);
                if set.insert(p) {
                    queue.push(p);
                }
            }
        }
        if self.charge(base.count as u64) {
            return set;
        }
        let mut qi = 0;
        while qi < queue.len() {
            let e = queue[qi];
            qi += 1;
            if self.charge(gens_with_new.len() as u64) {
                return set;
            }
            for &g in gens_with_new {
                let p = self.ix.mul(e, g);
                if set.insert(p) {
                    queue.push(p);
                }
            }
        }
        set
    }

    /// Images/kernels of still-uncovered maximal-layer elements that no
    /// generator in `p_top_images`/`p_top_kernels` provides. Any product
    /// equal to a maximal-layer element ends (starts) with a generator of
    /// the same image (kernel) in that layer, so each uncovered class costs
    /// one future generator.
    fn needed_top_classes(
        &self,
        closure: &BitSet,
        chosen_top_images: &HashSet<u32>,
        chosen_top_kernels: &HashSet<u32>,
    ) -> (HashSet<u32>, HashSet<u32>) {
        let mut images = HashSet::new();
        let mut kernels = HashSet::new();
        for &e in &self.top_layer {
            if closure.contains(e) {
                continue;
            }
            let img = self.ix.image_id[e];
            if !self.mandatory_top_images.contains(&img) && !chosen_top_images.contains(&img) {
                images.insert(img);
            }
            let ker = self.ix.kernel_id[e];
            if !self.mandatory_top_kernels.contains(&ker) && !chosen_top_kernels.contains(&ker) {
                kernels.insert(ker);
            }
        }
        (images, kernels)
    }

    fn classes_available(
        &self,
        needed: &HashSet<u32>,
        positions: &HashMap<u32, Vec<usize>>,
        from: usize,
    ) -> bool {
        needed.iter().all(|id| {
            positions
                .get(id)
                .is_some_and(|ps| ps.last().is_some_and(|&last| last >= from))
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &mut self,
        depth: usize,
        chosen: &mut Vec<usize>,
        pos: usize,
        closure: &BitSet,
        chosen_top_images: &mut HashSet<u32>,
        chosen_top_kernels: &mut HashSet<u32>,
    ) -> Option<Vec<usize>> {
        if closure.count == self.ix.size {
            return Some(chosen.clone());
        }
        if self.aborted || chosen.len() == depth {
            return None;
        }
        let remaining = depth - chosen.len();
        let (needed_images, needed_kernels) =
            self.needed_top_classes(closure, chosen_top_images, chosen_top_kernels);
        if needed_images.len().max(needed_kernels.len()) > remaining {
            return None;
        }
        if !self.classes_available(&needed_images, &self.top_image_positions, pos)
            || !self.classes_available(&needed_kernels, &self.top_kernel_positions, pos)
        {
            return None;
        }
        if remaining >= 2 {
            // Even taking every remaining candidate must suffice.
            let mut all: Vec<usize> = self.mandatory.clone();
            all.extend_from_slice(chosen);
            all.extend_from_slice(&self.candidates[pos..]);
            let mut everything = self.close(&all);
            if let Some(i) = self.free_point {
                everything.insert(i);
            }
            if everything.count != self.ix.size {
                return None;
            }
        }
        let last_start = self.candidates.len() - remaining;
        for i in pos..=last_start {
            if self.aborted {
                return None;
            }
            let c = self.candidates[i];
            if closure.contains(c) {
                continue;
            }
            let mut gens: Vec<usize> = self.mandatory.clone();
            gens.extend_from_slice(chosen);
            gens.push(c);
            let extended = self.extend(closure, &gens, c);
            chosen.push(c);
            let is_top = self.ix.image_size[c] == self.max_image;
            let (new_img, new_ker) = if is_top {
                (
                    chosen_top_images.insert(self.ix.image_id[c]),
                    chosen_top_kernels.insert(self.ix.kernel_id[c]),
                )
            } else {
                (false, false)
            };
            let found = self.dfs(
                depth,
                chosen,
                i + 1,
                &extended,
                chosen_top_images,
                chosen_top_kernels,
            );
            chosen.pop();
            if new_img {
                chosen_top_images.remove(&self.ix.image_id[c]);
            }
            if new_ker {
                chosen_top_kernels.remove(&self.ix.kernel_id[c]);
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Exact rank of a closed set of transformations by branch-and-bound:
/// undecomposable elements are mandatory in every generating set; if their
/// closure is everything the rank is their count, otherwise the search
/// deepens iteratively on the number of extra generators, drawn in
/// descending-image-size order and pruned against the uncovered maximal layer.
///
/// Like [`is_generating_set`], the search is monoid-aware: when `s` contains
/// the identity transformation, generating sets are not charged for it (the
/// empty product), so the reported rank is the monoid rank. Identity-free
/// sets get the plain subsemigroup rank.
///
/// Within budget the result is exact (`search_exhaustive`); beyond it the
/// certificate degrades to proven bounds with a verified witness for the
/// upper one.
pub fn rank_exact(s: &ElementStore, budget: &SearchBudget) -> Result<RankCertificate> {
    if s.is_empty() {
        return Err(Error::EmptyStore);
    }
    let mandatory_store = undecomposables(s)?; // also checks closedness
    let identity = Transformation::identity(s.degree())?;
    let id_pos = s.position(&identity);
    if s.len() == 1 {
        let only = s.get(0).expect("single element").clone();
        return Ok(RankCertificate {
            rank: 1,
            witness: vec![only.clone()],
            mandatory: vec![only],
            search_exhaustive: true,
            lower_bound: 1,
            upper_bound: 1,
        });
    }
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&a, &b| {
        candidate_order(s.get(a).expect("index"), s.get(b).expect("index"))
    });
    let by_order = |indices: &[usize]| -> Vec<Transformation> {
        let mut v: Vec<&Transformation> =
            indices.iter().map(|&i| s.get(i).expect("index")).collect();
        v.sort_by(|&a, &b| candidate_order(a, b));
        v.into_iter().cloned().collect()
    };

    let mandatory_ix: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&i| Some(i) != id_pos && mandatory_store.contains(s.get(i).expect("index")))
        .collect();

    if s.len() > budget.max_elements {
        return bounds_certificate(s, &mandatory_store, None);
    }

    let ix = Indexed::build(s)?;
    // With a free identity, the layer that constrains generating sets is the
    // maximal one among the remaining elements.
    let max_image = (0..ix.size)
        .filter(|&i| Some(i) != id_pos)
        .map(|i| ix.image_size[i])
        .max()
        .unwrap_or(0);
    let top_layer: Vec<usize> = (0..ix.size)
        .filter(|&i| Some(i) != id_pos && ix.image_size[i] == max_image)
        .collect();
    let mandatory_set: HashSet<usize> = mandatory_ix.iter().copied().collect();
    let mandatory_top_images: HashSet<u32> = top_layer
        .iter()
        .filter(|i| mandatory_set.contains(i))
        .map(|&i| ix.image_id[i])
        .collect();
    let mandatory_top_kernels: HashSet<u32> = top_layer
        .iter()
        .filter(|i| mandatory_set.contains(i))
        .map(|&i| ix.kernel_id[i])
        .collect();

    let mut search = RankSearch {
        ix: &ix,
        budget: *budget,
        products: 0,
        aborted: false,
        free_point: id_pos,
        max_image,
        top_layer,
        mandatory_top_images,
        mandatory_top_kernels,
        top_image_positions: HashMap::new(),
        top_kernel_positions: HashMap::new(),
        candidates: Vec::new(),
        mandatory: mandatory_ix.clone(),
    };

    let mut base = if mandatory_ix.is_empty() {
        BitSet::new(ix.size)
    } else {
        search.close(&mandatory_ix)
    };
    if let Some(i) = id_pos {
        base.insert(i);
    }
    if search.aborted {
        // Too tight to even close the mandatory set; only structural bounds
        // can be claimed.
        return bounds_certificate(s, &mandatory_store, None);
    }
    if base.count == ix.size {
        let witness = by_order(&mandatory_ix);
        return Ok(RankCertificate {
            rank: witness.len(),
            witness: witness.clone(),
            mandatory: witness,
            search_exhaustive: true,
            lower_bound: mandatory_ix.len(),
            upper_bound: mandatory_ix.len(),
        });
    }

    search.candidates = order
        .iter()
        .copied()
        .filter(|&i| !base.contains(i))
        .collect();
    for (pos, &c) in search.candidates.iter().enumerate() {
        if ix.image_size[c] == max_image {
            search
                .top_image_positions
                .entry(ix.image_id[c])
                .or_default()
                .push(pos);
            search
                .top_kernel_positions
                .entry(ix.kernel_id[c])
                .or_default()
                .push(pos);
        }
    }

    let mut exhausted_depth = 0usize;
    let max_depth = budget.max_extra_generators.min(search.candidates.len());
    for depth in 1..=max_depth {
        let mut chosen = Vec::with_capacity(depth);
        let mut imgs = HashSet::new();
        let mut kers = HashSet::new();
        let found = search.dfs(depth, &mut chosen, 0, &base, &mut imgs, &mut kers);
        if let Some(extra) = found {
            let mut witness_ix = mandatory_ix.clone();
            witness_ix.extend(extra);
            let witness = by_order(&witness_ix);
            let rank = witness.len();
            // Every smaller depth was exhausted cleanly, so the rank exceeds
            // |mandatory| + exhausted_depth; equality with the found size
            // certifies minimality even if the budget ran out mid-depth.
            let proven_lower = mandatory_ix.len() + exhausted_depth + 1;
            let exact = proven_lower >= rank;
            return Ok(RankCertificate {
                rank,
                witness,
                mandatory: by_order(&mandatory_ix),
                search_exhaustive: exact,
                lower_bound: proven_lower.min(rank),
                upper_bound: rank,
            });
        }
        if search.aborted {
            break;
        }
        exhausted_depth = depth;
    }

    // Search gave out: report bounds. Depth d exhausted without a witness
    // proves rank > |mandatory| + d, since the mandatory elements sit inside
    // every generating set.
    bounds_certificate(s, &mandatory_store, Some(mandatory_ix.len() + exhausted_depth + 1))
}

fn bounds_certificate(
    s: &ElementStore,
    mandatory_store: &ElementStore,
    search_lower: Option<usize>,
) -> Result<RankCertificate> {
    let identity = Transformation::identity(s.degree())?;
    let has_identity = s.contains(&identity);
    let mut mandatory: Vec<Transformation> = mandatory_store
        .iter()
        .filter(|t| **t != identity)
        .cloned()
        .collect();
    mandatory.sort_by(candidate_order);

    // Structural lower bound from the maximal image layer (identity aside):
    // the last (first) factor of any product equal to a maximal-layer
    // element shares its image (kernel), so a generating set hits every
    // image and kernel class occurring there.
    let max_image = s
        .iter()
        .filter(|t| **t != identity)
        .map(|t| t.image_size())
        .max()
        .unwrap_or(0);
    let mut top_images = HashSet::new();
    let mut top_kernels = HashSet::new();
    let mut mandatory_in_top = 0usize;
    for t in s {
        if *t != identity && t.image_size() == max_image {
            top_images.insert(t.image());
            top_kernels.insert(t.kernel().blocks().to_vec());
            if mandatory_store.contains(t) {
                mandatory_in_top += 1;
            }
        }
    }
    let structural = (mandatory.len() - mandatory_in_top)
        + mandatory_in_top
            .max(top_images.len())
            .max(top_kernels.len());
    let lower_bound = structural.max(search_lower.unwrap_or(0)).max(1);

    // Greedy upper bound: extend the mandatory set in candidate order until
    // it generates.
    let mut order: Vec<&Transformation> = s.iter().collect();
    order.sort_by(|&a, &b| candidate_order(a, b));
    let mut witness = ElementStore::from_elements(s.degree(), mandatory.iter().cloned())?;
    let mut closed = if witness.is_empty() {
        ElementStore::new(s.degree())
    } else {
        closure(&witness)?.elements
    };
    let covered =
        |closed: &ElementStore| closed.len() + usize::from(has_identity && !closed.contains(&identity)) == s.len();
    for t in order {
        if covered(&closed) {
            break;
        }
        if closed.contains(t) || (has_identity && *t == identity) {
            continue;
        }
        witness.insert(t.clone())?;
        closed = closure(&witness)?.elements;
    }
    debug_assert!(covered(&closed));
    let mut witness: Vec<Transformation> = witness.iter().cloned().collect();
    witness.sort_by(candidate_order);
    let upper_bound = witness.len();
    Ok(RankCertificate {
        rank: upper_bound,
        witness,
        mandatory,
        search_exhaustive: false,
        lower_bound: lower_bound.min(upper_bound),
        upper_bound,
    })
}
