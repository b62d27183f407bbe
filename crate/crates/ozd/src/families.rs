//! The named transformations and generator families used in the structure
//! theory of the zero-divisor semigroups, plus the witness maps behind the
//! left/right zero-divisor characterizations.
//!
//! Each constructor produces one member of an indexed family of
//! order-preserving maps. Index ranges are validated strictly at the bounds
//! the theory relies on; silently extended ranges are refused. All families
//! are materialized eagerly — their sizes are linear in the degree.
//!
//! Quick reference (all maps fix every point not mentioned):
//!
//! * `β_i` shifts `1..=i` up by one; `γ_i` shifts `i+1..=n` down by one.
//! * `ξ_i` moves `i−1 ↦ i` and `n ↦ n−1`; `ζ_i` moves `1 ↦ 2` and `i+1 ↦ i`.
//! * `λ_i` shifts `2..=i` down by one (so `i` leaves the image).
//! * `δ_i`, `μ_i`, `ρ_i`, `τ_i` are the analogues with `1,2 ↦ 1` that live in
//!   the right/two-sided zero-divisor semigroups of `π_1`.
//! * `θ_i` is the idempotent moving only `i ↦ i+1`.

use std::fmt;
use std::str::FromStr;

use crate::chain::{Point, Transformation};
use crate::error::{Error, Result};

fn check_index(name: &'static str, index: usize, low: usize, high: usize) -> Result<()> {
    // Empty ranges (high < low) always reject.
    if low > high || index < low || index > high {
        return Err(Error::IndexOutOfRange {
            name,
            index,
            low,
            high: high.max(low),
        });
    }
    Ok(())
}

fn check_degree(name: &'static str, degree: usize, min: usize) -> Result<()> {
    if degree < min {
        return Err(Error::BelowThreshold {
            name,
            degree,
            min,
        });
    }
    Ok(())
}

fn build(n: usize, f: impl Fn(usize) -> usize) -> Transformation {
    let word = (1..=n).map(|x| f(x) as u16).collect();
    Transformation::from_word(word)
}

/// `β_i`: `x ↦ x+1` for `x ≤ i`, fixes `x > i` (`1 ≤ i ≤ n−1`).
pub fn beta(n: usize, i: usize) -> Result<Transformation> {
    check_degree("beta", n, 2)?;
    check_index("beta", i, 1, n - 1)?;
    Ok(build(n, |x| if x <= i { x + 1 } else { x }))
}

/// `γ_i`: fixes `x ≤ i`, `x ↦ x−1` for `x > i` (`1 ≤ i ≤ n−1`).
pub fn gamma(n: usize, i: usize) -> Result<Transformation> {
    check_degree("gamma", n, 2)?;
    check_index("gamma", i, 1, n - 1)?;
    Ok(build(n, |x| if x <= i { x } else { x - 1 }))
}

/// `ξ_i`: moves `i−1 ↦ i` and `n ↦ n−1`, fixes the rest (`2 ≤ i ≤ n−1`).
pub fn xi(n: usize, i: usize) -> Result<Transformation> {
    check_degree("xi", n, 3)?;
    check_index("xi", i, 2, n - 1)?;
    Ok(build(n, |x| {
        if x == i - 1 {
            i
        } else if x == n {
            n - 1
        } else {
            x
        }
    }))
}

/// `ζ_i`: moves `1 ↦ 2` and `i+1 ↦ i`, fixes the rest (`2 ≤ i ≤ n−1`).
pub fn zeta(n: usize, i: usize) -> Result<Transformation> {
    check_degree("zeta", n, 3)?;
    check_index("zeta", i, 2, n - 1)?;
    Ok(build(n, |x| {
        if x == 1 {
            2
        } else if x == i + 1 {
            i
        } else {
            x
        }
    }))
}

/// `ζ'_i`: fixes `1`, shifts `2..=i` down by one, sends `i+1 ↦ i−1` and
/// shifts `i+2..=n` down by one (`2 ≤ i ≤ n−2`). Satisfies
/// `ζ_i = ζ'_i ∘ β_{n−1}`.
pub fn zeta_prime(n: usize, i: usize) -> Result<Transformation> {
    check_degree("zeta_prime", n, 4)?;
    check_index("zeta_prime", i, 2, n - 2)?;
    Ok(build(n, |x| {
        if x == 1 {
            1
        } else if x == i + 1 {
            i - 1
        } else {
            x - 1
        }
    }))
}

/// `λ_i`: fixes `1`, shifts `2..=i` down by one, fixes `x > i`
/// (`2 ≤ i ≤ n`). Its image omits exactly `i`.
pub fn lambda(n: usize, i: usize) -> Result<Transformation> {
    check_degree("lambda", n, 2)?;
    check_index("lambda", i, 2, n)?;
    Ok(build(n, |x| {
        if x == 1 {
            1
        } else if x <= i {
            x - 1
        } else {
            x
        }
    }))
}

/// `δ_i`: sends `1,2 ↦ 1` and `i ↦ i+1`, fixes the rest (`3 ≤ i ≤ n−1`).
pub fn delta(n: usize, i: usize) -> Result<Transformation> {
    check_degree("delta", n, 4)?;
    check_index("delta", i, 3, n - 1)?;
    Ok(build(n, |x| {
        if x <= 2 {
            1
        } else if x == i {
            i + 1
        } else {
            x
        }
    }))
}

/// `μ_i`: sends `1,2 ↦ 1`, fixes `3..=i`, shifts `x > i` down by one
/// (`3 ≤ i ≤ n−1`).
pub fn mu(n: usize, i: usize) -> Result<Transformation> {
    check_degree("mu", n, 4)?;
    check_index("mu", i, 3, n - 1)?;
    Ok(build(n, |x| {
        if x <= 2 {
            1
        } else if x <= i {
            x
        } else {
            x - 1
        }
    }))
}

/// `ρ_i`: sends `1,2 ↦ 1`, `i ↦ i+1` and `n ↦ n−1`, fixes the rest
/// (`3 ≤ i ≤ n−2`).
pub fn rho(n: usize, i: usize) -> Result<Transformation> {
    check_degree("rho", n, 5)?;
    check_index("rho", i, 3, n - 2)?;
    Ok(build(n, |x| {
        if x <= 2 {
            1
        } else if x == i {
            i + 1
        } else if x == n {
            n - 1
        } else {
            x
        }
    }))
}

/// `τ_i`: sends `1 ↦ 1`, shifts `2..=i` down by one, fixes `i+1..=n−1` and
/// sends `n ↦ n−1` (`3 ≤ i ≤ n−1`). Note `τ_{n−1} = γ_1`.
pub fn tau(n: usize, i: usize) -> Result<Transformation> {
    check_degree("tau", n, 4)?;
    check_index("tau", i, 3, n - 1)?;
    Ok(build(n, |x| {
        if x == 1 {
            1
        } else if x <= i {
            x - 1
        } else if x == n {
            n - 1
        } else {
            x
        }
    }))
}

/// `θ_i`: the idempotent moving only `i ↦ i+1` (`1 ≤ i ≤ n−1`), so its fix
/// set is the whole chain minus `i`.
pub fn theta(n: usize, i: usize) -> Result<Transformation> {
    check_degree("theta", n, 2)?;
    check_index("theta", i, 1, n - 1)?;
    Ok(build(n, |x| if x == i { i + 1 } else { x }))
}

/// `ρ`: sends `1,2 ↦ 1`, shifts `3..=n−2` up by one and sends
/// `n−1, n ↦ n−1` (`n ≥ 5`). The one extra generator needed on top of the
/// undecomposables of the two-sided zero-divisor semigroup of `π_1`.
pub fn rho_special(n: usize) -> Result<Transformation> {
    check_degree("rho_special", n, 5)?;
    Ok(build(n, |x| {
        if x <= 2 {
            1
        } else if x <= n - 2 {
            x + 1
        } else {
            n - 1
        }
    }))
}

/// The two maps whose product is [`rho_special`], witnessing that `ρ` is
/// itself a product inside the two-sided zero-divisor semigroup of `π_1`
/// (`n ≥ 5`; for `n ≥ 6` both factors differ from `ρ` and have image size
/// `n−3`).
pub fn rho_factors(n: usize) -> Result<(Transformation, Transformation)> {
    check_degree("rho_factors", n, 5)?;
    let a = build(n, |x| {
        if x <= 2 {
            1
        } else if x == 3 {
            3
        } else if x <= n - 2 {
            x + 1
        } else {
            n - 1
        }
    });
    let b = build(n, |x| {
        if x <= 2 {
            1
        } else if x <= 4 {
            4
        } else if x < n {
            x
        } else {
            n - 1
        }
    });
    Ok((a, b))
}

/// The named generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyName {
    /// `{γ_1, β_2, …, β_{n−1}, ξ_3, …, ξ_{n−1}}` — generates `L_2` (n ≥ 4).
    B,
    /// `{δ_i : 3 ≤ i ≤ n−1}`.
    C,
    /// `{λ_i : 2 ≤ i ≤ n}` — the maximal-image layer of `R_1`.
    F,
    /// `{μ_i : 3 ≤ i ≤ n−1}` (n ≥ 5).
    H,
    /// `{ρ_i : 3 ≤ i ≤ n−2}` (n ≥ 5).
    K,
    /// `{τ_i : 3 ≤ i ≤ n−1}` (n ≥ 5).
    M,
    /// `E⁺ = {ξ_i : 2 ≤ i ≤ n−1}`.
    EPlus,
    /// `E⁻ = {ζ_i : 2 ≤ i ≤ n−1}`.
    EMinus,
    /// `G_n = {θ_1, …, θ_{n−1}, λ_n, 1_n}` — a minimal generating set of `O_n`.
    G,
    /// `{γ_i : 1 ≤ i ≤ n−1}` — the maximal-image layer of `L_1`.
    DLayerL1,
    /// `{β_i : 1 ≤ i ≤ n−1}` — the maximal-image layer of `L_n`.
    DLayerLn,
}

impl FamilyName {
    pub const ALL: [FamilyName; 11] = [
        FamilyName::B,
        FamilyName::C,
        FamilyName::F,
        FamilyName::H,
        FamilyName::K,
        FamilyName::M,
        FamilyName::EPlus,
        FamilyName::EMinus,
        FamilyName::G,
        FamilyName::DLayerL1,
        FamilyName::DLayerLn,
    ];

    /// Stable lowercase identifier used by the command line.
    pub fn cli_id(self) -> &'static str {
        match self {
            FamilyName::B => "b",
            FamilyName::C => "c",
            FamilyName::F => "f",
            FamilyName::H => "h",
            FamilyName::K => "k",
            FamilyName::M => "m",
            FamilyName::EPlus => "eplus",
            FamilyName::EMinus => "eminus",
            FamilyName::G => "g",
            FamilyName::DLayerL1 => "dlayer-l1",
            FamilyName::DLayerLn => "dlayer-ln",
        }
    }

    /// Smallest degree at which the family is defined.
    pub fn min_degree(self) -> usize {
        match self {
            FamilyName::B => 4,
            FamilyName::H | FamilyName::K | FamilyName::M => 5,
            FamilyName::G => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyName::B => "B",
            FamilyName::C => "C",
            FamilyName::F => "F",
            FamilyName::H => "H",
            FamilyName::K => "K",
            FamilyName::M => "M",
            FamilyName::EPlus => "E+",
            FamilyName::EMinus => "E-",
            FamilyName::G => "G",
            FamilyName::DLayerL1 => "D(L_1)",
            FamilyName::DLayerLn => "D(L_n)",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyName::ALL
            .iter()
            .copied()
            .find(|name| name.cli_id() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// A named, parameterized set of transformations, in the index order of its
/// definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFamily {
    name: FamilyName,
    degree: usize,
    elements: Vec<Transformation>,
}

impl GeneratorFamily {
    pub fn name(&self) -> FamilyName {
        self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Transformation> {
        self.elements.iter()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.elements.contains(t)
    }
}

/// Materializes a named family at the given degree. Families below their
/// degree threshold are refused rather than truncated.
pub fn family(name: FamilyName, n: usize) -> Result<GeneratorFamily> {
    check_degree("family", n, name.min_degree())?;
    let elements: Vec<Transformation> = match name {
        FamilyName::B => {
            let mut v = vec![gamma(n, 1)?];
            for i in 2..=n - 1 {
                v.push(beta(n, i)?);
            }
            for i in 3..=n - 1 {
                v.push(xi(n, i)?);
            }
            v
        }
        FamilyName::C => (3..=n.saturating_sub(1))
            .map(|i| delta(n, i))
            .collect::<Result<_>>()?,
        FamilyName::F => (2..=n).map(|i| lambda(n, i)).collect::<Result<_>>()?,
        FamilyName::H => (3..=n - 1).map(|i| mu(n, i)).collect::<Result<_>>()?,
        FamilyName::K => (3..=n - 2).map(|i| rho(n, i)).collect::<Result<_>>()?,
        FamilyName::M => (3..=n - 1).map(|i| tau(n, i)).collect::<Result<_>>()?,
        FamilyName::EPlus => (2..=n - 1).map(|i| xi(n, i)).collect::<Result<_>>()?,
        FamilyName::EMinus => (2..=n - 1).map(|i| zeta(n, i)).collect::<Result<_>>()?,
        FamilyName::G => {
            let mut v: Vec<Transformation> =
                (1..=n - 1).map(|i| theta(n, i)).collect::<Result<_>>()?;
            v.push(lambda(n, n)?);
            v.push(Transformation::identity(n)?);
            v
        }
        FamilyName::DLayerL1 => (1..=n - 1).map(|i| gamma(n, i)).collect::<Result<_>>()?,
        FamilyName::DLayerLn => (1..=n - 1).map(|i| beta(n, i)).collect::<Result<_>>()?,
    };
    Ok(GeneratorFamily {
        name,
        degree: n,
        elements,
    })
}

/// `G_n = {θ_1, …, θ_{n−1}, λ_n, 1_n}`.
pub fn family_g(n: usize) -> Result<GeneratorFamily> {
    family(FamilyName::G, n)
}

/// For `α` in the left zero-divisor set of `π_k`, a witness `β ≠ π_k` with
/// `α∘β = π_k`; `None` exactly when `α` is not a left zero-divisor.
///
/// The witness is the canonical one from the structure theory: when `n` is
/// missing from the image, `β` sends `1..=n−1` to `k` and fixes `n`; failing
/// that, when `1` is missing (possible only for `k ≥ 2`), `β` sends `2..=n`
/// to `k` and fixes `1`. The first construction is preferred when both apply,
/// keeping golden outputs deterministic.
pub fn left_witness(a: &Transformation, k: Point) -> Result<Option<Transformation>> {
    if !a.is_order_preserving() {
        return Err(Error::NotOrderPreserving);
    }
    let n = a.degree();
    if k < 1 || k > n {
        return Err(Error::PointOutOfRange { point: k, degree: n });
    }
    let image = a.image();
    let has_one = image[0] == 1;
    let has_n = *image.last().unwrap() == n;
    if k < n && !has_n {
        // β_k = [k, …, k, n]; composing after α lands every point on k.
        Ok(Some(build(n, |x| if x < n { k } else { n })))
    } else if k >= 2 && !has_one {
        // γ_k = [1, k, …, k].
        Ok(Some(build(n, |x| if x == 1 { 1 } else { k })))
    } else {
        Ok(None)
    }
}

/// For `α` in the right zero-divisor set of `π_k`, a witness `γ ≠ π_k` with
/// `γ∘α = π_k`; `None` exactly when `α` is not a right zero-divisor.
///
/// The witness is a constant map `π_i` with `i ≠ k` and `i·α = k`; the least
/// such `i` is chosen.
pub fn right_witness(a: &Transformation, k: Point) -> Result<Option<Transformation>> {
    if !a.is_order_preserving() {
        return Err(Error::NotOrderPreserving);
    }
    let n = a.degree();
    if k < 1 || k > n {
        return Err(Error::PointOutOfRange { point: k, degree: n });
    }
    for i in 1..=n {
        if i != k && a.apply(i) == k {
            return Ok(Some(Transformation::constant(n, i)?));
        }
    }
    Ok(None)
}

/// Relabels the restriction of `a` to the subchain `{3, …, n}` as a
/// transformation of `X_{n−2}`: `x ↦ (x+2)·a − 2`.
///
/// Defined when every point `x ≥ 3` maps to a point `≥ 3`, which holds on
/// the `3α ≥ 3` slices of the zero-divisor semigroups of `π_1`. This is the
/// map realizing their isomorphisms onto smaller-degree semigroups.
pub fn shift_down(a: &Transformation) -> Result<Transformation> {
    let n = a.degree();
    check_degree("shift_down", n, 3)?;
    let mut word = Vec::with_capacity(n - 2);
    for x in 3..=n {
        let v = a.apply(x);
        if v < 3 {
            return Err(Error::InvalidParameter(format!(
                "shift_down: point {x} maps to {v} < 3"
            )));
        }
        word.push((v - 2) as u16);
    }
    Ok(Transformation::from_word(word))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[Point]) -> Transformation {
        Transformation::new(images.len(), images).unwrap()
    }

    #[test]
    fn displayed_maps_match_their_definitions() {
        assert_eq!(gamma(4, 2).unwrap(), t(&[1, 2, 2, 3]));
        assert_eq!(beta(4, 2).unwrap(), t(&[2, 3, 3, 4]));
        assert_eq!(gamma(3, 1).unwrap(), t(&[1, 1, 2]));
        assert_eq!(beta(3, 1).unwrap(), t(&[2, 2, 3]));
        assert_eq!(xi(4, 2).unwrap(), t(&[2, 2, 3, 3]));
        assert_eq!(xi(4, 3).unwrap(), t(&[1, 3, 3, 3]));
        assert_eq!(zeta(4, 2).unwrap(), t(&[2, 2, 2, 4]));
        assert_eq!(zeta(4, 3).unwrap(), t(&[2, 2, 3, 3]));
        assert_eq!(lambda(4, 4).unwrap(), t(&[1, 1, 2, 3]));
        assert_eq!(lambda(4, 2).unwrap(), t(&[1, 1, 3, 4]));
        assert_eq!(delta(5, 3).unwrap(), t(&[1, 1, 4, 4, 5]));
        assert_eq!(delta(6, 4).unwrap(), t(&[1, 1, 3, 5, 5, 6]));
        assert_eq!(delta(4, 3).unwrap(), t(&[1, 1, 4, 4]));
        assert_eq!(mu(5, 3).unwrap(), t(&[1, 1, 3, 3, 4]));
        assert_eq!(mu(5, 4).unwrap(), t(&[1, 1, 3, 4, 4]));
        assert_eq!(tau(5, 3).unwrap(), t(&[1, 1, 2, 4, 4]));
        assert_eq!(tau(5, 4).unwrap(), t(&[1, 1, 2, 3, 4]));
        assert_eq!(rho(5, 3).unwrap(), t(&[1, 1, 4, 4, 4]));
        assert_eq!(rho(6, 4).unwrap(), t(&[1, 1, 3, 5, 5, 5]));
        assert_eq!(theta(4, 2).unwrap(), t(&[1, 3, 3, 4]));
        assert_eq!(rho_special(5).unwrap(), t(&[1, 1, 4, 4, 4]));
        assert_eq!(rho_special(6).unwrap(), t(&[1, 1, 4, 5, 5, 5]));
        assert_eq!(zeta_prime(4, 2).unwrap(), t(&[1, 1, 1, 3]));
    }

    #[test]
    fn index_ranges_are_strict() {
        assert!(gamma(4, 0).is_err());
        assert!(gamma(4, 4).is_err());
        assert!(xi(4, 1).is_err());
        assert!(xi(4, 4).is_err());
        assert!(lambda(4, 1).is_err());
        assert!(lambda(4, 5).is_err());
        assert!(delta(4, 2).is_err());
        assert!(delta(4, 4).is_err());
        assert!(rho(5, 4).is_err());
        assert!(rho(4, 3).is_err());
        assert!(theta(4, 4).is_err());
        assert!(rho_special(4).is_err());
    }

    #[test]
    fn tau_top_index_equals_gamma_one() {
        for n in 4..=9 {
            assert_eq!(tau(n, n - 1).unwrap(), gamma(n, 1).unwrap());
        }
    }

    #[test]
    fn family_sizes_match_index_ranges() {
        for n in 5..=8 {
            assert_eq!(family(FamilyName::B, n).unwrap().len(), 2 * n - 4);
            assert_eq!(family(FamilyName::C, n).unwrap().len(), n - 3);
            assert_eq!(family(FamilyName::F, n).unwrap().len(), n - 1);
            assert_eq!(family(FamilyName::H, n).unwrap().len(), n - 3);
            assert_eq!(family(FamilyName::K, n).unwrap().len(), n - 4);
            assert_eq!(family(FamilyName::M, n).unwrap().len(), n - 3);
            assert_eq!(family(FamilyName::EPlus, n).unwrap().len(), n - 2);
            assert_eq!(family(FamilyName::EMinus, n).unwrap().len(), n - 2);
            assert_eq!(family(FamilyName::G, n).unwrap().len(), n + 1);
            assert_eq!(family(FamilyName::DLayerL1, n).unwrap().len(), n - 1);
            assert_eq!(family(FamilyName::DLayerLn, n).unwrap().len(), n - 1);
        }
        assert!(family(FamilyName::B, 3).is_err());
        assert!(family(FamilyName::H, 4).is_err());
        assert!(family(FamilyName::K, 4).is_err());
        assert!(family(FamilyName::M, 4).is_err());
    }

    #[test]
    fn family_g_instantiation() {
        let g3 = family_g(3).unwrap();
        assert_eq!(
            g3.elements(),
            &[t(&[2, 2, 3]), t(&[1, 3, 3]), t(&[1, 1, 2]), t(&[1, 2, 3])]
        );
        // θ_i are idempotent; so is the identity.
        for n in 2..=6 {
            for i in 1..=n - 1 {
                let th = theta(n, i).unwrap();
                assert_eq!(th.compose(&th).unwrap(), th);
                let mut fix = th.fix_set();
                fix.push(i);
                fix.sort_unstable();
                assert_eq!(fix, (1..=n).collect::<Vec<_>>());
            }
        }
        // λ_n is not idempotent for n ≥ 3.
        let l3 = lambda(3, 3).unwrap();
        assert_ne!(l3.compose(&l3).unwrap(), l3);
    }

    #[test]
    fn family_name_round_trip() {
        for name in FamilyName::ALL {
            assert_eq!(name.cli_id().parse::<FamilyName>().unwrap(), name);
        }
        assert!("q".parse::<FamilyName>().is_err());
    }

    #[test]
    fn left_witness_examples() {
        let a = t(&[1, 1, 2]);
        let w = left_witness(&a, 1).unwrap().unwrap();
        assert_eq!(w, t(&[1, 1, 3]));
        assert_eq!(a.compose(&w).unwrap(), Transformation::constant(3, 1).unwrap());

        // Both endpoints in the image: no witness for interior k.
        let id = Transformation::identity(3).unwrap();
        assert_eq!(left_witness(&id, 2).unwrap(), None);

        let pi1 = Transformation::constant(3, 1).unwrap();
        let w = left_witness(&pi1, 1).unwrap().unwrap();
        assert_ne!(w, pi1);
        assert_eq!(pi1.compose(&w).unwrap(), pi1);

        // Interior k prefers the construction fixing n.
        let a = t(&[1, 1, 2, 3]);
        assert_eq!(left_witness(&a, 2).unwrap().unwrap(), t(&[2, 2, 2, 4]));
        // When only 1 is missing, the other construction applies.
        let b = t(&[2, 3, 4, 4]);
        assert_eq!(left_witness(&b, 2).unwrap().unwrap(), t(&[1, 2, 2, 2]));

        assert!(left_witness(&t(&[2, 1, 3]), 1).is_err());
        assert!(left_witness(&a, 5).is_err());
    }

    #[test]
    fn right_witness_examples() {
        let a = t(&[1, 1, 2]);
        let w = right_witness(&a, 1).unwrap().unwrap();
        assert_eq!(w, t(&[2, 2, 2]));
        assert_eq!(w.compose(&a).unwrap(), Transformation::constant(3, 1).unwrap());

        // kα⁻¹ = {k}: not a right zero-divisor.
        assert_eq!(right_witness(&Transformation::identity(3).unwrap(), 2).unwrap(), None);

        let pi3 = Transformation::constant(4, 3).unwrap();
        assert_eq!(
            right_witness(&pi3, 3).unwrap().unwrap(),
            Transformation::constant(4, 1).unwrap()
        );
    }

    #[test]
    fn shift_down_relabels_the_tail() {
        // δ_i restricted to {3..n} is the idempotent θ_{i−2} two degrees down.
        for n in 5..=8 {
            for i in 3..=n - 1 {
                assert_eq!(
                    shift_down(&delta(n, i).unwrap()).unwrap(),
                    theta(n - 2, i - 2).unwrap()
                );
            }
            assert_eq!(
                shift_down(&lambda(n, 2).unwrap()).unwrap(),
                Transformation::identity(n - 2).unwrap()
            );
            // μ_i and ρ_i shift to γ_{i−2} and ξ_{i−1}.
            for i in 3..=n - 1 {
                assert_eq!(
                    shift_down(&mu(n, i).unwrap()).unwrap(),
                    gamma(n - 2, i - 2).unwrap()
                );
            }
            for i in 3..=n - 2 {
                assert_eq!(
                    shift_down(&rho(n, i).unwrap()).unwrap(),
                    xi(n - 2, i - 1).unwrap()
                );
            }
        }
        // Maps sending a tail point below 3 are rejected.
        assert!(shift_down(&t(&[1, 1, 2, 4])).is_err());
    }

    #[test]
    fn rho_factors_multiply_to_rho() {
        for n in 5..=9 {
            let (a, b) = rho_factors(n).unwrap();
            assert_eq!(a.compose(&b).unwrap(), rho_special(n).unwrap());
        }
        let (a, b) = rho_factors(6).unwrap();
        assert_eq!(a, t(&[1, 1, 3, 5, 5, 5]));
        assert_eq!(b, t(&[1, 1, 4, 4, 5, 5]));
        assert_eq!(a.image_size(), 3);
        assert_eq!(b.image_size(), 3);
    }
}
