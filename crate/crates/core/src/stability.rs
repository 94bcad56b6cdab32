//! Weight data of the torus action and χ-stability of support patterns.
//!
//! The Hilbert–Mumford weight of a point depends only on which coordinates
//! vanish, so stability is decided per [`SupportPattern`]. Two classifiers are
//! provided and deliberately share no decision logic:
//!
//! * [`classify_hm`] works with the weight `μ_χ` directly: instability is a
//!   strict linear feasibility problem, and vanishing weight along a nonzero
//!   one-parameter subgroup is searched over a finite set of critical
//!   directions.
//! * [`classify_cone`] uses cone membership of the character weight `C` in
//!   `σ_{z,w}` and its interior.
//!
//! They agree whenever every nonzero coordinate carries a nonzero weight and
//! `σ_{z,w}` has an apex; outside that regime the `μ_χ` formula no longer
//! detects all unstable points and the two verdicts can differ.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cone::{strictly_separates, Cone2};
use crate::vec2::IntVec2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumError {
    #[error("trivial character: C = (0, 0), but χ is nontrivial is a standing assumption")]
    TrivialCharacter,
    #[error("A_i + B_i is not constant: sums are {}, {}, {}", .0[0], .0[1], .0[2])]
    ConstraintViolated(Box<[IntVec2; 3]>),
}

/// Weights `A₁..A₃` of `z₁..z₃`, `B₁..B₃` of `w₁..w₃`, and the character
/// weight `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDatum {
    a: [IntVec2; 3],
    b: [IntVec2; 3],
    c: IntVec2,
    constraint_waived: bool,
}

impl WeightDatum {
    /// Requires `A₁+B₁ = A₂+B₂ = A₃+B₃` and `C ≠ 0`.
    pub fn new(a: [IntVec2; 3], b: [IntVec2; 3], c: IntVec2) -> Result<Self, DatumError> {
        let sums = [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]];
        if sums[0] != sums[1] || sums[1] != sums[2] {
            return Err(DatumError::ConstraintViolated(Box::new(sums)));
        }
        Self::build(a, b, c, false)
    }

    /// Skips the `A+B` constancy check. The datum remembers that it did.
    pub fn unconstrained(a: [IntVec2; 3], b: [IntVec2; 3], c: IntVec2) -> Result<Self, DatumError> {
        Self::build(a, b, c, true)
    }

    fn build(
        a: [IntVec2; 3],
        b: [IntVec2; 3],
        c: IntVec2,
        constraint_waived: bool,
    ) -> Result<Self, DatumError> {
        if c.is_zero() {
            return Err(DatumError::TrivialCharacter);
        }
        Ok(Self {
            a,
            b,
            c,
            constraint_waived,
        })
    }

    /// The right `H`-action: `A = (1,0)³`, `B = (0,1)³`, `C = (1,1)`.
    pub fn flag() -> Self {
        let a = IntVec2::new(1, 0);
        let b = IntVec2::new(0, 1);
        Self::new(
            [a.clone(), a.clone(), a],
            [b.clone(), b.clone(), b],
            IntVec2::new(1, 1),
        )
        .expect("flag datum is valid")
    }

    pub fn a(&self) -> &[IntVec2; 3] {
        &self.a
    }

    pub fn b(&self) -> &[IntVec2; 3] {
        &self.b
    }

    pub fn c(&self) -> &IntVec2 {
        &self.c
    }

    pub fn constraint_waived(&self) -> bool {
        self.constraint_waived
    }

    /// `A₁, A₂, A₃, B₁, B₂, B₃` in that order.
    pub fn weights(&self) -> [&IntVec2; 6] {
        [
            &self.a[0], &self.a[1], &self.a[2], &self.b[0], &self.b[1], &self.b[2],
        ]
    }

    /// `Σ = cone(A₁, …, B₃)`.
    pub fn sigma_total(&self) -> Cone2 {
        Cone2::new(self.weights().into_iter().cloned().collect())
    }

    /// Every weight and `C` multiplied by `k`.
    pub fn scaled(&self, k: &BigInt) -> Self {
        let s = |v: &IntVec2| k * v;
        Self {
            a: [s(&self.a[0]), s(&self.a[1]), s(&self.a[2])],
            b: [s(&self.b[0]), s(&self.b[1]), s(&self.b[2])],
            c: s(&self.c),
            constraint_waived: self.constraint_waived,
        }
    }
}

impl fmt::Display for WeightDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A = [{}, {}, {}], B = [{}, {}, {}], C = {}",
            self.a[0], self.a[1], self.a[2], self.b[0], self.b[1], self.b[2], self.c
        )?;
        if self.constraint_waived {
            write!(f, " (A+B constraint waived)")?;
        }
        Ok(())
    }
}

/// Which of `z₁..z₃` and `w₁..w₃` are nonzero, as 3-bit masks (bit `i` is
/// index `i+1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPattern {
    z: u8,
    w: u8,
}

impl SupportPattern {
    pub fn from_masks(z: u8, w: u8) -> Self {
        assert!(z < 8 && w < 8, "support masks are 3-bit");
        Self { z, w }
    }

    /// Builds a pattern from 1-based index lists.
    pub fn from_indices(z: &[usize], w: &[usize]) -> Self {
        let mask = |ix: &[usize]| {
            ix.iter().fold(0u8, |m, &i| {
                assert!((1..=3).contains(&i), "support index {i} out of range");
                m | 1 << (i - 1)
            })
        };
        Self {
            z: mask(z),
            w: mask(w),
        }
    }

    /// All 64 patterns, ordered by `(z mask, w mask)`.
    pub fn all() -> impl Iterator<Item = SupportPattern> {
        (0..8u8).flat_map(|z| (0..8u8).map(move |w| SupportPattern { z, w }))
    }

    pub fn z_mask(&self) -> u8 {
        self.z
    }

    pub fn w_mask(&self) -> u8 {
        self.w
    }

    /// 0-based indices of nonzero `z` coordinates.
    pub fn z_indices(&self) -> impl Iterator<Item = usize> {
        let m = self.z;
        (0..3).filter(move |i| m >> i & 1 == 1)
    }

    pub fn w_indices(&self) -> impl Iterator<Item = usize> {
        let m = self.w;
        (0..3).filter(move |i| m >> i & 1 == 1)
    }

    /// Some `(z, w)` with exactly this support satisfies `Σ zᵢwᵢ = 0`.
    ///
    /// With `k` indices in both supports the relation is a sum of `k` nonzero
    /// products, which can vanish unless `k = 1`.
    pub fn is_realizable(&self) -> bool {
        (self.z & self.w).count_ones() != 1
    }

    /// Realizable with `z ≠ 0` and `w ≠ 0`, i.e. attained by points of `M`.
    pub fn is_pattern_of_m(&self) -> bool {
        self.z != 0 && self.w != 0 && self.is_realizable()
    }
}

impl fmt::Display for SupportPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ix: Vec<usize>| {
            ix.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "z{{{}}} w{{{}}}",
            list(self.z_indices().collect()),
            list(self.w_indices().collect())
        )
    }
}

/// The one-parameter subgroup `h ↦ (h^α₁, h^α₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePS {
    pub alpha: IntVec2,
}

impl OnePS {
    pub fn new(alpha: IntVec2) -> Self {
        Self { alpha }
    }

    pub fn is_trivial(&self) -> bool {
        self.alpha.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilityClass {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl StabilityClass {
    pub fn is_semistable(self) -> bool {
        !matches!(self, StabilityClass::Unstable)
    }
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityClass::Stable => "stable",
            StabilityClass::StrictlySemistable => "strictly-semistable",
            StabilityClass::Unstable => "unstable",
        })
    }
}

/// Weights of the nonvanishing coordinates, `A`s first.
pub fn sigma_generators(d: &WeightDatum, s: SupportPattern) -> Vec<IntVec2> {
    s.z_indices()
        .map(|i| d.a[i].clone())
        .chain(s.w_indices().map(|j| d.b[j].clone()))
        .collect()
}

/// `σ_{z,w}`.
pub fn sigma_cone(d: &WeightDatum, s: SupportPattern) -> Cone2 {
    Cone2::new(sigma_generators(d, s))
}

/// The Hilbert–Mumford weight
/// `−min({⟨Aᵢ,α⟩ : zᵢ ≠ 0} ∪ {⟨Bⱼ,α⟩ : wⱼ ≠ 0} ∪ {−⟨C,α⟩})`.
pub fn mu_chi(d: &WeightDatum, s: SupportPattern, l: &OnePS) -> BigInt {
    let alpha = &l.alpha;
    let min = sigma_generators(d, s)
        .iter()
        .map(|g| g.dot(alpha))
        .fold(-d.c.dot(alpha), |m, x| if x < m { x } else { m });
    -min
}

/// Primitive `±90°` rotations of every nonzero vector in `vs`. The set where
/// `μ_χ` attains zero is a closed polyhedral cone of directions, and any
/// nonzero point of its boundary is one of these.
fn critical_directions(vs: &[IntVec2]) -> Vec<OnePS> {
    let mut out: Vec<IntVec2> = Vec::new();
    for v in vs.iter().filter(|v| !v.is_zero()) {
        for cand in [v.perp_ccw().primitive(), v.perp_cw().primitive()] {
            if !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out.into_iter().map(OnePS::new).collect()
}

/// Hilbert–Mumford classification from `μ_χ` alone.
pub fn classify_hm(d: &WeightDatum, s: SupportPattern) -> StabilityClass {
    let mut vs = sigma_generators(d, s);
    vs.push(-&d.c);
    // μ_χ < 0 at α  ⇔  every entry of the min-set is positive at α.
    if strictly_separates(&vs).is_some() {
        return StabilityClass::Unstable;
    }
    let vanishes = critical_directions(&vs)
        .iter()
        .any(|l| mu_chi(d, s, l).is_zero());
    if vanishes {
        StabilityClass::StrictlySemistable
    } else {
        StabilityClass::Stable
    }
}

/// Classification through `C ∈ σ_{z,w}` (semistability) and
/// `C ∈ Int σ_{z,w}` (stability).
///
/// For semistable patterns, a nonzero `α` with `μ_χ = 0` is a nonzero linear
/// form nonnegative on `σ_{z,w}` that vanishes at `C`; one exists exactly when
/// `C` is off the interior (this also covers spans of dimension below two).
pub fn classify_cone(d: &WeightDatum, s: SupportPattern) -> StabilityClass {
    let sigma = sigma_cone(d, s);
    if !sigma.contains(&d.c) {
        StabilityClass::Unstable
    } else if sigma.linear_hull_dim() == 2 && sigma.interior_contains(&d.c) {
        StabilityClass::Stable
    } else {
        StabilityClass::StrictlySemistable
    }
}

/// Whether every generator of `σ_{z,w}` is nonzero and `σ_{z,w}` has an apex,
/// the regime in which `classify_hm` and `classify_cone` must agree.
pub fn in_apex_regime(d: &WeightDatum, s: SupportPattern) -> bool {
    let gens = sigma_generators(d, s);
    gens.iter().all(|v| !v.is_zero()) && Cone2::new(gens).has_apex()
}

/// The interior half of the fan condition: `C ∈ Int cone(Aᵢ, Bⱼ)` for all
/// `i ≠ j`.
pub fn mixed_interior_clause(d: &WeightDatum) -> bool {
    (0..3).all(|i| {
        (0..3)
            .filter(|&j| j != i)
            .all(|j| Cone2::new(vec![d.a[i].clone(), d.b[j].clone()]).interior_contains(&d.c))
    })
}

/// `Σ` has an apex and `C ∈ Int cone(Aᵢ, Bⱼ)` for all `i ≠ j`.
pub fn check_star(d: &WeightDatum) -> bool {
    d.sigma_total().has_apex() && mixed_interior_clause(d)
}

/// For all `i, j` (including `i = j`): `C ∉ cone(Aᵢ, Aⱼ) ∪ cone(Bᵢ, Bⱼ)` and
/// `C ∈ cone(Aᵢ, Bⱼ)`.
pub fn check_star_prime(d: &WeightDatum) -> bool {
    let pair = |u: &IntVec2, v: &IntVec2| Cone2::new(vec![u.clone(), v.clone()]).contains(&d.c);
    (0..3).all(|i| {
        (0..3).all(|j| !pair(&d.a[i], &d.a[j]) && !pair(&d.b[i], &d.b[j]) && pair(&d.a[i], &d.b[j]))
    })
}

/// `R₀^χ = ℂ`: all weights nonzero and `Σ` has an apex.
pub fn r0_is_trivial(d: &WeightDatum) -> bool {
    d.weights().iter().all(|v| !v.is_zero()) && d.sigma_total().has_apex()
}

/// `Aⱼ = wⱼᴸ − w₁ᴿ`, `Bⱼ = −wⱼᴸ + w₃ᴿ`, `C = w₃ᴿ − w₁ᴿ`.
pub fn weights_from_biquotient(
    wl: &[IntVec2; 3],
    wr: &[IntVec2; 3],
) -> Result<WeightDatum, DatumError> {
    let a = [&wl[0] - &wr[0], &wl[1] - &wr[0], &wl[2] - &wr[0]];
    let b = [&wr[2] - &wl[0], &wr[2] - &wl[1], &wr[2] - &wl[2]];
    let c = &wr[2] - &wr[0];
    for j in 0..3 {
        assert_eq!(&a[j] + &b[j], c, "A_j + B_j = w3R - w1R");
    }
    WeightDatum::new(a, b, c)
}
