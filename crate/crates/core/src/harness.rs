//! Randomized and exhaustive cross-checks between independent routes, plus a
//! floating-point moment map evaluator.
//!
//! Every trial draws from its own ChaCha stream selected by
//! `(seed, trial index)`, so reports are reproducible and trials can run in
//! parallel. Floating point appears only in [`moment_map`] and its checks.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cone::Cone2;
use crate::graded::{dim_graded_piece, find_invariant_monomial};
use crate::stability::{
    check_star, check_star_prime, classify_cone, classify_hm, in_apex_regime, r0_is_trivial,
    StabilityClass, SupportPattern, WeightDatum,
};
use crate::vec2::IntVec2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    /// Weights are drawn from `[−bound, bound]²`.
    pub coord_bound: i64,
    /// Draw `B` as `S − A` for a common sum `S`.
    pub enforce_constraint: bool,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 1000,
            coord_bound: 20,
            enforce_constraint: true,
        }
    }
}

impl TrialConfig {
    pub fn rng_for(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    /// Cases where the property was actually exercised.
    pub checked: usize,
    pub disagreements: usize,
    pub first_failure: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.disagreements == 0
    }

    fn from_failures(
        suite: &str,
        cfg: &TrialConfig,
        checked: usize,
        failures: Vec<(usize, String)>,
    ) -> Self {
        Report {
            suite: suite.to_string(),
            seed: cfg.seed,
            trials: cfg.trials,
            checked,
            disagreements: failures.len(),
            first_failure: failures
                .into_iter()
                .min_by_key(|(i, _)| *i)
                .map(|(i, s)| format!("trial {i}: {s}")),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} trials, {} checked, {} disagreements, seed {})",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.trials,
            self.checked,
            self.disagreements,
            self.seed
        )?;
        if let Some(first) = &self.first_failure {
            write!(f, "\n  first failure: {first}")?;
        }
        Ok(())
    }
}

fn random_vec(rng: &mut impl Rng, bound: i64) -> IntVec2 {
    IntVec2::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// A random datum with `C ≠ 0`; `B = S − A` when the constraint is enforced.
pub fn random_datum(cfg: &TrialConfig, rng: &mut impl Rng) -> WeightDatum {
    let bound = cfg.coord_bound;
    let a = [
        random_vec(rng, bound),
        random_vec(rng, bound),
        random_vec(rng, bound),
    ];
    let b = if cfg.enforce_constraint {
        let s = random_vec(rng, bound);
        [&s - &a[0], &s - &a[1], &s - &a[2]]
    } else {
        [
            random_vec(rng, bound),
            random_vec(rng, bound),
            random_vec(rng, bound),
        ]
    };
    let c = loop {
        let c = random_vec(rng, bound);
        if !c.is_zero() {
            break c;
        }
    };
    if cfg.enforce_constraint {
        WeightDatum::new(a, b, c).expect("constructed to satisfy the constraint")
    } else {
        WeightDatum::unconstrained(a, b, c).expect("C is nonzero")
    }
}

fn run_trials<F>(suite: &str, cfg: &TrialConfig, check: F) -> Report
where
    F: Fn(usize, &mut ChaCha8Rng) -> (usize, Option<String>) + Sync,
{
    let results: Vec<(usize, Option<String>)> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| check(i, &mut cfg.rng_for(i)))
        .collect();
    let checked = results.iter().map(|(c, _)| c).sum();
    let failures = results
        .into_iter()
        .enumerate()
        .filter_map(|(i, (_, f))| f.map(|f| (i, f)))
        .collect();
    Report::from_failures(suite, cfg, checked, failures)
}

/// Pattern-level reading of `M = M̄^{χ-s} = M̄^{χ-ss}` through the
/// Hilbert–Mumford classifier: every realizable pattern of `M` is stable and
/// every realizable semistable pattern belongs to `M`.
pub fn stable_locus_is_m(d: &WeightDatum) -> bool {
    SupportPattern::all()
        .filter(|s| s.is_realizable())
        .all(|s| {
            let class = classify_hm(d, s);
            if s.is_pattern_of_m() {
                class == StabilityClass::Stable
            } else {
                !class.is_semistable()
            }
        })
}

/// `(check_star, stable_locus_is_m)` for one datum.
pub fn main_theorem_sides(d: &WeightDatum) -> (bool, bool) {
    (check_star(d), stable_locus_is_m(d))
}

pub fn verify_main_theorem(cfg: &TrialConfig) -> Report {
    run_trials("main-theorem", cfg, |_, rng| {
        let d = random_datum(cfg, rng);
        let (lhs, rhs) = main_theorem_sides(&d);
        let failure =
            (lhs != rhs).then(|| format!("star = {lhs}, stable locus = M is {rhs} for {d}"));
        (1, failure)
    })
}

pub fn verify_star_equivalence(cfg: &TrialConfig) -> Report {
    run_trials("star-equivalence", cfg, |_, rng| {
        let d = random_datum(cfg, rng);
        let (star, prime) = (check_star(&d), check_star_prime(&d));
        let failure = (star != prime).then(|| format!("star = {star}, star' = {prime} for {d}"));
        (1, failure)
    })
}

/// Patterns on which the two stability classifiers differ.
pub fn classifier_disagreements(
    d: &WeightDatum,
) -> Vec<(SupportPattern, StabilityClass, StabilityClass)> {
    SupportPattern::all()
        .filter_map(|s| {
            let (hm, cone) = (classify_hm(d, s), classify_cone(d, s));
            (hm != cone).then_some((s, hm, cone))
        })
        .collect()
}

/// `classify_hm = classify_cone` on all 64 patterns of every trial datum.
/// `checked` counts pattern evaluations; `disagreements` counts data.
pub fn verify_oracle_equivalence(cfg: &TrialConfig) -> Report {
    run_trials("oracle-equivalence", cfg, |_, rng| {
        let d = random_datum(cfg, rng);
        let diffs = classifier_disagreements(&d);
        let failure = diffs.first().map(|(s, hm, cone)| {
            format!(
                "{} of 64 patterns differ, first {s}: hm = {hm}, cone = {cone} for {d}",
                diffs.len()
            )
        });
        (64, failure)
    })
}

/// The same comparison restricted to patterns inside the apex regime, where
/// any disagreement is a defect. `checked` counts in-regime evaluations.
pub fn verify_oracle_equivalence_in_regime(cfg: &TrialConfig) -> Report {
    run_trials("oracle-equivalence-in-regime", cfg, |_, rng| {
        let d = random_datum(cfg, rng);
        let regime: Vec<SupportPattern> = SupportPattern::all()
            .filter(|&s| in_apex_regime(&d, s))
            .collect();
        let failure = regime.iter().find_map(|&s| {
            let (hm, cone) = (classify_hm(&d, s), classify_cone(&d, s));
            (hm != cone).then(|| format!("{s}: hm = {hm}, cone = {cone} for {d}"))
        });
        (regime.len(), failure)
    })
}

/// If `C ∈ cone(A, B)` but `C` is on neither ray, then `C ∈ Int cone(A, B)`.
/// Returns `None` when the hypothesis fails, else whether the conclusion held.
pub fn intcone_case(a: &IntVec2, b: &IntVec2, c: &IntVec2) -> Option<bool> {
    let pair = Cone2::new(vec![a.clone(), b.clone()]);
    let hyp = pair.contains(c)
        && !Cone2::new(vec![a.clone()]).contains(c)
        && !Cone2::new(vec![b.clone()]).contains(c);
    hyp.then(|| pair.interior_contains(c))
}

pub fn verify_intcone(cfg: &TrialConfig) -> Report {
    run_trials("intcone", cfg, |_, rng| {
        let bound = cfg.coord_bound;
        let (a, b, c) = (
            random_vec(rng, bound),
            random_vec(rng, bound),
            random_vec(rng, bound),
        );
        match intcone_case(&a, &b, &c) {
            None => (0, None),
            Some(true) => (1, None),
            Some(false) => (1, Some(format!("A = {a}, B = {b}, C = {c}"))),
        }
    })
}

/// Every triple `A, B, C ∈ [−bound, bound]²`.
pub fn verify_intcone_exhaustive(bound: i64) -> Report {
    let points: Vec<IntVec2> = (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| IntVec2::new(x, y)))
        .collect();
    let per_a: Vec<(usize, Vec<String>)> = points
        .par_iter()
        .map(|a| {
            let mut checked = 0;
            let mut bad = Vec::new();
            for b in &points {
                for c in &points {
                    match intcone_case(a, b, c) {
                        None => {}
                        Some(ok) => {
                            checked += 1;
                            if !ok {
                                bad.push(format!("A = {a}, B = {b}, C = {c}"));
                            }
                        }
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    let n = points.len();
    let checked = per_a.iter().map(|(c, _)| c).sum();
    let mut failures: Vec<String> = per_a.into_iter().flat_map(|(_, b)| b).collect();
    let disagreements = failures.len();
    Report {
        suite: format!("intcone-exhaustive[{bound}]"),
        seed: 0,
        trials: n * n * n,
        checked,
        disagreements,
        first_failure: if failures.is_empty() {
            None
        } else {
            Some(failures.swap_remove(0))
        },
    }
}

/// Primitive `α ≠ 0` with `|α|∞ ≤ bound`.
pub fn primitive_directions(bound: i64) -> Vec<IntVec2> {
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if (x, y) != (0, 0) && x.gcd(&y) == 1 {
                out.push(IntVec2::new(x, y));
            }
        }
    }
    out
}

/// What a brute-force sweep of `μ_χ` over `alphas` observed for each pattern.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepWitness {
    pub negative: bool,
    pub zero: bool,
}

/// Evaluates `μ_χ` for all 64 patterns at every `α` in `alphas`.
///
/// The seven pairings are computed once per `α`; minima over the eight `z`
/// subsets and eight `w` subsets are then combined per pattern.
pub fn sweep_mu(d: &WeightDatum, alphas: &[IntVec2]) -> [SweepWitness; 64] {
    let mut out = [SweepWitness::default(); 64];
    let ws = d.weights();
    for alpha in alphas {
        let dots: Vec<BigInt> = ws.iter().map(|w| w.dot(alpha)).collect();
        let neg_c = -d.c().dot(alpha);
        let subset_min = |offset: usize, mask: u8| -> Option<&BigInt> {
            (0..3)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &dots[offset + i])
                .min()
        };
        let zmin: Vec<Option<&BigInt>> = (0..8).map(|m| subset_min(0, m)).collect();
        let wmin: Vec<Option<&BigInt>> = (0..8).map(|m| subset_min(3, m)).collect();
        for s in SupportPattern::all() {
            let mut m = &neg_c;
            for cand in [zmin[s.z_mask() as usize], wmin[s.w_mask() as usize]]
                .into_iter()
                .flatten()
            {
                if cand < m {
                    m = cand;
                }
            }
            let slot = &mut out[(s.z_mask() as usize) << 3 | s.w_mask() as usize];
            if m.is_positive() {
                slot.negative = true;
            } else if m.is_zero() {
                slot.zero = true;
            }
        }
    }
    out
}

/// Contradictions between [`classify_hm`] and a sweep over `alphas`: a
/// negative weight seen while the verdict is not unstable, or a vanishing
/// weight at `α ≠ 0` while the verdict is stable.
pub fn hm_sweep_contradictions(d: &WeightDatum, alphas: &[IntVec2]) -> Vec<String> {
    let sweep = sweep_mu(d, alphas);
    SupportPattern::all()
        .filter_map(|s| {
            let seen = sweep[(s.z_mask() as usize) << 3 | s.w_mask() as usize];
            let class = classify_hm(d, s);
            let bad = (seen.negative && class != StabilityClass::Unstable)
                || (seen.zero && class == StabilityClass::Stable);
            bad.then(|| format!("{s}: classifier says {class}, sweep saw {seen:?}"))
        })
        .collect()
}

pub fn verify_hm_reduction(cfg: &TrialConfig, sweep_bound: i64) -> Report {
    let alphas = primitive_directions(sweep_bound);
    run_trials("hm-reduction", cfg, |_, rng| {
        let d = random_datum(cfg, rng);
        let bad = hm_sweep_contradictions(&d, &alphas);
        let failure = bad.first().map(|b| format!("{b} for {d}"));
        (64, failure)
    })
}

fn force_degenerate(d: WeightDatum, trial: usize, rng: &mut impl Rng) -> WeightDatum {
    let mut a = d.a().clone();
    let mut b = d.b().clone();
    let c = d.c().clone();
    let i = rng.gen_range(0..3);
    let j = (i + rng.gen_range(1..3)) % 3;
    let constrained = !d.constraint_waived();
    let s = &a[0] + &b[0];
    match trial % 3 {
        1 => {
            a[i] = IntVec2::zero();
            if constrained {
                b[i] = s;
            }
        }
        2 => {
            b[j] = -&a[i];
            if constrained {
                a[j] = &s + &a[i];
            }
        }
        _ => return d,
    }
    if constrained {
        WeightDatum::new(a, b, c).expect("degeneration keeps A+B constant")
    } else {
        WeightDatum::unconstrained(a, b, c).expect("C is nonzero")
    }
}

/// `r0_is_trivial ⇔` no invariant monomial. Two thirds of the trials are
/// forced degenerate (some `Aᵢ = 0`, or some `Bⱼ = −Aᵢ`). Witnesses are
/// checked to have weight zero, and trivial cases to have `dim R^χ_0 = 1`.
pub fn verify_r0(cfg: &TrialConfig) -> Report {
    run_trials("r0", cfg, |i, rng| {
        let d = force_degenerate(random_datum(cfg, rng), i, rng);
        let trivial = r0_is_trivial(&d);
        let witness = find_invariant_monomial(&d);
        let failure = match (&witness, trivial) {
            (Some(m), true) => Some(format!("r0 trivial but invariant {m} for {d}")),
            (None, false) => Some(format!("r0 nontrivial but no invariant monomial for {d}")),
            (Some(m), false) if m.is_constant() || !m.weight(&d).is_zero() => {
                Some(format!("bad witness {m} for {d}"))
            }
            (None, true) if dim_graded_piece(&d, 0) != Ok(1) => {
                Some(format!("dim R_0 != 1 for {d}"))
            }
            _ => None,
        };
        (1, failure)
    })
}

/// Three complex coordinates in double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexVec3(pub [Complex64; 3]);

impl ComplexVec3 {
    pub fn zero() -> Self {
        ComplexVec3([Complex64::new(0.0, 0.0); 3])
    }

    pub fn real(x: [f64; 3]) -> Self {
        ComplexVec3(x.map(|r| Complex64::new(r, 0.0)))
    }

    pub fn scale(&self, t: f64) -> Self {
        ComplexVec3(self.0.map(|z| z * t))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentValue {
    pub phi: (f64, f64),
    /// `|Σ zᵢwᵢ|`; zero exactly on `M̄`.
    pub residual: f64,
}

/// `Φ(z, w) = Σⱼ (Aⱼ|zⱼ|² + Bⱼ|wⱼ|²)`.
pub fn moment_map(d: &WeightDatum, z: &ComplexVec3, w: &ComplexVec3) -> MomentValue {
    let mut phi = (0.0, 0.0);
    for j in 0..3 {
        let (ax, ay) = d.a()[j].to_f64();
        let (bx, by) = d.b()[j].to_f64();
        let (nz, nw) = (z.0[j].norm_sqr(), w.0[j].norm_sqr());
        phi.0 += ax * nz + bx * nw;
        phi.1 += ay * nz + by * nw;
    }
    let rel: Complex64 = (0..3).map(|j| z.0[j] * w.0[j]).sum();
    MomentValue {
        phi,
        residual: rel.norm(),
    }
}

/// `Σⱼ (|Aⱼ|∞|zⱼ|² + |Bⱼ|∞|wⱼ|²)`, the scale against which moment map errors
/// are measured.
pub fn moment_scale(d: &WeightDatum, z: &ComplexVec3, w: &ComplexVec3) -> f64 {
    (0..3)
        .map(|j| {
            let a = d.a()[j].to_f64();
            let b = d.b()[j].to_f64();
            a.0.abs().max(a.1.abs()) * z.0[j].norm_sqr()
                + b.0.abs().max(b.1.abs()) * w.0[j].norm_sqr()
        })
        .sum()
}

/// The compact torus element `g = (e^{iθ₁}, e^{iθ₂})` acting by
/// `zᵢ ↦ g^{Aᵢ}zᵢ`, `wⱼ ↦ g^{Bⱼ}wⱼ`.
pub fn act_compact(
    d: &WeightDatum,
    theta: (f64, f64),
    z: &ComplexVec3,
    w: &ComplexVec3,
) -> (ComplexVec3, ComplexVec3) {
    let phase = |v: &IntVec2| {
        let (x, y) = v.to_f64();
        Complex64::from_polar(1.0, x * theta.0 + y * theta.1)
    };
    let mut z2 = *z;
    let mut w2 = *w;
    for j in 0..3 {
        z2.0[j] *= phase(&d.a()[j]);
        w2.0[j] *= phase(&d.b()[j]);
    }
    (z2, w2)
}

/// Largest relative errors seen for homogeneity and torus invariance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentCheck {
    pub points: usize,
    pub homogeneity: f64,
    pub invariance: f64,
}

fn random_complex3(rng: &mut impl Rng) -> ComplexVec3 {
    ComplexVec3([(); 3].map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))))
}

/// Evaluates `Φ(λz, λw) = λ²Φ(z, w)` and `Φ(g·(z,w)) = Φ(z,w)` at one random
/// point per trial.
pub fn check_moment_map(cfg: &TrialConfig) -> MomentCheck {
    let errs: Vec<(f64, f64)> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = cfg.rng_for(i);
            let d = random_datum(cfg, &mut rng);
            let z = random_complex3(&mut rng);
            let w = random_complex3(&mut rng);
            let lambda: f64 = rng.gen_range(-3.0..3.0);
            let theta = (
                rng.gen_range(0.0..std::f64::consts::TAU),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            let base = moment_map(&d, &z, &w);
            let scale = moment_scale(&d, &z, &w).max(f64::MIN_POSITIVE);
            let rel =
                |p: (f64, f64), q: (f64, f64), s: f64| (p.0 - q.0).abs().max((p.1 - q.1).abs()) / s;

            let scaled = moment_map(&d, &z.scale(lambda), &w.scale(lambda));
            let l2 = lambda * lambda;
            let homog = rel(
                scaled.phi,
                (l2 * base.phi.0, l2 * base.phi.1),
                (l2 * scale).max(f64::MIN_POSITIVE),
            );

            let (gz, gw) = act_compact(&d, theta, &z, &w);
            let moved = moment_map(&d, &gz, &gw);
            (homog, rel(moved.phi, base.phi, scale))
        })
        .collect();
    MomentCheck {
        points: cfg.trials,
        homogeneity: errs.iter().map(|e| e.0).fold(0.0, f64::max),
        invariance: errs.iter().map(|e| e.1).fold(0.0, f64::max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec2::v;

    #[test]
    fn random_datum_is_reproducible() {
        let cfg = TrialConfig {
            seed: 1,
            ..Default::default()
        };
        let a = random_datum(&cfg, &mut cfg.rng_for(0));
        let b = random_datum(&cfg, &mut cfg.rng_for(0));
        assert_eq!(a, b);
        assert_ne!(a, random_datum(&cfg, &mut cfg.rng_for(1)));
    }

    #[test]
    fn random_datum_invariants() {
        for enforce in [true, false] {
            let cfg = TrialConfig {
                seed: 3,
                coord_bound: 1,
                enforce_constraint: enforce,
                ..Default::default()
            };
            for i in 0..500 {
                let d = random_datum(&cfg, &mut cfg.rng_for(i));
                assert!(!d.c().is_zero());
                let s = &d.a()[0] + &d.b()[0];
                if enforce {
                    assert_eq!(&d.a()[1] + &d.b()[1], s);
                    assert_eq!(&d.a()[2] + &d.b()[2], s);
                }
            }
        }
    }

    #[test]
    fn main_theorem_single_data() {
        assert_eq!(main_theorem_sides(&WeightDatum::flag()), (true, true));
        // B₁ = −A₁ with A+B constant forces S = 0.
        let a = [v(1, 0), v(2, 1), v(-1, 3)];
        let b = [v(-1, 0), v(-2, -1), v(1, -3)];
        let d = WeightDatum::new(a, b, v(1, 1)).unwrap();
        assert_eq!(main_theorem_sides(&d), (false, false));
    }

    #[test]
    fn intcone_single_cases() {
        assert_eq!(intcone_case(&v(1, 0), &v(0, 1), &v(1, 1)), Some(true));
        assert_eq!(intcone_case(&v(1, 0), &v(2, 0), &v(3, 0)), None);
    }

    #[test]
    fn primitive_directions_exclude_zero() {
        let dirs = primitive_directions(1);
        assert_eq!(dirs.len(), 8);
        assert!(!dirs.contains(&v(0, 0)));
        assert!(!primitive_directions(2).contains(&v(2, 2)));
    }

    #[test]
    fn sweep_on_flag_datum() {
        let d = WeightDatum::flag();
        assert!(hm_sweep_contradictions(&d, &primitive_directions(50)).is_empty());
    }

    #[test]
    fn sweep_sees_zero_perpendicular_to_c() {
        // σ = cone{C}
        let d = WeightDatum::unconstrained(
            [v(1, 1), v(1, 0), v(2, 0)],
            [v(0, 1), v(0, 2), v(-1, 3)],
            v(1, 1),
        )
        .unwrap();
        let s = SupportPattern::from_indices(&[1], &[]);
        let sweep = sweep_mu(&d, &primitive_directions(5));
        let seen = sweep[(s.z_mask() as usize) << 3 | s.w_mask() as usize];
        assert!(seen.zero && !seen.negative);
        assert_ne!(classify_hm(&d, s), StabilityClass::Stable);
    }

    #[test]
    fn moment_examples() {
        let f = WeightDatum::flag();
        let z = ComplexVec3::real([1.0, 0.0, 0.0]);
        let w = ComplexVec3::real([0.0, 1.0, 0.0]);
        let m = moment_map(&f, &z, &w);
        assert_eq!(m.phi, (1.0, 1.0));
        assert_eq!(m.residual, 0.0);

        let zero = moment_map(&f, &ComplexVec3::zero(), &ComplexVec3::zero());
        assert_eq!(zero.phi, (0.0, 0.0));

        let off = moment_map(&f, &z, &ComplexVec3::real([1.0, 0.0, 0.0]));
        assert_eq!(off.residual, 1.0);
    }

    #[test]
    fn report_keeps_first_failure() {
        let cfg = TrialConfig::default();
        let r = Report::from_failures("x", &cfg, 5, vec![(3, "b".into()), (1, "a".into())]);
        assert_eq!(r.disagreements, 2);
        assert_eq!(r.first_failure.as_deref(), Some("trial 1: a"));
        assert!(!r.passed());
    }
}
