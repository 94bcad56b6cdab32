//! Graded pieces of `R^χ` for `R = ℂ[z₁,z₂,z₃,w₁,w₂,w₃]/(Σ zᵢwᵢ)`.
//!
//! The torus acts diagonally on monomials, so every graded piece `R^χ_n` is
//! spanned by the images of monomials of weight `n·C`. For a basis of `R` we
//! use the lexicographic order `z₁ > w₁ > z₂ > z₃ > w₂ > w₃`: the relation has
//! leading term `z₁w₁`, a single generator is a Gröbner basis of its ideal, and
//! the standard monomials are those not divisible by `z₁w₁`.

use std::fmt;

use num_bigint::{BigInt, BigUint, ToBigInt};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cone::strictly_separates;
use crate::stability::{r0_is_trivial, WeightDatum};
use crate::vec2::IntVec2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("R_0 is not C: graded pieces are infinite-dimensional (invariant monomial: {})",
        .witness.as_ref().map(ToString::to_string).unwrap_or_else(|| "none found".into()))]
    NontrivialDegreeZero { witness: Option<Box<Monomial>> },
    #[error("exponent bound {0} is too large to enumerate")]
    ExponentBoundTooLarge(BigInt),
}

/// `z₁^k₁ z₂^k₂ z₃^k₃ w₁^l₁ w₂^l₂ w₃^l₃`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub k: [BigUint; 3],
    pub l: [BigUint; 3],
}

impl Monomial {
    pub fn from_exponents(k: [u64; 3], l: [u64; 3]) -> Self {
        Self {
            k: k.map(BigUint::from),
            l: l.map(BigUint::from),
        }
    }

    /// Exponents in the order `z₁, z₂, z₃, w₁, w₂, w₃`.
    fn from_slots(e: [BigUint; 6]) -> Self {
        let [k1, k2, k3, l1, l2, l3] = e;
        Self {
            k: [k1, k2, k3],
            l: [l1, l2, l3],
        }
    }

    pub fn is_constant(&self) -> bool {
        self.k.iter().chain(self.l.iter()).all(Zero::is_zero)
    }

    /// `Σ kᵢAᵢ + Σ lⱼBⱼ`.
    pub fn weight(&self, d: &WeightDatum) -> IntVec2 {
        let mut acc = IntVec2::zero();
        let exps = self.k.iter().chain(self.l.iter());
        for (e, w) in exps.zip(d.weights()) {
            let e = e.to_bigint().expect("unsigned fits signed");
            acc = &acc + &(&e * w);
        }
        acc
    }

    /// Not divisible by the leading term `z₁w₁`.
    pub fn is_standard(&self) -> bool {
        self.k[0].is_zero() || self.l[0].is_zero()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["z1", "z2", "z3", "w1", "w2", "w3"];
        let factors: Vec<String> = self
            .k
            .iter()
            .chain(self.l.iter())
            .zip(names)
            .filter(|(e, _)| !e.is_zero())
            .map(|(e, n)| {
                if *e == BigUint::from(1u8) {
                    n.to_string()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join(" "))
        }
    }
}

fn unit_slot(i: usize) -> Monomial {
    let mut e: [BigUint; 6] = Default::default();
    e[i] = BigUint::from(1u8);
    Monomial::from_slots(e)
}

fn reduced(coeffs: Vec<(usize, BigInt)>) -> Monomial {
    let g = coeffs.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    let mut e: [BigUint; 6] = Default::default();
    for (i, c) in coeffs {
        e[i] = (c.abs() / &g).magnitude().clone();
    }
    Monomial::from_slots(e)
}

/// A nonconstant monomial of weight zero, if any.
///
/// Decides exactly whether `0` is a nontrivial nonnegative combination of the
/// six weights. By Carathéodory in the plane it suffices to look at one zero
/// weight, two opposite weights, or three weights whose Cramer coefficients
/// `(v₂×v₃, v₃×v₁, v₁×v₂)` share a strict sign.
pub fn find_invariant_monomial(d: &WeightDatum) -> Option<Monomial> {
    let ws = d.weights();
    if let Some(i) = ws.iter().position(|w| w.is_zero()) {
        return Some(unit_slot(i));
    }
    for i in 0..6 {
        for j in i + 1..6 {
            let (u, v) = (ws[i], ws[j]);
            if u.cross(v).is_zero() && u.dot(v).is_negative() {
                // Collinear and nonzero: compare along a shared nonzero coordinate.
                let (su, sv) = if u.x.is_zero() {
                    (&u.y, &v.y)
                } else {
                    (&u.x, &v.x)
                };
                return Some(reduced(vec![(i, sv.abs()), (j, su.abs())]));
            }
        }
    }
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let x = ws[j].cross(ws[k]);
                let y = ws[k].cross(ws[i]);
                let z = ws[i].cross(ws[j]);
                let all_pos = x.is_positive() && y.is_positive() && z.is_positive();
                let all_neg = x.is_negative() && y.is_negative() && z.is_negative();
                if all_pos || all_neg {
                    return Some(reduced(vec![(i, x), (j, y), (k, z)]));
                }
            }
        }
    }
    None
}

fn guard_r0(d: &WeightDatum) -> Result<IntVec2, GradedError> {
    if !r0_is_trivial(d) {
        return Err(GradedError::NontrivialDegreeZero {
            witness: find_invariant_monomial(d).map(Box::new),
        });
    }
    let all: Vec<IntVec2> = d.weights().into_iter().cloned().collect();
    Ok(strictly_separates(&all).expect("apex with nonzero weights admits a positive functional"))
}

/// Depth-first count of standard exponent vectors reaching `target`.
///
/// `f` is strictly positive on every weight, and `f(target)` is the budget
/// left, which bounds each remaining exponent.
struct Counter<'a> {
    weights: [&'a IntVec2; 6],
    f_vals: [BigInt; 6],
}

impl Counter<'_> {
    fn count(
        &self,
        slot: usize,
        target: &IntVec2,
        budget: &BigInt,
        z1_used: bool,
    ) -> Result<u64, GradedError> {
        if budget.is_negative() {
            return Ok(0);
        }
        let w = self.weights[slot];
        if slot == 5 {
            // w₃'s exponent is forced.
            if !w.cross(target).is_zero() {
                return Ok(0);
            }
            let (q, r) = target.dot(w).div_rem(&w.dot(w));
            return Ok(u64::from(r.is_zero() && !q.is_negative()));
        }
        let max = budget / &self.f_vals[slot];
        let max = max
            .to_u64()
            .ok_or_else(|| GradedError::ExponentBoundTooLarge(max.clone()))?;
        let mut total = 0u64;
        let mut t = target.clone();
        let mut b = budget.clone();
        for e in 0..=max {
            let used = z1_used || (slot == 0 && e > 0);
            // slot 3 is w₁
            if !(slot == 3 && e > 0 && z1_used) {
                total += self.count(slot + 1, &t, &b, used)?;
            }
            t = &t - w;
            b -= &self.f_vals[slot];
        }
        Ok(total)
    }
}

/// `dim R^χ_n`: standard monomials of weight `n·C`.
pub fn dim_graded_piece(d: &WeightDatum, n: u64) -> Result<u64, GradedError> {
    let f = guard_r0(d)?;
    count_with(d, &f, n)
}

fn count_with(d: &WeightDatum, f: &IntVec2, n: u64) -> Result<u64, GradedError> {
    let weights = d.weights();
    let counter = Counter {
        weights,
        f_vals: weights.map(|w| w.dot(f)),
    };
    let target = &BigInt::from(n) * d.c();
    let budget = target.dot(f);
    counter.count(0, &target, &budget, false)
}

/// `[dim R^χ_0, …, dim R^χ_{n_max}]`.
pub fn hilbert_table(d: &WeightDatum, n_max: u64) -> Result<Vec<u64>, GradedError> {
    let f = guard_r0(d)?;
    (0..=n_max).map(|n| count_with(d, &f, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec2::v;

    fn datum(a: [(i64, i64); 3], b: [(i64, i64); 3], c: (i64, i64)) -> WeightDatum {
        WeightDatum::unconstrained(a.map(IntVec2::from), b.map(IntVec2::from), c.into()).unwrap()
    }

    /// T(n)² − T(n−1)² with T(n) = (n+1)(n+2)/2: pairs of degree-n monomials in
    /// z and in w, minus those divisible by z₁w₁.
    fn flag_oracle(n: u64) -> u64 {
        let t = |m: i64| {
            if m < 0 {
                0
            } else {
                ((m + 1) * (m + 2) / 2) as u64
            }
        };
        let n = n as i64;
        t(n) * t(n) - t(n - 1) * t(n - 1)
    }

    #[test]
    fn flag_dimensions() {
        let f = WeightDatum::flag();
        assert_eq!(dim_graded_piece(&f, 0), Ok(1));
        assert_eq!(flag_oracle(1), 8);
        assert_eq!(dim_graded_piece(&f, 1), Ok(8));
        assert_eq!(dim_graded_piece(&f, 3), Ok(64));
        assert_eq!(hilbert_table(&f, 3), Ok(vec![1, 8, 27, 64]));
        assert_eq!(hilbert_table(&f, 0), Ok(vec![1]));
    }

    #[test]
    fn invariant_monomial_examples() {
        assert_eq!(find_invariant_monomial(&WeightDatum::flag()), None);

        let d = datum([(1, 0), (0, 1), (0, 1)], [(0, 1), (-1, 0), (0, 1)], (1, 1));
        let m = find_invariant_monomial(&d).unwrap();
        assert_eq!(m, Monomial::from_exponents([1, 0, 0], [0, 1, 0]));
        assert_eq!(m.to_string(), "z1 w2");
        assert_eq!(m.weight(&d), v(0, 0));

        let d = datum([(0, 0), (1, 0), (1, 0)], [(0, 1); 3], (1, 1));
        assert_eq!(find_invariant_monomial(&d).unwrap().to_string(), "z1");

        let d = datum([(2, 0), (0, 1), (0, 1)], [(-3, 0), (0, 1), (0, 1)], (1, 1));
        assert_eq!(
            find_invariant_monomial(&d).unwrap(),
            Monomial::from_exponents([3, 0, 0], [2, 0, 0])
        );

        let d = datum([(1, 0), (0, 1), (0, 1)], [(-1, -1), (0, 1), (0, 1)], (1, 1));
        let m = find_invariant_monomial(&d).unwrap();
        assert!(!m.is_constant());
        assert_eq!(m.weight(&d), v(0, 0));
    }

    #[test]
    fn rejects_nontrivial_r0() {
        let d = datum([(0, 0), (1, 0), (1, 0)], [(0, 1); 3], (1, 1));
        let err = hilbert_table(&d, 2).unwrap_err();
        assert_eq!(
            err,
            GradedError::NontrivialDegreeZero {
                witness: Some(Box::new(Monomial::from_exponents([1, 0, 0], [0; 3])))
            }
        );
        assert!(dim_graded_piece(&d, 0).is_err());
    }

    #[test]
    fn character_outside_semigroup_gives_zero() {
        // f = (1,1) is positive on all weights but negative on C.
        let d = datum([(1, 0), (1, 0), (1, 0)], [(0, 1); 3], (-1, -1));
        assert_eq!(hilbert_table(&d, 3), Ok(vec![1, 0, 0, 0]));
        let d = datum([(1, 0), (1, 0), (1, 0)], [(0, 1); 3], (1, -1));
        assert_eq!(hilbert_table(&d, 3), Ok(vec![1, 0, 0, 0]));
    }

    #[test]
    fn standard_basis_condition() {
        assert!(!Monomial::from_exponents([1, 0, 0], [1, 0, 0]).is_standard());
        assert!(Monomial::from_exponents([1, 0, 0], [0, 1, 0]).is_standard());
        assert!(Monomial::default().is_constant());
        assert_eq!(Monomial::default().to_string(), "1");
    }
}
