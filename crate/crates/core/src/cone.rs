//! Rational polyhedral cones in ℝ².
//!
//! A cone is stored as its generator list, but every predicate works from the
//! canonical [`Shape`] of the generated set: the zero cone, a ray, a line, a
//! pointed sector, a closed half-plane, or the whole plane. Two cones compare
//! equal when they generate the same set.
//!
//! All predicates are exact; signs of integer cross products decide every
//! case. Zero generators are allowed and contribute nothing.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::vec2::IntVec2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("point {point} is not in the cone")]
    NotInCone { point: IntVec2 },
}

/// Canonical description of the set generated by a finite list of vectors.
///
/// Directions are primitive. A `Sector` runs counterclockwise from `start` to
/// `end` and is strictly narrower than a half-plane. A `HalfPlane` is the
/// closed region counterclockwise of `edge`, i.e. `{p : edge × p ≥ 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Zero,
    Ray(IntVec2),
    /// The line spanned by the direction; the sign is normalized so that the
    /// direction is in the upper half-plane (or is `(1, 0)`).
    Line(IntVec2),
    Sector {
        start: IntVec2,
        end: IntVec2,
    },
    HalfPlane {
        edge: IntVec2,
    },
    Plane,
}

#[derive(Debug, Clone)]
pub struct Cone2 {
    generators: Vec<IntVec2>,
}

impl Cone2 {
    pub fn new(generators: Vec<IntVec2>) -> Self {
        Self { generators }
    }

    pub fn generators(&self) -> &[IntVec2] {
        &self.generators
    }

    pub fn shape(&self) -> Shape {
        shape_of(&self.generators)
    }

    /// Whether `p` is a nonnegative combination of the generators.
    pub fn contains(&self, p: &IntVec2) -> bool {
        if p.is_zero() {
            return true;
        }
        match self.shape() {
            Shape::Zero => false,
            Shape::Ray(d) => d.same_ray(p),
            Shape::Line(d) => d.cross(p).is_zero(),
            Shape::Sector { start, end } => {
                !start.cross(p).is_negative() && !p.cross(&end).is_negative()
            }
            Shape::HalfPlane { edge } => !edge.cross(p).is_negative(),
            Shape::Plane => true,
        }
    }

    /// Whether `p` lies in the topological interior of the cone in ℝ².
    /// Cones whose span is at most a line have empty interior.
    pub fn interior_contains(&self, p: &IntVec2) -> bool {
        match self.shape() {
            Shape::Zero | Shape::Ray(_) | Shape::Line(_) => false,
            Shape::Sector { start, end } => {
                start.cross(p).is_positive() && p.cross(&end).is_positive()
            }
            Shape::HalfPlane { edge } => edge.cross(p).is_positive(),
            Shape::Plane => true,
        }
    }

    /// Whether some linear functional is strictly positive on every nonzero
    /// generator.
    pub fn has_apex(&self) -> bool {
        matches!(
            self.shape(),
            Shape::Zero | Shape::Ray(_) | Shape::Sector { .. }
        )
    }

    pub fn linear_hull_dim(&self) -> usize {
        match self.shape() {
            Shape::Zero => 0,
            Shape::Ray(_) | Shape::Line(_) => 1,
            Shape::Sector { .. } | Shape::HalfPlane { .. } | Shape::Plane => 2,
        }
    }

    /// Lexicographically smallest index pair `(i, j)`, `i ≤ j`, such that `p`
    /// lies in `cone(vᵢ, vⱼ)`.
    ///
    /// `p = 0` yields `(0, 0)`, or `None` when there are no generators. A point
    /// outside the cone is reported as an error. This search does not consult
    /// [`Cone2::shape`], so it doubles as an independent membership check.
    pub fn caratheodory_pair(&self, p: &IntVec2) -> Result<Option<(usize, usize)>, ConeError> {
        if p.is_zero() {
            return Ok(if self.generators.is_empty() {
                None
            } else {
                Some((0, 0))
            });
        }
        let n = self.generators.len();
        for i in 0..n {
            for j in i..n {
                if pair_contains(&self.generators[i], &self.generators[j], p) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Err(ConeError::NotInCone { point: p.clone() })
    }
}

impl PartialEq for Cone2 {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape()
    }
}

impl Eq for Cone2 {}

/// Membership of `p` in `cone(u, v)` by solving `p = a·u + b·v` with Cramer's
/// rule and checking signs.
fn pair_contains(u: &IntVec2, v: &IntVec2, p: &IntVec2) -> bool {
    if p.is_zero() {
        return true;
    }
    if u.is_zero() {
        return v.same_ray(p);
    }
    if v.is_zero() {
        return u.same_ray(p);
    }
    let det = u.cross(v);
    if det.is_zero() {
        if u.dot(v).is_positive() {
            return u.same_ray(p);
        }
        return u.cross(p).is_zero();
    }
    let a = p.cross(v);
    let b = u.cross(p);
    let ok = |t: &num_bigint::BigInt| t.is_zero() || t.sign() == det.sign();
    ok(&a) && ok(&b)
}

/// 0 for directions in `[0°, 180°)`, 1 for `[180°, 360°)`.
fn half(d: &IntVec2) -> u8 {
    if d.y.is_positive() || (d.y.is_zero() && d.x.is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: &IntVec2, b: &IntVec2) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

fn canonical_line(d: IntVec2) -> IntVec2 {
    if half(&d) == 0 {
        d
    } else {
        -&d
    }
}

fn shape_of(generators: &[IntVec2]) -> Shape {
    let mut dirs: Vec<IntVec2> = Vec::new();
    for g in generators.iter().filter(|g| !g.is_zero()) {
        let p = g.primitive();
        if !dirs.contains(&p) {
            dirs.push(p);
        }
    }
    let Some(first) = dirs.first().cloned() else {
        return Shape::Zero;
    };
    if dirs.iter().all(|d| first.cross(d).is_zero()) {
        return if dirs.len() == 1 {
            Shape::Ray(first)
        } else {
            Shape::Line(canonical_line(first))
        };
    }

    dirs.sort_by(angle_cmp);
    let n = dirs.len();
    let mut straight_gap = None;
    for k in 0..n {
        let from = &dirs[k];
        let to = &dirs[(k + 1) % n];
        let c = from.cross(to);
        if c.is_negative() {
            // Reflex gap: everything else fits in the opposite sector.
            return Shape::Sector {
                start: to.clone(),
                end: from.clone(),
            };
        }
        if c.is_zero() {
            straight_gap = Some(to.clone());
        }
    }
    match straight_gap {
        Some(edge) => Shape::HalfPlane { edge },
        None => Shape::Plane,
    }
}

/// An integer `α` with `⟨v, α⟩ > 0` for every `v` in `vs`, if one exists.
///
/// The empty list gets `(1, 0)`. A zero vector makes the system infeasible.
/// The feasible set is an open arc of directions; when it is nonempty either
/// some input vector lies in it, or it is bounded by `perp_cw(u)` and
/// `perp_ccw(w)` for some inputs `u`, `w`, whose sum lies strictly inside.
/// Candidates are checked by direct evaluation.
pub fn strictly_separates(vs: &[IntVec2]) -> Option<IntVec2> {
    if vs.is_empty() {
        return Some(IntVec2::new(1, 0));
    }
    if vs.iter().any(IntVec2::is_zero) {
        return None;
    }
    let works = |alpha: &IntVec2| vs.iter().all(|v| v.dot(alpha).is_positive());
    if let Some(v) = vs.iter().find(|v| works(v)) {
        return Some(v.primitive());
    }
    for u in vs {
        for w in vs {
            let cand = &u.perp_cw() + &w.perp_ccw();
            if !cand.is_zero() && works(&cand) {
                return Some(cand.primitive());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec2::v;

    fn cone(gs: &[(i64, i64)]) -> Cone2 {
        Cone2::new(gs.iter().map(|&(x, y)| v(x, y)).collect())
    }

    #[test]
    fn membership_examples() {
        assert!(cone(&[(1, 0), (0, 1)]).contains(&v(0, 0)));
        let fig = cone(&[(0, 1), (0, -1), (1, 1)]);
        assert!(!fig.contains(&v(-1, 0)));
        assert!(fig.contains(&v(0, 5)));
        assert!(fig.contains(&v(3, -100)));
        assert!(!cone(&[]).contains(&v(1, 0)));
    }

    #[test]
    fn interior_examples() {
        let q = cone(&[(1, 0), (0, 1)]);
        assert!(q.interior_contains(&v(1, 1)));
        assert!(!q.interior_contains(&v(1, 0)));
        assert!(!q.interior_contains(&v(0, 0)));
        assert!(!cone(&[(1, 0)]).interior_contains(&v(1, 0)));
        assert!(!cone(&[(1, 0), (-1, 0)]).interior_contains(&v(1, 0)));
        assert!(cone(&[(1, 0), (-1, 1), (-1, -1)]).interior_contains(&v(0, 0)));
    }

    #[test]
    fn apex_examples() {
        assert!(cone(&[(1, 0), (0, 1), (1, 1)]).has_apex());
        assert!(!cone(&[(0, 1), (0, -1), (1, 1)]).has_apex());
        assert!(cone(&[]).has_apex());
        assert!(cone(&[(0, 0), (2, 3)]).has_apex());
        assert!(!cone(&[(1, 2), (-2, -4)]).has_apex());
    }

    #[test]
    fn hull_dim_examples() {
        assert_eq!(cone(&[]).linear_hull_dim(), 0);
        assert_eq!(cone(&[(0, 0)]).linear_hull_dim(), 0);
        assert_eq!(cone(&[(2, 4), (-1, -2)]).linear_hull_dim(), 1);
        assert_eq!(cone(&[(1, 0), (1, 1)]).linear_hull_dim(), 2);
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(cone(&[(0, 0)]).shape(), Shape::Zero);
        assert_eq!(cone(&[(2, 2), (1, 1)]).shape(), Shape::Ray(v(1, 1)));
        assert_eq!(cone(&[(0, -3), (0, 1)]).shape(), Shape::Line(v(0, 1)));
        assert_eq!(
            cone(&[(1, 0), (-1, 0), (0, 1)]).shape(),
            Shape::HalfPlane { edge: v(1, 0) }
        );
        assert_eq!(
            cone(&[(0, 1), (0, -1), (1, 1)]).shape(),
            Shape::HalfPlane { edge: v(0, -1) }
        );
        assert_eq!(cone(&[(1, 0), (-1, 1), (-1, -1)]).shape(), Shape::Plane);
        assert_eq!(
            cone(&[(0, 1), (1, 0)]).shape(),
            Shape::Sector {
                start: v(1, 0),
                end: v(0, 1)
            }
        );
        // Wraps past the positive x-axis.
        assert_eq!(
            cone(&[(1, 1), (1, -1)]).shape(),
            Shape::Sector {
                start: v(1, -1),
                end: v(1, 1)
            }
        );
    }

    #[test]
    fn set_equality_ignores_generator_lists() {
        assert_eq!(
            cone(&[(1, 0), (0, 1)]),
            cone(&[(0, 2), (1, 1), (3, 0), (0, 0)])
        );
        assert_ne!(cone(&[(1, 0)]), cone(&[(1, 0), (-1, 0)]));
    }

    #[test]
    fn separation_examples() {
        let a = strictly_separates(&[v(1, 0), v(0, 1)]).unwrap();
        assert!(a.dot(&v(1, 0)).is_positive() && a.dot(&v(0, 1)).is_positive());
        assert_eq!(strictly_separates(&[v(1, 0), v(-1, 0)]), None);
        assert_eq!(strictly_separates(&[]), Some(v(1, 0)));
        assert_eq!(strictly_separates(&[v(0, 0), v(1, 0)]), None);
        let w = strictly_separates(&[v(5, 1), v(-1, 7), v(3, 3)]).unwrap();
        for g in [v(5, 1), v(-1, 7), v(3, 3)] {
            assert!(g.dot(&w).is_positive());
        }
    }

    #[test]
    fn caratheodory_examples() {
        let c = cone(&[(1, 0), (1, 1), (0, 1)]);
        assert_eq!(c.caratheodory_pair(&v(1, 2)), Ok(Some((0, 2))));
        assert_eq!(c.caratheodory_pair(&v(2, 1)), Ok(Some((0, 1))));
        let q = cone(&[(1, 0), (0, 1)]);
        assert_eq!(q.caratheodory_pair(&v(3, 0)), Ok(Some((0, 0))));
        assert_eq!(q.caratheodory_pair(&v(0, 0)), Ok(Some((0, 0))));
        assert_eq!(cone(&[]).caratheodory_pair(&v(0, 0)), Ok(None));
        assert_eq!(
            q.caratheodory_pair(&v(-1, 0)),
            Err(ConeError::NotInCone { point: v(-1, 0) })
        );
    }
}
