use num_traits::ToPrimitive;
use proptest::prelude::*;
use torus_git::cone::strictly_separates;
use torus_git::graded::{dim_graded_piece, find_invariant_monomial, hilbert_table, GradedError};
use torus_git::stability::{r0_is_trivial, WeightDatum};
use torus_git::vec2::{v, IntVec2};

fn vec_in(b: i64) -> impl Strategy<Value = IntVec2> {
    (-b..=b, -b..=b).prop_map(|(x, y)| v(x, y))
}

fn r0_datum(b: i64) -> impl Strategy<Value = WeightDatum> {
    (
        [vec_in(b), vec_in(b), vec_in(b)],
        [vec_in(b), vec_in(b), vec_in(b)],
        vec_in(b),
    )
        .prop_filter_map("need R_0 = C", |(a, b, c)| {
            WeightDatum::unconstrained(a, b, c)
                .ok()
                .filter(r0_is_trivial)
        })
}

/// Data with A + B constant, so the relation is homogeneous and R is graded.
fn graded_datum(b: i64) -> impl Strategy<Value = WeightDatum> {
    ([vec_in(b), vec_in(b), vec_in(b)], vec_in(b), vec_in(b)).prop_filter_map(
        "need R_0 = C",
        |(a, s, c)| {
            let b = [&s - &a[0], &s - &a[1], &s - &a[2]];
            WeightDatum::new(a, b, c).ok().filter(r0_is_trivial)
        },
    )
}

/// Counts monomials zᵏwˡ with weight n·C and min(k₁, l₁) = 0 by plain
/// enumeration up to the degree bound forced by a positive functional.
fn brute_dim(d: &WeightDatum, n: i64) -> u64 {
    let ws: Vec<IntVec2> = d.weights().iter().map(|w| (*w).clone()).collect();
    let f = strictly_separates(&ws).expect("apex");
    let fw: Vec<i64> = ws.iter().map(|w| f.dot(w).to_i64().unwrap()).collect();
    let target = (f.dot(d.c()).to_i64().unwrap()) * n;
    if target < 0 {
        return 0;
    }
    let wx: Vec<i64> = ws.iter().map(|w| w.x.to_i64().unwrap()).collect();
    let wy: Vec<i64> = ws.iter().map(|w| w.y.to_i64().unwrap()).collect();
    let (cx, cy) = (d.c().x.to_i64().unwrap() * n, d.c().y.to_i64().unwrap() * n);
    let mut count = 0;
    let mut e = [0i64; 6];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        left: i64,
        e: &mut [i64; 6],
        fw: &[i64],
        wx: &[i64],
        wy: &[i64],
        c: (i64, i64),
        count: &mut u64,
    ) {
        if i == 6 {
            let x: i64 = (0..6).map(|j| e[j] * wx[j]).sum();
            let y: i64 = (0..6).map(|j| e[j] * wy[j]).sum();
            if left == 0 && (x, y) == c && (e[0] == 0 || e[3] == 0) {
                *count += 1;
            }
            return;
        }
        let mut k = 0;
        while k * fw[i] <= left {
            e[i] = k;
            rec(i + 1, left - k * fw[i], e, fw, wx, wy, c, count);
            k += 1;
        }
        e[i] = 0;
    }
    rec(0, target, &mut e, &fw, &wx, &wy, (cx, cy), &mut count);
    count
}

fn t(n: i64) -> u64 {
    if n < 0 {
        0
    } else {
        ((n + 1) * (n + 2) / 2) as u64
    }
}

#[test]
fn flag_dimensions_match_counting_oracle() {
    let oracle: Vec<u64> = (0..=6).map(|n| t(n) * t(n) - t(n - 1) * t(n - 1)).collect();
    assert_eq!(
        oracle,
        (0..=6u64).map(|n| (n + 1).pow(3)).collect::<Vec<_>>()
    );
    assert_eq!(hilbert_table(&WeightDatum::flag(), 6).unwrap(), oracle);
}

#[test]
fn degree_zero_nontriviality_is_rejected() {
    let d = WeightDatum::unconstrained(
        [v(1, 0), v(-1, 0), v(0, 1)],
        [v(0, 1), v(0, 1), v(0, 1)],
        v(1, 1),
    )
    .unwrap();
    assert!(!r0_is_trivial(&d));
    assert!(find_invariant_monomial(&d).is_some());
    assert!(matches!(
        dim_graded_piece(&d, 1),
        Err(GradedError::NontrivialDegreeZero { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn enumerator_matches_brute_force(d in r0_datum(3), n in 0u64..3) {
        prop_assert_eq!(dim_graded_piece(&d, n).unwrap(), brute_dim(&d, n as i64));
    }

    #[test]
    fn degree_zero_is_one(d in r0_datum(6)) {
        prop_assert_eq!(dim_graded_piece(&d, 0).unwrap(), 1);
        prop_assert!(find_invariant_monomial(&d).is_none());
    }

    /// R is a domain, so a nonzero f ∈ R_n embeds R_m into R_{n+m}.
    #[test]
    fn multiplication_is_injective(d in graded_datum(3), n in 1u64..3, m in 1u64..3) {
        let (dn, dm, dnm) = (
            dim_graded_piece(&d, n).unwrap(),
            dim_graded_piece(&d, m).unwrap(),
            dim_graded_piece(&d, n + m).unwrap(),
        );
        if dn > 0 {
            prop_assert!(dnm >= dm);
        }
    }

    #[test]
    fn relabeling_preserves_dimensions(d in graded_datum(3), perm in Just([2usize, 0, 1]), n in 0u64..3) {
        let a = perm.map(|i| d.a()[i].clone());
        let b = perm.map(|i| d.b()[i].clone());
        let e = WeightDatum::new(a, b, d.c().clone()).unwrap();
        let swapped = WeightDatum::new(d.b().clone(), d.a().clone(), d.c().clone()).unwrap();
        let base = dim_graded_piece(&d, n).unwrap();
        prop_assert_eq!(dim_graded_piece(&e, n).unwrap(), base);
        prop_assert_eq!(dim_graded_piece(&swapped, n).unwrap(), base);
    }
}
