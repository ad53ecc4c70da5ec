use proptest::prelude::*;

use fhcalc_core::gf_linalg::Subspace;
use fhcalc_core::symgrp::{koszul_sign, Permutation};
use fhcalc_core::{GradedSpace, Matrix, PrimeField};

fn graded(d: usize) -> impl Strategy<Value = GradedSpace> {
    prop::collection::vec(0usize..4, 0..=d + 1).prop_map(move |v| GradedSpace::from_dims(d, &v))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn tensor_is_commutative_and_associative(a in graded(6), b in graded(6), c in graded(6)) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
        prop_assert_eq!(a.tensor(&GradedSpace::unit(6)), a);
    }

    #[test]
    fn tensor_dimensions_convolve(a in graded(5), b in graded(5)) {
        let t = a.tensor(&b);
        for n in 0..=5 {
            let expected: usize = (0..=n).map(|i| a.dim(i) * b.dim(n - i)).sum();
            prop_assert_eq!(t.dim(n), expected);
        }
    }

    #[test]
    fn koszul_sign_matches_bubble_sort(
        mu in permutation(5),
        degs in prop::collection::vec(0usize..4, 5),
    ) {
        // Sort the word x_{μ(1)} ⋯ x_{μ(5)} by adjacent swaps, picking up a
        // sign whenever two odd letters pass each other.
        let mut word: Vec<usize> = (0..5).map(|i| mu.apply(i)).collect();
        let mut sign = 1;
        for pass in 0..5 {
            for i in 0..4 - pass {
                if word[i] > word[i + 1] {
                    if degs[word[i]] % 2 == 1 && degs[word[i + 1]] % 2 == 1 {
                        sign = -sign;
                    }
                    word.swap(i, i + 1);
                }
            }
        }
        prop_assert_eq!(koszul_sign(&mu, &degs).as_i64(), sign);
    }

    #[test]
    fn rank_nullity(p in prop::sample::select(vec![2u64, 3, 5, 7]),
                    rows in prop::collection::vec(prop::collection::vec(-9i64..9, 5), 1..6)) {
        let f = PrimeField::new(p).unwrap();
        let m = Matrix::from_rows(f, &rows).unwrap();
        let null = m.nullspace_basis();
        prop_assert_eq!(m.rank() + null.cols(), m.cols());
        prop_assert!(m.mul(&null).is_zero());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn subspace_dimension_is_row_rank(rows in prop::collection::vec(prop::collection::vec(0i64..3, 4), 0..7)) {
        let f = PrimeField::new(3).unwrap();
        let mut s = Subspace::new(f, 4);
        for r in &rows {
            let v: Vec<u32> = r.iter().map(|&x| f.reduce(x)).collect();
            s.insert(&v);
            prop_assert!(s.contains(&v));
        }
        let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(f, &rows).unwrap().rank() };
        prop_assert_eq!(s.dim(), rank);
    }
}
