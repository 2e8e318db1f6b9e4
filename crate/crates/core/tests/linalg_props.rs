use ekrcx::face::k_subsets;
use ekrcx::{Face, PrimeField, PrimeMatrix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field() -> PrimeField {
    PrimeField::default_field()
}

/// Laplace expansion along the first row; independent of elimination.
fn cofactor_det(f: PrimeField, m: &[Vec<u64>]) -> u64 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut acc = 0;
    for j in 0..k {
        let sub: Vec<Vec<u64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let term = f.mul(m[0][j], cofactor_det(f, &sub));
        acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
    }
    acc
}

fn submatrix(m: &PrimeMatrix, rows: Face, cols: Face) -> Vec<Vec<u64>> {
    rows.vertices()
        .map(|i| cols.vertices().map(|j| m.get(i - 1, j - 1)).collect())
        .collect()
}

/// Rank as the largest size of a nonvanishing minor.
fn minor_rank(m: &PrimeMatrix) -> usize {
    let f = m.field();
    (1..=m.rows().min(m.cols()))
        .rev()
        .find(|&k| {
            k_subsets(m.rows(), k).iter().any(|&rs| {
                k_subsets(m.cols(), k)
                    .iter()
                    .any(|&cs| cofactor_det(f, &submatrix(m, rs, cs)) != 0)
            })
        })
        .unwrap_or(0)
}

/// Random 4x4 matrix with small entries and a random rank profile, so that
/// deficient ranks actually occur.
fn low_rank_matrix(seed: u64) -> PrimeMatrix {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = rng.gen_range(0..=4);
    let a = PrimeMatrix::from_rows(
        f,
        &(0..4).map(|_| (0..rank).map(|_| rng.gen_range(-3..=3)).collect()).collect::<Vec<_>>(),
    );
    let b = PrimeMatrix::from_rows(
        f,
        &(0..rank).map(|_| (0..4).map(|_| rng.gen_range(-3..=3)).collect()).collect::<Vec<_>>(),
    );
    if rank == 0 {
        return PrimeMatrix::zeros(f, 4, 4);
    }
    a.mul(&b).unwrap()
}

#[test]
fn rank_matches_minor_oracle() {
    for seed in 0..100 {
        let m = low_rank_matrix(seed);
        assert_eq!(m.rank(), minor_rank(&m), "seed {seed}: {m:?}");
    }
}

#[test]
fn minors_match_cofactor_oracle() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for seed in 0..50 {
        let g = PrimeMatrix::random(f, 5, 5, seed);
        let rows = k_subsets(5, 3)[rng.gen_range(0..10)];
        let cols = k_subsets(5, 3)[rng.gen_range(0..10)];
        assert_eq!(g.minor_det(rows, cols).unwrap(), cofactor_det(f, &submatrix(&g, rows, cols)));
    }
}

#[test]
fn mismatched_minor_is_an_error() {
    let g = PrimeMatrix::identity(field(), 4);
    assert!(g.minor_det(Face::of(&[1, 2]), Face::of(&[1])).is_err());
}

#[test]
fn random_six_by_six_is_almost_always_invertible() {
    let full = (0..1000)
        .filter(|&s| PrimeMatrix::random(field(), 6, 6, s).rank() == 6)
        .count();
    assert!(full >= 990, "only {full} of 1000 full rank");
}

#[test]
fn distinct_seeds_give_distinct_matrices() {
    for s in 0..100u64 {
        let a = PrimeMatrix::random(field(), 4, 4, 2 * s);
        let b = PrimeMatrix::random(field(), 4, 4, 2 * s + 1);
        assert_ne!(a, b);
    }
}

#[test]
fn inverses_of_random_elements() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let x = rng.gen_range(1..f.modulus());
        assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
    }
}

fn arb_matrix(max: usize) -> impl Strategy<Value = PrimeMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, c), r)
            .prop_map(|rows| PrimeMatrix::from_rows(PrimeField::default_field(), &rows))
    })
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(m in arb_matrix(6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn greedy_columns_have_rank_size(m in arb_matrix(6)) {
        prop_assert_eq!(m.greedy_pivot_columns().len(), m.rank());
    }

    #[test]
    fn greedy_columns_are_prefix_monotone(m in arb_matrix(6), keep in 1usize..6) {
        let keep = keep.min(m.cols());
        let rows: Vec<Vec<i64>> = (0..m.rows())
            .map(|i| (0..keep).map(|j| m.get(i, j) as i64).collect())
            .collect();
        let truncated = PrimeMatrix::from_rows(m.field(), &rows);
        let full: Vec<usize> = m.greedy_pivot_columns().into_iter().filter(|&j| j < keep).collect();
        prop_assert_eq!(truncated.greedy_pivot_columns(), full);
    }

    #[test]
    fn greedy_columns_survive_invertible_left_factor(m in arb_matrix(5), seed in any::<u64>()) {
        let a = PrimeMatrix::random(m.field(), m.rows(), m.rows(), seed);
        prop_assume!(a.rank() == m.rows());
        prop_assert_eq!(a.mul(&m).unwrap().greedy_pivot_columns(), m.greedy_pivot_columns());
    }

    #[test]
    fn field_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = PrimeField::default_field();
        let (a, b, c) = (a % f.modulus(), b % f.modulus(), c % f.modulus());
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
    }
}
