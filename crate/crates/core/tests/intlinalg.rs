mod common;

use chordcalc::intlinalg::{hnf, solve_diophantine, IntMatrix, Lattice};
use num_bigint::BigInt;
use common::{random_matrix, rational_rank};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check_hnf(a: &IntMatrix) {
    common::check_hnf(a).unwrap();
}

#[test]
fn random_hnf_postconditions() {
    common::hnf_random_suite(2024, 200).unwrap();
}

#[test]
fn hnf_of_a_five_by_seven() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = random_matrix(&mut rng, 5, 7, 50);
    check_hnf(&a);
}

#[test]
fn hnf_of_dependent_rows() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 6], vec![1, 2, 3], vec![3, 6, 9], vec![0, 0, 0]]);
    check_hnf(&a);
    assert_eq!(hnf(&a).0.pivots().len(), 1);
}

#[test]
fn planted_solutions_are_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let a = random_matrix(&mut rng, 6, 4, 7);
        let x0: Vec<BigInt> = (0..4).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
        let b = a.mul_vec(&x0).unwrap();
        let x = solve_diophantine(&a, &b).unwrap().expect("planted solution");
        assert_eq!(a.mul_vec(&x).unwrap(), b);
    }
}

#[test]
fn parity_obstruction_has_no_solution() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let a = random_matrix(&mut rng, 4, 3, 5);
        let doubled: Vec<Vec<BigInt>> = (0..4).map(|i| a.row(i).iter().map(|e| e * 2).collect()).collect();
        let a = IntMatrix::from_rows(&doubled);
        let mut b = vec![BigInt::zero(); 4];
        b[rng.gen_range(0..4)] = BigInt::one();
        assert_eq!(solve_diophantine(&a, &b).unwrap(), None);
    }
}

#[test]
fn vectors_outside_the_rational_span_have_no_solution() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut checked = 0;
    while checked < 30 {
        let a = random_matrix(&mut rng, 5, 2, 6);
        let b: Vec<BigInt> = (0..5).map(|_| BigInt::from(rng.gen_range(-6..=6))).collect();
        let mut aug = a.transpose();
        let rows: Vec<Vec<BigInt>> = (0..aug.rows()).map(|i| aug.row(i).to_vec()).chain([b.clone()]).collect();
        aug = IntMatrix::from_rows(&rows);
        if rational_rank(&aug) > rational_rank(&a) {
            assert_eq!(solve_diophantine(&a, &b).unwrap(), None);
            let lattice = Lattice::from_rows(&a.transpose());
            assert!(!lattice.spans_rationally(&b));
            checked += 1;
        }
    }
}

#[test]
fn lattice_agrees_with_diophantine_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let rows = rng.gen_range(1..=5);
        let gens = random_matrix(&mut rng, rows, 4, 4);
        let lattice = Lattice::from_rows(&gens);
        assert_eq!(lattice.rank(), rational_rank(&gens));
        let v: Vec<BigInt> = (0..4).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect();
        let solvable = solve_diophantine(&gens.transpose(), &v).unwrap().is_some();
        assert_eq!(lattice.contains(&v), solvable);
    }
}
