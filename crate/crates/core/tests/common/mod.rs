//! Oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use chordcalc::diagrams::{
    coproduct, enumerate, CanonicalKey, DoubleChordDiagram, FramedChordDiagram, Framing, Kind,
};
use chordcalc::intlinalg::{hnf, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn framings(n: usize) -> Vec<Vec<Framing>> {
    (0..1u32 << n)
        .map(|m| (0..n).map(|i| Framing::from_bit((m >> i & 1) as u8).unwrap()).collect())
        .collect()
}

/// Every word on labels 0..n with each label twice.
pub fn raw_words(n: usize) -> Vec<Vec<usize>> {
    fn go(word: &mut Vec<usize>, left: &mut [u8], out: &mut Vec<Vec<usize>>) {
        if left.iter().all(|&k| k == 0) {
            out.push(word.clone());
            return;
        }
        for c in 0..left.len() {
            if left[c] > 0 {
                left[c] -= 1;
                word.push(c);
                go(word, left, out);
                word.pop();
                left[c] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![2; n], &mut out);
    out
}

/// Orbits of a finite set under generating moves, by flood fill.
pub fn orbits<T: Clone + Ord>(items: &[T], moves: impl Fn(&T) -> Vec<T>) -> BTreeMap<T, usize> {
    let mut id: BTreeMap<T, usize> = BTreeMap::new();
    let mut next = 0;
    for start in items {
        if id.contains_key(start) {
            continue;
        }
        let mut stack = vec![start.clone()];
        id.insert(start.clone(), next);
        while let Some(x) = stack.pop() {
            for y in moves(&x) {
                if !id.contains_key(&y) {
                    id.insert(y.clone(), next);
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    id
}

fn transpositions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn swap_labels(w: &[usize], (a, b): (usize, usize)) -> Vec<usize> {
    w.iter().map(|&c| if c == a { b } else if c == b { a } else { c }).collect()
}

fn rotate(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    if !w.is_empty() {
        w.rotate_left(1);
    }
    w
}

/// Keys are constant on orbits, differ across orbits, and the distinct keys
/// are exactly the enumerated ones.
fn keys_match_orbits<T: Clone + Ord>(
    items: &[T],
    orbit: &BTreeMap<T, usize>,
    key: impl Fn(&T) -> CanonicalKey,
    enumerated: Vec<CanonicalKey>,
) -> Result<(), String> {
    let mut by_orbit: BTreeMap<usize, BTreeSet<CanonicalKey>> = BTreeMap::new();
    for it in items {
        by_orbit.entry(orbit[it]).or_default().insert(key(it));
    }
    if let Some(ks) = by_orbit.values().find(|ks| ks.len() > 1) {
        return Err(format!("orbit with {} keys", ks.len()));
    }
    let distinct: BTreeSet<_> = by_orbit.values().flatten().cloned().collect();
    if distinct.len() != by_orbit.len() {
        return Err(format!("{} orbits but {} keys", by_orbit.len(), distinct.len()));
    }
    if distinct.into_iter().collect::<Vec<_>>() != enumerated {
        return Err("enumeration differs from orbit representatives".into());
    }
    Ok(())
}

pub fn framed_completeness(n: usize) -> Result<(), String> {
    type Raw = (Vec<usize>, Vec<Framing>);
    let items: Vec<Raw> = raw_words(n)
        .into_iter()
        .flat_map(|w| framings(n).into_iter().map(move |f| (w.clone(), f)))
        .collect();
    let orbit = orbits(&items, |(w, f)| {
        let mut out = vec![(rotate(w), f.clone())];
        for t in transpositions(n) {
            let mut g = f.clone();
            g.swap(t.0, t.1);
            out.push((swap_labels(w, t), g));
        }
        out
    });
    let key = |(w, f): &Raw| FramedChordDiagram::new(w.clone(), f.clone()).unwrap().key();
    keys_match_orbits(&items, &orbit, key, enumerate(Kind::Framed, n))
}

pub fn double_completeness(n: usize) -> Result<(), String> {
    type Raw = (Vec<usize>, Vec<usize>);
    let mut items: Vec<Raw> = Vec::new();
    for w in raw_words(n) {
        for s in 0..=w.len() {
            items.push((w[..s].to_vec(), w[s..].to_vec()));
        }
    }
    let orbit = orbits(&items, |(a, b)| {
        let mut out = vec![(rotate(a), b.clone()), (a.clone(), rotate(b)), (b.clone(), a.clone())];
        for t in transpositions(n) {
            out.push((swap_labels(a, t), swap_labels(b, t)));
        }
        out
    });
    let key = |(a, b): &Raw| DoubleChordDiagram::new(a.clone(), b.clone()).unwrap().key();
    keys_match_orbits(&items, &orbit, key, enumerate(Kind::Double, n))
}

type Triple = BTreeMap<(CanonicalKey, CanonicalKey, CanonicalKey), i64>;

pub fn coproduct_laws(n: usize) -> Result<(), String> {
    for key in enumerate(Kind::Framed, n) {
        let delta = coproduct(&key.to_framed().unwrap());
        let mut left = Triple::new();
        let mut right = Triple::new();
        for ((l, r), c) in &delta {
            for ((ll, lr), cc) in coproduct(&l.to_framed().unwrap()) {
                *left.entry((ll, lr, r.clone())).or_insert(0) += c * cc;
            }
            for ((rl, rr), cc) in coproduct(&r.to_framed().unwrap()) {
                *right.entry((l.clone(), rl, rr)).or_insert(0) += c * cc;
            }
        }
        if left != right {
            return Err(format!("not coassociative on {key}"));
        }
        let flipped: BTreeMap<_, _> = delta.iter().map(|((l, r), c)| ((r.clone(), l.clone()), *c)).collect();
        if flipped != delta {
            return Err(format!("not cocommutative on {key}"));
        }
        if delta.values().sum::<i64>() != 1 << n {
            return Err(format!("wrong mass on {key}"));
        }
    }
    Ok(())
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> =
        (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntMatrix::from_rows(&data)
}

/// Fraction-free determinant (Bareiss).
pub fn bareiss_det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, rank);
        for i in rank + 1..a.len() {
            let f = a[i][c].clone();
            let g = a[rank][c].clone();
            for j in 0..m.cols() {
                a[i][j] = &a[i][j] * &g - &a[rank][j] * &f;
            }
        }
        rank += 1;
    }
    rank
}

/// H = UA, U unimodular, H echelon with positive pivots, entries above each
/// pivot reduced into [0, pivot), zero rows last, rank preserved.
pub fn check_hnf(a: &IntMatrix) -> Result<(), String> {
    let (h, u) = hnf(a);
    if u.mul(a).unwrap() != h {
        return Err("H != UA".into());
    }
    if bareiss_det(&u).abs() != BigInt::one() {
        return Err("U not unimodular".into());
    }
    if !h.is_echelon() {
        return Err("H not echelon".into());
    }
    let pivots = h.pivots();
    if pivots.len() != rational_rank(a) {
        return Err("rank changed".into());
    }
    for &(r, c) in &pivots {
        let p = &h[(r, c)];
        if !p.is_positive() {
            return Err("non-positive pivot".into());
        }
        if (0..r).any(|above| h[(above, c)].is_negative() || &h[(above, c)] >= p) {
            return Err("entry above pivot not reduced".into());
        }
    }
    if (pivots.len()..h.rows()).any(|r| h.row(r).iter().any(|e| !e.is_zero())) {
        return Err("nonzero row below the pivots".into());
    }
    Ok(())
}

pub fn hnf_random_suite(seed: u64, count: usize) -> Result<(), String> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=7);
        let a = random_matrix(&mut rng, rows, cols, 9);
        check_hnf(&a).map_err(|e| format!("matrix {i}: {e}"))?;
    }
    Ok(())
}

pub fn cli_corpus() -> Vec<String> {
    let mut out: Vec<String> = [
        "cd:",
        "cd: A0 A0",
        "cd:A1 A1",
        "cd: B0 A1 B0 A1",
        "cd: x1 y0 x1 y0 z1 z1",
        "cd: Foo0 Bar1 Foo0 Bar1",
        "lcd:",
        "lcd: A0 B1 A0 B1",
        "lcd: q1 q1 p0 p0",
        "dcd: |",
        "dcd: A | A",
        "dcd: A A |",
        "dcd: | B B",
        "dcd: A B | B A",
        "dcd: c2 c3 | c3 c2",
        "dlcd: |",
        "dlcd: A | A",
        "dlcd: A A | B B",
        "dlcd: | A B A B",
        "3 [cd: A1 A1] + -1 [cd: A0 A0]",
        "1 [dcd: A | A] + -1 [dcd: A | A]",
        "2 [dcd: A B | A B] + 5 [dcd: |]",
        "-4 [lcd: A0 A0] + 4 [lcd: B0 B0]",
        "7 [dlcd: A | A]",
        "  1[cd: A0 B0 A0 B0]+1[cd: A0 A0 B0 B0]  ",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for kind in Kind::ALL {
        for n in 0..=2 {
            for key in enumerate(kind, n) {
                out.push(chordcalc::cli::format_key(&key));
            }
        }
    }
    out
}

/// Canonical output re-parses to itself and matches what `canon` prints.
pub fn cli_round_trip(text: &str) -> Result<(), String> {
    use chordcalc::cli::{format_parsed, parse, run};
    let once = format_parsed(&parse(text).map_err(|e| format!("{text}: {e}"))?);
    let twice = format_parsed(&parse(&once).map_err(|e| format!("{once}: {e}"))?);
    if once != twice {
        return Err(format!("{text}: `{once}` became `{twice}`"));
    }
    let out = run(["chordcalc", "canon", text]);
    if out.code != 0 || out.output.trim_end() != once {
        return Err(format!("{text}: canon printed `{}` (exit {})", out.output.trim_end(), out.code));
    }
    Ok(())
}
