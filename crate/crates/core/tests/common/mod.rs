#![allow(dead_code)]

use braidq::{BraidWord, Generator, QuantumState, RParams, C64};
use rand::Rng;

pub fn random_params<R: Rng>(rng: &mut R) -> RParams {
    RParams::from_phases([
        rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
        rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
        rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
        rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
    ])
}

/// Random unit parameters with `c = d`.
pub fn random_params_c_eq_d<R: Rng>(rng: &mut R) -> RParams {
    let p = random_params(rng);
    RParams::new(p.a, p.b, p.c, p.c).unwrap()
}

/// Classical word on `strands` strands with `len` letters.
pub fn random_classical<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands);
            Generator::classical(i, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

/// Classical word with random strand count in `2..=max_strands` and length in `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    random_classical(rng, n, len)
}

/// Word that may also contain virtual letters.
pub fn random_mixed_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands);
            match rng.gen_range(0..3) {
                0 => Generator::sigma(i),
                1 => Generator::sigma_inv(i),
                _ => Generator::virt(i),
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

pub fn random_state<R: Rng>(rng: &mut R, qubits: usize) -> QuantumState {
    let amps = (0..1usize << qubits)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    QuantumState::normalized(amps).unwrap()
}

/// Linking numbers by direct strand bookkeeping, independent of `ClosureData`:
/// follows each strand through the word, joins strands whose end position is
/// another strand's start, and sums crossing signs between distinct classes.
pub fn linking_matrix(word: &BraidWord) -> (usize, Vec<Vec<i64>>) {
    let n = word.strands();
    let mut pos_of: Vec<usize> = (0..n).collect(); // strand -> current position
    let mut crossings = Vec::new();
    for g in word.letters() {
        let i = g.index() - 1;
        let s = pos_of.iter().position(|&p| p == i).unwrap();
        let t = pos_of.iter().position(|&p| p == i + 1).unwrap();
        if !g.is_virtual() {
            crossings.push((g.sign() as i64, s, t));
        }
        pos_of[s] = i + 1;
        pos_of[t] = i;
    }
    // union strand s with the strand that starts where s ends
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (s, &t) in pos_of.iter().enumerate() {
        let (a, b) = (find(&mut parent, s), find(&mut parent, t));
        parent[a] = b;
    }
    let mut roots: Vec<usize> = (0..n).map(|s| find(&mut parent, s)).collect();
    let mut ids = roots.clone();
    ids.sort_unstable();
    ids.dedup();
    for r in roots.iter_mut() {
        *r = ids.iter().position(|x| x == r).unwrap();
    }
    let k = ids.len();
    let mut twice = vec![vec![0i64; k]; k];
    for (sign, s, t) in crossings {
        let (x, y) = (roots[s], roots[t]);
        if x != y {
            twice[x][y] += sign;
            twice[y][x] += sign;
        }
    }
    for row in twice.iter_mut() {
        for v in row.iter_mut() {
            assert_eq!(*v % 2, 0);
            *v /= 2;
        }
    }
    (k, twice)
}
