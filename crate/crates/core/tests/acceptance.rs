//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line.
//! Run with `cargo test -p braidq --test acceptance -- --nocapture --test-threads 1`.

mod common;

use std::time::{Duration, Instant};

use braidq::engine::{apply_word, dense_matrix, WordOperator};
use braidq::entanglement::{aravind_demo, lemma_demo, schmidt_rank, Bipartition, RANK_TOL};
use braidq::fixtures;
use braidq::laurent::LaurentValue;
use braidq::relations::{check_relation, relation_catalog};
use braidq::rmatrix::{build_r, build_r_from_m, check_unitary, check_yang_baxter};
use braidq::statesum::{
    bracket_naive, bracket_state_sum, bracket_via_trace, linking_law, sigma_zero_one, z_invariant,
    z_special,
};
use braidq::{BraidWord, Generator, QuantumState, RParams, C64};
use common::*;
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, ok: bool, detail: &str) {
    println!("[{}] criterion {id:>2}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {detail}");
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn c01_yang_baxter_and_unitarity() {
    let start = Instant::now();
    let mut r = rng(1);
    let (mut worst_u, mut worst_y) = (0.0f64, 0.0f64);
    for _ in 0..500 {
        let op = build_r(&random_params(&mut r)).unwrap();
        worst_u = worst_u.max(check_unitary(&op));
        worst_y = worst_y.max(check_yang_baxter(&op));
    }
    let t = start.elapsed();
    report(
        1,
        worst_u < 1e-12 && worst_y < 1e-12 && t < Duration::from_secs(5),
        &format!("500 draws, max unitary {worst_u:.2e}, max YBE {worst_y:.2e}, {t:.2?}"),
    );
}

#[test]
fn c02_general_m_construction() {
    let mut r = rng(2);
    let (mut worst_u, mut worst_y) = (0.0f64, 0.0f64);
    for k in 0..200 {
        let n = 2 + k % 3;
        let m = DMatrix::from_fn(n, n, |_, _| C64::from_polar(1.0, r.gen_range(-3.2..3.2)));
        let op = build_r_from_m(&m).unwrap();
        worst_u = worst_u.max(check_unitary(&op));
        worst_y = worst_y.max(check_yang_baxter(&op));
    }
    report(
        2,
        worst_u < 1e-12 && worst_y < 1e-12,
        &format!("200 unit M with n in {{2,3,4}}, max unitary {worst_u:.2e}, max YBE {worst_y:.2e}"),
    );
}

#[test]
fn c03_entanglement_lemma() {
    let start = Instant::now();
    let mut r = rng(3);
    let tol = 1e-9;
    let (mut mismatches, mut entangled, mut product) = (0, 0, 0);
    for k in 0..500 {
        let mut p = random_params(&mut r);
        if k % 5 == 0 {
            // force ab = cd
            p = RParams::new(p.a, p.b, p.c, p.a * p.b / p.c).unwrap();
        }
        let rep = lemma_demo(&p, tol).unwrap();
        let expect = p.entangling_gap().norm() > tol;
        let rank = schmidt_rank(&rep.state, &Bipartition::single(1, 2).unwrap(), RANK_TOL).unwrap();
        if rep.entangled != expect || (rank == 2) != rep.entangled {
            mismatches += 1;
        }
        if rep.entangled {
            entangled += 1;
        } else {
            product += 1;
        }
    }
    let t = start.elapsed();
    report(
        3,
        mismatches == 0 && t < Duration::from_secs(5),
        &format!("500 draws ({entangled} entangled, {product} product), {mismatches} disagreements, {t:.2?}"),
    );
}

const HOPF_BRACKET: &str = "1 a^2 b^0 c^0 Q^2 + 1 a^0 b^2 c^0 Q^-2 + 2 a^0 b^0 c^2 Q^0";

#[test]
fn c04_hopf_bracket_exact() {
    let b = bracket_state_sum(&fixtures::braid("hopf").unwrap()).unwrap();
    let expect = LaurentValue::from_terms([([2, 0, 0, 2], 1), ([0, 2, 0, -2], 1), ([0, 0, 2, 0], 2)]);
    report(
        4,
        b.to_string() == HOPF_BRACKET && b == expect,
        &format!("<Hopf> = {b}"),
    );
}

#[test]
fn c05_hopf_sigma_and_z() {
    let hopf = fixtures::braid("hopf").unwrap();
    let sigma = sigma_zero_one(&hopf).unwrap();
    let zs = z_special(&hopf).unwrap();
    let sigma_ok = sigma.to_string() == "2 a^2 b^0 c^0 Q^0 + 2 a^0 b^0 c^2 Q^0";
    let z_expect = &LaurentValue::constant(2) + &LaurentValue::monomial(2, [-2, 0, 2, 0]);
    // the normalized invariant with and without the a^-w factor
    let bracket = bracket_state_sum(&hopf).unwrap();
    let displayed = bracket.shift([0, 0, 0, -2]);
    let with_writhe = z_invariant(&hopf).unwrap();
    report(
        5,
        sigma_ok && zs == z_expect,
        &format!(
            "Sigma(H) = {sigma}; z_special = {zs}; Q^-2<H> = {displayed}; a^-w Q^-2<H> (b = aQ^2) = {with_writhe}"
        ),
    );
}

#[test]
fn c06_linking_number_law() {
    let start = Instant::now();
    let mut r = rng(6);
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut lks = std::collections::BTreeSet::new();
    while checked < 100 {
        let w = random_word(&mut r, 4, 8);
        let (k, lk) = linking_matrix(&w);
        if k != 2 {
            continue;
        }
        checked += 1;
        lks.insert(lk[0][1]);
        if z_special(&w).unwrap() != linking_law(lk[0][1]) {
            bad.push(w.to_string());
        }
    }
    let t = start.elapsed();
    report(
        6,
        bad.is_empty() && t < Duration::from_secs(30),
        &format!("100 two-component closures, lk values {lks:?}, failures {bad:?}, {t:.2?}"),
    );
}

#[test]
fn c07_whitehead_non_detection() {
    let wh = z_special(&fixtures::braid("whitehead").unwrap()).unwrap();
    let unlink = z_special(&fixtures::braid("unlink2").unwrap()).unwrap();
    report(
        7,
        wh == LaurentValue::constant(4) && unlink == wh,
        &format!("z_special(whitehead) = {wh}, z_special(unlink2) = {unlink}"),
    );
}

#[test]
fn c08_markov_invariance() {
    let start = Instant::now();
    let mut r = rng(8);
    let (mut conj_fail, mut stab_pos_fail, mut stab_neg_fail) = (0, 0, 0);
    let (mut pos, mut neg) = (0, 0);
    let mut first_failure = None;
    let mut worst_a_eq_b: f64 = 0.0;
    for _ in 0..200 {
        let w = random_word(&mut r, 4, 8);
        let z = z_invariant(&w).unwrap();

        let g = Generator::classical(r.gen_range(1..w.strands()), if r.gen_bool(0.5) { 1 } else { -1 });
        let c = w.conjugate(g).unwrap();
        if z_invariant(&c).unwrap() != z {
            conj_fail += 1;
        }

        let sign = if r.gen_bool(0.5) { 1 } else { -1 };
        let s = w.stabilize(sign);
        let zs = z_invariant(&s).unwrap();
        if sign == 1 {
            pos += 1;
        } else {
            neg += 1;
        }
        if sign == -1 {
            let t = r.gen_range(-3.0..3.0);
            let p = RParams::from_phases([t, t, r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0)]);
            worst_a_eq_b = worst_a_eq_b.max((z.eval(&p) - zs.eval(&p)).norm());
        }
        if zs != z {
            if sign == 1 {
                stab_pos_fail += 1;
            } else {
                stab_neg_fail += 1;
            }
            first_failure.get_or_insert_with(|| format!("{w} -> {s}: {z}  vs  {zs}"));
        }
    }
    let t = start.elapsed();
    println!(
        "           conjugation failures {conj_fail}/200; positive stabilization failures {stab_pos_fail}/{pos}; negative stabilization failures {stab_neg_fail}/{neg}"
    );
    println!("           negative stabilization evaluated at a = b: max |dZ| = {worst_a_eq_b:.2e}");
    if let Some(f) = &first_failure {
        println!("           first failure: {f}");
    }
    report(
        8,
        conj_fail + stab_pos_fail + stab_neg_fail == 0 && t < Duration::from_secs(60),
        &format!("200 random conjugations and stabilizations, exact equality, {t:.2?}"),
    );
}

#[test]
fn c09_trace_oracle_and_naive_enumerator() {
    let mut r = rng(9);
    let mut worst: f64 = 0.0;
    let mut words: Vec<BraidWord> = fixtures::all_braids().into_iter().map(|(_, w)| w).collect();
    for _ in 0..100 {
        words.push(random_word(&mut r, 4, 8));
    }
    for w in &words {
        let p = random_params_c_eq_d(&mut r);
        let exact = bracket_state_sum(w).unwrap().eval(&p);
        let trace = bracket_via_trace(w, &p).unwrap();
        worst = worst.max((exact - trace).norm());
    }

    let mut naive_words = words.clone();
    for len in 9..=12 {
        for _ in 0..3 {
            let n = r.gen_range(2..=4);
            naive_words.push(random_classical(&mut r, n, len));
        }
    }
    let mut naive_bad = 0;
    for w in &naive_words {
        if bracket_naive(w).unwrap() != bracket_state_sum(w).unwrap() {
            naive_bad += 1;
        }
    }
    report(
        9,
        worst < 1e-9 && naive_bad == 0,
        &format!(
            "{} words: max |trace - state sum| = {worst:.2e}; naive 3^m vs labeling on {} words (up to 12 crossings): {naive_bad} mismatches",
            words.len(),
            naive_words.len()
        ),
    );
}

#[test]
fn c10_ghz_basis_dependence() {
    let rep = aravind_demo().unwrap();
    let z_ranks: Vec<usize> = rep.z.iter().map(|o| o.schmidt_rank).collect();
    let x_ranks: Vec<usize> = rep.x.iter().map(|o| o.schmidt_rank).collect();
    let probs_ok = rep.z.iter().chain(&rep.x).all(|o| (o.probability - 0.5).abs() <= 1e-9);
    report(
        10,
        z_ranks == [1; 6] && x_ranks == [2; 6] && probs_ok,
        &format!("Z ranks {z_ranks:?}, X ranks {x_ranks:?}, probabilities 1/2: {probs_ok}"),
    );
}

#[test]
fn c11_virtual_relations() {
    let mut r = rng(11);
    let mut worst: f64 = 0.0;
    let mut instances = 0;
    let mut mixed = 0;
    let draws: Vec<RParams> = (0..50).map(|_| random_params(&mut r)).collect();
    for n in 2..=4 {
        for rel in relation_catalog(n) {
            instances += 1;
            if rel.name.to_string().starts_with("mixed") {
                mixed += 1;
            }
            assert_eq!(rel.lhs.permutation(), rel.rhs.permutation());
            for p in &draws {
                worst = worst.max(check_relation(&rel, p).unwrap());
            }
        }
    }
    report(
        11,
        worst < 1e-12,
        &format!("{instances} instances ({mixed} mixed) x 50 draws, max residual {worst:.2e}"),
    );
}

#[test]
fn c12_engine_equivalence() {
    let mut r = rng(12);
    let (mut worst, mut worst_norm) = (0.0f64, 0.0f64);
    for _ in 0..500 {
        let n = r.gen_range(2..=6);
        let len = r.gen_range(0..=12);
        let w = random_mixed_word(&mut r, n, len);
        let op = WordOperator::new(w, random_params(&mut r)).unwrap();
        let s = random_state(&mut r, n);
        let sparse = apply_word(&s, &op).unwrap();
        let dense = dense_matrix(&op).unwrap() * DVector::from_column_slice(s.amplitudes());
        let dense = QuantumState::new(dense.iter().copied().collect()).unwrap();
        worst = worst.max(sparse.distance(&dense));
        worst_norm = worst_norm.max((sparse.norm() - 1.0).abs());
    }
    report(
        12,
        worst < 1e-10 && worst_norm < 1e-9,
        &format!("500 words, n <= 6: max sparse/dense residual {worst:.2e}, max norm drift {worst_norm:.2e}"),
    );
}
