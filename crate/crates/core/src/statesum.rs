//! State sums over closed braids built from the braiding operator with `c = d`.
//!
//! Each classical crossing is resolved as parallel arcs labelled 0 (weight
//! `a`), parallel arcs labelled 1 (weight `b`), or crossed arcs carrying
//! distinct labels (weight `c`); negative crossings use the inverse weights.
//! A loop of the resolved diagram that runs `L` times around the braid axis
//! contributes `Q^L` when labelled 0 and `Q^-L` when labelled 1.
//!
//! Labels are constant along braid strands in every admissible state, so the
//! admissible states are exactly the 0/1 labelings of the closure's
//! components. [`bracket_state_sum`] enumerates those; [`bracket_naive`]
//! enumerates all `3^m` smoothings and is kept as an independent check.

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{cycles, BraidWord, Crossing};
use crate::engine::{weighted_trace, WordOperator};
use crate::error::{Error, Result};
use crate::laurent::LaurentValue;
use crate::rmatrix::RParams;
use crate::C64;

/// Tolerance for the `c = d` precondition of [`bracket_via_trace`].
pub const C_EQ_D_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Smoothing {
    Parallel0,
    Parallel1,
    Crossed,
}

/// A closed loop of a resolved diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Loop {
    pub label: u8,
    /// Signed number of turns around the braid axis.
    pub turn: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothingState {
    pub choices: Vec<Smoothing>,
    pub loops: Vec<Loop>,
}

impl SmoothingState {
    /// Product of crossing weights and loop evaluations.
    pub fn weight(&self, crossings: &[Crossing]) -> LaurentValue {
        let mut exps = [0i32; 4];
        for (c, s) in crossings.iter().zip(&self.choices) {
            let slot = match s {
                Smoothing::Parallel0 => 0,
                Smoothing::Parallel1 => 1,
                Smoothing::Crossed => 2,
            };
            exps[slot] += i32::from(c.sign);
        }
        for l in &self.loops {
            exps[3] += if l.label == 0 { l.turn } else { -l.turn };
        }
        LaurentValue::monomial(1, exps)
    }
}

fn classical_only(word: &BraidWord, what: &'static str) -> Result<()> {
    if word.has_virtual() {
        return Err(Error::VirtualLetters(what));
    }
    Ok(())
}

/// Loops of the diagram obtained by keeping crossed sites and opening the rest.
/// Returns the loop id of every starting position and the loop lengths.
fn resolve(strands: usize, crossings: &[Crossing], choices: &[Smoothing]) -> (Vec<usize>, Vec<usize>) {
    let mut at: Vec<usize> = (0..strands).collect();
    for (c, s) in crossings.iter().zip(choices) {
        if *s == Smoothing::Crossed {
            at.swap(c.position, c.position + 1);
        }
    }
    let mut end = vec![0; strands];
    for (q, &p) in at.iter().enumerate() {
        end[p] = q;
    }
    let loops = cycles(&end);
    let mut loop_of = vec![0; strands];
    for (k, l) in loops.iter().enumerate() {
        for &p in l {
            loop_of[p] = k;
        }
    }
    (loop_of, loops.iter().map(Vec::len).collect())
}

/// The admissible state determined by a labeling of closure components.
pub fn state_for_labeling(word: &BraidWord, component_labels: &[u8]) -> SmoothingState {
    let data = word.closure_data();
    let comp = data.component_of();
    assert_eq!(component_labels.len(), data.component_count());
    let strand_label = |s: usize| component_labels[comp[s]];

    let crossings = word.crossings();
    let choices: Vec<Smoothing> = crossings
        .iter()
        .map(|c| match (strand_label(c.left), strand_label(c.right)) {
            (0, 0) => Smoothing::Parallel0,
            (1, 1) => Smoothing::Parallel1,
            _ => Smoothing::Crossed,
        })
        .collect();

    let (loop_of, lengths) = resolve(word.strands(), &crossings, &choices);
    let mut loops = vec![Loop { label: 0, turn: 0 }; lengths.len()];
    for p in 0..word.strands() {
        let l = &mut loops[loop_of[p]];
        l.label = strand_label(p);
        l.turn = lengths[loop_of[p]] as i32;
    }
    SmoothingState { choices, loops }
}

fn labeling(mask: u64, count: usize) -> Vec<u8> {
    (0..count).map(|k| ((mask >> k) & 1) as u8).collect()
}

/// All admissible states, one per labeling of the closure components.
pub fn admissible_states(word: &BraidWord) -> Result<Vec<SmoothingState>> {
    classical_only(word, "the bracket")?;
    let k = word.closure_data().component_count();
    Ok((0..1u64 << k).map(|m| state_for_labeling(word, &labeling(m, k))).collect())
}

/// The bracket `<K>` of the closure of `word`.
pub fn bracket_state_sum(word: &BraidWord) -> Result<LaurentValue> {
    classical_only(word, "the bracket")?;
    let crossings = word.crossings();
    let k = word.closure_data().component_count();
    let parts: Vec<LaurentValue> = (0..1u64 << k)
        .into_par_iter()
        .map(|m| state_for_labeling(word, &labeling(m, k)).weight(&crossings))
        .collect();
    Ok(parts.into_iter().sum())
}

/// The bracket by brute force over all `3^m` smoothing choices, each followed
/// by every labeling of its loops that satisfies the local constraints.
pub fn bracket_naive(word: &BraidWord) -> Result<LaurentValue> {
    classical_only(word, "the bracket")?;
    let crossings = word.crossings();
    let m = crossings.len();
    let n = word.strands();
    let total = 3u64.checked_pow(m as u32).ok_or_else(|| Error::Invalid("too many crossings".into()))?;

    let parts: Vec<LaurentValue> = (0..total)
        .into_par_iter()
        .map(|code| {
            let mut choices = Vec::with_capacity(m);
            let mut c = code;
            for _ in 0..m {
                choices.push(match c % 3 {
                    0 => Smoothing::Parallel0,
                    1 => Smoothing::Parallel1,
                    _ => Smoothing::Crossed,
                });
                c /= 3;
            }
            let (loop_of, lengths) = resolve(n, &crossings, &choices);

            // loop ids of the two arcs at every site
            let mut arcs: Vec<usize> = (0..n).collect();
            let mut sites = Vec::with_capacity(m);
            for (x, s) in crossings.iter().zip(&choices) {
                let i = x.position;
                sites.push((*s, loop_of[arcs[i]], loop_of[arcs[i + 1]]));
                if *s == Smoothing::Crossed {
                    arcs.swap(i, i + 1);
                }
            }

            let mut sum = LaurentValue::zero();
            for mask in 0..1u64 << lengths.len() {
                let label = |l: usize| ((mask >> l) & 1) as u8;
                let ok = sites.iter().all(|&(s, l, r)| match s {
                    Smoothing::Parallel0 => label(l) == 0 && label(r) == 0,
                    Smoothing::Parallel1 => label(l) == 1 && label(r) == 1,
                    Smoothing::Crossed => label(l) != label(r),
                });
                if ok {
                    let loops = lengths
                        .iter()
                        .enumerate()
                        .map(|(k, &len)| Loop { label: label(k), turn: len as i32 })
                        .collect();
                    let state = SmoothingState { choices: choices.clone(), loops };
                    sum += &state.weight(&crossings);
                }
            }
            sum
        })
        .collect();
    Ok(parts.into_iter().sum())
}

/// `Z = a^{-w} Q^{-rot} <K>`, reduced modulo `b = a Q^2`.
pub fn z_invariant(word: &BraidWord) -> Result<LaurentValue> {
    let bracket = bracket_state_sum(word)?;
    let data = word.closure_data();
    let w = data.writhe as i32;
    let rot = data.rot()? as i32;
    Ok(bracket.shift([-w, 0, 0, -rot]).eliminate_b())
}

/// Sum over 0/1 labelings of the closure components of the products of
/// vertex weights: equal labels give `a`, distinct labels give `c`, inverted
/// at negative crossings.
pub fn sigma_zero_one(word: &BraidWord) -> Result<LaurentValue> {
    classical_only(word, "the zero-one state sum")?;
    let data = word.closure_data();
    let comp = data.component_of();
    let k = data.component_count();
    let crossings = word.crossings();
    let mut sum = LaurentValue::zero();
    for mask in 0..1u64 << k {
        let label = |s: usize| (mask >> comp[s]) & 1;
        let mut exps = [0i32; 4];
        for c in &crossings {
            let slot = if label(c.left) == label(c.right) { 0 } else { 2 };
            exps[slot] += i32::from(c.sign);
        }
        sum.add_term(exps, 1);
    }
    Ok(sum)
}

/// `a^{-w} Σ(K)`, the `a = b` specialization of the invariant.
pub fn z_special(word: &BraidWord) -> Result<LaurentValue> {
    let sigma = sigma_zero_one(word)?;
    let w = word.closure_data().writhe as i32;
    Ok(sigma.shift([-w, 0, 0, 0]))
}

/// `2 (1 + (c^2/a^2)^lk)`.
pub fn linking_law(lk: i64) -> LaurentValue {
    let e = 2 * lk as i32;
    &LaurentValue::constant(2) + &LaurentValue::monomial(2, [-e, 0, e, 0])
}

/// Numeric bracket as the trace of the braid representation with per-qubit
/// weights `(Q, 1/Q)`. Requires `c = d`.
pub fn bracket_via_trace(word: &BraidWord, p: &RParams) -> Result<C64> {
    classical_only(word, "the trace bracket")?;
    let gap = (p.c - p.d).norm();
    if gap > C_EQ_D_TOL {
        return Err(Error::CNotEqualD(gap));
    }
    let q = p.q();
    let op = WordOperator::new(word.clone(), *p)?;
    weighted_trace(&op, &vec![[q, q.inv()]; word.strands()])
}
