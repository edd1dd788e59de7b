//! Entanglement detection: the two-qubit determinant test, Schmidt rank
//! across a bipartition, single-qubit measurement, and the GHZ demos.
//!
//! Basis convention for the GHZ state: spin up is `|0>`, spin down is `|1>`.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::engine::{apply_word, QuantumState, WordOperator};
use crate::error::{Error, Result};
use crate::rmatrix::RParams;
use crate::{BraidWord, C64};

/// Relative cutoff for counting singular values.
pub const RANK_TOL: f64 = 1e-9;

const PROB_TOL: f64 = 1e-9;

/// A nonempty proper subset of qubit positions (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    left: Vec<usize>,
    qubits: usize,
}

impl Bipartition {
    pub fn new(left: &[usize], qubits: usize) -> Result<Self> {
        let mut left = left.to_vec();
        left.sort_unstable();
        left.dedup();
        if left.is_empty() || left.len() >= qubits {
            return Err(Error::InvalidCut(format!("{left:?} is not a nonempty proper subset of 1..={qubits}")));
        }
        if let Some(&q) = left.iter().find(|&&q| q == 0 || q > qubits) {
            return Err(Error::InvalidCut(format!("qubit {q} not in 1..={qubits}")));
        }
        Ok(Self { left, qubits })
    }

    /// `{q} | rest`.
    pub fn single(q: usize, qubits: usize) -> Result<Self> {
        Self::new(&[q], qubits)
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> Vec<usize> {
        (1..=self.qubits).filter(|q| !self.left.contains(q)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProductTest {
    pub entangled: bool,
    pub discriminant: C64,
}

/// For `X|00> + Y|01> + Z|10> + W|11>`, the discriminant is `XW - YZ`; the
/// state is a product exactly when it vanishes.
pub fn product_test_2q(s: &QuantumState, tol: f64) -> Result<ProductTest> {
    if s.qubits() != 2 {
        return Err(Error::QubitCount { expected: 2, actual: s.qubits() });
    }
    let [x, y, z, w] = [0, 1, 2, 3].map(|i| s.amplitude(i));
    let discriminant = x * w - y * z;
    Ok(ProductTest { entangled: discriminant.norm() > tol, discriminant })
}

/// Amplitudes reshaped into a `2^|left| x 2^|right|` matrix.
fn reshape(s: &QuantumState, cut: &Bipartition) -> DMatrix<C64> {
    let n = s.qubits();
    let left = cut.left();
    let right = cut.right();
    let sub_index = |x: usize, qs: &[usize]| {
        qs.iter().fold(0usize, |acc, &q| (acc << 1) | ((x >> (n - q)) & 1))
    };
    let mut m = DMatrix::zeros(1 << left.len(), 1 << right.len());
    for (x, &z) in s.amplitudes().iter().enumerate() {
        m[(sub_index(x, left), sub_index(x, &right))] = z;
    }
    m
}

/// Number of singular values above `tol` times the largest.
pub fn schmidt_rank(s: &QuantumState, cut: &Bipartition, tol: f64) -> Result<usize> {
    if cut.qubits != s.qubits() {
        return Err(Error::InvalidCut(format!(
            "cut is for {} qubits, state has {}",
            cut.qubits,
            s.qubits()
        )));
    }
    let sv = reshape(s, cut).singular_values();
    let top = sv.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&v| v > tol * top).count())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaReport {
    pub params: RParams,
    /// `ab - cd`.
    pub gap: C64,
    pub discriminant: C64,
    pub entangled: bool,
    pub schmidt_rank: usize,
    pub state: QuantumState,
}

/// `(|0> + |1>)/sqrt 2`.
pub fn plus_state() -> QuantumState {
    QuantumState::normalized(vec![C64::new(1.0, 0.0); 2]).expect("nonzero")
}

/// Applies `R` to `psi ⊗ psi` with `psi ∝ |0> + |1>` and tests the result.
///
/// The discriminant of the output is exactly `(ab - cd)/4`, so the product
/// test runs at `tol / 4` and the verdict matches `|ab - cd| > tol`.
pub fn lemma_demo(p: &RParams, tol: f64) -> Result<LemmaReport> {
    let psi = plus_state();
    let op = WordOperator::new(BraidWord::parse("B2; s1")?, *p)?;
    let state = apply_word(&psi.tensor(&psi), &op)?;
    let test = product_test_2q(&state, tol / 4.0)?;
    let rank = schmidt_rank(&state, &Bipartition::single(1, 2)?, RANK_TOL)?;
    let gap = p.entangling_gap();
    if test.entangled != (gap.norm() > tol) {
        return Err(Error::Assertion(format!(
            "product test says entangled = {} but |ab - cd| = {:e}",
            test.entangled,
            gap.norm()
        )));
    }
    Ok(LemmaReport {
        params: *p,
        gap,
        discriminant: test.discriminant,
        entangled: test.entangled,
        schmidt_rank: rank,
        state,
    })
}

/// `(|000> - |111>)/sqrt 2`.
pub fn ghz_state() -> QuantumState {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![C64::new(0.0, 0.0); 8];
    amps[0b000] = C64::new(h, 0.0);
    amps[0b111] = C64::new(-h, 0.0);
    QuantumState::new(amps).expect("unit norm")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MeasureBasis {
    Z,
    X,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasurementRecord {
    pub qubit: usize,
    pub basis: MeasureBasis,
    pub outcome: u8,
    pub probability: f64,
    /// `None` when the outcome has zero probability.
    pub post_state: Option<QuantumState>,
}

impl MeasurementRecord {
    pub fn is_empty(&self) -> bool {
        self.post_state.is_none()
    }
}

/// Projects `qubit` onto both outcomes of `basis`. In the X basis outcome 0
/// is `(|0> + |1>)/sqrt 2` and outcome 1 is `(|0> - |1>)/sqrt 2`.
pub fn measure_qubit(s: &QuantumState, qubit: usize, basis: MeasureBasis) -> Result<[MeasurementRecord; 2]> {
    let n = s.qubits();
    if n < 2 {
        return Err(Error::QubitCount { expected: 2, actual: n });
    }
    if qubit == 0 || qubit > n {
        return Err(Error::QubitOutOfRange { qubit, qubits: n });
    }
    let shift = n - qubit;
    let low_mask = (1usize << shift) - 1;
    // index of the remaining qubits -> full indices with the measured bit 0 / 1
    let split = |rest: usize| {
        let base = ((rest & !low_mask) << 1) | (rest & low_mask);
        (base, base | (1 << shift))
    };
    let h = std::f64::consts::FRAC_1_SQRT_2;

    let record = |outcome: u8| {
        let amps: Vec<C64> = (0..1usize << (n - 1))
            .map(|rest| {
                let (i0, i1) = split(rest);
                let (z0, z1) = (s.amplitude(i0), s.amplitude(i1));
                match (basis, outcome) {
                    (MeasureBasis::Z, 0) => z0,
                    (MeasureBasis::Z, _) => z1,
                    (MeasureBasis::X, 0) => (z0 + z1) * h,
                    (MeasureBasis::X, _) => (z0 - z1) * h,
                }
            })
            .collect();
        let probability: f64 = amps.iter().map(C64::norm_sqr).sum();
        let post_state = if probability > PROB_TOL * PROB_TOL {
            Some(QuantumState::normalized(amps).expect("nonzero"))
        } else {
            None
        };
        MeasurementRecord { qubit, basis, outcome, probability, post_state }
    };
    Ok([record(0), record(1)])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeSummary {
    pub qubit: usize,
    pub outcome: u8,
    pub probability: f64,
    pub schmidt_rank: usize,
    pub post_state: Option<QuantumState>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AravindReport {
    pub state: QuantumState,
    pub z: Vec<OutcomeSummary>,
    pub x: Vec<OutcomeSummary>,
    pub z_all_product: bool,
    pub x_all_entangled: bool,
    pub probabilities_half: bool,
}

fn section(s: &QuantumState, basis: MeasureBasis) -> Result<Vec<OutcomeSummary>> {
    let mut out = Vec::new();
    for q in 1..=s.qubits() {
        for r in measure_qubit(s, q, basis)? {
            let schmidt_rank = match &r.post_state {
                Some(p) => schmidt_rank(p, &Bipartition::single(1, p.qubits())?, RANK_TOL)?,
                None => 0,
            };
            out.push(OutcomeSummary {
                qubit: q,
                outcome: r.outcome,
                probability: r.probability,
                schmidt_rank,
                post_state: r.post_state,
            });
        }
    }
    Ok(out)
}

/// Measures each GHZ qubit in Z and in X. Z outcomes leave product states,
/// X outcomes leave entangled pairs.
pub fn aravind_demo() -> Result<AravindReport> {
    let state = ghz_state();
    let z = section(&state, MeasureBasis::Z)?;
    let x = section(&state, MeasureBasis::X)?;
    let z_all_product = z.iter().all(|r| r.schmidt_rank == 1);
    let x_all_entangled = x.iter().all(|r| r.schmidt_rank == 2);
    let probabilities_half = z.iter().chain(&x).all(|r| (r.probability - 0.5).abs() <= PROB_TOL);
    if !(z_all_product && x_all_entangled && probabilities_half) {
        return Err(Error::Assertion(format!(
            "GHZ measurement: z_all_product={z_all_product} x_all_entangled={x_all_entangled} probabilities_half={probabilities_half}"
        )));
    }
    Ok(AravindReport { state, z, x, z_all_product, x_all_entangled, probabilities_half })
}
