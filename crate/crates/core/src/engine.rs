//! The representation `sigma_k -> I ⊗ ... ⊗ R ⊗ ... ⊗ I` on n-qubit states.
//!
//! Basis index convention: qubit 1 is the most significant bit, so the ket
//! `|q1 q2 ... qn>` reads left to right like the binary index. Because `R`
//! is permutation-phase, a generator is applied by rewriting two bits of
//! each basis index and multiplying by a phase; no matrix is built.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{BraidWord, Generator};
use crate::error::{Error, Result};
use crate::rmatrix::{build_r, RParams, TwoSiteOperator};
use crate::C64;

/// Norm tolerance for states.
pub const NORM_TOL: f64 = 1e-9;

/// Largest qubit count accepted by [`dense_matrix`].
pub const DENSE_LIMIT: usize = 10;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// A unit-norm vector of `2^n` amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    qubits: usize,
    amps: Vec<C64>,
}

/// One amplitude as printed by the CLI.
#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct AmplitudeEntry {
    pub basis: String,
    pub re: f64,
    pub im: f64,
}

impl QuantumState {
    /// Rejects vectors whose length is not a power of two or whose norm is off by more than [`NORM_TOL`].
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        let qubits = qubits_for_len(amps.len())?;
        let n2: f64 = amps.iter().map(C64::norm_sqr).sum();
        if (n2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(n2));
        }
        Ok(Self { qubits, amps })
    }

    /// Scales to unit norm; the zero vector is rejected.
    pub fn normalized(amps: Vec<C64>) -> Result<Self> {
        let qubits = qubits_for_len(amps.len())?;
        let n = amps.iter().map(C64::norm_sqr).sum::<f64>().sqrt();
        if n == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        Ok(Self { qubits, amps: amps.into_iter().map(|z| z / n).collect() })
    }

    pub fn basis(qubits: usize, index: usize) -> Self {
        assert!(qubits >= 1 && index < 1 << qubits);
        let mut amps = vec![ZERO; 1 << qubits];
        amps[index] = ONE;
        Self { qubits, amps }
    }

    /// Basis state from a bit string such as `"010"`.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let index = parse_bits(bits)?;
        Ok(Self::basis(bits.len(), index))
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &QuantumState) -> QuantumState {
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for x in &self.amps {
            for y in &other.amps {
                amps.push(x * y);
            }
        }
        QuantumState { qubits: self.qubits + other.qubits, amps }
    }

    /// Entries of the form the CLI reads and writes, sorted by basis string.
    /// Zero amplitudes are skipped.
    pub fn entries(&self) -> Vec<AmplitudeEntry> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, z)| z.norm() > 0.0)
            .map(|(x, z)| AmplitudeEntry { basis: bit_string(x, self.qubits), re: z.re, im: z.im })
            .collect()
    }

    /// Builds a state from entries; unlisted basis states are zero.
    pub fn from_entries(entries: &[AmplitudeEntry]) -> Result<Self> {
        let first = entries.first().ok_or_else(|| Error::Invalid("no amplitudes given".into()))?;
        let qubits = first.basis.len();
        if qubits == 0 || qubits > 30 {
            return Err(Error::Invalid(format!("bad basis string {:?}", first.basis)));
        }
        let mut amps = vec![ZERO; 1 << qubits];
        for e in entries {
            if e.basis.len() != qubits {
                return Err(Error::Invalid(format!("basis {:?} has the wrong length", e.basis)));
            }
            amps[parse_bits(&e.basis)?] += C64::new(e.re, e.im);
        }
        Self::new(amps)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> C64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(C64::norm_sqr).sum::<f64>().sqrt()
    }

    /// Max-norm distance to another state of the same size.
    pub fn distance(&self, other: &QuantumState) -> f64 {
        assert_eq!(self.qubits, other.qubits);
        self.amps.iter().zip(&other.amps).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    pub(crate) fn from_raw(qubits: usize, amps: Vec<C64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << qubits);
        Self { qubits, amps }
    }
}

impl Serialize for QuantumState {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(ser)
    }
}

fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::Invalid(format!("amplitude count {len} is not 2^n with n >= 1")));
    }
    Ok(len.trailing_zeros() as usize)
}

fn parse_bits(bits: &str) -> Result<usize> {
    if bits.is_empty() || bits.len() > 30 || !bits.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::Invalid(format!("bad basis string {bits:?}")));
    }
    Ok(usize::from_str_radix(bits, 2).expect("checked binary digits"))
}

pub fn bit_string(index: usize, qubits: usize) -> String {
    format!("{index:0qubits$b}")
}

/// A braid word together with the parameters of its representation.
#[derive(Debug, Clone)]
pub struct WordOperator {
    word: BraidWord,
    params: RParams,
    r: TwoSiteOperator,
    r_inv: TwoSiteOperator,
}

impl WordOperator {
    pub fn new(word: BraidWord, params: RParams) -> Result<Self> {
        let r = build_r(&params)?;
        let r_inv = r.inverse().expect("permutation-phase operators invert");
        Ok(Self { word, params, r, r_inv })
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn params(&self) -> &RParams {
        &self.params
    }

    pub fn qubits(&self) -> usize {
        self.word.strands()
    }

    fn local(&self, g: &Generator) -> Option<&TwoSiteOperator> {
        match (g.is_virtual(), g.sign()) {
            (true, _) => None,
            (false, 1) => Some(&self.r),
            (false, _) => Some(&self.r_inv),
        }
    }

    /// Image of basis state `x` under the whole word: a single basis state with a phase.
    pub fn basis_image(&self, x: usize) -> (usize, C64) {
        let n = self.qubits();
        let mut idx = x;
        let mut phase = ONE;
        for g in self.word.letters() {
            let (next, z) = map_basis(idx, n, g.index(), self.local(g));
            idx = next;
            phase *= z;
        }
        (idx, phase)
    }

    fn check_state(&self, s: &QuantumState) -> Result<()> {
        if s.qubits() != self.qubits() {
            return Err(Error::QubitCount { expected: self.qubits(), actual: s.qubits() });
        }
        Ok(())
    }
}

/// Rewrites bits of qubits `k, k+1` (1-based) of basis index `x`.
/// `op = None` is the swap used for virtual generators.
fn map_basis(x: usize, n: usize, k: usize, op: Option<&TwoSiteOperator>) -> (usize, C64) {
    let hi = n - k; // bit offset of qubit k
    let lo = hi - 1; // bit offset of qubit k+1
    let local = (((x >> hi) & 1) << 1) | ((x >> lo) & 1);
    let (out, z) = match op {
        Some(op) => op.column(local).expect("permutation-phase operator"),
        None => (((local & 1) << 1) | (local >> 1), ONE),
    };
    let cleared = x & !((1 << hi) | (1 << lo));
    (cleared | ((out >> 1) << hi) | ((out & 1) << lo), z)
}

fn apply_local(s: &QuantumState, k: usize, op: Option<&TwoSiteOperator>) -> QuantumState {
    let n = s.qubits();
    let mut out = vec![ZERO; s.amps.len()];
    for (x, &amp) in s.amps.iter().enumerate() {
        if amp == ZERO {
            continue;
        }
        let (y, z) = map_basis(x, n, k, op);
        out[y] = z * amp;
    }
    QuantumState::from_raw(n, out)
}

/// Applies one generator: `R` (or `R^-1`) on qubits `k, k+1`, or a bit swap for virtual letters.
pub fn apply_generator(s: &QuantumState, g: Generator, p: &RParams) -> Result<QuantumState> {
    if g.index() >= s.qubits() {
        return Err(Error::GeneratorOutOfRange { index: g.index(), strands: s.qubits() });
    }
    if g.is_virtual() {
        return Ok(apply_local(s, g.index(), None));
    }
    let r = build_r(p)?;
    let op = if g.sign() == 1 { r } else { r.inverse().expect("invertible") };
    Ok(apply_local(s, g.index(), Some(&op)))
}

/// Applies the letters of the word left to right.
pub fn apply_word(s: &QuantumState, op: &WordOperator) -> Result<QuantumState> {
    op.check_state(s)?;
    let mut cur = s.clone();
    for g in op.word.letters() {
        cur = apply_local(&cur, g.index(), op.local(g));
    }
    Ok(cur)
}

/// Explicit `2^n x 2^n` matrix of the word, built from Kronecker products.
pub fn dense_matrix(op: &WordOperator) -> Result<DMatrix<C64>> {
    let n = op.qubits();
    if n > DENSE_LIMIT {
        return Err(Error::TooLarge { qubits: n, limit: DENSE_LIMIT });
    }
    let dim = 1usize << n;
    let swap = crate::rmatrix::build_p().to_dense();
    let mut total = DMatrix::<C64>::identity(dim, dim);
    for g in op.word.letters() {
        let k = g.index();
        let local = match op.local(g) {
            Some(t) => t.to_dense(),
            None => swap.clone(),
        };
        let left = DMatrix::<C64>::identity(1 << (k - 1), 1 << (k - 1));
        let right = DMatrix::<C64>::identity(1 << (n - k - 1), 1 << (n - k - 1));
        let full = left.kronecker(&local).kronecker(&right);
        total = full * total;
    }
    Ok(total)
}

/// `sum_x (prod_k mu[k][bit_k(x)]) <x| word |x>`, one weight pair per qubit.
///
/// Each basis state is pushed through the word on its own, so the cost is
/// `O(2^n · len)`. Basis states are split into fixed chunks and the partial
/// sums are added in chunk order, so the result does not depend on scheduling.
pub fn weighted_trace(op: &WordOperator, mu: &[[C64; 2]]) -> Result<C64> {
    let n = op.qubits();
    if mu.len() != n {
        return Err(Error::QubitCount { expected: n, actual: mu.len() });
    }
    const CHUNK: usize = 1 << 10;
    let total = 1usize << n;
    let chunks: Vec<C64> = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut acc = ZERO;
            for x in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let (y, z) = op.basis_image(x);
                if y != x {
                    continue;
                }
                let mut w = z;
                for (k, m) in mu.iter().enumerate() {
                    w *= m[(x >> (n - 1 - k)) & 1];
                }
                acc += w;
            }
            acc
        })
        .collect();
    Ok(chunks.into_iter().fold(ZERO, |a, b| a + b))
}
