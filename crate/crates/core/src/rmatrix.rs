//! The braiding operator `R`, the swap `P` and the phase gate `tau`.
//!
//! `R` acts on two sites of local dimension 2 by
//! `R|00> = a|00>`, `R|01> = c|10>`, `R|10> = d|01>`, `R|11> = b|11>`.
//! More generally, for an `n x n` matrix `M` of unit-modulus entries,
//! `R|kl> = M[l][k] |lk>`. Both are permutation-phase operators: each basis
//! column has exactly one nonzero entry, of unit modulus.

use log::warn;
use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::C64;

/// Unit-modulus tolerance used when validating parameters.
pub const UNIT_TOL: f64 = 1e-9;

/// What to do with a parameter off the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validation {
    #[default]
    Reject,
    Warn,
}

/// The four phases `(a, b, c, d)` defining `R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RParams {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl RParams {
    /// Validated constructor.
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        let p = Self { a, b, c, d };
        p.validate()?;
        Ok(p)
    }

    /// Skips the unit-circle check.
    pub fn new_unchecked(a: C64, b: C64, c: C64, d: C64) -> Self {
        Self { a, b, c, d }
    }

    /// `a = e^{i theta_a}` and so on; unit modulus by construction.
    pub fn from_phases(theta: [f64; 4]) -> Self {
        let [ta, tb, tc, td] = theta;
        Self {
            a: C64::from_polar(1.0, ta),
            b: C64::from_polar(1.0, tb),
            c: C64::from_polar(1.0, tc),
            d: C64::from_polar(1.0, td),
        }
    }

    pub fn ones() -> Self {
        Self::from_phases([0.0; 4])
    }

    pub fn validate(&self) -> Result<()> {
        for (name, z) in self.named() {
            if (z.norm() - 1.0).abs() > UNIT_TOL {
                return Err(Error::NonUnitParameter { name: name.into(), modulus: z.norm() });
            }
        }
        Ok(())
    }

    fn named(&self) -> [(&'static str, C64); 4] {
        [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d)]
    }

    /// Principal square root of `b/a`.
    pub fn q(&self) -> C64 {
        (self.b / self.a).sqrt()
    }

    /// `ab - cd`; zero exactly when `R(psi ⊗ psi)` is a product state.
    pub fn entangling_gap(&self) -> C64 {
        self.a * self.b - self.c * self.d
    }

    /// Parameters of `R^-1` in the same layout: `(1/a, 1/b, 1/d, 1/c)`.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.inv(),
            b: self.b.inv(),
            c: self.d.inv(),
            d: self.c.inv(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    /// `cols[k] = (row, phase)`.
    PermPhase(Vec<(usize, C64)>),
    Dense(DMatrix<C64>),
}

/// A linear operator on `C^dim ⊗ C^dim`, basis index `i * dim + j` for `|ij>`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSiteOperator {
    dim: usize,
    repr: Repr,
}

impl TwoSiteOperator {
    pub fn identity(dim: usize) -> Self {
        let cols = (0..dim * dim).map(|k| (k, C64::new(1.0, 0.0))).collect();
        Self { dim, repr: Repr::PermPhase(cols) }
    }

    /// From `(row, phase)` per column. Panics if the rows are not a permutation.
    pub fn from_perm_phase(dim: usize, cols: Vec<(usize, C64)>) -> Self {
        assert_eq!(cols.len(), dim * dim, "need one entry per basis column");
        let mut hit = vec![false; cols.len()];
        for &(r, _) in &cols {
            assert!(r < cols.len() && !hit[r], "rows must form a permutation");
            hit[r] = true;
        }
        Self { dim, repr: Repr::PermPhase(cols) }
    }

    /// From a dense `dim^2 x dim^2` matrix.
    pub fn from_dense(dim: usize, m: DMatrix<C64>) -> Self {
        assert_eq!(m.shape(), (dim * dim, dim * dim));
        Self { dim, repr: Repr::Dense(m) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Side length of the matrix, `dim^2`.
    pub fn size(&self) -> usize {
        self.dim * self.dim
    }

    pub fn is_perm_phase(&self) -> bool {
        matches!(self.repr, Repr::PermPhase(_))
    }

    /// Image of basis column `k` as `(row, phase)`, for permutation-phase operators.
    pub fn column(&self, k: usize) -> Option<(usize, C64)> {
        match &self.repr {
            Repr::PermPhase(cols) => cols.get(k).copied(),
            Repr::Dense(_) => None,
        }
    }

    pub fn columns(&self) -> Option<&[(usize, C64)]> {
        match &self.repr {
            Repr::PermPhase(cols) => Some(cols),
            Repr::Dense(_) => None,
        }
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        match &self.repr {
            Repr::Dense(m) => m.clone(),
            Repr::PermPhase(cols) => {
                let n = cols.len();
                let mut m = DMatrix::zeros(n, n);
                for (k, &(r, z)) in cols.iter().enumerate() {
                    m[(r, k)] = z;
                }
                m
            }
        }
    }

    /// Exact inverse of a permutation-phase operator; dense operators are
    /// inverted numerically and `None` is returned when singular.
    pub fn inverse(&self) -> Option<Self> {
        match &self.repr {
            Repr::PermPhase(cols) => {
                let mut inv = vec![(0, C64::new(0.0, 0.0)); cols.len()];
                for (k, &(r, z)) in cols.iter().enumerate() {
                    inv[r] = (k, z.inv());
                }
                Some(Self { dim: self.dim, repr: Repr::PermPhase(inv) })
            }
            Repr::Dense(m) => m.clone().try_inverse().map(|m| Self::from_dense(self.dim, m)),
        }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "local dimensions differ");
        match (&self.repr, &other.repr) {
            (Repr::PermPhase(lhs), Repr::PermPhase(rhs)) => {
                let cols = rhs
                    .iter()
                    .map(|&(mid, z)| {
                        let (r, w) = lhs[mid];
                        (r, w * z)
                    })
                    .collect();
                Self { dim: self.dim, repr: Repr::PermPhase(cols) }
            }
            _ => Self::from_dense(self.dim, self.to_dense() * other.to_dense()),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        match &self.repr {
            Repr::PermPhase(cols) => cols.iter().enumerate().all(|(k, &(r, _))| k == r),
            Repr::Dense(m) => (0..m.nrows())
                .all(|i| (0..m.ncols()).all(|j| i == j || m[(i, j)].norm() == 0.0)),
        }
    }
}

fn check(p: &RParams, policy: Validation) -> Result<()> {
    match (p.validate(), policy) {
        (Ok(()), _) => Ok(()),
        (Err(e), Validation::Reject) => Err(e),
        (Err(e), Validation::Warn) => {
            warn!("{e}");
            Ok(())
        }
    }
}

/// `R` with the default (rejecting) validation.
pub fn build_r(p: &RParams) -> Result<TwoSiteOperator> {
    build_r_with(p, Validation::Reject)
}

pub fn build_r_with(p: &RParams, policy: Validation) -> Result<TwoSiteOperator> {
    check(p, policy)?;
    // columns |00>, |01>, |10>, |11>
    Ok(TwoSiteOperator::from_perm_phase(2, vec![(0, p.a), (2, p.c), (1, p.d), (3, p.b)]))
}

/// `R|kl> = M[l][k] |lk>` for a square matrix `M` of unit-modulus entries.
pub fn build_r_from_m(m: &DMatrix<C64>) -> Result<TwoSiteOperator> {
    let n = m.nrows();
    if n != m.ncols() || n < 2 {
        return Err(Error::Invalid(format!("M must be square with side >= 2, got {:?}", m.shape())));
    }
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            if (z.norm() - 1.0).abs() > UNIT_TOL {
                return Err(Error::NonUnitParameter { name: format!("M[{i}][{j}]"), modulus: z.norm() });
            }
        }
    }
    let mut cols = Vec::with_capacity(n * n);
    for k in 0..n {
        for l in 0..n {
            cols.push((l * n + k, m[(l, k)]));
        }
    }
    Ok(TwoSiteOperator::from_perm_phase(n, cols))
}

/// The swap on two qubits.
pub fn build_p() -> TwoSiteOperator {
    let one = C64::new(1.0, 0.0);
    TwoSiteOperator::from_perm_phase(2, vec![(0, one), (2, one), (1, one), (3, one)])
}

/// The phase gate `diag(a, c, d, b)`. It satisfies `R = P · tau`.
pub fn build_tau(p: &RParams) -> Result<TwoSiteOperator> {
    check(p, Validation::Reject)?;
    Ok(TwoSiteOperator::from_perm_phase(2, vec![(0, p.a), (1, p.c), (2, p.d), (3, p.b)]))
}

/// Max-norm residual `|op† op - I|`.
pub fn check_unitary(op: &TwoSiteOperator) -> f64 {
    let m = op.to_dense();
    let g = m.adjoint() * &m;
    max_abs_diff(&g, &DMatrix::identity(m.nrows(), m.ncols()))
}

/// Max-norm residual of `(R⊗I)(I⊗R)(R⊗I) - (I⊗R)(R⊗I)(I⊗R)`.
pub fn check_yang_baxter(op: &TwoSiteOperator) -> f64 {
    let r = op.to_dense();
    let id = DMatrix::<C64>::identity(op.dim(), op.dim());
    let r1 = r.kronecker(&id);
    let r2 = id.kronecker(&r);
    let lhs = &r1 * &r2 * &r1;
    let rhs = &r2 * &r1 * &r2;
    max_abs_diff(&lhs, &rhs)
}

pub fn max_abs_diff(x: &DMatrix<C64>, y: &DMatrix<C64>) -> f64 {
    assert_eq!(x.shape(), y.shape());
    x.iter().zip(y.iter()).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max)
}
