//! Defining relations of the virtual braid group, checked in the
//! representation `s_i -> R`, `v_i -> P` on qubits `i, i+1`.

use std::fmt;

use serde::Serialize;

use crate::braid::{BraidWord, Generator};
use crate::engine::{dense_matrix, WordOperator};
use crate::error::{Error, Result};
use crate::rmatrix::{max_abs_diff, RParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RelationName {
    /// `s_i s_i^-1 = 1` and `s_i^-1 s_i = 1`.
    #[serde(rename = "braid-inverse")]
    BraidInverse,
    #[serde(rename = "braid-YBE")]
    BraidYbe,
    #[serde(rename = "braid-commute")]
    BraidCommute,
    #[serde(rename = "virtual-involution")]
    VirtualInvolution,
    #[serde(rename = "virtual-symmetric")]
    VirtualSymmetric,
    #[serde(rename = "mixed-1")]
    Mixed1,
    #[serde(rename = "mixed-2")]
    Mixed2,
    #[serde(rename = "mixed-3")]
    Mixed3,
}

impl fmt::Display for RelationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationName::BraidInverse => "braid-inverse",
            RelationName::BraidYbe => "braid-YBE",
            RelationName::BraidCommute => "braid-commute",
            RelationName::VirtualInvolution => "virtual-involution",
            RelationName::VirtualSymmetric => "virtual-symmetric",
            RelationName::Mixed1 => "mixed-1",
            RelationName::Mixed2 => "mixed-2",
            RelationName::Mixed3 => "mixed-3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub name: RelationName,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

impl RelationInstance {
    /// Panics if the sides differ in strand count or underlying permutation.
    fn new(name: RelationName, strands: usize, lhs: Vec<Generator>, rhs: Vec<Generator>) -> Self {
        let lhs = BraidWord::new(strands, lhs).expect("indices in range");
        let rhs = BraidWord::new(strands, rhs).expect("indices in range");
        assert_eq!(lhs.permutation(), rhs.permutation(), "{name}: {lhs} vs {rhs}");
        Self { name, lhs, rhs }
    }
}

/// Every instance of the relation families on `n` strands. Families that
/// need more strands than `n` are left out.
pub fn relation_catalog(n: usize) -> Vec<RelationInstance> {
    use Generator as G;
    use RelationName::*;

    let mut out = Vec::new();
    let signs = [1i8, -1];
    for i in 1..n {
        out.push(RelationInstance::new(BraidInverse, n, vec![G::sigma(i), G::sigma_inv(i)], vec![]));
        out.push(RelationInstance::new(BraidInverse, n, vec![G::sigma_inv(i), G::sigma(i)], vec![]));
        out.push(RelationInstance::new(VirtualInvolution, n, vec![G::virt(i), G::virt(i)], vec![]));
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        out.push(RelationInstance::new(
            BraidYbe,
            n,
            vec![G::sigma(i), G::sigma(j), G::sigma(i)],
            vec![G::sigma(j), G::sigma(i), G::sigma(j)],
        ));
        out.push(RelationInstance::new(
            VirtualSymmetric,
            n,
            vec![G::virt(i), G::virt(j), G::virt(i)],
            vec![G::virt(j), G::virt(i), G::virt(j)],
        ));
        for s in signs {
            let (si, sj) = (G::classical(i, s), G::classical(j, s));
            out.push(RelationInstance::new(
                Mixed1,
                n,
                vec![si, G::virt(j), G::virt(i)],
                vec![G::virt(j), G::virt(i), sj],
            ));
            out.push(RelationInstance::new(
                Mixed2,
                n,
                vec![G::virt(i), G::virt(j), si],
                vec![sj, G::virt(i), G::virt(j)],
            ));
            out.push(RelationInstance::new(
                Mixed3,
                n,
                vec![G::virt(i), sj, G::virt(i)],
                vec![G::virt(j), si, G::virt(j)],
            ));
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(RelationInstance::new(
                BraidCommute,
                n,
                vec![G::sigma(i), G::sigma(j)],
                vec![G::sigma(j), G::sigma(i)],
            ));
            out.push(RelationInstance::new(
                VirtualSymmetric,
                n,
                vec![G::virt(i), G::virt(j)],
                vec![G::virt(j), G::virt(i)],
            ));
        }
    }
    out
}

/// Max-norm distance between the dense representations of the two sides.
pub fn check_relation(r: &RelationInstance, p: &RParams) -> Result<f64> {
    if r.lhs.strands() != r.rhs.strands() {
        return Err(Error::StrandMismatch { left: r.lhs.strands(), right: r.rhs.strands() });
    }
    let lhs = dense_matrix(&WordOperator::new(r.lhs.clone(), *p)?)?;
    let rhs = dense_matrix(&WordOperator::new(r.rhs.clone(), *p)?)?;
    Ok(max_abs_diff(&lhs, &rhs))
}
