//! Braid words on `n` strands: parsing, formatting, group operations and
//! the combinatorial data of their closures.
//!
//! Text grammar: a header `B<n>;` followed by whitespace-separated tokens
//! `s<i>` (positive crossing of strands `i, i+1`), `s<i>^-1` (negative
//! crossing) and `v<i>` (virtual crossing). Letters act left to right.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    Classical,
    Virtual,
}

/// One letter of a braid word. `index` is 1-based and acts on strands
/// `index, index + 1`. Virtual generators always carry sign `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    kind: GeneratorKind,
    index: usize,
    sign: i8,
}

impl Generator {
    pub fn sigma(index: usize) -> Self {
        Self::classical(index, 1)
    }

    pub fn sigma_inv(index: usize) -> Self {
        Self::classical(index, -1)
    }

    /// Classical generator with sign `+1` or `-1`.
    ///
    /// Panics on index 0 or a sign other than `±1`.
    pub fn classical(index: usize, sign: i8) -> Self {
        assert!(index >= 1, "generator index must be >= 1");
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        Self { kind: GeneratorKind::Classical, index, sign }
    }

    pub fn virt(index: usize) -> Self {
        assert!(index >= 1, "generator index must be >= 1");
        Self { kind: GeneratorKind::Virtual, index, sign: 1 }
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_virtual(&self) -> bool {
        self.kind == GeneratorKind::Virtual
    }

    pub fn inverse(&self) -> Self {
        match self.kind {
            GeneratorKind::Classical => Self::classical(self.index, -self.sign),
            GeneratorKind::Virtual => *self,
        }
    }

    /// Same index, opposite sign for classical letters; virtual letters unchanged.
    pub fn mirror(&self) -> Self {
        self.inverse()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.sign) {
            (GeneratorKind::Virtual, _) => write!(f, "v{}", self.index),
            (GeneratorKind::Classical, 1) => write!(f, "s{}", self.index),
            (GeneratorKind::Classical, _) => write!(f, "s{}^-1", self.index),
        }
    }
}

/// A word in the (virtual) braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for g in &letters {
            if g.index >= strands {
                return Err(Error::GeneratorOutOfRange { index: g.index, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        Self { strands, letters: Vec::new() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_virtual(&self) -> bool {
        self.letters.iter().any(Generator::is_virtual)
    }

    pub fn classical_count(&self) -> usize {
        self.letters.iter().filter(|g| !g.is_virtual()).count()
    }

    /// Concatenation `self · other`; no simplification.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(Generator::inverse).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Negates the sign of every classical letter.
    pub fn mirror(&self) -> BraidWord {
        let letters = self.letters.iter().map(Generator::mirror).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent `s_i s_i^-1`, `s_i^-1 s_i` and `v_i v_i` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            match out.last() {
                Some(&top) if top == g.inverse() => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// `g · self · g^-1`.
    pub fn conjugate(&self, g: Generator) -> Result<BraidWord> {
        if g.is_virtual() {
            return Err(Error::Invalid("conjugation is by classical generators only".into()));
        }
        if g.index >= self.strands {
            return Err(Error::GeneratorOutOfRange { index: g.index, strands: self.strands });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(g.inverse());
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Adds strand `n + 1` and appends `s_n^{sign}`.
    pub fn stabilize(&self, sign: i8) -> BraidWord {
        let n = self.strands;
        let mut letters = self.letters.clone();
        letters.push(Generator::classical(n, sign));
        BraidWord { strands: n + 1, letters }
    }

    /// Start-to-end position map, 0-based: `perm[p]` is where the strand
    /// entering at position `p` leaves the braid. Virtual letters permute too.
    pub fn permutation(&self) -> Vec<usize> {
        // at[q] = starting position of the strand currently at position q
        let mut at: Vec<usize> = (0..self.strands).collect();
        for g in &self.letters {
            at.swap(g.index - 1, g.index);
        }
        let mut perm = vec![0; self.strands];
        for (q, &p) in at.iter().enumerate() {
            perm[p] = q;
        }
        perm
    }

    /// Every classical crossing as `(sign, strand_left, strand_right)` where the
    /// strands are named by their 0-based starting position.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut out = Vec::with_capacity(self.letters.len());
        for g in &self.letters {
            let i = g.index - 1;
            if !g.is_virtual() {
                out.push(Crossing { sign: g.sign, left: at[i], right: at[i + 1], position: i });
            }
            at.swap(i, i + 1);
        }
        out
    }

    pub fn closure_data(&self) -> ClosureData {
        ClosureData::of(self)
    }
}

/// A classical crossing seen from the strands that meet there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub sign: i8,
    /// Starting position of the strand entering at the left slot.
    pub left: usize,
    /// Starting position of the strand entering at the right slot.
    pub right: usize,
    /// 0-based left slot of the crossing.
    pub position: usize,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{};", self.strands)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let rest = text.strip_prefix('B').ok_or_else(|| Error::Syntax {
            position: "header".into(),
            message: "expected header `B<n>;`".into(),
        })?;
        let semi = rest.find(';').ok_or_else(|| Error::Syntax {
            position: "header".into(),
            message: "missing `;` after strand count".into(),
        })?;
        let strands: usize = rest[..semi].trim().parse().map_err(|_| Error::Syntax {
            position: "header".into(),
            message: format!("bad strand count {:?}", &rest[..semi]),
        })?;
        if strands == 0 {
            return Err(Error::Syntax {
                position: "header".into(),
                message: "strand count must be at least 1".into(),
            });
        }

        let mut letters = Vec::new();
        for (k, token) in rest[semi + 1..].split_whitespace().enumerate() {
            let token_no = k + 1;
            let g = parse_token(token).ok_or_else(|| Error::Syntax {
                position: format!("token {token_no}"),
                message: format!("unrecognized token {token:?}"),
            })?;
            if g.0 == 0 || g.0 >= strands {
                return Err(Error::IndexOutOfRange {
                    token: token_no,
                    index: g.0,
                    max: strands - 1,
                });
            }
            letters.push(match g.1 {
                Some(sign) => Generator::classical(g.0, sign),
                None => Generator::virt(g.0),
            });
        }
        Ok(BraidWord { strands, letters })
    }
}

/// `(index, Some(sign))` for classical, `(index, None)` for virtual.
fn parse_token(token: &str) -> Option<(usize, Option<i8>)> {
    let (virt, body) = match token.as_bytes().first()? {
        b's' => (false, &token[1..]),
        b'v' => (true, &token[1..]),
        _ => return None,
    };
    let (digits, sign) = match body.strip_suffix("^-1") {
        Some(d) if !virt => (d, -1),
        Some(_) => return None,
        None => (body, 1),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index = digits.parse().ok()?;
    Some((index, if virt { None } else { Some(sign) }))
}

/// Derived data of the closure of a braid word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureData {
    /// 0-based start-to-end position map.
    pub permutation: Vec<usize>,
    /// Cycles of the permutation, each sorted, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    pub writhe: i64,
    /// `None` when the word contains virtual letters.
    rot: Option<i64>,
    /// Linking number per unordered pair of component indices `(i, j)`, `i < j`.
    pub pairwise_lk: BTreeMap<(usize, usize), i64>,
}

impl ClosureData {
    pub fn of(word: &BraidWord) -> Self {
        let permutation = word.permutation();
        let components = cycles(&permutation);
        let component_of = component_index(&components, word.strands());

        let crossings = word.crossings();
        let writhe = crossings.iter().map(|c| i64::from(c.sign)).sum();

        let mut double_lk: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                double_lk.insert((i, j), 0);
            }
        }
        for c in &crossings {
            let (x, y) = (component_of[c.left], component_of[c.right]);
            if x != y {
                *double_lk.entry((x.min(y), x.max(y))).or_default() += i64::from(c.sign);
            }
        }
        let pairwise_lk = double_lk
            .into_iter()
            .map(|(k, v)| {
                assert!(v % 2 == 0, "odd inter-component crossing sum {v} for pair {k:?}");
                (k, v / 2)
            })
            .collect();

        let rot = (!word.has_virtual()).then_some(word.strands() as i64);
        ClosureData { permutation, components, writhe, rot, pairwise_lk }
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Rotation number of the closed-braid diagram: the strand count.
    pub fn rot(&self) -> Result<i64> {
        self.rot.ok_or(Error::VirtualLetters("the rotation number"))
    }

    /// Component index of each strand (by 0-based starting position).
    pub fn component_of(&self) -> Vec<usize> {
        component_index(&self.components, self.permutation.len())
    }

    /// Linking number between components `i` and `j` (order-insensitive).
    pub fn lk(&self, i: usize, j: usize) -> Option<i64> {
        self.pairwise_lk.get(&(i.min(j), i.max(j))).copied()
    }
}

/// Cycles of a permutation, each sorted, in order of smallest element.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push(p);
            p = perm[p];
        }
        cycle.sort_unstable();
        out.push(cycle);
    }
    out
}

fn component_index(components: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut of = vec![0; n];
    for (k, comp) in components.iter().enumerate() {
        for &p in comp {
            of[p] = k;
        }
    }
    of
}
