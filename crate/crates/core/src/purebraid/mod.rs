//! The singular pure braid group SP_n = ker(π: SG_n → S_n).
//!
//! Generators a_ij (classical) and b_ij (one singular crossing), coset
//! representatives, the conjugation action of σ_k, Reidemeister–Schreier
//! rewriting, combing of classical pure braids, presentations, the center
//! and the petal decomposition.

mod camomile;
mod center;
mod comb;
mod conj;
mod cosets;
mod presentation;
mod rewrite;

pub use camomile::{camomile_check, generator_union, CamomileReport, GeneratorMatch, RelatorMatch};
pub use center::{center_identities, center_presentation, delta, delta_k, PureIdentity};
pub use comb::comb;
pub use conj::{conj_by_sigma, conjugate_by_braid};
pub use cosets::{m_subset, petal_chain, schreier_set, CosetRep, SchreierKind};
pub use presentation::{
    pn_presentation, pn_relations, sp_generators, sp_presentation, sp_relations, PnForm,
    PureRelation,
};
pub use rewrite::{rs_rewrite, rs_rewrite_unchecked};

use std::fmt;

use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::words::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PureKind {
    A,
    B,
}

/// a_ij or b_ij with 1 ≤ i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureGen {
    pub kind: PureKind,
    pub i: usize,
    pub j: usize,
}

impl PureGen {
    pub fn a(i: usize, j: usize) -> Self {
        PureGen {
            kind: PureKind::A,
            i,
            j,
        }
    }

    pub fn b(i: usize, j: usize) -> Self {
        PureGen {
            kind: PureKind::B,
            i,
            j,
        }
    }

    pub fn with_kind(kind: PureKind, i: usize, j: usize) -> Self {
        PureGen { kind, i, j }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.i == 0 || self.i >= self.j || self.j > n {
            return Err(Error::Invalid(format!(
                "generator {self} out of range for n = {n}"
            )));
        }
        Ok(())
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PureGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            PureKind::A => 'a',
            PureKind::B => 'b',
        };
        if self.i < 10 && self.j < 10 {
            write!(f, "{c}{}{}", self.i, self.j)
        } else {
            write!(f, "{c}{}_{}", self.i, self.j)
        }
    }
}

/// The defining word of a generator:
/// a_ij = σ_{j-1}…σ_{i+1} σ_i² σ_{i+1}^{-1}…σ_{j-1}^{-1}, and b_ij the same
/// with τ_iσ_i in the middle.
pub fn gen_word(g: PureGen, n: usize) -> Result<BraidWord> {
    g.check(n)?;
    Ok(BraidWord::from_raw(n, gen_letters(g)))
}

fn gen_letters(g: PureGen) -> Vec<Letter> {
    let mut out: Vec<Letter> = (g.i + 1..g.j).rev().map(Letter::sigma).collect();
    match g.kind {
        PureKind::A => out.extend([Letter::sigma(g.i), Letter::sigma(g.i)]),
        PureKind::B => out.extend([Letter::tau(g.i), Letter::sigma(g.i)]),
    }
    out.extend((g.i + 1..g.j).map(Letter::sigma_inv));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureLetter {
    pub gen: PureGen,
    pub exp: i8,
}

impl PureLetter {
    pub fn inverse(self) -> Self {
        PureLetter {
            gen: self.gen,
            exp: -self.exp,
        }
    }
}

/// A freely reduced word in the generators of SP_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureWord {
    strands: usize,
    letters: Vec<PureLetter>,
}

impl PureWord {
    pub fn identity(strands: usize) -> Self {
        PureWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(
        strands: usize,
        letters: impl IntoIterator<Item = (PureGen, i8)>,
    ) -> Result<Self> {
        let mut w = PureWord::identity(strands);
        for (gen, exp) in letters {
            gen.check(strands)?;
            if exp.abs() != 1 {
                return Err(Error::Invalid(format!("exponent {exp} is not ±1")));
            }
            w.push(PureLetter { gen, exp });
        }
        Ok(w)
    }

    pub(crate) fn raw(strands: usize, letters: &[(PureGen, i8)]) -> Self {
        let mut w = PureWord::identity(strands);
        for &(gen, exp) in letters {
            w.push(PureLetter { gen, exp });
        }
        w
    }

    pub fn gen(strands: usize, g: PureGen) -> Self {
        PureWord {
            strands,
            letters: vec![PureLetter { gen: g, exp: 1 }],
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[PureLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn push(&mut self, l: PureLetter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn mul(&self, other: &PureWord) -> PureWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> PureWord {
        PureWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The braid word obtained by substituting each generator's defining word.
    pub fn expand(&self) -> BraidWord {
        let mut letters = Vec::new();
        for l in &self.letters {
            let w = gen_letters(l.gen);
            if l.exp > 0 {
                letters.extend(w);
            } else {
                letters.extend(w.into_iter().rev().map(|x| x.inverse()));
            }
        }
        BraidWord::from_raw(self.strands, letters)
    }

    pub fn uses_only_a(&self) -> bool {
        self.letters.iter().all(|l| l.gen.kind == PureKind::A)
    }

    pub fn mentions(&self, g: PureGen) -> bool {
        self.letters.iter().any(|l| l.gen == g)
    }

    /// Apply a substitution to each generator.
    pub fn map_gens(&self, mut f: impl FnMut(PureGen) -> PureWord) -> PureWord {
        let mut out = PureWord::identity(self.strands);
        for l in &self.letters {
            let img = f(l.gen);
            out = if l.exp > 0 {
                out.mul(&img)
            } else {
                out.mul(&img.inverse())
            };
        }
        out
    }

    /// As a free-group word over an indexed generator list.
    pub fn to_free(&self, gens: &[PureGen]) -> FreeWord {
        let letters = self.letters.iter().map(|l| {
            let k = gens
                .iter()
                .position(|g| *g == l.gen)
                .expect("generator listed") as i32
                + 1;
            k * l.exp as i32
        });
        FreeWord::from_letters(gens.len(), letters).expect("indices in range")
    }

    /// Parse tokens like `a12`, `b13^-1`, `a1_10`.
    pub fn parse(text: &str, strands: usize) -> Result<PureWord> {
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let bad = || Error::Syntax {
                token: token.to_string(),
                position,
            };
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<i8>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let kind = match base.chars().next() {
                Some('a') => PureKind::A,
                Some('b') => PureKind::B,
                _ => return Err(bad()),
            };
            let digits = &base[1..];
            let (i, j) = match digits.split_once('_') {
                Some((x, y)) => (x.parse().map_err(|_| bad())?, y.parse().map_err(|_| bad())?),
                None if digits.len() == 2 => (
                    digits[..1].parse().map_err(|_| bad())?,
                    digits[1..].parse().map_err(|_| bad())?,
                ),
                None => return Err(bad()),
            };
            letters.push((PureGen { kind, i, j }, exp));
        }
        PureWord::from_letters(strands, letters)
    }
}

impl fmt::Display for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l.exp > 0 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^-1", l.gen)?;
            }
        }
        Ok(())
    }
}
