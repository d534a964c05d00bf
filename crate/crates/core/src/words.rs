//! Braid words over σ_i^{±1} and τ_i^{±1}, their text form, and the two
//! homomorphisms onto the symmetric group.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Sigma,
    Tau,
}

/// A signed generator σ_i^{±1} or τ_i^{±1}, with a 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: Kind,
    pub index: usize,
    pub exp: i8,
}

impl Letter {
    pub fn sigma(index: usize) -> Self {
        Letter {
            kind: Kind::Sigma,
            index,
            exp: 1,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        Letter {
            kind: Kind::Sigma,
            index,
            exp: -1,
        }
    }

    pub fn tau(index: usize) -> Self {
        Letter {
            kind: Kind::Tau,
            index,
            exp: 1,
        }
    }

    pub fn tau_inv(index: usize) -> Self {
        Letter {
            kind: Kind::Tau,
            index,
            exp: -1,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            exp: -self.exp,
            ..self
        }
    }

    pub fn is_sigma(self) -> bool {
        self.kind == Kind::Sigma
    }

    pub fn is_tau(self) -> bool {
        self.kind == Kind::Tau
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.kind, self.exp > 0) {
            (Kind::Sigma, true) => 's',
            (Kind::Sigma, false) => 'S',
            (Kind::Tau, true) => 't',
            (Kind::Tau, false) => 'T',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// A word in SG_n. No simplification is ever applied implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("strand count must be positive".into()));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands || l.exp.abs() != 1 {
                return Err(Error::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Build from trusted letters; callers guarantee index bounds.
    pub(crate) fn from_raw(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_sigma_only(&self) -> bool {
        self.letters.iter().all(|l| l.is_sigma())
    }

    /// True when every τ-letter has exponent +1, i.e. the word lies in SB_n.
    pub fn is_tau_positive(&self) -> bool {
        self.letters.iter().all(|l| !(l.is_tau() && l.exp < 0))
    }

    pub fn tau_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_tau()).count()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Concatenation for words already known to share a strand count.
    pub(crate) fn join(&self, other: &BraidWord) -> BraidWord {
        debug_assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Flip every classical crossing; singular letters are unchanged.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|&l| if l.is_sigma() { l.inverse() } else { l })
                .collect(),
        }
    }

    /// Same letters viewed in SG_m for m ≥ current strand count.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter.index == 0 || letter.index >= self.strands {
            return Err(Error::IndexOutOfRange {
                index: letter.index,
                strands: self.strands,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// The permutation π with π(σ_i) = π(τ_i) = (i, i+1).
    pub fn pi_image(&self) -> Perm {
        let mut p = Perm::identity(self.strands);
        for l in &self.letters {
            p.apply_transposition(l.index - 1);
        }
        p
    }

    /// The permutation θ with θ(σ_i) = e and θ(τ_i) = (i, i+1).
    pub fn theta_image(&self) -> Perm {
        let mut p = Perm::identity(self.strands);
        for l in self.letters.iter().filter(|l| l.is_tau()) {
            p.apply_transposition(l.index - 1);
        }
        p
    }

    pub fn parse(text: &str, strands: usize) -> Result<BraidWord> {
        parse_braid(text, strands)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parse whitespace separated tokens `s<i>`, `S<i>`, `t<i>`, `T<i>`.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let bad = || Error::Syntax {
            token: token.to_string(),
            position,
        };
        let mut chars = token.chars();
        let head = chars.next().ok_or_else(bad)?;
        let (kind, exp) = match head {
            's' => (Kind::Sigma, 1),
            'S' => (Kind::Sigma, -1),
            't' => (Kind::Tau, 1),
            'T' => (Kind::Tau, -1),
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 || index >= strands {
            return Err(Error::IndexOutOfRange { index, strands });
        }
        letters.push(Letter { kind, index, exp });
    }
    BraidWord::new(strands, letters)
}

/// A permutation of {1..n}, stored 0-based. Products read left to right:
/// `p.then(q)` applies p first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Ok(Perm { images: out })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Perm::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point x.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x)
    }

    /// Left-to-right product: apply self, then other.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x] = k;
        }
        Perm { images }
    }

    /// Right-multiply by the transposition of 0-based points t and t+1.
    fn apply_transposition(&mut self, t: usize) {
        for x in self.images.iter_mut() {
            if *x == t {
                *x = t + 1;
            } else if *x == t + 1 {
                *x = t;
            }
        }
    }

    /// Disjoint cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
