//! Free groups: reduced words and endomorphisms given by generator images.

use std::fmt;

use crate::error::{Error, Result};

/// A freely reduced word in F_rank. Letters are stored as signed 1-based
/// generator indices: `k` is x_k and `-k` is x_k^{-1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The generator x_index (1-based).
    pub fn generator(rank: usize, index: usize) -> Self {
        debug_assert!(index >= 1 && index <= rank);
        FreeWord {
            rank,
            letters: vec![index as i32],
        }
    }

    /// Reduce an arbitrary letter sequence.
    pub fn from_letters(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut w = FreeWord::identity(rank);
        for a in letters {
            if a == 0 || a.unsigned_abs() as usize > rank {
                return Err(Error::IndexOutOfRange {
                    index: a.unsigned_abs() as usize,
                    strands: rank,
                });
            }
            w.push(a);
        }
        Ok(w)
    }

    /// From (generator, exponent) syllables with 1-based generators.
    pub fn from_syllables(rank: usize, syllables: &[(usize, i64)]) -> Result<Self> {
        let mut letters = Vec::new();
        for &(g, e) in syllables {
            let a = if e > 0 { g as i32 } else { -(g as i32) };
            for _ in 0..e.unsigned_abs() {
                letters.push(a);
            }
        }
        FreeWord::from_letters(rank, letters)
    }

    pub(crate) fn push(&mut self, a: i32) {
        if self.letters.last() == Some(&-a) {
            self.letters.pop();
        } else {
            self.letters.push(a);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Maximal runs of one generator, as (1-based generator, exponent).
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &a in &self.letters {
            let g = a.unsigned_abs() as usize;
            let e = a.signum() as i64;
            match out.last_mut() {
                Some((h, f)) if *h == g => *f += e,
                _ => out.push((g, e)),
            }
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &a in &other.letters {
            out.push(a);
        }
        out
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Replace each x_k by images[k-1]; the result lives in the images' rank.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = FreeWord::identity(rank);
        for &a in &self.letters {
            let img = &images[a.unsigned_abs() as usize - 1];
            if a > 0 {
                for &b in &img.letters {
                    out.push(b);
                }
            } else {
                for &b in img.letters.iter().rev() {
                    out.push(-b);
                }
            }
        }
        out
    }

    /// Conjugate that is cyclically reduced.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let mut s = 0;
        let mut e = l.len();
        while e > s + 1 && l[s] == -l[e - 1] {
            s += 1;
            e -= 1;
        }
        FreeWord {
            rank: self.rank,
            letters: l[s..e].to_vec(),
        }
    }

    /// Canonical representative of the conjugacy class of ⟨w⟩ up to inversion:
    /// the least rotation of the cyclic reduction of w or w^{-1}.
    pub fn cyclic_key(&self) -> Vec<i32> {
        let c = self.cyclically_reduced();
        let mut best: Option<Vec<i32>> = None;
        for cand in [c.letters.clone(), c.inverse().letters] {
            let n = cand.len();
            for r in 0..n.max(1) {
                let rot: Vec<i32> = cand[r..].iter().chain(cand[..r].iter()).copied().collect();
                if best.as_ref().map_or(true, |b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for &a in &self.letters {
            out[a.unsigned_abs() as usize - 1] += a.signum() as i64;
        }
        out
    }

    /// Same letters in a free group of larger rank.
    pub fn with_rank(&self, rank: usize) -> FreeWord {
        debug_assert!(self
            .letters
            .iter()
            .all(|a| a.unsigned_abs() as usize <= rank));
        FreeWord {
            rank,
            letters: self.letters.clone(),
        }
    }

    /// Parse tokens `x3`, `X3` (inverse), `x3^-2`; `1` or empty is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            if token == "1" {
                continue;
            }
            let bad = || Error::Syntax {
                token: token.to_string(),
                position,
            };
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let sign = match base.chars().next() {
                Some('x') => 1,
                Some('X') => -1,
                _ => return Err(bad()),
            };
            let g: i32 = base[1..].parse().map_err(|_| bad())?;
            let a = sign * g * exp.signum() as i32;
            for _ in 0..exp.unsigned_abs() {
                letters.push(a);
            }
        }
        FreeWord::from_letters(rank, letters)
    }

    /// Render with the given generator names, syllables as `name^k`.
    pub fn render(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .syllables()
            .into_iter()
            .map(|(g, e)| {
                let name = &names[g - 1];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.rank).map(|k| format!("x{k}")).collect();
        f.write_str(&self.render(&names))
    }
}

/// An endomorphism of F_rank, given by the images of x_1..x_rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeEndo {
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(rank: usize) -> Self {
        FreeEndo {
            images: (1..=rank).map(|k| FreeWord::generator(rank, k)).collect(),
        }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if images.iter().any(|w| w.rank != rank) {
            return Err(Error::Invalid(
                "image ranks differ from endomorphism rank".into(),
            ));
        }
        Ok(FreeEndo { images })
    }

    /// The endomorphism fixing every generator except x_i and x_{i+1}.
    pub(crate) fn local(rank: usize, i: usize, xi: FreeWord, xi1: FreeWord) -> Self {
        let mut e = FreeEndo::identity(rank);
        e.images[i - 1] = xi;
        e.images[i] = xi1;
        e
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, k: usize) -> &FreeWord {
        &self.images[k - 1]
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }

    /// `self ∘ inner`: first inner, then self.
    pub fn compose(&self, inner: &FreeEndo) -> FreeEndo {
        FreeEndo {
            images: inner
                .images
                .iter()
                .map(|w| w.substitute(&self.images))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters.len() == 1 && w.letters[0] == k as i32 + 1)
    }

    /// Stable byte encoding: per image, a length followed by its letters.
    pub fn key(&self) -> Vec<i32> {
        let total: usize = self.images.iter().map(|w| w.len() + 1).sum();
        let mut out = Vec::with_capacity(total);
        for w in &self.images {
            out.push(w.len() as i32);
            out.extend_from_slice(&w.letters);
        }
        out
    }
}

impl fmt::Display for FreeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            write!(f, "x{} -> {}", k + 1, w)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(s: &str, r: usize) -> FreeWord {
        FreeWord::parse(s, r).unwrap()
    }

    #[test]
    fn reduction_and_syllables() {
        let w = fw("x1 x2 X2 x1 x1", 2);
        assert_eq!(w.syllables(), vec![(1, 3)]);
        assert_eq!(w, fw("x1^3", 2));
        assert!(fw("x1 X1", 1).is_identity());
        assert_eq!(fw("x2^-2 x1", 2).letters(), &[-2, -2, 1]);
    }

    #[test]
    fn display_round_trip() {
        let w = fw("x1 x2^2 X1", 2);
        assert_eq!(w.to_string(), "x1 x2^2 x1^-1");
        assert_eq!(fw(&w.to_string(), 2), w);
        assert_eq!(FreeWord::identity(3).to_string(), "1");
    }

    #[test]
    fn substitution_and_composition() {
        let imgs = vec![fw("x1 x2 X1", 2), fw("x1", 2)];
        let e = FreeEndo::from_images(imgs).unwrap();
        assert_eq!(e.apply(&fw("x1 x2", 2)), fw("x1 x2", 2));
        let ee = e.compose(&e);
        assert_eq!(ee.image(2), &fw("x1 x2 X1", 2));
    }

    #[test]
    fn cyclic_key_ignores_rotation_and_inversion() {
        let a = fw("x1 x2 X1 x2", 2);
        let b = fw("x2 x1 x2 X1", 2);
        let c = a.inverse();
        let d = fw("x2 x2 x1 x2 X1 X2", 2);
        assert_eq!(a.cyclic_key(), b.cyclic_key());
        assert_eq!(a.cyclic_key(), c.cyclic_key());
        assert_eq!(a.cyclic_key(), d.cyclic_key());
    }
}
