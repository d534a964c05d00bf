//! Extensions of the Artin representation to SB_n by free-group
//! endomorphisms Φ1, Φ2, Φ3 and Φ4,n.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::free::{FreeEndo, FreeWord};
use crate::oracle::artin_letter;
use crate::relations::sb_relations;
use crate::words::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepId {
    Phi1,
    Phi2,
    Phi3,
    /// Φ4,n with n ≥ 1.
    Phi4(u32),
}

impl fmt::Display for RepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepId::Phi1 => f.write_str("phi1"),
            RepId::Phi2 => f.write_str("phi2"),
            RepId::Phi3 => f.write_str("phi3"),
            RepId::Phi4(n) => write!(f, "phi4:{n}"),
        }
    }
}

impl FromStr for RepId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi1" => Ok(RepId::Phi1),
            "phi2" => Ok(RepId::Phi2),
            "phi3" => Ok(RepId::Phi3),
            _ => {
                let n = s
                    .strip_prefix("phi4:")
                    .and_then(|n| n.parse::<u32>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| Error::Invalid(format!("unknown representation {s:?}")))?;
                Ok(RepId::Phi4(n))
            }
        }
    }
}

/// Images of x_i and x_{i+1} under a two-strand move, written in the rank 2
/// letters x1 = x_i, x2 = x_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalImage {
    pub left: FreeWord,
    pub right: FreeWord,
}

impl LocalImage {
    pub fn new(left: &[i32], right: &[i32]) -> Result<Self> {
        Ok(LocalImage {
            left: FreeWord::from_letters(2, left.iter().copied())?,
            right: FreeWord::from_letters(2, right.iter().copied())?,
        })
    }

    fn from_words(left: FreeWord, right: FreeWord) -> Self {
        LocalImage { left, right }
    }

    /// The endomorphism of F_rank acting at positions i, i+1.
    pub fn at(&self, i: usize, rank: usize) -> FreeEndo {
        let subs = [
            FreeWord::generator(rank, i),
            FreeWord::generator(rank, i + 1),
        ];
        FreeEndo::local(
            rank,
            i,
            self.left.substitute(&subs),
            self.right.substitute(&subs),
        )
    }
}

/// A representation of SB_n: σ acts as in Artin's representation, τ by a
/// local endomorphism, τ^{-1} only when that endomorphism has a known
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub tau: LocalImage,
    pub tau_inv: Option<LocalImage>,
}

fn word2(letters: &[i32]) -> FreeWord {
    FreeWord::from_letters(2, letters.iter().copied()).expect("rank 2 letters")
}

impl Representation {
    pub fn new(id: RepId) -> Self {
        match id {
            // τ acts as σ², so τ^{-1} acts as σ^{-2}
            RepId::Phi1 => Representation {
                tau: LocalImage::from_words(word2(&[1, 2, 1, -2, -1]), word2(&[1, 2, -1])),
                tau_inv: Some(LocalImage::from_words(
                    word2(&[-2, 1, 2]),
                    word2(&[-2, -1, 2, 1, 2]),
                )),
            },
            // τ acts as σ^{-2}, so τ^{-1} acts as σ²
            RepId::Phi2 => Representation {
                tau: LocalImage::from_words(word2(&[-2, 1, 2]), word2(&[-2, -1, 2, 1, 2])),
                tau_inv: Some(LocalImage::from_words(
                    word2(&[1, 2, 1, -2, -1]),
                    word2(&[1, 2, -1]),
                )),
            },
            RepId::Phi3 => Representation {
                tau: LocalImage::from_words(word2(&[1, -2, -1, 2, 1]), word2(&[-1, -2, 1, 2, 2])),
                tau_inv: None,
            },
            RepId::Phi4(n) => {
                let n = n as i64;
                let left = FreeWord::generator(2, 2)
                    .inverse()
                    .mul(&word2(&[-1, 2]).pow(n));
                let right = word2(&[-2, 1]).pow(n + 1).mul(&FreeWord::generator(2, 2));
                Representation {
                    tau: LocalImage::from_words(left, right),
                    tau_inv: None,
                }
            }
        }
    }

    /// A representation with an arbitrary τ-image and no τ^{-1}.
    pub fn custom(tau: LocalImage) -> Self {
        Representation { tau, tau_inv: None }
    }

    pub fn letter(&self, letter: Letter, rank: usize) -> Result<FreeEndo> {
        if letter.index == 0 || letter.index >= rank {
            return Err(Error::IndexOutOfRange {
                index: letter.index,
                strands: rank,
            });
        }
        if letter.is_sigma() {
            return Ok(artin_letter(letter, rank));
        }
        if letter.exp > 0 {
            return Ok(self.tau.at(letter.index, rank));
        }
        match &self.tau_inv {
            Some(inv) => Ok(inv.at(letter.index, rank)),
            None => Err(Error::NonInvertible(format!(
                "no inverse for the image of {letter}"
            ))),
        }
    }

    /// Φ(w) with Φ(uv) = Φ(u)∘Φ(v).
    pub fn word(&self, w: &BraidWord) -> Result<FreeEndo> {
        let mut cur = FreeEndo::identity(w.strands());
        for &l in w.letters() {
            cur = cur.compose(&self.letter(l, w.strands())?);
        }
        Ok(cur)
    }

    /// Names of the defining relations of SB_strands whose two sides have
    /// different images.
    pub fn failing_relations(&self, strands: usize) -> Vec<String> {
        let rels = sb_relations(strands);
        let bad: Vec<Option<String>> = rels
            .par_iter()
            .map(|r| {
                let same = self.word(&r.lhs).ok() == self.word(&r.rhs).ok();
                (!same).then(|| r.name.clone())
            })
            .collect();
        bad.into_iter().flatten().collect()
    }

    pub fn respects_relations(&self, strands: usize) -> bool {
        self.failing_relations(strands).is_empty()
    }
}

pub fn phi_letter(rep: RepId, letter: Letter, rank: usize) -> Result<FreeEndo> {
    Representation::new(rep).letter(letter, rank)
}

pub fn phi_word(rep: RepId, w: &BraidWord) -> Result<FreeEndo> {
    Representation::new(rep).word(w)
}

/// Whether every defining relation of SB_strands has equal images.
pub fn rep_respects_relations(rep: RepId, strands: usize) -> bool {
    Representation::new(rep).respects_relations(strands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::artin_endo;
    use crate::words::parse_braid;

    fn fw(text: &str) -> FreeWord {
        FreeWord::parse(text, 2).unwrap()
    }

    fn image(rep: RepId, text: &str, n: usize) -> Vec<FreeWord> {
        phi_word(rep, &parse_braid(text, n).unwrap())
            .unwrap()
            .images()
            .to_vec()
    }

    #[test]
    fn ids_round_trip() {
        for id in [RepId::Phi1, RepId::Phi2, RepId::Phi3, RepId::Phi4(3)] {
            assert_eq!(id.to_string().parse::<RepId>().unwrap(), id);
        }
        assert!("phi4:0".parse::<RepId>().is_err());
        assert!("phi5".parse::<RepId>().is_err());
    }

    #[test]
    fn letter_images() {
        let t = Letter::tau(1);
        assert_eq!(
            *phi_letter(RepId::Phi1, t, 2).unwrap().image(1),
            fw("x1 x2 x1 X2 X1")
        );
        assert_eq!(
            *phi_letter(RepId::Phi1, t, 2).unwrap().image(2),
            fw("x1 x2 X1")
        );
        assert_eq!(
            *phi_letter(RepId::Phi2, Letter::sigma(1), 2)
                .unwrap()
                .image(1),
            fw("x1 x2 X1")
        );
        let p4 = phi_letter(RepId::Phi4(1), t, 2).unwrap();
        assert_eq!(*p4.image(1), fw("X2 X1 x2"));
        assert_eq!(*p4.image(2), fw("X2 x1 X2 x1 x2"));
        assert!(matches!(
            phi_letter(RepId::Phi3, Letter::tau_inv(1), 2),
            Err(Error::NonInvertible(_))
        ));
        assert!(phi_word(RepId::Phi1, &BraidWord::identity(3))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn hopf_displays() {
        assert_eq!(
            image(RepId::Phi1, "s1 t1", 2),
            [fw("x1 x2 x1 x2 X1 X2 X1"), fw("x1 x2 x1 X2 X1")]
        );
        assert_eq!(
            image(RepId::Phi3, "s1 t1", 2),
            [fw("x1 x2 X1 X2 x1 x2 X1"), fw("x1 X2 X1 x2 x1")]
        );
    }

    #[test]
    fn inverse_singular_images() {
        for rep in [RepId::Phi1, RepId::Phi2] {
            assert!(phi_word(rep, &parse_braid("t1 T2 t2 T1", 3).unwrap())
                .unwrap()
                .is_identity());
        }
    }

    #[test]
    fn classical_words_act_as_artin() {
        let w = parse_braid("s1 S2 s3 s1 S1 s2", 4).unwrap();
        for rep in [RepId::Phi1, RepId::Phi2, RepId::Phi3, RepId::Phi4(2)] {
            assert_eq!(phi_word(rep, &w).unwrap(), artin_endo(&w).unwrap());
        }
    }

    #[test]
    fn relation_respect() {
        for rep in [RepId::Phi1, RepId::Phi2, RepId::Phi3] {
            for n in 3..=5 {
                assert!(rep_respects_relations(rep, n), "{rep} at {n}");
            }
        }
        let corrupted =
            Representation::custom(LocalImage::new(&[1, 2, -1, -2, -1], &[1, 2, -1]).unwrap());
        assert!(!corrupted.respects_relations(3));
    }

    #[test]
    fn phi1_separates_tau_orders() {
        let a = phi_word(RepId::Phi1, &parse_braid("t1 t2", 3).unwrap()).unwrap();
        let b = phi_word(RepId::Phi1, &parse_braid("t2 t1", 3).unwrap()).unwrap();
        assert_ne!(a, b);
    }
}
