use crate::error::{Error, Result};
use crate::words::{BraidWord, Letter, Perm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchreierKind {
    /// Products of m_{k,l} = σ_{k-1}σ_{k-2}…σ_l.
    Lambda,
    /// Products of n_{k,l} = σ_{k-1}^{-1}σ_{k-2}^{-1}…σ_l^{-1}.
    M,
}

/// A coset representative ∏_{k=2}^n x_{k,j_k} of SP_n in SG_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRep {
    /// (j_2, …, j_n) with 1 ≤ j_k ≤ k.
    pub digits: Vec<usize>,
    pub word: BraidWord,
}

impl CosetRep {
    pub fn perm(&self) -> Perm {
        self.word.pi_image()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// Letters of x_{k,l}: σ_{k-1}^{±1} … σ_l^{±1}, empty when l = k.
pub(crate) fn factor_letters(
    kind: SchreierKind,
    k: usize,
    l: usize,
) -> impl Iterator<Item = Letter> {
    (l..k).rev().map(move |i| match kind {
        SchreierKind::Lambda => Letter::sigma(i),
        SchreierKind::M => Letter::sigma_inv(i),
    })
}

pub(crate) fn rep_word(kind: SchreierKind, n: usize, digits: &[usize]) -> BraidWord {
    let mut letters = Vec::new();
    for (pos, &j) in digits.iter().enumerate() {
        letters.extend(factor_letters(kind, pos + 2, j));
    }
    BraidWord::from_raw(n, letters)
}

/// All n! representatives, ordered lexicographically in (j_2, …, j_n).
pub fn schreier_set(n: usize, kind: SchreierKind) -> Vec<CosetRep> {
    let mut out = Vec::new();
    let mut digits = vec![1; n.saturating_sub(1)];
    loop {
        out.push(CosetRep {
            digits: digits.clone(),
            word: rep_word(kind, n, &digits),
        });
        // odometer with the last digit fastest
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if digits[pos] < pos + 2 {
                digits[pos] += 1;
                for d in digits.iter_mut().skip(pos + 1) {
                    *d = 1;
                }
                break;
            }
        }
    }
}

/// M_{n,m} = M_n \ (M_m \ {e}), in M_n order. M_m sits inside M_n as the
/// representatives with j_k = k for every k > m.
pub fn m_subset(n: usize, m: usize) -> Result<Vec<CosetRep>> {
    if !(1 < m && m < n) {
        return Err(Error::Invalid(format!(
            "need 1 < m < n, got n = {n}, m = {m}"
        )));
    }
    Ok(schreier_set(n, SchreierKind::M)
        .into_iter()
        .filter(|r| {
            let inside_m = r
                .digits
                .iter()
                .enumerate()
                .all(|(pos, &j)| pos + 2 <= m || j == pos + 2);
            !inside_m || r.is_identity()
        })
        .collect())
}

/// {e, σ_{n-1}^{-1}, σ_{n-1}^{-1}σ_{n-2}^{-1}, …, σ_{n-1}^{-1}…σ_1^{-1}}:
/// the conjugating set used for the step from SP_{n-1} to SP_n.
pub fn petal_chain(n: usize) -> Vec<CosetRep> {
    (1..=n)
        .rev()
        .map(|l| {
            let mut digits: Vec<usize> = (2..=n).collect();
            if let Some(last) = digits.last_mut() {
                *last = l;
            }
            CosetRep {
                word: rep_word(SchreierKind::M, n, &digits),
                digits,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_braid;
    use std::collections::HashSet;

    #[test]
    fn sizes_and_bijectivity() {
        for n in 2..=5 {
            for kind in [SchreierKind::Lambda, SchreierKind::M] {
                let set = schreier_set(n, kind);
                let fact: usize = (1..=n).product();
                assert_eq!(set.len(), fact);
                let perms: HashSet<Perm> = set.iter().map(|r| r.perm()).collect();
                assert_eq!(perms.len(), fact);
            }
        }
    }

    #[test]
    fn small_sets() {
        let l2 = schreier_set(2, SchreierKind::Lambda);
        assert_eq!(l2[0].word, parse_braid("s1", 2).unwrap());
        assert!(l2[1].is_identity());
        let l3: Vec<String> = schreier_set(3, SchreierKind::Lambda)
            .iter()
            .map(|r| r.word.to_string())
            .collect();
        assert_eq!(l3, ["s1 s2 s1", "s1 s2", "s1", "s2 s1", "s2", ""]);
        let m3: Vec<String> = schreier_set(3, SchreierKind::M)
            .iter()
            .map(|r| r.word.to_string())
            .collect();
        assert!(m3.contains(&"S2 S1".to_string()));
    }

    #[test]
    fn subset_cardinalities() {
        assert_eq!(m_subset(5, 4).unwrap().len(), 97);
        assert_eq!(m_subset(4, 3).unwrap().len(), 19);
        let m32 = m_subset(3, 2).unwrap();
        assert_eq!(m32.len(), 5);
        assert!(m32.iter().all(|r| r.word.to_string() != "S1"));
        assert!(m_subset(3, 3).is_err());
    }

    #[test]
    fn petal_chain_lies_in_subset() {
        for n in 3..=5 {
            let chain = petal_chain(n);
            assert_eq!(chain.len(), n);
            assert!(chain[0].is_identity());
            let sub = m_subset(n, n - 1).unwrap();
            for r in &chain {
                assert!(sub.contains(r));
            }
        }
        let words: Vec<String> = petal_chain(4).iter().map(|r| r.word.to_string()).collect();
        assert_eq!(words, ["", "S3", "S3 S2", "S3 S2 S1"]);
    }
}
