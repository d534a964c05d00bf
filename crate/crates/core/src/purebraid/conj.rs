use super::{PureGen, PureWord};
use crate::error::{Error, Result};
use crate::words::BraidWord;

/// σ_k^{-ε} g σ_k^{ε} as a word in the generators of SP_n.
pub fn conj_by_sigma(g: PureGen, k: usize, eps: i8, n: usize) -> Result<PureWord> {
    g.check(n)?;
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange {
            index: k,
            strands: n,
        });
    }
    if eps.abs() != 1 {
        return Err(Error::Invalid(format!("exponent {eps} is not ±1")));
    }
    Ok(conj_row(g, k, eps, n))
}

pub(crate) fn conj_row(g: PureGen, k: usize, eps: i8, n: usize) -> PureWord {
    let (i, j) = (g.i, g.j);
    let same = |i, j| PureGen::with_kind(g.kind, i, j);
    let a = PureGen::a;
    let w = |letters: &[(PureGen, i8)]| PureWord::raw(n, letters);
    if k + 1 != i && k != i && k + 1 != j && k != j {
        return w(&[(g, 1)]);
    }
    if k == i && j == i + 1 {
        return w(&[(g, 1)]);
    }
    match (k, eps > 0) {
        (k, true) if k + 1 == i => w(&[(same(i - 1, j), 1)]),
        (k, false) if k + 1 == i => w(&[(a(i, j), -1), (same(i - 1, j), 1), (a(i, j), 1)]),
        (k, true) if k == i => w(&[(a(i, j), 1), (same(i + 1, j), 1), (a(i, j), -1)]),
        (k, false) if k == i => w(&[(same(i + 1, j), 1)]),
        (k, true) if k + 1 == j => w(&[(same(i, j - 1), 1)]),
        (k, false) if k + 1 == j => w(&[(a(j - 1, j), 1), (same(i, j - 1), 1), (a(j - 1, j), -1)]),
        (_, true) => w(&[(a(j, j + 1), -1), (same(i, j + 1), 1), (a(j, j + 1), 1)]),
        (_, false) => w(&[(same(i, j + 1), 1)]),
    }
}

/// c^{-1} w c for a classical braid word c, computed letter by letter from
/// the conjugation table.
pub fn conjugate_by_braid(w: &PureWord, c: &BraidWord) -> Result<PureWord> {
    if !c.is_sigma_only() {
        return Err(Error::SingularLetter);
    }
    if c.strands() != w.strands() {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: c.strands(),
        });
    }
    let n = w.strands();
    let mut cur = w.clone();
    for l in c.letters() {
        cur = cur.map_gens(|g| conj_row(g, l.index, l.exp, n));
    }
    Ok(cur)
}

/// ρ g ρ^{-1} for a classical word ρ.
pub(crate) fn conjugate_inverse(w: &PureWord, rho: &BraidWord) -> PureWord {
    let n = w.strands();
    let mut cur = w.clone();
    for l in rho.letters().iter().rev() {
        cur = cur.map_gens(|g| conj_row(g, l.index, -l.exp, n));
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::sg_identity_holds;
    use crate::purebraid::{gen_word, PureKind};
    use crate::words::Letter;

    #[test]
    fn displayed_rows() {
        assert_eq!(
            conj_by_sigma(PureGen::a(2, 4), 1, 1, 4)
                .unwrap()
                .to_string(),
            "a14"
        );
        assert_eq!(
            conj_by_sigma(PureGen::b(2, 3), 2, 1, 4)
                .unwrap()
                .to_string(),
            "b23"
        );
        assert_eq!(
            conj_by_sigma(PureGen::b(2, 3), 2, -1, 4)
                .unwrap()
                .to_string(),
            "b23"
        );
        assert_eq!(
            conj_by_sigma(PureGen::b(1, 3), 3, -1, 4)
                .unwrap()
                .to_string(),
            "b14"
        );
        assert!(conj_by_sigma(PureGen::a(1, 2), 2, 1, 2).is_err());
    }

    #[test]
    fn every_row_holds_at_four_strands() {
        let n = 4;
        for kind in [PureKind::A, PureKind::B] {
            for j in 2..=n {
                for i in 1..j {
                    let g = PureGen::with_kind(kind, i, j);
                    for k in 1..n {
                        for eps in [1i8, -1] {
                            let s = Letter {
                                kind: crate::words::Kind::Sigma,
                                index: k,
                                exp: eps,
                            };
                            let lhs = BraidWord::from_raw(
                                n,
                                std::iter::once(s.inverse())
                                    .chain(gen_word(g, n).unwrap().letters().iter().copied())
                                    .chain(std::iter::once(s))
                                    .collect(),
                            );
                            let rhs = conj_by_sigma(g, k, eps, n).unwrap().expand();
                            assert!(
                                sg_identity_holds(&lhs, &rhs).unwrap(),
                                "{g} k={k} eps={eps}"
                            );
                        }
                    }
                }
            }
        }
    }
}
