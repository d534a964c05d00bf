use super::conj::conjugate_inverse;
use super::cosets::{rep_word, SchreierKind};
use super::{PureGen, PureWord};
use crate::error::{Error, Result};
use crate::oracle::sb_equal;
use crate::words::{BraidWord, Kind};

/// Largest input (in τ-letters) for which the debug build re-checks the
/// rewrite with the oracle.
const DEBUG_CHECK_TAUS: usize = 8;

/// Rewrite a word of SP_n in the generators a_ij, b_ij.
///
/// In debug builds the result is compared with the input by the oracle
/// whenever the input is τ-positive and small enough to expand.
pub fn rs_rewrite(w: &BraidWord) -> Result<PureWord> {
    let out = rs_rewrite_unchecked(w)?;
    if cfg!(debug_assertions) && w.is_tau_positive() && w.tau_count() <= DEBUG_CHECK_TAUS {
        let back = out.expand();
        if !sb_equal(&back, w)? {
            return Err(Error::Rewrite(format!(
                "{w} rewrote to {out}, which differs"
            )));
        }
    }
    Ok(out)
}

/// Reidemeister–Schreier rewriting with respect to the Schreier set Λ_n.
///
/// The scan keeps the current coset representative r (as its digits
/// j_2..j_n). A letter ℓ contributes the generator r ℓ r'^{-1}, where r' is
/// the representative of r ℓ. Singular letters are split as
/// τ_i = b_{i,i+1} σ_i^{-1} and τ_i^{-1} = σ_i b_{i,i+1}^{-1}.
pub fn rs_rewrite_unchecked(w: &BraidWord) -> Result<PureWord> {
    let n = w.strands();
    let perm = w.pi_image();
    if !perm.is_identity() {
        return Err(Error::NotPure(perm.to_string()));
    }
    let mut digits: Vec<usize> = (2..=n).collect();
    let mut out = PureWord::identity(n);
    for &l in w.letters() {
        match (l.kind, l.exp > 0) {
            (Kind::Sigma, _) => {
                let g = sigma_step(n, n, &mut digits, l.index, l.exp);
                out = out.mul(&g);
            }
            (Kind::Tau, true) => {
                let b = PureWord::gen(n, PureGen::b(l.index, l.index + 1));
                out = out.mul(&conjugate_inverse(
                    &b,
                    &rep_word(SchreierKind::Lambda, n, &digits),
                ));
                let g = sigma_step(n, n, &mut digits, l.index, -1);
                out = out.mul(&g);
            }
            (Kind::Tau, false) => {
                let g = sigma_step(n, n, &mut digits, l.index, 1);
                out = out.mul(&g);
                let b = PureWord::gen(n, PureGen::b(l.index, l.index + 1)).inverse();
                out = out.mul(&conjugate_inverse(
                    &b,
                    &rep_word(SchreierKind::Lambda, n, &digits),
                ));
            }
        }
    }
    if digits.iter().enumerate().any(|(pos, &j)| j != pos + 2) {
        return Err(Error::Rewrite(format!(
            "scan of {w} ended outside the trivial coset"
        )));
    }
    Ok(out)
}

/// Schreier generator r σ_i^ε r'^{-1} for r ∈ Λ_level, updating the digits
/// of r to those of r'. Here r = ρ·m with ρ ∈ Λ_{level-1} and
/// m = σ_{level-1}…σ_j the last factor.
fn sigma_step(n: usize, level: usize, digits: &mut [usize], i: usize, eps: i8) -> PureWord {
    debug_assert!(i < level);
    let j = digits[level - 2];
    let (rho_digits, last) = digits.split_at_mut(level - 2);
    if i + 1 < j {
        // σ_i commutes with m
        sigma_step(n, level - 1, rho_digits, i, eps)
    } else if i > j {
        // m σ_i = σ_{i-1} m
        sigma_step(n, level - 1, rho_digits, i - 1, eps)
    } else if i + 1 == j {
        last[0] = j - 1;
        if eps > 0 {
            PureWord::identity(n)
        } else {
            let a = PureWord::raw(n, &[(PureGen::a(j - 1, level), -1)]);
            conjugate_inverse(&a, &rep_word(SchreierKind::Lambda, n, rho_digits))
        }
    } else {
        last[0] = j + 1;
        if eps < 0 {
            PureWord::identity(n)
        } else {
            let a = PureWord::raw(n, &[(PureGen::a(j, level), 1)]);
            conjugate_inverse(&a, &rep_word(SchreierKind::Lambda, n, rho_digits))
        }
    }
}
