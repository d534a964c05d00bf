//! Random words for property tests, benchmarks and the randomized
//! verification suite.

use rand::Rng;

use crate::words::{BraidWord, Letter, Perm};

fn inversions(p: &Perm) -> usize {
    let im = p.images();
    let mut count = 0;
    for a in 0..im.len() {
        for b in a + 1..im.len() {
            count += (im[a] > im[b]) as usize;
        }
    }
    count
}

/// σ-letters whose permutation undoes `p`, at most n(n-1)/2 of them.
pub fn sorting_letters(p: &Perm) -> Vec<Letter> {
    let n = p.degree();
    let mut cur = p.clone();
    let mut out = Vec::new();
    while !cur.is_identity() {
        let before = inversions(&cur);
        let i = (1..n)
            .find(|&i| inversions(&cur.then(&Perm::transposition(n, i, i + 1))) < before)
            .expect("a non-identity permutation has a descent");
        cur = cur.then(&Perm::transposition(n, i, i + 1));
        out.push(Letter::sigma(i));
    }
    out
}

/// A τ-positive word of the given length with at most `max_taus` τ-letters;
/// σ-letters have random sign.
pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize, max_taus: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(len);
    let mut taus = 0;
    for _ in 0..len {
        let i = rng.gen_range(1..strands);
        let l = if taus < max_taus && rng.gen_bool(0.35) {
            taus += 1;
            Letter::tau(i)
        } else if rng.gen_bool(0.5) {
            Letter::sigma(i)
        } else {
            Letter::sigma_inv(i)
        };
        letters.push(l);
    }
    BraidWord::new(strands, letters).expect("indices in range")
}

/// A random τ-positive word with trivial permutation: a random prefix of
/// length ≤ `max_len - n(n-1)/2`, then σ-letters restoring the identity.
pub fn random_pure_word<R: Rng>(
    rng: &mut R,
    strands: usize,
    max_len: usize,
    max_taus: usize,
) -> BraidWord {
    let fix = strands * (strands - 1) / 2;
    let head = rng.gen_range(0..=max_len.saturating_sub(fix));
    let mut w = random_word(rng, strands, head, max_taus);
    for l in sorting_letters(&w.pi_image()) {
        w.push(l).expect("index in range");
    }
    w
}

/// A random classical pure braid.
pub fn random_classical_pure_word<R: Rng>(
    rng: &mut R,
    strands: usize,
    max_len: usize,
) -> BraidWord {
    random_pure_word(rng, strands, max_len, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pure_words_are_pure() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let w = random_pure_word(&mut rng, 4, 12, 5);
            assert!(w.pi_image().is_identity());
            assert!(w.len() <= 12 && w.tau_count() <= 5 && w.is_tau_positive());
        }
    }
}
