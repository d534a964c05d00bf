use std::collections::HashSet;

use super::GroupPresentation;
use crate::free::FreeWord;

/// Relators cyclically reduced, trivial ones dropped, one per class under
/// rotation and inversion, in first-seen order.
fn tidy(relators: &[FreeWord]) -> Vec<FreeWord> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in relators {
        let c = r.cyclically_reduced();
        if !c.is_identity() && seen.insert(c.cyclic_key()) {
            out.push(c);
        }
    }
    out
}

/// A generator g occurring once in r, with r rotated to g^e·w.
fn solve_for(r: &FreeWord, g: usize) -> Option<FreeWord> {
    let letters = r.letters();
    let hits: Vec<usize> = (0..letters.len())
        .filter(|&p| letters[p].unsigned_abs() as usize == g)
        .collect();
    if hits.len() != 1 {
        return None;
    }
    let p = hits[0];
    let e = letters[p].signum();
    let rest = FreeWord::from_letters(
        r.rank(),
        letters[p + 1..].iter().chain(&letters[..p]).copied(),
    )
    .expect("letters in range");
    // g^e w = 1, so g = w^{-e}
    Some(if e > 0 { rest.inverse() } else { rest })
}

fn eliminate(p: &GroupPresentation, pos: usize, g: usize, def: &FreeWord) -> GroupPresentation {
    let rank = p.rank() - 1;
    let shift: Vec<FreeWord> = (1..=p.rank())
        .map(|k| match k.cmp(&g) {
            std::cmp::Ordering::Less => FreeWord::generator(rank, k),
            std::cmp::Ordering::Equal => FreeWord::identity(rank),
            std::cmp::Ordering::Greater => FreeWord::generator(rank, k - 1),
        })
        .collect();
    let mut images = shift.clone();
    images[g - 1] = def.substitute(&shift);
    let relators = p
        .relators()
        .iter()
        .enumerate()
        .filter(|(q, _)| *q != pos)
        .map(|(_, r)| r.substitute(&images).with_rank(rank))
        .collect::<Vec<_>>();
    let mut names = p.generators().to_vec();
    names.remove(g - 1);
    GroupPresentation::new(names, tidy(&relators)).expect("ranks agree")
}

/// Best-effort simplification by Tietze moves, at most `budget`
/// eliminations.
///
/// Each round tidies the relators, then eliminates a generator that occurs
/// exactly once in some relator, provided the total relator length does not
/// grow. Candidates are tried shortest relator first, ties broken by the
/// relator's letters and then the generator index.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> GroupPresentation {
    let mut cur =
        GroupPresentation::new(p.generators().to_vec(), tidy(p.relators())).expect("ranks agree");
    for _ in 0..budget {
        let mut order: Vec<usize> = (0..cur.relators().len()).collect();
        order.sort_by(|&a, &b| {
            let (ra, rb) = (&cur.relators()[a], &cur.relators()[b]);
            ra.len()
                .cmp(&rb.len())
                .then_with(|| ra.letters().cmp(rb.letters()))
        });
        let mut next = None;
        'search: for pos in order {
            let r = &cur.relators()[pos];
            for g in 1..=cur.rank() {
                if let Some(def) = solve_for(r, g) {
                    let cand = eliminate(&cur, pos, g, &def);
                    if cand.total_length() <= cur.total_length() {
                        next = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match next {
            Some(n) => cur = n,
            None => break,
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(rank: usize, rels: &[&str]) -> GroupPresentation {
        GroupPresentation::with_default_names(
            rank,
            rels.iter()
                .map(|r| FreeWord::parse(r, rank).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn eliminates_defined_generator() {
        let p = pres(2, &["x2 X1", "x1 x1 x2"]);
        let s = tietze_simplify(&p, 10);
        assert_eq!(s.generators(), ["x2"]);
        assert_eq!(s.relators().len(), 1);
        assert_eq!(s.relators()[0].exponent_sums(), [3]);
    }

    #[test]
    fn empty_relators_unchanged() {
        let p = pres(3, &[]);
        assert_eq!(tietze_simplify(&p, 10), p);
    }

    #[test]
    fn drops_duplicates_and_trivial() {
        let p = pres(2, &["x1 x2 X1 X2", "x2 x1 X2 X1", "x1 X1"]);
        let s = tietze_simplify(&p, 0);
        assert_eq!(s.relators().len(), 1);
    }
}
