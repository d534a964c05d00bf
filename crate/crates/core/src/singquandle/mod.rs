//! Oriented singquandles: free terms, the action Φ of SB_n on them,
//! fundamental singquandle presentations, and finite models.

mod enumerate;
mod model;
mod term;

pub use enumerate::{
    enumerate_singquandles, enumerate_with_budget, DEFAULT_NODE_BUDGET, MAX_MODELS,
};
pub use model::{FiniteSingquandle, AXIOMS};
pub use term::{fundamental_singquandle, sq_phi_word, SQOp, SQPresentation, SQTerm};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::relations::sb_relations;

/// Largest number of assignments a coloring count will visit.
pub const COLORING_BUDGET: u64 = 50_000_000;

pub fn eval_term(model: &FiniteSingquandle, t: &SQTerm, assignment: &[usize]) -> usize {
    model.eval_term(t, assignment)
}

fn assignment(mut code: u64, q: usize, rank: usize) -> Vec<usize> {
    (0..rank)
        .map(|_| {
            let v = (code % q as u64) as usize;
            code /= q as u64;
            v
        })
        .collect()
}

/// Number of maps from the generators to the model satisfying every
/// relation.
pub fn count_sq_colorings(p: &SQPresentation, model: &FiniteSingquandle) -> Result<u64> {
    let q = model.order();
    let total = (q as u64)
        .checked_pow(p.rank as u32)
        .filter(|&t| t <= COLORING_BUDGET)
        .ok_or_else(|| Error::Budget(format!("{q}^{} colorings", p.rank)))?;
    Ok((0..total)
        .into_par_iter()
        .filter(|&code| {
            let a = assignment(code, q, p.rank);
            p.relations
                .iter()
                .all(|(l, r)| model.eval_term(l, &a) == model.eval_term(r, &a))
        })
        .count() as u64)
}

/// Defining relations of SB_n whose Φ-images differ in `model` for some
/// assignment of the generators.
pub fn phi_relation_failures(model: &FiniteSingquandle, n: usize) -> Result<Vec<String>> {
    let q = model.order();
    let total = (q as u64).pow(n as u32);
    let mut bad = Vec::new();
    for r in sb_relations(n) {
        let lhs = sq_phi_word(&r.lhs)?;
        let rhs = sq_phi_word(&r.rhs)?;
        let ok = (0..total).all(|code| {
            let a = assignment(code, q, n);
            lhs.iter()
                .zip(&rhs)
                .all(|(u, v)| model.eval_term(u, &a) == model.eval_term(v, &a))
        });
        if !ok {
            bad.push(r.name);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_braid, BraidWord};

    #[test]
    fn colorings_of_small_links() {
        let models = enumerate_singquandles(3, false).unwrap();
        let trivial = fundamental_singquandle(&BraidWord::identity(2)).unwrap();
        let trefoil = fundamental_singquandle(&parse_braid("s1 s1 t1", 2).unwrap()).unwrap();
        for m in &models {
            assert_eq!(count_sq_colorings(&trivial, m).unwrap(), 9);
        }
        let one = enumerate_singquandles(1, false).unwrap();
        assert_eq!(count_sq_colorings(&trefoil, &one[0]).unwrap(), 1);
    }

    #[test]
    fn phi_respects_relations_in_models() {
        for m in enumerate_singquandles(2, false).unwrap() {
            assert!(phi_relation_failures(&m, 4).unwrap().is_empty());
        }
    }

    #[test]
    fn circ_l_from_circ_r_identity() {
        for m in enumerate_singquandles(3, false).unwrap() {
            for y in 0..3 {
                for z in 0..3 {
                    assert_eq!(m.circ_l(y, z), m.circ_r(m.star_bar(z, y), y));
                }
            }
        }
    }
}
