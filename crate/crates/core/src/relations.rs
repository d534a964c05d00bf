//! Defining relations of SB_n, instantiated for every legal index.

use crate::words::{BraidWord, Letter};

/// A named equation between two braid words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidRelation {
    pub name: String,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

/// Every instance of the defining relations of SB_n, one per ordered index
/// tuple: braid and far commutation for σ, far commutation among τ and
/// between τ and σ, τ_iσ_i = σ_iτ_i, and the two sliding relations.
pub fn sb_relations(n: usize) -> Vec<BraidRelation> {
    let s = Letter::sigma;
    let t = Letter::tau;
    let mut out = Vec::new();
    let mut push = |name: String, l: Vec<Letter>, r: Vec<Letter>| {
        out.push(BraidRelation {
            name,
            lhs: BraidWord::from_raw(n, l),
            rhs: BraidWord::from_raw(n, r),
        });
    };
    for i in 1..n.saturating_sub(1) {
        push(
            format!("braid[{i}]"),
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        );
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                push(
                    format!("far-sigma[{i},{j}]"),
                    vec![s(i), s(j)],
                    vec![s(j), s(i)],
                );
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                push(
                    format!("far-tau[{i},{j}]"),
                    vec![t(i), t(j)],
                    vec![t(j), t(i)],
                );
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                push(
                    format!("far-tau-sigma[{i},{j}]"),
                    vec![t(i), s(j)],
                    vec![s(j), t(i)],
                );
            }
        }
    }
    for i in 1..n {
        push(
            format!("tau-sigma[{i}]"),
            vec![t(i), s(i)],
            vec![s(i), t(i)],
        );
    }
    for i in 1..n.saturating_sub(1) {
        push(
            format!("slide-up[{i}]"),
            vec![s(i), s(i + 1), t(i)],
            vec![t(i + 1), s(i), s(i + 1)],
        );
    }
    for i in 1..n.saturating_sub(1) {
        push(
            format!("slide-down[{i}]"),
            vec![s(i + 1), s(i), t(i + 1)],
            vec![t(i), s(i + 1), s(i)],
        );
    }
    out
}
