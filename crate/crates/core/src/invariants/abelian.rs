use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::GroupPresentation;

/// Z^free_rank × Z/d_1 × … × Z/d_k with d_1 | d_2 | … and each d_i ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    /// Number of homomorphisms into Z/k: k^r · ∏ gcd(k, d_i).
    pub fn homs_into_cyclic(&self, k: u64) -> BigInt {
        let k = BigInt::from(k);
        let mut out = num_traits::pow(k.clone(), self.free_rank);
        for d in &self.torsion {
            out *= d.gcd(&k);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// Diagonal of the Smith normal form of an integer matrix (nonzero
/// entries only, each dividing the next).
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: least nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.map_or(true, |(bi, bj)| v.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t].div_floor(&m[t][t]);
            if !q.is_zero() {
                for j in t..cols {
                    let d = &q * &m[t][j];
                    m[i][j] -= d;
                }
            }
            clean &= m[i][t].is_zero();
        }
        for j in t + 1..cols {
            let q = m[t][j].div_floor(&m[t][t]);
            if !q.is_zero() {
                for i in t..rows {
                    let d = &q * &m[i][t];
                    m[i][j] -= d;
                }
            }
            clean &= m[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &m[t][t]).is_zero()));
        if let Some(i) = bad {
            for j in t..cols {
                let v = m[i][j].clone();
                m[t][j] += v;
            }
            continue;
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let cols = p.rank();
    let m: Vec<Vec<BigInt>> = p
        .relators()
        .iter()
        .map(|r| r.exponent_sums().into_iter().map(BigInt::from).collect())
        .collect();
    let diag = smith_diagonal(m, cols);
    AbelianInvariants {
        free_rank: cols - diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}
