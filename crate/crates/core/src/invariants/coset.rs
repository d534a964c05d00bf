use std::collections::VecDeque;
use std::fmt;

use super::GroupPresentation;
use crate::free::FreeWord;

/// Outcome of a bounded coset enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetIndex {
    Index(usize),
    /// The coset cap was reached before the table closed.
    Unknown,
}

impl fmt::Display for CosetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetIndex::Index(n) => write!(f, "{n}"),
            CosetIndex::Unknown => f.write_str("unknown"),
        }
    }
}

const NONE: usize = usize::MAX;

struct Table {
    /// Column 2k is x_{k+1}, column 2k+1 its inverse.
    rows: Vec<Vec<usize>>,
    /// Forwarding pointers; p[c] == c for live cosets.
    p: Vec<usize>,
    cols: usize,
    max: usize,
    queue: VecDeque<usize>,
}

struct CapReached;

fn col(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

impl Table {
    fn new(rank: usize, max: usize) -> Self {
        Table {
            rows: vec![vec![NONE; 2 * rank]],
            p: vec![0],
            cols: 2 * rank,
            max,
            queue: VecDeque::new(),
        }
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), CapReached> {
        if self.rows.len() >= self.max {
            return Err(CapReached);
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.cols]);
        self.p.push(d);
        self.rows[c][x] = d;
        self.rows[d][x ^ 1] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.p[r] != r {
            r = self.p[r];
        }
        let mut c = c;
        while self.p[c] != r {
            let next = self.p[c];
            self.p[c] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.p[hi] = lo;
            self.queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.cols {
                let f = self.rows[e][x];
                if f == NONE {
                    continue;
                }
                self.rows[f][x ^ 1] = NONE;
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if self.rows[e1][x] != NONE {
                    let t = self.rows[e1][x];
                    self.merge(f1, t);
                } else if self.rows[f1][x ^ 1] != NONE {
                    let t = self.rows[f1][x ^ 1];
                    self.merge(e1, t);
                } else {
                    self.rows[e1][x] = f1;
                    self.rows[f1][x ^ 1] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), CapReached> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.rows[f][w[i]] != NONE {
                f = self.rows[f][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.rows[b][w[j as usize] ^ 1] != NONE {
                b = self.rows[b][w[j as usize] ^ 1];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.rows[f][w[i]] = b;
                self.rows[b][w[i] ^ 1] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Index of the subgroup generated by `subgroup` in the group presented by
/// `p`, by HLT coset enumeration with at most `max_cosets` cosets ever
/// defined.
pub fn todd_coxeter(p: &GroupPresentation, subgroup: &[FreeWord], max_cosets: usize) -> CosetIndex {
    let run = || -> Result<usize, CapReached> {
        let mut t = Table::new(p.rank(), max_cosets.max(1));
        let rels: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .map(|r| r.letters().iter().map(|&a| col(a)).collect())
            .collect();
        for w in subgroup {
            let w: Vec<usize> = w.letters().iter().map(|&a| col(a)).collect();
            t.scan_and_fill(0, &w)?;
        }
        let mut c = 0;
        while c < t.rows.len() {
            for r in &rels {
                if t.p[c] != c {
                    break;
                }
                t.scan_and_fill(c, r)?;
            }
            if t.p[c] == c {
                for x in 0..t.cols {
                    if t.rows[c][x] == NONE {
                        t.define(c, x)?;
                    }
                }
            }
            c += 1;
        }
        Ok((0..t.rows.len()).filter(|&c| t.p[c] == c).count())
    };
    match run() {
        Ok(n) => CosetIndex::Index(n),
        Err(CapReached) => CosetIndex::Unknown,
    }
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
    fn finite_groups() {
        assert_eq!(
            todd_coxeter(&pres(1, &["x1 x1"]), &[], 100),
            CosetIndex::Index(2)
        );
        // S3 = <a, b | a^2, b^3, (ab)^2>
        let s3 = pres(2, &["x1 x1", "x2 x2 x2", "x1 x2 x1 x2"]);
        assert_eq!(todd_coxeter(&s3, &[], 1000), CosetIndex::Index(6));
        assert_eq!(
            todd_coxeter(&s3, &[FreeWord::parse("x1", 2).unwrap()], 1000),
            CosetIndex::Index(3)
        );
        // A5 = <a, b | a^2, b^3, (ab)^5>
        let a5 = pres(2, &["x1 x1", "x2 x2 x2", "x1 x2 x1 x2 x1 x2 x1 x2 x1 x2"]);
        assert_eq!(todd_coxeter(&a5, &[], 10_000), CosetIndex::Index(60));
        assert_eq!(todd_coxeter(&pres(0, &[]), &[], 10), CosetIndex::Index(1));
    }

    #[test]
    fn infinite_group_hits_cap() {
        let trefoil = pres(2, &["x1 x2 x1 X2 X1 X2"]);
        assert_eq!(todd_coxeter(&trefoil, &[], 10_000), CosetIndex::Unknown);
    }
}
