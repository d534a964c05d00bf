use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::model::FiniteSingquandle;
use crate::error::{Error, Result};

/// Default cap on search nodes across the whole enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Cap on the number of models held in memory.
pub const MAX_MODELS: u64 = 1_000_000;

type Table = Vec<Vec<usize>>;

/// Every singquandle on {0, …, q-1}, as raw tables in lexicographic order,
/// or one lexicographically least representative per isomorphism class.
pub fn enumerate_singquandles(q: usize, up_to_iso: bool) -> Result<Vec<FiniteSingquandle>> {
    enumerate_with_budget(q, up_to_iso, DEFAULT_NODE_BUDGET)
}

pub fn enumerate_with_budget(
    q: usize,
    up_to_iso: bool,
    budget: u64,
) -> Result<Vec<FiniteSingquandle>> {
    if q == 0 || q > 5 {
        return Err(Error::Invalid(format!(
            "order must be between 1 and 5, got {q}"
        )));
    }
    let nodes = AtomicU64::new(0);
    let models = AtomicU64::new(0);
    let mut quandles = Vec::new();
    let mut star = vec![vec![usize::MAX; q]; q];
    for (x, row) in star.iter_mut().enumerate() {
        row[x] = x;
    }
    quandle_search(&mut star, 0, q, &mut quandles);
    let found: Vec<Vec<FiniteSingquandle>> = quandles
        .par_iter()
        .map(|s| {
            let mut sb = vec![vec![0; q]; q];
            for x in 0..q {
                for y in 0..q {
                    sb[s[x][y]][y] = x;
                }
            }
            let mut l = vec![None; q * q];
            let mut out = Vec::new();
            circ_search(s, &sb, &mut l, 0, q, &nodes, &models, budget, &mut out)?;
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<FiniteSingquandle> = found.into_iter().flatten().collect();
    if up_to_iso {
        let perms = permutations(q);
        let classes: BTreeSet<FiniteSingquandle> = out
            .iter()
            .map(|m| perms.iter().map(|p| m.relabel(p)).min().expect("nonempty"))
            .collect();
        out = classes.into_iter().collect();
    }
    out.sort();
    Ok(out)
}

fn quandle_search(s: &mut Table, cell: usize, q: usize, out: &mut Vec<Table>) {
    if cell == q * q {
        out.push(s.clone());
        return;
    }
    let (x, y) = (cell / q, cell % q);
    if x == y {
        return quandle_search(s, cell + 1, q, out);
    }
    for v in 0..q {
        // right translation by y must be injective; v = y would collide with y*y = y
        if (0..q).any(|w| s[w][y] == v) {
            continue;
        }
        s[x][y] = v;
        if distributive_so_far(s, q) {
            quandle_search(s, cell + 1, q, out);
        }
        s[x][y] = usize::MAX;
    }
}

fn distributive_so_far(s: &Table, q: usize) -> bool {
    let g = |a: usize, b: usize| {
        if a == usize::MAX || b == usize::MAX {
            usize::MAX
        } else {
            s[a][b]
        }
    };
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let lhs = g(g(x, y), z);
                let rhs = g(g(x, z), g(y, z));
                if lhs != usize::MAX && rhs != usize::MAX && lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// ∘_r is determined by ∘_l through x ∘_r y = y ∘_l (x * y).
fn circ_r(s: &Table, l: &[Option<usize>], q: usize, x: usize, y: usize) -> Option<usize> {
    l[y * q + s[x][y]]
}

fn consistent(s: &Table, sb: &Table, l: &[Option<usize>], q: usize) -> bool {
    let lo = |a: Option<usize>, b: Option<usize>| l[a? * q + b?];
    let ro = |a: Option<usize>, b: Option<usize>| circ_r(s, l, q, a?, b?);
    let so = |a: Option<usize>, b: Option<usize>| Some(s[a?][b?]);
    let sbo = |a: Option<usize>, b: Option<usize>| Some(sb[a?][b?]);
    let clash = |a: Option<usize>, b: Option<usize>| matches!((a, b), (Some(u), Some(v)) if u != v);
    for x in 0..q {
        for y in 0..q {
            let (sx, sy) = (Some(x), Some(y));
            if clash(so(lo(sx, sy), ro(sx, sy)), ro(sy, so(sx, sy))) {
                return false;
            }
            for z in 0..q {
                let sz = Some(z);
                if clash(so(lo(sx, sy), sz), lo(so(sx, sz), so(sy, sz)))
                    || clash(so(ro(sx, sy), sz), ro(so(sx, sz), so(sy, sz)))
                    || clash(sbo(lo(sx, sy), sz), lo(sbo(sx, sz), sbo(sy, sz)))
                    || clash(sbo(ro(sx, sy), sz), ro(sbo(sx, sz), sbo(sy, sz)))
                    || clash(so(sbo(sy, lo(sx, sz)), sx), sbo(so(sy, ro(sx, sz)), sz))
                {
                    return false;
                }
            }
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn circ_search(
    s: &Table,
    sb: &Table,
    l: &mut Vec<Option<usize>>,
    cell: usize,
    q: usize,
    nodes: &AtomicU64,
    models: &AtomicU64,
    budget: u64,
    out: &mut Vec<FiniteSingquandle>,
) -> Result<()> {
    if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
        return Err(Error::Budget(format!(
            "singquandle search exceeded {budget} nodes"
        )));
    }
    if cell == q * q {
        let lt: Table = (0..q)
            .map(|x| (0..q).map(|y| l[x * q + y].expect("filled")).collect())
            .collect();
        let rt: Table = (0..q)
            .map(|x| (0..q).map(|y| lt[y][s[x][y]]).collect())
            .collect();
        let m = FiniteSingquandle::new(s.clone(), lt, rt)?;
        if m.is_singquandle() {
            out.push(m);
            if models.fetch_add(1, Ordering::Relaxed) >= MAX_MODELS {
                return Err(Error::Budget(format!("more than {MAX_MODELS} models")));
            }
        }
        return Ok(());
    }
    for v in 0..q {
        l[cell] = Some(v);
        if consistent(s, sb, l, q) {
            circ_search(s, sb, l, cell + 1, q, nodes, models, budget, out)?;
        }
    }
    l[cell] = None;
    Ok(())
}

fn permutations(q: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; q], &mut out);
    out
}
