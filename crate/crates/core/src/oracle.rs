//! Exact equality for braid words.
//!
//! Classical words are compared through the Artin action on F_n. Words in
//! SB_n are expanded by τ_i ↦ σ_i − σ_i^{-1} into the group ring Z[B_n],
//! whose elements are keyed by Artin images; this expansion is injective,
//! so equal expansions mean equal singular braids.
//!
//! Composition convention: for a word u·v, Artin(u·v) = Artin(u) ∘ Artin(v),
//! i.e. the leftmost letter acts on the generators last.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::free::{FreeEndo, FreeWord};
use crate::words::{BraidWord, Kind, Letter};

/// Default cap on the number of τ-letters expanded (2^16 branches).
pub const DEFAULT_TAU_BUDGET: usize = 16;

/// Canonical serialization of an Artin image, see [`FreeEndo::key`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalKey(pub Vec<i32>);

/// A finite Z-combination of classical braids, keyed by Artin image.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZBnElement {
    terms: BTreeMap<NormalKey, i64>,
}

impl ZBnElement {
    pub fn terms(&self) -> &BTreeMap<NormalKey, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the classical braid `w` (σ-only).
    pub fn coefficient(&self, w: &BraidWord) -> Result<i64> {
        let key = NormalKey(artin_endo(w)?.key());
        Ok(self.terms.get(&key).copied().unwrap_or(0))
    }
}

/// Artin automorphism of one σ-letter.
pub fn artin_letter(letter: Letter, rank: usize) -> FreeEndo {
    debug_assert!(letter.is_sigma());
    let i = letter.index as i32;
    let w = |l: &[i32]| FreeWord::from_letters(rank, l.iter().copied()).expect("index in range");
    if letter.exp > 0 {
        FreeEndo::local(rank, letter.index, w(&[i, i + 1, -i]), w(&[i]))
    } else {
        FreeEndo::local(rank, letter.index, w(&[i + 1]), w(&[-(i + 1), i, i + 1]))
    }
}

/// Right-multiply the running image `cur` by a σ-letter: returns cur ∘ σ.
pub(crate) fn apply_sigma(cur: &FreeEndo, letter: Letter) -> FreeEndo {
    cur.compose(&artin_letter(letter, cur.rank()))
}

pub fn artin_endo(w: &BraidWord) -> Result<FreeEndo> {
    let mut cur = FreeEndo::identity(w.strands());
    for &l in w.letters() {
        if l.is_tau() {
            return Err(Error::SingularLetter);
        }
        cur = apply_sigma(&cur, l);
    }
    Ok(cur)
}

pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    check_strands(u, v)?;
    Ok(artin_endo(u)? == artin_endo(v)?)
}

fn check_strands(u: &BraidWord, v: &BraidWord) -> Result<()> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(())
}

/// Desingularization with a configurable τ budget.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub tau_budget: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            tau_budget: DEFAULT_TAU_BUDGET,
        }
    }
}

impl Oracle {
    pub fn new(tau_budget: usize) -> Self {
        Oracle { tau_budget }
    }

    pub fn desingularize(&self, w: &BraidWord) -> Result<ZBnElement> {
        if !w.is_tau_positive() {
            return Err(Error::InverseSingular);
        }
        let taus = w.tau_count();
        if taus > self.tau_budget {
            return Err(Error::ExpansionBudget {
                taus,
                budget: self.tau_budget,
            });
        }
        // Prefixes with equal Artin image have equal continuations, so like
        // terms are merged after every letter.
        let mut state: HashMap<FreeEndo, i64> = HashMap::new();
        state.insert(FreeEndo::identity(w.strands()), 1);
        for &l in w.letters() {
            let mut next: HashMap<FreeEndo, i64> = HashMap::with_capacity(state.len() * 2);
            let branches: &[(Letter, i64)] = match l.kind {
                Kind::Sigma => &[(l, 1)][..],
                Kind::Tau => &[
                    (Letter::sigma(l.index), 1),
                    (Letter::sigma_inv(l.index), -1),
                ][..],
            };
            for (endo, c) in &state {
                for &(s, sign) in branches {
                    *next.entry(apply_sigma(endo, s)).or_insert(0) += c * sign;
                }
            }
            next.retain(|_, c| *c != 0);
            state = next;
        }
        Ok(ZBnElement {
            terms: state
                .into_iter()
                .map(|(e, c)| (NormalKey(e.key()), c))
                .collect(),
        })
    }

    pub fn sb_equal(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        check_strands(u, v)?;
        Ok(self.desingularize(u)? == self.desingularize(v)?)
    }

    pub fn sg_identity_holds(&self, lhs: &BraidWord, rhs: &BraidWord) -> Result<bool> {
        let (l, r) = to_tau_positive(lhs, rhs)?;
        self.sb_equal(&l, &r)
    }
}

pub fn desingularize(w: &BraidWord) -> Result<ZBnElement> {
    Oracle::default().desingularize(w)
}

/// Decide u = v in SB_n for τ-positive words.
pub fn sb_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    Oracle::default().sb_equal(u, v)
}

/// Decide lhs = rhs in SG_n for equations that [`to_tau_positive`] can clear.
pub fn sg_identity_holds(lhs: &BraidWord, rhs: &BraidWord) -> Result<bool> {
    Oracle::default().sg_identity_holds(lhs, rhs)
}

/// Rewrite lhs = rhs into an equivalent equation in SG_n with both sides
/// τ-positive.
///
/// Conjugation shapes are peeled outside-in: u^{-1} x u = y becomes
/// x u = u y, and u x u^{-1} = y becomes u x = y u. If that does not clear
/// every τ^{-1}, the relator lhs·rhs^{-1} is cut cyclically between its block
/// of positive and its block of negative singular letters.
pub fn to_tau_positive(lhs: &BraidWord, rhs: &BraidWord) -> Result<(BraidWord, BraidWord)> {
    check_strands(lhs, rhs)?;
    if lhs.is_tau_positive() && rhs.is_tau_positive() {
        return Ok((lhs.clone(), rhs.clone()));
    }
    if let Some(pair) = peel_conjugations(lhs, rhs) {
        return Ok(pair);
    }
    cyclic_cut(lhs, rhs)
}

fn all_positive(w: &[Letter]) -> bool {
    w.iter().all(|l| !(l.is_tau() && l.exp < 0))
}

fn inverse_of(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

fn peel_conjugations(lhs: &BraidWord, rhs: &BraidWord) -> Option<(BraidWord, BraidWord)> {
    let n = lhs.strands();
    let mut l: Vec<Letter> = lhs.letters().to_vec();
    let mut r: Vec<Letter> = rhs.letters().to_vec();
    let limit = 4 * (l.len() + r.len()) + 4;
    for _ in 0..limit {
        if all_positive(&l) && all_positive(&r) {
            return Some((BraidWord::from_raw(n, l), BraidWord::from_raw(n, r)));
        }
        if all_positive(&l) {
            std::mem::swap(&mut l, &mut r);
            continue;
        }
        let len = l.len();
        let mut depth = 0;
        while 2 * (depth + 1) <= len && l[depth] == l[len - 1 - depth].inverse() {
            depth += 1;
        }
        if depth == 0 {
            return None;
        }
        let u = l[len - depth..].to_vec();
        let x = l[depth..len - depth].to_vec();
        if all_positive(&u) {
            // u^{-1} x u = r  ⟺  x u = u r
            let mut nl = x;
            nl.extend_from_slice(&u);
            let mut nr = u;
            nr.extend_from_slice(&r);
            l = nl;
            r = nr;
        } else {
            // v x v^{-1} = r  ⟺  v x = r v, with v = u^{-1}
            let v = inverse_of(&u);
            let mut nl = v.clone();
            nl.extend_from_slice(&x);
            r.extend_from_slice(&v);
            l = nl;
        }
    }
    None
}

fn cyclic_cut(lhs: &BraidWord, rhs: &BraidWord) -> Result<(BraidWord, BraidWord)> {
    let n = lhs.strands();
    let mut w: Vec<Letter> = Vec::new();
    for &a in lhs.letters().iter().chain(rhs.invert().letters()) {
        if w.last() == Some(&a.inverse()) {
            w.pop();
        } else {
            w.push(a);
        }
    }
    let mut s = 0;
    let mut e = w.len();
    while e > s + 1 && w[s] == w[e - 1].inverse() {
        s += 1;
        e -= 1;
    }
    let w = w[s..e].to_vec();
    let taus: Vec<(usize, i8)> = w
        .iter()
        .enumerate()
        .filter(|(_, l)| l.is_tau())
        .map(|(p, l)| (p, l.exp))
        .collect();
    if taus.iter().all(|&(_, e)| e > 0) {
        return Ok((BraidWord::from_raw(n, w), BraidWord::identity(n)));
    }
    if taus.iter().all(|&(_, e)| e < 0) {
        return Ok((
            BraidWord::identity(n),
            BraidWord::from_raw(n, inverse_of(&w)),
        ));
    }
    let m = taus.len();
    let changes = (0..m).filter(|&t| taus[t].1 != taus[(t + 1) % m].1).count();
    if changes > 2 {
        return Err(Error::NotClearable(format!(
            "{lhs} = {rhs}: singular letters of both signs interleave"
        )));
    }
    let start = (0..m)
        .find(|&t| taus[t].1 > 0 && taus[(t + m - 1) % m].1 < 0)
        .expect("two sign changes imply a block start");
    let cut = taus[(start + m - 1) % m].0 + 1;
    let rot: Vec<Letter> = w[cut..].iter().chain(w[..cut].iter()).copied().collect();
    let first_neg = rot
        .iter()
        .position(|l| l.is_tau() && l.exp < 0)
        .expect("negative letter");
    let last_pos = rot[..first_neg]
        .iter()
        .rposition(|l| l.is_tau())
        .expect("positive letter");
    let p = rot[..=last_pos].to_vec();
    let q = inverse_of(&rot[last_pos + 1..]);
    Ok((BraidWord::from_raw(n, p), BraidWord::from_raw(n, q)))
}
