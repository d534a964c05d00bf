use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::conj::conjugate_by_braid;
use super::cosets::{m_subset, CosetRep};
use super::presentation::{sp_generators, sp_relations, PureRelation};
use super::{gen_word, PureGen, PureWord};
use crate::error::{Error, Result};
use crate::oracle::sg_identity_holds;
use crate::words::{BraidWord, Letter};

/// g = m^{-1} g₀ m with g₀ a generator of SP_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatch {
    pub generator: PureGen,
    pub petal: BraidWord,
    pub source: PureGen,
    pub certified: bool,
}

/// A defining relation of SP_n obtained by conjugating one of SP_k by m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorMatch {
    pub label: String,
    pub petal: BraidWord,
    pub source: String,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CamomileReport {
    pub n: usize,
    pub k: usize,
    pub generators: Vec<GeneratorMatch>,
    pub relators: Vec<RelatorMatch>,
    /// Generators and relations with no petal expression.
    pub unmatched: Vec<String>,
}

impl CamomileReport {
    pub fn passed(&self) -> bool {
        self.unmatched.is_empty()
            && self.generators.iter().all(|g| g.certified)
            && self.relators.iter().all(|r| r.certified)
    }
}

fn conjugate_word(w: &BraidWord, m: &BraidWord) -> BraidWord {
    m.invert().join(w).join(m)
}

fn lift(w: &PureWord, n: usize) -> PureWord {
    PureWord::raw(
        n,
        &w.letters()
            .iter()
            .map(|l| (l.gen, l.exp))
            .collect::<Vec<_>>(),
    )
}

/// Express SP_n through conjugates of SP_k by the elements of M_{n,k}.
///
/// Petals are tried in order of word length, then lexicographically; the
/// first syntactic match is kept and then checked by the oracle.
pub fn camomile_check(n: usize, k: usize) -> Result<CamomileReport> {
    if !(2 <= k && k < n) {
        return Err(Error::Invalid(format!(
            "need 2 <= k < n, got n = {n}, k = {k}"
        )));
    }
    let mut petals: Vec<CosetRep> = m_subset(n, k)?;
    petals.sort_by_key(|r| (r.word.len(), r.word.to_string()));
    let small_gens = sp_generators(k);
    let small_rels = sp_relations(k);

    // images of SP_k generators and relations under each petal
    let mut gen_images: Vec<(usize, PureGen, PureWord)> = Vec::new();
    let mut rel_images: Vec<(usize, &PureRelation, PureWord, PureWord)> = Vec::new();
    for (p, petal) in petals.iter().enumerate() {
        for &g in &small_gens {
            gen_images.push((p, g, conjugate_by_braid(&PureWord::gen(n, g), &petal.word)?));
        }
        for r in &small_rels {
            let lhs = conjugate_by_braid(&lift(&r.lhs, n), &petal.word)?;
            let rhs = conjugate_by_braid(&lift(&r.rhs, n), &petal.word)?;
            rel_images.push((p, r, lhs, rhs));
        }
    }

    let mut unmatched = Vec::new();
    let mut gen_found = Vec::new();
    for g in sp_generators(n) {
        let target = PureWord::gen(n, g);
        match gen_images.iter().find(|(_, _, img)| *img == target) {
            Some(&(p, g0, _)) => gen_found.push((g, p, g0)),
            None => unmatched.push(g.name()),
        }
    }
    let mut rel_found = Vec::new();
    for r in sp_relations(n) {
        match rel_images
            .iter()
            .find(|(_, _, l, rr)| *l == r.lhs && *rr == r.rhs)
        {
            Some(&(p, r0, _, _)) => rel_found.push((r, p, r0)),
            None => unmatched.push(r.label.clone()),
        }
    }

    // Conjugation by m is a homomorphism, so a relation image is certified
    // once every generator image it uses is.
    let mut needed: BTreeSet<(usize, PureGen)> =
        gen_found.iter().map(|&(_, p, g0)| (p, g0)).collect();
    for (_, p, r0) in &rel_found {
        for l in r0.lhs.letters().iter().chain(r0.rhs.letters()) {
            needed.insert((*p, l.gen));
        }
    }
    let certified_gens: HashMap<(usize, PureGen), bool> = needed
        .into_par_iter()
        .map(|(p, g0)| -> Result<((usize, PureGen), bool)> {
            let m = &petals[p].word;
            let img = conjugate_by_braid(&PureWord::gen(n, g0), m)?;
            let lhs = conjugate_word(&gen_word(g0, n)?, m);
            Ok(((p, g0), sg_identity_holds(&lhs, &img.expand())?))
        })
        .collect::<Result<_>>()?;
    let generators = gen_found
        .iter()
        .map(|&(g, p, g0)| GeneratorMatch {
            generator: g,
            petal: petals[p].word.clone(),
            source: g0,
            certified: certified_gens[&(p, g0)],
        })
        .collect();
    let relators = rel_found
        .par_iter()
        .map(|(r, p, r0)| -> Result<RelatorMatch> {
            let images_ok = r0
                .lhs
                .letters()
                .iter()
                .chain(r0.rhs.letters())
                .all(|l| certified_gens[&(*p, l.gen)]);
            let certified = images_ok && sg_identity_holds(&r.lhs.expand(), &r.rhs.expand())?;
            Ok(RelatorMatch {
                label: r.label.clone(),
                petal: petals[*p].word.clone(),
                source: r0.label.clone(),
                certified,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CamomileReport {
        n,
        k,
        generators,
        relators,
        unmatched,
    })
}

/// The generators of SP_n as images of those of SP_{n-1} under conjugation
/// by e, σ_{n-1}^{-1} and σ_{n-1}^{-1}σ_{n-2}^{-1}. Each entry is a petal
/// with the images it contributes; every image is a single generator.
pub fn generator_union(n: usize) -> Result<Vec<(BraidWord, Vec<PureGen>)>> {
    if n < 3 {
        return Err(Error::Invalid(format!("need n >= 3, got {n}")));
    }
    let petals = [
        BraidWord::identity(n),
        BraidWord::new(n, vec![Letter::sigma_inv(n - 1)])?,
        BraidWord::new(n, vec![Letter::sigma_inv(n - 1), Letter::sigma_inv(n - 2)])?,
    ];
    let mut out = Vec::new();
    for m in petals {
        let mut images = Vec::new();
        for g in sp_generators(n - 1) {
            let img = conjugate_by_braid(&PureWord::gen(n, g), &m)?;
            match img.letters() {
                [l] if l.exp == 1 => images.push(l.gen),
                _ => return Err(Error::Rewrite(format!("{g} conjugated by {m} is {img}"))),
            }
        }
        out.push((m, images));
    }
    Ok(out)
}
