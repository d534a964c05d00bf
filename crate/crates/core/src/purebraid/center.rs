use super::presentation::{sp_generators, sp_relations};
use super::{PureGen, PureKind, PureWord};
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::invariants::GroupPresentation;
use crate::words::{BraidWord, Letter};

/// The full twist Δ_n = (σ_1…σ_{n-1})^n.
pub fn delta(n: usize) -> BraidWord {
    let mut letters = Vec::new();
    for _ in 0..n {
        letters.extend((1..n).map(Letter::sigma));
    }
    BraidWord::from_raw(n, letters)
}

/// δ_k = a_{1k} a_{2k} … a_{k-1,k}.
pub fn delta_k(k: usize, n: usize) -> PureWord {
    PureWord::raw(
        n,
        &(1..k).map(|i| (PureGen::a(i, k), 1)).collect::<Vec<_>>(),
    )
}

/// An equation between braid words that holds in SG_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureIdentity {
    pub name: String,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

fn deltas(from: usize, to: usize, n: usize) -> PureWord {
    let mut out = PureWord::identity(n);
    for q in from..=to {
        out = out.mul(&delta_k(q, n));
    }
    out
}

/// x^g = g^{-1} x g
fn conj(x: &PureWord, g: &PureWord) -> PureWord {
    g.inverse().mul(x).mul(g)
}

/// The identities behind the centrality of Δ_n: each generator is fixed by
/// conjugation with a tail product of the δ_k, each δ_j is fixed by the
/// generators on lower strands, Δ_n = δ_2…δ_n, and Δ_n commutes with every
/// generator.
pub fn center_identities(n: usize) -> Vec<PureIdentity> {
    let a = PureGen::a;
    let w = |x: PureGen| PureWord::gen(n, x);
    let mut out = Vec::new();
    let mut push = |name: String, lhs: PureWord, rhs: PureWord| {
        out.push(PureIdentity {
            name,
            lhs: lhs.expand(),
            rhs: rhs.expand(),
        });
    };
    for kind in [PureKind::A, PureKind::B] {
        let x = |i, j| PureGen::with_kind(kind, i, j);
        for j in 3..=n {
            let d = deltas(3, j, n);
            let g1 = PureWord::raw(n, &[(a(2, j), -1), (a(1, j), -1)]).mul(&d);
            push(
                format!("fix-first[{}]", x(1, j)),
                conj(&w(x(1, j)), &g1),
                w(x(1, j)),
            );
            let g2 = PureWord::raw(n, &[(a(1, j), -1)]).mul(&d);
            push(
                format!("fix-second[{}]", x(2, j)),
                conj(&w(x(2, j)), &g2),
                w(x(2, j)),
            );
            for k in 3..j {
                let g = deltas(k, j, n);
                push(
                    format!("fix-tail[{}]", x(k, j)),
                    conj(&w(x(k, j)), &g),
                    w(x(k, j)),
                );
            }
        }
    }
    for j in 2..=n {
        for k in 2..j {
            for i in 1..k {
                for y in [PureGen::a(i, k), PureGen::b(i, k)] {
                    let d = delta_k(j, n);
                    push(format!("band-invariant[{j};{y}]"), conj(&d, &w(y)), d);
                }
            }
        }
    }
    let full = delta(n);
    out.push(PureIdentity {
        name: "full-twist-product".to_string(),
        lhs: full.clone(),
        rhs: deltas(2, n, n).expand(),
    });
    for g in sp_generators(n) {
        let gw = PureWord::gen(n, g).expand();
        out.push(PureIdentity {
            name: format!("full-twist-central[{g}]"),
            lhs: full.join(&gw),
            rhs: gw.join(&full),
        });
    }
    out
}

/// SP_n on the generators other than a_12 together with D = Δ_n: the
/// defining relations of SP_n that avoid a_12, plus [D, x] = 1 for every
/// other generator x.
pub fn center_presentation(n: usize) -> Result<GroupPresentation> {
    if n < 3 {
        return Err(Error::Invalid(format!("need n >= 3, got {n}")));
    }
    let gens: Vec<PureGen> = sp_generators(n)
        .into_iter()
        .filter(|g| *g != PureGen::a(1, 2))
        .collect();
    let rank = gens.len() + 1;
    let d = rank as i32;
    let mut relators = Vec::new();
    for r in sp_relations(n) {
        if r.mentions(PureGen::a(1, 2)) {
            continue;
        }
        relators.push(r.relator().to_free(&gens).with_rank(rank));
    }
    for k in 1..=gens.len() as i32 {
        let c = FreeWord::from_letters(rank, [-d, -k, d, k]).expect("indices in range");
        relators.push(c);
    }
    let mut names: Vec<String> = gens.iter().map(|g| g.name()).collect();
    names.push("D".to_string());
    GroupPresentation::new(names, relators)
}
