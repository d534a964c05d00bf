use super::{PureGen, PureKind, PureWord};
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::invariants::GroupPresentation;

/// A named equation between words in the generators of SP_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureRelation {
    pub family: &'static str,
    pub label: String,
    pub lhs: PureWord,
    pub rhs: PureWord,
}

impl PureRelation {
    /// lhs·rhs^{-1}, freely reduced.
    pub fn relator(&self) -> PureWord {
        self.lhs.mul(&self.rhs.inverse())
    }

    pub fn mentions(&self, g: PureGen) -> bool {
        self.lhs.mentions(g) || self.rhs.mentions(g)
    }

    /// Largest strand index used.
    pub fn top_index(&self) -> usize {
        self.lhs
            .letters()
            .iter()
            .chain(self.rhs.letters())
            .map(|l| l.gen.j)
            .max()
            .unwrap_or(0)
    }
}

/// a_ij for all i < j in lexicographic order, then b_ij likewise.
pub fn sp_generators(n: usize) -> Vec<PureGen> {
    let mut out = Vec::new();
    for kind in [PureKind::A, PureKind::B] {
        for i in 1..n {
            for j in i + 1..=n {
                out.push(PureGen::with_kind(kind, i, j));
            }
        }
    }
    out
}

fn sign(e: i8) -> char {
    if e > 0 {
        '+'
    } else {
        '-'
    }
}

fn kind_tag(k: PureKind) -> &'static str {
    match k {
        PureKind::A => "a",
        PureKind::B => "b",
    }
}

struct Builder {
    n: usize,
    out: Vec<PureRelation>,
}

impl Builder {
    fn word(&self, letters: &[(PureGen, i8)]) -> PureWord {
        PureWord::raw(self.n, letters)
    }

    /// c^e x c^{-e}
    fn conj(&self, x: &PureWord, c: &PureWord, e: i8) -> PureWord {
        if e > 0 {
            c.mul(x).mul(&c.inverse())
        } else {
            c.inverse().mul(x).mul(c)
        }
    }

    /// y^{-e} x y^{e} for a single generator y
    fn conj_gen(&self, x: &PureWord, y: PureGen, e: i8) -> PureWord {
        self.word(&[(y, -e)]).mul(x).mul(&self.word(&[(y, e)]))
    }

    fn push(&mut self, family: &'static str, label: String, lhs: PureWord, rhs: PureWord) {
        let rel = PureRelation {
            family,
            label,
            lhs,
            rhs,
        };
        if !self
            .out
            .iter()
            .any(|r| r.lhs == rel.lhs && r.rhs == rel.rhs)
        {
            self.out.push(rel);
        }
    }
}

fn far_pair(i: usize, m: usize, k: usize, j: usize) -> bool {
    i < m && k < j && ((k < i && i < m && m < j) || m < k)
}

/// Every index and sign instance of the defining relations of SP_n.
pub fn sp_relations(n: usize) -> Vec<PureRelation> {
    let a = PureGen::a;
    let b = PureGen::b;
    let mut bl = Builder { n, out: Vec::new() };
    for i in 1..n {
        for j in i + 1..=n {
            let lhs = bl.word(&[(a(i, j), 1), (b(i, j), 1)]);
            let rhs = bl.word(&[(b(i, j), 1), (a(i, j), 1)]);
            bl.push("commute-ab", format!("commute-ab[{i},{j}]"), lhs, rhs);
        }
    }
    for e in [1i8, -1] {
        for kind in [PureKind::A, PureKind::B] {
            let x = |i, j| PureGen::with_kind(kind, i, j);
            let t = kind_tag(kind);
            for i in 1..=n {
                for k in i + 1..=n {
                    for j in k + 1..=n {
                        let target = bl.word(&[(x(k, j), 1)]);
                        let lhs = bl.conj_gen(&target, a(i, k), e);
                        let c = bl.word(&[(a(i, j), 1), (a(k, j), 1)]);
                        let rhs = bl.conj(&target, &c, e);
                        let family = if kind == PureKind::A {
                            "conj-lower-a"
                        } else {
                            "conj-lower-b"
                        };
                        bl.push(
                            family,
                            format!("conj-lower-{t}[{i},{k},{j};{}]", sign(e)),
                            lhs,
                            rhs,
                        );
                    }
                }
            }
            for k in 1..=n {
                for m in k + 1..=n {
                    for j in m + 1..=n {
                        let target = bl.word(&[(x(k, j), 1)]);
                        let lhs = bl.conj_gen(&target, a(k, m), e);
                        let c = bl.word(&[(a(k, j), 1), (a(m, j), 1)]);
                        let rhs = bl.conj(&target, &c, e);
                        let family = if kind == PureKind::A {
                            "conj-shared-a"
                        } else {
                            "conj-shared-b"
                        };
                        bl.push(
                            family,
                            format!("conj-shared-{t}[{k},{m},{j};{}]", sign(e)),
                            lhs,
                            rhs,
                        );
                    }
                }
            }
            for i in 1..=n {
                for k in i + 1..=n {
                    for m in k + 1..=n {
                        for j in m + 1..=n {
                            let target = bl.word(&[(x(k, j), 1)]);
                            let lhs = bl.conj_gen(&target, a(i, m), e);
                            // [a_ij^{-e}, a_mj^{-e}] = a_ij^e a_mj^e a_ij^{-e} a_mj^{-e}
                            let c = bl.word(&[
                                (a(i, j), e),
                                (a(m, j), e),
                                (a(i, j), -e),
                                (a(m, j), -e),
                            ]);
                            let rhs = bl.conj(&target, &c, e);
                            let family = if kind == PureKind::A {
                                "conj-commutator-a"
                            } else {
                                "conj-commutator-b"
                            };
                            bl.push(
                                family,
                                format!("conj-commutator-{t}[{i},{k},{m},{j};{}]", sign(e)),
                                lhs,
                                rhs,
                            );
                        }
                    }
                }
            }
        }
        for (yk, xk, family) in [
            (PureKind::A, PureKind::A, "far-aa"),
            (PureKind::A, PureKind::B, "far-ab"),
            (PureKind::B, PureKind::A, "far-ba"),
            (PureKind::B, PureKind::B, "far-bb"),
        ] {
            for i in 1..=n {
                for m in i + 1..=n {
                    for k in 1..=n {
                        for j in k + 1..=n {
                            if !far_pair(i, m, k, j) {
                                continue;
                            }
                            let target = bl.word(&[(PureGen::with_kind(xk, k, j), 1)]);
                            let lhs = bl.conj_gen(&target, PureGen::with_kind(yk, i, m), e);
                            bl.push(
                                family,
                                format!("{family}[{i},{m},{k},{j};{}]", sign(e)),
                                lhs,
                                target,
                            );
                        }
                    }
                }
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let x = bl.word(&[(a(i, k), 1), (a(j, k), 1)]);
                    let lhs = bl.conj_gen(&x, b(i, j), e);
                    bl.push(
                        "singular-fix",
                        format!("singular-fix[{i},{j},{k};{}]", sign(e)),
                        lhs,
                        x,
                    );
                }
            }
        }
        for kind in [PureKind::A, PureKind::B] {
            let t = kind_tag(kind);
            for i in 1..=n {
                for k in i + 1..=n {
                    for m in k + 1..=n {
                        for j in m + 1..=n {
                            let x = bl.word(&[
                                (a(m, j), -1),
                                (PureGen::with_kind(kind, k, j), 1),
                                (a(m, j), 1),
                            ]);
                            let lhs = bl.conj_gen(&x, b(i, m), e);
                            let family = if kind == PureKind::A {
                                "singular-fix-conj-a"
                            } else {
                                "singular-fix-conj-b"
                            };
                            bl.push(
                                family,
                                format!("singular-fix-conj-{t}[{i},{k},{m},{j};{}]", sign(e)),
                                lhs,
                                x,
                            );
                        }
                    }
                }
            }
        }
    }
    bl.out
}

fn to_presentation(gens: &[PureGen], relations: &[PureRelation]) -> GroupPresentation {
    let relators: Vec<FreeWord> = relations
        .iter()
        .map(|r| r.relator().to_free(gens))
        .collect();
    GroupPresentation::new(gens.iter().map(|g| g.name()).collect(), relators)
        .expect("relators use listed generators")
}

pub fn sp_presentation(n: usize) -> Result<GroupPresentation> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2, got {n}")));
    }
    Ok(to_presentation(&sp_generators(n), &sp_relations(n)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PnForm {
    /// Products of generators on both sides.
    Standard,
    /// Conjugation rules a^{-ε} x a^{ε} = …, for both signs.
    Conjugation,
}

/// Defining relations of the classical pure braid group P_n.
pub fn pn_relations(n: usize, form: PnForm) -> Vec<PureRelation> {
    let a = PureGen::a;
    let mut bl = Builder { n, out: Vec::new() };
    match form {
        PnForm::Standard => {
            for i in 1..=n {
                for k in i + 1..=n {
                    for j in k + 1..=n {
                        let lhs = bl.word(&[(a(i, k), 1), (a(i, j), 1), (a(k, j), 1)]);
                        let rhs = bl.word(&[(a(k, j), 1), (a(i, k), 1), (a(i, j), 1)]);
                        bl.push("triangle", format!("triangle[{i},{k},{j}]"), lhs, rhs);
                    }
                }
            }
            for k in 1..=n {
                for m in k + 1..=n {
                    for j in m + 1..=n {
                        let lhs = bl.word(&[(a(m, j), 1), (a(k, m), 1), (a(k, j), 1)]);
                        let rhs = bl.word(&[(a(k, j), 1), (a(m, j), 1), (a(k, m), 1)]);
                        bl.push(
                            "triangle-upper",
                            format!("triangle-upper[{k},{m},{j}]"),
                            lhs,
                            rhs,
                        );
                    }
                }
            }
            for i in 1..=n {
                for k in i + 1..=n {
                    for m in k + 1..=n {
                        for j in m + 1..=n {
                            let x = bl.word(&[(a(k, m), 1), (a(k, j), 1), (a(k, m), -1)]);
                            let y = bl.word(&[(a(i, m), 1)]);
                            bl.push(
                                "nested-commute",
                                format!("nested-commute[{i},{k},{m},{j}]"),
                                x.mul(&y),
                                y.mul(&x),
                            );
                        }
                    }
                }
            }
            for i in 1..=n {
                for m in i + 1..=n {
                    for k in 1..=n {
                        for j in k + 1..=n {
                            if far_pair(i, m, k, j) {
                                let lhs = bl.word(&[(a(k, j), 1), (a(i, m), 1)]);
                                let rhs = bl.word(&[(a(i, m), 1), (a(k, j), 1)]);
                                bl.push(
                                    "far-commute",
                                    format!("far-commute[{i},{m},{k},{j}]"),
                                    lhs,
                                    rhs,
                                );
                            }
                        }
                    }
                }
            }
        }
        PnForm::Conjugation => {
            for e in [1i8, -1] {
                for i in 1..=n {
                    for k in i + 1..=n {
                        for j in k + 1..=n {
                            let target = bl.word(&[(a(k, j), 1)]);
                            let lhs = bl.conj_gen(&target, a(i, k), e);
                            let c = bl.word(&[(a(i, j), 1), (a(k, j), 1)]);
                            let rhs = bl.conj(&target, &c, e);
                            bl.push(
                                "conj-lower-a",
                                format!("conj-lower-a[{i},{k},{j};{}]", sign(e)),
                                lhs,
                                rhs,
                            );
                        }
                    }
                }
                for k in 1..=n {
                    for m in k + 1..=n {
                        for j in m + 1..=n {
                            let target = bl.word(&[(a(k, j), 1)]);
                            let lhs = bl.conj_gen(&target, a(k, m), e);
                            let c = bl.word(&[(a(k, j), 1), (a(m, j), 1)]);
                            let rhs = bl.conj(&target, &c, e);
                            bl.push(
                                "conj-shared-a",
                                format!("conj-shared-a[{k},{m},{j};{}]", sign(e)),
                                lhs,
                                rhs,
                            );
                        }
                    }
                }
                for i in 1..=n {
                    for k in i + 1..=n {
                        for m in k + 1..=n {
                            for j in m + 1..=n {
                                let target = bl.word(&[(a(k, j), 1)]);
                                let lhs = bl.conj_gen(&target, a(i, m), e);
                                let c = bl.word(&[
                                    (a(i, j), e),
                                    (a(m, j), e),
                                    (a(i, j), -e),
                                    (a(m, j), -e),
                                ]);
                                let rhs = bl.conj(&target, &c, e);
                                bl.push(
                                    "conj-commutator-a",
                                    format!("conj-commutator-a[{i},{k},{m},{j};{}]", sign(e)),
                                    lhs,
                                    rhs,
                                );
                            }
                        }
                    }
                }
                for i in 1..=n {
                    for m in i + 1..=n {
                        for k in 1..=n {
                            for j in k + 1..=n {
                                if far_pair(i, m, k, j) {
                                    let target = bl.word(&[(a(k, j), 1)]);
                                    let lhs = bl.conj_gen(&target, a(i, m), e);
                                    bl.push(
                                        "far-aa",
                                        format!("far-aa[{i},{m},{k},{j};{}]", sign(e)),
                                        lhs,
                                        target,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    bl.out
}

/// Presentation of P_n on the generators a_ij.
pub fn pn_presentation(n: usize, form: PnForm) -> Result<GroupPresentation> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2, got {n}")));
    }
    let gens: Vec<PureGen> = sp_generators(n)
        .into_iter()
        .filter(|g| g.kind == PureKind::A)
        .collect();
    Ok(to_presentation(&gens, &pn_relations(n, form)))
}
