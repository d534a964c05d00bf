//! Named verification suites: every instance of a family of identities,
//! checked with the exact oracles.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{sb_equal, sg_identity_holds};
use crate::purebraid::{
    camomile_check, center_identities, conj_by_sigma, gen_word, generator_union, rs_rewrite,
    sp_generators, sp_relations,
};
use crate::relations::sb_relations;
use crate::represent::{RepId, Representation};
use crate::sample::random_pure_word;
use crate::singquandle::{enumerate_singquandles, phi_relation_failures, AXIOMS};
use crate::words::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    SbnRelations,
    SpPresentation,
    CtTable,
    CenterLemmas,
    Camomile,
    RepRespect,
    SqAxioms,
    RsRoundTrip,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::SbnRelations,
        Suite::SpPresentation,
        Suite::CtTable,
        Suite::CenterLemmas,
        Suite::Camomile,
        Suite::RepRespect,
        Suite::SqAxioms,
        Suite::RsRoundTrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SbnRelations => "sbn-relations",
            Suite::SpPresentation => "sp-presentation",
            Suite::CtTable => "ct-table",
            Suite::CenterLemmas => "center-lemmas",
            Suite::Camomile => "camomile",
            Suite::RepRespect => "rep-respect",
            Suite::SqAxioms => "sq-axioms",
            Suite::RsRoundTrip => "rs-roundtrip",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceResult {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl InstanceResult {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        InstanceResult {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    fn from_check(name: impl Into<String>, check: Result<bool>) -> Self {
        match check {
            Ok(passed) => InstanceResult::new(name, passed),
            Err(e) => InstanceResult {
                name: name.into(),
                passed: false,
                detail: Some(e.to_string()),
            },
        }
    }
}

/// Number of random words in the round-trip suite.
pub const ROUND_TRIP_WORDS: usize = 200;

/// Run a suite. `n` is the strand count, or the largest model order for
/// `sq-axioms`; `seed` drives the randomized suite. Results come back in
/// a fixed order.
pub fn run_suite(suite: Suite, n: usize, seed: u64) -> Result<Vec<InstanceResult>> {
    let min = match suite {
        Suite::SqAxioms => 1,
        Suite::Camomile => 3,
        _ => 2,
    };
    if n < min {
        return Err(Error::Invalid(format!("{suite} needs n >= {min}, got {n}")));
    }
    Ok(match suite {
        Suite::SbnRelations => sb_relations(n)
            .par_iter()
            .map(|r| InstanceResult::from_check(&r.name, sb_equal(&r.lhs, &r.rhs)))
            .collect(),
        Suite::SpPresentation => sp_relations(n)
            .par_iter()
            .map(|r| {
                InstanceResult::from_check(
                    &r.label,
                    sg_identity_holds(&r.lhs.expand(), &r.rhs.expand()),
                )
            })
            .collect(),
        Suite::CtTable => {
            let mut cases = Vec::new();
            for g in sp_generators(n) {
                for k in 1..n {
                    for eps in [1i8, -1] {
                        cases.push((g, k, eps));
                    }
                }
            }
            cases
                .par_iter()
                .map(|&(g, k, eps)| {
                    let name = format!("conj[{g};{k},{}]", if eps > 0 { '+' } else { '-' });
                    let check = || -> Result<bool> {
                        let s = Letter {
                            kind: crate::words::Kind::Sigma,
                            index: k,
                            exp: eps,
                        };
                        let mut letters = vec![s.inverse()];
                        letters.extend_from_slice(gen_word(g, n)?.letters());
                        letters.push(s);
                        let lhs = BraidWord::new(n, letters)?;
                        sg_identity_holds(&lhs, &conj_by_sigma(g, k, eps, n)?.expand())
                    };
                    InstanceResult::from_check(name, check())
                })
                .collect()
        }
        Suite::CenterLemmas => center_identities(n)
            .par_iter()
            .map(|id| InstanceResult::from_check(&id.name, sg_identity_holds(&id.lhs, &id.rhs)))
            .collect(),
        Suite::Camomile => {
            let report = camomile_check(n, n - 1)?;
            let mut out: Vec<InstanceResult> = report
                .generators
                .iter()
                .map(|g| InstanceResult {
                    name: format!("generator[{}]", g.generator),
                    passed: g.certified,
                    detail: Some(format!("petal {} from {}", show(&g.petal), g.source)),
                })
                .collect();
            out.extend(report.relators.iter().map(|r| InstanceResult {
                name: format!("relation[{}]", r.label),
                passed: r.certified,
                detail: Some(format!("petal {} from {}", show(&r.petal), r.source)),
            }));
            out.extend(report.unmatched.iter().map(|u| InstanceResult {
                name: format!("unmatched[{u}]"),
                passed: false,
                detail: None,
            }));
            let union: std::collections::BTreeSet<_> = generator_union(n)?
                .into_iter()
                .flat_map(|(_, g)| g)
                .collect();
            let all: std::collections::BTreeSet<_> = sp_generators(n).into_iter().collect();
            out.push(InstanceResult::new("generator-union", union == all));
            out
        }
        Suite::RepRespect => {
            let reps = [
                RepId::Phi1,
                RepId::Phi2,
                RepId::Phi3,
                RepId::Phi4(1),
                RepId::Phi4(2),
                RepId::Phi4(3),
            ];
            let mut out = Vec::new();
            for rep in reps {
                let r = Representation::new(rep);
                let failing = r.failing_relations(n);
                for rel in sb_relations(n) {
                    out.push(InstanceResult::new(
                        format!("{rep}:{}", rel.name),
                        !failing.contains(&rel.name),
                    ));
                }
            }
            out
        }
        Suite::SqAxioms => {
            let mut out = Vec::new();
            for q in 1..=n {
                let models = enumerate_singquandles(q, false)?;
                let results: Vec<InstanceResult> = models
                    .par_iter()
                    .enumerate()
                    .map(|(k, m)| {
                        let failing = m.failing_axioms();
                        let mut derived = true;
                        for y in 0..q {
                            for z in 0..q {
                                derived &= m.circ_l(y, z) == m.circ_r(m.star_bar(z, y), y);
                            }
                        }
                        let phi = phi_relation_failures(m, 3);
                        let passed = failing.is_empty()
                            && derived
                            && phi.as_ref().is_ok_and(|f| f.is_empty());
                        let detail =
                            (!passed).then(|| format!("axioms {failing:?}, relations {phi:?}"));
                        InstanceResult {
                            name: format!("order{q}[{k}]"),
                            passed,
                            detail,
                        }
                    })
                    .collect();
                out.extend(results);
            }
            debug_assert_eq!(AXIOMS.len(), 10);
            out
        }
        Suite::RsRoundTrip => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let words: Vec<BraidWord> = (0..ROUND_TRIP_WORDS)
                .map(|_| random_pure_word(&mut rng, n, 12, 5))
                .collect();
            words
                .par_iter()
                .map(|w| {
                    let check = rs_rewrite(w).and_then(|p| sg_identity_holds(&p.expand(), w));
                    InstanceResult::from_check(format!("[{}]", show(w)), check)
                })
                .collect()
        }
    })
}

fn show(w: &BraidWord) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_string()
    }
}
