//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Time limits are part of each criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use singbraid::purebraid::CamomileReport;
use singbraid::*;

const SEED: u64 = 20240601;

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn suite_counts(suite: Suite, ns: &[usize]) -> (usize, Vec<String>) {
    let mut total = 0;
    let mut failed = Vec::new();
    for &n in ns {
        match run_suite(suite, n, SEED) {
            Ok(rs) => {
                total += rs.len();
                failed.extend(
                    rs.into_iter()
                        .filter(|r| !r.passed)
                        .map(|r| format!("n={n} {}", r.name)),
                );
            }
            Err(e) => failed.push(format!("n={n}: {e}")),
        }
    }
    (total, failed)
}

fn suite_outcome(suite: Suite, ns: &[usize]) -> Outcome {
    let (total, failed) = suite_counts(suite, ns);
    let head: Vec<&String> = failed.iter().take(5).collect();
    ok(
        total > 0 && failed.is_empty(),
        format!("{total} instances, {} failing {head:?}", failed.len()),
    )
}

fn braid(text: &str, n: usize) -> BraidWord {
    parse_braid(text, n).expect("valid braid")
}

fn fw(text: &str) -> FreeWord {
    FreeWord::parse(text, 2).expect("valid word")
}

/// Relator sets equal up to rotation and inversion of each relator.
fn same_relators(p: &GroupPresentation, expected: &[FreeWord]) -> bool {
    let got: BTreeSet<Vec<i32>> = p.relators().iter().map(|r| r.cyclic_key()).collect();
    let want: BTreeSet<Vec<i32>> = expected.iter().map(|r| r.cyclic_key()).collect();
    got == want
}

fn sb_relation_suite() -> Outcome {
    suite_outcome(Suite::SbnRelations, &[3, 4, 5, 6])
}

fn sp_presentation_suite() -> Outcome {
    suite_outcome(Suite::SpPresentation, &[3, 4])
}

fn conjugation_table_suite() -> Outcome {
    suite_outcome(Suite::CtTable, &[4, 5])
}

fn center_suite() -> Outcome {
    suite_outcome(Suite::CenterLemmas, &[3, 4, 5])
}

fn camomile_suite() -> Outcome {
    let report: CamomileReport = match camomile_check(5, 4) {
        Ok(r) => r,
        Err(e) => return ok(false, e.to_string()),
    };
    let union: BTreeSet<PureGen> = match generator_union(5) {
        Ok(u) => u.into_iter().flat_map(|(_, g)| g).collect(),
        Err(e) => return ok(false, e.to_string()),
    };
    let all: BTreeSet<PureGen> = sp_generators(5).into_iter().collect();
    let gens_ok =
        report.generators.len() == all.len() && report.generators.iter().all(|g| g.certified);
    ok(
        gens_ok && report.passed() && union == all,
        format!(
            "{} generators certified, {} relations certified, {} unmatched, union covers {}/{}",
            report.generators.iter().filter(|g| g.certified).count(),
            report.relators.iter().filter(|r| r.certified).count(),
            report.unmatched.len(),
            union.len(),
            all.len()
        ),
    )
}

fn rewrite_round_trip() -> Outcome {
    let (total, failed) = suite_counts(Suite::RsRoundTrip, &[4]);
    ok(
        total == verify::ROUND_TRIP_WORDS && failed.is_empty(),
        format!("{total} words, {} failing {failed:?}", failed.len()),
    )
}

/// Φ4,n(σ1τ1) as displayed: x1 ↦ x2^-1 (x1^-1 x2)^n (x2^-1 x1)^(n+1) x2 (x2^-1 x1)^n x2,
/// x2 ↦ x2^-1 (x1^-1 x2)^n.
fn phi4_display(n: i64) -> [FreeWord; 2] {
    let a = fw("X1 x2").pow(n);
    let b = fw("X2 x1");
    let left = fw("X2")
        .mul(&a)
        .mul(&b.pow(n + 1))
        .mul(&fw("x2"))
        .mul(&b.pow(n))
        .mul(&fw("x2"));
    [left, fw("X2").mul(&a)]
}

fn representation_suite() -> Outcome {
    let mut problems = Vec::new();
    let reps = [
        RepId::Phi1,
        RepId::Phi2,
        RepId::Phi3,
        RepId::Phi4(1),
        RepId::Phi4(2),
        RepId::Phi4(3),
    ];
    for rep in reps {
        for strands in 3..=5 {
            let failing = Representation::new(rep).failing_relations(strands);
            if !failing.is_empty() {
                problems.push(format!(
                    "{rep} at {strands} strands breaks {}",
                    failing.join(" ")
                ));
            }
        }
    }
    let hopf = braid("s1 t1", 2);
    let mut displays: Vec<(String, [FreeWord; 2])> = vec![
        (
            "phi1".into(),
            [fw("x1 x2 x1 x2 X1 X2 X1"), fw("x1 x2 x1 X2 X1")],
        ),
        (
            "phi3".into(),
            [fw("x1 x2 X1 X2 x1 x2 X1"), fw("x1 X2 X1 x2 x1")],
        ),
    ];
    for n in 1..=3 {
        displays.push((format!("phi4:{n}"), phi4_display(n)));
    }
    for (name, expected) in displays {
        let rep: RepId = name.parse().expect("known representation");
        match phi_word(rep, &hopf) {
            Ok(img) if img.images() == expected.as_slice() => {}
            Ok(img) => problems.push(format!(
                "{name}(s1 t1) = [{}, {}], displayed [{}, {}]",
                img.image(1),
                img.image(2),
                expected[0],
                expected[1]
            )),
            Err(e) => problems.push(format!("{name}: {e}")),
        }
    }
    ok(
        problems.is_empty(),
        if problems.is_empty() {
            "all relations and displays".to_string()
        } else {
            problems.join("; ")
        },
    )
}

fn worked_examples() -> Outcome {
    let run = || -> singbraid::Result<Vec<(&'static str, bool)>> {
        let hopf_sf = braid("s1 t1", 2);
        let mirror = hopf_sf.mirror();
        let mut checks = Vec::new();

        // x1 = x2 x1 x2 X1 X2, x2 = x1 x2 x1 X2 X1
        let g1 = group_of_braid(RepId::Phi1, &hopf_sf)?;
        let g1_display = [fw("X1 x2 x1 x2 X1 X2"), fw("X2 x1 x2 x1 X2 X1")];
        checks.push(("G1 relators", same_relators(&g1, &g1_display)));

        let g1m = tietze_simplify(&group_of_braid(RepId::Phi1, &mirror)?, 1000);
        let inv = abelianization(&g1m);
        checks.push((
            "G1 mirror infinite cyclic",
            g1m.rank() == 1 && g1m.relators().is_empty() && inv.free_rank == 1,
        ));

        let hopf = group_of_braid(RepId::Phi1, &braid("s1 s1", 2))?;
        let ab = abelianization(&hopf);
        checks.push(("Hopf link Z^2", ab.free_rank == 2 && ab.torsion.is_empty()));

        let g41 = group_of_braid(RepId::Phi4(1), &hopf_sf)?;
        let ab = abelianization(&g41);
        let z2 = ab.free_rank == 0 && ab.torsion.len() == 1 && ab.torsion[0] == 2.into();
        checks.push(("G41 abelianization Z/2", z2));
        checks.push((
            "G41 coset enumeration order 2",
            todd_coxeter(&g41, &[], 1000) == CosetIndex::Index(2),
        ));

        // x1 X2 X1 = x2 X1 X2
        let g3 = tietze_simplify(&group_of_braid(RepId::Phi3, &hopf_sf)?, 1000);
        checks.push(("G3 display", same_relators(&g3, &[fw("x1 X2 X1 x2 x1 X2")])));
        // x2 x1 x1 = x1 x2 x2
        let g3m = tietze_simplify(&group_of_braid(RepId::Phi3, &mirror)?, 1000);
        checks.push((
            "G3 mirror display",
            same_relators(&g3m, &[fw("x2 x1 x1 X2 X2 X1")]),
        ));

        // singular trefoil arcs: y2 = y1 * y3, y4 = y3 * y2, y1 = y2 ol y4, y3 = y2 or y4
        let y = SQTerm::gen;
        let arcs = SQPresentation::new(
            4,
            vec![
                (y(2), y(1).star(&y(3))),
                (y(4), y(3).star(&y(2))),
                (y(1), y(2).circ_l(&y(4))),
                (y(3), y(2).circ_r(&y(4))),
            ],
        )?;
        let reduced = arcs.eliminate(4)?.eliminate(2)?;
        checks.push((
            "singular trefoil singquandle",
            reduced == fundamental_singquandle(&braid("s1 s1 t1", 2))?,
        ));
        Ok(checks)
    };
    match run() {
        Ok(checks) => {
            let bad: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
            ok(
                bad.is_empty(),
                format!("{} checks, failing {bad:?}", checks.len()),
            )
        }
        Err(e) => ok(false, e.to_string()),
    }
}

/// Axioms checked straight from the tables, without the library's checker.
fn independent_axiom_check(m: &FiniteSingquandle) -> bool {
    let q = m.order();
    let s = |x, y| m.star(x, y);
    let l = |x, y| m.circ_l(x, y);
    let r = |x, y| m.circ_r(x, y);
    // x *~ y is the unique z with z * y = x
    let mut sb = vec![vec![usize::MAX; q]; q];
    for y in 0..q {
        for z in 0..q {
            let x = s(z, y);
            if sb[x][y] != usize::MAX {
                return false;
            }
            sb[x][y] = z;
        }
    }
    let sb = |x: usize, y: usize| sb[x][y];
    for x in 0..q {
        if s(x, x) != x {
            return false;
        }
        for y in 0..q {
            if m.star_bar(x, y) != sb(x, y)
                || r(x, y) != l(y, s(x, y))
                || s(l(x, y), r(x, y)) != r(y, s(x, y))
            {
                return false;
            }
            for z in 0..q {
                let fails = s(s(x, y), z) != s(s(x, z), s(y, z))
                    || s(l(x, y), z) != l(s(x, z), s(y, z))
                    || s(r(x, y), z) != r(s(x, z), s(y, z))
                    || sb(l(x, y), z) != l(sb(x, z), sb(y, z))
                    || sb(r(x, y), z) != r(sb(x, z), sb(y, z))
                    || s(sb(y, l(x, z)), x) != sb(s(y, r(x, z)), z);
                if fails {
                    return false;
                }
            }
        }
    }
    true
}

/// β ↦ g β g^-1 for a random classical g, or a cyclic rotation of β.
fn random_conjugate(rng: &mut ChaCha8Rng, beta: &BraidWord) -> BraidWord {
    let n = beta.strands();
    if rng.gen_bool(0.3) && !beta.is_empty() {
        let cut = rng.gen_range(0..beta.len());
        let mut letters = beta.letters()[cut..].to_vec();
        letters.extend_from_slice(&beta.letters()[..cut]);
        return BraidWord::new(n, letters).expect("same strands");
    }
    let len = rng.gen_range(1..=4);
    let g = singbraid::sample::random_word(rng, n, len, 0);
    g.concat(beta)
        .and_then(|w| w.concat(&g.invert()))
        .expect("same strands")
}

fn stabilize(beta: &BraidWord, sign: bool) -> BraidWord {
    let n = beta.strands();
    let mut w = beta.with_strands(n + 1).expect("more strands");
    w.push(if sign {
        Letter::sigma(n)
    } else {
        Letter::sigma_inv(n)
    })
    .expect("new index");
    w
}

fn singquandle_suite() -> Outcome {
    let run = || -> singbraid::Result<Outcome> {
        let mut all = Vec::new();
        for q in 1..=3 {
            all.extend(enumerate_singquandles(q, false)?);
        }
        let recheck = all.iter().filter(|m| !independent_axiom_check(m)).count();
        let mut phi_bad = 0;
        for m in &all {
            if !singquandle::phi_relation_failures(m, 4)?.is_empty() {
                phi_bad += 1;
            }
        }
        let mut reps = Vec::new();
        for q in 1..=3 {
            reps.extend(enumerate_singquandles(q, true)?);
        }
        let regression = [
            "s1 s1 t1",
            "s1 t1",
            "t1 t2",
            "s1 S2 t1 t2",
            "t1 s2 s2 t1 S2",
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut color_bad = Vec::new();
        for text in regression {
            let n = text
                .split_whitespace()
                .map(|t| t[1..].parse::<usize>().unwrap())
                .max()
                .unwrap()
                + 1;
            let beta = braid(text, n);
            let base: Vec<u64> = reps
                .iter()
                .map(|m| count_sq_colorings(&fundamental_singquandle(&beta)?, m))
                .collect::<singbraid::Result<_>>()?;
            let mut variants: Vec<BraidWord> =
                (0..10).map(|_| random_conjugate(&mut rng, &beta)).collect();
            variants.push(stabilize(&beta, rng.gen_bool(0.5)));
            for v in variants {
                let p = fundamental_singquandle(&v)?;
                let counts: Vec<u64> = reps
                    .iter()
                    .map(|m| count_sq_colorings(&p, m))
                    .collect::<singbraid::Result<_>>()?;
                if counts != base {
                    color_bad.push(format!("{text} vs {v}"));
                }
            }
        }
        Ok(ok(
            !all.is_empty() && recheck == 0 && phi_bad == 0 && color_bad.is_empty(),
            format!(
                "{} models, {recheck} fail recheck, {phi_bad} break relations, {} of {} models for colorings, changed {color_bad:?}",
                all.len(),
                reps.len(),
                reps.len()
            ),
        ))
    };
    run().unwrap_or_else(|e| ok(false, e.to_string()))
}

fn mirror_separation() -> Outcome {
    let run = || -> singbraid::Result<(u64, u64)> {
        let s3 = FiniteGroupModel::symmetric(3)?;
        let hopf_sf = braid("s1 t1", 2);
        let a = count_homs(&group_of_braid(RepId::Phi1, &hopf_sf)?, &s3)?;
        let b = count_homs(&group_of_braid(RepId::Phi1, &hopf_sf.mirror())?, &s3)?;
        Ok((a, b))
    };
    match run() {
        Ok((a, b)) => ok(a != b, format!("{a} homs vs {b} homs into S3")),
        Err(e) => ok(false, e.to_string()),
    }
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    // name, time limit in seconds, check
    let criteria: [Criterion; 10] = [
        ("sb-relations", 10, sb_relation_suite),
        ("sp-presentation", 60, sp_presentation_suite),
        ("conjugation-table", 120, conjugation_table_suite),
        ("center", 120, center_suite),
        ("camomile", 60, camomile_suite),
        ("rewrite-round-trip", 300, rewrite_round_trip),
        ("representations", 30, representation_suite),
        ("worked-examples", 10, worked_examples),
        ("singquandles", 300, singquandle_suite),
        ("mirror-separation", 5, mirror_separation),
    ];
    let mut all = true;
    for (k, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = check();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let passed = out.passed && in_time;
        all &= passed;
        println!(
            "{} {:>2} {name}: {} ({:.2}s, limit {limit}s)",
            if passed { "PASS" } else { "FAIL" },
            k + 1,
            out.detail,
            took.as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
