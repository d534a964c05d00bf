use super::rewrite::rs_rewrite;
use super::{PureGen, PureWord};
use crate::error::{Error, Result};
use crate::words::BraidWord;

/// Split a classical pure braid as u_n u_{n-1} … u_2 with u_m a reduced word
/// in a_{1m}, …, a_{m-1,m}. Returned in that order, u_n first.
pub fn comb(w: &BraidWord) -> Result<Vec<PureWord>> {
    if !w.is_sigma_only() {
        return Err(Error::SingularLetter);
    }
    let n = w.strands();
    let mut rest = rs_rewrite(w)?;
    let mut out = Vec::new();
    for m in (2..=n).rev() {
        let mut u = PureWord::identity(n);
        let mut v = PureWord::identity(n);
        for &l in rest.letters().iter().rev() {
            if l.gen.j == m {
                u = PureWord::raw(n, &[(l.gen, l.exp)]).mul(&u);
            } else {
                // ℓ u = (ℓ u ℓ^{-1}) ℓ
                let (s, t) = (l.gen.i, l.gen.j);
                u = u.map_gens(|x| conj_in_fiber(x, s, t, -l.exp, m, n));
                v = PureWord::raw(n, &[(l.gen, l.exp)]).mul(&v);
            }
        }
        out.push(u);
        rest = v;
    }
    debug_assert!(rest.is_empty());
    Ok(out)
}

/// a_st^{-ε} a_km a_st^{ε} for t < m, as a word in a_{1m}, …, a_{m-1,m}.
fn conj_in_fiber(x: PureGen, s: usize, t: usize, eps: i8, m: usize, n: usize) -> PureWord {
    let k = x.i;
    let a = |i| PureGen::a(i, m);
    let around = |c: PureWord| {
        let c = if eps > 0 { c } else { c.inverse() };
        c.mul(&PureWord::gen(n, x)).mul(&c.inverse())
    };
    if t == k {
        around(PureWord::raw(n, &[(a(s), 1), (a(k), 1)]))
    } else if s == k {
        around(PureWord::raw(n, &[(a(k), 1), (a(t), 1)]))
    } else if s < k && k < t {
        around(PureWord::raw(
            n,
            &[(a(s), eps), (a(t), eps), (a(s), -eps), (a(t), -eps)],
        ))
    } else {
        PureWord::gen(n, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::braid_equal;
    use crate::purebraid::delta;
    use crate::words::parse_braid;

    fn product(parts: &[PureWord], n: usize) -> PureWord {
        parts
            .iter()
            .fold(PureWord::identity(n), |acc, p| acc.mul(p))
    }

    #[test]
    fn displayed_cases() {
        let c = comb(&parse_braid("s1 s1", 3).unwrap()).unwrap();
        assert!(c[0].is_empty());
        assert_eq!(c[1].to_string(), "a12");
        let d = comb(&delta(3)).unwrap();
        assert_eq!(d[0].to_string(), "a13 a23");
        assert_eq!(d[1].to_string(), "a12");
    }

    #[test]
    fn factors_live_in_their_fibers() {
        for text in [
            "s2 s1 s1 S2",
            "s1 s2 s2 S1",
            "S2 S1 S1 s2 s2 s2",
            "s3 s1 s1 S3 s2 s2 s1 s2 s2 S1",
        ] {
            let w = parse_braid(text, 4).unwrap();
            let parts = comb(&w).unwrap();
            for (pos, u) in parts.iter().enumerate() {
                let m = 4 - pos;
                assert!(u
                    .letters()
                    .iter()
                    .all(|l| l.gen.j == m && l.gen.kind == super::super::PureKind::A));
            }
            assert!(
                braid_equal(&product(&parts, 4).expand(), &w).unwrap(),
                "{text}"
            );
        }
    }

    #[test]
    fn rejects_singular_input() {
        assert!(comb(&parse_braid("t1 s1", 2).unwrap()).is_err());
    }
}
