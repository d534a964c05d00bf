use std::collections::BTreeMap;

use rayon::prelude::*;

use super::GroupPresentation;
use crate::error::{Error, Result};
use crate::words::Perm;

/// Largest number of generator assignments count_homs will consider.
pub const HOM_BUDGET: u64 = 100_000_000;

/// A finite group by its multiplication table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupModel {
    name: String,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl FiniteGroupModel {
    /// Validates closure, identity at 0, inverses and associativity.
    pub fn from_table(name: &str, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0
            || mul
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&v| v >= n))
        {
            return Err(Error::Invalid("multiplication table is not square".into()));
        }
        if (0..n).any(|x| mul[0][x] != x || mul[x][0] != x) {
            return Err(Error::Invalid("element 0 is not the identity".into()));
        }
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            inv[x] = (0..n)
                .find(|&y| mul[x][y] == 0)
                .ok_or_else(|| Error::Invalid(format!("element {x} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::Invalid("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroupModel {
            name: name.to_string(),
            mul,
            inv,
        })
    }

    /// The group generated by permutations, elements listed in
    /// lexicographic order of their images (the identity comes first).
    pub fn from_permutations(name: &str, gens: &[Perm]) -> Result<Self> {
        let degree = gens.first().map_or(1, |g| g.degree());
        let id = Perm::identity(degree);
        let mut elems = vec![id.clone()];
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.then(g);
                if !elems.contains(&y) {
                    elems.push(y.clone());
                    frontier.push(y);
                }
            }
        }
        elems.sort_by_key(|p| p.images());
        let index: BTreeMap<Vec<usize>, usize> = elems
            .iter()
            .enumerate()
            .map(|(k, p)| (p.images(), k))
            .collect();
        let mul = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&a.then(b).images()]).collect())
            .collect();
        FiniteGroupModel::from_table(name, mul)
    }

    pub fn cyclic(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Invalid("cyclic group of order 0".into()));
        }
        FiniteGroupModel::from_table(
            &format!("z{k}"),
            (0..k)
                .map(|a| (0..k).map(|b| (a + b) % k).collect())
                .collect(),
        )
    }

    /// Dihedral group of order 2k acting on a k-gon.
    pub fn dihedral(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Invalid(format!(
                "dihedral group needs k >= 3, got {k}"
            )));
        }
        let rot = Perm::from_images(&(1..=k).map(|i| i % k + 1).collect::<Vec<_>>())?;
        let refl = Perm::from_images(&(1..=k).map(|i| (k + 1 - i) % k + 1).collect::<Vec<_>>())?;
        FiniteGroupModel::from_permutations(&format!("d{k}"), &[rot, refl])
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::Invalid(format!(
                "symmetric group degree must be 1..=5, got {n}"
            )));
        }
        if n == 1 {
            return FiniteGroupModel::cyclic(1).map(|g| g.renamed("s1"));
        }
        let gens: Vec<Perm> = (1..n).map(|i| Perm::transposition(n, i, i + 1)).collect();
        FiniteGroupModel::from_permutations(&format!("s{n}"), &gens)
    }

    pub fn alternating4() -> Result<Self> {
        let a = Perm::from_images(&[2, 3, 1, 4])?;
        let b = Perm::from_images(&[1, 3, 4, 2])?;
        FiniteGroupModel::from_permutations("a4", &[a, b])
    }

    /// `z<k>`, `d<k>`, `s<n>` or `a4`.
    pub fn by_name(name: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown group {name:?}"));
        if name == "a4" {
            return FiniteGroupModel::alternating4();
        }
        let (kind, num) = name.split_at(1.min(name.len()));
        let k: usize = num.parse().map_err(|_| bad())?;
        match kind {
            "z" => FiniteGroupModel::cyclic(k),
            "d" => FiniteGroupModel::dihedral(k),
            "s" => FiniteGroupModel::symmetric(k),
            _ => Err(bad()),
        }
    }

    fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    fn eval(&self, letters: &[i32], assignment: &[usize]) -> usize {
        letters.iter().fold(0, |acc, &a| {
            let g = assignment[a.unsigned_abs() as usize - 1];
            self.mul[acc][if a > 0 { g } else { self.inv[g] }]
        })
    }
}

/// Number of homomorphisms from the presented group to `g`.
///
/// Generators are assigned in order; a relator is checked as soon as all
/// of its generators have values.
pub fn count_homs(p: &GroupPresentation, g: &FiniteGroupModel) -> Result<u64> {
    let rank = p.rank();
    let total = (g.order() as u64)
        .checked_pow(rank as u32)
        .filter(|&t| t <= HOM_BUDGET);
    if total.is_none() {
        return Err(Error::Budget(format!("{}^{rank} assignments", g.order())));
    }
    if rank == 0 {
        return Ok(p.relators().iter().all(|r| r.is_identity()) as u64);
    }
    // relators grouped by the last generator they need
    let mut ready: Vec<Vec<&[i32]>> = vec![Vec::new(); rank + 1];
    for r in p.relators() {
        let top = r
            .letters()
            .iter()
            .map(|a| a.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        ready[top].push(r.letters());
    }
    if ready[0].iter().any(|r| !r.is_empty()) {
        return Ok(0);
    }
    fn go(
        g: &FiniteGroupModel,
        ready: &[Vec<&[i32]>],
        assignment: &mut Vec<usize>,
        rank: usize,
    ) -> u64 {
        let k = assignment.len();
        if !ready[k].iter().all(|r| g.eval(r, assignment) == 0) {
            return 0;
        }
        if k == rank {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.order() {
            assignment.push(v);
            total += go(g, ready, assignment, rank);
            assignment.pop();
        }
        total
    }
    Ok((0..g.order())
        .into_par_iter()
        .map(|v| go(g, &ready, &mut vec![v], rank))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::FreeWord;

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
    fn models() {
        assert_eq!(FiniteGroupModel::by_name("s3").unwrap().order(), 6);
        assert_eq!(FiniteGroupModel::by_name("s4").unwrap().order(), 24);
        assert_eq!(FiniteGroupModel::by_name("d5").unwrap().order(), 10);
        assert_eq!(FiniteGroupModel::by_name("a4").unwrap().order(), 12);
        assert_eq!(FiniteGroupModel::by_name("z7").unwrap().order(), 7);
        assert!(FiniteGroupModel::by_name("q8").is_err());
        assert!(FiniteGroupModel::from_table("bad", vec![vec![0, 1], vec![1, 1]]).is_err());
    }

    /// Independent count: every pair of elements, relator checked directly.
    fn brute_force_pairs(p: &GroupPresentation, g: &FiniteGroupModel) -> u64 {
        let mut count = 0;
        for a in 0..g.order() {
            for b in 0..g.order() {
                count += p
                    .relators()
                    .iter()
                    .all(|r| g.eval(r.letters(), &[a, b]) == 0) as u64;
            }
        }
        count
    }

    #[test]
    fn hom_counts() {
        let free2 = pres(2, &[]);
        assert_eq!(
            count_homs(&free2, &FiniteGroupModel::cyclic(2).unwrap()).unwrap(),
            4
        );
        let trefoil = pres(2, &["x1 x2 x1 X2 X1 X2"]);
        let s3 = FiniteGroupModel::symmetric(3).unwrap();
        assert_eq!(
            count_homs(&trefoil, &s3).unwrap(),
            brute_force_pairs(&trefoil, &s3)
        );
        // a = b (6 choices) or a, b distinct transpositions (6 ordered pairs)
        assert_eq!(count_homs(&trefoil, &s3).unwrap(), 12);
        let z = pres(1, &[]);
        assert_eq!(count_homs(&z, &s3).unwrap(), 6);
    }
}
