use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::{BraidWord, Kind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SQOp {
    /// x * y
    Star,
    /// x *̄ y, the z with z * y = x
    StarBar,
    CircL,
    CircR,
}

impl SQOp {
    pub fn symbol(self) -> &'static str {
        match self {
            SQOp::Star => "*",
            SQOp::StarBar => "*~",
            SQOp::CircL => "ol",
            SQOp::CircR => "or",
        }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Node {
    Gen(usize),
    Op(SQOp, SQTerm, SQTerm),
}

/// A term of the free singquandle: a generator x_k (1-based) or a binary
/// operation applied to two terms. Subterms are shared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SQTerm(Arc<Node>);

impl SQTerm {
    pub fn gen(k: usize) -> Self {
        SQTerm(Arc::new(Node::Gen(k)))
    }

    /// Builds `left op right`, cancelling (a * b) *̄ b, (a *̄ b) * b and
    /// a * a, a *̄ a.
    pub fn op(op: SQOp, left: &SQTerm, right: &SQTerm) -> Self {
        if matches!(op, SQOp::Star | SQOp::StarBar) {
            if left == right {
                return left.clone();
            }
            if let Node::Op(inner, a, b) = &*left.0 {
                let undoes = matches!(
                    (inner, op),
                    (SQOp::Star, SQOp::StarBar) | (SQOp::StarBar, SQOp::Star)
                );
                if undoes && b == right {
                    return a.clone();
                }
            }
        }
        SQTerm(Arc::new(Node::Op(op, left.clone(), right.clone())))
    }

    pub fn star(&self, other: &SQTerm) -> Self {
        SQTerm::op(SQOp::Star, self, other)
    }

    pub fn star_bar(&self, other: &SQTerm) -> Self {
        SQTerm::op(SQOp::StarBar, self, other)
    }

    pub fn circ_l(&self, other: &SQTerm) -> Self {
        SQTerm::op(SQOp::CircL, self, other)
    }

    pub fn circ_r(&self, other: &SQTerm) -> Self {
        SQTerm::op(SQOp::CircR, self, other)
    }

    pub fn as_gen(&self) -> Option<usize> {
        match &*self.0 {
            Node::Gen(k) => Some(*k),
            Node::Op(..) => None,
        }
    }

    /// (op, left, right) for an operation node.
    pub fn as_op(&self) -> Option<(SQOp, &SQTerm, &SQTerm)> {
        match &*self.0 {
            Node::Gen(_) => None,
            Node::Op(op, l, r) => Some((*op, l, r)),
        }
    }

    /// Largest generator index occurring.
    pub fn max_gen(&self) -> usize {
        self.fold(&mut HashMap::new(), &mut |node, kids| match node {
            Node::Gen(k) => *k,
            Node::Op(..) => kids[0].max(kids[1]),
        })
    }

    pub fn mentions(&self, k: usize) -> bool {
        self.fold(&mut HashMap::new(), &mut |node, kids| match node {
            Node::Gen(g) => *g == k,
            Node::Op(..) => kids[0] || kids[1],
        })
    }

    /// Replace each generator x_k by `images[k - 1]`.
    pub fn substitute(&self, images: &[SQTerm]) -> SQTerm {
        self.fold(
            &mut HashMap::new(),
            &mut |node, kids: [SQTerm; 2]| match node {
                Node::Gen(k) => images[k - 1].clone(),
                Node::Op(op, ..) => SQTerm::op(*op, &kids[0], &kids[1]),
            },
        )
    }

    /// Bottom-up evaluation, visiting each shared node once.
    fn fold<T: Clone + Default>(
        &self,
        memo: &mut HashMap<*const Node, T>,
        f: &mut impl FnMut(&Node, [T; 2]) -> T,
    ) -> T {
        let key = Arc::as_ptr(&self.0);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let kids = match &*self.0 {
            Node::Gen(_) => [T::default(), T::default()],
            Node::Op(_, l, r) => [l.fold(memo, f), r.fold(memo, f)],
        };
        let v = f(&self.0, kids);
        memo.insert(key, v.clone());
        v
    }

    /// Evaluate with an interpretation of the generators and the operations.
    pub fn eval<T: Clone + Default>(
        &self,
        gen: &impl Fn(usize) -> T,
        op: &impl Fn(SQOp, &T, &T) -> T,
    ) -> T {
        self.fold(&mut HashMap::new(), &mut |node, kids| match node {
            Node::Gen(k) => gen(*k),
            Node::Op(o, ..) => op(*o, &kids[0], &kids[1]),
        })
    }
}

impl Default for SQTerm {
    fn default() -> Self {
        SQTerm::gen(1)
    }
}

impl fmt::Display for SQTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Gen(k) => write!(f, "x{k}"),
            Node::Op(op, l, r) => {
                let wrap = |t: &SQTerm| {
                    if t.as_gen().is_some() {
                        t.to_string()
                    } else {
                        format!("({t})")
                    }
                };
                write!(f, "{} {} {}", wrap(l), op.symbol(), wrap(r))
            }
        }
    }
}

/// Images of x_1..x_n under Φ(β), with Φ(uv) = Φ(u)∘Φ(v).
///
/// σ_i: x_i ↦ x_{i+1}, x_{i+1} ↦ x_i * x_{i+1};
/// σ_i^{-1}: x_i ↦ x_{i+1} *̄ x_i, x_{i+1} ↦ x_i;
/// τ_i: x_i ↦ x_i ∘_l x_{i+1}, x_{i+1} ↦ x_i ∘_r x_{i+1}.
pub fn sq_phi_word(beta: &BraidWord) -> Result<Vec<SQTerm>> {
    let n = beta.strands();
    let mut cur: Vec<SQTerm> = (1..=n).map(SQTerm::gen).collect();
    for l in beta.letters() {
        let (a, b) = (cur[l.index - 1].clone(), cur[l.index].clone());
        let (na, nb) = match (l.kind, l.exp > 0) {
            (Kind::Sigma, true) => (b.clone(), a.star(&b)),
            (Kind::Sigma, false) => (b.star_bar(&a), a),
            (Kind::Tau, true) => (a.circ_l(&b), a.circ_r(&b)),
            (Kind::Tau, false) => return Err(Error::InverseSingular),
        };
        cur[l.index - 1] = na;
        cur[l.index] = nb;
    }
    Ok(cur)
}

/// Generators x_1..x_rank with relations lhs = rhs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SQPresentation {
    pub rank: usize,
    pub relations: Vec<(SQTerm, SQTerm)>,
}

impl SQPresentation {
    pub fn new(rank: usize, relations: Vec<(SQTerm, SQTerm)>) -> Result<Self> {
        if relations
            .iter()
            .any(|(l, r)| l.max_gen() > rank || r.max_gen() > rank)
        {
            return Err(Error::Invalid(format!(
                "relation uses a generator beyond x{rank}"
            )));
        }
        Ok(SQPresentation { rank, relations })
    }

    /// Remove x_k using a relation x_k = t (or t = x_k) with t free of x_k,
    /// then renumber the later generators down by one.
    pub fn eliminate(&self, k: usize) -> Result<SQPresentation> {
        let pos = self
            .relations
            .iter()
            .position(|(l, r)| {
                (l.as_gen() == Some(k) && !r.mentions(k))
                    || (r.as_gen() == Some(k) && !l.mentions(k))
            })
            .ok_or_else(|| Error::Invalid(format!("no relation defines x{k}")))?;
        let (l, r) = &self.relations[pos];
        let def = if l.as_gen() == Some(k) && !r.mentions(k) {
            r.clone()
        } else {
            l.clone()
        };
        let images: Vec<SQTerm> = (1..=self.rank)
            .map(|g| match g.cmp(&k) {
                std::cmp::Ordering::Less => SQTerm::gen(g),
                std::cmp::Ordering::Equal => SQTerm::default(),
                std::cmp::Ordering::Greater => SQTerm::gen(g - 1),
            })
            .collect();
        let renumber = |t: &SQTerm| t.substitute(&images);
        let mut def_images = images.clone();
        def_images[k - 1] = renumber(&def);
        let relations = self
            .relations
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != pos)
            .map(|(_, (l, r))| (l.substitute(&def_images), r.substitute(&def_images)))
            .collect();
        Ok(SQPresentation {
            rank: self.rank - 1,
            relations,
        })
    }
}

impl fmt::Display for SQPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.rank).map(|k| format!("x{k}")).collect();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|(l, r)| format!("{l} = {r}"))
            .collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// ⟨x_1..x_n | x_i = Φ(β)(x_i)⟩, omitting relations that read x_i = x_i.
pub fn fundamental_singquandle(beta: &BraidWord) -> Result<SQPresentation> {
    let images = sq_phi_word(beta)?;
    let relations = images
        .into_iter()
        .enumerate()
        .filter(|(k, t)| t.as_gen() != Some(k + 1))
        .map(|(k, t)| (SQTerm::gen(k + 1), t))
        .collect();
    SQPresentation::new(beta.strands(), relations)
}
