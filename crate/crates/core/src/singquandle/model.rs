use serde::{Deserialize, Serialize};

use super::term::{SQOp, SQTerm};
use crate::error::{Error, Result};

/// A singquandle on {0, …, order-1} given by its operation tables,
/// `table[x][y] = x op y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSingquandle {
    order: usize,
    star: Vec<Vec<usize>>,
    circ_l: Vec<Vec<usize>>,
    circ_r: Vec<Vec<usize>>,
    star_bar: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    order: usize,
    star: Vec<Vec<usize>>,
    circ_l: Vec<Vec<usize>>,
    circ_r: Vec<Vec<usize>>,
}

/// Names of the identities every singquandle satisfies, in checking order.
pub const AXIOMS: [&str; 10] = [
    "idempotent",
    "right-invertible",
    "self-distributive",
    "star-over-circ-l",
    "star-over-circ-r",
    "star-bar-over-circ-l",
    "star-bar-over-circ-r",
    "singular-slide",
    "circ-r-from-circ-l",
    "singular-twist",
];

fn check_table(name: &str, t: &[Vec<usize>], order: usize) -> Result<()> {
    if t.len() != order
        || t.iter()
            .any(|row| row.len() != order || row.iter().any(|&v| v >= order))
    {
        return Err(Error::Invalid(format!(
            "{name} is not an {order}x{order} table over 0..{order}"
        )));
    }
    Ok(())
}

impl FiniteSingquandle {
    /// Checks table shapes and that each right translation of * is a
    /// bijection; the other axioms are reported by [`Self::failing_axioms`].
    pub fn new(
        star: Vec<Vec<usize>>,
        circ_l: Vec<Vec<usize>>,
        circ_r: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let order = star.len();
        if order == 0 {
            return Err(Error::Invalid("empty model".into()));
        }
        check_table("star", &star, order)?;
        check_table("circ_l", &circ_l, order)?;
        check_table("circ_r", &circ_r, order)?;
        let mut star_bar = vec![vec![usize::MAX; order]; order];
        for y in 0..order {
            for x in 0..order {
                let z = star[x][y];
                if star_bar[z][y] != usize::MAX {
                    return Err(Error::Invalid(format!(
                        "right translation by {y} is not a bijection"
                    )));
                }
                star_bar[z][y] = x;
            }
        }
        Ok(FiniteSingquandle {
            order,
            star,
            circ_l,
            circ_r,
            star_bar,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn star(&self, x: usize, y: usize) -> usize {
        self.star[x][y]
    }

    pub fn star_bar(&self, x: usize, y: usize) -> usize {
        self.star_bar[x][y]
    }

    pub fn circ_l(&self, x: usize, y: usize) -> usize {
        self.circ_l[x][y]
    }

    pub fn circ_r(&self, x: usize, y: usize) -> usize {
        self.circ_r[x][y]
    }

    pub fn apply(&self, op: SQOp, x: usize, y: usize) -> usize {
        match op {
            SQOp::Star => self.star(x, y),
            SQOp::StarBar => self.star_bar(x, y),
            SQOp::CircL => self.circ_l(x, y),
            SQOp::CircR => self.circ_r(x, y),
        }
    }

    /// Axioms from [`AXIOMS`] that fail for some elements.
    pub fn failing_axioms(&self) -> Vec<&'static str> {
        let q = self.order;
        let (s, sb, l, r) = (
            |x, y| self.star(x, y),
            |x, y| self.star_bar(x, y),
            |x, y| self.circ_l(x, y),
            |x, y| self.circ_r(x, y),
        );
        let mut bad = [false; 10];
        for x in 0..q {
            bad[0] |= s(x, x) != x;
            for y in 0..q {
                bad[8] |= r(x, y) != l(y, s(x, y));
                bad[9] |= s(l(x, y), r(x, y)) != r(y, s(x, y));
                for z in 0..q {
                    bad[2] |= s(s(x, y), z) != s(s(x, z), s(y, z));
                    bad[3] |= s(l(x, y), z) != l(s(x, z), s(y, z));
                    bad[4] |= s(r(x, y), z) != r(s(x, z), s(y, z));
                    bad[5] |= sb(l(x, y), z) != l(sb(x, z), sb(y, z));
                    bad[6] |= sb(r(x, y), z) != r(sb(x, z), sb(y, z));
                    bad[7] |= s(sb(y, l(x, z)), x) != sb(s(y, r(x, z)), z);
                }
            }
        }
        // right-invertible is enforced on construction
        AXIOMS
            .iter()
            .zip(bad)
            .filter(|(_, b)| *b)
            .map(|(n, _)| *n)
            .collect()
    }

    pub fn is_singquandle(&self) -> bool {
        self.failing_axioms().is_empty()
    }

    /// Value of `t` with x_k ↦ assignment[k - 1].
    pub fn eval_term(&self, t: &SQTerm, assignment: &[usize]) -> usize {
        t.eval(&|k| assignment[k - 1], &|op, &a, &b| self.apply(op, a, b))
    }

    /// The same model with elements renamed by `p` (element x becomes p[x]).
    pub fn relabel(&self, p: &[usize]) -> FiniteSingquandle {
        let q = self.order;
        let mut inv = vec![0; q];
        for (x, &px) in p.iter().enumerate() {
            inv[px] = x;
        }
        let map = |t: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            (0..q)
                .map(|x| (0..q).map(|y| p[t[inv[x]][inv[y]]]).collect())
                .collect()
        };
        FiniteSingquandle::new(map(&self.star), map(&self.circ_l), map(&self.circ_r))
            .expect("relabelling keeps the model valid")
    }

    pub fn to_json(&self) -> String {
        let file = ModelFile {
            order: self.order,
            star: self.star.clone(),
            circ_l: self.circ_l.clone(),
            circ_r: self.circ_r.clone(),
        };
        serde_json::to_string(&file).expect("tables serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile =
            serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        let m = FiniteSingquandle::new(file.star, file.circ_l, file.circ_r)?;
        if m.order != file.order {
            return Err(Error::Invalid(format!(
                "order {} does not match table size {}",
                file.order, m.order
            )));
        }
        Ok(m)
    }

    /// A list of models as a JSON array.
    pub fn list_to_json(models: &[FiniteSingquandle]) -> String {
        let parts: Vec<String> = models.iter().map(|m| m.to_json()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Accepts a single model object or an array of them.
    pub fn list_from_json(text: &str) -> Result<Vec<FiniteSingquandle>> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        let items = match value {
            serde_json::Value::Array(items) => items,
            other => vec![other],
        };
        items
            .into_iter()
            .map(|v| FiniteSingquandle::from_json(&v.to_string()))
            .collect()
    }
}
