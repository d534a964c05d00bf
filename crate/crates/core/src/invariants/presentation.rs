use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free::FreeWord;

/// A finite group presentation ⟨generators | relators⟩.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

/// JSON shape: relators are lists of `[generator, exponent]` syllables with
/// 0-based generator indices.
#[derive(Debug, Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<Vec<(usize, i64)>>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        let rank = generators.len();
        if let Some(r) = relators.iter().find(|r| r.rank() != rank) {
            return Err(Error::Invalid(format!(
                "relator of rank {} in presentation with {rank} generators",
                r.rank()
            )));
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    /// Generators named x1..x_rank.
    pub fn with_default_names(rank: usize, relators: Vec<FreeWord>) -> Result<Self> {
        GroupPresentation::new((1..=rank).map(|k| format!("x{k}")).collect(), relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(|r| r.len()).sum()
    }

    pub fn render_relator(&self, r: &FreeWord) -> String {
        r.render(&self.generators)
    }

    pub fn to_json(&self) -> String {
        let doc = PresentationJson {
            generators: self.generators.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| r.syllables().into_iter().map(|(g, e)| (g - 1, e)).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PresentationJson =
            serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        let rank = doc.generators.len();
        let mut relators = Vec::with_capacity(doc.relators.len());
        for r in doc.relators {
            let syl: Vec<(usize, i64)> = r.into_iter().map(|(g, e)| (g + 1, e)).collect();
            relators.push(FreeWord::from_syllables(rank, &syl)?);
        }
        GroupPresentation::new(doc.generators, relators)
    }

    /// GAP input: `F := FreeGroup(...); rels := [...]; G := F / rels;`
    pub fn to_gap(&self) -> String {
        let mut out = String::new();
        let names: Vec<String> = self.generators.iter().map(|g| format!("\"{g}\"")).collect();
        let _ = writeln!(out, "F := FreeGroup({});", names.join(", "));
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                if r.is_identity() {
                    return "One(F)".to_string();
                }
                let parts: Vec<String> = r
                    .syllables()
                    .into_iter()
                    .map(|(g, e)| {
                        if e == 1 {
                            format!("F.{g}")
                        } else {
                            format!("F.{g}^{e}")
                        }
                    })
                    .collect();
                parts.join("*")
            })
            .collect();
        let _ = writeln!(out, "rels := [ {} ];", rels.join(", "));
        let _ = writeln!(out, "G := F / rels;");
        out
    }
}

impl std::fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| self.render_relator(r))
            .collect();
        write!(
            f,
            "< {} | {} >",
            self.generators.join(", "),
            rels.join(", ")
        )
    }
}
