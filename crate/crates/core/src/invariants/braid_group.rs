use super::GroupPresentation;
use crate::error::Result;
use crate::free::FreeWord;
use crate::represent::{phi_word, RepId};
use crate::words::BraidWord;

/// ⟨x_1..x_n | x_i^{-1} Ψ(β)(x_i)⟩ with trivial relators left out.
pub fn group_of_braid(rep: RepId, beta: &BraidWord) -> Result<GroupPresentation> {
    let images = phi_word(rep, beta)?;
    let n = beta.strands();
    let relators = images
        .images()
        .iter()
        .enumerate()
        .map(|(k, img)| FreeWord::generator(n, k + 1).inverse().mul(img))
        .filter(|r| !r.is_identity())
        .collect();
    GroupPresentation::with_default_names(n, relators)
}
