//! Probe policies and approximate-equality helpers shared by the cell
//! operations.

use group_kernel::{words_up_to, Element, Group, GroupKind, ProbeConfig};
use xmod_core::XModMorphism;

use crate::error::{HomotopyError, Result};

/// Number of seeded random words used by word-probe policies, bounded by the
/// configured tuple cap so callers can cheapen inner loops.
pub(crate) fn n_random(cfg: &ProbeConfig) -> usize {
    cfg.max_tuples.min(500)
}

/// Whether the carrier is a free group.
pub(crate) fn is_free(g: &Group) -> bool {
    matches!(g.kind(), GroupKind::Free { .. })
}

/// Requires a free carrier, returning its basis size.
pub(crate) fn require_free(g: &Group) -> Result<usize> {
    if is_free(g) {
        Ok(g.free_basis().len())
    } else {
        Err(HomotopyError::SourceNotFree(g.name().to_string()))
    }
}

/// The word-probe policy for laws quantified over a free group: every word
/// of length at most 3 over the basis and its inverses, plus seeded random
/// words of length at most 8.
pub fn probe_words(f: &Group, cfg: &ProbeConfig) -> Result<Vec<Element>> {
    let n = require_free(f)?;
    let mut out: Vec<Element> = words_up_to(n, 3).into_iter().map(|w| f.word(w)).collect();
    out.extend(cfg.random_words(n, 8, n_random(cfg)).into_iter().map(|w| f.word(w)));
    Ok(out)
}

/// Whether two parallel morphisms agree on the probe sets of their shared
/// source (an exact equality for finite sources).
pub fn morphisms_agree(a: &XModMorphism, b: &XModMorphism, cfg: &ProbeConfig) -> bool {
    if a.source != b.source || a.target != b.target {
        return false;
    }
    a.source.g.probe(cfg).iter().all(|g| a.phi.apply(g) == b.phi.apply(g))
        && a.source.e.probe(cfg).iter().all(|e| a.psi.apply(e) == b.psi.apply(e))
        && a.source.l.probe(cfg).iter().all(|l| a.mu.apply(l) == b.mu.apply(l))
}
