use std::collections::BTreeMap;

use super::{CanonicalKey, FramedChordDiagram};

/// A formal integer combination of ordered pairs of diagrams.
pub type PairSum = BTreeMap<(CanonicalKey, CanonicalKey), i64>;

/// Sum over all splittings of the chord set into a subset and its
/// complement of (diagram on the subset) ⊗ (diagram on the complement).
pub fn coproduct(d: &FramedChordDiagram) -> PairSum {
    let n = d.chord_count();
    let mut out = PairSum::new();
    for mask in 0..1u64 << n {
        let left = d.restrict(|c| mask >> c & 1 == 1).key();
        let right = d.restrict(|c| mask >> c & 1 == 0).key();
        *out.entry((left, right)).or_insert(0) += 1;
    }
    out
}
