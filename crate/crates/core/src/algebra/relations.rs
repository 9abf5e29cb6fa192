//! Four-term relations and their two-term refinements.
//!
//! A generator is built from a base diagram, an endpoint `x` of a chord `a`
//! and another chord `b` with endpoints `b1`, `b2` (in scan order of the
//! skeleton with `x` removed). `x` is re-inserted at the four positions next
//! to `b1` and `b2`, on whichever circle/line carries that endpoint:
//!
//! ```text
//!     D(x before b1) - D(x after b1) + D(x before b2) - D(x after b2)
//! ```
//!
//! For framed kinds a chord `b` of framing 1 is a half-twisted band. Carrying
//! `x` through it to the `b2` side reverses the local direction, so the roles
//! of "before b2" and "after b2" are exchanged and the framing of `a` flips:
//!
//! ```text
//!     D(x before b1) - D(x after b1) - D'(x before b2) + D'(x after b2)
//! ```
//!
//! where `D'` carries `a` with the opposite framing. Keeping framings rigid
//! instead (the same signs as for framing 0) is available as
//! [`FramedMove::Rigid`]; under that rule the parity map does not respect the
//! relations.

use crate::diagrams::{enumerate, key_of, CanonicalKey, Chord, Framing, Kind};
use crate::error::{Error, Result};

use super::ModuleElement;

/// How a moving endpoint passes a chord of framing 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FramedMove {
    #[default]
    TwistedBand,
    Rigid,
}

/// Where a generator came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub base: CanonicalKey,
    /// Circle/line (0 or 1) and index of the moving endpoint in the base.
    pub moving: (usize, usize),
    /// The chord the moving endpoint belongs to, numbered as in the base.
    pub moving_chord: Chord,
    /// The chord whose endpoints it slides past.
    pub target_chord: Chord,
}

#[derive(Clone, Debug)]
pub struct RelationGenerator {
    pub element: ModuleElement,
    pub provenance: Provenance,
}

impl RelationGenerator {
    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }
}

/// The two ways of sliding the moving endpoint across the whole chord `b`.
#[derive(Clone, Debug)]
pub struct TwoTermPair {
    pub left: CanonicalKey,
    pub right: CanonicalKey,
    pub provenance: Provenance,
}

/// The four placements of one (base, x, b) configuration, in the order
/// before-b1, after-b1, before-b2, after-b2, with their signs.
#[derive(Clone, Debug)]
pub struct Placements {
    pub keys: [CanonicalKey; 4],
    pub signs: [i64; 4],
    pub provenance: Provenance,
}

/// Every four-term expansion of one kind and degree, before coefficients are
/// aggregated.
pub fn expand_4t(kind: Kind, n: usize, rule: FramedMove) -> Vec<Placements> {
    placements(kind, n, rule)
}

fn placements(kind: Kind, n: usize, rule: FramedMove) -> Vec<Placements> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for base in enumerate(kind, n) {
        let words = [base.first_word(), base.second_word()];
        let framing = base.framing().unwrap_or_default();
        for side in 0..2 {
            for i in 0..words[side].len() {
                let a = words[side][i];
                let mut skeleton = words.clone();
                skeleton[side].remove(i);
                let occurrences: Vec<(usize, usize, Chord)> = (0..2)
                    .flat_map(|s| skeleton[s].iter().enumerate().map(move |(j, &c)| (s, j, c)))
                    .collect();
                for b in (0..n).filter(|&b| b != a) {
                    let ends: Vec<(usize, usize)> =
                        occurrences.iter().filter(|o| o.2 == b).map(|o| (o.0, o.1)).collect();
                    let twisted = kind.is_framed()
                        && rule == FramedMove::TwistedBand
                        && framing[b] == Framing::One;
                    let mut keys = Vec::with_capacity(4);
                    for (which, &(s, j)) in ends.iter().enumerate() {
                        let mut fr = framing.clone();
                        if twisted && which == 1 {
                            fr[a] = fr[a].flipped();
                        }
                        for offset in 0..2 {
                            let mut w = skeleton.clone();
                            w[s].insert(j + offset, a);
                            keys.push(key_of(kind, w, fr.clone()));
                        }
                    }
                    let signs = if twisted { [1, -1, -1, 1] } else { [1, -1, 1, -1] };
                    out.push(Placements {
                        keys: keys.try_into().expect("four placements"),
                        signs,
                        provenance: Provenance {
                            base: base.clone(),
                            moving: (side, i),
                            moving_chord: a,
                            target_chord: b,
                        },
                    });
                }
            }
        }
    }
    out
}

/// Every four-term generator of degree `n` (none for `n < 2`), including the
/// ones whose terms cancel. Framed kinds use [`FramedMove::TwistedBand`].
pub fn generate_4t(kind: Kind, n: usize) -> Vec<RelationGenerator> {
    generate_4t_with(kind, n, FramedMove::default())
}

pub fn generate_4t_with(kind: Kind, n: usize, rule: FramedMove) -> Vec<RelationGenerator> {
    placements(kind, n, rule)
        .into_iter()
        .map(|p| {
            let mut element = ModuleElement::zero(kind);
            for (k, s) in p.keys.into_iter().zip(p.signs) {
                element.add_term(k, s);
            }
            RelationGenerator { element, provenance: p.provenance }
        })
        .collect()
}

/// For double and double-linear kinds: the pairs (before b1, after b2) and
/// (after b1, before b2) of every configuration. The four-term generator is
/// the difference of the two pair differences.
pub fn generate_2t_pairs(kind: Kind, n: usize) -> Result<Vec<TwoTermPair>> {
    if !kind.is_double() {
        return Err(Error::UnsupportedKind(kind));
    }
    let mut out = Vec::new();
    for p in placements(kind, n, FramedMove::default()) {
        let [before1, after1, before2, after2] = p.keys;
        out.push(TwoTermPair { left: before1, right: after2, provenance: p.provenance.clone() });
        out.push(TwoTermPair { left: after1, right: before2, provenance: p.provenance });
    }
    Ok(out)
}
