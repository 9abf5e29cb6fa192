//! The parity maps: framed diagrams to double diagrams (ψ) and framed linear
//! diagrams to double-linear diagrams (ψ_l).
//!
//! Each chord is placed on one of two copies of the core: a framing-0 chord
//! puts both endpoints on the same copy, a framing-1 chord puts its endpoints
//! on different copies. The second copy is read against the original
//! orientation. All `2^n` placements are summed.

use crate::algebra::ModuleElement;
use crate::diagrams::{
    reverse_word, Chord, DoubleChordDiagram, DoubleLinearDiagram, FramedChordDiagram,
    FramedLinearDiagram, Framing, Kind,
};

/// The two words of one placement. Chords keep their numbering from `word`.
/// Bit `c` of `choice` selects the copy of chord `c` (of its first
/// occurrence, for framing 1).
fn split(word: &[Chord], framing: &[Framing], choice: u64) -> [Vec<Chord>; 2] {
    let mut seen = vec![false; framing.len()];
    let mut copies: [Vec<Chord>; 2] = [Vec::new(), Vec::new()];
    for &c in word {
        let bit = (choice >> c & 1) as usize;
        let copy = match framing[c] {
            Framing::Zero => bit,
            Framing::One if !seen[c] => bit,
            Framing::One => 1 - bit,
        };
        seen[c] = true;
        copies[copy].push(c);
    }
    let second = reverse_word(&copies[1]);
    copies[1] = second;
    copies
}

fn placements<'a>(word: &'a [Chord], framing: &'a [Framing]) -> impl Iterator<Item = [Vec<Chord>; 2]> + 'a {
    assert!(framing.len() < 64, "too many chords");
    (0..1u64 << framing.len()).map(move |choice| split(word, framing, choice))
}

/// The `2^n` summands of ψ(d) before canonicalization.
pub fn psi_summands(d: &FramedChordDiagram) -> Vec<DoubleChordDiagram> {
    placements(d.word(), d.framing())
        .map(|[a, b]| DoubleChordDiagram::new(a, b).expect("placement keeps every chord"))
        .collect()
}

pub fn psi(d: &FramedChordDiagram) -> ModuleElement {
    let mut out = ModuleElement::zero(Kind::Double);
    for s in psi_summands(d) {
        out.add_term(s.key(), 1);
    }
    out
}

/// ψ extended linearly. Panics on a non-framed element.
pub fn psi_module(u: &ModuleElement) -> ModuleElement {
    assert_eq!(u.kind(), Kind::Framed, "ψ is defined on framed diagrams");
    let mut out = ModuleElement::zero(Kind::Double);
    for (k, c) in u.terms() {
        for (kk, cc) in psi(&k.to_framed().unwrap()).terms() {
            out.add_term(kk.clone(), c * cc);
        }
    }
    out
}

pub fn psi_l_summands(g: &FramedLinearDiagram) -> Vec<DoubleLinearDiagram> {
    placements(g.word(), g.framing())
        .map(|[a, b]| DoubleLinearDiagram::new(a, b).expect("placement keeps every chord"))
        .collect()
}

pub fn psi_l(g: &FramedLinearDiagram) -> ModuleElement {
    let mut out = ModuleElement::zero(Kind::DoubleLinear);
    for s in psi_l_summands(g) {
        out.add_term(s.key(), 1);
    }
    out
}

/// ψ_l extended linearly. Panics on a non-linear element.
pub fn psi_l_module(u: &ModuleElement) -> ModuleElement {
    assert_eq!(u.kind(), Kind::Linear, "ψ_l is defined on framed linear diagrams");
    let mut out = ModuleElement::zero(Kind::DoubleLinear);
    for (k, c) in u.terms() {
        for (kk, cc) in psi_l(&k.to_linear().unwrap()).terms() {
            out.add_term(kk.clone(), c * cc);
        }
    }
    out
}
