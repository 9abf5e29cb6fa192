//! Connected sums, and the search for two connected sums of the same pair of
//! framed diagrams that the parity map and the surgery weight tell apart.

use std::collections::BTreeSet;

use crate::algebra::ModuleElement;
use crate::diagrams::{
    enumerate, Chord, DoubleLinearDiagram, FramedChordDiagram, FramedLinearDiagram, Kind,
};
use crate::error::{Error, Result};
use crate::parity::psi;
use crate::surgery::weight;

/// A point on the core circle: the arc following endpoint `arc` of the
/// stored word. The chordless circle has the single arc 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutPoint {
    pub arc: usize,
}

impl CutPoint {
    pub fn new(arc: usize) -> Self {
        CutPoint { arc }
    }
}

fn arc_count(d: &FramedChordDiagram) -> usize {
    d.word().len().max(1)
}

/// The circle opened at `cut`, read along its orientation.
fn open_at(d: &FramedChordDiagram, cut: CutPoint) -> Result<Vec<Chord>> {
    let arcs = arc_count(d);
    if cut.arc >= arcs {
        return Err(Error::CutOutOfRange { index: cut.arc, arcs });
    }
    let w = d.word();
    if w.is_empty() {
        return Ok(Vec::new());
    }
    Ok(w[cut.arc + 1..].iter().chain(&w[..=cut.arc]).copied().collect())
}

/// Cuts both circles, joins the two lines head to tail and closes up.
/// Returns the canonical representative.
pub fn connected_sum_framed(
    d1: &FramedChordDiagram,
    c1: CutPoint,
    d2: &FramedChordDiagram,
    c2: CutPoint,
) -> Result<FramedChordDiagram> {
    let n1 = d1.chord_count();
    let mut word = open_at(d1, c1)?;
    word.extend(open_at(d2, c2)?.into_iter().map(|c| c + n1));
    let framing = d1.framing().iter().chain(d2.framing()).copied().collect();
    Ok(FramedChordDiagram::new(word, framing)?.canonical())
}

pub fn connected_sum_linear(g1: &FramedLinearDiagram, g2: &FramedLinearDiagram) -> FramedLinearDiagram {
    let n1 = g1.chord_count();
    let word = g1.word().iter().copied().chain(g2.word().iter().map(|c| c + n1)).collect();
    let framing = g1.framing().iter().chain(g2.framing()).copied().collect();
    FramedLinearDiagram::new(word, framing).expect("disjoint chord sets")
}

/// Line-wise concatenation: first line to first line, second to second.
pub fn connected_sum_dlinear(h1: &DoubleLinearDiagram, h2: &DoubleLinearDiagram) -> DoubleLinearDiagram {
    let n1 = h1.chord_count();
    let join = |i: usize| -> Vec<Chord> {
        h1.line(i).iter().copied().chain(h2.line(i).iter().map(|c| c + n1)).collect()
    };
    DoubleLinearDiagram::new(join(0), join(1)).expect("disjoint chord sets")
}

/// One connected sum together with its parity image and weight.
#[derive(Clone, Debug)]
pub struct CutSum {
    pub cuts: (CutPoint, CutPoint),
    pub sum: FramedChordDiagram,
    pub psi: ModuleElement,
    pub weight: i64,
}

fn cut_sum(d1: &FramedChordDiagram, c1: CutPoint, d2: &FramedChordDiagram, c2: CutPoint) -> CutSum {
    let sum = connected_sum_framed(d1, c1, d2, c2).expect("cut in range");
    let psi = psi(&sum);
    let weight = weight(&psi).expect("double kind");
    CutSum { cuts: (c1, c2), sum, psi, weight }
}

/// Two connected sums of `d1` and `d2` with different `w∘ψ`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub d1: FramedChordDiagram,
    pub d2: FramedChordDiagram,
    /// The sum at cuts (0, 0).
    pub first: CutSum,
    /// The first sum, in cut order, whose weight differs from `first`.
    pub second: CutSum,
    /// Every weight reached by some pair of cuts.
    pub weights: BTreeSet<i64>,
}

/// Examines the pair `(d1, d2)` over all cut choices.
pub fn examine_pair(d1: &FramedChordDiagram, d2: &FramedChordDiagram) -> Option<Witness> {
    let base = cut_sum(d1, CutPoint::new(0), d2, CutPoint::new(0));
    let mut weights = BTreeSet::from([base.weight]);
    let mut second = None;
    for i in 0..arc_count(d1) {
        for j in 0..arc_count(d2) {
            let s = cut_sum(d1, CutPoint::new(i), d2, CutPoint::new(j));
            weights.insert(s.weight);
            if second.is_none() && s.weight != base.weight {
                second = Some(s);
            }
        }
    }
    second.map(|second| Witness { d1: d1.clone(), d2: d2.clone(), first: base, second, weights })
}

/// Every witness among canonical pairs with at most `max_chords` chords in
/// total, ordered by total chord count, then chords of `d1`, then keys.
pub fn search_counterexamples(max_chords: usize) -> Vec<Witness> {
    let mut found = Vec::new();
    for total in 0..=max_chords {
        for n1 in 0..=total {
            let left = enumerate(Kind::Framed, n1);
            let right = enumerate(Kind::Framed, total - n1);
            for k1 in &left {
                let d1 = k1.to_framed().unwrap();
                for k2 in &right {
                    if let Some(w) = examine_pair(&d1, &k2.to_framed().unwrap()) {
                        found.push(w);
                    }
                }
            }
        }
    }
    found
}

/// The first witness in search order, if any.
pub fn search_counterexample(max_chords: usize) -> Option<Witness> {
    search_counterexamples(max_chords).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Framing::{One, Zero};

    #[test]
    fn free_loop_is_an_identity() {
        let d = FramedChordDiagram::from_labels(&[('A', One), ('B', Zero), ('A', One), ('B', Zero)]).unwrap();
        let o = FramedChordDiagram::free_loop();
        for i in 0..4 {
            let c = CutPoint::new(i);
            assert_eq!(connected_sum_framed(&d, c, &o, CutPoint::new(0)).unwrap().key(), d.key());
            assert_eq!(connected_sum_framed(&o, CutPoint::new(0), &d, c).unwrap().key(), d.key());
        }
    }

    #[test]
    fn one_chord_sums_agree() {
        let a = FramedChordDiagram::from_labels(&[('A', One), ('A', One)]).unwrap();
        let expected = FramedChordDiagram::from_labels(&[('A', One), ('A', One), ('B', One), ('B', One)]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s = connected_sum_framed(&a, CutPoint::new(i), &a, CutPoint::new(j)).unwrap();
                assert_eq!(s.key(), expected.key());
            }
        }
    }

    #[test]
    fn out_of_range_cut() {
        let a = FramedChordDiagram::from_labels(&[('A', One), ('A', One)]).unwrap();
        let o = FramedChordDiagram::free_loop();
        assert!(matches!(
            connected_sum_framed(&a, CutPoint::new(2), &o, CutPoint::new(0)),
            Err(Error::CutOutOfRange { index: 2, arcs: 2 })
        ));
        assert!(connected_sum_framed(&a, CutPoint::new(0), &o, CutPoint::new(1)).is_err());
    }

    #[test]
    fn linear_sums() {
        let e = FramedLinearDiagram::empty();
        let g = FramedLinearDiagram::from_labels(&[('A', Zero), ('B', One), ('A', Zero), ('B', One)]).unwrap();
        assert_eq!(connected_sum_linear(&e, &g), g);
        let a = FramedLinearDiagram::from_labels(&[('A', Zero), ('A', Zero)]).unwrap();
        let b = FramedLinearDiagram::from_labels(&[('B', One), ('B', One)]).unwrap();
        let ab = FramedLinearDiagram::from_labels(&[('A', Zero), ('A', Zero), ('B', One), ('B', One)]).unwrap();
        assert_eq!(connected_sum_linear(&a, &b).key(), ab.key());
        assert_ne!(connected_sum_linear(&a, &b).key(), connected_sum_linear(&b, &a).key());
    }

    #[test]
    fn dlinear_identity() {
        let h = DoubleLinearDiagram::from_labels(&['A', 'B'], &['A', 'B']).unwrap();
        assert_eq!(connected_sum_dlinear(&DoubleLinearDiagram::empty(), &h), h);
        assert_eq!(connected_sum_dlinear(&h, &DoubleLinearDiagram::empty()), h);
    }

    #[test]
    fn no_witness_up_to_two_chords() {
        assert!(search_counterexample(2).is_none());
    }
}
