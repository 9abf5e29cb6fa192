use std::collections::BTreeSet;

use super::{
    CanonicalKey, Chord, DoubleChordDiagram, DoubleLinearDiagram, FramedChordDiagram,
    FramedLinearDiagram, Framing, Kind,
};

/// All double-occurrence words on `n` chords with chords numbered by first
/// occurrence, i.e. the `(2n-1)!!` perfect matchings of `2n` points.
pub fn pairings(n: usize) -> Vec<Vec<Chord>> {
    fn extend(word: &mut Vec<Chord>, open: &mut Vec<Chord>, next: Chord, n: usize, out: &mut Vec<Vec<Chord>>) {
        if word.len() == 2 * n {
            out.push(word.clone());
            return;
        }
        if next < n {
            word.push(next);
            open.push(next);
            extend(word, open, next + 1, n, out);
            open.pop();
            word.pop();
        }
        for i in 0..open.len() {
            let c = open.remove(i);
            word.push(c);
            extend(word, open, next, n, out);
            word.pop();
            open.insert(i, c);
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(2 * n), &mut Vec::new(), 0, n, &mut out);
    out
}

fn framings(n: usize) -> impl Iterator<Item = Vec<Framing>> {
    (0..1u32 << n).map(move |mask| {
        (0..n)
            .map(|i| if mask >> i & 1 == 1 { Framing::One } else { Framing::Zero })
            .collect()
    })
}

/// Every isomorphism class of `kind` diagrams with exactly `n` chords, sorted.
///
/// The cost grows like `(2n-1)!! * 2^n`; n <= 6 is practical for every kind.
pub fn enumerate(kind: Kind, n: usize) -> Vec<CanonicalKey> {
    let mut keys = BTreeSet::new();
    for word in pairings(n) {
        match kind {
            Kind::Framed => {
                for framing in framings(n) {
                    keys.insert(FramedChordDiagram { word: word.clone(), framing }.key());
                }
            }
            Kind::Linear => {
                for framing in framings(n) {
                    keys.insert(FramedLinearDiagram { word: word.clone(), framing }.key());
                }
            }
            Kind::Double | Kind::DoubleLinear => {
                for split in 0..=word.len() {
                    let (a, b) = word.split_at(split);
                    let key = if kind == Kind::Double {
                        DoubleChordDiagram { circles: [a.to_vec(), b.to_vec()], chords: n }.key()
                    } else {
                        DoubleLinearDiagram { lines: [a.to_vec(), b.to_vec()], chords: n }.key()
                    };
                    keys.insert(key);
                }
            }
        }
    }
    keys.into_iter().collect()
}
