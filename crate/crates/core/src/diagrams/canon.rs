//! Canonical keys: the lexicographically least relabeled encoding over the
//! symmetries of each kind (rotations of circles, and exchange of the two
//! circles of a double diagram). Lines admit no symmetry beyond relabeling.

use std::fmt;

use super::{
    Chord, DoubleChordDiagram, DoubleLinearDiagram, FramedChordDiagram, FramedLinearDiagram,
    Framing, Kind,
};

/// Isomorphism-class key. Chords are renumbered by first occurrence; for
/// framed kinds a token is `2 * chord + framing`, for double kinds it is the
/// chord number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    kind: Kind,
    first: Vec<u16>,
    second: Vec<u16>,
}

impl CanonicalKey {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn chord_count(&self) -> usize {
        (self.first.len() + self.second.len()) / 2
    }

    /// Word of the first (or only) circle/line, as chord numbers.
    pub fn first_word(&self) -> Vec<Chord> {
        self.decode(&self.first)
    }

    /// Word of the second circle/line; empty for single kinds.
    pub fn second_word(&self) -> Vec<Chord> {
        self.decode(&self.second)
    }

    /// Framing of each chord for framed kinds, `None` otherwise.
    pub fn framing(&self) -> Option<Vec<Framing>> {
        if !self.kind.is_framed() {
            return None;
        }
        let mut framing = vec![Framing::Zero; self.chord_count()];
        for &t in &self.first {
            framing[(t >> 1) as usize] = Framing::from_bit((t & 1) as u8).unwrap();
        }
        Some(framing)
    }

    fn decode(&self, tokens: &[u16]) -> Vec<Chord> {
        if self.kind.is_framed() {
            tokens.iter().map(|&t| (t >> 1) as Chord).collect()
        } else {
            tokens.iter().map(|&t| t as Chord).collect()
        }
    }

    pub fn to_framed(&self) -> Option<FramedChordDiagram> {
        (self.kind == Kind::Framed).then(|| FramedChordDiagram {
            word: self.first_word(),
            framing: self.framing().unwrap(),
        })
    }

    pub fn to_linear(&self) -> Option<FramedLinearDiagram> {
        (self.kind == Kind::Linear).then(|| FramedLinearDiagram {
            word: self.first_word(),
            framing: self.framing().unwrap(),
        })
    }

    pub fn to_double(&self) -> Option<DoubleChordDiagram> {
        (self.kind == Kind::Double).then(|| DoubleChordDiagram {
            circles: [self.first_word(), self.second_word()],
            chords: self.chord_count(),
        })
    }

    pub fn to_double_linear(&self) -> Option<DoubleLinearDiagram> {
        (self.kind == Kind::DoubleLinear).then(|| DoubleLinearDiagram {
            lines: [self.first_word(), self.second_word()],
            chords: self.chord_count(),
        })
    }

    pub fn to_diagram(&self) -> super::Diagram {
        use super::Diagram;
        match self.kind {
            Kind::Framed => Diagram::Framed(self.to_framed().unwrap()),
            Kind::Double => Diagram::Double(self.to_double().unwrap()),
            Kind::Linear => Diagram::Linear(self.to_linear().unwrap()),
            Kind::DoubleLinear => Diagram::DoubleLinear(self.to_double_linear().unwrap()),
        }
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.kind, self.first)?;
        if self.kind.is_double() {
            write!(f, "|{:?}", self.second)?;
        }
        Ok(())
    }
}

/// Relabels chords by first occurrence, continuing numbering from `next`.
struct Relabeler {
    map: Vec<u16>,
    next: u16,
}

impl Relabeler {
    const UNSEEN: u16 = u16::MAX;

    fn new(chords: usize) -> Self {
        Relabeler { map: vec![Self::UNSEEN; chords], next: 0 }
    }

    fn label(&mut self, c: Chord) -> u16 {
        if self.map[c] == Self::UNSEEN {
            self.map[c] = self.next;
            self.next += 1;
        }
        self.map[c]
    }

    fn encode(&mut self, word: impl Iterator<Item = Chord>, framing: Option<&[Framing]>, out: &mut Vec<u16>) {
        out.clear();
        for c in word {
            let l = self.label(c);
            out.push(match framing {
                Some(fr) => (l << 1) | fr[c].bit() as u16,
                None => l,
            });
        }
    }
}

fn rotation(word: &[Chord], start: usize) -> impl Iterator<Item = Chord> + '_ {
    word[start..].iter().chain(&word[..start]).copied()
}

fn least_rotation(word: &[Chord], framing: &[Framing]) -> Vec<u16> {
    let mut best: Option<Vec<u16>> = None;
    let mut buf = Vec::with_capacity(word.len());
    for start in 0..word.len().max(1) {
        let mut r = Relabeler::new(framing.len());
        if word.is_empty() {
            buf.clear();
        } else {
            r.encode(rotation(word, start), Some(framing), &mut buf);
        }
        if best.as_ref().map_or(true, |b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.unwrap_or_default()
}

pub fn canonicalize_framed(d: &FramedChordDiagram) -> CanonicalKey {
    CanonicalKey { kind: Kind::Framed, first: least_rotation(&d.word, &d.framing), second: Vec::new() }
}

/// Rotations of both circles and the exchange of the circles.
pub fn canonicalize_double(d: &DoubleChordDiagram) -> CanonicalKey {
    let n = d.chords;
    let mut best: Option<(Vec<u16>, Vec<u16>)> = None;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (w1, w2) in [(&d.circles[0], &d.circles[1]), (&d.circles[1], &d.circles[0])] {
        for s1 in 0..w1.len().max(1) {
            for s2 in 0..w2.len().max(1) {
                let mut r = Relabeler::new(n);
                if w1.is_empty() { a.clear() } else { r.encode(rotation(w1, s1), None, &mut a) }
                if w2.is_empty() { b.clear() } else { r.encode(rotation(w2, s2), None, &mut b) }
                let better = match &best {
                    None => true,
                    Some((x, y)) => (&a, &b) < (x, y),
                };
                if better {
                    best = Some((a.clone(), b.clone()));
                }
            }
        }
    }
    let (first, second) = best.unwrap_or_default();
    CanonicalKey { kind: Kind::Double, first, second }
}

pub fn canonicalize_linear(d: &FramedLinearDiagram) -> CanonicalKey {
    let mut first = Vec::new();
    Relabeler::new(d.framing.len()).encode(d.word.iter().copied(), Some(&d.framing), &mut first);
    CanonicalKey { kind: Kind::Linear, first, second: Vec::new() }
}

/// Lines are ordered: no exchange.
pub fn canonicalize_double_linear(d: &DoubleLinearDiagram) -> CanonicalKey {
    let mut r = Relabeler::new(d.chords);
    let (mut first, mut second) = (Vec::new(), Vec::new());
    r.encode(d.lines[0].iter().copied(), None, &mut first);
    r.encode(d.lines[1].iter().copied(), None, &mut second);
    CanonicalKey { kind: Kind::DoubleLinear, first, second }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Framing::{One, Zero};

    fn framed(word: &[(char, Framing)]) -> FramedChordDiagram {
        FramedChordDiagram::from_labels(word).unwrap()
    }

    fn double(a: &str, b: &str) -> DoubleChordDiagram {
        let a: Vec<char> = a.chars().filter(|c| !c.is_whitespace()).collect();
        let b: Vec<char> = b.chars().filter(|c| !c.is_whitespace()).collect();
        DoubleChordDiagram::from_labels(&a, &b).unwrap()
    }

    #[test]
    fn framed_rotation_and_relabel() {
        let abab = framed(&[('A', Zero), ('B', Zero), ('A', Zero), ('B', Zero)]);
        let baba = framed(&[('B', Zero), ('A', Zero), ('B', Zero), ('A', Zero)]);
        assert_eq!(abab.key(), baba.key());
        let aabb = framed(&[('A', Zero), ('A', Zero), ('B', One), ('B', One)]);
        let bbaa = framed(&[('B', One), ('B', One), ('A', Zero), ('A', Zero)]);
        assert_eq!(aabb.key(), bbaa.key());
    }

    #[test]
    fn interleaved_and_nested_are_distinct() {
        let x = framed(&[('A', One), ('B', Zero), ('A', One), ('B', Zero)]);
        let o = framed(&[('A', One), ('B', Zero), ('B', Zero), ('A', One)]);
        // oracle: the full rotation orbit of one word never meets the other
        let orbit: Vec<_> = (0..4).map(|k| x.rotated(k).word().to_vec()).collect();
        let o_relabeled: Vec<_> = (0..4).map(|k| o.rotated(k).canonical().word().to_vec()).collect();
        assert!(orbit.iter().all(|w| !o_relabeled.contains(w)));
        assert_ne!(x.key(), o.key());
    }

    #[test]
    fn double_swap_rotation() {
        assert_eq!(double("AA", "").key(), double("", "AA").key());
        assert_eq!(double("AB", "AB").key(), double("BA", "AB").key());
        assert_eq!(double("", "").key(), DoubleChordDiagram::empty().key());
        assert_eq!(double("", "").key().chord_count(), 0);
    }

    #[test]
    fn linear_relabel_only() {
        let g = FramedLinearDiagram::from_labels(&[("A", Zero), ("B", One), ("B", One), ("A", Zero)]).unwrap();
        let h = FramedLinearDiagram::from_labels(&[("Z", Zero), ("Y", One), ("Y", One), ("Z", Zero)]).unwrap();
        assert_eq!(g.key(), h.key());
        assert_eq!(g.key().first_word(), vec![0, 1, 1, 0]);
        let rotated = FramedLinearDiagram::from_labels(&[("B", One), ("B", One), ("A", Zero), ("A", Zero)]).unwrap();
        assert_ne!(g.key(), rotated.key());
    }

    #[test]
    fn double_linear_lines_are_ordered() {
        let h = DoubleLinearDiagram::from_labels(&['A', 'A', 'B'], &['B']).unwrap();
        let swapped = DoubleLinearDiagram::from_labels(&['B'], &['A', 'A', 'B']).unwrap();
        assert_ne!(h.key(), swapped.key());
        let h2 = DoubleLinearDiagram::from_labels(&['A', 'B'], &['A', 'B']).unwrap();
        let h3 = DoubleLinearDiagram::from_labels(&['B', 'A'], &['A', 'B']).unwrap();
        assert_ne!(h2.key(), h3.key());
    }

    #[test]
    fn keys_round_trip_to_diagrams() {
        let d = framed(&[('A', One), ('B', Zero), ('C', One), ('B', Zero), ('A', One), ('C', One)]);
        let k = d.key();
        assert_eq!(k.to_framed().unwrap().key(), k);
        assert!(k.to_double().is_none());
        let dd = double("ABCA", "CB");
        assert_eq!(dd.key().to_double().unwrap().key(), dd.key());
    }
}
