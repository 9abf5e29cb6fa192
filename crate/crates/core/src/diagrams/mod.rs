//! Diagram types: framed chord diagrams on one circle, double chord diagrams
//! on two circles, and their linear counterparts on oriented lines.
//!
//! Chords are identified by dense indices `0..n`. Every chord index occurs
//! exactly twice across the words of a diagram. Words are read along the
//! orientation of the core circle (or line); for circles the word is a
//! representative of a cyclic sequence.

mod canon;
mod coproduct;
mod enumerate;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use canon::{
    canonicalize_double, canonicalize_double_linear, canonicalize_framed, canonicalize_linear,
    CanonicalKey,
};
pub use coproduct::{coproduct, PairSum};
pub use enumerate::{enumerate, pairings};

pub type Chord = usize;

/// The four diagram families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Framed,
    Double,
    Linear,
    DoubleLinear,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Framed, Kind::Double, Kind::Linear, Kind::DoubleLinear];

    /// Circles (as opposed to lines).
    pub fn is_cyclic(self) -> bool {
        matches!(self, Kind::Framed | Kind::Double)
    }

    /// Two core circles or lines.
    pub fn is_double(self) -> bool {
        matches!(self, Kind::Double | Kind::DoubleLinear)
    }

    /// Chords carry a 0/1 framing.
    pub fn is_framed(self) -> bool {
        !self.is_double()
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Framed => "framed",
            Kind::Double => "double",
            Kind::Linear => "linear",
            Kind::DoubleLinear => "dlinear",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "framed" | "cd" => Ok(Kind::Framed),
            "double" | "dcd" => Ok(Kind::Double),
            "linear" | "lcd" => Ok(Kind::Linear),
            "dlinear" | "dlcd" => Ok(Kind::DoubleLinear),
            other => Err(format!("unknown diagram kind `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Framing {
    Zero = 0,
    One = 1,
}

impl Framing {
    pub fn flipped(self) -> Framing {
        match self {
            Framing::Zero => Framing::One,
            Framing::One => Framing::Zero,
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn from_bit(bit: u8) -> Option<Framing> {
        match bit {
            0 => Some(Framing::Zero),
            1 => Some(Framing::One),
            _ => None,
        }
    }
}

/// Checks that every chord `0..chords` occurs exactly twice across `words`
/// and no other index occurs.
fn check_occurrences(chords: usize, words: &[&[Chord]]) -> Result<()> {
    let mut count = vec![0usize; chords];
    for &c in words.iter().flat_map(|w| w.iter()) {
        if c >= chords {
            return Err(Error::Occurrence { chord: c, count: 1 });
        }
        count[c] += 1;
    }
    match count.iter().position(|&k| k != 2) {
        Some(chord) => Err(Error::Occurrence { chord, count: count[chord] }),
        None => Ok(()),
    }
}

fn chords_of_double(words: &[&[Chord]]) -> Result<usize> {
    let n = words.iter().flat_map(|w| w.iter()).max().map_or(0, |&m| m + 1);
    check_occurrences(n, words)?;
    Ok(n)
}

/// Maps arbitrary labels to dense chord indices in order of first occurrence.
fn index_labels<L: Eq + Hash + Clone>(labels: impl IntoIterator<Item = L>) -> (Vec<Chord>, usize) {
    let mut ids: HashMap<L, Chord> = HashMap::new();
    let word = labels
        .into_iter()
        .map(|l| {
            let next = ids.len();
            *ids.entry(l).or_insert(next)
        })
        .collect();
    (word, ids.len())
}

fn framed_from_labels<L: Eq + Hash + Clone>(
    tokens: &[(L, Framing)],
) -> Result<(Vec<Chord>, Vec<Framing>)> {
    let (word, n) = index_labels(tokens.iter().map(|(l, _)| l.clone()));
    let mut framing: Vec<Option<Framing>> = vec![None; n];
    for (&c, (_, f)) in word.iter().zip(tokens) {
        match framing[c] {
            Some(g) if g != *f => return Err(Error::FramingMismatch { chord: c }),
            _ => framing[c] = Some(*f),
        }
    }
    let framing = framing.into_iter().map(|f| f.unwrap_or(Framing::Zero)).collect();
    check_occurrences(n, &[&word])?;
    Ok((word, framing))
}

fn restrict_word(word: &[Chord], relabel: &[Option<Chord>]) -> Vec<Chord> {
    word.iter().filter_map(|&c| relabel[c]).collect()
}

/// A chord diagram on one oriented circle whose chords carry framings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedChordDiagram {
    word: Vec<Chord>,
    framing: Vec<Framing>,
}

impl FramedChordDiagram {
    pub fn new(word: Vec<Chord>, framing: Vec<Framing>) -> Result<Self> {
        if word.len() != 2 * framing.len() {
            return Err(Error::FramingCount { chords: word.len() / 2, framings: framing.len() });
        }
        check_occurrences(framing.len(), &[&word])?;
        Ok(FramedChordDiagram { word, framing })
    }

    pub fn from_labels<L: Eq + Hash + Clone>(tokens: &[(L, Framing)]) -> Result<Self> {
        let (word, framing) = framed_from_labels(tokens)?;
        Ok(FramedChordDiagram { word, framing })
    }

    /// The circle without chords.
    pub fn free_loop() -> Self {
        FramedChordDiagram { word: Vec::new(), framing: Vec::new() }
    }

    pub fn word(&self) -> &[Chord] {
        &self.word
    }

    pub fn framing(&self) -> &[Framing] {
        &self.framing
    }

    pub fn chord_count(&self) -> usize {
        self.framing.len()
    }

    pub fn key(&self) -> CanonicalKey {
        canonicalize_framed(self)
    }

    /// The canonical representative of this diagram's isomorphism class.
    pub fn canonical(&self) -> Self {
        self.key().to_framed().expect("framed key")
    }

    /// Keeps only the chords selected by `keep`, renumbering them densely.
    pub fn restrict(&self, keep: impl Fn(Chord) -> bool) -> Self {
        let mut relabel = vec![None; self.chord_count()];
        let mut framing = Vec::new();
        for c in 0..self.chord_count() {
            if keep(c) {
                relabel[c] = Some(framing.len());
                framing.push(self.framing[c]);
            }
        }
        FramedChordDiagram { word: restrict_word(&self.word, &relabel), framing }
    }

    /// The same diagram read from a different base point.
    pub fn rotated(&self, by: usize) -> Self {
        let mut word = self.word.clone();
        if !word.is_empty() {
            let k = by % word.len();
            word.rotate_left(k);
        }
        FramedChordDiagram { word, framing: self.framing.clone() }
    }
}

/// A chord diagram on two oriented circles; chords carry no framing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleChordDiagram {
    circles: [Vec<Chord>; 2],
    chords: usize,
}

impl DoubleChordDiagram {
    pub fn new(first: Vec<Chord>, second: Vec<Chord>) -> Result<Self> {
        let chords = chords_of_double(&[&first, &second])?;
        Ok(DoubleChordDiagram { circles: [first, second], chords })
    }

    pub fn from_labels<L: Eq + Hash + Clone>(first: &[L], second: &[L]) -> Result<Self> {
        let (word, _) = index_labels(first.iter().chain(second).cloned());
        let (a, b) = word.split_at(first.len());
        DoubleChordDiagram::new(a.to_vec(), b.to_vec())
    }

    /// Two circles without chords.
    pub fn empty() -> Self {
        DoubleChordDiagram { circles: [Vec::new(), Vec::new()], chords: 0 }
    }

    pub fn circle(&self, i: usize) -> &[Chord] {
        &self.circles[i]
    }

    pub fn circles(&self) -> [&[Chord]; 2] {
        [&self.circles[0], &self.circles[1]]
    }

    pub fn chord_count(&self) -> usize {
        self.chords
    }

    pub fn key(&self) -> CanonicalKey {
        canonicalize_double(self)
    }
}

/// A framed diagram on one oriented line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedLinearDiagram {
    word: Vec<Chord>,
    framing: Vec<Framing>,
}

impl FramedLinearDiagram {
    pub fn new(word: Vec<Chord>, framing: Vec<Framing>) -> Result<Self> {
        if word.len() != 2 * framing.len() {
            return Err(Error::FramingCount { chords: word.len() / 2, framings: framing.len() });
        }
        check_occurrences(framing.len(), &[&word])?;
        Ok(FramedLinearDiagram { word, framing })
    }

    pub fn from_labels<L: Eq + Hash + Clone>(tokens: &[(L, Framing)]) -> Result<Self> {
        let (word, framing) = framed_from_labels(tokens)?;
        Ok(FramedLinearDiagram { word, framing })
    }

    pub fn empty() -> Self {
        FramedLinearDiagram { word: Vec::new(), framing: Vec::new() }
    }

    pub fn word(&self) -> &[Chord] {
        &self.word
    }

    pub fn framing(&self) -> &[Framing] {
        &self.framing
    }

    pub fn chord_count(&self) -> usize {
        self.framing.len()
    }

    pub fn key(&self) -> CanonicalKey {
        canonicalize_linear(self)
    }

    pub fn canonical(&self) -> Self {
        self.key().to_linear().expect("linear key")
    }
}

/// A diagram on an ordered pair of oriented lines.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleLinearDiagram {
    lines: [Vec<Chord>; 2],
    chords: usize,
}

impl DoubleLinearDiagram {
    pub fn new(first: Vec<Chord>, second: Vec<Chord>) -> Result<Self> {
        let chords = chords_of_double(&[&first, &second])?;
        Ok(DoubleLinearDiagram { lines: [first, second], chords })
    }

    pub fn from_labels<L: Eq + Hash + Clone>(first: &[L], second: &[L]) -> Result<Self> {
        let (word, _) = index_labels(first.iter().chain(second).cloned());
        let (a, b) = word.split_at(first.len());
        DoubleLinearDiagram::new(a.to_vec(), b.to_vec())
    }

    pub fn empty() -> Self {
        DoubleLinearDiagram { lines: [Vec::new(), Vec::new()], chords: 0 }
    }

    pub fn line(&self, i: usize) -> &[Chord] {
        &self.lines[i]
    }

    pub fn lines(&self) -> [&[Chord]; 2] {
        [&self.lines[0], &self.lines[1]]
    }

    pub fn chord_count(&self) -> usize {
        self.chords
    }

    pub fn key(&self) -> CanonicalKey {
        canonicalize_double_linear(self)
    }
}

/// Any of the four diagram kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Diagram {
    Framed(FramedChordDiagram),
    Double(DoubleChordDiagram),
    Linear(FramedLinearDiagram),
    DoubleLinear(DoubleLinearDiagram),
}

impl Diagram {
    pub fn kind(&self) -> Kind {
        match self {
            Diagram::Framed(_) => Kind::Framed,
            Diagram::Double(_) => Kind::Double,
            Diagram::Linear(_) => Kind::Linear,
            Diagram::DoubleLinear(_) => Kind::DoubleLinear,
        }
    }

    pub fn chord_count(&self) -> usize {
        match self {
            Diagram::Framed(d) => d.chord_count(),
            Diagram::Double(d) => d.chord_count(),
            Diagram::Linear(d) => d.chord_count(),
            Diagram::DoubleLinear(d) => d.chord_count(),
        }
    }

    pub fn key(&self) -> CanonicalKey {
        match self {
            Diagram::Framed(d) => d.key(),
            Diagram::Double(d) => d.key(),
            Diagram::Linear(d) => d.key(),
            Diagram::DoubleLinear(d) => d.key(),
        }
    }
}

/// Canonical key of the diagram of `kind` with the given words and framing.
/// For single kinds only `words[0]` is read; for double kinds `framing` is
/// ignored. The input must already satisfy the occurrence invariants.
pub(crate) fn key_of(kind: Kind, words: [Vec<Chord>; 2], framing: Vec<Framing>) -> CanonicalKey {
    let [first, second] = words;
    match kind {
        Kind::Framed => FramedChordDiagram { word: first, framing }.key(),
        Kind::Linear => FramedLinearDiagram { word: first, framing }.key(),
        Kind::Double => {
            let chords = (first.len() + second.len()) / 2;
            DoubleChordDiagram { circles: [first, second], chords }.key()
        }
        Kind::DoubleLinear => {
            let chords = (first.len() + second.len()) / 2;
            DoubleLinearDiagram { lines: [first, second], chords }.key()
        }
    }
}

/// Closes the line of a linear diagram into a circle.
pub fn closure(g: &FramedLinearDiagram) -> FramedChordDiagram {
    FramedChordDiagram { word: g.word.clone(), framing: g.framing.clone() }.canonical()
}

/// Reads a word against its orientation.
pub fn reverse_word<T: Clone>(word: &[T]) -> Vec<T> {
    word.iter().rev().cloned().collect()
}
