//! Surgery along chords and the component count β.
//!
//! Every chord endpoint `p` is cut out of its core circle (or line), leaving
//! two nodes: `in(p)`, where the incoming arc ends, and `out(p)`, where the
//! outgoing arc starts. Consecutive endpoints `p -> p'` are joined by the arc
//! gluing `out(p) ~ in(p')`. A chord `(p, q)` is replaced by a band whose two
//! edges glue `in(p) ~ out(q)` and `in(q) ~ out(p)`.
//!
//! This single rule covers both shapes of the surgery picture. For a chord on
//! one circle, walking forward into `p` the band carries us to `q` and we
//! leave `q` forward: the band's two edges run parallel to the chord, which is
//! the "draw a parallel chord and remove the small arcs" picture. For a chord
//! between two circles the same gluing leaves both circles traversed in their
//! own direction, so the orientations stay coherent. A half-twisted band
//! (framing 1 in a framed diagram) instead glues `in(p) ~ in(q)` and
//! `out(p) ~ out(q)`.
//!
//! Worked trace on one circle with word `x b b' y`, chords `(x, y)` and
//! `(b, b')`, endpoints numbered 0..3: following `out(i) -> in(i+1) ->
//! out(partner(i+1))` gives the cycles `{0, 2}`, `{1}`, `{3}`, so β = 3.
//! For `b x b' y` the same walk visits all four endpoints: β = 1.

use crate::algebra::ModuleElement;
use crate::diagrams::{
    Chord, DoubleChordDiagram, DoubleLinearDiagram, FramedChordDiagram, Framing, Kind,
};
use crate::error::{Error, Result};

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n], sets: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        self.sets -= 1;
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    In,
    Out,
}

/// A node of the smoothing graph: one side of one endpoint. Endpoints are
/// numbered along the first circle/line, then the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub endpoint: usize,
    pub side: Side,
}

impl Node {
    fn index(self) -> usize {
        2 * self.endpoint + self.side as usize
    }

    pub fn at(endpoint: usize, side: Side) -> Self {
        Node { endpoint, side }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GluingKind {
    Arc,
    Chord,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gluing {
    pub a: Node,
    pub b: Node,
    pub kind: GluingKind,
}

/// The 1-manifold left after surgery, as a pairing of arc-end nodes.
#[derive(Clone, Debug)]
pub struct SmoothingGraph {
    pub endpoints: usize,
    pub gluings: Vec<Gluing>,
    /// Circles or lines carrying no endpoint.
    pub free_loops: usize,
    /// Unpaired nodes at the ends of lines.
    pub free_ends: Vec<Node>,
}

impl SmoothingGraph {
    /// Number of connected components, including chordless circles/lines.
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(2 * self.endpoints);
        for g in &self.gluings {
            uf.union(g.a.index(), g.b.index());
        }
        uf.sets + self.free_loops
    }

    /// How many gluings each node takes part in, indexed by `Node::index`.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        let mut deg = vec![(0, 0); 2 * self.endpoints];
        for g in &self.gluings {
            for n in [g.a, g.b] {
                match g.kind {
                    GluingKind::Arc => deg[n.index()].0 += 1,
                    GluingKind::Chord => deg[n.index()].1 += 1,
                }
            }
        }
        deg
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Band {
    Coherent,
    HalfTwisted,
}

fn build(words: &[&[Chord]], cyclic: bool, band: impl Fn(Chord) -> Band) -> SmoothingGraph {
    let endpoints: usize = words.iter().map(|w| w.len()).sum();
    let mut gluings = Vec::with_capacity(endpoints);
    let mut free_loops = 0;
    let mut free_ends = Vec::new();
    let mut seen: Vec<Option<usize>> = Vec::new();
    let mut offset = 0;
    for word in words {
        let len = word.len();
        if len == 0 {
            free_loops += 1;
            continue;
        }
        for i in 0..len {
            let p = offset + i;
            if i + 1 < len {
                gluings.push(Gluing { a: Node::at(p, Side::Out), b: Node::at(p + 1, Side::In), kind: GluingKind::Arc });
            } else if cyclic {
                gluings.push(Gluing { a: Node::at(p, Side::Out), b: Node::at(offset, Side::In), kind: GluingKind::Arc });
            }
            let c = word[i];
            if c >= seen.len() {
                seen.resize(c + 1, None);
            }
            match seen[c].take() {
                None => seen[c] = Some(p),
                Some(q) => {
                    let (x, y) = match band(c) {
                        Band::Coherent => ((Side::In, Side::Out), (Side::In, Side::Out)),
                        Band::HalfTwisted => ((Side::In, Side::In), (Side::Out, Side::Out)),
                    };
                    gluings.push(Gluing { a: Node::at(q, x.0), b: Node::at(p, x.1), kind: GluingKind::Chord });
                    gluings.push(Gluing { a: Node::at(p, y.0), b: Node::at(q, y.1), kind: GluingKind::Chord });
                }
            }
        }
        if !cyclic {
            free_ends.push(Node::at(offset, Side::In));
            free_ends.push(Node::at(offset + len - 1, Side::Out));
        }
        offset += len;
    }
    SmoothingGraph { endpoints, gluings, free_loops, free_ends }
}

/// Diagrams whose chords are all smoothed by the orientation-coherent rule.
pub trait Surgery {
    fn smoothing_graph(&self) -> SmoothingGraph;

    /// Number of components after surgery along every chord.
    fn beta(&self) -> usize {
        self.smoothing_graph().components()
    }
}

impl Surgery for DoubleChordDiagram {
    fn smoothing_graph(&self) -> SmoothingGraph {
        build(&self.circles(), true, |_| Band::Coherent)
    }
}

impl Surgery for DoubleLinearDiagram {
    fn smoothing_graph(&self) -> SmoothingGraph {
        build(&self.lines(), false, |_| Band::Coherent)
    }
}

/// Surgery on a framed diagram: framing-0 chords get untwisted bands,
/// framing-1 chords half-twisted ones.
pub fn framed_smoothing_graph(d: &FramedChordDiagram) -> SmoothingGraph {
    build(&[d.word()], true, |c| match d.framing()[c] {
        Framing::Zero => Band::Coherent,
        Framing::One => Band::HalfTwisted,
    })
}

pub fn beta_framed(d: &FramedChordDiagram) -> usize {
    framed_smoothing_graph(d).components()
}

/// β of the diagram behind a canonical key (framed keys use [`beta_framed`]).
pub fn beta_of_key(key: &crate::diagrams::CanonicalKey) -> Result<usize> {
    match key.kind() {
        Kind::Double => Ok(key.to_double().unwrap().beta()),
        Kind::DoubleLinear => Ok(key.to_double_linear().unwrap().beta()),
        Kind::Framed => Ok(beta_framed(&key.to_framed().unwrap())),
        Kind::Linear => Err(Error::UnsupportedKind(Kind::Linear)),
    }
}

/// The weight system `Σ coefficient · β` on double and double-linear
/// combinations.
pub fn weight(u: &ModuleElement) -> Result<i64> {
    if !u.kind().is_double() {
        return Err(Error::UnsupportedKind(u.kind()));
    }
    Ok(u.terms().map(|(k, c)| c * beta_of_key(k).unwrap() as i64).sum())
}
