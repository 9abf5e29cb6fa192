//! Text syntax for diagrams and module elements.
//!
//! ```text
//! token    := LABEL FRAMING?        LABEL = [A-Za-z][A-Za-z0-9]*, FRAMING = 0|1
//! cdword   := token*
//! diagram  := "cd:" cdword | "lcd:" cdword | "dcd:" cdword "|" cdword | "dlcd:" cdword "|" cdword
//! melem    := sterm ("+" sterm)*    sterm := INT "[" diagram "]"
//! ```
//!
//! In framed kinds (`cd`, `lcd`) the last character of every token must be
//! its framing digit; in double kinds a trailing 0/1 is rejected. Formatting
//! names chords `A`..`Z`, `AA`, `AB`, ... by first occurrence, so labels
//! never end in a digit.

use std::collections::HashMap;

use crate::algebra::ModuleElement;
use crate::diagrams::{
    CanonicalKey, Diagram, DoubleChordDiagram, DoubleLinearDiagram, FramedChordDiagram,
    FramedLinearDiagram, Framing, Kind,
};
use crate::error::{Error, Result};

pub fn prefix(kind: Kind) -> &'static str {
    match kind {
        Kind::Framed => "cd",
        Kind::Double => "dcd",
        Kind::Linear => "lcd",
        Kind::DoubleLinear => "dlcd",
    }
}

pub fn chord_label(mut i: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'A' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

fn format_word(word: &[usize], framing: Option<&[Framing]>) -> String {
    word.iter()
        .map(|&c| match framing {
            Some(f) => format!("{}{}", chord_label(c), f[c].bit()),
            None => chord_label(c),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_prefixed(prefix: &str, body: &str) -> String {
    if body.is_empty() {
        format!("{prefix}:")
    } else {
        format!("{prefix}: {body}")
    }
}

pub fn format_key(key: &CanonicalKey) -> String {
    let framing = key.framing();
    let first = format_word(&key.first_word(), framing.as_deref());
    let body = if key.kind().is_double() {
        let second = format_word(&key.second_word(), None);
        format!("{first} | {second}").trim().to_string()
    } else {
        first
    };
    join_prefixed(prefix(key.kind()), &body)
}

/// The diagram as stored (not canonicalized), relabeled A, B, ...
pub fn format_diagram(d: &Diagram) -> String {
    let (kind, first, second, framing) = match d {
        Diagram::Framed(d) => (Kind::Framed, d.word().to_vec(), vec![], Some(d.framing().to_vec())),
        Diagram::Linear(d) => (Kind::Linear, d.word().to_vec(), vec![], Some(d.framing().to_vec())),
        Diagram::Double(d) => (Kind::Double, d.circle(0).to_vec(), d.circle(1).to_vec(), None),
        Diagram::DoubleLinear(d) => (Kind::DoubleLinear, d.line(0).to_vec(), d.line(1).to_vec(), None),
    };
    // relabel by first occurrence so output labels are stable
    let mut map = HashMap::new();
    let mut relabel = |w: &[usize]| -> Vec<usize> {
        w.iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect()
    };
    let a = relabel(&first);
    let b = relabel(&second);
    let framing = framing.map(|f| {
        let mut out = vec![Framing::Zero; f.len()];
        for (old, new) in &map {
            out[*new] = f[*old];
        }
        out
    });
    let first = format_word(&a, framing.as_deref());
    let body = if kind.is_double() {
        format!("{first} | {}", format_word(&b, None)).trim().to_string()
    } else {
        first
    };
    join_prefixed(prefix(kind), &body)
}

/// Terms in key order; the zero element keeps its kind as `0 [<free loop>]`.
pub fn format_element(u: &ModuleElement) -> String {
    if u.is_zero() {
        let empty = match u.kind() {
            Kind::Framed => Diagram::Framed(FramedChordDiagram::free_loop()),
            Kind::Linear => Diagram::Linear(FramedLinearDiagram::empty()),
            Kind::Double => Diagram::Double(DoubleChordDiagram::empty()),
            Kind::DoubleLinear => Diagram::DoubleLinear(DoubleLinearDiagram::empty()),
        };
        return format!("0 [{}]", format_diagram(&empty));
    }
    u.terms()
        .map(|(k, c)| format!("{c} [{}]", format_key(k)))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(i64),
    Colon,
    Bar,
    Open,
    Close,
    Plus,
}

#[derive(Clone, Debug)]
struct Lexeme {
    tok: Tok,
    column: usize,
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { column, message: message.into() })
}

fn lex(text: &str) -> Result<Vec<Lexeme>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let single = match c {
            ':' => Some(Tok::Colon),
            '|' => Some(Tok::Bar),
            '[' => Some(Tok::Open),
            ']' => Some(Tok::Close),
            '+' => Some(Tok::Plus),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Lexeme { tok, column });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Lexeme { tok: Tok::Word(chars[start..i].iter().collect()), column });
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            match s.parse() {
                Ok(v) => out.push(Lexeme { tok: Tok::Int(v), column }),
                Err(_) => return err(column, format!("integer `{s}` out of range")),
            }
        } else {
            return err(column, format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser {
    lexemes: Vec<Lexeme>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.lexemes.get(self.pos).map(|l| &l.tok)
    }

    fn column(&self) -> usize {
        self.lexemes.get(self.pos).map_or(self.end_column, |l| l.column)
    }

    fn next(&mut self) -> Option<Lexeme> {
        let l = self.lexemes.get(self.pos).cloned();
        self.pos += 1;
        l
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let column = self.column();
        match self.next() {
            Some(l) if l.tok == tok => Ok(()),
            _ => err(column, format!("expected {what}")),
        }
    }

    fn diagram(&mut self) -> Result<Diagram> {
        let column = self.column();
        let kind = match self.next().map(|l| l.tok) {
            Some(Tok::Word(w)) => match w.as_str() {
                "cd" => Kind::Framed,
                "lcd" => Kind::Linear,
                "dcd" => Kind::Double,
                "dlcd" => Kind::DoubleLinear,
                other => return err(column, format!("unknown diagram prefix `{other}`")),
            },
            _ => return err(column, "expected a diagram prefix (cd:, lcd:, dcd:, dlcd:)"),
        };
        self.expect(Tok::Colon, "`:` after the diagram prefix")?;
        let mut words: Vec<Vec<(String, Option<Framing>, usize)>> = vec![Vec::new()];
        while let Some(tok) = self.peek().cloned() {
            let column = self.column();
            match tok {
                Tok::Word(w) => {
                    self.pos += 1;
                    words.last_mut().unwrap().push(split_token(&w, kind, column)?);
                }
                Tok::Bar => {
                    if !kind.is_double() || words.len() == 2 {
                        return err(column, "unexpected `|`");
                    }
                    self.pos += 1;
                    words.push(Vec::new());
                }
                Tok::Close | Tok::Plus => break,
                Tok::Int(_) | Tok::Colon | Tok::Open => return err(column, "unexpected token in a diagram"),
            }
        }
        if kind.is_double() && words.len() != 2 {
            return err(self.column(), "expected `|` separating the two circles/lines");
        }
        build(kind, &words)
    }

    fn element(&mut self) -> Result<ModuleElement> {
        let mut terms = Vec::new();
        loop {
            let column = self.column();
            let coefficient = match self.next().map(|l| l.tok) {
                Some(Tok::Int(c)) => c,
                _ => return err(column, "expected an integer coefficient"),
            };
            self.expect(Tok::Open, "`[`")?;
            let column = self.column();
            let d = self.diagram()?;
            self.expect(Tok::Close, "`]`")?;
            terms.push((d.key(), coefficient, column));
            if self.peek() == Some(&Tok::Plus) {
                self.pos += 1;
            } else {
                break;
            }
        }
        let kind = terms[0].0.kind();
        let mut u = ModuleElement::zero(kind);
        for (k, c, column) in terms {
            if k.kind() != kind {
                return err(column, format!("{} diagram in a {} combination", k.kind(), kind));
            }
            u.add_term(k, c);
        }
        Ok(u)
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.lexemes.len() {
            return err(self.column(), "trailing input");
        }
        Ok(())
    }
}

fn split_token(w: &str, kind: Kind, column: usize) -> Result<(String, Option<Framing>, usize)> {
    let last = w.as_bytes()[w.len() - 1];
    let digit = (w.len() >= 2 && (last == b'0' || last == b'1')).then(|| last - b'0');
    match (kind.is_framed(), digit) {
        (true, Some(d)) => Ok((w[..w.len() - 1].to_string(), Framing::from_bit(d), column)),
        (true, None) => err(column, format!("token `{w}` lacks a framing digit (0 or 1)")),
        (false, Some(_)) => err(column, format!("token `{w}` carries a framing digit, not allowed in double diagrams")),
        (false, None) => Ok((w.to_string(), None, column)),
    }
}

fn build(kind: Kind, words: &[Vec<(String, Option<Framing>, usize)>]) -> Result<Diagram> {
    let mut seen: HashMap<&str, (usize, Option<Framing>, usize)> = HashMap::new();
    for (label, framing, column) in words.iter().flatten() {
        let entry = seen.entry(label).or_insert((0, *framing, *column));
        entry.0 += 1;
        if entry.0 > 2 {
            return err(*column, format!("chord `{label}` occurs more than twice"));
        }
        if entry.1 != *framing {
            return err(*column, format!("chord `{label}` has two different framings"));
        }
    }
    if let Some((label, (_, _, column))) = seen.iter().filter(|(_, v)| v.0 != 2).min_by_key(|(_, v)| v.2) {
        return err(*column, format!("chord `{label}` occurs only once"));
    }
    let tokens = |w: &[(String, Option<Framing>, usize)]| -> Vec<(String, Framing)> {
        w.iter().map(|(l, f, _)| (l.clone(), f.unwrap_or(Framing::Zero))).collect()
    };
    let labels = |w: &[(String, Option<Framing>, usize)]| -> Vec<String> { w.iter().map(|t| t.0.clone()).collect() };
    Ok(match kind {
        Kind::Framed => Diagram::Framed(FramedChordDiagram::from_labels(&tokens(&words[0]))?),
        Kind::Linear => Diagram::Linear(FramedLinearDiagram::from_labels(&tokens(&words[0]))?),
        Kind::Double => Diagram::Double(DoubleChordDiagram::from_labels(&labels(&words[0]), &labels(&words[1]))?),
        Kind::DoubleLinear => {
            Diagram::DoubleLinear(DoubleLinearDiagram::from_labels(&labels(&words[0]), &labels(&words[1]))?)
        }
    })
}

fn parser(text: &str) -> Result<Parser> {
    Ok(Parser { lexemes: lex(text)?, pos: 0, end_column: text.chars().count() + 1 })
}

pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut p = parser(text)?;
    let d = p.diagram()?;
    p.finish()?;
    Ok(d)
}

pub fn parse_element(text: &str) -> Result<ModuleElement> {
    let mut p = parser(text)?;
    let u = p.element()?;
    p.finish()?;
    Ok(u)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Diagram(Diagram),
    Element(ModuleElement),
}

impl Parsed {
    /// A diagram is read as the element `1 · [diagram]`.
    pub fn into_element(self) -> ModuleElement {
        match self {
            Parsed::Diagram(d) => ModuleElement::basis(d.key()),
            Parsed::Element(u) => u,
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Parsed::Diagram(d) => d.kind(),
            Parsed::Element(u) => u.kind(),
        }
    }
}

/// A diagram or a module element, told apart by the first token.
pub fn parse(text: &str) -> Result<Parsed> {
    let p = parser(text)?;
    match p.peek() {
        Some(Tok::Int(_)) => parse_element(text).map(Parsed::Element),
        _ => parse_diagram(text).map(Parsed::Diagram),
    }
}

/// Canonical text of a parsed value.
pub fn format_parsed(p: &Parsed) -> String {
    match p {
        Parsed::Diagram(d) => format_key(&d.key()),
        Parsed::Element(u) => format_element(u),
    }
}
