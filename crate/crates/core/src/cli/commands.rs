use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{
    generate_2t_pairs, generate_4t_with, max_degree, quotient_equal_over, FramedMove, QuotientAnswer,
    RelationSpan, Ring,
};
use crate::diagrams::{closure, coproduct, enumerate, Diagram, Kind};
use crate::error::Error;
use crate::parity::{psi, psi_l, psi_l_module, psi_module};
use crate::surgery::{beta_framed, beta_of_key, weight, Surgery};
use crate::sums::{
    connected_sum_dlinear, connected_sum_framed, connected_sum_linear, search_counterexamples, CutPoint,
    Witness,
};

use super::text::{format_diagram, format_element, format_key, format_parsed, parse, parse_diagram, Parsed};

#[derive(Parser, Debug)]
#[command(name = "chordcalc", version, about = "Chord diagrams modulo 4T relations")]
struct Cli {
    /// Also write the output to this file.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Framed,
    Double,
    Linear,
    Dlinear,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Framed => Kind::Framed,
            KindArg::Double => Kind::Double,
            KindArg::Linear => Kind::Linear,
            KindArg::Dlinear => Kind::DoubleLinear,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form of a diagram or module element.
    Canon {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Components after surgery (double kinds; framed diagrams use twisted bands).
    Beta {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// Parity image of a framed diagram or element.
    Psi {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Parity image of a framed linear diagram or element.
    Psil {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// The surgery weight of a double or double-linear element.
    Weight {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Connected sum; cut indices name the arc after that endpoint of the word as typed.
    Consum {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long, default_value_t = 0)]
        cut1: usize,
        #[arg(long, default_value_t = 0)]
        cut2: usize,
    },
    /// Close a framed linear diagram into a chord diagram.
    Closure {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// Coproduct of a framed chord diagram, one pair per line.
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// Sweep every 4T generator of one kind and degree.
    #[command(name = "check-4t")]
    Check4t {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        degree: usize,
        /// Keep framings fixed when passing a framing-1 chord.
        #[arg(long)]
        rigid: bool,
    },
    /// Equality modulo 4T relations.
    #[command(name = "quotient-eq")]
    QuotientEq {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        /// Decide over the rationals instead of the integers.
        #[arg(long)]
        rational: bool,
    },
    /// All diagrams of one kind and chord count.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        degree: usize,
    },
    /// Search for connected sums separated by w∘ψ.
    #[command(name = "find-counterexample")]
    FindCounterexample {
        #[arg(long)]
        max_chords: usize,
        /// Report every witness, not just the first.
        #[arg(long)]
        all: bool,
    },
}

/// Result of one invocation: exit code and the text it prints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { code: 0, output }
    }

    fn no(output: String) -> Self {
        Outcome { code: 1, output }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { code: 2, output: format!("error: {message}\n") }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(e)
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, output: e.to_string() };
        }
    };
    let outcome = execute(cli.command).unwrap_or_else(Outcome::from);
    if let Some(path) = cli.out {
        if let Err(e) = std::fs::write(&path, &outcome.output) {
            return Outcome::usage(format!("cannot write {}: {e}", path.display()));
        }
    }
    outcome
}

fn expect_kind(p: &Parsed, kinds: &[Kind]) -> Result<(), Error> {
    if kinds.contains(&p.kind()) {
        Ok(())
    } else {
        Err(Error::UnsupportedKind(p.kind()))
    }
}

fn execute(command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Canon { input } => Outcome::ok(line(format_parsed(&parse(&input)?))),
        Command::Beta { diagram } => {
            let b = match parse_diagram(&diagram)? {
                Diagram::Double(d) => d.beta(),
                Diagram::DoubleLinear(d) => d.beta(),
                Diagram::Framed(d) => beta_framed(&d),
                Diagram::Linear(_) => return Err(Error::UnsupportedKind(Kind::Linear)),
            };
            Outcome::ok(line(b))
        }
        Command::Psi { input } => {
            let p = parse(&input)?;
            expect_kind(&p, &[Kind::Framed])?;
            let image = match p {
                Parsed::Diagram(Diagram::Framed(d)) => psi(&d),
                other => psi_module(&other.into_element()),
            };
            Outcome::ok(line(format_element(&image)))
        }
        Command::Psil { input } => {
            let p = parse(&input)?;
            expect_kind(&p, &[Kind::Linear])?;
            let image = match p {
                Parsed::Diagram(Diagram::Linear(g)) => psi_l(&g),
                other => psi_l_module(&other.into_element()),
            };
            Outcome::ok(line(format_element(&image)))
        }
        Command::Weight { input } => {
            let u = parse(&input)?.into_element();
            Outcome::ok(line(weight(&u)?))
        }
        Command::Consum { left, right, cut1, cut2 } => {
            let text = match (parse_diagram(&left)?, parse_diagram(&right)?) {
                (Diagram::Framed(a), Diagram::Framed(b)) => {
                    format_key(&connected_sum_framed(&a, CutPoint::new(cut1), &b, CutPoint::new(cut2))?.key())
                }
                (Diagram::Linear(a), Diagram::Linear(b)) => {
                    format_diagram(&Diagram::Linear(connected_sum_linear(&a, &b)))
                }
                (Diagram::DoubleLinear(a), Diagram::DoubleLinear(b)) => {
                    format_diagram(&Diagram::DoubleLinear(connected_sum_dlinear(&a, &b)))
                }
                (a, b) if a.kind() != b.kind() => {
                    return Err(Error::KindMismatch { expected: a.kind(), found: b.kind() })
                }
                (a, _) => return Err(Error::UnsupportedKind(a.kind())),
            };
            Outcome::ok(line(text))
        }
        Command::Closure { diagram } => match parse_diagram(&diagram)? {
            Diagram::Linear(g) => Outcome::ok(line(format_key(&closure(&g).key()))),
            other => return Err(Error::UnsupportedKind(other.kind())),
        },
        Command::Coproduct { diagram } => match parse_diagram(&diagram)? {
            Diagram::Framed(d) => {
                let mut out = String::new();
                for ((l, r), c) in coproduct(&d) {
                    writeln!(out, "{c} [{}] [{}]", format_key(&l), format_key(&r)).unwrap();
                }
                Outcome::ok(out)
            }
            other => return Err(Error::UnsupportedKind(other.kind())),
        },
        Command::Check4t { kind, degree, rigid } => {
            let rule = if rigid { FramedMove::Rigid } else { FramedMove::TwistedBand };
            check_4t(kind.into(), degree, rule)
        }
        Command::QuotientEq { left, right, rational } => {
            let u = parse(&left)?.into_element();
            let v = parse(&right)?.into_element();
            if u.kind() != v.kind() {
                return Err(Error::KindMismatch { expected: u.kind(), found: v.kind() });
            }
            let ring = if rational { Ring::Rationals } else { Ring::Integers };
            match quotient_equal_over(&u, &v, ring) {
                QuotientAnswer::Equal => Outcome::ok(line("true")),
                QuotientAnswer::NotEqual => Outcome::no(line("false")),
                QuotientAnswer::Undecided { degree } => {
                    Outcome::no(line(format!("undecided: degree {degree} too large")))
                }
            }
        }
        Command::Enumerate { kind, degree } => {
            let mut out = String::new();
            for k in enumerate(kind.into(), degree) {
                writeln!(out, "{}", format_key(&k)).unwrap();
            }
            Outcome::ok(out)
        }
        Command::FindCounterexample { max_chords, all } => {
            let found = search_counterexamples(max_chords);
            if found.is_empty() {
                return Ok(Outcome::no(line(format!("none up to {max_chords} chords"))));
            }
            let shown = if all { &found[..] } else { &found[..1] };
            let mut out = String::new();
            for (i, w) in shown.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&format_witness(w));
            }
            if all {
                writeln!(out, "\nwitnesses: {}", found.len()).unwrap();
            }
            Outcome::ok(out)
        }
    })
}

fn format_witness(w: &Witness) -> String {
    let mut out = String::new();
    let d = |x: &crate::diagrams::FramedChordDiagram| format_key(&x.key());
    writeln!(out, "D1: {}", d(&w.d1)).unwrap();
    writeln!(out, "D2: {}", d(&w.d2)).unwrap();
    for s in [&w.first, &w.second] {
        writeln!(out, "cuts ({}, {}): {}", s.cuts.0.arc, s.cuts.1.arc, d(&s.sum)).unwrap();
        writeln!(out, "  psi = {}", format_element(&s.psi)).unwrap();
        writeln!(out, "  w(psi) = {}", s.weight).unwrap();
    }
    let values: Vec<String> = w.weights.iter().map(i64::to_string).collect();
    writeln!(out, "w values: {}", values.join(" ")).unwrap();
    let eq = match crate::algebra::quotient_equal(&w.first.psi, &w.second.psi) {
        QuotientAnswer::Equal => "true".to_string(),
        QuotientAnswer::NotEqual => "false".to_string(),
        QuotientAnswer::Undecided { degree } => format!("undecided (degree {degree})"),
    };
    writeln!(out, "quotient-equal: {eq}").unwrap();
    out
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn check_4t(kind: Kind, degree: usize, rule: FramedMove) -> Outcome {
    let gens = generate_4t_with(kind, degree, rule);
    let mut out = String::new();
    writeln!(out, "kind: {kind}, degree: {degree}").unwrap();
    writeln!(out, "generators: {} ({} nonzero)", gens.len(), gens.iter().filter(|g| !g.is_zero()).count()).unwrap();
    let ok = if kind.is_double() {
        let w_fail = gens.iter().filter(|g| weight(&g.element).unwrap() != 0).count();
        let pairs = generate_2t_pairs(kind, degree).unwrap();
        let t_fail = pairs
            .iter()
            .filter(|p| beta_of_key(&p.left).unwrap() != beta_of_key(&p.right).unwrap())
            .count();
        writeln!(out, "2T pairs: {}", pairs.len()).unwrap();
        writeln!(out, "w-kill: {}, 2T: {}", verdict(w_fail == 0), verdict(t_fail == 0)).unwrap();
        w_fail == 0 && t_fail == 0
    } else {
        let image = |g: &crate::algebra::RelationGenerator| {
            if kind == Kind::Framed {
                psi_module(&g.element)
            } else {
                psi_l_module(&g.element)
            }
        };
        let images: Vec<_> = gens.iter().map(image).collect();
        let w_fail = images.iter().filter(|u| weight(u).unwrap() != 0).count();
        let target = if kind == Kind::Framed { Kind::Double } else { Kind::DoubleLinear };
        let span_ok = if degree > max_degree(target) {
            writeln!(out, "psi-span: skipped (degree above {})", max_degree(target)).unwrap();
            true
        } else {
            let span = RelationSpan::new(target, degree);
            let fails = match &span {
                Some(s) => images.iter().filter(|u| !u.is_zero() && !s.contains(u, Ring::Integers)).count(),
                None => images.iter().filter(|u| !u.is_zero()).count(),
            };
            writeln!(out, "psi-span: {} ({fails} outside)", verdict(fails == 0)).unwrap();
            fails == 0
        };
        writeln!(out, "w-psi-kill: {} ({w_fail} failures)", verdict(w_fail == 0)).unwrap();
        w_fail == 0 && span_ok
    };
    if ok {
        Outcome::ok(out)
    } else {
        Outcome::no(out)
    }
}
