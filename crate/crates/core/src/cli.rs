//! The `lincoh` command line.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus_il::{check_derivation_il, clean, code, decode, derivable_il, eliminate_cuts, DerivationIL};
use crate::calculus_s::{check_derivation_s, derivable_s, DerivationS};
use crate::gen::{random_derivation_il_bounded, random_term, random_unit_term, TermShape};
use crate::links::{eq_terms, generalize, links_of, render, EqVerdict, LinkSet, RenderFormat};
use crate::syntax::{is_balanced, letters_even, parse_formula, parse_sequent_il, parse_sequent_s, Letter, ParseError};
use crate::terms::{oracle_equal, TermError, TypedTerm, Verdict, DEFAULT_BUDGET};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;

#[derive(Parser, Debug)]
#[command(name = "lincoh", version, about = "Sequent systems, cut elimination and proof equality for multiplicative intuitionistic linear logic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum System {
    S,
    Il,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
    Tikz,
}

impl From<Format> for RenderFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => RenderFormat::Json,
            Format::Dot => RenderFormat::Dot,
            Format::Tikz => RenderFormat::Tikz,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the α-form of a formula.
    Parse { expr: String },
    /// Print the type of a term, or check a derivation file.
    Check {
        input: String,
        /// Treat INPUT as a derivation file (`-` for stdin).
        #[arg(long)]
        derivation: bool,
    },
    /// Search for a cut-free derivation of a sequent.
    Derive {
        sequent: String,
        #[arg(long, value_enum, default_value = "s")]
        system: System,
    },
    /// Eliminate the cuts of an IL derivation file.
    Elim { file: String },
    /// Remove redundant tensor rules and invisible interchanges.
    Clean { file: String },
    /// Print the term coding an IL derivation file.
    Code { file: String },
    /// Print an IL derivation coded by a term.
    Decode { term: String },
    /// Print the links of a term.
    Links {
        term: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide equality of two terms of proper type.
    Eq {
        left: String,
        right: String,
        /// Also run the rewrite-search oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Print the most general term of which TERM is an instance.
    Generalize { term: String },
    /// Render a link set given as JSON.
    Render {
        file: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Check invariants on random terms and derivations.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 20_000)]
        budget: usize,
    },
}

enum Failure {
    Data(String),
    NoInput(String),
}

type Out<'a> = &'a mut dyn Write;

fn caret(text: &str, e: &ParseError) -> String {
    format!("{e}\n  {text}\n  {}^", " ".repeat(e.pos.min(text.len())))
}

fn term_arg(text: &str) -> Result<TypedTerm, Failure> {
    TypedTerm::parse(text).map_err(|e| match e {
        TermError::Parse(p) => Failure::Data(caret(text, &p)),
        TermError::Type(t) => Failure::Data(format!("type error: {t}")),
    })
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut s = String::new();
    if path == "-" {
        stdin.read_to_string(&mut s).map_err(|e| Failure::NoInput(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Failure::NoInput(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn read_il(path: &str, stdin: &mut dyn Read) -> Result<DerivationIL, Failure> {
    let text = read_input(path, stdin)?;
    let d = DerivationIL::from_text(&text).map_err(|e| Failure::Data(e.to_string()))?;
    check_derivation_il(&d).map_err(|e| Failure::Data(e.to_string()))?;
    Ok(d)
}

/// Run the command line with `args` (including the program name) and
/// return the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DATA
        }
        Err(Failure::NoInput(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_NO_INPUT
        }
    }
}

/// `run` on the process arguments and standard streams.
pub fn main_exit_code() -> i32 {
    run(std::env::args_os(), &mut std::io::stdin(), &mut std::io::stdout(), &mut std::io::stderr())
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: Out) -> Result<i32, Failure> {
    let w = |out: Out, s: &str| {
        let _ = writeln!(out, "{s}");
    };
    match cmd {
        Command::Parse { expr } => {
            let f = parse_formula(&expr).map_err(|e| Failure::Data(caret(&expr, &e)))?;
            w(out, &f.alpha().to_string());
        }
        Command::Check { input, derivation: false } => {
            let t = term_arg(&input)?;
            w(out, &t.ty.to_string());
        }
        Command::Check { input, derivation: true } => {
            let text = read_input(&input, stdin)?;
            match DerivationIL::from_text(&text) {
                Ok(d) => {
                    let s = check_derivation_il(&d).map_err(|e| Failure::Data(e.to_string()))?;
                    w(out, &s.to_string());
                }
                Err(il_err) => {
                    let d = DerivationS::from_text(&text).map_err(|_| Failure::Data(il_err.to_string()))?;
                    let s = check_derivation_s(&d).map_err(|e| Failure::Data(e.to_string()))?;
                    w(out, &s.to_string());
                }
            }
        }
        Command::Derive { sequent, system } => {
            let text = match system {
                System::S => {
                    let s = parse_sequent_s(&sequent).map_err(|e| Failure::Data(caret(&sequent, &e)))?;
                    derivable_s(&s).map(|d| d.to_text())
                }
                System::Il => {
                    let s = parse_sequent_il(&sequent).map_err(|e| Failure::Data(caret(&sequent, &e)))?;
                    derivable_il(&s).map(|d| d.to_text())
                }
            };
            match text {
                Some(t) => w(out, t.trim_end()),
                None => {
                    w(out, "not derivable");
                    return Ok(1);
                }
            }
        }
        Command::Elim { file } => {
            let d = read_il(&file, stdin)?;
            w(out, eliminate_cuts(&d).to_text().trim_end());
        }
        Command::Clean { file } => {
            let d = read_il(&file, stdin)?;
            if !d.is_cut_free() {
                return Err(Failure::Data("derivation contains a cut; run `elim` first".into()));
            }
            w(out, clean(&d).to_text().trim_end());
        }
        Command::Code { file } => {
            let d = read_il(&file, stdin)?;
            w(out, &code(&d).term.to_string());
        }
        Command::Decode { term } => {
            let t = term_arg(&term)?;
            w(out, decode(&t).to_text().trim_end());
        }
        Command::Links { term, format } => {
            let t = term_arg(&term)?;
            w(out, render(&links_of(&t), format.into()).trim_end());
        }
        Command::Eq { left, right, oracle, budget } => {
            let (f, g) = (term_arg(&left)?, term_arg(&right)?);
            let v = eq_terms(&f, &g);
            w(out, &format!("{v:?}"));
            if oracle && v != EqVerdict::TypeMismatch {
                let o = oracle_equal(&f, &g, budget).expect("types agree");
                let text = match o {
                    Verdict::Equal { distance } => format!("oracle: Equal (distance {distance})"),
                    Verdict::Unknown { exhausted: true } => "oracle: NotEqual (search space exhausted)".into(),
                    Verdict::Unknown { exhausted: false } => format!("oracle: Unknown (budget {budget})"),
                };
                w(out, &text);
            }
            return Ok(match v {
                EqVerdict::Equal => 0,
                EqVerdict::NotEqual => 1,
                EqVerdict::TypeMismatch => 2,
                EqVerdict::Unsupported => 3,
            });
        }
        Command::Generalize { term } => {
            let t = term_arg(&term)?;
            let (g, sub) = generalize(&t);
            w(out, &g.term.to_string());
            w(out, &g.ty.to_string());
            w(out, &sub.to_string());
        }
        Command::Render { file, format } => {
            let text = read_input(&file, stdin)?;
            let l = LinkSet::from_json(text.trim()).map_err(|e| Failure::Data(e.to_string()))?;
            w(out, render(&l, format.into()).trim_end());
        }
        Command::Fuzz { seed, count, budget } => {
            let report = fuzz(seed, count, budget);
            w(out, report.text.trim_end());
            return Ok(if report.violations == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}

/// Outcome of a fuzz run.
pub struct FuzzReport {
    pub violations: usize,
    pub text: String,
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
        }
    }
}

/// Check the invariants of terms, links and cut elimination on `count`
/// random cases of each kind.
pub fn fuzz(seed: u64, count: usize, budget: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = [Letter::new("p"), Letter::new("q")];
    let mut even = Tally::default();
    let mut matching = Tally::default();
    let mut balanced = Tally::default();
    let mut elim = Tally::default();
    let mut elim_oracle = Tally::default();
    let mut unit = Tally::default();
    let mut unit_oracle = Tally::default();

    for _ in 0..count {
        let size = rng.gen_range(1..=8);
        let t = random_term(&mut rng, &TermShape::new(&["p", "q"], size));
        even.record(letters_even(&t.ty));
        matching.record(links_of(&t).validate().is_ok());
        balanced.record(is_balanced(&generalize(&t).0.ty));

        let cuts = rng.gen_range(1..=3);
        let d = random_derivation_il_bounded(&mut rng, &letters, cuts, 2, 6);
        let e = eliminate_cuts(&d);
        let ok = e.is_cut_free()
            && check_derivation_il(&e).as_ref() == Ok(&d.conclusion)
            && links_of(&code(&e)) == links_of(&code(&d));
        elim.record(ok);
        if code(&d).term.size() <= 10 {
            elim_oracle.record(oracle_equal(&code(&e), &code(&d), budget).is_ok_and(|v| v.is_equal()));
        }

        let unit_size = rng.gen_range(1..=5);
        let u = random_unit_term(&mut rng, unit_size);
        let l = links_of(&u);
        unit.record(l.edges.is_empty() && l.loops == 0);
        if u.term.size() <= 10 {
            let id = TypedTerm::parse("1[I]").unwrap();
            unit_oracle.record(oracle_equal(&u, &id, budget).is_ok_and(|v| v.is_equal()));
        }
    }

    let rows = [
        ("even letter occurrences", &even),
        ("links form a perfect matching", &matching),
        ("generalized type balanced", &balanced),
        ("cut elimination preserves links", &elim),
        ("cut elimination oracle-equal (size <= 10)", &elim_oracle),
        ("I |- I terms have no links", &unit),
        ("I |- I terms oracle-equal to 1[I] (size <= 10)", &unit_oracle),
    ];
    let mut text = format!("fuzz seed={seed} count={count} budget={budget}\n");
    let mut violations = 0;
    for (name, t) in rows {
        violations += t.failed;
        text.push_str(&format!("{name}: {}/{} ok\n", t.checked - t.failed, t.checked));
    }
    text.push_str(&format!("violations: {violations}\n"));
    FuzzReport { violations, text }
}
