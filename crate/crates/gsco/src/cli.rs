use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use gsco_core::{
    bounded_closure_pair, bounded_closure_u, bounded_gs, bounded_splicing, cross_nfa, determinize_over,
    equivalent_with, gsco_star_pair_report, saturate_report, BridgeReport, ClosureConfig, Equivalence, FiniteLanguage,
    Limits, Nfa, OverlapSet, Word,
};

use crate::error::{Error, ParseError};
use crate::format::{
    is_empty_rule, parse_rule_list, read_automaton, read_rules, read_words, write_automaton, write_words, RuleSet,
};
use crate::regex::{parse_regex, regex_to_nfa};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_DIFFER: i32 = 5;

/// Operand specifier: `auto:FILE.aut`, `re:EXPR` or `words:FILE.words`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operand {
    Automaton(PathBuf),
    Regex(String),
    Words(PathBuf),
}

impl FromStr for Operand {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            Some(("auto", path)) => Ok(Operand::Automaton(path.into())),
            Some(("re", expr)) => Ok(Operand::Regex(expr.to_owned())),
            Some(("words", path)) => Ok(Operand::Words(path.into())),
            _ => Err(format!("expected auto:FILE, re:EXPR or words:FILE, got '{s}'")),
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_owned(), source })
}

impl Operand {
    pub fn load(&self) -> Result<Nfa, Error> {
        match self {
            Operand::Automaton(path) => {
                read_automaton(&read_file(path)?).map_err(|e| Error::parse(path.display().to_string(), e))
            }
            Operand::Regex(expr) => {
                let r = parse_regex(expr).map_err(|e| Error::parse(format!("regex '{expr}'"), e))?;
                Ok(regex_to_nfa(&r))
            }
            Operand::Words(_) => Ok(Nfa::from_words(&self.load_finite(&Limits::default())?)),
        }
    }

    /// The operand's language as a word list; automata and regexes must
    /// denote finite languages.
    pub fn load_finite(&self, limits: &Limits) -> Result<FiniteLanguage, Error> {
        if let Operand::Words(path) = self {
            return read_words(&read_file(path)?).map_err(|e| Error::parse(path.display().to_string(), e));
        }
        let m = self.load()?;
        let dfa = determinize_over(&m, m.alphabet(), limits)?.minimize();
        if !dfa.is_finite() {
            return Err(Error::Semantic(format!("{} denotes an infinite language", self.describe())));
        }
        Ok(m.enumerate_with(dfa.live_state_count(), limits)?)
    }

    fn describe(&self) -> String {
        match self {
            Operand::Automaton(p) => format!("auto:{}", p.display()),
            Operand::Regex(e) => format!("re:{e}"),
            Operand::Words(p) => format!("words:{}", p.display()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "gsco", version, about = "Generalized sequential crossover and splicing on finite automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cap on subset states created by determinization.
    #[arg(long, global = true, value_name = "N")]
    max_states: Option<usize>,
    /// Cap on words produced by enumeration and bounded closures.
    #[arg(long, global = true, value_name = "N")]
    max_words: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One crossover step between two languages.
    Cross(Binary),
    /// Crossover closure of one language.
    Closure(Unary),
    /// Crossover of the two closures, with the operands included by default.
    StarPair(Binary),
    /// Generalized splicing with rules a#$a# for an explicit symbol set.
    Splice(Binary),
    /// Test whether a word is accepted.
    Member {
        operand: Operand,
        /// Word as a string of single-character symbols, tokens separated
        /// by spaces, or `@eps`.
        word: String,
    },
    /// Print all accepted words up to a length, in length-lex order.
    Enum {
        operand: Operand,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
    /// Decide language equivalence; exit 5 with a witness when different.
    Eqv { left: Operand, right: Operand },
    /// Write the minimal automaton.
    Min {
        operand: Operand,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Bounded word-level reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Closure of one finite language.
    Closure {
        operand: Operand,
        #[command(flatten)]
        options: OracleOptions,
    },
    /// Pair closure: the operands and crossovers of their closures.
    Pair {
        left: Operand,
        right: Operand,
        #[command(flatten)]
        options: OracleOptions,
    },
    /// Generalized splicing; rules may be arbitrary a#b$c#d.
    Gs {
        left: Operand,
        right: Operand,
        #[command(flatten)]
        options: OracleOptions,
    },
}

#[derive(Args, Debug)]
struct Rules {
    /// Overlap symbols as a comma-separated list, or `all`.
    #[arg(long, value_name = "LIST", conflicts_with = "rule_file")]
    rules: Option<String>,
    /// File with one rule per line.
    #[arg(long, value_name = "FILE")]
    rule_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Output {
    /// Print the accepted words up to this length instead of the automaton.
    #[arg(long, value_name = "N")]
    max_len: Option<usize>,
    /// Print the bridge report to stderr.
    #[arg(long)]
    report: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Minimize before writing.
    #[arg(long)]
    minimize: bool,
}

#[derive(Args, Debug)]
struct Unary {
    operand: Operand,
    #[command(flatten)]
    rules: Rules,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct Binary {
    left: Operand,
    right: Operand,
    #[command(flatten)]
    rules: Rules,
    #[command(flatten)]
    output: Output,
    /// Add the operand languages to the result (default for star-pair).
    #[arg(long, overrides_with = "no_include_base")]
    include_base: bool,
    /// Leave the operand languages out (default for splice).
    #[arg(long, overrides_with = "include_base")]
    no_include_base: bool,
}

#[derive(Args, Debug)]
struct OracleOptions {
    #[command(flatten)]
    rules: Rules,
    #[arg(long, value_name = "N")]
    max_len: usize,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

impl Rules {
    fn load(&self) -> Result<RuleSet, CliError> {
        match (&self.rules, &self.rule_file) {
            (Some(list), None) => parse_rule_list(list).map_err(|e| Error::parse("--rules", e).into()),
            (None, Some(path)) => {
                let text = read_file(path)?;
                let rules = read_rules(&text).map_err(|e| Error::parse(path.display().to_string(), e))?;
                Ok(RuleSet::Rules(rules))
            }
            _ => Err(CliError::Usage("one of --rules or --rule-file is required".into())),
        }
    }

    fn overlap(&self) -> Result<OverlapSet, CliError> {
        self.load()?.overlap().map_err(|m| Error::Semantic(m).into())
    }
}

enum CliError {
    Usage(String),
    Run(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Run(e)
    }
}

impl From<gsco_core::Error> for CliError {
    fn from(e: gsco_core::Error) -> Self {
        CliError::Run(e.into())
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io { .. } | Error::Parse { .. } => EXIT_PARSE,
        Error::Core(core) if core.is_resource_cap() => EXIT_RESOURCE,
        Error::Core(_) | Error::Semantic(_) => EXIT_SEMANTIC,
    }
}

struct Context<'a> {
    limits: Limits,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Context<'_> {
    fn emit(&mut self, text: &str, out: Option<&Path>) -> Result<(), Error> {
        match out {
            Some(path) => fs::write(path, text).map_err(|source| Error::Io { path: path.to_owned(), source }),
            None => {
                self.stdout.write_all(text.as_bytes()).map_err(|source| Error::Io { path: "<stdout>".into(), source })
            }
        }
    }

    fn minimal(&self, m: &Nfa) -> Result<Nfa, Error> {
        Ok(determinize_over(m, m.alphabet(), &self.limits)?.minimize().to_nfa().trim())
    }

    fn write_result(&mut self, m: Nfa, reports: &[BridgeReport], output: &Output) -> Result<(), Error> {
        if output.report {
            for r in reports {
                writeln!(self.stderr, "{r}").ok();
            }
        }
        let m = if output.minimize { self.minimal(&m)? } else { m };
        let text = match output.max_len {
            Some(n) => write_words(&m.enumerate_with(n, &self.limits)?),
            None => write_automaton(&m),
        };
        self.emit(&text, output.out.as_deref())
    }

    fn bounded(&self, max_len: usize, operands: &[&FiniteLanguage]) -> ClosureConfig {
        // exact: closure words of length n only need intermediates up to
        // n plus the longest operand word
        let longest = operands.iter().map(|l| l.max_word_len()).max().unwrap_or(0);
        ClosureConfig::new(max_len).with_cap(max_len + longest)
    }

    fn check_words(&self, l: &FiniteLanguage) -> Result<(), Error> {
        if l.len() > self.limits.max_words {
            return Err(gsco_core::Error::WordCapExceeded { cap: self.limits.max_words }.into());
        }
        Ok(())
    }

    fn execute(&mut self, command: Command) -> Result<i32, CliError> {
        match command {
            Command::Cross(b) => {
                let overlap = b.rules.overlap()?;
                let (m1, m2) = (b.left.load()?, b.right.load()?);
                let (m, report) = cross_nfa(&m1, &m2, &overlap);
                let m = if b.include_base { m.union(&m1).union(&m2) } else { m };
                self.write_result(m, &[report], &b.output)?;
            }
            Command::Closure(u) => {
                let overlap = u.rules.overlap()?;
                let (m, report) = saturate_report(&u.operand.load()?, &overlap);
                self.write_result(m, &[report], &u.output)?;
            }
            Command::StarPair(b) => self.star_pair(b, true)?,
            Command::Splice(b) => {
                let overlap = b.rules.overlap()?;
                if overlap.explicit().is_err() {
                    return Err(Error::Semantic("splice needs an explicit rule set, not 'all'".into()).into());
                }
                self.star_pair(b, false)?;
            }
            Command::Member { operand, word } => {
                let w: Word = word
                    .parse()
                    .map_err(|e: gsco_core::Error| Error::parse("word", ParseError::new(1, 1, e.to_string())))?;
                writeln!(self.stdout, "{}", operand.load()?.member(&w)).ok();
            }
            Command::Enum { operand, max_len } => {
                let words = operand.load()?.enumerate_with(max_len, &self.limits)?;
                self.emit(&write_words(&words), None)?;
            }
            Command::Eqv { left, right } => {
                return match equivalent_with(&left.load()?, &right.load()?, &self.limits)? {
                    Equivalence::Equal => {
                        writeln!(self.stdout, "EQUIVALENT").ok();
                        Ok(EXIT_OK)
                    }
                    Equivalence::Differ(w) => {
                        writeln!(self.stdout, "DIFFER {w}").ok();
                        Ok(EXIT_DIFFER)
                    }
                };
            }
            Command::Min { operand, out } => {
                let m = self.minimal(&operand.load()?)?;
                self.emit(&write_automaton(&m), out.as_deref())?;
            }
            Command::Oracle(oracle) => self.oracle(oracle)?,
        }
        Ok(EXIT_OK)
    }

    fn star_pair(&mut self, b: Binary, default_base: bool) -> Result<(), CliError> {
        let overlap = b.rules.overlap()?;
        let include_base = if b.include_base {
            true
        } else if b.no_include_base {
            false
        } else {
            default_base
        };
        let (m, reports) = gsco_star_pair_report(&b.left.load()?, &b.right.load()?, &overlap, include_base);
        self.write_result(m, &reports, &b.output)?;
        Ok(())
    }

    fn oracle(&mut self, command: OracleCommand) -> Result<(), CliError> {
        let limits = self.limits;
        let (words, options) = match command {
            OracleCommand::Closure { operand, options } => {
                let overlap = options.rules.overlap()?;
                let l = operand.load_finite(&limits)?;
                let cfg = self.bounded(options.max_len, &[&l]);
                (bounded_closure_u(&l, &overlap, &cfg)?, options)
            }
            OracleCommand::Pair { left, right, options } => {
                let overlap = options.rules.overlap()?;
                let (l1, l2) = (left.load_finite(&limits)?, right.load_finite(&limits)?);
                let cfg = self.bounded(options.max_len, &[&l1, &l2]);
                (bounded_closure_pair(&l1, &l2, &overlap, &cfg)?, options)
            }
            OracleCommand::Gs { left, right, options } => {
                let RuleSet::Rules(rules) = options.rules.load()? else {
                    return Err(Error::Semantic("oracle gs needs an explicit rule set, not 'all'".into()).into());
                };
                if let Some(rule) = rules.iter().find(|r| is_empty_rule(r)) {
                    return Err(Error::Semantic(format!("rule '{rule}' has an empty overlap")).into());
                }
                let (l1, l2) = (left.load_finite(&limits)?, right.load_finite(&limits)?);
                let cfg = self.bounded(options.max_len, &[&l1, &l2]);
                let words = match RuleSet::Rules(rules.clone()).overlap() {
                    Ok(overlap) => bounded_gs(&l1, &l2, &overlap, &cfg)?,
                    Err(_) => bounded_splicing(&l1, &l2, &rules, &cfg)?,
                };
                (words, options)
            }
        };
        self.check_words(&words)?;
        self.emit(&write_words(&words), options.out.as_deref())?;
        Ok(())
    }
}

/// Runs one invocation (`args` includes the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    write!(stdout, "{e}").ok();
                    EXIT_OK
                }
                _ => {
                    write!(stderr, "{}", e.render()).ok();
                    EXIT_USAGE
                }
            };
        }
    };
    let defaults = Limits::default();
    let limits = Limits {
        max_words: cli.max_words.unwrap_or(defaults.max_words),
        max_dfa_states: cli.max_states.unwrap_or(defaults.max_dfa_states),
    };
    let mut ctx = Context { limits, stdout, stderr };
    match ctx.execute(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            writeln!(ctx.stderr, "error: {message}").ok();
            EXIT_USAGE
        }
        Err(CliError::Run(e)) => {
            writeln!(ctx.stderr, "error: {e}").ok();
            exit_code(&e)
        }
    }
}
