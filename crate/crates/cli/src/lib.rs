//! Command-line front end: argument model and command dispatch.
//!
//! Commands write to caller-supplied streams and return the process exit code
//! (0 ok, 1 verification failure, 2 usage or range error), so they can be
//! driven from tests without spawning a process.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use orientseq::analysis::{
    brute_force_s_with_limit, longest_orientable_cycle, verify_orientable_linear,
    BRUTE_FORCE_MAX_OS_LIMIT, BRUTE_FORCE_S_LIMIT,
};
use orientseq::cyclejoin::{build_tree, enumerate_asymmetric_bracelets, parent, parent_verdict};
use orientseq::osgen::{Os2Stream, SequenceStream};
use orientseq::word::{parse_symbols, render_symbols};
use orientseq::{
    lower_bound_l, stubborn_strings, verify_orientable, BraceletClass, CountReport, Error,
    ParentVerdict, Symbol, Word,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Above this many tree nodes `tree` asks for `--allow-slow`.
const TREE_NODE_LIMIT: u128 = 2_000_000;
/// Orders from which `enumerate --stubborn` asks for `--allow-slow`.
const STUBBORN_SLOW_N: usize = 17;

#[derive(Debug, Parser)]
#[command(name = "orientseq", version, about = "Orientable sequences over k symbols")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Contiguous digits (k <= 10 only).
    Digits,
    /// Space-separated decimal symbols.
    Spaced,
    /// A JSON object with the symbol list under "sequence".
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an orientable sequence of order n (n = 2 uses the maximal construction).
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        /// Append the first n-1 symbols so every window reads linearly.
        #[arg(long)]
        acyclic: bool,
        /// Output format; digits for k <= 10, spaced otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that every length-n window occurs at most once in either direction.
    Verify {
        #[arg(long)]
        n: usize,
        /// Alphabet size; inferred from the largest symbol when omitted.
        #[arg(long)]
        k: Option<u32>,
        /// Read the windows linearly instead of cyclically.
        #[arg(long)]
        acyclic: bool,
        /// Read the sequence from this file ("-" for stdin).
        #[arg(long)]
        file: Option<PathBuf>,
        /// The sequence itself; stdin is read when neither this nor --file is given.
        sequence: Option<String>,
    },
    /// Exact length counts and bounds as JSON.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        /// Also count S_k(n) by exhaustive scan.
        #[arg(long)]
        brute: bool,
        /// Also search for the maximum orientable length (tiny instances).
        #[arg(long)]
        max: bool,
        /// Lift the default size guards; the limit then comes from ORIENT_SEQ_MAX_BRUTE.
        #[arg(long)]
        allow_slow: bool,
        #[arg(long, env = "ORIENT_SEQ_MAX_BRUTE", hide_env_values = true)]
        max_brute: Option<u128>,
    },
    /// Print the cycle-joining tree.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        /// Graphviz DOT instead of a plain edge list.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        allow_slow: bool,
    },
    /// Classify a word and report its parent in the tree.
    Classify {
        word: String,
        #[arg(long)]
        k: u32,
    },
    /// List the asymmetric bracelets of length n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        /// Only those none of the four simple parent rules map back into the set.
        #[arg(long)]
        stubborn: bool,
        #[arg(long)]
        allow_slow: bool,
    },
}

/// Failure of a command, mapped to an exit code by [`run`].
#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<u8, Failure>;

/// Calls a generic command with `u8` symbols when they fit and `u16` otherwise.
macro_rules! with_symbol {
    ($k:expr, $f:ident($($arg:expr),*)) => {
        if $k <= u8::MAX_ALPHABET {
            $f::<u8>($($arg),*)
        } else {
            $f::<u16>($($arg),*)
        }
    };
}

/// Runs `cli`, returning the exit code. Diagnostics go to `err`.
pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Generate {
            n,
            k,
            acyclic,
            format,
            output,
        } => match output {
            Some(path) => File::create(&path)
                .map_err(Failure::from)
                .and_then(|f| cmd_generate(n, k, acyclic, format, &mut BufWriter::new(f))),
            None => cmd_generate(n, k, acyclic, format, &mut BufWriter::new(out)),
        },
        Command::Verify {
            n,
            k,
            acyclic,
            file,
            sequence,
        } => read_input(sequence, file, stdin)
            .map_err(Failure::from)
            .and_then(|text| cmd_verify(n, k, acyclic, &text, out)),
        Command::Count {
            n,
            k,
            brute,
            max,
            allow_slow,
            max_brute,
        } => cmd_count(n, k, brute, max, allow_slow, max_brute, out),
        Command::Tree {
            n,
            k,
            dot,
            allow_slow,
        } => with_symbol!(k, cmd_tree(n, k, dot, allow_slow, out)),
        Command::Classify { word, k } => with_symbol!(k, cmd_classify(&word, k, out)),
        Command::Enumerate {
            n,
            k,
            stubborn,
            allow_slow,
        } => with_symbol!(k, cmd_enumerate(n, k, stubborn, allow_slow, out)),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}


fn read_input(
    sequence: Option<String>,
    file: Option<PathBuf>,
    stdin: &mut dyn Read,
) -> io::Result<String> {
    match (sequence, file) {
        (Some(s), _) => Ok(s),
        (None, Some(path)) if path.as_os_str() != "-" => std::fs::read_to_string(path),
        (None, _) => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

struct SymbolWriter<'a> {
    out: &'a mut dyn Write,
    format: Format,
    written: u64,
}

impl SymbolWriter<'_> {
    fn symbol(&mut self, value: u32) -> io::Result<()> {
        let sep = self.written > 0 && self.format != Format::Digits;
        match (self.format, sep) {
            (Format::Digits, _) => write!(self.out, "{value}")?,
            (Format::Spaced, true) => write!(self.out, " {value}")?,
            (Format::Json, true) => write!(self.out, ",{value}")?,
            (_, false) => write!(self.out, "{value}")?,
        }
        self.written += 1;
        Ok(())
    }
}

fn cmd_generate(
    n: usize,
    k: u32,
    acyclic: bool,
    format: Option<Format>,
    out: &mut dyn Write,
) -> CmdResult {
    if n < 2 || k < 3 {
        return Err(Failure::Usage(format!(
            "unsupported range n={n}, k={k}: generate needs n >= 2 and k >= 3"
        )));
    }
    let format = format.unwrap_or(if k <= 10 { Format::Digits } else { Format::Spaced });
    if format == Format::Digits && k > 10 {
        return Err(Failure::Usage("digit format needs k <= 10".into()));
    }
    let symbols: Box<dyn Iterator<Item = u32>> = if k <= u8::MAX_ALPHABET {
        stream::<u8>(n, k)?
    } else {
        stream::<u16>(n, k)?
    };
    if format == Format::Json {
        write!(out, "{{\"n\":{n},\"k\":{k},\"acyclic\":{acyclic},\"sequence\":[")?;
    }
    let mut w = SymbolWriter {
        out,
        format,
        written: 0,
    };
    let mut head = Vec::with_capacity(n);
    for v in symbols {
        if acyclic && head.len() + 1 < n {
            head.push(v);
        }
        w.symbol(v)?;
    }
    if acyclic {
        // a sequence shorter than n-1 wraps onto itself
        for i in 0..n.saturating_sub(1) {
            w.symbol(head[i % head.len()])?;
        }
    }
    let out = w.out;
    if format == Format::Json {
        write!(out, "],\"length\":{}}}", w.written)?;
    }
    writeln!(out)?;
    out.flush()?;
    Ok(EXIT_OK)
}

fn stream<S: Symbol>(n: usize, k: u32) -> Result<Box<dyn Iterator<Item = u32>>, Failure> {
    Ok(if n == 2 {
        Box::new(Os2Stream::<S>::new(k)?.map(Symbol::value))
    } else {
        Box::new(SequenceStream::<S>::new(n, k)?.map(Symbol::value))
    })
}

/// Parses a digit string, a spaced list, a JSON array, or a JSON object with
/// a "sequence" array.
fn parse_sequence(text: &str, k: Option<u32>) -> Result<(Vec<u32>, Option<u32>), Failure> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| Failure::Usage(format!("bad JSON: {e}")))?;
        let (list, json_k) = match &value {
            serde_json::Value::Array(a) => (a, None),
            serde_json::Value::Object(o) => (
                o.get("sequence")
                    .and_then(|s| s.as_array())
                    .ok_or_else(|| Failure::Usage("JSON object lacks a \"sequence\" array".into()))?,
                o.get("k").and_then(|v| v.as_u64()).map(|v| v as u32),
            ),
            _ => return Err(Failure::Usage("expected a JSON array or object".into())),
        };
        let values = list
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| Failure::Usage(format!("bad symbol {v}")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        return Ok((values, k.or(json_k)));
    }
    // without k, a lone token is read digit by digit
    let values = parse_symbols(trimmed, k.unwrap_or(10))?;
    Ok((values, k))
}

fn cmd_verify(n: usize, k: Option<u32>, acyclic: bool, text: &str, out: &mut dyn Write) -> CmdResult {
    let (values, k) = parse_sequence(text, k)?;
    if values.is_empty() {
        return Err(Error::EmptyWord.into());
    }
    let k = k.unwrap_or_else(|| values.iter().max().map_or(2, |&m| (m + 1).max(2)));
    if k <= u8::MAX_ALPHABET {
        verify_values::<u8>(&values, n, k, acyclic, out)
    } else {
        verify_values::<u16>(&values, n, k, acyclic, out)
    }
}

fn verify_values<S: Symbol>(
    values: &[u32],
    n: usize,
    k: u32,
    acyclic: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let word = Word::<S>::from_values(values, k)?;
    let verdict = if acyclic {
        verify_orientable_linear(&word, n)?
    } else {
        verify_orientable(&word, n)?
    };
    if verdict.is_ok() {
        writeln!(out, "ok (length {})", word.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "{verdict}")?;
        Ok(EXIT_VIOLATION)
    }
}

fn cmd_count(
    n: usize,
    k: u32,
    brute: bool,
    max: bool,
    allow_slow: bool,
    max_brute: Option<u128>,
    out: &mut dyn Write,
) -> CmdResult {
    let report = CountReport::new(n, k)?;
    let mut value = serde_json::to_value(&report).expect("report serializes");
    let limit = |default: u128| match (allow_slow, max_brute) {
        (_, Some(v)) => v,
        (true, None) => u128::MAX,
        (false, None) => default,
    };
    if brute {
        let s = if k <= u8::MAX_ALPHABET {
            brute_force_s_with_limit::<u8>(n, k, limit(BRUTE_FORCE_S_LIMIT))?.len()
        } else {
            brute_force_s_with_limit::<u16>(n, k, limit(BRUTE_FORCE_S_LIMIT))?.len()
        };
        value["bruteS"] = s.into();
    }
    if max {
        let best = longest_orientable_cycle::<u16>(n, k, limit(BRUTE_FORCE_MAX_OS_LIMIT))?;
        value["maxOS"] = best.as_ref().map_or(0, Word::len).into();
        value["maxWitness"] = best.map(|w| w.render()).into();
    }
    writeln!(out, "{value}")?;
    Ok(EXIT_OK)
}

fn cmd_tree<S: Symbol>(n: usize, k: u32, dot: bool, allow_slow: bool, out: &mut dyn Write) -> CmdResult {
    let estimate = lower_bound_l::<u128>(n, k).unwrap_or(u128::MAX) / n.max(1) as u128;
    if estimate > TREE_NODE_LIMIT && !allow_slow {
        return Err(Failure::Usage(format!(
            "tree for n={n}, k={k} has about {estimate} nodes; pass --allow-slow"
        )));
    }
    let tree = build_tree::<S>(n, k)?;
    let mut out = BufWriter::new(out);
    if dot {
        out.write_all(tree.to_dot().as_bytes())?;
    } else {
        writeln!(out, "root {}", tree.root())?;
        for (child, edge) in tree.edges() {
            let c = &tree.nodes()[child];
            let p = &tree.nodes()[edge.parent];
            writeln!(
                out,
                "{c} -> {p} {} ({})",
                edge.rule.name(),
                render_symbols(&edge.pair.child_string(), k)
            )?;
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_classify<S: Symbol>(text: &str, k: u32, out: &mut dyn Write) -> CmdResult {
    let word = Word::<S>::parse(text, k)?;
    let class = word.classify();
    if class != BraceletClass::AsymmetricBracelet || word.len() < 3 || k < 3 {
        writeln!(out, "{class}")?;
        return Ok(EXIT_OK);
    }
    match parent_verdict(&word) {
        ParentVerdict::Root => writeln!(out, "{class}; parent=Root")?,
        verdict => match parent(&word) {
            Ok((p, _)) => writeln!(out, "{class}; parent={verdict} → {p}")?,
            Err(_) => writeln!(out, "{class}; parent={verdict}")?,
        },
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate<S: Symbol>(
    n: usize,
    k: u32,
    stubborn: bool,
    allow_slow: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let mut out = BufWriter::new(out);
    if stubborn {
        if n >= STUBBORN_SLOW_N && !allow_slow {
            return Err(Failure::Usage(format!(
                "stubborn search for n={n} is slow; pass --allow-slow"
            )));
        }
        for w in stubborn_strings::<S>(n, k)? {
            writeln!(out, "{w}")?;
        }
    } else {
        for w in enumerate_asymmetric_bracelets::<S>(n, k)? {
            writeln!(out, "{w}")?;
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}
