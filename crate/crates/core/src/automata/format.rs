//! Line-oriented text formats for automata and trace files.
//!
//! Automaton files:
//!
//! ```text
//! # comment
//! alphabet: a b c
//! states: 3
//! initial: 0
//! accepting: 0 2
//! 0 a 1
//! 1 b 2
//! ```
//!
//! States are numbered `0..states`. Omitted `(state, symbol)` pairs lead to an
//! implicit rejecting sink. Trace files hold one trace per line as whitespace
//! separated symbol names; a blank line is the empty trace.

use std::fmt::Write as _;

use super::alphabet::Alphabet;
use super::dfa::{Dfa, Trace};
use crate::error::{Error, Result};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_state(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Syntax {
        line,
        message: format!("expected a state number, found `{token}`"),
    })
}

/// Parses the automaton format into a complete [`Dfa`].
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<usize> = None;
    let mut accepting: Option<Vec<usize>> = None;
    let mut transitions = Vec::new();
    let mut seen_pairs = std::collections::HashSet::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        if let Some((key, value)) = body.split_once(':') {
            let values: Vec<&str> = value.split_whitespace().collect();
            match key.trim() {
                "alphabet" => {
                    if alphabet.is_some() {
                        return Err(Error::Duplicate { line, what: "header", name: "alphabet".into() });
                    }
                    let mut a = Alphabet::default();
                    for v in values {
                        a.push(v.to_string()).map_err(|e| match e {
                            Error::Duplicate { what, name, .. } => Error::Duplicate { line, what, name },
                            other => Error::Syntax { line, message: other.to_string() },
                        })?;
                    }
                    alphabet = Some(a);
                }
                "states" => {
                    if states.is_some() {
                        return Err(Error::Duplicate { line, what: "header", name: "states".into() });
                    }
                    let [v] = values.as_slice() else {
                        return Err(Error::Syntax { line, message: "`states:` takes one number".into() });
                    };
                    states = Some(parse_state(v, line)?);
                }
                "initial" => {
                    if initial.is_some() {
                        return Err(Error::Duplicate { line, what: "header", name: "initial".into() });
                    }
                    let [v] = values.as_slice() else {
                        return Err(Error::Syntax { line, message: "`initial:` takes one state".into() });
                    };
                    initial = Some(parse_state(v, line)?);
                }
                "accepting" => {
                    if accepting.is_some() {
                        return Err(Error::Duplicate { line, what: "header", name: "accepting".into() });
                    }
                    let mut acc = Vec::new();
                    for v in values {
                        let q = parse_state(v, line)?;
                        if acc.contains(&q) {
                            return Err(Error::Duplicate { line, what: "accepting state", name: v.into() });
                        }
                        acc.push(q);
                    }
                    accepting = Some(acc);
                }
                other => {
                    return Err(Error::Syntax { line, message: format!("unknown header `{other}`") });
                }
            }
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let [src, sym, dst] = tokens.as_slice() else {
            return Err(Error::Syntax {
                line,
                message: "expected `source symbol target`".into(),
            });
        };
        let alpha = alphabet.as_ref().ok_or(Error::Syntax {
            line,
            message: "transition before `alphabet:` header".into(),
        })?;
        let n = states.ok_or(Error::Syntax {
            line,
            message: "transition before `states:` header".into(),
        })?;
        let q = parse_state(src, line)?;
        let t = parse_state(dst, line)?;
        let s = alpha.id(sym).ok_or_else(|| Error::Syntax {
            line,
            message: format!("unknown symbol `{sym}`"),
        })?;
        for state in [q, t] {
            if state >= n {
                return Err(Error::DanglingTarget { line, state, declared: n });
            }
        }
        if !seen_pairs.insert((q, s)) {
            return Err(Error::Duplicate {
                line,
                what: "transition",
                name: format!("{src} {sym}"),
            });
        }
        transitions.push((q, s, t));
    }

    let alphabet = alphabet.ok_or(Error::MissingHeader("alphabet"))?;
    let n = states.ok_or(Error::MissingHeader("states"))?;
    let initial = initial.ok_or(Error::MissingHeader("initial"))?;
    let accepting = accepting.unwrap_or_default();
    if n == 0 {
        return Err(Error::Syntax { line: 0, message: "automaton needs at least one state".into() });
    }
    if initial >= n {
        return Err(Error::DanglingTarget { line: 0, state: initial, declared: n });
    }
    if let Some(&q) = accepting.iter().find(|&&q| q >= n) {
        return Err(Error::DanglingTarget { line: 0, state: q, declared: n });
    }
    Dfa::from_partial(alphabet, n, initial, &accepting, transitions)
}

/// Writes every transition explicitly, so re-parsing never adds a sink.
pub fn write_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "alphabet: {}", d.alphabet());
    let _ = writeln!(out, "states: {}", d.state_count());
    let _ = writeln!(out, "initial: {}", d.initial());
    let acc: Vec<String> = d.accepting_states().map(|q| q.to_string()).collect();
    let _ = writeln!(out, "accepting: {}", acc.join(" "));
    for q in 0..d.state_count() {
        for (s, t) in d.row(q).iter().enumerate() {
            let _ = writeln!(out, "{q} {} {t}", d.alphabet().name(s));
        }
    }
    out
}

fn trace_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .map(|(i, l)| (i + 1, strip_comment(l)))
}

/// Parses a trace file against a known alphabet.
pub fn parse_traces(text: &str, alphabet: &Alphabet) -> Result<Vec<Trace>> {
    trace_lines(text)
        .map(|(line, body)| {
            body.split_whitespace()
                .map(|name| {
                    alphabet.id(name).ok_or_else(|| Error::Syntax {
                        line,
                        message: format!("unknown symbol `{name}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()
                .map(Trace)
        })
        .collect()
}

/// Parses a trace file, registering symbols in order of first appearance
/// after the symbols already in `alphabet`.
pub fn parse_traces_extending(text: &str, alphabet: &mut Alphabet) -> Result<Vec<Trace>> {
    let mut out = Vec::new();
    for (line, body) in trace_lines(text) {
        let mut t = Vec::new();
        for name in body.split_whitespace() {
            let id = match alphabet.id(name) {
                Some(id) => id,
                None => alphabet
                    .push(name.to_string())
                    .map_err(|e| Error::Syntax { line, message: e.to_string() })?,
            };
            t.push(id);
        }
        out.push(Trace(t));
    }
    Ok(out)
}

pub fn write_traces<'a>(traces: impl IntoIterator<Item = &'a Trace>, alphabet: &Alphabet) -> String {
    let mut out = String::new();
    for t in traces {
        let _ = writeln!(out, "{}", t.display(alphabet));
    }
    out
}

/// One `count<TAB>trace` line per distinct trace.
pub fn write_counted_traces<'a>(
    traces: impl IntoIterator<Item = (&'a Trace, u64)>,
    alphabet: &Alphabet,
) -> String {
    let mut out = String::new();
    for (t, c) in traces {
        let _ = writeln!(out, "{c}\t{}", t.display(alphabet));
    }
    out
}

/// Reads the output of [`write_counted_traces`].
pub fn parse_counted_traces(text: &str, alphabet: &Alphabet) -> Result<Vec<(Trace, u64)>> {
    let mut out = Vec::new();
    for (line, body) in trace_lines(text) {
        if body.trim().is_empty() {
            continue;
        }
        let (count, rest) = body.split_once('\t').unwrap_or((body.trim(), ""));
        let count: u64 = count.trim().parse().map_err(|_| Error::Syntax {
            line,
            message: format!("expected a count, found `{count}`"),
        })?;
        let single = parse_traces(rest, alphabet)
            .map_err(|_| Error::Syntax { line, message: "unknown symbol".into() })?;
        out.push((single.into_iter().next().unwrap_or_default(), count));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_STAR: &str = "\
# a* over {a, b}
alphabet: a b
states: 1
initial: 0
accepting: 0
0 a 0
";

    #[test]
    fn parses_and_completes() {
        let d = parse_dfa(A_STAR).unwrap();
        assert_eq!(d.state_count(), 2);
        assert!(d.accepts(&Trace(vec![0, 0])));
        assert!(!d.accepts(&Trace(vec![0, 1])));
    }

    #[test]
    fn dangling_target() {
        let text = "alphabet: a\nstates: 1\ninitial: 0\naccepting: 0\n0 a 3\n";
        assert!(matches!(
            parse_dfa(text),
            Err(Error::DanglingTarget { line: 5, state: 3, declared: 1 })
        ));
    }

    #[test]
    fn error_paths() {
        assert!(matches!(
            parse_dfa("alphabet: a\nstates: 1\naccepting: 0\n"),
            Err(Error::MissingHeader("initial"))
        ));
        assert!(matches!(
            parse_dfa("alphabet: a a\n"),
            Err(Error::Duplicate { line: 1, what: "symbol", .. })
        ));
        assert!(matches!(
            parse_dfa("alphabet: a\nstates: 2\ninitial: 0\n0 a 1\n0 a 0\n"),
            Err(Error::Duplicate { line: 5, what: "transition", .. })
        ));
        assert!(matches!(
            parse_dfa("alphabet: a\nstates: 2\ninitial: 0\nnonsense\n"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            parse_dfa("alphabet: a\nstates: 2\ninitial: 0\n0 z 1\n"),
            Err(Error::Syntax { line: 4, .. })
        ));
    }

    #[test]
    fn serialisation_is_stable() {
        let d = parse_dfa(A_STAR).unwrap();
        let text = write_dfa(&d);
        let again = parse_dfa(&text).unwrap();
        assert_eq!(d, again);
        assert_eq!(write_dfa(&again), text);
    }

    #[test]
    fn trace_files() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let traces = parse_traces("a b\n\n# skipped\nb\n", &a).unwrap();
        assert_eq!(traces, vec![Trace(vec![0, 1]), Trace(vec![]), Trace(vec![1])]);
        assert_eq!(write_traces(&traces, &a), "a b\n\nb\n");
        assert!(parse_traces("c\n", &a).is_err());

        let mut grown = Alphabet::default();
        let t = parse_traces_extending("x y\ny z\n", &mut grown).unwrap();
        assert_eq!(grown.symbols(), ["x", "y", "z"]);
        assert_eq!(t[1], Trace(vec![1, 2]));
    }

    #[test]
    fn counted_traces() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let items = vec![(Trace(vec![0, 1]), 3u64), (Trace(vec![]), 2)];
        let text = write_counted_traces(items.iter().map(|(t, c)| (t, *c)), &a);
        assert_eq!(text, "3\ta b\n2\t\n");
        assert_eq!(parse_counted_traces(&text, &a).unwrap(), items);
    }
}
