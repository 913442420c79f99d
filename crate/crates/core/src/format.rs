//! Plain-text formats.
//!
//! `.mon`, a multiplication table:
//!
//! ```text
//! # comment
//! elements: 1 a 0
//! identity: 1
//! table:
//! 1 a 0
//! a 0 0
//! 0 0 0
//! ```
//!
//! Row `x` lists `x·y` for each `y` in element order.
//!
//! `.tgen`, transformations on `{1..d}`: a `degree: <d>` line and
//! `gen <name>: <d 1-based images>` lines.
//!
//! `.dfa`: `states:`, `alphabet:`, `start:` and `accept:` header lines plus
//! one `delta: <state> <letter> <state>` line per transition.

use std::collections::HashMap;

use crate::expansion::ExpandedMonoid;
use crate::monoid::{generate_from_transformations, Elem, FiniteMonoid, GeneratorMap, Transformation};
use crate::{Limits, MonoError, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> MonoError {
    MonoError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Splits `key: rest` and returns `rest` when the key matches.
fn header<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(key)?;
    rest.trim_start().strip_prefix(':').map(str::trim)
}

/// Reads a `.mon` table. Element order is file order.
pub fn parse_mon(text: &str, limits: &Limits) -> Result<FiniteMonoid> {
    let mut names: Option<(usize, Vec<String>)> = None;
    let mut identity: Option<(usize, String)> = None;
    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut in_table = false;
    let mut last_line = 0;

    for (no, line) in content_lines(text) {
        last_line = no;
        if in_table {
            rows.push((no, line.split_whitespace().collect()));
            continue;
        }
        if let Some(rest) = header(line, "elements") {
            if names.is_some() {
                return Err(parse_err(no, "duplicate elements line"));
            }
            let list: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if list.is_empty() {
                return Err(parse_err(no, "no elements listed"));
            }
            names = Some((no, list));
        } else if let Some(rest) = header(line, "identity") {
            if identity.is_some() {
                return Err(parse_err(no, "duplicate identity line"));
            }
            let mut toks = rest.split_whitespace();
            match (toks.next(), toks.next()) {
                (Some(id), None) => identity = Some((no, id.to_string())),
                _ => return Err(parse_err(no, "identity line needs exactly one name")),
            }
        } else if let Some(rest) = header(line, "table") {
            if !rest.is_empty() {
                return Err(parse_err(no, "table rows start on the next line"));
            }
            in_table = true;
        } else {
            return Err(parse_err(no, format!("unexpected line {line:?}")));
        }
    }

    let (names_line, names) = names.ok_or_else(|| parse_err(last_line, "missing elements line"))?;
    let (id_line, id_name) = identity.ok_or_else(|| parse_err(last_line, "missing identity line"))?;
    if !in_table {
        return Err(parse_err(last_line, "missing table"));
    }
    let order = names.len();
    if order > limits.elements {
        return Err(MonoError::CapExceeded {
            what: "element",
            cap: limits.elements,
            reached: order,
        });
    }
    let lookup: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    if lookup.len() != order {
        return Err(parse_err(names_line, "duplicate element names"));
    }
    let identity = *lookup
        .get(id_name.as_str())
        .ok_or_else(|| MonoError::Identity(format!("line {id_line}: {id_name:?} is not an element")))?;
    if rows.len() != order {
        return Err(parse_err(
            rows.last().map_or(last_line, |r| r.0),
            format!("table has {} rows, expected {order}", rows.len()),
        ));
    }
    let mut table = Vec::with_capacity(order * order);
    for (no, row) in rows {
        if row.len() != order {
            return Err(parse_err(
                no,
                format!("row has {} entries, expected {order}", row.len()),
            ));
        }
        for tok in row {
            let z = lookup
                .get(tok)
                .ok_or_else(|| parse_err(no, format!("unknown element {tok:?}")))?;
            table.push(*z);
        }
    }
    FiniteMonoid::from_table(names, identity, table, limits)
}

/// Writes the canonical `.mon` text: single spaces, no comments, trailing
/// newline.
pub fn serialize_mon(m: &FiniteMonoid) -> String {
    let mut out = String::new();
    out.push_str("elements: ");
    out.push_str(&m.names().join(" "));
    out.push('\n');
    out.push_str("identity: ");
    out.push_str(m.name(m.identity()));
    out.push('\n');
    out.push_str("table:\n");
    for x in m.elements() {
        let row: Vec<&str> = m.elements().map(|y| m.name(m.mul(x, y))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Reads a `.tgen` file into zero-based transformations.
pub fn parse_tgen(text: &str) -> Result<(usize, Vec<Transformation>)> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(rest) = header(line, "degree") {
            if degree.is_some() {
                return Err(parse_err(no, "duplicate degree line"));
            }
            let d = rest
                .parse::<usize>()
                .ok()
                .filter(|&d| d > 0)
                .ok_or_else(|| parse_err(no, format!("invalid degree {rest:?}")))?;
            degree = Some(d);
        } else if let Some(rest) = line.strip_prefix("gen ") {
            let d = degree.ok_or_else(|| parse_err(no, "gen line before degree"))?;
            let (name, images) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(no, "expected `gen <name>: <images>`"))?;
            let name = name.trim();
            let images = images
                .split_whitespace()
                .map(|tok| match tok.parse::<usize>() {
                    Ok(q) if (1..=d).contains(&q) => Ok(q - 1),
                    _ => Err(parse_err(no, format!("image {tok:?} is not in 1..={d}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            if images.len() != d {
                return Err(parse_err(
                    no,
                    format!("generator {name:?} has {} images, expected {d}", images.len()),
                ));
            }
            gens.push(Transformation {
                name: name.to_string(),
                images,
            });
        } else {
            return Err(parse_err(no, format!("unexpected line {line:?}")));
        }
    }
    let degree = degree.ok_or_else(|| parse_err(0, "missing degree line"))?;
    Ok((degree, gens))
}

/// Parses a `.tgen` file and closes its generators.
pub fn load_tgen(text: &str, limits: &Limits) -> Result<(FiniteMonoid, Vec<Elem>)> {
    let (degree, gens) = parse_tgen(text)?;
    generate_from_transformations(degree, &gens, limits)
}

/// A complete deterministic automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    pub states: Vec<String>,
    pub alphabet: Vec<char>,
    pub start: usize,
    pub accepting: Vec<usize>,
    /// `delta[q * alphabet.len() + a]`.
    pub delta: Vec<usize>,
}

impl Dfa {
    pub fn step(&self, q: usize, letter: usize) -> usize {
        self.delta[q * self.alphabet.len() + letter]
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        let mut q = self.start;
        for c in word.chars() {
            let a = self
                .alphabet
                .iter()
                .position(|&x| x == c)
                .ok_or(MonoError::UnknownLetter(c))?;
            q = self.step(q, a);
        }
        Ok(self.accepting.contains(&q))
    }
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut states: Option<Vec<String>> = None;
    let mut alphabet: Option<Vec<char>> = None;
    let mut start: Option<(usize, String)> = None;
    let mut accept: Option<(usize, Vec<String>)> = None;
    let mut edges: Vec<(usize, String, String, String)> = Vec::new();

    for (no, line) in content_lines(text) {
        let dup = |what: &str| parse_err(no, format!("duplicate {what} line"));
        if let Some(rest) = header(line, "states") {
            if states.is_some() {
                return Err(dup("states"));
            }
            states = Some(rest.split_whitespace().map(String::from).collect());
        } else if let Some(rest) = header(line, "alphabet") {
            if alphabet.is_some() {
                return Err(dup("alphabet"));
            }
            let letters = rest
                .split_whitespace()
                .map(|tok| {
                    let mut cs = tok.chars();
                    match (cs.next(), cs.next()) {
                        (Some(c), None) => Ok(c),
                        _ => Err(parse_err(no, format!("letter {tok:?} is not a single character"))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            alphabet = Some(letters);
        } else if let Some(rest) = header(line, "start") {
            if start.is_some() {
                return Err(dup("start"));
            }
            start = Some((no, rest.to_string()));
        } else if let Some(rest) = header(line, "accept") {
            if accept.is_some() {
                return Err(dup("accept"));
            }
            accept = Some((no, rest.split_whitespace().map(String::from).collect()));
        } else if let Some(rest) = header(line, "delta") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(parse_err(no, "expected `delta: <state> <letter> <state>`"));
            }
            edges.push((no, toks[0].into(), toks[1].into(), toks[2].into()));
        } else {
            return Err(parse_err(no, format!("unexpected line {line:?}")));
        }
    }

    let invalid = |msg: String| MonoError::InvalidDfa(msg);
    let states = states.ok_or_else(|| invalid("missing states line".into()))?;
    let alphabet = alphabet.ok_or_else(|| invalid("missing alphabet line".into()))?;
    if states.is_empty() {
        return Err(invalid("no states".into()));
    }
    let state_ix: HashMap<&str, usize> = states.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    if state_ix.len() != states.len() {
        return Err(invalid("duplicate state names".into()));
    }
    let mut sorted = alphabet.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != alphabet.len() {
        return Err(invalid("duplicate letters".into()));
    }
    let state = |no: usize, name: &str| {
        state_ix
            .get(name)
            .copied()
            .ok_or_else(|| parse_err(no, format!("unknown state {name:?}")))
    };
    let (start_no, start_name) = start.ok_or_else(|| invalid("missing start line".into()))?;
    let start = state(start_no, &start_name)?;
    let accepting = match accept {
        Some((no, names)) => names.iter().map(|n| state(no, n)).collect::<Result<Vec<_>>>()?,
        None => return Err(invalid("missing accept line".into())),
    };

    let k = alphabet.len();
    let mut delta = vec![usize::MAX; states.len() * k];
    for (no, from, letter, to) in edges {
        let p = state(no, &from)?;
        let q = state(no, &to)?;
        let a = letter
            .chars()
            .next()
            .filter(|_| letter.chars().count() == 1)
            .and_then(|c| alphabet.iter().position(|&x| x == c))
            .ok_or_else(|| parse_err(no, format!("unknown letter {letter:?}")))?;
        let slot = &mut delta[p * k + a];
        if *slot != usize::MAX {
            return Err(parse_err(no, format!("second transition from {from} on {letter}")));
        }
        *slot = q;
    }
    if let Some(pos) = delta.iter().position(|&q| q == usize::MAX) {
        return Err(invalid(format!(
            "no transition from {} on {}",
            states[pos / k],
            alphabet[pos % k]
        )));
    }
    Ok(Dfa {
        states,
        alphabet,
        start,
        accepting,
        delta,
    })
}

/// The transition monoid of `dfa`: each letter acts on the right of the
/// states, and the letters generate.
pub fn dfa_to_transition_monoid(dfa: &Dfa, limits: &Limits) -> Result<(FiniteMonoid, GeneratorMap)> {
    let gens: Vec<Transformation> = dfa
        .alphabet
        .iter()
        .enumerate()
        .map(|(a, &c)| Transformation {
            name: c.to_string(),
            images: (0..dfa.states.len()).map(|q| dfa.step(q, a)).collect(),
        })
        .collect();
    let (m, images) = generate_from_transformations(dfa.states.len(), &gens, limits)?;
    let pairs: Vec<(char, Elem)> = dfa.alphabet.iter().copied().zip(images).collect();
    let map = GeneratorMap::new(&m, &pairs)?;
    Ok((m, map))
}

/// `.mon` text for `M^(n)` (elements `P0, P1, …`) and a sidecar describing
/// each profile: its η image, least representative and tuples.
pub fn serialize_expansion(e: &ExpandedMonoid, limits: &Limits) -> Result<(String, String)> {
    let table = e.to_monoid(limits)?;
    let base = e.base();
    let mut side = String::new();
    side.push_str(&format!("arity: {}\n", e.arity()));
    side.push_str(&format!("gens: {}\n", e.generators().render(base)));
    for x in e.elements() {
        side.push_str(&format!(
            "P{x} eta={} rep={} profile={}\n",
            base.name(e.eta(x)),
            e.representative(x),
            e.profile(x).render(base)
        ));
    }
    Ok((serialize_mon(&table), side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_serializes_to_header_and_one_row() {
        let text = serialize_mon(&catalog::trivial());
        assert_eq!(text, "elements: 1\nidentity: 1\ntable:\n1\n");
    }

    #[test]
    fn n3_golden() {
        assert_eq!(
            serialize_mon(&catalog::n3()),
            "elements: 1 a 0\nidentity: 1\ntable:\n1 a 0\na 0 0\n0 0 0\n"
        );
    }

    #[test]
    fn round_trip_generated_flip_flop() {
        let (m, _) = load_tgen(include_str!("../fixtures/flip-flop.tgen"), &Limits::default()).unwrap();
        let back = parse_mon(&serialize_mon(&m), &Limits::default()).unwrap();
        assert_eq!(back.names(), m.names());
        assert_eq!(back.table(), m.table());
        assert_eq!(back.identity(), m.identity());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let lim = Limits::default();
        let err = parse_mon("elements: 1 a\nidentity: 1\ntable:\n1 a\na\n", &lim).unwrap_err();
        assert_eq!(
            err,
            MonoError::Parse {
                line: 5,
                msg: "row has 1 entries, expected 2".into()
            }
        );
        assert!(matches!(
            parse_mon("elements: 1 a\nidentity: 1\ntable:\n1 a\na q\n", &lim),
            Err(MonoError::Parse { line: 5, .. })
        ));
        assert!(matches!(
            parse_mon("elements: 1 a\nidentity: z\ntable:\n1 a\na a\n", &lim),
            Err(MonoError::Identity(_))
        ));
        assert!(matches!(
            parse_mon("identity: 1\ntable:\n1\n", &lim),
            Err(MonoError::Parse { .. })
        ));
        assert!(matches!(
            parse_mon("# c\nelements: 1 1\nidentity: 1\ntable:\n1 1\n1 1\n", &lim),
            Err(MonoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_mon("elements: 1\nidentity: 1\nbogus\n", &lim),
            Err(MonoError::Parse { line: 3, .. })
        ));
        // a non-identity "identity"
        assert!(matches!(
            parse_mon("elements: 1 a\nidentity: a\ntable:\n1 a\na a\n", &lim),
            Err(MonoError::Identity(_))
        ));
    }

    #[test]
    fn element_cap_applies_to_tables() {
        let lim = Limits {
            elements: 2,
            states: 10,
        };
        assert!(matches!(
            parse_mon(catalog::N3_MON, &lim),
            Err(MonoError::CapExceeded { .. })
        ));
    }

    #[test]
    fn dfa_swap_gives_z2() {
        let dfa = parse_dfa(include_str!("../fixtures/swap.dfa")).unwrap();
        assert!(dfa.accepts("a").unwrap());
        assert!(!dfa.accepts("abba").unwrap());
        let (m, g) = dfa_to_transition_monoid(&dfa, &Limits::default()).unwrap();
        assert_eq!(m.order(), 2);
        assert_eq!(g.image('b').unwrap(), m.identity());
        assert!(!m.is_aperiodic());
    }

    #[test]
    fn dfa_resets_give_flip_flop() {
        let dfa = parse_dfa(include_str!("../fixtures/resets.dfa")).unwrap();
        let (m, g) = dfa_to_transition_monoid(&dfa, &Limits::default()).unwrap();
        assert_eq!(m.order(), 3);
        assert!(m.is_aperiodic());
        assert!(g.is_generating(&m));
    }

    #[test]
    fn one_state_dfa_is_trivial() {
        let dfa = parse_dfa("states: q\nalphabet: a b\nstart: q\naccept:\ndelta: q a q\ndelta: q b q\n").unwrap();
        let (m, _) = dfa_to_transition_monoid(&dfa, &Limits::default()).unwrap();
        assert_eq!(m.order(), 1);
    }

    #[test]
    fn dfa_totality_checked() {
        let err = parse_dfa("states: p q\nalphabet: a\nstart: p\naccept: q\ndelta: p a q\n").unwrap_err();
        assert!(matches!(err, MonoError::InvalidDfa(_)));
        let err = parse_dfa("states: p\nalphabet: a\nstart: p\naccept:\ndelta: p a p\ndelta: p a p\n")
            .unwrap_err();
        assert!(matches!(err, MonoError::Parse { line: 6, .. }));
    }

    #[test]
    fn tgen_errors() {
        assert!(parse_tgen("gen s: 1 1\n").is_err());
        assert!(parse_tgen("degree: 2\ngen s: 1 3\n").is_err());
        assert!(parse_tgen("degree: 2\ngen s: 1\n").is_err());
        assert!(parse_tgen("degree: 0\n").is_err());
    }
}
