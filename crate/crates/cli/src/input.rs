//! Loading monoid files and parsing argument lists.

use std::path::Path;

use mono_core::format::{dfa_to_transition_monoid, load_tgen, parse_dfa, parse_mon};
use mono_core::monoid::{Elem, FiniteMonoid, GeneratorMap};
use mono_core::term::{parse_term, OmegaTerm};
use mono_core::words::Word;
use mono_core::{Limits, MonoError};

use crate::CliError;

/// A monoid read from disk, with the letter map its file implies (DFA
/// letters, single-character `.tgen` generators).
pub struct Loaded {
    pub monoid: FiniteMonoid,
    pub natural_map: Option<GeneratorMap>,
    pub bytes: Vec<u8>,
}

pub fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_monoid(path: &Path, limits: &Limits) -> Result<Loaded, CliError> {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))?;
    let at = |e: MonoError| CliError::Input(format!("{}: {e}", path.display()));
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let (monoid, natural_map) = match ext {
        "dfa" => {
            let dfa = parse_dfa(text).map_err(at)?;
            let (m, g) = dfa_to_transition_monoid(&dfa, limits).map_err(at)?;
            (m, Some(g))
        }
        "tgen" => {
            let (m, images) = load_tgen(text, limits).map_err(at)?;
            let names = &m.words().expect("generated monoids carry words").generators;
            let letters: Option<Vec<char>> = names
                .iter()
                .map(|n| {
                    let mut cs = n.chars();
                    cs.next().filter(|_| cs.next().is_none())
                })
                .collect();
            let map = match letters {
                Some(ls) => {
                    let pairs: Vec<(char, Elem)> = ls.into_iter().zip(images).collect();
                    Some(GeneratorMap::new(&m, &pairs).map_err(at)?)
                }
                None => None,
            };
            (m, map)
        }
        _ => (parse_mon(text, limits).map_err(at)?, None),
    };
    Ok(Loaded {
        monoid,
        natural_map,
        bytes,
    })
}

/// `a=x,b=y`.
pub fn parse_map(m: &FiniteMonoid, list: &str) -> Result<GeneratorMap, CliError> {
    let mut pairs = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (letter, elem) = item
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("expected letter=element, got {item:?}")))?;
        let mut cs = letter.trim().chars();
        let c = match (cs.next(), cs.next()) {
            (Some(c), None) => c,
            _ => return Err(CliError::Input(format!("letter {letter:?} is not a single character"))),
        };
        pairs.push((c, elem.trim()));
    }
    if pairs.is_empty() {
        return Err(CliError::Input("empty generator map".into()));
    }
    Ok(GeneratorMap::from_names(m, &pairs)?)
}

/// Resolves the letter map: explicit `--map` first, then the file's own.
pub fn resolve_map(loaded: &Loaded, list: Option<&str>) -> Result<GeneratorMap, CliError> {
    match (list, &loaded.natural_map) {
        (Some(s), _) => parse_map(&loaded.monoid, s),
        (None, Some(g)) => Ok(g.clone()),
        (None, None) => Err(CliError::Input("a generator map is required (--map a=x,…)".into())),
    }
}

/// Comma-separated element names.
pub fn parse_elements(m: &FiniteMonoid, list: &str) -> Result<Vec<Elem>, CliError> {
    list.split(',')
        .map(|name| Ok(m.index_of(name.trim())?))
        .collect()
}

/// Comma-separated words; empty fields are empty words.
pub fn parse_words(list: &str) -> Vec<Word> {
    list.split(',').map(|w| Word::from(w.trim())).collect()
}

/// `;`-separated terms.
pub fn parse_alphas(list: &str) -> Result<Vec<OmegaTerm>, CliError> {
    list.split(';').map(|t| Ok(parse_term(t)?)).collect()
}

/// `|`-separated ideals, each a `,`-separated list of generator terms.
pub fn parse_ideals(list: &str) -> Result<Vec<Vec<OmegaTerm>>, CliError> {
    list.split('|')
        .map(|ideal| ideal.split(',').map(|t| Ok(parse_term(t)?)).collect())
        .collect()
}
