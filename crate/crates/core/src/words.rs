//! Words over a finite alphabet, their factorizations, and locating a part of
//! one factorization inside a part of another.

use std::fmt;

use crate::{MonoError, Result};

/// A finite word; letters are single characters.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<char>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, c: char) {
        self.0.push(c);
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Concatenation of a sequence of words.
    pub fn concat<'a, I: IntoIterator<Item = &'a Word>>(parts: I) -> Word {
        Word(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// Whether `needle` occurs in `self` starting at `offset`.
    pub fn occurs_at(&self, needle: &Word, offset: usize) -> bool {
        offset + needle.len() <= self.len() && self.0[offset..offset + needle.len()] == needle.0[..]
    }

    /// All words over `alphabet` of length exactly `len`, in lexicographic
    /// order of the alphabet as given.
    pub fn all_of_length(alphabet: &[char], len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&c| {
                        let mut next = w.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length `<= max_len`, in shortlex order.
    pub fn all_up_to(alphabet: &[char], max_len: usize) -> Vec<Word> {
        (0..=max_len)
            .flat_map(|len| Word::all_of_length(alphabet, len))
            .collect()
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Word {
        Word(s.chars().collect())
    }
}

impl From<Vec<char>> for Word {
    fn from(v: Vec<char>) -> Word {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A factorization `w = w_1 ⋯ w_n`, stored by its `n - 1` non-decreasing cut
/// positions. Parts may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    cuts: Vec<usize>,
    parts: Vec<Word>,
}

impl Factorization {
    pub fn from_cuts(word: &Word, cuts: &[usize]) -> Factorization {
        debug_assert!(cuts.windows(2).all(|p| p[0] <= p[1]));
        debug_assert!(cuts.last().is_none_or(|&c| c <= word.len()));
        let mut parts = Vec::with_capacity(cuts.len() + 1);
        let mut start = 0;
        for &c in cuts {
            parts.push(word.slice(start, c));
            start = c;
        }
        parts.push(word.slice(start, word.len()));
        Factorization {
            cuts: cuts.to_vec(),
            parts,
        }
    }

    pub fn from_parts(parts: Vec<Word>) -> Factorization {
        let mut cuts = Vec::with_capacity(parts.len().saturating_sub(1));
        let mut pos = 0;
        for p in &parts[..parts.len().saturating_sub(1)] {
            pos += p.len();
            cuts.push(pos);
        }
        Factorization { cuts, parts }
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn parts(&self) -> &[Word] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Word> {
        self.parts
    }

    pub fn arity(&self) -> usize {
        self.parts.len()
    }

    pub fn word(&self) -> Word {
        Word::concat(&self.parts)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| format!("{p:?}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Non-decreasing vectors of `arity - 1` cut positions in `0..=len`, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct CutVectors {
    len: usize,
    current: Option<Vec<usize>>,
}

impl CutVectors {
    pub fn new(len: usize, arity: usize) -> Result<CutVectors> {
        if arity == 0 {
            return Err(MonoError::ZeroArity);
        }
        Ok(CutVectors {
            len,
            current: Some(vec![0; arity - 1]),
        })
    }
}

impl Iterator for CutVectors {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if let Some(k) = next.iter().rposition(|&c| c < self.len) {
            let v = next[k] + 1;
            next[k..].iter_mut().for_each(|c| *c = v);
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Every factorization of `word` into `arity` parts, ordered by cut vector.
pub fn factorizations(word: &Word, arity: usize) -> Result<impl Iterator<Item = Factorization> + '_> {
    Ok(CutVectors::new(word.len(), arity)?.map(move |cuts| Factorization::from_cuts(word, &cuts)))
}

/// Locates `v_j` inside `u_i` (both 1-based) at `offset` within `u_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FactorWitness {
    pub i: usize,
    pub j: usize,
    pub offset: usize,
}

fn spans(parts: &[Word]) -> Vec<(usize, usize)> {
    let mut pos = 0;
    parts
        .iter()
        .map(|p| {
            let s = (pos, pos + p.len());
            pos += p.len();
            s
        })
        .collect()
}

impl FactorWitness {
    /// The occurrence is real and position-aligned: in the common word, the
    /// span of `v_j` lies inside the span of `u_i` (closed intervals, so an
    /// empty `v_j` may sit at either end of `u_i`).
    pub fn verify(&self, us: &[Word], vs: &[Word]) -> bool {
        if self.i == 0 || self.j == 0 || self.i > us.len() || self.j > vs.len() {
            return false;
        }
        let (u, v) = (&us[self.i - 1], &vs[self.j - 1]);
        let (us_start, us_end) = spans(us)[self.i - 1];
        let (vs_start, vs_end) = spans(vs)[self.j - 1];
        u.occurs_at(v, self.offset)
            && us_start <= vs_start
            && vs_end <= us_end
            && vs_start - us_start == self.offset
    }
}

impl fmt::Display for FactorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={} j={} offset={}", self.i, self.j, self.offset)
    }
}

/// Given `u_1 ⋯ u_m = v_1 ⋯ v_n` with `m <= n`, finds `i, j` such that `v_j`
/// is a factor of `u_i`, by the monotone last-letter map `f`.
///
/// * an empty `v_j` (least `j`) is placed in the first `u_i` whose span
///   contains its position;
/// * otherwise empty `u_i` are skipped and `f(j)` is the part of `u` holding
///   the last letter of `v_j`; the least `j >= 2` with `f(j-1) = f(j)` gives
///   `v_j` inside `u_{f(j)}`;
/// * if `f` is injective it is the identity, `m = n`, and `v_1` is a prefix
///   of `u_1`.
pub fn lemma_factor(us: &[Word], vs: &[Word]) -> Result<FactorWitness> {
    let (m, n) = (us.len(), vs.len());
    if m == 0 || n == 0 {
        return Err(MonoError::NoParts);
    }
    if m > n {
        return Err(MonoError::TooManyParts { m, n });
    }
    if Word::concat(us) != Word::concat(vs) {
        return Err(MonoError::ConcatMismatch);
    }
    let u_spans = spans(us);
    let v_spans = spans(vs);

    if let Some(j) = vs.iter().position(Word::is_empty) {
        let pos = v_spans[j].0;
        let i = u_spans
            .iter()
            .position(|&(s, e)| s <= pos && pos <= e)
            .expect("position lies within the word");
        return Ok(FactorWitness {
            i: i + 1,
            j: j + 1,
            offset: pos - u_spans[i].0,
        });
    }

    // the word is non-empty from here on; keep original indices of non-empty u's
    let nonempty: Vec<usize> = (0..m).filter(|&i| !us[i].is_empty()).collect();
    let f: Vec<usize> = v_spans
        .iter()
        .map(|&(_, end)| {
            let last = end - 1;
            nonempty
                .iter()
                .copied()
                .find(|&i| u_spans[i].0 <= last && last < u_spans[i].1)
                .expect("each letter belongs to some non-empty u")
        })
        .collect();
    debug_assert!(f.windows(2).all(|p| p[0] <= p[1]), "f is monotone");

    if let Some(j) = (1..n).find(|&j| f[j - 1] == f[j]) {
        let i = f[j];
        return Ok(FactorWitness {
            i: i + 1,
            j: j + 1,
            offset: v_spans[j].0 - u_spans[i].0,
        });
    }
    // f injective and monotone into at most m <= n parts: f is the identity
    // on non-empty u's, so v_1 starts where the first non-empty u starts.
    let i = nonempty[0];
    debug_assert_eq!(f[0], i);
    Ok(FactorWitness {
        i: i + 1,
        j: 1,
        offset: 0,
    })
}
