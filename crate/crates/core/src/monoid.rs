//! Finite monoids given by a complete multiplication table.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::{Limits, MonoError, Result};

/// An element of a [`FiniteMonoid`], identified by its index in the table.
pub type Elem = usize;

/// A finite monoid stored as a dense `order × order` table.
///
/// Elements are identified by index; names are labels only. Construction
/// always validates the table, so a value of this type satisfies the identity
/// law and associativity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    names: Vec<String>,
    identity: Elem,
    table: Vec<Elem>,
    words: Option<GeneratorWords>,
}

/// Shortlex-least words over a generating set, one per element. Only present
/// for monoids built by closure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorWords {
    pub generators: Vec<String>,
    /// `words[x]` lists generator indices.
    pub words: Vec<Vec<usize>>,
}

pub(crate) fn check_name(name: &str) -> Result<(), String> {
    if name.is_empty() {
        return Err("empty element name".into());
    }
    if let Some(c) = name
        .chars()
        .find(|c| c.is_whitespace() || "#,;|=:{}()".contains(*c))
    {
        return Err(format!("element name {name:?} contains reserved character {c:?}"));
    }
    Ok(())
}

impl FiniteMonoid {
    /// Validates and wraps a row-major table (`table[x * order + y] = x·y`).
    pub fn from_table(
        names: Vec<String>,
        identity: Elem,
        table: Vec<Elem>,
        limits: &Limits,
    ) -> Result<FiniteMonoid> {
        let order = names.len();
        let shape = |msg: String| MonoError::Parse { line: 0, msg };
        if order == 0 {
            return Err(shape("a monoid needs at least one element".into()));
        }
        if order > limits.elements {
            return Err(MonoError::CapExceeded {
                what: "element",
                cap: limits.elements,
                reached: order,
            });
        }
        let mut seen = HashSet::new();
        for name in &names {
            check_name(name).map_err(shape)?;
            if !seen.insert(name.as_str()) {
                return Err(shape(format!("duplicate element name {name:?}")));
            }
        }
        if table.len() != order * order {
            return Err(shape(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&z| z >= order) {
            return Err(MonoError::IndexOutOfRange(bad));
        }
        if identity >= order {
            return Err(MonoError::Identity(format!("index {identity} out of range")));
        }
        let m = FiniteMonoid {
            names,
            identity,
            table,
            words: None,
        };
        if let Some((x, y, z)) = m.associativity_violation() {
            return Err(MonoError::NotAssociative {
                x: m.name(x).to_string(),
                y: m.name(y).to_string(),
                z: m.name(z).to_string(),
            });
        }
        for x in m.elements() {
            if m.mul(identity, x) != x || m.mul(x, identity) != x {
                return Err(MonoError::Identity(format!(
                    "{} is not a two-sided identity (fails at {})",
                    m.name(identity),
                    m.name(x)
                )));
            }
        }
        Ok(m)
    }

    /// Least triple (in lexicographic index order) with `(xy)z != x(yz)`.
    pub fn associativity_violation(&self) -> Option<(Elem, Elem, Elem)> {
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.mul(x, y);
                for z in self.elements() {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<Elem> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| MonoError::UnknownElement(name.to_string()))
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        if x < self.order() {
            Ok(x)
        } else {
            Err(MonoError::IndexOutOfRange(x))
        }
    }

    pub fn words(&self) -> Option<&GeneratorWords> {
        self.words.as_ref()
    }

    /// Row-major table, `order * order` entries.
    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// Table lookup. Panics on out-of-range indices.
    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.order() + y]
    }

    /// Index-checked product.
    pub fn multiply(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(self.check(x)?, self.check(y)?))
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    /// `x^k` with `x^0` the identity, by repeated squaring.
    pub fn power(&self, x: Elem, mut k: u64) -> Elem {
        let mut base = x;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn is_idempotent(&self, x: Elem) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    /// The unique idempotent power of `a`: `a^k` for the least `k >= 1` with
    /// `(a^k)^2 = a^k`.
    pub fn omega_power(&self, a: Elem) -> Elem {
        let mut p = a;
        // k never exceeds the order
        for _ in 0..self.order() {
            if self.is_idempotent(p) {
                return p;
            }
            p = self.mul(p, a);
        }
        unreachable!("no idempotent power found within the order bound")
    }

    /// Least exponent `k >= 1` with `a^k` idempotent.
    pub fn omega_exponent(&self, a: Elem) -> u64 {
        let mut p = a;
        let mut k = 1;
        while !self.is_idempotent(p) {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    /// Lexicographically least `b` with `a·b·a = a`, if `a` is regular.
    pub fn regular_witness(&self, a: Elem) -> Option<Elem> {
        self.elements()
            .find(|&b| self.mul(self.mul(a, b), a) == a)
    }

    pub fn is_regular(&self, a: Elem) -> bool {
        self.regular_witness(a).is_some()
    }

    /// `a = a^ω·a`, i.e. `a` lies in a subgroup.
    pub fn is_group_element(&self, a: Elem) -> bool {
        self.mul(self.omega_power(a), a) == a
    }

    /// Least element with `a^ω·a != a^ω`, if any.
    pub fn aperiodic_counterexample(&self) -> Option<Elem> {
        self.elements().find(|&a| {
            let w = self.omega_power(a);
            self.mul(w, a) != w
        })
    }

    pub fn is_aperiodic(&self) -> bool {
        self.aperiodic_counterexample().is_none()
    }

    /// Elements reachable from the identity by right multiplication with
    /// `gens`, sorted.
    pub fn submonoid_generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        self.elements().filter(|&x| seen[x]).collect()
    }

    /// Formats a set of elements as `{a,b}` in index order.
    pub fn render_set(&self, xs: &[Elem]) -> String {
        let mut sorted = xs.to_vec();
        sorted.sort_unstable();
        let names: Vec<&str> = sorted.iter().map(|&x| self.name(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A map from transformations on `{0..degree}` to act on the right:
/// `(x·y)[q] = y[x[q]]`, i.e. apply `x` first.
fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    x.iter().map(|&q| y[q]).collect()
}

/// A named transformation of `{0, …, degree-1}` (zero-based images).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformation {
    pub name: String,
    pub images: Vec<usize>,
}

/// Closes a set of transformations under composition, identity adjoined.
///
/// Elements are numbered in shortlex order of their least generator word,
/// which breadth-first search from the identity produces directly. The
/// identity is always element 0 and is named `1`; other elements are named
/// by their word (generator names joined with `.` when any name is longer
/// than one character). Returns the monoid and each generator's element.
pub fn generate_from_transformations(
    degree: usize,
    gens: &[Transformation],
    limits: &Limits,
) -> Result<(FiniteMonoid, Vec<Elem>)> {
    if degree == 0 {
        return Err(MonoError::InvalidTransformation("degree must be positive".into()));
    }
    let mut seen_names = HashSet::new();
    for g in gens {
        check_name(&g.name).map_err(MonoError::InvalidTransformation)?;
        if g.name == "1" || g.name.contains('.') {
            return Err(MonoError::InvalidTransformation(format!(
                "generator name {:?} is reserved",
                g.name
            )));
        }
        if !seen_names.insert(g.name.as_str()) {
            return Err(MonoError::InvalidTransformation(format!(
                "duplicate generator {:?}",
                g.name
            )));
        }
        if g.images.len() != degree || g.images.iter().any(|&q| q >= degree) {
            return Err(MonoError::InvalidTransformation(format!(
                "generator {:?} is not a total map on {degree} points",
                g.name
            )));
        }
    }

    let identity: Vec<usize> = (0..degree).collect();
    let mut maps = vec![identity.clone()];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut index: HashMap<Vec<usize>, Elem> = HashMap::from([(identity, 0)]);
    // right Cayley graph, filled during the search
    let mut right: Vec<Vec<Elem>> = Vec::new();
    let mut next = 0;
    while next < maps.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (gi, g) in gens.iter().enumerate() {
            let y = compose(&maps[next], &g.images);
            let idx = match index.get(&y) {
                Some(&idx) => idx,
                None => {
                    let idx = maps.len();
                    if idx >= limits.elements {
                        return Err(MonoError::CapExceeded {
                            what: "element",
                            cap: limits.elements,
                            reached: idx,
                        });
                    }
                    let mut w = words[next].clone();
                    w.push(gi);
                    index.insert(y.clone(), idx);
                    maps.push(y);
                    words.push(w);
                    idx
                }
            };
            row.push(idx);
        }
        right.push(row);
        next += 1;
    }

    let order = maps.len();
    let mut table = vec![0; order * order];
    for x in 0..order {
        // walk the least word of y from x
        for y in 0..order {
            table[x * order + y] = words[y].iter().fold(x, |acc, &g| right[acc][g]);
        }
    }
    let long = gens.iter().any(|g| g.name.chars().count() > 1);
    let names = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "1".to_string()
            } else {
                let parts: Vec<&str> = w.iter().map(|&g| gens[g].name.as_str()).collect();
                parts.join(if long { "." } else { "" })
            }
        })
        .collect();
    let mut m = FiniteMonoid::from_table(names, 0, table, limits)?;
    m.words = Some(GeneratorWords {
        generators: gens.iter().map(|g| g.name.clone()).collect(),
        words,
    });
    let images = (0..gens.len()).map(|g| right[0][g]).collect();
    Ok((m, images))
}

/// The morphism from words over a finite alphabet into a monoid, determined
/// by the images of the letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorMap {
    alphabet: Vec<char>,
    images: Vec<Elem>,
    generated: Vec<Elem>,
}

impl GeneratorMap {
    pub fn new(m: &FiniteMonoid, pairs: &[(char, Elem)]) -> Result<GeneratorMap> {
        let mut alphabet = Vec::with_capacity(pairs.len());
        let mut images = Vec::with_capacity(pairs.len());
        for &(c, x) in pairs {
            if alphabet.contains(&c) {
                return Err(MonoError::DuplicateLetter(c));
            }
            m.check(x)?;
            alphabet.push(c);
            images.push(x);
        }
        let generated = m.submonoid_generated(&images);
        Ok(GeneratorMap {
            alphabet,
            images,
            generated,
        })
    }

    /// Builds a map from `letter=element-name` pairs.
    pub fn from_names(m: &FiniteMonoid, pairs: &[(char, &str)]) -> Result<GeneratorMap> {
        let resolved = pairs
            .iter()
            .map(|&(c, name)| Ok((c, m.index_of(name)?)))
            .collect::<Result<Vec<_>>>()?;
        GeneratorMap::new(m, &resolved)
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn letter_index(&self, c: char) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|&a| a == c)
            .ok_or(MonoError::UnknownLetter(c))
    }

    pub fn image(&self, c: char) -> Result<Elem> {
        Ok(self.images[self.letter_index(c)?])
    }

    /// Image of a word, `[w]_M`.
    pub fn eval(&self, m: &FiniteMonoid, word: &[char]) -> Result<Elem> {
        word.iter()
            .try_fold(m.identity(), |acc, &c| Ok(m.mul(acc, self.image(c)?)))
    }

    /// Sorted elements of the submonoid generated by the letter images.
    pub fn generated(&self) -> &[Elem] {
        &self.generated
    }

    pub fn is_generating(&self, m: &FiniteMonoid) -> bool {
        self.generated.len() == m.order()
    }

    /// `a=x,b=y` using the monoid's element names.
    pub fn render(&self, m: &FiniteMonoid) -> String {
        self.alphabet
            .iter()
            .zip(&self.images)
            .map(|(c, &x)| format!("{c}={}", m.name(x)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::serialize_mon(self))
    }
}
