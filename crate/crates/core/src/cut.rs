//! `cut_n` profiles: the set of n-tuples `([w_1]_M, …, [w_n]_M)` over all
//! factorizations `w = w_1 ⋯ w_n`.
//!
//! Three routes compute the same profile and are cross-checked in tests:
//! brute-force enumeration of factorizations ([`cut_brute`]), letter-by-letter
//! extension ([`cut_incremental`], the default behind [`cut`]) and folding
//! single-letter profiles with [`profile_product`] ([`cut_by_products`]).

use std::fmt;

use crate::monoid::{Elem, FiniteMonoid, GeneratorMap};
use crate::words::{CutVectors, Factorization, Word};
use crate::{MonoError, Result};

/// A deduplicated, lexicographically sorted set of `n`-tuples of elements.
///
/// Tuples are stored back to back; the flat vector is the canonical encoding,
/// so equality and ordering of profiles are those of the encoding.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutProfile {
    arity: usize,
    flat: Vec<Elem>,
}

impl CutProfile {
    /// Canonicalizes an arbitrary collection of tuples.
    pub fn from_tuples<I, T>(arity: usize, tuples: I) -> Result<CutProfile>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<[Elem]>,
    {
        if arity == 0 {
            return Err(MonoError::ZeroArity);
        }
        let mut flat = Vec::new();
        for t in tuples {
            let t = t.as_ref();
            if t.len() != arity {
                return Err(MonoError::ArityMismatch {
                    left: arity,
                    right: t.len(),
                });
            }
            flat.extend_from_slice(t);
        }
        Ok(CutProfile::canonical(arity, flat))
    }

    fn canonical(arity: usize, flat: Vec<Elem>) -> CutProfile {
        let mut rows: Vec<&[Elem]> = flat.chunks_exact(arity).collect();
        rows.sort_unstable();
        rows.dedup();
        let flat = rows.concat();
        CutProfile { arity, flat }
    }

    /// `{(1, …, 1)}`, the profile of the empty word.
    pub fn identity(m: &FiniteMonoid, arity: usize) -> CutProfile {
        CutProfile {
            arity,
            flat: vec![m.identity(); arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.flat.len() / self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn tuples(&self) -> impl ExactSizeIterator<Item = &[Elem]> + '_ {
        self.flat.chunks_exact(self.arity)
    }

    pub fn encoding(&self) -> &[Elem] {
        &self.flat
    }

    pub fn contains(&self, tuple: &[Elem]) -> bool {
        if tuple.len() != self.arity {
            return false;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.flat[mid * self.arity..(mid + 1) * self.arity].cmp(tuple) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// η: the common product of the tuples, read off the least tuple.
    pub fn eta(&self, m: &FiniteMonoid) -> Elem {
        let first = self.tuples().next().expect("profiles are non-empty");
        m.product(first.iter().copied())
    }

    /// `{(m_1, …, m_k) : (m_1, …, m_k, 1, …, 1) ∈ self}` for `k <= arity`.
    pub fn truncate(&self, m: &FiniteMonoid, k: usize) -> Result<CutProfile> {
        if k == 0 || k > self.arity {
            return Err(MonoError::ArityMismatch {
                left: self.arity,
                right: k,
            });
        }
        let one = m.identity();
        let kept = self
            .tuples()
            .filter(|t| t[k..].iter().all(|&x| x == one))
            .map(|t| &t[..k]);
        CutProfile::from_tuples(k, kept)
    }

    pub fn render(&self, m: &FiniteMonoid) -> String {
        let tuples: Vec<String> = self
            .tuples()
            .map(|t| {
                let names: Vec<&str> = t.iter().map(|&x| m.name(x)).collect();
                format!("({})", names.join(","))
            })
            .collect();
        format!("{{{}}}", tuples.join(","))
    }
}

impl fmt::Debug for CutProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.tuples()).finish()
    }
}

/// Start of the all-identity suffix of `t`.
fn ones_from(t: &[Elem], one: Elem) -> usize {
    t.iter().rposition(|&x| x != one).map_or(0, |p| p + 1)
}

fn check_arity(arity: usize) -> Result<()> {
    if arity == 0 {
        Err(MonoError::ZeroArity)
    } else {
        Ok(())
    }
}

fn letter_images(g: &GeneratorMap, w: &Word) -> Result<Vec<Elem>> {
    w.letters().iter().map(|&c| g.image(c)).collect()
}

/// `cut_n(w)` by enumerating all `C(|w|+n-1, n-1)` factorizations.
pub fn cut_brute(m: &FiniteMonoid, g: &GeneratorMap, w: &Word, arity: usize) -> Result<CutProfile> {
    let images = letter_images(g, w)?;
    let segment = |from: usize, to: usize| m.product(images[from..to].iter().copied());
    let mut flat = Vec::new();
    for cuts in CutVectors::new(w.len(), arity)? {
        let mut start = 0;
        for &c in cuts.iter().chain(std::iter::once(&w.len())) {
            flat.push(segment(start, c));
            start = c;
        }
    }
    Ok(CutProfile::canonical(arity, flat))
}

/// One step of the letter-extension rule: appending a letter with image `a`
/// extends part `j` of any witnessing tuple whose parts after `j` are all the
/// identity.
pub fn extend_by_letter(m: &FiniteMonoid, profile: &CutProfile, a: Elem) -> CutProfile {
    let one = m.identity();
    let n = profile.arity;
    let mut flat = Vec::with_capacity(profile.flat.len() * 2);
    for t in profile.tuples() {
        for j in ones_from(t, one).saturating_sub(1)..n {
            let start = flat.len();
            flat.extend_from_slice(t);
            flat[start + j] = m.mul(t[j], a);
        }
    }
    CutProfile::canonical(n, flat)
}

/// `cut_n(w)` by extending the profile of the empty word one letter at a time.
pub fn cut_incremental(
    m: &FiniteMonoid,
    g: &GeneratorMap,
    w: &Word,
    arity: usize,
) -> Result<CutProfile> {
    check_arity(arity)?;
    let images = letter_images(g, w)?;
    Ok(images
        .into_iter()
        .fold(CutProfile::identity(m, arity), |p, a| extend_by_letter(m, &p, a)))
}

/// `cut_n(w)`.
pub fn cut(m: &FiniteMonoid, g: &GeneratorMap, w: &Word, arity: usize) -> Result<CutProfile> {
    cut_incremental(m, g, w, arity)
}

/// `cut_n(w)` as the product of its letters' profiles.
pub fn cut_by_products(
    m: &FiniteMonoid,
    g: &GeneratorMap,
    w: &Word,
    arity: usize,
) -> Result<CutProfile> {
    check_arity(arity)?;
    let mut acc = CutProfile::identity(m, arity);
    for &c in w.letters() {
        acc = profile_product(m, &acc, &letter_profile(m, g, c, arity)?)?;
    }
    Ok(acc)
}

/// `cut_n(a)` for a single letter: `[a]` placed in each of the `n` slots.
pub fn letter_profile(m: &FiniteMonoid, g: &GeneratorMap, a: char, arity: usize) -> Result<CutProfile> {
    check_arity(arity)?;
    Ok(letter_profile_of(m, g.image(a)?, arity))
}

pub(crate) fn letter_profile_of(m: &FiniteMonoid, image: Elem, arity: usize) -> CutProfile {
    let mut flat = vec![m.identity(); arity * arity];
    for slot in 0..arity {
        flat[slot * arity + slot] = image;
    }
    CutProfile::canonical(arity, flat)
}

/// The profile of `uv` from the profiles of `u` and `v`.
///
/// For each merge index `i` in `1..=n`, a tuple of `S` whose parts after `i`
/// are trivial is glued to a tuple of `T` whose parts after `n - i + 1` are
/// trivial, multiplying the two parts that meet at the seam.
pub fn profile_product(m: &FiniteMonoid, s: &CutProfile, t: &CutProfile) -> Result<CutProfile> {
    if s.arity != t.arity {
        return Err(MonoError::ArityMismatch {
            left: s.arity,
            right: t.arity,
        });
    }
    let n = s.arity;
    let one = m.identity();
    let s_rows: Vec<(&[Elem], usize)> = s.tuples().map(|r| (r, ones_from(r, one))).collect();
    let t_rows: Vec<(&[Elem], usize)> = t.tuples().map(|r| (r, ones_from(r, one))).collect();
    let mut flat = Vec::new();
    for i in 1..=n {
        let tail = n - i + 1;
        for &(sr, _) in s_rows.iter().filter(|(_, k)| *k <= i) {
            for &(tr, _) in t_rows.iter().filter(|(_, k)| *k <= tail) {
                flat.extend_from_slice(&sr[..i - 1]);
                flat.push(m.mul(sr[i - 1], tr[0]));
                flat.extend_from_slice(&tr[1..tail]);
            }
        }
    }
    Ok(CutProfile::canonical(n, flat))
}

/// The factorization with least cut vector whose parts evaluate to `targets`,
/// if `targets ∈ cut_n(w)`.
pub fn match_factorization(
    m: &FiniteMonoid,
    g: &GeneratorMap,
    w: &Word,
    targets: &[Elem],
) -> Result<Option<Factorization>> {
    let images = letter_images(g, w)?;
    for &t in targets {
        m.check(t)?;
    }
    let arity = targets.len();
    let segment = |from: usize, to: usize| m.product(images[from..to].iter().copied());
    for cuts in CutVectors::new(w.len(), arity)? {
        let mut start = 0;
        let hit = cuts
            .iter()
            .chain(std::iter::once(&w.len()))
            .zip(targets)
            .all(|(&c, &target)| {
                let ok = segment(start, c) == target;
                start = c;
                ok
            });
        if hit {
            return Ok(Some(Factorization::from_cuts(w, &cuts)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn z2_ab() -> (FiniteMonoid, GeneratorMap) {
        let m = catalog::z2();
        let g = GeneratorMap::from_names(&m, &[('a', "g"), ('b', "g")]).unwrap();
        (m, g)
    }

    #[test]
    fn arity_one_is_the_image() {
        let (m, g) = z2_ab();
        let p = cut(&m, &g, &Word::from("aba"), 1).unwrap();
        assert_eq!(p, CutProfile::from_tuples(1, [[1]]).unwrap());
    }

    #[test]
    fn z2_ab_arity_two() {
        let (m, g) = z2_ab();
        let expected = CutProfile::from_tuples(2, [[0, 0], [1, 1]]).unwrap();
        for route in [cut_brute, cut_incremental, cut_by_products] {
            assert_eq!(route(&m, &g, &Word::from("ab"), 2).unwrap(), expected);
        }
    }

    #[test]
    fn empty_word() {
        let (m, g) = z2_ab();
        for n in 1..4 {
            assert_eq!(
                cut(&m, &g, &Word::empty(), n).unwrap(),
                CutProfile::identity(&m, n)
            );
            assert_eq!(cut_brute(&m, &g, &Word::empty(), n).unwrap(), CutProfile::identity(&m, n));
        }
    }

    #[test]
    fn unknown_letter_and_zero_arity() {
        let (m, g) = z2_ab();
        assert_eq!(
            cut(&m, &g, &Word::from("ax"), 2),
            Err(MonoError::UnknownLetter('x'))
        );
        assert_eq!(cut(&m, &g, &Word::from("a"), 0), Err(MonoError::ZeroArity));
        assert_eq!(cut_brute(&m, &g, &Word::from("a"), 0), Err(MonoError::ZeroArity));
    }

    #[test]
    fn letter_profiles() {
        let (m, g) = z2_ab();
        assert_eq!(
            letter_profile(&m, &g, 'a', 1).unwrap(),
            CutProfile::from_tuples(1, [[1]]).unwrap()
        );
        assert_eq!(
            letter_profile(&m, &g, 'a', 2).unwrap(),
            CutProfile::from_tuples(2, [[1, 0], [0, 1]]).unwrap()
        );
        let one = GeneratorMap::from_names(&m, &[('e', "1")]).unwrap();
        assert_eq!(
            letter_profile(&m, &one, 'e', 3).unwrap(),
            CutProfile::identity(&m, 3)
        );
    }

    #[test]
    fn product_by_hand() {
        let (m, g) = z2_ab();
        let p1 = letter_profile(&m, &g, 'a', 2).unwrap();
        let id = CutProfile::identity(&m, 2);
        assert_eq!(profile_product(&m, &p1, &id).unwrap(), p1);
        assert_eq!(profile_product(&m, &id, &p1).unwrap(), p1);
        assert_eq!(
            profile_product(&m, &p1, &p1).unwrap(),
            CutProfile::from_tuples(2, [[0, 0], [1, 1]]).unwrap()
        );
        let p3 = letter_profile(&m, &g, 'a', 3).unwrap();
        assert!(matches!(
            profile_product(&m, &p1, &p3),
            Err(MonoError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn truncation_and_eta() {
        let (m, g) = z2_ab();
        let p3 = cut(&m, &g, &Word::from("aab"), 3).unwrap();
        let p2 = cut(&m, &g, &Word::from("aab"), 2).unwrap();
        assert_eq!(p3.truncate(&m, 2).unwrap(), p2);
        assert_eq!(p3.eta(&m), 1);
        for t in p3.tuples() {
            assert_eq!(m.product(t.iter().copied()), 1);
        }
    }

    #[test]
    fn matching() {
        let (m, g) = z2_ab();
        let w = Word::from("ab");
        let f = match_factorization(&m, &g, &w, &[1, 1]).unwrap().unwrap();
        assert_eq!(f.parts(), &[Word::from("a"), Word::from("b")]);
        let f = match_factorization(&m, &g, &w, &[0, 0]).unwrap().unwrap();
        assert_eq!(f.parts(), &[Word::from(""), Word::from("ab")]);
        assert_eq!(match_factorization(&m, &g, &Word::from("a"), &[0]).unwrap(), None);
        assert!(match_factorization(&m, &g, &w, &[]).is_err());
    }

    #[test]
    fn contains() {
        let (m, g) = z2_ab();
        let p = cut(&m, &g, &Word::from("ab"), 2).unwrap();
        assert!(p.contains(&[1, 1]));
        assert!(!p.contains(&[0, 1]));
        assert!(!p.contains(&[1]));
        assert_eq!(p.render(&m), "{(1,1),(g,g)}");
    }
}
