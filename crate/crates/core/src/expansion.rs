//! The Henckell-Schützenberger expansion `M^(n)`: words modulo equality of
//! `cut_n` profiles, realised as the monoid of profiles reachable from the
//! empty word, together with the projection η onto `M`.

use std::collections::HashMap;

use crate::cut::{letter_profile_of, profile_product, CutProfile};
use crate::monoid::{Elem, FiniteMonoid, GeneratorMap};
use crate::words::Word;
use crate::{Exec, Limits, MonoError, Result};

/// `M^(n)` with its projection η.
///
/// Elements are numbered in shortlex order of their least representative
/// word; element 0 is the identity profile `{(1, …, 1)}`. Products are
/// computed by running the right Cayley graph along the representative of
/// the right factor, so no quadratic table is stored.
#[derive(Clone, Debug)]
pub struct ExpandedMonoid {
    base: FiniteMonoid,
    gens: GeneratorMap,
    arity: usize,
    profiles: Vec<CutProfile>,
    index: HashMap<CutProfile, usize>,
    /// `right[x * letters + a]` is `x · [a]`.
    right: Vec<usize>,
    reps: Vec<Word>,
    eta: Vec<Elem>,
}

/// Builds `M^(n)` by breadth-first closure of the identity profile under
/// right multiplication by letter profiles.
///
/// Each generation's products are independent and may be evaluated in
/// parallel; they are merged in frontier order, so numbering does not depend
/// on `exec`.
pub fn build_expansion(
    m: &FiniteMonoid,
    g: &GeneratorMap,
    arity: usize,
    limits: &Limits,
    exec: Exec,
) -> Result<ExpandedMonoid> {
    if arity == 0 {
        return Err(MonoError::ZeroArity);
    }
    let letters: Vec<CutProfile> = g
        .images()
        .iter()
        .map(|&a| letter_profile_of(m, a, arity))
        .collect();
    let k = letters.len();
    let identity = CutProfile::identity(m, arity);
    let mut profiles = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut reps = vec![Word::empty()];
    let mut right = Vec::new();
    let mut frontier = vec![0usize];

    while !frontier.is_empty() {
        let products: Vec<Vec<CutProfile>> = exec.map(&frontier, |&x| {
            letters
                .iter()
                .map(|lp| profile_product(m, &profiles[x], lp).expect("arity agrees"))
                .collect()
        });
        right.resize(profiles.len() * k, usize::MAX);
        let mut next = Vec::new();
        for (&x, row) in frontier.iter().zip(products) {
            for (a, p) in row.into_iter().enumerate() {
                let target = match index.get(&p) {
                    Some(&y) => y,
                    None => {
                        let y = profiles.len();
                        if y >= limits.states {
                            return Err(MonoError::CapExceeded {
                                what: "state",
                                cap: limits.states,
                                reached: y,
                            });
                        }
                        let mut w = reps[x].clone();
                        w.push(g.alphabet()[a]);
                        reps.push(w);
                        index.insert(p.clone(), y);
                        profiles.push(p);
                        next.push(y);
                        y
                    }
                };
                right[x * k + a] = target;
            }
        }
        frontier = next;
    }
    right.resize(profiles.len() * k, usize::MAX);
    debug_assert!(right.iter().all(|&y| y != usize::MAX));

    let eta = profiles.iter().map(|p| p.eta(m)).collect();
    Ok(ExpandedMonoid {
        base: m.clone(),
        gens: g.clone(),
        arity,
        profiles,
        index,
        right,
        reps,
        eta,
    })
}

impl ExpandedMonoid {
    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn generators(&self) -> &GeneratorMap {
        &self.gens
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.profiles.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn profile(&self, x: usize) -> &CutProfile {
        &self.profiles[x]
    }

    pub fn profiles(&self) -> &[CutProfile] {
        &self.profiles
    }

    pub fn index_of(&self, p: &CutProfile) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Shortlex-least word with this profile.
    pub fn representative(&self, x: usize) -> &Word {
        &self.reps[x]
    }

    pub fn eta(&self, x: usize) -> Elem {
        self.eta[x]
    }

    pub fn eta_map(&self) -> &[Elem] {
        &self.eta
    }

    /// Whether the letters generate all of the base monoid.
    pub fn is_generating(&self) -> bool {
        self.gens.is_generating(&self.base)
    }

    pub fn mul_letter(&self, x: usize, letter: usize) -> usize {
        self.right[x * self.gens.alphabet().len() + letter]
    }

    /// The element reached from the identity by reading `w`.
    pub fn element_of(&self, w: &Word) -> Result<usize> {
        w.letters().iter().try_fold(0, |x, &c| {
            Ok(self.mul_letter(x, self.gens.letter_index(c)?))
        })
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.reps[y].letters().iter().fold(x, |acc, &c| {
            let a = self.gens.letter_index(c).expect("representatives use the alphabet");
            self.mul_letter(acc, a)
        })
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn omega_power(&self, x: usize) -> usize {
        let mut p = x;
        for _ in 0..self.order() {
            if self.is_idempotent(p) {
                return p;
            }
            p = self.mul(p, x);
        }
        unreachable!("no idempotent power found within the order bound")
    }

    pub fn aperiodic_counterexample(&self) -> Option<usize> {
        self.elements().find(|&x| {
            let w = self.omega_power(x);
            self.mul(w, x) != w
        })
    }

    pub fn is_aperiodic(&self) -> bool {
        self.aperiodic_counterexample().is_none()
    }

    /// `|η⁻¹(m)|` for each base element `m` (zero outside the image).
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.base.order()];
        for &e in &self.eta {
            sizes[e] += 1;
        }
        sizes
    }

    /// Least `x` lying over an idempotent of `M` with `x^ω·x != x^ω`.
    ///
    /// Powers of such an `x` stay in the fiber `η⁻¹(e)`, so this tests every
    /// fiber over an idempotent for aperiodicity as a subsemigroup.
    pub fn eta_aperiodic_counterexample(&self) -> Option<usize> {
        self.elements()
            .filter(|&x| self.base.is_idempotent(self.eta[x]))
            .find(|&x| {
                let w = self.omega_power(x);
                self.mul(w, x) != w
            })
    }

    pub fn check_eta_aperiodic(&self) -> bool {
        self.eta_aperiodic_counterexample().is_none()
    }

    /// η(x·y) = η(x)·η(y) for all pairs; returns the least failing pair.
    pub fn eta_morphism_failure(&self, exec: Exec) -> Option<(usize, usize)> {
        let rows = exec.map_range(self.elements(), |x| {
            self.elements()
                .find(|&y| self.eta[self.mul(x, y)] != self.base.mul(self.eta[x], self.eta[y]))
                .map(|y| (x, y))
        });
        rows.into_iter().flatten().next()
    }

    /// Materialises the full table, named `P0, P1, …`.
    pub fn to_monoid(&self, limits: &Limits) -> Result<FiniteMonoid> {
        if self.order() > limits.elements {
            return Err(MonoError::CapExceeded {
                what: "element",
                cap: limits.elements,
                reached: self.order(),
            });
        }
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for x in self.elements() {
            table.extend(self.elements().map(|y| self.mul(x, y)));
        }
        let names = self.elements().map(|x| format!("P{x}")).collect();
        FiniteMonoid::from_table(names, 0, table, limits)
    }
}

/// Failure modes of the truncation map `M^(n+1) → M^(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefinementFailure {
    /// The truncated profile of this upper element is not an element below.
    NotDefined(usize),
    /// This lower element has no preimage.
    NotSurjective(usize),
    /// The map does not preserve this product.
    NotMorphism(usize, usize),
    /// η differs across the map at this upper element.
    EtaMismatch(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    /// Image of each upper element, `usize::MAX` where undefined.
    pub map: Vec<usize>,
    pub failure: Option<RefinementFailure>,
}

impl Refinement {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that dropping the last coordinate (keeping tuples ending in the
/// identity) is a well-defined surjective morphism `hi → lo` over `M`.
pub fn check_refinement(hi: &ExpandedMonoid, lo: &ExpandedMonoid, exec: Exec) -> Result<Refinement> {
    if hi.base != lo.base {
        return Err(MonoError::ExpansionMismatch("different base monoids".into()));
    }
    if hi.gens != lo.gens {
        return Err(MonoError::ExpansionMismatch("different generators".into()));
    }
    if hi.arity != lo.arity + 1 {
        return Err(MonoError::ExpansionMismatch(format!(
            "arities {} and {} are not consecutive",
            hi.arity, lo.arity
        )));
    }
    let map: Vec<usize> = exec.map(&hi.profiles, |p| {
        p.truncate(&hi.base, lo.arity)
            .ok()
            .and_then(|t| lo.index_of(&t))
            .unwrap_or(usize::MAX)
    });
    let done = |failure| Ok(Refinement { map: map.clone(), failure });

    if let Some(x) = map.iter().position(|&y| y == usize::MAX) {
        return done(Some(RefinementFailure::NotDefined(x)));
    }
    let mut hit = vec![false; lo.order()];
    map.iter().for_each(|&y| hit[y] = true);
    if let Some(y) = hit.iter().position(|&h| !h) {
        return done(Some(RefinementFailure::NotSurjective(y)));
    }
    if let Some(x) = hi.elements().find(|&x| hi.eta(x) != lo.eta(map[x])) {
        return done(Some(RefinementFailure::EtaMismatch(x)));
    }
    let broken = exec.map_range(hi.elements(), |x| {
        hi.elements()
            .find(|&y| map[hi.mul(x, y)] != lo.mul(map[x], map[y]))
            .map(|y| (x, y))
    });
    if let Some((x, y)) = broken.into_iter().flatten().next() {
        return done(Some(RefinementFailure::NotMorphism(x, y)));
    }
    done(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cut::cut;

    fn z2_single() -> (FiniteMonoid, GeneratorMap) {
        let m = catalog::z2();
        let g = GeneratorMap::from_names(&m, &[('a', "g")]).unwrap();
        (m, g)
    }

    #[test]
    fn trivial_base() {
        let m = catalog::trivial();
        let g = GeneratorMap::from_names(&m, &[('a', "1"), ('b', "1")]).unwrap();
        for n in 1..=3 {
            let e = build_expansion(&m, &g, n, &Limits::default(), Exec::Sequential).unwrap();
            assert_eq!(e.order(), 1);
        }
    }

    #[test]
    fn z2_arity_two_has_three_elements() {
        let (m, g) = z2_single();
        let e = build_expansion(&m, &g, 2, &Limits::default(), Exec::Sequential).unwrap();
        assert_eq!(e.order(), 3);
        let expected = [
            CutProfile::from_tuples(2, [[0, 0]]).unwrap(),
            CutProfile::from_tuples(2, [[0, 1], [1, 0]]).unwrap(),
            CutProfile::from_tuples(2, [[0, 0], [1, 1]]).unwrap(),
        ];
        assert_eq!(e.profiles(), &expected);
        assert_eq!(e.eta_map(), &[0, 1, 0]);
        assert_eq!(e.fiber_sizes(), vec![2, 1]);
        assert_eq!(e.representative(2), &Word::from("aa"));
        // {P1, P2} is a copy of Z2
        assert_eq!(e.mul(1, 1), 2);
        assert_eq!(e.mul(2, 2), 2);
        assert_eq!(e.mul(2, 1), 1);
        assert!(e.check_eta_aperiodic());
        assert!(!e.is_aperiodic());
    }

    #[test]
    fn arity_one_is_isomorphic_to_base() {
        for entry in catalog::all() {
            let e = build_expansion(&entry.monoid, &entry.ab, 1, &Limits::default(), Exec::Sequential)
                .unwrap();
            assert_eq!(e.order(), entry.ab.generated().len());
            let mut seen = e.eta_map().to_vec();
            seen.sort_unstable();
            assert_eq!(seen, entry.ab.generated());
            assert!(e.check_eta_aperiodic());
        }
    }

    #[test]
    fn representatives_reproduce_profiles() {
        let (m, g) = z2_single();
        let e = build_expansion(&m, &g, 3, &Limits::default(), Exec::Sequential).unwrap();
        for x in e.elements() {
            assert_eq!(&cut(&m, &g, e.representative(x), 3).unwrap(), e.profile(x));
            assert_eq!(e.element_of(e.representative(x)).unwrap(), x);
        }
    }

    #[test]
    fn cap_reports_partial_count() {
        let entry = catalog::by_name("flip-flop").unwrap();
        let lim = Limits {
            elements: 512,
            states: 4,
        };
        let err = build_expansion(&entry.monoid, &entry.ab, 3, &lim, Exec::Sequential).unwrap_err();
        assert_eq!(
            err,
            MonoError::CapExceeded {
                what: "state",
                cap: 4,
                reached: 4
            }
        );
    }

    #[test]
    fn parallel_build_is_identical() {
        for entry in catalog::all() {
            let seq = build_expansion(&entry.monoid, &entry.ab, 2, &Limits::default(), Exec::Sequential)
                .unwrap();
            let par = build_expansion(&entry.monoid, &entry.ab, 2, &Limits::default(), Exec::Parallel)
                .unwrap();
            assert_eq!(seq.profiles(), par.profiles());
            assert_eq!(seq.right, par.right);
        }
    }

    #[test]
    fn refinement_z2() {
        let (m, g) = z2_single();
        let lo = build_expansion(&m, &g, 1, &Limits::default(), Exec::Sequential).unwrap();
        let hi = build_expansion(&m, &g, 2, &Limits::default(), Exec::Sequential).unwrap();
        let r = check_refinement(&hi, &lo, Exec::Sequential).unwrap();
        assert!(r.holds());
        assert_eq!(r.map, vec![0, 1, 0]);
        assert!(check_refinement(&lo, &hi, Exec::Sequential).is_err());
        let other = GeneratorMap::from_names(&m, &[('b', "g")]).unwrap();
        let lo2 = build_expansion(&m, &other, 1, &Limits::default(), Exec::Sequential).unwrap();
        assert!(matches!(
            check_refinement(&hi, &lo2, Exec::Sequential),
            Err(MonoError::ExpansionMismatch(_))
        ));
    }

    #[test]
    fn non_generating_map_expands_the_submonoid() {
        let m = catalog::n3();
        let g = GeneratorMap::from_names(&m, &[('z', "0")]).unwrap();
        let e = build_expansion(&m, &g, 2, &Limits::default(), Exec::Sequential).unwrap();
        assert!(!e.is_generating());
        assert_eq!(e.fiber_sizes()[1], 0);
    }

    #[test]
    fn table_materialises() {
        let (m, g) = z2_single();
        let e = build_expansion(&m, &g, 2, &Limits::default(), Exec::Sequential).unwrap();
        let t = e.to_monoid(&Limits::default()).unwrap();
        assert_eq!(t.names(), &["P0", "P1", "P2"]);
        assert_eq!(t.mul(1, 1), 2);
    }
}
