//! Green's relations R, L, J, H and the J-order.

use std::collections::HashMap;

use crate::monoid::{Elem, FiniteMonoid};
use crate::Exec;

/// Class indices per element for each of Green's relations.
///
/// Classes are numbered in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreensData {
    r_class: Vec<usize>,
    l_class: Vec<usize>,
    j_class: Vec<usize>,
    h_class: Vec<usize>,
    /// `j_leq[c][d]` iff the ideal of class `c` is contained in that of `d`.
    j_leq: Vec<Vec<bool>>,
}

fn right_ideal(m: &FiniteMonoid, x: Elem) -> Vec<bool> {
    let mut set = vec![false; m.order()];
    for y in m.elements() {
        set[m.mul(x, y)] = true;
    }
    set
}

fn left_ideal(m: &FiniteMonoid, x: Elem) -> Vec<bool> {
    let mut set = vec![false; m.order()];
    for y in m.elements() {
        set[m.mul(y, x)] = true;
    }
    set
}

fn two_sided_ideal(m: &FiniteMonoid, x: Elem) -> Vec<bool> {
    let right = right_ideal(m, x);
    let mut set = vec![false; m.order()];
    for u in m.elements().filter(|&u| right[u]) {
        for y in m.elements() {
            set[m.mul(y, u)] = true;
        }
    }
    set
}

fn classify<K: std::hash::Hash + Eq>(keys: Vec<K>) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    keys.into_iter()
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect()
}

impl GreensData {
    pub fn compute(m: &FiniteMonoid) -> GreensData {
        GreensData::compute_with(m, Exec::Sequential)
    }

    pub fn compute_with(m: &FiniteMonoid, exec: Exec) -> GreensData {
        let rights = exec.map_range(m.elements(), |x| right_ideal(m, x));
        let lefts = exec.map_range(m.elements(), |x| left_ideal(m, x));
        let twos = exec.map_range(m.elements(), |x| two_sided_ideal(m, x));

        let r_class = classify(rights);
        let l_class = classify(lefts);
        let h_class = classify(r_class.iter().zip(&l_class).collect());
        let j_class = classify(twos.clone());

        let classes = j_class.iter().max().map_or(0, |c| c + 1);
        let mut reps = vec![usize::MAX; classes];
        for x in m.elements().rev() {
            reps[j_class[x]] = x;
        }
        let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(&p, &q)| !p || q);
        let j_leq = reps
            .iter()
            .map(|&c| reps.iter().map(|&d| subset(&twos[c], &twos[d])).collect())
            .collect();
        GreensData {
            r_class,
            l_class,
            j_class,
            h_class,
            j_leq,
        }
    }

    pub fn r_class(&self, x: Elem) -> usize {
        self.r_class[x]
    }
    pub fn l_class(&self, x: Elem) -> usize {
        self.l_class[x]
    }
    pub fn j_class(&self, x: Elem) -> usize {
        self.j_class[x]
    }
    pub fn h_class(&self, x: Elem) -> usize {
        self.h_class[x]
    }

    pub fn r_related(&self, x: Elem, y: Elem) -> bool {
        self.r_class[x] == self.r_class[y]
    }
    pub fn l_related(&self, x: Elem, y: Elem) -> bool {
        self.l_class[x] == self.l_class[y]
    }
    pub fn j_related(&self, x: Elem, y: Elem) -> bool {
        self.j_class[x] == self.j_class[y]
    }
    pub fn h_related(&self, x: Elem, y: Elem) -> bool {
        self.h_class[x] == self.h_class[y]
    }

    /// `J`-class `c` lies below (or equals) class `d`: `McM ⊆ MdM`.
    pub fn j_leq(&self, c: usize, d: usize) -> bool {
        self.j_leq[c][d]
    }

    pub fn j_class_count(&self) -> usize {
        self.j_leq.len()
    }

    fn members(ids: &[usize]) -> Vec<Vec<Elem>> {
        let count = ids.iter().max().map_or(0, |c| c + 1);
        let mut out = vec![Vec::new(); count];
        for (x, &c) in ids.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn r_classes(&self) -> Vec<Vec<Elem>> {
        Self::members(&self.r_class)
    }
    pub fn l_classes(&self) -> Vec<Vec<Elem>> {
        Self::members(&self.l_class)
    }
    pub fn j_classes(&self) -> Vec<Vec<Elem>> {
        Self::members(&self.j_class)
    }
    pub fn h_classes(&self) -> Vec<Vec<Elem>> {
        Self::members(&self.h_class)
    }

    pub fn is_h_trivial(&self) -> bool {
        self.h_classes().iter().all(|c| c.len() == 1)
    }

    /// Index of the J-class lying below every other class.
    pub fn minimal_j_class(&self) -> usize {
        (0..self.j_class_count())
            .find(|&c| (0..self.j_class_count()).all(|d| self.j_leq(c, d)))
            .expect("a finite monoid has a minimum J-class")
    }

    /// Regularity through the classical criterion: the R-class of `a`
    /// contains an idempotent.
    pub fn is_regular(&self, m: &FiniteMonoid, a: Elem) -> bool {
        m.elements()
            .any(|e| m.is_idempotent(e) && self.r_related(a, e))
    }

    /// Group membership through `a H a^ω`.
    pub fn is_group_element(&self, m: &FiniteMonoid, a: Elem) -> bool {
        self.h_related(a, m.omega_power(a))
    }
}

pub fn greens(m: &FiniteMonoid) -> GreensData {
    GreensData::compute(m)
}
