//! Two-sided ideals of a finite monoid.

use crate::greens::GreensData;
use crate::monoid::{Elem, FiniteMonoid};
use crate::{MonoError, Result};

/// A non-empty set `I` with `M·I·M ⊆ I`, stored as sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    elements: Vec<Elem>,
}

impl Ideal {
    /// Checks that `elements` is a non-empty ideal of `m`.
    pub fn from_elements(m: &FiniteMonoid, elements: &[Elem]) -> Result<Ideal> {
        if elements.is_empty() {
            return Err(MonoError::NotAnIdeal("the empty set".into()));
        }
        let mut member = vec![false; m.order()];
        for &a in elements {
            member[m.check(a)?] = true;
        }
        for a in m.elements().filter(|&a| member[a]) {
            for x in m.elements() {
                if !member[m.mul(x, a)] || !member[m.mul(a, x)] {
                    return Err(MonoError::NotAnIdeal(format!(
                        "{} is not closed under multiplication by {}",
                        m.render_set(elements),
                        m.name(x)
                    )));
                }
            }
        }
        Ok(Ideal::from_mask(&member))
    }

    fn from_mask(member: &[bool]) -> Ideal {
        Ideal {
            elements: (0..member.len()).filter(|&x| member[x]).collect(),
        }
    }

    pub fn whole(m: &FiniteMonoid) -> Ideal {
        Ideal {
            elements: m.elements().collect(),
        }
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Ideal) -> Vec<Elem> {
        self.elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect()
    }
}

/// `M·S·M`, the ideal generated by a non-empty set.
pub fn ideal_generated(m: &FiniteMonoid, gens: &[Elem]) -> Result<Ideal> {
    if gens.is_empty() {
        return Err(MonoError::NotAnIdeal("cannot generate from the empty set".into()));
    }
    let mut right = vec![false; m.order()];
    for &a in gens {
        let a = m.check(a)?;
        for y in m.elements() {
            right[m.mul(a, y)] = true;
        }
    }
    let mut member = vec![false; m.order()];
    for u in m.elements().filter(|&u| right[u]) {
        for x in m.elements() {
            member[m.mul(x, u)] = true;
        }
    }
    Ok(Ideal::from_mask(&member))
}

/// `I·J = {x·y : x ∈ I, y ∈ J}`.
pub fn ideal_product(m: &FiniteMonoid, i: &Ideal, j: &Ideal) -> Ideal {
    let mut member = vec![false; m.order()];
    for &x in i.elements() {
        for &y in j.elements() {
            member[m.mul(x, y)] = true;
        }
    }
    Ideal::from_mask(&member)
}

/// `I_1 ⋯ I_n`, folded left to right. `None` for an empty list.
pub fn ideal_product_all(m: &FiniteMonoid, ideals: &[Ideal]) -> Option<Ideal> {
    let (first, rest) = ideals.split_first()?;
    Some(
        rest.iter()
            .fold(first.clone(), |acc, j| ideal_product(m, &acc, j)),
    )
}

/// Lexicographically least pair `(a, b)` with `a, b ∉ I` and `a·b ∈ I`.
pub fn prime_witness(m: &FiniteMonoid, i: &Ideal) -> Option<(Elem, Elem)> {
    let outside: Vec<Elem> = m.elements().filter(|&x| !i.contains(x)).collect();
    outside.iter().find_map(|&a| {
        outside
            .iter()
            .find(|&&b| i.contains(m.mul(a, b)))
            .map(|&b| (a, b))
    })
}

pub fn is_prime_ideal(m: &FiniteMonoid, i: &Ideal) -> bool {
    prime_witness(m, i).is_none()
}

pub fn is_idempotent_ideal(m: &FiniteMonoid, i: &Ideal) -> bool {
    &ideal_product(m, i, i) == i
}

/// The kernel: the ideal generated by the minimum J-class.
pub fn minimal_ideal(m: &FiniteMonoid) -> Ideal {
    minimal_ideal_from(m, &GreensData::compute(m))
}

pub fn minimal_ideal_from(m: &FiniteMonoid, greens: &GreensData) -> Ideal {
    let c = greens.minimal_j_class();
    let rep = m
        .elements()
        .find(|&x| greens.j_class(x) == c)
        .expect("every J-class is non-empty");
    ideal_generated(m, &[rep]).expect("non-empty generator")
}
