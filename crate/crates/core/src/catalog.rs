//! Small monoids used as fixtures throughout the test suites.
//!
//! Each entry carries a map from the two-letter alphabet `{a, b}`; for the
//! one-generator monoids `b` goes to a second natural element.

use crate::format::parse_mon;
use crate::monoid::{FiniteMonoid, GeneratorMap};
use crate::Limits;

pub const TRIVIAL_MON: &str = include_str!("../fixtures/trivial.mon");
pub const Z2_MON: &str = include_str!("../fixtures/z2.mon");
pub const Z3_MON: &str = include_str!("../fixtures/z3.mon");
pub const N3_MON: &str = include_str!("../fixtures/n3.mon");
pub const FLIP_FLOP_MON: &str = include_str!("../fixtures/flip-flop.mon");
pub const T2_MON: &str = include_str!("../fixtures/t2.mon");
pub const B2_MON: &str = include_str!("../fixtures/b2.mon");

fn load(text: &str) -> FiniteMonoid {
    parse_mon(text, &Limits::default()).expect("catalog fixture parses")
}

pub fn trivial() -> FiniteMonoid {
    load(TRIVIAL_MON)
}

pub fn z2() -> FiniteMonoid {
    load(Z2_MON)
}

pub fn z3() -> FiniteMonoid {
    load(Z3_MON)
}

/// `{1, a, 0}` with `a² = 0`.
pub fn n3() -> FiniteMonoid {
    load(N3_MON)
}

pub fn flip_flop() -> FiniteMonoid {
    load(FLIP_FLOP_MON)
}

pub fn t2() -> FiniteMonoid {
    load(T2_MON)
}

pub fn b2() -> FiniteMonoid {
    load(B2_MON)
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub monoid: FiniteMonoid,
    /// Map from `{a, b}`.
    pub ab: GeneratorMap,
}

fn entry(name: &'static str, monoid: FiniteMonoid, a: &str, b: &str) -> CatalogEntry {
    let ab = GeneratorMap::from_names(&monoid, &[('a', a), ('b', b)]).expect("catalog map");
    CatalogEntry { name, monoid, ab }
}

/// The whole catalog, ordered by size.
pub fn all() -> Vec<CatalogEntry> {
    vec![
        entry("trivial", trivial(), "1", "1"),
        entry("z2", z2(), "g", "g"),
        entry("z3", z3(), "g", "h"),
        entry("n3", n3(), "a", "0"),
        entry("flip-flop", flip_flop(), "s", "r"),
        entry("t2", t2(), "t", "c1"),
        entry("b2", b2(), "a", "b"),
    ]
}

/// The five monoids named in the core acceptance sweeps.
pub fn core() -> Vec<CatalogEntry> {
    all()
        .into_iter()
        .filter(|e| matches!(e.name, "trivial" | "z2" | "z3" | "n3" | "flip-flop"))
        .collect()
}

pub fn by_name(name: &str) -> Option<CatalogEntry> {
    all().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_load() {
        let orders: Vec<usize> = all().iter().map(|e| e.monoid.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 3, 3, 4, 6]);
        assert_eq!(core().len(), 5);
        for e in all() {
            if e.name != "trivial" {
                assert!(e.ab.is_generating(&e.monoid), "{}", e.name);
            }
        }
    }
}
