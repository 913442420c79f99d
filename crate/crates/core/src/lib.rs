//! Finite monoid computations around the Henckell-Schützenberger expansion.
//!
//! The crate is organised bottom-up:
//!
//! * [`monoid`], [`greens`] and [`ideal`] hold finite monoids given by a full
//!   multiplication table, together with Green's relations, regularity,
//!   ω-powers and the ideal calculus (products, primality, idempotency).
//! * [`words`] and [`cut`] deal with the free monoid: factorizations, the
//!   factor-location lemma and `cut_n` profiles.
//! * [`expansion`] builds `M^(n)`, the monoid of reachable cut profiles, with
//!   its projection η onto `M`.
//! * [`term`] and [`shadow`] evaluate ω-terms and run finite-monoid shadows of
//!   statements about free profinite monoids.
//! * [`format`] reads and writes the plain-text file formats (`.mon`, `.tgen`,
//!   `.dfa`).
//!
//! Every structure is immutable once built. Data-parallel sweeps go through
//! [`Exec`], which uses rayon when the `parallel` feature is enabled and falls
//! back to plain iteration otherwise. Results never depend on the mode.
//!
//! All computations assume nothing about the class of monoids under study; in
//! particular, closure of a pseudovariety under Mal'cev product with the
//! aperiodics is a standing assumption of the theory that no finite
//! computation here attempts to certify.

pub mod catalog;
pub mod cut;
mod error;
pub mod expansion;
pub mod format;
pub mod greens;
pub mod ideal;
pub mod monoid;
mod par;
pub mod shadow;
pub mod term;
pub mod words;

pub use error::{MonoError, Result};
pub use par::Exec;

/// Size limits applied to loaded tables, generated monoids and expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum order of a [`monoid::FiniteMonoid`].
    pub elements: usize,
    /// Maximum number of cut profiles in an expansion.
    pub states: usize,
}

impl Limits {
    pub const DEFAULT_ELEMENTS: usize = 512;
    pub const DEFAULT_STATES: usize = 20_000;

    /// Reads `MONO_CAP`, either `<elements>` or `<elements>,<states>`.
    /// Unset means defaults; a malformed value is an error.
    pub fn from_env() -> Result<Limits> {
        match std::env::var("MONO_CAP") {
            Ok(raw) => Limits::parse(&raw),
            Err(_) => Ok(Limits::default()),
        }
    }

    pub fn parse(raw: &str) -> Result<Limits> {
        let bad = || MonoError::Config(format!("invalid cap setting {raw:?}"));
        let mut parts = raw.split(',').map(str::trim);
        let elements = parts
            .next()
            .filter(|s| !s.is_empty())
            .ok_or_else(bad)?
            .parse::<usize>()
            .map_err(|_| bad())?;
        let states = match parts.next() {
            Some(s) => s.parse::<usize>().map_err(|_| bad())?,
            None => Limits::DEFAULT_STATES,
        };
        if parts.next().is_some() || elements == 0 || states == 0 {
            return Err(bad());
        }
        Ok(Limits { elements, states })
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            elements: Limits::DEFAULT_ELEMENTS,
            states: Limits::DEFAULT_STATES,
        }
    }
}
