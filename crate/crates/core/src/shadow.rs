//! Finite-monoid shadows of statements about free profinite monoids.
//!
//! * [`corollary_shadow`]: `a^n = a^(n+λ)` with integer `λ >= 1` forces `a^n`
//!   into a subgroup. The conclusion is checked at `a^n`, not at `a`; the step
//!   back to `a` needs primality of regular ideals, which finite monoids lack.
//! * [`theorem_shadow`]: if `α_1⋯α_m ∈ I_1⋯I_n` with `m <= n`, is some
//!   `α_i ∈ I_j`? In a finite monoid the answer can be no.
//! * [`proof_replay`]: the word-level core of the argument, run on explicit
//!   words whose profiles agree.

use crate::cut::{cut, match_factorization};
use crate::ideal::{ideal_generated, ideal_product_all, Ideal};
use crate::monoid::{Elem, FiniteMonoid, GeneratorMap};
use crate::term::OmegaTerm;
use crate::words::{lemma_factor, FactorWitness, Factorization, Word};
use crate::{Exec, MonoError, Result};

/// A triple `(a, n, λ)` with `a^n = a^(n+λ)` but `a^n` not a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PowerCounterexample {
    pub a: Elem,
    pub n: u64,
    pub lambda: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    /// Triples examined.
    pub checked: usize,
    /// Triples satisfying `a^n = a^(n+λ)`.
    pub hypothesis_met: usize,
    /// Sorted.
    pub counterexamples: Vec<PowerCounterexample>,
}

impl CorollaryReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Sweeps `a ∈ M`, `1 <= n <= |M|+1`, `1 <= λ <= |M|`.
pub fn corollary_shadow(m: &FiniteMonoid, exec: Exec) -> CorollaryReport {
    let order = m.order() as u64;
    let per_element = exec.map_range(m.elements(), |a| {
        let mut checked = 0;
        let mut met = 0;
        let mut bad = Vec::new();
        for n in 1..=order + 1 {
            let an = m.power(a, n);
            for lambda in 1..=order {
                checked += 1;
                if an == m.power(a, n + lambda) {
                    met += 1;
                    if !m.is_group_element(an) {
                        bad.push(PowerCounterexample { a, n, lambda });
                    }
                }
            }
        }
        (checked, met, bad)
    });
    let mut report = CorollaryReport {
        checked: 0,
        hypothesis_met: 0,
        counterexamples: Vec::new(),
    };
    for (checked, met, bad) in per_element {
        report.checked += checked;
        report.hypothesis_met += met;
        report.counterexamples.extend(bad);
    }
    report.counterexamples.sort_unstable();
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The product does not lie in `I_1⋯I_n`; nothing to check.
    Vacuous,
    /// `α_i ∈ I_j` (1-based), least `j` then least `i`.
    Holds { i: usize, j: usize },
    /// The product lies in `I_1⋯I_n` but no `α_i` lies in any `I_j`.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremShadow {
    pub alpha_values: Vec<Elem>,
    pub ideals: Vec<Ideal>,
    pub product: Elem,
    pub product_ideal: Ideal,
    /// `membership[i][j]` iff `α_i ∈ I_j` (0-based).
    pub membership: Vec<Vec<bool>>,
    pub verdict: Verdict,
}

pub fn theorem_shadow(
    m: &FiniteMonoid,
    g: &GeneratorMap,
    alphas: &[OmegaTerm],
    ideal_gens: &[Vec<OmegaTerm>],
) -> Result<TheoremShadow> {
    let (mm, nn) = (alphas.len(), ideal_gens.len());
    if mm == 0 {
        return Err(MonoError::NoParts);
    }
    if mm > nn {
        return Err(MonoError::TooManyParts { m: mm, n: nn });
    }
    let alpha_values = alphas
        .iter()
        .map(|t| t.evaluate(m, g))
        .collect::<Result<Vec<_>>>()?;
    let ideals = ideal_gens
        .iter()
        .map(|gens| {
            let values = gens
                .iter()
                .map(|t| t.evaluate(m, g))
                .collect::<Result<Vec<_>>>()?;
            ideal_generated(m, &values)
        })
        .collect::<Result<Vec<_>>>()?;
    let product = m.product(alpha_values.iter().copied());
    let product_ideal = ideal_product_all(m, &ideals).expect("at least one ideal");
    let membership: Vec<Vec<bool>> = alpha_values
        .iter()
        .map(|&a| ideals.iter().map(|i| i.contains(a)).collect())
        .collect();
    let verdict = if !product_ideal.contains(product) {
        Verdict::Vacuous
    } else {
        (0..nn)
            .find_map(|j| (0..mm).find(|&i| membership[i][j]).map(|i| Verdict::Holds { i: i + 1, j: j + 1 }))
            .unwrap_or(Verdict::Violated)
    };
    Ok(TheoremShadow {
        alpha_values,
        ideals,
        product,
        product_ideal,
        membership,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayResult {
    /// `([w_1]_M, …, [w_n]_M)`.
    pub targets: Vec<Elem>,
    /// `u_1⋯u_m = v_1⋯v_n` with `[v_j]_M = [w_j]_M`.
    pub factorization: Factorization,
    pub witness: FactorWitness,
    /// `[u_i]_M` for the witness `i`.
    pub u_value: Elem,
    /// `[w_j]_M` for the witness `j`.
    pub w_value: Elem,
    /// `[u_i]_M ∈ M·[w_j]_M·M`.
    pub member: bool,
}

/// Replays the finite core of the ideal-product argument.
///
/// Requires `cut_n(u_1⋯u_m) = cut_n(w_1⋯w_n)` where `n = |ws|`. A
/// factorization of `u_1⋯u_m` with the parts of `w` as targets then exists;
/// the least one is taken, and the factor lemma places some `v_j` inside
/// some `u_i`, which transfers `[w_j]` ideal membership to `[u_i]`.
pub fn proof_replay(m: &FiniteMonoid, g: &GeneratorMap, us: &[Word], ws: &[Word]) -> Result<ReplayResult> {
    let (mm, n) = (us.len(), ws.len());
    if mm == 0 {
        return Err(MonoError::NoParts);
    }
    if mm > n {
        return Err(MonoError::TooManyParts { m: mm, n });
    }
    let u = Word::concat(us);
    let w = Word::concat(ws);
    if cut(m, g, &u, n)? != cut(m, g, &w, n)? {
        return Err(MonoError::ProfileMismatch { n });
    }
    let targets = ws
        .iter()
        .map(|p| g.eval(m, p.letters()))
        .collect::<Result<Vec<_>>>()?;
    let factorization = match_factorization(m, g, &u, &targets)?
        .expect("equal profiles contain the target tuple");
    let witness = lemma_factor(us, factorization.parts())?;
    let u_value = g.eval(m, us[witness.i - 1].letters())?;
    let w_value = targets[witness.j - 1];
    let member = ideal_generated(m, &[w_value])?.contains(u_value);
    Ok(ReplayResult {
        targets,
        factorization,
        witness,
        u_value,
        w_value,
        member,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::term::parse_term;

    fn terms(src: &[&str]) -> Vec<OmegaTerm> {
        src.iter().map(|s| parse_term(s).unwrap()).collect()
    }

    fn words(src: &[&str]) -> Vec<Word> {
        src.iter().map(|&s| Word::from(s)).collect()
    }

    #[test]
    fn corollary_on_z2_and_n3() {
        let r = corollary_shadow(&catalog::z2(), Exec::Sequential);
        assert!(r.holds());
        assert_eq!(r.checked, 2 * 3 * 2);
        let r = corollary_shadow(&catalog::n3(), Exec::Sequential);
        assert!(r.holds());
        // a^1 never recurs; a^2 = a^3 = 0
        assert!(r.hypothesis_met > 0);
    }

    #[test]
    fn theorem_fails_finitely_in_n3() {
        let m = catalog::n3();
        let g = GeneratorMap::from_names(&m, &[('a', "a")]).unwrap();
        let alphas = terms(&["a", "a"]);
        let ideals = vec![terms(&["a^w"]), terms(&["a^w"])];
        let s = theorem_shadow(&m, &g, &alphas, &ideals).unwrap();
        assert_eq!(s.product, 2);
        assert_eq!(s.product_ideal.elements(), &[2]);
        assert_eq!(s.membership, vec![vec![false, false], vec![false, false]]);
        assert_eq!(s.verdict, Verdict::Violated);
    }

    #[test]
    fn theorem_holds_by_construction() {
        let m = catalog::flip_flop();
        let g = GeneratorMap::from_names(&m, &[('a', "s"), ('b', "r")]).unwrap();
        let s = theorem_shadow(&m, &g, &terms(&["a", "b"]), &[terms(&["a"]), terms(&["b"])]).unwrap();
        assert_eq!(s.verdict, Verdict::Holds { i: 1, j: 1 });
    }

    #[test]
    fn theorem_single_ideal() {
        let m = catalog::n3();
        let g = GeneratorMap::from_names(&m, &[('a', "a")]).unwrap();
        let s = theorem_shadow(&m, &g, &terms(&["a^2"]), &[terms(&["a"])]).unwrap();
        assert_eq!(s.verdict, Verdict::Holds { i: 1, j: 1 });
        let one = GeneratorMap::from_names(&m, &[('a', "a"), ('e', "1")]).unwrap();
        let s = theorem_shadow(&m, &one, &terms(&["e"]), &[terms(&["a"])]).unwrap();
        assert_eq!(s.verdict, Verdict::Vacuous);
    }

    #[test]
    fn theorem_errors() {
        let m = catalog::n3();
        let g = GeneratorMap::from_names(&m, &[('a', "a")]).unwrap();
        assert_eq!(
            theorem_shadow(&m, &g, &terms(&["a", "a"]), &[terms(&["a"])]),
            Err(MonoError::TooManyParts { m: 2, n: 1 })
        );
        assert_eq!(
            theorem_shadow(&m, &g, &terms(&["q"]), &[terms(&["a"])]),
            Err(MonoError::UnknownLetter('q'))
        );
        assert!(theorem_shadow(&m, &g, &terms(&["a"]), &[vec![]]).is_err());
    }

    #[test]
    fn replay_z2_by_hand() {
        let m = catalog::z2();
        let g = GeneratorMap::from_names(&m, &[('a', "g")]).unwrap();
        let r = proof_replay(&m, &g, &words(&["aa", "aa"]), &words(&["a", "aaa"])).unwrap();
        assert_eq!(r.targets, vec![1, 1]);
        assert_eq!(r.factorization.parts(), &words(&["a", "aaa"])[..]);
        assert_eq!(r.witness, FactorWitness { i: 1, j: 1, offset: 0 });
        assert_eq!(r.u_value, 0);
        assert!(r.member);
    }

    #[test]
    fn replay_identical_words() {
        let m = catalog::flip_flop();
        let g = GeneratorMap::from_names(&m, &[('a', "s"), ('b', "r")]).unwrap();
        let us = words(&["ab", "ba"]);
        let r = proof_replay(&m, &g, &us, &us).unwrap();
        assert_eq!(r.factorization.parts(), &us[..]);
        assert!(r.witness.verify(&us, r.factorization.parts()));
        assert!(r.member);
    }

    #[test]
    fn replay_rejects_profile_mismatch() {
        let m = catalog::z2();
        let g = GeneratorMap::from_names(&m, &[('a', "g")]).unwrap();
        assert_eq!(
            proof_replay(&m, &g, &words(&["a"]), &words(&["aa", ""])),
            Err(MonoError::ProfileMismatch { n: 2 })
        );
        assert_eq!(
            proof_replay(&m, &g, &words(&["a", "a"]), &words(&["aa"])),
            Err(MonoError::TooManyParts { m: 2, n: 1 })
        );
    }
}
