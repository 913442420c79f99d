use std::fs;
use std::path::Path;
use std::time::Instant;

use mono_core::cut::{cut, match_factorization};
use mono_core::expansion::build_expansion;
use mono_core::format::{dfa_to_transition_monoid, load_tgen, parse_dfa, serialize_expansion, serialize_mon};
use mono_core::greens::GreensData;
use mono_core::ideal::{ideal_generated, ideal_product, minimal_ideal_from, prime_witness};
use mono_core::monoid::{Elem, FiniteMonoid, GeneratorMap};
use mono_core::shadow::{corollary_shadow, proof_replay, theorem_shadow, ReplayResult, Verdict};
use mono_core::words::{lemma_factor, Word};
use mono_core::MonoError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cli::*;
use crate::input::{self, load_monoid, resolve_map, Loaded};
use crate::report::Report;
use crate::{CliError, Context, Outcome};

type Res = Result<Outcome, CliError>;

pub fn dispatch(ctx: &Context, command: &Command) -> Res {
    let start = Instant::now();
    let mut outcome = match command {
        Command::Info(a) => info(ctx, a),
        Command::Greens(a) => greens(ctx, a),
        Command::Ideal(a) => ideal(ctx, a),
        Command::Cut(a) => cut_cmd(ctx, a),
        Command::Expand(a) => expand(ctx, a),
        Command::Lemma(a) => lemma(a),
        Command::Replay(a) => replay(ctx, a),
        Command::Shadow(a) => shadow(ctx, a),
        Command::FromDfa(a) => from_dfa(ctx, a),
        Command::FromTgen(a) => from_tgen(ctx, a),
    }?;
    outcome.report.timing("total", start.elapsed());
    Ok(outcome)
}

fn names(m: &FiniteMonoid, xs: &[Elem]) -> String {
    xs.iter().map(|&x| m.name(x)).collect::<Vec<_>>().join(",")
}

fn classes(m: &FiniteMonoid, cs: &[Vec<Elem>]) -> String {
    cs.iter().map(|c| m.render_set(c)).collect::<Vec<_>>().join(" ")
}

fn words(ws: &[Word]) -> String {
    ws.iter().map(Word::to_string).collect::<Vec<_>>().join(",")
}

fn table_rows(m: &FiniteMonoid) -> String {
    m.elements()
        .map(|x| names(m, &m.elements().map(|y| m.mul(x, y)).collect::<Vec<_>>()))
        .collect::<Vec<_>>()
        .join(";")
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn info(ctx: &Context, a: &FileArg) -> Res {
    let l = load_monoid(&a.file, &ctx.limits)?;
    let m = &l.monoid;
    let gd = GreensData::compute_with(m, ctx.exec);
    let mut r = Report::new("info", &[&l.bytes]);
    r.set("order", m.order())
        .set("identity", m.name(m.identity()))
        .set("elements", names(m, &m.elements().collect::<Vec<_>>()))
        .set("idempotents", m.render_set(&m.idempotents()))
        .set("aperiodic", m.is_aperiodic());
    if let Some(x) = m.aperiodic_counterexample() {
        r.set("aperiodic_counterexample", m.name(x));
    }
    let regular: Vec<Elem> = m.elements().filter(|&x| gd.is_regular(m, x)).collect();
    let groups: Vec<Elem> = m.elements().filter(|&x| gd.is_group_element(m, x)).collect();
    r.set("minimal_ideal", m.render_set(minimal_ideal_from(m, &gd).elements()))
        .set("regular", m.render_set(&regular))
        .set("group_elements", m.render_set(&groups))
        .set("j_classes", gd.j_class_count())
        .set("h_trivial", gd.is_h_trivial());
    if let Some(g) = &l.natural_map {
        r.set("map", g.render(m));
    }
    r.body(serialize_mon(m));
    Ok(Outcome::new(r, true))
}

fn greens(ctx: &Context, a: &FileArg) -> Res {
    let l = load_monoid(&a.file, &ctx.limits)?;
    let m = &l.monoid;
    let gd = GreensData::compute_with(m, ctx.exec);
    let js = gd.j_classes();
    let mut order = Vec::new();
    for (c, below) in js.iter().enumerate() {
        for (d, above) in js.iter().enumerate() {
            if c != d && gd.j_leq(c, d) {
                order.push(format!("{}<{}", m.render_set(below), m.render_set(above)));
            }
        }
    }
    let mut r = Report::new("greens", &[&l.bytes]);
    r.set("r_classes", classes(m, &gd.r_classes()))
        .set("l_classes", classes(m, &gd.l_classes()))
        .set("j_classes", classes(m, &js))
        .set("h_classes", classes(m, &gd.h_classes()))
        .set("j_order", order.join(" "))
        .set("h_trivial", gd.is_h_trivial());
    Ok(Outcome::new(r, true))
}

fn ideal(ctx: &Context, a: &IdealArgs) -> Res {
    let l = load_monoid(&a.file, &ctx.limits)?;
    let m = &l.monoid;
    let gens = input::parse_elements(m, &a.gen)?;
    let i = ideal_generated(m, &gens)?;
    let args = format!("gen={};times={:?};expect={:?}", names(m, &gens), a.times, a.expect);
    let mut r = Report::new("ideal", &[&l.bytes, args.as_bytes()]);
    let witness = prime_witness(m, &i);
    let idempotent = ideal_product(m, &i, &i) == i;
    r.set("ideal", m.render_set(i.elements()))
        .set("size", i.len())
        .set("idempotent", idempotent)
        .set("prime", witness.is_none());
    if let Some((x, y)) = witness {
        r.set("prime_witness", format!("({},{})", m.name(x), m.name(y)));
    }
    let mut ok = true;
    if let Some(times) = &a.times {
        let j = ideal_generated(m, &input::parse_elements(m, times)?)?;
        let product = ideal_product(m, &i, &j);
        let meet = i.intersection(&j);
        let inside = product.elements().iter().all(|x| meet.contains(x));
        r.set("other", m.render_set(j.elements()))
            .set("product", m.render_set(product.elements()))
            .set("intersection", m.render_set(&meet))
            .set("product_in_intersection", inside);
        ok &= inside;
    }
    ok &= match a.expect {
        None => true,
        Some(Expect::Prime) => witness.is_none(),
        Some(Expect::NotPrime) => witness.is_some(),
        Some(Expect::Idempotent) => idempotent,
    };
    Ok(Outcome::new(r, ok))
}

fn cut_cmd(ctx: &Context, a: &CutArgs) -> Res {
    let l = load_monoid(&a.file, &ctx.limits)?;
    let m = &l.monoid;
    let g = resolve_map(&l, a.map.as_deref())?;
    let w = Word::from(a.word.as_str());
    let p = cut(m, &g, &w, a.arity)?;
    let args = format!("map={};word={w};n={};targets={:?}", g.render(m), a.arity, a.targets);
    let mut r = Report::new("cut", &[&l.bytes, args.as_bytes()]);
    r.set("word", &w)
        .set("arity", a.arity)
        .set("value", m.name(g.eval(m, w.letters())?))
        .set("size", p.len())
        .set("profile", p.render(m));
    let mut ok = true;
    if let Some(list) = &a.targets {
        let targets = input::parse_elements(m, list)?;
        if targets.len() != a.arity {
            return Err(CliError::Input(format!(
                "--targets lists {} elements but -n is {}",
                targets.len(),
                a.arity
            )));
        }
        r.set("targets", names(m, &targets));
        match match_factorization(m, &g, &w, &targets)? {
            Some(f) => {
                r.set("match", f.parts().iter().map(Word::to_string).collect::<Vec<_>>().join("|"));
            }
            None => {
                r.set("match", "none");
                ok = false;
            }
        }
    }
    Ok(Outcome::new(r, ok))
}

fn expand(ctx: &Context, a: &ExpandArgs) -> Res {
    let l = load_monoid(&a.file, &ctx.limits)?;
    let m = &l.monoid;
    let g = resolve_map(&l, a.gens.as_deref())?;
    let built = Instant::now();
    let e = build_expansion(m, &g, a.arity, &ctx.limits, ctx.exec)?;
    let build_time = built.elapsed();
    let args = format!("gens={};n={};table={}", g.render(m), a.arity, a.table);
    let mut r = Report::new("expand", &[&l.bytes, args.as_bytes()]);
    let fibers = e.fiber_sizes();
    let fibers = g
        .generated()
        .iter()
        .map(|&x| format!("{}:{}", m.name(x), fibers[x]))
        .collect::<Vec<_>>()
        .join(",");
    let eta_bad = e.eta_aperiodic_counterexample();
    let morphism_bad = e.eta_morphism_failure(ctx.exec);
    let inherits = !m.is_aperiodic() || e.is_aperiodic();
    r.set("order", e.order())
        .set("arity", a.arity)
        .set("gens", g.render(m))
        .set("eta_fibers", fibers)
        .set("eta_aperiodic", eta_bad.is_none())
        .set("eta_morphism", morphism_bad.is_none())
        .set("aperiodic", e.is_aperiodic())
        .set("base_aperiodic", m.is_aperiodic())
        .set("generating", e.is_generating());
    if let Some(x) = eta_bad {
        r.set("eta_counterexample", format!("P{x}"));
    }
    if let Some((x, y)) = morphism_bad {
        r.set("eta_morphism_failure", format!("P{x},P{y}"));
    }
    r.timing("build", build_time);
    if a.table || a.emit.is_some() {
        let table = e.to_monoid(&ctx.limits)?;
        if a.table {
            r.set("table", table_rows(&table));
        }
        if let Some(path) = &a.emit {
            let (mon, sidecar) = serialize_expansion(&e, &ctx.limits)?;
            write_file(path, &mon)?;
            write_file(&path.with_extension("map"), &sidecar)?;
        }
        if a.table {
            r.body(serialize_mon(&table));
        }
    }
    Ok(Outcome::new(r, eta_bad.is_none() && morphism_bad.is_none() && inherits))
}

fn lemma(a: &LemmaArgs) -> Res {
    let us = input::parse_words(&a.u);
    let vs = input::parse_words(&a.v);
    let witness = lemma_factor(&us, &vs)?;
    let args = format!("u={};v={}", words(&us), words(&vs));
    let mut r = Report::new("lemma", &[args.as_bytes()]);
    let valid = witness.verify(&us, &vs);
    r.set("i", witness.i)
        .set("j", witness.j)
        .set("offset", witness.offset)
        .set("u_i", &us[witness.i - 1])
        .set("v_j", &vs[witness.j - 1])
        .set("valid", valid);
    Ok(Outcome::new(r, valid))
}

/// The replay postconditions, or the name of the first that fails.
fn replay_failure(m: &FiniteMonoid, g: &GeneratorMap, us: &[Word], res: &ReplayResult) -> Option<&'static str> {
    let vs = res.factorization.parts();
    if Word::concat(vs) != Word::concat(us) {
        return Some("concatenation");
    }
    let hit = vs
        .iter()
        .zip(&res.targets)
        .all(|(v, &t)| g.eval(m, v.letters()).is_ok_and(|x| x == t));
    if !hit {
        return Some("targets");
    }
    if !res.witness.verify(us, vs) {
        return Some("witness");
    }
    if !res.member {
        return Some("membership");
    }
    None
}

fn replay(ctx: &Context, a: &ReplayArgs) -> Res {
    let l = load_monoid(&a.file, &ctx.limits)?;
    match a.random {
        Some(count) => replay_random(ctx, a, &l, count),
        None => replay_explicit(a, &l),
    }
}

fn replay_explicit(a: &ReplayArgs, l: &Loaded) -> Res {
    let m = &l.monoid;
    let g = resolve_map(l, a.map.as_deref())?;
    let us = input::parse_words(a.u.as_deref().unwrap_or_default());
    let ws = input::parse_words(a.w.as_deref().unwrap_or_default());
    if ws.len() != a.arity {
        return Err(CliError::Input(format!(
            "-n is {} but --w has {} parts",
            a.arity,
            ws.len()
        )));
    }
    let args = format!("map={};n={};u={};w={}", g.render(m), a.arity, words(&us), words(&ws));
    let mut r = Report::new("replay", &[&l.bytes, args.as_bytes()]);
    let res = match proof_replay(m, &g, &us, &ws) {
        Ok(res) => res,
        Err(MonoError::ProfileMismatch { .. }) => {
            r.set("hypothesis", false);
            return Ok(Outcome::new(r, false));
        }
        Err(e) => return Err(e.into()),
    };
    let failure = replay_failure(m, &g, &us, &res);
    r.set("hypothesis", true)
        .set("targets", names(m, &res.targets))
        .set("v", words(res.factorization.parts()))
        .set("i", res.witness.i)
        .set("j", res.witness.j)
        .set("offset", res.witness.offset)
        .set("u_value", m.name(res.u_value))
        .set("w_value", m.name(res.w_value))
        .set("member", res.member)
        .set("postconditions", failure.unwrap_or("hold"));
    Ok(Outcome::new(r, failure.is_none()))
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &[char], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters: String = (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
    Word::from(letters.as_str())
}

fn random_split(rng: &mut ChaCha8Rng, w: &Word, parts: usize) -> Vec<Word> {
    let mut cuts: Vec<usize> = (1..parts).map(|_| rng.gen_range(0..=w.len())).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut start = 0;
    for c in cuts.into_iter().chain(std::iter::once(w.len())) {
        out.push(w.slice(start, c));
        start = c;
    }
    out
}

/// Samples `u`, then searches a few random `w` with the same profile
/// (falling back to `u` itself), splits both at random and replays.
fn replay_random(ctx: &Context, a: &ReplayArgs, l: &Loaded, count: usize) -> Res {
    const TRIES: usize = 64;
    let m = &l.monoid;
    let g = resolve_map(l, a.map.as_deref())?;
    let n = a.arity;
    if n == 0 {
        return Err(MonoError::ZeroArity.into());
    }
    let args = format!("map={};n={n};random={count};len={};seed={}", g.render(m), a.len, ctx.seed);
    let mut r = Report::new("replay", &[&l.bytes, args.as_bytes()]);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let (mut distinct, mut failures, mut first) = (0usize, 0usize, None);
    for _ in 0..count {
        let x = random_word(&mut rng, g.alphabet(), a.len);
        let px = cut(m, &g, &x, n)?;
        let mut y = x.clone();
        for _ in 0..TRIES {
            let cand = random_word(&mut rng, g.alphabet(), a.len);
            if cand != x && cut(m, &g, &cand, n)? == px {
                y = cand;
                distinct += 1;
                break;
            }
        }
        let parts = rng.gen_range(1..=n);
        let us = random_split(&mut rng, &x, parts);
        let ws = random_split(&mut rng, &y, n);
        let res = proof_replay(m, &g, &us, &ws)?;
        if let Some(what) = replay_failure(m, &g, &us, &res) {
            failures += 1;
            first.get_or_insert(format!("{what}: u={} w={}", words(&us), words(&ws)));
        }
    }
    r.set("seed", ctx.seed)
        .set("instances", count)
        .set("distinct_words", distinct)
        .set("failures", failures);
    if let Some(f) = first {
        r.set("first_failure", f);
    }
    Ok(Outcome::new(r, failures == 0))
}

fn shadow(ctx: &Context, a: &ShadowArgs) -> Res {
    let l = load_monoid(&a.file, &ctx.limits)?;
    let m = &l.monoid;
    let args = format!("map={:?};alphas={:?};ideals={:?}", a.map, a.alphas, a.ideals);
    let mut r = Report::new("shadow", &[&l.bytes, args.as_bytes()]);
    let cor = corollary_shadow(m, ctx.exec);
    r.set("corollary", if cor.holds() { "holds" } else { "violated" })
        .set("corollary_checked", cor.checked)
        .set("corollary_hypothesis_met", cor.hypothesis_met);
    if let Some(c) = cor.counterexamples.first() {
        r.set(
            "corollary_counterexample",
            format!("a={} n={} lambda={}", m.name(c.a), c.n, c.lambda),
        );
    }
    let mut ok = cor.holds();
    if let (Some(alphas), Some(ideals)) = (&a.alphas, &a.ideals) {
        let g = resolve_map(&l, a.map.as_deref())?;
        let alphas = input::parse_alphas(alphas)?;
        let ideals = input::parse_ideals(ideals)?;
        let t = theorem_shadow(m, &g, &alphas, &ideals)?;
        let membership = t
            .membership
            .iter()
            .map(|row| row.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>())
            .collect::<Vec<_>>()
            .join(" ");
        r.set("alpha_values", names(m, &t.alpha_values))
            .set(
                "ideals",
                t.ideals.iter().map(|i| m.render_set(i.elements())).collect::<Vec<_>>().join(" "),
            )
            .set("product", m.name(t.product))
            .set("product_ideal", m.render_set(t.product_ideal.elements()))
            .set("membership", membership);
        match t.verdict {
            Verdict::Vacuous => {
                r.set("verdict", "vacuous");
            }
            Verdict::Holds { i, j } => {
                r.set("verdict", "holds").set("i", i).set("j", j);
            }
            Verdict::Violated => {
                r.set("verdict", "violated");
                ok = false;
            }
        }
    }
    Ok(Outcome::new(r, ok))
}

fn converted(command: &'static str, a: &ConvertArgs, bytes: &[u8], m: &FiniteMonoid, g: Option<&GeneratorMap>) -> Res {
    let mut r = Report::new(command, &[bytes]);
    r.set("order", m.order())
        .set("elements", names(m, &m.elements().collect::<Vec<_>>()))
        .set("aperiodic", m.is_aperiodic())
        .set("table", table_rows(m));
    if let Some(g) = g {
        r.set("map", g.render(m));
    }
    let text = serialize_mon(m);
    if let Some(out) = &a.out {
        write_file(out, &text)?;
    }
    r.body(text);
    Ok(Outcome::new(r, true))
}

fn text_of<'a>(path: &Path, bytes: &'a [u8]) -> Result<&'a str, CliError> {
    std::str::from_utf8(bytes).map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))
}

fn located(path: &Path) -> impl Fn(MonoError) -> CliError + '_ {
    move |e| CliError::Input(format!("{}: {e}", path.display()))
}

fn from_dfa(ctx: &Context, a: &ConvertArgs) -> Res {
    let bytes = input::read(&a.file)?;
    let dfa = parse_dfa(text_of(&a.file, &bytes)?).map_err(located(&a.file))?;
    let (m, g) = dfa_to_transition_monoid(&dfa, &ctx.limits).map_err(located(&a.file))?;
    converted("from-dfa", a, &bytes, &m, Some(&g))
}

fn from_tgen(ctx: &Context, a: &ConvertArgs) -> Res {
    let bytes = input::read(&a.file)?;
    let (m, images) = load_tgen(text_of(&a.file, &bytes)?, &ctx.limits).map_err(located(&a.file))?;
    let mut out = converted("from-tgen", a, &bytes, &m, None)?;
    let gens = &m.words().expect("generated monoids carry words").generators;
    let listing = gens
        .iter()
        .zip(&images)
        .map(|(name, &x)| format!("{name}={}", m.name(x)))
        .collect::<Vec<_>>()
        .join(",");
    out.report.set("generators", listing);
    Ok(out)
}
