#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// A CLI invocation with a golden stdout file and an expected exit code.
/// Paths are relative to the `crates/` directory.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

const fn case(name: &'static str, code: i32, args: &'static [&'static str]) -> Case {
    Case { name, args, code }
}

pub const CASES: &[Case] = &[
    case("info_trivial", 0, &["info", "core/fixtures/trivial.mon"]),
    case("info_z2", 0, &["info", "core/fixtures/z2.mon"]),
    case("info_n3", 0, &["info", "core/fixtures/n3.mon"]),
    case("info_flip_flop", 0, &["info", "core/fixtures/flip-flop.mon"]),
    case("info_swap_dfa", 0, &["info", "core/fixtures/swap.dfa"]),
    case("greens_z2", 0, &["greens", "core/fixtures/z2.mon"]),
    case("greens_n3", 0, &["greens", "core/fixtures/n3.mon"]),
    case("greens_flip_flop", 0, &["greens", "core/fixtures/flip-flop.mon"]),
    case("greens_resets_dfa", 0, &["greens", "core/fixtures/resets.dfa"]),
    case(
        "ideal_n3_not_prime",
        0,
        &["ideal", "core/fixtures/n3.mon", "--gen", "0", "--times", "a", "--expect", "not-prime"],
    ),
    case("ideal_n3_expect_prime", 1, &["ideal", "core/fixtures/n3.mon", "--gen", "0", "--expect", "prime"]),
    case(
        "ideal_flip_flop",
        0,
        &["ideal", "core/fixtures/flip-flop.mon", "--gen", "s", "--times", "r", "--expect", "idempotent"],
    ),
    case("ideal_trivial", 0, &["ideal", "core/fixtures/trivial.mon", "--gen", "1", "--expect", "prime"]),
    case(
        "cut_z2_match",
        0,
        &["cut", "core/fixtures/z2.mon", "--map", "a=g", "--word", "aaaa", "-n", "2", "--targets", "g,g"],
    ),
    case(
        "cut_n3_no_match",
        1,
        &["cut", "core/fixtures/n3.mon", "--map", "a=a", "--word", "a", "-n", "1", "--targets", "0"],
    ),
    case(
        "cut_flip_flop",
        0,
        &["cut", "core/fixtures/flip-flop.mon", "--map", "a=s,b=r", "--word", "abba", "-n", "3"],
    ),
    case("cut_trivial_empty", 0, &["cut", "core/fixtures/trivial.mon", "--map", "a=1", "--word", "", "-n", "2"]),
    case("expand_z2", 0, &["expand", "core/fixtures/z2.mon", "-n", "2", "--gens", "a=g", "--table"]),
    case("expand_trivial", 0, &["expand", "core/fixtures/trivial.mon", "-n", "3", "--gens", "a=1"]),
    case("expand_n3", 0, &["expand", "core/fixtures/n3.mon", "-n", "2", "--gens", "a=a"]),
    case("expand_flip_flop", 0, &["expand", "core/fixtures/flip-flop.mon", "-n", "3", "--gens", "a=s,b=r"]),
    case("expand_resets_dfa", 0, &["expand", "core/fixtures/resets.dfa", "-n", "2"]),
    case("lemma_example", 0, &["lemma", "--u", "ab,ba", "--v", "a,bb,a"]),
    case("lemma_empty_parts", 0, &["lemma", "--u", "ab,,ba", "--v", "a,b,,ba"]),
    case(
        "replay_z2",
        0,
        &["replay", "core/fixtures/z2.mon", "-n", "2", "--map", "a=g", "--u", "aa,aa", "--w", "a,aaa"],
    ),
    case(
        "replay_flip_flop",
        0,
        &["replay", "core/fixtures/flip-flop.mon", "-n", "2", "--map", "a=s,b=r", "--u", "ab,ba", "--w", "a,bba"],
    ),
    case(
        "replay_mismatch",
        1,
        &["replay", "core/fixtures/n3.mon", "-n", "2", "--map", "a=a", "--u", "a", "--w", "a,a"],
    ),
    case(
        "replay_random",
        0,
        &["replay", "core/fixtures/flip-flop.mon", "-n", "3", "--map", "a=s,b=r", "--random", "100", "--seed", "7"],
    ),
    case(
        "shadow_n3_violated",
        1,
        &["shadow", "core/fixtures/n3.mon", "--map", "a=a", "--alphas", "a;a", "--ideals", "a^w | a^w"],
    ),
    case(
        "shadow_z2_holds",
        0,
        &["shadow", "core/fixtures/z2.mon", "--map", "a=g", "--alphas", "a", "--ideals", "a"],
    ),
    case(
        "shadow_flip_flop_holds",
        0,
        &["shadow", "core/fixtures/flip-flop.mon", "--map", "a=s,b=r", "--alphas", "a;a", "--ideals", "b|b"],
    ),
    case(
        "shadow_n3_vacuous",
        0,
        &["shadow", "core/fixtures/n3.mon", "--map", "a=a,b=1", "--alphas", "b", "--ideals", "a"],
    ),
    case("shadow_trivial", 0, &["shadow", "core/fixtures/trivial.mon"]),
    case("from_dfa_swap", 0, &["from-dfa", "core/fixtures/swap.dfa"]),
    case("from_dfa_resets", 0, &["from-dfa", "core/fixtures/resets.dfa"]),
    case("from_tgen_flip_flop", 0, &["from-tgen", "core/fixtures/flip-flop.tgen"]),
    case("error_missing_file", 2, &["info", "core/fixtures/missing.mon"]),
    case("error_not_associative", 2, &["info", "cli/tests/fixtures/broken.mon"]),
    case("error_partial_dfa", 2, &["from-dfa", "cli/tests/fixtures/partial.dfa"]),
    case("error_replay_arity", 2, &["replay", "core/fixtures/z2.mon", "-n", "3", "--map", "a=g", "--u", "a", "--w", "a"]),
    case("error_bad_term", 2, &["shadow", "core/fixtures/n3.mon", "--map", "a=a", "--alphas", "a^0", "--ideals", "a"]),
    case("error_unknown_element", 2, &["ideal", "core/fixtures/n3.mon", "--gen", "q"]),
];

pub fn crates_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("..")
}

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

/// Runs the built binary in machine format with a clean environment.
pub fn run(args: &[&str]) -> Run {
    run_with(args, &[])
}

pub fn run_with(args: &[&str], extra: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_mono"))
        .args(args)
        .args(["--format", "machine"])
        .args(extra)
        .current_dir(crates_dir())
        .env_remove("MONO_SEED")
        .env_remove("MONO_CAP")
        .output()
        .expect("spawn mono");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}
