mod common;

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::Command;

use common::{run, run_with, CASES};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.out"))
}

fn lines(stdout: &[u8]) -> Vec<String> {
    String::from_utf8(stdout.to_vec())
        .unwrap()
        .lines()
        .map(String::from)
        .collect()
}

/// Set `UPDATE_GOLDEN=1` to rewrite the expected files.
#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for case in CASES {
        let out = run(case.args);
        if out.code != case.code {
            failures.push(format!("{}: exit {} (stderr {:?})", case.name, out.code, out.stderr));
            continue;
        }
        if case.code == 2 {
            assert!(out.stdout.is_empty(), "{}: stdout on error", case.name);
            assert_eq!(out.stderr.lines().count(), 1, "{}: {:?}", case.name, out.stderr);
            continue;
        }
        let path = golden_path(case.name);
        if update {
            fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if expected != out.stdout {
            failures.push(format!(
                "{}: output differs\n--- expected\n{}--- actual\n{}",
                case.name,
                String::from_utf8_lossy(&expected),
                String::from_utf8_lossy(&out.stdout)
            ));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_subcommand_has_a_golden_case() {
    let covered: BTreeSet<&str> = CASES.iter().filter(|c| c.code != 2).map(|c| c.args[0]).collect();
    for sub in [
        "info", "greens", "ideal", "cut", "expand", "lemma", "replay", "shadow", "from-dfa", "from-tgen",
    ] {
        assert!(covered.contains(sub), "{sub}");
    }
    for file in ["trivial.mon", "z2.mon", "n3.mon", "flip-flop.mon"] {
        assert!(CASES.iter().any(|c| c.args.iter().any(|a| a.ends_with(file))), "{file}");
    }
}

#[test]
fn documented_examples() {
    let info = lines(&run(&["info", "core/fixtures/n3.mon"]).stdout);
    for want in ["order=3", "aperiodic=true", "minimal_ideal={0}"] {
        assert!(info.iter().any(|l| l == want), "{want}");
    }
    let lemma = run(&["lemma", "--u", "ab,ba", "--v", "a,bb,a"]);
    assert_eq!(lemma.code, 0);
    let lemma = lines(&lemma.stdout);
    for want in ["i=2", "j=3", "offset=1"] {
        assert!(lemma.iter().any(|l| l == want), "{want}");
    }
    let expand = run(&["expand", "core/fixtures/z2.mon", "-n", "2", "--gens", "a=g"]);
    assert_eq!(expand.code, 0);
    let expand = lines(&expand.stdout);
    for want in ["order=3", "eta_aperiodic=true", "eta_fibers=1:2,g:1"] {
        assert!(expand.iter().any(|l| l == want), "{want}");
    }
}

#[test]
fn jobs_do_not_change_output() {
    for case in CASES.iter().filter(|c| c.code != 2) {
        let seq = run(case.args);
        let par = run_with(case.args, &["--jobs", "3"]);
        assert_eq!(seq.code, par.code, "{}", case.name);
        assert_eq!(seq.stdout, par.stdout, "{}", case.name);
    }
}

#[test]
fn seed_from_environment() {
    let args = [
        "replay", "core/fixtures/z2.mon", "-n", "2", "--map", "a=g", "--random", "20", "--format", "machine",
    ];
    let mono = || {
        let mut c = Command::new(env!("CARGO_BIN_EXE_mono"));
        c.args(args).current_dir(common::crates_dir());
        c
    };
    let env = mono().env("MONO_SEED", "11").output().unwrap();
    let flag = mono().env_remove("MONO_SEED").args(["--seed", "11"]).output().unwrap();
    let zero = mono().env_remove("MONO_SEED").output().unwrap();
    assert_eq!(env.stdout, flag.stdout);
    assert_ne!(env.stdout, zero.stdout);
    let bad = mono().env("MONO_SEED", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_mono"))
        .args(["expand", "core/fixtures/flip-flop.mon", "-n", "3", "--gens", "a=s,b=r"])
        .env("MONO_CAP", "512,10")
        .current_dir(common::crates_dir())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn emit_writes_loadable_expansion() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("z2n2.mon");
    let out = run_with(
        &["expand", "core/fixtures/z2.mon", "-n", "2", "--gens", "a=g"],
        &["--emit", target.to_str().unwrap()],
    );
    assert_eq!(out.code, 0);
    let sidecar = fs::read_to_string(dir.path().join("z2n2.map")).unwrap();
    assert!(sidecar.starts_with("arity: 2\ngens: a=g\n"));
    assert!(sidecar.contains("P0 eta=1 rep= profile={(1,1)}"));
    let info = lines(&run(&["info", target.to_str().unwrap()]).stdout);
    assert!(info.iter().any(|l| l == "order=3"));
    assert!(info.iter().any(|l| l == "elements=P0,P1,P2"));
}

#[test]
fn conversions_write_mon_files() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("swap.mon");
    let out = run_with(&["from-dfa", "core/fixtures/swap.dfa"], &["--out", target.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert_eq!(
        fs::read_to_string(&target).unwrap(),
        "elements: 1 a\nidentity: 1\ntable:\n1 a\na 1\n"
    );
}

#[test]
fn human_format_is_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_mono"))
        .args(["info", "core/fixtures/trivial.mon"])
        .current_dir(common::crates_dir())
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("mono info ["));
    assert!(text.contains("(total: "));
    assert!(text.ends_with("elements: 1\nidentity: 1\ntable:\n1\n"));
}
