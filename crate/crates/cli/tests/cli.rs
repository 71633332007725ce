use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperposet"))
        .args(args)
        .env_remove("HYPERPOSET_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn scalar_commands() {
    assert_eq!(stdout(&["chi", "--n", "4"]), "s^2 - 12*s + 20\n");
    assert_eq!(stdout(&["chi", "--n", "3", "--method", "triangular"]), "s - 3\n");
    assert_eq!(stdout(&["mobius-hat", "--n", "7"]), "7776\n");
    assert_eq!(stdout(&["tau", "--n", "3"]), "3*t + 1\n");
    assert_eq!(stdout(&["chi", "--n", "4", "--format", "tsv"]), "4\t20,-12,1\n");
}

#[test]
fn enumerate_lists_and_dumps() {
    let listing = stdout(&["enumerate", "--family", "hypertree", "--n", "4"]);
    assert_eq!(listing.lines().count(), 29);
    let dir = std::env::temp_dir().join(format!("hyperposet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pp3.txt");
    stdout(&["enumerate", "--family", "pointed_partition", "--n", "3", "--dump", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# hyperposet family=pointed_partition n=3 count=10\n"));

    // a cache directory is filled on first use and read afterwards
    let cache = dir.join("cache");
    let with_cache = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_hyperposet"))
            .args(args)
            .env("HYPERPOSET_CACHE_DIR", &cache)
            .output()
            .unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let first = with_cache(&["enumerate", "--family", "forest", "--n", "3"]);
    assert!(cache.join("forest_3.txt").exists());
    assert_eq!(with_cache(&["enumerate", "--family", "forest", "--n", "3"]), first);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn characters_as_json() {
    let text = stdout(&["char", "--which", "HAL", "--degree", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    for which in ["HA", "HAC", "WHPP", "CE", "M"] {
        let text = stdout(&["--order", "4", "char", "--which", which, "--degree", "3"]);
        assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok(), "{which}");
    }
}

#[test]
fn verify_identities_lists_every_check() {
    let text = stdout(&["verify", "--suite", "identities"]);
    for name in ["koszul_comm", "poisson", "koszul_perm_left", "koszul_perm_right", "vertebres", "somme1"] {
        assert!(text.lines().any(|l| l == format!("{name}\tPASS")), "{name} missing in\n{text}");
    }
}

#[test]
fn conjecture_report_is_json() {
    let text = stdout(&["report", "--conjecture", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["dimension_check"], true);
    assert!(v.get("equal").is_some() && v.get("difference").is_some());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["chi", "--n", "4", "--bogus"][..],
        &["chi", "--n", "15"],
        &["enumerate", "--family", "hypertree", "--n", "8"],
        &["enumerate", "--family", "trees", "--n", "3"],
        &["verify", "--suite", "nothing"],
        &["report", "--n", "3"],
        &["--order", "1", "tau", "--n", "3"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let err = String::from_utf8(run(&["enumerate", "--family", "hypertree", "--n", "8"]).stderr).unwrap();
    assert!(err.contains("limit 7"), "{err}");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["char", "--which", "CE", "--degree", "4"];
    assert_eq!(stdout(&args), stdout(&args));
}
