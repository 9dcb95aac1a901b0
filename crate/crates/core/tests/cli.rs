use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn pathpack(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pathpack")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn p3_has_one_two_edge_path() {
    let g = fixture("p3.txt");
    let (code, out, _) = pathpack(&["paths", "--graph", &g, "--k", "2", "--algo", "mitm"]);
    assert_eq!((code, out.as_str()), (0, "1\n"));
}

#[test]
fn k4_has_three_perfect_matchings() {
    let f = fixture("k4.txt");
    let (code, out, _) = pathpack(&["packings", "--family", &f, "--k", "2", "--algo", "mitm-lowmem"]);
    assert_eq!((code, out.as_str()), (0, "3\n"));
}

#[test]
fn overlong_path_is_a_validation_error() {
    let g = fixture("p3.txt");
    let (code, out, err) = pathpack(&["paths", "--graph", &g, "--k", "5", "--algo", "dp"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
}

#[test]
fn bad_files_are_validation_errors() {
    let cases = [
        ("paths", "--graph", "bad_self_loop.txt", "self-loop"),
        ("paths", "--graph", "bad_duplicate_edge.txt", "duplicate edge"),
        ("packings", "--family", "bad_repeated_element.txt", "repeated"),
        ("packings", "--family", "bad_member_size.txt", "expected 2"),
        ("paths", "--graph", "no_such_file.txt", "no_such_file"),
    ];
    for (cmd, flag, file, needle) in cases {
        let path = fixture(file);
        let (code, _, err) = pathpack(&[cmd, flag, &path, "--k", "1"]);
        assert_eq!(code, 2, "{file}");
        assert!(err.contains(needle), "{file}: {err}");
    }
}

#[test]
fn disjoint_sum_of_fixture_families() {
    let (a, b) = (fixture("alpha.txt"), fixture("beta.txt"));
    let (code, out, _) = pathpack(&["disjoint-sum", "--alpha", &a, "--beta", &b]);
    assert_eq!(code, 0);
    // by alpha member: 3·(1 - 4 + 2) - 2·(1 - 4) + 5·(1 + 2) + 1·(-4)
    assert_eq!(out, "14\n");
}

#[test]
fn stats_report_is_stable_apart_from_timing() {
    let g = fixture("chorded5.txt");
    let args = ["paths", "--graph", &g, "--k", "3", "--stats", "--threads", "2"];
    let strip = |s: String| -> Vec<String> {
        s.lines().filter(|l| !l.starts_with("elapsedMillis=")).map(String::from).collect()
    };
    let (c1, o1, _) = pathpack(&args);
    let (c2, o2, _) = pathpack(&args);
    assert_eq!((c1, c2), (0, 0));
    assert!(o1.contains("elapsedMillis="));
    assert_eq!(strip(o1.clone()), strip(o2));
    assert!(o1.lines().any(|l| l == "problem=paths"));
    assert!(o1.lines().any(|l| l == "m=none"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["paths", "--k", "1"][..],
        &["paths", "--demo", "path:4", "--k", "x"],
        &["paths", "--demo", "path:4", "--k", "1", "--threads", "0"],
        &["packings", "--demo", "complete:4:2", "--k", "1", "--algo", "magic"],
        &[],
    ] {
        assert_eq!(pathpack(args).0, 1, "{args:?}");
    }
}

#[test]
fn brute_guard_exits_three() {
    let (code, _, err) = pathpack(&["paths", "--demo", "complete:17", "--k", "2", "--algo", "brute"]);
    assert_eq!(code, 3);
    assert!(err.contains("limited"));
}
