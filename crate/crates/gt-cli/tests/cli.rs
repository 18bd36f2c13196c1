//! End-to-end tests of the binary: exit codes, JSON validity, round trips.

use std::io::Write;
use std::process::Command;

fn gt() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gt"))
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("gt-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{}", std::process::id(), name));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

#[test]
fn order_of_the_coxeter_presentation() {
    let input = write_temp(
        "d10.json",
        r#"{"type":"fp","generators":["a","b"],"relators":["a^2","b^2","(a*b)^5"]}"#,
    );
    let out = gt().args(["order", "--input"]).arg(&input).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "10\n");
}

#[test]
fn describe_catalog_dihedral() {
    let out = gt()
        .args(["describe", "--catalog", "dihedral", "--param", "10"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "D 10\n");
}

#[test]
fn free_group_exceeds_cap_with_exit_three() {
    let input = write_temp(
        "free.json",
        r#"{"type":"fp","generators":["a","b"],"relators":[]}"#,
    );
    let out = gt()
        .args(["coset-enumerate", "--limit", "100", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = gt().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = gt().args(["order"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gt_limit_environment_variable_applies_and_flag_wins() {
    let input = write_temp(
        "free2.json",
        r#"{"type":"fp","generators":["a","b"],"relators":[]}"#,
    );
    // env cap alone trips
    let out = gt()
        .env("GT_LIMIT", "50")
        .args(["coset-enumerate", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // the flag overrides the environment: a satisfiable run stays ok
    let fine = write_temp("c6.json", r#"{"type":"fp","generators":["a"],"relators":["a^6"]}"#);
    let out = gt()
        .env("GT_LIMIT", "2")
        .args(["coset-enumerate", "--limit", "1000", "--input"])
        .arg(&fine)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "6\n");
}

#[test]
fn json_outputs_are_valid_json_for_every_subcommand() {
    let d10_fp = write_temp(
        "d10b.json",
        r#"{"type":"fp","generators":["a","b"],"relators":["a^2","b^2","(a*b)^5"]}"#,
    );
    let pc = write_temp(
        "s4pc.json",
        r#"{"type":"pc","orders":[2,3,2,2],
            "conjugates":{"b^a":"b^2","c^a":"d","d^a":"c","c^b":"d","d^b":"c*d"}}"#,
    );
    let h2in = write_temp(
        "h2.json",
        r#"{"group":{"type":"pc","orders":[2]},"module":{"invariants":[2]}}"#,
    );
    let mat = write_temp(
        "mat.json",
        r#"{"type":"mat","generators":[[["0","-1"],["1","0"]]]}"#,
    );
    let cases: Vec<Vec<&std::ffi::OsStr>> = vec![
        ["describe", "--json", "--catalog", "sl25"].iter().map(|s| s.as_ref()).collect(),
        ["order", "--json", "--catalog", "quaternion8"].iter().map(|s| s.as_ref()).collect(),
        {
            let mut v: Vec<&std::ffi::OsStr> =
                ["orbits", "--json", "--input"].iter().map(|s| s.as_ref()).collect();
            v.push(d10_fp.as_os_str());
            v
        },
        {
            let mut v: Vec<&std::ffi::OsStr> = ["optimal-perm-rep", "--json", "--input"]
                .iter()
                .map(|s| s.as_ref())
                .collect();
            v.push(d10_fp.as_os_str());
            v
        },
        {
            let mut v: Vec<&std::ffi::OsStr> = ["coset-enumerate", "--json", "--input"]
                .iter()
                .map(|s| s.as_ref())
                .collect();
            v.push(d10_fp.as_os_str());
            v
        },
        {
            let mut v: Vec<&std::ffi::OsStr> = ["abelian-invariants", "--json", "--input"]
                .iter()
                .map(|s| s.as_ref())
                .collect();
            v.push(d10_fp.as_os_str());
            v
        },
        {
            let mut v: Vec<&std::ffi::OsStr> =
                ["consistency", "--json", "--input"].iter().map(|s| s.as_ref()).collect();
            v.push(pc.as_os_str());
            v
        },
        ["char-table", "--json", "--catalog", "symmetric", "--param", "4"]
            .iter()
            .map(|s| s.as_ref())
            .collect(),
        {
            let mut v: Vec<&std::ffi::OsStr> =
                ["h2", "--json", "--input"].iter().map(|s| s.as_ref()).collect();
            v.push(h2in.as_os_str());
            v
        },
        {
            let mut v: Vec<&std::ffi::OsStr> =
                ["irreps", "--json", "--q", "13", "--input"].iter().map(|s| s.as_ref()).collect();
            v.push(pc.as_os_str());
            v
        },
        ["generation-check", "--json", "--catalog", "alternating", "--param", "5", "--classes", "3a,5a"]
            .iter()
            .map(|s| s.as_ref())
            .collect(),
        {
            let mut v: Vec<&std::ffi::OsStr> =
                ["orbits", "--json", "--vector", "0,1", "--input"].iter().map(|s| s.as_ref()).collect();
            v.push(mat.as_os_str());
            v
        },
    ];
    for args in cases {
        let out = gt().args(&args).output().unwrap();
        assert!(
            out.status.success(),
            "command {:?} failed: {}",
            args,
            String::from_utf8_lossy(&out.stderr)
        );
        let text = String::from_utf8_lossy(&out.stdout);
        serde_json::from_str::<serde_json::Value>(&text)
            .unwrap_or_else(|e| panic!("invalid JSON from {args:?}: {e}\n{text}"));
    }
}

#[test]
fn emitted_group_json_reparses_to_an_equal_descriptor() {
    let input = write_temp(
        "d10c.json",
        r#"{"type":"fp","generators":["a","b"],"relators":["a^2","b^2","(a*b)^5"]}"#,
    );
    let out = gt()
        .args(["optimal-perm-rep", "--json", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON");
    let group = value["group"].clone();
    let descriptor = gt_cli::descriptor::GroupDescriptor::parse(&group.to_string()).unwrap();
    let reparsed = gt_cli::descriptor::GroupDescriptor::parse(&descriptor.to_json()).unwrap();
    assert_eq!(descriptor, reparsed);
    let g = descriptor.to_perm_group(1000).unwrap();
    assert_eq!(g.order(), 10);
    assert_eq!(g.degree(), 5);
}

#[test]
fn char_table_text_layout_has_header_rows() {
    let out = gt()
        .args(["char-table", "--catalog", "symmetric", "--param", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    // factorized centralizer header: rows labeled by the primes 2 and 3
    assert!(text.lines().any(|l| l.trim_start().starts_with("2 ")));
    assert!(text.lines().any(|l| l.trim_start().starts_with("3 ")));
    // class names and power map
    assert!(text.contains("1a"));
    assert!(text.contains("2P"));
    // dots abbreviate zeros
    assert!(text.contains('.'));
}

#[test]
fn inconsistent_pc_input_reports_cleanly() {
    let pc = write_temp(
        "bad.json",
        r#"{"type":"pc","orders":[2,5],"conjugates":{"b^a":"b^2"}}"#,
    );
    let out = gt().args(["consistency", "--input"]).arg(&pc).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "inconsistent\n");
}
