// SPDX-License-Identifier: Apache-2.0

use std::path::Path;
use std::process::{Command, Output};

use ecclab_cli::{run, Command as Cmd, Outcome, RunSpec};

fn ecclab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecclab"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_then_verify_every_gadget() {
    let dir = tempfile::tempdir().unwrap();
    let kinds = [
        "roundtrip-radius",
        "radius-23",
        "source-radius",
        "max-radius",
        "min-radius-dag",
        "median",
        "min-diameter-dag",
        "min-diameter-weighted",
        "diameter-23",
        "roundtrip-diameter",
        "all-ecc",
    ];
    for (i, kind) in kinds.iter().enumerate() {
        let file = format!("{kind}.gr");
        let seed = i.to_string();
        let o = ecclab(
            dir.path(),
            &[
                "gen", "--kind", kind, "--nA", "6", "--nB", "5", "--d", "4", "--seed", &seed, "-o", &file,
            ],
        );
        assert!(o.status.success(), "{kind}: {}", String::from_utf8_lossy(&o.stderr));
        let o = ecclab(dir.path(), &["verify", "-i", &file]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }
}

#[test]
fn roundtrip_radius_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = ecclab(
        dir.path(),
        &[
            "gen",
            "--kind",
            "roundtrip-radius",
            "--nA",
            "20",
            "--nB",
            "20",
            "--d",
            "6",
            "--seed",
            "1",
            "-o",
            "g.gr",
        ],
    );
    let line = stdout(&o);
    assert!(
        line.contains("yes_value = 4") && line.contains("no_bound >= 8"),
        "{line}"
    );
    let side = std::fs::read_to_string(dir.path().join("g.json")).unwrap();
    assert!(side.contains("\"roundtrip\""));
}

#[test]
fn tampered_sidecar_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    ecclab(dir.path(), &["gen", "--kind", "radius-23", "--seed", "4", "-o", "g.gr"]);
    let side = std::fs::read_to_string(dir.path().join("g.json")).unwrap();
    let bad = side
        .replace("\"exact\": 2", "\"exact\": 7")
        .replace("\"at_least\": 3", "\"at_least\": 9");
    assert_ne!(bad, side);
    std::fs::write(dir.path().join("bad.json"), bad).unwrap();
    let o = ecclab(dir.path(), &["verify", "-i", "g.gr", "--sidecar", "bad.json"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(
        text.starts_with("FAIL") && text.contains("observed") && text.contains("promised"),
        "{text}"
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    ecclab(dir.path(), &["gen", "--kind", "all-ecc", "-o", "g.gr"]);
    assert_eq!(
        ecclab(dir.path(), &["verify", "-i", "g.gr", "--cap", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        ecclab(dir.path(), &["exact", "-i", "g.gr", "--param", "x=1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ecclab(dir.path(), &["gen", "--kind", "nope", "-o", "h.gr"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ecclab(dir.path(), &["exact", "-i", "missing.gr"]).status.code(),
        Some(2)
    );
    assert_eq!(ecclab(dir.path(), &["frobnicate"]).status.code(), Some(2));
    std::fs::copy(dir.path().join("g.gr"), dir.path().join("lone.gr")).unwrap();
    assert_eq!(ecclab(dir.path(), &["verify", "-i", "lone.gr"]).status.code(), Some(2));
}

#[test]
fn tw_sweep_on_partial_ktree() {
    let dir = tempfile::tempdir().unwrap();
    let o = ecclab(
        dir.path(),
        &[
            "gen",
            "--kind",
            "partial-ktree",
            "--n",
            "100",
            "--k",
            "3",
            "-o",
            "kt.gr",
        ],
    );
    assert!(stdout(&o).contains("width=3"));
    let o = ecclab(dir.path(), &["verify", "-i", "kt.gr", "--td", "kt.td"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS tw")).count(), 5);
    let o = ecclab(dir.path(), &["tw", "-i", "kt.gr", "--td", "kt.td", "--format", "tsv"]);
    assert_eq!(stdout(&o).lines().count(), 101);
}

#[test]
fn dg_fragment_pairs() {
    let dir = tempfile::tempdir().unwrap();
    ecclab(
        dir.path(),
        &["gen", "--kind", "dg", "--size", "8", "--t", "1", "-o", "dg.gr"],
    );
    let o = ecclab(dir.path(), &["exact", "-i", "dg.gr", "--variant", "min"]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r["diameter"].as_u64().unwrap() <= 2);
}

#[test]
fn bench_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = ecclab(dir.path(), &["bench", "--param", "sizes="]);
    assert_eq!(stdout(&o), "algorithm\tn\tm\tk\twall_ms\testimate\toracle\tratio\n");
    let o = ecclab(
        dir.path(),
        &["bench", "--algorithm", "source-radius", "--param", "sizes=100,200,400"],
    );
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let ratio: f64 = row.split('\t').nth(7).unwrap().parse().unwrap();
        assert!((1.0..=2.0).contains(&ratio), "{row}");
    }
    let o = ecclab(dir.path(), &["bench", "--algorithm", "tw", "--param", "sizes=150"]);
    for row in stdout(&o).lines().skip(1) {
        assert!(row.ends_with("\t1.0000"), "{row}");
    }
    let o = ecclab(
        dir.path(),
        &["bench", "--param", "sizes=50", "--param", "oracle_max=10"],
    );
    assert!(stdout(&o).lines().nth(1).unwrap().ends_with("\t\t"));
}

#[test]
fn reduce_and_approx_outputs() {
    let dir = tempfile::tempdir().unwrap();
    ecclab(
        dir.path(),
        &["gen", "--kind", "diameter-23", "--seed", "2", "-o", "g.gr"],
    );
    let o = ecclab(dir.path(), &["reduce", "-i", "g.gr", "--param", "delta=4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let side = std::fs::read_to_string(dir.path().join("g.json")).unwrap();
    let yes = side.contains("\"answer\": true");
    assert_eq!(v["value"].as_u64(), Some(if yes { 3 } else { 2 }));

    ecclab(dir.path(), &["gen", "--kind", "random-dag", "--n", "60", "-o", "d.gr"]);
    for alg in ["min-radius-dag", "min-diameter-dag", "finite-min-ecc"] {
        let o = ecclab(dir.path(), &["approx", "-i", "d.gr", "--algorithm", alg]);
        assert_eq!(o.status.code(), Some(0), "{alg}");
    }
    let o = ecclab(
        dir.path(),
        &[
            "approx",
            "-i",
            "d.gr",
            "--algorithm",
            "min-diameter",
            "--param",
            "eps=1/3",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn library_entry_point_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for i in 0..2 {
        let mut spec = RunSpec::new(Cmd::Gen).param("n", 30).param("m", 90);
        spec.algorithm = Some("random-digraph".into());
        spec.seed = 9;
        spec.output = Some(dir.path().join(format!("r{i}.gr")));
        let mut sink = Vec::new();
        assert_eq!(run(&spec, &mut sink).unwrap(), Outcome::Pass);
        texts.push(std::fs::read(dir.path().join(format!("r{i}.gr"))).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    let bad = RunSpec::new(Cmd::Bench).param("colour", "red");
    assert!(run(&bad, &mut Vec::new()).is_err());
}
