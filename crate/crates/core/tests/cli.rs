use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

const DIAMOND: &str = "rca 1\ndirected\nn 4\ne 0 1\ne 1 3\ne 0 2\ne 2 3\ns 0\nt 3\np 2\nk 0\nkind walk\n";

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rca-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn rca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rca")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn solve_exit_codes() {
    let yes = scratch("diamond.rca", DIAMOND);
    let o = rca(&["solve", yes.to_str().unwrap()]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "yes"));

    let single = scratch("single.rca", "rca 1\ndirected\nn 3\ne 0 1\ne 1 2\ns 0\nt 2\np 2\nk 0\nkind walk\n");
    let o = rca(&["solve", single.to_str().unwrap()]);
    assert_eq!((code(&o), stdout(&o).trim()), (1, "no"));

    let broken = scratch("broken.rca", "rca 1\ndirected\nn 3\ne 0 1\ne 2 2\n");
    let o = rca(&["solve", broken.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("at line 5"));
}

#[test]
fn oversized_oracle_fallback_is_refused() {
    // undirected paths go to the oracle; a tiny budget forces the refusal
    let text = "rca 1\nundirected\nn 4\ne 0 1\ne 1 3\ne 0 2\ne 2 3\ne 1 2\ns 0\nt 3\np 3\nk 0\nkind path\n";
    let inst = scratch("guarded.rca", text);
    let o = Command::new(env!("CARGO_BIN_EXE_rca"))
        .args(["solve", inst.to_str().unwrap()])
        .env("RCA_ORACLE_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("refusing"));
}

#[test]
fn witness_round_trips_through_verify() {
    let inst = scratch("rt.rca", "rca 1\ndirected\nn 4\ne 0 1\ne 1 2\ne 0 3\ne 3 0\ns 0\nt 2\np 2\nk 0\nkind walk\n");
    let o = rca(&["solve", "--witness", inst.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let routes: String = stdout(&o).lines().skip(1).map(|l| format!("{l}\n")).collect();
    let file = scratch("rt.routes", &routes);
    let v = rca(&["verify", inst.to_str().unwrap(), file.to_str().unwrap()]);
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).starts_with("accept"));
}

#[test]
fn json_record() {
    let inst = scratch("json.rca", DIAMOND);
    let o = rca(&["solve", "--json", "--jobs", "2", inst.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["solverUsed"], "time-expanded-flow");
    assert_eq!(v["routes"].as_array().unwrap().len(), 2);
    assert_eq!(v["sharedEdges"].as_array().unwrap().len(), 0);
    assert_eq!(v["horizon"], 4);
}

#[test]
fn verify_rejections() {
    let inst = scratch("v.rca", DIAMOND);
    let truncated = scratch("trunc.routes", "0 1 3\n0 1\n");
    let o = rca(&["verify", inst.to_str().unwrap(), truncated.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("reject endpoint"));

    let same = scratch("same.routes", "0 1 3\n0 1 3\n");
    let o = rca(&["verify", inst.to_str().unwrap(), same.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "reject budget: 2 shared edges > 0: 0 1");

    let malformed = scratch("bad.routes", "0 x 3\n");
    assert_eq!(code(&rca(&["verify", inst.to_str().unwrap(), malformed.to_str().unwrap()])), 2);
}

#[test]
fn generate_is_deterministic_and_writes_names() {
    let sc = scratch("cover.sc", "sc 1\nn 2\nf 0 1\nl 1\n");
    let out = sc.with_file_name("cover.rca");
    let o = rca(&["generate", "setcover-dag", sc.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let first = fs::read_to_string(&out).unwrap();
    assert!(first.contains("\np 3\n") && first.contains("\nk 1\n"));
    let names = fs::read_to_string(out.with_file_name("cover.rca.names")).unwrap();
    assert!(names.lines().any(|l| l == "s 0"));
    let again = rca(&["generate", "setcover-dag", sc.to_str().unwrap()]);
    assert_eq!(stdout(&again), first);

    let k4 = scratch("k4.graph", "rca 1\nundirected\nn 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
    let path = rca(&["generate", "pchc-path", k4.to_str().unwrap()]);
    assert_eq!(code(&path), 0);
    assert!(stdout(&path).contains("\nn 15\n") && stdout(&path).contains("\np 3\n"));
    let trail = rca(&["generate", "pchc-trail", k4.to_str().unwrap()]);
    assert!(stdout(&trail).contains("kind trail") && stdout(&trail).contains("\np 8\n"));

    let bad = scratch("path.graph", "rca 1\nundirected\nn 3\ne 0 1\ne 1 2\n");
    let o = rca(&["generate", "pchc-trail", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("degree"));
}

#[test]
fn oracle_reports_minimum() {
    let single = scratch("o.rca", "rca 1\ndirected\nn 3\ne 0 1\ne 1 2\ns 0\nt 2\np 2\nk 0\nkind path\n");
    let o = rca(&["oracle", single.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.starts_with("min-shared 2\nno\n"));
    assert_eq!(text.lines().filter(|l| *l == "0 1 2").count(), 2);
}

#[test]
fn expand_dump() {
    let arc = scratch("arc.rca", "rca 1\ndirected\nn 2\ne 0 1\ns 0\nt 1\np 1\nk 0\nkind walk\n");
    let o = rca(&["expand", "--tau", "2", arc.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("\nn 6\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 4);
    // a DAG defaults to tau = n
    let default = rca(&["expand", arc.to_str().unwrap()]);
    assert!(stdout(&default).contains("tau 2 "));
    let und = scratch("und.rca", "rca 1\nundirected\nn 2\ne 0 1\ns 0\nt 1\np 1\nk 0\nkind walk\n");
    assert!(stdout(&rca(&["expand", und.to_str().unwrap()])).contains("bidirected"));
}
