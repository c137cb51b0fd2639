use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bds(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bds"))
        .args(args)
        .current_dir(dir)
        .env_remove("BDS_SEARCH_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const NOT_LATIN: &str = "@circ\n3\n1 0 2\n1 0 2\n0 1 2\n\n@bullet\n3\n1 1 0\n0 0 1\n2 2 2\n";

#[test]
fn smith_solution_on_nine_points_passes_every_check() {
    let dir = tempfile::tempdir().unwrap();
    assert!(bds(&["construct", "stock", "smith", "2", "-o", "smith.txt"], dir.path()).status.success());
    let out = bds(&["check", "smith.txt", "--solution", "--dihedral", "--triality", "--latin", "--biquandle"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("PASS").count(), 5);
}

#[test]
fn non_latin_example_reports_a_column() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("ex.txt"), NOT_LATIN).unwrap();
    let out = bds(&["check", "ex.txt", "--latin"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("column 0 of circ is not a permutation"));
    let out = bds(&["check", "ex.txt", "--solution", "--dihedral", "--law", "LF"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn malformed_row_is_an_input_error_with_its_line() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "# header\n3\n0 1 2\n1 2\n2 0 1\n").unwrap();
    let out = bds(&["check", "bad.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
    assert_eq!(bds(&["check", "missing.txt"], dir.path()).status.code(), Some(2));
}

#[test]
fn construct_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = bds(&["construct", "bpq", "5", "3"], dir.path());
    let b = bds(&["construct", "bpq", "5", "3"], dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("@B_5_3\n15\n"));
    let tables = bds::format::parse_tables(&text).unwrap();
    assert_eq!(tables.len(), 1);
    assert_eq!(bds::format::emit_tables(&tables), text);
}

#[test]
fn negative_sign_builds_the_expected_braided_set() {
    let dir = tempfile::tempdir().unwrap();
    let out = bds(&["construct", "lbds", "zp", "7", "-1"], dir.path());
    assert!(out.status.success());
    let b = bds::format::parse_braided(&stdout(&out)).unwrap();
    for x in 0..7 {
        for y in 0..7 {
            assert_eq!(b.apply(x, y), ((2 * x + y) % 7, (7 - x) % 7));
        }
    }
}

#[test]
fn l3_has_order_81() {
    let dir = tempfile::tempdir().unwrap();
    let out = bds(&["construct", "l3"], dir.path());
    let t = bds::format::parse_single_table(&stdout(&out)).unwrap();
    assert_eq!(t.name.as_deref(), Some("L_3"));
    assert_eq!(t.table.order(), 81);
}

#[test]
fn nci_of_builtin_loops() {
    let dir = tempfile::tempdir().unwrap();
    let out = bds(&["nci", "--builtin", "--format", "tsv"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "loop\torder\tn_CI\n27/1\t27\t4\n27/2\t27\t4\n27/7\t27\t2\ntotal: 10\n");
}

#[test]
fn report_states_row_matches_and_totals() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("exp.txt"), "27/1 4\n27/2 4\n27/7 2\n").unwrap();
    let out = bds(&["report", "--builtin", "--expected", "exp.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rows: 3/3 match"));
    assert!(stdout(&out).contains("total: 10/10 match"));
    fs::write(dir.path().join("exp.txt"), "27/1 4\n27/2 3\n27/7 2\n").unwrap();
    let out = bds(&["report", "--builtin", "--expected", "exp.txt"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("rows: 2/3 match"));
}

#[test]
fn report_rejects_a_non_bruck_table() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("exp.txt"), "q 1\n").unwrap();
    fs::write(dir.path().join("q.txt"), "@q\n3\n0 2 1\n2 1 0\n1 0 2\n").unwrap();
    let out = bds(&["report", "q.txt", "--expected", "exp.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_prime_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = bds(&["classify", "p", "7", "--format", "tsv"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("classes: 2"));
    assert_eq!(bds(&["classify", "p", "9"], dir.path()).status.code(), Some(2));
}

#[test]
fn budget_overrun_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    assert!(bds(&["construct", "l3", "-o", "l3.txt"], dir.path()).status.success());
    let out = bds(&["--budget", "5", "aut", "l3.txt"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_bds"))
        .args(["aut", "l3.txt"])
        .current_dir(dir.path())
        .env("BDS_SEARCH_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn automorphisms_export_as_permutations() {
    let dir = tempfile::tempdir().unwrap();
    assert!(bds(&["construct", "bpq", "5", "3", "-o", "b.txt"], dir.path()).status.success());
    let out = bds(&["aut", "b.txt", "--elements", "els.txt", "--involutions"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("order: 40"));
    assert!(stdout(&out).contains("involution classes: 4"));
    let (n, perms) = bds::format::parse_permutations(&fs::read_to_string(dir.path().join("els.txt")).unwrap()).unwrap();
    assert_eq!((n, perms.len()), (15, 40));
}

#[test]
fn search_and_householder() {
    let dir = tempfile::tempdir().unwrap();
    let out = bds(&["search", "3", "--latin", "--dihedral", "--format", "tsv"], dir.path());
    assert_eq!(stdout(&out), "order\tclasses\n3\t2\n");
    assert_eq!(bds(&["search", "9", "--latin", "--dihedral"], dir.path()).status.code(), Some(2));
    let out = bds(&["householder", "--dim", "3", "--trials", "200", "--seed", "4"], dir.path());
    assert!(out.status.success());
    assert_eq!(bds(&["householder", "--tol", "0"], dir.path()).status.code(), Some(2));
}
