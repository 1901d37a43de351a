use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use pg_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = pg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn group_and_graph_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(pg_group_build(c("S3").as_ptr(), &mut g), PgStatus::Ok);
        assert_eq!(pg_group_order(g), 6);

        let mut graph = ptr::null_mut();
        assert_eq!(pg_graph_build(g, false, &mut graph), PgStatus::Ok);
        assert_eq!(pg_graph_vertex_count(graph), 6);
        for v in 1..6 {
            assert!(pg_graph_has_edge(graph, 0, v));
        }
        assert!(!pg_graph_has_edge(graph, 0, 99));

        let mut buf = [usize::MAX; 5];
        let (mut len, mut found) = (0usize, false);
        let status = pg_graph_find_pattern(graph, c("P4").as_ptr(), buf.as_mut_ptr(), 5, &mut len, &mut found);
        assert_eq!(status, PgStatus::Ok);
        assert!(!found);
        assert_eq!(len, 0);

        let status = pg_graph_find_pattern(graph, c("2K2").as_ptr(), buf.as_mut_ptr(), 5, &mut len, &mut found);
        assert_eq!(status, PgStatus::Ok);
        assert!(!found);

        let status = pg_graph_find_pattern(graph, c("house").as_ptr(), buf.as_mut_ptr(), 5, &mut len, &mut found);
        assert_eq!(status, PgStatus::UnknownPattern);
        assert!(last_error().contains("house"));

        pg_graph_free(graph);
        pg_group_free(g);
    }
}

#[test]
fn witness_is_returned() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(pg_group_build(c("C12").as_ptr(), &mut g), PgStatus::Ok);
        let mut graph = ptr::null_mut();
        assert_eq!(pg_graph_build(g, true, &mut graph), PgStatus::Ok);
        assert_eq!(pg_graph_vertex_count(graph), 11);
        let mut buf = [0usize; 5];
        let (mut len, mut found) = (0usize, false);
        let status = pg_graph_find_pattern(graph, c("P4").as_ptr(), buf.as_mut_ptr(), 5, &mut len, &mut found);
        assert_eq!(status, PgStatus::Ok);
        assert!(found);
        assert_eq!(len, 4);
        let w = &buf[..4];
        for i in 0..4 {
            for j in i + 1..4 {
                assert_eq!(pg_graph_has_edge(graph, w[i], w[j]), j == i + 1 || (i == 1 && j == 2));
            }
        }
        let status = pg_graph_find_pattern(graph, c("P5").as_ptr(), buf.as_mut_ptr(), 4, &mut len, &mut found);
        assert_eq!(status, PgStatus::OutOfRange);
        pg_graph_free(graph);
        pg_group_free(g);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(pg_group_build(c("S(").as_ptr(), &mut g), PgStatus::Syntax);
        assert!(g.is_null());
        assert!(last_error().contains("position"));
        assert_eq!(pg_group_build(c("Z4").as_ptr(), &mut g), PgStatus::Syntax);
        assert_eq!(pg_group_build(c("PSL(2,6)").as_ptr(), &mut g), PgStatus::InvalidParameter);
        assert_eq!(pg_group_build(ptr::null(), &mut g), PgStatus::NullPointer);
        assert_eq!(pg_group_build(c("C2").as_ptr(), ptr::null_mut()), PgStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(pg_group_build(bad.as_ptr().cast(), &mut g), PgStatus::InvalidUtf8);
        assert_eq!(pg_group_order(ptr::null()), 0);
        assert_eq!(pg_graph_vertex_count(ptr::null()), 0);
        let mut graph = ptr::null_mut();
        assert_eq!(pg_graph_build(ptr::null(), false, &mut graph), PgStatus::NullPointer);
        pg_group_free(ptr::null_mut());
        pg_graph_free(ptr::null_mut());
        pg_string_free(ptr::null_mut());
    }
}

#[test]
fn json_reports() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(pg_analyze_json(c("A4").as_ptr(), false, &mut s), PgStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        pg_string_free(s);
        assert!(text.contains("\"group\":\"A4\""));
        assert!(text.contains("\"order\":12"));

        assert_eq!(pg_verify_json(c("T-SN").as_ptr(), &mut s), PgStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        pg_string_free(s);
        assert!(text.contains("\"theorem\":\"T-SN\""));
        assert!(text.contains("\"mismatches\":0"));

        assert_eq!(pg_verify_json(c("T-NOPE").as_ptr(), &mut s), PgStatus::UnknownTheorem);
    }
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

/// Compiles a C program against the generated header and the static library.
#[test]
fn header_compiles_and_links() {
    let header_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let lib = target_dir().join("libpg_ffi.a");
    assert!(header_dir.join("pg.h").exists());
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "pg.h"
int main(void) {
  PgGroup *g = NULL;
  if (pg_group_build("A5", &g) != PG_STATUS_OK) return 1;
  PgGraph *graph = NULL;
  if (pg_graph_build(g, false, &graph) != PG_STATUS_OK) return 2;
  size_t buf[5], len = 0; bool found = true;
  if (pg_graph_find_pattern(graph, "P5", buf, 5, &len, &found) != PG_STATUS_OK) return 3;
  printf("%zu %zu %d\n", pg_group_order(g), pg_graph_vertex_count(graph), (int)found);
  if (pg_group_build("Z7", &g) != PG_STATUS_SYNTAX || pg_last_error() == NULL) return 4;
  pg_graph_free(graph);
  pg_group_free(g);
  return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("main");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&header_dir)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "60 60 0");
}
