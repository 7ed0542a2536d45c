//! Golden-file runner for the `kve` binary.
//!
//! Each directory under `tests/golden` is one case:
//!
//! * `args`: one argument per line; `{case}` expands to the case directory
//!   and `{tmp}` to a fresh scratch directory,
//! * `exit`: the expected exit status,
//! * `stdout`: the expected standard output, byte for byte,
//! * `stderr` (optional): the expected standard error,
//! * `stdin` (optional): fed to the process,
//! * `env` (optional): `KEY=VALUE` lines,
//! * `out.NAME` (optional): expected contents of `{tmp}/NAME` afterwards.
//!
//! With `KVE_BLESS=1` the runner rewrites `exit`, `stdout` and existing
//! `stderr`/`out.*` files from the actual run instead of comparing.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<PathBuf> {
    let mut dirs: Vec<PathBuf> = fs::read_dir(golden_dir())
        .expect("golden directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.is_dir())
        .collect();
    dirs.sort();
    dirs
}

fn read_opt(path: &Path) -> Option<String> {
    fs::read_to_string(path).ok()
}

/// Runs one case and describes the first mismatch.
pub fn run_case(case: &Path) -> Result<(), String> {
    let bless = std::env::var_os("KVE_BLESS").is_some();
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let expand = |s: &str| {
        s.replace("{case}", case.to_str().unwrap())
            .replace("{tmp}", tmp.path().to_str().unwrap())
    };
    let args: Vec<String> = read_opt(&case.join("args"))
        .ok_or("missing args file")?
        .lines()
        .map(expand)
        .collect();

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kve"));
    cmd.args(&args)
        .env_remove("KVE_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for line in read_opt(&case.join("env")).unwrap_or_default().lines() {
        let (k, v) = line.split_once('=').ok_or("bad env line")?;
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().map_err(|e| e.to_string())?;
    let stdin = read_opt(&case.join("stdin")).unwrap_or_default();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by a signal")?;
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();

    let mut produced = vec![
        ("exit".to_string(), format!("{code}\n")),
        ("stdout".to_string(), stdout),
    ];
    if case.join("stderr").exists() {
        produced.push(("stderr".to_string(), stderr.clone()));
    }
    for entry in fs::read_dir(case).map_err(|e| e.to_string())? {
        let name = entry.unwrap().file_name().into_string().unwrap();
        if let Some(file) = name.strip_prefix("out.") {
            let actual = fs::read_to_string(tmp.path().join(file)).unwrap_or_else(|_| "<missing>".into());
            produced.push((name.clone(), actual));
        }
    }

    for (name, actual) in produced {
        let path = case.join(&name);
        if bless {
            fs::write(&path, &actual).map_err(|e| e.to_string())?;
            continue;
        }
        let expected = read_opt(&path).ok_or_else(|| format!("missing {name} file"))?;
        if expected != actual {
            return Err(format!(
                "{name} differs\n--- expected\n{expected}--- actual\n{actual}--- stderr\n{stderr}"
            ));
        }
    }
    Ok(())
}
