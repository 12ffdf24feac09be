//! Golden-file cases shared by the CLI tests and the acceptance run.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// `(golden file name, arguments)`; paths are relative to the crate root.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    (
        "diagonal_lower_tri.json",
        &["diagonal", "--family", "lower-tri-22", "--depth", "20"],
    ),
    (
        "diagonal_b4.json",
        &[
            "diagonal",
            "--explicit",
            "tests/fixtures/b4.txt",
            "--candidate",
            "1111",
        ],
    ),
    (
        "diagonal_b4.csv",
        &[
            "diagonal",
            "--explicit",
            "tests/fixtures/b4.txt",
            "--depth",
            "16",
            "--format",
            "csv",
        ],
    ),
    (
        "diagonal_random_below.csv",
        &[
            "diagonal",
            "--family",
            "random-below-26",
            "--depth",
            "10",
            "--prefix",
            "24",
            "--seed",
            "42",
            "--format",
            "csv",
        ],
    ),
    (
        "diagonal_decimal.csv",
        &[
            "diagonal",
            "--family",
            "decimal-29",
            "--digits",
            "14(159)",
            "--random-tail",
            "--seed",
            "7",
            "--depth",
            "10",
            "--prefix",
            "16",
            "--format",
            "csv",
        ],
    ),
    ("subsets_figure1.csv", &["subsets", "figure1", "--n", "40"]),
    (
        "subsets_figure1_ratio.csv",
        &["subsets", "figure1", "--n", "40", "--series", "ratio"],
    ),
    ("subsets_table1.csv", &["subsets", "table1", "--n", "2520"]),
    (
        "subsets_dovetail.csv",
        &["subsets", "dovetail", "--count", "60"],
    ),
    (
        "subsets_unrank.txt",
        &["subsets", "unrank", "--p", "3", "--r", "1"],
    ),
    (
        "density_rho_even_nat.json",
        &[
            "density",
            "rho",
            "--a",
            "even",
            "--b",
            "nat",
            "--schedule",
            "10,100,1000,10000",
        ],
    ),
    (
        "density_rho_nat_real.csv",
        &[
            "density",
            "rho",
            "--a",
            "nat",
            "--b",
            "real",
            "--schedule",
            "5,10,20,40",
            "--format",
            "csv",
        ],
    ),
    (
        "density_figure2.csv",
        &["density", "figure2", "--max", "100000"],
    ),
    ("density_grid9.csv", &["density", "grid", "--n", "9"]),
    (
        "chains_cda.json",
        &["chains", "preset", "cda", "--describe"],
    ),
    (
        "chains_script.json",
        &["chains", "analyze", "--file", "tests/fixtures/chains.txt"],
    ),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests").join("golden").join(name)
}

pub fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setcount"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("spawn setcount")
}

pub fn read_golden(name: &str) -> Option<Vec<u8>> {
    std::fs::read(golden_path(name)).ok()
}

pub fn write_golden(name: &str, bytes: &[u8]) {
    let path = golden_path(name);
    std::fs::create_dir_all(path.parent().unwrap_or(Path::new("."))).expect("golden dir");
    std::fs::write(path, bytes).expect("write golden");
}
