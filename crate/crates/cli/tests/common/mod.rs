//! Shared CLI invocation table for the golden and acceptance suites.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "stats_two_lambda",
        args: &[
            "stats",
            "--spectrum",
            "two.txt",
            "--lambda",
            "-0.693147180559945",
        ],
        code: 0,
    },
    Case {
        name: "stats_two_base2",
        args: &["stats", "--spectrum", "two.txt", "--temp", "1", "--base2"],
        code: 0,
    },
    Case {
        name: "stats_mixed_json",
        args: &[
            "stats",
            "--spectrum",
            "mixed.json",
            "--temp",
            "2",
            "--kconst",
            "0.5",
        ],
        code: 0,
    },
    Case {
        name: "stats_bin3_converges",
        args: &[
            "stats",
            "--spectrum",
            "bin3.txt",
            "--lambda",
            "-1.386294",
            "--tail-check",
            "2",
            "--tail-eps",
            "1e-6",
        ],
        code: 0,
    },
    Case {
        name: "stats_bin3_divergent",
        args: &[
            "stats",
            "--spectrum",
            "bin3.txt",
            "--lambda",
            "-0.693147",
            "--tail-check",
            "2",
        ],
        code: 4,
    },
    Case {
        name: "stats_missing_file",
        args: &["stats", "--spectrum", "nope.txt", "--lambda", "-1"],
        code: 2,
    },
    Case {
        name: "stats_broken_file",
        args: &["stats", "--spectrum", "broken.txt", "--lambda", "-1"],
        code: 2,
    },
    Case {
        name: "stats_both_flags",
        args: &[
            "stats",
            "--spectrum",
            "two.txt",
            "--lambda",
            "-1",
            "--temp",
            "1",
        ],
        code: 2,
    },
    Case {
        name: "stats_no_flag",
        args: &["stats", "--spectrum", "two.txt"],
        code: 2,
    },
    Case {
        name: "stats_zero_temp",
        args: &["stats", "--spectrum", "two.txt", "--temp", "0"],
        code: 2,
    },
    Case {
        name: "sweep_two",
        args: &[
            "sweep",
            "--spectrum",
            "two.txt",
            "--lambda-min",
            "-1",
            "--lambda-max",
            "0",
            "--steps",
            "2",
        ],
        code: 0,
    },
    Case {
        name: "sweep_three_base2",
        args: &[
            "sweep",
            "--spectrum",
            "three.txt",
            "--lambda-min",
            "-3",
            "--lambda-max",
            "1",
            "--steps",
            "9",
            "--base2",
        ],
        code: 0,
    },
    Case {
        name: "sweep_json",
        args: &[
            "sweep",
            "--spectrum",
            "two.txt",
            "--lambda-min",
            "-1",
            "--lambda-max",
            "0",
            "--steps",
            "3",
            "--format",
            "json",
        ],
        code: 0,
    },
    Case {
        name: "sweep_descending",
        args: &[
            "sweep",
            "--spectrum",
            "two.txt",
            "--lambda-min",
            "0",
            "--lambda-max",
            "-1",
            "--steps",
            "2",
        ],
        code: 2,
    },
    Case {
        name: "sweep_one_step",
        args: &[
            "sweep",
            "--spectrum",
            "two.txt",
            "--lambda-min",
            "-1",
            "--lambda-max",
            "0",
            "--steps",
            "1",
        ],
        code: 2,
    },
    Case {
        name: "verify_two",
        args: &[
            "verify",
            "--spectrum",
            "two.txt",
            "--lambda",
            "-0.6931471805599453",
            "--samples",
            "1000",
            "--seed",
            "7",
        ],
        code: 0,
    },
    Case {
        name: "verify_mixed",
        args: &[
            "verify",
            "--spectrum",
            "mixed.json",
            "--lambda",
            "-0.4",
            "--samples",
            "2000",
            "--seed",
            "3",
            "--subset",
            "2",
        ],
        code: 0,
    },
    Case {
        name: "verify_subset_full",
        args: &[
            "verify",
            "--spectrum",
            "three.txt",
            "--lambda",
            "-0.6931471805599453",
            "--samples",
            "500",
            "--seed",
            "1",
            "--subset",
            "3",
        ],
        code: 0,
    },
    Case {
        name: "verify_coarse_step_fails",
        args: &[
            "verify",
            "--spectrum",
            "three.txt",
            "--lambda",
            "-0.5",
            "--samples",
            "100",
            "--seed",
            "1",
            "--fd-step",
            "0.01",
        ],
        code: 1,
    },
    Case {
        name: "verify_subset_too_big",
        args: &[
            "verify",
            "--spectrum",
            "two.txt",
            "--lambda",
            "-1",
            "--subset",
            "3",
        ],
        code: 2,
    },
    Case {
        name: "verify_bad_step",
        args: &[
            "verify",
            "--spectrum",
            "two.txt",
            "--lambda",
            "-1",
            "--fd-step",
            "0.5",
        ],
        code: 2,
    },
    Case {
        name: "solve_two",
        args: &[
            "solve",
            "--spectrum",
            "two.txt",
            "--target-L",
            "1.3333333333333333",
        ],
        code: 0,
    },
    Case {
        name: "solve_midpoint",
        args: &["solve", "--spectrum", "two.txt", "--target-L", "1.5"],
        code: 0,
    },
    Case {
        name: "solve_above_range",
        args: &["solve", "--spectrum", "two.txt", "--target-L", "2.5"],
        code: 3,
    },
    Case {
        name: "solve_at_infimum",
        args: &["solve", "--spectrum", "two.txt", "--target-L", "1"],
        code: 3,
    },
    Case {
        name: "det_triangular",
        args: &["det", "--r", "2,3", "--a", "1", "--b", "0"],
        code: 0,
    },
    Case {
        name: "det_rank_one",
        args: &["det", "--r", "1,1,1", "--a", "1", "--b", "1"],
        code: 0,
    },
    Case {
        name: "det_scalar",
        args: &["det", "--r", "4", "--a", "9", "--b", "9"],
        code: 0,
    },
    Case {
        name: "det_oracle",
        args: &["det", "--r", "2,-3,5", "--a", "1", "--b", "4", "--oracle"],
        code: 0,
    },
    Case {
        name: "det_bad_list",
        args: &["det", "--r", "1,x", "--a", "1", "--b", "1"],
        code: 2,
    },
    Case {
        name: "gen_binary_3",
        args: &["gen-binary", "--max-len", "3"],
        code: 0,
    },
    Case {
        name: "gen_binary_certified",
        args: &[
            "gen-binary",
            "--lambda",
            "-1.3862943611198906",
            "--eps",
            "1e-6",
        ],
        code: 0,
    },
    Case {
        name: "gen_binary_divergent",
        args: &["gen-binary", "--lambda", "-0.6"],
        code: 4,
    },
    Case {
        name: "gen_binary_zero",
        args: &["gen-binary", "--max-len", "0"],
        code: 2,
    },
];

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{name}.out"))
}

/// Runs the binary from the fixtures directory: (exit code, stdout, stderr).
pub fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_progibbs"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}
