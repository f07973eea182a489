use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use palfind::bench::{generate, Generator};
use palfind::tsv::HEADER;

fn palfind(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_palfind"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("palfind-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// A few records mixing random AT-rich DNA with planted inverted repeats.
fn sample_fasta() -> String {
    let mut text = String::new();
    for (i, seed) in [3u64, 5, 8].iter().enumerate() {
        let mut residues = generate(Generator::AtRichDna, 3000, 0.8, *seed).residues().to_vec();
        let arm = b"ACGGTTACCAGTTGCA";
        let rc: Vec<u8> = palfind_core::alphabet::reverse_complement(arm);
        residues.splice(1000..1000, arm.iter().chain(b"GAT").chain(&rc).copied());
        text.push_str(&format!(">rec{i} planted\n"));
        for line in residues.chunks(70) {
            text.push_str(std::str::from_utf8(line).unwrap());
            text.push('\n');
        }
    }
    text
}

#[test]
fn reports_the_worked_example() {
    let out = palfind(&["--mode", "id", "--k", "1", "--min-len", "4", "-"], ">t\nAABA\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), format!("{HEADER}\nt\t0\t4\t4\t1\teven\t3\t-\n"));
}

#[test]
fn empty_input_prints_header_only() {
    let out = palfind(&["-"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), format!("{HEADER}\n"));
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["--k", "-1", "-"][..],
        &["--mode", "rna", "-"],
        &["--engine", "fast", "-"],
        &[],
        &["--min-len", "x", "-"],
    ] {
        let out = palfind(args, "");
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn help_and_version_exit_0() {
    let out = palfind(&["--help"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("--no-containment-filter"));
    let out = palfind(&["--version"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("palfind "));
}

#[test]
fn input_errors_exit_2() {
    let out = palfind(&["/definitely/not/here.fa"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/definitely/not/here.fa"));

    let out = palfind(&["-"], "ACGT\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));
}

#[test]
fn engines_write_identical_bytes() {
    let fasta = sample_fasta();
    for extra in [&[][..], &["--align"], &["--no-containment-filter"], &["--mode", "id"]] {
        let mut greedy = vec!["--k", "3", "--min-len", "12"];
        greedy.extend_from_slice(extra);
        let mut lce = greedy.clone();
        lce.extend_from_slice(&["--engine", "lce"]);
        greedy.push("-");
        lce.push("-");
        let a = palfind(&greedy, &fasta);
        let b = palfind(&lce, &fasta);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{extra:?}");
    }
}

#[test]
fn records_come_out_in_input_order() {
    let out = palfind(&["--k", "1", "--min-len", "30", "-"], &sample_fasta());
    let text = stdout(&out);
    let ids: Vec<&str> = text.lines().skip(1).map(|l| l.split('\t').next().unwrap()).collect();
    assert!(ids.windows(2).all(|w| w[0] <= w[1]), "{ids:?}");
    // the planted 35-base inverted repeat is found in every record
    for i in 0..3 {
        assert!(ids.contains(&format!("rec{i}").as_str()), "rec{i} missing");
    }
}

#[test]
fn containment_filter_switch() {
    let fasta = sample_fasta();
    let kept = stdout(&palfind(&["--k", "2", "--min-len", "10", "-"], &fasta));
    let all = stdout(&palfind(&["--k", "2", "--min-len", "10", "--no-containment-filter", "-"], &fasta));
    let kept: Vec<&str> = kept.lines().collect();
    let all: Vec<&str> = all.lines().collect();
    assert!(kept.len() < all.len());
    assert!(kept.iter().all(|line| all.contains(line)));
}

#[test]
fn output_file_and_stats() {
    let input = scratch("in.fa");
    let output = scratch("out.tsv");
    std::fs::write(&input, sample_fasta()).unwrap();
    let out = palfind(
        &[
            "--k", "2", "--stats", "--output", output.to_str().unwrap(), input.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&output).unwrap();
    assert!(written.starts_with(HEADER));

    let stats = stderr(&out);
    let lines: Vec<&str> = stats.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in lines {
        let keys: Vec<&str> = line.split(' ').map(|kv| kv.split('=').next().unwrap()).collect();
        assert_eq!(keys, ["n", "k", "engine", "comparisons", "ratio", "seconds"]);
        assert!(line.starts_with("n=3035 k=2 engine=greedy comparisons="));
    }
}

#[test]
fn bench_subcommand() {
    let plan = scratch("plan.csv");
    std::fs::write(&plan, "# quick\nhomopolymer,500,2,greedy,0,0\nhomopolymer,500,2,lce,0,0\nat_rich_dna,2000,3,greedy,0.8,42\n").unwrap();
    let out = palfind(&["bench", "--plan", plan.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0].join(","), palfind::bench::CSV_HEADER);
    assert_eq!(rows.len(), 4);
    assert_eq!(&rows[1][..4], ["homopolymer", "500", "2", "greedy"]);
    assert!(rows[1][7].parse::<f64>().unwrap() > 3.7);
    let queries: u64 = rows[2][6].parse().unwrap();
    assert!(queries <= 3 * 999);

    let bad = scratch("bad.csv");
    std::fs::write(&bad, "homopolymer,500\n").unwrap();
    let out = palfind(&["bench", "--plan", bad.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 1"));
}
