use ricdft::bench::{emit_report, read_report_csv, run_benchmark, BenchConfig, CPolicy, Method, ReportFormat};

fn counts(n_list: Vec<usize>, c_policy: CPolicy) -> BenchConfig {
    BenchConfig {
        n_list,
        c_policy,
        trials: 1,
        timing: false,
        ..Default::default()
    }
}

#[test]
fn csv_read_back_equals_rows() {
    let report = run_benchmark(&counts(vec![16, 24, 64], CPolicy::AllDivisors)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    emit_report(&report, &path, ReportFormat::Csv).unwrap();
    assert_eq!(read_report_csv(&path).unwrap(), report);

    let md = dir.path().join("r.md");
    emit_report(&report, &md, ReportFormat::Markdown).unwrap();
    let text = std::fs::read_to_string(md).unwrap();
    assert_eq!(text.lines().count(), report.rows.len() + 2);
}

#[test]
fn cross_method_agreement_and_fold_counts() {
    let report = run_benchmark(&counts(vec![8, 256, 1024, 36], CPolicy::AllDivisors)).unwrap();
    for r in &report.rows {
        assert!(r.max_rel_error <= 1e-9, "{r:?}");
        match r.method {
            Method::Ric => {
                assert_eq!(r.fold_adds, (r.c * (r.l - 1)) as u64);
                assert!(r.complex_mults < (r.c * r.c) as u64 + 1);
            }
            _ => assert_eq!(r.fold_adds, 0),
        }
    }
}
