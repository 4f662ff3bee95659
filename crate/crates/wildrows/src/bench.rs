//! Head-to-head timing of the two rank-polynomial methods on layered posets.

use std::fmt::Write as _;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use wildrows_core::rankrec::{rank_poly_recursive_with, RecursionOptions};
use wildrows_core::{ab_enumerate, RankPolynomial, Tree};

use crate::gen::{gen_layered_poset, LayeredSpec};

#[derive(Clone, Copy, Debug)]
pub struct BenchOptions {
    /// Per-method wall-clock limit. A method that overruns is recorded as a
    /// timeout; its worker thread is abandoned, not killed.
    pub timeout: Option<Duration>,
    /// Run both methods once on a small instance before timing anything.
    pub warmup: bool,
    /// Memoize the recursion (nsum is then unavailable).
    pub memoize: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions { timeout: Some(Duration::from_secs(60)), warmup: true, memoize: false }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub spec: LayeredSpec,
    /// Total number of ideals.
    pub n: Option<BigUint>,
    /// Final rows of the (a,b)-algorithm.
    pub r: Option<usize>,
    pub time_ab_ms: Option<f64>,
    /// Antichain leaves of the recursion.
    pub nsum: Option<u64>,
    pub time_rec_ms: Option<f64>,
    /// Both polynomials, when both methods finished.
    pub polynomials: Option<(RankPolynomial, RankPolynomial)>,
    pub ab_timed_out: bool,
    pub rec_timed_out: bool,
    pub memoized: bool,
}

impl BenchRow {
    /// `Some(true)` iff both methods finished with identical polynomials.
    pub fn agree(&self) -> Option<bool> {
        self.polynomials.as_ref().map(|(a, b)| a == b)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

pub const COLUMNS: [&str; 10] = ["m", "l", "t", "seed", "N", "R", "time_ab", "nsum", "time_rec", "agree"];

impl BenchReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree() == Some(true))
    }

    fn cells(&self) -> Vec<[String; 10]> {
        let ms = |t: Option<f64>, timed_out: bool| match t {
            Some(t) => format!("{t:.3}"),
            None if timed_out => "timeout".to_string(),
            None => "-".to_string(),
        };
        self.rows
            .iter()
            .map(|row| {
                let s = row.spec;
                [
                    s.m.to_string(),
                    s.l.to_string(),
                    s.t.to_string(),
                    s.seed.to_string(),
                    row.n.as_ref().map_or("-".into(), |n| n.to_string()),
                    row.r.map_or("-".into(), |r| r.to_string()),
                    ms(row.time_ab_ms, row.ab_timed_out),
                    match row.nsum {
                        Some(n) => n.to_string(),
                        None if row.memoized && !row.rec_timed_out => "n/a".into(),
                        None => "-".into(),
                    },
                    ms(row.time_rec_ms, row.rec_timed_out),
                    match row.agree() {
                        Some(true) => "yes".into(),
                        Some(false) => "NO".into(),
                        None => "-".into(),
                    },
                ]
            })
            .collect()
    }

    /// Aligned text table; times in milliseconds.
    pub fn render_table(&self) -> String {
        let cells = self.cells();
        let mut widths = COLUMNS.map(str::len);
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, row: &[&str]| {
            let padded: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(out, "{}", padded.join("  ")).unwrap();
        };
        line(&mut out, &COLUMNS);
        for row in &cells {
            line(&mut out, &row.each_ref().map(String::as_str));
        }
        out
    }

    /// One tab-separated line per instance, after a `#` header line.
    pub fn render_tsv(&self) -> String {
        let mut out = format!("# {}\n", COLUMNS.join("\t"));
        for row in self.cells() {
            writeln!(out, "{}", row.join("\t")).unwrap();
        }
        out
    }
}

/// Runs `f` on a worker thread and waits at most `timeout` for it.
fn timed<T: Send + 'static>(
    timeout: Option<Duration>,
    f: impl FnOnce() -> T + Send + 'static,
) -> Option<(T, f64)> {
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let start = Instant::now();
        let value = f();
        let _ = tx.send((value, start.elapsed().as_secs_f64() * 1e3));
    });
    match timeout {
        Some(limit) => rx.recv_timeout(limit).ok(),
        None => rx.recv().ok(),
    }
}

pub fn run_instance(spec: LayeredSpec, options: &BenchOptions) -> BenchRow {
    let poset = std::sync::Arc::new(gen_layered_poset(spec));
    let p = poset.clone();
    let ab = timed(options.timeout, move || {
        let e = ab_enumerate(&p);
        (e.row_count(), e.rank_polynomial())
    });
    let p = poset;
    let memoize = options.memoize;
    let rec = timed(options.timeout, move || rank_poly_recursive_with(&p, RecursionOptions { memoize }));

    let mut row = BenchRow {
        spec,
        n: None,
        r: None,
        time_ab_ms: None,
        nsum: None,
        time_rec_ms: None,
        polynomials: None,
        ab_timed_out: ab.is_none(),
        rec_timed_out: rec.is_none(),
        memoized: options.memoize,
    };
    if let Some(((r, poly), ms)) = &ab {
        row.n = Some(poly.eval_one());
        row.r = Some(*r);
        row.time_ab_ms = Some(*ms);
    }
    if let Some((res, ms)) = &rec {
        row.nsum = res.nsum;
        row.time_rec_ms = Some(*ms);
        if row.n.is_none() {
            row.n = Some(res.polynomial.eval_one());
        }
    }
    if let (Some(((_, a), _)), Some((b, _))) = (ab, rec) {
        row.polynomials = Some((a, b.polynomial));
    }
    row
}

/// Times both methods on every spec, in order.
///
/// # Panics
/// If a spec is invalid.
pub fn run_bench(specs: &[LayeredSpec], options: &BenchOptions) -> BenchReport {
    if options.warmup && !specs.is_empty() {
        let quiet = BenchOptions { warmup: false, ..*options };
        run_instance(LayeredSpec::new(3, 4, 2, 0), &quiet);
    }
    BenchReport { rows: specs.iter().map(|&s| run_instance(s, options)).collect() }
}

/// Number of nonempty subtrees, by the rooted recurrence
/// `f(v) = prod over children (1 + f(c))`, summed over all `v`.
pub fn count_subtrees(t: &Tree) -> BigUint {
    let (parent, order) = t.rooted(1);
    let mut f = vec![BigUint::from(1u32); t.w()];
    let mut total = BigUint::default();
    for &v in order.iter().rev() {
        total += &f[v - 1];
        if v != 1 {
            let contribution = &f[v - 1] + 1u32;
            f[parent[v - 1] - 1] *= contribution;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_random_tree;
    use wildrows_core::brute::brute_subtrees;

    fn quick() -> BenchOptions {
        BenchOptions { timeout: Some(Duration::from_secs(30)), warmup: false, memoize: false }
    }

    #[test]
    fn chain_and_antichain() {
        let report = run_bench(&[LayeredSpec::new(1, 5, 1, 0), LayeredSpec::new(5, 1, 1, 0)], &quick());
        let chain = &report.rows[0];
        assert_eq!(chain.n, Some(6u32.into()));
        assert_eq!(chain.agree(), Some(true));
        let anti = &report.rows[1];
        assert_eq!(anti.n, Some(32u32.into()));
        assert_eq!(anti.r, Some(1));
        assert_eq!(anti.nsum, Some(1));
        assert!(report.all_agree());
    }

    #[test]
    fn rendering_follows_column_order() {
        let report = run_bench(&[LayeredSpec::new(2, 3, 1, 4)], &quick());
        let tsv = report.render_tsv();
        let mut lines = tsv.lines();
        assert_eq!(lines.next().unwrap(), "# m\tl\tt\tseed\tN\tR\ttime_ab\tnsum\ttime_rec\tagree");
        let fields: Vec<&str> = lines.next().unwrap().split('\t').collect();
        assert_eq!(&fields[..4], &["2", "3", "1", "4"]);
        assert_eq!(fields[9], "yes");
        let table = report.render_table();
        assert!(table.lines().next().unwrap().trim_start().starts_with("m  "));
        assert_eq!(table.lines().count(), 2);
    }

    #[test]
    fn memo_mode_reports_no_leaf_count() {
        let options = BenchOptions { memoize: true, ..quick() };
        let report = run_bench(&[LayeredSpec::new(3, 3, 2, 1)], &options);
        assert_eq!(report.rows[0].nsum, None);
        assert!(report.render_tsv().contains("\tn/a\t"));
        assert!(report.all_agree());
    }

    #[test]
    fn timeouts_are_recorded() {
        let options = BenchOptions { timeout: Some(Duration::ZERO), ..quick() };
        let row = run_instance(LayeredSpec::new(12, 6, 2, 3), &options);
        assert!(row.ab_timed_out || row.rec_timed_out);
        assert_eq!(row.agree(), None);
        let report = BenchReport { rows: vec![row] };
        assert!(!report.all_agree());
        assert!(report.render_table().contains("timeout"));
    }

    #[test]
    fn subtree_count_matches_brute_force() {
        for seed in 0..20 {
            let t = gen_random_tree(1 + seed as usize % 11, seed);
            let brute: usize = (1..=t.w()).map(|k| brute_subtrees(&t, k).unwrap().len()).sum();
            assert_eq!(count_subtrees(&t), BigUint::from(brute));
        }
        assert_eq!(count_subtrees(&wildrows_core::Tree::path(4)), BigUint::from(10u32));
    }
}
