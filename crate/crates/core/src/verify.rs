//! Exhaustive property suites over configurable shapes and bounds.
//!
//! Each suite streams its cases in a fixed order, checks them in parallel in
//! fixed-size batches, and reports how many cases ran plus the first few
//! failures, so the outcome does not depend on the size of the thread pool.

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classical::{
    check_rsk_theorem, check_syt, diag_partition, gk_chain_max, gk_rsk_shape, hg, hg_inv, hg_phi,
    is_permutation_matrix, permutation_matrix, permutations, rectangle, rsk, rsk_inv, ChainKind,
};
use crate::enumeration::{enumerate_rpps, enumerate_sw_paths, enumerate_tableaux, EnumBudget};
use crate::error::Result;
use crate::geometry::{content_compare, partitions_up_to, revlex_compare, Cell, Partition};
use crate::insertion::{
    build, build_from_anchors, compatible_cells, extraction_cells, factorize, factorize_steps,
    insertion_cells, minus_is_rpp, plus_is_rpp, try_insert_at, Insertion,
};
use crate::pakmap::{xi, xi_via, xi_with, zeta};
use crate::rpp::Rpp;
use crate::series::{gansner_product, hg_trace_series, hook_product, rpp_series, trace_series};
use crate::tableau::Tableau;

const BATCH: usize = 2048;
const KEEP_FAILURES: usize = 5;

/// Shapes and bounds for the suites. [`Default`] gives the reference ranges.
#[derive(Debug, Clone, Serialize)]
pub struct Config {
    pub shapes: Vec<Partition>,
    /// Truncation for the univariate hook-product check.
    pub stanley_degree: usize,
    /// Truncation for the trace-generating-function checks.
    pub gansner_degree: u64,
    /// Size bound for round trips, Pak, Hillman–Grassl and the diagonal check.
    pub bijection_bound: usize,
    /// Weighted-size bound for anchor sequences in the commutation check.
    pub commute_bound: usize,
    /// Every shape with at most this many cells enters the path suites.
    pub small_shape_max: usize,
    /// Size bound on the fillings in the path suites.
    pub small_rpp_bound: usize,
    pub gk_shape: Partition,
    /// Bound on the entry sum of the chain-maximum tableaux.
    pub gk_entry_sum: u32,
    pub syt_max_n: usize,
    pub perm_max_n: usize,
    /// Entry sum bound when searching for a non-involutive tableau.
    pub counterexample_bound: usize,
    pub seed: u64,
    /// Random corner sequences tried per filling.
    pub random_corner_trials: usize,
    pub budget: EnumBudget,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            shapes: ["2,2", "3,2", "3,3,3", "4,3,1", "5,2,1,1"]
                .iter()
                .map(|s| s.parse().expect("valid shape"))
                .collect(),
            stanley_degree: 10,
            gansner_degree: 8,
            bijection_bound: 8,
            commute_bound: 8,
            small_shape_max: 9,
            small_rpp_bound: 6,
            gk_shape: Partition::square(3),
            gk_entry_sum: 5,
            syt_max_n: 3,
            perm_max_n: 4,
            counterexample_bound: 8,
            seed: 0,
            random_corner_trials: 2,
            budget: EnumBudget::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub cases: u64,
    /// Reference values worth printing on success, e.g. coefficient vectors.
    pub notes: Vec<String>,
    pub failures: Vec<String>,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} cases)", self.suite, self.cases)?;
        for n in &self.notes {
            write!(f, "\n  {n}")?;
        }
        for e in &self.failures {
            write!(f, "\n  failure: {e}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failed: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEEP_FAILURES {
            self.failures.push(msg);
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(f);
            }
        }
        self.notes.extend(other.notes);
    }

    /// Runs `f` over `items` in parallel batches, keeping results in order.
    fn run<T: Send + Sync>(
        &mut self,
        items: impl Iterator<Item = T>,
        f: impl Fn(&T, &mut Tally) + Sync,
    ) {
        let mut items = items.peekable();
        while items.peek().is_some() {
            let batch: Vec<T> = items.by_ref().take(BATCH).collect();
            let parts: Vec<Tally> = batch
                .par_iter()
                .map(|x| {
                    let mut t = Tally::default();
                    f(x, &mut t);
                    t
                })
                .collect();
            for p in parts {
                self.absorb(p);
            }
        }
    }

    fn guard<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(e.to_string());
                None
            }
        }
    }

    fn report(self, suite: &str) -> Report {
        let mut failures = self.failures;
        if self.failed > failures.len() as u64 {
            failures.push(format!("... {} failures in total", self.failed));
        }
        Report {
            suite: suite.to_string(),
            passed: self.failed == 0 && self.cases > 0,
            cases: self.cases,
            notes: self.notes,
            failures,
        }
    }
}

fn ints(coeffs: &[BigInt]) -> String {
    let v: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
    format!("[{}]", v.join(","))
}

fn small_shapes(cfg: &Config) -> Vec<Partition> {
    partitions_up_to(cfg.small_shape_max)
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect()
}

/// Every filling of the small shapes, shape by shape.
fn small_rpps(cfg: &Config, t: &mut Tally) -> Vec<Rpp> {
    let mut out = Vec::new();
    for shape in small_shapes(cfg) {
        if let Some(it) = t.guard(enumerate_rpps(&shape, cfg.small_rpp_bound, &cfg.budget)) {
            out.extend(it);
        }
    }
    out
}

/// `Σ π = ∏ 1/(1 − q^{h(u)})` up to the configured degree.
pub fn stanley(cfg: &Config) -> Report {
    let mut t = Tally::default();
    let n = cfg.stanley_degree;
    for shape in &cfg.shapes {
        let Some(lhs) = t.guard(rpp_series(shape, n, &cfg.budget)) else {
            continue;
        };
        let rhs = hook_product(shape, n);
        t.check(lhs == rhs, || {
            format!(
                "{shape}: enumerated {} vs product {}",
                ints(lhs.coeffs()),
                ints(rhs.coeffs())
            )
        });
        t.notes.push(format!("{shape}: {}", ints(lhs.coeffs())));
    }
    t.report("stanley")
}

/// The trace generating function against the Gansner product, and its
/// specialisation `q_k ↦ q` against the hook product.
pub fn gansner(cfg: &Config) -> Report {
    let mut t = Tally::default();
    let results: Vec<Tally> = cfg
        .shapes
        .par_iter()
        .map(|shape| {
            let mut t = Tally::default();
            let d = cfg.gansner_degree;
            if let Some(lhs) = t.guard(trace_series(shape, d, &cfg.budget)) {
                let rhs = gansner_product(shape, d);
                t.check(lhs == rhs, || {
                    format!("{shape}: trace series differs at D = {d}")
                });
                t.notes.push(format!(
                    "{shape}: {} monomials up to degree {d}",
                    rhs.terms().len()
                ));
            }
            let n = cfg.stanley_degree;
            let spec = gansner_product(shape, n as u64).specialize();
            t.check(spec == hook_product(shape, n), || {
                format!(
                    "{shape}: specialised product {} differs from hook product",
                    ints(spec.coeffs())
                )
            });
            if let Some(lhs) = t.guard(trace_series(shape, n as u64, &cfg.budget)) {
                let lhs = lhs.specialize();
                t.check(spec == lhs, || {
                    format!(
                        "{shape}: specialised traces {} vs {}",
                        ints(lhs.coeffs()),
                        ints(spec.coeffs())
                    )
                });
            }
            t
        })
        .collect();
    for r in results {
        t.absorb(r);
    }
    t.report("gansner")
}

/// `build ∘ factorize = id`, `factorize ∘ build = id`, weakly increasing
/// anchors, and equal size histograms on both sides.
pub fn bijection(cfg: &Config) -> Report {
    let mut t = Tally::default();
    let n = cfg.bijection_bound;
    for shape in &cfg.shapes {
        let mut hist_rpp = vec![0u64; n + 1];
        let mut hist_tab = vec![0u64; n + 1];
        if let Some(it) = t.guard(enumerate_rpps(shape, n, &cfg.budget)) {
            let it = it.inspect(|pi| hist_rpp[pi.size() as usize] += 1);
            t.run(it, |pi, t| {
                let f = factorize(pi);
                t.check(f.is_weakly_increasing(), || {
                    format!("anchors {f} not increasing for\n{pi}")
                });
                let tab = f.tableau();
                t.check(tab.weighted_size() == pi.size(), || {
                    format!("weight mismatch for\n{pi}")
                });
                let back = build(&tab);
                t.check(&back == pi, || {
                    format!("build(factorize(π)) = \n{back}for π =\n{pi}")
                });
            });
        }
        if let Some(it) = t.guard(enumerate_tableaux(shape, n, &cfg.budget)) {
            let it = it.inspect(|tab| hist_tab[tab.weighted_size() as usize] += 1);
            t.run(it, |tab, t| {
                let pi = build(tab);
                t.check(pi.size() == tab.weighted_size(), || {
                    format!("size mismatch for {tab:?}")
                });
                let back = factorize(&pi).tableau();
                t.check(&back == tab, || {
                    format!("factorize(build(t)) ≠ t for {:?}", tab.rows())
                });
            });
        }
        t.check(hist_rpp == hist_tab, || {
            format!("{shape}: size histograms {hist_rpp:?} vs {hist_tab:?}")
        });
    }
    t.report("bijection")
}

fn grid(rows: &[&[u32]]) -> Rpp {
    Rpp::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("golden grid")
}

fn cells(v: &[(i32, i32)]) -> Vec<Cell> {
    v.iter().map(|&(i, j)| Cell::new(i, j)).collect()
}

/// Worked examples with known answers.
pub fn golden() -> Report {
    let mut t = Tally::default();
    let pi = grid(&[&[0, 1, 2, 3], &[1, 2, 2], &[1]]);

    let f = factorize(&pi);
    t.check(
        f.anchors == cells(&[(1, 4), (1, 3), (2, 2), (1, 1)]),
        || format!("factorisation anchors {f}"),
    );
    let steps = factorize_steps(&pi);
    let paths: Vec<Vec<Cell>> = steps.iter().map(|s| s.path.cells().to_vec()).collect();
    t.check(
        paths.first() == Some(&cells(&[(1, 4)]))
            && paths.get(1) == Some(&cells(&[(1, 2), (1, 3), (1, 4)]))
            && paths.get(3) == Some(&cells(&[(3, 1), (2, 1), (2, 2), (2, 3), (1, 3), (1, 4)])),
        || format!("extraction paths {paths:?}"),
    );
    t.check(
        steps.first().map(|s| &s.result) == Some(&grid(&[&[0, 1, 2, 2], &[1, 2, 2], &[1]])),
        || "first extraction result".into(),
    );

    let mut cand = pi.candidates();
    cand.sort();
    t.check(cand == cells(&[(1, 2), (1, 4), (2, 2), (3, 1)]), || {
        format!("candidates {cand:?}")
    });

    let bottom_row_333 = grid(&[&[0, 0, 0], &[0, 0, 0], &[1, 1, 1]]);
    let left = insertion_cells(&bottom_row_333, Cell::new(1, 3));
    let right = insertion_cells(&bottom_row_333, Cell::new(2, 2));
    t.check(left == cells(&[(1, 3), (2, 3), (2, 2)]), || {
        format!("insertion path {left:?}")
    });
    t.check(right == cells(&[(2, 3), (2, 2), (2, 1)]), || {
        format!("insertion path {right:?}")
    });
    let inserted = try_insert_at(&bottom_row_333, Cell::new(1, 3))
        .ok()
        .and_then(Insertion::ok);
    t.check(
        inserted == Some(grid(&[&[0, 0, 1], &[0, 1, 1], &[1, 1, 1]])),
        || format!("insertion result {inserted:?}"),
    );

    let square_sample = grid(&[&[1, 1, 4], &[2, 3, 4], &[4, 4, 4]]);
    let tab = xi(&square_sample);
    let want = vec![vec![1, 1, 2], vec![0, 1, 0], vec![3, 0, 0]];
    t.check(tab.rows() == want.as_slice(), || {
        format!("ξ gives {:?}", tab.rows())
    });
    let toggled = zeta(&square_sample, Cell::new(3, 3)).ok();
    t.check(
        toggled == Some(grid(&[&[0, 1, 4], &[2, 3, 4], &[4, 4]])),
        || format!("first toggle {toggled:?}"),
    );

    let pair = rsk(&tab);
    let p = grid(&[&[1, 1, 1, 1], &[2, 2, 3], &[3]]);
    let q = grid(&[&[1, 1, 1, 1], &[2, 3, 3], &[3]]);
    t.check(pair.p == p && pair.q == q, || {
        format!("RSK gives P =\n{}Q =\n{}", pair.p, pair.q)
    });
    let back = rsk_inv(&pair, &Partition::square(3)).ok();
    t.check(back.as_ref() == Some(&tab), || "inverse RSK".into());
    t.check(
        diag_partition(&square_sample, 0) == "4,3,1".parse().unwrap(),
        || "diagonal 0".into(),
    );
    t.check(
        diag_partition(&square_sample, -1) == "4,2".parse().unwrap(),
        || "diagonal -1".into(),
    );
    t.report("golden")
}

/// `ξ` against the factorisation, through every first corner and through
/// random corner sequences.
pub fn pak(cfg: &Config) -> Report {
    let mut t = Tally::default();
    for shape in &cfg.shapes {
        let Some(it) = t.guard(enumerate_rpps(shape, cfg.bijection_bound, &cfg.budget)) else {
            continue;
        };
        t.run(it, |pi, t| {
            let want = factorize(pi).tableau();
            let got = xi(pi);
            t.check(got == want, || format!("ξ ≠ factorisation for\n{pi}"));
            for x in shape.outer_corners() {
                let via = xi_via(pi, x).expect("outer corner");
                t.check(via == want, || format!("ξ through {x} differs for\n{pi}"));
            }
        });
    }
    let mut rng_tally = Tally::default();
    let rpps = small_rpps(cfg, &mut rng_tally);
    let seed = cfg.seed;
    let trials = cfg.random_corner_trials;
    rng_tally.run(rpps.iter().enumerate(), |(idx, pi), t| {
        let want = xi(pi);
        for x in pi.shape().outer_corners() {
            t.check(xi_via(pi, x).expect("outer corner") == want, || {
                format!("ξ through {x} differs for\n{pi}")
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (*idx as u64).wrapping_mul(0x9e37_79b9));
        for _ in 0..trials {
            let got = xi_with(pi, |cs| rng.gen_range(0..cs.len()));
            t.check(got == want, || {
                format!("random corner order differs for\n{pi}")
            });
        }
    });
    t.absorb(rng_tally);
    t.report("pak")
}

/// `ζ_{λ,x}(h_λ^{u₁} * π) = h_μ^{u₁} * ζ_{λ,x}(π)` for `π` built from
/// `u₂ ≤ … ≤ u_s` and every outer corner `x` avoided by the anchors.
pub fn commutation(cfg: &Config) -> Report {
    let mut t = Tally::default();
    for shape in &cfg.shapes {
        let Some(it) = t.guard(enumerate_tableaux(shape, cfg.commute_bound, &cfg.budget)) else {
            continue;
        };
        let corners = shape.outer_corners();
        t.run(it, |tab, t| {
            let anchors = tab.anchors();
            let Some((&u1, rest)) = anchors.split_first() else {
                return;
            };
            let pi = build_from_anchors(shape, rest).expect("anchors in shape");
            let left = match try_insert_at(&pi, u1).expect("anchor in shape") {
                Insertion::Inserted { result, .. } => result,
                Insertion::Failed(_) => {
                    t.fail(format!("{u1} does not insert into\n{pi}"));
                    return;
                }
            };
            for &x in &corners {
                if tab.get(x) != Some(0) {
                    continue;
                }
                let lhs = zeta(&left, x).expect("outer corner");
                let rho = zeta(&pi, x).expect("outer corner");
                let rhs = try_insert_at(&rho, u1).expect("anchor in μ").ok();
                t.check(rhs.as_ref() == Some(&lhs), || {
                    format!("corner {x}, anchors {anchors:?}: ζ(h*π) =\n{lhs}h*ζ(π) = {rhs:?}")
                });
            }
        });
    }
    t.report("commutation")
}

/// The greedy path is the only admissible south-west path when insertion
/// succeeds, and a candidate precedes its head when it fails.
pub fn insertion_uniqueness(cfg: &Config) -> Report {
    let mut t = Tally::default();
    let rpps = small_rpps(cfg, &mut t);
    let budget = cfg.budget;
    t.run(rpps.iter(), |pi, t| {
        let shape = pi.shape();
        let candidates = pi.candidates();
        for h in shape.rim_hooks() {
            let ins = try_insert_at(pi, h.anchor()).expect("anchor in shape");
            match &ins {
                Insertion::Inserted { path, .. } => {
                    let Some(paths) =
                        t.guard(enumerate_sw_paths(shape, h.tail(), h.len(), &budget))
                    else {
                        return;
                    };
                    let admissible: Vec<_> = paths
                        .filter(|p| compatible_cells(p.cells(), pi) && plus_is_rpp(p.cells(), pi))
                        .collect();
                    t.check(admissible.len() == 1 && &admissible[0] == path, || {
                        format!(
                            "h^{} into\n{pi}has {} admissible paths",
                            h.anchor(),
                            admissible.len()
                        )
                    });
                }
                Insertion::Failed(f) => {
                    let head = f.path.head();
                    let exists = candidates.iter().any(|&u| content_compare(u, head).is_lt());
                    let ok = exists
                        && f.witness.is_some_and(|w| {
                            candidates.contains(&w) && content_compare(w, head).is_lt()
                        });
                    t.check(ok, || {
                        format!(
                            "h^{} fails on\n{pi}without a candidate before {head}",
                            h.anchor()
                        )
                    });
                }
            }
        }
    });
    t.report("insertion-uniqueness")
}

/// Crossing: comparing a candidate `u` with `α(P(h, π))` bounds `h(u, π)`
/// against `h`. Stability: extracting along an admissible `Q(v, π)` keeps
/// the other candidates and creates none before `v`.
pub fn crossing(cfg: &Config) -> Report {
    let mut t = Tally::default();
    let rpps = small_rpps(cfg, &mut t);
    t.run(rpps.iter(), |pi, t| {
        let shape = pi.shape();
        let candidates = pi.candidates();
        // h(u, π) for each candidate
        let mut hooks = Vec::with_capacity(candidates.len());
        for &u in &candidates {
            let q = extraction_cells(pi, u);
            match shape.anchor_for(*q.last().expect("nonempty"), q.len()) {
                Some(a) => hooks.push(a),
                None => {
                    t.fail(format!("no rim-hook matches Q({u}) in\n{pi}"));
                    return;
                }
            }
        }
        for h in shape.rim_hooks() {
            let head = *insertion_cells(pi, h.anchor()).last().expect("nonempty");
            for (&u, &hu) in candidates.iter().zip(&hooks) {
                let order = revlex_compare(hu, h.anchor());
                if content_compare(u, head).is_lt() {
                    t.check(order.is_lt(), || {
                        format!(
                            "crossing: {u} before {head} but h({u}) = h^{hu} ≥ h^{}",
                            h.anchor()
                        )
                    });
                } else {
                    t.check(order.is_ge(), || {
                        format!(
                            "crossing: {head} ⊴ {u} but h({u}) = h^{hu} < h^{}",
                            h.anchor()
                        )
                    });
                }
            }
        }
        for &v in &candidates {
            let q = extraction_cells(pi, v);
            if !(compatible_cells(&q, pi) && minus_is_rpp(&q, pi)) {
                continue;
            }
            let mut rows = pi.rows().to_vec();
            for u in &q {
                rows[u.row as usize - 1][u.col as usize - 1] -= 1;
            }
            let rest = Rpp::new(shape.clone(), rows).expect("π − Q is monotone");
            for u in shape.cells() {
                if u == v {
                    continue;
                }
                if candidates.contains(&u) {
                    t.check(rest.is_candidate(u), || {
                        format!("stability: {u} stops being a candidate after Q({v}) on\n{pi}")
                    });
                } else if content_compare(u, v).is_lt() {
                    t.check(!rest.is_candidate(u), || {
                        format!("stability: {u} becomes a candidate after Q({v}) on\n{pi}")
                    });
                }
            }
        }
    });
    t.report("crossing")
}

/// Hillman–Grassl: both round trips, weight preservation, and the trace
/// series read off its hooks.
pub fn hillman_grassl(cfg: &Config) -> Report {
    let mut t = Tally::default();
    for shape in &cfg.shapes {
        if let Some(it) = t.guard(enumerate_rpps(shape, cfg.bijection_bound, &cfg.budget)) {
            t.run(it, |pi, t| {
                let tab = hg(pi);
                t.check(tab.weighted_size() == pi.size(), || {
                    format!("HG weight for\n{pi}")
                });
                t.check(&hg_inv(&tab) == pi, || format!("HG round trip for\n{pi}"));
            });
        }
        if let Some(it) = t.guard(enumerate_tableaux(shape, cfg.bijection_bound, &cfg.budget)) {
            t.run(it, |tab, t| {
                t.check(&hg(&hg_inv(tab)) == tab, || {
                    format!("HG inverse round trip for {:?}", tab.rows())
                });
            });
        }
        let d = cfg.gansner_degree;
        if let Some(s) = t.guard(hg_trace_series(shape, d, &cfg.budget)) {
            t.check(s == gansner_product(shape, d), || {
                format!("{shape}: HG trace series")
            });
        }
    }
    t.report("hg")
}

/// `tr_k(π) = Σ_{u ∈ R_k} t(u)` for `t` the factorisation of `π`.
pub fn diag(cfg: &Config) -> Report {
    let mut t = Tally::default();
    for shape in &cfg.shapes {
        let Some(it) = t.guard(enumerate_rpps(shape, cfg.bijection_bound, &cfg.budget)) else {
            continue;
        };
        let rects: Vec<(i32, Vec<Cell>)> = (shape.min_content()..=shape.max_content())
            .map(|k| (k, rectangle(shape, k)))
            .collect();
        t.run(it, |pi, t| {
            let tab = factorize(pi).tableau();
            for (k, rect) in &rects {
                let sum: u64 = rect.iter().map(|&u| tab.get(u).unwrap_or(0) as u64).sum();
                t.check(sum == pi.trace(*k), || format!("trace {k} of\n{pi}"));
            }
        });
    }
    t.report("diag")
}

/// All fillings of `shape` with entry sum at most `bound`.
fn tableaux_by_entry_sum(shape: &Partition, bound: u32) -> Vec<Tableau> {
    fn rec(cells: &[Cell], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == cells.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(cells, left - v, cur, out);
            cur.pop();
        }
    }
    let cells: Vec<Cell> = shape.cells().collect();
    let mut flat = Vec::new();
    rec(&cells, bound, &mut Vec::new(), &mut flat);
    flat.into_iter()
        .map(|v| {
            let mut it = v.into_iter();
            let rows = shape
                .parts()
                .iter()
                .map(|&l| (&mut it).take(l).collect())
                .collect();
            Tableau::new(shape.clone(), rows).expect("fits")
        })
        .collect()
}

fn partial_sums(p: &Partition, r: usize) -> u64 {
    p.parts().iter().take(r).map(|&x| x as u64).sum()
}

/// Chain maxima in `R_k` against partial sums of the diagonal partition of
/// `Φ(t)` and of its conjugate; also against Greene's theorem via RSK.
pub fn gk(cfg: &Config) -> Report {
    let mut t = Tally::default();
    let shape = &cfg.gk_shape;
    let tabs = tableaux_by_entry_sum(shape, cfg.gk_entry_sum);
    let ceiling = cfg.budget.ceiling;
    t.run(tabs.iter(), |tab, t| {
        let pi = build(tab);
        for k in shape.min_content()..=shape.max_content() {
            let mu = diag_partition(&pi, k);
            let greene = gk_rsk_shape(tab, k);
            t.check(greene == mu, || {
                format!("RSK shape {greene} vs diagonal {mu} at {k}")
            });
            let conj = mu.conjugate();
            let max_r = mu.len().max(conj.len()) + 1;
            for r in 1..=max_r {
                for (kind, want) in [
                    (ChainKind::WeakSouthEast, partial_sums(&mu, r)),
                    (ChainKind::StrictNorthEast, partial_sums(&conj, r)),
                ] {
                    let Some(got) = t.guard(gk_chain_max(tab, k, r, kind, ceiling)) else {
                        return;
                    };
                    t.check(got == want, || {
                        format!("{kind:?} r={r} k={k}: {got} vs {want} for {:?}", tab.rows())
                    });
                }
            }
        }
    });
    t.report("gk")
}

/// For square `π` whose traces are `n − |k|`, `Φ ∘ HG` conjugates every
/// diagonal partition.
pub fn syt(cfg: &Config) -> Report {
    let mut t = Tally::default();
    for n in 1..=cfg.syt_max_n {
        let shape = Partition::square(n);
        let Some(it) = t.guard(enumerate_rpps(&shape, n * n, &cfg.budget)) else {
            continue;
        };
        let qualifying = it.filter(|pi| {
            (0..n as i32).all(|k| {
                let want = n as u64 - k as u64;
                pi.trace(k) == want && pi.trace(-k) == want
            })
        });
        let before = t.cases;
        t.run(qualifying, |pi, t| match check_syt(pi) {
            Ok(ok) => t.check(ok, || format!("diagonals not conjugated for\n{pi}")),
            Err(e) => t.fail(e.to_string()),
        });
        t.notes
            .push(format!("n = {n}: {} qualifying fillings", t.cases - before));
    }
    t.report("syt")
}

/// `RSK ∘ HG ∘ Φ(σ)` is the transposed pair of `RSK(σ)` for permutations.
pub fn rsk_theorem(cfg: &Config) -> Report {
    let mut t = Tally::default();
    for n in 1..=cfg.perm_max_n {
        t.run(permutations(n).into_iter(), |w, t| {
            let sigma = permutation_matrix(w).expect("permutation");
            match check_rsk_theorem(&sigma) {
                Ok(ok) => t.check(ok, || format!("RSK transpose fails for {w:?}")),
                Err(e) => t.fail(e.to_string()),
            }
        });
    }
    t.report("rsk-thm")
}

/// `HG ∘ Φ` is an involution on permutation matrices but not on all
/// tableaux of square shape.
pub fn involution(cfg: &Config) -> Report {
    let mut t = Tally::default();
    for n in 1..=cfg.perm_max_n {
        t.run(permutations(n).into_iter(), |w, t| {
            let sigma = permutation_matrix(w).expect("permutation");
            let once = hg_phi(&sigma);
            t.check(is_permutation_matrix(&once), || {
                format!("HG∘Φ({w:?}) is not a permutation")
            });
            t.check(hg_phi(&once) == sigma, || {
                format!("not an involution at {w:?}")
            });
        });
    }
    let mut found = None;
    'search: for n in 1..=cfg.perm_max_n {
        let shape = Partition::square(n);
        let Some(it) = t.guard(enumerate_tableaux(
            &shape,
            cfg.counterexample_bound,
            &cfg.budget,
        )) else {
            break;
        };
        for tab in it {
            if !is_permutation_matrix(&tab) && hg_phi(&hg_phi(&tab)) != tab {
                found = Some(tab);
                break 'search;
            }
        }
    }
    match found {
        Some(tab) => {
            t.cases += 1;
            t.notes.push(format!(
                "non-involutive: {:?} ↦ {:?} ↦ {:?}",
                tab.rows(),
                hg_phi(&tab).rows(),
                hg_phi(&hg_phi(&tab)).rows()
            ));
        }
        None => t.fail("no non-permutation tableau with (HG∘Φ)² ≠ id in range".into()),
    }
    t.report("involution")
}

pub const SUITES: &[&str] = &[
    "stanley",
    "gansner",
    "bijection",
    "golden",
    "pak",
    "commutation",
    "insertion-uniqueness",
    "crossing",
    "hg",
    "diag",
    "gk",
    "syt",
    "rsk-thm",
    "involution",
];

/// Runs one suite by name.
pub fn run(name: &str, cfg: &Config) -> Option<Report> {
    Some(match name {
        "stanley" => stanley(cfg),
        "gansner" => gansner(cfg),
        "bijection" => bijection(cfg),
        "golden" => golden(),
        "pak" => pak(cfg),
        "commutation" => commutation(cfg),
        "insertion-uniqueness" => insertion_uniqueness(cfg),
        "crossing" => crossing(cfg),
        "hg" => hillman_grassl(cfg),
        "diag" => diag(cfg),
        "gk" => gk(cfg),
        "syt" => syt(cfg),
        "rsk-thm" => rsk_theorem(cfg),
        "involution" => involution(cfg),
        _ => return None,
    })
}

pub fn all(cfg: &Config) -> Vec<Report> {
    SUITES
        .iter()
        .map(|s| run(s, cfg).expect("known suite"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Config {
        Config {
            shapes: vec!["2,1".parse().unwrap(), "2,2".parse().unwrap()],
            stanley_degree: 5,
            gansner_degree: 4,
            bijection_bound: 4,
            commute_bound: 4,
            small_shape_max: 4,
            small_rpp_bound: 3,
            gk_shape: "2,2".parse().unwrap(),
            gk_entry_sum: 3,
            syt_max_n: 2,
            perm_max_n: 3,
            counterexample_bound: 8,
            ..Config::default()
        }
    }

    #[test]
    fn every_suite_passes_on_a_small_range() {
        let cfg = tiny();
        for r in all(&cfg) {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn entry_sum_enumeration() {
        // C(b + n, n) fillings of n cells with sum ≤ b
        assert_eq!(tableaux_by_entry_sum(&Partition::square(3), 5).len(), 2002);
        assert_eq!(tableaux_by_entry_sum(&"2,1".parse().unwrap(), 2).len(), 10);
    }

    #[test]
    fn unknown_suite() {
        assert!(run("nope", &tiny()).is_none());
    }

    #[test]
    fn report_lines() {
        let r = golden();
        assert!(r.to_string().starts_with("PASS golden"));
    }
}
