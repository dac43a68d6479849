//! Instance-by-instance verification suites. Each check id expands to a list
//! of instances (a parameter range or a seeded random corpus) and yields one
//! [`TheoremReport`] row per instance, in a deterministic order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    ceil_div, lemma_ceiling_check, lower_max_factor_check, ng_bounds_check, path_path_value,
    star_path_values, upper_degree_diff_check,
};
use crate::chromatic::{
    chi_delta, chromatic_number, oracle_chromatic, ChromaticResult, SolverOptions,
};
use crate::constructions::{
    check, path_path_coloring, star_path_coloring, star_star_coloring, Certified,
};
use crate::error::{Error, Result};
use crate::families::{complete, cycle, path, random_connected_graph, random_graph, star, wheel};
use crate::graph::{cartesian_product, Graph};
use crate::report::{TheoremReport, Verdict};
use crate::structure::{delta_of_product, equality_holds};

/// Inclusive integer range written `a..b`, or a single value `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub const fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            input: s.to_string(),
            pos: 0,
            msg: msg.to_string(),
        };
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad("expected an integer"))
        };
        let span = match s.split_once("..") {
            Some((a, b)) => Span::new(num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let v = num(s)?;
                Span::new(v, v)
            }
        };
        if span.lo > span.hi {
            return Err(bad("empty range"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

pub const CHECK_IDS: [&str; 14] = [
    "path-formula",
    "cycle-formula",
    "wheel-formula",
    "structure",
    "equality",
    "cycle-p3",
    "star-star",
    "star-path",
    "path-path",
    "lemma-ceiling",
    "ng",
    "sabidussi",
    "oracle",
    "degree-diff",
];

/// Per-run overrides; `None` selects each check's default.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub n: Option<Span>,
    pub k: Option<Span>,
    pub m: Option<Span>,
    pub trials: Option<usize>,
    pub seed: u64,
    pub max: Option<usize>,
    pub solver: SolverOptions,
}

impl VerifyOptions {
    fn n_or(&self, lo: usize, hi: usize) -> Span {
        self.n.unwrap_or(Span::new(lo, hi))
    }
    fn k_or(&self, lo: usize, hi: usize) -> Span {
        self.k.unwrap_or(Span::new(lo, hi))
    }
    fn m_or(&self, lo: usize, hi: usize) -> Span {
        self.m.unwrap_or(Span::new(lo, hi))
    }
    fn trials_or(&self, d: usize) -> usize {
        self.trials.unwrap_or(d)
    }
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Runs one check id, or every check for `"all"`.
pub fn run(id: &str, opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    if id == "all" {
        let mut rows = Vec::new();
        for id in CHECK_IDS {
            rows.extend(run(id, opts)?);
        }
        return Ok(rows);
    }
    Ok(match id {
        "path-formula" => path_formula(opts),
        "cycle-formula" => cycle_formula(opts),
        "wheel-formula" => wheel_formula(opts),
        "structure" => structure(opts)?,
        "equality" => equality(opts)?,
        "cycle-p3" => cycle_p3(opts)?,
        "star-star" => star_star(opts)?,
        "star-path" => star_path(opts)?,
        "path-path" => path_path(opts)?,
        "lemma-ceiling" => lemma_ceiling(opts),
        "ng" => ng(opts),
        "sabidussi" => sabidussi(opts)?,
        "oracle" => oracle(opts)?,
        "degree-diff" => degree_diff(opts)?,
        other => {
            return Err(Error::InvalidFamily(format!(
                "unknown check id {other:?}; expected one of {} or all",
                CHECK_IDS.join(", ")
            )))
        }
    })
}

/// Formats a solver result as `"5"` or `"[4,6]"` when inexact.
pub fn chi_text(r: &ChromaticResult) -> String {
    match r.chi {
        Some(c) => c.to_string(),
        None => format!("[{},{}]", r.lower, r.upper),
    }
}

/// Row comparing an exact solver value against an expected one.
fn solver_row(
    theorem: &str,
    params: String,
    expected: usize,
    r: &ChromaticResult,
) -> TheoremReport {
    let status = match r.chi {
        None => Verdict::Timeout,
        Some(c) if c == expected => Verdict::Pass,
        Some(_) => Verdict::Fail,
    };
    TheoremReport::new(
        theorem,
        params,
        expected.to_string(),
        chi_text(r),
        status,
        r.elapsed,
    )
    .with_note(format!("{}; clique {}", r.method, r.clique_lower()))
}

fn path_formula(opts: &VerifyOptions) -> Vec<TheoremReport> {
    opts.n_or(5, 14)
        .iter()
        .map(|n| {
            let r = chi_delta(&path(n), &opts.solver);
            solver_row(
                "path-formula",
                format!("n={n}"),
                ceil_div(n.saturating_sub(2), 2),
                &r,
            )
        })
        .collect()
}

fn cycle_formula(opts: &VerifyOptions) -> Vec<TheoremReport> {
    opts.n_or(3, 14)
        .iter()
        .filter(|&n| n >= 3)
        .map(|n| {
            let r = chi_delta(&cycle(n), &opts.solver);
            solver_row("cycle-formula", format!("n={n}"), ceil_div(n, 2), &r)
        })
        .collect()
}

fn wheel_formula(opts: &VerifyOptions) -> Vec<TheoremReport> {
    opts.n_or(3, 10)
        .iter()
        .filter(|&n| n >= 3)
        .map(|n| {
            let r = chi_delta(&wheel(n), &opts.solver);
            solver_row("wheel-formula", format!("n={n}"), 1 + ceil_div(n, 2), &r)
        })
        .collect()
}

/// Seeded random factor lists: `pairs` lists of two graphs on 2..=6
/// vertices, then `triples` lists of three graphs on 1..=4 vertices.
pub fn structure_corpus(seed: u64, pairs: usize, triples: usize) -> Vec<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(pairs + triples);
    for _ in 0..pairs {
        out.push(
            (0..2)
                .map(|_| {
                    let n = rng.gen_range(2..=6);
                    random_graph(n, 0.5, &mut rng)
                })
                .collect(),
        );
    }
    for _ in 0..triples {
        out.push(
            (0..3)
                .map(|_| {
                    let n = rng.gen_range(1..=4);
                    random_graph(n, 0.5, &mut rng)
                })
                .collect(),
        );
    }
    out
}

fn factor_sizes(gs: &[Graph]) -> String {
    gs.iter()
        .map(|g| format!("{}/{}", g.n(), g.edge_count()))
        .collect::<Vec<_>>()
        .join(" x ")
}

/// `--trials t` sets `t` pairs and `⌈2t/5⌉` triples (50 and 20 by default).
fn structure_trials(opts: &VerifyOptions) -> (usize, usize) {
    let pairs = opts.trials_or(50);
    let triples = (2 * pairs).div_ceil(5);
    (pairs, triples)
}

fn structure(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let (pairs, triples) = structure_trials(opts);
    structure_corpus(opts.seed, pairs, triples)
        .iter()
        .enumerate()
        .map(|(i, gs)| {
            let t = Instant::now();
            let d = delta_of_product(gs)?;
            let ok = d.union_identity_holds() && d.is_disjoint();
            Ok(TheoremReport::new(
                "structure",
                format!("#{i} {}", factor_sizes(gs)),
                "E(delta) = E(prod of deltas) + S",
                format!(
                    "|E(delta)|={} |E(prod)|={} |S|={}",
                    d.delta_of_product.edge_count(),
                    d.product_of_deltas.edge_count(),
                    d.extra_edges.len()
                ),
                if ok { Verdict::Pass } else { Verdict::Fail },
                t.elapsed(),
            ))
        })
        .collect()
}

fn equality_row(params: String, gs: &[Graph], expected: Option<bool>) -> Result<TheoremReport> {
    let t = Instant::now();
    let d = delta_of_product(gs)?;
    let eq = equality_holds(gs);
    let s_empty = d.extra_edges.is_empty();
    let literal = d.delta_of_product.edges().eq(d.product_of_deltas.edges());
    let ok = eq == s_empty && eq == literal && expected.is_none_or(|e| e == eq);
    Ok(TheoremReport::new(
        "equality",
        params,
        match expected {
            Some(e) => format!("equal={e}"),
            None => "equal iff S empty".into(),
        },
        format!("equal={eq} |S|={}", d.extra_edges.len()),
        if ok { Verdict::Pass } else { Verdict::Fail },
        t.elapsed(),
    ))
}

fn equality(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let (pairs, triples) = structure_trials(opts);
    let mut rows: Vec<TheoremReport> = structure_corpus(opts.seed, pairs, triples)
        .iter()
        .enumerate()
        .map(|(i, gs)| equality_row(format!("#{i} {}", factor_sizes(gs)), gs, None))
        .collect::<Result<_>>()?;
    for (name, h) in [("C5", cycle(5)), ("S1,4", star(4)), ("P6", path(6))] {
        rows.push(equality_row(
            format!("K1 x {name}"),
            &[Graph::empty(1), h],
            Some(true),
        )?);
    }
    rows.push(equality_row(
        "P2 x P2".into(),
        &[path(2), path(2)],
        Some(false),
    )?);
    Ok(rows)
}

fn product_chi_delta(gs: &[&Graph], opts: &SolverOptions) -> Result<ChromaticResult> {
    Ok(chi_delta(&cartesian_product(gs)?.0, opts))
}

fn cycle_p3(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    opts.n_or(5, 8)
        .iter()
        .filter(|&n| n >= 3)
        .map(|n| {
            let r = product_chi_delta(&[&cycle(n), &path(3)], &opts.solver)?;
            let expected = 2 * ceil_div(n, 2);
            Ok(
                solver_row("cycle-p3", format!("n={n}"), expected, &r).with_note(
                    if r.clique_lower() >= expected {
                        "clique certifies".to_string()
                    } else {
                        format!("clique {} below {expected}", r.clique_lower())
                    },
                ),
            )
        })
        .collect()
}

/// Row for a construction: proper, exactly `expected` colors, and a clique
/// of the same size.
fn construction_row(
    theorem: &str,
    params: String,
    expected: usize,
    delta: &Graph,
    built: &Certified,
    started: Instant,
) -> Result<TheoremReport> {
    let out = check(delta, built)?;
    let clique = built.clique.as_ref().map_or(0, Vec::len);
    let ok = out.proper && out.colors_used == expected && out.clique_certifies == Some(true);
    let mut row = TheoremReport::new(
        theorem,
        params,
        expected.to_string(),
        format!("{} colors, clique {clique}", out.colors_used),
        if ok { Verdict::Pass } else { Verdict::Fail },
        started.elapsed(),
    );
    if !out.proper {
        row = row.with_note("coloring is not proper");
    }
    for n in &built.notes {
        row = row.with_note(n);
    }
    Ok(row)
}

/// Appends an independent solver value to `row`; a disagreement fails it.
fn confirm_with_solver(
    mut row: TheoremReport,
    delta: &Graph,
    expected: usize,
    opts: &SolverOptions,
) -> TheoremReport {
    let r = chromatic_number(delta, opts);
    match r.chi {
        Some(c) if c == expected => row = row.with_note(format!("solver confirms {c}")),
        Some(c) => {
            row.status = Verdict::Fail;
            row = row.with_note(format!("solver gives {c}"));
        }
        None => {
            row.status = row.status.max(Verdict::Timeout);
            row = row.with_note(format!("solver timed out at {}", chi_text(&r)));
        }
    }
    row
}

/// Largest δ-complement the construction checks also hand to the solver.
const SOLVER_CONFIRM_VERTICES: usize = 20;

fn star_star(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for m in opts.m_or(3, 5).iter() {
        for n in opts.n_or(3, 5).iter() {
            let t = Instant::now();
            let delta = cartesian_product(&[&star(m), &star(n)])?
                .0
                .delta_complement();
            let built = star_star_coloring(m, n)?;
            let mut row = construction_row(
                "star-star",
                format!("m={m} n={n}"),
                m * n,
                &delta,
                &built,
                t,
            )?;
            if delta.n() <= 16 {
                row = confirm_with_solver(row, &delta, m * n, &opts.solver);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

fn star_path(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for m in opts.m_or(3, 4).iter() {
        for n in opts.n_or(3, 8).iter() {
            let t = Instant::now();
            let delta = cartesian_product(&[&star(m), &path(n)])?
                .0
                .delta_complement();
            let built = star_path_coloring(m, n)?;
            let (_, proof) = star_path_values(m, n);
            let mut row = construction_row(
                "star-path",
                format!("m={m} n={n}"),
                proof,
                &delta,
                &built,
                t,
            )?;
            if n <= 4 && delta.n() <= SOLVER_CONFIRM_VERTICES {
                row = confirm_with_solver(row, &delta, proof, &opts.solver);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

fn path_path(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let mut rows = Vec::new();
    for n in opts.n_or(6, 7).iter() {
        for k in opts.k_or(6, 9).iter().filter(|&k| k >= n) {
            let t = Instant::now();
            let delta = cartesian_product(&[&path(n), &path(k)])?
                .0
                .delta_complement();
            let built = path_path_coloring(n, k)?;
            rows.push(construction_row(
                "path-path",
                format!("n={n} k={k}"),
                path_path_value(n, k),
                &delta,
                &built,
                t,
            )?);
        }
    }
    Ok(rows)
}

fn bound_row(b: &crate::bounds::BoundCheck, started: Instant) -> TheoremReport {
    let (expected, computed) = match b.comparisons.as_slice() {
        [] => ("hypothesis".to_string(), "not met".to_string()),
        cs => (
            cs.iter()
                .map(|c| c.label.as_str())
                .collect::<Vec<_>>()
                .join("; "),
            cs.iter()
                .map(|c| format!("{} {} {}", c.lhs, c.relation, c.rhs))
                .collect::<Vec<_>>()
                .join("; "),
        ),
    };
    TheoremReport::new(
        b.id,
        b.params.clone(),
        expected,
        computed,
        b.status().into(),
        started.elapsed(),
    )
}

fn lemma_ceiling(opts: &VerifyOptions) -> Vec<TheoremReport> {
    let max = opts.max.unwrap_or(40);
    let mut rows = Vec::new();
    for n in 6..=max {
        for k in n.max(8)..=max {
            let t = Instant::now();
            rows.push(bound_row(&lemma_ceiling_check(n, k), t));
        }
    }
    rows
}

fn ng(opts: &VerifyOptions) -> Vec<TheoremReport> {
    let mut rng = opts.rng();
    let span = opts.n_or(4, 9);
    let mut rows = Vec::new();
    for i in 0..opts.trials_or(100) {
        let n = rng.gen_range(span.iter());
        let g = random_connected_graph(n, 0.5, &mut rng);
        let t = Instant::now();
        let chi = chromatic_number(&g, &opts.solver);
        let chi_d = chi_delta(&g, &opts.solver);
        let (Some(c), Some(cd)) = (chi.chi, chi_d.chi) else {
            rows.push(TheoremReport::new(
                "ng",
                format!("#{i} n={n}"),
                "exact chi and chi_delta",
                format!("{} / {}", chi_text(&chi), chi_text(&chi_d)),
                Verdict::Timeout,
                t.elapsed(),
            ));
            continue;
        };
        for b in ng_bounds_check(&g, c, cd) {
            let mut b = b;
            b.params = format!("#{i} n={n} chi={c} chi_d={cd}");
            rows.push(bound_row(&b, t));
        }
    }
    rows
}

fn sabidussi(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let mut rng = opts.rng();
    let span = opts.n_or(1, 6);
    (0..opts.trials_or(30))
        .map(|i| {
            let (a, b) = (rng.gen_range(span.iter()), rng.gen_range(span.iter()));
            let g = random_graph(a, 0.5, &mut rng);
            let h = random_graph(b, 0.5, &mut rng);
            let t = Instant::now();
            let cg = chromatic_number(&g, &opts.solver);
            let ch = chromatic_number(&h, &opts.solver);
            let cp = chromatic_number(&cartesian_product(&[&g, &h])?.0, &opts.solver);
            let status = match (cg.chi, ch.chi, cp.chi) {
                (Some(x), Some(y), Some(z)) if z == x.max(y) => Verdict::Pass,
                (Some(_), Some(_), Some(_)) => Verdict::Fail,
                _ => Verdict::Timeout,
            };
            Ok(TheoremReport::new(
                "sabidussi",
                format!("#{i} {}", factor_sizes(&[g, h])),
                format!("max({}, {})", chi_text(&cg), chi_text(&ch)),
                chi_text(&cp),
                status,
                t.elapsed(),
            ))
        })
        .collect()
}

fn oracle(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let mut rng = opts.rng();
    let span = opts.n_or(1, 9);
    (0..opts.trials_or(100))
        .map(|i| {
            let n = rng.gen_range(span.iter());
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(n, p, &mut rng);
            let t = Instant::now();
            let brute = oracle_chromatic(&g)?;
            let r = chromatic_number(&g, &opts.solver);
            let status = match r.chi {
                Some(c) if c == brute => Verdict::Pass,
                Some(_) => Verdict::Fail,
                None => Verdict::Timeout,
            };
            Ok(TheoremReport::new(
                "oracle",
                format!("#{i} n={n} e={}", g.edge_count()),
                brute.to_string(),
                chi_text(&r),
                status,
                t.elapsed(),
            ))
        })
        .collect()
}

/// `(name, graph)` for paths, cycles, stars and complete graphs with at
/// most `max_n` vertices.
pub fn small_families(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=max_n {
        out.push((format!("C{n}"), cycle(n)));
    }
    for m in 2..max_n {
        out.push((format!("S1,{m}"), star(m)));
    }
    for n in 2..=max_n {
        out.push((format!("K{n}"), complete(n)));
    }
    out
}

fn degree_diff(opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let limit = opts.max.unwrap_or(30);
    let fams = small_families(limit / 2);
    let mut rows = Vec::new();
    for (gname, g) in &fams {
        for (hname, h) in &fams {
            if g.n() * h.n() > limit {
                continue;
            }
            let t = Instant::now();
            let params = format!("{gname} x {hname}");
            let probe = upper_degree_diff_check(g, h, 0, 0);
            if !probe.hypothesis_met {
                let mut row = bound_row(&probe, t);
                row.params = params;
                rows.push(row);
                continue;
            }
            let rg = chi_delta(g, &opts.solver);
            let rh = chi_delta(h, &opts.solver);
            let rp = product_chi_delta(&[g, h], &opts.solver)?;
            let (Some(cg), Some(chh), Some(cp)) = (rg.chi, rh.chi, rp.chi) else {
                rows.push(TheoremReport::new(
                    "upper-degree-diff",
                    params,
                    "exact chi_delta values",
                    chi_text(&rp),
                    Verdict::Timeout,
                    t.elapsed(),
                ));
                continue;
            };
            let upper = upper_degree_diff_check(g, h, cg, cp);
            let lower = lower_max_factor_check(&[cg, chh], cp);
            let mut row = bound_row(&upper, t);
            row.params = format!("{params}: {}", upper.params);
            if upper.comparisons.iter().all(|c| c.lhs == c.rhs) {
                row = row.with_note("sharp");
            }
            if lower.status() == crate::bounds::Status::Fail {
                row.status = Verdict::Fail;
                row = row.with_note(format!("lower bound fails: {}", lower.summary()));
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::overall;

    fn opts() -> VerifyOptions {
        VerifyOptions {
            seed: 7,
            ..Default::default()
        }
    }

    #[test]
    fn span_parsing() {
        assert_eq!("6..9".parse::<Span>().unwrap(), Span::new(6, 9));
        assert_eq!("6..=9".parse::<Span>().unwrap(), Span::new(6, 9));
        assert_eq!("4".parse::<Span>().unwrap(), Span::new(4, 4));
        assert!("9..6".parse::<Span>().is_err());
        assert!("x..6".parse::<Span>().is_err());
    }

    #[test]
    fn path_path_small_range_passes() {
        let o = VerifyOptions {
            n: Some(Span::new(6, 7)),
            k: Some(Span::new(6, 9)),
            ..opts()
        };
        let rows = run("path-path", &o).unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(overall(&rows), Verdict::Pass);
    }

    #[test]
    fn structure_with_seed_passes_and_is_deterministic() {
        let o = VerifyOptions {
            trials: Some(50),
            ..opts()
        };
        let a = run("structure", &o).unwrap();
        let b = run("structure", &o).unwrap();
        assert_eq!(overall(&a), Verdict::Pass);
        let strip = |rows: &[TheoremReport]| -> Vec<String> {
            rows.iter()
                .map(|r| format!("{}|{}", r.params, r.computed))
                .collect()
        };
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn lemma_ceiling_to_forty_passes() {
        let o = VerifyOptions {
            max: Some(40),
            ..opts()
        };
        let rows = run("lemma-ceiling", &o).unwrap();
        assert!(rows.iter().all(|r| r.status == Verdict::Pass));
        assert_eq!(
            rows.len(),
            (6..=40).map(|n: usize| 40 - n.max(8) + 1).sum::<usize>()
        );
    }

    #[test]
    fn unknown_id_is_rejected() {
        assert!(run("nope", &opts()).is_err());
    }
}
