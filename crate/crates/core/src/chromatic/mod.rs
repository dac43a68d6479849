//! Exact chromatic numbers.
//!
//! [`chromatic_number`] brackets χ between a maximum-clique lower bound and a
//! DSATUR upper bound, then closes any gap with a k-colorability search.
//! [`oracle_chromatic`] is a separate exhaustive search used to cross-check
//! it on small graphs.

mod clique;
mod coloring;
mod dsatur;
mod exact;
mod oracle;

use std::time::{Duration, Instant};

use serde::Serialize;

pub use clique::{max_clique, CliqueResult, DEFAULT_CLIQUE_BUDGET};
pub use coloring::{is_proper, Coloring};
pub use dsatur::dsatur;
pub use oracle::{oracle_chromatic, ORACLE_MAX_VERTICES};

use crate::graph::Graph;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Clone, Debug)]
pub struct SolverOptions {
    pub timeout: Duration,
    pub clique_budget: u64,
    /// Pick the next vertex by current saturation during the search instead
    /// of the precomputed DSATUR order.
    pub dynamic_ordering: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            timeout: DEFAULT_TIMEOUT,
            clique_budget: DEFAULT_CLIQUE_BUDGET,
            dynamic_ordering: false,
        }
    }
}

impl SolverOptions {
    pub fn with_timeout(timeout: Duration) -> Self {
        Self {
            timeout,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Clique size met the DSATUR color count.
    Sandwich,
    BranchAndBound,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Sandwich => "sandwich",
            Method::BranchAndBound => "branch-and-bound",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ChromaticResult {
    /// `None` when the search timed out before closing `[lower, upper]`.
    pub chi: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    /// Proper coloring with `upper` colors.
    pub witness: Coloring,
    pub clique: Vec<usize>,
    pub method: Method,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    chi: Option<usize>,
    lower: usize,
    upper: usize,
    exact: bool,
    witness: &'a [usize],
    method: Method,
    ms: u128,
}

impl ChromaticResult {
    pub fn is_exact(&self) -> bool {
        self.chi.is_some()
    }

    pub fn clique_lower(&self) -> usize {
        self.clique.len()
    }

    /// `{"chi","lower","upper","exact","witness","method","ms"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ResultJson {
            chi: self.chi,
            lower: self.lower,
            upper: self.upper,
            exact: self.is_exact(),
            witness: self.witness.colors(),
            method: self.method,
            ms: self.elapsed.as_millis(),
        })
        .expect("result json is always serializable")
    }
}

pub fn chromatic_number(g: &Graph, opts: &SolverOptions) -> ChromaticResult {
    let start = Instant::now();
    let deadline = start + opts.timeout;
    let clique = max_clique(g, opts.clique_budget);
    let mut best = dsatur(g);
    let mut lower = clique.clique.len();
    let mut upper = best.colors_used();

    if lower == upper {
        return ChromaticResult {
            chi: Some(upper),
            lower,
            upper,
            witness: best,
            clique: clique.clique,
            method: Method::Sandwich,
            elapsed: start.elapsed(),
        };
    }

    let search = exact::Search::new(g, &clique.clique, opts.dynamic_ordering);
    while lower < upper {
        match search.color_with(lower, deadline) {
            exact::Outcome::Colored(c) => {
                upper = lower;
                best = c;
            }
            exact::Outcome::Infeasible => lower += 1,
            exact::Outcome::TimedOut => {
                return ChromaticResult {
                    chi: None,
                    lower,
                    upper,
                    witness: best,
                    clique: clique.clique,
                    method: Method::BranchAndBound,
                    elapsed: start.elapsed(),
                };
            }
        }
    }
    ChromaticResult {
        chi: Some(upper),
        lower,
        upper,
        witness: best,
        clique: clique.clique,
        method: Method::BranchAndBound,
        elapsed: start.elapsed(),
    }
}

/// χ of the δ-complement of `g`.
pub fn chi_delta(g: &Graph, opts: &SolverOptions) -> ChromaticResult {
    chromatic_number(&g.delta_complement(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, star, wheel};
    use crate::graph::cartesian_product;

    fn chi(g: &Graph) -> usize {
        let r = chromatic_number(g, &SolverOptions::default());
        assert!(r.witness.is_proper(g).unwrap());
        assert_eq!(r.witness.colors_used(), r.chi.unwrap());
        r.chi.unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chi(&cycle(9).delta_complement()), 5);
        assert_eq!(chi(&path(7).delta_complement()), 3);
        assert_eq!(chi(&Graph::empty(1)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
    }

    #[test]
    fn chi_delta_examples() {
        let opts = SolverOptions::default();
        assert_eq!(chi_delta(&wheel(9), &opts).chi, Some(6));
        for n in 1..7 {
            assert_eq!(chi_delta(&complete(n), &opts).chi, Some(1));
        }
        let (c5p3, _) = cartesian_product(&[&cycle(5), &path(3)]).unwrap();
        assert_eq!(chi_delta(&c5p3, &opts).chi, Some(6));
        let (sp, _) = cartesian_product(&[&star(3), &path(3)]).unwrap();
        assert_eq!(chi_delta(&sp, &opts).chi, Some(6));
    }

    #[test]
    fn dynamic_ordering_agrees() {
        let opts = SolverOptions {
            dynamic_ordering: true,
            ..SolverOptions::default()
        };
        let (c7p3, _) = cartesian_product(&[&cycle(7), &path(3)]).unwrap();
        assert_eq!(chi_delta(&c7p3, &opts).chi, Some(8));
    }

    #[test]
    fn timeout_reports_bracket() {
        let (c7p3, _) = cartesian_product(&[&cycle(7), &path(3)]).unwrap();
        let r = chi_delta(&c7p3, &SolverOptions::with_timeout(Duration::ZERO));
        assert!(!r.is_exact());
        assert!(r.lower <= 8 && 8 <= r.upper);
        let j = r.to_json();
        assert_eq!(j["exact"], false);
        assert!(j["chi"].is_null());
    }

    #[test]
    fn json_schema() {
        let r = chromatic_number(&complete(3), &SolverOptions::default());
        let j = r.to_json();
        assert_eq!(j["chi"], 3);
        assert_eq!(j["method"], "sandwich");
        assert_eq!(j["witness"].as_array().unwrap().len(), 3);
        let keys: Vec<&String> = j.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 7);
    }

    #[test]
    fn deterministic_witness() {
        let (g, _) = cartesian_product(&[&star(3), &path(4)]).unwrap();
        let a = chi_delta(&g, &SolverOptions::default());
        let b = chi_delta(&g, &SolverOptions::default());
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.clique, b.clique);
    }
}
