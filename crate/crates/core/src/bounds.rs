//! Closed-form δ-chromatic values and instance checks of the inequalities
//! relating χ, χ_δ and the degree partition. All arithmetic is on integers;
//! square roots are compared by squaring.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::families::FamilySpec;
use crate::graph::Graph;

/// `⌈a / b⌉` for `b > 0`.
#[inline]
pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `{|d(u) - d(v)| > 0 : u, v ∈ V(g)}`.
pub fn positive_degree_differences(g: &Graph) -> BTreeSet<usize> {
    let ds: BTreeSet<usize> = g.degrees().into_iter().collect();
    let ds: Vec<usize> = ds.into_iter().collect();
    let mut out = BTreeSet::new();
    for (i, a) in ds.iter().enumerate() {
        for b in &ds[i + 1..] {
            out.insert(b - a);
        }
    }
    out
}

/// Smallest positive degree difference shared by `g` and `h`, if any.
pub fn degree_difference_collision(g: &Graph, h: &Graph) -> Option<usize> {
    let a = positive_degree_differences(g);
    let b = positive_degree_differences(h);
    a.intersection(&b).next().copied()
}

/// A closed-form value together with where it applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: usize,
    pub note: String,
}

/// χ_δ(S_{1,m} □ P_n) from the general closed form `m⌈(n-2)/2⌉`, and the
/// value certified by a matching coloring and clique, which is `2m` for
/// `n ∈ {3, 4}`.
pub fn star_path_values(m: usize, n: usize) -> (usize, usize) {
    (star_path_statement_value(m, n), star_path_proof_value(m, n))
}

/// `m⌈(n-2)/2⌉`, the general closed form for `S_{1,m} □ P_n`.
pub fn star_path_statement_value(m: usize, n: usize) -> usize {
    m * ceil_div(n - 2, 2)
}

/// The value backed by a matching coloring and clique: `2m` for
/// `n ∈ {3, 4}`, otherwise the general closed form.
pub fn star_path_proof_value(m: usize, n: usize) -> usize {
    if n <= 4 {
        2 * m
    } else {
        star_path_statement_value(m, n)
    }
}

pub fn path_path_value(n: usize, k: usize) -> usize {
    ceil_div((n - 2) * (k - 2), 2)
}

/// Closed-form χ_δ for the covered families inside their hypothesis ranges.
pub fn formula_chi_delta(spec: &FamilySpec) -> Option<FormulaValue> {
    use FamilySpec::*;
    let fv = |value: usize, note: &str| {
        Some(FormulaValue {
            value,
            note: note.to_string(),
        })
    };
    match spec {
        Path(n) if *n >= 5 => fv(ceil_div(n - 2, 2), "path, n >= 5"),
        Cycle(n) if *n >= 4 => fv(ceil_div(*n, 2), "cycle, n >= 4"),
        Wheel(n) if *n >= 4 => fv(1 + ceil_div(*n, 2), "wheel, rim >= 4"),
        Join(a, b) if **a == Complete(1) || **a == Empty(1) => match **b {
            Cycle(n) => formula_chi_delta(&Wheel(n)),
            _ => None,
        },
        Product(fs) if fs.len() == 2 => {
            let (a, b) = (&fs[0], &fs[1]);
            match (a, b) {
                (Cycle(n), Path(3)) | (Path(3), Cycle(n)) if *n >= 5 => {
                    fv(2 * ceil_div(*n, 2), "cycle x P3, n >= 5")
                }
                (Star(m), Star(n)) if *m >= 3 && *n >= 3 => fv(m * n, "star x star, m, n >= 3"),
                (Star(m), Path(n)) | (Path(n), Star(m)) if *m >= 3 && *n >= 3 => {
                    let (statement, proof) = star_path_values(*m, *n);
                    if statement == proof {
                        fv(proof, "star x path, m >= 3, n >= 5")
                    } else {
                        fv(
                            proof,
                            &format!(
                                "star x path, n in {{3,4}}: closed form m*ceil((n-2)/2) gives {statement}, \
                                 the clique and coloring give {proof}"
                            ),
                        )
                    }
                }
                (Path(a), Path(b)) => {
                    let (n, k) = ((*a).min(*b), (*a).max(*b));
                    if n >= 6 {
                        fv(path_path_value(n, k), "path x path, 6 <= n <= k")
                    } else {
                        None
                    }
                }
                _ => None,
            }
        }
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
        })
    }
}

/// One integer comparison `lhs rel rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub label: String,
    pub lhs: u64,
    pub relation: Relation,
    pub rhs: u64,
    pub holds: bool,
}

impl Comparison {
    pub fn new(label: impl Into<String>, lhs: u64, relation: Relation, rhs: u64) -> Self {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
        };
        Self {
            label: label.into(),
            lhs,
            relation,
            rhs,
            holds,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {}",
            self.label, self.lhs, self.relation, self.rhs
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Verdict of one bound on one instance. Checks whose hypothesis fails carry
/// no comparisons and report as skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub id: &'static str,
    pub params: String,
    pub hypothesis_met: bool,
    pub comparisons: Vec<Comparison>,
}

impl BoundCheck {
    fn skipped(id: &'static str, params: String) -> Self {
        Self {
            id,
            params,
            hypothesis_met: false,
            comparisons: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.comparisons.iter().all(|c| c.holds)
    }

    pub fn status(&self) -> Status {
        if !self.hypothesis_met {
            Status::Skipped
        } else if self.holds() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn summary(&self) -> String {
        self.comparisons
            .iter()
            .map(Comparison::to_string)
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// The two Nordhaus–Gaddum-type inequalities, for graphs on at least four
/// vertices:
///
/// - `NG-product`: `n_max ≤ χ·χ_δ ≤ ((m+n)/2)²`, checked as
///   `4·n_max ≤ 4·χ·χ_δ ≤ (m+n)²`
/// - `NG-sum`: `2√n_max ≤ χ+χ_δ ≤ m+n`, checked as `4·n_max ≤ (χ+χ_δ)²`
///   and `χ+χ_δ ≤ m+n`
pub fn ng_bounds_check(g: &Graph, chi: usize, chi_d: usize) -> [BoundCheck; 2] {
    let n = g.n();
    let part = g.degree_partition();
    let (m, n_max) = (part.m() as u64, part.n_max() as u64);
    let params = format!("n={n} m={m} n_max={n_max} chi={chi} chi_d={chi_d}");
    if n < 4 {
        return [
            BoundCheck::skipped("NG-product", params.clone()),
            BoundCheck::skipped("NG-sum", params),
        ];
    }
    let (chi, chi_d, n) = (chi as u64, chi_d as u64, n as u64);
    let product = BoundCheck {
        id: "NG-product",
        params: params.clone(),
        hypothesis_met: true,
        comparisons: vec![
            Comparison::new(
                "4*n_max vs 4*chi*chi_d",
                4 * n_max,
                Relation::Le,
                4 * chi * chi_d,
            ),
            Comparison::new(
                "4*chi*chi_d vs (m+n)^2",
                4 * chi * chi_d,
                Relation::Le,
                (m + n).pow(2),
            ),
        ],
    };
    let sum = BoundCheck {
        id: "NG-sum",
        params,
        hypothesis_met: true,
        comparisons: vec![
            Comparison::new(
                "4*n_max vs (chi+chi_d)^2",
                4 * n_max,
                Relation::Le,
                (chi + chi_d).pow(2),
            ),
            Comparison::new("chi+chi_d vs m+n", chi + chi_d, Relation::Le, m + n),
        ],
    };
    [product, sum]
}

/// `max_i χ_δ(G_i) ≤ χ_δ(G_1 □ … □ G_k)`.
pub fn lower_max_factor_check(chi_d_each: &[usize], chi_d_product: usize) -> BoundCheck {
    let max = chi_d_each.iter().copied().max().unwrap_or(0);
    BoundCheck {
        id: "lower-max-factor",
        params: format!("factors={chi_d_each:?} product={chi_d_product}"),
        hypothesis_met: true,
        comparisons: vec![Comparison::new(
            "max factor chi_d vs product chi_d",
            max as u64,
            Relation::Le,
            chi_d_product as u64,
        )],
    }
}

/// `χ_δ(G□H) ≤ n_max(H)·max(χ_δ(G), m(H))` when no positive degree
/// difference of `g` equals one of `h`.
pub fn upper_degree_diff_check(
    g: &Graph,
    h: &Graph,
    chi_d_g: usize,
    chi_d_product: usize,
) -> BoundCheck {
    let part = h.degree_partition();
    let rhs = part.n_max() * chi_d_g.max(part.m());
    let params = format!(
        "chi_d_g={chi_d_g} n_max_h={} m_h={} product={chi_d_product}",
        part.n_max(),
        part.m()
    );
    if degree_difference_collision(g, h).is_some() {
        return BoundCheck::skipped("upper-degree-diff", params);
    }
    BoundCheck {
        id: "upper-degree-diff",
        params,
        hypothesis_met: true,
        comparisons: vec![Comparison::new(
            "product chi_d vs n_max(H)*max(chi_d(G), m(H))",
            chi_d_product as u64,
            Relation::Le,
            rhs as u64,
        )],
    }
}

/// `2⌈(n-2)/2⌉ + 2⌈(k-2)/2⌉ + 1 < ⌈(n-2)(k-2)/2⌉` for `n ≥ 6`, `k ≥ 8`.
pub fn lemma_ceiling_check(n: usize, k: usize) -> BoundCheck {
    let params = format!("n={n} k={k}");
    if n < 6 || k < 8 {
        return BoundCheck::skipped("lemma-ceiling", params);
    }
    let lhs = 2 * ceil_div(n - 2, 2) + 2 * ceil_div(k - 2, 2) + 1;
    BoundCheck {
        id: "lemma-ceiling",
        params,
        hypothesis_met: true,
        comparisons: vec![Comparison::new(
            "boundary colors vs interior colors",
            lhs as u64,
            Relation::Lt,
            path_path_value(n, k) as u64,
        )],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, star};

    fn spec(s: &str) -> FamilySpec {
        FamilySpec::parse(s).unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(formula_chi_delta(&spec("C11")).unwrap().value, 6);
        assert_eq!(formula_chi_delta(&spec("X(P6,P9)")).unwrap().value, 14);
        assert_eq!(formula_chi_delta(&spec("P4")), None);
        assert_eq!(formula_chi_delta(&spec("W9")).unwrap().value, 6);
        assert_eq!(formula_chi_delta(&spec("J(K1,C9)")).unwrap().value, 6);
        assert_eq!(formula_chi_delta(&spec("X(C9,P3)")).unwrap().value, 10);
        assert_eq!(formula_chi_delta(&spec("X(S1,4,S1,3)")).unwrap().value, 12);
        assert_eq!(formula_chi_delta(&spec("X(S1,3,P7)")).unwrap().value, 9);
        assert_eq!(formula_chi_delta(&spec("X(P5,P9)")), None);
    }

    #[test]
    fn star_path_discrepancy_is_reported() {
        assert_eq!(star_path_values(3, 3), (3, 6));
        assert_eq!(star_path_values(4, 4), (4, 8));
        assert_eq!(star_path_values(4, 6), (8, 8));
        let f = formula_chi_delta(&spec("X(S1,3,P3)")).unwrap();
        assert_eq!(f.value, 6);
        assert!(f.note.contains("closed form m*ceil((n-2)/2) gives 3"));
    }

    #[test]
    fn ng_examples() {
        let [p, s] = ng_bounds_check(&cycle(5), 3, 3);
        assert_eq!(p.status(), Status::Pass);
        assert_eq!(s.status(), Status::Pass);
        // sum upper bound is tight: 6 <= 6
        assert_eq!((s.comparisons[1].lhs, s.comparisons[1].rhs), (6, 6));
        assert_eq!((p.comparisons[1].lhs, p.comparisons[1].rhs), (36, 36));

        let [p, _] = ng_bounds_check(&path(5), 2, 2);
        assert_eq!(p.comparisons[0].lhs, 12); // 4 * n_max
        assert_eq!(p.comparisons[1].rhs, 49); // (2 + 5)^2
        assert!(p.holds());

        let [p, s] = ng_bounds_check(&complete(3), 3, 1);
        assert_eq!((p.status(), s.status()), (Status::Skipped, Status::Skipped));
    }

    #[test]
    fn lower_max_factor_examples() {
        assert!(lower_max_factor_check(&[5, 1], 10).holds());
        assert!(lower_max_factor_check(&[1, 4], 4).holds());
        assert!(!lower_max_factor_check(&[5], 4).holds());
    }

    #[test]
    fn upper_degree_diff_examples() {
        let c = upper_degree_diff_check(&cycle(5), &path(3), 3, 6);
        assert_eq!(c.status(), Status::Pass);
        assert_eq!(c.comparisons[0].rhs, 6);
        assert_eq!(positive_degree_differences(&star(3)), BTreeSet::from([2]));
        assert_eq!(degree_difference_collision(&star(3), &path(3)), None);
        let c = upper_degree_diff_check(&path(4), &path(4), 2, 4);
        assert_eq!(c.status(), Status::Skipped);
    }

    #[test]
    fn lemma_examples() {
        let c = lemma_ceiling_check(6, 8);
        assert_eq!((c.comparisons[0].lhs, c.comparisons[0].rhs), (11, 12));
        assert!(c.holds());
        let c = lemma_ceiling_check(7, 9);
        assert_eq!((c.comparisons[0].lhs, c.comparisons[0].rhs), (15, 18));
        assert_eq!(lemma_ceiling_check(6, 7).status(), Status::Skipped);
    }
}
