//! Exact χ_δ with the clique/DSATUR sandwich and branch-and-bound fallback,
//! cross-checked against the closed forms and, on small graphs, the
//! exhaustive oracle.
//!
//! ```text
//! cargo run --example chromatic_solver -- "X(C7,P3)"
//! ```

use delta_chromatic::bounds::formula_chi_delta;
use delta_chromatic::chromatic::{chi_delta, oracle_chromatic, SolverOptions, ORACLE_MAX_VERTICES};
use delta_chromatic::families::{generate, FamilySpec};

fn main() -> delta_chromatic::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs = if args.is_empty() {
        ["P9", "C9", "W7", "X(C5,P3)", "X(S1,3,S1,3)", "X(P6,P7)"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    let opts = SolverOptions::default();
    for text in specs {
        let spec = FamilySpec::parse(&text)?;
        let g = generate(&spec)?;
        let r = chi_delta(&g, &opts);
        let formula = formula_chi_delta(&spec).map_or("-".to_string(), |f| f.value.to_string());
        let oracle = if g.n() <= ORACLE_MAX_VERTICES {
            oracle_chromatic(&g.delta_complement())?.to_string()
        } else {
            "-".into()
        };
        println!(
            "{spec:<14} n={:<3} chi_delta={:<4} formula={formula:<4} oracle={oracle:<3} clique={:<3} method={} ({} ms)",
            g.n(),
            r.chi.map_or(format!("[{},{}]", r.lower, r.upper), |c| c.to_string()),
            r.clique_lower(),
            r.method,
            r.elapsed.as_millis()
        );
    }
    Ok(())
}
