//! Randomized invariants of the graph operations and solvers.

use std::collections::BTreeSet;

use proptest::prelude::*;

use delta_chromatic::chromatic::{
    chi_delta, chromatic_number, dsatur, max_clique, oracle_chromatic, SolverOptions,
    DEFAULT_CLIQUE_BUDGET,
};
use delta_chromatic::families::{generate, FamilySpec};
use delta_chromatic::graph::{cartesian_product, Graph};
use delta_chromatic::io::{from_json, to_json};
use delta_chromatic::structure::{delta_of_product, equality_holds, extra_edge_set};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn family() -> impl Strategy<Value = FamilySpec> {
    let leaf = prop_oneof![
        (1usize..9).prop_map(FamilySpec::Path),
        (3usize..9).prop_map(FamilySpec::Cycle),
        (1usize..6).prop_map(FamilySpec::Complete),
        (1usize..6).prop_map(FamilySpec::Empty),
        (1usize..6).prop_map(FamilySpec::Star),
        (3usize..7).prop_map(FamilySpec::Wheel),
        (1usize..4, 1usize..4)
            .prop_map(|(blades, blade_size)| FamilySpec::Windmill { blades, blade_size }),
    ];
    leaf.prop_recursive(2, 8, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| FamilySpec::Join(Box::new(a), Box::new(b))),
            proptest::collection::vec(inner, 1..=3).prop_map(FamilySpec::Product),
        ]
    })
}

fn opts() -> SolverOptions {
    SolverOptions::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn delta_flips_exactly_same_degree_pairs(g in graph(10)) {
        let d = g.delta_complement();
        let deg = g.degrees();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let expect = if deg[u] == deg[v] { !g.has_edge(u, v) } else { g.has_edge(u, v) };
                prop_assert_eq!(d.has_edge(u, v), expect);
            }
        }
    }

    #[test]
    fn delta_degree_formula(g in graph(10)) {
        // a vertex of degree d in a class of size c with x neighbors inside
        // the class has degree d + c - 1 - 2x in G_δ
        let d = g.delta_complement();
        for class in g.degree_partition().classes() {
            let c = class.vertices.len();
            for &v in &class.vertices {
                let x = class.vertices.iter().filter(|&&u| g.has_edge(u, v)).count();
                prop_assert_eq!(d.degree(v).unwrap(), class.degree + c - 1 - 2 * x);
            }
        }
    }

    #[test]
    fn product_degrees_add(g in graph(6), h in graph(6)) {
        let (p, idx) = cartesian_product(&[&g, &h]).unwrap();
        for a in 0..g.n() {
            for b in 0..h.n() {
                prop_assert_eq!(p.degree(idx.flat(&[a, b])).unwrap(), g.degree(a).unwrap() + h.degree(b).unwrap());
            }
        }
        prop_assert_eq!(p.edge_count(), g.edge_count() * h.n() + g.n() * h.edge_count());
    }

    #[test]
    fn product_is_associative(a in graph(4), b in graph(4), c in graph(4)) {
        let (ab, _) = cartesian_product(&[&a, &b]).unwrap();
        let (bc, _) = cartesian_product(&[&b, &c]).unwrap();
        let (left, _) = cartesian_product(&[&ab, &c]).unwrap();
        let (right, _) = cartesian_product(&[&a, &bc]).unwrap();
        let (flat, _) = cartesian_product(&[&a, &b, &c]).unwrap();
        prop_assert!(left == flat);
        prop_assert!(right == flat);
    }

    #[test]
    fn family_text_round_trips(spec in family()) {
        let text = spec.to_string();
        let back = FamilySpec::parse(&text).unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn family_generation_is_valid(spec in family()) {
        if let Ok(g) = generate(&spec) {
            for (a, b) in g.edges() {
                prop_assert!(a < b && b < g.n());
            }
        }
    }

    #[test]
    fn json_round_trips(g in graph(12)) {
        let text = to_json(&g);
        let back = from_json(&text).unwrap();
        prop_assert!(back == g);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn structure_identity_on_pairs(g in graph(6), h in graph(6)) {
        let gs = [g, h];
        let d = delta_of_product(&gs).unwrap();
        prop_assert!(d.union_identity_holds());
        prop_assert!(d.is_disjoint());
        // S recomputed from its definition
        let mut brute = Vec::new();
        let deg = d.product.degrees();
        for u in 0..d.product.n() {
            for v in u + 1..d.product.n() {
                if deg[u] == deg[v] && d.index.hamming(u, v) >= 2 {
                    brute.push((u, v));
                }
            }
        }
        prop_assert_eq!(&brute, &d.extra_edges);
        prop_assert_eq!(equality_holds(&gs), d.extra_edges.is_empty());
    }

    #[test]
    fn structure_identity_on_triples(a in graph(4), b in graph(4), c in graph(4)) {
        let gs = [a, b, c];
        let d = delta_of_product(&gs).unwrap();
        let lhs: BTreeSet<_> = d.delta_of_product.edges().collect();
        let mut rhs: BTreeSet<_> = d.product_of_deltas.edges().collect();
        rhs.extend(extra_edge_set(&gs).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(equality_holds(&gs), d.extra_edges.is_empty());
    }

    #[test]
    fn solver_matches_oracle(g in graph(9)) {
        let r = chromatic_number(&g, &opts());
        prop_assert_eq!(r.chi, Some(oracle_chromatic(&g).unwrap()));
    }

    #[test]
    fn sandwich_invariants(g in graph(14)) {
        let r = chromatic_number(&g, &opts());
        let chi = r.chi.unwrap();
        prop_assert!(r.clique_lower() <= chi);
        prop_assert!(chi <= dsatur(&g).colors_used());
        prop_assert!(g.is_clique(&r.clique));
        prop_assert!(r.witness.is_proper(&g).unwrap());
        prop_assert_eq!(r.witness.colors_used(), chi);
        let c = max_clique(&g, DEFAULT_CLIQUE_BUDGET);
        prop_assert!(c.optimal && g.is_clique(&c.clique));
    }

    #[test]
    fn sabidussi(g in graph(5), h in graph(5)) {
        let (p, _) = cartesian_product(&[&g, &h]).unwrap();
        let cg = chromatic_number(&g, &opts()).chi.unwrap();
        let ch = chromatic_number(&h, &opts()).chi.unwrap();
        prop_assert_eq!(chromatic_number(&p, &opts()).chi.unwrap(), cg.max(ch));
    }

    #[test]
    fn product_chi_delta_dominates_factors(g in graph(5), h in graph(5)) {
        let (p, _) = cartesian_product(&[&g, &h]).unwrap();
        let cp = chi_delta(&p, &opts()).chi.unwrap();
        prop_assert!(chi_delta(&g, &opts()).chi.unwrap() <= cp);
        prop_assert!(chi_delta(&h, &opts()).chi.unwrap() <= cp);
    }
}
