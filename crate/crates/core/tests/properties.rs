mod common;

use proptest::prelude::*;

use trd_core::construct::product_trdf_from_factors;
use trd_core::labeling::{is_roman_dominating, is_total_roman_dominating};
use trd_core::solve::{
    eod_set, gamma_tr_exact, gamma_tr_max_v2, gamma_tr_max_v2_bruteforce, rho_exact, Budget,
};
use trd_core::{direct_product, emit_graph6, parse_graph6, Graph, LabelFunction};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let slots = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), slots))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
}

/// Graphs without isolated vertices, obtained by joining each isolated
/// vertex to its successor (or predecessor).
fn factor(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter_map("needs two vertices", |g| {
        let n = g.order();
        if n < 2 {
            return None;
        }
        let mut edges = g.edges();
        for v in 0..n {
            if g.degree(v) == 0 {
                edges.push(if v + 1 < n { (v, v + 1) } else { (v - 1, v) });
            }
        }
        Some(Graph::from_edge_list(n, &edges).unwrap())
    })
}

fn with_labels(max_n: usize) -> impl Strategy<Value = (Graph, Vec<u8>)> {
    factor(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(0u8..3, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(&text, &common::graph6(&g));
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.adjacency(), g.adjacency());
    }

    #[test]
    fn product_neighbourhoods(g in graph(7), h in graph(7)) {
        let pg = direct_product(&g, &h).unwrap();
        let hn = h.order();
        for a in 0..g.order() {
            for b in 0..hn {
                let nh: Vec<usize> = h.neighbors(b).collect();
                let mut want: Vec<usize> = g
                    .neighbors(a)
                    .flat_map(|x| nh.iter().map(move |y| x * hn + y))
                    .collect();
                want.sort_unstable();
                let got: Vec<usize> = pg.graph().neighbors(pg.id(a, b)).collect();
                prop_assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn total_roman_implies_roman((g, labels) in with_labels(9)) {
        let f = LabelFunction::new(labels.clone()).unwrap();
        let total = is_total_roman_dominating(&g, &f).unwrap();
        prop_assert_eq!(total, common::is_trdf(&common::adjacency(&g), &labels));
        if total {
            prop_assert!(is_roman_dominating(&g, &f).unwrap());
        }
    }

    #[test]
    fn raising_a_label_keeps_a_trdf((g, labels) in with_labels(9), v in any::<prop::sample::Index>()) {
        prop_assume!(common::is_trdf(&common::adjacency(&g), &labels));
        let v = v.index(g.order());
        for up in labels[v] + 1..3 {
            let mut raised = labels.clone();
            raised[v] = up;
            let f = LabelFunction::new(raised).unwrap();
            prop_assert!(is_total_roman_dominating(&g, &f).unwrap());
        }
    }

    #[test]
    fn eod_search_matches_subset_scan(g in factor(10)) {
        let found = eod_set(&g).unwrap();
        prop_assert_eq!(found.is_some(), common::has_eod_set(&g));
        if let Some(s) = found {
            let adj = common::adjacency(&g);
            let members = s.vertices();
            prop_assert!(adj.iter().all(|nb| nb.iter().filter(|u| members.contains(u)).count() == 1));
        }
    }

    #[test]
    fn packing_number(g in factor(10)) {
        prop_assert_eq!(rho_exact(&g).unwrap().value as usize, common::rho(&g));
    }

    #[test]
    fn exact_solver_matches_enumeration(g in factor(10)) {
        let r = gamma_tr_exact(&g, Budget::UNLIMITED).unwrap();
        prop_assert_eq!(r.value, common::gamma_tr(&g));
        let f = r.labeling().unwrap();
        prop_assert!(common::is_trdf(&common::adjacency(&g), f.labels()));
        prop_assert_eq!(f.weight(), r.value);
    }

    #[test]
    fn max_v2_solver_matches_brute_force(g in factor(9)) {
        let bb = gamma_tr_max_v2(&g, Budget::UNLIMITED).unwrap();
        let bf = gamma_tr_max_v2_bruteforce(&g, 12).unwrap();
        prop_assert_eq!(bb.value, bf.value);
        prop_assert_eq!(bb.max_v2, bf.max_v2);
        prop_assert_eq!(bb.witness, bf.witness);
    }

    #[test]
    fn factor_product_weight(g in factor(5), h in factor(5)) {
        let fg = gamma_tr_max_v2(&g, Budget::UNLIMITED).unwrap();
        let fh = gamma_tr_max_v2(&h, Budget::UNLIMITED).unwrap();
        let (a, b) = (fg.labeling().unwrap(), fh.labeling().unwrap());
        let f = product_trdf_from_factors(&g, &h, a, b).unwrap();
        let pg = direct_product(&g, &h).unwrap();
        prop_assert!(common::is_trdf(&common::adjacency(pg.graph()), f.labels()));
        let want = a.weight() * b.weight() - 2 * (a.count_v2() * b.count_v2()) as u32;
        prop_assert_eq!(f.weight(), want);
    }
}
