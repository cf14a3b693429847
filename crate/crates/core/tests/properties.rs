//! Property tests for the structural invariants that should survive any
//! refactor: closure behavior on arbitrary graphs, exact-scalar algebra,
//! and format round-trips.

use circforce::circulant::CirculantSpec;
use circforce::forcing::{closure, is_forcing_set};
use circforce::graph::Graph;
use circforce::linalg::{ratio, FieldScalar, Matrix, Quad, Rational};
use circforce::VertexSet;

use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, proptest::collection::vec((0usize..16, 0usize..16), 0..48)).prop_map(
        |(n, pairs)| {
            let mut g = Graph::empty(n);
            for (a, b) in pairs {
                let (u, v) = (a % n, b % n);
                if u != v {
                    g.add_edge(u, v);
                }
            }
            g
        },
    )
}

proptest! {
    #[test]
    fn closure_is_monotone_and_idempotent(
        g in arb_graph(14),
        seed in any::<u64>(),
        extra in any::<u64>(),
    ) {
        let n = g.order();
        let cut = |w: u64| w & ((1u64 << n) - 1);
        let f = VertexSet::from_word(n, cut(seed));
        let closed = closure(&g, &f).unwrap();
        prop_assert_eq!(closure(&g, &closed).unwrap(), closed.clone());
        let mut sup = f.clone();
        sup.union_with(&VertexSet::from_word(n, cut(extra)));
        prop_assert!(closed.is_subset_of(&closure(&g, &sup).unwrap()));
        if let Some(cert) = is_forcing_set(&g, &f).unwrap() {
            prop_assert!(cert.replay(&g).is_ok());
        }
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph(16)) {
        // isolated trailing vertices are out of the format's reach
        let reachable = g.edges().map(|(_, v)| v + 1).max().unwrap_or(0);
        let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.order(), reachable);
        prop_assert_eq!(
            back.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn rational_matrix_text_round_trips(
        entries in proptest::collection::vec((-999i64..1000, 1i64..60), 6)
    ) {
        let m = Matrix::from_fn(2, 3, |i, j| {
            let (p, q) = entries[i * 3 + j];
            ratio(p, q)
        });
        match circforce::linalg::parse_matrix(&m.to_text()).unwrap() {
            circforce::linalg::ParsedMatrix::Rational(back) => prop_assert_eq!(back, m),
            _ => prop_assert!(false, "expected a rational matrix"),
        }
    }

    #[test]
    fn quad_algebra(
        parts in proptest::collection::vec((-50i64..50, 1i64..9), 6)
    ) {
        let q = |i: usize| Quad::new(
            ratio(parts[2 * i].0, parts[2 * i].1),
            ratio(parts[2 * i + 1].0, parts[2 * i + 1].1),
            Rational::from_integer(7.into()),
        );
        let (x, y, z) = (q(0), q(1), q(2));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        let norm_prod = x.mul(&x.conjugate());
        prop_assert_eq!(norm_prod.a, x.norm());
        if !FieldScalar::is_zero(&y) {
            // 7 is not a rational square, so every nonzero element divides
            prop_assert_eq!(x.div(&y).mul(&y), x);
        }
    }

    #[test]
    fn multiplier_rewrites_preserve_adjacency(
        n in 3usize..20,
        mask in 1u64..,
        k_pick in any::<usize>(),
    ) {
        let half = n / 2;
        let s: Vec<usize> = (1..=half).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        prop_assume!(!s.is_empty());
        let spec = CirculantSpec::new(n, s).unwrap();
        let units: Vec<usize> = spec.units().collect();
        let k = units[k_pick % units.len()];
        let rewritten = spec.rewrite(k).unwrap();
        let perm: Vec<usize> = (0..n).map(|i| k * i % n).collect();
        prop_assert_eq!(spec.build().relabel(&perm), rewritten.build());
    }
}
