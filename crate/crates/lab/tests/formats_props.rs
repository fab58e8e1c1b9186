use mhc_core::graph::Graph;
use mhc_lab::formats::{emit_edgelist, parse_edgelist};
use mhc_lab::graph6::{emit_graph6, parse_graph6};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, on)| *on).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let text = emit_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn graph6_length(g in graph(62)) {
        let n = g.order();
        prop_assert_eq!(emit_graph6(&g).len(), 1 + (n * (n - 1) / 2).div_ceil(6));
    }

    #[test]
    fn edgelist_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_edgelist(&emit_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn truncated_graph6_is_rejected(g in graph(30), cut in 1usize..4) {
        let text = emit_graph6(&g);
        prop_assume!(text.len() > cut + 1);
        prop_assert!(parse_graph6(&text[..text.len() - cut]).is_err());
    }
}

#[test]
fn header_prefix_is_accepted() {
    assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
}
