use perfpairs::expr::build;
use perfpairs::graph::{decode_graph6, encode_graph6, isomorphic};
use perfpairs::harness::{
    census, derive_l4_catalog, hunt_counterexamples, parse_graph6_lines, revalidate, verify_graphs, verify_universal,
    HarnessError, Predicate, Verdict,
};
use perfpairs::pairs::{NamedClass, PairSpec, Property};
use perfpairs::Graph;

fn pair(x: &str, y: &str) -> PairSpec {
    PairSpec::parse(x, y).unwrap()
}

fn graphs(codes: &[String]) -> Vec<Graph> {
    codes.iter().map(|c| decode_graph6(c).unwrap()).collect()
}

#[test]
fn p1_pairs_hold() {
    let r = verify_universal(&pair("3K1", "K3"), &NamedClass::G5.spec(), Property::Perfect, 9).unwrap();
    assert_eq!(r.verdict, Verdict::AllHold);
    assert!(r.counterexamples.is_empty());
    let r = verify_universal(&pair("2K1+K2", "D"), &NamedClass::G5.spec(), Property::OmegaColourable, 9).unwrap();
    assert_eq!(r.verdict, Verdict::AllHold);
    assert!(r.summary().starts_with("all_hold; examined "));
}

#[test]
fn e_graphs_break_perfectness() {
    let p = pair("2K1+K2", "D");
    let r = verify_universal(&p, &NamedClass::G5.spec(), Property::Perfect, 8).unwrap();
    assert_eq!(r.verdict, Verdict::Violated);
    let codes: Vec<String> = r.counterexamples.iter().map(|c| c.graph6.clone()).collect();
    let found = graphs(&codes);
    let mut orders: Vec<usize> = found.iter().map(Graph::order).collect();
    orders.sort();
    assert_eq!(orders, vec![6, 6, 7, 7]);
    // Two complementary pairs.
    for g in &found {
        assert!(found.iter().any(|h| isomorphic(&g.complement(), h)));
    }
    for c in &r.counterexamples {
        assert!(revalidate(c, &p, &NamedClass::G5.spec()));
    }
}

#[test]
fn hunts() {
    let c7 = build("C7").unwrap();
    let c9 = build("C9").unwrap();
    let hits = hunt_counterexamples(&pair("K1,3", "K3"), &NamedClass::Gca.spec(), Property::OmegaColourable, 9, false)
        .unwrap();
    let hit_graphs = graphs(&hits.iter().map(|c| c.graph6.clone()).collect::<Vec<_>>());
    assert!(hit_graphs.iter().any(|g| isomorphic(g, &c7)));
    assert!(hit_graphs.iter().any(|g| isomorphic(g, &c9)));

    let hits = hunt_counterexamples(&pair("K1,3", "2K2"), &NamedClass::Gco.spec(), Property::OmegaColourable, 7, false)
        .unwrap();
    let co_c7 = build("co(C7)").unwrap();
    assert!(hits.iter().any(|c| isomorphic(&decode_graph6(&c.graph6).unwrap(), &co_c7)));

    // C5 with a vertex joined to two adjacent cycle vertices.
    let house_like = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1)]).unwrap();
    let hits = hunt_counterexamples(&pair("4K1", "D"), &NamedClass::Goa.spec(), Property::Perfect, 6, true).unwrap();
    assert!(hits.iter().any(|c| isomorphic(&decode_graph6(&c.graph6).unwrap(), &house_like)));
    assert!(hits.iter().all(|c| decode_graph6(&c.graph6).unwrap().order() == 6));
}

#[test]
fn census_e_graphs_and_caps() {
    let c = census(&[build("2K1+K2").unwrap(), build("D").unwrap()], &[Predicate::NotPerfect], 8).unwrap();
    assert_eq!(c.members.len(), 5);
    let pats = [build("3K1").unwrap(), build("K4").unwrap()];
    let preds = [Predicate::Connected, Predicate::NotOmegaColourable, Predicate::NotOddCycle];
    assert_eq!(census(&pats, &preds, 8).unwrap().members.len(), 13);
    // Nothing {3K1, K4}-free exists at order 9.
    assert_eq!(census(&pats, &preds, 9).unwrap().members.len(), 13);
}

#[test]
fn catalog_small_orders() {
    let c5 = build("C5").unwrap();
    let five = derive_l4_catalog(5).unwrap();
    assert_eq!(five.entries.len(), 1);
    assert!(isomorphic(&five.entries[0].base, &c5));
    let six = derive_l4_catalog(6).unwrap();
    for e in &six.entries {
        assert!(e.base.order() <= 6);
        // Bases are twin-free apart from mixed-kind pairs, so the six-vertex
        // bases are the one-vertex extensions seen without blowing up.
        if e.base.order() == 6 {
            assert_eq!(e.independent | e.clique, 0, "{}", encode_graph6(&e.base));
        }
    }
    assert!(six.entries.len() > 1);
    let nine = derive_l4_catalog(9).unwrap();
    assert!(nine.entries.len() <= 14);
    assert_eq!(nine.render(), include_str!("../../../data/l4_catalog.txt"));
}

#[test]
fn ingest() {
    let gs = parse_graph6_lines("Bw\nDhc\n").unwrap();
    assert_eq!(gs.len(), 2);
    assert!(isomorphic(&gs[0], &Graph::complete(3).unwrap()));
    assert!(isomorphic(&gs[1], &build("C5").unwrap()));
    assert!(parse_graph6_lines("").unwrap().is_empty());
    assert!(matches!(parse_graph6_lines("???"), Err(HarnessError::Format { line: 1, .. })));
    let r = verify_graphs(&pair("4K1", "K5"), &NamedClass::G.spec(), Property::Perfect, &gs).unwrap();
    assert_eq!(r.verdict, Verdict::Violated);
    assert_eq!(r.counterexamples.len(), 1);
}

#[test]
fn order_limit() {
    let err = verify_universal(&pair("P3", "K3"), &NamedClass::G.spec(), Property::Perfect, 11).unwrap_err();
    assert!(matches!(err, HarnessError::OrderLimit { order: 11, limit: 10 }));
}

#[test]
fn reports_match_across_pools() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            verify_universal(&pair("2K1+K2", "co(K1+P4)"), &NamedClass::Goa.spec(), Property::Perfect, 9)
                .unwrap()
                .render()
        })
    };
    assert_eq!(run(1), run(3));
}
