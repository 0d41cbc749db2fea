use perfpairs::expr::build;
use perfpairs::graph::{bits, invariants, isomorphic, twin_collapse, ClassKind};
use perfpairs::harness::scan;
use perfpairs::induced::{contains_induced, is_free};
use perfpairs::structure::{
    blow_up, indep5_classify, l4_classify, mn_split, olariu_decompose, BlowKind, Indep5Shape, L4Tag, OlariuTag,
    Precondition, StructureError,
};
use perfpairs::Graph;

fn free_of(texts: &[&str]) -> Vec<Graph> {
    texts.iter().map(|t| build(t).unwrap()).collect()
}

/// Blue and red exactly as the neighbourhood on the cycle dictates, for every
/// {2K1+K2, gem}-free graph with an induced C5 on at most nine vertices.
#[test]
fn l4_tags_exhaustive() {
    let patterns = free_of(&["2K1+K2", "co(K1+P4)"]);
    let free = |g: &Graph| is_free(g, &patterns);
    let c5 = build("C5").unwrap();
    let s = scan(9, Some(&free), false, |g| {
        let has_c5 = contains_induced(g, &c5).is_some();
        match l4_classify(g) {
            Err(StructureError::Precondition(Precondition::MissingC5)) => (has_c5).then(|| "missed C5".to_string()),
            Err(e) => Some(e.to_string()),
            Ok(d) => {
                if !has_c5 {
                    return Some("phantom C5".into());
                }
                let cycle: u64 = d.c5.iter().map(|&v| 1u64 << v).sum();
                for v in 0..g.order() {
                    let on = g.neighbours(v) & cycle;
                    let want = if cycle >> v & 1 == 1 {
                        L4Tag::OnCycle
                    } else {
                        let h = g.induced_by_mask(on);
                        match (on.count_ones(), h.edge_count()) {
                            (3, 2) => L4Tag::Blue,
                            (2, 1) | (3, 1) => L4Tag::Red,
                            other => return Some(format!("vertex {v} sees {other:?}")),
                        }
                    };
                    if d.tags[v] != want {
                        return Some(format!("vertex {v} tagged {:?}", d.tags[v]));
                    }
                }
                (!isomorphic(&d.collapse.reconstruct(), g)).then(|| "collapse does not rebuild".into())
            }
        }
    })
    .unwrap();
    assert!(s.hits.is_empty(), "{:?}", s.hits);
}

/// Connected {K1+K1,3, K3}-free graphs with independence number at least 5
/// are paths, cycles or complete bipartite graphs. Checked to order 10.
#[test]
fn independence_five_shapes() {
    let patterns = free_of(&["K1+K1,3", "K3"]);
    let free = |g: &Graph| is_free(g, &patterns);
    let s = scan(10, Some(&free), false, |g| {
        if !g.is_connected() || invariants(g).alpha < 5 {
            return None;
        }
        Some(indep5_classify(g).map_err(|e| e.to_string()))
    })
    .unwrap();
    assert!(!s.hits.is_empty());
    for r in &s.hits {
        let shape = r.as_ref().unwrap();
        assert_ne!(*shape, Indep5Shape::NotApplicable);
    }
}

#[test]
fn olariu_components_exhaustive() {
    let z1 = free_of(&["co(K1+P3)"]);
    let free = |g: &Graph| is_free(g, &z1);
    let s = scan(8, Some(&free), false, |g| {
        let r = olariu_decompose(g);
        let covered: u64 = r.components.iter().map(|c| c.vertices).fold(0, |a, b| a | b);
        let ok = covered == g.vertex_mask()
            && r.components.iter().all(|c| {
                let h = g.induced_by_mask(c.vertices);
                match &c.tag {
                    OlariuTag::TriangleFree => contains_induced(&h, &Graph::complete(3).unwrap()).is_none(),
                    OlariuTag::CompleteMultipartite => h.multipartite_parts().is_some(),
                    OlariuTag::Violation(_) => false,
                }
            });
        (!ok).then_some(())
    })
    .unwrap();
    assert!(s.hits.is_empty());
}

#[test]
fn mn_split_partitions_vertices() {
    for text in ["C5", "K3,3", "K2,2,2+C6", "P6", "co(C7)"] {
        let g = build(text).unwrap();
        let s = mn_split(&g);
        let m: u64 = s.m.iter().fold(0, |a, b| a | b);
        let n: u64 = s.n.iter().fold(0, |a, b| a | b);
        assert_eq!(m & n, 0, "{text}");
        assert_eq!(m | n, g.vertex_mask(), "{text}");
    }
}

#[test]
fn blow_up_then_collapse_recovers_base() {
    let base = build("C5").unwrap();
    let kinds = [BlowKind::Independent, BlowKind::Clique];
    for mask in 0u32..(1 << 5) {
        for sizes in [[2, 1, 3, 1, 2], [1, 2, 2, 2, 1]] {
            let spec: Vec<_> = (0..5).map(|v| (kinds[(mask >> v & 1) as usize], sizes[v])).collect();
            let g = blow_up(&base, &spec).unwrap();
            let c = twin_collapse(&g);
            assert!(isomorphic(&c.base, &base), "{spec:?}");
            assert_eq!(c.reconstruct(), g);
            for class in &c.classes {
                let want = match class.vertices.len() {
                    1 => ClassKind::Single,
                    _ if g.has_edge(class.vertices[0], class.vertices[1]) => ClassKind::Clique,
                    _ => ClassKind::Independent,
                };
                assert_eq!(class.kind, want);
            }
        }
    }
}

#[test]
fn blow_up_rejects_bad_specs() {
    let base = build("P3").unwrap();
    assert!(matches!(blow_up(&base, &[(BlowKind::Clique, 1)]), Err(StructureError::BadSpec { .. })));
    assert!(matches!(
        blow_up(&base, &[(BlowKind::Clique, 30), (BlowKind::Clique, 30), (BlowKind::Clique, 30)]),
        Err(StructureError::SizeOverflow(90))
    ));
    let g = blow_up(&base, &[(BlowKind::Independent, 2), (BlowKind::Clique, 2), (BlowKind::Independent, 1)]).unwrap();
    // Copies follow the base vertices: 3 copies 0, 4 copies 1.
    assert_eq!(bits(g.neighbours(3)).collect::<Vec<_>>(), vec![1, 4]);
    assert!(g.has_edge(1, 4));
}
