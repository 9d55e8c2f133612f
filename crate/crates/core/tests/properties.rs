//! Property tests for the module-level invariants: randomized where the
//! statement quantifies over arbitrary inputs, exhaustive on the named
//! small matroids where the statement is about them.

mod common;

use matroidal::catalog::{
    complete_bipartite, complete_graph, cycle_graph, enumerate_simple_binary, fan_graph, fano,
    path_graph, u24,
};
use matroidal::chordality::{delta_closure, find_chord, is_chordal};
use matroidal::gf2::{self, Gf2Matrix};
use matroidal::graphs::{cocycle_matroid, cycle_matroid, is_chordal_graph, s_labelings};
use matroidal::matroid::CircuitFamily;
use matroidal::supersolvable::{
    all_mchains, deformation_path, find_mchain, is_elementary_deformation, mpartition,
    restrict_chain, validate_mchain,
};
use matroidal::{BinaryMatroid, ElementSet, GeneralMatroid, Matroid};
use proptest::prelude::*;

fn named_binary_matroids() -> Vec<(&'static str, BinaryMatroid)> {
    vec![
        ("fano", fano()),
        ("cycle(fan4)", cycle_matroid(&fan_graph(4)).unwrap()),
        ("cycle(K4)", cycle_matroid(&complete_graph(4)).unwrap()),
        ("cycle(C5)", cycle_matroid(&cycle_graph(5)).unwrap()),
        ("cycle(P5)", cycle_matroid(&path_graph(5)).unwrap()),
        ("cocycle(K3,3)", cocycle_matroid(&complete_bipartite(3, 3)).unwrap()),
        ("free(4)", BinaryMatroid::from_matrix(Gf2Matrix::identity(4).unwrap())),
    ]
}

fn named_supersolvable() -> Vec<(&'static str, BinaryMatroid)> {
    vec![
        ("fano", fano()),
        ("cycle(fan4)", cycle_matroid(&fan_graph(4)).unwrap()),
        ("cycle(K4)", cycle_matroid(&complete_graph(4)).unwrap()),
        ("cycle(K5)", cycle_matroid(&complete_graph(5)).unwrap()),
        ("cycle(P4)", cycle_matroid(&path_graph(4)).unwrap()),
    ]
}

/// An arbitrary GF(2) matrix with 1..=5 rows and 1..=9 columns.
fn arb_matrix() -> impl Strategy<Value = Gf2Matrix> {
    (1usize..=5, 1usize..=9).prop_flat_map(|(r, n)| {
        proptest::collection::vec(0u64..(1u64 << n), r)
            .prop_map(move |rows| Gf2Matrix::from_row_bits(rows, n).unwrap())
    })
}

/// A random simple binary matroid: a full-rank set of distinct nonzero
/// columns in GF(2)^r.
fn arb_simple_binary() -> impl Strategy<Value = BinaryMatroid> {
    (2usize..=4)
        .prop_flat_map(|r| {
            let n_vectors = (1u64 << r) - 1;
            proptest::sample::subsequence(
                (1..=n_vectors).collect::<Vec<u64>>(),
                r..=(n_vectors as usize).min(9),
            )
            .prop_map(move |cols| BinaryMatroid::from_columns(r, &cols).unwrap())
        })
        .prop_filter("columns must span", |m| m.rank_of(m.ground_set()) == m.rank())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_invariant_under_row_operations(
        m in arb_matrix(),
        swaps in proptest::collection::vec((0usize..5, 0usize..5), 0..6),
        adds in proptest::collection::vec((0usize..5, 0usize..5), 0..6),
    ) {
        let before = gf2::rank(&m);
        let mut rows: Vec<u64> = m.row_bits().to_vec();
        let k = rows.len();
        for (i, j) in swaps {
            rows.swap(i % k, j % k);
        }
        for (i, j) in adds {
            let (i, j) = (i % k, j % k);
            if i != j {
                rows[i] ^= rows[j];
            }
        }
        let after = gf2::rank(&Gf2Matrix::from_row_bits(rows, m.n_cols()).unwrap());
        prop_assert_eq!(before, after);
    }

    #[test]
    fn rank_nullity_and_kernel_membership(m in arb_matrix()) {
        let basis = gf2::null_space(&m);
        prop_assert_eq!(gf2::rank(&m) + basis.len(), m.n_cols());
        for b in &basis {
            prop_assert!(m.mul_vec(b).is_zero());
        }
    }

    #[test]
    fn span_membership_matches_rank_growth(m in arb_matrix(), cols in 0u64..512, probe in 0usize..9) {
        let cols = ElementSet::from_bits(cols & ((1 << m.n_cols()) - 1));
        let probe = probe % m.n_cols();
        let member = gf2::in_column_span(&m, cols, &m.column(probe));
        let matroid = BinaryMatroid::from_matrix(m.clone());
        let grows = matroid.rank_of(cols.with(probe)) > matroid.rank_of(cols);
        prop_assert_eq!(member, !grows || cols.contains(probe));
    }

    #[test]
    fn closure_is_extensive_monotone_idempotent(m in arb_simple_binary(), bits in any::<u64>()) {
        let n = m.ground_size();
        let x = ElementSet::from_bits(bits & ((1 << n) - 1));
        let cx = m.closure_of(x);
        prop_assert!(x.is_subset_of(cx));
        prop_assert_eq!(m.closure_of(cx), cx);
        prop_assert_eq!(m.rank_of(x), m.rank_of(cx));
        let y = cx.union(ElementSet::from_bits(bits.rotate_left(13) & ((1 << n) - 1)));
        prop_assert!(cx.is_subset_of(m.closure_of(y)));
    }

    #[test]
    fn circuits_are_minimal_dependent_antichain(m in arb_simple_binary()) {
        let circuits = m.circuits().unwrap();
        for (i, c) in circuits.iter().enumerate() {
            prop_assert_eq!(m.rank_of(c), c.len() - 1);
            for e in c.iter() {
                let sub = c.without(e);
                prop_assert_eq!(m.rank_of(sub), sub.len());
            }
            for d in circuits.iter().skip(i + 1) {
                prop_assert!(!c.is_subset_of(d) && !d.is_subset_of(c));
            }
        }
    }

    #[test]
    fn symmetric_differences_peel_into_disjoint_circuits(m in arb_simple_binary()) {
        let circuits = m.circuits().unwrap();
        let list: Vec<ElementSet> = circuits.iter().collect();
        for (i, &c1) in list.iter().enumerate() {
            for &c2 in &list[i + 1..] {
                let mut rest = c1.symmetric_difference(c2);
                // Greedy peeling: keep removing a circuit contained in
                // what is left; it must end exactly at the empty set.
                while !rest.is_empty() {
                    let inner = circuits.iter().find(|c| c.is_subset_of(rest));
                    match inner {
                        Some(c) => rest = rest.difference(c),
                        None => prop_assert!(false, "leftover {} is circuit-free", rest),
                    }
                }
            }
        }
    }

    #[test]
    fn dual_is_an_involution(m in arb_simple_binary()) {
        let dd = m.dual().dual();
        prop_assert_eq!(m.circuits().unwrap().as_slice(), dd.circuits().unwrap().as_slice());
        prop_assert_eq!(m.dual().rank(), m.ground_size() - m.rank());
    }

    #[test]
    fn general_matroid_agrees_with_binary_source(m in arb_simple_binary()) {
        let n = m.ground_size();
        let circuits: Vec<ElementSet> = m.circuits().unwrap().iter().collect();
        let g = GeneralMatroid::from_circuits(n, circuits).unwrap();
        for mask in 0u64..(1 << n) {
            let x = ElementSet::from_bits(mask);
            prop_assert_eq!(g.closure_of(x), m.closure_of(x));
            prop_assert_eq!(g.rank_of(x), m.rank_of(x));
        }
    }

    #[test]
    fn delta_closure_is_monotone_and_idempotent(m in arb_simple_binary(), keep in any::<u64>()) {
        let circuits = m.circuits().unwrap();
        let seed_small: Vec<ElementSet> = circuits
            .iter()
            .enumerate()
            .filter(|(i, _)| (keep >> (i % 64)) & 1 == 1)
            .map(|(_, c)| c)
            .collect();
        let small = CircuitFamily::new(seed_small).unwrap();
        let bigger = delta_closure(&m, &small).unwrap();
        // Monotone: a larger seed closes to a superset.
        let closed_again = delta_closure(&m, &bigger).unwrap();
        for c in small.iter() {
            prop_assert!(bigger.contains(c));
        }
        prop_assert_eq!(&closed_again, &bigger);
        let full = delta_closure(&m, circuits).unwrap();
        for c in bigger.iter() {
            prop_assert!(full.contains(c));
        }
    }

    #[test]
    fn chord_witnesses_check_out(m in arb_simple_binary()) {
        let circuits = m.circuits().unwrap();
        for c in circuits.iter() {
            if let Some(w) = find_chord(&m, c).unwrap() {
                prop_assert!(w.is_valid_for(circuits, c));
                prop_assert!(!c.contains(w.chord));
            }
        }
    }

    #[test]
    fn chord_exists_iff_closure_grows(m in arb_simple_binary()) {
        // Both directions, with the pair-scan oracle on the chord side.
        let circuits: Vec<ElementSet> = m.circuits().unwrap().iter().collect();
        for &c in &circuits {
            let strict = m.closure_of(c) != c;
            prop_assert_eq!(common::oracle_chord_exists(&circuits, c), strict);
        }
    }
}

#[test]
fn closure_span_equals_circuit_formula_on_named_matroids() {
    for (name, m) in named_binary_matroids() {
        let n = m.ground_size();
        assert!(n <= 9, "{name} too large for the sweep");
        let circuits = common::oracle_circuits(&m);
        for mask in 0u64..(1 << n) {
            let x = ElementSet::from_bits(mask);
            assert_eq!(
                m.closure_of(x),
                common::oracle_closure_from_circuits(x, &circuits),
                "{name}: closure mismatch at {x}"
            );
        }
    }
}

#[test]
fn circuit_enumeration_matches_rank_oracle_on_named_matroids() {
    for (name, m) in named_binary_matroids() {
        let got: Vec<ElementSet> = m.circuits().unwrap().iter().collect();
        assert_eq!(got, common::oracle_circuits(&m), "{name}");
    }
}

#[test]
fn nontrivial_lines_of_binary_matroids_have_three_points() {
    for entry in enumerate_simple_binary(3, 7).unwrap() {
        let m = entry.matroid.as_binary().unwrap();
        for line in m.nontrivial_lines().unwrap() {
            assert_eq!(line.elements.len(), 3, "{}", entry.id);
        }
    }
}

#[test]
fn chords_imply_strict_closure_for_general_matroids() {
    // One direction survives without binarity; U24 kills the converse.
    let m = u24();
    let circuits: Vec<ElementSet> = m.circuits().unwrap().iter().collect();
    for &c in &circuits {
        if common::oracle_chord_exists(&circuits, c) {
            assert_ne!(m.closure_of(c), c);
        }
    }
    let c = ElementSet::from_labels([1, 2, 3]);
    assert!(!common::oracle_chord_exists(&circuits, c));
    assert_eq!(m.closure_of(c), ElementSet::full(4));

    // A circuit list that happens to be binary keeps both directions.
    let g0 = cycle_matroid(&fan_graph(4)).unwrap();
    let g = GeneralMatroid::from_circuits(7, g0.circuits().unwrap().iter().collect()).unwrap();
    for c in g.circuits().unwrap().iter() {
        let chord = find_chord(&g, c).unwrap();
        assert_eq!(chord.is_some(), g.closure_of(c) != c);
    }
}

#[test]
fn mchains_revalidate_and_match_find_mchain() {
    for (name, m) in named_binary_matroids() {
        if !m.is_simple() {
            continue;
        }
        let chains = all_mchains(&m).unwrap();
        let first = find_mchain(&m).unwrap();
        assert_eq!(first.is_some(), !chains.is_empty(), "{name}");
        for c in &chains {
            validate_mchain(&m, c).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}

#[test]
fn supersolvable_implies_chordal_on_small_catalog() {
    for entry in enumerate_simple_binary(3, 7).unwrap() {
        let m = entry.matroid.as_binary().unwrap();
        if find_mchain(m).unwrap().is_some() {
            assert!(is_chordal(m).unwrap(), "{}", entry.id);
        }
    }
}

#[test]
fn partition_blocks_and_line_property() {
    for (name, m) in named_supersolvable() {
        for chain in all_mchains(&m).unwrap() {
            let p = mpartition(&chain);
            let mut union = ElementSet::empty();
            for &b in p.blocks() {
                assert!(!b.is_empty(), "{name}: empty block");
                assert!(!union.intersects(b), "{name}: overlapping blocks");
                union = union.union(b);
            }
            assert_eq!(union, m.ground_set(), "{name}: blocks must cover");
            // Every nontrivial line meets exactly two blocks: one point
            // in the earlier block, two in the later.
            for line in m.nontrivial_lines().unwrap() {
                let met: Vec<usize> = (0..p.len())
                    .filter(|&i| line.elements.intersects(p.blocks()[i]))
                    .collect();
                assert_eq!(met.len(), 2, "{name}: line {} blocks", line.elements);
                let (i, j) = (met[0], met[1]);
                assert_eq!(line.elements.intersection(p.blocks()[i]).len(), 1, "{name}");
                assert_eq!(line.elements.intersection(p.blocks()[j]).len(), 2, "{name}");
            }
        }
    }
}

#[test]
fn restricted_chains_validate_in_the_restriction() {
    for (name, m) in named_supersolvable() {
        let chains = all_mchains(&m).unwrap();
        let lattice = m.flats().unwrap().clone();
        for chain in chains.iter().take(4) {
            for f in lattice.iter_all() {
                let cut = restrict_chain(&m, chain, f)
                    .unwrap_or_else(|e| panic!("{name} at flat {}: {e}", f.elements));
                assert_eq!(cut.flats().len(), f.rank + 1, "{name}");
                assert_eq!(cut.top(), f.elements, "{name}");
            }
        }
    }
}

#[test]
fn deformation_graph_is_connected_on_named_matroids() {
    for (name, m) in named_supersolvable() {
        let chains = all_mchains(&m).unwrap();
        assert!(!chains.is_empty(), "{name}");
        for other in &chains {
            let path = deformation_path(&m, &chains[0], other).unwrap();
            assert_eq!(path.first(), Some(&chains[0]), "{name}");
            assert_eq!(path.last(), Some(other), "{name}");
            for w in path.windows(2) {
                assert!(is_elementary_deformation(&w[0], &w[1]).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn mcs_agrees_with_naive_chordality_on_named_graphs() {
    let graphs = vec![
        ("fan4", fan_graph(4)),
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("C4", cycle_graph(4)),
        ("C5", cycle_graph(5)),
        ("C6", cycle_graph(6)),
        ("P6", path_graph(6)),
        ("K3,3", complete_bipartite(3, 3)),
        ("K1,3", complete_bipartite(1, 3)),
    ];
    for (name, g) in graphs {
        let mcs = is_chordal_graph(&g).unwrap().is_some();
        let naive = common::naive_is_chordal(g.n_vertices(), &g.adjacency());
        assert_eq!(mcs, naive, "{name}");
    }
}

#[test]
fn derived_sgraph_embeds_in_its_graph() {
    // Exhaustive over connected chordal graphs on up to 5 vertices and
    // every one of their S-labelings.
    use matroidal::graphs::{derived_sgraph_on, subgraph_embedding_check};
    let mut cases = 0usize;
    for k in 1..=5usize {
        let pairs = common::vertex_pairs(k);
        for mask in 0u64..(1 << pairs.len()) {
            let adj = common::adjacency_from_edge_mask(k, mask, &pairs);
            if !common::adjacency_is_connected(k, &adj) {
                continue;
            }
            let g = common::graph_from_edge_mask(k, mask, &pairs);
            if is_chordal_graph(&g).unwrap().is_none() {
                continue;
            }
            let m = cycle_matroid(&g).unwrap();
            for order in s_labelings(&g).unwrap() {
                let sg = derived_sgraph_on(&m, &g, &order).unwrap();
                assert!(
                    subgraph_embedding_check(&g, &order, &sg),
                    "edges {:?}, order {order:?}",
                    g.edges()
                );
                cases += 1;
            }
        }
    }
    assert!(cases > 1000, "sweep should cover many cases, got {cases}");
}

#[test]
fn s_labeling_count_equals_twice_chain_count_for_k4() {
    let k4 = complete_graph(4);
    let labelings = s_labelings(&k4).unwrap();
    let chains = all_mchains(&cycle_matroid(&k4).unwrap()).unwrap();
    assert_eq!(labelings.len(), 24);
    assert_eq!(chains.len(), 12);
}

#[test]
fn catalog_regression_counts() {
    // Frozen after the first computation; guards the enumerator against
    // accidental changes in dedup or rank filtering.
    let r3: Vec<_> = enumerate_simple_binary(3, 7).unwrap().collect();
    assert_eq!(r3.len(), 97);
    assert_eq!(r3.iter().filter(|e| e.id.starts_with("r3:")).count(), 92);
}
