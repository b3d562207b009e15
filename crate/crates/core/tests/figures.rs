//! Colorings read off the drawings, checked against the generators.

mod common;

use edgestab::coloring::chromatic_index;
use edgestab::generators::{petersen, prop_counterexample, prop_counterexample_pairs, q_chain, q_graph};
use edgestab::stability::is_mitigating;
use edgestab::Edge;

fn colored(pairs: &[(usize, usize, usize)]) -> Vec<(Edge, usize)> {
    pairs.iter().map(|&(a, b, c)| (Edge::new(a, b), c)).collect()
}

/// Petersen with two inner edges removed, 3-colored. Drawing labels a..e are
/// the outer cycle (0..5 here) and f..j the inner vertices below them (5..10).
#[test]
fn petersen_minus_two_inner_edges() {
    let (a, b, c, d, e, f, g, h, i, j) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
    let (ca, cb, cc) = (0, 1, 2);
    let coloring = colored(&[
        (a, b, ca),
        (b, c, cb),
        (c, d, ca),
        (d, e, cc),
        (e, a, cb),
        (f, h, ca),
        (i, g, ca),
        (g, j, cb),
        (b, g, cc),
        (a, f, cc),
        (e, j, ca),
        (i, d, cb),
        (h, c, cc),
    ]);
    let missing = [Edge::new(h, j), Edge::new(f, i)];
    let p = petersen();
    let drawn = p.remove_edges(&missing).unwrap();
    assert!(common::is_proper_coloring(&drawn, &coloring));
    assert_eq!(chromatic_index(&drawn).unwrap(), 3);
    assert!(is_mitigating(&p, &missing).unwrap());
}

/// The nine-vertex counterexample with `x, y` the top two vertices of `B`, and
/// the 4-coloring of `G'` drawn for it; `uv` and `xy` take a fifth color.
#[test]
fn counterexample_coloring_extends() {
    let (u, a1, a2, x, y, b3, c1, c2, v) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
    let xy = Edge::new(x, y);
    let choice = prop_counterexample_pairs(2).unwrap().iter().position(|&e| e == xy).unwrap();
    let pc = prop_counterexample(2, choice).unwrap();
    assert_eq!((pc.u, pc.v), (u, v));
    assert_eq!(pc.b, vec![x, y, b3]);

    let mut coloring = colored(&[
        (u, a1, 1),
        (u, a2, 2),
        (a1, x, 2),
        (a1, y, 3),
        (a1, b3, 4),
        (a2, x, 1),
        (a2, y, 4),
        (a2, b3, 3),
        (v, c1, 3),
        (v, c2, 4),
        (c1, x, 4),
        (c1, y, 1),
        (c1, b3, 2),
        (c2, x, 3),
        (c2, y, 2),
        (c2, b3, 1),
    ]);
    let g_prime = pc.graph.remove_edges(&[pc.uv(), pc.xy()]).unwrap();
    assert!(common::is_proper_coloring(&g_prime, &coloring));
    coloring.push((pc.uv(), 5));
    coloring.push((pc.xy(), 5));
    assert!(common::is_proper_coloring(&pc.graph, &coloring));
    assert_eq!(pc.graph.max_degree(), 5);
}

#[test]
fn q_and_chain_shapes() {
    let q = q_graph();
    assert_eq!(q.edge_count(), 14);
    assert_eq!((0..10).filter(|&v| q.degree(v) == 2).count(), 2);
    assert_eq!(chromatic_index(&q).unwrap(), 4);
    let chain = q_chain(1).unwrap();
    let p = chain.degree_profile();
    assert_eq!((chain.n(), p.delta, p.t_delta()), (14, 4, 1));
    assert_eq!(chromatic_index(&chain).unwrap(), 4);
}
