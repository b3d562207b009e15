use crate::error::{Error, Result};
use crate::graph::Graph;

/// `Some((n, s))` iff `g` is `K_{2n+1}` minus `s` independent edges with `0 ≤ s ≤ n-1`.
pub fn recognize_k2n1_minus_matching(g: &Graph) -> Option<(usize, usize)> {
    let order = g.n();
    if order < 3 || order.is_multiple_of(2) {
        return None;
    }
    let n = (order - 1) / 2;
    let missing = g.complement();
    if missing.max_degree() > 1 {
        return None;
    }
    let s = missing.edge_count();
    (s < n).then_some((n, s))
}

/// Predicts Class 2 for a connected graph whose core has exactly three vertices:
/// true iff `g` is `K_{2n+1}` minus `n-1` independent edges.
pub fn recognize_core3_class2(g: &Graph) -> Result<bool> {
    if !g.is_connected() || g.edge_count() == 0 {
        return Err(Error::Precondition("graph must be connected with at least one edge".into()));
    }
    let core_size = g.max_degree_vertices().len();
    if core_size != 3 {
        return Err(Error::Precondition(format!("core has {core_size} vertices, expected 3")));
    }
    Ok(matches!(recognize_k2n1_minus_matching(g), Some((n, s)) if s + 1 == n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{classify, EdgeClass};
    use crate::generators::{complete, complete_minus_matching, petersen, star};
    use crate::graph::Edge;

    #[test]
    fn recognizes_family() {
        assert_eq!(recognize_k2n1_minus_matching(&complete(5).unwrap()), Some((2, 0)));
        let g = complete_minus_matching(3, 2).unwrap();
        assert_eq!(recognize_k2n1_minus_matching(&g), Some((3, 2)));
        assert_eq!(recognize_k2n1_minus_matching(&petersen()), None);
        // s = n is outside the family
        let k5 = complete(5).unwrap();
        let two = k5.remove_edges(&[Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert_eq!(recognize_k2n1_minus_matching(&two), None);
    }

    #[test]
    fn core3() {
        let g = complete_minus_matching(2, 1).unwrap();
        assert!(recognize_core3_class2(&g).unwrap());
        assert_eq!(classify(&g).unwrap(), EdgeClass::Class2);

        // a path's core is its interior; P5 has a 3-vertex acyclic core
        let p5 = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!recognize_core3_class2(&p5).unwrap());
        assert_eq!(classify(&p5).unwrap(), EdgeClass::Class1);

        let g = complete_minus_matching(3, 2).unwrap();
        assert!(recognize_core3_class2(&g).unwrap());
        assert_eq!(classify(&g).unwrap(), EdgeClass::Class2);

        assert!(recognize_core3_class2(&star(3).unwrap()).is_err());
    }
}
