use std::collections::HashMap;

use super::{ComplexError, PureComplex, Vertex, UNREACHABLE};
use crate::exec::Execution;

/// `is_normal` refuses complexes with more facets than this.
pub const NORMALITY_LIMIT: usize = 2000;

/// Dual graph connected (and at least one facet).
pub fn is_strongly_connected(c: &PureComplex) -> bool {
    c.dual_graph().is_connected()
}

/// Strongly connected, and every ridge lies in exactly two facets.
pub fn is_pseudo_manifold(c: &PureComplex) -> bool {
    let ridges = c.ridge_index();
    ridges.iter().all(|(_, f)| f.len() == 2)
        && super::DualGraph::from_ridges(c.len(), &ridges).is_connected()
}

/// Strongly connected, and every ridge lies in at most two facets.
pub fn is_pseudo_manifold_with_boundary(c: &PureComplex) -> bool {
    let ridges = c.ridge_index();
    ridges.iter().all(|(_, f)| f.len() <= 2)
        && super::DualGraph::from_ridges(c.len(), &ridges).is_connected()
}

/// Every ridge lies in an even number of facets.
pub fn is_semi_duoid(c: &PureComplex) -> bool {
    c.ridge_index().iter().all(|(_, f)| f.len() % 2 == 0)
}

fn intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn contains_all(facet: &[Vertex], face: &[Vertex]) -> bool {
    face.iter().all(|v| facet.binary_search(v).is_ok())
}

/// Every pair of facets `F1, F2` is joined by a dual path staying inside the
/// star of `F1 ∩ F2`.
pub fn is_normal(c: &PureComplex) -> Result<bool, ComplexError> {
    is_normal_with(c, Execution::default())
}

pub fn is_normal_with(c: &PureComplex, exec: Execution) -> Result<bool, ComplexError> {
    let m = c.len();
    if m > NORMALITY_LIMIT {
        return Err(ComplexError::TooLarge {
            facets: m,
            limit: NORMALITY_LIMIT,
        });
    }
    // pairs grouped by their intersection; one BFS per (face, source) suffices
    let mut groups: HashMap<Vec<Vertex>, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..m {
        for j in i + 1..m {
            groups
                .entry(intersection(c.facet(i), c.facet(j)))
                .or_default()
                .push((i, j));
        }
    }
    let groups: Vec<_> = groups.into_iter().collect();
    let graph = c.dual_graph();
    Ok(exec.all(&groups, |(face, pairs)| {
        let in_star = |f: usize| contains_all(c.facet(f), face);
        // components of the star, labelled by BFS
        let mut label = vec![usize::MAX; m];
        let mut next = 0;
        for &(a, b) in pairs {
            for s in [a, b] {
                if label[s] == usize::MAX {
                    for (v, d) in graph.bfs_within(s, in_star).into_iter().enumerate() {
                        if d != UNREACHABLE {
                            label[v] = next;
                        }
                    }
                    next += 1;
                }
            }
            if label[a] != label[b] {
                return false;
            }
        }
        true
    }))
}

/// Whether the facets, in the given order, form an induced path in the
/// Johnson graph J(n, d): consecutive facets share `d - 1` vertices and no
/// other pair does.
pub fn is_induced_johnson_path(c: &PureComplex, order: &[usize]) -> bool {
    let d = c.d();
    let shared = |a: usize, b: usize| intersection(c.facet(a), c.facet(b)).len();
    order.iter().enumerate().all(|(x, &a)| {
        order[x + 1..].iter().enumerate().all(|(k, &b)| {
            let consecutive = k == 0;
            (shared(a, b) == d - 1) == consecutive
        })
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::cx;
    use super::super::{classify_dual, DualShape};
    use super::*;

    fn hexagon() -> PureComplex {
        // 1^1 2^1 | 2^1 3^1 | 3^1 3^2 | 3^2 2^2 | 2^2 1^2 | 1^2 1^1, v^j -> 2v + j - 1
        cx(
            2,
            8,
            &[&[2, 4], &[4, 6], &[6, 7], &[7, 5], &[5, 3], &[3, 2]],
        )
    }

    #[test]
    fn hexagon_is_pseudo_manifold() {
        let h = hexagon();
        assert!(is_pseudo_manifold(&h));
        assert!(is_semi_duoid(&h));
        assert!(is_strongly_connected(&h));
    }

    #[test]
    fn corridor_is_not_pseudo_manifold() {
        let c = cx(2, 4, &[&[1, 2], &[2, 3]]);
        assert!(!is_pseudo_manifold(&c));
        assert!(is_pseudo_manifold_with_boundary(&c));
        assert!(!is_semi_duoid(&c));
        assert!(is_strongly_connected(&c));
        let star = cx(2, 4, &[&[0, 1], &[0, 2], &[0, 3]]);
        assert!(!is_pseudo_manifold_with_boundary(&star));
    }

    #[test]
    fn two_disjoint_triangles_have_paired_ridges_but_are_not_pm() {
        let c = cx(
            2,
            6,
            &[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]],
        );
        assert!(is_semi_duoid(&c));
        assert!(!is_pseudo_manifold(&c));
    }

    #[test]
    fn normal_examples() {
        assert_eq!(is_normal(&cx(2, 4, &[&[1, 2], &[2, 3], &[1, 3]])), Ok(true));
        let chain = cx(3, 6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 1]]);
        assert_eq!(is_normal(&chain), Ok(false));
        assert_eq!(is_normal(&cx(2, 5, &[&[1, 2], &[3, 4]])), Ok(false));
        assert_eq!(is_normal(&hexagon()), Ok(true));
        assert_eq!(is_normal_with(&chain, Execution::Sequential), Ok(false));
    }

    #[test]
    fn normal_guard() {
        let facets: Vec<Vec<Vertex>> = (0..2001).map(|i| vec![i, i + 1]).collect();
        let c = PureComplex::new(2, 2002, facets).unwrap();
        assert_eq!(
            is_normal(&c),
            Err(ComplexError::TooLarge {
                facets: 2001,
                limit: 2000
            })
        );
    }

    #[test]
    fn johnson_snake_agrees_with_path_classification() {
        let chain = cx(3, 6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 1]]);
        let DualShape::Path(order) = classify_dual(&chain).unwrap() else {
            panic!("expected a path");
        };
        assert!(is_induced_johnson_path(&chain, &order));
        // a chord breaks inducedness
        let chorded = cx(2, 4, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(!is_induced_johnson_path(&chorded, &[0, 1, 2]));
    }
}
