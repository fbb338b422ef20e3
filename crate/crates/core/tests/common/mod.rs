//! Independent oracles and instance generators shared by the integration
//! tests. Nothing here goes through the ridge index or the BFS engine.

#![allow(dead_code)]

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use scx::complex::{PureComplex, Vertex};
use scx::construct::{self, build_lfsr_complex};

fn shared(a: &[Vertex], b: &[Vertex]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

/// Dual adjacency from pairwise facet intersections.
pub fn adjacency_matrix(c: &PureComplex) -> Vec<Vec<bool>> {
    let m = c.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| i != j && shared(c.facet(i), c.facet(j)) == c.d() - 1)
                .collect()
        })
        .collect()
}

/// Floyd–Warshall all-pairs distances; `None` for unreachable pairs.
pub fn all_pairs(c: &PureComplex) -> Vec<Vec<Option<u32>>> {
    let m = c.len();
    let adj = adjacency_matrix(c);
    let mut dist: Vec<Vec<Option<u32>>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| match (i == j, adj[i][j]) {
                    (true, _) => Some(0),
                    (false, true) => Some(1),
                    _ => None,
                })
                .collect()
        })
        .collect();
    for k in 0..m {
        for i in 0..m {
            let Some(ik) = dist[i][k] else { continue };
            let via_k = dist[k].clone();
            for (ij, kj) in dist[i].iter_mut().zip(via_k) {
                if let Some(kj) = kj {
                    if ij.is_none_or(|x| ik + kj < x) {
                        *ij = Some(ik + kj);
                    }
                }
            }
        }
    }
    dist
}

/// Diameter from the all-pairs table; `None` if empty or disconnected.
pub fn oracle_diameter(c: &PureComplex) -> Option<u32> {
    if c.is_empty() {
        return None;
    }
    let dist = all_pairs(c);
    let mut best = 0;
    for row in &dist {
        for &x in row {
            best = best.max(x?);
        }
    }
    Some(best)
}

/// Ridge multiplicities by brute force over facets and dropped positions.
pub fn ridge_counts(c: &PureComplex) -> Vec<(Vec<Vertex>, usize)> {
    let mut ridges: Vec<Vec<Vertex>> = Vec::new();
    for f in c.facets() {
        for skip in 0..f.len() {
            let r: Vec<Vertex> = f
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &v)| v)
                .collect();
            ridges.push(r);
        }
    }
    ridges.sort();
    let mut out: Vec<(Vec<Vertex>, usize)> = Vec::new();
    for r in ridges {
        match out.last_mut() {
            Some((last, k)) if *last == r => *k += 1,
            _ => out.push((r, 1)),
        }
    }
    out
}

/// Normality by union-find over the star of each pairwise intersection.
pub fn oracle_normal(c: &PureComplex) -> bool {
    let m = c.len();
    let adj = adjacency_matrix(c);
    for i in 0..m {
        for j in i + 1..m {
            let face: Vec<Vertex> = c
                .facet(i)
                .iter()
                .copied()
                .filter(|v| c.facet(j).contains(v))
                .collect();
            let star: Vec<usize> = (0..m)
                .filter(|&k| face.iter().all(|v| c.facet(k).contains(v)))
                .collect();
            let mut parent: Vec<usize> = (0..m).collect();
            fn root(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for &a in &star {
                for &b in &star {
                    if adj[a][b] {
                        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                        parent[ra] = rb;
                    }
                }
            }
            if root(&mut parent, i) != root(&mut parent, j) {
                return false;
            }
        }
    }
    true
}

/// A random pure complex with `1..=max_facets` distinct facets of size `d`
/// on `n` vertices.
pub fn random_complex(rng: &mut ChaCha8Rng, max_facets: usize) -> PureComplex {
    let d = rng.gen_range(2..=4);
    let n = rng.gen_range(d + 1..=d + 5);
    let target = rng.gen_range(1..=max_facets);
    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    for _ in 0..target * 4 {
        if facets.len() == target {
            break;
        }
        let mut f: Vec<Vertex> = sample(rng, n, d).into_iter().map(|v| v as Vertex).collect();
        f.sort_unstable();
        if !facets.contains(&f) {
            facets.push(f);
        }
    }
    PureComplex::new(d, n, facets).expect("distinct sorted facets")
}

/// A random walk in the Johnson graph that never revisits a facet; often,
/// though not always, a corridor.
pub fn random_walk_complex(rng: &mut ChaCha8Rng, steps: usize) -> PureComplex {
    let d = rng.gen_range(2..=4);
    let n = d + rng.gen_range(2..=5);
    let mut cur: Vec<Vertex> = (0..d as Vertex).collect();
    let mut facets = vec![cur.clone()];
    for _ in 0..steps {
        let out = rng.gen_range(0..d);
        let candidates: Vec<Vertex> = (0..n as Vertex).filter(|v| !cur.contains(v)).collect();
        let inn = candidates[rng.gen_range(0..candidates.len())];
        let mut next = cur.clone();
        next[out] = inn;
        next.sort_unstable();
        if facets.contains(&next) {
            continue;
        }
        facets.push(next.clone());
        cur = next;
    }
    PureComplex::new(d, n, facets).expect("walk never repeats a facet")
}

/// Every complex the constructions produce at desk scale, labelled.
pub fn generated_instances() -> Vec<(String, PureComplex)> {
    let mut out = Vec::new();
    for (q, d) in [
        (2, 2),
        (3, 2),
        (4, 2),
        (5, 2),
        (7, 2),
        (2, 3),
        (3, 3),
        (4, 3),
        (5, 3),
        (3, 4),
    ] {
        let Ok(lc) = build_lfsr_complex(q, d, None, None) else {
            continue;
        };
        let cycle = lc.complex;
        let corridor = construct::drop_facet(&cycle, 0).expect("cycle has facets");
        if let Ok(x) = construct::double_corridor(&corridor) {
            out.push((format!("double q={q} d={d}"), x));
        }
        if let Ok(x) = construct::double_closed_corridor(&cycle) {
            out.push((format!("double closed q={q} d={d}"), x));
        }
        out.push((format!("lfsr q={q} d={d}"), cycle));
        out.push((format!("corridor q={q} d={d}"), corridor));
    }
    out
}
