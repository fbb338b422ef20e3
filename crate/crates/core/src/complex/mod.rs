//! Pure simplicial complexes: facets, ridges and the dual graph.

mod bounds;
mod diameter;
pub mod format;
mod predicates;

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

pub use bounds::{corridor_lower_bound, hirsch_upper_bound, pseudo_manifold_lower_bound};
pub use diameter::{diameter, diameter_with, eccentricities, eccentricities_with, UNREACHABLE};
pub use predicates::{
    is_induced_johnson_path, is_normal, is_normal_with, is_pseudo_manifold,
    is_pseudo_manifold_with_boundary, is_semi_duoid, is_strongly_connected, NORMALITY_LIMIT,
};

pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("facet size must be at least 1")]
    ZeroFacetSize,
    #[error("facet {facet} has {found} distinct vertices, expected {expected}")]
    FacetSizeMismatch {
        facet: usize,
        expected: usize,
        found: usize,
    },
    #[error("facet {facet} uses vertex {vertex}, outside [0, {n})")]
    VertexOutOfRange { facet: usize, vertex: u64, n: usize },
    #[error("facet {second} duplicates facet {first}")]
    DuplicateFacet { first: usize, second: usize },
    #[error("complex has no facets")]
    EmptyComplex,
    #[error("dual graph is disconnected")]
    Disconnected,
    #[error("{facets} facets exceed the limit of {limit} for this check")]
    TooLarge { facets: usize, limit: usize },
}

/// A pure `(d-1)`-dimensional complex on the vertex set `[0, n)`.
///
/// Facets are sorted vertex lists kept in insertion order; equality ignores
/// that order.
#[derive(Debug, Clone)]
pub struct PureComplex {
    d: usize,
    n: usize,
    facets: Vec<Vec<Vertex>>,
}

impl PartialEq for PureComplex {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.n == other.n && self.sorted_facets() == other.sorted_facets()
    }
}

impl Eq for PureComplex {}

impl PureComplex {
    /// Validate and build. Each facet is sorted; order within the input
    /// facet does not matter, repeated vertices do.
    pub fn new(d: usize, n: usize, facets: Vec<Vec<Vertex>>) -> Result<Self, ComplexError> {
        if d == 0 {
            return Err(ComplexError::ZeroFacetSize);
        }
        let mut seen: HashMap<&[Vertex], usize> = HashMap::with_capacity(facets.len());
        let mut facets = facets;
        for (i, f) in facets.iter_mut().enumerate() {
            f.sort_unstable();
            f.dedup();
            if f.len() != d {
                return Err(ComplexError::FacetSizeMismatch {
                    facet: i,
                    expected: d,
                    found: f.len(),
                });
            }
            if let Some(&v) = f.iter().find(|&&v| v as usize >= n) {
                return Err(ComplexError::VertexOutOfRange {
                    facet: i,
                    vertex: v as u64,
                    n,
                });
            }
        }
        for (i, f) in facets.iter().enumerate() {
            if let Some(&first) = seen.get(f.as_slice()) {
                return Err(ComplexError::DuplicateFacet { first, second: i });
            }
            seen.insert(f, i);
        }
        Ok(Self { d, n, facets })
    }

    /// Facet size (dimension + 1).
    pub fn d(&self) -> usize {
        self.d
    }

    /// Ambient vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> &[Vertex] {
        &self.facets[i]
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn sorted_facets(&self) -> Vec<&[Vertex]> {
        let mut v: Vec<&[Vertex]> = self.facets.iter().map(Vec::as_slice).collect();
        v.sort_unstable();
        v
    }

    /// Number of distinct vertices that occur in some facet.
    pub fn used_vertex_count(&self) -> usize {
        self.facets.iter().flatten().collect::<HashSet<_>>().len()
    }

    /// Ambient vertices that occur in no facet, increasing.
    pub fn unused_vertices(&self) -> Vec<Vertex> {
        let mut used = vec![false; self.n];
        for &v in self.facets.iter().flatten() {
            used[v as usize] = true;
        }
        (0..self.n as Vertex)
            .filter(|&v| !used[v as usize])
            .collect()
    }

    pub fn without_facet(&self, index: usize) -> Self {
        let mut facets = self.facets.clone();
        facets.remove(index);
        Self {
            d: self.d,
            n: self.n,
            facets,
        }
    }

    pub fn ridge_index(&self) -> RidgeIndex {
        RidgeIndex::new(self)
    }

    pub fn dual_graph(&self) -> DualGraph {
        DualGraph::from_ridges(self.len(), &self.ridge_index())
    }
}

/// Each ridge (a facet minus one vertex, sorted) mapped to the increasing
/// list of facets containing it.
#[derive(Debug, Clone)]
pub struct RidgeIndex {
    map: HashMap<Vec<Vertex>, Vec<usize>>,
}

impl RidgeIndex {
    pub fn new(c: &PureComplex) -> Self {
        let mut map: HashMap<Vec<Vertex>, Vec<usize>> = HashMap::with_capacity(c.len() * c.d());
        for (i, f) in c.facets().iter().enumerate() {
            for skip in 0..f.len() {
                let ridge: Vec<Vertex> = f
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                map.entry(ridge).or_default().push(i);
            }
        }
        Self { map }
    }

    pub fn facets_containing(&self, ridge: &[Vertex]) -> &[usize] {
        self.map.get(ridge).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Vertex], &[usize])> {
        self.map.iter().map(|(r, f)| (r.as_slice(), f.as_slice()))
    }

    /// Sum of incidence list lengths, `d * |facets|`.
    pub fn total_multiplicity(&self) -> usize {
        self.map.values().map(Vec::len).sum()
    }

    /// Ridges lying in exactly one facet.
    pub fn boundary_count(&self) -> usize {
        self.map.values().filter(|f| f.len() == 1).count()
    }
}

/// Facet adjacency: two facets are adjacent when they share a ridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    adjacency: Vec<Vec<usize>>,
}

/// Shape of a dual graph, with the facet order along paths and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualShape {
    /// Includes the single-facet complex.
    Path(Vec<usize>),
    Cycle(Vec<usize>),
    OtherConnected,
    Disconnected,
}

impl DualShape {
    pub fn name(&self) -> &'static str {
        match self {
            DualShape::Path(_) => "path",
            DualShape::Cycle(_) => "cycle",
            DualShape::OtherConnected => "connected",
            DualShape::Disconnected => "disconnected",
        }
    }
}

impl DualGraph {
    pub fn from_ridges(nodes: usize, ridges: &RidgeIndex) -> Self {
        let mut adjacency = vec![Vec::new(); nodes];
        for (_, fs) in ridges.iter() {
            for (k, &a) in fs.iter().enumerate() {
                for &b in &fs[k + 1..] {
                    adjacency[a].push(b);
                    adjacency[b].push(a);
                }
            }
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
            adj.dedup();
        }
        Self { adjacency }
    }

    /// Build directly from adjacency lists (sorted and deduplicated here).
    pub fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        for adj in &mut adjacency {
            adj.sort_unstable();
            adj.dedup();
        }
        Self { adjacency }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// BFS distances from `source`; [`UNREACHABLE`] where no path exists.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        self.bfs_within(source, |_| true)
    }

    /// BFS restricted to nodes accepted by `allowed` (the source is always
    /// visited).
    pub fn bfs_within(&self, source: usize, allowed: impl Fn(usize) -> bool) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.node_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE && allowed(w) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected with at least one node.
    pub fn is_connected(&self) -> bool {
        self.node_count() > 0 && self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn shape(&self) -> Result<DualShape, ComplexError> {
        let m = self.node_count();
        if m == 0 {
            return Err(ComplexError::EmptyComplex);
        }
        if !self.is_connected() {
            return Ok(DualShape::Disconnected);
        }
        if m == 1 {
            return Ok(DualShape::Path(vec![0]));
        }
        let ends: Vec<usize> = (0..m).filter(|&v| self.degree(v) == 1).collect();
        let rest_ok = (0..m).all(|v| matches!(self.degree(v), 1 | 2));
        if !rest_ok {
            return Ok(DualShape::OtherConnected);
        }
        match ends.as_slice() {
            [start, _] => Ok(DualShape::Path(self.walk(*start, None, m))),
            [] if m >= 3 => {
                let first_step = self.adjacency[0][0];
                Ok(DualShape::Cycle(self.walk(0, Some(first_step), m)))
            }
            _ => Ok(DualShape::OtherConnected),
        }
    }

    /// Follow a max-degree-2 graph from `start`, optionally forcing the
    /// first step.
    fn walk(&self, start: usize, first: Option<usize>, m: usize) -> Vec<usize> {
        let mut order = Vec::with_capacity(m);
        order.push(start);
        let mut prev = start;
        let mut cur = first.unwrap_or(self.adjacency[start][0]);
        while order.len() < m {
            order.push(cur);
            let Some(&next) = self.adjacency[cur].iter().find(|&&w| w != prev) else {
                break;
            };
            prev = cur;
            cur = next;
        }
        order
    }
}

/// Path / cycle / other classification of the dual graph.
pub fn classify_dual(c: &PureComplex) -> Result<DualShape, ComplexError> {
    c.dual_graph().shape()
}
