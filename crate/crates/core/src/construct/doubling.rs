use super::{ConstructionError, MAX_FACETS};
use crate::complex::{
    classify_dual, diameter, is_pseudo_manifold, ComplexError, DualShape, PureComplex, Vertex,
};

/// A corridor (or closed corridor) in dual-graph order, with the exit markers
/// used by the doubling construction.
///
/// `a[i]` is the vertex of `F_i` missing from `F_{i+1}` and `b[i]` the vertex
/// missing from `F_{i-1}`. For an open corridor `b[0]` and `a[δ]` have no
/// neighbor to refer to; they are the smallest vertex different from `a[0]`
/// and `b[δ]` respectively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorridorFrame {
    /// Facet indices of the input complex in dual-graph order.
    pub order: Vec<usize>,
    pub facets: Vec<Vec<Vertex>>,
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    /// Whether `F_δ` and `F_0` are adjacent.
    pub closed: bool,
}

impl CorridorFrame {
    /// δ: the index of the last facet.
    pub fn delta(&self) -> usize {
        self.facets.len() - 1
    }
}

/// Id of copy `copy` (1 or 2) of vertex `v`: `2v + copy - 1`.
pub fn doubled_vertex(v: Vertex, copy: u8) -> Vertex {
    debug_assert!(copy == 1 || copy == 2);
    2 * v + (copy as Vertex - 1)
}

/// Inverse of [`doubled_vertex`].
pub fn undoubled_vertex(id: Vertex) -> (Vertex, u8) {
    (id / 2, (id % 2) as u8 + 1)
}

fn only_vertex_not_in(f: &[Vertex], other: &[Vertex]) -> Option<Vertex> {
    let mut rest = f
        .iter()
        .copied()
        .filter(|v| other.binary_search(v).is_err());
    match (rest.next(), rest.next()) {
        (Some(v), None) => Some(v),
        _ => None,
    }
}

fn smallest_other(f: &[Vertex], excluded: Vertex) -> Vertex {
    *f.iter()
        .find(|&&v| v != excluded)
        .expect("facets have at least two vertices")
}

fn frame(
    c: &PureComplex,
    order: Vec<usize>,
    closed: bool,
) -> Result<CorridorFrame, ConstructionError> {
    let facets: Vec<Vec<Vertex>> = order.iter().map(|&i| c.facet(i).to_vec()).collect();
    let m = facets.len();
    let step = |i: usize, j: usize| {
        only_vertex_not_in(&facets[i], &facets[j]).ok_or_else(|| {
            ConstructionError::ConstructionCheckFailed(format!(
                "facets {} and {} are consecutive but do not share a ridge",
                order[i], order[j]
            ))
        })
    };
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for i in 0..m {
        let next = if i + 1 < m {
            Some(i + 1)
        } else {
            closed.then_some(0)
        };
        let prev = if i > 0 {
            Some(i - 1)
        } else {
            closed.then_some(m - 1)
        };
        a.push(next.map(|j| step(i, j)).transpose()?);
        b.push(prev.map(|j| step(i, j)).transpose()?);
    }
    if !closed {
        b[0] = Some(smallest_other(
            &facets[0],
            a[0].expect("at least two facets"),
        ));
        a[m - 1] = Some(smallest_other(
            &facets[m - 1],
            b[m - 1].expect("at least two facets"),
        ));
    }
    let a: Vec<Vertex> = a.into_iter().map(Option::unwrap).collect();
    let b: Vec<Vertex> = b.into_iter().map(Option::unwrap).collect();
    if let Some(i) = (0..m).find(|&i| a[i] == b[i]) {
        return Err(ConstructionError::ConstructionCheckFailed(format!(
            "exit markers coincide in facet {}",
            order[i]
        )));
    }
    Ok(CorridorFrame {
        order,
        facets,
        a,
        b,
        closed,
    })
}

/// Frame of a corridor: the dual graph must be a path with at least two
/// facets.
pub fn corridor_frame(c: &PureComplex) -> Result<CorridorFrame, ConstructionError> {
    if c.d() < 2 {
        return Err(ConstructionError::DimensionTooSmall(c.d()));
    }
    match classify_dual(c) {
        Ok(DualShape::Path(order)) if order.len() >= 2 => frame(c, order, false),
        Ok(DualShape::Path(_)) => Err(ConstructionError::TooSmall),
        Ok(_) | Err(ComplexError::EmptyComplex) => Err(ConstructionError::NotACorridor),
        Err(e) => Err(e.into()),
    }
}

fn closed_corridor_frame(c: &PureComplex) -> Result<CorridorFrame, ConstructionError> {
    if c.d() < 2 {
        return Err(ConstructionError::DimensionTooSmall(c.d()));
    }
    match classify_dual(c) {
        Ok(DualShape::Cycle(order)) => frame(c, order, true),
        Ok(_) | Err(ComplexError::EmptyComplex) => Err(ConstructionError::NotAClosedCorridor),
        Err(e) => Err(e.into()),
    }
}

/// All two-colorings of `vertices` appended to `prefix`, in binary order
/// with the first vertex as the lowest bit.
fn colorings(vertices: &[Vertex], prefix: &[Vertex], out: &mut Vec<Vec<Vertex>>) {
    for mask in 0u64..1 << vertices.len() {
        let mut f = prefix.to_vec();
        f.extend(
            vertices
                .iter()
                .enumerate()
                .map(|(k, &v)| doubled_vertex(v, 1 + (mask >> k & 1) as u8)),
        );
        out.push(f);
    }
}

/// The `2^(d-1)` colorings of `facet` in which `a` and `b` get the same copy.
fn tied_colorings(facet: &[Vertex], a: Vertex, b: Vertex, out: &mut Vec<Vec<Vertex>>) {
    let others: Vec<Vertex> = facet
        .iter()
        .copied()
        .filter(|&v| v != a && v != b)
        .collect();
    for copy in [1, 2] {
        colorings(
            &others,
            &[doubled_vertex(a, copy), doubled_vertex(b, copy)],
            out,
        );
    }
}

/// Every coloring of `ridge \ {apex}` joined with both copies of `apex`.
fn glued_ball(ridge: &[Vertex], apex: Vertex, out: &mut Vec<Vec<Vertex>>) {
    let rest: Vec<Vertex> = ridge.iter().copied().filter(|&v| v != apex).collect();
    colorings(
        &rest,
        &[doubled_vertex(apex, 1), doubled_vertex(apex, 2)],
        out,
    );
}

fn expected_facets(facets: usize, d: usize) -> Result<usize, ConstructionError> {
    let count = if d - 1 < 64 {
        (facets as u128) << (d - 1)
    } else {
        u128::MAX
    };
    if count > MAX_FACETS as u128 {
        return Err(ConstructionError::TooLarge { facets: count });
    }
    Ok(count as usize)
}

fn assemble(c: &PureComplex, facets: Vec<Vec<Vertex>>) -> Result<PureComplex, ConstructionError> {
    PureComplex::new(c.d(), 2 * c.n(), facets).map_err(|e| match e {
        ComplexError::DuplicateFacet { first, second } => {
            ConstructionError::ConstructionCheckFailed(format!(
                "doubled facets {first} and {second} coincide"
            ))
        }
        other => other.into(),
    })
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::ConstructionCheckFailed(what()))
    }
}

/// Pseudo-manifold without boundary on `2n` vertices from a corridor with
/// facets `F_0..F_δ`: the tied colorings of every facet, closed off by two
/// glued balls at the ends. Diameter is at least `δ + 2`.
pub fn double_corridor(c: &PureComplex) -> Result<PureComplex, ConstructionError> {
    let fr = corridor_frame(c)?;
    if let Some(&v) = c.unused_vertices().first() {
        return Err(ConstructionError::UnusedVertex(v));
    }
    let d = c.d();
    let delta = fr.delta();
    let expected = expected_facets(delta + 2, d)?;

    let mut facets = Vec::with_capacity(expected);
    for (i, f) in fr.facets.iter().enumerate() {
        tied_colorings(f, fr.a[i], fr.b[i], &mut facets);
    }
    let r1: Vec<Vertex> = fr.facets[0]
        .iter()
        .copied()
        .filter(|&v| v != fr.b[0])
        .collect();
    let r2: Vec<Vertex> = fr.facets[delta]
        .iter()
        .copied()
        .filter(|&v| v != fr.a[delta])
        .collect();
    let (ga, gb) = r1
        .iter()
        .find_map(|&a| r2.iter().find(|&&b| b != a).map(|&b| (a, b)))
        .ok_or(ConstructionError::NoValidGlueChoice)?;
    glued_ball(&r1, ga, &mut facets);
    glued_ball(&r2, gb, &mut facets);

    let out = assemble(c, facets)?;
    check(out.len() == expected, || {
        format!("{} facets, expected {expected}", out.len())
    })?;
    check(is_pseudo_manifold(&out), || {
        "result is not a pseudo-manifold".into()
    })?;
    check(out.used_vertex_count() == out.n(), || {
        format!(
            "only {} of {} vertices used",
            out.used_vertex_count(),
            out.n()
        )
    })?;
    let diam = diameter(&out)?;
    check(diam as usize >= delta + 2, || {
        format!("diameter {diam} below {}", delta + 2)
    })?;
    Ok(out)
}

/// Doubling of a closed corridor: the tied colorings of every facet, with no
/// gluing. For `d >= 3` this is a pseudo-manifold with `P * 2^(d-1)` facets.
///
/// At `d = 2` every tied coloring is monochromatic, so a cycle of `P` facets
/// doubles into two disjoint `P`-cycles; the pseudo-manifold check then fails.
pub fn double_closed_corridor(c: &PureComplex) -> Result<PureComplex, ConstructionError> {
    let fr = closed_corridor_frame(c)?;
    let expected = expected_facets(fr.facets.len(), c.d())?;
    let mut facets = Vec::with_capacity(expected);
    for (i, f) in fr.facets.iter().enumerate() {
        tied_colorings(f, fr.a[i], fr.b[i], &mut facets);
    }
    let out = assemble(c, facets)?;
    check(out.len() == expected, || {
        format!("{} facets, expected {expected}", out.len())
    })?;
    check(is_pseudo_manifold(&out), || {
        "result is not a pseudo-manifold".into()
    })?;
    Ok(out)
}
