use super::{ComplexError, DualGraph, PureComplex};
use crate::exec::Execution;

/// BFS distance marker for nodes not reachable from the source.
pub const UNREACHABLE: u32 = u32::MAX;

/// BFS eccentricity of every facet. Sources are independent, so the
/// parallel mode fans them out over worker threads.
pub fn eccentricities(graph: &DualGraph) -> Result<Vec<u32>, ComplexError> {
    eccentricities_with(graph, Execution::default())
}

pub fn eccentricities_with(graph: &DualGraph, exec: Execution) -> Result<Vec<u32>, ComplexError> {
    if graph.node_count() == 0 {
        return Err(ComplexError::EmptyComplex);
    }
    if !graph.is_connected() {
        return Err(ComplexError::Disconnected);
    }
    Ok(exec.map(graph.node_count(), |s| {
        graph.bfs(s).into_iter().max().expect("nonempty")
    }))
}

/// Combinatorial diameter: the largest dual-graph eccentricity.
pub fn diameter(c: &PureComplex) -> Result<u32, ComplexError> {
    diameter_with(c, Execution::default())
}

pub fn diameter_with(c: &PureComplex, exec: Execution) -> Result<u32, ComplexError> {
    let ecc = eccentricities_with(&c.dual_graph(), exec)?;
    Ok(ecc.into_iter().max().expect("nonempty"))
}
