use petgraph::unionfind::UnionFind;

use super::VerifyError;

/// First Betti number `E - V + 1` of a connected graph on vertices
/// `0..vertices`. Loops and parallel edges count.
pub fn graph_betti(vertices: usize, edges: &[(usize, usize)]) -> Result<usize, VerifyError> {
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= vertices || b >= vertices) {
        return Err(VerifyError::DanglingEdge(a, b));
    }
    if vertices == 0 {
        return Err(VerifyError::Disconnected { components: 0 });
    }
    let mut uf = UnionFind::new(vertices);
    let mut components = vertices;
    for &(a, b) in edges {
        if uf.union(a, b) {
            components -= 1;
        }
    }
    if components != 1 {
        return Err(VerifyError::Disconnected { components });
    }
    Ok(edges.len() + 1 - vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_and_cycle() {
        assert_eq!(graph_betti(2, &[(0, 1)]).unwrap(), 0);
        assert_eq!(graph_betti(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(), 1);
        assert_eq!(graph_betti(1, &[(0, 0), (0, 0)]).unwrap(), 2);
    }

    #[test]
    fn disconnected_graph() {
        assert_eq!(graph_betti(3, &[(0, 1)]), Err(VerifyError::Disconnected { components: 2 }));
        assert_eq!(graph_betti(2, &[(0, 5)]), Err(VerifyError::DanglingEdge(0, 5)));
    }
}
