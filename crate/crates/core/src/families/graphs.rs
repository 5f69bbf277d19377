use super::FamilyId;
use crate::error::{Error, Result};
use crate::oracle::{Multigraph, DEFAULT_EDGE_BOUND};

/// Explicit multigraph for a family member, sized for the oracle.
///
/// - triangle strip: vertices `0..=n+1`, rim edges `(i, i+1)`, chords
///   `(i, i+2)`, with the last rim edge `(n, n+1)` doubled;
/// - wheel: hub `0` joined to the `n`-cycle `1..=n` (a loop when `n = 1`);
/// - cycle-multi: the `(n+1)`-cycle on `0..=n` with edge `(0, 1)` of
///   multiplicity `n`;
/// - counterexample: the cycle-multi member with `n = 3`.
pub fn build_family_graph(id: FamilyId, n: usize) -> Result<Multigraph> {
    id.check_n(n)?;
    let edges = match id {
        FamilyId::TriangleStrip => 2 * n + 2,
        FamilyId::Wheel | FamilyId::CycleMultiEdge => 2 * n,
        FamilyId::CounterexampleC => 6,
    };
    if edges > DEFAULT_EDGE_BOUND {
        return Err(Error::Unsupported(format!(
            "{id} with n = {n} has {edges} edges, above the oracle bound of {DEFAULT_EDGE_BOUND}"
        )));
    }
    match id {
        FamilyId::TriangleStrip => {
            let mut e = Vec::new();
            for i in 0..n {
                e.push((i, i + 1, 1));
            }
            e.push((n, n + 1, 2));
            for i in 0..n {
                e.push((i, i + 2, 1));
            }
            Multigraph::new(n + 2, e)
        }
        FamilyId::Wheel => {
            let mut e: Vec<(usize, usize, u32)> = (1..=n).map(|i| (0, i, 1)).collect();
            for i in 1..=n {
                e.push((i, i % n + 1, 1));
            }
            Multigraph::new(n + 1, e)
        }
        FamilyId::CycleMultiEdge => cycle_with_multi_edge(n),
        FamilyId::CounterexampleC => cycle_with_multi_edge(3),
    }
}

fn cycle_with_multi_edge(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Multigraph::new(1, vec![]);
    }
    let mut e = vec![(0, 1, n as u32)];
    for i in 1..=n {
        e.push((i, (i + 1) % (n + 1), 1));
    }
    Multigraph::new(n + 1, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let c = build_family_graph(FamilyId::CounterexampleC, 0).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (4, 6));
        let w = build_family_graph(FamilyId::Wheel, 3).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (4, 6));
        let m = build_family_graph(FamilyId::CycleMultiEdge, 3).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count()), (4, 6));
        assert!(m.edges().contains(&(0, 1, 3)));
        let s = build_family_graph(FamilyId::TriangleStrip, 4).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (6, 10));
    }

    #[test]
    fn bounds() {
        assert!(build_family_graph(FamilyId::Wheel, 0).is_err());
        assert!(build_family_graph(FamilyId::Wheel, 33).is_err());
        assert!(build_family_graph(FamilyId::CycleMultiEdge, 32).is_ok());
    }
}
