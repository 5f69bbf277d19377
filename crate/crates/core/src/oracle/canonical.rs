use std::collections::BTreeMap;

use itertools::Itertools;

use super::graph::{EdgeMap, Multigraph};

/// Upper bound on the number of within-cell relabelings tried exhaustively.
const PERMUTATION_BUDGET: usize = 5040;

/// Vertex count plus the full sorted edge list of a deterministic relabeling.
/// Equal keys therefore always mean equal labeled graphs; isomorphic graphs
/// usually (not always) share a key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    vertices: usize,
    edges: Vec<(usize, usize, u32)>,
}

pub fn canonical_key(g: &Multigraph) -> CanonicalKey {
    canonical_key_of(&g.to_edge_map())
}

pub(crate) fn canonical_key_of(g: &EdgeMap) -> CanonicalKey {
    let mut colours = refine(g, initial_colours(g));
    loop {
        let cells = cells_of(&colours);
        let work: usize = cells
            .iter()
            .map(|c| factorial_capped(c.len()))
            .try_fold(1usize, |acc, f| acc.checked_mul(f).filter(|&v| v <= PERMUTATION_BUDGET))
            .unwrap_or(usize::MAX);
        if work <= PERMUTATION_BUDGET {
            return best_over_cells(g, &cells);
        }
        // Too many ties: individualize the lowest-index vertex of the first
        // non-singleton cell and refine again.
        let cell = cells.iter().find(|c| c.len() > 1).expect("ties remain");
        let pick = *cell.iter().min().unwrap();
        let doubled: Vec<usize> = colours.iter().enumerate().map(|(v, &c)| 2 * c + usize::from(v != pick)).collect();
        colours = refine(g, doubled);
    }
}

fn initial_colours(g: &EdgeMap) -> Vec<usize> {
    let mut sig = vec![(0u32, 0u32); g.n];
    for (&(a, b), &m) in &g.edges {
        if a == b {
            sig[a].0 += m;
        } else {
            sig[a].1 += m;
            sig[b].1 += m;
        }
    }
    rank(&sig)
}

/// Colour refinement: a vertex's new colour is its old colour together with
/// the multiset of (neighbour colour, multiplicity) pairs.
fn refine(g: &EdgeMap, mut colours: Vec<usize>) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); g.n];
    for (&(a, b), &m) in &g.edges {
        if a != b {
            adj[a].push((b, m));
            adj[b].push((a, m));
        }
    }
    let mut classes = count_classes(&colours);
    loop {
        let sig: Vec<(usize, Vec<(usize, u32)>)> = (0..g.n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> = adj[v].iter().map(|&(w, m)| (colours[w], m)).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let next = rank(&sig);
        let next_classes = count_classes(&next);
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let order: BTreeMap<&T, usize> = sig.iter().sorted().dedup().enumerate().map(|(k, s)| (s, k)).collect();
    sig.iter().map(|s| order[s]).collect()
}

fn count_classes(colours: &[usize]) -> usize {
    colours.iter().unique().count()
}

fn cells_of(colours: &[usize]) -> Vec<Vec<usize>> {
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colours.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    cells.into_values().collect()
}

fn factorial_capped(k: usize) -> usize {
    (1..=k).try_fold(1usize, |acc, i| acc.checked_mul(i)).unwrap_or(usize::MAX)
}

/// Smallest relabeled edge list over every ordering inside each cell; cells
/// themselves occupy consecutive label ranges in colour order.
fn best_over_cells(g: &EdgeMap, cells: &[Vec<usize>]) -> CanonicalKey {
    let per_cell: Vec<Vec<Vec<usize>>> =
        cells.iter().map(|c| c.iter().copied().permutations(c.len()).collect()).collect();
    let mut best: Option<Vec<(usize, usize, u32)>> = None;
    let mut label = vec![0usize; g.n];
    for choice in per_cell.iter().map(|v| v.iter()).multi_cartesian_product() {
        let mut next = 0;
        for order in choice {
            for &v in order {
                label[v] = next;
                next += 1;
            }
        }
        let mut edges: Vec<(usize, usize, u32)> = g
            .edges
            .iter()
            .map(|(&(a, b), &m)| {
                let (a, b) = (label[a], label[b]);
                (a.min(b), a.max(b), m)
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
    }
    CanonicalKey { vertices: g.n, edges: best.unwrap_or_default() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permuted_triangles_agree() {
        let a = Multigraph::from_simple_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = a.relabeled(&[2, 0, 1]);
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn triangle_differs_from_path() {
        let tri = Multigraph::from_simple_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let path = Multigraph::from_simple_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_ne!(canonical_key(&tri), canonical_key(&path));
    }

    #[test]
    fn multiplicity_distinguishes() {
        let a = Multigraph::new(3, vec![(0, 1, 2), (1, 2, 1)]).unwrap();
        let b = Multigraph::new(3, vec![(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_ne!(canonical_key(&a), canonical_key(&b));
        let a2 = a.relabeled(&[2, 1, 0]);
        assert_eq!(canonical_key(&a), canonical_key(&a2));
    }

    #[test]
    fn large_symmetric_graph_terminates() {
        // 10-cycle: one colour class of size 10 exceeds the permutation budget.
        let edges: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        let g = Multigraph::from_simple_edges(10, &edges).unwrap();
        let k = canonical_key(&g);
        assert_eq!(k, canonical_key(&g));
    }
}
