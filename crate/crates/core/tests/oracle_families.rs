use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use tutte_atlas_core::exact_poly::{is_symmetric, BiPoly};
use tutte_atlas_core::families::{build_family_graph, family_bipoly, FamilyId};
use tutte_atlas_core::oracle::{tutte, EdgeChoice, Multigraph, TutteOracle};

/// Spanning-tree count by the matrix-tree theorem, exact determinant of the
/// reduced Laplacian over the rationals.
fn spanning_trees(g: &Multigraph) -> BigInt {
    let n = g.vertex_count();
    if n == 1 {
        return BigInt::one();
    }
    let mut lap = vec![vec![BigRational::zero(); n]; n];
    for &(u, v, m) in g.edges() {
        if u == v {
            continue;
        }
        let m = BigRational::from_integer(BigInt::from(m));
        lap[u][u] += &m;
        lap[v][v] += &m;
        lap[u][v] -= &m;
        lap[v][u] -= &m;
    }
    let mut a: Vec<Vec<BigRational>> = lap[1..].iter().map(|r| r[1..].to_vec()).collect();
    let k = n - 1;
    let mut det = BigRational::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot_row = a[c].clone();
        let piv = &pivot_row[c];
        det *= piv;
        for row in a.iter_mut().take(k).skip(c + 1) {
            let f = &row[c] / piv;
            if f.is_zero() {
                continue;
            }
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &f * p;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

fn small_graphs() -> Vec<Multigraph> {
    let mut out = vec![
        Multigraph::from_simple_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
        Multigraph::from_simple_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)]).unwrap(),
        Multigraph::new(3, vec![(0, 1, 3), (1, 2, 2), (0, 2, 1), (2, 2, 1)]).unwrap(),
        Multigraph::new(2, vec![(0, 1, 5)]).unwrap(),
    ];
    // K4 and K_{3,3}
    let k4: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    out.push(Multigraph::from_simple_edges(4, &k4).unwrap());
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    out.push(Multigraph::from_simple_edges(6, &k33).unwrap());
    for id in FamilyId::ALL {
        for n in id.min_n()..=4 {
            out.push(build_family_graph(id, n).unwrap());
            if !id.has_size() {
                break;
            }
        }
    }
    out
}

#[test]
fn recurrences_match_deletion_contraction() {
    let mut oracle = TutteOracle::new();
    for id in FamilyId::ALL {
        let sizes: Vec<usize> = if id.has_size() { (id.min_n()..=6).collect() } else { vec![0] };
        for n in sizes {
            let g = build_family_graph(id, n).unwrap();
            let want = oracle.tutte(&g).unwrap();
            assert_eq!(family_bipoly(id, n).unwrap(), want, "{id} n={n}");
        }
    }
}

#[test]
fn tree_count_at_one_one() {
    for g in small_graphs() {
        let t = tutte(&g).unwrap();
        assert_eq!(t.eval_int(&BigInt::one(), &BigInt::one()), spanning_trees(&g), "{g:?}");
    }
}

#[test]
fn two_two_counts_edge_subsets() {
    let two = BigInt::from(2);
    for g in small_graphs() {
        let t = tutte(&g).unwrap();
        assert_eq!(t.eval_int(&two, &two), BigInt::one() << g.edge_count(), "{g:?}");
    }
}

#[test]
fn edge_choice_does_not_matter() {
    for g in small_graphs() {
        let results: Vec<BiPoly> =
            [EdgeChoice::MaxMultiplicity, EdgeChoice::MinMultiplicity, EdgeChoice::First, EdgeChoice::Last]
                .into_iter()
                .map(|c| TutteOracle::with_options(64, c).tutte(&g).unwrap())
                .collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]), "{g:?}");
    }
}

#[test]
fn relabeling_does_not_matter() {
    for g in small_graphs() {
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).map(|i| (i * 3 + 1) % n).collect();
        let mut seen = perm.clone();
        seen.sort_unstable();
        if seen != (0..n).collect::<Vec<_>>() {
            continue;
        }
        assert_eq!(tutte(&g).unwrap(), tutte(&g.relabeled(&perm)).unwrap());
    }
}

#[test]
fn self_dual_members_are_symmetric() {
    let mut oracle = TutteOracle::new();
    for id in FamilyId::ALL {
        for n in id.min_n()..=6 {
            assert!(is_symmetric(&family_bipoly(id, n).unwrap()), "{id} n={n}");
        }
    }
    for n in 1..=5 {
        assert!(is_symmetric(&oracle.tutte(&build_family_graph(FamilyId::Wheel, n).unwrap()).unwrap()));
    }
    // Not self-dual: the 4-cycle has T = x^3 + x^2 + x + y.
    let c4 = Multigraph::from_simple_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(!is_symmetric(&tutte(&c4).unwrap()));
}

#[test]
fn large_members_stay_symmetric() {
    for id in FamilyId::SWEEPABLE {
        assert!(is_symmetric(&family_bipoly(id, 40).unwrap()), "{id}");
    }
}
