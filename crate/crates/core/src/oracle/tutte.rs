use std::collections::HashMap;

use num_bigint::BigInt;

use super::canonical::{canonical_key_of, CanonicalKey};
use super::graph::{EdgeMap, Multigraph};
use crate::error::{Error, Result};
use crate::exact_poly::BiPoly;

pub const DEFAULT_EDGE_BOUND: usize = 64;

/// Which ordinary edge the recursion splits on. The result never depends on
/// it; the variants exist so that independence can be tested.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeChoice {
    #[default]
    MaxMultiplicity,
    MinMultiplicity,
    First,
    Last,
}

/// Deletion–contraction with a memo keyed on [`CanonicalKey`]. The memo is
/// owned by the oracle, so one oracle serves one thread.
#[derive(Debug)]
pub struct TutteOracle {
    edge_bound: usize,
    choice: EdgeChoice,
    memo: HashMap<CanonicalKey, BiPoly>,
}

impl Default for TutteOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl TutteOracle {
    pub fn new() -> Self {
        Self::with_options(DEFAULT_EDGE_BOUND, EdgeChoice::default())
    }

    pub fn with_options(edge_bound: usize, choice: EdgeChoice) -> Self {
        Self { edge_bound, choice, memo: HashMap::new() }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn tutte(&mut self, g: &Multigraph) -> Result<BiPoly> {
        let edges = g.edge_count();
        if edges > self.edge_bound {
            return Err(Error::TooLarge { edges, bound: self.edge_bound });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.eval(g.to_edge_map()))
    }

    fn eval(&mut self, mut g: EdgeMap) -> BiPoly {
        // Loops factor out as y, bridges as x (contracted away).
        let mut loops = 0u32;
        g.edges.retain(|&(a, b), &mut m| {
            if a == b {
                loops += m;
                false
            } else {
                true
            }
        });
        let mut bridges = 0u32;
        loop {
            let found = g.bridges();
            let Some(&e) = found.first() else { break };
            bridges += 1;
            g = g.contract_one(e);
        }
        let factor = BiPoly::monomial(bridges, loops, BigInt::from(1));
        if g.edges.is_empty() {
            return factor;
        }
        let key = canonical_key_of(&g);
        if let Some(hit) = self.memo.get(&key) {
            return &factor * hit;
        }
        let e = self.pick(&g);
        let deleted = self.eval(g.delete_one(e));
        let contracted = self.eval(g.contract_one(e));
        let t = deleted + contracted;
        self.memo.insert(key, t.clone());
        &factor * &t
    }

    fn pick(&self, g: &EdgeMap) -> (usize, usize) {
        // After stripping loops and bridges every remaining edge is ordinary.
        let mut it = g.edges.iter();
        let chosen = match self.choice {
            EdgeChoice::First => it.next(),
            EdgeChoice::Last => it.next_back(),
            EdgeChoice::MaxMultiplicity => it.max_by_key(|(e, &m)| (m, std::cmp::Reverse(**e))),
            EdgeChoice::MinMultiplicity => it.min_by_key(|(e, &m)| (m, **e)),
        };
        *chosen.expect("nonempty edge set").0
    }
}

/// Tutte polynomial with a fresh oracle and default settings.
pub fn tutte(g: &Multigraph) -> Result<BiPoly> {
    TutteOracle::new().tutte(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        let bridge = Multigraph::from_simple_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(tutte(&bridge).unwrap(), BiPoly::x());
        let lp = Multigraph::new(1, vec![(0, 0, 1)]).unwrap();
        assert_eq!(tutte(&lp).unwrap(), BiPoly::y());
        assert_eq!(tutte(&Multigraph::new(1, vec![]).unwrap()).unwrap(), BiPoly::one());
    }

    #[test]
    fn triangle() {
        let tri = Multigraph::from_simple_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let want = BiPoly::from_terms([(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(tutte(&tri).unwrap(), want);
    }

    #[test]
    fn errors() {
        let disc = Multigraph::new(3, vec![(0, 1, 1)]).unwrap();
        assert_eq!(tutte(&disc), Err(Error::Disconnected));
        let big = Multigraph::new(2, vec![(0, 1, 65)]).unwrap();
        assert!(matches!(tutte(&big), Err(Error::TooLarge { edges: 65, bound: 64 })));
    }

    #[test]
    fn double_edge() {
        let g = Multigraph::new(2, vec![(0, 1, 2)]).unwrap();
        assert_eq!(tutte(&g).unwrap(), BiPoly::x() + BiPoly::y());
    }
}
