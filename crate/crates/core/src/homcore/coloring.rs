//! Exact `k`-colourability by DSATUR-style backtracking.
//!
//! A maximum clique is precoloured with colours `0..ω`; after that a fresh
//! colour is only ever introduced as the next unused one, so colourings that
//! differ by renaming unused colours are explored once.

use super::clique::maximum_clique;
use crate::graph::Graph;

const UNCOLOURED: usize = usize::MAX;

struct Colouring<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    /// `conflicts[v * k + c]`: coloured neighbours of `v` with colour `c`.
    conflicts: Vec<u32>,
    saturation: Vec<usize>,
    uncoloured_degree: Vec<usize>,
    remaining: usize,
    nodes: u64,
    budget: u64,
}

impl Colouring<'_> {
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.colour[v] = c;
        self.remaining -= 1;
        let mut alive = true;
        for w in self.g.neighbors(v) {
            self.uncoloured_degree[w] -= 1;
            let slot = &mut self.conflicts[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[w] += 1;
                if self.colour[w] == UNCOLOURED && self.saturation[w] == self.k {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = UNCOLOURED;
        self.remaining += 1;
        for w in self.g.neighbors(v) {
            self.uncoloured_degree[w] += 1;
            let slot = &mut self.conflicts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        (0..self.g.order())
            .filter(|&v| self.colour[v] == UNCOLOURED)
            .max_by_key(|&v| {
                (
                    self.saturation[v],
                    self.uncoloured_degree[v],
                    std::cmp::Reverse(v),
                )
            })
            .expect("an uncoloured vertex remains")
    }

    fn solve(&mut self, used: usize) -> bool {
        if self.remaining == 0 {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let v = self.pick();
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.conflicts[v * self.k + c] != 0 {
                continue;
            }
            let ok = self.assign(v, c);
            if ok && self.solve(used.max(c + 1)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// A proper colouring with colours `0..k`, if one exists.
pub fn find_colouring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    colour_within(g, k, u64::MAX).expect("unlimited budget")
}

/// `Some(true)` or `Some(false)` when `k`-colourability is decided within
/// `budget` search nodes, `None` otherwise.
pub(crate) fn colourable_within(g: &Graph, k: usize, budget: u64) -> Option<bool> {
    colour_within(g, k, budget).map(|c| c.is_some())
}

fn colour_within(g: &Graph, k: usize, budget: u64) -> Option<Option<Vec<usize>>> {
    let n = g.order();
    if n == 0 {
        return Some(Some(Vec::new()));
    }
    if k == 0 {
        return Some(None);
    }
    if k >= n {
        return Some(Some((0..n).collect()));
    }
    let clique = maximum_clique(g);
    if clique.len() > k {
        return Some(None);
    }
    let mut state = Colouring {
        g,
        k,
        colour: vec![UNCOLOURED; n],
        conflicts: vec![0; n * k],
        saturation: vec![0; n],
        uncoloured_degree: (0..n).map(|v| g.degree(v)).collect(),
        remaining: n,
        nodes: 0,
        budget,
    };
    for (c, &v) in clique.iter().enumerate() {
        if !state.assign(v, c) {
            return Some(None);
        }
    }
    if state.solve(clique.len()) {
        Some(Some(state.colour))
    } else if state.nodes > budget {
        None
    } else {
        Some(None)
    }
}

pub fn has_proper_colouring(g: &Graph, k: usize) -> bool {
    find_colouring(g, k).is_some()
}

pub fn chromatic_number(g: &Graph) -> usize {
    let lower = maximum_clique(g).len();
    (lower..=g.order())
        .find(|&k| has_proper_colouring(g, k))
        .unwrap_or(g.order())
}
