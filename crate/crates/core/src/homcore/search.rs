//! Backtracking search for graph homomorphisms with forward checking.

use crate::graph::{bits, count_bits, Graph};

/// Assigns next the unassigned vertex of `x` with the fewest candidate
/// images, ties broken by [`assignment_order`]; after each assignment
/// `u ↦ a` the candidate images of every unassigned neighbour of `u` are
/// intersected with the neighbourhood of `a`. Images already taken by other
/// vertices are tried before fresh ones.
pub(crate) struct HomSearch<'a> {
    x: &'a Graph,
    y: &'a Graph,
    order: Vec<usize>,
    assigned: Vec<bool>,
    wy: usize,
    levels: Vec<u64>,
    images: Vec<usize>,
    /// How many assigned vertices map onto each vertex of `y`.
    used: Vec<usize>,
    pub(crate) nodes: u64,
}

/// Descending degree, ties broken by vertex index.
pub(crate) fn assignment_order(x: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..x.order()).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(x.degree(u)), u));
    order
}

impl<'a> HomSearch<'a> {
    pub(crate) fn new(x: &'a Graph, y: &'a Graph) -> Self {
        let order = assignment_order(x);
        let wy = y.words();
        HomSearch {
            x,
            y,
            order,
            assigned: vec![false; x.order()],
            wy,
            levels: vec![0; (x.order() + 1) * x.order() * wy],
            images: vec![usize::MAX; x.order()],
            used: vec![0; y.order()],
            nodes: 0,
        }
    }

    /// First homomorphism (in search order) with `f(u) ∈ domains[u]`.
    /// `domains` holds one bitset row over `V(y)` per vertex of `x`.
    pub(crate) fn run(&mut self, domains: &[u64]) -> Option<Vec<usize>> {
        let n = self.x.order();
        assert_eq!(domains.len(), n * self.wy);
        if n == 0 {
            return Some(Vec::new());
        }
        if (0..n).any(|u| {
            domains[u * self.wy..(u + 1) * self.wy]
                .iter()
                .all(|&w| w == 0)
        }) {
            return None;
        }
        self.assigned.fill(false);
        self.used.fill(0);
        self.levels[..n * self.wy].copy_from_slice(domains);
        if self.descend(0) {
            Some(self.images.clone())
        } else {
            None
        }
    }

    fn descend(&mut self, depth: usize) -> bool {
        let n = self.x.order();
        if depth == n {
            return true;
        }
        let block = n * self.wy;
        let level = &self.levels[depth * block..(depth + 1) * block];
        let wy = self.wy;
        let size = |u: usize| count_bits(&level[u * wy..(u + 1) * wy]);
        let u = self
            .order
            .iter()
            .copied()
            .filter(|&u| !self.assigned[u])
            .min_by_key(|&u| size(u))
            .expect("an unassigned vertex remains");
        let base = depth * block + u * self.wy;
        let mut candidates: Vec<usize> = bits(&self.levels[base..base + self.wy]).collect();
        // images already in use first, so small images are found early
        candidates.sort_by_key(|&a| self.used[a] == 0);
        self.assigned[u] = true;
        for a in candidates {
            self.nodes += 1;
            if !self.propagate(depth, u, a) {
                continue;
            }
            self.images[u] = a;
            self.used[a] += 1;
            if self.descend(depth + 1) {
                return true;
            }
            self.used[a] -= 1;
        }
        self.assigned[u] = false;
        false
    }

    /// Writes the domains for `depth + 1` after `u ↦ a`; false on a wipe-out.
    fn propagate(&mut self, depth: usize, u: usize, a: usize) -> bool {
        let HomSearch {
            x,
            y,
            assigned,
            wy,
            levels,
            ..
        } = self;
        let wy = *wy;
        let block = x.order() * wy;
        let (current, rest) = levels[depth * block..].split_at_mut(block);
        let next = &mut rest[..block];
        next.copy_from_slice(current);
        let target = y.row(a);
        for w in x.neighbors(u) {
            if assigned[w] {
                continue;
            }
            let dom = &mut next[w * wy..(w + 1) * wy];
            let mut any = 0;
            for (d, &t) in dom.iter_mut().zip(target) {
                *d &= t;
                any |= *d;
            }
            if any == 0 {
                return false;
            }
        }
        true
    }
}
