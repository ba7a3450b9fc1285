//! Maximum clique by branch and bound, bounded by greedy colouring of the
//! candidate set.

use crate::graph::{bits, clear_bit, count_bits, set_bit, Graph};

struct MaxClique<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl MaxClique<'_> {
    /// Vertices of `candidates` in colour order, each with its colour number
    /// (1-based). Every clique inside the first `t` entries has size at most
    /// the colour of entry `t`.
    fn colour_order(&self, candidates: &[u64]) -> Vec<(usize, usize)> {
        let mut uncoloured = candidates.to_vec();
        let mut out = Vec::with_capacity(count_bits(candidates));
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut available = uncoloured.clone();
            loop {
                let next = bits(&available).next();
                let Some(v) = next else { break };
                clear_bit(&mut available, v);
                clear_bit(&mut uncoloured, v);
                for (a, &n) in available.iter_mut().zip(self.g.row(v)) {
                    *a &= !n;
                }
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut candidates: Vec<u64>) {
        let order = self.colour_order(&candidates);
        for &(v, colour) in order.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Vec<u64> = candidates
                .iter()
                .zip(self.g.row(v))
                .map(|(&c, &n)| c & n)
                .collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            clear_bit(&mut candidates, v);
        }
    }
}

/// A maximum clique, as a sorted vertex list.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    if g.order() == 0 {
        return Vec::new();
    }
    let mut all = vec![0u64; g.words()];
    for v in 0..g.order() {
        set_bit(&mut all, v);
    }
    let mut search = MaxClique {
        g,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.expand(all);
    let mut best = search.best;
    best.sort_unstable();
    best
}
