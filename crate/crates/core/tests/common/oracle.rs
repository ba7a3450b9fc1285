//! Independent reference computations for the property suites.

use cayley_core::graph::Graph;

/// Number of `k`-dimensional subspaces of `F_p^d`:
/// `∏_{i<k} (p^(d-i) - 1) / (p^(i+1) - 1)`.
pub fn gaussian_binomial(p: u64, d: u32, k: u32) -> u64 {
    if k > d {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (p as u128).pow(d - i) - 1;
        den *= (p as u128).pow(i + 1) - 1;
    }
    (num / den) as u64
}

/// Scan of every map `V(x) -> V(y)`, skipping the remaining images of a
/// prefix as soon as it breaks an edge. Calls `visit` on each homomorphism;
/// stops when `visit` returns true.
pub fn scan_homomorphisms(x: &Graph, y: &Graph, mut visit: impl FnMut(&[usize]) -> bool) {
    fn go(
        x: &Graph,
        y: &Graph,
        f: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let u = f.len();
        if u == x.order() {
            return visit(f);
        }
        for image in 0..y.order() {
            let ok = (0..u).all(|w| !x.has_edge(u, w) || y.has_edge(image, f[w]));
            if ok {
                f.push(image);
                if go(x, y, f, visit) {
                    return true;
                }
                f.pop();
            }
        }
        false
    }
    go(x, y, &mut Vec::new(), &mut visit);
}

pub fn image_size(f: &[usize]) -> usize {
    let mut seen: Vec<usize> = f.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Some non-injective endomorphism exists.
pub fn has_non_injective_endomorphism(x: &Graph) -> bool {
    let mut found = false;
    scan_homomorphisms(x, x, |f| {
        found = image_size(f) < f.len();
        found
    });
    found
}

/// Order of the core: the least image size of an endomorphism.
pub fn core_order(x: &Graph) -> usize {
    let mut best = x.order();
    scan_homomorphisms(x, x, |f| {
        best = best.min(image_size(f));
        best == 1
    });
    best
}

/// Proper `k`-colouring exists, by the same scan into `K_k`.
pub fn colourable(x: &Graph, k: usize) -> bool {
    let mut found = false;
    scan_homomorphisms(x, &Graph::complete(k), |_| {
        found = true;
        true
    });
    found
}
