//! Naive reference implementations, deliberately sharing no code with the
//! coloring engine: every assignment `V -> {1..k}` is generated as a base-k
//! counter and filtered.

use crate::graph::Graph;

fn is_proper(g: &Graph, colors: &[u32]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Calls `visit` on every assignment with labels in `1..=k`.
fn for_each_assignment(n: usize, k: u32, mut visit: impl FnMut(&[u32]) -> bool) {
    let mut colors = vec![1u32; n];
    loop {
        if !visit(&colors) {
            return;
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if colors[i] < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Smallest `k` admitting a proper assignment with labels `1..=k`.
pub fn naive_chromatic_number(g: &Graph) -> u32 {
    (1..=g.order() as u32)
        .find(|&k| {
            let mut found = false;
            for_each_assignment(g.order(), k, |colors| {
                found = is_proper(g, colors);
                !found
            });
            found
        })
        .expect("n colors always suffice")
}

/// `[cm1, cm2, cm3]` straight from the definitions.
pub fn naive_indices(g: &Graph, colors: &[u32]) -> [u64; 3] {
    let c = |v: usize| u64::from(colors[v]);
    let m1 = (0..g.order()).map(|v| c(v) * c(v)).sum();
    let m2 = g.edges().iter().map(|&(u, v)| c(u) * c(v)).sum();
    let m3 = g.edges().iter().map(|&(u, v)| c(u).abs_diff(c(v))).sum();
    [m1, m2, m3]
}

/// Minimum and maximum of each index over all proper assignments using
/// every label `1..=χ`, plus the number of such assignments.
pub fn naive_extrema(g: &Graph) -> ([u64; 3], [u64; 3], u64) {
    let chi = naive_chromatic_number(g);
    let mut min = [u64::MAX; 3];
    let mut max = [0u64; 3];
    let mut count = 0;
    for_each_assignment(g.order(), chi, |colors| {
        let mut seen = vec![false; chi as usize];
        colors.iter().for_each(|&c| seen[c as usize - 1] = true);
        if seen.iter().all(|&s| s) && is_proper(g, colors) {
            count += 1;
            let values = naive_indices(g, colors);
            for i in 0..3 {
                min[i] = min[i].min(values[i]);
                max[i] = max[i].max(values[i]);
            }
        }
        true
    });
    (min, max, count)
}
