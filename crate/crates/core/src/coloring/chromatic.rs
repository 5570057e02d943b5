use super::Coloring;
use crate::graph::Graph;

/// Vertex indices sorted by descending degree, ties by index.
fn by_degree(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).len()), v));
    order
}

/// A maximal clique grown greedily from every start vertex; the largest one
/// found is a lower bound for χ.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let degree_order = by_degree(g);
    let mut best = vec![degree_order[0]];
    for &start in &degree_order {
        if g.neighbors(start).len() < best.len() {
            break;
        }
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = degree_order
            .iter()
            .copied()
            .filter(|&w| g.has_edge(start, w))
            .collect();
        while let Some(&next) = candidates.first() {
            clique.push(next);
            candidates.retain(|&w| w != next && g.has_edge(next, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// First-fit coloring in descending-degree order; an upper bound for χ.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.order();
    let mut colors = vec![0u32; n];
    let mut taken = Vec::new();
    for v in by_degree(g) {
        taken.clear();
        taken.resize(g.neighbors(v).len() + 2, false);
        for &w in g.neighbors(v) {
            let c = colors[w] as usize;
            if c < taken.len() {
                taken[c] = true;
            }
        }
        colors[v] = (1..taken.len())
            .find(|&c| !taken[c])
            .expect("degree + 1 colors suffice") as u32;
    }
    normalize(colors)
}

/// Relabels colors in order of first appearance so labels are exactly 1..=ℓ.
fn normalize(colors: Vec<u32>) -> Coloring {
    let mut map = std::collections::HashMap::new();
    let relabeled: Vec<u32> = colors
        .iter()
        .map(|&c| {
            let next = map.len() as u32 + 1;
            *map.entry(c).or_insert(next)
        })
        .collect();
    let palette = map.len() as u32;
    Coloring::from_parts_unchecked(relabeled, palette)
}

/// Backtracking k-colorability test. The clique is placed first and every
/// vertex may only open the next unused color, which fixes the labels of the
/// clique and removes color-permutation symmetry.
fn k_coloring(g: &Graph, k: u32, clique: &[usize]) -> Option<Vec<u32>> {
    let n = g.order();
    let mut order: Vec<usize> = clique.to_vec();
    let in_clique: Vec<bool> = {
        let mut flags = vec![false; n];
        clique.iter().for_each(|&v| flags[v] = true);
        flags
    };
    order.extend(by_degree(g).into_iter().filter(|&v| !in_clique[v]));

    let mut colors = vec![0u32; n];
    // max_open[i]: highest color used by order[..i].
    let mut max_open = vec![0u32; n + 1];
    let mut i = 0usize;
    loop {
        if i == n {
            return Some(colors);
        }
        let v = order[i];
        let limit = k.min(max_open[i] + 1);
        let start = colors[v] + 1;
        colors[v] = 0;
        let found = (start..=limit).find(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c));
        match found {
            Some(c) => {
                colors[v] = c;
                max_open[i + 1] = max_open[i].max(c);
                i += 1;
            }
            None => {
                if i == 0 {
                    return None;
                }
                i -= 1;
            }
        }
    }
}

/// Exact chromatic number χ(G).
pub fn chromatic_number(g: &Graph) -> u32 {
    chromatic_coloring(g).palette_size()
}

/// A proper coloring with exactly χ(G) colors, found by searching upward
/// from the greedy clique bound to one below the greedy coloring bound.
pub fn chromatic_coloring(g: &Graph) -> Coloring {
    let clique = greedy_clique(g);
    let upper = greedy_coloring(g);
    let lower = clique.len() as u32;
    for k in lower..upper.palette_size() {
        if let Some(colors) = k_coloring(g, k, &clique) {
            return normalize(colors);
        }
    }
    upper
}

/// Whether `g` admits a proper coloring with at most `k` colors.
pub fn is_k_colorable(g: &Graph, k: u32) -> bool {
    let clique = greedy_clique(g);
    k as usize >= clique.len() && k_coloring(g, k, &clique).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;
    use crate::graph::{generate, FamilySpec};

    fn family(text: &str) -> Graph {
        generate(&text.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&family("complete:4")), 4);
        assert_eq!(chromatic_number(&family("cycle:5")), 3);
        assert_eq!(chromatic_number(&family("path:3")), 2);
        assert_eq!(chromatic_number(&family("path:1")), 1);
        assert_eq!(chromatic_number(&family("cycle:6")), 2);
        assert_eq!(
            chromatic_number(&family("complete-multipartite:1,2,3,3")),
            4
        );
        assert_eq!(chromatic_number(&Graph::empty(4).unwrap()), 1);
    }

    #[test]
    fn petersen_graph_is_three_chromatic() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        let c = chromatic_coloring(&g);
        assert_eq!(c.palette_size(), 3);
        assert_eq!(is_proper(&g, &c), Ok(true));
        assert!(!is_k_colorable(&g, 2));
        assert!(is_k_colorable(&g, 3));
    }

    #[test]
    fn bounds_bracket_the_exact_value() {
        let g = family("thorn(cycle:5;1)");
        let chi = chromatic_number(&g);
        assert!(greedy_clique(&g).len() as u32 <= chi);
        assert!(chi <= greedy_coloring(&g).palette_size());
        assert_eq!(chi, 3);
    }
}
