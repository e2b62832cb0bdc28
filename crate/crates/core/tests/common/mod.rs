//! Brute-force oracles shared by the integration suites. They only read the
//! edge list and never call into the enumeration or search code.

#![allow(dead_code)]

use std::collections::HashSet;

use matchforce::{corona_product, Graph, GraphFamily};

/// Every maximal matching by testing all `2^m` edge subsets, as sorted
/// edge-index lists in lexicographic order.
pub fn brute_force_maximal_matchings(g: &Graph) -> Vec<Vec<usize>> {
    let m = g.m();
    assert!(m <= 20, "brute force over 2^{m} subsets");
    let edges = g.edges();
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        let chosen: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let mut covered = vec![false; g.n()];
        let mut ok = true;
        for &e in &chosen {
            let (u, v) = edges[e];
            if covered[u] || covered[v] {
                ok = false;
                break;
            }
            covered[u] = true;
            covered[v] = true;
        }
        if ok && edges.iter().all(|&(u, v)| covered[u] || covered[v]) {
            out.push(chosen);
        }
    }
    out.sort();
    out
}

/// Whether projecting every matching onto `set` keeps them distinct.
pub fn separates(matchings: &[Vec<usize>], set: &[usize]) -> bool {
    let mut seen = HashSet::new();
    matchings.iter().all(|mm| {
        let proj: Vec<usize> = mm.iter().copied().filter(|e| set.contains(e)).collect();
        seen.insert(proj)
    })
}

/// Smallest forcing set size by trying subsets in order of size, with the
/// lexicographically first set of that size.
pub fn brute_force_phi(g: &Graph) -> (usize, Vec<usize>) {
    let mats = brute_force_maximal_matchings(g);
    let m = g.m();
    for k in 0..=m {
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..1 << m {
            if mask.count_ones() as usize != k {
                continue;
            }
            let set: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            if separates(&mats, &set) && best.as_ref().is_none_or(|b| set < *b) {
                best = Some(set);
            }
        }
        if let Some(set) = best {
            return (k, set);
        }
    }
    unreachable!("the full edge set always separates distinct matchings")
}

pub fn gen(f: GraphFamily) -> Graph {
    f.generate().unwrap()
}

pub fn k(n: usize) -> Graph {
    gen(GraphFamily::Complete(n))
}

pub fn corona(g: &Graph, h: &Graph) -> Graph {
    corona_product(g, h).unwrap().into_graph()
}

/// Generator-family graphs and small coronas with at most `max_m` edges.
pub fn small_graphs(max_m: usize) -> Vec<(String, Graph)> {
    let mut fams = Vec::new();
    for n in 1..=9 {
        fams.push(GraphFamily::Path(n));
        fams.push(GraphFamily::Complete(n));
        fams.push(GraphFamily::Star(n));
        fams.push(GraphFamily::Empty(n));
        if n >= 3 {
            fams.push(GraphFamily::Cycle(n));
        }
        for a in 1..=n {
            fams.push(GraphFamily::CompleteBipartite(a, n));
        }
    }
    let mut out: Vec<(String, Graph)> = fams
        .into_iter()
        .map(|f| (f.to_string(), gen(f)))
        .filter(|(_, g)| g.m() <= max_m)
        .collect();

    let factors = [
        GraphFamily::Complete(1),
        GraphFamily::Complete(2),
        GraphFamily::Complete(3),
        GraphFamily::Path(3),
        GraphFamily::Path(4),
        GraphFamily::Empty(2),
        GraphFamily::Star(2),
        GraphFamily::Cycle(4),
    ];
    for gf in factors {
        for hf in factors {
            let c = corona(&gen(gf), &gen(hf));
            if c.m() <= max_m {
                out.push((format!("{gf} o {hf}"), c));
            }
        }
    }
    out
}
