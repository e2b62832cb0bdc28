//! Global forcing sets for maximal matchings.
//!
//! A set `S` of edges is forcing when the maximal matchings of the graph
//! have pairwise distinct intersections with `S`. In terms of the
//! maximal-matchings-versus-edges incidence matrix this is a minimum test
//! cover: pick the fewest columns such that all rows stay distinct. The
//! exact solver refines the partition of rows into classes that agree on
//! the chosen columns instead of materialising all row pairs.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matchings::{self, DEFAULT_BUDGET};

/// Default cap on branch-and-bound nodes.
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;
/// Default cap on the edge count accepted by the exact search.
pub const DEFAULT_MAX_EDGES: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximal matching enumeration budget.
    pub budget: usize,
    pub node_limit: u64,
    pub max_edges: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            budget: DEFAULT_BUDGET,
            node_limit: DEFAULT_NODE_LIMIT,
            max_edges: DEFAULT_MAX_EDGES,
        }
    }
}

/// `t × m` 0/1 matrix, row `i` is the `i`-th maximal matching in
/// enumeration order and column `j` is edge `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    m: usize,
    rows: Vec<BitSet>,
}

impl IncidenceMatrix {
    pub fn from_graph(g: &Graph, budget: usize) -> Result<Self> {
        let m = g.m();
        let mut rows = Vec::new();
        matchings::for_each_maximal_matching(g, budget, |edges| {
            rows.push(BitSet::from_indices(m, edges.iter().copied()))
        })?;
        Ok(IncidenceMatrix { m, rows })
    }

    /// Number of rows, `Ψ(G)`.
    pub fn t(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns (edges).
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row].contains(col)
    }

    /// Column `j` as the set of rows with a 1 in it.
    pub fn columns(&self) -> Vec<BitSet> {
        let mut cols = vec![BitSet::new(self.t()); self.m];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter() {
                cols[j].insert(i);
            }
        }
        cols
    }

    /// True iff the row projections onto `cols` are pairwise distinct.
    pub fn distinguishes(&self, cols: &[usize]) -> Result<bool> {
        for &c in cols {
            if c >= self.m {
                return Err(Error::EdgeOutOfRange {
                    index: c,
                    m: self.m,
                });
            }
        }
        let mask = BitSet::from_indices(self.m, cols.iter().copied());
        let mut seen = HashSet::with_capacity(self.t());
        Ok(self.rows.iter().all(|r| seen.insert(r.intersection(&mask))))
    }

    /// Rows as 0/1 strings, e.g. `["101", "010"]`.
    pub fn to_strings(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.to_string()).collect()
    }
}

/// A forcing set together with how it was obtained.
///
/// Serializes to `{"phi","set","optimal","lower","greedy","nodes"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingResult {
    #[serde(rename = "phi")]
    pub size: usize,
    pub set: Vec<usize>,
    /// Set only when the exact search ran to completion.
    pub optimal: bool,
    /// `⌈log₂ Ψ⌉`.
    #[serde(rename = "lower")]
    pub lower_bound_used: usize,
    /// Size of the greedy set.
    #[serde(rename = "greedy")]
    pub upper_bound_used: usize,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
}

impl ForcingResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

pub(crate) fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

pub fn incidence_matrix(g: &Graph, budget: usize) -> Result<IncidenceMatrix> {
    IncidenceMatrix::from_graph(g, budget)
}

pub fn is_global_forcing_set(g: &Graph, set: &[usize], budget: usize) -> Result<bool> {
    for &e in set {
        g.check_edge(e)?;
    }
    IncidenceMatrix::from_graph(g, budget)?.distinguishes(set)
}

/// `⌈log₂ Ψ(G)⌉`: `k` edges can separate at most `2^k` matchings.
pub fn log2_lower_bound(g: &Graph, budget: usize) -> Result<usize> {
    Ok(ceil_log2(matchings::count_maximal_matchings(g, budget)?))
}

/// `m − ν`: the complement of a maximum matching is forcing.
pub fn complement_upper_bound(g: &Graph, budget: usize) -> Result<usize> {
    Ok(g.m() - matchings::matching_number(g, budget)?)
}

/// Partition of row ids into classes of size >= 2 that agree on all columns
/// chosen so far. Singleton classes are resolved and dropped.
type Classes = Vec<Vec<u32>>;

fn refine(classes: &[Vec<u32>], column: &BitSet) -> (Classes, bool) {
    let mut out = Vec::with_capacity(classes.len() + 1);
    let mut split = false;
    for class in classes {
        let (ones, zeros): (Vec<u32>, Vec<u32>) =
            class.iter().partition(|&&r| column.contains(r as usize));
        if !ones.is_empty() && !zeros.is_empty() {
            split = true;
        }
        if ones.len() > 1 {
            out.push(ones);
        }
        if zeros.len() > 1 {
            out.push(zeros);
        }
    }
    (out, split)
}

fn initial_classes(t: usize) -> Classes {
    if t > 1 {
        vec![(0..t as u32).collect()]
    } else {
        Vec::new()
    }
}

/// Unordered row pairs of `classes` that `column` separates.
fn pairs_split(classes: &[Vec<u32>], column: &BitSet) -> u64 {
    classes
        .iter()
        .map(|class| {
            let ones = class
                .iter()
                .filter(|&&r| column.contains(r as usize))
                .count() as u64;
            ones * (class.len() as u64 - ones)
        })
        .sum()
}

/// Greedy forcing set: repeatedly take the column separating the most
/// still-unresolved row pairs, lowest index on ties.
pub fn phi_greedy_matrix(d: &IncidenceMatrix) -> ForcingResult {
    let columns = d.columns();
    let mut classes = initial_classes(d.t());
    let mut set = Vec::new();
    while !classes.is_empty() {
        let mut best = (0u64, usize::MAX);
        for (j, col) in columns.iter().enumerate() {
            let s = pairs_split(&classes, col);
            if s > best.0 {
                best = (s, j);
            }
        }
        // distinct rows always differ somewhere
        assert!(best.0 > 0, "incidence matrix has duplicate rows");
        set.push(best.1);
        classes = refine(&classes, &columns[best.1]).0;
    }
    set.sort_unstable();
    ForcingResult {
        size: set.len(),
        upper_bound_used: set.len(),
        set,
        optimal: false,
        lower_bound_used: ceil_log2(d.t()),
        nodes_explored: 0,
    }
}

pub fn phi_greedy(g: &Graph, budget: usize) -> Result<ForcingResult> {
    Ok(phi_greedy_matrix(&IncidenceMatrix::from_graph(g, budget)?))
}

struct Search<'a> {
    columns: &'a [BitSet],
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
    /// Largest size still worth finding.
    limit: usize,
    nodes: u64,
    node_limit: u64,
    aborted: bool,
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize, classes: &[Vec<u32>]) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.aborted = true;
            return;
        }
        if classes.is_empty() {
            // Include-first order reaches the lexicographically smallest set
            // of each size first, so only strictly smaller sets matter now.
            self.limit = self.chosen.len().saturating_sub(1);
            self.best = Some(self.chosen.clone());
            return;
        }
        let largest = classes.iter().map(Vec::len).max().unwrap_or(0);
        let needed = ceil_log2(largest);
        let remaining = self.columns.len() - pos;
        if self.chosen.len() + needed > self.limit || needed > remaining || remaining == 0 {
            return;
        }

        let (refined, split) = refine(classes, &self.columns[pos]);
        // A column that separates nothing can be dropped from any forcing
        // set containing it, so it never appears in a minimum one.
        if split {
            self.chosen.push(pos);
            self.dfs(pos + 1, &refined);
            self.chosen.pop();
        }
        self.dfs(pos + 1, classes);
    }
}

/// Exact `φ_gm` from an incidence matrix; see [`phi_exact`].
pub fn phi_exact_matrix(d: &IncidenceMatrix, node_limit: u64) -> ForcingResult {
    let greedy = phi_greedy_matrix(d);
    let lower = ceil_log2(d.t());
    if greedy.size == 0 {
        return ForcingResult {
            optimal: true,
            ..greedy
        };
    }
    let columns = d.columns();
    let mut search = Search {
        columns: &columns,
        chosen: Vec::new(),
        best: None,
        limit: greedy.size,
        nodes: 0,
        node_limit,
        aborted: false,
    };
    search.dfs(0, &initial_classes(d.t()));

    let nodes = search.nodes;
    let (set, optimal) = match (search.best, search.aborted) {
        (Some(set), aborted) => (set, !aborted),
        (None, true) => (greedy.set.clone(), false),
        (None, false) => unreachable!("exhaustive search missed the greedy set"),
    };
    ForcingResult {
        size: set.len(),
        set,
        optimal,
        lower_bound_used: lower,
        upper_bound_used: greedy.size,
        nodes_explored: nodes,
    }
}

/// `φ_gm(G)` with the lexicographically smallest minimum forcing set.
///
/// Depth-first include/exclude search over edges in index order, seeded by
/// the greedy set and pruned with the `⌈log₂ c⌉` bound on the largest
/// unresolved class `c`. When the node limit is hit the best set found so
/// far is returned with `optimal = false`.
pub fn phi_exact(g: &Graph, limits: SearchLimits) -> Result<ForcingResult> {
    if g.m() > limits.max_edges {
        return Err(Error::TooManyEdges {
            m: g.m(),
            max_edges: limits.max_edges,
        });
    }
    let d = IncidenceMatrix::from_graph(g, limits.budget)?;
    Ok(phi_exact_matrix(&d, limits.node_limit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::corona_product;
    use crate::graph::GraphFamily;

    fn gen(f: GraphFamily) -> Graph {
        f.generate().unwrap()
    }

    fn k(n: usize) -> Graph {
        gen(GraphFamily::Complete(n))
    }

    fn y() -> Graph {
        corona_product(&k(2), &k(2)).unwrap().into_graph()
    }

    fn exact(g: &Graph) -> ForcingResult {
        phi_exact(g, SearchLimits::default()).unwrap()
    }

    #[test]
    fn ceil_log2_values() {
        let got: Vec<usize> = [0, 1, 2, 3, 4, 5, 8, 9, 10, 1024, 1025]
            .iter()
            .map(|&x| ceil_log2(x))
            .collect();
        assert_eq!(got, vec![0, 0, 1, 2, 2, 3, 3, 4, 4, 10, 11]);
    }

    #[test]
    fn incidence_matrices() {
        let d = incidence_matrix(&k(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(d.to_strings(), vec!["100", "010", "001"]);
        let d = incidence_matrix(&gen(GraphFamily::Path(4)), DEFAULT_BUDGET).unwrap();
        assert_eq!(d.to_strings(), vec!["101", "010"]);
        let d = incidence_matrix(&k(2), DEFAULT_BUDGET).unwrap();
        assert_eq!(d.to_strings(), vec!["1"]);
        assert_eq!(d.columns()[0].to_vec(), vec![0]);
    }

    #[test]
    fn forcing_set_verification() {
        let p4 = gen(GraphFamily::Path(4));
        assert!(is_global_forcing_set(&k(3), &[0, 1], DEFAULT_BUDGET).unwrap());
        assert!(!is_global_forcing_set(&k(3), &[0], DEFAULT_BUDGET).unwrap());
        assert!(is_global_forcing_set(&p4, &[0], DEFAULT_BUDGET).unwrap());
        assert!(matches!(
            is_global_forcing_set(&p4, &[3], DEFAULT_BUDGET),
            Err(Error::EdgeOutOfRange { .. })
        ));
    }

    #[test]
    fn bounds_on_small_graphs() {
        assert_eq!(log2_lower_bound(&y(), DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(log2_lower_bound(&k(3), DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(log2_lower_bound(&k(2), DEFAULT_BUDGET).unwrap(), 0);
        assert_eq!(complement_upper_bound(&y(), DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(complement_upper_bound(&k(3), DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(
            complement_upper_bound(&gen(GraphFamily::Path(4)), DEFAULT_BUDGET).unwrap(),
            1
        );
    }

    #[test]
    fn greedy() {
        let r = phi_greedy(&k(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.set, vec![0, 1]);
        assert!(!r.optimal);
        assert!(!is_global_forcing_set(&k(3), &[0], DEFAULT_BUDGET).unwrap());
        assert!(!is_global_forcing_set(&k(3), &[1], DEFAULT_BUDGET).unwrap());
        assert!(!is_global_forcing_set(&k(3), &[2], DEFAULT_BUDGET).unwrap());
        assert_eq!(
            phi_greedy(&gen(GraphFamily::Path(4)), DEFAULT_BUDGET)
                .unwrap()
                .size,
            1
        );
        let r = phi_greedy(&k(2), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.size, r.set.len()), (0, 0));
    }

    #[test]
    fn exact_examples() {
        let r = exact(&k(3));
        assert_eq!((r.size, r.set.clone(), r.optimal), (2, vec![0, 1], true));
        assert_eq!(exact(&y()).size, 4);
        assert_eq!(exact(&k(4)).size, 2);
        let r = exact(&Graph::empty(4));
        assert_eq!((r.size, r.optimal), (0, true));
    }

    #[test]
    fn json_schema() {
        let r = exact(&k(3));
        assert_eq!(
            r.to_json(),
            format!(
                r#"{{"phi":2,"set":[0,1],"optimal":true,"lower":2,"greedy":2,"nodes":{}}}"#,
                r.nodes_explored
            )
        );
    }

    #[test]
    fn too_many_edges() {
        let limits = SearchLimits {
            max_edges: 5,
            ..SearchLimits::default()
        };
        assert!(matches!(
            phi_exact(&k(4), limits),
            Err(Error::TooManyEdges { m: 6, .. })
        ));
    }

    #[test]
    fn node_limit_degrades_to_certified_upper_bound() {
        let g = k(6);
        let r = phi_exact(
            &g,
            SearchLimits {
                node_limit: 5,
                ..SearchLimits::default()
            },
        )
        .unwrap();
        assert!(!r.optimal);
        assert!(is_global_forcing_set(&g, &r.set, DEFAULT_BUDGET).unwrap());
        assert!(r.size >= 8);
    }

    #[test]
    fn superset_of_forcing_set_is_forcing() {
        let g = y();
        let d = incidence_matrix(&g, DEFAULT_BUDGET).unwrap();
        let base = exact(&g).set;
        for extra in 0..g.m() {
            let mut s = base.clone();
            if !s.contains(&extra) {
                s.push(extra);
            }
            assert!(d.distinguishes(&s).unwrap());
        }
    }
}
