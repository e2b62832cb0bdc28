//! Maximal matching enumeration and the quantities derived from it:
//! `Ψ(G)`, `ν(G)`, `s(G)`, perfect matching existence and the
//! randomly-matchable test.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{ComponentShape, Graph};

/// Default cap on the number of maximal matchings enumerated.
pub const DEFAULT_BUDGET: usize = 5_000_000;

/// A matching as a mask over the host graph's edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: BitSet,
    maximal: bool,
    perfect: bool,
}

impl Matching {
    /// Checks `edges` against `g` and records the maximal and perfect flags.
    pub fn new(g: &Graph, edges: &[usize]) -> Result<Self> {
        if !is_matching(g, edges)? {
            return Err(Error::InvalidArgument(format!(
                "edges {edges:?} are not pairwise non-adjacent"
            )));
        }
        let maximal = is_maximal_matching(g, edges)?;
        Ok(Matching {
            edges: BitSet::from_indices(g.m(), edges.iter().copied()),
            maximal,
            perfect: 2 * edges.len() == g.n(),
        })
    }

    pub fn edges(&self) -> &BitSet {
        &self.edges
    }

    /// Member edge indices, increasing.
    pub fn edge_indices(&self) -> Vec<usize> {
        self.edges.to_vec()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    pub fn is_perfect(&self) -> bool {
        self.perfect
    }

    pub fn saturated(&self, g: &Graph) -> BitSet {
        let mut s = BitSet::new(g.n());
        for e in self.edges.iter() {
            let (u, v) = g.edge(e);
            s.insert(u);
            s.insert(v);
        }
        s
    }
}

pub fn is_matching(g: &Graph, edges: &[usize]) -> Result<bool> {
    let mut used = vec![false; g.n()];
    let mut ok = true;
    for &e in edges {
        g.check_edge(e)?;
        let (u, v) = g.edge(e);
        if used[u] || used[v] {
            ok = false;
        }
        used[u] = true;
        used[v] = true;
    }
    Ok(ok)
}

/// True iff `edges` is a matching and every other edge touches a vertex it
/// saturates.
pub fn is_maximal_matching(g: &Graph, edges: &[usize]) -> Result<bool> {
    if !is_matching(g, edges)? {
        return Ok(false);
    }
    let mut saturated = vec![false; g.n()];
    for &e in edges {
        let (u, v) = g.edge(e);
        saturated[u] = true;
        saturated[v] = true;
    }
    Ok(g.edges().iter().all(|&(u, v)| saturated[u] || saturated[v]))
}

struct Enumerator<'a, F> {
    g: &'a Graph,
    /// Largest edge index incident to each vertex, `None` for isolated ones.
    last_edge: Vec<Option<usize>>,
    saturated: Vec<bool>,
    chosen: Vec<usize>,
    /// Excluded edges that were free when skipped and still need an endpoint
    /// saturated by a later edge.
    pending: Vec<usize>,
    budget: usize,
    found: usize,
    visit: F,
}

impl<F: FnMut(&[usize])> Enumerator<'_, F> {
    fn dead(&self, v: usize, pos: usize) -> bool {
        !self.saturated[v] && self.last_edge[v].is_none_or(|l| l < pos)
    }

    fn run(&mut self, pos: usize) -> Result<()> {
        // A pending edge with both endpoints free and no later incident edge
        // can never be blocked, so no maximal matching lies below this node.
        let stuck = self.pending.iter().any(|&e| {
            let (u, v) = self.g.edge(e);
            self.dead(u, pos) && self.dead(v, pos)
        });
        if stuck {
            return Ok(());
        }
        if pos == self.g.m() {
            if self.pending.iter().all(|&e| {
                let (u, v) = self.g.edge(e);
                self.saturated[u] || self.saturated[v]
            }) {
                if self.found == self.budget {
                    return Err(Error::BudgetExceeded {
                        budget: self.budget,
                    });
                }
                self.found += 1;
                (self.visit)(&self.chosen);
            }
            return Ok(());
        }

        let (u, v) = self.g.edge(pos);
        if self.saturated[u] || self.saturated[v] {
            return self.run(pos + 1);
        }

        self.saturated[u] = true;
        self.saturated[v] = true;
        self.chosen.push(pos);
        self.run(pos + 1)?;
        self.chosen.pop();
        self.saturated[u] = false;
        self.saturated[v] = false;

        self.pending.push(pos);
        self.run(pos + 1)?;
        self.pending.pop();
        Ok(())
    }
}

/// Calls `visit` with the sorted edge indices of every maximal matching of
/// `g`, in lexicographic order, and returns how many there were.
///
/// Fails with [`Error::BudgetExceeded`] once more than `budget` matchings
/// exist; the first `budget` have been visited by then.
pub fn for_each_maximal_matching<F: FnMut(&[usize])>(
    g: &Graph,
    budget: usize,
    visit: F,
) -> Result<usize> {
    if budget == 0 {
        return Err(Error::InvalidArgument(
            "enumeration budget must be >= 1".into(),
        ));
    }
    let last_edge = (0..g.n())
        .map(|v| g.incident_edges(v).last().copied())
        .collect();
    let mut en = Enumerator {
        g,
        last_edge,
        saturated: vec![false; g.n()],
        chosen: Vec::new(),
        pending: Vec::new(),
        budget,
        found: 0,
        visit,
    };
    en.run(0)?;
    Ok(en.found)
}

/// All maximal matchings of `g` in lexicographic order of their sorted
/// edge-index sequences.
pub fn enumerate_maximal_matchings(g: &Graph, budget: usize) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    let n = g.n();
    let m = g.m();
    for_each_maximal_matching(g, budget, |edges| {
        out.push(Matching {
            edges: BitSet::from_indices(m, edges.iter().copied()),
            maximal: true,
            perfect: 2 * edges.len() == n,
        })
    })?;
    Ok(out)
}

/// `Ψ(G)`.
pub fn count_maximal_matchings(g: &Graph, budget: usize) -> Result<usize> {
    for_each_maximal_matching(g, budget, |_| {})
}

/// `Ψ`, `ν`, `s` and perfect matching existence from a single enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingSummary {
    pub psi: usize,
    pub nu: usize,
    pub sat: usize,
    pub has_perfect: bool,
}

pub fn summarize(g: &Graph, budget: usize) -> Result<MatchingSummary> {
    let mut nu = 0;
    let mut sat = usize::MAX;
    let psi = for_each_maximal_matching(g, budget, |edges| {
        nu = nu.max(edges.len());
        sat = sat.min(edges.len());
    })?;
    Ok(MatchingSummary {
        psi,
        nu,
        sat,
        has_perfect: 2 * nu == g.n(),
    })
}

/// `ν(G)`: every maximum matching is maximal, so the largest enumerated
/// matching is a maximum one.
pub fn matching_number(g: &Graph, budget: usize) -> Result<usize> {
    summarize(g, budget).map(|s| s.nu)
}

/// `s(G)`, the smallest size of a maximal matching.
pub fn saturation_number(g: &Graph, budget: usize) -> Result<usize> {
    summarize(g, budget).map(|s| s.sat)
}

pub fn has_perfect_matching(g: &Graph, budget: usize) -> Result<bool> {
    summarize(g, budget).map(|s| s.has_perfect)
}

/// Both randomly-matchable verdicts: by definition (every maximal matching
/// is perfect) and by shape (every component is `K_{2k}` or `K_{k,k}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RandomlyMatchable {
    pub definitional: bool,
    pub structural: bool,
}

pub fn is_randomly_matchable(g: &Graph, budget: usize) -> Result<RandomlyMatchable> {
    let n = g.n();
    let mut all_perfect = true;
    for_each_maximal_matching(g, budget, |edges| {
        all_perfect &= 2 * edges.len() == n;
    })?;
    Ok(RandomlyMatchable {
        definitional: all_perfect,
        structural: structurally_randomly_matchable(g),
    })
}

pub fn structurally_randomly_matchable(g: &Graph) -> bool {
    g.recognize_structure()
        .iter()
        .all(|s| *s != ComponentShape::Other)
}
