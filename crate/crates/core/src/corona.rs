//! Corona product `G ∘ H` with its labelled edge partition.
//!
//! Vertex layout: spine vertex `g_i` is `i` (0-based), and vertex `j` of the
//! `i`-th copy of `H` is `n(G) + i·n(H) + j`. Edges are laid out as all of
//! `E(G)`, then the edges of each copy of `H` copy by copy, then the join
//! edges `g_i h_j^i` copy by copy in `j` order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which cell of `E_G ∪ E_H ∪ E_{G,H}` an edge lies in. Copy indices are
/// 0-based; `Display` prints them 1-based (`EH(1)` is the first copy).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgePart {
    Spine,
    Copy(usize),
    Join(usize),
}

impl fmt::Display for EdgePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgePart::Spine => f.write_str("EG"),
            EdgePart::Copy(i) => write!(f, "EH({})", i + 1),
            EdgePart::Join(i) => write!(f, "EGH({})", i + 1),
        }
    }
}

/// Edge-index lists of the three partition cells; this is also the JSON
/// sidecar schema written next to a corona edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaPartition {
    #[serde(rename = "EG")]
    pub spine: Vec<usize>,
    #[serde(rename = "EH")]
    pub copies: Vec<Vec<usize>>,
    #[serde(rename = "EGH")]
    pub joins: Vec<Vec<usize>>,
}

impl CoronaPartition {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("partition sidecar: {e}")))
    }
}

#[derive(Clone, Debug)]
pub struct CoronaGraph {
    graph: Graph,
    g_order: usize,
    h_order: usize,
    g_size: usize,
    h_size: usize,
    partition: CoronaPartition,
}

/// Builds `G ∘ H`. `G` must have at least one vertex; `H` may be edgeless.
pub fn corona_product(g: &Graph, h: &Graph) -> Result<CoronaGraph> {
    let ng = g.n();
    let nh = h.n();
    if ng == 0 {
        return Err(Error::InvalidArgument(
            "first corona factor needs at least one vertex".into(),
        ));
    }
    let copy_vertex = |i: usize, j: usize| ng + i * nh + j;

    let mut edges = Vec::with_capacity(g.m() + ng * (h.m() + nh));
    edges.extend_from_slice(g.edges());
    let spine: Vec<usize> = (0..g.m()).collect();

    let mut copies = Vec::with_capacity(ng);
    for i in 0..ng {
        let start = edges.len();
        edges.extend(
            h.edges()
                .iter()
                .map(|&(u, v)| (copy_vertex(i, u), copy_vertex(i, v))),
        );
        copies.push((start..edges.len()).collect());
    }

    let mut joins = Vec::with_capacity(ng);
    for i in 0..ng {
        let start = edges.len();
        edges.extend((0..nh).map(|j| (i, copy_vertex(i, j))));
        joins.push((start..edges.len()).collect());
    }

    let graph = Graph::new(ng * (1 + nh), edges)?;
    Ok(CoronaGraph {
        graph,
        g_order: ng,
        h_order: nh,
        g_size: g.m(),
        h_size: h.m(),
        partition: CoronaPartition {
            spine,
            copies,
            joins,
        },
    })
}

impl CoronaGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// `n(G)`.
    pub fn spine_order(&self) -> usize {
        self.g_order
    }

    /// `n(H)`.
    pub fn copy_order(&self) -> usize {
        self.h_order
    }

    pub fn spine_vertices(&self) -> std::ops::Range<usize> {
        0..self.g_order
    }

    /// Vertices of the `i`-th copy `H_i` (0-based `i`).
    pub fn copy_vertices(&self, i: usize) -> std::ops::Range<usize> {
        let start = self.g_order + i * self.h_order;
        start..start + self.h_order
    }

    pub fn partition(&self) -> &CoronaPartition {
        &self.partition
    }

    pub fn part_of_edge(&self, e: usize) -> Result<EdgePart> {
        self.graph.check_edge(e)?;
        let per_copy_h = self.h_size;
        if e < self.g_size {
            return Ok(EdgePart::Spine);
        }
        let e = e - self.g_size;
        let copy_block = self.g_order * per_copy_h;
        if e < copy_block {
            return Ok(EdgePart::Copy(e / per_copy_h));
        }
        Ok(EdgePart::Join((e - copy_block) / self.h_order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn k(n: usize) -> Graph {
        GraphFamily::Complete(n).generate().unwrap()
    }

    fn normalized(g: &Graph) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        e.sort_unstable();
        e
    }

    #[test]
    fn graph_y() {
        let y = corona_product(&k(2), &k(2)).unwrap();
        assert_eq!(y.graph().n(), 6);
        assert_eq!(y.graph().m(), 7);
        assert_eq!(y.graph().edge(0), (0, 1));
        assert_eq!(y.part_of_edge(0).unwrap(), EdgePart::Spine);
        assert_eq!(y.part_of_edge(1).unwrap(), EdgePart::Copy(0));
        assert_eq!(y.part_of_edge(1).unwrap().to_string(), "EH(1)");
        assert_eq!(y.part_of_edge(6).unwrap(), EdgePart::Join(1));
        assert_eq!(y.part_of_edge(6).unwrap().to_string(), "EGH(2)");
        assert!(matches!(
            y.part_of_edge(7),
            Err(Error::EdgeOutOfRange { .. })
        ));
        assert_eq!(
            y.partition().to_json(),
            r#"{"EG":[0],"EH":[[1],[2]],"EGH":[[3,4],[5,6]]}"#
        );
    }

    #[test]
    fn k2_corona_k1_is_p4() {
        let c = corona_product(&k(2), &k(1)).unwrap();
        let g = c.graph();
        assert_eq!((g.n(), g.m()), (4, 3));
        let mut degrees: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2]);
        assert_eq!(g.components().len(), 1);
    }

    #[test]
    fn k1_corona_k3_is_k4() {
        // layout leaves K1∘K3 with exactly the vertex set of K4, so a
        // relabelling-free edge-set comparison suffices
        let c = corona_product(&k(1), &k(3)).unwrap();
        assert_eq!(normalized(c.graph()), normalized(&k(4)));
    }

    #[test]
    fn first_factor_must_be_nonempty() {
        assert!(corona_product(&Graph::empty(0), &k(2)).is_err());
    }

    #[test]
    fn order_size_partition_and_join_degrees() {
        let fams = |v: &[GraphFamily]| v.iter().map(|f| f.generate().unwrap()).collect::<Vec<_>>();
        let gs = fams(&[
            GraphFamily::Complete(1),
            GraphFamily::Complete(2),
            GraphFamily::Path(3),
            GraphFamily::Complete(3),
            GraphFamily::Cycle(4),
        ]);
        let hs = fams(&[
            GraphFamily::Complete(1),
            GraphFamily::Complete(2),
            GraphFamily::Complete(3),
            GraphFamily::Path(3),
        ]);
        for g in &gs {
            for h in &hs {
                let c = corona_product(g, h).unwrap();
                let cg = c.graph();
                assert_eq!(cg.n(), g.n() * (1 + h.n()));
                assert_eq!(cg.m(), g.m() + g.n() * h.m() + g.n() * h.n());

                let p = c.partition();
                let mut all: Vec<usize> = p.spine.clone();
                p.copies.iter().chain(&p.joins).for_each(|c| all.extend(c));
                all.sort_unstable();
                assert_eq!(all, (0..cg.m()).collect::<Vec<_>>());

                for i in 0..g.n() {
                    assert_eq!(p.joins[i].len(), h.n());
                    for &e in &p.joins[i] {
                        let (a, b) = cg.edge(e);
                        assert!(a == i || b == i);
                        assert_eq!(c.part_of_edge(e).unwrap(), EdgePart::Join(i));
                    }
                    for &e in &p.copies[i] {
                        assert_eq!(c.part_of_edge(e).unwrap(), EdgePart::Copy(i));
                    }
                    assert_eq!(cg.degree(i), g.degree(i) + h.n());
                    let verts: Vec<usize> = c.copy_vertices(i).collect();
                    assert_eq!(cg.induced_subgraph(&verts), *h);
                }
                for &e in &p.spine {
                    assert_eq!(c.part_of_edge(e).unwrap(), EdgePart::Spine);
                }
            }
        }
    }

    #[test]
    fn partition_json_roundtrip() {
        let c = corona_product(&k(3), &GraphFamily::Path(3).generate().unwrap()).unwrap();
        let text = c.partition().to_json();
        assert_eq!(&CoronaPartition::from_json(&text).unwrap(), c.partition());
        assert!(CoronaPartition::from_json("{}").is_err());
    }
}
