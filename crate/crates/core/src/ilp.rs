//! 0/1 integer program for the global forcing number and its LP text
//! export.
//!
//! Variables `x1..xm` (1-based, `x{i+1}` is edge `i`), objective
//! `min x1 + … + xm`, and one covering constraint per pair of maximal
//! matchings: the sum of the variables of the edges on which the two
//! matchings differ is at least 1.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::forcing::IncidenceMatrix;
use crate::graph::Graph;

/// Values within this distance of 0 or 1 are accepted as that integer.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    /// First row pair (1-based, `i < j`) inducing this support.
    pub label: (usize, usize),
    /// Edge indices (0-based) on which the rows differ, increasing.
    pub support: Vec<usize>,
    /// Every row pair (1-based) with this support, in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
}

impl Constraint {
    pub fn name(&self) -> String {
        format!("c{}_{}", self.label.0, self.label.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlpModel {
    num_vars: usize,
    constraints: Vec<Constraint>,
}

impl IlpModel {
    /// One constraint per row pair of `d`; with `dedup`, pairs that differ on
    /// exactly the same edges share a single constraint.
    pub fn from_matrix(d: &IncidenceMatrix, dedup: bool) -> Self {
        let rows = d.rows();
        let mut constraints: Vec<Constraint> = Vec::new();
        let mut by_support: HashMap<Vec<usize>, usize> = HashMap::new();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let support = rows[i].symmetric_difference(&rows[j]).to_vec();
                let pair = (i + 1, j + 1);
                if dedup {
                    if let Some(&k) = by_support.get(&support) {
                        constraints[k].pairs.push(pair);
                        continue;
                    }
                    by_support.insert(support.clone(), constraints.len());
                }
                constraints.push(Constraint {
                    label: pair,
                    support,
                    pairs: vec![pair],
                });
            }
        }
        IlpModel {
            num_vars: d.m(),
            constraints,
        }
    }

    pub fn build(g: &Graph, budget: usize, dedup: bool) -> Result<Self> {
        Ok(Self::from_matrix(
            &IncidenceMatrix::from_graph(g, budget)?,
            dedup,
        ))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Whether the 0/1 assignment (indexed by edge) meets every constraint.
    pub fn is_feasible(&self, x: &[bool]) -> bool {
        assert_eq!(x.len(), self.num_vars);
        self.constraints
            .iter()
            .all(|c| c.support.iter().any(|&e| x[e]))
    }

    /// LP text: `Minimize`, ` obj: …`, `Subject To`, one ` c<i>_<j>: … >= 1`
    /// line per constraint, `Binary`, one ` x<k>` line per variable, `End`.
    pub fn to_lp(&self) -> String {
        let vars = |idx: &mut dyn Iterator<Item = usize>| {
            idx.map(|e| format!("x{}", e + 1))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let mut out = String::from("Minimize\n");
        if self.num_vars == 0 {
            out.push_str(" obj: 0\n");
        } else {
            writeln!(out, " obj: {}", vars(&mut (0..self.num_vars))).unwrap();
        }
        out.push_str("Subject To\n");
        for c in &self.constraints {
            writeln!(
                out,
                " {}: {} >= 1",
                c.name(),
                vars(&mut c.support.iter().copied())
            )
            .unwrap();
        }
        out.push_str("Binary\n");
        for k in 1..=self.num_vars {
            writeln!(out, " x{k}").unwrap();
        }
        out.push_str("End\n");
        out
    }
}

pub fn build_model(g: &Graph, budget: usize) -> Result<IlpModel> {
    IlpModel::build(g, budget, true)
}

pub fn export_lp(model: &IlpModel) -> String {
    model.to_lp()
}

/// Solver solution read back as an edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImportedSolution {
    /// Edge indices with `x = 1`, increasing.
    pub edges: Vec<usize>,
    pub objective: usize,
}

/// Reads `x<i> <value>` lines; unlisted variables are 0. Blank lines and
/// `#` comments are skipped. The result still has to be checked with
/// [`crate::forcing::is_global_forcing_set`].
pub fn import_solution(text: &str, g: &Graph) -> Result<ImportedSolution> {
    let m = g.m();
    let mut x = vec![false; m];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let (name, value) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(n), Some(v), None) => (n, v),
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `x<i> <value>`, found `{content}`"),
                })
            }
        };
        let var = name
            .strip_prefix('x')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| (1..=m).contains(&k))
            .ok_or_else(|| Error::UnknownVariable {
                line,
                name: name.to_string(),
            })?;
        let value: f64 = value.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("invalid value `{value}`"),
        })?;
        let rounded = value.round();
        if (value - rounded).abs() > INTEGRALITY_TOLERANCE || !(rounded == 0.0 || rounded == 1.0) {
            return Err(Error::NonBinaryValue {
                line,
                name: name.to_string(),
                value,
            });
        }
        x[var - 1] = rounded == 1.0;
    }
    let edges: Vec<usize> = (0..m).filter(|&e| x[e]).collect();
    Ok(ImportedSolution {
        objective: edges.len(),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::corona_product;
    use crate::graph::GraphFamily;
    use crate::matchings::DEFAULT_BUDGET;

    fn k(n: usize) -> Graph {
        GraphFamily::Complete(n).generate().unwrap()
    }

    fn subject_to_lines(lp: &str) -> Vec<&str> {
        let start = lp.find("Subject To\n").unwrap() + "Subject To\n".len();
        let end = lp.find("Binary\n").unwrap();
        lp[start..end].lines().collect()
    }

    #[test]
    fn triangle_model() {
        let model = build_model(&k(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(model.num_vars(), 3);
        let supports: Vec<_> = model
            .constraints()
            .iter()
            .map(|c| c.support.clone())
            .collect();
        assert_eq!(supports, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(
            export_lp(&model),
            "Minimize\n obj: x1 + x2 + x3\nSubject To\n c1_2: x1 + x2 >= 1\n c1_3: x1 + x3 >= 1\n c2_3: x2 + x3 >= 1\nBinary\n x1\n x2\n x3\nEnd\n"
        );
    }

    #[test]
    fn single_matching_has_no_constraints() {
        let model = build_model(&k(2), DEFAULT_BUDGET).unwrap();
        assert_eq!((model.num_vars(), model.constraints().len()), (1, 0));
        let lp = export_lp(&model);
        assert!(subject_to_lines(&lp).is_empty());
        assert!(lp.contains("Binary\n x1\nEnd\n"));
    }

    #[test]
    fn path_model() {
        let model = build_model(&GraphFamily::Path(4).generate().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(model.constraints().len(), 1);
        assert_eq!(model.constraints()[0].support, vec![0, 1, 2]);
        assert!(export_lp(&model).contains(" c1_2: x1 + x2 + x3 >= 1\n"));
    }

    #[test]
    fn graph_y_objective() {
        let y = corona_product(&k(2), &k(2)).unwrap().into_graph();
        let lp = export_lp(&build_model(&y, DEFAULT_BUDGET).unwrap());
        let obj = lp.lines().nth(1).unwrap();
        assert_eq!(obj.matches('x').count(), 7);
        assert_eq!(obj, " obj: x1 + x2 + x3 + x4 + x5 + x6 + x7");
    }

    #[test]
    fn edgeless_objective_is_zero() {
        let lp = export_lp(&build_model(&Graph::empty(2), DEFAULT_BUDGET).unwrap());
        assert_eq!(lp, "Minimize\n obj: 0\nSubject To\nBinary\nEnd\n");
    }

    #[test]
    fn dedup_merges_equal_supports() {
        let g = GraphFamily::CompleteBipartite(2, 3).generate().unwrap();
        let d = IncidenceMatrix::from_graph(&g, DEFAULT_BUDGET).unwrap();
        let full = IlpModel::from_matrix(&d, false);
        let deduped = IlpModel::from_matrix(&d, true);
        let t = d.t();
        assert_eq!(full.constraints().len(), t * (t - 1) / 2);
        assert!(deduped.constraints().len() <= full.constraints().len());
        let covered: usize = deduped.constraints().iter().map(|c| c.pairs.len()).sum();
        assert_eq!(covered, t * (t - 1) / 2);
        let mut supports: Vec<_> = deduped.constraints().iter().map(|c| &c.support).collect();
        supports.sort();
        supports.dedup();
        assert_eq!(supports.len(), deduped.constraints().len());
    }

    #[test]
    fn import_examples() {
        let g = k(3);
        let s = import_solution("x1 1\nx2 1\nx3 0\n", &g).unwrap();
        assert_eq!((s.edges, s.objective), (vec![0, 1], 2));
        let s = import_solution("", &k(2)).unwrap();
        assert_eq!((s.edges.len(), s.objective), (0, 0));
        let s = import_solution("x1 0.9999999\n", &g).unwrap();
        assert_eq!(s.edges, vec![0]);
        let s = import_solution("# solver output\n\nx3 1e-9\nx2 1.0\n", &g).unwrap();
        assert_eq!(s.edges, vec![1]);
    }

    #[test]
    fn import_errors() {
        let g = k(3);
        assert!(matches!(
            import_solution("x4 1\n", &g),
            Err(Error::UnknownVariable { line: 1, .. })
        ));
        assert!(matches!(
            import_solution("x1 1\ny2 0\n", &g),
            Err(Error::UnknownVariable { line: 2, .. })
        ));
        assert!(matches!(
            import_solution("x0 1\n", &g),
            Err(Error::UnknownVariable { .. })
        ));
        assert!(matches!(
            import_solution("x1 0.5\n", &g),
            Err(Error::NonBinaryValue { .. })
        ));
        assert!(matches!(
            import_solution("x1 2\n", &g),
            Err(Error::NonBinaryValue { .. })
        ));
        assert!(matches!(
            import_solution("x1\n", &g),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            import_solution("x1 abc\n", &g),
            Err(Error::Parse { .. })
        ));
    }
}
