//! Closed-form bounds for corona products and a harness that checks them
//! against exact values.
//!
//! Every gap is signed so that a non-negative value means the bound holds:
//! `bound − exact` for upper bounds and `exact − bound` for lower bounds.

use std::fmt::Write as _;

use serde::Serialize;

use crate::corona::corona_product;
use crate::error::{Error, Result};
use crate::forcing::{self, SearchLimits};
use crate::graph::{ComponentShape, Graph, GraphFamily};
use crate::matchings;

/// `ν(G∘H)`: `ν(G) + n(G)ν(H)` when `H` has a perfect matching, otherwise
/// `n(G) + n(G)ν(H)`.
pub fn corona_matching_number(nu_g: usize, n_g: usize, nu_h: usize, h_has_perfect: bool) -> usize {
    if h_has_perfect {
        nu_g + n_g * nu_h
    } else {
        n_g + n_g * nu_h
    }
}

/// `|E(G∘H)| − ν(G∘H)`, an upper bound on `φ_gm(G∘H)`.
pub fn corona_phi_upper_complement(m_gh: usize, nu_corona: usize) -> usize {
    m_gh - nu_corona
}

/// `φ_gm(G) + n(G)φ_gm(H) + n(G)n(H)`.
pub fn corona_phi_upper_sum(phi_g: usize, n_g: usize, phi_h: usize, n_h: usize) -> usize {
    phi_g + n_g * phi_h + n_g * n_h
}

/// `φ_gm(G) + n(G)φ_gm(H) + n(G)n(H)/2`, valid when `H` is randomly
/// matchable (which forces `n(H)` even).
pub fn corona_phi_lower_randomly(
    phi_g: usize,
    n_g: usize,
    phi_h: usize,
    n_h: usize,
    h_randomly_matchable: bool,
) -> Result<usize> {
    if !h_randomly_matchable || !n_h.is_multiple_of(2) {
        return Err(Error::NotRandomlyMatchable);
    }
    Ok(phi_g + n_g * phi_h + n_g * n_h / 2)
}

/// Lower bounds for `G∘K_{2k}` and `G∘K_{k,k}`:
/// `φ_gm(G) + n(G)(2k² − 3k + 2)` and `φ_gm(G) + n(G)(k² − k + 1)`.
pub fn corollary_lower_bounds(phi_g: usize, n_g: usize, k: usize) -> Result<(usize, usize)> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "corollary needs k >= 2, got {k}"
        )));
    }
    Ok((
        phi_g + n_g * (2 * k * k - 3 * k + 2),
        phi_g + n_g * (k * k - k + 1),
    ))
}

/// `φ_gm(K_{2k}) = (2k − 2)²/2`.
pub fn phi_complete_even(k: usize) -> usize {
    let a = 2 * k.max(1) - 2;
    a * a / 2
}

/// `φ_gm(K_{k,k}) = (k − 1)²`.
pub fn phi_balanced_bipartite(k: usize) -> usize {
    let a = k.saturating_sub(1);
    a * a
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// `3^{n+1} F_{n+2}`, the closed form for the number of maximal matchings
/// of a path corona with `K_3`. Which path `n` counts (edges or vertices)
/// is left to the caller.
pub fn path_corona_k3_psi_formula(n: usize) -> u128 {
    3u128.pow(n as u32 + 1) * fibonacci(n + 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorData {
    pub n_g: usize,
    pub n_h: usize,
    pub m_g: usize,
    pub m_h: usize,
    pub nu_g: usize,
    pub nu_h: usize,
    pub phi_g: usize,
    pub phi_h: usize,
    pub h_has_perfect: bool,
    /// Definitional verdict; gates the randomly-matchable lower bound.
    pub h_randomly_matchable: bool,
    /// Shape-based verdict (components `K_{2k}` / `K_{k,k}`).
    pub h_randomly_matchable_structural: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicted {
    pub m_corona: usize,
    pub nu_corona: usize,
    pub upper_complement: usize,
    pub upper_sum: usize,
    pub lower_randomly: Option<usize>,
    /// Corollary value when `H` is a single `K_{2k}` or `K_{k,k}`, `k >= 2`.
    pub corollary: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactValues {
    pub nu: usize,
    pub psi: usize,
    /// Absent when the search hit its node limit.
    pub phi: Option<usize>,
    pub phi_set: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub nu: Option<bool>,
    pub upper_complement: Option<bool>,
    pub upper_sum: Option<bool>,
    pub lower_randomly: Option<bool>,
    /// Bound-vs-bound check, always available: the lower bound does not
    /// exceed either upper bound.
    pub consistent: bool,
    pub corollary: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Gaps {
    pub nu: Option<i64>,
    pub upper_complement: Option<i64>,
    pub upper_sum: Option<i64>,
    pub lower_randomly: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub instance: FactorData,
    pub predicted: Predicted,
    pub exact: Option<ExactValues>,
    pub verdicts: Verdicts,
    pub gaps: Gaps,
    pub notes: Vec<String>,
}

impl BoundsReport {
    /// No verdict that could be computed failed.
    pub fn all_pass(&self) -> bool {
        let v = &self.verdicts;
        v.consistent
            && [
                v.nu,
                v.upper_complement,
                v.upper_sum,
                v.lower_randomly,
                v.corollary,
            ]
            .iter()
            .all(|x| x.unwrap_or(true))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn single_shape(h: &Graph) -> Option<ComponentShape> {
    match h.recognize_structure().as_slice() {
        [shape] => Some(*shape),
        _ => None,
    }
}

fn exact_phi(g: &Graph, limits: SearchLimits, what: &str) -> Result<forcing::ForcingResult> {
    let r = forcing::phi_exact(g, limits)?;
    if !r.optimal {
        return Err(Error::InvalidArgument(format!(
            "node limit reached while computing φ_gm of {what}"
        )));
    }
    Ok(r)
}

/// Builds `G∘H`, computes exact factor and product values and evaluates
/// every applicable bound.
///
/// Factor values are required. If the product exceeds the enumeration
/// budget or search limits, `exact` is `None`, a note says why, and only
/// the bound-vs-bound consistency verdict is populated.
pub fn verify_bounds(g: &Graph, h: &Graph, limits: SearchLimits) -> Result<BoundsReport> {
    let sg = matchings::summarize(g, limits.budget)?;
    let sh = matchings::summarize(h, limits.budget)?;
    let phi_g = exact_phi(g, limits, "G")?.size;
    let phi_h = exact_phi(h, limits, "H")?.size;
    let rm = matchings::is_randomly_matchable(h, limits.budget)?;

    let (n_g, n_h) = (g.n(), h.n());
    let instance = FactorData {
        n_g,
        n_h,
        m_g: g.m(),
        m_h: h.m(),
        nu_g: sg.nu,
        nu_h: sh.nu,
        phi_g,
        phi_h,
        h_has_perfect: sh.has_perfect,
        h_randomly_matchable: rm.definitional,
        h_randomly_matchable_structural: rm.structural,
    };

    let mut notes = Vec::new();
    let m_corona = g.m() + n_g * h.m() + n_g * n_h;
    let nu_corona = corona_matching_number(sg.nu, n_g, sh.nu, sh.has_perfect);
    let lower_randomly = corona_phi_lower_randomly(phi_g, n_g, phi_h, n_h, rm.definitional).ok();

    let corollary = match (lower_randomly, single_shape(h)) {
        (Some(_), Some(ComponentShape::CompleteEven)) if n_h >= 4 => {
            notes.push(format!(
                "corollary (first form) evaluated for H = K_{n_h}, i.e. K_{{2k}} with k = {}",
                n_h / 2
            ));
            Some(corollary_lower_bounds(phi_g, n_g, n_h / 2)?.0)
        }
        (Some(_), Some(ComponentShape::BalancedCompleteBipartite)) if n_h >= 4 => {
            let k = n_h / 2;
            notes.push(format!(
                "corollary (second form) evaluated for H = K_{{{k},{k}}}"
            ));
            Some(corollary_lower_bounds(phi_g, n_g, k)?.1)
        }
        _ => None,
    };

    let predicted = Predicted {
        m_corona,
        nu_corona,
        upper_complement: corona_phi_upper_complement(m_corona, nu_corona),
        upper_sum: corona_phi_upper_sum(phi_g, n_g, phi_h, n_h),
        lower_randomly,
        corollary,
    };

    let mut verdicts = Verdicts {
        consistent: lower_randomly
            .is_none_or(|lo| lo <= predicted.upper_complement.min(predicted.upper_sum)),
        corollary: corollary.map(|c| Some(c) == lower_randomly),
        ..Verdicts::default()
    };
    let mut gaps = Gaps::default();

    let product = corona_product(g, h)?.into_graph();
    let exact = match exact_product(&product, limits) {
        Ok(ex) => {
            verdicts.nu = Some(ex.nu == nu_corona);
            gaps.nu = Some(ex.nu as i64 - nu_corona as i64);
            if let Some(phi) = ex.phi {
                let phi = phi as i64;
                let up_c = predicted.upper_complement as i64 - phi;
                let up_s = predicted.upper_sum as i64 - phi;
                verdicts.upper_complement = Some(up_c >= 0);
                verdicts.upper_sum = Some(up_s >= 0);
                gaps.upper_complement = Some(up_c);
                gaps.upper_sum = Some(up_s);
                if let Some(lo) = lower_randomly {
                    let gap = phi - lo as i64;
                    verdicts.lower_randomly = Some(gap >= 0);
                    gaps.lower_randomly = Some(gap);
                }
            } else {
                notes.push("node limit reached: exact φ_gm(G∘H) unavailable".into());
            }
            Some(ex)
        }
        Err(e @ (Error::BudgetExceeded { .. } | Error::TooManyEdges { .. })) => {
            notes.push(format!("exact values of G∘H unavailable: {e}"));
            None
        }
        Err(e) => return Err(e),
    };

    Ok(BoundsReport {
        instance,
        predicted,
        exact,
        verdicts,
        gaps,
        notes,
    })
}

fn exact_product(product: &Graph, limits: SearchLimits) -> Result<ExactValues> {
    let summary = matchings::summarize(product, limits.budget)?;
    let r = forcing::phi_exact(product, limits)?;
    Ok(ExactValues {
        nu: summary.nu,
        psi: summary.psi,
        phi: r.optimal.then_some(r.size),
        phi_set: r.optimal.then_some(r.set),
    })
}

/// One evaluated factor pair of a sweep.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub g: GraphFamily,
    pub h: GraphFamily,
    pub report: BoundsReport,
}

/// Runs [`verify_bounds`] on every ordered pair of `families`.
pub fn sweep(families: &[GraphFamily], limits: SearchLimits) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(families.len() * families.len());
    for &gf in families {
        let g = gf.generate()?;
        for &hf in families {
            let h = hf.generate()?;
            rows.push(SweepRow {
                g: gf,
                h: hf,
                report: verify_bounds(&g, &h, limits)?,
            });
        }
    }
    Ok(rows)
}

fn family_params(f: &GraphFamily) -> String {
    match *f {
        GraphFamily::CompleteBipartite(a, b) => format!("{a};{b}"),
        GraphFamily::Path(n)
        | GraphFamily::Cycle(n)
        | GraphFamily::Complete(n)
        | GraphFamily::Star(n)
        | GraphFamily::Empty(n) => n.to_string(),
    }
}

pub const SWEEP_CSV_HEADER: &str = "g_family,g_params,h_family,h_params,n_g,n_h,nu_g,nu_h,phi_g,phi_h,h_has_perfect,h_randomly_matchable,\
nu_corona,upper_complement,upper_sum,lower_randomly,corollary,\
exact_nu,exact_psi,exact_phi,\
gap_nu,gap_upper_complement,gap_upper_sum,gap_lower_randomly,all_pass";

/// CSV with [`SWEEP_CSV_HEADER`] and one line per pair; unavailable values
/// are empty cells.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    fn opt<T: ToString>(v: Option<T>) -> String {
        v.map(|x| x.to_string()).unwrap_or_default()
    }
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let r = &row.report;
        let i = &r.instance;
        let p = &r.predicted;
        let ex = r.exact.as_ref();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            row.g.name(),
            family_params(&row.g),
            row.h.name(),
            family_params(&row.h),
            i.n_g,
            i.n_h,
            i.nu_g,
            i.nu_h,
            i.phi_g,
            i.phi_h,
            i.h_has_perfect,
            i.h_randomly_matchable,
            p.nu_corona,
            p.upper_complement,
            p.upper_sum,
            opt(p.lower_randomly),
            opt(p.corollary),
            opt(ex.map(|e| e.nu)),
            opt(ex.map(|e| e.psi)),
            opt(ex.and_then(|e| e.phi)),
            opt(r.gaps.nu),
            opt(r.gaps.upper_complement),
            opt(r.gaps.upper_sum),
            opt(r.gaps.lower_randomly),
            r.all_pass(),
        )
        .unwrap();
    }
    out
}
