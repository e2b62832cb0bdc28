//! Benchmark instances shared by the criterion targets.

use matchforce::{corona_product, Graph, GraphFamily};

/// Named instances, smallest first.
pub fn instances() -> Vec<(&'static str, Graph)> {
    let k = |n| GraphFamily::Complete(n).generate().unwrap();
    let corona = |g: &Graph, h: &Graph| corona_product(g, h).unwrap().into_graph();
    vec![
        ("Y", corona(&k(2), &k(2))),
        ("K6", k(6)),
        (
            "K33",
            GraphFamily::CompleteBipartite(3, 3).generate().unwrap(),
        ),
        (
            "P3oK3",
            corona(&GraphFamily::Path(3).generate().unwrap(), &k(3)),
        ),
        ("K2oK4", corona(&k(2), &k(4))),
    ]
}
