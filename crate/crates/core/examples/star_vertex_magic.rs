//! Probes stars for vertex-magic labelings in every orientation.
//!
//! ```text
//! cargo run --release --example star_vertex_magic -- 6
//! ```
//!
//! The optional argument is the largest `n`; sizes above the default cap are
//! searched with the cap raised.

use std::time::Instant;

use sublabel::graph::{build_family, Family};
use sublabel::search::{search, SearchQuery, Target};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("a number"))
        .unwrap_or(4);
    for n in 1..=max_n {
        let start = Instant::now();
        let star = build_family(Family::Star, n, None, None).unwrap();
        let cap = star.order_plus_size();
        let (mut found, mut nodes, mut orientations) = (0, 0, 0);
        for g in star.orientations() {
            let q = SearchQuery::new(g, Target::VERTEX_MAGIC)
                .cap(cap)
                .workers(std::thread::available_parallelism().map_or(1, |p| p.get()));
            let r = search(&q).unwrap();
            found += r.solutions_found;
            nodes += r.nodes_visited;
            orientations += 1;
        }
        println!(
            "S{n}: {found} vertex-magic labelings over {orientations} orientations ({nodes} nodes, {:.2?})",
            start.elapsed()
        );
    }
}
