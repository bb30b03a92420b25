//! Runs one search with increasing worker counts; the reports agree.
//!
//! ```text
//! cargo run --release --example parallel_search
//! ```

use sublabel::graph::{build_family, Family};
use sublabel::search::{search, SearchQuery, Side, Target};

fn main() {
    let g = build_family(Family::Wheel, 3, None, None).unwrap();
    let q = SearchQuery::new(g, Target::arithmetic(Side::Vertex, None, None));
    let cores = std::thread::available_parallelism().map_or(1, |p| p.get());
    println!("{cores} cores available");
    let mut first = None;
    for workers in [1, 2, 4, 8] {
        let r = search(&q.clone().workers(workers)).unwrap();
        println!(
            "{workers} workers: {} solutions, {} nodes, {:.2?}",
            r.solutions_found, r.nodes_visited, r.elapsed
        );
        let key = (r.solutions_found, r.nodes_visited, r.witnesses);
        match &first {
            None => first = Some(key),
            Some(k) => assert_eq!(*k, key),
        }
    }
}
