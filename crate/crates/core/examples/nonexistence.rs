//! Exhaustive certificates that small paths, cycles and stars admit no
//! vertex-magic labeling, and cycles no arc-magic one.
//!
//! ```text
//! cargo run --release --example nonexistence
//! ```

use sublabel::graph::{build_family, Family};
use sublabel::search::{search, verify_iff_cycles, SearchQuery, Target, DEFAULT_CAP};

fn main() {
    let cases = [
        (Family::Path, 2..=4, Target::VERTEX_MAGIC),
        (Family::Cycle, 3..=4, Target::ARC_MAGIC),
        (Family::Cycle, 3..=4, Target::VERTEX_MAGIC),
        (Family::Star, 1..=4, Target::VERTEX_MAGIC),
    ];
    for (family, range, target) in cases {
        for n in range {
            let g = build_family(family, n, None, None).unwrap();
            let size = g.order_plus_size();
            let r = search(&SearchQuery::new(g, target)).unwrap();
            let total: u64 = (1..=size as u64).product();
            println!(
                "{family} n={n} {target}: {} of {total} labelings, {} nodes",
                r.solutions_found, r.nodes_visited
            );
        }
    }
    for n in [3, 4] {
        println!(
            "C{n} arc-magic iff vertex-magic: {}",
            verify_iff_cycles(n, DEFAULT_CAP).unwrap()
        );
    }
}
