//! Compares the magic-constant bounds with the constants that actually occur.
//!
//! ```text
//! cargo run --release --example mu_bounds
//! ```

use std::collections::BTreeSet;

use sublabel::graph::{build_family, Digraph, Family};
use sublabel::labeling::{classify, mu_bounds, Verdict};
use sublabel::search::{search, SearchMode, SearchQuery, Target};

fn report(name: &str, g: Digraph) {
    let b = mu_bounds(&g);
    let q =
        SearchQuery::new(g.clone(), Target::ARC_MAGIC).mode(SearchMode::CollectUpTo(usize::MAX));
    let r = search(&q).unwrap();
    let seen: BTreeSet<i64> = r
        .witnesses
        .iter()
        .filter_map(|w| match classify(&g, w).unwrap().arc {
            Verdict::Magic { mu } => Some(mu),
            _ => None,
        })
        .collect();
    println!(
        "{name}: s={} bounds [{}, {}], {} arc-magic labelings, constants {seen:?}",
        b.s, b.lower, b.upper, r.solutions_found
    );
}

fn main() {
    report("C3", build_family(Family::Cycle, 3, None, None).unwrap());
    report("C4", build_family(Family::Cycle, 4, None, None).unwrap());
    report(
        "T(3,2)",
        build_family(Family::Tadpole, 3, Some(2), None).unwrap(),
    );
    report("W3", build_family(Family::Wheel, 3, None, None).unwrap());
    report(
        "digon+2",
        Digraph::new(4, vec![(0, 1), (1, 0), (1, 2), (3, 0)]).unwrap(),
    );

    // on a dicycle every arc-magic constant would have to exceed N
    let g = build_family(Family::Cycle, 4, None, None).unwrap();
    let n = g.order_plus_size() as i64;
    let left: Vec<i64> = mu_bounds(&g).integers().filter(|&mu| mu > n).collect();
    println!("C4: integers in bounds above N={n}: {left:?}");
}
