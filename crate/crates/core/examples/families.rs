//! Builds one member of every family and prints its shape.
//!
//! ```text
//! cargo run --example families
//! ```

use sublabel::graph::{build_family, Family};
use sublabel::labeling::longest_circuit;

fn main() {
    for family in Family::ALL {
        let n = family.min_n() + 1;
        let t = (family == Family::Tadpole).then_some(2);
        let g = build_family(family, n, t, None).unwrap();
        let arcs: Vec<String> = (0..g.arc_count())
            .map(|a| {
                let (tail, head) = g.arcs()[a];
                format!(
                    "{}={}->{}",
                    g.arc_name(a),
                    g.vertex_name(tail),
                    g.vertex_name(head)
                )
            })
            .collect();
        println!(
            "{family} n={n}{}: |V|={} |A|={} longest circuit {}",
            t.map(|t| format!(" t={t}")).unwrap_or_default(),
            g.vertex_count(),
            g.arc_count(),
            longest_circuit(&g),
        );
        println!("  {}", arcs.join(" "));
    }
}
