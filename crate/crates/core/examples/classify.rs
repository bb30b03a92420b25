//! Classifies a hand-written labeling and shows where each weight comes from.
//!
//! ```text
//! cargo run --example classify
//! ```

use sublabel::graph::Digraph;
use sublabel::labeling::{arc_weight, classify, vertex_weight, TotalLabeling};

fn main() {
    // a directed triangle 0 -> 1 -> 2 -> 0
    let g = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    let l = TotalLabeling::new(vec![1, 2, 3], vec![5, 4, 6]);
    l.validate(&g).unwrap();

    for (a, &(t, h)) in g.arcs().iter().enumerate() {
        println!(
            "arc {t}->{h}: {} + {} - {} = {}",
            l.arc_labels[a],
            l.vertex_labels[h],
            l.vertex_labels[t],
            arc_weight(&g, &l, a).unwrap()
        );
    }
    for v in 0..g.vertex_count() {
        println!("vertex {v}: weight {}", vertex_weight(&g, &l, v).unwrap());
    }
    let c = classify(&g, &l).unwrap();
    println!(
        "arcs: {}  vertices: {}  strong: {}",
        c.arc, c.vertex, c.strong
    );

    let broken = TotalLabeling::new(vec![1, 2, 3], vec![5, 4, 4]);
    println!(
        "with a repeated label: {}",
        broken.validate(&g).unwrap_err()
    );
}
