//! Turns a gracefully labeled tree into a strong arc-magic digraph.
//!
//! ```text
//! cargo run --example graceful
//! ```

use sublabel::constructions::graceful_to_strong_saml;
use sublabel::labeling::{classify, weight_profile};

fn main() {
    // a caterpillar on 6 vertices: spine 0-1-2, leaves hanging off it
    let edges = [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5)];
    let phi = [1, 4, 2, 5, 6, 3];
    let (g, l) = graceful_to_strong_saml(6, &edges, &phi).unwrap();
    for (a, &(t, h)) in g.arcs().iter().enumerate() {
        println!(
            "{t}->{h}  phi {}->{}  label {}",
            phi[t], phi[h], l.arc_labels[a]
        );
    }
    let c = classify(&g, &l).unwrap();
    println!(
        "arc weights {:?}",
        weight_profile(&g, &l).unwrap().arc_weights
    );
    println!("{} strong={}", c.arc, c.strong);

    let not_graceful = graceful_to_strong_saml(4, &[(0, 1), (1, 2), (2, 3)], &[1, 2, 3, 4]);
    println!("identity on P4: {}", not_graceful.unwrap_err());
}
