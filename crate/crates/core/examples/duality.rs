//! The dual of an arc-magic labeling is arc-magic with constant `N + 1 − μ`.
//!
//! ```text
//! cargo run --example duality
//! ```

use sublabel::constructions::{construct, LabelingKind};
use sublabel::graph::Family;
use sublabel::labeling::{classify, dual};

fn main() {
    for (family, n) in [(Family::Path, 5), (Family::Star, 4)] {
        let (g, l) = construct(family, n, None, LabelingKind::Saml).unwrap();
        let d = dual(&g, &l).unwrap();
        println!("{family} n={n}, N={}", g.order_plus_size());
        println!(
            "  labeling {:?} {:?}: {}",
            l.vertex_labels,
            l.arc_labels,
            classify(&g, &l).unwrap().arc
        );
        println!(
            "  dual     {:?} {:?}: {}",
            d.vertex_labels,
            d.arc_labels,
            classify(&g, &d).unwrap().arc
        );
        assert_eq!(dual(&g, &d).unwrap(), l);
    }
}
