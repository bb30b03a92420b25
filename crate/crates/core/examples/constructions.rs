//! Every explicit construction for a few sizes, with its classification.
//!
//! ```text
//! cargo run --example constructions
//! ```

use sublabel::constructions::{construct, LabelingKind};
use sublabel::graph::Family;
use sublabel::labeling::classify;

fn main() {
    for family in Family::ALL {
        for &kind in LabelingKind::available_for(family) {
            for n in family.min_n()..family.min_n() + 3 {
                let t = (family == Family::Tadpole).then_some(2);
                let (g, l) = construct(family, n, t, kind).unwrap();
                let c = classify(&g, &l).unwrap();
                let mut flags = vec![];
                if c.strong {
                    flags.push("strong");
                }
                if c.strong_star {
                    flags.push("strong*");
                }
                println!(
                    "{family:<10} n={n:<2} {kind:<8} arc {:<22} vertex {:<22} {}",
                    c.arc.to_string(),
                    c.vertex.to_string(),
                    flags.join(" ")
                );
            }
        }
    }
}
