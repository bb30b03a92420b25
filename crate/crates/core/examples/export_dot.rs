//! Writes a construction as a labeling document and as Graphviz DOT.
//!
//! ```text
//! cargo run --example export_dot | dot -Tsvg > tadpole.svg
//! ```

use sublabel::constructions::{construct, LabelingKind};
use sublabel::document::{to_dot, LabelingDocument};
use sublabel::graph::Family;

fn main() {
    let (g, l) = construct(Family::Tadpole, 4, Some(2), LabelingKind::Saal).unwrap();
    let mut doc = LabelingDocument::from_labeling(&g, &l);
    doc.labeling = Some(LabelingKind::Saal);
    doc.classify().unwrap();
    eprintln!("{}", doc.to_json());
    print!("{}", to_dot(&doc).unwrap());
}
