//! Subtractive magic and antimagic total labelings of directed graphs.
//!
//! A total labeling assigns `1..=|V|+|A|` bijectively to vertices and arcs.
//! The crate builds the path, cycle, star, wheel, tadpole, friendship and
//! butterfly families ([`graph`]), evaluates and classifies labelings
//! ([`labeling`]), produces explicit labelings for each family
//! ([`constructions`]), and enumerates every labeling of small digraphs to
//! count members of a class ([`search`]). [`document`] holds the JSON
//! interchange format and DOT export used by the `sublabel` binary.

pub mod cli;
pub mod constructions;
pub mod document;
pub mod graph;
pub mod labeling;
pub mod search;

pub use constructions::{construct, LabelingKind};
pub use graph::{build_family, Digraph, Family, Orientation};
pub use labeling::{
    classify, dual, mu_bounds, weight_profile, Classification, TotalLabeling, Verdict,
};
pub use search::{search, SearchMode, SearchQuery, SearchReport, Target};
