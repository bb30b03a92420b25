//! JSON interchange document and DOT rendering.
//!
//! A [`LabelingDocument`] carries a digraph, optionally its labels, and
//! optionally a classification block. Arrays are index-aligned with the
//! in-memory [`Digraph`] and [`TotalLabeling`]:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "family": { "name": "cycle", "n": 3, "orientation": "forward" },
//!   "vertex_count": 3,
//!   "arcs": [[0, 1], [1, 2], [2, 0]],
//!   "vertex_labels": [1, 2, 3],
//!   "arc_labels": [5, 4, 6]
//! }
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::LabelingKind;
use crate::graph::{Digraph, FamilyDescriptor, GraphError};
use crate::labeling::{
    classify_profile, weight_profile, Classification, LabelingError, TotalLabeling, Verdict,
    WeightProfile,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("document has {0} but not {1}")]
    PartialLabels(&'static str, &'static str),
    #[error("document has no labels")]
    Unlabeled,
    #[error("arcs do not match the {0} family descriptor")]
    FamilyMismatch(String),
}

/// Verdicts plus the weight vectors they were computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationBlock {
    pub arc: Verdict,
    pub vertex: Verdict,
    pub strong: bool,
    pub strong_star: bool,
    pub arc_weights: Vec<i64>,
    pub vertex_weights: Vec<i64>,
}

impl ClassificationBlock {
    pub fn new(c: Classification, p: WeightProfile) -> Self {
        ClassificationBlock {
            arc: c.arc,
            vertex: c.vertex,
            strong: c.strong,
            strong_star: c.strong_star,
            arc_weights: p.arc_weights,
            vertex_weights: p.vertex_weights,
        }
    }

    pub fn classification(&self) -> Classification {
        Classification {
            arc: self.arc,
            vertex: self.vertex,
            strong: self.strong,
            strong_star: self.strong_star,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyDescriptor>,
    pub vertex_count: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_labels: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc_labels: Option<Vec<u32>>,
    /// The construction that produced the labels, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<LabelingKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LabelingDocument {
    pub fn from_graph(g: &Digraph) -> Self {
        LabelingDocument {
            format_version: FORMAT_VERSION,
            family: g.family().map(|f| f.descriptor()),
            vertex_count: g.vertex_count(),
            arcs: g.arcs().iter().map(|&(t, h)| [t, h]).collect(),
            vertex_labels: None,
            arc_labels: None,
            labeling: None,
            classification: None,
            note: None,
        }
    }

    pub fn from_labeling(g: &Digraph, l: &TotalLabeling) -> Self {
        LabelingDocument {
            vertex_labels: Some(l.vertex_labels.clone()),
            arc_labels: Some(l.arc_labels.clone()),
            ..LabelingDocument::from_graph(g)
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: LabelingDocument = serde_json::from_str(text)?;
        if doc.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version(doc.format_version));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Rebuilds the digraph. When a family descriptor is present the arcs
    /// must match it, and the result carries the family's vertex names.
    pub fn graph(&self) -> Result<Digraph, DocumentError> {
        let arcs: Vec<(usize, usize)> = self.arcs.iter().map(|&[t, h]| (t, h)).collect();
        let g = Digraph::new(self.vertex_count, arcs)?;
        match &self.family {
            None => Ok(g),
            Some(desc) => {
                let tagged = desc.build()?;
                if tagged.vertex_count() != g.vertex_count() || tagged.arcs() != g.arcs() {
                    return Err(DocumentError::FamilyMismatch(desc.name.to_string()));
                }
                Ok(tagged)
            }
        }
    }

    /// The labels, if both vectors are present.
    pub fn total_labeling(&self) -> Result<Option<TotalLabeling>, DocumentError> {
        match (&self.vertex_labels, &self.arc_labels) {
            (Some(v), Some(a)) => Ok(Some(TotalLabeling::new(v.clone(), a.clone()))),
            (None, None) => Ok(None),
            (Some(_), None) => Err(DocumentError::PartialLabels("vertex_labels", "arc_labels")),
            (None, Some(_)) => Err(DocumentError::PartialLabels("arc_labels", "vertex_labels")),
        }
    }

    /// Graph plus validated labeling; errors if unlabeled.
    pub fn labeled(&self) -> Result<(Digraph, TotalLabeling), DocumentError> {
        let g = self.graph()?;
        let l = self.total_labeling()?.ok_or(DocumentError::Unlabeled)?;
        l.validate(&g)?;
        Ok((g, l))
    }

    /// Computes and attaches the classification block.
    pub fn classify(&mut self) -> Result<ClassificationBlock, DocumentError> {
        let (g, l) = self.labeled()?;
        let profile = weight_profile(&g, &l)?;
        let block = ClassificationBlock::new(classify_profile(&profile, &l), profile);
        self.classification = Some(block.clone());
        Ok(block)
    }
}

/// Renders the document as Graphviz DOT.
///
/// Nodes are labeled `v<i>:<λ>` and edges `<λ> (w=<weight>)`; unlabeled
/// documents get bare `v<i>` nodes and unlabeled edges.
pub fn to_dot(doc: &LabelingDocument) -> Result<String, DocumentError> {
    let g = doc.graph()?;
    let labeled = match doc.total_labeling()? {
        Some(l) => {
            l.validate(&g)?;
            let p = weight_profile(&g, &l)?;
            Some((l, p))
        }
        None => None,
    };
    let mut out = String::from("digraph G {\n");
    for v in 0..g.vertex_count() {
        match &labeled {
            Some((l, _)) => writeln!(out, "  v{v} [label=\"v{v}:{}\"];", l.vertex_labels[v]),
            None => writeln!(out, "  v{v} [label=\"v{v}\"];"),
        }
        .unwrap();
    }
    for (i, &(t, h)) in g.arcs().iter().enumerate() {
        match &labeled {
            Some((l, p)) => writeln!(
                out,
                "  v{t} -> v{h} [label=\"{} (w={})\"];",
                l.arc_labels[i], p.arc_weights[i]
            ),
            None => writeln!(out, "  v{t} -> v{h};"),
        }
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// Human-readable classification report, using family names when known.
pub fn render_report(g: &Digraph, l: &TotalLabeling, block: &ClassificationBlock) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(out, "arc verdict:    {}", block.arc).unwrap();
    writeln!(out, "vertex verdict: {}", block.vertex).unwrap();
    writeln!(
        out,
        "strong: {}  strong*: {}",
        yes_no(block.strong),
        yes_no(block.strong_star)
    )
    .unwrap();
    writeln!(out, "arc weights:").unwrap();
    for (i, &(t, h)) in g.arcs().iter().enumerate() {
        writeln!(
            out,
            "  {} ({} -> {}): label {}, weight {}",
            g.arc_name(i),
            g.vertex_name(t),
            g.vertex_name(h),
            l.arc_labels[i],
            block.arc_weights[i]
        )
        .unwrap();
    }
    writeln!(out, "vertex weights:").unwrap();
    for v in 0..g.vertex_count() {
        writeln!(
            out,
            "  {}: label {}, weight {}",
            g.vertex_name(v),
            l.vertex_labels[v],
            block.vertex_weights[v]
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_cycle;
    use crate::graph::{build_family, Family};

    #[test]
    fn dot_for_cycle() {
        let (g, l) = construct_cycle(3).unwrap();
        let doc = LabelingDocument::from_labeling(&g, &l);
        let dot = to_dot(&doc).unwrap();
        assert_eq!(dot.matches("->").count(), 3);
        assert_eq!(dot.matches("[label=\"v").count(), 3);
        assert!(dot.contains("v0 -> v1 [label=\"5 (w=6)\"];"));
        assert!(dot.contains("v0 [label=\"v0:1\"];"));
        assert_eq!(dot, to_dot(&doc).unwrap());
    }

    #[test]
    fn dot_single_vertex() {
        let g = Digraph::new(1, vec![]).unwrap();
        let doc = LabelingDocument::from_labeling(&g, &TotalLabeling::new(vec![1], vec![]));
        assert_eq!(
            to_dot(&doc).unwrap(),
            "digraph G {\n  v0 [label=\"v0:1\"];\n}\n"
        );
    }

    #[test]
    fn json_shape() {
        let (g, l) = construct_cycle(3).unwrap();
        let mut doc = LabelingDocument::from_labeling(&g, &l);
        doc.classify().unwrap();
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(value["format_version"], 1);
        assert_eq!(value["family"]["name"], "cycle");
        assert_eq!(value["arcs"][2], serde_json::json!([2, 0]));
        assert_eq!(value["arc_labels"], serde_json::json!([5, 4, 6]));
        assert_eq!(
            value["classification"]["arc"],
            serde_json::json!({"verdict": "arithmetic", "a": 4, "d": 1})
        );
        assert_eq!(LabelingDocument::parse(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            LabelingDocument::parse("{not json"),
            Err(DocumentError::Json(_))
        ));
        let g = build_family(Family::Path, 3, None, None).unwrap();
        let mut doc =
            LabelingDocument::from_labeling(&g, &TotalLabeling::new(vec![1, 2, 3], vec![6, 5]));
        let err = doc.classify().unwrap_err();
        assert_eq!(err.to_string(), "labels not a bijection onto 1..5");

        doc.format_version = 2;
        assert!(matches!(
            LabelingDocument::parse(&doc.to_json()),
            Err(DocumentError::Version(2))
        ));

        let mut doc = LabelingDocument::from_graph(&g);
        doc.arcs[0] = [1, 0];
        assert!(matches!(doc.graph(), Err(DocumentError::FamilyMismatch(_))));

        let mut doc = LabelingDocument::from_graph(&g);
        doc.vertex_labels = Some(vec![1, 2, 3]);
        assert!(matches!(
            doc.total_labeling(),
            Err(DocumentError::PartialLabels(..))
        ));
    }

    #[test]
    fn report_uses_family_names() {
        let (g, l) = construct_cycle(3).unwrap();
        let mut doc = LabelingDocument::from_labeling(&g, &l);
        let block = doc.classify().unwrap();
        let text = render_report(&g, &l, &block);
        assert!(
            text.contains("a_1 (v_1 -> v_2): label 5, weight 6"),
            "{text}"
        );
        assert!(text.contains("arc verdict:    Arithmetic(a=4, d=1)"));
    }
}
