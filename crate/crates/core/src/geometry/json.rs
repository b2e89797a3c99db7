//! Drawing documents: the JSON form of a drawing plus its certificate.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{
    count_crossings, count_lengths, count_slopes, is_convex_drawing, render_svg, validate_drawing, Drawing,
    GeometryError, Point, ValidityReport,
};
use crate::constructions::Certificate;
use crate::graph::Graph;
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::Rational;

/// Serialized drawing. Exact coordinates are `"p/q"` strings, numeric ones
/// are JSON numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrawingDocument {
    pub mode: String,
    pub vertices: Vec<[Value; 2]>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub bends: BTreeMap<usize, [Value; 2]>,
    #[serde(default)]
    pub slope_class: BTreeMap<usize, i64>,
    #[serde(default)]
    pub length_class: BTreeMap<usize, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// A drawing in either coordinate mode.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyDrawing {
    Exact(Drawing<Rational>),
    Numeric(Drawing<f64>),
}

macro_rules! each {
    ($self:expr, $d:ident => $body:expr) => {
        match $self {
            AnyDrawing::Exact($d) => $body,
            AnyDrawing::Numeric($d) => $body,
        }
    };
}

impl From<Drawing<Rational>> for AnyDrawing {
    fn from(d: Drawing<Rational>) -> Self {
        AnyDrawing::Exact(d)
    }
}

impl From<Drawing<f64>> for AnyDrawing {
    fn from(d: Drawing<f64>) -> Self {
        AnyDrawing::Numeric(d)
    }
}

impl AnyDrawing {
    pub fn is_exact(&self) -> bool {
        matches!(self, AnyDrawing::Exact(_))
    }

    pub fn n(&self) -> usize {
        each!(self, d => d.n())
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        each!(self, d => &d.edges)
    }

    pub fn has_bends(&self) -> bool {
        each!(self, d => !d.bends.is_empty())
    }

    /// The graph drawn straight-line by [`Drawing::subdivision`].
    pub fn subdivision_graph(&self) -> Graph {
        let (n, edges) = each!(self, d => { let s = d.subdivision(); (s.n(), s.edges) });
        Graph::from_edges(n, edges).expect("subdivision of a simple drawing is simple")
    }

    pub fn count_slopes(&self) -> Result<usize, GeometryError> {
        each!(self, d => count_slopes(d))
    }

    pub fn count_lengths(&self) -> Result<usize, GeometryError> {
        each!(self, d => count_lengths(d))
    }

    pub fn validate(&self, g: &Graph) -> ValidityReport {
        each!(self, d => validate_drawing(g, d))
    }

    pub fn count_crossings(&self, g: &Graph) -> Result<usize, GeometryError> {
        each!(self, d => count_crossings(g, d))
    }

    pub fn is_convex(&self, g: &Graph) -> bool {
        each!(self, d => is_convex_drawing(g, d))
    }

    pub fn to_svg(&self) -> String {
        each!(self, d => render_svg(d))
    }

    pub fn relabel(&self, perm: &[usize]) -> AnyDrawing {
        match self {
            AnyDrawing::Exact(d) => AnyDrawing::Exact(d.relabel(perm)),
            AnyDrawing::Numeric(d) => AnyDrawing::Numeric(d.relabel(perm)),
        }
    }

    /// Floating copy of the coordinates.
    pub fn to_numeric(&self) -> Drawing<f64> {
        match self {
            AnyDrawing::Exact(d) => d.cast(),
            AnyDrawing::Numeric(d) => d.clone(),
        }
    }

    pub fn to_document(&self, certificate: Option<Certificate>) -> DrawingDocument {
        match self {
            AnyDrawing::Exact(d) => document(d, "exact", |v| Value::String(format_rational(v)), certificate),
            AnyDrawing::Numeric(d) => document(d, "numeric", |v| Value::from(*v), certificate),
        }
    }

    pub fn from_document(doc: &DrawingDocument) -> Result<AnyDrawing, GeometryError> {
        match doc.mode.as_str() {
            "exact" => Ok(AnyDrawing::Exact(drawing(doc, |v| match v {
                Value::String(s) => parse_rational(s),
                Value::Number(n) => n.as_i64().map(Rational::from_int),
                _ => None,
            })?)),
            "numeric" => Ok(AnyDrawing::Numeric(drawing(doc, Value::as_f64)?)),
            m => Err(GeometryError::Document(format!("unknown mode {m:?}"))),
        }
    }
}

fn document<S: Scalar>(
    d: &Drawing<S>,
    mode: &str,
    coord: impl Fn(&S) -> Value,
    certificate: Option<Certificate>,
) -> DrawingDocument {
    let pair = |p: &Point<S>| [coord(&p.x), coord(&p.y)];
    DrawingDocument {
        mode: mode.into(),
        vertices: d.vertices.iter().map(pair).collect(),
        edges: d.edges.iter().map(|&(u, v)| [u, v]).collect(),
        bends: d.bends.iter().map(|(&e, p)| (e, pair(p))).collect(),
        slope_class: d.slope_class.clone(),
        length_class: d.length_class.clone(),
        certificate,
    }
}

fn drawing<S: Scalar>(doc: &DrawingDocument, coord: impl Fn(&Value) -> Option<S>) -> Result<Drawing<S>, GeometryError> {
    let point = |p: &[Value; 2]| -> Result<Point<S>, GeometryError> {
        let c = |v: &Value| coord(v).ok_or_else(|| GeometryError::Document(format!("bad {} coordinate {v}", doc.mode)));
        Ok(Point::new(c(&p[0])?, c(&p[1])?))
    };
    let vertices = doc.vertices.iter().map(point).collect::<Result<Vec<_>, _>>()?;
    let n = vertices.len();
    if let Some(&[u, v]) = doc.edges.iter().find(|&&[u, v]| u >= n || v >= n) {
        return Err(GeometryError::Document(format!("edge ({u}, {v}) out of range")));
    }
    let mut d = Drawing::new(vertices, doc.edges.iter().map(|&[u, v]| (u, v)).collect());
    let m = d.edges.len();
    let keys = doc.bends.keys().chain(doc.slope_class.keys()).chain(doc.length_class.keys());
    if let Some(e) = keys.copied().find(|&e| e >= m) {
        return Err(GeometryError::Document(format!("edge index {e} out of range")));
    }
    for (&e, p) in &doc.bends {
        d.bends.insert(e, point(p)?);
    }
    d.slope_class = doc.slope_class.clone();
    d.length_class = doc.length_class.clone();
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_round_trip() {
        let mut d: Drawing<Rational> = Drawing::new(
            vec![Point::new(Rational::ratio(1, 3), Rational::from_int(0)), Point::from_ints(2, -1)],
            vec![(0, 1)],
        );
        d.bends.insert(0, Point::new(Rational::ratio(-5, 2), Rational::from_int(7)));
        let any = AnyDrawing::Exact(d);
        let doc = any.to_document(None);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains("\"1/3\"") && text.contains("\"0/1\"") && text.contains("\"-5/2\""));
        let back: DrawingDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(AnyDrawing::from_document(&back).unwrap(), any);
    }

    #[test]
    fn numeric_round_trip() {
        let mut d = Drawing::new(vec![Point::new(0.1, 0.7), Point::new(-3.25, 1e-7)], vec![(0, 1)]);
        d.slope_class.insert(0, 4);
        d.length_class.insert(0, 0);
        let any = AnyDrawing::Numeric(d);
        let text = serde_json::to_string(&any.to_document(None)).unwrap();
        let back: DrawingDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(AnyDrawing::from_document(&back).unwrap(), any);
    }

    #[test]
    fn malformed_documents() {
        let bad = [
            r#"{"mode":"exact","vertices":[["1/0","0"]],"edges":[]}"#,
            r#"{"mode":"weird","vertices":[],"edges":[]}"#,
            r#"{"mode":"numeric","vertices":[[0,0]],"edges":[[0,1]]}"#,
            r#"{"mode":"numeric","vertices":[[0,0],[1,0]],"edges":[[0,1]],"slope_class":{"3":0}}"#,
        ];
        for text in bad {
            let doc: DrawingDocument = serde_json::from_str(text).unwrap();
            assert!(AnyDrawing::from_document(&doc).is_err(), "{text}");
        }
    }
}
