//! JSON and DOT forms. Nodes and coordinates are 1-based in every
//! serialized form.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::crystal::{Component, Report, Tag};
use crate::error::{Error, Result};
use crate::graphs::{Colour, ColouredEdge, ColouredGraph, Hyperplane, Palette};
use crate::quotient::{KernelBasis, RestrictedSystem};
use crate::rational::RationalMatrix;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    palette: String,
    nodes: usize,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum EdgeJson {
    Straight { i: usize, j: usize, colour: String },
    Loop { k: usize, colour: String },
}

fn palette_label(p: Palette) -> &'static str {
    match p {
        Palette::Bichromatic => "bi",
        Palette::Trichromatic => "tri",
    }
}

fn graph_repr(g: &ColouredGraph) -> GraphJson {
    let edges = g
        .edges()
        .into_iter()
        .map(|e| match e {
            ColouredEdge::Straight { i, j, colour } => EdgeJson::Straight {
                i: i + 1,
                j: j + 1,
                colour: colour.label().into(),
            },
            ColouredEdge::Loop { k, colour } => EdgeJson::Loop {
                k: k + 1,
                colour: colour.label().into(),
            },
        })
        .collect();
    GraphJson {
        palette: palette_label(g.palette()).into(),
        nodes: g.n(),
        edges,
    }
}

/// Canonical single-line serialization.
pub fn graph_to_json(g: &ColouredGraph) -> String {
    serde_json::to_string(&graph_repr(g)).expect("graph serialization cannot fail")
}

pub fn graph_to_value(g: &ColouredGraph) -> serde_json::Value {
    serde_json::to_value(graph_repr(g)).expect("graph serialization cannot fail")
}

fn one_based(x: usize, n: usize) -> Result<usize> {
    if x == 0 || x > n {
        Err(Error::NodeOutOfRange { node: x, n })
    } else {
        Ok(x - 1)
    }
}

fn graph_from_repr(r: GraphJson) -> Result<ColouredGraph> {
    let palette = match r.palette.as_str() {
        "bi" => Palette::Bichromatic,
        "tri" => Palette::Trichromatic,
        other => return Err(Error::Parse(format!("unknown palette {other:?}"))),
    };
    let n = r.nodes;
    let mut g = ColouredGraph::empty(n, palette);
    for e in r.edges {
        let edge = match e {
            EdgeJson::Straight { i, j, colour } => {
                let (i, j) = (one_based(i, n)?, one_based(j, n)?);
                if i == j {
                    return Err(Error::DegenerateEdge(i + 1));
                }
                ColouredEdge::straight(i, j, Colour::from_label(&colour)?)
            }
            EdgeJson::Loop { k, colour } => {
                ColouredEdge::looped(one_based(k, n)?, Colour::from_label(&colour)?)
            }
        };
        g.add(edge)?;
    }
    Ok(g)
}

/// Parses the graph JSON form. Input edges may come in any order and with
/// `i > j`; repeated edges collapse.
pub fn graph_from_json(text: &str) -> Result<ColouredGraph> {
    let r: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    graph_from_repr(r)
}

pub fn graph_from_value(v: serde_json::Value) -> Result<ColouredGraph> {
    let r: GraphJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
    graph_from_repr(r)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentJson {
    nodes: Vec<usize>,
    #[serde(rename = "type")]
    kind: String,
    params: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportJson {
    components: Vec<ComponentJson>,
}

fn report_repr<T: Tag>(r: &Report<T>) -> ReportJson {
    ReportJson {
        components: r
            .parts
            .iter()
            .map(|c| ComponentJson {
                nodes: c.nodes.iter().map(|v| v + 1).collect(),
                kind: c.kind.name().into(),
                params: c.kind.params(),
            })
            .collect(),
    }
}

pub fn report_to_value<T: Tag>(r: &Report<T>) -> serde_json::Value {
    serde_json::to_value(report_repr(r)).expect("report serialization cannot fail")
}

pub fn report_to_json<T: Tag>(r: &Report<T>) -> String {
    serde_json::to_string(&report_repr(r)).expect("report serialization cannot fail")
}

/// Parses a report; the node count is the total over all components.
pub fn report_from_json<T: Tag>(text: &str) -> Result<Report<T>> {
    let r: ReportJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    report_from_repr(r)
}

fn report_from_repr<T: Tag>(r: ReportJson) -> Result<Report<T>> {
    let n: usize = r.components.iter().map(|c| c.nodes.len()).sum();
    let mut parts = Vec::new();
    for c in r.components {
        let kind = T::from_parts(&c.kind, &c.params)
            .ok_or_else(|| Error::Parse(format!("unknown component type {} {:?}", c.kind, c.params)))?;
        let nodes = c.nodes.iter().map(|&v| one_based(v, n)).collect::<Result<Vec<_>>>()?;
        parts.push(Component { nodes, kind });
    }
    Ok(Report { n, parts })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KernelJson {
    parts: Vec<Vec<usize>>,
    vectors: Vec<Vec<String>>,
    projection: Vec<Vec<String>>,
}

pub fn kernel_to_json(basis: &KernelBasis, projection: &RationalMatrix) -> String {
    let k = KernelJson {
        parts: basis
            .parts
            .iter()
            .map(|p| p.iter().map(|v| v + 1).collect())
            .collect(),
        vectors: basis.vectors.iter().map(|v| v.to_strings()).collect(),
        projection: projection.to_strings(),
    };
    serde_json::to_string(&k).expect("kernel serialization cannot fail")
}

/// Parses the kernel form back into the basis and the projection matrix.
pub fn kernel_from_json(text: &str) -> Result<(KernelBasis, RationalMatrix)> {
    let k: KernelJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let n = k.projection.len();
    let parse_row = |row: &Vec<String>| -> Result<crate::rational::RationalVector> {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        Ok(row
            .iter()
            .map(|s| crate::rational::parse_rational(s))
            .collect::<Result<Vec<_>>>()?
            .into())
    };
    let vectors = k.vectors.iter().map(parse_row).collect::<Result<Vec<_>>>()?;
    let mut projection = RationalMatrix::zeros(n, n);
    for (i, row) in k.projection.iter().enumerate() {
        let row = parse_row(row)?;
        for j in 0..n {
            projection[(i, j)] = row[j];
        }
    }
    let parts = k
        .parts
        .iter()
        .map(|p| p.iter().map(|&v| one_based(v, n)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok((KernelBasis { n, parts, vectors }, projection))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RestrictedJson {
    dimension: usize,
    covectors: Vec<Vec<i64>>,
}

pub fn restricted_to_json(r: &RestrictedSystem) -> String {
    let j = RestrictedJson {
        dimension: r.dimension,
        covectors: r.covectors.iter().cloned().collect(),
    };
    serde_json::to_string(&j).expect("restricted-system serialization cannot fail")
}

pub fn restricted_from_json(text: &str) -> Result<RestrictedSystem> {
    let j: RestrictedJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if let Some(c) = j.covectors.iter().find(|c| c.len() != j.dimension) {
        return Err(Error::DimensionMismatch {
            expected: j.dimension,
            found: c.len(),
        });
    }
    Ok(RestrictedSystem {
        dimension: j.dimension,
        covectors: j.covectors.into_iter().collect(),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementJson {
    hyperplanes: Vec<Vec<i64>>,
    report: ReportJson,
}

pub fn arrangement_to_json<T: Tag>(h: &BTreeSet<Hyperplane>, report: &Report<T>) -> String {
    let j = ArrangementJson {
        hyperplanes: h.iter().map(|hp| hp.normal().to_vec()).collect(),
        report: report_repr(report),
    };
    serde_json::to_string(&j).expect("arrangement serialization cannot fail")
}

pub fn arrangement_from_json<T: Tag>(text: &str) -> Result<(BTreeSet<Hyperplane>, Report<T>)> {
    let j: ArrangementJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let h = j
        .hyperplanes
        .iter()
        .map(|v| Hyperplane::new(v))
        .collect::<Result<BTreeSet<_>>>()?;
    Ok((h, report_from_repr(j.report)?))
}

fn dot_colour(c: Colour) -> &'static str {
    match c {
        Colour::Red => "red",
        Colour::Green => "green",
        Colour::Blue => "blue",
    }
}

/// Graphviz form. Edge order follows the canonical edge order.
pub fn graph_to_dot(g: &ColouredGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 1..=g.n() {
        let _ = writeln!(out, "  {v} [label=\"{v}\"];");
    }
    for e in g.edges() {
        let _ = match e {
            ColouredEdge::Straight { i, j, colour } => {
                writeln!(out, "  {} -- {} [color={}];", i + 1, j + 1, dot_colour(colour))
            }
            ColouredEdge::Loop { k, colour } => {
                writeln!(out, "  {} -- {} [color={}];", k + 1, k + 1, dot_colour(colour))
            }
        };
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{classify_components, ComponentType};
    use crate::models::*;
    use crate::quotient::{kernel_basis, orthogonal_projection};

    #[test]
    fn canonical_graph_form() {
        let mut g = ColouredGraph::bichromatic(2);
        g.add(ColouredEdge::straight(1, 0, Colour::Red)).unwrap();
        g.add(ColouredEdge::straight(0, 1, Colour::Green)).unwrap();
        g.add(ColouredEdge::looped(1, Colour::Green)).unwrap();
        g.add(ColouredEdge::looped(1, Colour::Red)).unwrap();
        assert_eq!(
            graph_to_json(&g),
            concat!(
                r#"{"palette":"bi","nodes":2,"edges":["#,
                r#"{"kind":"loop","k":2,"colour":"G"},{"kind":"loop","k":2,"colour":"R"},"#,
                r#"{"kind":"straight","i":1,"j":2,"colour":"G"},{"kind":"straight","i":1,"j":2,"colour":"R"}]}"#
            )
        );
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn parse_rejections() {
        let bad = [
            r#"{"palette":"bi","nodes":2,"edges":[{"kind":"loop","k":3,"colour":"R"}]}"#,
            r#"{"palette":"bi","nodes":2,"edges":[{"kind":"loop","k":1,"colour":"B"}]}"#,
            r#"{"palette":"tri","nodes":2,"edges":[{"kind":"straight","i":1,"j":2,"colour":"B"}]}"#,
            r#"{"palette":"bi","nodes":2,"edges":[{"kind":"straight","i":1,"j":1,"colour":"R"}]}"#,
            r#"{"palette":"quad","nodes":2,"edges":[]}"#,
            r#"{"palette":"bi","nodes":2}"#,
            r#"{"palette":"bi","nodes":2,"edges":[],"extra":1}"#,
            r#"{"palette":"bi","nodes":2,"edges":[{"kind":"loop","k":0,"colour":"R"}]}"#,
        ];
        for text in bad {
            assert!(graph_from_json(text).is_err(), "{text}");
        }
        let ok = r#"{"palette":"tri","nodes":0,"edges":[]}"#;
        assert_eq!(graph_from_json(ok).unwrap(), ColouredGraph::trichromatic(0));
    }

    #[test]
    fn report_round_trip() {
        let report = classify_components(&bipartite_graph(3, 1)).unwrap();
        let text = report_to_json(&report);
        assert_eq!(text, r#"{"components":[{"nodes":[4,1,2,3],"type":"Bipartite","params":[1,3]}]}"#);
        let back: Report<ComponentType> = report_from_json(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn kernel_form() {
        let g = crate::graphs::disjoint_union(&a_graph(2), &ColouredGraph::bichromatic(1)).unwrap();
        let k = kernel_basis(&g).unwrap();
        let p = orthogonal_projection(&g).unwrap();
        let text = kernel_to_json(&k, &p);
        assert!(text.starts_with(r#"{"parts":[[1,2],[3]],"vectors":[["1/2","1/2","0"],["0","0","1"]]"#));
        assert_eq!(kernel_from_json(&text).unwrap(), (k, p));
    }

    #[test]
    fn dot_form() {
        let dot = graph_to_dot(&crate::arrange::projectify(&b_graph(2)));
        assert_eq!(
            dot,
            "graph G {\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  1 -- 1 [color=blue];\n  2 -- 2 [color=blue];\n  1 -- 2 [color=green];\n  1 -- 2 [color=red];\n}\n"
        );
    }
}
