//! JSON, DOT and plain-text serializations.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::hamilton::{ColorWord, MkCycle};
use crate::lexical::LexColor;
use crate::quotient::{EdgeKind, MiddleLevelsGraph, QuotientGraph, ReducedGraph};
use crate::tree::{parent, tree_levels, Step};
use crate::words::{BinaryWord, Necklace};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct VertexRow {
    pub id: usize,
    pub rep: String,
    pub aleph_rep: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeRow {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
    pub color: LexColor,
    #[serde(rename = "loop")]
    pub is_loop: bool,
}

/// A graph flattened for export.
#[derive(Clone, Debug, Serialize)]
pub struct GraphExport {
    pub format: u32,
    pub k: usize,
    pub vertices: Vec<VertexRow>,
    pub edges: Vec<EdgeRow>,
}

fn aleph_class(c: &Necklace) -> Necklace {
    Necklace::of(&c.rep().aleph())
}

impl GraphExport {
    pub fn from_mk(g: &MiddleLevelsGraph) -> Self {
        let vertices = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, w)| VertexRow {
                id,
                rep: w.to_string(),
                aleph_rep: w.aleph().to_string(),
            })
            .collect();
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let (lo, up) = (g.vertex(edge.lower), g.vertex(edge.upper));
                let kind = if Necklace::of(&up) == Necklace::of(&lo.aleph()) {
                    EdgeKind::Horizontal
                } else {
                    EdgeKind::Skew
                };
                EdgeRow {
                    u: edge.lower,
                    v: edge.upper,
                    kind,
                    color: g.edge_color(e),
                    is_loop: false,
                }
            })
            .collect();
        GraphExport {
            format: FORMAT_VERSION,
            k: g.k(),
            vertices,
            edges,
        }
    }

    /// Lower classes take ids `0..L`, upper classes `L..2L`.
    pub fn from_quotient(q: &QuotientGraph) -> Self {
        let l = q.lower().len();
        let row = |id, c: &Necklace| VertexRow {
            id,
            rep: c.rep().to_string(),
            aleph_rep: aleph_class(c).rep().to_string(),
        };
        let vertices = q
            .lower()
            .iter()
            .enumerate()
            .map(|(i, c)| row(i, c))
            .chain(q.upper().iter().enumerate().map(|(i, c)| row(l + i, c)))
            .collect();
        let edges = q
            .edges()
            .iter()
            .map(|e| EdgeRow {
                u: e.lower,
                v: l + e.upper,
                kind: e.kind,
                color: e.color,
                is_loop: false,
            })
            .collect();
        GraphExport {
            format: FORMAT_VERSION,
            k: q.k(),
            vertices,
            edges,
        }
    }

    pub fn from_reduced(r: &ReducedGraph) -> Self {
        let vertices = r
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, v)| VertexRow {
                id,
                rep: v.necklace.rep().to_string(),
                aleph_rep: aleph_class(&v.necklace).rep().to_string(),
            })
            .collect();
        let edges = r
            .edges()
            .iter()
            .map(|e| EdgeRow {
                u: e.u,
                v: e.v,
                kind: if e.is_loop { EdgeKind::Horizontal } else { EdgeKind::Skew },
                color: e.color,
                is_loop: e.is_loop,
            })
            .collect();
        GraphExport {
            format: FORMAT_VERSION,
            k: r.k(),
            vertices,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph M{} {{\n", self.k);
        for v in &self.vertices {
            let _ = writeln!(s, "  v{} [label=\"{}\"];", v.id, v.rep);
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Horizontal => ", style=dashed",
                EdgeKind::Skew => "",
            };
            let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"{style}];", e.u, e.v, e.color.0);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("k={} vertices={} edges={}\n", self.k, self.vertices.len(), self.edges.len());
        for v in &self.vertices {
            let _ = writeln!(s, "{} {} {}", v.id, v.rep, v.aleph_rep);
        }
        for e in &self.edges {
            let _ = writeln!(s, "{} {} {:?} {}{}", e.u, e.v, e.kind, e.color.0, if e.is_loop { " loop" } else { "" });
        }
        s
    }
}

/// Levels of the lexical tree as `(level, δ, a, b)` rows.
pub fn tree_rows(depth: usize) -> Vec<serde_json::Value> {
    tree_levels(depth)
        .iter()
        .enumerate()
        .flat_map(|(level, nodes)| {
            nodes.iter().map(move |n| {
                json!({
                    "level": level,
                    "delta": n.delta.to_string(),
                    "a": n.aseq.to_string(),
                    "b": n.bseq.to_string(),
                })
            })
        })
        .collect()
}

pub fn tree_dot(depth: usize) -> String {
    let mut s = String::from("digraph T {\n");
    for nodes in tree_levels(depth) {
        for n in nodes {
            let name = n.delta.to_string();
            let _ = writeln!(s, "  \"{name}\";");
            if let Ok(Some((p, step))) = parent(&n.delta) {
                let side = match step {
                    Step::Left => "L",
                    Step::Right => "R",
                };
                let _ = writeln!(s, "  \"{p}\" -> \"{name}\" [label=\"{side}\"];");
            }
        }
    }
    s.push_str("}\n");
    s
}

pub fn cycle_to_text(c: &MkCycle) -> String {
    c.to_string()
}

pub fn cycle_from_text(s: &str) -> Result<MkCycle> {
    let vertices = s
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.parse::<BinaryWord>())
        .collect::<Result<Vec<_>>>()?;
    let first = vertices.first().ok_or(Error::BadLength(0))?;
    if first.len() % 2 == 0 {
        return Err(Error::BadLength(first.len()));
    }
    Ok(MkCycle {
        k: first.len() / 2,
        vertices,
    })
}

pub fn color_word_to_text(cw: &ColorWord) -> String {
    format!("{cw}\n")
}

pub fn color_word_from_text(s: &str) -> Result<ColorWord> {
    s.trim().parse()
}
