//! Hamilton paths in `R_k`, their color-word encodings, and the lift
//! through `M_k/π` to Hamilton cycles of `M_k`.

mod catalog;
mod hats;
mod lift;
mod search;
mod signature;

pub use catalog::{k6_catalog, Catalog, CatalogEntry, CatalogOptions, RecipeReport, Source};
pub use hats::{
    decode_cycle, decode_hats, decode_hats_all, HatOutcome, HatSequence, Strategy, KNOWN_HATS_K2,
    KNOWN_HATS_K3, KNOWN_HATS_K4, KNOWN_HATS_K5, KNOWN_K6_CYCLE_LINES, KNOWN_K6_REMOVALS,
};
pub use lift::{
    lift_path, lift_to_mk, lift_to_quotient, verify_hamilton, zeta_colors, LiftError, MkCycle,
    MkLift, QVertex, QuotientCycle, Violation,
};
pub use search::{find_hamilton_path, NeighborOrder, SearchOptions, SearchOutcome};
pub use signature::{cycle_signature, least_rotation, signature_hash};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lexical::{DeltaString, LexColor};
use crate::quotient::ReducedGraph;
use crate::tree::{phi, ASeq};

/// A simple path in `R_k`, optionally closed off by one loop at each end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RkPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub start_loop: Option<usize>,
    pub end_loop: Option<usize>,
}

impl RkPath {
    pub fn single(v: usize) -> Self {
        RkPath {
            vertices: vec![v],
            edges: Vec::new(),
            start_loop: None,
            end_loop: None,
        }
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn is_hamilton(&self, r: &ReducedGraph) -> bool {
        let mut seen = vec![false; r.vertex_count()];
        for &v in &self.vertices {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn without_loops(&self) -> RkPath {
        RkPath {
            start_loop: None,
            end_loop: None,
            ..self.clone()
        }
    }

    pub fn reversed(&self) -> RkPath {
        RkPath {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
            start_loop: self.end_loop,
            end_loop: self.start_loop,
        }
    }
}

/// A walk in `R_k` given by its start and the colors of successive edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorWord {
    pub k: usize,
    pub start: DeltaString,
    pub colors: Vec<LexColor>,
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let colors: String = self
            .colors
            .iter()
            .map(|c| char::from_digit(c.0 as u32, 36).unwrap_or('?'))
            .collect();
        write!(f, "{} {} {}", self.k, self.start, colors)
    }
}

impl FromStr for ColorWord {
    type Err = Error;

    /// `k start c1c2...cm`; the color field may be absent for an empty walk.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why| Error::InvalidSequence(s.to_string(), why);
        let mut parts = s.split_whitespace();
        let k: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad("expected k first"))?;
        let start: DeltaString = parts.next().ok_or_else(|| bad("missing start"))?.parse()?;
        if start.k() != k {
            return Err(bad("start vertex does not belong to R_k"));
        }
        let colors = parts
            .next()
            .unwrap_or("")
            .chars()
            .map(|c| match c.to_digit(36) {
                Some(d) if d as usize <= k => Ok(LexColor(d as u8)),
                _ => Err(bad("colors must lie in 0..=k")),
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.next().is_some() {
            return Err(bad("trailing fields"));
        }
        Ok(ColorWord { k, start, colors })
    }
}

pub fn vertex_of(r: &ReducedGraph, d: &DeltaString) -> Result<usize> {
    r.id_of(&d.necklace()?)
        .filter(|_| d.k() == r.k())
        .ok_or_else(|| Error::NotATreeNode(d.to_string()))
}

pub fn delta_of(r: &ReducedGraph, v: usize) -> DeltaString {
    crate::lexical::delta(&r.vertices()[v].necklace).expect("R_k vertices are lower necklaces")
}

/// `Φ(0…0)`, the class of `0(01)^k`.
pub fn phi_zero(k: usize) -> DeltaString {
    phi(&ASeq::new(vec![0; k]).expect("constant zero is valid"))
}

/// `Φ(01…k-1)`, the class of `0^{k+1}1^k`.
pub fn phi_one(k: usize) -> DeltaString {
    phi(&ASeq::new((0..k as u8).collect()).expect("identity staircase is valid"))
}

pub fn encode_colors(r: &ReducedGraph, p: &RkPath) -> ColorWord {
    let color = |e: usize| r.edges()[e].color;
    let colors = p
        .start_loop
        .iter()
        .chain(&p.edges)
        .chain(&p.end_loop)
        .map(|&e| color(e))
        .collect();
    ColorWord {
        k: r.k(),
        start: delta_of(r, p.start()),
        colors,
    }
}

/// Follows the unique edge of each color. Loops may only open or close the walk.
pub fn decode_colors(r: &ReducedGraph, cw: &ColorWord) -> Result<RkPath> {
    let start = vertex_of(r, &cw.start)?;
    walk(r, start, &cw.colors, true)
}

pub(crate) fn walk(r: &ReducedGraph, start: usize, colors: &[LexColor], loops_at_ends: bool) -> Result<RkPath> {
    let mut path = RkPath::single(start);
    let mut seen = vec![false; r.vertex_count()];
    seen[start] = true;
    let m = colors.len();
    for (step, &c) in colors.iter().enumerate() {
        let cur = path.end();
        let e = r.slot(cur, c).ok_or(Error::Walk {
            step,
            reason: "color outside the palette",
        })?;
        let edge = r.edges()[e];
        if edge.is_loop {
            if !loops_at_ends {
                return Err(Error::Walk { step, reason: "loop inside the walk" });
            }
            if step == 0 {
                path.start_loop = Some(e);
            } else if step == m - 1 && Some(e) == path.start_loop && path.edges.is_empty() {
                return Err(Error::Walk { step, reason: "repeats the previous edge" });
            } else if step == m - 1 {
                path.end_loop = Some(e);
            } else {
                return Err(Error::Walk { step, reason: "loop inside the walk" });
            }
            continue;
        }
        if path.edges.last() == Some(&e) {
            return Err(Error::Walk { step, reason: "repeats the previous edge" });
        }
        let next = edge.other(cur);
        if std::mem::replace(&mut seen[next], true) {
            return Err(Error::Walk { step, reason: "revisits a vertex" });
        }
        path.edges.push(e);
        path.vertices.push(next);
    }
    Ok(path)
}
