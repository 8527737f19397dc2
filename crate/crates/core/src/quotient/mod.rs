//! The middle-levels graph `M_k`, its quotient under cyclic rotation, and
//! the reduced graph `R_k` obtained by folding the quotient along ℵ.

mod feasible;

pub use feasible::{feasible_substrings, doubly_horizontal_witnesses};

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lexical::{flip_color, LexColor};
use crate::words::{necklaces, words_of_weight, BinaryWord, Necklace};

/// Largest `k` the builders accept unless a caller raises the bound.
pub const MAX_K: usize = 8;

pub fn check_capacity(k: usize, max: usize) -> Result<()> {
    if k == 0 || k > max {
        return Err(Error::Capacity { k, max });
    }
    Ok(())
}

pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(k: usize) -> usize {
    binomial(2 * k + 1, k) / (2 * k + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MkEdge {
    pub lower: usize,
    pub upper: usize,
    /// The bit position that differs.
    pub position: usize,
}

#[derive(Clone, Debug)]
pub struct MiddleLevelsGraph {
    k: usize,
    vertices: Vec<BinaryWord>,
    lower_count: usize,
    index: HashMap<BinaryWord, usize>,
    edges: Vec<MkEdge>,
    incident: Vec<Vec<usize>>,
}

impl MiddleLevelsGraph {
    pub fn build(k: usize) -> Result<Self> {
        Self::build_with_bound(k, MAX_K)
    }

    pub fn build_with_bound(k: usize, max: usize) -> Result<Self> {
        check_capacity(k, max)?;
        let n = 2 * k + 1;
        let mut vertices: Vec<BinaryWord> = words_of_weight(n, k).collect();
        vertices.sort();
        let lower_count = vertices.len();
        let mut upper: Vec<BinaryWord> = words_of_weight(n, k + 1).collect();
        upper.sort();
        vertices.extend(upper);
        let index: HashMap<BinaryWord, usize> =
            vertices.iter().enumerate().map(|(i, w)| (*w, i)).collect();

        let mut edges = Vec::with_capacity(lower_count * (k + 1));
        let mut incident = vec![Vec::with_capacity(k + 1); vertices.len()];
        for lower in 0..lower_count {
            let w = vertices[lower];
            for p in w.zero_positions().collect::<Vec<_>>() {
                let upper = index[&w.flip(p)];
                incident[lower].push(edges.len());
                incident[upper].push(edges.len());
                edges.push(MkEdge { lower, upper, position: p });
            }
        }
        Ok(MiddleLevelsGraph {
            k,
            vertices,
            lower_count,
            index,
            edges,
            incident,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Lower-level words first, each level in ascending order.
    pub fn vertices(&self) -> &[BinaryWord] {
        &self.vertices
    }

    pub fn lower_count(&self) -> usize {
        self.lower_count
    }

    pub fn vertex(&self, id: usize) -> BinaryWord {
        self.vertices[id]
    }

    pub fn index_of(&self, w: &BinaryWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn edges(&self) -> &[MkEdge] {
        &self.edges
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident[v].iter().map(move |&e| {
            let edge = self.edges[e];
            if edge.lower == v {
                edge.upper
            } else {
                edge.lower
            }
        })
    }

    pub fn is_edge(&self, a: &BinaryWord, b: &BinaryWord) -> bool {
        self.contains(a)
            && self.contains(b)
            && a.weight().abs_diff(b.weight()) == 1
            && (a.bits() ^ b.bits()).count_ones() == 1
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        self.index.contains_key(w)
    }

    pub fn edge_color(&self, e: usize) -> LexColor {
        let edge = self.edges[e];
        flip_color(&self.vertices[edge.lower], edge.position).expect("lower endpoint of an M_k edge")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Horizontal,
    Skew,
}

/// An edge of `M_k/π`, identified by its lower necklace and the zero of the
/// lower representative that it flips. Parallel horizontal edges are distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuotientEdge {
    pub lower: usize,
    pub upper: usize,
    pub position: usize,
    pub kind: EdgeKind,
    pub color: LexColor,
}

#[derive(Clone, Debug)]
pub struct QuotientGraph {
    k: usize,
    lower: Vec<Necklace>,
    upper: Vec<Necklace>,
    lower_index: HashMap<Necklace, usize>,
    upper_index: HashMap<Necklace, usize>,
    aleph: Vec<usize>,
    edges: Vec<QuotientEdge>,
    lower_edges: Vec<Vec<usize>>,
    upper_edges: Vec<Vec<usize>>,
}

impl QuotientGraph {
    pub fn build(k: usize) -> Result<Self> {
        Self::build_with_bound(k, MAX_K)
    }

    pub fn build_with_bound(k: usize, max: usize) -> Result<Self> {
        check_capacity(k, max)?;
        let n = 2 * k + 1;
        let lower = necklaces(n, k);
        let upper = necklaces(n, k + 1);
        let lower_index: HashMap<Necklace, usize> =
            lower.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let upper_index: HashMap<Necklace, usize> =
            upper.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let aleph: Vec<usize> = lower
            .iter()
            .map(|c| upper_index[&c.aleph_pi().expect("lower necklace")])
            .collect();

        let mut edges = Vec::with_capacity(lower.len() * (k + 1));
        let mut lower_edges = vec![Vec::with_capacity(k + 1); lower.len()];
        let mut upper_edges = vec![Vec::with_capacity(k + 1); upper.len()];
        for (li, c) in lower.iter().enumerate() {
            let rep = c.rep();
            for p in rep.zero_positions().collect::<Vec<_>>() {
                let ui = upper_index[&Necklace::of(&rep.flip(p))];
                let kind = if ui == aleph[li] {
                    EdgeKind::Horizontal
                } else {
                    EdgeKind::Skew
                };
                let color = flip_color(&rep, p)?;
                lower_edges[li].push(edges.len());
                upper_edges[ui].push(edges.len());
                edges.push(QuotientEdge {
                    lower: li,
                    upper: ui,
                    position: p,
                    kind,
                    color,
                });
            }
        }
        Ok(QuotientGraph {
            k,
            lower,
            upper,
            lower_index,
            upper_index,
            aleph,
            edges,
            lower_edges,
            upper_edges,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lower(&self) -> &[Necklace] {
        &self.lower
    }

    pub fn upper(&self) -> &[Necklace] {
        &self.upper
    }

    pub fn vertex_count(&self) -> usize {
        self.lower.len() + self.upper.len()
    }

    pub fn lower_id(&self, c: &Necklace) -> Option<usize> {
        self.lower_index.get(c).copied()
    }

    pub fn upper_id(&self, c: &Necklace) -> Option<usize> {
        self.upper_index.get(c).copied()
    }

    /// Upper id of ℵ_π of the given lower necklace.
    pub fn aleph_of(&self, lower: usize) -> usize {
        self.aleph[lower]
    }

    pub fn edges(&self) -> &[QuotientEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<&QuotientEdge> {
        self.edges
            .get(e)
            .ok_or_else(|| Error::UnknownEdge(format!("quotient edge #{e}")))
    }

    pub fn lower_edges(&self, lower: usize) -> &[usize] {
        &self.lower_edges[lower]
    }

    pub fn upper_edges(&self, upper: usize) -> &[usize] {
        &self.upper_edges[upper]
    }

    pub fn classify_edge(&self, e: usize) -> Result<EdgeKind> {
        Ok(self.edge(e)?.kind)
    }

    /// Classifies the edge between two necklaces given in either order.
    pub fn classify_pair(&self, a: &Necklace, b: &Necklace) -> Result<EdgeKind> {
        let ids = self.edges_between(a, b);
        match ids.first() {
            Some(&e) => Ok(self.edges[e].kind),
            None => Err(Error::UnknownEdge(format!("{a}–{b}"))),
        }
    }

    pub fn edges_between(&self, a: &Necklace, b: &Necklace) -> Vec<usize> {
        let (lo, up) = if a.weight() < b.weight() { (a, b) } else { (b, a) };
        match (self.lower_id(lo), self.upper_id(up)) {
            (Some(l), Some(u)) => self.lower_edges[l]
                .iter()
                .copied()
                .filter(|&e| self.edges[e].upper == u)
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn horizontal_multiplicity(&self, lower: usize) -> usize {
        self.lower_edges[lower]
            .iter()
            .filter(|&&e| self.edges[e].kind == EdgeKind::Horizontal)
            .count()
    }

    /// The quotient edge an `M_k` edge projects to.
    pub fn project(&self, lower: &BinaryWord, position: usize) -> Result<usize> {
        let c = Necklace::of(lower);
        let li = self
            .lower_id(&c)
            .ok_or_else(|| Error::UnknownEdge(format!("{lower} is not a lower vertex")))?;
        let n = lower.len();
        let s = c.shift_of(lower).expect("member of its own necklace");
        let p = (position + n - s) % n;
        self.edge_at(li, p)
            .ok_or_else(|| Error::UnknownEdge(format!("{lower} flipping b_{position}")))
    }

    fn edge_at(&self, lower: usize, position: usize) -> Option<usize> {
        self.lower_edges[lower]
            .iter()
            .copied()
            .find(|&e| self.edges[e].position == position)
    }

    /// The `n` edges of `M_k` lying over a quotient edge, as (lower, upper) words.
    pub fn fiber(&self, e: usize) -> Result<Vec<(BinaryWord, BinaryWord)>> {
        let edge = self.edge(e)?;
        let rep = self.lower[edge.lower].rep();
        let up = rep.flip(edge.position);
        Ok((0..rep.len() as i64)
            .map(|i| (rep.rotate(i), up.rotate(i)))
            .collect())
    }

    /// The skew edge obtained by reflecting `e` through ℵ.
    pub fn skew_mirror(&self, e: usize) -> Result<usize> {
        let edge = self.edge(e)?;
        if edge.kind == EdgeKind::Horizontal {
            return Err(Error::NotSkew(self.describe(e)));
        }
        let rep = self.lower[edge.lower].rep();
        let n = rep.len();
        let lower_word = rep.flip(edge.position).aleph();
        self.project(&lower_word, n - 1 - edge.position)
    }

    pub fn describe(&self, e: usize) -> String {
        let edge = &self.edges[e];
        format!(
            "{}–{} (b_{})",
            self.lower[edge.lower], self.upper[edge.upper], edge.position
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RkVertex {
    pub necklace: Necklace,
    pub mate: Necklace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RkEdge {
    pub u: usize,
    pub v: usize,
    pub color: LexColor,
    pub is_loop: bool,
    /// Quotient edges collapsed into this edge; both entries agree for loops.
    pub lifts: [usize; 2],
}

impl RkEdge {
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReducedGraph {
    k: usize,
    vertices: Vec<RkVertex>,
    index: HashMap<Necklace, usize>,
    edges: Vec<RkEdge>,
    slots: Vec<Vec<Option<usize>>>,
}

impl ReducedGraph {
    pub fn build(k: usize) -> Result<Self> {
        Self::from_quotient(&QuotientGraph::build(k)?)
    }

    pub fn from_quotient(q: &QuotientGraph) -> Result<Self> {
        let k = q.k();
        let vertices: Vec<RkVertex> = q
            .lower()
            .iter()
            .enumerate()
            .map(|(i, c)| RkVertex {
                necklace: *c,
                mate: q.upper()[q.aleph_of(i)],
            })
            .collect();
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.necklace, i))
            .collect();
        let mut edges = Vec::new();
        let mut slots = vec![vec![None; k + 1]; vertices.len()];
        let mut seen = vec![false; q.edges().len()];
        let mut claim = |v: usize, color: LexColor, id: usize| -> Result<()> {
            let slot = &mut slots[v][color.value()];
            if slot.is_some() {
                return Err(Error::UnknownEdge(format!(
                    "two R_k edges of color {color} at vertex #{v}"
                )));
            }
            *slot = Some(id);
            Ok(())
        };
        for (e, edge) in q.edges().iter().enumerate() {
            if seen[e] {
                continue;
            }
            seen[e] = true;
            let id = edges.len();
            match edge.kind {
                EdgeKind::Horizontal => {
                    claim(edge.lower, edge.color, id)?;
                    edges.push(RkEdge {
                        u: edge.lower,
                        v: edge.lower,
                        color: edge.color,
                        is_loop: true,
                        lifts: [e, e],
                    });
                }
                EdgeKind::Skew => {
                    let m = q.skew_mirror(e)?;
                    seen[m] = true;
                    let mirror = q.edges()[m];
                    claim(edge.lower, edge.color, id)?;
                    claim(mirror.lower, mirror.color, id)?;
                    edges.push(RkEdge {
                        u: edge.lower,
                        v: mirror.lower,
                        color: edge.color,
                        is_loop: false,
                        lifts: [e, m],
                    });
                }
            }
        }
        let slots = slots;
        Ok(ReducedGraph {
            k,
            vertices,
            index,
            edges,
            slots,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[RkVertex] {
        &self.vertices
    }

    pub fn id_of(&self, c: &Necklace) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn edges(&self) -> &[RkEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<&RkEdge> {
        self.edges
            .get(e)
            .ok_or_else(|| Error::UnknownEdge(format!("R_k edge #{e}")))
    }

    pub fn edge_color(&self, e: usize) -> Result<LexColor> {
        Ok(self.edge(e)?.color)
    }

    /// The edge of the given color at `v`, if the slot is filled.
    pub fn slot(&self, v: usize, color: LexColor) -> Option<usize> {
        self.slots.get(v)?.get(color.value()).copied().flatten()
    }

    /// Filled slots at `v` as (color, edge id).
    pub fn slots(&self, v: usize) -> impl Iterator<Item = (LexColor, usize)> + '_ {
        self.slots[v]
            .iter()
            .enumerate()
            .filter_map(|(c, e)| e.map(|e| (LexColor(c as u8), e)))
    }

    pub fn loops_at(&self, v: usize) -> Vec<LexColor> {
        self.slots(v)
            .filter(|&(_, e)| self.edges[e].is_loop)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop).count()
    }

    pub fn doubly_looped_count(&self) -> usize {
        (0..self.vertex_count())
            .filter(|&v| self.loops_at(v).len() >= 2)
            .count()
    }

    pub fn proper_edge_count(&self) -> usize {
        self.edges.len() - self.loop_count()
    }
}
