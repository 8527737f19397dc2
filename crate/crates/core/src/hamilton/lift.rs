use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use super::RkPath;
use crate::lexical::{delta_canonical_word, flip_color, neighbor_by_color, LexColor};
use crate::quotient::{MiddleLevelsGraph, QuotientGraph, ReducedGraph};
use crate::words::{BinaryWord, Necklace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("the path needs a loop at both ends")]
    MissingLoop,
    #[error("quotient walk breaks at step {step}, revisiting {vertex}")]
    QuotientBreak { step: usize, vertex: String },
    #[error("quotient walk does not close")]
    QuotientOpen,
    #[error("walk in M_k closes early after {length} of {expected} vertices")]
    EarlyClosure { length: usize, expected: usize },
    #[error("walk in M_k does not return to its start")]
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QVertex {
    Lower(usize),
    Upper(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCycle {
    pub vertices: Vec<QVertex>,
    pub edges: Vec<usize>,
    pub colors: Vec<LexColor>,
}

impl QuotientCycle {
    pub fn necklaces(&self, q: &QuotientGraph) -> Vec<Necklace> {
        self.vertices
            .iter()
            .map(|v| match *v {
                QVertex::Lower(i) => q.lower()[i],
                QVertex::Upper(i) => q.upper()[i],
            })
            .collect()
    }
}

/// A closed walk in `M_k`; the edge back to the first vertex is implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MkCycle {
    pub k: usize,
    pub vertices: Vec<BinaryWord>,
}

impl MkCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Color of the edge leaving each vertex.
    pub fn colors(&self) -> Vec<LexColor> {
        let m = self.vertices.len();
        (0..m)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % m]);
                let p = (a.bits() ^ b.bits()).trailing_zeros() as usize;
                let lower = if a.weight() < b.weight() { a } else { b };
                flip_color(&lower, p).expect("consecutive vertices are adjacent")
            })
            .collect()
    }

    /// The shift `t` with `v[i + block] = rotate(v[i], t)` for all `i`, if any.
    pub fn translation(&self, block: usize) -> Option<usize> {
        let m = self.vertices.len();
        if block == 0 || m % block != 0 {
            return None;
        }
        let n = self.vertices[0].len();
        let t = (0..n).find(|&t| self.vertices[0].rotate(t as i64) == self.vertices[block % m])?;
        (0..m)
            .all(|i| self.vertices[i].rotate(t as i64) == self.vertices[(i + block) % m])
            .then_some(t)
    }
}

impl fmt::Display for MkCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.vertices {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct MkLift {
    pub cycle: MkCycle,
    pub translation: usize,
    pub start_loop: LexColor,
    pub end_loop: LexColor,
    pub zeta: Vec<LexColor>,
}

/// `χ_1..χ_m, λ_end, χ_m..χ_1, λ_start` for a path with loop colors chosen.
pub fn zeta_colors(path_colors: &[LexColor], start_loop: LexColor, end_loop: LexColor) -> Vec<LexColor> {
    let mut z = Vec::with_capacity(2 * path_colors.len() + 2);
    z.extend_from_slice(path_colors);
    z.push(end_loop);
    z.extend(path_colors.iter().rev());
    z.push(start_loop);
    z
}

fn path_colors(r: &ReducedGraph, p: &RkPath) -> Vec<LexColor> {
    p.edges.iter().map(|&e| r.edges()[e].color).collect()
}

/// Pulls a looped Hamilton path of `R_k` back to a Hamilton cycle of `M_k/π`.
pub fn lift_to_quotient(q: &QuotientGraph, r: &ReducedGraph, p: &RkPath) -> Result<QuotientCycle, LiftError> {
    let (Some(sl), Some(el)) = (p.start_loop, p.end_loop) else {
        return Err(LiftError::MissingLoop);
    };
    let colors = zeta_colors(&path_colors(r, p), r.edges()[sl].color, r.edges()[el].color);
    quotient_walk(q, p.start(), &colors)
}

fn quotient_walk(q: &QuotientGraph, start: usize, colors: &[LexColor]) -> Result<QuotientCycle, LiftError> {
    let mut cur = QVertex::Lower(start);
    let mut seen = HashSet::new();
    let mut cycle = QuotientCycle {
        vertices: Vec::with_capacity(colors.len()),
        edges: Vec::with_capacity(colors.len()),
        colors: colors.to_vec(),
    };
    for (step, &c) in colors.iter().enumerate() {
        if !seen.insert(cur) {
            let name = cycle.necklaces(q)[cycle.vertices.iter().position(|&v| v == cur).unwrap()];
            return Err(LiftError::QuotientBreak {
                step,
                vertex: name.to_string(),
            });
        }
        cycle.vertices.push(cur);
        let (list, lower) = match cur {
            QVertex::Lower(i) => (q.lower_edges(i), true),
            QVertex::Upper(i) => (q.upper_edges(i), false),
        };
        let e = *list
            .iter()
            .find(|&&e| q.edges()[e].color == c)
            .expect("each quotient vertex sees every color");
        cycle.edges.push(e);
        let edge = q.edges()[e];
        cur = if lower {
            QVertex::Upper(edge.upper)
        } else {
            QVertex::Lower(edge.lower)
        };
    }
    if cur != QVertex::Lower(start) {
        return Err(LiftError::QuotientOpen);
    }
    Ok(cycle)
}

/// Follows the quotient cycle's colors in `M_k` from the δ-canonical word of
/// its start, repeating the color sequence until the walk closes.
pub fn lift_to_mk(q: &QuotientGraph, z: &QuotientCycle) -> Result<MkLift, LiftError> {
    let QVertex::Lower(start) = z.vertices[0] else {
        return Err(LiftError::Open);
    };
    let first = delta_canonical_word(&q.lower()[start]).expect("lower necklace");
    let n = first.len();
    let expected = n * z.colors.len();
    let mut seen = HashSet::with_capacity(expected);
    let mut vertices = Vec::with_capacity(expected);
    let mut w = first;
    for _ in 0..n {
        for &c in &z.colors {
            if !seen.insert(w) {
                return Err(LiftError::EarlyClosure {
                    length: vertices.len(),
                    expected,
                });
            }
            vertices.push(w);
            w = neighbor_by_color(&w, c).expect("every M_k vertex sees every color");
        }
        if w == first {
            break;
        }
    }
    if w != first {
        return Err(LiftError::Open);
    }
    if vertices.len() != expected {
        return Err(LiftError::EarlyClosure {
            length: vertices.len(),
            expected,
        });
    }
    let block = z.colors.len();
    let translation = (0..n)
        .find(|&t| first.rotate(t as i64) == vertices[block % vertices.len()])
        .unwrap_or(0);
    Ok(MkLift {
        cycle: MkCycle {
            k: q.k(),
            vertices,
        },
        translation,
        start_loop: *z.colors.last().unwrap(),
        end_loop: z.colors[block / 2 - 1],
        zeta: z.colors.clone(),
    })
}

/// Lifts a Hamilton path of `R_k`. Loops already on the path are used as
/// given; otherwise end loops are tried in ascending color and, within each,
/// start loops in descending color. Returns the first success or every failure.
pub fn lift_path(
    q: &QuotientGraph,
    r: &ReducedGraph,
    p: &RkPath,
) -> Result<MkLift, Vec<(LexColor, LexColor, LiftError)>> {
    let starts: Vec<LexColor> = match p.start_loop {
        Some(e) => vec![r.edges()[e].color],
        None => r.loops_at(p.start()).into_iter().rev().collect(),
    };
    let ends: Vec<LexColor> = match p.end_loop {
        Some(e) => vec![r.edges()[e].color],
        None => r.loops_at(p.end()),
    };
    let mut failures = Vec::new();
    if starts.is_empty() || ends.is_empty() {
        failures.push((LexColor(0), LexColor(0), LiftError::MissingLoop));
        return Err(failures);
    }
    let colors = path_colors(r, p);
    for &el in &ends {
        for &sl in &starts {
            let attempt = quotient_walk(q, p.start(), &zeta_colors(&colors, sl, el))
                .and_then(|z| lift_to_mk(q, &z));
            match attempt {
                Ok(l) => return Ok(l),
                Err(e) => failures.push((sl, el, e)),
            }
        }
    }
    Err(failures)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex #{index} ({word}) is not in M_k")]
    NotInGraph { index: usize, word: String },
    #[error("vertex #{index} ({word}) repeats")]
    Repeat { index: usize, word: String },
    #[error("{from} and {to} (#{index}) are not adjacent")]
    NonEdge { index: usize, from: String, to: String },
    #[error("the cycle visits {visited} of {expected} vertices")]
    Coverage { visited: usize, expected: usize },
}

pub fn verify_hamilton(g: &MiddleLevelsGraph, c: &MkCycle) -> Result<(), Violation> {
    let mut seen = vec![false; g.vertex_count()];
    for (index, w) in c.vertices.iter().enumerate() {
        let id = g.index_of(w).ok_or_else(|| Violation::NotInGraph {
            index,
            word: w.to_string(),
        })?;
        if std::mem::replace(&mut seen[id], true) {
            return Err(Violation::Repeat {
                index,
                word: w.to_string(),
            });
        }
    }
    let m = c.vertices.len();
    for index in 0..m {
        let (a, b) = (&c.vertices[index], &c.vertices[(index + 1) % m]);
        if !g.is_edge(a, b) {
            return Err(Violation::NonEdge {
                index,
                from: a.to_string(),
                to: b.to_string(),
            });
        }
    }
    if m != g.vertex_count() {
        return Err(Violation::Coverage {
            visited: m,
            expected: g.vertex_count(),
        });
    }
    Ok(())
}
